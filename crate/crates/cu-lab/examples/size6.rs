fn main() {
    for n in 4..=6 {
        let t = std::time::Instant::now();
        let models = cu_lab::search::enumerate_models(n);
        println!("n={n}: {} models in {:?}", models.len(), t.elapsed());
    }
}
