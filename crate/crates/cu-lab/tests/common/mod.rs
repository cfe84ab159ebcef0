//! Shared test helpers: independent oracles and isomorphism checking.
#![allow(dead_code)] // each test target uses its own slice of these

use cu_lab::model::{CuModel, Element};
use cu_lab::ChainDescriptor;

/// Way-below oracle from the chain definition: on the supported families,
/// `x ≪ y` holds exactly when the truncation chain of `y` (the canonical
/// hardest chain with supremum `y`) eventually dominates `x`.
pub fn way_below_oracle(model: &CuModel, x: &Element, y: &Element, depth: u64) -> bool {
    if model.is_finite() {
        // every increasing sequence stabilizes at its supremum
        return model.leq(x, y).unwrap();
    }
    for n in 0..=depth {
        let term = model.cap_at_level(y, n).unwrap();
        if model.leq(x, &term).unwrap() {
            return true;
        }
        if term == *y {
            break;
        }
    }
    false
}

/// Supremum oracle for a truncation family: pointwise eventual value,
/// computed by expanding terms until they stop changing.
pub fn truncation_sup_oracle(model: &CuModel, base: &Element, depth: u64) -> Option<Element> {
    let mut last = model.cap_at_level(base, 0).unwrap();
    for n in 1..=depth {
        let term = model.cap_at_level(base, n).unwrap();
        assert!(model.leq(&last, &term).unwrap(), "truncation family must increase");
        if term == last && term == *base {
            return Some(term);
        }
        last = term;
    }
    if last == *base {
        Some(last)
    } else {
        None
    }
}

/// Checks that `map` restricts to an isomorphism between the given sample
/// grids: a bijection preserving and reflecting order, preserving addition,
/// way-below, and infinite multiples.
pub fn check_isomorphism_on_grids(
    a: &CuModel,
    b: &CuModel,
    map: impl Fn(&Element) -> Element,
    grid_a: &[Element],
    grid_b: &[Element],
) {
    let images: Vec<Element> = grid_a.iter().map(&map). collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), grid_a.len(), "map must be injective on the grid");
    let mut expected = grid_b.to_vec();
    expected.sort();
    assert_eq!(sorted, expected, "map must cover the target grid");

    for (x, fx) in grid_a.iter().zip(&images) {
        for (y, fy) in grid_a.iter().zip(&images) {
            assert_eq!(
                a.leq(x, y).unwrap(),
                b.leq(fx, fy).unwrap(),
                "order must be preserved and reflected"
            );
            assert_eq!(
                a.way_below(x, y).unwrap(),
                b.way_below(fx, fy).unwrap(),
                "way-below must be preserved and reflected"
            );
            let sum = a.add(x, y).unwrap();
            let sum_image = b.add(fx, fy).unwrap();
            assert_eq!(map(&sum), sum_image, "addition must be preserved");
        }
        assert_eq!(
            map(&a.omega_multiple(x).unwrap()),
            b.omega_multiple(fx).unwrap(),
            "infinite multiples must be preserved"
        );
    }
}

/// Expands the first terms of a described chain.
pub fn chain_prefix(model: &CuModel, chain: &ChainDescriptor, len: u64) -> Vec<Element> {
    (0..len).map(|n| model.chain_term(chain, n).unwrap()).collect()
}
