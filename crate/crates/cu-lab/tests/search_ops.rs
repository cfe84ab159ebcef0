//! Enumeration against a naive generate-and-filter oracle with its own
//! orbit-based isomorphism rejection, plus hunt behavior.

mod common;

use std::collections::BTreeSet;

use cu_lab::model::{CuModel, FiniteTable};
use cu_lab::search::{canonical_form, enumerate_models, hunt, SearchSpec};
use cu_lab::structure::validate_model;
use cu_lab::Budget;

/// Every labeled lawful table of size n, by raw generation and filtering.
#[allow(clippy::needless_range_loop)] // matrix coordinates
fn naive_tables(n: usize) -> Vec<FiniteTable> {
    let names: Vec<String> = (0..n)
        .map(|i| if i == 0 { "0".into() } else { format!("x{i}") })
        .collect();
    // all reflexive relations with 0 least on the nonzero part
    let mut free_pairs = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i != j {
                free_pairs.push((i, j));
            }
        }
    }
    let mut entries = Vec::new();
    for i in 1..n {
        for j in i..n {
            entries.push((i, j));
        }
    }
    let mut out = Vec::new();
    for order_bits in 0u64..(1 << free_pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for j in 0..n {
            leq[0][j] = true;
        }
        for (b, &(i, j)) in free_pairs.iter().enumerate() {
            if order_bits >> b & 1 == 1 {
                leq[i][j] = true;
            }
        }
        let mut add_choice = vec![0usize; entries.len()];
        loop {
            let mut add = vec![vec![0usize; n]; n];
            for j in 0..n {
                add[0][j] = j;
                add[j][0] = j;
            }
            for (e, &(i, j)) in entries.iter().enumerate() {
                add[i][j] = add_choice[e];
                add[j][i] = add_choice[e];
            }
            let table = FiniteTable { names: names.clone(), leq: leq.clone(), add };
            if table.violations().is_empty() {
                out.push(table);
            }
            // odometer over the addition entries
            let mut k = 0;
            loop {
                if k == add_choice.len() {
                    break;
                }
                add_choice[k] += 1;
                if add_choice[k] < n {
                    break;
                }
                add_choice[k] = 0;
                k += 1;
            }
            if k == add_choice.len() {
                break;
            }
        }
    }
    out
}

/// Orbit-based dedup, independent of the canonical-form code: two tables
/// are isomorphic when some permutation fixing 0 carries one onto the
/// other.
fn orbit_count(tables: &[FiniteTable]) -> usize {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        fn go(current: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(current.clone());
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                current.push(v);
                go(current, rest, out);
                current.pop();
                rest.insert(i, v);
            }
        }
        let mut out = Vec::new();
        let mut rest: Vec<usize> = (1..n).collect();
        go(&mut vec![0], &mut rest, &mut out);
        out
    }
    fn apply(table: &FiniteTable, perm: &[usize]) -> (Vec<bool>, Vec<usize>) {
        let n = perm.len();
        let mut position = vec![0usize; n];
        for (new_idx, &old) in perm.iter().enumerate() {
            position[old] = new_idx;
        }
        let mut leq = Vec::new();
        let mut add = Vec::new();
        for &i in perm {
            for &j in perm {
                leq.push(table.leq[i][j]);
                add.push(position[table.add[i][j]]);
            }
        }
        (leq, add)
    }
    let n = if tables.is_empty() { 0 } else { tables[0].size() };
    let all_perms = perms(n);
    let mut orbit_reps: BTreeSet<(Vec<bool>, Vec<usize>)> = BTreeSet::new();
    for table in tables {
        let orbit_min = all_perms
            .iter()
            .map(|p| apply(table, p))
            .min()
            .expect("nonempty permutation set");
        orbit_reps.insert(orbit_min);
    }
    orbit_reps.len()
}

#[test]
fn enumeration_counts_match_the_naive_oracle() {
    for n in 1..=3 {
        let naive = naive_tables(n);
        let expected = orbit_count(&naive);
        let enumerated = enumerate_models(n);
        assert_eq!(enumerated.len(), expected, "count at size {n}");
        // and the canonical-form sets agree
        let mut enumerated_keys: Vec<_> = enumerated
            .iter()
            .map(|m| canonical_form(m).unwrap())
            .collect();
        enumerated_keys.sort();
        let mut naive_keys: Vec<_> = naive
            .iter()
            .map(|t| canonical_form(&CuModel::finite_table_unchecked(t.clone())).unwrap())
            .collect();
        naive_keys.sort();
        naive_keys.dedup();
        assert_eq!(enumerated_keys, naive_keys, "canonical sets at size {n}");
    }
}

#[test]
fn size_two_count_is_one() {
    assert_eq!(enumerate_models(2).len(), 1);
}

#[test]
fn enumerated_streams_are_valid_and_duplicate_free() {
    for n in 1..=4 {
        let models = enumerate_models(n);
        let mut keys = BTreeSet::new();
        for m in &models {
            assert!(validate_model(m).is_clean());
            assert!(keys.insert(canonical_form(m).unwrap()), "duplicate at size {n}");
        }
    }
}

#[test]
fn hunt_results_revalidate_and_reevaluate() {
    let spec = SearchSpec {
        max_size: 4,
        required_axioms: vec!["O5".into(), "O6".into(), "O7".into()],
        target: "ideal_filtered and not two_omega_divisible".into(),
        limit: Some(5),
    };
    let budget = Budget::default();
    let hits = hunt(&spec, &budget).unwrap();
    assert!(!hits.is_empty());
    assert!(hits.len() <= 5);
    let expr = cu_lab::search::parse_target(&spec.target).unwrap();
    for hit in &hits {
        assert!(validate_model(&hit.model).is_clean());
        assert!(cu_lab::search::eval_target(&expr, &hit.analysis, &hit.model).unwrap());
    }
}

#[test]
fn hunt_with_limit_truncates_deterministically() {
    let spec_all = SearchSpec {
        max_size: 4,
        required_axioms: vec![],
        target: "true".into(),
        limit: None,
    };
    let spec_limited = SearchSpec { limit: Some(3), ..spec_all.clone() };
    let budget = Budget::default();
    let all = hunt(&spec_all, &budget).unwrap();
    let limited = hunt(&spec_limited, &budget).unwrap();
    assert_eq!(limited.len(), 3);
    for (a, b) in limited.iter().zip(all.iter()) {
        assert_eq!(
            canonical_form(&a.model).unwrap(),
            canonical_form(&b.model).unwrap()
        );
    }
}

#[test]
fn divisibility_gap_needs_dropping_o5() {
    // under O5-O7 the conjunction below contradicts full divisibility on
    // no model at these sizes
    let budget = Budget::default();
    let strict = SearchSpec {
        max_size: 5,
        required_axioms: vec!["O5".into(), "O6".into(), "O7".into()],
        target: "weakly_divisible ∧ ideal_filtered ∧ property_v ∧ ¬two_omega_divisible".into(),
        limit: None,
    };
    assert!(hunt(&strict, &budget).unwrap().is_empty());

    // dropping O5 exposes a separating model of size 5
    let loose = SearchSpec { required_axioms: vec![], ..strict };
    let hits = hunt(&loose, &budget).unwrap();
    assert!(!hits.is_empty());
    assert!(hits.iter().all(|h| h.size == 5));
    for hit in &hits {
        let axioms = cu_lab::structure::check_axioms(&hit.model, &budget).unwrap();
        assert!(axioms.o5.is_refuted(), "every separating model must break O5");
    }
}

use proptest::prelude::*;

proptest! {
    #[test]
    fn canonical_form_survives_random_relabeling(
        idx in 0usize..9,
        seed in proptest::collection::vec(0usize..24, 3),
    ) {
        let models = enumerate_models(4);
        let model = &models[idx % models.len()];
        let t = model.to_finite_table().unwrap();
        let n = t.size();
        // derive a permutation fixing zero from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        for (i, s) in seed.iter().enumerate() {
            let a = 1 + (i % (n - 1));
            let b = 1 + (s % (n - 1));
            perm.swap(a, b);
        }
        let mut inv = vec![0usize; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let leq = (0..n)
            .map(|i| (0..n).map(|j| t.leq[perm[i]][perm[j]]).collect())
            .collect();
        let add = (0..n)
            .map(|i| (0..n).map(|j| inv[t.add[perm[i]][perm[j]]]).collect())
            .collect();
        let relabeled = CuModel::finite_table_unchecked(FiniteTable {
            names: t.names.clone(),
            leq,
            add,
        });
        prop_assert!(validate_model(&relabeled).is_clean());
        prop_assert_eq!(
            canonical_form(&relabeled).unwrap(),
            canonical_form(model).unwrap()
        );
    }

    #[test]
    fn enumerated_models_roundtrip_through_the_file_format(idx in 0usize..60) {
        let models = enumerate_models(4);
        let model = &models[idx % models.len()];
        let text = cu_lab::format::serialize_model(model);
        let (reparsed, _) = cu_lab::format::parse_model(&text).unwrap();
        prop_assert_eq!(&reparsed, model);
    }
}
