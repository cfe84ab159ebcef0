//! Glimm-layer facts across the corpus and small enumerated models: the
//! predicate implications, the equivalence-theorem agreements, and the
//! constructive witnesses under their preconditions.

mod common;

use cu_lab::corpus;
use cu_lab::glimm::{has_2_splitting, k_div_seq, soft_dominator};
use cu_lab::harness;
use cu_lab::model::CuModel;
use cu_lab::recheck;
use cu_lab::structure::{check_axioms, Scale};
use cu_lab::{Budget, ChainDescriptor};

#[test]
fn glimm_implications_hold_on_the_corpus() {
    let budget = Budget::default();
    for (name, model) in corpus::all() {
        let scale = Scale::full(&model);
        let violations = harness::check_glimm_implications(&model, &scale, &budget).unwrap();
        assert!(violations.is_empty(), "{name}: {violations:?}");
    }
}

#[test]
fn constructions_reverify_on_the_corpus() {
    let budget = Budget::default();
    for (name, model) in corpus::all() {
        let scale = Scale::full(&model);
        let violations = harness::check_constructions(&model, &scale, &budget).unwrap();
        assert!(violations.is_empty(), "{name}: {violations:?}");
    }
}

/// The powerset of a two-point set under union: a four-element
/// join-semilattice, all of whose elements are idempotent.
fn powerset_join_model() -> CuModel {
    // 0 = {}, a = {1}, b = {2}, c = {1,2}
    let names = vec!["0".into(), "a".into(), "b".into(), "c".into()];
    let leq = vec![
        vec![true, true, true, true],
        vec![false, true, false, true],
        vec![false, false, true, true],
        vec![false, false, false, true],
    ];
    let add = vec![
        vec![0, 1, 2, 3],
        vec![1, 1, 3, 3],
        vec![2, 3, 2, 3],
        vec![3, 3, 3, 3],
    ];
    CuModel::finite_table(names, leq, add).unwrap()
}

#[test]
fn join_semilattice_divisor_sequence_is_the_top() {
    let budget = Budget::default();
    let m = powerset_join_model();
    let axioms = check_axioms(&m, &budget).unwrap();
    assert!(axioms.all_proven());
    let two = cu_lab::glimm::classify_divisibility(&m, &Scale::full(&m), &budget)
        .unwrap()
        .two_omega_divisible;
    assert!(two.is_proven(), "an idempotent model is divisible");
    let top = m.element_of_index(3).unwrap();
    let chain = ChainDescriptor::Stabilizing(vec![top.clone()]);
    let seq = k_div_seq(&m, 3, &chain, &axioms, &two, &budget).unwrap();
    assert!(seq.verdict.is_proven());
    match seq.summands.unwrap() {
        ChainDescriptor::Stabilizing(list) => {
            assert!(list.iter().all(|y| *y == top), "every summand is the top");
        }
        _ => panic!("expected a stabilizing descriptor"),
    }
}

#[test]
fn join_semilattice_dominators_are_the_elements_themselves() {
    let budget = Budget::default();
    let m = powerset_join_model();
    let scale = Scale::full(&m);
    let axioms = check_axioms(&m, &budget).unwrap();
    let splitting = has_2_splitting(&m, &scale, &budget).unwrap();
    assert!(splitting.is_proven());
    for x in m.carrier().unwrap() {
        let v = soft_dominator(&m, &scale, &x, &axioms, &splitting, &budget).unwrap();
        assert!(v.is_proven());
        let y = &v.witness[0].1;
        assert!(recheck::dominator(&m, &x, y, &budget).unwrap());
        // in an idempotent model the least soft dominator is x itself
        assert_eq!(*y, x);
    }
}

#[test]
fn enumerated_models_pass_the_glimm_checks() {
    let budget = Budget::default();
    for n in 1..=4 {
        for model in cu_lab::search::enumerate_models(n) {
            let scale = Scale::full(&model);
            let violations =
                harness::check_glimm_implications(&model, &scale, &budget).unwrap();
            assert!(
                violations.is_empty(),
                "size {n} model {}: {violations:?}",
                cu_lab::format::serialize_model(&model)
            );
        }
    }
}
