//! The shipped model corpus: the elementary family, the two-element
//! idempotent model, nbar, small lsc models, and two products.

use crate::model::CuModel;
use crate::space::Space;

/// The two-element idempotent model `{0, ∞}` as an explicit table.
pub fn zero_inf() -> CuModel {
    CuModel::finite_table(
        vec!["0".into(), "inf".into()],
        vec![vec![true, true], vec![false, true]],
        vec![vec![0, 1], vec![1, 1]],
    )
    .expect("valid table")
}

/// The one-element model `{0}`.
pub fn trivial() -> CuModel {
    CuModel::finite_table(vec!["0".into()], vec![vec![true]], vec![vec![0]]).expect("valid table")
}

pub fn point_space() -> Space {
    Space::new(vec!["p".into()], vec![vec![true]]).expect("valid space")
}

/// Sierpiński space: closed point `v` below open point `u`.
pub fn sierpinski_space() -> Space {
    Space::new(
        vec!["u".into(), "v".into()],
        vec![vec![true, false], vec![true, true]],
    )
    .expect("valid space")
}

pub fn discrete_space(n: usize) -> Space {
    let names = (0..n).map(|i| format!("p{i}")).collect();
    let leq = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    Space::new(names, leq).expect("valid space")
}

/// All corpus models with stable names.
pub fn all() -> Vec<(String, CuModel)> {
    vec![
        ("e1".into(), CuModel::elementary(1)),
        ("e2".into(), CuModel::elementary(2)),
        ("e3".into(), CuModel::elementary(3)),
        ("e4".into(), CuModel::elementary(4)),
        ("zero-inf".into(), zero_inf()),
        ("nbar".into(), CuModel::nbar()),
        ("lsc-point".into(), CuModel::lsc(point_space())),
        ("lsc-sierpinski".into(), CuModel::lsc(sierpinski_space())),
        ("lsc-discrete2".into(), CuModel::lsc(discrete_space(2))),
        (
            "nbar-x-e2".into(),
            CuModel::product(CuModel::nbar(), CuModel::elementary(2)),
        ),
        (
            "nbar-x-nbar".into(),
            CuModel::product(CuModel::nbar(), CuModel::nbar()),
        ),
    ]
}
