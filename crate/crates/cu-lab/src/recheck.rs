//! Independent re-verification of witnesses and certificates against the
//! raw definitions.
//!
//! These checkers share no code with the search procedures that produced
//! the evidence: each one re-evaluates the defining relations directly
//! through the model's kernel operations (order, addition, way-below,
//! infinite multiples). A proven witness that fails its checker, or a
//! refutation certificate that fails to violate the definition, is a bug
//! in the producing procedure, and the verification harness treats either
//! as a violation.

use crate::error::CuResult;
use crate::model::{ChainDescriptor, CuModel, Element};
use crate::Budget;

/// `x' + t ≪ x` and `x' ≪ ∞t`.
pub fn strong_witness(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    t: &Element,
) -> CuResult<bool> {
    let sum = model.add(x_prime, t)?;
    Ok(model.way_below(&sum, x)? && model.way_below(x_prime, &model.omega_multiple(t)?)?)
}

/// `x' + t ≤ x` and `x' ≤ ∞t` (the relaxed characterization form).
pub fn strong_witness_relaxed(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    t: &Element,
) -> CuResult<bool> {
    let sum = model.add(x_prime, t)?;
    Ok(model.leq(&sum, x)? && model.leq(x_prime, &model.omega_multiple(t)?)?)
}

/// A weak-softness tuple: `x' + t_j ≪ x` for every `j` and
/// `x' ≪ t_1 + … + t_n`.
pub fn weak_witness(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    tuple: &[Element],
) -> CuResult<bool> {
    if tuple.is_empty() {
        return Ok(false);
    }
    let mut total = model.zero();
    for t in tuple {
        let sum = model.add(x_prime, t)?;
        if !model.way_below(&sum, x)? {
            return Ok(false);
        }
        total = model.add(&total, t)?;
    }
    model.way_below(x_prime, &total)
}

/// `(n+1)·x' ≪ n·x`.
pub fn functional_witness(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    n: u64,
) -> CuResult<bool> {
    model.way_below(&model.mul(n + 1, x_prime)?, &model.mul(n, x)?)
}

/// A 2-splitting of the pair: `y + z ≤ x` and `x' ⊲ y, z`.
pub fn splitting_pair(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    y: &Element,
    z: &Element,
) -> CuResult<bool> {
    Ok(model.leq(&model.add(y, z)?, x)?
        && model.leq(x_prime, &model.omega_multiple(y)?)?
        && model.leq(x_prime, &model.omega_multiple(z)?)?)
}

/// The strengthened splitting: `y + z ≤ x`, `x' ⊲ y`, and `x ⊲ z`.
pub fn generating_split(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    y: &Element,
    z: &Element,
) -> CuResult<bool> {
    Ok(model.leq(&model.add(y, z)?, x)?
        && model.leq(x_prime, &model.omega_multiple(y)?)?
        && model.leq(x, &model.omega_multiple(z)?)?)
}

/// Is `y` strongly soft, checked by a direct sweep over the raw
/// definition (compact elements use idempotence, which is the definition's
/// closed form on compacts)?
pub fn strongly_soft(model: &CuModel, y: &Element, budget: &Budget) -> CuResult<bool> {
    if model.is_compact(y)? {
        return Ok(model.add(y, y)? == *y);
    }
    let grid = match model.carrier() {
        Some(c) => c,
        None => model.grid(budget.existential as u64),
    };
    let terms = match model.carrier() {
        Some(carrier) => {
            let mut out = Vec::new();
            for c in carrier {
                if model.way_below(&c, y)? {
                    out.push(c);
                }
            }
            out
        }
        None => model.basis_terms(y, budget.basis_depth)?,
    };
    for yp in terms {
        let mut hit = false;
        for t in &grid {
            if strong_witness(model, &yp, y, t)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A soft full divisor: `y ≤ x ≤ ∞y` with `y` strongly soft.
pub fn dominator(model: &CuModel, x: &Element, y: &Element, budget: &Budget) -> CuResult<bool> {
    Ok(model.leq(y, x)?
        && model.leq(x, &model.omega_multiple(y)?)?
        && strongly_soft(model, y, budget)?)
}

/// A soft `k`-divisor: `k·y ≤ x ≤ ∞y` with `y` strongly soft.
pub fn soft_divisor(
    model: &CuModel,
    x: &Element,
    y: &Element,
    k: u64,
    budget: &Budget,
) -> CuResult<bool> {
    Ok(model.leq(&model.mul(k, y)?, x)?
        && model.leq(x, &model.omega_multiple(y)?)?
        && strongly_soft(model, y, budget)?)
}

/// The refinement `x' ⊲ y' ≪ y`.
pub fn lhd_below(
    model: &CuModel,
    x_prime: &Element,
    y: &Element,
    y_refined: &Element,
) -> CuResult<bool> {
    Ok(model.way_below(y_refined, y)?
        && model.leq(x_prime, &model.omega_multiple(y_refined)?)?)
}

/// The interpolation `z ≤ y` with `x' ⊲ z ⊲ x`.
pub fn lhd_through(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    y: &Element,
    z: &Element,
) -> CuResult<bool> {
    Ok(model.leq(z, y)?
        && model.leq(x_prime, &model.omega_multiple(z)?)?
        && model.leq(z, &model.omega_multiple(x)?)?)
}

/// A divisor sequence for a chain with supremum `x`: the scaled total
/// `Σ k·y_n` stays below `x`, consecutive summands dominate each other's
/// ideals, and the tail generates an ideal containing `x`.
pub fn divisor_sequence(
    model: &CuModel,
    k: u64,
    x: &Element,
    summands: &ChainDescriptor,
) -> CuResult<bool> {
    let list = match summands {
        ChainDescriptor::Stabilizing(list) if !list.is_empty() => list,
        _ => return Ok(false),
    };
    let mut scaled = model.zero();
    for y in &list[..list.len() - 1] {
        scaled = model.add(&scaled, &model.mul(k, y)?)?;
    }
    let tail = model.omega_multiple(&model.mul(k, list.last().unwrap())?)?;
    scaled = model.add(&scaled, &tail)?;
    if !model.leq(&scaled, x)? {
        return Ok(false);
    }
    for pair in list.windows(2) {
        if !model.way_below(&pair[0], &model.omega_multiple(&pair[1])?)? {
            return Ok(false);
        }
    }
    model.leq(x, &model.omega_multiple(list.last().unwrap())?)
}

/// An interpolated soft element: `x' ≪ y ≪ x` with `y` strongly soft.
pub fn soft_between(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    y: &Element,
    budget: &Budget,
) -> CuResult<bool> {
    Ok(model.way_below(x_prime, y)?
        && model.way_below(y, x)?
        && strongly_soft(model, y, budget)?)
}
