//! Softness and noncompactness predicates, witness construction, the soft
//! submonoid, and softness preservation along quotient maps.
//!
//! Five graded predicates are decided per element:
//!
//! * strongly soft — every `x' ≪ x` admits `t` with `x' + t ≪ x` and
//!   `x' ≪ ∞t`;
//! * weakly soft — a finite tuple `t_1, …, t_n` may share the job:
//!   `x' + t_j ≪ x` for each `j` and `x' ≪ t_1 + … + t_n`;
//! * functionally soft — every `x' ≪ x` admits `n ≥ 1` with
//!   `(n+1)x' ≪ nx`;
//! * purely noncompact — in every quotient where the image of `x` is
//!   compact, the image is additively idempotent;
//! * weakly purely noncompact — ditto, with `(n+1)x_I = nx_I` instead.
//!
//! Compact elements get the exact closed forms (strong/weak softness and
//! pure noncompactness collapse to `2x = x`; the functional and weak
//! noncompact variants collapse to eventual stabilization of the multiples
//! `nx`). Everything else is swept: exhaustively over finite carriers,
//! over canonical basis-chain terms on infinite models. The basis-chain
//! reduction is sound because each predicate body is downward-monotone in
//! `x'` and the chain is cofinal in `{x' : x' ≪ x}`.

use std::collections::HashMap;

use crate::error::{CuError, CuResult};
use crate::model::{ChainDescriptor, CuModel, Element};
use crate::structure::{enumerate_ideals, quotient, QuotientMap, Scale};
use crate::verdict::Verdict;
use crate::Budget;

/// Per-element bundle of the five predicate verdicts.
#[derive(Clone, Debug)]
pub struct SoftnessReport {
    pub strongly_soft: Verdict,
    pub weakly_soft: Verdict,
    pub functionally_soft: Verdict,
    pub purely_noncompact: Verdict,
    pub weakly_purely_noncompact: Verdict,
}

impl SoftnessReport {
    pub fn flags(&self) -> [(&'static str, &Verdict); 5] {
        [
            ("strongly_soft", &self.strongly_soft),
            ("weakly_soft", &self.weakly_soft),
            ("functionally_soft", &self.functionally_soft),
            ("purely_noncompact", &self.purely_noncompact),
            ("weakly_purely_noncompact", &self.weakly_purely_noncompact),
        ]
    }
}

/// The sweep domain for `x' ≪ x`: the whole carrier on finite models,
/// the basis-chain terms up to the budgeted depth otherwise.
fn below_terms(model: &CuModel, x: &Element, budget: &Budget) -> CuResult<Vec<Element>> {
    match model.carrier() {
        Some(carrier) => {
            let mut out = Vec::new();
            for c in carrier {
                if model.way_below(&c, x)? {
                    out.push(c);
                }
            }
            Ok(out)
        }
        None => model.basis_terms(x, budget.basis_depth),
    }
}

fn witness_grid(model: &CuModel, budget: &Budget) -> Vec<Element> {
    match model.carrier() {
        Some(carrier) => carrier,
        None => model.grid(budget.existential as u64),
    }
}

/// Definitional sweep for strong softness (no compact shortcut).
pub fn sweep_strongly_soft(model: &CuModel, x: &Element, budget: &Budget) -> CuResult<Verdict> {
    let grid = witness_grid(model, budget);
    let mut witness = Vec::new();
    for term in below_terms(model, x, budget)? {
        match least_strong_witness(model, &term, x, &grid)? {
            Some(t) => {
                witness = vec![("x'".into(), term), ("t".into(), t)];
            }
            None => {
                return Ok(if model.is_finite() {
                    Verdict::refuted_with(vec![("x'".into(), term)])
                } else {
                    Verdict::unknown(format!(
                        "no t in the value grid works for x' = {}",
                        model.format_element(&term)
                    ))
                });
            }
        }
    }
    Ok(Verdict::proven_with(witness))
}

fn least_strong_witness(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    grid: &[Element],
) -> CuResult<Option<Element>> {
    for t in grid {
        let sum = model.add(x_prime, t)?;
        if model.way_below(&sum, x)? && model.way_below(x_prime, &model.omega_multiple(t)?)? {
            return Ok(Some(t.clone()));
        }
    }
    Ok(None)
}

/// Definitional sweep for weak softness. The tuple search runs as a
/// reachability closure: sums of elements of `T = {t : x' + t ≪ x}` are
/// grown breadth-first until one dominates `x'` or the budget is out.
pub fn sweep_weakly_soft(model: &CuModel, x: &Element, budget: &Budget) -> CuResult<Verdict> {
    let grid = witness_grid(model, budget);
    let rounds = match model.carrier_len() {
        Some(n) => n,
        None => budget.existential as usize,
    };
    let mut witness = Vec::new();
    for term in below_terms(model, x, budget)? {
        match weak_tuple(model, &term, x, &grid, rounds)? {
            Some(tuple) => {
                witness = vec![("x'".into(), term)];
                for (i, t) in tuple.into_iter().enumerate() {
                    witness.push((format!("t{}", i + 1), t));
                }
            }
            None => {
                return Ok(if model.is_finite() {
                    Verdict::refuted_with(vec![("x'".into(), term)])
                } else {
                    Verdict::unknown(format!(
                        "no tuple over the value grid works for x' = {}",
                        model.format_element(&term)
                    ))
                });
            }
        }
    }
    Ok(Verdict::proven_with(witness))
}

fn weak_tuple(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    grid: &[Element],
    rounds: usize,
) -> CuResult<Option<Vec<Element>>> {
    let mut admissible = Vec::new();
    for t in grid {
        let sum = model.add(x_prime, t)?;
        if model.way_below(&sum, x)? {
            admissible.push(t.clone());
        }
    }
    if admissible.is_empty() {
        return Ok(None);
    }
    // parent links: sum -> (previous sum, admissible element added)
    let mut parent: HashMap<Element, (Option<Element>, Element)> = HashMap::new();
    let mut frontier: Vec<Element> = Vec::new();
    for t in &admissible {
        if !parent.contains_key(t) {
            parent.insert(t.clone(), (None, t.clone()));
            frontier.push(t.clone());
        }
    }
    const SUM_CAP: usize = 4096;
    for _ in 0..rounds {
        for s in &frontier {
            if model.way_below(x_prime, s)? {
                let mut tuple = Vec::new();
                let mut cursor = Some(s.clone());
                while let Some(cur) = cursor {
                    let (prev, added) = parent[&cur].clone();
                    tuple.push(added);
                    cursor = prev;
                }
                tuple.reverse();
                return Ok(Some(tuple));
            }
        }
        let mut next = Vec::new();
        for s in &frontier {
            for t in &admissible {
                let sum = model.add(s, t)?;
                if !parent.contains_key(&sum) {
                    parent.insert(sum.clone(), (Some(s.clone()), t.clone()));
                    next.push(sum);
                }
            }
        }
        if next.is_empty() || parent.len() > SUM_CAP {
            break;
        }
        next.sort();
        frontier = next;
    }
    for s in &frontier {
        if model.way_below(x_prime, s)? {
            let mut tuple = Vec::new();
            let mut cursor = Some(s.clone());
            while let Some(cur) = cursor {
                let (prev, added) = parent[&cur].clone();
                tuple.push(added);
                cursor = prev;
            }
            tuple.reverse();
            return Ok(Some(tuple));
        }
    }
    Ok(None)
}

/// Definitional sweep for functional softness. The inner existential over
/// `n` is decided in closed form per term, so refutations are exact even
/// on infinite models.
pub fn sweep_functionally_soft(
    model: &CuModel,
    x: &Element,
    budget: &Budget,
) -> CuResult<Verdict> {
    let mut witness = Vec::new();
    for term in below_terms(model, x, budget)? {
        match model.least_multiple_domination(&term, x)? {
            Some(n) => {
                witness = vec![
                    ("x'".into(), term.clone()),
                    (format!("{}·x'", n + 1), model.mul(n + 1, &term)?),
                    (format!("{n}·x"), model.mul(n, x)?),
                ];
            }
            None => {
                return Ok(Verdict::refuted_with(vec![("x'".into(), term)]));
            }
        }
    }
    Ok(Verdict::proven_with(witness))
}

/// Pure noncompactness: sweep the ideal lattice; wherever the image of `x`
/// is compact it must be idempotent. Exact on every supported family.
pub fn purely_noncompact(model: &CuModel, x: &Element, _budget: &Budget) -> CuResult<Verdict> {
    for ideal in enumerate_ideals(model)? {
        let q = quotient(model, &ideal)?;
        let image = q.map(x)?;
        if q.target().is_compact(&image)? {
            let doubled = q.target().add(&image, &image)?;
            if doubled != image {
                return Ok(Verdict::refuted_with(vec![(
                    "ideal_top".into(),
                    ideal.top().clone(),
                )]));
            }
        }
    }
    Ok(Verdict::proven())
}

/// Weak pure noncompactness: as above with `(n+1)x_I = nx_I` for some `n`.
pub fn weakly_purely_noncompact(
    model: &CuModel,
    x: &Element,
    _budget: &Budget,
) -> CuResult<Verdict> {
    for ideal in enumerate_ideals(model)? {
        let q = quotient(model, &ideal)?;
        let image = q.map(x)?;
        if q.target().is_compact(&image)?
            && q.target().multiple_stabilization(&image)?.is_none()
        {
            return Ok(Verdict::refuted_with(vec![(
                "ideal_top".into(),
                ideal.top().clone(),
            )]));
        }
    }
    Ok(Verdict::proven())
}

/// Classifies one element against all five predicates.
///
/// Compact elements take the closed forms; everything else runs the
/// definitional sweeps. The two noncompactness predicates are always exact.
pub fn classify_softness(
    model: &CuModel,
    x: &Element,
    budget: &Budget,
) -> CuResult<SoftnessReport> {
    model.check(x)?;
    if model.is_compact(x)? {
        let idempotent = model.add(x, x)? == *x;
        let strong = if idempotent {
            Verdict::proven_with(vec![("x".into(), x.clone())])
        } else {
            Verdict::refuted_with(vec![("x'".into(), x.clone())])
        };
        let functional = match model.multiple_stabilization(x)? {
            Some(n) => Verdict::proven_with(vec![
                (format!("{}·x", n + 1), model.mul(n + 1, x)?),
                (format!("{n}·x"), model.mul(n, x)?),
            ]),
            None => Verdict::refuted_with(vec![("x'".into(), x.clone())]),
        };
        return Ok(SoftnessReport {
            strongly_soft: strong.clone(),
            weakly_soft: strong.clone(),
            purely_noncompact: strong,
            weakly_purely_noncompact: functional.clone(),
            functionally_soft: functional,
        });
    }
    Ok(SoftnessReport {
        strongly_soft: sweep_strongly_soft(model, x, budget)?,
        weakly_soft: sweep_weakly_soft(model, x, budget)?,
        functionally_soft: sweep_functionally_soft(model, x, budget)?,
        purely_noncompact: purely_noncompact(model, x, budget)?,
        weakly_purely_noncompact: weakly_purely_noncompact(model, x, budget)?,
    })
}

/// Convenience: is `x` strongly soft (proven)?
pub fn is_strongly_soft(model: &CuModel, x: &Element, budget: &Budget) -> CuResult<bool> {
    if model.is_compact(x)? {
        return Ok(model.add(x, x)? == *x);
    }
    Ok(sweep_strongly_soft(model, x, budget)?.is_proven())
}

/// Searches the least `t` with `x' + t ≪ x` and `x' ≪ ∞t` for one
/// established way-below pair.
pub fn strongly_soft_witness(
    model: &CuModel,
    x_prime: &Element,
    x: &Element,
    budget: &Budget,
) -> CuResult<Verdict> {
    if !model.way_below(x_prime, x)? {
        return Err(CuError::NotWayBelow(format!(
            "{} is not way-below {}",
            model.format_element(x_prime),
            model.format_element(x)
        )));
    }
    let grid = witness_grid(model, budget);
    match least_strong_witness(model, x_prime, x, &grid)? {
        Some(t) => Ok(Verdict::proven_with(vec![("t".into(), t)])),
        None if model.is_finite() => Ok(Verdict::refuted_with(vec![
            ("x'".into(), x_prime.clone()),
            ("x".into(), x.clone()),
        ])),
        None => Ok(Verdict::unknown("witness grid exhausted")),
    }
}

/// The set `{x : 2x = x}` of a finite model: exactly its strongly soft
/// elements, since every element of a finite carrier is compact.
pub fn soft_submonoid(model: &CuModel) -> CuResult<Vec<Element>> {
    let carrier = model.carrier().ok_or_else(|| {
        CuError::UnsupportedModel("soft submonoid extraction needs a finite carrier".into())
    })?;
    let mut soft = Vec::new();
    for x in carrier {
        if model.add(&x, &x)? == x {
            soft.push(x);
        }
    }
    debug_assert!(soft.contains(&model.zero()));
    Ok(soft)
}

/// Sum of a finitely-described summand sequence `y_0, y_1, …` (the last
/// listed summand repeats forever), under the hypothesis
/// `y_n ≤ ∞·y_{n+1}` for every presented `n`. The exact sum is the finite
/// prefix plus `∞·(eventual summand)`; the result is asserted to classify
/// strongly soft.
pub fn sum_soft(
    model: &CuModel,
    summands: &ChainDescriptor,
    budget: &Budget,
) -> CuResult<Element> {
    let list = match summands {
        ChainDescriptor::Stabilizing(list) if !list.is_empty() => list,
        ChainDescriptor::Stabilizing(_) => {
            return Err(CuError::HypothesisViolated {
                index: 0,
                detail: "empty summand list".into(),
            })
        }
        ChainDescriptor::Truncation { .. } => {
            return Err(CuError::UnsupportedModel(
                "summand sequences must be finitely described as stabilizing lists".into(),
            ))
        }
    };
    for (n, pair) in list.windows(2).enumerate() {
        let bound = model.omega_multiple(&pair[1])?;
        if !model.leq(&pair[0], &bound)? {
            return Err(CuError::HypothesisViolated {
                index: n,
                detail: format!(
                    "{} is not below ∞·{}",
                    model.format_element(&pair[0]),
                    model.format_element(&pair[1])
                ),
            });
        }
    }
    let mut acc = model.zero();
    for y in &list[..list.len() - 1] {
        acc = model.add(&acc, y)?;
    }
    let tail = model.omega_multiple(list.last().unwrap())?;
    let total = model.add(&acc, &tail)?;
    let soft = if model.is_compact(&total)? {
        model.add(&total, &total)? == total
    } else {
        !sweep_strongly_soft(model, &total, budget)?.is_refuted()
    };
    if !soft {
        return Err(CuError::ValidationError(format!(
            "sum {} of an ∞-dominated summand sequence failed to classify strongly soft",
            model.format_element(&total)
        )));
    }
    Ok(total)
}

/// Interpolates a strongly soft element strictly between a way-below pair,
/// by the abundance construction: pick `z' , z` between `x'` and `x`, split
/// off `t` with `z + t ≤ x ≤ ∞t`, refine to `t' ≪ t` with `z ≪ ∞t'`, draw a
/// strongly soft `u` with `t' ⊲ u ≪ t` from abundance, and return
/// `y = z' + u`.
///
/// The abundance verdict is a caller-established fact (see the glimm
/// module); the softness of `x` is re-established here.
pub fn soft_interpolate(
    model: &CuModel,
    scale: &Scale,
    x_prime: &Element,
    x: &Element,
    abundance: &Verdict,
    budget: &Budget,
) -> CuResult<Verdict> {
    if !model.way_below(x_prime, x)? {
        return Err(CuError::NotWayBelow(format!(
            "{} is not way-below {}",
            model.format_element(x_prime),
            model.format_element(x)
        )));
    }
    if !abundance.is_proven() {
        return Err(CuError::PreconditionNotEstablished(
            "abundance of strongly soft elements is not proven".into(),
        ));
    }
    if !scale.contains(model, x)? {
        return Err(CuError::PreconditionNotEstablished(
            "x does not belong to the scale".into(),
        ));
    }
    if !is_strongly_soft(model, x, budget)? {
        return Err(CuError::PreconditionNotEstablished(format!(
            "{} is not strongly soft",
            model.format_element(x)
        )));
    }

    let grid = witness_grid(model, budget);
    let fail = |stage: &str| -> CuError {
        if model.is_finite() {
            CuError::NoWitness(format!("interpolation stage `{stage}` found no candidate"))
        } else {
            CuError::PreconditionNotEstablished(format!(
                "interpolation stage `{stage}` exhausted the value grid"
            ))
        }
    };

    let interpolate = |a: &Element, b: &Element| -> CuResult<Option<Element>> {
        for v in &grid {
            if model.way_below(a, v)? && model.way_below(v, b)? {
                return Ok(Some(v.clone()));
            }
        }
        Ok(None)
    };

    let z_prime = interpolate(x_prime, x)?.ok_or_else(|| fail("z'"))?;
    let z = interpolate(&z_prime, x)?.ok_or_else(|| fail("z"))?;

    let mut t_found = None;
    for t in &grid {
        let zt = model.add(&z, t)?;
        if model.leq(&zt, x)? && model.leq(x, &model.omega_multiple(t)?)? {
            t_found = Some(t.clone());
            break;
        }
    }
    let t = t_found.ok_or_else(|| fail("t"))?;

    let mut tp_found = None;
    for v in &grid {
        if model.way_below(v, &t)? && model.leq(&z, &model.omega_multiple(v)?)? {
            tp_found = Some(v.clone());
            break;
        }
    }
    let t_prime = tp_found.ok_or_else(|| fail("t'"))?;

    let mut u_found = None;
    for u in &grid {
        if model.way_below(u, &t)?
            && model.leq(&t_prime, &model.omega_multiple(u)?)?
            && is_strongly_soft(model, u, budget)?
        {
            u_found = Some(u.clone());
            break;
        }
    }
    let u = u_found.ok_or_else(|| fail("u"))?;

    let y = model.add(&z_prime, &u)?;
    if !(model.way_below(x_prime, &y)? && model.way_below(&y, x)?) {
        return Err(CuError::NoWitness(format!(
            "constructed y = {} fails x' ≪ y ≪ x",
            model.format_element(&y)
        )));
    }
    let y_soft = if model.is_compact(&y)? {
        model.add(&y, &y)? == y
    } else {
        !sweep_strongly_soft(model, &y, budget)?.is_refuted()
    };
    if !y_soft {
        return Err(CuError::NoWitness(format!(
            "constructed y = {} is not strongly soft",
            model.format_element(&y)
        )));
    }
    Ok(Verdict::proven_with(vec![
        ("z'".into(), z_prime),
        ("z".into(), z),
        ("t".into(), t),
        ("t'".into(), t_prime),
        ("u".into(), u),
        ("y".into(), y),
    ]))
}

/// Applies a quotient map to an element.
pub fn map_element(map: &QuotientMap, x: &Element) -> CuResult<Element> {
    map.map(x)
}

/// Checks that every softness flag proven for `x` is proven for its image
/// (unknown verdicts on either side are exempt). Returns the violated flag
/// names.
pub fn softness_preservation_violations(
    map: &QuotientMap,
    x: &Element,
    budget: &Budget,
) -> CuResult<Vec<String>> {
    let source_report = classify_softness(map.source(), x, budget)?;
    let image = map.map(x)?;
    let target_report = classify_softness(map.target(), &image, budget)?;
    let mut violated = Vec::new();
    for ((name, src), (_, tgt)) in source_report.flags().iter().zip(target_report.flags()) {
        if src.is_proven() && tgt.is_refuted() {
            violated.push((*name).to_string());
        }
    }
    Ok(violated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::extnat::ExtNat;

    fn budget() -> Budget {
        Budget::default()
    }

    fn nat(m: &CuModel, v: u64) -> Element {
        m.element_of_nat(ExtNat::Fin(v)).unwrap()
    }

    fn inf(m: &CuModel) -> Element {
        m.element_of_nat(ExtNat::Inf).unwrap()
    }

    #[test]
    fn elementary_one_is_functionally_soft_only() {
        let m = CuModel::elementary(2);
        let report = classify_softness(&m, &nat(&m, 1), &budget()).unwrap();
        assert!(report.functionally_soft.is_proven());
        assert!(report.weakly_purely_noncompact.is_proven());
        assert!(report.strongly_soft.is_refuted());
        assert!(report.weakly_soft.is_refuted());
        assert!(report.purely_noncompact.is_refuted());
    }

    #[test]
    fn nbar_infinity_is_soft_in_every_sense() {
        let m = CuModel::nbar();
        let report = classify_softness(&m, &inf(&m), &budget()).unwrap();
        for (name, verdict) in report.flags() {
            assert!(verdict.is_proven(), "{name} on nbar ∞");
        }
    }

    #[test]
    fn zero_is_soft_in_every_sense() {
        for (name, model) in corpus::all() {
            let report = classify_softness(&model, &model.zero(), &budget()).unwrap();
            for (flag, verdict) in report.flags() {
                assert!(verdict.is_proven(), "{flag} at zero of {name}");
            }
        }
    }

    #[test]
    fn nbar_finite_elements_are_not_soft() {
        let m = CuModel::nbar();
        let report = classify_softness(&m, &nat(&m, 5), &budget()).unwrap();
        assert!(report.strongly_soft.is_refuted());
        assert!(report.weakly_soft.is_refuted());
        assert!(report.functionally_soft.is_refuted());
        assert!(report.purely_noncompact.is_refuted());
        assert!(report.weakly_purely_noncompact.is_refuted());
    }

    #[test]
    fn strong_witness_in_nbar_is_minimal() {
        let m = CuModel::nbar();
        // scan: t = 0 fails (3 ≪ ∞·0 = 0 is false), t = 1 works
        let verdict = strongly_soft_witness(&m, &nat(&m, 3), &inf(&m), &budget()).unwrap();
        assert!(verdict.is_proven());
        assert_eq!(verdict.witness[0].1, nat(&m, 1));
    }

    #[test]
    fn strong_witness_refuted_in_elementary() {
        let m = CuModel::elementary(2);
        let one = nat(&m, 1);
        let verdict = strongly_soft_witness(&m, &one, &one, &budget()).unwrap();
        assert!(verdict.is_refuted());
    }

    #[test]
    fn strong_witness_for_zero_is_zero() {
        let m = corpus::zero_inf();
        let x = m.element_of_index(1).unwrap();
        let verdict = strongly_soft_witness(&m, &m.zero(), &x, &budget()).unwrap();
        assert!(verdict.is_proven());
        assert_eq!(verdict.witness[0].1, m.zero());
    }

    #[test]
    fn witness_requires_way_below() {
        let m = CuModel::nbar();
        let err = strongly_soft_witness(&m, &inf(&m), &inf(&m), &budget());
        assert!(matches!(err, Err(CuError::NotWayBelow(_))));
    }

    #[test]
    fn soft_submonoids_of_small_models() {
        let e2 = CuModel::elementary(2);
        let soft = soft_submonoid(&e2).unwrap();
        assert_eq!(soft, vec![e2.zero(), inf(&e2)]);

        let zi = corpus::zero_inf();
        assert_eq!(soft_submonoid(&zi).unwrap().len(), 2);

        let trivial = corpus::trivial();
        assert_eq!(soft_submonoid(&trivial).unwrap(), vec![trivial.zero()]);

        assert!(matches!(
            soft_submonoid(&CuModel::nbar()),
            Err(CuError::UnsupportedModel(_))
        ));
    }

    #[test]
    fn sum_soft_of_constant_ones_is_infinity() {
        let m = CuModel::nbar();
        let chain = ChainDescriptor::Stabilizing(vec![nat(&m, 1)]);
        let total = sum_soft(&m, &chain, &budget()).unwrap();
        assert_eq!(total, inf(&m));
    }

    #[test]
    fn sum_soft_stabilizes_immediately_on_idempotents() {
        let m = corpus::zero_inf();
        let top = m.element_of_index(1).unwrap();
        let chain = ChainDescriptor::Stabilizing(vec![top.clone()]);
        assert_eq!(sum_soft(&m, &chain, &budget()).unwrap(), top);

        let zeros = ChainDescriptor::Stabilizing(vec![m.zero()]);
        assert_eq!(sum_soft(&m, &zeros, &budget()).unwrap(), m.zero());
    }

    #[test]
    fn sum_soft_rejects_undominated_summands() {
        let m = CuModel::nbar();
        // 1 ≤ ∞·0 fails at index 0
        let chain = ChainDescriptor::Stabilizing(vec![nat(&m, 1), m.zero()]);
        let err = sum_soft(&m, &chain, &budget());
        assert!(matches!(err, Err(CuError::HypothesisViolated { index: 0, .. })));
    }

    #[test]
    fn soft_interpolation_collapses_on_zero_inf() {
        let m = corpus::zero_inf();
        let scale = Scale::full(&m);
        let top = m.element_of_index(1).unwrap();
        let verdict =
            soft_interpolate(&m, &scale, &top, &top, &Verdict::proven(), &budget()).unwrap();
        assert!(verdict.is_proven());
        let y = &verdict.witness.last().unwrap().1;
        assert_eq!(*y, top);
    }

    #[test]
    fn soft_interpolation_on_nbar_returns_minimal_y() {
        let m = CuModel::nbar();
        let scale = Scale::full(&m);
        let verdict =
            soft_interpolate(&m, &scale, &m.zero(), &inf(&m), &Verdict::proven(), &budget())
                .unwrap();
        assert!(verdict.is_proven());
        // minimal valid y with 0 ≪ y ≪ ∞ is 0 itself
        assert_eq!(verdict.witness.last().unwrap().1, m.zero());
    }

    #[test]
    fn soft_interpolation_needs_a_soft_x() {
        let m = CuModel::elementary(2);
        let one = nat(&m, 1);
        let err = soft_interpolate(
            &m,
            &Scale::full(&m),
            &one,
            &one,
            &Verdict::proven(),
            &budget(),
        );
        assert!(matches!(err, Err(CuError::PreconditionNotEstablished(_))));
    }

    #[test]
    fn quotient_maps_preserve_softness_flags() {
        let m = CuModel::lsc(corpus::sierpinski_space());
        let gen = m.element_of_values(vec![ExtNat::Fin(1), ExtNat::ZERO]).unwrap();
        let ideal = crate::structure::ideal_generated(&m, &gen).unwrap();
        let q = quotient(&m, &ideal).unwrap();
        let x = m.element_of_values(vec![ExtNat::Inf, ExtNat::Inf]).unwrap();
        assert!(softness_preservation_violations(&q, &x, &budget()).unwrap().is_empty());
    }
}
