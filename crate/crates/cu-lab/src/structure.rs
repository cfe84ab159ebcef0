//! Ideals, quotients, scales, finiteness and cancellation classifiers, and
//! the O5–O7 axiom checkers.
//!
//! In every supported model family each ideal is principal: it is the
//! downset of an additively idempotent element (the `∞`-multiple of any of
//! its generators). Finite carriers contribute the downsets of elements `m`
//! with `2m = m`; nbar has `{0}` and everything; lsc models have one ideal
//! per open point set; products multiply the factor lattices. The single
//! principal representation keeps membership, enumeration, and quotients
//! uniform across kinds.

use crate::error::{CuError, CuResult};
use crate::model::{CuModel, Element, FiniteTable, ModelKind};
use crate::verdict::Verdict;
use crate::Budget;

/// A downward-closed, addition-closed, sup-closed subset, represented by
/// its largest element (which satisfies `2·top = top`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    model: u64,
    top: Element,
}

impl Ideal {
    pub fn top(&self) -> &Element {
        &self.top
    }

    pub fn contains(&self, model: &CuModel, x: &Element) -> CuResult<bool> {
        self.ensure_valid(model)?;
        model.leq(x, &self.top)
    }

    pub fn is_zero_ideal(&self, model: &CuModel) -> bool {
        self.top == model.zero()
    }

    pub fn is_full(&self, model: &CuModel) -> bool {
        self.top == model.max_element()
    }

    fn ensure_valid(&self, model: &CuModel) -> CuResult<()> {
        if !model.contains(&self.top) {
            return Err(CuError::NotAnIdeal(
                "ideal belongs to a different model".into(),
            ));
        }
        if model.omega_multiple(&self.top)? != self.top {
            return Err(CuError::NotAnIdeal(format!(
                "largest element {} is not additively idempotent",
                model.format_element(&self.top)
            )));
        }
        Ok(())
    }
}

/// The ideal generated by `x`: all `y` with `y ≤ ∞·x`.
pub fn ideal_generated(model: &CuModel, x: &Element) -> CuResult<Ideal> {
    let top = model.omega_multiple(x)?;
    Ok(Ideal { model: model.fingerprint(), top })
}

/// The complete ideal lattice, without duplicates, in canonical order.
pub fn enumerate_ideals(model: &CuModel) -> CuResult<Vec<Ideal>> {
    let fp = model.fingerprint();
    Ok(model
        .omega_idempotents()
        .into_iter()
        .map(|top| Ideal { model: fp, top })
        .collect())
}

/// A scale: a downward-hereditary, sup-closed subset that generates the
/// whole model as an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scale {
    model: u64,
    repr: ScaleRepr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum ScaleRepr {
    Full,
    /// Explicit member mask over a finite carrier.
    Members(Vec<bool>),
    /// Generated downset `{y : y ≤ g for some generator g}`.
    Downset(Vec<Element>),
}

impl Scale {
    pub fn full(model: &CuModel) -> Scale {
        Scale { model: model.fingerprint(), repr: ScaleRepr::Full }
    }

    pub fn is_full(&self) -> bool {
        matches!(self.repr, ScaleRepr::Full)
    }

    /// Scale from a member mask over the carrier of a finite model.
    pub fn from_members(model: &CuModel, members: Vec<bool>) -> CuResult<Scale> {
        let n = model.carrier_len().ok_or_else(|| {
            CuError::UnsupportedModel("member-mask scales need a finite carrier".into())
        })?;
        if members.len() != n {
            return Err(CuError::ParseError(format!(
                "scale mask has {} entries for a carrier of {}",
                members.len(),
                n
            )));
        }
        Ok(Scale { model: model.fingerprint(), repr: ScaleRepr::Members(members) })
    }

    /// Scale described as the downset of finitely many generators.
    pub fn from_generators(model: &CuModel, generators: Vec<Element>) -> CuResult<Scale> {
        for g in &generators {
            model.check(g)?;
        }
        if generators.is_empty() {
            return Err(CuError::ParseError("scale needs at least one generator".into()));
        }
        Ok(Scale { model: model.fingerprint(), repr: ScaleRepr::Downset(generators) })
    }

    pub fn contains(&self, model: &CuModel, x: &Element) -> CuResult<bool> {
        model.check(x)?;
        match &self.repr {
            ScaleRepr::Full => Ok(true),
            ScaleRepr::Members(mask) => {
                let i = model.index_of(x).ok_or_else(|| {
                    CuError::ElementModelMismatch("element has no carrier index".into())
                })?;
                Ok(mask[i])
            }
            ScaleRepr::Downset(gens) => {
                for g in gens {
                    if model.leq(x, g)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    pub fn describe(&self, model: &CuModel) -> String {
        match &self.repr {
            ScaleRepr::Full => "full".into(),
            ScaleRepr::Members(mask) => {
                let carrier = model.carrier().expect("finite");
                let names: Vec<String> = carrier
                    .iter()
                    .zip(mask)
                    .filter(|(_, m)| **m)
                    .map(|(e, _)| model.format_element(e))
                    .collect();
                format!("{{{}}}", names.join(","))
            }
            ScaleRepr::Downset(gens) => {
                let names: Vec<String> =
                    gens.iter().map(|g| model.format_element(g)).collect();
                format!("downset of {{{}}}", names.join(","))
            }
        }
    }
}

/// Checks the scale laws: downward-hereditary, sup-closed, and generating.
///
/// Downset-of-generators scales are hereditary by construction, and every
/// represented scale is closed under suprema of described chains (a
/// stabilizing chain realizes its supremum; truncation families live below
/// their base). Generation reduces to `∞·(sum of the description) = max`.
pub fn is_scale(model: &CuModel, scale: &Scale) -> CuResult<bool> {
    if scale.model != model.fingerprint() {
        return Err(CuError::ElementModelMismatch(
            "scale belongs to a different model".into(),
        ));
    }
    let generating_sum = match &scale.repr {
        ScaleRepr::Full => model.max_element(),
        ScaleRepr::Members(mask) => {
            let carrier = model.carrier().expect("finite");
            // hereditary: members are closed downward
            for (i, x) in carrier.iter().enumerate() {
                if !mask[i] {
                    continue;
                }
                for (j, y) in carrier.iter().enumerate() {
                    if model.leq(y, x)? && !mask[j] {
                        return Ok(false);
                    }
                }
            }
            let mut acc = model.zero();
            for (i, x) in carrier.iter().enumerate() {
                if mask[i] {
                    acc = model.add(&acc, x)?;
                }
            }
            acc
        }
        ScaleRepr::Downset(gens) => {
            let mut acc = model.zero();
            for g in gens {
                acc = model.add(&acc, g)?;
            }
            acc
        }
    };
    Ok(model.omega_multiple(&generating_sum)? == model.max_element())
}

/// A quotient map `π : S → S/I` together with its computed target model.
///
/// The congruence is the standard one: `x ≤_I y` iff `x ≤ y + w` for some
/// `w ∈ I`, antisymmetrized. Since ideals are principal downsets of an
/// idempotent `m`, the relation is simply `x ≤ y + m`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: CuModel,
    ideal: Ideal,
    target: CuModel,
    proj: Projection,
}

#[derive(Clone, Debug)]
enum Projection {
    Identity,
    ToTrivial,
    /// Finite sources: carrier index → target carrier index.
    FiniteClasses(Vec<usize>),
    /// Lsc sources: restriction to the listed points.
    LscRestrict(Vec<usize>),
    /// Product sources: the factor quotients.
    Componentwise(Vec<QuotientMap>),
}

impl QuotientMap {
    pub fn source(&self) -> &CuModel {
        &self.source
    }

    pub fn target(&self) -> &CuModel {
        &self.target
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Applies the projection.
    pub fn map(&self, x: &Element) -> CuResult<Element> {
        self.source.check(x)?;
        match &self.proj {
            Projection::Identity => Ok(x.clone()),
            Projection::ToTrivial => Ok(self.target.zero()),
            Projection::FiniteClasses(class_of) => {
                let i = self.source.index_of(x).expect("finite source");
                self.target.element_of_index(class_of[i])
            }
            Projection::LscRestrict(keep) => {
                let values = match x.payload() {
                    crate::model::Payload::Vector(vals) => {
                        keep.iter().map(|&p| vals[p]).collect()
                    }
                    _ => unreachable!("lsc source"),
                };
                self.target.element_of_values(values)
            }
            Projection::Componentwise(maps) => {
                let parts = match x.payload() {
                    crate::model::Payload::Tuple(parts) => parts.clone(),
                    _ => unreachable!("product source"),
                };
                let factors = match self.source.kind() {
                    ModelKind::Product(fs) => fs,
                    _ => unreachable!("product source"),
                };
                let mut images = Vec::new();
                for ((map, factor), payload) in maps.iter().zip(factors).zip(parts) {
                    let part = rebuild_element(factor, payload)?;
                    images.push(map.map(&part)?);
                }
                self.target.element_of_tuple(images)
            }
        }
    }
}

pub(crate) fn rebuild(model: &CuModel, payload: crate::model::Payload) -> CuResult<Element> {
    rebuild_element(model, payload)
}

fn rebuild_element(model: &CuModel, payload: crate::model::Payload) -> CuResult<Element> {
    use crate::model::Payload;
    match payload {
        Payload::Index(i) => model.element_of_index(i),
        Payload::Nat(v) => model.element_of_nat(v),
        Payload::Vector(vals) => model.element_of_values(vals),
        Payload::Tuple(parts) => {
            let factors = match model.kind() {
                ModelKind::Product(fs) => fs,
                _ => {
                    return Err(CuError::ElementModelMismatch(
                        "tuple payload for a non-product model".into(),
                    ))
                }
            };
            let mut elems = Vec::new();
            for (f, p) in factors.iter().zip(parts) {
                elems.push(rebuild_element(f, p)?);
            }
            model.element_of_tuple(elems)
        }
    }
}

/// Builds the quotient of a model by an ideal.
pub fn quotient(model: &CuModel, ideal: &Ideal) -> CuResult<QuotientMap> {
    if ideal.model != model.fingerprint() {
        return Err(CuError::NotAnIdeal("ideal belongs to a different model".into()));
    }
    ideal.ensure_valid(model)?;

    if ideal.is_zero_ideal(model) {
        return Ok(QuotientMap {
            source: model.clone(),
            ideal: ideal.clone(),
            target: model.clone(),
            proj: Projection::Identity,
        });
    }
    if ideal.is_full(model) {
        return Ok(QuotientMap {
            source: model.clone(),
            ideal: ideal.clone(),
            target: crate::corpus::trivial(),
            proj: Projection::ToTrivial,
        });
    }

    if model.is_finite() {
        return finite_quotient(model, ideal);
    }

    match model.kind() {
        ModelKind::Nbar => unreachable!("nbar has only the trivial ideals"),
        ModelKind::Lsc(space) => {
            let m = ideal.top();
            let keep: Vec<usize> = match m.payload() {
                crate::model::Payload::Vector(vals) => (0..vals.len())
                    .filter(|&p| vals[p].is_zero())
                    .collect(),
                _ => unreachable!("lsc ideal"),
            };
            let target = CuModel::lsc(space.restriction(&keep));
            Ok(QuotientMap {
                source: model.clone(),
                ideal: ideal.clone(),
                target,
                proj: Projection::LscRestrict(keep),
            })
        }
        ModelKind::Product(factors) => {
            let tops = match ideal.top().payload() {
                crate::model::Payload::Tuple(parts) => parts.clone(),
                _ => unreachable!("product ideal"),
            };
            let mut maps = Vec::new();
            let mut targets = Vec::new();
            for (factor, top_payload) in factors.iter().zip(tops) {
                let top = rebuild_element(factor, top_payload)?;
                let factor_ideal = Ideal { model: factor.fingerprint(), top };
                let map = quotient(factor, &factor_ideal)?;
                targets.push(map.target.clone());
                maps.push(map);
            }
            let target = CuModel::product_many(targets)?;
            Ok(QuotientMap {
                source: model.clone(),
                ideal: ideal.clone(),
                target,
                proj: Projection::Componentwise(maps),
            })
        }
        _ => unreachable!("finite kinds handled above"),
    }
}

/// Quotient of a finite model: equivalence classes of the antisymmetrized
/// relation `x ≤ y + m`, ordered and labelled by minimal-index
/// representatives.
fn finite_quotient(model: &CuModel, ideal: &Ideal) -> CuResult<QuotientMap> {
    let carrier = model.carrier().expect("finite model");
    let n = carrier.len();
    let m = ideal.top();

    let mut leq_i = vec![vec![false; n]; n];
    for i in 0..n {
        let shifted_row: Vec<bool> = (0..n)
            .map(|j| {
                let y_plus_m = model.add(&carrier[j], m).expect("same model");
                model.leq(&carrier[i], &y_plus_m).expect("same model")
            })
            .collect();
        leq_i[i] = shifted_row;
    }

    // classes keyed by minimal representative index
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut found = None;
        for (c, &r) in reps.iter().enumerate() {
            if leq_i[i][r] && leq_i[r][i] {
                found = Some(c);
                break;
            }
        }
        match found {
            Some(c) => class_of[i] = c,
            None => {
                class_of[i] = reps.len();
                reps.push(i);
            }
        }
    }

    let names: Vec<String> = reps
        .iter()
        .map(|&r| model.format_element(&carrier[r]))
        .collect();
    let leq: Vec<Vec<bool>> = reps
        .iter()
        .map(|&r| reps.iter().map(|&s| leq_i[r][s]).collect())
        .collect();
    let add: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| {
            reps.iter()
                .map(|&s| {
                    let sum = model.add(&carrier[r], &carrier[s]).expect("same model");
                    class_of[model.index_of(&sum).expect("finite")]
                })
                .collect()
        })
        .collect();

    debug_assert_eq!(class_of[0], 0, "the class of zero comes first");
    let table = FiniteTable { names, leq, add };
    debug_assert!(table.violations().is_empty(), "quotient table must be lawful");
    let target = CuModel::finite_table_unchecked(table);
    Ok(QuotientMap {
        source: model.clone(),
        ideal: ideal.clone(),
        target,
        proj: Projection::FiniteClasses(class_of),
    })
}

/// Stable finiteness, residual stable finiteness, and weak cancellation.
///
/// The fields are verdicts rather than booleans: finite carriers get
/// exhaustive sweeps, infinite models are sampled over a small value grid
/// (failures are genuine certificates either way).
#[derive(Clone, Debug)]
pub struct FinitenessReport {
    pub stably_finite: Verdict,
    pub residually_stably_finite: Verdict,
    pub weak_cancellation: Verdict,
}

fn sweep_universe(model: &CuModel, budget: &Budget, variables: usize) -> Vec<Element> {
    match model.carrier() {
        Some(c) => c,
        None => model.grid(budget.universal_cap(variables)),
    }
}

fn stably_finite_on(model: &CuModel, universe: &[Element]) -> CuResult<Verdict> {
    let zero = model.zero();
    for x in universe {
        for y in universe {
            let s = model.add(x, y)?;
            if model.way_below(&s, x)? && *y != zero {
                return Ok(Verdict::refuted_with(vec![
                    ("x".into(), x.clone()),
                    ("y".into(), y.clone()),
                ]));
            }
        }
    }
    Ok(Verdict::proven())
}

pub fn classify_finiteness(model: &CuModel, budget: &Budget) -> CuResult<FinitenessReport> {
    let universe = sweep_universe(model, budget, 2);
    let stably_finite = stably_finite_on(model, &universe)?;

    let mut weak_cancellation = Verdict::proven();
    'wc: for x in &universe {
        for y in &universe {
            for z in &universe {
                let xz = model.add(x, z)?;
                let yz = model.add(y, z)?;
                if model.way_below(&xz, &yz)? && !model.way_below(x, y)? {
                    weak_cancellation = Verdict::refuted_with(vec![
                        ("x".into(), x.clone()),
                        ("y".into(), y.clone()),
                        ("z".into(), z.clone()),
                    ]);
                    break 'wc;
                }
            }
        }
    }

    let mut residually_stably_finite = Verdict::proven();
    for ideal in enumerate_ideals(model)? {
        let q = quotient(model, &ideal)?;
        let target_universe = sweep_universe(q.target(), budget, 2);
        let sf = stably_finite_on(q.target(), &target_universe)?;
        if sf.is_refuted() {
            let mut certificate = vec![("ideal".into(), ideal.top().clone())];
            certificate.extend(sf.certificate);
            residually_stably_finite = Verdict::refuted_with(certificate);
            break;
        }
    }

    Ok(FinitenessReport { stably_finite, residually_stably_finite, weak_cancellation })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CuAxiom {
    O5,
    O6,
    O7,
}

impl std::fmt::Display for CuAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CuAxiom::O5 => write!(f, "O5"),
            CuAxiom::O6 => write!(f, "O6"),
            CuAxiom::O7 => write!(f, "O7"),
        }
    }
}

/// Verdicts for the three non-automatic axioms. (O1–O4 hold by construction
/// in every supported family.)
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub o5: Verdict,
    pub o6: Verdict,
    pub o7: Verdict,
}

impl AxiomReport {
    pub fn all_proven(&self) -> bool {
        self.o5.is_proven() && self.o6.is_proven() && self.o7.is_proven()
    }

    pub fn get(&self, axiom: CuAxiom) -> &Verdict {
        match axiom {
            CuAxiom::O5 => &self.o5,
            CuAxiom::O6 => &self.o6,
            CuAxiom::O7 => &self.o7,
        }
    }
}

pub fn check_axioms(model: &CuModel, budget: &Budget) -> CuResult<AxiomReport> {
    Ok(AxiomReport {
        o5: check_axiom(model, CuAxiom::O5, budget)?,
        o6: check_axiom(model, CuAxiom::O6, budget)?,
        o7: check_axiom(model, CuAxiom::O7, budget)?,
    })
}

/// Decides one of O5/O6/O7 by quantifier sweep: exhaustive (with exact
/// refutation certificates) on finite carriers, sampled with three-valued
/// outcomes on infinite models.
pub fn check_axiom(model: &CuModel, axiom: CuAxiom, budget: &Budget) -> CuResult<Verdict> {
    let exhaustive = model.is_finite();
    let universe = sweep_universe(model, budget, 5);
    let witnesses = if exhaustive {
        universe.clone()
    } else {
        model.grid(budget.existential as u64)
    };
    match axiom {
        CuAxiom::O5 => check_o5(model, &universe, &witnesses, exhaustive),
        CuAxiom::O6 => check_o6(model, &universe, &witnesses, exhaustive),
        CuAxiom::O7 => check_o7(model, &universe, &witnesses, exhaustive),
    }
}

fn no_witness(
    exhaustive: bool,
    instance: Vec<(String, Element)>,
    model: &CuModel,
) -> Verdict {
    if exhaustive {
        Verdict::refuted_with(instance)
    } else {
        let rendered: Vec<String> = instance
            .iter()
            .map(|(name, e)| format!("{name}={}", model.format_element(e)))
            .collect();
        Verdict::unknown(format!(
            "witness search exhausted the grid at instance {}",
            rendered.join(", ")
        ))
    }
}

fn check_o5(
    model: &CuModel,
    universe: &[Element],
    witnesses: &[Element],
    exhaustive: bool,
) -> CuResult<Verdict> {
    for x in universe {
        for xp in universe {
            if !model.way_below(xp, x)? {
                continue;
            }
            for y in universe {
                for yp in universe {
                    if !model.way_below(yp, y)? {
                        continue;
                    }
                    let xy = model.add(x, y)?;
                    for z in universe {
                        if !model.leq(&xy, z)? {
                            continue;
                        }
                        let found = witnesses.iter().find(|c| {
                            let xpc = model.add(xp, c).expect("same model");
                            let xc = model.add(x, c).expect("same model");
                            model.leq(&xpc, z).expect("same model")
                                && model.leq(z, &xc).expect("same model")
                                && model.way_below(yp, c).expect("same model")
                        });
                        if found.is_none() {
                            return Ok(no_witness(
                                exhaustive,
                                vec![
                                    ("x'".into(), xp.clone()),
                                    ("x".into(), x.clone()),
                                    ("y'".into(), yp.clone()),
                                    ("y".into(), y.clone()),
                                    ("z".into(), z.clone()),
                                ],
                                model,
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::proven())
}

fn check_o6(
    model: &CuModel,
    universe: &[Element],
    witnesses: &[Element],
    exhaustive: bool,
) -> CuResult<Verdict> {
    for x in universe {
        for xp in universe {
            if !model.way_below(xp, x)? {
                continue;
            }
            for y in universe {
                for z in universe {
                    let yz = model.add(y, z)?;
                    if !model.leq(x, &yz)? {
                        continue;
                    }
                    let mut found = false;
                    'search: for e in witnesses {
                        if !(model.leq(e, x)? && model.leq(e, y)?) {
                            continue;
                        }
                        for f in witnesses {
                            if !(model.leq(f, x)? && model.leq(f, z)?) {
                                continue;
                            }
                            let ef = model.add(e, f)?;
                            if model.leq(xp, &ef)? {
                                found = true;
                                break 'search;
                            }
                        }
                    }
                    if !found {
                        return Ok(no_witness(
                            exhaustive,
                            vec![
                                ("x'".into(), xp.clone()),
                                ("x".into(), x.clone()),
                                ("y".into(), y.clone()),
                                ("z".into(), z.clone()),
                            ],
                            model,
                        ));
                    }
                }
            }
        }
    }
    Ok(Verdict::proven())
}

fn check_o7(
    model: &CuModel,
    universe: &[Element],
    witnesses: &[Element],
    exhaustive: bool,
) -> CuResult<Verdict> {
    for z in universe {
        for x in universe {
            if !model.leq(x, z)? {
                continue;
            }
            for xp in universe {
                if !model.way_below(xp, x)? {
                    continue;
                }
                for y in universe {
                    if !model.leq(y, z)? {
                        continue;
                    }
                    let xy = model.add(x, y)?;
                    for yp in universe {
                        if !model.way_below(yp, y)? {
                            continue;
                        }
                        let found = witnesses.iter().find(|w| {
                            model.way_below(xp, w).expect("same model")
                                && model.way_below(yp, w).expect("same model")
                                && model.leq(w, z).expect("same model")
                                && model.leq(w, &xy).expect("same model")
                        });
                        if found.is_none() {
                            return Ok(no_witness(
                                exhaustive,
                                vec![
                                    ("x'".into(), xp.clone()),
                                    ("x".into(), x.clone()),
                                    ("y'".into(), yp.clone()),
                                    ("y".into(), y.clone()),
                                    ("z".into(), z.clone()),
                                ],
                                model,
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::proven())
}

/// Result of validating a model against the structural laws.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the monoid laws, partial order laws, zero-least, and
/// order-compatibility, listing all violations. Finite carriers are swept
/// exhaustively, infinite models on a sample grid.
pub fn validate_model(model: &CuModel) -> ValidationReport {
    let budget = Budget::default();
    let universe = sweep_universe(model, &budget, 3);
    let mut violations = Vec::new();
    let name = |e: &Element| model.format_element(e);
    let zero = model.zero();

    for x in &universe {
        if !model.leq(x, x).expect("same model") {
            violations.push(format!("reflexivity at {}", name(x)));
        }
        if !model.leq(&zero, x).expect("same model") {
            violations.push(format!("zero-least at {}", name(x)));
        }
        let x0 = model.add(x, &zero).expect("same model");
        if x0 != *x {
            violations.push(format!("zero-neutrality at {}", name(x)));
        }
    }
    for x in &universe {
        for y in &universe {
            if x != y
                && model.leq(x, y).expect("same model")
                && model.leq(y, x).expect("same model")
            {
                violations.push(format!("antisymmetry at ({},{})", name(x), name(y)));
            }
            let xy = model.add(x, y).expect("same model");
            let yx = model.add(y, x).expect("same model");
            if xy != yx {
                violations.push(format!("commutativity at ({},{})", name(x), name(y)));
            }
        }
    }
    for x in &universe {
        for y in &universe {
            for z in &universe {
                if model.leq(x, y).expect("same model")
                    && model.leq(y, z).expect("same model")
                    && !model.leq(x, z).expect("same model")
                {
                    violations.push(format!(
                        "transitivity at ({},{},{})",
                        name(x),
                        name(y),
                        name(z)
                    ));
                }
                let xy = model.add(x, y).expect("same model");
                let xy_z = model.add(&xy, z).expect("same model");
                let yz = model.add(y, z).expect("same model");
                let x_yz = model.add(x, &yz).expect("same model");
                if xy_z != x_yz {
                    violations.push(format!(
                        "associativity at ({},{},{})",
                        name(x),
                        name(y),
                        name(z)
                    ));
                }
                if model.leq(x, y).expect("same model") {
                    let xz = model.add(x, z).expect("same model");
                    let yz2 = model.add(y, z).expect("same model");
                    if !model.leq(&xz, &yz2).expect("same model") {
                        violations.push(format!(
                            "order-compatibility at ({},{},{})",
                            name(x),
                            name(y),
                            name(z)
                        ));
                    }
                }
            }
        }
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::extnat::ExtNat;

    fn e2() -> CuModel {
        CuModel::elementary(2)
    }

    fn nat(m: &CuModel, v: u64) -> Element {
        m.element_of_nat(ExtNat::Fin(v)).unwrap()
    }

    fn inf(m: &CuModel) -> Element {
        m.element_of_nat(ExtNat::Inf).unwrap()
    }

    #[test]
    fn ideal_generated_by_one_in_e2_is_everything() {
        let m = e2();
        let ideal = ideal_generated(&m, &nat(&m, 1)).unwrap();
        for x in m.carrier().unwrap() {
            assert!(ideal.contains(&m, &x).unwrap());
        }
    }

    #[test]
    fn ideal_generated_by_zero_is_zero() {
        let m = e2();
        let ideal = ideal_generated(&m, &m.zero()).unwrap();
        assert!(ideal.is_zero_ideal(&m));
        assert!(ideal.contains(&m, &m.zero()).unwrap());
        assert!(!ideal.contains(&m, &nat(&m, 1)).unwrap());
    }

    #[test]
    fn ideal_generated_in_sierpinski_lsc() {
        let m = CuModel::lsc(corpus::sierpinski_space());
        let x = m.element_of_values(vec![ExtNat::Fin(1), ExtNat::ZERO]).unwrap();
        let ideal = ideal_generated(&m, &x).unwrap();
        // membership scan: exactly the (a, 0) vectors
        for a in [ExtNat::ZERO, ExtNat::Fin(3), ExtNat::Inf] {
            let inside = m.element_of_values(vec![a, ExtNat::ZERO]).unwrap();
            assert!(ideal.contains(&m, &inside).unwrap());
        }
        let outside = m.element_of_values(vec![ExtNat::Fin(2), ExtNat::Fin(1)]).unwrap();
        assert!(!ideal.contains(&m, &outside).unwrap());
    }

    #[test]
    fn ideal_counts_match_the_lattices() {
        assert_eq!(enumerate_ideals(&e2()).unwrap().len(), 2);
        assert_eq!(enumerate_ideals(&corpus::trivial()).unwrap().len(), 1);
        let sierp = CuModel::lsc(corpus::sierpinski_space());
        assert_eq!(enumerate_ideals(&sierp).unwrap().len(), 3);
        assert_eq!(enumerate_ideals(&CuModel::nbar()).unwrap().len(), 2);
        let prod = CuModel::product(CuModel::nbar(), e2());
        assert_eq!(enumerate_ideals(&prod).unwrap().len(), 4);
    }

    #[test]
    fn quotient_by_zero_ideal_is_identity() {
        let m = e2();
        let ideal = ideal_generated(&m, &m.zero()).unwrap();
        let q = quotient(&m, &ideal).unwrap();
        assert_eq!(q.target(), &m);
        let one = nat(&m, 1);
        assert_eq!(q.map(&one).unwrap(), one);
    }

    #[test]
    fn quotient_by_everything_is_trivial() {
        let m = e2();
        let ideal = ideal_generated(&m, &inf(&m)).unwrap();
        let q = quotient(&m, &ideal).unwrap();
        assert_eq!(q.target().carrier_len(), Some(1));
        assert_eq!(q.map(&nat(&m, 2)).unwrap(), q.target().zero());
    }

    #[test]
    fn sierpinski_quotient_by_open_point_ideal_restricts() {
        let m = CuModel::lsc(corpus::sierpinski_space());
        let gen = m.element_of_values(vec![ExtNat::Fin(1), ExtNat::ZERO]).unwrap();
        let ideal = ideal_generated(&m, &gen).unwrap();
        let q = quotient(&m, &ideal).unwrap();
        // target is the lsc model over the single closed point
        assert_eq!(q.target().describe(), "lsc(1 points)");
        let x = m.element_of_values(vec![ExtNat::Inf, ExtNat::Fin(4)]).unwrap();
        let image = q.map(&x).unwrap();
        assert_eq!(
            image,
            q.target().element_of_values(vec![ExtNat::Fin(4)]).unwrap()
        );
    }

    #[test]
    fn finite_quotient_congruence_matches_definition() {
        // zero-inf x e1, quotient by the ideal generated by (inf, 0)
        let m = CuModel::product(corpus::zero_inf(), CuModel::elementary(1));
        let zi = corpus::zero_inf();
        let e1 = CuModel::elementary(1);
        let gen = m
            .element_of_tuple(vec![
                zi.element_of_index(1).unwrap(),
                e1.zero(),
            ])
            .unwrap();
        let ideal = ideal_generated(&m, &gen).unwrap();
        let q = quotient(&m, &ideal).unwrap();
        let carrier = m.carrier().unwrap();
        let mtop = ideal.top();
        for x in &carrier {
            for y in &carrier {
                let lhs = q.target().leq(&q.map(x).unwrap(), &q.map(y).unwrap()).unwrap();
                let rhs = m.leq(x, &m.add(y, mtop).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "congruence mismatch");
            }
        }
    }

    #[test]
    fn finiteness_of_corpus_models() {
        let budget = Budget::default();
        let nbar = CuModel::nbar();
        let report = classify_finiteness(&nbar, &budget).unwrap();
        assert!(report.stably_finite.is_proven());
        assert!(report.weak_cancellation.is_proven());
        assert!(report.residually_stably_finite.is_proven());

        let zi = corpus::zero_inf();
        let report = classify_finiteness(&zi, &budget).unwrap();
        assert!(report.stably_finite.is_refuted());

        let report = classify_finiteness(&e2(), &budget).unwrap();
        assert!(report.stably_finite.is_refuted());
        assert!(report.residually_stably_finite.is_refuted());
    }

    #[test]
    fn axioms_hold_on_small_finite_models() {
        let budget = Budget::default();
        for model in [e2(), corpus::zero_inf(), corpus::trivial()] {
            let report = check_axioms(&model, &budget).unwrap();
            assert!(report.all_proven(), "axioms on {}", model.describe());
        }
    }

    #[test]
    fn scales_validate() {
        let m = e2();
        assert!(is_scale(&m, &Scale::full(&m)).unwrap());
        // {0} generates only {0}: not a scale
        let just_zero = Scale::from_members(&m, vec![true, false, false, false]).unwrap();
        assert!(!is_scale(&m, &just_zero).unwrap());
        // non-hereditary mask: not a scale
        let gap = Scale::from_members(&m, vec![true, false, true, true]).unwrap();
        assert!(!is_scale(&m, &gap).unwrap());

        let sierp = CuModel::lsc(corpus::sierpinski_space());
        let gen = sierp
            .element_of_values(vec![ExtNat::Fin(5), ExtNat::Fin(5)])
            .unwrap();
        let bounded = Scale::from_generators(&sierp, vec![gen]).unwrap();
        assert!(is_scale(&sierp, &bounded).unwrap());
    }

    #[test]
    fn validate_model_flags_broken_tables() {
        let ok = validate_model(&e2());
        assert!(ok.is_clean());

        // zero not least
        let bad = FiniteTable {
            names: vec!["0".into(), "a".into()],
            leq: vec![vec![true, false], vec![false, true]],
            add: vec![vec![0, 1], vec![1, 1]],
        };
        let report = validate_model(&CuModel::finite_table_unchecked(bad));
        assert!(report.violations.iter().any(|v| v.contains("zero-least")));

        // non-commutative entry cannot even be written into a symmetric table,
        // so break associativity instead: a+a=0 with order 0<a forces trouble
        let bad = FiniteTable {
            names: vec!["0".into(), "a".into()],
            leq: vec![vec![true, true], vec![false, true]],
            add: vec![vec![0, 1], vec![1, 0]],
        };
        let report = validate_model(&CuModel::finite_table_unchecked(bad));
        assert!(!report.is_clean());
    }
}
