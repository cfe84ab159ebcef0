//! The theorem-verification harness: runs every structural fact the
//! predicates are known to satisfy against a concrete model and collects
//! violations.
//!
//! A clean run means the model is lawful, the predicate implications hold
//! on every classified element, the closed forms agree with the
//! definitional sweeps, quotient maps behave as generalized morphisms, the
//! equivalence theorems' conditions agree, and every produced witness or
//! certificate survives independent re-verification. Unknown verdicts are
//! exempt from implication checks throughout.

use crate::analysis::sample_elements;
use crate::error::CuResult;
use crate::glimm::{
    char_div_equiv, classify_divisibility, div_soft_divisor, element_weakly_divisible,
    has_2_splitting, has_abundance_soft, has_property_v, lhd_witness_below, lhd_witness_through,
    pre_cu_equiv, soft_divisor_all, soft_dominator,
};
use crate::model::{ChainDescriptor, CuModel, Element};
use crate::recheck;
use crate::softness::{
    classify_softness, soft_interpolate, soft_submonoid, softness_preservation_violations,
    strongly_soft_witness, sweep_functionally_soft, sweep_strongly_soft, sweep_weakly_soft,
};
use crate::structure::{
    check_axioms, classify_finiteness, enumerate_ideals, ideal_generated, quotient,
    validate_model, AxiomReport, Scale,
};
use crate::verdict::Verdict;
use crate::Budget;

/// One failed check.
#[derive(Clone, Debug)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

impl Violation {
    fn new(check: &str, detail: String) -> Violation {
        Violation { check: check.to_string(), detail }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}", self.check, self.detail)
    }
}

fn implies(premise: &Verdict, conclusion: &Verdict) -> bool {
    // unknown on either side is exempt
    !(premise.is_proven() && conclusion.is_refuted())
}

/// Model laws: validation plus the order-theoretic facts about way-below,
/// infinite multiples, chains, and basis chains.
pub fn check_core_laws(model: &CuModel, budget: &Budget) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    for v in validate_model(model).violations {
        out.push(Violation::new("validate", v));
    }
    let sample = match model.carrier() {
        Some(c) => c,
        None => model.grid(2),
    };
    let name = |e: &Element| model.format_element(e);

    for x in &sample {
        for y in &sample {
            if model.way_below(x, y)? && !model.leq(x, y)? {
                out.push(Violation::new(
                    "way-below-in-order",
                    format!("{} ≪ {} but not ≤", name(x), name(y)),
                ));
            }
        }
    }
    // auxiliarity: x' ≤ x ≪ y ≤ y' forces x' ≪ y'
    for x in &sample {
        for y in &sample {
            if !model.way_below(x, y)? {
                continue;
            }
            for xp in &sample {
                if !model.leq(xp, x)? {
                    continue;
                }
                for yp in &sample {
                    if model.leq(y, yp)? && !model.way_below(xp, yp)? {
                        out.push(Violation::new(
                            "auxiliarity",
                            format!(
                                "{} ≤ {} ≪ {} ≤ {} without {} ≪ {}",
                                name(xp),
                                name(x),
                                name(y),
                                name(yp),
                                name(xp),
                                name(yp)
                            ),
                        ));
                    }
                }
            }
        }
    }
    // additivity of way-below (O3)
    for x in &sample {
        for y in &sample {
            for xp in &sample {
                if !model.way_below(xp, x)? {
                    continue;
                }
                for yp in &sample {
                    if model.way_below(yp, y)? {
                        let sums = (model.add(xp, yp)?, model.add(x, y)?);
                        if !model.way_below(&sums.0, &sums.1)? {
                            out.push(Violation::new(
                                "way-below-additive",
                                format!(
                                    "{}+{} is not way-below {}+{}",
                                    name(xp),
                                    name(yp),
                                    name(x),
                                    name(y)
                                ),
                            ));
                        }
                    }
                }
            }
        }
    }
    // infinite multiples are idempotent fixed points
    for x in &sample {
        let omega = model.omega_multiple(x)?;
        if model.add(&omega, &omega)? != omega {
            out.push(Violation::new(
                "omega-idempotent",
                format!("∞·{} is not additively idempotent", name(x)),
            ));
        }
        if model.omega_multiple(&omega)? != omega {
            out.push(Violation::new(
                "omega-stable",
                format!("∞·(∞·{}) differs from ∞·{}", name(x), name(x)),
            ));
        }
    }
    // described-chain suprema are additive (O4 on descriptors)
    for x in &sample {
        for y in &sample {
            if !model.leq(x, y)? {
                continue;
            }
            for z in &sample {
                for w in &sample {
                    if !model.leq(z, w)? {
                        continue;
                    }
                    let a = ChainDescriptor::Stabilizing(vec![x.clone(), y.clone()]);
                    let b = ChainDescriptor::Stabilizing(vec![z.clone(), w.clone()]);
                    let sums = ChainDescriptor::Stabilizing(vec![
                        model.add(x, z)?,
                        model.add(y, w)?,
                    ]);
                    let lhs = model.add(&model.sup_chain(&a)?, &model.sup_chain(&b)?)?;
                    let rhs = model.sup_chain(&sums)?;
                    if lhs != rhs {
                        out.push(Violation::new(
                            "sup-additive",
                            format!(
                                "sup additivity fails at ({},{}) and ({},{})",
                                name(x),
                                name(y),
                                name(z),
                                name(w)
                            ),
                        ));
                    }
                }
            }
        }
    }
    // basis chains: terms are way-below, the supremum is the element
    for x in &sample {
        let chain = model.basis_chain(x)?;
        if model.sup_chain(&chain)? != *x {
            out.push(Violation::new(
                "basis-sup",
                format!("basis chain of {} has the wrong supremum", name(x)),
            ));
        }
        for term in model.basis_terms(x, budget.basis_depth)? {
            if !model.way_below(&term, x)? {
                out.push(Violation::new(
                    "basis-term",
                    format!("basis term {} of {} is not way-below it", name(&term), name(x)),
                ));
            }
        }
    }
    Ok(out)
}

/// The seven-implication diagram between the softness predicates,
/// including the two conditional arrows.
pub fn check_softness_diagram(model: &CuModel, budget: &Budget) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    let axioms = check_axioms(model, budget)?;
    let finiteness = classify_finiteness(model, budget)?;
    let rsf = &finiteness.residually_stably_finite;
    for x in sample_elements(model) {
        let r = classify_softness(model, &x, budget)?;
        let name = model.format_element(&x);
        let arrows: Vec<(&str, &Verdict, &Verdict, bool)> = vec![
            ("strongly⟹weakly", &r.strongly_soft, &r.weakly_soft, true),
            ("weakly⟹functionally", &r.weakly_soft, &r.functionally_soft, true),
            ("weakly⟹purely-noncompact", &r.weakly_soft, &r.purely_noncompact, true),
            (
                "purely-noncompact⟹weakly-purely-noncompact",
                &r.purely_noncompact,
                &r.weakly_purely_noncompact,
                true,
            ),
            (
                "functionally⟹weakly-purely-noncompact",
                &r.functionally_soft,
                &r.weakly_purely_noncompact,
                true,
            ),
            (
                "O5:weakly-purely-noncompact⟹functionally",
                &r.weakly_purely_noncompact,
                &r.functionally_soft,
                axioms.o5.is_proven(),
            ),
            (
                "O5+RSF:functionally⟹strongly",
                &r.functionally_soft,
                &r.strongly_soft,
                axioms.o5.is_proven() && rsf.is_proven(),
            ),
        ];
        for (label, premise, conclusion, applicable) in arrows {
            if applicable && !implies(premise, conclusion) {
                out.push(Violation::new(
                    "softness-diagram",
                    format!("{label} fails at element {name}"),
                ));
            }
        }
    }
    Ok(out)
}

/// On finite carriers the definitional sweeps must coincide with the
/// compact-element closed forms: idempotence for the strong/weak/purely
/// noncompact notions, stabilization of multiples for the other two.
pub fn check_compact_closed_forms(model: &CuModel, budget: &Budget) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    let Some(carrier) = model.carrier() else {
        return Ok(out);
    };
    for x in carrier {
        let name = model.format_element(&x);
        let idempotent = model.add(&x, &x)? == x;
        let stabilizes = model.multiple_stabilization(&x)?.is_some();
        let strong = sweep_strongly_soft(model, &x, budget)?;
        let weak = sweep_weakly_soft(model, &x, budget)?;
        let functional = sweep_functionally_soft(model, &x, budget)?;
        let pnc = crate::softness::purely_noncompact(model, &x, budget)?;
        let wpnc = crate::softness::weakly_purely_noncompact(model, &x, budget)?;
        for (label, verdict, expected) in [
            ("strongly-soft", &strong, idempotent),
            ("weakly-soft", &weak, idempotent),
            ("purely-noncompact", &pnc, idempotent),
            ("functionally-soft", &functional, stabilizes),
            ("weakly-purely-noncompact", &wpnc, stabilizes),
        ] {
            if verdict.as_bool() != Some(expected) {
                out.push(Violation::new(
                    "compact-closed-form",
                    format!("{label} sweep disagrees with the closed form at {name}"),
                ));
            }
        }
    }
    Ok(out)
}

/// The strongly soft elements of a finite model form a submonoid that
/// absorbs everything its members dominate.
pub fn check_soft_submonoid(model: &CuModel, _budget: &Budget) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    if model.carrier().is_none() {
        return Ok(out);
    }
    let soft = soft_submonoid(model)?;
    let name = |e: &Element| model.format_element(e);
    if !soft.contains(&model.zero()) {
        out.push(Violation::new("soft-submonoid", "zero is missing".into()));
    }
    for x in &soft {
        for y in &soft {
            let sum = model.add(x, y)?;
            if !soft.contains(&sum) {
                out.push(Violation::new(
                    "soft-submonoid",
                    format!("{} + {} leaves the submonoid", name(x), name(y)),
                ));
            }
        }
    }
    // absorption: x ≤ ∞y with y soft forces x + y soft
    for y in &soft {
        let bound = model.omega_multiple(y)?;
        for x in model.carrier().unwrap() {
            if model.leq(&x, &bound)? {
                let sum = model.add(&x, y)?;
                if !soft.contains(&sum) {
                    out.push(Violation::new(
                        "soft-absorption",
                        format!("{} ≤ ∞{} but {}+{} is not soft", name(&x), name(y), name(&x), name(y)),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// The three characterizations of strong softness agree on finite models:
/// the defining sweep, the relaxed form, and the relaxed form with a
/// strongly soft witness.
pub fn check_char_strong_soft(model: &CuModel, budget: &Budget) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    let Some(carrier) = model.carrier() else {
        return Ok(out);
    };
    let soft = soft_submonoid(model)?;
    for x in &carrier {
        let sweep = sweep_strongly_soft(model, x, budget)?.is_proven();
        let mut relaxed = true;
        let mut relaxed_soft = true;
        for xp in &carrier {
            if !model.way_below(xp, x)? {
                continue;
            }
            let mut any = false;
            let mut any_soft = false;
            for t in &carrier {
                if recheck::strong_witness_relaxed(model, xp, x, t)? {
                    any = true;
                    // form (2) additionally asks x ≤ ∞t with t strongly soft
                    if soft.contains(t) && model.leq(x, &model.omega_multiple(t)?)? {
                        any_soft = true;
                    }
                }
            }
            relaxed &= any;
            relaxed_soft &= any_soft;
        }
        if sweep != relaxed || sweep != relaxed_soft {
            out.push(Violation::new(
                "char-strong-soft",
                format!(
                    "characterizations disagree at {} (sweep {}, relaxed {}, soft witness {})",
                    model.format_element(x),
                    sweep,
                    relaxed,
                    relaxed_soft
                ),
            ));
        }
    }
    Ok(out)
}

/// Quotient maps are generalized morphisms: zero, addition, order,
/// way-below, and described suprema are preserved; finite targets are
/// covered; softness flags survive (the generalized-morphism fact).
pub fn check_quotient_contracts(model: &CuModel, budget: &Budget) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    let sample = sample_elements(model);
    for ideal in enumerate_ideals(model)? {
        let q = quotient(model, &ideal)?;
        let target = q.target();
        let tag = format!("ideal ∞-top {}", model.format_element(ideal.top()));
        if q.map(&model.zero())? != target.zero() {
            out.push(Violation::new("quotient-zero", tag.clone()));
        }
        for x in &sample {
            for y in &sample {
                let sum = model.add(x, y)?;
                if q.map(&sum)? != target.add(&q.map(x)?, &q.map(y)?)? {
                    out.push(Violation::new(
                        "quotient-additive",
                        format!("{tag}: at ({}, {})", model.format_element(x), model.format_element(y)),
                    ));
                }
                if model.leq(x, y)? && !target.leq(&q.map(x)?, &q.map(y)?)? {
                    out.push(Violation::new(
                        "quotient-monotone",
                        format!("{tag}: at ({}, {})", model.format_element(x), model.format_element(y)),
                    ));
                }
                if model.way_below(x, y)? && !target.way_below(&q.map(x)?, &q.map(y)?)? {
                    out.push(Violation::new(
                        "quotient-way-below",
                        format!("{tag}: at ({}, {})", model.format_element(x), model.format_element(y)),
                    ));
                }
            }
            // suprema of truncation families commute with the projection
            for level in [0, 1, 2, budget.basis_depth as u64] {
                let capped = model.cap_at_level(x, level)?;
                let image_of_cap = q.map(&capped)?;
                let cap_of_image = target.cap_at_level(&q.map(x)?, level)?;
                if image_of_cap != cap_of_image {
                    out.push(Violation::new(
                        "quotient-sup",
                        format!(
                            "{tag}: truncation at level {level} of {} does not commute",
                            model.format_element(x)
                        ),
                    ));
                }
            }
        }
        if let Some(target_carrier) = target.carrier() {
            if let Some(source_carrier) = model.carrier() {
                for t in &target_carrier {
                    let covered = source_carrier.iter().any(|s| {
                        q.map(s).map(|image| image == *t).unwrap_or(false)
                    });
                    if !covered {
                        out.push(Violation::new(
                            "quotient-surjective",
                            format!("{tag}: {} has no preimage", target.format_element(t)),
                        ));
                    }
                }
            }
        }
        for x in &sample {
            for flag in softness_preservation_violations(&q, x, budget)? {
                out.push(Violation::new(
                    "quotient-softness",
                    format!("{tag}: {flag} lost at {}", model.format_element(x)),
                ));
            }
        }
    }
    Ok(out)
}

/// Ideal membership agrees with generated-ideal containment, and the
/// enumerated lattice is made of distinct valid ideals.
pub fn check_ideal_laws(model: &CuModel, _budget: &Budget) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    let ideals = enumerate_ideals(model)?;
    for pair in ideals.windows(2) {
        if pair[0].top() == pair[1].top() {
            out.push(Violation::new("ideal-distinct", "duplicate ideal in enumeration".into()));
        }
    }
    let sample = sample_elements(model);
    for ideal in &ideals {
        if model.omega_multiple(ideal.top())? != *ideal.top() {
            out.push(Violation::new(
                "ideal-top",
                format!("{} is not ∞-stable", model.format_element(ideal.top())),
            ));
        }
        for x in &sample {
            let member = ideal.contains(model, x)?;
            let generated = ideal_generated(model, x)?;
            let contained = model.leq(generated.top(), ideal.top())?;
            if member != contained {
                out.push(Violation::new(
                    "ideal-membership",
                    format!(
                        "x ∈ I and ideal(x) ⊆ I disagree at {} in {}",
                        model.format_element(x),
                        model.format_element(ideal.top())
                    ),
                ));
            }
        }
    }
    Ok(out)
}

/// Weak cancellation forces residual stable finiteness, which forces
/// stable finiteness.
pub fn check_finiteness_chain(model: &CuModel, budget: &Budget) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    let report = classify_finiteness(model, budget)?;
    if !implies(&report.weak_cancellation, &report.residually_stably_finite) {
        out.push(Violation::new(
            "finiteness-chain",
            "weak cancellation without residual stable finiteness".into(),
        ));
    }
    if !implies(&report.residually_stably_finite, &report.stably_finite) {
        out.push(Violation::new(
            "finiteness-chain",
            "residual stable finiteness without stable finiteness".into(),
        ));
    }
    Ok(out)
}

/// The implications between the Glimm-type predicates, the agreement of
/// the equivalence theorems' conditions, and the guaranteed success of the
/// soft-divisor construction under divisibility.
pub fn check_glimm_implications(
    model: &CuModel,
    scale: &Scale,
    budget: &Budget,
) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    let axioms = check_axioms(model, budget)?;
    let divisibility = classify_divisibility(model, scale, budget)?;
    let abundance = has_abundance_soft(model, scale, budget)?;
    let property_v = has_property_v(model, scale, budget)?;
    let splitting = has_2_splitting(model, scale, budget)?;
    let divisor_all = soft_divisor_all(model, scale, budget)?;

    if !implies(
        &divisibility.two_omega_divisible,
        &divisibility.weakly_two_omega_divisible,
    ) {
        out.push(Violation::new(
            "divisible⟹weakly-divisible",
            "a single divisor repeated is already a weak divisor tuple".into(),
        ));
    }
    if !implies(&abundance, &property_v) {
        out.push(Violation::new(
            "abundance⟹property-V",
            "abundance proven but property (V) refuted".into(),
        ));
    }
    if axioms.o6.is_proven() && !implies(&abundance, &divisibility.weakly_two_omega_divisible) {
        out.push(Violation::new(
            "abundance⟹weakly-divisible",
            "under O6, abundance proven but weak divisibility refuted".into(),
        ));
    }

    // element-level: weak softness forces weak divisibility under O6, and
    // scale-wide weak divisibility lifts to the model under O6
    if axioms.o6.is_proven() {
        let mut all_scale_weakly = true;
        for x in sample_elements(model) {
            if !scale.contains(model, &x)? {
                continue;
            }
            let weakly_soft = if model.is_compact(&x)? {
                if model.add(&x, &x)? == x {
                    Verdict::proven()
                } else {
                    Verdict::refuted_with(vec![])
                }
            } else {
                sweep_weakly_soft(model, &x, budget)?
            };
            let weakly_div = element_weakly_divisible(model, &x, budget)?;
            if !implies(&weakly_soft, &weakly_div) {
                out.push(Violation::new(
                    "weakly-soft⟹weakly-divisible",
                    format!("fails at {}", model.format_element(&x)),
                ));
            }
            match weakly_div.as_bool() {
                Some(true) => {}
                Some(false) => all_scale_weakly = false,
                None => all_scale_weakly = false,
            }
        }
        if all_scale_weakly && divisibility.weakly_two_omega_divisible.is_refuted() {
            out.push(Violation::new(
                "scale-weakly-divisible⟹model",
                "every scale element weakly divisible but the model refutes it".into(),
            ));
        }
    }

    // the three equivalent shapes of having enough soft elements
    if axioms.all_proven() {
        let statuses = [&divisor_all, &abundance, &splitting];
        for i in 0..3 {
            for j in i + 1..3 {
                if let (Some(a), Some(b)) = (statuses[i].as_bool(), statuses[j].as_bool()) {
                    if a != b {
                        out.push(Violation::new(
                            "soft-abundance-equivalence",
                            format!(
                                "conditions {} and {} disagree ({} vs {})",
                                i + 1,
                                j + 1,
                                statuses[i].status,
                                statuses[j].status
                            ),
                        ));
                    }
                }
            }
        }
    }

    // the five characterizations of full divisibility agree wherever
    // O5–O7 hold (the claim needs them; without O5 the third condition
    // genuinely separates from the others already at carrier size 5)
    if axioms.all_proven() {
        let char_div = char_div_equiv(model, scale, budget)?;
        if let Some((i, j)) = char_div.disagreement {
            out.push(Violation::new(
                "divisibility-equivalence",
                format!("conditions {} and {} disagree", i + 1, j + 1),
            ));
        }
    }

    // under O5 and divisibility, every element has a soft k-divisor
    if axioms.o5.is_proven() && divisibility.two_omega_divisible.is_proven() {
        for x in sample_elements(model) {
            for k in 2..=budget.existential as u64 {
                let v = div_soft_divisor(
                    model,
                    &x,
                    k,
                    &axioms,
                    &divisibility.two_omega_divisible,
                    budget,
                )?;
                match v.as_bool() {
                    Some(true) => {
                        let y = &v.witness[0].1;
                        if !recheck::soft_divisor(model, &x, y, k, budget)? {
                            out.push(Violation::new(
                                "soft-divisor-recheck",
                                format!(
                                    "witness for x={}, k={k} fails re-verification",
                                    model.format_element(&x)
                                ),
                            ));
                        }
                    }
                    Some(false) => {
                        out.push(Violation::new(
                            "soft-divisor-exists",
                            format!(
                                "divisible model refuses a soft {k}-divisor at {}",
                                model.format_element(&x)
                            ),
                        ));
                    }
                    None => {}
                }
            }
        }
    }
    Ok(out)
}

/// Runs every witness-producing construction whose preconditions hold and
/// re-verifies the outputs against the raw definitions.
pub fn check_constructions(
    model: &CuModel,
    scale: &Scale,
    budget: &Budget,
) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    let axioms: AxiomReport = check_axioms(model, budget)?;
    let splitting = has_2_splitting(model, scale, budget)?;
    let abundance = has_abundance_soft(model, scale, budget)?;
    let sample = sample_elements(model);
    let name = |e: &Element| model.format_element(e);

    // way-below pairs in the sample (bounded for large grids)
    let mut pairs = Vec::new();
    for x in &sample {
        for xp in &sample {
            if model.way_below(xp, x)? {
                pairs.push((xp.clone(), x.clone()));
            }
        }
        if pairs.len() > 400 {
            break;
        }
    }

    for (xp, x) in &pairs {
        let v = strongly_soft_witness(model, xp, x, budget)?;
        match v.as_bool() {
            Some(true) => {
                let t = &v.witness[0].1;
                if !recheck::strong_witness(model, xp, x, t)? {
                    out.push(Violation::new(
                        "strong-witness-recheck",
                        format!("witness at ({}, {}) fails", name(xp), name(x)),
                    ));
                }
            }
            Some(false) => {
                // the certificate must be a genuine dead end
                if let Some(carrier) = model.carrier() {
                    for t in &carrier {
                        if recheck::strong_witness(model, xp, x, t)? {
                            out.push(Violation::new(
                                "strong-witness-certificate",
                                format!("refutation at ({}, {}) missed t={}", name(xp), name(x), name(t)),
                            ));
                        }
                    }
                }
            }
            None => {}
        }
    }

    // ideal-membership interpolation witnesses
    let max = model.max_element();
    for (xp, x) in pairs.iter().take(60) {
        let v = lhd_witness_below(model, xp, x, &max, budget)?;
        if v.is_proven() && !recheck::lhd_below(model, xp, &max, &v.witness[0].1)? {
            out.push(Violation::new(
                "lhd-below-recheck",
                format!("refinement at ({}, {}) fails", name(xp), name(x)),
            ));
        }
        if axioms.o6.is_proven() && axioms.o7.is_proven() {
            let v = lhd_witness_through(model, xp, x, &max, &axioms, budget)?;
            if v.is_proven() && !recheck::lhd_through(model, xp, x, &max, &v.witness[0].1)? {
                out.push(Violation::new(
                    "lhd-through-recheck",
                    format!("interpolation at ({}, {}) fails", name(xp), name(x)),
                ));
            }
        }
    }

    if axioms.all_proven() && splitting.is_proven() {
        for (xp, x) in pairs.iter().take(60) {
            if !(scale.contains(model, xp)? && scale.contains(model, x)?) {
                continue;
            }
            let v = pre_cu_equiv(model, scale, xp, x, &axioms, &splitting, budget)?;
            if v.is_proven() {
                let y = &v.witness.iter().find(|(k, _)| k == "y").unwrap().1;
                let z = &v.witness.iter().find(|(k, _)| k == "z").unwrap().1;
                if !recheck::generating_split(model, xp, x, y, z)? {
                    out.push(Violation::new(
                        "pre-cu-equiv-recheck",
                        format!("splitting at ({}, {}) fails", name(xp), name(x)),
                    ));
                }
            }
        }
        for x in &sample {
            if !scale.contains(model, x)? {
                continue;
            }
            let v = soft_dominator(model, scale, x, &axioms, &splitting, budget)?;
            match v.as_bool() {
                Some(true) => {
                    let y = &v.witness[0].1;
                    if !recheck::dominator(model, x, y, budget)? {
                        out.push(Violation::new(
                            "soft-dominator-recheck",
                            format!("dominator of {} fails", name(x)),
                        ));
                    }
                }
                Some(false) => {
                    out.push(Violation::new(
                        "soft-dominator-exists",
                        format!("2-splitting proven but no dominator at {}", name(x)),
                    ));
                }
                None => {}
            }
        }
    }

    if abundance.is_proven() {
        for (xp, x) in pairs.iter().take(60) {
            if !scale.contains(model, x)? {
                continue;
            }
            let x_soft = if model.is_compact(x)? {
                model.add(x, x)? == *x
            } else {
                sweep_strongly_soft(model, x, budget)?.is_proven()
            };
            if !x_soft {
                continue;
            }
            let v = soft_interpolate(model, scale, xp, x, &abundance, budget)?;
            if v.is_proven() {
                let y = &v.witness.last().unwrap().1;
                if !recheck::soft_between(model, xp, x, y, budget)? {
                    out.push(Violation::new(
                        "soft-interpolate-recheck",
                        format!("interpolant at ({}, {}) fails", name(xp), name(x)),
                    ));
                }
            }
        }
    }

    let divisibility = classify_divisibility(model, scale, budget)?;
    if axioms.o5.is_proven() && divisibility.two_omega_divisible.is_proven() {
        for x in sample.iter().take(20) {
            let chain = model.basis_chain(x)?;
            let seq = crate::glimm::k_div_seq(
                model,
                2,
                &chain,
                &axioms,
                &divisibility.two_omega_divisible,
                budget,
            )?;
            if seq.verdict.is_proven() {
                let summands = seq.summands.as_ref().unwrap();
                if !recheck::divisor_sequence(model, 2, x, summands)? {
                    out.push(Violation::new(
                        "divisor-sequence-recheck",
                        format!("sequence for {} fails", name(x)),
                    ));
                }
            }
            for k in [2, 3] {
                let v = div_soft_divisor(
                    model,
                    x,
                    k,
                    &axioms,
                    &divisibility.two_omega_divisible,
                    budget,
                )?;
                if v.is_proven() {
                    let y = &v.witness[0].1;
                    if !recheck::soft_divisor(model, x, y, k, budget)? {
                        out.push(Violation::new(
                            "soft-divisor-recheck",
                            format!("divisor for x={}, k={k} fails", name(x)),
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs the whole harness.
pub fn run_harness(model: &CuModel, scale: &Scale, budget: &Budget) -> CuResult<Vec<Violation>> {
    let mut out = Vec::new();
    out.extend(check_core_laws(model, budget)?);
    out.extend(check_softness_diagram(model, budget)?);
    out.extend(check_compact_closed_forms(model, budget)?);
    out.extend(check_soft_submonoid(model, budget)?);
    out.extend(check_char_strong_soft(model, budget)?);
    out.extend(check_quotient_contracts(model, budget)?);
    out.extend(check_ideal_laws(model, budget)?);
    out.extend(check_finiteness_chain(model, budget)?);
    out.extend(check_glimm_implications(model, scale, budget)?);
    out.extend(check_constructions(model, scale, budget)?);
    Ok(out)
}
