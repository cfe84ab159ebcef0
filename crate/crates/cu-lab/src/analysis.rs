//! One-stop classification bundle for a model: axiom verdicts, finiteness,
//! per-element softness, divisibility, and the Glimm-type predicates.

use crate::error::CuResult;
use crate::glimm::{
    char_div_equiv, classify_divisibility, glimm_report, CharDivReport, DivisibilityReport,
    GlimmReport,
};
use crate::model::{CuModel, Element};
use crate::softness::{classify_softness, SoftnessReport};
use crate::structure::{check_axioms, classify_finiteness, AxiomReport, FinitenessReport, Scale};
use crate::Budget;

#[derive(Clone, Debug)]
pub struct ModelAnalysis {
    pub axioms: AxiomReport,
    pub finiteness: FinitenessReport,
    /// Carrier elements (finite) or a deterministic value-grid sample.
    pub elements: Vec<(Element, SoftnessReport)>,
    pub divisibility: DivisibilityReport,
    pub glimm: GlimmReport,
    pub char_div: CharDivReport,
}

/// The elements a report classifies: the whole carrier when finite, the
/// elements with values in `{0..3, ∞}` otherwise.
pub fn sample_elements(model: &CuModel) -> Vec<Element> {
    match model.carrier() {
        Some(c) => c,
        None => model.grid(3),
    }
}

pub fn analyze(model: &CuModel, scale: &Scale, budget: &Budget) -> CuResult<ModelAnalysis> {
    let mut elements = Vec::new();
    for e in sample_elements(model) {
        let report = classify_softness(model, &e, budget)?;
        elements.push((e, report));
    }
    Ok(ModelAnalysis {
        axioms: check_axioms(model, budget)?,
        finiteness: classify_finiteness(model, budget)?,
        elements,
        divisibility: classify_divisibility(model, scale, budget)?,
        glimm: glimm_report(model, scale, budget)?,
        char_div: char_div_equiv(model, scale, budget)?,
    })
}
