//! Rendering of classification results: human-readable text and a
//! machine-readable JSON document (same notation as the input format).
//!
//! Reports are byte-stable across runs: element samples, sweeps, and
//! witness selection are deterministic upstream, and JSON maps are emitted
//! with sorted keys.

use serde_json::{json, Map, Value};

use crate::analysis::ModelAnalysis;
use crate::format::element_json;
use crate::model::{CuModel, Element};
use crate::search::SearchResult;
use crate::structure::Scale;
use crate::verdict::Verdict;

fn bindings_json(model: &CuModel, bindings: &[(String, Element)]) -> Value {
    Value::from(
        bindings
            .iter()
            .map(|(name, e)| json!({ "name": name, "value": element_json(model, e) }))
            .collect::<Vec<_>>(),
    )
}

pub fn verdict_json(model: &CuModel, v: &Verdict) -> Value {
    let mut map = Map::new();
    map.insert("status".into(), Value::from(v.status.to_string()));
    if !v.witness.is_empty() {
        map.insert("witness".into(), bindings_json(model, &v.witness));
    }
    if !v.certificate.is_empty() {
        map.insert("certificate".into(), bindings_json(model, &v.certificate));
    }
    if let Some(note) = &v.budget_note {
        map.insert("budget_note".into(), Value::from(note.clone()));
    }
    Value::Object(map)
}

fn verdict_text(model: &CuModel, v: &Verdict) -> String {
    let mut s = v.status.to_string();
    let render = |bindings: &[(String, Element)]| {
        bindings
            .iter()
            .map(|(n, e)| format!("{n}={}", model.format_element(e)))
            .collect::<Vec<_>>()
            .join(", ")
    };
    if !v.witness.is_empty() {
        s.push_str(&format!(" [{}]", render(&v.witness)));
    }
    if !v.certificate.is_empty() {
        s.push_str(&format!(" [at {}]", render(&v.certificate)));
    }
    if let Some(note) = &v.budget_note {
        s.push_str(&format!(" ({note})"));
    }
    s
}

pub fn analysis_json(model: &CuModel, scale: &Scale, analysis: &ModelAnalysis) -> Value {
    let elements: Vec<Value> = analysis
        .elements
        .iter()
        .map(|(e, report)| {
            let mut flags = Map::new();
            for (name, v) in report.flags() {
                flags.insert(name.to_string(), verdict_json(model, v));
            }
            json!({
                "element": element_json(model, e),
                "softness": Value::Object(flags),
            })
        })
        .collect();
    let k_div: Vec<Value> = analysis
        .divisibility
        .k_omega_divisible
        .iter()
        .map(|(k, v)| json!({ "k": k, "verdict": verdict_json(model, v) }))
        .collect();
    json!({
        "model": serde_json::from_str::<Value>(&crate::format::serialize_model(model))
            .expect("serialized model is json"),
        "scale": scale.describe(model),
        "axioms": {
            "O5": verdict_json(model, &analysis.axioms.o5),
            "O6": verdict_json(model, &analysis.axioms.o6),
            "O7": verdict_json(model, &analysis.axioms.o7),
        },
        "finiteness": {
            "stably_finite": verdict_json(model, &analysis.finiteness.stably_finite),
            "residually_stably_finite":
                verdict_json(model, &analysis.finiteness.residually_stably_finite),
            "weak_cancellation": verdict_json(model, &analysis.finiteness.weak_cancellation),
        },
        "elements": elements,
        "divisibility": {
            "two_omega_divisible":
                verdict_json(model, &analysis.divisibility.two_omega_divisible),
            "weakly_two_omega_divisible":
                verdict_json(model, &analysis.divisibility.weakly_two_omega_divisible),
            "k_omega_divisible": k_div,
        },
        "glimm": {
            "ideal_filtered": verdict_json(model, &analysis.glimm.ideal_filtered),
            "property_v": verdict_json(model, &analysis.glimm.property_v),
            "abundance_soft": verdict_json(model, &analysis.glimm.abundance_soft),
            "hereditary_2_splitting":
                verdict_json(model, &analysis.glimm.hereditary_2_splitting),
            "soft_divisor_all": verdict_json(model, &analysis.glimm.soft_divisor_all),
        },
        "divisibility_equivalence": {
            "conditions": analysis
                .char_div
                .conditions
                .iter()
                .map(|c| verdict_json(model, c))
                .collect::<Vec<_>>(),
            "agreement": analysis.char_div.agreement_total(),
            "caveat": crate::glimm::CHAR_DIV_CAVEAT,
        },
    })
}

pub fn analysis_text(model: &CuModel, scale: &Scale, analysis: &ModelAnalysis) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };
    push(&mut out, format!("model: {}", model.describe()));
    push(&mut out, format!("scale: {}", scale.describe(model)));
    push(&mut out, String::new());
    push(&mut out, "axioms:".into());
    push(&mut out, format!("  O5: {}", verdict_text(model, &analysis.axioms.o5)));
    push(&mut out, format!("  O6: {}", verdict_text(model, &analysis.axioms.o6)));
    push(&mut out, format!("  O7: {}", verdict_text(model, &analysis.axioms.o7)));
    push(&mut out, "finiteness:".into());
    push(
        &mut out,
        format!(
            "  stably finite: {}",
            verdict_text(model, &analysis.finiteness.stably_finite)
        ),
    );
    push(
        &mut out,
        format!(
            "  residually stably finite: {}",
            verdict_text(model, &analysis.finiteness.residually_stably_finite)
        ),
    );
    push(
        &mut out,
        format!(
            "  weak cancellation: {}",
            verdict_text(model, &analysis.finiteness.weak_cancellation)
        ),
    );
    push(&mut out, String::new());
    push(&mut out, "elements:".into());
    for (e, report) in &analysis.elements {
        push(&mut out, format!("  {}:", model.format_element(e)));
        for (name, v) in report.flags() {
            push(&mut out, format!("    {name}: {}", verdict_text(model, v)));
        }
    }
    push(&mut out, String::new());
    push(&mut out, "divisibility:".into());
    push(
        &mut out,
        format!(
            "  (2,ω)-divisible: {}",
            verdict_text(model, &analysis.divisibility.two_omega_divisible)
        ),
    );
    push(
        &mut out,
        format!(
            "  weakly (2,ω)-divisible: {}",
            verdict_text(model, &analysis.divisibility.weakly_two_omega_divisible)
        ),
    );
    for (k, v) in &analysis.divisibility.k_omega_divisible {
        push(&mut out, format!("  ({k},ω)-divisible: {}", verdict_text(model, v)));
    }
    push(&mut out, String::new());
    push(&mut out, "glimm predicates:".into());
    push(
        &mut out,
        format!("  ideal-filtered: {}", verdict_text(model, &analysis.glimm.ideal_filtered)),
    );
    push(
        &mut out,
        format!("  property (V): {}", verdict_text(model, &analysis.glimm.property_v)),
    );
    push(
        &mut out,
        format!(
            "  abundance of strongly soft: {}",
            verdict_text(model, &analysis.glimm.abundance_soft)
        ),
    );
    push(
        &mut out,
        format!(
            "  hereditary 2-splitting: {}",
            verdict_text(model, &analysis.glimm.hereditary_2_splitting)
        ),
    );
    push(
        &mut out,
        format!(
            "  soft full divisors: {}",
            verdict_text(model, &analysis.glimm.soft_divisor_all)
        ),
    );
    push(&mut out, String::new());
    push(&mut out, "divisibility equivalence:".into());
    for (i, c) in analysis.char_div.conditions.iter().enumerate() {
        push(&mut out, format!("  ({}) {}", i + 1, verdict_text(model, c)));
    }
    push(
        &mut out,
        format!(
            "  agreement: {}",
            if analysis.char_div.agreement_total() { "total" } else { "BROKEN" }
        ),
    );
    push(&mut out, format!("  note: {}", crate::glimm::CHAR_DIV_CAVEAT));
    out
}

pub fn search_results_json(results: &[SearchResult]) -> Value {
    Value::from(
        results
            .iter()
            .map(|hit| {
                let scale = Scale::full(&hit.model);
                json!({
                    "size": hit.size,
                    "classification": analysis_json(&hit.model, &scale, &hit.analysis),
                })
            })
            .collect::<Vec<_>>(),
    )
}

pub fn search_results_text(results: &[SearchResult]) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} hit(s)\n", results.len()));
    for (i, hit) in results.iter().enumerate() {
        out.push_str(&format!("\n== hit {} (size {}) ==\n", i + 1, hit.size));
        out.push_str(&crate::format::serialize_model(&hit.model));
        out.push('\n');
        let scale = Scale::full(&hit.model);
        out.push_str(&analysis_text(&hit.model, &scale, &hit.analysis));
    }
    out
}
