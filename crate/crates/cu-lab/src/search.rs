//! Exhaustive enumeration of small models up to isomorphism, canonical
//! forms, and targeted counterexample hunting.
//!
//! A size-n model is a partial order on `{0, …, n-1}` with least element 0
//! together with a commutative, order-compatible monoid table with neutral
//! element 0. Every such structure is a valid model here (suprema of
//! increasing sequences are eventual values), so the enumeration covers all
//! of them exactly once up to isomorphisms fixing 0.
//!
//! The isomorphism rejection uses minimal-table canonical forms: the
//! lexicographically least (order matrix, addition table) pair over all
//! carrier permutations fixing 0. At the sizes this module targets (n ≤ 7)
//! no external canonical labeling machinery is needed.
//!
//! Note: finite models cannot separate weak from strong softness (both
//! reduce to `2x = x` on compact elements), so an empty hunt on a target
//! splitting those two is expected, not evidence.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{analyze, ModelAnalysis};
use crate::error::{CuError, CuResult};
use crate::model::{CuModel, FiniteTable};
use crate::structure::{CuAxiom, Scale};
use crate::Budget;

/// Canonical key of a finite model: permutation-minimal order bits and
/// addition entries, comparable and hashable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTable {
    pub size: usize,
    key: Vec<u8>,
}

/// Computes the canonical form of a finite model (any finite kind is
/// materialized as a table first).
pub fn canonical_form(model: &CuModel) -> CuResult<CanonicalTable> {
    let table = model.to_finite_table().ok_or_else(|| {
        CuError::UnsupportedModel("canonical forms exist only for finite models".into())
    })?;
    Ok(canonical_form_of_table(&table))
}

fn table_key(leq: &[Vec<bool>], add: &[Vec<usize>], perm: &[usize]) -> Vec<u8> {
    let n = perm.len();
    let mut key = Vec::with_capacity(2 * n * n);
    // position[p] = new index of old element p
    let mut position = vec![0usize; n];
    for (new_idx, &old) in perm.iter().enumerate() {
        position[old] = new_idx;
    }
    let mut grid = vec![0u8; n * n];
    for (new_i, &old_i) in perm.iter().enumerate() {
        for (new_j, &old_j) in perm.iter().enumerate() {
            grid[new_i * n + new_j] = u8::from(leq[old_i][old_j]);
        }
    }
    key.extend_from_slice(&grid);
    for (new_i, &old_i) in perm.iter().enumerate() {
        for (new_j, &old_j) in perm.iter().enumerate() {
            grid[new_i * n + new_j] = position[add[old_i][old_j]] as u8;
        }
    }
    key.extend_from_slice(&grid);
    key
}

fn canonical_form_of_table(table: &FiniteTable) -> CanonicalTable {
    let n = table.size();
    let mut best: Option<Vec<u8>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute_fixing_zero(&mut perm, 1, &mut |p| {
        let key = table_key(&table.leq, &table.add, p);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    });
    CanonicalTable { size: n, key: best.expect("at least the identity permutation") }
}

fn permute_fixing_zero(perm: &mut Vec<usize>, from: usize, visit: &mut impl FnMut(&[usize])) {
    if from >= perm.len() {
        visit(perm);
        return;
    }
    for i in from..perm.len() {
        perm.swap(from, i);
        permute_fixing_zero(perm, from + 1, visit);
        perm.swap(from, i);
    }
}

/// Rebuilds the model a canonical key describes.
pub fn model_of_canonical(canon: &CanonicalTable) -> CuModel {
    let n = canon.size;
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| canon.key[i * n + j] == 1).collect())
        .collect();
    let add: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| canon.key[n * n + i * n + j] as usize).collect())
        .collect();
    let names = (0..n)
        .map(|i| if i == 0 { "0".to_string() } else { format!("x{i}") })
        .collect();
    CuModel::finite_table_unchecked(FiniteTable { names, leq, add })
}

/// All partial orders on `{0..n-1}` with 0 as least element.
///
/// The nonzero part is grown one point at a time: a new point picks a
/// down-closed below-set and an up-closed above-set whose cross pairs are
/// already related. Every labeled poset arises from exactly one such
/// history, so there is no filtering and no duplication.
#[allow(clippy::needless_range_loop)] // matrix coordinates
fn posets_with_least(n: usize) -> Vec<Vec<Vec<bool>>> {
    let m = n - 1;
    // leq matrices on the nonzero points only
    let mut partial: Vec<Vec<Vec<bool>>> = vec![vec![]];
    for i in 0..m {
        let mut next = Vec::new();
        for p in &partial {
            for below in 0u32..(1 << i) {
                // below-set must be down-closed
                let down_ok = (0..i).all(|a| {
                    below >> a & 1 == 0
                        || (0..i).all(|b| !p[b][a] || below >> b & 1 == 1)
                });
                if !down_ok {
                    continue;
                }
                for above in 0u32..(1 << i) {
                    if below & above != 0 {
                        continue;
                    }
                    let up_ok = (0..i).all(|a| {
                        above >> a & 1 == 0
                            || (0..i).all(|b| !p[a][b] || above >> b & 1 == 1)
                    });
                    if !up_ok {
                        continue;
                    }
                    // transitivity across the new point
                    let cross_ok = (0..i).all(|b| {
                        below >> b & 1 == 0
                            || (0..i).all(|a| above >> a & 1 == 0 || p[b][a])
                    });
                    if !cross_ok {
                        continue;
                    }
                    let mut q: Vec<Vec<bool>> =
                        p.iter().map(|row| row.clone()).collect();
                    for row in &mut q {
                        row.push(false);
                    }
                    q.push(vec![false; i + 1]);
                    q[i][i] = true;
                    for b in 0..i {
                        if below >> b & 1 == 1 {
                            q[b][i] = true;
                        }
                        if above >> b & 1 == 1 {
                            q[i][b] = true;
                        }
                    }
                    next.push(q);
                }
            }
        }
        partial = next;
    }
    // lift to the full carrier with 0 adjoined as least element
    partial
        .into_iter()
        .map(|p| {
            let mut leq = vec![vec![false; n]; n];
            for j in 0..n {
                leq[0][j] = true;
            }
            leq[0][0] = true;
            for a in 0..m {
                for b in 0..m {
                    leq[a + 1][b + 1] = p[a][b];
                }
            }
            leq
        })
        .collect()
}

/// Emits every lawful addition table over a fixed order, by depth-first
/// fill of the upper triangle with positivity, monotonicity, and
/// associativity pruning.
#[allow(clippy::needless_range_loop)] // matrix coordinates
fn fill_tables(n: usize, leq: &[Vec<bool>], emit: &mut impl FnMut(&FiniteTable)) {
    let mut entries = Vec::new();
    for i in 1..n {
        for j in i..n {
            entries.push((i, j));
        }
    }
    let mut add = vec![vec![usize::MAX; n]; n];
    for j in 0..n {
        add[0][j] = j;
        add[j][0] = j;
    }

    fn assigned(add: &[Vec<usize>], i: usize, j: usize) -> bool {
        add[i][j] != usize::MAX
    }

    fn monotone_ok(n: usize, leq: &[Vec<bool>], add: &[Vec<usize>], i: usize, j: usize) -> bool {
        let v = add[i][j];
        for a in 0..n {
            for b in 0..n {
                if !assigned(add, a, b) {
                    continue;
                }
                if leq[a][i] && leq[b][j] && !leq[add[a][b]][v] {
                    return false;
                }
                if leq[i][a] && leq[j][b] && !leq[v][add[a][b]] {
                    return false;
                }
            }
        }
        true
    }

    fn assoc_ok(n: usize, add: &[Vec<usize>]) -> bool {
        for a in 0..n {
            for b in 0..n {
                if !assigned(add, a, b) {
                    continue;
                }
                for c in 0..n {
                    if !assigned(add, b, c) {
                        continue;
                    }
                    let ab = add[a][b];
                    let bc = add[b][c];
                    if assigned(add, ab, c) && assigned(add, a, bc) && add[ab][c] != add[a][bc] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(
        n: usize,
        leq: &[Vec<bool>],
        entries: &[(usize, usize)],
        idx: usize,
        add: &mut Vec<Vec<usize>>,
        emit: &mut impl FnMut(&FiniteTable),
    ) {
        if idx == entries.len() {
            let names = (0..n)
                .map(|i| if i == 0 { "0".to_string() } else { format!("x{i}") })
                .collect();
            let table = FiniteTable { names, leq: leq.to_vec(), add: add.clone() };
            debug_assert!(table.violations().is_empty());
            emit(&table);
            return;
        }
        let (i, j) = entries[idx];
        for v in 0..n {
            // positivity: both summands sit below their sum
            if !(leq[i][v] && leq[j][v]) {
                continue;
            }
            add[i][j] = v;
            add[j][i] = v;
            if monotone_ok(n, leq, add, i, j) && assoc_ok(n, add) {
                dfs(n, leq, entries, idx + 1, add, emit);
            }
            add[i][j] = usize::MAX;
            add[j][i] = usize::MAX;
        }
    }

    dfs(n, leq, &entries, 0, &mut add, emit);
}

/// Every commutative, zero-least, order-compatible monoid table of size n,
/// exactly once up to isomorphisms fixing zero, in canonical order.
pub fn enumerate_models(n: usize) -> Vec<CuModel> {
    assert!(n >= 1, "models have at least the zero element");
    if n == 1 {
        return vec![crate::corpus::trivial()];
    }
    let posets = posets_with_least(n);
    let mut canon: Vec<CanonicalTable> = posets
        .par_iter()
        .map(|leq| {
            let mut local = Vec::new();
            fill_tables(n, leq, &mut |table| {
                local.push(canonical_form_of_table(table));
            });
            local
        })
        .reduce(Vec::new, |mut acc, mut part| {
            acc.append(&mut part);
            acc
        });
    canon.sort();
    canon.dedup();
    canon.iter().map(model_of_canonical).collect()
}

/// A boolean query over the classification atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetExpr {
    Const(bool),
    Atom(String),
    Not(Box<TargetExpr>),
    And(Box<TargetExpr>, Box<TargetExpr>),
    Or(Box<TargetExpr>, Box<TargetExpr>),
}

/// Parses a target expression: atoms, `and`/`or`/`not` (also `&`, `|`,
/// `!`, `∧`, `∨`, `¬`), parentheses, `true`, `false`.
pub fn parse_target(input: &str) -> CuResult<TargetExpr> {
    let tokens = lex_target(input)?;
    let mut pos = 0;
    let expr = parse_or(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(CuError::ParseError(format!(
            "unexpected trailing token `{}` in target expression",
            tokens[pos]
        )));
    }
    Ok(expr)
}

fn lex_target(input: &str) -> CuResult<Vec<String>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '(' | ')' | '!' | '¬' | '∧' | '∨' | '&' | '|' => {
                chars.next();
                // collapse doubled && and ||
                if (c == '&' || c == '|') && chars.peek() == Some(&c) {
                    chars.next();
                }
                tokens.push(c.to_string());
            }
            _ if c.is_alphanumeric() || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(word);
            }
            _ => {
                return Err(CuError::ParseError(format!(
                    "unexpected character `{c}` in target expression"
                )))
            }
        }
    }
    Ok(tokens)
}

fn parse_or(tokens: &[String], pos: &mut usize) -> CuResult<TargetExpr> {
    let mut left = parse_and(tokens, pos)?;
    while *pos < tokens.len() && (tokens[*pos] == "or" || tokens[*pos] == "|" || tokens[*pos] == "∨")
    {
        *pos += 1;
        let right = parse_and(tokens, pos)?;
        left = TargetExpr::Or(Box::new(left), Box::new(right));
    }
    Ok(left)
}

fn parse_and(tokens: &[String], pos: &mut usize) -> CuResult<TargetExpr> {
    let mut left = parse_not(tokens, pos)?;
    while *pos < tokens.len()
        && (tokens[*pos] == "and" || tokens[*pos] == "&" || tokens[*pos] == "∧")
    {
        *pos += 1;
        let right = parse_not(tokens, pos)?;
        left = TargetExpr::And(Box::new(left), Box::new(right));
    }
    Ok(left)
}

fn parse_not(tokens: &[String], pos: &mut usize) -> CuResult<TargetExpr> {
    if *pos < tokens.len() && (tokens[*pos] == "not" || tokens[*pos] == "!" || tokens[*pos] == "¬")
    {
        *pos += 1;
        let inner = parse_not(tokens, pos)?;
        return Ok(TargetExpr::Not(Box::new(inner)));
    }
    parse_atom(tokens, pos)
}

fn parse_atom(tokens: &[String], pos: &mut usize) -> CuResult<TargetExpr> {
    if *pos >= tokens.len() {
        return Err(CuError::ParseError(
            "target expression ended unexpectedly".into(),
        ));
    }
    let token = tokens[*pos].clone();
    *pos += 1;
    match token.as_str() {
        "(" => {
            let inner = parse_or(tokens, pos)?;
            if *pos >= tokens.len() || tokens[*pos] != ")" {
                return Err(CuError::ParseError("unbalanced parenthesis".into()));
            }
            *pos += 1;
            Ok(inner)
        }
        "true" => Ok(TargetExpr::Const(true)),
        "false" => Ok(TargetExpr::Const(false)),
        ")" => Err(CuError::ParseError("unexpected `)`".into())),
        name => Ok(TargetExpr::Atom(name.to_string())),
    }
}

const SOFT_FLAGS: [&str; 5] = [
    "strongly_soft",
    "weakly_soft",
    "functionally_soft",
    "purely_noncompact",
    "weakly_purely_noncompact",
];

/// Evaluates a target expression against an analysis. Existential element
/// atoms (`exists_*`) range over the nonzero elements — zero satisfies
/// every softness notion, which would make the quantifier vacuous.
pub fn eval_target(expr: &TargetExpr, analysis: &ModelAnalysis, model: &CuModel) -> CuResult<bool> {
    match expr {
        TargetExpr::Const(b) => Ok(*b),
        TargetExpr::Not(inner) => Ok(!eval_target(inner, analysis, model)?),
        TargetExpr::And(a, b) => {
            Ok(eval_target(a, analysis, model)? && eval_target(b, analysis, model)?)
        }
        TargetExpr::Or(a, b) => {
            Ok(eval_target(a, analysis, model)? || eval_target(b, analysis, model)?)
        }
        TargetExpr::Atom(name) => eval_atom(name, analysis, model),
    }
}

fn eval_atom(name: &str, analysis: &ModelAnalysis, model: &CuModel) -> CuResult<bool> {
    let verdict = match name {
        "two_omega_divisible" => Some(&analysis.divisibility.two_omega_divisible),
        "weakly_divisible" | "weakly_two_omega_divisible" => {
            Some(&analysis.divisibility.weakly_two_omega_divisible)
        }
        "ideal_filtered" => Some(&analysis.glimm.ideal_filtered),
        "property_v" => Some(&analysis.glimm.property_v),
        "abundance" | "abundance_soft" => Some(&analysis.glimm.abundance_soft),
        "two_splitting" | "hereditary_2_splitting" => {
            Some(&analysis.glimm.hereditary_2_splitting)
        }
        "soft_divisor_all" => Some(&analysis.glimm.soft_divisor_all),
        "stably_finite" => Some(&analysis.finiteness.stably_finite),
        "residually_stably_finite" => Some(&analysis.finiteness.residually_stably_finite),
        "weak_cancellation" => Some(&analysis.finiteness.weak_cancellation),
        _ => None,
    };
    if let Some(v) = verdict {
        return Ok(v.is_proven());
    }
    for (prefix, existential) in [("exists_", true), ("forall_", false)] {
        if let Some(flag) = name.strip_prefix(prefix) {
            let zero = model.zero();
            let mut all = true;
            let mut any = false;
            for (e, report) in &analysis.elements {
                let holds = match flag {
                    "compact" => model.is_compact(e)?,
                    "idempotent" => model.add(e, e)? == *e,
                    _ if SOFT_FLAGS.contains(&flag) => report
                        .flags()
                        .iter()
                        .find(|(n, _)| *n == flag)
                        .map(|(_, v)| v.is_proven())
                        .unwrap(),
                    _ => {
                        return Err(CuError::ParseError(format!(
                            "unknown element flag `{flag}` in target expression"
                        )))
                    }
                };
                if existential && *e != zero && holds {
                    any = true;
                }
                if !holds {
                    all = false;
                }
            }
            return Ok(if existential { any } else { all });
        }
    }
    Err(CuError::ParseError(format!(
        "unknown atom `{name}` in target expression"
    )))
}

/// A counterexample-hunt request.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchSpec {
    pub max_size: usize,
    #[serde(default)]
    pub required_axioms: Vec<String>,
    pub target: String,
    #[serde(default)]
    pub limit: Option<usize>,
}

/// One hit: the canonical model together with its full classification.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub size: usize,
    pub model: CuModel,
    pub analysis: ModelAnalysis,
}

fn parse_axiom(name: &str) -> CuResult<CuAxiom> {
    match name.trim().to_ascii_uppercase().as_str() {
        "O5" => Ok(CuAxiom::O5),
        "O6" => Ok(CuAxiom::O6),
        "O7" => Ok(CuAxiom::O7),
        other => Err(CuError::ParseError(format!("unknown axiom `{other}`"))),
    }
}

/// Streams all canonical models up to the requested size, filters by the
/// required axioms, classifies them in parallel, and keeps those whose
/// classification satisfies the target.
pub fn hunt(spec: &SearchSpec, budget: &Budget) -> CuResult<Vec<SearchResult>> {
    if spec.max_size < 1 {
        return Err(CuError::ParseError("max_size must be at least 1".into()));
    }
    let expr = parse_target(&spec.target)?;
    let required: Vec<CuAxiom> = spec
        .required_axioms
        .iter()
        .map(|s| parse_axiom(s))
        .collect::<CuResult<_>>()?;

    let mut results = Vec::new();
    for n in 1..=spec.max_size {
        if let Some(limit) = spec.limit {
            if results.len() >= limit {
                break;
            }
        }
        let models = enumerate_models(n);
        let analyzed: Vec<CuResult<Option<SearchResult>>> = models
            .into_par_iter()
            .map(|model| {
                let scale = Scale::full(&model);
                let analysis = analyze(&model, &scale, budget)?;
                for axiom in &required {
                    if !analysis.axioms.get(*axiom).is_proven() {
                        return Ok(None);
                    }
                }
                if eval_target(&expr, &analysis, &model)? {
                    Ok(Some(SearchResult { size: n, model, analysis }))
                } else {
                    Ok(None)
                }
            })
            .collect();
        for item in analyzed {
            if let Some(hit) = item? {
                results.push(hit);
                if let Some(limit) = spec.limit {
                    if results.len() >= limit {
                        break;
                    }
                }
            }
        }
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_one_and_two_are_unique() {
        assert_eq!(enumerate_models(1).len(), 1);
        // two elements force e + e = e: positivity rules out e + e = 0
        assert_eq!(enumerate_models(2).len(), 1);
    }

    #[test]
    fn canonical_form_is_permutation_invariant() {
        // E_2 relabeled: swap names/order of elements 1 and 2
        let e2 = CuModel::elementary(2);
        let canon = canonical_form(&e2).unwrap();
        let t = e2.to_finite_table().unwrap();
        // apply the permutation (0)(1 2)(3) by hand
        let p = [0usize, 2, 1, 3];
        let mut inv = [0usize; 4];
        for (i, &pi) in p.iter().enumerate() {
            inv[pi] = i;
        }
        let leq = (0..4)
            .map(|i| (0..4).map(|j| t.leq[p[i]][p[j]]).collect())
            .collect();
        let add = (0..4)
            .map(|i| (0..4).map(|j| inv[t.add[p[i]][p[j]]]).collect())
            .collect();
        let relabeled = CuModel::finite_table_unchecked(FiniteTable {
            names: vec!["0".into(), "2".into(), "1".into(), "inf".into()],
            leq,
            add,
        });
        assert!(crate::structure::validate_model(&relabeled).is_clean());
        assert_eq!(canonical_form(&relabeled).unwrap(), canon);
    }

    #[test]
    fn canonical_form_is_idempotent() {
        for model in enumerate_models(3) {
            let c1 = canonical_form(&model).unwrap();
            let rebuilt = model_of_canonical(&c1);
            assert_eq!(canonical_form(&rebuilt).unwrap(), c1);
        }
    }

    #[test]
    fn enumerated_models_validate() {
        for n in 1..=4 {
            for model in enumerate_models(n) {
                assert!(
                    crate::structure::validate_model(&model).is_clean(),
                    "size {n} model failed validation"
                );
            }
        }
    }

    #[test]
    fn size_four_contains_the_elementary_model() {
        let target = canonical_form(&CuModel::elementary(2)).unwrap();
        let found = enumerate_models(4)
            .iter()
            .any(|m| canonical_form(m).unwrap() == target);
        assert!(found);
    }

    #[test]
    fn target_parser_roundtrips() {
        let expr = parse_target("ideal_filtered ∧ ¬two_omega_divisible").unwrap();
        assert_eq!(
            expr,
            TargetExpr::And(
                Box::new(TargetExpr::Atom("ideal_filtered".into())),
                Box::new(TargetExpr::Not(Box::new(TargetExpr::Atom(
                    "two_omega_divisible".into()
                ))))
            )
        );
        assert!(parse_target("a && (b || !c)").is_ok());
        assert!(parse_target("a &&& b").is_err());
        assert!(parse_target("(a").is_err());
    }

    #[test]
    fn hunt_finds_the_elementary_counterexample() {
        let spec = SearchSpec {
            max_size: 4,
            required_axioms: vec![],
            target: "ideal_filtered and not two_omega_divisible".into(),
            limit: None,
        };
        let hits = hunt(&spec, &Budget::default()).unwrap();
        let e2 = canonical_form(&CuModel::elementary(2)).unwrap();
        assert!(hits
            .iter()
            .any(|h| canonical_form(&h.model).unwrap() == e2));
    }

    #[test]
    fn hunt_on_false_target_is_empty() {
        let spec = SearchSpec {
            max_size: 3,
            required_axioms: vec!["O5".into(), "O6".into(), "O7".into()],
            target: "false".into(),
            limit: None,
        };
        assert!(hunt(&spec, &Budget::default()).unwrap().is_empty());
    }
}
