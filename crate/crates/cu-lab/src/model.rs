//! Cu-semigroup models: the carrier families, order, addition, way-below,
//! suprema of described chains, and basis chains.
//!
//! A model is one of five effectively-presented families:
//!
//! * `finite-table` — an explicit finite partially ordered commutative
//!   monoid, zero at index 0;
//! * `nbar` — the extended natural numbers `ℕ ∪ {∞}`;
//! * `e-k` — the elementary semigroup `{0, 1, …, k, ∞}` with
//!   truncated-overflow addition;
//! * `lsc` — monotone maps from a finite T0 space into `ℕ ∪ {∞}`,
//!   with pointwise order and addition;
//! * `product` — finite products with componentwise structure.
//!
//! In a finite model every increasing sequence stabilizes, so way-below
//! coincides with the order and every element is compact. Non-compact
//! behavior lives in the nbar/lsc/product families, where way-below has a
//! closed form: `x ≪ y` iff `x ≤ y` and `x` takes only finite values.
//!
//! Chains are first-class descriptors (stabilizing lists and truncation
//! families) so suprema are exact, never approximated. Models are immutable
//! after construction and safe to share across parallel workers.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{CuError, CuResult};
use crate::extnat::ExtNat;
use crate::space::Space;

/// Explicit finite model data. Index 0 is the zero element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTable {
    pub names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub add: Vec<Vec<usize>>,
}

impl FiniteTable {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    /// All law violations of this table, with coordinates. Empty means the
    /// table is a valid positively ordered commutative monoid.
    pub fn violations(&self) -> Vec<String> {
        let n = self.size();
        let mut out = Vec::new();
        if self.leq.len() != n || self.leq.iter().any(|r| r.len() != n) {
            out.push("leq matrix is not square of the declared size".into());
            return out;
        }
        if self.add.len() != n || self.add.iter().any(|r| r.len() != n) {
            out.push("add matrix is not square of the declared size".into());
            return out;
        }
        if let Some((i, j)) = iproduct(n).find(|&(i, j)| self.add[i][j] >= n) {
            out.push(format!("add entry out of range at ({i},{j})"));
            return out;
        }
        for i in 0..n {
            if !self.leq[i][i] {
                out.push(format!("reflexivity at {i}"));
            }
        }
        for (i, j) in iproduct(n) {
            if i != j && self.leq[i][j] && self.leq[j][i] {
                out.push(format!("antisymmetry at ({i},{j})"));
            }
        }
        for (i, j) in iproduct(n) {
            for k in 0..n {
                if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                    out.push(format!("transitivity at ({i},{j},{k})"));
                }
            }
        }
        for j in 0..n {
            if !self.leq[0][j] {
                out.push(format!("zero-least at {j}"));
            }
        }
        for j in 0..n {
            if self.add[0][j] != j {
                out.push(format!("zero-neutrality at {j}"));
            }
        }
        for (i, j) in iproduct(n) {
            if i < j && self.add[i][j] != self.add[j][i] {
                out.push(format!("commutativity at ({i},{j})"));
            }
        }
        for (i, j) in iproduct(n) {
            for k in 0..n {
                if self.add[self.add[i][j]][k] != self.add[i][self.add[j][k]] {
                    out.push(format!("associativity at ({i},{j},{k})"));
                }
            }
        }
        for (i, j) in iproduct(n) {
            if self.leq[i][j] {
                for k in 0..n {
                    if !self.leq[self.add[i][k]][self.add[j][k]] {
                        out.push(format!("order-compatibility at ({i},{j},{k})"));
                    }
                }
            }
        }
        out
    }
}

fn iproduct(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    FiniteTable(FiniteTable),
    Nbar,
    Elementary { k: u64 },
    Lsc(Space),
    Product(Vec<CuModel>),
}

/// An immutable Cu-semigroup model. Structurally equal models are
/// interchangeable: elements carry a structural fingerprint, not an
/// instance identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CuModel {
    kind: ModelKind,
    fingerprint: u64,
}

/// Element payload; the shape matches the model kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Payload {
    Index(usize),
    Nat(ExtNat),
    Vector(Vec<ExtNat>),
    Tuple(Vec<Payload>),
}

/// An opaque handle into a model's carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    model: u64,
    payload: Payload,
}

impl Element {
    pub fn payload(&self) -> &Payload {
        &self.payload
    }
}

/// A finitely-described increasing sequence.
///
/// A stabilizing list repeats its last entry forever; a truncation family
/// has n-th term "base capped at level n".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainDescriptor {
    Stabilizing(Vec<Element>),
    Truncation { base: Element },
}

impl CuModel {
    fn from_kind(kind: ModelKind) -> CuModel {
        let mut hasher = DefaultHasher::new();
        kind.hash(&mut hasher);
        let fingerprint = hasher.finish();
        CuModel { kind, fingerprint }
    }

    /// Builds a finite-table model, rejecting tables that violate the laws.
    pub fn finite_table(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        add: Vec<Vec<usize>>,
    ) -> CuResult<CuModel> {
        let table = FiniteTable { names, leq, add };
        let violations = table.violations();
        if !violations.is_empty() {
            return Err(CuError::ValidationError(violations.join("\n")));
        }
        Ok(CuModel::from_kind(ModelKind::FiniteTable(table)))
    }

    /// Builds a finite-table model without checking the laws. Intended for
    /// generators that enforce the laws by construction.
    pub fn finite_table_unchecked(table: FiniteTable) -> CuModel {
        CuModel::from_kind(ModelKind::FiniteTable(table))
    }

    /// The extended natural numbers `ℕ ∪ {∞}`.
    pub fn nbar() -> CuModel {
        CuModel::from_kind(ModelKind::Nbar)
    }

    /// The elementary semigroup `E_k = {0, …, k, ∞}`: linear order, and
    /// `x + y` overflows to ∞ as soon as the sum exceeds `k`.
    pub fn elementary(k: u64) -> CuModel {
        CuModel::from_kind(ModelKind::Elementary { k })
    }

    /// Monotone maps from the space's specialization order into `ℕ ∪ {∞}`
    /// (equivalently: lower-semicontinuous functions), pointwise structure.
    pub fn lsc(space: Space) -> CuModel {
        CuModel::from_kind(ModelKind::Lsc(space))
    }

    /// Componentwise product of two models.
    pub fn product(a: CuModel, b: CuModel) -> CuModel {
        CuModel::product_many(vec![a, b]).expect("two factors")
    }

    /// Componentwise product of one or more factors.
    pub fn product_many(factors: Vec<CuModel>) -> CuResult<CuModel> {
        if factors.is_empty() {
            return Err(CuError::ParseError("product needs at least one factor".into()));
        }
        Ok(CuModel::from_kind(ModelKind::Product(factors)))
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Short human-readable description of the model family.
    pub fn describe(&self) -> String {
        match &self.kind {
            ModelKind::FiniteTable(t) => format!("finite-table({})", t.size()),
            ModelKind::Nbar => "nbar".into(),
            ModelKind::Elementary { k } => format!("e-{k}"),
            ModelKind::Lsc(s) => format!("lsc({} points)", s.point_count()),
            ModelKind::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|f| f.describe()).collect();
                format!("product[{}]", parts.join(" x "))
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        match &self.kind {
            ModelKind::FiniteTable(_) | ModelKind::Elementary { .. } => true,
            ModelKind::Nbar | ModelKind::Lsc(_) => false,
            ModelKind::Product(fs) => fs.iter().all(|f| f.is_finite()),
        }
    }

    pub fn carrier_len(&self) -> Option<usize> {
        match &self.kind {
            ModelKind::FiniteTable(t) => Some(t.size()),
            ModelKind::Elementary { k } => Some(*k as usize + 2),
            ModelKind::Nbar | ModelKind::Lsc(_) => None,
            ModelKind::Product(fs) => fs
                .iter()
                .map(|f| f.carrier_len())
                .try_fold(1usize, |acc, n| n.map(|n| acc * n)),
        }
    }

    fn wrap(&self, payload: Payload) -> Element {
        Element { model: self.fingerprint, payload }
    }

    pub fn zero(&self) -> Element {
        let payload = match &self.kind {
            ModelKind::FiniteTable(_) => Payload::Index(0),
            ModelKind::Nbar | ModelKind::Elementary { .. } => Payload::Nat(ExtNat::ZERO),
            ModelKind::Lsc(s) => Payload::Vector(vec![ExtNat::ZERO; s.point_count()]),
            ModelKind::Product(fs) => {
                Payload::Tuple(fs.iter().map(|f| f.zero().payload).collect())
            }
        };
        self.wrap(payload)
    }

    /// Element from a carrier index (finite-table models).
    pub fn element_of_index(&self, i: usize) -> CuResult<Element> {
        match &self.kind {
            ModelKind::FiniteTable(t) if i < t.size() => Ok(self.wrap(Payload::Index(i))),
            ModelKind::FiniteTable(t) => Err(CuError::ElementModelMismatch(format!(
                "index {i} out of range for table of size {}",
                t.size()
            ))),
            _ => Err(CuError::ElementModelMismatch(
                "index payloads only apply to finite-table models".into(),
            )),
        }
    }

    /// Element from an extended natural (nbar and e-k models).
    pub fn element_of_nat(&self, v: ExtNat) -> CuResult<Element> {
        match &self.kind {
            ModelKind::Nbar => Ok(self.wrap(Payload::Nat(v))),
            ModelKind::Elementary { k } => {
                if v <= ExtNat::Fin(*k) || v == ExtNat::Inf {
                    Ok(self.wrap(Payload::Nat(v)))
                } else {
                    Err(CuError::ElementModelMismatch(format!(
                        "value {v} not in {{0..{k}, inf}}"
                    )))
                }
            }
            _ => Err(CuError::ElementModelMismatch(
                "nat payloads only apply to nbar/e-k models".into(),
            )),
        }
    }

    /// Element from a point-value vector (lsc models). The vector must be
    /// monotone along the space's specialization order.
    pub fn element_of_values(&self, values: Vec<ExtNat>) -> CuResult<Element> {
        match &self.kind {
            ModelKind::Lsc(s) => {
                if values.len() != s.point_count() {
                    return Err(CuError::ElementModelMismatch(format!(
                        "expected {} point values, got {}",
                        s.point_count(),
                        values.len()
                    )));
                }
                for p in 0..values.len() {
                    for q in 0..values.len() {
                        if s.point_leq(p, q) && values[p] > values[q] {
                            return Err(CuError::ElementModelMismatch(format!(
                                "vector not monotone: point {p} <= {q} but {} > {}",
                                values[p], values[q]
                            )));
                        }
                    }
                }
                Ok(self.wrap(Payload::Vector(values)))
            }
            _ => Err(CuError::ElementModelMismatch(
                "vector payloads only apply to lsc models".into(),
            )),
        }
    }

    /// Element from per-factor components (product models).
    pub fn element_of_tuple(&self, parts: Vec<Element>) -> CuResult<Element> {
        match &self.kind {
            ModelKind::Product(fs) => {
                if parts.len() != fs.len() {
                    return Err(CuError::ElementModelMismatch(format!(
                        "expected {} components, got {}",
                        fs.len(),
                        parts.len()
                    )));
                }
                for (f, p) in fs.iter().zip(&parts) {
                    f.check(p)?;
                }
                Ok(self.wrap(Payload::Tuple(parts.into_iter().map(|p| p.payload).collect())))
            }
            _ => Err(CuError::ElementModelMismatch(
                "tuple payloads only apply to product models".into(),
            )),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.model == self.fingerprint
    }

    pub(crate) fn check(&self, x: &Element) -> CuResult<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(CuError::ElementModelMismatch(format!(
                "element built for a different model than {}",
                self.describe()
            )))
        }
    }

    /// The full carrier, in canonical order. `None` for infinite models.
    pub fn carrier(&self) -> Option<Vec<Element>> {
        match &self.kind {
            ModelKind::FiniteTable(t) => {
                Some((0..t.size()).map(|i| self.wrap(Payload::Index(i))).collect())
            }
            ModelKind::Elementary { k } => {
                let mut out: Vec<Element> = (0..=*k)
                    .map(|v| self.wrap(Payload::Nat(ExtNat::Fin(v))))
                    .collect();
                out.push(self.wrap(Payload::Nat(ExtNat::Inf)));
                Some(out)
            }
            ModelKind::Nbar | ModelKind::Lsc(_) => None,
            ModelKind::Product(fs) => {
                let parts: Option<Vec<Vec<Element>>> = fs.iter().map(|f| f.carrier()).collect();
                let parts = parts?;
                let mut tuples: Vec<Vec<Payload>> = vec![Vec::new()];
                for factor in &parts {
                    let mut next = Vec::new();
                    for prefix in &tuples {
                        for e in factor {
                            let mut tuple = prefix.clone();
                            tuple.push(e.payload.clone());
                            next.push(tuple);
                        }
                    }
                    tuples = next;
                }
                Some(tuples.into_iter().map(|t| self.wrap(Payload::Tuple(t))).collect())
            }
        }
    }

    /// Position of an element in the canonical carrier order (finite models).
    pub fn index_of(&self, x: &Element) -> Option<usize> {
        match (&self.kind, &x.payload) {
            (ModelKind::FiniteTable(_), Payload::Index(i)) => Some(*i),
            (ModelKind::Elementary { k }, Payload::Nat(v)) => match v {
                ExtNat::Fin(n) => Some(*n as usize),
                ExtNat::Inf => Some(*k as usize + 1),
            },
            (ModelKind::Product(fs), Payload::Tuple(parts)) => {
                let mut idx = 0usize;
                for (f, p) in fs.iter().zip(parts) {
                    let len = f.carrier_len()?;
                    let part = Element { model: f.fingerprint, payload: p.clone() };
                    idx = idx * len + f.index_of(&part)?;
                }
                Some(idx)
            }
            _ => None,
        }
    }

    fn factor_elements(&self, fs: &[CuModel], x: &Payload) -> Vec<Element> {
        match x {
            Payload::Tuple(parts) => fs
                .iter()
                .zip(parts)
                .map(|(f, p)| Element { model: f.fingerprint, payload: p.clone() })
                .collect(),
            _ => unreachable!("product payload must be a tuple"),
        }
    }

    /// The model's partial order.
    pub fn leq(&self, x: &Element, y: &Element) -> CuResult<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.leq_raw(x, y))
    }

    fn leq_raw(&self, x: &Element, y: &Element) -> bool {
        match (&self.kind, &x.payload, &y.payload) {
            (ModelKind::FiniteTable(t), Payload::Index(i), Payload::Index(j)) => t.leq[*i][*j],
            (ModelKind::Nbar, Payload::Nat(a), Payload::Nat(b))
            | (ModelKind::Elementary { .. }, Payload::Nat(a), Payload::Nat(b)) => a <= b,
            (ModelKind::Lsc(_), Payload::Vector(a), Payload::Vector(b)) => {
                a.iter().zip(b).all(|(u, v)| u <= v)
            }
            (ModelKind::Product(fs), _, _) => {
                let xs = self.factor_elements(fs, &x.payload);
                let ys = self.factor_elements(fs, &y.payload);
                fs.iter()
                    .zip(xs.iter().zip(ys.iter()))
                    .all(|(f, (a, b))| f.leq_raw(a, b))
            }
            _ => unreachable!("payload shape does not match model kind"),
        }
    }

    /// Monoid addition.
    pub fn add(&self, x: &Element, y: &Element) -> CuResult<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_raw(x, y))
    }

    fn add_raw(&self, x: &Element, y: &Element) -> Element {
        let payload = match (&self.kind, &x.payload, &y.payload) {
            (ModelKind::FiniteTable(t), Payload::Index(i), Payload::Index(j)) => {
                Payload::Index(t.add[*i][*j])
            }
            (ModelKind::Nbar, Payload::Nat(a), Payload::Nat(b)) => Payload::Nat(*a + *b),
            (ModelKind::Elementary { k }, Payload::Nat(a), Payload::Nat(b)) => {
                let s = *a + *b;
                Payload::Nat(if s <= ExtNat::Fin(*k) { s } else { ExtNat::Inf })
            }
            (ModelKind::Lsc(_), Payload::Vector(a), Payload::Vector(b)) => {
                Payload::Vector(a.iter().zip(b).map(|(u, v)| *u + *v).collect())
            }
            (ModelKind::Product(fs), _, _) => {
                let xs = self.factor_elements(fs, &x.payload);
                let ys = self.factor_elements(fs, &y.payload);
                Payload::Tuple(
                    fs.iter()
                        .zip(xs.iter().zip(ys.iter()))
                        .map(|(f, (a, b))| f.add_raw(a, b).payload)
                        .collect(),
                )
            }
            _ => unreachable!("payload shape does not match model kind"),
        };
        self.wrap(payload)
    }

    /// Scalar multiple `n·x`.
    pub fn mul(&self, n: u64, x: &Element) -> CuResult<Element> {
        self.check(x)?;
        Ok(self.mul_raw(n, x))
    }

    fn mul_raw(&self, n: u64, x: &Element) -> Element {
        if n == 0 {
            return self.zero();
        }
        match (&self.kind, &x.payload) {
            (ModelKind::Nbar, Payload::Nat(a)) => self.wrap(Payload::Nat(a.times(n))),
            (ModelKind::Elementary { k }, Payload::Nat(a)) => {
                let s = a.times(n);
                self.wrap(Payload::Nat(if s <= ExtNat::Fin(*k) { s } else { ExtNat::Inf }))
            }
            (ModelKind::Lsc(_), Payload::Vector(a)) => {
                self.wrap(Payload::Vector(a.iter().map(|v| v.times(n)).collect()))
            }
            (ModelKind::Product(fs), _) => {
                let xs = self.factor_elements(fs, &x.payload);
                self.wrap(Payload::Tuple(
                    fs.iter()
                        .zip(xs.iter())
                        .map(|(f, a)| f.mul_raw(n, a).payload)
                        .collect(),
                ))
            }
            (ModelKind::FiniteTable(_), _) => {
                let mut acc = x.clone();
                for _ in 1..n {
                    acc = self.add_raw(&acc, x);
                }
                acc
            }
            _ => unreachable!("payload shape does not match model kind"),
        }
    }

    /// Decides the way-below (compact containment) relation `x ≪ y`.
    ///
    /// Finite models: coincides with the order (all increasing sequences
    /// stabilize, so every element is compact). nbar/lsc: `x ≤ y` and `x`
    /// takes only finite values. Products: componentwise.
    pub fn way_below(&self, x: &Element, y: &Element) -> CuResult<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.way_below_raw(x, y))
    }

    fn way_below_raw(&self, x: &Element, y: &Element) -> bool {
        match (&self.kind, &x.payload, &y.payload) {
            (ModelKind::FiniteTable(_), _, _) | (ModelKind::Elementary { .. }, _, _) => {
                self.leq_raw(x, y)
            }
            (ModelKind::Nbar, Payload::Nat(a), Payload::Nat(b)) => a <= b && a.is_finite(),
            (ModelKind::Lsc(_), Payload::Vector(a), Payload::Vector(b)) => {
                a.iter().zip(b).all(|(u, v)| u <= v) && a.iter().all(|u| u.is_finite())
            }
            (ModelKind::Product(fs), _, _) => {
                let xs = self.factor_elements(fs, &x.payload);
                let ys = self.factor_elements(fs, &y.payload);
                fs.iter()
                    .zip(xs.iter().zip(ys.iter()))
                    .all(|(f, (a, b))| f.way_below_raw(a, b))
            }
            _ => unreachable!("payload shape does not match model kind"),
        }
    }

    /// `x` is compact when `x ≪ x`.
    pub fn is_compact(&self, x: &Element) -> CuResult<bool> {
        self.way_below(x, x)
    }

    /// The infinite multiple `∞·x = sup_n n·x`.
    ///
    /// Finite models iterate until the multiples stabilize, which happens
    /// within carrier-many steps since the sequence is increasing.
    pub fn omega_multiple(&self, x: &Element) -> CuResult<Element> {
        self.check(x)?;
        Ok(self.omega_raw(x))
    }

    fn omega_raw(&self, x: &Element) -> Element {
        match (&self.kind, &x.payload) {
            (ModelKind::Nbar, Payload::Nat(a)) => self.wrap(Payload::Nat(a.omega())),
            (ModelKind::Elementary { .. }, Payload::Nat(a)) => self.wrap(Payload::Nat(a.omega())),
            (ModelKind::Lsc(_), Payload::Vector(a)) => {
                self.wrap(Payload::Vector(a.iter().map(|v| v.omega()).collect()))
            }
            (ModelKind::Product(fs), _) => {
                let xs = self.factor_elements(fs, &x.payload);
                self.wrap(Payload::Tuple(
                    fs.iter()
                        .zip(xs.iter())
                        .map(|(f, a)| f.omega_raw(a).payload)
                        .collect(),
                ))
            }
            (ModelKind::FiniteTable(t), _) => {
                let cap = t.size() + 1;
                let mut cur = x.clone();
                for _ in 0..cap {
                    let next = self.add_raw(&cur, x);
                    if next == cur {
                        return cur;
                    }
                    cur = next;
                }
                unreachable!("multiples of an element failed to stabilize in a finite model")
            }
            _ => unreachable!("payload shape does not match model kind"),
        }
    }

    /// Least `n ≥ 1` with `(n+1)x = nx`, if any.
    pub fn multiple_stabilization(&self, x: &Element) -> CuResult<Option<u64>> {
        self.check(x)?;
        Ok(self.multiple_stabilization_raw(x))
    }

    fn multiple_stabilization_raw(&self, x: &Element) -> Option<u64> {
        match (&self.kind, &x.payload) {
            (ModelKind::Nbar, Payload::Nat(a)) => {
                if a.is_zero() || *a == ExtNat::Inf {
                    Some(1)
                } else {
                    None
                }
            }
            (ModelKind::Lsc(_), Payload::Vector(a)) => {
                if a.iter().all(|v| v.is_zero() || *v == ExtNat::Inf) {
                    Some(1)
                } else {
                    None
                }
            }
            (ModelKind::Product(fs), _) => {
                let xs = self.factor_elements(fs, &x.payload);
                let mut worst = 1;
                for (f, a) in fs.iter().zip(xs.iter()) {
                    {
                        let n = f.multiple_stabilization_raw(a)?;
                        worst = worst.max(n)
                    }
                }
                Some(worst)
            }
            _ => {
                // finite kinds: iterate; the multiples stabilize within
                // carrier-many steps if they stabilize at all
                let cap = self.carrier_len().expect("finite kind") as u64 + 1;
                let mut cur = x.clone();
                for n in 1..=cap {
                    let next = self.add_raw(&cur, x);
                    if next == cur {
                        return Some(n);
                    }
                    cur = next;
                }
                None
            }
        }
    }

    /// Least `n ≥ 1` with `(n+1)·g ≪ n·x`, if any. Requires `g ≤ x`, which
    /// makes the set of good `n` upward closed, so the closed forms below
    /// and the bounded iteration on finite kinds are both exact.
    pub fn least_multiple_domination(&self, g: &Element, x: &Element) -> CuResult<Option<u64>> {
        self.check(g)?;
        self.check(x)?;
        debug_assert!(self.leq_raw(g, x), "least_multiple_domination requires g <= x");
        Ok(self.least_mult_dom_raw(g, x))
    }

    fn least_mult_dom_raw(&self, g: &Element, x: &Element) -> Option<u64> {
        fn nat_case(g: ExtNat, x: ExtNat) -> Option<u64> {
            match (g, x) {
                (ExtNat::Inf, _) => None,
                (ExtNat::Fin(0), _) => Some(1),
                (_, ExtNat::Inf) => Some(1),
                (ExtNat::Fin(gv), ExtNat::Fin(xv)) => {
                    if xv > gv {
                        Some(gv.div_ceil(xv - gv).max(1))
                    } else {
                        None
                    }
                }
            }
        }
        match (&self.kind, &g.payload, &x.payload) {
            (ModelKind::Nbar, Payload::Nat(a), Payload::Nat(b)) => nat_case(*a, *b),
            (ModelKind::Lsc(_), Payload::Vector(a), Payload::Vector(b)) => {
                let mut worst = 1;
                for (u, v) in a.iter().zip(b) {
                    worst = worst.max(nat_case(*u, *v)?);
                }
                Some(worst)
            }
            (ModelKind::Product(fs), _, _) => {
                let gs = self.factor_elements(fs, &g.payload);
                let xs = self.factor_elements(fs, &x.payload);
                let mut worst = 1;
                for (f, (a, b)) in fs.iter().zip(gs.iter().zip(xs.iter())) {
                    worst = worst.max(f.least_mult_dom_raw(a, b)?);
                }
                Some(worst)
            }
            _ => {
                let cap = self.carrier_len().expect("finite kind") as u64 + 1;
                (1..=cap)
                    .find(|&n| self.way_below_raw(&self.mul_raw(n + 1, g), &self.mul_raw(n, x)))
            }
        }
    }

    /// The maximum element. Every supported family has one: for finite
    /// models it is the sum of all carrier elements.
    pub fn max_element(&self) -> Element {
        match &self.kind {
            ModelKind::FiniteTable(_) => {
                let carrier = self.carrier().expect("finite");
                let mut acc = self.zero();
                for e in &carrier {
                    acc = self.add_raw(&acc, e);
                }
                acc
            }
            ModelKind::Nbar | ModelKind::Elementary { .. } => self.wrap(Payload::Nat(ExtNat::Inf)),
            ModelKind::Lsc(s) => {
                self.wrap(Payload::Vector(vec![ExtNat::Inf; s.point_count()]))
            }
            ModelKind::Product(fs) => self.wrap(Payload::Tuple(
                fs.iter().map(|f| f.max_element().payload).collect(),
            )),
        }
    }

    /// Elements with `2m = m`, in canonical order. These are exactly the
    /// suprema `∞·x` of principal ideals, so they index the ideal lattice.
    pub fn omega_idempotents(&self) -> Vec<Element> {
        let mut out: Vec<Element> = match &self.kind {
            ModelKind::FiniteTable(_) | ModelKind::Elementary { .. } => self
                .carrier()
                .expect("finite")
                .into_iter()
                .filter(|e| self.add_raw(e, e) == *e)
                .collect(),
            ModelKind::Nbar => vec![
                self.wrap(Payload::Nat(ExtNat::ZERO)),
                self.wrap(Payload::Nat(ExtNat::Inf)),
            ],
            ModelKind::Lsc(s) => s
                .up_sets()
                .into_iter()
                .map(|mask| {
                    self.wrap(Payload::Vector(
                        mask.into_iter()
                            .map(|m| if m { ExtNat::Inf } else { ExtNat::ZERO })
                            .collect(),
                    ))
                })
                .collect(),
            ModelKind::Product(fs) => {
                let mut acc: Vec<Vec<Payload>> = vec![Vec::new()];
                for f in fs {
                    let ids = f.omega_idempotents();
                    let mut next = Vec::new();
                    for prefix in &acc {
                        for id in &ids {
                            let mut tuple = prefix.clone();
                            tuple.push(id.payload.clone());
                            next.push(tuple);
                        }
                    }
                    acc = next;
                }
                acc.into_iter().map(|t| self.wrap(Payload::Tuple(t))).collect()
            }
        };
        out.sort();
        out.dedup();
        out
    }

    /// `x` capped at level `n`: the n-th term of the truncation family.
    /// Finite tables have no level structure, so the cap is `x` itself.
    pub fn cap_at_level(&self, x: &Element, n: u64) -> CuResult<Element> {
        self.check(x)?;
        Ok(self.cap_raw(x, n))
    }

    fn cap_raw(&self, x: &Element, n: u64) -> Element {
        match (&self.kind, &x.payload) {
            (ModelKind::FiniteTable(_), _) => x.clone(),
            (ModelKind::Nbar, Payload::Nat(a)) => self.wrap(Payload::Nat(std::cmp::min(*a, ExtNat::Fin(n)))),
            (ModelKind::Elementary { k }, Payload::Nat(a)) => {
                if n <= *k {
                    self.wrap(Payload::Nat(std::cmp::min(*a, ExtNat::Fin(n))))
                } else {
                    x.clone()
                }
            }
            (ModelKind::Lsc(_), Payload::Vector(a)) => self.wrap(Payload::Vector(
                a.iter().map(|v| std::cmp::min(*v, ExtNat::Fin(n))).collect(),
            )),
            (ModelKind::Product(fs), _) => {
                let xs = self.factor_elements(fs, &x.payload);
                self.wrap(Payload::Tuple(
                    fs.iter()
                        .zip(xs.iter())
                        .map(|(f, a)| f.cap_raw(a, n).payload)
                        .collect(),
                ))
            }
            _ => unreachable!("payload shape does not match model kind"),
        }
    }

    /// The n-th term of a described chain.
    pub fn chain_term(&self, chain: &ChainDescriptor, n: u64) -> CuResult<Element> {
        match chain {
            ChainDescriptor::Stabilizing(list) => {
                if list.is_empty() {
                    return Err(CuError::NotIncreasing(0));
                }
                let i = (n as usize).min(list.len() - 1);
                self.check(&list[i])?;
                Ok(list[i].clone())
            }
            ChainDescriptor::Truncation { base } => self.cap_at_level(base, n),
        }
    }

    /// Exact supremum of a described chain: the eventual value of a
    /// stabilizing list, or the base of a truncation family.
    pub fn sup_chain(&self, chain: &ChainDescriptor) -> CuResult<Element> {
        match chain {
            ChainDescriptor::Stabilizing(list) => {
                if list.is_empty() {
                    return Err(CuError::NotIncreasing(0));
                }
                for e in list {
                    self.check(e)?;
                }
                for i in 1..list.len() {
                    if !self.leq_raw(&list[i - 1], &list[i]) {
                        return Err(CuError::NotIncreasing(i));
                    }
                }
                Ok(list.last().unwrap().clone())
            }
            ChainDescriptor::Truncation { base } => {
                self.check(base)?;
                Ok(base.clone())
            }
        }
    }

    /// A way-below-increasing chain with supremum `x`, cofinal in the set
    /// `{x' : x' ≪ x}`: compact elements get the constant chain, everything
    /// else the truncation family.
    pub fn basis_chain(&self, x: &Element) -> CuResult<ChainDescriptor> {
        self.check(x)?;
        if self.way_below_raw(x, x) {
            Ok(ChainDescriptor::Stabilizing(vec![x.clone()]))
        } else {
            Ok(ChainDescriptor::Truncation { base: x.clone() })
        }
    }

    /// The distinct basis-chain terms of `x` up to the given depth. Every
    /// term is way-below `x`; for compact `x` the single term is `x` itself.
    pub fn basis_terms(&self, x: &Element, depth: u32) -> CuResult<Vec<Element>> {
        self.check(x)?;
        if self.way_below_raw(x, x) {
            return Ok(vec![x.clone()]);
        }
        let mut out = Vec::new();
        for n in 0..=depth as u64 {
            let t = self.cap_raw(x, n);
            if out.last() != Some(&t) {
                out.push(t.clone());
            }
            if t == *x {
                break;
            }
        }
        Ok(out)
    }

    /// A deterministic, canonically ordered search space: the whole carrier
    /// for finite models, and the elements with values in `{0..cap, ∞}` for
    /// the closed-form families.
    pub fn grid(&self, cap: u64) -> Vec<Element> {
        match &self.kind {
            ModelKind::FiniteTable(_) | ModelKind::Elementary { .. } => {
                self.carrier().expect("finite")
            }
            ModelKind::Nbar => {
                let mut out: Vec<Element> = (0..=cap)
                    .map(|v| self.wrap(Payload::Nat(ExtNat::Fin(v))))
                    .collect();
                out.push(self.wrap(Payload::Nat(ExtNat::Inf)));
                out
            }
            ModelKind::Lsc(s) => {
                let m = s.point_count();
                let mut values: Vec<ExtNat> = (0..=cap).map(ExtNat::Fin).collect();
                values.push(ExtNat::Inf);
                let mut vectors: Vec<Vec<ExtNat>> = vec![Vec::new()];
                for _ in 0..m {
                    let mut next = Vec::new();
                    for prefix in &vectors {
                        for v in &values {
                            let mut w = prefix.clone();
                            w.push(*v);
                            next.push(w);
                        }
                    }
                    vectors = next;
                }
                let mut out: Vec<Element> = vectors
                    .into_iter()
                    .filter(|vals| {
                        (0..m).all(|p| {
                            (0..m).all(|q| !s.point_leq(p, q) || vals[p] <= vals[q])
                        })
                    })
                    .map(|vals| self.wrap(Payload::Vector(vals)))
                    .collect();
                out.sort();
                out
            }
            ModelKind::Product(fs) => {
                let mut acc: Vec<Vec<Payload>> = vec![Vec::new()];
                for f in fs {
                    let g = f.grid(cap);
                    let mut next = Vec::new();
                    for prefix in &acc {
                        for e in &g {
                            let mut tuple = prefix.clone();
                            tuple.push(e.payload.clone());
                            next.push(tuple);
                        }
                    }
                    acc = next;
                }
                let mut out: Vec<Element> =
                    acc.into_iter().map(|t| self.wrap(Payload::Tuple(t))).collect();
                out.sort();
                out
            }
        }
    }

    /// Renders an element with the model's names.
    pub fn format_element(&self, x: &Element) -> String {
        match (&self.kind, &x.payload) {
            (ModelKind::FiniteTable(t), Payload::Index(i)) => t.names[*i].clone(),
            (ModelKind::Nbar, Payload::Nat(v)) | (ModelKind::Elementary { .. }, Payload::Nat(v)) => {
                v.to_string()
            }
            (ModelKind::Lsc(_), Payload::Vector(vals)) => {
                let parts: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
                format!("({})", parts.join(","))
            }
            (ModelKind::Product(fs), _) => {
                let xs = self.factor_elements(fs, &x.payload);
                let parts: Vec<String> = fs
                    .iter()
                    .zip(xs.iter())
                    .map(|(f, a)| f.format_element(a))
                    .collect();
                format!("({})", parts.join(","))
            }
            _ => unreachable!("payload shape does not match model kind"),
        }
    }

    /// Materializes a finite model as an explicit table (identity on
    /// finite-table models). `None` for infinite models.
    pub fn to_finite_table(&self) -> Option<FiniteTable> {
        if let ModelKind::FiniteTable(t) = &self.kind {
            return Some(t.clone());
        }
        let carrier = self.carrier()?;
        let names = carrier.iter().map(|e| self.format_element(e)).collect();
        let leq = carrier
            .iter()
            .map(|x| carrier.iter().map(|y| self.leq_raw(x, y)).collect())
            .collect();
        let add = carrier
            .iter()
            .map(|x| {
                carrier
                    .iter()
                    .map(|y| {
                        let s = self.add_raw(x, y);
                        carrier.iter().position(|e| *e == s).expect("closed")
                    })
                    .collect()
            })
            .collect();
        Some(FiniteTable { names, leq, add })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nb() -> (CuModel, impl Fn(ExtNat) -> Element) {
        let m = CuModel::nbar();
        let mk = {
            let m = m.clone();
            move |v| m.element_of_nat(v).unwrap()
        };
        (m, mk)
    }

    #[test]
    fn nbar_order_and_addition() {
        let (m, e) = nb();
        assert!(m.leq(&e(ExtNat::Fin(3)), &e(ExtNat::Inf)).unwrap());
        let five = m.add(&e(ExtNat::Fin(2)), &e(ExtNat::Fin(3))).unwrap();
        assert_eq!(five, e(ExtNat::Fin(5)));
        assert_eq!(m.add(&e(ExtNat::Fin(7)), &m.zero()).unwrap(), e(ExtNat::Fin(7)));
    }

    #[test]
    fn elementary_overflow_addition() {
        let m = CuModel::elementary(2);
        let one = m.element_of_nat(ExtNat::Fin(1)).unwrap();
        let two = m.element_of_nat(ExtNat::Fin(2)).unwrap();
        let inf = m.element_of_nat(ExtNat::Inf).unwrap();
        assert_eq!(m.add(&one, &two).unwrap(), inf);
        assert_eq!(m.add(&one, &one).unwrap(), two);
        assert!(m.leq(&one, &two).unwrap());
    }

    #[test]
    fn mismatched_elements_are_rejected() {
        let m = CuModel::nbar();
        let other = CuModel::elementary(2);
        let x = other.element_of_nat(ExtNat::Fin(1)).unwrap();
        assert!(matches!(
            m.leq(&x, &x),
            Err(CuError::ElementModelMismatch(_))
        ));
    }

    #[test]
    fn structurally_equal_models_share_elements() {
        let a = CuModel::nbar();
        let b = CuModel::nbar();
        let x = a.element_of_nat(ExtNat::Fin(4)).unwrap();
        assert!(b.contains(&x));
    }

    #[test]
    fn elementary_carrier_and_indexing() {
        let m = CuModel::elementary(2);
        let carrier = m.carrier().unwrap();
        assert_eq!(carrier.len(), 4);
        for (i, e) in carrier.iter().enumerate() {
            assert_eq!(m.index_of(e), Some(i));
        }
    }

    #[test]
    fn product_carrier_is_cross_product() {
        let m = CuModel::product(CuModel::elementary(1), CuModel::elementary(2));
        assert_eq!(m.carrier_len(), Some(12));
        let carrier = m.carrier().unwrap();
        assert_eq!(carrier.len(), 12);
        for (i, e) in carrier.iter().enumerate() {
            assert_eq!(m.index_of(e), Some(i));
        }
    }

    #[test]
    fn lsc_rejects_non_monotone_vectors() {
        let s = Space::new(
            vec!["u".into(), "v".into()],
            vec![vec![true, false], vec![true, true]],
        )
        .unwrap();
        let m = CuModel::lsc(s);
        // point v (index 1) lies below u (index 0), so f(v) <= f(u) is forced
        assert!(m.element_of_values(vec![ExtNat::Fin(1), ExtNat::Fin(0)]).is_ok());
        assert!(m.element_of_values(vec![ExtNat::Fin(0), ExtNat::Fin(1)]).is_err());
    }
}
