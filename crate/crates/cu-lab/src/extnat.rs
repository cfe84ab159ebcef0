//! Extended natural numbers: the value type behind the `nbar`, elementary
//! and lower-semicontinuous model families.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// An element of `ℕ ∪ {∞}` with saturating arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Fin(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    pub fn is_zero(self) -> bool {
        self == ExtNat::Fin(0)
    }

    /// Scalar multiple `n·x`. Note `0·∞ = 0`.
    pub fn times(self, n: u64) -> ExtNat {
        if n == 0 {
            return ExtNat::ZERO;
        }
        match self {
            ExtNat::Fin(v) => match v.checked_mul(n) {
                Some(p) => ExtNat::Fin(p),
                None => ExtNat::Inf,
            },
            ExtNat::Inf => ExtNat::Inf,
        }
    }

    /// `sup_n n·x`: zero stays zero, everything else blows up to ∞.
    pub fn omega(self) -> ExtNat {
        if self.is_zero() {
            ExtNat::ZERO
        } else {
            ExtNat::Inf
        }
    }

}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.cmp(b),
            (ExtNat::Fin(_), ExtNat::Inf) => std::cmp::Ordering::Less,
            (ExtNat::Inf, ExtNat::Fin(_)) => std::cmp::Ordering::Greater,
            (ExtNat::Inf, ExtNat::Inf) => std::cmp::Ordering::Equal,
        }
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => match a.checked_add(b) {
                Some(s) => ExtNat::Fin(s),
                None => ExtNat::Inf,
            },
            _ => ExtNat::Inf,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Fin(v)
    }
}
