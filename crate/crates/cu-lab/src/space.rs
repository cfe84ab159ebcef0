//! Finite T0 spaces, presented as partial orders of points.
//!
//! A finite T0 topological space is the same thing as a finite poset under
//! the specialization order; its open sets are the upward closed point sets.
//! These spaces parameterize the lower-semicontinuous model family.

use crate::error::{CuError, CuResult};

/// A finite partial order of points. Point `p` specializes to `q` when
/// `leq[p][q]` holds; open sets are the up-sets of this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Space {
    /// Builds a space from a point order, rejecting non-orders.
    ///
    /// A reflexivity or transitivity failure is a malformed input; an
    /// antisymmetry failure means the preorder identifies two points, i.e.
    /// the space is not T0.
    #[allow(clippy::needless_range_loop)] // matrix coordinates
    pub fn new(names: Vec<String>, leq: Vec<Vec<bool>>) -> CuResult<Space> {
        let n = names.len();
        if n == 0 {
            return Err(CuError::ParseError("space needs at least one point".into()));
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(CuError::ParseError(format!(
                "space order matrix must be {n}x{n}"
            )));
        }
        for p in 0..n {
            if !leq[p][p] {
                return Err(CuError::ParseError(format!(
                    "space order not reflexive at point {p}"
                )));
            }
        }
        for p in 0..n {
            for q in 0..n {
                if p != q && leq[p][q] && leq[q][p] {
                    return Err(CuError::NotT0(p, q));
                }
                for r in 0..n {
                    if leq[p][q] && leq[q][r] && !leq[p][r] {
                        return Err(CuError::ParseError(format!(
                            "space order not transitive at ({p},{q},{r})"
                        )));
                    }
                }
            }
        }
        Ok(Space { names, leq })
    }

    pub fn point_count(&self) -> usize {
        self.names.len()
    }

    pub fn point_names(&self) -> &[String] {
        &self.names
    }

    pub fn point_leq(&self, p: usize, q: usize) -> bool {
        self.leq[p][q]
    }

    pub fn order_matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// All up-sets (open sets), as membership masks, in a deterministic
    /// order: sorted by the mask read as a little-endian bit string.
    pub fn up_sets(&self) -> Vec<Vec<bool>> {
        let n = self.point_count();
        let mut out = Vec::new();
        for bits in 0u32..(1u32 << n) {
            let mask: Vec<bool> = (0..n).map(|p| bits >> p & 1 == 1).collect();
            let is_upset = (0..n).all(|p| {
                !mask[p] || (0..n).all(|q| !self.leq[p][q] || mask[q])
            });
            if is_upset {
                out.push(mask);
            }
        }
        out
    }

    /// The induced subspace on the given points (kept in order).
    pub fn restriction(&self, keep: &[usize]) -> Space {
        let names = keep.iter().map(|&p| self.names[p].clone()).collect();
        let leq = keep
            .iter()
            .map(|&p| keep.iter().map(|&q| self.leq[p][q]).collect())
            .collect();
        Space { names, leq }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> Space {
        // closed point v (index 1) below open point u (index 0)
        Space::new(
            vec!["u".into(), "v".into()],
            vec![vec![true, false], vec![true, true]],
        )
        .unwrap()
    }

    #[test]
    fn rejects_non_t0() {
        let err = Space::new(
            vec!["a".into(), "b".into()],
            vec![vec![true, true], vec![true, true]],
        )
        .unwrap_err();
        assert!(matches!(err, CuError::NotT0(_, _)));
    }

    #[test]
    fn sierpinski_has_three_open_sets() {
        let s = sierpinski();
        let opens = s.up_sets();
        // {}, {u}, {u,v}
        assert_eq!(opens.len(), 3);
        assert!(opens.contains(&vec![false, false]));
        assert!(opens.contains(&vec![true, false]));
        assert!(opens.contains(&vec![true, true]));
    }

    #[test]
    fn discrete_two_point_space_has_four_open_sets() {
        let s = Space::new(
            vec!["p".into(), "q".into()],
            vec![vec![true, false], vec![false, true]],
        )
        .unwrap();
        assert_eq!(s.up_sets().len(), 4);
    }
}
