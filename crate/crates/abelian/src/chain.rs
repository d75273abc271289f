use std::collections::BTreeMap;

use crate::error::Error;
use crate::group::FgAbGroup;
use crate::lattice::kernel_basis;
use crate::matrix::IntMatrix;

/// A chain complex of free `Z`-modules given by ranks per degree and a
/// boundary matrix `∂_d : C_d -> C_{d-1}` per degree. `∂∂ = 0` is
/// checked on construction.
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    ranks: BTreeMap<i64, usize>,
    boundaries: BTreeMap<i64, IntMatrix>,
}

impl ChainComplexZ {
    pub fn new(
        ranks: BTreeMap<i64, usize>,
        boundaries: BTreeMap<i64, IntMatrix>,
    ) -> Result<Self, Error> {
        for (&d, m) in &boundaries {
            let src = ranks.get(&d).copied().unwrap_or(0);
            let tgt = ranks.get(&(d - 1)).copied().unwrap_or(0);
            if m.cols() != src || m.rows() != tgt {
                return Err(Error::Shape(format!(
                    "boundary at degree {d} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    tgt,
                    src
                )));
            }
        }
        let cc = ChainComplexZ { ranks, boundaries };
        for (&d, m) in &cc.boundaries {
            if let Some(next) = cc.boundaries.get(&(d + 1)) {
                if !(m * next).is_zero() {
                    return Err(Error::NotAChainComplex(d + 1, d - 1));
                }
            }
        }
        Ok(cc)
    }

    pub fn rank(&self, d: i64) -> usize {
        self.ranks.get(&d).copied().unwrap_or(0)
    }

    pub fn boundary(&self, d: i64) -> Option<&IntMatrix> {
        self.boundaries.get(&d)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.ranks.keys().copied()
    }

    /// `H_n = ker ∂_n / im ∂_{n+1}` in normal form.
    pub fn homology(&self, n: i64) -> FgAbGroup {
        let rank = self.rank(n);
        if rank == 0 {
            return FgAbGroup::trivial();
        }
        let cycles = match self.boundaries.get(&n) {
            Some(m) if self.rank(n - 1) > 0 => kernel_basis(m),
            _ => IntMatrix::identity(rank),
        };
        let image = match self.boundaries.get(&(n + 1)) {
            Some(m) if self.rank(n + 1) > 0 => m.clone(),
            _ => IntMatrix::zeros(rank, 0),
        };
        let (group, _) = FgAbGroup::from_subquotient(rank, &cycles, &image)
            .expect("boundaries are cycles in a chain complex");
        group
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(ranks: &[(i64, usize)], bnds: &[(i64, Vec<Vec<i64>>)]) -> ChainComplexZ {
        ChainComplexZ::new(
            ranks.iter().copied().collect(),
            bnds.iter().map(|(d, m)| (*d, IntMatrix::from_rows(m))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn circle_cellular_homology() {
        // one 0-cell, one 1-cell glued trivially
        let c = complex(&[(0, 1), (1, 1)], &[(1, vec![vec![0]])]);
        assert_eq!(c.homology(0).to_string(), "Z^1");
        assert_eq!(c.homology(1).to_string(), "Z^1");
        assert!(c.homology(2).is_trivial());
        assert!(c.homology(-1).is_trivial());
    }

    #[test]
    fn real_projective_plane() {
        // standard CW structure: boundary of the 2-cell is twice the 1-cell
        let c = complex(&[(0, 1), (1, 1), (2, 1)], &[(1, vec![vec![0]]), (2, vec![vec![2]])]);
        assert_eq!(c.homology(0).to_string(), "Z^1");
        assert_eq!(c.homology(1).to_string(), "Z/2");
        assert!(c.homology(2).is_trivial());
    }

    #[test]
    fn rejects_non_complex() {
        let r = ChainComplexZ::new(
            [(0, 1), (1, 1), (2, 1)].into_iter().collect(),
            [
                (1, IntMatrix::from_rows(&[vec![1]])),
                (2, IntMatrix::from_rows(&[vec![1]])),
            ]
            .into_iter()
            .collect(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn empty_complex_is_trivial() {
        let c = ChainComplexZ::new(BTreeMap::new(), BTreeMap::new()).unwrap();
        assert!(c.homology(0).is_trivial());
    }
}
