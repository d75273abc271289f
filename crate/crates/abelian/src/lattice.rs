//! Sublattices of `Z^n`, always represented by a matrix whose columns
//! generate the lattice.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrix::{smith_normal_form, IntMatrix, Snf};

/// Basis of `ker(m)` as columns. The result is a genuine basis of the
/// full kernel lattice (saturated by construction).
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let keep: Vec<usize> = (s.rank..m.cols()).collect();
    s.v.select_columns(&keep)
}

/// Basis of the column span of `m`: the nonzero `d_j * (U^-1 e_j)`.
pub fn column_basis(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let mut cols = Vec::with_capacity(s.rank);
    for j in 0..s.rank {
        let d = s.d.get(j, j);
        cols.push((0..m.rows()).map(|i| s.u_inv.get(i, j) * d).collect::<Vec<BigInt>>());
    }
    IntMatrix::from_columns(m.rows(), &cols)
}

/// Solves `G x = rhs` column by column over `Z`, reusing one
/// decomposition of `G` for many right-hand sides.
pub struct LatticeSolver {
    snf: Snf,
    rows: usize,
    cols: usize,
}

impl LatticeSolver {
    pub fn new(generators: &IntMatrix) -> Self {
        LatticeSolver {
            snf: smith_normal_form(generators),
            rows: generators.rows(),
            cols: generators.cols(),
        }
    }

    /// Integral solution of `G x = rhs` for every column of `rhs`, or
    /// `None` if some column is not in the lattice.
    pub fn solve(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(rhs.rows(), self.rows, "rhs length mismatch");
        let y = &self.snf.u * rhs;
        let mut z = IntMatrix::zeros(self.cols, rhs.cols());
        for c in 0..rhs.cols() {
            for r in 0..self.rows {
                let yv = y.get(r, c);
                if r < self.snf.rank {
                    let d = self.snf.d.get(r, r);
                    let (q, rem) = num_integer::div_rem(yv.clone(), d.clone());
                    if !rem.is_zero() {
                        return None;
                    }
                    z.set(r, c, q);
                } else if !yv.is_zero() {
                    return None;
                }
            }
        }
        Some(&self.snf.v * &z)
    }

    pub fn contains(&self, v: &IntMatrix) -> bool {
        self.solve(v).is_some()
    }
}

/// Membership of every column of `v` in the column span of `gens`.
pub fn lattice_contains(gens: &IntMatrix, v: &IntMatrix) -> bool {
    LatticeSolver::new(gens).contains(v)
}

/// Equality of column-span lattices by mutual containment.
pub fn lattice_eq(a: &IntMatrix, b: &IntMatrix) -> bool {
    assert_eq!(a.rows(), b.rows(), "ambient rank mismatch");
    lattice_contains(a, b) && lattice_contains(b, a)
}

/// Basis of the sum of two lattices.
pub fn lattice_sum(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    column_basis(&a.hstack(b))
}

/// Basis of `{ x : f x ∈ colspan(w) }`.
///
/// Solutions are the projections of `ker [f | -w]` to the `x` block, and
/// projecting a basis of the kernel generates the projection lattice.
pub fn preimage_basis(f: &IntMatrix, w: &IntMatrix) -> IntMatrix {
    assert_eq!(f.rows(), w.rows(), "ambient rank mismatch");
    if w.cols() == 0 {
        return kernel_basis(f);
    }
    let g = f.hstack(&w.neg());
    let k = kernel_basis(&g);
    column_basis(&k.top_rows(f.cols()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_projection() {
        // (x, y) -> x + 2y
        let m = IntMatrix::from_rows(&[vec![1, 2]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());
        // (2, -1) generates; check saturation: (2,-1) must be primitive
        let g = num_integer::gcd(k.get(0, 0).clone(), k.get(1, 0).clone());
        assert_eq!(g, BigInt::from(1u32).into());
    }

    #[test]
    fn solve_and_membership() {
        let g = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = LatticeSolver::new(&g);
        assert!(s.contains(&IntMatrix::from_rows(&[vec![4], vec![9]])));
        assert!(!s.contains(&IntMatrix::from_rows(&[vec![1], vec![0]])));
    }

    #[test]
    fn preimage_mod_lattice() {
        // {x in Z^2 : x1 + x2 ∈ 2Z}
        let f = IntMatrix::from_rows(&[vec![1, 1]]);
        let w = IntMatrix::from_rows(&[vec![2]]);
        let p = preimage_basis(&f, &w);
        // index-2 sublattice of Z^2
        assert_eq!(p.cols(), 2);
        assert!(lattice_contains(&p, &IntMatrix::from_rows(&[vec![1], vec![1]])));
        assert!(!lattice_contains(&p, &IntMatrix::from_rows(&[vec![1], vec![0]])));
    }

    #[test]
    fn sum_of_lattices() {
        let a = IntMatrix::from_rows(&[vec![2], vec![0]]);
        let b = IntMatrix::from_rows(&[vec![0], vec![3]]);
        let s = lattice_sum(&a, &b);
        assert!(lattice_contains(&s, &IntMatrix::from_rows(&[vec![2], vec![3]])));
        assert!(!lattice_contains(&s, &IntMatrix::from_rows(&[vec![1], vec![0]])));
    }
}
