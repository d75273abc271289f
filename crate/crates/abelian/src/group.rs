use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::Error;
use crate::lattice::{column_basis, LatticeSolver};
use crate::matrix::{smith_normal_form, IntMatrix};

/// Canonical form of a finitely generated abelian group: free rank plus
/// the divisor chain `d_1 | d_2 | ...` with every `d_i >= 2`.
///
/// Two presentations give isomorphic groups exactly when their normal
/// forms are equal, so this is the equality test used everywhere.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct NormalForm {
    pub rank: usize,
    pub divisors: Vec<BigInt>,
}

impl NormalForm {
    pub fn free(rank: usize) -> Self {
        NormalForm { rank, divisors: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.divisors.is_empty()
    }

    /// The group tensored with `Z[1/2]`: torsion loses its 2-primary
    /// part, the free rank is unchanged.
    pub fn invert_two(&self) -> NormalForm {
        let two = BigInt::from(2);
        let mut divisors: Vec<BigInt> = self
            .divisors
            .iter()
            .map(|d| {
                let mut d = d.clone();
                while d.is_even() {
                    d = d / &two;
                }
                d
            })
            .filter(|d| !d.is_one())
            .collect();
        divisors.sort();
        NormalForm { rank: self.rank, divisors }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(format!("Z^{}", self.rank));
        }
        for d in &self.divisors {
            parts.push(format!("Z/{}", d));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// A finitely generated abelian group presented by generators and
/// relations: columns of the relation matrix index the generators, each
/// row is one relation.
#[derive(Clone, Debug)]
pub struct FgAbGroup {
    gens: usize,
    rels: IntMatrix,
    nf: NormalForm,
}

impl FgAbGroup {
    /// Presentation with one relation per row of `rels`.
    pub fn from_relation_rows(gens: usize, rels: IntMatrix) -> Self {
        assert_eq!(rels.cols(), gens, "relation width must match generator count");
        let s = smith_normal_form(&rels);
        let mut divisors: Vec<BigInt> = s
            .divisors()
            .into_iter()
            .filter(|d| d.abs() > BigInt::one())
            .collect();
        divisors.sort();
        let nf = NormalForm { rank: gens - s.rank, divisors };
        FgAbGroup { gens, rels, nf }
    }

    pub fn free(n: usize) -> Self {
        Self::from_relation_rows(n, IntMatrix::zeros(0, n))
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn cyclic(order: u64) -> Self {
        if order == 0 {
            Self::free(1)
        } else {
            Self::from_relation_rows(1, IntMatrix::from_rows(&[vec![order as i64]]))
        }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relation_rows(&self) -> &IntMatrix {
        &self.rels
    }

    /// Relation lattice as columns in `Z^gens`.
    pub fn relation_lattice(&self) -> IntMatrix {
        self.rels.transpose()
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.nf
    }

    pub fn is_trivial(&self) -> bool {
        self.nf.is_trivial()
    }

    /// The subquotient `numerator / denominator` of `Z^ambient`, where
    /// both arguments list generating columns and the denominator must
    /// lie inside the numerator lattice.
    ///
    /// Returns the group on a basis of the numerator plus the embedding
    /// matrix whose columns are that basis.
    pub fn from_subquotient(
        ambient: usize,
        numerator: &IntMatrix,
        denominator: &IntMatrix,
    ) -> Result<(FgAbGroup, IntMatrix), Error> {
        assert_eq!(numerator.rows(), ambient);
        assert_eq!(denominator.rows(), ambient);
        let basis = column_basis(numerator);
        let solver = LatticeSolver::new(&basis);
        let mut rel_cols = Vec::with_capacity(denominator.cols());
        for j in 0..denominator.cols() {
            let col = IntMatrix::from_columns(ambient, &[denominator.column(j)]);
            let z = solver.solve(&col).ok_or(Error::NotContained(j))?;
            rel_cols.push(z.column(0));
        }
        let rels = IntMatrix::from_columns(basis.cols(), &rel_cols).transpose();
        Ok((FgAbGroup::from_relation_rows(basis.cols(), rels), basis))
    }

    /// Direct sum, generators concatenated in order.
    pub fn direct_sum_of(parts: &[FgAbGroup]) -> FgAbGroup {
        let gens = parts.iter().map(|g| g.gens).sum();
        let total_rows: usize = parts.iter().map(|g| g.rels.rows()).sum();
        let mut rels = IntMatrix::zeros(total_rows, gens);
        let mut row0 = 0;
        let mut col0 = 0;
        for g in parts {
            for r in 0..g.rels.rows() {
                for c in 0..g.gens {
                    rels.set(row0 + r, col0 + c, g.rels.get(r, c).clone());
                }
            }
            row0 += g.rels.rows();
            col0 += g.gens;
        }
        FgAbGroup::from_relation_rows(gens, rels)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.nf)
    }
}
