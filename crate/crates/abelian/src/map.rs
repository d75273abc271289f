use num_bigint::BigInt;

use crate::error::Error;
use crate::group::{FgAbGroup, NormalForm};
use crate::lattice::{lattice_contains, lattice_sum, preimage_basis, LatticeSolver};
use crate::matrix::IntMatrix;

/// Homomorphism between presented groups. Column `j` of `matrix` is the
/// image of the `j`-th source generator written in target generators.
///
/// Construction checks well-definedness: every source relation must map
/// into the target relation lattice.
#[derive(Clone, Debug)]
pub struct AbMap {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl AbMap {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self, Error> {
        assert_eq!(matrix.rows(), target.gens(), "matrix rows must match target generators");
        assert_eq!(matrix.cols(), source.gens(), "matrix cols must match source generators");
        let rel_lattice = target.relation_lattice();
        let solver = LatticeSolver::new(&rel_lattice);
        let src_rels = source.relation_rows();
        for r in 0..src_rels.rows() {
            let rel = IntMatrix::from_fn(source.gens(), 1, |i, _| src_rels.get(r, i).clone());
            let image = &matrix * &rel;
            if !solver.contains(&image) {
                return Err(Error::NotWellDefined { relation: r });
            }
        }
        Ok(AbMap { source, target, matrix })
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        AbMap { source: g.clone(), target: g.clone(), matrix: IntMatrix::identity(g.gens()) }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        AbMap {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.gens(), source.gens()),
        }
    }

    /// Multiplication by a fixed integer.
    pub fn scalar(g: &FgAbGroup, c: &BigInt) -> Self {
        AbMap { source: g.clone(), target: g.clone(), matrix: IntMatrix::scalar(g.gens(), c) }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &AbMap) -> Result<AbMap, Error> {
        if other.target.gens() != self.source.gens()
            || other.target.normal_form() != self.source.normal_form()
        {
            return Err(Error::NotComposable(
                "target of inner map does not match source of outer map".into(),
            ));
        }
        AbMap::new(other.source.clone(), self.target.clone(), &self.matrix * &other.matrix)
    }

    pub fn add(&self, other: &AbMap) -> AbMap {
        AbMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix),
        }
    }

    pub fn negate(&self) -> AbMap {
        AbMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.neg() }
    }

    /// Equality as maps of presented groups: the difference of matrices
    /// must send every generator into the target relation lattice.
    pub fn equal_to(&self, other: &AbMap) -> bool {
        if self.source.gens() != other.source.gens() || self.target.gens() != other.target.gens() {
            return false;
        }
        let diff = self.matrix.sub(&other.matrix);
        lattice_contains(&self.target.relation_lattice(), &diff)
    }

    pub fn is_zero_map(&self) -> bool {
        lattice_contains(&self.target.relation_lattice(), &self.matrix)
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (FgAbGroup, AbMap) {
        let lat = preimage_basis(&self.matrix, &self.target.relation_lattice());
        let (group, basis) = FgAbGroup::from_subquotient(
            self.source.gens(),
            &lat,
            &self.source.relation_lattice(),
        )
        .expect("source relations lie in the kernel of a well-defined map");
        let incl = AbMap::new(group.clone(), self.source.clone(), basis)
            .expect("kernel inclusion is well defined");
        (group, incl)
    }

    /// Image with its inclusion into the target.
    pub fn image(&self) -> (FgAbGroup, AbMap) {
        let num = lattice_sum(&self.matrix, &self.target.relation_lattice());
        let (group, basis) = FgAbGroup::from_subquotient(
            self.target.gens(),
            &num,
            &self.target.relation_lattice(),
        )
        .expect("target relations lie in the image lattice");
        let incl = AbMap::new(group.clone(), self.target.clone(), basis)
            .expect("image inclusion is well defined");
        (group, incl)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (FgAbGroup, AbMap) {
        let rels = self.target.relation_rows().vstack(&self.matrix.transpose());
        let group = FgAbGroup::from_relation_rows(self.target.gens(), rels);
        let proj = AbMap::new(self.target.clone(), group.clone(), IntMatrix::identity(self.target.gens()))
            .expect("projection is well defined");
        (group, proj)
    }

    pub fn is_iso(&self) -> bool {
        self.kernel().0.is_trivial() && self.cokernel().0.is_trivial()
    }

    /// Inverse of an isomorphism: solve for a preimage of each target
    /// generator modulo relations.
    pub fn inverse(&self) -> Result<AbMap, Error> {
        if !self.is_iso() {
            return Err(Error::NotInvertible);
        }
        // [M | R_target] (x; y) = e_j gives M x ≡ e_j.
        let aug = self.matrix.hstack(&self.target.relation_lattice());
        let solver = LatticeSolver::new(&aug);
        let sol = solver
            .solve(&IntMatrix::identity(self.target.gens()))
            .ok_or(Error::NotInvertible)?;
        AbMap::new(self.target.clone(), self.source.clone(), sol.top_rows(self.source.gens()))
    }
}

/// The outcome of an exactness test at the middle group of `f, g`.
#[derive(Clone, Debug)]
pub struct ExactnessVerdict {
    pub exact: bool,
    pub composite_zero: bool,
    /// `ker g / im f`, trivial exactly when the pair is exact (given
    /// the composite vanishes).
    pub defect: NormalForm,
}

/// Exactness of `A -f-> B -g-> C` at `B`: image of `f` equals kernel of
/// `g` as subgroups of `B`.
pub fn check_exact(f: &AbMap, g: &AbMap) -> Result<ExactnessVerdict, Error> {
    if f.target().gens() != g.source().gens() || f.target().normal_form() != g.source().normal_form()
    {
        return Err(Error::NotComposable("middle groups do not match".into()));
    }
    let b_rels = f.target().relation_lattice();
    let im = lattice_sum(f.matrix(), &b_rels);
    let ker = preimage_basis(g.matrix(), &g.target().relation_lattice());
    let composite_zero = lattice_contains(&ker, &im);
    if !composite_zero {
        return Ok(ExactnessVerdict {
            exact: false,
            composite_zero: false,
            defect: NormalForm::free(0),
        });
    }
    let (defect_group, _) = FgAbGroup::from_subquotient(f.target().gens(), &ker, &im)
        .expect("image lies inside kernel once the composite vanishes");
    let defect = defect_group.normal_form().clone();
    Ok(ExactnessVerdict { exact: defect.is_trivial(), composite_zero: true, defect })
}

/// Quotient-induced map `A/A' -> B/B'` of `f : A -> B`, where the
/// subgroups are given by generating columns in the respective
/// generators. Fails unless `f(A') ⊆ B'` (inside `B`).
pub fn induced_on_quotients(
    f: &AbMap,
    src_sub: &IntMatrix,
    tgt_sub: &IntMatrix,
) -> Result<AbMap, Error> {
    assert_eq!(src_sub.rows(), f.source().gens());
    assert_eq!(tgt_sub.rows(), f.target().gens());
    let tgt_lattice = lattice_sum(tgt_sub, &f.target().relation_lattice());
    let solver = LatticeSolver::new(&tgt_lattice);
    let images = f.matrix() * src_sub;
    for j in 0..images.cols() {
        let col = IntMatrix::from_columns(images.rows(), &[images.column(j)]);
        if !solver.contains(&col) {
            return Err(Error::NotInduced(j));
        }
    }
    let src_q = FgAbGroup::from_relation_rows(
        f.source().gens(),
        f.source().relation_rows().vstack(&src_sub.transpose()),
    );
    let tgt_q = FgAbGroup::from_relation_rows(
        f.target().gens(),
        f.target().relation_rows().vstack(&tgt_sub.transpose()),
    );
    AbMap::new(src_q, tgt_q, f.matrix().clone())
}

/// Direct sum of maps along direct sums of groups, in block order.
pub fn direct_sum(maps: &[AbMap]) -> AbMap {
    let source = FgAbGroup::direct_sum_of(&maps.iter().map(|m| m.source().clone()).collect::<Vec<_>>());
    let target = FgAbGroup::direct_sum_of(&maps.iter().map(|m| m.target().clone()).collect::<Vec<_>>());
    let mut matrix = IntMatrix::zeros(target.gens(), source.gens());
    let mut r0 = 0;
    let mut c0 = 0;
    for m in maps {
        for r in 0..m.target().gens() {
            for c in 0..m.source().gens() {
                matrix.set(r0 + r, c0 + c, m.matrix().get(r, c).clone());
            }
        }
        r0 += m.target().gens();
        c0 += m.source().gens();
    }
    AbMap { source, target, matrix }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> FgAbGroup {
        FgAbGroup::free(1)
    }

    fn z_mod(n: i64) -> FgAbGroup {
        FgAbGroup::from_relation_rows(1, IntMatrix::from_rows(&[vec![n]]))
    }

    fn map1(s: &FgAbGroup, t: &FgAbGroup, m: &[Vec<i64>]) -> AbMap {
        AbMap::new(s.clone(), t.clone(), IntMatrix::from_rows(m)).unwrap()
    }

    #[test]
    fn kernel_cokernel_of_doubling() {
        let f = map1(&z(), &z(), &[vec![2]]);
        assert!(f.kernel().0.is_trivial());
        assert_eq!(f.cokernel().0.to_string(), "Z/2");
    }

    #[test]
    fn kernel_image_of_zero_map() {
        let f = AbMap::zero(&z(), &z());
        assert_eq!(f.kernel().0.to_string(), "Z^1");
        assert!(f.image().0.is_trivial());
    }

    #[test]
    fn row_map_2_4() {
        // Z^2 -> Z, (x,y) -> 2x + 4y
        let f = map1(&FgAbGroup::free(2), &z(), &[vec![2, 4]]);
        assert_eq!(f.kernel().0.to_string(), "Z^1");
        assert_eq!(f.cokernel().0.to_string(), "Z/2");
        assert_eq!(f.image().0.to_string(), "Z^1");
    }

    #[test]
    fn well_definedness_rejected() {
        // Z/2 -> Z, 1 -> 1 is not a homomorphism.
        let r = AbMap::new(z_mod(2), z(), IntMatrix::from_rows(&[vec![1]]));
        assert!(r.is_err());
    }

    #[test]
    fn exactness_bockstein_core() {
        // Z -2-> Z -proj-> Z/2 is exact at the middle.
        let f = map1(&z(), &z(), &[vec![2]]);
        let g = map1(&z(), &z_mod(2), &[vec![1]]);
        let v = check_exact(&f, &g).unwrap();
        assert!(v.exact && v.composite_zero);
    }

    #[test]
    fn exactness_detects_nonzero_composite() {
        let f = map1(&z(), &z(), &[vec![2]]);
        let g = map1(&z(), &z(), &[vec![3]]);
        let v = check_exact(&f, &g).unwrap();
        assert!(!v.exact && !v.composite_zero);
    }

    #[test]
    fn exactness_zero_then_injective() {
        // Z -0-> Z -id-> Z: im f = 0 = ker g, exact.
        let f = AbMap::zero(&z(), &z());
        let g = map1(&z(), &z(), &[vec![1]]);
        let v = check_exact(&f, &g).unwrap();
        assert!(v.exact);
    }

    #[test]
    fn induced_quotient_maps() {
        // identity on Z with A' = B' = 2Z: identity on Z/2
        let f = AbMap::identity(&z());
        let two = IntMatrix::from_rows(&[vec![2]]);
        let q = induced_on_quotients(&f, &two, &two).unwrap();
        assert_eq!(q.source().to_string(), "Z/2");
        assert!(q.equal_to(&AbMap::identity(q.source())));

        // doubling Z -> Z with A' = 0, B' = 4Z: Z -> Z/4, 1 -> 2
        let d = map1(&z(), &z(), &[vec![2]]);
        let none = IntMatrix::zeros(1, 0);
        let four = IntMatrix::from_rows(&[vec![4]]);
        let q = induced_on_quotients(&d, &none, &four).unwrap();
        assert_eq!(q.target().to_string(), "Z/4");
        assert!(!q.is_zero_map());

        // violation: identity on Z with A' = Z, B' = 2Z
        let all = IntMatrix::identity(1);
        assert!(induced_on_quotients(&AbMap::identity(&z()), &all, &four).is_err());
    }

    #[test]
    fn inverse_of_iso() {
        // Z/5 -> Z/5 by 2 is invertible (inverse is 3).
        let f = map1(&z_mod(5), &z_mod(5), &[vec![2]]);
        let inv = f.inverse().unwrap();
        let id = f.compose(&inv).unwrap();
        assert!(id.equal_to(&AbMap::identity(&z_mod(5))));
    }
}
