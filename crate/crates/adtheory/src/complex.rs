use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use abelian::{ChainComplexZ, IntMatrix};
use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Identifier of a cell, unique within its complex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct CellId(pub String);

impl CellId {
    pub fn new(s: impl Into<String>) -> Self {
        CellId(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<&str> for CellId {
    fn from(s: &str) -> Self {
        CellId(s.to_string())
    }
}

#[derive(Clone, Debug)]
pub struct Cell {
    pub id: CellId,
    pub dim: usize,
    pub label: Option<String>,
}

/// Canonical cell id of the face of a simplex spanned by `verts`
/// (ascending): vertices joined by dots, e.g. `0.2.3`.
pub fn simplex_cell_id(verts: &[usize]) -> CellId {
    CellId(verts.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("."))
}

/// Canonical id of a product cell.
pub fn product_cell_id(left: &CellId, right: &CellId) -> CellId {
    CellId(format!("({}|{})", left.0, right.0))
}

/// A finite ball complex presented as a graded poset of cells with
/// incidence numbers in {-1, 0, +1}. Orientations are not stored: every
/// cell carries a fixed reference orientation and the opposite
/// orientation is handled by negating values.
#[derive(Clone, Debug)]
pub struct BallComplex {
    cells: Vec<Cell>,
    index: BTreeMap<CellId, usize>,
    /// Codim-1 faces with incidence signs, per cell.
    faces: Vec<Vec<(usize, i64)>>,
}

/// Outcome of structural validation; `ok()` when no violations.
#[derive(Clone, Debug, Default)]
pub struct ComplexReport {
    pub violations: Vec<String>,
}

impl ComplexReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ComplexReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "ok")
        } else {
            write!(f, "{}", self.violations.join("\n"))
        }
    }
}

impl BallComplex {
    /// Build from a cell list and incidence triples `(of, face, sign)`.
    /// Duplicate ids, dangling references and signs outside {-1,+1} are
    /// hard errors; everything else is left to `validate`.
    pub fn new(mut cells: Vec<Cell>, incidence: Vec<(CellId, CellId, i64)>) -> Result<Self> {
        cells.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        let mut index = BTreeMap::new();
        for (i, c) in cells.iter().enumerate() {
            if index.insert(c.id.clone(), i).is_some() {
                return Err(Error::DuplicateCell(c.id.clone()));
            }
        }
        let mut faces = vec![Vec::new(); cells.len()];
        for (of, face, sign) in incidence {
            if sign != 1 && sign != -1 {
                return Err(Error::BadSign { of, face, sign });
            }
            let &oi = index.get(&of).ok_or_else(|| Error::UnknownCell(of.clone()))?;
            let &fi = index.get(&face).ok_or_else(|| Error::UnknownCell(face.clone()))?;
            faces[oi].push((fi, sign));
        }
        for list in &mut faces {
            list.sort_by_key(|&(i, _)| i);
        }
        Ok(BallComplex { cells, index, faces })
    }

    pub fn empty() -> Self {
        BallComplex { cells: Vec::new(), index: BTreeMap::new(), faces: Vec::new() }
    }

    /// One 0-cell named `*`.
    pub fn point() -> Self {
        BallComplex::new(vec![Cell { id: "*".into(), dim: 0, label: None }], Vec::new())
            .expect("point complex is well formed")
    }

    /// The standard n-simplex on vertices `0..=n`.
    pub fn simplex(n: usize) -> Self {
        Self::simplex_on(&(0..=n).collect::<Vec<_>>())
    }

    /// The full simplex on an arbitrary ascending vertex set. Cells are
    /// the nonempty subsets; the face dropping the j-th vertex (in the
    /// sorted order) carries sign (-1)^j.
    pub fn simplex_on(vertices: &[usize]) -> Self {
        assert!(vertices.windows(2).all(|w| w[0] < w[1]), "vertices must be ascending");
        let n = vertices.len();
        let mut cells = Vec::new();
        let mut incidence = Vec::new();
        for mask in 1u32..(1 << n) {
            let verts: Vec<usize> =
                (0..n).filter(|i| mask & (1 << i) != 0).map(|i| vertices[i]).collect();
            let id = simplex_cell_id(&verts);
            cells.push(Cell { id: id.clone(), dim: verts.len() - 1, label: None });
            if verts.len() > 1 {
                for (j, _) in verts.iter().enumerate() {
                    let mut sub = verts.clone();
                    sub.remove(j);
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    incidence.push((id.clone(), simplex_cell_id(&sub), sign));
                }
            }
        }
        BallComplex::new(cells, incidence).expect("simplex is well formed")
    }

    /// Product complex together with the component indices of each
    /// product cell, for callers that need to take cells apart again.
    pub fn product_with_parts(a: &BallComplex, b: &BallComplex) -> (Self, Vec<(usize, usize)>) {
        let mut cells = Vec::new();
        let mut incidence = Vec::new();
        for (ai, ac) in a.cells.iter().enumerate() {
            for (bi, bc) in b.cells.iter().enumerate() {
                let id = product_cell_id(&ac.id, &bc.id);
                cells.push((Cell { id: id.clone(), dim: ac.dim + bc.dim, label: None }, (ai, bi)));
                for &(fi, sign) in &a.faces[ai] {
                    incidence.push((id.clone(), product_cell_id(&a.cells[fi].id, &bc.id), sign));
                }
                // Leibniz sign on the second factor.
                let s = if ac.dim % 2 == 0 { 1 } else { -1 };
                for &(fi, sign) in &b.faces[bi] {
                    incidence.push((id.clone(), product_cell_id(&ac.id, &b.cells[fi].id), s * sign));
                }
            }
        }
        cells.sort_by(|x, y| (x.0.dim, &x.0.id).cmp(&(y.0.dim, &y.0.id)));
        let parts: Vec<(usize, usize)> = cells.iter().map(|c| c.1).collect();
        let cx = BallComplex::new(cells.into_iter().map(|c| c.0).collect(), incidence)
            .expect("product of well-formed complexes is well formed");
        (cx, parts)
    }

    pub fn product(a: &BallComplex, b: &BallComplex) -> Self {
        Self::product_with_parts(a, b).0
    }

    /// Subcomplex of proper faces of `cell`.
    pub fn boundary_of(&self, cell: &CellId) -> Result<BallComplex> {
        let &ci = self.index.get(cell).ok_or_else(|| Error::UnknownCell(cell.clone()))?;
        let mut keep = self.closure(ci);
        keep.remove(&ci);
        self.subcomplex(&keep)
    }

    /// Subcomplex spanned by a downward-closed index set.
    pub fn subcomplex(&self, keep: &BTreeSet<usize>) -> Result<BallComplex> {
        let cells: Vec<Cell> = keep.iter().map(|&i| self.cells[i].clone()).collect();
        let mut incidence = Vec::new();
        for &i in keep {
            for &(fi, sign) in &self.faces[i] {
                if keep.contains(&fi) {
                    incidence.push((self.cells[i].id.clone(), self.cells[fi].id.clone(), sign));
                }
            }
        }
        BallComplex::new(cells, incidence)
    }

    /// All faces of a cell (including itself), as indices.
    pub fn closure(&self, start: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if out.insert(i) {
                for &(f, _) in &self.faces[i] {
                    stack.push(f);
                }
            }
        }
        out
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_index(&self, id: &CellId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn contains(&self, id: &CellId) -> bool {
        self.index.contains_key(id)
    }

    pub fn faces_of(&self, i: usize) -> &[(usize, i64)] {
        &self.faces[i]
    }

    pub fn cells_of_dim(&self, d: usize) -> impl Iterator<Item = (usize, &Cell)> {
        self.cells.iter().enumerate().filter(move |(_, c)| c.dim == d)
    }

    pub fn incidence(&self, of: &CellId, face: &CellId) -> i64 {
        let (Some(&oi), Some(&fi)) = (self.index.get(of), self.index.get(face)) else {
            return 0;
        };
        self.faces[oi].iter().find(|&&(i, _)| i == fi).map_or(0, |&(_, s)| s)
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.dim).max()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells.iter().map(|c| if c.dim % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// Structural validation: incidence only between codimension-1
    /// pairs, and the double boundary vanishes.
    pub fn validate(&self) -> ComplexReport {
        let mut report = ComplexReport::default();
        for (i, c) in self.cells.iter().enumerate() {
            for &(fi, _) in &self.faces[i] {
                let fc = &self.cells[fi];
                if fc.dim + 1 != c.dim {
                    report.violations.push(format!(
                        "incidence between {} (dim {}) and {} (dim {}) is not codimension 1",
                        c.id, c.dim, fc.id, fc.dim
                    ));
                }
            }
        }
        if !report.ok() {
            return report;
        }
        for (i, c) in self.cells.iter().enumerate() {
            let mut sums: BTreeMap<usize, i64> = BTreeMap::new();
            for &(mid, s1) in &self.faces[i] {
                for &(low, s2) in &self.faces[mid] {
                    *sums.entry(low).or_insert(0) += s1 * s2;
                }
            }
            for (low, sum) in sums {
                if sum != 0 {
                    report.violations.push(format!(
                        "∂∂≠0 at ({}, {})",
                        c.id, self.cells[low].id
                    ));
                }
            }
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let r = self.validate();
        if r.ok() {
            Ok(())
        } else {
            Err(Error::InvalidComplex(r.to_string()))
        }
    }

    /// Cellular chain complex with the cells of each dimension ordered
    /// as in `cells_of_dim`.
    pub fn chain_complex(&self) -> Result<ChainComplexZ> {
        let max = match self.max_dim() {
            Some(m) => m,
            None => return Ok(ChainComplexZ::new(BTreeMap::new(), BTreeMap::new())?),
        };
        let mut ranks = BTreeMap::new();
        let mut pos_in_dim: BTreeMap<usize, usize> = BTreeMap::new();
        for d in 0..=max {
            let cells: Vec<usize> = self.cells_of_dim(d).map(|(i, _)| i).collect();
            for (p, &i) in cells.iter().enumerate() {
                pos_in_dim.insert(i, p);
            }
            ranks.insert(d as i64, cells.len());
        }
        let mut boundaries = BTreeMap::new();
        for d in 1..=max {
            let rows = ranks[&(d as i64 - 1)];
            let cols_cells: Vec<usize> = self.cells_of_dim(d).map(|(i, _)| i).collect();
            let mut m = IntMatrix::zeros(rows, cols_cells.len());
            for (j, &ci) in cols_cells.iter().enumerate() {
                for &(fi, sign) in &self.faces[ci] {
                    m.set(pos_in_dim[&fi], j, BigInt::from(sign));
                }
            }
            boundaries.insert(d as i64, m);
        }
        Ok(ChainComplexZ::new(ranks, boundaries)?)
    }
}

/// A subdivision: a finer complex refining a coarser one. `carrier`
/// sends each fine cell to the coarse cell whose interior contains it;
/// `orientation` records, for each fine cell whose carrier has equal
/// dimension, the sign with which it enters the fundamental chain of
/// its carrier.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub fine: Arc<BallComplex>,
    pub coarse: Arc<BallComplex>,
    carrier: BTreeMap<CellId, CellId>,
    orientation: BTreeMap<CellId, i64>,
}

impl Subdivision {
    pub fn new(
        fine: Arc<BallComplex>,
        coarse: Arc<BallComplex>,
        carrier: BTreeMap<CellId, CellId>,
        orientation: BTreeMap<CellId, i64>,
    ) -> Result<Self> {
        for (f, c) in &carrier {
            let fi = fine.cell_index(f).ok_or_else(|| Error::UnknownCell(f.clone()))?;
            let ci = coarse.cell_index(c).ok_or_else(|| Error::UnknownCell(c.clone()))?;
            if fine.cells()[fi].dim > coarse.cells()[ci].dim {
                return Err(Error::Invalid(format!(
                    "carrier of {} has lower dimension",
                    f
                )));
            }
        }
        Ok(Subdivision { fine, coarse, carrier, orientation })
    }

    pub fn carrier(&self, f: &CellId) -> Option<&CellId> {
        self.carrier.get(f)
    }

    pub fn orientation_sign(&self, f: &CellId) -> i64 {
        self.orientation.get(f).copied().unwrap_or(0)
    }

    /// Fine cells of equal dimension carried onto `c`, with their
    /// fundamental-chain signs.
    pub fn pieces_of(&self, c: &CellId) -> Vec<(CellId, i64)> {
        let cd = self.coarse.cell_index(c).map(|i| self.coarse.cells()[i].dim);
        self.carrier
            .iter()
            .filter(|(f, cc)| {
                *cc == c
                    && self.fine.cell_index(f).map(|i| Some(self.fine.cells()[i].dim)) == Some(cd)
            })
            .map(|(f, _)| (f.clone(), self.orientation_sign(f)))
            .collect()
    }

    /// The fundamental-chain invariant: the signed carrier map is a
    /// chain map from the coarse to the fine complex in every degree.
    pub fn validate(&self) -> ComplexReport {
        let mut report = ComplexReport::default();
        let max = self.fine.max_dim().unwrap_or(0).max(self.coarse.max_dim().unwrap_or(0));
        // s_d : C_d(coarse) -> C_d(fine)
        let s = |d: usize| -> BTreeMap<(CellId, CellId), i64> {
            let mut m = BTreeMap::new();
            for (_, cc) in self.coarse.cells_of_dim(d) {
                for (f, sign) in self.pieces_of(&cc.id) {
                    m.insert((f, cc.id.clone()), sign);
                }
            }
            m
        };
        for d in 1..=max {
            let s_d = s(d);
            let s_dm1 = s(d - 1);
            // compare ∂^fine ∘ s_d with s_{d-1} ∘ ∂^coarse entrywise
            for (_, cc) in self.coarse.cells_of_dim(d) {
                let mut lhs: BTreeMap<CellId, i64> = BTreeMap::new();
                for (fi, fc) in self.fine.cells_of_dim(d) {
                    let Some(&sv) = s_d.get(&(fc.id.clone(), cc.id.clone())) else { continue };
                    for &(ffi, sign) in self.fine.faces_of(fi) {
                        *lhs.entry(self.fine.cells()[ffi].id.clone()).or_insert(0) += sv * sign;
                    }
                }
                let mut rhs: BTreeMap<CellId, i64> = BTreeMap::new();
                let ci = self.coarse.cell_index(&cc.id).unwrap();
                for &(cfi, sign) in self.coarse.faces_of(ci) {
                    let cf = &self.coarse.cells()[cfi];
                    for (_, fc) in self.fine.cells_of_dim(d - 1) {
                        if let Some(&sv) = s_dm1.get(&(fc.id.clone(), cf.id.clone())) {
                            *rhs.entry(fc.id.clone()).or_insert(0) += sign * sv;
                        }
                    }
                }
                lhs.retain(|_, v| *v != 0);
                rhs.retain(|_, v| *v != 0);
                if lhs != rhs {
                    report.violations.push(format!(
                        "fundamental chain of {} does not commute with the boundary",
                        cc.id
                    ));
                }
            }
        }
        report
    }
}

/// A two-edge path refining the interval, midpoint named `m`.
fn split_interval() -> BallComplex {
    let cells = vec![
        Cell { id: "0".into(), dim: 0, label: None },
        Cell { id: "1".into(), dim: 0, label: None },
        Cell { id: "m".into(), dim: 0, label: None },
        Cell { id: "0.m".into(), dim: 1, label: None },
        Cell { id: "m.1".into(), dim: 1, label: None },
    ];
    let incidence = vec![
        ("0.m".into(), "m".into(), 1),
        ("0.m".into(), "0".into(), -1),
        ("m.1".into(), "1".into(), 1),
        ("m.1".into(), "m".into(), -1),
    ];
    BallComplex::new(cells, incidence).expect("split interval is well formed")
}

/// Subdivision of `K × I` that splits the interval at its midpoint.
pub fn interval_subdivision(k: &BallComplex) -> Subdivision {
    let interval = BallComplex::simplex(1);
    let coarse = BallComplex::product(k, &interval);
    let fine = BallComplex::product(k, &split_interval());
    let carrier_i: BTreeMap<&str, &str> =
        [("0", "0"), ("1", "1"), ("m", "0.1"), ("0.m", "0.1"), ("m.1", "0.1")].into();
    let mut carrier = BTreeMap::new();
    let mut orientation = BTreeMap::new();
    for kc in k.cells() {
        for (fx, cx) in &carrier_i {
            let f = product_cell_id(&kc.id, &CellId::new(*fx));
            let c = product_cell_id(&kc.id, &CellId::new(*cx));
            carrier.insert(f.clone(), c);
            // all fundamental-chain signs are +1 with the forward
            // orientation of both interval models
            if *fx != "m" {
                orientation.insert(f, 1);
            }
        }
    }
    Subdivision::new(Arc::new(fine), Arc::new(coarse), carrier, orientation)
        .expect("interval subdivision is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_counts() {
        let s2 = BallComplex::simplex(2);
        assert_eq!(s2.cells_of_dim(0).count(), 3);
        assert_eq!(s2.cells_of_dim(1).count(), 3);
        assert_eq!(s2.cells_of_dim(2).count(), 1);
        assert!(s2.validate().ok());

        let s0 = BallComplex::simplex(0);
        assert_eq!(s0.cells().len(), 1);
    }

    #[test]
    fn simplex_edge_signs() {
        let s1 = BallComplex::simplex(1);
        assert_eq!(s1.incidence(&"0.1".into(), &"1".into()), 1);
        assert_eq!(s1.incidence(&"0.1".into(), &"0".into()), -1);
    }

    #[test]
    fn empty_complex_is_ok() {
        assert!(BallComplex::empty().validate().ok());
    }

    #[test]
    fn flipped_sign_breaks_double_boundary() {
        let s2 = BallComplex::simplex(2);
        let mut cells = Vec::new();
        let mut incidence = Vec::new();
        for c in s2.cells() {
            cells.push(c.clone());
        }
        for (i, c) in s2.cells().iter().enumerate() {
            for &(fi, sign) in s2.faces_of(i) {
                let f = &s2.cells()[fi];
                let s = if c.id == CellId::new("0.1.2") && f.id == CellId::new("0.1") {
                    -sign
                } else {
                    sign
                };
                incidence.push((c.id.clone(), f.id.clone(), s));
            }
        }
        let broken = BallComplex::new(cells, incidence).unwrap();
        let report = broken.validate();
        assert!(!report.ok());
        assert!(report.violations.iter().any(|v| v.contains("∂∂≠0")));
    }

    #[test]
    fn product_counts_and_unit() {
        let s1 = BallComplex::simplex(1);
        let sq = BallComplex::product(&s1, &s1);
        assert_eq!(sq.cells().len(), 9);
        assert_eq!(sq.cells_of_dim(0).count(), 4);
        assert_eq!(sq.cells_of_dim(1).count(), 4);
        assert_eq!(sq.cells_of_dim(2).count(), 1);
        assert!(sq.validate().ok());

        let k = BallComplex::simplex(2);
        let kp = BallComplex::product(&k, &BallComplex::point());
        assert_eq!(kp.cells().len(), k.cells().len());
        for c in k.cells() {
            let pid = product_cell_id(&c.id, &"*".into());
            let pi = kp.cell_index(&pid).unwrap();
            assert_eq!(kp.cells()[pi].dim, c.dim);
        }
        // incidence carried over verbatim
        assert_eq!(
            kp.incidence(&product_cell_id(&"0.1".into(), &"*".into()),
                         &product_cell_id(&"0".into(), &"*".into())),
            k.incidence(&"0.1".into(), &"0".into())
        );
    }

    #[test]
    fn product_is_associative_up_to_relabeling() {
        let a = BallComplex::simplex(1);
        let b = BallComplex::boundary_of(&BallComplex::simplex(2), &"0.1.2".into()).unwrap();
        let c = BallComplex::simplex(0);
        let left = BallComplex::product(&BallComplex::product(&a, &b), &c);
        let right = BallComplex::product(&a, &BallComplex::product(&b, &c));
        assert_eq!(left.cells().len(), right.cells().len());
        for ac in a.cells() {
            for bc in b.cells() {
                for cc in c.cells() {
                    let l_id = product_cell_id(&product_cell_id(&ac.id, &bc.id), &cc.id);
                    let r_id = product_cell_id(&ac.id, &product_cell_id(&bc.id, &cc.id));
                    let li = left.cell_index(&l_id).unwrap();
                    let ri = right.cell_index(&r_id).unwrap();
                    assert_eq!(left.cells()[li].dim, right.cells()[ri].dim);
                    // matching incidence through the canonical pairing
                    for ac2 in a.cells() {
                        for bc2 in b.cells() {
                            for cc2 in c.cells() {
                                let l2 = product_cell_id(&product_cell_id(&ac2.id, &bc2.id), &cc2.id);
                                let r2 = product_cell_id(&ac2.id, &product_cell_id(&bc2.id, &cc2.id));
                                assert_eq!(left.incidence(&l_id, &l2), right.incidence(&r_id, &r2));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn torus_euler_characteristic() {
        let circle = BallComplex::boundary_of(&BallComplex::simplex(2), &"0.1.2".into()).unwrap();
        assert_eq!(circle.cells().len(), 6);
        let torus = BallComplex::product(&circle, &circle);
        assert_eq!(torus.euler_characteristic(), 0);
        assert!(torus.validate().ok());
    }

    #[test]
    fn boundary_subcomplex() {
        let s2 = BallComplex::simplex(2);
        let circle = s2.boundary_of(&"0.1.2".into()).unwrap();
        assert_eq!(circle.cells_of_dim(0).count(), 3);
        assert_eq!(circle.cells_of_dim(1).count(), 3);
        assert!(circle.validate().ok());

        let s1 = BallComplex::simplex(1);
        let two_points = s1.boundary_of(&"0.1".into()).unwrap();
        assert_eq!(two_points.cells().len(), 2);

        let vertex_boundary = s2.boundary_of(&"0".into()).unwrap();
        assert!(vertex_boundary.cells().is_empty());

        assert!(s2.boundary_of(&"9.9".into()).is_err());
    }

    #[test]
    fn leibniz_rule_as_block_matrices() {
        // boundary of K×L equals ∂_K⊗1 + (-1)^deg 1⊗∂_L on each product cell
        let k = BallComplex::simplex(1);
        let l = BallComplex::simplex(2);
        let p = BallComplex::product(&k, &l);
        for (pi, pc) in p.cells().iter().enumerate() {
            // reconstruct expected faces from the component structure
            let mut expected: BTreeMap<CellId, i64> = BTreeMap::new();
            // parse the id "(a|b)"
            let inner = &pc.id.0[1..pc.id.0.len() - 1];
            let (aid, bid) = inner.split_once('|').unwrap();
            let (aid, bid): (CellId, CellId) = (aid.into(), bid.into());
            let ai = k.cell_index(&aid).unwrap();
            let bi = l.cell_index(&bid).unwrap();
            for &(fi, s) in k.faces_of(ai) {
                expected.insert(product_cell_id(&k.cells()[fi].id, &bid), s);
            }
            let sgn = if k.cells()[ai].dim % 2 == 0 { 1 } else { -1 };
            for &(fi, s) in l.faces_of(bi) {
                expected.insert(product_cell_id(&aid, &l.cells()[fi].id), sgn * s);
            }
            let actual: BTreeMap<CellId, i64> = p
                .faces_of(pi)
                .iter()
                .map(|&(fi, s)| (p.cells()[fi].id.clone(), s))
                .collect();
            assert_eq!(actual, expected);
        }
    }

    #[test]
    fn interval_subdivision_is_a_subdivision() {
        for k in [BallComplex::point(), BallComplex::simplex(1), BallComplex::simplex(2)] {
            let sub = interval_subdivision(&k);
            assert!(sub.fine.validate().ok());
            assert!(sub.coarse.validate().ok());
            assert!(sub.validate().ok(), "fundamental chain check failed");
        }
        // splitting a point: 3 vertices, 2 edges
        let sub = interval_subdivision(&BallComplex::point());
        assert_eq!(sub.fine.cells_of_dim(0).count(), 3);
        assert_eq!(sub.fine.cells_of_dim(1).count(), 2);
        // splitting the square over an interval: two squares upstairs
        let sub = interval_subdivision(&BallComplex::simplex(1));
        assert_eq!(sub.fine.cells_of_dim(2).count(), 2);
    }

    #[test]
    fn broken_subdivision_detected() {
        let k = BallComplex::point();
        let sub = interval_subdivision(&k);
        let mut orientation = BTreeMap::new();
        for c in sub.fine.cells() {
            if sub.orientation_sign(&c.id) != 0 {
                // flip one edge's fundamental-chain sign
                let flip = c.id == product_cell_id(&"*".into(), &"0.m".into());
                orientation.insert(c.id.clone(), if flip { -1 } else { 1 });
            }
        }
        let carrier: BTreeMap<CellId, CellId> = sub
            .fine
            .cells()
            .iter()
            .filter_map(|c| sub.carrier(&c.id).map(|cc| (c.id.clone(), cc.clone())))
            .collect();
        let broken =
            Subdivision::new(sub.fine.clone(), sub.coarse.clone(), carrier, orientation).unwrap();
        assert!(!broken.validate().ok());
    }
}
