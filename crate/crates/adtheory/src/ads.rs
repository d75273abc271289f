use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use abelian::{FgAbGroup, IntMatrix};
use num_bigint::BigInt;

use crate::complex::{product_cell_id, BallComplex, CellId};
use crate::error::{Error, Result};
use crate::ring::RingSpec;

/// A pre-ad of degree `k`: ring elements on some of the `k`-cells of a
/// complex, every other cell carrying the empty object. The empty
/// object and the ring element 0 are distinct states; only cells present
/// in `values` carry an element.
///
/// Values are stored on the reference orientation of each cell; the
/// value on the reversed orientation is the negation and is never
/// stored.
#[derive(Clone, Debug)]
pub struct PreAd {
    complex: Arc<BallComplex>,
    degree: i64,
    values: BTreeMap<CellId, i64>,
}

/// Failures of the cycle condition, one entry per offending cell.
#[derive(Clone, Debug, Default)]
pub struct AdReport {
    pub violations: Vec<(CellId, i64)>,
}

impl AdReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AdReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        for (cell, sum) in &self.violations {
            writeln!(f, "boundary sum {} ≠ 0 at cell {}", sum, cell)?;
        }
        Ok(())
    }
}

impl PreAd {
    pub fn new(
        complex: Arc<BallComplex>,
        degree: i64,
        values: BTreeMap<CellId, i64>,
    ) -> Result<Self> {
        for id in values.keys() {
            let i = complex.cell_index(id).ok_or_else(|| Error::UnknownCell(id.clone()))?;
            let dim = complex.cells()[i].dim;
            if degree < 0 || dim != degree as usize {
                return Err(Error::WrongValueDimension { cell: id.clone(), dim, degree });
            }
        }
        Ok(PreAd { complex, degree, values })
    }

    pub fn all_empty(complex: Arc<BallComplex>, degree: i64) -> Self {
        PreAd { complex, degree, values: BTreeMap::new() }
    }

    pub fn complex(&self) -> &Arc<BallComplex> {
        &self.complex
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn value(&self, id: &CellId) -> Option<i64> {
        self.values.get(id).copied()
    }

    pub fn values(&self) -> &BTreeMap<CellId, i64> {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.is_empty()
    }

    /// Same support pattern and, where supported, the same normalized
    /// values.
    pub fn same_as(&self, other: &PreAd, ring: RingSpec) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let keys: BTreeSet<&CellId> = self.values.keys().chain(other.values.keys()).collect();
        keys.into_iter().all(|k| match (self.value(k), other.value(k)) {
            (Some(a), Some(b)) => ring.normalize(a) == ring.normalize(b),
            (None, None) => true,
            _ => false,
        })
    }

    /// The cycle condition: on every cell one dimension above the
    /// degree, the incidence-weighted sum of face values vanishes in the
    /// ring, with empty faces contributing nothing. Cells of other
    /// dimensions satisfy their conditions vacuously.
    pub fn is_ad(&self, ring: RingSpec) -> AdReport {
        let mut report = AdReport::default();
        if self.degree < -1 {
            return report;
        }
        let above = (self.degree + 1) as usize;
        for (i, cell) in self.complex.cells_of_dim(above) {
            let mut sum: i64 = 0;
            for &(fi, sign) in self.complex.faces_of(i) {
                if let Some(v) = self.values.get(&self.complex.cells()[fi].id) {
                    sum = ring.add(sum, ring.mul(sign, *v));
                }
            }
            if !ring.is_zero(sum) {
                report.violations.push((cell.id.clone(), ring.normalize(sum)));
            }
        }
        report
    }

    pub fn ensure_ad(&self, ring: RingSpec) -> Result<()> {
        let r = self.is_ad(ring);
        if r.ok() {
            Ok(())
        } else {
            Err(Error::NotAnAd(r.to_string()))
        }
    }

    /// Restriction to a subcomplex (values outside are dropped; the
    /// subcomplex must be downward closed).
    pub fn restrict_to(&self, sub: Arc<BallComplex>) -> PreAd {
        let values = self
            .values
            .iter()
            .filter(|(id, _)| sub.contains(id))
            .map(|(id, v)| (id.clone(), *v))
            .collect();
        PreAd { complex: sub, degree: self.degree, values }
    }

    /// Cellwise sum; an empty cell acts as the additive unit.
    pub fn add(&self, other: &PreAd, ring: RingSpec) -> Result<PreAd> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut values = self.values.clone();
        for (id, v) in &other.values {
            let w = match values.get(id) {
                Some(u) => ring.add(*u, *v),
                None => ring.normalize(*v),
            };
            values.insert(id.clone(), w);
        }
        Ok(PreAd { complex: self.complex.clone(), degree: self.degree, values })
    }

    /// Multiply every value by a ring element. Value cells stay value
    /// cells even when the product is 0.
    pub fn scale(&self, c: i64, ring: RingSpec) -> PreAd {
        let values = self.values.iter().map(|(id, v)| (id.clone(), ring.mul(c, *v))).collect();
        PreAd { complex: self.complex.clone(), degree: self.degree, values }
    }

    pub fn to_empty(&self) -> PreAd {
        PreAd::all_empty(self.complex.clone(), self.degree)
    }

    /// Cylinder on `K × I`: both ends carry the original values, swept
    /// cells carry the empty object.
    pub fn cylinder(&self) -> PreAd {
        let interval = BallComplex::simplex(1);
        let cx = Arc::new(BallComplex::product(&self.complex, &interval));
        let mut values = BTreeMap::new();
        for (id, v) in &self.values {
            values.insert(product_cell_id(id, &"0".into()), *v);
            values.insert(product_cell_id(id, &"1".into()), *v);
        }
        PreAd { complex: cx, degree: self.degree, values }
    }
}

/// Extract the slice `K × {right}` of a pre-ad on a product complex as
/// a pre-ad on `K`; `right` must be a 0-cell of the right-hand factor.
pub fn product_slice(m: &PreAd, base: &Arc<BallComplex>, right: &CellId) -> PreAd {
    let mut values = BTreeMap::new();
    for c in base.cells() {
        let pid = product_cell_id(&c.id, right);
        if let Some(v) = m.value(&pid) {
            values.insert(c.id.clone(), v);
        }
    }
    PreAd { complex: base.clone(), degree: m.degree, values }
}

/// Pointwise product of pre-ads on the product complex, with the tensor
/// sign (-1)^(deg(b) * dim(left part)).
pub fn pread_product(a: &PreAd, b: &PreAd, ring: RingSpec) -> PreAd {
    let cx = Arc::new(BallComplex::product(a.complex(), b.complex()));
    let mut values = BTreeMap::new();
    for (aid, av) in a.values() {
        let ai = a.complex().cell_index(aid).unwrap();
        let adim = a.complex().cells()[ai].dim as i64;
        let sign = if (b.degree() * adim) % 2 == 0 { 1 } else { -1 };
        for (bid, bv) in b.values() {
            values.insert(product_cell_id(aid, bid), ring.mul(sign, ring.mul(*av, *bv)));
        }
    }
    PreAd { complex: cx, degree: a.degree() + b.degree(), values }
}

/// Push a pre-ad on the fine complex of a subdivision down to the
/// coarse complex: each coarse cell receives the signed sum of its
/// equal-dimension pieces. Fails when the glued pre-ad is not an ad.
pub fn glue(sub: &crate::complex::Subdivision, m: &PreAd, ring: RingSpec) -> Result<PreAd> {
    let mut values = BTreeMap::new();
    for c in sub.coarse.cells() {
        let mut acc: Option<i64> = None;
        for (fid, sign) in sub.pieces_of(&c.id) {
            if let Some(v) = m.value(&fid) {
                acc = Some(ring.add(acc.unwrap_or(0), ring.mul(sign, v)));
            }
        }
        if let Some(v) = acc {
            values.insert(c.id.clone(), v);
        }
    }
    let glued = PreAd::new(sub.coarse.clone(), m.degree(), values)?;
    let report = glued.is_ad(ring);
    if !report.ok() {
        return Err(Error::SeamMismatch(report.to_string()));
    }
    Ok(glued)
}

/// The canonical section of `glue` for an interval subdivision: the
/// first half of each split edge keeps the coarse value, the second
/// half gets 0, and the midpoint slice copies the far end.
pub fn interval_refine(sub: &crate::complex::Subdivision, m: &PreAd) -> Result<PreAd> {
    let mut values = BTreeMap::new();
    for f in sub.fine.cells() {
        let Some(carrier) = sub.carrier(&f.id) else { continue };
        let Some(v) = m.value(carrier) else { continue };
        let fi = sub.fine.cell_index(&f.id).unwrap();
        let ci = sub.coarse.cell_index(carrier).unwrap();
        let equal_dim = sub.fine.cells()[fi].dim == sub.coarse.cells()[ci].dim;
        if equal_dim {
            // pieces of a split edge: value on the first, 0 on the second
            let pieces = sub.pieces_of(carrier);
            if pieces.len() == 1 {
                values.insert(f.id.clone(), v);
            } else if f.id.as_str().contains("|0.m") {
                values.insert(f.id.clone(), v);
            } else {
                values.insert(f.id.clone(), 0);
            }
        } else if f.id.as_str().contains("|m)") {
            // midpoint slice copies the value at end 1
            let end1 = CellId::new(carrier.as_str().replace("|0.1)", "|1)"));
            if let Some(w) = m.value(&end1) {
                values.insert(f.id.clone(), w);
            }
        }
    }
    PreAd::new(sub.fine.clone(), m.degree(), values)
}

/// A dimension-shifting isomorphism of cell categories: a bijection
/// from part of the source complex onto all cells of the target,
/// preserving incidence numbers up to the recorded orientation signs.
/// Unmapped source cells are the ones sent to the empty object; they
/// must form a subcomplex.
#[derive(Clone, Debug)]
pub struct CellIso {
    source: Arc<BallComplex>,
    target: Arc<BallComplex>,
    map: BTreeMap<CellId, (CellId, i64)>,
    shift: i64,
}

impl CellIso {
    pub fn new(
        source: Arc<BallComplex>,
        target: Arc<BallComplex>,
        map: BTreeMap<CellId, (CellId, i64)>,
    ) -> Result<Self> {
        let mut hit: BTreeMap<CellId, CellId> = BTreeMap::new();
        let mut shift: Option<i64> = None;
        for (src, (tgt, sign)) in &map {
            let si = source.cell_index(src).ok_or_else(|| Error::UnknownCell(src.clone()))?;
            let ti = target.cell_index(tgt).ok_or_else(|| Error::UnknownCell(tgt.clone()))?;
            if *sign != 1 && *sign != -1 {
                return Err(Error::BadTransport(format!("orientation sign on {} is {}", src, sign)));
            }
            if let Some(prev) = hit.insert(tgt.clone(), src.clone()) {
                return Err(Error::BadTransport(format!(
                    "both {} and {} map to {}",
                    prev, src, tgt
                )));
            }
            let s = source.cells()[si].dim as i64 - target.cells()[ti].dim as i64;
            match shift {
                None => shift = Some(s),
                Some(prev) if prev != s => {
                    return Err(Error::BadTransport(format!(
                        "dimension shift is not constant ({} vs {})",
                        prev, s
                    )))
                }
                _ => {}
            }
        }
        for c in target.cells() {
            if !hit.contains_key(&c.id) {
                return Err(Error::BadTransport(format!("target cell {} has no preimage", c.id)));
            }
        }
        // unmapped source cells form a subcomplex
        for (i, c) in source.cells().iter().enumerate() {
            if map.contains_key(&c.id) {
                continue;
            }
            for &(fi, _) in source.faces_of(i) {
                let f = &source.cells()[fi];
                if map.contains_key(&f.id) {
                    return Err(Error::BadTransport(format!(
                        "cell {} is sent to the empty object but its coface {} is not",
                        f.id, c.id
                    )));
                }
            }
        }
        let iso = CellIso { source, target, map, shift: shift.unwrap_or(0) };
        iso.check_incidence()?;
        Ok(iso)
    }

    pub fn identity(cx: Arc<BallComplex>) -> Self {
        let map = cx.cells().iter().map(|c| (c.id.clone(), (c.id.clone(), 1))).collect();
        CellIso { source: cx.clone(), target: cx, map, shift: 0 }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    fn check_incidence(&self) -> Result<()> {
        for (src, (tgt, sign)) in &self.map {
            let si = self.source.cell_index(src).unwrap();
            let ti = self.target.cell_index(tgt).unwrap();
            let mut seen: BTreeMap<CellId, i64> = BTreeMap::new();
            for &(fi, s) in self.source.faces_of(si) {
                let f = &self.source.cells()[fi];
                if let Some((tf, fsign)) = self.map.get(&f.id) {
                    seen.insert(tf.clone(), sign * fsign * s);
                }
            }
            let expected: BTreeMap<CellId, i64> = self
                .target
                .faces_of(ti)
                .iter()
                .map(|&(fi, s)| (self.target.cells()[fi].id.clone(), s))
                .collect();
            if seen != expected {
                return Err(Error::BadTransport(format!(
                    "incidence numbers around {} are not preserved",
                    src
                )));
            }
        }
        Ok(())
    }

    /// Pull a pre-ad on the target back to the source; degree rises by
    /// the dimension shift, and ads pull back to ads.
    pub fn pull_back(&self, m: &PreAd) -> Result<PreAd> {
        if !Arc::ptr_eq(m.complex(), &self.target)
            && m.complex().cells().len() != self.target.cells().len()
        {
            return Err(Error::BadTransport("pre-ad does not live on the target complex".into()));
        }
        let mut values = BTreeMap::new();
        for (src, (tgt, sign)) in &self.map {
            if let Some(v) = m.value(tgt) {
                values.insert(src.clone(), sign * v);
            }
        }
        PreAd::new(self.source.clone(), m.degree() + self.shift, values)
    }
}

pub fn transport(iso: &CellIso, m: &PreAd) -> Result<PreAd> {
    iso.pull_back(m)
}

/// The group of degree-`k` ads on `K` with the everywhere-supported
/// pattern, as the kernel of the condition matrix over the ring.
#[derive(Clone, Debug)]
pub struct AdGroup {
    pub basis: Vec<CellId>,
    /// Basis of the solution lattice in `Z^basis`.
    pub lattice: IntMatrix,
    pub group: FgAbGroup,
}

/// Condition matrix of the ad condition: one row per (k+1)-cell, one
/// column per k-cell.
pub fn condition_matrix(k: &BallComplex, degree: i64) -> (Vec<CellId>, IntMatrix) {
    if degree < 0 {
        return (Vec::new(), IntMatrix::zeros(0, 0));
    }
    let cols: Vec<(usize, CellId)> =
        k.cells_of_dim(degree as usize).map(|(i, c)| (i, c.id.clone())).collect();
    let col_pos: BTreeMap<usize, usize> =
        cols.iter().enumerate().map(|(p, (i, _))| (*i, p)).collect();
    let rows: Vec<usize> = k.cells_of_dim(degree as usize + 1).map(|(i, _)| i).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (r, &ci) in rows.iter().enumerate() {
        for &(fi, sign) in k.faces_of(ci) {
            if let Some(&p) = col_pos.get(&fi) {
                m.set(r, p, BigInt::from(sign));
            }
        }
    }
    (cols.into_iter().map(|(_, id)| id).collect(), m)
}

/// Solutions of `C x ≡ 0 (mod m)` as a sublattice of `Z^cols`
/// (contains `m Z^cols` when `m > 0`).
pub fn solution_lattice(c: &IntMatrix, ring: RingSpec) -> IntMatrix {
    if ring.modulus == 0 || c.rows() == 0 {
        return abelian::kernel_basis(c);
    }
    let m = BigInt::from(ring.modulus);
    let aug = c.hstack(&IntMatrix::scalar(c.rows(), &m).neg());
    let k = abelian::kernel_basis(&aug);
    abelian::column_basis(&k.top_rows(c.cols()))
}

pub fn ad_group(k: &BallComplex, ring: RingSpec, degree: i64) -> AdGroup {
    let (basis, c) = condition_matrix(k, degree);
    let lattice = solution_lattice(&c, ring);
    let group = if ring.modulus == 0 {
        // free on a basis of the kernel
        FgAbGroup::free(lattice.cols())
    } else {
        let denom = IntMatrix::scalar(basis.len(), &BigInt::from(ring.modulus));
        FgAbGroup::from_subquotient(basis.len(), &lattice, &denom)
            .expect("m Z^n lies in the solution lattice")
            .0
    };
    AdGroup { basis, lattice, group }
}

/// Bordism of the plain theory over the one-point complex: degree-k ads
/// on the point modulo differences of the two end restrictions of ads
/// on the interval.
pub fn plain_bordism_group(ring: RingSpec, degree: i64) -> FgAbGroup {
    let pt = BallComplex::point();
    let interval_cx = BallComplex::product(&pt, &BallComplex::simplex(1));
    let point_cx = BallComplex::product(&pt, &BallComplex::point());

    let (pt_basis, pt_cond) = condition_matrix(&point_cx, degree);
    let pt_lat = solution_lattice(&pt_cond, ring);
    let (i_basis, i_cond) = condition_matrix(&interval_cx, degree);
    let i_lat = solution_lattice(&i_cond, ring);

    if pt_basis.is_empty() {
        return FgAbGroup::trivial();
    }
    // end difference matrix on variables
    let mut d = IntMatrix::zeros(pt_basis.len(), i_basis.len());
    for (r, pid) in pt_basis.iter().enumerate() {
        // pid = (κ|*) over base ×Δ^0; ends are (κ|0) and (κ|1)
        let kappa = pid.as_str().strip_suffix("|*)").and_then(|s| s.strip_prefix('(')).unwrap();
        for (c, iid) in i_basis.iter().enumerate() {
            if iid.as_str() == format!("({kappa}|1)") {
                d.set(r, c, BigInt::from(1));
            } else if iid.as_str() == format!("({kappa}|0)") {
                d.set(r, c, BigInt::from(-1));
            }
        }
    }
    let mut denom = &d * &i_lat;
    if ring.modulus > 0 {
        denom = denom.hstack(&IntMatrix::scalar(pt_basis.len(), &BigInt::from(ring.modulus)));
    }
    FgAbGroup::from_subquotient(pt_basis.len(), &pt_lat, &denom)
        .expect("bordisms stay inside the ad lattice")
        .0
}
