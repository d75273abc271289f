use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix over `Z` with arbitrary-precision entries, row-major.
///
/// Zero-row and zero-column matrices are legal and show up constantly
/// (empty complexes, trivial groups), so every operation must tolerate
/// them.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn scalar(n: usize, c: &BigInt) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Build from `i64` rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn scale_by(&self, c: &BigInt) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols { self.get(r, c).clone() } else { other.get(r, c - self.cols).clone() }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "col mismatch in vstack");
        Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows { self.get(r, c).clone() } else { other.get(r - self.rows, c).clone() }
        })
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        assert!(cols.iter().all(|c| c.len() == rows), "column length mismatch");
        Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    /// Keep the columns listed in `keep`, in order.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        Self::from_fn(self.rows, keep.len(), |r, c| self.get(r, keep[c]).clone())
    }

    /// The first `n` rows as a new matrix.
    pub fn top_rows(&self, n: usize) -> Self {
        assert!(n <= self.rows);
        Self::from_fn(n, self.cols, |r, c| self.get(r, c).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// row[dst] += q * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(dst, c) + q * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    /// col[dst] += q * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, dst) + q * self.get(r, src);
            self.set(r, dst, v);
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

// Debug printing is handy when chasing sign errors in boundary matrices.
impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Smith normal form `U * M * V = D` together with the inverses of the
/// unimodular transforms, which come for free while reducing.
pub struct Snf {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl Snf {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Pivot choice: entry of minimal absolute value in the trailing
/// submatrix, ties broken by lowest row then lowest column. This fixed
/// rule makes every decomposition (and everything built on it)
/// deterministic.
fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for r in t..a.rows() {
        for c in t..a.cols() {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.is_none() || abs < best_abs {
                best = Some((r, c));
                best_abs = abs;
            }
        }
    }
    best
}

/// Smith normal form by elementary row/column operations.
///
/// The returned diagonal is nonnegative with the divisibility chain
/// `d_1 | d_2 | ...`; `u` and `v` are unimodular.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Elementary operations, mirrored on the transforms.
    macro_rules! row_swap {
        ($i:expr, $j:expr) => {{
            a.swap_rows($i, $j);
            u.swap_rows($i, $j);
            u_inv.swap_cols($i, $j);
        }};
    }
    macro_rules! col_swap {
        ($i:expr, $j:expr) => {{
            a.swap_cols($i, $j);
            v.swap_cols($i, $j);
            v_inv.swap_rows($i, $j);
        }};
    }
    macro_rules! row_addmul {
        ($dst:expr, $src:expr, $q:expr) => {{
            let q: BigInt = $q;
            a.add_row_multiple($dst, $src, &q);
            u.add_row_multiple($dst, $src, &q);
            u_inv.add_col_multiple($src, $dst, &(-&q));
        }};
    }
    macro_rules! col_addmul {
        ($dst:expr, $src:expr, $q:expr) => {{
            let q: BigInt = $q;
            a.add_col_multiple($dst, $src, &q);
            v.add_col_multiple($dst, $src, &q);
            v_inv.add_row_multiple($src, $dst, &(-&q));
        }};
    }
    macro_rules! row_negate {
        ($i:expr) => {{
            a.negate_row($i);
            u.negate_row($i);
            u_inv.negate_col($i);
        }};
    }

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = find_pivot(&a, t) else { break };
        row_swap!(t, pr);
        col_swap!(t, pc);
        if a.get(t, t).is_negative() {
            row_negate!(t);
        }
        loop {
            let pivot = a.get(t, t).clone();
            // Clear the column below the pivot; floor division leaves
            // remainders in [0, pivot).
            for r in t + 1..rows {
                if !a.get(r, t).is_zero() {
                    let q = a.get(r, t).div_floor(&pivot);
                    row_addmul!(r, t, -q);
                }
            }
            if (t + 1..rows).any(|r| !a.get(r, t).is_zero()) {
                // A remainder strictly smaller than the pivot appeared;
                // promote it.
                let (pr, pc) = find_pivot(&a, t).expect("nonzero entry must exist");
                row_swap!(t, pr);
                col_swap!(t, pc);
                if a.get(t, t).is_negative() {
                    row_negate!(t);
                }
                continue;
            }
            let pivot = a.get(t, t).clone();
            for c in t + 1..cols {
                if !a.get(t, c).is_zero() {
                    let q = a.get(t, c).div_floor(&pivot);
                    col_addmul!(c, t, -q);
                }
            }
            if (t + 1..cols).any(|c| !a.get(t, c).is_zero()) {
                let (pr, pc) = find_pivot(&a, t).expect("nonzero entry must exist");
                row_swap!(t, pr);
                col_swap!(t, pc);
                if a.get(t, t).is_negative() {
                    row_negate!(t);
                }
                continue;
            }
            // Divisibility: fold a non-divisible entry into row t so the
            // next pass shrinks the pivot.
            let pivot = a.get(t, t).clone();
            let mut fixed = true;
            'scan: for r in t + 1..rows {
                for c in t + 1..cols {
                    if !a.get(r, c).mod_floor(&pivot).is_zero() {
                        row_addmul!(t, r, BigInt::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        t += 1;
    }

    let rank = (0..rows.min(cols)).take_while(|&i| !a.get(i, i).is_zero()).count();
    Snf { u, u_inv, d: a, v, v_inv, rank }
}

/// Exact determinant of a square matrix by fraction-free (Bareiss)
/// elimination. Kept separate from the SNF machinery so tests can use it
/// as an independent unimodularity oracle.
pub fn det_bareiss(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j);
                // Exact by the Bareiss identity.
                a.set(i, j, num / &prev);
            }
        }
        for i in k + 1..n {
            a.set(i, k, BigInt::zero());
        }
        prev = a.get(k, k).clone();
    }
    sign * a.get(n - 1, n - 1).clone()
}
