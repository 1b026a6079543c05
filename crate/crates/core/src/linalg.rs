//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision: integer matrices carry `BigInt`
//! entries, rational matrices carry reduced `BigRational` entries. Smith
//! normal form is the engine behind kernels, integral solving and cokernel
//! splittings used by the rest of the crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(data: &[&[i64]]) -> Self {
        let rows = data.len();
        let cols = if rows == 0 { 0 } else { data[0].len() };
        let mut m = Self::zero(rows, cols);
        for (r, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, BigInt::from(*v));
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn diagonal(diag: &[BigInt], rows: usize, cols: usize) -> Self {
        let mut m = Self::zero(rows, cols);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * k)
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols { self.at(r, c).clone() } else { other.at(r, c - self.cols).clone() }
        })
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows { self.at(r, c).clone() } else { other.at(r - self.rows, c).clone() }
        })
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self.at(r, cols[c]).clone())
    }

    pub fn submatrix_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |r, c| self.at(rows[r], c).clone())
    }

    /// Kronecker product, row-major convention: index (i,j) of the product
    /// corresponds to (i_a * b.rows + i_b, j_a * b.cols + j_b).
    pub fn kronecker(&self, b: &Self) -> Self {
        let mut out = Self::zero(self.rows * b.rows, self.cols * b.cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.at(ia, ja);
                if a.is_zero() {
                    continue;
                }
                for ib in 0..b.rows {
                    for jb in 0..b.cols {
                        let v = a * b.at(ib, jb);
                        out.set(ia * b.rows + ib, ja * b.cols + jb, v);
                    }
                }
            }
        }
        out
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| {
            BigRational::from_integer(self.at(r, c).clone())
        })
    }
}

/// Smith decomposition `a = u * d * v` with `u`, `v` unimodular and `d`
/// diagonal with nonnegative entries satisfying d_i | d_{i+1}. The inverses
/// are tracked alongside so `u_inv * a * v_inv = d` holds exactly.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Smith {
    pub fn diag(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d.at(i, i).clone()).collect()
    }

    /// Invariant factors >= 2 (units and zeros dropped), ascending.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diag().into_iter().filter(|d| d > &BigInt::one()).collect()
    }
}

struct Work {
    b: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    // b <- E b with E = swap(i,j); u <- u E^{-1}, u_inv <- E u_inv
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.b.cols {
            let (x, y) = (self.b.at(i, c).clone(), self.b.at(j, c).clone());
            self.b.set(i, c, y);
            self.b.set(j, c, x);
        }
        for r in 0..self.u.rows {
            let (x, y) = (self.u.at(r, i).clone(), self.u.at(r, j).clone());
            self.u.set(r, i, y);
            self.u.set(r, j, x);
        }
        for c in 0..self.u_inv.cols {
            let (x, y) = (self.u_inv.at(i, c).clone(), self.u_inv.at(j, c).clone());
            self.u_inv.set(i, c, y);
            self.u_inv.set(j, c, x);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.b.rows {
            let (x, y) = (self.b.at(r, i).clone(), self.b.at(r, j).clone());
            self.b.set(r, i, y);
            self.b.set(r, j, x);
        }
        for c in 0..self.v.cols {
            let (x, y) = (self.v.at(i, c).clone(), self.v.at(j, c).clone());
            self.v.set(i, c, y);
            self.v.set(j, c, x);
        }
        for r in 0..self.v_inv.rows {
            let (x, y) = (self.v_inv.at(r, i).clone(), self.v_inv.at(r, j).clone());
            self.v_inv.set(r, i, y);
            self.v_inv.set(r, j, x);
        }
    }

    // row i -= q * row t
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.b.cols {
            let v = self.b.at(i, c) - q * self.b.at(t, c);
            self.b.set(i, c, v);
        }
        // u <- u (I + q e_{i,t}): col t += q * col i
        for r in 0..self.u.rows {
            let v = self.u.at(r, t) + q * self.u.at(r, i);
            self.u.set(r, t, v);
        }
        for c in 0..self.u_inv.cols {
            let v = self.u_inv.at(i, c) - q * self.u_inv.at(t, c);
            self.u_inv.set(i, c, v);
        }
    }

    // col j -= q * col t
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.b.rows {
            let v = self.b.at(r, j) - q * self.b.at(r, t);
            self.b.set(r, j, v);
        }
        // b' = b F with F = I - q e_{t,j}, so v <- F^{-1} v: row t += q * row j
        for c in 0..self.v.cols {
            let v = self.v.at(t, c) + q * self.v.at(j, c);
            self.v.set(t, c, v);
        }
        for r in 0..self.v_inv.rows {
            let v = self.v_inv.at(r, j) - q * self.v_inv.at(r, t);
            self.v_inv.set(r, j, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.b.cols {
            let v = -self.b.at(i, c);
            self.b.set(i, c, v);
        }
        for r in 0..self.u.rows {
            let v = -self.u.at(r, i);
            self.u.set(r, i, v);
        }
        for c in 0..self.u_inv.cols {
            let v = -self.u_inv.at(i, c);
            self.u_inv.set(i, c, v);
        }
    }

    fn add_row(&mut self, i: usize, t: usize) {
        let minus_one = -BigInt::one();
        self.row_sub(i, t, &minus_one);
    }
}

/// Smith normal form with smallest-nonzero-pivot strategy.
pub fn smith(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows, a.cols);
    let mut w = Work {
        b: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero |entry| in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..m {
            for c in t..n {
                if !w.b.at(r, c).is_zero() {
                    match &pivot {
                        None => pivot = Some((r, c)),
                        Some((pr, pc)) => {
                            if w.b.at(r, c).abs() < w.b.at(*pr, *pc).abs() {
                                pivot = Some((r, c));
                            }
                        }
                    }
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        // gcd reduction on row/column t
        loop {
            let mut dirty = false;
            for r in t + 1..m {
                if !w.b.at(r, t).is_zero() {
                    let q = w.b.at(r, t) / w.b.at(t, t);
                    w.row_sub(r, t, &q);
                    if !w.b.at(r, t).is_zero() {
                        // remainder strictly smaller: promote it to the pivot
                        w.swap_rows(t, r);
                        dirty = true;
                    }
                }
            }
            for c in t + 1..n {
                if !w.b.at(t, c).is_zero() {
                    let q = w.b.at(t, c) / w.b.at(t, t);
                    w.col_sub(c, t, &q);
                    if !w.b.at(t, c).is_zero() {
                        w.swap_cols(t, c);
                        dirty = true;
                    }
                }
            }
            let row_clear = (t + 1..n).all(|c| w.b.at(t, c).is_zero());
            let col_clear = (t + 1..m).all(|r| w.b.at(r, t).is_zero());
            if row_clear && col_clear && !dirty {
                break;
            }
        }
        // enforce divisibility of the trailing block by the pivot
        let p = w.b.at(t, t).clone();
        let mut offender = None;
        'search: for r in t + 1..m {
            for c in t + 1..n {
                if !(w.b.at(r, c) % &p).is_zero() {
                    offender = Some(r);
                    break 'search;
                }
            }
        }
        if let Some(r) = offender {
            w.add_row(t, r);
            continue; // redo this pivot with the merged row
        }
        t += 1;
    }
    // make the diagonal nonnegative
    for i in 0..m.min(n) {
        if w.b.at(i, i).is_negative() {
            w.negate_row(i);
        }
    }
    let rank = (0..m.min(n)).filter(|&i| !w.b.at(i, i).is_zero()).count();
    Smith { u: w.u, d: w.b, v: w.v, u_inv: w.u_inv, v_inv: w.v_inv, rank }
}

/// Basis of the integer kernel lattice {x : a x = 0}, returned as columns.
/// The basis is saturated: every kernel vector is an integral combination.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith(a);
    let free: Vec<usize> = (s.rank..a.cols).collect();
    s.v_inv.submatrix_cols(&free)
}

/// Integral solution x of a x = b for each column of b, if one exists.
pub fn solve(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(a.rows, b.rows, "solve: row mismatch");
    let s = smith(a);
    let c = s.u_inv.mul(b);
    let mut y = IntMatrix::zero(a.cols, b.cols);
    for col in 0..b.cols {
        for r in 0..a.rows {
            let rhs = c.at(r, col);
            if r < s.rank {
                let d = s.d.at(r, r);
                if (rhs % d).is_zero() {
                    y.set(r, col, rhs / d);
                } else {
                    return None;
                }
            } else if !rhs.is_zero() {
                return None;
            }
        }
    }
    Some(s.v_inv.mul(&y))
}

/// Whether each column of b lies in the integer column span of a.
pub fn in_colspan(a: &IntMatrix, b: &IntMatrix) -> bool {
    solve(a, b).is_some()
}

/// Splitting of a free cokernel: returns (proj, sect) with
/// proj * a = 0, proj * sect = identity, and rows of proj spanning
/// Z^rows / im(a). `None` when the cokernel has torsion.
pub fn free_cokernel(a: &IntMatrix) -> Option<(IntMatrix, IntMatrix)> {
    let s = smith(a);
    for i in 0..s.rank {
        if !s.d.at(i, i).is_one() {
            return None;
        }
    }
    let free: Vec<usize> = (s.rank..a.rows).collect();
    let proj = s.u_inv.submatrix_rows(&free);
    let sect = s.u.submatrix_cols(&free);
    Some((proj, sect))
}

/// Dense rational matrix, row-major, entries always reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigRational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(data: &[&[i64]]) -> Self {
        let rows = data.len();
        let cols = if rows == 0 { 0 } else { data[0].len() };
        Self::from_fn(rows, cols, |r, c| BigRational::from_integer(BigInt::from(data[r][c])))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c { self.at(r, c).is_one() } else { self.at(r, c).is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * k)
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols { self.at(r, c).clone() } else { other.at(r, c - self.cols).clone() }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows { self.at(r, c).clone() } else { other.at(r - self.rows, c).clone() }
        })
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self.at(r, cols[c]).clone())
    }

    pub fn submatrix_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |r, c| self.at(rows[r], c).clone())
    }

    pub fn kronecker(&self, b: &Self) -> Self {
        let mut out = Self::zero(self.rows * b.rows, self.cols * b.cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.at(ia, ja);
                if a.is_zero() {
                    continue;
                }
                for ib in 0..b.rows {
                    for jb in 0..b.cols {
                        let v = a * b.at(ib, jb);
                        out.set(ia * b.rows + ib, ja * b.cols + jb, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c).to_integer()))
    }
}

/// Rational analogue of the Smith decomposition: a = u d v with u, v
/// invertible and d diagonal with unit pivots. Shares the downstream API
/// (kernels, solving, cokernel splittings) with the integer case.
#[derive(Clone, Debug)]
pub struct RatDecomp {
    pub u: RatMatrix,
    pub d: RatMatrix,
    pub v: RatMatrix,
    pub u_inv: RatMatrix,
    pub v_inv: RatMatrix,
    pub rank: usize,
}

pub fn rat_decompose(a: &RatMatrix) -> RatDecomp {
    let (m, n) = (a.rows, a.cols);
    let mut b = a.clone();
    let mut u = RatMatrix::identity(m);
    let mut u_inv = RatMatrix::identity(m);
    let mut v = RatMatrix::identity(n);
    let mut v_inv = RatMatrix::identity(n);

    let swap_rows = |b: &mut RatMatrix, u: &mut RatMatrix, u_inv: &mut RatMatrix, i: usize, j: usize| {
        if i == j {
            return;
        }
        for c in 0..b.cols {
            let (x, y) = (b.at(i, c).clone(), b.at(j, c).clone());
            b.set(i, c, y);
            b.set(j, c, x);
        }
        for r in 0..u.rows {
            let (x, y) = (u.at(r, i).clone(), u.at(r, j).clone());
            u.set(r, i, y);
            u.set(r, j, x);
        }
        for c in 0..u_inv.cols {
            let (x, y) = (u_inv.at(i, c).clone(), u_inv.at(j, c).clone());
            u_inv.set(i, c, y);
            u_inv.set(j, c, x);
        }
    };

    let mut t = 0;
    while t < m.min(n) {
        let mut pivot = None;
        'scan: for r in t..m {
            for c in t..n {
                if !b.at(r, c).is_zero() {
                    pivot = Some((r, c));
                    break 'scan;
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        swap_rows(&mut b, &mut u, &mut u_inv, t, pr);
        if pc != t {
            for r in 0..b.rows {
                let (x, y) = (b.at(r, t).clone(), b.at(r, pc).clone());
                b.set(r, t, y);
                b.set(r, pc, x);
            }
            for c in 0..v.cols {
                let (x, y) = (v.at(t, c).clone(), v.at(pc, c).clone());
                v.set(t, c, y);
                v.set(pc, c, x);
            }
            for r in 0..v_inv.rows {
                let (x, y) = (v_inv.at(r, t).clone(), v_inv.at(r, pc).clone());
                v_inv.set(r, t, y);
                v_inv.set(r, pc, x);
            }
        }
        // scale pivot to 1: b <- E b with E = diag(.., 1/p, ..)
        let p = b.at(t, t).clone();
        if !p.is_one() {
            let p_inv = p.recip();
            for c in 0..b.cols {
                let x = b.at(t, c) * &p_inv;
                b.set(t, c, x);
            }
            for r in 0..u.rows {
                let x = u.at(r, t) * &p;
                u.set(r, t, x);
            }
            for c in 0..u_inv.cols {
                let x = u_inv.at(t, c) * &p_inv;
                u_inv.set(t, c, x);
            }
        }
        // clear column t
        for r in 0..m {
            if r == t || b.at(r, t).is_zero() {
                continue;
            }
            let q = b.at(r, t).clone();
            for c in 0..b.cols {
                let x = b.at(r, c) - &q * b.at(t, c);
                b.set(r, c, x);
            }
            for rr in 0..u.rows {
                let x = u.at(rr, t) + &q * u.at(rr, r);
                u.set(rr, t, x);
            }
            for c in 0..u_inv.cols {
                let x = u_inv.at(r, c) - &q * u_inv.at(t, c);
                u_inv.set(r, c, x);
            }
        }
        // clear row t; b' = b F with F = I - q e_{t,c}, so v <- F^{-1} v
        for c in 0..n {
            if c == t || b.at(t, c).is_zero() {
                continue;
            }
            let q = b.at(t, c).clone();
            for r in 0..b.rows {
                let x = b.at(r, c) - &q * b.at(r, t);
                b.set(r, c, x);
            }
            for cc in 0..v.cols {
                let x = v.at(t, cc) + &q * v.at(c, cc);
                v.set(t, cc, x);
            }
            for r in 0..v_inv.rows {
                let x = v_inv.at(r, c) - &q * v_inv.at(r, t);
                v_inv.set(r, c, x);
            }
        }
        t += 1;
    }
    let rank = t.min({
        // trailing pivots may have been exhausted early
        (0..m.min(n)).take_while(|&i| b.at(i, i).is_one()).count()
    });
    RatDecomp { u, d: b, v, u_inv, v_inv, rank }
}

pub fn rat_rank(a: &RatMatrix) -> usize {
    rat_decompose(a).rank
}

pub fn rat_kernel_basis(a: &RatMatrix) -> RatMatrix {
    let s = rat_decompose(a);
    let free: Vec<usize> = (s.rank..a.cols).collect();
    s.v_inv.submatrix_cols(&free)
}

pub fn rat_solve(a: &RatMatrix, b: &RatMatrix) -> Option<RatMatrix> {
    assert_eq!(a.rows, b.rows, "solve: row mismatch");
    let s = rat_decompose(a);
    let c = s.u_inv.mul(b);
    let mut y = RatMatrix::zero(a.cols, b.cols);
    for col in 0..b.cols {
        for r in 0..a.rows {
            let rhs = c.at(r, col);
            if r < s.rank {
                y.set(r, col, rhs.clone());
            } else if !rhs.is_zero() {
                return None;
            }
        }
    }
    Some(s.v_inv.mul(&y))
}

/// Splitting of a rational cokernel: (proj, sect) with proj * a = 0 and
/// proj * sect = identity; rows of proj form a basis of the quotient.
pub fn rat_cokernel(a: &RatMatrix) -> (RatMatrix, RatMatrix) {
    let s = rat_decompose(a);
    let free: Vec<usize> = (s.rank..a.rows).collect();
    (s.u_inv.submatrix_rows(&free), s.u.submatrix_cols(&free))
}

/// Whether a rational square matrix is invertible.
pub fn rat_invertible(a: &RatMatrix) -> bool {
    a.rows == a.cols && rat_rank(a) == a.rows
}

pub fn rat_inverse(a: &RatMatrix) -> Option<RatMatrix> {
    if a.rows != a.cols {
        return None;
    }
    let s = rat_decompose(a);
    if s.rank != a.rows {
        return None;
    }
    // a = u d v with d = identity, so a^{-1} = v_inv u_inv
    Some(s.v_inv.mul(&s.u_inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_smith(a: &IntMatrix) {
        let s = smith(a);
        assert_eq!(s.u.mul(&s.d).mul(&s.v), *a, "u d v != a");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(a.cols));
        let diag = s.diag();
        for i in 0..diag.len() {
            assert!(!diag[i].is_negative());
            if i + 1 < diag.len() && !diag[i].is_zero() {
                assert!((&diag[i + 1] % &diag[i]).is_zero(), "divisibility broken");
            }
            if diag[i].is_zero() && i + 1 < diag.len() {
                assert!(diag[i + 1].is_zero(), "zeros must trail");
            }
        }
        for r in 0..s.d.rows {
            for c in 0..s.d.cols {
                if r != c {
                    assert!(s.d.at(r, c).is_zero());
                }
            }
        }
    }

    #[test]
    fn smith_zero_and_identity() {
        let z = IntMatrix::zero(3, 2);
        let s = smith(&z);
        assert!(s.d.is_zero());
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(2));
        let i = IntMatrix::identity(4);
        let s = smith(&i);
        assert_eq!(s.d, IntMatrix::identity(4));
    }

    #[test]
    fn smith_det_divisor_example() {
        // d1 = gcd of entries = 2, d1*d2 = gcd of 2x2 minors = 8
        let a = IntMatrix::from_rows(&[&[2, 4], &[6, 8]]);
        check_smith(&a);
        let s = smith(&a);
        assert_eq!(s.diag(), vec![int(2), int(4)]);
    }

    #[test]
    fn smith_roundtrip_fixed_cases() {
        for a in [
            IntMatrix::from_rows(&[&[4]]),
            IntMatrix::from_rows(&[&[2, 0], &[0, 3]]),
            IntMatrix::from_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]),
            IntMatrix::from_rows(&[&[0, 0], &[0, 7]]),
            IntMatrix::from_rows(&[&[-3, 1], &[9, 6], &[2, -2]]),
        ] {
            check_smith(&a);
        }
    }

    #[test]
    fn kernel_and_solve() {
        let a = IntMatrix::from_rows(&[&[2, -3]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols, 1);
        assert!(a.mul(&k).is_zero());
        // solve 2x = 4
        let b = IntMatrix::from_rows(&[&[4]]);
        let a2 = IntMatrix::from_rows(&[&[2]]);
        let x = solve(&a2, &b).unwrap();
        assert_eq!(a2.mul(&x), b);
        // 2x = 3 has no integral solution
        assert!(solve(&a2, &IntMatrix::from_rows(&[&[3]])).is_none());
    }

    #[test]
    fn free_cokernel_splitting() {
        // coker of (2,-3)^T : Z -> Z^2 is free of rank 1
        let a = IntMatrix::from_rows(&[&[2], &[-3]]);
        let (proj, sect) = free_cokernel(&a).unwrap();
        assert_eq!(proj.rows, 1);
        assert!(proj.mul(&a).is_zero());
        assert_eq!(proj.mul(&sect), IntMatrix::identity(1));
        // coker of (2): Z -> Z has torsion
        assert!(free_cokernel(&IntMatrix::from_rows(&[&[2]])).is_none());
    }

    #[test]
    fn rational_decomposition() {
        let a = RatMatrix::from_rows(&[&[2, 4, 1], &[0, 0, 3]]);
        let s = rat_decompose(&a);
        assert_eq!(s.u.mul(&s.d).mul(&s.v), a);
        assert_eq!(s.u.mul(&s.u_inv), RatMatrix::identity(2));
        assert_eq!(s.v.mul(&s.v_inv), RatMatrix::identity(3));
        assert_eq!(s.rank, 2);
        let k = rat_kernel_basis(&a);
        assert_eq!(k.cols, 1);
        assert!(a.mul(&k).is_zero());
        let inv = rat_inverse(&RatMatrix::from_rows(&[&[1, 1], &[0, 2]])).unwrap();
        assert_eq!(inv.mul(&RatMatrix::from_rows(&[&[1, 1], &[0, 2]])), RatMatrix::identity(2));
    }
}
