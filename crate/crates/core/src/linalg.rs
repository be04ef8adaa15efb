//! Matrices over the polynomial ring and over the rationals.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Rational, Ring};

/// A rectangular matrix of polynomials over a common ring.
#[derive(Clone)]
pub struct SymMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl SymMatrix {
    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        SymMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn from_fn(
        ring: &Arc<Ring>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert!(
                    p.ring().same_as(ring),
                    "entry ({i},{j}) over a different ring"
                );
                entries.push(p);
            }
        }
        SymMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: &Arc<Ring>, size: usize) -> Self {
        Self::from_fn(ring, size, size, |i, j| {
            if i == j {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        })
    }

    /// Embeds a rational matrix as constant polynomials.
    pub fn from_rational(ring: &Arc<Ring>, m: &RatMatrix) -> Self {
        Self::from_fn(ring, m.rows, m.cols, |i, j| {
            Polynomial::constant(ring, m[(i, j)].clone())
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Polynomial> {
        (i < self.rows && j < self.cols).then(|| &self.entries[i * self.cols + j])
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) -> Result<()> {
        if i >= self.rows || j >= self.cols {
            return Err(Error::Index(format!(
                "({i},{j}) in a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if !p.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch);
        }
        self.entries[i * self.cols + j] = p;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| {
            self[(j, i)].clone()
        })
    }

    pub fn try_mul(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for l in 0..self.cols {
                let (a, b) = (&self[(i, l)], &other[(l, j)]);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
            acc
        }))
    }

    pub fn try_add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(
                "cannot add matrices of different shapes".into(),
            ));
        }
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            &self[(i, j)] + &other[(i, j)]
        }))
    }

    pub fn scale(&self, c: &Polynomial) -> SymMatrix {
        Self::from_fn(&self.ring, self.rows, self.cols, |i, j| c * &self[(i, j)])
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SymMatrix {
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> SymMatrix {
        Self::from_fn(&self.ring, self.rows, self.cols, |i, j| f(&self[(i, j)]))
    }
}

impl PartialEq for SymMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl std::ops::Index<(usize, usize)> for SymMatrix {
    type Output = Polynomial;
    fn index(&self, (i, j): (usize, usize)) -> &Polynomial {
        self.get(i, j).unwrap_or_else(|| {
            panic!(
                "index ({i},{j}) out of range for {}x{} matrix",
                self.rows, self.cols
            )
        })
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn check_selection(len: usize, sel: &[usize], what: &str) -> Result<()> {
    if sel.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Index(format!(
            "{what} indices must be strictly increasing"
        )));
    }
    if let Some(&last) = sel.last() {
        if last >= len {
            return Err(Error::Index(format!(
                "{what} index {last} out of range (< {len})"
            )));
        }
    }
    Ok(())
}

/// Determinant of the square submatrix on `row_set x col_set` (0-based).
pub fn minor(m: &SymMatrix, row_set: &[usize], col_set: &[usize]) -> Result<Polynomial> {
    if row_set.len() != col_set.len() || row_set.is_empty() {
        return Err(Error::Shape(format!(
            "minor needs a non-empty square selection, got {}x{}",
            row_set.len(),
            col_set.len()
        )));
    }
    check_selection(m.rows, row_set, "row")?;
    check_selection(m.cols, col_set, "column")?;
    det_symbolic(&m.submatrix(row_set, col_set))
}

/// Exact determinant by dynamic programming over column subsets.
///
/// Rows are consumed top to bottom; the state after `r` rows maps the set of
/// columns used so far to the signed sum of all partial products. Sub-minors
/// shared between expansions are computed once, and zero entries are skipped.
pub fn det_symbolic(m: &SymMatrix) -> Result<Polynomial> {
    if m.rows != m.cols {
        return Err(Error::Shape(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Polynomial::one(&m.ring));
    }
    assert!(
        n <= 64,
        "column-subset determinant supports at most 64 columns"
    );
    let plus_one = Rational::one();
    let minus_one = -Rational::one();
    let mut layer: FxHashMap<u64, Polynomial> = FxHashMap::default();
    layer.insert(0, Polynomial::one(&m.ring));
    for r in 0..n {
        let mut next: FxHashMap<u64, Polynomial> = FxHashMap::default();
        let row: Vec<(usize, &Polynomial)> = (0..n)
            .map(|j| (j, &m[(r, j)]))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        // deterministic iteration over states
        let mut states: Vec<(&u64, &Polynomial)> = layer.iter().collect();
        states.sort_unstable_by_key(|(mask, _)| **mask);
        for (&mask, partial) in states {
            for &(j, entry) in &row {
                let bit = 1u64 << j;
                if mask & bit != 0 {
                    continue;
                }
                // inversions added by placing column j after the used ones
                let above = (mask >> j >> 1).count_ones();
                let sign = if above % 2 == 1 {
                    &minus_one
                } else {
                    &plus_one
                };
                next.entry(mask | bit)
                    .or_insert_with(|| Polynomial::zero(&m.ring))
                    .add_mul(sign, partial, entry);
            }
        }
        next.retain(|_, p| !p.is_zero());
        if next.is_empty() {
            return Ok(Polynomial::zero(&m.ring));
        }
        layer = next;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(layer
        .remove(&full)
        .unwrap_or_else(|| Polynomial::zero(&m.ring)))
}

/// Determinant by cofactor expansion along the first row. Exponential; kept
/// as an independent cross-check for [`det_symbolic`].
pub fn det_laplace(m: &SymMatrix) -> Result<Polynomial> {
    if m.rows != m.cols {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    fn rec(m: &SymMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one(&m.ring);
        }
        let r = rows[0];
        let mut acc = Polynomial::zero(&m.ring);
        for (pos, &c) in cols.iter().enumerate() {
            let e = &m[(r, c)];
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e * &rec(m, &rows[1..], &rest);
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
    let idx: Vec<usize> = (0..m.rows).collect();
    Ok(rec(m, &idx, &idx))
}

/// A rectangular matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, size, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Rational> {
        (i < self.rows && j < self.cols).then(|| &self.data[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn try_mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if !a.is_zero() {
                    acc += a * &other[(l, j)];
                }
            }
            acc
        }))
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn try_add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(
                "cannot add matrices of different shapes".into(),
            ));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = RatMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        Ok(RatMatrix::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    /// Gauss-Jordan on the first `limit` columns. Pivots are chosen as the
    /// entry of largest height in the column. Returns the pivot columns.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit.min(self.cols) {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows)
                .filter(|&i| !self[(i, c)].is_zero())
                .max_by(|&a, &b| {
                    height(&self[(a, c)])
                        .cmp(&height(&self[(b, c)]))
                        .then(b.cmp(&a))
                })
            else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self.data[r * self.cols + j] * &inv;
                self.data[r * self.cols + j] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    let sub = &factor * &self.data[r * self.cols + j];
                    if !sub.is_zero() {
                        self.data[i * self.cols + j] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(self.cols);
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

fn height(x: &Rational) -> BigInt {
    x.numer().abs().max(x.denom().clone())
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        self.get(i, j).unwrap_or_else(|| {
            panic!(
                "index ({i},{j}) out of range for {}x{} matrix",
                self.rows, self.cols
            )
        })
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
            if i + 1 < self.rows {
                write!(f, ", ")?;
            }
        }
        write!(f, "]")
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination. Each row is
/// first cleared of denominators, so the elimination runs over the integers.
pub fn det_rational(m: &RatMatrix) -> Result<Rational> {
    if m.rows != m.cols {
        return Err(Error::Shape(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let l = m
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 {
        BigInt::one()
    } else {
        a[n - 1][n - 1].clone()
    };
    Ok(Rational::new(sign * det, scale))
}

/// Basis of the right null space, one vector per free column of the reduced
/// row echelon form.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![None; m.cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    (0..m.cols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, free)].clone();
            }
            v
        })
        .collect()
}
