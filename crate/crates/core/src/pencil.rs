//! The `m x n x 2` tensor of indeterminates, the coefficients of its pencil
//! `det(xX + yY)`, and the block-bidiagonal determinant for `n = m + gcd(m, n)`.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{det_rational, det_symbolic, RatMatrix, SymMatrix};
use crate::polyring::{tensor_index, Monomial, Polynomial, Rational, Ring};

/// The symbols `T[i,j,k]`, `1 <= i <= m`, `1 <= j <= n`, `k in {1, 2}`.
#[derive(Clone, Debug)]
pub struct IndeterminateTensor {
    m: usize,
    n: usize,
    ring: Arc<Ring>,
}

impl IndeterminateTensor {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 1, "tensor dimensions must be positive");
        IndeterminateTensor {
            m,
            n,
            ring: Ring::tensor(m, n),
        }
    }

    /// Uses `ring`, whose chain must start with the tensor variables of the
    /// format (extra variables may follow).
    pub fn with_ring(ring: &Arc<Ring>) -> Result<Self> {
        let (m, n) = ring
            .tensor_format()
            .ok_or_else(|| Error::Shape("ring does not start with a tensor chain".into()))?;
        Ok(IndeterminateTensor {
            m,
            n,
            ring: ring.clone(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// `T[i,j,k]`, 1-based.
    pub fn var(&self, i: usize, j: usize, k: usize) -> Polynomial {
        Polynomial::var_index(&self.ring, tensor_index(self.m, self.n, i, j, k))
    }

    pub fn var_index(&self, i: usize, j: usize, k: usize) -> usize {
        tensor_index(self.m, self.n, i, j, k)
    }

    /// The slice `(T[i,j,k])_{i,j}` as an `m x n` matrix.
    pub fn slice(&self, k: usize) -> SymMatrix {
        SymMatrix::from_fn(&self.ring, self.m, self.n, |i, j| self.var(i + 1, j + 1, k))
    }

    pub fn x(&self) -> SymMatrix {
        self.slice(1)
    }

    pub fn y(&self) -> SymMatrix {
        self.slice(2)
    }

    /// `Z = (X, Y)`, an `m x 2n` matrix.
    pub fn z(&self) -> SymMatrix {
        SymMatrix::from_fn(&self.ring, self.m, 2 * self.n, |i, j| {
            if j < self.n {
                self.var(i + 1, j + 1, 1)
            } else {
                self.var(i + 1, j - self.n + 1, 2)
            }
        })
    }

    /// `W = (X over Y)`, a `2m x n` matrix.
    pub fn w(&self) -> SymMatrix {
        SymMatrix::from_fn(&self.ring, 2 * self.m, self.n, |i, j| {
            if i < self.m {
                self.var(i + 1, j + 1, 1)
            } else {
                self.var(i - self.m + 1, j + 1, 2)
            }
        })
    }

    /// `a X + b Y` for polynomials `a`, `b` over the tensor's ring.
    pub fn pencil(&self, a: &Polynomial, b: &Polynomial) -> SymMatrix {
        SymMatrix::from_fn(&self.ring, self.m, self.n, |i, j| {
            a * &self.var(i + 1, j + 1, 1) + b * &self.var(i + 1, j + 1, 2)
        })
    }

    fn require_square(&self) -> Result<()> {
        if self.m == self.n {
            Ok(())
        } else {
            Err(Error::NotSquare {
                m: self.m,
                n: self.n,
            })
        }
    }
}

/// The coefficients `f_{k,n-k}` of `x^k y^(n-k)` in `det(xX + yY)`, stored in
/// the order `f_{0,n}, f_{1,n-1}, ..., f_{n,0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilInvariants {
    n: usize,
    coeffs: Vec<Polynomial>,
}

impl PencilInvariants {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `f_{k,n-k}`.
    pub fn get(&self, k: usize) -> &Polynomial {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.coeffs[0].ring()
    }
}

/// `f_{k,n-k}` as the sum over all `k`-subsets `S` of columns of the
/// determinant taking column `j` from `X` when `j in S` and from `Y`
/// otherwise.
pub fn pencil_coefficients_subset(t: &IndeterminateTensor) -> Result<PencilInvariants> {
    t.require_square()?;
    let n = t.n;
    let (x, y) = (t.x(), t.y());
    let coeffs = (0..=n)
        .into_par_iter()
        .map(|k| {
            let mut acc = Polynomial::zero(&t.ring);
            for subset in k_subsets(n, k) {
                let mixed = SymMatrix::from_fn(&t.ring, n, n, |i, j| {
                    if subset & (1 << j) != 0 {
                        x[(i, j)].clone()
                    } else {
                        y[(i, j)].clone()
                    }
                });
                acc += &det_symbolic(&mixed)?;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PencilInvariants { n, coeffs })
}

/// Bitmasks of all `k`-element subsets of `0..n`, ascending.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |s| s.count_ones() as usize == k)
}

/// Interpolation nodes `c = 0, 1, ..., n` and the inverse of the Vandermonde
/// matrix `V[c][k] = c^k`.
fn vandermonde_inverse(n: usize) -> RatMatrix {
    let v = RatMatrix::from_fn(n + 1, n + 1, |c, k| {
        num_traits::pow(Rational::from_integer((c as i64).into()), k)
    });
    v.inverse().expect("distinct nodes")
}

/// `f_{k,n-k}` recovered from the symbolic determinants `det(cX + Y)` at
/// `c = 0..=n` by solving the Vandermonde system.
pub fn pencil_coefficients_interp(t: &IndeterminateTensor) -> Result<PencilInvariants> {
    t.require_square()?;
    let n = t.n;
    let one = Polynomial::one(&t.ring);
    let samples = (0..=n)
        .into_par_iter()
        .map(|c| det_symbolic(&t.pencil(&Polynomial::from_int(&t.ring, c as i64), &one)))
        .collect::<Result<Vec<_>>>()?;
    let vinv = vandermonde_inverse(n);
    let coeffs = (0..=n)
        .map(|k| {
            let mut acc = Polynomial::zero(&t.ring);
            for (c, d) in samples.iter().enumerate() {
                acc += &d.scale(&vinv[(k, c)]);
            }
            acc
        })
        .collect();
    Ok(PencilInvariants { n, coeffs })
}

/// `T111 ... Tkk1 * T(k+1)(k+1)2 ... Tnn2`, the diagonal product expected as
/// the leading monomial of `f_{k,n-k}`.
pub fn pencil_diagonal_monomial(n: usize, k: usize) -> Monomial {
    Monomial::from_pairs((1..=n).map(|i| {
        let slice = if i <= k { 1 } else { 2 };
        (tensor_index(n, n, i, i, slice), 1)
    }))
}

/// Where an `m x n x 2` format sits in the classification of its
/// `SL(m) x SL(n)` invariant ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatClass {
    /// `m = n`: polynomial ring on the `n + 1` pencil coefficients.
    Square { n: usize },
    /// `n = m + gcd(m, n)` (up to swapping): one block-determinant generator.
    SingleGenerator { m: usize, n: usize, d: usize },
    /// Only constants are invariant.
    Trivial { m: usize, n: usize },
}

impl fmt::Display for FormatClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatClass::Square { n } => write!(
                f,
                "polynomial ring: generated by the {} pencil coefficients f_{{k,{n}-k}}",
                n + 1
            ),
            FormatClass::SingleGenerator { m, n, d } => write!(
                f,
                "ring generated by one element: block determinant of size {}, degree {}",
                m * n / d,
                m * n / d
            ),
            FormatClass::Trivial { .. } => write!(f, "trivial: K (invariant ring is K)"),
        }
    }
}

pub fn classify_format(m: usize, n: usize) -> Result<FormatClass> {
    if m == 0 || n == 0 {
        return Err(Error::UnsupportedFormat {
            m,
            n,
            reason: "dimensions must be positive".into(),
        });
    }
    let (lo, hi) = (m.min(n), m.max(n));
    if lo == hi {
        return Ok(FormatClass::Square { n });
    }
    let d = lo.gcd(&hi);
    if hi == lo + d {
        Ok(FormatClass::SingleGenerator { m: lo, n: hi, d })
    } else {
        Ok(FormatClass::Trivial { m, n })
    }
}

fn check_block_format(m: usize, n: usize) -> Result<usize> {
    if m == 0 || m >= n {
        return Err(Error::UnsupportedFormat {
            m,
            n,
            reason: "the block determinant needs 1 <= m < n".into(),
        });
    }
    if n > 2 * m {
        return Err(Error::TrivialRing { m, n });
    }
    let d = m.gcd(&n);
    if n != m + d {
        return Err(Error::NoNontrivialInvariant { m, n });
    }
    Ok(d)
}

/// Block-bidiagonal matrix built from given `m x n` slices: `m/d` column
/// blocks of width `n`, `n/d` row blocks of height `m`, `x` on block
/// `(r, r)` and `y` on block `(r + 1, r)`.
pub fn block_matrix_from(x: &SymMatrix, y: &SymMatrix) -> Result<SymMatrix> {
    let (m, n) = (x.rows(), x.cols());
    if (y.rows(), y.cols()) != (m, n) {
        return Err(Error::Shape("slices of different shapes".into()));
    }
    let d = check_block_format(m, n)?;
    let size = m * n / d;
    let ring = x.ring();
    Ok(SymMatrix::from_fn(ring, size, size, |row, col| {
        let (rb, i) = (row / m, row % m);
        let (cb, j) = (col / n, col % n);
        if rb == cb {
            x[(i, j)].clone()
        } else if rb == cb + 1 {
            y[(i, j)].clone()
        } else {
            Polynomial::zero(ring)
        }
    }))
}

/// Value of the block determinant at a rational tensor.
pub fn block_det_value(t: &RatTensor) -> Result<Rational> {
    let (m, n) = (t.m, t.n);
    let d = check_block_format(m, n)?;
    let size = m * n / d;
    det_rational(&RatMatrix::from_fn(size, size, |row, col| {
        let (rb, i) = (row / m, row % m);
        let (cb, j) = (col / n, col % n);
        match rb.checked_sub(cb) {
            Some(0) => t.get(i + 1, j + 1, 1).clone(),
            Some(1) => t.get(i + 1, j + 1, 2).clone(),
            _ => Rational::zero(),
        }
    }))
}

pub fn block_matrix_in(t: &IndeterminateTensor) -> Result<SymMatrix> {
    block_matrix_from(&t.x(), &t.y())
}

/// The `(mn/d) x (mn/d)` block-bidiagonal matrix over `Ring::tensor(m, n)`.
pub fn block_matrix(m: usize, n: usize) -> Result<SymMatrix> {
    check_block_format(m, n)?;
    block_matrix_in(&IndeterminateTensor::new(m, n))
}

/// Determinant of [`block_matrix`]. The sign is the one fixed by putting `X`
/// on the diagonal chain and `Y` directly below it.
pub fn block_det(m: usize, n: usize) -> Result<Polynomial> {
    det_symbolic(&block_matrix(m, n)?)
}

/// The product `(T111..Tdd1)^s (T(d+1)(d+1)1..)^(s-1) ... (T1(d+1)2..Td(2d)2)^1
/// ... (T(m-d+1)(n-d+1)2..Tmn2)^s` with `s = m/d`.
pub fn block_det_expected_lm(m: usize, n: usize) -> Result<Monomial> {
    let d = check_block_format(m, n)?;
    let s = m / d;
    let mut pairs = Vec::new();
    for b in 0..s {
        for t in 1..=d {
            let r = b * d + t;
            pairs.push((tensor_index(m, n, r, r, 1), (s - b) as u32));
            pairs.push((tensor_index(m, n, r, r + d, 2), (b + 1) as u32));
        }
    }
    Ok(Monomial::from_pairs(pairs))
}

/// Whether `supp(lm(f))` lies in `{T111, ..., Tmm1, T1(n-m+1)2, ..., Tmn2}`
/// under the tensor chain's degree-lex order.
pub fn leading_monomial_support_check(f: &Polynomial, m: usize, n: usize) -> Result<bool> {
    let ring = f.ring();
    if ring.tensor_format() != Some((m, n)) {
        return Err(Error::Shape(format!(
            "polynomial is not over the {m}x{n}x2 tensor ring"
        )));
    }
    let lm = f.leading_monomial()?;
    let allowed = |idx: usize| {
        (1..=m).any(|i| {
            (i <= n && idx == tensor_index(m, n, i, i, 1))
                || (n + i > m && idx == tensor_index(m, n, i, n + i - m, 2))
        })
    };
    let ok = lm.support().all(allowed);
    Ok(ok)
}

/// A tensor with rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RatTensor {
    m: usize,
    n: usize,
    data: Vec<Rational>,
}

impl RatTensor {
    pub fn zeros(m: usize, n: usize) -> Self {
        RatTensor {
            m,
            n,
            data: vec![Rational::zero(); 2 * m * n],
        }
    }

    pub fn from_slices(x: &RatMatrix, y: &RatMatrix) -> Result<Self> {
        if (x.rows(), x.cols()) != (y.rows(), y.cols()) {
            return Err(Error::Shape("slices of different shapes".into()));
        }
        let (m, n) = (x.rows(), x.cols());
        let mut t = Self::zeros(m, n);
        for i in 1..=m {
            for j in 1..=n {
                t.set(i, j, 1, x[(i - 1, j - 1)].clone());
                t.set(i, j, 2, y[(i - 1, j - 1)].clone());
            }
        }
        Ok(t)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[tensor_index(self.m, self.n, i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j) && (1..=2).contains(&k));
        self.data[tensor_index(self.m, self.n, i, j, k)] = v;
    }

    /// Entries in tensor-chain order, matching `Ring::tensor(m, n)`.
    pub fn values(&self) -> &[Rational] {
        &self.data
    }

    pub fn slice(&self, k: usize) -> RatMatrix {
        RatMatrix::from_fn(self.m, self.n, |i, j| self.get(i + 1, j + 1, k).clone())
    }

    pub fn x(&self) -> RatMatrix {
        self.slice(1)
    }

    pub fn y(&self) -> RatMatrix {
        self.slice(2)
    }

    /// Entry values extended by zeros to the length of `ring`, for
    /// evaluating polynomials over a tensor ring with extra variables.
    pub fn point_for(&self, ring: &Ring) -> Result<Vec<Rational>> {
        if ring.tensor_format() != Some((self.m, self.n)) {
            return Err(Error::Shape(format!(
                "polynomial ring does not match a {}x{}x2 tensor",
                self.m, self.n
            )));
        }
        let mut v = self.data.clone();
        v.resize(ring.len(), Rational::zero());
        Ok(v)
    }

    /// Value of a polynomial over the tensor ring at this tensor. Any extra
    /// variable that actually occurs in `p` is an error.
    pub fn evaluate(&self, p: &Polynomial) -> Result<Rational> {
        let ring = p.ring();
        let point = self.point_for(ring)?;
        if let Some(&extra) = p.variables().iter().find(|&&i| i >= self.data.len()) {
            return Err(Error::MissingAssignment(ring.var(extra).to_string()));
        }
        Ok(p.evaluate_indexed(&point))
    }
}

impl fmt::Debug for RatTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatTensor {{ X: {:?}, Y: {:?} }}", self.x(), self.y())
    }
}

/// Values of `f_{0,n}, ..., f_{n,0}` at a square rational tensor, from
/// `det(cX + Y)` at `c = 0..=n`.
pub fn pencil_values(t: &RatTensor) -> Result<Vec<Rational>> {
    if t.m != t.n {
        return Err(Error::NotSquare { m: t.m, n: t.n });
    }
    let n = t.n;
    let (x, y) = (t.x(), t.y());
    let dets = (0..=n)
        .map(|c| {
            det_rational(
                &x.scale(&Rational::from_integer((c as i64).into()))
                    .try_add(&y)?,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let vinv = vandermonde_inverse(n);
    Ok((0..=n)
        .map(|k| {
            dets.iter()
                .enumerate()
                .map(|(c, v)| &vinv[(k, c)] * v)
                .sum()
        })
        .collect())
}

/// Values of `f_{0,n}, ..., f_{n,0}` at a square rational tensor as sums of
/// mixed determinants over column subsets.
pub fn pencil_values_subset(t: &RatTensor) -> Result<Vec<Rational>> {
    if t.m != t.n {
        return Err(Error::NotSquare { m: t.m, n: t.n });
    }
    let n = t.n;
    let (x, y) = (t.x(), t.y());
    (0..=n)
        .map(|k| {
            let mut acc = Rational::zero();
            for subset in k_subsets(n, k) {
                let mixed = RatMatrix::from_fn(n, n, |i, j| {
                    if subset & (1 << j) != 0 {
                        x[(i, j)].clone()
                    } else {
                        y[(i, j)].clone()
                    }
                });
                acc += det_rational(&mixed)?;
            }
            Ok(acc)
        })
        .collect()
}

/// `det(xX + yY)` with `x`, `y` adjoined to the tensor ring, expanded directly.
pub fn pencil_determinant(n: usize) -> Result<(IndeterminateTensor, Polynomial)> {
    let ring = Ring::tensor_with(n, n, &["x", "y"]);
    let t = IndeterminateTensor::with_ring(&ring)?;
    let xs = Polynomial::var_index(&ring, 2 * n * n);
    let ys = Polynomial::var_index(&ring, 2 * n * n + 1);
    let det = det_symbolic(&t.pencil(&xs, &ys))?;
    Ok((t, det))
}

/// `sum_k f_{k,n-k} x^k y^(n-k)` for coefficients over a ring that has the
/// variables `x` and `y`.
pub fn binary_form(coeffs: &[Polynomial], x: &Polynomial, y: &Polynomial) -> Polynomial {
    let n = coeffs.len() - 1;
    let mut acc = Polynomial::zero(x.ring());
    for (k, f) in coeffs.iter().enumerate() {
        acc += &(f * &(x.pow(k as u32) * y.pow((n - k) as u32)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{int, Variable};

    #[test]
    fn n1_coefficients() {
        let t = IndeterminateTensor::new(1, 1);
        let f = pencil_coefficients_subset(&t).unwrap();
        assert_eq!(f.get(0).to_string(), "T[1,1,2]");
        assert_eq!(f.get(1).to_string(), "T[1,1,1]");
        assert_eq!(pencil_coefficients_interp(&t).unwrap(), f);
    }

    #[test]
    fn n2_middle_coefficient() {
        // coefficient of xy in det(xX + yY), expanded by hand
        let t = IndeterminateTensor::new(2, 2);
        let f = pencil_coefficients_subset(&t).unwrap();
        let want = Polynomial::parse(
            t.ring(),
            "T[1,1,1]*T[2,2,2] - T[2,1,1]*T[1,2,2] + T[1,1,2]*T[2,2,1] - T[2,1,2]*T[1,2,1]",
        )
        .unwrap();
        assert_eq!(f.get(1), &want);
        assert_eq!(pencil_coefficients_interp(&t).unwrap(), f);
    }

    #[test]
    fn n3_extremes() {
        let t = IndeterminateTensor::new(3, 3);
        let f = pencil_coefficients_interp(&t).unwrap();
        assert_eq!(f.get(3), &det_symbolic(&t.x()).unwrap());
        assert_eq!(f.get(0), &det_symbolic(&t.y()).unwrap());
        assert_eq!(
            f.get(2).leading_monomial().unwrap(),
            pencil_diagonal_monomial(3, 2)
        );
        assert_eq!(
            crate::polyring::monomial_to_string(t.ring(), &pencil_diagonal_monomial(3, 2)),
            "T[1,1,1]*T[2,2,1]*T[3,3,2]"
        );
    }

    #[test]
    fn non_square_rejected() {
        let t = IndeterminateTensor::new(2, 3);
        assert!(matches!(
            pencil_coefficients_subset(&t),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            pencil_coefficients_interp(&t),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn f20_at_identity() {
        let t = IndeterminateTensor::new(2, 2);
        let f = pencil_coefficients_subset(&t).unwrap();
        let point =
            RatTensor::from_slices(&RatMatrix::identity(2), &RatMatrix::zeros(2, 2)).unwrap();
        assert_eq!(point.evaluate(f.get(2)).unwrap(), int(1));
        assert_eq!(pencil_values(&point).unwrap(), vec![int(0), int(0), int(1)]);
    }

    #[test]
    fn block_matrix_shapes() {
        let m12 = block_matrix(1, 2).unwrap();
        assert_eq!(
            format!("{m12:?}"),
            "SymMatrix 2x2 [\n  [T[1,1,1], T[1,2,1]]\n  [T[1,1,2], T[1,2,2]]\n]"
        );
        let m23 = block_matrix(2, 3).unwrap();
        assert_eq!((m23.rows(), m23.cols()), (6, 6));
        // X on (0,0) and (1,1) blocks, Y below them
        assert_eq!(m23[(2, 3)].to_string(), "T[1,1,1]");
        assert_eq!(m23[(2, 0)].to_string(), "T[1,1,2]");
        assert_eq!(m23[(5, 5)].to_string(), "T[2,3,2]");
        assert!(m23[(0, 3)].is_zero() && m23[(5, 0)].is_zero());
        let m24 = block_matrix(2, 4).unwrap();
        assert_eq!((m24.rows(), m24.cols()), (4, 4));
        assert_eq!(m24[(2, 3)].to_string(), "T[1,4,2]");
    }

    #[test]
    fn block_format_errors() {
        assert!(matches!(block_matrix(2, 5), Err(Error::TrivialRing { .. })));
        assert!(matches!(
            block_matrix(3, 5),
            Err(Error::NoNontrivialInvariant { .. })
        ));
        assert!(matches!(
            block_matrix(2, 2),
            Err(Error::UnsupportedFormat { .. })
        ));
        assert!(matches!(
            block_det(4, 7),
            Err(Error::NoNontrivialInvariant { .. })
        ));
    }

    #[test]
    fn classification() {
        assert_eq!(classify_format(3, 3).unwrap(), FormatClass::Square { n: 3 });
        assert_eq!(
            classify_format(2, 3).unwrap(),
            FormatClass::SingleGenerator { m: 2, n: 3, d: 1 }
        );
        assert_eq!(
            classify_format(4, 2).unwrap(),
            FormatClass::SingleGenerator { m: 2, n: 4, d: 2 }
        );
        assert_eq!(
            classify_format(2, 5).unwrap(),
            FormatClass::Trivial { m: 2, n: 5 }
        );
        assert_eq!(
            classify_format(3, 5).unwrap(),
            FormatClass::Trivial { m: 3, n: 5 }
        );
        assert!(classify_format(2, 5)
            .unwrap()
            .to_string()
            .starts_with("trivial: K"));
    }

    #[test]
    fn block_det_1_2() {
        let p = block_det(1, 2).unwrap();
        assert_eq!(p.to_string(), "T[1,1,1]*T[1,2,2] - T[1,2,1]*T[1,1,2]");
        assert!(leading_monomial_support_check(&p, 1, 2).unwrap());
    }

    #[test]
    fn support_check_rejects_off_diagonal() {
        let t = IndeterminateTensor::new(2, 2);
        assert!(!leading_monomial_support_check(&t.var(1, 2, 1), 2, 2).unwrap());
        let zero = Polynomial::zero(t.ring());
        assert!(matches!(
            leading_monomial_support_check(&zero, 2, 2),
            Err(Error::ZeroPolynomial)
        ));
        let f = pencil_coefficients_subset(&t).unwrap();
        for k in 0..=2 {
            assert!(leading_monomial_support_check(f.get(k), 2, 2).unwrap());
        }
    }

    #[test]
    fn extra_variables_in_evaluation() {
        let ring = Ring::tensor_with(1, 1, &["c"]);
        let p = Polynomial::parse(&ring, "T[1,1,1] + c").unwrap();
        let t = RatTensor::zeros(1, 1);
        assert!(matches!(t.evaluate(&p), Err(Error::MissingAssignment(_))));
        let q = Polynomial::var(&ring, &Variable::t(1, 1, 2)).unwrap();
        assert_eq!(t.evaluate(&q).unwrap(), int(0));
    }

    #[test]
    fn block_det_value_matches_symbolic() {
        let f = block_det(2, 3).unwrap();
        for s in 0..4 {
            let mut rng = crate::action::sample_rng(17, s);
            let t = crate::action::random_tensor(2, 3, &mut rng);
            assert_eq!(block_det_value(&t).unwrap(), t.evaluate(&f).unwrap());
        }
    }
}
