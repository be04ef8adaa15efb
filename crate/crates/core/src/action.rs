//! The action of `SL(m) x SL(n) x SL(2)` on tensors and on polynomials.
//!
//! An element `(P, Q, R)` with `R = [[a, b], [c, d]]` sends the slices of a
//! tensor to
//!
//! ```text
//! X' = a P^T X Q + c P^T Y Q,    Y' = b P^T X Q + d P^T Y Q.
//! ```
//!
//! On polynomials the element acts by substituting each `T[i,j,k]` with the
//! matching entry of `X'` or `Y'` built from the symbolic slices, so
//! `evaluate(act_on_polynomial(g, p), t) == evaluate(p, act_on_tensor(g, t))`.
//! Applying `g2` and then `g1` to a tensor equals applying `g2.mul(&g1)`, the
//! componentwise product `(P2 P1, Q2 Q1, R2 R1)`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::linalg::{det_rational, kernel_basis, RatMatrix, SymMatrix};
use crate::pencil::{IndeterminateTensor, RatTensor};
use crate::polyring::{Monomial, Polynomial, Rational};

/// Which factors of `SL(m) x SL(n) x SL(2)` a sample draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// `SL(m) x SL(n)`.
    SlSl,
    /// `SL(m) x SL(n) x SL(2)`.
    SlSlSl,
    /// `SL(2)` alone.
    Sl2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    p: RatMatrix,
    q: RatMatrix,
    r: RatMatrix,
}

impl GroupElement {
    pub fn new(p: RatMatrix, q: RatMatrix, r: RatMatrix) -> Result<Self> {
        if r.rows() != 2 {
            return Err(Error::Shape("the SL(2) component must be 2x2".into()));
        }
        for mat in [&p, &q, &r] {
            if det_rational(mat)? != Rational::one() {
                return Err(Error::NotUnimodular);
            }
        }
        Ok(GroupElement { p, q, r })
    }

    pub fn identity(m: usize, n: usize) -> Self {
        GroupElement {
            p: RatMatrix::identity(m),
            q: RatMatrix::identity(n),
            r: RatMatrix::identity(2),
        }
    }

    pub fn random(m: usize, n: usize, kind: GroupKind, rng: &mut impl Rng) -> Self {
        let (p, q) = match kind {
            GroupKind::Sl2 => (RatMatrix::identity(m), RatMatrix::identity(n)),
            _ => (random_sl_with(m, rng), random_sl_with(n, rng)),
        };
        let r = match kind {
            GroupKind::SlSl => RatMatrix::identity(2),
            _ => random_sl_with(2, rng),
        };
        GroupElement { p, q, r }
    }

    pub fn p(&self) -> &RatMatrix {
        &self.p
    }

    pub fn q(&self) -> &RatMatrix {
        &self.q
    }

    pub fn r(&self) -> &RatMatrix {
        &self.r
    }

    pub fn format(&self) -> (usize, usize) {
        (self.p.rows(), self.q.rows())
    }

    /// Componentwise product `(P Q', ...)`.
    pub fn mul(&self, rhs: &GroupElement) -> Result<GroupElement> {
        Ok(GroupElement {
            p: self.p.try_mul(&rhs.p)?,
            q: self.q.try_mul(&rhs.q)?,
            r: self.r.try_mul(&rhs.r)?,
        })
    }

    pub fn inverse(&self) -> Result<GroupElement> {
        Ok(GroupElement {
            p: self.p.inverse()?,
            q: self.q.inverse()?,
            r: self.r.inverse()?,
        })
    }
}

fn small_rational(rng: &mut impl Rng, nonzero: bool) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-3..=3);
        if nonzero && num == 0 {
            continue;
        }
        let den: i64 = if rng.gen_bool(0.5) { 1 } else { 2 };
        return Rational::new(num.into(), den.into());
    }
}

/// Product of `2 * size` elementary shears `I + c E_ab` with `a != b` and a
/// small nonzero rational `c`.
pub fn random_sl_with(size: usize, rng: &mut impl Rng) -> RatMatrix {
    assert!(size >= 1, "SL(0) has no elements");
    let mut acc = RatMatrix::identity(size);
    if size == 1 {
        return acc;
    }
    for _ in 0..2 * size {
        let a = rng.gen_range(0..size);
        let mut b = rng.gen_range(0..size - 1);
        if b >= a {
            b += 1;
        }
        let c = small_rational(rng, true);
        let mut shear = RatMatrix::identity(size);
        shear = shear
            .try_add(&RatMatrix::from_fn(size, size, |i, j| {
                if (i, j) == (a, b) {
                    c.clone()
                } else {
                    Rational::zero()
                }
            }))
            .expect("same shape");
        acc = acc.try_mul(&shear).expect("same shape");
    }
    acc
}

pub fn random_sl(size: usize, seed: u64) -> RatMatrix {
    random_sl_with(size, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Entries with numerators in `[-3, 3]` and denominators in `{1, 2}`.
pub fn random_tensor(m: usize, n: usize, rng: &mut impl Rng) -> RatTensor {
    let mut t = RatTensor::zeros(m, n);
    for k in 1..=2 {
        for j in 1..=n {
            for i in 1..=m {
                t.set(i, j, k, small_rational(rng, false));
            }
        }
    }
    t
}

/// Deterministic per-sample generator: stream `index` of the seeded ChaCha.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn act_on_tensor(g: &GroupElement, t: &RatTensor) -> Result<RatTensor> {
    if g.format() != (t.m(), t.n()) {
        return Err(Error::Shape(format!(
            "group element for {:?} applied to a {}x{}x2 tensor",
            g.format(),
            t.m(),
            t.n()
        )));
    }
    let pt = g.p.transpose();
    let x = pt.try_mul(&t.x())?.try_mul(&g.q)?;
    let y = pt.try_mul(&t.y())?.try_mul(&g.q)?;
    let r = &g.r;
    let x2 = x.scale(&r[(0, 0)]).try_add(&y.scale(&r[(1, 0)]))?;
    let y2 = x.scale(&r[(0, 1)]).try_add(&y.scale(&r[(1, 1)]))?;
    RatTensor::from_slices(&x2, &y2)
}

/// Images of every ring variable under the substitution induced by
/// polynomial matrices `p` (`m x m`), `q` (`n x n`), `r` (`2 x 2`) over the
/// tensor's ring. Variables after the tensor chain map to themselves.
pub fn tensor_substitution(
    t: &IndeterminateTensor,
    p: &SymMatrix,
    q: &SymMatrix,
    r: &SymMatrix,
) -> Result<Vec<Polynomial>> {
    let (m, n) = (t.m(), t.n());
    if (p.rows(), p.cols(), q.rows(), q.cols(), r.rows(), r.cols()) != (m, m, n, n, 2, 2) {
        return Err(Error::Shape(
            "group matrices do not match the tensor format".into(),
        ));
    }
    let pt = p.transpose();
    let x = pt.try_mul(&t.x())?.try_mul(q)?;
    let y = pt.try_mul(&t.y())?.try_mul(q)?;
    let x2 = x.scale(&r[(0, 0)]).try_add(&y.scale(&r[(1, 0)]))?;
    let y2 = x.scale(&r[(0, 1)]).try_add(&y.scale(&r[(1, 1)]))?;
    let ring = t.ring();
    let mut images: Vec<Polynomial> = (0..ring.len())
        .map(|i| Polynomial::var_index(ring, i))
        .collect();
    for i in 1..=m {
        for j in 1..=n {
            images[t.var_index(i, j, 1)] = x2[(i - 1, j - 1)].clone();
            images[t.var_index(i, j, 2)] = y2[(i - 1, j - 1)].clone();
        }
    }
    Ok(images)
}

pub fn act_on_polynomial(g: &GroupElement, f: &Polynomial) -> Result<Polynomial> {
    let ring = f.ring();
    let t = IndeterminateTensor::with_ring(ring)?;
    if (t.m(), t.n()) != g.format() {
        return Err(Error::Shape(
            "group element does not match the polynomial's format".into(),
        ));
    }
    let lift = |mat: &RatMatrix| SymMatrix::from_rational(ring, mat);
    let images = tensor_substitution(&t, &lift(&g.p), &lift(&g.q), &lift(&g.r))?;
    f.substitute_indexed(ring, &images)
}

/// Something that can be evaluated at a rational tensor of a fixed format.
pub trait TensorFunction: Sync {
    fn format(&self) -> (usize, usize);
    fn eval_at(&self, t: &RatTensor) -> Result<Rational>;
}

impl TensorFunction for Polynomial {
    fn format(&self) -> (usize, usize) {
        self.ring().tensor_format().unwrap_or((0, 0))
    }

    fn eval_at(&self, t: &RatTensor) -> Result<Rational> {
        t.evaluate(self)
    }
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub sample: usize,
    pub element: GroupElement,
    pub tensor: RatTensor,
    pub value: Rational,
    pub transformed_value: Rational,
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub group: GroupKind,
    pub samples: usize,
    pub passed: usize,
    /// The failing sample with the smallest index.
    pub counterexample: Option<Counterexample>,
}

impl InvarianceReport {
    pub fn is_pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares `f(g . t)` with `f(t)` exactly for `samples` seeded random pairs
/// `(g, t)`.
pub fn check_invariance(
    f: &dyn TensorFunction,
    group: GroupKind,
    samples: usize,
    seed: u64,
) -> Result<InvarianceReport> {
    let (m, n) = f.format();
    if m == 0 {
        return Err(Error::Shape(
            "function is not defined on a tensor format".into(),
        ));
    }
    let outcomes = (0..samples)
        .into_par_iter()
        .map(|s| -> Result<Option<Counterexample>> {
            let mut rng = sample_rng(seed, s as u64);
            let g = GroupElement::random(m, n, group, &mut rng);
            let t = random_tensor(m, n, &mut rng);
            let value = f.eval_at(&t)?;
            let transformed_value = f.eval_at(&act_on_tensor(&g, &t)?)?;
            Ok((value != transformed_value).then_some(Counterexample {
                sample: s,
                element: g,
                tensor: t,
                value,
                transformed_value,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let passed = outcomes.iter().filter(|o| o.is_none()).count();
    Ok(InvarianceReport {
        group,
        samples,
        passed,
        counterexample: outcomes.into_iter().flatten().next(),
    })
}

/// Factors whose Lie algebras take part in [`lie_invariant_space`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LieParts {
    pub sl_m: bool,
    pub sl_n: bool,
    pub sl_2: bool,
}

impl LieParts {
    pub const G: LieParts = LieParts {
        sl_m: true,
        sl_n: true,
        sl_2: false,
    };
    pub const ALL: LieParts = LieParts {
        sl_m: true,
        sl_n: true,
        sl_2: true,
    };
}

/// Largest graded piece [`lie_invariant_space`] will set up.
pub const MAX_GRADED_PIECE: u128 = 50_000;

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// All monomials of total degree `degree` in `nvars` variables, as dense
/// exponent vectors.
fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, degree, &mut vec![0; nvars], &mut out);
    out
}

/// A derivation of `K[T]` given by the images of the variables.
struct Derivation {
    /// `image[v] = (w, c)` means `D(T_v) = c * T_w`; `None` means `D(T_v) = 0`.
    image: Vec<Option<usize>>,
}

impl Derivation {
    fn apply(&self, mono: &Monomial) -> Vec<(Monomial, i64)> {
        let mut out = Vec::new();
        for (v, e) in mono.pairs() {
            if let Some(w) = self.image[v] {
                let (_, lowered) = mono.lower(v).expect("variable present");
                out.push((lowered.mul(&Monomial::var(w, 1)), e as i64));
            }
        }
        out
    }
}

/// Derivations induced by the off-diagonal elementary matrices of the chosen
/// Lie algebras, acting as `X -> E^T X`, `X -> X E` and `(X, Y) -> (E11 X +
/// E21 Y, E12 X + E22 Y)`.
fn off_diagonal_derivations(t: &IndeterminateTensor, parts: LieParts) -> Vec<Derivation> {
    let (m, n) = (t.m(), t.n());
    let nv = 2 * m * n;
    let mut out = Vec::new();
    let mut push = |f: &dyn Fn(usize, usize, usize) -> Option<usize>| {
        let mut image = vec![None; nv];
        for k in 1..=2 {
            for j in 1..=n {
                for i in 1..=m {
                    image[t.var_index(i, j, k)] = f(i, j, k);
                }
            }
        }
        out.push(Derivation { image });
    };
    if parts.sl_m {
        for a in 1..=m {
            for b in (1..=m).filter(|&b| b != a) {
                push(&|i, j, k| (i == b).then(|| t.var_index(a, j, k)));
            }
        }
    }
    if parts.sl_n {
        for a in 1..=n {
            for b in (1..=n).filter(|&b| b != a) {
                push(&|i, j, k| (j == b).then(|| t.var_index(i, a, k)));
            }
        }
    }
    if parts.sl_2 {
        push(&|i, j, k| (k == 2).then(|| t.var_index(i, j, 1)));
        push(&|i, j, k| (k == 1).then(|| t.var_index(i, j, 2)));
    }
    out
}

/// Exact basis of the degree-`degree` polynomials killed by the chosen Lie
/// algebras (valid as group invariants in characteristic 0).
///
/// The traceless diagonal generators act diagonally on monomials, so their
/// joint kernel is spanned by the monomials of weight zero; the
/// off-diagonal generators are then stacked into one matrix on that span and
/// its kernel is computed exactly. Basis elements are integer-normalized.
pub fn lie_invariant_space(
    m: usize,
    n: usize,
    degree: u32,
    parts: LieParts,
) -> Result<Vec<Polynomial>> {
    let nv = 2 * m * n;
    let size = binomial(nv as u128 + degree as u128 - 1, degree as u128);
    if size > MAX_GRADED_PIECE {
        return Err(Error::GradedPieceTooLarge {
            size,
            limit: MAX_GRADED_PIECE,
        });
    }
    let t = IndeterminateTensor::new(m, n);
    let ring = t.ring().clone();
    let weight_zero = |e: &[u32]| {
        let mut rows = vec![0u32; m];
        let mut cols = vec![0u32; n];
        let mut slices = [0u32; 2];
        for k in 1..=2 {
            for j in 1..=n {
                for i in 1..=m {
                    let x = e[t.var_index(i, j, k)];
                    rows[i - 1] += x;
                    cols[j - 1] += x;
                    slices[k - 1] += x;
                }
            }
        }
        let flat = |v: &[u32]| v.windows(2).all(|w| w[0] == w[1]);
        (!parts.sl_m || flat(&rows))
            && (!parts.sl_n || flat(&cols))
            && (!parts.sl_2 || flat(&slices))
    };
    let basis: Vec<Monomial> = monomials_of_degree(nv, degree)
        .into_iter()
        .filter(|e| weight_zero(e))
        .map(|e| Monomial::from_dense(&e))
        .collect();
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let derivations = off_diagonal_derivations(&t, parts);
    let mut row_of: FxHashMap<(usize, Monomial), usize> = FxHashMap::default();
    let mut entries: Vec<(usize, usize, i64)> = Vec::new();
    for (g, d) in derivations.iter().enumerate() {
        for (col, mono) in basis.iter().enumerate() {
            for (target, c) in d.apply(mono) {
                let next = row_of.len();
                let row = *row_of.entry((g, target)).or_insert(next);
                entries.push((row, col, c));
            }
        }
    }
    let mut mat = RatMatrix::zeros(row_of.len(), basis.len());
    let mut dense = vec![vec![0i64; basis.len()]; row_of.len()];
    for (r, c, v) in entries {
        dense[r][c] += v;
    }
    if !dense.is_empty() {
        mat = RatMatrix::from_rows(
            dense
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )?;
    }
    let kernel = if mat.rows() == 0 {
        (0..basis.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); basis.len()];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        kernel_basis(&mat)
    };
    Ok(kernel
        .into_iter()
        .map(|v| Polynomial::from_terms(&ring, basis.iter().cloned().zip(v)).integer_normalized())
        .collect())
}

/// Rank of the span of `polys` (all over one ring), by exact elimination on
/// their coefficient vectors.
pub fn span_rank(polys: &[Polynomial]) -> usize {
    let mut index: FxHashMap<&Monomial, usize> = FxHashMap::default();
    for p in polys {
        for m in p.terms().keys() {
            let next = index.len();
            index.entry(m).or_insert(next);
        }
    }
    let mut rows = vec![vec![Rational::zero(); index.len()]; polys.len()];
    for (i, p) in polys.iter().enumerate() {
        for (m, c) in p.terms() {
            rows[i][index[m]] = c.clone();
        }
    }
    if index.is_empty() {
        return 0;
    }
    RatMatrix::from_rows(rows).expect("rectangular").rank()
}
