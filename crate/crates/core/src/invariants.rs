//! Invariants of square `n x n x 2` tensors in terms of the pencil
//! coefficients.
//!
//! A polynomial in `U_n, ..., U_0` (the U-form) stands for the tensor
//! polynomial obtained by substituting `U_k -> f_{k,n-k}`. The same ring
//! with `U_k = C(n,k) xi_k` is the coefficient ring of the binary form
//! `sum C(n,k) xi_k x^k y^(n-k)`, which is how the classical invariants below
//! are produced.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::action::TensorFunction;
use crate::error::{Error, Result};
use crate::pencil::{pencil_coefficients_subset, pencil_values, IndeterminateTensor, RatTensor};
use crate::polyring::{Monomial, Polynomial, Rational, Ring, Variable};

/// Term limit for polynomial expansions, from `TIV_MAX_TERMS` (default
/// 5,000,000). Read once per process.
pub fn max_terms() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("TIV_MAX_TERMS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(5_000_000)
    })
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Ring index of `U_k` (and `xi_k`) in [`Ring::u_ring`].
pub fn u_index(n: usize, k: usize) -> usize {
    n - k
}

fn require_u_ring(g: &Polynomial, n: usize, expect: fn(usize) -> Variable) -> Result<()> {
    let vars = g.ring().vars();
    if vars.len() != n + 1 || (0..=n).any(|k| vars[u_index(n, k)] != expect(k)) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// The generators `f_{0,n}, ..., f_{n,0}` with a cache of their powers.
pub struct Generators {
    t: IndeterminateTensor,
    f: Vec<Polynomial>,
    powers: Vec<Vec<Polynomial>>,
    lms: Vec<Monomial>,
}

impl Generators {
    pub fn new(n: usize) -> Result<Self> {
        let t = IndeterminateTensor::new(n, n);
        let f = pencil_coefficients_subset(&t)?.coeffs().to_vec();
        let lms = f
            .iter()
            .map(|p| p.leading_monomial())
            .collect::<Result<_>>()?;
        let powers = f
            .iter()
            .map(|p| vec![Polynomial::one(p.ring()), p.clone()])
            .collect();
        Ok(Generators { t, f, powers, lms })
    }

    pub fn n(&self) -> usize {
        self.f.len() - 1
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.t.ring()
    }

    pub fn f(&self, k: usize) -> &Polynomial {
        &self.f[k]
    }

    fn power(&mut self, k: usize, e: u32) -> &Polynomial {
        let cache = &mut self.powers[k];
        while cache.len() <= e as usize {
            let next = cache.last().unwrap() * &self.f[k];
            cache.push(next);
        }
        &cache[e as usize]
    }

    /// `prod_k f_{k,n-k}^{c_k}`.
    pub fn product(&mut self, c: &[u32]) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.t.ring());
        for (k, &e) in c.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = self.power(k, e).clone();
            acc = &acc * &p;
            if acc.num_terms() > max_terms() {
                return Err(Error::ExpansionTooLarge { limit: max_terms() });
            }
        }
        Ok(acc)
    }

    /// Exponents `c` with `prod_k lm(f_{k,n-k})^{c_k} == mono`, if any.
    ///
    /// The exponent of `T[k,k,1]` in such a product is `c_k + ... + c_n`, so
    /// the `c_k` are successive differences of the diagonal `k = 1`
    /// exponents and `c_0` is what is left of the degree.
    pub fn factor_leading(&self, mono: &Monomial) -> Option<Vec<u32>> {
        let n = self.n();
        let deg = mono.degree() as usize;
        if !deg.is_multiple_of(n) {
            return None;
        }
        let e: Vec<u32> = (1..=n)
            .map(|k| mono.exponent(self.t.var_index(k, k, 1)))
            .collect();
        if e.windows(2).any(|w| w[0] < w[1]) || e[0] as usize > deg / n {
            return None;
        }
        let mut c = vec![0u32; n + 1];
        c[0] = (deg / n) as u32 - e[0];
        for k in 1..=n {
            c[k] = e[k - 1] - e.get(k).copied().unwrap_or(0);
        }
        let rebuilt = c
            .iter()
            .zip(&self.lms)
            .fold(Monomial::one(), |acc, (&ck, lm)| acc.mul(&lm.pow(ck)));
        (rebuilt == *mono).then_some(c)
    }

    /// `g(f_{0,n}, ..., f_{n,0})` for a U-form `g`. Fails with
    /// [`Error::ExpansionTooLarge`] once the expansion exceeds [`max_terms`].
    pub fn substitute(&mut self, g: &Polynomial) -> Result<Polynomial> {
        let n = self.n();
        require_u_ring(g, n, Variable::U)?;
        let mut acc = Polynomial::zero(self.t.ring());
        for (mono, coeff) in g.terms() {
            let dense = mono.to_dense(n + 1);
            let c: Vec<u32> = (0..=n).map(|k| dense[u_index(n, k)]).collect();
            let prod = self.product(&c)?;
            acc.add_scaled_product(coeff, &Monomial::one(), &prod);
            if acc.num_terms() > max_terms() {
                return Err(Error::ExpansionTooLarge { limit: max_terms() });
            }
        }
        Ok(acc)
    }

    /// Subduction of `p` by the generators: repeatedly match `lm(p)` with a
    /// product of their leading monomials and cancel the leading term.
    pub fn subduct(&mut self, p: &Polynomial) -> Result<Subduction> {
        let n = self.n();
        let ring = self.t.ring().clone();
        let mut rest = p.embed(&ring)?;
        let uring = Ring::u_ring(n);
        let mut u = Polynomial::zero(&uring);
        while let Ok((m, c)) = rest.leading_term() {
            let (lm, lc) = (m.clone(), c.clone());
            let Some(c) = self.factor_leading(&lm) else {
                break;
            };
            let prod = self.product(&c)?;
            debug_assert_eq!(
                prod.leading_term().map(|(_, c)| c.clone()).ok(),
                Some(Rational::one())
            );
            rest.add_scaled_product(&-&lc, &Monomial::one(), &prod);
            let umono = Monomial::from_pairs((0..=n).map(|k| (u_index(n, k), c[k])));
            u.add_term(umono, lc);
        }
        Ok(Subduction { u, remainder: rest })
    }
}

#[derive(Clone, Debug)]
pub struct Subduction {
    /// U-form collected so far.
    pub u: Polynomial,
    /// Zero iff the input lies in the algebra generated by the `f_{k,n-k}`.
    pub remainder: Polynomial,
}

/// Subduction of a polynomial over the `n x n x 2` tensor ring.
pub fn subduct(p: &Polynomial, n: usize) -> Result<Subduction> {
    Generators::new(n)?.subduct(p)
}

/// The U-form `g` with `U_k -> f_{k,n-k}` substituted.
pub fn substitute_u(g: &Polynomial, n: usize) -> Result<Polynomial> {
    Generators::new(n)?.substitute(g)
}

/// Value of the U-form `g` at a square tensor, computed from the numeric
/// pencil coefficients without expanding `g` in the tensor entries.
pub fn evaluate_u(g: &Polynomial, t: &RatTensor) -> Result<Rational> {
    let n = t.n();
    require_u_ring(g, n, Variable::U)?;
    let f = pencil_values(t)?;
    let point: Vec<Rational> = (0..=n).map(|idx| f[n - idx].clone()).collect();
    Ok(g.evaluate_indexed(&point))
}

/// A U-form viewed as a function of `n x n x 2` tensors.
#[derive(Clone, Debug)]
pub struct UForm {
    pub g: Polynomial,
    pub n: usize,
}

impl UForm {
    pub fn new(g: Polynomial, n: usize) -> Result<Self> {
        require_u_ring(&g, n, Variable::U)?;
        Ok(UForm { g, n })
    }
}

impl TensorFunction for UForm {
    fn format(&self) -> (usize, usize) {
        (self.n, self.n)
    }

    fn eval_at(&self, t: &RatTensor) -> Result<Rational> {
        evaluate_u(&self.g, t)
    }
}

/// `U_k -> C(n,k) xi_k`.
pub fn bridge_to_xi(u: &Polynomial, n: usize) -> Result<Polynomial> {
    require_u_ring(u, n, Variable::U)?;
    let xi = Ring::xi_ring(n);
    let images: Vec<Polynomial> = (0..=n)
        .map(|idx| {
            let k = n - idx;
            Polynomial::var_index(&xi, idx).scale(&Rational::from_integer(binomial(n, k)))
        })
        .collect();
    u.substitute_indexed(&xi, &images)
}

/// `xi_k -> U_k / C(n,k)`.
pub fn bridge_from_xi(x: &Polynomial, n: usize) -> Result<Polynomial> {
    require_u_ring(x, n, Variable::Xi)?;
    let uring = Ring::u_ring(n);
    let images: Vec<Polynomial> = (0..=n)
        .map(|idx| {
            let k = n - idx;
            Polynomial::var_index(&uring, idx).scale(&Rational::new(BigInt::one(), binomial(n, k)))
        })
        .collect();
    x.substitute_indexed(&uring, &images)
}

/// Generators of the invariants of binary forms of degree `n` in the
/// coefficients `xi_k` of `sum C(n,k) xi_k x^k y^(n-k)`.
pub fn binary_form_invariants_xi(n: usize) -> Result<Vec<Polynomial>> {
    let sources: &[&str] = match n {
        2 => &["xi1^2 - xi0*xi2"],
        3 => &["3*xi1^2*xi2^2 - 4*xi0*xi2^3 - 4*xi1^3*xi3 + 6*xi0*xi1*xi2*xi3 - xi0^2*xi3^2"],
        4 => &[
            "3*xi2^2 - 4*xi1*xi3 + xi0*xi4",
            "xi2^3 + xi0*xi3^2 + xi1^2*xi4 - 2*xi1*xi2*xi3 - xi0*xi2*xi4",
        ],
        _ => return Err(Error::NotTabulated(n)),
    };
    let ring = Ring::xi_ring(n);
    sources
        .iter()
        .map(|s| Polynomial::parse(&ring, s))
        .collect()
}

/// Generators of the invariant ring of `n x n x 2` tensors under
/// `SL(n) x SL(n)` that are also `SL(2)`-invariant, for `n = 2, 3, 4`, as
/// integer-normalized U-forms.
pub fn classical_invariants(n: usize) -> Result<Vec<Polynomial>> {
    binary_form_invariants_xi(n)?
        .iter()
        .map(|x| Ok(bridge_from_xi(x, n)?.integer_normalized()))
        .collect()
}

/// Whether a hyperdeterminant of boundary format `(l1, l2, l3)` exists.
pub fn hyperdet_exists(l1: usize, l2: usize, l3: usize) -> bool {
    l1 <= l2 + l3 && l2 <= l1 + l3 && l3 <= l1 + l2
}

/// U-form of the hyperdeterminant of format `(n-1, n-1, 1)` (tensors of
/// shape `n x n x 2`), up to a nonzero scalar, for `n = 2, 3, 4`.
pub fn hyperdet_nn1(n: usize) -> Result<Polynomial> {
    match n {
        2 | 3 => Ok(classical_invariants(n)?.remove(0)),
        4 => {
            let gens = classical_invariants(4)?;
            let (i2, i3) = (&gens[0], &gens[1]);
            let four = Rational::from_integer(4.into());
            Ok((i2.pow(3).scale(&four) - i3.pow(2)).integer_normalized())
        }
        _ => Err(Error::NotTabulated(n)),
    }
}

/// Whether every monomial of `p` comes within one index of every triple:
/// for each monomial `g` and each `(j1, j2, j3)` some variable
/// `T[i1,i2,i3]` of `g` agrees with it in at least two positions.
pub fn support_divisibility_check(p: &Polynomial, m: usize, n: usize) -> Result<bool> {
    let t = IndeterminateTensor::with_ring(p.ring())?;
    if (t.m(), t.n()) != (m, n) {
        return Err(Error::Shape(format!(
            "polynomial is not over a {m}x{n}x2 tensor ring"
        )));
    }
    let nt = 2 * m * n;
    let triple = |idx: usize| (idx % m + 1, (idx / m) % n + 1, idx / (m * n) + 1);
    for mono in p.terms().keys() {
        let isupp: Vec<_> = mono.support().filter(|&i| i < nt).map(triple).collect();
        for j3 in 1..=2 {
            for j2 in 1..=n {
                for j1 in 1..=m {
                    let near = isupp
                        .iter()
                        .any(|&(a, b, c)| (a != j1) as u8 + (b != j2) as u8 + (c != j3) as u8 <= 1);
                    if !near {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Dense univariate polynomial over the rationals, lowest degree first, with
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let q = &r[top] / &lead;
            if !q.is_zero() {
                for (i, c) in d.0.iter().enumerate() {
                    let sub = &q * c;
                    r[top - dd + i] -= sub;
                }
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.0.last().cloned() {
            Some(lead) => UniPoly(a.0.iter().map(|c| c / &lead).collect()),
            None => a,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    /// The binary form `det(xX + yY)` has a repeated projective root.
    pub degenerate: bool,
    /// The binary form vanishes identically.
    pub identically_zero: bool,
}

/// Repeated-root test for the binary form `det(xX + yY)` of a square
/// tensor. With `f(x) = det(xX + Y)`, the point `(1 : 0)` is a root of
/// multiplicity `n - deg f`, and the affine roots are repeated iff
/// `gcd(f, f')` is nonconstant.
pub fn pencil_degenerate(t: &RatTensor) -> Result<Degeneracy> {
    let n = t.n();
    let f = UniPoly::new(pencil_values(t)?);
    let Some(deg) = f.degree() else {
        return Ok(Degeneracy {
            degenerate: true,
            identically_zero: true,
        });
    };
    let repeated = n - deg >= 2 || f.gcd(&f.derivative()).degree().unwrap_or(0) > 0;
    Ok(Degeneracy {
        degenerate: repeated,
        identically_zero: false,
    })
}

/// Coefficients of `x^k y^(n-k)` in `sum_j f_j (a x + b y)^j (c x + d y)^(n-j)`,
/// the image of the binary form with coefficients `f` under the substitution
/// `(x, y) -> (a x + b y, c x + d y)`. All inputs live in one ring.
pub fn binary_substitution(
    f: &[Polynomial],
    [a, b, c, d]: [&Polynomial; 4],
) -> Result<Vec<Polynomial>> {
    let n = f.len() - 1;
    let ring = a.ring();
    // coefficient lists in x of (a x + b y)^j and (c x + d y)^j
    let powers = |p: &Polynomial, q: &Polynomial| {
        let mut out: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(ring)]];
        for _ in 0..n {
            let prev = out.last().unwrap();
            let mut next = vec![Polynomial::zero(ring); prev.len() + 1];
            for (i, coeff) in prev.iter().enumerate() {
                next[i + 1] += &(coeff * p);
                next[i] += &(coeff * q);
            }
            out.push(next);
        }
        out
    };
    let ab = powers(a, b);
    let cd = powers(c, d);
    let mut out = vec![Polynomial::zero(ring); n + 1];
    for (j, fj) in f.iter().enumerate() {
        for (s, u) in ab[j].iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            let fu = fj.try_mul(u)?;
            for (r, v) in cd[n - j].iter().enumerate() {
                out[s + r].add_mul(&Rational::one(), &fu, v);
            }
        }
    }
    Ok(out)
}

/// Rank of the Jacobian matrix of `polys` at `point` (values for every ring
/// variable), by exact elimination.
pub fn jacobian_rank(polys: &[Polynomial], point: &[Rational]) -> usize {
    let nv = point.len();
    let rows = polys
        .iter()
        .map(|p| {
            (0..nv)
                .map(|v| p.derivative(v).evaluate_indexed(point))
                .collect()
        })
        .collect();
    crate::linalg::RatMatrix::from_rows(rows)
        .expect("rectangular")
        .rank()
}

/// A random U-form with at most `terms` terms of degree at most
/// `max_degree` and small integer coefficients.
pub fn random_u_form(n: usize, max_degree: u32, terms: usize, rng: &mut impl Rng) -> Polynomial {
    let ring = Ring::u_ring(n);
    let mut g = Polynomial::zero(&ring);
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; n + 1];
        for _ in 0..deg {
            exps[rng.gen_range(0..=n)] += 1;
        }
        let c: i64 = loop {
            let c = rng.gen_range(-5..=5);
            if c != 0 {
                break c;
            }
        };
        g.add_term(
            Monomial::from_dense(&exps),
            Rational::from_integer(c.into()),
        );
    }
    g
}

/// Sign-normalized comparison: `a == c * b` for some nonzero rational `c`.
pub fn proportional(a: &Polynomial, b: &Polynomial) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let an = a.integer_normalized();
    let bn = b.integer_normalized();
    an == bn || an == -&bn
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{check_invariance, GroupKind};
    use crate::polyring::{int, rat};

    fn u(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(&Ring::u_ring(n), s).unwrap()
    }

    #[test]
    fn subduct_generator_square() {
        let mut gens = Generators::new(2).unwrap();
        let p = gens.f(1).pow(2);
        let s = gens.subduct(&p).unwrap();
        assert_eq!(s.u, u(2, "U1^2"));
        assert!(s.remainder.is_zero());
    }

    #[test]
    fn subduct_det_x() {
        let t = IndeterminateTensor::new(3, 3);
        let det = crate::linalg::det_symbolic(&t.x()).unwrap();
        let s = subduct(&det, 3).unwrap();
        assert_eq!(s.u, u(3, "U3"));
        assert!(s.remainder.is_zero());
    }

    #[test]
    fn subduct_discriminant() {
        let mut gens = Generators::new(2).unwrap();
        let p = gens.f(1).pow(2) - gens.f(0) * &gens.f(2).scale(&int(4));
        let s = gens.subduct(&p).unwrap();
        assert_eq!(s.u, u(2, "U1^2 - 4*U0*U2"));
        assert!(s.remainder.is_zero());
    }

    #[test]
    fn subduct_coordinate_leaves_remainder() {
        let t = IndeterminateTensor::new(2, 2);
        let s = subduct(&t.var(1, 1, 1), 2).unwrap();
        assert!(!s.remainder.is_zero());
    }

    #[test]
    fn bridge_examples() {
        let x = Polynomial::parse(&Ring::xi_ring(2), "xi1^2 - xi0*xi2").unwrap();
        assert_eq!(bridge_from_xi(&x, 2).unwrap(), u(2, "1/4*U1^2 - U0*U2"));
        let x4 = &binary_form_invariants_xi(4).unwrap()[0];
        assert_eq!(
            bridge_from_xi(x4, 4).unwrap(),
            u(4, "(U2^2 - 3*U1*U3 + 12*U0*U4)/12")
        );
    }

    #[test]
    fn bridge_round_trip() {
        let mut rng = crate::action::sample_rng(9, 0);
        for n in 1..=4 {
            let g = random_u_form(n, 4, 6, &mut rng);
            assert_eq!(bridge_from_xi(&bridge_to_xi(&g, n).unwrap(), n).unwrap(), g);
        }
    }

    #[test]
    fn tabulated_invariants() {
        assert_eq!(
            classical_invariants(2).unwrap(),
            vec![u(2, "U1^2 - 4*U0*U2")]
        );
        assert_eq!(
            classical_invariants(3).unwrap(),
            vec![u(
                3,
                "U1^2*U2^2 - 4*U0*U2^3 - 4*U1^3*U3 + 18*U0*U1*U2*U3 - 27*U0^2*U3^2"
            )]
        );
        assert_eq!(
            classical_invariants(4).unwrap(),
            vec![
                u(4, "U2^2 - 3*U1*U3 + 12*U0*U4"),
                u(
                    4,
                    "2*U2^3 + 27*U0*U3^2 + 27*U1^2*U4 - 9*U1*U2*U3 - 72*U0*U2*U4"
                ),
            ]
        );
        assert!(matches!(
            classical_invariants(5),
            Err(Error::NotTabulated(5))
        ));
        assert!(matches!(hyperdet_nn1(5), Err(Error::NotTabulated(5))));
    }

    #[test]
    fn boundary_format_existence() {
        assert!(hyperdet_exists(1, 1, 1));
        assert!(!hyperdet_exists(1, 1, 3));
        for n in 2..20 {
            assert!(hyperdet_exists(n - 1, n - 1, 1));
        }
    }

    #[test]
    fn discriminant_is_invariant_as_u_form() {
        let f = UForm::new(classical_invariants(2).unwrap().remove(0), 2).unwrap();
        assert!(check_invariance(&f, GroupKind::SlSlSl, 25, 0)
            .unwrap()
            .is_pass());
    }

    #[test]
    fn uni_gcd() {
        // (x - 1)^2 (x + 2) and its derivative share x - 1
        let f = UniPoly::new(vec![int(2), int(-3), int(0), int(1)]);
        assert_eq!(f.gcd(&f.derivative()), UniPoly::new(vec![int(-1), int(1)]));
        let g = UniPoly::new(vec![int(-2), int(0), int(1)]);
        assert_eq!(g.gcd(&g.derivative()).degree(), Some(0));
        assert_eq!(UniPoly::new(vec![rat(0, 1)]).degree(), None);
    }

    #[test]
    fn degenerate_pencils() {
        let diag = |xs: &[i64], ys: &[i64]| {
            let x = crate::linalg::RatMatrix::diag(&xs.iter().map(|&v| int(v)).collect::<Vec<_>>());
            let y = crate::linalg::RatMatrix::diag(&ys.iter().map(|&v| int(v)).collect::<Vec<_>>());
            RatTensor::from_slices(&x, &y).unwrap()
        };
        let yes = pencil_degenerate(&diag(&[1, 1, 1, 1], &[1, 1, 2, 3])).unwrap();
        assert!(yes.degenerate && !yes.identically_zero);
        assert!(
            !pencil_degenerate(&diag(&[1, 1, 1, 1], &[1, 2, 3, 4]))
                .unwrap()
                .degenerate
        );
        // det(xI) = x^2: double root at y = 0
        assert!(
            pencil_degenerate(&diag(&[1, 1], &[0, 0]))
                .unwrap()
                .degenerate
        );
        // det(yI) = y^2: double root at infinity
        assert!(
            pencil_degenerate(&diag(&[0, 0], &[1, 1]))
                .unwrap()
                .degenerate
        );
        let zero = pencil_degenerate(&diag(&[0, 1], &[0, 2])).unwrap();
        assert!(zero.degenerate && zero.identically_zero);
    }

    #[test]
    fn pencil_values_are_pencil_coefficients() {
        let gens = Generators::new(3).unwrap();
        let mut rng = crate::action::sample_rng(4, 0);
        let t = crate::action::random_tensor(3, 3, &mut rng);
        let vals = pencil_values(&t).unwrap();
        for (k, v) in vals.iter().enumerate() {
            assert_eq!(*v, t.evaluate(gens.f(k)).unwrap());
        }
    }

    #[test]
    fn support_check_witnesses() {
        let t = IndeterminateTensor::new(2, 2);
        let det = crate::linalg::det_symbolic(&t.x()).unwrap();
        assert!(!support_divisibility_check(&det.pow(2), 2, 2).unwrap());
        assert!(!support_divisibility_check(&t.var(1, 1, 1).pow(3), 2, 2).unwrap());
        let cayley = substitute_u(&hyperdet_nn1(2).unwrap(), 2).unwrap();
        assert!(support_divisibility_check(&cayley, 2, 2).unwrap());
    }
}
