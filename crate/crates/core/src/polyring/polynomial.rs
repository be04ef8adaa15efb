use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::ring::{Ring, Variable};
use super::Rational;
use crate::error::{Error, Result};

/// A polynomial with exact rational coefficients over a [`Ring`].
///
/// Terms with zero coefficient are never stored, so two polynomials over the
/// same ring are equal iff their term maps are equal.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: FxHashMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: FxHashMap::default(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::term(ring, c, Monomial::one())
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(c.into()))
    }

    pub fn term(ring: &Arc<Ring>, c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var_index(ring: &Arc<Ring>, idx: usize) -> Self {
        assert!(idx < ring.len(), "variable index {idx} out of range");
        Self::term(ring, Rational::one(), Monomial::var(idx, 1))
    }

    pub fn var(ring: &Arc<Ring>, v: &Variable) -> Result<Self> {
        Ok(Self::var_index(ring, ring.require(v)?))
    }

    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &FxHashMap<Monomial, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> FxHashMap<Monomial, Rational> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant()
            .then(|| self.coefficient(&Monomial::one()))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let (outer, inner) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Polynomial::zero(&self.ring);
        out.terms.reserve(
            outer
                .terms
                .len()
                .saturating_mul(inner.terms.len())
                .min(1 << 20),
        );
        for (ma, ca) in &outer.terms {
            for (mb, cb) in &inner.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rational, mono: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.mul(mono), x * c))
                .collect(),
        }
    }

    /// Adds `c * mono * other` in place.
    pub fn add_scaled_product(&mut self, c: &Rational, mono: &Monomial, other: &Polynomial) {
        debug_assert!(self.ring.same_as(&other.ring));
        for (m, x) in &other.terms {
            self.add_term(m.mul(mono), x * c);
        }
    }

    /// `self += c * a * b`.
    pub fn add_mul(&mut self, c: &Rational, a: &Polynomial, b: &Polynomial) {
        debug_assert!(self.ring.same_as(&a.ring) && self.ring.same_as(&b.ring));
        for (ma, ca) in &a.terms {
            let cc = ca * c;
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), &cc * cb);
            }
        }
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Degree in the subset of variables selected by `pick`, for every term.
    pub fn partial_degrees(&self, pick: impl Fn(usize) -> bool) -> Vec<u32> {
        self.terms
            .keys()
            .map(|m| m.pairs().filter(|&(i, _)| pick(i)).map(|(_, e)| e).sum())
            .collect()
    }

    /// Indices of all variables occurring in the polynomial, ascending.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.len()];
        for m in self.terms.keys() {
            for i in m.support() {
                seen[i] = true;
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    pub fn derivative(&self, idx: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.lower(idx) {
                out.add_term(lowered, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// The order-maximal term.
    pub fn leading_term_in(&self, order: &MonomialOrder) -> Result<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading term under the ring's default order.
    pub fn leading_term(&self) -> Result<(&Monomial, &Rational)> {
        self.leading_term_in(&MonomialOrder::new(self.ring.default_order()))
    }

    pub fn leading_monomial(&self) -> Result<Monomial> {
        self.leading_term().map(|(m, _)| m.clone())
    }

    /// Terms sorted descending by `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    /// Scales to coprime integer coefficients with a positive leading
    /// coefficient under the ring's default order.
    pub fn integer_normalized(&self) -> Polynomial {
        let Ok((_, lc)) = self.leading_term() else {
            return self.clone();
        };
        let sign = if lc.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let den_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self.terms.values().fold(BigInt::zero(), |acc, c| {
            acc.gcd(&(c.numer() * &den_lcm / c.denom()))
        });
        self.scale(&Rational::new(sign * den_lcm, num_gcd))
    }

    /// Replaces variable `i` by `images[i]`; all images must share one ring.
    pub fn substitute_indexed(
        &self,
        target: &Arc<Ring>,
        images: &[Polynomial],
    ) -> Result<Polynomial> {
        assert_eq!(images.len(), self.ring.len(), "one image per variable");
        for img in images {
            if !img.ring.same_as(target) {
                return Err(Error::RingMismatch);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(target, c.clone());
            for (i, e) in m.pairs() {
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(images[i].clone());
                }
                while cache.len() < e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[i]);
                    cache.push(next);
                }
                acc = acc.mul_unchecked(&cache[e as usize - 1]);
            }
            for (mm, cc) in acc.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Substitution by a variable map. Every variable occurring in `self`
    /// must be mapped.
    pub fn substitute(
        &self,
        target: &Arc<Ring>,
        map: &FxHashMap<Variable, Polynomial>,
    ) -> Result<Polynomial> {
        let used = self.variables();
        let mut images = vec![Polynomial::zero(target); self.ring.len()];
        for i in used {
            let v = self.ring.var(i);
            images[i] = map
                .get(v)
                .cloned()
                .ok_or_else(|| Error::UnmappedVariable(v.to_string()))?;
        }
        self.substitute_indexed(target, &images)
    }

    /// Evaluates with `values[i]` assigned to variable `i`.
    pub fn evaluate_indexed(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.ring.len(), "one value per variable");
        let mut powers: Vec<Vec<Rational>> = vec![Vec::new(); values.len()];
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.pairs() {
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(values[i].clone());
                }
                while cache.len() < e as usize {
                    let next = cache.last().unwrap() * &values[i];
                    cache.push(next);
                }
                t *= &cache[e as usize - 1];
            }
            total += t;
        }
        total
    }

    pub fn evaluate(&self, point: &FxHashMap<Variable, Rational>) -> Result<Rational> {
        let mut values = vec![Rational::zero(); self.ring.len()];
        for i in self.variables() {
            let v = self.ring.var(i);
            values[i] = point
                .get(v)
                .cloned()
                .ok_or_else(|| Error::MissingAssignment(v.to_string()))?;
        }
        Ok(self.evaluate_indexed(&values))
    }

    /// The same polynomial read in `target`, mapping variables by identity.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let map: Vec<usize> = (0..self.ring.len())
            .map(|i| target.require(self.ring.var(i)))
            .collect::<Result<_>>()?;
        Ok(Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial::from_pairs(m.pairs().map(|(i, e)| (map[i], e))),
                        c.clone(),
                    )
                })
                .collect(),
        })
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live over different rings.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("operands over different rings")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::AddAssign<&Polynomial> for Polynomial {
    /// Panics when the operands live over different rings.
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert!(
            self.ring.same_as(&rhs.ring),
            "operands over different rings"
        );
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert!(
            self.ring.same_as(&rhs.ring),
            "operands over different rings"
        );
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
