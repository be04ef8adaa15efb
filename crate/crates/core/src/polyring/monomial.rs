use smallvec::SmallVec;

/// A power product stored as `(variable index, exponent)` pairs sorted by
/// variable index, with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pairs: SmallVec<[(u32, u32); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(idx: usize, exp: u32) -> Self {
        let mut m = Self::one();
        if exp > 0 {
            m.pairs.push((idx as u32, exp));
        }
        m
    }

    /// Builds a monomial from `(index, exponent)` pairs in any order; repeated
    /// indices are merged and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(i, e)| (i as u32, e))
            .collect();
        v.sort_unstable_by_key(|p| p.0);
        let mut pairs: SmallVec<[(u32, u32); 6]> = SmallVec::new();
        for (i, e) in v {
            match pairs.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => pairs.push((i, e)),
            }
        }
        Monomial { pairs }
    }

    /// Dense exponent vector of length `nvars`.
    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i, e)))
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars];
        for &(i, e) in &self.pairs {
            out[i as usize] = e;
        }
        out
    }

    pub fn pairs(&self) -> impl DoubleEndedIterator<Item = (usize, u32)> + ExactSizeIterator + '_ {
        self.pairs.iter().map(|&(i, e)| (i as usize, e))
    }

    pub(crate) fn raw(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.pairs
            .binary_search_by_key(&(idx as u32), |p| p.0)
            .map(|pos| self.pairs[pos].1)
            .unwrap_or(0)
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.0 as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.pairs, &other.pairs);
        let mut out: SmallVec<[(u32, u32); 6]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            let (ia, ea) = a[x];
            let (ib, eb) = b[y];
            if ia == ib {
                out.push((ia, ea.checked_add(eb).expect("exponent overflow")));
                x += 1;
                y += 1;
            } else if ia < ib {
                out.push(a[x]);
                x += 1;
            } else {
                out.push(b[y]);
                y += 1;
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        Monomial { pairs: out }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            pairs: self.pairs.iter().map(|&(i, x)| (i, x * e)).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.pairs
            .iter()
            .all(|&(i, e)| other.exponent(i as usize) >= e)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let pairs = self
            .pairs
            .iter()
            .filter_map(|&(i, e)| {
                let r = e - other.exponent(i as usize);
                (r > 0).then_some((i, r))
            })
            .collect();
        Some(Monomial { pairs })
    }

    /// Removes one factor of variable `idx`; returns the exponent it had.
    pub(crate) fn lower(&self, idx: usize) -> Option<(u32, Monomial)> {
        let pos = self
            .pairs
            .binary_search_by_key(&(idx as u32), |p| p.0)
            .ok()?;
        let e = self.pairs[pos].1;
        let mut pairs = self.pairs.clone();
        if e == 1 {
            pairs.remove(pos);
        } else {
            pairs[pos].1 -= 1;
        }
        Some((e, Monomial { pairs }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_merges_pairs() {
        let a = Monomial::from_pairs([(0, 1), (3, 2)]);
        let b = Monomial::from_pairs([(3, 1), (1, 4)]);
        let c = a.mul(&b);
        assert_eq!(c.to_dense(4), vec![1, 4, 0, 3]);
        assert_eq!(c.degree(), 8);
        assert_eq!(c.div(&a), Some(b.clone()));
        assert_eq!(a.div(&b), None);
    }

    #[test]
    fn zero_exponents_are_dropped() {
        let a = Monomial::from_dense(&[0, 2, 0]);
        assert_eq!(a.raw(), &[(1, 2)]);
        assert!(Monomial::var(5, 0).is_one());
        assert_eq!(a.pow(0), Monomial::one());
    }

    #[test]
    fn lower_removes_one_factor() {
        let a = Monomial::from_dense(&[1, 2]);
        assert_eq!(a.lower(1), Some((2, Monomial::from_dense(&[1, 1]))));
        assert_eq!(a.lower(0), Some((1, Monomial::from_dense(&[0, 2]))));
        assert_eq!(a.lower(2), None);
    }
}
