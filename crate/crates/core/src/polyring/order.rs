use std::cmp::Ordering;
use std::sync::Arc;

use super::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Total degree, ties broken by the first variable of the chain whose
    /// exponents differ (larger exponent wins).
    DegLex,
    /// Total degree, ties broken by the last variable of the chain whose
    /// exponents differ (smaller exponent wins).
    DegRevLex,
}

/// A monomial order over an explicit variable chain.
///
/// Without a permutation, the chain is the ring's own variable sequence
/// (index 0 greatest). `with_chain` reorders it: `chain[r]` is the ring index
/// of the variable with rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    rank: Option<Arc<[u32]>>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind) -> Self {
        MonomialOrder { kind, rank: None }
    }

    pub fn deglex() -> Self {
        Self::new(OrderKind::DegLex)
    }

    pub fn degrevlex() -> Self {
        Self::new(OrderKind::DegRevLex)
    }

    /// Panics unless `chain` is a permutation of `0..chain.len()`.
    pub fn with_chain(kind: OrderKind, chain: &[usize]) -> Self {
        let mut rank = vec![u32::MAX; chain.len()];
        for (r, &idx) in chain.iter().enumerate() {
            assert!(rank[idx] == u32::MAX, "chain repeats variable {idx}");
            rank[idx] = r as u32;
        }
        MonomialOrder {
            kind,
            rank: Some(rank.into()),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_degree = a.degree().cmp(&b.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        match &self.rank {
            None => tie_break(self.kind, a.raw(), b.raw()),
            Some(rank) => {
                let relabel = |m: &Monomial| {
                    let mut v: Vec<(u32, u32)> = m
                        .raw()
                        .iter()
                        .map(|&(i, e)| (rank[i as usize], e))
                        .collect();
                    v.sort_unstable_by_key(|p| p.0);
                    v
                };
                tie_break(self.kind, &relabel(a), &relabel(b))
            }
        }
    }
}

fn tie_break(kind: OrderKind, a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    match kind {
        OrderKind::DegLex => {
            for (&(ia, ea), &(ib, eb)) in a.iter().zip(b) {
                if ia != ib {
                    // the monomial holding the earlier variable is larger
                    return ib.cmp(&ia);
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
            a.len().cmp(&b.len())
        }
        OrderKind::DegRevLex => {
            for (&(ia, ea), &(ib, eb)) in a.iter().rev().zip(b.iter().rev()) {
                if ia != ib {
                    // the monomial holding the later variable is smaller
                    return ib.cmp(&ia);
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
            }
            b.len().cmp(&a.len())
        }
    }
}
