use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::order::OrderKind;
use crate::error::{Error, Result};

/// A named indeterminate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    /// Tensor entry `T[i,j,k]`, 1-based.
    T {
        i: usize,
        j: usize,
        k: usize,
    },
    /// Abstract generator `U{k}` standing for the k-th pencil coefficient.
    U(usize),
    /// Binary-form coefficient `xi{k}`.
    Xi(usize),
    Named(String),
}

impl Variable {
    pub fn t(i: usize, j: usize, k: usize) -> Self {
        Variable::T { i, j, k }
    }

    pub fn named(name: impl Into<String>) -> Self {
        Variable::Named(name.into())
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::T { i, j, k } => write!(f, "T[{i},{j},{k}]"),
            Variable::U(k) => write!(f, "U{k}"),
            Variable::Xi(k) => write!(f, "xi{k}"),
            Variable::Named(s) => f.write_str(s),
        }
    }
}

/// An ordered set of variables.
///
/// The position of a variable in the ring is its rank in the variable chain
/// of every monomial order over the ring: index 0 is the greatest variable.
#[derive(Debug)]
pub struct Ring {
    vars: Vec<Variable>,
    index: FxHashMap<Variable, u32>,
    default_order: OrderKind,
}

impl Ring {
    pub fn new(vars: Vec<Variable>, default_order: OrderKind) -> Result<Arc<Self>> {
        let mut index = FxHashMap::default();
        for (pos, v) in vars.iter().enumerate() {
            if index.insert(v.clone(), pos as u32).is_some() {
                return Err(Error::Shape(format!("duplicate variable `{v}` in ring")));
            }
        }
        Ok(Arc::new(Ring {
            vars,
            index,
            default_order,
        }))
    }

    /// Variables `T[i,j,k]` of an `m x n x 2` tensor, chained as
    /// `T111 > T211 > ... > Tm11 > T121 > ... > Tmn1 > T112 > ... > Tmn2`,
    /// followed by `extra` (smaller than every tensor variable).
    pub fn tensor_with(m: usize, n: usize, extra: &[&str]) -> Arc<Self> {
        let mut vars = tensor_chain(m, n);
        vars.extend(extra.iter().map(|s| Variable::named(*s)));
        Ring::new(vars, OrderKind::DegLex).expect("tensor chain has unique names")
    }

    pub fn tensor(m: usize, n: usize) -> Arc<Self> {
        Self::tensor_with(m, n, &[])
    }

    /// `U_n > U_{n-1} > ... > U_0` with degree reverse lexicographic order.
    pub fn u_ring(n: usize) -> Arc<Self> {
        let vars = (0..=n).rev().map(Variable::U).collect();
        Ring::new(vars, OrderKind::DegRevLex).expect("unique")
    }

    /// `xi_n > ... > xi_0` with degree reverse lexicographic order.
    pub fn xi_ring(n: usize) -> Arc<Self> {
        let vars = (0..=n).rev().map(Variable::Xi).collect();
        Ring::new(vars, OrderKind::DegRevLex).expect("unique")
    }

    pub fn named(names: &[&str]) -> Arc<Self> {
        let vars = names.iter().map(|s| Variable::named(*s)).collect();
        Ring::new(vars, OrderKind::DegLex).expect("names must be unique")
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var(&self, idx: usize) -> &Variable {
        &self.vars[idx]
    }

    pub fn index_of(&self, v: &Variable) -> Option<usize> {
        self.index.get(v).map(|&i| i as usize)
    }

    pub fn require(&self, v: &Variable) -> Result<usize> {
        self.index_of(v)
            .ok_or_else(|| Error::UnknownVariable(v.to_string()))
    }

    pub fn default_order(&self) -> OrderKind {
        self.default_order
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || self.vars == other.vars
    }

    /// If the ring contains exactly the tensor variables of some `m x n x 2`
    /// format as a prefix of its chain, return `(m, n)`.
    pub fn tensor_format(&self) -> Option<(usize, usize)> {
        let (mut m, mut n) = (0, 0);
        for v in &self.vars {
            if let Variable::T { i, j, .. } = v {
                m = m.max(*i);
                n = n.max(*j);
            }
        }
        if m == 0 || self.vars.len() < 2 * m * n {
            return None;
        }
        (tensor_chain(m, n)[..] == self.vars[..2 * m * n]).then_some((m, n))
    }
}

fn tensor_chain(m: usize, n: usize) -> Vec<Variable> {
    let mut vars = Vec::with_capacity(2 * m * n);
    for k in 1..=2 {
        for j in 1..=n {
            for i in 1..=m {
                vars.push(Variable::t(i, j, k));
            }
        }
    }
    vars
}

/// Position of `T[i,j,k]` in the tensor chain of an `m x n x 2` ring.
#[inline]
pub fn tensor_index(m: usize, n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!((1..=m).contains(&i) && (1..=n).contains(&j) && (1..=2).contains(&k));
    (k - 1) * m * n + (j - 1) * m + (i - 1)
}
