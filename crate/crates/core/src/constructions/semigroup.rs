use serde::{Deserialize, Serialize};

use crate::algebra::FiniteSemiring;
use crate::error::{Error, Result};
use crate::table::Table;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteSemigroup {
    op: Table,
}

impl FiniteSemigroup {
    pub fn new(op: Table) -> Result<Self> {
        if let Some((x, y, z)) = op.first_non_associative() {
            return Err(Error::NotASemiring {
                axiom: "associativity".into(),
                witness: vec![x, y, z],
            });
        }
        Ok(FiniteSemigroup { op })
    }

    pub fn cyclic_group(n: usize) -> Self {
        let op = Table::from_fn(n, |x, y| (x + y) % n).expect("in range");
        FiniteSemigroup { op }
    }

    /// `xy = x`.
    pub fn left_zero(n: usize) -> Self {
        let op = Table::from_fn(n, |x, _| x).expect("in range");
        FiniteSemigroup { op }
    }

    /// `(a, b)` has index `a * |H| + b`.
    pub fn product(&self, other: &FiniteSemigroup) -> Self {
        let m = other.order();
        let op = Table::from_fn(self.order() * m, |i, j| {
            self.op(i / m, j / m) * m + other.op(i % m, j % m)
        })
        .expect("in range");
        FiniteSemigroup { op }
    }

    pub fn order(&self) -> usize {
        self.op.order()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op.get(x, y)
    }

    pub fn table(&self) -> &Table {
        &self.op
    }

    pub fn is_commutative(&self) -> bool {
        self.op.is_commutative()
    }

    pub fn is_cancellative(&self) -> bool {
        let n = self.order();
        (0..n).all(|c| {
            let mut left = vec![false; n];
            let mut right = vec![false; n];
            (0..n).all(|x| {
                !std::mem::replace(&mut left[self.op(x, c)], true)
                    && !std::mem::replace(&mut right[self.op(c, x)], true)
            })
        })
    }

    /// `GaG = G` for every `a`.
    pub fn is_simple(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            let mut hit = vec![false; n];
            for g in 0..n {
                let ga = self.op(g, a);
                for h in 0..n {
                    hit[self.op(ga, h)] = true;
                }
            }
            hit.into_iter().all(|b| b)
        })
    }

    pub fn identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|x| self.op(e, x) == x && self.op(x, e) == x))
    }

    pub fn is_group(&self) -> bool {
        let n = self.order();
        self.is_cancellative()
            && self.identity().is_some_and(|e| {
                (0..n).all(|x| (0..n).any(|y| self.op(x, y) == e && self.op(y, x) == e))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupPredicates {
    pub cancellative: bool,
    pub simple: bool,
    pub group: bool,
}

pub fn semigroup_predicates(g: &FiniteSemigroup) -> SemigroupPredicates {
    SemigroupPredicates {
        cancellative: g.is_cancellative(),
        simple: g.is_simple(),
        group: g.is_group(),
    }
}

/// `G ∪ {o}` with `x + x = x`, `x + y = o` for `x != y` and `o` absorbing
/// for multiplication. `o` gets index `|G|`.
pub fn v_of(g: &FiniteSemigroup) -> Result<FiniteSemiring> {
    if !g.is_cancellative() {
        return Err(Error::Precondition("V(G) needs a cancellative G".into()));
    }
    let o = g.order();
    let add = Table::from_fn(o + 1, |x, y| if x == y { x } else { o })?;
    let mul = Table::from_fn(o + 1, |x, y| if x < o && y < o { g.op(x, y) } else { o })?;
    FiniteSemiring::new(add, mul)
}
