//! Finite semirings given by operation tables, axiom verification and
//! element-level predicates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::Table;

pub const ADD_COMMUTATIVITY: &str = "add-commutativity";
pub const ADD_ASSOCIATIVITY: &str = "add-associativity";
pub const MUL_ASSOCIATIVITY: &str = "mul-associativity";
pub const LEFT_DISTRIBUTIVITY: &str = "left-distributivity";
pub const RIGHT_DISTRIBUTIVITY: &str = "right-distributivity";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Checks the semiring axioms on a pair of tables.
///
/// Every failing axiom is reported once, with the lexicographically first
/// witness. Commutativity is scanned over the cells below the diagonal, so
/// its witness `(x, y)` always has `x > y`. Malformed input (different
/// orders) is an error, not a violation.
pub fn verify_semiring(add: &Table, mul: &Table) -> Result<AxiomReport> {
    if add.order() != mul.order() {
        return Err(Error::MalformedTable(format!(
            "add has order {} but mul has order {}",
            add.order(),
            mul.order()
        )));
    }
    let n = add.order();
    let mut violations = Vec::new();
    if let Some((x, y)) = add.first_non_commuting() {
        violations.push(Violation {
            axiom: ADD_COMMUTATIVITY.into(),
            witness: vec![x, y],
        });
    }
    if let Some((x, y, z)) = add.first_non_associative() {
        violations.push(Violation {
            axiom: ADD_ASSOCIATIVITY.into(),
            witness: vec![x, y, z],
        });
    }
    if let Some((x, y, z)) = mul.first_non_associative() {
        violations.push(Violation {
            axiom: MUL_ASSOCIATIVITY.into(),
            witness: vec![x, y, z],
        });
    }
    let triples =
        || (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
    if let Some((x, y, z)) = triples()
        .find(|&(x, y, z)| mul.get(x, add.get(y, z)) != add.get(mul.get(x, y), mul.get(x, z)))
    {
        violations.push(Violation {
            axiom: LEFT_DISTRIBUTIVITY.into(),
            witness: vec![x, y, z],
        });
    }
    if let Some((x, y, z)) = triples()
        .find(|&(x, y, z)| mul.get(add.get(y, z), x) != add.get(mul.get(y, x), mul.get(z, x)))
    {
        violations.push(Violation {
            axiom: RIGHT_DISTRIBUTIVITY.into(),
            witness: vec![x, y, z],
        });
    }
    Ok(AxiomReport {
        ok: violations.is_empty(),
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteSemiring {
    add: Table,
    mul: Table,
}

impl FiniteSemiring {
    pub fn new(add: Table, mul: Table) -> Result<Self> {
        let report = verify_semiring(&add, &mul)?;
        if let Some(v) = report.violations.into_iter().next() {
            return Err(Error::NotASemiring {
                axiom: v.axiom,
                witness: v.witness,
            });
        }
        Ok(FiniteSemiring { add, mul })
    }

    pub fn from_rows(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        Self::new(Table::from_rows(add)?, Table::from_rows(mul)?)
    }

    /// Skips axiom verification; for tables already known to be a semiring.
    pub(crate) fn from_tables_unchecked(add: Table, mul: Table) -> Self {
        debug_assert!(verify_semiring(&add, &mul).map(|r| r.ok).unwrap_or(false));
        FiniteSemiring { add, mul }
    }

    pub fn trivial() -> Self {
        let t = Table::from_cells(1, vec![0]).expect("one-element table");
        FiniteSemiring {
            add: t.clone(),
            mul: t,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.add.order()
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    pub fn add_table(&self) -> &Table {
        &self.add
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn permuted(&self, perm: &[usize]) -> FiniteSemiring {
        FiniteSemiring {
            add: self.add.permuted(perm),
            mul: self.mul.permuted(perm),
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.mul.is_commutative()
    }

    /// `k`-fold sum `x + .. + x`.
    pub fn n_multiple(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "multiple of order zero");
        (1..k).fold(x, |acc, _| self.add(acc, x))
    }

    /// `k`-fold product `x .. x`.
    pub fn power(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "power of order zero");
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    pub fn mult_absorbing(&self) -> Option<usize> {
        self.elements().find(|&w| {
            self.elements()
                .all(|x| self.mul(x, w) == w && self.mul(w, x) == w)
        })
    }

    pub fn add_absorbing(&self) -> Option<usize> {
        self.elements()
            .find(|&w| self.elements().all(|x| self.add(x, w) == w))
    }

    pub fn mult_neutral(&self) -> Option<usize> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(x, e) == x && self.mul(e, x) == x)
        })
    }

    pub fn add_neutral(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.add(x, e) == x))
    }

    /// The bi-absorbing element `o_S`.
    pub fn bi_absorbing(&self) -> Option<usize> {
        match (self.mult_absorbing(), self.add_absorbing()) {
            (Some(w), Some(a)) if w == a => Some(w),
            _ => None,
        }
    }

    /// The zero `0_S`: multiplicatively absorbing and additively neutral.
    pub fn zero(&self) -> Option<usize> {
        match (self.mult_absorbing(), self.add_neutral()) {
            (Some(w), Some(e)) if w == e => Some(w),
            _ => None,
        }
    }

    pub fn is_add_idempotent(&self) -> bool {
        self.add.is_idempotent()
    }

    pub fn is_add_cancellative(&self) -> bool {
        let n = self.order();
        (0..n).all(|c| {
            let mut seen = vec![false; n];
            (0..n).all(|x| !std::mem::replace(&mut seen[self.add(x, c)], true))
        })
    }

    pub fn is_ring(&self) -> bool {
        match self.zero() {
            Some(z) => self
                .elements()
                .all(|x| self.elements().any(|y| self.add(x, y) == z)),
            None => false,
        }
    }

    /// Elements `x != w` with `x^k = w` for some `k`, or `None` when there is
    /// no multiplicatively absorbing `w`.
    pub fn nontrivial_nilpotents(&self) -> Option<Vec<usize>> {
        let w = self.mult_absorbing()?;
        Some(
            self.elements()
                .filter(|&x| x != w && self.reaches(x, w))
                .collect(),
        )
    }

    // The power sequence of x is eventually periodic with preperiod plus
    // period at most n, so x^k for k <= n covers every value it takes.
    fn reaches(&self, x: usize, w: usize) -> bool {
        let mut p = x;
        for _ in 0..self.order() {
            if p == w {
                return true;
            }
            p = self.mul(p, x);
        }
        p == w
    }

    /// False when there is no multiplicatively absorbing element.
    pub fn has_nontrivial_nilpotent(&self) -> bool {
        self.nontrivial_nilpotents().is_some_and(|v| !v.is_empty())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementReport {
    pub mult_absorbing: Option<usize>,
    pub add_absorbing: Option<usize>,
    pub bi_absorbing: Option<usize>,
    pub zero: Option<usize>,
    pub mult_neutral: Option<usize>,
    pub add_neutral: Option<usize>,
    /// Non-trivial nilpotents; `None` when there is no absorbing element.
    pub nilpotents: Option<Vec<usize>>,
    pub add_idempotent: bool,
    pub add_cancellative: bool,
    pub is_ring: bool,
}

pub fn element_report(s: &FiniteSemiring) -> ElementReport {
    ElementReport {
        mult_absorbing: s.mult_absorbing(),
        add_absorbing: s.add_absorbing(),
        bi_absorbing: s.bi_absorbing(),
        zero: s.zero(),
        mult_neutral: s.mult_neutral(),
        add_neutral: s.add_neutral(),
        nilpotents: s.nontrivial_nilpotents(),
        add_idempotent: s.is_add_idempotent(),
        add_cancellative: s.is_add_cancellative(),
        is_ring: s.is_ring(),
    }
}

pub fn has_nontrivial_nilpotent(s: &FiniteSemiring) -> bool {
    s.has_nontrivial_nilpotent()
}

pub fn n_multiple(s: &FiniteSemiring, x: usize, k: usize) -> usize {
    s.n_multiple(x, k)
}

pub fn power(s: &FiniteSemiring, x: usize, k: usize) -> usize {
    s.power(x, k)
}
