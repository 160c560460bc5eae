//! Decision procedure placing a congruence-simple, nilpotent-free semiring
//! with an absorbing element into the cases of the classification theorem
//! and the finite conjecture.

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteSemiring;
use crate::congruence::is_congruence_simple;
use crate::constructions::{two_element, FiniteSemigroup};
use crate::error::{Error, Result};
use crate::ideals::{ring_part, sums};
use crate::table::Table;

use super::canon::are_isomorphic;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseLabel {
    /// Isomorphic to `T4` or `T8`.
    T4OrT8,
    FiniteField {
        q: usize,
    },
    /// A ring without zero divisors that is not a field; only infinite
    /// examples exist.
    SimpleRingNoZeroDivisors,
    /// `w = o_S`, additively idempotent, no zero divisors.
    AddIdempotentBiAbsorbing,
    /// `w = o_S`, `S + S = S`, `2x = o_S` and no zero divisors; only
    /// infinite examples could exist.
    Case5Preconditions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjectureStatus {
    InListT4,
    InListT8,
    InListField {
        q: usize,
    },
    /// `V(G)`; `group` is the multiplication of `S \ {o}` in the order of
    /// the elements of `S`.
    InListVG {
        group: Table,
        abelian: bool,
    },
    Counterexample,
}

impl ConjectureStatus {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, ConjectureStatus::Counterexample)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub case_labels: Vec<CaseLabel>,
    pub conjecture_status: ConjectureStatus,
    pub notes: Vec<String>,
}

pub fn is_finite_field(s: &FiniteSemiring) -> bool {
    let Some(zero) = s.zero() else { return false };
    let Some(one) = s.mult_neutral() else {
        return false;
    };
    s.order() >= 2
        && one != zero
        && s.is_ring()
        && s.is_commutative()
        && s.elements()
            .filter(|&x| x != zero)
            .all(|x| s.elements().any(|y| s.mul(x, y) == one))
}

fn no_zero_divisors(s: &FiniteSemiring, w: usize) -> bool {
    s.elements()
        .filter(|&a| a != w)
        .all(|a| s.elements().filter(|&b| b != w).all(|b| s.mul(a, b) != w))
}

/// The group `G` when `s` has the shape of `V(G)`.
fn v_shape(s: &FiniteSemiring, o: usize) -> Option<FiniteSemigroup> {
    let shape = s.elements().all(|x| {
        s.elements()
            .all(|y| s.add(x, y) == if x == y { x } else { o })
    });
    if !shape || !no_zero_divisors(s, o) {
        return None;
    }
    let rest: Vec<usize> = s.elements().filter(|&x| x != o).collect();
    let pos = |x: usize| rest.iter().position(|&r| r == x).expect("closed");
    let table = Table::from_fn(rest.len(), |i, j| pos(s.mul(rest[i], rest[j]))).ok()?;
    let g = FiniteSemigroup::new(table).ok()?;
    g.is_group().then_some(g)
}

pub fn classify(s: &FiniteSemiring) -> Result<ClassificationVerdict> {
    let w = s
        .mult_absorbing()
        .ok_or_else(|| Error::Precondition("no multiplicatively absorbing element".into()))?;
    if s.has_nontrivial_nilpotent() {
        return Err(Error::Precondition(
            "has a non-trivial nilpotent element".into(),
        ));
    }
    if !is_congruence_simple(s) {
        return Err(Error::Precondition("not congruence-simple".into()));
    }

    let n = s.order();
    let mut labels = Vec::new();
    let mut notes = Vec::new();
    let fixture = |k| two_element(k).expect("fixture");
    let is_t4 = are_isomorphic(s, &fixture(4)).is_some();
    let is_t8 = are_isomorphic(s, &fixture(8)).is_some();
    let field = is_finite_field(s);
    let bi_absorbing = s.bi_absorbing() == Some(w);
    let zero_divisor_free = no_zero_divisors(s, w);

    if s.zero() != Some(w) && !bi_absorbing {
        notes.push(format!(
            "absorbing element {w} is neither a zero nor bi-absorbing"
        ));
    }
    if !zero_divisor_free {
        notes.push("has zero divisors".into());
    }

    if is_t4 || is_t8 {
        labels.push(CaseLabel::T4OrT8);
    }
    if field {
        labels.push(CaseLabel::FiniteField { q: n });
    }
    if s.is_ring() && !field && zero_divisor_free && ring_part(s)?.is_everything() {
        labels.push(CaseLabel::SimpleRingNoZeroDivisors);
        notes.push("finite ring without zero divisors that is not a field".into());
    }
    if bi_absorbing && s.is_add_idempotent() && zero_divisor_free {
        labels.push(CaseLabel::AddIdempotentBiAbsorbing);
    }
    if bi_absorbing
        && !s.is_add_idempotent()
        && sums(s).is_everything()
        && s.elements().all(|x| s.add(x, x) == w)
        && zero_divisor_free
    {
        labels.push(CaseLabel::Case5Preconditions);
        notes.push("finite instance of the fifth case, which can only be infinite".into());
    }
    if labels.is_empty() {
        notes.push("no case of the classification applies".into());
    }
    if labels.len() > 1 {
        notes.push(format!("{} case labels apply", labels.len()));
    }

    let status = if is_t4 {
        ConjectureStatus::InListT4
    } else if is_t8 {
        ConjectureStatus::InListT8
    } else if field {
        ConjectureStatus::InListField { q: n }
    } else if let Some(g) = bi_absorbing.then(|| v_shape(s, w)).flatten() {
        ConjectureStatus::InListVG {
            abelian: g.is_commutative(),
            group: g.table().clone(),
        }
    } else {
        ConjectureStatus::Counterexample
    };

    Ok(ClassificationVerdict {
        case_labels: labels,
        conjecture_status: status,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::v_of;

    fn t(k: usize) -> FiniteSemiring {
        two_element(k).unwrap()
    }

    #[test]
    fn field_of_two() {
        let v = classify(&t(2)).unwrap();
        assert_eq!(v.case_labels, vec![CaseLabel::FiniteField { q: 2 }]);
        assert_eq!(v.conjecture_status, ConjectureStatus::InListField { q: 2 });
    }

    #[test]
    fn t4_and_t8() {
        let v = classify(&t(4)).unwrap();
        assert_eq!(v.case_labels, vec![CaseLabel::T4OrT8]);
        assert_eq!(v.conjecture_status, ConjectureStatus::InListT4);
        let v = classify(&t(8)).unwrap();
        assert_eq!(v.case_labels, vec![CaseLabel::T4OrT8]);
        assert_eq!(v.conjecture_status, ConjectureStatus::InListT8);
    }

    #[test]
    fn t6_is_v_of_trivial_group() {
        let v = classify(&t(6)).unwrap();
        assert_eq!(v.case_labels, vec![CaseLabel::AddIdempotentBiAbsorbing]);
        assert!(matches!(
            v.conjecture_status,
            ConjectureStatus::InListVG { abelian: true, .. }
        ));
    }

    #[test]
    fn v_of_z2() {
        let s = v_of(&FiniteSemigroup::cyclic_group(2)).unwrap();
        let v = classify(&s).unwrap();
        assert_eq!(v.case_labels, vec![CaseLabel::AddIdempotentBiAbsorbing]);
        match v.conjecture_status {
            ConjectureStatus::InListVG { group, abelian } => {
                assert!(abelian);
                let g = FiniteSemigroup::new(group).unwrap();
                assert_eq!(g, FiniteSemigroup::cyclic_group(2));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(v.notes.is_empty());
    }

    #[test]
    fn hypotheses_are_checked() {
        assert!(matches!(classify(&t(1)), Err(Error::Precondition(m)) if m.contains("nilpotent")));
        assert!(matches!(classify(&t(7)), Err(Error::Precondition(_))));
        let p = crate::constructions::direct_product(&t(4), &t(4));
        assert!(matches!(classify(&p), Err(Error::Precondition(m)) if m.contains("simple")));
        let no_w = FiniteSemiring::from_rows(&[vec![0, 1], vec![1, 1]], &[vec![0, 0], vec![1, 1]])
            .unwrap();
        assert!(matches!(classify(&no_w), Err(Error::Precondition(m)) if m.contains("absorbing")));
    }
}
