//! Ideals, bi-ideals, annihilators and the ring part of a semiring.

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteSemiring;
use crate::error::{Error, Result};

/// A sorted set of element indices of an algebra of a given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementSubset {
    order: usize,
    members: Vec<usize>,
}

impl ElementSubset {
    pub fn new(order: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&m| m >= order) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(ElementSubset { order, members })
    }

    pub fn all(order: usize) -> Self {
        ElementSubset {
            order,
            members: (0..order).collect(),
        }
    }

    fn from_mask(mask: &[bool]) -> Self {
        ElementSubset {
            order: mask.len(),
            members: (0..mask.len()).filter(|&i| mask[i]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_everything(&self) -> bool {
        self.members.len() == self.order
    }

    fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.order];
        for &x in &self.members {
            m[x] = true;
        }
        m
    }
}

fn check(s: &FiniteSemiring, i: &ElementSubset) -> Result<()> {
    if i.order() != s.order() {
        return Err(Error::OrderMismatch {
            expected: s.order(),
            found: i.order(),
        });
    }
    if i.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(())
}

fn left_closed(s: &FiniteSemiring, i: &ElementSubset) -> bool {
    i.members()
        .iter()
        .all(|&a| s.elements().all(|x| i.contains(s.mul(x, a))))
}

fn right_closed(s: &FiniteSemiring, i: &ElementSubset) -> bool {
    i.members()
        .iter()
        .all(|&a| s.elements().all(|x| i.contains(s.mul(a, x))))
}

fn sum_closed(s: &FiniteSemiring, i: &ElementSubset) -> bool {
    i.members()
        .iter()
        .all(|&a| i.members().iter().all(|&b| i.contains(s.add(a, b))))
}

fn translate_closed(s: &FiniteSemiring, i: &ElementSubset) -> bool {
    i.members()
        .iter()
        .all(|&a| s.elements().all(|x| i.contains(s.add(x, a))))
}

/// `I + I`, `SI` and `IS` all lie in `I`.
pub fn is_ideal(s: &FiniteSemiring, i: &ElementSubset) -> Result<bool> {
    check(s, i)?;
    Ok(sum_closed(s, i) && left_closed(s, i) && right_closed(s, i))
}

/// `S + I`, `SI` and `IS` all lie in `I`.
pub fn is_bi_ideal(s: &FiniteSemiring, i: &ElementSubset) -> Result<bool> {
    check(s, i)?;
    Ok(translate_closed(s, i) && left_closed(s, i) && right_closed(s, i))
}

pub fn is_left_ideal(s: &FiniteSemiring, i: &ElementSubset) -> Result<bool> {
    check(s, i)?;
    Ok(sum_closed(s, i) && left_closed(s, i))
}

pub fn is_right_ideal(s: &FiniteSemiring, i: &ElementSubset) -> Result<bool> {
    check(s, i)?;
    Ok(sum_closed(s, i) && right_closed(s, i))
}

fn closure(s: &FiniteSemiring, seed: &ElementSubset, bi: bool) -> Result<ElementSubset> {
    check(s, seed)?;
    let mut mask = seed.mask();
    let mut work: Vec<usize> = seed.members().to_vec();
    let push = |e: usize, mask: &mut Vec<bool>, work: &mut Vec<usize>| {
        if !mask[e] {
            mask[e] = true;
            work.push(e);
        }
    };
    while let Some(a) = work.pop() {
        for x in s.elements() {
            push(s.mul(x, a), &mut mask, &mut work);
            push(s.mul(a, x), &mut mask, &mut work);
            // ideals only need sums of members, bi-ideals absorb all of S
            if bi || mask[x] {
                push(s.add(x, a), &mut mask, &mut work);
            }
        }
    }
    Ok(ElementSubset::from_mask(&mask))
}

/// Least ideal containing `x`.
pub fn ideal_generated(s: &FiniteSemiring, x: &ElementSubset) -> Result<ElementSubset> {
    closure(s, x, false)
}

/// Least bi-ideal containing `x`.
pub fn bi_ideal_generated(s: &FiniteSemiring, x: &ElementSubset) -> Result<ElementSubset> {
    closure(s, x, true)
}

// Any (bi-)ideal with two or more elements contains the (bi-)ideal generated
// by one of its pairs.
fn pairs_generate_everything(s: &FiniteSemiring, bi: bool) -> bool {
    let n = s.order();
    n >= 2
        && (0..n).all(|x| {
            (x + 1..n).all(|y| {
                let pair = ElementSubset::new(n, [x, y]).expect("in range");
                closure(s, &pair, bi)
                    .map(|c| c.is_everything())
                    .unwrap_or(false)
            })
        })
}

pub fn is_ideal_simple(s: &FiniteSemiring) -> bool {
    pairs_generate_everything(s, false)
}

pub fn is_bi_ideal_simple(s: &FiniteSemiring) -> bool {
    pairs_generate_everything(s, true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annihilator {
    /// `{x : xa = w}`
    pub left: ElementSubset,
    /// `{x : ax = w}`
    pub right: ElementSubset,
}

/// One-sided annihilators of `a` relative to the multiplicatively absorbing
/// element.
pub fn annihilator(s: &FiniteSemiring, a: usize) -> Result<Annihilator> {
    if a >= s.order() {
        return Err(Error::ElementOutOfRange {
            element: a,
            order: s.order(),
        });
    }
    let w = s
        .mult_absorbing()
        .ok_or_else(|| Error::NotApplicable("no multiplicatively absorbing element".into()))?;
    let n = s.order();
    Ok(Annihilator {
        left: ElementSubset::new(n, s.elements().filter(|&x| s.mul(x, a) == w))?,
        right: ElementSubset::new(n, s.elements().filter(|&x| s.mul(a, x) == w))?,
    })
}

/// Elements with an additive complement to the zero: `{a : a + c = 0 for
/// some c}`.
///
/// The result is checked to be an ideal and to satisfy `a + b ∈ R ⇒ a, b ∈ R`
/// before it is returned.
pub fn ring_part(s: &FiniteSemiring) -> Result<ElementSubset> {
    let zero = s
        .zero()
        .ok_or_else(|| Error::NotApplicable("no zero element".into()))?;
    let r = ElementSubset::new(
        s.order(),
        s.elements()
            .filter(|&a| s.elements().any(|c| s.add(a, c) == zero)),
    )?;
    if !is_ideal(s, &r)? {
        return Err(Error::Invariant("ring part is not an ideal".into()));
    }
    for a in s.elements() {
        for b in s.elements() {
            if r.contains(s.add(a, b)) && !(r.contains(a) && r.contains(b)) {
                return Err(Error::Invariant(format!(
                    "{a} + {b} lies in the ring part but a summand does not"
                )));
            }
        }
    }
    Ok(r)
}

/// `S + x`.
pub fn translates(s: &FiniteSemiring, x: usize) -> ElementSubset {
    ElementSubset::new(s.order(), s.elements().map(|y| s.add(y, x))).expect("in range")
}

/// `S + S`.
pub fn sums(s: &FiniteSemiring) -> ElementSubset {
    ElementSubset::new(
        s.order(),
        s.elements()
            .flat_map(|x| s.elements().map(move |y| (x, y)))
            .map(|(x, y)| s.add(x, y)),
    )
    .expect("in range")
}
