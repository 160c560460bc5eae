//! Concrete semirings: the two-element fixtures, `V(G)`, products,
//! quotients, the box product and `End₁(L)`.

mod semigroup;
mod semilattice;

pub use semigroup::{semigroup_predicates, v_of, FiniteSemigroup, SemigroupPredicates};
pub use semilattice::{
    end1, g_of, subsemiring, subsemiring_generated, y_of, End1, FiniteSemilattice, Subsemiring,
    END1_MAX_ORDER,
};

use crate::algebra::FiniteSemiring;
use crate::congruence::{beta, is_congruence, Partition};
use crate::error::{Error, Result};
use crate::ideals::ElementSubset;
use crate::table::Table;

// a+a, a+b, b+a, b+b, a·a, a·b, b·a, b·b with a = 0, b = 1
const TWO_ELEMENT: [[usize; 8]; 8] = [
    [0, 1, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 1],
    [0, 1, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
];

/// The two-element semiring `T_k`, `k` in `1..=8`.
pub fn two_element(k: usize) -> Result<FiniteSemiring> {
    if !(1..=8).contains(&k) {
        return Err(Error::Precondition(format!(
            "two-element fixtures are numbered 1 to 8, got {k}"
        )));
    }
    let row = &TWO_ELEMENT[k - 1];
    let add = Table::from_cells(2, row[..4].to_vec())?;
    let mul = Table::from_cells(2, row[4..].to_vec())?;
    Ok(FiniteSemiring::from_tables_unchecked(add, mul))
}

/// Component-wise product; the pair `(x, y)` has index `x * |T| + y`.
pub fn direct_product(s: &FiniteSemiring, t: &FiniteSemiring) -> FiniteSemiring {
    let m = t.order();
    let split = |i: usize| (i / m, i % m);
    let order = s.order() * m;
    let add = Table::from_fn(order, |i, j| {
        let ((a, b), (c, d)) = (split(i), split(j));
        s.add(a, c) * m + t.add(b, d)
    })
    .expect("in range");
    let mul = Table::from_fn(order, |i, j| {
        let ((a, b), (c, d)) = (split(i), split(j));
        s.mul(a, c) * m + t.mul(b, d)
    })
    .expect("in range");
    FiniteSemiring::from_tables_unchecked(add, mul)
}

/// `S / p`. Blocks are numbered in increasing order of their smallest
/// element.
pub fn quotient(s: &FiniteSemiring, p: &Partition) -> Result<FiniteSemiring> {
    if !is_congruence(s, p)? {
        return Err(Error::NotACongruence);
    }
    let leaders: Vec<usize> = s.elements().filter(|&x| p.label(x) == x).collect();
    let mut index = vec![0; s.order()];
    for x in s.elements() {
        index[x] = leaders
            .binary_search(&p.label(x))
            .expect("label is a leader");
    }
    let k = leaders.len();
    let add = Table::from_fn(k, |i, j| index[s.add(leaders[i], leaders[j])])?;
    let mul = Table::from_fn(k, |i, j| index[s.mul(leaders[i], leaders[j])])?;
    Ok(FiniteSemiring::from_tables_unchecked(add, mul))
}

/// `(S × S') / β_I` where `I` holds the pairs with a bi-absorbing coordinate.
///
/// Pairs of non-absorbing elements keep row-major order; the collapsed class
/// is the last element.
pub fn box_product(s: &FiniteSemiring, t: &FiniteSemiring) -> Result<FiniteSemiring> {
    if s.order() < 2 || t.order() < 2 {
        return Err(Error::Precondition(
            "box product needs factors with at least two elements".into(),
        ));
    }
    let o = s
        .bi_absorbing()
        .ok_or_else(|| Error::NotApplicable("left factor has no bi-absorbing element".into()))?;
    let o2 = t
        .bi_absorbing()
        .ok_or_else(|| Error::NotApplicable("right factor has no bi-absorbing element".into()))?;
    let m = t.order();
    let product = direct_product(s, t);
    let collapsed = ElementSubset::new(
        product.order(),
        product.elements().filter(|&i| i / m == o || i % m == o2),
    )?;
    let p = beta(&product, &collapsed)?;
    let q = quotient(&product, &p)?;

    // quotient numbers blocks by leader; renumber to the documented order
    let leaders: Vec<usize> = product.elements().filter(|&x| p.label(x) == x).collect();
    let last = q.order() - 1;
    let mut perm = vec![0; q.order()];
    let mut next = 0;
    for (qi, &leader) in leaders.iter().enumerate() {
        if collapsed.contains(leader) {
            perm[qi] = last;
        } else {
            perm[qi] = next;
            next += 1;
        }
    }
    Ok(q.permuted(&perm))
}
