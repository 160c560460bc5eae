//! Congruences of finite semirings represented as partitions.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteSemiring;
use crate::error::{Error, Result};
use crate::ideals::{is_bi_ideal, is_ideal, ElementSubset};

/// Largest order for which [`all_congruences`] enumerates partitions.
pub const ALL_CONGRUENCES_MAX_ORDER: usize = 8;

/// An equivalence relation on `{0, .., n-1}`. `label[i]` is the smallest
/// element of the block containing `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    label: Vec<usize>,
}

impl Partition {
    pub fn identity(n: usize) -> Self {
        Partition {
            label: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Partition { label: vec![0; n] }
    }

    /// Builds the partition whose blocks are the fibres of `key`.
    pub fn from_keys<K: PartialEq>(keys: &[K]) -> Self {
        let label = (0..keys.len())
            .map(|i| (0..=i).find(|&j| keys[j] == keys[i]).unwrap_or(i))
            .collect();
        Partition { label }
    }

    /// Partition with `block` as its only non-singleton block.
    pub fn with_block(n: usize, block: &[usize]) -> Self {
        let mut label: Vec<usize> = (0..n).collect();
        if let Some(&min) = block.iter().min() {
            for &x in block {
                label[x] = min;
            }
        }
        Partition { label }
    }

    pub fn order(&self) -> usize {
        self.label.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.label
    }

    #[inline]
    pub fn label(&self, x: usize) -> usize {
        self.label[x]
    }

    #[inline]
    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.label[x] == self.label[y]
    }

    pub fn is_identity(&self) -> bool {
        self.label.iter().enumerate().all(|(i, &l)| i == l)
    }

    pub fn is_full(&self) -> bool {
        self.label.iter().all(|&l| l == 0)
    }

    pub fn num_blocks(&self) -> usize {
        self.label
            .iter()
            .enumerate()
            .filter(|&(i, &l)| i == l)
            .count()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (i, &l) in self.label.iter().enumerate() {
            if i == l {
                out.push(vec![i]);
            } else {
                let pos = out
                    .iter()
                    .position(|b| b[0] == l)
                    .expect("canonical labels");
                out[pos].push(i);
            }
        }
        out
    }

    /// True if every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.order() == other.order()
            && (0..self.order()).all(|i| other.same_block(i, self.label[i]))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined. Roots are always the smaller index.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        true
    }

    fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let label = (0..n).map(|i| self.find(i)).collect();
        Partition { label }
    }
}

fn check_order(s: &FiniteSemiring, p: &Partition) -> Result<()> {
    if p.order() != s.order() {
        return Err(Error::OrderMismatch {
            expected: s.order(),
            found: p.order(),
        });
    }
    Ok(())
}

pub fn is_congruence(s: &FiniteSemiring, p: &Partition) -> Result<bool> {
    check_order(s, p)?;
    Ok(compatible(s, p))
}

fn compatible(s: &FiniteSemiring, p: &Partition) -> bool {
    // Comparing each element with its block leader suffices by transitivity.
    s.elements().filter(|&x| p.label(x) != x).all(|x| {
        let y = p.label(x);
        s.elements().all(|c| {
            p.same_block(s.add(x, c), s.add(y, c))
                && p.same_block(s.mul(x, c), s.mul(y, c))
                && p.same_block(s.mul(c, x), s.mul(c, y))
        })
    })
}

/// The least congruence identifying `x` and `y`.
pub fn principal_congruence(s: &FiniteSemiring, x: usize, y: usize) -> Result<Partition> {
    let n = s.order();
    for e in [x, y] {
        if e >= n {
            return Err(Error::ElementOutOfRange {
                element: e,
                order: n,
            });
        }
    }
    let mut uf = UnionFind::new(n);
    let mut queue = VecDeque::from([(x, y)]);
    while let Some((u, v)) = queue.pop_front() {
        if !uf.union(u, v) {
            continue;
        }
        for c in s.elements() {
            queue.push_back((s.add(u, c), s.add(v, c)));
            queue.push_back((s.mul(u, c), s.mul(v, c)));
            queue.push_back((s.mul(c, u), s.mul(c, v)));
        }
    }
    Ok(uf.into_partition())
}

/// Every congruence of `s`, in restricted-growth-string order.
pub fn all_congruences(s: &FiniteSemiring) -> Result<Vec<Partition>> {
    let n = s.order();
    if n > ALL_CONGRUENCES_MAX_ORDER {
        return Err(Error::Capability {
            what: "all_congruences",
            bound: ALL_CONGRUENCES_MAX_ORDER,
            order: n,
        });
    }
    let mut out = Vec::new();
    for rgs in RestrictedGrowth::new(n) {
        // block ids follow first occurrence, so the first element of block b
        // is its smallest
        let mut first = vec![usize::MAX; n];
        let label = rgs
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                if first[b] == usize::MAX {
                    first[b] = i;
                }
                first[b]
            })
            .collect();
        let p = Partition { label };
        if compatible(s, &p) {
            out.push(p);
        }
    }
    Ok(out)
}

struct RestrictedGrowth {
    current: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    fn new(n: usize) -> Self {
        RestrictedGrowth {
            current: vec![0; n],
            done: n == 0,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let a = &mut self.current;
        let n = a.len();
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let max_prefix = a[..i].iter().copied().max().unwrap_or(0);
            if a[i] <= max_prefix {
                a[i] += 1;
                for v in &mut a[i + 1..] {
                    *v = 0;
                }
                break;
            }
        }
        Some(out)
    }
}

pub fn is_congruence_simple(s: &FiniteSemiring) -> bool {
    let n = s.order();
    n >= 2
        && (0..n).all(|x| {
            (x + 1..n).all(|y| {
                principal_congruence(s, x, y)
                    .map(|p| p.is_full())
                    .unwrap_or(false)
            })
        })
}

/// Turns a relation given as an `n*n` boolean matrix into a partition after
/// confirming it is a congruence.
fn congruence_from_relation(s: &FiniteSemiring, rel: &[bool], name: &str) -> Result<Partition> {
    let n = s.order();
    let r = |x: usize, y: usize| rel[x * n + y];
    for x in 0..n {
        if !r(x, x) {
            return Err(Error::Invariant(format!("{name} is not reflexive at {x}")));
        }
        for y in 0..n {
            if r(x, y) != r(y, x) {
                return Err(Error::Invariant(format!(
                    "{name} is not symmetric at ({x}, {y})"
                )));
            }
            for z in 0..n {
                if r(x, y) && r(y, z) && !r(x, z) {
                    return Err(Error::Invariant(format!(
                        "{name} is not transitive at ({x}, {y}, {z})"
                    )));
                }
            }
        }
    }
    let label = (0..n)
        .map(|x| (0..n).find(|&y| r(x, y)).unwrap_or(x))
        .collect();
    let p = Partition { label };
    if !compatible(s, &p) {
        return Err(Error::Invariant(format!("{name} is not a congruence")));
    }
    Ok(p)
}

/// `(x, y)` related iff `x + a = y + b` for some `a, b` in the ideal `i`.
pub fn alpha(s: &FiniteSemiring, ideal: &ElementSubset) -> Result<Partition> {
    if !is_ideal(s, ideal)? {
        return Err(Error::NotAnIdeal(format!(
            "{:?} is not an ideal",
            ideal.members()
        )));
    }
    let n = s.order();
    let shifts: Vec<Vec<bool>> = s
        .elements()
        .map(|x| {
            let mut set = vec![false; n];
            for &a in ideal.members() {
                set[s.add(x, a)] = true;
            }
            set
        })
        .collect();
    let rel: Vec<bool> = (0..n * n)
        .map(|k| {
            let (x, y) = (k / n, k % n);
            (0..n).any(|e| shifts[x][e] && shifts[y][e])
        })
        .collect();
    congruence_from_relation(s, &rel, "alpha")
}

/// `(J x J) ∪ id` for a bi-ideal `J`.
pub fn beta(s: &FiniteSemiring, bi_ideal: &ElementSubset) -> Result<Partition> {
    if !is_bi_ideal(s, bi_ideal)? {
        return Err(Error::NotAnIdeal(format!(
            "{:?} is not a bi-ideal",
            bi_ideal.members()
        )));
    }
    let p = Partition::with_block(s.order(), bi_ideal.members());
    if !compatible(s, &p) {
        return Err(Error::Invariant("beta is not a congruence".into()));
    }
    Ok(p)
}

/// Kernel of `x -> kx`.
pub fn gamma(s: &FiniteSemiring, k: usize) -> Result<Partition> {
    if k == 0 {
        return Err(Error::Precondition("gamma needs k >= 1".into()));
    }
    let multiples: Vec<usize> = s.elements().map(|x| s.n_multiple(x, k)).collect();
    Ok(Partition::from_keys(&multiples))
}

/// `(x, y)` related iff for a common `i >= 0`, `2^i x ∈ y + S` and
/// `2^i y ∈ x + S`.
pub fn delta(s: &FiniteSemiring) -> Result<Partition> {
    let n = s.order();
    // translates[y][e]: e ∈ y + S
    let translates: Vec<Vec<bool>> = s
        .elements()
        .map(|y| {
            let mut set = vec![false; n];
            for u in s.elements() {
                set[s.add(y, u)] = true;
            }
            set
        })
        .collect();
    let mut rel = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let (mut px, mut py) = (x, y);
            // (2^i x, 2^i y) walks through at most n^2 states
            for _ in 0..=n * n {
                if translates[y][px] && translates[x][py] {
                    rel[x * n + y] = true;
                    break;
                }
                px = s.add(px, px);
                py = s.add(py, py);
            }
        }
    }
    congruence_from_relation(s, &rel, "delta")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_product, two_element, v_of, FiniteSemigroup};

    fn t(k: usize) -> FiniteSemiring {
        two_element(k).unwrap()
    }

    fn vz2() -> FiniteSemiring {
        v_of(&FiniteSemigroup::cyclic_group(2)).unwrap()
    }

    fn subset(s: &FiniteSemiring, m: &[usize]) -> ElementSubset {
        ElementSubset::new(s.order(), m.iter().copied()).unwrap()
    }

    #[test]
    fn restricted_growth_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            assert_eq!(RestrictedGrowth::new(n).count(), b, "n = {n}");
        }
    }

    #[test]
    fn trivial_partitions_are_congruences() {
        let s = t(4);
        assert!(is_congruence(&s, &Partition::identity(2)).unwrap());
        assert!(is_congruence(&s, &Partition::full(2)).unwrap());
        assert!(is_congruence(&t(2), &Partition::full(2)).unwrap());
    }

    #[test]
    fn merging_group_elements_of_vz2_is_not_a_congruence() {
        // elements 0, 1 are the group, 2 is o
        let p = Partition::with_block(3, &[0, 1]);
        assert!(!is_congruence(&vz2(), &p).unwrap());
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(
            is_congruence(&t(4), &Partition::identity(3)),
            Err(Error::OrderMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn principal_congruences() {
        let s = t(4);
        assert!(principal_congruence(&s, 1, 1).unwrap().is_identity());
        assert!(principal_congruence(&s, 0, 1).unwrap().is_full());
        assert!(principal_congruence(&vz2(), 0, 1).unwrap().is_full());
    }

    #[test]
    fn congruence_counts() {
        assert_eq!(
            all_congruences(&FiniteSemiring::trivial()).unwrap().len(),
            1
        );
        assert_eq!(all_congruences(&t(8)).unwrap().len(), 2);
        assert_eq!(all_congruences(&vz2()).unwrap().len(), 2);
    }

    #[test]
    fn all_congruences_bound() {
        let big = direct_product(&direct_product(&t(4), &t(4)), &vz2());
        assert_eq!(big.order(), 12);
        assert!(matches!(
            all_congruences(&big),
            Err(Error::Capability { bound: 8, .. })
        ));
    }

    #[test]
    fn simplicity() {
        for k in 1..=8 {
            assert!(is_congruence_simple(&t(k)), "T{k}");
        }
        assert!(!is_congruence_simple(&direct_product(&t(4), &t(4))));
        assert!(!is_congruence_simple(&FiniteSemiring::trivial()));
    }

    #[test]
    fn alpha_examples() {
        let s = t(4);
        assert!(alpha(&s, &subset(&s, &[0])).unwrap().is_identity());
        assert!(alpha(&t(8), &subset(&t(8), &[0])).unwrap().is_full());
        assert!(alpha(&s, &subset(&s, &[0, 1])).unwrap().is_full());
        assert!(matches!(
            alpha(&s, &subset(&s, &[1])),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn beta_examples() {
        let s = t(8);
        assert!(beta(&s, &subset(&s, &[0])).unwrap().is_identity());
        assert!(beta(&s, &subset(&s, &[0, 1])).unwrap().is_full());
        let v = vz2();
        assert!(beta(&v, &subset(&v, &[2])).unwrap().is_identity());
        // {0} is an ideal of T4 but not a bi-ideal (0 + 1 = 1)
        assert!(matches!(
            beta(&t(4), &subset(&t(4), &[0])),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma(&t(4), 1).unwrap().is_identity());
        assert!(gamma(&t(8), 2).unwrap().is_full());
        assert!(gamma(&t(4), 2).unwrap().is_identity());
        assert!(gamma(&t(4), 0).is_err());
    }

    #[test]
    fn delta_examples() {
        assert!(delta(&t(4)).unwrap().is_identity());
        assert!(delta(&t(8)).unwrap().is_full());
        assert!(delta(&t(2)).unwrap().is_full());
    }

    #[test]
    fn partition_blocks_and_refinement() {
        let p = Partition::from_keys(&['a', 'b', 'a', 'c', 'b']);
        assert_eq!(p.labels(), &[0, 1, 0, 3, 1]);
        assert_eq!(p.blocks(), vec![vec![0, 2], vec![1, 4], vec![3]]);
        assert_eq!(p.num_blocks(), 3);
        assert!(Partition::identity(5).refines(&p));
        assert!(p.refines(&Partition::full(5)));
        assert!(!Partition::full(5).refines(&p));
    }
}
