use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteSemiring;
use crate::error::{Error, Result};
use crate::ideals::ElementSubset;
use crate::table::Table;

/// Largest semilattice for which `End₁(L)` is enumerated.
pub const END1_MAX_ORDER: usize = 6;

/// A join semilattice with greatest element `top`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteSemilattice {
    join: Table,
    top: usize,
}

impl FiniteSemilattice {
    pub fn new(join: Table, top: usize) -> Result<Self> {
        let n = join.order();
        if top >= n {
            return Err(Error::ElementOutOfRange {
                element: top,
                order: n,
            });
        }
        if !join.is_idempotent() {
            return Err(Error::Precondition("join is not idempotent".into()));
        }
        if !join.is_commutative() {
            return Err(Error::Precondition("join is not commutative".into()));
        }
        if !join.is_associative() {
            return Err(Error::Precondition("join is not associative".into()));
        }
        if let Some(x) = (0..n).find(|&x| join.get(x, top) != top) {
            return Err(Error::Precondition(format!(
                "{top} is not the greatest element: {x} + {top} != {top}"
            )));
        }
        Ok(FiniteSemilattice { join, top })
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let join = Table::from_fn(n, |x, y| x.max(y)).expect("in range");
        FiniteSemilattice { join, top: n - 1 }
    }

    /// Bottom 0, atoms 1 and 2, top 3.
    pub fn diamond() -> Self {
        let join = Table::from_rows(&[
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ])
        .expect("in range");
        FiniteSemilattice { join, top: 3 }
    }

    pub fn order(&self) -> usize {
        self.join.order()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join.get(x, y)
    }

    pub fn table(&self) -> &Table {
        &self.join
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.join(x, y) == y
    }

    fn is_endomorphism(&self, map: &[usize]) -> bool {
        let n = self.order();
        map[self.top] == self.top
            && (0..n).all(|x| (0..n).all(|y| map[self.join(x, y)] == self.join(map[x], map[y])))
    }
}

/// `End₁(L)` with its maps. Maps are sorted lexicographically by their image
/// sequence and the semiring element `i` is `maps[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct End1 {
    pub lattice: FiniteSemilattice,
    pub maps: Vec<Vec<usize>>,
    pub semiring: FiniteSemiring,
    /// The constant map onto the top element.
    pub o: usize,
    pub identity: usize,
}

impl End1 {
    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.maps.binary_search_by(|m| m.as_slice().cmp(map)).ok()
    }
}

/// The endomorphisms of `l` fixing the top, under pointwise join and
/// composition (`(r·s)(x) = r(s(x))`).
pub fn end1(l: &FiniteSemilattice) -> Result<End1> {
    let n = l.order();
    if n < 2 {
        return Err(Error::Precondition("End1 needs |L| >= 2".into()));
    }
    if n > END1_MAX_ORDER {
        return Err(Error::Capability {
            what: "end1",
            bound: END1_MAX_ORDER,
            order: n,
        });
    }
    // odometer over L^L in lexicographic order
    let mut maps = Vec::new();
    let mut map = vec![0; n];
    'outer: loop {
        if l.is_endomorphism(&map) {
            maps.push(map.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < n {
                break;
            }
            map[i] = 0;
        }
    }
    let find = |m: &[usize]| {
        maps.binary_search_by(|c: &Vec<usize>| c.as_slice().cmp(m))
            .expect("End1 is closed")
    };
    let k = maps.len();
    let add = Table::from_fn(k, |r, s| {
        let m: Vec<usize> = (0..n).map(|x| l.join(maps[r][x], maps[s][x])).collect();
        find(&m)
    })?;
    let mul = Table::from_fn(k, |r, s| {
        let m: Vec<usize> = (0..n).map(|x| maps[r][maps[s][x]]).collect();
        find(&m)
    })?;
    let semiring = FiniteSemiring::new(add, mul)?;
    let o = find(&vec![l.top(); n]);
    let identity = find(&(0..n).collect::<Vec<_>>());
    Ok(End1 {
        lattice: l.clone(),
        maps,
        semiring,
        o,
        identity,
    })
}

/// Maps with at most two values.
pub fn y_of(e: &End1) -> ElementSubset {
    let members = e.maps.iter().enumerate().filter_map(|(i, m)| {
        let image: BTreeSet<usize> = m.iter().copied().collect();
        (image.len() <= 2).then_some(i)
    });
    ElementSubset::new(e.maps.len(), members).expect("in range")
}

/// Maps lying pointwise above some map with at most two values.
pub fn g_of(e: &End1) -> ElementSubset {
    let y = y_of(e);
    let l = &e.lattice;
    let members = e.maps.iter().enumerate().filter_map(|(i, f)| {
        y.members()
            .iter()
            .any(|&g| (0..l.order()).all(|x| l.leq(e.maps[g][x], f[x])))
            .then_some(i)
    });
    ElementSubset::new(e.maps.len(), members).expect("in range")
}

/// A subsemiring re-indexed to `0..k`; `elements[i]` is the original index of
/// element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsemiring {
    pub semiring: FiniteSemiring,
    pub elements: Vec<usize>,
}

/// Restricts `s` to a subset closed under both operations.
pub fn subsemiring(s: &FiniteSemiring, subset: &ElementSubset) -> Result<Subsemiring> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let elems = subset.members();
    let pos = |x: usize| elems.binary_search(&x).ok();
    let mut add = Vec::with_capacity(elems.len() * elems.len());
    let mut mul = Vec::with_capacity(elems.len() * elems.len());
    for &x in elems {
        for &y in elems {
            let (a, m) = (s.add(x, y), s.mul(x, y));
            match (pos(a), pos(m)) {
                (Some(a), Some(m)) => {
                    add.push(a);
                    mul.push(m);
                }
                _ => {
                    return Err(Error::Precondition(format!(
                        "subset is not closed: {x}, {y} leave it"
                    )))
                }
            }
        }
    }
    let k = elems.len();
    Ok(Subsemiring {
        semiring: FiniteSemiring::from_tables_unchecked(
            Table::from_cells(k, add)?,
            Table::from_cells(k, mul)?,
        ),
        elements: elems.to_vec(),
    })
}

/// Closure of `x` under `+` and `·`.
pub fn subsemiring_generated(s: &FiniteSemiring, x: &ElementSubset) -> Result<Subsemiring> {
    if x.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut inside = vec![false; s.order()];
    let mut members: Vec<usize> = x.members().to_vec();
    for &m in &members {
        inside[m] = true;
    }
    let mut done = 0;
    while done < members.len() {
        let a = members[done];
        done += 1;
        for i in 0..done {
            let b = members[i];
            for c in [s.add(a, b), s.mul(a, b), s.mul(b, a)] {
                if !inside[c] {
                    inside[c] = true;
                    members.push(c);
                }
            }
        }
    }
    subsemiring(s, &ElementSubset::new(s.order(), members)?)
}
