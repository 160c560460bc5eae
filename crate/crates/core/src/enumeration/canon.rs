//! Canonical forms and isomorphism tests for operation tables.

use crate::algebra::FiniteSemiring;
use crate::error::{Error, Result};
use crate::table::Table;

/// Largest order accepted by [`canonical_form`] (it scans all `n!` labelings).
pub const CANONICAL_MAX_ORDER: usize = 7;

/// Steps `perm` to the next permutation in lexicographic order; false after
/// the last one.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Lexicographically least relabeling of the concatenated tables (each
/// flattened row-major, all of order `n`) and the permutation achieving it:
/// `result[perm[x]][perm[y]] = perm[t[x][y]]`.
pub(crate) fn min_relabeling(n: usize, tables: &[&[u8]]) -> (Vec<u8>, Vec<usize>) {
    let mut best: Vec<u8> = tables.concat();
    let mut best_perm: Vec<usize> = (0..n).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut inv = vec![0usize; n];
    let mut scratch = vec![0u8; best.len()];
    while next_permutation(&mut perm) {
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        // Compare entry by entry and stop at the first difference.
        let mut ordering = std::cmp::Ordering::Equal;
        let mut k = 0;
        'tables: for t in tables {
            for i in 0..n {
                for j in 0..n {
                    let v = perm[t[inv[i] * n + inv[j]] as usize] as u8;
                    scratch[k] = v;
                    if ordering == std::cmp::Ordering::Equal {
                        ordering = v.cmp(&best[k]);
                        if ordering == std::cmp::Ordering::Greater {
                            break 'tables;
                        }
                    }
                    k += 1;
                }
            }
        }
        if ordering == std::cmp::Ordering::Less {
            std::mem::swap(&mut best, &mut scratch);
            best_perm.copy_from_slice(&perm);
        }
    }
    (best, best_perm)
}

pub(crate) fn to_bytes(t: &Table) -> Vec<u8> {
    t.cells().iter().map(|&c| c as u8).collect()
}

pub(crate) fn semiring_from_bytes(n: usize, cells: &[u8]) -> FiniteSemiring {
    let add = Table::from_cells(n, cells[..n * n].iter().map(|&c| c as usize).collect())
        .expect("in range");
    let mul = Table::from_cells(n, cells[n * n..].iter().map(|&c| c as usize).collect())
        .expect("in range");
    FiniteSemiring::from_tables_unchecked(add, mul)
}

/// The isomorphic copy of `s` whose add table followed by its mul table is
/// lexicographically least.
pub fn canonical_form(s: &FiniteSemiring) -> Result<FiniteSemiring> {
    canonical_form_with_perm(s).map(|(c, _)| c)
}

/// Canonical form plus the relabeling `perm` with `s.permuted(perm)` equal to
/// it.
pub fn canonical_form_with_perm(s: &FiniteSemiring) -> Result<(FiniteSemiring, Vec<usize>)> {
    let n = s.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::Capability {
            what: "canonical_form",
            bound: CANONICAL_MAX_ORDER,
            order: n,
        });
    }
    let (add, mul) = (to_bytes(s.add_table()), to_bytes(s.mul_table()));
    let (cells, perm) = min_relabeling(n, &[&add, &mul]);
    Ok((semiring_from_bytes(n, &cells), perm))
}

/// Canonical form of a single operation table.
pub fn canonical_table(t: &Table) -> Result<Table> {
    let n = t.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::Capability {
            what: "canonical_table",
            bound: CANONICAL_MAX_ORDER,
            order: n,
        });
    }
    let (cells, _) = min_relabeling(n, &[&to_bytes(t)]);
    Table::from_cells(n, cells.into_iter().map(usize::from).collect())
}

/// A bijection `perm` with `s.permuted(perm) == t`, if there is one.
///
/// Backtracking search, independent of [`canonical_form`].
pub fn are_isomorphic(s: &FiniteSemiring, t: &FiniteSemiring) -> Option<Vec<usize>> {
    let n = s.order();
    if n != t.order() {
        return None;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_isomorphism(s, t, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn extend_isomorphism(
    s: &FiniteSemiring,
    t: &FiniteSemiring,
    next: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = s.order();
    if next == n {
        return true;
    }
    for target in 0..n {
        if used[target] {
            continue;
        }
        image[next] = target;
        used[target] = true;
        if consistent_so_far(s, t, next, image) && extend_isomorphism(s, t, next + 1, image, used) {
            return true;
        }
        used[target] = false;
        image[next] = usize::MAX;
    }
    false
}

// every sum and product of mapped elements whose result is mapped must agree;
// only instances involving `last` are new
fn consistent_so_far(s: &FiniteSemiring, t: &FiniteSemiring, last: usize, image: &[usize]) -> bool {
    let mapped = |x: usize| x <= last;
    (0..=last).all(|a| {
        (0..=last).all(|b| {
            let (sa, sm) = (s.add(a, b), s.mul(a, b));
            let fresh = |r: usize| a == last || b == last || r == last;
            (!mapped(sa) || !fresh(sa) || t.add(image[a], image[b]) == image[sa])
                && (!mapped(sm) || !fresh(sm) || t.mul(image[a], image[b]) == image[sm])
        })
    })
}

/// All permutations of `t`'s elements fixing the table, identity first.
pub(crate) fn automorphisms(n: usize, t: &[u8]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let fixes = (0..n)
            .all(|x| (0..n).all(|y| perm[t[x * n + y] as usize] as u8 == t[perm[x] * n + perm[y]]));
        if fixes {
            out.push(perm.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}
