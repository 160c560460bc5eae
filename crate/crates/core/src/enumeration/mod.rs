//! Enumeration of finite semirings up to isomorphism, the classifier and the
//! conjecture scan.
//!
//! The search runs in two phases. Commutative semigroups are enumerated up to
//! isomorphism to serve as additive reducts; for each one the multiplication
//! table is filled by backtracking with associativity and both distributive
//! laws checked on every assignment. Of the multiplication tables related by
//! an automorphism of the additive reduct only the lexicographically least is
//! kept, so each isomorphism class is produced once.

mod canon;
mod classify;
mod scan;
pub(crate) mod search;

pub use canon::{
    are_isomorphic, canonical_form, canonical_form_with_perm, canonical_table, CANONICAL_MAX_ORDER,
};
pub use classify::{classify, is_finite_field, CaseLabel, ClassificationVerdict, ConjectureStatus};
pub use scan::{conjecture_scan, conjecture_scan_with, OrderSummary, ScanInstance, ScanReport};

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::FiniteSemiring;
use crate::congruence::is_congruence_simple;
use crate::constructions::{FiniteSemigroup, FiniteSemilattice};
use crate::error::{Error, Result};
use crate::table::Table;
use canon::{automorphisms, min_relabeling, semiring_from_bytes};
use search::{associative_tables, Filler};

/// Largest order searched without constraints.
pub const UNCONSTRAINED_MAX_ORDER: usize = 4;
/// Largest order searched when an absorbing element is required and
/// non-trivial nilpotents are forbidden.
pub const CONSTRAINED_MAX_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchConstraints {
    pub require_mult_absorbing: bool,
    pub forbid_nontrivial_nilpotents: bool,
    pub require_congruence_simple: bool,
    pub require_commutative_mul: bool,
}

impl SearchConstraints {
    /// The hypotheses of the classification: absorbing element, no
    /// non-trivial nilpotents, congruence-simple.
    pub fn classification() -> Self {
        SearchConstraints {
            require_mult_absorbing: true,
            forbid_nontrivial_nilpotents: true,
            require_congruence_simple: true,
            require_commutative_mul: false,
        }
    }

    /// All sixteen flag combinations.
    pub fn all_combinations() -> Vec<SearchConstraints> {
        (0..16u8)
            .map(|bits| SearchConstraints {
                require_mult_absorbing: bits & 1 != 0,
                forbid_nontrivial_nilpotents: bits & 2 != 0,
                require_congruence_simple: bits & 4 != 0,
                require_commutative_mul: bits & 8 != 0,
            })
            .collect()
    }

    pub fn accepts(&self, s: &FiniteSemiring) -> bool {
        (!self.require_mult_absorbing || s.mult_absorbing().is_some())
            && (!self.forbid_nontrivial_nilpotents || !s.has_nontrivial_nilpotent())
            && (!self.require_commutative_mul || s.is_commutative())
            && (!self.require_congruence_simple || is_congruence_simple(s))
    }

    /// Order bound for these constraints.
    pub fn feasible_order(&self) -> usize {
        if self.require_mult_absorbing && self.forbid_nontrivial_nilpotents {
            CONSTRAINED_MAX_ORDER
        } else {
            UNCONSTRAINED_MAX_ORDER
        }
    }
}

/// Configurable enumeration run.
#[derive(Debug, Clone)]
pub struct Enumerator {
    order: usize,
    constraints: SearchConstraints,
    jobs: Option<usize>,
    allow_long_runs: bool,
}

impl Enumerator {
    pub fn new(order: usize, constraints: SearchConstraints) -> Self {
        Enumerator {
            order,
            constraints,
            jobs: None,
            allow_long_runs: false,
        }
    }

    /// Worker threads; `None` uses the global pool.
    pub fn jobs(mut self, jobs: Option<usize>) -> Self {
        self.jobs = jobs;
        self
    }

    /// Lifts the feasibility bounds (up to the canonical-form limit).
    pub fn allow_long_runs(mut self, yes: bool) -> Self {
        self.allow_long_runs = yes;
        self
    }

    /// Canonical representatives sorted by their tables.
    pub fn run(&self) -> Result<Vec<FiniteSemiring>> {
        let n = self.order;
        if n == 0 {
            return Err(Error::Precondition("order must be positive".into()));
        }
        let bound = if self.allow_long_runs {
            CANONICAL_MAX_ORDER
        } else {
            self.constraints.feasible_order()
        };
        if n > bound {
            return Err(Error::Capability {
                what: "enumerate",
                bound,
                order: n,
            });
        }
        match self.jobs {
            Some(k) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k.max(1))
                    .build()
                    .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
                Ok(pool.install(|| search_semirings(n, self.constraints)))
            }
            None => Ok(search_semirings(n, self.constraints)),
        }
    }
}

/// Canonical representatives of the semirings of order `n` satisfying
/// `constraints`, one per isomorphism class, in sorted order.
pub fn enumerate(n: usize, constraints: SearchConstraints) -> Result<Vec<FiniteSemiring>> {
    Enumerator::new(n, constraints).run()
}

/// Commutative semigroups of order `n` up to isomorphism, as canonical
/// tables in sorted order.
pub(crate) fn additive_reducts(n: usize) -> Vec<Vec<u8>> {
    let mut labeled = Vec::new();
    associative_tables(n, true, false, &mut |t| labeled.push(t.to_vec()));
    let reps: BTreeSet<Vec<u8>> = labeled
        .par_iter()
        .map(|t| min_relabeling(n, &[t]).0)
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    reps.into_iter().collect()
}

fn search_semirings(n: usize, c: SearchConstraints) -> Vec<FiniteSemiring> {
    let reducts = additive_reducts(n);
    // one task per (reduct, absorbing element) so that the work splits evenly
    let tasks: Vec<(usize, Option<usize>)> = reducts
        .iter()
        .enumerate()
        .flat_map(|(i, add)| {
            let ws: Vec<Option<usize>> = if c.require_mult_absorbing {
                // an absorbing w has w + w = w
                (0..n)
                    .filter(|&w| add[w * n + w] as usize == w)
                    .map(Some)
                    .collect()
            } else {
                vec![None]
            };
            ws.into_iter().map(move |w| (i, w))
        })
        .collect();
    let auts: Vec<Vec<Vec<usize>>> = reducts.par_iter().map(|a| automorphisms(n, a)).collect();

    let found: Vec<Vec<FiniteSemiring>> = tasks
        .par_iter()
        .map(|&(i, w)| {
            let add = &reducts[i];
            let mut out = Vec::new();
            let mut filler = Filler::new(n)
                .distributing_over(add)
                .commutative(c.require_commutative_mul)
                .no_square_to(if c.forbid_nontrivial_nilpotents {
                    w.map(|w| w as u8)
                } else {
                    None
                });
            if let Some(w) = w {
                if !filler.absorbing(w) {
                    return out;
                }
            }
            filler.run(&mut |mul| {
                if !is_lex_leader(n, mul, &auts[i]) {
                    return;
                }
                let s = semiring_from_bytes(n, &[add.as_slice(), mul].concat());
                if c.accepts(&s) {
                    let (cells, _) = min_relabeling(n, &[add, mul]);
                    out.push(semiring_from_bytes(n, &cells));
                }
            });
            out
        })
        .collect();

    let mut all: Vec<FiniteSemiring> = found.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    all
}

// true unless some automorphism maps `mul` to a smaller table
fn is_lex_leader(n: usize, mul: &[u8], auts: &[Vec<usize>]) -> bool {
    auts.iter().skip(1).all(|sigma| {
        let mut inv = vec![0; n];
        for (x, &s) in sigma.iter().enumerate() {
            inv[s] = x;
        }
        for i in 0..n {
            for j in 0..n {
                let image = sigma[mul[inv[i] * n + inv[j]] as usize] as u8;
                let cur = mul[i * n + j];
                if image != cur {
                    return image > cur;
                }
            }
        }
        true
    })
}

/// Semigroups of order `n` up to isomorphism (canonical tables, sorted).
/// With `cancellative_only` the search prunes to cancellative tables.
pub fn enumerate_semigroups(n: usize, cancellative_only: bool) -> Result<Vec<FiniteSemigroup>> {
    if n == 0 || n > CONSTRAINED_MAX_ORDER {
        return Err(Error::Capability {
            what: "enumerate_semigroups",
            bound: CONSTRAINED_MAX_ORDER,
            order: n,
        });
    }
    let mut labeled = Vec::new();
    associative_tables(n, false, cancellative_only, &mut |t| {
        labeled.push(t.to_vec())
    });
    let reps: BTreeSet<Vec<u8>> = labeled
        .par_iter()
        .map(|t| min_relabeling(n, &[t]).0)
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    reps.into_iter()
        .map(|cells| {
            let t = Table::from_cells(n, cells.into_iter().map(usize::from).collect())?;
            FiniteSemigroup::new(t)
        })
        .collect()
}

/// Join semilattices of order `n` with a greatest element, up to
/// isomorphism.
pub fn enumerate_semilattices(n: usize) -> Result<Vec<FiniteSemilattice>> {
    if n == 0 || n > CONSTRAINED_MAX_ORDER {
        return Err(Error::Capability {
            what: "enumerate_semilattices",
            bound: CONSTRAINED_MAX_ORDER,
            order: n,
        });
    }
    let mut labeled = Vec::new();
    let mut filler = Filler::new(n).commutative(true);
    // idempotent: preset the diagonal
    for x in 0..n {
        filler.preset(x, x, x as u8);
    }
    filler.run(&mut |t| labeled.push(t.to_vec()));
    let reps: BTreeSet<Vec<u8>> = labeled.iter().map(|t| min_relabeling(n, &[t]).0).collect();
    reps.into_iter()
        .filter_map(|cells| {
            // finite semilattices with a top: the join of everything absorbs
            let top = (0..n).find(|&t| (0..n).all(|x| cells[x * n + t] as usize == t))?;
            let table =
                Table::from_cells(n, cells.iter().map(|&c| usize::from(c)).collect()).ok()?;
            Some(FiniteSemilattice::new(table, top))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::two_element;

    fn absorbing() -> SearchConstraints {
        SearchConstraints {
            require_mult_absorbing: true,
            ..Default::default()
        }
    }

    #[test]
    fn eight_two_element_semirings_with_absorbing_element() {
        let found = enumerate(2, absorbing()).unwrap();
        assert_eq!(found.len(), 8);
        for k in 1..=8 {
            let t = two_element(k).unwrap();
            assert_eq!(
                found
                    .iter()
                    .filter(|s| are_isomorphic(s, &t).is_some())
                    .count(),
                1,
                "T{k}"
            );
        }
    }

    #[test]
    fn two_element_classification_hypotheses() {
        let found = enumerate(2, SearchConstraints::classification()).unwrap();
        let expected: Vec<FiniteSemiring> = [2, 4, 6, 8]
            .iter()
            .map(|&k| canonical_form(&two_element(k).unwrap()).unwrap())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(found, expected);
    }

    #[test]
    fn commutative_semigroup_counts() {
        // up to isomorphism: 1, 3, 12, 58
        let counts: Vec<usize> = (1..=4).map(|n| additive_reducts(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 12, 58]);
    }

    #[test]
    fn semigroup_counts_up_to_isomorphism() {
        // isomorphism (not anti-isomorphism) classes: 1, 5, 24
        let counts: Vec<usize> = (1..=3)
            .map(|n| enumerate_semigroups(n, false).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 5, 24]);
    }

    #[test]
    fn semilattice_counts() {
        // finite join semilattices with top = lattices when a bottom exists;
        // counts of semilattices with top up to iso: 1, 1, 2, 5
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_semilattices(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5]);
    }

    #[test]
    fn capability_bounds() {
        assert!(matches!(
            enumerate(5, SearchConstraints::default()),
            Err(Error::Capability { bound: 4, .. })
        ));
        assert!(matches!(
            enumerate(6, SearchConstraints::classification()),
            Err(Error::Capability { bound: 5, .. })
        ));
        assert!(matches!(
            Enumerator::new(8, SearchConstraints::classification())
                .allow_long_runs(true)
                .run(),
            Err(Error::Capability { bound: 7, .. })
        ));
    }

    #[test]
    fn lex_leader_keeps_one_per_orbit() {
        // Z2 addition has only the trivial automorphism
        let z2 = vec![0u8, 1, 1, 0];
        let auts = automorphisms(2, &z2);
        assert_eq!(auts.len(), 1);
        assert!(is_lex_leader(2, &[0, 0, 0, 1], &auts));
        // the 2-element semilattice with both labelings...
        let sl = vec![0u8, 0, 0, 1];
        assert_eq!(automorphisms(2, &sl).len(), 1);
        // ...and the null addition x + y = 0 on 3 elements swaps 1 and 2
        let null = vec![0u8; 9];
        let auts = automorphisms(3, &null);
        assert_eq!(auts.len(), 2);
    }
}
