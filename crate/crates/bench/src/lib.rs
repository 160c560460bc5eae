//! Benchmarks live in `benches/`. This crate only holds shared inputs.

use finsemi_core::constructions::{end1, v_of, FiniteSemigroup, FiniteSemilattice};
use finsemi_core::FiniteSemiring;

/// A handful of semirings of increasing order used across benchmarks.
pub fn sample_semirings() -> Vec<FiniteSemiring> {
    vec![
        v_of(&FiniteSemigroup::cyclic_group(2)).expect("V(Z2)"),
        v_of(&FiniteSemigroup::cyclic_group(4)).expect("V(Z4)"),
        v_of(&FiniteSemigroup::cyclic_group(2).product(&FiniteSemigroup::cyclic_group(3)))
            .expect("V(Z6)"),
        end1(&FiniteSemilattice::chain(3)).expect("End1").semiring,
    ]
}
