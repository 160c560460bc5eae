//! Computing with finite semirings given by operation tables.

pub mod algebra;
pub mod congruence;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod ideals;
pub mod table;

pub use algebra::{element_report, verify_semiring, AxiomReport, ElementReport, FiniteSemiring};
pub use congruence::Partition;
pub use constructions::{FiniteSemigroup, FiniteSemilattice};
pub use enumeration::{ClassificationVerdict, SearchConstraints};
pub use error::{Error, Result};
pub use ideals::ElementSubset;
pub use table::Table;
