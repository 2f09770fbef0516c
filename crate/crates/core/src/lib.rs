//! Finite join semilattices with compatible preorders, their congruences and
//! quotients, specialization posets, and surjective images of finite
//! first-order structures.

pub mod cli;
pub mod correspondence;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod partition;
pub mod poset_spec;
pub mod quotient;
pub mod relational_model;
pub mod relations;
pub mod semilattice;

pub use error::{Error, Result};
pub use partition::Partition;
pub use relations::{BinaryRelation, Carrier};
pub use semilattice::{Congruence, FiniteSemilattice, SemilatticeHom, SpecializationSemilattice};
