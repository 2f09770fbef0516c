//! Built-in example structures.

use crate::partition::Partition;
use crate::poset_spec::FinitePoset;
use crate::relations::{BinaryRelation, Carrier};
use crate::semilattice::{Congruence, FiniteSemilattice};

/// Two 3-chains `a1 < a2 < c` and `b1 < b2 < c` sharing the top, with
/// `ai ∨ bj = c`, plus the congruences collapsing `{a1, a2}` and `{b1, b2}`.
#[derive(Debug, Clone)]
pub struct TwoChains {
    pub semilattice: FiniteSemilattice,
    /// Collapses `a1` and `a2`.
    pub theta: Congruence,
    /// Collapses `b1` and `b2`.
    pub theta_prime: Congruence,
}

pub fn two_chains() -> TwoChains {
    // a1 = 0, a2 = 1, b1 = 2, b2 = 3, c = 4
    let carrier = Carrier::named(["a1", "a2", "b1", "b2", "c"]).expect("distinct names");
    let table =
        vec![vec![0, 1, 4, 4, 4], vec![1, 1, 4, 4, 4], vec![4, 4, 2, 3, 4], vec![4, 4, 3, 3, 4], vec![4, 4, 4, 4, 4]];
    let semilattice = FiniteSemilattice::new(carrier, table).expect("valid join table");
    let theta = Congruence::from_partition(&semilattice, &Partition::from_labels(&[0, 0, 1, 2, 3]).unwrap())
        .expect("theta is a congruence");
    let theta_prime = Congruence::from_partition(&semilattice, &Partition::from_labels(&[0, 1, 2, 2, 3]).unwrap())
        .expect("theta' is a congruence");
    TwoChains { semilattice, theta, theta_prime }
}

/// Two incomparable elements `a`, `b`.
pub fn antichain_pair() -> FinitePoset {
    let carrier = Carrier::named(["a", "b"]).expect("distinct names");
    FinitePoset::new(carrier, BinaryRelation::identity(2)).expect("antichain is a partial order")
}

/// The chain `0 < 1`.
pub fn chain2() -> FiniteSemilattice {
    FiniteSemilattice::from_table(vec![vec![0, 1], vec![1, 1]]).expect("2-chain")
}
