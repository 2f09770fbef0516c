//! The maps between compatible preorders and congruences of a semilattice.
//!
//! `psi` keeps the symmetric part of a compatible preorder; `omega` sends a
//! congruence `θ` to `{(a, b) | (a ∨ b) θ b}`. They are mutually inverse and
//! `psi` preserves arbitrary intersections, so the two lattices are
//! isomorphic. [`verify_correspondence`] checks all of this exhaustively on
//! one finite semilattice.

use std::fmt;

use crate::error::Result;
use crate::relations::BinaryRelation;
use crate::semilattice::{omega_relation, Congruence, FiniteSemilattice};

/// Congruence of a compatible preorder: `a θ b ⟺ a ⊑ b ∧ b ⊑ a`.
pub fn psi(s: &FiniteSemilattice, spec: &BinaryRelation) -> Result<Congruence> {
    if let Some(e) = s.compatibility_violation(spec)? {
        return Err(e);
    }
    let core = spec.symmetric_core();
    debug_assert!(s.is_congruence(&core).unwrap());
    Ok(Congruence::trusted(core))
}

/// Compatible preorder of a congruence: `a ⊑ b ⟺ (a ∨ b) θ b`.
pub fn omega(s: &FiniteSemilattice, theta: &Congruence) -> Result<BinaryRelation> {
    if let Some(e) = s.congruence_violation(theta.relation())? {
        return Err(e);
    }
    let r = omega_relation(s, theta.relation());
    debug_assert!(s.is_compatible_preorder(&r).unwrap());
    Ok(r)
}

/// `spec1 ⊆ spec2 ⟺ psi(spec1) ⊆ psi(spec2)`.
pub fn monotone_pair_check(s: &FiniteSemilattice, spec1: &BinaryRelation, spec2: &BinaryRelation) -> Result<bool> {
    let (t1, t2) = (psi(s, spec1)?, psi(s, spec2)?);
    Ok(spec1.is_subset(spec2) == t1.relation().is_subset(t2.relation()))
}

/// Join of compatible preorders: the meet of all compatible upper bounds.
pub fn join_compatible(s: &FiniteSemilattice, rs: &[BinaryRelation]) -> Result<BinaryRelation> {
    for r in rs {
        if let Some(e) = s.compatibility_violation(r)? {
            return Err(e);
        }
    }
    let all = s.enumerate_compatible_preorders()?;
    let uppers: Vec<&BinaryRelation> = all.iter().filter(|u| rs.iter().all(|r| r.is_subset(u))).collect();
    BinaryRelation::intersect(uppers)
}

/// Outcome of an exhaustive correspondence check on one semilattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub label: String,
    pub preorder_count: usize,
    pub congruence_count: usize,
    pub round_trip_failures: Vec<String>,
    pub meet_failures: Vec<String>,
    pub order_failures: Vec<String>,
    /// Number of meet families checked (all subsets of size at most 3 plus the full family).
    pub meets_checked: usize,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.preorder_count == self.congruence_count
            && self.round_trip_failures.is_empty()
            && self.meet_failures.is_empty()
            && self.order_failures.is_empty()
    }
}

impl fmt::Display for CorrespondenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "semilattice: {}", self.label)?;
        writeln!(f, "compatible preorders: {}", self.preorder_count)?;
        writeln!(f, "congruences: {}", self.congruence_count)?;
        writeln!(f, "meet families checked: {}", self.meets_checked)?;
        for (name, list) in
            [("round-trip", &self.round_trip_failures), ("meet", &self.meet_failures), ("order", &self.order_failures)]
        {
            writeln!(f, "{name} failures: {}", list.len())?;
            for w in list {
                writeln!(f, "  {w}")?;
            }
        }
        write!(f, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Largest family size for which every sub-family is meet-checked.
pub const MEET_SUBSET_LIMIT: usize = 3;

/// Checks that `psi` and `omega` are inverse bijections between the
/// compatible preorders and the congruences of `s`, that `psi` preserves
/// meets of every family of at most three preorders and of the whole set,
/// and that `psi` and its inverse are monotone.
pub fn verify_correspondence(s: &FiniteSemilattice, label: &str) -> Result<CorrespondenceReport> {
    let preorders = s.enumerate_compatible_preorders()?;
    let congruences = s.enumerate_congruences()?;
    let mut round_trip_failures = Vec::new();
    let mut meet_failures = Vec::new();
    let mut order_failures = Vec::new();

    let mut images: Vec<BinaryRelation> = Vec::with_capacity(preorders.len());
    for r in &preorders {
        match psi(s, r) {
            Ok(t) => {
                let back = omega(s, &t)?;
                if &back != r {
                    round_trip_failures.push(format!("omega(psi({r:?})) = {back:?}"));
                }
                images.push(t.into_relation());
            }
            Err(e) => round_trip_failures.push(format!("psi({r:?}) rejected: {e}")),
        }
    }
    for t in &congruences {
        let r = omega(s, t)?;
        match psi(s, &r) {
            Ok(back) if &back == t => {}
            Ok(back) => round_trip_failures.push(format!("psi(omega({:?})) = {:?}", t.relation(), back.relation())),
            Err(e) => round_trip_failures.push(format!("omega({:?}) not compatible: {e}", t.relation())),
        }
    }
    let mut sorted_images = images.clone();
    sorted_images.sort();
    let before = sorted_images.len();
    sorted_images.dedup();
    if sorted_images.len() != before {
        round_trip_failures.push("psi is not injective".into());
    }
    let mut sorted_cons: Vec<BinaryRelation> = congruences.iter().map(|t| t.relation().clone()).collect();
    sorted_cons.sort();
    if sorted_images != sorted_cons {
        round_trip_failures.push("psi image differs from the congruence set".into());
    }

    let mut meets_checked = 0;
    if images.len() == preorders.len() {
        let mut check = |family: &[usize]| {
            meets_checked += 1;
            let meet = BinaryRelation::intersect(family.iter().map(|&i| &preorders[i])).expect("non-empty");
            let image_meet = BinaryRelation::intersect(family.iter().map(|&i| &images[i])).expect("non-empty");
            match psi(s, &meet) {
                Ok(t) if t.relation() == &image_meet => {}
                Ok(t) => meet_failures.push(format!(
                    "family {family:?}: psi(meet) = {:?}, meet of images = {image_meet:?}",
                    t.relation()
                )),
                Err(e) => meet_failures.push(format!("family {family:?}: meet not compatible: {e}")),
            }
        };
        let k = preorders.len();
        for i in 0..k {
            check(&[i]);
            for j in i + 1..k {
                check(&[i, j]);
                for l in j + 1..k {
                    check(&[i, j, l]);
                }
            }
        }
        if k > MEET_SUBSET_LIMIT {
            check(&(0..k).collect::<Vec<_>>());
        }

        for (i, r1) in preorders.iter().enumerate() {
            for (j, r2) in preorders.iter().enumerate() {
                if r1.is_subset(r2) != images[i].is_subset(&images[j]) {
                    order_failures.push(format!("pair ({i}, {j}): inclusion not reflected"));
                }
            }
        }
    }

    Ok(CorrespondenceReport {
        label: label.to_string(),
        preorder_count: preorders.len(),
        congruence_count: congruences.len(),
        round_trip_failures,
        meet_failures,
        order_failures,
        meets_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;
    use crate::semilattice::enumerate_semilattices;

    #[test]
    fn psi_examples() {
        let f = fixtures::two_chains();
        let s = &f.semilattice;
        assert_eq!(psi(s, &s.induced_order()).unwrap(), Congruence::identity(5));
        assert_eq!(psi(s, &BinaryRelation::total(5)).unwrap(), Congruence::total(5));
        let r = omega(s, &f.theta).unwrap();
        assert_eq!(psi(s, &r).unwrap(), f.theta);
        assert!(matches!(psi(s, &BinaryRelation::identity(5)), Err(Error::NotCoarser { .. })));
    }

    #[test]
    fn omega_examples() {
        let f = fixtures::two_chains();
        let s = &f.semilattice;
        assert_eq!(omega(s, &Congruence::identity(5)).unwrap(), s.induced_order());
        assert_eq!(omega(s, &Congruence::total(5)).unwrap(), BinaryRelation::total(5));
        let r = omega(s, &f.theta).unwrap();
        assert!(r.contains(1, 0));
        assert!(s.induced_order().is_subset(&r));
        // a2 ⊑ a1 is the only pair added to ≤.
        assert_eq!(r.len(), s.induced_order().len() + 1);
        let bogus = Congruence::total(3);
        assert!(omega(s, &bogus).is_err());
    }

    #[test]
    fn small_reports() {
        let one = FiniteSemilattice::from_table(vec![vec![0]]).unwrap();
        let rep = verify_correspondence(&one, "1").unwrap();
        assert!(rep.passed());
        assert_eq!((rep.preorder_count, rep.congruence_count), (1, 1));
        let rep = verify_correspondence(&fixtures::chain2(), "2-chain").unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!((rep.preorder_count, rep.congruence_count), (2, 2));
        // subsets of size ≤ 3 of 2 items: 2 + 1
        assert_eq!(rep.meets_checked, 3);
    }

    #[test]
    fn monotone_pairs() {
        let f = fixtures::two_chains();
        let s = &f.semilattice;
        assert!(monotone_pair_check(s, &s.induced_order(), &BinaryRelation::total(5)).unwrap());
        let all = s.enumerate_compatible_preorders().unwrap();
        for r1 in &all {
            for r2 in &all {
                assert!(monotone_pair_check(s, r1, r2).unwrap());
            }
        }
    }

    #[test]
    fn joins_of_compatible_preorders() {
        let f = fixtures::two_chains();
        let s = &f.semilattice;
        let r1 = omega(s, &f.theta).unwrap();
        let r2 = omega(s, &f.theta_prime).unwrap();
        let j = join_compatible(s, &[r1.clone(), r2.clone()]).unwrap();
        assert!(s.is_compatible_preorder(&j).unwrap());
        assert!(r1.is_subset(&j) && r2.is_subset(&j));
        // The congruence join of theta and theta' collapses both chains.
        let expected = crate::partition::Partition::from_labels(&[0, 0, 1, 1, 2]).unwrap().to_relation();
        assert_eq!(psi(s, &j).unwrap().relation(), &expected);
        assert_eq!(join_compatible(s, &[]).unwrap(), s.induced_order());
    }

    #[test]
    fn three_element_corpus() {
        for s in enumerate_semilattices(3).unwrap() {
            let rep = verify_correspondence(&s, "s").unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}
