//! Finite join semilattices, their homomorphisms, congruences and
//! compatible preorders.
//!
//! A preorder `⊑` on a semilattice `S` is *compatible* when it contains the
//! induced order `a ≤ b ⟺ a ∨ b = b` and satisfies
//!
//! ```text
//! a ⊑ b  and  a1 ⊑ b   imply   a ∨ a1 ⊑ b
//! ```
//!
//! The pair `(S, ⊑)` is then a [`SpecializationSemilattice`].

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::relations::{enumerate_supersets_satisfying, BinaryRelation, Carrier};

/// Largest carrier accepted by the congruence and preorder enumerators.
pub const ENUMERATION_GUARD: usize = 6;

/// Largest carrier for which the labelled semilattice corpus is generated.
pub const CORPUS_GUARD: usize = 5;

/// Budget on `|cod|^|dom|` for map enumeration.
pub const MAP_BUDGET: u64 = 1 << 20;

/// A validated join table on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemilattice {
    carrier: Carrier,
    join: Vec<usize>,
}

impl FiniteSemilattice {
    /// Validates `table` as an idempotent, commutative, associative operation.
    /// The first violated axiom is reported with a witness.
    pub fn new(carrier: Carrier, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = carrier.size();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::TableShape { expected: n });
        }
        let mut join = Vec::with_capacity(n * n);
        for row in &table {
            for &v in row {
                if v >= n {
                    return Err(Error::OutOfRange { index: v, size: n });
                }
                join.push(v);
            }
        }
        let s = FiniteSemilattice { carrier, join };
        s.check_axioms()?;
        Ok(s)
    }

    /// Semilattice on `0..n` with default names.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let carrier = Carrier::indexed(table.len())?;
        Self::new(carrier, table)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.size();
        for a in 0..n {
            let got = self.join(a, a);
            if got != a {
                return Err(Error::Idempotence { a, got });
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let (ab, ba) = (self.join(a, b), self.join(b, a));
                if ab != ba {
                    return Err(Error::Commutativity { a, b, ab, ba });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = self.join(self.join(a, b), c);
                    let right = self.join(a, self.join(b, c));
                    if left != right {
                        return Err(Error::Associativity { a, b, c, left, right });
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds the join table of a partial order in which every pair has a
    /// least upper bound.
    pub fn from_order(carrier: Carrier, order: &BinaryRelation) -> Result<Self> {
        let n = carrier.size();
        if order.size() != n {
            return Err(Error::CarrierMismatch { left: n, right: order.size() });
        }
        if let Some(e) = order.partial_order_violation() {
            return Err(e);
        }
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let j = least_upper_bound(order, a, b).ok_or(Error::NoJoin { a, b })?;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        Ok(FiniteSemilattice { carrier, join })
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    /// Same join table under different display names.
    pub fn with_carrier(&self, carrier: Carrier) -> Result<Self> {
        if carrier.size() != self.size() {
            return Err(Error::CarrierMismatch { left: self.size(), right: carrier.size() });
        }
        Ok(FiniteSemilattice { carrier, join: self.join.clone() })
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.join.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    /// Same join table, ignoring names.
    pub fn same_operation(&self, other: &FiniteSemilattice) -> bool {
        self.join == other.join
    }

    /// `a ≤ b ⟺ a ∨ b = b`.
    pub fn induced_order(&self) -> BinaryRelation {
        BinaryRelation::from_fn(self.size(), |a, b| self.join(a, b) == b)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.join(a, b) == b
    }

    /// First compatibility failure of `r`, or `None` if `r` is compatible.
    pub fn compatibility_violation(&self, r: &BinaryRelation) -> Result<Option<Error>> {
        self.same_size(r)?;
        if let Some(e) = r.preorder_violation() {
            return Ok(Some(e));
        }
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                if self.leq(a, b) && !r.contains(a, b) {
                    return Ok(Some(Error::NotCoarser { a, b }));
                }
            }
        }
        for b in 0..n {
            for a in 0..n {
                if !r.contains(a, b) {
                    continue;
                }
                for a1 in 0..n {
                    if r.contains(a1, b) && !r.contains(self.join(a, a1), b) {
                        return Ok(Some(Error::JoinCompatibility { a, a1, b }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// `r` is a preorder containing `≤` and closed under joins of lower elements.
    pub fn is_compatible_preorder(&self, r: &BinaryRelation) -> Result<bool> {
        Ok(self.compatibility_violation(r)?.is_none())
    }

    /// First congruence failure of `r`, or `None` if `r` is a congruence.
    pub fn congruence_violation(&self, r: &BinaryRelation) -> Result<Option<Error>> {
        self.same_size(r)?;
        if let Some(e) = r.equivalence_violation() {
            return Ok(Some(e));
        }
        Ok(self.join_compatibility_witness(r))
    }

    fn join_compatibility_witness(&self, r: &BinaryRelation) -> Option<Error> {
        let n = self.size();
        for (a, b) in r.pairs() {
            for c in 0..n {
                if !r.contains(self.join(a, c), self.join(b, c)) {
                    return Some(Error::NotCongruence { a, b, c });
                }
            }
        }
        None
    }

    pub fn is_congruence(&self, r: &BinaryRelation) -> Result<bool> {
        Ok(self.congruence_violation(r)?.is_none())
    }

    fn same_size(&self, r: &BinaryRelation) -> Result<()> {
        if r.size() == self.size() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch { left: self.size(), right: r.size() })
        }
    }

    fn guard(&self) -> Result<()> {
        if self.size() > ENUMERATION_GUARD {
            Err(Error::GuardTripped {
                what: "semilattice enumeration",
                size: self.size() as u64,
                limit: ENUMERATION_GUARD as u64,
            })
        } else {
            Ok(())
        }
    }

    /// All congruences, in restricted-growth-string order of their partitions.
    pub fn enumerate_congruences(&self) -> Result<Vec<Congruence>> {
        self.guard()?;
        Ok(partitions(self.size())?
            .into_iter()
            .map(|p| p.to_relation())
            .filter(|r| self.join_compatibility_witness(r).is_none())
            .map(|rel| Congruence { rel })
            .collect())
    }

    /// All compatible preorders, by filtering the preorders that contain `≤`.
    /// Increasing row-major order.
    pub fn enumerate_compatible_preorders(&self) -> Result<Vec<BinaryRelation>> {
        self.guard()?;
        enumerate_supersets_satisfying(&self.induced_order(), false, |r| {
            r.is_transitive() && self.compatibility_violation(r).ok().flatten().is_none()
        })
    }

    /// All compatible preorders as the image of the congruences under `Ω`,
    /// sorted into the same order as [`Self::enumerate_compatible_preorders`].
    pub fn compatible_preorders_via_congruences(&self) -> Result<Vec<BinaryRelation>> {
        let mut out: Vec<BinaryRelation> =
            self.enumerate_congruences()?.iter().map(|t| omega_relation(self, t.relation())).collect();
        out.sort();
        Ok(out)
    }

    /// Runs both enumeration strategies and fails on any disagreement.
    pub fn compatible_preorders_cross_checked(&self) -> Result<Vec<BinaryRelation>> {
        let direct = self.enumerate_compatible_preorders()?;
        let via = self.compatible_preorders_via_congruences()?;
        if direct != via {
            let witness = direct
                .iter()
                .find(|r| !via.contains(r))
                .or_else(|| via.iter().find(|r| !direct.contains(r)))
                .map(|r| format!("{r:?}"))
                .unwrap_or_else(|| "duplicate entry".into());
            return Err(Error::CheckFailed(format!(
                "enumeration strategies disagree ({} direct vs {} via congruences), witness {witness}",
                direct.len(),
                via.len()
            )));
        }
        Ok(direct)
    }

    /// Every map `dom → cod` preserving joins, in lexicographic order of maps.
    pub fn enumerate_homs(&self, cod: &FiniteSemilattice) -> Result<Vec<SemilatticeHom>> {
        Ok(enumerate_maps(self.size(), cod.size())?
            .into_iter()
            .filter(|m| preserves_join(self, cod, m))
            .map(|map| SemilatticeHom { dom: self.clone(), cod: cod.clone(), map })
            .collect())
    }

    pub fn enumerate_surjective_homs(&self, cod: &FiniteSemilattice) -> Result<Vec<SemilatticeHom>> {
        Ok(self.enumerate_homs(cod)?.into_iter().filter(SemilatticeHom::is_surjective).collect())
    }
}

fn least_upper_bound(order: &BinaryRelation, a: usize, b: usize) -> Option<usize> {
    let n = order.size();
    let ub = order.row(a) & order.row(b);
    (0..n).find(|&c| ub >> c & 1 == 1 && (0..n).all(|d| ub >> d & 1 == 0 || order.contains(c, d)))
}

/// `(a, b) ∈ Ω(θ) ⟺ (a ∨ b) θ b`. Assumes `theta` is on `s`'s carrier.
pub(crate) fn omega_relation(s: &FiniteSemilattice, theta: &BinaryRelation) -> BinaryRelation {
    BinaryRelation::from_fn(s.size(), |a, b| theta.contains(s.join(a, b), b))
}

/// Every map `0..n → 0..m` as an index vector, lexicographic.
pub fn enumerate_maps(n: usize, m: usize) -> Result<Vec<Vec<usize>>> {
    let count = (m as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if count > MAP_BUDGET {
        return Err(Error::GuardTripped { what: "map enumeration budget", size: count, limit: MAP_BUDGET });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut map = vec![0usize; n];
    loop {
        out.push(map.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if map[i] + 1 < m {
                map[i] += 1;
                for x in &mut map[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// `map(a ∨ b) = map(a) ∨ map(b)` for all `a, b`; false on malformed maps.
pub fn preserves_join(dom: &FiniteSemilattice, cod: &FiniteSemilattice, map: &[usize]) -> bool {
    let n = dom.size();
    if map.len() != n || map.iter().any(|&v| v >= cod.size()) {
        return false;
    }
    (0..n).all(|a| (a..n).all(|b| map[dom.join(a, b)] == cod.join(map[a], map[b])))
}

/// All labelled join semilattices on `0..n`, one per partial order with all
/// binary joins, in increasing row-major order of the order relation.
pub fn enumerate_semilattices(n: usize) -> Result<Vec<FiniteSemilattice>> {
    if n > CORPUS_GUARD {
        return Err(Error::GuardTripped { what: "semilattice corpus", size: n as u64, limit: CORPUS_GUARD as u64 });
    }
    let carrier = Carrier::indexed(n)?;
    let orders = enumerate_supersets_satisfying(&BinaryRelation::identity(n), false, |r| {
        r.is_transitive() && r.is_antisymmetric()
    })?;
    Ok(orders.iter().filter_map(|o| FiniteSemilattice::from_order(carrier.clone(), o).ok()).collect())
}

/// A semilattice together with a compatible preorder `⊑`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpecializationSemilattice {
    base: FiniteSemilattice,
    spec: BinaryRelation,
}

impl SpecializationSemilattice {
    pub fn new(base: FiniteSemilattice, spec: BinaryRelation) -> Result<Self> {
        if let Some(e) = base.compatibility_violation(&spec)? {
            return Err(e);
        }
        Ok(SpecializationSemilattice { base, spec })
    }

    pub fn base(&self) -> &FiniteSemilattice {
        &self.base
    }

    pub fn spec(&self) -> &BinaryRelation {
        &self.spec
    }

    /// `a ⊑ b ∧ a1 ⊑ b1 ⟹ a ∨ a1 ⊑ b ∨ b1` over all quadruples.
    pub fn check_derived_monotonicity(&self) -> bool {
        let s = &self.base;
        let r = &self.spec;
        r.pairs().all(|(a, b)| r.pairs().all(|(a1, b1)| r.contains(s.join(a, a1), s.join(b, b1))))
    }
}

/// A join-preserving map between semilattices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemilatticeHom {
    dom: FiniteSemilattice,
    cod: FiniteSemilattice,
    map: Vec<usize>,
}

impl SemilatticeHom {
    pub fn new(dom: FiniteSemilattice, cod: FiniteSemilattice, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.size() {
            return Err(Error::MapLength { got: map.len(), expected: dom.size() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= cod.size()) {
            return Err(Error::OutOfRange { index: v, size: cod.size() });
        }
        let h = SemilatticeHom { dom, cod, map };
        if let Some((a, b)) = h.join_violation() {
            return Err(Error::NotHomomorphism(format!(
                "h({a} v {b}) = {} but h({a}) v h({b}) = {}",
                h.map[h.dom.join(a, b)],
                h.cod.join(h.map[a], h.map[b])
            )));
        }
        Ok(h)
    }

    /// Wraps a map without checking join preservation (see [`Self::is_semilattice_hom`]).
    pub fn unchecked(dom: FiniteSemilattice, cod: FiniteSemilattice, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.size() {
            return Err(Error::MapLength { got: map.len(), expected: dom.size() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= cod.size()) {
            return Err(Error::OutOfRange { index: v, size: cod.size() });
        }
        Ok(SemilatticeHom { dom, cod, map })
    }

    fn join_violation(&self) -> Option<(usize, usize)> {
        let n = self.dom.size();
        (0..n)
            .flat_map(|a| (a..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.map[self.dom.join(a, b)] != self.cod.join(self.map[a], self.map[b]))
    }

    pub fn is_semilattice_hom(&self) -> bool {
        self.join_violation().is_none()
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.cod.size()).all(|t| self.map.contains(&t))
    }

    pub fn dom(&self) -> &FiniteSemilattice {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSemilattice {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }
}

/// A validated congruence: an equivalence with `a θ b ⟹ (a ∨ c) θ (b ∨ c)`.
///
/// The wrapper records only the relation; it is checked against the
/// semilattice passed to [`Congruence::new`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    rel: BinaryRelation,
}

impl Congruence {
    pub fn new(s: &FiniteSemilattice, rel: BinaryRelation) -> Result<Self> {
        if let Some(e) = s.congruence_violation(&rel)? {
            return Err(e);
        }
        Ok(Congruence { rel })
    }

    pub fn from_partition(s: &FiniteSemilattice, p: &Partition) -> Result<Self> {
        if p.size() != s.size() {
            return Err(Error::CarrierMismatch { left: s.size(), right: p.size() });
        }
        Self::new(s, p.to_relation())
    }

    pub fn identity(n: usize) -> Self {
        Congruence { rel: BinaryRelation::identity(n) }
    }

    pub fn total(n: usize) -> Self {
        Congruence { rel: BinaryRelation::total(n) }
    }

    pub(crate) fn trusted(rel: BinaryRelation) -> Self {
        debug_assert!(rel.is_equivalence());
        Congruence { rel }
    }

    pub fn relation(&self) -> &BinaryRelation {
        &self.rel
    }

    pub fn partition(&self) -> Partition {
        Partition::from_equivalence(&self.rel).expect("congruence is an equivalence")
    }

    pub fn into_relation(self) -> BinaryRelation {
        self.rel
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn chain2() -> FiniteSemilattice {
        FiniteSemilattice::from_table(vec![vec![0, 1], vec![1, 1]]).unwrap()
    }

    /// `{a, b, a ∨ b}` with `a = 0`, `b = 1`, top `2`.
    fn vee() -> FiniteSemilattice {
        FiniteSemilattice::from_table(vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]]).unwrap()
    }

    fn with_id(n: usize, pairs: &[(usize, usize)]) -> BinaryRelation {
        let mut r = BinaryRelation::from_pairs(n, pairs.iter().copied()).unwrap();
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    #[test]
    fn validation() {
        assert!(FiniteSemilattice::from_table(vec![vec![0, 1], vec![1, 1]]).is_ok());
        assert_eq!(
            FiniteSemilattice::from_table(vec![vec![1, 1], vec![1, 1]]),
            Err(Error::Idempotence { a: 0, got: 1 })
        );
        assert_eq!(
            FiniteSemilattice::from_table(vec![vec![0, 1], vec![0, 1]]),
            Err(Error::Commutativity { a: 0, b: 1, ab: 1, ba: 0 })
        );
        // Commutative, idempotent, not associative: (0 v 1) v 2 = 2 v 2 = 2, 0 v (1 v 2) = 0 v 0 = 0.
        let bad = vec![vec![0, 2, 0], vec![2, 1, 0], vec![0, 0, 2]];
        assert!(matches!(FiniteSemilattice::from_table(bad), Err(Error::Associativity { .. })));
        assert_eq!(
            FiniteSemilattice::from_table(vec![vec![0, 5], vec![5, 1]]),
            Err(Error::OutOfRange { index: 5, size: 2 })
        );
        assert!(matches!(FiniteSemilattice::from_table(vec![vec![0, 1]]), Err(Error::TableShape { .. })));
        assert!(fixtures::two_chains().semilattice.size() == 5);
    }

    #[test]
    fn induced_orders() {
        assert_eq!(chain2().induced_order(), with_id(2, &[(0, 1)]));
        let one = FiniteSemilattice::from_table(vec![vec![0]]).unwrap();
        assert_eq!(one.induced_order(), BinaryRelation::identity(1));
        let f = fixtures::two_chains();
        let le = f.semilattice.induced_order();
        let [a1, a2, b1, b2, c] = [0, 1, 2, 3, 4];
        for (x, y) in [(a1, a2), (a2, c), (a1, c), (b1, b2), (b2, c), (b1, c)] {
            assert!(le.contains(x, y) && !le.contains(y, x));
        }
        for x in [a1, a2] {
            for y in [b1, b2] {
                assert!(!le.contains(x, y) && !le.contains(y, x));
            }
        }
        assert!(le.is_partial_order());
    }

    #[test]
    fn compatible_preorders() {
        let s = vee();
        assert!(s.is_compatible_preorder(&s.induced_order()).unwrap());
        assert!(s.is_compatible_preorder(&BinaryRelation::total(3)).unwrap());
        // Adding only a ⊑ b: a ⊑ b and b ⊑ b but a ∨ b = top is not ⊑ b.
        let r = BinaryRelation::from_pairs(3, s.induced_order().pairs().chain([(0, 1)])).unwrap();
        assert!(r.is_preorder());
        assert_eq!(s.compatibility_violation(&r).unwrap(), Some(Error::JoinCompatibility { a: 0, a1: 1, b: 1 }));
        assert_eq!(
            s.compatibility_violation(&BinaryRelation::identity(3)).unwrap(),
            Some(Error::NotCoarser { a: 0, b: 2 })
        );
        assert!(s.is_compatible_preorder(&BinaryRelation::total(2)).is_err());
    }

    #[test]
    fn congruences() {
        let f = fixtures::two_chains();
        let s = &f.semilattice;
        assert!(s.is_congruence(&BinaryRelation::identity(5)).unwrap());
        assert!(s.is_congruence(&BinaryRelation::total(5)).unwrap());
        assert!(s.is_congruence(f.theta.relation()).unwrap());
        assert!(s.is_congruence(f.theta_prime.relation()).unwrap());
        // {a1, c} alone is not: a1 v a2 = a2 would have to be related to c v a2 = c.
        let bad = Partition::parse("{0,4}{1}{2}{3}", 5).unwrap().to_relation();
        assert_eq!(s.congruence_violation(&bad).unwrap(), Some(Error::NotCongruence { a: 0, b: 4, c: 1 }));
    }

    #[test]
    fn congruence_counts() {
        let one = FiniteSemilattice::from_table(vec![vec![0]]).unwrap();
        assert_eq!(one.enumerate_congruences().unwrap().len(), 1);
        assert_eq!(chain2().enumerate_congruences().unwrap().len(), 2);
        let f = fixtures::two_chains();
        let cons = f.semilattice.enumerate_congruences().unwrap();
        assert!(cons.contains(&f.theta));
        assert!(cons.contains(&f.theta_prime));
    }

    #[test]
    fn preorder_counts() {
        let one = FiniteSemilattice::from_table(vec![vec![0]]).unwrap();
        assert_eq!(one.enumerate_compatible_preorders().unwrap().len(), 1);
        let c = chain2();
        assert_eq!(c.enumerate_compatible_preorders().unwrap(), vec![c.induced_order(), BinaryRelation::total(2)]);
        let f = fixtures::two_chains();
        assert_eq!(
            f.semilattice.compatible_preorders_cross_checked().unwrap().len(),
            f.semilattice.enumerate_congruences().unwrap().len()
        );
    }

    #[test]
    fn derived_monotonicity() {
        let c = chain2();
        assert!(SpecializationSemilattice::new(c.clone(), c.induced_order()).unwrap().check_derived_monotonicity());
        let f = fixtures::two_chains();
        let s = &f.semilattice;
        let omega = omega_relation(s, f.theta.relation());
        assert!(SpecializationSemilattice::new(s.clone(), omega).unwrap().check_derived_monotonicity());
    }

    #[test]
    fn small_corpus() {
        assert_eq!(enumerate_semilattices(1).unwrap().len(), 1);
        assert_eq!(enumerate_semilattices(2).unwrap().len(), 2);
        assert!(enumerate_semilattices(6).is_err());
    }

    #[test]
    fn homs() {
        let c = chain2();
        let id = SemilatticeHom::new(c.clone(), c.clone(), vec![0, 1]).unwrap();
        assert!(id.is_semilattice_hom());
        for t in 0..2 {
            assert!(SemilatticeHom::new(c.clone(), c.clone(), vec![t, t]).is_ok());
        }
        let swap = SemilatticeHom::unchecked(c.clone(), c.clone(), vec![1, 0]).unwrap();
        assert!(!swap.is_semilattice_hom());
        assert!(matches!(SemilatticeHom::new(c.clone(), c.clone(), vec![1, 0]), Err(Error::NotHomomorphism(_))));
        assert_eq!(c.enumerate_homs(&c).unwrap().len(), 3);
        assert_eq!(c.enumerate_surjective_homs(&c).unwrap().len(), 1);
        assert!(matches!(SemilatticeHom::new(c.clone(), c.clone(), vec![0]), Err(Error::MapLength { .. })));
    }

    #[test]
    fn map_budget() {
        assert_eq!(enumerate_maps(3, 2).unwrap().len(), 8);
        assert!(enumerate_maps(64, 2).is_err());
    }
}
