//! Specialization posets: a partial order together with a coarser preorder.
//!
//! Every such preorder is the kernel preorder of the projection onto the
//! classes of its symmetric part. Unlike semilattices, surjections out of a
//! poset are not determined by an equivalence relation: the 2-antichain has
//! four surjections up to isomorphism fixing the source but only two
//! equivalence relations.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::relations::{enumerate_supersets_satisfying, BinaryRelation, Carrier};
use crate::semilattice::enumerate_maps;

/// Largest poset for which surjections are enumerated exhaustively.
pub const POSET_GUARD: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    carrier: Carrier,
    order: BinaryRelation,
}

impl FinitePoset {
    pub fn new(carrier: Carrier, order: BinaryRelation) -> Result<Self> {
        if order.size() != carrier.size() {
            return Err(Error::CarrierMismatch { left: carrier.size(), right: order.size() });
        }
        if let Some(e) = order.partial_order_violation() {
            return Err(e);
        }
        Ok(FinitePoset { carrier, order })
    }

    pub fn indexed(order: BinaryRelation) -> Result<Self> {
        Self::new(Carrier::indexed(order.size())?, order)
    }

    pub fn antichain(n: usize) -> Self {
        FinitePoset { carrier: Carrier::indexed(n).expect("valid size"), order: BinaryRelation::identity(n) }
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn order(&self) -> &BinaryRelation {
        &self.order
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.contains(a, b)
    }
}

/// A poset with a preorder `⊑` containing its order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpecializationPoset {
    base: FinitePoset,
    spec: BinaryRelation,
}

impl SpecializationPoset {
    pub fn new(base: FinitePoset, spec: BinaryRelation) -> Result<Self> {
        if spec.size() != base.size() {
            return Err(Error::CarrierMismatch { left: base.size(), right: spec.size() });
        }
        if let Some(e) = spec.preorder_violation() {
            return Err(e);
        }
        if let Some((a, b)) = base.order.pairs().find(|&(a, b)| !spec.contains(a, b)) {
            return Err(Error::NotCoarser { a, b });
        }
        Ok(SpecializationPoset { base, spec })
    }

    pub fn base(&self) -> &FinitePoset {
        &self.base
    }

    pub fn spec(&self) -> &BinaryRelation {
        &self.spec
    }
}

/// An order-preserving map between posets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    dom: FinitePoset,
    cod: FinitePoset,
    map: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(dom: FinitePoset, cod: FinitePoset, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.size() {
            return Err(Error::MapLength { got: map.len(), expected: dom.size() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= cod.size()) {
            return Err(Error::OutOfRange { index: v, size: cod.size() });
        }
        if let Some((a, b)) = dom.order.pairs().find(|&(a, b)| !cod.leq(map[a], map[b])) {
            return Err(Error::NotMonotone { a, b, fa: map[a], fb: map[b] });
        }
        Ok(MonotoneMap { dom, cod, map })
    }

    pub fn dom(&self) -> &FinitePoset {
        &self.dom
    }

    pub fn cod(&self) -> &FinitePoset {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.cod.size()).all(|t| self.map.contains(&t))
    }

    /// `a ⊑ b ⟺ φ(a) ≤ φ(b)`.
    pub fn kernel_preorder(&self) -> BinaryRelation {
        BinaryRelation::from_fn(self.map.len(), |a, b| self.cod.leq(self.map[a], self.map[b]))
    }

    /// The same surjection re-expressed into the classes of its kernel.
    pub fn into_classes(&self) -> MonotoneMap {
        let partition = Partition::kernel_of(&self.map).expect("non-empty");
        let reps = partition.representatives();
        let order = BinaryRelation::from_fn(reps.len(), |x, y| self.cod.leq(self.map[reps[x]], self.map[reps[y]]));
        let cod = FinitePoset { carrier: class_carrier(&partition, self.dom.carrier()), order };
        MonotoneMap { dom: self.dom.clone(), cod, map: partition.labels().to_vec() }
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<&str> = self.map.iter().map(|&v| self.cod.carrier.name(v)).collect();
        let dom: Vec<&str> = self.dom.carrier.names().iter().map(String::as_str).collect();
        let cover: Vec<String> = self
            .cod
            .order
            .transitive_reduction()
            .pairs()
            .map(|(x, y)| format!("{} < {}", self.cod.carrier.name(x), self.cod.carrier.name(y)))
            .collect();
        write!(
            f,
            "[{}] -> [{}]; target order: {}",
            dom.join(" "),
            images.join(" "),
            if cover.is_empty() { "discrete".to_string() } else { cover.join(", ") }
        )
    }
}

fn class_carrier(partition: &Partition, names: &Carrier) -> Carrier {
    Carrier::named(
        partition
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|&i| names.name(i)).collect::<Vec<_>>().join(","))),
    )
    .expect("block names are distinct")
}

/// `P → (P/∼, ⊑/∼)` where `∼` is the symmetric part of `⊑`.
pub fn poset_quotient(sp: &SpecializationPoset) -> (FinitePoset, MonotoneMap) {
    let partition = Partition::from_equivalence(&sp.spec.symmetric_core()).expect("symmetric core of a preorder");
    let reps = partition.representatives();
    let order = BinaryRelation::from_fn(reps.len(), |x, y| sp.spec.contains(reps[x], reps[y]));
    let target = FinitePoset::new(class_carrier(&partition, sp.base.carrier()), order)
        .expect("quotient order is a partial order");
    let pi = MonotoneMap::new(sp.base.clone(), target.clone(), partition.labels().to_vec())
        .expect("projection is monotone since the order is finer than the preorder");
    debug_assert_eq!(&pi.kernel_preorder(), sp.spec());
    (target, pi)
}

/// `χ: Q₁ → Q₂` order isomorphism with `χ(φ₁(a)) = φ₂(a)`, if one exists.
pub fn poset_quotient_isomorphic(m1: &MonotoneMap, m2: &MonotoneMap) -> Result<Option<Vec<usize>>> {
    if m1.dom.order != m2.dom.order {
        return Err(Error::SourceMismatch);
    }
    let k = m1.cod.size();
    if k != m2.cod.size() || !m1.is_surjective() || !m2.is_surjective() {
        return Ok(None);
    }
    let mut chi = vec![usize::MAX; k];
    for (a, &t) in m1.map.iter().enumerate() {
        if chi[t] == usize::MAX {
            chi[t] = m2.map[a];
        } else if chi[t] != m2.map[a] {
            return Ok(None);
        }
    }
    let mut seen = vec![false; k];
    for &v in &chi {
        if seen[v] {
            return Ok(None);
        }
        seen[v] = true;
    }
    let iso = (0..k).all(|x| (0..k).all(|y| m1.cod.leq(x, y) == m2.cod.leq(chi[x], chi[y])));
    Ok(iso.then_some(chi))
}

fn guard(n: usize) -> Result<()> {
    if n > POSET_GUARD {
        Err(Error::GuardTripped { what: "poset surjection enumeration", size: n as u64, limit: POSET_GUARD as u64 })
    } else {
        Ok(())
    }
}

/// Every partial order on `0..k`, increasing row-major order.
pub fn enumerate_partial_orders(k: usize) -> Result<Vec<BinaryRelation>> {
    enumerate_supersets_satisfying(&BinaryRelation::identity(k), false, |r| r.is_transitive() && r.is_antisymmetric())
}

/// Every surjective monotone map from `p` onto a labelled poset with at most
/// `|p|` elements.
pub fn enumerate_surjective_monotone_maps(p: &FinitePoset) -> Result<Vec<MonotoneMap>> {
    let n = p.size();
    guard(n)?;
    let mut out = Vec::new();
    for k in 1..=n {
        let maps: Vec<Vec<usize>> =
            enumerate_maps(n, k)?.into_iter().filter(|m| (0..k).all(|t| m.contains(&t))).collect();
        for order in enumerate_partial_orders(k)? {
            let cod = FinitePoset::indexed(order)?;
            for m in &maps {
                if let Ok(mm) = MonotoneMap::new(p.clone(), cod.clone(), m.clone()) {
                    out.push(mm);
                }
            }
        }
    }
    Ok(out)
}

/// One isomorphism class of surjections out of a fixed poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectionClass {
    /// Representative into the classes of its kernel.
    pub representative: MonotoneMap,
    /// Number of labelled surjections in the class.
    pub members: usize,
}

/// Surjective monotone maps out of `p` grouped by isomorphism keeping `p`
/// fixed. Classes are ordered by the row-major order of their kernel preorders.
pub fn enumerate_surjective_monotone_classes(p: &FinitePoset) -> Result<Vec<SurjectionClass>> {
    let mut classes: Vec<SurjectionClass> = Vec::new();
    for m in enumerate_surjective_monotone_maps(p)? {
        let mut found = false;
        for c in classes.iter_mut() {
            if poset_quotient_isomorphic(&c.representative, &m)?.is_some() {
                c.members += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push(SurjectionClass { representative: m.into_classes(), members: 1 });
        }
    }
    classes.sort_by_cached_key(|c| c.representative.kernel_preorder());
    Ok(classes)
}

/// Preorders containing the order of `p`.
pub fn compatible_preorders_poset(p: &FinitePoset) -> Result<Vec<BinaryRelation>> {
    enumerate_supersets_satisfying(p.order(), false, BinaryRelation::is_transitive)
}

pub fn compatible_preorder_count_poset(p: &FinitePoset) -> Result<usize> {
    compatible_preorders_poset(p).map(|v| v.len())
}

/// Number of equivalence relations on an `n`-set, by enumerating partitions.
pub fn equivalence_count(n: usize) -> Result<usize> {
    partitions(n).map(|p| p.len())
}

/// Matching between compatible preorders and surjection classes of one poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetCorrespondenceReport {
    pub preorders: usize,
    pub classes: usize,
    pub equivalences: usize,
    pub failures: Vec<String>,
}

impl PosetCorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.preorders == self.classes
    }
}

impl fmt::Display for PosetCorrespondenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "compatible preorders: {}", self.preorders)?;
        writeln!(f, "surjection classes: {}", self.classes)?;
        writeln!(f, "equivalence relations: {}", self.equivalences)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for w in &self.failures {
            writeln!(f, "  {w}")?;
        }
        write!(f, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Every compatible preorder's projection lands in exactly one surjection
/// class, every class is hit exactly once, and each projection recovers its
/// preorder.
pub fn verify_poset_correspondence(p: &FinitePoset) -> Result<PosetCorrespondenceReport> {
    let preorders = compatible_preorders_poset(p)?;
    let classes = enumerate_surjective_monotone_classes(p)?;
    let mut failures = Vec::new();
    let mut hit = vec![0usize; classes.len()];
    for r in &preorders {
        let sp = SpecializationPoset::new(p.clone(), r.clone())?;
        let (_, pi) = poset_quotient(&sp);
        if &pi.kernel_preorder() != r {
            failures.push(format!("projection of {r:?} does not recover it"));
        }
        let mut matches = Vec::new();
        for (i, c) in classes.iter().enumerate() {
            if poset_quotient_isomorphic(&c.representative, &pi)?.is_some() {
                matches.push(i);
            }
        }
        match matches.as_slice() {
            [i] => hit[*i] += 1,
            _ => failures.push(format!("projection of {r:?} matches {} classes", matches.len())),
        }
    }
    for (i, &h) in hit.iter().enumerate() {
        if h != 1 {
            failures.push(format!("class {i} matched {h} times"));
        }
    }
    Ok(PosetCorrespondenceReport {
        preorders: preorders.len(),
        classes: classes.len(),
        equivalences: equivalence_count(p.size())?,
        failures,
    })
}

/// `map` is monotone for the orders and preserves `⊑`.
pub fn is_spec_poset_hom(sp1: &SpecializationPoset, sp2: &SpecializationPoset, map: &[usize]) -> bool {
    map.len() == sp1.base.size()
        && map.iter().all(|&v| v < sp2.base.size())
        && sp1.base.order.pairs().all(|(a, b)| sp2.base.leq(map[a], map[b]))
        && sp1.spec.pairs().all(|(a, b)| sp2.spec.contains(map[a], map[b]))
}

/// For a monotone `map: P₁ → P₂`, the monotone `ψ: Q₁ → Q₂` with
/// `ψ(π₁(a)) = π₂(map(a))`, if it exists.
pub fn square_completion(sp1: &SpecializationPoset, sp2: &SpecializationPoset, map: &[usize]) -> Option<Vec<usize>> {
    let (q1, pi1) = poset_quotient(sp1);
    let (q2, pi2) = poset_quotient(sp2);
    let mut psi = vec![usize::MAX; q1.size()];
    for (a, &t) in pi1.map().iter().enumerate() {
        let want = pi2.map()[map[a]];
        if psi[t] == usize::MAX {
            psi[t] = want;
        } else if psi[t] != want {
            return None;
        }
    }
    let monotone = q1.order.pairs().all(|(x, y)| q2.leq(psi[x], psi[y]));
    monotone.then_some(psi)
}
