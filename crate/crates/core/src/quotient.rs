//! Quotient semilattices, kernels, and isomorphism of surjections.
//!
//! # Composition convention
//!
//! Commuting conditions are written in diagrammatic order: "`φ` then `χ`"
//! means `χ(φ(a))`. Two quotients `φ: S → T` and `φ′: S → T′` of the same
//! source are isomorphic when some isomorphism `χ: T → T′` satisfies
//! `χ(φ(a)) = φ′(a)` for every `a`. Two surjections are isomorphic as arrows
//! when isomorphisms `σ` of the sources and `τ` of the targets satisfy
//! `τ(φ₁(a)) = φ₂(σ(a))`. The first notion keeps the source pointwise
//! fixed; the second does not, and the two-chains fixture separates them.

use std::fmt;

use crate::correspondence::psi;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relations::{BinaryRelation, Carrier};
use crate::semilattice::{
    enumerate_semilattices, preserves_join, Congruence, FiniteSemilattice, SemilatticeHom, SpecializationSemilattice,
};

/// `S/θ` together with the canonical projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    source: FiniteSemilattice,
    theta: Congruence,
    classes: Vec<Vec<usize>>,
    target: FiniteSemilattice,
    projection: SemilatticeHom,
}

impl Quotient {
    pub fn source(&self) -> &FiniteSemilattice {
        &self.source
    }

    pub fn theta(&self) -> &Congruence {
        &self.theta
    }

    /// The θ-classes, each sorted, ordered by minimum element.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn target(&self) -> &FiniteSemilattice {
        &self.target
    }

    pub fn projection(&self) -> &SemilatticeHom {
        &self.projection
    }

    pub fn arrow(&self) -> ArrowObject {
        ArrowObject { hom: self.projection.clone() }
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.source.carrier().names();
        let p = self.theta.partition();
        writeln!(f, "classes: {}", p.display_with(names))?;
        let images: Vec<String> = self.projection.map().iter().map(|v| v.to_string()).collect();
        write!(f, "projection: {}", images.join(" "))
    }
}

/// Builds `S/θ`: classes ordered by minimum, joins computed on representatives.
pub fn build_quotient(s: &FiniteSemilattice, theta: &Congruence) -> Result<Quotient> {
    if let Some(e) = s.congruence_violation(theta.relation())? {
        return Err(e);
    }
    let partition = theta.partition();
    let reps = partition.representatives();
    let k = partition.num_blocks();
    let table: Vec<Vec<usize>> =
        (0..k).map(|x| (0..k).map(|y| partition.block_of(s.join(reps[x], reps[y]))).collect()).collect();
    let names = s.carrier().names();
    let carrier = Carrier::named(
        partition
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(","))),
    )?;
    let target = FiniteSemilattice::new(carrier, table)?;
    let projection = SemilatticeHom::new(s.clone(), target.clone(), partition.labels().to_vec())?;
    Ok(Quotient { source: s.clone(), theta: theta.clone(), classes: partition.blocks(), target, projection })
}

/// `{(a, b) | h(a) = h(b)}`.
pub fn kernel(h: &SemilatticeHom) -> Congruence {
    let m = h.map();
    let rel = BinaryRelation::from_fn(m.len(), |a, b| m[a] == m[b]);
    debug_assert!(h.dom().is_congruence(&rel).unwrap());
    Congruence::trusted(rel)
}

/// `a ⊑ b ⟺ h(a) ≤ h(b)` in the codomain.
pub fn kernel_preorder(h: &SemilatticeHom) -> BinaryRelation {
    let m = h.map();
    BinaryRelation::from_fn(m.len(), |a, b| h.cod().leq(m[a], m[b]))
}

/// Represents `⊑` as the kernel preorder of the projection onto `S/psi(⊑)`.
pub fn represent(ss: &SpecializationSemilattice) -> Result<Quotient> {
    let theta = psi(ss.base(), ss.spec())?;
    let q = build_quotient(ss.base(), &theta)?;
    debug_assert_eq!(&kernel_preorder(q.projection()), ss.spec());
    Ok(q)
}

/// One quotient per compatible preorder, in the preorder enumeration order.
pub fn gamma(s: &FiniteSemilattice) -> Result<Vec<(BinaryRelation, Quotient)>> {
    s.enumerate_compatible_preorders()?
        .into_iter()
        .map(|r| {
            let q = build_quotient(s, &psi(s, &r)?)?;
            Ok((r, q))
        })
        .collect()
}

/// A surjective semilattice homomorphism, viewed as an object of the arrow category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowObject {
    hom: SemilatticeHom,
}

impl ArrowObject {
    pub fn new(hom: SemilatticeHom) -> Result<Self> {
        if let Some(t) = (0..hom.cod().size()).find(|t| !hom.map().contains(t)) {
            return Err(Error::NotSurjective(t));
        }
        Ok(ArrowObject { hom })
    }

    pub fn hom(&self) -> &SemilatticeHom {
        &self.hom
    }
}

/// Source-fixing isomorphism: `χ: T₁ → T₂` with `χ(φ₁(a)) = φ₂(a)`.
///
/// Surjectivity of `φ₁` forces `χ`, so at most one witness exists.
pub fn quotient_isomorphic(q1: &ArrowObject, q2: &ArrowObject) -> Result<Option<Vec<usize>>> {
    let (h1, h2) = (&q1.hom, &q2.hom);
    if !h1.dom().same_operation(h2.dom()) {
        return Err(Error::SourceMismatch);
    }
    if h1.cod().size() != h2.cod().size() {
        return Ok(None);
    }
    let k = h1.cod().size();
    let mut chi = vec![usize::MAX; k];
    for (a, &t) in h1.map().iter().enumerate() {
        let want = h2.apply(a);
        if chi[t] == usize::MAX {
            chi[t] = want;
        } else if chi[t] != want {
            return Ok(None);
        }
    }
    if !is_isomorphism(h1.cod(), h2.cod(), &chi) {
        return Ok(None);
    }
    Ok(Some(chi))
}

/// Arrow isomorphism: `(σ, τ)` with `τ(φ₁(a)) = φ₂(σ(a))`, lexicographically least `σ`.
pub fn arrow_isomorphic(q1: &ArrowObject, q2: &ArrowObject) -> Option<(Vec<usize>, Vec<usize>)> {
    let (h1, h2) = (&q1.hom, &q2.hom);
    if h1.dom().size() != h2.dom().size() || h1.cod().size() != h2.cod().size() {
        return None;
    }
    let k = h1.cod().size();
    'sigma: for sigma in isomorphisms(h1.dom(), h2.dom()) {
        let mut tau = vec![usize::MAX; k];
        for (a, &t) in h1.map().iter().enumerate() {
            let want = h2.apply(sigma[a]);
            if tau[t] == usize::MAX {
                tau[t] = want;
            } else if tau[t] != want {
                continue 'sigma;
            }
        }
        if is_isomorphism(h1.cod(), h2.cod(), &tau) {
            return Some((sigma, tau));
        }
    }
    None
}

/// Bijective join-preserving map (its inverse then preserves joins too).
pub fn is_isomorphism(s1: &FiniteSemilattice, s2: &FiniteSemilattice, map: &[usize]) -> bool {
    if s1.size() != s2.size() || map.len() != s1.size() {
        return false;
    }
    let mut seen = vec![false; s2.size()];
    for &v in map {
        if v >= s2.size() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    preserves_join(s1, s2, map)
}

/// `(|↓a|, |↑a|)`: preserved by every isomorphism, used to prune candidates.
fn order_profile(s: &FiniteSemilattice) -> Vec<(usize, usize)> {
    let n = s.size();
    (0..n)
        .map(|a| {
            let down = (0..n).filter(|&b| s.leq(b, a)).count();
            let up = (0..n).filter(|&b| s.leq(a, b)).count();
            (down, up)
        })
        .collect()
}

/// Every isomorphism `s1 → s2`, in lexicographic order.
pub fn isomorphisms(s1: &FiniteSemilattice, s2: &FiniteSemilattice) -> Vec<Vec<usize>> {
    let n = s1.size();
    if n != s2.size() {
        return Vec::new();
    }
    let (p1, p2) = (order_profile(s1), order_profile(s2));
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        s1: &FiniteSemilattice,
        s2: &FiniteSemilattice,
        p1: &[(usize, usize)],
        p2: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = s1.size();
        if i == n {
            if preserves_join(s1, s2, map) {
                out.push(map.clone());
            }
            return;
        }
        for v in 0..n {
            if used[v] || p1[i] != p2[v] {
                continue;
            }
            map[i] = v;
            // Joins among already-assigned elements must already agree.
            let consistent = (0..=i).all(|j| {
                let m = s1.join(i, j);
                m > i || map[m] == s2.join(v, map[j])
            });
            if consistent {
                used[v] = true;
                go(i + 1, s1, s2, p1, p2, map, used, out);
                used[v] = false;
            }
            map[i] = usize::MAX;
        }
    }
    go(0, s1, s2, &p1, &p2, &mut map, &mut used, &mut out);
    out
}

pub fn are_isomorphic(s1: &FiniteSemilattice, s2: &FiniteSemilattice) -> bool {
    !isomorphisms(s1, s2).is_empty()
}

/// One representative per isomorphism class, first occurrence kept.
pub fn reduce_up_to_isomorphism(corpus: &[FiniteSemilattice]) -> Vec<FiniteSemilattice> {
    let mut reps: Vec<FiniteSemilattice> = Vec::new();
    for s in corpus {
        if !reps.iter().any(|r| are_isomorphic(r, s)) {
            reps.push(s.clone());
        }
    }
    reps
}

/// `map` preserves joins and `a ⊑₁ b ⟹ map(a) ⊑₂ map(b)`.
pub fn is_spec_hom(ss1: &SpecializationSemilattice, ss2: &SpecializationSemilattice, map: &[usize]) -> bool {
    preserves_join(ss1.base(), ss2.base(), map) && ss1.spec().pairs().all(|(a, b)| ss2.spec().contains(map[a], map[b]))
}

/// `map` preserves joins and `a θ₁ b ⟹ map(a) θ₂ map(b)`.
pub fn is_con_hom(
    s1: &FiniteSemilattice,
    theta1: &Congruence,
    s2: &FiniteSemilattice,
    theta2: &Congruence,
    map: &[usize],
) -> bool {
    preserves_join(s1, s2, map) && theta1.relation().pairs().all(|(a, b)| theta2.relation().contains(map[a], map[b]))
}

/// Maps `ss1 → ss2` on which the two morphism notions disagree under `psi`.
pub fn morphism_mismatches(
    ss1: &SpecializationSemilattice,
    ss2: &SpecializationSemilattice,
) -> Result<Vec<Vec<usize>>> {
    let t1 = psi(ss1.base(), ss1.spec())?;
    let t2 = psi(ss2.base(), ss2.spec())?;
    Ok(crate::semilattice::enumerate_maps(ss1.base().size(), ss2.base().size())?
        .into_iter()
        .filter(|m| is_spec_hom(ss1, ss2, m) != is_con_hom(ss1.base(), &t1, ss2.base(), &t2, m))
        .collect())
}

/// Result of classifying every surjection out of one semilattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientClassReport {
    pub preorders: usize,
    pub surjections: usize,
    /// Number of surjections landing in each preorder's class, in preorder order.
    pub class_sizes: Vec<usize>,
    pub failures: Vec<String>,
}

impl QuotientClassReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for QuotientClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "compatible preorders: {}", self.preorders)?;
        writeln!(f, "surjections classified: {}", self.surjections)?;
        let sizes: Vec<String> = self.class_sizes.iter().map(|c| c.to_string()).collect();
        writeln!(f, "class sizes: {}", sizes.join(" "))?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for w in &self.failures {
            writeln!(f, "  {w}")?;
        }
        write!(f, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// All surjective homomorphisms from `s` onto the labelled semilattices of
/// size at most `|s|`.
pub fn surjections_from(s: &FiniteSemilattice) -> Result<Vec<SemilatticeHom>> {
    let mut out = Vec::new();
    for k in 1..=s.size() {
        for t in enumerate_semilattices(k)? {
            out.extend(s.enumerate_surjective_homs(&t)?);
        }
    }
    Ok(out)
}

/// Checks that the quotients attached to the compatible preorders are pairwise
/// non-isomorphic (source fixed) and that every surjection out of `s` is
/// isomorphic to exactly one of them, namely the one of its kernel preorder.
pub fn verify_quotient_classes(s: &FiniteSemilattice) -> Result<QuotientClassReport> {
    let pairs = gamma(s)?;
    let arrows: Vec<ArrowObject> = pairs.iter().map(|(_, q)| q.arrow()).collect();
    let mut failures = Vec::new();
    for i in 0..arrows.len() {
        if quotient_isomorphic(&arrows[i], &arrows[i])?.is_none() {
            failures.push(format!("quotient {i} not isomorphic to itself"));
        }
        for j in i + 1..arrows.len() {
            if quotient_isomorphic(&arrows[i], &arrows[j])?.is_some() {
                failures.push(format!("quotients {i} and {j} are isomorphic"));
            }
        }
    }
    let surjections = surjections_from(s)?;
    let mut class_sizes = vec![0; pairs.len()];
    for h in &surjections {
        let arrow = ArrowObject::new(h.clone())?;
        let mut hits = Vec::new();
        for (i, q) in arrows.iter().enumerate() {
            if quotient_isomorphic(&arrow, q)?.is_some() {
                hits.push(i);
            }
        }
        match hits.as_slice() {
            [i] => {
                class_sizes[*i] += 1;
                if pairs[*i].0 != kernel_preorder(h) {
                    failures.push(format!("map {:?} classified away from its kernel preorder", h.map()));
                }
            }
            _ => failures.push(format!("map {:?} matches {} quotients", h.map(), hits.len())),
        }
    }
    Ok(QuotientClassReport { preorders: pairs.len(), surjections: surjections.len(), class_sizes, failures })
}

/// Every surjection out of `s` is arrow-isomorphic to the projection onto
/// `s/ker`. Returns the maps for which no witness was found, and the count checked.
pub fn verify_surjections_factor(s: &FiniteSemilattice) -> Result<(usize, Vec<Vec<usize>>)> {
    let surjections = surjections_from(s)?;
    let mut missing = Vec::new();
    for h in &surjections {
        let canonical = build_quotient(s, &kernel(h))?.arrow();
        let arrow = ArrowObject::new(h.clone())?;
        if arrow_isomorphic(&arrow, &canonical).is_none() {
            missing.push(h.map().to_vec());
        }
    }
    Ok((surjections.len(), missing))
}

/// Partition view of a congruence with element names, e.g. `{a1,a2}{b1}{b2}{c}`.
pub fn describe(s: &FiniteSemilattice, theta: &Congruence) -> String {
    Partition::from_equivalence(theta.relation()).expect("congruence").display_with(s.carrier().names())
}
