//! Finite binary relations stored as packed boolean matrices.
//!
//! Elements are the indices `0..n`. A [`BinaryRelation`] only records its
//! carrier size; element names live on the structures that own a
//! [`Carrier`] and never influence semantics.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest carrier a packed relation can hold (one `u64` per row).
pub const MAX_CARRIER: usize = 64;

/// Default guard for unrestricted relation enumeration (`2^(5*5)` candidates).
pub const UNRESTRICTED_GUARD: usize = 5;

/// Guard on the number of free matrix cells in a restricted enumeration.
pub const FREE_BITS_GUARD: usize = 25;

/// The underlying set of a structure: a size plus display names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Carrier {
    names: Vec<String>,
}

impl Carrier {
    /// Carrier `0..n` named by the decimal indices.
    pub fn indexed(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > MAX_CARRIER {
            return Err(Error::GuardTripped { what: "carrier size", size: n as u64, limit: MAX_CARRIER as u64 });
        }
        Ok(Carrier { names: (0..n).map(|i| i.to_string()).collect() })
    }

    pub fn named<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if names.len() > MAX_CARRIER {
            return Err(Error::GuardTripped {
                what: "carrier size",
                size: names.len() as u64,
                limit: MAX_CARRIER as u64,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) || names[..i].contains(name) {
                return Err(Error::BadName(name.clone()));
            }
        }
        Ok(Carrier { names })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// True when every element is named by its own index.
    pub fn has_default_names(&self) -> bool {
        self.names.iter().enumerate().all(|(i, n)| *n == i.to_string())
    }
}

/// A relation on `0..n`, row `i` holding the set `{j | i R j}` as bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    n: usize,
    rows: Vec<u64>,
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyCarrier)
    } else if n > MAX_CARRIER {
        Err(Error::GuardTripped { what: "carrier size", size: n as u64, limit: MAX_CARRIER as u64 })
    } else {
        Ok(())
    }
}

fn full_row(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl BinaryRelation {
    /// The empty relation on `n` elements.
    ///
    /// Panics if `n` is zero or exceeds [`MAX_CARRIER`].
    pub fn empty(n: usize) -> Self {
        check_size(n).expect("invalid carrier size");
        BinaryRelation { n, rows: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.rows[i] = 1 << i;
        }
        r
    }

    pub fn total(n: usize) -> Self {
        let mut r = Self::empty(n);
        r.rows.fill(full_row(n));
        r
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_size(n)?;
        let mut r = Self::empty(n);
        for (i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::OutOfRange { index, size: n });
                }
            }
            r.insert(i, j);
        }
        Ok(r)
    }

    /// Builds a relation from a predicate evaluated on every ordered pair.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize, j: usize) {
        self.rows[i] |= 1 << j;
    }

    #[inline]
    pub fn remove(&mut self, i: usize, j: usize) {
        self.rows[i] &= !(1 << j);
    }

    /// Row `i` as a bit set over the carrier.
    #[inline]
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// Number of pairs in the relation.
    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (0..self.n).filter(move |&j| self.contains(i, j)).map(move |j| (i, j)))
    }

    /// Row-major bit string packed into an integer, first cell most significant.
    /// Only available when `n*n <= 128`.
    pub fn row_major_key(&self) -> Option<u128> {
        if self.n * self.n > 128 {
            return None;
        }
        let mut key = 0u128;
        for i in 0..self.n {
            for j in 0..self.n {
                key = key << 1 | self.contains(i, j) as u128;
            }
        }
        Some(key)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.contains(j, i))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.contains(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(i, j)| self.contains(j, i))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(i, j)| i == j || !self.contains(j, i))
    }

    /// Row `i` of `self ∘ self`: the union of the rows reachable in one step.
    fn composed_row(&self, i: usize) -> u64 {
        let mut acc = 0;
        let mut bits = self.rows[i];
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            acc |= self.rows[j];
            bits &= bits - 1;
        }
        acc
    }

    /// `r ∘ r ⊆ r`, checked by boolean matrix product over packed rows.
    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|i| self.composed_row(i) & !self.rows[i] == 0)
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_preorder() && self.is_antisymmetric()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_preorder() && self.is_symmetric()
    }

    /// First witness against being a preorder, if any.
    pub fn preorder_violation(&self) -> Option<Error> {
        if let Some(i) = (0..self.n).find(|&i| !self.contains(i, i)) {
            return Some(Error::NotReflexive(i));
        }
        for (a, b) in self.pairs() {
            for c in 0..self.n {
                if self.contains(b, c) && !self.contains(a, c) {
                    return Some(Error::NotTransitive { a, b, c });
                }
            }
        }
        None
    }

    /// First witness against being a partial order, if any.
    pub fn partial_order_violation(&self) -> Option<Error> {
        self.preorder_violation().or_else(|| {
            self.pairs().find(|&(a, b)| a != b && self.contains(b, a)).map(|(a, b)| Error::NotAntisymmetric { a, b })
        })
    }

    /// First witness against being an equivalence, if any.
    pub fn equivalence_violation(&self) -> Option<Error> {
        self.preorder_violation()
            .or_else(|| self.pairs().find(|&(a, b)| !self.contains(b, a)).map(|(a, b)| Error::NotSymmetric { a, b }))
    }

    /// `fine ⊆ coarse`.
    pub fn is_coarser(fine: &BinaryRelation, coarse: &BinaryRelation) -> Result<bool> {
        same_carrier(fine, coarse)?;
        Ok(fine.rows.iter().zip(&coarse.rows).all(|(f, c)| f & !c == 0))
    }

    /// `self ⊆ other`; panics on carrier mismatch.
    pub fn is_subset(&self, other: &BinaryRelation) -> bool {
        Self::is_coarser(self, other).expect("carrier mismatch")
    }

    /// Meet in the lattice of relations on a fixed carrier.
    pub fn intersect<'a>(rs: impl IntoIterator<Item = &'a BinaryRelation>) -> Result<BinaryRelation> {
        let mut iter = rs.into_iter();
        let mut acc = iter.next().ok_or(Error::EmptyMeet)?.clone();
        for r in iter {
            same_carrier(&acc, r)?;
            for (a, b) in acc.rows.iter_mut().zip(&r.rows) {
                *a &= b;
            }
        }
        Ok(acc)
    }

    /// `r ∩ rᵀ`.
    pub fn symmetric_core(&self) -> BinaryRelation {
        Self::from_fn(self.n, |i, j| self.contains(i, j) && self.contains(j, i))
    }

    /// Reflexive-transitive closure (Warshall over packed rows).
    pub fn reflexive_transitive_closure(&self) -> BinaryRelation {
        let mut r = self.clone();
        for i in 0..self.n {
            r.insert(i, i);
        }
        for k in 0..self.n {
            for i in 0..self.n {
                if r.contains(i, k) {
                    r.rows[i] |= r.rows[k];
                }
            }
        }
        r
    }

    /// Covering pairs of a partial order: `a < b` with nothing strictly between.
    pub fn transitive_reduction(&self) -> BinaryRelation {
        let mut strict = self.clone();
        for i in 0..self.n {
            strict.remove(i, i);
        }
        let mut red = strict.clone();
        for i in 0..self.n {
            red.rows[i] &= !strict.composed_row(i);
        }
        red
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// Lexicographic order of row-major bit strings (smaller carriers first).
impl Ord for BinaryRelation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.rows.iter().zip(&other.rows) {
                match a.reverse_bits().cmp(&b.reverse_bits()) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BinaryRelation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn same_carrier(a: &BinaryRelation, b: &BinaryRelation) -> Result<()> {
    if a.n == b.n {
        Ok(())
    } else {
        Err(Error::CarrierMismatch { left: a.n, right: b.n })
    }
}

/// Every relation on `0..n` satisfying `pred`, in increasing row-major order.
///
/// Refuses `n > UNRESTRICTED_GUARD` unless `override_guard` is set.
pub fn enumerate_relations_satisfying(
    n: usize,
    override_guard: bool,
    pred: impl Fn(&BinaryRelation) -> bool,
) -> Result<Vec<BinaryRelation>> {
    check_size(n)?;
    if n > UNRESTRICTED_GUARD && !override_guard {
        return Err(Error::GuardTripped {
            what: "unrestricted relation enumeration",
            size: n as u64,
            limit: UNRESTRICTED_GUARD as u64,
        });
    }
    enumerate_supersets(&BinaryRelation::empty(n), true, pred)
}

/// Every relation containing `base` that satisfies `pred`, in increasing
/// row-major order. The guard bounds the number of cells not fixed by `base`.
pub fn enumerate_supersets_satisfying(
    base: &BinaryRelation,
    override_guard: bool,
    pred: impl Fn(&BinaryRelation) -> bool,
) -> Result<Vec<BinaryRelation>> {
    enumerate_supersets(base, override_guard, pred)
}

fn enumerate_supersets(
    base: &BinaryRelation,
    override_guard: bool,
    pred: impl Fn(&BinaryRelation) -> bool,
) -> Result<Vec<BinaryRelation>> {
    let n = base.n;
    let free: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !base.contains(i, j)).collect();
    let f = free.len();
    if (f > FREE_BITS_GUARD && !override_guard) || f >= 64 {
        return Err(Error::GuardTripped {
            what: "free cells in relation enumeration",
            size: f as u64,
            limit: if override_guard { 63 } else { FREE_BITS_GUARD as u64 },
        });
    }
    let mut out = Vec::new();
    let mut r = base.clone();
    // free[0] is the most significant counter bit, so increasing counters
    // give increasing row-major keys.
    for counter in 0u64..(1u64 << f) {
        for (k, &(i, j)) in free.iter().enumerate() {
            if counter >> (f - 1 - k) & 1 == 1 {
                r.insert(i, j);
            } else {
                r.remove(i, j);
            }
        }
        if pred(&r) {
            out.push(r.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(n: usize, pairs: &[(usize, usize)]) -> BinaryRelation {
        BinaryRelation::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    fn with_id(n: usize, pairs: &[(usize, usize)]) -> BinaryRelation {
        let mut r = rel(n, pairs);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    #[test]
    fn reflexivity() {
        assert!(BinaryRelation::identity(3).is_reflexive());
        assert!(!BinaryRelation::empty(2).is_reflexive());
        assert!(BinaryRelation::total(4).is_reflexive());
    }

    #[test]
    fn transitivity() {
        assert!(!rel(3, &[(0, 1), (1, 2)]).is_transitive());
        assert!(BinaryRelation::identity(5).is_transitive());
        assert!(BinaryRelation::total(4).is_transitive());
        assert_eq!(rel(3, &[(0, 1), (1, 2)]).preorder_violation(), Some(Error::NotReflexive(0)));
        assert_eq!(with_id(3, &[(0, 1), (1, 2)]).preorder_violation(), Some(Error::NotTransitive { a: 0, b: 1, c: 2 }));
    }

    #[test]
    fn order_classes() {
        let chain = with_id(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(chain.is_partial_order());
        let eq = with_id(2, &[(0, 1), (1, 0)]);
        assert!(eq.is_equivalence());
        let pre = with_id(3, &[(0, 1)]);
        assert!(pre.is_preorder());
        assert!(!pre.is_equivalence());
    }

    #[test]
    fn coarser() {
        let chain = with_id(2, &[(0, 1)]);
        assert!(BinaryRelation::is_coarser(&chain, &BinaryRelation::total(2)).unwrap());
        assert!(!BinaryRelation::is_coarser(&BinaryRelation::total(2), &BinaryRelation::identity(2)).unwrap());
        assert!(BinaryRelation::is_coarser(&chain, &chain).unwrap());
        assert_eq!(
            BinaryRelation::is_coarser(&chain, &BinaryRelation::total(3)),
            Err(Error::CarrierMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn meets() {
        let chain = with_id(2, &[(0, 1)]);
        assert_eq!(BinaryRelation::intersect([&chain]).unwrap(), chain);
        assert_eq!(BinaryRelation::intersect([&chain, &BinaryRelation::total(2)]).unwrap(), chain);
        let up = with_id(2, &[(0, 1)]);
        let down = with_id(2, &[(1, 0)]);
        assert_eq!(BinaryRelation::intersect([&up, &down]).unwrap(), BinaryRelation::identity(2));
        assert_eq!(BinaryRelation::intersect(std::iter::empty()), Err(Error::EmptyMeet));
        assert!(matches!(
            BinaryRelation::intersect([&up, &BinaryRelation::total(3)]),
            Err(Error::CarrierMismatch { .. })
        ));
    }

    #[test]
    fn symmetric_cores() {
        let pre = with_id(2, &[(0, 1), (1, 0)]);
        assert_eq!(pre.symmetric_core(), BinaryRelation::total(2));
        let chain = with_id(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(chain.symmetric_core(), BinaryRelation::identity(3));
        assert_eq!(BinaryRelation::total(3).symmetric_core(), BinaryRelation::total(3));
        for n in 1..=3 {
            for r in enumerate_relations_satisfying(n, false, BinaryRelation::is_preorder).unwrap() {
                assert!(r.symmetric_core().is_equivalence());
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_relations_satisfying(1, false, BinaryRelation::is_preorder).unwrap().len(), 1);
        assert_eq!(enumerate_relations_satisfying(2, false, BinaryRelation::is_equivalence).unwrap().len(), 2);
        assert_eq!(enumerate_relations_satisfying(2, false, BinaryRelation::is_preorder).unwrap().len(), 4);
        // OEIS A000798 / A001035 / A000110 for n = 3.
        assert_eq!(enumerate_relations_satisfying(3, false, BinaryRelation::is_preorder).unwrap().len(), 29);
        assert_eq!(enumerate_relations_satisfying(3, false, BinaryRelation::is_partial_order).unwrap().len(), 19);
        assert_eq!(enumerate_relations_satisfying(3, false, BinaryRelation::is_equivalence).unwrap().len(), 5);
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(enumerate_relations_satisfying(6, false, |_| true), Err(Error::GuardTripped { .. })));
        // Restricted enumeration above the unrestricted guard is fine.
        let id6 = BinaryRelation::identity(6);
        let orders_fixed = enumerate_supersets_satisfying(&BinaryRelation::total(6), false, |_| true).unwrap();
        assert_eq!(orders_fixed.len(), 1);
        assert!(enumerate_supersets_satisfying(&id6, false, |_| true).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = enumerate_relations_satisfying(3, false, |_| true).unwrap();
        assert_eq!(all.len(), 512);
        for w in all.windows(2) {
            assert!(w[0].row_major_key() < w[1].row_major_key());
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn reduction_matches_brute_force() {
        for po in enumerate_relations_satisfying(4, false, BinaryRelation::is_partial_order).unwrap() {
            let red = po.transitive_reduction();
            let brute = BinaryRelation::from_fn(4, |a, b| {
                a != b
                    && po.contains(a, b)
                    && !(0..4).any(|c| c != a && c != b && po.contains(a, c) && po.contains(c, b))
            });
            assert_eq!(red, brute);
            assert_eq!(red.reflexive_transitive_closure(), po);
        }
    }

    #[test]
    fn carrier_names() {
        assert!(Carrier::named(["a", "b", "a"]).is_err());
        assert!(Carrier::named(["a", ""]).is_err());
        assert_eq!(Carrier::indexed(0), Err(Error::EmptyCarrier));
        let c = Carrier::named(["x", "y"]).unwrap();
        assert_eq!(c.size(), 2);
        assert!(!c.has_default_names());
        assert!(Carrier::indexed(3).unwrap().has_default_names());
    }
}
