//! Set partitions of `0..n` as restricted growth strings.
//!
//! A partition is stored as its canonical labelling: `labels[i]` is the block
//! of `i`, blocks are numbered by first appearance, so block `k` is the
//! `k`-th block when blocks are sorted by minimum element.

use std::fmt;

use crate::error::{Error, Result};
use crate::relations::{BinaryRelation, MAX_CARRIER};

/// Largest carrier for which [`partitions`] will enumerate (Bell(12) ≈ 4.2M).
pub const PARTITION_GUARD: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
    blocks: usize,
}

impl Partition {
    /// Accepts any labelling and renumbers it canonically.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let mut out = Vec::with_capacity(labels.len());
        for &l in labels {
            let k = match seen.iter().find(|(old, _)| *old == l) {
                Some(&(_, k)) => k,
                None => {
                    seen.push((l, seen.len()));
                    seen.len() - 1
                }
            };
            out.push(k);
        }
        Ok(Partition { labels: out, blocks: seen.len() })
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (k, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::BadPartition("empty block".into()));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::OutOfRange { index: i, size: n });
                }
                if labels[i] != usize::MAX {
                    return Err(Error::BadPartition(format!("element {i} appears twice")));
                }
                labels[i] = k;
            }
        }
        if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::BadPartition(format!("element {i} is missing")));
        }
        Self::from_labels(&labels)
    }

    /// Classes of an equivalence relation.
    pub fn from_equivalence(r: &BinaryRelation) -> Result<Self> {
        if let Some(e) = r.equivalence_violation() {
            return Err(e);
        }
        let n = r.size();
        let mut labels = vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            if labels[i] == usize::MAX {
                for (j, label) in labels.iter_mut().enumerate().skip(i) {
                    if r.contains(i, j) {
                        *label = next;
                    }
                }
                next += 1;
            }
        }
        Ok(Partition { labels, blocks: next })
    }

    /// Kernel of a map: `i` and `j` share a block iff `map[i] == map[j]`.
    pub fn kernel_of(map: &[usize]) -> Result<Self> {
        Self::from_labels(map)
    }

    pub fn discrete(n: usize) -> Self {
        Partition { labels: (0..n).collect(), blocks: n }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.labels[i]
    }

    /// Blocks sorted by minimum, each block sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (i, &k) in self.labels.iter().enumerate() {
            out[k].push(i);
        }
        out
    }

    /// Smallest element of each block.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.blocks];
        for (i, &k) in self.labels.iter().enumerate() {
            if reps[k] == usize::MAX {
                reps[k] = i;
            }
        }
        reps
    }

    pub fn to_relation(&self) -> BinaryRelation {
        BinaryRelation::from_fn(self.size(), |i, j| self.labels[i] == self.labels[j])
    }

    /// Renders blocks with the given element names, e.g. `{a1,a2}{c}`.
    pub fn display_with(&self, names: &[String]) -> String {
        self.blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(",")))
            .collect()
    }

    /// Parses block syntax such as `{0,1}{2}{3,4}` over `0..n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let bad = |msg: &str| Error::Usage(format!("bad partition {text:?}: {msg}"));
        let mut blocks = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(|| bad("expected '{'"))?;
            let close = body.find('}').ok_or_else(|| bad("unclosed block"))?;
            let block = body[..close]
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad("expected element index")))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            rest = body[close + 1..].trim_start();
        }
        if blocks.is_empty() {
            return Err(bad("no blocks"));
        }
        Self::from_blocks(n, &blocks)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.blocks() {
            let items: Vec<String> = b.iter().map(|i| i.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// All partitions of `0..n` in lexicographic order of restricted growth strings.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > PARTITION_GUARD.min(MAX_CARRIER) {
        return Err(Error::GuardTripped {
            what: "set partition enumeration",
            size: n as u64,
            limit: PARTITION_GUARD as u64,
        });
    }
    let mut out = Vec::new();
    // a[i] is the label, m[i] = max(a[0..i]) + 1 bounds a[i].
    let mut a = vec![0usize; n];
    loop {
        out.push(Partition::from_labels(&a).expect("non-empty"));
        // Find the rightmost position that can be incremented.
        let mut i = n;
        let mut prefix_max = vec![0usize; n];
        for k in 1..n {
            prefix_max[k] = prefix_max[k - 1].max(a[k - 1]);
        }
        loop {
            if i == 1 {
                return Ok(out);
            }
            i -= 1;
            if a[i] <= prefix_max[i] {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Bell number by enumeration.
pub fn bell(n: usize) -> Result<usize> {
    partitions(n).map(|p| p.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let got: Vec<usize> = (1..=7).map(|n| bell(n).unwrap()).collect();
        assert_eq!(got, vec![1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn rgs_order() {
        let ps = partitions(3).unwrap();
        let strs: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, vec!["{0,1,2}", "{0,1}{2}", "{0,2}{1}", "{0}{1,2}", "{0}{1}{2}"]);
        for w in ps.windows(2) {
            assert!(w[0].labels() < w[1].labels());
        }
    }

    #[test]
    fn partitions_match_equivalences() {
        use crate::relations::enumerate_relations_satisfying;
        for n in 1..=4 {
            let mut from_parts: Vec<BinaryRelation> =
                partitions(n).unwrap().iter().map(Partition::to_relation).collect();
            from_parts.sort();
            let eqs = enumerate_relations_satisfying(n, false, BinaryRelation::is_equivalence).unwrap();
            assert_eq!(from_parts, eqs);
        }
    }

    #[test]
    fn parse_blocks() {
        let p = Partition::parse("{0,1}{2}{3,4}", 5).unwrap();
        assert_eq!(p.labels(), &[0, 0, 1, 2, 2]);
        assert_eq!(p.to_string(), "{0,1}{2}{3,4}");
        let q = Partition::parse("{4,3} {2} {1,0}", 5).unwrap();
        assert_eq!(p, q);
        assert!(Partition::parse("{0,1}{1}", 2).is_err());
        assert!(Partition::parse("{0}", 2).is_err());
        assert!(Partition::parse("{0,x}", 2).is_err());
        assert!(Partition::parse("{0,1", 2).is_err());
    }

    #[test]
    fn equivalence_roundtrip() {
        let p = Partition::from_labels(&[7, 3, 7, 9]).unwrap();
        assert_eq!(p.labels(), &[0, 1, 0, 2]);
        assert_eq!(Partition::from_equivalence(&p.to_relation()).unwrap(), p);
        assert_eq!(p.representatives(), vec![0, 1, 3]);
        assert_eq!(p.blocks(), vec![vec![0, 2], vec![1], vec![3]]);
    }
}
