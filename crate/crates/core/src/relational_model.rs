//! Finite first-order structures and the internal description of their
//! surjective images.
//!
//! An [`AppropriateExpansion`] of a structure `A` adds an equivalence `Θ` and,
//! for each relation symbol `R`, a relation `R*` of the same arity, such that
//!
//! - `R ⊆ R*`,
//! - `Θ` is compatible with every function symbol,
//! - every `R*` is closed under replacing arguments by `Θ`-related ones.
//!
//! Expansions correspond one-to-one with surjective homomorphisms *into
//! classes*, i.e. onto a structure whose elements are the `Θ`-classes
//! (numbered by minimum element) with each element sent to its class.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::relations::{BinaryRelation, Carrier};
use crate::semilattice::FiniteSemilattice;

/// Budget on the number of candidates any single enumeration may produce.
pub const STRUCTURE_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

/// Relation symbols (arity at least 1) and function symbols (arity 0 are
/// constants). Equality is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    relations: Vec<Symbol>,
    functions: Vec<Symbol>,
}

impl Signature {
    pub fn new(relations: Vec<(String, usize)>, functions: Vec<(String, usize)>) -> Result<Self> {
        let relations: Vec<Symbol> = relations.into_iter().map(|(name, arity)| Symbol { name, arity }).collect();
        let functions: Vec<Symbol> = functions.into_iter().map(|(name, arity)| Symbol { name, arity }).collect();
        let mut names = BTreeSet::new();
        for s in relations.iter().chain(&functions) {
            if s.name.is_empty() || s.name.chars().any(|c| c.is_whitespace() || c == '*') {
                return Err(Error::Signature(format!("bad symbol name {:?}", s.name)));
            }
            if !names.insert(s.name.clone()) {
                return Err(Error::Signature(format!("duplicate symbol {}", s.name)));
            }
        }
        if let Some(r) = relations.iter().find(|r| r.arity == 0) {
            return Err(Error::Signature(format!("relation {} must have arity at least 1", r.name)));
        }
        Ok(Signature { relations, functions })
    }

    pub fn relations(&self) -> &[Symbol] {
        &self.relations
    }

    pub fn functions(&self) -> &[Symbol] {
        &self.functions
    }
}

fn power(n: usize, arity: usize) -> usize {
    n.pow(arity as u32)
}

fn tuple_index(n: usize, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, &a| acc * n + a)
}

fn tuple_at(n: usize, arity: usize, mut index: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    for slot in t.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    t
}

/// All `arity`-tuples over `0..n` in lexicographic order.
pub fn all_tuples(n: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..power(n, arity)).map(move |i| tuple_at(n, arity, i))
}

/// Interpretation of a relation symbol as a bit per tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationTable {
    n: usize,
    arity: usize,
    bits: Vec<bool>,
}

impl RelationTable {
    pub fn empty(n: usize, arity: usize) -> Self {
        RelationTable { n, arity, bits: vec![false; power(n, arity)] }
    }

    pub fn from_tuples(n: usize, arity: usize, tuples: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut t = Self::empty(n, arity);
        for tuple in tuples {
            if tuple.len() != arity {
                return Err(Error::Signature(format!("tuple {tuple:?} has wrong arity, expected {arity}")));
            }
            if let Some(&index) = tuple.iter().find(|&&a| a >= n) {
                return Err(Error::OutOfRange { index, size: n });
            }
            t.bits[tuple_index(n, &tuple)] = true;
        }
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn contains(&self, args: &[usize]) -> bool {
        self.bits[tuple_index(self.n, args)]
    }

    fn set(&mut self, args: &[usize], v: bool) {
        let i = tuple_index(self.n, args);
        self.bits[i] = v;
    }

    /// Tuples in the relation, lexicographic.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| tuple_at(self.n, self.arity, i))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &RelationTable) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }
}

/// Interpretation of a function symbol as a total table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctionTable {
    n: usize,
    arity: usize,
    values: Vec<usize>,
}

impl FunctionTable {
    /// `values[i]` is the image of the `i`-th tuple in lexicographic order.
    pub fn new(n: usize, arity: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != power(n, arity) {
            return Err(Error::Signature(format!(
                "function table of arity {arity} needs {} entries, got {}",
                power(n, arity),
                values.len()
            )));
        }
        if let Some(&index) = values.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { index, size: n });
        }
        Ok(FunctionTable { n, arity, values })
    }

    /// Builds a table from `(args, value)` entries; every tuple must appear.
    pub fn from_entries(
        name: &str,
        n: usize,
        arity: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, usize)>,
    ) -> Result<Self> {
        let mut values = vec![usize::MAX; power(n, arity)];
        for (args, v) in entries {
            if args.len() != arity {
                return Err(Error::Signature(format!("{name}: argument tuple {args:?} has wrong arity")));
            }
            if let Some(&index) = args.iter().chain([&v]).find(|&&a| a >= n) {
                return Err(Error::OutOfRange { index, size: n });
            }
            values[tuple_index(n, &args)] = v;
        }
        if let Some(i) = values.iter().position(|&v| v == usize::MAX) {
            return Err(Error::PartialFunction { name: name.to_string(), args: tuple_at(n, arity, i) });
        }
        Ok(FunctionTable { n, arity, values })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn apply(&self, args: &[usize]) -> usize {
        self.values[tuple_index(self.n, args)]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `(args, value)` pairs in lexicographic order of arguments.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, usize)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (tuple_at(self.n, self.arity, i), v))
    }
}

/// A model of a signature on a finite carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteStructure {
    signature: Signature,
    carrier: Carrier,
    relations: Vec<RelationTable>,
    functions: Vec<FunctionTable>,
}

impl FiniteStructure {
    pub fn new(
        signature: Signature,
        carrier: Carrier,
        relations: Vec<RelationTable>,
        functions: Vec<FunctionTable>,
    ) -> Result<Self> {
        let n = carrier.size();
        if relations.len() != signature.relations.len() || functions.len() != signature.functions.len() {
            return Err(Error::SignatureMismatch);
        }
        for (sym, t) in signature.relations.iter().zip(&relations) {
            if t.arity != sym.arity || t.n != n {
                return Err(Error::Signature(format!("table for {} does not match its symbol", sym.name)));
            }
        }
        for (sym, t) in signature.functions.iter().zip(&functions) {
            if t.arity != sym.arity || t.n != n {
                return Err(Error::Signature(format!("table for {} does not match its symbol", sym.name)));
            }
        }
        Ok(FiniteStructure { signature, carrier, relations, functions })
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn relations(&self) -> &[RelationTable] {
        &self.relations
    }

    pub fn functions(&self) -> &[FunctionTable] {
        &self.functions
    }

    /// Same interpretations, ignoring element names.
    pub fn same_interpretation(&self, other: &FiniteStructure) -> bool {
        self.signature == other.signature && self.relations == other.relations && self.functions == other.functions
    }
}

/// A map between two structures over the same signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureHom {
    dom: FiniteStructure,
    cod: FiniteStructure,
    map: Vec<usize>,
}

impl StructureHom {
    /// Checks shapes only; see [`Self::is_homomorphism`].
    pub fn new(dom: FiniteStructure, cod: FiniteStructure, map: Vec<usize>) -> Result<Self> {
        if dom.signature != cod.signature {
            return Err(Error::SignatureMismatch);
        }
        if map.len() != dom.size() {
            return Err(Error::MapLength { got: map.len(), expected: dom.size() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= cod.size()) {
            return Err(Error::OutOfRange { index: v, size: cod.size() });
        }
        Ok(StructureHom { dom, cod, map })
    }

    pub fn dom(&self) -> &FiniteStructure {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteStructure {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    fn image(&self, args: &[usize]) -> Vec<usize> {
        args.iter().map(|&a| self.map[a]).collect()
    }

    /// First violated homomorphism condition, described.
    pub fn homomorphism_violation(&self) -> Option<String> {
        let n = self.dom.size();
        for ((sym, fd), fc) in self.dom.signature.functions.iter().zip(&self.dom.functions).zip(&self.cod.functions) {
            for args in all_tuples(n, sym.arity) {
                let lhs = self.map[fd.apply(&args)];
                let rhs = fc.apply(&self.image(&args));
                if lhs != rhs {
                    return Some(format!("h({}{args:?}) = {lhs} but {}(h{args:?}) = {rhs}", sym.name, sym.name));
                }
            }
        }
        for ((sym, rd), rc) in self.dom.signature.relations.iter().zip(&self.dom.relations).zip(&self.cod.relations) {
            if let Some(t) = rd.tuples().find(|t| !rc.contains(&self.image(t))) {
                return Some(format!("{}{t:?} holds but {}{:?} does not", sym.name, sym.name, self.image(&t)));
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_violation().is_none()
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.cod.size()).all(|t| self.map.contains(&t))
    }

    /// Codomain elements are the kernel classes ordered by minimum and each
    /// element goes to its own class.
    pub fn is_into_classes(&self) -> bool {
        let p = Partition::kernel_of(&self.map).expect("non-empty domain");
        p.labels() == self.map.as_slice() && p.num_blocks() == self.cod.size()
    }
}

/// An expansion by `Θ` and one starred relation per relation symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AppropriateExpansion {
    base: FiniteStructure,
    theta: BinaryRelation,
    starred: Vec<RelationTable>,
}

impl AppropriateExpansion {
    pub fn new(base: FiniteStructure, theta: BinaryRelation, starred: Vec<RelationTable>) -> Result<Self> {
        let e = AppropriateExpansion { base, theta, starred };
        if let Some(err) = e.violation() {
            return Err(err);
        }
        Ok(e)
    }

    pub fn base(&self) -> &FiniteStructure {
        &self.base
    }

    pub fn theta(&self) -> &BinaryRelation {
        &self.theta
    }

    pub fn starred(&self) -> &[RelationTable] {
        &self.starred
    }

    /// First failed condition, if any.
    pub fn violation(&self) -> Option<Error> {
        let n = self.base.size();
        if self.theta.size() != n {
            return Some(Error::CarrierMismatch { left: n, right: self.theta.size() });
        }
        if self.starred.len() != self.base.relations.len() {
            return Some(Error::SignatureMismatch);
        }
        if let Some(e) = self.theta.equivalence_violation() {
            return Some(e);
        }
        for ((sym, r), star) in self.base.signature.relations.iter().zip(&self.base.relations).zip(&self.starred) {
            if star.arity != sym.arity || star.n != n {
                return Some(Error::Signature(format!("{}* has the wrong shape", sym.name)));
            }
            if let Some(tuple) = r.tuples().find(|t| !star.contains(t)) {
                return Some(Error::StarNotSuperset { rel: sym.name.clone(), tuple });
            }
        }
        for (sym, f) in self.base.signature.functions.iter().zip(&self.base.functions) {
            if let Some((xs, ys)) = first_unrelated_neighbour(n, sym.arity, &self.theta, |t| {
                !self.theta.contains(f.apply(&t.0), f.apply(&t.1))
            }) {
                return Some(Error::ThetaNotFunctionCongruence { fun: sym.name.clone(), xs, ys });
            }
        }
        for (sym, star) in self.base.signature.relations.iter().zip(&self.starred) {
            if let Some((xs, ys)) =
                first_unrelated_neighbour(n, sym.arity, &self.theta, |t| star.contains(&t.0) && !star.contains(&t.1))
            {
                return Some(Error::StarNotSaturated { rel: sym.name.clone(), xs, ys });
            }
        }
        None
    }
}

/// Searches pairs of tuples differing in one coordinate by a `Θ`-related
/// element. Closure under these single steps is equivalent to closure under
/// coordinatewise `Θ`-related tuples, since `Θ` is an equivalence.
fn first_unrelated_neighbour(
    n: usize,
    arity: usize,
    theta: &BinaryRelation,
    bad: impl Fn(&(Vec<usize>, Vec<usize>)) -> bool,
) -> Option<(Vec<usize>, Vec<usize>)> {
    for xs in all_tuples(n, arity) {
        for i in 0..arity {
            for y in 0..n {
                if y == xs[i] || !theta.contains(xs[i], y) {
                    continue;
                }
                let mut ys = xs.clone();
                ys[i] = y;
                let pair = (xs.clone(), ys);
                if bad(&pair) {
                    return Some(pair);
                }
            }
        }
    }
    None
}

/// `Θ = ker h` and `R*(ā) ⟺ R(h(ā))`.
pub fn expansion_from_hom(h: &StructureHom) -> Result<AppropriateExpansion> {
    if let Some(w) = h.homomorphism_violation() {
        return Err(Error::NotHomomorphism(w));
    }
    if let Some(t) = (0..h.cod.size()).find(|t| !h.map.contains(t)) {
        return Err(Error::NotSurjective(t));
    }
    let n = h.dom.size();
    let theta = BinaryRelation::from_fn(n, |a, b| h.map[a] == h.map[b]);
    let starred = h
        .cod
        .relations
        .iter()
        .map(|rc| {
            let mut star = RelationTable::empty(n, rc.arity);
            for t in all_tuples(n, rc.arity) {
                let v = rc.contains(&h.image(&t));
                star.set(&t, v);
            }
            star
        })
        .collect();
    let e = AppropriateExpansion { base: h.dom.clone(), theta, starred };
    debug_assert!(e.violation().is_none(), "{:?}", e.violation());
    Ok(e)
}

fn block_carrier(partition: &Partition, names: &Carrier) -> Carrier {
    Carrier::named(
        partition
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|&i| names.name(i)).collect::<Vec<_>>().join(","))),
    )
    .expect("block names are distinct")
}

/// `A/Θ` with relations read off `R*` and functions computed on
/// representatives, returned as the projection `a ↦ a/Θ`.
pub fn quotient_from_expansion(e: &AppropriateExpansion) -> Result<StructureHom> {
    if let Some(err) = e.violation() {
        return Err(err);
    }
    let partition = Partition::from_equivalence(&e.theta)?;
    let reps = partition.representatives();
    let k = reps.len();
    let lift = |t: &[usize]| -> Vec<usize> { t.iter().map(|&x| reps[x]).collect() };
    let relations = e
        .starred
        .iter()
        .map(|star| {
            let mut r = RelationTable::empty(k, star.arity);
            for t in all_tuples(k, star.arity) {
                let v = star.contains(&lift(&t));
                r.set(&t, v);
            }
            r
        })
        .collect();
    let functions = e
        .base
        .functions
        .iter()
        .map(|f| {
            let values = all_tuples(k, f.arity).map(|t| partition.block_of(f.apply(&lift(&t)))).collect();
            FunctionTable::new(k, f.arity, values)
        })
        .collect::<Result<Vec<_>>>()?;
    let cod = FiniteStructure::new(
        e.base.signature.clone(),
        block_carrier(&partition, &e.base.carrier),
        relations,
        functions,
    )?;
    let h = StructureHom::new(e.base.clone(), cod, partition.labels().to_vec())?;
    debug_assert!(h.is_homomorphism() && h.is_into_classes());
    Ok(h)
}

fn check_budget(what: &'static str, count: u64) -> Result<()> {
    if count > STRUCTURE_BUDGET {
        Err(Error::GuardTripped { what, size: count, limit: STRUCTURE_BUDGET })
    } else {
        Ok(())
    }
}

/// `Θ` given by `partition` respects every function of `a`.
fn partition_respects_functions(a: &FiniteStructure, partition: &Partition) -> bool {
    let theta = partition.to_relation();
    let n = a.size();
    a.signature.functions.iter().zip(&a.functions).all(|(sym, f)| {
        first_unrelated_neighbour(n, sym.arity, &theta, |t| !theta.contains(f.apply(&t.0), f.apply(&t.1))).is_none()
    })
}

/// Every combination of one table per entry, each table extending the
/// forced tuples by an arbitrary subset of the free ones.
fn relation_choices(n: usize, shapes: &[(usize, Vec<bool>)]) -> Result<Vec<Vec<RelationTable>>> {
    let free: Vec<Vec<usize>> =
        shapes.iter().map(|(_, forced)| (0..forced.len()).filter(|&i| !forced[i]).collect()).collect();
    let total_bits: usize = free.iter().map(Vec::len).sum();
    if total_bits >= 63 {
        return Err(Error::GuardTripped { what: "relation choices", size: total_bits as u64, limit: 20 });
    }
    check_budget("relation choices", 1u64 << total_bits)?;
    let mut out = Vec::new();
    for counter in 0u64..(1u64 << total_bits) {
        let mut bit = total_bits;
        let tables = shapes
            .iter()
            .zip(&free)
            .map(|((arity, forced), free)| {
                let mut bits = forced.clone();
                for &i in free {
                    bit -= 1;
                    bits[i] = counter >> bit & 1 == 1;
                }
                RelationTable { n, arity: *arity, bits }
            })
            .collect();
        out.push(tables);
    }
    Ok(out)
}

/// Every surjective homomorphism into classes with domain `a`: kernel
/// partitions respecting the functions, then every choice of quotient
/// relations containing the images of the relations of `a`.
pub fn enumerate_surjective_homs_into_classes(a: &FiniteStructure) -> Result<Vec<StructureHom>> {
    let n = a.size();
    let mut out = Vec::new();
    for partition in partitions(n)? {
        if !partition_respects_functions(a, &partition) {
            continue;
        }
        let k = partition.num_blocks();
        let reps = partition.representatives();
        let functions = a
            .functions
            .iter()
            .map(|f| {
                let values = all_tuples(k, f.arity)
                    .map(|t| partition.block_of(f.apply(&t.iter().map(|&x| reps[x]).collect::<Vec<_>>())))
                    .collect();
                FunctionTable::new(k, f.arity, values)
            })
            .collect::<Result<Vec<_>>>()?;
        let shapes: Vec<(usize, Vec<bool>)> = a
            .relations
            .iter()
            .map(|r| {
                let mut forced = vec![false; power(k, r.arity)];
                for t in r.tuples() {
                    let image: Vec<usize> = t.iter().map(|&x| partition.block_of(x)).collect();
                    forced[tuple_index(k, &image)] = true;
                }
                (r.arity, forced)
            })
            .collect();
        let carrier = block_carrier(&partition, &a.carrier);
        for relations in relation_choices(k, &shapes)? {
            let cod = FiniteStructure::new(a.signature.clone(), carrier.clone(), relations, functions.clone())?;
            out.push(StructureHom::new(a.clone(), cod, partition.labels().to_vec())?);
        }
        check_budget("surjective homomorphisms", out.len() as u64)?;
    }
    Ok(out)
}

/// Every appropriate expansion of `a`: equivalences respecting the
/// functions, then every `Θ`-saturated superset of each relation.
pub fn enumerate_appropriate_expansions(a: &FiniteStructure) -> Result<Vec<AppropriateExpansion>> {
    let n = a.size();
    let mut out = Vec::new();
    for partition in partitions(n)? {
        let theta = partition.to_relation();
        let shapes: Vec<(usize, Vec<bool>)> = a.relations.iter().map(|r| (r.arity, r.bits.clone())).collect();
        for starred in relation_choices(n, &shapes)? {
            let e = AppropriateExpansion { base: a.clone(), theta: theta.clone(), starred };
            if e.violation().is_none() {
                out.push(e);
            }
        }
        check_budget("appropriate expansions", out.len() as u64)?;
    }
    Ok(out)
}

/// Every structure over `signature` on `0..n`.
pub fn enumerate_structures(signature: &Signature, n: usize) -> Result<Vec<FiniteStructure>> {
    let carrier = Carrier::indexed(n)?;
    let mut count: u64 = 1;
    for r in &signature.relations {
        count = count.saturating_mul(1u64.checked_shl(power(n, r.arity) as u32).unwrap_or(u64::MAX));
    }
    for f in &signature.functions {
        count = count.saturating_mul((n as u64).saturating_pow(power(n, f.arity) as u32));
    }
    check_budget("structure enumeration", count)?;
    let mut tables_r: Vec<Vec<RelationTable>> = vec![Vec::new()];
    for r in &signature.relations {
        let cells = power(n, r.arity);
        let mut next = Vec::new();
        for prefix in &tables_r {
            for mask in 0u64..(1u64 << cells) {
                let bits = (0..cells).map(|i| mask >> (cells - 1 - i) & 1 == 1).collect();
                let mut v = prefix.clone();
                v.push(RelationTable { n, arity: r.arity, bits });
                next.push(v);
            }
        }
        tables_r = next;
    }
    let mut tables_f: Vec<Vec<FunctionTable>> = vec![Vec::new()];
    for f in &signature.functions {
        let cells = power(n, f.arity);
        let mut next = Vec::new();
        for prefix in &tables_f {
            for values in all_tuples(n, cells) {
                let mut v = prefix.clone();
                v.push(FunctionTable { n, arity: f.arity, values });
                next.push(v);
            }
        }
        tables_f = next;
    }
    let mut out = Vec::with_capacity(count as usize);
    for rs in &tables_r {
        for fs in &tables_f {
            out.push(FiniteStructure {
                signature: signature.clone(),
                carrier: carrier.clone(),
                relations: rs.clone(),
                functions: fs.clone(),
            });
        }
    }
    Ok(out)
}

/// A semilattice as a structure with one binary function `join`.
pub fn semilattice_as_structure(s: &FiniteSemilattice) -> FiniteStructure {
    let n = s.size();
    let signature = Signature::new(vec![], vec![("join".into(), 2)]).expect("valid signature");
    let values = all_tuples(n, 2).map(|t| s.join(t[0], t[1])).collect();
    FiniteStructure {
        signature,
        carrier: s.carrier().clone(),
        relations: vec![],
        functions: vec![FunctionTable { n, arity: 2, values }],
    }
}

/// Outcome of checking the hom/expansion bijection on one structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionReport {
    pub homs: usize,
    pub expansions: usize,
    pub failures: Vec<String>,
}

impl ExpansionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.homs == self.expansions
    }
}

impl fmt::Display for ExpansionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "surjective homomorphisms into classes: {}", self.homs)?;
        writeln!(f, "appropriate expansions: {}", self.expansions)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for w in &self.failures {
            writeln!(f, "  {w}")?;
        }
        write!(f, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn expansion_key(e: &AppropriateExpansion) -> (BinaryRelation, Vec<RelationTable>) {
    (e.theta.clone(), e.starred.clone())
}

/// Enumerates both sides independently and checks that the two
/// constructions are mutually inverse bijections.
pub fn verify_expansion_bijection(a: &FiniteStructure) -> Result<ExpansionReport> {
    let homs = enumerate_surjective_homs_into_classes(a)?;
    let expansions = enumerate_appropriate_expansions(a)?;
    let mut failures = Vec::new();
    let mut images = Vec::with_capacity(homs.len());
    for h in &homs {
        if !(h.is_homomorphism() && h.is_surjective() && h.is_into_classes()) {
            failures.push(format!("enumerated map {:?} is not a surjective homomorphism into classes", h.map));
            continue;
        }
        match expansion_from_hom(h) {
            Ok(e) => {
                if let Some(err) = e.violation() {
                    failures.push(format!("expansion of {:?} is not appropriate: {err}", h.map));
                }
                match quotient_from_expansion(&e) {
                    Ok(back) if &back == h => {}
                    Ok(_) => failures.push(format!("collapse(expand(h)) != h for map {:?}", h.map)),
                    Err(err) => failures.push(format!("collapse failed: {err}")),
                }
                images.push(expansion_key(&e));
            }
            Err(err) => failures.push(format!("expand failed: {err}")),
        }
    }
    for e in &expansions {
        match quotient_from_expansion(e).and_then(|h| expansion_from_hom(&h)) {
            Ok(back) if &back == e => {}
            Ok(_) => failures.push(format!("expand(collapse(e)) != e for theta {:?}", e.theta)),
            Err(err) => failures.push(format!("round trip failed: {err}")),
        }
    }
    images.sort();
    let before = images.len();
    images.dedup();
    if images.len() != before {
        failures.push("expansion_from_hom is not injective".into());
    }
    let mut keys: Vec<_> = expansions.iter().map(expansion_key).collect();
    keys.sort();
    if images != keys {
        failures.push("expansions of homomorphisms differ from the enumerated expansions".into());
    }
    Ok(ExpansionReport { homs: homs.len(), expansions: expansions.len(), failures })
}
