use proptest::prelude::*;

use speclattice::format::{parse, print, Document};
use speclattice::poset_spec::{compatible_preorders_poset, enumerate_partial_orders, FinitePoset, SpecializationPoset};
use speclattice::relational_model::{FiniteStructure, FunctionTable, RelationTable, Signature};
use speclattice::semilattice::{enumerate_semilattices, SpecializationSemilattice};
use speclattice::{BinaryRelation, Carrier};

fn relation(max_n: usize) -> impl Strategy<Value = BinaryRelation> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n)
            .prop_map(move |bits| BinaryRelation::from_fn(n, |i, j| bits[i * n + j]))
    })
}

fn relation_triple() -> impl Strategy<Value = (BinaryRelation, BinaryRelation, BinaryRelation)> {
    (1usize..=5).prop_flat_map(|n| {
        let r = move || {
            proptest::collection::vec(any::<bool>(), n * n)
                .prop_map(move |b| BinaryRelation::from_fn(n, |i, j| b[i * n + j]))
        };
        (r(), r(), r())
    })
}

proptest! {
    #[test]
    fn intersection_laws((a, b, c) in relation_triple()) {
        prop_assert_eq!(BinaryRelation::intersect([&a, &a]).unwrap(), a.clone());
        prop_assert_eq!(BinaryRelation::intersect([&a, &b]).unwrap(), BinaryRelation::intersect([&b, &a]).unwrap());
        let ab = BinaryRelation::intersect([&a, &b]).unwrap();
        let bc = BinaryRelation::intersect([&b, &c]).unwrap();
        prop_assert_eq!(BinaryRelation::intersect([&ab, &c]).unwrap(), BinaryRelation::intersect([&a, &bc]).unwrap());
        prop_assert!(ab.is_subset(&a) && ab.is_subset(&b));
    }

    #[test]
    fn closure_gives_preorder_with_equivalence_core(r in relation(6)) {
        let closed = r.reflexive_transitive_closure();
        prop_assert!(closed.is_preorder());
        prop_assert!(r.is_subset(&closed));
        prop_assert!(closed.symmetric_core().is_equivalence());
        prop_assert_eq!(closed.reflexive_transitive_closure(), closed);
    }

    #[test]
    fn coarser_is_a_partial_order((a, b, c) in relation_triple()) {
        let le = |x: &BinaryRelation, y: &BinaryRelation| BinaryRelation::is_coarser(x, y).unwrap();
        prop_assert!(le(&a, &a));
        if le(&a, &b) && le(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if le(&a, &b) && le(&b, &c) {
            prop_assert!(le(&a, &c));
        }
    }

    #[test]
    fn transitive_reduction_regenerates_order(r in relation(6)) {
        let p = r.reflexive_transitive_closure();
        if p.is_partial_order() {
            prop_assert_eq!(p.transitive_reduction().reflexive_transitive_closure(), p);
        }
    }
}

fn semilattice_documents() -> Vec<Document> {
    let mut docs = Vec::new();
    for n in 1..=4 {
        for s in enumerate_semilattices(n).unwrap() {
            for r in s.enumerate_compatible_preorders().unwrap() {
                docs.push(Document::SpecSemilattice(SpecializationSemilattice::new(s.clone(), r).unwrap()));
            }
            docs.push(Document::Semilattice(s));
        }
    }
    docs
}

fn structure(n: usize, rel_bits: Vec<bool>, fun_values: Vec<usize>, named: bool) -> FiniteStructure {
    let sig = Signature::new(vec![("R".into(), 2)], vec![("f".into(), 1), ("c".into(), 0)]).unwrap();
    let tuples: Vec<Vec<usize>> = (0..n * n).filter(|&i| rel_bits[i]).map(|i| vec![i / n, i % n]).collect();
    let carrier =
        if named { Carrier::named((0..n).map(|i| format!("x{i}"))).unwrap() } else { Carrier::indexed(n).unwrap() };
    FiniteStructure::new(
        sig,
        carrier,
        vec![RelationTable::from_tuples(n, 2, tuples).unwrap()],
        vec![
            FunctionTable::new(n, 1, fun_values[..n].to_vec()).unwrap(),
            FunctionTable::new(n, 0, vec![fun_values[n]]).unwrap(),
        ],
    )
    .unwrap()
}

proptest! {
    #[test]
    fn canonical_semilattice_files_round_trip(i in 0usize..10_000) {
        let docs = semilattice_documents();
        let doc = &docs[i % docs.len()];
        let text = print(doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, doc);
        prop_assert_eq!(print(&back), text);
    }

    #[test]
    fn canonical_poset_files_round_trip(n in 1usize..=3, i in 0usize..1000, j in 0usize..1000) {
        let orders = enumerate_partial_orders(n).unwrap();
        let p = FinitePoset::indexed(orders[i % orders.len()].clone()).unwrap();
        let specs = compatible_preorders_poset(&p).unwrap();
        let doc = Document::SpecPoset(SpecializationPoset::new(p, specs[j % specs.len()].clone()).unwrap());
        prop_assert_eq!(parse(&print(&doc)).unwrap(), doc);
    }

    #[test]
    fn canonical_structure_files_round_trip(
        (n, bits, values) in (1usize..=3).prop_flat_map(|n| (
            Just(n),
            proptest::collection::vec(any::<bool>(), n * n),
            proptest::collection::vec(0..n, n + 1),
        )),
        named in any::<bool>(),
    ) {
        let doc = Document::Structure(structure(n, bits, values, named));
        let text = print(&doc);
        prop_assert_eq!(parse(&text).unwrap(), doc);
    }

    #[test]
    fn relation_files_round_trip(r in relation(5)) {
        let doc = Document::Relation(r);
        prop_assert_eq!(parse(&print(&doc)).unwrap(), doc);
    }
}
