//! Library results against independent brute-force computations that share
//! no code with the enumerators under test.

use speclattice::correspondence::{omega, psi};
use speclattice::semilattice::{enumerate_semilattices, FiniteSemilattice, SpecializationSemilattice};
use speclattice::BinaryRelation;

/// Every idempotent commutative associative table on `n` elements.
fn brute_force_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let total = n.pow(cells.len() as u32);
    for mut code in 0..total {
        let mut t: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| if i == j { i } else { 0 }).collect()).collect();
        for &(i, j) in &cells {
            t[i][j] = code % n;
            t[j][i] = code % n;
            code /= n;
        }
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
        if assoc {
            out.push(t);
        }
    }
    out
}

#[test]
fn corpus_matches_brute_force_tables() {
    for n in 1..=4 {
        let mut expected = brute_force_tables(n);
        expected.sort();
        let mut got: Vec<Vec<Vec<usize>>> = enumerate_semilattices(n).unwrap().iter().map(|s| s.table()).collect();
        got.sort();
        assert_eq!(got, expected, "n = {n}");
    }
}

fn all_relations(n: usize) -> impl Iterator<Item = Vec<Vec<bool>>> {
    (0u32..1 << (n * n))
        .map(move |bits| (0..n).map(|i| (0..n).map(|j| bits >> (i * n + j) & 1 == 1).collect()).collect())
}

fn to_relation(m: &[Vec<bool>]) -> BinaryRelation {
    BinaryRelation::from_fn(m.len(), |i, j| m[i][j])
}

fn is_preorder(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    (0..n).all(|i| m[i][i]) && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(m[a][b] && m[b][c]) || m[a][c])))
}

fn oracle_compatible(s: &FiniteSemilattice, m: &[Vec<bool>]) -> bool {
    let n = m.len();
    is_preorder(m)
        && (0..n).all(|a| (0..n).all(|b| s.join(a, b) != b || m[a][b]))
        && (0..n).all(|a| (0..n).all(|a1| (0..n).all(|b| !(m[a][b] && m[a1][b]) || m[s.join(a, a1)][b])))
}

fn oracle_congruence(s: &FiniteSemilattice, m: &[Vec<bool>]) -> bool {
    let n = m.len();
    is_preorder(m)
        && (0..n).all(|a| (0..n).all(|b| m[a][b] == m[b][a]))
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !m[a][b] || m[s.join(a, c)][s.join(b, c)])))
}

#[test]
fn preorders_and_congruences_match_brute_force() {
    for n in 1..=3 {
        for s in enumerate_semilattices(n).unwrap() {
            let mut spec: Vec<BinaryRelation> =
                all_relations(n).filter(|m| oracle_compatible(&s, m)).map(|m| to_relation(&m)).collect();
            let mut cons: Vec<BinaryRelation> =
                all_relations(n).filter(|m| oracle_congruence(&s, m)).map(|m| to_relation(&m)).collect();
            spec.sort();
            cons.sort();
            let mut got_spec = s.enumerate_compatible_preorders().unwrap();
            got_spec.sort();
            let mut got_cons: Vec<BinaryRelation> =
                s.enumerate_congruences().unwrap().into_iter().map(|c| c.into_relation()).collect();
            got_cons.sort();
            assert_eq!(got_spec, spec);
            assert_eq!(got_cons, cons);
            assert_eq!(spec.len(), cons.len());
            for r in &spec {
                let core = BinaryRelation::from_fn(n, |a, b| r.contains(a, b) && r.contains(b, a));
                assert_eq!(psi(&s, r).unwrap().relation(), &core);
                let back = omega(&s, &psi(&s, r).unwrap()).unwrap();
                assert_eq!(&back, r);
            }
        }
    }
}

#[test]
fn two_chain_preorders() {
    let s = FiniteSemilattice::from_table(vec![vec![0, 1], vec![1, 1]]).unwrap();
    let preorders = s.enumerate_compatible_preorders().unwrap();
    assert_eq!(preorders, vec![s.induced_order(), BinaryRelation::total(2)]);
}

#[test]
fn derived_monotonicity_holds_everywhere() {
    for n in 1..=4 {
        for s in enumerate_semilattices(n).unwrap() {
            for r in s.enumerate_compatible_preorders().unwrap() {
                let ss = SpecializationSemilattice::new(s.clone(), r.clone()).unwrap();
                assert!(ss.check_derived_monotonicity());
                // direct quadruple sweep, independent of the library method
                let ok = (0..n).all(|a| {
                    (0..n).all(|b| {
                        (0..n).all(|a1| {
                            (0..n).all(|b1| {
                                !(r.contains(a, b) && r.contains(a1, b1)) || r.contains(s.join(a, a1), s.join(b, b1))
                            })
                        })
                    })
                });
                assert!(ok);
            }
        }
    }
}
