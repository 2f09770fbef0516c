use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn speclat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_speclat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_reports_witness() {
    let ok = speclat(&["validate", &data("two_chains.txt")]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "OK semilattice\n");

    let bad = speclat(&["validate", &data("not_associative.txt")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("associativity fails at (0, 0, 1)"), "{}", stdout(&bad));

    let syntax = speclat(&["validate", &data("bad_syntax.txt")]);
    assert_eq!(syntax.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&syntax.stderr).contains("line 4, column 3"));
}

#[test]
fn counts() {
    let o = speclat(&["congruences", "--count", &data("two_chains.txt")]);
    assert_eq!(stdout(&o), "16\n");
    let o = speclat(&["preorders", "--count", "--cross-check", &data("two_chains.txt")]);
    assert_eq!(stdout(&o), "16\ncross-check: PASS\n");
    let o = speclat(&["congruences", &data("chain3.txt")]);
    assert_eq!(stdout(&o), "{0,1,2}\n{0,1}{2}\n{0}{1,2}\n{0}{1}{2}\n");
}

#[test]
fn psi_and_omega_are_inverse_on_files() {
    let theta = speclat(&["psi", &data("two_chains.txt"), &data("spec_relation.txt")]);
    assert_eq!(theta.status.code(), Some(0));
    assert_eq!(
        stdout(&theta),
        std::fs::read_to_string(data("theta.txt")).unwrap().replace("# collapses a1 and a2\n", "")
    );
    let spec = speclat(&["omega", &data("two_chains.txt"), &data("theta.txt")]);
    assert_eq!(stdout(&spec), std::fs::read_to_string(data("spec_relation.txt")).unwrap());
    // theta itself is not a compatible preorder: it does not contain the order
    assert_eq!(speclat(&["psi", &data("two_chains.txt"), &data("theta.txt")]).status.code(), Some(1));
}

#[test]
fn quotient_and_represent() {
    let o = speclat(&["quotient", &data("two_chains.txt"), "--by", "{0,1}{2}{3}{4}"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("projection: 0 0 1 2 3\n"));
    assert_eq!(speclat(&["quotient", &data("two_chains.txt"), "--by", "{0,2}{1}{3}{4}"]).status.code(), Some(1));
    assert_eq!(speclat(&["quotient", &data("two_chains.txt"), "--by", "{0,1"]).status.code(), Some(2));
    let o = speclat(&["represent", &data("two_chains_spec.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("recovered equals spec: YES"));
}

#[test]
fn checks_pass_on_fixtures() {
    for t in ["2.1", "2.3", "2.4", "2.5", "2.6", "3.5"] {
        let o = speclat(&["check", &data("diamond.txt"), "--theorem", t]);
        assert_eq!(o.status.code(), Some(0), "{t}: {}", stdout(&o));
        assert!(stdout(&o).contains("verdict: PASS"));
    }
    for (f, t) in [("antichain.txt", "3.2"), ("magma.txt", "3.5"), ("unary.txt", "3.5")] {
        let o = speclat(&["check", &data(f), "--theorem", t]);
        assert_eq!(o.status.code(), Some(0), "{f} {t}: {}", stdout(&o));
    }
    assert_eq!(speclat(&["check", &data("diamond.txt"), "--theorem", "3.2"]).status.code(), Some(2));
}

#[test]
fn expand_then_collapse_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let e = speclat(&["expand", &data("unary.txt"), &data("collapse_target.txt")]);
    assert_eq!(e.status.code(), Some(0));
    let path = dir.path().join("e.txt");
    std::fs::write(&path, &e.stdout).unwrap();
    let c = speclat(&["collapse", path.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(stdout(&c), "relational 1\nnames: {0,1}\nrel R 1\n0\nend\nmap: 0 0\n");
}

#[test]
fn expand_rejects_non_homomorphism() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("t.txt");
    // R holds at 0 but not at the image of 0 under the swap
    std::fs::write(&target, "relational 2\nrel R 1\n0\nend\nmap: 1 0\n").unwrap();
    let o = speclat(&["expand", &data("unary.txt"), target.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a homomorphism"));
}

#[test]
fn dot_output() {
    let o = speclat(&["dot", &data("chain3.txt")]);
    assert_eq!(
        stdout(&o),
        "digraph \"order\" {\n  rankdir=BT;\n  node [shape=plaintext];\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n  n2 [label=\"2\"];\n  n0 -> n1;\n  n1 -> n2;\n}\n"
    );
    let o = speclat(&["dot", "--congruence-lattice", &data("two_chains.txt")]);
    assert_eq!(stdout(&o).matches("[label=").count(), 16);
}

#[test]
fn enumerate_output_parses_back() {
    let o = speclat(&["enumerate", "--semilattices", "3"]);
    let text = stdout(&o);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 9);
    for b in blocks {
        let doc = speclattice::format::parse(b).unwrap();
        assert_eq!(doc.kind(), "semilattice");
    }
}
