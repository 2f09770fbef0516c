//! The `speclat` command-line front end.
//!
//! Exit codes: 0 success, 1 semantic failure or counterexample, 2 parse or
//! usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::correspondence::{omega, psi, verify_correspondence};
use crate::dot::{congruence_lattice, hasse, order_diagram};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::format::{print, read_file, Document};
use crate::partition::Partition;
use crate::poset_spec::{
    compatible_preorder_count_poset, enumerate_surjective_monotone_classes, equivalence_count,
    verify_poset_correspondence, FinitePoset,
};
use crate::quotient::{
    arrow_isomorphic, build_quotient, describe, kernel_preorder, morphism_mismatches, quotient_isomorphic, represent,
    verify_quotient_classes, verify_surjections_factor,
};
use crate::relational_model::{
    expansion_from_hom, quotient_from_expansion, semilattice_as_structure, verify_expansion_bijection, FiniteStructure,
    StructureHom,
};
use crate::relations::BinaryRelation;
use crate::semilattice::{enumerate_semilattices, Congruence, FiniteSemilattice, SpecializationSemilattice};

#[derive(Debug, Parser)]
#[command(name = "speclat", version, about = "Specialization semilattices, congruences and quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a file and check every axiom of its structure.
    Validate { file: PathBuf },
    /// List the congruences of a semilattice as partitions.
    Congruences {
        file: PathBuf,
        #[arg(long)]
        count: bool,
    },
    /// List the compatible preorders of a semilattice.
    Preorders {
        file: PathBuf,
        #[arg(long)]
        count: bool,
        /// Also derive them from the congruences and fail on any difference.
        #[arg(long)]
        cross_check: bool,
    },
    /// Congruence of a compatible preorder (its symmetric part).
    Psi { file: PathBuf, relfile: PathBuf },
    /// Compatible preorder of a congruence.
    Omega { file: PathBuf, relfile: PathBuf },
    /// Quotient of a semilattice by a congruence given in block syntax.
    Quotient {
        file: PathBuf,
        /// Partition such as `{0,1}{2}{3,4}`.
        #[arg(long = "by")]
        by: String,
    },
    /// Represent a specialization semilattice as a quotient and recover its preorder.
    Represent { file: PathBuf },
    /// Run one of the exhaustive verifiers on a file.
    Check {
        file: PathBuf,
        #[arg(long, value_parser = ["2.1", "2.3", "2.4", "2.5", "2.6", "3.2", "3.5"])]
        theorem: String,
    },
    /// Run a built-in example and compare against the expected outcome.
    Fixtures {
        #[arg(long, value_parser = ["2.8", "3.3"])]
        remark: String,
    },
    /// Print every labelled semilattice of a given size.
    Enumerate {
        #[arg(long)]
        semilattices: usize,
    },
    /// Expansion describing a surjective homomorphism.
    Expand { structfile: PathBuf, homfile: PathBuf },
    /// Quotient homomorphism described by an expansion.
    Collapse { expansionfile: PathBuf },
    /// Graphviz diagram of the order, or of the congruence lattice.
    Dot {
        file: PathBuf,
        #[arg(long)]
        congruence_lattice: bool,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = String::new();
    let result = execute(cli.command, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_syntactic() {
                2
            } else {
                1
            }
        }
    }
}

fn load(path: &Path) -> Result<Document> {
    read_file(path).map_err(|e| match e {
        Error::Parse { line, column, message } => {
            Error::Parse { line, column, message: format!("{}: {message}", path.display()) }
        }
        other => other,
    })
}

fn wrong_kind(path: &Path, doc: &Document, wanted: &str) -> Error {
    Error::Usage(format!("{} holds a {} but a {wanted} is required", path.display(), doc.kind()))
}

fn load_semilattice(path: &Path) -> Result<FiniteSemilattice> {
    match load(path)? {
        Document::Semilattice(s) => Ok(s),
        Document::SpecSemilattice(ss) => Ok(ss.base().clone()),
        doc => Err(wrong_kind(path, &doc, "semilattice")),
    }
}

fn load_spec_semilattice(path: &Path) -> Result<SpecializationSemilattice> {
    match load(path)? {
        Document::SpecSemilattice(ss) => Ok(ss),
        doc => Err(wrong_kind(path, &doc, "semilattice with a spec: section")),
    }
}

fn load_relation(path: &Path, n: usize) -> Result<BinaryRelation> {
    match load(path)? {
        Document::Relation(r) if r.size() == n => Ok(r),
        Document::Relation(r) => Err(Error::CarrierMismatch { left: n, right: r.size() }),
        doc => Err(wrong_kind(path, &doc, "relation")),
    }
}

fn load_structure(path: &Path) -> Result<FiniteStructure> {
    match load(path)? {
        Document::Structure(a) => Ok(a),
        Document::Semilattice(s) => Ok(semilattice_as_structure(&s)),
        doc => Err(wrong_kind(path, &doc, "relational structure")),
    }
}

/// Non-reflexive pairs as `a<=b`, or `-` when there are none.
fn show_pairs(r: &BinaryRelation, names: &[String]) -> String {
    let pairs: Vec<String> =
        r.pairs().filter(|(a, b)| a != b).map(|(a, b)| format!("{}<={}", names[a], names[b])).collect();
    if pairs.is_empty() {
        "-".into()
    } else {
        pairs.join(" ")
    }
}

fn show_map(map: &[usize]) -> String {
    map.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn verdict(out: &mut String, pass: bool) -> bool {
    out.push_str(if pass { "verdict: PASS\n" } else { "verdict: FAIL\n" });
    pass
}

macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        let _ = writeln!($out, $($arg)*);
    }};
}

fn execute(command: Command, out: &mut String) -> Result<bool> {
    match command {
        Command::Validate { file } => match load(&file) {
            Ok(doc) => {
                emit!(out, "OK {}", doc.kind());
                Ok(true)
            }
            Err(e) if e.is_syntactic() => Err(e),
            Err(e) => {
                emit!(out, "INVALID: {e}");
                Ok(false)
            }
        },
        Command::Congruences { file, count } => {
            let s = load_semilattice(&file)?;
            let cons = s.enumerate_congruences()?;
            if count {
                emit!(out, "{}", cons.len());
            } else {
                for c in &cons {
                    emit!(out, "{}", describe(&s, c));
                }
            }
            Ok(true)
        }
        Command::Preorders { file, count, cross_check } => {
            let s = load_semilattice(&file)?;
            let preorders =
                if cross_check { s.compatible_preorders_cross_checked()? } else { s.enumerate_compatible_preorders()? };
            if count {
                emit!(out, "{}", preorders.len());
            } else {
                for r in &preorders {
                    emit!(out, "{}", show_pairs(r, s.carrier().names()));
                }
            }
            if cross_check {
                emit!(out, "cross-check: PASS");
            }
            Ok(true)
        }
        Command::Psi { file, relfile } => {
            let s = load_semilattice(&file)?;
            let r = load_relation(&relfile, s.size())?;
            let theta = psi(&s, &r)?;
            out.push_str(&print(&Document::Relation(theta.into_relation())));
            Ok(true)
        }
        Command::Omega { file, relfile } => {
            let s = load_semilattice(&file)?;
            let r = load_relation(&relfile, s.size())?;
            let theta = Congruence::new(&s, r)?;
            out.push_str(&print(&Document::Relation(omega(&s, &theta)?)));
            Ok(true)
        }
        Command::Quotient { file, by } => {
            let s = load_semilattice(&file)?;
            let p = Partition::parse(&by, s.size()).map_err(|e| match e {
                Error::BadPartition(m) => Error::Usage(format!("bad partition {by:?}: {m}")),
                other => other,
            })?;
            let q = build_quotient(&s, &Congruence::from_partition(&s, &p)?)?;
            out.push_str(&print(&Document::Semilattice(q.target().clone())));
            emit!(out, "projection: {}", show_map(q.projection().map()));
            Ok(true)
        }
        Command::Represent { file } => {
            let ss = load_spec_semilattice(&file)?;
            let q = represent(&ss)?;
            emit!(out, "classes: {}", describe(ss.base(), q.theta()));
            out.push_str(&print(&Document::Semilattice(q.target().clone())));
            emit!(out, "projection: {}", show_map(q.projection().map()));
            let recovered = kernel_preorder(q.projection());
            emit!(out, "recovered: {}", show_pairs(&recovered, ss.base().carrier().names()));
            let equal = &recovered == ss.spec();
            emit!(out, "recovered equals spec: {}", yes_no(equal));
            Ok(equal)
        }
        Command::Check { file, theorem } => check(&file, &theorem, out),
        Command::Fixtures { remark } => match remark.as_str() {
            "2.8" => fixture_two_chains(out),
            _ => fixture_antichain(out),
        },
        Command::Enumerate { semilattices } => {
            for (i, s) in enumerate_semilattices(semilattices)?.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&print(&Document::Semilattice(s.clone())));
            }
            Ok(true)
        }
        Command::Expand { structfile, homfile } => {
            let dom = load_structure(&structfile)?;
            let (cod, map) = match load(&homfile)? {
                Document::HomTarget { cod, map } => (cod, map),
                doc => return Err(wrong_kind(&homfile, &doc, "homomorphism target with a map: line")),
            };
            let e = expansion_from_hom(&StructureHom::new(dom, cod, map)?)?;
            out.push_str(&print(&Document::Expansion(e)));
            Ok(true)
        }
        Command::Collapse { expansionfile } => {
            let e = match load(&expansionfile)? {
                Document::Expansion(e) => e,
                doc => return Err(wrong_kind(&expansionfile, &doc, "expansion")),
            };
            let h = quotient_from_expansion(&e)?;
            out.push_str(&print(&Document::HomTarget { cod: h.cod().clone(), map: h.map().to_vec() }));
            Ok(true)
        }
        Command::Dot { file, congruence_lattice: lattice } => {
            let doc = load(&file)?;
            let text = match (&doc, lattice) {
                (Document::Semilattice(s), false) => order_diagram(s),
                (Document::SpecSemilattice(ss), false) => order_diagram(ss.base()),
                (Document::Semilattice(s), true) => congruence_lattice(s)?,
                (Document::SpecSemilattice(ss), true) => congruence_lattice(ss.base())?,
                (Document::Poset(p), false) => hasse("order", p.carrier().names(), p.order()),
                (Document::SpecPoset(sp), false) => hasse("order", sp.base().carrier().names(), sp.base().order()),
                _ => return Err(wrong_kind(&file, &doc, if lattice { "semilattice" } else { "semilattice or poset" })),
            };
            out.push_str(&text);
            Ok(true)
        }
    }
}

fn check(file: &Path, which: &str, out: &mut String) -> Result<bool> {
    match which {
        "2.1" => {
            let s = load_semilattice(file)?;
            let rep = verify_correspondence(&s, &file.display().to_string())?;
            emit!(out, "{rep}");
            Ok(rep.passed())
        }
        "2.3" => {
            let s = load_semilattice(file)?;
            let rep = verify_quotient_classes(&s)?;
            emit!(out, "{rep}");
            Ok(rep.passed())
        }
        "2.4" => {
            let s = load_semilattice(file)?;
            let mut mismatches = 0;
            let preorders = s.enumerate_compatible_preorders()?;
            for r in &preorders {
                let q = represent(&SpecializationSemilattice::new(s.clone(), r.clone())?)?;
                if &kernel_preorder(q.projection()) != r {
                    mismatches += 1;
                    emit!(out, "mismatch: {}", show_pairs(r, s.carrier().names()));
                }
            }
            emit!(out, "preorders represented: {}", preorders.len());
            emit!(out, "mismatches: {mismatches}");
            Ok(verdict(out, mismatches == 0))
        }
        "2.5" => {
            let s = load_semilattice(file)?;
            let preorders = s.enumerate_compatible_preorders()?;
            let mut bad = 0;
            for r1 in &preorders {
                let ss1 = SpecializationSemilattice::new(s.clone(), r1.clone())?;
                for r2 in &preorders {
                    let ss2 = SpecializationSemilattice::new(s.clone(), r2.clone())?;
                    for m in morphism_mismatches(&ss1, &ss2)? {
                        bad += 1;
                        emit!(out, "mismatch: map {} between preorders {:?} and {:?}", show_map(&m), r1, r2);
                    }
                }
            }
            let n = s.size() as u64;
            emit!(out, "preorder pairs: {}", preorders.len() * preorders.len());
            emit!(out, "maps per pair: {}", n.pow(n as u32));
            emit!(out, "mismatches: {bad}");
            Ok(verdict(out, bad == 0))
        }
        "2.6" => {
            let s = load_semilattice(file)?;
            let (count, missing) = verify_surjections_factor(&s)?;
            for m in &missing {
                emit!(out, "no witness for map {}", show_map(m));
            }
            emit!(out, "surjections checked: {count}");
            emit!(out, "without witness: {}", missing.len());
            Ok(verdict(out, missing.is_empty()))
        }
        "3.2" => {
            let p = match load(file)? {
                Document::Poset(p) => p,
                Document::SpecPoset(sp) => sp.base().clone(),
                doc => return Err(wrong_kind(file, &doc, "poset")),
            };
            let rep = verify_poset_correspondence(&p)?;
            emit!(out, "{rep}");
            Ok(rep.passed())
        }
        _ => {
            let a = load_structure(file)?;
            let rep = verify_expansion_bijection(&a)?;
            emit!(out, "{rep}");
            Ok(rep.passed())
        }
    }
}

fn fixture_two_chains(out: &mut String) -> Result<bool> {
    let f = fixtures::two_chains();
    let s = &f.semilattice;
    let q1 = build_quotient(s, &f.theta)?.arrow();
    let q2 = build_quotient(s, &f.theta_prime)?.arrow();
    let quotient_iso = quotient_isomorphic(&q1, &q2)?;
    let arrow_iso = arrow_isomorphic(&q1, &q2);
    emit!(out, "semilattice: a1 < a2 < c, b1 < b2 < c");
    emit!(out, "theta:  {}", describe(s, &f.theta));
    emit!(out, "theta': {}", describe(s, &f.theta_prime));
    emit!(out, "quotient-isomorphic: {}", yes_no(quotient_iso.is_some()));
    emit!(out, "arrow-isomorphic: {}", yes_no(arrow_iso.is_some()));
    emit!(out, "expected: quotient-isomorphic NO, arrow-isomorphic YES");
    if let Some((sigma, tau)) = &arrow_iso {
        let names = s.carrier().names();
        let sigma: Vec<String> =
            sigma.iter().enumerate().map(|(a, &b)| format!("{}->{}", names[a], names[b])).collect();
        emit!(out, "source automorphism: {}", sigma.join(" "));
        emit!(out, "target isomorphism: {}", show_map(tau));
    }
    Ok(verdict(out, quotient_iso.is_none() && arrow_iso.is_some()))
}

fn fixture_antichain(out: &mut String) -> Result<bool> {
    let p: FinitePoset = fixtures::antichain_pair();
    let classes = enumerate_surjective_monotone_classes(&p)?;
    let equivalences = equivalence_count(p.size())?;
    let preorders = compatible_preorder_count_poset(&p)?;
    let rep = verify_poset_correspondence(&p)?;
    emit!(out, "poset: antichain a, b");
    emit!(out, "classes: {}", classes.len());
    emit!(out, "equivalences: {equivalences}");
    emit!(out, "compatible preorders: {preorders}");
    emit!(out, "expected: classes 4, equivalences 2, compatible preorders 4");
    for c in &classes {
        emit!(out, "class: {} ({} labelled maps)", c.representative, c.members);
    }
    emit!(out, "preorders biject with classes: {}", yes_no(rep.passed()));
    Ok(verdict(out, classes.len() == 4 && equivalences == 2 && preorders == 4 && rep.passed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("speclat").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn fixtures_report_expected_values() {
        let (code, out, _) = run_args(&["fixtures", "--remark", "2.8"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("quotient-isomorphic: NO\narrow-isomorphic: YES\n"));
        let (code, out, _) = run_args(&["fixtures", "--remark", "3.3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("classes: 4\nequivalences: 2\ncompatible preorders: 4\n"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["fixtures", "--remark", "9.9"]).0, 2);
        assert_eq!(run_args(&["nonsense"]).0, 2);
        assert_eq!(run_args(&["validate", "/nonexistent/file"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn enumerate_prints_blocks() {
        let (code, out, _) = run_args(&["enumerate", "--semilattices", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "semilattice 2\njoin:\n0 0\n0 1\n\nsemilattice 2\njoin:\n0 1\n1 1\n");
        assert_eq!(run_args(&["enumerate", "--semilattices", "9"]).0, 1);
    }
}
