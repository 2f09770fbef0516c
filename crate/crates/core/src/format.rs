//! Line-oriented text format for every structure the crate handles.
//!
//! ```text
//! # comment
//! semilattice 3          | poset N | relation N | relational N
//! names: a b c           (optional)
//! join:                  (semilattice only, N rows)
//! 0 1 2
//! 1 1 2
//! 2 2 2
//! spec:                  (optional; also order: for posets, theta:)
//! 1 0
//! end
//! ```
//!
//! Elements are always written as indices. Inside `order:`, `spec:` and
//! `theta:` the reflexive pairs are implied; `pairs:` in a relation file
//! lists every pair. Relational files declare `rel NAME ARITY` (tuple lines)
//! and `fun NAME ARITY` (`args -> value` lines), each closed by `end`.
//! An expansion adds `theta:` and one `star NAME` section per relation; a
//! homomorphism target adds `map: i j k ...`.

use std::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::poset_spec::{FinitePoset, SpecializationPoset};
use crate::relational_model::{
    all_tuples, AppropriateExpansion, FiniteStructure, FunctionTable, RelationTable, Signature,
};
use crate::relations::{BinaryRelation, Carrier};
use crate::semilattice::{FiniteSemilattice, SpecializationSemilattice};

/// A parsed file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Semilattice(FiniteSemilattice),
    SpecSemilattice(SpecializationSemilattice),
    Poset(FinitePoset),
    SpecPoset(SpecializationPoset),
    Relation(BinaryRelation),
    Structure(FiniteStructure),
    Expansion(AppropriateExpansion),
    /// A codomain structure together with a map into it.
    HomTarget {
        cod: FiniteStructure,
        map: Vec<usize>,
    },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Semilattice(_) => "semilattice",
            Document::SpecSemilattice(_) => "spec-semilattice",
            Document::Poset(_) => "poset",
            Document::SpecPoset(_) => "spec-poset",
            Document::Relation(_) => "relation",
            Document::Structure(_) => "relational",
            Document::Expansion(_) => "expansion",
            Document::HomTarget { .. } => "hom",
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (j, c) in content.char_indices().chain([(content.len(), ' ')]) {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(j),
                (true, Some(s)) => {
                    tokens.push(Token { text: &content[s..j], line: i + 1, column: content[..s].chars().count() + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            lines.push(Line { number: i + 1, tokens });
        }
    }
    lines
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn next(&mut self, wanted: &str) -> Result<&Line<'a>> {
        match self.lines.get(self.pos) {
            Some(l) => {
                self.pos += 1;
                Ok(l)
            }
            None => Err(err(self.last_line + 1, 1, format!("unexpected end of file, expected {wanted}"))),
        }
    }
}

fn index(t: &Token, n: usize) -> Result<usize> {
    let v: usize =
        t.text.parse().map_err(|_| err(t.line, t.column, format!("expected an element index, found {:?}", t.text)))?;
    if v >= n {
        return Err(err(t.line, t.column, format!("index {v} out of range for {n} elements")));
    }
    Ok(v)
}

fn count(t: &Token, what: &str) -> Result<usize> {
    t.text.parse().map_err(|_| err(t.line, t.column, format!("expected {what}, found {:?}", t.text)))
}

fn expect_len(line: &Line, len: usize, what: &str) -> Result<()> {
    if line.tokens.len() != len {
        let t = line.tokens.get(len).unwrap_or(&line.tokens[0]);
        return Err(err(line.number, t.column, format!("{what}: expected {len} fields, found {}", line.tokens.len())));
    }
    Ok(())
}

/// Reads `i j` lines up to `end`.
fn pairs_section(cur: &mut Cursor, n: usize) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    loop {
        let line = cur.next("`end`")?;
        if line.tokens[0].text == "end" {
            expect_len(line, 1, "end")?;
            return Ok(out);
        }
        expect_len(line, 2, "pair")?;
        out.push((index(&line.tokens[0], n)?, index(&line.tokens[1], n)?));
    }
}

fn tuple_section(cur: &mut Cursor, n: usize, arity: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    loop {
        let line = cur.next("`end`")?;
        if line.tokens[0].text == "end" {
            expect_len(line, 1, "end")?;
            return Ok(out);
        }
        expect_len(line, arity, "tuple")?;
        out.push(line.tokens.iter().map(|t| index(t, n)).collect::<Result<_>>()?);
    }
}

type Entries = Vec<(Vec<usize>, usize)>;

fn function_section(cur: &mut Cursor, n: usize, arity: usize) -> Result<Entries> {
    let mut out = Vec::new();
    loop {
        let line = cur.next("`end`")?;
        if line.tokens[0].text == "end" {
            expect_len(line, 1, "end")?;
            return Ok(out);
        }
        expect_len(line, arity + 2, "function entry")?;
        let arrow = &line.tokens[arity];
        if arrow.text != "->" {
            return Err(err(arrow.line, arrow.column, format!("expected `->`, found {:?}", arrow.text)));
        }
        let args = line.tokens[..arity].iter().map(|t| index(t, n)).collect::<Result<_>>()?;
        out.push((args, index(&line.tokens[arity + 1], n)?));
    }
}

fn reflexive(n: usize, pairs: Vec<(usize, usize)>) -> BinaryRelation {
    let mut r = BinaryRelation::identity(n);
    for (a, b) in pairs {
        r.insert(a, b);
    }
    r
}

fn symbol<'a>(line: &Line<'a>, keyword: &str, with_arity: bool) -> Result<(Token<'a>, usize)> {
    expect_len(line, if with_arity { 3 } else { 2 }, keyword)?;
    let name = line.tokens[1];
    let arity = if with_arity { count(&line.tokens[2], "an arity")? } else { 0 };
    Ok((name, arity))
}

/// Parses any document; semantic checks run after the syntax is accepted.
pub fn parse(text: &str) -> Result<Document> {
    let lines = tokenize(text);
    let last_line = text.lines().count();
    let mut cur = Cursor { lines, pos: 0, last_line };
    let header = cur.next("a header")?;
    let head = header.tokens[0];
    let kind = head.text;
    if !["semilattice", "poset", "relation", "relational"].contains(&kind) {
        return Err(err(head.line, head.column, format!("unknown header {kind:?}")));
    }
    expect_len(header, 2, "header")?;
    let n = count(&header.tokens[1], "a carrier size")?;
    if n == 0 {
        return Err(err(header.number, header.tokens[1].column, "carrier must have at least one element"));
    }
    let header_line = header.number;

    let mut carrier = Carrier::indexed(n).map_err(|e| err(header_line, header.tokens[1].column, e.to_string()))?;
    if let Some(line) = cur.peek() {
        if line.tokens[0].text == "names:" {
            let line = cur.next("names")?;
            let names: Vec<&str> = line.tokens[1..].iter().map(|t| t.text).collect();
            if names.len() != n {
                return Err(err(line.number, 1, format!("expected {n} names, found {}", names.len())));
            }
            carrier = Carrier::named(names).map_err(|e| err(line.number, 1, e.to_string()))?;
        }
    }

    match kind {
        "semilattice" => parse_semilattice(&mut cur, carrier),
        "poset" => parse_poset(&mut cur, carrier),
        "relation" => {
            let line = cur.next("`pairs:`")?;
            section_header(line, "pairs:")?;
            let r = BinaryRelation::from_pairs(n, pairs_section(&mut cur, n)?)?;
            finish(&cur)?;
            Ok(Document::Relation(r))
        }
        _ => parse_relational(&mut cur, carrier, header_line),
    }
}

fn section_header(line: &Line, keyword: &str) -> Result<()> {
    let t = line.tokens[0];
    if t.text != keyword {
        return Err(err(t.line, t.column, format!("expected `{keyword}`, found {:?}", t.text)));
    }
    expect_len(line, 1, keyword)
}

fn finish(cur: &Cursor) -> Result<()> {
    match cur.peek() {
        Some(line) => {
            let t = line.tokens[0];
            Err(err(t.line, t.column, format!("unexpected {:?}", t.text)))
        }
        None => Ok(()),
    }
}

fn optional_pairs(cur: &mut Cursor, keyword: &str, n: usize) -> Result<Option<BinaryRelation>> {
    match cur.peek() {
        Some(line) if line.tokens[0].text == keyword => {
            let line = cur.next(keyword)?;
            section_header(line, keyword)?;
            Ok(Some(reflexive(n, pairs_section(cur, n)?)))
        }
        _ => Ok(None),
    }
}

fn parse_semilattice(cur: &mut Cursor, carrier: Carrier) -> Result<Document> {
    let n = carrier.size();
    let line = cur.next("`join:`")?;
    section_header(line, "join:")?;
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let row = cur.next("a join row")?;
        expect_len(row, n, "join row")?;
        table.push(row.tokens.iter().map(|t| index(t, n)).collect::<Result<Vec<_>>>()?);
    }
    let spec = optional_pairs(cur, "spec:", n)?;
    finish(cur)?;
    let s = FiniteSemilattice::new(carrier, table)?;
    Ok(match spec {
        Some(spec) => Document::SpecSemilattice(SpecializationSemilattice::new(s, spec)?),
        None => Document::Semilattice(s),
    })
}

fn parse_poset(cur: &mut Cursor, carrier: Carrier) -> Result<Document> {
    let n = carrier.size();
    let line = cur.next("`order:`")?;
    section_header(line, "order:")?;
    let order = reflexive(n, pairs_section(cur, n)?);
    let spec = optional_pairs(cur, "spec:", n)?;
    finish(cur)?;
    let p = FinitePoset::new(carrier, order)?;
    Ok(match spec {
        Some(spec) => Document::SpecPoset(SpecializationPoset::new(p, spec)?),
        None => Document::Poset(p),
    })
}

fn parse_relational(cur: &mut Cursor, carrier: Carrier, header_line: usize) -> Result<Document> {
    let n = carrier.size();
    let mut rels: Vec<(String, usize, Vec<Vec<usize>>)> = Vec::new();
    let mut funs: Vec<(String, usize, Entries)> = Vec::new();
    let mut theta = None;
    let mut stars: Vec<(Token, Vec<Vec<usize>>)> = Vec::new();
    let mut map = None;
    let mut seen = std::collections::BTreeSet::new();
    while let Some(line) = cur.peek() {
        let t = line.tokens[0];
        let stage_error =
            |what: &str| err(t.line, t.column, format!("`{what}` must come before theta/star/map sections"));
        match t.text {
            "rel" | "fun" => {
                if theta.is_some() || !stars.is_empty() || map.is_some() {
                    return Err(stage_error(t.text));
                }
                let line = cur.next(t.text)?;
                let (name, arity) = symbol(line, t.text, true)?;
                if !seen.insert(name.text) {
                    return Err(err(name.line, name.column, format!("duplicate symbol {:?}", name.text)));
                }
                if t.text == "rel" {
                    let tuples = tuple_section(cur, n, arity)?;
                    rels.push((name.text.to_string(), arity, tuples));
                } else {
                    let entries = function_section(cur, n, arity)?;
                    funs.push((name.text.to_string(), arity, entries));
                }
            }
            "theta:" => {
                if theta.is_some() || map.is_some() {
                    return Err(err(t.line, t.column, "unexpected `theta:`"));
                }
                let line = cur.next("theta")?;
                section_header(line, "theta:")?;
                theta = Some(reflexive(n, pairs_section(cur, n)?));
            }
            "star" => {
                if map.is_some() {
                    return Err(err(t.line, t.column, "unexpected `star`"));
                }
                let line = cur.next("star")?;
                let (name, _) = symbol(line, "star", false)?;
                let Some(arity) = rels.iter().find(|r| r.0 == name.text).map(|r| r.1) else {
                    return Err(err(name.line, name.column, format!("star for unknown relation {:?}", name.text)));
                };
                if stars.iter().any(|(s, _)| s.text == name.text) {
                    return Err(err(name.line, name.column, format!("duplicate star section for {:?}", name.text)));
                }
                stars.push((name, tuple_section(cur, n, arity)?));
            }
            "map:" => {
                if map.is_some() || theta.is_some() || !stars.is_empty() {
                    return Err(err(t.line, t.column, "unexpected `map:`"));
                }
                let line = cur.next("map")?;
                let values: Vec<usize> =
                    line.tokens[1..].iter().map(|t| count(t, "a map value")).collect::<Result<_>>()?;
                map = Some(values);
            }
            other => return Err(err(t.line, t.column, format!("unexpected {other:?}"))),
        }
    }
    let signature = Signature::new(
        rels.iter().map(|r| (r.0.clone(), r.1)).collect(),
        funs.iter().map(|f| (f.0.clone(), f.1)).collect(),
    )
    .map_err(|e| err(header_line, 1, e.to_string()))?;
    let relations = rels
        .iter()
        .map(|(_, arity, tuples)| RelationTable::from_tuples(n, *arity, tuples.clone()))
        .collect::<Result<Vec<_>>>()?;
    let functions = funs
        .into_iter()
        .map(|(name, arity, entries)| FunctionTable::from_entries(&name, n, arity, entries))
        .collect::<Result<Vec<_>>>()?;
    let structure = FiniteStructure::new(signature, carrier, relations, functions)?;
    if let Some(map) = map {
        return Ok(Document::HomTarget { cod: structure, map });
    }
    let Some(theta) = theta else {
        if let Some((t, _)) = stars.first() {
            return Err(err(t.line, t.column, "star section without `theta:`"));
        }
        return Ok(Document::Structure(structure));
    };
    let mut starred = Vec::with_capacity(rels.len());
    for (name, arity, _) in &rels {
        let Some((_, tuples)) = stars.iter().find(|(s, _)| s.text == name) else {
            return Err(err(cur.last_line + 1, 1, format!("missing `star {name}` section")));
        };
        starred.push(RelationTable::from_tuples(n, *arity, tuples.clone())?);
    }
    Ok(Document::Expansion(AppropriateExpansion::new(structure, theta, starred)?))
}

fn write_header(out: &mut String, kind: &str, carrier: &Carrier) {
    let _ = writeln!(out, "{kind} {}", carrier.size());
    if !carrier.has_default_names() {
        let _ = writeln!(out, "names: {}", carrier.names().join(" "));
    }
}

fn write_pairs(out: &mut String, keyword: &str, r: &BinaryRelation, skip_diagonal: bool) {
    let _ = writeln!(out, "{keyword}");
    for (a, b) in r.pairs().filter(|&(a, b)| !(skip_diagonal && a == b)) {
        let _ = writeln!(out, "{a} {b}");
    }
    out.push_str("end\n");
}

fn write_join(out: &mut String, s: &FiniteSemilattice) {
    out.push_str("join:\n");
    for row in s.table() {
        let _ = writeln!(out, "{}", row.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    }
}

fn write_tuples(out: &mut String, table: &RelationTable) {
    for t in table.tuples() {
        let _ = writeln!(out, "{}", t.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    }
    out.push_str("end\n");
}

fn write_structure(out: &mut String, a: &FiniteStructure) {
    write_header(out, "relational", a.carrier());
    let n = a.size();
    for (sym, table) in a.signature().relations().iter().zip(a.relations()) {
        let _ = writeln!(out, "rel {} {}", sym.name, sym.arity);
        write_tuples(out, table);
    }
    for (sym, table) in a.signature().functions().iter().zip(a.functions()) {
        let _ = writeln!(out, "fun {} {}", sym.name, sym.arity);
        for args in all_tuples(n, sym.arity) {
            let value = table.apply(&args);
            let args: Vec<String> = args.iter().map(usize::to_string).collect();
            if args.is_empty() {
                let _ = writeln!(out, "-> {value}");
            } else {
                let _ = writeln!(out, "{} -> {value}", args.join(" "));
            }
        }
        out.push_str("end\n");
    }
}

/// Canonical text of a document; `parse(&print(d)) == d`.
pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Semilattice(s) => {
            write_header(&mut out, "semilattice", s.carrier());
            write_join(&mut out, s);
        }
        Document::SpecSemilattice(ss) => {
            write_header(&mut out, "semilattice", ss.base().carrier());
            write_join(&mut out, ss.base());
            write_pairs(&mut out, "spec:", ss.spec(), true);
        }
        Document::Poset(p) => {
            write_header(&mut out, "poset", p.carrier());
            write_pairs(&mut out, "order:", p.order(), true);
        }
        Document::SpecPoset(sp) => {
            write_header(&mut out, "poset", sp.base().carrier());
            write_pairs(&mut out, "order:", sp.base().order(), true);
            write_pairs(&mut out, "spec:", sp.spec(), true);
        }
        Document::Relation(r) => {
            let _ = writeln!(out, "relation {}", r.size());
            write_pairs(&mut out, "pairs:", r, false);
        }
        Document::Structure(a) => write_structure(&mut out, a),
        Document::Expansion(e) => {
            write_structure(&mut out, e.base());
            write_pairs(&mut out, "theta:", e.theta(), true);
            for (sym, star) in e.base().signature().relations().iter().zip(e.starred()) {
                let _ = writeln!(out, "star {}", sym.name);
                write_tuples(&mut out, star);
            }
        }
        Document::HomTarget { cod, map } => {
            write_structure(&mut out, cod);
            let _ = writeln!(out, "map: {}", map.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
        }
    }
    out
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

/// Reads and parses a file, reporting I/O failures as usage errors.
pub fn read_file(path: &std::path::Path) -> Result<Document> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const TWO_CHAINS: &str = "\
# two chains under a common top
semilattice 5
names: a1 a2 b1 b2 c
join:
0 1 4 4 4
1 1 4 4 4
4 4 2 3 4
4 4 3 3 4
4 4 4 4 4
";

    #[test]
    fn parses_the_fixture() {
        let doc = parse(TWO_CHAINS).unwrap();
        let Document::Semilattice(s) = &doc else { panic!("{doc:?}") };
        assert_eq!(s, &fixtures::two_chains().semilattice);
        assert_eq!(print(&doc), TWO_CHAINS.lines().skip(1).map(|l| format!("{l}\n")).collect::<String>());
    }

    #[test]
    fn syntax_errors_have_positions() {
        let e = parse("semilattice 2\njoin:\n0 1\n1 x\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 4, column: 3, message: "expected an element index, found \"x\"".into() });
        let e = parse("semilattice 2\njoin:\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }), "{e}");
        let e = parse("lattice 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 1, .. }));
        let e = parse("poset 2\norder:\n0 2\nend\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, column: 3, .. }), "{e}");
        assert!(parse("").unwrap_err().is_syntactic());
    }

    #[test]
    fn semantic_errors_are_not_syntactic() {
        let e = parse("semilattice 2\njoin:\n0 0\n1 1\n").unwrap_err();
        assert!(matches!(e, Error::Commutativity { .. }));
        assert!(!e.is_syntactic());
        let e = parse("semilattice 2\njoin:\n0 1\n1 1\nspec:\nend\n").unwrap_err();
        assert_eq!(e, Error::NotCoarser { a: 0, b: 1 });
        let d = parse("semilattice 2\njoin:\n0 1\n1 1\nspec:\n0 1\nend\n").unwrap();
        assert_eq!(d.kind(), "spec-semilattice");
    }

    #[test]
    fn relational_round_trip() {
        let text = "\
relational 2
rel R 1
0
end
fun f 2
0 0 -> 0
0 1 -> 1
1 0 -> 1
1 1 -> 1
end
fun c 0
-> 0
end
theta:
end
star R
0
end
";
        let doc = parse(text).unwrap();
        assert_eq!(doc.kind(), "expansion");
        assert_eq!(print(&doc), text);
        let partial = "relational 2\nfun f 1\n0 -> 1\nend\n";
        assert_eq!(parse(partial).unwrap_err(), Error::PartialFunction { name: "f".into(), args: vec![1] });
        let hom = "relational 1\nrel R 1\n0\nend\nmap: 0 0\n";
        assert_eq!(print(&parse(hom).unwrap()), hom);
    }

    #[test]
    fn poset_and_relation_round_trip() {
        for text in ["poset 2\nnames: a b\norder:\nend\nspec:\n0 1\nend\n", "relation 2\npairs:\n0 0\n1 0\nend\n"] {
            assert_eq!(print(&parse(text).unwrap()), text);
        }
    }
}
