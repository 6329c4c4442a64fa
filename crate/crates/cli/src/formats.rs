//! File formats: Coxeter system files (JSON or TOML), canonical element
//! serialization, DOT and JSON exports for orbits and interval posets, and
//! the presentation text/GAP renderings with a round-trip parser.

use anyhow::{anyhow, bail, Context};
use serde::Deserialize;
use serde_json::{json, Value};

use dual_artin_core::braid::BraidWord;
use dual_artin_core::coxeter::{CoxeterEntry, CoxeterMatrix, CoxeterSystem, GroupElement};
use dual_artin_core::hurwitz::OrbitGraph;
use dual_artin_core::interval::{IntervalPoset, Presentation, PresentationStyle};

/// One matrix entry in a system file: a positive integer or the string
/// "inf".
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum EntryRepr {
    Num(u32),
    Word(String),
}

#[derive(Debug, Clone, Deserialize)]
struct SystemFile {
    matrix: Vec<Vec<EntryRepr>>,
    /// 1-based generator order; defaults to 1..n.
    #[serde(default)]
    order: Option<Vec<usize>>,
}

fn entry_from_repr(e: &EntryRepr) -> anyhow::Result<CoxeterEntry> {
    match e {
        EntryRepr::Num(m) => Ok(CoxeterEntry::Finite(*m)),
        EntryRepr::Word(w) if w == "inf" => Ok(CoxeterEntry::Infinity),
        EntryRepr::Word(w) => bail!("matrix entry must be an integer or \"inf\", got {w:?}"),
    }
}

/// Parse a Coxeter system from JSON or TOML text.
pub fn parse_system(text: &str) -> anyhow::Result<CoxeterMatrix> {
    let file: SystemFile = match serde_json::from_str(text) {
        Ok(f) => f,
        Err(json_err) => toml::from_str(text)
            .map_err(|toml_err| {
                anyhow!("not valid JSON ({json_err}) nor valid TOML ({toml_err})")
            })?,
    };
    let rows: Vec<Vec<CoxeterEntry>> = file
        .matrix
        .iter()
        .map(|row| row.iter().map(entry_from_repr).collect())
        .collect::<anyhow::Result<_>>()?;
    let n = rows.len();
    let order = match file.order {
        None => (0..n).collect(),
        Some(o) => {
            let mut out = Vec::with_capacity(o.len());
            for v in o {
                if v == 0 {
                    bail!("order entries are 1-based");
                }
                out.push(v - 1);
            }
            out
        }
    };
    CoxeterMatrix::new(rows, order).map_err(|e| anyhow!("invalid matrix: {e}"))
}

pub fn load_system(path: &std::path::Path) -> anyhow::Result<CoxeterMatrix> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_system(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Canonical JSON rendering of a system; used for cache keys and as the
/// output format of `product`.
pub fn system_json(matrix: &CoxeterMatrix) -> Value {
    let rows: Vec<Value> = (0..matrix.rank())
        .map(|i| {
            (0..matrix.rank())
                .map(|j| match matrix.entry(i, j) {
                    CoxeterEntry::Finite(m) => json!(m),
                    CoxeterEntry::Infinity => json!("inf"),
                })
                .collect()
        })
        .collect();
    let order: Vec<usize> = matrix.order().iter().map(|&o| o + 1).collect();
    json!({ "matrix": rows, "order": order })
}

/// Canonical element serialization: the matrix of scalar coefficient
/// vectors, row-major, exact rationals "p/q"; plus the reduced word name.
pub fn element_json(sys: &CoxeterSystem, e: &GroupElement) -> Value {
    let n = sys.rank();
    let mat: Vec<Value> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| json!(e.scalar(i, j).coeff_strings()))
                .collect()
        })
        .collect();
    json!({ "word": sys.element_name(e), "mat": mat })
}

pub fn braid_json(b: &BraidWord) -> Value {
    json!(b.letters())
}

pub fn orbit_json(sys: &CoxeterSystem, orbit: &OrbitGraph<GroupElement>) -> Value {
    let nodes: Vec<Value> = orbit
        .nodes()
        .iter()
        .map(|tuple| {
            Value::Array(
                tuple
                    .iter()
                    .map(|t| json!(sys.element_name(t)))
                    .collect(),
            )
        })
        .collect();
    let edges: Vec<Value> = orbit
        .edges()
        .iter()
        .map(|&(u, l, v)| json!([u, l, v]))
        .collect();
    json!({
        "schema": "dual-artin/orbit/1",
        "strands": orbit.strands(),
        "complete": orbit.complete(),
        "bound": orbit.bound(),
        "nodes": nodes,
        "edges": edges,
    })
}

pub fn orbit_dot(sys: &CoxeterSystem, orbit: &OrbitGraph<GroupElement>) -> String {
    let mut out = String::from("digraph orbit {\n  rankdir=LR;\n");
    for (i, tuple) in orbit.nodes().iter().enumerate() {
        let label: Vec<String> = tuple.iter().map(|t| sys.element_name(t)).collect();
        out.push_str(&format!(
            "  n{} [label=\"({})\"];\n",
            i,
            label.join(", ")
        ));
    }
    for &(u, l, v) in orbit.edges() {
        // render only positive moves to keep the picture readable; the
        // inverse arrows are implied
        if l > 0 {
            out.push_str(&format!("  n{u} -> n{v} [label=\"s{l}\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}

pub fn poset_json(poset: &IntervalPoset) -> Value {
    let sys = poset.system();
    let elements: Vec<Value> = (0..poset.len())
        .map(|i| {
            json!({
                "height": poset.height_of(i),
                "word": sys.element_name(poset.element(i)),
                "mat": element_json(sys, poset.element(i))["mat"],
            })
        })
        .collect();
    let covers: Vec<Value> = poset
        .covers()
        .iter()
        .map(|(l, u, t)| json!([l, u, sys.element_name(t)]))
        .collect();
    json!({
        "schema": "dual-artin/interval/1",
        "rank": sys.rank(),
        "complete": poset.complete(),
        "elements": elements,
        "covers": covers,
    })
}

pub fn poset_dot(poset: &IntervalPoset) -> String {
    let sys = poset.system();
    let mut out = String::from("digraph interval {\n  rankdir=BT;\n");
    for i in 0..poset.len() {
        out.push_str(&format!(
            "  n{} [label=\"{}\"];\n",
            i,
            sys.element_name(poset.element(i))
        ));
    }
    for (l, u, t) in poset.covers() {
        out.push_str(&format!(
            "  n{l} -> n{u} [label=\"{}\"];\n",
            sys.element_name(t)
        ));
    }
    out.push_str("}\n");
    out
}

fn label_word_text(word: &[i32]) -> String {
    if word.is_empty() {
        return String::from("1");
    }
    word.iter()
        .map(|&l| {
            if l > 0 {
                format!("t{l}")
            } else {
                format!("t{}^-1", -l)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Plain-text presentation: `gens: t1 = s1; ...` then `rels: lhs = rhs; ...`.
pub fn presentation_text(sys: &CoxeterSystem, pres: &Presentation) -> String {
    let mut out = String::from("gens:");
    for (i, g) in pres.generators.iter().enumerate() {
        out.push_str(&format!(" t{} = {};", i + 1, sys.element_name(g)));
    }
    out.push('\n');
    out.push_str("rels:");
    for (lhs, rhs) in &pres.relations {
        out.push_str(&format!(
            " {} = {};",
            label_word_text(lhs),
            label_word_text(rhs)
        ));
    }
    out.push('\n');
    out
}

/// GAP-compatible rendering: a free group on the labels and one relator
/// per relation.
pub fn presentation_gap(sys: &CoxeterSystem, pres: &Presentation) -> String {
    let names: Vec<String> = (1..=pres.generators.len())
        .map(|i| format!("\"t{i}\""))
        .collect();
    let mut out = String::new();
    out.push_str("# generators correspond to reflection labels:\n");
    for (i, g) in pres.generators.iter().enumerate() {
        out.push_str(&format!("#   t{} = {}\n", i + 1, sys.element_name(g)));
    }
    out.push_str(&format!("F := FreeGroup({});;\n", names.join(", ")));
    let word = |w: &[i32]| -> String {
        if w.is_empty() {
            return String::from("One(F)");
        }
        w.iter()
            .map(|&l| {
                if l > 0 {
                    format!("F.{l}")
                } else {
                    format!("F.{}^-1", -l)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    };
    let relators: Vec<String> = pres
        .relations
        .iter()
        .map(|(lhs, rhs)| format!("{}*({})^-1", word(lhs), word(rhs)))
        .collect();
    out.push_str(&format!("rels := [ {} ];;\n", relators.join(", ")));
    out.push_str("G := F / rels;;\n");
    out
}

pub fn presentation_json(sys: &CoxeterSystem, pres: &Presentation) -> Value {
    json!({
        "schema": "dual-artin/presentation/1",
        "style": match pres.style {
            PresentationStyle::Interval => "interval",
            PresentationStyle::Hurwitz => "hurwitz",
        },
        "generators": pres
            .generators
            .iter()
            .map(|g| json!(sys.element_name(g)))
            .collect::<Vec<_>>(),
        "relations": pres
            .relations
            .iter()
            .map(|(l, r)| json!([l, r]))
            .collect::<Vec<_>>(),
    })
}

/// Parsed form of the text format, for round-trip checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPresentation {
    pub generators: Vec<(String, String)>,
    pub relations: Vec<(Vec<i32>, Vec<i32>)>,
}

fn parse_label_word(text: &str) -> anyhow::Result<Vec<i32>> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    text.split_whitespace()
        .map(|tok| {
            let (body, neg) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let idx: i32 = body
                .strip_prefix('t')
                .ok_or_else(|| anyhow!("bad label token {tok:?}"))?
                .parse()
                .map_err(|_| anyhow!("bad label index in {tok:?}"))?;
            Ok(if neg { -idx } else { idx })
        })
        .collect()
}

/// Parser for the text format emitted by `presentation_text`.
pub fn parse_presentation_text(text: &str) -> anyhow::Result<ParsedPresentation> {
    let mut generators = Vec::new();
    let mut relations = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("gens:") {
            for decl in rest.split(';') {
                let decl = decl.trim();
                if decl.is_empty() {
                    continue;
                }
                let (name, word) = decl
                    .split_once('=')
                    .ok_or_else(|| anyhow!("bad generator declaration {decl:?}"))?;
                generators.push((name.trim().to_string(), word.trim().to_string()));
            }
        } else if let Some(rest) = line.strip_prefix("rels:") {
            for rel in rest.split(';') {
                let rel = rel.trim();
                if rel.is_empty() {
                    continue;
                }
                let (lhs, rhs) = rel
                    .split_once('=')
                    .ok_or_else(|| anyhow!("bad relation {rel:?}"))?;
                relations.push((parse_label_word(lhs)?, parse_label_word(rhs)?));
            }
        }
    }
    if generators.is_empty() {
        bail!("no generators found");
    }
    Ok(ParsedPresentation {
        generators,
        relations,
    })
}

/// Parse a whitespace- or comma-separated list of signed integers.
pub fn parse_int_list(text: &str) -> anyhow::Result<Vec<i32>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>().map_err(|_| anyhow!("bad integer {t:?}")))
        .collect()
}

/// Parse an edge list like "1-2,2-3" (1-based vertices).
pub fn parse_edges(text: &str) -> anyhow::Result<Vec<(usize, usize)>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t
                .trim()
                .split_once('-')
                .ok_or_else(|| anyhow!("bad edge {t:?}, expected like 1-2"))?;
            let a: usize = a.trim().parse().map_err(|_| anyhow!("bad vertex in {t:?}"))?;
            let b: usize = b.trim().parse().map_err(|_| anyhow!("bad vertex in {t:?}"))?;
            if a == 0 || b == 0 {
                bail!("vertices are 1-based");
            }
            Ok((a - 1, b - 1))
        })
        .collect()
}
