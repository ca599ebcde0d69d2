//! Text file formats: cap files, hypergraph files and integer/point set files.
//!
//! All formats are line oriented. Blank lines and lines starting with `#` are
//! ignored, and parse errors carry 1-based line numbers.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::eqfree::EisensteinPoint;
use crate::error::{Error, Result};
use crate::gf3::{CapSet, F3Vector};
use crate::hypergraph::{SixThreeWitness, TripartiteHypergraph, WicketWitness};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a cap file: one point per line as a string over `{0,1,2}`, most
/// significant digit first.
///
/// The dimension is taken from the first point; `dimension` overrides it and
/// is the only source of dimension for a file without points (default 0).
/// The result is not verified.
pub fn parse_cap_file(text: &str, dimension: Option<usize>) -> Result<CapSet> {
    let mut dim = dimension;
    let mut points = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, content) in content_lines(text) {
        let v: F3Vector = content
            .parse()
            .map_err(|e: Error| parse_err(line, e.to_string()))?;
        match dim {
            None => dim = Some(v.dim()),
            Some(d) if d != v.dim() => {
                return Err(parse_err(
                    line,
                    format!("expected {d} digits, found {}", v.dim()),
                ))
            }
            _ => {}
        }
        if !seen.insert(v.clone()) {
            return Err(parse_err(line, format!("duplicate point {v}")));
        }
        points.push(v);
    }
    CapSet::new(dim.unwrap_or(0), points)
}

pub fn write_cap_file(cap: &CapSet) -> String {
    let mut out = format!("# cap in F_3^{}, {} points\n", cap.dimension(), cap.len());
    for v in cap.iter() {
        let _ = writeln!(out, "{v}");
    }
    out
}

/// Parses `p tlh |A| |B| |C| m` followed by `m` lines `a b c`.
pub fn parse_hypergraph(text: &str) -> Result<TripartiteHypergraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 6 || fields[0] != "p" || fields[1] != "tlh" {
        return Err(parse_err(hline, "expected header 'p tlh |A| |B| |C| m'"));
    }
    let nums = fields[2..]
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_err(hline, format!("bad number '{f}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    let sizes = [nums[0], nums[1], nums[2]];
    let m = nums[3];
    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let v = content
            .split_whitespace()
            .map(|f| {
                f.parse::<usize>()
                    .map_err(|_| parse_err(line, format!("bad index '{f}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        if v.len() != 3 {
            return Err(parse_err(line, "edge lines need three indices"));
        }
        if edges.len() == m {
            return Err(parse_err(line, format!("more than {m} edges")));
        }
        edges.push([v[0], v[1], v[2]]);
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    TripartiteHypergraph::new(sizes, edges).map_err(|e| parse_err(hline, e.to_string()))
}

pub fn write_hypergraph(h: &TripartiteHypergraph) -> String {
    let [a, b, c] = h.class_sizes();
    let mut out = format!("p tlh {a} {b} {c} {}\n", h.num_edges());
    for e in h.edges() {
        let _ = writeln!(out, "{} {} {}", e[0], e[1], e[2]);
    }
    out
}

/// Parses one integer per line.
pub fn parse_int_set(text: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, content) in content_lines(text) {
        let x: i64 = content
            .parse()
            .map_err(|_| parse_err(line, format!("bad integer '{content}'")))?;
        if !seen.insert(x) {
            return Err(parse_err(line, format!("duplicate element {x}")));
        }
        out.push(x);
    }
    Ok(out)
}

/// Parses one `a,b` pair per line, the point `a + ωb`.
pub fn parse_point_set(text: &str) -> Result<Vec<EisensteinPoint>> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, content) in content_lines(text) {
        let (a, b) = content
            .split_once(',')
            .ok_or_else(|| parse_err(line, "expected 'a,b'"))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| parse_err(line, format!("bad integer '{}'", s.trim())))
        };
        let p = EisensteinPoint::new(parse(a)?, parse(b)?);
        if !seen.insert(p) {
            return Err(parse_err(line, format!("duplicate point {},{}", p.a, p.b)));
        }
        out.push(p);
    }
    Ok(out)
}

/// JSON shape of a reported configuration: `{"type": "wicket"|"63", "edges": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub edges: Vec<usize>,
}

impl From<&WicketWitness> for WitnessRecord {
    /// Rows first, then columns.
    fn from(w: &WicketWitness) -> Self {
        Self {
            kind: "wicket".into(),
            edges: w.rows.iter().chain(&w.columns).copied().collect(),
        }
    }
}

impl From<&SixThreeWitness> for WitnessRecord {
    fn from(w: &SixThreeWitness) -> Self {
        Self {
            kind: "63".into(),
            edges: w.edges.to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_file_roundtrip_and_comments() {
        let text = "# a cap\n00\n\n01\n10\n";
        let cap = parse_cap_file(text, None).unwrap();
        assert_eq!(cap.dimension(), 2);
        assert_eq!(cap.len(), 3);
        assert!(!cap.is_verified());
        let again = parse_cap_file(&write_cap_file(&cap), None).unwrap();
        assert_eq!(again, cap);
    }

    #[test]
    fn cap_file_errors_carry_line_numbers() {
        let err = parse_cap_file("00\n# c\n011\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_cap_file("00\n0x\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_cap_file("00\n00\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_cap_file("000\n", Some(2)).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn empty_cap_file() {
        let cap = parse_cap_file("# nothing\n", None).unwrap();
        assert_eq!((cap.dimension(), cap.len()), (0, 0));
        assert_eq!(parse_cap_file("", Some(3)).unwrap().dimension(), 3);
    }

    #[test]
    fn hypergraph_file() {
        let text = "# wicket\np tlh 2 2 2 2\n0 0 0\n1 1 1\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h.num_edges(), 2);
        assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
        assert!(matches!(
            parse_hypergraph("p tlh 2 2 2 3\n0 0 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_hypergraph("p tlh 2 2 2 1\n0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_hypergraph("p tlh 1 1 1 1\n0 0 5\n").is_err());
    }

    #[test]
    fn set_files() {
        assert_eq!(parse_int_set("1\n# x\n6\n").unwrap(), vec![1, 6]);
        assert!(matches!(
            parse_int_set("1\n1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        let pts = parse_point_set("0,0\n 1, -2\n").unwrap();
        assert_eq!(pts[1], EisensteinPoint::new(1, -2));
        assert!(parse_point_set("1\n").is_err());
    }

    #[test]
    fn witness_json_shape() {
        let w = WicketWitness {
            rows: [0, 1, 2],
            columns: [3, 4],
        };
        let r = WitnessRecord::from(&w);
        assert_eq!(r.kind, "wicket");
        assert_eq!(r.edges, vec![0, 1, 2, 3, 4]);
        assert_eq!(
            WitnessRecord::from(&SixThreeWitness { edges: [1, 2, 3] }).kind,
            "63"
        );
    }
}
