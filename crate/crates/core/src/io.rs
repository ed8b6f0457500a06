//! File formats.
//!
//! Graphs are plain text:
//!
//! ```text
//! # optional comments, only before the header
//! p <n> <m>
//! e <u> <v>      (m lines, 0-based, u < v, sorted)
//! ```
//!
//! Labelings are JSON: `{"vertices": n, "labels": {"0": [..], ..}}` with
//! every index `0..n` present and each list strictly increasing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::setlabel::{IntegerSet, Labeling, MAX_ELEMENT};

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p {} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

fn field(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("{what} is not a non-negative integer")))
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') {
            if header.is_some() {
                return Err(Error::parse(
                    line,
                    "comments are only allowed before the header",
                ));
            }
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line, "duplicate header"));
                }
                header = Some((
                    field(toks.next(), line, "n")?,
                    field(toks.next(), line, "m")?,
                ));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| Error::parse(line, "edge before header"))?;
                let u = field(toks.next(), line, "u")?;
                let v = field(toks.next(), line, "v")?;
                if u >= v {
                    return Err(Error::parse(line, "endpoints must satisfy u < v"));
                }
                if v >= n {
                    return Err(Error::parse(line, format!("vertex {v} out of range")));
                }
                if edges.last().is_some_and(|&last| last >= (u, v)) {
                    return Err(Error::parse(line, "edges must be sorted and distinct"));
                }
                edges.push((u, v));
            }
            _ => return Err(Error::parse(line, format!("unexpected line {trimmed:?}"))),
        }
        if toks.next().is_some() {
            return Err(Error::parse(line, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing header line"))?;
    if edges.len() != m {
        return Err(Error::parse(
            0,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LabelingFile {
    vertices: usize,
    labels: BTreeMap<String, Vec<u64>>,
}

/// Serialises labels `0..n`; fails on the first unlabelled vertex.
pub fn write_labeling(f: &Labeling, n: usize) -> Result<String> {
    let mut out = format!("{{\n  \"vertices\": {n},\n  \"labels\": {{");
    for v in 0..n {
        let elems: Vec<String> = f.get(v)?.elements().iter().map(u64::to_string).collect();
        let sep = if v + 1 < n { "," } else { "" };
        let _ = write!(out, "\n    \"{v}\": [{}]{sep}", elems.join(", "));
    }
    out.push_str(if n > 0 { "\n  }\n}\n" } else { "}\n}\n" });
    Ok(out)
}

/// Parses a labeling file, returning its declared vertex count too.
pub fn read_labeling(text: &str) -> Result<(usize, Labeling)> {
    let file: LabelingFile =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let mut labeling = Labeling::new();
    for (key, elems) in file.labels {
        let v: usize = key
            .parse()
            .ok()
            .filter(|v: &usize| v.to_string() == key)
            .ok_or_else(|| Error::parse(0, format!("label key {key:?} is not a vertex index")))?;
        if v >= file.vertices {
            return Err(Error::parse(
                0,
                format!("label for vertex {v} out of range"),
            ));
        }
        if elems.is_empty() || elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(
                0,
                format!("label of vertex {v} must be a non-empty strictly increasing list"),
            ));
        }
        if let Some(&x) = elems.iter().find(|&&x| x > MAX_ELEMENT) {
            return Err(Error::LabelTooLarge(x));
        }
        labeling.set(v, IntegerSet::new(elems)?);
    }
    if let Some(v) = (0..file.vertices).find(|&v| labeling.get(v).is_err()) {
        return Err(Error::MissingLabel(v));
    }
    Ok((file.vertices, labeling))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_text_exact() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 1), (1, 2)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "p 4 3\ne 0 1\ne 1 2\ne 2 3\n");
        assert_eq!(read_graph(&text).unwrap(), g);
        assert_eq!(
            read_graph("# c4\n# more\np 2 1\ne 0 1\n")
                .unwrap()
                .edge_count(),
            1
        );
        assert_eq!(write_graph(&Graph::empty(3).unwrap()), "p 3 0\n");
    }

    #[test]
    fn graph_text_rejects() {
        for bad in [
            "e 0 1\np 2 1\n",
            "p 2 1\ne 1 0\n",
            "p 2 1\ne 0 2\n",
            "p 3 2\ne 1 2\ne 0 1\n",
            "p 3 2\ne 0 1\n",
            "p 2 1\n# late\ne 0 1\n",
            "p 2 1\ne 0 1 9\n",
            "p 2 x\n",
            "",
        ] {
            assert!(
                matches!(read_graph(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn labeling_json() {
        let f = Labeling::from_vec(vec![
            IntegerSet::new([1]).unwrap(),
            IntegerSet::new([4, 8]).unwrap(),
        ]);
        let text = write_labeling(&f, 2).unwrap();
        assert_eq!(
            text,
            "{\n  \"vertices\": 2,\n  \"labels\": {\n    \"0\": [1],\n    \"1\": [4, 8]\n  }\n}\n"
        );
        assert_eq!(read_labeling(&text).unwrap(), (2, f));
        let compact = r#"{"vertices":2,"labels":{"1":[3],"0":[0,2]}}"#;
        assert_eq!(
            read_labeling(compact).unwrap().1.get(0).unwrap().elements(),
            &[0, 2]
        );
    }

    #[test]
    fn labeling_json_rejects() {
        assert_eq!(
            read_labeling(r#"{"vertices":3,"labels":{"0":[1],"1":[2]}}"#),
            Err(Error::MissingLabel(2))
        );
        for bad in [
            r#"{"vertices":1,"labels":{"0":[2,1]}}"#,
            r#"{"vertices":1,"labels":{"0":[]}}"#,
            r#"{"vertices":1,"labels":{"1":[1]}}"#,
            r#"{"vertices":1,"labels":{"00":[1]}}"#,
            r#"{"vertices":1,"labels":{"0":[-1]}}"#,
            r#"{"vertices":1,"labels":{"0":[1]},"extra":1}"#,
            "not json",
        ] {
            assert!(
                matches!(read_labeling(bad), Err(Error::Parse { .. })),
                "{bad}"
            );
        }
    }
}
