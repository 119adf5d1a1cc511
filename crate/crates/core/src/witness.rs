//! The `ramsey-witness v1` text format.
//!
//! ```text
//! ramsey-witness v1
//! vertices <N>
//! red <u> <v>        (u < v, 0-based; every unlisted pair is blue)
//! ```
//!
//! Lines starting with `#` are comments. Comments of the form
//! `# key: value` are collected as metadata; generators use them to record
//! the generator name, parameters, claimed bound and avoided families.

use crate::coloring::TwoColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAGIC: &str = "ramsey-witness v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFile {
    pub coloring: TwoColoring,
    /// `# key: value` comment pairs, in file order.
    pub metadata: Vec<(String, String)>,
}

impl WitnessFile {
    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

pub fn write(coloring: &TwoColoring, metadata: &[(String, String)]) -> String {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    for (k, v) in metadata {
        out.push_str(&format!("# {k}: {v}\n"));
    }
    out.push_str(&format!("vertices {}\n", coloring.order()));
    for (u, v) in coloring.red().edges() {
        out.push_str(&format!("red {u} {v}\n"));
    }
    out
}

pub fn parse(text: &str) -> Result<WitnessFile> {
    let err = |line: usize, message: String| Error::WitnessParse { line, message };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    match lines.next() {
        Some((_, l)) if l == MAGIC => {}
        Some((no, l)) => return Err(err(no, format!("expected header {MAGIC:?}, found {l:?}"))),
        None => return Err(err(1, "empty input".into())),
    }

    let mut metadata = Vec::new();
    let mut red: Option<Graph> = None;

    for (no, line) in lines {
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((k, v)) = comment.split_once(':') {
                let k = k.trim();
                if !k.is_empty() && !k.contains(' ') {
                    metadata.push((k.to_string(), v.trim().to_string()));
                }
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(' ').collect();
        match fields.as_slice() {
            ["vertices", n] => {
                if red.is_some() {
                    return Err(err(no, "duplicate vertices line".into()));
                }
                let n: usize = n
                    .parse()
                    .map_err(|_| err(no, format!("bad vertex count {n:?}")))?;
                red = Some(Graph::new(n));
            }
            ["red", u, v] => {
                let g = red
                    .as_mut()
                    .ok_or_else(|| err(no, "red edge before vertices line".into()))?;
                let u: usize = u.parse().map_err(|_| err(no, format!("bad vertex {u:?}")))?;
                let v: usize = v.parse().map_err(|_| err(no, format!("bad vertex {v:?}")))?;
                if u == v {
                    return Err(err(no, format!("self-loop at {u}")));
                }
                if u > v {
                    return Err(err(no, format!("edge must be written with u < v, got {u} {v}")));
                }
                if v >= g.order() {
                    return Err(err(no, format!("vertex {v} out of range 0..{}", g.order())));
                }
                if g.has_edge(u, v) {
                    return Err(err(no, format!("duplicate edge {u} {v}")));
                }
                g.add_edge(u, v);
            }
            _ => return Err(err(no, format!("unrecognised line {line:?}"))),
        }
    }

    let red = red.ok_or_else(|| err(text.lines().count().max(1), "missing vertices line".into()))?;
    Ok(WitnessFile {
        coloring: TwoColoring::from_red(red),
        metadata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::cycle;

    #[test]
    fn exact_layout() {
        let c = TwoColoring::from_red(Graph::from_edges(3, [(0, 1), (1, 2)]));
        let text = write(&c, &[("generator".into(), "demo".into())]);
        assert_eq!(
            text,
            "ramsey-witness v1\n# generator: demo\nvertices 3\nred 0 1\nred 1 2\n"
        );
    }

    #[test]
    fn roundtrip_with_metadata() {
        let c = TwoColoring::from_red(cycle(5));
        let meta = vec![("claimed_bound".to_string(), "6".to_string())];
        let parsed = parse(&write(&c, &meta)).unwrap();
        assert_eq!(parsed.coloring, c);
        assert_eq!(parsed.meta("claimed_bound"), Some("6"));
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            ("", "empty"),
            ("ramsey-witness v2\nvertices 2\n", "header"),
            ("ramsey-witness v1\nred 0 1\n", "edge before vertices"),
            ("ramsey-witness v1\nvertices 3\nred 0 1\nred 0 1\n", "duplicate"),
            ("ramsey-witness v1\nvertices 3\nred 1 1\n", "self-loop"),
            ("ramsey-witness v1\nvertices 3\nred 0 3\n", "out of range"),
            ("ramsey-witness v1\nvertices 3\nred 2 0\n", "order"),
            ("ramsey-witness v1\nvertices 3\nblue 0 1\n", "unknown line"),
            ("ramsey-witness v1\n# nothing\n", "missing vertices"),
            ("ramsey-witness v1\nvertices x\n", "bad count"),
        ];
        for (text, why) in cases {
            assert!(parse(text).is_err(), "{why} should be rejected");
        }
    }

    #[test]
    fn comments_anywhere() {
        let text = "ramsey-witness v1\n# a comment without colon\nvertices 2\n# k: v\nred 0 1\n";
        let w = parse(text).unwrap();
        assert_eq!(w.metadata, vec![("k".into(), "v".into())]);
        assert!(w.coloring.red().has_edge(0, 1));
    }
}
