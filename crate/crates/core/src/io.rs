//! On-disk formats.
//!
//! Graph JSON is bit-exact: `{"colors": [names], "size": N, "matrix": "..."}`
//! with the matrix a string of base-36 digits, upper triangle row by row.
//! Serializing a parsed graph reproduces the input bytes, so graphs can be
//! diffed and content-addressed. DOT export writes one edge per pair with the
//! color name as the `color` attribute.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{pair_count, NGraph};
use crate::Result;

#[derive(Serialize, Deserialize)]
struct NGraphJson {
    colors: Vec<String>,
    size: usize,
    matrix: String,
}

fn digit_to_char(c: u8) -> char {
    char::from_digit(c as u32, 36).expect("color fits in base 36")
}

fn char_to_digit(ch: char) -> Option<u8> {
    ch.to_digit(36).map(|d| d as u8)
}

/// Compact single-line JSON for `g`; the canonical interchange form.
pub fn to_json(g: &NGraph) -> String {
    let doc = NGraphJson {
        colors: g.color_names().to_vec(),
        size: g.size(),
        matrix: g.matrix().iter().map(|&c| digit_to_char(c)).collect(),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

pub fn from_json(text: &str) -> Result<NGraph> {
    let doc: NGraphJson = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if doc.matrix.len() != pair_count(doc.size) {
        return Err(Error::Format(format!(
            "matrix has {} digits, {} vertices need {}",
            doc.matrix.len(),
            doc.size,
            pair_count(doc.size)
        )));
    }
    let mut matrix = Vec::with_capacity(doc.matrix.len());
    for ch in doc.matrix.chars() {
        match char_to_digit(ch) {
            Some(d) if (d as usize) < doc.colors.len() => matrix.push(d),
            Some(d) => {
                return Err(Error::Format(format!(
                    "matrix digit {d} out of range for {} colors",
                    doc.colors.len()
                )))
            }
            None => return Err(Error::Format(format!("bad matrix digit {ch:?}"))),
        }
    }
    let names: Vec<&str> = doc.colors.iter().map(|s| s.as_str()).collect();
    NGraph::from_matrix(&names, doc.size, matrix)
}

/// DOT rendering: every vertex, then one edge per pair.
pub fn to_dot(g: &NGraph) -> String {
    let mut out = String::from("graph ngraph {\n");
    for v in 0..g.size() {
        out.push_str(&format!("  v{v};\n"));
    }
    for i in 0..g.size() {
        for j in i + 1..g.size() {
            out.push_str(&format!(
                "  v{i} -- v{j} [color=\"{}\"];\n",
                g.color_name(g.color(i, j))
            ));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let g = NGraph::from_matrix(&["R", "S", "T"], 4, vec![0, 1, 2, 2, 1, 0]).unwrap();
        let text = to_json(&g);
        assert_eq!(
            text,
            r#"{"colors":["R","S","T"],"size":4,"matrix":"012210"}"#
        );
        let back = from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(from_json(r#"{"colors":["R","S"],"size":3,"matrix":"01"}"#).is_err());
        assert!(from_json(r#"{"colors":["R","S"],"size":3,"matrix":"012"}"#).is_err());
        assert!(from_json(r#"{"colors":["R","S"],"size":3,"matrix":"0!1"}"#).is_err());
    }

    #[test]
    fn dot_lists_one_edge_per_pair() {
        let g = NGraph::from_matrix(&["R", "S"], 3, vec![0, 1, 0]).unwrap();
        let dot = to_dot(&g);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.contains("v0 -- v2 [color=\"S\"];"));
    }
}
