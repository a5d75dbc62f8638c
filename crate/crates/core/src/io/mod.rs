//! Reading and writing complexes: a JSON document keyed by the usual LAR
//! names, Wavefront OBJ, SVG previews and chain tokens.

mod literal;
mod obj;
mod svg;

pub use literal::parse_literal;
pub use obj::{arrangement_to_obj, parse_obj, ObjMesh};
pub use svg::arrangement_to_svg;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chain::{boundary1, canonicalize, CellArray, Chain, ChainComplex, SignedOperator, VertexBuffer};
use crate::error::{Error, Result};
use crate::lar::{boundary2, boundary3, convex_face_edges};
use crate::pipeline::Arrangement;

/// A complex as stored on disk. Operators are `(row, col, coefficient)`
/// triples.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LarDocument {
    #[serde(rename = "V")]
    pub v: Vec<Vec<f64>>,
    #[serde(rename = "EV", default, skip_serializing_if = "Option::is_none")]
    pub ev: Option<Vec<Vec<usize>>>,
    #[serde(rename = "FV", default, skip_serializing_if = "Option::is_none")]
    pub fv: Option<Vec<Vec<usize>>>,
    #[serde(rename = "CV", default, skip_serializing_if = "Option::is_none")]
    pub cv: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_1: Option<Vec<(usize, usize, i64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_2: Option<Vec<(usize, usize, i64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_3: Option<Vec<(usize, usize, i64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Value>,
}

impl LarDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: LarDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        doc.validate()?;
        Ok(doc)
    }

    /// Checks vertex arity, index ranges and cell arities.
    pub fn validate(&self) -> Result<()> {
        self.vertices()?;
        for p in 1..=3 {
            self.cells(p)?;
        }
        Ok(())
    }

    pub fn vertices(&self) -> Result<VertexBuffer> {
        if self.v.is_empty() {
            return Err(Error::EmptyInput("no vertices".into()));
        }
        VertexBuffer::from_rows(&self.v)
    }

    fn raw_cells(&self, p: usize) -> Option<&Vec<Vec<usize>>> {
        match p {
            1 => self.ev.as_ref(),
            2 => self.fv.as_ref(),
            3 => self.cv.as_ref(),
            _ => None,
        }
    }

    /// Canonical p-cells, if present.
    pub fn cells(&self, p: usize) -> Result<Option<CellArray>> {
        let Some(raw) = self.raw_cells(p) else {
            return Ok(None);
        };
        let n = self.v.len();
        let (c, _) = canonicalize(&CellArray::new(p, raw.clone()), n)?;
        Ok(Some(c))
    }

    /// Stored operator `∂_p`, if present.
    pub fn operator(&self, p: usize) -> Result<Option<SignedOperator>> {
        let triples = match p {
            1 => &self.boundary_1,
            2 => &self.boundary_2,
            3 => &self.boundary_3,
            _ => &None,
        };
        let Some(t) = triples else { return Ok(None) };
        let rows = if p == 1 {
            self.v.len()
        } else {
            self.raw_cells(p - 1).map_or(0, Vec::len)
        };
        let cols = self
            .raw_cells(p)
            .map(Vec::len)
            .unwrap_or_else(|| t.iter().map(|x| x.1 + 1).max().unwrap_or(0));
        SignedOperator::from_triples(rows, cols, t.iter().copied()).map(Some)
    }

    /// Chain complex of the stored cells. Stored operators are used when
    /// present; otherwise they are assembled from the cell vertex sets.
    /// Edges of space faces given without `EV` are derived assuming convex
    /// faces.
    pub fn to_complex(&self) -> Result<ChainComplex> {
        let vertices = self.vertices()?;
        let n = vertices.len();
        let fv = self.cells(2)?;
        let ev = match (self.cells(1)?, &fv) {
            (Some(ev), _) => ev,
            (None, Some(fv)) => convex_face_edges(&vertices, fv)?,
            (None, None) => {
                return Err(Error::EmptyInput("no edges or faces".into()));
            }
        };
        let d1 = match self.operator(1)? {
            Some(op) => op,
            None => boundary1(&ev, n, true)?,
        };
        let vertex_cells = CellArray::new(0, (0..n).map(|v| vec![v]).collect());
        let mut skeletons = vec![vertex_cells, ev.clone()];
        let mut operators = vec![d1];
        if let Some(fv) = fv {
            let d2 = match self.operator(2)? {
                Some(op) => op,
                None => boundary2(&vertices, &ev, &fv)?,
            };
            if let Some(cv) = self.cells(3)? {
                let d3 = match self.operator(3)? {
                    Some(op) => op,
                    None => boundary3(&vertices, &ev, &fv, &d2, &cv)?,
                };
                skeletons.push(fv);
                skeletons.push(cv);
                operators.push(d2);
                operators.push(d3);
            } else {
                skeletons.push(fv);
                operators.push(d2);
            }
        }
        ChainComplex::new(vertices, skeletons, operators)
    }

    pub fn from_complex(cx: &ChainComplex) -> Self {
        let triples = |op: &SignedOperator| -> Vec<(usize, usize, i64)> {
            op.triples().map(|(i, j, v)| (i, j, v as i64)).collect()
        };
        let d = cx.dim();
        let cells = |p: usize| (p <= d).then(|| cx.skeletons[p].cells().to_vec());
        let ops = |p: usize| (p <= d).then(|| triples(cx.boundary(p)));
        LarDocument {
            v: cx.vertices.rows(),
            ev: cells(1),
            fv: cells(2),
            cv: cells(3),
            boundary_1: ops(1),
            boundary_2: ops(2),
            boundary_3: ops(3),
            meta: None,
        }
    }

    pub fn from_arrangement(arr: &Arrangement) -> Self {
        Self::from_complex(&arr.complex)
    }

    /// JSON text with one top-level key per line and compact arrays.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("document is serializable");
        let Value::Object(map) = value else {
            unreachable!("document serializes to an object")
        };
        let order = [
            "V", "EV", "FV", "CV", "boundary_1", "boundary_2", "boundary_3", "meta",
        ];
        let lines: Vec<String> = order
            .iter()
            .filter_map(|k| map.get(*k).map(|v| format!("  \"{k}\": {v}")))
            .collect();
        format!("{{\n{}\n}}\n", lines.join(",\n"))
    }
}

/// Parses chain tokens such as `"+3 -0 5"` or `"1,-2,4"`. Indices are
/// 0-based; a missing sign means `+`.
pub fn parse_chain(text: &str, dim: usize) -> Result<Chain> {
    let mut pairs = Vec::new();
    for (k, tok) in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .enumerate()
    {
        let (sign, digits) = match tok.as_bytes()[0] {
            b'+' => (1, &tok[1..]),
            b'-' => (-1, &tok[1..]),
            _ => (1, tok),
        };
        let idx: usize = digits.parse().map_err(|_| Error::Parse {
            line: 1,
            column: k + 1,
            message: format!("bad chain token {tok:?}"),
        })?;
        pairs.push((idx, sign));
    }
    Chain::from_pairs(dim, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let doc = LarDocument {
            v: vec![vec![0.1, 0.2], vec![1.0 / 3.0, 2.0]],
            ev: Some(vec![vec![0, 1]]),
            boundary_1: Some(vec![(0, 0, -1), (1, 0, 1)]),
            ..Default::default()
        };
        let text = doc.to_json();
        let back = LarDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.v[1][0].to_bits(), (1.0f64 / 3.0).to_bits());
    }

    #[test]
    fn parse_error_has_position() {
        let err = LarDocument::from_json("{\n \"V\": [[0, 1],\n  [2 3]]}").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn ragged_vertices_rejected() {
        assert!(matches!(
            LarDocument::from_json(r#"{"V": [[0, 1], [2]]}"#),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn out_of_range_index_rejected() {
        assert!(matches!(
            LarDocument::from_json(r#"{"V": [[0, 1], [2, 3]], "EV": [[0, 2]]}"#),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn empty_vertices_rejected() {
        assert!(matches!(
            LarDocument::from_json(r#"{"V": []}"#),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn chain_tokens() {
        let c = parse_chain("1,-2, 4", 1).unwrap();
        assert_eq!(c.to_dense(5), vec![0, 1, -1, 0, 1]);
        assert_eq!(parse_chain("-0 +4", 1).unwrap().to_string(), "-0 +4");
        assert!(parse_chain("1,x", 1).is_err());
    }
}
