use crate::error::{Error, Result};
use crate::io::LarDocument;

/// Reads array literals of the form `NAME = [[...], ...]`, as commonly
/// printed in notes, into a document. `TV` is taken as `CV`.
/// The outer brackets may be omitted. Unknown names are ignored.
pub fn parse_literal(text: &str) -> Result<LarDocument> {
    let mut doc = LarDocument::default();
    let mut found_v = false;
    for (name, body, line) in blocks(text) {
        let body = body.trim().trim_end_matches(';').trim();
        let wrapped = if body.starts_with("[[") {
            body.to_string()
        } else {
            format!("[{body}]")
        };
        let err = |e: serde_json::Error| Error::Parse {
            line: line + e.line() - 1,
            column: e.column(),
            message: format!("in {name}: {e}"),
        };
        match name.as_str() {
            "V" => {
                doc.v = serde_json::from_str(&wrapped).map_err(err)?;
                found_v = true;
            }
            "EV" => doc.ev = Some(serde_json::from_str(&wrapped).map_err(err)?),
            "FV" => doc.fv = Some(serde_json::from_str(&wrapped).map_err(err)?),
            "CV" | "TV" => doc.cv = Some(serde_json::from_str(&wrapped).map_err(err)?),
            _ => {}
        }
    }
    if !found_v {
        return Err(Error::EmptyInput("no V block".into()));
    }
    doc.validate()?;
    Ok(doc)
}

/// Splits text at lines of the form `NAME = ...`.
fn blocks(text: &str) -> Vec<(String, String, usize)> {
    let mut out: Vec<(String, String, usize)> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if let Some((lhs, rhs)) = line.split_once('=') {
            let name = lhs.trim();
            if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                out.push((name.to_string(), rhs.to_string(), k + 1));
                continue;
            }
        }
        if let Some(last) = out.last_mut() {
            last.1.push('\n');
            last.1.push_str(line);
        }
    }
    out
}
