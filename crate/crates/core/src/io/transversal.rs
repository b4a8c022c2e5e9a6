//! Transversal files: `subset i j ...`, `projection i:j ...` (total), `end`.

use super::{lines, parse_index, parse_pairs, semantic, syntax, write_pairs, ParseError};
use crate::constructors::TransversalData;
use crate::model::ElementId;

/// Reads a transversal for an ambient structure with `n` elements.
pub fn parse_transversal(text: &str, n: usize) -> Result<TransversalData, ParseError> {
    let mut subset: Option<(usize, Vec<ElementId>)> = None;
    let mut projection: Option<(usize, Vec<Option<usize>>)> = None;
    let mut ended = false;
    let mut last_line = 0;
    for (line, tokens) in lines(text) {
        last_line = line;
        let head = tokens[0];
        if ended {
            return Err(syntax(line, head.col, "content after end"));
        }
        match head.text {
            "end" => ended = true,
            "subset" if subset.is_none() => {
                let s = tokens[1..]
                    .iter()
                    .map(|&t| parse_index(line, t, n).map(ElementId::new))
                    .collect::<Result<_, _>>()?;
                subset = Some((line, s));
            }
            "projection" if projection.is_none() => {
                projection = Some((line, parse_pairs(line, "projection", &tokens[1..], n)?));
            }
            "subset" | "projection" => return Err(syntax(line, head.col, format!("repeated key {:?}", head.text))),
            other => return Err(syntax(line, head.col, format!("unknown key {other:?}"))),
        }
    }
    if !ended {
        return Err(syntax(last_line.max(1), 1, "missing end"));
    }
    let (Some((s_line, subset)), Some((p_line, projection))) = (subset, projection) else {
        return Err(semantic(None, "a transversal needs both subset and projection"));
    };
    let projection = projection
        .iter()
        .enumerate()
        .map(|(i, j)| j.map(ElementId::new).ok_or_else(|| semantic(Some(p_line), format!("projection is missing element {i}"))))
        .collect::<Result<Vec<_>, _>>()?;
    TransversalData::new(subset, projection, n).map_err(|e| semantic(Some(s_line), e.to_string()))
}

pub fn print_transversal(t: &TransversalData) -> String {
    let mut out = String::from("subset");
    for x in t.subset() {
        out.push_str(&format!(" {x}"));
    }
    out.push('\n');
    write_pairs(&mut out, "projection", t.projection());
    out.push_str("end\n");
    out
}
