use std::collections::{BTreeMap, BTreeSet};

use super::{lines, parse_index, parse_pairs, parse_usize, semantic, syntax, write_pairs, ParseError};
use crate::model::{infer_structure, ElementId, ModelError, StructureTable, TableParts, Triple};

const KEYS: [&str; 9] = ["elements", "labels", "units", "alpha", "beta", "inv", "linv", "rinv", "triples"];

/// Reads a structure. Unknown keys, repeated keys, duplicate triples and
/// anything after `end` other than comments are rejected.
///
/// Without `alpha` and `beta` the projections and units are inferred from the
/// triples; an explicit `units` line must then agree with the inference.
pub fn parse(text: &str) -> Result<StructureTable, ParseError> {
    let mut n: Option<usize> = None;
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    let mut labels: Option<Vec<String>> = None;
    let mut units: Option<Vec<usize>> = None;
    let mut maps: BTreeMap<&str, Vec<Option<usize>>> = BTreeMap::new();
    let mut triples: Vec<Triple> = Vec::new();
    let mut triple_set: BTreeSet<Triple> = BTreeSet::new();
    let mut in_triples = false;
    let mut ended = false;
    let mut last_line = 0;

    for (line, tokens) in lines(text) {
        last_line = line;
        let head = tokens[0];
        if ended {
            return Err(syntax(line, head.col, "content after end"));
        }
        if head.text == "end" {
            if tokens.len() > 1 {
                return Err(syntax(line, tokens[1].col, "unexpected token after end"));
            }
            ended = true;
            continue;
        }
        if in_triples {
            let n = n.expect("elements precede triples");
            if tokens.len() != 3 {
                let col = tokens.get(3).map_or(head.col, |t| t.col);
                return Err(syntax(line, col, format!("expected 3 indices per triple, found {}", tokens.len())));
            }
            let mut t = [0usize; 3];
            for (slot, &tok) in t.iter_mut().zip(&tokens) {
                *slot = parse_index(line, tok, n)?;
            }
            let triple = (ElementId::new(t[0]), ElementId::new(t[1]), ElementId::new(t[2]));
            if !triple_set.insert(triple) {
                return Err(semantic(Some(line), format!("duplicate triple {} {} {}", t[0], t[1], t[2])));
            }
            triples.push(triple);
            continue;
        }

        let Some(&key) = KEYS.iter().find(|&&k| k == head.text) else {
            return Err(syntax(line, head.col, format!("unknown key {:?}", head.text)));
        };
        if seen.insert(key, line).is_some() {
            return Err(syntax(line, head.col, format!("repeated key {key:?}")));
        }
        let args = &tokens[1..];
        if key == "elements" {
            if args.len() != 1 {
                return Err(syntax(line, head.col, "elements takes exactly one count"));
            }
            let count = parse_usize(line, args[0])?;
            if count == 0 {
                return Err(semantic(Some(line), "carrier must be non-empty"));
            }
            if count > u32::MAX as usize - 1 {
                return Err(semantic(Some(line), "carrier too large"));
            }
            n = Some(count);
            continue;
        }
        let Some(n) = n else {
            return Err(syntax(line, head.col, "the first key must be elements"));
        };
        match key {
            "labels" => {
                if args.len() != n {
                    return Err(semantic(Some(line), format!("expected {n} labels, found {}", args.len())));
                }
                labels = Some(args.iter().map(|t| t.text.to_string()).collect());
            }
            "units" => {
                let mut u = args.iter().map(|&t| parse_index(line, t, n)).collect::<Result<Vec<_>, _>>()?;
                u.sort_unstable();
                if u.windows(2).any(|w| w[0] == w[1]) {
                    return Err(semantic(Some(line), "repeated unit"));
                }
                units = Some(u);
            }
            "triples" => {
                if let Some(t) = args.first() {
                    return Err(syntax(line, t.col, "triples header takes no arguments"));
                }
                in_triples = true;
            }
            map_key => {
                maps.insert(map_key, parse_pairs(line, map_key, args, n)?);
            }
        }
    }

    let Some(n) = n else {
        return Err(syntax(last_line.max(1), 1, "missing elements"));
    };
    if !in_triples {
        return Err(syntax(last_line, 1, "missing triples section"));
    }
    if !ended {
        return Err(syntax(last_line, 1, "missing end"));
    }

    let line_of = |k: &str| seen.get(k).copied();
    let total = |key: &str, map: &[Option<usize>]| -> Result<Vec<ElementId>, ParseError> {
        map.iter()
            .enumerate()
            .map(|(i, j)| j.map(ElementId::new).ok_or_else(|| semantic(line_of(key), format!("{key} is missing element {i}"))))
            .collect()
    };
    let inv = maps.get("inv").map(|m| total("inv", m)).transpose()?;
    let linv = maps.get("linv").map(|m| total("linv", m)).transpose()?;
    let rinv = maps.get("rinv").map(|m| total("rinv", m)).transpose()?;
    let model_error = |e: ModelError| {
        let line = match &e {
            ModelError::ImageNotUnit { which, .. } | ModelError::UnitNotFixed { which, .. } => line_of(which),
            ModelError::DuplicateLabel(_) | ModelError::InvalidLabel(_) => line_of("labels"),
            ModelError::MissingUnit(_) | ModelError::AmbiguousUnit(_) => line_of("triples"),
            _ => None,
        };
        semantic(line, e.to_string())
    };

    let parts = match (maps.get("alpha"), maps.get("beta")) {
        (None, None) => {
            let inferred = infer_structure(&triples, n).map_err(model_error)?;
            if let Some(u) = &units {
                if u.iter().map(|&i| ElementId::new(i)).ne(inferred.units().iter().copied()) {
                    return Err(semantic(line_of("units"), "units disagree with those inferred from the triples"));
                }
            }
            inferred.to_parts()
        }
        (Some(alpha), Some(beta)) => {
            let units: Vec<usize> = match units {
                Some(u) => u,
                None => (0..n).filter(|&i| alpha[i] == Some(i)).collect(),
            };
            let complete = |key: &str, map: &[Option<usize>]| -> Result<Vec<ElementId>, ParseError> {
                let mut map = map.to_vec();
                for &u in &units {
                    map[u].get_or_insert(u);
                }
                total(key, &map)
            };
            TableParts {
                n,
                units: units.iter().map(|&u| ElementId::new(u)).collect(),
                alpha: complete("alpha", alpha)?,
                beta: complete("beta", beta)?,
                triples,
                ..Default::default()
            }
        }
        (Some(_), None) | (None, Some(_)) => {
            let line = line_of("alpha").or(line_of("beta"));
            return Err(semantic(line, "alpha and beta must be given together"));
        }
    };
    TableParts { labels, inv, linv, rinv, ..parts }.build().map_err(model_error)
}

/// Writes a structure in the canonical layout: units ascending, full `alpha`
/// and `beta` maps, triples in lexicographic order. Labels are written only
/// when they differ from the decimal indices.
pub fn print(g: &StructureTable) -> String {
    let mut out = format!("elements {}\n", g.n());
    if !g.has_default_labels() {
        out.push_str("labels");
        for l in g.labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    out.push_str("units");
    for u in g.units() {
        out.push_str(&format!(" {u}"));
    }
    out.push('\n');
    write_pairs(&mut out, "alpha", g.alpha_map());
    write_pairs(&mut out, "beta", g.beta_map());
    for (key, map) in [("inv", g.inv()), ("linv", g.linv()), ("rinv", g.rinv())] {
        if let Some(m) = map {
            write_pairs(&mut out, key, m);
        }
    }
    out.push_str("triples\n");
    for &(a, b, c) in g.triples() {
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out.push_str("end\n");
    out
}
