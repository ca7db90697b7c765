//! Line-oriented text format for posets and spaces, plus the small argument
//! grammars used by the CLI (point lists, set families, nets).
//!
//! ```text
//! # a poset, reflexive-transitive closure applied
//! poset 3
//! le 0 1
//! le 1 2
//! ```
//!
//! ```text
//! # an explicit space; bare `open` is the empty set
//! space 2
//! open
//! open 1
//! open 0 1
//! ```

use crate::point_set::PointSet;
use crate::poset::{FinitePoset, PosetError};
use crate::space::{FiniteSpace, SpaceError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DslError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("{0}")]
    Poset(#[from] PosetError),
    #[error("{0}")]
    Space(#[from] SpaceError),
}

pub fn parse_space(text: &str) -> Result<FiniteSpace, DslError> {
    // `/` separates statements within a physical line, so the inline form
    // `poset 2 / le 0 1` loads as-is. Comments run to the end of the line.
    let mut lines = text
        .lines()
        .enumerate()
        .flat_map(|(k, l)| {
            l.split('#')
                .next()
                .unwrap_or("")
                .split('/')
                .map(move |part| (k + 1, part.trim()))
                .collect::<Vec<_>>()
        })
        .filter(|(_, l)| !l.is_empty());

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| DslError::Parse(0, "empty input".into()))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap();
    let n: usize = words
        .next()
        .ok_or_else(|| DslError::Parse(lineno, format!("`{kind}` needs a point count")))?
        .parse()
        .map_err(|_| DslError::Parse(lineno, "point count must be a number".into()))?;
    if words.next().is_some() {
        return Err(DslError::Parse(lineno, "trailing tokens after header".into()));
    }

    match kind {
        "poset" => {
            let mut pairs = Vec::new();
            for (ln, line) in lines {
                let mut w = line.split_whitespace();
                if w.next() != Some("le") {
                    return Err(DslError::Parse(ln, format!("expected `le i j`, got `{line}`")));
                }
                let i = parse_num(w.next(), ln)?;
                let j = parse_num(w.next(), ln)?;
                if w.next().is_some() {
                    return Err(DslError::Parse(ln, "trailing tokens after `le i j`".into()));
                }
                pairs.push((i, j));
            }
            let poset = FinitePoset::from_le_pairs(n, &pairs)?;
            Ok(FiniteSpace::alexandroff(poset))
        }
        "space" => {
            let mut opens = Vec::new();
            for (ln, line) in lines {
                let mut w = line.split_whitespace();
                if w.next() != Some("open") {
                    return Err(DslError::Parse(ln, format!("expected `open ...`, got `{line}`")));
                }
                let mut set = PointSet::EMPTY;
                for tok in w {
                    let p: usize = tok
                        .parse()
                        .map_err(|_| DslError::Parse(ln, format!("bad point `{tok}`")))?;
                    if p >= n {
                        return Err(DslError::Parse(
                            ln,
                            format!("point {p} out of range for carrier of size {n}"),
                        ));
                    }
                    set = set.with(p);
                }
                opens.push(set);
            }
            Ok(FiniteSpace::from_opens(n, &opens)?)
        }
        other => Err(DslError::Parse(
            lineno,
            format!("expected `poset <n>` or `space <n>`, got `{other}`"),
        )),
    }
}

fn parse_num(tok: Option<&str>, lineno: usize) -> Result<usize, DslError> {
    tok.ok_or_else(|| DslError::Parse(lineno, "missing point index".into()))?
        .parse()
        .map_err(|_| DslError::Parse(lineno, "point index must be a number".into()))
}

/// Emits the poset form; covering pairs only, since the closure is reapplied
/// on load.
pub fn emit_poset(poset: &FinitePoset) -> String {
    let mut out = format!("poset {}\n", poset.n());
    for (i, j) in poset.covers() {
        out.push_str(&format!("le {i} {j}\n"));
    }
    out
}

/// One-line form of `emit_poset`, accepted back by `parse_space`; used in
/// counterexample payloads so they can be re-fed to the CLI directly.
pub fn emit_poset_inline(poset: &FinitePoset) -> String {
    emit_poset(poset)
        .lines()
        .collect::<Vec<_>>()
        .join(" / ")
}

/// `0,2` style point lists.
pub fn parse_point_list(text: &str) -> Result<PointSet, DslError> {
    let mut set = PointSet::EMPTY;
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(set);
    }
    for tok in trimmed.split(',') {
        let p: usize = tok
            .trim()
            .parse()
            .map_err(|_| DslError::Parse(0, format!("bad point `{tok}` in list `{text}`")))?;
        if p >= crate::point_set::MAX_POINTS {
            return Err(DslError::Parse(0, format!("point {p} exceeds the carrier cap")));
        }
        set = set.with(p);
    }
    Ok(set)
}

/// `[0];[0,1]` style set families (brackets optional).
pub fn parse_family(text: &str) -> Result<Vec<PointSet>, DslError> {
    text.split(';')
        .map(|part| parse_point_list(part.trim().trim_start_matches('[').trim_end_matches(']')))
        .collect()
}

/// `0:1,1:0` style index:point assignments, returned as a dense table.
pub fn parse_net(text: &str, index_size: usize) -> Result<Vec<usize>, DslError> {
    let mut table: Vec<Option<usize>> = vec![None; index_size];
    for tok in text.split(',') {
        let (i_str, p_str) = tok
            .split_once(':')
            .ok_or_else(|| DslError::Parse(0, format!("expected `index:point`, got `{tok}`")))?;
        let i: usize = i_str
            .trim()
            .parse()
            .map_err(|_| DslError::Parse(0, format!("bad index `{i_str}`")))?;
        let p: usize = p_str
            .trim()
            .parse()
            .map_err(|_| DslError::Parse(0, format!("bad point `{p_str}`")))?;
        if i >= index_size {
            return Err(DslError::Parse(
                0,
                format!("net index {i} out of range for index set of size {index_size}"),
            ));
        }
        if table[i].is_some() {
            return Err(DslError::Parse(0, format!("net index {i} assigned twice")));
        }
        table[i] = Some(p);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| DslError::Parse(0, format!("net index {i} unassigned"))))
        .collect()
}
