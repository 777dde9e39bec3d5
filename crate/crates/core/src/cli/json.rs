//! JSON encodings shared by the subcommands, and the text forms they accept.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bijections::{CoverMatrix, LabeledDigraph, Multigraph, OrderedSubsetFamily, SetPartition};
use crate::cards::{Arrangement, CardSequence, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
pub struct SequenceJson {
    pub b: usize,
    pub cards: Vec<String>,
}

impl From<&CardSequence> for SequenceJson {
    fn from(seq: &CardSequence) -> Self {
        Self {
            b: seq.b(),
            cards: seq.cards().iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    pub k: usize,
    pub sets: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DigraphJson {
    pub k: usize,
    pub arcs: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MultigraphJson {
    pub k: usize,
    pub edges: Vec<(usize, usize)>,
}

fn json_err(what: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{what}: {e}"))
}

fn is_json(text: &str) -> bool {
    matches!(text.trim_start().chars().next(), Some('{' | '[' | '"'))
}

/// `C3 C3 C2`, or `{"b": 4, "cards": ["C3", …]}`. An explicit `b` wins over
/// the one implied by the largest target.
pub fn parse_sequence(text: &str, b: Option<usize>) -> Result<CardSequence> {
    if is_json(text) {
        let j: SequenceJson = serde_json::from_str(text).map_err(|e| json_err("sequence", e))?;
        if let Some(b) = b {
            if b != j.b {
                return Err(Error::BallCountMismatch {
                    expected: b,
                    found: j.b,
                });
            }
        }
        return CardSequence::parse(&j.cards.join(" "), Some(j.b));
    }
    CardSequence::parse(text, b)
}

/// `1,4,9/2,6/7`, or a list of blocks.
pub fn parse_partition(text: &str) -> Result<SetPartition> {
    if is_json(text) {
        let blocks: Vec<Vec<usize>> = serde_json::from_str(text).map_err(|e| json_err("partition", e))?;
        let n = blocks.iter().map(Vec::len).sum();
        return SetPartition::new(n, blocks);
    }
    text.parse()
}

pub fn partition_json(p: &SetPartition) -> Value {
    serde_json::to_value(p.blocks()).expect("plain data")
}

/// `{"k": 5, "sets": [[1,2], …]}`, or a bare list of sets (then `k` is the
/// largest symbol).
pub fn parse_family(text: &str) -> Result<OrderedSubsetFamily> {
    let v: Value = serde_json::from_str(text).map_err(|e| json_err("family", e))?;
    let (k, sets) = if v.is_array() {
        let sets: Vec<Vec<usize>> = serde_json::from_value(v).map_err(|e| json_err("family", e))?;
        let k = sets.iter().flatten().copied().max().unwrap_or(0);
        (k, sets)
    } else {
        let f: FamilyJson = serde_json::from_value(v).map_err(|e| json_err("family", e))?;
        (f.k, f.sets)
    };
    OrderedSubsetFamily::new(k, sets)
}

pub fn family_json(f: &OrderedSubsetFamily) -> Value {
    serde_json::to_value(FamilyJson {
        k: f.k(),
        sets: f.sets().to_vec(),
    })
    .expect("plain data")
}

/// `{"k": 5, "arcs": [[3,5], …]}`.
pub fn parse_digraph(text: &str) -> Result<LabeledDigraph> {
    let d: DigraphJson = serde_json::from_str(text).map_err(|e| json_err("digraph", e))?;
    LabeledDigraph::new(d.k, d.arcs)
}

pub fn digraph_json(g: &LabeledDigraph) -> Value {
    serde_json::to_value(DigraphJson {
        k: g.k(),
        arcs: g.arcs().to_vec(),
    })
    .expect("plain data")
}

/// A 0/1 matrix, rows are virtual balls. `m` is read off the first column.
pub fn parse_cover(text: &str) -> Result<CoverMatrix> {
    let rows: Vec<Vec<u8>> = serde_json::from_str(text).map_err(|e| json_err("cover", e))?;
    let m = rows.iter().filter(|r| r.first() == Some(&1)).count();
    CoverMatrix::from_ints(m, &rows)
}

pub fn cover_json(c: &CoverMatrix) -> Value {
    serde_json::to_value(c.to_ints()).expect("plain data")
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let g: MultigraphJson = serde_json::from_str(text).map_err(|e| json_err("multigraph", e))?;
    Ok(Multigraph {
        k: g.k,
        edges: g.edges,
    })
}

pub fn multigraph_json(g: &Multigraph) -> Value {
    serde_json::to_value(MultigraphJson {
        k: g.k,
        edges: g.edges.clone(),
    })
    .expect("plain data")
}

/// `3,1,4,2` or `[3,1,4,2]`.
pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
        .collect()
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    Arrangement::new(parse_list(text)?)
}

/// `id`, cycle notation `(1 2 4 3)(5 6)`, or the one-line image `2,4,1,3`.
pub fn parse_permutation(text: &str, b: Option<usize>) -> Result<Permutation> {
    let t = text.trim();
    if t == "id" || t == "()" {
        let b = b.ok_or_else(|| Error::InvalidInput("the identity needs --b".into()))?;
        return Ok(Permutation::identity(b));
    }
    if t.starts_with('(') {
        let mut cycles = Vec::new();
        for chunk in t.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let body = chunk
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("bad cycle notation `{t}`")))?;
            cycles.push(parse_list(body)?);
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        return Permutation::from_cycles(b.unwrap_or(max).max(max), &cycles);
    }
    let p = Permutation::new(parse_list(t)?)?;
    if let Some(b) = b {
        if p.len() != b {
            return Err(Error::BallCountMismatch {
                expected: b,
                found: p.len(),
            });
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_forms() {
        assert_eq!(
            parse_permutation("(1 2 4 3)", Some(4)).unwrap().image(),
            &[2, 4, 1, 3]
        );
        assert_eq!(
            parse_permutation("2,4,1,3", None).unwrap().to_string(),
            "(1 2 4 3)"
        );
        assert!(parse_permutation("id", Some(3)).unwrap().is_identity());
        assert!(parse_permutation("id", None).is_err());
        assert!(parse_permutation("(1 2)(2 3)", None).is_err());
    }

    #[test]
    fn sequence_forms() {
        let a = parse_sequence("C2 C1", Some(3)).unwrap();
        let j = serde_json::to_string(&SequenceJson::from(&a)).unwrap();
        assert_eq!(j, r#"{"b":3,"cards":["C2","C1"]}"#);
        assert_eq!(parse_sequence(&j, None).unwrap(), a);
        assert!(parse_sequence(&j, Some(4)).is_err());
    }

    #[test]
    fn structure_forms() {
        let p = parse_partition("[[1,4],[2],[3]]").unwrap();
        assert_eq!(p.to_string(), "1,4/2/3");
        assert_eq!(parse_partition(&partition_json(&p).to_string()).unwrap(), p);
        let c = parse_cover("[[1,1],[1,0],[0,1]]").unwrap();
        assert_eq!(c.m(), 2);
        assert_eq!(parse_cover(&cover_json(&c).to_string()).unwrap(), c);
        let f = parse_family("[[1,2],[2,1]]").unwrap();
        assert_eq!(f.k(), 2);
        assert_eq!(parse_family(&family_json(&f).to_string()).unwrap(), f);
    }
}
