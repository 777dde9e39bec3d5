//! Minimal crossing sequences: the `(B)C` decomposition and Dyck paths.
//!
//! A minimal sequence first throws ball 1 with `C_{k+1}`. `B` is what happens
//! before ball 1 is thrown again (balls `2..=k+1`), `C` everything from that
//! second throw on (ball 1 and balls `k+2..=b`). Either may be empty.

use std::fmt;
use std::str::FromStr;

use crate::cards::{is_minimal, reconstruct, throw_pattern, Arrangement, CardSequence};
use crate::error::{Error, Result};

use super::partition::{sequence_to_partition, SetPartition};

/// A balanced word over `U` (written `(`) and `D` (written `)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<bool>,
}

impl DyckPath {
    /// `true` is an up step.
    pub fn new(steps: Vec<bool>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, &up) in steps.iter().enumerate() {
            h += if up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidInput(format!(
                    "path dips below the axis at step {}",
                    i + 1
                )));
            }
        }
        if h != 0 {
            return Err(Error::InvalidInput("path does not return to the axis".into()));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Occurrences of `UD`.
    pub fn peaks(&self) -> usize {
        self.steps.windows(2).filter(|w| w[0] && !w[1]).count()
    }

    /// The `U`/`D` spelling.
    pub fn to_ud(&self) -> String {
        self.steps.iter().map(|&u| if u { 'U' } else { 'D' }).collect()
    }
}

/// Parenthesis spelling, `(()())`.
impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.steps.iter().map(|&u| if u { '(' } else { ')' }).collect();
        f.write_str(&s)
    }
}

/// Accepts `(`/`)` or `U`/`D`.
impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                '(' | 'U' | 'u' => Ok(true),
                ')' | 'D' | 'd' => Ok(false),
                _ => Err(Error::Parse(format!("unexpected character `{c}` in Dyck path"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

fn require_minimal(seq: &CardSequence) -> Result<()> {
    if !is_minimal(seq) {
        return Err(Error::NotInFamily(format!(
            "`{seq}` is not a minimal crossing sequence"
        )));
    }
    Ok(())
}

fn rebuild(b: usize, balls: &[usize]) -> Result<CardSequence> {
    let pattern: Vec<Vec<usize>> = balls.iter().map(|&x| vec![x]).collect();
    let (seq, left) = reconstruct(b, &pattern, &Arrangement::identity(b), false)?;
    if left != Arrangement::identity(b) {
        return Err(Error::Internal(format!(
            "pattern {balls:?} does not start at the identity"
        )));
    }
    Ok(seq)
}

/// `A ↦ (B, C)`.
pub fn split_minimal(seq: &CardSequence) -> Result<(Option<CardSequence>, Option<CardSequence>)> {
    require_minimal(seq)?;
    let b = seq.b();
    let p = throw_pattern(seq)
        .singles()
        .expect("minimal sequences are single-throw");
    let second = p.iter().skip(1).position(|&x| x == 1).map(|i| i + 1);
    let end_b = second.unwrap_or(p.len());
    let inner = &p[1..end_b];
    let k = inner.iter().copied().max().map_or(0, |m| m - 1);
    if inner.iter().any(|&x| x < 2) {
        return Err(Error::Internal("inner part contains ball 1".into()));
    }
    let b_part = if inner.is_empty() {
        None
    } else {
        let balls: Vec<usize> = inner.iter().map(|&x| x - 1).collect();
        Some(rebuild(k, &balls)?)
    };
    let c_part = match second {
        None => None,
        Some(s) => {
            let balls: Vec<usize> = p[s..].iter().map(|&x| if x == 1 { 1 } else { x - k }).collect();
            if balls.contains(&0) {
                return Err(Error::Internal("outer part reuses an inner ball".into()));
            }
            Some(rebuild(b - k, &balls)?)
        }
    };
    Ok((b_part, c_part))
}

/// `(B, C) ↦ A`, the inverse of [`split_minimal`].
pub fn join_minimal(inner: Option<&CardSequence>, outer: Option<&CardSequence>) -> Result<CardSequence> {
    for part in [inner, outer].into_iter().flatten() {
        require_minimal(part)?;
    }
    let k = inner.map_or(0, CardSequence::b);
    let c = outer.map_or(1, CardSequence::b);
    let b = k + c;
    let mut balls = vec![1];
    if let Some(inner) = inner {
        balls.extend(throw_pattern(inner).singles().unwrap().into_iter().map(|x| x + 1));
    }
    if let Some(outer) = outer {
        balls.extend(
            throw_pattern(outer)
                .singles()
                .unwrap()
                .into_iter()
                .map(|x| if x == 1 { 1 } else { x + k }),
        );
    }
    rebuild(b, &balls)
}

/// `D(A) = ( D(B) ) D(C)`, with `D` of an empty part empty.
pub fn minimal_to_dyck(seq: &CardSequence) -> Result<DyckPath> {
    fn spell(seq: &CardSequence, out: &mut Vec<bool>) -> Result<()> {
        let (inner, outer) = split_minimal(seq)?;
        out.push(true);
        if let Some(inner) = &inner {
            spell(inner, out)?;
        }
        out.push(false);
        if let Some(outer) = &outer {
            spell(outer, out)?;
        }
        Ok(())
    }
    let mut steps = Vec::with_capacity(2 * seq.len());
    spell(seq, &mut steps)?;
    DyckPath::new(steps)
}

pub fn dyck_to_minimal(path: &DyckPath) -> Result<CardSequence> {
    fn build(steps: &[bool]) -> Result<CardSequence> {
        // first return to the axis
        let mut h = 0i64;
        let mut close = 0;
        for (i, &up) in steps.iter().enumerate() {
            h += if up { 1 } else { -1 };
            if h == 0 {
                close = i;
                break;
            }
        }
        let inner = &steps[1..close];
        let outer = &steps[close + 1..];
        let inner = if inner.is_empty() {
            None
        } else {
            Some(build(inner)?)
        };
        let outer = if outer.is_empty() {
            None
        } else {
            Some(build(outer)?)
        };
        join_minimal(inner.as_ref(), outer.as_ref())
    }
    if path.steps.is_empty() {
        return Err(Error::InvalidInput("the empty path has no sequence".into()));
    }
    build(&path.steps)
}

/// Positions of each ball's throws; non-crossing for every minimal sequence.
pub fn sequence_to_noncrossing_partition(seq: &CardSequence) -> Result<SetPartition> {
    require_minimal(seq)?;
    let p = sequence_to_partition(seq)?;
    if !p.is_noncrossing() {
        return Err(Error::Internal(format!("throw positions of `{seq}` cross")));
    }
    Ok(p)
}
