use std::fmt;
use std::str::FromStr;

use crate::cards::{Card, CardSequence};
use crate::error::{Error, Result};

/// Which cards a sequence may draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CardFamily {
    /// `C_1, …, C_b`.
    SingleThrow,
    /// Every ordered `m`-subset of `[b]`.
    Ordered(usize),
    /// Ascending `m`-subsets of `[b]`: the thrown balls keep their order.
    OrderPreserving(usize),
}

impl CardFamily {
    pub fn throws(&self) -> usize {
        match *self {
            CardFamily::SingleThrow => 1,
            CardFamily::Ordered(m) | CardFamily::OrderPreserving(m) => m,
        }
    }

    /// All cards of the family for `b` balls, in lexicographic target order.
    pub fn cards(&self, b: usize) -> Vec<Card> {
        let targets = match *self {
            CardFamily::SingleThrow => ordered_subsets(b, 1),
            CardFamily::Ordered(m) => ordered_subsets(b, m),
            CardFamily::OrderPreserving(m) => order_preserving_subsets(b, m),
        };
        targets.into_iter().map(|t| Card::new_unchecked(b, t)).collect()
    }
}

impl fmt::Display for CardFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardFamily::SingleThrow => write!(f, "single"),
            CardFamily::Ordered(m) => write!(f, "ordered:{m}"),
            CardFamily::OrderPreserving(m) => write!(f, "order-preserving:{m}"),
        }
    }
}

impl FromStr for CardFamily {
    type Err = Error;

    /// `single`, `ordered:M` or `order-preserving:M`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "single" {
            return Ok(CardFamily::SingleThrow);
        }
        let (kind, m) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("unknown card family `{s}`")))?;
        let m: usize = m
            .parse()
            .map_err(|_| Error::Parse(format!("bad throw count in `{s}`")))?;
        if m == 0 {
            return Err(Error::Parse("throw count must be at least 1".into()));
        }
        match kind {
            "ordered" => Ok(CardFamily::Ordered(m)),
            "order-preserving" => Ok(CardFamily::OrderPreserving(m)),
            _ => Err(Error::Parse(format!("unknown card family `{s}`"))),
        }
    }
}

/// Ordered `m`-subsets of `[b]` (distinct entries), lexicographic.
pub fn ordered_subsets(b: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(b: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in 1..=b {
            if !cur.contains(&x) {
                cur.push(x);
                rec(b, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if m >= 1 && m <= b {
        rec(b, m, &mut Vec::with_capacity(m), &mut out);
    }
    out
}

/// Increasing `m`-subsets of `[b]`, lexicographic.
pub fn order_preserving_subsets(b: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, b: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..=b {
            cur.push(x);
            rec(x + 1, b, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m >= 1 && m <= b {
        rec(1, b, m, &mut Vec::with_capacity(m), &mut out);
    }
    out
}

/// Every length-`n` sequence over a family, lexicographic in card order.
/// Restartable: clone the iterator or build a new one.
#[derive(Debug, Clone)]
pub struct AllSequences {
    b: usize,
    cards: Vec<Card>,
    idx: Vec<usize>,
    done: bool,
}

pub fn all_sequences(b: usize, n: usize, family: CardFamily) -> AllSequences {
    let cards = family.cards(b);
    let done = cards.is_empty() || n == 0;
    AllSequences {
        b,
        cards,
        idx: vec![0; n],
        done,
    }
}

impl Iterator for AllSequences {
    type Item = CardSequence;

    fn next(&mut self) -> Option<CardSequence> {
        if self.done {
            return None;
        }
        let seq =
            CardSequence::new_unchecked(self.b, self.idx.iter().map(|&i| self.cards[i].clone()).collect());
        // odometer, last position fastest
        let mut p = self.idx.len();
        loop {
            if p == 0 {
                self.done = true;
                break;
            }
            p -= 1;
            self.idx[p] += 1;
            if self.idx[p] < self.cards.len() {
                break;
            }
            self.idx[p] = 0;
        }
        Some(seq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(all_sequences(2, 2, CardFamily::SingleThrow).count(), 4);
        assert_eq!(all_sequences(4, 1, CardFamily::Ordered(2)).count(), 12);
        assert_eq!(all_sequences(4, 1, CardFamily::OrderPreserving(2)).count(), 6);
        assert_eq!(ordered_subsets(3, 4).len(), 0);
        assert_eq!(ordered_subsets(5, 3).len(), 60);
    }

    #[test]
    fn lexicographic_and_distinct() {
        let seqs: Vec<String> = all_sequences(3, 3, CardFamily::SingleThrow)
            .map(|s| s.to_string())
            .collect();
        assert_eq!(seqs.len(), 27);
        assert_eq!(seqs[0], "C1 C1 C1");
        assert_eq!(seqs[1], "C1 C1 C2");
        assert_eq!(seqs[26], "C3 C3 C3");
        let mut dedup = seqs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 27);
    }

    #[test]
    fn family_parse_roundtrip() {
        for f in [
            CardFamily::SingleThrow,
            CardFamily::Ordered(2),
            CardFamily::OrderPreserving(3),
        ] {
            assert_eq!(f.to_string().parse::<CardFamily>().unwrap(), f);
        }
        assert!("ordered:0".parse::<CardFamily>().is_err());
        assert!("bogus".parse::<CardFamily>().is_err());
    }
}
