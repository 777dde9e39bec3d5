use std::fmt;

use num_rational::Ratio;

use super::card::CardSequence;
use crate::error::{Error, Result};

/// Throw heights `(t_1, …, t_n)` of a periodic pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Siteswap {
    pub throws: Vec<usize>,
}

impl Siteswap {
    pub fn new(throws: Vec<usize>) -> Self {
        Self { throws }
    }

    pub fn period(&self) -> usize {
        self.throws.len()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let throws = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad throw height `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if throws.is_empty() {
            return Err(Error::Parse("empty siteswap".into()));
        }
        Ok(Self { throws })
    }
}

impl fmt::Display for Siteswap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.throws.iter().map(|t| t.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Siteswap of a single-throw sequence, read cyclically: `t_i` counts the
/// cards until the ball thrown at card `i` is back at the bottom.
pub fn siteswap_of(seq: &CardSequence) -> Result<Siteswap> {
    let heights = seq.heights().ok_or_else(|| {
        Error::Unsupported("siteswap of a sequence with multiplex cards is not defined".into())
    })?;
    let n = heights.len();
    let bound = seq.b() * n;
    let mut throws = Vec::with_capacity(n);
    for start in 0..n {
        let mut level = heights[start];
        let mut t = 1;
        while level != 1 {
            if t > bound {
                return Err(Error::Internal(format!(
                    "ball thrown at card {} did not return within {bound} cards",
                    start + 1
                )));
            }
            let h = heights[(start + t) % n];
            // the ball at `level` drops one level if the bottom ball is thrown above it
            if h >= level {
                level -= 1;
            }
            t += 1;
        }
        throws.push(t);
    }
    Ok(Siteswap { throws })
}

/// All landing residues `i + t_i (mod n)` are distinct.
pub fn verify_siteswap(t: &Siteswap) -> bool {
    let n = t.period();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for (i, &ti) in t.throws.iter().enumerate() {
        let r = (i + ti) % n;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// Average throw height `(Σ t_i) / n`.
pub fn ball_count(t: &Siteswap) -> Ratio<u64> {
    let total: u64 = t.throws.iter().map(|&x| x as u64).sum();
    Ratio::new(total, t.period().max(1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_cards_siteswap() {
        let seq = CardSequence::from_singles(4, &[3, 3, 2, 4, 3, 4, 3, 2, 2]).unwrap();
        let ss = siteswap_of(&seq).unwrap();
        assert_eq!(ss.throws, vec![3, 4, 2, 5, 3, 10, 5, 2, 2]);
        assert!(verify_siteswap(&ss));
        assert_eq!(ball_count(&ss), Ratio::from_integer(4));
    }

    #[test]
    fn small_siteswaps() {
        let ones = CardSequence::from_singles(1, &[1, 1, 1]).unwrap();
        assert_eq!(siteswap_of(&ones).unwrap().throws, vec![1, 1, 1]);
        let swap = CardSequence::from_singles(2, &[2, 2]).unwrap();
        assert_eq!(siteswap_of(&swap).unwrap().throws, vec![2, 2]);
    }

    #[test]
    fn validity() {
        assert!(verify_siteswap(&Siteswap::new(vec![3, 4, 5])));
        assert!(!verify_siteswap(&Siteswap::new(vec![3, 5, 4])));
        for b in 1..6 {
            for n in 1..6 {
                assert!(verify_siteswap(&Siteswap::new(vec![b; n])));
            }
        }
        assert_eq!(ball_count(&Siteswap::new(vec![3, 4, 5])), Ratio::from_integer(4));
        assert_eq!(ball_count(&Siteswap::new(vec![1, 1, 1])), Ratio::from_integer(1));
    }

    #[test]
    fn multiplex_rejected() {
        let seq = CardSequence::parse("C2,5 C5,2", None).unwrap();
        assert!(matches!(siteswap_of(&seq), Err(Error::Unsupported(_))));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Siteswap::parse("3,4,5").unwrap().throws, vec![3, 4, 5]);
        assert_eq!(Siteswap::parse("3 4 5").unwrap().throws, vec![3, 4, 5]);
        assert!(Siteswap::parse("3,x").is_err());
    }
}
