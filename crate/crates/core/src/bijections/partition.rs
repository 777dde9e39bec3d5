use std::fmt;
use std::str::FromStr;

use crate::cards::{l_of, reconstruct, throw_pattern, Arrangement, CardSequence};
use crate::error::{Error, Result};

/// A set partition of `[n]`, blocks sorted internally and by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n {
                    return Err(Error::OutOfRange {
                        what: "partition element",
                        value: x,
                        lo: 1,
                        hi: n,
                    });
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidInput(format!("{x} lies in two blocks")));
                }
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidInput(format!("{x} is in no block")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Partition whose block `i` holds the positions labelled `i`.
    /// Labels need not be canonical.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut order: Vec<usize> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (pos, &l) in labels.iter().enumerate() {
            match order.iter().position(|&x| x == l) {
                Some(i) => blocks[i].push(pos + 1),
                None => {
                    order.push(l);
                    blocks.push(vec![pos + 1]);
                }
            }
        }
        SetPartition {
            n: labels.len(),
            blocks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index (1-based, canonical order) of each element of `[n]`.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &x in block {
                out[x - 1] = i + 1;
            }
        }
        out
    }

    /// No `p < q < r < s` with `p, r` in one block and `q, s` in another.
    pub fn is_noncrossing(&self) -> bool {
        let labels = self.labels();
        let n = labels.len();
        for p in 0..n {
            for q in p + 1..n {
                if labels[q] == labels[p] {
                    continue;
                }
                for r in q + 1..n {
                    if labels[r] != labels[p] {
                        continue;
                    }
                    if labels[r + 1..].contains(&labels[q]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for SetPartition {
    /// `1,4,9/2,6/3,5,8/7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join("/"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in s.trim().split('/') {
            let block: Vec<usize> = part
                .split(',')
                .map(|t| {
                    t.trim()
                        .trim_matches(|c| c == '{' || c == '}')
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad partition element `{t}`")))
                })
                .collect::<Result<_>>()?;
            blocks.push(block);
        }
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::new(n, blocks)
    }
}

/// Checks `b - L(σ) ≤ k ≤ b` for the arrangement `target`.
pub(crate) fn check_symbol_range(k: usize, target: &Arrangement, b: usize) -> Result<()> {
    if target.len() != b {
        return Err(Error::BallCountMismatch {
            expected: b,
            found: target.len(),
        });
    }
    let lo = b - l_of(&target.permutation());
    if k < lo || k > b {
        return Err(Error::OutOfRange {
            what: "number of thrown balls k (need b - L(σ) ≤ k ≤ b)",
            value: k,
            lo,
            hi: b,
        });
    }
    Ok(())
}

/// The single-throw sequence ending in `target` whose ball `i` is thrown at
/// exactly the positions of block `i`.
pub fn partition_to_sequence(p: &SetPartition, target: &Arrangement, b: usize) -> Result<CardSequence> {
    check_symbol_range(p.block_count(), target, b)?;
    let pattern: Vec<Vec<usize>> = p.labels().into_iter().map(|l| vec![l]).collect();
    let (seq, left) = reconstruct(b, &pattern, target, false)?;
    if left != Arrangement::identity(b) {
        return Err(Error::Internal(format!(
            "left arrangement {left} is not the identity"
        )));
    }
    Ok(seq)
}

/// Block `i` holds the positions where ball `i` is thrown.
pub fn sequence_to_partition(seq: &CardSequence) -> Result<SetPartition> {
    let balls = throw_pattern(seq)
        .singles()
        .ok_or_else(|| Error::Unsupported("partition of a multiplex sequence".into()))?;
    Ok(SetPartition::from_labels(&balls))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cards::{final_arrangement, sequence_permutation};
    use crate::enumeration::{all_sequences, CardFamily};

    #[test]
    fn worked_partition() {
        let p: SetPartition = "1,4,9/2,6/3,5,8/7".parse().unwrap();
        let target = Arrangement::new(vec![3, 1, 4, 2]).unwrap();
        let seq = partition_to_sequence(&p, &target, 4).unwrap();
        assert_eq!(seq.to_string(), "C3 C3 C2 C4 C3 C4 C3 C2 C2");
        assert_eq!(sequence_to_partition(&seq).unwrap(), p);
    }

    #[test]
    fn degenerate_partitions() {
        let singles = SetPartition::new(4, (1..=4).map(|x| vec![x]).collect()).unwrap();
        let seq = partition_to_sequence(&singles, &Arrangement::identity(4), 4).unwrap();
        assert!(sequence_permutation(&seq).is_identity());
        let one = SetPartition::new(5, vec![(1..=5).collect()]).unwrap();
        let seq = partition_to_sequence(&one, &Arrangement::identity(1), 1).unwrap();
        assert_eq!(seq.to_string(), "C1 C1 C1 C1 C1");
    }

    #[test]
    fn range_is_enforced() {
        // [1,3,2] has L = 1, so k ≥ 2
        let target = Arrangement::new(vec![1, 3, 2]).unwrap();
        let p = SetPartition::new(3, vec![vec![1, 2, 3]]).unwrap();
        let err = partition_to_sequence(&p, &target, 3).unwrap_err();
        assert!(err.to_string().contains("L(σ)"), "{err}");
        let four = SetPartition::new(4, (1..=4).map(|x| vec![x]).collect()).unwrap();
        assert!(partition_to_sequence(&four, &Arrangement::identity(3), 3).is_err());
    }

    #[test]
    fn roundtrip_all_sequences() {
        for n in 1..=5 {
            for seq in all_sequences(3, n, CardFamily::SingleThrow) {
                let p = sequence_to_partition(&seq).unwrap();
                let back = partition_to_sequence(&p, &final_arrangement(&seq), 3).unwrap();
                assert_eq!(back, seq);
            }
        }
    }

    #[test]
    fn noncrossing_test() {
        assert!("1,3/2".parse::<SetPartition>().unwrap().is_noncrossing());
        assert!(!"1,3/2,4".parse::<SetPartition>().unwrap().is_noncrossing());
        assert!("1,4/2,3".parse::<SetPartition>().unwrap().is_noncrossing());
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2, 3], vec![]]).is_err());
    }
}
