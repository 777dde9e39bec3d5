use crate::cards::{reconstruct, throw_pattern, Arrangement, CardSequence};
use crate::error::{Error, Result};

use super::partition::check_symbol_range;

/// `n` ordered `m`-subsets of the symbols `[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSubsetFamily {
    k: usize,
    sets: Vec<Vec<usize>>,
}

impl OrderedSubsetFamily {
    /// Checks symbols in `[k]`, distinct within each set, and equal set
    /// sizes. Symbols that never occur are allowed here; canonicalization
    /// rejects them.
    pub fn new(k: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let m = sets.first().map(Vec::len).unwrap_or(0);
        if m == 0 {
            return Err(Error::InvalidInput("a family needs nonempty sets".into()));
        }
        for set in &sets {
            if set.len() != m {
                return Err(Error::InvalidInput(
                    "sets of a family must have equal size".into(),
                ));
            }
            for (i, &x) in set.iter().enumerate() {
                if x == 0 || x > k {
                    return Err(Error::OutOfRange {
                        what: "family symbol",
                        value: x,
                        lo: 1,
                        hi: k,
                    });
                }
                if set[..i].contains(&x) {
                    return Err(Error::InvalidInput(format!("symbol {x} repeated in one set")));
                }
            }
        }
        Ok(Self { k, sets })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.sets[0].len()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// First occurrences of `1, …, k` appear in increasing order.
    pub fn is_canonical(&self) -> bool {
        let mut next = 1;
        for &x in self.sets.iter().flatten() {
            if x == next {
                next += 1;
            } else if x > next {
                return false;
            }
        }
        next == self.k + 1
    }
}

/// Relabel `xs` by order of first occurrence, `1, 2, …`.
pub fn canonical_relabel(xs: &[usize]) -> Vec<usize> {
    let mut seen: Vec<usize> = Vec::new();
    xs.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(i) => i + 1,
            None => {
                seen.push(*x);
                seen.len()
            }
        })
        .collect()
}

/// Rename symbols so that their first occurrences read `1, 2, …, k`.
pub fn canonicalize_family(f: &OrderedSubsetFamily) -> Result<OrderedSubsetFamily> {
    let flat: Vec<usize> = f.sets.iter().flatten().copied().collect();
    let relabelled = canonical_relabel(&flat);
    let used = relabelled.iter().copied().max().unwrap_or(0);
    if used != f.k {
        let missing = (1..=f.k).find(|x| !flat.contains(x)).unwrap_or(0);
        return Err(Error::InvalidInput(format!(
            "symbol {missing} never occurs, so the family is not a cover of [{}]",
            f.k
        )));
    }
    let m = f.m();
    Ok(OrderedSubsetFamily {
        k: f.k,
        sets: relabelled.chunks(m).map(<[usize]>::to_vec).collect(),
    })
}

/// The sequence ending in `target` whose card `i` throws the balls of set
/// `i`, bottom first.
pub fn family_to_sequence(f: &OrderedSubsetFamily, target: &Arrangement, b: usize) -> Result<CardSequence> {
    if !f.is_canonical() {
        return Err(Error::InvalidInput("family is not canonical".into()));
    }
    check_symbol_range(f.k, target, b)?;
    let (seq, left) = reconstruct(b, &f.sets, target, false)?;
    if left != Arrangement::identity(b) {
        return Err(Error::Internal(format!(
            "left arrangement {left} is not the identity"
        )));
    }
    Ok(seq)
}

/// The balls thrown at each card, as a canonical family over the balls that
/// are ever thrown.
pub fn sequence_to_family(seq: &CardSequence) -> Result<OrderedSubsetFamily> {
    let pattern = throw_pattern(seq);
    let k = pattern.throws().iter().flatten().copied().max().unwrap_or(0);
    let f = OrderedSubsetFamily::new(k, pattern.throws().to_vec())?;
    canonicalize_family(&f)
}

/// Loopless directed multigraph on `[k]`; arc `i` carries label `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledDigraph {
    k: usize,
    arcs: Vec<(usize, usize)>,
}

impl LabeledDigraph {
    pub fn new(k: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::InvalidInput("a digraph needs at least one arc".into()));
        }
        for &(t, h) in &arcs {
            if t == h {
                return Err(Error::InvalidInput(format!("loop at vertex {t}")));
            }
            if t == 0 || h == 0 || t > k || h > k {
                return Err(Error::OutOfRange {
                    what: "vertex",
                    value: t.max(h).max(1),
                    lo: 1,
                    hi: k,
                });
            }
        }
        Ok(Self { k, arcs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }
}

/// `Y_j = (tail_j, head_j)`, canonicalized.
pub fn digraph_to_family(g: &LabeledDigraph) -> Result<OrderedSubsetFamily> {
    let sets = g.arcs.iter().map(|&(t, h)| vec![t, h]).collect();
    canonicalize_family(&OrderedSubsetFamily::new(g.k, sets)?)
}

/// Inverse of [`digraph_to_family`] on canonical families of pairs.
pub fn family_to_digraph(f: &OrderedSubsetFamily) -> Result<LabeledDigraph> {
    if f.m() != 2 {
        return Err(Error::InvalidInput(format!(
            "need ordered pairs, found m = {}",
            f.m()
        )));
    }
    LabeledDigraph::new(f.k, f.sets.iter().map(|s| (s[0], s[1])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::{partition_to_sequence, SetPartition};
    use crate::cards::{final_arrangement, sequence_permutation};
    use crate::enumeration::enumerate_labeled_digraphs;

    /// The six-arc digraph on x_1..x_5, as written in the text.
    fn printed_digraph() -> LabeledDigraph {
        LabeledDigraph::new(5, vec![(3, 5), (1, 3), (2, 1), (5, 2), (1, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn printed_family_relabels() {
        let f = digraph_to_family(&printed_digraph()).unwrap();
        // x_3, x_5, x_1, x_2, x_4 become 1..5
        assert_eq!(
            f.sets(),
            &[
                vec![1, 2],
                vec![3, 1],
                vec![4, 3],
                vec![2, 4],
                vec![3, 5],
                vec![1, 5]
            ]
        );
        assert!(f.is_canonical());
        assert_eq!(canonicalize_family(&f).unwrap(), f);
    }

    #[test]
    fn printed_family_to_sequence() {
        let f = digraph_to_family(&printed_digraph()).unwrap();
        let target = Arrangement::new(vec![4, 5, 2, 1, 3]).unwrap();
        let seq = family_to_sequence(&f, &target, 5).unwrap();
        assert_eq!(final_arrangement(&seq), target);
        assert_eq!(sequence_to_family(&seq).unwrap(), f);
        assert!(seq.cards().iter().all(|c| c.throws() == 2));
    }

    #[test]
    fn unused_symbol_is_rejected() {
        let f = OrderedSubsetFamily::new(3, vec![vec![1, 2]]).unwrap();
        assert!(canonicalize_family(&f).is_err());
    }

    #[test]
    fn single_arc() {
        let g = LabeledDigraph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(digraph_to_family(&g).unwrap().sets(), &[vec![1, 2]]);
        assert!(LabeledDigraph::new(2, vec![(1, 1)]).is_err());
    }

    #[test]
    fn one_throw_matches_partitions() {
        for n in 1..=4 {
            for labels in crate::enumeration::restricted_growth_strings(n) {
                let k = *labels.iter().max().unwrap();
                let f = OrderedSubsetFamily::new(k, labels.iter().map(|&l| vec![l]).collect()).unwrap();
                let p = SetPartition::from_labels(&labels);
                for sigma in crate::cards::Permutation::all(3) {
                    let target = crate::cards::arrangement_of(&sigma);
                    let a = family_to_sequence(&f, &target, 3);
                    let b = partition_to_sequence(&p, &target, 3);
                    assert_eq!(a.is_ok(), b.is_ok());
                    if let (Ok(a), Ok(b)) = (a, b) {
                        assert_eq!(a, b);
                        assert_eq!(sequence_permutation(&a), sigma);
                    }
                }
            }
        }
    }

    #[test]
    fn digraph_roundtrip() {
        for k in 1..=3 {
            for n in 1..=3 {
                for g in enumerate_labeled_digraphs(n, k) {
                    let f = digraph_to_family(&g).unwrap();
                    assert_eq!(family_to_digraph(&f).unwrap(), g);
                    let seq = family_to_sequence(&f, &Arrangement::identity(k), k).unwrap();
                    assert_eq!(sequence_to_family(&seq).unwrap(), f);
                }
            }
        }
    }
}
