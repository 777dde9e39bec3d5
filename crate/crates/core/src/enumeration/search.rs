//! Depth-first search over card sequences with prefix pruning.
//!
//! The only pruning rule is the crossing budget: crossings never decrease as
//! a prefix grows, so a prefix already over budget has no admissible
//! extension. The permutation is not monotone and is only tested at leaves.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::families::CardFamily;
use crate::cards::{arrangement_of, Card, CardSequence, Permutation};
use crate::counting::BigCount;
use crate::error::{Error, Result};

/// Conditions a sequence must satisfy to be counted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Query {
    /// Required final arrangement (bottom-to-top), i.e. a fixed `π_A`.
    pub arrangement: Option<Vec<usize>>,
    /// Required exact crossing count.
    pub crossings: Option<usize>,
    /// Some card is the single-throw top card `C_b`.
    pub uses_top: bool,
    /// No card is `C_1`.
    pub primitive: bool,
}

impl Query {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn with_permutation(mut self, perm: &Permutation) -> Self {
        self.arrangement = Some(arrangement_of(perm).order().to_vec());
        self
    }

    pub fn with_crossings(mut self, c: usize) -> Self {
        self.crossings = Some(c);
        self
    }

    pub fn using_top(mut self) -> Self {
        self.uses_top = true;
        self
    }

    pub fn primitive(mut self) -> Self {
        self.primitive = true;
        self
    }

    /// `π_A = id`, uses `C_b`, `Cr = b(b-1) + extra`.
    pub fn identity_with_crossings(b: usize, extra: usize) -> Self {
        Self::all()
            .with_permutation(&Permutation::identity(b))
            .with_crossings(b * (b - 1) + extra)
            .using_top()
    }
}

struct Search<'a> {
    b: usize,
    n: usize,
    cards: Vec<(Card, usize, bool)>,
    query: &'a Query,
}

impl<'a> Search<'a> {
    fn new(b: usize, n: usize, family: CardFamily, query: &'a Query) -> Self {
        let cards = family
            .cards(b)
            .into_iter()
            .filter(|c| !(query.primitive && c.is_trivial()))
            .map(|c| {
                let cr = c.crossings();
                let top = c.targets() == [b];
                (c, cr, top)
            })
            .collect();
        Search { b, n, cards, query }
    }

    fn accepts(&self, arr: &[usize], cross: usize, top: bool) -> bool {
        if self.query.uses_top && !top {
            return false;
        }
        if let Some(c) = self.query.crossings {
            if cross != c {
                return false;
            }
        }
        match &self.query.arrangement {
            Some(target) => arr == target.as_slice(),
            None => true,
        }
    }

    fn over_budget(&self, cross: usize) -> bool {
        matches!(self.query.crossings, Some(c) if cross > c)
    }

    /// Visits every accepted completion of the prefix, in lexicographic order.
    fn walk<F: FnMut(&[usize], &[usize])>(
        &self,
        prefix: &mut Vec<usize>,
        arr: &[usize],
        cross: usize,
        top: bool,
        visit: &mut F,
    ) {
        if self.over_budget(cross) {
            return;
        }
        if prefix.len() == self.n {
            if self.accepts(arr, cross, top) {
                visit(prefix, arr);
            }
            return;
        }
        for (i, (card, cr, is_top)) in self.cards.iter().enumerate() {
            let next = card.apply(arr);
            prefix.push(i);
            self.walk(prefix, &next, cross + cr, top || *is_top, visit);
            prefix.pop();
        }
    }

    fn count_subtree(&self, first: usize) -> u64 {
        let (card, cr, top) = &self.cards[first];
        let start: Vec<usize> = (1..=self.b).collect();
        let mut count = 0u64;
        self.walk(&mut vec![first], &card.apply(&start), *cr, *top, &mut |_, _| {
            count += 1
        });
        count
    }

    fn sequence(&self, idx: &[usize]) -> CardSequence {
        CardSequence::new_unchecked(self.b, idx.iter().map(|&i| self.cards[i].0.clone()).collect())
    }
}

fn check_args(b: usize, n: usize) -> Result<()> {
    if b == 0 || n == 0 {
        return Err(Error::InvalidInput("need b ≥ 1 and n ≥ 1".into()));
    }
    Ok(())
}

/// Number of length-`n` sequences over `family` satisfying `query`.
///
/// The subtrees below each first card are counted independently, on up to
/// `jobs` threads; the total does not depend on `jobs`.
pub fn census(b: usize, n: usize, family: CardFamily, query: &Query, jobs: usize) -> Result<BigCount> {
    check_args(b, n)?;
    let search = Search::new(b, n, family, query);
    let firsts: Vec<usize> = (0..search.cards.len()).collect();
    let counts: Vec<u64> = if jobs <= 1 {
        firsts.iter().map(|&i| search.count_subtree(i)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| firsts.par_iter().map(|&i| search.count_subtree(i)).collect())
    };
    Ok(counts.into_iter().map(BigCount::from).sum())
}

/// The sequences counted by [`census`], in lexicographic order.
pub fn enumerate(b: usize, n: usize, family: CardFamily, query: &Query) -> Result<Vec<CardSequence>> {
    check_args(b, n)?;
    let search = Search::new(b, n, family, query);
    let start: Vec<usize> = (1..=b).collect();
    let mut out = Vec::new();
    search.walk(&mut Vec::with_capacity(n), &start, 0, false, &mut |idx, _| {
        out.push(search.sequence(idx))
    });
    Ok(out)
}

/// Minimal crossing sequences: `π_A = id`, uses `C_b`, `Cr = b(b-1)`.
pub fn enumerate_minimal(b: usize, n: usize) -> Result<Vec<CardSequence>> {
    enumerate(
        b,
        n,
        CardFamily::SingleThrow,
        &Query::identity_with_crossings(b, 0),
    )
}

/// Sequences with `π_A = id`, using `C_b`, with `b(b-1) + d` crossings;
/// `primitive` additionally excludes `C_1`.
pub fn enumerate_plus(b: usize, n: usize, d: usize, primitive: bool) -> Result<Vec<CardSequence>> {
    if !d.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("d = {d} must be even")));
    }
    let mut q = Query::identity_with_crossings(b, d);
    q.primitive = primitive;
    enumerate(b, n, CardFamily::SingleThrow, &q)
}

/// `JS(σ, n)` by exhaustion over ordered `m`-subset cards.
pub fn brute_js(sigma: &Permutation, n: usize, m: usize, jobs: usize) -> Result<BigCount> {
    let family = if m == 1 {
        CardFamily::SingleThrow
    } else {
        CardFamily::Ordered(m)
    };
    census(
        sigma.len(),
        n,
        family,
        &Query::all().with_permutation(sigma),
        jobs,
    )
}

/// Distribution of the cycle count of `π_A` over all `b^n` single-throw
/// sequences.
pub fn cycle_census(b: usize, n: usize) -> Result<BTreeMap<usize, BigCount>> {
    check_args(b, n)?;
    let q = Query::all();
    let search = Search::new(b, n, CardFamily::SingleThrow, &q);
    let start: Vec<usize> = (1..=b).collect();
    let mut tally: BTreeMap<usize, u64> = BTreeMap::new();
    search.walk(&mut Vec::with_capacity(n), &start, 0, false, &mut |_, arr| {
        *tally.entry(cycles_of_arrangement(arr)).or_default() += 1;
    });
    Ok(tally.into_iter().map(|(k, v)| (k, BigCount::from(v))).collect())
}

/// Cycle count of the permutation whose arrangement is `arr`; a permutation
/// and its inverse have the same cycle type.
fn cycles_of_arrangement(arr: &[usize]) -> usize {
    let mut seen = vec![false; arr.len()];
    let mut cycles = 0;
    for start in 0..arr.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = arr[j] - 1;
        }
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cards::{crossings, is_minimal, sequence_permutation};
    use crate::counting::{g_count, narayana, stirling2};
    use crate::enumeration::all_sequences;

    fn big(x: u64) -> BigCount {
        BigCount::from(x)
    }

    #[test]
    fn census_examples() {
        let id = Permutation::identity(2);
        let q = Query::all().with_permutation(&id);
        assert_eq!(census(2, 2, CardFamily::SingleThrow, &q, 1).unwrap(), big(2));
        assert_eq!(
            census(3, 4, CardFamily::SingleThrow, &Query::all(), 1).unwrap(),
            big(81)
        );
        let total: BigCount = Permutation::all(3)
            .iter()
            .map(|s| {
                census(
                    3,
                    4,
                    CardFamily::SingleThrow,
                    &Query::all().with_permutation(s),
                    1,
                )
                .unwrap()
            })
            .sum();
        assert_eq!(total, big(81));
    }

    #[test]
    fn jobs_do_not_change_counts() {
        let q = Query::identity_with_crossings(3, 2);
        let one = census(3, 7, CardFamily::SingleThrow, &q, 1).unwrap();
        let four = census(3, 7, CardFamily::SingleThrow, &q, 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, g_count(3, 7));
    }

    #[test]
    fn pruned_search_matches_filtered_stream() {
        for b in 1..=3 {
            for n in 1..=6 {
                let fast = enumerate_minimal(b, n).unwrap();
                let slow: Vec<CardSequence> = all_sequences(b, n, CardFamily::SingleThrow)
                    .filter(is_minimal)
                    .collect();
                assert_eq!(fast, slow, "b={b} n={n}");
            }
        }
    }

    #[test]
    fn small_families() {
        assert_eq!(enumerate_minimal(2, 3).unwrap().len(), 3);
        assert_eq!(big(3), narayana(2, 3).unwrap());
        assert_eq!(enumerate_plus(2, 6, 2, false).unwrap().len(), 15);
        assert_eq!(enumerate_plus(2, 6, 4, true).unwrap().len(), 1);
        assert!(enumerate_plus(2, 6, 3, true).is_err());
        for s in enumerate_plus(3, 6, 2, false).unwrap() {
            assert_eq!(crossings(&s), 8);
            assert!(sequence_permutation(&s).is_identity());
        }
    }

    #[test]
    fn brute_js_examples() {
        assert_eq!(brute_js(&Permutation::identity(3), 3, 1, 1).unwrap(), big(5));
        assert_eq!(brute_js(&Permutation::identity(1), 5, 1, 1).unwrap(), big(1));
        // [1,3,2] has L = 1, [2,1,3] has L = 2
        let sigma = perm_of_arrangement(&[1, 3, 2]);
        let expect = stirling2(4, 2) + stirling2(4, 3);
        assert_eq!(brute_js(&sigma, 4, 1, 2).unwrap(), expect);
        assert_eq!(expect, big(13));
        let sigma = perm_of_arrangement(&[2, 1, 3]);
        assert_eq!(brute_js(&sigma, 4, 1, 2).unwrap(), big(14));
    }

    fn perm_of_arrangement(order: &[usize]) -> Permutation {
        crate::cards::Arrangement::new(order.to_vec())
            .unwrap()
            .permutation()
    }

    #[test]
    fn cycle_census_single_cycles() {
        assert_eq!(cycle_census(2, 3).unwrap()[&1], big(4));
        for n in 1..=6 {
            assert_eq!(cycle_census(3, n).unwrap()[&1], big(3u64.pow(n as u32 - 1)));
        }
        // n = 1: C_1 is the identity, C_2 a transposition, C_3 a 3-cycle
        let one = cycle_census(3, 1).unwrap();
        assert_eq!(one[&1], big(1));
        assert_eq!(one[&2], big(1));
        assert_eq!(one[&3], big(1));
    }
}
