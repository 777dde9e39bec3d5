use num_bigint::BigInt;
use num_rational::BigRational;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

use crate::cards::{Card, CardSequence, Permutation};
use crate::enumeration::CardFamily;
use crate::error::{Error, Result};

use super::distribution::GeneratorDistribution;

/// Trials per independently seeded substream.
pub const TRIALS_PER_STREAM: u64 = 4096;

/// `ChaCha8` seeded from `seed`, positioned on `stream`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform integer in `[0, n)`, without modulo bias.
pub fn uniform_below(rng: &mut impl RngCore, n: u64) -> u64 {
    assert!(n > 0);
    let zone = u64::MAX - (u64::MAX - n + 1) % n;
    loop {
        let x = rng.next_u64();
        if x <= zone {
            return x % n;
        }
    }
}

/// Draws indices with probability proportional to integer weights.
#[derive(Debug, Clone)]
pub struct WeightedIndex {
    cumulative: Vec<u64>,
}

impl WeightedIndex {
    pub fn new(weights: &[u64]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidInput("no weights".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        let mut total: u64 = 0;
        let cumulative = weights
            .iter()
            .map(|&w| {
                total = total
                    .checked_add(w)
                    .ok_or_else(|| Error::InvalidInput("weights overflow u64".into()))?;
                Ok(total)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { cumulative })
    }

    pub fn total(&self) -> u64 {
        *self.cumulative.last().expect("nonempty")
    }

    pub fn sample(&self, rng: &mut impl RngCore) -> usize {
        let x = uniform_below(rng, self.total());
        self.cumulative.partition_point(|&c| c <= x)
    }
}

fn family_sampler(
    b: usize,
    family: CardFamily,
    weights: Option<&[u64]>,
) -> Result<(Vec<Card>, WeightedIndex)> {
    if b == 0 {
        return Err(Error::InvalidInput("b must be at least 1".into()));
    }
    let cards = family.cards(b);
    if cards.is_empty() {
        return Err(Error::InvalidInput(format!(
            "family {family} has no cards on {b} balls"
        )));
    }
    let index = match weights {
        None => WeightedIndex::new(&vec![1; cards.len()])?,
        Some(w) if w.len() == cards.len() => WeightedIndex::new(w)?,
        Some(w) => {
            return Err(Error::InvalidInput(format!(
                "{} weights given for {} cards",
                w.len(),
                cards.len()
            )))
        }
    };
    Ok((cards, index))
}

/// `n` independent draws from `family`, weighted by `weights` (one per card,
/// in the family's listing order; uniform when absent).
pub fn sample_sequence(
    b: usize,
    n: usize,
    family: CardFamily,
    weights: Option<&[u64]>,
    seed: u64,
) -> Result<CardSequence> {
    let (cards, index) = family_sampler(b, family, weights)?;
    let mut rng = stream_rng(seed, 0);
    let drawn = (0..n).map(|_| cards[index.sample(&mut rng)].clone()).collect();
    CardSequence::new(b, drawn)
}

/// Monte Carlo count of single-cycle permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleEstimate {
    pub hits: u64,
    pub trials: u64,
}

impl CycleEstimate {
    pub fn ratio(&self) -> BigRational {
        BigRational::new(BigInt::from(self.hits), BigInt::from(self.trials))
    }

    pub fn mean(&self) -> f64 {
        self.hits as f64 / self.trials as f64
    }

    /// `√(p(1-p)/trials)` at the given `p`.
    pub fn std_error(&self, p: f64) -> f64 {
        (p * (1.0 - p) / self.trials as f64).sqrt()
    }
}

/// Fraction of `trials` random length-`n` sequences whose permutation is a
/// single `b`-cycle. Trials run in substreams of [`TRIALS_PER_STREAM`]; the
/// result does not depend on `jobs`.
pub fn estimate_single_cycle_probability(
    b: usize,
    n: usize,
    family: CardFamily,
    trials: u64,
    seed: u64,
    jobs: usize,
) -> Result<CycleEstimate> {
    if trials == 0 {
        return Err(Error::InvalidInput("trials must be at least 1".into()));
    }
    let (cards, index) = family_sampler(b, family, None)?;
    let perms: Vec<Permutation> = cards.iter().map(Card::permutation).collect();
    let streams = trials.div_ceil(TRIALS_PER_STREAM);
    let run_stream = |s: u64| -> u64 {
        let mut rng = stream_rng(seed, s);
        let count = TRIALS_PER_STREAM.min(trials - s * TRIALS_PER_STREAM);
        (0..count)
            .filter(|_| {
                let mut acc = Permutation::identity(b);
                for _ in 0..n {
                    acc = acc.then(&perms[index.sample(&mut rng)]);
                }
                acc.is_full_cycle()
            })
            .count() as u64
    };
    let hits = if jobs <= 1 {
        (0..streams).map(run_stream).sum()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| (0..streams).into_par_iter().map(run_stream).sum())
    };
    Ok(CycleEstimate { hits, trials })
}

/// `size` random generators of `S_b` with random weights in `1..=16`.
pub fn random_generator_distribution(b: usize, size: usize, seed: u64) -> Result<GeneratorDistribution> {
    if b == 0 || size == 0 {
        return Err(Error::InvalidInput(
            "need b ≥ 1 and at least one generator".into(),
        ));
    }
    let order: u64 = (1..=b as u64).product();
    let mut rng = stream_rng(seed, 0);
    let mut gens = Vec::with_capacity(size);
    let mut weights = Vec::with_capacity(size);
    for _ in 0..size {
        gens.push(Permutation::unrank(b, uniform_below(&mut rng, order) as usize));
        weights.push(1 + uniform_below(&mut rng, 16));
    }
    GeneratorDistribution::from_weights(gens, &weights)
}
