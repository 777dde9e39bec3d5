use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cards::Permutation;
use crate::counting::{factorial, stirling1};
use crate::enumeration::CardFamily;
use crate::error::{Error, Result};

/// Largest `b` for which `S_b` distributions are held densely.
pub const MAX_GROUP_DEGREE: usize = 6;
/// Largest `b` accepted by [`cycle_type_limit`].
pub const MAX_LIMIT_DEGREE: usize = 8;

/// One step of the walk: generator `g_i` with probability `p_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDistribution {
    b: usize,
    generators: Vec<Permutation>,
    probs: Vec<BigRational>,
}

impl GeneratorDistribution {
    pub fn new(generators: Vec<Permutation>, probs: Vec<BigRational>) -> Result<Self> {
        if generators.is_empty() || generators.len() != probs.len() {
            return Err(Error::InvalidInput(
                "need one probability per generator, and at least one generator".into(),
            ));
        }
        let b = generators[0].len();
        if generators.iter().any(|g| g.len() != b) {
            return Err(Error::InvalidInput("generators act on different degrees".into()));
        }
        if probs.iter().any(|p| !p.is_positive()) {
            return Err(Error::InvalidInput(
                "probabilities must be strictly positive".into(),
            ));
        }
        let total: BigRational = probs.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidInput(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(Self { b, generators, probs })
    }

    /// Positive integer weights, normalized exactly.
    pub fn from_weights(generators: Vec<Permutation>, weights: &[u64]) -> Result<Self> {
        let total: u64 = weights.iter().sum();
        if total == 0 {
            return Err(Error::InvalidInput("weights sum to zero".into()));
        }
        let probs = weights
            .iter()
            .map(|&w| BigRational::new(BigInt::from(w), BigInt::from(total)))
            .collect();
        Self::new(generators, probs)
    }

    /// Every card of `family` on `b` balls, equally likely.
    pub fn uniform_cards(b: usize, family: CardFamily) -> Result<Self> {
        let gens: Vec<Permutation> = family.cards(b).iter().map(|c| c.permutation()).collect();
        if gens.is_empty() {
            return Err(Error::InvalidInput(format!(
                "family {family} has no cards on {b} balls"
            )));
        }
        let w = vec![1; gens.len()];
        Self::from_weights(gens, &w)
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn probs(&self) -> &[BigRational] {
        &self.probs
    }
}

/// An exact probability distribution on `S_b`, stored by permutation rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDistribution {
    b: usize,
    probs: Vec<BigRational>,
}

impl GroupDistribution {
    fn check_degree(b: usize) -> Result<()> {
        if b == 0 || b > MAX_GROUP_DEGREE {
            return Err(Error::OutOfRange {
                what: "group degree b",
                value: b,
                lo: 1,
                hi: MAX_GROUP_DEGREE,
            });
        }
        Ok(())
    }

    fn order(b: usize) -> usize {
        (1..=b).product()
    }

    pub fn point_mass(p: &Permutation) -> Result<Self> {
        Self::check_degree(p.len())?;
        let mut probs = vec![BigRational::zero(); Self::order(p.len())];
        probs[p.rank()] = BigRational::one();
        Ok(Self { b: p.len(), probs })
    }

    pub fn uniform(b: usize) -> Result<Self> {
        Self::check_degree(b)?;
        let size = Self::order(b);
        let q = BigRational::new(BigInt::one(), BigInt::from(size));
        Ok(Self {
            b,
            probs: vec![q; size],
        })
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn prob(&self, p: &Permutation) -> BigRational {
        if p.len() != self.b {
            return BigRational::zero();
        }
        self.probs[p.rank()].clone()
    }

    pub fn total(&self) -> BigRational {
        self.probs.iter().sum()
    }

    /// `(permutation, probability)` in rank order, zeros included.
    pub fn iter(&self) -> impl Iterator<Item = (Permutation, &BigRational)> + '_ {
        self.probs
            .iter()
            .enumerate()
            .map(move |(r, q)| (Permutation::unrank(self.b, r), q))
    }

    /// Probability that the permutation has exactly `ℓ` cycles, per `ℓ`.
    pub fn cycle_count_marginal(&self) -> BTreeMap<usize, BigRational> {
        let mut out: BTreeMap<usize, BigRational> = (1..=self.b).map(|l| (l, BigRational::zero())).collect();
        for (p, q) in self.iter() {
            *out.entry(p.cycle_count()).or_default() += q;
        }
        out
    }

    /// Mass on the single `b`-cycles.
    pub fn single_cycle_mass(&self) -> BigRational {
        self.iter()
            .filter(|(p, _)| p.is_full_cycle())
            .map(|(_, q)| q.clone())
            .sum()
    }

    /// One step of the walk: `current ↦ current · generator`, where the
    /// generator acts after the current permutation.
    pub fn step(&self, gd: &GeneratorDistribution) -> Result<Self> {
        if gd.b != self.b {
            return Err(Error::BallCountMismatch {
                expected: self.b,
                found: gd.b,
            });
        }
        let size = self.probs.len();
        let mut next = vec![BigRational::zero(); size];
        for (r, q) in self.probs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let cur = Permutation::unrank(self.b, r);
            for (g, p) in gd.generators.iter().zip(&gd.probs) {
                next[cur.then(g).rank()] += q * p;
            }
        }
        Ok(Self {
            b: self.b,
            probs: next,
        })
    }

    /// `{"(1 2)": "1/2", …}` over the support, cycle notation keys.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.iter()
            .filter(|(_, q)| !q.is_zero())
            .map(|(p, q)| (p.to_string(), rational_string(q)))
            .collect()
    }
}

/// `p/q` with `q ≥ 1`, also for integers.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Distribution after `n` steps from the identity.
pub fn exact_step_distribution(gd: &GeneratorDistribution, n: usize) -> Result<GroupDistribution> {
    let mut d = GroupDistribution::point_mass(&Permutation::identity(gd.b))?;
    for _ in 0..n {
        d = d.step(gd)?;
    }
    Ok(d)
}

/// `½ Σ |q - q'|`.
pub fn total_variation(d1: &GroupDistribution, d2: &GroupDistribution) -> Result<BigRational> {
    if d1.b != d2.b {
        return Err(Error::BallCountMismatch {
            expected: d1.b,
            found: d2.b,
        });
    }
    let sum: BigRational = d1.probs.iter().zip(&d2.probs).map(|(a, b)| (a - b).abs()).sum();
    Ok(sum / BigRational::from_integer(BigInt::from(2)))
}

/// `ℓ ↦ [b ℓ] / b!`, the cycle-count law of a uniform permutation.
pub fn cycle_type_limit(b: usize) -> Result<BTreeMap<usize, BigRational>> {
    if b == 0 || b > MAX_LIMIT_DEGREE {
        return Err(Error::OutOfRange {
            what: "b",
            value: b,
            lo: 1,
            hi: MAX_LIMIT_DEGREE,
        });
    }
    let fact = BigInt::from(factorial(b as u64));
    Ok((1..=b)
        .map(|l| (l, BigRational::new(BigInt::from(stirling1(b, l)), fact.clone())))
        .collect())
}

/// Total variation between two maps over the same keys (missing keys are 0).
pub fn map_total_variation(
    a: &BTreeMap<usize, BigRational>,
    b: &BTreeMap<usize, BigRational>,
) -> BigRational {
    let keys: std::collections::BTreeSet<usize> = a.keys().chain(b.keys()).copied().collect();
    let zero = BigRational::zero();
    let sum: BigRational = keys
        .into_iter()
        .map(|k| (a.get(&k).unwrap_or(&zero) - b.get(&k).unwrap_or(&zero)).abs())
        .sum();
    sum / BigRational::from_integer(BigInt::from(2))
}
