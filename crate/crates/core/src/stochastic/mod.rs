//! Random card sequences and exact random walks on `S_b`.
//!
//! Distributions are exact rationals. Sampling uses `ChaCha8` seeded with
//! `seed_from_u64(seed)`; trial block `s` runs on stream `s`.

mod distribution;
mod sampling;

pub use distribution::{
    cycle_type_limit, exact_step_distribution, map_total_variation, rational_string, total_variation,
    GeneratorDistribution, GroupDistribution, MAX_GROUP_DEGREE, MAX_LIMIT_DEGREE,
};
pub use sampling::{
    estimate_single_cycle_probability, random_generator_distribution, sample_sequence, stream_rng,
    uniform_below, CycleEstimate, WeightedIndex, TRIALS_PER_STREAM,
};
