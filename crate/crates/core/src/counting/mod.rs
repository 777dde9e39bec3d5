//! Exact counts: Stirling numbers and their generalization, Narayana numbers,
//! the crossing-count formulas and the generating-function recurrence.
//!
//! Two-argument crossing counts take the ball count first, `f(b, n)`; the
//! `P_d` and `Q_d` families follow the table convention `P_d(n, b)`.

mod basic;
mod crossing_counts;
mod identities;
mod series;
mod stirling;

use num_bigint::BigUint;

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

pub use basic::{binomial, binomial_i, factorial, falling, multinomial};
pub use crossing_counts::{catalan, g_count, narayana, p0, p2, p4, q4_closed_form, q_from_p};
pub use identities::{corollary_identity, multinomial_identity};
pub use series::{
    functional_equation_check, series_from_recurrence, SeriesTable, MAX_SERIES_BALLS, MAX_SERIES_CARDS,
};
pub use stirling::{
    count_l_at_least, falling_factorial_identity_check, gen_stirling, gen_stirling_explicit,
    gen_stirling_row, js_count, stirling1, stirling2, stirling2_explicit,
};
