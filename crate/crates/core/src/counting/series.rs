use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::BigCount;
use crate::error::{Error, Result};

pub const MAX_SERIES_BALLS: usize = 12;
pub const MAX_SERIES_CARDS: usize = 24;

/// Truncated coefficients `f(b, n)` of `F(x, y) = Σ f(b,n) x^b y^n`, dense,
/// for `b ≤ max_b` and `n ≤ max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    max_b: usize,
    max_n: usize,
    coeffs: Vec<Vec<BigCount>>,
}

impl SeriesTable {
    pub fn max_b(&self) -> usize {
        self.max_b
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `f(b, n)`; zero outside the table.
    pub fn get(&self, b: usize, n: usize) -> BigCount {
        self.coeffs
            .get(b)
            .and_then(|row| row.get(n))
            .cloned()
            .unwrap_or_default()
    }

    pub fn set(&mut self, b: usize, n: usize, value: BigCount) {
        self.coeffs[b][n] = value;
    }
}

/// `Σ_{j≥1} y^j · p(y)`, truncated at degree `max_n`.
fn times_y_over_one_minus_y(p: &[BigUint], max_n: usize) -> Vec<BigUint> {
    // prefix sums shifted by one
    let mut out = vec![BigUint::zero(); max_n + 1];
    let mut running = BigUint::zero();
    for d in 1..=max_n {
        running += &p[d - 1];
        out[d] = running.clone();
    }
    out
}

fn mul_trunc(p: &[BigUint], q: &[BigUint], max_n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); max_n + 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, c) in q.iter().enumerate().take(max_n + 1 - i) {
            if !c.is_zero() {
                out[i + j] += a * c;
            }
        }
    }
    out
}

/// Coefficients from `F_1 = y/(1-y)` and
/// `F_b = y/(1-y) · (F_{b-1} + Σ_{0<i<b} F_i F_{b-i})`.
pub fn series_from_recurrence(max_b: usize, max_n: usize) -> Result<SeriesTable> {
    if max_b == 0 || max_n == 0 || max_b > MAX_SERIES_BALLS || max_n > MAX_SERIES_CARDS {
        return Err(Error::InvalidInput(format!(
            "series bounds must satisfy 1 ≤ b ≤ {MAX_SERIES_BALLS}, 1 ≤ n ≤ {MAX_SERIES_CARDS}"
        )));
    }
    let mut polys: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); max_n + 1]];
    let mut one = vec![BigUint::zero(); max_n + 1];
    one[0] = BigUint::one();
    polys.push(times_y_over_one_minus_y(&one, max_n));
    for b in 2..=max_b {
        let mut inner = polys[b - 1].clone();
        for i in 1..b {
            let prod = mul_trunc(&polys[i], &polys[b - i], max_n);
            for (d, c) in prod.into_iter().enumerate() {
                inner[d] += c;
            }
        }
        polys.push(times_y_over_one_minus_y(&inner, max_n));
    }
    Ok(SeriesTable {
        max_b,
        max_n,
        coeffs: polys,
    })
}

/// Checks `y F² = (1 - y - xy) F - xy` for every coefficient `x^b y^n` with
/// `b ≤ max_b`, `n ≤ max_n`. Every coefficient on both sides only involves
/// entries of the table, so the truncation is exact.
pub fn functional_equation_check(table: &SeriesTable) -> bool {
    let f = |b: usize, n: usize| BigInt::from(table.get(b, n));
    for b in 1..=table.max_b {
        for n in 1..=table.max_n {
            let mut lhs = BigInt::zero();
            for i in 1..b {
                for j in 1..n.saturating_sub(1) {
                    lhs += f(i, j) * f(b - i, n - 1 - j);
                }
            }
            let mut rhs = f(b, n) - f(b, n - 1) - f(b - 1, n - 1);
            if b == 1 && n == 1 {
                rhs -= 1;
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{binomial, narayana};

    #[test]
    fn low_rows() {
        let t = series_from_recurrence(3, 10).unwrap();
        for n in 1..=10 {
            assert_eq!(t.get(1, n), BigUint::one());
            // y²/(1-y)³
            assert_eq!(t.get(2, n), binomial(n as u64, 2));
        }
        assert_eq!(t.get(2, 3), BigUint::from(3u32));
        assert_eq!(t.get(2, 1), BigUint::zero());
    }

    #[test]
    fn matches_narayana() {
        let t = series_from_recurrence(6, 10).unwrap();
        for b in 1..=6 {
            for n in 1..=10 {
                assert_eq!(t.get(b, n), narayana(b, n).unwrap(), "f({b},{n})");
            }
        }
    }

    #[test]
    fn functional_equation_and_mutations() {
        let t = series_from_recurrence(6, 10).unwrap();
        assert!(functional_equation_check(&t));
        for b in 1..=6 {
            for n in 1..=10 {
                let mut m = t.clone();
                m.set(b, n, t.get(b, n) + 1u32);
                assert!(!functional_equation_check(&m), "mutation at ({b},{n}) undetected");
            }
        }
    }

    #[test]
    fn bounds() {
        assert!(series_from_recurrence(0, 5).is_err());
        assert!(series_from_recurrence(13, 5).is_err());
        assert!(series_from_recurrence(12, 24).is_ok());
    }
}
