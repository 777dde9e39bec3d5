//! Closed forms for identity-permutation sequences with few extra crossings.
//!
//! `f(b, n)` (ball count first) is the number of minimal crossing sequences,
//! `g(b, n)` the number with two extra crossings. `P_d(n, b)` counts the
//! primitive sequences (no `C_1`) with `b(b-1) + d` crossings and
//! `Q_d(n, b) = Σ_{k=1}^{n} C(n,k) P_d(k, b)` all of them.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use super::basic::{binomial, binomial_i};
use super::stirling::to_nonneg;
use super::BigCount;
use crate::error::{Error, Result};

/// Narayana number `f(b, n) = C(n-1, b-1) C(n, b-1) / b`; zero when `b > n`
/// or `b = 0`.
pub fn narayana(b: usize, n: usize) -> Result<BigCount> {
    if b == 0 || b > n {
        return Ok(BigUint::zero());
    }
    let num = binomial(n as u64 - 1, b as u64 - 1) * binomial(n as u64, b as u64 - 1);
    exact_div(num, BigUint::from(b), "narayana")
}

/// `g(b, n) = C(n, b+2) C(n, b-2)`.
pub fn g_count(b: usize, n: usize) -> BigCount {
    binomial_i(n as i64, b as i64 + 2) * binomial_i(n as i64, b as i64 - 2)
}

/// `P_0(n, b) = C(b-2, t) C(b+t, t) / (t+1)` with `t = n - b`.
///
/// For `b = 1` no primitive sequence exists (the only card is `C_1`), and the
/// value is 0.
pub fn p0(n: usize, b: usize) -> Result<BigCount> {
    if n < b || b < 2 {
        return Ok(BigUint::zero());
    }
    let t = (n - b) as i64;
    let num = binomial_i(b as i64 - 2, t) * binomial_i(b as i64 + t, t);
    exact_div(num, BigUint::from(t as u64 + 1), "p0")
}

/// `P_2(n, b) = C(b+t, 2t) C(2t, t-2)` with `t = n - b`.
pub fn p2(n: usize, b: usize) -> BigCount {
    if n < b || b < 2 {
        return BigUint::zero();
    }
    let t = (n - b) as i64;
    binomial_i(b as i64 + t, 2 * t) * binomial_i(2 * t, t - 2)
}

/// `(bn - b - 8) / (2(b+4)) · C(n, b+3) C(n, b-2)`.
///
/// This closed form counts all sequences with four extra crossings, primitive
/// or not, i.e. `Q_4(n, b)`. [`p4`] recovers the primitive count from it.
pub fn q4_closed_form(n: usize, b: usize) -> Result<BigCount> {
    if b < 2 {
        return Ok(BigUint::zero());
    }
    let (n, b) = (n as i64, b as i64);
    let binoms = BigInt::from(binomial_i(n, b + 3) * binomial_i(n, b - 2));
    if binoms.is_zero() {
        return Ok(BigUint::zero());
    }
    let num = BigInt::from(b * n - b - 8) * binoms;
    let (q, r) = num.div_rem(&BigInt::from(2 * (b + 4)));
    if !r.is_zero() {
        return Err(Error::Internal("q4_closed_form: inexact division".into()));
    }
    to_nonneg(q, "q4_closed_form")
}

/// `P_4(n, b)` by inverting the binomial transform of [`q4_closed_form`]:
/// `P_4(n, b) = Σ_{k=1}^{n} (-1)^{n-k} C(n, k) Q_4(k, b)`.
pub fn p4(n: usize, b: usize) -> Result<BigCount> {
    let mut acc = BigInt::zero();
    for k in 1..=n {
        let term = BigInt::from(binomial(n as u64, k as u64) * q4_closed_form(k, b)?);
        if (n - k).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    to_nonneg(acc, "p4")
}

/// The binomial transform `Q_d(n, b) = Σ_{k=1}^{n} C(n, k) P_d(k, b)`.
///
/// Holds for `b ≥ 2`; for `b = 1` the empty primitive sequence would be needed.
pub fn q_from_p<F>(d: usize, n: usize, b: usize, p: F) -> Result<BigCount>
where
    F: Fn(usize, usize) -> Result<BigCount>,
{
    if !d.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("d = {d} must be even")));
    }
    let mut acc = BigUint::zero();
    for k in 1..=n {
        acc += binomial(n as u64, k as u64) * p(k, b)?;
    }
    Ok(acc)
}

/// Catalan number `C(2n, n) / (n+1)`.
pub fn catalan(n: usize) -> BigCount {
    binomial(2 * n as u64, n as u64) / BigUint::from(n + 1)
}

fn exact_div(num: BigUint, den: BigUint, what: &str) -> Result<BigCount> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what}: inexact division")));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn narayana_values() {
        for n in 1..12 {
            assert_eq!(narayana(1, n).unwrap(), u(1));
        }
        assert_eq!(narayana(2, 3).unwrap(), u(3));
        assert_eq!(narayana(5, 8).unwrap(), u(490));
        assert_eq!(narayana(6, 5).unwrap(), u(0));
        for n in 1..15 {
            let row: BigUint = (1..=n).map(|b| narayana(b, n).unwrap()).sum();
            assert_eq!(row, catalan(n));
        }
    }

    #[test]
    fn g_values() {
        assert_eq!(g_count(2, 6), u(15));
        assert_eq!(g_count(2, 4), u(1));
        assert_eq!(g_count(3, 4), u(0));
    }

    #[test]
    fn p_values() {
        assert_eq!(p4(6, 2).unwrap(), u(1));
        assert_eq!(p4(6, 3).unwrap(), u(3));
        assert_eq!(p4(7, 3).unwrap(), u(14));
        assert_eq!(p4(7, 4).unwrap(), u(21));
        assert_eq!(p4(8, 3).unwrap(), u(12));
        assert_eq!(p4(8, 4).unwrap(), u(112));
        assert_eq!(p4(14, 10).unwrap(), u(3 * 7 * 11 * 13 * 37));
        for b in 2..8 {
            assert_eq!(p0(b, b).unwrap(), u(1));
        }
        assert_eq!(p0(1, 1).unwrap(), u(0));
        assert_eq!(p2(4, 2), u(1));
    }

    #[test]
    fn binomial_transforms() {
        for b in 2..=5 {
            for n in 1..=9 {
                assert_eq!(
                    q_from_p(0, n, b, p0).unwrap(),
                    narayana(b, n).unwrap(),
                    "Q0({n},{b})"
                );
                assert!(q_from_p(0, n, b, p0).unwrap() >= p0(n, b).unwrap());
            }
        }
        for b in 2..=4 {
            for n in 1..=8 {
                assert_eq!(q_from_p(2, n, b, |k, b| Ok(p2(k, b))).unwrap(), g_count(b, n));
            }
        }
        for b in 2..=9 {
            for n in 1..=14 {
                assert_eq!(q_from_p(4, n, b, p4).unwrap(), q4_closed_form(n, b).unwrap());
            }
        }
        assert!(q_from_p(1, 3, 2, p0).is_err());
    }
}
