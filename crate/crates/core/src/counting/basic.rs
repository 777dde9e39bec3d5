use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::BigCount;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` over signed arguments; zero unless `0 ≤ k ≤ n`.
pub fn binomial_i(n: i64, k: i64) -> BigCount {
    if n < 0 || k < 0 || k > n {
        BigUint::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> BigCount {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Falling factorial `x(x-1)…(x-m+1)` over the integers.
pub fn falling(x: i64, m: u64) -> BigInt {
    (0..m as i64).fold(BigInt::one(), |acc, i| acc * (x - i))
}

/// Multinomial `n! / (k_1! k_2! …)`; zero unless the parts are nonnegative
/// and sum to `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> BigCount {
    if n < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return BigUint::zero();
    }
    let mut rest = n;
    let mut acc = BigUint::one();
    for &p in parts {
        acc *= binomial(rest as u64, p as u64);
        rest -= p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(6, 4), BigUint::from(15u32));
        assert_eq!(binomial(4, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial_i(-1, 0), BigUint::zero());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(falling(5, 2), BigInt::from(20));
        assert_eq!(falling(1, 2), BigInt::zero());
        assert_eq!(multinomial(4, &[2, 1, 1]), BigUint::from(12u32));
        assert_eq!(multinomial(4, &[2, -1, 3]), BigUint::zero());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40u64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}
