use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::basic::{binomial, factorial, falling};
use super::BigCount;
use crate::error::{Error, Result};

/// Stirling numbers of the second kind by `{n+1,k} = k{n,k} + {n,k-1}`.
pub fn stirling2(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for _ in 0..n {
        for j in (1..=k).rev() {
            let prev = std::mem::take(&mut row[j]);
            row[j] = prev * j + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row.swap_remove(k)
}

/// `{n,k} = (-1)^k / k! · Σ_{i=1}^{k} (-1)^i C(k,i) i^n`.
pub fn stirling2_explicit(n: usize, k: usize) -> Result<BigCount> {
    if n == 0 {
        return Ok(if k == 0 { BigUint::one() } else { BigUint::zero() });
    }
    let mut sum = BigInt::zero();
    for i in 1..=k {
        let term = BigInt::from(binomial(k as u64, i as u64)) * BigInt::from(i).pow(n as u32);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if k % 2 == 1 {
        sum = -sum;
    }
    exact_nonneg_div(sum, BigInt::from(factorial(k as u64)), "stirling2_explicit")
}

/// Generalised Stirling numbers `{n,k}_m` from the recurrence
/// `{n+1,k}_m = Σ_{i=0}^{m} C(k+i-m, i) m^{(i)} {n,k+i-m}_m`
/// with base `{1,k}_m = [k = m]`.
pub fn gen_stirling(n: usize, k: usize, m: usize) -> BigCount {
    gen_stirling_row(n, m).into_iter().nth(k).unwrap_or_default()
}

/// Row `n` of `{n,·}_m`, indexed by `k` in `0..=m·n`.
pub fn gen_stirling_row(n: usize, m: usize) -> Vec<BigCount> {
    if n == 0 || m == 0 {
        return vec![BigUint::one()];
    }
    let mut row = vec![BigUint::zero(); m + 1];
    row[m] = BigUint::one();
    // m^(i), falling
    let weights: Vec<BigUint> = (0..=m)
        .map(|i| (0..i).fold(BigUint::one(), |acc, j| acc * (m - j)))
        .collect();
    for level in 1..n {
        let width = m * (level + 1) + 1;
        let mut next = vec![BigUint::zero(); width];
        for (k, slot) in next.iter_mut().enumerate() {
            for (i, w) in weights.iter().enumerate() {
                if k + i < m {
                    continue;
                }
                let src = k + i - m;
                if src >= row.len() || row[src].is_zero() {
                    continue;
                }
                *slot += binomial(src as u64, i as u64) * w * &row[src];
            }
        }
        row = next;
    }
    row
}

/// `{n,k}_m = (-1)^k / k! · Σ_{i=m}^{k} (-1)^i C(k,i) (i^(m))^n`.
pub fn gen_stirling_explicit(n: usize, k: usize, m: usize) -> Result<BigCount> {
    let mut sum = BigInt::zero();
    for i in m..=k {
        let term = BigInt::from(binomial(k as u64, i as u64)) * falling(i as i64, m as u64).pow(n as u32);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if k % 2 == 1 {
        sum = -sum;
    }
    exact_nonneg_div(sum, BigInt::from(factorial(k as u64)), "gen_stirling_explicit")
}

/// Checks `(x^(m))^n = Σ_{k=m}^{mn} {n,k}_m x^(k)` at `x = 0..=x_max`.
pub fn falling_factorial_identity_check(n: usize, m: usize, x_max: usize) -> bool {
    let row = gen_stirling_row(n, m);
    (0..=x_max as i64).all(|x| {
        let lhs = falling(x, m as u64).pow(n as u32);
        let rhs: BigInt = row
            .iter()
            .enumerate()
            .skip(m)
            .map(|(k, s)| BigInt::from(s.clone()) * falling(x, k as u64))
            .sum();
        lhs == rhs
    })
}

/// Unsigned Stirling numbers of the first kind: permutations of `[b]` with `l` cycles.
pub fn stirling1(b: usize, l: usize) -> BigCount {
    if l > b {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); b + 1];
    row[0] = BigUint::one();
    for n in 0..b {
        for j in (1..=n + 1).rev() {
            let prev = std::mem::take(&mut row[j]);
            row[j] = prev * n + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row.swap_remove(l)
}

/// Number of card sequences of length `n` with final permutation `σ`, given
/// only `L = L(σ)`: `Σ_{k=max(1,b-L)}^{b} {n,k}_m`.
pub fn js_count(l: usize, n: usize, b: usize, m: usize) -> Result<BigCount> {
    if b == 0 {
        return Err(Error::InvalidInput("b must be at least 1".into()));
    }
    if l == 0 || l > b {
        return Err(Error::OutOfRange {
            what: "L",
            value: l,
            lo: 1,
            hi: b,
        });
    }
    if n == 0 || m == 0 {
        return Err(Error::InvalidInput("n and m must be at least 1".into()));
    }
    let row = gen_stirling_row(n, m);
    Ok(((b - l).max(1)..=b)
        .filter_map(|k| row.get(k))
        .fold(BigUint::zero(), |acc, x| acc + x))
}

/// Permutations of `[b]` with `L(σ) ≥ k`: `b!/k!`, or `(b-1)!/k!` among the
/// `b`-cycles.
pub fn count_l_at_least(b: usize, k: usize, cyclic_only: bool) -> Result<BigCount> {
    let hi = if cyclic_only { b.saturating_sub(1) } else { b };
    if k == 0 || k > hi {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            lo: 1,
            hi,
        });
    }
    let top = if cyclic_only { b - 1 } else { b };
    Ok(factorial(top as u64) / factorial(k as u64))
}

fn exact_nonneg_div(num: BigInt, den: BigInt, what: &str) -> Result<BigCount> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what}: inexact division")));
    }
    if q.is_negative() {
        return Err(Error::Internal(format!("{what}: negative count")));
    }
    Ok(q.to_biguint().unwrap_or_default())
}

pub(crate) fn to_nonneg(x: BigInt, what: &str) -> Result<BigCount> {
    match x.sign() {
        Sign::Minus => Err(Error::Internal(format!("{what}: negative count"))),
        _ => Ok(x.to_biguint().unwrap_or_default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cards::l_of;
    use crate::cards::Permutation;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    /// Families of `n` ordered `m`-subsets of `[k]`, every symbol used, taken
    /// up to relabelling: count the families already in first-occurrence order.
    fn brute_gen_stirling(n: usize, k: usize, m: usize) -> u64 {
        let subsets = crate::enumeration::ordered_subsets(k, m);
        let mut count = 0;
        let mut idx = vec![0usize; n];
        if subsets.is_empty() {
            return 0;
        }
        loop {
            let flat: Vec<usize> = idx.iter().flat_map(|&i| subsets[i].iter().copied()).collect();
            let mut next = 1;
            let mut ok = true;
            for &x in &flat {
                if x == next {
                    next += 1;
                } else if x > next {
                    ok = false;
                    break;
                }
            }
            if ok && next == k + 1 {
                count += 1;
            }
            let mut p = 0;
            loop {
                if p == n {
                    return count;
                }
                idx[p] += 1;
                if idx[p] < subsets.len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }

    #[test]
    fn stirling2_values() {
        for n in 1..10 {
            assert_eq!(stirling2(n, 1), u(1));
        }
        assert_eq!(stirling2(4, 2), u(brute_gen_stirling(4, 2, 1)));
        assert_eq!(stirling2(4, 2), u(7));
        assert_eq!(stirling2(0, 0), u(1));
        for n in 0..=12 {
            for k in 0..=12 {
                assert_eq!(stirling2(n, k), stirling2_explicit(n, k).unwrap(), "S({n},{k})");
            }
        }
    }

    #[test]
    fn gen_stirling_values() {
        for n in 1..=10 {
            for k in 0..=10 {
                assert_eq!(gen_stirling(n, k, 1), stirling2(n, k));
            }
        }
        assert_eq!(gen_stirling(2, 2, 2), u(2));
        assert_eq!(gen_stirling(2, 2, 2), u(brute_gen_stirling(2, 2, 2)));
        for m in 1..5 {
            assert_eq!(gen_stirling(1, m, m), u(1));
        }
        for n in 1..=3 {
            for k in 1..=5 {
                assert_eq!(
                    gen_stirling(n, k, 2),
                    u(brute_gen_stirling(n, k, 2)),
                    "({n},{k})_2"
                );
            }
        }
        assert_eq!(gen_stirling(2, 3, 2), u(brute_gen_stirling(2, 3, 2)));
    }

    #[test]
    fn recurrence_matches_explicit() {
        for m in 1..=3 {
            for n in 1..=8 {
                for k in 0..=m * n + 1 {
                    assert_eq!(
                        gen_stirling(n, k, m),
                        gen_stirling_explicit(n, k, m).unwrap(),
                        "{{{n},{k}}}_{m}"
                    );
                }
                assert!(gen_stirling_explicit(n, m.saturating_sub(1), m)
                    .unwrap()
                    .is_zero());
                assert!(gen_stirling_explicit(n, m * n + 1, m).unwrap().is_zero());
            }
        }
        assert_eq!(gen_stirling_explicit(2, 2, 2).unwrap(), u(2));
    }

    #[test]
    fn connection_identity() {
        assert!(falling_factorial_identity_check(3, 1, 10));
        for n in 1..=5 {
            assert!(falling_factorial_identity_check(n, 2, 12));
        }
        for n in 1..=4 {
            assert!(falling_factorial_identity_check(n, 3, 15));
        }
    }

    #[test]
    fn stirling1_values() {
        for b in 1..9 {
            assert_eq!(stirling1(b, b), u(1));
            assert_eq!(stirling1(b, 1), factorial(b as u64 - 1));
            let total: BigUint = (0..=b).map(|l| stirling1(b, l)).sum();
            assert_eq!(total, factorial(b as u64));
        }
        let row: Vec<_> = (1..=4).map(|l| stirling1(4, l)).collect();
        assert_eq!(row, vec![u(6), u(11), u(6), u(1)]);
    }

    #[test]
    fn js_examples() {
        for n in 1..6 {
            assert_eq!(js_count(1, n, 1, 1).unwrap(), u(1));
        }
        assert_eq!(js_count(1, 4, 3, 1).unwrap(), u(13));
        let bell_like: BigUint = (1..=4).map(|k| stirling2(9, k)).sum();
        assert_eq!(js_count(4, 9, 4, 1).unwrap(), bell_like);
        assert!(js_count(0, 3, 3, 1).is_err());
        assert!(js_count(4, 3, 3, 1).is_err());
    }

    #[test]
    fn l_at_least_matches_scan() {
        for b in 1..=6 {
            let perms = Permutation::all(b);
            for k in 1..=b {
                let direct = perms.iter().filter(|p| l_of(p) >= k).count() as u64;
                assert_eq!(count_l_at_least(b, k, false).unwrap(), u(direct));
                if k < b {
                    let cyc = perms.iter().filter(|p| p.is_full_cycle() && l_of(p) >= k).count() as u64;
                    assert_eq!(count_l_at_least(b, k, true).unwrap(), u(cyc));
                }
            }
        }
        assert_eq!(count_l_at_least(4, 2, false).unwrap(), u(12));
        assert_eq!(count_l_at_least(4, 2, true).unwrap(), u(3));
        assert!(count_l_at_least(4, 4, true).is_err());
        assert!(count_l_at_least(4, 0, false).is_err());
    }
}
