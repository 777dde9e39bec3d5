use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use super::basic::{binomial_i, multinomial};
use super::BigCount;

/// Both sides of
/// `Σ_k (n; k+a, k-a, b-k, n-b-k) = C(n, b+a) C(n, b-a)`.
pub fn multinomial_identity(n: usize, b: usize, a: usize) -> (BigCount, BigCount) {
    let (n, b, a) = (n as i64, b as i64, a as i64);
    let lhs = (0..=n).fold(BigUint::zero(), |acc, k| {
        acc + multinomial(n, &[k + a, k - a, b - k, n - b - k])
    });
    let rhs = binomial_i(n, b + a) * binomial_i(n, b - a);
    (lhs, rhs)
}

/// Both sides of the double-sum identity obtained by reading off the
/// coefficient of `x^b y^n` in the Narayana functional equation:
///
/// `Σ_{i,j} 1/(i(b-i)) C(j,i-1) C(j-1,i-1) C(n-1-j,b-i-1) C(n-2-j,b-i-1)
///  = (2/b) C(n-1,b-2) C(n-2,b-1)`,
///
/// with `1 ≤ i ≤ b-1` and `1 ≤ j ≤ n-2`.
pub fn corollary_identity(b: usize, n: usize) -> (BigRational, BigRational) {
    let (bi, ni) = (b as i64, n as i64);
    let mut lhs = BigRational::zero();
    for i in 1..bi {
        for j in 1..=ni - 2 {
            let num = binomial_i(j, i - 1)
                * binomial_i(j - 1, i - 1)
                * binomial_i(ni - 1 - j, bi - i - 1)
                * binomial_i(ni - 2 - j, bi - i - 1);
            if num.is_zero() {
                continue;
            }
            lhs += BigRational::new(BigInt::from(num), BigInt::from(i * (bi - i)));
        }
    }
    let rhs = if b == 0 {
        BigRational::zero()
    } else {
        BigRational::new(
            BigInt::from(2u32) * BigInt::from(binomial_i(ni - 1, bi - 2) * binomial_i(ni - 2, bi - 1)),
            BigInt::from(bi),
        )
    };
    (lhs, rhs)
}
