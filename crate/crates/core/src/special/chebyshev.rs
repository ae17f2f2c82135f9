use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `T_n(x)` by the three-term recurrence.
pub fn chebyshev_t(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let (mut prev, mut cur) = (1.0, x);
            for _ in 1..n {
                let next = 2.0 * x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Coefficient of `(1 - x)^r` in `T_n(x)`:
/// `(-2)^r n/(n+r) C(n+r, 2r) = (-2)^r n (n+r-1)! / ((n-r)! (2r)!)`.
pub fn chebyshev_coefficient(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one();
    }
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j));
    let magnitude = ((BigInt::from(n) * fact(n + r - 1)) << r) / (fact(n - r) * fact(2 * r));
    if r % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// All coefficients `r = 0..=n` of `T_n` in powers of `(1 - x)`.
pub fn chebyshev_coefficients(n: usize) -> Vec<BigInt> {
    (0..=n).map(|r| chebyshev_coefficient(n, r)).collect()
}

/// `sum_r c_{n,r} (1 - x)^r`, the expanded form of `T_n(x)`.
///
/// The coefficients grow like `4^n` with alternating signs, so the sum is
/// formed exactly in the binary value of `x` and rounded once.
pub fn chebyshev_t_expanded(n: usize, x: f64) -> Result<f64> {
    let y = BigRational::one()
        - BigRational::from_float(x).ok_or_else(|| Error::DomainError(format!("argument {x} is not finite")))?;
    let value = chebyshev_coefficients(n)
        .into_iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * &y + BigRational::from_integer(c));
    Ok(value.to_f64().unwrap_or(f64::NAN))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_values() {
        for n in 0..=10 {
            assert_eq!(chebyshev_t(n, 1.0), 1.0);
        }
        assert_eq!(chebyshev_t(2, 0.5), -0.5);
        assert!((chebyshev_t(7, 0.3f64.cos()) - 2.1f64.cos()).abs() < 1e-14);
        for n in 0..50 {
            for i in 0..=20 {
                let x = -1.0 + i as f64 / 10.0;
                assert!((chebyshev_t(n, x) - (n as f64 * x.acos()).cos()).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn low_order_coefficients() {
        // T_2 = 2x^2 - 1 = 1 - 4(1-x) + 2(1-x)^2
        let c: Vec<i64> = chebyshev_coefficients(2).iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(c, vec![1, -4, 2]);
        // T_3 = 4x^3 - 3x = 1 - 9(1-x) + 12(1-x)^2 - 4(1-x)^3
        let c: Vec<i64> = chebyshev_coefficients(3).iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(c, vec![1, -9, 12, -4]);
        // T_n(1) = 1
        for n in 0..40 {
            assert_eq!(chebyshev_coefficient(n, 0), BigInt::one());
        }
    }

    #[test]
    fn expanded_form_agrees_with_recurrence() {
        for n in 0..=30 {
            for i in 0..=40 {
                let x = -1.0 + i as f64 / 20.0;
                let expanded = chebyshev_t_expanded(n, x).unwrap();
                assert!((expanded - chebyshev_t(n, x)).abs() < 1e-8, "n = {n}, x = {x}");
            }
        }
    }
}
