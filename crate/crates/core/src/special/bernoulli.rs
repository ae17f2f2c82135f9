use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const MAX_BERNOULLI_ORDER: usize = 60;

struct Table {
    exact: Vec<BigRational>,
    float: Vec<f64>,
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0, with B_1 = -1/2
        let mut exact: Vec<BigRational> = Vec::with_capacity(MAX_BERNOULLI_ORDER + 1);
        exact.push(BigRational::one());
        for m in 1..=MAX_BERNOULLI_ORDER {
            let row = binomial_row(m + 1);
            let sum = exact
                .iter()
                .zip(&row)
                .fold(BigRational::zero(), |acc, (b, c)| acc + b * BigRational::from_integer(c.clone()));
            exact.push(-sum / BigRational::from_integer(BigInt::from(m + 1)));
        }
        let float = exact.iter().map(|b| b.to_f64().unwrap()).collect();
        Table { exact, float }
    })
}

pub(crate) fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Exact Bernoulli number `B_n` (with `B_1 = -1/2`).
pub fn bernoulli_number_exact(n: usize) -> Result<BigRational> {
    table().exact.get(n).cloned().ok_or(Error::OrderTooLarge(n))
}

pub fn bernoulli_number(n: usize) -> Result<f64> {
    table().float.get(n).copied().ok_or(Error::OrderTooLarge(n))
}

/// `B_n(x) = sum_k C(n, k) B_k x^{n-k}`, summed exactly in the binary value
/// of `x` and rounded once.
pub fn bernoulli_polynomial(n: usize, x: f64) -> Result<f64> {
    if n > MAX_BERNOULLI_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let x = BigRational::from_float(x)
        .ok_or_else(|| Error::DomainError(format!("Bernoulli polynomial argument {x} is not finite")))?;
    let bern = &table().exact;
    let row = binomial_row(n);
    // Horner in x over coefficients C(n, k) B_k of x^{n-k}
    let value = (0..=n).fold(BigRational::zero(), |acc, k| {
        acc * &x + &bern[k] * BigRational::from_integer(row[k].clone())
    });
    Ok(value.to_f64().unwrap_or(f64::NAN))
}
