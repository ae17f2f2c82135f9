use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::bernoulli::bernoulli_number;
use super::gamma::ln_gamma_real;
use super::EvalResult;
use crate::error::{Error, Result};

/// Number of Bernoulli correction terms in the Euler–Maclaurin tail.
const CORRECTION_ORDER: usize = 10;

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Magnitude of the correction term of order `k` at head length `n`:
/// `|B_{2k}/(2k)! (z)_{2k-1}| (n + a)^{-Re z - 2k + 1}`.
fn correction_magnitude(z: Complex64, a: f64, n: usize, k: usize) -> f64 {
    let rising: f64 = (0..2 * k - 1).map(|j| (z + j as f64).norm()).product();
    let b = bernoulli_number(2 * k).unwrap().abs() / factorial(2 * k);
    b * rising * (n as f64 + a).powf(-z.re - (2 * k) as f64 + 1.0)
}

// Each power x^{-z} carries a relative error of about (2 + |Im z ln x|) ulp.
fn roundoff_magnitude(z: Complex64, a: f64, n: usize) -> f64 {
    let conditioning = |x: f64| 2.0 + (z.im * x.ln()).abs();
    let head: f64 = (0..n)
        .map(|j| {
            let x = j as f64 + a;
            x.powf(-z.re) * conditioning(x)
        })
        .sum();
    let na = n as f64 + a;
    let integral = na.powf(1.0 - z.re) / (z - 1.0).norm() * conditioning(na);
    4.0 * f64::EPSILON * (head + integral)
}

/// Head length for the Euler–Maclaurin sum.
///
/// For `Re z >= 0` this is `max(10, ceil|z| + 10)`. For `Re z < 0` the head
/// terms grow like `n^{-Re z}` and cancel against the integral term, so the
/// length is chosen in `1..=max(10, ceil|z| + 10)` to minimize the combined
/// truncation and roundoff estimate.
fn head_length(z: Complex64, a: f64) -> usize {
    let cap = 10usize.max(z.norm().ceil() as usize + 10);
    if z.re >= 0.0 {
        return cap;
    }
    (1..=cap)
        .map(|n| {
            let err = correction_magnitude(z, a, n, CORRECTION_ORDER + 1) + roundoff_magnitude(z, a, n);
            (n, err)
        })
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .map(|(n, _)| n)
        .unwrap_or(cap)
}

/// Hurwitz zeta `zeta_H(z, a) = sum_{n>=0} (n + a)^{-z}` continued to all
/// `z != 1` by Euler–Maclaurin summation.
///
/// `abs_error_estimate` is the first omitted correction term plus a roundoff
/// estimate for the head and integral terms.
pub fn hurwitz_zeta(z: Complex64, a: f64) -> Result<EvalResult> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::DomainError(format!("Hurwitz parameter a must lie in (0, 1], got {a}")));
    }
    if z == Complex64::new(1.0, 0.0) {
        return Err(Error::PoleAtOne);
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::DomainError(format!("Hurwitz argument {z} is not finite")));
    }
    let n = head_length(z, a);
    let mut sum: Complex64 = (0..n).map(|j| power(j as f64 + a, -z)).sum();
    let na = n as f64 + a;
    let na_pow = power(na, -z);
    sum += na_pow * na / (z - 1.0);
    sum += 0.5 * na_pow;

    // sum_k B_{2k}/(2k)! (z)_{2k-1} (n+a)^{-z-2k+1}
    let mut rising = z;
    let mut tail_power = na_pow / na;
    let inv_na2 = 1.0 / (na * na);
    for k in 1..=CORRECTION_ORDER {
        let b = bernoulli_number(2 * k).unwrap() / factorial(2 * k);
        sum += rising * tail_power * b;
        rising *= (z + (2 * k - 1) as f64) * (z + (2 * k) as f64);
        tail_power *= inv_na2;
    }
    let truncation = correction_magnitude(z, a, n, CORRECTION_ORDER + 1);
    Ok(EvalResult {
        value: sum,
        abs_error_estimate: truncation + roundoff_magnitude(z, a, n),
    })
}

fn power(base: f64, exponent: Complex64) -> Complex64 {
    if exponent.im == 0.0 {
        Complex64::new(base.powf(exponent.re), 0.0)
    } else {
        (exponent * base.ln()).exp()
    }
}

/// Riemann zeta via the `a = 1` Euler–Maclaurin evaluation, valid for all
/// `z != 1`.
pub fn riemann_zeta(z: Complex64) -> Result<EvalResult> {
    hurwitz_zeta(z, 1.0)
}

/// `zeta_R'(0) = -ln(2 pi)/2`.
pub fn riemann_zeta_deriv0() -> f64 {
    -0.5 * (2.0 * PI).ln()
}

fn expm1(w: Complex64) -> Complex64 {
    if w.norm() < 1e-5 {
        w * (1.0 + w * (0.5 + w / 6.0))
    } else {
        w.exp() - 1.0
    }
}

/// Dirichlet eta `(1 - 2^{1-z}) zeta_R(z)`, with `eta(1) = ln 2`.
pub fn dirichlet_eta(z: Complex64) -> EvalResult {
    if z == Complex64::new(1.0, 0.0) {
        return EvalResult { value: Complex64::new(LN_2, 0.0), abs_error_estimate: 0.0 };
    }
    let factor = -expm1((1.0 - z) * LN_2);
    let zeta = riemann_zeta(z).expect("z != 1");
    EvalResult {
        value: factor * zeta.value,
        abs_error_estimate: factor.norm() * zeta.abs_error_estimate,
    }
}

/// `d/dz zeta_H(z, a)` at `z = 0`, by Lerch's formula
/// `log Gamma(a) - ln(2 pi)/2`.
pub fn hurwitz_zeta_deriv0(a: f64) -> Result<f64> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::DomainError(format!("Hurwitz parameter a must lie in (0, 1], got {a}")));
    }
    Ok(ln_gamma_real(a)? - 0.5 * (2.0 * PI).ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::bernoulli::bernoulli_polynomial;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn hz(z: Complex64, a: f64) -> Complex64 {
        hurwitz_zeta(z, a).unwrap().value
    }

    #[test]
    fn riemann_special_values() {
        assert!((riemann_zeta(re(-1.0)).unwrap().value - re(-1.0 / 12.0)).norm() < 1e-14);
        assert!((riemann_zeta(re(0.0)).unwrap().value - re(-0.5)).norm() < 1e-14);
        assert!((riemann_zeta(re(2.0)).unwrap().value - re(PI * PI / 6.0)).norm() < 1e-14);
        assert!((riemann_zeta(re(4.0)).unwrap().value - re(PI.powi(4) / 90.0)).norm() < 1e-14);
        assert!(matches!(riemann_zeta(re(1.0)), Err(Error::PoleAtOne)));
    }

    // reference values computed with mpmath at 30 digits
    #[test]
    fn reference_values() {
        let cases = [
            (Complex64::new(0.5, 14.0), 1.0, Complex64::new(0.022241142609993589246, -0.103258123266450057902)),
            (re(-3.7), 1.0, re(0.002599254987149322106)),
            (Complex64::new(2.0, 3.0), 1.0, Complex64::new(0.798021985146275720622, -0.113744308052938500216)),
            (Complex64::new(0.7, 1.0), 0.3, Complex64::new(0.739646678406076800940, 1.217789204905584533604)),
            (re(-2.3), 0.45, re(-0.007926115813772047836)),
            (re(5.0), 0.1, re(100000.650300133133282421714)),
        ];
        for (z, a, expected) in cases {
            let got = hurwitz_zeta(z, a).unwrap();
            let err = (got.value - expected).norm();
            assert!(err <= 1e-12 * expected.norm().max(1.0), "zeta_H({z}, {a}) = {} vs {expected}", got.value);
            assert!(got.abs_error_estimate < 1e-11 * expected.norm().max(1.0));
            assert!(err <= got.abs_error_estimate.max(1e-15), "{z} {a}: err {err:e} est {:e}", got.abs_error_estimate);
        }
        let eta = dirichlet_eta(Complex64::new(0.5, 2.0)).value;
        assert!((eta - Complex64::new(0.759501470922294886491, 0.381660956424526389059)).norm() < 1e-13);
    }

    #[test]
    fn hurwitz_examples() {
        assert!((hz(re(2.0), 1.0) - re(PI * PI / 6.0)).norm() < 1e-14);
        assert!((hz(re(-1.0), 0.5) - re(1.0 / 24.0)).norm() < 1e-15);
        assert!((hz(re(0.0), 0.3) - re(0.2)).norm() < 1e-14);
        assert!(matches!(hurwitz_zeta(re(2.0), 0.0), Err(Error::DomainError(_))));
        assert!(matches!(hurwitz_zeta(re(2.0), 1.5), Err(Error::DomainError(_))));
        assert!(matches!(hurwitz_zeta(re(1.0), 0.5), Err(Error::PoleAtOne)));
    }

    #[test]
    fn hurwitz_near_zero_is_smooth() {
        // zeta_H(0, a) = 1/2 - a, approached from both sides
        let a = 0.3;
        let h = 1e-8;
        let left = hz(re(-h), a).re;
        let right = hz(re(h), a).re;
        let richardson = 0.5 * (left + right);
        assert!((richardson - 0.2).abs() < 1e-14);
    }

    #[test]
    fn negative_integers_match_bernoulli() {
        for r in 0..=8usize {
            for i in 1..=10 {
                let a = i as f64 / 10.0;
                let expected = -bernoulli_polynomial(r + 1, a).unwrap() / (r + 1) as f64;
                let got = hz(re(-(r as f64)), a).re;
                assert!((got - expected).abs() < 1e-10, "r = {r}, a = {a}: {got} vs {expected}");
            }
        }
    }

    #[test]
    fn eta_values() {
        assert_eq!(dirichlet_eta(re(1.0)).value, re(LN_2));
        assert!((dirichlet_eta(re(2.0)).value - re(PI * PI / 12.0)).norm() < 1e-14);
        assert!((dirichlet_eta(re(0.0)).value - re(0.5)).norm() < 1e-14);
        // continuity through the removable point
        assert!((dirichlet_eta(re(1.0 + 1e-9)).value - re(LN_2)).norm() < 1e-9);
    }

    #[test]
    fn eta_zero_by_abel_summation() {
        // sum (-1)^{n-1} x^{n-1} -> 1/(1+x); eta(0) is its Abel limit 1/2
        let x: f64 = 1.0 - 1e-6;
        let abel = 1.0 / (1.0 + x);
        assert!((dirichlet_eta(re(0.0)).value.re - abel).abs() < 1e-6);
    }

    #[test]
    fn zeta_deriv0() {
        assert!((riemann_zeta_deriv0() + 0.918938533204672741780).abs() < 1e-15);
        let h = 1e-5;
        let fd = (riemann_zeta(re(h)).unwrap().value.re - riemann_zeta(re(-h)).unwrap().value.re) / (2.0 * h);
        assert!((fd - riemann_zeta_deriv0()).abs() < 1e-6);
    }

    #[test]
    fn lerch_formula_against_finite_difference() {
        assert!((hurwitz_zeta_deriv0(1.0).unwrap() - riemann_zeta_deriv0()).abs() < 1e-14);
        assert!((hurwitz_zeta_deriv0(0.5).unwrap() + 0.5 * LN_2).abs() < 1e-14);
        // mpmath: zeta(0, 0.25, derivative=1)
        assert!((hurwitz_zeta_deriv0(0.25).unwrap() - 0.369083991493404715590).abs() < 1e-13);
        let h = 1e-5;
        for a in [0.1, 0.25, 0.5, 0.77, 1.0] {
            let fd = (hz(re(h), a).re - hz(re(-h), a).re) / (2.0 * h);
            assert!((fd - hurwitz_zeta_deriv0(a).unwrap()).abs() < 1e-8, "a = {a}");
        }
        assert!(hurwitz_zeta_deriv0(0.0).is_err());
    }
}
