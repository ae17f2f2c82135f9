//! Gamma, Riemann, Hurwitz and Dirichlet-eta functions, Bernoulli and
//! Chebyshev polynomials.

mod bernoulli;
mod chebyshev;
mod gamma;
mod zeta;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use bernoulli::{bernoulli_number, bernoulli_number_exact, bernoulli_polynomial, MAX_BERNOULLI_ORDER};
pub use chebyshev::{chebyshev_coefficient, chebyshev_coefficients, chebyshev_t, chebyshev_t_expanded};
pub use gamma::{gamma, ln_gamma_real, log_gamma};
pub use zeta::{dirichlet_eta, hurwitz_zeta, hurwitz_zeta_deriv0, riemann_zeta, riemann_zeta_deriv0};

/// A numerical value together with a bound on its truncation error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_error_estimate: f64,
}
