//! q-Gamma functions, the dilogarithm, q-Pochhammer symbols and Jacobi theta
//! functions on the imaginary line, together with a harness that checks the
//! q-analogues of Raabe's integral and two theta-function integrals by
//! quadrature against their closed forms.
//!
//! All arithmetic is binary64. Infinite sums and products are truncated by
//! explicit tail bounds controlled through [`SeriesConfig`].
//!
//! ```
//! use qraabe::{dilog, zeta2, SeriesConfig};
//!
//! let li = dilog(1.0, &SeriesConfig::default()).unwrap();
//! assert_eq!(li.value, zeta2());
//! ```

pub mod cli;
pub mod error;
pub mod qgamma;
pub mod quadrature;
pub mod special;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
pub use qgamma::{
    gamma_q, key_identity_residual, key_identity_sides, log_c_q, log_gamma_q, log_gamma_q_sub,
    log_gamma_q_super, LogGammaQ, LogGammaQInput,
};
pub use quadrature::{
    integral_log_gamma_q, integral_log_qpoch_power, integral_log_theta1, integral_log_theta4,
    integrate, IntegralSettings, IntegrationTask, Method, QuadratureResult,
};
pub use special::{
    dilog, log_qpoch_inf, qpoch_finite, qpoch_inf, zeta2, QBase, Regime, SeriesConfig,
    ValueWithError,
};
pub use theta::{
    log_theta1_imag, log_theta4_imag, theta1_series_imag_modulus, theta4_product_imag,
    theta4_series_imag, ThetaImagPoint,
};
pub use verify::{
    classical_raabe, rhs_lemma_dilog_shift, rhs_lemma_zeta, rhs_q_raabe_sub,
    rhs_q_raabe_sub_special, rhs_q_raabe_super, rhs_q_raabe_super_alt, rhs_q_raabe_super_special,
    rhs_theta, sweep, verify, IdentityReport, SweepOutcome, TheoremId, VerifyOptions,
};
