//! Jacobi θ₄ and θ₁ at purely imaginary argument ix, 0 < q < 1.
//!
//! The triple-product forms
//!
//!   θ₄(ix, q) = (q e^{−2x}; q²)∞ (q e^{2x}; q²)∞ (q²; q²)∞
//!   θ₁(ix, q) = (q² e^{−2x}; q²)∞ (e^{2x}; q²)∞ (q²; q²)∞
//!
//! are the integrands of the theta integrals and are evaluated in log form.
//! The bilateral series are kept as independent cross-checks.
//!
//! The θ₁ series modulus and the θ₁ product above are not proportional by a
//! constant: their ratio is q^{1/4} e^{−x}. Only the product enters any
//! integral here.

use crate::error::{domain, Error, Result};
use crate::special::{log_qpoch_inf_log, QBase, SeriesConfig, ValueWithError};

/// A point x on the imaginary line together with its (sub-unit) nome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaImagPoint {
    pub x: f64,
    pub base: QBase,
}

impl ThetaImagPoint {
    pub fn new(x: f64, base: QBase) -> Result<Self> {
        if !base.is_sub_unit() {
            return Err(domain(format!(
                "theta functions require 0 < q < 1, got q = {}",
                base.q()
            )));
        }
        Ok(Self { x, base })
    }

    /// Open interval on which the θ₄ product has no vanishing factor.
    pub fn theta4_interval(&self) -> (f64, f64) {
        let h = 0.5 * self.base.q().ln();
        (h, -h)
    }

    /// Open interval on which the θ₁ product has no vanishing factor.
    pub fn theta1_interval(&self) -> (f64, f64) {
        (self.base.q().ln(), 0.0)
    }

    pub fn log_theta4(&self) -> Result<ValueWithError> {
        log_theta4_imag(self.x, self.base.q(), &SeriesConfig::default())
    }

    pub fn log_theta1(&self) -> Result<ValueWithError> {
        log_theta1_imag(self.x, self.base.q(), &SeriesConfig::default())
    }
}

fn check_q(q: f64) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(domain(format!(
            "theta functions require 0 < q < 1, got q = {q}"
        )));
    }
    Ok(q.ln())
}

/// θ₄(ix, q) = 1 + 2 Σ_{n≥1} (−1)ⁿ q^{n²} cosh(2nx), for |x| < −½ log q.
pub fn theta4_series_imag(x: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    let log_q = check_q(q)?;
    if !(x.abs() < -0.5 * log_q) {
        return Err(domain(format!(
            "theta4 series requires |x| < -log(q)/2 = {}, got x = {x}",
            -0.5 * log_q
        )));
    }
    let one_minus_q = -log_q.exp_m1();
    let mut sum = 1.0;
    for n in 1..=cfg.max_terms {
        let nf = n as f64;
        let e = nf * nf * log_q;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        // 2 q^{n²} cosh(2nx)
        sum += sign * ((e + 2.0 * nf * x).exp() + (e - 2.0 * nf * x).exp());
        let bound = (e + 2.0 * nf * x.abs()).exp();
        if bound < cfg.eps * one_minus_q {
            return Ok(ValueWithError::new(sum, 2.0 * bound / one_minus_q));
        }
    }
    Err(Error::NonConvergence {
        what: "theta4 series",
        max_terms: cfg.max_terms,
        bound: f64::NAN,
        eps: cfg.eps,
    })
}

/// θ₄(ix, q) from the triple product; positive on the open interval.
pub fn theta4_product_imag(x: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    let log = log_theta4_imag(x, q, cfg)?;
    let value = log.value.exp();
    Ok(ValueWithError::new(value, log.abs_err_bound * value))
}

/// log θ₄(ix, q) for ½ log q < x < −½ log q as a sum of three log-products.
pub fn log_theta4_imag(x: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    let log_q = check_q(q)?;
    let half = 0.5 * log_q;
    if !(x > half && x < -half) {
        return Err(domain(format!(
            "log_theta4_imag requires {half} < x < {}, got x = {x}",
            -half
        )));
    }
    let nome = 2.0 * log_q;
    sum3(
        log_qpoch_inf_log(log_q - 2.0 * x, nome, cfg)?,
        log_qpoch_inf_log(log_q + 2.0 * x, nome, cfg)?,
        log_qpoch_inf_log(nome, nome, cfg)?,
    )
}

/// log θ₁(ix, q) for log q < x < 0 as a sum of three log-products.
pub fn log_theta1_imag(x: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    let log_q = check_q(q)?;
    if !(x > log_q && x < 0.0) {
        return Err(domain(format!(
            "log_theta1_imag requires {log_q} < x < 0, got x = {x}"
        )));
    }
    let nome = 2.0 * log_q;
    sum3(
        log_qpoch_inf_log(nome - 2.0 * x, nome, cfg)?,
        log_qpoch_inf_log(2.0 * x, nome, cfg)?,
        log_qpoch_inf_log(nome, nome, cfg)?,
    )
}

fn sum3(a: ValueWithError, b: ValueWithError, c: ValueWithError) -> Result<ValueWithError> {
    Ok(ValueWithError::new(
        a.value + b.value + c.value,
        a.abs_err_bound + b.abs_err_bound + c.abs_err_bound,
    ))
}

/// |Σ_n (−1)^{n−1/2} q^{(n+1/2)²} e^{−(2n+1)x}| = 2 |Σ_{n≥0} (−1)ⁿ q^{(n+1/2)²} sinh((2n+1)x)|,
/// for |x| < −log q.
pub fn theta1_series_imag_modulus(x: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    let log_q = check_q(q)?;
    if !(x.abs() < -log_q) {
        return Err(domain(format!(
            "theta1 series requires |x| < -log(q) = {}, got x = {x}",
            -log_q
        )));
    }
    let one_minus_q = -log_q.exp_m1();
    let mut sum = 0.0;
    for n in 0..cfg.max_terms {
        let half = n as f64 + 0.5;
        let e = half * half * log_q;
        let k = 2.0 * half;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        // 2 q^{(n+1/2)²} sinh((2n+1)x)
        sum += sign * ((e + k * x).exp() - (e - k * x).exp());
        let bound = (e + k * x.abs()).exp();
        if bound < cfg.eps * one_minus_q {
            return Ok(ValueWithError::new(sum.abs(), 2.0 * bound / one_minus_q));
        }
    }
    Err(Error::NonConvergence {
        what: "theta1 series",
        max_terms: cfg.max_terms,
        bound: f64::NAN,
        eps: cfg.eps,
    })
}
