//! Jackson's q-Gamma functions in log form.
//!
//! For 0 < q < 1:
//!   log Γ_q(x) = log(q;q)∞ + (1 − x) log(1 − q) − log(qˣ;q)∞
//!
//! For q > 1, with p = 1/q:
//!   log Γ_q(x) = log(p;p)∞ − log(p^x;p)∞ + (1 − x) log(q − 1) + C(x,2) log q
//!
//! Real-argument binomials are read as C(x,2) = x(x − 1)/2. Γ_q itself is never
//! formed; products like (q;q)∞ underflow long before q reaches 1.

use crate::error::{domain, Result};
use crate::special::{log_qpoch_inf_log, QBase, Regime, SeriesConfig, ValueWithError};

/// Arguments for one log Γ_q evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGammaQInput {
    pub x: f64,
    pub base: QBase,
    pub cfg: SeriesConfig,
}

impl LogGammaQInput {
    pub fn new(x: f64, base: QBase, cfg: SeriesConfig) -> Result<Self> {
        check_x(x)?;
        Ok(Self { x, base, cfg })
    }

    pub fn eval(&self) -> Result<ValueWithError> {
        LogGammaQ::new(self.base, self.cfg)?.eval(self.x)
    }
}

/// log Γ_q for a fixed base, with the x-independent product cached.
///
/// Quadrature calls this thousands of times per integral, and for q close to 1
/// each product costs tens of thousands of terms.
#[derive(Debug, Clone, Copy)]
pub struct LogGammaQ {
    base: QBase,
    cfg: SeriesConfig,
    /// log of the nome of the product: log q below 1, −log q above.
    log_nome: f64,
    constant: ValueWithError,
}

impl LogGammaQ {
    pub fn new(base: QBase, cfg: SeriesConfig) -> Result<Self> {
        let log_q = base.q().ln();
        let log_nome = match base.regime() {
            Regime::SubUnit => log_q,
            Regime::SuperUnit => -log_q,
        };
        let constant = log_qpoch_inf_log(log_nome, log_nome, &cfg)?;
        Ok(Self {
            base,
            cfg,
            log_nome,
            constant,
        })
    }

    pub fn base(&self) -> QBase {
        self.base
    }

    pub fn eval(&self, x: f64) -> Result<ValueWithError> {
        check_x(x)?;
        let q = self.base.q();
        let varying = log_qpoch_inf_log(x * self.log_nome, self.log_nome, &self.cfg)?;
        let err = self.constant.abs_err_bound + varying.abs_err_bound;
        let value = match self.base.regime() {
            Regime::SubUnit => self.constant.value + (1.0 - x) * (-q).ln_1p() - varying.value,
            Regime::SuperUnit => {
                self.constant.value - varying.value
                    + (1.0 - x) * (q - 1.0).ln()
                    + 0.5 * x * (x - 1.0) * q.ln()
            }
        };
        Ok(ValueWithError::new(value, err))
    }
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(domain(format!("log Γ_q requires x > 0, got x = {x}")));
    }
    Ok(())
}

/// log Γ_q(x) for 0 < q < 1.
pub fn log_gamma_q_sub(x: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    let base = QBase::new(q)?;
    if !base.is_sub_unit() {
        return Err(domain(format!(
            "log_gamma_q_sub requires 0 < q < 1, got q = {q}"
        )));
    }
    check_x(x)?;
    LogGammaQ::new(base, *cfg)?.eval(x)
}

/// log Γ_q(x) for q > 1.
pub fn log_gamma_q_super(x: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    let base = QBase::new(q)?;
    if base.is_sub_unit() {
        return Err(domain(format!(
            "log_gamma_q_super requires q > 1, got q = {q}"
        )));
    }
    check_x(x)?;
    LogGammaQ::new(base, *cfg)?.eval(x)
}

/// log Γ_q(x) dispatched on the regime of q.
pub fn log_gamma_q(x: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    check_x(x)?;
    LogGammaQ::new(QBase::new(q)?, *cfg)?.eval(x)
}

/// Γ_q(x) = exp(log Γ_q(x)). Overflows to infinity where the log does not.
pub fn gamma_q(x: f64, q: f64, cfg: &SeriesConfig) -> Result<f64> {
    Ok(log_gamma_q(x, q, cfg)?.value.exp())
}

/// |log Γ_q(x) − log Γ_{1/q}(x) − C(x−1,2) log q| for q > 1.
pub fn key_identity_residual(x: f64, q: f64, cfg: &SeriesConfig) -> Result<f64> {
    let (lhs, rhs) = key_identity_sides(x, q, cfg)?;
    Ok((lhs - rhs).abs())
}

/// Both sides of Γ_q(x) = Γ_{1/q}(x) q^{C(x−1,2)} in log form.
pub fn key_identity_sides(x: f64, q: f64, cfg: &SeriesConfig) -> Result<(f64, f64)> {
    let lhs = log_gamma_q_super(x, q, cfg)?.value;
    let sub = log_gamma_q_sub(x, 1.0 / q, cfg)?.value;
    Ok((lhs, sub + 0.5 * (x - 1.0) * (x - 2.0) * q.ln()))
}

/// log C_q = −(1/12) log q + (1/2 − log(q−1)/(2 log q)) log(q−1) + log(q⁻¹;q⁻¹)∞ for q > 1.
pub fn log_c_q(q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    let base = QBase::new(q)?;
    if base.is_sub_unit() {
        return Err(domain(format!("C_q requires q > 1, got q = {q}")));
    }
    let log_q = q.ln();
    let log_qm1 = (q - 1.0).ln();
    let prod = log_qpoch_inf_log(-log_q, -log_q, cfg)?;
    let value = -log_q / 12.0 + (0.5 - log_qm1 / (2.0 * log_q)) * log_qm1 + prod.value;
    Ok(ValueWithError::new(value, prod.abs_err_bound))
}
