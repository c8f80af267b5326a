//! Scalar building blocks: the dilogarithm, ζ(2), and finite and infinite
//! q-Pochhammer symbols.
//!
//! Infinite products are evaluated as sums of logarithms and truncated only
//! once a rigorous geometric tail bound drops below [`SeriesConfig::eps`].
//! Every such routine returns a [`ValueWithError`] carrying that bound.

use crate::error::{domain, Error, Result};
use serde::{Deserialize, Serialize};

/// Which side of 1 a q-parameter sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// 0 < q < 1
    SubUnit,
    /// q > 1
    SuperUnit,
}

/// A validated q-parameter: positive, finite and different from 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QBase {
    q: f64,
    regime: Regime,
}

impl QBase {
    pub fn new(q: f64) -> Result<Self> {
        if !(q.is_finite() && q > 0.0) || q == 1.0 {
            return Err(domain(format!(
                "q must be positive, finite and != 1, got {q}"
            )));
        }
        let regime = if q < 1.0 {
            Regime::SubUnit
        } else {
            Regime::SuperUnit
        };
        Ok(Self { q, regime })
    }

    pub fn q(self) -> f64 {
        self.q
    }

    pub fn regime(self) -> Regime {
        self.regime
    }

    pub fn is_sub_unit(self) -> bool {
        self.regime == Regime::SubUnit
    }
}

/// Truncation controls shared by every infinite sum and product.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    /// Absolute target for the tail bound.
    pub eps: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            eps: 1e-15,
            max_terms: 1_000_000,
        }
    }
}

impl SeriesConfig {
    pub fn new(eps: f64, max_terms: usize) -> Result<Self> {
        if !(eps.is_finite() && eps > 0.0) {
            return Err(domain(format!(
                "eps must be positive and finite, got {eps}"
            )));
        }
        if max_terms == 0 {
            return Err(domain("max_terms must be at least 1"));
        }
        Ok(Self { eps, max_terms })
    }

    pub(crate) fn with_eps(self, eps: f64) -> Self {
        Self { eps, ..self }
    }
}

/// A computed value paired with a bound on its truncation error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValueWithError {
    pub value: f64,
    pub abs_err_bound: f64,
}

impl ValueWithError {
    pub fn new(value: f64, abs_err_bound: f64) -> Self {
        debug_assert!(abs_err_bound >= 0.0 && abs_err_bound.is_finite());
        Self {
            value,
            abs_err_bound,
        }
    }

    pub fn exact(value: f64) -> Self {
        Self::new(value, 0.0)
    }
}

/// Neumaier's compensated sum.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(self) -> f64 {
        self.sum + self.carry
    }
}

/// ζ(2) = π²/6.
pub fn zeta2() -> f64 {
    std::f64::consts::PI * std::f64::consts::PI / 6.0
}

/// The dilogarithm Li₂(z) = Σ zⁿ/n² for real z in [-1, 1].
///
/// The power series is summed directly only for |z| ≤ 1/2. Larger positive
/// arguments go through the reflection Li₂(z) = ζ(2) − log z·log(1−z) − Li₂(1−z),
/// and z < −1/2 through the duplication Li₂(z) = ½Li₂(z²) − Li₂(−z).
pub fn dilog(z: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    if !(-1.0..=1.0).contains(&z) {
        return Err(domain(format!("dilog requires -1 <= z <= 1, got {z}")));
    }
    if z == 1.0 {
        return Ok(ValueWithError::exact(zeta2()));
    }
    if z == 0.0 {
        return Ok(ValueWithError::exact(0.0));
    }
    if z.abs() <= 0.5 {
        return dilog_series(z, cfg);
    }
    if z > 0.5 {
        let w = 1.0 - z;
        let tail = dilog_series(w, cfg)?;
        let value = zeta2() - z.ln() * w.ln() - tail.value;
        return Ok(ValueWithError::new(value, tail.abs_err_bound));
    }
    // z in [-1, -1/2): both z² and -z land in (1/4, 1].
    let half = cfg.with_eps(cfg.eps / 2.0);
    let squared = dilog(z * z, &half)?;
    let reflected = dilog(-z, &half)?;
    Ok(ValueWithError::new(
        0.5 * squared.value - reflected.value,
        0.5 * squared.abs_err_bound + reflected.abs_err_bound,
    ))
}

fn dilog_series(z: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    debug_assert!(z.abs() <= 0.5);
    let r = z.abs();
    let mut acc = CompensatedSum::default();
    let mut power = 1.0;
    for n in 1..=cfg.max_terms {
        power *= z;
        let nf = n as f64;
        acc.add(power / (nf * nf));
        // |Σ_{k>n} z^k/k²| ≤ r^{n+1} / ((n+1)² (1 − r))
        let next = nf + 1.0;
        let bound = power.abs() * r / (next * next * (1.0 - r));
        if bound <= cfg.eps {
            return Ok(ValueWithError::new(acc.total(), bound));
        }
    }
    Err(Error::NonConvergence {
        what: "dilogarithm series",
        max_terms: cfg.max_terms,
        bound: r.powi(cfg.max_terms as i32 + 1),
        eps: cfg.eps,
    })
}

/// The finite product (a; q)ₙ = ∏_{i<n} (1 − a qⁱ).
pub fn qpoch_finite(a: f64, q: f64, n: usize) -> f64 {
    let mut prod = 1.0;
    let mut aq = a;
    for _ in 0..n {
        prod *= 1.0 - aq;
        aq *= q;
    }
    prod
}

/// log (a; q)∞ for 0 ≤ a < 1 and 0 < q < 1.
///
/// The sum Σ log(1 − a qᵏ) is cut at the first K with
/// a q^K / ((1 − q)(1 − a q^K)) ≤ eps; that quantity is the reported bound.
pub fn log_qpoch_inf(a: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    if !(0.0..1.0).contains(&a) {
        return Err(domain(format!(
            "log_qpoch_inf requires 0 <= a < 1, got a = {a}"
        )));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(domain(format!(
            "log_qpoch_inf requires 0 < q < 1, got q = {q}"
        )));
    }
    if a == 0.0 {
        return Ok(ValueWithError::exact(0.0));
    }
    log_qpoch_inf_log(a.ln(), q.ln(), cfg)
}

/// (a; q)∞ as the exponential of [`log_qpoch_inf`].
pub fn qpoch_inf(a: f64, q: f64, cfg: &SeriesConfig) -> Result<ValueWithError> {
    let log = log_qpoch_inf(a, q, cfg)?;
    let value = log.value.exp();
    Ok(ValueWithError::new(value, log.abs_err_bound * value))
}

/// log (a; q)∞ with both a = e^{log_a} and q = e^{log_q} given by their logarithms.
///
/// Arguments near 1 keep full relative accuracy in 1 − a this way, which is
/// what the integrands need close to their singular endpoints.
pub(crate) fn log_qpoch_inf_log(
    log_a: f64,
    log_q: f64,
    cfg: &SeriesConfig,
) -> Result<ValueWithError> {
    if log_a == f64::NEG_INFINITY {
        return Ok(ValueWithError::exact(0.0));
    }
    if !(log_a < 0.0) {
        return Err(domain(format!(
            "q-Pochhammer base must lie in [0, 1), got a = exp({log_a})"
        )));
    }
    if !(log_q < 0.0 && log_q.is_finite()) {
        return Err(domain(format!(
            "q-Pochhammer nome must lie in (0, 1), got q = exp({log_q})"
        )));
    }
    let q = log_q.exp();
    let one_minus_q = -log_q.exp_m1();
    let mut acc = CompensatedSum::default();
    for k in 0..cfg.max_terms {
        let y = log_a + k as f64 * log_q;
        let aqk = y.exp();
        acc.add(ln_one_minus_exp(y, aqk));
        // Tail from index k+1 on.
        let next = aqk * q;
        let bound = next / (one_minus_q * (1.0 - next));
        if bound <= cfg.eps {
            return Ok(ValueWithError::new(acc.total(), bound));
        }
    }
    let y = log_a + cfg.max_terms as f64 * log_q;
    Err(Error::NonConvergence {
        what: "q-Pochhammer product",
        max_terms: cfg.max_terms,
        bound: y.exp() / (one_minus_q * (1.0 - y.exp())),
        eps: cfg.eps,
    })
}

/// log(1 − e^y) for y < 0, with `ey = e^y` precomputed.
fn ln_one_minus_exp(y: f64, ey: f64) -> f64 {
    if ey < 0.5 {
        (-ey).ln_1p()
    } else {
        (-y.exp_m1()).ln()
    }
}
