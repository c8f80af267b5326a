//! The concrete integrals behind each identity.

use super::{IntegrationTask, Method, QuadratureResult, DEFAULT_MAX_EVALS};
use crate::error::{domain, Result};
use crate::qgamma::LogGammaQ;
use crate::special::{log_qpoch_inf_log, QBase, SeriesConfig};
use crate::theta::{log_theta1_imag, log_theta4_imag};

/// Shared knobs for the identity integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralSettings {
    pub tol: f64,
    pub series: SeriesConfig,
    pub method: Method,
    pub max_evals: usize,
}

impl IntegralSettings {
    pub fn new(tol: f64) -> Self {
        Self {
            tol,
            series: SeriesConfig::default(),
            method: Method::Auto,
            max_evals: DEFAULT_MAX_EVALS,
        }
    }

    pub fn with_series(mut self, series: SeriesConfig) -> Self {
        self.series = series;
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    fn run<F: Fn(f64) -> f64>(&self, task: IntegrationTask<F>) -> Result<QuadratureResult> {
        task.tol(self.tol)
            .method(self.method)
            .max_evals(self.max_evals)
            .integrate()
    }
}

fn require_sub_unit(base: QBase, what: &str) -> Result<()> {
    if !base.is_sub_unit() {
        return Err(domain(format!(
            "{what} requires 0 < q < 1, got q = {}",
            base.q()
        )));
    }
    Ok(())
}

/// ∫₀¹ log Γ_q(x + t) dx in either regime. At t = 0 the integrand diverges
/// like −log x, so the left endpoint is treated as singular.
pub fn integral_log_gamma_q(
    base: QBase,
    t: f64,
    settings: &IntegralSettings,
) -> Result<QuadratureResult> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(domain(format!("offset t must be nonnegative, got {t}")));
    }
    let lg = LogGammaQ::new(base, settings.series)?;
    let f = move |x: f64| lg.eval(x + t).map_or(f64::NAN, |v| v.value);
    settings.run(IntegrationTask::new(f, 0.0, 1.0).singular_left(t == 0.0))
}

/// ∫_t^{t+1} log(q^u; q)∞ du for 0 < q < 1.
pub fn integral_log_qpoch_power(
    base: QBase,
    t: f64,
    settings: &IntegralSettings,
) -> Result<QuadratureResult> {
    require_sub_unit(base, "the q-Pochhammer lemma integral")?;
    if !(t >= 0.0 && t.is_finite()) {
        return Err(domain(format!("offset t must be nonnegative, got {t}")));
    }
    let log_q = base.q().ln();
    let series = settings.series;
    let f =
        move |u: f64| log_qpoch_inf_log(u * log_q, log_q, &series).map_or(f64::NAN, |v| v.value);
    settings.run(IntegrationTask::new(f, t, t + 1.0).singular_left(t == 0.0))
}

/// ∫ from −½ log q to ½ log q of log θ₄(ix, q) dx, oriented as written
/// (the upper limit is the smaller one for 0 < q < 1).
pub fn integral_log_theta4(base: QBase, settings: &IntegralSettings) -> Result<QuadratureResult> {
    require_sub_unit(base, "the theta4 integral")?;
    let q = base.q();
    let half = 0.5 * q.ln();
    let series = settings.series;
    let f = move |x: f64| log_theta4_imag(x, q, &series).map_or(f64::NAN, |v| v.value);
    settings.run(
        IntegrationTask::new(f, -half, half)
            .singular_left(true)
            .singular_right(true),
    )
}

/// ∫ from 0 to log q of log θ₁(ix, q) dx, oriented as written.
pub fn integral_log_theta1(base: QBase, settings: &IntegralSettings) -> Result<QuadratureResult> {
    require_sub_unit(base, "the theta1 integral")?;
    let q = base.q();
    let series = settings.series;
    let f = move |x: f64| log_theta1_imag(x, q, &series).map_or(f64::NAN, |v| v.value);
    settings.run(
        IntegrationTask::new(f, 0.0, q.ln())
            .singular_left(true)
            .singular_right(true),
    )
}
