//! Closed-form right-hand sides and the LHS-vs-RHS comparison harness.
//!
//! Each [`TheoremId`] pairs one quadrature (or one alternative closed form)
//! with one closed form. [`verify`] evaluates both and reports the absolute
//! residual; [`sweep`] runs a grid of cells, in parallel, in fixed order.

use crate::error::{domain, Error, Result};
use crate::qgamma::{key_identity_sides, log_c_q};
use crate::quadrature::{
    integral_log_gamma_q, integral_log_qpoch_power, integral_log_theta1, integral_log_theta4,
    IntegralSettings, Method, DEFAULT_MAX_EVALS,
};
use crate::special::{dilog, log_qpoch_inf, zeta2, QBase, SeriesConfig};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    QRaabeSubGeneral,
    QRaabeSubSpecial,
    QRaabeSuperGeneral,
    QRaabeSuperSpecial,
    Theta4Integral,
    Theta1Integral,
    KeyIdentity,
    LemmaZetaOverLogQ,
    LemmaDilogShift,
    SuperAltFormAgreement,
    ClassicalLimit,
}

/// What range of q a theorem accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Domain {
    SubUnit,
    SuperUnit,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::QRaabeSubGeneral,
        TheoremId::QRaabeSubSpecial,
        TheoremId::QRaabeSuperGeneral,
        TheoremId::QRaabeSuperSpecial,
        TheoremId::Theta4Integral,
        TheoremId::Theta1Integral,
        TheoremId::KeyIdentity,
        TheoremId::LemmaZetaOverLogQ,
        TheoremId::LemmaDilogShift,
        TheoremId::SuperAltFormAgreement,
        TheoremId::ClassicalLimit,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::QRaabeSubGeneral => "q-raabe-sub",
            TheoremId::QRaabeSubSpecial => "q-raabe-sub-special",
            TheoremId::QRaabeSuperGeneral => "q-raabe-super",
            TheoremId::QRaabeSuperSpecial => "q-raabe-super-special",
            TheoremId::Theta4Integral => "theta4",
            TheoremId::Theta1Integral => "theta1",
            TheoremId::KeyIdentity => "key-identity",
            TheoremId::LemmaZetaOverLogQ => "lemma-zeta",
            TheoremId::LemmaDilogShift => "lemma-dilog-shift",
            TheoremId::SuperAltFormAgreement => "super-alt-form",
            TheoremId::ClassicalLimit => "classical-limit",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TheoremId::QRaabeSubGeneral => "∫₀¹ log Γ_q(x+t) dx, 0<q<1",
            TheoremId::QRaabeSubSpecial => "∫₀¹ log Γ_q(x) dx, 0<q<1",
            TheoremId::QRaabeSuperGeneral => "∫₀¹ log Γ_q(x+t) dx against log C_q form, q>1, t>0",
            TheoremId::QRaabeSuperSpecial => "∫₀¹ log Γ_q(x) dx, q>1",
            TheoremId::Theta4Integral => "∫ log θ₄(ix,q) dx over [-½log q, ½log q]",
            TheoremId::Theta1Integral => "∫ log θ₁(ix,q) dx over [0, log q]",
            TheoremId::KeyIdentity => "Γ_q(x) = Γ_{1/q}(x) q^{C(x-1,2)}, q>1, x=t",
            TheoremId::LemmaZetaOverLogQ => "∫₀¹ log(qˣ;q)∞ dx = ζ(2)/log q",
            TheoremId::LemmaDilogShift => "∫_t^{t+1} log(q^u;q)∞ du = Li₂(q^t)/log q",
            TheoremId::SuperAltFormAgreement => "log C_q form vs four-term form, q>1, t>0",
            TheoremId::ClassicalLimit => "∫₀¹ log Γ_q(x+t) dx vs log√(2π) + t log t − t",
        }
    }

    /// Whether the identity depends on t.
    pub fn uses_t(self) -> bool {
        matches!(
            self,
            TheoremId::QRaabeSubGeneral
                | TheoremId::QRaabeSuperGeneral
                | TheoremId::KeyIdentity
                | TheoremId::LemmaDilogShift
                | TheoremId::SuperAltFormAgreement
                | TheoremId::ClassicalLimit
        )
    }

    /// Default pass threshold on the absolute residual.
    pub fn default_tol(self) -> f64 {
        match self {
            TheoremId::QRaabeSubGeneral | TheoremId::QRaabeSubSpecial => 1e-9,
            TheoremId::QRaabeSuperGeneral | TheoremId::QRaabeSuperSpecial => 1e-8,
            TheoremId::Theta4Integral | TheoremId::Theta1Integral => 1e-6,
            TheoremId::KeyIdentity => 1e-12,
            TheoremId::LemmaZetaOverLogQ | TheoremId::LemmaDilogShift => 1e-8,
            TheoremId::SuperAltFormAgreement => 1e-10,
            TheoremId::ClassicalLimit => 1e-3,
        }
    }

    /// Quadrature tolerance used when the caller does not pick one.
    fn default_quad_tol(self) -> f64 {
        match self {
            TheoremId::Theta4Integral | TheoremId::Theta1Integral => 1e-8,
            _ => 1e-10,
        }
    }

    fn domain(self) -> Domain {
        match self {
            TheoremId::QRaabeSuperGeneral
            | TheoremId::QRaabeSuperSpecial
            | TheoremId::KeyIdentity
            | TheoremId::SuperAltFormAgreement => Domain::SuperUnit,
            _ => Domain::SubUnit,
        }
    }

    fn check(self, q: f64, t: f64) -> Result<()> {
        let wrong_regime = |requirement| Error::Regime {
            theorem: self.name(),
            requirement,
            q,
        };
        match self.domain() {
            Domain::SubUnit if !(q > 0.0 && q < 1.0) => return Err(wrong_regime("0<q<1")),
            Domain::SuperUnit if !(q > 1.0 && q.is_finite()) => return Err(wrong_regime("q>1")),
            _ => {}
        }
        if self.uses_t() {
            let strict = matches!(
                self,
                TheoremId::QRaabeSuperGeneral
                    | TheoremId::SuperAltFormAgreement
                    | TheoremId::KeyIdentity
            );
            let ok = t.is_finite() && if strict { t > 0.0 } else { t >= 0.0 };
            if !ok {
                let need = if strict { "t > 0" } else { "t >= 0" };
                return Err(domain(format!(
                    "{} requires {need}, got t = {t}",
                    self.name()
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = TheoremId::ALL.iter().map(|id| id.name()).collect();
                Error::Usage(format!(
                    "unknown theorem `{s}` (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// One identity instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub theorem: TheoremId,
    pub q: f64,
    pub t: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl IdentityReport {
    pub fn new(theorem: TheoremId, q: f64, t: f64, lhs: f64, rhs: f64, tol: f64) -> Self {
        let residual = (lhs - rhs).abs();
        Self {
            theorem,
            q,
            t,
            lhs,
            rhs,
            residual,
            tol,
            pass: residual <= tol,
        }
    }

    /// A cell that could not be evaluated.
    pub fn failed(theorem: TheoremId, q: f64, t: f64, tol: f64) -> Self {
        Self {
            theorem,
            q,
            t,
            lhs: f64::NAN,
            rhs: f64::NAN,
            residual: f64::NAN,
            tol,
            pass: false,
        }
    }
}

/// Knobs for [`verify`] beyond the pass threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub series: SeriesConfig,
    pub method: Method,
    /// Quadrature tolerance; per-theorem default (tighter than the pass threshold) when `None`.
    pub quad_tol: Option<f64>,
    pub max_evals: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            series: SeriesConfig::default(),
            method: Method::Auto,
            quad_tol: None,
            max_evals: DEFAULT_MAX_EVALS,
        }
    }
}

impl VerifyOptions {
    fn settings(&self, theorem: TheoremId, tol: f64) -> IntegralSettings {
        let quad_tol = self
            .quad_tol
            .unwrap_or_else(|| theorem.default_quad_tol().min(tol / 10.0));
        IntegralSettings {
            tol: quad_tol,
            series: self.series,
            method: self.method,
            max_evals: self.max_evals,
        }
    }
}

// Closed forms. Each takes the series configuration used for its products
// and dilogarithms.

/// (1/2 − t) log(1 − q) − Li₂(q^t)/log q + log(q;q)∞ for 0 < q < 1, t ≥ 0.
pub fn rhs_q_raabe_sub(q: f64, t: f64, cfg: &SeriesConfig) -> Result<f64> {
    TheoremId::QRaabeSubGeneral.check(q, t)?;
    let prod = log_qpoch_inf(q, q, cfg)?.value;
    Ok(prod + (0.5 - t) * (-q).ln_1p() - rhs_lemma_dilog_shift(q, t, cfg)?)
}

/// The t = 0 case: (1/2) log(1 − q) − ζ(2)/log q + log(q;q)∞.
pub fn rhs_q_raabe_sub_special(q: f64, cfg: &SeriesConfig) -> Result<f64> {
    rhs_q_raabe_sub(q, 0.0, cfg)
}

/// log C_q − (1/(2 q^t log q))·[ r(2 Li₂(q^{−t}) + log²(1−q^{−t})) +
///   2 r log((1−q)/(1−q^t)) log(1−q^{−t}) − q^t log²((1−q)/(1−q^t)) ],
/// with r = (1−q^t)/(1−q^{−t}), for q > 1 and t > 0.
pub fn rhs_q_raabe_super(q: f64, t: f64, cfg: &SeriesConfig) -> Result<f64> {
    TheoremId::QRaabeSuperGeneral.check(q, t)?;
    let log_q = q.ln();
    let qt = (t * log_q).exp();
    // 1 − q^{−t} and 1 − q^t, both via expm1.
    let one_minus_qmt = -(-t * log_q).exp_m1();
    let one_minus_qt = -(t * log_q).exp_m1();
    let ratio = one_minus_qt / one_minus_qmt;
    let log_frac = ((1.0 - q) / one_minus_qt).ln();
    let log_m = one_minus_qmt.ln();
    let li = dilog((-t * log_q).exp(), cfg)?.value;
    let bracket = ratio * (2.0 * li + log_m * log_m) + 2.0 * ratio * log_frac * log_m
        - qt * log_frac * log_frac;
    Ok(log_c_q(q, cfg)?.value - bracket / (2.0 * qt * log_q))
}

/// log(q⁻¹;q⁻¹)∞ + Li₂(q^{−t})/log q + (1/2 − t) log(q − 1) + (t²/2 − 1/12) log q, q > 1, t ≥ 0.
pub fn rhs_q_raabe_super_alt(q: f64, t: f64, cfg: &SeriesConfig) -> Result<f64> {
    if !(q > 1.0 && q.is_finite()) {
        return Err(Error::Regime {
            theorem: TheoremId::SuperAltFormAgreement.name(),
            requirement: "q>1",
            q,
        });
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(domain(format!(
            "rhs_q_raabe_super_alt requires t >= 0, got t = {t}"
        )));
    }
    let log_q = q.ln();
    let prod = log_qpoch_inf(1.0 / q, 1.0 / q, cfg)?.value;
    let li = dilog((-t * log_q).exp(), cfg)?.value;
    Ok(prod + li / log_q + (0.5 - t) * (q - 1.0).ln() + (0.5 * t * t - 1.0 / 12.0) * log_q)
}

/// ζ(2)/log q + (1/2) log(q − 1) − (1/12) log q + log(q⁻¹;q⁻¹)∞ for q > 1.
pub fn rhs_q_raabe_super_special(q: f64, cfg: &SeriesConfig) -> Result<f64> {
    rhs_q_raabe_super_alt(q, 0.0, cfg)
}

/// ζ(2) + log q · log(q²;q²)∞ for 0 < q < 1.
pub fn rhs_theta(q: f64, cfg: &SeriesConfig) -> Result<f64> {
    TheoremId::Theta4Integral.check(q, 0.0)?;
    Ok(zeta2() + q.ln() * log_qpoch_inf(q * q, q * q, cfg)?.value)
}

/// ζ(2)/log q for 0 < q < 1.
pub fn rhs_lemma_zeta(q: f64) -> Result<f64> {
    TheoremId::LemmaZetaOverLogQ.check(q, 0.0)?;
    Ok(zeta2() / q.ln())
}

/// Li₂(q^t)/log q for 0 < q < 1, t ≥ 0.
pub fn rhs_lemma_dilog_shift(q: f64, t: f64, cfg: &SeriesConfig) -> Result<f64> {
    TheoremId::LemmaDilogShift.check(q, t)?;
    let log_q = q.ln();
    Ok(dilog((t * log_q).exp(), cfg)?.value / log_q)
}

/// log√(2π) + t log t − t, with the t = 0 limit log√(2π).
pub fn classical_raabe(t: f64) -> f64 {
    let base = 0.5 * (2.0 * std::f64::consts::PI).ln();
    if t == 0.0 {
        base
    } else {
        base + t * t.ln() - t
    }
}

/// Evaluate both sides of one identity instance.
///
/// `t` is ignored for theorems that do not depend on it and is reported as 0.
/// For [`TheoremId::KeyIdentity`] it plays the role of x.
pub fn verify(
    theorem: TheoremId,
    q: f64,
    t: f64,
    tol: f64,
    opts: &VerifyOptions,
) -> Result<IdentityReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(domain(format!("tol must be positive, got {tol}")));
    }
    let t = if theorem.uses_t() { t } else { 0.0 };
    theorem.check(q, t)?;
    let cfg = &opts.series;
    let settings = opts.settings(theorem, tol);
    let base = QBase::new(q)?;
    let (lhs, rhs) = match theorem {
        TheoremId::QRaabeSubGeneral => (
            integral_log_gamma_q(base, t, &settings)?.value,
            rhs_q_raabe_sub(q, t, cfg)?,
        ),
        TheoremId::QRaabeSubSpecial => (
            integral_log_gamma_q(base, 0.0, &settings)?.value,
            rhs_q_raabe_sub_special(q, cfg)?,
        ),
        TheoremId::QRaabeSuperGeneral => (
            integral_log_gamma_q(base, t, &settings)?.value,
            rhs_q_raabe_super(q, t, cfg)?,
        ),
        TheoremId::QRaabeSuperSpecial => (
            integral_log_gamma_q(base, 0.0, &settings)?.value,
            rhs_q_raabe_super_special(q, cfg)?,
        ),
        TheoremId::Theta4Integral => (
            integral_log_theta4(base, &settings)?.value,
            rhs_theta(q, cfg)?,
        ),
        TheoremId::Theta1Integral => (
            integral_log_theta1(base, &settings)?.value,
            rhs_theta(q, cfg)?,
        ),
        TheoremId::KeyIdentity => key_identity_sides(t, q, cfg)?,
        TheoremId::LemmaZetaOverLogQ => (
            integral_log_qpoch_power(base, 0.0, &settings)?.value,
            rhs_lemma_zeta(q)?,
        ),
        TheoremId::LemmaDilogShift => (
            integral_log_qpoch_power(base, t, &settings)?.value,
            rhs_lemma_dilog_shift(q, t, cfg)?,
        ),
        TheoremId::SuperAltFormAgreement => (
            rhs_q_raabe_super(q, t, cfg)?,
            rhs_q_raabe_super_alt(q, t, cfg)?,
        ),
        TheoremId::ClassicalLimit => (
            integral_log_gamma_q(base, t, &settings)?.value,
            classical_raabe(t),
        ),
    };
    Ok(IdentityReport::new(theorem, q, t, lhs, rhs, tol))
}

/// Result of a grid run: one report per cell plus the errors of cells that
/// could not be evaluated (their reports carry NaN values and `pass = false`).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutcome {
    pub reports: Vec<IdentityReport>,
    pub errors: Vec<(usize, Error)>,
}

impl SweepOutcome {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.reports.len()
    }
}

/// Verify every (q, t) cell, q outer and t inner. For theorems without t, or
/// an empty t grid, a single placeholder t = 0 is used.
pub fn sweep(
    theorem: TheoremId,
    q_grid: &[f64],
    t_grid: &[f64],
    tol: f64,
    opts: &VerifyOptions,
) -> Result<SweepOutcome> {
    if q_grid.is_empty() {
        return Err(Error::Usage("q grid must not be empty".into()));
    }
    if theorem.uses_t() && t_grid.is_empty() {
        return Err(Error::Usage(format!("{theorem} needs a nonempty t grid")));
    }
    let placeholder = [0.0];
    let ts: &[f64] = if theorem.uses_t() {
        t_grid
    } else {
        &placeholder
    };
    let cells: Vec<(f64, f64)> = q_grid
        .iter()
        .flat_map(|&q| ts.iter().map(move |&t| (q, t)))
        .collect();
    let results: Vec<Result<IdentityReport>> = cells
        .par_iter()
        .map(|&(q, t)| verify(theorem, q, t, tol, opts))
        .collect();
    let mut reports = Vec::with_capacity(cells.len());
    let mut errors = Vec::new();
    for (i, (res, &(q, t))) in results.into_iter().zip(&cells).enumerate() {
        match res {
            Ok(r) => reports.push(r),
            Err(e) => {
                reports.push(IdentityReport::failed(theorem, q, t, tol));
                errors.push((i, e));
            }
        }
    }
    Ok(SweepOutcome { reports, errors })
}
