//! One-dimensional quadrature over oriented intervals.
//!
//! Tasks with a flagged singular endpoint go to tanh-sinh, which never samples
//! the endpoints and absorbs logarithmic blow-up. Smooth tasks go to adaptive
//! Gauss–Kronrod. Either method can also be forced through [`Method`].

mod integrals;
mod kronrod;
mod tanh_sinh;

pub use integrals::{
    integral_log_gamma_q, integral_log_qpoch_power, integral_log_theta1, integral_log_theta4,
    IntegralSettings,
};

use crate::error::{domain, Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Default cap on integrand calls per task.
pub const DEFAULT_MAX_EVALS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Tanh-sinh when any endpoint is flagged singular, Gauss–Kronrod otherwise.
    #[default]
    Auto,
    TanhSinh,
    GaussKronrod,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "tanh-sinh" => Ok(Method::TanhSinh),
            "gk" | "gauss-kronrod" => Ok(Method::GaussKronrod),
            other => Err(Error::Usage(format!(
                "unknown quadrature method `{other}` (expected tanh-sinh, gk or auto)"
            ))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::TanhSinh => "tanh-sinh",
            Method::GaussKronrod => "gk",
        })
    }
}

/// An oriented integral ∫_a^b f(x) dx and how to compute it.
///
/// `singular_left` marks `a` and `singular_right` marks `b`, whatever their order.
#[derive(Clone)]
pub struct IntegrationTask<F> {
    pub integrand: F,
    pub a: f64,
    pub b: f64,
    pub tol: f64,
    pub singular_left: bool,
    pub singular_right: bool,
    pub method: Method,
    pub max_evals: usize,
}

impl<F: Fn(f64) -> f64> IntegrationTask<F> {
    pub fn new(integrand: F, a: f64, b: f64) -> Self {
        Self {
            integrand,
            a,
            b,
            tol: 1e-10,
            singular_left: false,
            singular_right: false,
            method: Method::Auto,
            max_evals: DEFAULT_MAX_EVALS,
        }
    }

    pub fn tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn singular_left(mut self, yes: bool) -> Self {
        self.singular_left = yes;
        self
    }

    pub fn singular_right(mut self, yes: bool) -> Self {
        self.singular_right = yes;
        self
    }

    pub fn method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn max_evals(mut self, max_evals: usize) -> Self {
        self.max_evals = max_evals;
        self
    }

    pub fn integrate(&self) -> Result<QuadratureResult> {
        integrate(self)
    }
}

/// Outcome of one oriented integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Integrate an oriented task. Budget exhaustion is reported through
/// `converged = false`; a non-finite integrand value is an error.
pub fn integrate<F: Fn(f64) -> f64>(task: &IntegrationTask<F>) -> Result<QuadratureResult> {
    if !(task.tol > 0.0 && task.tol.is_finite()) {
        return Err(domain(format!(
            "tolerance must be positive, got {}",
            task.tol
        )));
    }
    if !(task.a.is_finite() && task.b.is_finite()) {
        return Err(domain("integration limits must be finite"));
    }
    if task.a == task.b {
        return Ok(QuadratureResult {
            value: 0.0,
            err_estimate: 0.0,
            evaluations: 0,
            converged: true,
        });
    }
    let (lo, hi, sign, sing_lo, sing_hi) = if task.a < task.b {
        (task.a, task.b, 1.0, task.singular_left, task.singular_right)
    } else {
        (
            task.b,
            task.a,
            -1.0,
            task.singular_right,
            task.singular_left,
        )
    };
    let method = match task.method {
        Method::Auto if sing_lo || sing_hi => Method::TanhSinh,
        Method::Auto => Method::GaussKronrod,
        m => m,
    };
    let f = &task.integrand;
    let mut result = match method {
        Method::TanhSinh => tanh_sinh::integrate(f, lo, hi, task.tol, task.max_evals)?,
        _ => kronrod::integrate(f, lo, hi, task.tol, task.max_evals)?,
    };
    result.value *= sign;
    Ok(result)
}

#[derive(Debug, Default)]
pub(crate) struct Accumulator {
    pub(crate) evaluations: usize,
}

impl Accumulator {
    pub(crate) fn eval<F: Fn(f64) -> f64>(&mut self, f: &F, x: f64) -> Result<f64> {
        self.evaluations += 1;
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFiniteIntegrand { x, value: v });
        }
        Ok(v)
    }

    pub(crate) fn finish(&self, value: f64, err: f64, converged: bool) -> QuadratureResult {
        QuadratureResult {
            value,
            err_estimate: err,
            evaluations: self.evaluations,
            converged,
        }
    }
}
