#![allow(dead_code)]

pub mod golden;

/// Plain truncated product ∏ (1 − a qᵏ), stopping once the factor is within
/// 1e-17 of 1. Independent of the library's log-sum evaluation.
pub fn brute_qpoch(a: f64, q: f64) -> f64 {
    let mut p = 1.0;
    let mut aq = a;
    while aq.abs() > 1e-17 {
        p *= 1.0 - aq;
        aq *= q;
    }
    p
}

/// Σ zⁿ/n² summed until the term drops below 1e-17 (converges for |z| < 1).
pub fn brute_dilog(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0;
    let mut n = 1u64;
    loop {
        power *= z;
        let term = power / (n * n) as f64;
        if term.abs() < 1e-17 {
            return sum;
        }
        sum += term;
        n += 1;
    }
}

/// One integral with a known value.
pub struct AnalyticCase {
    pub name: &'static str,
    pub f: fn(f64) -> f64,
    pub a: f64,
    pub b: f64,
    pub singular_left: bool,
    pub singular_right: bool,
    pub truth: f64,
}

/// Polynomials, exp, log x, log(1−x) and x log x on [0, 1].
pub fn analytic_set() -> Vec<AnalyticCase> {
    let e = std::f64::consts::E;
    vec![
        AnalyticCase {
            name: "x",
            f: |x| x,
            a: 0.0,
            b: 1.0,
            singular_left: false,
            singular_right: false,
            truth: 0.5,
        },
        AnalyticCase {
            name: "3x^2-2x+1",
            f: |x| 3.0 * x * x - 2.0 * x + 1.0,
            a: 0.0,
            b: 1.0,
            singular_left: false,
            singular_right: false,
            truth: 1.0,
        },
        AnalyticCase {
            name: "x^7",
            f: |x| x.powi(7),
            a: 0.0,
            b: 2.0,
            singular_left: false,
            singular_right: false,
            truth: 32.0,
        },
        AnalyticCase {
            name: "exp",
            f: f64::exp,
            a: 0.0,
            b: 1.0,
            singular_left: false,
            singular_right: false,
            truth: e - 1.0,
        },
        AnalyticCase {
            name: "exp(-3x)",
            f: |x| (-3.0 * x).exp(),
            a: -1.0,
            b: 2.0,
            singular_left: false,
            singular_right: false,
            truth: ((3.0f64).exp() - (-6.0f64).exp()) / 3.0,
        },
        AnalyticCase {
            name: "log x",
            f: f64::ln,
            a: 0.0,
            b: 1.0,
            singular_left: true,
            singular_right: false,
            truth: -1.0,
        },
        AnalyticCase {
            name: "log(1-x)",
            f: |x| (1.0 - x).ln(),
            a: 0.0,
            b: 1.0,
            singular_left: false,
            singular_right: true,
            truth: -1.0,
        },
        AnalyticCase {
            name: "x log x",
            f: |x| x * x.ln(),
            a: 0.0,
            b: 1.0,
            singular_left: true,
            singular_right: false,
            truth: -0.25,
        },
        AnalyticCase {
            name: "log x + log(1-x)",
            f: |x| x.ln() + (1.0 - x).ln(),
            a: 0.0,
            b: 1.0,
            singular_left: true,
            singular_right: true,
            truth: -2.0,
        },
    ]
}
