//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always show; exits non-zero if any criterion fails.

mod common;

use common::golden::*;
use common::{analytic_set, brute_dilog, brute_qpoch};
use qraabe::cli::{reports_from_csv, reports_to_csv};
use qraabe::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use std::time::Instant;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn opts() -> VerifyOptions {
    VerifyOptions::default()
}

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

/// Run `verify` over a grid and report the worst residual.
fn grid_check(theorem: TheoremId, qs: &[f64], ts: &[f64], tol: f64) -> Outcome {
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for &q in qs {
        for &t in ts {
            match verify(theorem, q, t, tol, &opts()) {
                Ok(r) => {
                    worst = worst.max(r.residual);
                    if !(r.residual < tol) {
                        failures.push(format!("(q={q}, t={t}): {:e}", r.residual));
                    }
                }
                Err(e) => failures.push(format!("(q={q}, t={t}): {e}")),
            }
        }
    }
    let cells = qs.len() * ts.len();
    if failures.is_empty() {
        outcome(
            true,
            format!("{cells} cells, max residual {worst:.2e} < {tol:e}"),
        )
    } else {
        outcome(false, format!("failing cells: {}", failures.join("; ")))
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let qs = [0.1, 0.3, 0.5, 0.7, 0.9];
    let ts = [0.0, 0.25, 1.0, 2.5];
    let mut o = grid_check(TheoremId::QRaabeSubGeneral, &qs, &ts, 1e-9);
    let per_cell = start.elapsed().as_secs_f64() / (qs.len() * ts.len()) as f64;
    o.detail += &format!(", {per_cell:.3}s per cell");
    o
}

fn criterion_2() -> Outcome {
    let qs = [1.5, 2.0, 5.0, 10.0];
    let ts = [0.1, 0.5, 1.0, 3.0];
    let quad = grid_check(TheoremId::QRaabeSuperGeneral, &qs, &ts, 1e-8);
    let forms = grid_check(TheoremId::SuperAltFormAgreement, &qs, &ts, 1e-10);
    outcome(
        quad.pass && forms.pass,
        format!(
            "quadrature: {}; closed forms agree: {}",
            quad.detail, forms.detail
        ),
    )
}

fn criterion_3() -> Outcome {
    grid_check(
        TheoremId::QRaabeSuperSpecial,
        &[1.5, 2.0, 5.0, 10.0],
        &[0.0],
        1e-8,
    )
}

/// Both orientations of one theta integral against the closed form.
fn theta_orientation(theorem: TheoremId, tol: f64) -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for &q in &[0.2, 0.5, 0.8] {
        let base = QBase::new(q).unwrap();
        let settings = IntegralSettings::new(1e-8);
        let printed = match theorem {
            TheoremId::Theta4Integral => integral_log_theta4(base, &settings),
            _ => integral_log_theta1(base, &settings),
        };
        let printed = match printed {
            Ok(r) => r.value,
            Err(e) => return outcome(false, format!("q={q}: {e}")),
        };
        let rhs = rhs_theta(q, &cfg()).unwrap();
        let as_printed = (printed - rhs).abs() < tol;
        let reversed = (-printed - rhs).abs() < tol;
        let which = match (as_printed, reversed) {
            (true, false) => "as printed",
            (false, true) => "reversed",
            (true, true) => "both",
            (false, false) => "neither",
        };
        pass &= as_printed ^ reversed && as_printed;
        lines.push(format!(
            "q={q}: |Δ|={:.2e} ({which})",
            (printed - rhs).abs()
        ));
    }
    outcome(pass, lines.join(", "))
}

fn criterion_4() -> Outcome {
    theta_orientation(TheoremId::Theta4Integral, 1e-6)
}

fn criterion_5() -> Outcome {
    theta_orientation(TheoremId::Theta1Integral, 1e-6)
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let x = rng.gen_range(0.1..5.0);
        let q = rng.gen_range(1.1..20.0);
        match key_identity_residual(x, q, &cfg()) {
            Ok(r) => worst = worst.max(r),
            Err(e) => return outcome(false, format!("(x={x}, q={q}): {e}")),
        }
    }
    outcome(
        worst < 1e-12,
        format!("100 random points, max residual {worst:.2e} < 1e-12"),
    )
}

fn criterion_7() -> Outcome {
    let zeta = grid_check(TheoremId::LemmaZetaOverLogQ, &[0.3, 0.7], &[0.0], 1e-8);
    let shift = grid_check(TheoremId::LemmaDilogShift, &[0.3, 0.7], &[0.5, 2.0], 1e-8);
    outcome(
        zeta.pass && shift.pass,
        format!("ζ(2)/log q: {}; Li₂ shift: {}", zeta.detail, shift.detail),
    )
}

fn criterion_8() -> Outcome {
    let qs = [0.9, 0.99, 0.999];
    let mut pass = true;
    let mut detail = Vec::new();
    for &t in &[0.0, 1.0] {
        let mut gaps = Vec::new();
        for &q in &qs {
            match verify(TheoremId::ClassicalLimit, q, t, 1e-3, &opts()) {
                Ok(r) => gaps.push(r.residual),
                Err(e) => return outcome(false, format!("(q={q}, t={t}): {e}")),
            }
        }
        let monotone = gaps.windows(2).all(|w| w[1] < w[0]);
        pass &= monotone;
        if t == 0.0 {
            pass &= gaps[2] < 1e-3;
        }
        // Measured gap / (1 − q); tends to 5/24 at t = 0.
        let rates: Vec<String> = gaps
            .iter()
            .zip(&qs)
            .map(|(g, q)| format!("{:.4}", g / (1.0 - q)))
            .collect();
        detail.push(format!(
            "t={t}: gaps {:.2e} {:.2e} {:.2e} (gap/(1-q) = {})",
            gaps[0],
            gaps[1],
            gaps[2],
            rates.join(", ")
        ));
    }
    outcome(pass, detail.join("; "))
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);

    // Dilogarithm reflection on [0, 1].
    let mut worst = 0.0f64;
    for i in 1..200 {
        let z = i as f64 / 200.0;
        let lhs = dilog(z, &cfg()).unwrap().value
            + dilog(1.0 - z, &cfg()).unwrap().value
            + z.ln() * (1.0 - z).ln();
        worst = worst.max((lhs - zeta2()).abs());
    }
    for &z in &[0.0, 1.0] {
        let lhs = dilog(z, &cfg()).unwrap().value + dilog(1.0 - z, &cfg()).unwrap().value;
        worst = worst.max((lhs - zeta2()).abs());
    }
    if !(worst < 1e-13) {
        failures.push(format!("dilog reflection {worst:e}"));
    }
    let reflection = worst;

    // θ₄ series vs product, 50 points per q.
    let mut worst = 0.0f64;
    for &q in &[0.2f64, 0.5, 0.8] {
        let h = -0.5 * q.ln();
        for _ in 0..50 {
            let x = rng.gen_range(-h..h) * 0.999;
            let s = theta4_series_imag(x, q, &cfg()).unwrap().value;
            let p = theta4_product_imag(x, q, &cfg()).unwrap().value;
            worst = worst.max((s - p).abs() / p.abs().max(1.0));
        }
    }
    if !(worst < 1e-12) {
        failures.push(format!("theta4 series/product {worst:e}"));
    }
    let theta4 = worst;

    // θ₁ reflection x ↦ log q − x.
    let mut worst = 0.0f64;
    for &q in &[0.2f64, 0.5, 0.8] {
        let lq = q.ln();
        for _ in 0..50 {
            let x = rng.gen_range(lq..0.0);
            if x <= lq || x >= 0.0 {
                continue;
            }
            let a = log_theta1_imag(x, q, &cfg()).unwrap().value;
            let b = log_theta1_imag(lq - x, q, &cfg()).unwrap().value;
            worst = worst.max((a - b).abs());
        }
    }
    if !(worst < 1e-12) {
        failures.push(format!("theta1 reflection {worst:e}"));
    }
    let theta1 = worst;

    // Quadrature analytic set: honest error estimates and orientation.
    for case in analytic_set() {
        let fwd = IntegrationTask::new(case.f, case.a, case.b)
            .singular_left(case.singular_left)
            .singular_right(case.singular_right)
            .tol(1e-10)
            .integrate()
            .unwrap();
        let rev = IntegrationTask::new(case.f, case.b, case.a)
            .singular_left(case.singular_right)
            .singular_right(case.singular_left)
            .tol(1e-10)
            .integrate()
            .unwrap();
        let err = (fwd.value - case.truth).abs();
        if !(fwd.converged && err <= fwd.err_estimate && err < 1e-10) {
            failures.push(format!(
                "{}: err {err:e}, estimate {:e}",
                case.name, fwd.err_estimate
            ));
        }
        if (rev.value + fwd.value).abs() > 1e-15 * fwd.value.abs().max(1.0) {
            failures.push(format!(
                "{}: orientation {} vs {}",
                case.name, fwd.value, rev.value
            ));
        }
    }

    // Additivity on smooth integrands.
    for _ in 0..20 {
        let (a, b, c) = (
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let f = |x: f64| (x * 1.3).sin() + x * x;
        let ab = IntegrationTask::new(f, a, b).integrate().unwrap();
        let bc = IntegrationTask::new(f, b, c).integrate().unwrap();
        let ac = IntegrationTask::new(f, a, c).integrate().unwrap();
        let slack = ab.err_estimate + bc.err_estimate + ac.err_estimate + 1e-14;
        if (ab.value + bc.value - ac.value).abs() > slack {
            failures.push(format!("additivity ({a}, {b}, {c})"));
        }
    }

    // CSV round trip.
    let sweep_out = sweep(
        TheoremId::KeyIdentity,
        &[1.5, 2.0, 5.0],
        &[0.5, 1.3, 2.7],
        1e-12,
        &opts(),
    )
    .unwrap();
    let mut reports = sweep_out.reports.clone();
    reports.push(IdentityReport::new(
        TheoremId::Theta1Integral,
        0.5,
        0.0,
        1.0 / 3.0,
        0.1 + 0.2,
        1e-6,
    ));
    let back = reports_from_csv(&reports_to_csv(&reports).unwrap()).unwrap();
    if back != reports {
        failures.push("csv round trip".into());
    }

    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "dilog reflection {reflection:.1e}, θ₄ series/product {theta4:.1e} (150 pts), θ₁ reflection {theta1:.1e}, quadrature set, additivity, csv round trip"
            )
        } else {
            failures.join("; ")
        },
    )
}

fn criterion_10() -> Outcome {
    let checks: Vec<(&str, f64, f64)> = vec![
        (
            "(0.5;0.5)∞",
            qpoch_inf(0.5, 0.5, &cfg()).unwrap().value,
            QPOCH_HALF_HALF,
        ),
        (
            "log (0.5;0.5)∞",
            log_qpoch_inf(0.5, 0.5, &cfg()).unwrap().value,
            LOG_QPOCH_HALF_HALF,
        ),
        (
            "(0.25;0.25)∞",
            qpoch_inf(0.25, 0.25, &cfg()).unwrap().value,
            QPOCH_QUARTER_QUARTER,
        ),
        (
            "(0.5;0.25)∞",
            qpoch_inf(0.5, 0.25, &cfg()).unwrap().value,
            QPOCH_HALF_QUARTER,
        ),
        ("brute (0.5;0.5)∞", brute_qpoch(0.5, 0.5), QPOCH_HALF_HALF),
        ("Li₂(0.5)", dilog(0.5, &cfg()).unwrap().value, DILOG_HALF),
        ("brute Li₂(0.5)", brute_dilog(0.5), DILOG_HALF),
        (
            "log Γ_0.5(0.5)",
            log_gamma_q_sub(0.5, 0.5, &cfg()).unwrap().value,
            LOG_GAMMA_Q_SUB_HALF_HALF,
        ),
        (
            "log Γ_2(0.5)",
            log_gamma_q_super(0.5, 2.0, &cfg()).unwrap().value,
            LOG_GAMMA_Q_SUPER_HALF_TWO,
        ),
        ("log C_2", log_c_q(2.0, &cfg()).unwrap().value, LOG_C_Q_TWO),
        (
            "log C_1.5",
            log_c_q(1.5, &cfg()).unwrap().value,
            LOG_C_Q_ONE_HALF,
        ),
        (
            "log C_10",
            log_c_q(10.0, &cfg()).unwrap().value,
            LOG_C_Q_TEN,
        ),
        (
            "θ₄ series (0, 0.5)",
            theta4_series_imag(0.0, 0.5, &cfg()).unwrap().value,
            THETA4_SERIES_ZERO_HALF,
        ),
        (
            "θ₄ product (0.3, 0.5)",
            theta4_product_imag(0.3, 0.5, &cfg()).unwrap().value,
            THETA4_PRODUCT_03_HALF,
        ),
        (
            "log θ₄ (0.34, 0.5)",
            log_theta4_imag(0.34, 0.5, &cfg()).unwrap().value,
            LOG_THETA4_034_HALF,
        ),
        (
            "log θ₁ (-0.3, 0.5)",
            log_theta1_imag(-0.3, 0.5, &cfg()).unwrap().value,
            LOG_THETA1_M03_HALF,
        ),
        (
            "rhs sub (0.5, 0)",
            rhs_q_raabe_sub(0.5, 0.0, &cfg()).unwrap(),
            RHS_SUB_HALF_ZERO,
        ),
        (
            "rhs super (2, 1)",
            rhs_q_raabe_super(2.0, 1.0, &cfg()).unwrap(),
            RHS_SUPER_TWO_ONE,
        ),
        (
            "rhs alt (1.5, 0.5)",
            rhs_q_raabe_super_alt(1.5, 0.5, &cfg()).unwrap(),
            RHS_SUPER_ALT_ONE_HALF_HALF,
        ),
        (
            "rhs special (10)",
            rhs_q_raabe_super_special(10.0, &cfg()).unwrap(),
            RHS_SUPER_SPECIAL_TEN,
        ),
        (
            "rhs theta (0.2)",
            rhs_theta(0.2, &cfg()).unwrap(),
            RHS_THETA_02,
        ),
        (
            "rhs theta (0.5)",
            rhs_theta(0.5, &cfg()).unwrap(),
            RHS_THETA_HALF,
        ),
        (
            "rhs theta (0.8)",
            rhs_theta(0.8, &cfg()).unwrap(),
            RHS_THETA_08,
        ),
    ];
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for (name, got, want) in &checks {
        let d = (got - want).abs();
        worst = worst.max(d);
        if !(d <= 1e-13) {
            bad.push(format!("{name}: {d:e}"));
        }
    }
    if bad.is_empty() {
        outcome(
            true,
            format!(
                "{} golden values, max |Δ| {worst:.1e} <= 1e-13",
                checks.len()
            ),
        )
    } else {
        outcome(false, bad.join("; "))
    }
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("sub-unit q-Raabe, 5x4 grid, < 1e-9", criterion_1),
        (
            "super-unit q-Raabe general form, < 1e-8; forms agree < 1e-10",
            criterion_2,
        ),
        ("super-unit q-Raabe at t = 0, < 1e-8", criterion_3),
        ("theta4 integral, < 1e-6, one orientation", criterion_4),
        ("theta1 integral, < 1e-6, one orientation", criterion_5),
        (
            "Gamma_q key identity, 100 random points, < 1e-12",
            criterion_6,
        ),
        ("q-Pochhammer integral lemmas, < 1e-8", criterion_7),
        ("classical Raabe limit as q -> 1", criterion_8),
        ("property suites", criterion_9),
        ("golden values, < 1e-13", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "[{status}] criterion {:>2}: {name} -- {} ({:.2}s)",
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if !o.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
