// The general integrator: endpoint singularities, reversed limits, and the
// choice between tanh-sinh and Gauss-Kronrod.

use qraabe::{IntegrationTask, Method};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let log_x = IntegrationTask::new(f64::ln, 0.0, 1.0)
        .singular_left(true)
        .tol(1e-12)
        .integrate()?;
    println!(
        "int_0^1 log x dx = {:.15} (est {:.1e}, {} evals)",
        log_x.value, log_x.err_estimate, log_x.evaluations
    );

    // Reversing the limits flips the sign; the singular flag follows the endpoint.
    let rev = IntegrationTask::new(f64::ln, 1.0, 0.0)
        .singular_right(true)
        .tol(1e-12)
        .integrate()?;
    println!("int_1^0 log x dx = {:.15}", rev.value);
    assert!((log_x.value + rev.value).abs() < 1e-13);

    for method in [Method::GaussKronrod, Method::TanhSinh] {
        let r = IntegrationTask::new(|x: f64| (-x * x).exp(), -2.0, 2.0)
            .method(method)
            .tol(1e-12)
            .integrate()?;
        println!(
            "{method:>12}: int exp(-x^2) = {:.15}, {} evals",
            r.value, r.evaluations
        );
    }

    // A non-finite sample is reported, not silently absorbed.
    let bad = IntegrationTask::new(|x: f64| 1.0 / (x - 0.5), 0.0, 1.0)
        .method(Method::GaussKronrod)
        .integrate();
    println!(
        "pole inside the interval: {}",
        bad.map(|r| r.value.to_string())
            .unwrap_or_else(|e| e.to_string())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
