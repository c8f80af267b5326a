// Finite and infinite q-Pochhammer symbols (a; q)_n and (a; q)_∞.

use qraabe::{log_qpoch_inf, qpoch_finite, qpoch_inf, SeriesConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SeriesConfig::default();

    for n in [0, 1, 2, 5, 10] {
        println!("(0.5; 0.5)_{n:<2} = {:.15}", qpoch_finite(0.5, 0.5, n));
    }
    let inf = qpoch_inf(0.5, 0.5, &cfg)?;
    println!(
        "(0.5; 0.5)_inf = {:.15} ± {:.1e}",
        inf.value, inf.abs_err_bound
    );

    // Close to q = 1 the product underflows long before its logarithm does.
    for q in [0.9, 0.99, 0.999] {
        let l = log_qpoch_inf(q, q, &cfg)?;
        println!("log (q; q)_inf at q = {q}: {:.12}", l.value);
    }

    // Splitting off the first n factors leaves (a qⁿ; q)_∞.
    let (a, q, n) = (0.7f64, 0.6f64, 5);
    let whole = log_qpoch_inf(a, q, &cfg)?.value;
    let split = qpoch_finite(a, q, n).ln() + log_qpoch_inf(a * q.powi(n as i32), q, &cfg)?.value;
    println!("split residual: {:.1e}", (whole - split).abs());
    assert!((whole - split).abs() < 1e-14);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
