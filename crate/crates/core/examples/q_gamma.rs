// Jackson's q-Gamma function in both regimes, its functional equation, and
// the identity tying the q > 1 branch to the 0 < q < 1 branch.

use qraabe::{gamma_q, key_identity_sides, log_c_q, log_gamma_q, LogGammaQ, QBase, SeriesConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SeriesConfig::default();

    for q in [0.5, 2.0] {
        for x in [0.5, 1.0, 2.0, 3.5] {
            println!("Gamma_q({x}) at q = {q}: {:.15}", gamma_q(x, q, &cfg)?);
        }
    }

    // Reuse one evaluator when x varies and q is fixed.
    let g = LogGammaQ::new(QBase::new(0.3)?, cfg)?;
    let x = 1.7f64;
    let step = g.eval(x + 1.0)?.value - g.eval(x)?.value;
    let expected = ((1.0 - 0.3f64.powf(x)) / 0.7).ln();
    println!(
        "functional equation residual: {:.1e}",
        (step - expected).abs()
    );

    let (lhs, rhs) = key_identity_sides(1.25, 4.0, &cfg)?;
    println!("key identity at x = 1.25, q = 4: {lhs:.15} vs {rhs:.15}");
    assert!((lhs - rhs).abs() < 1e-12);

    println!("log C_q at q = 2: {:.15}", log_c_q(2.0, &cfg)?.value);
    println!(
        "log Gamma_q(10) at q = 0.9: {:.12}",
        log_gamma_q(10.0, 0.9, &cfg)?.value
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
