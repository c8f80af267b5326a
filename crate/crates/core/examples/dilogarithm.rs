// The real dilogarithm on [-1, 1] with its error bound, and the reflection
// identity Li₂(z) + Li₂(1 − z) = ζ(2) − log z · log(1 − z).

use qraabe::{dilog, zeta2, SeriesConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SeriesConfig::default();
    println!("{:>6}  {:>22}  {:>10}", "z", "Li2(z)", "bound");
    for z in [-1.0, -0.75, -0.5, 0.0, 0.25, 0.5, 0.9, 1.0] {
        let li = dilog(z, &cfg)?;
        println!("{z:>6}  {:>22.17}  {:>10.2e}", li.value, li.abs_err_bound);
    }

    let z = 0.3f64;
    let lhs = dilog(z, &cfg)?.value + dilog(1.0 - z, &cfg)?.value;
    let rhs = zeta2() - z.ln() * (1.0 - z).ln();
    println!("reflection at z = {z}: residual {:.2e}", (lhs - rhs).abs());
    assert!((lhs - rhs).abs() < 1e-14);

    // A looser tail target gives a larger, still honest, bound.
    let loose = dilog(0.5, &SeriesConfig::new(1e-6, 1_000)?)?;
    println!(
        "Li2(0.5) at eps = 1e-6: {} ± {:.1e}",
        loose.value, loose.abs_err_bound
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
