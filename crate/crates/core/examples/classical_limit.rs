// As q → 1 the q-integral approaches Raabe's classical value
// ∫₀¹ log Γ(x + t) dx = ½ log 2π + t log t − t.

use qraabe::classical_raabe;
use qraabe::cli::{limit_rows, RunConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let run = RunConfig::default();
    let q = [0.9, 0.99, 0.999];
    for t in [0.0, 1.0] {
        println!("t = {t}, classical {:.15}", classical_raabe(t));
        let rows = limit_rows(&q, t, &run)?;
        for r in &rows {
            println!(
                "  q = {:<6} integral {:.12} gap {:.3e} gap/(1-q) {:.4}",
                r.q,
                r.integral,
                r.gap,
                r.gap / (1.0 - r.q)
            );
        }
        assert!(rows.windows(2).all(|w| w[1].gap.abs() < w[0].gap.abs()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
