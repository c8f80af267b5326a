// The two theta-function integrals with logarithmic endpoint singularities.

use qraabe::{
    integral_log_theta1, integral_log_theta4, rhs_theta, IntegralSettings, QBase, SeriesConfig,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SeriesConfig::default();
    let settings = IntegralSettings::new(1e-10);
    for q in [0.2, 0.5, 0.8] {
        let base = QBase::new(q)?;
        let t4 = integral_log_theta4(base, &settings)?;
        let t1 = integral_log_theta1(base, &settings)?;
        let closed = rhs_theta(q, &cfg)?;
        println!(
            "q = {q}: theta4 {:.13} theta1 {:.13} closed {:.13} ({} + {} evals)",
            t4.value, t1.value, closed, t4.evaluations, t1.evaluations
        );
        assert!((t4.value - closed).abs() < 1e-8 && (t1.value - closed).abs() < 1e-8);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
