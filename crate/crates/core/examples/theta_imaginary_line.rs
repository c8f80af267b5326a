// θ₄ and θ₁ at purely imaginary argument ix: the series, the triple
// product, and the logarithm used as an integrand.

use qraabe::{
    log_theta1_imag, theta1_series_imag_modulus, theta4_product_imag, theta4_series_imag, QBase,
    SeriesConfig, ThetaImagPoint,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SeriesConfig::default();
    let q = 0.5f64;

    let p = ThetaImagPoint::new(0.1, QBase::new(q)?)?;
    let (lo, hi) = p.theta4_interval();
    println!("theta4 is positive on ({lo:.6}, {hi:.6})");
    for x in [-0.3, 0.0, 0.2, 0.34] {
        let s = theta4_series_imag(x, q, &cfg)?.value;
        let pr = theta4_product_imag(x, q, &cfg)?.value;
        println!("theta4(i{x}): series {s:.15}, product {pr:.15}");
    }

    // The θ₁ series and product differ by the factor q^{1/4} e^{-x}.
    let (lo, hi) = p.theta1_interval();
    println!("theta1 product is positive on ({lo:.6}, {hi:.6})");
    for x in [-0.1, -0.3, -0.6] {
        let series = theta1_series_imag_modulus(x, q, &cfg)?.value;
        let product = log_theta1_imag(x, q, &cfg)?.value.exp();
        println!(
            "x = {x}: |series| / product = {:.15}, q^(1/4) e^(-x) = {:.15}",
            series / product,
            q.powf(0.25) * (-x).exp()
        );
    }

    // Sub-unit q only.
    assert!(ThetaImagPoint::new(0.1, QBase::new(2.0)?).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
