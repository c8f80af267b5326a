// ∫₀¹ log Γ_q(x + t) dx by quadrature against its closed form, for both
// 0 < q < 1 and q > 1.

use qraabe::{verify, TheoremId, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = VerifyOptions::default();
    let cases = [
        (TheoremId::QRaabeSubGeneral, 0.5, 0.0),
        (TheoremId::QRaabeSubGeneral, 0.9, 1.5),
        (TheoremId::QRaabeSubSpecial, 0.2, 0.0),
        (TheoremId::QRaabeSuperGeneral, 2.0, 0.5),
        (TheoremId::QRaabeSuperSpecial, 5.0, 0.0),
        (TheoremId::SuperAltFormAgreement, 3.0, 1.0),
        (TheoremId::KeyIdentity, 1.5, 2.7),
    ];
    for (theorem, q, t) in cases {
        let r = verify(theorem, q, t, theorem.default_tol(), &opts)?;
        println!(
            "{:<22} q = {q:<4} t = {t:<4} lhs {:.14} rhs {:.14} residual {:.1e} {}",
            theorem.name(),
            r.lhs,
            r.rhs,
            r.residual,
            if r.pass { "PASS" } else { "FAIL" }
        );
        assert!(r.pass);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
