// A parallel grid sweep written out as CSV and JSON and read back.

use qraabe::cli::{
    parse_grid, reports_from_csv, reports_table, reports_to_csv, reports_to_json, RunConfig,
};
use qraabe::{sweep, TheoremId, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = parse_grid("1.5,2,5,10")?;
    let t = parse_grid("0.1:3:4")?;
    let theorem = TheoremId::QRaabeSuperGeneral;
    let outcome = sweep(
        theorem,
        &q,
        &t,
        theorem.default_tol(),
        &VerifyOptions::default(),
    )?;
    print!("{}", reports_table(&outcome.reports));
    println!("{}/{} passed", outcome.passed(), outcome.reports.len());

    let csv = reports_to_csv(&outcome.reports)?;
    let back = reports_from_csv(&csv)?;
    assert_eq!(back.len(), outcome.reports.len());
    assert!(back
        .iter()
        .zip(&outcome.reports)
        .all(|(a, b)| a.lhs.to_bits() == b.lhs.to_bits()));
    println!(
        "csv: {} bytes, json: {} bytes",
        csv.len(),
        reports_to_json(&outcome.reports, &RunConfig::default()).len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
