//! Run the six-item comparison of the catenoid families and print the
//! report.

use discrete_catenoids::comparison::{comparison_report, ComparisonConfig};

fn main() -> discrete_catenoids::error::Result<()> {
    let report = comparison_report(&ComparisonConfig::default())?;
    for check in report.checks().iter().filter(|c| !c.name.starts_with("item3.")) {
        println!("{:<28} {:>12.3e}  {}", check.name, check.residual, if check.pass { "PASS" } else { "FAIL" });
    }
    println!("separation margin (smallest): {:.6e}", report.get_value("item3.min_margin").unwrap_or(f64::NAN));
    println!("overall: {}", if report.overall() { "PASS" } else { "FAIL" });
    Ok(())
}
