//! Write a sampled surface to the CSV interchange format, read it back and
//! run the invariant checks, including one that is expected to fail.

use std::f64::consts::PI;

use discrete_catenoids::catenoids::gen_mw_ps_rd;
use discrete_catenoids::invariants::{check_conjugate, check_isothermic, check_minimal};
use discrete_catenoids::io::{parse_surface_csv, write_surface_csv};
use discrete_catenoids::surface::TGrid;

fn main() -> discrete_catenoids::error::Result<()> {
    let mw = gen_mw_ps_rd(PI / 4.0, 0..=7, TGrid::spanning(-1.0, 1.0, 0.01)?)?;
    let mut csv = Vec::new();
    write_surface_csv(&mw.surface.surface, Some(&mw.surface.iso), &mut csv).expect("in-memory write");
    println!("{} bytes of surface CSV", csv.len());

    let file = parse_surface_csv(std::str::from_utf8(&csv).expect("utf-8"))?;
    let iso = file.iso.expect("iso columns were written");
    let mut report = check_conjugate(&file.surface, 1e-8)?;
    report.merge("", check_isothermic(&file.surface, &iso, 1e-8)?);
    print!("{report}");

    // a catenoid is not itself inscribed in a sphere
    let m = check_minimal(&file.surface, 1e-8)?;
    println!("surface as its own dual: overall {}", if m.report.overall() { "PASS" } else { "FAIL" });

    let doubled = iso.with_sigma(iso.sigma().iter().map(|s| 2.0 * s).collect())?;
    let bad = check_isothermic(&file.surface, &doubled, 1e-8)?;
    println!("with doubled sigma: isothermic.delta residual {:.3}", bad.get("isothermic.delta").unwrap().residual);
    Ok(())
}
