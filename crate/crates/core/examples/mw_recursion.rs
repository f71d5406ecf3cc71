//! The profile-discrete Müller–Wallner catenoid: run the difference
//! equations, compare with `cosh(k·arcsinh h)`, and check that the dual lies
//! on a sphere.

use std::f64::consts::TAU;

use discrete_catenoids::catenoids::{gen_mw_pd_rs, product_identity_residual, MWPdRsParams};
use discrete_catenoids::invariants::{check_dual, check_isothermic, check_minimal};
use discrete_catenoids::surface::TGrid;

fn main() -> discrete_catenoids::error::Result<()> {
    let h = 0.5;
    let params = MWPdRsParams::new(1.0, 0.0, h, -6..=6)?;
    let mw = gen_mw_pd_rs(&params, TGrid::spanning(0.0, TAU, 0.01)?)?;
    for k in 0..=6 {
        let f = mw.f_at(k).unwrap();
        println!("k = {k}  f = {f:.15}  c = {:+.15}  cosh form = {:.15}", mw.c_at(k).unwrap(), (k as f64 * h.asinh()).cosh());
    }
    println!("f(k+2)f(k) - f(k+1)^2 - h^2 (relative): {:.3e}", product_identity_residual(&mw.f, h));

    let mut report = check_isothermic(&mw.surface.surface, mw.iso(), 1e-8)?;
    report.merge("", check_dual(&mw.surface.surface, &mw.dual, mw.iso().nu(), 1e-8)?);
    let sphere = check_minimal(&mw.dual, 1e-10)?;
    report.merge("", sphere.report);
    print!("{report}");
    Ok(())
}
