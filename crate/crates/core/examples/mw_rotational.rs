//! The rotation-discrete Müller–Wallner catenoid and its dual on the unit
//! sphere. The profile does not depend on the rotation angle.

use std::f64::consts::PI;

use discrete_catenoids::catenoids::gen_mw_ps_rd;
use discrete_catenoids::comparison::profile_sup_distance;
use discrete_catenoids::invariants::{check_dual, check_minimal};
use discrete_catenoids::surface::TGrid;

fn main() -> discrete_catenoids::error::Result<()> {
    let grid = TGrid::spanning(-2.0, 2.0, 1e-2)?;
    let a = gen_mw_ps_rd(PI / 3.0, 0..=5, grid)?;
    let b = gen_mw_ps_rd(PI / 7.0, 0..=13, grid)?;
    println!("profile distance between alpha = pi/3 and pi/7: {}", profile_sup_distance(&a.profile, &b.profile, None)?);
    println!("f''f - f'^2 - 1 on the grid: {:.3e}", a.ode_residual);

    let mut report = check_dual(&a.surface.surface, &a.dual, a.surface.iso.nu(), 1e-10)?;
    let m = check_minimal(&a.dual, 1e-10)?;
    report.merge("", m.report);
    print!("{report}");
    println!("sphere centre {:?}, radius {}", m.fit.center.as_slice(), m.fit.radius);
    Ok(())
}
