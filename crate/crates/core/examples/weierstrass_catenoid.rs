//! Integrate the Weierstrass equations for `g = e^{−t + iβk}` and recover
//! the rotation-discrete catenoid up to a rigid motion.

use std::f64::consts::PI;

use discrete_catenoids::catenoids::gen_mw_ps_rd;
use discrete_catenoids::comparison::rigid_fit;
use discrete_catenoids::invariants::{check_dual, check_isothermic};
use discrete_catenoids::surface::{SurfaceGrid, TGrid, Vec3};
use discrete_catenoids::weierstrass::{
    compatibility_residual, inverse_stereographic, weierstrass_integrate, HolomorphicSpec, IntegrateOptions,
};

fn main() -> discrete_catenoids::error::Result<()> {
    let beta = PI / 6.0;
    let spec = HolomorphicSpec::exponential_rotational(1.0, -1.0, beta)?;
    let grid = SurfaceGrid::new(0..=12, TGrid::spanning(-2.0, 2.0, 1e-3)?)?;

    print!("{}", compatibility_residual(&spec, &grid, 1e-6)?);
    let x = weierstrass_integrate(&spec, &grid, IntegrateOptions::default())?;
    let sphere = inverse_stereographic(&spec, &grid)?;

    let closed = gen_mw_ps_rd(beta, 0..=12, grid.t_grid)?;
    let a: Vec<Vec3> = x.surface.iter_points().copied().collect();
    let b: Vec<Vec3> = closed.surface.surface.iter_points().copied().collect();
    let fit = rigid_fit(&a, &b)?;
    println!("max error after rigid alignment: {:.3e}", fit.max_error);
    println!("translation: {:?}", fit.translation.as_slice());

    let mut report = check_isothermic(&x.surface, &x.iso, 1e-8)?;
    report.merge("", check_dual(&x.surface, &sphere.surface, x.iso.nu(), 1e-8)?);
    print!("{report}");
    Ok(())
}
