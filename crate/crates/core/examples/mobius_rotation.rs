//! A Möbius transformation of the Weierstrass datum by an SU(2) element
//! rotates the minimal surface.

use discrete_catenoids::surface::{SurfaceGrid, TGrid};
use discrete_catenoids::weierstrass::{
    mobius_transform, su2_to_so3, weierstrass_integrate, HolomorphicSpec, IntegrateOptions, SU2Element, C64,
};

fn main() -> discrete_catenoids::error::Result<()> {
    let grid = SurfaceGrid::new(0..=3, TGrid::spanning(0.0, 1.0, 1e-3)?)?;
    let (p, q) = (C64::new(0.5, 0.5), C64::new(0.5, -0.5));
    let el = SU2Element::new(p, q)?;
    let a = su2_to_so3(&el);
    println!("rotation:{a}det = {}", a.determinant());

    let spec = HolomorphicSpec::linear();
    let x = weierstrass_integrate(&spec, &grid, IntegrateOptions::default())?.surface;
    let y = weierstrass_integrate(&mobius_transform(&spec, &el, &grid)?, &grid, IntegrateOptions::default())?.surface;
    let gap = x.iter_points().zip(y.iter_points()).map(|(p, q)| (a * p - q).norm()).fold(0.0, f64::max);
    println!("max |A x - x_hat| = {gap:.3e}");
    Ok(())
}
