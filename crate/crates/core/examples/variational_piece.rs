//! Solve for the critical profile of one `2π/K` piece and confirm that the
//! area has zero first variation there.

use std::f64::consts::PI;

use discrete_catenoids::catenoids::{gen_m_ps_rd, solvability_threshold, solve_c3, Branch, MPsRdParams};
use discrete_catenoids::comparison::{area_functional, first_variation};
use discrete_catenoids::profile::ProfileCurve;
use discrete_catenoids::surface::TGrid;

fn main() -> discrete_catenoids::error::Result<()> {
    let (k, r) = (5, 0.2);
    let params = MPsRdParams::new(k, r, Branch::Smallest)?;
    let roots = solve_c3(&params)?;
    println!("c3 roots for K = {k}, r = {r}: {} and {}", roots.small, roots.large);
    println!("largest solvable r for K = {k}: {}", solvability_threshold(k)?);

    let grid = TGrid::spanning(-r, r, 1e-3)?;
    let piece = gen_m_ps_rd(&params, grid)?;
    println!("Euler-Lagrange residual: {:.3e}", piece.euler_lagrange_residual);
    println!("area of the piece: {}", area_functional(&piece.raw, r, k)?);

    let bump = |t: f64| (PI * t / (2.0 * r)).cos();
    println!("dA at the solution: {:.3e}", first_variation(&piece.raw, r, k, &bump, 1e-5)?);
    let flat = ProfileCurve::smooth(grid.iter(), |t| (1.0, t))?;
    println!("dA at x = 1:        {:.3e}", first_variation(&flat, r, k, &bump, 1e-5)?);

    match solve_c3(&MPsRdParams::new(3, 2.0, Branch::Smallest)?) {
        Err(e) => println!("K = 3, r = 2: {e}"),
        Ok(roots) => println!("K = 3, r = 2 unexpectedly solvable: {roots:?}"),
    }
    Ok(())
}
