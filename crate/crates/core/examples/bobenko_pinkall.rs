//! Build the Bobenko–Pinkall catenoid edge by edge from its datum
//! `g = −e^{c₁n + ic₂m}` and compare with the closed form.

use std::f64::consts::TAU;

use discrete_catenoids::catenoids::{bp_cross_ratios, bp_propagate, gen_bp};
use discrete_catenoids::invariants::check_net_isothermic;

fn main() -> discrete_catenoids::error::Result<()> {
    let (c1, c2) = (0.8f64.asinh(), TAU / 7.0);
    let prop = bp_propagate(c1, c2, -5..=5, 0..=6)?;
    let closed = gen_bp(c1, c2, -5..=5, 0..=6)?;
    println!("closure residual: {:.3e}", prop.closure_residual);
    println!("distance to closed form: {:.3e}", prop.net.max_vertex_distance(&closed.net)?);

    let cr = bp_cross_ratios(c1, c2, -5..=5, 0..=6)?;
    println!("cross-ratio of g on quad (0,0): {:.15}", cr[0].1.re);
    println!("expected: {:.15}", -(c1 / 2.0).sinh().powi(2) / (c2 / 2.0).sin().powi(2));

    // the isothermic check includes the planar and circular ones
    print!("{}", check_net_isothermic(&closed.net, 1e-10)?);
    Ok(())
}
