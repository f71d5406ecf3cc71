//! The pd,rs Machigashira profile by the Chebyshev recursion and by the
//! closed form `cosh(n·arccosh(1 + Λ²/2))`.

use discrete_catenoids::catenoids::{chebyshev_t, gen_m_pd_rs};

fn main() -> discrete_catenoids::error::Result<()> {
    let m = gen_m_pd_rs(1.0, 0..=6)?;
    for ((n, a), b) in m.recursion.samples().iter().zip(m.closed_form.points()) {
        println!("n = {n}  T_n(1.5) = {:<20} cosh form = {}", a.x, b.x);
    }
    println!("max relative difference: {:.3e}", m.route_difference);
    println!("T_12(cosh 1) - cosh 12 = {:.3e}", chebyshev_t(12, 1f64.cosh()) - 12f64.cosh());
    Ok(())
}
