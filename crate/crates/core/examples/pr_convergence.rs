//! PR profiles approach the pd,rs Machigashira profile as
//! the symmetry order grows, at second order in 1/K.

use discrete_catenoids::catenoids::{gen_m_pd_rs, gen_pr_profile};
use discrete_catenoids::comparison::{profile_sup_distance, richardson_orders};

fn main() -> discrete_catenoids::error::Result<()> {
    let l = 0.5;
    let limit = gen_m_pd_rs(l, -10..=10)?.closed_form;
    let ks = [25, 50, 100, 200, 400];
    let mut d = Vec::new();
    for k in ks {
        let pr = gen_pr_profile(l, k, -10..=10)?;
        d.push(profile_sup_distance(&pr, &limit, None)?);
        println!("K = {k:4}  sup distance = {:.6e}", d.last().unwrap());
    }
    for (w, o) in ks.windows(2).zip(richardson_orders(&d)) {
        println!("order between K = {} and {}: {o:.4}", w[0], w[1]);
    }
    Ok(())
}
