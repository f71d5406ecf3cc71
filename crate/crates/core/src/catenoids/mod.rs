//! Generators for the seven catenoid families.
//!
//! Every profile is normalized to neck value 1 at height 0 in the
//! `x₁x₃`-plane, with the surface rotating about the `x₃`-axis.

mod bp;
mod mw;
mod profiles;
mod smooth;
mod variational;

pub use bp::{bp_cross_ratios, bp_g, bp_propagate, gen_bp, BpCatenoid, BpPropagation};
pub use mw::{gen_mw_pd_rs, gen_mw_ps_rd, product_identity_residual, MWPdRs, MWPdRsParams, MWPsRd};
pub use profiles::{chebyshev_t, gen_m_pd_rs, gen_m_pd_rs_surface, gen_pr_profile, pr_net, MPdRsProfile};
pub use smooth::{gen_smooth, SmoothCatenoid};
pub use variational::{
    gen_m_ps_rd, m_ps_rd_normalized, solvability_threshold, solve_c3, Branch, C3Roots, MPsRd, MPsRdParams,
};

use std::f64::consts::TAU;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::invariants::IsothermicData;
use crate::surface::{build_sampled, Grid, SampledSurface, SurfaceGrid, TGrid, Vec3};

/// A semi-discrete surface with its isothermic factorization.
#[derive(Debug, Clone)]
pub struct IsothermicSurface {
    pub surface: SampledSurface,
    pub iso: IsothermicData,
}

/// `θ = 2π/K`, rejecting `K < 3`.
pub fn dihedral_angle(symmetry: u64) -> Result<f64> {
    if symmetry < 3 {
        return Err(Error::InvalidParameter(format!("rotational symmetry K must be at least 3, got {symmetry}")));
    }
    Ok(TAU / symmetry as f64)
}

/// `x(k, t) = (ρ(t) cos θk, ρ(t) sin θk, z(t))`: a smooth profile rotated in
/// discrete steps. `ν = ρ`, `σ = 4 sin²(θ/2)`, `τ = (ρ'² + z'²)/ρ²`.
pub(crate) fn discrete_rotation(
    profile: impl Fn(f64) -> (f64, f64),
    derivative: impl Fn(f64) -> (f64, f64),
    theta: f64,
    k_range: RangeInclusive<i64>,
    t_grid: TGrid,
) -> Result<IsothermicSurface> {
    let point = |k: i64, t: f64| {
        let (rho, z) = profile(t);
        let a = theta * k as f64;
        Vec3::new(rho * a.cos(), rho * a.sin(), z)
    };
    let d_t = |k: i64, t: f64| {
        let (drho, dz) = derivative(t);
        let a = theta * k as f64;
        Vec3::new(drho * a.cos(), drho * a.sin(), dz)
    };
    let surface = build_sampled(point, k_range.clone(), t_grid, Some(&d_t))?;
    let grid = SurfaceGrid::new(k_range, t_grid)?;
    let nu = Grid::from_fn(grid.rows(), grid.cols(), |_, c| profile(t_grid.t(c)).0);
    let sigma = vec![4.0 * (theta / 2.0).sin().powi(2); grid.rows()];
    let tau = t_grid
        .iter()
        .map(|t| {
            let ((rho, _), (drho, dz)) = (profile(t), derivative(t));
            (drho * drho + dz * dz) / (rho * rho)
        })
        .collect();
    Ok(IsothermicSurface { surface, iso: IsothermicData::new(nu, sigma, tau)? })
}

/// `x(k, t) = (ρ_k cos t, ρ_k sin t, z_k)`: a discrete profile rotated
/// smoothly. `ν = ρ_k`, `τ = 1`, `σ_k = ((ρ_{k+1} − ρ_k)² + (z_{k+1} − z_k)²)/(ρ_k ρ_{k+1})`.
pub(crate) fn smooth_rotation(profile: &[(i64, f64, f64)], t_grid: TGrid) -> Result<IsothermicSurface> {
    let (k0, k1) = match (profile.first(), profile.last()) {
        (Some(a), Some(b)) => (a.0, b.0),
        _ => return Err(Error::InvalidParameter("empty profile".into())),
    };
    let at = |k: i64| profile[(k - k0) as usize];
    let point = |k: i64, t: f64| {
        let (_, rho, z) = at(k);
        Vec3::new(rho * t.cos(), rho * t.sin(), z)
    };
    let d_t = |k: i64, t: f64| {
        let rho = at(k).1;
        Vec3::new(-rho * t.sin(), rho * t.cos(), 0.0)
    };
    let surface = build_sampled(point, k0..=k1, t_grid, Some(&d_t))?;
    let nu = Grid::from_fn(profile.len(), t_grid.len(), |r, _| profile[r].1);
    let sigma = profile
        .windows(2)
        .map(|w| ((w[1].1 - w[0].1).powi(2) + (w[1].2 - w[0].2).powi(2)) / (w[0].1 * w[1].1))
        .collect();
    Ok(IsothermicSurface { surface, iso: IsothermicData::new(nu, sigma, vec![1.0; t_grid.len()])? })
}
