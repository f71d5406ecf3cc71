//! Closed-form discrete profiles: PR and Machigashira (pd,rs).

use std::ops::RangeInclusive;

use crate::error::Result;
use crate::net::QuadNet;
use crate::profile::ProfileCurve;
use crate::surface::{TGrid, Vec3};

use super::{dihedral_angle, smooth_rotation, IsothermicSurface};

/// PR vertex `n`: `(cosh(n·arccosh(1 + ℓ²/(1 + cos θ))), 0, nℓ)` with `θ = 2π/K`.
pub fn gen_pr_profile(l: f64, symmetry: u64, n_range: RangeInclusive<i64>) -> Result<ProfileCurve> {
    let b = pr_rate(l, symmetry)?;
    ProfileCurve::discrete(n_range, |n| ((b * n.unsigned_abs() as f64).cosh(), n as f64 * l))
        .map(|p| p.with_meta("family", "pr").with_meta("l", l).with_meta("K", symmetry))
}

fn pr_rate(l: f64, symmetry: u64) -> Result<f64> {
    positive("l", l)?;
    let theta = dihedral_angle(symmetry)?;
    Ok((1.0 + l * l / (1.0 + theta.cos())).acosh())
}

/// The PR profile rotated by multiples of `θ`, as a quad net.
pub fn pr_net(l: f64, symmetry: u64, n_range: RangeInclusive<i64>, m_range: RangeInclusive<i64>) -> Result<QuadNet> {
    let b = pr_rate(l, symmetry)?;
    let theta = dihedral_angle(symmetry)?;
    QuadNet::from_fn(n_range, m_range, |n, m| {
        let rho = (b * n.unsigned_abs() as f64).cosh();
        let a = theta * m as f64;
        Vec3::new(rho * a.cos(), rho * a.sin(), n as f64 * l)
    })
}

/// `T_n(z)` by the three-term recursion; `T_{−n} = T_n`.
pub fn chebyshev_t(n: i64, z: f64) -> f64 {
    let n = n.unsigned_abs();
    let (mut prev, mut cur) = (1.0, z);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        (prev, cur) = (cur, 2.0 * z * cur - prev);
    }
    cur
}

/// Machigashira pd,rs profile by both evaluation routes.
#[derive(Debug, Clone)]
pub struct MPdRsProfile {
    /// `(T_n(1 + Λ²/2), 0, nΛ)`.
    pub recursion: ProfileCurve,
    /// `(cosh(n·arccosh(1 + Λ²/2)), 0, nΛ)`.
    pub closed_form: ProfileCurve,
    /// Max relative difference between the two routes.
    pub route_difference: f64,
}

pub fn gen_m_pd_rs(lambda: f64, n_range: RangeInclusive<i64>) -> Result<MPdRsProfile> {
    positive("Lambda", lambda)?;
    let z = 1.0 + lambda * lambda / 2.0;
    let b = z.acosh();
    let recursion = ProfileCurve::discrete(n_range.clone(), |n| (chebyshev_t(n, z), n as f64 * lambda))?
        .with_meta("family", "m-pd-rs")
        .with_meta("Lambda", lambda);
    let closed_form = ProfileCurve::discrete(n_range, |n| ((b * n.unsigned_abs() as f64).cosh(), n as f64 * lambda))?
        .with_meta("family", "m-pd-rs")
        .with_meta("Lambda", lambda);
    let route_difference = recursion
        .points()
        .zip(closed_form.points())
        .map(|(a, b)| (a.x - b.x).abs() / b.x)
        .fold(0.0, f64::max);
    Ok(MPdRsProfile { recursion, closed_form, route_difference })
}

/// The pd,rs Machigashira profile rotated smoothly about the axis.
pub fn gen_m_pd_rs_surface(lambda: f64, n_range: RangeInclusive<i64>, t_grid: TGrid) -> Result<IsothermicSurface> {
    let rows: Vec<(i64, f64, f64)> = gen_m_pd_rs(lambda, n_range)?
        .recursion
        .samples()
        .iter()
        .map(|(n, p)| (*n as i64, p.x, p.z))
        .collect();
    let mut s = smooth_rotation(&rows, t_grid)?;
    s.surface.meta.insert("family".into(), "m-pd-rs".into());
    Ok(s)
}

pub(crate) fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(crate::error::Error::InvalidParameter(format!("{name} must be positive, got {v}")))
    }
}
