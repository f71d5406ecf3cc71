//! Müller–Wallner semi-discrete catenoids.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::invariants::IsothermicData;
use crate::profile::ProfileCurve;
use crate::surface::{build_sampled, SampledSurface, TGrid, Vec3};

use super::{discrete_rotation, smooth_rotation, IsothermicSurface};

/// Initial data for the profile-discrete, rotation-smooth recursion.
#[derive(Debug, Clone, PartialEq)]
pub struct MWPdRsParams {
    pub f0: f64,
    pub c0: f64,
    pub h: f64,
    pub k_range: RangeInclusive<i64>,
}

impl MWPdRsParams {
    pub fn new(f0: f64, c0: f64, h: f64, k_range: RangeInclusive<i64>) -> Result<Self> {
        if !(f0 > 0.0 && h > 0.0 && f0.is_finite() && h.is_finite() && c0.is_finite()) {
            return Err(Error::InvalidParameter(format!("need f0 > 0, h > 0 and finite c0 (got {f0}, {h}, {c0})")));
        }
        if k_range.is_empty() {
            return Err(Error::InvalidParameter(format!("empty k range {k_range:?}")));
        }
        Ok(MWPdRsParams { f0, c0, h, k_range })
    }
}

#[derive(Debug, Clone)]
pub struct MWPdRs {
    /// `f(k)` for `k` in the (0-extended) range, starting at `k_start`.
    pub f: Vec<f64>,
    pub c: Vec<f64>,
    pub k_start: i64,
    /// `(f(k), 0, hk)`.
    pub profile: ProfileCurve,
    /// `(f(k) cos t, f(k) sin t, hk)`.
    pub surface: IsothermicSurface,
    /// `(−cos t/f(k), −sin t/f(k), c(k))`.
    pub dual: SampledSurface,
}

impl MWPdRs {
    pub fn f_at(&self, k: i64) -> Option<f64> {
        usize::try_from(k - self.k_start).ok().and_then(|i| self.f.get(i)).copied()
    }
    pub fn c_at(&self, k: i64) -> Option<f64> {
        usize::try_from(k - self.k_start).ok().and_then(|i| self.c.get(i)).copied()
    }
    pub fn iso(&self) -> &IsothermicData {
        &self.surface.iso
    }
}

/// Run the recursion
/// `f₁ = hcf + √((hcf)² + f² + h²)`, `c₁ = c + h/(f f₁)` forward from
/// `(f0, c0)` at `k = 0`, and its inverse backward.
fn recursion(p: &MWPdRsParams) -> (i64, Vec<f64>, Vec<f64>) {
    let (k0, k1) = ((*p.k_range.start()).min(0), (*p.k_range.end()).max(0));
    let h = p.h;
    let mut fwd = vec![(p.f0, p.c0)];
    for _ in 0..k1 {
        let (f, c) = *fwd.last().unwrap();
        let hcf = h * c * f;
        let f1 = hcf + (hcf * hcf + f * f + h * h).sqrt();
        fwd.push((f1, c + h / (f * f1)));
    }
    let mut back = Vec::new();
    let (mut f1, mut c1) = (p.f0, p.c0);
    for _ in 0..-k0 {
        let hcf = h * c1 * f1;
        let f = -hcf + (hcf * hcf + f1 * f1 + h * h).sqrt();
        let c = c1 - h / (f * f1);
        back.push((f, c));
        (f1, c1) = (f, c);
    }
    back.reverse();
    back.extend(fwd);
    let (f, c) = back.into_iter().unzip();
    (k0, f, c)
}

/// Max of `|f(k+2)f(k) − f(k+1)² − h²| / (f(k+1)² + h²)`.
pub fn product_identity_residual(f: &[f64], h: f64) -> f64 {
    f.windows(3)
        .map(|w| ((w[2] * w[0] - w[1] * w[1] - h * h) / (w[1] * w[1] + h * h)).abs())
        .fold(0.0, f64::max)
}

pub fn gen_mw_pd_rs(params: &MWPdRsParams, t_grid: TGrid) -> Result<MWPdRs> {
    let (k_start, f, c) = recursion(params);
    let h = params.h;
    let lo = (params.k_range.start() - k_start) as usize;
    let hi = (params.k_range.end() - k_start) as usize;
    let rows: Vec<(i64, f64, f64)> = (lo..=hi).map(|i| (k_start + i as i64, f[i], h * (k_start + i as i64) as f64)).collect();
    let profile = ProfileCurve::new(
        crate::profile::ProfileKind::Discrete,
        rows.iter().map(|&(k, x, z)| (k as f64, Vec3::new(x, 0.0, z))).collect(),
    )?
    .with_meta("family", "mw-pd-rs")
    .with_meta("h", h);
    let mut surface = smooth_rotation(&rows, t_grid)?;
    surface.surface.meta.insert("family".into(), "mw-pd-rs".into());
    let at = |k: i64| ((f[(k - k_start) as usize]), c[(k - k_start) as usize]);
    let dual = build_sampled(
        |k, t| {
            let (fk, ck) = at(k);
            Vec3::new(-t.cos() / fk, -t.sin() / fk, ck)
        },
        params.k_range.clone(),
        t_grid,
        Some(&|k, t| {
            let fk = at(k).0;
            Vec3::new(t.sin() / fk, -t.cos() / fk, 0.0)
        }),
    )?
    .with_meta("family", "mw-pd-rs-dual");
    Ok(MWPdRs { f, c, k_start, profile, surface, dual })
}

#[derive(Debug, Clone)]
pub struct MWPsRd {
    /// `(cosh t, 0, t)`.
    pub profile: ProfileCurve,
    /// `(cosh t cos αk, cosh t sin αk, t)`.
    pub surface: IsothermicSurface,
    /// `(cos αk/cosh t, sin αk/cosh t, −tanh t)`.
    pub dual: SampledSurface,
    /// Max of `|f″f − f′² − 1|` for `f = cosh` with stencil derivatives.
    pub ode_residual: f64,
}

pub fn gen_mw_ps_rd(alpha: f64, k_range: RangeInclusive<i64>, t_grid: TGrid) -> Result<MWPsRd> {
    if !(alpha > 0.0 && alpha < std::f64::consts::PI) {
        return Err(Error::InvalidParameter(format!("alpha must lie in (0, pi), got {alpha}")));
    }
    let profile = ProfileCurve::smooth(t_grid.iter(), |t| (t.cosh(), t))?.with_meta("family", "mw-ps-rd");
    let mut surface = discrete_rotation(|t| (t.cosh(), t), |t| (t.sinh(), 1.0), alpha, k_range.clone(), t_grid)?;
    surface.surface.meta.insert("family".into(), "mw-ps-rd".into());
    let dual = build_sampled(
        |k, t| {
            let a = alpha * k as f64;
            Vec3::new(a.cos() / t.cosh(), a.sin() / t.cosh(), -t.tanh())
        },
        k_range,
        t_grid,
        Some(&|k, t| {
            let a = alpha * k as f64;
            let s = t.sinh() / t.cosh().powi(2);
            Vec3::new(-a.cos() * s, -a.sin() * s, -1.0 / t.cosh().powi(2))
        }),
    )?
    .with_meta("family", "mw-ps-rd-dual");
    let f: Vec<f64> = t_grid.iter().map(f64::cosh).collect();
    let h = t_grid.dt();
    let mut ode_residual: f64 = 0.0;
    for j in 0..f.len() {
        let (d1, d2) = (crate::stencil::d1(&f, h, j)?, crate::stencil::d2(&f, h, j)?);
        ode_residual = ode_residual.max((d2 * f[j] - d1 * d1 - 1.0).abs());
    }
    Ok(MWPsRd { profile, surface, dual, ode_residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{check_dual, check_isothermic, check_minimal};

    fn grid() -> TGrid {
        TGrid::spanning(0.0, std::f64::consts::TAU, 0.01).unwrap()
    }

    #[test]
    fn first_steps_by_hand() {
        let p = MWPdRsParams::new(1.0, 0.0, 1.0, 0..=2).unwrap();
        let mw = gen_mw_pd_rs(&p, grid()).unwrap();
        assert!((mw.f_at(1).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert!((mw.c_at(1).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((mw.f_at(2).unwrap() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn neck_symmetry_and_product_identity() {
        for h in [0.3, 1.0, 2.0] {
            let p = MWPdRsParams::new(1.0, 0.0, h, -6..=6).unwrap();
            let mw = gen_mw_pd_rs(&p, grid()).unwrap();
            for k in 1..=6 {
                let (a, b) = (mw.f_at(k).unwrap(), mw.f_at(-k).unwrap());
                assert!((a - b).abs() <= 1e-12 * a);
            }
            assert!(product_identity_residual(&mw.f, h) < 1e-12);
        }
        let p = MWPdRsParams::new(1.3, 0.4, 0.7, -4..=6).unwrap();
        assert!(product_identity_residual(&gen_mw_pd_rs(&p, grid()).unwrap().f, 0.7) < 1e-12);
    }

    #[test]
    fn pd_rs_dual_is_spherical_and_dual() {
        let p = MWPdRsParams::new(1.0, 0.0, 0.5, -4..=4).unwrap();
        let mw = gen_mw_pd_rs(&p, grid()).unwrap();
        let m = check_minimal(&mw.dual, 1e-10).unwrap();
        assert!(m.report.overall(), "{}", m.report);
        let d = check_dual(&mw.surface.surface, &mw.dual, mw.iso().nu(), 1e-12).unwrap();
        assert!(d.overall(), "{d}");
        let iso = check_isothermic(&mw.surface.surface, mw.iso(), 1e-8).unwrap();
        assert!(iso.overall(), "{iso}");
    }

    #[test]
    fn ps_rd_dual_and_ode() {
        let t = TGrid::spanning(-2.0, 2.0, 0.01).unwrap();
        let mw = gen_mw_ps_rd(std::f64::consts::PI / 3.0, 0..=6, t).unwrap();
        assert_eq!(mw.dual.point(0, 200).unwrap(), Vec3::new(1.0, 0.0, 0.0));
        let d = check_dual(&mw.surface.surface, &mw.dual, mw.surface.iso.nu(), 1e-12).unwrap();
        assert!(d.overall(), "{d}");
        assert!(mw.ode_residual < 1e-6, "{}", mw.ode_residual);
        let m = check_minimal(&mw.dual, 1e-10).unwrap();
        assert!(m.report.overall());
    }
}
