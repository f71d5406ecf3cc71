//! Machigashira profile-smooth, rotation-discrete catenoid: the critical
//! profile of the area of one `2π/K` piece with boundary pinned at `z = ±r`.
//!
//! The critical profile is `x(t) = cosh(c₃t)/cosh(c₃r)` where `c₃` is a
//! positive root of `φ(c₃) = cosh(c₃r) − c₃κ`, `κ = √((1 + cos θ)/2)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::profile::ProfileCurve;
use crate::stencil;
use crate::surface::{TGrid, Vec3};

use super::{dihedral_angle, discrete_rotation, IsothermicSurface};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    /// Tends to the smooth catenoid as `K → ∞`.
    #[default]
    Smallest,
    Largest,
}

impl FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smallest" => Ok(Branch::Smallest),
            "largest" => Ok(Branch::Largest),
            _ => Err(Error::InvalidParameter(format!("branch must be smallest or largest, got {s:?}"))),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Smallest => "smallest",
            Branch::Largest => "largest",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MPsRdParams {
    pub symmetry: u64,
    pub r: f64,
    pub branch: Branch,
}

impl MPsRdParams {
    pub fn new(symmetry: u64, r: f64, branch: Branch) -> Result<Self> {
        dihedral_angle(symmetry)?;
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidParameter(format!("r must be positive, got {r}")));
        }
        Ok(MPsRdParams { symmetry, r, branch })
    }

    fn kappa(&self) -> f64 {
        kappa(self.symmetry)
    }
}

fn kappa(symmetry: u64) -> f64 {
    let c = (std::f64::consts::TAU / symmetry as f64).cos();
    ((1.0 + c) / 2.0).sqrt()
}

/// Both positive roots of `φ`; equal at tangency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C3Roots {
    pub small: f64,
    pub large: f64,
}

impl C3Roots {
    pub fn select(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Smallest => self.small,
            Branch::Largest => self.large,
        }
    }
}

fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let fa_neg = f(a) < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b || b - a <= 1e-13 * 1e-3 * b.max(1.0) {
            break;
        }
        if (f(mid) < 0.0) == fa_neg {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Roots of `φ` by sign-change bracketing on a geometric scan that includes
/// the minimizer `asinh(κ/r)/r`, then bisection.
pub fn solve_c3(params: &MPsRdParams) -> Result<C3Roots> {
    let (r, kappa) = (params.r, params.kappa());
    let phi = |c: f64| (c * r).cosh() - c * kappa;
    let c_min = (kappa / r).asinh() / r;
    let lo = c_min * 1e-9;
    let mut hi = 4.0 * c_min;
    while phi(hi) <= 0.0 {
        hi *= 2.0;
    }
    let steps = 400;
    let ratio = (hi / lo).powf(1.0 / steps as f64);
    let mut nodes: Vec<f64> = (0..=steps).map(|i| lo * ratio.powi(i)).collect();
    nodes.push(c_min);
    nodes.sort_by(|a, b| a.total_cmp(b));
    let mut roots = Vec::new();
    for w in nodes.windows(2) {
        let (fa, fb) = (phi(w[0]), phi(w[1]));
        if fa == 0.0 {
            roots.push(w[0]);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            roots.push(bisect(phi, w[0], w[1]));
        }
    }
    if phi(c_min) == 0.0 {
        roots.push(c_min);
    }
    match (roots.first(), roots.last()) {
        (Some(&small), Some(&large)) => Ok(C3Roots { small, large }),
        _ => Err(Error::NoSolution { symmetry: params.symmetry, r, lo, hi }),
    }
}

/// Supremum of the `r` for which `φ` has a positive root: `κ / sinh u*`
/// where `u* tanh u* = 1`.
pub fn solvability_threshold(symmetry: u64) -> Result<f64> {
    dihedral_angle(symmetry)?;
    let mut u: f64 = 1.2;
    for _ in 0..50 {
        let g = u * u.tanh() - 1.0;
        let dg = u.tanh() + u / u.cosh().powi(2);
        let step = g / dg;
        u -= step;
        if step.abs() < 1e-17 {
            break;
        }
    }
    Ok(kappa(symmetry) / u.sinh())
}

/// The normalized profile `(cosh(√(2/(1 + cos θ)) T), 0, T)`, independent of `r`.
pub fn m_ps_rd_normalized(symmetry: u64, ts: impl IntoIterator<Item = f64>) -> Result<ProfileCurve> {
    let b = 1.0 / kappa_checked(symmetry)?;
    Ok(ProfileCurve::smooth(ts, |t| ((b * t).cosh(), t))?.with_meta("family", "m-ps-rd").with_meta("K", symmetry))
}

fn kappa_checked(symmetry: u64) -> Result<f64> {
    dihedral_angle(symmetry)?;
    Ok(kappa(symmetry))
}

#[derive(Debug, Clone)]
pub struct MPsRd {
    pub c3: f64,
    pub roots: C3Roots,
    /// `(cosh(c₃t)/cosh(c₃r), 0, t)` on `[−r, r]`.
    pub raw: ProfileCurve,
    /// The raw profile scaled by `cosh(c₃r)`.
    pub normalized: ProfileCurve,
    /// The two boundary meridians of one piece, at angles `0` and `θ`.
    pub boundaries: [Vec<(f64, Vec3)>; 2],
    /// The piece between the boundary meridians (`k ∈ {0, 1}`).
    pub surface: IsothermicSurface,
    /// Max of `|x x″ − x′² − 2/(1 + cos θ)|` with stencil derivatives.
    pub euler_lagrange_residual: f64,
}

/// `t_grid` must run from `−r` to `r`.
pub fn gen_m_ps_rd(params: &MPsRdParams, t_grid: TGrid) -> Result<MPsRd> {
    let r = params.r;
    let span_tol = 1e-12 * r.max(1.0);
    if (t_grid.t0() + r).abs() > span_tol || (t_grid.t_max() - r).abs() > span_tol {
        return Err(Error::ProfileSpan(format!("grid is [{}, {}], need [-{r}, {r}]", t_grid.t0(), t_grid.t_max())));
    }
    let roots = solve_c3(params)?;
    let c3 = roots.select(params.branch);
    let theta = dihedral_angle(params.symmetry)?;
    let scale = (c3 * r).cosh();
    let x = move |t: f64| (c3 * t).cosh() / scale;
    let dx = move |t: f64| c3 * (c3 * t).sinh() / scale;
    // the grid endpoints are ±r up to rounding; pin them exactly
    let pinned = |j: usize, t: f64| if j == 0 || j + 1 == t_grid.len() { 1.0 } else { x(t) };
    let samples: Vec<(f64, Vec3)> =
        t_grid.iter().enumerate().map(|(j, t)| (t, Vec3::new(pinned(j, t), 0.0, t))).collect();
    let raw = ProfileCurve::new(crate::profile::ProfileKind::SmoothSampled, samples.clone())?
        .with_meta("family", "m-ps-rd")
        .with_meta("K", params.symmetry)
        .with_meta("r", r)
        .with_meta("c3", c3);
    let normalized = raw.scaled(scale);
    let rotated = samples.iter().map(|(t, p)| (*t, Vec3::new(p.x * theta.cos(), p.x * theta.sin(), p.z))).collect();
    let mut surface = discrete_rotation(move |t| (x(t), t), move |t| (dx(t), 1.0), theta, 0..=1, t_grid)?;
    surface.surface.meta.insert("family".into(), "m-ps-rd".into());

    let xs: Vec<f64> = samples.iter().map(|s| s.1.x).collect();
    let h = t_grid.dt();
    let target = 1.0 / (params.kappa() * params.kappa());
    let mut el: f64 = 0.0;
    for j in 0..xs.len() {
        let (d1, d2) = (stencil::d1(&xs, h, j)?, stencil::d2(&xs, h, j)?);
        el = el.max((xs[j] * d2 - d1 * d1 - target).abs());
    }
    Ok(MPsRd { c3, roots, raw, normalized, boundaries: [samples, rotated], surface, euler_lagrange_residual: el })
}
