//! Weierstrass representation for semi-discrete minimal surfaces.
//!
//! A semi-discrete holomorphic function `g(k, t)` together with its
//! isothermic factorization `(ν, σ, τ)` determines a minimal net `x` through
//!
//! ```text
//! ∂x = -(τ/2) Re((1 - g²)/g', i(1 + g²)/g', 2g/g')
//! Δx =  (σ/2) Re((1 - g g₁)/Δg, i(1 + g g₁)/Δg, (g + g₁)/Δg)
//! ```
//!
//! and the sphere net `x*` (inverse stereographic image of `g`) is its dual.
//! Points of `ℂ × ℝ` are identified with `ℝ³` by taking the complex part as
//! the first two coordinates.

use nalgebra::Matrix3;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::invariants::IsothermicData;
use crate::report::CheckReport;
use crate::stencil;
use crate::surface::{Grid, SampledSurface, SurfaceGrid, Vec3};

pub type C64 = Complex64;

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// `g`, `∂g` and `Δg = g(k+1, t) − g(k, t)` at one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolomorphicValue {
    pub g: C64,
    pub g_prime: C64,
    pub delta_g: C64,
}

/// Holomorphic data sampled on a grid, with caller-supplied derivatives and
/// isothermic factorization.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledHolomorphic {
    grid: SurfaceGrid,
    g: Grid<C64>,
    g_prime: Grid<C64>,
    iso: IsothermicData,
}

impl SampledHolomorphic {
    pub fn grid(&self) -> &SurfaceGrid {
        &self.grid
    }
    pub fn iso(&self) -> &IsothermicData {
        &self.iso
    }
    pub fn g(&self) -> &Grid<C64> {
        &self.g
    }
    pub fn g_prime(&self) -> &Grid<C64> {
        &self.g_prime
    }
}

/// A semi-discrete holomorphic function.
#[derive(Debug, Clone, PartialEq)]
pub enum HolomorphicSpec {
    /// `g(k, t) = k + i t`; `ν = τ = σ = 1`.
    Linear,
    /// `g(k, t) = c e^{αk + iβt}`; `ν = |c| e^{αk}`, `τ = β²`, `σ = 4 sinh²(α/2)`.
    Exponential { c: f64, alpha: f64, beta: f64 },
    /// `g(k, t) = c e^{αt + iβk}`; `ν = |c| e^{αt}`, `τ = α²`, `σ = 4 sin²(β/2)`.
    ExponentialRotational { c: f64, alpha: f64, beta: f64 },
    Sampled(SampledHolomorphic),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HolomorphicKind {
    Linear,
    Exponential,
    ExponentialRotational,
    Sampled,
}

impl HolomorphicSpec {
    pub fn linear() -> Self {
        HolomorphicSpec::Linear
    }

    pub fn exponential(c: f64, alpha: f64, beta: f64) -> Result<Self> {
        Self::nonzero(c, alpha, beta)?;
        let spec = HolomorphicSpec::Exponential { c, alpha, beta };
        spec.probe_identities()?;
        Ok(spec)
    }

    pub fn exponential_rotational(c: f64, alpha: f64, beta: f64) -> Result<Self> {
        Self::nonzero(c, alpha, beta)?;
        let spec = HolomorphicSpec::ExponentialRotational { c, alpha, beta };
        spec.probe_identities()?;
        Ok(spec)
    }

    /// Sampled data. `g` and `g_prime` have one row per `k` of `grid`;
    /// `Δg` is available on all rows but the last.
    pub fn sampled(grid: SurfaceGrid, g: Grid<C64>, g_prime: Grid<C64>, iso: IsothermicData) -> Result<Self> {
        let dims = (grid.rows(), grid.cols());
        if g.dims() != dims || g_prime.dims() != dims || iso.nu().dims() != dims {
            return Err(Error::GridMismatch("sampled holomorphic data does not match its grid".into()));
        }
        Ok(HolomorphicSpec::Sampled(SampledHolomorphic { grid, g, g_prime, iso }))
    }

    fn nonzero(c: f64, alpha: f64, beta: f64) -> Result<()> {
        if c == 0.0 || alpha == 0.0 || beta == 0.0 || ![c, alpha, beta].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "exponential data needs finite nonzero c, alpha, beta (got {c}, {alpha}, {beta})"
            )));
        }
        Ok(())
    }

    /// The catalogued factorization must satisfy `‖Δg‖² = σνν₁` and
    /// `‖g'‖² = τν²` on a probe grid.
    fn probe_identities(&self) -> Result<()> {
        for k in -2..=2 {
            for i in 0..=8 {
                let t = -1.0 + 0.25 * i as f64;
                let v = self.eval(k, t)?;
                let (nu, nu1) = (self.nu(k, t)?, self.nu(k + 1, t)?);
                let lhs_d = v.delta_g.norm_sqr();
                let lhs_t = v.g_prime.norm_sqr();
                let ok_d = (lhs_d - self.sigma(k)? * nu * nu1).abs() <= 1e-12 * lhs_d;
                let ok_t = (lhs_t - self.tau(t)? * nu * nu).abs() <= 1e-12 * lhs_t;
                if !(ok_d && ok_t) {
                    return Err(Error::InvalidParameter(format!("catalogued isothermic data fails at (k={k}, t={t})")));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> HolomorphicKind {
        match self {
            HolomorphicSpec::Linear => HolomorphicKind::Linear,
            HolomorphicSpec::Exponential { .. } => HolomorphicKind::Exponential,
            HolomorphicSpec::ExponentialRotational { .. } => HolomorphicKind::ExponentialRotational,
            HolomorphicSpec::Sampled(_) => HolomorphicKind::Sampled,
        }
    }

    fn g_at(&self, k: i64, t: f64) -> Result<(C64, C64)> {
        let kf = k as f64;
        Ok(match self {
            HolomorphicSpec::Linear => (C64::new(kf, t), I),
            HolomorphicSpec::Exponential { c, alpha, beta } => {
                let g = C64::from_polar(c * (alpha * kf).exp(), beta * t);
                (g, I * beta * g)
            }
            HolomorphicSpec::ExponentialRotational { c, alpha, beta } => {
                let g = C64::from_polar(c * (alpha * t).exp(), beta * kf);
                (g, alpha * g)
            }
            HolomorphicSpec::Sampled(s) => {
                let (r, j) = s.locate(k, t)?;
                (*s.g.get(r, j), *s.g_prime.get(r, j))
            }
        })
    }

    /// `g(k,t)`, `∂g(k,t)` and `Δg(k,t)`; closed form for catalogued kinds.
    pub fn eval(&self, k: i64, t: f64) -> Result<HolomorphicValue> {
        let (g, g_prime) = self.g_at(k, t)?;
        let delta_g = match self {
            HolomorphicSpec::Linear => C64::new(1.0, 0.0),
            HolomorphicSpec::Exponential { alpha, .. } => g * alpha.exp_m1(),
            HolomorphicSpec::ExponentialRotational { beta, .. } => g * (C64::from_polar(1.0, *beta) - 1.0),
            HolomorphicSpec::Sampled(_) => self.g_at(k + 1, t)?.0 - g,
        };
        Ok(HolomorphicValue { g, g_prime, delta_g })
    }

    pub fn nu(&self, k: i64, t: f64) -> Result<f64> {
        Ok(match self {
            HolomorphicSpec::Linear => 1.0,
            HolomorphicSpec::Exponential { c, alpha, .. } => c.abs() * (alpha * k as f64).exp(),
            HolomorphicSpec::ExponentialRotational { c, alpha, .. } => c.abs() * (alpha * t).exp(),
            HolomorphicSpec::Sampled(s) => {
                let (r, j) = s.locate(k, t)?;
                *s.iso.nu().get(r, j)
            }
        })
    }

    pub fn sigma(&self, k: i64) -> Result<f64> {
        Ok(match self {
            HolomorphicSpec::Linear => 1.0,
            HolomorphicSpec::Exponential { alpha, .. } => 4.0 * (alpha / 2.0).sinh().powi(2),
            HolomorphicSpec::ExponentialRotational { beta, .. } => 4.0 * (beta / 2.0).sin().powi(2),
            HolomorphicSpec::Sampled(s) => {
                let r = s.grid.row(k).ok_or(Error::OutsideGrid { k, j: 0 })?;
                *s.iso.sigma().get(r).ok_or(Error::OutsideGrid { k, j: 0 })?
            }
        })
    }

    pub fn tau(&self, t: f64) -> Result<f64> {
        Ok(match self {
            HolomorphicSpec::Linear => 1.0,
            HolomorphicSpec::Exponential { beta, .. } => beta * beta,
            HolomorphicSpec::ExponentialRotational { alpha, .. } => alpha * alpha,
            HolomorphicSpec::Sampled(s) => {
                let j = s.grid.t_grid.index_of(t).ok_or(Error::OutsideGrid { k: s.grid.k_start(), j: usize::MAX })?;
                s.iso.tau()[j]
            }
        })
    }

    /// The factorization `(ν, σ, τ)` of `g` sampled on `grid`.
    pub fn iso_on(&self, grid: &SurfaceGrid) -> Result<IsothermicData> {
        let samples = GridSamples::new(self, grid, false)?;
        IsothermicData::new(samples.nu, samples.sigma, samples.tau)
    }

    /// Sample this function on `grid` as the `Sampled` kind.
    pub fn sample(&self, grid: &SurfaceGrid) -> Result<HolomorphicSpec> {
        let s = GridSamples::new(self, grid, false)?;
        let iso = IsothermicData::new(s.nu, s.sigma, s.tau)?;
        HolomorphicSpec::sampled(grid.clone(), s.g, s.g_prime, iso)
    }
}

impl SampledHolomorphic {
    fn locate(&self, k: i64, t: f64) -> Result<(usize, usize)> {
        let r = self.grid.row(k).ok_or(Error::OutsideGrid { k, j: 0 })?;
        let j = self.grid.t_grid.index_of(t).ok_or(Error::OutsideGrid { k, j: usize::MAX })?;
        Ok((r, j))
    }
}

/// Free-function form of [`HolomorphicSpec::eval`].
pub fn holomorphic_eval(spec: &HolomorphicSpec, k: i64, t: f64) -> Result<HolomorphicValue> {
    spec.eval(k, t)
}

/// Everything the integrator needs, evaluated once on a grid.
struct GridSamples {
    g: Grid<C64>,
    g_prime: Grid<C64>,
    /// One row fewer than the grid.
    delta_g: Grid<C64>,
    nu: Grid<f64>,
    sigma: Vec<f64>,
    tau: Vec<f64>,
}

impl GridSamples {
    fn new(spec: &HolomorphicSpec, grid: &SurfaceGrid, need_delta: bool) -> Result<Self> {
        let (rows, cols) = (grid.rows(), grid.cols());
        let k0 = grid.k_start();
        let t = &grid.t_grid;
        let values = Grid::try_from_fn(rows, cols, |r, c| spec.g_at(k0 + r as i64, t.t(c)))?;
        let g = values.map(|v| v.0);
        let g_prime = values.map(|v| v.1);
        let delta_rows = if need_delta { rows - 1 } else { 0 };
        let delta_g = Grid::try_from_fn(delta_rows, cols, |r, c| spec.eval(k0 + r as i64, t.t(c)).map(|v| v.delta_g))?;
        let nu = Grid::try_from_fn(rows, cols, |r, c| spec.nu(k0 + r as i64, t.t(c)))?;
        let sigma_rows = match spec {
            HolomorphicSpec::Sampled(s) if s.iso.sigma().len() < rows => rows - 1,
            _ => rows,
        };
        let sigma = (0..sigma_rows).map(|r| spec.sigma(k0 + r as i64)).collect::<Result<Vec<_>>>()?;
        let tau = t.iter().map(|tt| spec.tau(tt)).collect::<Result<Vec<_>>>()?;
        Ok(GridSamples { g, g_prime, delta_g, nu, sigma, tau })
    }

    fn check_regular(&self, grid: &SurfaceGrid) -> Result<()> {
        let k0 = grid.k_start();
        for r in 0..self.g_prime.rows() {
            for c in 0..self.g_prime.cols() {
                let scale = 1.0 + self.g.get(r, c).norm();
                if self.g_prime.get(r, c).norm() <= 1e-13 * scale {
                    return Err(Error::SingularData { k: k0 + r as i64, t: grid.t_grid.t(c), what: "g'" });
                }
                if r < self.delta_g.rows() && self.delta_g.get(r, c).norm() <= 1e-13 * scale {
                    return Err(Error::SingularData { k: k0 + r as i64, t: grid.t_grid.t(c), what: "delta g" });
                }
            }
        }
        Ok(())
    }

    /// Right-hand side of the `∂x` equation at `(r, c)`.
    fn dt_integrand(&self, r: usize, c: usize) -> Vec3 {
        let g = *self.g.get(r, c);
        let gp = *self.g_prime.get(r, c);
        let g2 = g * g;
        let v = Vec3::new(((1.0 - g2) / gp).re, (I * (1.0 + g2) / gp).re, (2.0 * g / gp).re);
        v * (-self.tau[c] / 2.0)
    }

    /// Right-hand side of the `Δx` equation on the edge `(r, c) – (r+1, c)`.
    fn delta_integrand(&self, r: usize, c: usize) -> Vec3 {
        let g = *self.g.get(r, c);
        let g1 = *self.g.get(r + 1, c);
        let dg = *self.delta_g.get(r, c);
        let gg1 = g * g1;
        let v = Vec3::new(((1.0 - gg1) / dg).re, (I * (1.0 + gg1) / dg).re, ((g + g1) / dg).re);
        v * (self.sigma[r] / 2.0)
    }
}

/// Inverse stereographic image of `g` and its isothermic data.
#[derive(Debug, Clone)]
pub struct SphereNet {
    pub surface: SampledSurface,
    /// `ν* = 2ν/(1 + ‖g‖²)`, `σ* = σ`, `τ* = τ`.
    pub iso: IsothermicData,
}

/// `x* = (2g, ‖g‖² − 1)/(1 + ‖g‖²)` on `grid`, with its analytic
/// `t`-derivative attached.
pub fn inverse_stereographic(spec: &HolomorphicSpec, grid: &SurfaceGrid) -> Result<SphereNet> {
    let s = GridSamples::new(spec, grid, false)?;
    let (rows, cols) = (grid.rows(), grid.cols());
    let points = Grid::from_fn(rows, cols, |r, c| sphere_point(*s.g.get(r, c)));
    let d_t = Grid::from_fn(rows, cols, |r, c| {
        let g = *s.g.get(r, c);
        let gp = *s.g_prime.get(r, c);
        let n = 1.0 + g.norm_sqr();
        let w = (gp - gp.conj() * g * g) * (2.0 / (n * n));
        Vec3::new(w.re, w.im, 4.0 * (gp * g.conj()).re / (n * n))
    });
    let nu_star = Grid::from_fn(rows, cols, |r, c| 2.0 * s.nu.get(r, c) / (1.0 + s.g.get(r, c).norm_sqr()));
    let surface = SampledSurface::from_parts(grid.clone(), points, Some(d_t))?.with_meta("family", "sphere-net");
    let iso = IsothermicData::new(nu_star, s.sigma, s.tau)?;
    Ok(SphereNet { surface, iso })
}

fn sphere_point(g: C64) -> Vec3 {
    let n = 1.0 + g.norm_sqr();
    Vec3::new(2.0 * g.re / n, 2.0 * g.im / n, (g.norm_sqr() - 1.0) / n)
}

/// Stereographic projection from the north pole, `(X₁ + iX₂)/(1 − X₃)`.
pub fn stereographic(p: &Vec3) -> Result<C64> {
    let den = 1.0 - p.z;
    if den.abs() <= f64::EPSILON {
        return Err(Error::Pole([p.x, p.y, p.z]));
    }
    Ok(C64::new(p.x, p.y) / den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntegrationPath {
    /// Integrate the base row in `t`, then step every column across `k`.
    #[default]
    TFirst,
    /// Step the base column across `k`, then integrate every row in `t`.
    KFirst,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrateOptions {
    pub x0: Vec3,
    /// Base sample `(k, j)`; defaults to the grid's lower-left corner.
    pub base: Option<(i64, usize)>,
    pub path: IntegrationPath,
}

impl Default for IntegrateOptions {
    fn default() -> Self {
        IntegrateOptions { x0: Vec3::zeros(), base: None, path: IntegrationPath::TFirst }
    }
}

/// The minimal net produced by [`weierstrass_integrate`].
#[derive(Debug, Clone)]
pub struct WeierstrassSurface {
    /// Carries the `∂x` right-hand side as its analytic derivative.
    pub surface: SampledSurface,
    /// `ν = (1 + ‖g‖²)/(2ν_g)` with the `σ`, `τ` of `g`.
    pub iso: IsothermicData,
}

/// Solve the Weierstrass equations for `x` on `grid` with `x(base) = x0`.
/// Row integration uses an order-4 cumulative rule on the grid samples.
pub fn weierstrass_integrate(spec: &HolomorphicSpec, grid: &SurfaceGrid, opts: IntegrateOptions) -> Result<WeierstrassSurface> {
    let s = GridSamples::new(spec, grid, true)?;
    s.check_regular(grid)?;
    let (rows, cols) = (grid.rows(), grid.cols());
    let (base_k, base_j) = opts.base.unwrap_or((grid.k_start(), 0));
    let base_r = grid.row(base_k).ok_or(Error::OutsideGrid { k: base_k, j: base_j })?;
    if base_j >= cols {
        return Err(Error::OutsideGrid { k: base_k, j: base_j });
    }
    let h = grid.t_grid.dt();
    let dt_field = Grid::from_fn(rows, cols, |r, c| s.dt_integrand(r, c));
    let mut points = Grid::filled(rows, cols, Vec3::zeros());

    let integrate_row = |r: usize, base_c: usize, start: Vec3, points: &mut Grid<Vec3>| -> Result<()> {
        let cum = stencil::cumulative_integral(dt_field.row(r), h, base_c, Vec3::zeros())?;
        for (c, v) in cum.into_iter().enumerate() {
            *points.get_mut(r, c) = start + v;
        }
        Ok(())
    };
    let step_column = |c: usize, points: &mut Grid<Vec3>| {
        for r in base_r..rows - 1 {
            let next = *points.get(r, c) + s.delta_integrand(r, c);
            *points.get_mut(r + 1, c) = next;
        }
        for r in (0..base_r).rev() {
            let prev = *points.get(r + 1, c) - s.delta_integrand(r, c);
            *points.get_mut(r, c) = prev;
        }
    };

    match opts.path {
        IntegrationPath::TFirst => {
            integrate_row(base_r, base_j, opts.x0, &mut points)?;
            for c in 0..cols {
                step_column(c, &mut points);
            }
        }
        IntegrationPath::KFirst => {
            *points.get_mut(base_r, base_j) = opts.x0;
            step_column(base_j, &mut points);
            for r in 0..rows {
                let start = *points.get(r, base_j);
                integrate_row(r, base_j, start, &mut points)?;
            }
        }
    }

    let nu_x = Grid::from_fn(rows, cols, |r, c| (1.0 + s.g.get(r, c).norm_sqr()) / (2.0 * s.nu.get(r, c)));
    let iso = IsothermicData::new(nu_x, s.sigma.clone(), s.tau.clone())?;
    let surface = SampledSurface::from_parts(grid.clone(), points, Some(dt_field))?.with_meta("family", "weierstrass");
    Ok(WeierstrassSurface { surface, iso })
}

/// `max ‖∂(Δ-rhs) − Δ(∂-rhs)‖` over the grid, `∂` by the order-4 stencil.
pub fn compatibility_residual(spec: &HolomorphicSpec, grid: &SurfaceGrid, tol: f64) -> Result<CheckReport> {
    let s = GridSamples::new(spec, grid, true)?;
    s.check_regular(grid)?;
    let (rows, cols) = (grid.rows(), grid.cols());
    let h = grid.t_grid.dt();
    let mut worst: f64 = 0.0;
    for r in 0..rows - 1 {
        let d_row: Vec<Vec3> = (0..cols).map(|c| s.delta_integrand(r, c)).collect();
        for c in 0..cols {
            let lhs = stencil::d1(&d_row, h, c)?;
            let rhs = s.dt_integrand(r + 1, c) - s.dt_integrand(r, c);
            worst = worst.max((lhs - rhs).norm());
        }
    }
    let mut report = CheckReport::new();
    report.push("compatibility", worst, tol);
    Ok(report)
}

/// An element `(p, q)` of SU(2), `|p|² + |q|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SU2Element {
    p: C64,
    q: C64,
}

impl SU2Element {
    /// Accepts `|p|² + |q|²` within 1e-9 of 1 and renormalizes.
    pub fn new(p: C64, q: C64) -> Result<Self> {
        let n2 = p.norm_sqr() + q.norm_sqr();
        if !n2.is_finite() || (n2 - 1.0).abs() > 1e-9 {
            return Err(Error::NormViolation(n2));
        }
        let n = n2.sqrt();
        Ok(SU2Element { p: p / n, q: q / n })
    }

    pub fn identity() -> Self {
        SU2Element { p: C64::new(1.0, 0.0), q: C64::new(0.0, 0.0) }
    }

    pub fn p(&self) -> C64 {
        self.p
    }
    pub fn q(&self) -> C64 {
        self.q
    }

    /// `ĝ = (p g + q)/(−q̄ g + p̄)`.
    pub fn apply(&self, g: C64) -> Result<C64> {
        let den = self.denominator(g);
        if den.norm() <= 1e-14 * (1.0 + g.norm()) {
            return Err(Error::CoincidentPoints);
        }
        Ok((self.p * g + self.q) / den)
    }

    fn denominator(&self, g: C64) -> C64 {
        -self.q.conj() * g + self.p.conj()
    }
}

/// The rotation of `ℝ³` induced by `(p, q)` on Weierstrass data.
pub fn su2_to_so3(el: &SU2Element) -> Matrix3<f64> {
    let (p1, p2, q1, q2) = (el.p.re, el.p.im, el.q.re, el.q.im);
    Matrix3::new(
        p1 * p1 - p2 * p2 - q1 * q1 + q2 * q2,
        -2.0 * p1 * p2 - 2.0 * q1 * q2,
        -2.0 * p1 * q1 + 2.0 * p2 * q2,
        2.0 * p1 * p2 - 2.0 * q1 * q2,
        p1 * p1 - p2 * p2 + q1 * q1 - q2 * q2,
        -2.0 * p1 * q2 - 2.0 * p2 * q1,
        2.0 * p1 * q1 + 2.0 * p2 * q2,
        2.0 * p1 * q2 - 2.0 * p2 * q1,
        p1 * p1 + p2 * p2 - q1 * q1 - q2 * q2,
    )
}

/// Möbius image `ĝ` of `spec` sampled on `grid`, with `ν̂ = ν/|−q̄g + p̄|²`
/// and unchanged `σ`, `τ`.
pub fn mobius_transform(spec: &HolomorphicSpec, el: &SU2Element, grid: &SurfaceGrid) -> Result<HolomorphicSpec> {
    let s = GridSamples::new(spec, grid, false)?;
    let (rows, cols) = (grid.rows(), grid.cols());
    let k0 = grid.k_start();
    let den = Grid::try_from_fn(rows, cols, |r, c| {
        let g = *s.g.get(r, c);
        let d = el.denominator(g);
        if d.norm() <= 1e-12 * (1.0 + g.norm()) {
            Err(Error::MobiusPole { k: k0 + r as i64, t: grid.t_grid.t(c) })
        } else {
            Ok(d)
        }
    })?;
    let g_hat = Grid::from_fn(rows, cols, |r, c| (el.p * s.g.get(r, c) + el.q) / den.get(r, c));
    let gp_hat = Grid::from_fn(rows, cols, |r, c| s.g_prime.get(r, c) / (den.get(r, c) * den.get(r, c)));
    let nu_hat = Grid::from_fn(rows, cols, |r, c| s.nu.get(r, c) / den.get(r, c).norm_sqr());
    let iso = IsothermicData::new(nu_hat, s.sigma, s.tau)?;
    HolomorphicSpec::sampled(grid.clone(), g_hat, gp_hat, iso)
}

/// `(z1 − z2)(z3 − z4) / ((z2 − z3)(z4 − z1))`.
pub fn cross_ratio(z1: C64, z2: C64, z3: C64, z4: C64) -> Result<C64> {
    let den = (z2 - z3) * (z4 - z1);
    if den.norm() == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    Ok((z1 - z2) * (z3 - z4) / den)
}
