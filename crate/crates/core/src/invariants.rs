//! Numerical verifiers for the definitional properties of semi-discrete
//! nets: conjugate, circular, isothermic, dual and minimal. Fully discrete
//! quad nets get the analogous planarity, concyclicity and cross-ratio
//! factorization checks.
//!
//! Residuals are relative wherever the underlying relation is homogeneous,
//! so reports are scale-free and unchanged by rigid motions.

use nalgebra::{DMatrix, DVector, Matrix3, Vector2, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::net::QuadNet;
use crate::report::CheckReport;
use crate::surface::{discrete_ops, Grid, SampledSurface, SurfaceGrid, Vec3};

/// Positive factorization `‖Δx‖² = σ ν ν₁`, `‖∂x‖² = τ ν²` of an isothermic
/// net. `sigma` is indexed by row (k), `tau` by column (t-sample); `nu` by
/// both.
#[derive(Debug, Clone, PartialEq)]
pub struct IsothermicData {
    nu: Grid<f64>,
    sigma: Vec<f64>,
    tau: Vec<f64>,
}

impl IsothermicData {
    pub fn new(nu: Grid<f64>, sigma: Vec<f64>, tau: Vec<f64>) -> Result<Self> {
        let positive = |v: &f64| *v > 0.0 && v.is_finite();
        if !nu.iter().all(positive) || !sigma.iter().all(positive) || !tau.iter().all(positive) {
            return Err(Error::InvalidParameter("isothermic data must be strictly positive and finite".into()));
        }
        if tau.len() != nu.cols() {
            return Err(Error::GridMismatch(format!("tau has {} samples, nu has {} columns", tau.len(), nu.cols())));
        }
        if sigma.len() + 1 < nu.rows() {
            return Err(Error::GridMismatch(format!("sigma has {} rows, nu has {}", sigma.len(), nu.rows())));
        }
        Ok(IsothermicData { nu, sigma, tau })
    }

    /// Sample closed-form data on `grid`.
    pub fn from_fns(
        grid: &SurfaceGrid,
        nu: impl Fn(i64, f64) -> f64,
        sigma: impl Fn(i64) -> f64,
        tau: impl Fn(f64) -> f64,
    ) -> Result<Self> {
        let k0 = grid.k_start();
        let t = &grid.t_grid;
        let nu = Grid::from_fn(grid.rows(), grid.cols(), |r, c| nu(k0 + r as i64, t.t(c)));
        let sigma = grid.ks().map(sigma).collect();
        let tau = t.iter().map(tau).collect();
        IsothermicData::new(nu, sigma, tau)
    }

    pub fn nu(&self) -> &Grid<f64> {
        &self.nu
    }
    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }
    pub fn tau(&self) -> &[f64] {
        &self.tau
    }

    /// Copy with `sigma` replaced, skipping nothing but the positivity check.
    pub fn with_sigma(&self, sigma: Vec<f64>) -> Result<Self> {
        IsothermicData::new(self.nu.clone(), sigma, self.tau.clone())
    }

    fn check_grid(&self, grid: &SurfaceGrid) -> Result<()> {
        if self.nu.dims() != (grid.rows(), grid.cols()) {
            return Err(Error::GridMismatch(format!(
                "nu is {:?}, surface grid is {:?}",
                self.nu.dims(),
                (grid.rows(), grid.cols())
            )));
        }
        Ok(())
    }
}

/// Vectors shorter than this relative to the local scale count as zero.
const ZERO_REL: f64 = 4.0 * f64::EPSILON;

fn is_negligible(v: &Vec3, scale: f64) -> bool {
    v.norm() <= ZERO_REL * scale.max(f64::MIN_POSITIVE)
}

fn edges(surface: &SampledSurface) -> impl Iterator<Item = (i64, usize)> + '_ {
    let g = surface.grid();
    (g.k_start()..g.k_end()).flat_map(move |k| (0..g.cols()).map(move |j| (k, j)))
}

fn require_rows(surface: &SampledSurface) -> Result<()> {
    if surface.grid().rows() < 2 {
        return Err(Error::InvalidParameter("surface needs at least two rows".into()));
    }
    Ok(())
}

/// Smallest over largest singular value of `[∂x | Δx | ∂Δx]`, maximized
/// over all edge samples.
pub fn check_conjugate(surface: &SampledSurface, tol: f64) -> Result<CheckReport> {
    require_rows(surface)?;
    let mut worst: f64 = 0.0;
    let mut degenerate = 0usize;
    for (k, j) in edges(surface) {
        let e = discrete_ops(surface, k, j)?;
        let scale = surface.point(k, j)?.norm().max(surface.point(k + 1, j)?.norm());
        if is_negligible(&e.delta, scale) && e.dx.norm() == 0.0 {
            degenerate += 1;
            continue;
        }
        if e.dx.norm() == 0.0 || e.delta.norm() == 0.0 || e.d_delta.norm() == 0.0 {
            continue;
        }
        let m = Matrix3::from_columns(&[e.dx, e.delta, e.d_delta]);
        let sv = m.singular_values();
        let (smax, smin) = (sv.max(), sv.min());
        let r = if smax > 0.0 { smin / smax } else { 0.0 };
        worst = worst.max(r);
    }
    let mut report = CheckReport::new();
    report.push("conjugate", worst, tol);
    if degenerate > 0 {
        report.note(format!("conjugate: {degenerate} degenerate edge samples (dx = 0 and delta x = 0) excluded"));
    }
    Ok(report)
}

/// Result of [`check_circular`]: the report plus the recovered `s` of the
/// planar circle condition at every edge sample (NaN where degenerate).
#[derive(Debug, Clone)]
pub struct CircularityReport {
    pub report: CheckReport,
    pub s: Grid<f64>,
}

/// Per edge sample: fit the plane of `{∂x, ∂x₁, Δx}`, measure out-of-plane
/// deviation, then solve `Δx = i s (∂x/‖∂x‖ + ∂x₁/‖∂x₁‖)` for real `s` in
/// that plane and measure the misfit.
pub fn check_circular(surface: &SampledSurface, tol: f64) -> Result<CircularityReport> {
    require_rows(surface)?;
    let g = surface.grid();
    let mut s_grid = Grid::filled(g.rows() - 1, g.cols(), f64::NAN);
    let (mut worst_plane, mut worst_circle): (f64, f64) = (0.0, 0.0);
    let mut degenerate = 0usize;
    for (k, j) in edges(surface) {
        let e = discrete_ops(surface, k, j)?;
        if e.dx.norm() == 0.0 {
            return Err(Error::ZeroTangent { k, j });
        }
        if e.dx1.norm() == 0.0 {
            return Err(Error::ZeroTangent { k: k + 1, j });
        }
        let scale = surface.point(k, j)?.norm().max(surface.point(k + 1, j)?.norm());
        if is_negligible(&e.delta, scale) {
            degenerate += 1;
            continue;
        }
        let (a, b, d) = (e.dx.normalize(), e.dx1.normalize(), e.delta);
        let dn = d.normalize();
        let normal = plane_normal(&a, &b, &dn);
        let plane_dev = a.dot(&normal).abs().max(b.dot(&normal).abs()).max(dn.dot(&normal).abs());
        worst_plane = worst_plane.max(plane_dev);

        let sum = a + b;
        let e1 = if sum.norm() > 1e-12 { sum.normalize() } else { a };
        let e1 = (e1 - normal * e1.dot(&normal)).normalize();
        let e2 = normal.cross(&e1);
        let z = |v: &Vec3| Complex64::new(v.dot(&e1), v.dot(&e2));
        let w = Complex64::i() * (z(&a) + z(&b));
        let zd = z(&d);
        let (s, misfit) = if w.norm() > 0.0 {
            let s = (w.conj() * zd).re / w.norm_sqr();
            (s, (zd - w * s).norm() / d.norm())
        } else {
            (0.0, 1.0)
        };
        worst_circle = worst_circle.max(misfit);
        *s_grid.get_mut((k - g.k_start()) as usize, j) = s;
    }
    let mut report = CheckReport::new();
    report.push("circular.plane", worst_plane, tol);
    report.push("circular.circle", worst_circle, tol);
    if degenerate > 0 {
        report.note(format!("circular: {degenerate} degenerate edge samples (delta x = 0) excluded"));
    }
    Ok(CircularityReport { report, s: s_grid })
}

/// Least-squares normal of the plane through the origin spanned by three
/// unit vectors, oriented along `a × d` (or `b × d`) when that is nonzero.
fn plane_normal(a: &Vec3, b: &Vec3, d: &Vec3) -> Vec3 {
    let m = Matrix3::from_rows(&[a.transpose(), b.transpose(), d.transpose()]);
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("requested v_t");
    let (imin, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, s)| if *s < acc.1 { (i, *s) } else { acc });
    let mut n: Vec3 = v_t.row(imin).transpose();
    let orient = {
        let c = a.cross(d);
        if c.norm() > 1e-8 { c } else { b.cross(d) }
    };
    if n.dot(&orient) < 0.0 {
        n = -n;
    }
    n.normalize()
}

/// `‖Δx‖² = σνν₁` and `‖∂x‖² = τν²` (relative residuals), together with the
/// circularity checks.
pub fn check_isothermic(surface: &SampledSurface, data: &IsothermicData, tol: f64) -> Result<CheckReport> {
    require_rows(surface)?;
    data.check_grid(surface.grid())?;
    let g = surface.grid();
    let mut r_delta: f64 = 0.0;
    let mut r_dt: f64 = 0.0;
    for (k, j) in edges(surface) {
        let r = (k - g.k_start()) as usize;
        let e = discrete_ops(surface, k, j)?;
        let nu = *data.nu.get(r, j);
        let nu1 = *data.nu.get(r + 1, j);
        let dd = e.delta.norm_squared();
        if dd > 0.0 {
            r_delta = r_delta.max((dd - data.sigma[r] * nu * nu1).abs() / dd);
        }
    }
    for k in g.ks() {
        let r = (k - g.k_start()) as usize;
        for j in 0..g.cols() {
            let dx = surface.d_t_at(k, j)?.norm_squared();
            let nu = *data.nu.get(r, j);
            if dx > 0.0 {
                r_dt = r_dt.max((dx - data.tau[j] * nu * nu).abs() / dx);
            }
        }
    }
    let mut report = CheckReport::new();
    report.push("isothermic.delta", r_delta, tol);
    report.push("isothermic.dt", r_dt, tol);
    report.merge("", check_circular(surface, tol)?.report);
    Ok(report)
}

fn relative_gap(a: &Vec3, b: &Vec3) -> Option<f64> {
    let scale = a.norm().max(b.norm());
    (scale > 0.0).then(|| (a - b).norm() / scale)
}

/// `∂x* = -ν⁻² ∂x` and `Δx* = (νν₁)⁻¹ Δx`.
pub fn check_dual(x: &SampledSurface, x_star: &SampledSurface, nu: &Grid<f64>, tol: f64) -> Result<CheckReport> {
    if x.grid() != x_star.grid() {
        return Err(Error::GridMismatch("surface and dual live on different grids".into()));
    }
    let g = x.grid();
    if nu.dims() != (g.rows(), g.cols()) {
        return Err(Error::GridMismatch(format!("nu is {:?}, grid is {:?}", nu.dims(), (g.rows(), g.cols()))));
    }
    let (mut r_dt, mut r_delta): (f64, f64) = (0.0, 0.0);
    for k in g.ks() {
        let r = (k - g.k_start()) as usize;
        for j in 0..g.cols() {
            let n = *nu.get(r, j);
            let lhs = x_star.d_t_at(k, j)?;
            let rhs = -x.d_t_at(k, j)? / (n * n);
            if let Some(gap) = relative_gap(&lhs, &rhs) {
                r_dt = r_dt.max(gap);
            }
            if k < g.k_end() {
                let n1 = *nu.get(r + 1, j);
                let lhs = x_star.point(k + 1, j)? - x_star.point(k, j)?;
                let rhs = (x.point(k + 1, j)? - x.point(k, j)?) / (n * n1);
                if let Some(gap) = relative_gap(&lhs, &rhs) {
                    r_delta = r_delta.max(gap);
                }
            }
        }
    }
    let mut report = CheckReport::new();
    report.push("dual.dt", r_dt, tol);
    report.push("dual.delta", r_delta, tol);
    Ok(report)
}

/// A least-squares sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereFit {
    pub center: Vec3,
    pub radius: f64,
    /// `max | ‖p − c‖ − R | / R`.
    pub residual: f64,
}

/// Algebraic sphere fit followed by one Gauss–Newton step on the geometric
/// distances.
pub fn fit_sphere<'a>(points: impl IntoIterator<Item = &'a Vec3>) -> Result<SphereFit> {
    let pts: Vec<Vec3> = points.into_iter().copied().collect();
    if pts.len() < 4 {
        return Err(Error::DegenerateFit(format!("{} points, need at least 4", pts.len())));
    }
    let centroid = pts.iter().sum::<Vec3>() / pts.len() as f64;
    let local: Vec<Vec3> = pts.iter().map(|p| p - centroid).collect();
    let spread = local.iter().map(|p| p.norm()).fold(0.0, f64::max);
    if spread == 0.0 {
        return Err(Error::DegenerateFit("all points coincide".into()));
    }
    let cov = local.iter().fold(Matrix3::zeros(), |acc, p| acc + p * p.transpose());
    let eig = cov.symmetric_eigenvalues();
    if eig.min() <= 1e-20 * eig.max() {
        return Err(Error::DegenerateFit("points are not affinely independent (coplanar or collinear)".into()));
    }
    let n = local.len();
    let a = DMatrix::from_fn(n, 4, |i, c| if c < 3 { 2.0 * local[i][c] / spread } else { 1.0 });
    let b = DVector::from_fn(n, |i, _| local[i].norm_squared() / (spread * spread));
    let sol = lstsq(a, b)?;
    let mut center = Vec3::new(sol[0], sol[1], sol[2]);
    let r2 = sol[3] + center.norm_squared();
    if !(r2 > 0.0) {
        return Err(Error::DegenerateFit("algebraic fit produced a non-positive radius".into()));
    }
    let mut radius = r2.sqrt();

    // one Gauss–Newton step on r_i = |p_i - c| - R (unit-spread coordinates)
    let scaled: Vec<Vec3> = local.iter().map(|p| p / spread).collect();
    let mut jtj = nalgebra::Matrix4::<f64>::zeros();
    let mut jtr = Vector4::<f64>::zeros();
    for p in &scaled {
        let d = p - center;
        let dist = d.norm();
        if dist == 0.0 {
            continue;
        }
        let u = d / dist;
        let row = Vector4::new(-u.x, -u.y, -u.z, -1.0);
        let res = dist - radius;
        jtj += row * row.transpose();
        jtr += row * res;
    }
    if let Some(step) = jtj.lu().solve(&(-jtr)) {
        center += Vec3::new(step[0], step[1], step[2]);
        radius += step[3];
    }
    let residual = scaled.iter().map(|p| ((p - center).norm() - radius).abs()).fold(0.0, f64::max) / radius;
    Ok(SphereFit { center: center * spread + centroid, radius: radius * spread, residual })
}

fn lstsq(a: DMatrix<f64>, b: DVector<f64>) -> Result<DVector<f64>> {
    let qr = a.qr();
    let q = qr.q();
    let r = qr.r();
    let diag_max = r.diagonal().abs().max();
    if r.diagonal().abs().min() <= 1e-13 * diag_max {
        return Err(Error::DegenerateFit("rank-deficient sphere design matrix".into()));
    }
    let qtb = q.tr_mul(&b);
    r.solve_upper_triangular(&qtb).ok_or_else(|| Error::DegenerateFit("triangular solve failed".into()))
}

/// Result of [`check_minimal`].
#[derive(Debug, Clone)]
pub struct MinimalityReport {
    pub report: CheckReport,
    pub fit: SphereFit,
}

/// Whether `x_star` is inscribed in a sphere.
pub fn check_minimal(x_star: &SampledSurface, tol: f64) -> Result<MinimalityReport> {
    let fit = fit_sphere(x_star.iter_points())?;
    let mut report = CheckReport::new();
    report.push("minimal.sphere", fit.residual, tol);
    report.value("sphere.center.x1", fit.center.x);
    report.value("sphere.center.x2", fit.center.y);
    report.value("sphere.center.x3", fit.center.z);
    report.value("sphere.radius", fit.radius);
    Ok(MinimalityReport { report, fit })
}

/// Cross-ratio of four spatial points that lie (nearly) in a plane, taken
/// in complex coordinates of their least-squares plane.
pub fn planar_cross_ratio(quad: &[Vec3; 4]) -> Result<Complex64> {
    let c = quad.iter().sum::<Vec3>() / 4.0;
    let m = Matrix3::<f64>::from_fn(|r, col| quad.iter().map(|p| (p - c)[r] * (p - c)[col]).sum::<f64>());
    let eig = m.symmetric_eigen();
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| eig.eigenvalues[j].partial_cmp(&eig.eigenvalues[i]).unwrap());
    let e1: Vec3 = eig.eigenvectors.column(order[0]).into();
    let e2: Vec3 = eig.eigenvectors.column(order[1]).into();
    let z: Vec<Complex64> = quad
        .iter()
        .map(|p| {
            let v = Vector2::new((p - c).dot(&e1), (p - c).dot(&e2));
            Complex64::new(v.x, v.y)
        })
        .collect();
    crate::weierstrass::cross_ratio(z[0], z[1], z[2], z[3])
}

/// Planarity of every elementary quad (discrete analogue of conjugacy):
/// `|det(b−a, c−a, d−a)| / (‖b−a‖‖c−a‖‖d−a‖)`.
pub fn check_net_planar(net: &QuadNet, tol: f64) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    for (_, [a, b, c, d]) in net.quads() {
        let (u, v, w) = (b - a, c - a, d - a);
        let denom = u.norm() * v.norm() * w.norm();
        if denom > 0.0 {
            worst = worst.max(u.dot(&v.cross(&w)).abs() / denom);
        }
    }
    let mut report = CheckReport::new();
    report.push("net.planar", worst, tol);
    Ok(report)
}

/// Concyclicity of every elementary quad: the cross-ratio is real.
pub fn check_net_circular(net: &QuadNet, tol: f64) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    for (_, q) in net.quads() {
        let cr = planar_cross_ratio(&q)?;
        worst = worst.max(cr.im.abs() / cr.norm());
    }
    let mut report = CheckReport::new();
    report.merge("", check_net_planar(net, tol)?);
    report.push("net.circular", worst, tol);
    Ok(report)
}

/// Cross-ratios factorize as `a(n)/b(m)`: the mixed second difference of
/// `log cr` vanishes, i.e. `cr(n,m) cr(n+1,m+1) = cr(n+1,m) cr(n,m+1)`.
pub fn check_net_isothermic(net: &QuadNet, tol: f64) -> Result<CheckReport> {
    let rows = net.rows().saturating_sub(1);
    let cols = net.cols().saturating_sub(1);
    let crs: Vec<Complex64> = net.quads().map(|(_, q)| planar_cross_ratio(&q)).collect::<Result<_>>()?;
    let at = |r: usize, c: usize| crs[r * cols + c];
    let mut worst: f64 = 0.0;
    for r in 0..rows.saturating_sub(1) {
        for c in 0..cols.saturating_sub(1) {
            let lhs = at(r, c) * at(r + 1, c + 1);
            let rhs = at(r + 1, c) * at(r, c + 1);
            worst = worst.max((lhs - rhs).norm() / lhs.norm().max(rhs.norm()));
        }
    }
    let mut report = CheckReport::new();
    report.merge("", check_net_circular(net, tol)?);
    report.push("net.isothermic", worst, tol);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_sampled_on, TGrid};
    use std::f64::consts::PI;

    fn cylinder(k_range: std::ops::RangeInclusive<i64>) -> SampledSurface {
        let f = |k: i64, t: f64| Vec3::new(t.cos(), t.sin(), 0.3 * k as f64);
        let df = |_k: i64, t: f64| Vec3::new(-t.sin(), t.cos(), 0.0);
        build_sampled_on(f, k_range, (0.0, 2.0 * PI), 0.01, Some(&df)).unwrap()
    }

    #[test]
    fn planar_surface_is_conjugate() {
        let f = |k: i64, t: f64| Vec3::new(k as f64 + t * t, t.sin() * (1.0 + k as f64), 0.0);
        let s = build_sampled_on(f, 0..=3, (0.0, 1.0), 0.01, None).unwrap();
        let r = check_conjugate(&s, 1e-12).unwrap();
        assert!(r.overall(), "{r}");
    }

    #[test]
    fn concentric_circles_are_circular_with_half_gap() {
        let radius = |k: i64| 1.0 + 0.5 * k as f64;
        let f = move |k: i64, t: f64| Vec3::new(radius(k) * t.cos(), radius(k) * t.sin(), 0.0);
        let df = move |k: i64, t: f64| Vec3::new(-radius(k) * t.sin(), radius(k) * t.cos(), 0.0);
        let s = build_sampled_on(f, 0..=2, (0.0, 6.0), 0.05, Some(&df)).unwrap();
        let c = check_circular(&s, 1e-12).unwrap();
        assert!(c.report.overall(), "{}", c.report);
        assert!(c.s.iter().all(|s| (s - 0.25).abs() < 1e-12));
    }

    #[test]
    fn translated_row_is_not_circular() {
        let f = |k: i64, t: f64| Vec3::new(t.cos() + 0.2 * k as f64, t.sin(), 0.5 * k as f64 + 0.3 * (k as f64) * t);
        let df = |k: i64, t: f64| Vec3::new(-t.sin(), t.cos(), 0.3 * k as f64);
        let s = build_sampled_on(f, 0..=1, (0.0, 3.0), 0.05, Some(&df)).unwrap();
        assert!(!check_circular(&s, 1e-8).unwrap().report.overall());
    }

    #[test]
    fn zero_tangent_is_error() {
        let s = build_sampled_on(|k, _| Vec3::new(k as f64, 0.0, 0.0), 0..=1, (0.0, 1.0), 0.1, None).unwrap();
        assert!(matches!(check_circular(&s, 1e-8), Err(Error::ZeroTangent { .. })));
    }

    #[test]
    fn cylinder_is_isothermic_but_doubled_sigma_fails() {
        let s = cylinder(0..=3);
        let data = IsothermicData::from_fns(s.grid(), |_, _| 1.0, |_| 0.09, |_| 1.0).unwrap();
        assert!(check_isothermic(&s, &data, 1e-12).unwrap().overall());
        let doubled = data.with_sigma(vec![0.18; 4]).unwrap();
        let r = check_isothermic(&s, &doubled, 1e-8).unwrap();
        assert!(!r.overall());
        assert!((r.get("isothermic.delta").unwrap().residual - 1.0).abs() < 1e-12);
    }

    #[test]
    fn isothermic_grid_mismatch() {
        let s = cylinder(0..=3);
        let other = SurfaceGrid::new(0..=2, TGrid::new(0.0, 0.1, 3).unwrap()).unwrap();
        let data = IsothermicData::from_fns(&other, |_, _| 1.0, |_| 1.0, |_| 1.0).unwrap();
        assert!(matches!(check_isothermic(&s, &data, 1e-8), Err(Error::GridMismatch(_))));
    }

    #[test]
    fn dual_of_constant_and_self() {
        let c = build_sampled_on(|_, _| Vec3::new(1.0, 1.0, 1.0), 0..=2, (0.0, 1.0), 0.1, None).unwrap();
        let nu = Grid::filled(3, 11, 2.0);
        assert!(check_dual(&c, &c, &nu, 1e-12).unwrap().overall());
        let s = cylinder(0..=2);
        let nu = Grid::filled(3, s.grid().cols(), 1.0);
        let r = check_dual(&s, &s, &nu, 1e-8).unwrap();
        assert!(r.get("dual.dt").unwrap().residual >= 1.0);
    }

    #[test]
    fn unit_sphere_fit() {
        let f = |k: i64, t: f64| {
            let phi = 0.3 * k as f64 - 1.0;
            Vec3::new(phi.cos() * t.cos(), phi.cos() * t.sin(), phi.sin())
        };
        let s = build_sampled_on(f, 0..=6, (0.0, 6.0), 0.1, None).unwrap();
        let m = check_minimal(&s, 1e-12).unwrap();
        assert!(m.report.overall());
        assert!(m.fit.center.norm() < 1e-12);
        assert!((m.fit.radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cylinder_dual_not_spherical() {
        // dual of the cylinder with nu = 1: x* = (-cos t, -sin t, 0.3 k)
        let s = cylinder(0..=3);
        let dual = build_sampled_on(|k, t| Vec3::new(-t.cos(), -t.sin(), 0.3 * k as f64), 0..=3, (0.0, 2.0 * PI), 0.01, None).unwrap();
        let nu = Grid::filled(4, s.grid().cols(), 1.0);
        assert!(check_dual(&s, &dual, &nu, 1e-6).unwrap().overall());
        assert!(!check_minimal(&dual, 1e-6).unwrap().report.overall());
    }

    #[test]
    fn too_few_points_is_degenerate() {
        let pts = [Vec3::zeros(), Vec3::x(), Vec3::y()];
        assert!(matches!(fit_sphere(pts.iter()), Err(Error::DegenerateFit(_))));
        let planar = [Vec3::zeros(), Vec3::x(), Vec3::y(), Vec3::new(1.0, 1.0, 0.0)];
        assert!(matches!(fit_sphere(planar.iter()), Err(Error::DegenerateFit(_))));
    }

    #[test]
    fn rotational_net_passes_net_checks() {
        let xs = |n: i64| (0.4 * n as f64).cosh();
        let net = QuadNet::from_fn(-3..=3, 0..=8, |n, m| {
            let a = 2.0 * PI * m as f64 / 9.0;
            Vec3::new(xs(n) * a.cos(), xs(n) * a.sin(), 0.5 * n as f64)
        })
        .unwrap();
        assert!(check_net_isothermic(&net, 1e-12).unwrap().overall());
    }
}
