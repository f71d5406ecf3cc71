//! Comparison of the catenoid families: area functional, first variation,
//! cosh-graph fits, profile distances and the six-item comparison suite.

use std::ops::RangeInclusive;

use nalgebra::Matrix3;

use crate::catenoids::{
    gen_bp, gen_m_pd_rs, gen_m_ps_rd, gen_mw_pd_rs, gen_mw_ps_rd, gen_pr_profile, gen_smooth, m_ps_rd_normalized,
    Branch, MPsRdParams, MWPdRsParams,
};
use crate::error::{Error, Result};
use crate::profile::{ProfileCurve, ProfileKind};
use crate::report::CheckReport;
use crate::stencil;
use crate::surface::{TGrid, Vec3};

fn uniform_step(profile: &ProfileCurve) -> Result<f64> {
    let s: Vec<f64> = profile.params().collect();
    if s.len() < stencil::D1_MIN_SAMPLES {
        return Err(Error::Stencil { needed: stencil::D1_MIN_SAMPLES, len: s.len() });
    }
    let h = (s[s.len() - 1] - s[0]) / (s.len() - 1) as f64;
    let uniform = s.iter().enumerate().all(|(j, v)| (v - (s[0] + j as f64 * h)).abs() <= 1e-9 * h);
    if !uniform {
        return Err(Error::InvalidParameter("profile samples are not uniformly spaced".into()));
    }
    Ok(h)
}

fn check_span(profile: &ProfileCurve, r: f64) -> Result<()> {
    let s = profile.samples();
    let (first, last) = match (s.first(), s.last()) {
        (Some(a), Some(b)) => (a.0, b.0),
        _ => return Err(Error::ProfileSpan("empty profile".into())),
    };
    let tol = 1e-9 * r.max(1.0);
    if (first + r).abs() > tol || (last - r).abs() > tol {
        return Err(Error::ProfileSpan(format!("samples cover [{first}, {last}], need [-{r}, {r}]")));
    }
    Ok(())
}

/// Area of one `2π/K` piece, `∫ x √(2(1 − cos θ) + sin²θ · x′²) dt` over
/// `[−r, r]`, by Simpson's rule with order-4 stencil derivatives.
pub fn area_functional(profile: &ProfileCurve, r: f64, symmetry: u64) -> Result<f64> {
    if profile.kind() != ProfileKind::SmoothSampled {
        return Err(Error::InvalidParameter("area functional needs a smooth-sampled profile".into()));
    }
    check_span(profile, r)?;
    let theta = crate::catenoids::dihedral_angle(symmetry)?;
    let (c, s) = (theta.cos(), theta.sin());
    let h = uniform_step(profile)?;
    let x: Vec<f64> = profile.points().map(|p| p.x).collect();
    let integrand = (0..x.len())
        .map(|j| Ok(x[j] * (2.0 * (1.0 - c) + s * s * stencil::d1(&x, h, j)?.powi(2)).sqrt()))
        .collect::<Result<Vec<f64>>>()?;
    stencil::simpson(&integrand, h)
}

/// `(A(x + εx̂) − A(x − εx̂))/(2ε)` for a perturbation `x̂` with `x̂(±r) = 0`.
pub fn first_variation(
    profile: &ProfileCurve,
    r: f64,
    symmetry: u64,
    perturbation: &dyn Fn(f64) -> f64,
    eps: f64,
) -> Result<f64> {
    for end in [-r, r] {
        let v = perturbation(end);
        if v.abs() > 1e-12 {
            return Err(Error::BoundaryNotPinned(format!("perturbation is {v} at t = {end}")));
        }
    }
    let shifted = |sign: f64| {
        let samples = profile
            .samples()
            .iter()
            .map(|(t, p)| (*t, Vec3::new(p.x + sign * eps * perturbation(*t), 0.0, p.z)))
            .collect();
        ProfileCurve::new(profile.kind(), samples)
    };
    let plus = area_functional(&shifted(1.0)?, r, symmetry)?;
    let minus = area_functional(&shifted(-1.0)?, r, symmetry)?;
    Ok((plus - minus) / (2.0 * eps))
}

/// `x ≈ a cosh(b z)` fitted through the neck and the first off-neck sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoshFit {
    pub a: f64,
    pub b: f64,
    /// Max of `|x − a cosh(bz)|/x` over the remaining samples.
    pub residual: f64,
}

pub fn cosh_fit(profile: &ProfileCurve) -> Result<CoshFit> {
    let s = profile.samples();
    if s.len() < 3 {
        return Err(Error::NotCosh(format!("need at least 3 samples, got {}", s.len())));
    }
    let span = s.iter().map(|(_, p)| p.z.abs()).fold(0.0, f64::max);
    let (neck, _) = s
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .1.z.abs().total_cmp(&b.1 .1.z.abs()))
        .expect("nonempty");
    if s[neck].1.z.abs() > 1e-9 * span {
        return Err(Error::NotCosh("no sample at height 0".into()));
    }
    let a = s[neck].1.x;
    if !(a > 0.0) {
        return Err(Error::NotCosh(format!("neck value {a} is not positive")));
    }
    let off = if neck + 1 < s.len() { neck + 1 } else { neck - 1 };
    let (x1, z1) = (s[off].1.x, s[off].1.z.abs());
    if x1 < a {
        return Err(Error::NotCosh(format!("off-neck value {x1} is below the neck value {a}")));
    }
    let b = (x1 / a).acosh() / z1;
    let residual = s
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != neck && *i != off)
        .map(|(_, (_, p))| (p.x - a * (b * p.z).cosh()).abs() / p.x)
        .fold(0.0, f64::max);
    Ok(CoshFit { a, b, residual })
}

/// Max distance between corresponding points: vertices with the same index
/// for discrete curves, samples at the same parameter for smooth ones.
/// `window` restricts the compared parameters.
pub fn profile_sup_distance(p1: &ProfileCurve, p2: &ProfileCurve, window: Option<(f64, f64)>) -> Result<f64> {
    let in_window = |s: f64| window.is_none_or(|(lo, hi)| s >= lo - 1e-12 && s <= hi + 1e-12);
    let mut shared = 0usize;
    let mut worst: f64 = 0.0;
    for (s, p) in p1.samples().iter().filter(|(s, _)| in_window(*s)) {
        if let Some(q) = p2.at(*s) {
            shared += 1;
            worst = worst.max((p - q).norm());
        }
    }
    if shared == 0 {
        return Err(Error::DisjointRanges);
    }
    Ok(worst)
}

/// Max over both profiles' points of `‖p‖`, for relative distances.
fn norm_scale(a: &ProfileCurve, b: &ProfileCurve) -> f64 {
    a.max_norm().max(b.max_norm())
}

/// Best rigid motion `p ↦ Rp + b` taking `from` onto `to` (Kabsch).
#[derive(Debug, Clone, PartialEq)]
pub struct RigidFit {
    pub rotation: Matrix3<f64>,
    pub translation: Vec3,
    pub max_error: f64,
    /// Max error when only the mean offset is removed.
    pub translation_only_error: f64,
}

pub fn rigid_fit(from: &[Vec3], to: &[Vec3]) -> Result<RigidFit> {
    if from.len() != to.len() || from.is_empty() {
        return Err(Error::GridMismatch(format!("{} points vs {}", from.len(), to.len())));
    }
    let n = from.len() as f64;
    let ca = from.iter().sum::<Vec3>() / n;
    let cb = to.iter().sum::<Vec3>() / n;
    let h: Matrix3<f64> = from.iter().zip(to).map(|(a, b)| (a - ca) * (b - cb).transpose()).sum();
    let svd = h.svd(true, true);
    let (u, v) = (svd.u.expect("u"), svd.v_t.expect("v_t").transpose());
    let d = (v * u.transpose()).determinant().signum();
    let rotation = v * Matrix3::from_diagonal(&Vec3::new(1.0, 1.0, d)) * u.transpose();
    let translation = cb - rotation * ca;
    let max_error = from.iter().zip(to).map(|(a, b)| (rotation * a + translation - b).norm()).fold(0.0, f64::max);
    let translation_only_error = from.iter().zip(to).map(|(a, b)| (a - ca + cb - b).norm()).fold(0.0, f64::max);
    Ok(RigidFit { rotation, translation, max_error, translation_only_error })
}

fn label(v: f64) -> String {
    format!("{v:.4}")
}

/// `log₂(d_i / d_{i+1})` for values measured at successively doubled parameters.
pub fn richardson_orders(values: &[f64]) -> Vec<f64> {
    values.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}

/// Parameter grids for [`comparison_report`].
#[derive(Debug, Clone)]
pub struct ComparisonConfig {
    pub l_grid: Vec<f64>,
    pub k_grid: Vec<u64>,
    /// Doubling sequence of `K` for the two convergence items.
    pub convergence_ks: Vec<u64>,
    pub convergence_l: f64,
    pub convergence_n: RangeInclusive<i64>,
    /// Vertex range for the exact-agreement and cosh-fit items.
    pub profile_n: RangeInclusive<i64>,
    /// Half-width of the height window for the profile-smooth limit.
    pub window: f64,
    pub t_grid: TGrid,
    pub order_tolerance: f64,
}

impl Default for ComparisonConfig {
    fn default() -> Self {
        let mut k_grid: Vec<u64> = (3..=12).collect();
        k_grid.extend([1_000, 1_000_000]);
        ComparisonConfig {
            l_grid: (0..21).map(|i| 0.05 + 2.95 * i as f64 / 20.0).collect(),
            k_grid,
            convergence_ks: vec![25, 50, 100, 200, 400],
            convergence_l: 0.5,
            convergence_n: -10..=10,
            profile_n: -8..=8,
            window: 1.0,
            t_grid: TGrid::spanning(-2.0, 2.0, 1e-3).expect("static grid"),
            order_tolerance: 0.1,
        }
    }
}

impl ComparisonConfig {
    pub fn validate(&self) -> Result<()> {
        if self.l_grid.is_empty() || self.k_grid.is_empty() || self.convergence_ks.len() < 2 {
            return Err(Error::InvalidParameter("comparison grids must be nonempty".into()));
        }
        Ok(())
    }
}

fn push_orders(report: &mut CheckReport, prefix: &str, ks: &[u64], distances: &[f64], tol: f64) {
    for (i, d) in distances.iter().enumerate() {
        report.value(format!("{prefix}.distance.K{}", ks[i]), *d);
    }
    for (i, order) in richardson_orders(distances).into_iter().enumerate() {
        report.push(format!("{prefix}.order.K{}-{}", ks[i], ks[i + 1]), order - 2.0, tol);
    }
}

/// The six-item comparison of the catenoid families.
///
/// 1. PR profiles tend to the pd,rs Machigashira profile as `K → ∞`.
/// 2. BP and MW pd,rs profiles coincide.
/// 3. BP profiles differ from both Machigashira pd,rs and PR profiles.
/// 4. Smooth and MW ps,rd profiles coincide.
/// 5. Machigashira ps,rd profiles tend to the smooth profile as `K → ∞`.
/// 6. Every profile lies on a scaled cosh graph.
pub fn comparison_report(cfg: &ComparisonConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let mut report = CheckReport::new();
    let ks = &cfg.convergence_ks;

    // 1
    let l = cfg.convergence_l;
    let m = gen_m_pd_rs(l, cfg.convergence_n.clone())?.closed_form;
    let d1 = ks
        .iter()
        .map(|&k| profile_sup_distance(&gen_pr_profile(l, k, cfg.convergence_n.clone())?, &m, None))
        .collect::<Result<Vec<_>>>()?;
    push_orders(&mut report, "item1", ks, &d1, cfg.order_tolerance);

    // 2 and 3
    let mut min_margin = f64::INFINITY;
    for &l in &cfg.l_grid {
        let bp = gen_bp(l.asinh(), std::f64::consts::PI / 3.0, cfg.profile_n.clone(), 0..=0)?.profile;
        let mw = gen_mw_pd_rs(&MWPdRsParams::new(1.0, 0.0, l, cfg.profile_n.clone())?, TGrid::new(0.0, 0.1, 1)?)?.profile;
        let rel = profile_sup_distance(&bp, &mw, None)? / norm_scale(&bp, &mw);
        report.push(format!("item2.l{}", label(l)), rel, 1e-14);

        let margin = (1.0 + l * l / 2.0) - (1.0 + l * l).sqrt();
        min_margin = min_margin.min(margin);
        report.push_condition(format!("item3.bp-vs-m.l{}", label(l)), margin > 0.0, margin);
        let m1 = gen_m_pd_rs(l, 1..=1)?.closed_form;
        let bp1 = gen_bp(l.asinh(), std::f64::consts::PI / 3.0, 1..=1, 0..=0)?.profile;
        let gap = profile_sup_distance(&bp1, &m1, None)?;
        report.push(format!("item3.gap-equals-margin.l{}", label(l)), (gap - margin) / margin, 1e-9);
        for &k in &cfg.k_grid {
            let theta = crate::catenoids::dihedral_angle(k)?;
            // (1 − 2/(1 + cos θ))ℓ² = −tan²(θ/2)ℓ², written stably
            let lhs = -(theta / 2.0).tan().powi(2) * l * l;
            let rhs = (l * l / (1.0 + theta.cos())).powi(2);
            report.push_condition(
                format!("item3.bp-vs-pr.l{}.K{k}", label(l)),
                lhs < 0.0 && rhs > 0.0,
                rhs - lhs,
            );
        }
    }
    report.value("item3.min_margin", min_margin);

    // 4
    let smooth = gen_smooth(cfg.t_grid, 8)?.profile;
    for alpha in [std::f64::consts::PI / 3.0, std::f64::consts::PI / 7.0] {
        let mw = gen_mw_ps_rd(alpha, 0..=1, cfg.t_grid)?.profile;
        let rel = profile_sup_distance(&smooth, &mw, None)? / norm_scale(&smooth, &mw);
        report.push(format!("item4.alpha{}", label(alpha)), rel, 1e-14);
    }

    // 5
    let window = Some((-cfg.window, cfg.window));
    let d5 = |k: u64| -> Result<f64> {
        profile_sup_distance(&m_ps_rd_normalized(k, cfg.t_grid.iter())?, &smooth, window)
    };
    let d5s = ks.iter().map(|&k| d5(k)).collect::<Result<Vec<_>>>()?;
    push_orders(&mut report, "item5", ks, &d5s, cfg.order_tolerance);
    for &k in cfg.k_grid.iter().filter(|&&k| k >= 1000) {
        report.value(format!("item5.distance.K{k}"), d5(k)?);
    }

    // 6
    let coarse = TGrid::spanning(-2.0, 2.0, 0.25)?;
    let l = cfg.convergence_l;
    let piece = MPsRdParams::new(5, 0.2, Branch::Smallest)?;
    let fits: Vec<(&str, ProfileCurve)> = vec![
        ("smooth", gen_smooth(coarse, 8)?.profile),
        ("pr", gen_pr_profile(l, 6, cfg.profile_n.clone())?),
        ("m-pd-rs", gen_m_pd_rs(l, cfg.profile_n.clone())?.recursion),
        ("bp", gen_bp(l.asinh(), std::f64::consts::PI / 3.0, cfg.profile_n.clone(), 0..=0)?.profile),
        ("mw-pd-rs", gen_mw_pd_rs(&MWPdRsParams::new(1.0, 0.0, l, cfg.profile_n.clone())?, TGrid::new(0.0, 0.1, 1)?)?.profile),
        ("mw-ps-rd", gen_mw_ps_rd(std::f64::consts::PI / 3.0, 0..=1, coarse)?.profile),
        ("m-ps-rd", gen_m_ps_rd(&piece, TGrid::spanning(-0.2, 0.2, 0.025)?)?.raw),
    ];
    for (name, profile) in fits {
        let fit = cosh_fit(&profile)?;
        report.push(format!("item6.{name}"), fit.residual, 1e-10);
        report.value(format!("item6.{name}.a"), fit.a);
        report.value(format!("item6.{name}.b"), fit.b);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn flat(r: f64) -> ProfileCurve {
        ProfileCurve::smooth(TGrid::spanning(-r, r, r / 50.0).unwrap().iter(), |t| (1.0, t)).unwrap()
    }

    #[test]
    fn area_of_flat_profile() {
        assert!((area_functional(&flat(1.0), 1.0, 4).unwrap() - 2.0 * 2f64.sqrt()).abs() < 1e-12);
        assert!(area_functional(&flat(1.0), 1.0, 1_000_000).unwrap() < 1e-4);
        let doubled = flat(1.0).scaled(1.0);
        let doubled = ProfileCurve::new(
            ProfileKind::SmoothSampled,
            doubled.samples().iter().map(|(t, p)| (*t, Vec3::new(2.0 * p.x, 0.0, p.z))).collect(),
        )
        .unwrap();
        assert!((area_functional(&doubled, 1.0, 4).unwrap() - 4.0 * 2f64.sqrt()).abs() < 1e-12);
        assert!(matches!(area_functional(&flat(0.5), 1.0, 4), Err(Error::ProfileSpan(_))));
    }

    #[test]
    fn first_variation_vanishes_only_at_critical_profile() {
        let r = 0.2;
        let p = MPsRdParams::new(5, r, Branch::Smallest).unwrap();
        let m = gen_m_ps_rd(&p, TGrid::spanning(-r, r, 1e-3).unwrap()).unwrap();
        let bump = move |t: f64| (PI * t / (2.0 * r)).cos();
        assert!(first_variation(&m.raw, r, 5, &bump, 1e-5).unwrap().abs() < 1e-6);
        let one = ProfileCurve::smooth(TGrid::spanning(-r, r, 1e-3).unwrap().iter(), |t| (1.0, t)).unwrap();
        assert!(first_variation(&one, r, 5, &bump, 1e-5).unwrap().abs() > 1e-3);
        assert_eq!(first_variation(&m.raw, r, 5, &|_| 0.0, 1e-5).unwrap(), 0.0);
        assert!(matches!(first_variation(&m.raw, r, 5, &|_| 1.0, 1e-5), Err(Error::BoundaryNotPinned(_))));
    }

    #[test]
    fn cosh_fits() {
        let l = 1.0;
        let bp = gen_bp(f64::asinh(l), PI / 3.0, -4..=4, 0..=0).unwrap().profile;
        let fit = cosh_fit(&bp).unwrap();
        assert_eq!(fit.a, 1.0);
        assert!((fit.b - 0.881373587019543025).abs() < 1e-12 && fit.residual < 1e-12);

        let pr = cosh_fit(&gen_pr_profile(0.5, 6, -4..=4).unwrap()).unwrap();
        let expected = (1.0f64 + 0.25 / (1.0 + (PI / 3.0).cos())).acosh() / 0.5;
        assert!((pr.b - expected).abs() < 1e-12 && pr.residual < 1e-12);
        assert!((pr.b - 1.13923620007338523).abs() < 1e-12);

        let smooth = gen_smooth(TGrid::spanning(-2.0, 2.0, 0.25).unwrap(), 8).unwrap().profile;
        let fit = cosh_fit(&smooth).unwrap();
        assert_eq!(fit.a, 1.0);
        assert!((fit.b - 1.0).abs() < 1e-12);

        let sagging = ProfileCurve::discrete(-1..=1, |n| (1.0 - 0.1 * (n * n) as f64, n as f64)).unwrap();
        assert!(matches!(cosh_fit(&sagging), Err(Error::NotCosh(_))));
    }

    #[test]
    fn sup_distance() {
        let a = gen_pr_profile(0.5, 6, -3..=3).unwrap();
        assert_eq!(profile_sup_distance(&a, &a, None).unwrap(), 0.0);
        let b = gen_pr_profile(0.5, 6, 10..=12).unwrap();
        assert!(matches!(profile_sup_distance(&a, &b, None), Err(Error::DisjointRanges)));
    }

    #[test]
    fn kabsch_recovers_rotation() {
        let pts: Vec<Vec3> = (0..10).map(|i| Vec3::new(i as f64, (i * i) as f64 * 0.1, (i as f64).sin())).collect();
        let rot = nalgebra::Rotation3::from_euler_angles(0.3, -0.2, 1.1).into_inner();
        let b = Vec3::new(1.0, 2.0, 3.0);
        let moved: Vec<Vec3> = pts.iter().map(|p| rot * p + b).collect();
        let fit = rigid_fit(&pts, &moved).unwrap();
        assert!(fit.max_error < 1e-12);
        assert!((fit.rotation - rot).norm() < 1e-12);
    }

    #[test]
    fn default_suite_passes() {
        let report = comparison_report(&ComparisonConfig::default()).unwrap();
        assert!(report.overall(), "{report}");
        let d100 = report.get_value("item1.distance.K100").unwrap();
        let d200 = report.get_value("item1.distance.K200").unwrap();
        assert!((d100 / d200 - 4.0).abs() < 0.1);
        let l = 0.05f64;
        let margin = 1.0 + l * l / 2.0 - (1.0 + l * l).sqrt();
        assert_eq!(report.get_value("item3.min_margin").unwrap(), margin);
        assert!(report.get("item3.bp-vs-m.l3.0000").is_some());
        println!("{report}");
    }
}
