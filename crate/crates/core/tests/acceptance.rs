//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines are always printed.

use std::f64::consts::{PI, TAU};
use std::process::Command;

use discrete_catenoids::catenoids::*;
use discrete_catenoids::comparison::{
    first_variation, profile_sup_distance, richardson_orders, rigid_fit, ComparisonConfig,
};
use discrete_catenoids::error::Result;
use discrete_catenoids::invariants::{
    check_conjugate, check_isothermic, check_net_circular, check_net_isothermic, check_net_planar,
};
use discrete_catenoids::surface::{SampledSurface, SurfaceGrid, TGrid, Vec3};
use discrete_catenoids::weierstrass::*;
use nalgebra::Matrix3;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { pass, detail })
}

fn mw_recursion() -> Result<Outcome> {
    let (mut closed, mut identity) = (0.0f64, 0.0f64);
    for h in [0.1, 0.5, 1.0, 2.0] {
        let p = MWPdRsParams::new(1.0, 0.0, h, -8..=8)?;
        let mw = gen_mw_pd_rs(&p, TGrid::new(0.0, 0.1, 1)?)?;
        for k in -8..=8 {
            let exact = (k as f64 * f64::asinh(h)).cosh();
            closed = closed.max((mw.f_at(k).unwrap() - exact).abs());
        }
        identity = identity.max(product_identity_residual(&mw.f, h));
    }
    outcome(closed <= 1e-10 && identity <= 1e-12, format!("max|f-cosh|={closed:.3e} identity(rel)={identity:.3e}"))
}

fn norm_spread(s: &SampledSurface) -> f64 {
    let norms: Vec<f64> = s.iter_points().map(|p| p.norm()).collect();
    let mean = norms.iter().sum::<f64>() / norms.len() as f64;
    norms.iter().map(|n| (n - mean).abs()).fold(0.0, f64::max)
}

fn dual_sphericity() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for h in [0.5, 1.0, 2.0] {
        let p = MWPdRsParams::new(1.0, 0.0, h, -8..=8)?;
        worst = worst.max(norm_spread(&gen_mw_pd_rs(&p, TGrid::spanning(0.0, TAU, 0.01)?)?.dual));
    }
    for alpha in [PI / 3.0, PI / 7.0] {
        worst = worst.max(norm_spread(&gen_mw_ps_rd(alpha, 0..=14, TGrid::spanning(-2.0, 2.0, 0.01)?)?.dual));
    }
    outcome(worst <= 1e-10, format!("max deviation of |x*| from mean={worst:.3e}"))
}

fn weierstrass_reconstruction() -> Result<Outcome> {
    let beta = PI / 6.0;
    let spec = HolomorphicSpec::exponential_rotational(1.0, -1.0, beta)?;
    let grid = SurfaceGrid::new(0..=12, TGrid::spanning(-2.0, 2.0, 1e-3)?)?;
    let w = weierstrass_integrate(&spec, &grid, IntegrateOptions::default())?;
    let closed = gen_mw_ps_rd(beta, 0..=12, grid.t_grid)?;
    let a: Vec<Vec3> = w.surface.iter_points().copied().collect();
    let b: Vec<Vec3> = closed.surface.surface.iter_points().copied().collect();
    let fit = rigid_fit(&a, &b)?;
    outcome(
        fit.max_error <= 1e-6,
        format!("rigid max error={:.3e} (translation only {:.3e})", fit.max_error, fit.translation_only_error),
    )
}

fn compatibility() -> Result<Outcome> {
    let grid = SurfaceGrid::new(-2..=4, TGrid::spanning(-1.0, 1.0, 1e-3)?)?;
    let (mut compat, mut gap) = (0.0f64, 0.0f64);
    let specs = [
        HolomorphicSpec::linear(),
        HolomorphicSpec::exponential(1.0, 0.5, 1.0)?,
        HolomorphicSpec::exponential_rotational(1.0, -1.0, PI / 6.0)?,
    ];
    for spec in &specs {
        compat = compat.max(compatibility_residual(spec, &grid, 1e-6)?.max_residual());
        let opts = IntegrateOptions { base: Some((0, 1000)), ..Default::default() };
        let t_first = weierstrass_integrate(spec, &grid, opts)?;
        let k_first = weierstrass_integrate(spec, &grid, IntegrateOptions { path: IntegrationPath::KFirst, ..opts })?;
        for (p, q) in t_first.surface.iter_points().zip(k_first.surface.iter_points()) {
            gap = gap.max((p - q).norm());
        }
    }
    outcome(compat <= 1e-6 && gap <= 1e-8, format!("compatibility={compat:.3e} path gap={gap:.3e}"))
}

fn bp_oracle() -> Result<Outcome> {
    let (c1, c2) = (f64::asinh(0.8), TAU / 7.0);
    let prop = bp_propagate(c1, c2, -5..=5, 0..=6)?;
    let closed = gen_bp(c1, c2, -5..=5, 0..=6)?;
    let dist = prop.net.max_vertex_distance(&closed.net)?;
    let expected = -(c1 / 2.0).sinh().powi(2) / (c2 / 2.0).sin().powi(2);
    let cr = bp_cross_ratios(c1, c2, -5..=5, 0..=6)?
        .iter()
        .map(|(_, z)| (z - expected).norm())
        .fold(0.0, f64::max);
    outcome(dist <= 1e-12 && cr <= 1e-12, format!("vertex gap={dist:.3e} cross-ratio gap={cr:.3e}"))
}

fn pr_convergence() -> Result<Outcome> {
    let cfg = ComparisonConfig::default();
    let m = gen_m_pd_rs(0.5, -10..=10)?.closed_form;
    let d = cfg
        .convergence_ks
        .iter()
        .map(|&k| profile_sup_distance(&gen_pr_profile(0.5, k, -10..=10)?, &m, None))
        .collect::<Result<Vec<_>>>()?;
    let orders = richardson_orders(&d);
    let pass = orders.iter().all(|o| (o - 2.0).abs() <= 0.1);
    outcome(pass, format!("observed orders {:?}", orders.iter().map(|o| format!("{o:.4}")).collect::<Vec<_>>()))
}

fn exact_agreement() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for l in ComparisonConfig::default().l_grid {
        let bp = gen_bp(l.asinh(), PI / 3.0, -8..=8, 0..=0)?.profile;
        let mw = gen_mw_pd_rs(&MWPdRsParams::new(1.0, 0.0, l, -8..=8)?, TGrid::new(0.0, 0.1, 1)?)?.profile;
        worst = worst.max(profile_sup_distance(&bp, &mw, None)? / bp.max_norm());
    }
    let grid = TGrid::spanning(-2.0, 2.0, 1e-3)?;
    let smooth = gen_smooth(grid, 8)?.profile;
    for alpha in [PI / 3.0, PI / 7.0] {
        let mw = gen_mw_ps_rd(alpha, 0..=1, grid)?.profile;
        worst = worst.max(profile_sup_distance(&smooth, &mw, None)? / smooth.max_norm());
    }
    outcome(worst <= 1e-14, format!("max relative distance={worst:.3e}"))
}

fn separation() -> Result<Outcome> {
    let cfg = ComparisonConfig::default();
    let mut min_margin = f64::INFINITY;
    let mut signs_ok = true;
    for &l in &cfg.l_grid {
        min_margin = min_margin.min((1.0 + l * l / 2.0) - (1.0 + l * l).sqrt());
        for k in 3..=12u64 {
            let theta = TAU / k as f64;
            let lhs = (1.0 - 2.0 / (1.0 + theta.cos())) * l * l;
            let rhs = (l * l / (1.0 + theta.cos())).powi(2);
            signs_ok &= lhs < 0.0 && rhs > 0.0;
        }
    }
    outcome(
        cfg.l_grid.len() == 21 && min_margin > 0.0 && signs_ok,
        format!("{} lengths, min margin={min_margin:.6e}, sign obstruction holds={signs_ok}", cfg.l_grid.len()),
    )
}

fn criticality() -> Result<Outcome> {
    let r = 0.2;
    let params = MPsRdParams::new(5, r, Branch::Smallest)?;
    let piece = gen_m_ps_rd(&params, TGrid::spanning(-r, r, 1e-3)?)?;
    let mut basis: Vec<Box<dyn Fn(f64) -> f64>> = Vec::new();
    for j in 1..=10 {
        basis.push(Box::new(move |t: f64| (j as f64 * PI * (t + r) / (2.0 * r)).sin()));
    }
    for i in 0..10 {
        basis.push(Box::new(move |t: f64| (r * r - t * t) * t.powi(i)));
    }
    let mut worst = 0.0f64;
    for b in &basis {
        worst = worst.max(first_variation(&piece.raw, r, 5, b.as_ref(), 1e-5)?.abs());
    }
    let el = piece.euler_lagrange_residual;
    outcome(
        basis.len() == 20 && worst <= 1e-6 && el <= 1e-8,
        format!("c3={:.12} max|dA|={worst:.3e} EL residual={el:.3e}", piece.c3),
    )
}

fn invariant_suite() -> Result<Outcome> {
    let tol = 1e-8;
    let angle = TGrid::spanning(0.0, TAU, 0.01)?;
    let height = TGrid::spanning(-2.0, 2.0, 0.01)?;
    let mut failures = Vec::new();
    let mut semi = |name: &str, s: &IsothermicSurface| -> Result<()> {
        let ok = s.surface.has_analytic_dt()
            && check_conjugate(&s.surface, tol)?.overall()
            && check_isothermic(&s.surface, &s.iso, tol)?.overall();
        if !ok {
            failures.push(name.to_string());
        }
        Ok(())
    };
    semi("smooth", &gen_smooth(height, 16)?.surface)?;
    semi("m-pd-rs", &gen_m_pd_rs_surface(0.5, -6..=6, angle)?)?;
    semi("mw-pd-rs", &gen_mw_pd_rs(&MWPdRsParams::new(1.0, 0.0, 0.5, -6..=6)?, angle)?.surface)?;
    semi("mw-ps-rd", &gen_mw_ps_rd(PI / 3.0, 0..=5, height)?.surface)?;
    let piece = MPsRdParams::new(5, 0.2, Branch::Smallest)?;
    semi("m-ps-rd", &gen_m_ps_rd(&piece, TGrid::spanning(-0.2, 0.2, 1e-3)?)?.surface)?;
    let nets = [("pr", pr_net(0.5, 6, -5..=5, 0..=5)?), ("bp", gen_bp(f64::asinh(0.8), TAU / 7.0, -5..=5, 0..=6)?.net)];
    for (name, net) in &nets {
        let ok = check_net_planar(net, tol)?.overall()
            && check_net_circular(net, tol)?.overall()
            && check_net_isothermic(net, tol)?.overall();
        if !ok {
            failures.push(name.to_string());
        }
    }
    let mut cheb = 0.0f64;
    for theta in [0.1, 0.5, 1.0] {
        for n in 0..=12 {
            cheb = cheb.max((chebyshev_t(n, f64::cosh(theta)) - (n as f64 * theta).cosh()).abs());
        }
    }
    outcome(failures.is_empty() && cheb <= 1e-9, format!("failing families={failures:?} chebyshev gap={cheb:.3e}"))
}

fn rotation_equivariance() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(20261014);
    let grid = SurfaceGrid::new(0..=3, TGrid::spanning(0.0, 1.0, 1e-3)?)?;
    let spec = HolomorphicSpec::linear();
    let x = weierstrass_integrate(&spec, &grid, IntegrateOptions::default())?.surface;
    let (mut ortho, mut det, mut surf) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..100 {
        let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        let el = SU2Element::new(Complex64::new(v[0] / n, v[1] / n), Complex64::new(v[2] / n, v[3] / n))?;
        let a = su2_to_so3(&el);
        ortho = ortho.max((a.transpose() * a - Matrix3::identity()).norm());
        det = det.max((a.determinant() - 1.0).abs());
        let y = weierstrass_integrate(&mobius_transform(&spec, &el, &grid)?, &grid, IntegrateOptions::default())?.surface;
        let offsets: Vec<Vec3> = x.iter_points().zip(y.iter_points()).map(|(p, q)| q - a * p).collect();
        let mean = offsets.iter().sum::<Vec3>() / offsets.len() as f64;
        surf = surf.max(offsets.iter().map(|o| (o - mean).norm()).fold(0.0, f64::max));
    }
    outcome(
        ortho <= 1e-12 && det <= 1e-12 && surf <= 1e-6,
        format!("|A^T A - I|={ortho:.3e} |det A - 1|={det:.3e} surface gap={surf:.3e}"),
    )
}

/// The documented invocations, paired with their golden files.
const GOLDEN: [(&str, &[&str]); 3] = [
    (
        "bp.obj",
        &["gen", "bp", "--c1", "0.8813735870195430", "--c2", "1.0471975511965976", "--n-min", "-2", "--n-max", "2"],
    ),
    ("smooth.csv", &["gen", "smooth", "--t-min", "-1", "--t-max", "1", "--dt", "0.125", "--format", "csv"]),
    ("m-ps-rd.csv", &["gen", "m-ps-rd", "--K", "5", "--r", "0.2", "--dt", "0.025", "--format", "csv"]),
];

fn cli_determinism() -> Result<Outcome> {
    let dir = tempfile::tempdir().expect("tempdir");
    let golden_dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut bad = Vec::new();
    for (file, args) in GOLDEN {
        let mut runs = Vec::new();
        for run in 0..2 {
            let out = dir.path().join(format!("{run}-{file}"));
            let status = Command::new(env!("CARGO_BIN_EXE_catenoids"))
                .args(args)
                .arg("--out")
                .arg(&out)
                .status()
                .expect("spawn catenoids");
            runs.push(if status.success() { std::fs::read(&out).ok() } else { None });
        }
        let golden = std::fs::read(golden_dir.join(file)).ok();
        if runs[0].is_none() || runs[0] != runs[1] || runs[0] != golden {
            bad.push(file);
        }
    }
    outcome(bad.is_empty(), format!("{} invocations, mismatched={bad:?}", GOLDEN.len()))
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

fn main() {
    let criteria: [Criterion; 12] = [
        ("mw recursion matches closed form", mw_recursion),
        ("dual sphericity", dual_sphericity),
        ("weierstrass reconstruction of the rotational catenoid", weierstrass_reconstruction),
        ("compatibility and path independence", compatibility),
        ("bp propagation oracle", bp_oracle),
        ("pr to machigashira convergence order", pr_convergence),
        ("exact profile agreement", exact_agreement),
        ("bp separation", separation),
        ("variational criticality", criticality),
        ("invariant suite", invariant_suite),
        ("rotation equivariance", rotation_equivariance),
        ("cli determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (pass, detail) = match run() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!pass);
        println!("criterion {:02} {}: {} ({detail})", i + 1, name, if pass { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
