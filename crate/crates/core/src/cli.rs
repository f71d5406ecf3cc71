//! Command-line front end: `gen`, `verify` and `compare`.
//!
//! Exit codes: 0 when everything passes, 1 when a check fails or a
//! generator has no solution, 2 for usage errors.

use std::ffi::OsString;
use std::f64::consts::TAU;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catenoids::{
    bp_propagate, gen_bp, gen_m_pd_rs, gen_m_pd_rs_surface, gen_m_ps_rd, gen_mw_pd_rs, gen_mw_ps_rd, gen_pr_profile,
    gen_smooth, pr_net, Branch, IsothermicSurface, MPsRdParams, MWPdRsParams,
};
use crate::comparison::{comparison_report, ComparisonConfig};
use crate::error::{Error, Result};
use crate::invariants::{check_circular, check_conjugate, check_dual, check_isothermic, check_minimal, IsothermicData};
use crate::io::{read_surface_csv, write_obj, write_profile_csv, write_surface_csv, QuadMesh};
use crate::net::QuadNet;
use crate::profile::ProfileCurve;
use crate::report::CheckReport;
use crate::surface::{Grid, SampledSurface, SurfaceGrid, TGrid};
use crate::weierstrass::{inverse_stereographic, weierstrass_integrate, HolomorphicSpec, IntegrateOptions};

#[derive(Parser, Debug)]
#[command(name = "catenoids", version, about = "Generate and verify discrete and semi-discrete catenoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a catenoid and write it as OBJ, profile CSV or surface CSV
    Gen(GenArgs),
    /// Run invariant checks on a sampled-surface CSV file
    Verify(VerifyArgs),
    /// Run a comparison suite
    Compare(CompareArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Smooth,
    Pr,
    MPdRs,
    Bp,
    BpPropagate,
    MwPdRs,
    MwPsRd,
    MPsRd,
    Weierstrass,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Obj,
    Csv,
    Surface,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GKind {
    Linear,
    Exponential,
    ExponentialRotational,
}

#[derive(Args, Debug)]
struct GenArgs {
    family: Family,
    /// Edge length ℓ (pr, m-pd-rs)
    #[arg(long)]
    l: Option<f64>,
    /// Rotational symmetry order (pr, m-ps-rd)
    #[arg(long = "K")]
    symmetry: Option<u64>,
    /// Height step (mw-pd-rs)
    #[arg(long)]
    h: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    f0: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    c0: f64,
    /// Rotation angle (mw-ps-rd) or exponent in t (weierstrass)
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c1: Option<f64>,
    #[arg(long)]
    c2: Option<f64>,
    /// Half-height of the variational piece (m-ps-rd)
    #[arg(long)]
    r: Option<f64>,
    #[arg(long, default_value = "smallest")]
    branch: String,
    #[arg(long, allow_negative_numbers = true)]
    n_min: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    n_max: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    m_min: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    m_max: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    t_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    t_max: Option<f64>,
    #[arg(long)]
    dt: Option<f64>,
    /// Meridians when revolving a profile into a mesh
    #[arg(long, default_value_t = 24)]
    sectors: u64,
    /// Weierstrass datum
    #[arg(long, value_enum, default_value_t = GKind::Linear)]
    g: GKind,
    /// Output path; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the dual surface (surface format) to this path
    #[arg(long)]
    dual_out: Option<PathBuf>,
    /// Defaults to the extension of --out, else obj
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "conjugate,circular")]
    checks: Vec<CheckName>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Dual surface for the `dual` and `minimal` checks
    #[arg(long)]
    dual: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CheckName {
    Conjugate,
    Circular,
    Isothermic,
    Dual,
    Minimal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    /// The six-item family comparison
    #[value(name = "theorem1")]
    Families,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(long, value_enum, default_value_t = Suite::Families)]
    suite: Suite,
    /// Edge lengths for the agreement and separation items
    #[arg(long, value_delimiter = ',')]
    l_grid: Option<Vec<f64>>,
    /// Symmetry orders for the separation item
    #[arg(long = "K-grid", value_delimiter = ',')]
    k_grid: Option<Vec<u64>>,
}

/// Either a usage problem (exit 2) or a domain failure (exit 1).
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

fn required<T>(v: Option<T>, flag: &str, family: &str) -> CliResult<T> {
    match v {
        Some(v) => Ok(v),
        None => usage(format!("gen {family} needs --{flag}")),
    }
}

/// Parse `args` (including the program name) and run.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`cli_main`] with explicit output streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::Compare(a) => compare(&a, out),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// What a generator produced, before choosing an output format.
struct Generated {
    profile: Option<ProfileCurve>,
    mesh: QuadMesh,
    surface: Option<IsothermicSurface>,
    dual: Option<SampledSurface>,
}

fn t_grid(a: &GenArgs, lo: f64, hi: f64, dt: f64) -> CliResult<TGrid> {
    let (t0, t1) = (a.t_min.unwrap_or(lo), a.t_max.unwrap_or(hi));
    Ok(TGrid::spanning(t0, t1, a.dt.unwrap_or(dt))?)
}

fn n_range(a: &GenArgs, lo: i64, hi: i64) -> CliResult<std::ops::RangeInclusive<i64>> {
    let (n0, n1) = (a.n_min.unwrap_or(lo), a.n_max.unwrap_or(hi));
    if n0 > n1 {
        return usage(format!("--n-min {n0} exceeds --n-max {n1}"));
    }
    Ok(n0..=n1)
}

/// Rows `k` advance along the axis and columns `t` around it, or the
/// other way round when `k_is_angle`.
fn surface_mesh(s: &SampledSurface, k_is_angle: bool, wrap: bool) -> Result<QuadMesh> {
    let p = s.points();
    if k_is_angle {
        let t = Grid::from_fn(p.cols(), p.rows(), |r, c| *p.get(c, r));
        QuadMesh::from_grid(&t, wrap)
    } else {
        QuadMesh::from_grid(p, wrap)
    }
}

fn closes(step: f64, count: usize) -> bool {
    (step * count as f64 - TAU).abs() < 1e-9
}

fn generate(a: &GenArgs) -> CliResult<Generated> {
    let name = format!("{:?}", a.family).to_lowercase();
    Ok(match a.family {
        Family::Smooth => {
            let c = gen_smooth(t_grid(a, -2.0, 2.0, 0.05)?, a.sectors)?;
            let mesh = QuadMesh::revolve(&c.profile, a.sectors as usize)?;
            Generated { profile: Some(c.profile), mesh, surface: Some(c.surface), dual: None }
        }
        Family::Pr => {
            let (l, k) = (required(a.l, "l", &name)?, required(a.symmetry, "K", &name)?);
            let n = n_range(a, -5, 5)?;
            let profile = gen_pr_profile(l, k, n.clone())?;
            let net = pr_net(l, k, n, 0..=k as i64 - 1)?;
            Generated { profile: Some(profile), mesh: QuadMesh::from_net(&net, true)?, surface: None, dual: None }
        }
        Family::MPdRs => {
            let l = required(a.l, "l", &name)?;
            let n = n_range(a, -5, 5)?;
            let profile = gen_m_pd_rs(l, n.clone())?.recursion;
            let surface = gen_m_pd_rs_surface(l, n, t_grid(a, 0.0, TAU, 0.05)?)?;
            let mesh = QuadMesh::revolve(&profile, a.sectors as usize)?;
            Generated { profile: Some(profile), mesh, surface: Some(surface), dual: None }
        }
        Family::Bp | Family::BpPropagate => {
            let c1 = required(a.c1, "c1", &name)?;
            let c2 = a.c2.unwrap_or(TAU / 6.0);
            let n = n_range(a, -2, 2)?;
            let m_default = ((TAU / c2).round() as i64 - 1).max(1);
            let m = a.m_min.unwrap_or(0)..=a.m_max.unwrap_or(m_default);
            let bp = gen_bp(c1, c2, n.clone(), m.clone())?;
            let net: QuadNet = if a.family == Family::Bp { bp.net } else { bp_propagate(c1, c2, n, m)?.net };
            let wrap = closes(c2, net.cols());
            Generated { profile: Some(bp.profile), mesh: QuadMesh::from_net(&net, wrap)?, surface: None, dual: None }
        }
        Family::MwPdRs => {
            let h = required(a.h, "h", &name)?;
            let params = MWPdRsParams::new(a.f0, a.c0, h, n_range(a, -5, 5)?)?;
            let grid = t_grid(a, 0.0, TAU, 0.05)?;
            let mw = gen_mw_pd_rs(&params, grid)?;
            let mesh = surface_mesh(&mw.surface.surface, false, false)?;
            Generated { profile: Some(mw.profile), mesh, surface: Some(mw.surface), dual: Some(mw.dual) }
        }
        Family::MwPsRd => {
            let alpha = required(a.alpha, "alpha", &name)?;
            let k_default = ((TAU / alpha).round() as i64 - 1).max(1);
            let k = a.n_min.unwrap_or(0)..=a.n_max.unwrap_or(k_default);
            let mw = gen_mw_ps_rd(alpha, k, t_grid(a, -2.0, 2.0, 0.05)?)?;
            let wrap = closes(alpha, mw.surface.surface.grid().rows());
            let mesh = surface_mesh(&mw.surface.surface, true, wrap)?;
            Generated { profile: Some(mw.profile), mesh, surface: Some(mw.surface), dual: Some(mw.dual) }
        }
        Family::MPsRd => {
            let k = required(a.symmetry, "K", &name)?;
            let r = required(a.r, "r", &name)?;
            let branch: Branch = a.branch.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let params = MPsRdParams::new(k, r, branch)?;
            let grid = TGrid::spanning(-r, r, a.dt.unwrap_or(r / 50.0))?;
            let m = gen_m_ps_rd(&params, grid)?;
            let mesh = QuadMesh::revolve(&m.raw, k.min(a.sectors.max(3)) as usize)?;
            Generated { profile: Some(m.raw), mesh, surface: Some(m.surface), dual: None }
        }
        Family::Weierstrass => {
            let spec = match a.g {
                GKind::Linear => HolomorphicSpec::linear(),
                GKind::Exponential => HolomorphicSpec::exponential(
                    a.c.unwrap_or(1.0),
                    a.alpha.unwrap_or(1.0),
                    a.beta.unwrap_or(1.0),
                )?,
                GKind::ExponentialRotational => HolomorphicSpec::exponential_rotational(
                    a.c.unwrap_or(1.0),
                    a.alpha.unwrap_or(-1.0),
                    a.beta.unwrap_or(TAU / 12.0),
                )?,
            };
            let grid = SurfaceGrid::new(n_range(a, 0, 4)?, t_grid(a, -1.0, 1.0, 0.01)?)?;
            let w = weierstrass_integrate(&spec, &grid, IntegrateOptions::default())?;
            let sphere = inverse_stereographic(&spec, &grid)?;
            let mesh = surface_mesh(&w.surface, matches!(a.g, GKind::ExponentialRotational), false)?;
            let surface = IsothermicSurface { surface: w.surface, iso: w.iso };
            Generated { profile: None, mesh, surface: Some(surface), dual: Some(sphere.surface) }
        }
    })
}

fn gen(a: &GenArgs, out: &mut dyn Write) -> CliResult<bool> {
    let format = a.format.unwrap_or_else(|| match a.out.as_ref().and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("csv") => Format::Csv,
        _ => Format::Obj,
    });
    let g = generate(a)?;
    let mut buf = Vec::new();
    match format {
        Format::Obj => write_obj(&g.mesh, &mut buf),
        Format::Csv => match &g.profile {
            Some(p) => write_profile_csv(p, &mut buf),
            None => return usage("this family has no profile curve; use --format obj or surface"),
        },
        Format::Surface => match &g.surface {
            Some(s) => write_surface_csv(&s.surface, Some(&s.iso), &mut buf),
            None => return usage("this family is fully discrete; use --format obj or csv"),
        },
    }
    .map_err(|e| Error::Io { path: PathBuf::from("<buffer>"), source: e })?;
    emit(a.out.as_ref(), &buf, out)?;
    if let Some(path) = &a.dual_out {
        let Some(dual) = &g.dual else {
            return usage("this family has no constructed dual");
        };
        let mut buf = Vec::new();
        write_surface_csv(dual, None, &mut buf).map_err(|e| Error::Io { path: path.clone(), source: e })?;
        emit(Some(path), &buf, out)?;
    }
    Ok(true)
}

fn emit(path: Option<&PathBuf>, bytes: &[u8], out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| Error::Io { path: p.clone(), source: e }),
        None => out.write_all(bytes).map_err(|e| Error::Io { path: PathBuf::from("<stdout>"), source: e }),
    }
}

fn need_iso<'a>(iso: &'a Option<IsothermicData>, check: &str) -> CliResult<&'a IsothermicData> {
    match iso {
        Some(i) => Ok(i),
        None => usage(format!("the {check} check needs nu,sigma,tau columns in the surface file")),
    }
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<bool> {
    let file = read_surface_csv(&a.file)?;
    let dual = a.dual.as_ref().map(read_surface_csv).transpose()?;
    let mut report = CheckReport::new();
    for check in &a.checks {
        match check {
            CheckName::Conjugate => report.merge("", check_conjugate(&file.surface, a.tol)?),
            // the isothermic check already includes circularity
            CheckName::Circular if a.checks.contains(&CheckName::Isothermic) => {}
            CheckName::Circular => report.merge("", check_circular(&file.surface, a.tol)?.report),
            CheckName::Isothermic => {
                report.merge("", check_isothermic(&file.surface, need_iso(&file.iso, "isothermic")?, a.tol)?)
            }
            CheckName::Dual => {
                let Some(d) = &dual else {
                    return usage("the dual check needs --dual");
                };
                let nu = need_iso(&file.iso, "dual")?.nu();
                report.merge("", check_dual(&file.surface, &d.surface, nu, a.tol)?);
            }
            CheckName::Minimal => {
                let target = dual.as_ref().map_or(&file.surface, |d| &d.surface);
                report.merge("", check_minimal(target, a.tol)?.report);
            }
        }
    }
    write!(out, "{report}").map_err(|e| Error::Io { path: PathBuf::from("<stdout>"), source: e })?;
    Ok(report.overall())
}

fn compare(a: &CompareArgs, out: &mut dyn Write) -> CliResult<bool> {
    let mut cfg = ComparisonConfig::default();
    if let Some(l) = &a.l_grid {
        cfg.l_grid = l.clone();
    }
    if let Some(k) = &a.k_grid {
        cfg.k_grid = k.clone();
    }
    let report = match a.suite {
        Suite::Families => comparison_report(&cfg)?,
    };
    write!(out, "{report}").map_err(|e| Error::Io { path: PathBuf::from("<stdout>"), source: e })?;
    Ok(report.overall())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("catenoids").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_and_usage_codes() {
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["gen", "bp", "--bogus", "1"]).0, 2);
        assert_eq!(call(&["gen", "pr", "--l", "1"]).0, 2);
    }

    #[test]
    fn no_solution_exits_one() {
        let (code, _, err) = call(&["gen", "m-ps-rd", "--K", "3", "--r", "2", "--format", "csv"]);
        assert_eq!(code, 1);
        assert!(err.contains("no positive root"), "{err}");
    }

    #[test]
    fn profile_csv_to_stdout() {
        let (code, out, _) = call(&["gen", "bp", "--c1", "0.8813735870195430", "--n-min", "0", "--n-max", "1", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("param,x1,x2,x3\n0,1,0,0\n1,"), "{out}");
    }

    #[test]
    fn bp_mesh_wraps() {
        let (code, out, _) = call(&["gen", "bp", "--c1", "0.8813735870195430", "--c2", "1.0471975511965976", "--n-min", "-2", "--n-max", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.starts_with("v ")).count(), 30);
        assert_eq!(out.lines().filter(|l| l.starts_with("f ")).count(), 24);
    }
}
