//! Quad meshes, OBJ export and the CSV interchange formats.
//!
//! All numbers are written with [`format_number`], which is locale
//! independent and round-trips bit-exactly through `str::parse::<f64>`.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::invariants::IsothermicData;
use crate::net::QuadNet;
use crate::profile::{ProfileCurve, ProfileKind};
use crate::surface::{Grid, SampledSurface, SurfaceGrid, TGrid, Vec3};

/// Shortest round-trip decimal text; exponent form outside `[1e-5, 1e16)`.
pub fn format_number(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 {
        // normalizes -0
        "0".to_string()
    } else if !x.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.to_path_buf(), source }
}

fn write_file(path: &Path, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<()> {
    let file = fs::File::create(path).map_err(io_err(path))?;
    let mut w = BufWriter::new(file);
    f(&mut w).and_then(|_| w.flush()).map_err(io_err(path))
}

/// Quads with counter-clockwise vertex order seen from outside.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadMesh {
    vertices: Vec<Vec3>,
    faces: Vec<[usize; 4]>,
}

impl QuadMesh {
    /// Index range and distinct corners are checked for every face.
    pub fn new(vertices: Vec<Vec3>, faces: Vec<[usize; 4]>) -> Result<Self> {
        for (i, f) in faces.iter().enumerate() {
            if let Some(bad) = f.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::InvalidMesh(format!("face {i} references vertex {bad} of {}", vertices.len())));
            }
            let distinct = (0..4).all(|a| (a + 1..4).all(|b| f[a] != f[b]));
            if !distinct {
                return Err(Error::InvalidMesh(format!("face {i} is degenerate: {f:?}")));
            }
        }
        Ok(QuadMesh { vertices, faces })
    }

    pub fn empty() -> Self {
        QuadMesh { vertices: Vec::new(), faces: Vec::new() }
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }
    pub fn faces(&self) -> &[[usize; 4]] {
        &self.faces
    }

    /// Mesh a grid of points whose rows advance along the axis and whose
    /// columns advance around it. `wrap_cols` closes the last column onto
    /// the first.
    pub fn from_grid(points: &Grid<Vec3>, wrap_cols: bool) -> Result<Self> {
        let (rows, cols) = points.dims();
        let vertices: Vec<Vec3> = points.iter().copied().collect();
        let idx = |r: usize, c: usize| r * cols + c % cols;
        let col_cells = if wrap_cols && cols > 2 { cols } else { cols.saturating_sub(1) };
        let mut faces = Vec::new();
        for r in 0..rows.saturating_sub(1) {
            for c in 0..col_cells {
                faces.push([idx(r, c), idx(r, c + 1), idx(r + 1, c + 1), idx(r + 1, c)]);
            }
        }
        QuadMesh::new(vertices, faces)
    }

    /// Mesh of a discrete net with `n` along the axis and `m` around it.
    pub fn from_net(net: &QuadNet, wrap_m: bool) -> Result<Self> {
        Self::from_grid(net.vertices(), wrap_m)
    }

    /// Revolve a profile into `sectors` evenly spaced meridians.
    pub fn revolve(profile: &ProfileCurve, sectors: usize) -> Result<Self> {
        if sectors < 3 {
            return Err(Error::InvalidParameter(format!("need at least 3 sectors, got {sectors}")));
        }
        let rows = profile.len();
        let samples = profile.samples();
        let points = Grid::from_fn(rows, sectors, |r, c| {
            let p = samples[r].1;
            let phi = std::f64::consts::TAU * c as f64 / sectors as f64;
            Vec3::new(p.x * phi.cos(), p.x * phi.sin(), p.z)
        });
        Self::from_grid(&points, true)
    }
}

pub fn write_obj(mesh: &QuadMesh, w: &mut dyn Write) -> io::Result<()> {
    writeln!(w, "# vertices {} faces {}", mesh.vertices.len(), mesh.faces.len())?;
    for v in &mesh.vertices {
        writeln!(w, "v {} {} {}", format_number(v.x), format_number(v.y), format_number(v.z))?;
    }
    for f in &mesh.faces {
        writeln!(w, "f {} {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1)?;
    }
    Ok(())
}

pub fn export_obj(mesh: &QuadMesh, path: impl AsRef<Path>) -> Result<()> {
    write_file(path.as_ref(), |w| write_obj(mesh, w))
}

const PROFILE_HEADER: &str = "param,x1,x2,x3";

pub fn write_profile_csv(profile: &ProfileCurve, w: &mut dyn Write) -> io::Result<()> {
    writeln!(w, "{PROFILE_HEADER}")?;
    for (s, p) in profile.samples() {
        writeln!(w, "{},{},{},{}", format_number(*s), format_number(p.x), format_number(p.y), format_number(p.z))?;
    }
    Ok(())
}

pub fn export_profile_csv(profile: &ProfileCurve, path: impl AsRef<Path>) -> Result<()> {
    write_file(path.as_ref(), |w| write_profile_csv(profile, w))
}

fn parse_field(s: &str, line: usize) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|e| Error::Parse(format!("line {line}: bad number {s:?}: {e}")))
}

fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(io_err(path))
}

/// Parse the profile CSV format. The kind is not stored in the file.
pub fn parse_profile_csv(text: &str, kind: ProfileKind) -> Result<ProfileCurve> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == PROFILE_HEADER => {}
        other => return Err(Error::Parse(format!("expected header {PROFILE_HEADER:?}, got {:?}", other.map(|l| l.1)))),
    }
    let mut samples = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::Parse(format!("line {}: expected 4 fields, got {}", i + 1, fields.len())));
        }
        let v: Vec<f64> = fields.iter().map(|f| parse_field(f, i + 1)).collect::<Result<_>>()?;
        samples.push((v[0], Vec3::new(v[1], v[2], v[3])));
    }
    ProfileCurve::new(kind, samples)
}

pub fn read_profile_csv(path: impl AsRef<Path>, kind: ProfileKind) -> Result<ProfileCurve> {
    parse_profile_csv(&read_to_string(path.as_ref())?, kind)
}

/// A sampled surface read from or written to the surface CSV format.
#[derive(Debug, Clone)]
pub struct SurfaceFile {
    pub surface: SampledSurface,
    pub iso: Option<IsothermicData>,
}

/// Header `k,t,x1,x2,x3`, plus `dx1,dx2,dx3` when the surface carries an
/// analytic derivative and `nu,sigma,tau` when `iso` is given. Rows are
/// sorted by `(k, t)`. `sigma` is left empty where it is undefined.
pub fn write_surface_csv(surface: &SampledSurface, iso: Option<&IsothermicData>, w: &mut dyn Write) -> io::Result<()> {
    let mut header = String::from("k,t,x1,x2,x3");
    if surface.has_analytic_dt() {
        header.push_str(",dx1,dx2,dx3");
    }
    if iso.is_some() {
        header.push_str(",nu,sigma,tau");
    }
    writeln!(w, "{header}")?;
    let t_grid = surface.t_grid();
    for (r, k) in surface.grid().ks().enumerate() {
        for c in 0..t_grid.len() {
            let p = surface.points().get(r, c);
            let mut line = format!(
                "{k},{},{},{},{}",
                format_number(t_grid.t(c)),
                format_number(p.x),
                format_number(p.y),
                format_number(p.z)
            );
            if let Some(d) = surface.d_t() {
                let d = d.get(r, c);
                line.push_str(&format!(",{},{},{}", format_number(d.x), format_number(d.y), format_number(d.z)));
            }
            if let Some(iso) = iso {
                let sigma = iso.sigma().get(r).map(|s| format_number(*s)).unwrap_or_default();
                line.push_str(&format!(",{},{sigma},{}", format_number(*iso.nu().get(r, c)), format_number(iso.tau()[c])));
            }
            writeln!(w, "{line}")?;
        }
    }
    Ok(())
}

pub fn export_surface_csv(surface: &SampledSurface, iso: Option<&IsothermicData>, path: impl AsRef<Path>) -> Result<()> {
    write_file(path.as_ref(), |w| write_surface_csv(surface, iso, w))
}

/// Parse the surface CSV format, inferring the grid. Rejects unsorted,
/// ragged or non-uniform data.
pub fn parse_surface_csv(text: &str) -> Result<SurfaceFile> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::Parse("empty surface file".into()))?;
    let cols: Vec<&str> = header.trim().split(',').collect();
    let has_dt = cols.len() >= 8 && cols[5..8] == ["dx1", "dx2", "dx3"];
    let iso_at = if has_dt { 8 } else { 5 };
    let has_iso = cols.len() == iso_at + 3 && cols[iso_at..] == ["nu", "sigma", "tau"];
    if cols[..5.min(cols.len())] != ["k", "t", "x1", "x2", "x3"] || cols.len() != iso_at + if has_iso { 3 } else { 0 } {
        return Err(Error::Parse(format!("unrecognised surface header {header:?}")));
    }

    // rows of (k, t, point, derivative, nu, sigma, tau)
    type Row = (i64, f64, Vec3, Vec3, f64, Option<f64>, f64);
    let mut rows: Vec<Row> = Vec::new();
    for (i, line) in lines {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != cols.len() {
            return Err(Error::Parse(format!("line {}: expected {} fields, got {}", i + 1, cols.len(), f.len())));
        }
        let k = f[0].trim().parse::<i64>().map_err(|e| Error::Parse(format!("line {}: bad k {:?}: {e}", i + 1, f[0])))?;
        let num = |j: usize| parse_field(f[j], i + 1);
        let p = Vec3::new(num(2)?, num(3)?, num(4)?);
        let d = if has_dt { Vec3::new(num(5)?, num(6)?, num(7)?) } else { Vec3::zeros() };
        let (nu, sigma, tau) = if has_iso {
            let s = f[iso_at + 1].trim();
            (num(iso_at)?, if s.is_empty() { None } else { Some(num(iso_at + 1)?) }, num(iso_at + 2)?)
        } else {
            (0.0, None, 0.0)
        };
        rows.push((k, num(1)?, p, d, nu, sigma, tau));
    }
    if rows.is_empty() {
        return Err(Error::Parse("surface file has no samples".into()));
    }

    let k0 = rows[0].0;
    let n_t = rows.iter().take_while(|r| r.0 == k0).count();
    if !rows.len().is_multiple_of(n_t) {
        return Err(Error::Parse(format!("ragged surface data: {} samples with {n_t} per row", rows.len())));
    }
    let n_k = rows.len() / n_t;
    let ts: Vec<f64> = rows[..n_t].iter().map(|r| r.1).collect();
    for (idx, row) in rows.iter().enumerate() {
        let (r, c) = (idx / n_t, idx % n_t);
        if row.0 != k0 + r as i64 || row.1 != ts[c] {
            return Err(Error::Parse(format!(
                "ragged or unsorted surface data at sample {} (k={}, t={})",
                idx + 1,
                row.0,
                row.1
            )));
        }
    }
    let t_grid = if n_t == 1 {
        TGrid::new(ts[0], 1.0, 1)?
    } else {
        let dt = (ts[n_t - 1] - ts[0]) / (n_t - 1) as f64;
        let uniform = ts.iter().enumerate().all(|(j, t)| (t - (ts[0] + j as f64 * dt)).abs() <= 1e-9 * (1.0 + t.abs()));
        if !uniform || !(dt > 0.0) {
            return Err(Error::Parse("surface t-samples are not uniformly increasing".into()));
        }
        TGrid::new(ts[0], dt, n_t)?
    };
    let grid = SurfaceGrid::new(k0..=k0 + n_k as i64 - 1, t_grid)?;
    let at = |r: usize, c: usize| &rows[r * n_t + c];
    let points = Grid::from_fn(n_k, n_t, |r, c| at(r, c).2);
    let d_t = has_dt.then(|| Grid::from_fn(n_k, n_t, |r, c| at(r, c).3));
    let surface = SampledSurface::from_parts(grid, points, d_t)?;
    let iso = if has_iso {
        let nu = Grid::from_fn(n_k, n_t, |r, c| at(r, c).4);
        let mut sigma = Vec::new();
        for r in 0..n_k {
            match at(r, 0).5 {
                Some(s) => sigma.push(s),
                None if r + 1 == n_k => {}
                None => return Err(Error::Parse(format!("missing sigma on row k={}", k0 + r as i64))),
            }
        }
        let tau = (0..n_t).map(|c| at(0, c).6).collect();
        Some(IsothermicData::new(nu, sigma, tau)?)
    } else {
        None
    };
    Ok(SurfaceFile { surface, iso })
}

pub fn read_surface_csv(path: impl AsRef<Path>) -> Result<SurfaceFile> {
    parse_surface_csv(&read_to_string(path.as_ref())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_sampled_on;

    fn obj_text(mesh: &QuadMesh) -> String {
        let mut buf = Vec::new();
        write_obj(mesh, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(2f64.sqrt()), "1.4142135623730951");
        assert_eq!(format_number(1e-7), "1e-7");
        assert_eq!(format_number(-2.5e20), "-2.5e20");
        for x in [1e-300, 0.1, 1.0 / 3.0, 123456.789, 6.02e23] {
            assert_eq!(format_number(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn unit_square_obj() {
        let v = vec![Vec3::new(0.0, 0.0, 0.0), Vec3::new(1.0, 0.0, 0.0), Vec3::new(1.0, 1.0, 0.0), Vec3::new(0.0, 1.0, 0.0)];
        let mesh = QuadMesh::new(v, vec![[0, 1, 2, 3]]).unwrap();
        let text = obj_text(&mesh);
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 4);
        assert!(text.ends_with("f 1 2 3 4\n"));
        assert_eq!(obj_text(&QuadMesh::empty()), "# vertices 0 faces 0\n");
    }

    #[test]
    fn mesh_validation() {
        let v = vec![Vec3::zeros(); 4];
        assert!(matches!(QuadMesh::new(v.clone(), vec![[0, 1, 2, 4]]), Err(Error::InvalidMesh(_))));
        assert!(matches!(QuadMesh::new(v, vec![[0, 1, 1, 2]]), Err(Error::InvalidMesh(_))));
    }

    #[test]
    fn revolved_mesh_has_outward_normals() {
        let profile = ProfileCurve::smooth([-1.0, 0.0, 1.0], |t| (t.cosh(), t)).unwrap();
        let mesh = QuadMesh::revolve(&profile, 8).unwrap();
        assert_eq!(mesh.vertices().len(), 24);
        assert_eq!(mesh.faces().len(), 16);
        for f in mesh.faces() {
            let p: Vec<Vec3> = f.iter().map(|&i| mesh.vertices()[i]).collect();
            let normal = (p[2] - p[0]).cross(&(p[3] - p[1]));
            let centroid = (p[0] + p[1] + p[2] + p[3]) / 4.0;
            let radial = Vec3::new(centroid.x, centroid.y, 0.0);
            assert!(normal.dot(&radial) > 0.0);
        }
    }

    #[test]
    fn profile_csv_rows() {
        let p = ProfileCurve::discrete(0..=1, |n| ((1.0 + n as f64).sqrt(), n as f64)).unwrap();
        let mut buf = Vec::new();
        write_profile_csv(&p, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "param,x1,x2,x3\n0,1,0,0\n1,1.4142135623730951,0,1\n");
        assert_eq!(parse_profile_csv(&text, ProfileKind::Discrete).unwrap(), p);
        let empty = ProfileCurve::new(ProfileKind::Discrete, vec![]).unwrap();
        let mut buf = Vec::new();
        write_profile_csv(&empty, &mut buf).unwrap();
        assert_eq!(buf, b"param,x1,x2,x3\n");
    }

    #[test]
    fn surface_csv_round_trip() {
        let s = build_sampled_on(|k, t| Vec3::new(t.cos(), t.sin(), 0.3 * k as f64), -1..=1, (0.0, 1.0), 0.25, Some(&|_, t| Vec3::new(-t.sin(), t.cos(), 0.0)))
            .unwrap();
        let iso = IsothermicData::new(Grid::filled(3, 5, 1.0), vec![0.09, 0.09], vec![1.0; 5]).unwrap();
        let mut buf = Vec::new();
        write_surface_csv(&s, Some(&iso), &mut buf).unwrap();
        let back = parse_surface_csv(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(back.surface.points(), s.points());
        assert_eq!(back.surface.d_t(), s.d_t());
        assert_eq!(back.iso.unwrap(), iso);
    }

    #[test]
    fn ragged_surface_rejected() {
        let text = "k,t,x1,x2,x3\n0,0,1,0,0\n0,1,1,0,0\n1,0,1,0,0\n";
        assert!(matches!(parse_surface_csv(text), Err(Error::Parse(_))));
        let unsorted = "k,t,x1,x2,x3\n0,0,1,0,0\n0,1,1,0,0\n1,1,1,0,0\n1,0,1,0,0\n";
        assert!(matches!(parse_surface_csv(unsorted), Err(Error::Parse(_))));
    }
}
