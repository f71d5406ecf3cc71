//! Semi-discrete surfaces `x(k, t)` sampled on a uniform `t`-grid, and the
//! operators `∂`, `Δ`, `∂Δ` acting on them.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::stencil;

pub type Vec3 = Vector3<f64>;

/// Default `t` step used by generators when the caller does not pick one.
pub const DEFAULT_DT: f64 = 1e-3;

/// A strictly increasing uniform grid `t_j = t0 + j * dt`, `j < len`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TGrid {
    t0: f64,
    dt: f64,
    len: usize,
}

impl TGrid {
    pub fn new(t0: f64, dt: f64, len: usize) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() || !t0.is_finite() {
            return Err(Error::InvalidParameter(format!("t-grid needs finite t0 and dt > 0, got t0={t0}, dt={dt}")));
        }
        if len == 0 {
            return Err(Error::InvalidParameter("t-grid must have at least one sample".into()));
        }
        Ok(TGrid { t0, dt, len })
    }

    /// Grid from `t_min` covering `[t_min, t_max]` with the number of cells
    /// rounded to the nearest integer.
    pub fn spanning(t_min: f64, t_max: f64, dt: f64) -> Result<Self> {
        if !(dt > 0.0) {
            return Err(Error::InvalidParameter(format!("dt must be positive, got {dt}")));
        }
        let span = t_max - t_min;
        if !(span >= dt * (1.0 - 1e-9)) {
            return Err(Error::InvalidParameter(format!(
                "t-interval [{t_min}, {t_max}] is shorter than dt = {dt}"
            )));
        }
        let cells = (span / dt).round() as usize;
        // re-derive dt so that the last sample lands on t_max
        TGrid::new(t_min, span / cells as f64, cells + 1)
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }
    pub fn dt(&self) -> f64 {
        self.dt
    }
    pub fn len(&self) -> usize {
        self.len
    }
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
    pub fn t(&self, j: usize) -> f64 {
        self.t0 + self.dt * j as f64
    }
    pub fn t_max(&self) -> f64 {
        self.t(self.len - 1)
    }
    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len).map(move |j| self.t(j))
    }

    /// Index of the sample at `t`, if `t` lies on the grid.
    pub fn index_of(&self, t: f64) -> Option<usize> {
        let x = (t - self.t0) / self.dt;
        let j = x.round();
        if j < 0.0 || j as usize >= self.len || (x - j).abs() > 1e-6 {
            None
        } else {
            Some(j as usize)
        }
    }
}

/// The index domain `k_range × t_grid` of a semi-discrete surface.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceGrid {
    pub k_range: RangeInclusive<i64>,
    pub t_grid: TGrid,
}

impl SurfaceGrid {
    pub fn new(k_range: RangeInclusive<i64>, t_grid: TGrid) -> Result<Self> {
        if k_range.is_empty() {
            return Err(Error::InvalidParameter(format!("empty k-range {k_range:?}")));
        }
        Ok(SurfaceGrid { k_range, t_grid })
    }
    pub fn k_start(&self) -> i64 {
        *self.k_range.start()
    }
    pub fn k_end(&self) -> i64 {
        *self.k_range.end()
    }
    pub fn rows(&self) -> usize {
        (self.k_end() - self.k_start() + 1) as usize
    }
    pub fn cols(&self) -> usize {
        self.t_grid.len()
    }
    pub fn row(&self, k: i64) -> Option<usize> {
        self.k_range.contains(&k).then(|| (k - self.k_start()) as usize)
    }
    pub fn ks(&self) -> impl Iterator<Item = i64> {
        self.k_range.clone()
    }
}

/// Row-major 2-D storage indexed by `(row, col)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Grid<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Grid { rows, cols, data: vec![value; rows * cols] }
    }
}

impl<T> Grid<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Grid { rows, cols, data }
    }

    pub fn try_from_fn<E>(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> std::result::Result<T, E>) -> std::result::Result<Self, E> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c)?);
            }
        }
        Ok(Grid { rows, cols, data })
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::GridMismatch(format!("{} values for a {rows}x{cols} grid", data.len())));
        }
        Ok(Grid { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }
    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Grid<U> {
        Grid { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

/// A semi-discrete surface sampled on a [`SurfaceGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSurface {
    grid: SurfaceGrid,
    points: Grid<Vec3>,
    d_t: Option<Grid<Vec3>>,
    pub meta: BTreeMap<String, String>,
}

impl SampledSurface {
    /// Assemble a surface from precomputed samples, validating dimensions
    /// and finiteness.
    pub fn from_parts(grid: SurfaceGrid, points: Grid<Vec3>, d_t: Option<Grid<Vec3>>) -> Result<Self> {
        let dims = (grid.rows(), grid.cols());
        if points.dims() != dims {
            return Err(Error::GridMismatch(format!("points are {:?}, grid is {dims:?}", points.dims())));
        }
        if let Some(d) = &d_t {
            if d.dims() != dims {
                return Err(Error::GridMismatch(format!("d_t is {:?}, grid is {dims:?}", d.dims())));
            }
        }
        for r in 0..dims.0 {
            for c in 0..dims.1 {
                let bad = !points.get(r, c).iter().all(|v| v.is_finite())
                    || d_t.as_ref().is_some_and(|d| !d.get(r, c).iter().all(|v| v.is_finite()));
                if bad {
                    return Err(Error::NonFinite { k: grid.k_start() + r as i64, j: c });
                }
            }
        }
        Ok(SampledSurface { grid, points, d_t, meta: BTreeMap::new() })
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }

    pub fn grid(&self) -> &SurfaceGrid {
        &self.grid
    }
    pub fn t_grid(&self) -> &TGrid {
        &self.grid.t_grid
    }
    pub fn k_range(&self) -> RangeInclusive<i64> {
        self.grid.k_range.clone()
    }
    pub fn points(&self) -> &Grid<Vec3> {
        &self.points
    }
    pub fn d_t(&self) -> Option<&Grid<Vec3>> {
        self.d_t.as_ref()
    }
    pub fn has_analytic_dt(&self) -> bool {
        self.d_t.is_some()
    }

    /// Same samples without the analytic derivative, forcing stencils.
    pub fn without_analytic_dt(&self) -> Self {
        SampledSurface { d_t: None, ..self.clone() }
    }

    pub fn point(&self, k: i64, j: usize) -> Result<Vec3> {
        let r = self.grid.row(k).ok_or(Error::OutsideGrid { k, j })?;
        if j >= self.grid.cols() {
            return Err(Error::OutsideGrid { k, j });
        }
        Ok(*self.points.get(r, j))
    }

    /// `∂x` at `(k, j)`: the analytic derivative if attached, else the
    /// order-4 stencil along the row.
    pub fn d_t_at(&self, k: i64, j: usize) -> Result<Vec3> {
        let r = self.grid.row(k).ok_or(Error::OutsideGrid { k, j })?;
        if j >= self.grid.cols() {
            return Err(Error::OutsideGrid { k, j });
        }
        match &self.d_t {
            Some(d) => Ok(*d.get(r, j)),
            None => stencil::d1(self.points.row(r), self.grid.t_grid.dt(), j),
        }
    }

    /// Apply `p ↦ R p + b` to every point (and `R` to derivatives).
    pub fn rigid_motion(&self, rotation: &Matrix3<f64>, translation: &Vec3) -> Self {
        SampledSurface {
            grid: self.grid.clone(),
            points: self.points.map(|p| rotation * p + translation),
            d_t: self.d_t.as_ref().map(|d| d.map(|v| rotation * v)),
            meta: self.meta.clone(),
        }
    }

    pub fn iter_points(&self) -> impl Iterator<Item = &Vec3> {
        self.points.iter()
    }
}

/// Sample `evaluator` over `k_range × t_grid`, optionally attaching the
/// analytic `t`-derivative.
pub fn build_sampled(
    evaluator: impl Fn(i64, f64) -> Vec3,
    k_range: RangeInclusive<i64>,
    t_grid: TGrid,
    analytic_dt: Option<&dyn Fn(i64, f64) -> Vec3>,
) -> Result<SampledSurface> {
    let grid = SurfaceGrid::new(k_range, t_grid)?;
    let (rows, cols) = (grid.rows(), grid.cols());
    let k0 = grid.k_start();
    let eval_grid = |f: &dyn Fn(i64, f64) -> Vec3| -> Result<Grid<Vec3>> {
        Grid::try_from_fn(rows, cols, |r, c| {
            let p = f(k0 + r as i64, t_grid.t(c));
            if p.iter().all(|v| v.is_finite()) {
                Ok(p)
            } else {
                Err(Error::NonFinite { k: k0 + r as i64, j: c })
            }
        })
    };
    let points = eval_grid(&evaluator)?;
    let d_t = analytic_dt.map(eval_grid).transpose()?;
    SampledSurface::from_parts(grid, points, d_t)
}

/// The t-interval form of [`build_sampled`].
pub fn build_sampled_on(
    evaluator: impl Fn(i64, f64) -> Vec3,
    k_range: RangeInclusive<i64>,
    t_interval: (f64, f64),
    dt: f64,
    analytic_dt: Option<&dyn Fn(i64, f64) -> Vec3>,
) -> Result<SampledSurface> {
    let t_grid = TGrid::spanning(t_interval.0, t_interval.1, dt)?;
    build_sampled(evaluator, k_range, t_grid, analytic_dt)
}

/// `∂x`, `∂x₁`, `Δx` and `∂Δx` along the edge `(k, t_j) – (k+1, t_j)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeDerivatives {
    pub dx: Vec3,
    pub dx1: Vec3,
    pub delta: Vec3,
    pub d_delta: Vec3,
}

pub fn discrete_ops(surface: &SampledSurface, k: i64, j: usize) -> Result<EdgeDerivatives> {
    if !surface.grid.k_range.contains(&(k + 1)) {
        return Err(Error::EdgeMissing { k });
    }
    let dx = surface.d_t_at(k, j)?;
    let dx1 = surface.d_t_at(k + 1, j)?;
    let delta = surface.point(k + 1, j)? - surface.point(k, j)?;
    Ok(EdgeDerivatives { dx, dx1, delta, d_delta: dx1 - dx })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_map_grid() {
        let s = build_sampled_on(|_, _| Vec3::zeros(), 0..=1, (0.0, 1.0), 0.5, None).unwrap();
        assert_eq!(s.points().dims(), (2, 3));
        assert!(s.iter_points().all(|p| *p == Vec3::zeros()));
    }

    #[test]
    fn smooth_catenoid_at_origin() {
        let cat = |_k: i64, t: f64| Vec3::new(t.cosh(), 0.0, t);
        let s = build_sampled_on(cat, 0..=0, (0.0, 1.0), 0.25, None).unwrap();
        assert_eq!(s.point(0, 0).unwrap(), Vec3::new(1.0, 0.0, 0.0));
    }

    #[test]
    fn nan_sample_is_named() {
        let f = |k: i64, t: f64| if k == 0 && t == 0.0 { Vec3::new(f64::NAN, 0.0, 0.0) } else { Vec3::zeros() };
        let err = build_sampled_on(f, 0..=1, (0.0, 1.0), 0.5, None).unwrap_err();
        assert!(matches!(err, Error::NonFinite { k: 0, j: 0 }));
    }

    #[test]
    fn interval_shorter_than_dt_rejected() {
        assert!(TGrid::spanning(0.0, 0.1, 0.5).is_err());
        assert!(TGrid::spanning(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn ops_on_constant_surface() {
        let s = build_sampled_on(|_, _| Vec3::new(1.0, 2.0, 3.0), 0..=1, (0.0, 1.0), 0.1, None).unwrap();
        let e = discrete_ops(&s, 0, 5).unwrap();
        assert_eq!(e.dx.norm() + e.delta.norm() + e.d_delta.norm(), 0.0);
    }

    #[test]
    fn equal_rows_have_zero_delta() {
        let cat = |_k: i64, t: f64| Vec3::new(t.cosh(), 0.0, t);
        let s = build_sampled_on(cat, 0..=1, (-1.0, 1.0), 0.01, None).unwrap();
        let e = discrete_ops(&s, 0, 100).unwrap();
        assert_eq!(e.delta, Vec3::zeros());
        assert_eq!(e.d_delta, Vec3::zeros());
    }

    #[test]
    fn stencil_derivative_of_square() {
        let s = build_sampled_on(|_, t| Vec3::new(t * t, 0.0, 0.0), 0..=1, (0.0, 2.0), 1e-3, None).unwrap();
        let j = s.t_grid().index_of(1.0).unwrap();
        let e = discrete_ops(&s, 0, j).unwrap();
        assert!((e.dx - Vec3::new(2.0, 0.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn missing_edge_and_short_rows() {
        let s = build_sampled_on(|_, t| Vec3::new(t, 0.0, 0.0), 0..=1, (0.0, 1.0), 0.5, None).unwrap();
        assert!(matches!(discrete_ops(&s, 1, 0), Err(Error::EdgeMissing { k: 1 })));
        assert!(matches!(discrete_ops(&s, 0, 1), Err(Error::Stencil { .. })));
    }

    #[test]
    fn stencil_converges_at_order_four() {
        let dev = |dt: f64| {
            let s = build_sampled_on(|_, t| Vec3::new(t.sin(), (2.0 * t).cos(), t.exp()), 0..=0, (0.0, 1.0), dt, None).unwrap();
            (0..s.t_grid().len())
                .map(|j| {
                    let t = s.t_grid().t(j);
                    let exact = Vec3::new(t.cos(), -2.0 * (2.0 * t).sin(), t.exp());
                    (s.d_t_at(0, j).unwrap() - exact).norm()
                })
                .fold(0.0, f64::max)
        };
        let ratio = dev(0.05) / dev(0.025);
        assert!((ratio - 16.0).abs() <= 0.2 * 16.0, "ratio {ratio}");
    }
}
