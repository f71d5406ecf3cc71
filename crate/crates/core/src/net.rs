use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::surface::{Grid, Vec3};

/// A fully discrete net `(n, m) ↦ x(n, m)` over a rectangle of indices.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadNet {
    n_range: RangeInclusive<i64>,
    m_range: RangeInclusive<i64>,
    vertices: Grid<Vec3>,
}

impl QuadNet {
    pub fn from_fn(n_range: RangeInclusive<i64>, m_range: RangeInclusive<i64>, f: impl Fn(i64, i64) -> Vec3) -> Result<Self> {
        if n_range.is_empty() || m_range.is_empty() {
            return Err(Error::InvalidParameter(format!("empty net ranges {n_range:?} x {m_range:?}")));
        }
        let (n0, m0) = (*n_range.start(), *m_range.start());
        let rows = (n_range.end() - n0 + 1) as usize;
        let cols = (m_range.end() - m0 + 1) as usize;
        let vertices = Grid::from_fn(rows, cols, |r, c| f(n0 + r as i64, m0 + c as i64));
        Ok(QuadNet { n_range, m_range, vertices })
    }

    pub fn n_range(&self) -> RangeInclusive<i64> {
        self.n_range.clone()
    }
    pub fn m_range(&self) -> RangeInclusive<i64> {
        self.m_range.clone()
    }
    pub fn rows(&self) -> usize {
        self.vertices.rows()
    }
    pub fn cols(&self) -> usize {
        self.vertices.cols()
    }

    pub fn vertex(&self, n: i64, m: i64) -> Option<Vec3> {
        if !self.n_range.contains(&n) || !self.m_range.contains(&m) {
            return None;
        }
        let r = (n - self.n_range.start()) as usize;
        let c = (m - self.m_range.start()) as usize;
        Some(*self.vertices.get(r, c))
    }

    pub fn vertices(&self) -> &Grid<Vec3> {
        &self.vertices
    }

    /// Elementary quads `(x(n,m), x(n+1,m), x(n+1,m+1), x(n,m+1))` with their
    /// lower-left index.
    pub fn quads(&self) -> impl Iterator<Item = ((i64, i64), [Vec3; 4])> + '_ {
        let (n0, m0) = (*self.n_range.start(), *self.m_range.start());
        (0..self.rows().saturating_sub(1)).flat_map(move |r| {
            (0..self.cols().saturating_sub(1)).map(move |c| {
                let v = |dr: usize, dc: usize| *self.vertices.get(r + dr, c + dc);
                ((n0 + r as i64, m0 + c as i64), [v(0, 0), v(1, 0), v(1, 1), v(0, 1)])
            })
        })
    }

    /// The `m = m_col` column as a list of `(n, vertex)`.
    pub fn column(&self, m: i64) -> Option<Vec<(i64, Vec3)>> {
        self.m_range.contains(&m).then(|| self.n_range.clone().map(|n| (n, self.vertex(n, m).unwrap())).collect())
    }

    pub fn max_vertex_distance(&self, other: &QuadNet) -> Result<f64> {
        if self.n_range != other.n_range || self.m_range != other.m_range {
            return Err(Error::GridMismatch("nets have different index ranges".into()));
        }
        Ok(self.vertices.iter().zip(other.vertices.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }
}
