//! Order-4 finite differences and cumulative quadrature on uniform samples.
//!
//! Central stencils are used wherever the neighbourhood allows it; the first
//! and last two samples fall back to one-sided stencils of the same order so
//! that accuracy does not drop at the grid edges.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Minimum number of samples for the first-derivative stencils.
pub const D1_MIN_SAMPLES: usize = 5;
/// Minimum number of samples for the second-derivative stencils.
pub const D2_MIN_SAMPLES: usize = 6;
/// Minimum number of samples for [`cumulative_integral`].
pub const QUAD_MIN_SAMPLES: usize = 4;

fn combine<T>(values: &[T], start: usize, weights: &[f64], scale: f64) -> T
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T>,
{
    let mut acc = values[start] * weights[0];
    for (i, w) in weights.iter().enumerate().skip(1) {
        acc = acc + values[start + i] * *w;
    }
    acc * scale
}

/// First derivative at sample `j` of uniformly spaced `values` with step `h`.
pub fn d1<T>(values: &[T], h: f64, j: usize) -> Result<T>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    let n = values.len();
    if n < D1_MIN_SAMPLES {
        return Err(Error::Stencil { needed: D1_MIN_SAMPLES, len: n });
    }
    if j >= n {
        return Err(Error::OutsideGrid { k: 0, j });
    }
    let s = 1.0 / (12.0 * h);
    Ok(match j {
        0 => combine(values, 0, &[-25.0, 48.0, -36.0, 16.0, -3.0], s),
        1 => combine(values, 0, &[-3.0, -10.0, 18.0, -6.0, 1.0], s),
        _ if j == n - 1 => combine(values, n - 5, &[3.0, -16.0, 36.0, -48.0, 25.0], s),
        _ if j == n - 2 => combine(values, n - 5, &[-1.0, 6.0, -18.0, 10.0, 3.0], s),
        _ => combine(values, j - 2, &[1.0, -8.0, 0.0, 8.0, -1.0], s),
    })
}

/// Second derivative at sample `j`, order 4 everywhere (six-point one-sided
/// stencils at the edges).
pub fn d2<T>(values: &[T], h: f64, j: usize) -> Result<T>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    let n = values.len();
    if n < D2_MIN_SAMPLES {
        return Err(Error::Stencil { needed: D2_MIN_SAMPLES, len: n });
    }
    if j >= n {
        return Err(Error::OutsideGrid { k: 0, j });
    }
    let s = 1.0 / (12.0 * h * h);
    Ok(match j {
        0 => combine(values, 0, &[45.0, -154.0, 214.0, -156.0, 61.0, -10.0], s),
        1 => combine(values, 0, &[10.0, -15.0, -4.0, 14.0, -6.0, 1.0], s),
        _ if j == n - 1 => combine(values, n - 6, &[-10.0, 61.0, -156.0, 214.0, -154.0, 45.0], s),
        _ if j == n - 2 => combine(values, n - 6, &[1.0, -6.0, 14.0, -4.0, -15.0, 10.0], s),
        _ => combine(values, j - 2, &[-1.0, 16.0, -30.0, 16.0, -1.0], s),
    })
}

/// Integral over each cell `[t_j, t_{j+1}]` from the cubic through four
/// neighbouring samples (shifted inward at the two end cells).
pub fn cell_integrals<T>(values: &[T], h: f64) -> Result<Vec<T>>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    let n = values.len();
    if n < QUAD_MIN_SAMPLES {
        return Err(Error::Stencil { needed: QUAD_MIN_SAMPLES, len: n });
    }
    let s = h / 24.0;
    Ok((0..n - 1)
        .map(|j| {
            if j == 0 {
                combine(values, 0, &[9.0, 19.0, -5.0, 1.0], s)
            } else if j == n - 2 {
                combine(values, n - 4, &[1.0, -5.0, 19.0, 9.0], s)
            } else {
                combine(values, j - 1, &[-1.0, 13.0, 13.0, -1.0], s)
            }
        })
        .collect())
}

/// Running integral `F(t_j) - F(t_base)` at every sample, order 4.
pub fn cumulative_integral<T>(values: &[T], h: f64, base: usize, zero: T) -> Result<Vec<T>>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    if base >= values.len() {
        return Err(Error::OutsideGrid { k: 0, j: base });
    }
    let cells = cell_integrals(values, h)?;
    let mut out = vec![zero; values.len()];
    for j in base + 1..values.len() {
        out[j] = out[j - 1] + cells[j - 1];
    }
    for j in (0..base).rev() {
        out[j] = out[j + 1] - cells[j];
    }
    Ok(out)
}

/// Composite Simpson over uniform samples; an odd number of cells closes
/// with the 3/8 rule on the last three.
pub fn simpson(values: &[f64], h: f64) -> Result<f64> {
    let n = values.len();
    if n < 3 {
        return Err(Error::Stencil { needed: 3, len: n });
    }
    let cells = n - 1;
    let (even_end, tail) = if cells.is_multiple_of(2) { (n - 1, 0.0) } else if cells >= 3 {
        let m = n - 4;
        let t = 3.0 * h / 8.0 * (values[m] + 3.0 * values[m + 1] + 3.0 * values[m + 2] + values[m + 3]);
        (m, t)
    } else {
        return Err(Error::Stencil { needed: 3, len: n });
    };
    let mut acc = 0.0;
    let mut j = 0;
    while j + 2 <= even_end {
        acc += values[j] + 4.0 * values[j + 1] + values[j + 2];
        j += 2;
    }
    Ok(acc * h / 3.0 + tail)
}
