//! Bobenko–Pinkall discrete catenoid from its cross-ratio factorizing datum.

use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::net::QuadNet;
use crate::profile::ProfileCurve;
use crate::surface::{Grid, Vec3};
use crate::weierstrass::cross_ratio;

#[derive(Debug, Clone)]
pub struct BpCatenoid {
    /// `(cosh(c₁n) cos(c₂m), cosh(c₁n) sin(c₂m), n sinh c₁)`.
    pub net: QuadNet,
    /// The `m = 0` column, `(cosh(c₁n), 0, n sinh c₁)`.
    pub profile: ProfileCurve,
}

fn validate(c1: f64, c2: f64) -> Result<()> {
    if c1 == 0.0 || !c1.is_finite() {
        return Err(Error::InvalidParameter(format!("c1 must be finite and nonzero, got {c1}")));
    }
    if !(c2 > 0.0 && c2 <= std::f64::consts::PI) {
        return Err(Error::InvalidParameter(format!("c2 must lie in (0, pi], got {c2}")));
    }
    Ok(())
}

pub fn gen_bp(c1: f64, c2: f64, n_range: RangeInclusive<i64>, m_range: RangeInclusive<i64>) -> Result<BpCatenoid> {
    validate(c1, c2)?;
    let l = c1.sinh();
    let net = QuadNet::from_fn(n_range.clone(), m_range, |n, m| {
        let rho = (c1 * n as f64).cosh();
        let a = c2 * m as f64;
        Vec3::new(rho * a.cos(), rho * a.sin(), n as f64 * l)
    })?;
    let profile = ProfileCurve::discrete(n_range, |n| ((c1 * n as f64).cosh(), n as f64 * l))?
        .with_meta("family", "bp")
        .with_meta("c1", c1);
    Ok(BpCatenoid { net, profile })
}

/// `g(n, m) = −e^{c₁n + ic₂m}`.
pub fn bp_g(c1: f64, c2: f64, n: i64, m: i64) -> Complex64 {
    -Complex64::from_polar((c1 * n as f64).exp(), c2 * m as f64)
}

/// `x(q) − x(p) = Re(a_pq/(g_q − g_p) · (1 − g_q g_p, i(1 + g_q g_p), g_q + g_p))`.
fn edge(c1: f64, c2: f64, p: (i64, i64), q: (i64, i64)) -> Vec3 {
    let a = if p.1 == q.1 { 2.0 * (c1 / 2.0).sinh().powi(2) } else { -2.0 * (c2 / 2.0).sin().powi(2) };
    let (gp, gq) = (bp_g(c1, c2, p.0, p.1), bp_g(c1, c2, q.0, q.1));
    let f = a / (gq - gp);
    let prod = gq * gp;
    let i = Complex64::new(0.0, 1.0);
    Vec3::new((f * (1.0 - prod)).re, (f * i * (1.0 + prod)).re, (f * (gq + gp)).re)
}

#[derive(Debug, Clone)]
pub struct BpPropagation {
    pub net: QuadNet,
    /// Max vertex gap between the n-then-m and m-then-n propagation orders.
    pub closure_residual: f64,
}

fn propagate(c1: f64, c2: f64, n_ext: &RangeInclusive<i64>, m_ext: &RangeInclusive<i64>, m_first: bool) -> Grid<Vec3> {
    let (n0, m0) = (*n_ext.start(), *m_ext.start());
    let rows = (n_ext.end() - n0 + 1) as usize;
    let cols = (m_ext.end() - m0 + 1) as usize;
    let mut x = Grid::filled(rows, cols, Vec3::zeros());
    let (r0, c0) = ((-n0) as usize, (-m0) as usize);
    *x.get_mut(r0, c0) = Vec3::new(1.0, 0.0, 0.0);
    let idx = |r: usize, c: usize| (n0 + r as i64, m0 + c as i64);

    let walk_m = |x: &mut Grid<Vec3>, r: usize| {
        for c in c0..cols - 1 {
            *x.get_mut(r, c + 1) = *x.get(r, c) + edge(c1, c2, idx(r, c), idx(r, c + 1));
        }
        for c in (0..c0).rev() {
            *x.get_mut(r, c) = *x.get(r, c + 1) - edge(c1, c2, idx(r, c), idx(r, c + 1));
        }
    };
    let walk_n = |x: &mut Grid<Vec3>, c: usize| {
        for r in r0..rows - 1 {
            *x.get_mut(r + 1, c) = *x.get(r, c) + edge(c1, c2, idx(r, c), idx(r + 1, c));
        }
        for r in (0..r0).rev() {
            *x.get_mut(r, c) = *x.get(r + 1, c) - edge(c1, c2, idx(r, c), idx(r + 1, c));
        }
    };
    if m_first {
        walk_m(&mut x, r0);
        (0..cols).for_each(|c| walk_n(&mut x, c));
    } else {
        walk_n(&mut x, c0);
        (0..rows).for_each(|r| walk_m(&mut x, r));
    }
    x
}

/// Build the net edge by edge from `x(0,0) = (1,0,0)`.
pub fn bp_propagate(c1: f64, c2: f64, n_range: RangeInclusive<i64>, m_range: RangeInclusive<i64>) -> Result<BpPropagation> {
    validate(c1, c2)?;
    if n_range.is_empty() || m_range.is_empty() {
        return Err(Error::InvalidParameter(format!("empty net ranges {n_range:?} x {m_range:?}")));
    }
    let n_ext = (*n_range.start()).min(0)..=(*n_range.end()).max(0);
    let m_ext = (*m_range.start()).min(0)..=(*m_range.end()).max(0);
    let a = propagate(c1, c2, &n_ext, &m_ext, true);
    let b = propagate(c1, c2, &n_ext, &m_ext, false);
    let closure_residual = a.iter().zip(b.iter()).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max);
    let (dn, dm) = (n_range.start() - n_ext.start(), m_range.start() - m_ext.start());
    let rows = (n_range.end() - n_range.start() + 1) as usize;
    let net = QuadNet::from_fn(n_range.clone(), m_range.clone(), |n, m| {
        *a.get((n - n_range.start() + dn) as usize, (m - m_range.start() + dm) as usize)
    })?;
    debug_assert_eq!(net.rows(), rows);
    Ok(BpPropagation { net, closure_residual })
}

/// Cross-ratios of `g` on every elementary quad, keyed by lower-left index.
pub fn bp_cross_ratios(
    c1: f64,
    c2: f64,
    n_range: RangeInclusive<i64>,
    m_range: RangeInclusive<i64>,
) -> Result<Vec<((i64, i64), Complex64)>> {
    validate(c1, c2)?;
    let (n1, m1) = (*n_range.end(), *m_range.end());
    let mut out = Vec::new();
    for n in n_range.clone().filter(|&n| n < n1) {
        for m in m_range.clone().filter(|&m| m < m1) {
            let g = |dn: i64, dm: i64| bp_g(c1, c2, n + dn, m + dm);
            out.push(((n, m), cross_ratio(g(0, 0), g(1, 0), g(1, 1), g(0, 1))?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    #[test]
    fn closed_form_vertices() {
        let bp = gen_bp(1f64.asinh(), TAU / 6.0, -1..=1, 0..=5).unwrap();
        assert_eq!(bp.net.vertex(0, 0).unwrap(), Vec3::new(1.0, 0.0, 0.0));
        let v = bp.net.vertex(1, 0).unwrap();
        assert!((v - Vec3::new(2f64.sqrt(), 0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn profile_independent_of_c2() {
        let a = gen_bp(0.6, PI / 3.0, -3..=3, 0..=2).unwrap();
        let b = gen_bp(0.6, PI / 8.0, -3..=3, 0..=2).unwrap();
        assert_eq!(a.profile, b.profile);
        assert_eq!(a.net.column(0), b.net.column(0));
    }

    #[test]
    fn propagation_reproduces_closed_form() {
        let (c1, c2) = (0.7, TAU / 9.0);
        let p = bp_propagate(c1, c2, 0..=4, 0..=8).unwrap();
        assert!(p.closure_residual < 1e-12);
        let bp = gen_bp(c1, c2, 0..=4, 0..=8).unwrap();
        assert!(p.net.max_vertex_distance(&bp.net).unwrap() < 1e-12);
        for m in 0..=8 {
            let v = p.net.vertex(0, m).unwrap();
            let a = c2 * m as f64;
            assert!((v - Vec3::new(a.cos(), a.sin(), 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn propagation_off_origin_range() {
        let (c1, c2) = (-0.4, 0.9);
        let p = bp_propagate(c1, c2, 2..=4, -3..=-1).unwrap();
        let bp = gen_bp(c1, c2, 2..=4, -3..=-1).unwrap();
        assert!(p.net.max_vertex_distance(&bp.net).unwrap() < 1e-12);
    }

    #[test]
    fn constant_cross_ratio() {
        let cr = bp_cross_ratios(1.0, PI / 2.0, 0..=1, 0..=1).unwrap();
        let expected = -(0.5f64).sinh().powi(2) / (PI / 4.0).sin().powi(2);
        assert_eq!(cr.len(), 1);
        assert!((cr[0].1 - expected).norm() < 1e-12);
    }

    #[test]
    fn invalid_parameters() {
        assert!(gen_bp(0.0, 1.0, 0..=1, 0..=1).is_err());
        assert!(bp_propagate(1.0, 4.0, 0..=1, 0..=1).is_err());
    }
}
