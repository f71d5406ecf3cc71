use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::surface::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    /// Vertices indexed by an integer `n`.
    Discrete,
    /// Samples of a smooth curve indexed by a real parameter.
    SmoothSampled,
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileKind::Discrete => f.write_str("discrete"),
            ProfileKind::SmoothSampled => f.write_str("smooth-sampled"),
        }
    }
}

/// A planar generating curve in the `x₁x₃`-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileCurve {
    kind: ProfileKind,
    samples: Vec<(f64, Vec3)>,
    pub meta: BTreeMap<String, String>,
}

impl ProfileCurve {
    /// Checks that every point has `x₂ = 0` exactly and that parameters
    /// strictly increase.
    pub fn new(kind: ProfileKind, samples: Vec<(f64, Vec3)>) -> Result<Self> {
        for w in samples.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::InvalidParameter(format!(
                    "profile parameters must strictly increase ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        for (s, p) in &samples {
            if p.y != 0.0 {
                return Err(Error::InvalidParameter(format!("profile point at {s} has x2 = {}", p.y)));
            }
            if !s.is_finite() || !p.iter().all(|v| v.is_finite()) {
                return Err(Error::InvalidParameter(format!("non-finite profile sample at {s}")));
            }
        }
        Ok(ProfileCurve { kind, samples, meta: BTreeMap::new() })
    }

    /// Discrete profile `n ↦ (x(n), 0, z(n))`.
    pub fn discrete(ns: impl IntoIterator<Item = i64>, f: impl Fn(i64) -> (f64, f64)) -> Result<Self> {
        let samples = ns
            .into_iter()
            .map(|n| {
                let (x, z) = f(n);
                (n as f64, Vec3::new(x, 0.0, z))
            })
            .collect();
        ProfileCurve::new(ProfileKind::Discrete, samples)
    }

    /// Smooth profile sampled at the given parameters.
    pub fn smooth(ts: impl IntoIterator<Item = f64>, f: impl Fn(f64) -> (f64, f64)) -> Result<Self> {
        let samples = ts
            .into_iter()
            .map(|t| {
                let (x, z) = f(t);
                (t, Vec3::new(x, 0.0, z))
            })
            .collect();
        ProfileCurve::new(ProfileKind::SmoothSampled, samples)
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }
    pub fn samples(&self) -> &[(f64, Vec3)] {
        &self.samples
    }
    pub fn len(&self) -> usize {
        self.samples.len()
    }
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
    pub fn params(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|(s, _)| *s)
    }
    pub fn points(&self) -> impl Iterator<Item = &Vec3> {
        self.samples.iter().map(|(_, p)| p)
    }

    /// Sample whose parameter equals `s` (to 1e-9).
    pub fn at(&self, s: f64) -> Option<&Vec3> {
        self.samples.iter().find(|(p, _)| (p - s).abs() <= 1e-9 * s.abs().max(1.0)).map(|(_, p)| p)
    }

    /// Homothety about the origin.
    pub fn scaled(&self, factor: f64) -> Self {
        ProfileCurve {
            kind: self.kind,
            samples: self.samples.iter().map(|(s, p)| (*s, p * factor)).collect(),
            meta: self.meta.clone(),
        }
    }

    pub fn max_norm(&self) -> f64 {
        self.points().map(|p| p.norm()).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_plane_and_unsorted() {
        assert!(ProfileCurve::new(ProfileKind::Discrete, vec![(0.0, Vec3::new(1.0, 1e-300, 0.0))]).is_err());
        let p = Vec3::new(1.0, 0.0, 0.0);
        assert!(ProfileCurve::new(ProfileKind::Discrete, vec![(1.0, p), (1.0, p)]).is_err());
        assert!(ProfileCurve::new(ProfileKind::Discrete, vec![]).unwrap().is_empty());
    }
}
