use crate::error::{Error, Result};
use crate::profile::ProfileCurve;
use crate::surface::TGrid;

use super::{discrete_rotation, IsothermicSurface};

/// The smooth catenoid `(cosh u cos v, cosh u sin v, u)`.
#[derive(Debug, Clone)]
pub struct SmoothCatenoid {
    /// `(cosh t, 0, t)` on the grid.
    pub profile: ProfileCurve,
    /// Sampled at `v = 2πk/sectors` for `k = 0..sectors`.
    pub surface: IsothermicSurface,
}

pub fn gen_smooth(t_grid: TGrid, sectors: u64) -> Result<SmoothCatenoid> {
    if sectors < 3 {
        return Err(Error::InvalidParameter(format!("need at least 3 sectors, got {sectors}")));
    }
    let profile = ProfileCurve::smooth(t_grid.iter(), |t| (t.cosh(), t))?.with_meta("family", "smooth");
    let theta = std::f64::consts::TAU / sectors as f64;
    let mut surface = discrete_rotation(|t| (t.cosh(), t), |t| (t.sinh(), 1.0), theta, 0..=sectors as i64 - 1, t_grid)?;
    surface.surface.meta.insert("family".into(), "smooth".into());
    Ok(SmoothCatenoid { profile, surface })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_samples() {
        let c = gen_smooth(TGrid::spanning(-1.0, 1.0, 0.5).unwrap(), 8).unwrap();
        assert_eq!(c.profile.at(0.0).unwrap().as_slice(), &[1.0, 0.0, 0.0]);
        let p = c.profile.at(1.0).unwrap();
        assert!((p.x - 1.5430806348152437).abs() < 1e-15 && p.z == 1.0);
        assert_eq!(c.profile.at(-1.0).unwrap().x, p.x);
    }

    #[test]
    fn too_few_sectors() {
        assert!(gen_smooth(TGrid::spanning(0.0, 1.0, 0.5).unwrap(), 2).is_err());
    }
}
