//! Export every family to a directory: OBJ meshes and profile CSVs.
//!
//! cargo run --example export_family -- [dir]

use std::f64::consts::{PI, TAU};
use std::path::PathBuf;

use discrete_catenoids::catenoids::*;
use discrete_catenoids::io::{export_obj, export_profile_csv, QuadMesh};
use discrete_catenoids::surface::TGrid;

fn main() -> discrete_catenoids::error::Result<()> {
    let dir: PathBuf = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("catenoids"));
    std::fs::create_dir_all(&dir).map_err(|e| discrete_catenoids::error::Error::Io { path: dir.clone(), source: e })?;

    let heights = TGrid::spanning(-1.5, 1.5, 0.05)?;
    let bp = gen_bp(0.5f64.asinh(), TAU / 12.0, -4..=4, 0..=11)?;
    let piece = gen_m_ps_rd(&MPsRdParams::new(8, 0.2, Branch::Smallest)?, TGrid::spanning(-0.2, 0.2, 0.01)?)?;
    let profiles = [
        ("smooth", gen_smooth(heights, 24)?.profile),
        ("pr", gen_pr_profile(0.5, 12, -4..=4)?),
        ("m-pd-rs", gen_m_pd_rs(0.5, -4..=4)?.recursion),
        ("bp", bp.profile.clone()),
        ("mw-pd-rs", gen_mw_pd_rs(&MWPdRsParams::new(1.0, 0.0, 0.5, -4..=4)?, TGrid::new(0.0, 0.1, 1)?)?.profile),
        ("mw-ps-rd", gen_mw_ps_rd(PI / 6.0, 0..=11, heights)?.profile),
        ("m-ps-rd", piece.normalized.clone()),
    ];
    for (name, profile) in &profiles {
        export_profile_csv(profile, dir.join(format!("{name}.csv")))?;
        export_obj(&QuadMesh::revolve(profile, 24)?, dir.join(format!("{name}.obj")))?;
    }
    export_obj(&QuadMesh::from_net(&bp.net, true)?, dir.join("bp-net.obj"))?;
    println!("wrote {} profiles and meshes to {}", profiles.len(), dir.display());
    Ok(())
}
