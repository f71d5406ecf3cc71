//! Sample the smooth catenoid and write it as an OBJ mesh.
//!
//! cargo run --example smooth_catenoid -- [out.obj]

use discrete_catenoids::catenoids::gen_smooth;
use discrete_catenoids::io::{export_obj, QuadMesh};
use discrete_catenoids::surface::TGrid;

fn main() -> discrete_catenoids::error::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| std::env::temp_dir().join("smooth.obj").display().to_string());
    let c = gen_smooth(TGrid::spanning(-1.5, 1.5, 0.1)?, 32)?;
    for (t, p) in c.profile.samples().iter().step_by(5) {
        println!("t = {t:+.2}  x = ({:.6}, {:.1}, {:+.2})", p.x, p.y, p.z);
    }
    let mesh = QuadMesh::revolve(&c.profile, 32)?;
    export_obj(&mesh, &out)?;
    println!("{} vertices, {} quads -> {out}", mesh.vertices().len(), mesh.faces().len());
    Ok(())
}
