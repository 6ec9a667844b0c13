//! Wavefront OBJ emitter for revolution meshes.
//!
//! Rings become closed `l` loops (first index repeated at the end),
//! meridians open `l` polylines, faces optional quads. Every ring is
//! preceded by a comment carrying its station, chart value, region and
//! feature tag. Indices are 1-based; ordering is deterministic.

use super::fmt::sig;
use crate::error::{Error, Result};
use crate::surface::RevolutionMesh;

pub fn emit_obj_mesh(mesh: &RevolutionMesh, include_faces: bool) -> Result<String> {
    if mesh.vertices.is_empty() || mesh.rings.is_empty() {
        return Err(Error::EmptyInput("emit_obj_mesh needs a non-empty mesh"));
    }
    let mut out = String::with_capacity(32 * mesh.vertices.len());
    out.push_str("# revolution mesh: curvature-line rings and meridians\n");
    out.push_str(&format!(
        "# {} vertices, {} rings, {} meridians\n",
        mesh.vertices.len(),
        mesh.rings.len(),
        mesh.meridians.len()
    ));
    for v in &mesh.vertices {
        out.push_str(&format!("v {:.6} {:.6} {:.6}\n", v.x, v.y, v.z));
    }
    for (k, ring) in mesh.rings.iter().enumerate() {
        let theta = match ring.theta {
            Some(th) => sig(th, 6),
            None => "none".to_string(),
        };
        let feature = match ring.feature {
            Some(f) => f.as_str(),
            None => "none",
        };
        out.push_str(&format!(
            "# ring {k} s={} theta={theta} region={} feature={feature}\n",
            sig(ring.s, 6),
            ring.region.as_str()
        ));
        out.push('l');
        for i in mesh.ring_vertices(ring) {
            out.push_str(&format!(" {}", i + 1));
        }
        out.push_str(&format!(" {}\n", ring.first_vertex + 1));
    }
    for meridian in &mesh.meridians {
        out.push('l');
        for i in meridian {
            out.push_str(&format!(" {}", i + 1));
        }
        out.push('\n');
    }
    if include_faces {
        if let Some(faces) = &mesh.faces {
            for f in faces {
                out.push_str(&format!(
                    "f {} {} {} {}\n",
                    f[0] + 1,
                    f[1] + 1,
                    f[2] + 1,
                    f[3] + 1
                ));
            }
        }
    }
    Ok(out)
}
