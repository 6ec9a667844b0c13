//! Deterministic text emitters: SVG curve/chart plots, CSV marker
//! tables, and Wavefront OBJ meshes. Identical inputs produce
//! byte-identical outputs.

mod csv;
mod fmt;
mod obj;
mod svg;

pub use csv::emit_csv_markers;
pub use obj::emit_obj_mesh;
pub use svg::{
    emit_svg_curve, emit_svg_theta_plot, SvgOptions, COLOR_NEGATIVE, COLOR_POSITIVE, COLOR_RIDGE,
};
