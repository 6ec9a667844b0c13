//! Regenerate the committed gallery configuration files in `configs/`.
//!
//! Run from the crate root: `cargo run --example dump_configs`

use std::fs;
use std::path::Path;

use tangle::gallery::GalleryFigure;

fn main() -> std::io::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    fs::create_dir_all(&dir)?;
    for figure in GalleryFigure::ALL {
        for (name, cfg) in figure.configs() {
            let mut json = serde_json::to_string_pretty(&cfg).expect("serialize config");
            json.push('\n');
            let path = dir.join(format!("{name}.json"));
            fs::write(&path, json)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}
