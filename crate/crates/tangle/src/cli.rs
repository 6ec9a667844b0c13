//! Command-line front end.
//!
//! Subcommands: `curve` (plane plots from a JSON config), `surface`
//! (revolve and export), `verify` (chart-identity report), and
//! `gallery <name>` (preset figures). Outputs are written atomically
//! (temp file + rename) with one summary line each.
//!
//! Exit codes: 0 success, 1 configuration or expression parse error,
//! 2 numeric failure, 3 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::config::{OutputFormat, RunConfig, Scene, SvgVariant};
use crate::curve::{FrameSample, MarkerSet};
use crate::error::{Error, Result};
use crate::gallery::GalleryFigure;
use crate::render::{
    emit_csv_markers, emit_obj_mesh, emit_svg_curve, emit_svg_theta_plot, SvgOptions,
};
use crate::verify::verify_scene;

#[derive(Debug, Parser)]
#[command(
    name = "tangle",
    version,
    about = "Curvature visualization by tangential angle"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Plot a plane curve with equal-angle markers.
    Curve {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Revolve the curve and export curvature-line meshes.
    Surface {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Check the chart identity numerically and print a JSON report.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Chart samples per segment.
        #[arg(long)]
        samples: Option<usize>,
        /// Seed of the sampler (overrides the config).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Produce a preset figure by name.
    Gallery {
        name: String,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

/// Run the CLI on the given argv; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Curve { config, out_dir } => {
            let cfg = load_config(&config)?;
            execute(&cfg, out_dir.as_deref(), None)?;
            Ok(0)
        }
        Cmd::Surface { config, out_dir } => {
            let mut cfg = load_config(&config)?;
            cfg.surface.enabled = true;
            execute(&cfg, out_dir.as_deref(), None)?;
            Ok(0)
        }
        Cmd::Verify {
            config,
            out_dir,
            samples,
            seed,
        } => {
            let cfg = load_config(&config)?;
            let scene = cfg.build_scene()?;
            let samples = samples.unwrap_or(50);
            let seed = seed.unwrap_or(cfg.seed);
            let report = verify_scene(&scene, samples, seed)?;
            let json = report.to_json();
            print!("{json}");
            for output in &cfg.outputs {
                if output.format == OutputFormat::Report {
                    write_atomic(&resolve(&output.path, out_dir.as_deref())?, json.as_bytes())?;
                }
            }
            Ok(if report.pass { 0 } else { 2 })
        }
        Cmd::Gallery { name, out_dir } => {
            let figure = GalleryFigure::from_name(&name)?;
            for (_, cfg) in figure.configs() {
                execute(&cfg, out_dir.as_deref(), None)?;
            }
            Ok(0)
        }
    }
}

fn load_config(path: &Path) -> Result<RunConfig> {
    let text = fs::read_to_string(path)?;
    RunConfig::from_json(&text)
}

/// Run one configuration, writing every requested output.
pub fn execute(cfg: &RunConfig, out_dir: Option<&Path>, samples: Option<usize>) -> Result<()> {
    let scene = cfg.build_scene()?;
    for output in &cfg.outputs {
        let content = match output.format {
            OutputFormat::Svg => match output.variant {
                SvgVariant::Curve => {
                    let markers = collect_markers(&scene, cfg.theta_step)?;
                    let options = SvgOptions {
                        marker_radius_frac: cfg.markers.radius_frac,
                        ..SvgOptions::default()
                    };
                    emit_svg_curve(&scene.segments, &markers, &options)?
                }
                SvgVariant::ThetaPlot => {
                    let seg = scene
                        .segments
                        .iter()
                        .max_by(|a, b| {
                            let sa = a.theta_max() - a.theta_min();
                            let sb = b.theta_max() - b.theta_min();
                            sa.partial_cmp(&sb).unwrap()
                        })
                        .expect("stratification yields at least one segment");
                    emit_svg_theta_plot(seg, 256, Some(cfg.theta_step))?
                }
            },
            OutputFormat::Csv => {
                let markers = collect_markers(&scene, cfg.theta_step)?;
                emit_csv_markers(&merge_markers(cfg.theta_step, markers))
            }
            OutputFormat::Obj => {
                let surface = scene.surface.as_ref().ok_or_else(|| {
                    Error::Config("obj output requires surface.enabled = true".into())
                })?;
                let rings = surface.equal_theta_rings(cfg.theta_step)?;
                let mesh = crate::surface::build_mesh(
                    surface,
                    &rings,
                    cfg.surface.u_count,
                    cfg.surface.include_faces,
                    &scene.tolerances,
                )?;
                emit_obj_mesh(&mesh, cfg.surface.include_faces)?
            }
            OutputFormat::Report => {
                verify_scene(&scene, samples.unwrap_or(50), cfg.seed)?.to_json()
            }
        };
        let path = resolve(&output.path, out_dir)?;
        write_atomic(&path, content.as_bytes())?;
        println!("wrote {} ({} bytes)", path.display(), content.len());
    }
    Ok(())
}

/// Equal-θ markers for every segment that admits the step.
fn collect_markers(scene: &Scene, delta_theta: f64) -> Result<Vec<MarkerSet>> {
    let mut out = Vec::new();
    for seg in &scene.segments {
        match seg.equal_theta_markers(delta_theta) {
            Ok(ms) => out.push(ms),
            Err(Error::StepTooLarge { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    if out.is_empty() {
        let seg = &scene.segments[0];
        return Err(Error::StepTooLarge {
            step: delta_theta,
            lo: seg.theta_min(),
            hi: seg.theta_max(),
        });
    }
    Ok(out)
}

/// Flatten per-segment marker sets into one list ordered by arc length.
fn merge_markers(delta_theta: f64, sets: Vec<MarkerSet>) -> MarkerSet {
    let mut markers: Vec<FrameSample> = sets.into_iter().flat_map(|m| m.markers).collect();
    markers.sort_by(|a, b| a.s.partial_cmp(&b.s).unwrap());
    MarkerSet {
        delta_theta,
        segment_index: 0,
        segment_sign: 1.0,
        markers,
    }
}

fn resolve(path: &str, out_dir: Option<&Path>) -> Result<PathBuf> {
    match out_dir {
        None => Ok(PathBuf::from(path)),
        Some(dir) => {
            fs::create_dir_all(dir)?;
            Ok(dir.join(path))
        }
    }
}

/// Write via a sibling temp file and rename, so readers never observe a
/// partial file.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let file_name = path
        .file_name()
        .ok_or_else(|| Error::Config(format!("output path `{}` has no file name", path.display())))?
        .to_string_lossy()
        .into_owned();
    let tmp = path.with_file_name(format!(".{file_name}.tmp-{}", std::process::id()));
    fs::write(&tmp, bytes)?;
    match fs::rename(&tmp, path) {
        Ok(()) => Ok(()),
        Err(e) => {
            let _ = fs::remove_file(&tmp);
            Err(e.into())
        }
    }
}
