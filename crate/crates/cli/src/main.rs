//! `wrp`: exact shortest paths through one weighted axis-aligned rectangle.
//!
//! Subcommands: `shortest` (point-to-point query), `spm` (shortest path map
//! rendering and curve catalog), `oracle` (brute-force cross-check), and
//! `acmq-check` (non-solvability certificate verification).
//!
//! Exit codes: 0 success; 1 malformed flags; 2 unsupported configuration
//! (both endpoints strictly outside the rectangle); 3 internal consistency
//! failure; 4 file I/O failure; 5 failed certificate component.

mod output;
mod svg;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use wrp_core::geometry::{CanonicalScene, Point, Rect, SourceLocation};
use wrp_core::{cert, oracle, spm, Error as CoreError};

#[derive(Parser)]
#[command(
    name = "wrp",
    version,
    about = "Exact shortest paths for a single weighted rectangle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QueryFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapFormat {
    Svg,
    Json,
}

#[derive(Args)]
struct SceneArgs {
    /// Region weight alpha (ambient weight is 1).
    #[arg(long)]
    alpha: f64,
    /// Rectangle as x0,y0,x1,y1.
    #[arg(long, value_parser = parse_rect, allow_hyphen_values = true)]
    rect: Rect,
    /// Source point as x,y (on the boundary or inside the rectangle).
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    s: Point,
    /// Target point as x,y.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    t: Point,
}

#[derive(Subcommand)]
enum Command {
    /// Shortest path between two points; output in the caller's frame.
    Shortest {
        #[command(flatten)]
        scene: SceneArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: QueryFormat,
    },
    /// Shortest-path-map bisectors and region shading for a canonical scene.
    Spm {
        /// Region weight alpha.
        #[arg(long)]
        alpha: f64,
        /// Source abscissa on the top boundary of the unit-height rectangle.
        #[arg(long, conflicts_with = "source")]
        sx: Option<f64>,
        /// Interior source as x,y in canonical coordinates.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        source: Option<Point>,
        /// Rectangle width in canonical units (default: 2*max(1, source x)).
        #[arg(long)]
        width: Option<f64>,
        /// Region to render, as x0,y0,x1,y1 (default derived from the scene).
        #[arg(long, value_parser = parse_rect, allow_hyphen_values = true)]
        bbox: Option<Rect>,
        /// Shading grid resolution (>= 16).
        #[arg(long, default_value_t = 64)]
        resolution: usize,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "svg")]
        format: MapFormat,
    },
    /// Closed form vs brute-force oracle comparison.
    Oracle {
        #[command(flatten)]
        scene: SceneArgs,
        /// Boundary samples per edge for the oracle graph.
        #[arg(long, default_value_t = 400)]
        steiner: usize,
        /// Maximum refinement sweeps.
        #[arg(long, default_value_t = 200)]
        sweeps: usize,
    },
    /// Verify the non-solvability certificate for the quadrant scenario.
    AcmqCheck {
        /// Substitute this prime for the first certificate prime (59).
        #[arg(long)]
        prime_override: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: QueryFormat,
    },
}

fn parse_point(s: &str) -> Result<Point, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected x,y but got '{s}'"));
    }
    let x: f64 = parts[0].trim().parse().map_err(|e| format!("{e}"))?;
    let y: f64 = parts[1].trim().parse().map_err(|e| format!("{e}"))?;
    Ok(Point::new(x, y))
}

fn parse_rect(s: &str) -> Result<Rect, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected x0,y0,x1,y1 but got '{s}'"));
    }
    let v: Result<Vec<f64>, _> = parts.iter().map(|p| p.trim().parse::<f64>()).collect();
    let v = v.map_err(|e| format!("{e}"))?;
    Rect::new(v[0], v[1], v[2], v[3]).map_err(|e| format!("{e}"))
}

fn exit_code_for(err: &CoreError) -> u8 {
    match err {
        CoreError::SourceOutsideUnsupported => 2,
        CoreError::DegenerateRectangle(_)
        | CoreError::WeightOutOfRange(_)
        | CoreError::SourceAtCorner
        | CoreError::SourceNotOnBoundary
        | CoreError::SourceNotInside
        | CoreError::EmptyBbox
        | CoreError::PairNotInCatalog(..) => 1,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}

fn run(cli: Cli) -> Result<(), u8> {
    match cli.command {
        Command::Shortest { scene, format } => cmd_shortest(scene, format),
        Command::Spm {
            alpha,
            sx,
            source,
            width,
            bbox,
            resolution,
            out,
            format,
        } => cmd_spm(alpha, sx, source, width, bbox, resolution, out, format),
        Command::Oracle {
            scene,
            steiner,
            sweeps,
        } => cmd_oracle(scene, steiner, sweeps),
        Command::AcmqCheck {
            prime_override,
            format,
        } => cmd_acmq_check(prime_override, format),
    }
}

fn cmd_shortest(args: SceneArgs, format: QueryFormat) -> Result<(), u8> {
    let answer = wrp_core::solve_query(args.rect, args.s, args.t, args.alpha).map_err(|e| {
        eprintln!("error: {e}");
        exit_code_for(&e)
    })?;
    match format {
        QueryFormat::Json => {
            let json = output::QueryResultJson::from(&answer);
            println!(
                "{}",
                serde_json::to_string_pretty(&json).expect("serializable")
            );
        }
        QueryFormat::Text => print!("{}", output::query_text(&answer)),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_spm(
    alpha: f64,
    sx: Option<f64>,
    source: Option<Point>,
    width: Option<f64>,
    bbox: Option<Rect>,
    resolution: usize,
    out: Option<std::path::PathBuf>,
    format: MapFormat,
) -> Result<(), u8> {
    if resolution < 16 {
        eprintln!("error: --resolution must be at least 16");
        return Err(1);
    }
    let usage = |e: CoreError| {
        eprintln!("error: {e}");
        exit_code_for(&e)
    };
    let scene = match (sx, source) {
        (Some(s_x), None) => {
            let w = width.unwrap_or_else(|| 2.0 * s_x.max(1.0));
            CanonicalScene::boundary(alpha, s_x, w).map_err(usage)?
        }
        (None, Some(p)) => {
            let w = width.unwrap_or_else(|| 2.0 * p.x.max(1.0));
            CanonicalScene::interior(alpha, p, w).map_err(usage)?
        }
        _ => {
            eprintln!("error: exactly one of --sx or --source is required");
            return Err(1);
        }
    };
    let catalog = match scene.source {
        SourceLocation::OnTopBoundary { .. } => spm::bisector_catalog(&scene).map_err(usage)?,
        SourceLocation::Interior(_) => spm::interior_catalog(&scene).map_err(usage)?,
    };
    let s = scene.source_point();
    let bbox = bbox.unwrap_or_else(|| {
        Rect::new(
            -2.0 - s.x,
            -3.0,
            scene.width.min(2.0 * s.x.max(1.0)) + 0.5,
            1.5,
        )
        .expect("default bbox is valid")
    });

    let rendered = match format {
        MapFormat::Svg => {
            let grid = spm::sample_spm_grid(&scene, bbox, resolution).map_err(usage)?;
            let mut map = svg::SvgMap::new(bbox);
            map.shade(&grid);
            map.rectangle(&scene);
            for curve in &catalog {
                map.polyline(&svg::render_samples(curve, &scene, bbox), curve.pair);
            }
            map.source_marker(s);
            map.finish()
        }
        MapFormat::Json => {
            let curves = catalog
                .iter()
                .map(|c| {
                    let samples = svg::render_samples(c, &scene, bbox)
                        .into_iter()
                        .map(|p| [p.x, p.y])
                        .collect();
                    output::curve_json(c, samples)
                })
                .collect();
            let doc = output::SpmJson {
                alpha,
                source: [s.x, s.y],
                width: scene.width,
                curves,
            };
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
    };
    match out {
        Some(path) => std::fs::write(&path, rendered).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            4u8
        })?,
        None => println!("{rendered}"),
    }
    Ok(())
}

fn cmd_oracle(args: SceneArgs, steiner: usize, sweeps: usize) -> Result<(), u8> {
    let fail = |e: CoreError| {
        eprintln!("error: {e}");
        exit_code_for(&e)
    };
    let answer = wrp_core::solve_query(args.rect, args.s, args.t, args.alpha).map_err(fail)?;

    // Straight-segment short circuit for weight 1: the oracle agrees exactly.
    let (raw_len, refined_len) = if (args.alpha - 1.0).abs() < 1e-12 {
        (answer.length, answer.length)
    } else {
        let tol = 1e-9 * args.rect.width().max(args.rect.height()).max(1.0);
        let (s, t) = if args.rect.contains_closed(args.s, tol) {
            (args.s, args.t)
        } else {
            (args.t, args.s)
        };
        let (scene, frame, t_c) =
            wrp_core::normalize_scene(args.rect, s, t, args.alpha).map_err(fail)?;
        let raw = oracle::oracle_shortest(&scene, t_c, steiner);
        let refined = oracle::refine_path_capped(&scene, &raw.polyline, sweeps).map_err(fail)?;
        (
            frame.length_to_original(raw.length),
            frame.length_to_original(refined.length),
        )
    };
    let gap = (refined_len - answer.length).abs() / answer.length.max(1e-300);
    println!("closed_form: {:.16e}", answer.length);
    println!("oracle_raw: {:.16e}", raw_len);
    println!("oracle_refined: {:.16e}", refined_len);
    println!("relative_gap: {:.3e}", gap);
    if gap <= 1e-4 {
        Ok(())
    } else {
        eprintln!("error: oracle gap {gap:.3e} exceeds 1e-4");
        Err(3)
    }
}

fn cmd_acmq_check(prime_override: Option<u64>, format: QueryFormat) -> Result<(), u8> {
    let report = match prime_override {
        Some(p) => {
            cert::verify_certificate_with_primes([p, cert::CERT_PRIMES[1], cert::CERT_PRIMES[2]])
        }
        None => cert::verify_certificate(),
    };
    match format {
        QueryFormat::Json => {
            let json = output::CertificateJson::from(&report);
            println!(
                "{}",
                serde_json::to_string_pretty(&json).expect("serializable")
            );
        }
        QueryFormat::Text => {
            for (prime, degrees) in &report.degree_patterns {
                println!("factor degrees mod {prime}: {degrees:?}");
            }
            for (prime, sep) in &report.separable {
                println!("separable mod {prime}: {sep}");
            }
            println!("snell_root: {:.16e}", report.snell_root);
            println!(
                "polynomial_residual_at_root: {:.3e}",
                report.polynomial_residual_at_root
            );
            println!("span_residual: {:.3e}", report.span_residual);
            println!("verdict: {}", if report.pass { "pass" } else { "fail" });
            for f in &report.failures {
                println!("failure: {f}");
            }
        }
    }
    if report.pass {
        Ok(())
    } else {
        Err(5)
    }
}
