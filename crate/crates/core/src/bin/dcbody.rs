use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dcbody::complexspace::CmBody;
use dcbody::diffbody::{body_from_measure, dc_oracle, dc_planar, dc_planar_sampled, dc_polytope};
use dcbody::harmonic::multiplier_table;
use dcbody::io::{read_body, write_body, Body};
use dcbody::planar::{fourier_measure, fourier_support, Convention, PlanarBody, Point2, Polygon2};
use dcbody::verify::{classify_m1, classify_m2, run_suite, KernelProbe, Suite};
use dcbody::{Error, Result};

/// Complex difference bodies: construction, spectra, classification,
/// verification suites and figures.
#[derive(Parser)]
#[command(name = "dcbody", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Raw,
    Multiplier,
}

#[derive(Subcommand)]
enum Command {
    /// Build D_C K and write it as JSON.
    Compute {
        #[arg(long = "C")]
        c: PathBuf,
        #[arg(long = "K")]
        k: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fourier coefficients of a planar support function or measure.
    Fourier {
        #[arg(long)]
        body: PathBuf,
        #[arg(long = "J", default_value_t = 32)]
        j: usize,
        #[arg(long, value_enum, default_value = "raw")]
        convention: ConventionArg,
    },
    /// The multiplier table of C as a list of {k, l, re, im}.
    Multipliers {
        #[arg(long = "C")]
        c: PathBuf,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
    },
    /// Predicted and observed shape classes of D_C K.
    Classify {
        #[arg(long = "C")]
        c: PathBuf,
        #[arg(long = "K")]
        k: PathBuf,
        /// Planar frequency cutoff.
        #[arg(long = "J", default_value_t = 32)]
        j: usize,
        #[arg(long, default_value_t = 1e-6)]
        eps: f64,
        /// Seed of the probe directions in C^2.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Run a verification suite; exits with 1 if any contract check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200_000)]
        samples: usize,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Draw a planar body, or the projection of a body onto a complex line.
    Render {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Comma-separated real coordinates of the direction ξ.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        project: Option<Vec<f64>>,
    },
}

fn polygon_of(b: Body, role: &str) -> Result<Polygon2> {
    match b {
        Body::Polygon(p) => Ok(p),
        Body::Measure(mu) => body_from_measure(&mu),
        Body::Cm(CmBody::Polytope(p)) if p.m() == 1 => {
            Polygon2::from_points(&p.vertices().map(|v| Point2::new(v[0], v[1])).collect::<Vec<_>>())
        }
        other => Err(Error::Unsupported(format!("{role} must be a polygon, got {}", other.kind()))),
    }
}

fn planar_of(b: Body, role: &str) -> Result<PlanarBody> {
    match b {
        Body::Sampled(s) => Ok(s.into()),
        other => Ok(polygon_of(other, role)?.into()),
    }
}

fn compute(c: Body, k: Body) -> Result<Body> {
    let c = polygon_of(c, "C")?;
    Ok(match k {
        Body::Polygon(p) => Body::Polygon(dc_planar(&c, &p)),
        Body::Measure(mu) => Body::Polygon(dc_planar(&c, &body_from_measure(&mu)?)),
        Body::Sampled(s) => Body::Sampled(dc_planar_sampled(&c.into(), &s)?),
        Body::Cm(b) => Body::Oracle(dc_polytope(&c, &b)),
        Body::Oracle(o) => Body::Oracle(dc_oracle(&c, &o)),
    })
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(v)?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Compute { c, k, out } => {
            let d = compute(read_body(c)?, read_body(k)?)?;
            match out {
                Some(path) => write_body(path, &d)?,
                None => print_json(&serde_json::from_str::<serde_json::Value>(&d.to_json())?)?,
            }
        }
        Command::Fourier { body, j, convention } => {
            let conv = match convention {
                ConventionArg::Raw => Convention::Raw,
                ConventionArg::Multiplier => Convention::Multiplier,
            };
            let (target, spectrum) = match read_body(body)? {
                Body::Measure(mu) => ("measure", fourier_measure(&mu, j, conv)),
                other => ("support", fourier_support(&planar_of(other, "body")?, j, conv)?),
            };
            let coeffs: Vec<_> = spectrum.iter().map(|(j, c)| json!({"j": j, "re": c.re, "im": c.im})).collect();
            let conv_name = match conv {
                Convention::Raw => "raw",
                Convention::Multiplier => "multiplier",
            };
            print_json(&json!({"of": target, "convention": conv_name, "cutoff": j, "coeffs": coeffs}))?;
        }
        Command::Multipliers { c, kmax } => {
            let c = polygon_of(read_body(c)?, "C")?;
            print_json(&multiplier_table(&c, kmax).entries())?;
        }
        Command::Classify { c, k, j, eps, seed } => {
            let c = polygon_of(read_body(c)?, "C")?;
            let cl = match read_body(k)? {
                Body::Cm(b) if b.m() == 2 => classify_m2(&c, &b, &KernelProbe::standard(seed)?, eps)?,
                Body::Cm(CmBody::Ball { m: 1, radius, center }) => {
                    let s = dcbody::planar::SampledSupport2::disc(1024, radius, Point2::new(center[0], center[1]))?;
                    classify_m1(&c, &s.into(), j, eps)?
                }
                other => classify_m1(&c, &planar_of(other, "K")?, j, eps)?,
            };
            print_json(&json!({"predicted": cl.predicted, "observed": cl.observed, "agree": cl.agree()}))?;
        }
        Command::Verify { suite, seed, samples, json_out } => {
            let report = run_suite(suite, seed, samples)?;
            for section in &report.sections {
                let failures = section.failures();
                let status = if section.passed() { "PASS" } else { "FAIL" };
                println!("{status} {} ({} checks)", section.title, section.checks.len());
                for f in failures {
                    println!("    failed: {} (lhs {:.6e}, rhs {:.6e})", f.name, f.lhs, f.rhs);
                }
            }
            println!("{}", if report.passed { "all contracts hold" } else { "contract failure" });
            if let Some(path) = json_out {
                std::fs::write(path, serde_json::to_string_pretty(&report)? + "\n")?;
            }
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Render { body, svg, project } => {
            let doc = dcbody::svg::render_body(&read_body(body)?, project.as_deref())?;
            std::fs::write(svg, doc)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Schema(_) => "schema",
        Error::Io(_) => "io",
        Error::InvalidInput(_) => "invalid_input",
        Error::Unsupported(_) => "unsupported",
        Error::Resolution(_) => "resolution",
        Error::NonMeasure { .. } => "non_measure",
        Error::EmptyResult(_) => "empty_result",
        Error::Lp(_) => "lp",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            eprintln!("{}", json!({"error": "usage", "message": e.to_string().trim()}));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", json!({"error": error_kind(&e), "message": e.to_string()}));
            ExitCode::from(2)
        }
    }
}
