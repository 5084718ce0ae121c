//! Front end for the `hirzebruch` binary.
//!
//! Every command is a pure function of its arguments and the seed; the
//! binary only prints the returned text and exits with the returned code.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hirzebruch::arith::{GaussianRational, Rational};
use hirzebruch::divisorial::wall_boundary_report;
use hirzebruch::gluing::{perversity, wall_value, z_glued, GluingParams, PerversityReport};
use hirzebruch::ktheory::{chern_of, ChernVector, NamedObject};
use hirzebruch::moduli::classify;
use hirzebruch::selfcheck::{self, Fixture};
use hirzebruch::figure;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFCHECK: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hirzebruch", version, about = "Glued stability data on Hirzebruch surfaces")]
pub struct Cli {
    /// Gluing parameters as a JSON file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Gluing parameters as inline JSON; overrides --config.
    #[arg(long, global = true)]
    pub params: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// `<param>=<from>:<to>:<steps>`, e.g. `zeta_prime.0.re=0:2:4`.
    #[arg(long, global = true)]
    pub sweep: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Central charge, perversity and wall value for one object.
    Charge {
        /// Object JSON, or one of `point`, `fiber`, `fiber-twist`.
        #[arg(long, conflicts_with = "chern")]
        object: Option<String>,
        /// Chern vector JSON `{"r":..,"a":..,"b":..,"ch2":..}`.
        #[arg(long)]
        chern: Option<String>,
    },
    /// Wall membership and divisorial-boundary position.
    Wall,
    /// Moduli of semistable objects of class `[𝒪_x]`.
    Classify,
    /// SVG of the divisorial cone and the wall.
    Plot,
    /// Runs the seeded invariant suites.
    Selfcheck {
        /// JSON fixture, e.g. a corrupted matrix entry.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
}

pub struct Outcome {
    pub text: String,
    pub code: i32,
}

#[derive(Serialize)]
pub struct ChargeReport {
    #[serde(rename = "Z")]
    pub z: GaussianRational,
    #[serde(rename = "Z_float")]
    pub z_float: (f64, f64),
    pub phase_float: f64,
    pub per: PerversityReport,
    pub wall_value: Rational,
}

/// Sweep grid: `steps` equal intervals, so `steps + 1` points.
#[derive(Clone, Debug, PartialEq)]
pub struct Sweep {
    pub path: String,
    pub from: Rational,
    pub to: Rational,
    pub steps: u32,
}

impl Sweep {
    pub fn parse(arg: &str) -> anyhow::Result<Sweep> {
        let (path, range) = arg.split_once('=').ok_or_else(|| anyhow!("sweep must look like param=from:to:steps"))?;
        let parts: Vec<&str> = range.split(':').collect();
        let [from, to, steps] = parts[..] else {
            bail!("sweep range must be from:to:steps, got {range:?}");
        };
        let steps: u32 = steps.parse().with_context(|| format!("sweep steps {steps:?}"))?;
        if steps == 0 {
            bail!("RunConfig invariant violated: sweep steps must be >= 1");
        }
        Ok(Sweep {
            path: path.to_string(),
            from: from.parse().map_err(|e| anyhow!("sweep start: {e}"))?,
            to: to.parse().map_err(|e| anyhow!("sweep end: {e}"))?,
            steps,
        })
    }

    pub fn points(&self) -> Vec<Rational> {
        let width = &(&self.to - &self.from) / &Rational::from(self.steps);
        (0..=self.steps).map(|i| &self.from + Rational::from(i) * &width).collect()
    }
}

/// Sets the field at a dotted path (`re`/`im` index complex pairs).
pub fn set_path(root: &mut Value, path: &str, value: &Rational) -> anyhow::Result<()> {
    let mut cur = root;
    for seg in path.split('.') {
        cur = match cur {
            Value::Object(map) => map.get_mut(seg).ok_or_else(|| anyhow!("sweep parameter {path:?}: no field {seg:?}"))?,
            Value::Array(items) => {
                let idx = match seg {
                    "re" => 0,
                    "im" => 1,
                    _ => seg.parse::<usize>().map_err(|_| anyhow!("sweep parameter {path:?}: bad index {seg:?}"))?,
                };
                items.get_mut(idx).ok_or_else(|| anyhow!("sweep parameter {path:?}: index {idx} out of range"))?
            }
            _ => bail!("sweep parameter {path:?} descends into a scalar"),
        };
    }
    *cur = if cur.is_number() {
        let n = value.to_i64().ok_or_else(|| anyhow!("sweep parameter {path:?} is an integer field, got {value}"))?;
        Value::from(n)
    } else {
        Value::String(value.to_string())
    };
    Ok(())
}

fn load_params(cli: &Cli) -> anyhow::Result<Value> {
    let text = match (&cli.params, &cli.config) {
        (Some(p), _) => p.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        (None, None) => bail!("gluing parameters required: pass --config <path> or --params <json>"),
    };
    serde_json::from_str(&text).context("parameters are not valid JSON")
}

fn parse_params(v: &Value) -> anyhow::Result<GluingParams> {
    serde_json::from_value(v.clone()).map_err(|e| anyhow!("{e}"))
}

fn resolve_chern(g: &GluingParams, object: &Option<String>, chern: &Option<String>) -> anyhow::Result<ChernVector> {
    if let Some(c) = chern {
        return serde_json::from_str(c).map_err(|e| anyhow!("bad Chern vector: {e}"));
    }
    let o = match object.as_deref() {
        None | Some("point") => NamedObject::SkyscraperPoint,
        Some("fiber") => NamedObject::FiberStructure,
        Some("fiber-twist") => NamedObject::FiberTwist,
        Some(js) => serde_json::from_str(js).map_err(|e| anyhow!("bad object: {e}"))?,
    };
    Ok(chern_of(g.surface(), &o))
}

pub fn charge_report(g: &GluingParams, v: &ChernVector) -> ChargeReport {
    let z = z_glued(g, v);
    let z_float = z.to_f64();
    ChargeReport {
        phase_float: z_float.1.atan2(z_float.0) / std::f64::consts::PI,
        z_float,
        z,
        per: perversity(g),
        wall_value: wall_value(g),
    }
}

fn evaluate(command: &Command, g: &GluingParams) -> anyhow::Result<Value> {
    let v = match command {
        Command::Charge { object, chern } => serde_json::to_value(charge_report(g, &resolve_chern(g, object, chern)?)),
        Command::Wall => serde_json::to_value(wall_boundary_report(g)),
        Command::Classify => serde_json::to_value(classify(g)),
        Command::Plot | Command::Selfcheck { .. } => unreachable!("handled separately"),
    };
    Ok(v?)
}

fn render(value: &impl Serialize, format: Format) -> anyhow::Result<String> {
    let mut s = match format {
        Format::Pretty => serde_json::to_string_pretty(value)?,
        _ => serde_json::to_string(value)?,
    };
    s.push('\n');
    Ok(s)
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let format = cli.format.unwrap_or(match cli.command {
        Command::Plot => Format::Svg,
        _ => Format::Json,
    });
    if (format == Format::Svg) != matches!(cli.command, Command::Plot) {
        bail!("--format svg applies to plot only, and plot emits only svg");
    }
    if cli.sweep.is_some() && matches!(cli.command, Command::Plot | Command::Selfcheck { .. }) {
        bail!("--sweep applies to charge, wall and classify");
    }

    if let Command::Selfcheck { fixture } = &cli.command {
        let fx = match fixture {
            Some(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                serde_json::from_str(&text).map_err(|e| anyhow!("bad fixture: {e}"))?
            }
            None => Fixture::clean(),
        };
        let report = selfcheck::run(cli.seed, &fx);
        let code = if report.passed { EXIT_OK } else { EXIT_SELFCHECK };
        return Ok(Outcome { text: render(&report, format)?, code });
    }

    let raw = load_params(cli)?;
    let text = match (&cli.sweep, &cli.command) {
        (None, Command::Plot) => figure::render(&parse_params(&raw)?),
        (None, cmd) => render(&evaluate(cmd, &parse_params(&raw)?)?, format)?,
        (Some(arg), cmd) => {
            let sweep = Sweep::parse(arg)?;
            let grid = sweep
                .points()
                .into_iter()
                .map(|x| {
                    let mut v = raw.clone();
                    set_path(&mut v, &sweep.path, &x)?;
                    Ok((x, parse_params(&v)?))
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            let records = grid
                .par_iter()
                .map(|(x, g)| {
                    let result = evaluate(cmd, g)?;
                    Ok(serde_json::json!({ "param": sweep.path, "value": x, "result": result }))
                })
                .collect::<anyhow::Result<Vec<Value>>>()?;
            render(&records, format)?
        }
    };
    Ok(Outcome { text, code: EXIT_OK })
}

/// Runs and writes the output; returns the process exit code.
pub fn main_with(cli: &Cli) -> i32 {
    match run(cli) {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &out.text) {
                    eprintln!("error: writing {}: {e}", path.display());
                    return EXIT_INVALID;
                }
            } else {
                print!("{}", out.text);
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_INVALID
        }
    }
}
