//! Argument parsing and the subcommands.
//!
//! Commands write into a caller-supplied sink and only after all validation
//! has passed, so a failing invocation prints nothing to standard output.

use std::fs;
use std::io::{BufRead, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use cobweb_core::cobweb::{build_hasse, permuted_subposet, HyperBox};
use cobweb_core::fbase::zeckendorf;
use cobweb_core::tiling::{for_each_tiling, verify_tiling, TilingOptions, DEFAULT_POINT_LIMIT};
use cobweb_core::{BigUint, FBaseNumeral, FSequence};
use serde_json::json;

use crate::dot::hasse_to_dot;
use crate::error::{CliError, Result};
use crate::json::{big_to_number, HasseJson, NumeralJson, TilingJson};
use crate::render::{self, RenderFormat};
use crate::spec::parse_sequence;
use crate::parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Render {
    Text,
    Svg,
}

/// Base-F numerals, cobweb posets and their tilings.
#[derive(Debug, Parser)]
#[command(name = "cobweb", version)]
pub struct Cli {
    /// natural | fibonacci | const:<p> | gauss:<q> | list:<v0,v1,...> | file:<path>
    #[arg(long, global = true, default_value = "natural")]
    pub sequence: String,
    /// Origin k of the numeral system (k >= 1).
    #[arg(long, global = true, default_value_t = 1)]
    pub origin: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Print only how many items there are.
    #[arg(long, global = true)]
    pub count_only: bool,
    /// Largest box, in points, the tiling search will attempt.
    #[arg(long, global = true, default_value_t = DEFAULT_POINT_LIMIT)]
    pub limit: usize,
    /// Only use tiles built from contiguous intervals.
    #[arg(long, global = true)]
    pub intervals_only: bool,
    /// Draw the tilings instead of listing them.
    #[arg(long, global = true, value_enum)]
    pub render: Option<Render>,
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integer to digit string. Reads one integer per line from standard
    /// input when no value is given.
    Encode { values: Vec<String> },
    /// Digit string (or numeral JSON) to integer. Reads standard input when
    /// no numeral is given.
    Decode { numerals: Vec<String> },
    /// Sum of two numerals.
    Add { a: String, b: String },
    /// Successor of a numeral.
    Succ { numeral: String },
    /// Zeckendorf representation as a sum of Fibonacci numbers.
    Zeckendorf { value: String },
    /// F-nomial coefficient [n over k].
    Fnomial { n: usize, k: usize },
    /// Whether every F-nomial with n <= N is an integer.
    Admissible {
        #[arg(default_value_t = 20)]
        n_max: usize,
    },
    /// Hasse digraph of the cobweb poset up to level n.
    Hasse {
        n: usize,
        /// Build the layer with permuted level widths sigma(1)_F, ..., sigma(m)_F instead.
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<usize>>,
    },
    /// Maximal chains of the layer from level k to level n.
    Chains { k: usize, n: usize },
    /// Tilings of the box V_{k,n}.
    Tilings { k: usize, n: usize },
    /// Check a tiling JSON document (from a file or standard input).
    VerifyTiling { file: Option<PathBuf> },
}

/// Runs a parsed command line. `stdin` feeds the batch forms of encode and
/// decode; everything destined for standard output goes to `out`.
pub fn run(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<()> {
    match &cli.output {
        Some(path) => {
            let mut buf = Vec::new();
            execute(cli, stdin, &mut buf)?;
            fs::write(path, buf).map_err(|e| CliError::io(path.display().to_string(), e))
        }
        None => execute(cli, stdin, out),
    }
}

fn write_err(e: std::io::Error) -> CliError {
    CliError::io("<output>", e)
}

fn sequence(cli: &Cli) -> Result<Arc<FSequence>> {
    Ok(Arc::new(parse_sequence(&cli.sequence)?))
}

fn origin(cli: &Cli) -> Result<usize> {
    match cli.origin {
        0 => Err(cobweb_core::Error::InvalidOrigin(0).into()),
        k => Ok(k),
    }
}

fn parse_integer(s: &str) -> Result<BigUint> {
    BigUint::from_str(s.trim())
        .map_err(|_| CliError::Invalid(format!("expected a non-negative integer, got {s:?}")))
}

/// A digit string, or a numeral JSON object over the configured sequence.
fn parse_numeral(s: &str, seq: &Arc<FSequence>, k: usize) -> Result<FBaseNumeral> {
    let s = s.trim();
    if s.starts_with('{') {
        let j: NumeralJson = serde_json::from_str(s)?;
        if j.origin != k {
            return Err(cobweb_core::Error::OriginMismatch.into());
        }
        return j.to_numeral_over(seq.clone());
    }
    Ok(FBaseNumeral::parse(s, seq.clone(), k)?)
}

fn numeral_line(x: &FBaseNumeral, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string(&NumeralJson::from_numeral(x))?,
        _ => x.to_string(),
    })
}

fn text_or_json(format: Format, allowed: &[Format]) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Invalid(format!("--format {format:?} is not available here").to_lowercase()))
    }
}

/// Arguments, or non-blank lines of standard input when there are none.
fn batch(args: &[String], stdin: &mut dyn BufRead) -> Result<Vec<String>> {
    if !args.is_empty() {
        return Ok(args.to_vec());
    }
    let mut lines = Vec::new();
    for line in stdin.lines() {
        let line = line.map_err(|e| CliError::io("<stdin>", e))?;
        if !line.trim().is_empty() {
            lines.push(line);
        }
    }
    Ok(lines)
}

fn emit(out: &mut dyn Write, lines: &[String]) -> Result<()> {
    for line in lines {
        writeln!(out, "{line}").map_err(write_err)?;
    }
    Ok(())
}

fn execute(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<()> {
    let f = cli.format;
    match &cli.command {
        Command::Encode { values } => {
            text_or_json(f, &[Format::Text, Format::Json])?;
            let (seq, k) = (sequence(cli)?, origin(cli)?);
            let lines = batch(values, stdin)?
                .iter()
                .map(|v| numeral_line(&FBaseNumeral::encode(&parse_integer(v)?, seq.clone(), k)?, f))
                .collect::<Result<Vec<_>>>()?;
            emit(out, &lines)
        }
        Command::Decode { numerals } => {
            text_or_json(f, &[Format::Text, Format::Json])?;
            let (seq, k) = (sequence(cli)?, origin(cli)?);
            let lines = batch(numerals, stdin)?
                .iter()
                .map(|s| Ok(parse_numeral(s, &seq, k)?.decode().to_string()))
                .collect::<Result<Vec<_>>>()?;
            emit(out, &lines)
        }
        Command::Add { a, b } => {
            text_or_json(f, &[Format::Text, Format::Json])?;
            let (seq, k) = (sequence(cli)?, origin(cli)?);
            let sum = parse_numeral(a, &seq, k)?.add(&parse_numeral(b, &seq, k)?)?;
            emit(out, &[numeral_line(&sum, f)?])
        }
        Command::Succ { numeral } => {
            text_or_json(f, &[Format::Text, Format::Json])?;
            let (seq, k) = (sequence(cli)?, origin(cli)?);
            let next = parse_numeral(numeral, &seq, k)?.successor()?;
            emit(out, &[numeral_line(&next, f)?])
        }
        Command::Zeckendorf { value } => {
            text_or_json(f, &[Format::Text, Format::Json])?;
            let alpha = parse_integer(value)?;
            let z = zeckendorf(&alpha);
            let line = match f {
                Format::Json => json!({
                    "value": big_to_number(&alpha),
                    "terms": z.terms().iter().map(big_to_number).collect::<Vec<_>>(),
                })
                .to_string(),
                _ => z.to_string(),
            };
            emit(out, &[line])
        }
        Command::Fnomial { n, k } => {
            text_or_json(f, &[Format::Text, Format::Json])?;
            let c = sequence(cli)?.fnomial(*n, *k)?;
            let line = match f {
                Format::Json => json!({
                    "numerator": big_to_number(c.numer()),
                    "denominator": big_to_number(c.denom()),
                    "integral": c.is_integral(),
                })
                .to_string(),
                _ => c.to_string(),
            };
            emit(out, &[line])
        }
        Command::Admissible { n_max } => {
            text_or_json(f, &[Format::Text, Format::Json])?;
            let seq = sequence(cli)?;
            let report = seq.is_admissible(*n_max)?;
            let witness = match report.witness {
                Some((n, k)) => Some((n, k, seq.fnomial(n, k)?)),
                None => None,
            };
            let line = match (f, &witness) {
                (Format::Json, _) => json!({
                    "admissible": report.admissible,
                    "n_max": n_max,
                    "witness": witness.as_ref().map(|(n, k, c)| json!({
                        "n": n, "k": k, "value": c.to_string(),
                    })),
                })
                .to_string(),
                (_, None) => format!("admissible for n <= {n_max}"),
                (_, Some((n, k, c))) => format!("not admissible: [{n} over {k}] = {c}"),
            };
            emit(out, &[line])
        }
        Command::Hasse { n, sigma } => {
            text_or_json(f, &[Format::Text, Format::Json, Format::Dot])?;
            let seq = sequence(cli)?;
            let g = match sigma {
                Some(sigma) => permuted_subposet(&seq, sigma.len(), sigma)?,
                None => build_hasse(&seq, *n)?,
            };
            match f {
                Format::Dot => write!(out, "{}", hasse_to_dot(&g, &seq.to_string())).map_err(write_err),
                Format::Json => emit(out, &[serde_json::to_string(&HasseJson::from_graph(&seq, &g))?]),
                _ => {
                    let mut lines: Vec<String> = g
                        .levels()
                        .iter()
                        .map(|level| {
                            let names: Vec<String> = level.iter().map(ToString::to_string).collect();
                            format!("level {}: {}", level.first().map_or(0, |v| v.level), names.join(" "))
                        })
                        .collect();
                    lines.push(format!("{} vertices, {} arcs", g.vertex_count(), g.arcs().len()));
                    emit(out, &lines)
                }
            }
        }
        Command::Chains { k, n } => {
            text_or_json(f, &[Format::Text, Format::Json])?;
            let b = HyperBox::new(sequence(cli)?, *k, *n)?;
            if cli.count_only {
                return emit(out, &[b.count_max_chains().to_string()]);
            }
            let mut out = std::io::BufWriter::new(out);
            for point in b.max_chains()? {
                let path: Vec<String> = point
                    .iter()
                    .enumerate()
                    .map(|(s, c)| format!("{}:{}", c + 1, k + s))
                    .collect();
                let line = match f {
                    Format::Json => json!({ "point": point, "path": path }).to_string(),
                    _ => path.join(" "),
                };
                writeln!(out, "{line}").map_err(write_err)?;
            }
            out.flush().map_err(write_err)
        }
        Command::Tilings { k, n } => tilings(cli, *k, *n, out),
        Command::VerifyTiling { file } => {
            text_or_json(f, &[Format::Text])?;
            let text = match file {
                Some(path) => fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?,
                None => {
                    let mut s = String::new();
                    stdin.read_to_string(&mut s).map_err(|e| CliError::io("<stdin>", e))?;
                    s
                }
            };
            let doc: TilingJson = serde_json::from_str(&text)?;
            verify_tiling(&doc.to_tiling()?)?;
            emit(out, &["ok".to_string()])
        }
    }
}

fn tilings(cli: &Cli, k: usize, n: usize, out: &mut dyn Write) -> Result<()> {
    let f = cli.format;
    let render = match (cli.render, f) {
        (Some(Render::Svg), _) | (None, Format::Svg) => Some(RenderFormat::Svg),
        (Some(Render::Text), _) => Some(RenderFormat::TextGrid),
        (None, _) => None,
    };
    text_or_json(f, &[Format::Text, Format::Json, Format::Svg])?;
    let b = HyperBox::new(sequence(cli)?, k, n)?;
    let options = TilingOptions {
        limit: cli.limit,
        intervals_only: cli.intervals_only,
    };
    if cli.count_only {
        return emit(out, &[parallel::count_tilings(&b, options)?.to_string()]);
    }
    match render {
        Some(RenderFormat::Svg) => {
            let all = parallel::enumerate_tilings(&b, options)?;
            let doc = render::svg(&all)?;
            out.write_all(doc.as_bytes()).map_err(write_err)
        }
        Some(RenderFormat::TextGrid) => {
            let all = parallel::enumerate_tilings(&b, options)?;
            let grids = all
                .iter()
                .map(render::text_grid)
                .collect::<Result<Vec<_>>>()?;
            out.write_all(grids.join("\n").as_bytes()).map_err(write_err)
        }
        None => {
            // Streamed: nothing below can fail except the write itself.
            let mut out = std::io::BufWriter::new(out);
            let mut failure = None;
            for_each_tiling(&b, options, |t| {
                let line = match f {
                    Format::Json => serde_json::to_string(&TilingJson::from_tiling(&t)).map_err(CliError::from),
                    _ => Ok(describe(&t)),
                };
                match line.and_then(|l| writeln!(out, "{l}").map_err(write_err)) {
                    Ok(()) => ControlFlow::Continue(()),
                    Err(e) => {
                        failure = Some(e);
                        ControlFlow::Break(())
                    }
                }
            })?;
            if let Some(e) = failure {
                return Err(e);
            }
            out.flush().map_err(write_err)
        }
    }
}

/// `sigma{subset}x{subset}` per tile, separated by ` | `.
fn describe(t: &cobweb_core::tiling::Tiling) -> String {
    t.tiles
        .iter()
        .map(|tile| {
            let sigma: Vec<String> = tile.sigma.iter().map(ToString::to_string).collect();
            let sets: Vec<String> = tile
                .subsets
                .iter()
                .map(|s| {
                    let items: Vec<String> = s.iter().map(ToString::to_string).collect();
                    format!("{{{}}}", items.join(","))
                })
                .collect();
            format!("({}) {}", sigma.join(" "), sets.join("x"))
        })
        .collect::<Vec<_>>()
        .join(" | ")
}
