//! `polygb`: command-line experiments on polyomino ideals.
//!
//! Exit codes: 0 ok or property true, 1 property false, 2 input error, 3 timeout.

mod export;
mod sweep;

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use polygb::conditions::{primality_sufficient, prop21, thin_obstructions, ConditionError};
use polygb::families::{
    gallery, make_grid, make_subgrid, make_thin_cycle, FamilyError, GridSpec, Run, DEFAULT_RANK_CAP,
};
use polygb::gbasis::{buchberger, inner_2_minors, is_prime, GbError, GbOptions, DEFAULT_PAIR_BUDGET};
use polygb::io::{format_ascii, load, parse_any, to_json, IoError};
use polygb::lattice::{search_witness, LatticeBasis, LatticeError, WitnessSearch};
use polygb::orders::{MonomialOrder, OrderError, OrderIndex, Parity, VertexOrder};
use polygb::{Cell, Polyomino, Vertex};

use export::CasFormat;
use sweep::{Check, SweepConfig};

// A closed stdout (e.g. piped into `head`) is not an error worth a panic.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outp {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Timeout(u64),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Timeout(budget) => write!(f, "pair budget of {budget} exhausted"),
        }
    }
}

impl From<GbError> for CliError {
    fn from(e: GbError) -> Self {
        match e {
            GbError::Timeout { budget } => CliError::Timeout(budget),
            other => CliError::Input(other.to_string()),
        }
    }
}

macro_rules! input_error {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        })*
    };
}

input_error!(IoError, FamilyError, OrderError, ConditionError, LatticeError, io::Error, csv::Error);

#[derive(Parser)]
#[command(name = "polygb", version, about = "Gröbner bases and primality of polyomino ideals")]
struct Cli {
    /// Critical pairs processed per basis before giving up (exit code 3).
    #[arg(long, global = true, env = "POLYGB_PAIR_BUDGET", default_value_t = DEFAULT_PAIR_BUDGET)]
    pair_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeFormat {
    Ascii,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a polyomino and check that it is connected.
    Validate {
        /// File (ASCII or JSON), `-` for stdin, or `gallery:<name>`.
        input: String,
    },
    /// Thinness, holes, inner intervals and thin-cycle shape.
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduced Gröbner basis of the polyomino ideal; exit 1 if it is not the set of inner 2-minors.
    Gb {
        input: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=8))]
        order: u8,
        /// Make this vertex the smallest variable, as `x,y`.
        #[arg(long, value_parser = parse_vertex)]
        rotate_at: Option<Vertex>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Combinatorial predicates, vertex conditions and the primality certificate as JSON; exit 1 if uncertified.
    Conditions { input: String },
    /// Primality by saturation; exit 1 and print a witness if not prime.
    Prime {
        input: String,
        /// Also run the degree-bounded witness search up to this degree (default twice the rank).
        #[arg(long)]
        degree_bound: Option<u32>,
        /// Run the degree-bounded witness search.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 2_000_000)]
        monomial_budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate every fixed polyomino up to a rank and write one CSV row each.
    Sweep {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// (vertex, order) draws per polyomino for `pi-law`.
        #[arg(long, default_value_t = 4)]
        samples: usize,
        /// CSV file; enables resuming. Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cursor file, default `<out>.cursor`.
        #[arg(long)]
        cursor: Option<PathBuf>,
        /// Worker threads; results do not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
        /// Stop after this many new rows, leaving the cursor for a later run.
        #[arg(long)]
        max_rows: Option<usize>,
    },
    /// Build a polyomino from a family.
    Generate {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t = ShapeFormat::Ascii, global = true)]
        format: ShapeFormat,
    },
    /// Inner 2-minors as a script for an external algebra system.
    Export {
        input: String,
        #[arg(long, value_enum, default_value_t = CasFormat::Text)]
        format: CasFormat,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=8))]
        order: u8,
        #[arg(long, value_parser = parse_vertex)]
        rotate_at: Option<Vertex>,
    },
}

#[derive(clap::Args)]
struct GridArgs {
    /// Box width in vertices.
    #[arg(long)]
    m: u32,
    /// Box height in vertices.
    #[arg(long)]
    n: u32,
    /// Consecutive hole x-intervals, as `a-b,a-b,...`.
    #[arg(long, value_parser = parse_intervals)]
    x_holes: Intervals,
    /// Consecutive hole y-intervals, as `a-b,a-b,...`.
    #[arg(long, value_parser = parse_intervals)]
    y_holes: Intervals,
}

impl GridArgs {
    fn spec(&self) -> GridSpec {
        GridSpec {
            m: self.m,
            n: self.n,
            x_holes: self.x_holes.0.clone(),
            y_holes: self.y_holes.0.clone(),
        }
    }
}

#[derive(Debug, Clone)]
struct Intervals(Vec<(u32, u32)>);

#[derive(Subcommand)]
enum Family {
    /// Rectangle minus an aligned grid of holes.
    Grid(GridArgs),
    /// Grid minus corridor cells.
    Subgrid {
        #[command(flatten)]
        grid: GridArgs,
        /// Cell to delete, as `x,y` (lower-left corner); repeatable.
        #[arg(long = "delete", value_parser = parse_vertex)]
        deleted: Vec<Vertex>,
    },
    /// Closed ring of straight runs such as `N3 E2 S3 W2`.
    ThinCycle {
        #[arg(long)]
        runs: String,
    },
    /// A named figure, or all of them into a directory.
    Gallery {
        name: Option<String>,
        #[arg(long, requires = "dir")]
        all: bool,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn parse_vertex(s: &str) -> Result<Vertex, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, found `{s}`"))?;
    let coord = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
    Ok(Vertex::new(coord(x)?, coord(y)?))
}

fn parse_intervals(s: &str) -> Result<Intervals, String> {
    s.split(',')
        .map(|part| {
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| format!("expected `a-b`, found `{part}`"))?;
            let n = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
            Ok((n(a)?, n(b)?))
        })
        .collect::<Result<_, _>>()
        .map(Intervals)
}

fn read_input(input: &str) -> Result<Polyomino, CliError> {
    if let Some(name) = input.strip_prefix("gallery:") {
        return gallery::by_name(name).ok_or_else(|| CliError::Input(format!("no gallery figure named `{name}`")));
    }
    if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(parse_any(&text)?);
    }
    Ok(load(Path::new(input))?)
}

fn monomial_order(p: &Polyomino, order: u8, rotate_at: Option<Vertex>) -> Result<MonomialOrder, CliError> {
    let base = VertexOrder::for_polyomino(p, OrderIndex::new(order)?);
    let base = match rotate_at {
        Some(v) => base.rotate(v)?,
        None => base,
    };
    Ok(MonomialOrder::new(base))
}

fn verdict(ok: bool) -> ExitCode {
    ExitCode::from(if ok { 0 } else { 1 })
}

fn label(p: &Polyomino) -> &str {
    p.name().unwrap_or("unnamed")
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let opts = GbOptions {
        pair_budget: cli.pair_budget,
    };
    match cli.command {
        Command::Validate { input } => {
            let p = read_input(&input)?;
            out!("{}: valid, rank {}, {}x{} cells", label(&p), p.rank(), p.width(), p.height());
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { input, format } => {
            let p = read_input(&input)?;
            analyze(&p, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gb {
            input,
            order,
            rotate_at,
            format,
        } => {
            let p = read_input(&input)?;
            let o = monomial_order(&p, order, rotate_at)?;
            let minors = inner_2_minors(&p);
            let gb = buchberger(minors.iter().cloned(), &o, &opts)?;
            let expected: BTreeSet<_> = minors.into_iter().map(|g| g.oriented(&o)).collect();
            let quadratic = gb.elements().iter().cloned().collect::<BTreeSet<_>>() == expected;
            match format {
                Format::Text => {
                    outp!("{}", gb.to_text());
                    out!("; elements: {}", gb.len());
                    out!("; quadratic: {quadratic}");
                }
                Format::Json => {
                    let basis: Vec<String> = gb.elements().iter().map(ToString::to_string).collect();
                    let report = json!({
                        "order": order,
                        "rotate_at": rotate_at.map(|v| [v.x, v.y]),
                        "basis": basis,
                        "quadratic": quadratic,
                        "pairs_processed": gb.pairs_processed(),
                    });
                    out!("{}", serde_json::to_string_pretty(&report).expect("json value"));
                }
            }
            Ok(verdict(quadratic))
        }
        Command::Conditions { input } => {
            let p = read_input(&input)?;
            let obstructions = |parity| {
                thin_obstructions(&p, parity).ok().map(|found| {
                    found
                        .iter()
                        .map(|o| json!({"pattern": o.pattern.name(), "at": [o.at.x, o.at.y]}))
                        .collect::<Vec<_>>()
                })
            };
            let report = primality_sufficient(&p);
            let out = json!({
                "name": p.name(),
                "rank": p.rank(),
                "thin": p.is_thin(),
                "prop21": {"odd": prop21(&p, Parity::Odd), "even": prop21(&p, Parity::Even)},
                "thin_obstructions": {"odd": obstructions(Parity::Odd), "even": obstructions(Parity::Even)},
                "certificate": report,
            });
            out!("{}", serde_json::to_string_pretty(&out).expect("json value"));
            Ok(verdict(report.is_certified()))
        }
        Command::Prime {
            input,
            degree_bound,
            search,
            monomial_budget,
            format,
        } => {
            let p = read_input(&input)?;
            let report = is_prime(&p, &opts)?;
            let searched = if search || degree_bound.is_some() {
                let o1 = MonomialOrder::for_polyomino(&p, OrderIndex::new(1)?);
                let ideal = buchberger(inner_2_minors(&p), &o1, &opts)?;
                let lattice = LatticeBasis::try_for_polyomino(&p)?;
                let bound = degree_bound.unwrap_or(2 * p.rank() as u32);
                Some(search_witness(&ideal, &lattice, bound, monomial_budget)?)
            } else {
                None
            };
            match format {
                Format::Text => {
                    out!("{}", if report.prime { "PRIME" } else { "NOT PRIME" });
                    out!("ideal basis: {}", report.ideal_basis_size);
                    out!("saturated basis: {}", report.saturated_basis_size);
                    if let Some(w) = &report.witness {
                        out!("witness: {}", w.binomial);
                        out!("normal form: {}", w.normal_form);
                        out!("in lattice: {}", w.in_lattice);
                    }
                    match &searched {
                        Some(WitnessSearch::Found { binomial, degree }) => {
                            out!("search: found at degree {degree}: {binomial}")
                        }
                        Some(WitnessSearch::NotFound { max_degree }) => {
                            out!("search: none up to degree {max_degree}")
                        }
                        Some(WitnessSearch::BudgetExhausted { degree, monomials }) => {
                            out!("search: budget exhausted at degree {degree} after {monomials} monomials")
                        }
                        None => {}
                    }
                }
                Format::Json => {
                    let out = json!({
                        "name": p.name(),
                        "prime": report.prime,
                        "ideal_basis_size": report.ideal_basis_size,
                        "saturated_basis_size": report.saturated_basis_size,
                        "witness": report.witness.as_ref().map(|w| json!({
                            "binomial": w.binomial.to_string(),
                            "normal_form": w.normal_form.to_string(),
                            "in_lattice": w.in_lattice,
                        })),
                        "search": searched.as_ref().map(|s| match s {
                            WitnessSearch::Found { binomial, degree } =>
                                json!({"found": binomial.to_string(), "degree": degree}),
                            WitnessSearch::NotFound { max_degree } => json!({"not_found": max_degree}),
                            WitnessSearch::BudgetExhausted { degree, monomials } =>
                                json!({"budget_exhausted": {"degree": degree, "monomials": monomials}}),
                        }),
                    });
                    out!("{}", serde_json::to_string_pretty(&out).expect("json value"));
                }
            }
            Ok(verdict(report.prime))
        }
        Command::Sweep {
            rank,
            check,
            seed,
            samples,
            out,
            cursor,
            jobs,
            max_rows,
        } => {
            if rank > DEFAULT_RANK_CAP {
                return Err(CliError::Input(format!("rank {rank} exceeds the cap of {DEFAULT_RANK_CAP}")));
            }
            let cfg = SweepConfig {
                rank,
                check,
                seed,
                samples,
                out,
                cursor,
                max_rows,
                opts,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Input(e.to_string()))?;
            let summary = pool.install(|| sweep::run(&cfg))?;
            eprintln!(
                "{} of {} rows done, {} mismatches, {} timeouts",
                summary.rows, summary.total, summary.mismatches, summary.timeouts
            );
            Ok(if summary.mismatches > 0 {
                ExitCode::from(1)
            } else if summary.timeouts > 0 {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Generate { family, format } => {
            let emit = |p: &Polyomino| match format {
                ShapeFormat::Ascii => format_ascii(p),
                ShapeFormat::Json => to_json(p) + "\n",
            };
            match family {
                Family::Grid(args) => outp!("{}", emit(make_grid(&args.spec())?.polyomino())),
                Family::Subgrid { grid, deleted } => {
                    let g = make_grid(&grid.spec())?;
                    let deleted: BTreeSet<Cell> = deleted.iter().map(|v| Cell::new(v.x, v.y)).collect();
                    outp!("{}", emit(&make_subgrid(&g, &deleted)?));
                }
                Family::ThinCycle { runs } => {
                    let runs: Vec<Run> = runs
                        .split_whitespace()
                        .map(str::parse)
                        .collect::<Result<_, _>>()
                        .map_err(CliError::Input)?;
                    let t = make_thin_cycle(&runs)?;
                    eprintln!("minimum maximal interval length: {}", t.min_interval_length);
                    outp!("{}", emit(&t.polyomino));
                }
                Family::Gallery { name, all, dir } => {
                    if all {
                        let dir = dir.expect("clap enforces --dir");
                        fs::create_dir_all(&dir)?;
                        for p in gallery::all().into_iter().chain([gallery::annulus()]) {
                            fs::write(dir.join(label(&p)), emit(&p))?;
                        }
                    } else {
                        let name = name.ok_or_else(|| CliError::Input("give a figure name or --all".into()))?;
                        let p = gallery::by_name(&name)
                            .ok_or_else(|| CliError::Input(format!("no gallery figure named `{name}`")))?;
                        outp!("{}", emit(&p));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Export {
            input,
            format,
            order,
            rotate_at,
        } => {
            let p = read_input(&input)?;
            let o = monomial_order(&p, order, rotate_at)?;
            outp!("{}", export::render(format, &inner_2_minors(&p), &o));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn analyze(p: &Polyomino, format: Format) {
    let maximal = p.maximal_inner_intervals();
    let min_len = maximal.iter().map(|i| i.length()).min();
    let holes = p.holes();
    match format {
        Format::Text => {
            out!("name: {}", label(p));
            out!("rank: {}", p.rank());
            out!("size: {}x{}", p.width(), p.height());
            out!("vertices: {}", p.vertices().len());
            out!("thin: {}", p.is_thin());
            out!("simple: {}", p.is_simple());
            out!("holes: {}", holes.len());
            out!("thin cycle: {}", p.is_thin_cycle());
            out!("inner intervals: {}", p.inner_intervals().len());
            out!("maximal inner intervals: {}", maximal.len());
            for i in &maximal {
                out!("  {i} length {}", i.length());
            }
            if let Some(m) = min_len {
                out!("min maximal interval length: {m}");
            }
        }
        Format::Json => {
            let out = json!({
                "name": p.name(),
                "rank": p.rank(),
                "width": p.width(),
                "height": p.height(),
                "vertices": p.vertices().len(),
                "thin": p.is_thin(),
                "simple": p.is_simple(),
                "holes": holes.iter().map(Polyomino::rank).collect::<Vec<_>>(),
                "thin_cycle": p.is_thin_cycle(),
                "inner_intervals": p.inner_intervals().len(),
                "maximal_inner_intervals": maximal.iter().map(|i| {
                    let (a, b) = (i.lower_left(), i.upper_right());
                    json!({"lower_left": [a.x, a.y], "upper_right": [b.x, b.y], "length": i.length()})
                }).collect::<Vec<_>>(),
                "min_maximal_interval_length": min_len,
            });
            out!("{}", serde_json::to_string_pretty(&out).expect("json value"));
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Input(_) => 2,
                CliError::Timeout(_) => 3,
            })
        }
    }
}
