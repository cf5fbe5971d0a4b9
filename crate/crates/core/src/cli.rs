//! The `permkit` command line.
//!
//! Exit status is 0 on success, 2 for usage and parse errors and 3 for
//! errors raised by a well-formed request (sizes too small, ranks out of
//! range, groups over the element limit). Error messages go to the error
//! stream and nothing is printed there on success.

use std::ffi::OsString;
use std::io::Write;
use std::ops::Range;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::cycle_text;
use crate::error::Error;
use crate::group::{Group, DEFAULT_MAX_ORDER};
use crate::perm::{Perm, Point};
use crate::ranking::{self, RandomSource, Rank};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "permkit", version, about = "Permutation algebra, ranking and small permutation groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputMode::Text, global = true)]
    output: OutputMode,

    /// Seed for randomized commands; drawn from system entropy when absent.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Largest group order a closure may reach.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER, value_parser = parse_positive, global = true)]
    max_group_order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Lex,
    Mr,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Lex => "lex",
            Algo::Mr => "mr",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Permutation algebra.
    #[command(subcommand)]
    Perm(PermCommand),
    /// Rank of a perm among the perms of `size` points.
    Rank {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, value_parser = parse_positive)]
        size: usize,
        #[arg(value_parser = parse_perm)]
        perm: Perm,
    },
    /// Perm of `size` points with the given rank.
    Unrank {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, value_parser = parse_positive)]
        size: usize,
        #[arg(value_parser = parse_rank)]
        rank: Rank,
    },
    /// Inversion vector (Lehmer code) of a perm.
    Invvec {
        #[arg(long, value_parser = parse_positive)]
        size: usize,
        #[arg(value_parser = parse_perm)]
        perm: Perm,
    },
    /// Groups generated by `--gen` perms.
    #[command(subcommand)]
    Group(GroupCommand),
}

#[derive(Subcommand, Debug)]
enum PermCommand {
    /// Product of the perms; the rightmost acts first.
    Compose {
        #[arg(required = true, value_parser = parse_perm)]
        perms: Vec<Perm>,
    },
    Inverse {
        #[arg(value_parser = parse_perm)]
        perm: Perm,
    },
    Power {
        #[arg(value_parser = parse_perm)]
        perm: Perm,
        #[arg(allow_hyphen_values = true)]
        exponent: i64,
    },
    Order {
        #[arg(value_parser = parse_perm)]
        perm: Perm,
    },
    Parity {
        #[arg(value_parser = parse_perm)]
        perm: Perm,
    },
    Sign {
        #[arg(value_parser = parse_perm)]
        perm: Perm,
    },
    Cycles {
        #[arg(value_parser = parse_perm)]
        perm: Perm,
    },
    /// Array form `[p[0] ... p[size-1]]`.
    Array {
        #[arg(value_parser = parse_perm)]
        perm: Perm,
        /// Defaults to one more than the largest moved point.
        #[arg(long)]
        size: Option<usize>,
    },
    Commutator {
        #[arg(value_parser = parse_perm)]
        p: Perm,
        #[arg(value_parser = parse_perm)]
        q: Perm,
    },
    /// Uniformly random perm of `size` points.
    Random {
        #[arg(long, value_parser = parse_positive)]
        size: usize,
    },
}

#[derive(Args, Debug)]
struct Generators {
    /// Generator in cycle notation; repeat for more.
    #[arg(long = "gen", required = true, value_parser = parse_perm)]
    gens: Vec<Perm>,
}

#[derive(Args, Debug)]
struct PointRange {
    /// Half-open range `a..b`.
    #[arg(long, value_parser = parse_point_range)]
    points: Range<Point>,
}

#[derive(Args, Debug)]
struct SubGenerators {
    /// Generator of the second group; repeat for more.
    #[arg(long = "sub", required = true, value_parser = parse_perm)]
    subs: Vec<Perm>,
}

#[derive(Subcommand, Debug)]
enum GroupCommand {
    Order(Generators),
    /// All elements, one per line in canonical order.
    Elements(Generators),
    IsAbelian(Generators),
    Center(Generators),
    /// Orders of G, [G,G], [[G,G],[G,G]], ... until the order stops falling.
    DerivedSeries(Generators),
    Orbits {
        #[command(flatten)]
        range: PointRange,
        #[command(flatten)]
        gens: Generators,
    },
    IsTransitive {
        #[command(flatten)]
        range: PointRange,
        /// Ignore fixed points.
        #[arg(long)]
        lax: bool,
        #[command(flatten)]
        gens: Generators,
    },
    Stabilizer {
        #[arg(long)]
        point: Point,
        #[command(flatten)]
        gens: Generators,
    },
    Normalizer {
        #[command(flatten)]
        gens: Generators,
        #[command(flatten)]
        sub: SubGenerators,
    },
    Centralizer {
        #[command(flatten)]
        gens: Generators,
        #[command(flatten)]
        sub: SubGenerators,
    },
}

fn parse_perm(s: &str) -> Result<Perm, String> {
    cycle_text::parse(s).map_err(|e| e.to_string())
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Parses a decimal rank of any size.
pub fn parse_rank(s: &str) -> Result<Rank, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("invalid rank {s:?}: expected a nonnegative decimal integer"));
    }
    s.parse::<BigUint>().map_err(|e| e.to_string())
}

/// Parses `a..b`, the points `a` up to but excluding `b`.
pub fn parse_point_range(s: &str) -> Result<Range<Point>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("invalid range {s:?}: expected a..b"))?;
    let start: Point = a.trim().parse().map_err(|e| format!("invalid range start: {e}"))?;
    let end: Point = b.trim().parse().map_err(|e| format!("invalid range end: {e}"))?;
    if start > end {
        return Err(format!("invalid range {s:?}: start exceeds end"));
    }
    Ok(start..end)
}

/// One command result in both renderings.
struct Report {
    text: String,
    json: Value,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json }
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let written = match cli.output {
                OutputMode::Text => writeln!(out, "{}", report.text),
                OutputMode::Json => writeln!(out, "{}", report.json),
            };
            if written.is_err() {
                return EXIT_DOMAIN;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_parse() {
                EXIT_USAGE
            } else {
                EXIT_DOMAIN
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Perm(cmd) => perm_command(cmd, cli.seed),
        Command::Rank { algo, size, perm } => {
            let rank = match algo {
                Algo::Lex => ranking::rank_lex(perm, *size)?,
                Algo::Mr => ranking::rank_mr(perm, *size)?,
            };
            Ok(Report::new(
                rank.to_string(),
                json!({
                    "algo": algo.name(),
                    "size": size,
                    "cycles": perm.to_string(),
                    "rank": rank.to_string(),
                }),
            ))
        }
        Command::Unrank { algo, size, rank } => {
            let perm = match algo {
                Algo::Lex => ranking::unrank_lex(*size, rank)?,
                Algo::Mr => ranking::unrank_mr(*size, rank)?,
            };
            Ok(Report::new(
                perm.to_string(),
                json!({
                    "algo": algo.name(),
                    "size": size,
                    "rank": rank.to_string(),
                    "cycles": perm.to_string(),
                }),
            ))
        }
        Command::Invvec { size, perm } => {
            let inv = ranking::inversion_vector(perm, *size)?;
            Ok(Report::new(
                bracketed(inv.entries()),
                json!({
                    "size": size,
                    "cycles": perm.to_string(),
                    "inversion_vector": inv.entries(),
                }),
            ))
        }
        Command::Group(cmd) => group_command(cmd, cli.max_group_order),
    }
}

fn bracketed(points: &[usize]) -> String {
    let inner: Vec<String> = points.iter().map(ToString::to_string).collect();
    format!("[{}]", inner.join(" "))
}

fn cycles_report(p: &Perm) -> Report {
    Report::new(p.to_string(), json!({ "cycles": p.to_string() }))
}

fn perm_command(cmd: &PermCommand, seed: Option<u64>) -> Result<Report, Error> {
    let report = match cmd {
        PermCommand::Compose { perms } => {
            let product = perms.iter().fold(Perm::identity(), |acc, p| acc.compose(p));
            cycles_report(&product)
        }
        PermCommand::Inverse { perm } => cycles_report(&perm.inverse()),
        PermCommand::Power { perm, exponent } => cycles_report(&perm.power(*exponent)),
        PermCommand::Commutator { p, q } => cycles_report(&p.commutator(q)),
        PermCommand::Order { perm } => {
            let order = perm.order().to_string();
            Report::new(order.clone(), json!({ "cycles": perm.to_string(), "order": order }))
        }
        PermCommand::Parity { perm } => Report::new(
            perm.parity().to_string(),
            json!({ "cycles": perm.to_string(), "parity": perm.parity() }),
        ),
        PermCommand::Sign { perm } => Report::new(
            perm.sign().to_string(),
            json!({ "cycles": perm.to_string(), "sign": perm.sign() }),
        ),
        PermCommand::Cycles { perm } => {
            let cycles: Vec<Vec<Point>> =
                perm.cycles().into_iter().map(|c| c.into_points()).collect();
            let text: Vec<String> = cycles.iter().map(|c| bracketed(c)).collect();
            Report::new(
                text.join(" "),
                json!({ "cycles": perm.to_string(), "cycle_list": cycles }),
            )
        }
        PermCommand::Array { perm, size } => {
            let size = size.unwrap_or(perm.max_moved() + 1);
            let array = perm.to_array(size)?;
            Report::new(
                bracketed(&array),
                json!({ "cycles": perm.to_string(), "size": size, "array": array }),
            )
        }
        PermCommand::Random { size } => {
            let mut rng = match seed {
                Some(s) => RandomSource::seeded(s),
                None => RandomSource::from_entropy(),
            };
            let p = ranking::random_perm(*size, &mut rng);
            let mut text = p.to_string();
            if seed.is_none() {
                text.push_str(&format!("\nseed {}", rng.seed()));
            }
            Report::new(
                text,
                json!({ "cycles": p.to_string(), "size": size, "seed": rng.seed().to_string() }),
            )
        }
    };
    Ok(report)
}

fn build_group(gens: &[Perm], max_order: usize) -> Result<Group, Error> {
    let mut g = Group::with_max_order(max_order);
    g.extend(gens)?;
    Ok(g)
}

fn elements_report(g: &Group) -> Report {
    let elements: Vec<String> = g.iter().map(ToString::to_string).collect();
    Report::new(
        elements.join("\n"),
        json!({ "order": g.order(), "elements": elements }),
    )
}

fn group_command(cmd: &GroupCommand, max_order: usize) -> Result<Report, Error> {
    let report = match cmd {
        GroupCommand::Order(Generators { gens }) => {
            let g = build_group(gens, max_order)?;
            Report::new(g.order().to_string(), json!({ "order": g.order() }))
        }
        GroupCommand::Elements(Generators { gens }) => elements_report(&build_group(gens, max_order)?),
        GroupCommand::IsAbelian(Generators { gens }) => {
            let abelian = build_group(gens, max_order)?.is_abelian();
            Report::new(abelian.to_string(), json!({ "is_abelian": abelian }))
        }
        GroupCommand::Center(Generators { gens }) => {
            elements_report(&build_group(gens, max_order)?.center())
        }
        GroupCommand::DerivedSeries(Generators { gens }) => {
            let g = build_group(gens, max_order)?;
            let series = g.derived_series()?;
            let orders: Vec<usize> = series.iter().map(Group::order).collect();
            // the series stops at the first step that does not shrink
            let perfect = orders.len() == 1;
            let mut text = orders.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            if perfect {
                text.push_str(" (perfect)");
            }
            Report::new(text, json!({ "orders": orders, "perfect": perfect }))
        }
        GroupCommand::Orbits { range, gens } => {
            let g = build_group(&gens.gens, max_order)?;
            let points: Vec<Point> = range.points.clone().collect();
            let mut orbits: Vec<Vec<Point>> = g.orbits(&points).iter().map(|o| o.to_vec()).collect();
            orbits.sort_by_key(|o| o[0]);
            let text: Vec<String> = orbits.iter().map(|o| bracketed(o)).collect();
            Report::new(text.join(" "), json!({ "orbits": orbits }))
        }
        GroupCommand::IsTransitive { range, lax, gens } => {
            let g = build_group(&gens.gens, max_order)?;
            let points: Vec<Point> = range.points.clone().collect();
            let transitive = g.is_transitive(&points, !lax);
            Report::new(
                transitive.to_string(),
                json!({ "is_transitive": transitive, "strict": !lax }),
            )
        }
        GroupCommand::Stabilizer { point, gens } => {
            elements_report(&build_group(&gens.gens, max_order)?.stabilizer(*point))
        }
        GroupCommand::Normalizer { gens, sub } => {
            let g = build_group(&gens.gens, max_order)?;
            let h = build_group(&sub.subs, max_order)?;
            elements_report(&g.normalizer(&h))
        }
        GroupCommand::Centralizer { gens, sub } => {
            let g = build_group(&gens.gens, max_order)?;
            let h = build_group(&sub.subs, max_order)?;
            elements_report(&g.centralizer(&h))
        }
    };
    Ok(report)
}
