//! Argument parsing and command execution for the `pathbij` binary.
//!
//! Exit status: 0 on success, 1 on domain errors (bad path, wrong family,
//! failed verification), 2 on usage errors.

use std::io::{BufRead, Write};
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};

use pathbij::count::{catalan_sequence, motzkin_sequence, riordan_sequence};
use pathbij::enumeration::{distribution_table, generate_paths_capped, rows_to_tsv, DistributionRow};
use pathbij::path::ascii_art;
use pathbij::verify::run_all;
use pathbij::{
    parse_path, Bijection, BijectionError, CountError, Direction, Family, PathError, Statistic,
    DEFAULT_CAP,
};

#[derive(Debug, Parser)]
#[command(name = "pathbij", version, about = "Dyck and Motzkin path bijections and statistics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Dyck,
    Motzkin,
    Bicolored,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Dyck => Family::Dyck,
            FamilyArg::Motzkin => Family::Motzkin,
            FamilyArg::Bicolored => Family::BicoloredMotzkin,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BijArg {
    T1,
    T2,
    Std,
    Riordan,
}

impl From<BijArg> for Bijection {
    fn from(b: BijArg) -> Bijection {
        match b {
            BijArg::T1 => Bijection::T1,
            BijArg::T2 => Bijection::T2,
            BijArg::Std => Bijection::Std,
            BijArg::Riordan => Bijection::Riordan,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DirArg {
    Forward,
    Inverse,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StatArg {
    Udu,
    Ddu,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SeqName {
    Catalan,
    Motzkin,
    Riordan,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum Format {
    Text,
    #[default]
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every path of a family and size, one per line, in lexicographic order.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Refuse to generate more than this many paths.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Print the statistics of a path (or of each path read from stdin).
    Stats {
        #[arg(long)]
        path: Option<String>,
        #[arg(long, value_enum, default_value = "dyck")]
        family: FamilyArg,
        /// Also draw the path as ASCII art.
        #[arg(long)]
        draw: bool,
    },
    /// Apply a bijection to a path (or to each path read from stdin).
    Map {
        #[arg(long, value_enum)]
        bij: BijArg,
        #[arg(long, value_enum, default_value = "forward")]
        dir: DirArg,
        #[arg(long)]
        path: Option<String>,
        /// Print the transported statistics after each image.
        #[arg(long)]
        report: bool,
    },
    /// Print the brute-force vs closed-form distribution of UDU or DDU counts.
    Table {
        #[arg(long, value_enum)]
        stat: StatArg,
        /// A size `N` or an inclusive range `A..B`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Run every exhaustive check up to the given size.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Print the first terms of a counting sequence, comma-separated.
    Seq {
        #[arg(long, value_enum)]
        name: SeqName,
        #[arg(long)]
        count: usize,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

/// Domain error text with 1-based step positions.
fn describe_path_error(e: &PathError) -> String {
    const NOTE: &str = " (positions are 1-based)";
    match e {
        PathError::IllegalCharacter { ch, index } => {
            format!("illegal character {ch:?} at position {}{NOTE}; paths use only U, D, F, G", index + 1)
        }
        PathError::NegativePrefix { index } => {
            format!("path dips below ground level at position {}{NOTE}", index + 1)
        }
        PathError::FamilyViolation { family, step, index } => format!(
            "step {step} at position {} is not allowed in a {family} path{NOTE}",
            index + 1
        ),
        PathError::NotAnUpstep(i) => format!("step at position {} is not an upstep{NOTE}", i + 1),
        PathError::NotAFlatstep(i) => format!("step at position {} is not a flatstep{NOTE}", i + 1),
        PathError::IndexOutOfRange { index, len } => {
            format!("position {} is past the end of a path of length {len}{NOTE}", index + 1)
        }
        PathError::UnbalancedPath { .. } => e.to_string(),
    }
}

fn describe_bijection_error(e: &BijectionError) -> String {
    const NOTE: &str = " (positions are 1-based)";
    match e {
        BijectionError::Path(p) => describe_path_error(p),
        BijectionError::NotUuuFree(i) => {
            format!("input must be UUU-free: UUU starts at position {}{NOTE}", i + 1)
        }
        BijectionError::HasGreenFlat(i) => {
            format!("input must have no green flats: G at position {}{NOTE}", i + 1)
        }
        BijectionError::HasGroundFlat(i) => {
            format!("input must have no ground-level flats: flat at position {}{NOTE}", i + 1)
        }
        other => other.to_string(),
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn domain(message: String) -> Failure {
    Failure { code: 1, message }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        domain(format!("I/O error: {e}"))
    }
}

/// Paths from `--path`, or one per non-empty stdin line. An empty line on
/// stdin is skipped; use `--path ""` for the empty path.
fn inputs(path: Option<String>, stdin: &mut dyn BufRead) -> Result<Vec<String>, Failure> {
    match path {
        Some(p) => Ok(vec![p]),
        None => {
            let mut out = Vec::new();
            for line in stdin.lines() {
                let line = line?;
                let t = line.trim();
                if !t.is_empty() {
                    out.push(t.to_string());
                }
            }
            Ok(out)
        }
    }
}

fn execute(
    cmd: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match cmd {
        Command::Enumerate { family, n, cap } => {
            for p in generate_paths_capped(family.into(), n, cap)? {
                writeln!(out, "{p}")?;
            }
        }
        Command::Stats { path, family, draw } => {
            let family: Family = family.into();
            let texts = inputs(path, stdin)?;
            let many = texts.len() > 1;
            for (i, text) in texts.iter().enumerate() {
                let p = parse_path(text, family)
                    .map_err(|e| domain(format!("{text:?}: {}", describe_path_error(&e))))?;
                if many {
                    if i > 0 {
                        writeln!(out)?;
                    }
                    writeln!(out, "path\t{p}")?;
                }
                for (name, value) in p.statistics().fields() {
                    writeln!(out, "{name}\t{value}")?;
                }
                if draw && !p.is_empty() {
                    writeln!(out, "{}", ascii_art(&p))?;
                }
            }
        }
        Command::Map {
            bij,
            dir,
            path,
            report,
        } => {
            let bij: Bijection = bij.into();
            let dir = match dir {
                DirArg::Forward => Direction::Forward,
                DirArg::Inverse => Direction::Inverse,
            };
            let family = bij.domain(dir);
            for text in inputs(path, stdin)? {
                let p = parse_path(&text, family).map_err(|e| {
                    domain(format!(
                        "{text:?} is not a valid {family} path: {}",
                        describe_path_error(&e)
                    ))
                })?;
                let r = bij
                    .report(dir, &p)
                    .map_err(|e| domain(format!("{text:?}: {}", describe_bijection_error(&e))))?;
                writeln!(out, "{}", r.output)?;
                if report {
                    for (name, a, b) in &r.transported_stats {
                        writeln!(out, "#\t{name}\t{a}\t{b}")?;
                    }
                }
            }
        }
        Command::Table { stat, n, format, cap } => {
            let stat = match stat {
                StatArg::Udu => Statistic::Udu,
                StatArg::Ddu => Statistic::Ddu,
            };
            let mut rows: Vec<DistributionRow> = Vec::new();
            for size in n {
                rows.extend(distribution_table(stat, size, cap)?);
            }
            match format {
                Format::Tsv => write!(out, "{}", rows_to_tsv(&rows))?,
                Format::Text => {
                    writeln!(out, "{:>3} {:>3} {:>12} {:>12}  ok", "n", "k", "brute", "formula")?;
                    for r in &rows {
                        writeln!(
                            out,
                            "{:>3} {:>3} {:>12} {:>12}  {}",
                            r.n,
                            r.k,
                            r.brute.to_string(),
                            r.formula.to_string(),
                            r.ok()
                        )?;
                    }
                }
            }
            if rows.iter().any(|r| !r.ok()) {
                return Err(domain("brute-force and formula counts disagree".into()));
            }
        }
        Command::Verify { max_n, cap } => {
            let outcomes = run_all(max_n, cap);
            for o in &outcomes {
                writeln!(out, "{}", o.line())?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            if failed > 0 {
                return Err(domain(format!("{failed} of {} checks failed", outcomes.len())));
            }
        }
        Command::Seq { name, count } => {
            let values = match name {
                SeqName::Catalan => catalan_sequence(count)?,
                SeqName::Motzkin => motzkin_sequence(count)?,
                SeqName::Riordan => riordan_sequence(count)?,
            };
            let text: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", text.join(","))?;
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
