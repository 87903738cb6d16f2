//! `lamplighter`: command-line access to word lengths, geodesics, dead ends,
//! seesaw scans and the BFS oracle.
//!
//! Exit status: 0 on success, 1 when `verify` finds a mismatch, 2 for bad
//! input, 3 when a resource limit is hit.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lamplighter::metrics::{self, build_geodesic, count_geodesics, length_report};
use lamplighter::oracle::MAX_ENTRIES_ENV;
use lamplighter::phenomena::{dead_end_depth, seesaw_like_check, seesaw_scan};
use lamplighter::{BallLimits, BallTable, GenSet, GroupElement, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lamplighter", version, about = "Metric geometry of the lamplighter group Z2 wr Z")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct ElementArgs {
    /// Lit bulb positions, comma separated, or `none`.
    #[arg(long, default_value = "none", allow_hyphen_values = true)]
    bulbs: String,

    /// Cursor position.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    cursor: i64,
}

impl ElementArgs {
    fn element(&self) -> Result<GroupElement, CliError> {
        let bulbs = lamplighter::element::parse_bulb_list(&self.bulbs)?;
        Ok(GroupElement::new(bulbs, self.cursor)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form word length under one or both generating sets.
    Length {
        #[command(flatten)]
        element: ElementArgs,
        /// Restrict to one generating set (default: both).
        #[arg(long)]
        gens: Option<GenSet>,
    },
    /// Canonical geodesic word for an element.
    Geodesic {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, default_value = "automata")]
        gens: GenSet,
    },
    /// Exact number of geodesic words and the doubly-visited count u.
    CountGeodesics {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, default_value = "automata")]
        gens: GenSet,
        /// Refuse elements longer than this.
        #[arg(long, default_value_t = metrics::DEFAULT_COUNT_BUDGET)]
        budget: u64,
    },
    /// Dead-end flag and depth.
    Deadend {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, default_value = "automata")]
        gens: GenSet,
    },
    /// Every seesaw element in a ball.
    SeesawScan {
        #[arg(long, default_value = "automata")]
        gens: GenSet,
        #[arg(long)]
        radius: u32,
        #[arg(long, default_value_t = 1)]
        min_swing: u32,
    },
    /// Verify the seesaw-like behaviour of w_k.
    SeesawLike {
        #[arg(long)]
        k: u32,
    },
    /// Compare the closed form with exhaustive BFS over a ball.
    Verify {
        #[arg(long, default_value = "automata")]
        gens: GenSet,
        #[arg(long)]
        radius: u32,
        /// Extra random elements beyond the ball to check geodesic construction on.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sphere sizes of the Cayley graph (`distance,size`).
    Sphere {
        #[arg(long, default_value = "automata")]
        gens: GenSet,
        #[arg(long)]
        radius: u32,
    },
    /// Evaluate a word in the compact alphabet (a t T | t T r R).
    Eval {
        #[arg(long, default_value = "automata")]
        gens: GenSet,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Debug)]
enum CliError {
    Lib(lamplighter::Error),
    Usage(String),
    Io(io::Error),
    Mismatch(String),
}

impl From<lamplighter::Error> for CliError {
    fn from(e: lamplighter::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Lib(e) if e.is_resource() => 3,
            CliError::Io(_) => 3,
            CliError::Lib(_) | CliError::Usage(_) => 2,
        }
    }
}

/// A finished report: machine-readable JSON plus a text rendering.
struct Report {
    json: Value,
    text: String,
    csv: Option<String>,
    /// Set when the command should exit with status 1 after printing.
    mismatch: Option<String>,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            csv: None,
            mismatch: None,
        }
    }
}

fn length_cmd(e: &GroupElement, gens: Option<GenSet>) -> Report {
    let gensets: Vec<GenSet> = gens.map_or(GenSet::ALL.to_vec(), |g| vec![g]);
    let mut text = String::new();
    let mut lengths = serde_json::Map::new();
    for gs in gensets {
        let rep = length_report(e, gs);
        writeln!(text, "{gs}: {} ({})", rep.value, serde_json::to_value(rep.branch).unwrap().as_str().unwrap()).unwrap();
        lengths.insert(gs.to_string(), serde_json::to_value(&rep).unwrap());
    }
    let value = gens.map(|gs| metrics::length(e, gs));
    Report::new(
        json!({
            "command": "length",
            "element": e,
            "genset": gens,
            "value": value,
            "lengths": lengths,
            "method": "closed-form",
        }),
        text,
    )
}

fn geodesic_cmd(e: &GroupElement, gs: GenSet) -> Report {
    let word = build_geodesic(e, gs);
    let text = format!("{}\n{}\nlength {}\n", word, word.to_power_notation(), word.len());
    Report::new(
        json!({
            "command": "geodesic",
            "element": e,
            "genset": gs,
            "word": word.to_string(),
            "power_notation": word.to_power_notation(),
            "length": word.len(),
            "trajectory": metrics::canonical_trajectory(e, gs),
            "method": "closed-form",
        }),
        text,
    )
}

fn count_cmd(e: &GroupElement, gs: GenSet, budget: u64) -> Result<Report, CliError> {
    let rep = count_geodesics(e, gs, budget)?;
    let text = format!(
        "geodesics: {}\nu: {}\nlength: {}\ncursor at origin: {}\n",
        rep.count, rep.u, rep.length, rep.cursor_at_origin
    );
    Ok(Report::new(
        json!({
            "command": "count-geodesics",
            "element": e,
            "genset": gs,
            "report": rep,
            "method": "closed-form distance-guided count",
        }),
        text,
    ))
}

fn deadend_cmd(e: &GroupElement, gs: GenSet) -> Report {
    let rep = dead_end_depth(e, gs);
    let mut text = format!("dead end: {}\nlength: {}\ndepth: {}\n", rep.is_dead_end, rep.length, rep.depth);
    if let Some(d) = rep.closed_form_depth {
        writeln!(text, "closed-form depth: {d}").unwrap();
    }
    Report::new(
        json!({
            "command": "deadend",
            "element": e,
            "genset": gs,
            "report": rep,
            "method": "escape search with closed-form lengths",
        }),
        text,
    )
}

fn seesaw_scan_cmd(gs: GenSet, radius: u32, min_swing: u32) -> Result<Report, CliError> {
    if min_swing == 0 {
        return Err(CliError::Usage("--min-swing must be at least 1".into()));
    }
    let found = seesaw_scan(gs, radius, min_swing, &BallLimits::from_env())?;
    let mut text = format!("{} seesaw elements within radius {radius} ({gs})\n", found.len());
    for r in &found {
        writeln!(text, "{}  g={}  swing={}", r.element, r.generator, r.swing).unwrap();
    }
    Ok(Report::new(
        json!({
            "command": "seesaw-scan",
            "genset": gs,
            "radius": radius,
            "min_swing": min_swing,
            "count": found.len(),
            "seesaws": found,
            "method": "oracle ball enumeration, closed-form lengths",
        }),
        text,
    ))
}

fn seesaw_like_cmd(k: u32) -> Result<Report, CliError> {
    let rep = seesaw_like_check(k)?;
    let text = format!(
        "w_{k} = {}\nlength: {}\ncondition 1: {}\ncondition 2: {}\ncondition 3: {}\ndivergence d(w t^s, w t^-s) = 2s: {}\n",
        rep.element,
        rep.length,
        rep.condition1,
        rep.condition2,
        rep.condition3,
        rep.divergence_holds()
    );
    Ok(Report::new(
        json!({
            "command": "seesaw-like",
            "k": k,
            "holds": rep.holds(),
            "divergence_holds": rep.divergence_holds(),
            "report": rep,
            "method": "exhaustive over move sequences, closed-form lengths",
        }),
        text,
    ))
}

fn verify_cmd(gs: GenSet, radius: u32, samples: usize, seed: u64) -> Result<Report, CliError> {
    let ball = BallTable::build(gs, radius, &BallLimits::from_env())?;
    let mut mismatches = 0usize;
    let mut first: Option<String> = None;
    let mut note = |msg: String| {
        mismatches += 1;
        first.get_or_insert(msg);
    };
    for (e, entry) in ball.iter() {
        let formula = metrics::length(&e, gs);
        if formula != entry.distance as u64 {
            note(format!("{e}: closed form {formula}, bfs {}", entry.distance));
        }
        let word = build_geodesic(&e, gs);
        if word.evaluate() != e || word.len() as u64 != entry.distance as u64 {
            note(format!("{e}: canonical geodesic {word} is not geodesic"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = gs.letters();
    for _ in 0..samples {
        let len = rng.gen_range(0..=4 * radius.max(1) as usize);
        let word = Word::new(gs, (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect())?;
        let e = word.evaluate();
        let geo = build_geodesic(&e, gs);
        if geo.evaluate() != e || geo.len() as u64 != metrics::length(&e, gs) || geo.len() > word.len() {
            note(format!("{e}: canonical geodesic {geo} fails against sample word {word}"));
        }
    }
    let text = format!(
        "{} elements within radius {radius} ({gs}), {samples} random samples: {mismatches} mismatches\n{}",
        ball.len(),
        first.as_ref().map(|f| format!("first counterexample: {f}\n")).unwrap_or_default()
    );
    let mut report = Report::new(
        json!({
            "command": "verify",
            "genset": gs,
            "radius": radius,
            "elements": ball.len(),
            "samples": samples,
            "seed": seed,
            "mismatches": mismatches,
            "first_counterexample": first,
            "method": "closed-form vs oracle",
        }),
        text,
    );
    report.mismatch = first;
    Ok(report)
}

fn sphere_cmd(gs: GenSet, radius: u32) -> Result<Report, CliError> {
    let ball = BallTable::build(gs, radius, &BallLimits::from_env())?;
    let mut csv = Vec::new();
    ball.write_sphere_csv(&mut csv)?;
    let csv = String::from_utf8(csv).expect("ascii csv");
    let mut report = Report::new(
        json!({
            "command": "sphere",
            "genset": gs,
            "radius": radius,
            "sizes": ball.sphere_sizes(),
            "ball_size": ball.len(),
            "method": "oracle",
        }),
        csv.clone(),
    );
    report.csv = Some(csv);
    Ok(report)
}

fn eval_cmd(gs: GenSet, word: &str) -> Result<Report, CliError> {
    let word = Word::parse(gs, word)?;
    let e = word.evaluate();
    Ok(Report::new(
        json!({
            "command": "eval",
            "genset": gs,
            "word": word.to_string(),
            "element": e,
            "word_length": word.len(),
            "length": metrics::length(&e, gs),
        }),
        format!("{e}\n"),
    ))
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Length { element, gens } => Ok(length_cmd(&element.element()?, *gens)),
        Command::Geodesic { element, gens } => Ok(geodesic_cmd(&element.element()?, *gens)),
        Command::CountGeodesics { element, gens, budget } => count_cmd(&element.element()?, *gens, *budget),
        Command::Deadend { element, gens } => Ok(deadend_cmd(&element.element()?, *gens)),
        Command::SeesawScan { gens, radius, min_swing } => seesaw_scan_cmd(*gens, *radius, *min_swing),
        Command::SeesawLike { k } => seesaw_like_cmd(*k),
        Command::Verify { gens, radius, samples, seed } => verify_cmd(*gens, *radius, *samples, *seed),
        Command::Sphere { gens, radius } => sphere_cmd(*gens, *radius),
        Command::Eval { gens, word } => eval_cmd(*gens, word),
    }
}

fn render(cli: &Cli, report: &Report) -> Result<String, CliError> {
    Ok(match cli.format {
        Format::Text => report.text.clone(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.json).expect("json value")),
        Format::Csv => report
            .csv
            .clone()
            .ok_or_else(|| CliError::Usage("csv output is only available for `sphere`".into()))?,
    })
}

fn emit(cli: &Cli, body: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => File::create(path)?.write_all(body.as_bytes()),
        None => io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|report| {
        let body = render(&cli, &report)?;
        emit(&cli, &body)?;
        match report.mismatch {
            Some(m) => Err(CliError::Mismatch(m)),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match &err {
                CliError::Lib(e) if e.is_resource() => {
                    eprintln!("error: {e} (raise the cap with {MAX_ENTRIES_ENV} or LAMPLIGHTER_MAX_RADIUS)")
                }
                CliError::Lib(e) => eprintln!("error: {e}"),
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Io(e) => eprintln!("error: {e}"),
                CliError::Mismatch(m) => eprintln!("verification failed: {m}"),
            }
            ExitCode::from(err.exit_code())
        }
    }
}
