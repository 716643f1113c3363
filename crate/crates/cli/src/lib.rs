//! Command-line front end. [`parse_args`] turns argv into a [`CliConfig`];
//! [`run`] executes it against output sinks and returns the process exit
//! code: 0 success, 1 verification failure, 2 usage error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use necklace_scd::chains::phi_upper_flip_position;
use necklace_scd::crystal::{self, crystal_graph};
use necklace_scd::oracle::{check_rank_profile, ORACLE_HARD_CAP};
use necklace_scd::*;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Canon,
    Match,
    Phi,
    Chain,
    Scd,
    Verify,
    Ranks,
    Crystal,
}

impl Command {
    fn takes_word(self) -> bool {
        matches!(self, Command::Canon | Command::Match | Command::Phi | Command::Chain)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub word: Option<String>,
    pub n: Option<usize>,
    pub steps: Option<usize>,
    pub format: Format,
    pub oracle_limit: usize,
}

impl CliConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.command.takes_word() && self.word.is_none() {
            return Err(format!("{:?} needs a word", self.command));
        }
        if !self.command.takes_word() && self.n.is_none() {
            return Err(format!("{:?} needs n", self.command));
        }
        if self.format == Format::Dot && !matches!(self.command, Command::Scd | Command::Crystal) {
            return Err("--format dot is only available for scd and crystal".into());
        }
        if self.steps == Some(0) {
            return Err("--steps must be at least 1".into());
        }
        Ok(())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "necklace-scd",
    version,
    about = "Symmetric chains of binary necklaces and their cyclic crystal"
)]
struct Args {
    #[command(subcommand)]
    command: CommandArgs,

    /// Output format (dot only for scd and crystal).
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Number of phi steps to apply.
    #[arg(long, global = true)]
    steps: Option<usize>,

    /// Largest n verified against the materialized poset.
    #[arg(long, global = true, default_value_t = oracle::DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
}

#[derive(Subcommand, Debug)]
enum CommandArgs {
    /// Canonical rotation and offset of a word.
    Canon { word: String },
    /// Cyclic bracketing of a word.
    Match { word: String },
    /// Apply phi (default once, see --steps).
    Phi { word: String },
    /// The chain through a word.
    Chain { word: String },
    /// The whole decomposition for length n.
    Scd { n: usize },
    /// Build and verify the decomposition for length n.
    Verify { n: usize },
    /// Rank sizes for length n.
    Ranks { n: usize },
    /// Crystal graph for length n.
    Crystal { n: usize },
}

pub fn parse_args<I, T>(args: I) -> Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let a = Args::try_parse_from(args)?;
    let (command, word, n) = match a.command {
        CommandArgs::Canon { word } => (Command::Canon, Some(word), None),
        CommandArgs::Match { word } => (Command::Match, Some(word), None),
        CommandArgs::Phi { word } => (Command::Phi, Some(word), None),
        CommandArgs::Chain { word } => (Command::Chain, Some(word), None),
        CommandArgs::Scd { n } => (Command::Scd, None, Some(n)),
        CommandArgs::Verify { n } => (Command::Verify, None, Some(n)),
        CommandArgs::Ranks { n } => (Command::Ranks, None, Some(n)),
        CommandArgs::Crystal { n } => (Command::Crystal, None, Some(n)),
    };
    Ok(CliConfig {
        command,
        word,
        n,
        steps: a.steps,
        format: a.format,
        oracle_limit: a.oracle_limit,
    })
}

enum Failure {
    Usage(String),
    Verify,
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<ScdError> for Failure {
    fn from(e: ScdError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

pub fn run(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Err(msg) = config.validate() {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    let result = match config.command {
        Command::Canon => canon(config, out),
        Command::Match => matching(config, out),
        Command::Phi => phi_steps(config, out),
        Command::Chain => chain(config, out),
        Command::Scd => scd_cmd(config, out),
        Command::Verify => verify(config, out),
        Command::Ranks => ranks(config, out),
        Command::Crystal => crystal_cmd(config, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_VERIFY_FAILED
        }
    }
}

fn word_arg(config: &CliConfig) -> Result<Word, Failure> {
    Ok(config.word.as_deref().unwrap_or_default().parse()?)
}

fn n_arg(config: &CliConfig) -> usize {
    config.n.expect("validated")
}

fn print_json(out: &mut dyn Write, value: &serde_json::Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json value"))?;
    Ok(())
}

fn canon(config: &CliConfig, out: &mut dyn Write) -> Outcome {
    let w = word_arg(config)?;
    let (c, off) = canonical_rotation(&w);
    match config.format {
        Format::Json => print_json(
            out,
            &json!({"input": w.to_string(), "canonical": c.to_string(), "offset": off.0, "rank": c.ones()}),
        ),
        _ => {
            writeln!(out, "{c} offset={off}")?;
            Ok(())
        }
    }
}

fn one_based(ps: &[usize]) -> Vec<usize> {
    ps.iter().map(|p| p + 1).collect()
}

fn matching(config: &CliConfig, out: &mut dyn Write) -> Outcome {
    let w = word_arg(config)?;
    let m = cyclic_match(&w);
    let pairs: Vec<(usize, usize)> = m.pairs().iter().map(|&(z, o)| (z + 1, o + 1)).collect();
    let kind = match m.unmatched_kind() {
        UnmatchedKind::Ones => "ones",
        UnmatchedKind::Zeros => "zeros",
        UnmatchedKind::None => "none",
    };
    let canonical = canonical_rotation(&w).0;
    if config.format == Format::Json {
        return print_json(
            out,
            &json!({
                "word": w.to_string(),
                "canonical": canonical.to_string(),
                "brackets": m.render_brackets(),
                "pairs": pairs,
                "unmatched": one_based(m.unmatched()),
                "unmatched_kind": kind,
            }),
        );
    }
    writeln!(out, "{w}")?;
    writeln!(out, "{}", m.render_brackets())?;
    let listed: Vec<String> = pairs.iter().map(|(z, o)| format!("({z},{o})")).collect();
    writeln!(out, "pairs: {}", listed.join(" "))?;
    let unmatched: Vec<String> = one_based(m.unmatched()).iter().map(|p| p.to_string()).collect();
    writeln!(out, "unmatched {kind}: {}", unmatched.join(" "))?;
    writeln!(out, "canonical: {canonical}")?;
    Ok(())
}

/// One descent step expressed in the frame of `w` rather than the canonical
/// frame.
fn step_in_frame(w: &Word) -> Option<Word> {
    let u = Necklace::from_word(w);
    let next = phi(&u)?;
    if u.is_upper() {
        let n = w.len();
        let p = phi_upper_flip_position(&u).expect("upper half");
        let (_, off) = canonical_rotation(w);
        return Some(w.with_letter((p + n - off.0) % n, 0));
    }
    w.one_positions()
        .into_iter()
        .rev()
        .map(|p| w.with_letter(p, 0))
        .find(|x| Necklace::from_word(x) == next)
}

fn phi_steps(config: &CliConfig, out: &mut dyn Write) -> Outcome {
    let mut w = word_arg(config)?;
    let steps = config.steps.unwrap_or(1);
    let mut trail = Vec::new();
    let mut stopped = false;
    for _ in 0..steps {
        match step_in_frame(&w) {
            Some(next) => {
                w = next;
                trail.push(w);
            }
            None => {
                stopped = true;
                break;
            }
        }
    }
    if config.format == Format::Json {
        let steps: Vec<_> = trail
            .iter()
            .map(|x| json!({"word": x.to_string(), "canonical": Necklace::from_word(x).to_string()}))
            .collect();
        return print_json(out, &json!({"steps": steps, "reached_bottom": stopped}));
    }
    for x in &trail {
        writeln!(out, "{x} (canonical {})", Necklace::from_word(x))?;
    }
    if stopped {
        writeln!(
            out,
            "note: {w} (canonical {}) is the bottom of its chain; phi is undefined there",
            Necklace::from_word(&w)
        )?;
    }
    Ok(())
}

fn chain(config: &CliConfig, out: &mut dyn Write) -> Outcome {
    let w = word_arg(config)?;
    let u = Necklace::from_word(&w);
    let (c, depth) = chain_of(&u);
    if config.format == Format::Json {
        return print_json(
            out,
            &json!({
                "input": w.to_string(),
                "canonical": u.to_string(),
                "depth": depth,
                "top": c.top().to_string(),
                "elements": c.elements().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                "flip_schedule": one_based(c.flip_schedule()),
            }),
        );
    }
    writeln!(
        out,
        "chain of {u} (input {w}): depth {depth}, length {}, ranks {}..{}",
        c.len(),
        c.top().rank(),
        c.bottom().rank()
    )?;
    for (d, e) in c.elements().iter().enumerate() {
        let mark = if d == depth { '*' } else { ' ' };
        writeln!(out, "{mark} {d:>3}  {e}  rank {}", e.rank())?;
    }
    Ok(())
}

fn scd_cmd(config: &CliConfig, out: &mut dyn Write) -> Outcome {
    let s = build_scd(n_arg(config))?;
    match config.format {
        Format::Text => write!(out, "{}", s.render_text())?,
        Format::Json => writeln!(out, "{}", s.to_json())?,
        Format::Dot => write!(out, "{}", s.render_dot())?,
    }
    Ok(())
}

fn verify(config: &CliConfig, out: &mut dyn Write) -> Outcome {
    let n = n_arg(config);
    let s = build_scd(n)?;
    let report = verify_scd(&s, config.oracle_limit);
    let profile = if n <= ORACLE_HARD_CAP {
        Some(check_rank_profile(n)?)
    } else {
        None
    };

    let mut crystal_findings = Vec::new();
    for (ci, c) in s.chains().iter().enumerate() {
        for (d, x) in c.elements().iter().enumerate() {
            if is_highest_weight_lemma(x) != (d == 0) {
                crystal_findings.push(format!("highest-weight test disagrees at {x}"));
            }
            if 2 * x.rank() >= n && crystal::f(x) != c.elements().get(d + 1).copied() {
                crystal_findings.push(format!("f({x}) differs from chain {ci}"));
            }
        }
        let l = crystal::weight(c.top());
        if c.len() as i64 != l + 1 {
            crystal_findings.push(format!("chain {ci} has length {} for top weight {l}", c.len()));
        }
    }

    let profile_ok = profile.as_ref().is_none_or(|p| p.ok());
    let all_ok = report.ok() && profile_ok && crystal_findings.is_empty();

    if config.format == Format::Json {
        print_json(
            out,
            &json!({
                "report": report,
                "rank_profile": profile.as_ref().map(|p| json!({
                    "rank_sizes": p.rank_sizes,
                    "symmetric": p.symmetric,
                    "unimodal": p.unimodal,
                    "matches_burnside": p.matches_burnside,
                    "findings": p.findings,
                })),
                "crystal_findings": crystal_findings,
                "ok": all_ok,
            }),
        )?;
    } else {
        let verdict = |b: bool| if b { "ok" } else { "FAILED" };
        writeln!(out, "{}", report.summary())?;
        writeln!(out, "partition: {}", verdict(report.partition_ok))?;
        writeln!(out, "symmetry: {}", verdict(report.symmetry_ok))?;
        let mode = if report.oracle_saturation {
            "poset covers"
        } else {
            "rank step + order"
        };
        writeln!(out, "saturation: {} ({mode})", verdict(report.saturation_ok))?;
        writeln!(out, "injectivity: {}", verdict(report.injectivity_ok))?;
        writeln!(out, "counts: {}", verdict(report.counts_ok))?;
        match &profile {
            Some(p) => writeln!(out, "rank profile: {} {:?}", verdict(p.ok()), p.rank_sizes)?,
            None => writeln!(out, "rank profile: skipped (n > {ORACLE_HARD_CAP})")?,
        }
        writeln!(out, "crystal: {}", verdict(crystal_findings.is_empty()))?;
        for f in report
            .failures
            .iter()
            .chain(profile.iter().flat_map(|p| p.findings.iter()))
            .chain(crystal_findings.iter())
        {
            writeln!(out, "  - {f}")?;
        }
        writeln!(out, "verdict: {}", if all_ok { "PASS" } else { "FAIL" })?;
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn ranks(config: &CliConfig, out: &mut dyn Write) -> Outcome {
    let p = check_rank_profile(n_arg(config))?;
    if config.format == Format::Json {
        print_json(
            out,
            &json!({
                "n": p.n,
                "rank_sizes": p.rank_sizes,
                "symmetric": p.symmetric,
                "unimodal": p.unimodal,
                "matches_burnside": p.matches_burnside,
            }),
        )?;
    } else {
        let yes = |b: bool| if b { "yes" } else { "no" };
        writeln!(out, "rank sizes: {:?}", p.rank_sizes)?;
        writeln!(out, "symmetric: {}", yes(p.symmetric))?;
        writeln!(out, "unimodal: {}", yes(p.unimodal))?;
        writeln!(out, "matches necklace formula: {}", yes(p.matches_burnside))?;
        for f in &p.findings {
            writeln!(out, "  - {f}")?;
        }
    }
    if p.ok() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn crystal_cmd(config: &CliConfig, out: &mut dyn Write) -> Outcome {
    let g = crystal_graph(n_arg(config))?;
    match config.format {
        Format::Text => write!(out, "{}", g.render_text())?,
        Format::Json => writeln!(out, "{}", g.to_json())?,
        Format::Dot => write!(out, "{}", g.render_dot())?,
    }
    Ok(())
}
