// SPDX-License-Identifier: Apache-2.0

//! `grcrypt selftest | keygen | attack | verify`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use grcrypt_core::protocol::DEFAULT_EXPONENT_BOUND;
use grcrypt_core::s5rep::GeneratorData;
use grcrypt_core::{new_session, Error, GRMat3, Regime, Wedderburn};
use serde::Serialize;

use crate::formats::{self, ChallengeFile, FormatError, MatrixFile, SolutionFile, TranscriptFile, FORMAT_VERSION};
use crate::{runner, selftest};

/// Process exit statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Mismatch = 2,
    NotAPowerPair = 3,
    MalformedInput = 4,
    Internal = 5,
}

#[derive(Parser, Debug)]
#[command(name = "grcrypt", version, about = "Diffie-Hellman over 3x3 matrices on F7[S5], and its break")]
pub struct Cli {
    /// Generator data file; the built-in copy is used when omitted.
    #[arg(long, global = true, value_name = "PATH")]
    pub generators: Option<PathBuf>,
    /// Print more detail to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the representation data, the decomposition and the field kernel.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        json_report: Option<PathBuf>,
    },
    /// Run an honest exchange; write the public challenge and the withheld solution.
    Keygen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Secrets are drawn uniformly from [2, BOUND].
        #[arg(long, default_value_t = DEFAULT_EXPONENT_BOUND)]
        bound: u64,
        #[command(flatten)]
        regime: RegimeArgs,
        /// Challenge file.
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        /// Solution file.
        #[arg(long, value_name = "PATH")]
        solution: PathBuf,
    },
    /// Recover the shared key from a challenge.
    Attack {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// Recovered shared key.
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        #[arg(long, value_name = "PATH")]
        transcript: Option<PathBuf>,
        /// Zero the timing fields of the transcript.
        #[arg(long)]
        no_timings: bool,
        #[arg(long, value_name = "PATH")]
        json_report: Option<PathBuf>,
    },
    /// Compare a recovered key with a solution file.
    Verify {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long, value_name = "PATH")]
        solution: PathBuf,
        #[arg(long, value_name = "PATH")]
        json_report: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct RegimeArgs {
    /// Sample a base whose lifted blocks are not all invertible.
    #[arg(long, conflicts_with = "invertible")]
    pub singular: bool,
    /// Sample a base whose lifted blocks are all invertible (default).
    #[arg(long)]
    pub invertible: bool,
}

impl RegimeArgs {
    fn regime(&self) -> Regime {
        if self.singular {
            Regime::Singular
        } else {
            Regime::Invertible
        }
    }
}

#[derive(Debug)]
enum Failure {
    Format(FormatError),
    Core(Error),
    Mismatch(String),
    Selftest(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Format(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit(&self) -> Exit {
        match self {
            Failure::Format(_) => Exit::MalformedInput,
            Failure::Core(Error::NotAPowerPair { .. }) => Exit::NotAPowerPair,
            Failure::Core(Error::CorruptGeneratorData(_) | Error::InvalidParameter(_)) => Exit::MalformedInput,
            Failure::Core(_) | Failure::Selftest(_) => Exit::Internal,
            Failure::Mismatch(_) => Exit::Mismatch,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Format(e) => e.to_string(),
            Failure::Core(e) => e.to_string(),
            Failure::Mismatch(s) | Failure::Selftest(s) => s.clone(),
        }
    }
}

/// Parses `args` and runs the command. Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Exit::MalformedInput as i32 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(()) => Exit::Success as i32,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.exit() as i32
        }
    }
}

fn load_generators(path: Option<&Path>) -> Result<(GeneratorData, String), Failure> {
    let (label, bytes) = match path {
        Some(p) => (
            p.display().to_string(),
            std::fs::read(p).map_err(|source| FormatError::Io { path: p.into(), source })?,
        ),
        None => ("built-in generator data".to_string(), GeneratorData::BUILTIN_JSON.as_bytes().to_vec()),
    };
    let data = GeneratorData::from_verified_bytes(&bytes)
        .map_err(|e| Failure::Core(Error::CorruptGeneratorData(format!("{label}: {e}"))))?;
    Ok((data, GeneratorData::sha256_hex(&bytes)))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    Ok(formats::write_file(path, value)?)
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    let (data, sha) = load_generators(cli.generators.as_deref())?;
    let verbose = cli.verbose > 0;
    match &cli.command {
        Command::Selftest { seed, json_report } => {
            let report = selftest::run(&data, sha, *seed);
            let _ = write!(stdout, "{}", report.render());
            if let Some(p) = json_report {
                write_json(p, &report)?;
            }
            let first_failure = report.failures().next().map(|c| c.name.clone());
            match first_failure {
                None => Ok(()),
                Some(name) => Err(Failure::Selftest(format!("selftest failed: {name}"))),
            }
        }
        Command::Keygen { seed, bound, regime, out, solution } => {
            let w = Wedderburn::with_data(&data)?;
            let s = new_session(&w, *seed, *bound, regime.regime())?;
            write_json(out, &ChallengeFile::new(&s.challenge()))?;
            write_json(solution, &SolutionFile::new(&s.solution()))?;
            let _ = writeln!(stdout, "wrote challenge {} and solution {}", out.display(), solution.display());
            Ok(())
        }
        Command::Attack { input, out, transcript, no_timings, json_report } => {
            let challenge = formats::read_challenge(input)?;
            let w = Wedderburn::with_data(&data)?;
            let result = runner::attack(&w, &challenge);
            if let Some(p) = json_report {
                write_json(p, &AttackReport::new(&result))?;
            }
            let mut outcome = result?;
            let t = &mut outcome.recovery.transcript;
            if *no_timings {
                runner::strip_timings(t);
            }
            write_json(out, &MatrixFile::new(&outcome.shared_key))?;
            if let Some(p) = transcript {
                let file = TranscriptFile {
                    format_version: FORMAT_VERSION,
                    lifted_base: formats::encode_blockmat(&outcome.lifted_base),
                    lifted_challenge: formats::encode_blockmat(&outcome.lifted_challenge),
                    transcript: t.clone(),
                };
                write_json(p, &file)?;
            }
            if verbose {
                for b in &t.blocks {
                    let degrees: Vec<_> = b.factors.iter().map(|f| (f.degree, f.multiplicity)).collect();
                    let _ = writeln!(
                        stderr,
                        "block {} size {:2} fitting {} core {:2} factors {:?} {} us",
                        b.block, b.size, b.fitting_index, b.core_dim, degrees, b.elapsed_us
                    );
                }
            }
            let _ = writeln!(
                stdout,
                "recovered exponent {} (period modulus {}, {} candidates); key written to {}",
                outcome.recovery.exponent,
                outcome.recovery.period_modulus,
                t.candidates_tried,
                out.display()
            );
            Ok(())
        }
        Command::Verify { input, solution, json_report } => {
            let key = formats::read_matrix(input)?;
            let sol = formats::read_solution(solution)?;
            let diff = KeyDiff::new(&key, &sol.shared_key);
            if let Some(p) = json_report {
                write_json(p, &diff)?;
            }
            if diff.differing == 0 {
                let _ = writeln!(stdout, "key matches {}", solution.display());
                Ok(())
            } else {
                let (i, j, g) = diff.first.expect("some difference");
                Err(Failure::Mismatch(format!(
                    "key differs from {} in {} of {} coefficients, first at entry ({i},{j}) group element {g}",
                    solution.display(),
                    diff.differing,
                    diff.total
                )))
            }
        }
    }
}

#[derive(Serialize)]
struct AttackReport {
    format_version: u32,
    status: &'static str,
    exponent: Option<String>,
    period_modulus: Option<String>,
    error: Option<String>,
    block: Option<usize>,
}

impl AttackReport {
    fn new(r: &grcrypt_core::Result<runner::AttackOutcome>) -> Self {
        let mut rep = AttackReport {
            format_version: FORMAT_VERSION,
            status: "ok",
            exponent: None,
            period_modulus: None,
            error: None,
            block: None,
        };
        match r {
            Ok(o) => {
                rep.exponent = Some(o.recovery.exponent.to_string());
                rep.period_modulus = Some(o.recovery.period_modulus.to_string());
            }
            Err(e) => {
                rep.status = match e {
                    Error::NotAPowerPair { .. } => "not_a_power_pair",
                    _ => "error",
                };
                if let Error::NotAPowerPair { block, .. } = e {
                    rep.block = *block;
                }
                rep.error = Some(e.to_string());
            }
        }
        rep
    }
}

#[derive(Serialize)]
struct KeyDiff {
    format_version: u32,
    differing: usize,
    total: usize,
    first: Option<(usize, usize, usize)>,
}

impl KeyDiff {
    fn new(a: &GRMat3, b: &GRMat3) -> Self {
        let mut d = KeyDiff { format_version: FORMAT_VERSION, differing: 0, total: 0, first: None };
        for i in 0..3 {
            for j in 0..3 {
                for (g, (x, y)) in a.entry(i, j).coeffs().iter().zip(b.entry(i, j).coeffs()).enumerate() {
                    d.total += 1;
                    if x != y {
                        d.differing += 1;
                        d.first.get_or_insert((i, j, g));
                    }
                }
            }
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_are_malformed_input() {
        assert_eq!(run_args(&["grcrypt", "frobnicate"]).0, 4);
        assert_eq!(run_args(&["grcrypt", "keygen", "--singular", "--invertible", "--out", "a", "--solution", "b"]).0, 4);
        assert_eq!(run_args(&["grcrypt", "--help"]).0, 0);
    }

    #[test]
    fn missing_input_file() {
        let (code, _, err) = run_args(&["grcrypt", "attack", "--in", "/nonexistent/c.json", "--out", "/tmp/k.json"]);
        assert_eq!(code, 4);
        assert!(err.contains("/nonexistent/c.json"));
    }

    #[test]
    fn key_diff_counts() {
        let a = GRMat3::identity();
        let mut b = GRMat3::identity();
        b.set(1, 2, grcrypt_core::GRElem::delta(5));
        let d = KeyDiff::new(&a, &b);
        assert_eq!((d.differing, d.total, d.first), (1, 1080, Some((1, 2, 5))));
        assert_eq!(KeyDiff::new(&a, &a).differing, 0);
    }
}
