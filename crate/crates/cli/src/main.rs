use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use translate_kiss::io::SceneDocument;
use translate_kiss::placement::{check_lemma2, lemma2_ystar_bound};
use translate_kiss::render::{render_scene, render_shape, DEFAULT_UNIT_PX};
use translate_kiss::ruler::check_lemma1_range;
use translate_kiss::{build_disk, place_translates, verify::certify_scene, Error};

const EXIT_FAIL: u8 = 1;
const EXIT_PARAM: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "translate-kiss",
    version,
    about = "Build and verify touching translates of rectilinear disks"
)]
struct Cli {
    /// Write the command's output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Suppress summaries; the exit code still reports the result.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the disk D_n^m as JSON.
    Build {
        #[arg(short, allow_negative_numbers = true)]
        m: i64,
        #[arg(short)]
        n: u32,
    },
    /// Verify the translate construction for (m, n).
    Verify {
        #[arg(short, allow_negative_numbers = true)]
        m: i64,
        #[arg(short)]
        n: u32,
        /// Also write the full certificate document here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Render the scene (default) or a single disk as SVG.
    Render {
        #[arg(short, allow_negative_numbers = true)]
        m: i64,
        #[arg(short)]
        n: u32,
        #[arg(long, conflicts_with = "shape")]
        scene: bool,
        #[arg(long)]
        shape: bool,
        #[arg(long, default_value_t = DEFAULT_UNIT_PX, value_parser = clap::value_parser!(u32).range(1..))]
        unit_px: u32,
    },
    /// Check that every window of the ruler sequence outweighs the prefix of the same length.
    Lemma1 {
        #[arg(long)]
        k_max: u64,
        /// Largest window start checked.
        #[arg(long)]
        r_max: u64,
    },
    /// Check that shifted pairs of D_n^m have disjoint interiors.
    Lemma2 {
        #[arg(short, allow_negative_numbers = true)]
        m: i64,
        #[arg(short)]
        n: u32,
        /// Sweep every ystar up to height + 1 instead of only ystar = 1.
        #[arg(long)]
        exhaustive: bool,
    },
}

enum Failure {
    Param(String),
    Io(PathBuf, io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Param(e.to_string())
    }
}

struct Output {
    path: Option<PathBuf>,
    quiet: bool,
}

impl Output {
    fn artifact(&self, bytes: &[u8]) -> Result<(), Failure> {
        match &self.path {
            Some(p) => write_file(p, bytes),
            None => io::stdout()
                .write_all(bytes)
                .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e)),
        }
    }

    fn report(&self, text: &str) -> Result<(), Failure> {
        if self.quiet {
            return Ok(());
        }
        self.artifact(text.as_bytes())
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::Io(path.to_owned(), e))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let out = Output {
        path: cli.out,
        quiet: cli.quiet,
    };
    match cli.command {
        Command::Build { m, n } => {
            let shape = build_disk(m, n)?;
            out.artifact(&SceneDocument::from_shape(shape).serialize())?;
            Ok(true)
        }
        Command::Verify { m, n, json } => {
            let scene = place_translates(m, n)?;
            let cert = certify_scene(&scene)?;
            let mut text = format!(
                "{} m={m} n={n}: {} translates, {} pairs, all interiors disjoint: {}, A_0 touches {}/{n}\n",
                if cert.ok { "PASS" } else { "FAIL" },
                n + 1,
                cert.pair_verdicts.len(),
                cert.all_disjoint(),
                cert.touching_count,
            );
            for v in cert.pair_verdicts.iter().filter(|v| v.i == 0) {
                text.push_str(&format!(
                    "  A_0-A_{}: contact length {}, {} component(s)\n",
                    v.j,
                    v.segment_length_total,
                    v.contacts.len()
                ));
            }
            let ok = cert.ok;
            if let Some(path) = json {
                write_file(
                    &path,
                    &SceneDocument::with_certificate(&scene, cert).serialize(),
                )?;
            }
            out.report(&text)?;
            Ok(ok)
        }
        Command::Render {
            m,
            n,
            scene: _,
            shape,
            unit_px,
        } => {
            let svg = if shape {
                render_shape(&build_disk(m, n)?, unit_px)
            } else {
                render_scene(&place_translates(m, n)?, unit_px)
            };
            out.artifact(&svg)?;
            Ok(true)
        }
        Command::Lemma1 { k_max, r_max } => {
            let summary = check_lemma1_range(k_max, r_max)?;
            let text = match summary.first_failure {
                None => format!(
                    "PASS lemma1: {} windows (k <= {k_max}, r <= {r_max}) all at least the prefix sum\n",
                    summary.windows_checked
                ),
                Some((k, r)) => format!("FAIL lemma1: window k={k} r={r} is lighter than the prefix\n"),
            };
            out.report(&text)?;
            Ok(summary.first_failure.is_none())
        }
        Command::Lemma2 { m, n, exhaustive } => {
            let ystar_max = if exhaustive {
                lemma2_ystar_bound(m, n)?
            } else {
                1
            };
            let report = check_lemma2(m, n, ystar_max)?;
            let text = match report.first_failure {
                None => format!(
                    "PASS lemma2 m={m} n={n}: {} shifted pairs disjoint (ystar 1..={ystar_max})\n",
                    report.cases_checked
                ),
                Some(case) => format!("FAIL lemma2: interiors overlap for {case}\n"),
            };
            out.report(&text)?;
            Ok(report.first_failure.is_none())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARAM } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Param(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARAM)
        }
        Err(Failure::Io(path, e)) => {
            eprintln!("error: {}: {e}", path.display());
            ExitCode::from(EXIT_IO)
        }
    }
}
