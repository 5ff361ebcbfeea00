use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use regpow_core::edge_ideals::EdgeIdealKind;
use serde::Serialize;
use serde_json::json;

use crate::cache::Cache;
use crate::corpus::load_dir;
use crate::input::{read_graph, InputError};
use crate::verify::{classify, predict_table, run_corpus, verify_graph, VerifyOptions};
use crate::SCHEMA_VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDING: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "regpow", version, about = "Regularity of powers of (parity) binomial edge ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a graph for both ideal kinds (or one with --ideal).
    Classify {
        /// Edge-list file, `-` for stdin, or an inline list such as "3 3/1 2/2 3/1 3".
        input: String,
        #[arg(long, value_enum)]
        ideal: Option<Kind>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Closed-form regularity predictions for t = 1..t-max.
    Predict {
        input: String,
        #[arg(long, value_enum, default_value = "binomial")]
        ideal: Kind,
        #[arg(long, default_value_t = 3)]
        t_max: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare predictions with oracle regularities for one graph.
    Verify {
        input: String,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value = "binomial")]
        ideal: Kind,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify every edge-list file in a directory (the bundled corpus if omitted).
    Corpus {
        dir: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
        /// Ideal kind; both when omitted.
        #[arg(long, value_enum)]
        ideal: Option<Kind>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Directory for per-entry reports and summary.json.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, default_value_t = 2)]
    pub t_max: u32,
    /// Field characteristic(s); the first is the reference, e.g. `--char 32003,101`.
    #[arg(long = "char", value_delimiter = ',', default_value = "32003")]
    pub characteristics: Vec<u32>,
    /// Seconds per resolution job.
    #[arg(long, default_value_t = 300.0)]
    pub budget: f64,
    #[arg(long, env = "REGPOW_CACHE_DIR", default_value = ".regpow-cache")]
    pub cache_dir: PathBuf,
    #[arg(long)]
    pub no_cache: bool,
    /// Skip the sequence and colon-identity checks.
    #[arg(long)]
    pub no_hypotheses: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Binomial,
    Parity,
}

impl From<Kind> for EdgeIdealKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Binomial => EdgeIdealKind::Binomial,
            Kind::Parity => EdgeIdealKind::Parity,
        }
    }
}

impl RunArgs {
    fn options(&self, kind: EdgeIdealKind) -> VerifyOptions {
        VerifyOptions {
            kind,
            t_max: self.t_max,
            characteristics: self.characteristics.clone(),
            budget_secs: self.budget,
            hypotheses: !self.no_hypotheses,
        }
    }

    fn cache(&self) -> Option<Cache> {
        (!self.no_cache).then(|| Cache::new(&self.cache_dir))
    }
}

fn emit<T: Serialize>(value: &T, output: Option<&Path>, out: &mut dyn Write) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn input_error(e: &InputError, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {e}");
    EXIT_ERROR
}

/// Runs a parsed command; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Classify { input, ideal, output } => {
            let g = match read_graph(&input) {
                Ok(g) => g,
                Err(e) => return Ok(input_error(&e, err)),
            };
            let kinds: Vec<EdgeIdealKind> = match ideal {
                Some(k) => vec![k.into()],
                None => vec![EdgeIdealKind::Binomial, EdgeIdealKind::Parity],
            };
            let mut doc = json!({
                "schema_version": SCHEMA_VERSION,
                "graph": g,
                "invariants": g.invariants(),
            });
            for k in kinds {
                doc[k.as_str()] = serde_json::to_value(classify(&g, k))?;
            }
            emit(&doc, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Predict { input, ideal, t_max, output } => {
            let g = match read_graph(&input) {
                Ok(g) => g,
                Err(e) => return Ok(input_error(&e, err)),
            };
            let kind: EdgeIdealKind = ideal.into();
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "ideal": kind,
                "classification": classify(&g, kind),
                "predictions": predict_table(&g, kind, t_max),
            });
            emit(&doc, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { input, run, ideal, output } => {
            let g = match read_graph(&input) {
                Ok(g) => g,
                Err(e) => return Ok(input_error(&e, err)),
            };
            let id = Path::new(&input)
                .file_stem()
                .filter(|_| Path::new(&input).is_file())
                .map_or_else(|| "input".to_string(), |s| s.to_string_lossy().into_owned());
            let cache = run.cache();
            let report = verify_graph(&id, &g, None, &run.options(ideal.into()), cache.as_ref());
            emit(&report, output.as_deref(), out)?;
            if report.has_findings() {
                let _ = writeln!(err, "FINDING: {} ({}) disagrees with its prediction or checks", id, report.ideal.as_str());
                return Ok(EXIT_FINDING);
            }
            Ok(EXIT_OK)
        }
        Command::Corpus { dir, run, ideal, jobs, output } => {
            let entries = match &dir {
                Some(d) => load_dir(d).map_err(|e| anyhow::anyhow!("{}: {e}", d.display()))?,
                None => crate::corpus::bundled().into_iter().map(Ok).collect(),
            };
            let kinds: Vec<EdgeIdealKind> = match ideal {
                Some(k) => vec![k.into()],
                None => vec![EdgeIdealKind::Binomial, EdgeIdealKind::Parity],
            };
            let cache = run.cache();
            let result = run_corpus(&entries, &kinds, &run.options(EdgeIdealKind::Binomial), cache.as_ref(), jobs);
            if let Some(dir) = &output {
                std::fs::create_dir_all(dir)?;
                for r in &result.reports {
                    emit(r, Some(&dir.join(format!("{}.{}.json", r.id, r.ideal.as_str()))), out)?;
                }
                emit(&result.summary, Some(&dir.join("summary.json")), out)?;
            }
            emit(&result.summary, None, out)?;
            for row in result.summary.rows.iter().filter(|r| r.outcome != "ok") {
                let _ = writeln!(
                    err,
                    "{}: {} ({}){}",
                    row.outcome.to_uppercase(),
                    row.id,
                    row.ideal.as_str(),
                    row.error.as_deref().map(|m| format!(": {m}")).unwrap_or_default()
                );
            }
            Ok(if result.summary.findings > 0 { EXIT_FINDING } else { EXIT_OK })
        }
    }
}
