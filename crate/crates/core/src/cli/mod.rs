//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when at least one row fails,
//! 2 for usage, parse and I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::{run_suite, CatalogMutation, EntryId, SuiteConfig, CATALOG};
use crate::report::{Report, Row};
use crate::wz::{builtin_pair, builtin_pair_names, load_pair, verify_wz_pair, WZPair, WzMutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "hypersum",
    version,
    about = "Exact verification of binomial and harmonic-number identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Largest n to check (overrides every per-entry default).
    #[arg(long, global = true)]
    pub n_max: Option<u64>,
    /// Parameter draws per n.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// JSON file with defaults for the flags above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Directory holding `<pair>.wz` certificate fixtures.
    #[arg(long, global = true)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog entries and WZ pairs.
    List,
    /// Check one catalog entry over its grid.
    Check {
        id: String,
        /// Negative control: `flip-h2n-sign` (ID24 only).
        #[arg(long)]
        mutate: Option<String>,
    },
    /// Verify a WZ pair symbolically and by direct evaluation.
    Wz {
        pair: String,
        /// Negative control: `scale-cert:<q>`, `add-cert:<expr>`,
        /// `flip-exp:<i>` or `flip-orientation`.
        #[arg(long)]
        mutate: Option<String>,
    },
    /// Run the whole catalog and all three WZ pairs.
    Suite,
}

/// Settings that may come from a config file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n_max: Option<u64>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub fixtures: Option<PathBuf>,
}

/// Fully resolved settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub n_max: Option<u64>,
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
    pub fixtures: Option<PathBuf>,
}

impl CliConfig {
    /// Flags override the config file, which overrides the defaults.
    pub fn resolve(cli: &Cli, file: &FileConfig) -> Self {
        CliConfig {
            n_max: cli.n_max.or(file.n_max),
            samples: cli.samples.or(file.samples).unwrap_or(20),
            seed: cli.seed.or(file.seed).unwrap_or(0),
            format: cli.format.or(file.format).unwrap_or(Format::Text),
            fixtures: cli.fixtures.clone().or_else(|| file.fixtures.clone()),
        }
    }
}

/// Default `n` range per WZ pair.
pub fn wz_default_n_max(name: &str) -> u64 {
    if name == "thm1" {
        25
    } else {
        40
    }
}

struct UsageError(String);

fn read_config(path: &Path) -> Result<FileConfig, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn pair_for(name: &str, cfg: &CliConfig) -> Result<WZPair, UsageError> {
    match &cfg.fixtures {
        Some(dir) => load_pair(dir, name),
        None => builtin_pair(name),
    }
    .map_err(|e| UsageError(format!("{name}: {e}")))
}

fn wz_rows(pair: &WZPair, cfg: &CliConfig) -> Result<Vec<Row>, UsageError> {
    let n_max = cfg.n_max.unwrap_or_else(|| wz_default_n_max(&pair.name));
    let report = verify_wz_pair(pair, n_max, cfg.samples, cfg.seed)
        .map_err(|e| UsageError(format!("{}: {e}", pair.name)))?;
    Ok(report.rows)
}

fn suite_config(cfg: &CliConfig) -> SuiteConfig {
    SuiteConfig { n_max: cfg.n_max, samples: cfg.samples, seed: cfg.seed, ..SuiteConfig::default() }
}

fn list(cfg: &CliConfig) -> String {
    #[derive(Serialize)]
    struct Item {
        id: &'static str,
        source: &'static str,
        title: &'static str,
        params: Vec<&'static str>,
        n_max: u64,
    }
    #[derive(Serialize)]
    struct Listing {
        identities: Vec<Item>,
        wz_pairs: Vec<&'static str>,
    }
    let listing = Listing {
        identities: CATALOG
            .iter()
            .map(|e| Item {
                id: e.id.as_str(),
                source: e.source,
                title: e.title,
                params: e.spec.names().chain(e.spec.inner).collect(),
                n_max: e.n_max,
            })
            .collect(),
        wz_pairs: builtin_pair_names(),
    };
    match cfg.format {
        Format::Json => serde_json::to_string_pretty(&listing).expect("listing serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            for i in &listing.identities {
                let params = if i.params.is_empty() { "-".to_string() } else { i.params.join(",") };
                out += &format!(
                    "{:<6} {:<44} params={:<22} n_max={:<3} {}\n",
                    i.id, i.source, params, i.n_max, i.title
                );
            }
            out += &format!("wz pairs: {}\n", listing.wz_pairs.join(", "));
            out
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, bool), UsageError> {
    let file = match &cli.config {
        Some(p) => read_config(p)?,
        None => FileConfig::default(),
    };
    let cfg = CliConfig::resolve(cli, &file);
    let report = match &cli.command {
        Command::List => return Ok((list(&cfg), false)),
        Command::Check { id, mutate } => {
            let id: EntryId = id.parse().map_err(UsageError)?;
            let mutation = match mutate {
                None => None,
                Some(m) => {
                    let m: CatalogMutation = m.parse().map_err(UsageError)?;
                    if id != EntryId::Id24 {
                        return Err(UsageError(format!("mutation {m:?} applies to ID24 only")));
                    }
                    Some(m)
                }
            };
            let sc = SuiteConfig { filter: Some(vec![id]), mutation, ..suite_config(&cfg) };
            Report::new(format!("check {id}"), cfg.seed, run_suite(&sc))
        }
        Command::Wz { pair, mutate } => {
            let mut p = pair_for(pair, &cfg)?;
            if let Some(m) = mutate {
                let m: WzMutation = m.parse().map_err(UsageError)?;
                p = m.apply(&p).map_err(UsageError)?;
            }
            Report::new(format!("wz {pair}"), cfg.seed, wz_rows(&p, &cfg)?)
        }
        Command::Suite => {
            let mut rows = run_suite(&suite_config(&cfg));
            for name in builtin_pair_names() {
                rows.extend(wz_rows(&pair_for(name, &cfg)?, &cfg)?);
            }
            Report::new("suite", cfg.seed, rows)
        }
    };
    let text = match cfg.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Ok((text, report.has_failures()))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, failed)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            i32::from(failed)
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["hypersum"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn precedence() {
        let cli = Cli::try_parse_from(["hypersum", "suite", "--seed", "5"]).unwrap();
        let file = FileConfig { seed: Some(3), samples: Some(7), ..FileConfig::default() };
        let cfg = CliConfig::resolve(&cli, &file);
        assert_eq!((cfg.seed, cfg.samples, cfg.format), (5, 7, Format::Text));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(go(&["frobnicate"]).0, 2);
        assert_eq!(go(&["check", "ID99"]).0, 2);
        assert_eq!(go(&["check", "ID01", "--bogus"]).0, 2);
        assert_eq!(go(&["wz", "thm9"]).0, 2);
        assert_eq!(go(&["wz", "thm1", "--mutate", "nonsense"]).0, 2);
        assert_eq!(go(&["check", "ID01", "--mutate", "flip-h2n-sign"]).0, 2);
    }

    #[test]
    fn check_and_list() {
        let (code, out, _) = go(&["check", "ID16", "--n-max", "2"]);
        assert_eq!(code, 0);
        assert!(
            out.lines().any(|l| l.starts_with("pass    ID16 n=2") && l.contains("lhs=3/2 rhs=3/2")),
            "{out}"
        );
        let (code, out, _) = go(&["list", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["identities"].as_array().unwrap().len(), CATALOG.len());
    }

    #[test]
    fn wz_mutation_exits_1() {
        let (code, out, _) =
            go(&["wz", "thm2", "--n-max", "3", "--samples", "2", "--mutate", "scale-cert:2"]);
        assert_eq!(code, 1);
        assert!(out.lines().next().unwrap().starts_with("fail    thm2/symbolic"), "{out}");
    }
}
