use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use paley_core::constructions::{Label, SUPPORTED_Q};
use paley_core::field::DEFAULT_TABLE_BOUND;

#[derive(Debug, Parser)]
#[command(
    name = "paley-verify",
    version,
    about = "Second-largest maximal cliques of Paley graphs P(q^2)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Comma-separated q values from 9,11,13,17,19,23, or `all`.
    #[arg(long, global = true, default_value = "all")]
    pub q: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Report file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,

    /// Restrict verify-paper to one construction, e.g. C17D.
    #[arg(long, global = true)]
    pub construction: Option<String>,

    /// Largest field (q^2) for which tables are built.
    #[arg(long, global = true, default_value_t = DEFAULT_TABLE_BOUND)]
    pub table_bound: usize,

    /// Write the census cliques here, one per line (JSON matrices, or
    /// indices with --format csv). With several q the file name gets `.q<q>`.
    #[arg(long, global = true)]
    pub dump_cliques: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Field tower, group order and graph parameters.
    Build,
    /// Second-largest maximal cliques and their orbit count.
    Census,
    /// One record per orbit of the census.
    Orbits,
    /// Check every named construction and the orbit counts.
    VerifyPaper,
    /// Clique size and orbit count per q.
    Table1,
    /// Adjacency as an edge list (csv), lower-triangular bits (text) or JSON.
    DumpGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub qs: Vec<u32>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub workers: usize,
    pub construction: Option<Label>,
    pub table_bound: usize,
    pub dump_cliques: Option<PathBuf>,
}

pub fn parse_q_list(s: &str) -> Result<Vec<u32>, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(SUPPORTED_Q.to_vec());
    }
    let mut qs = Vec::new();
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let q: u32 = t.parse().map_err(|_| format!("not a number: {t}"))?;
        if !SUPPORTED_Q.contains(&q) {
            return Err(format!(
                "unsupported q = {q}; expected one of 9,11,13,17,19,23"
            ));
        }
        qs.push(q);
    }
    if qs.is_empty() {
        return Err("empty q list".into());
    }
    qs.sort_unstable();
    qs.dedup();
    Ok(qs)
}

impl Cli {
    pub fn config(self) -> Result<RunConfig, String> {
        let construction = match &self.construction {
            Some(s) => Some(Label::parse(s).map_err(|_| format!("unknown construction {s}"))?),
            None => None,
        };
        let mut qs = parse_q_list(&self.q)?;
        if let Some(l) = construction {
            if self.command != Command::VerifyPaper {
                return Err("--construction only applies to verify-paper".into());
            }
            let q = l.spec().q;
            if self.q.trim().eq_ignore_ascii_case("all") {
                qs = vec![q];
            } else if !qs.contains(&q) {
                return Err(format!("{l} is a q = {q} construction"));
            }
        }
        if self.dump_cliques.is_some() && self.command != Command::Census {
            return Err("--dump-cliques only applies to census".into());
        }
        let workers = match self.workers {
            Some(n) => n as usize,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(RunConfig {
            command: self.command,
            qs,
            format: self.format,
            out: self.out,
            workers,
            construction,
            table_bound: self.table_bound,
            dump_cliques: self.dump_cliques,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_lists() {
        assert_eq!(parse_q_list("all").unwrap(), SUPPORTED_Q.to_vec());
        assert_eq!(parse_q_list("13, 9,13").unwrap(), vec![9, 13]);
        assert!(parse_q_list("7").is_err());
        assert!(parse_q_list("x").is_err());
        assert!(parse_q_list(",").is_err());
    }

    #[test]
    fn construction_picks_its_q() {
        let cli = Cli::parse_from(["paley-verify", "verify-paper", "--construction", "c17d"]);
        let cfg = cli.config().unwrap();
        assert_eq!((cfg.qs, cfg.construction), (vec![17], Some(Label::C17D)));
        let cli = Cli::parse_from([
            "paley-verify",
            "verify-paper",
            "--q",
            "9",
            "--construction",
            "C17D",
        ]);
        assert!(cli.config().is_err());
    }
}
