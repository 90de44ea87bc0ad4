use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rainbow_core::exact::ParamTag;

use crate::dsl::GraphSpec;

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow connection numbers and their list variants on small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one parameter of one graph.
    Param {
        /// Graph spec, e.g. `cycle:7`, `kmn:2,5`, `file:g.txt`, `edges:0-1,1-2`.
        #[arg(long)]
        graph: GraphSpec,
        /// One of rc, src, rcl, srcl, chil, chipl.
        #[arg(long)]
        param: ParamTag,
        #[command(flatten)]
        common: Common,
    },
    /// Check the built-in table of known values.
    Verify {
        #[arg(long, default_value = "paper", value_parser = ["paper"])]
        suite: String,
        /// Keep rows whose id contains this text or whose group equals it.
        #[arg(long)]
        filter: Option<String>,
        /// File holding the two graphs `H` and `G` of the spanning-subgraph example, separated by a `---` line.
        #[arg(long)]
        figure1: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named colouring procedure on a graph and check its output.
    Construct {
        #[arg(long)]
        graph: GraphSpec,
        /// Procedure name; `rainbow constructions` lists them.
        #[arg(long)]
        via: String,
        /// `constant:R`, `random:R[,SEED[,UNIVERSE]]` or `file:PATH`; defaults to constant lists of the required size.
        #[arg(long)]
        lists: Option<ListSource>,
        #[command(flatten)]
        common: Common,
    },
    /// List the available colouring procedures.
    Constructions {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Search node budget; accepts `100000000` or `1e8`.
    #[arg(long, default_value = "1e8", value_parser = parse_budget)]
    pub budget_nodes: u64,
    /// Worker threads for the searches; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
    /// Leave wall-clock time out of the report so reruns are byte-identical.
    #[arg(long)]
    pub no_timing: bool,
}

/// Integer or decimal scientific notation naming a whole number of nodes.
pub fn parse_budget(s: &str) -> Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return if n == 0 { Err("budget must be positive".into()) } else { Ok(n) };
    }
    let err = || format!("expected a positive whole number such as 100000000 or 2e9, found {s:?}");
    let (mant, exp) = s.split_once(['e', 'E']).ok_or_else(err)?;
    let exp: u32 = exp.parse().map_err(|_| err())?;
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{int}{frac}");
    let shift = exp.checked_sub(frac.len() as u32).ok_or_else(err)?;
    let base: u64 = digits.parse().map_err(|_| err())?;
    let n = 10u64.checked_pow(shift).and_then(|p| base.checked_mul(p)).ok_or_else(err)?;
    if n == 0 {
        return Err(err());
    }
    Ok(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListSource {
    Constant(usize),
    Random { r: usize, seed: Option<u64>, universe: Option<usize> },
    File(PathBuf),
}

impl FromStr for ListSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let err = || format!("expected constant:R, random:R[,SEED[,UNIVERSE]] or file:PATH, found {s:?}");
        let (kind, rest) = s.split_once(':').ok_or_else(err)?;
        match kind {
            "file" if !rest.is_empty() => Ok(ListSource::File(rest.into())),
            "constant" => rest.parse().map(ListSource::Constant).map_err(|_| err()),
            "random" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() > 3 {
                    return Err(err());
                }
                let r = parts[0].parse().map_err(|_| err())?;
                let seed = parts.get(1).map(|p| p.parse()).transpose().map_err(|_| err())?;
                let universe = parts.get(2).map(|p| p.parse()).transpose().map_err(|_| err())?;
                Ok(ListSource::Random { r, seed, universe })
            }
            _ => Err(err()),
        }
    }
}

impl std::fmt::Display for ListSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ListSource::Constant(r) => write!(f, "constant:{r}"),
            ListSource::Random { r, seed, universe } => {
                write!(f, "random:{r}")?;
                if let Some(s) = seed {
                    write!(f, ",{s}")?;
                    if let Some(u) = universe {
                        write!(f, ",{u}")?;
                    }
                }
                Ok(())
            }
            ListSource::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budgets() {
        assert_eq!(parse_budget("2e9"), Ok(2_000_000_000));
        assert_eq!(parse_budget("1e8"), Ok(100_000_000));
        assert_eq!(parse_budget("2.5e3"), Ok(2500));
        assert_eq!(parse_budget("12345"), Ok(12345));
        for bad in ["0", "-1", "1.5e0", "e9", "1e99", "abc", "", "1e"] {
            assert!(parse_budget(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn list_sources() {
        assert_eq!("constant:3".parse(), Ok(ListSource::Constant(3)));
        assert_eq!("random:2,42".parse(), Ok(ListSource::Random { r: 2, seed: Some(42), universe: None }));
        assert_eq!("random:3".parse(), Ok(ListSource::Random { r: 3, seed: None, universe: None }));
        assert_eq!("file:l.txt".parse(), Ok(ListSource::File("l.txt".into())));
        for bad in ["constant", "random:", "random:1,2,3,4", "file:", "uniform:3"] {
            assert!(bad.parse::<ListSource>().is_err(), "{bad}");
        }
        for s in ["constant:3", "random:2,42", "random:2,42,9", "file:l.txt"] {
            assert_eq!(s.parse::<ListSource>().unwrap().to_string(), s);
        }
    }
}
