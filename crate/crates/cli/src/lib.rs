//! Command-line front end: the graph-spec language, the `param`,
//! `construct` and `verify` commands and their JSON reports.

pub mod args;
pub mod commands;
pub mod dsl;
pub mod report;
pub mod suite;

use args::{Cli, Command};
use commands::Output;

/// Runs a parsed command line; errors become a message on stderr.
pub fn execute(cli: Cli) -> (Output, Option<String>) {
    let res = match cli.command {
        Command::Param { graph, param, common } => commands::param(&graph, param, &common),
        Command::Construct { graph, via, lists, common } => commands::construct(&graph, &via, lists.as_ref(), &common),
        Command::Verify { filter, figure1, common, .. } => commands::verify(filter.as_deref(), figure1.as_deref(), &common),
        Command::Constructions { json } => Ok(commands::constructions(json)),
    };
    match res {
        Ok(out) => (out, None),
        Err(e) => (Output { stdout: String::new(), code: commands::error_code(&e) }, Some(format!("error: {e:#}"))),
    }
}
