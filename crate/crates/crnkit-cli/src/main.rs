//! crnkit: exact stoichiometric analysis and reduction of reaction
//! networks.

use clap::{Parser, Subcommand};
use crnkit_cli::commands::{self, CommandOutput, EdgeSpec};
use crnkit_cli::enumerate::EnumerationConfig;
use crnkit_cli::format;
use crnkit_cli::CliError;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "crnkit", version, about = "Exact analysis and Schur-complement reduction of reaction networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the stoichiometric matrix, rank, flux basis and conserved charges.
    Info {
        network: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a subnetwork: output-completeness, buffering index, compatibility.
    Check {
        network: PathBuf,
        /// Internal species, comma-separated.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        species: Vec<String>,
        /// Internal edges, comma-separated, or `auto` for the output-closure.
        #[arg(long, default_value = "auto")]
        edges: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate buffering structures.
    Enumerate {
        network: PathBuf,
        /// Largest internal species subset to consider (default: all species).
        #[arg(long)]
        max_internal: Option<usize>,
        /// Also explore edge sets beyond the output-closure.
        #[arg(long)]
        include_edge_supersets: bool,
        /// Keep only candidates satisfying both compatibility conditions.
        #[arg(long)]
        require_compat: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reduce along a buffering structure and write the reduced network.
    Reduce {
        network: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        species: Vec<String>,
        #[arg(long, default_value = "auto")]
        edges: String,
        /// Where to write the reduced network.
        #[arg(long, short)]
        output: PathBuf,
        /// Compute sigma even when output-completeness or lambda = 0 fail.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reconstruct a network from a labeled matrix file.
    Recon {
        matrix: PathBuf,
        #[arg(long, short)]
        output: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Verify the reduction theorem's checks for a subnetwork.
    Verify {
        network: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        species: Vec<String>,
        #[arg(long, default_value = "auto")]
        edges: String,
        #[arg(long)]
        json: bool,
    },
}

fn parse_edges(raw: &str) -> EdgeSpec {
    if raw == "auto" {
        EdgeSpec::Auto
    } else if raw.is_empty() {
        EdgeSpec::Explicit(Vec::new())
    } else {
        EdgeSpec::Explicit(raw.split(',').map(str::to_string).collect())
    }
}

fn run(cli: Cli) -> Result<(CommandOutput, bool), CliError> {
    match cli.command {
        Command::Info { network, json } => commands::cmd_info(&network).map(|o| (o, json)),
        Command::Check { network, species, edges, json } => {
            commands::cmd_check(&network, &species, &parse_edges(&edges)).map(|o| (o, json))
        }
        Command::Enumerate { network, max_internal, include_edge_supersets, require_compat, json } => {
            let crn = format::parse_crn_file(&network)?;
            let config = EnumerationConfig {
                max_internal_species: max_internal.unwrap_or(crn.species().len()),
                include_edge_supersets,
                require_compatibility: require_compat,
            };
            commands::cmd_enumerate(&network, &config).map(|o| (o, json))
        }
        Command::Reduce { network, species, edges, output, force, json } => {
            commands::cmd_reduce(&network, &species, &parse_edges(&edges), &output, force)
                .map(|o| (o, json))
        }
        Command::Recon { matrix, output, json } => {
            commands::cmd_recon(&matrix, &output).map(|o| (o, json))
        }
        Command::Verify { network, species, edges, json } => {
            commands::cmd_verify(&network, &species, &parse_edges(&edges)).map(|o| (o, json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((output, as_json)) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&output.json).expect("reports serialize"));
            } else {
                print!("{}", output.text);
            }
            if output.all_checks_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
