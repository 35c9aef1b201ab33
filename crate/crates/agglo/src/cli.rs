use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use agglo_core::{contract, engine, generate, FamilySpec, Graph};
use clap::{Parser, Subcommand};

use crate::edgelist::{self, EdgeListFile};
use crate::error::{CliError, EXIT_OK};
use crate::parallel::{imc_all_par, with_threads};
use crate::report::{render_phi, render_rank, ReportFormat};
use crate::verify::{render_verify, verify, Grid, IntRange};

#[derive(Debug, Parser)]
#[command(
    name = "agglo",
    version,
    about = "Rank influential nodes by node contraction and network agglomeration"
)]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = ReportFormat::Table, global = true)]
    pub format: ReportFormat,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for per-node and per-spec work (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a labelled family graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Rank every node of a connected graph by contraction importance.
    Rank {
        /// Edge-list file, or `-` for standard input.
        input: PathBuf,
    },
    /// Print the agglomeration and average path length of a graph.
    Phi { input: PathBuf },
    /// Contract one node and write the resulting graph.
    Contract {
        input: PathBuf,
        #[arg(long)]
        node: usize,
    },
    /// Compare engine values with the closed forms over a parameter grid.
    Verify {
        #[command(subcommand)]
        family: VerifyFamily,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    Path {
        #[arg(long)]
        n: usize,
    },
    Comet {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    DoubleComet {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    Lollipop {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

impl GenFamily {
    fn spec(&self) -> FamilySpec {
        match *self {
            GenFamily::Path { n } => FamilySpec::Path { n },
            GenFamily::Comet { s, t } => FamilySpec::Comet { s, t },
            GenFamily::DoubleComet { n, a, b } => FamilySpec::DoubleComet { n, a, b },
            GenFamily::Lollipop { n, d } => FamilySpec::Lollipop { n, d },
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum VerifyFamily {
    Path {
        #[arg(long, default_value = "4..40")]
        n: IntRange,
    },
    Comet {
        #[arg(long, default_value = "3..10")]
        s: IntRange,
        #[arg(long, default_value = "4..12")]
        t: IntRange,
    },
    /// Ranged by leaf counts `a`, `b` and spine length `k = n - a - b`.
    DoubleComet {
        #[arg(long, default_value = "2..6")]
        a: IntRange,
        #[arg(long, default_value = "2..6")]
        b: IntRange,
        #[arg(long, default_value = "4..10")]
        k: IntRange,
    },
    /// Ranged by path length `d` and clique size `nd = n - d`.
    Lollipop {
        #[arg(long, default_value = "4..12")]
        d: IntRange,
        #[arg(long, default_value = "2..8")]
        nd: IntRange,
    },
}

impl VerifyFamily {
    fn grid(&self) -> Grid {
        match *self {
            VerifyFamily::Path { n } => Grid::Path { n },
            VerifyFamily::Comet { s, t } => Grid::Comet { s, t },
            VerifyFamily::DoubleComet { a, b, k } => Grid::DoubleComet { a, b, k },
            VerifyFamily::Lollipop { d, nd } => Grid::Lollipop { d, nd },
        }
    }
}

fn read_input(path: &Path) -> Result<EdgeListFile, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Input {
                path: path.into(),
                source,
            })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Input {
            path: path.into(),
            source,
        })?
    };
    edgelist::parse(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn write_output(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn connected(g: &Graph) -> Result<(), CliError> {
    Ok(g.ensure_connected()?)
}

/// Executes a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> Result<i32, CliError> {
    let threads = cli.threads.map(usize::from);
    let output = cli.output.as_deref();
    match &cli.command {
        Command::Gen { family } => {
            let lg = generate(family.spec()).map_err(|e| CliError::Usage(e.to_string()))?;
            let classes: Vec<_> = lg.classes.iter().copied().map(Some).collect();
            write_output(output, &edgelist::render(&lg.graph, &classes))?;
        }
        Command::Rank { input } => {
            let file = read_input(input)?;
            connected(&file.graph)?;
            let report = with_threads(threads, || imc_all_par(&file.graph))?;
            write_output(
                output,
                &render_rank(&report, |v| file.class_of(v), cli.format),
            )?;
        }
        Command::Phi { input } => {
            let file = read_input(input)?;
            connected(&file.graph)?;
            let g = &file.graph;
            let phi = engine::phi(g)?;
            let apl = if g.order() >= 2 {
                Some(engine::average_path_length(g)?)
            } else {
                None
            };
            write_output(output, &render_phi(g.order(), phi, apl, cli.format))?;
        }
        Command::Contract { input, node } => {
            let file = read_input(input)?;
            connected(&file.graph)?;
            let result = contract(&file.graph, *node)?;
            let text = edgelist::render(&result.graph, &vec![None; result.graph.order()]);
            write_output(output, &text)?;
            let mut map = String::from("# old -> new\n");
            for (old, &new) in result.old_to_new.iter().enumerate() {
                let merged = if new == result.merged_into {
                    " (merged)"
                } else {
                    ""
                };
                let _ = writeln!(map, "{old} -> {new}{merged}");
            }
            if output.is_some() {
                std::io::stdout().lock().write_all(map.as_bytes())?;
            } else {
                std::io::stderr().lock().write_all(map.as_bytes())?;
            }
        }
        Command::Verify { family } => {
            let grid = family.grid();
            let report = with_threads(threads, || verify(&grid))?;
            write_output(output, &render_verify(&report, cli.format))?;
            return Ok(report.exit_code());
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args`, runs the command and maps every outcome to an exit code.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
