//! Command-line front end.

mod input;
mod json;
mod table;

use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};

pub use input::{parse_h1, parse_order, parse_presentation, parse_retraction, parse_tree};
pub use json::{export_json, import_json, SCHEMA};
pub use table::render_tables;

use crate::error::{Error, Result};
use crate::group::{enumerate, CayleyGraph, Contraction0, MaximalTree, DEFAULT_MAX_COSETS};
use crate::rewriter::{H1Mode, H1Table, SearchLimits};
use crate::syzygy::{resolve, verify_state, EngineConfig, OrderPolicy, Report, ResolutionState};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// Compute a free crossed resolution of a finite group from a presentation.
#[derive(Clone, Debug, Parser)]
#[command(name = "crossres", version)]
pub struct Args {
    /// Presentation file: a `gens: x y` line, then `rel <name> = <word>` lines.
    pub presentation: PathBuf,
    /// Highest level to compute (at least 3).
    #[arg(long, default_value_t = 4)]
    pub max_level: usize,
    /// Maximal tree: `bfs` or a file of `<element-word> <generator>` edges.
    #[arg(long, default_value = "bfs")]
    pub tree: String,
    /// h1 values: `search` or a file of `<element-word> <generator> := <value>` lines.
    #[arg(long, default_value = "search")]
    pub h1: String,
    /// Reduction order: `declared`, `support`, or a file of
    /// `<level> <element-word> <source>` lines to offer first.
    #[arg(long, default_value = "declared")]
    pub order: String,
    /// File of `<level> <element-word> <source> := <certificate>` lines
    /// fixing the retraction of rejected candidates.
    #[arg(long)]
    pub retraction: Option<PathBuf>,
    /// Multiplication table file to use instead of coset enumeration.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Maximum number of relator moves in an h1 filling.
    #[arg(long, default_value_t = SearchLimits::default().max_depth)]
    pub max_depth: usize,
    /// Maximum intermediate word length in an h1 filling.
    #[arg(long)]
    pub max_length: Option<usize>,
    /// Maximum number of search nodes per h1 filling.
    #[arg(long, default_value_t = SearchLimits::default().max_nodes)]
    pub max_nodes: usize,
    /// Coset limit for enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
    pub max_cosets: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Re-check all equations and report; the exit status reflects the result.
    #[arg(long)]
    pub verify: bool,
    /// Write `resolution.json`, `tables.txt` and `verify.txt` here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

/// Loads inputs and runs the pipeline up to `args.max_level`.
pub fn build_state(args: &Args) -> Result<ResolutionState> {
    if args.max_level < 3 {
        return Err(Error::Config("--max-level must be at least 3".into()));
    }
    let pres = parse_presentation(&read_file(&args.presentation)?)?;
    let group = match &args.table {
        Some(p) => CayleyGraph::load_table(&pres, &read_file(p)?)?,
        None => enumerate(&pres, args.max_cosets)?,
    };
    let tree = match args.tree.as_str() {
        "bfs" => MaximalTree::bfs_shortlex(&group),
        path => parse_tree(&read_file(Path::new(path))?, &pres, &group)?,
    };
    let contraction = Contraction0::from_tree(&group, &tree);
    let limits = SearchLimits {
        max_depth: args.max_depth,
        max_length: args.max_length,
        max_nodes: args.max_nodes,
    };
    let h1 = match args.h1.as_str() {
        "search" => H1Table::build(&pres, &group, &tree, &contraction, H1Mode::Search(limits))?,
        path => {
            let given = parse_h1(&read_file(Path::new(path))?, &pres, &group)?;
            H1Table::build(&pres, &group, &tree, &contraction, H1Mode::Given(&given))?
        }
    };
    let order = match args.order.as_str() {
        "declared" => OrderPolicy::Declared,
        "support" => OrderPolicy::Support,
        path => OrderPolicy::Explicit(parse_order(&read_file(Path::new(path))?, &pres, &group)?),
    };
    let pinned = match &args.retraction {
        Some(p) => parse_retraction(&read_file(p)?, &pres, &group)?,
        None => Default::default(),
    };
    let config = EngineConfig { order, pinned };
    let mut state = ResolutionState::new(pres, group, tree, contraction, h1);
    resolve(&mut state, args.max_level, &config)?;
    Ok(state)
}

/// Result of a run: rendered artifacts plus the verification report.
pub struct Outcome {
    pub tables: String,
    pub json: String,
    pub report: Option<Report>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match &self.report {
            Some(r) if !r.passed() => 1,
            _ => 0,
        }
    }
}

pub fn run(args: &Args) -> Result<Outcome> {
    let state = build_state(args)?;
    let report = args.verify.then(|| verify_state(&state));
    let outcome = Outcome {
        tables: render_tables(&state),
        json: export_json(&state),
        report,
    };
    match &args.out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| Error::Io {
                path: dir.display().to_string(),
                msg: e.to_string(),
            })?;
            write_file(&dir.join("resolution.json"), &outcome.json)?;
            write_file(&dir.join("tables.txt"), &outcome.tables)?;
            if let Some(r) = &outcome.report {
                write_file(&dir.join("verify.txt"), &r.to_string())?;
            }
        }
        None => {
            match args.format {
                Format::Table => print!("{}", outcome.tables),
                Format::Json => print!("{}", outcome.json),
            }
            if let Some(r) = &outcome.report {
                if args.format == Format::Table {
                    println!();
                    print!("{r}");
                } else {
                    eprint!("{r}");
                }
            }
        }
    }
    Ok(outcome)
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args(args: Args) -> i32 {
    match run(&args) {
        Ok(o) => {
            if let Some(r) = &o.report {
                if r.passed() {
                    eprintln!("verification passed");
                } else {
                    eprintln!("verification FAILED");
                }
            }
            o.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
