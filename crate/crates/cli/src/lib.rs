//! The `troot` command line.
//!
//! Every verb prints one JSON document to stdout (or aligned tables with
//! `--pretty`). Node indices are 1-based Bourbaki indices; `0` denotes α_0 in
//! `bds` output. Exit status is 1 for invalid input and 2 when `check` finds a
//! failing law.

mod pretty;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use troot_core::bds::{bds_doc, extended_diagram, maximal_doc};
use troot_core::levi::{troot_system, ParabolicDesignation};
use troot_core::rootsys::{generate, DEFAULT_MAX_RANK};
use troot_core::series::series_doc;
use troot_core::slnx::{sln_doc, Composition};
use troot_core::verify::{check_doc, Scope};
use troot_core::{CartanMatrix, RootSystem, SimpleType};

#[derive(Debug, Parser)]
#[command(name = "troot", version, about = "t-root systems of parabolic Levi factors, exactly")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full root system, highest root and marks.
    Roots {
        #[command(flatten)]
        ty: TypeSpec,
        #[command(flatten)]
        out: Output,
    },
    /// t-root spaces of a parabolic designation.
    Troots {
        #[command(flatten)]
        ty: TypeSpec,
        #[command(flatten)]
        des: Designation,
        #[command(flatten)]
        out: Output,
    },
    /// Grading and central series of the nilradical.
    Series {
        #[command(flatten)]
        ty: TypeSpec,
        #[command(flatten)]
        des: Designation,
        #[command(flatten)]
        out: Output,
    },
    /// Extended diagram and Borel–de Siebenthal node deletion.
    Bds {
        #[command(flatten)]
        ty: TypeSpec,
        /// Only this node (1-based).
        #[arg(long)]
        node: Option<usize>,
        /// Emit the extended diagram in DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Nodes with prime mark and the maximal equal-rank subalgebras they give.
    Maximal {
        #[command(flatten)]
        ty: TypeSpec,
        #[command(flatten)]
        out: Output,
    },
    /// Block table of a parabolic of sl(n), cross-checked with the t-root engine.
    Sln {
        /// Composition d1,d2,… of n with at least two parts.
        composition: String,
        #[command(flatten)]
        out: Output,
    },
    /// Run every law and report pass/fail per law.
    Check {
        /// A type, or `all` for every type up to --max-rank.
        #[arg(value_name = "TYPE")]
        name: Option<String>,
        /// Explicit Cartan matrix file instead of a type name.
        #[arg(long, value_name = "FILE")]
        cartan: Option<PathBuf>,
        /// Sweep all 2^ℓ - 1 proper parabolics instead of Borel plus maximal ones.
        #[arg(long)]
        all_parabolics: bool,
        /// Largest rank considered (default 8 for `all`, 12 otherwise).
        #[arg(long)]
        max_rank: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Args)]
struct TypeSpec {
    /// Simple type such as A2, E8, G2.
    #[arg(value_name = "TYPE", required_unless_present = "cartan")]
    name: Option<String>,
    /// Explicit Cartan matrix file: a JSON array of rows, or whitespace-separated rows.
    #[arg(long, value_name = "FILE", conflicts_with = "name")]
    cartan: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Designation {
    /// Kept nodes, comma separated (1-based); empty for the Borel case.
    #[arg(long, value_name = "LIST", conflicts_with = "delete", required_unless_present = "delete")]
    keep: Option<String>,
    /// Deleted nodes, comma separated (1-based).
    #[arg(long, value_name = "LIST")]
    delete: Option<String>,
}

#[derive(Debug, Args)]
struct Output {
    /// Aligned tables instead of JSON.
    #[arg(long)]
    pretty: bool,
}

/// Exit status with a message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn invalid(message: impl ToString) -> Failure {
    Failure { code: 1, message: message.to_string() }
}

impl From<troot_core::Error> for Failure {
    fn from(e: troot_core::Error) -> Failure {
        invalid(e)
    }
}

fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>, Failure> {
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(text).map_err(|e| invalid(format!("bad Cartan matrix JSON: {e}")));
    }
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i64>().map_err(|_| invalid(format!("bad Cartan matrix entry {t:?}"))))
                .collect()
        })
        .collect()
}

fn load_system(name: Option<&str>, cartan: Option<&PathBuf>, max_rank: usize) -> Result<RootSystem, Failure> {
    let rs = match (name, cartan) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
            generate(&CartanMatrix::new(parse_matrix(&text)?)?)?
        }
        (Some(name), None) => {
            let t: SimpleType = name.parse()?;
            if t.rank > max_rank {
                return Err(invalid(format!("rank {} exceeds the limit {max_rank}", t.rank)));
            }
            RootSystem::of_type(t)?
        }
        (None, None) => return Err(invalid("a type or --cartan file is required")),
    };
    if rs.rank() > max_rank {
        return Err(invalid(format!("rank {} exceeds the limit {max_rank}", rs.rank())));
    }
    Ok(rs)
}

impl TypeSpec {
    fn load(&self) -> Result<RootSystem, Failure> {
        load_system(self.name.as_deref(), self.cartan.as_ref(), DEFAULT_MAX_RANK)
    }
}

fn parse_nodes(list: &str, rank: usize) -> Result<Vec<usize>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
            _ => Err(invalid(format!("node {t:?} is not in 1..={rank}"))),
        })
        .collect()
}

impl Designation {
    fn resolve(&self, rank: usize) -> Result<ParabolicDesignation, Failure> {
        Ok(match (&self.keep, &self.delete) {
            (Some(k), _) => ParabolicDesignation::from_kept(rank, &parse_nodes(k, rank)?)?,
            (None, Some(d)) => ParabolicDesignation::from_deleted(rank, &parse_nodes(d, rank)?)?,
            (None, None) => return Err(invalid("one of --keep or --delete is required")),
        })
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, doc: &T, pretty: Option<String>) -> Result<(), Failure> {
    let text = match pretty {
        Some(t) => t,
        None => serde_json::to_string_pretty(doc).map_err(invalid)? + "\n",
    };
    out.write_all(text.as_bytes()).map_err(invalid)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Roots { ty, out: o } => {
            let rs = ty.load()?;
            let doc = rs.to_doc();
            emit(out, &doc, o.pretty.then(|| pretty::roots(&doc)))
        }
        Command::Troots { ty, des, out: o } => {
            let rs = ty.load()?;
            let tr = troot_system(&rs, &des.resolve(rs.rank())?)?;
            let doc = tr.to_doc();
            emit(out, &doc, o.pretty.then(|| pretty::troots(&doc)))
        }
        Command::Series { ty, des, out: o } => {
            let rs = ty.load()?;
            let tr = troot_system(&rs, &des.resolve(rs.rank())?)?;
            let doc = series_doc(&tr)?;
            emit(out, &doc, o.pretty.then(|| pretty::series(&doc)))
        }
        Command::Bds { ty, node, dot, out: o } => {
            let rs = ty.load()?;
            let node = match node {
                Some(0) => return Err(invalid("node 0 is α_0 and cannot be deleted here")),
                Some(j) if j > rs.rank() => return Err(invalid(format!("node {j} is not in 1..={}", rs.rank()))),
                Some(j) => Some(j - 1),
                None => None,
            };
            if dot {
                let ext = extended_diagram(&rs);
                return out.write_all(ext.to_dot(&rs, node.map(|j| j + 1)).as_bytes()).map_err(invalid);
            }
            let doc = bds_doc(&rs, node)?;
            emit(out, &doc, o.pretty.then(|| pretty::bds(&doc)))
        }
        Command::Maximal { ty, out: o } => {
            let rs = ty.load()?;
            let doc = maximal_doc(&rs)?;
            emit(out, &doc, o.pretty.then(|| pretty::maximal(&doc)))
        }
        Command::Sln { composition, out: o } => {
            let delta: Composition = composition.parse()?;
            let doc = sln_doc(&delta)?;
            emit(out, &doc, o.pretty.then(|| pretty::sln(&doc)))
        }
        Command::Check { name, cartan, all_parabolics, max_rank, out: o } => {
            let systems = if name.as_deref().is_some_and(|n| n.eq_ignore_ascii_case("all")) && cartan.is_none() {
                let cap = max_rank.unwrap_or(8);
                SimpleType::all_up_to(cap)
                    .into_iter()
                    .map(RootSystem::of_type)
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                vec![load_system(name.as_deref(), cartan.as_ref(), max_rank.unwrap_or(DEFAULT_MAX_RANK))?]
            };
            let scope = if all_parabolics { Scope::AllParabolics } else { Scope::Standard };
            let doc = check_doc(&systems, scope);
            emit(out, &doc, o.pretty.then(|| pretty::check(&doc)))?;
            if doc.passed {
                Ok(())
            } else {
                Err(Failure { code: 2, message: "one or more laws failed".into() })
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
