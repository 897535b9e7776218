//! Command-line front end: instance files in, reports out.

pub mod instance;
pub mod orient_scan;
pub mod report;
pub mod verify;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use thiserror::Error;

pub use instance::{instance_digest, parse_instance, render_instance, Instance, InstanceError};
pub use orient_scan::{orient_scan, OrientScan, OrientScanError};
pub use report::{Check, Report};

use crate::dijoin::{
    max_disjoint_directed_cuts, min_dijoins_with_limit, minfas_rooted_with_limit, minfas_with_limit,
    DijoinError, DEFAULT_EDGE_LIMIT,
};
use crate::greedoid::{branching_greedoid, GreedoidError};
use crate::matroid::{MatroidError, OrientedRegularMatroid};
use crate::parking::{parking_enumerator, parking_functions, ParkingError};
use crate::polytope::{classify_facets, FacetKind, PolytopeError, RootPolytope};

#[derive(Parser, Debug)]
#[command(name = "rootpoly", version, about = "Interior polynomials of digraphs and regular matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit the key-sorted JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Edge budget for exhaustive dijoin and feedback arc set searches.
    #[arg(long, global = true, default_value_t = DEFAULT_EDGE_LIMIT)]
    pub max_edges: usize,
    /// Skip the total unimodularity test on matrix input.
    #[arg(long, global = true)]
    pub trust_tu: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// h*-polynomial of the extended root polytope.
    Interior { path: PathBuf },
    /// Minimum dijoins, their net degree vectors and a directed cut packing.
    Dijoin { path: PathBuf },
    /// Minimum feedback arc set, optionally keeping every vertex reachable from a root.
    Minfas {
        path: PathBuf,
        #[arg(long)]
        root: Option<usize>,
    },
    /// Parking functions and their enumerator.
    Parking {
        path: PathBuf,
        #[arg(long)]
        root: usize,
    },
    /// Greedoid polynomial of the branching greedoid.
    Greedoid {
        path: PathBuf,
        #[arg(long)]
        root: usize,
        /// Comma-separated permutation of edge indices; defaults to file order.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Interior polynomial of the matroid of a matrix or digraph.
    MatroidInterior { path: PathBuf },
    /// A totally unimodular representation of the dual matroid.
    Dual { path: PathBuf },
    /// Facets of the extended root polytope with their combinatorial labels.
    Facets { path: PathBuf },
    /// Interior polynomials over all orientations of an undirected graph.
    OrientScan { path: PathBuf },
    /// Run every applicable identity check on a file or on each file of a directory.
    Verify {
        path: PathBuf,
        #[arg(long)]
        root: Option<usize>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Interior { .. } => "interior",
            Command::Dijoin { .. } => "dijoin",
            Command::Minfas { .. } => "minfas",
            Command::Parking { .. } => "parking",
            Command::Greedoid { .. } => "greedoid",
            Command::MatroidInterior { .. } => "matroid-interior",
            Command::Dual { .. } => "dual",
            Command::Facets { .. } => "facets",
            Command::OrientScan { .. } => "orient-scan",
            Command::Verify { .. } => "verify",
        }
    }

    pub fn path(&self) -> &Path {
        match self {
            Command::Interior { path }
            | Command::Dijoin { path }
            | Command::Minfas { path, .. }
            | Command::Parking { path, .. }
            | Command::Greedoid { path, .. }
            | Command::MatroidInterior { path }
            | Command::Dual { path }
            | Command::Facets { path }
            | Command::OrientScan { path }
            | Command::Verify { path, .. } => path,
        }
    }
}

/// Flags shared by all commands.
#[derive(Clone, Debug)]
pub struct Options {
    pub max_edges: usize,
    pub trust_tu: bool,
    pub root: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            max_edges: DEFAULT_EDGE_LIMIT,
            trust_tu: false,
            root: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Dijoin(#[from] DijoinError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Greedoid(#[from] GreedoidError),
    #[error(transparent)]
    Parking(#[from] ParkingError),
    #[error(transparent)]
    OrientScan(#[from] OrientScanError),
}

fn wrong_kind(cmd: &str, found: &Instance) -> CliError {
    CliError::Input(format!("`{cmd}` does not accept {} input", found.kind()))
}

fn matroid_of(instance: &Instance, opts: &Options) -> Result<OrientedRegularMatroid, CliError> {
    match instance {
        Instance::Matrix { cols, rows } => Ok(if opts.trust_tu {
            OrientedRegularMatroid::new_trusted(*cols, rows.clone())?
        } else {
            OrientedRegularMatroid::new(*cols, rows.clone())?
        }),
        Instance::Digraph(g) => Ok(OrientedRegularMatroid::graphic(g)),
        other => Err(wrong_kind("matroid", other)),
    }
}

/// Runs one command on a parsed instance.
pub fn run_command(
    cmd: &Command,
    instance: &Instance,
    name: &str,
    opts: &Options,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut r = Report::new(cmd.name(), name, instance_digest(instance));
    let limit = opts.max_edges;
    match (cmd, instance) {
        (Command::Interior { .. }, Instance::Digraph(g)) => {
            if !g.is_weakly_connected() {
                return Err(PolytopeError::DisconnectedInput.into());
            }
            let p = RootPolytope::of_digraph(g)?;
            r.value("interior_polynomial", p.hstar()?);
            r.value("dimension", p.dim());
            r.value("facets", p.facets()?.len());
        }
        (Command::Interior { .. }, Instance::Matrix { .. })
        | (Command::MatroidInterior { .. }, _) => {
            let m = matroid_of(instance, opts)?;
            r.value("rank", m.rank());
            let cert = m.min_dijoins()?;
            r.value("nu", cert.nu);
            r.value("dijoin_column_sums", &cert.net_degree_vectors);
            r.value("interior_polynomial", m.interior_polynomial()?);
        }
        (Command::Dijoin { .. }, Instance::Digraph(g)) => {
            let cert = min_dijoins_with_limit(g, limit)?;
            let (packing, cuts) = max_disjoint_directed_cuts(g)?;
            r.value("nu", cert.nu);
            r.value("min_dijoin_count", cert.min_dijoins.len());
            r.value("min_dijoins", &cert.min_dijoins);
            r.value("net_degree_vectors", &cert.net_degree_vectors);
            r.value("max_disjoint_directed_cuts", packing);
            r.value(
                "disjoint_cut_witness",
                cuts.iter().map(|c| c.edges).collect::<Vec<_>>(),
            );
            r.check(
                "min_dijoin_equals_max_disjoint_cuts",
                packing == cert.nu,
                None,
            );
        }
        (Command::Minfas { root, .. }, Instance::Digraph(g)) => {
            let fas = match root {
                Some(s) => minfas_rooted_with_limit(g, *s, limit)?,
                None => minfas_with_limit(g, limit)?,
            };
            r.value("minfas", fas.size);
            r.value("witness", fas.witness);
            if let Some(s) = root {
                r.value("root", s);
            }
        }
        (Command::Parking { root, .. }, Instance::Digraph(g)) => {
            let functions = parking_functions(g, *root)?;
            r.value("root", root);
            r.value("parking_enumerator", parking_enumerator(g, *root)?);
            r.value("parking_function_count", functions.len());
            r.value("parking_functions", functions);
        }
        (Command::Greedoid { root, order, .. }, Instance::Digraph(g)) => {
            let x = branching_greedoid(g, *root)?;
            let order = order.clone().unwrap_or_else(|| x.natural_order());
            let activities = x.activities(&order)?;
            r.value("root", root);
            r.value("order", &order);
            r.value("rank", x.rank());
            r.value("basis_count", x.bases().len());
            r.value("greedoid_polynomial", x.greedoid_polynomial_with_order(&order)?);
            r.value("activities", activities);
        }
        (Command::Dual { .. }, _) => {
            let m = match instance {
                Instance::Digraph(g) => OrientedRegularMatroid::graphic(g),
                _ => matroid_of(instance, opts)?,
            };
            let d = m.dual()?;
            r.value("rank", d.rank());
            r.value("matrix", d.matrix());
        }
        (Command::Facets { .. }, Instance::Digraph(g)) => {
            let p = RootPolytope::of_digraph(g)?;
            let c = classify_facets(&p, g)?;
            let facets = p.facets()?;
            r.value("facet_count", facets.len());
            r.value(
                "cut_facets",
                c.cut_facets
                    .iter()
                    .map(|(i, cut)| (&facets[*i].normal, cut.edges))
                    .collect::<Vec<_>>(),
            );
            r.value(
                "layering_facets",
                c.layering_facets
                    .iter()
                    .map(|(i, l)| (&facets[*i].normal, l))
                    .collect::<Vec<_>>(),
            );
            r.check(
                "facets_match_cuts_and_layerings",
                facets.iter().all(|f| matches!(f.kind, FacetKind::Cut | FacetKind::Layering)),
                None,
            );
        }
        (Command::Facets { .. }, Instance::Matrix { .. }) => {
            let m = matroid_of(instance, opts)?;
            let rep = m.check_facet_description()?;
            r.check(
                "facets_match_cocircuits_and_admissible_vectors",
                rep.holds(),
                (!rep.failures.is_empty()).then(|| rep.failures.join("; ")),
            );
            r.value("facet_description", rep);
        }
        (Command::OrientScan { .. }, Instance::Ugraph(u)) => {
            let scan = orient_scan(u, orient_scan::DEFAULT_SCAN_LIMIT)?;
            r.check(
                "max_degree_attained_by_cycle_covered_orientations",
                scan.max_degree_rule_holds,
                None,
            );
            if let Some(ok) = scan.standard_attains_min_degree {
                r.check("standard_orientation_minimizes_degree", ok, None);
            }
            r.value("scan", scan);
        }
        (Command::Verify { .. }, Instance::Digraph(g)) => verify::verify_digraph(&mut r, g, opts)?,
        (Command::Verify { .. }, Instance::Ugraph(u)) => verify::verify_ugraph(&mut r, u)?,
        (Command::Verify { .. }, Instance::Matrix { .. }) => {
            let m = matroid_of(instance, opts)?;
            verify::verify_matroid(&mut r, &m)?
        }
        (c, other) => return Err(wrong_kind(c.name(), other)),
    }
    r.elapsed = start.elapsed();
    Ok(r)
}

fn read_instance(path: &Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_instance(&text)?)
}

fn instance_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let p = entry.map_err(io)?.path();
        if p.is_file() {
            files.push(p);
        }
    }
    files.sort();
    Ok(files)
}

/// Exit status: all checks passed.
pub const EXIT_OK: i32 = 0;
/// Exit status: some check failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit status: unreadable, malformed or unsupported input.
pub const EXIT_INPUT_ERROR: i32 = 2;

fn file_name(p: &Path) -> String {
    p.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| p.display().to_string())
}

/// Runs a parsed command line, writing reports to `out` and diagnostics to
/// `err`. Returns the exit status.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let opts = Options {
        max_edges: cli.max_edges,
        trust_tu: cli.trust_tu,
        root: match &cli.command {
            Command::Verify { root, .. } => *root,
            _ => None,
        },
    };
    let path = cli.command.path();
    let files = if matches!(cli.command, Command::Verify { .. }) && path.is_dir() {
        match instance_files(path) {
            Ok(f) => f,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INPUT_ERROR;
            }
        }
    } else {
        vec![path.to_path_buf()]
    };
    let results: Vec<(String, Result<Report, CliError>)> = files
        .par_iter()
        .map(|p| {
            let name = file_name(p);
            let res = read_instance(p).and_then(|inst| run_command(&cli.command, &inst, &name, &opts));
            (name, res)
        })
        .collect();

    let mut status = EXIT_OK;
    let mut reports = Vec::new();
    for (name, res) in results {
        match res {
            Ok(r) => {
                if !r.passed() && status == EXIT_OK {
                    status = EXIT_CHECK_FAILED;
                }
                reports.push(r);
            }
            Err(e) => {
                let _ = writeln!(err, "error: {name}: {e}");
                status = EXIT_INPUT_ERROR;
            }
        }
    }
    let batch = path.is_dir();
    if cli.json {
        if batch {
            let all: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| serde_json::to_value(r).expect("report serializes"))
                .collect();
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&all).expect("serializes"));
        } else {
            for r in &reports {
                let _ = write!(out, "{}", r.to_json());
            }
        }
    } else {
        for r in &reports {
            let _ = write!(out, "{}", r.to_text());
        }
    }
    status
}

/// Entry point shared by the binary: parses `args` and runs.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    execute(&cli, &mut stdout.lock(), &mut stderr.lock())
}
