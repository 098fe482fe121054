use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use semigraph::{
    adjacency, bounds, eigenvalues, excess, random_semigraph, reconstruct, skeleton_adjacency,
    star_type1, star_type2, sum_identities, RecognitionOptions, RecognitionOutcome, Semigraph,
    SpectrumError, StarFamily, SymMatrix,
};
use thiserror::Error;

use crate::fmt_real;
use crate::format::{emit_qmat, emit_smg, parse_qmat, parse_smg, FormatError};

#[derive(Parser, Debug)]
#[command(
    name = "semigraph",
    version,
    about = "Adjacency matrices and spectra of semigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a .smg file describes a valid semigraph.
    Validate { file: PathBuf },
    /// Print the adjacency matrix (or its skeleton or excess part).
    Matrix(MatrixArgs),
    /// Print the eigenvalues, largest first, and their multiplicities.
    Spectrum {
        file: PathBuf,
        /// Off-diagonal convergence tolerance, relative to the Frobenius norm.
        #[arg(long, default_value_t = semigraph::spectra::DEFAULT_TOLERANCE)]
        tol: f64,
        /// Merge radius for multiplicities, relative to the spectral radius.
        #[arg(long, default_value_t = semigraph::spectra::DEFAULT_CLUSTER_TOLERANCE)]
        cluster: f64,
    },
    /// Compare the largest eigenvalue with its three bounds; exits 1 if one fails.
    Bounds {
        file: PathBuf,
        /// Also show the trace bound computed from the printed closed form.
        #[arg(long)]
        paper_trace: bool,
    },
    /// Decide whether a .qmat matrix is semigraphical and rebuild the semigraph.
    Recognize {
        file: PathBuf,
        /// Write the reconstructed semigraph here instead of printing it.
        #[arg(long, value_name = "OUT")]
        emit: Option<PathBuf>,
        /// Treat all-zero rows as isolated vertices.
        #[arg(long)]
        allow_isolated: bool,
    },
    /// Generate a member of a star family.
    Star {
        #[arg(long, value_parser = parse_family)]
        family: StarFamily,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=10_000))]
        n: u32,
        /// Write the semigraph here instead of printing it.
        #[arg(long, value_name = "OUT", conflicts_with = "qmat")]
        emit: Option<PathBuf>,
        /// Print the adjacency matrix instead of the edge list.
        #[arg(long)]
        qmat: bool,
    },
    /// Generate a seeded random semigraph.
    Random {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=100_000))]
        vertices: u32,
        #[arg(long)]
        edges: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        max_size: u32,
        #[arg(long)]
        seed: u64,
    },
    /// Degree sum and trace of A^2: direct, printed closed form and corrected closed form.
    Identities { file: PathBuf },
}

#[derive(Args, Debug)]
struct MatrixArgs {
    file: PathBuf,
    /// The 0/1 skeleton matrix.
    #[arg(long, group = "view")]
    skeleton: bool,
    /// The excess matrix A - A^S.
    #[arg(long, group = "view")]
    excess: bool,
    /// Check A = A^S + A^E; exits 1 on a mismatch.
    #[arg(long, group = "view")]
    check_decomposition: bool,
}

fn parse_family(s: &str) -> Result<StarFamily, SpectrumError> {
    s.parse()
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Spectrum(#[from] SpectrumError),
    /// A well-formed input that fails the requested check.
    #[error("{0}")]
    Rejected(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Format { source, .. } if source.is_syntax() => 2,
            CliError::Io { .. } => 2,
            _ => 1,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_smg(path: &Path) -> Result<Semigraph, CliError> {
    parse_smg(&read(path)?).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

fn load_qmat(path: &Path) -> Result<SymMatrix, CliError> {
    parse_qmat(&read(path)?).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

/// Runs the command line `args` (program name first), writing to `out` and
/// `err`, and returns the exit code: 0 success, 1 rejected input, 2 usage or
/// syntax error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = execute(cli.command, &mut buf, err);
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<i32, CliError> {
    use std::fmt::Write as _;
    let mut s = String::new();
    let code = match command {
        Command::Validate { file } => {
            let g = load_smg(&file)?;
            let c = g.edge_counts();
            writeln!(
                s,
                "valid semigraph: {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            )
            .unwrap();
            writeln!(
                s,
                "edge classes: full {}, quarter {}, half (one partial) {}, half (two partial) {}",
                c.m1, c.m2, c.m3, c.m4
            )
            .unwrap();
            writeln!(
                s,
                "connected: {}",
                if g.is_connected() { "yes" } else { "no" }
            )
            .unwrap();
            for (v, class) in g.vertex_classes().iter().enumerate() {
                writeln!(s, "v{} {class:?}", v + 1).unwrap();
            }
            0
        }
        Command::Matrix(args) => {
            let g = load_smg(&args.file)?;
            if args.check_decomposition {
                let a = adjacency(&g);
                let sum = skeleton_adjacency(&g).add(&excess(&g));
                if let Some((i, j)) = sum.first_difference(&a) {
                    return Err(CliError::Rejected(format!(
                        "A^S + A^E differs from A at ({}, {}): {} vs {}",
                        i + 1,
                        j + 1,
                        sum.get(i, j),
                        a.get(i, j)
                    )));
                }
                writeln!(s, "A = A^S + A^E holds").unwrap();
            } else if args.skeleton {
                s.push_str(&emit_qmat(&skeleton_adjacency(&g)));
            } else if args.excess {
                s.push_str(&emit_qmat(&excess(&g)));
            } else {
                s.push_str(&emit_qmat(&adjacency(&g)));
            }
            0
        }
        Command::Spectrum { file, tol, cluster } => {
            let g = load_smg(&file)?;
            let spectrum = eigenvalues(&adjacency(&g), tol)?.with_cluster_tolerance(cluster);
            let snap = 1e-10 * spectrum.spectral_radius().max(1.0);
            writeln!(s, "eigenvalues:").unwrap();
            for &v in spectrum.values() {
                writeln!(s, "  {}", fmt_real(v, snap)).unwrap();
            }
            writeln!(s, "distinct (value, multiplicity):").unwrap();
            for (v, m) in spectrum.clusters() {
                writeln!(s, "  {} {m}", fmt_real(v, snap)).unwrap();
            }
            0
        }
        Command::Bounds { file, paper_trace } => {
            let g = load_smg(&file)?;
            let spectrum = eigenvalues(&adjacency(&g), semigraph::spectra::DEFAULT_TOLERANCE)?;
            let r = bounds(&g, &spectrum)?;
            if !r.connected {
                let _ = writeln!(err, "warning: the semigraph is not connected");
            }
            let f = |x: f64| fmt_real(x, 1e-12);
            let holds = |b: bool| if b { "holds" } else { "VIOLATED" };
            writeln!(s, "lambda1 {}", f(r.lambda1)).unwrap();
            writeln!(
                s,
                "r(r-1)/2 * max skeleton degree {} (r = {}, max skeleton degree = {}) {}",
                f(r.bound_skeleton),
                r.rank,
                r.max_skeleton_degree,
                holds(r.holds_skeleton)
            )
            .unwrap();
            writeln!(
                s,
                "min degree {} {}",
                f(r.bound_delta),
                holds(r.holds_delta)
            )
            .unwrap();
            match r.bound_trace_graph {
                Some(b) => {
                    writeln!(s, "sqrt(2m(n-1)/n) {} {}", f(b), holds(r.holds_trace)).unwrap()
                }
                None => writeln!(
                    s,
                    "sqrt(trace(A^2)(n-1)/n) {} {}",
                    f(r.bound_trace),
                    holds(r.holds_trace)
                )
                .unwrap(),
            }
            if paper_trace {
                writeln!(
                    s,
                    "sqrt(trace(A^2)(n-1)/n) with printed closed form {}",
                    f(r.bound_trace_paper)
                )
                .unwrap();
            }
            if r.all_hold() {
                0
            } else {
                out.extend_from_slice(s.as_bytes());
                return Err(CliError::Rejected("a bound is violated".into()));
            }
        }
        Command::Recognize {
            file,
            emit,
            allow_isolated,
        } => {
            let m = load_qmat(&file)?;
            let opts = RecognitionOptions {
                allow_isolated,
                check_uniqueness: true,
                ..Default::default()
            };
            match reconstruct(&m, opts) {
                RecognitionOutcome::Rejected(r) => {
                    return Err(CliError::Rejected(format!("not semigraphical: {r}")));
                }
                RecognitionOutcome::Accepted(r) => {
                    let text = emit_smg(&r.semigraph);
                    match &emit {
                        Some(path) => {
                            write_file(path, &text)?;
                            writeln!(
                                s,
                                "semigraphical: {} edges written to {}",
                                r.semigraph.edge_count(),
                                path.display()
                            )
                            .unwrap();
                        }
                        None => {
                            writeln!(s, "semigraphical").unwrap();
                            s.push_str(&text);
                        }
                    }
                    if let Some(alt) = &r.alternative {
                        let _ = writeln!(err, "warning: another semigraph has the same matrix:");
                        let _ = err.write_all(emit_smg(alt).as_bytes());
                    } else if r.search_truncated {
                        let _ =
                            writeln!(err, "warning: uniqueness search stopped at its node budget");
                    }
                    0
                }
            }
        }
        Command::Star {
            family,
            n,
            emit,
            qmat,
        } => {
            let g = match family {
                StarFamily::TypeI => star_type1(n as usize),
                StarFamily::TypeII => star_type2(n as usize),
            };
            if qmat {
                s.push_str(&emit_qmat(&adjacency(&g)));
            } else if let Some(path) = emit {
                write_file(&path, &emit_smg(&g))?;
            } else {
                s.push_str(&emit_smg(&g));
            }
            0
        }
        Command::Random {
            vertices,
            edges,
            max_size,
            seed,
        } => {
            let g = random_semigraph(vertices as usize, edges as usize, max_size as usize, seed);
            s.push_str(&emit_smg(&g));
            0
        }
        Command::Identities { file } => {
            let g = load_smg(&file)?;
            let r = sum_identities(&g);
            let c = r.counts;
            writeln!(
                s,
                "edge classes: m1 {} m2 {} m3 {} m4 {}",
                c.m1, c.m2, c.m3, c.m4
            )
            .unwrap();
            writeln!(
                s,
                "degree sum: direct {} printed {} corrected {} printed - direct {}",
                r.degree_sum_direct,
                r.degree_sum_paper,
                r.degree_sum_corrected,
                r.degree_sum_delta()
            )
            .unwrap();
            writeln!(
                s,
                "trace(A^2): direct {} printed {} corrected {} printed - direct {}",
                r.trace_sq_direct,
                r.trace_sq_paper,
                r.trace_sq_corrected,
                r.trace_sq_delta()
            )
            .unwrap();
            0
        }
    };
    out.extend_from_slice(s.as_bytes());
    Ok(code)
}
