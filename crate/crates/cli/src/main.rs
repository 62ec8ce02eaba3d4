//! Command-line front end: every operation of the library over the graph,
//! matrix, and set-function file formats, with machine-readable output.
//!
//! Exit codes: 0 success (kpath: found), 1 kpath not-found, 2 usage or parse
//! error, 3 size cap exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use iesieve::coloring::{self, CoverMethod};
use iesieve::hampath;
use iesieve::kpath::{self, Detection};
use iesieve::matchings;
use iesieve::oracles;
use iesieve::steiner::{self, SteinerInstance};
use iesieve::transforms;
use iesieve::{parse_setfn, BitSubset, Count, Error, Graph, Matrix01, SetFunction};

#[derive(Parser)]
#[command(
    name = "iesieve",
    version,
    about = "Exact counting for hard graph problems via inclusion-exclusion sieves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Compute with the brute-force oracle instead of the sieve
    #[arg(long)]
    oracle: bool,
    /// Worker thread cap; any value produces byte-identical output
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct JsonFlag {
    /// Emit one JSON object instead of the bare result
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Tabulate g over all subsets, then the alternating sum (2^n space)
    Table,
    /// Re-enumerate independent sets per subset (3^n time, poly space)
    Polyspace,
    /// Möbius of the k-th power of the zeta of the indicator
    Mobius,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct HamMode {
    /// Count Hamiltonian paths starting at this node
    #[arg(long)]
    start: Option<usize>,
    /// Count undirected Hamiltonian paths over all endpoints
    #[arg(long)]
    total: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Ordered k-covers by nonempty independent sets (positive iff k-colorable)
    ColorCount {
        file: PathBuf,
        /// Number of colors k
        #[arg(long)]
        colors: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Table)]
        method: MethodArg,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Chromatic number
    Chromatic {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Table of independent-set counts g(S), in set-function format
    IndepTable {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Zeta transform of a set-function file
    Zeta {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Möbius transform of a set-function file
    Mobius {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Permanent of a 0/1 matrix (= bipartite perfect matchings)
    Permanent {
        file: PathBuf,
        /// Iterate subsets in Gray-code order
        #[arg(long)]
        gray: bool,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Perfect matchings of a general graph
    PmCount {
        file: PathBuf,
        /// Print the full-set sieve term C(m, n/2) to stderr
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Hamiltonian path counts
    Hamiltonian {
        file: PathBuf,
        #[command(flatten)]
        mode: HamMode,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Minimum Steiner tree size
    Steiner {
        file: PathBuf,
        /// Comma-separated terminal nodes, e.g. 0,3,5
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Randomized detection of a simple path on k nodes
    Kpath {
        file: PathBuf,
        /// Path length in nodes
        #[arg(short)]
        k: usize,
        /// Anchor all walks at this start node
        #[arg(long)]
        start: Option<usize>,
        /// Independent repetitions; failure probability < 2^-trials
        #[arg(long, default_value_t = 16)]
        trials: u32,
        /// Master seed for the pinned SplitMix64 randomness
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        json: JsonFlag,
    },
}

struct Failure {
    msg: String,
    code: u8,
}

impl Failure {
    fn new(msg: impl Into<String>, code: u8) -> Self {
        Failure { msg: msg.into(), code }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeCap { .. } => 3,
            _ => 2,
        };
        Failure::new(e.to_string(), code)
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(format!("{}: {e}", path.display()), 2))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    Graph::parse(&text).map_err(|e| prefix_file(path, e))
}

fn load_matrix(path: &Path) -> Result<Matrix01, Failure> {
    let text = read_input(path)?;
    Matrix01::parse(&text).map_err(|e| prefix_file(path, e))
}

fn load_setfn(path: &Path) -> Result<SetFunction<Count>, Failure> {
    let text = read_input(path)?;
    parse_setfn(&text).map_err(|e| prefix_file(path, e))
}

fn prefix_file(path: &Path, e: Error) -> Failure {
    let f: Failure = e.into();
    Failure::new(format!("{}: {}", path.display(), f.msg), f.code)
}

fn check_threads(common: &Common) -> Result<(), Failure> {
    if common.threads == 0 {
        return Err(Failure::new("--threads must be at least 1", 2));
    }
    Ok(())
}

/// Prints either the bare value or the JSON envelope, and returns the exit
/// code for a successful run.
#[allow(clippy::too_many_arguments)]
fn emit(
    json: bool,
    command: &str,
    n: usize,
    value: &str,
    started: Instant,
    method: &str,
    seed: Option<u64>,
    exit: ExitCode,
) -> CmdResult {
    if json {
        let mut obj = serde_json::Map::new();
        obj.insert("command".into(), command.into());
        obj.insert("n".into(), (n as u64).into());
        obj.insert("value".into(), value.into());
        obj.insert(
            "elapsed_ms".into(),
            (started.elapsed().as_millis() as u64).into(),
        );
        obj.insert("method".into(), method.into());
        if let Some(s) = seed {
            obj.insert("seed".into(), s.into());
        }
        println!("{}", serde_json::Value::Object(obj));
    } else {
        println!("{value}");
    }
    Ok(exit)
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::ColorCount { file, colors, method, common, json } => {
            check_threads(&common)?;
            let g = load_graph(&file)?;
            let started = Instant::now();
            let (value, method_name) = if common.oracle {
                (oracles::brute_cover_count(&g, colors)?, "oracle")
            } else {
                let m = match method {
                    MethodArg::Table => CoverMethod::Table,
                    MethodArg::Polyspace => CoverMethod::Polyspace,
                    MethodArg::Mobius => CoverMethod::Mobius,
                };
                let name = match method {
                    MethodArg::Table => "table",
                    MethodArg::Polyspace => "polyspace",
                    MethodArg::Mobius => "mobius",
                };
                (coloring::cover_count::<Count>(&g, colors, m)?, name)
            };
            emit(
                json.json,
                "color-count",
                g.node_count(),
                &value.to_string(),
                started,
                method_name,
                None,
                ExitCode::SUCCESS,
            )
        }
        Command::Chromatic { file, common, json } => {
            check_threads(&common)?;
            let g = load_graph(&file)?;
            let started = Instant::now();
            let (value, method) = if common.oracle {
                (oracles::brute_chromatic(&g)?, "oracle")
            } else {
                (coloring::chromatic_number::<Count>(&g)?, "table")
            };
            emit(
                json.json,
                "chromatic",
                g.node_count(),
                &value.to_string(),
                started,
                method,
                None,
                ExitCode::SUCCESS,
            )
        }
        Command::IndepTable { file, common } => {
            check_threads(&common)?;
            let g = load_graph(&file)?;
            let table = if common.oracle {
                let n = g.node_count();
                let mut values = Vec::with_capacity(1 << n);
                for s in BitSubset::all(n) {
                    values.push(coloring::indep_count_polyspace::<Count>(&g, &s)?);
                }
                SetFunction::new(n, values)?
            } else {
                coloring::indep_table::<Count>(&g)?.table().clone()
            };
            print!("{}", table.to_file_string());
            Ok(ExitCode::SUCCESS)
        }
        Command::Zeta { file, common } => {
            check_threads(&common)?;
            let f = load_setfn(&file)?;
            let out = if common.oracle {
                transforms::zeta_naive(&f)?
            } else {
                transforms::zeta_yates(&f)
            };
            print!("{}", out.to_file_string());
            Ok(ExitCode::SUCCESS)
        }
        Command::Mobius { file, common } => {
            check_threads(&common)?;
            let f = load_setfn(&file)?;
            let out = if common.oracle {
                transforms::mobius_naive(&f)?
            } else {
                transforms::mobius_yates(&f)
            };
            print!("{}", out.to_file_string());
            Ok(ExitCode::SUCCESS)
        }
        Command::Permanent { file, gray, common, json } => {
            check_threads(&common)?;
            let a = load_matrix(&file)?;
            let started = Instant::now();
            let (value, method) = if common.oracle {
                (oracles::brute_permanent(&a)?, "oracle")
            } else if gray {
                (matchings::permanent_ryser_gray::<Count>(&a)?, "gray")
            } else {
                (matchings::permanent_ryser::<Count>(&a)?, "plain")
            };
            emit(
                json.json,
                "permanent",
                a.dim(),
                &value.to_string(),
                started,
                method,
                None,
                ExitCode::SUCCESS,
            )
        }
        Command::PmCount { file, trace, common, json } => {
            check_threads(&common)?;
            let g = load_graph(&file)?;
            let started = Instant::now();
            let (value, method) = if common.oracle {
                (oracles::brute_pm_count(&g)?, "oracle")
            } else {
                let report = matchings::pm_count_report::<Count>(&g)?;
                if trace {
                    eprintln!(
                        "trace: full-set term C({}, {}) = {}",
                        g.edge_count(),
                        g.node_count() / 2,
                        report.full_set_term
                    );
                }
                (report.count, "sieve")
            };
            emit(
                json.json,
                "pm-count",
                g.node_count(),
                &value.to_string(),
                started,
                method,
                None,
                ExitCode::SUCCESS,
            )
        }
        Command::Hamiltonian { file, mode, common, json } => {
            check_threads(&common)?;
            let g = load_graph(&file)?;
            let started = Instant::now();
            let value = match (mode.start, common.oracle) {
                (Some(s), false) => hampath::hamiltonian_count_from::<Count>(&g, s)?,
                (Some(s), true) => oracles::brute_ham_count(&g, s)?,
                (None, false) => hampath::hamiltonian_count_total(&g)?,
                (None, true) => brute_ham_total(&g)?,
            };
            let method = if common.oracle { "oracle" } else { "sieve" };
            emit(
                json.json,
                "hamiltonian",
                g.node_count(),
                &value.to_string(),
                started,
                method,
                None,
                ExitCode::SUCCESS,
            )
        }
        Command::Steiner { file, terminals, common, json } => {
            check_threads(&common)?;
            let g = load_graph(&file)?;
            let started = Instant::now();
            let t = BitSubset::from_elements(g.node_count(), &terminals)?;
            let inst = SteinerInstance::new(g.clone(), t)?;
            let min = if common.oracle {
                oracles::brute_steiner(&inst)?
            } else {
                steiner::steiner_min_size::<Count>(&inst)?
            };
            let value = match min {
                Some(size) => size.to_string(),
                None => "absent".to_string(),
            };
            let method = if common.oracle { "oracle" } else { "sieve" };
            emit(
                json.json,
                "steiner",
                g.node_count(),
                &value,
                started,
                method,
                None,
                ExitCode::SUCCESS,
            )
        }
        Command::Kpath { file, k, start, trials, seed, common, json } => {
            check_threads(&common)?;
            let g = load_graph(&file)?;
            let started = Instant::now();
            let (found, method) = if common.oracle {
                (oracles::brute_kpath(&g, k)?, "oracle")
            } else {
                let detection = kpath::kpath_detect(&g, k, trials, seed, start)?;
                (detection == Detection::Found, "randomized")
            };
            let (value, exit) = if found {
                ("found", ExitCode::SUCCESS)
            } else {
                ("not-found", ExitCode::from(1))
            };
            emit(
                json.json,
                "kpath",
                g.node_count(),
                value,
                started,
                method,
                Some(seed),
                exit,
            )
        }
    }
}

fn brute_ham_total(g: &Graph) -> Result<Count, Error> {
    if g.node_count() < 2 {
        return Err(Error::InvalidInput(
            "total path count needs at least two nodes".into(),
        ));
    }
    let mut sum = Count::from(0);
    for s in 0..g.node_count() {
        sum += oracles::brute_ham_count(g, s)?;
    }
    assert!((&sum % 2u32) == Count::from(0), "endpoint sum must be even");
    Ok(sum / 2)
}
