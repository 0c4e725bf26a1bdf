//! Command-line front end.
//!
//! Reports are `key=value` lines (aligned columns with `--pretty`). Exit
//! codes: 0 success or a true verdict, 1 a false verdict, 2 usage error,
//! 3 unreadable or malformed input, 4 resource limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::digraph::{
    auxiliary_digraph, max_tc_free_edges_bruteforce, turan_bipartite, turan_bound, Digraph,
};
use crate::error::Error;
use crate::family::{
    block_residue_family, wedge_upper_family, x_upper_family, xell_upper_family, y_upper_family,
    SetFamily,
};
use crate::poset::{catalog_spec, Poset};
use crate::search::{exact_sat_star, sat_star_bounds, SearchConfig, SetOrdering};
use crate::verify::{run_suite, SuiteOptions, CRITERIA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

/// Default for `--time-limit`, in seconds.
pub const TIME_LIMIT_ENV: &str = "POSAT_TIME_LIMIT_SECS";

#[derive(Parser, Debug)]
#[command(
    name = "posat",
    version,
    about = "Induced poset saturation in the Boolean lattice"
)]
struct Cli {
    /// Worker threads for parallel routines.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Aligned human-readable reports instead of key=value lines.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check whether a family is induced saturated for the given posets.
    CheckSaturated {
        #[arg(long)]
        family: PathBuf,
        /// `name=<catalog>[:<param>]` or a poset file; repeat for several.
        #[arg(long, required = true)]
        poset: Vec<String>,
    },
    /// Bounds on, or the exact value of, the smallest saturated family size.
    Satstar(SatstarArgs),
    /// Write one of the standard families.
    Construct {
        #[arg(long, value_enum)]
        name: Construction,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lift a family over [n] to [n+1] by duplicating element i.
    Blowup {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Auxiliary digraphs, transitive cycles, contraction and edge maxima.
    #[command(subcommand)]
    Digraph(DigraphCommand),
    /// Report a legs witness, if the poset has one.
    Legs {
        #[arg(long)]
        poset: String,
    },
    /// Write the order-reversed poset.
    Dual {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the poset with a new element above everything.
    Dot {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz DOT for a poset, family or digraph.
    ExportDot {
        #[command(flatten)]
        input: DotInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance suite, one PASS/FAIL line per item.
    VerifyPaper {
        /// Skip the n = 5 digraph enumeration (the default).
        #[arg(long, conflicts_with = "slow")]
        fast: bool,
        /// Include the n = 5 digraph enumeration.
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DotInput {
    #[arg(long)]
    poset: Option<String>,
    #[arg(long)]
    family: Option<PathBuf>,
    #[arg(long)]
    digraph: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SatstarArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, required = true)]
    poset: Vec<String>,
    /// Exhaustive search (the default).
    #[arg(long, conflicts_with = "bounds")]
    exact: bool,
    /// Certificates and greedy witnesses only.
    #[arg(long)]
    bounds: bool,
    /// Visit sets in a shuffled order drawn from this seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    ordering: Option<OrderingArg>,
    /// Seconds; defaults to $POSAT_TIME_LIMIT_SECS.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Largest family size the exact search will try.
    #[arg(long)]
    size_limit: Option<usize>,
    #[arg(long)]
    no_symmetry: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OrderingArg {
    Lex,
    Cardinality,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Construction {
    /// Blocks and residue classes over a perfect-square ground set.
    BlockResidue,
    /// Saturated for Y: sets of size >= n-1, plus the empty set.
    YUpper,
    /// Saturated for X: sets of size >= n-1 or <= 1.
    XUpper,
    /// Saturated for wedge(l+1).
    Wedge,
    /// Saturated for Xell(l).
    Xell,
}

#[derive(Subcommand, Debug)]
enum DigraphCommand {
    /// Auxiliary digraph of a family: one edge A -> B per i with A \ B = {i}.
    Aux {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verdict: true when the digraph has no transitive cycle.
    TcCheck {
        #[arg(long)]
        digraph: PathBuf,
    },
    /// Contract an induced oriented cycle (the shortest one by default).
    Contract {
        #[arg(long)]
        digraph: PathBuf,
        /// 1-based vertices in cycle order, e.g. "1 2 3".
        #[arg(long)]
        cycle: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Balanced bipartite orientation with floor(n^2/4) edges.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive maximum edge count without a transitive cycle.
    BruteMax {
        #[arg(long)]
        n: usize,
        /// Allow n = 6.
        #[arg(long)]
        extended: bool,
    },
}

/// A failed command: exit code plus message.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::ResourceLimitExceeded(_)
            | Error::TooLarge { .. }
            | Error::GroundSetTooLarge(_) => EXIT_LIMIT,
            Error::NotSaturated(_) => EXIT_FALSE,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(EXIT_PARSE, e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Report<'w> {
    out: &'w mut dyn Write,
    pretty: bool,
}

impl Report<'_> {
    fn pairs(&mut self, pairs: &[(&str, String)]) -> std::io::Result<()> {
        let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in pairs {
            if self.pretty {
                writeln!(self.out, "{k:<width$}  {v}")?;
            } else {
                writeln!(self.out, "{k}={v}")?;
            }
        }
        Ok(())
    }

    fn text(&mut self, text: &str) -> std::io::Result<()> {
        self.out.write_all(text.as_bytes())
    }

    /// Writes to `--out` if given, else to the report stream.
    fn artifact(&mut self, out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
        match out {
            Some(path) => std::fs::write(path, text),
            None => self.text(text),
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", path.display())))
}

/// `name=<catalog>[:<param>]` or a path to a poset file.
fn load_poset(spec: &str) -> std::result::Result<Poset, Failure> {
    if spec.contains('=') {
        return catalog_spec(spec).map_err(Failure::from);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| {
        Failure(
            EXIT_PARSE,
            format!("{spec}: {e} (catalog posets are written name=<catalog>)"),
        )
    })?;
    Poset::from_text(&text).map_err(|e| Failure(EXIT_PARSE, format!("{spec}: {e}")))
}

fn load_family(path: &Path) -> std::result::Result<SetFamily, Failure> {
    SetFamily::from_text(&read(path)?)
        .map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> std::result::Result<Digraph, Failure> {
    Digraph::from_text(&read(path)?)
        .map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn time_limit(arg: Option<f64>) -> std::result::Result<Option<Duration>, Failure> {
    let secs = match arg {
        Some(s) => Some(s),
        None => match std::env::var(TIME_LIMIT_ENV) {
            Ok(v) => Some(v.trim().parse::<f64>().map_err(|_| {
                Failure(EXIT_USAGE, format!("{TIME_LIMIT_ENV}={v} is not a number"))
            })?),
            Err(_) => None,
        },
    };
    match secs {
        Some(s) if !(s.is_finite() && s >= 0.0) => Err(Failure(
            EXIT_USAGE,
            format!("time limit {s} is not a non-negative number"),
        )),
        Some(s) => Ok(Some(Duration::from_secs_f64(s))),
        None => Ok(None),
    }
}

fn satstar(a: &SatstarArgs, jobs: usize, rep: &mut Report<'_>) -> Outcome {
    let forbidden = a
        .poset
        .iter()
        .map(|s| load_poset(s))
        .collect::<Result<Vec<_>, _>>()?;
    let ordering = match (a.ordering, a.seed) {
        (Some(OrderingArg::Lex), _) => SetOrdering::Lex,
        (Some(OrderingArg::Cardinality), _) => SetOrdering::ByCardinality,
        (Some(OrderingArg::Random), None) => {
            return Err(Failure(EXIT_USAGE, "--ordering random needs --seed".into()))
        }
        (Some(OrderingArg::Random), Some(seed)) | (None, Some(seed)) => {
            SetOrdering::Random { seed: Some(seed) }
        }
        (None, None) => SetOrdering::ByCardinality,
    };
    let config = SearchConfig {
        size_limit: a.size_limit,
        time_limit: time_limit(a.time_limit)?,
        ordering,
        symmetry_reduction: !a.no_symmetry && a.n >= 4,
        deterministic: true,
        jobs,
    };
    let result = if a.bounds {
        sat_star_bounds(a.n, &forbidden, &config)?
    } else {
        exact_sat_star(a.n, &forbidden, &config)?
    };
    let text = result.to_text();
    match &a.out {
        Some(path) => {
            std::fs::write(path, &text)?;
            rep.pairs(&[
                ("lower", result.lower.value.to_string()),
                ("kind", result.lower.certificate.kind().to_string()),
                ("upper", result.upper.to_string()),
                ("exact", result.exact.to_string()),
            ])?;
        }
        None if rep.pretty => {
            rep.pairs(&[
                ("n", result.n.to_string()),
                (
                    "forbidden",
                    result
                        .forbidden
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(", "),
                ),
                (
                    "lower",
                    format!(
                        "{} ({})",
                        result.lower.value,
                        result.lower.certificate.kind()
                    ),
                ),
                ("upper", result.upper.to_string()),
                ("exact", result.exact.to_string()),
                ("nodes", result.nodes.to_string()),
            ])?;
            rep.text(&format!("witness\n{}", result.witness.to_text()))?;
        }
        None => rep.text(&text)?,
    }
    if !a.bounds && result.limit.is_some() {
        return Ok(EXIT_LIMIT);
    }
    Ok(EXIT_OK)
}

fn digraph_cmd(cmd: &DigraphCommand, pool: &rayon::ThreadPool, rep: &mut Report<'_>) -> Outcome {
    match cmd {
        DigraphCommand::Aux { family, out } => {
            let d = auxiliary_digraph(&load_family(family)?)?;
            rep.artifact(out, &d.to_text())?;
        }
        DigraphCommand::TcCheck { digraph } => {
            let d = load_digraph(digraph)?;
            let mut pairs = vec![
                ("vertices", d.vertex_count().to_string()),
                ("edges", d.edge_count().to_string()),
            ];
            let cycle = d.has_transitive_cycle();
            pairs.push(("tc_free", cycle.is_none().to_string()));
            if let Some(c) = &cycle {
                pairs.push(("cycle", one_based(&c.vertices)));
            }
            rep.pairs(&pairs)?;
            return Ok(if cycle.is_none() { EXIT_OK } else { EXIT_FALSE });
        }
        DigraphCommand::Contract {
            digraph,
            cycle,
            out,
        } => {
            let d = load_digraph(digraph)?;
            let cycle = match cycle {
                Some(text) => parse_vertices(text, d.vertex_count())?,
                None => match d.find_induced_oriented_cycle() {
                    Some(c) => c,
                    None => {
                        rep.pairs(&[("cycle", "none".into())])?;
                        return Ok(EXIT_FALSE);
                    }
                },
            };
            let c = d.contract_cycle(&cycle)?;
            match out {
                Some(path) => {
                    std::fs::write(path, c.digraph.to_text())?;
                    rep.pairs(&[
                        ("cycle", one_based(&cycle)),
                        ("edges_before", d.edge_count().to_string()),
                        ("edges_after", c.digraph.edge_count().to_string()),
                    ])?;
                }
                None => rep.text(&c.digraph.to_text())?,
            }
        }
        DigraphCommand::Turan { n, out } => {
            rep.artifact(out, &turan_bipartite(*n).to_text())?;
        }
        DigraphCommand::BruteMax { n, extended } => {
            let m = pool.install(|| max_tc_free_edges_bruteforce(*n, *extended))?;
            rep.pairs(&[
                ("n", m.n.to_string()),
                ("max_edges", m.max_edges.to_string()),
                ("bound", turan_bound(*n).to_string()),
                ("visited", m.visited.to_string()),
            ])?;
            rep.text(&m.witness.to_text())?;
        }
    }
    Ok(EXIT_OK)
}

fn one_based(v: &[usize]) -> String {
    v.iter()
        .map(|x| (x + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_vertices(text: &str, n: usize) -> std::result::Result<Vec<usize>, Failure> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            _ => Err(Failure(EXIT_USAGE, format!("bad cycle vertex `{t}`"))),
        })
        .collect()
}

fn dispatch(cli: &Cli, pool: &rayon::ThreadPool, rep: &mut Report<'_>) -> Outcome {
    match &cli.command {
        Command::CheckSaturated { family, poset } => {
            let f = load_family(family)?;
            let forbidden = poset
                .iter()
                .map(|s| load_poset(s))
                .collect::<Result<Vec<_>, _>>()?;
            let report = if cli.jobs > 1 {
                pool.install(|| f.is_induced_saturated_parallel(&forbidden))?
            } else {
                f.is_induced_saturated(&forbidden)?
            };
            let mut pairs = vec![
                ("n", f.n().to_string()),
                ("size", f.len().to_string()),
                ("saturated", report.saturated.to_string()),
            ];
            if let Some(v) = &report.violation {
                pairs.push(("reason", v.to_string()));
            }
            rep.pairs(&pairs)?;
            Ok(if report.saturated {
                EXIT_OK
            } else {
                EXIT_FALSE
            })
        }
        Command::Satstar(a) => satstar(a, cli.jobs, rep),
        Command::Construct { name, n, l, out } => {
            let need_l =
                || l.ok_or_else(|| Failure(EXIT_USAGE, "--l is required for this family".into()));
            let f = match name {
                Construction::BlockResidue => block_residue_family(*n)?,
                Construction::YUpper => y_upper_family(*n)?,
                Construction::XUpper => x_upper_family(*n)?,
                Construction::Wedge => wedge_upper_family(*n, need_l()?)?,
                Construction::Xell => xell_upper_family(*n, need_l()?)?,
            };
            rep.artifact(out, &f.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Blowup { family, i, out } => {
            let f = load_family(family)?.blow_up(*i)?;
            rep.artifact(out, &f.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Digraph(cmd) => digraph_cmd(cmd, pool, rep),
        Command::Legs { poset } => {
            let p = load_poset(poset)?;
            match p.has_legs() {
                Some(w) => {
                    rep.pairs(&[
                        ("legs", "true".into()),
                        ("leg1", (w.leg1 + 1).to_string()),
                        ("leg2", (w.leg2 + 1).to_string()),
                        ("hip", (w.hip + 1).to_string()),
                    ])?;
                    Ok(EXIT_OK)
                }
                None => {
                    rep.pairs(&[("legs", "false".into())])?;
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Dual { poset, out } => {
            rep.artifact(out, &load_poset(poset)?.dual().to_text())?;
            Ok(EXIT_OK)
        }
        Command::Dot { poset, out } => {
            rep.artifact(out, &load_poset(poset)?.dot_extension().to_text())?;
            Ok(EXIT_OK)
        }
        Command::ExportDot { input, out } => {
            let dot = if let Some(p) = &input.poset {
                load_poset(p)?.to_dot()
            } else if let Some(f) = &input.family {
                load_family(f)?.to_dot()
            } else if let Some(d) = &input.digraph {
                load_digraph(d)?.to_dot()
            } else {
                unreachable!("clap requires one input")
            };
            rep.artifact(out, &dot)?;
            Ok(EXIT_OK)
        }
        Command::VerifyPaper { slow, .. } => {
            let opts = SuiteOptions { slow: *slow };
            let mut io_error = None;
            let reports = run_suite(&opts, |r| {
                if let Err(e) = writeln!(rep.out, "{r}").and_then(|_| rep.out.flush()) {
                    io_error.get_or_insert(e);
                }
            });
            if let Some(e) = io_error {
                return Err(e.into());
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            rep.pairs(&[("passed", format!("{passed}/{CRITERIA}"))])?;
            Ok(if passed == CRITERIA {
                EXIT_OK
            } else {
                EXIT_FALSE
            })
        }
    }
}

/// Parses `args` (including the program name) and runs one command,
/// writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    if cli.jobs == 0 {
        let _ = writeln!(err, "error: --jobs must be at least 1");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_LIMIT;
        }
    };
    let mut rep = Report {
        out,
        pretty: cli.pretty,
    };
    match dispatch(&cli, &pool, &mut rep) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
