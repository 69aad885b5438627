use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nlcolor::bounds::{
    bounds_report, chi_closed_form, chi_lower_bound, class_order_bound, max_order, OrderClass,
};
use nlcolor::construct::{
    caterpillar_extremal, comb_coloring, cone_coloring, cycle_coloring, generic_tree_coloring,
    path_coloring, unicyclic_extremal, ColoredGraph,
};
use nlcolor::graph::{classify, degree_stats, diameter, family_graph, FamilySpec, Graph};
use nlcolor::io::{
    certificate_from_json, certificate_to_json, graph_to_edge_list, graph_to_json, read_graph,
    to_dot,
};
use nlcolor::solver::{
    chi_nl_exact, conjecture_sweep, Conjecture, SolveOptions, SolveStatus, SweepLimits,
};
use nlcolor::verify::{is_nl_coloring, Color, Coloring};

/// Neighbor-locating colorings: generate, color, verify, solve, and sweep.
#[derive(Parser)]
#[command(name = "nlc", version, about)]
struct Cli {
    /// Indented output instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the canonical instance of a family.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Emit a verified NL-coloring of a family instance or of a tree file.
    Color {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, conflicts_with = "family_args")]
        graph: Option<PathBuf>,
        /// Also write a DOT rendering to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a certificate against a graph; exit 1 if it is not NL.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Closed-form χ_NL of a family, or exact χ_NL of a graph file.
    Chi {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, conflicts_with = "family_args", requires = "exact")]
        graph: Option<PathBuf>,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        max_k: Option<usize>,
        /// Time budget in seconds.
        #[arg(long, env = "NLC_BUDGET_SECS")]
        budget: Option<f64>,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Order and degree bounds for k colors, or the lower bound for a graph.
    Bounds {
        #[arg(long, required_unless_present = "graph")]
        k: Option<u64>,
        /// Maximum degree for the degree-limited order bound.
        #[arg(long)]
        delta: Option<u64>,
        /// Add the maximum order for this graph class.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        #[arg(long, conflicts_with_all = ["k", "delta", "class"])]
        graph: Option<PathBuf>,
    },
    /// Exhaustively check a conjecture on all small trees or graphs.
    Sweep {
        #[arg(long, value_enum)]
        conjecture: ConjectureArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Write the per-instance report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Per-instance time budget in seconds.
        #[arg(long, env = "NLC_BUDGET_SECS")]
        budget: Option<f64>,
    },
    /// Convert a graph (and optional certificate) between formats.
    Export {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long, value_enum)]
        to: OutFormat,
    },
}

#[derive(Args)]
#[group(id = "family_args", multiple = true)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    Fan,
    Wheel,
    Comb,
    Star,
    DoubleStar,
    Unicyclic,
    Caterpillar,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Tree,
    Unicyclic,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjectureArg {
    Delta,
    Diameter,
}

/// Failure modes that map to exit code 2.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

struct Outcome {
    payload: Value,
    negative: bool,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Outcome {
            payload,
            negative: false,
        }
    }
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize, Fatal> {
    v.ok_or_else(|| Fatal(format!("--family {family} needs --{flag}")))
}

impl FamilyArgs {
    fn spec(&self) -> Result<Option<FamilySpec>, Fatal> {
        let Some(name) = self.family else {
            if [self.n, self.m, self.r, self.s, self.k]
                .iter()
                .any(Option::is_some)
            {
                return Err(Fatal("family parameters given without --family".into()));
            }
            return Ok(None);
        };
        let spec = match name {
            FamilyName::Path => FamilySpec::Path(need(self.n, "n", "path")?),
            FamilyName::Cycle => FamilySpec::Cycle(need(self.n, "n", "cycle")?),
            FamilyName::Fan => FamilySpec::Fan(need(self.n, "n", "fan")?),
            FamilyName::Wheel => FamilySpec::Wheel(need(self.n, "n", "wheel")?),
            FamilyName::Comb => FamilySpec::Comb(need(self.m, "m", "comb")?),
            FamilyName::Star => FamilySpec::Star(need(self.n, "n", "star")?),
            FamilyName::DoubleStar => FamilySpec::DoubleStar {
                r: need(self.r, "r", "double-star")?,
                s: need(self.s, "s", "double-star")?,
            },
            FamilyName::Unicyclic => FamilySpec::UnicyclicU(need(self.k, "k", "unicyclic")?),
            FamilyName::Caterpillar => FamilySpec::CaterpillarT(need(self.k, "k", "caterpillar")?),
        };
        spec.validate()?;
        Ok(Some(spec))
    }

    fn required_spec(&self) -> Result<FamilySpec, Fatal> {
        self.spec()?
            .ok_or_else(|| Fatal("a --family (or --graph) is required".into()))
    }
}

fn read_text(path: &Path) -> Result<String, Fatal> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Fatal(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))
    }
}

fn load_graph(path: &Path) -> Result<Graph, Fatal> {
    let text = read_text(path)?;
    read_graph(&text, None).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn parse_json(text: &str) -> Value {
    serde_json::from_str(text).expect("library output is valid JSON")
}

fn family_coloring(spec: FamilySpec) -> Result<ColoredGraph, Fatal> {
    Ok(match spec {
        FamilySpec::Path(n) => path_coloring(n)?,
        FamilySpec::Cycle(n) => cycle_coloring(n)?,
        FamilySpec::Fan(n) => cone_coloring(&path_coloring(n - 1)?)?,
        FamilySpec::Wheel(n) => cone_coloring(&cycle_coloring(n - 1)?)?,
        FamilySpec::UnicyclicU(k) => unicyclic_extremal(k)?,
        FamilySpec::CaterpillarT(k) => caterpillar_extremal(k)?,
        FamilySpec::Comb(m) => {
            let k = (5..=m).find(|k| k * (k - 1) == m).ok_or_else(|| {
                Fatal(format!(
                    "the comb coloring needs m = k(k-1) with k >= 5, got {m}"
                ))
            })?;
            comb_coloring(k)?
        }
        FamilySpec::Star(n) if n < 5 => ColoredGraph::verified(
            family_graph(&spec)?,
            Coloring::from_colors((1..=n as Color).collect())?,
            vec![format!("star of order {n}: all colors distinct")],
        )?,
        FamilySpec::Star(_) | FamilySpec::DoubleStar { .. } => {
            generic_tree_coloring(&family_graph(&spec)?)?
        }
    })
}

fn budget(secs: Option<f64>) -> Result<Option<Duration>, Fatal> {
    secs.map(|s| Duration::try_from_secs_f64(s).map_err(|_| Fatal(format!("invalid budget {s}"))))
        .transpose()
}

fn render_graph(g: &Graph, format: OutFormat) -> String {
    match format {
        OutFormat::Json => graph_to_json(g),
        OutFormat::Edgelist => graph_to_edge_list(g),
        OutFormat::Dot => to_dot(g, None),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Fatal> {
    match &cli.command {
        Command::Gen { family, format } => {
            let g = family_graph(&family.required_spec()?)?;
            match format {
                OutFormat::Json => Ok(Outcome::ok(parse_json(&graph_to_json(&g)))),
                other => {
                    print!("{}", render_graph(&g, *other));
                    Ok(Outcome::ok(Value::Null))
                }
            }
        }
        Command::Color { family, graph, dot } => {
            let cg = match graph {
                Some(path) => {
                    let g = load_graph(path)?;
                    if !classify(&g).is_tree() {
                        return Err(Fatal("only trees can be colored from a file".into()));
                    }
                    generic_tree_coloring(&g)?
                }
                None => family_coloring(family.required_spec()?)?,
            };
            if let Some(path) = dot {
                fs::write(path, to_dot(cg.graph(), Some(cg.coloring())))
                    .map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
            }
            Ok(Outcome::ok(json!({
                "graph": parse_json(&graph_to_json(cg.graph())),
                "certificate": parse_json(&certificate_to_json(cg.coloring())),
                "provenance": cg.provenance(),
            })))
        }
        Command::Verify { graph, certificate } => {
            let g = load_graph(graph)?;
            let c = certificate_from_json(&read_text(certificate)?)
                .map_err(|e| Fatal(format!("{}: {e}", certificate.display())))?;
            c.check_length(&g)?;
            Ok(match is_nl_coloring(&g, &c).failure {
                None => Outcome::ok(json!({ "ok": true, "k": c.k() })),
                Some(f) => Outcome {
                    payload: json!({
                        "ok": false,
                        "reason": f.reason,
                        "witness": [f.witness.0, f.witness.1],
                        "message": f.to_string(),
                    }),
                    negative: true,
                },
            })
        }
        Command::Chi {
            family,
            graph,
            exact,
            max_k,
            budget: secs,
            parallel,
            no_symmetry,
        } => {
            if let Some(path) = graph {
                let g = load_graph(path)?;
                let opts = SolveOptions {
                    max_k: *max_k,
                    time_budget: budget(*secs)?,
                    symmetry_breaking: !no_symmetry,
                    parallel: *parallel,
                };
                let r = chi_nl_exact(&g, &opts);
                return Ok(Outcome {
                    negative: r.status != SolveStatus::Exact,
                    payload: json!({
                        "chi": r.chi,
                        "status": r.status,
                        "lowerBound": r.lower_bound,
                        "nodesExplored": r.nodes_explored,
                        "witness": r.witness.map(|w| w.into_colors()),
                    }),
                });
            }
            let spec = family.required_spec()?;
            if *exact {
                let g = family_graph(&spec)?;
                let r = chi_nl_exact(&g, &SolveOptions::default());
                return Ok(Outcome {
                    negative: r.status != SolveStatus::Exact,
                    payload: json!({ "chi": r.chi, "status": r.status }),
                });
            }
            Ok(Outcome::ok(json!({ "chi": chi_closed_form(&spec)? })))
        }
        Command::Bounds {
            k,
            delta,
            class,
            graph,
        } => {
            if let Some(path) = graph {
                let g = load_graph(path)?;
                return Ok(Outcome::ok(json!({
                    "n": g.n(),
                    "class": classify(&g).kind,
                    "degrees": degree_stats(&g),
                    "diameter": diameter(&g),
                    "chiLowerBound": chi_lower_bound(&g),
                })));
            }
            let k = k.expect("clap requires --k without --graph");
            let mut report = serde_json::to_value(bounds_report(k, *delta)?)?;
            if let Some(class) = class {
                let (name, bound) = match class {
                    ClassArg::Tree => ("tree", class_order_bound(k, OrderClass::Tree)?),
                    ClassArg::Unicyclic => {
                        ("unicyclic", class_order_bound(k, OrderClass::Unicyclic)?)
                    }
                    ClassArg::General => ("general", max_order(k, *delta)?),
                };
                report["class"] = json!(name);
                report["classMaxOrder"] = json!(bound);
            }
            Ok(Outcome::ok(report))
        }
        Command::Sweep {
            conjecture,
            max_n,
            min_n,
            report,
            budget: secs,
        } => {
            let which = match conjecture {
                ConjectureArg::Delta => Conjecture::Delta,
                ConjectureArg::Diameter => Conjecture::Diameter,
            };
            let limits = SweepLimits {
                min_n: *min_n,
                max_n: *max_n,
                instance_budget: budget(*secs)?,
            };
            let r = conjecture_sweep(which, &limits)?;
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&r)?;
                fs::write(path, text + "\n")
                    .map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
            }
            Ok(Outcome {
                negative: !r.holds,
                payload: json!({
                    "conjecture": r.conjecture,
                    "minN": r.min_n,
                    "maxN": r.max_n,
                    "instances": r.instances.len(),
                    "holds": r.holds,
                    "violations": r.violations,
                    "unresolved": r.unresolved,
                    "maxDeltaByChi": r.max_delta_by_chi,
                }),
            })
        }
        Command::Export {
            graph,
            certificate,
            to,
        } => {
            let g = load_graph(graph)?;
            let coloring = certificate
                .as_deref()
                .map(|p| {
                    let c = certificate_from_json(&read_text(p)?)?;
                    c.check_length(&g)?;
                    Ok::<_, Fatal>(c)
                })
                .transpose()?;
            let text = match (to, &coloring) {
                (OutFormat::Dot, c) => to_dot(&g, c.as_ref()),
                (other, None) => render_graph(&g, *other),
                (_, Some(_)) => {
                    return Err(Fatal("a certificate can only be exported to dot".into()))
                }
            };
            if matches!(to, OutFormat::Json) {
                return Ok(Outcome::ok(parse_json(&text)));
            }
            print!("{text}");
            Ok(Outcome::ok(Value::Null))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if !outcome.payload.is_null() {
                let text = if cli.pretty {
                    serde_json::to_string_pretty(&outcome.payload)
                } else {
                    serde_json::to_string(&outcome.payload)
                }
                .expect("payload serializes");
                println!("{text}");
            }
            if outcome.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Fatal(msg)) => {
            eprintln!("nlc: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        super::Cli::command().debug_assert();
    }
}
