//! Command-line surface for the grid-class growth-rate engine.
//!
//! Exit status: 0 on success, 1 on domain errors (bad matrices, negative
//! cycles where an orientation was required, size limits), 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::json;

use gridclass::expand::{fully_expand, DEFAULT_MAX_VERTICES};
use gridclass::experiments::SubdivisionExperiment;
use gridclass::graph::{Graph, SignedGraph};
use gridclass::growth::{
    compare_classes, cycle_class_growth_rate, geom_growth_rate_with_tolerance, matching_lambda,
    spectral_radius, star_graph, CycleParity,
};
use gridclass::matrix::GridMatrix;
use gridclass::oracle::{empirical_growth_rate, enumerate_counts};
use gridclass::rowcol::{negative_cycle_witness, parity_report, row_column_graph};

#[derive(Parser)]
#[command(
    name = "gridclass",
    about = "Exact growth rates of geometric grid classes",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Growth rate of Geom(M) for a matrix file
    Gr {
        matrix: PathBuf,
        /// Emit the full result as JSON
        #[arg(long)]
        json: bool,
        /// Width of the certified root bracket
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
    },
    /// Geometric vs monotone growth rate
    Compare { matrix: PathBuf },
    /// Cycle parity, connectivity and switching report for G(M)
    Parity { matrix: PathBuf },
    /// Brute-force word enumeration: gridded and permutation counts
    Enumerate {
        matrix: PathBuf,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Write the counts as CSV to this file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Fully expand a graph (or the graph of a matrix) into a forest with
    /// the same largest matching root
    #[command(group(ArgGroup::new("input").required(true).args(["matrix", "graph"])))]
    Expand {
        matrix: Option<PathBuf>,
        /// Edge-list file instead of a matrix
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long = "max-vertices", default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
    },
    /// Repeatedly subdivide one edge and track lambda^2
    Subdivide {
        #[arg(long)]
        graph: PathBuf,
        /// The edge to subdivide, as `u,v`
        #[arg(long)]
        edge: String,
        #[arg(long)]
        times: usize,
        /// Two fresh vertices per step (the default): stays a row-column graph
        #[arg(long, conflicts_with = "raw")]
        bipartite: bool,
        /// One fresh vertex per step; may leave the bipartite world
        #[arg(long)]
        raw: bool,
    },
    /// Closed-form growth rates when G(M) is a cycle, by length and parity
    CycleTable {
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Negate each on-cycle cell in turn and report the growth-rate change
    NegateCellSweep { matrix: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn fmt12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let digits_before = x.abs().log10().floor() as i32 + 1;
    let decimals = (12 - digits_before).max(0) as usize;
    format!("{:.*}", decimals, x)
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))
}

fn load_matrix(path: &PathBuf) -> Result<GridMatrix, String> {
    GridMatrix::parse(&read(path)?).map_err(|e| e.to_string())
}

fn load_graph(path: &PathBuf) -> Result<(Graph, bool), String> {
    let sg = SignedGraph::parse_edge_list(&read(path)?).map_err(|e| e.to_string())?;
    let has_negative = sg.edges().iter().any(|&(_, _, s)| s < 0);
    Ok((sg.underlying().clone(), has_negative))
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.cmd {
        Cmd::Gr {
            matrix,
            json,
            tolerance,
        } => {
            if !(tolerance > 0.0 && tolerance.is_finite()) {
                return Err(format!("--tolerance must be positive, got {}", tolerance));
            }
            let m = load_matrix(&matrix)?;
            let r = geom_growth_rate_with_tolerance(&m, tolerance).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r.to_json()).unwrap());
            } else {
                println!(
                    "matrix: {}x{} ({} nonzero cells)",
                    m.columns(),
                    m.rows(),
                    m.nonzero_count()
                );
                println!("graph used: {}", r.used_graph.as_str());
                println!("negative cycle: {}", r.negative_cycle_present);
                println!("matching polynomial: {}", r.matching_poly);
                println!("lambda: {}", fmt12(r.lambda.value()));
                println!("geom growth rate: {}", fmt12(r.growth_rate));
                println!("monotone growth rate: {}", fmt12(r.monotone_growth_rate));
                println!("comparison: {}", r.comparison.as_str());
            }
            Ok(())
        }
        Cmd::Compare { matrix } => {
            let m = load_matrix(&matrix)?;
            let c = compare_classes(&m).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&c.to_json()).unwrap());
            Ok(())
        }
        Cmd::Parity { matrix } => {
            let m = load_matrix(&matrix)?;
            let g = row_column_graph(&m);
            let p = parity_report(&g);
            let witness = negative_cycle_witness(&g);
            let v = json!({
                "connected": p.connected,
                "component_count": p.component_count,
                "has_cycle": p.has_cycle,
                "has_negative_cycle": p.has_negative_cycle,
                "has_odd_cycle": p.has_odd_cycle,
                "switching": p.switching,
                "witness_cycle": witness,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(())
        }
        Cmd::Enumerate { matrix, max_n, csv } => {
            let m = load_matrix(&matrix)?;
            let c = enumerate_counts(&m, max_n).map_err(|e| e.to_string())?;
            if let Some(path) = csv {
                let mut file =
                    fs::File::create(&path).map_err(|e| format!("{}: {}", path.display(), e))?;
                c.write_csv(&mut file).map_err(|e| e.to_string())?;
                println!("wrote {}", path.display());
            } else {
                let mut out = Vec::new();
                c.write_csv(&mut out).map_err(|e| e.to_string())?;
                print!("{}", String::from_utf8_lossy(&out));
            }
            if let Ok(est) = empirical_growth_rate(&c) {
                println!(
                    "growth estimate: root {}  ratio {}",
                    fmt12(est.root_estimate),
                    fmt12(est.last_ratio)
                );
            }
            Ok(())
        }
        Cmd::Expand {
            matrix,
            graph,
            max_vertices,
        } => {
            let (g, note) = if let Some(path) = matrix {
                let m = load_matrix(&path)?;
                let (g, used) = star_graph(&m).map_err(|e| e.to_string())?;
                (g, format!("expanding {}", used.as_str()))
            } else {
                let (g, signed) = load_graph(&graph.expect("clap group guarantees one input"))?;
                let note = if signed {
                    "expanding the underlying unsigned graph (edge signs ignored)".to_string()
                } else {
                    "expanding the graph".to_string()
                };
                (g, note)
            };
            println!(
                "{}: {} vertices, {} edges",
                note,
                g.vertex_count(),
                g.edge_count()
            );
            let forest = fully_expand(&g, max_vertices).map_err(|e| e.to_string())?;
            println!(
                "forest: {} vertices, {} edges, {} components",
                forest.vertex_count(),
                forest.edge_count(),
                forest.components().len()
            );
            for (a, b) in forest.edges() {
                println!("{} {}", forest.label(a), forest.label(b));
            }
            let rho = spectral_radius(&forest, 1e-12).map_err(|e| e.to_string())?;
            println!("rho(forest): {}", fmt12(rho.value()));
            if g.vertex_count() <= 64 {
                let lam = matching_lambda(&g, 1e-12).map_err(|e| e.to_string())?;
                println!("lambda(graph): {}", fmt12(lam.value()));
                println!(
                    "agreement: {}",
                    if (rho.value() - lam.value()).abs() <= 1e-9 {
                        "ok"
                    } else {
                        "MISMATCH"
                    }
                );
            }
            Ok(())
        }
        Cmd::Subdivide {
            graph,
            edge,
            times,
            bipartite: _,
            raw,
        } => {
            let (g, _) = load_graph(&graph)?;
            let (u, v) = edge
                .split_once(',')
                .ok_or_else(|| format!("--edge wants `u,v`, got {:?}", edge))?;
            if times < 1 {
                return Err("--times must be at least 1".to_string());
            }
            let exp = SubdivisionExperiment::run(&g, u.trim(), v.trim(), times, !raw)
                .map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&exp.to_json()).unwrap());
            Ok(())
        }
        Cmd::CycleTable { max_n } => {
            if max_n < 4 {
                return Err("--max-n must be at least 4".to_string());
            }
            println!("{:>4}  {:>16}  {:>16}", "n", "positive", "negative");
            let mut n = 4;
            while n <= max_n {
                let pos =
                    cycle_class_growth_rate(n, CycleParity::Positive).map_err(|e| e.to_string())?;
                let neg =
                    cycle_class_growth_rate(n, CycleParity::Negative).map_err(|e| e.to_string())?;
                println!("{:>4}  {:>16}  {:>16}", n, fmt12(pos), fmt12(neg));
                n += 2;
            }
            Ok(())
        }
        Cmd::NegateCellSweep { matrix } => {
            let m = load_matrix(&matrix)?;
            let base = geom_growth_rate_with_tolerance(&m, 1e-12).map_err(|e| e.to_string())?;
            let g = row_column_graph(&m);
            let parity = parity_report(&g);
            let mut rows = Vec::new();
            for (i, j, v) in m.nonzero_cells() {
                let ci = g.vertex(&format!("c{}", i)).unwrap();
                let rj = g.vertex(&format!("r{}", j)).unwrap();
                if !g.underlying().edge_on_cycle(ci, rj) {
                    continue;
                }
                let negated = m.set_cell(i, j, -v).map_err(|e| e.to_string())?;
                let r =
                    geom_growth_rate_with_tolerance(&negated, 1e-12).map_err(|e| e.to_string())?;
                rows.push(json!({
                    "cell": [i, j],
                    "value": v,
                    "gr_before": base.growth_rate,
                    "gr_after": r.growth_rate,
                    "delta": r.growth_rate - base.growth_rate,
                    "negative_cycle_after": r.negative_cycle_present,
                }));
            }
            let v = json!({
                "matrix_growth_rate": base.growth_rate,
                "negative_cycle_before": parity.has_negative_cycle,
                "sweep": rows,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(())
        }
    }
}
