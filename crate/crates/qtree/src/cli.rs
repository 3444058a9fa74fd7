//! Command-line front end. The binary is a thin wrapper around [`run`],
//! which writes to caller-supplied streams so the command surface can be
//! tested directly.
//!
//! Exit codes: 0 on success, 1 on domain errors (with a one-line
//! diagnostic on the error stream), 2 on usage errors. Reports are built
//! in full before anything is written, so failed runs never emit partial
//! output.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde::Serialize;

use crate::census::run_census;
use crate::center::{center_by_eccentricity, leaf_stripping_layers};
use crate::decompose::{analyze, analyze_rooted, TreeReport};
use crate::expr::expr_to_json;
use crate::graph::{parse_edge_list_labeled, ColoredGraph, Graph, RootedTree};
use crate::oracle::{all_free_trees, all_rooted_trees, random_tree};
use crate::refine::color_refinement;

#[derive(Parser)]
#[command(
    name = "qtree",
    version,
    about = "Quantum automorphism groups of trees",
    long_about = "Computes the quantum automorphism group of a finite tree as a \
normalized expression over the trivial group, free products, and free wreath \
products with quantum symmetric groups, together with the exact order of the \
classical automorphism group and a quantum-symmetry verdict."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Human,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a tree: center, group expression, order, quantum symmetry
    Compute {
        /// Edge-list file
        file: PathBuf,
        /// Root the tree here instead of at its center
        #[arg(long)]
        root: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print radius, center set, and leaf-stripping layers
    Center {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the canonical code of a (rootified or explicitly rooted) tree
    Canon {
        file: PathBuf,
        /// Root the tree here instead of at its center
        #[arg(long)]
        root: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the stable color-refinement partition, one class per line
    Orbits {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide whether two trees are isomorphic.
    ///
    /// Isomorphism and quantum isomorphism coincide for trees, so the
    /// answer also decides quantum isomorphism.
    Iso { a: PathBuf, b: PathBuf },
    /// Emit trees as edge lists separated by blank lines
    Gen {
        /// Vertex count
        #[arg(long)]
        n: usize,
        /// Emit one tree per rooted isomorphism class (root is vertex 0)
        #[arg(long)]
        rooted: bool,
        /// Sample this many uniformly random labeled trees instead of
        /// enumerating isomorphism classes
        #[arg(long)]
        random: Option<usize>,
        /// Seed for --random
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Sweep all trees up to a size and tabulate quantum-symmetry counts
    Census {
        #[arg(long = "max-n")]
        max_n: usize,
        /// Write a per-tree TSV detail file
        #[arg(long)]
        details: Option<PathBuf>,
        /// Write the summary table here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command,
/// writing to the given streams. Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", rendered);
                    return 0;
                }
                _ => {
                    let _ = write!(err, "{}", rendered);
                    return 2;
                }
            }
        }
    };
    match dispatch(cli.command) {
        Ok(output) => {
            let _ = write!(out, "{}", output.stdout);
            if !output.stderr.is_empty() {
                let _ = write!(err, "{}", output.stderr);
            }
            0
        }
        Err(message) => {
            let _ = writeln!(err, "error: {}", message);
            1
        }
    }
}

struct Output {
    stdout: String,
    stderr: String,
}

impl Output {
    fn new(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
        }
    }
}

fn dispatch(command: Command) -> Result<Output, String> {
    match command {
        Command::Compute { file, root, format } => cmd_compute(&file, root, format),
        Command::Center { file, format } => cmd_center(&file, format),
        Command::Canon { file, root, format } => cmd_canon(&file, root, format),
        Command::Orbits { file, format } => cmd_orbits(&file, format),
        Command::Iso { a, b } => cmd_iso(&a, &b),
        Command::Gen {
            n,
            rooted,
            random,
            seed,
        } => cmd_gen(n, rooted, random, seed),
        Command::Census {
            max_n,
            details,
            out,
        } => cmd_census(max_n, details.as_deref(), out.as_deref()),
    }
}

fn load(file: &Path) -> Result<(Graph, Vec<String>), String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {}", file.display(), e))?;
    parse_edge_list_labeled(&text).map_err(|e| e.to_string())
}

fn label_set(verts: &[usize], labels: &[String]) -> String {
    let mut out = String::from("{");
    for (i, &v) in verts.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        match labels.get(v) {
            Some(label) => out.push_str(label),
            None => {
                let _ = write!(out, "{}", v);
            }
        }
    }
    out.push('}');
    out
}

fn json_line<T: Serialize>(record: &T) -> String {
    let mut line = serde_json::to_string(record).expect("records serialize");
    line.push('\n');
    line
}

#[derive(Serialize)]
struct InputSummary {
    vertices: usize,
    edges: usize,
}

#[derive(Serialize)]
struct ComputeRecord {
    input: InputSummary,
    center: Vec<usize>,
    radius: usize,
    rootified: bool,
    expr: String,
    expr_tree: serde_json::Value,
    aut_order: String,
    quantum_symmetry: bool,
    orbits: Vec<Vec<usize>>,
}

fn cmd_compute(file: &Path, root: Option<usize>, format: Format) -> Result<Output, String> {
    let (graph, labels) = load(file)?;
    let report: TreeReport = match root {
        Some(root) => {
            let rt = RootedTree::new(graph, root).map_err(|e| e.to_string())?;
            analyze_rooted(&rt)
        }
        None => analyze(&graph).map_err(|e| e.to_string())?,
    };
    match format {
        Format::Structured => {
            let record = ComputeRecord {
                input: InputSummary {
                    vertices: report.vertex_count,
                    edges: report.edge_count,
                },
                center: report.center.center.clone(),
                radius: report.center.radius,
                rootified: report.rootification.subdivided,
                expr: report.qut.to_string(),
                expr_tree: expr_to_json(&report.qut),
                aut_order: report.classical_order.to_string(),
                quantum_symmetry: report.quantum_symmetry,
                orbits: report.refinement.classes().to_vec(),
            };
            Ok(Output::new(json_line(&record)))
        }
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "vertices: {}", report.vertex_count);
            let _ = writeln!(s, "edges: {}", report.edge_count);
            let _ = writeln!(s, "radius: {}", report.center.radius);
            let _ = writeln!(
                s,
                "center: {}",
                label_set(&report.center.center, &labels)
            );
            let root = report.rootification.rooted.root();
            if report.rootification.subdivided {
                let _ = writeln!(s, "root: {} (subdivision of the central edge)", root);
            } else {
                let _ = writeln!(s, "root: {}", label_set(&[root], &labels));
            }
            let orbit_sets: Vec<String> = report
                .refinement
                .classes()
                .iter()
                .map(|class| label_set(class, &labels))
                .collect();
            let _ = writeln!(s, "orbits: {}", orbit_sets.join(" "));
            let _ = writeln!(s, "Qut = {}", report.qut);
            let _ = writeln!(s, "|Aut| = {}", report.classical_order);
            let _ = writeln!(
                s,
                "quantum symmetry: {}",
                if report.quantum_symmetry { "yes" } else { "no" }
            );
            Ok(Output::new(s))
        }
    }
}

#[derive(Serialize)]
struct CenterRecord {
    radius: usize,
    center: Vec<usize>,
    layers: Vec<Vec<usize>>,
    survivors: Vec<usize>,
}

fn cmd_center(file: &Path, format: Format) -> Result<Output, String> {
    let (graph, labels) = load(file)?;
    let result = center_by_eccentricity(&graph).map_err(|e| e.to_string())?;
    let (layers, survivors) = leaf_stripping_layers(&graph);
    match format {
        Format::Structured => Ok(Output::new(json_line(&CenterRecord {
            radius: result.radius,
            center: result.center,
            layers,
            survivors,
        }))),
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "radius: {}", result.radius);
            let _ = writeln!(s, "center: {}", label_set(&result.center, &labels));
            for (i, layer) in layers.iter().enumerate() {
                let _ = writeln!(s, "layer {}: {}", i, label_set(layer, &labels));
            }
            let _ = writeln!(s, "survivors: {}", label_set(&survivors, &labels));
            Ok(Output::new(s))
        }
    }
}

#[derive(Serialize)]
struct CanonRecord {
    code: String,
    root: usize,
    subdivided: bool,
}

fn cmd_canon(file: &Path, root: Option<usize>, format: Format) -> Result<Output, String> {
    let (graph, _) = load(file)?;
    let (rooted, subdivided) = match root {
        Some(root) => (
            RootedTree::new(graph, root).map_err(|e| e.to_string())?,
            false,
        ),
        None => {
            let r = crate::center::rootify(&graph).map_err(|e| e.to_string())?;
            (r.rooted, r.subdivided)
        }
    };
    let code = crate::canon::ahu_code(&rooted);
    match format {
        Format::Structured => Ok(Output::new(json_line(&CanonRecord {
            code: code.as_str().to_string(),
            root: rooted.root(),
            subdivided,
        }))),
        Format::Human => Ok(Output::new(format!("{}\n", code))),
    }
}

#[derive(Serialize)]
struct OrbitsRecord {
    orbits: Vec<Vec<usize>>,
}

fn cmd_orbits(file: &Path, format: Format) -> Result<Output, String> {
    let (graph, labels) = load(file)?;
    let partition = color_refinement(&ColoredGraph::uniform(graph));
    match format {
        Format::Structured => Ok(Output::new(json_line(&OrbitsRecord {
            orbits: partition.classes().to_vec(),
        }))),
        Format::Human => {
            let mut s = String::new();
            for class in partition.classes() {
                let _ = writeln!(s, "{}", label_set(class, &labels));
            }
            Ok(Output::new(s))
        }
    }
}

fn cmd_iso(a: &Path, b: &Path) -> Result<Output, String> {
    let (ga, _) = load(a)?;
    let (gb, _) = load(b)?;
    let iso = crate::canon::tree_isomorphic(&ga, &gb).map_err(|e| e.to_string())?;
    Ok(Output::new(format!(
        "{}\n",
        if iso { "isomorphic" } else { "not isomorphic" }
    )))
}

fn write_tree(s: &mut String, g: &Graph) {
    if g.edge_count() == 0 {
        let _ = writeln!(s, "n {}", g.vertex_count());
        return;
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{} {}", u, v);
    }
}

fn cmd_gen(n: usize, rooted: bool, random: Option<usize>, seed: u64) -> Result<Output, String> {
    let mut s = String::new();
    let mut first = true;
    let mut emit = |s: &mut String, g: &Graph, root: Option<usize>| {
        if !first {
            let _ = writeln!(s);
        }
        first = false;
        if let Some(r) = root {
            let _ = writeln!(s, "# root {}", r);
        }
        write_tree(s, g);
    };
    match random {
        Some(count) => {
            if n == 0 {
                return Err("n must be at least 1".to_string());
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let tree = random_tree(n, &mut rng);
                emit(&mut s, &tree, rooted.then_some(0));
            }
        }
        None if rooted => {
            for rt in all_rooted_trees(n).map_err(|e| e.to_string())? {
                emit(&mut s, rt.tree(), Some(rt.root()));
            }
        }
        None => {
            for tree in all_free_trees(n).map_err(|e| e.to_string())? {
                emit(&mut s, &tree, None);
            }
        }
    }
    Ok(Output::new(s))
}

fn cmd_census(
    max_n: usize,
    details: Option<&Path>,
    out_path: Option<&Path>,
) -> Result<Output, String> {
    let table = run_census(max_n).map_err(|e| e.to_string())?;
    let tsv = table.to_tsv();
    if let Some(path) = details {
        std::fs::write(path, table.details_tsv())
            .map_err(|e| format!("cannot write {}: {}", path.display(), e))?;
    }
    let mut stderr = String::new();
    for warning in &table.warnings {
        let _ = writeln!(stderr, "warning: {}", warning);
    }
    match out_path {
        Some(path) => {
            std::fs::write(path, tsv)
                .map_err(|e| format!("cannot write {}: {}", path.display(), e))?;
            Ok(Output {
                stdout: String::new(),
                stderr,
            })
        }
        None => Ok(Output {
            stdout: tsv,
            stderr,
        }),
    }
}
