use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use slicetree::graph::{block_cut_tree, enumerate_cut_pairs, is_two_connected, CutPair};
use slicetree::slice::{minimal_slice_containing, slices_of_pair, SliceError};
use slicetree::symmetry::{automorphisms_with_cap, SymmetryError, DEFAULT_AUT_CAP};
use slicetree::{generate, graph::Graph};

use slicetree_cli::emit;
use slicetree_cli::ingest::{parse_auto, LabeledGraph};
use slicetree_cli::pipeline::{
    build_tree_artifact, run_pipeline, FamilySource, PipelineFailure, PipelineOptions,
};

#[derive(Parser)]
#[command(
    name = "slicetree",
    version,
    about = "Cut-pair decomposition of finite graphs: slices, pair families, and slice trees"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Edges,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// Orbit of the minimal-slice boundary pair under the automorphism group
    Orbit,
    /// All cut pairs (greedy non-crossing fallback if the family crosses)
    All,
    /// Pairs read from --family-file
    File,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full classification pipeline and emit the report
    Classify {
        /// Input path, or '-' / omitted for stdin
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = FamilyArg::Orbit)]
        family: FamilyArg,
        /// JSON file with the family pairs, e.g. [["u","v"],["v","w"]]
        #[arg(long)]
        family_file: Option<PathBuf>,
        /// Vertex cap for automorphism enumeration
        #[arg(long, default_value_t = DEFAULT_AUT_CAP)]
        max_n: usize,
    },
    /// List all separating vertex pairs of a 2-connected graph
    CutPairs { input: Option<PathBuf> },
    /// Slices of the graph minus one vertex pair
    Slices {
        /// The two vertex labels bounding the slices
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
        pair: Vec<String>,
        input: Option<PathBuf>,
    },
    /// An inclusion-minimal slice containing a vertex
    MinimalSlice {
        #[arg(long, required = true)]
        vertex: String,
        input: Option<PathBuf>,
    },
    /// Build and emit the slice tree of a pair family
    Tree {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = FamilyArg::Orbit)]
        family: FamilyArg,
        #[arg(long)]
        family_file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_AUT_CAP)]
        max_n: usize,
    },
    /// Block-cut tree of a connected graph
    BlockCutTree {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Enumerate the automorphism group
    Aut {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_AUT_CAP)]
        max_n: usize,
    },
    /// Generate a named graph: `cycle N | theta L1 L2 L3 | theta-chain K L |
    /// complete N | prism N | random N M [SEED]`
    Gen {
        /// Kind followed by its numeric parameters
        #[arg(required = true)]
        args: Vec<String>,
        /// Seed for 'random' when not given positionally
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = GenFormat::Edges)]
        format: GenFormat,
    },
}

struct CliError {
    code: u8,
    msg: String,
}

fn input_error(msg: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        msg: msg.into(),
    }
}

impl From<PipelineFailure> for CliError {
    fn from(f: PipelineFailure) -> Self {
        match f {
            PipelineFailure::Input(msg) => CliError { code: 2, msg },
            PipelineFailure::Internal(msg) => CliError { code: 3, msg },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| input_error(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| input_error(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn load_graph(path: &Option<PathBuf>) -> Result<LabeledGraph, CliError> {
    let text = read_input(path)?;
    parse_auto(&text).map_err(|e| input_error(e.to_string()))
}

fn resolve_family(
    lg: &LabeledGraph,
    family: FamilyArg,
    family_file: &Option<PathBuf>,
) -> Result<FamilySource, CliError> {
    match family {
        FamilyArg::Orbit => Ok(FamilySource::Orbit),
        FamilyArg::All => Ok(FamilySource::AllCutPairs),
        FamilyArg::File => {
            let path = family_file
                .as_ref()
                .ok_or_else(|| input_error("--family file requires --family-file PATH"))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
            let rows: Vec<[String; 2]> = serde_json::from_str(&text)
                .map_err(|e| input_error(format!("invalid family file: {e}")))?;
            let mut pairs = Vec::with_capacity(rows.len());
            for [la, lb] in rows {
                let a = lg
                    .vertex(&la)
                    .ok_or_else(|| input_error(format!("unknown vertex label '{la}'")))?;
                let b = lg
                    .vertex(&lb)
                    .ok_or_else(|| input_error(format!("unknown vertex label '{lb}'")))?;
                let p = CutPair::try_new(a, b)
                    .ok_or_else(|| input_error(format!("family pair has equal members '{la}'")))?;
                pairs.push(p);
            }
            Ok(FamilySource::Supplied(pairs))
        }
    }
}

fn warn_over_cap(lg: &LabeledGraph, source: &FamilySource, cap: usize) {
    if lg.graph.n() > cap && !matches!(source, FamilySource::Orbit) {
        eprintln!(
            "warning: {} vertices exceeds the automorphism cap {cap}; symmetry checks will be \
             skipped (raise with --max-n)",
            lg.graph.n()
        );
    }
}

fn require_two_connected(lg: &LabeledGraph) -> Result<(), CliError> {
    if !is_two_connected(&lg.graph) {
        return Err(input_error(
            "graph must be 2-connected (connected, no cut vertex, n >= 3) for this operation",
        ));
    }
    Ok(())
}

fn run(cmd: Cmd) -> Result<String, CliError> {
    match cmd {
        Cmd::Classify {
            input,
            format,
            family,
            family_file,
            max_n,
        } => {
            let lg = load_graph(&input)?;
            let source = resolve_family(&lg, family, &family_file)?;
            warn_over_cap(&lg, &source, max_n);
            let outcome = run_pipeline(
                &lg,
                &PipelineOptions {
                    family: source,
                    aut_cap: max_n,
                },
            )?;
            match format {
                Format::Json => Ok(emit::report_to_json(&outcome.report)),
                Format::Dot => {
                    if let Some(t) = &outcome.tree {
                        Ok(emit::tree_to_dot(t, &lg))
                    } else if let Some(bct) = &outcome.block_cut {
                        Ok(emit::block_cut_to_dot(bct, &lg))
                    } else {
                        Err(input_error(format!(
                            "no tree artifact to draw for verdict '{}'",
                            outcome.report.verdict
                        )))
                    }
                }
            }
        }
        Cmd::CutPairs { input } => {
            let lg = load_graph(&input)?;
            let pairs =
                enumerate_cut_pairs(&lg.graph).map_err(|e| input_error(e.to_string()))?;
            Ok(emit::cut_pairs_to_json(&pairs, &lg))
        }
        Cmd::Slices { pair, input } => {
            let lg = load_graph(&input)?;
            require_two_connected(&lg)?;
            let a = lg
                .vertex(&pair[0])
                .ok_or_else(|| input_error(format!("unknown vertex label '{}'", pair[0])))?;
            let b = lg
                .vertex(&pair[1])
                .ok_or_else(|| input_error(format!("unknown vertex label '{}'", pair[1])))?;
            let p = CutPair::try_new(a, b)
                .ok_or_else(|| input_error("the two pair labels must differ"))?;
            let slices = slices_of_pair(&lg.graph, p).map_err(|e| input_error(e.to_string()))?;
            Ok(emit::slices_to_json(&slices, &lg))
        }
        Cmd::MinimalSlice { vertex, input } => {
            let lg = load_graph(&input)?;
            require_two_connected(&lg)?;
            let a = lg
                .vertex(&vertex)
                .ok_or_else(|| input_error(format!("unknown vertex label '{vertex}'")))?;
            let slice = minimal_slice_containing(&lg.graph, a).map_err(|e| match e {
                SliceError::NoSliceContains(_) => {
                    input_error("graph has no cut pairs, so no slice contains the vertex")
                }
                other => input_error(other.to_string()),
            })?;
            Ok(emit::single_slice_to_json(&slice, &lg))
        }
        Cmd::Tree {
            input,
            format,
            family,
            family_file,
            max_n,
        } => {
            let lg = load_graph(&input)?;
            let source = resolve_family(&lg, family, &family_file)?;
            warn_over_cap(&lg, &source, max_n);
            let (_, tree, crossing) = build_tree_artifact(&lg, &source, max_n)?;
            if let Some(w) = crossing {
                eprintln!(
                    "warning: family is crossing ({w}); greedy non-crossing subfamily substituted"
                );
            }
            match format {
                Format::Json => Ok(emit::tree_to_json_text(&tree, &lg)),
                Format::Dot => Ok(emit::tree_to_dot(&tree, &lg)),
            }
        }
        Cmd::BlockCutTree { input, format } => {
            let lg = load_graph(&input)?;
            let bct = block_cut_tree(&lg.graph).map_err(|e| input_error(e.to_string()))?;
            match format {
                Format::Json => Ok(emit::block_cut_to_json(&bct, &lg)),
                Format::Dot => Ok(emit::block_cut_to_dot(&bct, &lg)),
            }
        }
        Cmd::Aut { input, max_n } => {
            let lg = load_graph(&input)?;
            let group = automorphisms_with_cap(&lg.graph, max_n).map_err(|e| match e {
                SymmetryError::CapExceeded { .. } => input_error(e.to_string()),
                other => CliError {
                    code: 3,
                    msg: other.to_string(),
                },
            })?;
            Ok(emit::aut_to_json(&group, &lg))
        }
        Cmd::Gen { args, seed, format } => {
            let g = generate_from_args(&args, seed)?;
            let lg = LabeledGraph::from_graph(g);
            Ok(match format {
                GenFormat::Edges => lg.to_edge_list(),
                GenFormat::Json => lg.to_json(),
                GenFormat::Dot => emit::graph_to_dot(&lg),
            })
        }
    }
}

fn generate_from_args(args: &[String], seed_flag: Option<u64>) -> Result<Graph, CliError> {
    let kind = args[0].as_str();
    let params: Vec<u64> = args[1..]
        .iter()
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| input_error(format!("parameter '{s}' is not a nonnegative integer")))
        })
        .collect::<Result<_, _>>()?;
    let want = |k: usize| -> Result<(), CliError> {
        if params.len() == k {
            Ok(())
        } else {
            Err(input_error(format!(
                "'{kind}' takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let gen_err = |e: generate::GenerateError| input_error(e.to_string());
    match kind {
        "cycle" => {
            want(1)?;
            generate::cycle(params[0] as usize).map_err(gen_err)
        }
        "theta" => {
            want(3)?;
            generate::theta(params[0] as usize, params[1] as usize, params[2] as usize)
                .map_err(gen_err)
        }
        "theta-chain" => {
            want(2)?;
            generate::theta_chain(params[0] as usize, params[1] as usize).map_err(gen_err)
        }
        "complete" => {
            want(1)?;
            generate::complete(params[0] as usize).map_err(gen_err)
        }
        "prism" => {
            want(1)?;
            generate::prism(params[0] as usize).map_err(gen_err)
        }
        "random" => {
            if params.len() != 2 && params.len() != 3 {
                return Err(input_error(
                    "'random' takes N M and an optional SEED (or --seed)",
                ));
            }
            let seed = params.get(2).copied().or(seed_flag).unwrap_or(0);
            generate::random_two_connected(params[0] as usize, params[1] as usize, seed)
                .map_err(gen_err)
        }
        other => Err(input_error(format!(
            "unknown kind '{other}'; expected cycle, theta, theta-chain, complete, prism or random"
        ))),
    }
}
