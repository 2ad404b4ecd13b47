//! Command-line front end: coloring, exact search, verification, graph
//! statistics, the reduction gadget, and seeded instance generation.
//!
//! Exit codes: 0 success, 1 invalid input, 2 input not in the claimed
//! class, 3 verification failed, 4 inconclusive (a search or generation
//! cap was hit).

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rvc_core::error::Error;
use rvc_core::gadget::{build_split_gadget, find_induced_sun, SunSearch, DEFAULT_SUN_BUDGET};
use rvc_core::generators;
use rvc_core::graph::Graph;
use rvc_core::io::{
    parse_coloring, parse_graph, parse_model, parse_treepow, serialize_coloring, serialize_gadget_map,
    serialize_graph, serialize_model, serialize_treepow,
};
use rvc_core::oracle::{
    check_rainbow_with, check_strong_rainbow_with, exact_rvc_with, exact_srvc_with, OracleConfig,
    RainbowOutcome,
};
use rvc_core::perm::{color_permutation, rainbow_witness};
use rvc_core::splitsc::color_split_strongly_chordal;
use rvc_core::treepow::{color_tree_itself, color_tree_power};

#[derive(Parser)]
#[command(name = "rvc", about = "Rainbow vertex coloring toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphClass {
    Perm,
    Treepow,
    #[value(name = "split-sc")]
    SplitSc,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an optimal rainbow vertex coloring for a graph in one of
    /// the supported classes and verify it.
    Color {
        #[arg(long, value_enum)]
        class: GraphClass,
        /// Input file (`-` for stdin): a model, tree power, or graph file
        /// depending on the class.
        input: PathBuf,
        /// Write the coloring here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive minimum-color search (small graphs only).
    Exact {
        /// Require witnesses to be shortest paths.
        #[arg(long)]
        strong: bool,
        #[arg(long, default_value_t = 8)]
        max_colors: usize,
        /// Exact-search vertex cap.
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        input: PathBuf,
    },
    /// Check a coloring file against a graph file.
    Verify {
        #[arg(long)]
        strong: bool,
        /// Verifier color cap.
        #[arg(long, default_value_t = 20)]
        color_cap: usize,
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// Graph diameter.
    Diameter { input: PathBuf },
    /// Articulation vertices, 1-indexed.
    CutVertices { input: PathBuf },
    /// Build the split-graph reduction gadget from a graph with no cycle
    /// of length at most p, and check it for induced suns up to p.
    Reduce {
        #[arg(short = 'p', long = "p")]
        p: usize,
        input: PathBuf,
        /// Write the gadget graph here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the index map here (default: `<output>.map`, or inline
        /// comments on stdout).
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Generate a seeded instance.
    #[command(subcommand)]
    Gen(GenFamily),
    /// Print an explicit rainbow path between two vertices under the
    /// permutation coloring.
    Witness {
        /// Model file.
        input: PathBuf,
        /// First vertex, 1-indexed.
        #[arg(short)]
        u: usize,
        /// Second vertex, 1-indexed.
        #[arg(short)]
        v: usize,
    },
}

#[derive(Args)]
struct GenCommon {
    #[arg(long)]
    seed: u64,
    /// Write here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Random permutation model (resampled until connected).
    Perm {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Uniform random labeled tree, emitted as a tree-power file.
    Tree {
        #[arg(short)]
        n: usize,
        /// Exponent stored in the tree-power header.
        #[arg(short, default_value_t = 2)]
        k: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Spider tree with the given comma-separated leg lengths.
    Spider {
        #[arg(long, value_delimiter = ',')]
        legs: Vec<usize>,
        #[arg(short, default_value_t = 2)]
        k: usize,
        /// Unused (spiders are deterministic); accepted for uniformity.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random split graph accepted by the strongly chordal class gate.
    #[command(name = "split-sc")]
    SplitSc {
        #[arg(long)]
        clique: usize,
        #[arg(long)]
        independent: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random connected graph with no cycle of length at most p.
    CpFree {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        p: usize,
        #[command(flatten)]
        common: GenCommon,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NotSplit
        | Error::NotStronglyChordal
        | Error::NotConnected
        | Error::UseTreeItself => 2,
        Error::OracleCapExceeded(..)
        | Error::ExactCapExceeded(..)
        | Error::Inconclusive(_)
        | Error::GenerationFailed(_) => 4,
        _ => 1,
    }
}

fn read_input(path: &Path) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, content).map_err(Error::from),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn summary_line(g: &Graph, k: usize, verified: bool) -> Result<String, Error> {
    let diam = g.diameter()?;
    let lb = diam.saturating_sub(1).max(g.cut_vertices()?.len());
    Ok(format!("result k={k} diam={diam} lb={lb} verified={verified}"))
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Color {
            class,
            input,
            output,
        } => {
            let text = read_input(&input)?;
            let (graph, coloring, strong) = match class {
                GraphClass::Perm => {
                    let model = parse_model(&text)?;
                    let coloring = color_permutation(&model)?;
                    (model.to_graph(), coloring, false)
                }
                GraphClass::Treepow => {
                    let (tree, k) = parse_treepow(&text)?;
                    let coloring = if k == 1 {
                        color_tree_itself(&tree)
                    } else {
                        color_tree_power(&tree, k)?
                    };
                    (tree.power(k)?, coloring, false)
                }
                GraphClass::SplitSc => {
                    let graph = parse_graph(&text)?;
                    let coloring = color_split_strongly_chordal(&graph)?;
                    (graph, coloring, true)
                }
            };
            let cfg = OracleConfig {
                verify_color_cap: coloring.k().max(20),
                ..OracleConfig::default()
            };
            let outcome = if strong {
                check_strong_rainbow_with(&graph, &coloring, &cfg)?
            } else {
                check_rainbow_with(&graph, &coloring, &cfg)?
            };
            let verified = outcome.is_rainbow();
            write_output(output.as_deref(), &serialize_coloring(&coloring))?;
            println!(
                "{}",
                summary_line(&graph, coloring.distinct_color_count(), verified)?
            );
            Ok(if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Exact {
            strong,
            max_colors,
            max_vertices,
            input,
        } => {
            let g = parse_graph(&read_input(&input)?)?;
            let cfg = OracleConfig {
                exact_vertex_cap: max_vertices,
                ..OracleConfig::default()
            };
            let k = if strong {
                exact_srvc_with(&g, max_colors, &cfg)?
            } else {
                exact_rvc_with(&g, max_colors, &cfg)?
            };
            println!("{}", summary_line(&g, k, true)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            strong,
            color_cap,
            graph,
            coloring,
        } => {
            let g = parse_graph(&read_input(&graph)?)?;
            let c = parse_coloring(&read_input(&coloring)?)?;
            let cfg = OracleConfig {
                verify_color_cap: color_cap,
                ..OracleConfig::default()
            };
            let outcome = if strong {
                check_strong_rainbow_with(&g, &c, &cfg)?
            } else {
                check_rainbow_with(&g, &c, &cfg)?
            };
            match outcome {
                RainbowOutcome::Rainbow(_) => {
                    println!("{}", summary_line(&g, c.distinct_color_count(), true)?);
                    Ok(ExitCode::SUCCESS)
                }
                RainbowOutcome::NotRainbow { pair: (u, v) } => {
                    println!("{}", summary_line(&g, c.distinct_color_count(), false)?);
                    println!("failing pair: {} {}", u + 1, v + 1);
                    Ok(ExitCode::from(3))
                }
            }
        }
        Command::Diameter { input } => {
            let g = parse_graph(&read_input(&input)?)?;
            println!("{}", g.diameter()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::CutVertices { input } => {
            let g = parse_graph(&read_input(&input)?)?;
            let cuts = g.cut_vertices()?;
            let ids: Vec<String> = cuts.iter().map(|v| (v + 1).to_string()).collect();
            println!("{}", ids.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce {
            p,
            input,
            output,
            map,
        } => {
            if p < 3 {
                return Err(Error::InvalidModel("p must be at least 3".into()));
            }
            let g = parse_graph(&read_input(&input)?)?;
            if generators::has_cycle_at_most(&g, p) {
                eprintln!("error: input has a cycle of length at most {p}");
                return Ok(ExitCode::from(2));
            }
            let gi = build_split_gadget(&g);
            match find_induced_sun(gi.graph(), p, DEFAULT_SUN_BUDGET) {
                SunSearch::Absent => {}
                SunSearch::Found(sun) => {
                    eprintln!("error: gadget contains an induced {}-sun", sun.t);
                    return Ok(ExitCode::from(3));
                }
                SunSearch::Inconclusive => {
                    eprintln!("error: sun search budget exhausted");
                    return Ok(ExitCode::from(4));
                }
            }
            let graph_text = serialize_graph(gi.graph());
            let map_text = serialize_gadget_map(&gi);
            match (&output, &map) {
                (Some(out), Some(map_path)) => {
                    fs::write(out, graph_text)?;
                    fs::write(map_path, map_text)?;
                }
                (Some(out), None) => {
                    fs::write(out, graph_text)?;
                    fs::write(out.with_extension("map"), map_text)?;
                }
                (None, Some(map_path)) => {
                    print!("{graph_text}");
                    fs::write(map_path, map_text)?;
                }
                (None, None) => print!("{graph_text}{map_text}"),
            }
            println!(
                "# gadget: {} clique + {} independent vertices, sun-free up to {p}",
                gi.clique().len(),
                gi.independent().len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen(family) => run_gen(family),
        Command::Witness { input, u, v } => {
            let model = parse_model(&read_input(&input)?)?;
            if u == 0 || v == 0 {
                return Err(Error::InvalidModel("vertices are 1-indexed".into()));
            }
            let coloring = color_permutation(&model)?;
            let path = rainbow_witness(&model, &coloring, u - 1, v - 1)?;
            let ids: Vec<String> = path.iter().map(|w| (w + 1).to_string()).collect();
            println!("{}", ids.join(" "));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_gen(family: GenFamily) -> Result<ExitCode, Error> {
    let (provenance, body, output) = match family {
        GenFamily::Perm { n, common } => {
            let m = generators::random_connected_permutation_model(n, common.seed)?;
            (
                format!("# seed={} params=perm n={n}\n", common.seed),
                serialize_model(&m),
                common.output,
            )
        }
        GenFamily::Tree { n, k, common } => {
            let t = generators::random_tree(n, common.seed);
            (
                format!("# seed={} params=tree n={n} k={k}\n", common.seed),
                serialize_treepow(&t, k),
                common.output,
            )
        }
        GenFamily::Spider {
            legs,
            k,
            seed,
            output,
        } => {
            if legs.is_empty() {
                return Err(Error::InvalidTree);
            }
            let t = generators::spider(&legs);
            let legs_text: Vec<String> = legs.iter().map(usize::to_string).collect();
            (
                format!("# seed={seed} params=spider legs={}\n", legs_text.join(",")),
                serialize_treepow(&t, k),
                output,
            )
        }
        GenFamily::SplitSc {
            clique,
            independent,
            common,
        } => {
            let g = generators::random_split_strongly_chordal(clique, independent, common.seed)?;
            (
                format!(
                    "# seed={} params=split-sc clique={clique} independent={independent}\n",
                    common.seed
                ),
                serialize_graph(&g),
                common.output,
            )
        }
        GenFamily::CpFree { n, p, common } => {
            let g = generators::random_cp_free(n, p, common.seed);
            (
                format!("# seed={} params=cp-free n={n} p={p}\n", common.seed),
                serialize_graph(&g),
                common.output,
            )
        }
    };
    write_output(output.as_deref(), &format!("{provenance}{body}"))?;
    Ok(ExitCode::SUCCESS)
}
