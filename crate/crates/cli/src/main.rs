use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use wham::coloring::{four_coloring_from_pair, wh_from_coloring, PairPartition};
use wham::factors::enumerate_weak_hamiltonians;
use wham::io::{corpus, document, dot, export, generate, planar_code};
use wham::moduli::{build_chromatic_graph, ChromaticMode, ModuliGraphs};
use wham::mutation::{mutate, MatchingSelection};
use wham::{check, coloring, resolution, PlanarMap};

#[derive(Parser)]
#[command(name = "wham", version, about = "Weak Hamiltonians and four-colorings of planar maps")]
struct Args {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a map and print its counts
    Validate { file: PathBuf },
    /// Print the faces and the face of every dart
    Faces { file: PathBuf },
    /// Blow up vertices of degree >= 4; prints the face correspondence
    Resolve {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Enumerate weak Hamiltonians
    Wh {
        file: PathBuf,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// DOT overlays instead of JSON
        #[arg(long)]
        dot: bool,
        /// Only this weak Hamiltonian (DOT output)
        #[arg(long, requires = "dot")]
        index: Option<usize>,
    },
    /// Mutate a weak Hamiltonian by a matching selection
    Mutate {
        file: PathBuf,
        #[arg(long)]
        wh: usize,
        /// Bit i picks the matching on cycle i; `0b...` or decimal
        #[arg(long)]
        selection: String,
    },
    /// The weak Hamiltonian graph
    Moduli {
        file: PathBuf,
        /// Also write DOT to this file
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Include chromatic cliques and their colorings
        #[arg(long)]
        with_cliques: bool,
    },
    /// The chromatic graph
    Chromatic {
        file: PathBuf,
        /// One edge per shared weak Hamiltonian
        #[arg(long)]
        multigraph: bool,
        #[arg(long)]
        dot: bool,
    },
    /// The 4-coloring given by a weak Hamiltonian and one of its mutations
    Color {
        file: PathBuf,
        #[arg(long)]
        wh: usize,
        #[arg(long)]
        selection: String,
        #[arg(long)]
        dot: bool,
    },
    /// Recover a weak Hamiltonian from a proper 4-coloring
    FromColoring {
        file: PathBuf,
        /// JSON color array, or oracle output together with --index
        #[arg(long)]
        coloring: PathBuf,
        /// 1 = {1,2}|{3,4}, 2 = {1,3}|{2,4}, 3 = {1,4}|{2,3}
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        partition: u8,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Brute-force enumeration of proper face colorings
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=4))]
        colors: u8,
        /// One coloring per relabeling class
        #[arg(long)]
        canonical: bool,
    },
    /// Run the full invariant suite; exit code 0 iff every check passes
    Check { file: PathBuf },
    /// Write a built-in map: tetrahedron, prism <n>, k23, theta, octahedron
    Gen {
        name: String,
        n: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write all bridgeless cubic maps up to a vertex count as planar code
    GenCorpus {
        #[arg(long)]
        max_vertices: usize,
        /// Drop maps with parallel edges
        #[arg(long)]
        simple: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
}

struct CliError {
    kind: String,
    message: String,
}

fn lib<E: Into<wham::Error>>(e: E) -> CliError {
    let e: wham::Error = e.into();
    CliError { kind: e.kind().to_string(), message: e.to_string() }
}

fn usage(kind: &str, message: impl Into<String>) -> CliError {
    CliError { kind: kind.to_string(), message: message.into() }
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| usage("IoError", format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| usage("IoError", format!("{}: {e}", path.display())))
}

/// A map document, or the first map of a planar-code file.
fn load_map(path: &Path) -> Result<PlanarMap, CliError> {
    let bytes = read_bytes(path)?;
    if bytes.starts_with(b">>planar_code") {
        let maps = planar_code::parse_planar_code(&bytes).map_err(lib)?;
        return maps.into_iter().next().ok_or_else(|| usage("ParseError", "planar code file holds no maps"));
    }
    let text = String::from_utf8(bytes).map_err(|_| usage("ParseError", "map file is not UTF-8"))?;
    document::parse_map_document(&text).map_err(lib)
}

fn wh_at(map: &PlanarMap, index: usize) -> Result<(Vec<wham::WeakHamiltonian>, wham::WeakHamiltonian), CliError> {
    let whs = enumerate_weak_hamiltonians(map).map_err(lib)?;
    let h = whs.get(index).cloned().ok_or_else(|| {
        usage("NoSuchWeakHamiltonian", format!("index {index} but only {} weak Hamiltonians", whs.len()))
    })?;
    Ok((whs, h))
}

/// What a command prints and whether it counts as success.
struct Output {
    text: String,
    ok: bool,
}

fn json_out(value: &Value) -> Output {
    Output { text: export::to_text(value), ok: true }
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Validate { file } => {
            let map = load_map(&file)?;
            Ok(json_out(&json!({
                "valid": true,
                "num_vertices": map.num_vertices(),
                "num_edges": map.num_edges(),
                "num_faces": map.num_faces(),
                "cubic": map.is_cubic(),
            })))
        }
        Command::Faces { file } => Ok(json_out(&export::faces_json(&load_map(&file)?))),
        Command::Resolve { file, output } => {
            let map = load_map(&file)?;
            let (resolved, corr) = resolution::resolve(&map).map_err(lib)?;
            write_file(&output, document::emit_map_document(&resolved, None).as_bytes())?;
            Ok(json_out(&export::correspondence_json(&corr)))
        }
        Command::Wh { file, json: _, dot, index } => {
            let map = load_map(&file)?;
            let whs = enumerate_weak_hamiltonians(&map).map_err(lib)?;
            if !dot {
                return Ok(json_out(&export::wh_list_json(&map, &whs)));
            }
            let text = match index {
                Some(i) => {
                    let h = whs.get(i).ok_or_else(|| {
                        usage("NoSuchWeakHamiltonian", format!("index {i} but only {} weak Hamiltonians", whs.len()))
                    })?;
                    dot::wh_overlay_dot(&map, i, h)
                }
                None if whs.is_empty() => dot::map_dot(&map),
                None => whs.iter().enumerate().map(|(i, h)| dot::wh_overlay_dot(&map, i, h)).collect(),
            };
            Ok(Output { text, ok: true })
        }
        Command::Mutate { file, wh, selection } => {
            let map = load_map(&file)?;
            let (whs, h) = wh_at(&map, wh)?;
            let sel = MatchingSelection::parse(&selection, h.num_cycles()).map_err(lib)?;
            let m = mutate(&map, &h, &sel).map_err(lib)?;
            let target = whs.binary_search(&m).ok();
            Ok(json_out(&export::mutation_json(wh, &selection, target, &m)))
        }
        Command::Moduli { file, dot: dot_path, with_cliques } => {
            let map = load_map(&file)?;
            let m = ModuliGraphs::build(&map, ChromaticMode::Simple).map_err(lib)?;
            if let Some(path) = dot_path {
                let cliques = with_cliques.then_some(&m.cliques);
                write_file(&path, dot::wh_graph_dot(&m.wh_graph, cliques).as_bytes())?;
            }
            let mut value = json!({"wh_graph": export::wh_graph_json(&m.wh_graph)});
            if with_cliques {
                value["cliques"] = export::cliques_json(&m.cliques);
                value["chromatic"] = export::chromatic_json(&m.chromatic, &m.cliques);
                value["coloring_table"] = export::coloring_table_json(&m.coloring_table(&map).map_err(lib)?);
            }
            Ok(json_out(&value))
        }
        Command::Chromatic { file, multigraph, dot } => {
            let map = load_map(&file)?;
            let mode = if multigraph { ChromaticMode::Multigraph } else { ChromaticMode::Simple };
            let m = ModuliGraphs::build(&map, ChromaticMode::Simple).map_err(lib)?;
            let chi = build_chromatic_graph(&m.wh_graph, &m.cliques, mode).map_err(lib)?;
            if dot {
                return Ok(Output { text: dot::chromatic_dot(&chi, &m.cliques), ok: true });
            }
            Ok(json_out(&export::chromatic_json(&chi, &m.cliques)))
        }
        Command::Color { file, wh, selection, dot } => {
            let map = load_map(&file)?;
            let (_, h) = wh_at(&map, wh)?;
            let sel = MatchingSelection::parse(&selection, h.num_cycles()).map_err(lib)?;
            let m = mutate(&map, &h, &sel).map_err(lib)?;
            let phi = four_coloring_from_pair(&map, &h, &m).map_err(lib)?;
            if dot {
                return Ok(Output { text: dot::coloring_dot(&map, &phi), ok: true });
            }
            Ok(json_out(&export::coloring_json(&phi)))
        }
        Command::FromColoring { file, coloring: coloring_path, partition, index } => {
            let map = load_map(&file)?;
            let text = String::from_utf8(read_bytes(&coloring_path)?)
                .map_err(|_| usage("ParseError", "coloring file is not UTF-8"))?;
            let colorings = export::parse_colorings(&text).map_err(|m| usage("ParseError", m))?;
            let phi = colorings.get(index).ok_or_else(|| {
                usage("ParseError", format!("coloring index {index} but the file holds {}", colorings.len()))
            })?;
            let partition = PairPartition::from_index(partition as usize).expect("range checked by clap");
            let h = wh_from_coloring(&map, phi, partition).map_err(lib)?;
            let whs = enumerate_weak_hamiltonians(&map).map_err(lib)?;
            let position = whs.binary_search(&h).expect("a recovered weak Hamiltonian is enumerated");
            Ok(json_out(&export::wh_entry(position, &h)))
        }
        Command::Oracle { file, colors, canonical } => {
            let map = load_map(&file)?;
            let found = coloring::enumerate_colorings_bruteforce(&map, colors, canonical);
            Ok(json_out(&export::oracle_json(colors, &found)))
        }
        Command::Check { file } => {
            let report = check::run_checks(&load_map(&file)?);
            Ok(Output { text: export::to_text(&export::report_json(&report)), ok: report.passed() })
        }
        Command::Gen { name, n, output } => {
            let generator = generate::Generator::parse(&name, n).map_err(lib)?;
            let map = generator.build();
            write_file(&output, document::emit_map_document(&map, Some(&generator.name())).as_bytes())?;
            Ok(json_out(&json!({
                "name": generator.name(),
                "num_vertices": map.num_vertices(),
                "num_edges": map.num_edges(),
                "num_faces": map.num_faces(),
            })))
        }
        Command::GenCorpus { max_vertices, simple, output } => {
            let maps = if simple {
                corpus::simple_cubic_maps_up_to(max_vertices)
            } else {
                corpus::cubic_maps_up_to(max_vertices)
            };
            write_file(&output, &planar_code::emit_planar_code(&maps))?;
            Ok(json_out(&json!({"count": maps.len()})))
        }
    }
}

fn report_error(e: &CliError) {
    eprintln!("{}", json!({"error": e.kind, "message": e.message}));
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            report_error(&usage("UsageError", e.to_string().trim_end()));
            return ExitCode::from(2);
        }
    };
    if let Some(n) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            report_error(&usage("UsageError", e.to_string()));
            return ExitCode::from(2);
        }
    }
    match run(args.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            report_error(&e);
            ExitCode::FAILURE
        }
    }
}
