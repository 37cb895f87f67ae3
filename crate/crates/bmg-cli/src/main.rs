//! Command-line front end for the bmg library. One subcommand per library
//! operation, JSON output by default, `--format text` for the bracket
//! notation, DOT export for graph-shaped results.
//!
//! Exit codes: 0 success, 1 domain failure (the input parsed but the
//! operation's verdict is negative or its preconditions fail), 2 usage or
//! parse errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bmg::axioms::check_2cbmg;
use bmg::constructors::{
    bitournament_from_mask, family_graph, join_disjoint, join_via_minimal, odd_even_graph,
    parity_graph, random_bitournament, FamilySpec,
};
use bmg::dot::to_dot;
use bmg::enumeration::{
    canonical_form, canonical_form_preserving, classification_table, classify_split,
    enumerate_class, enumerate_extensions, graph_from_mask, CanonPolicy, CanonicalForm, FilterSet,
    ScanOptions,
};
use bmg::structure::{
    consistent_underlying_oriented, quotient, symmetric_components, topological_order,
    underlying_oriented, OrientationChoice,
};
use bmg::tree::{best_match_graph, parse_colored_tree, random_colored_tree};
use bmg::truncation::{
    decompose, elementary_graph, truncate, DecompositionOutcome, ElementaryBlock,
};
use bmg::{ColoredDigraph, Vertex, VertexSet};

#[derive(Parser)]
#[command(name = "bmg", version, about = "2-colored best match graphs: check, decompose, classify")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format. `dot` only applies to graph-shaped results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to DIR/<subcommand>.<ext> instead of stdout.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args)]
struct ScanArgs {
    /// Worker threads: 0 = all cores, 1 = sequential.
    #[arg(long, env = "BMG_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Raise the edge-bit budget from 24 to 30 (up to a (3,5) split).
    #[arg(long)]
    allow_large: bool,
    /// Do not interchange equal-sized color classes when deduplicating.
    #[arg(long)]
    no_swap: bool,
}

impl ScanArgs {
    fn options(&self) -> ScanOptions {
        ScanOptions {
            workers: self.workers,
            allow_large: self.allow_large,
            policy: if self.no_swap { CanonPolicy::NeverSwap } else { CanonPolicy::SwapWhenEqual },
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the four axioms; exit 1 unless all pass.
    Check { file: PathBuf },
    /// Collapse equivalent vertices into one graph on the classes.
    Quotient { file: PathBuf },
    /// Drop one direction of every symmetric edge. Default choice is the
    /// class-consistent one; --seed flips coins instead.
    Orient {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Topological order of an oriented graph; exit 1 with the cycle if none.
    Toposort { file: PathBuf },
    /// Components of the symmetric-edge graph on vertices with two or more
    /// symmetric edges.
    Sigma { file: PathBuf },
    /// One truncation step: remove the last vertex, its partner, and the
    /// dependent vertices.
    Truncate { file: PathBuf },
    /// Iterate truncation to a pair/triple decomposition; reports how far it
    /// got and why it stopped (stopping early is a result, not an error).
    Decompose { file: PathBuf },
    /// Count classes A-E for every split of n vertices (or one split with --i).
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: Option<usize>,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// List all classes on an (i, j) split passing a filter set.
    Enumerate {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// A = axioms, B = +connected, C = +no equivalent pair,
        /// D = +sink-free, E = all of them.
        #[arg(long, default_value = "A")]
        filters: char,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// List all edge-supersets of a base graph passing a filter set, keyed
    /// by class-preserving certificates.
    Extend {
        #[arg(long)]
        base: PathBuf,
        #[arg(long, default_value = "E")]
        filters: char,
        /// Drop the connectivity requirement from the chosen filter set.
        #[arg(long)]
        drop_connected: bool,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Build a graph from a JSON spec (inline or @file). One of:
    /// {"elementary": [{"size": 2|3, "flip": bool}, ...]},
    /// {"family": [[a,b], ...]}, {"parity": [members...]},
    /// {"oddeven": {"evens": [...], "odds": [...]}},
    /// {"join": {"documents": [...], "from": [vertices]?}},
    /// {"bitournament": {"a": A, "b": B, "seed": S | "mask": M}}.
    Construct {
        #[arg(long)]
        spec: String,
    },
    /// Best match graph of a leaf-colored rooted tree, e.g.
    /// ((a:0,b:1),c:1). Without a file, --leaves and --seed grow one.
    FromTree {
        file: Option<PathBuf>,
        #[arg(long)]
        leaves: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Canonical certificate and representative of the isomorphism class.
    Canon {
        file: PathBuf,
        /// Certify without interchanging the color classes.
        #[arg(long)]
        keep_sides: bool,
    },
    /// Are two graphs isomorphic (allowing color interchange)? Exit 1 if not.
    Iso { file1: PathBuf, file2: PathBuf },
    /// Graphviz DOT with symmetric edges drawn as one bold double arrow.
    ExportDot { file: PathBuf },
}

struct Output {
    name: &'static str,
    body: String,
    ext: &'static str,
    code: u8,
}

impl Output {
    fn new(name: &'static str, body: String, ext: &'static str) -> Self {
        Output { name, body, ext, code: 0 }
    }

    fn with_code(mut self, code: u8) -> Self {
        self.code = code;
        self
    }
}

enum CliError {
    /// Bad invocation or unparseable input: exit 2.
    Usage(String),
    /// The operation itself refused: exit 1.
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_dir = cli.out.clone();
    match run(cli) {
        Ok(output) => {
            if let Some(dir) = out_dir {
                if let Err(e) = fs::create_dir_all(&dir).and_then(|_| {
                    fs::write(dir.join(format!("{}.{}", output.name, output.ext)), &output.body)
                }) {
                    eprintln!("bmg: cannot write output: {e}");
                    return ExitCode::from(2);
                }
            } else {
                println!("{}", output.body.trim_end_matches('\n'));
            }
            ExitCode::from(output.code)
        }
        Err(e) => {
            eprintln!("bmg: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<ColoredDigraph, CliError> {
    let doc = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    ColoredDigraph::from_document(&doc)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn graph_value(g: &ColoredDigraph) -> Value {
    serde_json::from_str(&g.to_json()).expect("graph JSON round-trips")
}

fn graph_doc(g: &ColoredDigraph) -> String {
    format!("{}\n{}", g.to_text(), g.colors_text())
}

/// Graph-shaped result in the requested format.
fn graph_output(name: &'static str, g: &ColoredDigraph, format: Format) -> Output {
    match format {
        Format::Json => Output::new(name, g.to_json(), "json"),
        Format::Text => Output::new(name, graph_doc(g), "txt"),
        Format::Dot => Output::new(name, to_dot(g), "dot"),
    }
}

fn no_dot(format: Format) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage("dot format only applies to graph-shaped results".into()));
    }
    Ok(())
}

fn vs(set: VertexSet) -> Vec<Vertex> {
    set.to_vec()
}

fn filter_set(letter: char) -> Result<FilterSet, CliError> {
    FilterSet::from_letter(letter)
        .ok_or_else(|| CliError::Usage(format!("no filter set named {letter:?}, use A-E")))
}

/// Certificate plus its decoded representative, for list output.
fn class_entry(form: &CanonicalForm) -> Value {
    let g = graph_from_mask(form.sides.0 as usize, form.sides.1 as usize, form.bits);
    json!({
        "sides": [form.sides.0, form.sides.1],
        "bits": form.bits,
        "graph": g.to_text(),
        "colors": g.colors_text(),
    })
}

fn class_line(form: &CanonicalForm) -> String {
    let g = graph_from_mask(form.sides.0 as usize, form.sides.1 as usize, form.bits);
    format!("{} {}", g.to_text(), g.colors_text())
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Check { file } => {
            let g = read_graph(&file)?;
            let report = check_2cbmg(&g);
            let body = match format {
                Format::Json => report.to_json(),
                Format::Text => {
                    let mut s = String::new();
                    for (name, w) in [("N1", &report.n1), ("N2", &report.n2), ("N3", &report.n3)] {
                        match w {
                            None => writeln!(s, "{name}: pass").unwrap(),
                            Some(w) => writeln!(s, "{name}: witness {:?}", w.vertices).unwrap(),
                        }
                    }
                    if report.sinks.is_empty() {
                        writeln!(s, "N4: pass").unwrap();
                    } else {
                        writeln!(s, "N4: sinks {}", report.sinks).unwrap();
                    }
                    let verdict = if report.is_2cbmg {
                        "2-cBMG".to_string()
                    } else if report.is_almost_2cbmg {
                        format!("almost 2-cBMG: sink at {}", report.sinks.min().unwrap())
                    } else {
                        "not a 2-cBMG".to_string()
                    };
                    write!(s, "verdict: {verdict}").unwrap();
                    s
                }
                Format::Dot => return Err(no_dot(format).unwrap_err()),
            };
            Ok(Output::new("check", body, ext_of(format)).with_code(u8::from(!report.is_2cbmg)))
        }
        Cmd::Quotient { file } => {
            let g = read_graph(&file)?;
            let q = quotient(&g);
            match format {
                Format::Json => Ok(Output::new(
                    "quotient",
                    json!({
                        "graph": graph_value(&q.graph),
                        "representatives": q.reps,
                        "classes": q.classes.classes.iter().map(|c| vs(*c)).collect::<Vec<_>>(),
                    })
                    .to_string(),
                    "json",
                )),
                Format::Text => {
                    // Auxiliary lines go in comments so the output re-parses.
                    let mut s = graph_doc(&q.graph);
                    write!(s, "\n# classes:").unwrap();
                    for c in &q.classes.classes {
                        write!(s, " {c}").unwrap();
                    }
                    Ok(Output::new("quotient", s, "txt"))
                }
                Format::Dot => Ok(Output::new("quotient", to_dot(&q.graph), "dot")),
            }
        }
        Cmd::Orient { file, seed } => {
            let g = read_graph(&file)?;
            let oriented = match seed {
                None => consistent_underlying_oriented(&g),
                Some(s) => underlying_oriented(&g, &OrientationChoice::seeded(&g, s))
                    .expect("a seeded choice covers exactly the symmetric edges"),
            };
            match format {
                Format::Json => Ok(Output::new(
                    "orient",
                    json!({
                        "graph": graph_value(&oriented.graph),
                        "kept": oriented.kept,
                    })
                    .to_string(),
                    "json",
                )),
                Format::Text => {
                    let mut s = graph_doc(&oriented.graph);
                    write!(s, "\n# kept:").unwrap();
                    for (u, v) in &oriented.kept {
                        write!(s, " [{u},{v}]").unwrap();
                    }
                    Ok(Output::new("orient", s, "txt"))
                }
                Format::Dot => Ok(Output::new("orient", to_dot(&oriented.graph), "dot")),
            }
        }
        Cmd::Toposort { file } => {
            no_dot(format)?;
            let g = read_graph(&file)?;
            match topological_order(&g) {
                Ok(order) => {
                    let body = match format {
                        Format::Json => json!({ "order": order }).to_string(),
                        _ => order.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                    };
                    Ok(Output::new("toposort", body, ext_of(format)))
                }
                Err(cycle) => {
                    let body = match format {
                        Format::Json => json!({ "cycle": cycle }).to_string(),
                        _ => format!(
                            "cycle: {}",
                            cycle.iter().map(ToString::to_string).collect::<Vec<_>>().join(" -> ")
                        ),
                    };
                    Ok(Output::new("toposort", body, ext_of(format)).with_code(1))
                }
            }
        }
        Cmd::Sigma { file } => {
            no_dot(format)?;
            let g = read_graph(&file)?;
            let sigma = symmetric_components(&g);
            let body = match format {
                Format::Json => json!({
                    "vertices": vs(sigma.vertices),
                    "components": sigma
                        .components
                        .iter()
                        .map(|c| json!({
                            "side0": vs(c.side0),
                            "side1": vs(c.side1),
                            "complete_bipartite": c.complete_bipartite,
                        }))
                        .collect::<Vec<_>>(),
                })
                .to_string(),
                _ => {
                    let mut s = format!("vertices: {}", sigma.vertices);
                    for c in &sigma.components {
                        write!(
                            s,
                            "\ncomponent: side0={} side1={} complete_bipartite={}",
                            c.side0, c.side1, c.complete_bipartite
                        )
                        .unwrap();
                    }
                    s
                }
            };
            Ok(Output::new("sigma", body, ext_of(format)))
        }
        Cmd::Truncate { file } => {
            no_dot(format)?;
            let g = read_graph(&file)?;
            let step = truncate(&g).map_err(|e| CliError::Domain(e.to_string()))?;
            let body = match format {
                Format::Json => json!({
                    "m": step.analysis.m,
                    "ell": step.analysis.ell,
                    "d": step.analysis.d_list,
                    "order": step.analysis.order,
                    "removed": step.removed,
                    "case": serde_json::to_value(step.case).unwrap(),
                    "remainder": graph_value(&step.remainder),
                    "remainder_text": step.remainder.to_text(),
                    "old_labels": step.old_labels,
                })
                .to_string(),
                _ => format!(
                    "m={} ell={} d={:?}\nremoved: {:?}\ncase: {:?}\nremainder: {}\n{}\nold labels: {:?}",
                    step.analysis.m,
                    step.analysis.ell,
                    step.analysis.d_list,
                    step.removed,
                    step.case,
                    step.remainder.to_text(),
                    step.remainder.colors_text(),
                    step.old_labels,
                ),
            };
            Ok(Output::new("truncate", body, ext_of(format)))
        }
        Cmd::Decompose { file } => {
            no_dot(format)?;
            let g = read_graph(&file)?;
            let result = decompose(&g).map_err(|e| CliError::Domain(e.to_string()))?;
            let blocks: Vec<Value> = result
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "vertices": b.vertices,
                        "kind": serde_json::to_value(b.kind).unwrap(),
                        "case": serde_json::to_value(b.case).unwrap(),
                        "sink_guard": b.sink_guard,
                    })
                })
                .collect();
            let body = match format {
                Format::Json => {
                    let outcome = match &result.outcome {
                        DecompositionOutcome::Complete => json!("complete"),
                        DecompositionOutcome::Failed { reason, remainder } => json!({
                            "failed": {
                                "reason": reason.to_string(),
                                "remainder": graph_value(remainder),
                                "remainder_text": remainder.to_text(),
                            }
                        }),
                    };
                    json!({ "blocks": blocks, "outcome": outcome }).to_string()
                }
                _ => {
                    let mut s = String::new();
                    for b in &result.blocks {
                        writeln!(
                            s,
                            "block: kind={:?} case={:?} vertices={:?} sink_guard={:?}",
                            b.kind, b.case, b.vertices, b.sink_guard
                        )
                        .unwrap();
                    }
                    match &result.outcome {
                        DecompositionOutcome::Complete => write!(s, "outcome: complete").unwrap(),
                        DecompositionOutcome::Failed { reason, remainder } => write!(
                            s,
                            "outcome: failed: {reason}; remainder {} {}",
                            remainder.to_text(),
                            remainder.colors_text()
                        )
                        .unwrap(),
                    }
                    s
                }
            };
            Ok(Output::new("decompose", body, ext_of(format)))
        }
        Cmd::Classify { n, i, scan } => {
            no_dot(format)?;
            let opts = scan.options();
            let rows = match i {
                Some(i) => {
                    if i == 0 || i >= n {
                        return Err(CliError::Usage(format!("--i must sit inside 1..{n}")));
                    }
                    vec![classify_split(i, n - i, &opts)
                        .map_err(|e| CliError::Domain(e.to_string()))?
                        .row()]
                }
                None => {
                    classification_table([n], &opts).map_err(|e| CliError::Domain(e.to_string()))?
                }
            };
            let body = match format {
                Format::Json => serde_json::to_string(&rows).unwrap(),
                _ => rows.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
            };
            Ok(Output::new("classify", body, ext_of(format)))
        }
        Cmd::Enumerate { i, j, filters, scan } => {
            no_dot(format)?;
            let fs = filter_set(filters)?;
            let class = enumerate_class(i, j, &fs, &scan.options())
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let body = match format {
                Format::Json => json!({
                    "sides": [i, j],
                    "filters": filters.to_ascii_uppercase().to_string(),
                    "count": class.count(),
                    "classes": class.forms.iter().map(class_entry).collect::<Vec<_>>(),
                })
                .to_string(),
                _ => class.forms.iter().map(class_line).collect::<Vec<_>>().join("\n"),
            };
            Ok(Output::new("enumerate", body, ext_of(format)))
        }
        Cmd::Extend { base, filters, drop_connected, scan } => {
            no_dot(format)?;
            let g = read_graph(&base)?;
            let mut fs = filter_set(filters)?;
            if drop_connected {
                fs.require_connected = false;
            }
            let class = enumerate_extensions(&g, &fs, &scan.options())
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let body = match format {
                Format::Json => json!({
                    "base": g.to_text(),
                    "filters": filters.to_ascii_uppercase().to_string(),
                    "count": class.count(),
                    "classes": class.forms.iter().map(class_entry).collect::<Vec<_>>(),
                })
                .to_string(),
                _ => class.forms.iter().map(class_line).collect::<Vec<_>>().join("\n"),
            };
            Ok(Output::new("extend", body, ext_of(format)))
        }
        Cmd::Construct { spec } => {
            let g = construct_from_spec(&spec)?;
            Ok(graph_output("construct", &g, format))
        }
        Cmd::FromTree { file, leaves, seed } => {
            let tree = match (file, leaves) {
                (Some(path), _) => {
                    let doc = fs::read_to_string(&path).map_err(|e| {
                        CliError::Usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    parse_colored_tree(&doc)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
                }
                (None, Some(k)) => random_colored_tree(k, seed),
                (None, None) => {
                    return Err(CliError::Usage("from-tree needs a tree file or --leaves".into()))
                }
            };
            let g = best_match_graph(&tree);
            if format == Format::Json {
                let leaves: Vec<Value> = tree
                    .tree
                    .leaf_names()
                    .iter()
                    .zip(&tree.colors)
                    .map(|(name, color)| json!({ "name": name, "color": color }))
                    .collect();
                return Ok(Output::new(
                    "from-tree",
                    json!({ "leaves": leaves, "graph": graph_value(&g) }).to_string(),
                    "json",
                ));
            }
            Ok(graph_output("from-tree", &g, format))
        }
        Cmd::Canon { file, keep_sides } => {
            no_dot(format)?;
            let g = read_graph(&file)?;
            let form = if keep_sides {
                canonical_form_preserving(&g)
            } else {
                canonical_form(&g, CanonPolicy::SwapWhenEqual)
            };
            let body = match format {
                Format::Json => class_entry(&form).to_string(),
                _ => format!("{form} {}", class_line(&form)),
            };
            Ok(Output::new("canon", body, ext_of(format)))
        }
        Cmd::Iso { file1, file2 } => {
            no_dot(format)?;
            let g = read_graph(&file1)?;
            let h = read_graph(&file2)?;
            let same = bmg::enumeration::are_isomorphic(&g, &h);
            let body = match format {
                Format::Json => json!({ "isomorphic": same }).to_string(),
                _ => if same { "isomorphic" } else { "not isomorphic" }.to_string(),
            };
            Ok(Output::new("iso", body, ext_of(format)).with_code(u8::from(!same)))
        }
        Cmd::ExportDot { file } => {
            let g = read_graph(&file)?;
            Ok(Output::new("export-dot", to_dot(&g), "dot"))
        }
    }
}

fn ext_of(format: Format) -> &'static str {
    match format {
        Format::Json => "json",
        Format::Text => "txt",
        Format::Dot => "dot",
    }
}

fn construct_from_spec(spec: &str) -> Result<ColoredDigraph, CliError> {
    let text = if let Some(path) = spec.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?
    } else {
        spec.to_string()
    };
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("construct spec is not JSON: {e}")))?;
    let obj = v
        .as_object()
        .filter(|o| o.len() == 1)
        .ok_or_else(|| CliError::Usage("construct spec must be an object with one key".into()))?;
    let (kind, body) = obj.iter().next().expect("one key");
    let domain = |e: &dyn std::fmt::Display| CliError::Domain(e.to_string());
    let usage = |msg: &str| CliError::Usage(format!("{kind} spec: {msg}"));
    match kind.as_str() {
        "elementary" => {
            let blocks: Vec<ElementaryBlock> = body
                .as_array()
                .ok_or_else(|| usage("expected an array of blocks"))?
                .iter()
                .map(|b| {
                    let size = b["size"].as_u64().unwrap_or(0) as u8;
                    let flip = b["flip"].as_bool().unwrap_or(false);
                    ElementaryBlock { size, flip }
                })
                .collect();
            elementary_graph(&blocks).map_err(|e| domain(&e))
        }
        "family" => {
            let sizes: Vec<(usize, usize)> = body
                .as_array()
                .ok_or_else(|| usage("expected an array of [left, right] pairs"))?
                .iter()
                .map(|p| {
                    let a = p[0].as_u64().unwrap_or(0) as usize;
                    let b = p[1].as_u64().unwrap_or(0) as usize;
                    (a, b)
                })
                .collect();
            family_graph(&FamilySpec(sizes)).map_err(|e| domain(&e))
        }
        "parity" => {
            let members: Vec<u64> = body
                .as_array()
                .ok_or_else(|| usage("expected an array of naturals"))?
                .iter()
                .filter_map(Value::as_u64)
                .collect();
            parity_graph(&members).map_err(|e| domain(&e))
        }
        "oddeven" => {
            let evens: Vec<u64> = body["evens"]
                .as_array()
                .ok_or_else(|| usage("expected evens array"))?
                .iter()
                .filter_map(Value::as_u64)
                .collect();
            let odds: Vec<u64> = body["odds"]
                .as_array()
                .ok_or_else(|| usage("expected odds array"))?
                .iter()
                .filter_map(Value::as_u64)
                .collect();
            odd_even_graph(&evens, &odds).map_err(|e| domain(&e))
        }
        "join" => {
            let docs = body["documents"]
                .as_array()
                .ok_or_else(|| usage("expected a documents array"))?;
            let parts: Vec<ColoredDigraph> = docs
                .iter()
                .map(|d| {
                    d.as_str()
                        .ok_or_else(|| usage("documents must be strings"))
                        .and_then(|s| {
                            ColoredDigraph::from_document(s)
                                .map_err(|e| CliError::Usage(e.to_string()))
                        })
                })
                .collect::<Result<_, _>>()?;
            match body.get("from") {
                None => join_disjoint(&parts).map_err(|e| domain(&e)),
                Some(from) => {
                    if parts.len() != 1 {
                        return Err(usage("joining from named vertices takes one document"));
                    }
                    let set: VertexSet = from
                        .as_array()
                        .ok_or_else(|| usage("from must be an array of vertices"))?
                        .iter()
                        .filter_map(Value::as_u64)
                        .map(|v| v as Vertex)
                        .collect();
                    join_via_minimal(&parts[0], set).map_err(|e| domain(&e))
                }
            }
        }
        "bitournament" => {
            let a = body["a"].as_u64().unwrap_or(0) as usize;
            let b = body["b"].as_u64().unwrap_or(0) as usize;
            if a == 0 || b == 0 {
                return Err(usage("needs positive sides a and b"));
            }
            match (body.get("mask"), body.get("seed")) {
                (Some(mask), None) => {
                    let m = mask.as_u64().ok_or_else(|| usage("mask must be a natural"))?;
                    Ok(bitournament_from_mask(a, b, m))
                }
                (None, Some(seed)) => {
                    let s = seed.as_u64().ok_or_else(|| usage("seed must be a natural"))?;
                    Ok(random_bitournament(a, b, s))
                }
                _ => Err(usage("needs exactly one of mask or seed")),
            }
        }
        other => Err(CliError::Usage(format!(
            "unknown construct kind {other:?}, use elementary|family|parity|oddeven|join|bitournament"
        ))),
    }
}
