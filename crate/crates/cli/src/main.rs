//! `cgraph`: build groups, draw their commuting and centralizer graphs, and
//! run the verifier suite.

mod source;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use cgraph::builders::{
    centralizer_graph, centralizer_graph_class2, commuting_graph, star_graph, star_graph_class2, GraphKind,
    LabeledGroupGraph, QuotientModel,
};
use cgraph::constructions::BuiltGroup;
use cgraph::fp::DEFAULT_ENUMERATION_LIMIT;
use cgraph::graph::components;
use cgraph::group::{format_cayley, load_cayley_table, GroupTable};
use cgraph::verifier::{run_suite, Corpus, CorpusEntry, EntrySource};

use source::Source;

#[derive(Parser, Debug)]
#[command(name = "cgraph", version, about = "Commuting and centralizer graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Commuting,
    Star,
    Centralizer,
}

impl From<Kind> for GraphKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Commuting => GraphKind::Commuting,
            Kind::Star => GraphKind::Star,
            Kind::Centralizer => GraphKind::Centralizer,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
    Cayley,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group and write its Cayley table
    Build {
        #[command(flatten)]
        source: Source,
        /// Output file, `-` for stdout
        #[arg(long, default_value = "-")]
        out: String,
        /// Largest table to expand
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Summarize a graph of one group and optionally write DOT and JSON
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "centralizer")]
        graph: Kind,
        /// DOT output file, `-` for stdout
        #[arg(long)]
        dot: Option<String>,
        /// JSON output file, `-` for stdout
        #[arg(long)]
        json: Option<String>,
        /// Draw closed-twin classes as DOT clusters
        #[arg(long)]
        twins: bool,
        /// Cap on enumerated cosets and expanded tables
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Run verifier checks over a corpus or a single group
    Check {
        #[command(flatten)]
        source: Source,
        /// `all` or comma-separated check ids
        #[arg(long, default_value = "all")]
        suite: String,
        /// `default`, a directory of .cayley files, or a list file
        #[arg(long, default_value = "default")]
        corpus: String,
        /// JSON report file, `-` for stdout
        #[arg(long)]
        json: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Process every .cayley file of a directory in parallel
    Batch {
        /// Directory of .cayley files
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "centralizer")]
        graph: Kind,
        /// Directory for one JSON and one DOT file per input
        #[arg(long)]
        out: Option<PathBuf>,
        /// Summary JSON file, `-` for stdout
        #[arg(long)]
        json: Option<String>,
        /// Worker threads, 0 for one per core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        validate: bool,
        #[arg(long)]
        twins: bool,
    },
    /// Write a graph or table of one group in a single format
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "centralizer")]
        graph: Kind,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file, `-` for stdout
        #[arg(long, default_value = "-")]
        out: String,
        #[arg(long)]
        twins: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
}

/// A failed run: exit status 1 for check failures, 2 for bad input.
struct Failure(u8, String);

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn emit(path: &str, text: &str) -> Result<(), Failure> {
    if path == "-" {
        io::stdout().write_all(text.as_bytes()).map_err(|e| input_error(format!("stdout: {e}")))
    } else {
        fs::write(path, text).map_err(|e| input_error(format!("{path}: {e}")))
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn graph_of(g: &BuiltGroup, kind: GraphKind, limit: usize) -> Result<LabeledGroupGraph, Failure> {
    let r = match (g, kind) {
        (BuiltGroup::Table(t), GraphKind::Commuting) => commuting_graph(t),
        (BuiltGroup::Table(t), GraphKind::Star) => star_graph(t),
        (BuiltGroup::Table(t), GraphKind::Centralizer) => centralizer_graph(t),
        (BuiltGroup::Class2(c), GraphKind::Commuting) => c.expand_to_table(limit).and_then(|t| commuting_graph(&t)),
        (BuiltGroup::Class2(c), GraphKind::Star) => star_graph_class2(c, limit),
        (BuiltGroup::Class2(c), GraphKind::Centralizer) => centralizer_graph_class2(c, limit),
    };
    r.map_err(|e| input_error(format!("{}: {e}", g.name())))
}

fn model_of(g: &BuiltGroup, limit: usize) -> Result<QuotientModel, Failure> {
    let r = match g {
        BuiltGroup::Table(t) => QuotientModel::from_table(t),
        BuiltGroup::Class2(c) => QuotientModel::from_class2(c, limit),
    };
    r.map_err(|e| input_error(format!("{}: {e}", g.name())))
}

/// Group sizes plus the graph with its components.
fn analysis_json(g: &BuiltGroup, model: &QuotientModel, lg: &LabeledGroupGraph) -> Value {
    let mut graph = lg.to_json();
    graph["vertexCount"] = lg.graph.vertex_count().into();
    graph["edgeCount"] = lg.graph.edge_count().into();
    json!({
        "group": g.name(),
        "order": model.order().to_string(),
        "centerOrder": model.center_order().to_string(),
        "index": model.index(),
        "graph": graph,
    })
}

fn summary_text(g: &BuiltGroup, model: &QuotientModel, lg: &LabeledGroupGraph) -> String {
    let reports = components(&lg.graph);
    let isolated = reports.iter().filter(|r| r.len() == 1).count();
    let mut out = format!(
        "{}: order {}, |G:Z| = {}\n{} graph: {} vertices, {} edges, {} components ({} isolated)\n",
        g.name(),
        model.order(),
        model.index(),
        lg.kind,
        lg.graph.vertex_count(),
        lg.graph.edge_count(),
        reports.len(),
        isolated
    );
    for r in reports.iter().filter(|r| r.len() > 1) {
        out.push_str(&format!(
            "  component {}: {} vertices, diameter {}{}\n",
            r.id,
            r.len(),
            r.diameter,
            if r.is_complete { ", complete" } else { "" }
        ));
    }
    out
}

fn build(source: &Source, out: &str, limit: usize) -> Result<(), Failure> {
    let g = source.build().map_err(input_error)?;
    let table = g.to_table(limit).map_err(|e| input_error(format!("{}: {e}", g.name())))?;
    emit(out, &format_cayley(&table))?;
    if out != "-" {
        eprintln!("wrote {} (order {})", out, table.order());
    }
    Ok(())
}

fn analyze(
    source: &Source,
    kind: GraphKind,
    dot: Option<&str>,
    json_out: Option<&str>,
    twins: bool,
    limit: usize,
) -> Result<(), Failure> {
    let g = source.build().map_err(input_error)?;
    let model = model_of(&g, limit)?;
    let lg = graph_of(&g, kind, limit)?;
    if let Some(path) = dot {
        emit(path, &lg.to_dot(twins))?;
    }
    if let Some(path) = json_out {
        emit(path, &pretty(&analysis_json(&g, &model, &lg)))?;
    }
    if dot != Some("-") && json_out != Some("-") {
        print!("{}", summary_text(&g, &model, &lg));
    }
    Ok(())
}

fn export(source: &Source, kind: GraphKind, format: Format, out: &str, twins: bool, limit: usize) -> Result<(), Failure> {
    let g = source.build().map_err(input_error)?;
    let text = match format {
        Format::Cayley => format_cayley(&g.to_table(limit).map_err(|e| input_error(format!("{}: {e}", g.name())))?),
        Format::Dot => graph_of(&g, kind, limit)?.to_dot(twins),
        Format::Json => {
            let model = model_of(&g, limit)?;
            pretty(&analysis_json(&g, &model, &graph_of(&g, kind, limit)?))
        }
    };
    emit(out, &text)
}

fn check(source: &Source, suite: &str, corpus: &str, json_out: Option<&str>, limit: usize) -> Result<(), Failure> {
    let mut c = if source.is_given() {
        let src = match (&source.input, source.family_spec().map_err(input_error)?) {
            (Some(p), _) => EntrySource::File(p.clone()),
            (None, Some(spec)) => EntrySource::Family(spec),
            (None, None) => unreachable!("source is given"),
        };
        let mut c = Corpus::new(source.name.clone().unwrap_or_else(|| "single".into()));
        c.entries.push(CorpusEntry { name: source.name.clone(), source: src });
        c
    } else {
        Corpus::load(corpus).map_err(|e| input_error(e.to_string()))?
    };
    c.size_limit = limit;
    c.validate = source.validate;
    let ids: Vec<&str> = suite.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let report = run_suite(&c, &ids).map_err(|e| input_error(e.to_string()))?;
    if let Some(path) = json_out {
        emit(path, &pretty(&report.to_json()))?;
    }
    let s = report.summary();
    let mut text = String::new();
    for r in report.failures() {
        text.push_str(&format!("FAIL {} {}: {}\n", r.check_id, r.group, r.witness));
    }
    text.push_str(&format!(
        "{} groups, {} checks: pass {}, fail {}, vacuous {}, exploratory {}\n",
        report.corpus.len(),
        report.checks.len(),
        s.pass,
        s.fail,
        s.vacuous,
        s.exploratory
    ));
    if json_out == Some("-") {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    if s.fail > 0 {
        return Err(Failure(1, format!("{} check(s) failed", s.fail)));
    }
    Ok(())
}

fn batch_one(path: &Path, kind: GraphKind, validate: bool, out: Option<&Path>, twins: bool) -> Result<Value, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let table: GroupTable = load_cayley_table(&text, validate).map_err(|e| e.to_string())?.with_name(name.clone());
    let g = BuiltGroup::Table(table);
    let model = model_of(&g, usize::MAX).map_err(|f| f.1)?;
    let lg = graph_of(&g, kind, usize::MAX).map_err(|f| f.1)?;
    let analysis = analysis_json(&g, &model, &lg);
    if let Some(dir) = out {
        let write = |ext: &str, body: &str| {
            let p = dir.join(format!("{name}.{ext}"));
            fs::write(&p, body).map_err(|e| format!("{}: {e}", p.display()))
        };
        write("json", &pretty(&analysis))?;
        write("dot", &lg.to_dot(twins))?;
    }
    let comps: Vec<Value> = components(&lg.graph).iter().map(|r| json!({"size": r.len(), "diameter": r.diameter})).collect();
    Ok(json!({
        "group": name,
        "order": analysis["order"],
        "index": analysis["index"],
        "vertices": lg.graph.vertex_count(),
        "edges": lg.graph.edge_count(),
        "components": comps,
    }))
}

fn batch(
    input: &Path,
    kind: GraphKind,
    out: Option<&Path>,
    json_out: Option<&str>,
    jobs: usize,
    validate: bool,
    twins: bool,
) -> Result<(), Failure> {
    let mut files: Vec<PathBuf> = fs::read_dir(input)
        .map_err(|e| input_error(format!("{}: {e}", input.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "cayley"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(input_error(format!("{}: no .cayley files", input.display())));
    }
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| input_error(format!("{}: {e}", dir.display())))?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| input_error(e.to_string()))?;
    let results: Vec<Value> = pool.install(|| {
        files
            .par_iter()
            .map(|p| {
                let file = p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                match batch_one(p, kind, validate, out, twins) {
                    Ok(mut v) => {
                        v["file"] = file.into();
                        v
                    }
                    Err(e) => json!({ "file": file, "error": e }),
                }
            })
            .collect()
    });
    let errors = results.iter().filter(|v| v.get("error").is_some()).count();
    let report = json!({ "graph": kind.name(), "inputs": results, "errors": errors });
    if let Some(path) = json_out {
        emit(path, &pretty(&report))?;
    }
    let mut text = String::new();
    for v in &results {
        match v.get("error") {
            Some(e) => text.push_str(&format!("{}: error: {}\n", v["file"].as_str().unwrap_or(""), e.as_str().unwrap_or(""))),
            None => text.push_str(&format!(
                "{}: order {}, {} vertices, {} edges, {} components\n",
                v["file"].as_str().unwrap_or(""),
                v["order"].as_str().unwrap_or(""),
                v["vertices"],
                v["edges"],
                v["components"].as_array().map_or(0, Vec::len)
            )),
        }
    }
    if json_out == Some("-") {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    if errors > 0 {
        return Err(input_error(format!("{errors} input(s) could not be processed")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { source, out, limit } => build(&source, &out, limit),
        Command::Analyze { source, graph, dot, json, twins, limit } => {
            analyze(&source, graph.into(), dot.as_deref(), json.as_deref(), twins, limit)
        }
        Command::Check { source, suite, corpus, json, limit } => check(&source, &suite, &corpus, json.as_deref(), limit),
        Command::Batch { input, graph, out, json, jobs, validate, twins } => {
            batch(&input, graph.into(), out.as_deref(), json.as_deref(), jobs, validate, twins)
        }
        Command::Export { source, graph, format, out, twins, limit } => {
            export(&source, graph.into(), format, &out, twins, limit)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
