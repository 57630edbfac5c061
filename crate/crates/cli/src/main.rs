use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use knotsum::bound::{budget_certificate, check_bound, load_knot_table, BoundReport, KnotTable};
use knotsum::compat::{block_graph, subclass_graph, CompatGraph};
use knotsum::diagram::{parse_gauss_code, parse_pd_code, Diagram};
use knotsum::disk::{
    derived, is_admissible, params, paste_blocks, paste_from_inputs, reconstruct_traced, Bands, BlockVector, ParamVector, PasteInputs, ZeroHandleConfig,
};
use knotsum::fixtures::DiagramLibrary;
use knotsum::handle::build_d_structure;
use knotsum::models::{budget_source, max_crossings, model_catalog, per_crossing_bound, ModelSet};
use knotsum::moves::{is_standard_form, normalize, Direction, FirstSuccessor, MinMeasure, SuccessorPolicy, TauState};

const DEFAULT_SEED: u64 = 0x6b6e_6f74;

#[derive(Parser)]
#[command(name = "knotsum", version, about = "Diagram, disk-vector and crossing-budget computations")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized sampling.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a diagram and print its normalized PD code.
    Parse(DiagramArgs),
    /// List the faces of a diagram.
    Faces(DiagramArgs),
    /// Check the contact condition; exits 1 on violations.
    Validate(DiagramArgs),
    /// Handle structure of a diagram.
    Dstructure(DiagramArgs),
    /// Parameters and derived functions of block vectors.
    Params(ParamsArgs),
    /// Recover a block vector from seven parameters.
    Reconstruct {
        #[arg(long)]
        params: String,
    },
    /// Glue four blocks (or six paste inputs) into a 0-handle configuration.
    Paste(PasteArgs),
    /// Block-type or subclass disjointness graph.
    CompatGraph {
        #[arg(long, value_enum, default_value_t = GraphKind::Block)]
        graph: GraphKind,
    },
    /// Apply measure-decreasing moves to a state of τ-points.
    Normalize(NormalizeArgs),
    /// Model catalog with budgets, or the budget of one crossing's model set.
    Models {
        /// Comma-separated model names at one crossing.
        #[arg(long)]
        set: Option<String>,
    },
    /// Budget certificate for a model assignment on a diagram.
    Budget(BudgetArgs),
    /// Check c > S/16 for a connected sum of table entries.
    Bound(BoundArgs),
}

#[derive(Args, Clone)]
struct DiagramArgs {
    /// File with a PD code (`-` reads standard input).
    #[arg(long, group = "input")]
    pd: Option<PathBuf>,
    /// PD code given inline.
    #[arg(long, group = "input")]
    code: Option<String>,
    /// Signed Gauss code given inline.
    #[arg(long, group = "input")]
    gauss: Option<String>,
    /// Name of a bundled prime, e.g. 5_2.
    #[arg(long, group = "input")]
    knot: Option<String>,
}

#[derive(Args)]
struct ParamsArgs {
    /// `I+:1 II-:2` or nine comma-separated counts.
    #[arg(long, conflicts_with = "sample")]
    vector: Option<String>,
    /// Number of random admissible vectors to draw.
    #[arg(long)]
    sample: Option<usize>,
    /// Largest entry in sampled vectors.
    #[arg(long, default_value_t = 3)]
    max_entry: u32,
}

#[derive(Args)]
struct PasteArgs {
    /// Four block vectors separated by `|`.
    #[arg(long, conflicts_with = "inputs")]
    blocks: Option<String>,
    /// x+,x,x-,y+,y-,t
    #[arg(long)]
    inputs: Option<String>,
    #[arg(long, default_value_t = 0)]
    bands_plus: u32,
    #[arg(long, default_value_t = 0)]
    bands_minus: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Block,
    Subclass,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Policy {
    Min,
    First,
}

#[derive(Args)]
struct NormalizeArgs {
    /// `crossing:rect:type,type;...`, e.g. `0:0:3+,4+;1:2:1-`.
    #[arg(long)]
    state: String,
    #[arg(long, default_value = "up")]
    dir: String,
    #[arg(long, value_enum, default_value_t = Policy::Min)]
    policy: Policy,
    #[command(flatten)]
    diagram: DiagramArgs,
}

#[derive(Args)]
struct BudgetArgs {
    #[command(flatten)]
    diagram: DiagramArgs,
    /// Model set used at every crossing, e.g. `Z2,Z2`.
    #[arg(long)]
    all: Option<String>,
    /// Per-crossing sets `v=M,M;v=M`; overrides `--all`.
    #[arg(long)]
    assign: Option<String>,
}

#[derive(Args)]
struct BoundArgs {
    /// Comma-separated table names.
    #[arg(long, value_delimiter = ',', required = true)]
    components: Vec<String>,
    /// Crossing-number CSV; the bundled table by default.
    #[arg(long)]
    table: Option<PathBuf>,
    #[command(flatten)]
    diagram: DiagramArgs,
}

fn read_source(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// A PD file may hold `#` comments and a leading name before the code.
fn pd_from_file(text: &str) -> Result<Diagram> {
    let body: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| match l.split_once(char::is_whitespace) {
            Some((head, rest)) if !head.starts_with('X') && !head.starts_with("PD") => rest,
            _ => l,
        })
        .collect();
    Ok(parse_pd_code(&body.join(" "))?)
}

impl DiagramArgs {
    fn given(&self) -> bool {
        self.pd.is_some() || self.code.is_some() || self.gauss.is_some() || self.knot.is_some()
    }

    fn load(&self) -> Result<Diagram> {
        if let Some(p) = &self.pd {
            return pd_from_file(&read_source(p)?);
        }
        if let Some(c) = &self.code {
            return Ok(parse_pd_code(c)?);
        }
        if let Some(g) = &self.gauss {
            return Ok(parse_gauss_code(g)?);
        }
        if let Some(k) = &self.knot {
            let lib = DiagramLibrary::bundled()?;
            return lib.get(k).cloned().with_context(|| format!("no bundled diagram named `{k}`"));
        }
        bail!("no diagram given; use --pd, --code, --gauss or --knot")
    }
}

struct Out {
    format: Format,
    cmd: &'static str,
}

impl Out {
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) -> Result<()> {
        match self.format {
            Format::Text => print!("{}", text()),
            Format::Structured => {
                let mut v = value();
                if let Value::Object(m) = &mut v {
                    m.insert("schema".into(), json!(format!("knotsum.{}.v1", self.cmd)));
                }
                println!("{}", serde_json::to_string_pretty(&v)?);
            }
            Format::Dot => bail!("`{}` has no dot output", self.cmd),
        }
        Ok(())
    }
}

fn cmd_name(c: &Cmd) -> &'static str {
    match c {
        Cmd::Parse(_) => "parse",
        Cmd::Faces(_) => "faces",
        Cmd::Validate(_) => "validate",
        Cmd::Dstructure(_) => "dstructure",
        Cmd::Params(_) => "params",
        Cmd::Reconstruct { .. } => "reconstruct",
        Cmd::Paste(_) => "paste",
        Cmd::CompatGraph { .. } => "compat-graph",
        Cmd::Normalize(_) => "normalize",
        Cmd::Models { .. } => "models",
        Cmd::Budget(_) => "budget",
        Cmd::Bound(_) => "bound",
    }
}

fn diagram_json(d: &Diagram) -> Value {
    json!({
        "pd": d.emit_pd_code(),
        "crossings": d.crossing_count(),
        "edges": d.edge_count(),
        "signs": (0..d.crossing_count()).map(|v| format!("{:?}", d.sign(v))).collect::<Vec<_>>(),
        "fingerprint": d.fingerprint(),
    })
}

fn graph_json(g: &CompatGraph) -> Value {
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|((a, b), ps)| json!({"a": a, "b": b, "provenance": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>()}))
        .collect();
    json!({
        "name": g.name,
        "vertices": g.vertices,
        "edges": edges,
        "cliques": g.realizable_cliques.iter().map(|c| json!({"vertices": c.vertices, "source": c.source.to_string()})).collect::<Vec<_>>(),
        "unwitnessed_triangles": g.unwitnessed_triangles(),
    })
}

fn bound_text(r: &BoundReport) -> String {
    let mut s = String::new();
    if !r.components.is_empty() {
        s += &format!("components: {}\n", r.components.join(" # "));
    }
    s += &format!("S = {}\nc = {}\nS/16 = {}\n", r.crossing_sum, r.crossings, r.lower_bound);
    if let Some(f) = r.faces {
        s += &format!("faces = {f}\n");
    }
    if let Some(cert) = &r.certificate {
        for b in &cert.budgets {
            let parts: Vec<String> = b.per_model.iter().map(|(m, c)| format!("{}={c}", m.name())).collect();
            s += &format!("crossing {}: {} allowance={} total={} cap={}\n", b.crossing, parts.join(" "), b.allowance, b.total, b.cap);
        }
        s += &format!("aggregate: {}\n", cert.aggregate);
    }
    s += &format!("verdict: {}\n", if r.verdict { "true" } else { "false" });
    s
}

fn parse_assignment(n: usize, all: Option<&str>, assign: Option<&str>) -> Result<BTreeMap<usize, ModelSet>> {
    let mut m = BTreeMap::new();
    if let Some(a) = all {
        for v in 0..n {
            m.insert(v, ModelSet::parse(v, a)?);
        }
    }
    if let Some(groups) = assign {
        for group in groups.split(';').map(str::trim).filter(|g| !g.is_empty()) {
            let (v, models) = group.split_once('=').with_context(|| format!("bad assignment `{group}`, expected v=M,M"))?;
            let v: usize = v.trim().parse().with_context(|| format!("bad crossing in `{group}`"))?;
            m.insert(v, ModelSet::parse(v, models)?);
        }
    }
    Ok(m)
}

fn run(cli: Cli) -> Result<()> {
    let out = Out { format: cli.format, cmd: cmd_name(&cli.cmd) };
    match cli.cmd {
        Cmd::Parse(a) => {
            let d = a.load()?;
            out.emit(
                || format!("{}\ncrossings={} edges={}\n", d.emit_pd_code(), d.crossing_count(), d.edge_count()),
                || diagram_json(&d),
            )
        }
        Cmd::Faces(a) => {
            let d = a.load()?;
            let faces = d.faces();
            out.emit(
                || {
                    let mut s = format!("{} faces (c + 2 = {})\n", faces.len(), d.crossing_count() + 2);
                    for (i, f) in faces.iter().enumerate() {
                        let cs: Vec<String> = f.corners.iter().map(|(v, j)| format!("{v}.{j}")).collect();
                        let es: Vec<String> = f.edges.iter().map(|e| e.to_string()).collect();
                        s += &format!("F{i} degree={} corners={} edges={}\n", f.degree(), cs.join(","), es.join(","));
                    }
                    s
                },
                || json!({"faces": faces.iter().map(|f| json!({"degree": f.degree(), "corners": f.corners, "edges": f.edges})).collect::<Vec<_>>()}),
            )
        }
        Cmd::Validate(a) => {
            let d = a.load()?;
            let report = d.validate_minimal_adjacency();
            out.emit(
                || {
                    if report.is_empty() {
                        "ok\n".to_string()
                    } else {
                        String::new()
                    }
                },
                || json!({"ok": report.is_empty(), "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>()}),
            )?;
            if !report.is_empty() {
                let lines: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
                bail!("contact condition fails: {}", lines.join("; "));
            }
            Ok(())
        }
        Cmd::Dstructure(a) => {
            let d = a.load()?;
            let s = build_d_structure(&d)?;
            if out.format == Format::Dot {
                print!("{}", s.to_dot());
                return Ok(());
            }
            let counts = s.counts();
            out.emit(
                || {
                    let mut t = format!(
                        "3-handles={} 2-handles={} 1-handles={} 0-handles={}\n",
                        counts.three, counts.two, counts.one, counts.zero
                    );
                    if cli.verbose > 0 {
                        for (a, b) in s.contacts() {
                            t += &format!("{a} -- {b}\n");
                        }
                    }
                    t
                },
                || {
                    json!({
                        "counts": counts,
                        "contacts": s.contacts().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                    })
                },
            )
        }
        Cmd::Params(a) => {
            let vectors: Vec<BlockVector> = match (&a.vector, a.sample) {
                (Some(v), _) => vec![v.parse()?],
                (None, Some(n)) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    let mut vs = Vec::with_capacity(n);
                    while vs.len() < n {
                        let xi = BlockVector::from_array(std::array::from_fn(|_| rng.gen_range(0..=a.max_entry)));
                        if is_admissible(&xi) {
                            vs.push(xi);
                        }
                    }
                    vs
                }
                (None, None) => bail!("give --vector or --sample"),
            };
            let rows = vectors
                .iter()
                .map(|xi| {
                    let p = params(xi);
                    Ok((*xi, p, derived(&p)?))
                })
                .collect::<Result<Vec<_>>>()?;
            out.emit(
                || {
                    rows.iter()
                        .map(|(xi, p, d)| {
                            let d = d.to_array().map(|x| x.to_string()).join(",");
                            format!("{xi}\tparams={p}\tderived={d}\n")
                        })
                        .collect()
                },
                || {
                    json!({
                        "seed": a.sample.map(|_| cli.seed),
                        "rows": rows.iter().map(|(xi, p, d)| json!({"vector": xi.to_string(), "params": p, "derived": d})).collect::<Vec<_>>(),
                    })
                },
            )
        }
        Cmd::Reconstruct { params: text } => {
            let p: ParamVector = text.parse()?;
            let (xi, case) = reconstruct_traced(&p)?;
            out.emit(
                || {
                    if cli.verbose > 0 {
                        format!("{xi}\ncase: {case}\n")
                    } else {
                        format!("{xi}\n")
                    }
                },
                || json!({"params": p, "vector": xi.to_string(), "counts": xi, "case": case}),
            )
        }
        Cmd::Paste(a) => {
            let bands = Bands { plus: a.bands_plus, minus: a.bands_minus };
            let config: ZeroHandleConfig = match (&a.blocks, &a.inputs) {
                (Some(b), _) => {
                    let parts: Vec<BlockVector> = b.split('|').map(str::parse).collect::<Result<_, _>>()?;
                    let arr: [BlockVector; 4] =
                        parts.try_into().map_err(|_| anyhow::anyhow!("--blocks needs four vectors separated by `|`"))?;
                    paste_blocks([&arr[0], &arr[1], &arr[2], &arr[3]], bands)?
                }
                (None, Some(i)) => {
                    let v: Vec<u32> = i
                        .split(',')
                        .map(|x| x.trim().parse::<u32>())
                        .collect::<Result<_, _>>()
                        .context("--inputs takes six nonnegative integers")?;
                    let [x_plus, x, x_minus, y_plus, y_minus, t]: [u32; 6] =
                        v.try_into().map_err(|_| anyhow::anyhow!("--inputs takes six nonnegative integers"))?;
                    paste_from_inputs(PasteInputs { x_plus, x, x_minus, y_plus, y_minus, t }, bands)?
                }
                (None, None) => bail!("give --blocks or --inputs"),
            };
            out.emit(
                || format!("{config}\naxis={}\n", config.axis_total()),
                || {
                    json!({
                        "case": config.case_tag,
                        "counts": config.counts().iter().map(|(c, n)| (c.to_string(), *n)).collect::<BTreeMap<_, _>>(),
                        "axis_total": config.axis_total(),
                    })
                },
            )
        }
        Cmd::CompatGraph { graph } => {
            let g = match graph {
                GraphKind::Block => block_graph()?,
                GraphKind::Subclass => subclass_graph(),
            };
            if out.format == Format::Dot {
                print!("{}", g.to_dot());
                return Ok(());
            }
            out.emit(|| g.report(), || graph_json(g))
        }
        Cmd::Normalize(a) => {
            let dir: Direction = a.dir.parse()?;
            let mut state = TauState::parse(&a.state)?;
            if a.diagram.given() {
                let d = a.diagram.load()?;
                if state.crossings.len() > d.crossing_count() {
                    bail!("state names crossing {} but the diagram has {}", state.crossings.len() - 1, d.crossing_count());
                }
                let mut full = TauState::for_diagram(&d);
                for (v, r, t) in state.points() {
                    full.push(v, r, t);
                }
                state = full;
            }
            let policy: &dyn SuccessorPolicy = match a.policy {
                Policy::Min => &MinMeasure,
                Policy::First => &FirstSuccessor,
            };
            let (end, trace) = normalize(&state, dir, policy);
            let standard = is_standard_form(&end);
            out.emit(
                || {
                    let mut s = String::new();
                    for step in &trace {
                        s += &format!("{step}\n");
                    }
                    s += &format!("final: {end}\nmeasure: {}\nstandard form: {standard}\n", end.measure(dir));
                    s
                },
                || {
                    json!({
                        "direction": dir.to_string(),
                        "trace": trace,
                        "final": end.to_string(),
                        "measure": end.measure(dir),
                        "standard_form": standard,
                    })
                },
            )
        }
        Cmd::Models { set } => match set {
            Some(text) => {
                let ms = ModelSet::parse(0, &text)?;
                let b = per_crossing_bound(&ms)?;
                out.emit(
                    || {
                        let parts: Vec<String> = b.per_model.iter().map(|(m, c)| format!("{}={c}", m.name())).collect();
                        format!("{} allowance={} total={} cap={}\n", parts.join(" "), b.allowance, b.total, b.cap)
                    },
                    || json!({"budget": b}),
                )
            }
            None => {
                let cat = model_catalog();
                out.emit(
                    || {
                        let mut s = String::from("model\tkind\tsheets\tarcs\tbudget\tsource\n");
                        for m in &cat {
                            s += &format!(
                                "{}\t{:?}\t{}\t{}\t{}\t{}\n",
                                m.name.name(),
                                m.kind,
                                m.sheets,
                                m.arcs,
                                max_crossings(m.name),
                                budget_source(m.name)
                            );
                        }
                        s
                    },
                    || {
                        json!({"models": cat.iter().map(|m| json!({
                            "name": m.name.name(),
                            "info": m,
                            "budget": max_crossings(m.name),
                            "source": budget_source(m.name).to_string(),
                        })).collect::<Vec<_>>()})
                    },
                )
            }
        },
        Cmd::Budget(a) => {
            let d = if a.diagram.given() { a.diagram.load()? } else { Diagram::unknot() };
            let assignment = parse_assignment(d.crossing_count(), a.all.as_deref(), a.assign.as_deref())?;
            let r = budget_certificate(&d, &assignment)?;
            out.emit(|| bound_text(&r), || serde_json::to_value(&r).expect("report serializes"))
        }
        Cmd::Bound(a) => {
            let table = match &a.table {
                Some(p) => load_knot_table(&read_source(p)?, &p.display().to_string())?,
                None => KnotTable::bundled()?,
            };
            let lib = DiagramLibrary::bundled()?;
            let given = if a.diagram.given() { Some(a.diagram.load()?) } else { None };
            let r = check_bound(&a.components, &table, given.as_ref(), &lib)?;
            out.emit(|| bound_text(&r), || serde_json::to_value(&r).expect("report serializes"))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
