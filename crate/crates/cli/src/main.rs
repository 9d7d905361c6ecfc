//! `truncpath` command line: components, hierarchies, strong tilts and
//! representation types of truncated path algebras.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use truncpath::components::{
    classify_components, hierarchy, local_components, ComponentConfig, DecisionMode, Hierarchy,
};
use truncpath::modrep::RepresentationJson;
use truncpath::reptype::{classify, classify_truncated, RepType, RuleOutcome, TypeVerdict};
use truncpath::ssq::realizable_sequences;
use truncpath::tilting::{
    accumulation_estimate, loewy_ratio_sequence, strong_tilting_module, tilt_presentation,
    tilt_report, BasicAlgebra,
};
use truncpath::{Error, Field, FieldSpec, PrimeField, Quiver, Rationals, Representation};

const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Longest period tried by the accumulation estimate.
const MAX_PERIOD: usize = 12;
const DEFAULT_PRIME: u64 = 101;

#[derive(Parser)]
#[command(
    name = "truncpath",
    version,
    about = "Truncated path algebras: components, strong tilts, representation type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible components of rep_d(Λ_L).
    Components(Opts),
    /// Components for a range of L and the containments between levels.
    Hierarchy(Opts),
    /// Strong tilting module, tilted algebra and Loewy lengths.
    Tilt(Opts),
    /// Representation type of Λ_L, and of its tilt with --tilt.
    Reptype(Opts),
    /// Realizable semisimple sequences of dimension vector d.
    Realizable(Opts),
    /// Layered graph of a module.
    Graph(Opts),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Mode {
    /// Rank test on incidence varieties.
    Rank,
    /// Filtration search on generic modules over the prime field.
    Exhaustive,
}

#[derive(Args, Clone, Debug, Serialize)]
struct Opts {
    /// Quiver file (JSON: vertices, arrows with id/from/to).
    #[arg(long)]
    quiver: PathBuf,
    /// Truncation length.
    #[arg(long = "L", conflicts_with = "l_range")]
    #[serde(rename = "L")]
    l: Option<usize>,
    /// Range of truncation lengths, `A..B` inclusive.
    #[arg(long = "L-range")]
    #[serde(rename = "L_range")]
    l_range: Option<String>,
    /// Dimension vector, comma separated.
    #[arg(long, value_delimiter = ',')]
    dim: Option<Vec<usize>>,
    /// `rational` or `pN` for a prime N.
    #[arg(long, default_value = "rational")]
    field: String,
    /// How containments are decided. Exhaustive runs over --field when it is
    /// prime, else over F_101.
    #[arg(long, value_enum, default_value = "rank")]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independent trials per containment question.
    #[arg(long, default_value_t = 3)]
    samples: usize,
    /// Use the closed form for one vertex with several loops.
    #[arg(long)]
    local_formula: bool,
    /// Ratio table for L = 2..=LMAX.
    #[arg(long, value_name = "LMAX")]
    ratios: Option<usize>,
    /// Also classify the strong tilt.
    #[arg(long)]
    tilt: bool,
    /// Module file for `graph`.
    #[arg(long)]
    module: Option<PathBuf>,
    /// Write JSON (and DOT) here and print a table instead.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Sampler(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::Unsupported(_) => Failure::Input(e.to_string()),
            Error::SamplerExhausted(_) => Failure::Sampler(e.to_string()),
            Error::Verification(_) => Failure::Verification(e.to_string()),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Sampler(_) => 3,
            Failure::Verification(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Sampler(m) | Failure::Verification(m) => m,
        }
    }
}

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

/// A finished command: JSON report, extra files for `--out`, and the
/// table printed with `--out`.
struct Output {
    name: &'static str,
    report: Value,
    files: Vec<(String, String)>,
    table: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    let (out, opts) = match cmd {
        Command::Components(o) => (components(&o)?, o),
        Command::Hierarchy(o) => (hierarchy_cmd(&o)?, o),
        Command::Tilt(o) => (tilt(&o)?, o),
        Command::Reptype(o) => (reptype(&o)?, o),
        Command::Realizable(o) => (realizable(&o)?, o),
        Command::Graph(o) => (graph(&o)?, o),
    };
    let mut report = json!({
        "tool": "truncpath",
        "version": VERSION,
        "command": out.name,
        "config": config_json(&opts)?,
    });
    if let (Value::Object(r), Value::Object(extra)) = (&mut report, out.report) {
        r.extend(extra);
    }
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    match &opts.out {
        None => print!("{text}"),
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| input(format!("{}: {e}", dir.display())))?;
            write(dir, &format!("{}.json", out.name), &text)?;
            for (name, body) in &out.files {
                write(dir, name, body)?;
            }
            print!("{}", out.table);
        }
    }
    Ok(())
}

fn write(dir: &Path, name: &str, body: &str) -> Result<(), Failure> {
    let p = dir.join(name);
    std::fs::write(&p, body).map_err(|e| input(format!("{}: {e}", p.display())))
}

fn config_json(o: &Opts) -> Result<Value, Failure> {
    let mut v = serde_json::to_value(o).expect("options serialize");
    let q = load_quiver(o)?;
    v["quiver"] = json!({ "file": o.quiver.display().to_string(), "content": q.to_json_value() });
    v.as_object_mut().unwrap().remove("out");
    Ok(v)
}

fn load_quiver(o: &Opts) -> Result<Quiver, Failure> {
    let s = std::fs::read_to_string(&o.quiver)
        .map_err(|e| input(format!("{}: {e}", o.quiver.display())))?;
    Ok(Quiver::from_json(&s)?)
}

fn field_spec(o: &Opts) -> Result<FieldSpec, Failure> {
    Ok(o.field.parse::<FieldSpec>()?)
}

fn need_l(o: &Opts) -> Result<usize, Failure> {
    match o.l {
        Some(l) if l >= 1 => Ok(l),
        Some(_) => Err(input("--L must be at least 1")),
        None => Err(input("--L is required")),
    }
}

fn need_dim(o: &Opts, q: &Quiver) -> Result<Vec<usize>, Failure> {
    let d = o.dim.clone().ok_or_else(|| input("--dim is required"))?;
    if d.len() != q.num_vertices() {
        return Err(input(format!(
            "--dim has {} entries, the quiver has {} vertices",
            d.len(),
            q.num_vertices()
        )));
    }
    Ok(d)
}

fn levels(o: &Opts) -> Result<Vec<usize>, Failure> {
    if let Some(r) = &o.l_range {
        let (a, b) = r
            .split_once("..")
            .ok_or_else(|| input(format!("--L-range {r:?} is not of the form A..B")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| input(format!("--L-range {r:?} is not of the form A..B")))
        };
        let (a, b) = (parse(a)?, parse(b)?);
        if a == 0 || b < a {
            return Err(input(format!("--L-range {r:?} is empty")));
        }
        return Ok((a..=b).collect());
    }
    Ok(vec![need_l(o)?])
}

fn component_config(o: &Opts, spec: FieldSpec) -> Result<ComponentConfig, Failure> {
    let mode = match (o.mode, spec) {
        (Mode::Rank, _) => DecisionMode::IncidenceRank,
        (Mode::Exhaustive, FieldSpec::Prime { p }) => DecisionMode::Exhaustive { p },
        (Mode::Exhaustive, FieldSpec::Rationals) => DecisionMode::Exhaustive { p: DEFAULT_PRIME },
    };
    if o.samples == 0 {
        return Err(input("--samples must be positive"));
    }
    Ok(ComponentConfig {
        seed: o.seed,
        trials: o.samples,
        mode,
        ..ComponentConfig::default()
    })
}

fn components(o: &Opts) -> Result<Output, Failure> {
    let q = Arc::new(load_quiver(o)?);
    let l = need_l(o)?;
    let d = need_dim(o, &q)?;
    if o.local_formula {
        let r = q.arrows().len();
        if q.num_vertices() != 1 || r < 2 {
            return Err(input(
                "--local-formula needs one vertex with at least two loops",
            ));
        }
        let seqs = local_components(r, d[0], l)?;
        let mut table = format!("closed form, r = {r}, d = {}, L = {l}\n", d[0]);
        for s in &seqs {
            let _ = writeln!(table, "  {s}");
        }
        return Ok(Output {
            name: "components",
            report: json!({ "closed_form": true, "components": seqs }),
            files: vec![],
            table,
        });
    }
    let spec = field_spec(o)?;
    let cfg = component_config(o, spec)?;
    let reports = match spec {
        FieldSpec::Rationals => classify_components(&q, l, &d, &Rationals::default(), &cfg)?,
        FieldSpec::Prime { p } => classify_components(&q, l, &d, &PrimeField::new(p)?, &cfg)?,
    };
    let found = reports.iter().filter(|r| r.is_component).count();
    let mut table = format!("{found} components among {} candidates\n", reports.len());
    let _ = writeln!(table, "{:<40} evidence", "generic radical layering");
    for r in reports.iter().filter(|r| r.is_component) {
        let ev = serde_json::to_value(&r.evidence).unwrap();
        let _ = writeln!(
            table,
            "{:<40} {}",
            r.sequence.to_string(),
            ev["kind"].as_str().unwrap_or("")
        );
    }
    Ok(Output {
        name: "components",
        report: json!({ "closed_form": false, "components": reports }),
        files: vec![],
        table,
    })
}

fn hierarchy_cmd(o: &Opts) -> Result<Output, Failure> {
    let q = Arc::new(load_quiver(o)?);
    let d = need_dim(o, &q)?;
    let ls = levels(o)?;
    let spec = field_spec(o)?;
    let cfg = component_config(o, spec)?;
    let h = match spec {
        FieldSpec::Rationals => hierarchy(&q, &d, &ls, &Rationals::default(), &cfg)?,
        FieldSpec::Prime { p } => hierarchy(&q, &d, &ls, &PrimeField::new(p)?, &cfg)?,
    };
    let mut table = String::new();
    for lev in &h.levels {
        let _ = writeln!(table, "L = {}: {} components", lev.l, lev.components.len());
        for (k, s) in lev.components.iter().enumerate() {
            let _ = writeln!(table, "  [{k}] {s}");
        }
    }
    for e in &h.edges {
        let _ = writeln!(
            table,
            "L={} [{}] -> L={} [{}]: {}",
            e.from.0,
            e.from.1,
            e.to.0,
            e.to.1,
            e.verdict.tag()
        );
    }
    Ok(Output {
        name: "hierarchy",
        report: json!({ "hierarchy": h }),
        files: vec![("hierarchy.dot".into(), hierarchy_dot(&h))],
        table,
    })
}

fn hierarchy_dot(h: &Hierarchy) -> String {
    let mut s = String::from("digraph hierarchy {\n  rankdir=BT;\n");
    for lev in &h.levels {
        for (k, c) in lev.components.iter().enumerate() {
            let _ = writeln!(s, "  \"L{}_{k}\" [label=\"{c}\"];", lev.l);
        }
    }
    for ((la, a), (lb, b)) in h.containments() {
        let _ = writeln!(s, "  \"L{la}_{a}\" -> \"L{lb}_{b}\";");
    }
    s.push_str("}\n");
    s
}

fn rational_only(o: &Opts) -> Result<(), Failure> {
    match field_spec(o)? {
        FieldSpec::Rationals => Ok(()),
        FieldSpec::Prime { .. } => Err(input(
            "tilted algebras are computed over the rationals only",
        )),
    }
}

fn tilt(o: &Opts) -> Result<Output, Failure> {
    rational_only(o)?;
    let q = Arc::new(load_quiver(o)?);
    let l = need_l(o)?;
    let r = tilt_report(q.clone(), l)?;
    let mut table = format!(
        "L = {l}: LL(Λ_L) = {}, LL(Λ̃_L) = {}, per vertex {:?}\n",
        r.loewy_length, r.tilted_loewy_length, r.vertex_loewy_lengths
    );
    let mut files = Vec::new();
    for s in &r.summands {
        let _ = writeln!(
            table,
            "  T{} {} tree={}",
            s.vertex, s.radical_layering, s.tree
        );
        files.push((format!("T{}.dot", s.vertex), s.dot.clone()));
    }
    let mut report = json!({ "tilt": r });
    if let Some(lmax) = o.ratios {
        if lmax < 2 {
            return Err(input("--ratios needs LMAX >= 2"));
        }
        let entries = loewy_ratio_sequence(&q, 2, lmax)?;
        let acc = accumulation_estimate(&entries, MAX_PERIOD);
        let _ = writeln!(table, "ratios:");
        for e in &entries {
            let _ = writeln!(
                table,
                "  L={:<3} {}/{} = {}",
                e.l, e.tilted_loewy_length, e.loewy_length, e.ratio
            );
        }
        match &acc {
            Some(a) => {
                let pts: Vec<String> = a.points.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(
                    table,
                    "accumulation estimate {{{}}} (period {}, from L={})",
                    pts.join(", "),
                    a.period,
                    a.start
                );
            }
            None => {
                let _ = writeln!(table, "no periodic pattern found up to period {MAX_PERIOD}");
            }
        }
        report["ratios"] = serde_json::to_value(&entries).unwrap();
        report["accumulation"] = serde_json::to_value(&acc).unwrap();
    }
    Ok(Output {
        name: "tilt",
        report,
        files,
        table,
    })
}

fn tilted_verdict(q: Arc<Quiver>, l: usize) -> Result<TypeVerdict, Failure> {
    let t = strong_tilting_module(Rationals::default(), q, l)?;
    let e = BasicAlgebra::new(t.summands)?;
    let rad = e.radical()?;
    match tilt_presentation(&e, &rad) {
        Ok(p) => Ok(classify(&p)),
        Err(Error::Unsupported(msg)) => Ok(TypeVerdict {
            verdict: RepType::Unknown,
            evidence: vec![RuleOutcome {
                rule: "presentation".into(),
                citation: "quiver and relations of the tilt".into(),
                outcome: msg,
            }],
        }),
        Err(e) => Err(e.into()),
    }
}

fn reptype(o: &Opts) -> Result<Output, Failure> {
    let q = load_quiver(o)?;
    let l = need_l(o)?;
    let base = classify_truncated(&q, l);
    let mut table = format!("Λ_{l}: {}\n", base.verdict);
    let mut report = json!({ "algebra": base });
    if o.tilt {
        rational_only(o)?;
        let v = tilted_verdict(Arc::new(q), l)?;
        let _ = writeln!(table, "Λ̃_{l}: {}", v.verdict);
        for e in &v.evidence {
            let _ = writeln!(table, "  {}: {}", e.rule, e.outcome);
        }
        report["tilted"] = serde_json::to_value(&v).unwrap();
    }
    Ok(Output {
        name: "reptype",
        report,
        files: vec![],
        table,
    })
}

fn realizable(o: &Opts) -> Result<Output, Failure> {
    let q = load_quiver(o)?;
    let l = need_l(o)?;
    let d = need_dim(o, &q)?;
    let seqs = realizable_sequences(&q, &d, l);
    let mut table = format!("{} realizable sequences\n", seqs.len());
    for s in &seqs {
        let _ = writeln!(table, "  {s}");
    }
    Ok(Output {
        name: "realizable",
        report: json!({ "count": seqs.len(), "sequences": seqs }),
        files: vec![],
        table,
    })
}

fn graph(o: &Opts) -> Result<Output, Failure> {
    let q = Arc::new(load_quiver(o)?);
    let path = o
        .module
        .as_ref()
        .ok_or_else(|| input("--module is required"))?;
    let s = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let j: RepresentationJson =
        serde_json::from_str(&s).map_err(|e| input(format!("malformed module JSON: {e}")))?;
    match j.field {
        FieldSpec::Rationals => graph_of(Representation::from_json(Rationals::default(), q, &j)?),
        FieldSpec::Prime { p } => graph_of(Representation::from_json(PrimeField::new(p)?, q, &j)?),
    }
}

fn graph_of<F: Field>(m: Representation<F>) -> Result<Output, Failure> {
    let g = m.layered_graph();
    let dot = g.to_dot("module");
    let table = format!(
        "radical layering {}\nsocle layering {}\nexact graph: {}, tree: {}\n",
        m.radical_layering(),
        m.socle_layering(),
        g.exact,
        g.is_tree()
    );
    Ok(Output {
        name: "graph",
        report: json!({
            "radical_layering": m.radical_layering(),
            "socle_layering": m.socle_layering(),
            "tree": g.is_tree(),
            "graph": g,
            "dot": dot,
        }),
        files: vec![("graph.dot".into(), dot)],
        table,
    })
}
