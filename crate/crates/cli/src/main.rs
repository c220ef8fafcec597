mod render;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homdist::bounds::{
    family_sweep, hastad_report, inapprox_transfer, transfer_guarantee, BaseAlgorithm, Family,
    GuaranteeReport,
};
use homdist::graph::parse_rational;
use homdist::{
    check_metric_axioms, complete, distance, edge_orbits, find_homomorphism, hom_equivalent, mc,
    read_edge_list, s_value, vertex_orbits, Error, ErrorKind, Graph, GraphSpec, Limits, Rational,
    SRoute, SValue, WeightFunction,
};
use serde_json::{json, Value};

fn after_help() -> String {
    format!(
        "Graph grammar: {}\n\nExit codes: 0 success, 2 usage or parse error, 3 resource cap exceeded, 4 property check failed.",
        GraphSpec::GRAMMAR
    )
}

#[derive(Parser)]
#[command(name = "homdist", version, about = "Homomorphism distances and Max H-Col guarantee bounds", after_help = after_help())]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest graph accepted by the symmetry search.
    #[arg(long, global = true, env = "HOMDIST_VERTEX_CAP", default_value_t = Limits::DEFAULT_VERTEX_CAP)]
    vertex_cap: usize,

    /// Largest number of vertex maps enumerated by one computation.
    #[arg(long, global = true, env = "HOMDIST_ENUM_BUDGET", default_value_t = Limits::DEFAULT_ENUMERATION_BUDGET)]
    enum_budget: u64,

    /// Node budget of the homomorphism and automorphism searches.
    #[arg(long, global = true, env = "HOMDIST_SEARCH_BUDGET", default_value_t = Limits::DEFAULT_SEARCH_BUDGET)]
    search_budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Size, degrees, symmetry and edge orbits of a graph.
    Info { graph: GraphSpec },
    /// Searches for a homomorphism G -> H.
    Hom { g: GraphSpec, h: GraphSpec },
    /// s(M, N) with its certificate.
    S { m: GraphSpec, n: GraphSpec },
    /// d(M, N) = 1 - s(M, N) s(N, M).
    D { m: GraphSpec, n: GraphSpec },
    /// Optimum of Max H-Col on a weighted edge-list instance.
    Mc {
        h: GraphSpec,
        /// Edge-list file, optionally prefixed with @.
        instance: String,
    },
    /// Approximation guarantees for Max H-Col.
    Bounds {
        h: GraphSpec,
        /// Graph whose algorithm is transferred to H.
        #[arg(long)]
        via: Option<GraphSpec>,
        /// Transfer the Goemans-Williamson guarantee.
        #[arg(long, conflicts_with = "fj")]
        gw: bool,
        /// Transfer the Frieze-Jerrum guarantee for k colours.
        #[arg(long, value_name = "K")]
        fj: Option<usize>,
        /// Report the Max 2-CSP bound of H.
        #[arg(long)]
        hastad: bool,
        /// Constant of the Max 2-CSP bound.
        #[arg(long, default_value = "0")]
        c: String,
        /// Report the transfer and the Max 2-CSP bound side by side.
        #[arg(long)]
        compare: bool,
        /// Hardness threshold of Max M-Col to transfer to H (conditional).
        #[arg(long)]
        beta: Option<String>,
    },
    /// Frieze-Jerrum transfer against the Max 2-CSP bound over a family.
    Sweep {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Inclusive range a..b.
        range: String,
        #[arg(long, default_value = "0")]
        c: String,
        /// Part count for turan-dense rows; all r < n when omitted.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Checks the metric axioms over a pool of graphs.
    CheckMetric {
        #[arg(required = true)]
        pool: Vec<GraphSpec>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cycles,
    Wheels,
    Complete,
    #[value(alias = "turan_dense")]
    TuranDense,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Usage(String),
    Property(Value),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

enum Output {
    Document(Value),
    Table {
        doc: Value,
        header: Vec<&'static str>,
        rows: Vec<Vec<String>>,
    },
}

/// Exact rational from `p/q`, an integer, or a finite decimal.
fn parse_exact(text: &str) -> Option<Rational> {
    if let Some(r) = parse_rational(text) {
        return Some(r);
    }
    let (int, frac) = text.split_once('.')?;
    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let whole = parse_rational(if int.is_empty() { "0" } else { int })?;
    let scale = parse_rational(&format!("1{}", "0".repeat(frac.len())))?;
    Some(whole + parse_rational(frac)? / scale)
}

fn nonnegative(name: &str, text: &str) -> Outcome<Rational> {
    match parse_exact(text) {
        Some(x) if x >= Rational::from_integer(0.into()) => Ok(x),
        _ => Err(Failure::Usage(format!("{name} must be a nonnegative rational, got {text:?}"))),
    }
}

fn build(spec: &GraphSpec) -> Outcome<Graph> {
    Ok(spec.build()?)
}

fn s_certificate(s: &SValue<Rational>) -> Value {
    match &s.route {
        SRoute::Homomorphism(map) => json!({
            "route": "homomorphism",
            "homomorphism": render::map(map),
        }),
        SRoute::EdgeTransitive { orbits, witness } => json!({
            "route": "edge-transitive",
            "orbit_sizes": orbits.sizes(),
            "weights": render::rationals(&s.certificate_weights().unwrap_or_default()),
            "tight_vectors": s.tight_vectors(),
            "witness": render::map(witness),
        }),
        SRoute::OrbitProgram {
            orbits,
            program,
            solution,
        } => json!({
            "route": "orbit-program",
            "orbit_sizes": orbits.sizes(),
            "solution_vectors": program.vectors().iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
            "weights": render::rationals(&solution.weights),
            "tight_vectors": s.tight_vectors(),
            "program": program.to_string().lines().collect::<Vec<_>>(),
        }),
    }
}

fn info(spec: &GraphSpec, limits: &Limits) -> Outcome<Value> {
    let g = build(spec)?;
    let (orbits, transitive) = if g.is_edgeless() {
        (Vec::new(), Value::Bool(false))
    } else {
        let orbits = edge_orbits(&g, limits)?;
        let transitive = orbits.len() == 1;
        let listed: Vec<Vec<(usize, usize)>> = orbits
            .orbits()
            .iter()
            .map(|o| o.iter().map(|&e| g.edges()[e]).collect())
            .collect();
        (listed, Value::Bool(transitive))
    };
    let vertex_orbit_count = if g.vertex_count() == 0 {
        0
    } else {
        vertex_orbits(&g, limits)?.len()
    };
    Ok(json!({
        "graph": spec.to_string(),
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "degree_sequence": g.degree_sequence(),
        "girth": g.girth(),
        "edge_transitive": transitive,
        "vertex_transitive": vertex_orbit_count == 1,
        "orbit_sizes": orbits.iter().map(Vec::len).collect::<Vec<_>>(),
        "orbits": orbits,
    }))
}

fn hom(g_spec: &GraphSpec, h_spec: &GraphSpec, limits: &Limits) -> Outcome<Value> {
    let (g, h) = (build(g_spec)?, build(h_spec)?);
    let found = find_homomorphism(&g, &h, limits)?;
    let back = find_homomorphism(&h, &g, limits)?;
    Ok(json!({
        "g": g_spec.to_string(),
        "h": h_spec.to_string(),
        "exists": found.is_some(),
        "witness": found.as_ref().map(render::map),
        "reverse_exists": back.is_some(),
        "equivalent": found.is_some() && back.is_some(),
    }))
}

fn s_cmd(m_spec: &GraphSpec, n_spec: &GraphSpec, limits: &Limits) -> Outcome<Value> {
    let (m, n) = (build(m_spec)?, build(n_spec)?);
    let s = s_value::<Rational>(&m, &n, limits)?;
    Ok(json!({
        "m": m_spec.to_string(),
        "n": n_spec.to_string(),
        "s": render::rational(&s.value),
        "certificate": s_certificate(&s),
    }))
}

fn d_cmd(m_spec: &GraphSpec, n_spec: &GraphSpec, limits: &Limits) -> Outcome<Value> {
    let (m, n) = (build(m_spec)?, build(n_spec)?);
    let r = distance::<Rational>(&m, &n, limits)?;
    Ok(json!({
        "m": m_spec.to_string(),
        "n": n_spec.to_string(),
        "d": render::rational(&r.d),
        "s_mn": render::rational(&r.s_mn.value),
        "s_nm": render::rational(&r.s_nm.value),
        "hom_m_to_n": r.hom_m_to_n,
        "hom_n_to_m": r.hom_n_to_m,
        "certificates": {
            "s_mn": s_certificate(&r.s_mn),
            "s_nm": s_certificate(&r.s_nm),
        },
    }))
}

fn mc_cmd(h_spec: &GraphSpec, instance: &str, limits: &Limits) -> Outcome<Value> {
    let h = build(h_spec)?;
    let path = PathBuf::from(instance.strip_prefix('@').unwrap_or(instance));
    let doc = read_edge_list(&path)?;
    let w = WeightFunction::<Rational>::from_document(&doc)?;
    let best = mc(&h, &w, limits)?;
    let total = w.total();
    Ok(json!({
        "h": h_spec.to_string(),
        "instance": path.display().to_string(),
        "n": doc.graph.vertex_count(),
        "m": doc.graph.edge_count(),
        "total_weight": render::rational(&total),
        "value": render::rational(&best.value),
        "ratio": render::rational(&(best.value.clone() / total)),
        "witness": render::map(&best.witness),
    }))
}

fn guarantee(report: &GuaranteeReport) -> Value {
    json!({
        "algorithm": report.algorithm.to_string(),
        "alpha": render::estimate(&report.alpha),
        "alpha_computed": report.computed_alpha.map(render::decimal),
        "s_mn": report.s_mn.as_ref().map(render::rational),
        "s_nm": report.s_nm.as_ref().map(render::rational),
        "factor": report.factor.as_ref().map(render::rational),
        "lower_bound": render::decimal(report.lower_bound),
        "lower_bound_exact": report.lower_bound_exact.as_ref().map(render::rational),
        "upper_bound": report.upper_bound.map(render::decimal),
        "provenance": report.provenance.as_str(),
        "derivation": report.derivation,
    })
}

/// Smallest `k ≥ 2` with `M ≡ K_k`.
fn clique_class(m: &Graph, limits: &Limits) -> Outcome<Option<usize>> {
    for k in 2..=m.vertex_count().max(2) {
        if hom_equivalent(m, &complete(k), limits)?.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn bounds_cmd(
    h_spec: &GraphSpec,
    via: Option<&GraphSpec>,
    gw: bool,
    fj: Option<usize>,
    hastad: bool,
    c: &str,
    compare: bool,
    beta: Option<&str>,
    limits: &Limits,
) -> Outcome<Value> {
    let h = build(h_spec)?;
    let c = nonnegative("--c", c)?;
    let mut doc = json!({ "h": h_spec.to_string(), "c": render::rational(&c) });
    let want_transfer = gw || fj.is_some() || via.is_some() || compare || !hastad;
    let via_graph = match via {
        Some(spec) => Some((spec.to_string(), build(spec)?)),
        None => None,
    };
    if want_transfer || beta.is_some() {
        let (via_name, m) = match (&via_graph, fj) {
            (Some((name, g)), _) => (name.clone(), g.clone()),
            (None, Some(k)) => (format!("K{k}"), complete(k)),
            (None, None) => ("K2".to_string(), complete(2)),
        };
        let base = match (gw, fj) {
            (true, _) => BaseAlgorithm::Gw,
            (false, Some(k)) => BaseAlgorithm::Fj(k),
            (false, None) => match clique_class(&m, limits)? {
                Some(2) => BaseAlgorithm::Gw,
                Some(k) => BaseAlgorithm::Fj(k),
                None => {
                    return Err(Failure::Usage(format!(
                        "{via_name} is not homomorphically equivalent to a complete graph; pass --gw or --fj"
                    )))
                }
            },
        };
        doc["via"] = json!(via_name);
        if want_transfer {
            doc["transfer"] = guarantee(&transfer_guarantee(&base, &m, &h, limits)?);
        }
        if let Some(text) = beta {
            let b = nonnegative("--beta", text)?;
            let r = inapprox_transfer(&b, &m, &h, limits)?;
            doc["inapproximability"] = json!({
                "beta": render::rational(&r.beta),
                "factor": render::rational(&r.factor),
                "raw_bound": render::rational(&r.raw_bound),
                "upper_bound": render::rational(&r.bound),
                "capped": r.capped,
                "conditional": r.conditional,
            });
        }
    }
    if hastad || compare {
        doc["hastad"] = guarantee(&hastad_report(&h, &c)?);
    }
    Ok(doc)
}

fn parse_range(text: &str) -> Outcome<(usize, usize)> {
    let bad = || Failure::Usage(format!("range must look like a..b, got {text:?}"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

fn sweep_cmd(family: FamilyArg, range: &str, c: &str, r: Option<usize>) -> Outcome<Output> {
    let (a, b) = parse_range(range)?;
    let c = nonnegative("--c", c)?;
    let family = match family {
        FamilyArg::Cycles => Family::Cycles,
        FamilyArg::Wheels => Family::Wheels,
        FamilyArg::Complete => Family::Complete,
        FamilyArg::TuranDense => Family::TuranDense { r },
    };
    let rows = family_sweep(family, a..=b, &c)?;
    let doc = json!({
        "family": family.name(),
        "range": [a, b],
        "c": render::rational(&c),
        "rows": render::sweep_rows(&rows),
    });
    Ok(Output::Table {
        doc,
        header: render::SWEEP_COLUMNS.to_vec(),
        rows: rows.iter().map(render::sweep_cells).collect(),
    })
}

fn check_metric_cmd(pool: &[GraphSpec], limits: &Limits) -> Outcome<Value> {
    if pool.len() < 2 {
        return Err(Failure::Usage("check-metric needs at least two graphs".into()));
    }
    let graphs = pool.iter().map(build).collect::<Outcome<Vec<_>>>()?;
    let names: Vec<String> = pool.iter().map(ToString::to_string).collect();
    let report = check_metric_axioms::<Rational>(&graphs, limits)?;
    let matrix = |m: &Vec<Vec<Rational>>| -> Vec<Vec<String>> {
        m.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
    };
    let mut equivalent = Vec::new();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            if report.equivalent(i, j) {
                equivalent.push(vec![names[i].clone(), names[j].clone()]);
            }
        }
    }
    let axioms: Vec<Value> = report
        .axioms
        .iter()
        .map(|a| {
            json!({
                "axiom": a.axiom.name(),
                "holds": a.holds(),
                "checked": a.checked,
                "violations": a
                    .violations
                    .iter()
                    .map(|w| w.iter().map(|&i| names[i].clone()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let doc = json!({
        "pool": names,
        "s": matrix(&report.s),
        "d": matrix(&report.d),
        "hom_equivalent": equivalent,
        "axioms": axioms,
        "all_hold": report.all_hold(),
    });
    if report.all_hold() {
        Ok(doc)
    } else {
        Err(Failure::Property(doc))
    }
}

fn run(cli: &Cli) -> Outcome<Output> {
    let limits = Limits {
        vertex_cap: cli.vertex_cap,
        enumeration_budget: cli.enum_budget,
        search_budget: cli.search_budget,
    };
    let (name, doc) = match &cli.command {
        Command::Info { graph } => ("info", info(graph, &limits)?),
        Command::Hom { g, h } => ("hom", hom(g, h, &limits)?),
        Command::S { m, n } => ("s", s_cmd(m, n, &limits)?),
        Command::D { m, n } => ("d", d_cmd(m, n, &limits)?),
        Command::Mc { h, instance } => ("mc", mc_cmd(h, instance, &limits)?),
        Command::Bounds {
            h,
            via,
            gw,
            fj,
            hastad,
            c,
            compare,
            beta,
        } => (
            "bounds",
            bounds_cmd(h, via.as_ref(), *gw, *fj, *hastad, c, *compare, beta.as_deref(), &limits)?,
        ),
        Command::Sweep { family, range, c, r } => {
            return sweep_cmd(*family, range, c, *r).map(|out| stamp(out, "sweep"));
        }
        Command::CheckMetric { pool } => ("check-metric", check_metric_cmd(pool, &limits)?),
    };
    Ok(stamp(Output::Document(doc), name))
}

fn stamp(out: Output, command: &str) -> Output {
    let add = |mut doc: Value| {
        doc["command"] = json!(command);
        doc["version"] = json!(env!("CARGO_PKG_VERSION"));
        doc
    };
    match out {
        Output::Document(doc) => Output::Document(add(doc)),
        Output::Table { doc, header, rows } => Output::Table {
            doc: add(doc),
            header,
            rows,
        },
    }
}

fn emit(format: Format, out: &Output) -> io::Result<()> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match (format, out) {
        (Format::Json, Output::Document(doc) | Output::Table { doc, .. }) => {
            serde_json::to_writer_pretty(&mut lock, doc)?;
            writeln!(lock)
        }
        (Format::Text, Output::Document(doc)) => render::write_text(&mut lock, doc),
        (Format::Csv, Output::Document(doc)) => render::write_key_value_csv(&mut lock, doc),
        (Format::Text, Output::Table { header, rows, .. }) => render::write_table(&mut lock, header, rows),
        (Format::Csv, Output::Table { header, rows, .. }) => render::write_csv(&mut lock, header, rows),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    let code = match result {
        Ok(out) => match emit(cli.format, &out) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(Failure::Property(doc)) => {
            let _ = emit(cli.format, &stamp(Output::Document(doc), "check-metric"));
            eprintln!("error: metric axiom check failed");
            4
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e.kind() {
                ErrorKind::Usage => 2,
                ErrorKind::ResourceCap => 3,
                ErrorKind::Computation => 1,
            }
        }
    };
    ExitCode::from(code)
}
