use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Map, Value};
use wicketlab::claim::{
    classify_systems, degree_structure_audit, detect_patterns, minimality_check, records_csv,
    summarize,
};
use wicketlab::eqfree::{
    find_eisenstein_wicket, find_equilateral, find_solution, greedy, max_free_exhaustive,
    max_free_heuristic, max_trianglefree, modular_order, AnnealingSchedule, EquationProblem,
    EquationSpec, FreenessProblem, SearchResult, TriangleMode, TriangleProblem, EXHAUSTIVE_LIMIT,
};
use wicketlab::formats::{
    parse_cap_file, parse_int_set, parse_point_set, write_cap_file, write_hypergraph,
};
use wicketlab::rsz::{
    asymptotic_exponent, color_edges, color_f3_build, corollary_cap_bound, default_budget,
    enumerate_plane_wickets, gl_constant, lll_color_count, max_dependency_degree, plane_wickets,
    EisensteinBuild, ModularBuild, RszF3Build, CAP_UPPER_BASE,
};
use wicketlab::{CapSet, TripartiteHypergraph};

use crate::args::{
    BoundsCommand, BuildCommand, CapCommand, ClaimArgs, ColorArgs, Format, HeuristicArgs,
    SearchCommand, SearchMode,
};

/// Why a command stopped early; decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments, unreadable or malformed input (exit 1).
    Usage(String),
    /// The input failed a check; the report says why (exit 2).
    Verification { report: Value, message: String },
    /// Resampling ran out of budget (exit 3).
    Budget { report: Value, message: String },
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 1,
            Self::Verification { .. } => 2,
            Self::Budget { .. } => 3,
        }
    }
}

impl From<wicketlab::Error> for Failure {
    fn from(e: wicketlab::Error) -> Self {
        Self::Usage(e.to_string())
    }
}

pub struct Report {
    pub value: Value,
    pub default_format: Format,
    /// Replaces the rendered report when the output format is CSV.
    pub csv: Option<String>,
}

impl Report {
    fn json(value: Value) -> Self {
        Self {
            value,
            default_format: Format::Json,
            csv: None,
        }
    }

    fn text(value: Value) -> Self {
        Self {
            value,
            default_format: Format::Text,
            csv: None,
        }
    }
}

type Outcome = Result<Report, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn check_out(path: Option<&Path>) -> Result<(), Failure> {
    if let Some(p) = path {
        let parent = p
            .parent()
            .filter(|d| !d.as_os_str().is_empty())
            .unwrap_or(Path::new("."));
        if !parent.is_dir() {
            return Err(Failure::Usage(format!(
                "{}: directory does not exist",
                parent.display()
            )));
        }
    }
    Ok(())
}

fn write(path: Option<&Path>, contents: &str) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, contents).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn points(cap: &CapSet) -> Vec<String> {
    cap.iter().map(ToString::to_string).collect()
}

/// Reads a cap file and verifies it, failing with the offending line.
fn read_cap(path: &Path, dimension: Option<usize>) -> Result<CapSet, Failure> {
    let cap = parse_cap_file(&read(path)?, dimension)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if let Some([x, y, z]) = cap.find_ap3() {
        let report = json!({
            "file": path.display().to_string(),
            "ap3-free": false,
            "dimension": cap.dimension(),
            "size": cap.len(),
            "witness": [x.to_string(), y.to_string(), z.to_string()],
        });
        return Err(Failure::Verification {
            report,
            message: format!("{}: {x} + {y} + {z} = 0", path.display()),
        });
    }
    Ok(cap.verify()?)
}

fn cap_report(cap: &CapSet, extra: &[(&str, Value)]) -> Value {
    let mut m = Map::new();
    for (k, v) in extra {
        m.insert((*k).to_string(), v.clone());
    }
    m.insert("ap3-free".into(), json!(cap.is_ap3_free()));
    m.insert("dimension".into(), json!(cap.dimension()));
    m.insert("size".into(), json!(cap.len()));
    m.insert("cap".into(), json!(points(cap)));
    Value::Object(m)
}

pub fn cap(cmd: CapCommand) -> Outcome {
    match cmd {
        CapCommand::Verify { file, dimension } => {
            let cap = read_cap(&file, dimension)?;
            Ok(Report::text(json!({
                "ap3-free": true,
                "dimension": cap.dimension(),
                "size": cap.len(),
            })))
        }
        CapCommand::Max { n, out } => {
            check_out(out.as_deref())?;
            let (size, cap) = wicketlab::max_cap_exact(n)?;
            write(out.as_deref(), &write_cap_file(&cap))?;
            Ok(Report::text(cap_report(
                &cap,
                &[("n", json!(n)), ("maximum", json!(size))],
            )))
        }
        CapCommand::Product {
            first,
            second,
            power,
            out,
        } => {
            check_out(out.as_deref())?;
            let a = read_cap(&first, None)?;
            let cap = match (second, power) {
                (Some(b), _) => a.product(&read_cap(&b, None)?)?,
                (None, Some(k)) => a.power(k)?,
                (None, None) => {
                    return Err(Failure::Usage("give a second cap file or --power".into()))
                }
            };
            write(out.as_deref(), &write_cap_file(&cap))?;
            Ok(Report::text(cap_report(&cap, &[])))
        }
        CapCommand::Lift { file, out } => {
            check_out(out.as_deref())?;
            let cap = read_cap(&file, None)?.lift()?;
            write(out.as_deref(), &write_cap_file(&cap))?;
            Ok(Report::text(cap_report(&cap, &[])))
        }
    }
}

fn wicket_stats(h: &TripartiteHypergraph) -> Result<Map<String, Value>, Failure> {
    let wickets = h.find_wickets(None)?;
    let mut m = Map::new();
    m.insert("linear".into(), json!(h.is_linear()));
    m.insert("wickets".into(), json!(wickets.len()));
    m.insert("sixthree".into(), json!(h.find_63(None)?.len()));
    m.insert(
        "max_dependency_degree".into(),
        json!(max_dependency_degree(&wickets, h.num_edges())),
    );
    Ok(m)
}

fn merge(mut a: Map<String, Value>, b: Map<String, Value>) -> Value {
    a.extend(b);
    Value::Object(a)
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

pub fn build(cmd: BuildCommand) -> Outcome {
    match cmd {
        BuildCommand::F3 { cap, seed, out } => {
            check_out(out.as_deref())?;
            let cap = read_cap(&cap, None)?;
            let b = RszF3Build::new(&cap)?;
            let h = b.hypergraph();
            write(out.as_deref(), &write_hypergraph(h))?;
            let families = enumerate_plane_wickets(&b);
            let structured: BTreeSet<[usize; 5]> = plane_wickets(&families)
                .iter()
                .map(|w| w.edge_set())
                .collect();
            let detected: BTreeSet<[usize; 5]> =
                h.find_wickets(None)?.iter().map(|w| w.edge_set()).collect();
            let (_, report) = color_f3_build(&b, seed).map_err(|e| match e {
                wicketlab::Error::BudgetExceeded { .. } => Failure::Budget {
                    report: json!({ "seed": seed }),
                    message: e.to_string(),
                },
                other => other.into(),
            })?;
            let mut m = object(to_value(&report));
            m.insert("linear".into(), json!(h.is_linear()));
            m.insert("sixthree".into(), json!(h.find_63(None)?.len()));
            m.insert("plane_families".into(), json!(families.len()));
            m.insert("plane_wickets_match".into(), json!(structured == detected));
            m.insert("seed".into(), json!(seed));
            Ok(Report::json(Value::Object(m)))
        }
        BuildCommand::Modular { k, n, set, out } => {
            check_out(out.as_deref())?;
            let order = modular_order(k)?;
            if let Some(n) = n.filter(|&n| n != order) {
                return Err(Failure::Usage(format!(
                    "n = {n} but k = {k} needs n = k^2-k+1 = {order}"
                )));
            }
            let s = parse_int_set(&read(&set)?)
                .map_err(|e| Failure::Usage(format!("{}: {e}", set.display())))?;
            let b = ModularBuild::new(&s, k)?;
            let h = b.hypergraph();
            write(out.as_deref(), &write_hypergraph(h))?;
            let head = object(json!({
                "k": k,
                "n": order,
                "set_size": b.set().len(),
                "set": b.set(),
                "vertices": 3 * order,
                "edges": h.num_edges(),
            }));
            let mut m = object(merge(head, wicket_stats(h)?));
            m.insert(
                "equation_solution".into(),
                json!(find_solution(b.set(), &EquationSpec::modular(k)?, None)),
            );
            m.insert(
                "wicket_system_solution".into(),
                json!(find_solution(
                    b.set(),
                    &EquationSpec::modular_wicket_system(k)?,
                    None
                )),
            );
            Ok(Report::json(Value::Object(m)))
        }
        BuildCommand::Eisenstein {
            set,
            bound,
            norm,
            out,
        } => {
            check_out(out.as_deref())?;
            let s = parse_point_set(&read(&set)?)
                .map_err(|e| Failure::Usage(format!("{}: {e}", set.display())))?;
            let b = EisensteinBuild::new(&s, bound, norm)?;
            let h = b.hypergraph();
            write(out.as_deref(), &write_hypergraph(h))?;
            let head = object(json!({
                "bound": bound,
                "norm": norm,
                "set_size": b.set().len(),
                "set": b.set(),
                "starts": b.starts().len(),
                "vertices": 3 * b.vertices().len(),
                "edges": h.num_edges(),
            }));
            let mut m = object(merge(head, wicket_stats(h)?));
            m.insert("triangle".into(), json!(find_equilateral(b.set())));
            m.insert(
                "wicket_system_solution".into(),
                json!(find_eisenstein_wicket(b.set(), Some(b.starts()))),
            );
            Ok(Report::json(Value::Object(m)))
        }
    }
}

pub fn color(args: ColorArgs) -> Outcome {
    check_out(args.out.as_deref())?;
    let cap = read_cap(&args.cap, None)?;
    let b = RszF3Build::new(&cap)?;
    let h = b.hypergraph();
    let wickets = plane_wickets(&enumerate_plane_wickets(&b));
    let k = lll_color_count(cap.len());
    let budget = args.budget.unwrap_or_else(|| default_budget(wickets.len()));
    let outcome = color_edges(h, &wickets, k, args.seed, budget).map_err(|e| match e {
        wicketlab::Error::BudgetExceeded { budget, violated } => Failure::Budget {
            report: json!({
                "seed": args.seed,
                "k": k,
                "wickets": wickets.len(),
                "budget": budget,
                "violated": violated,
            }),
            message: format!("{e}; retry with another --seed or a larger --budget"),
        },
        other => other.into(),
    })?;
    let remaining = outcome.selected.find_wickets(None)?.len();
    if remaining != 0 {
        return Err(Failure::Verification {
            report: json!({ "selected_wickets": remaining }),
            message: "selected class contains a wicket".into(),
        });
    }
    write(args.out.as_deref(), &write_hypergraph(&outcome.selected))?;
    let selected = outcome.selected_edges.len();
    let vertices = 3f64.powi(b.n() as i32 + 1);
    Ok(Report::json(json!({
        "n": b.n(),
        "set_size": cap.len(),
        "edges": h.num_edges(),
        "wickets": wickets.len(),
        "k": k,
        "seed": args.seed,
        "budget": budget,
        "resample_count": outcome.coloring.resample_count,
        "class_sizes": outcome.coloring.class_sizes(),
        "selected_color": outcome.selected_color,
        "selected_edges": selected,
        "lower_bound": h.num_edges().div_ceil(k),
        "selected_wickets": remaining,
        "selected_sixthree": outcome.selected.find_63(None)?.len(),
        "exponent": (selected > 0).then(|| (selected as f64).ln() / vertices.ln()),
        "assignment": outcome.coloring.assignment,
    })))
}

pub fn bounds(cmd: BoundsCommand) -> Outcome {
    let value = match cmd {
        BoundsCommand::Exponent { base } => json!({
            "base": base,
            "exponent": asymptotic_exponent(base)?,
        }),
        BoundsCommand::Corollary { c } => {
            let b = corollary_cap_bound(c)?;
            json!({
                "c": b.c,
                "base": b.base,
                "known_base": CAP_UPPER_BASE,
                "improvement": b.improves,
            })
        }
        BoundsCommand::Gl { exponent } => {
            if !(exponent > 1.0 && exponent < 2.0) {
                return Err(Failure::Usage(format!(
                    "exponent must lie in (1, 2), got {exponent}"
                )));
            }
            json!({
                "exponent": exponent,
                "gl_constant": gl_constant(exponent),
            })
        }
    };
    Ok(Report::text(value))
}

fn run_search<P: FreenessProblem>(
    problem: &P,
    h: &HeuristicArgs,
) -> Result<SearchResult<P::Item>, Failure> {
    let schedule = AnnealingSchedule::new(h.seed, h.budget);
    Ok(match h.mode {
        SearchMode::Exhaustive => max_free_exhaustive(problem, EXHAUSTIVE_LIMIT)?,
        SearchMode::Greedy => greedy(problem),
        SearchMode::Local => max_free_heuristic(problem, schedule),
        SearchMode::Auto if problem.domain().len() <= EXHAUSTIVE_LIMIT => {
            max_free_exhaustive(problem, EXHAUSTIVE_LIMIT)?
        }
        SearchMode::Auto => max_free_heuristic(problem, schedule),
    })
}

fn search_report<T: Serialize>(
    problem: &str,
    domain: String,
    size: usize,
    r: &SearchResult<T>,
    h: &HeuristicArgs,
) -> Value {
    let mut m = object(json!({
        "problem": problem,
        "domain": domain,
        "domain_size": size,
    }));
    m.extend(object(to_value(r)));
    if r.method == wicketlab::eqfree::Method::Local {
        m.insert("seed".into(), json!(h.seed));
        m.insert("budget".into(), json!(h.budget));
    }
    Value::Object(m)
}

pub fn search(cmd: SearchCommand) -> Outcome {
    let value = match cmd {
        SearchCommand::Eq1 { n, heuristic } => {
            if n < 0 {
                return Err(Failure::Usage(format!("n must be >= 0, got {n}")));
            }
            let p = EquationProblem::ruzsa(n);
            let r = run_search(&p, &heuristic)?;
            search_report(
                "3x+y=2z+2w",
                format!("1..{n}"),
                p.domain().len(),
                &r,
                &heuristic,
            )
        }
        SearchCommand::Eq2 { k, heuristic } => {
            let p = EquationProblem::modular(k)?;
            let r = run_search(&p, &heuristic)?;
            let problem = p.spec.name.clone();
            search_report(
                &problem,
                format!("Z/{}", modular_order(k)?),
                p.domain().len(),
                &r,
                &heuristic,
            )
        }
        SearchCommand::Triangle {
            bound,
            norm,
            heuristic,
        } => {
            let schedule = AnnealingSchedule::new(heuristic.seed, heuristic.budget);
            let mode = match heuristic.mode {
                SearchMode::Exhaustive => TriangleMode::Exhaustive,
                SearchMode::Greedy => TriangleMode::Greedy,
                SearchMode::Local => TriangleMode::Local(schedule),
                SearchMode::Auto => TriangleMode::Auto(schedule),
            };
            let r = max_trianglefree(bound, norm, mode)?;
            let size = TriangleProblem::region(bound, norm).domain().len();
            let norm_name = serde_json::to_value(norm)
                .ok()
                .and_then(|v| v.as_str().map(String::from));
            let domain = format!("{} norm <= {bound}", norm_name.unwrap_or_default());
            search_report("equilateral triangle", domain, size, &r, &heuristic)
        }
    };
    Ok(Report::json(value))
}

pub fn claim1(args: ClaimArgs) -> Outcome {
    check_out(args.csv.as_deref())?;
    let (examined, records) = classify_systems(detect_patterns);
    let report = summarize(examined, &records);
    let csv = records_csv(&records);
    write(args.csv.as_deref(), &csv)?;
    let mut m = object(to_value(&report));
    if args.minimality {
        m.insert("minimality".into(), to_value(&minimality_check()));
    }
    if args.audit {
        m.insert("audit".into(), to_value(&degree_structure_audit()));
    }
    let value = Value::Object(m);
    if !report.verified {
        return Err(Failure::Verification {
            message: format!("{} counterexamples", report.counterexamples.len()),
            report: value,
        });
    }
    Ok(Report {
        value,
        default_format: Format::Json,
        csv: Some(csv),
    })
}
