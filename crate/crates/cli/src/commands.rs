//! Subcommands and their text and JSON reports.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use coulombkit_core::bethe::{bethe_relations_q1, dmodule_relations, render_kahler, Relation};
use coulombkit_core::coulomb::{AlgebraElement, Model};
use coulombkit_core::exactring::{ExactScalar, Monomial, VariableTable};
use coulombkit_core::hypertoric::cowall_normals;
use coulombkit_core::vertex::{qde_check, vertex_fp, vertex_fp_nonab, whittaker_function, QSeries};
use coulombkit_core::wallcross::WallCrossScenario;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::expr::{parse_descendent, parse_word};
use crate::model::{load_model, LoadedModel};

#[derive(Parser, Debug)]
#[command(
    name = "coulombkit",
    version,
    about = "Exact computations with virtual Coulomb branches of gauge data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Model file (JSON).
    pub model: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub common: Common,
    /// Truncation order in the grading by theta.
    #[arg(long, default_value_t = 3)]
    pub order: i64,
    /// Fixed point: 0-based index, or its support such as `p13` or `1,3`.
    #[arg(long)]
    pub point: Option<String>,
    /// Descendent insertion, a Laurent polynomial in a, s and h.
    #[arg(long, default_value = "1")]
    pub descendent: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Circuits, effective cone, cowalls and fixed points.
    Analyze(Common),
    /// Circuits with the walls they are normal to.
    Circuits(Common),
    /// Fixed points with restrictions and point cones.
    FixedPoints(Common),
    /// Vertex function coefficients at fixed points.
    Vertex(SeriesArgs),
    /// Whittaker function coefficients at fixed points.
    Whittaker(SeriesArgs),
    /// Check the q-difference equations on the vertex functions.
    QdeCheck {
        #[command(flatten)]
        series: SeriesArgs,
        /// Circuit index; all circuits when omitted.
        #[arg(long)]
        circuit: Option<usize>,
    },
    /// Relations of the q-difference module, or the Bethe equations.
    Bethe {
        #[command(flatten)]
        common: Common,
        /// Take the limit q = 1.
        #[arg(long)]
        q1: bool,
    },
    /// Multiply a word such as `s1 r[1,0] R[-1,0]`.
    Mul {
        word: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compare with the chamber of a second stability parameter.
    Wallcross {
        #[command(flatten)]
        common: Common,
        /// Second stability parameter, comma-separated.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        theta2: Vec<i64>,
    },
}

/// Text to print and the process exit code: 0 success, 1 failed check,
/// 2 bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }

    fn checked(output: String, passed: bool) -> Self {
        Outcome {
            output,
            code: if passed { 0 } else { 1 },
        }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            output: format!("error: {message}\n"),
            code: 2,
        }
    }
}

type CmdResult = Result<Outcome, Outcome>;

fn input<E: std::fmt::Display>(e: E) -> Outcome {
    Outcome::input_error(e)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        to_json(value)
    } else {
        text(value)
    }
}

fn one_based(rows: &[usize]) -> Vec<usize> {
    rows.iter().map(|i| i + 1).collect()
}

fn row_set(rows: &[usize]) -> String {
    let names: Vec<String> = rows.iter().map(|i| format!("χ_{}", i + 1)).collect();
    format!("{{{}}}", names.join(","))
}

fn vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitInfo {
    pub index: usize,
    pub vector: Vec<i64>,
    /// 1-based rows spanning each wall normal to the circuit.
    pub walls: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointInfo {
    pub index: usize,
    pub label: String,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    /// `s_j|_p` in canonical form.
    pub restriction: Vec<String>,
    pub eff_rays: Vec<Vec<i64>>,
    /// Nonabelian models only: two lifted Chern roots in one block coincide
    /// after specialization, so the point lifts no isolated fixed point.
    #[serde(default)]
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeInfo {
    pub generators: Vec<Vec<i64>>,
    pub facet_normals: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub n: usize,
    pub k: usize,
    pub theta: Vec<i64>,
    pub blocks: Option<Vec<usize>>,
    pub labels: Option<Vec<String>>,
    pub circuits: Vec<CircuitInfo>,
    pub eff_cone: ConeInfo,
    pub cowalls: Vec<Vec<i64>>,
    pub fixed_points: Vec<PointInfo>,
}

fn circuit_infos(m: &Model) -> Vec<CircuitInfo> {
    m.circuits()
        .iter()
        .enumerate()
        .map(|(index, c)| CircuitInfo {
            index,
            vector: c.vector.clone(),
            walls: c.walls.iter().map(|w| one_based(w)).collect(),
        })
        .collect()
}

/// A lift is degenerate when two specialized restrictions `s_j|_p` in the
/// same block agree.
pub fn degenerate_lift(lm: &LoadedModel, p: usize) -> bool {
    let m = &lm.model;
    let Some(blocks) = &m.data().blocks else {
        return false;
    };
    let roots: Vec<Monomial> = m.fixed_points()[p]
        .restriction
        .iter()
        .map(|r| lm.specialization.apply(r))
        .collect();
    let mut start = 0;
    for &b in blocks {
        let block = &roots[start..start + b];
        if block
            .iter()
            .enumerate()
            .any(|(i, x)| block[..i].contains(x))
        {
            return true;
        }
        start += b;
    }
    false
}

fn point_infos(lm: &LoadedModel) -> Vec<PointInfo> {
    let m = &lm.model;
    let t = m.table();
    m.fixed_points()
        .iter()
        .enumerate()
        .map(|(index, p)| PointInfo {
            index,
            label: p.label(),
            plus: one_based(&p.plus),
            minus: one_based(&p.minus),
            restriction: p.restriction.iter().map(|r| r.render(t)).collect(),
            eff_rays: p.rays.clone(),
            degenerate: degenerate_lift(lm, index),
        })
        .collect()
}

fn render_circuits(cs: &[CircuitInfo]) -> String {
    let mut out = String::new();
    for c in cs {
        let walls: Vec<String> = c
            .walls
            .iter()
            .map(|w| row_set(&w.iter().map(|i| i - 1).collect::<Vec<_>>()))
            .collect();
        let _ = writeln!(
            out,
            "circuit {} {} wall {}",
            c.index,
            vector(&c.vector),
            walls.join(" ")
        );
    }
    out
}

fn render_points(ps: &[PointInfo]) -> String {
    let mut out = String::new();
    for p in ps {
        let restr: Vec<String> = p
            .restriction
            .iter()
            .enumerate()
            .map(|(j, r)| format!("s{}={}", j + 1, r))
            .collect();
        let rays: Vec<String> = p.eff_rays.iter().map(|r| vector(r)).collect();
        let minus: Vec<String> = p.minus.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(
            out,
            "point {} {} minus {{{}}} {} eff {}{}",
            p.index,
            p.label,
            minus.join(","),
            restr.join(" "),
            rays.join(" "),
            if p.degenerate { " degenerate" } else { "" }
        );
    }
    out
}

fn analyze(lm: &LoadedModel, json: bool) -> CmdResult {
    let m = &lm.model;
    let report = AnalyzeReport {
        n: m.n(),
        k: m.k(),
        theta: m.data().theta.clone(),
        blocks: m.data().blocks.clone(),
        labels: lm.file.labels.clone(),
        circuits: circuit_infos(m),
        eff_cone: ConeInfo {
            generators: m.eff_cone().generators.clone(),
            facet_normals: m.eff_cone().facet_normals.clone(),
        },
        cowalls: if m.k() > 1 {
            cowall_normals(m.data()).map_err(input)?
        } else {
            Vec::new()
        },
        fixed_points: point_infos(lm),
    };
    Ok(Outcome::ok(emit(json, &report, |r| {
        let mut out = format!("model n={} k={} theta={}", r.n, r.k, vector(&r.theta));
        if let Some(b) = &r.blocks {
            let b: Vec<i64> = b.iter().map(|&x| x as i64).collect();
            let _ = write!(out, " blocks={}", vector(&b));
        }
        out.push('\n');
        for (i, row) in m.data().chi.iter().enumerate() {
            let label = r
                .labels
                .as_ref()
                .map(|l| format!(" {}", l[i]))
                .unwrap_or_default();
            let _ = writeln!(out, "row χ_{} {}{}", i + 1, vector(row), label);
        }
        out.push_str(&render_circuits(&r.circuits));
        let gens: Vec<String> = r.eff_cone.generators.iter().map(|g| vector(g)).collect();
        let facets: Vec<String> = r.eff_cone.facet_normals.iter().map(|g| vector(g)).collect();
        let _ = writeln!(
            out,
            "eff generators {} facets {}",
            gens.join(" "),
            facets.join(" ")
        );
        if !r.cowalls.is_empty() {
            let cw: Vec<String> = r.cowalls.iter().map(|g| vector(g)).collect();
            let _ = writeln!(out, "cowalls {}", cw.join(" "));
        }
        out.push_str(&render_points(&r.fixed_points));
        out
    })))
}

/// Resolve `--point`: a 0-based index, or a support such as `p13`, `{1,3}`
/// or `1,3` (1-based rows).
pub fn resolve_point(m: &Model, text: &str) -> Result<usize, String> {
    let t = text.trim();
    if !t.is_empty() && t.chars().all(|c| c.is_ascii_digit()) && !t.contains(',') {
        let i: usize = t.parse().map_err(|_| format!("bad point '{text}'"))?;
        return if i < m.fixed_points().len() {
            Ok(i)
        } else {
            Err(format!("no fixed point with index {i}"))
        };
    }
    let body = t
        .trim_start_matches('p')
        .trim_start_matches('{')
        .trim_end_matches('}');
    let rows: Result<Vec<usize>, _> = if body.contains(',') {
        body.split(',').map(|x| x.trim().parse::<usize>()).collect()
    } else {
        body.chars()
            .map(|c| c.to_string().parse::<usize>())
            .collect()
    };
    let mut rows: Vec<usize> = rows
        .map_err(|_| format!("bad point '{text}'"))?
        .into_iter()
        .map(|r| r.wrapping_sub(1))
        .collect();
    rows.sort();
    m.fixed_points()
        .iter()
        .position(|p| p.support == rows)
        .ok_or_else(|| format!("no fixed point with support '{text}'"))
}

fn points(lm: &LoadedModel, sel: &Option<String>) -> Result<Vec<usize>, Outcome> {
    let m = &lm.model;
    match sel {
        Some(s) => {
            let p = resolve_point(m, s).map_err(input)?;
            if degenerate_lift(lm, p) {
                return Err(input(format!(
                    "point {} is a degenerate lift: two Chern roots in one block coincide",
                    m.fixed_points()[p].label()
                )));
            }
            Ok(vec![p])
        }
        None => Ok((0..m.fixed_points().len())
            .filter(|&p| !degenerate_lift(lm, p))
            .collect()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficient {
    pub degree: Vec<i64>,
    /// Canonical rendering; re-parses with [`crate::expr::parse_scalar`].
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSeries {
    pub index: usize,
    pub label: String,
    pub coefficients: Vec<Coefficient>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub kind: String,
    pub order: i64,
    pub descendent: String,
    pub points: Vec<PointSeries>,
}

fn series_coefficients(s: &QSeries, t: &VariableTable) -> Vec<Coefficient> {
    s.terms()
        .filter(|(_, f)| !f.is_zero())
        .map(|(d, f)| Coefficient {
            degree: d.clone(),
            value: f.render(t),
        })
        .collect()
}

fn render_series(r: &SeriesReport) -> String {
    let mut out = String::new();
    for p in &r.points {
        let _ = writeln!(out, "point {} {}", p.index, p.label);
        for c in &p.coefficients {
            let _ = writeln!(out, "  Q^{} {}", vector(&c.degree), c.value);
        }
    }
    out
}

fn series(lm: &LoadedModel, a: &SeriesArgs, whittaker: bool) -> CmdResult {
    let m = &lm.model;
    if a.order < 0 {
        return Err(input("order must be nonnegative"));
    }
    let tau =
        parse_descendent(&a.descendent, m.table()).map_err(|e| input(format!("descendent {e}")))?;
    let pts = points(lm, &a.point)?;
    let nonab = m.data().blocks.is_some();
    if whittaker && nonab {
        return Err(input(
            "whittaker functions are computed for abelian models only",
        ));
    }
    let results: Vec<Result<QSeries, coulombkit_core::Error>> = pts
        .par_iter()
        .map(|&p| {
            if whittaker {
                whittaker_function(m, p, &tau, a.order)
            } else if nonab {
                vertex_fp_nonab(m, p, &tau, a.order, &lm.specialization)
            } else {
                vertex_fp(m, p, &tau, a.order)
            }
        })
        .collect();
    let mut out = Vec::new();
    for (&p, r) in pts.iter().zip(results) {
        let s = r.map_err(input)?;
        out.push(PointSeries {
            index: p,
            label: m.fixed_points()[p].label(),
            coefficients: series_coefficients(&s, m.table()),
        });
    }
    let report = SeriesReport {
        kind: if whittaker {
            "whittaker".into()
        } else {
            "vertex".into()
        },
        order: a.order,
        descendent: tau.render(m.table()),
        points: out,
    };
    Ok(Outcome::ok(emit(a.common.json, &report, render_series)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub point: usize,
    pub degree: Vec<i64>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QdeCircuit {
    pub circuit: usize,
    pub class: Vec<i64>,
    pub checked: usize,
    pub residuals: Vec<Residual>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QdeSummary {
    pub order: i64,
    pub descendent: String,
    pub circuits: Vec<QdeCircuit>,
    pub passed: bool,
}

fn qde(lm: &LoadedModel, a: &SeriesArgs, circuit: Option<usize>) -> CmdResult {
    let m = &lm.model;
    if m.data().blocks.is_some() {
        return Err(input("qde-check runs on abelian models only"));
    }
    if a.point.is_some() {
        return Err(input("qde-check covers every fixed point; drop --point"));
    }
    if a.order < 0 {
        return Err(input("order must be nonnegative"));
    }
    let tau =
        parse_descendent(&a.descendent, m.table()).map_err(|e| input(format!("descendent {e}")))?;
    let idx: Vec<usize> = match circuit {
        Some(i) if i < m.circuits().len() => vec![i],
        Some(i) => return Err(input(format!("no circuit with index {i}"))),
        None => (0..m.circuits().len()).collect(),
    };
    let reports: Vec<_> = idx
        .par_iter()
        .map(|&i| qde_check(m, &m.circuits()[i].vector, &tau, a.order))
        .collect();
    let mut circuits = Vec::new();
    for (&i, r) in idx.iter().zip(reports) {
        let r = r.map_err(input)?;
        circuits.push(QdeCircuit {
            circuit: i,
            class: r.class.clone(),
            checked: r.checked,
            passed: r.passed(),
            residuals: r
                .residuals
                .iter()
                .map(|x| Residual {
                    point: x.point,
                    degree: x.degree.clone(),
                    value: x.value.render(m.table()),
                })
                .collect(),
        });
    }
    let passed = circuits.iter().all(|c| c.passed);
    let report = QdeSummary {
        order: a.order,
        descendent: tau.render(m.table()),
        circuits,
        passed,
    };
    let text = |r: &QdeSummary| {
        let mut out = String::new();
        for c in &r.circuits {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{verdict} circuit {} {} checked {}",
                c.circuit,
                vector(&c.class),
                c.checked
            );
            for x in &c.residuals {
                let _ = writeln!(
                    out,
                    "  point {} Q^{} residual {}",
                    x.point,
                    vector(&x.degree),
                    x.value
                );
            }
        }
        out
    };
    Ok(Outcome::checked(emit(a.common.json, &report, text), passed))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationInfo {
    pub class: Vec<i64>,
    pub moved_class: Vec<i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetheReport {
    pub q1: bool,
    pub relations: Vec<RelationInfo>,
}

fn bethe(lm: &LoadedModel, json: bool, q1: bool) -> CmdResult {
    let m = &lm.model;
    let rels = if q1 {
        bethe_relations_q1(m)
    } else {
        dmodule_relations(m)
    }
    .map_err(input)?;
    let rels: Vec<Relation> = rels
        .iter()
        .map(|r| r.specialize(&lm.specialization))
        .collect::<Result<_, _>>()
        .map_err(input)?;
    let mut infos: Vec<RelationInfo> = rels
        .iter()
        .map(|r| RelationInfo {
            class: r.class.clone(),
            moved_class: r.moved_class.clone(),
            lhs: r.lhs.render(m.table()),
            rhs: render_kahler(&r.rhs_degree),
        })
        .collect();
    infos.sort_by(|a, b| (&a.lhs, &a.rhs).cmp(&(&b.lhs, &b.rhs)));
    let report = BetheReport {
        q1,
        relations: infos,
    };
    Ok(Outcome::ok(emit(json, &report, |r| {
        r.relations
            .iter()
            .map(|x| format!("{} = {}\n", x.lhs, x.rhs))
            .collect()
    })))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulReport {
    pub terms: Vec<Coefficient>,
}

/// One line per term, `r[d] coefficient`, in degree order; `0` if empty.
pub fn render_element(e: &AlgebraElement, t: &VariableTable) -> String {
    if e.is_zero() {
        return "0\n".into();
    }
    e.terms()
        .map(|(d, f)| format!("r{} {}\n", vector(d), f.render(t)))
        .collect()
}

fn mul(lm: &LoadedModel, json: bool, word: &str) -> CmdResult {
    let m = &lm.model;
    let e = parse_word(word, m).map_err(|e| input(format!("word {e}")))?;
    let report = MulReport {
        terms: e
            .terms()
            .map(|(d, f)| Coefficient {
                degree: d.clone(),
                value: f.render(m.table()),
            })
            .collect(),
    };
    Ok(Outcome::ok(emit(json, &report, |_| {
        render_element(&e, m.table())
    })))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallCheck {
    pub circuit: Vec<i64>,
    pub reversing: bool,
    pub generators: bool,
    pub scalar: bool,
    pub dmodule_checked: usize,
    pub dmodule_failures: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallReport {
    pub theta: Vec<i64>,
    pub theta2: Vec<i64>,
    pub reversing: Vec<Vec<i64>>,
    pub kept: Vec<Vec<i64>>,
    pub circuits_match: bool,
    pub checks: Vec<WallCheck>,
    pub passed: bool,
}

fn wallcross(lm: &LoadedModel, json: bool, theta2: &[i64]) -> CmdResult {
    let m = &lm.model;
    if m.data().blocks.is_some() {
        return Err(input("wallcross runs on abelian models only"));
    }
    let s = WallCrossScenario::new(m.data().clone(), theta2.to_vec()).map_err(input)?;
    let (rev, mat) = s.check_all().map_err(input)?;
    let checks: Vec<WallCheck> = rev
        .iter()
        .zip(&mat)
        .map(|(r, d)| WallCheck {
            circuit: r.circuit.clone(),
            reversing: r.reversing,
            generators: r.generators,
            scalar: r.scalar,
            dmodule_checked: d.checked,
            dmodule_failures: d.failures.len(),
            passed: r.passed() && d.passed(),
        })
        .collect();
    let circuits_match = s.circuits_match();
    let passed = circuits_match && checks.iter().all(|c| c.passed);
    let report = WallReport {
        theta: m.data().theta.clone(),
        theta2: theta2.to_vec(),
        reversing: s.reversing.iter().map(|c| c.vector.clone()).collect(),
        kept: s.kept.iter().map(|c| c.vector.clone()).collect(),
        circuits_match,
        checks,
        passed,
    };
    let text = |r: &WallReport| {
        let list = |v: &[Vec<i64>]| v.iter().map(|x| vector(x)).collect::<Vec<_>>().join(" ");
        let mut out = format!("theta {} -> {}\n", vector(&r.theta), vector(&r.theta2));
        let _ = writeln!(out, "reversing {}", list(&r.reversing));
        let _ = writeln!(out, "kept {}", list(&r.kept));
        for c in &r.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let kind = if c.reversing { "reversing" } else { "kept" };
            let _ = writeln!(
                out,
                "{verdict} {kind} {} generators {} scalar {} dmodule {}/{}",
                vector(&c.circuit),
                c.generators,
                c.scalar,
                c.dmodule_checked - c.dmodule_failures,
                c.dmodule_checked
            );
        }
        let _ = writeln!(
            out,
            "{} circuit sets",
            if r.circuits_match { "PASS" } else { "FAIL" }
        );
        out
    };
    Ok(Outcome::checked(emit(json, &report, text), passed))
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Analyze(c) | Command::Circuits(c) | Command::FixedPoints(c) => c,
        Command::Vertex(a) | Command::Whittaker(a) => &a.common,
        Command::QdeCheck { series, .. } => &series.common,
        Command::Bethe { common, .. }
        | Command::Mul { common, .. }
        | Command::Wallcross { common, .. } => common,
    }
}

/// Run a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    let c = common(&cli.command);
    let lm = match load_model(&c.model) {
        Ok(lm) => lm,
        Err(e) => return Outcome::input_error(e),
    };
    let json = c.json;
    let r = match &cli.command {
        Command::Analyze(_) => analyze(&lm, json),
        Command::Circuits(_) => {
            let cs = circuit_infos(&lm.model);
            Ok(Outcome::ok(emit(json, &cs, |x| render_circuits(x))))
        }
        Command::FixedPoints(_) => {
            let ps = point_infos(&lm);
            Ok(Outcome::ok(emit(json, &ps, |x| render_points(x))))
        }
        Command::Vertex(a) => series(&lm, a, false),
        Command::Whittaker(a) => series(&lm, a, true),
        Command::QdeCheck { series, circuit } => qde(&lm, series, *circuit),
        Command::Bethe { q1, .. } => bethe(&lm, json, *q1),
        Command::Mul { word, .. } => mul(&lm, json, word),
        Command::Wallcross { theta2, .. } => wallcross(&lm, json, theta2),
    };
    r.unwrap_or_else(|e| e)
}

/// Whether a coefficient string re-parses to `f`.
pub fn round_trips(f: &ExactScalar, t: &VariableTable) -> bool {
    crate::expr::parse_scalar(&f.render(t), t)
        .map(|g| g == *f)
        .unwrap_or(false)
}
