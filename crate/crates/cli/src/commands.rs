use std::str::FromStr;

use kf_core::arith::{format_rational, parse_rational, FieldDescriptor, FieldElement, Rational};
use kf_core::decision::{
    any_valuation, decide_point, value_semigroup, Outcome, Verdict, DEFAULT_CAP,
};
use kf_core::forms::genus_of;
use kf_core::geometry::{
    center_of, classify_with_profile, singular_parameter_locus, singular_points, LambdaProfile,
};
use kf_core::strata::{locus_polynomial, stratum_decide, StratumId, StratumParams};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult, EXIT_KF, EXIT_NOT_KF, EXIT_UNDECIDED};
use crate::wire::{parse_input, parse_point, CurveSpec, Input};

/// Default cap for sweeps, where the triple-point and two-node bounds are
/// far out of reach.
pub const SWEEP_CAP: u64 = 6;

/// A rendered command result and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Response {
    pub json: String,
    pub text: String,
    pub exit: i32,
}

impl Response {
    fn new<T: Serialize>(value: &T, text: String, exit: i32) -> Self {
        Response {
            json: serde_json::to_string(value).expect("report types serialize"),
            text,
            exit,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    pub witnesses: Vec<String>,
    pub bound: Option<String>,
    pub bound_used: u64,
    pub trace: Vec<(u64, bool)>,
}

impl VerdictReport {
    pub fn of(v: &Verdict) -> Self {
        VerdictReport {
            outcome: v.outcome_name(),
            witness_k: v.witness_k(),
            point: v.point().map(ToString::to_string),
            witnesses: v
                .witnesses
                .iter()
                .map(|w| format!("{} at k = {}", w.describe(), w.k()))
                .collect(),
            bound: v.bound.as_ref().map(ToString::to_string),
            bound_used: v.bound_used,
            trace: v.trace.clone(),
        }
    }

    fn text(&self) -> String {
        let mut out = self.outcome.to_string();
        if let Some(k) = self.witness_k {
            out.push_str(&format!(" k={k}"));
        }
        if let Some(p) = &self.point {
            out.push_str(&format!(" point={p}"));
        }
        out.push_str(&format!(" bound_used={}", self.bound_used));
        for w in &self.witnesses {
            out.push_str(&format!("\n  witness: {w}"));
        }
        out
    }
}

pub fn exit_code(v: &Verdict) -> i32 {
    match v.outcome {
        Outcome::Kf { .. } => EXIT_KF,
        Outcome::NotKf => EXIT_NOT_KF,
        Outcome::Undecided => EXIT_UNDECIDED,
    }
}

fn field_of_input(input: &Input) -> kf_core::arith::Field {
    match input {
        Input::Curve(l) => l.field().clone(),
        Input::Stratum(_, p) => p.field().clone(),
    }
}

/// Decides at `point`, or searches every point when it is absent.
pub fn decide(
    input: &str,
    point: Option<&str>,
    max_k: Option<u64>,
    ell: Option<u64>,
) -> CliResult<Response> {
    let input = parse_input(input)?;
    let field = field_of_input(&input);
    let q = point.map(|s| parse_point(&field, s)).transpose()?;
    let cap = Some(max_k.unwrap_or(DEFAULT_CAP));
    let v = match &input {
        Input::Stratum(id, p) => stratum_decide(*id, p, q.as_ref(), ell, cap)?,
        Input::Curve(l) => {
            let ell = ell.unwrap_or(field.degree() as u64);
            match &q {
                Some(q) => decide_point(l, q, ell, cap)?,
                None => any_valuation(l, ell, cap)?,
            }
        }
    };
    let rep = VerdictReport::of(&v);
    Ok(Response::new(&rep, rep.text(), exit_code(&v)))
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileEntry {
    pub alpha: Vec<usize>,
    pub value: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub preimages: Vec<String>,
    pub ramified: Vec<bool>,
    pub complete: bool,
    #[serde(rename = "type")]
    pub kind: Option<&'static str>,
    pub delta: Option<u32>,
    pub lambda_profile: Vec<ProfileEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub secant_eliminant: String,
    pub cusp_poly: String,
    pub cusp_at_infinity: bool,
    pub singular_points: Vec<PointReport>,
    pub unresolved: Vec<String>,
    pub total_delta: Option<u32>,
    pub genus: i64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub queried: Vec<PointReport>,
}

fn profile_entries(p: &Option<LambdaProfile>) -> Vec<ProfileEntry> {
    p.iter()
        .flat_map(|p| {
            p.values.iter().map(|(a, &v)| ProfileEntry {
                alpha: a.clone(),
                value: v,
            })
        })
        .collect()
}

/// Singular points of the image curve; `at` lists extra preimage tuples
/// such as `"1:0,0:1"` to classify directly.
pub fn classify(input: &str, at: &[String]) -> CliResult<Response> {
    let input = parse_input(input)?;
    let l = input.space()?;
    let locus = singular_parameter_locus(&l)?;
    let rep = singular_points(&l)?;
    let genus = genus_of(&l)?;
    let points: Vec<PointReport> = rep
        .points
        .iter()
        .map(|sp| PointReport {
            preimages: sp.preimages.iter().map(ToString::to_string).collect(),
            ramified: sp.ramified.clone(),
            complete: sp.complete,
            kind: sp.kind.map(|t| t.name()),
            delta: sp.kind.map(|t| t.delta()),
            lambda_profile: profile_entries(&sp.profile),
        })
        .collect();
    let mut queried = Vec::new();
    if !at.is_empty() {
        let u = center_of(&l)?;
        for tuple in at {
            let pre = tuple
                .split(',')
                .map(|s| parse_point(l.field(), s))
                .collect::<CliResult<Vec<_>>>()?;
            let (kind, profile) = classify_with_profile(&u, &pre)?;
            queried.push(PointReport {
                preimages: pre.iter().map(ToString::to_string).collect(),
                ramified: Vec::new(),
                complete: true,
                kind: Some(kind.name()),
                delta: Some(kind.delta()),
                lambda_profile: profile_entries(&Some(profile)),
            });
        }
    }
    let report = ClassifyReport {
        secant_eliminant: locus.secant_eliminant.fmt_in("t"),
        cusp_poly: locus.cusp_poly.fmt_in("t"),
        cusp_at_infinity: locus.cusp_at_infinity,
        singular_points: points,
        unresolved: rep.unresolved.iter().map(|p| p.fmt_in("t")).collect(),
        total_delta: rep.total_delta,
        genus,
        queried,
    };
    let mut text = format!("genus {genus}\n");
    for p in report.singular_points.iter().chain(report.queried.iter()) {
        text.push_str(&format!(
            "{} at {}\n",
            p.kind.unwrap_or("unclassified"),
            p.preimages.join(", ")
        ));
    }
    for u in &report.unresolved {
        text.push_str(&format!("unresolved parameters: roots of {u}\n"));
    }
    match report.total_delta {
        Some(d) => text.push_str(&format!("total delta {d}")),
        None => text.push_str("total delta unknown"),
    }
    Ok(Response::new(&report, text, 0))
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelOrders {
    pub k: usize,
    pub orders: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemigroupJson {
    pub degree: usize,
    pub k_max: usize,
    pub point: String,
    pub orders: Vec<LevelOrders>,
    pub generators: Vec<(usize, usize)>,
    pub kf_witness: Option<usize>,
    pub truncated: bool,
}

pub fn semigroup(input: &str, point: &str, k_max: usize) -> CliResult<Response> {
    if k_max == 0 {
        return Err(CliError::malformed("--k-max must be at least 1"));
    }
    let input = parse_input(input)?;
    let l = input.space()?;
    let q = parse_point(l.field(), point)?;
    let rep = value_semigroup(&l, &q, k_max)?;
    let out = SemigroupJson {
        degree: rep.degree,
        k_max: rep.k_max,
        point: q.to_string(),
        orders: rep
            .orders
            .iter()
            .enumerate()
            .map(|(i, o)| LevelOrders {
                k: i + 1,
                orders: o.clone(),
            })
            .collect(),
        generators: rep.generators.clone(),
        kf_witness: rep.kf_witness,
        truncated: rep.truncated,
    };
    let gens: Vec<String> = out
        .generators
        .iter()
        .map(|(k, m)| format!("({k},{m})"))
        .collect();
    let text = format!(
        "generators {}{}",
        gens.join(" "),
        if out.truncated { " (truncated)" } else { "" }
    );
    Ok(Response::new(&out, text, 0))
}

/// Values for one sweep axis: `lo..hi` over the integers, or a comma list
/// of rationals.
pub fn parse_axis(s: &str) -> CliResult<Vec<Rational>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::malformed(format!("range ends must be integers: {s:?}")))
        };
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(CliError::malformed(format!("empty range {s:?}")));
        }
        return Ok((lo..=hi)
            .map(|v| Rational::from_integer(v.into()))
            .collect());
    }
    s.split(',')
        .map(|t| parse_rational(t).map_err(CliError::from))
        .collect()
}

#[derive(Clone, Debug)]
pub struct SweepGrid {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

#[derive(Clone, Debug, Serialize)]
struct CellParams {
    a: String,
    b: String,
    c: String,
}

#[derive(Clone, Debug, Serialize)]
struct CellError {
    code: i32,
    message: String,
}

#[derive(Clone, Debug, Serialize)]
struct Cell {
    params: CellParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<VerdictReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<CellError>,
}

fn sweep_cell(
    id: StratumId,
    n: usize,
    abc: &(Rational, Rational, Rational),
    ell: Option<u64>,
    cap: u64,
) -> Cell {
    let f = FieldDescriptor::rationals();
    let e = |q: &Rational| FieldElement::from_rational(&f, q.clone());
    let params = CellParams {
        a: format_rational(&abc.0),
        b: format_rational(&abc.1),
        c: format_rational(&abc.2),
    };
    let run = || -> CliResult<Verdict> {
        let p = StratumParams::new(id, n, e(&abc.0), e(&abc.1), e(&abc.2))?;
        Ok(stratum_decide(id, &p, None, ell, Some(cap))?)
    };
    match run() {
        Ok(v) => Cell {
            params,
            verdict: Some(VerdictReport::of(&v)),
            error: None,
        },
        Err(err) => Cell {
            params,
            verdict: None,
            error: Some(CellError {
                code: err.code,
                message: err.message,
            }),
        },
    }
}

/// One JSON line per grid cell in `a`, `b`, `c` order, whatever `jobs` is.
pub fn sweep(
    stratum: &str,
    n: usize,
    grid: &SweepGrid,
    max_k: Option<u64>,
    ell: Option<u64>,
    jobs: Option<usize>,
) -> CliResult<Vec<String>> {
    let id = StratumId::from_str(stratum)?;
    let cap = max_k.unwrap_or(SWEEP_CAP);
    let mut cells = Vec::new();
    for a in &grid.a {
        for b in &grid.b {
            for c in &grid.c {
                cells.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::malformed(format!("cannot start workers: {e}")))?;
    let out: Vec<Cell> = pool.install(|| {
        cells
            .par_iter()
            .map(|abc| sweep_cell(id, n, abc, ell, cap))
            .collect()
    });
    Ok(out
        .iter()
        .map(|c| serde_json::to_string(c).expect("cells serialize"))
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct Term {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocusJson {
    pub stratum: &'static str,
    pub n: usize,
    pub vars: Vec<String>,
    pub num_terms: usize,
    pub terms: Vec<Term>,
    pub text: String,
}

pub fn locus(stratum: &str, n: usize) -> CliResult<Response> {
    let id = StratumId::from_str(stratum)?;
    let h = locus_polynomial(id, n)?;
    let out = LocusJson {
        stratum: id.name(),
        n,
        vars: h.vars().to_vec(),
        num_terms: h.num_terms(),
        terms: h
            .terms()
            .map(|(m, c)| Term {
                exponents: m.0.clone(),
                coeff: format_rational(c),
            })
            .collect(),
        text: h.to_text(),
    };
    let text = out.text.clone();
    Ok(Response::new(&out, text, 0))
}

/// The reduced curve spec of any input.
pub fn export(input: &str) -> CliResult<Response> {
    let l = parse_input(input)?.space()?;
    let spec = CurveSpec::of_space(&l);
    let json = serde_json::to_string(&spec).expect("curve specs serialize");
    let text = l
        .basis()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Response {
        json,
        text,
        exit: 0,
    })
}
