//! Command-line front end: input parsing, command dispatch, and report
//! rendering in a canonical JSON form and an aligned text form.
//!
//! The JSON output is byte-identical for identical invocations: key order is
//! fixed by struct declaration order, maps are sorted, and no timestamps
//! appear in the payload. Exit codes: 0 fully certified, 2 success with
//! uncertified results, 1 validation or parse error, 3 internal error.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    self, PredicateVerdict, SequenceOptions, SequenceReport,
};
use crate::error::{Error, Result};
use crate::fan::{self, Chamber, ChamberFan};
use crate::fedder;
use crate::frobenius::{self, FrobeniusLevel};
use crate::lattice::{self, AffineMonoid, LatticeVector, Weight};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Output format selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Json,
}

/// A rendered report plus the overall certification verdict that drives the
/// exit code.
#[derive(Debug)]
pub struct Rendered {
    pub body: String,
    pub certified: bool,
}

/// Validated monoid input.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub dim: usize,
    pub generators: Vec<Vec<i64>>,
    pub p: u64,
    #[serde(default)]
    pub e: Option<u32>,
    #[serde(default)]
    pub e_max: Option<u32>,
    #[serde(default)]
    pub weight: Option<Vec<i64>>,
    #[serde(default)]
    pub degree_bound: Option<i64>,
    #[serde(default)]
    pub seed: Option<u64>,
}

/// Reads an input spec from a file path or from inline JSON text.
pub fn load_input(source: &str) -> Result<InputSpec> {
    let text = if Path::new(source).exists() {
        std::fs::read_to_string(source)?
    } else if source.trim_start().starts_with('{') {
        source.to_string()
    } else {
        return Err(Error::Validation(format!(
            "input '{source}' is neither a readable file nor inline JSON"
        )));
    };
    let spec: InputSpec =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid input: {e}")))?;
    Ok(spec)
}

impl InputSpec {
    /// Builds the monoid and enforces the standing assumptions, reporting
    /// the first failing condition by name.
    pub fn monoid(&self) -> Result<AffineMonoid> {
        if !frobenius::is_prime(self.p) {
            return Err(Error::Validation(format!("p = {} is not prime", self.p)));
        }
        let gens: Vec<&[i64]> = self.generators.iter().map(|g| g.as_slice()).collect();
        let monoid = AffineMonoid::from_i64(self.dim, &gens).map_err(|e| match e {
            Error::ZeroGenerator => {
                Error::Validation("generators must be nonzero vectors".into())
            }
            Error::DimensionMismatch { expected, found } => Error::Validation(format!(
                "generator has {found} coordinates, expected dim = {expected}"
            )),
            Error::EmptyGenerators => Error::Validation("generators must be nonempty".into()),
            other => other,
        })?;
        if !lattice::is_pointed(&monoid) {
            return Err(Error::Validation(
                "the monoid is not pointed: its cone contains a line, violating the standing assumption that it has no nontrivial units"
                    .into(),
            ));
        }
        if !lattice::group_generates(&monoid) {
            return Err(Error::Validation(
                "the generators do not generate Z^d as a group, violating the standing assumption"
                    .into(),
            ));
        }
        Ok(monoid)
    }

    pub fn weight_vector(&self) -> Result<Option<Weight>> {
        match &self.weight {
            None => Ok(None),
            Some(w) => {
                if w.len() != self.dim {
                    return Err(Error::Validation(format!(
                        "weight has {} coordinates, expected {}",
                        w.len(),
                        self.dim
                    )));
                }
                Ok(Some(Weight::from_i64(w)))
            }
        }
    }

    pub fn degree_bound_big(&self) -> Option<BigInt> {
        self.degree_bound.map(BigInt::from)
    }
}

/// Maps an error to the documented exit code.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ResourceLimit(_) | Error::GenericWeightSearchFailed { .. } => 3,
        _ => 1,
    }
}

// ---------------------------------------------------------------------------
// Report DTOs (canonical JSON shapes)
// ---------------------------------------------------------------------------

fn vec_i64(v: &LatticeVector) -> Result<Vec<i64>> {
    v.to_i64()
        .ok_or_else(|| Error::ResourceLimit("report value exceeds i64".into()))
}

fn big_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::ResourceLimit("report value exceeds i64".into()))
}

#[derive(Serialize)]
struct VerdictDto {
    value: bool,
    certified: bool,
    witness: Option<Vec<i64>>,
    checked_bound: Option<i64>,
}

impl VerdictDto {
    fn from(v: &PredicateVerdict) -> Result<Self> {
        Ok(VerdictDto {
            value: v.value,
            certified: v.certified,
            witness: v.witness.as_ref().map(vec_i64).transpose()?,
            checked_bound: v.checked_bound.as_ref().map(big_i64).transpose()?,
        })
    }
}

#[derive(Serialize)]
struct RepDto {
    coset: Vec<u64>,
    rep: Vec<i64>,
}

#[derive(Serialize)]
struct StandardSetDto {
    cardinality: usize,
    bound: i64,
    reps: Vec<RepDto>,
}

#[derive(Serialize)]
struct ChartDto {
    generators: Vec<Vec<i64>>,
    certified: bool,
    complete_up_to: Option<i64>,
}

#[derive(Serialize)]
struct SmoothDto {
    value: bool,
    certified: bool,
}

#[derive(Serialize)]
struct ChamberDto {
    rays: Vec<Vec<i64>>,
    halfspaces: Vec<Vec<i64>>,
    sample_weight: Vec<i64>,
    standard_set: StandardSetDto,
    chart: ChartDto,
    smooth: SmoothDto,
}

#[derive(Serialize)]
struct FanDto {
    p: u64,
    e: u32,
    q: i64,
    certified: bool,
    chambers: Vec<ChamberDto>,
}

fn chamber_dto(chamber: &Chamber) -> Result<ChamberDto> {
    let std = chamber.standard();
    let chart = chamber.chart();
    let smooth = frobenius::is_smooth_chart(chart);
    Ok(ChamberDto {
        rays: chamber
            .cone()
            .rays()
            .iter()
            .map(vec_i64)
            .collect::<Result<_>>()?,
        halfspaces: chamber
            .cone()
            .halfspaces()
            .iter()
            .map(vec_i64)
            .collect::<Result<_>>()?,
        sample_weight: vec_i64(chamber.sample().covector())?,
        standard_set: StandardSetDto {
            cardinality: std.reps().len(),
            bound: big_i64(std.bound())?,
            reps: std
                .reps()
                .iter()
                .map(|(coset, rep)| {
                    Ok(RepDto {
                        coset: coset.clone(),
                        rep: vec_i64(rep)?,
                    })
                })
                .collect::<Result<_>>()?,
        },
        chart: ChartDto {
            generators: chart
                .generators()
                .iter()
                .map(vec_i64)
                .collect::<Result<_>>()?,
            certified: chart.complete_up_to().is_certified(),
            complete_up_to: match chart.complete_up_to() {
                frobenius::Completeness::Certified => None,
                frobenius::Completeness::UpToWeight(b) => Some(big_i64(b)?),
            },
        },
        smooth: SmoothDto {
            value: smooth.value,
            certified: smooth.certified,
        },
    })
}

fn fan_dto(fan: &ChamberFan) -> Result<FanDto> {
    Ok(FanDto {
        p: fan.level().p(),
        e: fan.level().e(),
        q: big_i64(fan.level().q())?,
        certified: fan.certified(),
        chambers: fan
            .chambers()
            .iter()
            .map(chamber_dto)
            .collect::<Result<_>>()?,
    })
}

fn fan_certified_overall(fan: &ChamberFan) -> bool {
    fan.certified()
        && fan
            .chambers()
            .iter()
            .all(|c| c.chart().complete_up_to().is_certified())
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct AnalyzeReport {
    version: String,
    command: String,
    input: InputSpec,
    weakly_normal: VerdictDto,
    f_pure: VerdictDto,
    normal: VerdictDto,
    certified: bool,
}

pub fn run_analyze(spec: &InputSpec, format: Format) -> Result<Rendered> {
    let monoid = spec.monoid()?;
    let weakly_normal = analysis::is_weakly_normal_with(
        &monoid,
        spec.p,
        spec.degree_bound_big().as_ref(),
    )?;
    let f_pure = analysis::is_f_pure(&monoid, spec.p)?;
    let normal = analysis::is_normal(&monoid)?;
    let certified = weakly_normal.certified && f_pure.certified && normal.certified;
    let report = AnalyzeReport {
        version: VERSION.to_string(),
        command: "analyze".to_string(),
        input: spec.clone(),
        weakly_normal: VerdictDto::from(&weakly_normal)?,
        f_pure: VerdictDto::from(&f_pure)?,
        normal: VerdictDto::from(&normal)?,
        certified,
    };
    let body = match format {
        Format::Json => to_json(&report)?,
        Format::Text => {
            let mut out = text_header("analyze", spec, &monoid);
            out.push_str(&predicate_table(&[
                ("weakly normal", &weakly_normal),
                ("F-pure", &f_pure),
                ("normal", &normal),
            ]));
            out
        }
    };
    Ok(Rendered { body, certified })
}

// ---------------------------------------------------------------------------
// fblow (single level)
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct BlowupReport {
    version: String,
    command: String,
    input: InputSpec,
    mode: String,
    fan: FanDto,
    certified: bool,
}

pub fn run_fblow(spec: &InputSpec, format: Format) -> Result<Rendered> {
    let monoid = spec.monoid()?;
    let e = spec
        .e
        .ok_or_else(|| Error::Validation("the fblow command needs a level: set e in the input or pass --e".into()))?;
    let level = FrobeniusLevel::new(spec.p, e)?;
    let degree_bound = spec.degree_bound_big();

    // With an explicit weight only the chamber containing it is computed;
    // otherwise the whole fan.
    let (fan, mode) = match spec.weight_vector()? {
        Some(w) => (
            fan::single_weight_fan(&monoid, &level, &w, degree_bound.as_ref())?,
            "single-weight".to_string(),
        ),
        None => (
            fan::compute_fan_with(&monoid, &level, degree_bound.as_ref())?,
            "fan".to_string(),
        ),
    };

    let certified = fan_certified_overall(&fan);
    let report = BlowupReport {
        version: VERSION.to_string(),
        command: "fblow".to_string(),
        input: spec.clone(),
        mode: mode.clone(),
        fan: fan_dto(&fan)?,
        certified,
    };
    let body = match format {
        Format::Json => to_json(&report)?,
        Format::Text => {
            let mut out = text_header("fblow", spec, &monoid);
            out.push_str(&format!(
                "level: p = {}, e = {}, q = {}\nmode: {}\n",
                spec.p,
                e,
                level.q(),
                mode
            ));
            out.push_str(&fan_text(&fan)?);
            out
        }
    };
    Ok(Rendered { body, certified })
}

// ---------------------------------------------------------------------------
// sequence
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct LevelDto {
    e: u32,
    fan: Option<FanDto>,
    error: Option<String>,
}

#[derive(Serialize)]
struct StepStarDto {
    chamber: usize,
    lower_chamber: Option<usize>,
    value: Option<bool>,
    witness: Option<String>,
}

#[derive(Serialize)]
struct SequenceDto {
    version: String,
    command: String,
    input: InputSpec,
    levels: Vec<LevelDto>,
    charts: Vec<Option<Vec<Vec<Vec<i64>>>>>,
    dominates: std::collections::BTreeMap<String, Option<bool>>,
    domination_witnesses: std::collections::BTreeMap<String, String>,
    condition_star: std::collections::BTreeMap<String, Vec<StepStarDto>>,
    stabilized_at: Option<u32>,
    f_pure: VerdictDto,
    normal: VerdictDto,
    certified: bool,
}

pub fn run_sequence(spec: &InputSpec, format: Format) -> Result<Rendered> {
    let monoid = spec.monoid()?;
    let e_max = spec
        .e_max
        .ok_or_else(|| Error::Validation("the sequence command needs e_max: set e_max in the input or pass --e-max".into()))?;
    let options = SequenceOptions {
        degree_bound: spec.degree_bound_big(),
        ..SequenceOptions::default()
    };
    let report = analysis::analyze_sequence(&monoid, spec.p, e_max, &options)?;
    let certified = sequence_certified(&report);
    let dto = sequence_dto(spec, &report, certified)?;
    let body = match format {
        Format::Json => to_json(&dto)?,
        Format::Text => sequence_text(spec, &monoid, &report)?,
    };
    Ok(Rendered { body, certified })
}

fn sequence_certified(report: &SequenceReport) -> bool {
    report.levels.iter().all(|l| {
        l.fan
            .as_ref()
            .map(fan_certified_overall)
            .unwrap_or(false)
    }) && report.dominates.iter().all(|s| {
        s.outcome
            .as_ref()
            .map(|v| v.certified)
            .unwrap_or(false)
    }) && report.f_pure.certified
        && report.normal.certified
}

fn sequence_dto(spec: &InputSpec, report: &SequenceReport, certified: bool) -> Result<SequenceDto> {
    let mut levels = Vec::new();
    let mut charts = Vec::new();
    for entry in &report.levels {
        match &entry.fan {
            Ok(fan) => {
                levels.push(LevelDto {
                    e: entry.e,
                    fan: Some(fan_dto(fan)?),
                    error: None,
                });
                let per_chamber: Vec<Vec<Vec<i64>>> = fan
                    .chambers()
                    .iter()
                    .map(|c| {
                        c.chart()
                            .generators()
                            .iter()
                            .map(vec_i64)
                            .collect::<Result<_>>()
                    })
                    .collect::<Result<_>>()?;
                charts.push(Some(per_chamber));
            }
            Err(msg) => {
                levels.push(LevelDto {
                    e: entry.e,
                    fan: None,
                    error: Some(msg.clone()),
                });
                charts.push(None);
            }
        }
    }

    let mut dominates = std::collections::BTreeMap::new();
    let mut domination_witnesses = std::collections::BTreeMap::new();
    for step in &report.dominates {
        let key = format!("{}->{}", step.from_e, step.from_e + 1);
        match &step.outcome {
            Ok(v) => {
                dominates.insert(key.clone(), Some(v.value));
                if let Some(w) = &v.witness {
                    domination_witnesses.insert(key, w.to_string());
                }
            }
            Err(msg) => {
                dominates.insert(key.clone(), None);
                domination_witnesses.insert(key, msg.clone());
            }
        }
    }

    let mut condition_star = std::collections::BTreeMap::new();
    for step in &report.condition_star {
        let key = format!("{}->{}", step.from_e, step.from_e + 1);
        let denom = BigInt::from(report.p).pow(step.from_e + 1);
        let mut rows = Vec::new();
        if let Ok(entries) = &step.outcome {
            for entry in entries {
                rows.push(StepStarDto {
                    chamber: entry.higher_chamber,
                    lower_chamber: entry.lower_chamber,
                    value: entry.verdict.as_ref().map(|v| v.value),
                    witness: entry.verdict.as_ref().and_then(|v| {
                        v.witness
                            .as_ref()
                            .map(|w| analysis::scaled_fraction(w, &denom))
                    }),
                });
            }
        }
        condition_star.insert(key, rows);
    }

    Ok(SequenceDto {
        version: VERSION.to_string(),
        command: "sequence".to_string(),
        input: spec.clone(),
        levels,
        charts,
        dominates,
        domination_witnesses,
        condition_star,
        stabilized_at: report.stabilized_at,
        f_pure: VerdictDto::from(&report.f_pure)?,
        normal: VerdictDto::from(&report.normal)?,
        certified,
    })
}

// ---------------------------------------------------------------------------
// fedder
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FedderReport {
    version: String,
    command: String,
    polynomial: String,
    p: u64,
    f_pure: bool,
    witness: Option<String>,
    certified: bool,
}

pub fn run_fedder(polynomial: &str, p: u64, format: Format) -> Result<Rendered> {
    let f = fedder::parse_polynomial(polynomial, p)?;
    let outcome = fedder::fedder_f_pure(&f)?;
    let report = FedderReport {
        version: VERSION.to_string(),
        command: "fedder".to_string(),
        polynomial: polynomial.to_string(),
        p,
        f_pure: outcome.f_pure,
        witness: outcome.witness_string(),
        certified: true,
    };
    let body = match format {
        Format::Json => to_json(&report)?,
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("command: fedder\npolynomial: {f}\np: {p}\n"));
            out.push_str(&format!(
                "F-pure: {}\n",
                if outcome.f_pure { "yes" } else { "no" }
            ));
            if let Some(w) = report.witness.as_deref() {
                out.push_str(&format!("witness monomial: {w}\n"));
            }
            out
        }
    };
    Ok(Rendered {
        body,
        certified: true,
    })
}

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut body = serde_json::to_string_pretty(value)?;
    body.push('\n');
    Ok(body)
}

fn text_header(command: &str, spec: &InputSpec, monoid: &AffineMonoid) -> String {
    format!(
        "command: {command}\nmonoid: {monoid}  (d = {})\np: {}\n",
        spec.dim, spec.p
    )
}

fn chart_text(gens: &[LatticeVector]) -> String {
    let inner: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("<{}>", inner.join(", "))
}

fn fan_text(fan: &ChamberFan) -> Result<String> {
    let mut out = String::new();
    out.push_str(&format!(
        "chambers: {}   fan certified: {}\n",
        fan.chambers().len(),
        yes_no(fan.certified())
    ));
    for (i, ch) in fan.chambers().iter().enumerate() {
        let smooth = frobenius::is_smooth_chart(ch.chart());
        let rays: Vec<String> = ch.cone().rays().iter().map(|r| r.to_string()).collect();
        let reps: Vec<String> = ch
            .standard()
            .sorted_reps()
            .iter()
            .map(|r| r.to_string())
            .collect();
        out.push_str(&format!(
            "  chamber {i}: rays [{}]  sample w = {}\n",
            rays.join(", "),
            ch.sample()
        ));
        out.push_str(&format!(
            "    standard set ({} elements, scaled by q): {{{}}}\n",
            ch.standard().reps().len(),
            reps.join(", ")
        ));
        out.push_str(&format!(
            "    chart: {} ({})   smooth: {}{}\n",
            chart_text(ch.chart().generators()),
            match ch.chart().complete_up_to() {
                frobenius::Completeness::Certified => "certified".to_string(),
                frobenius::Completeness::UpToWeight(b) => format!("complete up to weight {b}"),
            },
            yes_no(smooth.value),
            if smooth.certified { "" } else { " (uncertified)" },
        ));
    }
    Ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn predicate_line(name: &str, v: &PredicateVerdict) -> String {
    let mut line = format!(
        "{:<14} {:<5} certified: {:<3}",
        name,
        yes_no(v.value),
        yes_no(v.certified)
    );
    if let Some(w) = &v.witness {
        line.push_str(&format!("  witness: {w}"));
    }
    if let Some(b) = &v.checked_bound {
        line.push_str(&format!("  checked bound: {b}"));
    }
    line.push('\n');
    line
}

fn predicate_table(rows: &[(&str, &PredicateVerdict)]) -> String {
    let mut out = String::new();
    for (name, v) in rows {
        out.push_str(&predicate_line(name, v));
    }
    out
}

fn sequence_text(
    spec: &InputSpec,
    monoid: &AffineMonoid,
    report: &SequenceReport,
) -> Result<String> {
    let mut out = text_header("sequence", spec, monoid);
    out.push_str(&format!("e_max: {}\n\n", report.levels.len()));
    for entry in &report.levels {
        match &entry.fan {
            Ok(fan) => {
                out.push_str(&format!("level e = {} (q = {})\n", entry.e, fan.level().q()));
                out.push_str(&fan_text(fan)?);
            }
            Err(msg) => {
                out.push_str(&format!("level e = {}: failed: {msg}\n", entry.e));
            }
        }
    }
    out.push('\n');
    for step in &report.dominates {
        let key = format!("{}->{}", step.from_e, step.from_e + 1);
        match &step.outcome {
            Ok(v) => {
                out.push_str(&format!(
                    "dominates {key}: {}{}\n",
                    yes_no(v.value),
                    if v.certified { "" } else { " (uncertified)" }
                ));
                if let Some(w) = &v.witness {
                    out.push_str(&format!("  witness: {w}\n"));
                }
            }
            Err(msg) => out.push_str(&format!("dominates {key}: error: {msg}\n")),
        }
    }
    for step in &report.condition_star {
        let key = format!("{}->{}", step.from_e, step.from_e + 1);
        let denom = BigInt::from(report.p).pow(step.from_e + 1);
        if let Ok(entries) = &step.outcome {
            for entry in entries {
                match (&entry.verdict, entry.lower_chamber) {
                    (Some(v), Some(lo)) => {
                        out.push_str(&format!(
                            "image condition {key} (chamber {} in chamber {lo}): {}",
                            entry.higher_chamber,
                            yes_no(v.value)
                        ));
                        if let Some(w) = &v.witness {
                            out.push_str(&format!(
                                "  witness: {}",
                                analysis::scaled_fraction(w, &denom)
                            ));
                        }
                        out.push('\n');
                    }
                    _ => {
                        out.push_str(&format!(
                            "image condition {key} (chamber {}): no containing lower chamber\n",
                            entry.higher_chamber
                        ));
                    }
                }
            }
        }
    }
    out.push_str(&match report.stabilized_at {
        Some(e0) => format!("stabilized: from e = {e0} within the computed range\n"),
        None => "stabilized: not within the computed range\n".to_string(),
    });
    out.push('\n');
    out.push_str(&predicate_table(&[
        ("weakly normal", &report.f_pure),
        ("F-pure", &report.f_pure),
        ("normal", &report.normal),
    ]));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_8_9_10_11() -> InputSpec {
        load_input(r#"{"dim":1,"generators":[[8],[9],[10],[11]],"p":2,"e_max":2}"#).unwrap()
    }

    #[test]
    fn load_inline_and_validate() {
        let spec = spec_8_9_10_11();
        assert_eq!(spec.dim, 1);
        spec.monoid().unwrap();
    }

    #[test]
    fn validation_rejects_non_generating() {
        let spec = load_input(r#"{"dim":1,"generators":[[2],[4]],"p":2}"#).unwrap();
        let err = spec.monoid().unwrap_err();
        assert!(matches!(err, Error::Validation(msg) if msg.contains("group")));
    }

    #[test]
    fn validation_rejects_non_prime() {
        let spec = load_input(r#"{"dim":1,"generators":[[2],[3]],"p":4}"#).unwrap();
        let err = spec.monoid().unwrap_err();
        assert!(matches!(err, Error::Validation(msg) if msg.contains("prime")));
    }

    #[test]
    fn validation_rejects_non_pointed() {
        let spec = load_input(r#"{"dim":1,"generators":[[1],[-1]],"p":2}"#).unwrap();
        let err = spec.monoid().unwrap_err();
        assert!(matches!(err, Error::Validation(msg) if msg.contains("pointed")));
    }

    #[test]
    fn sequence_json_is_deterministic() {
        let spec = spec_8_9_10_11();
        let a = run_sequence(&spec, Format::Json).unwrap();
        let b = run_sequence(&spec, Format::Json).unwrap();
        assert_eq!(a.body, b.body);
        assert!(a.certified);
        assert!(a.body.contains("\"1->2\": false"));
    }

    #[test]
    fn analyze_text_contains_verdicts() {
        let spec = spec_8_9_10_11();
        let r = run_analyze(&spec, Format::Text).unwrap();
        assert!(r.body.contains("weakly normal  no"));
        assert!(r.certified);
    }

    #[test]
    fn fedder_reports_witness() {
        let r = run_fedder("x0^2 + x1*x2", 2, Format::Json).unwrap();
        assert!(r.body.contains("\"witness\": \"x1*x2\""));
        assert!(r.certified);
    }
}
