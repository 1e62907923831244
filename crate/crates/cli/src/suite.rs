//! Suite files and the case runner.

use std::path::{Path, PathBuf};
use std::time::Instant;

use indexmap::IndexMap;
use plucker_core::charclasses::{chi_bar_of, chi_quadric, chi_smooth_hypersurface};
use plucker_core::chowring::{ext_identity, p_self_intersection};
use plucker_core::duality::ProjVariety;
use plucker_core::plucker::{
    corollary1_deg_dual, corollary2_chi_bar_dual, corollary3_dual_codim, corollary4_check,
    dual_variety, theorem1_check, DualRoute,
};
use plucker_core::Rat;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::variety::VarietySpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    Theorem1,
    Corollary1,
    Corollary2,
    Corollary3,
    Corollary4,
    Chow,
    QuadricChi,
}

impl CaseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseKind::Theorem1 => "theorem1",
            CaseKind::Corollary1 => "corollary1",
            CaseKind::Corollary2 => "corollary2",
            CaseKind::Corollary3 => "corollary3",
            CaseKind::Corollary4 => "corollary4",
            CaseKind::Chow => "chow",
            CaseKind::QuadricChi => "quadric-chi",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    #[default]
    Elimination,
    Analytic,
    Auto,
}

impl From<Route> for DualRoute {
    fn from(r: Route) -> Self {
        match r {
            Route::Elimination => DualRoute::Elimination,
            Route::Analytic => DualRoute::Analytic,
            Route::Auto => DualRoute::Auto,
        }
    }
}

/// A case input: an integer, a variety file (relative to the suite file),
/// or an inline variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Input {
    Integer(i64),
    File(String),
    Inline(VarietySpec),
}

/// Expected values may be written as JSON integers or as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Expected {
    Integer(i64),
    Bool(bool),
    Text(String),
}

impl Expected {
    /// Rationals in lowest terms, so `"10/6"` and `"5/3"` compare equal.
    fn canonical(&self) -> String {
        match self {
            Expected::Integer(v) => v.to_string(),
            Expected::Bool(b) => b.to_string(),
            Expected::Text(t) => t
                .trim()
                .parse::<Rat>()
                .map(|r| r.to_string())
                .unwrap_or_else(|_| t.trim().to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case {
    pub name: String,
    pub kind: CaseKind,
    #[serde(default)]
    pub inputs: Vec<Input>,
    #[serde(default)]
    pub route: Route,
    #[serde(default)]
    pub expected: IndexMap<String, Expected>,
    /// Where the expected values come from; carried into the report.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default)]
    pub slow: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    pub cases: Vec<Case>,
    /// Directory that relative variety paths are resolved against.
    #[serde(skip)]
    pub base: PathBuf,
}

impl Suite {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let mut suite: Suite = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        suite.base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(suite)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The computation itself reported an error.
    Error,
    /// An input could not be read or parsed.
    InvalidInput,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::InvalidInput => "invalid-input",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub name: String,
    pub kind: CaseKind,
    pub status: Status,
    pub values: IndexMap<String, String>,
    pub expected: IndexMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    /// Only filled in on request, so that reports stay byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

enum Arg {
    Int(i64),
    Variety(ProjVariety),
}

fn resolve(input: &Input, base: &Path) -> Result<Arg, CliError> {
    match input {
        Input::Integer(v) => Ok(Arg::Int(*v)),
        Input::File(rel) => Ok(Arg::Variety(VarietySpec::load(&base.join(rel))?.build()?)),
        Input::Inline(spec) => Ok(Arg::Variety(spec.build()?)),
    }
}

fn varieties<const N: usize>(args: &[Arg]) -> Result<[&ProjVariety; N], CliError> {
    let vs: Vec<&ProjVariety> = args
        .iter()
        .filter_map(|a| match a {
            Arg::Variety(v) => Some(v),
            Arg::Int(_) => None,
        })
        .collect();
    if vs.len() != N || args.len() != N {
        return Err(CliError::Input(format!("expected {N} variety input(s)")));
    }
    Ok(vs.try_into().expect("length checked"))
}

fn integers(args: &[Arg]) -> Result<Vec<i64>, CliError> {
    args.iter()
        .map(|a| match a {
            Arg::Int(v) => Ok(*v),
            Arg::Variety(_) => Err(CliError::Input("expected integer inputs".into())),
        })
        .collect()
}

fn positive(v: i64, what: &str) -> Result<usize, CliError> {
    if v >= 1 {
        Ok(v as usize)
    } else {
        Err(CliError::Input(format!(
            "{what} must be at least 1, got {v}"
        )))
    }
}

type Values = IndexMap<String, String>;

fn put(values: &mut Values, key: &str, v: impl ToString) {
    values.insert(key.to_string(), v.to_string());
}

/// Computed values plus whether the case's internal consistency check held.
fn compute(case: &Case, args: &[Arg]) -> Result<(Values, bool), CliError> {
    let route = DualRoute::from(case.route);
    let mut v = Values::new();
    let ok = match case.kind {
        CaseKind::Theorem1 => {
            let [a, b] = varieties::<2>(args)?;
            let r = theorem1_check(a, b, None, None, route).map_err(CliError::compute)?;
            put(&mut v, "lhs", &r.lhs);
            put(&mut v, "rhs", &r.rhs);
            let p = &r.parts;
            for (k, x) in [
                ("c1_c2", p.c1_c2),
                ("c1_p", p.c1_p),
                ("c2_p", p.c2_p),
                ("dual_c1_c2", p.dual_c1_c2),
                ("dual_c1_p", p.dual_c1_p),
                ("dual_c2_p", p.dual_c2_p),
            ] {
                put(&mut v, k, x);
            }
            r.equal
        }
        CaseKind::Corollary1 => {
            let [s] = varieties::<1>(args)?;
            let predicted = corollary1_deg_dual(s).map_err(CliError::compute)?;
            let dual = dual_variety(s, route).map_err(CliError::compute)?;
            put(&mut v, "deg_dual", predicted);
            put(&mut v, "dual_degree", dual.degree());
            predicted == dual.degree()
        }
        CaseKind::Corollary2 => {
            let [s] = varieties::<1>(args)?;
            let predicted =
                corollary2_chi_bar_dual(s, s.ambient_dim()).map_err(CliError::compute)?;
            let dual = dual_variety(s, route).map_err(CliError::compute)?;
            let measured = chi_bar_of(&dual).map_err(CliError::compute)?;
            put(&mut v, "chi_bar_dual", predicted);
            put(&mut v, "dual_chi_bar", measured);
            predicted == measured
        }
        CaseKind::Corollary3 => {
            let [s] = varieties::<1>(args)?;
            let predicted = corollary3_dual_codim(s).map_err(CliError::compute)?;
            let dual = dual_variety(s, route).map_err(CliError::compute)?;
            let measured = dual.ambient_dim() - dual.dim();
            put(&mut v, "dual_codim", predicted);
            put(&mut v, "dual_codim_measured", measured);
            predicted == measured
        }
        CaseKind::Corollary4 => {
            let [s] = varieties::<1>(args)?;
            let r = corollary4_check(s, route).map_err(CliError::compute)?;
            put(&mut v, "lhs", &r.lhs);
            put(&mut v, "rhs", &r.rhs);
            r.equal
        }
        CaseKind::Chow => match integers(args)?.as_slice() {
            [n] => {
                let n = positive(*n, "n")?;
                let pp = p_self_intersection(n);
                let closed = if n % 2 == 0 { 1 } else { -1 } * (n as i64 + 1);
                put(&mut v, "pp", pp);
                put(&mut v, "closed_form", closed);
                pp == closed
            }
            [n, a, p1, p2] => {
                let n = positive(*n, "n")?;
                let r = |x: i64| Rat::from_integer(x.into());
                let e = ext_identity(n, &r(*a), &r(*p1), &r(*p2));
                put(&mut v, "expanded", &e.expanded);
                put(&mut v, "closed", &e.closed);
                e.holds
            }
            _ => return Err(CliError::Input("chow takes [n] or [n, a, p1, p2]".into())),
        },
        CaseKind::QuadricChi => match integers(args)?.as_slice() {
            [m] => {
                let m = positive(*m, "m")?;
                let chi = chi_quadric(m);
                let hyp = chi_smooth_hypersurface(m + 1, 2);
                put(&mut v, "chi", chi);
                put(&mut v, "hypersurface_chi", hyp);
                chi == hyp
            }
            _ => return Err(CliError::Input("quadric-chi takes [m]".into())),
        },
    };
    Ok((v, ok))
}

/// Runs one case. Passing means exact agreement with every declared
/// expectation and with the case's own internal check.
pub fn run_case(case: &Case, base: &Path, timings: bool) -> CaseReport {
    let start = Instant::now();
    let expected: IndexMap<String, String> = case
        .expected
        .iter()
        .map(|(k, e)| (k.clone(), e.canonical()))
        .collect();
    let mut report = CaseReport {
        name: case.name.clone(),
        kind: case.kind,
        status: Status::Pass,
        values: IndexMap::new(),
        expected,
        error: None,
        provenance: case.provenance.clone(),
        wall_ms: None,
    };
    let outcome = case
        .inputs
        .iter()
        .map(|i| resolve(i, base))
        .collect::<Result<Vec<_>, _>>()
        .and_then(|args| compute(case, &args));
    match outcome {
        Ok((values, internal)) => {
            let mut mismatches = Vec::new();
            if !internal {
                mismatches.push("internal check failed".to_string());
            }
            for (k, want) in &report.expected {
                match values.get(k) {
                    Some(got) if got == want => {}
                    Some(got) => mismatches.push(format!("{k}: got {got}, expected {want}")),
                    None => mismatches.push(format!("{k}: no such value")),
                }
            }
            report.values = values;
            if !mismatches.is_empty() {
                report.status = Status::Fail;
                report.error = Some(mismatches.join("; "));
            }
        }
        Err(e) => {
            report.status = match e {
                CliError::Compute(_) => Status::Error,
                CliError::Input(_) | CliError::Io(_) => Status::InvalidInput,
            };
            report.error = Some(e.to_string());
        }
    }
    if timings {
        report.wall_ms = Some((start.elapsed().as_secs_f64() * 1e6).round() / 1e3);
    }
    report
}

/// Exit code for a batch: 2 on any input error, else 1 on any failure.
pub fn exit_code(reports: &[CaseReport]) -> u8 {
    if reports.iter().any(|r| r.status == Status::InvalidInput) {
        2
    } else if reports.iter().any(|r| r.status != Status::Pass) {
        1
    } else {
        0
    }
}
