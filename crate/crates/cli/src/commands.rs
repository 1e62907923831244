//! The single-computation subcommands. Each returns the text to print.

use plucker_core::charclasses::{chi_bar_of, chi_quadric, section_profile};
use plucker_core::chowring::{ext_identity, p_self_intersection};
use plucker_core::duality::{
    dual_hypersurface, singular_census, CensusOrigin, CurveCensus, DualVariety, ProjVariety,
};
use plucker_core::plucker::dual_variety;
use plucker_core::Rat;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::Format;
use crate::suite::Route;

fn render(value: Value, text: String, format: Format) -> String {
    match format {
        Format::Json | Format::Csv => {
            let mut s = serde_json::to_string_pretty(&value).expect("json");
            s.push('\n');
            s
        }
        Format::Text => text,
    }
}

fn point(p: &[Rat]) -> String {
    let coords: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("[{}]", coords.join(":"))
}

fn census_json(c: &CurveCensus) -> Value {
    let pts = |v: &[Vec<Rat>]| v.iter().map(|p| point(p)).collect::<Vec<_>>();
    json!({
        "degree": c.degree,
        "nodes": c.delta,
        "cusps": c.kappa,
        "node_points": pts(&c.nodes),
        "cusp_points": pts(&c.cusps),
        "geometric_genus": c.geom_genus,
        "chi": c.chi,
        "chi_bar": c.chi_bar,
        "origin": match c.origin {
            CensusOrigin::Located => "located",
            CensusOrigin::Plucker => "plucker",
        },
    })
}

fn census_text(c: &CurveCensus) -> String {
    let mut s = format!(
        "degree {}, {} node(s), {} cusp(s), geometric genus {}, chi {}, chi_bar {}\n",
        c.degree, c.delta, c.kappa, c.geom_genus, c.chi, c.chi_bar
    );
    for p in &c.nodes {
        s.push_str(&format!("node {}\n", point(p)));
    }
    for p in &c.cusps {
        s.push_str(&format!("cusp {}\n", point(p)));
    }
    if c.origin == CensusOrigin::Plucker {
        s.push_str("counts from the Plücker relations; no point lists\n");
    }
    s
}

pub fn dual(s: &ProjVariety, route: Route, format: Format) -> Result<String, CliError> {
    // linear spaces and points dualise in closed form on every route
    if route == Route::Elimination && s.polynomial().is_some() {
        return Ok(match dual_hypersurface(s).map_err(CliError::compute)? {
            DualVariety::Hypersurface(g) => render(
                json!({"kind": "hypersurface", "degree": g.total_degree(), "polynomial": g.to_string()}),
                format!("{g}\ndegree {}\n", g.total_degree()),
                format,
            ),
            DualVariety::LowerDimensional(h) => render(
                json!({"kind": "lower-dimensional", "dimension": h.projdim, "degree": h.degree}),
                format!("dual of dimension {} and degree {}\n", h.projdim, h.degree),
                format,
            ),
        });
    }
    let d = dual_variety(s, route.into()).map_err(CliError::compute)?;
    let mut value = json!({"kind": "variety", "dimension": d.dim(), "degree": d.degree()});
    let mut text = format!("{d}\ndimension {}, degree {}\n", d.dim(), d.degree());
    if let Some(f) = d.polynomial() {
        value["polynomial"] = json!(f.to_string());
    }
    if let Some(c) = d.census() {
        value["census"] = census_json(c);
        text.push_str(&census_text(c));
    }
    Ok(render(value, text, format))
}

pub fn census(s: &ProjVariety, format: Format) -> Result<String, CliError> {
    let c = singular_census(s).map_err(CliError::compute)?;
    Ok(render(census_json(&c), census_text(&c), format))
}

pub fn chi(s: &ProjVariety, format: Format) -> Result<String, CliError> {
    let v = chi_bar_of(s).map_err(CliError::compute)?;
    Ok(render(json!({"chi_bar": v}), format!("{v}\n"), format))
}

pub fn chi_of_quadric(m: usize, format: Format) -> Result<String, CliError> {
    if m == 0 {
        return Err(CliError::Input(
            "quadric dimension must be at least 1".into(),
        ));
    }
    let v = chi_quadric(m);
    Ok(render(
        json!({"quadric_dim": m, "chi": v}),
        format!("{v}\n"),
        format,
    ))
}

pub fn profile(s: &ProjVariety, format: Format) -> Result<String, CliError> {
    let p = section_profile(s).map_err(CliError::compute)?;
    let text: Vec<String> = p.values.iter().map(|v| v.to_string()).collect();
    Ok(render(
        json!({"profile": p.values}),
        format!("{}\n", text.join(" ")),
        format,
    ))
}

pub fn chow_pp(n: usize, format: Format) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let v = p_self_intersection(n);
    Ok(render(json!({"n": n, "pp": v}), format!("{v}\n"), format))
}

pub fn chow_ext(n: usize, a: &Rat, p1: &Rat, p2: &Rat, format: Format) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let e = ext_identity(n, a, p1, p2);
    let value = json!({
        "n": n,
        "expanded": e.expanded.to_string(),
        "closed": e.closed.to_string(),
        "holds": e.holds,
    });
    let text = format!(
        "expanded {}\nclosed   {}\nholds    {}\n",
        e.expanded, e.closed, e.holds
    );
    let out = render(value, text, format);
    if e.holds {
        Ok(out)
    } else {
        Err(CliError::Compute(out))
    }
}
