//! Conormal intersection numbers and the pairing identity
//!
//! ```text
//! C1·C2 + (C1·P)(C2·P) / ((-1)^{n+1}(n+1))
//! ```
//!
//! between two subvarieties of `P^n`, evaluated once from the varieties and
//! once from their duals. The corollaries (dual degree, `χ̄` of the dual, dual
//! codimension, the quadric-section identity) are the specialisations of
//! this identity to linear and quadric partners.
//!
//! Conventions: `C_S·P = (-1)^{dim S} χ̄(S)` and, for a transverse
//! intersection, `C1·C2 = (-1)^{dim(S1∩S2)} χ̄(S1∩S2)` with the empty set
//! contributing 0.

use num_traits::One;
use thiserror::Error;

use crate::charclasses::{
    chi_bar_of, chi_complete_intersection, is_smooth_hypersurface, section_profile, CharError,
};
use crate::duality::{
    dual_as_variety, plucker_dual_census, primal_vars, quadric_dual, quadric_matrix,
    singular_census, singular_scheme_degree, DualityError, ProjVariety, VarietyKind,
};
use crate::poly::{Mono, MonomialOrder, Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PluckerError {
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error(transparent)]
    Char(#[from] CharError),
}

impl From<DualityError> for PluckerError {
    fn from(e: DualityError) -> Self {
        PluckerError::Char(e.into())
    }
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// How a transverse intersection looks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionMeta {
    Empty,
    FinitePoints(i64),
    SmoothOfDim { dim: usize, chi_bar: i64 },
}

/// How duals are obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DualRoute {
    /// Elimination from the conormal ideal, then a census of the result.
    #[default]
    Elimination,
    /// Closed forms: linear spaces, quadrics via the inverse matrix, and
    /// plane curves via the classical Plücker relations.
    Analytic,
    /// Elimination, falling back to the Plücker census of the eliminated
    /// curve when its singular points are not rational.
    Auto,
}

/// `C_S · P = (-1)^{dim S} χ̄(S)`.
pub fn conormal_dot_zero(s: &ProjVariety) -> Result<i64, PluckerError> {
    Ok(sign(s.dim()) * chi_bar_of(s)?)
}

fn both_smooth_hypersurfaces(a: &ProjVariety, b: &ProjVariety) -> Result<bool, PluckerError> {
    for s in [a, b] {
        match s.kind() {
            VarietyKind::Hypersurface(_) if s.degree() == 1 || is_smooth_hypersurface(s)? => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// The intersection of two varieties in general position, when it can be
/// described: empty below the expected dimension, Bézout points at
/// dimension zero, a generic linear section or a smooth complete
/// intersection above.
pub fn generic_intersection(
    s1: &ProjVariety,
    s2: &ProjVariety,
) -> Result<IntersectionMeta, PluckerError> {
    let n = s1.ambient_dim();
    if s2.ambient_dim() != n {
        return Err(PluckerError::UnsupportedConfiguration(
            "different ambient spaces".into(),
        ));
    }
    if let (Some(f), Some(g)) = (s1.polynomial(), s2.polynomial()) {
        if f.is_proportional(g) {
            return Err(PluckerError::UnsupportedConfiguration(
                "identical hypersurfaces do not meet transversely".into(),
            ));
        }
    }
    let expected = (s1.dim() + s2.dim()) as i64 - n as i64;
    if expected < 0 {
        return Ok(IntersectionMeta::Empty);
    }
    if expected == 0 {
        return Ok(IntersectionMeta::FinitePoints(s1.degree() * s2.degree()));
    }
    let dim = expected as usize;
    for (a, b) in [(s1, s2), (s2, s1)] {
        if let Some(m) = b.linear_dim() {
            let chi_bar = section_profile(a)?.get(n - m);
            return Ok(IntersectionMeta::SmoothOfDim { dim, chi_bar });
        }
    }
    if both_smooth_hypersurfaces(s1, s2)? {
        let chi_bar = chi_complete_intersection(n, &[s1.degree(), s2.degree()]);
        return Ok(IntersectionMeta::SmoothOfDim { dim, chi_bar });
    }
    Err(PluckerError::UnsupportedConfiguration(format!(
        "no generic description of {s1} ∩ {s2}"
    )))
}

/// Checks a declared intersection against dimension and Bézout counts.
fn validate(
    s1: &ProjVariety,
    s2: &ProjVariety,
    meta: &IntersectionMeta,
) -> Result<(), PluckerError> {
    let expected = (s1.dim() + s2.dim()) as i64 - s1.ambient_dim() as i64;
    let bad = |why: String| Err(PluckerError::UnsupportedConfiguration(why));
    match meta {
        IntersectionMeta::Empty if expected >= 0 => {
            bad(format!("{s1} and {s2} cannot be disjoint"))
        }
        IntersectionMeta::FinitePoints(_) if expected != 0 => bad(format!(
            "expected intersection dimension {expected}, declared points"
        )),
        IntersectionMeta::FinitePoints(c) if *c != s1.degree() * s2.degree() => bad(format!(
            "transverse intersection has {} points, declared {c}",
            s1.degree() * s2.degree()
        )),
        IntersectionMeta::SmoothOfDim { dim, .. } if *dim as i64 != expected => bad(format!(
            "expected intersection dimension {expected}, declared {dim}"
        )),
        IntersectionMeta::SmoothOfDim { chi_bar, .. } => match generic_intersection(s1, s2) {
            Ok(IntersectionMeta::SmoothOfDim { chi_bar: g, .. }) if g != *chi_bar => bad(format!(
                "generic section has weighted Euler characteristic {g}, declared {chi_bar}"
            )),
            _ => Ok(()),
        },
        _ => Ok(()),
    }
}

/// `C1 · C2` for a transverse intersection described by `meta`.
pub fn conormal_dot(
    s1: &ProjVariety,
    s2: &ProjVariety,
    meta: &IntersectionMeta,
) -> Result<i64, PluckerError> {
    validate(s1, s2, meta)?;
    Ok(match meta {
        IntersectionMeta::Empty => 0,
        IntersectionMeta::FinitePoints(c) => *c,
        IntersectionMeta::SmoothOfDim { dim, chi_bar } => sign(*dim) * chi_bar,
    })
}

fn resolve_meta(
    s1: &ProjVariety,
    s2: &ProjVariety,
    meta: Option<&IntersectionMeta>,
) -> Result<IntersectionMeta, PluckerError> {
    match meta {
        Some(m) => Ok(m.clone()),
        None => generic_intersection(s1, s2),
    }
}

/// `a + p1·p2 / ((-1)^{n+1}(n+1))`.
pub fn theorem1_side(a: &Rat, p1: &Rat, p2: &Rat, n: usize) -> Rat {
    let denom = Rat::from_integer((sign(n + 1) * (n as i64 + 1)).into());
    a + p1 * p2 / denom
}

fn side(a: i64, p1: i64, p2: i64, n: usize) -> Rat {
    theorem1_side(
        &Rat::from_integer(a.into()),
        &Rat::from_integer(p1.into()),
        &Rat::from_integer(p2.into()),
        n,
    )
}

/// The dual of a variety in `P^n*`, by the chosen route.
pub fn dual_variety(s: &ProjVariety, route: DualRoute) -> Result<ProjVariety, PluckerError> {
    let n = s.ambient_dim();
    if let Some(m) = s.linear_dim() {
        if m == n {
            return Err(PluckerError::UnsupportedConfiguration(
                "the whole space has empty dual".into(),
            ));
        }
        return Ok(match n - 1 - m {
            0 => ProjVariety::point(n)?,
            k => ProjVariety::linear(n, k)?,
        });
    }
    match (route, s.kind()) {
        (_, VarietyKind::Curve { .. }) | (DualRoute::Analytic, VarietyKind::Hypersurface(_))
            if s.is_plane_curve() =>
        {
            let census = singular_census(s)?;
            Ok(ProjVariety::curve(plucker_dual_census(&census)?))
        }
        (DualRoute::Analytic, VarietyKind::Hypersurface(f)) => {
            let a = quadric_matrix(f).ok_or_else(|| {
                PluckerError::UnsupportedConfiguration(format!("no closed-form dual for {s}"))
            })?;
            Ok(ProjVariety::hypersurface(n, &quadric_dual(&a)?)?)
        }
        (DualRoute::Elimination, _) => Ok(dual_as_variety(s)?),
        (DualRoute::Auto, _) => {
            let dual = dual_as_variety(s)?;
            if !dual.is_plane_curve() {
                return Ok(dual);
            }
            match singular_census(&dual) {
                Ok(c) => Ok(dual.with_census(c)?),
                Err(DualityError::IrrationalSingularity) => {
                    let census = plucker_dual_census(&singular_census(s)?)?;
                    // the counts must account for the whole singular scheme
                    if singular_scheme_degree(&dual)? != census.delta + 2 * census.kappa {
                        return Err(PluckerError::UnsupportedConfiguration(format!(
                            "dual of {s} has singularities beyond nodes and cusps"
                        )));
                    }
                    Ok(dual.with_census(census)?)
                }
                Err(e) => Err(e.into()),
            }
        }
        _ => unreachable!("all kinds covered"),
    }
}

/// The six intersection numbers entering both sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingParts {
    pub c1_c2: i64,
    pub c1_p: i64,
    pub c2_p: i64,
    pub dual_c1_c2: i64,
    pub dual_c1_p: i64,
    pub dual_c2_p: i64,
}

/// Both sides of the pairing identity for a pair and its dual pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    pub lhs: Rat,
    pub rhs: Rat,
    pub parts: PairingParts,
    pub equal: bool,
}

/// Evaluates the identity from the primal pair (left) and from the dual
/// pair (right). Intersections default to general position.
pub fn theorem1_check(
    s1: &ProjVariety,
    s2: &ProjVariety,
    primal_meta: Option<&IntersectionMeta>,
    dual_meta: Option<&IntersectionMeta>,
    route: DualRoute,
) -> Result<PairingReport, PluckerError> {
    let n = s1.ambient_dim();
    let meta = resolve_meta(s1, s2, primal_meta)?;
    let c1_c2 = conormal_dot(s1, s2, &meta)?;
    let c1_p = conormal_dot_zero(s1)?;
    let c2_p = conormal_dot_zero(s2)?;

    let d1 = dual_variety(s1, route)?;
    let d2 = dual_variety(s2, route)?;
    let dmeta = resolve_meta(&d1, &d2, dual_meta)?;
    let dual_c1_c2 = conormal_dot(&d1, &d2, &dmeta)?;
    let dual_c1_p = conormal_dot_zero(&d1)?;
    let dual_c2_p = conormal_dot_zero(&d2)?;

    let lhs = side(c1_c2, c1_p, c2_p, n);
    let rhs = side(dual_c1_c2, dual_c1_p, dual_c2_p, n);
    Ok(PairingReport {
        equal: lhs == rhs,
        lhs,
        rhs,
        parts: PairingParts {
            c1_c2,
            c1_p,
            c2_p,
            dual_c1_c2,
            dual_c1_p,
            dual_c2_p,
        },
    })
}

/// The identity with a generic `m`-plane as partner.
pub fn pairing_relation(
    s: &ProjVariety,
    m: usize,
    route: DualRoute,
) -> Result<PairingReport, PluckerError> {
    let plane = ProjVariety::linear(s.ambient_dim(), m)?;
    theorem1_check(s, &plane, None, None, route)
}

/// Degree of the dual, `(-1)^{dim S}(χ̄(S) - 2χ̄(S¹) + χ̄(S²))`.
pub fn corollary1_deg_dual(s: &ProjVariety) -> Result<i64, PluckerError> {
    let p = section_profile(s)?;
    Ok(sign(s.dim()) * (p.get(0) - 2 * p.get(1) + p.get(2)))
}

/// Codimension of the dual: the largest `c` with
/// `χ̄(S^k) = k·χ̄(S¹) + (1-k)·χ̄(S)` for every `k ≤ c`.
pub fn corollary3_dual_codim(s: &ProjVariety) -> Result<usize, PluckerError> {
    let p = section_profile(s)?;
    let linear = |k: usize| k as i64 * p.get(1) + (1 - k as i64) * p.get(0);
    let mut c = 1;
    while c + 1 < p.len() && p.get(c + 1) == linear(c + 1) {
        c += 1;
    }
    Ok(c)
}

/// `χ̄` of the dual,
/// `(-1)^{n+1+dim S+dim S∨}(n·χ̄(S) - (n+1)·χ̄(S¹))` with `dim S∨` from
/// the dual codimension. For hypersurface duals the sign is `(-1)^{dim S}`.
pub fn corollary2_chi_bar_dual(s: &ProjVariety, n: usize) -> Result<i64, PluckerError> {
    if n != s.ambient_dim() {
        return Err(PluckerError::UnsupportedConfiguration(format!(
            "{s} does not live in P^{n}"
        )));
    }
    let p = section_profile(s)?;
    let dual_dim = n - corollary3_dual_codim(s)?;
    let n_i = n as i64;
    Ok(sign(n + 1 + s.dim() + dual_dim) * (n_i * p.get(0) - (n_i + 1) * p.get(1)))
}

/// `1 + (1 + (-1)^n) / (2n)`.
fn quadric_factor(n: usize) -> Rat {
    Rat::one() + Rat::new((1 + sign(n)).into(), (2 * n as i64).into())
}

/// General quadric of `P^n`, as an abstract smooth hypersurface.
fn general_quadric(n: usize) -> Result<ProjVariety, PluckerError> {
    let terms = (0..=n).map(|i| (Mono::var(n + 1, i).mul(&Mono::var(n + 1, i)), Rat::one()));
    let q = Poly::from_terms(&primal_vars(n), MonomialOrder::GrevLex, terms);
    Ok(ProjVariety::hypersurface(n, &q)?)
}

/// `χ̄(S) - χ̂(S∩Q)·(1 + (1+(-1)^n)/(2n))` on `S` (left) and on `S∨` (right),
/// where `χ̂(S∩Q) = (-1)^{n-2} C_S·C_Q` for a general quadric `Q`.
pub fn corollary4_check(s: &ProjVariety, route: DualRoute) -> Result<PairingReport, PluckerError> {
    let n = s.ambient_dim();
    if n < 2
        || !matches!(
            s.kind(),
            VarietyKind::Hypersurface(_) | VarietyKind::Curve { .. }
        )
    {
        return Err(PluckerError::UnsupportedConfiguration(format!(
            "{s} is not a hypersurface"
        )));
    }
    let dual = dual_variety(s, route)?;
    if dual.dim() + 1 != n {
        return Err(PluckerError::UnsupportedConfiguration(format!(
            "dual of {s} is not a hypersurface"
        )));
    }
    let q = general_quadric(n)?;
    let factor = quadric_factor(n);
    let evaluate = |v: &ProjVariety| -> Result<(Rat, i64, i64), PluckerError> {
        let dot = conormal_dot(v, &q, &quadric_section(v)?)?;
        let hat = sign(n - 2) * dot;
        let chi_bar = chi_bar_of(v)?;
        Ok((
            Rat::from_integer(chi_bar.into()) - Rat::from_integer(hat.into()) * &factor,
            dot,
            chi_bar,
        ))
    };
    let (lhs, c1_c2, chi_s) = evaluate(s)?;
    let (rhs, dual_c1_c2, chi_dual) = evaluate(&dual)?;
    let qp = conormal_dot_zero(&q)?;
    Ok(PairingReport {
        equal: lhs == rhs,
        lhs,
        rhs,
        parts: PairingParts {
            c1_c2,
            c1_p: sign(s.dim()) * chi_s,
            c2_p: qp,
            dual_c1_c2,
            dual_c1_p: sign(dual.dim()) * chi_dual,
            dual_c2_p: qp,
        },
    })
}

/// `S ∩ Q` for a general quadric: Bézout points on curves, a smooth
/// complete intersection otherwise.
fn quadric_section(s: &ProjVariety) -> Result<IntersectionMeta, PluckerError> {
    let n = s.ambient_dim();
    if n == 2 {
        return Ok(IntersectionMeta::FinitePoints(2 * s.degree()));
    }
    if s.polynomial().is_some() && is_smooth_hypersurface(s)? {
        return Ok(IntersectionMeta::SmoothOfDim {
            dim: n - 2,
            chi_bar: chi_complete_intersection(n, &[s.degree(), 2]),
        });
    }
    Err(PluckerError::UnsupportedConfiguration(format!(
        "section of singular {s} by a quadric"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, ratio};

    fn hyp(n: usize, s: &str) -> ProjVariety {
        ProjVariety::hypersurface(n, &parse_polynomial(s, &primal_vars(n)).unwrap()).unwrap()
    }

    const NODAL: &str = "x0*x2^2 - x1^3 + 3*x0*x1^2";
    const CUSPIDAL: &str = "x0*x2^2 - x1^3";
    const CONIC: &str = "x0*x2 - x1^2";

    #[test]
    fn dot_with_zero_section() {
        assert_eq!(
            conormal_dot_zero(&ProjVariety::point(1).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            conormal_dot_zero(&ProjVariety::linear(2, 1).unwrap()).unwrap(),
            -2
        );
        assert_eq!(conormal_dot_zero(&hyp(2, NODAL)).unwrap(), -2);
    }

    #[test]
    fn dot_of_pairs() {
        let line = ProjVariety::linear(2, 1).unwrap();
        let other = hyp(2, "x0 + x1");
        assert_eq!(
            conormal_dot(&line, &other, &generic_intersection(&line, &other).unwrap()).unwrap(),
            1
        );
        let nodal = hyp(2, NODAL);
        assert_eq!(
            conormal_dot(&nodal, &line, &IntersectionMeta::FinitePoints(3)).unwrap(),
            3
        );
        let quartic = hyp(2, "x0^4 + x1^4 + x2^4");
        let pt = ProjVariety::point(2).unwrap();
        assert_eq!(
            conormal_dot(&pt, &quartic, &IntersectionMeta::Empty).unwrap(),
            0
        );
        assert!(conormal_dot(&nodal, &line, &IntersectionMeta::FinitePoints(2)).is_err());
        assert!(conormal_dot(&pt, &quartic, &IntersectionMeta::FinitePoints(1)).is_err());
    }

    #[test]
    fn side_examples() {
        let r = |n: i64| Rat::from_integer(n.into());
        assert_eq!(theorem1_side(&r(1), &r(-2), &r(-2), 2), ratio(-1, 3));
        assert_eq!(theorem1_side(&r(0), &r(1), &r(1), 1), ratio(1, 2));
        assert_eq!(theorem1_side(&r(0), &r(0), &r(7), 4), r(0));
    }

    fn check(a: &ProjVariety, b: &ProjVariety, route: DualRoute) -> PairingReport {
        let r = theorem1_check(a, b, None, None, route).unwrap();
        assert!(r.equal, "{r:?}");
        r
    }

    #[test]
    fn pairing_on_curated_pairs() {
        let line = ProjVariety::linear(2, 1).unwrap();
        assert_eq!(
            check(&line, &hyp(2, "x0 + x1 + x2"), DualRoute::Elimination).lhs,
            ratio(-1, 3)
        );
        let p = ProjVariety::point(1).unwrap();
        assert_eq!(check(&p, &p, DualRoute::Elimination).lhs, ratio(1, 2));
        assert_eq!(
            check(
                &hyp(2, CONIC),
                &hyp(2, "x0^2 + x1^2 - x2^2"),
                DualRoute::Elimination
            )
            .lhs,
            ratio(8, 3)
        );
        let r = check(&hyp(2, NODAL), &line, DualRoute::Elimination);
        assert_eq!(r.lhs, ratio(5, 3));
        assert_eq!(r.parts.dual_c1_p, -5);
        assert_eq!(
            check(&hyp(2, CUSPIDAL), &line, DualRoute::Elimination).lhs,
            ratio(1, 1)
        );
        let r = check(
            &hyp(2, "x0^3 + x1^3 + x2^3"),
            &hyp(2, CONIC),
            DualRoute::Auto,
        );
        assert_eq!(r.lhs, ratio(6, 1));
        assert_eq!((r.parts.dual_c1_c2, r.parts.dual_c1_p), (12, -9));
    }

    #[test]
    fn elimination_and_analytic_routes_agree() {
        for f in [NODAL, CUSPIDAL, CONIC] {
            let a = pairing_relation(&hyp(2, f), 1, DualRoute::Elimination).unwrap();
            let b = pairing_relation(&hyp(2, f), 1, DualRoute::Analytic).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn pairing_with_planes() {
        let r = pairing_relation(&hyp(2, CONIC), 1, DualRoute::Elimination).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, ratio(2, 3));
        let r = pairing_relation(
            &ProjVariety::linear(2, 1).unwrap(),
            0,
            DualRoute::Elimination,
        )
        .unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, ratio(2, 3));
        let quadric = hyp(3, "x0*x3 - x1*x2");
        for m in 0..3 {
            assert!(
                pairing_relation(&quadric, m, DualRoute::Elimination)
                    .unwrap()
                    .equal
            );
        }
    }

    #[test]
    fn corollaries_on_curves_and_quadrics() {
        let quadric = hyp(3, "x0*x3 - x1*x2");
        let line = ProjVariety::linear(2, 1).unwrap();
        assert_eq!(corollary1_deg_dual(&hyp(2, CONIC)).unwrap(), 2);
        assert_eq!(corollary1_deg_dual(&hyp(2, NODAL)).unwrap(), 4);
        assert_eq!(corollary1_deg_dual(&hyp(2, CUSPIDAL)).unwrap(), 3);
        assert_eq!(corollary1_deg_dual(&quadric).unwrap(), 2);

        assert_eq!(corollary2_chi_bar_dual(&hyp(2, CONIC), 2).unwrap(), 2);
        assert_eq!(corollary2_chi_bar_dual(&hyp(2, NODAL), 2).unwrap(), 5);
        assert_eq!(corollary2_chi_bar_dual(&quadric, 3).unwrap(), 4);
        assert_eq!(corollary2_chi_bar_dual(&line, 2).unwrap(), 1);

        assert_eq!(corollary3_dual_codim(&quadric).unwrap(), 1);
        assert_eq!(corollary3_dual_codim(&line).unwrap(), 2);
        assert_eq!(corollary3_dual_codim(&hyp(2, NODAL)).unwrap(), 1);
    }

    #[test]
    fn quadric_section_identity() {
        for (f, v) in [(NODAL, -7), (CONIC, -4), (CUSPIDAL, -6)] {
            let r = corollary4_check(&hyp(2, f), DualRoute::Elimination).unwrap();
            assert!(r.equal);
            assert_eq!(r.lhs, Rat::from_integer(v.into()));
        }
        let r = corollary4_check(&hyp(3, "x0*x3 - x1*x2"), DualRoute::Analytic).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, Rat::from_integer(4.into()));
    }
}
