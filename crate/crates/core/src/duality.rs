//! Conormal ideals, dual hypersurfaces and the singular-point census of
//! plane curves.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::groebner::{
    eliminate, groebner_basis, hilbert_data, intersect, rational_points_zero_dim, saturate,
    GroebnerError, HilbertData, Ideal,
};
use crate::poly::{Mono, MonomialOrder, Poly, PolyError, Rat, VarList};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("variety is not a hypersurface")]
    NotHypersurface,
    #[error("hypersurface is reducible or non-reduced")]
    Reducible,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square and symmetric")]
    NotSymmetric,
    #[error("a singular point has irrational coordinates")]
    IrrationalSingularity,
    #[error("singular point at {0} is neither a node nor a cusp")]
    UnsupportedSingularity(String),
    #[error("variety is not a plane curve")]
    NotPlaneCurve,
    #[error("dual variety is not a hypersurface (projective dimension {})", .0.projdim)]
    LowerDimensional(HilbertData),
    #[error("invalid variety: {0}")]
    InvalidVariety(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

impl From<PolyError> for DualityError {
    fn from(e: PolyError) -> Self {
        DualityError::Groebner(e.into())
    }
}

/// Coordinates `x0..xn` of the primal projective space.
pub fn primal_vars(n: usize) -> VarList {
    VarList::indexed("x", n + 1)
}

/// Coordinates `y0..yn` of the dual projective space.
pub fn dual_vars(n: usize) -> VarList {
    VarList::indexed("y", n + 1)
}

/// Where the singular points of a census come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusOrigin {
    /// Points were solved for and classified one by one.
    Located,
    /// Counts were obtained from the classical Plücker relations of the
    /// dual curve; no point lists are available.
    Plucker,
}

/// Degree, nodes, cusps and the derived Euler data of a plane curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveCensus {
    pub degree: i64,
    /// Projective points, first nonzero coordinate normalised to 1.
    pub nodes: Vec<Vec<Rat>>,
    pub cusps: Vec<Vec<Rat>>,
    pub delta: i64,
    pub kappa: i64,
    pub geom_genus: i64,
    pub chi: i64,
    /// Euler characteristic weighted by the Euler obstruction, which is 2
    /// at every node and cusp.
    pub chi_bar: i64,
    pub origin: CensusOrigin,
}

impl CurveCensus {
    /// Census from counts alone, deriving genus and Euler data.
    pub fn from_counts(
        degree: i64,
        delta: i64,
        kappa: i64,
        origin: CensusOrigin,
    ) -> Result<Self, DualityError> {
        let geom_genus = (degree - 1) * (degree - 2) / 2 - delta - kappa;
        if degree < 1 || delta < 0 || kappa < 0 || geom_genus < 0 {
            return Err(DualityError::Reducible);
        }
        let chi = 2 - 2 * geom_genus - delta;
        Ok(CurveCensus {
            degree,
            nodes: vec![],
            cusps: vec![],
            delta,
            kappa,
            geom_genus,
            chi,
            chi_bar: chi + delta + kappa,
            origin,
        })
    }

    fn located(
        degree: i64,
        nodes: Vec<Vec<Rat>>,
        cusps: Vec<Vec<Rat>>,
    ) -> Result<Self, DualityError> {
        let mut c = CurveCensus::from_counts(
            degree,
            nodes.len() as i64,
            cusps.len() as i64,
            CensusOrigin::Located,
        )?;
        c.nodes = nodes;
        c.cusps = cusps;
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum VarietyKind {
    /// `V(f)` with `f` homogeneous over `x0..xn`.
    Hypersurface(Poly),
    /// A linear subspace of the given dimension.
    Linear(usize),
    Point,
    /// A plane curve known only through its census.
    Curve {
        degree: i64,
    },
}

/// A subvariety of `P^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjVariety {
    ambient_dim: usize,
    kind: VarietyKind,
    census: Option<CurveCensus>,
}

impl ProjVariety {
    /// `V(f)`; `f` must be homogeneous of positive degree in `n + 1`
    /// variables. The variables are renamed to `x0..xn`.
    pub fn hypersurface(n: usize, f: &Poly) -> Result<Self, DualityError> {
        if n == 0 || f.nvars() != n + 1 {
            return Err(DualityError::InvalidVariety(format!(
                "need {} variables, got {}",
                n + 1,
                f.nvars()
            )));
        }
        if f.homogeneity_degree()? == 0 {
            return Err(DualityError::InvalidVariety("constant polynomial".into()));
        }
        let f = f
            .rename(&primal_vars(n))?
            .with_order(MonomialOrder::GrevLex);
        Ok(ProjVariety {
            ambient_dim: n,
            kind: VarietyKind::Hypersurface(f),
            census: None,
        })
    }

    pub fn linear(n: usize, dim: usize) -> Result<Self, DualityError> {
        if n == 0 || dim > n {
            return Err(DualityError::InvalidVariety(format!(
                "linear dimension {dim} in P^{n}"
            )));
        }
        Ok(ProjVariety {
            ambient_dim: n,
            kind: VarietyKind::Linear(dim),
            census: None,
        })
    }

    pub fn point(n: usize) -> Result<Self, DualityError> {
        if n == 0 {
            return Err(DualityError::InvalidVariety("ambient dimension 0".into()));
        }
        Ok(ProjVariety {
            ambient_dim: n,
            kind: VarietyKind::Point,
            census: None,
        })
    }

    /// A plane curve described by its census only.
    pub fn curve(census: CurveCensus) -> Self {
        ProjVariety {
            ambient_dim: 2,
            kind: VarietyKind::Curve {
                degree: census.degree,
            },
            census: Some(census),
        }
    }

    /// Attaches a precomputed census; only meaningful for plane curves.
    pub fn with_census(mut self, census: CurveCensus) -> Result<Self, DualityError> {
        if !self.is_plane_curve() {
            return Err(DualityError::NotPlaneCurve);
        }
        if census.degree != self.degree() {
            return Err(DualityError::InvalidVariety(
                "census degree differs from curve degree".into(),
            ));
        }
        self.census = Some(census);
        Ok(self)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn kind(&self) -> &VarietyKind {
        &self.kind
    }

    pub fn census(&self) -> Option<&CurveCensus> {
        self.census.as_ref()
    }

    pub fn polynomial(&self) -> Option<&Poly> {
        match &self.kind {
            VarietyKind::Hypersurface(f) => Some(f),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            VarietyKind::Hypersurface(_) => self.ambient_dim - 1,
            VarietyKind::Linear(m) => *m,
            VarietyKind::Point => 0,
            VarietyKind::Curve { .. } => 1,
        }
    }

    pub fn degree(&self) -> i64 {
        match &self.kind {
            VarietyKind::Hypersurface(f) => f.total_degree() as i64,
            VarietyKind::Curve { degree } => *degree,
            _ => 1,
        }
    }

    pub fn is_plane_curve(&self) -> bool {
        self.ambient_dim == 2
            && matches!(
                self.kind,
                VarietyKind::Hypersurface(_) | VarietyKind::Curve { .. }
            )
    }

    /// Hyperplanes and all linear kinds.
    pub fn linear_dim(&self) -> Option<usize> {
        match &self.kind {
            VarietyKind::Linear(m) => Some(*m),
            VarietyKind::Point => Some(0),
            VarietyKind::Hypersurface(f) if f.total_degree() == 1 => Some(self.ambient_dim - 1),
            _ => None,
        }
    }
}

impl fmt::Display for ProjVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ambient_dim;
        match &self.kind {
            VarietyKind::Hypersurface(p) => write!(f, "V({p}) in P^{n}"),
            VarietyKind::Linear(m) => write!(f, "linear P^{m} in P^{n}"),
            VarietyKind::Point => write!(f, "point in P^{n}"),
            VarietyKind::Curve { degree } => write!(f, "plane curve of degree {degree}"),
        }
    }
}

/// The dual variety of a hypersurface.
#[derive(Clone, Debug, PartialEq)]
pub enum DualVariety {
    /// Square-free primitive generator over `y0..yn`.
    Hypersurface(Poly),
    LowerDimensional(HilbertData),
}

fn hypersurface_parts(s: &ProjVariety) -> Result<(usize, &Poly), DualityError> {
    match &s.kind {
        VarietyKind::Hypersurface(f) => Ok((s.ambient_dim, f)),
        _ => Err(DualityError::NotHypersurface),
    }
}

/// `f` and the 2×2 minors of `[y; grad f]` over `x0..xn, y0..yn`,
/// together with the nonzero partials of `f` lifted to the same ring.
fn incidence(n: usize, f: &Poly) -> Result<(VarList, Vec<Poly>, Vec<Poly>), DualityError> {
    let ring = primal_vars(n).concat(&dual_vars(n))?;
    let order = MonomialOrder::GrevLex;
    let lift = |p: &Poly| p.insert_vars(n + 1, &ring);
    let grad: Vec<Poly> = (0..=n)
        .map(|i| f.partial_derivative(i).map(|d| lift(&d)))
        .collect::<Result<_, _>>()?;
    let y: Vec<Poly> = (0..=n)
        .map(|i| Poly::var(n + 1 + i, &ring, order))
        .collect();
    let mut gens = vec![lift(f)];
    for i in 0..=n {
        for j in i + 1..=n {
            gens.push(&(&y[i] * &grad[j]) - &(&y[j] * &grad[i]));
        }
    }
    let mut jac: Vec<Poly> = Vec::new();
    for g in grad.into_iter().filter(|g| !g.is_zero()) {
        if !jac.iter().any(|h| h.is_proportional(&g)) {
            jac.push(g);
        }
    }
    Ok((ring, gens, jac))
}

/// Ideal of the conormal variety of `V(f)` in `P^n × P^n*`: the incidence
/// equations saturated by the Jacobian ideal, so that nothing lying over
/// the singular locus survives.
pub fn conormal_ideal(s: &ProjVariety) -> Result<Ideal, DualityError> {
    let (n, f) = hypersurface_parts(s)?;
    let (ring, gens, jac) = incidence(n, f)?;
    let order = MonomialOrder::GrevLex;
    let base = Ideal::new(gens, &ring, order)?;
    Ok(saturate(&base, &Ideal::new(jac, &ring, order)?)?)
}

/// The ideal of the dual variety in `y0..yn`.
///
/// Saturation and elimination of the primal coordinates are fused: for each
/// partial `g` one elimination of `t, x` from `incidence + <1 - t·g>`, and
/// the results are intersected.
pub fn dual_ideal(s: &ProjVariety) -> Result<Ideal, DualityError> {
    let (n, f) = hypersurface_parts(s)?;
    let (ring, gens, jac) = incidence(n, f)?;
    let order = MonomialOrder::GrevLex;
    if jac.iter().any(Poly::is_constant) {
        return Ok(eliminate(&Ideal::new(gens, &ring, order)?, n + 1)?);
    }
    let ext = VarList::new(std::iter::once("t".to_string()).chain(ring.names().iter().cloned()))?;
    let t = Poly::var(0, &ext, order);
    let one = Poly::one(&ext, order);
    let lifted: Vec<Poly> = gens.iter().map(|g| g.insert_vars(0, &ext)).collect();
    let mut acc: Option<Ideal> = None;
    for g in &jac {
        let mut all = lifted.clone();
        all.push(&one - &(&t * &g.insert_vars(0, &ext)));
        let part = eliminate(&Ideal::new(all, &ext, order)?, n + 2)?;
        acc = Some(match acc {
            None => part,
            Some(prev) if prev.same_ideal(&part) => prev,
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    Ok(acc.expect("a nonconstant form has a nonzero partial"))
}

/// Greatest common divisor of two polynomials over the same ring, up to a
/// scalar, as `a·b / lcm(a, b)` with the lcm generating `<a> ∩ <b>`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly, DualityError> {
    if !a.same_ring(b) {
        return Err(PolyError::VariableMismatch.into());
    }
    if a.is_zero() {
        return Ok(b.primitive());
    }
    if b.is_zero() {
        return Ok(a.primitive());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Poly::one(a.vars(), a.order()));
    }
    if a.is_proportional(b) {
        return Ok(a.primitive());
    }
    let lcm = intersect(
        &Ideal::new(vec![a.clone()], a.vars(), a.order())?,
        &Ideal::new(vec![b.clone()], a.vars(), a.order())?,
    )?;
    let gb = groebner_basis(&lcm);
    debug_assert_eq!(
        gb.basis().len(),
        1,
        "intersection of principal ideals is principal"
    );
    let lcm = &gb.basis()[0];
    Ok((a * b)
        .div_exact(lcm)
        .expect("lcm divides the product")
        .primitive())
}

/// Product of the distinct irreducible factors of `p`, made primitive.
pub fn squarefree_part(p: &Poly) -> Result<Poly, DualityError> {
    if p.is_zero() || p.is_constant() {
        return Ok(p.primitive());
    }
    let mut g = p.clone();
    for i in 0..p.nvars() {
        let d = p.partial_derivative(i)?;
        if d.is_zero() {
            continue;
        }
        g = poly_gcd(&g, &d)?;
        if g.is_constant() {
            return Ok(p.primitive());
        }
    }
    Ok(p.div_exact(&g).expect("gcd divides p").primitive())
}

fn is_squarefree(p: &Poly) -> Result<bool, DualityError> {
    Ok(squarefree_part(p)?.total_degree() == p.total_degree())
}

/// Gcd of all generators of an ideal.
fn content_gcd(ideal: &Ideal) -> Result<Poly, DualityError> {
    let mut it = ideal.generators().iter();
    let mut g = it.next().expect("nonzero ideal").clone();
    for h in it {
        g = poly_gcd(&g, h)?;
        if g.is_constant() {
            break;
        }
    }
    Ok(g)
}

/// Dual of a hypersurface by elimination from its conormal ideal.
///
/// Returns the square-free defining polynomial when the dual is a
/// hypersurface and its Hilbert data otherwise. A union of several
/// hyperplanes or a non-reduced `f` is reported as `Reducible`.
pub fn dual_hypersurface(s: &ProjVariety) -> Result<DualVariety, DualityError> {
    let (n, f) = hypersurface_parts(s)?;
    if !is_squarefree(f)? {
        return Err(DualityError::Reducible);
    }
    let dual = dual_ideal(s)?;
    let h = hilbert_data(&dual)?;
    if h.projdim == n as i64 - 1 {
        let gb = groebner_basis(&dual);
        if gb.basis().len() == 1 {
            return Ok(DualVariety::Hypersurface(squarefree_part(&gb.basis()[0])?));
        }
        // principal up to embedded components?
        let g = squarefree_part(&content_gcd(&dual)?)?;
        if !g.is_constant() {
            let mut power = g.clone();
            for _ in 0..=dual
                .generators()
                .iter()
                .map(Poly::total_degree)
                .max()
                .unwrap_or(0)
            {
                if dual.contains(&power) {
                    return Ok(DualVariety::Hypersurface(g));
                }
                power = &power * &g;
            }
        }
        return Err(DualityError::Reducible);
    }
    if h.projdim == 0 && h.degree > 1 {
        return Err(DualityError::Reducible);
    }
    Ok(DualVariety::LowerDimensional(h))
}

fn symmetric_size(a: &[Vec<Rat>]) -> Result<usize, DualityError> {
    let k = a.len();
    if k == 0 || a.iter().any(|r| r.len() != k) {
        return Err(DualityError::NotSymmetric);
    }
    for i in 0..k {
        for j in 0..i {
            if a[i][j] != a[j][i] {
                return Err(DualityError::NotSymmetric);
            }
        }
    }
    Ok(k)
}

fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let k = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in &mut m[col] {
            *c *= &inv;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..2 * k {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[k..].to_vec()).collect())
}

/// Symmetric matrix `A` with `f = x^T A x`, or `None` if `f` is not a
/// quadratic form.
pub fn quadric_matrix(f: &Poly) -> Option<Vec<Vec<Rat>>> {
    if f.is_zero() || f.homogeneity_degree().ok()? != 2 {
        return None;
    }
    let k = f.nvars();
    let mut a = vec![vec![Rat::zero(); k]; k];
    let half = Rat::new(1.into(), 2.into());
    for (m, c) in f.terms() {
        let idx: Vec<usize> = (0..k).filter(|&i| m.exp(i) > 0).collect();
        match idx.as_slice() {
            [i] => a[*i][*i] = c.clone(),
            [i, j] => {
                a[*i][*j] = c * &half;
                a[*j][*i] = c * &half;
            }
            _ => unreachable!("quadratic monomial"),
        }
    }
    Some(a)
}

/// Closed-form dual of the smooth quadric `x^T A x`: the quadric of
/// `A^{-1}` over `y0..yn`, with integer coefficients and content one.
pub fn quadric_dual(a: &[Vec<Rat>]) -> Result<Poly, DualityError> {
    let k = symmetric_size(a)?;
    if k < 2 {
        return Err(DualityError::InvalidVariety(
            "quadric needs at least two variables".into(),
        ));
    }
    let inv = invert(a).ok_or(DualityError::SingularMatrix)?;
    let vars = dual_vars(k - 1);
    let two = Rat::from_integer(2.into());
    let mut terms = Vec::new();
    for i in 0..k {
        for j in i..k {
            let c = if i == j {
                inv[i][i].clone()
            } else {
                &inv[i][j] * &two
            };
            let m = Mono::var(k, i).mul(&Mono::var(k, j));
            terms.push((m, c));
        }
    }
    Ok(Poly::from_terms(&vars, MonomialOrder::GrevLex, terms).primitive())
}

fn normalize_point(mut p: Vec<Rat>) -> Vec<Rat> {
    if let Some(lead) = p.iter().find(|c| !c.is_zero()).cloned() {
        for c in &mut p {
            *c /= &lead;
        }
    }
    p
}

/// Rational singular points of a plane curve, normalised and sorted.
fn singular_points(f: &Poly) -> Result<Vec<Vec<Rat>>, DualityError> {
    let mut found = Vec::new();
    for chart in 0..3 {
        let local = f.dehomogenize(chart)?;
        let mut gens = vec![local.clone()];
        for i in 0..3 {
            gens.push(f.partial_derivative(i)?.dehomogenize(chart)?);
        }
        let ideal = Ideal::new(gens, local.vars(), MonomialOrder::GrevLex)?;
        let pts = match rational_points_zero_dim(&ideal) {
            Ok(p) => p,
            Err(GroebnerError::NotAllRational) => return Err(DualityError::IrrationalSingularity),
            Err(GroebnerError::NotZeroDimensional) => return Err(DualityError::Reducible),
            Err(e) => return Err(e.into()),
        };
        for mut p in pts {
            p.insert(chart, Rat::one());
            found.push(normalize_point(p));
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

#[derive(Debug, PartialEq, Eq)]
enum SingularityType {
    Node,
    Cusp,
}

fn fmt_point(p: &[Rat]) -> String {
    let coords: Vec<String> = p.iter().map(crate::poly::fmt_rat).collect();
    format!("[{}]", coords.join(":"))
}

/// Node or cusp test from the Taylor expansion at a singular point.
fn classify(f: &Poly, p: &[Rat]) -> Result<SingularityType, DualityError> {
    let unsupported = || DualityError::UnsupportedSingularity(fmt_point(p));
    let chart = p
        .iter()
        .position(|c| !c.is_zero())
        .expect("projective point");
    let affine: Vec<Rat> = p
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != chart)
        .map(|(_, c)| c / &p[chart])
        .collect();
    let local = f.dehomogenize(chart)?.translate(&affine);
    debug_assert!(
        local.homogeneous_component(0).is_zero() && local.homogeneous_component(1).is_zero()
    );
    let q = local.homogeneous_component(2);
    if q.is_zero() {
        return Err(unsupported());
    }
    let u2 = Mono::from_exps([2, 0]);
    let uv = Mono::from_exps([1, 1]);
    let v2 = Mono::from_exps([0, 2]);
    let (a, b, c) = (q.coefficient(&u2), q.coefficient(&uv), q.coefficient(&v2));
    let four = Rat::from_integer(4.into());
    if &b * &b - &four * &a * &c != Rat::zero() {
        return Ok(SingularityType::Node);
    }
    let half = Rat::new(1.into(), 2.into());
    let kernel = if !a.is_zero() {
        vec![-(&b * &half), a]
    } else {
        vec![c, -(&b * &half)]
    };
    if local.homogeneous_component(3).evaluate(&kernel).is_zero() {
        Err(unsupported())
    } else {
        Ok(SingularityType::Cusp)
    }
}

/// Locate and classify the singular points of a plane curve.
///
/// All singular points must be rational nodes or cusps.
pub fn singular_census(s: &ProjVariety) -> Result<CurveCensus, DualityError> {
    if !s.is_plane_curve() {
        return Err(DualityError::NotPlaneCurve);
    }
    if let Some(c) = &s.census {
        return Ok(c.clone());
    }
    let (_, f) = hypersurface_parts(s)?;
    let mut nodes = Vec::new();
    let mut cusps = Vec::new();
    for p in singular_points(f)? {
        match classify(f, &p)? {
            SingularityType::Node => nodes.push(p),
            SingularityType::Cusp => cusps.push(p),
        }
    }
    CurveCensus::located(f.total_degree() as i64, nodes, cusps)
}

/// Degree of the singular scheme `V(f, ∂f)` of a plane curve: the sum of
/// the Tjurina numbers, 1 at a node and 2 at a cusp.
pub fn singular_scheme_degree(s: &ProjVariety) -> Result<i64, DualityError> {
    if !s.is_plane_curve() {
        return Err(DualityError::NotPlaneCurve);
    }
    let (_, f) = hypersurface_parts(s)?;
    let mut gens = vec![f.clone()];
    for i in 0..3 {
        gens.push(f.partial_derivative(i)?);
    }
    let h = hilbert_data(&Ideal::new(gens, f.vars(), MonomialOrder::GrevLex)?)?;
    Ok(if h.projdim < 0 { 0 } else { h.degree })
}

/// Census of the dual curve from the classical Plücker relations:
/// `d' = d(d-1) - 2δ - 3κ`, `κ' = 3d(d-2) - 6δ - 8κ`, equal geometric
/// genus, and `δ'` from the genus formula.
pub fn plucker_dual_census(c: &CurveCensus) -> Result<CurveCensus, DualityError> {
    let (d, delta, kappa) = (c.degree, c.delta, c.kappa);
    let dual_degree = d * (d - 1) - 2 * delta - 3 * kappa;
    let dual_kappa = 3 * d * (d - 2) - 6 * delta - 8 * kappa;
    if dual_degree < 2 {
        return Err(DualityError::InvalidVariety(
            "dual of a line is a point".into(),
        ));
    }
    let arithmetic = (dual_degree - 1) * (dual_degree - 2) / 2;
    let dual_delta = arithmetic - c.geom_genus - dual_kappa;
    CurveCensus::from_counts(dual_degree, dual_delta, dual_kappa, CensusOrigin::Plucker)
}

/// Dual of a plane curve as a variety over `x0, x1, x2` again, so it can be
/// fed back into any operation here.
pub fn dual_as_variety(s: &ProjVariety) -> Result<ProjVariety, DualityError> {
    match dual_hypersurface(s)? {
        DualVariety::Hypersurface(g) => ProjVariety::hypersurface(s.ambient_dim, &g),
        DualVariety::LowerDimensional(h) => Err(DualityError::LowerDimensional(h)),
    }
}

/// True when dualising twice gives back the defining polynomial.
pub fn bidual_check(s: &ProjVariety) -> Result<bool, DualityError> {
    let (_, f) = hypersurface_parts(s)?;
    let dual = dual_as_variety(s)?;
    let back = dual_as_variety(&dual)?;
    Ok(back.polynomial().expect("hypersurface").is_proportional(f))
}

/// Degree of a dual, read from the generator or from Hilbert data.
pub fn dual_degree(d: &DualVariety) -> i64 {
    match d {
        DualVariety::Hypersurface(g) => g.total_degree() as i64,
        DualVariety::LowerDimensional(h) => h.degree,
    }
}
