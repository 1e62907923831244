use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Mono, MonomialOrder, PolyError, Rat, VarList};

/// Sparse polynomial with exact rational coefficients.
///
/// Invariants: no zero coefficients, at most one term per monomial, and
/// terms strictly decreasing under `order`.
#[derive(Clone)]
pub struct Poly {
    terms: Vec<(Mono, Rat)>,
    vars: VarList,
    order: MonomialOrder,
}

impl Poly {
    pub fn zero(vars: &VarList, order: MonomialOrder) -> Self {
        Poly {
            terms: Vec::new(),
            vars: vars.clone(),
            order,
        }
    }

    pub fn constant(c: Rat, vars: &VarList, order: MonomialOrder) -> Self {
        let mut p = Poly::zero(vars, order);
        if !c.is_zero() {
            p.terms.push((Mono::one(vars.len()), c));
        }
        p
    }

    pub fn one(vars: &VarList, order: MonomialOrder) -> Self {
        Poly::constant(Rat::one(), vars, order)
    }

    pub fn var(i: usize, vars: &VarList, order: MonomialOrder) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        Poly {
            terms: vec![(Mono::var(vars.len(), i), Rat::one())],
            vars: vars.clone(),
            order,
        }
    }

    pub fn monomial(m: Mono, c: Rat, vars: &VarList, order: MonomialOrder) -> Self {
        assert_eq!(m.nvars(), vars.len());
        let mut p = Poly::zero(vars, order);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I>(vars: &VarList, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Mono, Rat)>,
    {
        let mut terms: Vec<(Mono, Rat)> = terms.into_iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, Rat)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len());
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly {
            terms: out,
            vars: vars.clone(),
            order,
        }
    }

    /// Terms already sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(
        vars: &VarList,
        order: MonomialOrder,
        terms: Vec<(Mono, Rat)>,
    ) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly {
            terms,
            vars: vars.clone(),
            order,
        }
    }

    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Rat)> {
        self.terms
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Mono> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rat> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Largest total degree of any term; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Mono) -> Rat {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Same polynomial, re-sorted under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Poly {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly {
            terms,
            vars: self.vars.clone(),
            order,
        }
    }

    pub fn same_ring(&self, other: &Poly) -> bool {
        self.order == other.order && self.vars == other.vars
    }

    fn check_ring(&self, other: &Poly) -> Result<(), PolyError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        Ok(self.axpy(&Rat::one(), &Mono::one(self.nvars()), other))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        Ok(self.axpy(&-Rat::one(), &Mono::one(self.nvars()), other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Poly::zero(&self.vars, self.order);
        for (m, c) in &small.terms {
            acc = acc.axpy(c, m, big);
        }
        Ok(acc)
    }

    pub fn try_pow(&self, e: i64) -> Result<Poly, PolyError> {
        if e < 0 {
            return Err(PolyError::NegativeExponent(e));
        }
        Ok(self.pow(e as u32))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.vars, self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars, self.order);
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
            vars: self.vars.clone(),
            order: self.order,
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Rat, m: &Mono) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars, self.order);
        }
        Poly {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
            vars: self.vars.clone(),
            order: self.order,
        }
    }

    /// `self + c * m * other`, by a single sorted merge.
    pub fn axpy(&self, c: &Rat, m: &Mono, other: &Poly) -> Poly {
        debug_assert!(self.same_ring(other));
        Poly {
            terms: merge_axpy(&self.terms, c, m, &other.terms, self.order),
            vars: self.vars.clone(),
            order: self.order,
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Integer coefficients with content one and a positive leading
    /// coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&den / c.denom());
            content = content.gcd(&n);
        }
        let mut factor = Rat::new(den, content);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// True when `self = c * other` for some nonzero rational `c`.
    pub fn is_proportional(&self, other: &Poly) -> bool {
        if !self.same_ring(other) || self.len() != other.len() || self.is_zero() {
            return self.same_ring(other) && self.is_zero() && other.is_zero();
        }
        let r = &self.terms[0].1 / &other.terms[0].1;
        self.terms
            .iter()
            .zip(&other.terms)
            .all(|((ma, ca), (mb, cb))| ma == mb && *ca == cb * &r)
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Poly, PolyError> {
        if var >= self.nvars() {
            return Err(PolyError::VariableOutOfRange(var));
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(var);
            if e == 0 {
                return None;
            }
            let mut m2 = m.clone();
            m2.set_exp(var, e - 1);
            Some((m2, c * Rat::from_integer(BigInt::from(e))))
        });
        Ok(Poly::from_terms(&self.vars, self.order, terms))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.total_degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Common total degree of all terms.
    pub fn homogeneity_degree(&self) -> Result<u32, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.is_homogeneous() {
            Ok(self.terms[0].0.total_degree())
        } else {
            Err(PolyError::NotHomogeneous)
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .cloned()
                .collect(),
            vars: self.vars.clone(),
            order: self.order,
        }
    }

    /// Sets variable `chart` to one and drops it from the variable list.
    pub fn dehomogenize(&self, chart: usize) -> Result<Poly, PolyError> {
        if chart >= self.nvars() {
            return Err(PolyError::VariableOutOfRange(chart));
        }
        let vars = self.vars.without(chart..chart + 1)?;
        Ok(Poly::from_terms(
            &vars,
            self.order,
            self.terms
                .iter()
                .map(|(m, c)| (m.drop_vars(chart..chart + 1), c.clone())),
        ))
    }

    /// Inserts new variables (absent from every term) at position `at`.
    pub fn insert_vars(&self, at: usize, vars: &VarList) -> Poly {
        let count = vars.len() - self.nvars();
        Poly::from_terms(
            vars,
            self.order,
            self.terms
                .iter()
                .map(|(m, c)| (m.insert_vars(at, count), c.clone())),
        )
    }

    /// Drops variables in `range`; caller ensures they do not occur.
    pub fn drop_vars(
        &self,
        range: std::ops::Range<usize>,
        vars: &VarList,
        order: MonomialOrder,
    ) -> Poly {
        debug_assert!(self
            .terms
            .iter()
            .all(|(m, _)| range.clone().all(|i| m.exp(i) == 0)));
        Poly::from_terms(
            vars,
            order,
            self.terms
                .iter()
                .map(|(m, c)| (m.drop_vars(range.clone()), c.clone())),
        )
    }

    /// Same terms over a renamed variable list of equal length.
    pub fn rename(&self, vars: &VarList) -> Result<Poly, PolyError> {
        if vars.len() != self.nvars() {
            return Err(PolyError::VariableMismatch);
        }
        Ok(Poly {
            terms: self.terms.clone(),
            vars: vars.clone(),
            order: self.order,
        })
    }

    /// True when every term avoids the variables in `range`.
    pub fn avoids(&self, range: std::ops::Range<usize>) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| range.clone().all(|i| m.exp(i) == 0))
    }

    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.exps().iter().zip(point) {
                if *e > 0 {
                    t *= num_traits::pow(x.clone(), *e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `x_i -> x_i + shift_i` for every variable.
    pub fn translate(&self, shift: &[Rat]) -> Poly {
        assert_eq!(shift.len(), self.nvars());
        let n = self.nvars();
        let linear: Vec<Poly> = (0..n)
            .map(|i| {
                Poly::var(i, &self.vars, self.order)
                    .try_add(&Poly::constant(shift[i].clone(), &self.vars, self.order))
                    .expect("same ring")
            })
            .collect();
        let mut acc = Poly::zero(&self.vars, self.order);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone(), &self.vars, self.order);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = &t * &linear[i].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(self.same_ring(d));
        let (lm, lc) = (d.leading_monomial()?, d.leading_coefficient()?);
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.vars, self.order);
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = c / lc;
            rem = rem.axpy(&-qc.clone(), &qm, d);
            quot = quot.axpy(&qc, &qm, &Poly::one(&self.vars, self.order));
        }
        Some(quot)
    }
}

/// `a + c * m * b` for sorted term lists.
pub(crate) fn merge_axpy(
    a: &[(Mono, Rat)],
    c: &Rat,
    m: &Mono,
    b: &[(Mono, Rat)],
    order: MonomialOrder,
) -> Vec<(Mono, Rat)> {
    if c.is_zero() || b.is_empty() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut bj: Option<Mono> = None;
    while i < a.len() || j < b.len() {
        if j < b.len() && bj.is_none() {
            bj = Some(b[j].0.mul(m));
        }
        let ord = match (i < a.len(), j < b.len()) {
            (true, true) => order.cmp(&a[i].0, bj.as_ref().unwrap()),
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bj.take().unwrap(), c * &b[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let s = &a[i].1 + c * &b[j].1;
                if !s.is_zero() {
                    out.push((bj.take().unwrap(), s));
                } else {
                    bj = None;
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
            && if self.order == other.order {
                self.terms == other.terms
            } else {
                self.terms == other.with_order(self.order).terms
            }
    }
}

impl Eq for Poly {}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.try_add(rhs).expect("polynomials over different rings")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.try_sub(rhs).expect("polynomials over different rings")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.try_mul(rhs).expect("polynomials over different rings")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        (&self).neg()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_polynomial, rat};
    use super::*;

    fn vars3() -> VarList {
        VarList::indexed("x", 3)
    }

    fn p(s: &str) -> Poly {
        parse_polynomial(s, &vars3()).unwrap()
    }

    #[test]
    fn add_inverse_is_zero() {
        assert!((&p("x0") + &p("-x0")).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x0+x1") * &p("x0-x1"), p("x0^2 - x1^2"));
    }

    #[test]
    fn binomial_square() {
        assert_eq!(p("x0+x1").pow(2), p("x0^2 + 2*x0*x1 + x1^2"));
        assert_eq!(p("x0").try_pow(-1), Err(PolyError::NegativeExponent(-1)));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let q = parse_polynomial("y0", &VarList::indexed("y", 3)).unwrap();
        assert_eq!(p("x0").try_add(&q), Err(PolyError::VariableMismatch));
        let r = p("x0").with_order(MonomialOrder::Lex);
        assert_eq!(p("x0").try_mul(&r), Err(PolyError::VariableMismatch));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x0*x1^2").partial_derivative(1).unwrap(), p("2*x0*x1"));
        assert!(p("x1^3").partial_derivative(0).unwrap().is_zero());
        assert_eq!(
            p("x0*x2^2 - x1^3").partial_derivative(2).unwrap(),
            p("2*x0*x2")
        );
        assert!(p("x0").partial_derivative(3).is_err());
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("x0^2 + x1*x2").homogeneity_degree(), Ok(2));
        assert_eq!(
            p("x0 + x1^2").homogeneity_degree(),
            Err(PolyError::NotHomogeneous)
        );
        assert_eq!(p("x0*x2^2 - x1^3").homogeneity_degree(), Ok(3));
        assert_eq!(p("0").homogeneity_degree(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn dehomogenize_charts() {
        let v12 = VarList::new(["x1", "x2"]).unwrap();
        let q = |s: &str| parse_polynomial(s, &v12).unwrap();
        assert_eq!(
            p("x0*x2^2 - x1^3").dehomogenize(0).unwrap(),
            q("x2^2 - x1^3")
        );
        assert_eq!(p("x0^2").dehomogenize(0).unwrap(), q("1"));
        assert_eq!(p("x1").dehomogenize(0).unwrap(), q("x1"));
    }

    #[test]
    fn translate_and_evaluate() {
        let f = p("x0^2*x1 - 3*x2 + 1");
        let s = [rat(1), rat(-2), rat(3)];
        let g = f.translate(&s);
        let zero = [rat(0), rat(0), rat(0)];
        assert_eq!(g.evaluate(&zero), f.evaluate(&s));
    }

    #[test]
    fn exact_division() {
        let a = p("x0^2 - x1^2");
        assert_eq!(a.div_exact(&p("x0 - x1")).unwrap(), p("x0 + x1"));
        assert!(a.div_exact(&p("x0 + x2")).is_none());
    }

    #[test]
    fn primitive_form() {
        let f = p("-1/2*x0^2 + 3/4*x1*x2");
        assert_eq!(f.primitive(), p("2*x0^2 - 3*x1*x2"));
        assert!(f.is_proportional(&p("2*x0^2 - 3*x1*x2")));
        assert!(!f.is_proportional(&p("2*x0^2 + 3*x1*x2")));
    }

    #[test]
    fn display_format() {
        assert_eq!(p("x0^3 - 2*x1*x2^2").to_string(), "x0^3 - 2*x1*x2^2");
        assert_eq!(p("-x0 + 1/2").to_string(), "-x0 + 1/2");
        assert_eq!(p("0").to_string(), "0");
    }
}
