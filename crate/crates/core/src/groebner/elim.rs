use num_traits::One;

use super::{groebner_basis_with, GroebnerError, Ideal, Selection};
use crate::poly::{MonomialOrder, Poly, PolyError, Rat, VarList};

/// `I ∩ k[x_k, ..., x_last]`, returned over the trailing variables with the
/// default GrevLex order.
pub fn eliminate(ideal: &Ideal, k: usize) -> Result<Ideal, PolyError> {
    let n = ideal.vars().len();
    if k >= n {
        return Err(PolyError::VariableOutOfRange(k));
    }
    let trailing = ideal.vars().without(0..k)?;
    if k == 0 {
        return Ideal::new(
            ideal.generators().to_vec(),
            &trailing,
            MonomialOrder::GrevLex,
        );
    }
    // sugar pays off when the input is homogeneous but for a tag relation
    // such as `1 - t·g`, and can stall on genuinely inhomogeneous input
    let inhomogeneous = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_homogeneous())
        .count();
    let selection = if inhomogeneous <= 1 {
        Selection::Sugar
    } else {
        Selection::Normal
    };
    let gb = groebner_basis_with(&ideal.with_order(MonomialOrder::ElimBlock(k)), selection);
    let kept = gb
        .basis()
        .iter()
        .filter(|g| g.avoids(0..k))
        .map(|g| g.drop_vars(0..k, &trailing, MonomialOrder::GrevLex))
        .collect();
    Ideal::new(kept, &trailing, MonomialOrder::GrevLex)
}

fn tag_name(vars: &VarList) -> String {
    std::iter::once("t".to_string())
        .chain((1..).map(|i| format!("t{i}")))
        .find(|n| vars.index_of(n).is_none())
        .expect("some tag name is free")
}

/// Ring with a fresh tag variable prepended.
fn tagged(vars: &VarList) -> VarList {
    VarList::new(std::iter::once(tag_name(vars)).chain(vars.names().iter().cloned()))
        .expect("tag name is fresh")
}

/// `I ∩ J` through `t·I + (1 − t)·J` and elimination of `t`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal, PolyError> {
    if a.vars() != b.vars() {
        return Err(PolyError::VariableMismatch);
    }
    let order = a.order();
    if a.is_zero() || b.is_zero() {
        return Ideal::new(vec![], a.vars(), order);
    }
    let ext = tagged(a.vars());
    let t = Poly::var(0, &ext, order);
    let one_minus_t = &Poly::one(&ext, order) - &t;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(&t * &g.insert_vars(0, &ext));
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.with_order(order).insert_vars(0, &ext));
    }
    let r = eliminate(&Ideal::new(gens, &ext, order)?, 1)?;
    let gens = r
        .generators()
        .iter()
        .map(|g| g.rename(a.vars()).map(|g| g.with_order(order)))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::new(gens, a.vars(), order)
}

/// `I : g^∞` by adjoining `1 − t·g` and eliminating `t`.
pub fn saturate_by(ideal: &Ideal, g: &Poly) -> Result<Ideal, GroebnerError> {
    if g.vars() != ideal.vars() {
        return Err(PolyError::VariableMismatch.into());
    }
    if g.is_zero() {
        return Err(GroebnerError::ZeroIdeal);
    }
    let order = ideal.order();
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    let ext = tagged(ideal.vars());
    let t = Poly::var(0, &ext, order);
    let mut gens: Vec<Poly> = ideal
        .generators()
        .iter()
        .map(|f| f.insert_vars(0, &ext))
        .collect();
    let tg = &t * &g.with_order(order).insert_vars(0, &ext);
    gens.push(&Poly::constant(Rat::one(), &ext, order) - &tg);
    let r = eliminate(&Ideal::new(gens, &ext, order)?, 1)?;
    let gens = r
        .generators()
        .iter()
        .map(|g| g.rename(ideal.vars()).map(|g| g.with_order(order)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(gens, ideal.vars(), order)?)
}

/// `I : J^∞`, the intersection of `I : g^∞` over the generators `g` of `J`.
pub fn saturate(ideal: &Ideal, by: &Ideal) -> Result<Ideal, GroebnerError> {
    if ideal.vars() != by.vars() {
        return Err(PolyError::VariableMismatch.into());
    }
    let gens: Vec<&Poly> = by.generators().iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Err(GroebnerError::ZeroIdeal);
    }
    if gens.iter().any(|g| g.is_constant()) {
        return Ok(ideal.clone());
    }
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let s = saturate_by(ideal, g)?;
        acc = Some(match acc {
            None => s,
            Some(prev) => {
                if prev.same_ideal(&s) {
                    prev
                } else {
                    intersect(&prev, &s)?
                }
            }
        });
    }
    Ok(acc.expect("at least one generator"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ideal(gens: &[&str], vars: &VarList) -> Ideal {
        let g = gens
            .iter()
            .map(|s| parse_polynomial(s, vars).unwrap())
            .collect();
        Ideal::new(g, vars, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn eliminate_cusp_parametrization() {
        // Resultant of x0^2 - y0 and x0^3 - y1 in x0: y0^3 - y1^2.
        let v = VarList::new(["x0", "y0", "y1"]).unwrap();
        let r = eliminate(&ideal(&["x0^2 - y0", "x0^3 - y1"], &v), 1).unwrap();
        let w = VarList::new(["y0", "y1"]).unwrap();
        assert!(r.same_ideal(&ideal(&["y0^3 - y1^2"], &w)));
    }

    #[test]
    fn eliminate_trivial_cases() {
        let v = VarList::new(["x0", "y0"]).unwrap();
        assert!(eliminate(&ideal(&["x0 - y0"], &v), 1).unwrap().is_zero());
        let r = eliminate(&ideal(&["y0"], &v), 1).unwrap();
        let w = VarList::new(["y0"]).unwrap();
        assert!(r.same_ideal(&ideal(&["y0"], &w)));
    }

    #[test]
    fn saturation_examples() {
        let v = VarList::indexed("x", 3);
        let s = saturate(&ideal(&["x0^2*x1"], &v), &ideal(&["x0"], &v)).unwrap();
        assert!(s.same_ideal(&ideal(&["x1"], &v)));
        let s = saturate(&ideal(&["x0*x1", "x0*x2"], &v), &ideal(&["x0"], &v)).unwrap();
        assert!(s.same_ideal(&ideal(&["x1", "x2"], &v)));
        let i = ideal(&["x0*x1 - x2^2"], &v);
        assert!(saturate(&i, &ideal(&["1"], &v)).unwrap().same_ideal(&i));
    }

    #[test]
    fn saturation_is_idempotent() {
        let v = VarList::indexed("x", 3);
        let i = ideal(&["x0^2*x1 - x0*x2^2", "x0*x1*x2"], &v);
        let j = ideal(&["x0", "x1"], &v);
        let s1 = saturate(&i, &j).unwrap();
        let s2 = saturate(&s1, &j).unwrap();
        assert!(s1.same_ideal(&s2));
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let v = VarList::indexed("x", 3);
        let r = intersect(&ideal(&["x0"], &v), &ideal(&["x1"], &v)).unwrap();
        assert!(r.same_ideal(&ideal(&["x0*x1"], &v)));
        let r = intersect(&ideal(&["x1", "x2"], &v), &ideal(&["x0", "x2"], &v)).unwrap();
        assert!(r.same_ideal(&ideal(&["x2", "x0*x1"], &v)));
    }
}
