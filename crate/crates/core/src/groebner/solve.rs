use num_traits::Zero;

use super::{groebner_basis, rational_roots, GroebnerError, Ideal, ReducedBasis};
use crate::poly::{Mono, MonomialOrder, Poly, Rat};

fn is_zero_dimensional(gb: &ReducedBasis) -> bool {
    let n = gb.vars().len();
    (0..n).all(|v| {
        gb.basis().iter().any(|g| {
            let lm = g.leading_monomial().unwrap();
            lm.exp(v) > 0 && lm.total_degree() == lm.exp(v) as u32
        })
    })
}

/// All rational points of a zero-dimensional affine system, sorted.
///
/// Works down a Lex basis: the last variable has a univariate generator,
/// each rational root is fixed by adjoining `x - r`, and the next variable
/// is solved the same way. Any univariate factor without a full set of
/// rational roots yields `NotAllRational`.
pub fn rational_points_zero_dim(ideal: &Ideal) -> Result<Vec<Vec<Rat>>, GroebnerError> {
    let lex = ideal.with_order(MonomialOrder::Lex);
    let gb = groebner_basis(&lex);
    if gb.is_unit() {
        return Ok(vec![]);
    }
    if !is_zero_dimensional(&gb) {
        return Err(GroebnerError::NotZeroDimensional);
    }
    let n = ideal.vars().len();
    let mut out = Vec::new();
    solve_level(gb, n, &mut out)?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn solve_level(
    gb: ReducedBasis,
    level: usize,
    out: &mut Vec<Vec<Rat>>,
) -> Result<(), GroebnerError> {
    if gb.is_unit() {
        return Ok(());
    }
    let n = gb.vars().len();
    if level == 0 {
        let mut point = vec![Rat::zero(); n];
        for (v, slot) in point.iter_mut().enumerate() {
            let x = Mono::var(n, v);
            let g = gb
                .basis()
                .iter()
                .find(|g| g.leading_monomial() == Some(&x) && g.len() <= 2)
                .ok_or(GroebnerError::NotZeroDimensional)?;
            *slot = -g.coefficient(&Mono::one(n));
        }
        out.push(point);
        return Ok(());
    }
    let v = level - 1;
    let uni = gb
        .basis()
        .iter()
        .find(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.total_degree() == m.exp(v) as u32)
        })
        .ok_or(GroebnerError::NotZeroDimensional)?;
    let deg = uni.degree_in(v) as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (m, c) in uni.terms() {
        coeffs[m.exp(v) as usize] = c.clone();
    }
    let (roots, complete) = rational_roots(&coeffs);
    if !complete {
        return Err(GroebnerError::NotAllRational);
    }
    let vars = gb.vars().clone();
    for r in roots {
        let lin = &Poly::var(v, &vars, MonomialOrder::Lex)
            - &Poly::constant(r, &vars, MonomialOrder::Lex);
        let mut gens = gb.basis().to_vec();
        gens.push(lin);
        let next = groebner_basis(&Ideal::new(gens, &vars, MonomialOrder::Lex)?);
        solve_level(next, v, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat, VarList};

    fn ideal(gens: &[&str], names: &[&str]) -> Ideal {
        let v = VarList::new(names.iter().copied()).unwrap();
        let g = gens
            .iter()
            .map(|s| parse_polynomial(s, &v).unwrap())
            .collect();
        Ideal::new(g, &v, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn two_points_on_diagonal() {
        let pts = rational_points_zero_dim(&ideal(&["x^2 - 1", "y - x"], &["x", "y"])).unwrap();
        assert_eq!(pts, vec![vec![rat(-1), rat(-1)], vec![rat(1), rat(1)]]);
    }

    #[test]
    fn irrational_system() {
        assert_eq!(
            rational_points_zero_dim(&ideal(&["x^2 + 1"], &["x"])),
            Err(GroebnerError::NotAllRational)
        );
    }

    #[test]
    fn origin() {
        let pts = rational_points_zero_dim(&ideal(&["x", "y"], &["x", "y"])).unwrap();
        assert_eq!(pts, vec![vec![rat(0), rat(0)]]);
    }

    #[test]
    fn positive_dimensional_rejected() {
        assert_eq!(
            rational_points_zero_dim(&ideal(&["x*y"], &["x", "y"])),
            Err(GroebnerError::NotZeroDimensional)
        );
    }

    #[test]
    fn empty_and_non_reduced() {
        assert!(rational_points_zero_dim(&ideal(&["x", "x - 1"], &["x"]))
            .unwrap()
            .is_empty());
        // a double point still gives a single rational solution
        let pts = rational_points_zero_dim(&ideal(&["x^2", "y - x"], &["x", "y"])).unwrap();
        assert_eq!(pts, vec![vec![rat(0), rat(0)]]);
    }
}
