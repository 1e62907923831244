//! Euler characteristics of smooth complete intersections, Euler-obstruction
//! weighted values `χ̄`, and profiles of generic linear sections.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::duality::{singular_census, DualityError, ProjVariety, VarietyKind};
use crate::groebner::{hilbert_data, Ideal};
use crate::poly::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("unsupported variety: {0}")]
    UnsupportedVariety(String),
    #[error(transparent)]
    Duality(#[from] DualityError),
}

/// Truncated power series in `h` with integer coefficients.
fn series_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1 + d·h)^{-1}` truncated to `len` terms.
fn inverse_linear(d: i64, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut c = BigInt::one();
    for _ in 0..len {
        out.push(c.clone());
        c *= -d;
    }
    out
}

/// Euler characteristic of a smooth complete intersection of the given
/// degrees in `P^n`: the product of degrees times the `h^{dim}` coefficient
/// of `(1 + h)^{n+1} / Π (1 + d_i h)`.
pub fn chi_complete_intersection(n: usize, degrees: &[i64]) -> i64 {
    assert!(degrees.len() <= n && degrees.iter().all(|&d| d >= 1));
    let dim = n - degrees.len();
    let len = dim + 1;
    let mut series: Vec<BigInt> = (0..len).map(|k| binomial(n as u64 + 1, k as u64)).collect();
    for &d in degrees {
        series = series_mul(&series, &inverse_linear(d, len), len);
    }
    let prod: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    (prod * &series[dim])
        .to_i64()
        .expect("Euler characteristic fits in i64")
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Euler characteristic of a smooth degree-`d` hypersurface in `P^n`.
pub fn chi_smooth_hypersurface(n: usize, d: i64) -> i64 {
    assert!(n >= 1 && d >= 1);
    chi_complete_intersection(n, &[d])
}

/// Euler characteristic of a smooth quadric of dimension `m`.
pub fn chi_quadric(m: usize) -> i64 {
    assert!(m >= 1);
    let m = m as i64;
    if m % 2 == 1 {
        m + 1
    } else {
        m + 2
    }
}

/// True when `V(f)` has no singular point, i.e. the partials have no
/// common projective zero.
pub fn is_smooth_hypersurface(s: &ProjVariety) -> Result<bool, CharError> {
    let f = s
        .polynomial()
        .ok_or_else(|| CharError::UnsupportedVariety(format!("{s} is not a hypersurface")))?;
    let partials = (0..f.nvars())
        .map(|i| f.partial_derivative(i))
        .collect::<Result<Vec<_>, _>>()
        .map_err(DualityError::from)?;
    let jac = Ideal::new(partials, f.vars(), MonomialOrder::GrevLex).map_err(DualityError::from)?;
    let h = hilbert_data(&jac).map_err(DualityError::from)?;
    Ok(h.projdim < 0)
}

/// `χ̄(S)`: the Euler characteristic weighted by the Euler obstruction.
///
/// Linear spaces and smooth hypersurfaces give their Euler characteristic;
/// plane curves use their node/cusp census (computed if not attached).
pub fn chi_bar_of(s: &ProjVariety) -> Result<i64, CharError> {
    if let Some(c) = s.census() {
        return Ok(c.chi_bar);
    }
    match s.kind() {
        VarietyKind::Linear(m) => Ok(*m as i64 + 1),
        VarietyKind::Point => Ok(1),
        VarietyKind::Curve { .. } => unreachable!("census-only curves always carry a census"),
        VarietyKind::Hypersurface(f) => {
            let (n, d) = (s.ambient_dim(), f.total_degree() as i64);
            if d == 1 {
                return Ok(n as i64);
            }
            if s.is_plane_curve() {
                return Ok(singular_census(s)?.chi_bar);
            }
            if is_smooth_hypersurface(s)? {
                Ok(chi_smooth_hypersurface(n, d))
            } else {
                Err(CharError::UnsupportedVariety(format!(
                    "{s} is singular; supply a census for its weighted Euler characteristic"
                )))
            }
        }
    }
}

/// `χ̄` of the generic linear sections `S^k`, for `k = 0 ..= dim S + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionProfile {
    pub base: ProjVariety,
    pub values: Vec<i64>,
}

impl SectionProfile {
    /// `χ̄(S^k)`, zero past the end (the empty section).
    pub fn get(&self, k: usize) -> i64 {
        self.values.get(k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Generic sections miss the (isolated) singular points, so every entry
/// past the first is a smooth Euler characteristic.
pub fn section_profile(s: &ProjVariety) -> Result<SectionProfile, CharError> {
    let dim = s.dim();
    let n = s.ambient_dim();
    let mut values = vec![chi_bar_of(s)?];
    match s.kind() {
        VarietyKind::Linear(_) | VarietyKind::Point => {
            values.extend((1..=dim).map(|k| (dim + 1 - k) as i64));
        }
        VarietyKind::Hypersurface(_) | VarietyKind::Curve { .. } => {
            let d = s.degree();
            values.extend((1..=dim).map(|k| chi_smooth_hypersurface(n - k, d)));
        }
    }
    values.push(0);
    Ok(SectionProfile {
        base: s.clone(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{primal_vars, CensusOrigin, CurveCensus};
    use crate::poly::parse_polynomial;
    use proptest::prelude::*;

    fn hyp(n: usize, s: &str) -> ProjVariety {
        ProjVariety::hypersurface(n, &parse_polynomial(s, &primal_vars(n)).unwrap()).unwrap()
    }

    #[test]
    fn smooth_hypersurface_examples() {
        assert_eq!(chi_smooth_hypersurface(2, 1), 2);
        assert_eq!(chi_smooth_hypersurface(3, 2), 4);
        assert_eq!(chi_smooth_hypersurface(2, 3), 0);
        // cubic surface: P^2 blown up in six points
        assert_eq!(chi_smooth_hypersurface(3, 3), 9);
        // quartic K3
        assert_eq!(chi_smooth_hypersurface(3, 4), 24);
        // elliptic quartic curve in P^3
        assert_eq!(chi_complete_intersection(3, &[2, 2]), 0);
    }

    #[test]
    fn quadric_examples() {
        assert_eq!(chi_quadric(1), 2);
        assert_eq!(chi_quadric(2), 4);
        assert_eq!(chi_quadric(5), 6);
        for m in 1..=10 {
            assert_eq!(chi_quadric(m), chi_smooth_hypersurface(m + 1, 2));
        }
    }

    #[test]
    fn genus_degree() {
        for d in 1..=8 {
            assert_eq!(chi_smooth_hypersurface(2, d), 3 * d - d * d);
        }
    }

    #[test]
    fn chi_bar_examples() {
        assert_eq!(chi_bar_of(&hyp(2, "x1")).unwrap(), 2);
        assert_eq!(chi_bar_of(&ProjVariety::linear(2, 1).unwrap()).unwrap(), 2);
        assert_eq!(chi_bar_of(&ProjVariety::point(3).unwrap()).unwrap(), 1);
        assert_eq!(chi_bar_of(&hyp(2, "x0*x2^2 - x1^3 - x0*x1^2")).unwrap(), 2);
        let quartic = CurveCensus::from_counts(4, 0, 3, CensusOrigin::Plucker).unwrap();
        assert_eq!(chi_bar_of(&ProjVariety::curve(quartic)).unwrap(), 5);
        assert_eq!(chi_bar_of(&hyp(3, "x0*x3 - x1*x2")).unwrap(), 4);
        assert!(matches!(
            chi_bar_of(&hyp(3, "x0*x3 - x1^2")),
            Err(CharError::UnsupportedVariety(_))
        ));
    }

    #[test]
    fn profile_examples() {
        assert_eq!(
            section_profile(&hyp(2, "x0*x2^2 - x1^3 - x0*x1^2"))
                .unwrap()
                .values,
            vec![2, 3, 0]
        );
        assert_eq!(
            section_profile(&ProjVariety::linear(2, 1).unwrap())
                .unwrap()
                .values,
            vec![2, 1, 0]
        );
        assert_eq!(
            section_profile(&hyp(3, "x0*x3 - x1*x2")).unwrap().values,
            vec![4, 2, 2, 0]
        );
        assert_eq!(
            section_profile(&ProjVariety::point(1).unwrap())
                .unwrap()
                .values,
            vec![1, 0]
        );
    }

    proptest! {
        #[test]
        fn smooth_profiles_end_in_degree_then_zero(n in 1usize..7, d in 1i64..6) {
            let f = (0..=n).map(|i| format!("x{i}^{d}")).collect::<Vec<_>>().join(" + ");
            let p = section_profile(&hyp(n, &f)).unwrap();
            prop_assert_eq!(p.len(), n + 1);
            prop_assert_eq!(p.values[n], 0);
            if n >= 2 {
                prop_assert_eq!(p.values[n - 1], d);
            }
        }

        #[test]
        fn linear_profiles(n in 1usize..10, m in 0usize..10) {
            prop_assume!(m <= n);
            let p = section_profile(&ProjVariety::linear(n, m).unwrap()).unwrap();
            prop_assert_eq!(p.values, (0..=m + 1).rev().map(|k| k as i64).collect::<Vec<_>>());
        }
    }
}
