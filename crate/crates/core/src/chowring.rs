//! The Chow ring of `M = P(T*P^n ⊕ O)`.
//!
//! It is generated by the pulled-back hyperplane class `h` and the relative
//! hyperplane class `z`, subject to `h^{n+1} = 0` and
//! `Σ c_i h^i z^{n+1-i} = 0` where `c(T*P^n) = (1 - h)^{n+1}`. Elements are
//! kept in the canonical basis `h^i z^j`, `0 ≤ i, j ≤ n`, and the degree
//! map reads off the coefficient of `h^n z^n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Rat;

/// The presentation of the ring for a fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowRing {
    n: usize,
    /// `chern[i]` is the coefficient of `h^i` in `c_i(T*P^n)`.
    chern: Vec<BigInt>,
}

/// An element `Σ a_ij h^i z^j` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowElt {
    coeffs: Vec<Vec<BigInt>>,
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `h^{n+1} = 0` and `z^{n+1} + c_1 z^n + ... + c_n z = 0`.
pub fn ring_presentation(n: usize) -> ChowRing {
    assert!(n >= 1, "ring of P(T*P^n + O) needs n >= 1");
    let chern = (0..=n)
        .map(|i| {
            let b = binomial(n + 1, i);
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    ChowRing { n, chern }
}

impl ChowRing {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Integer coefficients of `c_0 .. c_n` (each times the matching power
    /// of `h`).
    pub fn chern(&self) -> &[BigInt] {
        &self.chern
    }

    pub fn zero(&self) -> ChowElt {
        ChowElt {
            coeffs: vec![vec![BigInt::zero(); self.n + 1]; self.n + 1],
        }
    }

    pub fn one(&self) -> ChowElt {
        self.monomial(0, 0, BigInt::one())
    }

    /// `c · h^i z^j`, reduced.
    pub fn monomial(&self, i: usize, j: usize, c: BigInt) -> ChowElt {
        let mut raw = vec![vec![BigInt::zero(); j.max(self.n) + 1]; i.max(self.n) + 1];
        raw[i][j] = c;
        self.reduce(raw)
    }

    pub fn h(&self) -> ChowElt {
        self.monomial(1, 0, BigInt::one())
    }

    pub fn z(&self) -> ChowElt {
        self.monomial(0, 1, BigInt::one())
    }

    /// Element from an arbitrary (possibly oversized) coefficient table.
    pub fn element(&self, raw: Vec<Vec<BigInt>>) -> ChowElt {
        self.reduce(raw)
    }

    /// Canonical form: drop `h^{>n}`, then rewrite `z^j` for `j > n`
    /// from the top down with `z^j = -Σ_{k≥1} c_k h^k z^{j-k}`.
    fn reduce(&self, raw: Vec<Vec<BigInt>>) -> ChowElt {
        let n = self.n;
        let width = raw.iter().map(Vec::len).max().unwrap_or(0).max(n + 1);
        let mut t: Vec<Vec<BigInt>> = raw
            .into_iter()
            .take(n + 1)
            .map(|mut row| {
                row.resize(width, BigInt::zero());
                row
            })
            .collect();
        t.resize(n + 1, vec![BigInt::zero(); width]);
        for j in (n + 1..width).rev() {
            for i in 0..=n {
                let a = std::mem::take(&mut t[i][j]);
                if a.is_zero() {
                    continue;
                }
                for k in 1..=n - i {
                    t[i + k][j - k] -= &a * &self.chern[k];
                }
            }
        }
        for row in &mut t {
            row.truncate(n + 1);
        }
        ChowElt { coeffs: t }
    }

    pub fn add(&self, a: &ChowElt, b: &ChowElt) -> ChowElt {
        ChowElt {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect())
                .collect(),
        }
    }

    pub fn scale(&self, a: &ChowElt, c: &BigInt) -> ChowElt {
        ChowElt {
            coeffs: a
                .coeffs
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn pow(&self, a: &ChowElt, e: u32) -> ChowElt {
        (0..e).fold(self.one(), |acc, _| chow_mul(&acc, a, self))
    }
}

impl ChowElt {
    /// Coefficient of `h^i z^j`.
    pub fn coeff(&self, i: usize, j: usize) -> &BigInt {
        &self.coeffs[i][j]
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }
}

impl fmt::Display for ChowElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        let n = self.coeffs.len() - 1;
        // highest z power first, then ascending h
        for j in (0..=n).rev() {
            for i in 0..=n {
                let c = &self.coeffs[i][j];
                if c.is_zero() {
                    continue;
                }
                let mono = match (i, j) {
                    (0, 0) => String::new(),
                    (i, 0) => power("h", i),
                    (0, j) => power("z", j),
                    (i, j) => format!("{}*{}", power("h", i), power("z", j)),
                };
                terms.push((c.clone(), mono));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, mono)) in terms.iter().enumerate() {
            let sep = match (k, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let a = c.abs();
            let body = match (a.is_one(), mono.is_empty()) {
                (_, true) => a.to_string(),
                (true, false) => mono.clone(),
                (false, false) => format!("{a}*{mono}"),
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

fn power(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

/// Product in canonical form.
pub fn chow_mul(a: &ChowElt, b: &ChowElt, ring: &ChowRing) -> ChowElt {
    let n = ring.n;
    let mut raw = vec![vec![BigInt::zero(); 2 * n + 1]; 2 * n + 1];
    for (i1, row1) in a.coeffs.iter().enumerate() {
        for (j1, x) in row1.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i2, row2) in b.coeffs.iter().enumerate() {
                for (j2, y) in row2.iter().enumerate() {
                    if !y.is_zero() {
                        raw[i1 + i2][j1 + j2] += x * y;
                    }
                }
            }
        }
    }
    ring.reduce(raw)
}

/// Class of the zero section, `Σ c_i h^i z^{n-i}`.
pub fn zero_section_class(ring: &ChowRing) -> ChowElt {
    let n = ring.n;
    let mut raw = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for (i, c) in ring.chern.iter().enumerate() {
        raw[i][n - i] = c.clone();
    }
    ring.reduce(raw)
}

/// Coefficient of `h^n z^n`.
pub fn degree_map(a: &ChowElt, ring: &ChowRing) -> BigInt {
    a.coeffs[ring.n][ring.n].clone()
}

/// Self-intersection of the zero section.
pub fn p_self_intersection(n: usize) -> i64 {
    let ring = ring_presentation(n);
    let p = zero_section_class(&ring);
    degree_map(&chow_mul(&p, &p, &ring), &ring)
        .to_i64()
        .expect("fits in i64")
}

/// Both evaluations of the bracket behind the pairing identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtIdentity {
    /// `(n+1)^2 (-1)^n (C1 + x1 P)·(C2 + x2 P)` expanded bilinearly.
    pub expanded: Rat,
    /// `(n+1)^2 (-1)^n [a + (-1)^{n+1} p1 p2 / (n+1)]`.
    pub closed: Rat,
    pub holds: bool,
}

/// Expands `(C1 + x1 P)·(C2 + x2 P)` with `x_i = p_i / ((-1)^{n+1}(n+1))`,
/// `C1·C2 = a`, `C_i·P = p_i` and `P·P` taken from the Chow ring, and
/// compares with the closed form of the pairing bracket.
pub fn ext_identity(n: usize, a: &Rat, p1: &Rat, p2: &Rat) -> ExtIdentity {
    let pp = Rat::from_integer(p_self_intersection(n).into());
    let n1 = Rat::from_integer((n as i64 + 1).into());
    let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
    let x1 = p1 / (-&sign * &n1);
    let x2 = p2 / (-&sign * &n1);
    // bilinear form on the span of C1, C2, P
    let gram = [
        [None, Some(a.clone()), Some(p1.clone())],
        [Some(a.clone()), None, Some(p2.clone())],
        [Some(p1.clone()), Some(p2.clone()), Some(pp)],
    ];
    let u = [Rat::one(), Rat::zero(), x1];
    let v = [Rat::zero(), Rat::one(), x2];
    let mut pairing = Rat::zero();
    for (i, ui) in u.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            if ui.is_zero() || vj.is_zero() {
                continue;
            }
            pairing += ui
                * vj
                * gram[i][j]
                    .as_ref()
                    .expect("self-pairings of C_i never enter");
        }
    }
    let scale = &n1 * &n1 * &sign;
    let expanded = &scale * pairing;
    let closed = &scale * (a - &sign * p1 * p2 / &n1);
    ExtIdentity {
        holds: expanded == closed,
        expanded,
        closed,
    }
}

pub fn ext_identity_check(n: usize, a: &Rat, p1: &Rat, p2: &Rat) -> bool {
    ext_identity(n, a, p1, p2).holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn presentations() {
        let r = ring_presentation(1);
        assert_eq!(r.chern(), &[big(1), big(-2)]);
        let r = ring_presentation(2);
        assert_eq!(r.chern(), &[big(1), big(-3), big(3)]);
        // z^3 reduces to 3hz^2 - 3h^2z
        assert_eq!(r.pow(&r.z(), 3).to_string(), "3*h*z^2 - 3*h^2*z");
        for n in 1..6 {
            assert_eq!(ring_presentation(n).chern()[0], big(1));
        }
    }

    #[test]
    fn products() {
        let r = ring_presentation(1);
        assert_eq!(chow_mul(&r.z(), &r.z(), &r), r.monomial(1, 1, big(2)));
        for n in 1..5 {
            let r = ring_presentation(n);
            let top = r.monomial(n, n, big(1));
            assert_eq!(
                chow_mul(&r.pow(&r.h(), n as u32), &r.pow(&r.z(), n as u32), &r),
                top
            );
            assert_eq!(chow_mul(&top, &r.one(), &r), top);
            assert!(r.pow(&r.h(), n as u32 + 1).is_zero());
        }
    }

    #[test]
    fn zero_section() {
        let r = ring_presentation(1);
        assert_eq!(zero_section_class(&r).to_string(), "z - 2*h");
        let r = ring_presentation(2);
        assert_eq!(zero_section_class(&r).to_string(), "z^2 - 3*h*z + 3*h^2");
        for n in 1..8 {
            let r = ring_presentation(n);
            assert_eq!(zero_section_class(&r).coeff(0, n), &big(1));
        }
    }

    #[test]
    fn degrees() {
        let r = ring_presentation(1);
        let p = zero_section_class(&r);
        assert_eq!(degree_map(&chow_mul(&p, &p, &r), &r), big(-2));
        assert_eq!(p_self_intersection(1), -2);
        assert_eq!(p_self_intersection(2), 3);
        assert_eq!(p_self_intersection(5), -6);
        for n in 1..=10 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(p_self_intersection(n), sign * (n as i64 + 1));
            let r = ring_presentation(n);
            for k in 0..n {
                let e = chow_mul(&r.pow(&r.h(), n as u32), &r.pow(&r.z(), k as u32), &r);
                assert_eq!(degree_map(&e, &r), big(0));
            }
        }
    }

    #[test]
    fn ext_examples() {
        let e = ext_identity(2, &rat(4), &rat(-2), &rat(-2));
        assert!(e.holds);
        assert_eq!(e.closed, rat(24));
        let e = ext_identity(1, &rat(0), &rat(1), &rat(1));
        assert!(e.holds);
        assert_eq!(e.closed, rat(-2));
        let e = ext_identity(3, &ratio(7, 5), &rat(0), &ratio(-3, 4));
        assert_eq!(e.expanded, ratio(16 * 7, 5) * rat(-1));
    }

    fn element(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-5i64..6, n + 1), n + 1)
    }

    fn to_elt(r: &ChowRing, v: Vec<Vec<i64>>) -> ChowElt {
        r.element(
            v.into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    proptest! {
        #[test]
        fn associative_and_commutative((n, a, b, c) in (1usize..6).prop_flat_map(|n| (Just(n), element(n), element(n), element(n)))) {
            let r = ring_presentation(n);
            let (a, b, c) = (to_elt(&r, a), to_elt(&r, b), to_elt(&r, c));
            prop_assert_eq!(chow_mul(&a, &chow_mul(&b, &c, &r), &r), chow_mul(&chow_mul(&a, &b, &r), &c, &r));
            prop_assert_eq!(chow_mul(&a, &b, &r), chow_mul(&b, &a, &r));
            let sum = r.add(&b, &c);
            prop_assert_eq!(chow_mul(&a, &sum, &r), r.add(&chow_mul(&a, &b, &r), &chow_mul(&a, &c, &r)));
        }

        #[test]
        fn ext_identity_on_random_rationals(n in 1usize..11, a in -50i64..50, b in 1i64..20, p1 in -50i64..50, p2 in -50i64..50, q in 1i64..20) {
            prop_assert!(ext_identity_check(n, &ratio(a, b), &ratio(p1, q), &ratio(p2, b)));
        }
    }
}
