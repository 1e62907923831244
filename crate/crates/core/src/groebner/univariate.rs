//! Dense univariate helpers over the rationals: Euclid, square-free parts and
//! rational roots via the rational root theorem.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rat;

fn trim(p: &mut Vec<Rat>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() / lb;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &q * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last().cloned() {
        for c in &mut a {
            *c /= &l;
        }
    }
    a
}

fn derivative(p: &[Rat]) -> Vec<Rat> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
        .collect()
}

fn div_exact(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lb = b.last().expect("nonzero divisor");
    let mut q = vec![Rat::zero(); r.len() + 1 - b.len()];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / lb;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    debug_assert!(r.is_empty());
    q
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct rational roots of a nonzero polynomial given by ascending
/// coefficients, together with a flag telling whether they account for its
/// whole square-free part (every complex root is rational).
pub fn rational_roots(coeffs: &[Rat]) -> (Vec<Rat>, bool) {
    let mut p = coeffs.to_vec();
    trim(&mut p);
    assert!(!p.is_empty(), "zero polynomial has no finite root set");
    if p.len() == 1 {
        return (vec![], true);
    }
    let g = gcd(&p, &derivative(&p));
    let mut sf = div_exact(&p, &g);

    let mut roots = Vec::new();
    if sf[0].is_zero() {
        roots.push(Rat::zero());
        sf.remove(0);
    }
    let mut den = BigInt::one();
    for c in &sf {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = sf.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let deg = ints.len() - 1;
    if deg > 0 {
        let a0 = &ints[0];
        let an = &ints[deg];
        for q in divisors(an) {
            for p in divisors(a0) {
                for s in [1i32, -1] {
                    let cand = Rat::new(&p * BigInt::from(s), q.clone());
                    if roots.contains(&cand) {
                        continue;
                    }
                    let val = sf.iter().rev().fold(Rat::zero(), |acc, c| acc * &cand + c);
                    if val.is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    let sf_degree = p.len() - g.len();
    let complete = roots.len() == sf_degree;
    (roots, complete)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn v(c: &[i64]) -> Vec<Rat> {
        c.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn roots_of_split_polynomial() {
        // (x - 1)^2 (2x + 3) x = 2x^4 - x^3 - 4x^2 + 3x
        let (r, all) = rational_roots(&v(&[0, 3, -4, -1, 2]));
        assert!(all);
        assert_eq!(r, vec![ratio(-3, 2), rat(0), rat(1)]);
    }

    #[test]
    fn irrational_roots_are_flagged() {
        let (r, all) = rational_roots(&v(&[1, 0, 1]));
        assert!(r.is_empty());
        assert!(!all);
        let (r, all) = rational_roots(&v(&[-2, 1, 0, 0]));
        assert_eq!(r, vec![rat(2)]);
        assert!(all);
        let (r, all) = rational_roots(&v(&[0, -2, 0, 1]));
        assert_eq!(r, vec![rat(0)]);
        assert!(!all);
    }
}
