use super::{groebner_basis, GroebnerError, Ideal};
use crate::poly::{Mono, MonomialOrder};

/// Hilbert series data of `k[x_0..x_N] / I` for a homogeneous ideal.
///
/// The series equals `numerator(t) / (1 - t)^(projdim + 1)` with
/// `numerator(1) = degree`. Ideals whose quotient is finite-dimensional
/// (including the unit ideal) have `projdim = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients by ascending power of `t`.
    pub numerator: Vec<i64>,
    pub projdim: i64,
    pub degree: i64,
}

pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData, GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let nvars = ideal.vars().len();
    let gb = groebner_basis(&ideal.with_order(MonomialOrder::GrevLex));
    let leads: Vec<Mono> = gb
        .basis()
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    let mut num = numerator(leads);
    trim(&mut num);
    if num.is_empty() {
        return Ok(HilbertData {
            numerator: num,
            projdim: -1,
            degree: 0,
        });
    }
    let mut poles = nvars as i64;
    while poles > 0 && num.iter().sum::<i64>() == 0 {
        num = divide_one_minus_t(&num);
        poles -= 1;
    }
    let degree = num.iter().sum();
    Ok(HilbertData {
        numerator: num,
        projdim: poles - 1,
        degree,
    })
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] -= c;
    }
}

fn add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

/// Synthetic division by `1 - t`; caller checks `p(1) = 0`.
fn divide_one_minus_t(p: &[i64]) -> Vec<i64> {
    // p = (1 - t) q  =>  q_k = sum_{i <= k} p_i
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    trim(&mut q);
    q
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Mono> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `K(t)` of the Hilbert series of `k[x] / <gens>` over
/// `(1 - t)^N`, by pivoting on a variable:
/// `K(I) = K(I + <x>) + t · K(I : x)`.
fn numerator(gens: Vec<Mono>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            let mut next = acc.clone();
            sub_shifted(&mut next, &acc, m.total_degree() as usize);
            acc = next;
        }
        trim(&mut acc);
        return acc;
    }
    // pivot on the variable shared by the most generators
    let n = gens[0].nvars();
    let var = (0..n)
        .max_by_key(|&i| gens.iter().filter(|m| m.exp(i) > 0).count())
        .expect("at least one variable");
    let x = Mono::var(n, var);
    let mut plus: Vec<Mono> = gens.iter().filter(|m| m.exp(var) == 0).cloned().collect();
    plus.push(x.clone());
    let colon: Vec<Mono> = gens.iter().map(|m| x.gcd(m).quotient_of(m)).collect();
    let mut k = numerator(plus);
    let kc = numerator(colon);
    add_shifted(&mut k, &kc, 1);
    trim(&mut k);
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, VarList};

    fn hd(gens: &[&str], nvars: usize) -> HilbertData {
        let v = VarList::indexed("x", nvars);
        let g = gens
            .iter()
            .map(|s| parse_polynomial(s, &v).unwrap())
            .collect();
        hilbert_data(&Ideal::new(g, &v, MonomialOrder::GrevLex).unwrap()).unwrap()
    }

    #[test]
    fn line_conic_point() {
        let h = hd(&["x0"], 3);
        assert_eq!((h.projdim, h.degree), (1, 1));
        let h = hd(&["x0*x2 - x1^2"], 3);
        assert_eq!((h.projdim, h.degree), (1, 2));
        let h = hd(&["x0", "x1"], 3);
        assert_eq!((h.projdim, h.degree), (0, 1));
    }

    #[test]
    fn hypersurface_degree() {
        let h = hd(&["x0^3 + x1^3 + x2^3 + x3^3"], 4);
        assert_eq!((h.projdim, h.degree), (2, 3));
        assert_eq!(h.numerator, vec![1, 1, 1]);
    }

    #[test]
    fn twisted_cubic() {
        let h = hd(&["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"], 4);
        assert_eq!((h.projdim, h.degree), (1, 3));
    }

    #[test]
    fn irrelevant_and_unit() {
        let h = hd(&["x0", "x1", "x2"], 3);
        assert_eq!((h.projdim, h.degree), (-1, 1));
        let h = hd(&["1"], 2);
        assert_eq!((h.projdim, h.degree), (-1, 0));
    }

    #[test]
    fn non_homogeneous_rejected() {
        let v = VarList::indexed("x", 2);
        let i = Ideal::new(
            vec![parse_polynomial("x0 + x1^2", &v).unwrap()],
            &v,
            MonomialOrder::GrevLex,
        )
        .unwrap();
        assert_eq!(hilbert_data(&i), Err(GroebnerError::NotHomogeneous));
    }
}
