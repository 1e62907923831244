use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Ideal, ReducedBasis};
use crate::poly::{Mono, MonomialOrder, Poly, Rat};

type ITerm = (Mono, BigInt);

/// Integer terms proportional to `p`, returned with the factor that recovers
/// `p`; the integer part is primitive with a positive leading coefficient.
fn integer_terms(p: &Poly) -> (Vec<ITerm>, Rat) {
    let den = p
        .terms()
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut terms: Vec<ITerm> = p
        .terms()
        .iter()
        .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
        .collect();
    let mut content = content_of(&terms);
    if terms.first().map_or(false, |(_, c)| c.is_negative()) {
        content = -content;
    }
    for t in terms.iter_mut() {
        t.1 /= &content;
    }
    (terms, Rat::new(content, den))
}

fn content_of<'a, I: IntoIterator<Item = &'a ITerm>>(terms: I) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `ka·a + kb·m·b` over integer terms, both inputs sorted descending.
fn merge_int(
    a: &[ITerm],
    ka: &BigInt,
    kb: &BigInt,
    m: &Mono,
    b: &[ITerm],
    order: MonomialOrder,
) -> Vec<ITerm> {
    let scale_a = |c: &BigInt| if ka.is_one() { c.clone() } else { c * ka };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Mono> = None;
    while i < a.len() || j < b.len() {
        if j < b.len() && bj.is_none() {
            bj = Some(b[j].0.mul(m));
        }
        let ord = match (i < a.len(), j < b.len()) {
            (true, true) => order.cmp(&a[i].0, bj.as_ref().unwrap()),
            (true, false) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push((a[i].0.clone(), scale_a(&a[i].1)));
                i += 1;
            }
            Ordering::Less => {
                out.push((bj.take().unwrap(), kb * &b[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let s = scale_a(&a[i].1) + kb * &b[j].1;
                let mono = bj.take().unwrap();
                if !s.is_zero() {
                    out.push((mono, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full reduction of `f` by `divisors`: no term of the result is divisible
/// by any divisor's leading monomial.
///
/// Runs fraction-free on primitive integer multiples, which keeps the
/// coefficient growth far below that of rational arithmetic.
pub(crate) fn reduce(f: &Poly, divisors: &[&Poly]) -> Poly {
    let ints: Vec<Vec<ITerm>> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| integer_terms(g).0)
        .collect();
    let divs: Vec<(&[ITerm], u32)> = ints.iter().map(|g| (g.as_slice(), 0)).collect();
    reduce_with_sugar(f, 0, &divs).0
}

/// [`reduce`] by divisors in primitive integer form, each with its sugar.
/// Also returns the sugar of the result: the largest `sugar(g) + deg(q)`
/// over the steps subtracting `q·g`, and at least `f_sugar`.
fn reduce_with_sugar(f: &Poly, f_sugar: u32, divs: &[(&[ITerm], u32)]) -> (Poly, u32) {
    let mut sugar = f_sugar;
    if f.is_zero() || divs.is_empty() {
        return (f.clone(), sugar);
    }
    let order = f.order();
    // invariant: f ≡ scale · (rem + cur[start..]) modulo the divisors
    let (mut cur, mut scale) = integer_terms(f);
    let mut rem: Vec<ITerm> = Vec::new();
    let mut start = 0;
    let mut steps = 0usize;
    while start < cur.len() {
        let m = &cur[start].0;
        match divs.iter().find(|(g, _)| g[0].0.divides(m)) {
            Some((g, g_sugar)) => {
                let (lm, lc) = (&g[0].0, &g[0].1);
                let c = &cur[start].1;
                let d = c.gcd(lc);
                let ka = lc / &d;
                let kb = -(c / &d);
                let qm = lm.quotient_of(m);
                sugar = sugar.max(g_sugar + qm.total_degree());
                cur = merge_int(&cur[start + 1..], &ka, &kb, &qm, &g[1..], order);
                start = 0;
                if !ka.is_one() {
                    for t in rem.iter_mut() {
                        t.1 *= &ka;
                    }
                    scale /= Rat::from_integer(ka);
                }
                steps += 1;
                if steps % 8 == 0 {
                    let g = content_of(rem.iter().chain(cur.iter()));
                    if !g.is_zero() && !g.is_one() {
                        for t in rem.iter_mut().chain(cur.iter_mut()) {
                            t.1 /= &g;
                        }
                        scale *= Rat::from_integer(g);
                    }
                }
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    let terms = rem
        .into_iter()
        .map(|(m, c)| (m, Rat::from_integer(c) * &scale))
        .collect();
    (Poly::from_sorted_terms(f.vars(), order, terms), sugar)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

fn spoly(f: &Poly, g: &Poly, lcm: &Mono) -> Poly {
    let (fm, fc) = (
        f.leading_monomial().unwrap(),
        f.leading_coefficient().unwrap(),
    );
    let (gm, gc) = (
        g.leading_monomial().unwrap(),
        g.leading_coefficient().unwrap(),
    );
    let a = f.mul_term(&fc.recip(), &fm.quotient_of(lcm));
    a.axpy(&-gc.recip(), &gm.quotient_of(lcm), g)
}

struct State {
    order: MonomialOrder,
    polys: Vec<Poly>,
    /// Sugar degree of each polynomial: the degree it would have if every
    /// input were homogenised.
    sugar: Vec<u32>,
    /// Primitive integer form of each polynomial, used when reducing.
    ints: Vec<Vec<ITerm>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    selection: Selection,
}

impl State {
    fn lm(&self, i: usize) -> &Mono {
        self.polys[i].leading_monomial().unwrap()
    }

    fn reducers(&self) -> Vec<(&[ITerm], u32)> {
        (0..self.polys.len())
            .filter(|&g| self.active[g])
            .map(|g| (self.ints[g].as_slice(), self.sugar[g]))
            .collect()
    }

    fn set_poly(&mut self, g: usize, p: Poly) {
        self.ints[g] = integer_terms(&p).0;
        self.polys[g] = p;
    }

    /// Gebauer–Möller update: adds `h` and the pairs it creates, pruning with
    /// the product and chain criteria.
    fn add(&mut self, h: Poly, sugar: u32) {
        let hi = self.polys.len();
        self.ints.push(integer_terms(&h).0);
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
        let t = self.lm(hi).clone();

        let cands: Vec<(usize, Mono)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, self.lm(g).lcm(&t)))
            .collect();
        let mut kept: Vec<(usize, Mono)> = Vec::new();
        for (idx, (g, l)) in cands.iter().enumerate() {
            let coprime = self.lm(*g).is_coprime(&t);
            let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !self.lm(*g).is_coprime(&t))
            .map(|(g, lcm)| Pair {
                i: g,
                j: hi,
                sugar: self.pair_sugar(g, hi, &lcm),
                lcm,
            })
            .collect();

        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !t.divides(&p.lcm) || self.lm(p.i).lcm(&t) == p.lcm || self.lm(p.j).lcm(&t) == p.lcm
            })
            .collect();
        self.pairs.extend(fresh);

        for g in 0..hi {
            if self.active[g] && t.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }

    /// Tail-reduces every element still in play whose tail the newest
    /// leading monomial divides. Leading monomials stay put, so pairs and
    /// criteria are unaffected, but reducers stop carrying stale tails whose
    /// coefficients would otherwise compound.
    fn tail_reduce_by_newest(&mut self) {
        let hi = self.polys.len() - 1;
        let t = self.lm(hi).clone();
        let mut in_pairs = vec![false; hi];
        for p in &self.pairs {
            for k in [p.i, p.j] {
                if k < hi {
                    in_pairs[k] = true;
                }
            }
        }
        for g in 0..hi {
            if !(self.active[g] || in_pairs[g])
                || !self.polys[g].terms()[1..].iter().any(|(m, _)| t.divides(m))
            {
                continue;
            }
            let p = &self.polys[g];
            let tail = Poly::from_sorted_terms(p.vars(), p.order(), p.terms()[1..].to_vec());
            let (reduced, _) = reduce_with_sugar(&tail, 0, &self.reducers());
            // reduction only introduces terms below the ones it removes
            let mut terms = vec![p.terms()[0].clone()];
            terms.extend(reduced.terms().iter().cloned());
            let p = Poly::from_sorted_terms(p.vars(), p.order(), terms);
            self.set_poly(g, p);
        }
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Mono) -> u32 {
        let d = lcm.total_degree();
        (self.sugar[i] + d - self.lm(i).total_degree())
            .max(self.sugar[j] + d - self.lm(j).total_degree())
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let normal = self.selection == Selection::Normal;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                if normal {
                    order.cmp(&a.lcm, &b.lcm)
                } else {
                    a.sugar
                        .cmp(&b.sugar)
                        .then_with(|| order.cmp(&a.lcm, &b.lcm))
                }
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// How the next critical pair is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Selection {
    /// Smallest lcm first. Robust on general input.
    #[default]
    Normal,
    /// Smallest sugar degree first, ties broken by the order: the degree a
    /// pair would have if the input were homogenised. Much faster on
    /// elimination problems that are homogeneous but for a tag relation,
    /// and prone to stall on general inhomogeneous input.
    Sugar,
}

pub fn groebner_basis(ideal: &Ideal) -> ReducedBasis {
    groebner_basis_with(ideal, Selection::Normal)
}

pub fn groebner_basis_with(ideal: &Ideal, selection: Selection) -> ReducedBasis {
    let order = ideal.order();
    let vars = ideal.vars().clone();
    let mut gens: Vec<Poly> = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order).monic())
        .collect();
    gens.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let unit = || ReducedBasis::from_parts(vec![Poly::one(&vars, order)], vars.clone(), order);

    let mut st = State {
        order,
        selection,
        polys: Vec::new(),
        sugar: Vec::new(),
        ints: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in gens {
        let (h, sugar) = reduce_with_sugar(&g, g.total_degree(), &st.reducers());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit();
        }
        st.add(h.monic(), sugar);
        st.tail_reduce_by_newest();
    }

    while let Some(p) = st.next_pair() {
        let s = spoly(&st.polys[p.i], &st.polys[p.j], &p.lcm);
        let (h, sugar) = reduce_with_sugar(&s, p.sugar, &st.reducers());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit();
        }
        st.add(h.monic(), sugar);
        st.tail_reduce_by_newest();
    }

    let mut basis: Vec<Poly> = st
        .polys
        .iter()
        .zip(&st.active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p.clone())
        .collect();
    for k in 0..basis.len() {
        let others: Vec<&Poly> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, p)| p)
            .collect();
        let r = reduce(&basis[k], &others).monic();
        basis[k] = r;
    }
    basis.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    ReducedBasis::from_parts(basis, vars, order)
}

/// Post-hoc certificate: monic, inter-reduced, and every S-polynomial
/// reduces to zero.
pub fn verify_reduced(b: &ReducedBasis) -> bool {
    let basis = b.basis();
    if basis
        .iter()
        .any(|p| p.is_zero() || !p.leading_coefficient().unwrap().is_one())
    {
        return false;
    }
    if basis.iter().any(|p| p.order() != b.order()) {
        return false;
    }
    for (k, p) in basis.iter().enumerate() {
        for (j, q) in basis.iter().enumerate() {
            if j == k {
                continue;
            }
            let lm = q.leading_monomial().unwrap();
            if p.terms().iter().any(|(m, _)| lm.divides(m)) {
                return false;
            }
        }
    }
    let refs: Vec<&Poly> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let l = basis[i]
                .leading_monomial()
                .unwrap()
                .lcm(basis[j].leading_monomial().unwrap());
            if !reduce(&spoly(&basis[i], &basis[j], &l), &refs).is_zero() {
                return false;
            }
        }
    }
    true
}
