use std::cmp::Ordering;

use super::Mono;

/// Monomial orders used by the Gröbner engine.
///
/// `ElimBlock(k)` compares the block of the first `k` variables first
/// (graded reverse lexicographic inside the block) and only on a tie
/// compares the trailing block, again by grevlex. Any monomial that
/// involves a leading-block variable is therefore larger than every
/// monomial free of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    ElimBlock(usize),
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

#[inline]
fn grevlex_slice(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::GrevLex => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for (x, y) in a.exps().iter().rev().zip(b.exps().iter().rev()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::ElimBlock(k) => {
                let k = k.min(a.nvars());
                let (a1, a2) = a.exps().split_at(k);
                let (b1, b2) = b.exps().split_at(k);
                grevlex_slice(a1, b1).then_with(|| grevlex_slice(a2, b2))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Mono {
        Mono::from_exps(e.iter().copied())
    }

    #[test]
    fn grevlex_prefers_small_last_exponent() {
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_first_variable_dominates() {
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])),
            Ordering::Greater
        );
    }

    #[test]
    fn reflexive() {
        for o in [
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::ElimBlock(1),
        ] {
            assert_eq!(o.cmp(&m(&[2, 1, 3]), &m(&[2, 1, 3])), Ordering::Equal);
        }
    }

    #[test]
    fn elim_block_eliminates() {
        let o = MonomialOrder::ElimBlock(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
    }

    fn arb_mono() -> impl Strategy<Value = Mono> {
        proptest::collection::vec(0u16..4, 4).prop_map(|v| Mono::from_exps(v))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            (0usize..=4).prop_map(MonomialOrder::ElimBlock),
        ]
    }

    proptest! {
        #[test]
        fn order_axioms(o in arb_order(), a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            // antisymmetry
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            // transitivity
            if o.cmp(&a, &b) == Ordering::Greater && o.cmp(&b, &c) == Ordering::Greater {
                prop_assert_eq!(o.cmp(&a, &c), Ordering::Greater);
            }
            // multiplicativity
            if o.cmp(&a, &b) == Ordering::Greater {
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), Ordering::Greater);
            }
            // 1 is the least element
            prop_assert_ne!(o.cmp(&Mono::one(4), &a), Ordering::Greater);
        }

        #[test]
        fn elim_property(k in 1usize..4, a in arb_mono(), b in arb_mono()) {
            let o = MonomialOrder::ElimBlock(k);
            let a_has = a.exps()[..k].iter().any(|&e| e > 0);
            let b_free = b.exps()[..k].iter().all(|&e| e == 0);
            if a_has && b_free {
                prop_assert_eq!(o.cmp(&a, &b), Ordering::Greater);
            }
        }
    }
}
