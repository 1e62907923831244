use std::fmt;

use smallvec::SmallVec;

/// Exponent storage. Desk-scale rings have at most a handful of variables.
pub type Exps = SmallVec<[u16; 8]>;

/// A monomial over a fixed variable list, stored as an exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono {
    exps: Exps,
    deg: u32,
}

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Mono::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps<I: IntoIterator<Item = u16>>(exps: I) -> Self {
        let exps: Exps = exps.into_iter().collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Mono { exps, deg }
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        debug_assert_eq!(self.nvars(), other.nvars());
        Mono {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            deg: self.deg + other.deg,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Mono) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        debug_assert!(self.divides(other));
        Mono {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono::from_exps(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)))
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        Mono::from_exps(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)))
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Exponent vector with the variables in `range` removed.
    pub fn drop_vars(&self, range: std::ops::Range<usize>) -> Mono {
        Mono::from_exps(
            self.exps
                .iter()
                .enumerate()
                .filter(|(i, _)| !range.contains(i))
                .map(|(_, &e)| e),
        )
    }

    /// Exponent vector with `count` zero slots inserted at `at`.
    pub fn insert_vars(&self, at: usize, count: usize) -> Mono {
        let mut exps: Exps = SmallVec::with_capacity(self.exps.len() + count);
        exps.extend_from_slice(&self.exps[..at]);
        exps.extend(std::iter::repeat(0).take(count));
        exps.extend_from_slice(&self.exps[at..]);
        Mono {
            exps,
            deg: self.deg,
        }
    }

    pub(crate) fn set_exp(&mut self, i: usize, e: u16) {
        self.deg = self.deg - self.exps[i] as u32 + e as u32;
        self.exps[i] = e;
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let a = Mono::from_exps([1, 0, 2]);
        let b = Mono::from_exps([2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Mono::from_exps([1, 1, 0]));
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.mul(&a).total_degree(), 6);
    }

    #[test]
    fn insert_and_drop_are_inverse() {
        let a = Mono::from_exps([3, 1]);
        let b = a.insert_vars(1, 2);
        assert_eq!(b.exps(), &[3, 0, 0, 1]);
        assert_eq!(b.drop_vars(1..3), a);
    }
}
