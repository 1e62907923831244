//! Buchberger's algorithm over the rationals, and the ideal operations built
//! on top of it: elimination, intersection, saturation, Hilbert data, and
//! rational solving of zero-dimensional systems.

mod buchberger;
mod elim;
mod hilbert;
mod solve;
mod univariate;

pub use buchberger::{groebner_basis, groebner_basis_with, verify_reduced, Selection};
pub use elim::{eliminate, intersect, saturate, saturate_by};
pub use hilbert::{hilbert_data, HilbertData};
pub use solve::rational_points_zero_dim;
pub use univariate::rational_roots;

use thiserror::Error;

use crate::poly::{MonomialOrder, Poly, PolyError, VarList};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("solution set has irrational coordinates")]
    NotAllRational,
    #[error("ideal has no nonzero generators")]
    ZeroIdeal,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A finitely generated ideal over a shared variable list.
#[derive(Clone, Debug)]
pub struct Ideal {
    generators: Vec<Poly>,
    vars: VarList,
    order: MonomialOrder,
}

impl Ideal {
    /// Zero generators are dropped; every generator must live over `vars`.
    pub fn new(
        generators: Vec<Poly>,
        vars: &VarList,
        order: MonomialOrder,
    ) -> Result<Self, PolyError> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.vars() != vars {
                return Err(PolyError::VariableMismatch);
            }
            if !g.is_zero() {
                gens.push(g.with_order(order));
            }
        }
        Ok(Ideal {
            generators: gens,
            vars: vars.clone(),
            order,
        })
    }

    /// Ideal with the order taken from the first generator (GrevLex if empty).
    pub fn from_polys(generators: Vec<Poly>, vars: &VarList) -> Result<Self, PolyError> {
        let order = generators
            .first()
            .map_or(MonomialOrder::GrevLex, |g| g.order());
        Ideal::new(generators, vars, order)
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        Ideal {
            generators: self
                .generators
                .iter()
                .map(|g| g.with_order(order))
                .collect(),
            vars: self.vars.clone(),
            order,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Poly::is_homogeneous)
    }

    /// Sum of ideals over the same ring.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VariableMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().map(|g| g.with_order(self.order)));
        Ideal::new(gens, &self.vars, self.order)
    }

    pub fn groebner(&self) -> ReducedBasis {
        groebner_basis(self)
    }

    /// Equality as ideals: identical reduced bases under GrevLex.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.vars == other.vars
            && groebner_basis(&self.with_order(MonomialOrder::GrevLex)).basis()
                == groebner_basis(&other.with_order(MonomialOrder::GrevLex)).basis()
    }

    pub fn contains(&self, f: &Poly) -> bool {
        normal_form(&f.with_order(self.order), &self.groebner()).is_zero()
    }
}

/// The reduced Gröbner basis of an ideal under a fixed order.
///
/// Elements are monic, inter-reduced and sorted by decreasing leading
/// monomial. The zero ideal has an empty basis; the unit ideal has `{1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBasis {
    basis: Vec<Poly>,
    vars: VarList,
    order: MonomialOrder,
}

impl ReducedBasis {
    pub(crate) fn from_parts(basis: Vec<Poly>, vars: VarList, order: MonomialOrder) -> Self {
        ReducedBasis { basis, vars, order }
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            generators: self.basis.clone(),
            vars: self.vars.clone(),
            order: self.order,
        }
    }
}

/// Remainder of `f` on full division by `b`.
pub fn normal_form(f: &Poly, b: &ReducedBasis) -> Poly {
    let f = f.with_order(b.order());
    let refs: Vec<&Poly> = b.basis().iter().collect();
    buchberger::reduce(&f, &refs)
}
