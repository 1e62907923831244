//! Exact computations around projective duality.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: rational scalars, monomials, orders, sparse polynomials and
//!   the text grammar.
//! * [`groebner`]: Buchberger bases, elimination, saturation, Hilbert data
//!   and rational solving of zero-dimensional systems.
//! * [`duality`]: conormal ideals, dual hypersurfaces and the node/cusp
//!   census of plane curves.
//! * [`charclasses`]: Euler characteristics, Euler-obstruction weighted
//!   values and generic linear section profiles.
//! * [`plucker`]: conormal intersection numbers and the pairing identity
//!   between a pair of varieties and their duals, plus its corollaries.
//! * [`chowring`]: the Chow ring of `P(T*P^n ⊕ O)` and the zero-section
//!   bookkeeping behind the pairing identity.

pub mod charclasses;
pub mod chowring;
pub mod duality;
pub mod groebner;
pub mod plucker;
pub mod poly;

pub use poly::{parse_polynomial, Mono, MonomialOrder, Poly, PolyError, Rat, VarList};
