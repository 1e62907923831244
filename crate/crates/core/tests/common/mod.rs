#![allow(dead_code)]

use plucker_core::duality::{primal_vars, ProjVariety};
use plucker_core::parse_polynomial;

pub const CONIC: &str = "x0*x2 - x1^2";
pub const CONIC_B: &str = "x0^2 + x1^2 - x2^2";
/// Acnode at [1:0:0]; its flexes are rational, so the dual quartic has
/// three rational cusps.
pub const NODAL: &str = "x0*x2^2 - x1^3 + 3*x0*x1^2";
/// Crunode at [1:0:0] with irrational flexes.
pub const NODAL_IRRATIONAL_FLEXES: &str = "x0*x2^2 - x1^3 - x0*x1^2";
pub const CUSPIDAL: &str = "x0*x2^2 - x1^3";
pub const SMOOTH_CUBIC: &str = "x0^3 + x1^3 + x2^3";
pub const SMOOTH_QUARTIC: &str = "x0^4 + x1^4 + x2^4";
pub const QUADRIC_SURFACE: &str = "x0*x3 - x1*x2";

pub fn hyp(n: usize, f: &str) -> ProjVariety {
    ProjVariety::hypersurface(n, &parse_polynomial(f, &primal_vars(n)).unwrap()).unwrap()
}

pub fn curve(f: &str) -> ProjVariety {
    hyp(2, f)
}
