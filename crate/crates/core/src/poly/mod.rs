//! Exact polynomial arithmetic over the integers and over prime fields,
//! including factorization over F_p.

mod factor;
mod int_poly;
mod modp;

pub use factor::{
    factor_mod_p, factor_mod_p_seeded, irreducibility_evidence, FactorizationModP,
    IrreducibilityEvidence,
};
pub use int_poly::{poly_mul_int, IntPolynomial};
pub use modp::ModPPolynomial;
