//! Number-field coprimality densities at desk scale.
//!
//! Builds a monogenic order Z[x]/(f), certifies it maximal prime by prime,
//! splits rational primes into prime ideals, evaluates the associated zeta
//! value by Euler product with a rigorous tail bound, and measures the
//! density of coprime m-tuples in coordinate boxes both exactly and by
//! seeded sampling.

pub mod density;
pub mod error;
pub mod fixed;
pub mod ideal;
pub mod linalg;
pub mod order;
pub mod poly;
pub mod primes;
pub mod rng;
pub mod splitting;
pub mod zeta;

pub use error::{Error, Result};
