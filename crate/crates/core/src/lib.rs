//! Exact computation in Iwahori-Hecke algebras of symmetric groups: the norm and
//! Geck-Rouquier bases of the center, the algebra of composed permutations, and
//! the Farahat-Higman structure constants as polynomials in `n` with Laurent
//! coefficients in `q`.

pub mod coefficients;
pub mod combinatorics;
pub mod composed;
pub mod error;
pub mod fh_constants;
pub mod hecke;
pub mod symfunc;

pub use error::{Error, Result};
