//! Hadamard-predicate PCP verifier, FGLSS graphs and α-colorings over
//! Label Cover instances, at desk scale.

pub mod cli;
pub mod error;
pub mod fglss;
pub mod label_cover;
pub mod pcp;
pub mod predicate;
pub mod sign;
pub mod weights;

pub use error::{Error, Result};
pub use sign::Sign;
