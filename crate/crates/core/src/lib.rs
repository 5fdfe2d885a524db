//! Exact arithmetic for rank-2 Drinfeld modules over F_q(T).

pub mod drinfeld;
pub mod error;
pub mod frobenius;
pub mod linalg;
pub mod poly_arith;
pub mod quadforms;
pub mod residue_skew;
pub mod survey;

pub use error::{Error, Result};
