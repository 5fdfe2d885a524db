//! Residue fields A/pA and the twisted polynomial ring over them.

pub mod residue;
pub mod respoly;
pub mod skew;

pub use residue::ResidueField;
pub use respoly::ResiduePoly;
pub use skew::SkewPoly;
