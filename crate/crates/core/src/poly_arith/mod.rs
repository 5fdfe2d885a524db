//! Exact arithmetic in F_q and in A = F_q[T].

pub mod factor;
pub mod fq;
pub mod poly;
pub mod ratfunc;

pub use factor::{
    euler_phi_a, factor, is_irreducible, is_squarefree, monic_divisors, monic_irreducibles,
    prime_factors, squarefree_decomposition, squarefree_split, Factorization,
};
pub use fq::{Fq, FqElem};
pub use poly::{Degree, LogNorm, PolyA};
pub use ratfunc::RatFunc;
