use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::FqMatrix;
use crate::poly_arith::{is_irreducible, Fq, PolyA};

/// The residue field A/pA for a monic irreducible `p` of degree `d`.
///
/// Elements are [`PolyA`] values of degree below `d`. The matrices of the
/// q-power maps `c -> c^(q^i)`, `0 <= i < d`, are built on construction.
pub struct ResidueField {
    fq: Fq,
    modulus: PolyA,
    d: usize,
    frob: Vec<FqMatrix>,
}

impl ResidueField {
    pub fn new(modulus: PolyA) -> Result<Self> {
        if !modulus.is_monic() || !is_irreducible(&modulus)? {
            return Err(Error::NotIrreducible(modulus.to_string()));
        }
        let fq = modulus.fq();
        let d = modulus.degree().unwrap();
        let q = fq.q() as u128;
        let t = PolyA::t(fq);
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|j| {
                let img = t.powmod(q * j as u128, &modulus).expect("nonzero modulus");
                coords_of(&img, d)
            })
            .collect();
        let step = FqMatrix::from_columns(fq, d, &cols);
        let mut frob = Vec::with_capacity(d);
        frob.push(FqMatrix::identity(fq, d));
        for i in 1..d {
            let next = step.mul(&frob[i - 1]);
            frob.push(next);
        }
        Ok(ResidueField {
            fq,
            modulus,
            d,
            frob,
        })
    }

    pub fn fq(&self) -> Fq {
        self.fq
    }

    pub fn modulus(&self) -> &PolyA {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Number of elements, `q^d`.
    pub fn order(&self) -> u128 {
        (self.fq.q() as u128).pow(self.d as u32)
    }

    /// Reduction map A -> A/pA.
    pub fn reduce(&self, a: &PolyA) -> PolyA {
        a.rem(&self.modulus).expect("nonzero modulus")
    }

    pub fn zero(&self) -> PolyA {
        PolyA::zero(self.fq)
    }

    pub fn one(&self) -> PolyA {
        PolyA::one(self.fq)
    }

    pub fn constant(&self, c: u32) -> PolyA {
        PolyA::constant(self.fq, c)
    }

    pub fn add(&self, a: &PolyA, b: &PolyA) -> PolyA {
        a + b
    }

    pub fn sub(&self, a: &PolyA, b: &PolyA) -> PolyA {
        a - b
    }

    pub fn neg(&self, a: &PolyA) -> PolyA {
        -a
    }

    pub fn mul(&self, a: &PolyA, b: &PolyA) -> PolyA {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        self.reduce(&(a * b))
    }

    pub fn inv(&self, a: &PolyA) -> Result<PolyA> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        a.inv_mod(&self.modulus)
    }

    pub fn div(&self, a: &PolyA, b: &PolyA) -> Result<PolyA> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &PolyA, e: u128) -> PolyA {
        a.powmod(e, &self.modulus).expect("nonzero modulus")
    }

    /// `c^(q^i)`; exponents are taken mod d since `c^(q^d) = c`.
    pub fn frob(&self, c: &PolyA, i: usize) -> PolyA {
        let i = i % self.d;
        if i == 0 || c.is_constant() {
            return c.clone();
        }
        self.from_coords(&self.frob[i].mul_vec(&self.coords(c)))
    }

    /// Matrix of the q-power map in the basis `1, T, ..., T^(d-1)`.
    pub fn frobenius_matrix(&self) -> &FqMatrix {
        if self.d == 1 {
            &self.frob[0]
        } else {
            &self.frob[1]
        }
    }

    /// Coordinates in the power basis, always of length d.
    pub fn coords(&self, c: &PolyA) -> Vec<u32> {
        coords_of(c, self.d)
    }

    pub fn from_coords(&self, v: &[u32]) -> PolyA {
        PolyA::from_coeffs(self.fq, v.to_vec())
    }

    /// Every element of the field, zero first.
    pub fn elements(&self) -> impl Iterator<Item = PolyA> {
        PolyA::all_below_degree(self.fq, self.d)
    }

    pub fn same_field(&self, other: &ResidueField) -> bool {
        self.modulus == other.modulus
    }
}

fn coords_of(c: &PolyA, d: usize) -> Vec<u32> {
    (0..d).map(|i| c.coeff(i)).collect()
}

impl fmt::Debug for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_q[T]/({})", self.modulus.to_human())
    }
}
