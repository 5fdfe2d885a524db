//! The prime field F_q, q an odd prime.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arithmetic context for F_q. Elements are plain residues in `[0, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fq {
    q: u32,
}

impl Fq {
    /// Largest accepted modulus; keeps every product below 2^32 before reduction.
    pub const MAX_Q: u32 = 65521;

    pub fn new(q: u64) -> Result<Self> {
        if q < 3 || q % 2 == 0 || q > Self::MAX_Q as u64 || !is_prime(q) {
            return Err(Error::InvalidModulus(q));
        }
        Ok(Fq { q: q as u32 })
    }

    pub(crate) fn trusted(q: u32) -> Self {
        Fq { q }
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.q as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.q;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u32) -> Result<u32> {
        if a % self.q == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// Euler's criterion. Zero counts as a square.
    pub fn is_square(self, a: u32) -> bool {
        a == 0 || self.pow(a, (self.q as u64 - 1) / 2) == 1
    }

    pub fn elem(self, value: u32) -> FqElem {
        FqElem {
            q: self.q,
            value: value % self.q,
        }
    }

    /// The nonzero elements 1, 2, ..., q - 1.
    pub fn units(self) -> impl Iterator<Item = u32> {
        1..self.q
    }
}

/// A single element of F_q that remembers its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FqElem {
    pub q: u32,
    pub value: u32,
}

impl FqElem {
    pub fn field(self) -> Fq {
        Fq { q: self.q }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}
