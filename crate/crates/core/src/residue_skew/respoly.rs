//! Ordinary (commutative) polynomials in x over a residue field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly_arith::PolyA;
use crate::residue_skew::residue::ResidueField;

#[derive(Clone)]
pub struct ResiduePoly {
    field: Arc<ResidueField>,
    coeffs: Vec<PolyA>,
}

impl ResiduePoly {
    pub fn zero(field: &Arc<ResidueField>) -> Self {
        ResiduePoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn from_coeffs(field: &Arc<ResidueField>, coeffs: Vec<PolyA>) -> Self {
        let coeffs = coeffs.iter().map(|c| field.reduce(c)).collect();
        let mut p = ResiduePoly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    /// `c * x^k`.
    pub fn monomial(field: &Arc<ResidueField>, c: PolyA, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Arc<ResidueField> {
        &self.field
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> PolyA {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &ResiduePoly) -> ResiduePoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn sub(&self, other: &ResiduePoly) -> ResiduePoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn mul(&self, other: &ResiduePoly) -> ResiduePoly {
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(k);
        }
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &k.mul(a, b);
                }
            }
        }
        Self::from_coeffs(k, out)
    }

    pub fn divmod(&self, b: &ResiduePoly) -> Result<(ResiduePoly, ResiduePoly)> {
        let k = &self.field;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() <= db {
            return Ok((Self::zero(k), self.clone()));
        }
        let inv = k.inv(&b.coeffs[db])?;
        let mut r = self.coeffs.clone();
        let mut quo = vec![k.zero(); r.len() - db];
        for i in (db..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let c = k.mul(&r[i], &inv);
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    let idx = i - db + j;
                    r[idx] = &r[idx] - &k.mul(&c, bj);
                }
            }
            quo[i - db] = c;
        }
        r.truncate(db);
        Ok((Self::from_coeffs(k, quo), Self::from_coeffs(k, r)))
    }

    pub fn rem(&self, b: &ResiduePoly) -> Result<ResiduePoly> {
        Ok(self.divmod(b)?.1)
    }

    pub fn eval(&self, x: &PolyA) -> PolyA {
        let k = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, c| &k.mul(&acc, x) + c)
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &ResiduePoly) -> ResiduePoly {
        let k = &self.field;
        self.coeffs.iter().rev().fold(Self::zero(k), |acc, c| {
            acc.mul(g).add(&Self::from_coeffs(k, vec![c.clone()]))
        })
    }
}

impl PartialEq for ResiduePoly {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for ResiduePoly {}

impl fmt::Debug for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*x^{k}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
