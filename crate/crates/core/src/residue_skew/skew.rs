//! The twisted polynomial ring F_p{tau} with `tau c = c^q tau`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::FqMatrix;
use crate::poly_arith::{Degree, PolyA};
use crate::residue_skew::residue::ResidueField;
use crate::residue_skew::respoly::ResiduePoly;

#[derive(Clone)]
pub struct SkewPoly {
    field: Arc<ResidueField>,
    coeffs: Vec<PolyA>,
}

impl SkewPoly {
    pub fn zero(field: &Arc<ResidueField>) -> Self {
        SkewPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Arc<ResidueField>) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &Arc<ResidueField>, c: PolyA) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// `c * tau^k`.
    pub fn monomial(field: &Arc<ResidueField>, c: PolyA, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    pub fn tau_pow(field: &Arc<ResidueField>, k: usize) -> Self {
        Self::monomial(field, field.one(), k)
    }

    /// Coefficients lowest tau-degree first; each is reduced into the field.
    pub fn from_coeffs(field: &Arc<ResidueField>, coeffs: Vec<PolyA>) -> Self {
        let coeffs = coeffs.iter().map(|c| field.reduce(c)).collect();
        let mut s = SkewPoly {
            field: field.clone(),
            coeffs,
        };
        s.trim();
        s
    }

    fn from_reduced(field: &Arc<ResidueField>, coeffs: Vec<PolyA>) -> Self {
        let mut s = SkewPoly {
            field: field.clone(),
            coeffs,
        };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Arc<ResidueField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[PolyA] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> PolyA {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn deg_tau(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, other: &SkewPoly) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.same_field(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Left multiplication by a field element.
    pub fn scale_left(&self, c: &PolyA) -> SkewPoly {
        let k = &self.field;
        Self::from_reduced(k, self.coeffs.iter().map(|a| k.mul(c, a)).collect())
    }

    /// Twisted product: coefficient j is `sum_{i+k=j} u_i * v_k^(q^i)`.
    pub fn checked_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(k));
        }
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, ui) in self.coeffs.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in other.coeffs.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let term = k.mul(ui, &k.frob(vj, i));
                out[i + j] = &out[i + j] + &term;
            }
        }
        Ok(Self::from_reduced(k, out))
    }

    pub fn checked_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Ok(Self::from_reduced(&self.field, coeffs))
    }

    pub fn checked_sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.checked_add(&-other)
    }

    /// Right Euclidean division: `self = u * w + r` with `deg r < deg w`.
    pub fn right_divmod(&self, w: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check(w)?;
        let k = &self.field;
        let n = match w.deg_tau() {
            Degree::NegInf => return Err(Error::DivisionByZero),
            Degree::Finite(n) => n,
        };
        let mut r = self.coeffs.clone();
        if r.len() <= n {
            return Ok((Self::zero(k), self.clone()));
        }
        let mut u = vec![k.zero(); r.len() - n];
        let lead = w.coeffs[n].clone();
        for j in (0..u.len()).rev() {
            let c = &r[j + n];
            if c.is_zero() {
                continue;
            }
            let uj = k.div(c, &k.frob(&lead, j))?;
            for (i, wi) in w.coeffs.iter().enumerate() {
                if wi.is_zero() {
                    continue;
                }
                let t = k.mul(&uj, &k.frob(wi, j));
                r[j + i] = &r[j + i] - &t;
            }
            debug_assert!(r[j + n].is_zero());
            u[j] = uj;
        }
        r.truncate(n);
        Ok((Self::from_reduced(k, u), Self::from_reduced(k, r)))
    }

    /// Whether `w` divides `self` on the right.
    pub fn right_divisible_by(&self, w: &SkewPoly) -> Result<bool> {
        Ok(self.right_divmod(w)?.1.is_zero())
    }

    /// Applies the F_q-linear map `x -> sum u_i x^(q^i)` to a field element.
    pub fn eval(&self, x: &PolyA) -> PolyA {
        let k = &self.field;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(k.zero(), |acc, (i, c)| &acc + &k.mul(c, &k.frob(x, i)))
    }

    /// The additive polynomial `sum u_i x^(q^i)` as a dense polynomial over
    /// F_p. Its degree is `q^deg_tau`, so this is only for small inputs.
    pub fn as_additive_poly(&self) -> Result<ResiduePoly> {
        let k = &self.field;
        let Some(top) = self.coeffs.len().checked_sub(1) else {
            return Ok(ResiduePoly::zero(k));
        };
        let q = k.fq().q() as usize;
        let deg = q
            .checked_pow(top as u32)
            .filter(|&n| n <= 1 << 22)
            .ok_or_else(|| {
                Error::Internal(format!("additive polynomial of degree q^{top} too large"))
            })?;
        let mut coeffs = vec![k.zero(); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[q.pow(i as u32)] = c.clone();
        }
        Ok(ResiduePoly::from_coeffs(k, coeffs))
    }

    /// Matrix over F_q of `lambda -> self(lambda)` on F_p in the power basis.
    pub fn frobenius_action_matrix(&self) -> FqMatrix {
        let k = &self.field;
        let cols: Vec<Vec<u32>> = (0..k.degree())
            .map(|j| k.coords(&self.eval(&PolyA::monomial(k.fq(), 1, j))))
            .collect();
        FqMatrix::from_columns(k.fq(), k.degree(), &cols)
    }
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for SkewPoly {}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_add(rhs)
            .expect("skew polynomials over different fields")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_sub(rhs)
            .expect("skew polynomials over different fields")
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_mul(rhs)
            .expect("skew polynomials over different fields")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        SkewPoly::from_reduced(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*t^{k}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {:?}", self.field)
    }
}
