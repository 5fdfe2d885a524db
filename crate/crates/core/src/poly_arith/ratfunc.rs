//! Elements of F = F_q(T) as reduced fractions.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly_arith::fq::Fq;
use crate::poly_arith::poly::PolyA;

/// `num / den` with `den` monic and `gcd(num, den) = 1`; zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: PolyA,
    den: PolyA,
}

impl RatFunc {
    pub fn new(num: PolyA, den: PolyA) -> Result<Self> {
        num.check_field(&den);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let fq = num.fq();
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: PolyA::one(fq),
            });
        }
        let g = num.gcd_monic(&den)?;
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lead_inv = fq.inv(den.lead())?;
        Ok(RatFunc {
            num: num.scale(lead_inv),
            den: den.scale(lead_inv),
        })
    }

    pub fn from_poly(a: PolyA) -> Self {
        let den = PolyA::one(a.fq());
        RatFunc { num: a, den }
    }

    pub fn zero(fq: Fq) -> Self {
        Self::from_poly(PolyA::zero(fq))
    }

    pub fn one(fq: Fq) -> Self {
        Self::from_poly(PolyA::one(fq))
    }

    pub fn num(&self) -> &PolyA {
        &self.num
    }

    pub fn den(&self) -> &PolyA {
        &self.den
    }

    pub fn fq(&self) -> Fq {
        self.num.fq()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<RatFunc> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u64) -> RatFunc {
        Self::new(self.num.pow(e), self.den.pow(e)).expect("nonzero denominator")
    }

    /// `ord_p` of the reduced fraction; `None` for zero (infinite order).
    pub fn ord_at(&self, p: &PolyA) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(valuation(&self.num, p) as i64 - valuation(&self.den, p) as i64)
    }

    /// Image in A/pA, failing when p divides the denominator.
    pub fn reduce_mod(&self, p: &PolyA) -> Result<PolyA> {
        let den_inv = self
            .den
            .inv_mod(p)
            .map_err(|_| Error::BadReduction(p.to_string()))?;
        self.num.mulmod(&den_inv, p)
    }

    /// Accepts `"poly"` or `"poly/poly"`, each in the polynomial text format.
    pub fn parse(fq: Fq, s: &str) -> Result<RatFunc> {
        match s.split_once('/') {
            None => Ok(Self::from_poly(PolyA::parse(fq, s)?)),
            Some((n, d)) => Self::new(PolyA::parse(fq, n)?, PolyA::parse(fq, d)?),
        }
    }
}

fn valuation(a: &PolyA, p: &PolyA) -> u32 {
    let mut v = 0;
    let mut cur = a.clone();
    while let Some(next) = cur.exact_div(p) {
        if cur.is_zero() {
            break;
        }
        cur = next;
        v += 1;
    }
    v
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(
                f,
                "({}) / ({}) (mod {})",
                self.num.to_human(),
                self.den.to_human(),
                self.fq().q()
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Fq {
        Fq::new(3).unwrap()
    }

    #[test]
    fn canonical_form_is_unique() {
        let fq = f3();
        // (2T + 2) / (2T^2 + 2T) = 1 / T
        let a = RatFunc::new(
            PolyA::from_i64s(fq, &[2, 2]),
            PolyA::from_i64s(fq, &[0, 2, 2]),
        )
        .unwrap();
        assert_eq!(a, RatFunc::parse(fq, "1/0,1").unwrap());
        assert!(a.den().is_monic());
        assert!(RatFunc::new(PolyA::one(fq), PolyA::zero(fq)).is_err());
    }

    #[test]
    fn valuation_and_reduction() {
        let fq = f3();
        let t = PolyA::t(fq);
        let t1 = PolyA::from_i64s(fq, &[1, 1]);
        let g = RatFunc::new(t.pow(2), t1.clone()).unwrap();
        assert_eq!(g.ord_at(&t), Some(2));
        assert_eq!(g.ord_at(&t1), Some(-1));
        assert!(g.reduce_mod(&t1).is_err());
        // 1/(T - 1) mod T = (-1)^-1 = 2
        let h = RatFunc::parse(fq, "1/T-1").unwrap();
        assert_eq!(h.reduce_mod(&t).unwrap(), PolyA::constant(fq, 2));
    }
}
