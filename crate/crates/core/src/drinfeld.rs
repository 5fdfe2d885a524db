//! Rank-2 Drinfeld modules `psi_T = T + g1 tau + g2 tau^2` over F_q(T) and
//! their reductions at primes of good reduction.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly_arith::{is_irreducible, prime_factors, Fq, PolyA, RatFunc};
use crate::residue_skew::{ResidueField, ResiduePoly, SkewPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldModuleSpec {
    fq: Fq,
    g1: RatFunc,
    g2: RatFunc,
}

impl DrinfeldModuleSpec {
    pub fn new(g1: RatFunc, g2: RatFunc) -> Result<Self> {
        if g2.is_zero() {
            return Err(Error::Config(
                "g2 must be nonzero for a rank-2 module".into(),
            ));
        }
        assert_eq!(g1.fq(), g2.fq(), "coefficients over different fields");
        Ok(DrinfeldModuleSpec {
            fq: g1.fq(),
            g1,
            g2,
        })
    }

    /// Parses `g1`, `g2` in the polynomial text format, optionally as `num/den`.
    pub fn parse(fq: Fq, g1: &str, g2: &str) -> Result<Self> {
        Self::new(RatFunc::parse(fq, g1)?, RatFunc::parse(fq, g2)?)
    }

    /// `psi_T = T + tau + tau^2`.
    pub fn standard(fq: Fq) -> Self {
        Self::new(RatFunc::one(fq), RatFunc::one(fq)).expect("nonzero g2")
    }

    pub fn fq(&self) -> Fq {
        self.fq
    }

    pub fn g1(&self) -> &RatFunc {
        &self.g1
    }

    pub fn g2(&self) -> &RatFunc {
        &self.g2
    }

    /// Monic primes dividing `den(g1) den(g2) num(g2)`: exactly the primes of
    /// bad reduction.
    pub fn bad_primes(&self) -> Result<Vec<PolyA>> {
        let mut out = Vec::new();
        for a in [self.g1.den(), self.g2.den(), self.g2.num()] {
            if !a.is_constant() {
                out.extend(prime_factors(a)?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `ord_p(g1) >= 0` and `ord_p(g2) = 0`.
    pub fn good_reduction(&self, p: &PolyA) -> Result<bool> {
        if !p.is_monic() || p.is_constant() || !is_irreducible(p)? {
            return Err(Error::NotIrreducible(p.to_string()));
        }
        let g1_ok = self.g1.ord_at(p).is_none_or(|v| v >= 0);
        let g2_ok = self.g2.ord_at(p) == Some(0);
        Ok(g1_ok && g2_ok)
    }

    pub fn reduce_mod(&self, p: &PolyA) -> Result<ReducedModule> {
        if !self.good_reduction(p)? {
            return Err(Error::BadReduction(p.to_string()));
        }
        let field = Arc::new(ResidueField::new(p.clone())?);
        let gbar1 = self.g1.reduce_mod(p)?;
        let gbar2 = self.g2.reduce_mod(p)?;
        ReducedModule::new(field, gbar1, gbar2)
    }

    /// Coefficients of `psi_T` in F{tau}, lowest first.
    pub fn psi_t(&self) -> Vec<RatFunc> {
        vec![
            RatFunc::from_poly(PolyA::t(self.fq)),
            self.g1.clone(),
            self.g2.clone(),
        ]
    }

    /// `psi_a` over F, by Horner in `psi_T`.
    pub fn psi_a(&self, a: &PolyA) -> Vec<RatFunc> {
        let psi_t = self.psi_t();
        let mut acc: Vec<RatFunc> = Vec::new();
        for &c in a.coeffs().iter().rev() {
            acc = global_mul(self.fq, &acc, &psi_t);
            let c = RatFunc::from_poly(PolyA::constant(self.fq, c));
            if acc.is_empty() {
                acc.push(c);
            } else {
                acc[0] = acc[0].add(&c);
            }
            trim_global(&mut acc);
        }
        acc
    }

    /// `j = g1^(q+1) / g2`.
    pub fn j_invariant(&self) -> RatFunc {
        self.g1
            .pow(self.fq.q() as u64 + 1)
            .div(&self.g2)
            .expect("g2 nonzero")
    }
}

fn trim_global(v: &mut Vec<RatFunc>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Product in F{tau}; coefficients twist by `c -> c^q`.
fn global_mul(fq: Fq, u: &[RatFunc], v: &[RatFunc]) -> Vec<RatFunc> {
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    let q = fq.q() as u64;
    let mut out = vec![RatFunc::zero(fq); u.len() + v.len() - 1];
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (k, vk) in v.iter().enumerate() {
            if vk.is_zero() {
                continue;
            }
            let twisted = vk.pow(q.pow(i as u32));
            out[i + k] = out[i + k].add(&ui.mul(&twisted));
        }
    }
    trim_global(&mut out);
    out
}

/// The reduction `(psi (x) F_p)_T = Tbar + gbar1 tau + gbar2 tau^2`.
#[derive(Clone, Debug)]
pub struct ReducedModule {
    field: Arc<ResidueField>,
    gbar1: PolyA,
    gbar2: PolyA,
    psi_t: SkewPoly,
}

impl ReducedModule {
    pub fn new(field: Arc<ResidueField>, gbar1: PolyA, gbar2: PolyA) -> Result<Self> {
        let gbar1 = field.reduce(&gbar1);
        let gbar2 = field.reduce(&gbar2);
        if gbar2.is_zero() {
            return Err(Error::BadReduction(field.modulus().to_string()));
        }
        let tbar = field.reduce(&PolyA::t(field.fq()));
        let psi_t = SkewPoly::from_coeffs(&field, vec![tbar, gbar1.clone(), gbar2.clone()]);
        Ok(ReducedModule {
            field,
            gbar1,
            gbar2,
            psi_t,
        })
    }

    pub fn field(&self) -> &Arc<ResidueField> {
        &self.field
    }

    /// The monic prime p.
    pub fn prime(&self) -> &PolyA {
        self.field.modulus()
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn gbar1(&self) -> &PolyA {
        &self.gbar1
    }

    pub fn gbar2(&self) -> &PolyA {
        &self.gbar2
    }

    pub fn psi_t(&self) -> &SkewPoly {
        &self.psi_t
    }

    /// `psi_a` by Horner over the base-T digits of `a`.
    pub fn psi_a(&self, a: &PolyA) -> SkewPoly {
        let k = &self.field;
        let mut acc = SkewPoly::zero(k);
        for &c in a.coeffs().iter().rev() {
            acc = &acc * &self.psi_t;
            acc = &acc + &SkewPoly::constant(k, k.constant(c));
        }
        acc
    }

    /// The additive polynomial `psi_a(x)`, of degree `q^(2 deg a)`.
    pub fn torsion_poly(&self, a: &PolyA) -> Result<ResiduePoly> {
        if a.is_zero() {
            return Err(Error::ZeroInput("torsion_poly"));
        }
        self.psi_a(a).as_additive_poly()
    }

    /// `j = gbar1^(q+1) / gbar2` in F_p.
    pub fn j_invariant(&self) -> PolyA {
        let k = &self.field;
        let num = k.pow(&self.gbar1, k.fq().q() as u128 + 1);
        k.div(&num, &self.gbar2).expect("gbar2 nonzero")
    }

    /// The isomorphic module `c^-1 psi_T c`.
    pub fn conjugate(&self, c: &PolyA) -> Result<ReducedModule> {
        let k = &self.field;
        let q = k.fq().q() as u128;
        let c_inv = k.inv(c)?;
        // c^-1 g_i tau^i c = g_i c^(q^i - 1) tau^i
        let g1 = k.mul(&self.gbar1, &k.mul(&k.pow(c, q), &c_inv));
        let g2 = k.mul(&self.gbar2, &k.mul(&k.pow(c, q * q), &c_inv));
        ReducedModule::new(k.clone(), g1, g2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Fq {
        Fq::new(3).unwrap()
    }

    fn p(c: &[i64]) -> PolyA {
        PolyA::from_i64s(f3(), c)
    }

    #[test]
    fn good_reduction_examples() {
        let fq = f3();
        let psi = DrinfeldModuleSpec::parse(fq, "1/T+1", "1").unwrap();
        assert!(!psi.good_reduction(&p(&[1, 1])).unwrap());
        assert!(psi.good_reduction(&p(&[0, 1])).unwrap());
        assert!(psi.good_reduction(&p(&[0, 0, 1])).is_err());
        assert!(matches!(
            psi.reduce_mod(&p(&[1, 1])),
            Err(Error::BadReduction(_))
        ));
        assert_eq!(psi.bad_primes().unwrap(), vec![p(&[1, 1])]);
    }

    #[test]
    fn reduction_of_constants() {
        let fq = f3();
        let psi = DrinfeldModuleSpec::standard(fq);
        let m = psi.reduce_mod(&p(&[0, 1])).unwrap();
        let k = m.field().clone();
        let expected = SkewPoly::from_coeffs(&k, vec![k.zero(), k.one(), k.one()]);
        assert_eq!(m.psi_t(), &expected);
        // g1 = 1/(T - 1) at p = T reduces to (-1)^-1 = 2
        let psi = DrinfeldModuleSpec::parse(fq, "1/T+2", "1").unwrap();
        let m = psi.reduce_mod(&p(&[0, 1])).unwrap();
        assert_eq!(m.gbar1(), &p(&[2]));
    }

    #[test]
    fn psi_on_constants_and_squares() {
        let fq = f3();
        let psi = DrinfeldModuleSpec::standard(fq);
        let m = psi.reduce_mod(&p(&[1, 0, 1])).unwrap();
        let k = m.field().clone();
        assert_eq!(m.psi_a(&p(&[2])), SkewPoly::constant(&k, k.constant(2)));
        let t = p(&[0, 1]);
        assert_eq!(m.psi_a(&t.pow(2)), m.psi_t() * m.psi_t());
        let a = p(&[1, 2, 0, 1]);
        assert_eq!(m.psi_a(&a).deg_tau(), crate::poly_arith::Degree::Finite(6));
    }

    #[test]
    fn torsion_poly_examples() {
        let fq = f3();
        let m = DrinfeldModuleSpec::standard(fq)
            .reduce_mod(&p(&[0, 1]))
            .unwrap();
        let k = m.field().clone();
        let x = m.torsion_poly(&p(&[1])).unwrap();
        assert_eq!(x, ResiduePoly::monomial(&k, k.one(), 1));
        // psi_T = tau + tau^2 over F_3 gives x^3 + x^9
        let tp = m.torsion_poly(&p(&[0, 1])).unwrap();
        let expected =
            ResiduePoly::monomial(&k, k.one(), 3).add(&ResiduePoly::monomial(&k, k.one(), 9));
        assert_eq!(tp, expected);
        assert!(m.torsion_poly(&PolyA::zero(fq)).is_err());
    }

    #[test]
    fn j_invariant_examples() {
        let fq = f3();
        assert_eq!(
            DrinfeldModuleSpec::standard(fq).j_invariant(),
            RatFunc::one(fq)
        );
        let psi = DrinfeldModuleSpec::parse(fq, "0", "1").unwrap();
        assert!(psi.j_invariant().is_zero());
        // g1 = T, g2 = 2: T^4 / 2 = 2 T^4
        let psi = DrinfeldModuleSpec::parse(fq, "T", "2").unwrap();
        assert_eq!(psi.j_invariant(), RatFunc::from_poly(p(&[0, 0, 0, 0, 2])));
        assert!(DrinfeldModuleSpec::parse(fq, "1", "0").is_err());
    }
}
