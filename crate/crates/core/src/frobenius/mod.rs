//! Per-prime Frobenius data: characteristic polynomial, the conductor chain
//! `A[pi] ⊆ E ⊆ O_K`, and the invariant factors of F_p as an A-module via psi.

pub mod oracles;
pub mod smith;

use crate::drinfeld::{DrinfeldModuleSpec, ReducedModule};
use crate::error::{Error, Result};
use crate::poly_arith::{factor, is_irreducible, is_squarefree, squarefree_split, FqElem, PolyA};
use crate::residue_skew::SkewPoly;

pub use smith::{invariant_factors, smith_diagonal, PolyMatrix};

/// `(a_p, mu_p)` with `tau^(2d) + psi_{a_p} tau^d + psi_{mu_p p} = 0`.
pub fn char_poly(m: &ReducedModule) -> Result<(PolyA, FqElem)> {
    let k = m.field();
    let fq = k.fq();
    let d = m.degree();
    let psi_p = m.psi_a(m.prime());
    let pi2 = SkewPoly::tau_pow(k, 2 * d);
    let mut found: Option<(PolyA, FqElem)> = None;
    for mu in fq.units() {
        let w = &pi2 + &psi_p.scale_left(&k.constant(mu));
        if (0..d).any(|i| !w.coeff(i).is_zero()) {
            continue;
        }
        // w = -psi_{a_p} tau^d, and the constant term of psi_{a_p} is a_p mod p
        let a_p = -&w.coeff(d);
        if !frobenius_relation_holds(m, &a_p, mu) {
            continue;
        }
        if found.is_some() {
            return Err(Error::Internal(format!(
                "two characteristic polynomials at p = {}",
                m.prime()
            )));
        }
        found = Some((a_p, fq.elem(mu)));
    }
    found.ok_or_else(|| {
        Error::Internal(format!(
            "no characteristic polynomial found at p = {}",
            m.prime()
        ))
    })
}

/// `pi^2 + psi_{a_p} pi + psi_{mu p} = 0` with `pi = tau^d`, by substitution.
pub fn frobenius_relation_holds(m: &ReducedModule, a_p: &PolyA, mu: u32) -> bool {
    let k = m.field();
    let d = m.degree();
    let pi = SkewPoly::tau_pow(k, d);
    let lhs = &(&(&pi * &pi) + &(&m.psi_a(a_p) * &pi)) + &m.psi_a(&m.prime().scale(mu));
    lhs.is_zero()
}

/// `a_p^2 - 4 mu_p p`.
pub fn discriminant(p: &PolyA, a_p: &PolyA, mu_p: FqElem) -> PolyA {
    let fq = p.fq();
    a_p * a_p - &p.scale(fq.mul(4 % fq.q(), mu_p.value))
}

/// `2 pi + psi_{a_p}`, a square root of the discriminant inside F_p{tau}.
pub fn sqrt_disc_element(m: &ReducedModule, a_p: &PolyA) -> SkewPoly {
    let k = m.field();
    let two_pi = SkewPoly::monomial(k, k.constant(2), m.degree());
    &two_pi + &m.psi_a(a_p)
}

/// Whether `(2 pi + a_p)/m0` lies in End(psi ⊗ F_p): `psi_{m0}` right-divides
/// `2 tau^d + psi_{a_p}`.
pub fn skew_membership(m: &ReducedModule, a_p: &PolyA, m0: &PolyA) -> Result<bool> {
    if m0.is_zero() {
        return Err(Error::ZeroInput("skew_membership"));
    }
    sqrt_disc_element(m, a_p).right_divisible_by(&m.psi_a(m0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conductor {
    pub disc: PolyA,
    pub b_max: PolyA,
    pub delta_k: PolyA,
    pub b_p: PolyA,
    pub c_p: PolyA,
    pub delta_p: PolyA,
}

pub fn conductor_chain(m: &ReducedModule, a_p: &PolyA, mu_p: FqElem) -> Result<Conductor> {
    let fq = a_p.fq();
    let disc = discriminant(m.prime(), a_p, mu_p);
    let (b_max, delta_k) = squarefree_split(&disc)?;
    let mut b_p = PolyA::one(fq);
    if !a_p.is_zero() && !b_max.is_one() {
        let v = sqrt_disc_element(m, a_p);
        for (l, e) in factor(&b_max)?.factors {
            let mut ok = PolyA::one(fq);
            for _ in 0..e {
                let next = &ok * &l;
                if !v.right_divisible_by(&m.psi_a(&next))? {
                    break;
                }
                ok = next;
            }
            b_p = &b_p * &ok;
        }
    }
    let c_p = b_max.exact_div(&b_p).expect("b_p divides b_max");
    let delta_p = &(&c_p * &c_p) * &delta_k;
    Ok(Conductor {
        disc,
        b_max,
        delta_k,
        b_p,
        c_p,
        delta_p,
    })
}

/// `(d1, d2)` with `F_p ≅ A/d1 × A/d2` via psi, from the Smith form of
/// `T*I - M`, M the matrix of `psi_T` on F_p.
pub fn module_structure(m: &ReducedModule) -> Result<(PolyA, PolyA)> {
    let diag = invariant_factors(&m.psi_t().frobenius_action_matrix())?;
    let n = diag.len();
    if diag[..n.saturating_sub(2)].iter().any(|e| !e.is_one()) {
        return Err(Error::InvariantViolation {
            p: m.prime().to_string(),
            detail: "more than two nontrivial invariant factors".into(),
        });
    }
    let fq = m.field().fq();
    let d2 = diag[n - 1].clone();
    let d1 = if n >= 2 {
        diag[n - 2].clone()
    } else {
        PolyA::one(fq)
    };
    Ok((d1, d2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusRecord {
    pub p: PolyA,
    pub a_p: PolyA,
    pub mu_p: FqElem,
    pub disc: PolyA,
    pub b_max: PolyA,
    pub delta_k: PolyA,
    pub b_p: PolyA,
    pub c_p: PolyA,
    pub delta_p: PolyA,
    pub d1: PolyA,
    pub d2: PolyA,
    pub supersingular: bool,
    pub j_bar: PolyA,
}

impl FrobeniusRecord {
    pub fn q(&self) -> u32 {
        self.p.fq().q()
    }

    pub fn degree(&self) -> usize {
        self.p.degree().expect("nonzero prime")
    }

    pub fn deg_delta_p(&self) -> usize {
        self.delta_p.degree().expect("nonzero discriminant")
    }

    /// `2 deg d2 - deg p`, nonnegative by the trivial bound.
    pub fn d2_slack(&self) -> i64 {
        2 * self.d2.degree().unwrap_or(0) as i64 - self.degree() as i64
    }

    /// Re-checks every algebraic invariant that does not need the module.
    pub fn check(&self) -> Result<()> {
        let fail = |detail: String| {
            Err(Error::InvariantViolation {
                p: self.p.to_string(),
                detail,
            })
        };
        let fq = self.p.fq();
        let d = match self.p.degree() {
            Some(d) if d >= 1 && self.p.is_monic() => d,
            _ => return fail("p is not a monic nonconstant polynomial".into()),
        };
        if !is_irreducible(&self.p)? {
            return fail("p is not irreducible".into());
        }
        if self.mu_p.is_zero() || self.mu_p.q != fq.q() {
            return fail(format!("mu_p = {} is not a unit of F_q", self.mu_p));
        }
        if 2 * self.a_p.degree().unwrap_or(0) > d {
            return fail(format!("deg a_p = {:?} exceeds deg p / 2", self.a_p.deg()));
        }
        if self.disc != discriminant(&self.p, &self.a_p, self.mu_p) {
            return fail("disc != a_p^2 - 4 mu_p p".into());
        }
        for (name, v) in [
            ("b_max", &self.b_max),
            ("b_p", &self.b_p),
            ("c_p", &self.c_p),
            ("d1", &self.d1),
            ("d2", &self.d2),
        ] {
            if !v.is_monic() {
                return fail(format!("{name} = {v} is not monic"));
            }
        }
        if &(&self.b_max * &self.b_max) * &self.delta_k != self.disc {
            return fail("disc != b_max^2 delta_K".into());
        }
        if !is_squarefree(&self.delta_k)? {
            return fail("delta_K is not squarefree".into());
        }
        if &self.b_p * &self.c_p != self.b_max {
            return fail("b_p c_p != b_max".into());
        }
        if &(&self.b_p * &self.b_p) * &self.delta_p != self.disc {
            return fail("a_p^2 - 4 mu_p p != b_p^2 delta_p".into());
        }
        if &(&self.c_p * &self.c_p) * &self.delta_k != self.delta_p {
            return fail("delta_p != c_p^2 delta_K".into());
        }
        if self.disc.lognorm()
            != self
                .b_p
                .lognorm()
                .mul(self.b_p.lognorm())
                .mul(self.delta_p.lognorm())
        {
            return fail("|disc| != |b_p|^2 |delta_p|".into());
        }
        if !self.d1.divides(&self.d2) {
            return fail("d1 does not divide d2".into());
        }
        let (dd1, dd2) = (self.d1.degree().unwrap_or(0), self.d2.degree().unwrap_or(0));
        if dd1 + dd2 != d {
            return fail("|d1 d2| != |p|".into());
        }
        if 2 * dd2 < d {
            return fail("|d2| < |p|^(1/2)".into());
        }
        let p_at_one = &(&PolyA::one(fq) + &self.a_p) + &self.p.scale(self.mu_p.value);
        if (&self.d1 * &self.d2) != p_at_one.monic() {
            return fail("d1 d2 != monic(P(1))".into());
        }
        if !self.delta_k.is_zero()
            && self.delta_k.degree().unwrap() % 2 == 0
            && fq.is_square(self.delta_k.lead())
        {
            return fail("delta_K is of split type at infinity".into());
        }
        if self.supersingular != self.a_p.is_zero() {
            return fail("supersingular flag disagrees with a_p".into());
        }
        if self.supersingular {
            let minus_four_mu = fq.neg(fq.mul(4 % fq.q(), self.mu_p.value));
            if !(self.b_max.is_one() && self.b_p.is_one() && self.c_p.is_one() && self.d1.is_one())
            {
                return fail("supersingular prime with nontrivial b_max, b_p, c_p or d1".into());
            }
            if self.delta_p != self.p.scale(minus_four_mu) {
                return fail("supersingular delta_p != -4 mu_p p".into());
            }
            let beta = &self.p - &self.d2;
            if beta.is_zero() || !beta.is_constant() {
                return fail("supersingular d2 is not p - beta with beta a unit".into());
            }
        }
        Ok(())
    }
}

/// Computes and fully checks the record for a good prime `p`.
pub fn build_record(psi: &DrinfeldModuleSpec, p: &PolyA) -> Result<FrobeniusRecord> {
    let m = psi.reduce_mod(p)?;
    record_for_module(&m)
}

pub fn record_for_module(m: &ReducedModule) -> Result<FrobeniusRecord> {
    let (a_p, mu_p) = char_poly(m)?;
    let cond = conductor_chain(m, &a_p, mu_p)?;
    let (d1, d2) = module_structure(m)?;
    let x = m.degree();
    // membership is closed under divisors and matches b_p exactly
    if !a_p.is_zero() && !cond.b_max.is_one() {
        for m0 in crate::poly_arith::monic_divisors(&cond.b_max)? {
            if 2 * m0.degree().unwrap() > x {
                return Err(Error::InvariantViolation {
                    p: m.prime().to_string(),
                    detail: format!("conductor candidate {m0} has degree above x/2"),
                });
            }
            if skew_membership(m, &a_p, &m0)? != m0.divides(&cond.b_p) {
                return Err(Error::InvariantViolation {
                    p: m.prime().to_string(),
                    detail: format!("membership of {m0} is not closed under divisors"),
                });
            }
        }
    }
    let record = FrobeniusRecord {
        p: m.prime().clone(),
        supersingular: a_p.is_zero(),
        a_p,
        mu_p,
        disc: cond.disc,
        b_max: cond.b_max,
        delta_k: cond.delta_k,
        b_p: cond.b_p,
        c_p: cond.c_p,
        delta_p: cond.delta_p,
        d1,
        d2,
        j_bar: m.j_invariant(),
    };
    record.check()?;
    Ok(record)
}
