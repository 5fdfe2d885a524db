//! Independent brute-force checks for the conductor test and the invariant
//! factors. These are slow and meant for small primes only.

use crate::drinfeld::{DrinfeldModuleSpec, ReducedModule};
use crate::error::{Error, Result};
use crate::frobenius::{
    char_poly, conductor_chain, module_structure, skew_membership, sqrt_disc_element,
};
use crate::linalg::FqMatrix;
use crate::poly_arith::{monic_divisors, monic_irreducibles, Degree, PolyA};
use crate::residue_skew::{ResiduePoly, SkewPoly};

/// `r(x)^q`: in characteristic p this only twists coefficients and spreads
/// exponents.
fn q_power(r: &ResiduePoly) -> ResiduePoly {
    let k = r.field();
    let q = k.fq().q() as usize;
    let Some(deg) = r.degree() else {
        return r.clone();
    };
    let mut coeffs = vec![k.zero(); deg * q + 1];
    for i in 0..=deg {
        coeffs[i * q] = k.frob(&r.coeff(i), 1);
    }
    ResiduePoly::from_coeffs(k, coeffs)
}

/// Frobenius acts on `psi[m0]` as the scalar `a` for some `a` with
/// `deg a < deg m0`, i.e. `psi_{m0}(x)` divides `x^(q^d) - psi_a(x)`.
/// `a_p` is used only to cross-check `2a + a_p ≡ 0 mod m0`.
pub fn scalar_action_oracle(m: &ReducedModule, a_p: &PolyA, m0: &PolyA) -> Result<bool> {
    if !m0.gcd_monic(m.prime())?.is_one() {
        return Err(Error::NotCoprime(m0.to_string()));
    }
    let k = m.field();
    let fq = k.fq();
    let n = m0.degree().expect("nonzero m0");
    if n == 0 {
        return Ok(true);
    }
    let tp = m.torsion_poly(m0)?;
    let mut frob_x = ResiduePoly::monomial(k, k.one(), 1);
    for _ in 0..m.degree() {
        frob_x = q_power(&frob_x).rem(&tp)?;
    }
    let mut hits = Vec::new();
    for a in PolyA::all_below_degree(fq, n) {
        let psi_a = m.psi_a(&a).as_additive_poly()?;
        if psi_a == frob_x {
            hits.push(a);
        }
    }
    if hits.len() > 1 {
        return Err(Error::Internal(format!(
            "Frobenius acts by two scalars on psi[{m0}]"
        )));
    }
    if let Some(a) = hits.first() {
        let two_a = a.scale(2);
        if !m0.divides(&(&two_a + a_p)) {
            return Err(Error::Internal(format!(
                "scalar {a} on psi[{m0}] contradicts a_p = {a_p}"
            )));
        }
    }
    Ok(!hits.is_empty())
}

fn coord_vector(u: &SkewPoly, len: usize) -> Vec<u32> {
    let k = u.field();
    (0..len).flat_map(|i| k.coords(&u.coeff(i))).collect()
}

/// Basis of `{u : deg_tau u <= bound, u psi_T = psi_T u}` over F_q, from the
/// kernel of the linear map `u -> u psi_T - psi_T u`.
pub fn centralizer_basis(m: &ReducedModule, bound: usize) -> Vec<SkewPoly> {
    let k = m.field();
    let fq = k.fq();
    let d = m.degree();
    let psi_t = m.psi_t();
    let mut cols = Vec::with_capacity((bound + 1) * d);
    let mut units = Vec::with_capacity((bound + 1) * d);
    for i in 0..=bound {
        for j in 0..d {
            let u = SkewPoly::monomial(k, PolyA::monomial(fq, 1, j), i);
            let comm = &(&u * psi_t) - &(psi_t * &u);
            cols.push(coord_vector(&comm, bound + 3));
            units.push(u);
        }
    }
    let mat = FqMatrix::from_columns(fq, (bound + 3) * d, &cols);
    mat.kernel()
        .into_iter()
        .map(|v| {
            v.iter()
                .zip(&units)
                .filter(|(c, _)| **c != 0)
                .fold(SkewPoly::zero(k), |acc, (c, u)| {
                    &acc + &u.scale_left(&k.constant(*c))
                })
        })
        .collect()
}

pub fn centralizer_dim(m: &ReducedModule, bound: usize) -> (usize, Vec<SkewPoly>) {
    let basis = centralizer_basis(m, bound);
    (basis.len(), basis)
}

/// Whether some `u` in the centralizer of psi_T satisfies
/// `u psi_{m0} = 2 tau^d + psi_{a_p}`, found by linear algebra over F_q.
pub fn centralizer_membership(m: &ReducedModule, a_p: &PolyA, m0: &PolyA) -> Result<bool> {
    let v = sqrt_disc_element(m, a_p);
    let Degree::Finite(dv) = v.deg_tau() else {
        return Err(Error::Internal("2 pi + a_p vanished".into()));
    };
    let dm = 2 * m0
        .degree()
        .ok_or(Error::ZeroInput("centralizer_membership"))?;
    if dm > dv {
        return Ok(false);
    }
    let bound = dv - dm;
    let psi_m = m.psi_a(m0);
    let basis = centralizer_basis(m, bound);
    let d = m.degree();
    let cols: Vec<Vec<u32>> = basis
        .iter()
        .map(|u| coord_vector(&(u * &psi_m), dv + 1))
        .collect();
    let mat = FqMatrix::from_columns(m.field().fq(), (dv + 1) * d, &cols);
    Ok(mat.solve(&coord_vector(&v, dv + 1)).is_some())
}

/// `(d1, d2)` by counting `psi_m`-kernels on every element of F_p:
/// d2 is the monic m of least degree killing everything, d1 the monic m of
/// largest degree with `#ker psi_m = |m|^2`.
pub fn torsion_scan_invariants(m: &ReducedModule) -> Result<(PolyA, PolyA)> {
    let k = m.field();
    let fq = k.fq();
    let d = m.degree();
    let q = fq.q() as u128;
    let order = k.order();
    let elements: Vec<PolyA> = k.elements().collect();
    let mut d1 = PolyA::one(fq);
    let mut d2: Option<PolyA> = None;
    for deg in 0..=d {
        for cand in PolyA::monic_of_degree(fq, deg) {
            let psi = m.psi_a(&cand);
            let ker = elements.iter().filter(|x| psi.eval(x).is_zero()).count() as u128;
            if ker == order && d2.is_none() {
                d2 = Some(cand.clone());
            }
            if ker == q.pow(2 * deg as u32) {
                d1 = cand;
            }
        }
    }
    let d2 = d2.ok_or_else(|| Error::Internal("no annihilator of degree <= deg p".into()))?;
    Ok((d1, d2))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub primes: usize,
    pub tests: usize,
    /// Tests with `m0 != 1` where all three said yes.
    pub nontrivial_passes: usize,
    /// `(p, m0, skew, scalar, centralizer)` for every disagreement.
    pub disagreements: Vec<(PolyA, PolyA, bool, bool, bool)>,
}

/// Runs the three membership tests on every good prime of degree
/// `<= max_deg`, for every monic divisor of `b_max` and, as extra negative
/// controls, every monic linear `m0` coprime to p.
pub fn equivalence_sweep(psi: &DrinfeldModuleSpec, max_deg: usize) -> Result<EquivalenceReport> {
    let fq = psi.fq();
    let mut report = EquivalenceReport::default();
    for x in 1..=max_deg {
        for p in monic_irreducibles(fq, x) {
            if !psi.good_reduction(&p)? {
                continue;
            }
            let m = psi.reduce_mod(&p)?;
            let (a_p, mu_p) = char_poly(&m)?;
            let cond = conductor_chain(&m, &a_p, mu_p)?;
            report.primes += 1;
            let mut cands = monic_divisors(&cond.b_max)?;
            let extra: Vec<PolyA> = PolyA::monic_of_degree(fq, 1)
                .filter(|l| l != &p && !cands.contains(l))
                .collect();
            cands.extend(extra);
            for m0 in cands {
                let s = skew_membership(&m, &a_p, &m0)?;
                let o = scalar_action_oracle(&m, &a_p, &m0)?;
                let c = centralizer_membership(&m, &a_p, &m0)?;
                report.tests += 1;
                if s && o && c && !m0.is_one() {
                    report.nontrivial_passes += 1;
                }
                if !(s == o && o == c) {
                    report.disagreements.push((p.clone(), m0, s, o, c));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SmithReport {
    pub primes: usize,
    /// `(p, smith (d1, d2), scan (d1, d2))` for every mismatch.
    pub mismatches: Vec<(PolyA, (PolyA, PolyA), (PolyA, PolyA))>,
}

/// Compares Smith-form invariant factors against the torsion scan.
pub fn smith_vs_scan(psi: &DrinfeldModuleSpec, max_deg: usize) -> Result<SmithReport> {
    let fq = psi.fq();
    let mut report = SmithReport::default();
    for x in 1..=max_deg {
        for p in monic_irreducibles(fq, x) {
            if !psi.good_reduction(&p)? {
                continue;
            }
            let m = psi.reduce_mod(&p)?;
            let smith = module_structure(&m)?;
            let scan = torsion_scan_invariants(&m)?;
            report.primes += 1;
            if smith != scan {
                report.mismatches.push((p, smith, scan));
            }
        }
    }
    Ok(report)
}
