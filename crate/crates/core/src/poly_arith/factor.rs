//! Irreducibility, squarefree decomposition and factorization in F_q[T].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly_arith::fq::Fq;
use crate::poly_arith::poly::PolyA;

/// `unit * prod(factor^exponent)` with monic irreducible factors sorted by
/// [`Ord`] on [`PolyA`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<(PolyA, u32)>,
}

impl Factorization {
    pub fn expand(&self, fq: Fq) -> PolyA {
        self.factors
            .iter()
            .fold(PolyA::constant(fq, self.unit), |acc, (l, e)| {
                &acc * &l.pow(*e as u64)
            })
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` of degree n is irreducible iff `T^(q^n) = T mod f` and
/// `gcd(T^(q^(n/r)) - T, f) = 1` for every prime `r | n`.
pub fn is_irreducible(a: &PolyA) -> Result<bool> {
    let n = match a.degree() {
        None => return Err(Error::ZeroInput("is_irreducible")),
        Some(0) => return Err(Error::ConstantInput("is_irreducible")),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(true);
    }
    let fq = a.fq();
    let f = a.monic();
    let t = PolyA::t(fq);
    // frob[k] = T^(q^k) mod f
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(t.rem(&f)?);
    for k in 1..=n {
        let next = frob[k - 1].powmod(fq.q() as u128, &f)?;
        frob.push(next);
    }
    if frob[n] != t.rem(&f)? {
        return Ok(false);
    }
    for r in prime_divisors(n) {
        let g = (&frob[n / r] - &t).gcd_monic(&f)?;
        if !g.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All monic irreducibles of degree exactly `x`, in [`Ord`] order, each once.
pub fn monic_irreducibles(fq: Fq, x: usize) -> impl Iterator<Item = PolyA> {
    PolyA::monic_of_degree(fq, x).filter(move |p| x >= 1 && is_irreducible(p).unwrap_or(false))
}

/// p-th root of a polynomial whose derivative vanishes (coefficients live
/// in the prime field, so only the exponents shrink).
fn pth_root(a: &PolyA) -> PolyA {
    let fq = a.fq();
    let p = fq.q() as usize;
    debug_assert!(a
        .coeffs()
        .iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || i % p == 0));
    let coeffs = a.coeffs().iter().step_by(p).copied().collect();
    PolyA::from_coeffs(fq, coeffs)
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime monic
/// squarefree parts with their multiplicities. Handles the characteristic-p
/// case where the derivative vanishes on p-th powers.
pub fn squarefree_decomposition(a: &PolyA) -> Result<Vec<(PolyA, u32)>> {
    if a.is_zero() {
        return Err(Error::ZeroInput("squarefree_decomposition"));
    }
    let mut parts = Vec::new();
    sff(&a.monic(), 1, &mut parts)?;
    parts.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(&y.0)));
    Ok(parts)
}

fn sff(a: &PolyA, scale: u32, out: &mut Vec<(PolyA, u32)>) -> Result<()> {
    if a.is_constant() {
        return Ok(());
    }
    let p = a.fq().q();
    let da = a.derivative();
    if da.is_zero() {
        return sff(&pth_root(a), scale * p, out);
    }
    let mut c = a.gcd_monic(&da)?;
    let mut w = a.exact_div(&c).expect("gcd divides");
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd_monic(&c)?;
        let z = w.exact_div(&y).expect("gcd divides");
        if !z.is_one() {
            out.push((z, i * scale));
        }
        i += 1;
        c = c.exact_div(&y).expect("gcd divides");
        w = y;
    }
    if !c.is_one() {
        sff(&pth_root(&c), scale * p, out)?;
    }
    Ok(())
}

/// Writes `a = b_max^2 * delta` with `delta` squarefree and `b_max` monic and
/// as large as possible. The unit of `a` stays inside `delta`.
pub fn squarefree_split(a: &PolyA) -> Result<(PolyA, PolyA)> {
    if a.is_zero() {
        return Err(Error::ZeroInput("squarefree_split"));
    }
    let fq = a.fq();
    let mut b_max = PolyA::one(fq);
    let mut delta = PolyA::constant(fq, a.lead());
    for (s, e) in squarefree_decomposition(a)? {
        if e >= 2 {
            b_max = &b_max * &s.pow((e / 2) as u64);
        }
        if e % 2 == 1 {
            delta = &delta * &s;
        }
    }
    Ok((b_max, delta))
}

pub fn is_squarefree(a: &PolyA) -> Result<bool> {
    Ok(squarefree_split(a)?.0.is_one())
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn distinct_degree(f: &PolyA) -> Result<Vec<(PolyA, usize)>> {
    let fq = f.fq();
    let t = PolyA::t(fq);
    let mut rest = f.clone();
    let mut h = t.rem(&rest)?;
    let mut out = Vec::new();
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.powmod(fq.q() as u128, &rest)?;
        let g = (&h - &t).gcd_monic(&rest)?;
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest)?;
            out.push((g, i));
        }
        i += 1;
    }
    if !rest.is_constant() {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree `i`.
fn equal_degree(f: &PolyA, i: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyA>) -> Result<()> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(());
    }
    if n == i {
        out.push(f.clone());
        return Ok(());
    }
    let fq = f.fq();
    let qi = (fq.q() as u128)
        .checked_pow(i as u32)
        .ok_or_else(|| Error::Internal("equal-degree exponent overflow".into()))?;
    let exp = (qi - 1) / 2;
    loop {
        let coeffs: Vec<u32> = (0..n).map(|_| rng.gen_range(0..fq.q())).collect();
        let a = PolyA::from_coeffs(fq, coeffs);
        if a.is_constant() {
            continue;
        }
        let b = &a.powmod(exp, f)? - &PolyA::one(fq);
        let g = b.gcd_monic(f)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let other = f.exact_div(&g).expect("gcd divides");
            equal_degree(&g, i, rng, out)?;
            equal_degree(&other, i, rng, out)?;
            return Ok(());
        }
    }
}

/// Complete factorization into a unit times monic irreducibles.
pub fn factor(a: &PolyA) -> Result<Factorization> {
    if a.is_zero() {
        return Err(Error::ZeroInput("factor"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d1f7);
    let mut factors = Vec::new();
    for (part, e) in squarefree_decomposition(a)? {
        for (block, i) in distinct_degree(&part)? {
            let mut irr = Vec::new();
            equal_degree(&block, i, &mut rng, &mut irr)?;
            factors.extend(irr.into_iter().map(|l| (l, e)));
        }
    }
    factors.sort();
    let mut merged: Vec<(PolyA, u32)> = Vec::with_capacity(factors.len());
    for (l, e) in factors {
        match merged.last_mut() {
            Some((prev, pe)) if *prev == l => *pe += e,
            _ => merged.push((l, e)),
        }
    }
    Ok(Factorization {
        unit: a.lead(),
        factors: merged,
    })
}

/// Monic irreducible divisors of `a`.
pub fn prime_factors(a: &PolyA) -> Result<Vec<PolyA>> {
    Ok(factor(a)?.factors.into_iter().map(|(l, _)| l).collect())
}

/// The function-field Euler function `phi_A(c) = |c| prod_{l | c} (1 - 1/|l|)`,
/// i.e. the number of units of A/cA.
pub fn euler_phi_a(c: &PolyA) -> Result<u128> {
    if c.is_zero() {
        return Err(Error::ZeroInput("euler_phi_a"));
    }
    let q = c.fq().q() as u128;
    let mut phi: u128 = 1;
    for (l, e) in factor(c)?.factors {
        let norm = q.pow(l.degree().unwrap() as u32);
        phi *= norm.pow(e - 1) * (norm - 1);
    }
    Ok(phi)
}

/// Monic divisors of `a`, from its factorization.
pub fn monic_divisors(a: &PolyA) -> Result<Vec<PolyA>> {
    let fq = a.fq();
    let mut divs = vec![PolyA::one(fq)];
    for (l, e) in factor(a)?.factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..e {
                cur = &cur * &l;
                next.push(cur.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}
