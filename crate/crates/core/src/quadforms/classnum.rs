//! Behaviour of the infinite place, the quadratic character of F(sqrt D),
//! `L(1, chi)`, and class numbers of maximal and non-maximal orders.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly_arith::{factor, is_irreducible, squarefree_split, Fq, PolyA};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InfinityType {
    Ramified,
    Inert,
    Split,
}

impl InfinityType {
    pub fn is_imaginary(self) -> bool {
        self != InfinityType::Split
    }
}

impl fmt::Display for InfinityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InfinityType::Ramified => "ramified",
            InfinityType::Inert => "inert",
            InfinityType::Split => "split",
        })
    }
}

/// Read off degree parity and leading coefficient; no squarefreeness needed,
/// since multiplying by a monic square changes neither.
pub fn place_type(delta: &PolyA) -> Result<InfinityType> {
    let n = delta.degree().ok_or(Error::ZeroInput("place_type"))?;
    Ok(if n % 2 == 1 {
        InfinityType::Ramified
    } else if delta.fq().is_square(delta.lead()) {
        InfinityType::Split
    } else {
        InfinityType::Inert
    })
}

pub fn infinity_type(delta: &PolyA) -> Result<InfinityType> {
    let (b, _) = squarefree_split(delta)?;
    if !b.is_one() {
        return Err(Error::NotSquarefree(delta.to_string()));
    }
    if delta.is_constant() && delta.fq().is_square(delta.lead()) {
        return Err(Error::Degenerate(delta.to_string()));
    }
    place_type(delta)
}

fn require_imaginary(delta: &PolyA) -> Result<InfinityType> {
    let t = infinity_type(delta)?;
    if !t.is_imaginary() {
        return Err(Error::NotImaginary(delta.to_string()));
    }
    Ok(t)
}

/// `(delta / ell)` for an irreducible `ell`: 0 if `ell | delta`, else the
/// Euler criterion `delta^((|ell|-1)/2) = ±1 mod ell`.
pub fn quad_symbol(delta: &PolyA, ell: &PolyA) -> Result<i8> {
    if ell.is_constant() || !is_irreducible(ell)? {
        return Err(Error::NotIrreducible(ell.to_string()));
    }
    let r = delta.rem(ell)?;
    if r.is_zero() {
        return Ok(0);
    }
    let q = ell.fq().q() as u128;
    let norm = q.pow(ell.degree().unwrap() as u32);
    let e = r.powmod((norm - 1) / 2, ell)?;
    Ok(if e.is_one() { 1 } else { -1 })
}

/// `chi_delta(m)` for monic `m`, extended multiplicatively from
/// [`quad_symbol`].
pub fn chi(delta: &PolyA, m: &PolyA) -> Result<i8> {
    if m.is_zero() {
        return Err(Error::ZeroInput("chi"));
    }
    let mut v = 1i8;
    for (l, e) in factor(m)?.factors {
        let s = quad_symbol(delta, &l)?;
        if s == 0 {
            return Ok(0);
        }
        if s == -1 && e % 2 == 1 {
            v = -v;
        }
    }
    Ok(v)
}

/// `sum over monic m, deg m < deg delta_B, of chi(m)/|m|`.
pub fn l_one(delta_b: &PolyA) -> Result<BigRational> {
    require_imaginary(delta_b)?;
    let fq = delta_b.fq();
    let n = delta_b.degree().unwrap();
    let q = BigInt::from(fq.q());
    let mut total = BigRational::zero();
    for k in 0..n {
        let mut s = 0i64;
        for m in PolyA::monic_of_degree(fq, k) {
            s += chi(delta_b, &m)? as i64;
        }
        total += BigRational::new(BigInt::from(s), q.pow(k as u32));
    }
    Ok(total)
}

fn to_integer(r: &BigRational, what: &str) -> Result<u128> {
    if !r.is_integer() || !r.is_positive() {
        return Err(Error::Internal(format!(
            "{what} = {r} is not a positive integer"
        )));
    }
    r.to_integer()
        .to_u128()
        .ok_or_else(|| Error::Internal(format!("{what} = {r} overflows")))
}

/// `h(B)` from the class number formula. A constant non-square `delta_B`
/// gives `B = F_(q^2)[T]` with trivial class group.
pub fn h_maximal(delta_b: &PolyA) -> Result<u128> {
    require_imaginary(delta_b)?;
    let fq = delta_b.fq();
    let n = delta_b.degree().unwrap() as u32;
    if n == 0 {
        return Ok(1);
    }
    let l = l_one(delta_b)?;
    let q = BigInt::from(fq.q());
    let h = if n % 2 == 1 {
        l * BigRational::from_integer(q.pow((n - 1) / 2))
    } else {
        l * BigRational::new(BigInt::from(2) * q.pow(n / 2), q.clone() + 1)
    };
    let h = to_integer(&h, "h(B)")?;
    if !h_maximal_within_bound(fq, n as usize, h) {
        return Err(Error::Internal(format!(
            "h(B) = {h} exceeds the L(1) bound for {delta_b}"
        )));
    }
    Ok(h)
}

/// `h <= sqrt(|D|) deg D / sqrt(q)` (odd degree) or
/// `h <= 2 sqrt(|D|) deg D / (q + 1)` (even degree), compared exactly.
pub fn h_maximal_within_bound(fq: Fq, n: usize, h: u128) -> bool {
    let q = fq.q() as u128;
    let n32 = n as u32;
    if n % 2 == 1 {
        h <= n as u128 * q.pow((n32 - 1) / 2)
    } else {
        h * (q + 1) <= 2 * n as u128 * q.pow(n32 / 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderInvariants {
    pub disc_o: PolyA,
    pub conductor: PolyA,
    pub disc_b: PolyA,
    pub infinity_type: InfinityType,
    pub h_b: u128,
    pub h_o: u128,
}

impl OrderInvariants {
    /// `[B^x : O^x]`. B has units beyond F_q only when K = F_(q^2)(T), i.e.
    /// `Delta_B` is a non-square constant; a proper suborder keeps only F_q.
    pub fn unit_index(&self) -> u128 {
        if self.disc_b.degree() == Some(0) && !self.conductor.is_one() {
            self.disc_o.fq().q() as u128 + 1
        } else {
            1
        }
    }

    /// `prod (1 + 1/|l|) / max(1, log log |c|)`; monitored, not bounded.
    pub fn euler_product_ratio(&self) -> Result<f64> {
        let q = self.disc_o.fq().q() as f64;
        let mut prod = 1.0;
        for (l, _) in factor(&self.conductor)?.factors {
            prod *= 1.0 + q.powi(-(l.degree().unwrap() as i32));
        }
        let log_c = self.conductor.degree().unwrap() as f64 * q.ln();
        let denom = if log_c > 1.0 {
            log_c.ln().max(1.0)
        } else {
            1.0
        };
        Ok(prod / denom)
    }

    /// `h(O) / (sqrt|D_O| (deg D_O)^2)`; monitored, not bounded.
    pub fn growth_ratio(&self) -> f64 {
        let q = self.disc_o.fq().q() as f64;
        let n = self.disc_o.degree().unwrap() as f64;
        self.h_o as f64 / (q.powf(n / 2.0) * n.max(1.0).powi(2))
    }
}

/// `h(O) = h(B) |c| / [B^x : O^x] * prod_{l | c} (1 - (K/l)/|l|)`, evaluated
/// exactly, with integrality and the bound
/// `h(O) <= h(B) |c| prod_{l | c} (1 + 1/|l|)` checked.
pub fn h_order(disc_o: &PolyA) -> Result<OrderInvariants> {
    let fq = disc_o.fq();
    let (conductor, disc_b) = squarefree_split(disc_o)?;
    let infinity_type = require_imaginary(&disc_b)?;
    let h_b = h_maximal(&disc_b)?;
    let q = fq.q() as u128;
    let mut num = h_b;
    let mut bound_num = h_b;
    let overflow = || Error::Internal("class number overflow".into());
    for (l, e) in factor(&conductor)?.factors {
        let norm = q.pow(l.degree().unwrap() as u32);
        let s = quad_symbol(&disc_b, &l)?;
        let local = (norm as i128 - s as i128) as u128;
        let pe = norm.checked_pow(e - 1).ok_or_else(overflow)?;
        num = num.checked_mul(pe * local).ok_or_else(overflow)?;
        bound_num = bound_num
            .checked_mul(pe * (norm + 1))
            .ok_or_else(overflow)?;
    }
    let mut inv = OrderInvariants {
        disc_o: disc_o.clone(),
        conductor,
        disc_b,
        infinity_type,
        h_b,
        h_o: 0,
    };
    let index = inv.unit_index();
    if num % index != 0 || num == 0 {
        return Err(Error::Internal(format!(
            "h(O) = {num}/{index} is not a positive integer for {disc_o}"
        )));
    }
    inv.h_o = num / index;
    if inv.h_o > bound_num {
        return Err(Error::Internal(format!(
            "h(O) = {} exceeds h(B)|c| prod(1 + 1/|l|)",
            inv.h_o
        )));
    }
    log::debug!(
        "h_order {}: h_O = {}, growth ratio {:.4}",
        disc_o,
        inv.h_o,
        inv.growth_ratio()
    );
    Ok(inv)
}

/// All squarefree `delta` of exact degree `n` (any leading coefficient)
/// with infinity not split.
pub fn imaginary_squarefree(fq: Fq, n: usize) -> Result<Vec<PolyA>> {
    let mut out = Vec::new();
    for d in PolyA::all_of_degree(fq, n) {
        if d.is_constant() && fq.is_square(d.lead()) {
            continue;
        }
        if squarefree_split(&d)?.0.is_one() && place_type(&d)?.is_imaginary() {
            out.push(d);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassNumberRow {
    pub delta: PolyA,
    pub deg: usize,
    pub infinity_type: InfinityType,
    pub l_one: BigRational,
    pub h_b: u128,
}

/// One row per imaginary squarefree `delta_B` with `1 <= deg <= max_deg`.
pub fn class_number_table(fq: Fq, max_deg: usize) -> Result<Vec<ClassNumberRow>> {
    let mut rows = Vec::new();
    for n in 1..=max_deg {
        for delta in imaginary_squarefree(fq, n)? {
            rows.push(ClassNumberRow {
                infinity_type: place_type(&delta)?,
                l_one: l_one(&delta)?,
                h_b: h_maximal(&delta)?,
                deg: n,
                delta,
            });
        }
    }
    Ok(rows)
}

/// CSV with header `delta,deg,infinity_type,L,h_B`; `L` is `num/den`.
pub fn class_number_csv(rows: &[ClassNumberRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["delta", "deg", "infinity_type", "L", "h_B"])?;
    for r in rows {
        w.write_record([
            r.delta.to_string(),
            r.deg.to_string(),
            r.infinity_type.to_string(),
            format!("{}/{}", r.l_one.numer(), r.l_one.denom()),
            r.h_b.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("ascii"))
}
