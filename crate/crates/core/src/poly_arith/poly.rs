//! Dense univariate polynomials over F_q, i.e. elements of A = F_q[T].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly_arith::fq::Fq;

/// Degree of a polynomial, with `deg 0 = -inf` ordered below every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Twice the base-q logarithm of an absolute value, so that half-integer
/// exponents such as `|sqrt(D)| = q^(deg D / 2)` stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LogNorm {
    two_log_q: Option<i64>,
}

impl LogNorm {
    pub const NEG_INF: LogNorm = LogNorm { two_log_q: None };
    pub const ONE: LogNorm = LogNorm { two_log_q: Some(0) };

    pub fn from_two_log_q(v: i64) -> Self {
        LogNorm { two_log_q: Some(v) }
    }

    /// `|a| = q^(deg a)`.
    pub fn of(a: &PolyA) -> Self {
        match a.deg() {
            Degree::NegInf => Self::NEG_INF,
            Degree::Finite(d) => Self::from_two_log_q(2 * d as i64),
        }
    }

    pub fn two_log_q(self) -> Option<i64> {
        self.two_log_q
    }

    pub fn mul(self, other: LogNorm) -> LogNorm {
        match (self.two_log_q, other.two_log_q) {
            (Some(a), Some(b)) => Self::from_two_log_q(a + b),
            _ => Self::NEG_INF,
        }
    }

    pub fn div(self, other: LogNorm) -> Result<LogNorm> {
        match (self.two_log_q, other.two_log_q) {
            (_, None) => Err(Error::DivisionByZero),
            (None, _) => Ok(Self::NEG_INF),
            (Some(a), Some(b)) => Ok(Self::from_two_log_q(a - b)),
        }
    }

    /// Square root; defined when the exponent `two_log_q` is even.
    pub fn sqrt(self) -> Option<LogNorm> {
        match self.two_log_q {
            None => Some(Self::NEG_INF),
            Some(v) if v % 2 == 0 => Some(Self::from_two_log_q(v / 2)),
            Some(_) => None,
        }
    }
}

impl fmt::Display for LogNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.two_log_q {
            None => write!(f, "0"),
            Some(v) if v % 2 == 0 => write!(f, "q^{}", v / 2),
            Some(v) => write!(f, "q^({v}/2)"),
        }
    }
}

/// An element of F_q[T]. Coefficients are stored lowest degree first and
/// never carry trailing zeros, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyA {
    q: u32,
    coeffs: Vec<u32>,
}

impl PolyA {
    pub fn zero(fq: Fq) -> Self {
        PolyA {
            q: fq.q(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(fq: Fq) -> Self {
        Self::constant(fq, 1)
    }

    pub fn constant(fq: Fq, c: u32) -> Self {
        Self::from_coeffs(fq, vec![c])
    }

    /// The indeterminate T.
    pub fn t(fq: Fq) -> Self {
        Self::monomial(fq, 1, 1)
    }

    pub fn monomial(fq: Fq, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(fq, coeffs)
    }

    /// Coefficients are reduced mod q and trailing zeros dropped.
    pub fn from_coeffs(fq: Fq, mut coeffs: Vec<u32>) -> Self {
        let q = fq.q();
        for c in coeffs.iter_mut() {
            *c %= q;
        }
        let mut p = PolyA { q, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(fq: Fq, coeffs: &[i64]) -> Self {
        Self::from_coeffs(fq, coeffs.iter().map(|&c| fq.reduce_i64(c)).collect())
    }

    fn from_raw(q: u32, coeffs: Vec<u32>) -> Self {
        let mut p = PolyA { q, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn fq(&self) -> Fq {
        Fq::trusted(self.q)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn deg(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as an integer, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// True for nonzero constants (units of A) and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> PolyA {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.fq().inv(self.lead()).expect("nonzero lead");
        self.scale(inv)
    }

    pub fn lognorm(&self) -> LogNorm {
        LogNorm::of(self)
    }

    pub fn scale(&self, c: u32) -> PolyA {
        let fq = self.fq();
        Self::from_raw(self.q, self.coeffs.iter().map(|&a| fq.mul(a, c)).collect())
    }

    /// Multiplication by T^k.
    pub fn shift(&self, k: usize) -> PolyA {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        PolyA { q: self.q, coeffs }
    }

    pub fn divmod(&self, b: &PolyA) -> Result<(PolyA, PolyA)> {
        self.check_field(b);
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let fq = self.fq();
        if self.coeffs.len() <= db {
            return Ok((PolyA::zero(fq), self.clone()));
        }
        let inv = fq.inv(b.lead())?;
        let mut r = self.coeffs.clone();
        let mut quo = vec![0u32; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = fq.mul(r[i], inv);
            if c == 0 {
                continue;
            }
            quo[i - db] = c;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                let k = i - db + j;
                r[k] = fq.sub(r[k], fq.mul(c, bj));
            }
        }
        r.truncate(db);
        Ok((Self::from_raw(self.q, quo), Self::from_raw(self.q, r)))
    }

    pub fn rem(&self, b: &PolyA) -> Result<PolyA> {
        Ok(self.divmod(b)?.1)
    }

    /// `self / b` when the division is exact, `None` otherwise.
    pub fn exact_div(&self, b: &PolyA) -> Option<PolyA> {
        match self.divmod(b) {
            Ok((quo, r)) if r.is_zero() => Some(quo),
            _ => None,
        }
    }

    /// Whether `self` divides `b`.
    pub fn divides(&self, b: &PolyA) -> bool {
        if self.is_zero() {
            return b.is_zero();
        }
        b.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn pow(&self, mut e: u64) -> PolyA {
        let mut base = self.clone();
        let mut acc = PolyA::one(self.fq());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn powmod(&self, mut e: u128, m: &PolyA) -> Result<PolyA> {
        let mut base = self.rem(m)?;
        let mut acc = PolyA::one(self.fq()).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(m)?;
            }
        }
        Ok(acc)
    }

    pub fn mulmod(&self, b: &PolyA, m: &PolyA) -> Result<PolyA> {
        (self * b).rem(m)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let fq = self.fq();
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| fq.add(fq.mul(acc, x), c))
    }

    pub fn derivative(&self) -> PolyA {
        let fq = self.fq();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| fq.mul(c, (i as u64 % self.q as u64) as u32))
            .collect();
        Self::from_raw(self.q, coeffs)
    }

    /// Monic gcd. Errors when both inputs are zero.
    pub fn gcd_monic(&self, b: &PolyA) -> Result<PolyA> {
        self.check_field(b);
        if self.is_zero() && b.is_zero() {
            return Err(Error::ZeroInput("gcd"));
        }
        let (mut x, mut y) = (self.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.monic())
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*b = g`, g monic.
    pub fn xgcd(&self, b: &PolyA) -> Result<(PolyA, PolyA, PolyA)> {
        if self.is_zero() && b.is_zero() {
            return Err(Error::ZeroInput("xgcd"));
        }
        let fq = self.fq();
        let (mut r0, mut r1) = (self.clone(), b.clone());
        let (mut s0, mut s1) = (PolyA::one(fq), PolyA::zero(fq));
        let (mut t0, mut t1) = (PolyA::zero(fq), PolyA::one(fq));
        while !r1.is_zero() {
            let (quo, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&quo * &s1);
            let t = &t0 - &(&quo * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = fq.inv(r0.lead())?;
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &PolyA) -> Result<PolyA> {
        let (g, s, _) = self.xgcd(m)?;
        if !g.is_one() {
            return Err(Error::DivisionByZero);
        }
        s.rem(m)
    }

    /// Every polynomial of degree exactly `d`, in [`Ord`] order.
    pub fn all_of_degree(fq: Fq, d: usize) -> impl Iterator<Item = PolyA> {
        let q = fq.q();
        (1..q).flat_map(move |lead| {
            lex_tails(q, d).map(move |mut coeffs| {
                coeffs.push(lead);
                PolyA::from_raw(q, coeffs)
            })
        })
    }

    /// Every monic polynomial of degree exactly `d`, in [`Ord`] order.
    pub fn monic_of_degree(fq: Fq, d: usize) -> impl Iterator<Item = PolyA> {
        let q = fq.q();
        lex_tails(q, d).map(move |mut coeffs| {
            coeffs.push(1);
            PolyA::from_raw(q, coeffs)
        })
    }

    /// Every polynomial of degree below `d`, zero included, ordered by
    /// [`Ord`] except that zero comes first.
    pub fn all_below_degree(fq: Fq, d: usize) -> impl Iterator<Item = PolyA> {
        std::iter::once(PolyA::zero(fq)).chain((0..d).flat_map(move |k| Self::all_of_degree(fq, k)))
    }

    /// Parses either the canonical comma format (`"1,0,2"` is `2T^2 + 1`)
    /// or a human form such as `"2*T^2+1"`.
    pub fn parse(fq: Fq, s: &str) -> Result<PolyA> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s.chars().any(|c| c == 'T' || c == 't') {
            return parse_human(fq, s);
        }
        let mut coeffs = Vec::new();
        for part in s.split(',') {
            let v: u64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {part:?} in {s:?}")))?;
            if v >= fq.q() as u64 {
                return Err(Error::Parse(format!(
                    "coefficient {v} out of range [0, {})",
                    fq.q()
                )));
            }
            coeffs.push(v as u32);
        }
        Ok(PolyA::from_raw(fq.q(), coeffs))
    }

    /// Human-readable form, e.g. `2*T^2 + 1`.
    pub fn to_human(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "T".into(),
                (1, c) => format!("{c}*T"),
                (i, 1) => format!("T^{i}"),
                (i, c) => format!("{c}*T^{i}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }

    #[inline]
    pub(crate) fn check_field(&self, other: &PolyA) {
        assert_eq!(self.q, other.q, "polynomials over different fields");
    }
}

/// Coefficient vectors of length `d` in lexicographic order (lowest degree
/// coefficient most significant).
fn lex_tails(q: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (q as u64).pow(d as u32);
    (0..total).map(move |mut n| {
        let mut coeffs = vec![0u32; d];
        for i in (0..d).rev() {
            coeffs[i] = (n % q as u64) as u32;
            n /= q as u64;
        }
        coeffs
    })
}

fn parse_human(fq: Fq, s: &str) -> Result<PolyA> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("cannot parse polynomial {s:?}"));
    let mut acc: Vec<i64> = Vec::new();
    let mut rest = cleaned.as_str();
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        let end = rest[1.min(rest.len())..]
            .find(['+', '-'])
            .map(|i| i + 1)
            .unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        if term.is_empty() {
            return Err(bad());
        }
        let (coef, power) = match term.find(['T', 't']) {
            None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
            Some(pos) => {
                let head = term[..pos].trim_end_matches('*');
                let coef = if head.is_empty() {
                    1
                } else {
                    head.parse::<i64>().map_err(|_| bad())?
                };
                let tail = &term[pos + 1..];
                let power = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .ok_or_else(bad)?
                        .parse::<usize>()
                        .map_err(|_| bad())?
                };
                (coef, power)
            }
        };
        if acc.len() <= power {
            acc.resize(power + 1, 0);
        }
        acc[power] += sign * coef;
    }
    Ok(PolyA::from_i64s(fq, &acc))
}

impl fmt::Display for PolyA {
    /// Canonical comma format; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.to_human(), self.q)
    }
}

/// Degree first, then the coefficient sequence lexicographically from the
/// constant term upwards.
impl Ord for PolyA {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for PolyA {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &PolyA {
    type Output = PolyA;
    fn add(self, rhs: &PolyA) -> PolyA {
        self.check_field(rhs);
        let fq = self.fq();
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| fq.add(self.coeff(i), rhs.coeff(i)))
            .collect();
        PolyA::from_raw(self.q, coeffs)
    }
}

impl Sub for &PolyA {
    type Output = PolyA;
    fn sub(self, rhs: &PolyA) -> PolyA {
        self.check_field(rhs);
        let fq = self.fq();
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| fq.sub(self.coeff(i), rhs.coeff(i)))
            .collect();
        PolyA::from_raw(self.q, coeffs)
    }
}

impl Mul for &PolyA {
    type Output = PolyA;
    fn mul(self, rhs: &PolyA) -> PolyA {
        self.check_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return PolyA::zero(self.fq());
        }
        let q = self.q as u64;
        let mut acc = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % q;
            }
        }
        PolyA::from_raw(self.q, acc.into_iter().map(|v| v as u32).collect())
    }
}

impl Neg for &PolyA {
    type Output = PolyA;
    fn neg(self) -> PolyA {
        let fq = self.fq();
        PolyA::from_raw(self.q, self.coeffs.iter().map(|&c| fq.neg(c)).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyA {
            type Output = PolyA;
            fn $m(self, rhs: PolyA) -> PolyA {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PolyA> for PolyA {
            type Output = PolyA;
            fn $m(self, rhs: &PolyA) -> PolyA {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyA {
    type Output = PolyA;
    fn neg(self) -> PolyA {
        -&self
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
    fn degree_convention() {
        assert_eq!(PolyA::zero(f3()).deg(), Degree::NegInf);
        assert!(Degree::NegInf < Degree::Finite(0));
        assert_eq!(p(&[0, 1, 1]).deg(), Degree::Finite(2));
        assert_eq!(p(&[0, 1, 1]).lognorm().two_log_q(), Some(4));
        assert_eq!(PolyA::zero(f3()).lognorm(), LogNorm::NEG_INF);
    }

    #[test]
    fn divmod_examples() {
        // T^2 + 1 = T * T + 1
        let (quo, r) = p(&[1, 0, 1]).divmod(&p(&[0, 1])).unwrap();
        assert_eq!(quo, p(&[0, 1]));
        assert_eq!(r, p(&[1]));
        let a = p(&[2, 1, 0, 1]);
        let (quo, r) = a.divmod(&PolyA::one(f3())).unwrap();
        assert_eq!((quo, r), (a.clone(), PolyA::zero(f3())));
        // 2T^3 by T + 1, checked by re-multiplication
        let a = p(&[0, 0, 0, 2]);
        let b = p(&[1, 1]);
        let (quo, r) = a.divmod(&b).unwrap();
        assert_eq!(&(&quo * &b) + &r, a);
        assert!(r.deg() < b.deg());
        assert!(matches!(
            a.divmod(&PolyA::zero(f3())),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[0, 0, 1]).gcd_monic(&p(&[0, 1])).unwrap(), p(&[0, 1]));
        assert_eq!(
            p(&[0, 2]).gcd_monic(&PolyA::zero(f3())).unwrap(),
            p(&[0, 1])
        );
        // T^2 + 2 = (T + 1)(T + 2) over F_3
        let a = p(&[2, 0, 1]);
        let b = p(&[1, 1]);
        assert!(b.divides(&a));
        assert_eq!(a.exact_div(&b).unwrap(), p(&[2, 1]));
        assert_eq!(a.gcd_monic(&b).unwrap(), b);
        assert!(PolyA::zero(f3()).gcd_monic(&PolyA::zero(f3())).is_err());
    }

    #[test]
    fn text_format_roundtrip() {
        let fq = f3();
        let a = PolyA::parse(fq, "1,0,2").unwrap();
        assert_eq!(a, p(&[1, 0, 2]));
        assert_eq!(a.to_string(), "1,0,2");
        assert_eq!(PolyA::parse(fq, "2*T^2+1").unwrap(), a);
        assert_eq!(PolyA::parse(fq, "2T^2 + 1").unwrap(), a);
        assert_eq!(PolyA::parse(fq, "T - 1").unwrap(), p(&[2, 1]));
        assert_eq!(PolyA::parse(fq, "0").unwrap(), PolyA::zero(fq));
        assert_eq!(PolyA::zero(fq).to_string(), "0");
        assert!(PolyA::parse(fq, "1,3").is_err());
        assert!(PolyA::parse(fq, "").is_err());
        assert!(PolyA::parse(fq, "T^^2").is_err());
        assert_eq!(a.to_human(), "2*T^2 + 1");
    }

    #[test]
    fn enumeration_order() {
        let fq = f3();
        let lin: Vec<_> = PolyA::monic_of_degree(fq, 1).collect();
        assert_eq!(lin, vec![p(&[0, 1]), p(&[1, 1]), p(&[2, 1])]);
        let quad: Vec<_> = PolyA::monic_of_degree(fq, 2).collect();
        assert_eq!(quad.len(), 9);
        assert!(quad.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(PolyA::all_of_degree(fq, 2).count(), 18);
        assert_eq!(PolyA::all_below_degree(fq, 2).count(), 9);
    }

    #[test]
    fn xgcd_inverse() {
        let m = p(&[1, 0, 1]);
        let a = p(&[1, 1]);
        let inv = a.inv_mod(&m).unwrap();
        assert!(a.mulmod(&inv, &m).unwrap().is_one());
        assert!(p(&[0, 1]).inv_mod(&p(&[0, 0, 1])).is_err());
    }

    #[test]
    fn derivative_in_char_p() {
        // d/dT T^3 = 3T^2 = 0 over F_3
        assert!(p(&[0, 0, 0, 1]).derivative().is_zero());
        assert_eq!(p(&[1, 2, 1]).derivative(), p(&[2, 2]));
    }
}
