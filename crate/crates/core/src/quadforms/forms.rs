//! Binary quadratic forms `a x^2 + b xy + c y^2` over A and the action of
//! 2x2 matrices over A.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly_arith::{Degree, LogNorm, PolyA};
use crate::quadforms::classnum::{place_type, InfinityType};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    pub a: PolyA,
    pub b: PolyA,
    pub c: PolyA,
}

impl BinaryForm {
    pub fn new(a: PolyA, b: PolyA, c: PolyA) -> Self {
        a.check_field(&b);
        a.check_field(&c);
        BinaryForm { a, b, c }
    }

    pub fn discriminant(&self) -> PolyA {
        let fq = self.a.fq();
        &(&self.b * &self.b) - &(&self.a * &self.c).scale(4 % fq.q())
    }

    pub fn content(&self) -> PolyA {
        let g = self
            .a
            .gcd_monic(&self.b)
            .unwrap_or_else(|_| PolyA::zero(self.a.fq()));
        if g.is_zero() {
            return self.c.monic();
        }
        g.gcd_monic(&self.c).expect("g nonzero")
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// `deg b < deg a <= deg c`.
    pub fn is_reduced(&self) -> bool {
        !self.a.is_zero() && self.b.deg() < self.a.deg() && self.a.deg() <= self.c.deg()
    }

    /// `f(x + m y, y)`.
    pub fn translate(&self, m: &PolyA) -> BinaryForm {
        let two_am = (&self.a * m).scale(2);
        let c = &(&(&self.a * &(m * m)) + &(&self.b * m)) + &self.c;
        BinaryForm::new(self.a.clone(), &two_am + &self.b, c)
    }

    /// `f(-y, x)`: interchanges the outer coefficients.
    pub fn swap(&self) -> BinaryForm {
        BinaryForm::new(self.c.clone(), -&self.b, self.a.clone())
    }

    /// `(v a, b, v^-1 c)`: the form `v^-1 f(v x, y)`, which defines the same
    /// lattice `A + ((-b + sqrt D)/2a) A` as `f`.
    pub fn unit_twist(&self, v: u32) -> Result<BinaryForm> {
        let fq = self.a.fq();
        let inv = fq.inv(v)?;
        Ok(BinaryForm::new(
            self.a.scale(v),
            self.b.clone(),
            self.c.scale(inv),
        ))
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}; {})",
            self.a.to_human(),
            self.b.to_human(),
            self.c.to_human()
        )
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `[[alpha, beta], [gamma, delta]]`, acting by `(x, y) -> (alpha x + beta y, gamma x + delta y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub alpha: PolyA,
    pub beta: PolyA,
    pub gamma: PolyA,
    pub delta: PolyA,
}

impl Mat2 {
    pub fn new(alpha: PolyA, beta: PolyA, gamma: PolyA, delta: PolyA) -> Self {
        Mat2 {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    pub fn identity(fq: crate::poly_arith::Fq) -> Self {
        let (o, z) = (PolyA::one(fq), PolyA::zero(fq));
        Mat2::new(o.clone(), z.clone(), z, o)
    }

    /// `x -> x + m y`.
    pub fn translation(m: &PolyA) -> Self {
        let fq = m.fq();
        let (o, z) = (PolyA::one(fq), PolyA::zero(fq));
        Mat2::new(o.clone(), m.clone(), z, o)
    }

    /// `(x, y) -> (-y, x)`.
    pub fn swap(fq: crate::poly_arith::Fq) -> Self {
        let (o, z) = (PolyA::one(fq), PolyA::zero(fq));
        Mat2::new(z.clone(), -&o, o, z)
    }

    pub fn det(&self) -> PolyA {
        &(&self.alpha * &self.delta) - &(&self.beta * &self.gamma)
    }

    /// The determinant is a square in F_q^x, so the matrix preserves proper
    /// equivalence classes up to a square unit rescaling.
    pub fn is_proper(&self) -> bool {
        let det = self.det();
        !det.is_zero() && det.is_constant() && det.fq().is_square(det.lead())
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &(&self.alpha * &o.alpha) + &(&self.beta * &o.gamma),
            &(&self.alpha * &o.beta) + &(&self.beta * &o.delta),
            &(&self.gamma * &o.alpha) + &(&self.delta * &o.gamma),
            &(&self.gamma * &o.beta) + &(&self.delta * &o.delta),
        )
    }
}

/// The form with matrix `M^t [[a, b/2], [b/2, c]] M`, i.e. `f(alpha x + beta y, gamma x + delta y)`.
pub fn act(m: &Mat2, f: &BinaryForm) -> Result<BinaryForm> {
    let det = m.det();
    if det.is_zero() || !det.is_constant() {
        return Err(Error::SingularMatrix);
    }
    let (al, be, ga, de) = (&m.alpha, &m.beta, &m.gamma, &m.delta);
    let eval =
        |x: &PolyA, y: &PolyA| &(&(&f.a * &(x * x)) + &(&f.b * &(x * y))) + &(&f.c * &(y * y));
    let a = eval(al, ga);
    let c = eval(be, de);
    let outer = &(&f.a * &(al * be)) + &(&f.c * &(ga * de));
    let b = &outer.scale(2) + &(&f.b * &(&(al * de) + &(be * ga)));
    Ok(BinaryForm::new(a, b, c))
}

/// A properly equivalent reduced form together with the SL_2(A) matrix `M`
/// satisfying `act(M, f) = g`.
pub fn reduce(f: &BinaryForm) -> Result<(BinaryForm, Mat2)> {
    if !f.is_primitive() {
        return Err(Error::NotPrimitive(f.to_string()));
    }
    if f.discriminant().is_zero() {
        return Err(Error::ZeroInput("reduce: discriminant"));
    }
    let fq = f.a.fq();
    let mut g = f.clone();
    let mut m = Mat2::identity(fq);
    let apply = |g: &mut BinaryForm, m: &mut Mat2, step: Mat2| {
        *g = act(&step, g).expect("determinant one");
        *m = m.mul(&step);
    };
    loop {
        // a or c can only vanish when the discriminant is a square in A
        if g.a.is_zero() {
            return Err(Error::Degenerate(f.discriminant().to_string()));
        }
        let two_a = g.a.scale(2);
        let (quo, _) = (-&g.b).divmod(&two_a)?;
        if !quo.is_zero() {
            apply(&mut g, &mut m, Mat2::translation(&quo));
        }
        if g.a.deg() > g.c.deg() {
            apply(&mut g, &mut m, Mat2::swap(fq));
            continue;
        }
        break;
    }
    debug_assert!(g.is_reduced());
    debug_assert_eq!(reduce_form(f).ok().as_ref(), Some(&g));
    Ok((g, m))
}

/// The reduced form of [`reduce`] without the transcript or input checks;
/// `f` must be primitive with non-square discriminant.
pub(crate) fn reduce_form(f: &BinaryForm) -> Result<BinaryForm> {
    let mut g = f.clone();
    loop {
        if g.a.is_zero() {
            return Err(Error::Degenerate(f.discriminant().to_string()));
        }
        let (quo, _) = (-&g.b).divmod(&g.a.scale(2))?;
        if !quo.is_zero() {
            g = g.translate(&quo);
        }
        if g.a.deg() > g.c.deg() {
            g = g.swap();
            continue;
        }
        return Ok(g);
    }
}

/// `|(-b + sqrt D)/2a| = q^(deg D / 2 - deg a)` for a reduced form of
/// imaginary discriminant; it lies in `[1, |sqrt D|]`.
pub fn class_point_lognorm(g: &BinaryForm) -> Result<LogNorm> {
    if !g.is_reduced() {
        return Err(Error::NotReduced(g.to_string()));
    }
    let disc = g.discriminant();
    if place_type(&disc)? == InfinityType::Split {
        return Err(Error::NotImaginary(disc.to_string()));
    }
    let (Degree::Finite(n), Degree::Finite(da)) = (disc.deg(), g.a.deg()) else {
        return Err(Error::ZeroInput("class_point_lognorm"));
    };
    let v = n as i64 - 2 * da as i64;
    if v < 0 || v > n as i64 {
        return Err(Error::Internal(format!(
            "class point of {g} outside [1, |sqrt D|]"
        )));
    }
    Ok(LogNorm::from_two_log_q(v))
}

/// Every primitive reduced form of discriminant `delta`.
pub fn enumerate_reduced(delta: &PolyA) -> Result<Vec<BinaryForm>> {
    if place_type(delta)? == InfinityType::Split {
        return Err(Error::NotImaginary(delta.to_string()));
    }
    let fq = delta.fq();
    let n = delta.degree().expect("nonzero discriminant");
    let inv4 = fq.inv(4 % fq.q())?;
    let mut out = Vec::new();
    for da in 0..=n / 2 {
        for a in PolyA::all_of_degree(fq, da) {
            for b in PolyA::all_below_degree(fq, da) {
                let num = &(&b * &b) - delta;
                let Some(c) = num.exact_div(&a) else {
                    continue;
                };
                let f = BinaryForm::new(a.clone(), b, c.scale(inv4));
                if f.is_reduced() && f.is_primitive() {
                    debug_assert_eq!(&f.discriminant(), delta);
                    out.push(f);
                }
            }
        }
    }
    Ok(out)
}
