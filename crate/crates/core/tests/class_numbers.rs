use drinfeld_core::poly_arith::{Fq, PolyA};
use drinfeld_core::quadforms::{
    chi, class_count_oracle, h_maximal, h_maximal_within_bound, h_order, imaginary_squarefree,
    l_one, place_type, InfinityType,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

fn f3() -> Fq {
    Fq::new(3).unwrap()
}

fn legendre(fq: Fq, c: u32) -> i64 {
    if c == 0 {
        0
    } else if fq.is_square(c) {
        1
    } else {
        -1
    }
}

/// Jacobi symbol `(a / m)` for monic `m` through quadratic reciprocity in
/// F_q[T], without factoring.
fn jacobi(a: &PolyA, m: &PolyA) -> i64 {
    let fq = a.fq();
    let half = (fq.q() as usize - 1) / 2;
    let (mut a, mut m) = (a.rem(m).unwrap(), m.clone());
    let mut sign = 1i64;
    loop {
        if m.is_one() {
            return sign;
        }
        if a.is_zero() {
            return 0;
        }
        let c = a.lead();
        let dm = m.degree().unwrap();
        if dm % 2 == 1 {
            sign *= legendre(fq, c);
        }
        let a_monic = a.monic();
        let da = a_monic.degree().unwrap();
        if (half * da * dm) % 2 == 1 {
            sign = -sign;
        }
        let next_a = m.rem(&a_monic).unwrap();
        m = a_monic;
        a = next_a;
    }
}

fn mul9(fq: Fq, x: (u32, u32), y: (u32, u32)) -> (u32, u32) {
    // F_9 = F_3[s], s^2 = 2
    let n = 2;
    (
        fq.add(fq.mul(x.0, y.0), fq.mul(n, fq.mul(x.1, y.1))),
        fq.add(fq.mul(x.0, y.1), fq.mul(x.1, y.0)),
    )
}

fn chi9(fq: Fq, z: (u32, u32)) -> i64 {
    let norm = fq.sub(fq.mul(z.0, z.0), fq.mul(2, fq.mul(z.1, z.1)));
    legendre(fq, norm)
}

/// Points on the smooth projective model of `y^2 = f(x)`, `deg f` odd,
/// over F_3 and F_9.
fn point_counts(f: &PolyA) -> (i64, i64) {
    let fq = f.fq();
    let n1 = 1 + (0..3).map(|x| 1 + legendre(fq, f.eval(x))).sum::<i64>();
    let mut n2 = 1;
    for x0 in 0..3 {
        for x1 in 0..3 {
            let mut v = (0u32, 0u32);
            for &c in f.coeffs().iter().rev() {
                v = mul9(fq, v, (x0, x1));
                v.0 = fq.add(v.0, c);
            }
            n2 += 1 + chi9(fq, v);
        }
    }
    (n1, n2)
}

/// `#J(F_q)` for a curve of genus 1 or 2 from its point counts.
fn jacobian_order(f: &PolyA) -> i64 {
    let q = 3i64;
    let (n1, n2) = point_counts(f);
    match f.degree().unwrap() {
        3 => n1,
        5 => {
            let a1 = n1 - q - 1;
            let a2 = (n2 - q * q - 1 + a1 * a1) / 2;
            1 + a1 + a2 + q * a1 + q * q
        }
        _ => unreachable!(),
    }
}

#[test]
fn chi_agrees_with_reciprocity() {
    let fq = f3();
    for n in 1..=3 {
        for delta in PolyA::all_of_degree(fq, n) {
            for k in 0..=3 {
                for m in PolyA::monic_of_degree(fq, k) {
                    assert_eq!(
                        chi(&delta, &m).unwrap() as i64,
                        jacobi(&delta, &m),
                        "{delta} {m}"
                    );
                }
            }
        }
    }
}

#[test]
fn cubic_class_numbers_match_elliptic_point_counts() {
    let fq = f3();
    let cubics = imaginary_squarefree(fq, 3).unwrap();
    assert!(!cubics.is_empty());
    for d in cubics {
        assert_eq!(place_type(&d).unwrap(), InfinityType::Ramified);
        assert_eq!(h_maximal(&d).unwrap() as i64, jacobian_order(&d), "{d}");
    }
}

#[test]
fn quintic_class_numbers_match_genus_two_jacobians() {
    let fq = f3();
    for d in imaginary_squarefree(fq, 5).unwrap() {
        assert_eq!(h_maximal(&d).unwrap() as i64, jacobian_order(&d), "{d}");
    }
}

#[test]
fn class_numbers_are_bounded_integers_up_to_degree_five() {
    let fq = f3();
    let mut seen = 0;
    for n in 1..=5 {
        for d in imaginary_squarefree(fq, n).unwrap() {
            let h = h_maximal(&d).unwrap();
            assert!(h >= 1);
            assert!(h_maximal_within_bound(fq, n, h));
            let l = l_one(&d).unwrap();
            assert!(l.abs() <= BigRational::from_integer(BigInt::from(n)));
            seen += 1;
        }
    }
    // 6 + 6 + 36 + 54 + 324
    assert_eq!(seen, 426);
}

#[test]
fn frozen_class_numbers() {
    // values from the point-count and form-class oracles above
    let fq = f3();
    let d = PolyA::from_i64s(fq, &[1, 2, 0, 1]); // T^3 + 2T + 1
    assert_eq!(jacobian_order(&d), 7);
    assert_eq!(h_maximal(&d).unwrap(), 7);
    let d = PolyA::from_i64s(fq, &[0, 1, 0, 1]); // T^3 + T
    assert_eq!(h_maximal(&d).unwrap(), 4);
    let d = PolyA::from_i64s(fq, &[1, 0, 0, 0, 0, 1]); // T^5 + 1
    assert_eq!(h_maximal(&d).unwrap(), 10);
    // inert, c = T, constant field F_3
    let d = PolyA::from_i64s(fq, &[0, 0, 1, 0, 2]);
    assert_eq!(h_order(&d).unwrap().h_o, 4);
    assert_eq!(class_count_oracle(&d, 3).unwrap().classes, 4);
}

#[test]
fn h_order_matches_class_count_oracle() {
    let fq = f3();
    let mut compared = 0;
    for n in 1..=4 {
        for d in PolyA::all_of_degree(fq, n) {
            let Ok(inv) = h_order(&d) else {
                continue;
            };
            let count = class_count_oracle(&d, 3).unwrap();
            assert!(count.stable, "{d}: depth 3 not stable");
            assert_eq!(count.classes as u128, inv.h_o, "{d}: {count:?} vs {inv:?}");
            compared += 1;
        }
    }
    assert!(compared > 100);
}
