use drinfeld_core::drinfeld::DrinfeldModuleSpec;
use drinfeld_core::frobenius::oracles::{equivalence_sweep, smith_vs_scan};
use drinfeld_core::frobenius::{build_record, char_poly, frobenius_relation_holds};
use drinfeld_core::poly_arith::{monic_irreducibles, Fq};

fn f3() -> Fq {
    Fq::new(3).unwrap()
}

#[test]
fn three_membership_tests_agree_standard_module() {
    let psi = DrinfeldModuleSpec::standard(f3());
    let rep = equivalence_sweep(&psi, 4).unwrap();
    assert!(rep.primes > 30);
    assert!(rep.disagreements.is_empty(), "{:?}", rep.disagreements);
}

#[test]
fn three_membership_tests_agree_other_modules() {
    for (g1, g2) in [("T", "1"), ("0", "1"), ("1", "T+1"), ("T^2+1", "2")] {
        let psi = DrinfeldModuleSpec::parse(f3(), g1, g2).unwrap();
        let rep = equivalence_sweep(&psi, 3).unwrap();
        assert!(
            rep.disagreements.is_empty(),
            "{g1} {g2}: {:?}",
            rep.disagreements
        );
    }
    let f5 = Fq::new(5).unwrap();
    let psi = DrinfeldModuleSpec::parse(f5, "T", "1").unwrap();
    let rep = equivalence_sweep(&psi, 2).unwrap();
    assert!(rep.disagreements.is_empty(), "{:?}", rep.disagreements);
}

#[test]
fn smith_matches_torsion_scan() {
    for (g1, g2) in [("1", "1"), ("T", "1"), ("0", "2"), ("1", "T+1")] {
        let psi = DrinfeldModuleSpec::parse(f3(), g1, g2).unwrap();
        let rep = smith_vs_scan(&psi, 3).unwrap();
        assert!(rep.mismatches.is_empty(), "{g1} {g2}: {:?}", rep.mismatches);
    }
}

#[test]
fn frobenius_relation_and_records_q5_q7() {
    for q in [5u64, 7] {
        let fq = Fq::new(q).unwrap();
        let psi = DrinfeldModuleSpec::parse(fq, "T", "1").unwrap();
        for x in 1..=3 {
            for p in monic_irreducibles(fq, x) {
                let m = psi.reduce_mod(&p).unwrap();
                let (a_p, mu) = char_poly(&m).unwrap();
                assert!(frobenius_relation_holds(&m, &a_p, mu.value));
                build_record(&psi, &p).unwrap();
            }
        }
    }
}

#[test]
fn three_membership_tests_agree_with_nontrivial_conductors() {
    let psi = DrinfeldModuleSpec::standard(f3());
    let rep = equivalence_sweep(&psi, 5).unwrap();
    assert!(rep.nontrivial_passes > 0);
    assert!(rep.disagreements.is_empty(), "{:?}", rep.disagreements);
}
