//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero
//! exit if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use drinfeld_core::drinfeld::DrinfeldModuleSpec;
use drinfeld_core::frobenius::oracles::{equivalence_sweep, smith_vs_scan};
use drinfeld_core::frobenius::{build_record, frobenius_relation_holds};
use drinfeld_core::poly_arith::{factor, monic_irreducibles, Fq, PolyA};
use drinfeld_core::quadforms::{
    act, class_count_oracle, h_maximal, h_maximal_within_bound, h_order, imaginary_squarefree,
    reduce, BinaryForm,
};
use drinfeld_core::survey::{density_report, growth_report, run, FSpec, Format, SurveyConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SWEEP_MAX_DEG: usize = 7;
const SWEEP_TIME_LIMIT: Duration = Duration::from_secs(300);
const ORACLE_MAX_DEG: usize = 4;
const SMITH_MAX_DEG: usize = 3;
const RANDOM_FORMS: usize = 1000;
const FORM_MAX_DEG: usize = 6;
const FORM_SEED: u64 = 0x5eed_f0f0;
const CLASS_MAX_DEG: usize = 5;
const ORDER_MAX_DEG: usize = 4;
const BFS_DEPTH: usize = 3;
const TABLE_MAX_DEG: usize = 8;
const PARALLEL_WORKERS: usize = 4;

type Outcome = Result<String, String>;

fn f3() -> Fq {
    Fq::new(3).unwrap()
}

fn p(c: &[i64]) -> PolyA {
    PolyA::from_i64s(f3(), c)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn worked_instance() -> Outcome {
    let psi = DrinfeldModuleSpec::standard(f3());
    let r = build_record(&psi, &p(&[0, 1])).map_err(|e| e.to_string())?;
    let got = (
        r.a_p.clone(),
        r.mu_p.value,
        r.delta_p.clone(),
        r.b_p.clone(),
        r.c_p.clone(),
        r.d1.clone(),
        r.d2.clone(),
    );
    let want = (
        p(&[1]),
        2,
        p(&[1, 1]),
        p(&[1]),
        p(&[1]),
        p(&[1]),
        p(&[1, 1]),
    );
    ensure(got == want, || format!("record {got:?}"))?;
    let m = psi.reduce_mod(&p(&[0, 1])).unwrap();
    ensure(frobenius_relation_holds(&m, &r.a_p, 2), || {
        "pi^2 + a_p pi + mu_p p != 0".into()
    })?;
    Ok("p = T: a_p = 1, mu_p = 2, delta_p = T+1, b_p = c_p = d1 = 1, d2 = T+1, P(pi) = 0".into())
}

fn invariant_sweep() -> Outcome {
    let psi = DrinfeldModuleSpec::standard(f3());
    let start = Instant::now();
    let mut checked = 0;
    for x in 1..=SWEEP_MAX_DEG {
        for pr in monic_irreducibles(f3(), x) {
            if !psi.good_reduction(&pr).unwrap() {
                continue;
            }
            // build_record runs every record invariant and fails on the first violation
            let r = build_record(&psi, &pr).map_err(|e| e.to_string())?;
            r.check().map_err(|e| e.to_string())?;
            let prod = &r.d1 * &r.d2;
            ensure(prod.degree() == Some(x), || {
                format!("|d1 d2| != |p| at {pr}")
            })?;
            checked += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < SWEEP_TIME_LIMIT, || format!("took {took:?}"))?;
    Ok(format!(
        "{checked} good primes of degree <= {SWEEP_MAX_DEG}, 0 failures, {:.2}s",
        took.as_secs_f64()
    ))
}

fn three_way() -> Outcome {
    let psi = DrinfeldModuleSpec::standard(f3());
    let rep = equivalence_sweep(&psi, ORACLE_MAX_DEG).map_err(|e| e.to_string())?;
    ensure(rep.disagreements.is_empty(), || {
        format!("disagreements {:?}", rep.disagreements)
    })?;
    Ok(format!(
        "{} primes, {} membership tests (divisors of b_max plus linear controls), 0 disagreements",
        rep.primes, rep.tests
    ))
}

fn smith_scan() -> Outcome {
    let psi = DrinfeldModuleSpec::standard(f3());
    let rep = smith_vs_scan(&psi, SMITH_MAX_DEG).map_err(|e| e.to_string())?;
    ensure(rep.mismatches.is_empty(), || {
        format!("mismatches {:?}", rep.mismatches)
    })?;
    Ok(format!(
        "{} primes of degree <= {SMITH_MAX_DEG}, 0 mismatches",
        rep.primes
    ))
}

fn is_square(a: &PolyA) -> bool {
    let f = factor(a).unwrap();
    a.fq().is_square(f.unit) && f.factors.iter().all(|(_, e)| e % 2 == 0)
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> PolyA {
    let d = rng.gen_range(0..=max_deg);
    PolyA::from_coeffs(f3(), (0..=d).map(|_| rng.gen_range(0..3)).collect())
}

fn random_reductions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(FORM_SEED);
    let mut done = 0;
    let mut skipped = 0;
    while done < RANDOM_FORMS {
        let f = BinaryForm::new(
            random_poly(&mut rng, FORM_MAX_DEG),
            random_poly(&mut rng, FORM_MAX_DEG),
            random_poly(&mut rng, FORM_MAX_DEG),
        );
        let disc = f.discriminant();
        if f.a.is_zero() || disc.is_zero() || !f.is_primitive() || is_square(&disc) {
            skipped += 1;
            continue;
        }
        let (g, m) = reduce(&f).map_err(|e| format!("{f}: {e}"))?;
        ensure(g.is_reduced(), || format!("{f} -> {g} not reduced"))?;
        ensure(m.det().is_one(), || format!("{f}: transcript not in SL_2"))?;
        ensure(act(&m, &f).ok().as_ref() == Some(&g), || {
            format!("{f}: replay differs")
        })?;
        ensure(g.discriminant() == disc, || {
            format!("{f}: discriminant changed")
        })?;
        done += 1;
    }
    Ok(format!(
        "{done} primitive forms (deg <= {FORM_MAX_DEG}, {skipped} rejected draws), 0 failures"
    ))
}

/// `#E(F_3)` for `y^2 = f(x)`, `deg f = 3`.
fn cubic_point_count(f: &PolyA) -> u128 {
    let fq = f.fq();
    1 + (0..3)
        .map(|x| match f.eval(x) {
            0 => 1,
            v if fq.is_square(v) => 2,
            _ => 0,
        })
        .sum::<u128>()
}

fn class_numbers() -> Outcome {
    let fq = f3();
    let mut maximal = 0;
    let mut cubics = 0;
    for n in 1..=CLASS_MAX_DEG {
        for d in imaginary_squarefree(fq, n).map_err(|e| e.to_string())? {
            let h = h_maximal(&d).map_err(|e| format!("{d}: {e}"))?;
            ensure(h >= 1 && h_maximal_within_bound(fq, n, h), || {
                format!("h({d}) = {h} out of bounds")
            })?;
            if n == 3 {
                let pts = cubic_point_count(&d);
                ensure(h == pts, || format!("h({d}) = {h}, point count {pts}"))?;
                cubics += 1;
            }
            maximal += 1;
        }
    }
    let mut orders = 0;
    let mut flagged = Vec::new();
    for n in 1..=ORDER_MAX_DEG {
        for d in PolyA::all_of_degree(fq, n) {
            let Ok(inv) = h_order(&d) else {
                continue;
            };
            let count = class_count_oracle(&d, BFS_DEPTH).map_err(|e| e.to_string())?;
            if !count.stable {
                flagged.push(format!("{d}: depth {BFS_DEPTH} not stable"));
            } else if count.classes as u128 != inv.h_o {
                flagged.push(format!(
                    "{d}: formula {} vs oracle {}",
                    inv.h_o, count.classes
                ));
            }
            orders += 1;
        }
    }
    ensure(flagged.is_empty(), || flagged.join("; "))?;
    Ok(format!(
        "{maximal} maximal orders within bounds, {cubics} cubics match point counts, {orders} orders match the depth-{BFS_DEPTH} oracle"
    ))
}

fn survey_bytes(
    cfg: &SurveyConfig,
) -> Result<(Vec<u8>, drinfeld_core::survey::SurveySummary), String> {
    let mut buf = Vec::new();
    let summary = run(cfg, &mut buf).map_err(|e| e.to_string())?;
    Ok((buf, summary))
}

fn poly_degree(s: &str) -> usize {
    s.split(',').count() - 1
}

/// Rebuilds both tables from the raw CSV text alone.
fn recount(csv_text: &[u8], q: u32) -> (String, String) {
    #[derive(Default)]
    struct Acc {
        total: usize,
        large: usize,
        one: usize,
        min_delta: Option<usize>,
        sum_delta: usize,
        min_d2: Option<usize>,
        min_slack: Option<i64>,
        ss: usize,
    }
    let mut rd = csv::Reader::from_reader(csv_text);
    let h = rd.headers().unwrap().clone();
    let col = |name: &str| h.iter().position(|c| c == name).unwrap();
    let (cx, cbp, cdd, cd2, css) = (
        col("x"),
        col("b_p"),
        col("deg_delta_p"),
        col("d2"),
        col("supersingular"),
    );
    let mut by_x: BTreeMap<usize, Acc> = BTreeMap::new();
    for rec in rd.records() {
        let rec = rec.unwrap();
        let x: usize = rec[cx].parse().unwrap();
        let dbp = poly_degree(&rec[cbp]);
        let dd: usize = rec[cdd].parse().unwrap();
        let dd2 = poly_degree(&rec[cd2]);
        let a = by_x.entry(x).or_default();
        a.total += 1;
        // f = sqrt: 2 deg b_p >= sqrt(x)
        a.large += (4 * dbp * dbp >= x) as usize;
        a.one += (&rec[cbp] == "1") as usize;
        a.min_delta = Some(a.min_delta.map_or(dd, |m| m.min(dd)));
        a.sum_delta += dd;
        a.min_d2 = Some(a.min_d2.map_or(dd2, |m| m.min(dd2)));
        let slack = 2 * dd2 as i64 - x as i64;
        a.min_slack = Some(a.min_slack.map_or(slack, |m| m.min(slack)));
        a.ss += (&rec[css] == "true") as usize;
    }
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.max(1)
    };
    let lq = (q as f64).ln();
    let mut density = String::from(
        "x,primes_total,f_half,count_bp_large,count_bp_one,frac_bp_large,frac_decimal,dirichlet_s1.1,dirichlet_s1.5\n",
    );
    let mut growth = String::from(
        "x,primes_total,min_deg_delta_p,mean_deg_delta_p,min_deg_d2,min_d2_slack,supersingular,delta_ref,d2_ref\n",
    );
    let (mut n11, mut d11, mut n15, mut d15) = (0.0, 0.0, 0.0, 0.0);
    for (x, a) in &by_x {
        let w11 = (q as f64).powf(-1.1 * *x as f64);
        let w15 = (q as f64).powf(-1.5 * *x as f64);
        n11 += w11 * a.large as f64;
        d11 += w11 * a.total as f64;
        n15 += w15 * a.large as f64;
        d15 += w15 * a.total as f64;
        let g = gcd(a.large, a.total);
        density.push_str(&format!(
            "{x},{},{:.4},{},{},{}/{},{:.6},{:.6},{:.6}\n",
            a.total,
            (*x as f64).sqrt() / 2.0,
            a.large,
            a.one,
            a.large / g,
            a.total / g,
            a.large as f64 / a.total as f64,
            n11 / d11,
            n15 / d15
        ));
        let lp = *x as f64 * lq;
        let delta_ref = (lp / (lp.ln() * lp.ln())).ln() / lq;
        let d2_ref = *x as f64 / 2.0 + (lp.sqrt() / lp.ln()).ln() / lq;
        growth.push_str(&format!(
            "{x},{},{},{:.4},{},{},{},{:.4},{:.4}\n",
            a.total,
            a.min_delta.unwrap(),
            a.sum_delta as f64 / a.total as f64,
            a.min_d2.unwrap(),
            a.min_slack.unwrap(),
            a.ss,
            delta_ref,
            d2_ref
        ));
    }
    (density, growth)
}

fn pipeline_integrity() -> Outcome {
    let mut cfg = SurveyConfig::new(DrinfeldModuleSpec::standard(f3()));
    cfg.deg_min = 1;
    cfg.deg_max = TABLE_MAX_DEG;
    cfg.f = FSpec::Sqrt;
    let (bytes, summary) = survey_bytes(&cfg)?;
    let density = density_report(&summary.rows, 3);
    let growth = growth_report(&summary.rows, 3).map_err(|e| e.to_string())?;
    let (d2, g2) = recount(&bytes, 3);
    ensure(density == d2, || {
        format!("density tables differ:\n{density}\nvs\n{d2}")
    })?;
    ensure(growth == g2, || {
        format!("growth tables differ:\n{growth}\nvs\n{g2}")
    })?;
    let xs: Vec<usize> = summary.rows.iter().map(|r| r.x).collect();
    ensure(xs == (1..=TABLE_MAX_DEG).collect::<Vec<_>>(), || {
        format!("rows for {xs:?}")
    })?;
    ensure(summary.rows.iter().all(|r| r.min_d2_slack >= 0), || {
        "negative d2 slack".into()
    })?;
    let expected: usize = (1..=TABLE_MAX_DEG)
        .map(|x| monic_irreducibles(f3(), x).count())
        .sum();
    ensure(summary.enumerated == expected, || {
        format!("{} primes seen, {expected} expected", summary.enumerated)
    })?;
    let records = bytes.iter().filter(|&&b| b == b'\n').count() - 1;
    Ok(format!(
        "{records} records for x in [1, {TABLE_MAX_DEG}], density and growth recounts byte-identical, min d2 slack >= 0"
    ))
}

fn determinism() -> Outcome {
    let mut cfg = SurveyConfig::new(DrinfeldModuleSpec::standard(f3()));
    cfg.deg_max = SWEEP_MAX_DEG;
    let mut sizes = Vec::new();
    for format in [Format::Csv, Format::Jsonl] {
        cfg.format = format;
        cfg.workers = 1;
        let (one, _) = survey_bytes(&cfg)?;
        cfg.workers = PARALLEL_WORKERS;
        let (many, _) = survey_bytes(&cfg)?;
        ensure(one == many, || {
            format!("{format:?} output depends on worker count")
        })?;
        sizes.push(one.len());
    }
    Ok(format!(
        "1 vs {PARALLEL_WORKERS} workers byte-identical (csv {} bytes, jsonl {} bytes)",
        sizes[0], sizes[1]
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("worked instance", worked_instance),
        ("full-invariant sweep", invariant_sweep),
        ("three-way oracle equivalence", three_way),
        ("smith form vs torsion scan", smith_scan),
        ("quadratic form reduction", random_reductions),
        ("class numbers", class_numbers),
        ("density/growth pipeline", pipeline_integrity),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({detail})", i + 1),
            Err(detail) => {
                println!("criterion {} [{name}]: FAIL ({detail})", i + 1);
                failed += 1;
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
