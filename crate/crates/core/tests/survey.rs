use std::fs::File;
use std::io::BufReader;

use drinfeld_core::drinfeld::DrinfeldModuleSpec;
use drinfeld_core::poly_arith::{monic_irreducibles, Fq};
use drinfeld_core::survey::{
    density_report, read_csv, read_jsonl, rows_from_records, run, sweep, FSpec, Format,
    SurveyConfig,
};

fn standard_config(deg_max: usize) -> SurveyConfig {
    let mut cfg = SurveyConfig::new(DrinfeldModuleSpec::standard(Fq::new(3).unwrap()));
    cfg.deg_max = deg_max;
    cfg
}

#[test]
fn frozen_statistics_for_the_standard_module() {
    // per degree 1..=7: (primes, b_max > 1, b_p > 1, c_p > 1, supersingular, d1 > 1)
    let expected = [
        (3, 0, 0, 0, 0, 0),
        (3, 0, 0, 0, 0, 0),
        (8, 3, 0, 3, 3, 0),
        (18, 6, 0, 6, 0, 0),
        (48, 24, 6, 21, 0, 3),
        (116, 66, 9, 57, 0, 3),
        (312, 144, 39, 126, 0, 18),
    ];
    let batches = sweep(&standard_config(7)).unwrap();
    for (batch, want) in batches.iter().zip(expected) {
        let r = &batch.records;
        let count = |f: &dyn Fn(&drinfeld_core::frobenius::FrobeniusRecord) -> bool| {
            r.iter().filter(|x| f(x)).count()
        };
        let got = (
            r.len(),
            count(&|x| !x.b_max.is_one()),
            count(&|x| !x.b_p.is_one()),
            count(&|x| !x.c_p.is_one()),
            count(&|x| x.supersingular),
            count(&|x| !x.d1.is_one()),
        );
        assert_eq!(got, want, "degree {}", batch.x);
        assert!(batch.bad.is_empty());
    }
}

#[test]
fn first_degree_records() {
    let batches = sweep(&standard_config(2)).unwrap();
    let ps: Vec<String> = batches[0].records.iter().map(|r| r.p.to_human()).collect();
    assert_eq!(ps, ["T", "T + 1", "T + 2"]);
    assert_eq!(batches[1].records.len(), 3);
}

#[test]
fn bad_primes_are_reported_and_excluded() {
    // g2 = T(T + 1): bad at T and T + 1
    let psi = DrinfeldModuleSpec::parse(Fq::new(3).unwrap(), "1", "0,1,1").unwrap();
    let mut cfg = SurveyConfig::new(psi);
    cfg.deg_max = 3;
    let mut out = Vec::new();
    let summary = run(&cfg, &mut out).unwrap();
    let bad: Vec<String> = summary.bad.iter().map(|p| p.to_string()).collect();
    assert_eq!(bad, ["0,1", "1,1"]);
    assert_eq!(summary.rows[0].primes_total, 1);
    let all: usize = (1..=3)
        .map(|x| monic_irreducibles(Fq::new(3).unwrap(), x).count())
        .sum();
    assert_eq!(summary.enumerated, all);
    let good: usize = summary.rows.iter().map(|r| r.primes_total).sum();
    assert_eq!(good + summary.bad.len(), all);
}

#[test]
fn files_round_trip_and_rebuild_the_tables() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = standard_config(5);
    cfg.f = FSpec::Const(2);
    let csv_path = dir.path().join("s.csv");
    let summary = run(&cfg, File::create(&csv_path).unwrap()).unwrap();
    let records = read_csv(File::open(&csv_path).unwrap()).unwrap();
    assert_eq!(records.len(), 80);
    let rows = rows_from_records(&records, &cfg.f);
    assert_eq!(rows, summary.rows);
    assert_eq!(density_report(&rows, 3), density_report(&summary.rows, 3));

    cfg.format = Format::Jsonl;
    let json_path = dir.path().join("s.jsonl");
    run(&cfg, File::create(&json_path).unwrap()).unwrap();
    let from_json = read_jsonl(BufReader::new(File::open(&json_path).unwrap())).unwrap();
    assert_eq!(from_json, records);
}

#[test]
fn invalid_configs_are_rejected() {
    let mut cfg = standard_config(3);
    cfg.deg_min = 0;
    assert!(sweep(&cfg).is_err());
    let mut cfg = standard_config(3);
    cfg.workers = 0;
    assert!(sweep(&cfg).is_err());
}
