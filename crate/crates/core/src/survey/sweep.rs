use std::io::Write;

use rayon::prelude::*;

use crate::drinfeld::DrinfeldModuleSpec;
use crate::error::{Error, Result};
use crate::frobenius::{build_record, FrobeniusRecord};
use crate::poly_arith::PolyA;
use crate::survey::config::{Format, SurveyConfig};
use crate::survey::io::{append_csv, write_jsonl, CSV_HEADER};
use crate::survey::report::DensityRow;

/// Everything found at one degree, in enumeration order.
#[derive(Clone, Debug)]
pub struct DegreeBatch {
    pub x: usize,
    pub records: Vec<FrobeniusRecord>,
    pub bad: Vec<PolyA>,
}

#[derive(Clone, Debug, Default)]
pub struct SurveySummary {
    pub rows: Vec<DensityRow>,
    pub bad: Vec<PolyA>,
    /// Monic irreducibles seen, good and bad.
    pub enumerated: usize,
}

fn at_prime(p: &PolyA, e: Error) -> Error {
    match e {
        Error::InvariantViolation { .. } | Error::AtPrime { .. } => e,
        other => Error::AtPrime {
            p: p.to_string(),
            source: Box::new(other),
        },
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))
}

fn sweep_degree(
    psi: &DrinfeldModuleSpec,
    x: usize,
    pool: &rayon::ThreadPool,
) -> Result<DegreeBatch> {
    let primes: Vec<PolyA> = pool.install(|| {
        let cands: Vec<PolyA> = PolyA::monic_of_degree(psi.fq(), x).collect();
        cands
            .into_par_iter()
            .filter(|p| crate::poly_arith::is_irreducible(p).unwrap_or(false))
            .collect()
    });
    debug_assert!(primes.windows(2).all(|w| w[0] < w[1]));
    let mut good = Vec::with_capacity(primes.len());
    let mut bad = Vec::new();
    for p in primes {
        if psi.good_reduction(&p)? {
            good.push(p);
        } else {
            log::warn!("skipping p = {p} ({}): bad reduction", p.to_human());
            bad.push(p);
        }
    }
    // indexed collect keeps enumeration order whatever the worker count
    let records = pool.install(|| {
        good.par_iter()
            .map(|p| build_record(psi, p).map_err(|e| at_prime(p, e)))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(DegreeBatch { x, records, bad })
}

/// Builds every record for `deg_min <= x <= deg_max`, ordered by `(x, p)`.
pub fn sweep(config: &SurveyConfig) -> Result<Vec<DegreeBatch>> {
    config.validate()?;
    let pool = pool(config.workers)?;
    (config.deg_min..=config.deg_max)
        .map(|x| sweep_degree(&config.psi, x, &pool))
        .collect()
}

/// Runs the sweep degree by degree, writing records to `out` as each
/// degree completes, and returns the per-degree density rows.
pub fn run<W: Write>(config: &SurveyConfig, mut out: W) -> Result<SurveySummary> {
    config.validate()?;
    let pool = pool(config.workers)?;
    let mut summary = SurveySummary::default();
    if config.format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    for x in config.deg_min..=config.deg_max {
        let batch = sweep_degree(&config.psi, x, &pool)?;
        match config.format {
            Format::Csv => append_csv(&mut out, &batch.records)?,
            Format::Jsonl => write_jsonl(&mut out, &batch.records)?,
        }
        log::info!(
            "x = {x}: {} good primes, {} bad",
            batch.records.len(),
            batch.bad.len()
        );
        summary.enumerated += batch.records.len() + batch.bad.len();
        if let Some(row) = DensityRow::from_records(x, &batch.records, &config.f) {
            summary.rows.push(row);
        }
        summary.bad.extend(batch.bad);
    }
    out.flush()?;
    Ok(summary)
}
