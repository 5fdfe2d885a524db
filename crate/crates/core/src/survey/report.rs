use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusRecord;
use crate::survey::config::FSpec;

pub const DENSITY_HEADER: &str =
    "x,primes_total,f_half,count_bp_large,count_bp_one,frac_bp_large,frac_decimal,dirichlet_s1.1,dirichlet_s1.5";
pub const GROWTH_HEADER: &str =
    "x,primes_total,min_deg_delta_p,mean_deg_delta_p,min_deg_d2,min_d2_slack,supersingular,delta_ref,d2_ref";

/// Aggregates over the good primes of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityRow {
    pub x: usize,
    pub primes_total: usize,
    pub f: FSpec,
    /// `deg b_p >= f(x) / 2`.
    pub count_bp_large: usize,
    pub count_bp_one: usize,
    pub min_deg_delta: usize,
    pub sum_deg_delta: usize,
    pub min_deg_d2: usize,
    /// `min (2 deg d2 - deg p)`.
    pub min_d2_slack: i64,
    pub supersingular_count: usize,
}

impl DensityRow {
    /// `None` when there are no records.
    pub fn from_records(x: usize, records: &[FrobeniusRecord], f: &FSpec) -> Option<Self> {
        let first = records.first()?;
        let mut row = DensityRow {
            x,
            primes_total: 0,
            f: *f,
            count_bp_large: 0,
            count_bp_one: 0,
            min_deg_delta: first.deg_delta_p(),
            sum_deg_delta: 0,
            min_deg_d2: first.d2.degree().unwrap_or(0),
            min_d2_slack: first.d2_slack(),
            supersingular_count: 0,
        };
        for r in records {
            debug_assert_eq!(r.degree(), x);
            let deg_bp = r.b_p.degree().unwrap_or(0);
            row.primes_total += 1;
            row.count_bp_large += f.is_large(deg_bp, x) as usize;
            row.count_bp_one += r.b_p.is_one() as usize;
            row.min_deg_delta = row.min_deg_delta.min(r.deg_delta_p());
            row.sum_deg_delta += r.deg_delta_p();
            row.min_deg_d2 = row.min_deg_d2.min(r.d2.degree().unwrap_or(0));
            row.min_d2_slack = row.min_d2_slack.min(r.d2_slack());
            row.supersingular_count += r.supersingular as usize;
        }
        Some(row)
    }

    pub fn mean_deg_delta(&self) -> f64 {
        self.sum_deg_delta as f64 / self.primes_total as f64
    }
}

/// One row per degree present in `records`, in increasing degree.
pub fn rows_from_records(records: &[FrobeniusRecord], f: &FSpec) -> Vec<DensityRow> {
    let mut by_deg: BTreeMap<usize, Vec<FrobeniusRecord>> = BTreeMap::new();
    for r in records {
        by_deg.entry(r.degree()).or_default().push(r.clone());
    }
    by_deg
        .into_iter()
        .filter_map(|(x, recs)| DensityRow::from_records(x, &recs, f))
        .collect()
}

/// Per-degree share of primes with large `b_p`, with cumulative
/// Dirichlet-weighted shares `sum |p|^-s [large] / sum |p|^-s` over all
/// degrees up to x.
pub fn density_report(rows: &[DensityRow], q: u32) -> String {
    let mut out = String::new();
    writeln!(out, "{DENSITY_HEADER}").unwrap();
    let mut acc = [(0.0f64, 0.0f64); 2];
    for row in rows {
        let g = row.count_bp_large.gcd(&row.primes_total).max(1);
        let frac = format!("{}/{}", row.count_bp_large / g, row.primes_total / g);
        let mut dirichlet = [0.0; 2];
        for (k, s) in [1.1f64, 1.5].into_iter().enumerate() {
            let w = (q as f64).powf(-s * row.x as f64);
            acc[k].0 += w * row.count_bp_large as f64;
            acc[k].1 += w * row.primes_total as f64;
            dirichlet[k] = acc[k].0 / acc[k].1;
        }
        writeln!(
            out,
            "{},{},{:.4},{},{},{},{:.6},{:.6},{:.6}",
            row.x,
            row.primes_total,
            row.f.value(row.x) / 2.0,
            row.count_bp_large,
            row.count_bp_one,
            frac,
            row.count_bp_large as f64 / row.primes_total as f64,
            dirichlet[0],
            dirichlet[1]
        )
        .unwrap();
    }
    out
}

/// `log_q` of `log|p| / (log log|p|)^2` at `|p| = q^x`.
pub fn delta_reference(q: u32, x: usize) -> f64 {
    let ln_q = (q as f64).ln();
    let lp = x as f64 * ln_q;
    (lp / lp.ln().powi(2)).ln() / ln_q
}

/// `log_q` of `|p|^(1/2) (log|p|)^(1/2) / log log|p|` at `|p| = q^x`.
pub fn d2_reference(q: u32, x: usize) -> f64 {
    let ln_q = (q as f64).ln();
    let lp = x as f64 * ln_q;
    x as f64 / 2.0 + (lp.sqrt() / lp.ln()).ln() / ln_q
}

/// Degrees of `delta_p` and `d2` next to the reference curves. Only the
/// trivial bound `2 deg d2 >= deg p` is enforced.
pub fn growth_report(rows: &[DensityRow], q: u32) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "{GROWTH_HEADER}").unwrap();
    for row in rows {
        if row.min_d2_slack < 0 {
            return Err(Error::InvariantViolation {
                p: format!("degree {}", row.x),
                detail: format!("2 deg d2 - deg p = {}", row.min_d2_slack),
            });
        }
        writeln!(
            out,
            "{},{},{},{:.4},{},{},{},{:.4},{:.4}",
            row.x,
            row.primes_total,
            row.min_deg_delta,
            row.mean_deg_delta(),
            row.min_deg_d2,
            row.min_d2_slack,
            row.supersingular_count,
            delta_reference(q, row.x),
            d2_reference(q, row.x)
        )
        .unwrap();
    }
    Ok(out)
}
