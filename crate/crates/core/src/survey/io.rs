use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusRecord;
use crate::poly_arith::{Fq, PolyA};

pub const CSV_HEADER: &str =
    "q,x,p,a_p,mu_p,disc,b_max,b_p,c_p,delta_p,deg_delta_p,d1,d2,supersingular,j_bar";

/// One record with polynomials in the comma text format; shared by the CSV
/// and JSONL writers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordRow {
    pub q: u32,
    pub x: usize,
    pub p: String,
    pub a_p: String,
    pub mu_p: u32,
    pub disc: String,
    pub b_max: String,
    pub b_p: String,
    pub c_p: String,
    pub delta_p: String,
    pub deg_delta_p: usize,
    pub d1: String,
    pub d2: String,
    pub supersingular: bool,
    pub j_bar: String,
}

impl From<&FrobeniusRecord> for RecordRow {
    fn from(r: &FrobeniusRecord) -> Self {
        RecordRow {
            q: r.q(),
            x: r.degree(),
            p: r.p.to_string(),
            a_p: r.a_p.to_string(),
            mu_p: r.mu_p.value,
            disc: r.disc.to_string(),
            b_max: r.b_max.to_string(),
            b_p: r.b_p.to_string(),
            c_p: r.c_p.to_string(),
            delta_p: r.delta_p.to_string(),
            deg_delta_p: r.deg_delta_p(),
            d1: r.d1.to_string(),
            d2: r.d2.to_string(),
            supersingular: r.supersingular,
            j_bar: r.j_bar.to_string(),
        }
    }
}

impl RecordRow {
    /// Rebuilds the record, recovering `delta_K = delta_p / c_p^2`, and
    /// re-runs [`FrobeniusRecord::check`].
    pub fn to_record(&self) -> Result<FrobeniusRecord> {
        let fq = Fq::new(self.q as u64)?;
        let poly = |s: &str| PolyA::parse(fq, s);
        let p = poly(&self.p)?;
        let c_p = poly(&self.c_p)?;
        let delta_p = poly(&self.delta_p)?;
        let delta_k = delta_p.exact_div(&(&c_p * &c_p)).ok_or_else(|| {
            Error::Parse(format!("c_p^2 does not divide delta_p at p = {}", self.p))
        })?;
        let record = FrobeniusRecord {
            p,
            a_p: poly(&self.a_p)?,
            mu_p: fq.elem(self.mu_p),
            disc: poly(&self.disc)?,
            b_max: poly(&self.b_max)?,
            delta_k,
            b_p: poly(&self.b_p)?,
            c_p,
            delta_p,
            d1: poly(&self.d1)?,
            d2: poly(&self.d2)?,
            supersingular: self.supersingular,
            j_bar: poly(&self.j_bar)?,
        };
        if self.mu_p == 0 || self.mu_p >= self.q {
            return Err(Error::Parse(format!("mu_p = {} outside F_q^x", self.mu_p)));
        }
        if record.degree() != self.x || record.deg_delta_p() != self.deg_delta_p {
            return Err(Error::Parse(format!(
                "degree columns disagree at p = {}",
                self.p
            )));
        }
        record.check()?;
        Ok(record)
    }
}

pub fn write_csv<W: Write>(out: W, records: &[FrobeniusRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(RecordRow::from(r))?;
    }
    w.flush()?;
    Ok(())
}

/// Appends rows without a header, for streaming one degree at a time.
pub fn append_csv<W: Write>(out: W, records: &[FrobeniusRecord]) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    for r in records {
        w.serialize(RecordRow::from(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_jsonl<W: Write>(mut out: W, records: &[FrobeniusRecord]) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, &RecordRow::from(r))?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<FrobeniusRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    let header = rd.headers()?.iter().collect::<Vec<_>>().join(",");
    if header != CSV_HEADER {
        return Err(Error::Parse(format!("unexpected header {header:?}")));
    }
    rd.deserialize::<RecordRow>()
        .map(|row| row?.to_record())
        .collect()
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<FrobeniusRecord>> {
    let mut out = Vec::new();
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let row: RecordRow = serde_json::from_str(&line)?;
        out.push(row.to_record()?);
    }
    Ok(out)
}
