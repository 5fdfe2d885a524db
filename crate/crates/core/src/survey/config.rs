use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::drinfeld::DrinfeldModuleSpec;
use crate::error::{Error, Result};
use crate::poly_arith::Fq;

/// Threshold function `f` for the density column: a prime counts as large
/// when `deg b_p >= f(x) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FSpec {
    Const(u64),
    Sqrt,
    Log2,
    Linear { num: u64, den: u64 },
}

impl FSpec {
    /// `2 deg_bp >= f(x)`, decided in integers.
    pub fn is_large(&self, deg_bp: usize, x: usize) -> bool {
        let two_d = 2 * deg_bp as u128;
        let x = x as u128;
        match *self {
            FSpec::Const(k) => two_d >= k as u128,
            FSpec::Sqrt => two_d * two_d >= x,
            FSpec::Log2 => two_d >= 127 || (1u128 << two_d) >= x,
            FSpec::Linear { num, den } => two_d * den as u128 >= num as u128 * x,
        }
    }

    pub fn value(&self, x: usize) -> f64 {
        let x = x as f64;
        match *self {
            FSpec::Const(k) => k as f64,
            FSpec::Sqrt => x.sqrt(),
            FSpec::Log2 => x.log2(),
            FSpec::Linear { num, den } => num as f64 * x / den as f64,
        }
    }
}

impl FromStr for FSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || {
            Error::Config(format!(
                "unknown f {s:?}; expected const:k, sqrt, log2 or linear:num/den"
            ))
        };
        match s {
            "sqrt" => return Ok(FSpec::Sqrt),
            "log2" => return Ok(FSpec::Log2),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("const:") {
            return k.trim().parse().map(FSpec::Const).map_err(|_| bad());
        }
        if let Some(r) = s.strip_prefix("linear:") {
            let (n, d) = r.split_once('/').unwrap_or((r, "1"));
            let num: u64 = n.trim().parse().map_err(|_| bad())?;
            let den: u64 = d.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(Error::Config("linear f with zero denominator".into()));
            }
            return Ok(FSpec::Linear { num, den });
        }
        Err(bad())
    }
}

impl fmt::Display for FSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FSpec::Const(k) => write!(f, "const:{k}"),
            FSpec::Sqrt => write!(f, "sqrt"),
            FSpec::Log2 => write!(f, "log2"),
            FSpec::Linear { num, den } => write!(f, "linear:{num}/{den}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "csv" => Ok(Format::Csv),
            "jsonl" | "json" => Ok(Format::Jsonl),
            other => Err(Error::Config(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub psi: DrinfeldModuleSpec,
    pub deg_min: usize,
    pub deg_max: usize,
    pub f: FSpec,
    /// `None` writes to stdout.
    pub out: Option<PathBuf>,
    pub workers: usize,
    pub format: Format,
}

impl SurveyConfig {
    /// Defaults: `q = 3`, `psi_T = T + tau + tau^2`, degrees 1..=8, `f = sqrt`.
    pub fn new(psi: DrinfeldModuleSpec) -> Self {
        SurveyConfig {
            psi,
            deg_min: 1,
            deg_max: 8,
            f: FSpec::Sqrt,
            out: None,
            workers: 1,
            format: Format::Csv,
        }
    }

    pub fn q(&self) -> u32 {
        self.psi.fq().q()
    }

    pub fn validate(&self) -> Result<()> {
        if self.deg_min < 1 || self.deg_min > self.deg_max {
            return Err(Error::Config(format!(
                "need 1 <= deg_min <= deg_max, got {}..{}",
                self.deg_min, self.deg_max
            )));
        }
        if self.workers == 0 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        Ok(())
    }

    /// Reads `key = value` lines (`#` starts a comment, values may be
    /// quoted). Keys mirror the CLI flags: q, g1, g2, deg_min, deg_max, f,
    /// format, out, workers.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut q = 3u64;
        let (mut g1, mut g2) = ("1".to_string(), "1".to_string());
        let mut rest = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", n + 1)))?;
            let k = k.trim().replace('-', "_");
            let v = v.trim().trim_matches('"').to_string();
            match k.as_str() {
                "q" => {
                    q = v
                        .parse()
                        .map_err(|_| Error::Config(format!("bad q {v:?}")))?
                }
                "g1" => g1 = v,
                "g2" => g2 = v,
                _ => rest.push((k, v)),
            }
        }
        let fq = Fq::new(q)?;
        let mut cfg = SurveyConfig::new(DrinfeldModuleSpec::parse(fq, &g1, &g2)?);
        for (k, v) in rest {
            cfg.set(&k, &v)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Sets one of the non-module keys.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let num = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| Error::Config(format!("{key}: expected an integer, got {v:?}")))
        };
        match key {
            "deg_min" => self.deg_min = num(value)?,
            "deg_max" => self.deg_max = num(value)?,
            "workers" => self.workers = num(value)?,
            "f" => self.f = value.parse()?,
            "format" => self.format = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value)),
            _ => return Err(Error::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }
}
