use std::ops::RangeInclusive;
use std::path::PathBuf;

use num_rational::BigRational;

use crate::CensusError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub workers: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            workers: 1,
            seed: 0,
            out: None,
            format: None,
        }
    }
}

impl RunConfig {
    pub fn pool(&self) -> Result<rayon::ThreadPool, CensusError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers.max(1))
            .build()
            .map_err(|e| CensusError::Input(format!("cannot start {} workers: {e}", self.workers)))
    }
}

/// A real number, or `log(x)` for its natural logarithm.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.strip_prefix("log(").and_then(|r| r.strip_suffix(')')) {
        Some(inner) => {
            let x: f64 = inner.trim().parse().map_err(|_| format!("bad number in {s:?}"))?;
            if x <= 0.0 {
                return Err(format!("log of nonpositive {x}"));
            }
            x.ln()
        }
        None => s.parse().map_err(|_| format!("expected a number or log(x), got {s:?}"))?,
    };
    if !value.is_finite() {
        return Err(format!("{s:?} is not finite"));
    }
    Ok(value)
}

/// Inclusive `A..B`, or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let parse = |x: &str| x.trim().parse::<u32>().map_err(|_| format!("bad range bound {x:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.trim().parse::<BigRational>().map_err(|_| format!("bad rational {s:?}"))
}

/// Comma-separated rationals such as `2,3,5/2`.
pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>, String> {
    s.split(',').map(parse_rational).collect()
}
