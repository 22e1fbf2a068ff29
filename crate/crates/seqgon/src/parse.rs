//! Command-line value parsing: inclusive ranges, integer lists, families.

use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use seqgon_core::sequences::{RecurrenceSpec, SequenceFamily, PADOVAN_DEFAULT_INITIAL};

use crate::CliError;

/// `a..b` (inclusive on both ends) or a single value `a`.
pub fn range<T>(text: &str) -> Result<RangeInclusive<T>, CliError>
where
    T: FromStr + PartialOrd + Copy,
{
    let bad = || CliError::Usage(format!("invalid range '{text}', expected a..b or a single value"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(CliError::Usage(format!("range '{text}' is empty")));
    }
    Ok(lo..=hi)
}

/// Comma-separated integers, e.g. `1,1,2`.
pub fn int_list(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid integer '{s}' in list '{text}'")))
        })
        .collect()
}

pub fn triple(text: &str) -> Result<[i64; 3], CliError> {
    let v = int_list(text)?;
    <[i64; 3]>::try_from(v)
        .map_err(|_| CliError::Usage(format!("expected exactly three values, got '{text}'")))
}

/// Family parameters as given on the command line.
#[derive(Clone, Debug, Default)]
pub struct FamilyOptions {
    pub s: Option<i64>,
    pub t: Option<i64>,
    pub rank: Option<u32>,
    pub initial: Option<String>,
    pub coeffs: Option<String>,
}

pub const FAMILY_NAMES: &[&str] = &[
    "fibonacci",
    "lucas",
    "generalized",
    "pell",
    "pell-lucas",
    "jacobsthal",
    "jacobsthal-lucas",
    "polygonal",
    "tribonacci",
    "perrin",
    "padovan",
    "custom",
];

pub fn family(name: &str, opts: &FamilyOptions) -> Result<SequenceFamily, CliError> {
    let usage = |m: &str| Err(CliError::Usage(m.to_string()));
    let family = match name.to_ascii_lowercase().replace('_', "-").as_str() {
        "fibonacci" => SequenceFamily::Fibonacci,
        "lucas" => SequenceFamily::Lucas,
        "generalized" | "generalized-fibonacci" => match (opts.s, opts.t) {
            (Some(s), Some(t)) => SequenceFamily::GeneralizedFibonacci { s, t },
            _ => return usage("generalized needs both --s and --t"),
        },
        "pell" => SequenceFamily::Pell,
        "pell-lucas" => SequenceFamily::PellLucas,
        "jacobsthal" => SequenceFamily::Jacobsthal,
        "jacobsthal-lucas" => SequenceFamily::JacobsthalLucas,
        "polygonal" => match opts.rank {
            Some(rank) if rank >= 3 => SequenceFamily::Polygonal { rank },
            Some(rank) => return usage(&format!("--rank must be at least 3, got {rank}")),
            None => return usage("polygonal needs --rank"),
        },
        "tribonacci" => SequenceFamily::Tribonacci,
        "perrin" => SequenceFamily::Perrin,
        "padovan" => SequenceFamily::Padovan {
            initial: match &opts.initial {
                Some(text) => triple(text)?,
                None => PADOVAN_DEFAULT_INITIAL,
            },
        },
        "custom" => {
            let (Some(coeffs), Some(initial)) = (&opts.coeffs, &opts.initial) else {
                return usage("custom needs --coeffs and --initial");
            };
            let initial = int_list(initial)?.into_iter().map(BigInt::from).collect();
            SequenceFamily::Custom(RecurrenceSpec::new("custom", int_list(coeffs)?, initial)?)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown family '{other}'; expected one of {}",
                FAMILY_NAMES.join(", ")
            )))
        }
    };
    Ok(family)
}
