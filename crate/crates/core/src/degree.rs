//! Exact membership degrees.
//!
//! A [`Degree`] is a reduced non-negative fraction no greater than one.
//! Decimal input is converted without rounding, so every tie the relations
//! care about (equal bounds, equal means) is decided exactly.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Maximum number of fractional digits accepted from decimal text.
pub const MAX_FRACTION_DIGITS: usize = 9;

/// One membership evaluation in `[0, 1]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(Ratio<u64>);

impl Degree {
    pub const ZERO: Degree = Degree(Ratio::new_raw(0, 1));
    pub const ONE: Degree = Degree(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`, rejecting zero denominators and values above one.
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::MalformedDegree(format!("{numer}/{denom}")));
        }
        if numer > denom {
            return Err(Error::DegreeOutOfRange(format!("{numer}/{denom}")));
        }
        Ok(Degree(Ratio::new(numer, denom)))
    }

    pub fn ratio(&self) -> Ratio<u64> {
        self.0
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    /// `1 - self`.
    pub fn complement(self) -> Self {
        Degree(Ratio::one() - self.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Shortest decimal rendering when the value terminates within
    /// [`MAX_FRACTION_DIGITS`] digits.
    pub fn to_decimal(&self) -> Option<String> {
        let (numer, denom) = (self.numer(), self.denom());
        let mut scale = 1u64;
        let mut digits = 0;
        while !scale.is_multiple_of(denom) {
            if digits == MAX_FRACTION_DIGITS {
                return None;
            }
            scale *= 10;
            digits += 1;
        }
        let scaled = numer * (scale / denom);
        let int = scaled / scale;
        if digits == 0 {
            return Some(int.to_string());
        }
        let frac = scaled % scale;
        Some(format!("{int}.{frac:0width$}", width = digits))
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

/// Parses a finite decimal such as `0.45` or `1`.
///
/// Fraction text `p/q` is also accepted so that degrees which do not
/// terminate in decimal (random grids, stored witnesses) survive a save/load
/// cycle.
pub fn parse_degree(text: &str) -> Result<Degree> {
    let trimmed = text.trim();
    if let Some((p, q)) = trimmed.split_once('/') {
        let numer = parse_digits(p.trim(), text)?;
        let denom = parse_digits(q.trim(), text)?;
        return Degree::new(numer, denom).map_err(|e| match e {
            Error::DegreeOutOfRange(_) => Error::DegreeOutOfRange(text.to_string()),
            _ => Error::MalformedDegree(text.to_string()),
        });
    }

    let (int_part, frac_part) = match trimmed.split_once('.') {
        Some((i, f)) => (i, f),
        None => (trimmed, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::MalformedDegree(text.to_string()));
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(Error::MalformedDegree(text.to_string()));
    }
    if trimmed.ends_with('.') {
        return Err(Error::MalformedDegree(text.to_string()));
    }
    let int_digits = int_part.trim_start_matches('0');
    if int_digits.len() > 1 || (int_digits == "1" && frac_part.bytes().any(|b| b != b'0')) {
        return Err(Error::DegreeOutOfRange(text.to_string()));
    }
    if int_digits.len() == 1 && int_digits != "1" {
        return Err(Error::DegreeOutOfRange(text.to_string()));
    }
    let frac_digits = frac_part.trim_end_matches('0');
    if frac_digits.len() > MAX_FRACTION_DIGITS {
        return Err(Error::ExcessPrecision(text.to_string()));
    }
    if int_digits == "1" {
        return Ok(Degree::ONE);
    }
    let denom = 10u64.pow(frac_digits.len() as u32);
    let numer = if frac_digits.is_empty() {
        0
    } else {
        frac_digits.parse::<u64>().expect("validated digits")
    };
    Degree::new(numer, denom)
}

fn parse_digits(s: &str, original: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedDegree(original.to_string()));
    }
    s.parse::<u64>()
        .map_err(|_| Error::MalformedDegree(original.to_string()))
}

impl FromStr for Degree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_degree(s)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_decimal() {
            Some(d) => f.write_str(&d),
            None => write!(f, "{}/{}", self.numer(), self.denom()),
        }
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
