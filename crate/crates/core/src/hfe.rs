//! Hesitant fuzzy elements: non-empty multisets of degrees.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, Zero};

use serde::{Deserialize, Serialize};

use crate::degree::{parse_degree, Degree};
use crate::error::{Error, Result};

/// A non-empty finite multiset of degrees, held in descending order.
///
/// Equality is multiset equality: duplicates count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hfe {
    degrees: Vec<Degree>,
}

impl Hfe {
    pub fn new(mut degrees: Vec<Degree>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyElement);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Hfe { degrees })
    }

    /// Parses each entry with [`parse_degree`].
    pub fn parse<S: AsRef<str>>(values: &[S]) -> Result<Self> {
        let degrees = values
            .iter()
            .map(|v| parse_degree(v.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Hfe::new(degrees)
    }

    pub fn singleton(d: Degree) -> Self {
        Hfe { degrees: vec![d] }
    }

    /// A constant element repeating `d` `count` times (`count ≥ 1`).
    pub fn constant(d: Degree, count: usize) -> Self {
        assert!(count > 0, "constant element needs a positive count");
        Hfe {
            degrees: vec![d; count],
        }
    }

    /// Degrees in descending order.
    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn upper(&self) -> Degree {
        self.degrees[0]
    }

    pub fn lower(&self) -> Degree {
        *self.degrees.last().expect("non-empty")
    }

    /// `(lower, upper)`.
    pub fn bounds(&self) -> (Degree, Degree) {
        (self.lower(), self.upper())
    }

    pub fn multiplicity(&self, d: Degree) -> usize {
        self.degrees.iter().filter(|&&x| x == d).count()
    }

    pub fn contains(&self, d: Degree) -> bool {
        self.degrees.contains(&d)
    }

    pub fn is_constant(&self) -> bool {
        self.upper() == self.lower()
    }

    /// Exact arithmetic mean, counting multiplicity.
    pub fn mean(&self) -> BigRational {
        let sum = self.degrees.iter().fold(BigRational::zero(), |acc, d| {
            acc + BigRational::new(BigInt::from(d.numer()), BigInt::from(d.denom()))
        });
        sum / BigRational::from_integer(BigInt::from(self.len()))
    }

    /// Compares means exactly without materialising big rationals unless
    /// the 128-bit path overflows.
    pub fn mean_cmp(&self, other: &Hfe) -> Ordering {
        match (self.small_sum(), other.small_sum()) {
            (Some(a), Some(b)) => {
                let lhs = a.checked_mul(&Ratio::from_integer(other.len() as i128));
                let rhs = b.checked_mul(&Ratio::from_integer(self.len() as i128));
                if let (Some(lhs), Some(rhs)) = (lhs, rhs) {
                    return lhs.cmp(&rhs);
                }
                self.mean().cmp(&other.mean())
            }
            _ => self.mean().cmp(&other.mean()),
        }
    }

    fn small_sum(&self) -> Option<Ratio<i128>> {
        self.degrees.iter().try_fold(Ratio::<i128>::zero(), |acc, d| {
            acc.checked_add(&Ratio::new(d.numer() as i128, d.denom() as i128))
        })
    }

    /// Concatenation of both operands restricted to degrees at or above the
    /// larger of the two lower bounds.
    pub fn union(&self, other: &Hfe) -> Hfe {
        let cut = self.lower().max(other.lower());
        let kept = merged(&self.degrees, &other.degrees, |d| d >= cut);
        debug_assert!(!kept.is_empty());
        Hfe { degrees: kept }
    }

    /// Concatenation of both operands restricted to degrees at or below the
    /// smaller of the two upper bounds.
    pub fn intersection(&self, other: &Hfe) -> Hfe {
        let cut = self.upper().min(other.upper());
        let kept = merged(&self.degrees, &other.degrees, |d| d <= cut);
        debug_assert!(!kept.is_empty());
        Hfe { degrees: kept }
    }

    /// `{1 - γ}` with multiplicity.
    pub fn complement(&self) -> Hfe {
        Hfe {
            degrees: self.degrees.iter().rev().map(|d| d.complement()).collect(),
        }
    }

    /// The `q` largest degrees.
    pub fn best_subsequence(&self, q: usize) -> Result<Hfe> {
        if q == 0 || q > self.len() {
            return Err(Error::SubsequenceLength { q, len: self.len() });
        }
        Ok(Hfe {
            degrees: self.degrees[..q].to_vec(),
        })
    }

    /// Multiset containment: every degree of `self` occurs in `whole` at
    /// least as often.
    pub fn is_subsequence_of(&self, whole: &Hfe) -> bool {
        let mut rest = whole.degrees.iter().peekable();
        'outer: for d in &self.degrees {
            for w in rest.by_ref() {
                match w.cmp(d) {
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => continue,
                    Ordering::Less => return false,
                }
            }
            return false;
        }
        true
    }
}

/// Merges two descending slices, keeping entries that pass `keep`.
fn merged(a: &[Degree], b: &[Degree], keep: impl Fn(Degree) -> bool) -> Vec<Degree> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i] >= b[j]);
        let d = if take_a {
            i += 1;
            a[i - 1]
        } else {
            j += 1;
            b[j - 1]
        };
        if keep(d) {
            out.push(d);
        }
    }
    out
}

impl fmt::Display for Hfe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Hfe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialised as a list of degree strings, highest first.
impl Serialize for Hfe {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.degrees().iter().map(|d| d.to_string()))
    }
}

impl<'de> Deserialize<'de> for Hfe {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = <Vec<String> as Deserialize>::deserialize(d)?;
        Hfe::parse(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[&str]) -> Hfe {
        Hfe::parse(v).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_order_keeps_duplicates() {
        assert_eq!(h(&["0.3", "0.6", "0.5"]), h(&["0.6", "0.5", "0.3"]));
        assert_eq!(h(&["0.6", "0.6", "0.5"]).to_string(), "{0.6, 0.6, 0.5}");
        assert_eq!(h(&["0.7"]).len(), 1);
        assert_ne!(h(&["0.3", "0.3", "0.6", "0.5"]), h(&["0.6", "0.5", "0.3"]));
        assert_eq!(Hfe::new(vec![]), Err(Error::EmptyElement));
    }

    #[test]
    fn bounds_and_means() {
        assert_eq!(h(&["0.9", "0.2"]).bounds(), (Degree::new(1, 5).unwrap(), Degree::new(9, 10).unwrap()));
        assert_eq!(h(&["0.5"]).bounds().0, h(&["0.5"]).bounds().1);
        assert_eq!(h(&["0.8", "0.6", "0.5"]).lower().to_string(), "0.5");
        assert_eq!(h(&["0.9", "0.2"]).mean(), r(11, 20));
        assert_eq!(h(&["0.6", "0.6", "0.5"]).mean(), r(17, 30));
        assert_eq!(h(&["0.5"]).mean(), r(1, 2));
        assert_eq!(
            h(&["0.9", "0.2"]).mean_cmp(&h(&["0.6", "0.6", "0.5"])),
            Ordering::Less
        );
        assert_eq!(h(&["0.5", "0.5"]).mean_cmp(&h(&["0.9", "0.1"])), Ordering::Equal);
    }

    #[test]
    fn union_and_intersection_filter_the_concatenation() {
        assert_eq!(
            h(&["0.1", "0.8"]).union(&h(&["0.1", "0.9"])),
            h(&["0.9", "0.8", "0.1", "0.1"])
        );
        assert_eq!(
            h(&["0.1", "0.2", "0.3"]).union(&h(&["0.3", "0.4", "0.5"])),
            h(&["0.5", "0.4", "0.3", "0.3"])
        );
        assert_eq!(h(&["0.5"]).union(&h(&["0.5"])), h(&["0.5", "0.5"]));
        assert_eq!(
            h(&["0.1", "0.8"]).intersection(&h(&["0.7", "0.9"])),
            h(&["0.8", "0.7", "0.1"])
        );
        assert_eq!(
            h(&["0.1", "0.2", "0.3"]).intersection(&h(&["0.3", "0.4", "0.5"])),
            h(&["0.3", "0.3", "0.2", "0.1"])
        );
        assert_eq!(
            h(&["0.8", "0.9"]).intersection(&h(&["0.6", "0.8", "0.9"])),
            h(&["0.9", "0.9", "0.8", "0.8", "0.6"])
        );
    }

    #[test]
    fn complement_maps_each_degree() {
        assert_eq!(h(&["0.4", "0.4"]).complement(), h(&["0.6", "0.6"]));
        assert_eq!(
            h(&["0.1", "0.1", "0.41"]).complement(),
            h(&["0.9", "0.9", "0.59"])
        );
        assert_eq!(h(&["0"]).complement(), h(&["1"]));
    }

    #[test]
    fn best_subsequences() {
        let w = h(&["0.9", "0.8", "0.7", "0.65", "0.6", "0.5"]);
        assert_eq!(w.best_subsequence(2).unwrap(), h(&["0.9", "0.8"]));
        assert_eq!(w.best_subsequence(3).unwrap(), h(&["0.9", "0.8", "0.7"]));
        assert_eq!(h(&["0.4"]).best_subsequence(1).unwrap(), h(&["0.4"]));
        assert_eq!(
            w.best_subsequence(7),
            Err(Error::SubsequenceLength { q: 7, len: 6 })
        );
        assert!(w.best_subsequence(0).is_err());
    }

    #[test]
    fn subsequence_is_multiset_containment() {
        let whole = h(&["0.9", "0.8", "0.8", "0.1"]);
        assert!(h(&["0.8", "0.8"]).is_subsequence_of(&whole));
        assert!(!h(&["0.8", "0.8"]).is_subsequence_of(&h(&["0.9", "0.8", "0.1"])));
        assert!(whole.is_subsequence_of(&whole));
        assert!(!h(&["0.95"]).is_subsequence_of(&whole));
        assert!(!h(&["0.05"]).is_subsequence_of(&whole));
    }
}
