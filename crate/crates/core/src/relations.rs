//! The six inclusion relations, their equality variants and the sequence
//! machinery behind the strong/tail-truncated comparisons.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::hfe::Hfe;
use crate::hfs::Hfs;

/// Which inclusion is meant.
///
/// * `P` possible: upper bounds ordered.
/// * `A` acceptable: upper and lower bounds ordered.
/// * `M` mean: means ordered.
/// * `S` strong: the subset side has at least as many degrees and is
///   dominated position by position over the superset's length.
/// * `T` tail-truncated: the subset side is strictly shorter and is
///   dominated over its own length.
/// * `N` necessary: the subset's maximum is at most the superset's minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelationKind {
    P,
    A,
    M,
    S,
    T,
    N,
}

impl RelationKind {
    pub const ALL: [RelationKind; 6] = [
        RelationKind::P,
        RelationKind::A,
        RelationKind::M,
        RelationKind::S,
        RelationKind::T,
        RelationKind::N,
    ];

    /// Kinds that admit an equality variant (all but `T`).
    pub const WITH_EQUALITY: [RelationKind; 5] = [
        RelationKind::P,
        RelationKind::A,
        RelationKind::M,
        RelationKind::S,
        RelationKind::N,
    ];

    pub fn letter(self) -> char {
        match self {
            RelationKind::P => 'p',
            RelationKind::A => 'a',
            RelationKind::M => 'm',
            RelationKind::S => 's',
            RelationKind::T => 't',
            RelationKind::N => 'n',
        }
    }

    fn subscript(self) -> char {
        match self {
            RelationKind::P => 'ₚ',
            RelationKind::A => 'ₐ',
            RelationKind::M => 'ₘ',
            RelationKind::S => 'ₛ',
            RelationKind::T => 'ₜ',
            RelationKind::N => 'ₙ',
        }
    }

    /// `⊂ₚ` and friends.
    pub fn subset_symbol(self) -> String {
        format!("⊂{}", self.subscript())
    }

    pub fn equality_symbol(self) -> String {
        format!("={}", self.subscript())
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for RelationKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "p" => Ok(RelationKind::P),
            "a" => Ok(RelationKind::A),
            "m" => Ok(RelationKind::M),
            "s" => Ok(RelationKind::S),
            "t" => Ok(RelationKind::T),
            "n" => Ok(RelationKind::N),
            other => Err(format!("unknown relation kind {other:?} (expected p, a, m, s, t or n)")),
        }
    }
}

/// `v ≼ w`: equal-length descending sequences, `w` at least `v` everywhere.
pub fn dominates(v: &[Degree], w: &[Degree]) -> Result<bool> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: w.len(),
        });
    }
    Ok(prefix_dominated(v, w, v.len()))
}

fn prefix_dominated(v: &[Degree], w: &[Degree], len: usize) -> bool {
    v[..len].iter().zip(&w[..len]).all(|(a, b)| b >= a)
}

/// The `q` largest degrees of `w`.
pub fn best_q_subsequence(w: &Hfe, q: usize) -> Result<Hfe> {
    w.best_subsequence(q)
}

/// Multiset containment of `sub` in `whole`.
pub fn is_subsequence(sub: &Hfe, whole: &Hfe) -> bool {
    sub.is_subsequence_of(whole)
}

/// Element-level inclusion `a ⊂ₖ b`.
pub fn element_relation(kind: RelationKind, a: &Hfe, b: &Hfe) -> bool {
    match kind {
        RelationKind::P => a.upper() <= b.upper(),
        RelationKind::A => a.upper() <= b.upper() && a.lower() <= b.lower(),
        RelationKind::M => a.mean_cmp(b) != Ordering::Greater,
        RelationKind::S => {
            a.len() >= b.len() && prefix_dominated(a.degrees(), b.degrees(), b.len())
        }
        RelationKind::T => {
            a.len() < b.len() && prefix_dominated(a.degrees(), b.degrees(), a.len())
        }
        RelationKind::N => a.upper() <= b.lower(),
    }
}

/// Outcome of the combined strong-or-tail comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SotVerdict {
    S,
    T,
    None,
}

impl SotVerdict {
    pub fn holds(self) -> bool {
        self != SotVerdict::None
    }
}

impl fmt::Display for SotVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SotVerdict::S => "s",
            SotVerdict::T => "t",
            SotVerdict::None => "none",
        })
    }
}

/// Whether `a ⊂ₛ b`, `a ⊂ₜ b`, or neither. The two cannot both hold since
/// their cardinality conditions are complementary.
pub fn classify_sot(a: &Hfe, b: &Hfe) -> SotVerdict {
    if element_relation(RelationKind::S, a, b) {
        SotVerdict::S
    } else if element_relation(RelationKind::T, a, b) {
        SotVerdict::T
    } else {
        SotVerdict::None
    }
}

/// All six verdicts for one ordered pair of elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationProfile {
    pub p: bool,
    pub a: bool,
    pub m: bool,
    pub s: bool,
    pub t: bool,
    pub n: bool,
    pub sot: SotVerdict,
}

impl RelationProfile {
    pub fn get(&self, kind: RelationKind) -> bool {
        match kind {
            RelationKind::P => self.p,
            RelationKind::A => self.a,
            RelationKind::M => self.m,
            RelationKind::S => self.s,
            RelationKind::T => self.t,
            RelationKind::N => self.n,
        }
    }

    /// The implication lattice every profile must respect.
    pub fn is_consistent(&self) -> bool {
        let implies = |x: bool, y: bool| !x || y;
        implies(self.n, self.p)
            && implies(self.n, self.a)
            && implies(self.n, self.m)
            && implies(self.n, self.s || self.t)
            && implies(self.s, self.p)
            && implies(self.s, self.a)
            && implies(self.s, self.m)
            && implies(self.t, self.p)
            && implies(self.a, self.p)
            && !(self.s && self.t)
            && self.sot.holds() == (self.s || self.t)
    }
}

pub fn relation_profile(a: &Hfe, b: &Hfe) -> RelationProfile {
    let profile = RelationProfile {
        p: element_relation(RelationKind::P, a, b),
        a: element_relation(RelationKind::A, a, b),
        m: element_relation(RelationKind::M, a, b),
        s: element_relation(RelationKind::S, a, b),
        t: element_relation(RelationKind::T, a, b),
        n: element_relation(RelationKind::N, a, b),
        sot: classify_sot(a, b),
    };
    assert!(profile.is_consistent(), "inconsistent profile for {a} vs {b}");
    profile
}

/// `a ⊂ₖ b` at every element of the shared universe.
pub fn set_relation(kind: RelationKind, a: &Hfs, b: &Hfs) -> Result<bool> {
    a.check_universe(b)?;
    Ok(a.memberships()
        .iter()
        .zip(b.memberships())
        .all(|(x, y)| element_relation(kind, x, y)))
}

/// `a ⊂ₛₒₜ b` at every element.
pub fn set_sot(a: &Hfs, b: &Hfs) -> Result<bool> {
    a.check_universe(b)?;
    Ok(a.memberships()
        .iter()
        .zip(b.memberships())
        .all(|(x, y)| classify_sot(x, y).holds()))
}

/// `a =ₖ b`, i.e. inclusion both ways. Undefined for `T`.
pub fn set_equality(kind: RelationKind, a: &Hfs, b: &Hfs) -> Result<bool> {
    if kind == RelationKind::T {
        return Err(Error::NoEqualityForTail);
    }
    Ok(set_relation(kind, a, b)? && set_relation(kind, b, a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfs::Universe;
    use RelationKind::*;

    fn h(v: &[&str]) -> Hfe {
        Hfe::parse(v).unwrap()
    }

    fn ds(v: &[&str]) -> Vec<Degree> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn dominance() {
        assert_eq!(dominates(&ds(&["0.5", "0.3"]), &ds(&["0.6", "0.3"])), Ok(true));
        assert_eq!(dominates(&ds(&["0.5", "0.3"]), &ds(&["0.6", "0.2"])), Ok(false));
        assert_eq!(dominates(&ds(&["0.7", "0.7"]), &ds(&["0.7", "0.7"])), Ok(true));
        assert_eq!(
            dominates(&ds(&["0.7"]), &ds(&["0.7", "0.1"])),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn scheme_examples() {
        let x1 = h(&["0.9", "0.2"]);
        let x2 = h(&["0.6", "0.6", "0.5"]);
        let x3 = h(&["0.7", "0.5", "0.5"]);
        let x4 = h(&["0.8", "0.6", "0.5"]);
        let x5 = h(&["0.9", "0.3", "0.1"]);
        let x6 = h(&["0.9", "0.8", "0.7"]);
        assert!(element_relation(P, &x2, &x1));
        assert!(element_relation(M, &x1, &x2));
        assert!(element_relation(A, &x2, &x3));
        assert!(element_relation(S, &x3, &x4));
        assert!(element_relation(T, &x1, &x5));
        assert!(element_relation(N, &x3, &x6));
        assert!(!element_relation(M, &x2, &x1));
        assert!(!element_relation(
            T,
            &h(&["0.7", "0.5", "0.3"]),
            &h(&["0.9", "0.8"])
        ));
    }

    #[test]
    fn sot_classification() {
        assert_eq!(classify_sot(&h(&["0.7", "0.5", "0.5"]), &h(&["0.8", "0.6", "0.5"])), SotVerdict::S);
        assert_eq!(classify_sot(&h(&["0.9", "0.2"]), &h(&["0.9", "0.3", "0.1"])), SotVerdict::T);
        assert_eq!(classify_sot(&h(&["0.9", "0.9"]), &h(&["0.1", "0.1"])), SotVerdict::None);
    }

    #[test]
    fn profiles() {
        let p = relation_profile(&h(&["0.7", "0.5", "0.5"]), &h(&["0.9", "0.8", "0.7"]));
        assert!(p.n && p.s && p.a && p.p && p.m && !p.t);
        assert_eq!(p.sot, SotVerdict::S);

        let p = relation_profile(&h(&["0.9", "0.2"]), &h(&["0.9", "0.3", "0.1"]));
        assert!(p.t && p.p && !p.s);
        assert_eq!(p.sot, SotVerdict::T);

        for (v, constant) in [(h(&["0.4", "0.4"]), true), (h(&["0.4", "0.3"]), false)] {
            let p = relation_profile(&v, &v);
            assert!(p.p && p.a && p.m && p.s && !p.t);
            assert_eq!(p.n, constant);
        }
    }

    #[test]
    fn set_level_relations() {
        let u = Universe::new(["x"]).unwrap();
        let a = Hfs::from_hfes(u.clone(), vec![h(&["0.1", "0.3", "0.5"])]).unwrap();
        let b = Hfs::from_hfes(u.clone(), vec![h(&["0.2", "0.4", "0.6"])]).unwrap();
        assert_eq!(set_relation(P, &a, &b), Ok(true));
        assert_eq!(set_relation(N, &a, &b), Ok(false));
        assert_eq!(set_relation(S, &a, &a), Ok(true));
        assert_eq!(set_equality(P, &a, &a), Ok(true));
        assert_eq!(set_equality(T, &a, &a), Err(Error::NoEqualityForTail));

        let other = Hfs::from_hfes(Universe::new(["y"]).unwrap(), vec![h(&["0.2"])]).unwrap();
        assert_eq!(set_relation(P, &a, &other), Err(Error::UniverseMismatch));
    }

    #[test]
    fn strong_equality_is_multiset_equality() {
        let u = Universe::new(["x", "y"]).unwrap();
        let a = Hfs::from_hfes(u.clone(), vec![h(&["0.6", "0.5", "0.3"]), h(&["0.5", "0.3", "0.2"])]).unwrap();
        let b = Hfs::from_hfes(u.clone(), vec![h(&["0.3", "0.6", "0.5"]), h(&["0.2", "0.5", "0.3"])]).unwrap();
        let c = Hfs::from_hfes(u, vec![h(&["0.3", "0.3", "0.6", "0.5"]), h(&["0.2", "0.5", "0.3"])]).unwrap();
        assert_eq!(set_equality(S, &a, &b), Ok(true));
        assert_eq!(set_equality(S, &a, &c), Ok(false));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
