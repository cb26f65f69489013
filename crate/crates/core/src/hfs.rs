//! Hesitant fuzzy sets over a fixed universe, and finite families of them.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::hfe::Hfe;

/// Ordered, duplicate-free element identifiers. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Universe(Arc<[String]>);

impl Universe {
    pub fn new<I, S>(ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let ids: Vec<String> = ids.into_iter().map(Into::into).collect();
        if ids.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut seen = HashSet::new();
        for id in &ids {
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateElement(id.clone()));
            }
        }
        Ok(Universe(ids.into()))
    }

    /// `x1, …, xn`.
    pub fn numbered(n: usize) -> Self {
        Universe::new((1..=n).map(|i| format!("x{i}"))).expect("n > 0 distinct ids")
    }

    pub fn ids(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.0.iter().position(|e| e == id)
    }

    fn same(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Binary set operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetOp {
    Union,
    Intersection,
}

impl SetOp {
    pub fn apply(self, a: &Hfe, b: &Hfe) -> Hfe {
        match self {
            SetOp::Union => a.union(b),
            SetOp::Intersection => a.intersection(b),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SetOp::Union => "∪",
            SetOp::Intersection => "∩",
        }
    }
}

/// A total assignment of hesitant fuzzy elements to a universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hfs {
    universe: Universe,
    memberships: Vec<Hfe>,
}

impl Hfs {
    /// Memberships given in universe order.
    pub fn from_hfes(universe: Universe, memberships: Vec<Hfe>) -> Result<Self> {
        if memberships.len() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        Ok(Hfs {
            universe,
            memberships,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn memberships(&self) -> &[Hfe] {
        &self.memberships
    }

    pub fn at(&self, index: usize) -> &Hfe {
        &self.memberships[index]
    }

    pub fn get(&self, id: &str) -> Option<&Hfe> {
        self.universe.position(id).map(|i| &self.memberships[i])
    }

    pub fn check_universe(&self, other: &Hfs) -> Result<()> {
        if self.universe.same(&other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Pointwise union or intersection.
    pub fn combine(&self, op: SetOp, other: &Hfs) -> Result<Hfs> {
        self.check_universe(other)?;
        Ok(Hfs {
            universe: self.universe.clone(),
            memberships: self
                .memberships
                .iter()
                .zip(&other.memberships)
                .map(|(a, b)| op.apply(a, b))
                .collect(),
        })
    }

    pub fn union(&self, other: &Hfs) -> Result<Hfs> {
        self.combine(SetOp::Union, other)
    }

    pub fn intersection(&self, other: &Hfs) -> Result<Hfs> {
        self.combine(SetOp::Intersection, other)
    }

    pub fn complement(&self) -> Hfs {
        Hfs {
            universe: self.universe.clone(),
            memberships: self.memberships.iter().map(Hfe::complement).collect(),
        }
    }

    /// Restriction to a single element, as a one-element set.
    pub fn project(&self, id: &str) -> Option<Hfs> {
        let i = self.universe.position(id)?;
        Some(Hfs {
            universe: Universe::new([id]).expect("single id"),
            memberships: vec![self.memberships[i].clone()],
        })
    }

    /// Same memberships re-labelled onto an equal universe instance.
    pub(crate) fn with_universe(mut self, universe: &Universe) -> Hfs {
        debug_assert!(self.universe.same(universe));
        self.universe = universe.clone();
        self
    }
}

/// Builds a set from an element → degrees mapping that must cover the
/// universe exactly.
pub fn make_hfs(
    universe: &Universe,
    assignments: &IndexMap<String, Vec<Degree>>,
) -> Result<Hfs> {
    make_named_hfs("", universe, assignments)
}

pub(crate) fn make_named_hfs(
    name: &str,
    universe: &Universe,
    assignments: &IndexMap<String, Vec<Degree>>,
) -> Result<Hfs> {
    if let Some(unknown) = assignments.keys().find(|k| universe.position(k).is_none()) {
        return Err(Error::UnknownElement {
            set: name.to_string(),
            element: unknown.clone(),
        });
    }
    let memberships = universe
        .ids()
        .iter()
        .map(|id| {
            let degrees = assignments.get(id).ok_or_else(|| Error::MissingElement {
                set: name.to_string(),
                element: id.clone(),
            })?;
            Hfe::new(degrees.clone()).map_err(|_| Error::EmptyMembership {
                set: name.to_string(),
                element: id.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Hfs::from_hfes(universe.clone(), memberships)
}

impl fmt::Display for Hfs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (id, h)) in self.universe.ids().iter().zip(&self.memberships).enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{h}/{id}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Hfs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A non-empty ordered collection of named sets over one universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    universe: Universe,
    members: Vec<(String, Hfs)>,
}

impl Family {
    pub fn new(members: Vec<(String, Hfs)>) -> Result<Self> {
        let universe = members
            .first()
            .ok_or(Error::EmptyFamily)?
            .1
            .universe()
            .clone();
        let mut names = HashSet::new();
        for (name, set) in &members {
            if !names.insert(name.as_str()) {
                return Err(Error::DuplicateMember(name.clone()));
            }
            if !set.universe.same(&universe) {
                return Err(Error::UniverseMismatch);
            }
        }
        let members = members
            .into_iter()
            .map(|(n, s)| (n, s.with_universe(&universe)))
            .collect();
        Ok(Family { universe, members })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &[(String, Hfs)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn sets(&self) -> impl Iterator<Item = &Hfs> {
        self.members.iter().map(|(_, s)| s)
    }

    /// No two members carry equal memberships everywhere.
    pub fn has_distinct_members(&self) -> bool {
        let mut seen = HashSet::new();
        self.sets().all(|s| seen.insert(s))
    }
}

/// Left fold of [`Hfs::combine`] over the members, in order.
pub fn family_fold(op: SetOp, fam: &Family) -> Hfs {
    let mut sets = fam.sets();
    let first = sets.next().expect("families are non-empty").clone();
    sets.fold(first, |acc, s| {
        acc.combine(op, s).expect("members share the family universe")
    })
}

/// Every member of `f1` equals (as a multiset-valued set) some member of `f2`.
pub fn is_subfamily(f1: &Family, f2: &Family) -> Result<bool> {
    if !f1.universe.same(&f2.universe) {
        return Err(Error::UniverseMismatch);
    }
    Ok(f1.sets().all(|a| f2.sets().any(|b| a == b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(v: &[&str]) -> Vec<Degree> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn set(u: &Universe, rows: &[(&str, &[&str])]) -> Hfs {
        let map: IndexMap<String, Vec<Degree>> = rows
            .iter()
            .map(|(k, v)| (k.to_string(), degrees(v)))
            .collect();
        make_hfs(u, &map).unwrap()
    }

    fn h(v: &[&str]) -> Hfe {
        Hfe::parse(v).unwrap()
    }

    #[test]
    fn universe_validation() {
        assert_eq!(Universe::new(Vec::<String>::new()), Err(Error::EmptyUniverse));
        assert_eq!(
            Universe::new(["x", "x"]),
            Err(Error::DuplicateElement("x".into()))
        );
        assert_eq!(Universe::numbered(2).ids(), ["x1", "x2"]);
    }

    #[test]
    fn make_hfs_checks_totality() {
        let u = Universe::new(["x", "y"]).unwrap();
        let a = set(&u, &[("x", &["0.6", "0.5", "0.3"]), ("y", &["0.5", "0.3", "0.2"])]);
        assert_eq!(a.get("x"), Some(&h(&["0.6", "0.5", "0.3"])));
        assert_eq!(a.to_string(), "{0.6, 0.5, 0.3}/x + {0.5, 0.3, 0.2}/y");

        let single = Universe::new(["x"]).unwrap();
        assert_eq!(set(&single, &[("x", &["0.7"])]).at(0), &h(&["0.7"]));

        let mut partial = IndexMap::new();
        partial.insert("x".to_string(), degrees(&["0.6"]));
        assert_eq!(
            make_hfs(&u, &partial),
            Err(Error::MissingElement { set: String::new(), element: "y".into() })
        );
        partial.insert("y".to_string(), degrees(&["0.6"]));
        partial.insert("z".to_string(), degrees(&["0.6"]));
        assert!(matches!(make_hfs(&u, &partial), Err(Error::UnknownElement { .. })));
        partial.shift_remove("z");
        partial.insert("y".to_string(), vec![]);
        assert!(matches!(make_hfs(&u, &partial), Err(Error::EmptyMembership { .. })));
    }

    #[test]
    fn pointwise_operations() {
        let u = Universe::new(["x"]).unwrap();
        let a = set(&u, &[("x", &["0.1", "0.2", "0.3"])]);
        let b = set(&u, &[("x", &["0.3", "0.4", "0.5"])]);
        let ab = a.union(&b).unwrap();
        assert_eq!(ab.at(0), &h(&["0.5", "0.4", "0.3", "0.3"]));
        assert_eq!(
            ab.intersection(&a).unwrap().at(0),
            &h(&["0.3", "0.3", "0.3", "0.2", "0.1"])
        );
        assert_eq!(
            a.union(&a).unwrap().at(0),
            &h(&["0.3", "0.3", "0.2", "0.2", "0.1", "0.1"])
        );
        let other = set(&Universe::new(["y"]).unwrap(), &[("y", &["0.1"])]);
        assert_eq!(a.union(&other), Err(Error::UniverseMismatch));
    }

    #[test]
    fn complements() {
        let u = Universe::new(["x", "y"]).unwrap();
        let a = set(&u, &[("x", &["0.4", "0.4"]), ("y", &["0.2", "0.25"])]);
        let ac = a.complement();
        assert_eq!(ac.at(0), &h(&["0.6", "0.6"]));
        assert_eq!(ac.at(1), &h(&["0.8", "0.75"]));
        assert_eq!(ac.complement(), a);
        let one = set(&Universe::new(["x"]).unwrap(), &[("x", &["1"])]);
        assert_eq!(one.complement().at(0), &h(&["0"]));
    }

    #[test]
    fn folds_and_subfamilies() {
        let u = Universe::new(["x"]).unwrap();
        let a = set(&u, &[("x", &["0.1", "0.2", "0.3"])]);
        let b = set(&u, &[("x", &["0.3", "0.4", "0.5"])]);
        let c = set(&u, &[("x", &["0.3", "0.45", "0.5"])]);
        let fam = |m: &[(&str, &Hfs)]| {
            Family::new(m.iter().map(|(n, s)| (n.to_string(), (*s).clone())).collect()).unwrap()
        };
        assert_eq!(family_fold(SetOp::Union, &fam(&[("A", &a)])), a);
        assert_eq!(
            family_fold(SetOp::Intersection, &fam(&[("A", &a), ("B", &b)])),
            a.intersection(&b).unwrap()
        );
        let abc = fam(&[("A", &a), ("B", &b), ("C", &c)]);
        let left = a.intersection(&b).unwrap().intersection(&c).unwrap();
        let right = a.intersection(&b.intersection(&c).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(family_fold(SetOp::Intersection, &abc), left);

        let permuted = set(&u, &[("x", &["0.3", "0.1", "0.2"])]);
        let extra = set(&u, &[("x", &["0.3", "0.1", "0.2", "0.2"])]);
        let ab = fam(&[("A", &a), ("B", &b)]);
        assert_eq!(is_subfamily(&fam(&[("A", &a)]), &ab), Ok(true));
        assert_eq!(is_subfamily(&fam(&[("A2", &permuted)]), &ab), Ok(true));
        assert_eq!(is_subfamily(&fam(&[("C", &extra)]), &ab), Ok(false));

        assert_eq!(Family::new(vec![]), Err(Error::EmptyFamily));
        assert_eq!(
            Family::new(vec![("A".into(), a.clone()), ("A".into(), b.clone())]),
            Err(Error::DuplicateMember("A".into()))
        );
        assert!(!fam(&[("A", &a), ("A2", &permuted)]).has_distinct_members());
    }
}
