//! A small logic over set expressions used to encode laws.
//!
//! Terms denote hesitant fuzzy sets built from variables with union,
//! intersection, complement and family folds. Formulas combine element-level
//! atoms (which need an element in scope, supplied by [`Formula::Everywhere`])
//! with connectives and quantifiers over family members.

use std::borrow::Cow;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::hfe::Hfe;
use crate::hfs::{Family, Hfs, Universe};
use crate::relations::{classify_sot, element_relation, RelationKind};

/// Concrete values for the variables of a law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    universe: Universe,
    sets: Vec<(String, Hfs)>,
    families: Vec<(String, Family)>,
}

impl Binding {
    pub fn new(universe: Universe) -> Self {
        Binding {
            universe,
            sets: Vec::new(),
            families: Vec::new(),
        }
    }

    /// Adds a named set; panics if its universe differs from the binding's.
    pub fn with_set(mut self, name: impl Into<String>, set: Hfs) -> Self {
        self.insert_set(name, set);
        self
    }

    pub fn with_family(mut self, name: impl Into<String>, family: Family) -> Self {
        self.insert_family(name, family);
        self
    }

    pub fn insert_set(&mut self, name: impl Into<String>, set: Hfs) {
        assert_eq!(set.universe(), &self.universe, "set universe differs from binding");
        self.sets.push((name.into(), set));
    }

    pub fn insert_family(&mut self, name: impl Into<String>, family: Family) {
        assert_eq!(family.universe(), &self.universe, "family universe differs from binding");
        self.families.push((name.into(), family));
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn sets(&self) -> &[(String, Hfs)] {
        &self.sets
    }

    pub fn families(&self) -> &[(String, Family)] {
        &self.families
    }

    pub fn set(&self, name: &str) -> Option<&Hfs> {
        self.sets.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn family(&self, name: &str) -> Option<&Family> {
        self.families.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    /// Restriction of every set and family to one element.
    pub fn project(&self, id: &str) -> Option<Binding> {
        let universe = Universe::new([id]).expect("single id");
        self.universe.position(id)?;
        let project = |s: &Hfs| {
            Hfs::from_hfes(universe.clone(), vec![s.get(id).expect("known id").clone()])
                .expect("one membership")
        };
        let sets = self.sets.iter().map(|(n, s)| (n.clone(), project(s))).collect();
        let families = self
            .families
            .iter()
            .map(|(n, f)| {
                let members = f.members().iter().map(|(m, s)| (m.clone(), project(s))).collect();
                (n.clone(), Family::new(members).expect("projection keeps family valid"))
            })
            .collect();
        Some(Binding {
            universe,
            sets,
            families,
        })
    }
}

/// A set-valued expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Union(Box<Term>, Box<Term>),
    Inter(Box<Term>, Box<Term>),
    Complement(Box<Term>),
    /// Union of all members of a family.
    FoldUnion(String),
    /// Intersection of all members of a family.
    FoldInter(String),
}

pub fn var(name: &str) -> Term {
    Term::Var(name.to_string())
}

pub fn big_union(family: &str) -> Term {
    Term::FoldUnion(family.to_string())
}

pub fn big_inter(family: &str) -> Term {
    Term::FoldInter(family.to_string())
}

impl Term {
    pub fn cup(self, other: Term) -> Term {
        Term::Union(Box::new(self), Box::new(other))
    }

    pub fn cap(self, other: Term) -> Term {
        Term::Inter(Box::new(self), Box::new(other))
    }

    pub fn c(self) -> Term {
        Term::Complement(Box::new(self))
    }

    fn is_binary(&self) -> bool {
        matches!(self, Term::Union(..) | Term::Inter(..))
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_binary() {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }

    /// Rendering applied to an element, e.g. `(A ∩ B)(x)`.
    pub fn at_element(&self, element: &str) -> String {
        match self {
            Term::Var(_) | Term::FoldUnion(_) | Term::FoldInter(_) => format!("{self}({element})"),
            _ => format!("({self})({element})"),
        }
    }

    fn eval_at<'a>(&self, scope: &Scope<'a, '_>, x: usize) -> Cow<'a, Hfe> {
        match self {
            Term::Var(name) => Cow::Borrowed(scope.lookup(name).at(x)),
            Term::Union(l, r) => Cow::Owned(l.eval_at(scope, x).union(&r.eval_at(scope, x))),
            Term::Inter(l, r) => {
                Cow::Owned(l.eval_at(scope, x).intersection(&r.eval_at(scope, x)))
            }
            Term::Complement(t) => Cow::Owned(t.eval_at(scope, x).complement()),
            Term::FoldUnion(fam) => fold_at(scope.family(fam), x, Hfe::union),
            Term::FoldInter(fam) => fold_at(scope.family(fam), x, Hfe::intersection),
        }
    }

    /// Evaluates the term into a full set.
    pub fn eval(&self, binding: &Binding) -> Hfs {
        let scope = Scope::new(binding);
        let memberships = (0..binding.universe.len())
            .map(|x| self.eval_at(&scope, x).into_owned())
            .collect();
        Hfs::from_hfes(binding.universe.clone(), memberships).expect("one membership per element")
    }

    /// Set variables referenced, in order of first appearance.
    pub fn set_names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        dedup(out)
    }

    /// Families folded over, in order of first appearance.
    pub fn family_names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_families(&mut out);
        dedup(out)
    }

    fn collect_vars<'t>(&'t self, out: &mut Vec<&'t str>) {
        match self {
            Term::Var(n) => out.push(n),
            Term::Union(l, r) | Term::Inter(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Term::Complement(t) => t.collect_vars(out),
            Term::FoldUnion(_) | Term::FoldInter(_) => {}
        }
    }

    fn collect_families<'t>(&'t self, out: &mut Vec<&'t str>) {
        match self {
            Term::Var(_) => {}
            Term::Union(l, r) | Term::Inter(l, r) => {
                l.collect_families(out);
                r.collect_families(out);
            }
            Term::Complement(t) => t.collect_families(out),
            Term::FoldUnion(f) | Term::FoldInter(f) => out.push(f),
        }
    }
}

fn dedup(names: Vec<&str>) -> Vec<&str> {
    let mut out: Vec<&str> = Vec::with_capacity(names.len());
    for n in names {
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out
}

fn fold_at<'a>(family: &'a Family, x: usize, op: fn(&Hfe, &Hfe) -> Hfe) -> Cow<'a, Hfe> {
    let mut sets = family.sets();
    let first = sets.next().expect("non-empty family").at(x);
    let mut acc: Cow<'a, Hfe> = Cow::Borrowed(first);
    for s in sets {
        acc = Cow::Owned(op(&acc, s.at(x)));
    }
    acc
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(n) => f.write_str(n),
            Term::Union(l, r) => {
                l.fmt_operand(f)?;
                f.write_str(" ∪ ")?;
                r.fmt_operand(f)
            }
            Term::Inter(l, r) => {
                l.fmt_operand(f)?;
                f.write_str(" ∩ ")?;
                r.fmt_operand(f)
            }
            Term::Complement(t) => {
                t.fmt_operand(f)?;
                f.write_str("ᶜ")
            }
            Term::FoldUnion(fam) => write!(f, "⋃{fam}"),
            Term::FoldInter(fam) => write!(f, "⋂{fam}"),
        }
    }
}

/// A statement about a binding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    True,
    /// `t(x) ⊂ₖ u(x)`.
    Rel(RelationKind, Term, Term),
    /// `t(x) ⊂ₛ u(x)` or `t(x) ⊂ₜ u(x)`.
    Sot(Term, Term),
    /// `t(x)` and `u(x)` are equal multisets.
    Same(Term, Term),
    /// `|t(x)| < |u(x)|`.
    Shorter(Term, Term),
    /// Every degree of `t(x)` equals every degree of `u(x)`.
    AllEqual(Term, Term),
    /// The degree occurs in `t(x)`.
    Contains(Term, Degree),
    /// Every member of the first family equals some member of the second.
    Subfamily(String, String),
    /// No two members of the family are equal.
    DistinctMembers(String),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// Holds at every element of the universe.
    Everywhere(Box<Formula>),
    ForAllMembers {
        var: String,
        family: String,
        body: Box<Formula>,
    },
    ExistsMember {
        var: String,
        family: String,
        body: Box<Formula>,
    },
}

/// `t ⊂ₖ u` for sets.
pub fn sub(kind: RelationKind, t: Term, u: Term) -> Formula {
    Formula::Everywhere(Box::new(Formula::Rel(kind, t, u)))
}

/// `t ⊂ₛₒₜ u` for sets.
pub fn sot(t: Term, u: Term) -> Formula {
    Formula::Everywhere(Box::new(Formula::Sot(t, u)))
}

/// `t =ₖ u` for sets.
pub fn equiv(kind: RelationKind, t: Term, u: Term) -> Formula {
    Formula::Everywhere(Box::new(Formula::And(vec![
        Formula::Rel(kind, t.clone(), u.clone()),
        Formula::Rel(kind, u, t),
    ])))
}

/// `t = u` (multiset equality at every element).
pub fn equal(t: Term, u: Term) -> Formula {
    Formula::Everywhere(Box::new(Formula::Same(t, u)))
}

pub fn everywhere(body: Formula) -> Formula {
    Formula::Everywhere(Box::new(body))
}

pub fn all(parts: Vec<Formula>) -> Formula {
    Formula::And(parts)
}

pub fn any(parts: Vec<Formula>) -> Formula {
    Formula::Or(parts)
}

pub fn implies(a: Formula, b: Formula) -> Formula {
    Formula::Implies(Box::new(a), Box::new(b))
}

pub fn iff(a: Formula, b: Formula) -> Formula {
    Formula::Iff(Box::new(a), Box::new(b))
}

pub fn not(a: Formula) -> Formula {
    Formula::Not(Box::new(a))
}

pub fn for_all_members(var: &str, family: &str, body: Formula) -> Formula {
    Formula::ForAllMembers {
        var: var.to_string(),
        family: family.to_string(),
        body: Box::new(body),
    }
}

pub fn exists_member(var: &str, family: &str, body: Formula) -> Formula {
    Formula::ExistsMember {
        var: var.to_string(),
        family: family.to_string(),
        body: Box::new(body),
    }
}

/// One atom evaluation recorded while tracing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// Element identifier, when the atom is element-level.
    pub element: Option<String>,
    /// Member bindings in scope, `var = member name`.
    pub bound: Vec<(String, String)>,
    pub atom: String,
    /// Operand renderings with their values at the element.
    pub operands: Vec<(String, Hfe)>,
    pub verdict: bool,
}

/// `'a` is the binding, `'f` the formula (which owns quantified names).
struct Scope<'a, 'f> {
    binding: &'a Binding,
    locals: Vec<(&'f str, &'a str, &'a Hfs)>,
    element: Option<usize>,
}

impl<'a, 'f> Scope<'a, 'f> {
    fn new(binding: &'a Binding) -> Self {
        Scope {
            binding,
            locals: Vec::new(),
            element: None,
        }
    }

    fn lookup(&self, name: &str) -> &'a Hfs {
        if let Some((_, _, s)) = self.locals.iter().rev().find(|(v, _, _)| *v == name) {
            return s;
        }
        self.binding
            .set(name)
            .unwrap_or_else(|| panic!("variable {name:?} is not bound"))
    }

    fn family(&self, name: &str) -> &'a Family {
        self.binding
            .family(name)
            .unwrap_or_else(|| panic!("family {name:?} is not bound"))
    }

    fn element(&self) -> usize {
        self.element.expect("element-level atom evaluated outside ∀x")
    }
}

type Tracer<'t> = Option<&'t mut Vec<TraceStep>>;

impl Formula {
    /// Truth value on a binding that provides every variable.
    pub fn eval(&self, binding: &Binding) -> bool {
        self.eval_in(&mut Scope::new(binding), &mut None)
    }

    /// Truth value with the given element in scope, so element atoms may
    /// appear at the top level.
    pub fn eval_at(&self, binding: &Binding, x: usize) -> bool {
        let mut scope = Scope::new(binding);
        scope.element = Some(x);
        self.eval_in(&mut scope, &mut None)
    }

    /// Like [`Formula::eval`], recording every atom without short-circuiting.
    pub fn eval_traced(&self, binding: &Binding, trace: &mut Vec<TraceStep>) -> bool {
        self.eval_in(&mut Scope::new(binding), &mut Some(trace))
    }

    fn eval_in<'a, 'f>(&'f self, scope: &mut Scope<'a, 'f>, tracer: &mut Tracer<'_>) -> bool {
        match self {
            Formula::True => true,
            Formula::Rel(kind, t, u) => {
                let x = scope.element();
                let (a, b) = (t.eval_at(scope, x), u.eval_at(scope, x));
                let verdict = element_relation(*kind, &a, &b);
                record(scope, tracer, self, &[(t, &a), (u, &b)], verdict);
                verdict
            }
            Formula::Sot(t, u) => {
                let x = scope.element();
                let (a, b) = (t.eval_at(scope, x), u.eval_at(scope, x));
                let verdict = classify_sot(&a, &b).holds();
                record(scope, tracer, self, &[(t, &a), (u, &b)], verdict);
                verdict
            }
            Formula::Same(t, u) => {
                let x = scope.element();
                let (a, b) = (t.eval_at(scope, x), u.eval_at(scope, x));
                let verdict = a == b;
                record(scope, tracer, self, &[(t, &a), (u, &b)], verdict);
                verdict
            }
            Formula::Shorter(t, u) => {
                let x = scope.element();
                let (a, b) = (t.eval_at(scope, x), u.eval_at(scope, x));
                let verdict = a.len() < b.len();
                record(scope, tracer, self, &[(t, &a), (u, &b)], verdict);
                verdict
            }
            Formula::AllEqual(t, u) => {
                let x = scope.element();
                let (a, b) = (t.eval_at(scope, x), u.eval_at(scope, x));
                let verdict = a.is_constant() && b.is_constant() && a.upper() == b.upper();
                record(scope, tracer, self, &[(t, &a), (u, &b)], verdict);
                verdict
            }
            Formula::Contains(t, d) => {
                let x = scope.element();
                let a = t.eval_at(scope, x);
                let verdict = a.contains(*d);
                record(scope, tracer, self, &[(t, &a)], verdict);
                verdict
            }
            Formula::Subfamily(f1, f2) => {
                let (a, b) = (scope.family(f1), scope.family(f2));
                let verdict = a.sets().all(|s| b.sets().any(|t| s == t));
                record(scope, tracer, self, &[], verdict);
                verdict
            }
            Formula::DistinctMembers(fam) => {
                let verdict = scope.family(fam).has_distinct_members();
                record(scope, tracer, self, &[], verdict);
                verdict
            }
            Formula::Not(inner) => !inner.eval_in(scope, tracer),
            Formula::And(parts) => fold_bool(parts.iter(), scope, tracer, true),
            Formula::Or(parts) => fold_bool(parts.iter(), scope, tracer, false),
            Formula::Implies(a, b) => {
                let premise = a.eval_in(scope, tracer);
                if !premise && tracer.is_none() {
                    return true;
                }
                let conclusion = b.eval_in(scope, tracer);
                !premise || conclusion
            }
            Formula::Iff(a, b) => {
                let l = a.eval_in(scope, tracer);
                let r = b.eval_in(scope, tracer);
                l == r
            }
            Formula::Everywhere(body) => {
                let saved = scope.element;
                let mut result = true;
                for x in 0..scope.binding.universe.len() {
                    scope.element = Some(x);
                    if !body.eval_in(scope, tracer) {
                        result = false;
                        if tracer.is_none() {
                            break;
                        }
                    }
                }
                scope.element = saved;
                result
            }
            Formula::ForAllMembers { var, family, body } => {
                quantify(scope, tracer, var, family, body, true)
            }
            Formula::ExistsMember { var, family, body } => {
                quantify(scope, tracer, var, family, body, false)
            }
        }
    }

    /// Free set variables, in first-occurrence order, excluding names bound
    /// by member quantifiers.
    pub fn set_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.walk_vars(&mut Vec::new(), &mut out);
        out
    }

    fn walk_vars(&self, bound: &mut Vec<String>, out: &mut Vec<String>) {
        let push_terms = |terms: &[&Term], bound: &Vec<String>, out: &mut Vec<String>| {
            for t in terms {
                let mut vs = Vec::new();
                t.collect_vars(&mut vs);
                for v in vs {
                    if !bound.iter().any(|b| b == v) && !out.iter().any(|o| o == v) {
                        out.push(v.to_string());
                    }
                }
            }
        };
        match self {
            Formula::Rel(_, t, u)
            | Formula::Sot(t, u)
            | Formula::Same(t, u)
            | Formula::Shorter(t, u)
            | Formula::AllEqual(t, u) => push_terms(&[t, u], bound, out),
            Formula::Contains(t, _) => push_terms(&[t], bound, out),
            Formula::True | Formula::Subfamily(..) | Formula::DistinctMembers(_) => {}
            Formula::Not(a) | Formula::Everywhere(a) => a.walk_vars(bound, out),
            Formula::And(ps) | Formula::Or(ps) => ps.iter().for_each(|p| p.walk_vars(bound, out)),
            Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.walk_vars(bound, out);
                b.walk_vars(bound, out);
            }
            Formula::ForAllMembers { var, body, .. } | Formula::ExistsMember { var, body, .. } => {
                bound.push(var.clone());
                body.walk_vars(bound, out);
                bound.pop();
            }
        }
    }

    /// Family names referenced anywhere, in first-occurrence order.
    pub fn family_vars(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        self.walk_families(&mut out);
        out
    }

    fn walk_families(&self, out: &mut Vec<String>) {
        let push = |name: &str, out: &mut Vec<String>| {
            if !out.iter().any(|o| o == name) {
                out.push(name.to_string());
            }
        };
        let push_terms = |terms: &[&Term], out: &mut Vec<String>| {
            for t in terms {
                let mut fs = Vec::new();
                t.collect_families(&mut fs);
                for f in fs {
                    push(f, out);
                }
            }
        };
        match self {
            Formula::Rel(_, t, u)
            | Formula::Sot(t, u)
            | Formula::Same(t, u)
            | Formula::Shorter(t, u)
            | Formula::AllEqual(t, u) => push_terms(&[t, u], out),
            Formula::Contains(t, _) => push_terms(&[t], out),
            Formula::True => {}
            Formula::Subfamily(a, b) => {
                push(a, out);
                push(b, out);
            }
            Formula::DistinctMembers(a) => push(a, out),
            Formula::Not(a) | Formula::Everywhere(a) => a.walk_families(out),
            Formula::And(ps) | Formula::Or(ps) => ps.iter().for_each(|p| p.walk_families(out)),
            Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.walk_families(out);
                b.walk_families(out);
            }
            Formula::ForAllMembers { family, body, .. }
            | Formula::ExistsMember { family, body, .. } => {
                push(family, out);
                body.walk_families(out);
            }
        }
    }

    /// Connectives and quantifiers (other than set-level shorthand) need
    /// brackets when nested.
    pub(crate) fn needs_brackets(&self) -> bool {
        match self {
            Formula::And(_) | Formula::Or(_) | Formula::Implies(..) | Formula::Iff(..) => true,
            Formula::ForAllMembers { .. } | Formula::ExistsMember { .. } => true,
            Formula::Everywhere(_) => self.set_level().is_none(),
            _ => false,
        }
    }

    fn fmt_nested(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.needs_brackets() {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }

    /// Set-level shorthand for `∀x` over a single atom, if it has one.
    fn set_level(&self) -> Option<String> {
        let Formula::Everywhere(body) = self else {
            return None;
        };
        match body.as_ref() {
            Formula::Rel(k, t, u) => Some(format!("{t} {} {u}", k.subset_symbol())),
            Formula::Sot(t, u) => Some(format!("{t} ⊂ₛₒₜ {u}")),
            Formula::Same(t, u) => Some(format!("{t} = {u}")),
            Formula::And(parts) => match parts.as_slice() {
                [Formula::Rel(k1, t1, u1), Formula::Rel(k2, t2, u2)]
                    if k1 == k2 && t1 == u2 && u1 == t2 =>
                {
                    Some(format!("{t1} {} {u1}", k1.equality_symbol()))
                }
                _ => None,
            },
            _ => None,
        }
    }

    fn element_atom(&self, element: &str) -> String {
        match self {
            Formula::Rel(k, t, u) => format!(
                "{} {} {}",
                t.at_element(element),
                k.subset_symbol(),
                u.at_element(element)
            ),
            Formula::Sot(t, u) => {
                format!("{} ⊂ₛₒₜ {}", t.at_element(element), u.at_element(element))
            }
            Formula::Same(t, u) => format!("{} = {}", t.at_element(element), u.at_element(element)),
            Formula::Shorter(t, u) => {
                format!("|{}| < |{}|", t.at_element(element), u.at_element(element))
            }
            Formula::AllEqual(t, u) => format!(
                "every degree of {} equals every degree of {}",
                t.at_element(element),
                u.at_element(element)
            ),
            Formula::Contains(t, d) => format!("{d} ∈ {}", t.at_element(element)),
            Formula::Subfamily(a, b) => format!("{a} ⊏ {b}"),
            Formula::DistinctMembers(a) => format!("members of {a} are distinct"),
            other => other.to_string(),
        }
    }
}

fn fold_bool<'a, 'f>(
    parts: impl Iterator<Item = &'f Formula>,
    scope: &mut Scope<'a, 'f>,
    tracer: &mut Tracer<'_>,
    conjunction: bool,
) -> bool {
    let mut result = conjunction;
    for p in parts {
        if p.eval_in(scope, tracer) != conjunction {
            result = !conjunction;
            if tracer.is_none() {
                break;
            }
        }
    }
    result
}

fn quantify<'a, 'f>(
    scope: &mut Scope<'a, 'f>,
    tracer: &mut Tracer<'_>,
    var: &'f str,
    family: &str,
    body: &'f Formula,
    universal: bool,
) -> bool {
    let fam = scope.family(family);
    let mut result = universal;
    for (name, set) in fam.members() {
        scope.locals.push((var, name.as_str(), set));
        let v = body.eval_in(scope, tracer);
        scope.locals.pop();
        if v != universal {
            result = !universal;
            if tracer.is_none() {
                break;
            }
        }
    }
    result
}

fn record(
    scope: &Scope<'_, '_>,
    tracer: &mut Tracer<'_>,
    atom: &Formula,
    operands: &[(&Term, &Hfe)],
    verdict: bool,
) {
    let Some(trace) = tracer.as_deref_mut() else {
        return;
    };
    let element = scope
        .element
        .map(|x| scope.binding.universe.ids()[x].clone());
    let label = element.as_deref().unwrap_or("x");
    trace.push(TraceStep {
        atom: atom.element_atom(label),
        element: element.clone(),
        bound: scope
            .locals
            .iter()
            .map(|(v, m, _)| (v.to_string(), m.to_string()))
            .collect(),
        operands: operands
            .iter()
            .map(|(t, h)| (t.at_element(label), (*h).clone()))
            .collect(),
        verdict,
    });
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.set_level() {
            return f.write_str(&s);
        }
        match self {
            Formula::True => f.write_str("⊤"),
            Formula::Not(a) => {
                f.write_str("¬")?;
                a.fmt_nested(f)
            }
            Formula::And(parts) | Formula::Or(parts) => {
                let sep = if matches!(self, Formula::And(_)) { " ∧ " } else { " ∨ " };
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    p.fmt_nested(f)?;
                }
                Ok(())
            }
            Formula::Implies(a, b) => {
                a.fmt_nested(f)?;
                f.write_str(" ⇒ ")?;
                b.fmt_nested(f)
            }
            Formula::Iff(a, b) => {
                a.fmt_nested(f)?;
                f.write_str(" ⇔ ")?;
                b.fmt_nested(f)
            }
            Formula::Everywhere(body) => {
                f.write_str("∀x: ")?;
                body.fmt_nested(f)
            }
            Formula::ForAllMembers { var, family, body } => {
                write!(f, "∀{var}∈{family}: ")?;
                body.fmt_nested(f)
            }
            Formula::ExistsMember { var, family, body } => {
                write!(f, "∃{var}∈{family}: ")?;
                body.fmt_nested(f)
            }
            atom => f.write_str(&atom.element_atom("x")),
        }
    }
}
