//! Machine-checked laws of the algebra.
//!
//! Each [`Law`] pairs a guard (premises) with a claim. Proved laws are
//! exercised on random guard-satisfying bindings; refuted laws carry fixtures
//! on which the guard holds and the claim fails.

pub mod formula;
mod generate;
mod registry;
mod runner;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use formula::{Binding, Formula, Term, TraceStep};
pub use generate::{random_hfs, sample_binding, GeneratorConfig, Hint, SizeRange, Slot};
pub use registry::{find_law, law_registry};
pub use runner::{
    hunt_counterexample, run_laws, run_suite, FixtureOutcome, LawOutcome, LawReport, Witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Proved,
    Refuted,
}

/// A named binding attached to a law.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub binding: Binding,
}

#[derive(Clone, Debug)]
pub struct Law {
    pub id: String,
    pub status: Status,
    pub guard: Formula,
    pub claim: Formula,
    pub fixtures: Vec<Fixture>,
    /// Generator hints beyond those derived from the guard.
    pub hints: Vec<Hint>,
    sets: Vec<String>,
    families: Vec<String>,
}

impl Law {
    pub fn new(id: &str, status: Status, guard: Formula, claim: Formula) -> Self {
        let mut sets = guard.set_vars();
        for v in claim.set_vars() {
            if !sets.contains(&v) {
                sets.push(v);
            }
        }
        let mut families = guard.family_vars();
        for f in claim.family_vars() {
            if !families.contains(&f) {
                families.push(f);
            }
        }
        Law {
            id: id.to_string(),
            status,
            guard,
            claim,
            fixtures: Vec::new(),
            hints: Vec::new(),
            sets,
            families,
        }
    }

    pub fn fixture(mut self, name: &str, binding: Binding) -> Self {
        self.fixtures.push(Fixture {
            name: name.to_string(),
            binding,
        });
        self
    }

    pub fn hint(mut self, hint: Hint) -> Self {
        self.hints.push(hint);
        self
    }

    /// Set variables, in order of first appearance.
    pub fn set_vars(&self) -> &[String] {
        &self.sets
    }

    pub fn family_vars(&self) -> &[String] {
        &self.families
    }

    /// Number of bound variables (sets and families).
    pub fn arity(&self) -> usize {
        self.sets.len() + self.families.len()
    }

    /// Human-readable statement, `guard ⇒ claim` or just the claim.
    pub fn statement(&self) -> String {
        match self.guard {
            Formula::True => self.claim.to_string(),
            _ => {
                let wrap = |f: &Formula| {
                    if f.needs_brackets() {
                        format!("({f})")
                    } else {
                        f.to_string()
                    }
                };
                format!("{} ⇒ {}", wrap(&self.guard), wrap(&self.claim))
            }
        }
    }

    /// Checks that the binding provides exactly this law's variables.
    pub fn check_binding(&self, binding: &Binding) -> Result<()> {
        for v in &self.sets {
            if binding.set(v).is_none() {
                return Err(Error::MissingVariable(v.clone()));
            }
        }
        for f in &self.families {
            if binding.family(f).is_none() {
                return Err(Error::MissingVariable(f.clone()));
            }
        }
        for (name, _) in binding.sets() {
            if !self.sets.contains(name) {
                return Err(Error::UnexpectedVariable(name.clone()));
            }
        }
        for (name, _) in binding.families() {
            if !self.families.contains(name) {
                return Err(Error::UnexpectedVariable(name.clone()));
            }
        }
        Ok(())
    }
}

/// Outcome of evaluating a law on one binding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub guard: bool,
    pub claim: bool,
}

impl Verdict {
    /// Guard satisfied and claim false.
    pub fn is_violation(&self) -> bool {
        self.guard && !self.claim
    }
}

pub fn evaluate_law(law: &Law, binding: &Binding) -> Result<Verdict> {
    law.check_binding(binding)?;
    Ok(Verdict {
        guard: law.guard.eval(binding),
        claim: law.claim.eval(binding),
    })
}

/// Full evaluation with per-atom traces for guard and claim.
pub fn trace_law(law: &Law, binding: &Binding) -> Result<(Verdict, Vec<TraceStep>, Vec<TraceStep>)> {
    law.check_binding(binding)?;
    let (mut g, mut c) = (Vec::new(), Vec::new());
    let verdict = Verdict {
        guard: law.guard.eval_traced(binding, &mut g),
        claim: law.claim.eval_traced(binding, &mut c),
    };
    Ok((verdict, g, c))
}
