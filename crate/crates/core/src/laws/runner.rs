use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{trial_rng, GeneratorConfig, Sampler};
use super::registry::{find_law, law_registry};
use super::{evaluate_law, Law, Status, Verdict};
use crate::document::Document;
use crate::error::{Error, Result};

/// Violations kept per law.
const WITNESS_LIMIT: usize = 3;

/// A binding on which a law was evaluated, with the recorded verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub law: String,
    /// Trial index for generated bindings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
    /// Fixture name for stored bindings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    pub binding: Document,
    pub guard: bool,
    pub claim: bool,
}

impl Witness {
    /// Re-evaluates the stored binding.
    pub fn replay(&self) -> Result<Verdict> {
        let law = find_law(&self.law).ok_or_else(|| Error::UnknownLaw(self.law.clone()))?;
        evaluate_law(law, &self.binding.binding_for(law)?)
    }

    pub fn verdict(&self) -> Verdict {
        Verdict {
            guard: self.guard,
            claim: self.claim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub guard: bool,
    pub claim: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawOutcome {
    pub id: String,
    pub status: Status,
    pub statement: String,
    /// Trials requested; refuted laws run none.
    pub trials: u64,
    /// Trials whose binding satisfied the guard.
    pub accepted: u64,
    /// Trials abandoned because rejection sampling hit its cap.
    pub starved: u64,
    pub violations: u64,
    pub witnesses: Vec<Witness>,
    pub fixtures: Vec<FixtureOutcome>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl LawOutcome {
    /// Proved: no violation anywhere. Refuted: every fixture falsifies.
    pub fn passed(&self) -> bool {
        match self.status {
            Status::Proved => {
                self.violations == 0 && self.fixtures.iter().all(|f| !f.guard || f.claim)
            }
            Status::Refuted => {
                !self.fixtures.is_empty() && self.fixtures.iter().all(|f| f.guard && !f.claim)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub config: GeneratorConfig,
    pub passed: bool,
    pub proved: usize,
    pub refuted: usize,
    pub failures: Vec<String>,
    pub starved_laws: Vec<String>,
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    pub fn law(&self, id: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serialises");
        text.push('\n');
        text
    }
}

enum Trial {
    Starved,
    Held,
    Violated(Witness),
}

fn run_trial(law: &Law, sampler: &Sampler, config: &GeneratorConfig, trial: u64) -> Trial {
    let mut rng = trial_rng(config.seed, &law.id, trial);
    let Some(binding) = sampler.sample(config, &mut rng) else {
        return Trial::Starved;
    };
    if law.claim.eval(&binding) {
        return Trial::Held;
    }
    Trial::Violated(Witness {
        law: law.id.clone(),
        trial: Some(trial),
        fixture: None,
        binding: Document::from_binding(&binding),
        guard: true,
        claim: false,
    })
}

fn check_law(law: &Law, config: &GeneratorConfig, parallel: bool) -> LawOutcome {
    let start = Instant::now();
    let fixtures: Vec<FixtureOutcome> = law
        .fixtures
        .iter()
        .map(|f| {
            let v = evaluate_law(law, &f.binding).expect("fixture matches its law");
            FixtureOutcome {
                name: f.name.clone(),
                guard: v.guard,
                claim: v.claim,
            }
        })
        .collect();
    let mut witnesses: Vec<Witness> = law
        .fixtures
        .iter()
        .zip(&fixtures)
        .filter(|(_, o)| o.guard && !o.claim)
        .map(|(f, o)| Witness {
            law: law.id.clone(),
            trial: None,
            fixture: Some(f.name.clone()),
            binding: Document::from_binding(&f.binding),
            guard: o.guard,
            claim: o.claim,
        })
        .collect();

    let trials = match law.status {
        Status::Proved => config.trials,
        Status::Refuted => 0,
    };
    let (mut accepted, mut starved, mut violations) = (0, 0, 0);
    if trials > 0 {
        let sampler = Sampler::new(law);
        let run = |t| run_trial(law, &sampler, config, t);
        let results: Vec<Trial> = if parallel {
            (0..trials).into_par_iter().map(run).collect()
        } else {
            (0..trials).map(run).collect()
        };
        for r in results {
            match r {
                Trial::Starved => starved += 1,
                Trial::Held => accepted += 1,
                Trial::Violated(w) => {
                    accepted += 1;
                    violations += 1;
                    if witnesses.len() < WITNESS_LIMIT {
                        witnesses.push(w);
                    }
                }
            }
        }
    }
    LawOutcome {
        id: law.id.clone(),
        status: law.status,
        statement: law.statement(),
        trials,
        accepted,
        starved,
        violations,
        witnesses,
        fixtures,
        elapsed: start.elapsed(),
    }
}

/// Runs the given laws. Output is identical whether or not trials run in
/// parallel.
pub fn run_laws(laws: &[Law], config: &GeneratorConfig, parallel: bool) -> Result<LawReport> {
    config.validate()?;
    let outcomes: Vec<LawOutcome> = laws.iter().map(|l| check_law(l, config, parallel)).collect();
    let failures = outcomes.iter().filter(|o| !o.passed()).map(|o| o.id.clone()).collect::<Vec<_>>();
    Ok(LawReport {
        config: config.clone(),
        passed: failures.is_empty(),
        proved: outcomes.iter().filter(|o| o.status == Status::Proved).count(),
        refuted: outcomes.iter().filter(|o| o.status == Status::Refuted).count(),
        failures,
        starved_laws: outcomes
            .iter()
            .filter(|o| o.starved > 0)
            .map(|o| o.id.clone())
            .collect(),
        laws: outcomes,
    })
}

/// Checks the whole registry.
pub fn run_suite(config: &GeneratorConfig) -> Result<LawReport> {
    run_laws(law_registry(), config, true)
}

/// First guard-satisfying, claim-falsifying random binding, by trial index.
pub fn hunt_counterexample(law_id: &str, config: &GeneratorConfig) -> Result<Option<Witness>> {
    let law = find_law(law_id).ok_or_else(|| Error::UnknownLaw(law_id.to_string()))?;
    config.validate()?;
    let sampler = Sampler::new(law);
    Ok((0..config.trials)
        .into_par_iter()
        .find_map_first(|t| match run_trial(law, &sampler, config, t) {
            Trial::Violated(w) => Some(w),
            _ => None,
        }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(trials: u64) -> GeneratorConfig {
        GeneratorConfig {
            trials,
            ..GeneratorConfig::default()
        }
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let report = run_suite(&small(0)).unwrap();
        assert!(report.passed, "{:?}", report.failures);
        assert!(report.laws.iter().all(|l| l.accepted == 0 && l.violations == 0));
        assert_eq!(hunt_counterexample("exam-sec2.3-m-intersection", &small(0)).unwrap(), None);
    }

    #[test]
    fn hunts_refuted_and_spares_proved() {
        let w = hunt_counterexample("exam-sec2.3-m-intersection", &small(10_000))
            .unwrap()
            .expect("witness");
        assert_eq!(w.replay().unwrap(), w.verdict());
        assert!(w.verdict().is_violation());
        assert_eq!(hunt_counterexample("prop13.1", &small(500)).unwrap(), None);
        assert!(matches!(hunt_counterexample("nope", &small(1)), Err(Error::UnknownLaw(_))));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let laws: Vec<Law> = law_registry().iter().take(12).cloned().collect();
        let a = run_laws(&laws, &small(50), false).unwrap();
        let b = run_laws(&laws, &small(50), true).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }
}
