//! Exact hesitant fuzzy set algebra.
//!
//! Degrees are exact rationals, elements are multisets kept in descending
//! order, and every comparison is decided without floating point.

pub mod degree;
pub mod document;
pub mod error;
pub mod expr;
pub mod hfe;
pub mod hfs;
pub mod laws;
pub mod relations;
pub mod report;

pub use degree::{parse_degree, Degree};
pub use document::{ingest_scores, Document};
pub use error::{Error, Result};
pub use expr::{eval_expr, parse_expr};
pub use hfe::Hfe;
pub use laws::{
    evaluate_law, find_law, hunt_counterexample, law_registry, random_hfs, run_suite,
    GeneratorConfig, Law, LawReport, Status, Verdict, Witness,
};
pub use hfs::{family_fold, is_subfamily, make_hfs, Family, Hfs, SetOp, Universe};
pub use relations::{
    best_q_subsequence, classify_sot, dominates, element_relation, is_subsequence,
    relation_profile, set_equality, set_relation, set_sot, RelationKind, RelationProfile,
    SotVerdict,
};
pub use report::{explain_law, rank, relate, Ranking, RelateReport};
