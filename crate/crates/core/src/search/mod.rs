//! Exhaustive search for avoiding colorings and Ramsey-type values.

pub mod canon;
mod engine;

pub use canon::{canonical_code, canonical_form, Code};
pub use engine::{
    exists_avoiding, exists_avoiding_with, AvoidanceProblem, EnumerationCounts, Enumerator, Level, Outcome,
    SearchLimits, LIMITS_ENV,
};
mod report;

pub use report::{
    search_gallai_ramsey, search_ramsey, verify_certificate, Family, SearchOptions, SearchReport, SearchStats,
    Validity,
};
