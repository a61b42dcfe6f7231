//! Exhaustive desk-scale checks of duality pairs.

mod duality;
mod enumerate;
mod lemmas;

pub use duality::{
    resolve_jobs, verify_duality, DualityReport, LevelCounts, ReportKind, Sample, Verdict, VerifyOptions, Violation,
    JOBS_ENV,
};
pub use enumerate::{enumerate_digraphs, enumerate_ids, Canonizer, GraphId, MAX_ENUMERATION_VERTICES};
pub use lemmas::{check_structural_lemmas, StructuralReport};
