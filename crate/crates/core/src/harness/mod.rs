//! Corpus-level verification suites, minimal deficiency witnesses and the
//! skeleton-constrained reconstruction searches.

mod corpus;
mod reconstruct;
mod report;
mod verify;
mod witness;

use thiserror::Error;

pub use corpus::{filter_corpus, odd_component_count, Corpus, Parity, Predicate};
pub use reconstruct::{
    reconstruct_case_1_2, reconstruct_case_3_2, reconstruct_case_4_2, satisfies_case_1_2, satisfies_case_3_2,
    satisfies_case_4_2,
};
pub use report::{Coverage, CorpusReport, ExceptionRecord, OrderCounts, Violation, CSV_HEADER};
pub use verify::{
    run_suite, verify_2critical, verify_3connectivity, verify_cut_lemma, verify_facts, verify_theorem_matching,
    MatchingSuite, Suite,
};
pub use witness::{minimal_witness_analysis, WitnessAnalysis};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid matching suite: k={k}, parity={parity}")]
    InvalidMatchingSuite { k: usize, parity: Parity },
    #[error("reconstruction case requires k in {{6,7}}, got {0}")]
    InvalidCaseParameter(usize),
    #[error("graph is not 3-γ-vertex-critical (γ = {gamma}, critical = {critical})")]
    NotThreeCritical { gamma: usize, critical: bool },
    #[error("graph satisfies the matching conclusion; no deficiency witness")]
    NoQualifyingWitness,
    #[error("worker count must be at least 1")]
    ZeroWorkers,
}

/// Runs `f` on a dedicated pool of `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, HarnessError> {
    if workers == 0 {
        return Err(HarnessError::ZeroWorkers);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    Ok(pool.install(f))
}
