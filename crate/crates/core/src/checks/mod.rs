//! Executable height bounds and the randomized sweep harness.

mod report;
mod sweep;
mod theorems;

pub use report::{BoundReport, Exactness, Hypothesis, HypothesisStatus, TheoremId};
pub use sweep::{sample, sample_state, sweep, Sample, SampleOutcome, SweepConfig, SweepResult, SweepSummary, CSV_HEADER};
pub use theorems::{
    check_bruns, check_gpit, check_huneke_rossi, check_kwiecinski, check_kwiecinski_refined,
    check_macaulay_ee, check_mu_inequality, check_row_ideal_dim, check_row_ideal_height,
    check_serre, module_rank, qualifying_component, PrimeWitness,
};
