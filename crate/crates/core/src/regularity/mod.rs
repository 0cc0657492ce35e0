//! Regularity of Steinhaus graphs: degree congruences for multi-symmetric
//! matrices, the regular-mod-4 search built on them, exhaustive search, and
//! the odd-degree pipeline.

pub mod brute;
pub mod conjecture;
pub mod mod4;
pub mod scan;
pub mod search;

pub use brute::{
    brute_force_regular, brute_force_regular_reference, DegreeParity, DEFAULT_BRUTE_FORCE_CAP,
};
pub use conjecture::{lift_interior, verify_conjecture2_at, Verdict};
pub use mod4::{
    congruence_rules, divisibility_remarks_check, mod4_profile, CongruenceRule, Mod4Profile,
};
pub use scan::{load_resume_state, run_scan, Checkpoint, ResumeState, ScanConfig, ScanSummary};
pub use search::{
    dimension_bound, odd_regular_theorem_check, regular_mod4_system, search_regular_mod4,
    CheckMethod, SearchReport, DEFAULT_SEARCH_CAP,
};
