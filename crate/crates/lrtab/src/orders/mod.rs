//! The dominance and box partial orders on fillings of a fixed type,
//! the two chain constructions between comparable fillings, Hasse
//! diagram extraction, and bulk verification sweeps.

mod chains;
mod poset;
mod sweep;

pub use chains::{compare_chains, word_chain, word_step, ChainComparison, MoveChoice, TieBreak};
pub use poset::{
    descending_word, leq_in, run_word, unique_max_filling, unique_min_filling, GradednessReport,
    OrderKind, PosetGraph,
};
pub use sweep::{
    conjecture_for_gamma, rook_shapes_for_gamma, rook_types_for_gamma, strip_shapes_for_gamma,
    strip_types_for_gamma, sweep_gammas, verify_gamma, CheckOutcome, ConjectureStats,
    Counterexample, VerifyReport, BOX_COLS, BOX_ROWS, HEAVY_WEIGHT_CAP, MAX_WEIGHT,
};
