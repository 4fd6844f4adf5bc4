//! Bud generating systems over colored operads.
//!
//! A [`BudSystem`] derives elements of `Bud_𝒞(O)` from the units of its
//! initial colors by composing rules, either one input at a time or at all
//! inputs at once (synchronously). This crate provides the one-step
//! derivations, the derivation graphs, the hook, syntactic and synchronous
//! generating series, the languages they support, bounded verdicts on
//! faithfulness and unambiguity, the example systems, and a JSON format.

mod error;
mod generating;
mod graph;
pub mod json;
mod presets;
mod system;
mod verdict;

pub use error::BudError;
pub use generating::{hook_series, language, sync_language, sync_series, synt_series, synt_slices, BudSeries};
pub use graph::{derivation_graph, multipath_count, multipath_counts_from, to_dot, DerivGraph};
pub use presets::{bdias, btree, builtin, PresetParams, PRESETS};
pub use system::BudSystem;
pub use verdict::{
    analyze_language, analyze_sync_language, check, is_faithful, is_sync_faithful, is_sync_unambiguous,
    is_unambiguous, CheckReport, LanguageReport, Verdict, Witness,
};
