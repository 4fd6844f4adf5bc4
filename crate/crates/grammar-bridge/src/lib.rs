//! Context-free grammars, regular tree grammars and synchronous grammars,
//! compiled into bud generating systems.
//!
//! Each grammar kind has a line-based text format (`LHS -> RHS`, with trees
//! in the term syntax `f(a, g(S))`), a compilation into a [`BudSystem`], a
//! brute-force enumeration of the grammar's language, and the matching
//! enumeration read off the compiled system. The two enumerations agree:
//!
//! - words of a context-free grammar are the input words of the language of
//!   `CFG(G)`;
//! - trees of a regular tree grammar are the leaf-labeled trees of the
//!   language of `RTG(G)`;
//! - trees of a synchronous grammar are the leaf-labeled trees of the
//!   synchronous language of `SG(G)`.
//!
//! [`BudSystem`]: budgen::BudSystem

mod cfg;
mod error;
mod labeled;
mod rtg;
mod sg;
mod text;

pub use cfg::{cfg_bruteforce, cfg_to_bud, emulated_words, Cfg};
pub use error::GrammarError;
pub use rtg::{emulated_trees, rtg_bruteforce, rtg_to_bud, Rtg};
pub use sg::{emulated_sync_trees, sg_bruteforce, sg_to_bud, SyncGrammar};
