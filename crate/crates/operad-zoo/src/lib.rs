//! Concrete operads: the magmatic operad of binary trees, the
//! pluriassociative operads `Dias_γ`, Motzkin paths, alternating Schröder
//! trees and free colored operads over finite signatures (including the
//! arity-capped operad of planar trees), together with syntax trees,
//! evaluation, treelike expressions and hook-length counts.

mod any;
mod aschr;
mod dias;
mod free;
mod mag;
mod motz;
mod syntax;
pub mod term;

pub use any::{AnyElem, AnyOperad};
pub use aschr::{ASchr, ASchrTree, Label};
pub use dias::{Dias, DiasWord};
pub use free::{FreeOperad, FreeTree, Generator, Signature, Tok};
pub use mag::{Mag, MagTree};
pub use motz::{Motz, MotzPath};
pub use operad_core::As;
pub use syntax::{
    binomial, degree_bound, eval, eval_indexed, finitely_factorizing_check, left_expression_count,
    perfect_treelike_table, s_degree, treelike_expressions, treelike_table, FactorizingReport,
    SyntaxTree, TreelikeCounts,
};
