//! Enumeration of the languages of bud generating systems by color types.
//!
//! The rules of a system are summarized by the numbers `χ_{a,α}` of rules
//! with output color `a` and input type `α`, or equivalently by the
//! polynomials `g_a = Σ χ_{a,γ} Y^γ`. From these alone one can count the
//! treelike and perfect treelike expressions of the system by output color
//! and input type, either through recurrences ([`SyntRecurrence`],
//! [`SyncRecurrence`]) or by iterating functional equations
//! ([`solve_synt_system`], [`solve_sync_system`]). For unambiguous systems
//! these count the elements of the languages.
//!
//! Also here: the refined enumeration of perfect trees by node arities and
//! the triangle of hook coefficients of `BDias_1`.

mod chi;
mod colt;
mod error;
mod functional;
mod hook;
mod poly;
mod refined;

pub use chi::{chi_table, g_poly, multiset_factorial, ChiTable};
pub use colt::{
    colt_sync_coeff, colt_synt_coeff, lang_counting_series, sync_counting_series, sync_counts, synt_counts,
    CountPath, CountingSeries, SyncRecurrence, SyntRecurrence,
};
pub use error::CountError;
pub use functional::{solve_sync_system, solve_synt_system, sync_iterates};
pub use hook::hook_triangle;
pub use poly::TypePoly;
pub use refined::{refined_perfect, specialize_refined};
