//! Core vocabulary for colored operads.
//!
//! A colored operad is described here through the [`Operad`] trait: every
//! element has an output color and a word of input colors, and the partial
//! composition `x ∘_i y` is only defined when the output color of `y` equals
//! the `i`-th input color of `x`. The crate also provides the two structures
//! that every other part of the workspace relies on: the associative operad
//! [`As`] and the [`Bud`] construction, which turns a monochrome operad into
//! a colored one by decorating its elements with colors.

mod assoc;
mod bud;
mod color;
mod error;
pub mod laws;
mod operad;
mod types;

pub use assoc::As;
pub use bud::{colorize, prune, Bud, BudElem};
pub use color::{Color, ColorSet};
pub use error::OperadError;
pub use operad::Operad;
pub use types::{type_of, TypeVector};
