//! Formal power series on colored operads, truncated at a maximal arity.
//!
//! A [`Series`] maps operad elements of arity at most its bound to exact
//! coefficients ([`Rational`] by default, or [`Poly`] for series with
//! parameters). The products take the carrier operad as an argument:
//! [`pre_lie`] composes at one input, [`compose_prod`] at all inputs.
//! Stars, powers and the ⊙-inverse are computed gradewise and stop once the
//! result is stable, with an iteration cap derived from the degree bound
//! of finitely factorizing generating sets.

mod error;
mod graded;
mod products;
mod scalar;
mod series;
mod transport;

pub use error::SeriesError;
pub use graded::TreeSlices;
pub use products::{
    compose_inverse, compose_inverse_fixpoint, compose_power, compose_prod, compose_star,
    iteration_cap, perfect_closure, pre_lie, pre_lie_closure, pre_lie_power, pre_lie_star,
    tree_closure,
};
pub use scalar::{Monomial, Poly, Rational, Scalar};
pub use series::{characteristic, scalar_product, units_of, units_series, Series};
pub use transport::{col_series, colt_table, mu_encode, pru_series};
