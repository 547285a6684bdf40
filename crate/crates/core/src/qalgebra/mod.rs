//! Exact polynomial and truncated power series arithmetic.

mod poly;
mod pqpoly;
mod series;

pub use poly::{qbracket, QPoly};
pub(crate) use poly::ZERO;
pub use pqpoly::PQPoly;
pub use series::{geometric, one_minus, TSeries};
