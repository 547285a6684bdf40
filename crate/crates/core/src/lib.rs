//! Exact q-analogues of the Fibonacci–Stirling numbers.
//!
//! Everything here is pure integer arithmetic over polynomials in `q`:
//!
//! - [`qalgebra`]: dense integer polynomials ([`QPoly`]), bivariate
//!   `p,q`-polynomials and truncated power series in `t`.
//! - [`fibtiles`]: Fibonacci tilings of a column, their rank/unrank codec
//!   and Zeckendorf representations.
//! - [`boards`]: Ferrers boards with Fibonacci file, rook and mixed
//!   placements, and the weighted placement polynomials.
//! - [`stirling`]: the four triangles `SF`, `SFbar`, `cF`, `cFbar` and the
//!   identities tying them to the board polynomials.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod boards;
mod error;
pub mod fibtiles;
pub mod qalgebra;
pub mod stirling;

pub use boards::FerrersBoard;
pub use error::Error;
pub use fibtiles::{fib, LevelSeq, Tiling, Zeckendorf};
pub use qalgebra::{qbracket, PQPoly, QPoly, TSeries};
pub use stirling::{Family, Tables, Triangle};

pub type Result<T, E = Error> = core::result::Result<T, E>;
