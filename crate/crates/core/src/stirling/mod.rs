//! The four Fibonacci–Stirling triangles and the identities around them.
//!
//! | family  | recursion for row `n+1`                                  |
//! |---------|----------------------------------------------------------|
//! | `SF`    | `q^{F_{k-1}} SF_{n,k-1} + [F_k]_q SF_{n,k}`              |
//! | `SFbar` | `SFbar_{n,k-1} + [F_k]_q SFbar_{n,k}`                    |
//! | `cF`    | `q^{F_n} cF_{n,k-1} + [F_n]_q cF_{n,k}`                  |
//! | `cFbar` | `cFbar_{n,k-1} + [F_n]_q cFbar_{n,k}`                    |
//!
//! All four start from `(0,0) = 1` and vanish outside `0 <= k <= n`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::fibtiles::fib;
use crate::qalgebra::{qbracket, QPoly, ZERO};
use crate::Error;

mod checks;
mod matrix;
mod shape;

pub use checks::{
    closed_forms_check, coeff_formulas_check, connection_check, cf_identity, gf_check, i1_check, interp_check,
    ConnectionOutcome, Outcome, Report, ReportItem,
};
pub use matrix::{matrix_inverse_check, QMatrix};
pub use shape::{chain_product, log_concavity, unimodality, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    SF,
    SFbar,
    CF,
    CFbar,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::SF, Family::SFbar, Family::CF, Family::CFbar];

    pub fn name(self) -> &'static str {
        match self {
            Family::SF => "SF",
            Family::SFbar => "SFbar",
            Family::CF => "cF",
            Family::CFbar => "cFbar",
        }
    }

    pub fn is_barred(self) -> bool {
        matches!(self, Family::SFbar | Family::CFbar)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownFamily(format!("{s:?} (expected SF, SFbar, cF or cFbar)")))
    }
}

/// Rows `0..=max_n` of one family; row `n` holds `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    family: Family,
    rows: Vec<Vec<QPoly>>,
}

impl Triangle {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// The `(n, k)` cell, zero outside `0 <= k <= n <= max_n`.
    pub fn get(&self, n: usize, k: usize) -> &QPoly {
        self.rows.get(n).and_then(|r| r.get(k)).unwrap_or(&ZERO)
    }

    pub fn row(&self, n: usize) -> &[QPoly] {
        &self.rows[n]
    }

    /// `(n, k, cell)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &QPoly)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, c)| (n, k, c)))
    }

    /// Rebuilds a triangle from explicit rows; each row `n` must have
    /// `n + 1` entries.
    pub fn from_rows(family: Family, rows: Vec<Vec<QPoly>>) -> Result<Self, Error> {
        if rows.is_empty() {
            return Err(Error::InvalidTriangle(format!("{family} triangle needs row 0")));
        }
        if let Some((n, r)) = rows.iter().enumerate().find(|(n, r)| r.len() != n + 1) {
            return Err(Error::InvalidTriangle(format!("row {n} of {family} has {} cells", r.len())));
        }
        Ok(Triangle { family, rows })
    }
}

/// Which exponent the `cF` recursion multiplies `cF_{n,k-1}` by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CfShift {
    /// `q^{F_n}`, the exponent consistent with the defining expansion.
    Current,
    /// `q^{F_{n-1}}`, which breaks the expansion already at `n = 2`.
    Previous,
}

pub fn triangle(family: Family, max_n: usize) -> Triangle {
    build(family, max_n, CfShift::Current)
}

/// The `cF` triangle built with `q^{F_{n-1}}` in place of `q^{F_n}`, kept to
/// show that choice is wrong.
pub fn cf_triangle_previous_shift(max_n: usize) -> Triangle {
    build(Family::CF, max_n, CfShift::Previous)
}

fn build(family: Family, max_n: usize, shift: CfShift) -> Triangle {
    let mut rows = vec![vec![QPoly::one()]];
    for n in 0..max_n {
        let prev = &rows[n];
        let at = |k: usize| prev.get(k).unwrap_or(&ZERO);
        let row = (0..=n + 1)
            .map(|k| {
                let left = if k == 0 { &ZERO } else { at(k - 1) };
                let (left_shift, factor) = match family {
                    Family::SF => (k.checked_sub(1).map_or(0, |j| fib(j) as usize), fib(k)),
                    Family::SFbar => (0, fib(k)),
                    Family::CF => match shift {
                        CfShift::Current => (fib(n) as usize, fib(n)),
                        CfShift::Previous => (n.checked_sub(1).map_or(0, |j| fib(j) as usize), fib(n)),
                    },
                    Family::CFbar => (0, fib(n)),
                };
                left.shift(left_shift) + &qbracket(factor) * at(k)
            })
            .collect();
        rows.push(row);
    }
    Triangle { family, rows }
}

/// The `q = 1` shadow of a family, from the same recursion over plain
/// integers with `[F]_q` replaced by `F`.
pub fn count_triangle(family: Family, max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::from(1)]];
    for n in 0..max_n {
        let prev = &rows[n];
        let zero = BigInt::from(0);
        let at = |k: usize| prev.get(k).unwrap_or(&zero);
        let row = (0..=n + 1)
            .map(|k| {
                let left = if k == 0 { zero.clone() } else { at(k - 1).clone() };
                let factor = match family {
                    Family::SF | Family::SFbar => fib(k),
                    Family::CF | Family::CFbar => fib(n),
                };
                left + BigInt::from(factor) * at(k)
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// All four triangles up to a common `max_n`.
#[derive(Clone, Debug)]
pub struct Tables {
    sf: Triangle,
    sf_bar: Triangle,
    cf: Triangle,
    cf_bar: Triangle,
}

impl Tables {
    pub fn new(max_n: usize) -> Self {
        Tables {
            sf: triangle(Family::SF, max_n),
            sf_bar: triangle(Family::SFbar, max_n),
            cf: triangle(Family::CF, max_n),
            cf_bar: triangle(Family::CFbar, max_n),
        }
    }

    pub fn max_n(&self) -> usize {
        self.sf.max_n()
    }

    pub fn get(&self, family: Family) -> &Triangle {
        match family {
            Family::SF => &self.sf,
            Family::SFbar => &self.sf_bar,
            Family::CF => &self.cf,
            Family::CFbar => &self.cf_bar,
        }
    }
}
