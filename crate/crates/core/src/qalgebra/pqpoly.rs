use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sparse polynomial in two commuting variables `q` and `p`.
///
/// Keys are `(power of q, power of p)`; no stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PQPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl PQPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * q^i * p^j`.
    pub fn monomial<T: Into<BigInt>>(c: T, q_exp: u32, p_exp: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(q_exp, p_exp, c.into());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q_exp: u32, p_exp: u32) -> BigInt {
        self.terms.get(&(q_exp, p_exp)).cloned().unwrap_or_default()
    }

    /// Iterates `((q_exp, p_exp), coeff)` in increasing key order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, q_exp: u32, p_exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((q_exp, p_exp)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(q_exp, p_exp));
        }
    }

    /// Multiplies by `q^di * p^dj`.
    pub fn shift(&self, dq: u32, dp: u32) -> PQPoly {
        PQPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + dq, j + dp), c.clone()))
                .collect(),
        }
    }

    /// Value at `p = q = 1`.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add<&PQPoly> for &PQPoly {
    type Output = PQPoly;
    fn add(self, rhs: &PQPoly) -> PQPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, var: &str, exp: u32, need_star: bool) -> fmt::Result {
    match exp {
        0 => Ok(()),
        1 => write!(f, "{}{var}", if need_star { "*" } else { "" }),
        _ => write!(f, "{}{var}^{exp}", if need_star { "*" } else { "" }),
    }
}

/// Terms are written from the highest power of `q` down, e.g. `q^4 + 2*q^2*p`.
impl fmt::Display for PQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let sep = match (idx, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            f.write_str(sep)?;
            let magnitude = c.abs();
            let bare = i == 0 && j == 0;
            let mut wrote = false;
            if bare || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
                wrote = true;
            }
            write_var(f, "q", i, wrote)?;
            wrote |= i > 0;
            write_var(f, "p", j, wrote)?;
        }
        Ok(())
    }
}
