use alloc::vec;
use alloc::vec::Vec;

use super::QPoly;
use crate::{Error, Result};

/// Power series in `t` with [`QPoly`] coefficients, truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeries {
    order: usize,
    coeffs: Vec<QPoly>,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        TSeries {
            order,
            coeffs: vec![QPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = QPoly::one();
        s
    }

    /// Pads with zeros or truncates so that exactly `order + 1` terms remain.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<QPoly>) -> Self {
        coeffs.resize(order + 1, QPoly::zero());
        TSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> &QPoly {
        self.coeffs.get(n).unwrap_or(&super::poly::ZERO)
    }

    /// Truncated Cauchy product. Both operands must share one order.
    pub fn mul(&self, other: &TSeries) -> Result<TSeries> {
        if self.order != other.order {
            return Err(Error::SeriesOrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let mut out = TSeries::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    /// Multiplies by `t^k`, dropping terms that pass the order.
    pub fn shift_t(&self, k: usize) -> TSeries {
        let mut out = TSeries::zero(self.order);
        for n in k..=self.order {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QPoly) -> TSeries {
        TSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// `1/(1 - c t) = sum c^n t^n`, truncated at `t^order`.
pub fn geometric(c: &QPoly, order: usize) -> TSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = QPoly::one();
    for _ in 0..=order {
        let next = &power * c;
        coeffs.push(power);
        power = next;
    }
    TSeries { order, coeffs }
}

/// `1 - c t`, truncated at `t^order`.
pub fn one_minus(c: &QPoly, order: usize) -> TSeries {
    let mut s = TSeries::one(order);
    if order >= 1 {
        s.coeffs[1] = -c;
    }
    s
}
