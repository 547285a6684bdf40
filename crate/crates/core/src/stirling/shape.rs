use crate::fibtiles::fib;
use crate::qalgebra::{qbracket, QPoly};

/// Whether a coefficient sequence has a shape property, and if not, the
/// first index where it breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub first_violation: Option<usize>,
}

impl Verdict {
    fn from_violation(first_violation: Option<usize>) -> Self {
        Verdict {
            holds: first_violation.is_none(),
            first_violation,
        }
    }
}

/// `a_0 <= ... <= a_m >= ... >= a_d`. The violation is the first index that
/// rises again after a fall.
pub fn unimodality(p: &QPoly) -> Verdict {
    let c = p.coeffs();
    let mut fallen = false;
    let first = (1..c.len()).find(|&i| {
        if c[i] < c[i - 1] {
            fallen = true;
        }
        fallen && c[i] > c[i - 1]
    });
    Verdict::from_violation(first)
}

/// `a_i^2 >= a_{i-1} a_{i+1}` for every `i`, with zeros outside the degree
/// range.
pub fn log_concavity(p: &QPoly) -> Verdict {
    let d = p.coeffs().len();
    let first = (0..d).find(|&i| {
        let prev = if i == 0 { Default::default() } else { p.coeff(i - 1) };
        let a = p.coeff(i);
        &a * &a < prev * p.coeff(i + 1)
    });
    Verdict::from_violation(first)
}

/// `[F_1]_q [F_2]_q ... [F_{n-1}]_q`.
pub fn chain_product(n: usize) -> QPoly {
    (1..n).map(|i| qbracket(fib(i))).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let v = unimodality(&QPoly::from_i64s(&[21, 28, 31, 29, 30, 25]));
        assert_eq!(v, Verdict { holds: false, first_violation: Some(4) });
        assert!(unimodality(&qbracket(5)).holds);
        assert!(log_concavity(&qbracket(5)).holds);
        assert!(unimodality(&QPoly::zero()).holds);
        assert!(!unimodality(&QPoly::from_i64s(&[1, 0, 1])).holds);
        let v = log_concavity(&QPoly::from_i64s(&[1, 1, 3]));
        assert_eq!(v.first_violation, Some(1));
    }

    #[test]
    fn chains() {
        assert!(chain_product(3).is_one());
        assert!(chain_product(1).is_one());
        assert_eq!(chain_product(5), QPoly::from_i64s(&[1, 2, 2, 1]));
        let p = chain_product(9);
        assert_eq!(p.degree(), Some(46));
        assert!(p.is_palindromic());
        assert!(unimodality(&p).holds);
    }
}
