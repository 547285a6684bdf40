use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{Family, Tables, Triangle};
use crate::boards::{file_poly_all, rook_poly_all, FerrersBoard};
use crate::fibtiles::fib;
use crate::qalgebra::{geometric, qbracket, QPoly, TSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Pass,
    Fail,
    /// The identity's hypotheses exclude this instance.
    Inapplicable,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Outcome::Fail
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Inapplicable => "inapplicable",
        })
    }
}

/// Every cell of row `n` equals the matching placement polynomial on the
/// staircase `B_n`: `cF_{n,k} = FT_{n-k}`, `SF_{n,k} = RT_{n-k}`, and the
/// barred versions likewise.
pub fn interp_check(tables: &Tables, family: Family, n: usize) -> bool {
    let board = FerrersBoard::staircase(n as u32);
    let barred = family.is_barred();
    let polys = match family {
        Family::CF | Family::CFbar => file_poly_all(&board, barred),
        Family::SF | Family::SFbar => rook_poly_all(&board, barred),
    };
    let t = tables.get(family);
    (0..=n).all(|k| t.get(n, k) == &polys[n - k])
}

/// Results for the four defining expansions at one `(n, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConnectionOutcome {
    /// `[x][x+F_1]...[x+F_{n-1}] = sum_k cF_{n,k} [x]^k`
    pub cf: Outcome,
    /// `[x]([x]+[F_1])...([x]+[F_{n-1}]) = sum_k cFbar_{n,k} [x]^k`
    pub cf_bar: Outcome,
    /// `[x]^n = sum_k SF_{n,k} [x][x-F_1]...[x-F_{k-1}]`, needs `x >= F_{n-1}`
    pub sf: Outcome,
    /// `[x]^n = sum_k SFbar_{n,k} [x]([x]-[F_1])...([x]-[F_{k-1}])`
    pub sf_bar: Outcome,
}

impl ConnectionOutcome {
    pub fn outcomes(&self) -> [(&'static str, Outcome); 4] {
        [("cF", self.cf), ("cFbar", self.cf_bar), ("SF", self.sf), ("SFbar", self.sf_bar)]
    }

    pub fn any_fail(&self) -> bool {
        self.outcomes().iter().any(|(_, o)| o.is_fail())
    }
}

pub fn connection_check(tables: &Tables, n: usize, x: u64) -> ConnectionOutcome {
    let bx = qbracket(x);
    let power = |k: usize| bx.pow(k as u32);

    let rising: QPoly = (0..n).map(|i| qbracket(x + fib(i))).product();
    let rising_bar: QPoly = (0..n).map(|i| &bx + &qbracket(fib(i))).product();
    let expand = |t: &Triangle| -> QPoly { (1..=n).map(|k| t.get(n, k) * &power(k)).sum() };
    let lhs_power = power(n);

    let sf = if n >= 1 && x < fib(n - 1) {
        Outcome::Inapplicable
    } else {
        let mut falling = QPoly::one();
        let mut rhs = QPoly::zero();
        for k in 1..=n {
            falling = &falling * &qbracket(x - fib(k - 1));
            rhs += tables.get(Family::SF).get(n, k) * &falling;
        }
        Outcome::from_bool(rhs == lhs_power)
    };

    let mut falling = QPoly::one();
    let mut rhs = QPoly::zero();
    for k in 1..=n {
        falling = &falling * &(&bx - &qbracket(fib(k - 1)));
        rhs += tables.get(Family::SFbar).get(n, k) * &falling;
    }

    ConnectionOutcome {
        cf: Outcome::from_bool(n == 0 || expand(tables.get(Family::CF)) == rising),
        cf_bar: Outcome::from_bool(n == 0 || expand(tables.get(Family::CFbar)) == rising_bar),
        sf,
        sf_bar: Outcome::from_bool(n == 0 || rhs == lhs_power),
    }
}

/// The rising expansion `[x][x+F_1]...[x+F_{n-1}] = sum_k cF_{n,k} [x]^k`
/// against an arbitrary `cF` triangle.
pub fn cf_identity(cf: &Triangle, n: usize, x: u64) -> bool {
    let bx = qbracket(x);
    let rising: QPoly = (0..n).map(|i| qbracket(x + fib(i))).product();
    let rhs: QPoly = (1..=n).map(|k| cf.get(n, k) * &bx.pow(k as u32)).sum();
    n == 0 || rising == rhs
}

fn fib_sum(upto: usize) -> usize {
    (1..=upto).map(|i| fib(i) as usize).sum()
}

/// `SF_{n,k} = q^{F_1 + ... + F_{k-1}} SFbar_{n,k}` for `1 <= k <= n`.
pub fn i1_check(tables: &Tables, n: usize) -> bool {
    (1..=n).all(|k| *tables.get(Family::SF).get(n, k) == tables.get(Family::SFbar).get(n, k).shift(fib_sum(k - 1)))
}

/// One compared value in a [`Report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportItem {
    pub item: String,
    pub n: usize,
    pub k: usize,
    /// Power of `q` for coefficient formulas.
    pub s: Option<usize>,
    pub expected: QPoly,
    pub actual: QPoly,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| i.outcome.is_fail())
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.items.iter().filter(|i| i.outcome == outcome).count()
    }

    fn push(&mut self, item: &str, n: usize, k: usize, s: Option<usize>, expected: QPoly, actual: QPoly, applies: bool) {
        let outcome = if !applies {
            Outcome::Inapplicable
        } else {
            Outcome::from_bool(expected == actual)
        };
        self.items.push(ReportItem {
            item: item.into(),
            n,
            k,
            s,
            expected,
            actual,
            outcome,
        });
    }
}

/// Closed forms for the columns `k = n, n-1, n-2, 1, 2, 3` of `SF` and
/// `SFbar` in row `n`.
pub fn closed_forms_check(tables: &Tables, n: usize) -> Report {
    let sf = |k: usize| tables.get(Family::SF).get(n, k).clone();
    let bar = |k: usize| tables.get(Family::SFbar).get(n, k).clone();
    let brackets = |range: core::ops::RangeInclusive<usize>| -> QPoly { range.map(|i| qbracket(fib(i))).sum() };
    let mut r = Report::default();

    r.push("SFbar(n,n) = 1", n, n, None, QPoly::one(), bar(n), n >= 1);
    r.push("SF(n,n) = q^(F_1+...+F_(n-1))", n, n, None, QPoly::q_pow(fib_sum(n.saturating_sub(1))), sf(n), n >= 1);

    let k = n.saturating_sub(1);
    let single = if n >= 1 { brackets(1..=n - 1) } else { QPoly::zero() };
    r.push("SFbar(n,n-1) = sum [F_i]", n, k, None, single.clone(), bar(k), n >= 3);
    r.push("SF(n,n-1) = q^(F_1+...+F_(n-2)) sum [F_i]", n, k, None, single.shift(fib_sum(n.saturating_sub(2))), sf(k), n >= 3);

    let k = n.saturating_sub(2);
    let double: QPoly = if n >= 2 {
        (1..=n - 2).map(|i| &qbracket(fib(i)) * &brackets(i..=n - 2)).sum()
    } else {
        QPoly::zero()
    };
    r.push("SFbar(n,n-2) = sum_i [F_i] sum_(j>=i) [F_j]", n, k, None, double.clone(), bar(k), n >= 3);
    r.push("SF(n,n-2) = q^(F_1+...+F_(n-3)) SFbar(n,n-2)", n, k, None, double.shift(fib_sum(n.saturating_sub(3))), sf(k), n >= 3);

    r.push("SFbar(n,1) = 1", n, 1, None, QPoly::one(), bar(1), n >= 1);
    r.push("SF(n,1) = 1", n, 1, None, QPoly::one(), sf(1), n >= 1);

    let m = n.saturating_sub(1) as i64;
    r.push("SFbar(n,2) = n-1", n, 2, None, QPoly::constant(m), bar(2), n >= 2);
    r.push("SF(n,2) = q(n-1)", n, 2, None, QPoly::monomial(m, 1), sf(2), n >= 2);

    let third = if n >= 1 {
        QPoly::from_i64s(&[1, 1]).pow(n as u32 - 1) - QPoly::from_i64s(&[1, m])
    } else {
        QPoly::zero()
    };
    r.push("q^2 SFbar(n,3) = (1+q)^(n-1) - ((n-1)q+1)", n, 3, None, third.clone(), bar(3).shift(2), n >= 3);
    r.push("SF(n,3) = (1+q)^(n-1) - ((n-1)q+1)", n, 3, None, third, sf(3), n >= 3);
    r
}

fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::from(0);
    }
    let b = b.min(a - b);
    let mut out = BigInt::from(1);
    for i in 0..b {
        out = out * (a - i) / (i + 1);
    }
    out
}

/// Low-order coefficients `[q^s] SFbar_{n,k}` for `s = 0..=4` against their
/// binomial formulas; each formula is only applied inside its range.
pub fn coeff_formulas_check(tables: &Tables, n: usize, k: usize) -> Report {
    let cell = tables.get(Family::SFbar).get(n, k);
    let actual = |s: usize| QPoly::constant(cell.coeff(s));
    let (ni, ki) = (n as i64, k as i64);
    let c = |a: i64, b: i64| binom(a, b);
    let mut r = Report::default();

    r.push("[q^0] SFbar(n,k) = C(n-1,k-1)", n, k, Some(0), c(ni - 1, ki - 1).into(), actual(0), n >= k && k >= 1);

    r.push("[q^1] SFbar(n,k) = (k-2) C(n-1,k)", n, k, Some(1), (BigInt::from(ki - 2) * c(ni - 1, ki)).into(), actual(1), n > k && k >= 2);

    for s in 0..=4usize {
        r.push("[q^s] SFbar(n,3) = C(n-1,s+2)", n, 3, Some(s), c(ni - 1, s as i64 + 2).into(), actual(s), k == 3 && n >= 3);
    }

    let e2: BigInt = BigInt::from(ki - 3) * c(ni - 1, ki) + c(ki - 1, 2) * c(ni - 1, ki + 1);
    r.push("[q^2] SFbar(n,k) = (k-3) C(n-1,k) + C(k-1,2) C(n-1,k+1)", n, k, Some(2), e2.into(), actual(2), n >= k && k >= 3);

    let e3: BigInt = BigInt::from(ki - 4) * c(ni - 1, ki)
        + (c(ki - 1, 2) + c(ki - 2, 2) - 1) * c(ni - 1, ki + 1)
        + c(ki, 3) * c(ni - 1, ki + 2);
    r.push("[q^3] SFbar(n,k) binomial sum", n, k, Some(3), e3.into(), actual(3), n >= k && k >= 4);

    let e4: BigInt = BigInt::from(ki - 4) * c(ni - 1, ki)
        + (c(ki - 1, 2) + c(ki - 2, 2) + c(ki - 3, 2) - 3) * c(ni - 1, ki + 1)
        + (BigInt::from(2) * c(ki, 3) + c(ki - 1, 3) - ki + 1) * c(ni - 1, ki + 2)
        + c(ki + 1, 4) * c(ni - 1, ki + 3);
    r.push("[q^4] SFbar(n,k) binomial sum", n, k, Some(4), e4.into(), actual(4), n >= k && k >= 4);
    r
}

/// `sum_n SFbar_{n,k} t^n = t^k / ((1-[F_1]t)...(1-[F_k]t))` through `t^order`,
/// and the same for `SF` with the extra factor `q^{F_1+...+F_{k-1}}`.
pub fn gf_check(tables: &Tables, k: usize, order: usize) -> bool {
    let mut series = TSeries::one(order);
    for i in 1..=k {
        series = series
            .mul(&geometric(&qbracket(fib(i)), order))
            .expect("orders agree");
    }
    let bar = series.shift_t(k);
    let unbar = bar.scale(&QPoly::q_pow(fib_sum(k.saturating_sub(1))));
    (0..=order).all(|n| {
        bar.coeff(n) == tables.get(Family::SFbar).get(n, k) && unbar.coeff(n) == tables.get(Family::SF).get(n, k)
    })
}
