//! Fibonacci numbers, Fibonacci tilings of a column and their rank/unrank
//! codec.
//!
//! A tiling of height `n` stacks tiles of height 1 and 2, bottom tile of
//! height 1, so there are `F_n` of them. Reading from the top down, a
//! height-1 tile branches left and a height-2 tile branches right; the rank
//! of a tiling is the number of tilings strictly to its left in that tree,
//! which works out to `sum F_{i-1}` over the levels `i` where a height-2
//! tile ends.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::qalgebra::{PQPoly, QPoly};
use crate::{Error, Result};

const FIB_LEN: usize = 94;

const FIB_TABLE: [u64; FIB_LEN] = {
    let mut t = [0u64; FIB_LEN];
    t[1] = 1;
    let mut i = 2;
    while i < FIB_LEN {
        t[i] = t[i - 1] + t[i - 2];
        i += 1;
    }
    t
};

/// `F_n` with `F_0 = 0`, `F_1 = 1`.
///
/// Panics for `n > 93`, where `F_n` no longer fits in a `u64`.
pub fn fib(n: usize) -> u64 {
    assert!(n < FIB_LEN, "F_{n} overflows u64");
    FIB_TABLE[n]
}

/// A Fibonacci tiling, stored as its tile heights read bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    tiles: Vec<u8>,
}

impl Tiling {
    pub fn new(tiles: Vec<u8>) -> Result<Self> {
        if let Some(bad) = tiles.iter().find(|&&t| t != 1 && t != 2) {
            return Err(Error::InvalidTiling(alloc::format!("tile of height {bad}")));
        }
        if tiles.first().is_some_and(|&t| t != 1) {
            return Err(Error::InvalidTiling("bottom tile must have height 1".into()));
        }
        Ok(Tiling { tiles })
    }

    /// The tiling made only of height-1 tiles; it has rank 0.
    pub fn all_ones(height: usize) -> Self {
        Tiling {
            tiles: vec![1; height],
        }
    }

    pub fn tiles(&self) -> &[u8] {
        &self.tiles
    }

    pub fn height(&self) -> usize {
        self.tiles.iter().map(|&t| t as usize).sum()
    }

    /// `(one, two)`: the number of tiles of height 1 and of height 2.
    pub fn stats(&self) -> (usize, usize) {
        let two = self.tiles.iter().filter(|&&t| t == 2).count();
        (self.tiles.len() - two, two)
    }

    pub fn to_level_seq(&self) -> LevelSeq {
        let mut entries = Vec::with_capacity(self.height());
        for &t in &self.tiles {
            if t == 2 {
                entries.push(0);
            }
            entries.push(t);
        }
        LevelSeq { entries }
    }

    pub fn from_level_seq(seq: &LevelSeq) -> Self {
        Tiling {
            tiles: seq.entries.iter().copied().filter(|&t| t != 0).collect(),
        }
    }
}

/// `seq(T)`: entry `i` is the height of the tile ending at level `i`, or 0
/// when level `i` is the lower half of a height-2 tile.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LevelSeq {
    entries: Vec<u8>,
}

impl LevelSeq {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let fail = |msg: String| Err(Error::InvalidLevelSeq(msg));
        if let Some(&first) = entries.first() {
            if first != 1 {
                return fail(alloc::format!("level 1 must hold a height-1 tile, found {first}"));
            }
        }
        for (i, &t) in entries.iter().enumerate() {
            let level = i + 1;
            match t {
                1 => {}
                2 => {
                    if i == 0 || entries[i - 1] != 0 {
                        return fail(alloc::format!("level {level} ends a height-2 tile but level {} is not covered by it", level - 1));
                    }
                }
                0 => {
                    if entries.get(i + 1) != Some(&2) {
                        return fail(alloc::format!("level {level} is empty but no height-2 tile ends at level {}", level + 1));
                    }
                }
                other => return fail(alloc::format!("entry {other} at level {level}")),
            }
        }
        Ok(LevelSeq { entries })
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Formats as `(1,0,2,1)`.
impl fmt::Display for LevelSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, t) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for LevelSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidLevelSeq(alloc::format!("expected \"(t1,...,tn)\", got {s:?}")))?;
        if inner.trim().is_empty() {
            return LevelSeq::new(Vec::new());
        }
        let entries = inner
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::InvalidLevelSeq(alloc::format!("bad entry {:?}", d.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        LevelSeq::new(entries)
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_level_seq().fmt(f)
    }
}

/// All tilings of height `n`, in rank order. Empty for `n = 0`.
pub fn enumerate_tilings(n: usize) -> Vec<Tiling> {
    // Tilings of heights n-1 and n-2, built up from n = 1, 2.
    let mut prev2: Vec<Tiling> = Vec::new();
    let mut prev1: Vec<Tiling> = Vec::new();
    for h in 1..=n {
        let current = match h {
            1 => vec![Tiling { tiles: vec![1] }],
            2 => vec![Tiling { tiles: vec![1, 1] }],
            _ => {
                let mut out = Vec::with_capacity(prev1.len() + prev2.len());
                for t in &prev1 {
                    let mut tiles = t.tiles.clone();
                    tiles.push(1);
                    out.push(Tiling { tiles });
                }
                for t in &prev2 {
                    let mut tiles = t.tiles.clone();
                    tiles.push(2);
                    out.push(Tiling { tiles });
                }
                out
            }
        };
        prev2 = core::mem::replace(&mut prev1, current);
    }
    prev1
}

/// `F_n(p,q)`: the sum of `q^one(T) p^two(T)` over tilings of height `n`.
pub fn fib_pq(n: usize) -> PQPoly {
    let mut prev2 = PQPoly::zero();
    let mut prev1 = PQPoly::zero();
    for h in 1..=n {
        let current = match h {
            1 => PQPoly::monomial(1, 1, 0),
            2 => PQPoly::monomial(1, 2, 0),
            _ => &prev1.shift(1, 0) + &prev2.shift(0, 1),
        };
        prev2 = core::mem::replace(&mut prev1, current);
    }
    prev1
}

/// Rank of `tiling` among the tilings of height `n`.
pub fn rank(n: usize, tiling: &Tiling) -> Result<u64> {
    let height = tiling.height();
    if height != n {
        return Err(Error::HeightMismatch {
            expected: n,
            actual: height,
        });
    }
    Ok(rank_unchecked(tiling))
}

pub(crate) fn rank_unchecked(tiling: &Tiling) -> u64 {
    let mut level = 0;
    let mut r = 0;
    for &t in &tiling.tiles {
        level += t as usize;
        if t == 2 {
            r += fib(level - 1);
        }
    }
    r
}

/// A Zeckendorf representation: strictly decreasing Fibonacci indices, each
/// at least 2 and no two consecutive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Zeckendorf {
    indices: Vec<usize>,
}

impl Zeckendorf {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn value(&self) -> u64 {
        self.indices.iter().map(|&c| fib(c)).sum()
    }
}

/// Indices separated by single spaces, largest first: `11 6 4`.
impl fmt::Display for Zeckendorf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Greedy Zeckendorf representation of `m`; empty for `m = 0`.
pub fn zeckendorf(mut m: u64) -> Zeckendorf {
    let mut indices = Vec::new();
    while m > 0 {
        let mut k = 2;
        while k + 1 < FIB_LEN && fib(k + 1) <= m {
            k += 1;
        }
        indices.push(k);
        m -= fib(k);
    }
    Zeckendorf { indices }
}

/// The tiling of height `n` with rank `m`.
pub fn unrank(n: usize, m: u64) -> Result<Tiling> {
    let count = fib(n);
    if m >= count {
        return Err(Error::RankOutOfRange {
            height: n,
            rank: m,
            count,
        });
    }
    let mut levels = vec![1u8; n];
    for &c in zeckendorf(m).indices() {
        // a height-2 tile ending at level c+1 covers levels c and c+1
        levels[c] = 2;
        levels[c - 1] = 0;
    }
    Ok(Tiling::from_level_seq(&LevelSeq { entries: levels }))
}

/// `sum_T q^{rank_n(T)}` over the tilings of height `n`.
pub fn rank_gf(n: usize) -> QPoly {
    let mut counts: Vec<i64> = vec![0; fib(n) as usize];
    for t in enumerate_tilings(n) {
        counts[rank_unchecked(&t) as usize] += 1;
    }
    QPoly::from_counts(&counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::qbracket;

    fn seq(s: &str) -> LevelSeq {
        s.parse().unwrap()
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(0), 0);
        assert_eq!(fib(1), 1);
        assert_eq!(fib(7), 13);
        assert_eq!(fib(11), 89);
        assert_eq!(fib(93), 12200160415121876738);
    }

    #[test]
    fn small_enumerations() {
        assert!(enumerate_tilings(0).is_empty());
        assert_eq!(enumerate_tilings(1), vec![Tiling::all_ones(1)]);
        let four: Vec<Vec<u8>> = enumerate_tilings(4).into_iter().map(|t| t.tiles).collect();
        assert_eq!(four, vec![vec![1, 1, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
    }

    #[test]
    fn tile_statistics() {
        assert_eq!(Tiling::all_ones(4).stats(), (4, 0));
        assert_eq!(Tiling::new(vec![1, 2, 1]).unwrap().stats(), (2, 1));
        let t = Tiling::from_level_seq(&seq("(1,0,2,1,1,1,0,2,1)"));
        assert_eq!(t.tiles(), &[1, 2, 1, 1, 1, 2, 1]);
        assert_eq!(t.stats(), (5, 2));
    }

    #[test]
    fn tiling_validation() {
        assert!(Tiling::new(vec![2, 1]).is_err());
        assert!(Tiling::new(vec![1, 3]).is_err());
        assert!(Tiling::new(vec![]).is_ok());
    }

    #[test]
    fn level_seq_validation() {
        assert!(LevelSeq::new(vec![2]).is_err());
        assert!(LevelSeq::new(vec![0, 2]).is_err());
        assert!(LevelSeq::new(vec![1, 2]).is_err());
        assert!(LevelSeq::new(vec![1, 0, 1]).is_err());
        assert!(LevelSeq::new(vec![1, 0]).is_err());
        assert!(LevelSeq::new(vec![1, 3]).is_err());
        assert!(LevelSeq::new(vec![1, 0, 2]).is_ok());
        assert!("1,0,2".parse::<LevelSeq>().is_err());
        assert!("(1,x)".parse::<LevelSeq>().is_err());
        assert_eq!(seq("( 1, 0 ,2 )").to_string(), "(1,0,2)");
    }

    #[test]
    fn pq_statistic() {
        assert_eq!(fib_pq(0), PQPoly::zero());
        assert_eq!(fib_pq(1), PQPoly::monomial(1, 1, 0));
        assert_eq!(fib_pq(2), PQPoly::monomial(1, 2, 0));
        let four = &PQPoly::monomial(1, 4, 0) + &PQPoly::monomial(2, 2, 1);
        assert_eq!(fib_pq(4), four);
    }

    #[test]
    fn worked_rank_examples() {
        assert_eq!(rank(6, &Tiling::all_ones(6)).unwrap(), 0);
        let t = Tiling::from_level_seq(&seq("(1,1,1,0,2,0,2,1,1,1,0,2,1)"));
        assert_eq!(rank(13, &t).unwrap(), 100);
        assert_eq!(rank(13, &t).unwrap(), fib(4) + fib(6) + fib(11));
        // height-2 tiles end at levels 3 and 8: F_2 + F_7 = 14, not 22
        let nine = Tiling::from_level_seq(&seq("(1,0,2,1,1,1,0,2,1)"));
        assert_eq!(rank(9, &nine).unwrap(), 14);
    }

    #[test]
    fn rank_rejects_wrong_height() {
        let err = rank(5, &Tiling::all_ones(4)).unwrap_err();
        assert_eq!(err, Error::HeightMismatch { expected: 5, actual: 4 });
    }

    #[test]
    fn zeckendorf_examples() {
        assert_eq!(zeckendorf(100).indices(), &[11, 6, 4]);
        assert_eq!(zeckendorf(1).indices(), &[2]);
        assert_eq!(zeckendorf(54).indices(), &[9, 7, 5, 3]);
        assert!(zeckendorf(0).indices().is_empty());
        assert_eq!(zeckendorf(100).to_string(), "11 6 4");
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank(13, 100).unwrap().to_level_seq(), seq("(1,1,1,0,2,0,2,1,1,1,0,2,1)"));
        assert_eq!(unrank(7, 0).unwrap(), Tiling::all_ones(7));
        assert_eq!(unrank(5, 4).unwrap().to_level_seq(), seq("(1,0,2,0,2)"));
        assert!(matches!(unrank(5, 5), Err(Error::RankOutOfRange { .. })));
        assert!(unrank(0, 0).is_err());
    }

    #[test]
    fn unrank_five_agrees_with_enumeration_order() {
        let by_rank = enumerate_tilings(5);
        assert_eq!(unrank(5, 4).unwrap(), by_rank[4]);
    }

    #[test]
    fn rank_generating_functions() {
        assert_eq!(rank_gf(1), QPoly::one());
        assert_eq!(rank_gf(5), qbracket(5));
        assert_eq!(rank_gf(9), qbracket(34));
    }
}
