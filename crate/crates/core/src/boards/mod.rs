//! Ferrers boards and the Fibonacci placements on them.
//!
//! Three placement families live here:
//!
//! - file placements ([`file`]): chosen columns are filled with a full-height
//!   Fibonacci tiling, nothing is cancelled;
//! - rook placements ([`rook`]): the `s`-th tiled column, reading left to
//!   right, holds a tiling of its effective height `b_{i_s - (s-1)}`, and the
//!   untiled columns are left with heights `b_1, ..., b_{n-k}`;
//! - mixed placements ([`mixed`]) on `B_x` (tiling above the bar or a rook in
//!   one of `x` rows below it) and on the augmented board, which adds
//!   sign-reversed flipped tilings under the rook rows.
//!
//! Columns are 0-based in the API and 1-based in every rendered dump.
//! Placement polynomials are computed by walking every placement, one column
//! at a time, and summing the monomial weights; see [`walk`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::fibtiles::{enumerate_tilings, fib, rank_unchecked, Tiling};
use crate::{Error, Result};

mod cancel;
mod file;
mod mixed;
mod rook;
mod walk;

pub use cancel::{simulate_cancellation, CancellationOutcome};
pub use file::{file_placements, file_poly, file_poly_all, file_poly_rec, file_poly_z, file_weight, FilePlacement};
pub use mixed::{
    mixed_aug_sum, mixed_file_sum, mixed_placements, mixed_weight, MixedChoice, MixedMode, MixedPlacement,
};
pub use rook::{
    rel_check, rook_placements, rook_poly, rook_poly_all, rook_poly_rec, rook_product_check, rook_weight,
    ProductCheck, RookPlacement,
};

/// Column heights `b_1 <= b_2 <= ... <= b_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FerrersBoard {
    heights: Vec<u32>,
}

impl FerrersBoard {
    pub fn new(heights: Vec<u32>) -> Result<Self> {
        if let Some(w) = heights.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::NotFerrers(format!("{} is followed by {}", w[0], w[1])));
        }
        Ok(FerrersBoard { heights })
    }

    /// `B_n = F(0, 1, ..., n-1)`.
    pub fn staircase(n: u32) -> Self {
        FerrersBoard {
            heights: (0..n).collect(),
        }
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn max_height(&self) -> u32 {
        self.heights.last().copied().unwrap_or(0)
    }

    /// `sum F_{b_i}` over the first `m` columns.
    pub fn fib_prefix_sum(&self, m: usize) -> usize {
        self.heights[..m].iter().map(|&b| fib(b as usize) as usize).sum()
    }
}

/// Renders as `F(b1,...,bn)`.
impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("F(")?;
        for (i, b) in self.heights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `F(b1,...,bn)` and the staircase shorthand `B(n)`.
impl FromStr for FerrersBoard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidBoard(format!("expected \"F(b1,...,bn)\" or \"B(n)\", got {s:?}"));
        let (head, rest) = s.split_at(s.find('(').ok_or_else(bad)?);
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        match head.trim() {
            "F" => {
                if inner.trim().is_empty() {
                    return FerrersBoard::new(Vec::new());
                }
                let heights = inner
                    .split(',')
                    .map(|h| h.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                FerrersBoard::new(heights)
            }
            "B" => {
                let n = inner.trim().parse::<u32>().map_err(|_| bad())?;
                Ok(FerrersBoard::staircase(n))
            }
            _ => Err(bad()),
        }
    }
}

/// A tiling placed in one column of a file or rook placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedTiling {
    /// 0-based column index.
    pub column: usize,
    /// Height available to the tiling: `b_i` for file placements, the
    /// effective height for rook placements.
    pub height: usize,
    pub tiling: Tiling,
}

impl PlacedTiling {
    pub fn rank(&self) -> u64 {
        rank_unchecked(&self.tiling)
    }

    /// `col=i height=h rank=r`, with a 1-based column.
    pub fn dump_line(&self) -> String {
        format!("col={} height={} rank={}", self.column + 1, self.height, self.rank())
    }
}

/// Every tiling of every height up to `max_height`, paired with its rank.
#[derive(Debug)]
pub(crate) struct TilingTable {
    by_height: Vec<Vec<(Tiling, u64)>>,
}

impl TilingTable {
    pub(crate) fn new(max_height: usize) -> Self {
        let by_height = (0..=max_height)
            .map(|h| {
                enumerate_tilings(h)
                    .into_iter()
                    .map(|t| {
                        let r = rank_unchecked(&t);
                        (t, r)
                    })
                    .collect()
            })
            .collect();
        TilingTable { by_height }
    }

    pub(crate) fn for_board(board: &FerrersBoard) -> Self {
        Self::new(board.max_height() as usize)
    }

    pub(crate) fn get(&self, height: usize) -> &[(Tiling, u64)] {
        &self.by_height[height]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn parse_and_render() {
        let b: FerrersBoard = "F(2,3,4,4,5,5)".parse().unwrap();
        assert_eq!(b.heights(), &[2, 3, 4, 4, 5, 5]);
        assert_eq!(b.to_string(), "F(2,3,4,4,5,5)");
        let st: FerrersBoard = "B(4)".parse().unwrap();
        assert_eq!(st, FerrersBoard::new(vec![0, 1, 2, 3]).unwrap());
        assert_eq!(" F( 1 , 2 ) ".parse::<FerrersBoard>().unwrap().heights(), &[1, 2]);
        assert!("F()".parse::<FerrersBoard>().unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(matches!("F(3,2)".parse::<FerrersBoard>(), Err(Error::NotFerrers(_))));
        assert!("F(1,a)".parse::<FerrersBoard>().is_err());
        assert!("G(1)".parse::<FerrersBoard>().is_err());
        assert!("B(x)".parse::<FerrersBoard>().is_err());
        assert!("F 1,2".parse::<FerrersBoard>().is_err());
    }

    #[test]
    fn prefix_sums() {
        let b: FerrersBoard = "F(2,3,4,4,5,5)".parse().unwrap();
        assert_eq!(b.fib_prefix_sum(3), 6);
        assert_eq!(b.fib_prefix_sum(0), 0);
    }
}
