use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::walk::{ColumnOptions, Opt};
use super::{FerrersBoard, TilingTable};
use crate::fibtiles::{fib, rank_unchecked, Tiling};
use crate::qalgebra::QPoly;
use crate::{Error, Result};

/// What one column of a mixed placement holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MixedChoice {
    /// A tiling above the bar.
    Above(Tiling),
    /// A rook in row `r` below the bar, `1 <= r <= x`.
    Rook(usize),
    /// A flipped tiling below the bar (augmented boards only).
    Flipped(Tiling),
}

/// `Plain` is the board `B_x`, `Augmented` is `AugB_x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedMode {
    Plain,
    Augmented,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedPlacement {
    choices: Vec<MixedChoice>,
}

impl MixedPlacement {
    pub fn new(choices: Vec<MixedChoice>) -> Self {
        MixedPlacement { choices }
    }

    pub fn choices(&self) -> &[MixedChoice] {
        &self.choices
    }

    pub fn dump(&self) -> Vec<String> {
        self.choices
            .iter()
            .enumerate()
            .map(|(i, c)| match c {
                MixedChoice::Above(t) => format!("col={} height={} rank={}", i + 1, t.height(), rank_unchecked(t)),
                MixedChoice::Rook(r) => format!("col={} rook_row={r}", i + 1),
                MixedChoice::Flipped(t) => format!("col={} flipped rank={}", i + 1, rank_unchecked(t)),
            })
            .collect()
    }
}

/// Height available in 0-based column `col` with `above` cancelling tilings
/// to its left.
fn available(board: &FerrersBoard, mode: MixedMode, col: usize, above: usize) -> usize {
    match mode {
        MixedMode::Plain => board.heights()[col] as usize,
        MixedMode::Augmented => board.heights()[col - above] as usize,
    }
}

/// Signed weight of `placement` on `B_x` or `AugB_x`.
///
/// A rook in row `r` of a column with available height `h` weighs
/// `q^{r-1}` barred and `q^{F_h + r - 1}` unbarred; tilings weigh
/// `q^rank`, flipped ones `-q^rank`.
pub fn mixed_weight(
    board: &FerrersBoard,
    x: usize,
    placement: &MixedPlacement,
    mode: MixedMode,
    barred: bool,
) -> Result<QPoly> {
    if placement.choices().len() != board.len() {
        return Err(Error::InvalidPlacement(format!(
            "{} choices for {} columns",
            placement.choices().len(),
            board.len()
        )));
    }
    let mut exp = 0;
    let mut negative = false;
    let mut above = 0;
    for (col, choice) in placement.choices().iter().enumerate() {
        let h = available(board, mode, col, above);
        let check_height = |t: &Tiling| {
            if t.height() == h {
                Ok(())
            } else {
                Err(Error::InvalidPlacement(format!("column {} needs a tiling of height {h}", col + 1)))
            }
        };
        match choice {
            MixedChoice::Above(t) => {
                check_height(t)?;
                exp += rank_unchecked(t) as usize;
                if mode == MixedMode::Augmented {
                    above += 1;
                }
            }
            MixedChoice::Rook(r) => {
                if *r == 0 || *r > x {
                    return Err(Error::InvalidPlacement(format!("rook row {r} outside 1..={x}")));
                }
                exp += r - 1;
                if !barred {
                    exp += fib(h) as usize;
                }
            }
            MixedChoice::Flipped(t) => {
                if mode == MixedMode::Plain {
                    return Err(Error::InvalidPlacement(format!(
                        "flipped tiling in column {} of a plain board",
                        col + 1
                    )));
                }
                check_height(t)?;
                exp += rank_unchecked(t) as usize;
                negative = !negative;
            }
        }
    }
    let c = if negative { -1 } else { 1 };
    Ok(QPoly::monomial(c, exp))
}

/// Every mixed placement, columns varying left to right with the leftmost
/// slowest; within a column tilings come first (by rank), then rooks by row,
/// then flipped tilings.
pub fn mixed_placements(board: &FerrersBoard, x: usize, mode: MixedMode) -> Vec<MixedPlacement> {
    let table = TilingTable::for_board(board);
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(board.len());
    collect_mixed(board, &table, x, mode, 0, &mut stack, &mut out);
    out
}

fn collect_mixed(
    board: &FerrersBoard,
    table: &TilingTable,
    x: usize,
    mode: MixedMode,
    above: usize,
    stack: &mut Vec<MixedChoice>,
    out: &mut Vec<MixedPlacement>,
) {
    let col = stack.len();
    if col == board.len() {
        out.push(MixedPlacement::new(stack.clone()));
        return;
    }
    let h = available(board, mode, col, above);
    let advance = (mode == MixedMode::Augmented) as usize;
    for (t, _) in table.get(h) {
        stack.push(MixedChoice::Above(t.clone()));
        collect_mixed(board, table, x, mode, above + advance, stack, out);
        stack.pop();
    }
    for r in 1..=x {
        stack.push(MixedChoice::Rook(r));
        collect_mixed(board, table, x, mode, above, stack, out);
        stack.pop();
    }
    if mode == MixedMode::Augmented {
        for (t, _) in table.get(h) {
            stack.push(MixedChoice::Flipped(t.clone()));
            collect_mixed(board, table, x, mode, above, stack, out);
            stack.pop();
        }
    }
}

fn mixed_options(board: &FerrersBoard, x: usize, mode: MixedMode, barred: bool) -> ColumnOptions {
    let table = TilingTable::for_board(board);
    let column = |h: usize| {
        let tilings = table.get(h);
        let mut opts = Vec::with_capacity(2 * tilings.len() + x);
        opts.extend(tilings.iter().map(|&(_, rank)| Opt {
            exp: rank as usize,
            negative: false,
            tiles: mode == MixedMode::Augmented,
        }));
        let rook_base = if barred { 0 } else { fib(h) as usize };
        opts.extend((0..x).map(|r| Opt {
            exp: rook_base + r,
            negative: false,
            tiles: false,
        }));
        if mode == MixedMode::Augmented {
            opts.extend(tilings.iter().map(|&(_, rank)| Opt {
                exp: rank as usize,
                negative: true,
                tiles: false,
            }));
        }
        opts
    };
    let per_column = (0..board.len())
        .map(|col| match mode {
            MixedMode::Plain => vec![column(board.heights()[col] as usize)],
            MixedMode::Augmented => (0..=col).map(|above| column(available(board, mode, col, above))).collect(),
        })
        .collect();
    ColumnOptions::new(per_column)
}

fn total(options: ColumnOptions) -> QPoly {
    options.sum(None).into_iter().sum()
}

/// Total weight of all mixed placements on `B_x`: `prod [x + F_{b_i}]_q`
/// unbarred and `prod ([x]_q + [F_{b_i}]_q)` barred.
pub fn mixed_file_sum(board: &FerrersBoard, x: usize, barred: bool) -> QPoly {
    total(mixed_options(board, x, MixedMode::Plain, barred))
}

/// Total signed barred weight of all mixed placements on `AugB_x`, which is
/// `[x]_q^n`.
pub fn mixed_aug_sum(board: &FerrersBoard, x: usize) -> QPoly {
    total(mixed_options(board, x, MixedMode::Augmented, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::qbracket;

    fn board(s: &str) -> FerrersBoard {
        s.parse().unwrap()
    }

    fn tiling(tiles: &[u8]) -> Tiling {
        Tiling::new(tiles.to_vec()).unwrap()
    }

    #[test]
    fn plain_sums() {
        assert_eq!(mixed_file_sum(&board("F(1)"), 2, false), qbracket(3));
        assert_eq!(mixed_file_sum(&board("F(1,2)"), 1, true), QPoly::constant(4));
        assert_eq!(mixed_file_sum(&board("F(0)"), 3, false), qbracket(3));
        let b = board("F(1,2,3,4)");
        let expected: QPoly = b.heights().iter().map(|&h| qbracket(2 + fib(h as usize))).product();
        assert_eq!(mixed_file_sum(&b, 2, false), expected);
    }

    #[test]
    fn augmented_sums() {
        assert_eq!(mixed_aug_sum(&board("F(1)"), 2), qbracket(2));
        assert_eq!(mixed_aug_sum(&board("F(1,2)"), 2), QPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(mixed_aug_sum(&board("F(0,1,2)"), 3), qbracket(3).pow(3));
    }

    #[test]
    fn enumeration_agrees_with_walk() {
        let b = board("F(1,2,3)");
        for mode in [MixedMode::Plain, MixedMode::Augmented] {
            for barred in [true, false] {
                let listed: QPoly = mixed_placements(&b, 2, mode)
                    .iter()
                    .map(|p| mixed_weight(&b, 2, p, mode, barred).unwrap())
                    .sum();
                let walked = total(mixed_options(&b, 2, mode, barred));
                assert_eq!(listed, walked);
            }
        }
        assert_eq!(mixed_placements(&board("F(1)"), 2, MixedMode::Augmented).len(), 4);
    }

    #[test]
    fn pictured_augmented_placement() {
        let b = board("F(2,3,4,4,5,5)");
        let flipped_fourth = MixedPlacement::new(vec![
            MixedChoice::Above(tiling(&[1, 1])),
            MixedChoice::Rook(5),
            MixedChoice::Rook(3),
            MixedChoice::Flipped(tiling(&[1, 2, 1])),
            MixedChoice::Above(tiling(&[1, 1, 2])),
            MixedChoice::Rook(5),
        ]);
        let flipped_fifth = MixedPlacement::new(vec![
            MixedChoice::Above(tiling(&[1, 1])),
            MixedChoice::Rook(5),
            MixedChoice::Rook(3),
            MixedChoice::Above(tiling(&[1, 2, 1])),
            MixedChoice::Flipped(tiling(&[1, 1, 2])),
            MixedChoice::Rook(5),
        ]);
        for p in [flipped_fourth, flipped_fifth] {
            assert_eq!(mixed_weight(&b, 7, &p, MixedMode::Augmented, false).unwrap(), QPoly::monomial(-1, 19));
            assert_eq!(mixed_weight(&b, 7, &p, MixedMode::Augmented, true).unwrap(), QPoly::monomial(-1, 13));
        }
    }

    #[test]
    fn rejects_bad_choices() {
        let b = board("F(1,2)");
        let p = MixedPlacement::new(vec![MixedChoice::Rook(3), MixedChoice::Rook(1)]);
        assert!(mixed_weight(&b, 2, &p, MixedMode::Plain, true).is_err());
        let p = MixedPlacement::new(vec![MixedChoice::Flipped(tiling(&[1])), MixedChoice::Rook(1)]);
        assert!(mixed_weight(&b, 2, &p, MixedMode::Plain, true).is_err());
        assert!(mixed_weight(&b, 2, &p, MixedMode::Augmented, true).is_ok());
        let p = MixedPlacement::new(vec![MixedChoice::Rook(1)]);
        assert!(mixed_weight(&b, 2, &p, MixedMode::Plain, true).is_err());
    }

    #[test]
    fn dump_lines() {
        let p = MixedPlacement::new(vec![
            MixedChoice::Above(tiling(&[1, 2])),
            MixedChoice::Rook(2),
            MixedChoice::Flipped(tiling(&[1, 1, 1])),
        ]);
        assert_eq!(
            p.dump(),
            vec!["col=1 height=3 rank=1", "col=2 rook_row=2", "col=3 flipped rank=0"]
        );
    }
}
