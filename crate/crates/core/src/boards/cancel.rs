//! Cell-by-cell cancellation on a Ferrers board.
//!
//! The `s`-th tiling, placed in column `i_s`, cancels the top
//! `b_{j-(s-1)} - b_{j-s}` still-uncancelled cells of every column `j > i_s`.
//! This module replays that literally so the effective-height rule used by
//! the rook enumerator can be checked against it.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::FerrersBoard;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellationOutcome {
    /// Uncancelled height of each tiled column when its tiling was placed.
    pub tiled_heights: Vec<usize>,
    /// Uncancelled heights of the untiled columns, left to right.
    pub untiled_heights: Vec<usize>,
    /// Rows top to bottom: `.` uncancelled, `T` under a tiling, the digit `s`
    /// for a cell cancelled by the `s`-th tiling (`*` past 9).
    pub grid: Vec<String>,
}

/// Places tilings in the given 0-based columns (strictly increasing) and
/// cancels cells as they go.
pub fn simulate_cancellation(board: &FerrersBoard, columns: &[usize]) -> Result<CancellationOutcome> {
    let n = board.len();
    if columns.windows(2).any(|w| w[0] >= w[1]) || columns.last().is_some_and(|&c| c >= n) {
        return Err(Error::InvalidPlacement(format!("columns {columns:?} not increasing within the board")));
    }
    let b = |j: usize| board.heights()[j] as usize;
    // cells[j][r] for row r counted from the bottom: 0 uncancelled, s > 0
    // cancelled by the s-th tiling
    let mut cells: Vec<Vec<usize>> = (0..n).map(|j| vec![0; b(j)]).collect();
    let uncancelled = |col: &[usize]| col.iter().take_while(|&&c| c == 0).count();

    let mut tiled_heights = Vec::with_capacity(columns.len());
    for (idx, &i) in columns.iter().enumerate() {
        let s = idx + 1;
        tiled_heights.push(uncancelled(&cells[i]));
        for j in i + 1..n {
            // 1-based j' = j + 1 gives b_{j'-(s-1)} - b_{j'-s}
            let drop = b(j + 1 - s) - if j >= s { b(j - s) } else { 0 };
            let top = uncancelled(&cells[j]);
            if drop > top {
                return Err(Error::InvalidPlacement(format!(
                    "tiling {s} would cancel {drop} cells of column {} but only {top} remain",
                    j + 1
                )));
            }
            for cell in &mut cells[j][top - drop..top] {
                *cell = s;
            }
        }
    }

    let untiled_heights = (0..n)
        .filter(|j| !columns.contains(j))
        .map(|j| uncancelled(&cells[j]))
        .collect();

    let max = board.max_height() as usize;
    let grid = (0..max)
        .rev()
        .map(|row| {
            (0..n)
                .map(|j| match cells[j].get(row) {
                    None => ' ',
                    Some(0) if columns.contains(&j) && row < tiled_heights[columns.iter().position(|&c| c == j).unwrap()] => 'T',
                    Some(0) => '.',
                    Some(&s) if s <= 9 => char::from(b'0' + s as u8),
                    Some(_) => '*',
                })
                .collect::<String>()
                .trim_end()
                .into()
        })
        .collect();

    Ok(CancellationOutcome {
        tiled_heights,
        untiled_heights,
        grid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pictured_cancellation() {
        let b: FerrersBoard = "F(2,3,4,4,5,5)".parse().unwrap();
        let out = simulate_cancellation(&b, &[0, 2, 4]).unwrap();
        assert_eq!(out.tiled_heights, vec![2, 3, 4]);
        assert_eq!(out.untiled_heights, vec![2, 3, 4]);
    }

    #[test]
    fn grid_render() {
        let b: FerrersBoard = "F(1,2,2)".parse().unwrap();
        let out = simulate_cancellation(&b, &[0]).unwrap();
        // column 2 loses b_2 - b_1 = 1 cell, column 3 loses b_3 - b_2 = 0
        assert_eq!(out.grid, vec![" 1.", "T.."]);
        assert_eq!(out.untiled_heights, vec![1, 2]);
    }

    #[test]
    fn rejects_bad_columns() {
        let b: FerrersBoard = "F(1,2)".parse().unwrap();
        assert!(simulate_cancellation(&b, &[1, 0]).is_err());
        assert!(simulate_cancellation(&b, &[2]).is_err());
    }
}
