use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::walk::{ColumnOptions, Opt};
use super::{FerrersBoard, PlacedTiling, TilingTable};
use crate::fibtiles::fib;
use crate::qalgebra::{qbracket, QPoly};
use crate::{Error, Result};

/// A Fibonacci file placement: each chosen column holds a tiling of the
/// column's full height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilePlacement {
    entries: Vec<PlacedTiling>,
}

impl FilePlacement {
    pub fn new(entries: Vec<PlacedTiling>) -> Self {
        FilePlacement { entries }
    }

    pub fn entries(&self) -> &[PlacedTiling] {
        &self.entries
    }

    pub fn dump(&self) -> Vec<String> {
        self.entries.iter().map(PlacedTiling::dump_line).collect()
    }
}

/// All file placements with `k` tilings, ordered by column set and then by
/// the ranks of the tilings.
pub fn file_placements(board: &FerrersBoard, k: usize) -> Vec<FilePlacement> {
    let table = TilingTable::for_board(board);
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    collect_files(board, &table, k, 0, &mut stack, &mut out);
    out
}

fn collect_files(
    board: &FerrersBoard,
    table: &TilingTable,
    k: usize,
    start: usize,
    stack: &mut Vec<PlacedTiling>,
    out: &mut Vec<FilePlacement>,
) {
    if stack.len() == k {
        out.push(FilePlacement::new(stack.clone()));
        return;
    }
    for column in start..board.len() {
        let height = board.heights()[column] as usize;
        for (tiling, _) in table.get(height) {
            stack.push(PlacedTiling {
                column,
                height,
                tiling: tiling.clone(),
            });
            collect_files(board, table, k, column + 1, stack, out);
            stack.pop();
        }
    }
}

/// Exponent of the weight of `placement`: the tiling ranks, plus
/// `F_{b_j}` for every empty column `j` unless `barred`.
pub fn file_weight(board: &FerrersBoard, placement: &FilePlacement, barred: bool) -> Result<usize> {
    let mut prev: Option<usize> = None;
    let mut exp = 0;
    let mut tiled = vec![false; board.len()];
    for e in placement.entries() {
        if prev.is_some_and(|p| e.column <= p) || e.column >= board.len() {
            return Err(Error::InvalidPlacement(alloc::format!("column {} out of order or range", e.column + 1)));
        }
        let b = board.heights()[e.column] as usize;
        if e.tiling.height() != b || e.height != b {
            return Err(Error::InvalidPlacement(alloc::format!(
                "column {} needs a tiling of height {b}",
                e.column + 1
            )));
        }
        prev = Some(e.column);
        tiled[e.column] = true;
        exp += e.rank() as usize;
    }
    if !barred {
        exp += board
            .heights()
            .iter()
            .zip(&tiled)
            .filter(|(_, &t)| !t)
            .map(|(&b, _)| fib(b as usize) as usize)
            .sum::<usize>();
    }
    Ok(exp)
}

fn file_options(board: &FerrersBoard, barred: bool) -> ColumnOptions {
    let table = TilingTable::for_board(board);
    let per_column = board
        .heights()
        .iter()
        .map(|&b| {
            let b = b as usize;
            let mut opts = vec![Opt {
                exp: if barred { 0 } else { fib(b) as usize },
                negative: false,
                tiles: false,
            }];
            opts.extend(table.get(b).iter().map(|&(_, rank)| Opt {
                exp: rank as usize,
                negative: false,
                tiles: true,
            }));
            vec![opts]
        })
        .collect();
    ColumnOptions::new(per_column)
}

/// `FT_k(B, q)`, or `FTbar_k(B, q)` when `barred`, summed over every file
/// placement.
pub fn file_poly(board: &FerrersBoard, k: usize, barred: bool) -> QPoly {
    if k > board.len() {
        return QPoly::zero();
    }
    file_options(board, barred).sum(Some(k)).swap_remove(k)
}

/// `FT_k` (or `FTbar_k`) for every `k = 0..=n` from a single walk.
pub fn file_poly_all(board: &FerrersBoard, barred: bool) -> Vec<QPoly> {
    file_options(board, barred).sum(None)
}

/// Same value as [`file_poly`], by peeling off the last column:
/// `FT_k(B) = q^{F_{b_n}} FT_k(B^-) + [F_{b_n}]_q FT_{k-1}(B^-)`, and the
/// barred version without the `q^{F_{b_n}}`.
pub fn file_poly_rec(board: &FerrersBoard, k: usize, barred: bool) -> QPoly {
    peel_files(board.heights(), k, barred)
}

fn peel_files(heights: &[u32], k: usize, barred: bool) -> QPoly {
    let Some((&last, rest)) = heights.split_last() else {
        return if k == 0 { QPoly::one() } else { QPoly::zero() };
    };
    if k > heights.len() {
        return QPoly::zero();
    }
    let f = fib(last as usize);
    let keep_empty = peel_files(rest, k, barred);
    let mut out = if barred { keep_empty } else { keep_empty.shift(f as usize) };
    if k > 0 {
        out += &qbracket(f) * &peel_files(rest, k - 1, barred);
    }
    out
}

/// Coefficient of `z^k` in `prod (1 + [F_{b_i}]_q z)` (barred) or
/// `prod (q^{F_{b_i}} + [F_{b_i}]_q z)`. The heights need not be sorted.
pub fn file_poly_z(heights: &[u32], k: usize, barred: bool) -> QPoly {
    // coefficients of z^0, z^1, ... of the running product
    let mut product = vec![QPoly::one()];
    for &b in heights {
        let f = fib(b as usize);
        let constant = if barred { QPoly::one() } else { QPoly::q_pow(f as usize) };
        let linear = qbracket(f);
        let mut next = vec![QPoly::zero(); product.len() + 1];
        for (j, c) in product.iter().enumerate() {
            next[j] += c * &constant;
            next[j + 1] += c * &linear;
        }
        product = next;
    }
    product.get(k).cloned().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibtiles::Tiling;

    fn board(s: &str) -> FerrersBoard {
        s.parse().unwrap()
    }

    #[test]
    fn placement_counts() {
        assert_eq!(file_placements(&board("F(1,2)"), 1).len(), 2);
        assert!(file_placements(&board("F(0,1)"), 2).is_empty());
        assert_eq!(file_placements(&board("F(0,1)"), 0), vec![FilePlacement::new(Vec::new())]);
        // F_2 F_3 F_4 + ... : choose 3 of 5 columns with heights 2,3,4,4,5
        let count = file_placements(&board("F(2,3,4,4,5)"), 3).len();
        let f = [1u64, 2, 3, 3, 5];
        let mut expected = 0;
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    expected += f[a] * f[b] * f[c];
                }
            }
        }
        assert_eq!(count as u64, expected);
    }

    #[test]
    fn pictured_file_placement_exists() {
        // three tilings with seven height-1 tiles and two height-2 tiles
        let placements = file_placements(&board("F(2,3,4,4,5)"), 3);
        assert!(placements.iter().any(|p| {
            let (one, two) = p.entries().iter().fold((0, 0), |(o, t), e| {
                let (a, b) = e.tiling.stats();
                (o + a, t + b)
            });
            one == 7 && two == 2
        }));
    }

    #[test]
    fn ordering_is_by_columns_then_rank() {
        let ps = file_placements(&board("F(3,3)"), 1);
        let keys: Vec<(usize, u64)> = ps.iter().map(|p| (p.entries()[0].column, p.entries()[0].rank())).collect();
        assert_eq!(keys, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn small_polynomials() {
        let b = board("F(1,2)");
        assert_eq!(file_poly(&b, 0, true), QPoly::one());
        assert_eq!(file_poly(&b, 0, false), QPoly::q_pow(2));
        assert_eq!(file_poly(&b, 1, true), QPoly::constant(2));
        assert_eq!(file_poly(&b, 1, false), QPoly::monomial(2, 1));
        assert_eq!(file_poly(&FerrersBoard::staircase(4), 1, true), QPoly::from_i64s(&[3, 1]));
        assert!(file_poly(&b, 3, true).is_zero());
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(file_poly_rec(&board("F(1,2)"), 1, false), QPoly::monomial(2, 1));
        assert_eq!(file_poly_rec(&board("F(1)"), 1, true), QPoly::one());
        assert_eq!(file_poly_rec(&board("F(2,3,5)"), 0, true), QPoly::one());
    }

    #[test]
    fn product_examples() {
        assert_eq!(file_poly_z(&[1, 2], 1, false), QPoly::monomial(2, 1));
        assert_eq!(file_poly_z(&[1, 1, 1], 2, true), QPoly::constant(3));
        assert_eq!(file_poly_z(&[0, 1, 2, 3], 1, true), QPoly::from_i64s(&[3, 1]));
        // skyline heights are allowed
        assert_eq!(file_poly_z(&[3, 1], 1, true), file_poly_z(&[1, 3], 1, true));
    }

    #[test]
    fn weights_of_single_placements() {
        let b = board("F(1,3)");
        let p = FilePlacement::new(vec![PlacedTiling {
            column: 1,
            height: 3,
            tiling: Tiling::new(vec![1, 2]).unwrap(),
        }]);
        assert_eq!(file_weight(&b, &p, true).unwrap(), 1);
        assert_eq!(file_weight(&b, &p, false).unwrap(), 2);
        let wrong = FilePlacement::new(vec![PlacedTiling {
            column: 0,
            height: 3,
            tiling: Tiling::new(vec![1, 2]).unwrap(),
        }]);
        assert!(file_weight(&b, &wrong, true).is_err());
    }

    #[test]
    fn all_k_walk_matches_single_k() {
        let b = board("F(0,2,3,3,4)");
        for barred in [true, false] {
            let all = file_poly_all(&b, barred);
            for (k, poly) in all.iter().enumerate() {
                assert_eq!(poly, &file_poly(&b, k, barred));
            }
        }
    }
}
