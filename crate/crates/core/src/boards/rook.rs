use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::walk::{ColumnOptions, Opt};
use super::{FerrersBoard, PlacedTiling, TilingTable};
use crate::fibtiles::fib;
use crate::qalgebra::{qbracket, QPoly};
use crate::{Error, Result};

/// A Fibonacci rook placement. Each entry's `height` is the effective
/// height `b_{i_s - (s-1)}` of the `s`-th tiled column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RookPlacement {
    entries: Vec<PlacedTiling>,
}

impl RookPlacement {
    pub fn new(entries: Vec<PlacedTiling>) -> Self {
        RookPlacement { entries }
    }

    pub fn entries(&self) -> &[PlacedTiling] {
        &self.entries
    }

    pub fn columns(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.column).collect()
    }

    pub fn dump(&self) -> Vec<String> {
        self.entries.iter().map(PlacedTiling::dump_line).collect()
    }
}

/// Height left in 0-based column `col` once `tiled` tilings sit to its left.
fn effective_height(board: &FerrersBoard, col: usize, tiled: usize) -> usize {
    board.heights()[col - tiled] as usize
}

/// All rook placements with `k` tilings, ordered by column set and then by
/// tiling ranks.
pub fn rook_placements(board: &FerrersBoard, k: usize) -> Vec<RookPlacement> {
    let table = TilingTable::for_board(board);
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    collect_rooks(board, &table, k, 0, &mut stack, &mut out);
    out
}

fn collect_rooks(
    board: &FerrersBoard,
    table: &TilingTable,
    k: usize,
    start: usize,
    stack: &mut Vec<PlacedTiling>,
    out: &mut Vec<RookPlacement>,
) {
    if stack.len() == k {
        out.push(RookPlacement::new(stack.clone()));
        return;
    }
    for column in start..board.len() {
        let height = effective_height(board, column, stack.len());
        for (tiling, _) in table.get(height) {
            stack.push(PlacedTiling {
                column,
                height,
                tiling: tiling.clone(),
            });
            collect_rooks(board, table, k, column + 1, stack, out);
            stack.pop();
        }
    }
}

/// Exponent of the weight of `placement`: the tiling ranks, plus
/// `F_h` for each untiled column's uncancelled height `h` unless `barred`.
pub fn rook_weight(board: &FerrersBoard, placement: &RookPlacement, barred: bool) -> Result<usize> {
    let mut exp = 0;
    let mut next = placement.entries().iter().peekable();
    let mut tiled = 0;
    for col in 0..board.len() {
        let height = effective_height(board, col, tiled);
        match next.peek() {
            Some(e) if e.column == col => {
                if e.height != height || e.tiling.height() != height {
                    return Err(Error::InvalidPlacement(alloc::format!(
                        "column {} has effective height {height}",
                        col + 1
                    )));
                }
                exp += e.rank() as usize;
                tiled += 1;
                next.next();
            }
            _ => {
                if !barred {
                    exp += fib(height) as usize;
                }
            }
        }
    }
    if let Some(e) = next.next() {
        return Err(Error::InvalidPlacement(alloc::format!("column {} out of order or range", e.column + 1)));
    }
    Ok(exp)
}

fn rook_options(board: &FerrersBoard, barred: bool) -> ColumnOptions {
    let table = TilingTable::for_board(board);
    let per_column = (0..board.len())
        .map(|col| {
            (0..=col)
                .map(|tiled| {
                    let height = effective_height(board, col, tiled);
                    let mut opts = vec![Opt {
                        exp: if barred { 0 } else { fib(height) as usize },
                        negative: false,
                        tiles: false,
                    }];
                    opts.extend(table.get(height).iter().map(|&(_, rank)| Opt {
                        exp: rank as usize,
                        negative: false,
                        tiles: true,
                    }));
                    opts
                })
                .collect()
        })
        .collect();
    ColumnOptions::new(per_column)
}

/// `RT_k(B, q)`, or `RTbar_k(B, q)` when `barred`, summed over every rook
/// placement.
pub fn rook_poly(board: &FerrersBoard, k: usize, barred: bool) -> QPoly {
    if k > board.len() {
        return QPoly::zero();
    }
    rook_options(board, barred).sum(Some(k)).swap_remove(k)
}

/// `RT_k` (or `RTbar_k`) for every `k = 0..=n` from a single walk.
pub fn rook_poly_all(board: &FerrersBoard, barred: bool) -> Vec<QPoly> {
    rook_options(board, barred).sum(None)
}

/// Same value as [`rook_poly`] from
/// `RTbar_k(B) = RTbar_k(B^-) + [F_{b_{n-k+1}}]_q RTbar_{k-1}(B^-)`;
/// the unbarred polynomial is `q^{F_{b_1} + ... + F_{b_{n-k}}}` times it.
pub fn rook_poly_rec(board: &FerrersBoard, k: usize, barred: bool) -> QPoly {
    let n = board.len();
    if k > n {
        return QPoly::zero();
    }
    let bar = peel_rooks(board.heights(), k);
    if barred {
        bar
    } else {
        bar.shift(board.fib_prefix_sum(n - k))
    }
}

fn peel_rooks(heights: &[u32], k: usize) -> QPoly {
    let n = heights.len();
    if k == 0 {
        return QPoly::one();
    }
    if k > n {
        return QPoly::zero();
    }
    let rest = &heights[..n - 1];
    let last_height = heights[n - k] as usize;
    peel_rooks(rest, k) + &qbracket(fib(last_height)) * &peel_rooks(rest, k - 1)
}

/// `RT_k(B) = q^{F_{b_1} + ... + F_{b_{n-k}}} RTbar_k(B)` on the enumerated
/// polynomials.
pub fn rel_check(board: &FerrersBoard, k: usize) -> bool {
    if k > board.len() {
        return rook_poly(board, k, false).is_zero();
    }
    let shift = board.fib_prefix_sum(board.len() - k);
    rook_poly(board, k, false) == rook_poly(board, k, true).shift(shift)
}

/// Outcome of [`rook_product_check`]. `unbarred` is `None` when
/// `x < F_{b_n}`, where `[x - F_{b_i}]_q` would have a negative argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductCheck {
    pub barred: bool,
    pub unbarred: Option<bool>,
}

impl ProductCheck {
    pub fn holds(&self) -> bool {
        self.barred && self.unbarred != Some(false)
    }
}

/// Checks `[x]^n = sum_k RTbar_{n-k}(B) prod_{i<=k} ([x] - [F_{b_i}])` and,
/// when `x >= F_{b_n}`, `[x]^n = sum_k RT_{n-k}(B) prod_{i<=k} [x - F_{b_i}]`,
/// using the enumerated rook polynomials.
pub fn rook_product_check(board: &FerrersBoard, x: u64) -> ProductCheck {
    let n = board.len();
    let bx = qbracket(x);
    let lhs = bx.pow(n as u32);
    let bar = rook_poly_all(board, true);
    let unbar = rook_poly_all(board, false);
    let fibs: Vec<u64> = board.heights().iter().map(|&b| fib(b as usize)).collect();

    let mut barred_rhs = QPoly::zero();
    let mut falling = QPoly::one();
    for k in 0..=n {
        if k > 0 {
            falling = &falling * &(&bx - &qbracket(fibs[k - 1]));
        }
        barred_rhs += &bar[n - k] * &falling;
    }

    let unbarred = (x >= fibs.last().copied().unwrap_or(0)).then(|| {
        let mut rhs = QPoly::zero();
        let mut falling = QPoly::one();
        for k in 0..=n {
            if k > 0 {
                falling = &falling * &qbracket(x - fibs[k - 1]);
            }
            rhs += &unbar[n - k] * &falling;
        }
        rhs == lhs
    });

    ProductCheck {
        barred: barred_rhs == lhs,
        unbarred,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibtiles::Tiling;

    fn board(s: &str) -> FerrersBoard {
        s.parse().unwrap()
    }

    #[test]
    fn effective_heights_of_pictured_placement() {
        let b = board("F(2,3,4,4,5,5)");
        let ps = rook_placements(&b, 3);
        let p = ps.iter().find(|p| p.columns() == vec![0, 2, 4]).unwrap();
        let heights: Vec<usize> = p.entries().iter().map(|e| e.height).collect();
        assert_eq!(heights, vec![2, 3, 4]);
    }

    #[test]
    fn pictured_weights() {
        let b = board("F(2,3,4,4,5,5)");
        let entry = |column, height, tiles: &[u8]| PlacedTiling {
            column,
            height,
            tiling: Tiling::new(tiles.to_vec()).unwrap(),
        };
        let p = RookPlacement::new(vec![
            entry(0, 2, &[1, 1]),
            entry(2, 3, &[1, 2]),
            entry(4, 4, &[1, 1, 2]),
        ]);
        let ranks: Vec<u64> = p.entries().iter().map(PlacedTiling::rank).collect();
        assert_eq!(ranks, vec![0, 1, 2]);
        assert_eq!(rook_weight(&b, &p, false).unwrap(), 9);
        assert_eq!(rook_weight(&b, &p, true).unwrap(), 3);
    }

    #[test]
    fn invalid_rook_placement() {
        let b = board("F(2,3)");
        let p = RookPlacement::new(vec![PlacedTiling {
            column: 1,
            height: 3,
            tiling: Tiling::new(vec![1, 1, 1]).unwrap(),
        }]);
        assert!(rook_weight(&b, &p, true).is_ok());
        let q = RookPlacement::new(vec![
            PlacedTiling {
                column: 0,
                height: 2,
                tiling: Tiling::all_ones(2),
            },
            PlacedTiling {
                column: 1,
                height: 3,
                tiling: Tiling::all_ones(3),
            },
        ]);
        assert!(rook_weight(&b, &q, true).is_err());
    }

    #[test]
    fn full_staircase_has_no_placements() {
        for n in 1..6 {
            assert!(rook_placements(&FerrersBoard::staircase(n), n as usize).is_empty());
        }
    }

    #[test]
    fn small_boards() {
        let ps = rook_placements(&board("F(1,2)"), 2);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].entries().iter().map(|e| e.height).collect::<Vec<_>>(), vec![1, 1]);
        assert_eq!(rook_poly(&FerrersBoard::staircase(4), 1, true), QPoly::from_i64s(&[3, 1]));
        for n in 2..7u32 {
            assert_eq!(rook_poly(&FerrersBoard::staircase(n), n as usize - 1, true), QPoly::one());
        }
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(rook_poly_rec(&FerrersBoard::staircase(5), 2, true), QPoly::from_i64s(&[6, 4, 1]));
        assert_eq!(rook_poly_rec(&board("F(1,2)"), 1, true), QPoly::constant(2));
        let b = board("F(2,3,4)");
        assert_eq!(rook_poly_rec(&b, 0, false), QPoly::q_pow(1 + 2 + 3));
    }

    #[test]
    fn rel_examples() {
        assert!(rel_check(&FerrersBoard::staircase(6), 2));
        assert!(rel_check(&board("F(2,3,4,4,5,5)"), 3));
        assert!(rel_check(&board("F(1)"), 1));
    }

    #[test]
    fn product_examples() {
        let c = rook_product_check(&FerrersBoard::staircase(4), 3);
        assert_eq!(c, ProductCheck { barred: true, unbarred: Some(true) });
        let c = rook_product_check(&board("F(1,2)"), 1);
        assert_eq!(c, ProductCheck { barred: true, unbarred: Some(true) });
        assert!(rook_product_check(&board("F(1)"), 1).holds());
        let c = rook_product_check(&board("F(2,5)"), 3);
        assert_eq!(c.unbarred, None);
        assert!(c.holds());
    }
}
