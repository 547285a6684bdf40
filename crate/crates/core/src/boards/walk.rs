use alloc::vec;
use alloc::vec::Vec;

use crate::qalgebra::QPoly;

/// One way to fill a column, reduced to what the weight needs.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Opt {
    /// Exponent of `q` this choice contributes.
    pub exp: usize,
    /// Whether the choice carries a factor of -1.
    pub negative: bool,
    /// Whether the choice is a tiling that advances the cancellation state.
    pub tiles: bool,
}

/// The choices available in each column, indexed by column and then by the
/// number of cancelling tilings already placed to its left.
///
/// A column whose choices do not depend on that count stores one list.
pub(crate) struct ColumnOptions {
    per_column: Vec<Vec<Vec<Opt>>>,
}

impl ColumnOptions {
    pub(crate) fn new(per_column: Vec<Vec<Vec<Opt>>>) -> Self {
        ColumnOptions { per_column }
    }

    fn get(&self, col: usize, tiled: usize) -> &[Opt] {
        let states = &self.per_column[col];
        if states.len() == 1 {
            &states[0]
        } else {
            &states[tiled]
        }
    }

    fn max_exp(&self) -> usize {
        self.per_column
            .iter()
            .map(|states| states.iter().flatten().map(|o| o.exp).max().unwrap_or(0))
            .sum()
    }

    /// Visits every placement and tallies its signed monomial weight.
    ///
    /// The result is indexed by the number of cancelling tilings in the
    /// placement. With `target = Some(k)` only placements with exactly `k`
    /// such tilings are visited; the other entries stay zero.
    pub(crate) fn sum(&self, target: Option<usize>) -> Vec<QPoly> {
        let n = self.per_column.len();
        let width = self.max_exp() + 1;
        let mut walker = Walker {
            options: self,
            n,
            target,
            counts: vec![Vec::new(); n + 1],
            width,
        };
        walker.visit(0, 0, 0, false);
        walker.counts.iter().map(|c| QPoly::from_counts(c)).collect()
    }
}

struct Walker<'a> {
    options: &'a ColumnOptions,
    n: usize,
    target: Option<usize>,
    counts: Vec<Vec<i64>>,
    width: usize,
}

impl Walker<'_> {
    fn visit(&mut self, col: usize, tiled: usize, exp: usize, negative: bool) {
        if let Some(k) = self.target {
            if tiled > k || tiled + (self.n - col) < k {
                return;
            }
        }
        if col == self.n {
            let row = &mut self.counts[tiled];
            if row.is_empty() {
                row.resize(self.width, 0);
            }
            row[exp] += if negative { -1 } else { 1 };
            return;
        }
        let options = self.options;
        for opt in options.get(col, tiled) {
            self.visit(col + 1, tiled + opt.tiles as usize, exp + opt.exp, negative ^ opt.negative);
        }
    }
}
