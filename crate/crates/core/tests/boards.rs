use fibo_rook_core::boards::*;
use fibo_rook_core::fibtiles::enumerate_tilings;
use fibo_rook_core::{fib, qbracket, FerrersBoard, QPoly};
use proptest::prelude::*;

fn ferrers(max_len: usize, max_height: u32) -> impl Strategy<Value = FerrersBoard> {
    proptest::collection::vec(0..=max_height, 0..=max_len).prop_map(|mut h| {
        h.sort_unstable();
        FerrersBoard::new(h).unwrap()
    })
}

/// `RTbar_k` from scratch: choose columns, multiply `[F_e]` over the
/// effective heights. Independent of the placement walker.
fn rook_bar_oracle(board: &FerrersBoard, k: usize) -> QPoly {
    let n = board.len();
    let mut total = QPoly::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut term = QPoly::one();
        let mut s = 0;
        for col in 0..n {
            if mask & (1 << col) != 0 {
                let e = board.heights()[col - s] as usize;
                term = &term * &qbracket(fib(e));
                s += 1;
            }
        }
        total += term;
    }
    total
}

#[test]
fn staircase_counts_at_one() {
    // row sums of cFbar at q = 1: prod (1 + F_i) over i < n
    for n in 1..=8u32 {
        let b = FerrersBoard::staircase(n);
        let total: QPoly = file_poly_all(&b, true).into_iter().sum();
        let expected: u64 = (1..n as usize).map(|i| 1 + fib(i)).product();
        assert_eq!(total.eval_at_one(), expected.into());
    }
}

#[test]
fn rook_placements_carry_effective_heights() {
    let boards = ["F(2,3,4,4,5)", "F(1,1,2,3,3)", "F(0,1,2,3,4)", "F(1,2,2,2)", "F(3,3,3,3,3)"];
    for s in boards {
        let b: FerrersBoard = s.parse().unwrap();
        for k in 0..=b.len() {
            for p in rook_placements(&b, k) {
                let out = simulate_cancellation(&b, &p.columns()).unwrap();
                let heights: Vec<usize> = p.entries().iter().map(|e| e.height).collect();
                assert_eq!(out.tiled_heights, heights, "{s} {:?}", p.columns());
                let expected: Vec<usize> = b.heights()[..b.len() - k].iter().map(|&h| h as usize).collect();
                assert_eq!(out.untiled_heights, expected);
            }
        }
    }
}

#[test]
fn file_placements_have_full_height_tilings() {
    let b: FerrersBoard = "F(1,2,3,4)".parse().unwrap();
    for k in 0..=4 {
        let ps = file_placements(&b, k);
        let barred: QPoly = ps.iter().map(|p| QPoly::q_pow(file_weight(&b, p, true).unwrap())).sum();
        assert_eq!(barred, file_poly(&b, k, true));
        for p in &ps {
            for e in p.entries() {
                assert_eq!(e.tiling.height(), b.heights()[e.column] as usize);
                assert!(enumerate_tilings(e.height).contains(&e.tiling));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn file_polynomials_agree(b in ferrers(6, 6)) {
        for barred in [true, false] {
            let all = file_poly_all(&b, barred);
            for k in 0..=b.len() {
                prop_assert_eq!(&all[k], &file_poly_rec(&b, k, barred));
                prop_assert_eq!(&all[k], &file_poly_z(b.heights(), k, barred));
            }
        }
    }

    #[test]
    fn rook_polynomials_agree(b in ferrers(6, 6)) {
        let bar = rook_poly_all(&b, true);
        let unbar = rook_poly_all(&b, false);
        for k in 0..=b.len() {
            prop_assert_eq!(&bar[k], &rook_poly_rec(&b, k, true));
            prop_assert_eq!(&unbar[k], &rook_poly_rec(&b, k, false));
            prop_assert_eq!(&bar[k], &rook_bar_oracle(&b, k));
            prop_assert!(rel_check(&b, k));
        }
    }

    #[test]
    fn counts_at_one(b in ferrers(6, 6)) {
        // coefficient of z^k in prod (1 + F_{b_i} z)
        let mut z = vec![1u64];
        for &h in b.heights() {
            let f = fib(h as usize);
            let mut next = vec![0; z.len() + 1];
            for (j, c) in z.iter().enumerate() {
                next[j] += c;
                next[j + 1] += c * f;
            }
            z = next;
        }
        for (k, c) in z.iter().enumerate() {
            prop_assert_eq!(file_poly(&b, k, true).eval_at_one(), (*c).into());
            prop_assert_eq!(file_placements(&b, k).len() as u64, *c);
        }
    }

    #[test]
    fn product_theorems(b in ferrers(4, 5), x in 1usize..4) {
        let plain: QPoly = b.heights().iter().map(|&h| qbracket(x as u64 + fib(h as usize))).product();
        prop_assert_eq!(mixed_file_sum(&b, x, false), plain);
        let plain_bar: QPoly = b.heights().iter().map(|&h| &qbracket(x as u64) + &qbracket(fib(h as usize))).product();
        prop_assert_eq!(mixed_file_sum(&b, x, true), plain_bar);
        prop_assert_eq!(mixed_aug_sum(&b, x), qbracket(x as u64).pow(b.len() as u32));
        prop_assert!(rook_product_check(&b, x as u64).holds());
    }

    #[test]
    fn cancellation_rule(b in ferrers(5, 5), mask in 0u32..32) {
        let cols: Vec<usize> = (0..b.len()).filter(|c| mask & (1 << c) != 0).collect();
        let out = simulate_cancellation(&b, &cols).unwrap();
        for (s, &c) in cols.iter().enumerate() {
            prop_assert_eq!(out.tiled_heights[s], b.heights()[c - s] as usize);
        }
        let expected: Vec<usize> = b.heights()[..b.len() - cols.len()].iter().map(|&h| h as usize).collect();
        prop_assert_eq!(out.untiled_heights, expected);
    }
}
