mod support;

use arbor::closed_forms::ln_enclosure;
use arbor::{enumerate_trees, MemoTable, Prob, StoppingDist, Tree};
use num_rational::BigRational;
use support::{brute_fixed_target, brute_stopping};

#[test]
fn distribution_matches_sequence_expansion() {
    let memo = MemoTable::new();
    for n in 1..=7 {
        for tree in enumerate_trees(n) {
            let d = StoppingDist::compute(&memo, &tree);
            assert_eq!(d.probs, brute_stopping(&tree), "{tree}");
        }
    }
}

#[test]
fn odd_mass_is_random_play_value() {
    let memo = MemoTable::new();
    for n in 1..=10 {
        for tree in enumerate_trees(n) {
            let d = StoppingDist::compute(&memo, &tree);
            assert_eq!(d.total(), Prob::one());
            assert_eq!(d.odd_mass(), memo.class_values(&tree).rr, "{tree}");
            assert_eq!(d.expectation(), memo.expected_stopping_time(&tree), "{tree}");
        }
    }
}

#[test]
fn expected_time_asymptotics() {
    let memo = MemoTable::new();
    let tol = BigRational::new(1.into(), 1_000_000_000.into());
    for n in 10..=120usize {
        let star = memo.expected_stopping_time(&Tree::star(n)).to_f64();
        assert!((star - n as f64 / 3.0).abs() <= 2.0, "star {n}: {star}");
        let path = memo.expected_stopping_time(&Tree::path(n)).into_ratio();
        let ln = ln_enclosure(n, &tol);
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        assert!(path >= &two * &ln.lo - &three && path <= &two * &ln.hi + &three, "path {n}");
    }
}

#[test]
fn fixed_target_matches_expansion() {
    let memo = MemoTable::new();
    for n in 1..=7 {
        for tree in enumerate_trees(n) {
            for t in 0..n {
                assert_eq!(memo.fixed_target_value(&tree, t).unwrap(), brute_fixed_target(&tree, t), "{tree} target {t}");
            }
        }
    }
}

#[test]
fn leaf_targets_are_fair() {
    let memo = MemoTable::new();
    for n in 2..=12 {
        for tree in enumerate_trees(n) {
            for leaf in tree.leaves() {
                assert_eq!(memo.fixed_target_value(&tree, leaf).unwrap(), Prob::half(), "{tree}");
            }
        }
    }
}
