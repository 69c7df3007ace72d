//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! `ARBOR_ACCEPTANCE_MAX_N` raises the order of the conjecture sweeps (default
//! 14, up to 20); `ARBOR_THREADS` sets the worker count.

mod support;

use std::time::{Duration, Instant};

use arbor::closed_forms::{ln_enclosure, path_p, path_q, path_rr, star_p, star_q, star_rr};
use arbor::values::{argmax, min_odd_component_moves, oo_closed_form};
use arbor::verifier::{CheckKind, Status, SweepOptions, SweepReport, Verdict, Verifier};
use arbor::{canonical_key, count_trees, enumerate_trees, monte_carlo, MemoTable, PlayModel, Prob, StoppingDist, Tree};
use num_rational::BigRational;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn threads() -> usize {
    std::env::var("ARBOR_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn p(num: i64, den: i64) -> Prob {
    Prob::new(num, den)
}

fn small_paths() -> Outcome {
    let ps = [p(1, 1), p(1, 2), p(2, 3), p(7, 12), p(3, 5), p(53, 90), p(37, 63)];
    let qs = [p(0, 1), p(1, 2), p(4, 9), p(1, 2), p(38, 75), p(14, 27), p(386, 735)];
    let start = Instant::now();
    let memo = MemoTable::new();
    for n in 1..=7 {
        let c = memo.class_values(&Tree::path(n));
        if path_p(n) != ps[n - 1] || c.p_first != ps[n - 1] {
            return fail(format!("p_{n} = {}", path_p(n)));
        }
        if path_q(n) != qs[n - 1] || c.q_second != qs[n - 1] {
            return fail(format!("q_{n} = {}", path_q(n)));
        }
    }
    let t = start.elapsed();
    if t >= Duration::from_secs(1) {
        return fail(format!("took {t:?}"));
    }
    pass(format!("exact, {t:?}"))
}

fn oo_theorem(v: &Verifier) -> Outcome {
    let start = Instant::now();
    let mut classes = 0;
    for n in 1..=12 {
        let r = v.oo_closed_form(n).expect("valid order");
        classes += r.class_count;
        if r.verdict() != Verdict::Pass {
            return fail(format!("n = {n}: {:?}", failed_checks(&r)));
        }
    }
    let t = start.elapsed();
    if t >= Duration::from_secs(60) {
        return fail(format!("took {t:?}"));
    }
    pass(format!("{classes} classes, n <= 12, {t:?}"))
}

fn closed_forms() -> Outcome {
    let start = Instant::now();
    let memo = MemoTable::new();
    for n in 1..=30 {
        let s = memo.class_values(&Tree::star(n));
        let q = memo.class_values(&Tree::path(n));
        let ok = s.p_first == star_p(n)
            && s.q_second == star_q(n)
            && s.rr == star_rr(n)
            && q.p_first == path_p(n)
            && q.q_second == path_q(n)
            && q.rr == path_rr(n)
            && s.oo == oo_closed_form(n)
            && q.oo == oo_closed_form(n);
        if !ok {
            return fail(format!("mismatch at n = {n}"));
        }
    }
    let t = start.elapsed();
    if t >= Duration::from_secs(60) {
        return fail(format!("took {t:?}"));
    }
    pass(format!("stars and paths n <= 30, {t:?}"))
}

fn pendant_pair_tree() -> Outcome {
    let tree: Tree = "9\n0 1\n1 2\n2 3\n3 4\n0 5\n0 6\n4 7\n4 8\n".parse().expect("valid tree");
    let memo = MemoTable::new();
    let (_, moves, per) = memo.value_semirandom_first(&tree);
    let center = p(1, 9) + p(8, 9) * p(9, 16);
    let leaf = p(1, 9) + p(8, 9) * p(12601, 23040);
    if per[2] != center {
        return fail(format!("center {}", per[2]));
    }
    if tree.leaves().any(|l| per[l] != leaf) {
        return fail("leaf value");
    }
    if moves.iter().any(|&m| tree.is_leaf(m)) {
        return fail(format!("argmax {moves:?} contains a leaf"));
    }
    pass(format!("center {center}, leaf {leaf}, argmax {moves:?}"))
}

fn failed_checks(r: &SweepReport) -> Vec<String> {
    r.checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{} ({} witnesses)", c.name, c.witnesses.len()))
        .collect()
}

fn conjecture_sweeps(v: &Verifier, max_n: usize) -> Outcome {
    let start = Instant::now();
    let mut classes = 0;
    for n in 1..=max_n {
        let semi = v.semirandom_bounds(n).expect("valid order");
        classes += semi.class_count;
        if semi.verdict() != Verdict::Pass {
            return fail(format!("semirandom n = {n}: {:?}", failed_checks(&semi)));
        }
        if n >= 2 {
            let rr = v.allrandom_bounds(n).expect("valid order");
            if rr.verdict() != Verdict::Pass {
                return fail(format!("allrandom n = {n}: {:?}", failed_checks(&rr)));
            }
            let extremes = rr.extreme("rr").expect("rr extreme");
            if extremes.min != star_rr(n) || extremes.max != path_rr(n) {
                return fail(format!("allrandom extremes at n = {n}"));
            }
        }
        let e = semi.extreme("p_first").expect("p extreme");
        if e.min != path_p(n) || e.max != star_p(n) {
            return fail(format!("semirandom extremes at n = {n}"));
        }
    }
    let t = start.elapsed();
    if max_n <= 14 && t >= Duration::from_secs(600) {
        return fail(format!("took {t:?}"));
    }
    pass(format!("{classes} classes, n <= {max_n}, {t:?}"))
}

fn limb_sweep(v: &Verifier) -> Outcome {
    let s221 = canonical_key(&Tree::spider(&[2, 2, 1]).expect("valid spider"));
    let mut violators = Vec::new();
    for n in 2..=12 {
        let r = v.limb_lemmas(n).expect("valid order");
        if r.verdict() != Verdict::Pass {
            return fail(format!("n = {n}: {:?}", failed_checks(&r)));
        }
        let ex = r.check("odd_even_exceptions").expect("check present");
        violators.extend(ex.witnesses.iter().map(|w| (n, w.key.clone())));
    }
    if violators != vec![(6, s221.clone())] {
        return fail(format!("violators {violators:?}"));
    }
    pass(format!("n <= 12, sole exception {s221} at n = 6"))
}

fn superadditivity() -> Outcome {
    let q: Vec<Prob> = (0..=200).map(|n| if n == 0 { Prob::zero() } else { path_q(n).scale(n) }).collect();
    let s: Vec<Prob> = (0..=200).map(|n| if n == 0 { Prob::zero() } else { star_q(n).scale(n) }).collect();
    for m in 1..=100 {
        for n in 1..=100 {
            if q[m + n] < &q[m] + &q[n] {
                return fail(format!("path at ({m}, {n})"));
            }
            if s[m + n] < &s[m] + &s[n] {
                return fail(format!("star at ({m}, {n})"));
            }
        }
    }
    pass("1 <= m, n <= 100")
}

fn brute_force_oracle() -> Outcome {
    let memo = MemoTable::new();
    let mut classes = 0;
    for n in 1..=7 {
        for tree in enumerate_trees(n) {
            classes += 1;
            let b = memo.bundle(&tree);
            let o = support::brute_values(&tree);
            let ok = b.oo_value == o.oo
                && b.oo_by_vertex == o.oo_by_vertex
                && b.oo_moves == argmax(&o.oo_by_vertex)
                && b.oo_moves == min_odd_component_moves(&tree)
                && b.p_first == o.p_first
                && b.p_first_by_vertex == o.p_first_by_vertex
                && b.p_first_moves == argmax(&o.p_first_by_vertex)
                && b.q_second == o.q_second
                && b.q_second_by_vertex == o.q_second_by_vertex
                && b.rr_value == o.rr
                && b.rr_by_vertex == o.rr_by_vertex;
            if !ok {
                return fail(format!("mismatch on {}", canonical_key(&tree)));
            }
        }
    }
    pass(format!("{classes} classes, n <= 7"))
}

fn stopping_time() -> Outcome {
    let memo = MemoTable::new();
    for n in 1..=10 {
        for tree in enumerate_trees(n) {
            let d = StoppingDist::compute(&memo, &tree);
            if d.odd_mass() != memo.class_values(&tree).rr || d.total() != Prob::one() {
                return fail(format!("odd mass on {}", canonical_key(&tree)));
            }
        }
    }
    let tol = BigRational::new(1.into(), 1_000_000_000.into());
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());
    let mut worst_star = 0.0f64;
    for n in 10..=120usize {
        let star = memo.expected_stopping_time(&Tree::star(n)).into_ratio();
        let third = BigRational::new(n.into(), 3.into());
        if star > &third + &two || star < &third - &two {
            return fail(format!("star E at n = {n}"));
        }
        worst_star = worst_star.max(((Prob::from_ratio(star) - Prob::from_ratio(third)).to_f64()).abs());
        let path = memo.expected_stopping_time(&Tree::path(n)).into_ratio();
        let ln = ln_enclosure(n, &tol);
        if path < &two * &ln.lo - &three || path > &two * &ln.hi + &three {
            return fail(format!("path E at n = {n}"));
        }
    }
    pass(format!("odd mass n <= 10; E bounds 10 <= n <= 120 (max star gap {worst_star:.3})"))
}

fn fixed_target(v: &Verifier) -> Outcome {
    let memo = MemoTable::new();
    for n in 2..=12 {
        for tree in enumerate_trees(n) {
            for leaf in tree.leaves() {
                if memo.fixed_target_value(&tree, leaf).expect("leaf in range") != Prob::half() {
                    return fail(format!("leaf target on {}", canonical_key(&tree)));
                }
            }
        }
    }
    for n in 1..=10 {
        let r = v.fixed_target(n).expect("valid order");
        let conj = r.check("first_player_at_least_half").expect("check present");
        debug_assert_eq!(conj.kind, CheckKind::Conjecture);
        if r.verdict() != Verdict::Pass {
            return fail(format!("n = {n}: {:?}", failed_checks(&r)));
        }
    }
    pass("leaves exactly 1/2 for 2 <= n <= 12; conjecture holds n <= 10")
}

fn monte_carlo_cases() -> Outcome {
    let memo = MemoTable::new();
    let trees = [
        Tree::path(5),
        Tree::star(6),
        Tree::spider(&[2, 2, 1]).expect("valid spider"),
        Tree::path(9),
        "9\n0 1\n1 2\n2 3\n3 4\n0 5\n0 6\n4 7\n4 8\n".parse().expect("valid tree"),
    ];
    let run = || {
        let mut inside = 0;
        let mut estimates = Vec::new();
        for (i, tree) in trees.iter().enumerate() {
            for (j, model) in PlayModel::ALL.into_iter().enumerate() {
                let seed = 1000 + (4 * i + j) as u64;
                let e = monte_carlo(tree, model, 100_000, seed, &memo).expect("positive trials");
                inside += usize::from(e.within(&model.exact(&memo, tree), 3.0));
                estimates.push(e);
            }
        }
        (inside, estimates)
    };
    let (inside, first) = run();
    let (_, second) = run();
    if first != second {
        return fail("not deterministic");
    }
    if inside < 19 {
        return fail(format!("{inside}/20 within 3 standard errors"));
    }
    pass(format!("{inside}/20 within 3 standard errors, reruns identical"))
}

fn enumeration() -> Outcome {
    let expected = [1, 1, 1, 2, 3, 6, 11, 23];
    for n in 1..=8 {
        let brute = support::brute_classes(n).len();
        let fast = count_trees(n, 1);
        if brute != expected[n - 1] || fast != brute {
            return fail(format!("n = {n}: {fast} vs {brute}"));
        }
    }
    let start = Instant::now();
    let single = count_trees(20, 1);
    let multi = count_trees(20, threads().max(2));
    let four = count_trees(20, 4);
    if single != multi || single != four {
        return fail(format!("n = 20 counts {single}, {multi}, {four}"));
    }
    pass(format!("n <= 8 match brute force; n = 20 count {single} stable, {:?}", start.elapsed()))
}

fn main() {
    let max_n = std::env::var("ARBOR_ACCEPTANCE_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(14usize)
        .clamp(14, 20);
    let verifier = Verifier::new(SweepOptions {
        threads: threads(),
        record_values: false,
    });
    let criteria: Vec<Criterion> = vec![
        ("path values n <= 7", Box::new(small_paths)),
        ("optimal play closed form and move set", Box::new(|| oo_theorem(&verifier))),
        ("star and path closed forms", Box::new(closed_forms)),
        ("nine-vertex pendant pair tree", Box::new(pendant_pair_tree)),
        ("conjecture and bound sweeps", Box::new(|| conjecture_sweeps(&verifier, max_n))),
        ("limb lemma sweep", Box::new(|| limb_sweep(&verifier))),
        ("superadditivity", Box::new(superadditivity)),
        ("brute-force oracle", Box::new(brute_force_oracle)),
        ("stopping time", Box::new(stopping_time)),
        ("fixed target", Box::new(|| fixed_target(&verifier))),
        ("monte carlo consistency", Box::new(monte_carlo_cases)),
        ("enumeration counts", Box::new(enumeration)),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let outcome = run();
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        failures += usize::from(!outcome.ok);
        println!("{tag} {name}: {}", outcome.detail);
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
