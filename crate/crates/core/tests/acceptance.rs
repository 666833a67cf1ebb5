//! One test per acceptance criterion, each checked exactly and against its
//! runtime budget.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use bintab::bintree::{decode, encode, Tree};
use bintab::induction::{bu, run_instrumented, td, Algorithm};
use bintab::problems::{brute_force_removal_oracle, digest_problem, min_removal_cost_problem, Cost};
use bintab::tabulate::{blank, cd_classic, check_rotation, check_spec_equation, choose, retabulate};
use bintab::verify::{random_skeleton, random_text};
use common::{pascal, td_calls_by_recursion};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn within<T>(budget: Duration, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    assert!(took <= budget, "took {took:?}, budget {budget:?}");
    out
}

fn key(s: &str) -> Vec<char> {
    s.chars().collect()
}

#[test]
fn criterion_01_golden_structure() {
    let expected = Tree::bin(
        Tree::bin(Tree::tip_s(key("cd")), Tree::bin(Tree::tip_s(key("bd")), Tree::tip_z(key("bc")))),
        Tree::bin(Tree::bin(Tree::tip_s(key("ad")), Tree::tip_z(key("ac"))), Tree::tip_z(key("ab"))),
    );
    let t = within(Duration::from_millis(1), || choose(2, &key("abcd")).unwrap());
    assert_eq!(t, expected);
    let order: Vec<String> = t.flatten().into_iter().map(|k| k.into_iter().collect()).collect();
    assert_eq!(order, ["cd", "bd", "bc", "ad", "ac", "ab"]);
}

fn left_spine_sizes(t: &Tree<()>) -> Vec<usize> {
    let mut sizes = vec![t.size()];
    let mut cur = t;
    while let Tree::Bin(l, _) = cur {
        sizes.push(l.size());
        cur = l;
    }
    sizes.reverse();
    sizes
}

#[test]
fn criterion_02_shape_and_size() {
    within(Duration::from_secs(1), || {
        for n in 0..=12 {
            for k in 0..=n {
                let b = blank(n, k).unwrap();
                assert!(b.validate_shape(n, k), "n={n} k={k}");
                assert_eq!(b.size() as u64, pascal(n, k), "n={n} k={k}");
            }
        }
        let diagonals: Vec<Vec<usize>> = (1..=3).map(|k| left_spine_sizes(&blank(4, k).unwrap())).collect();
        assert_eq!(diagonals, [vec![1, 2, 3, 4], vec![1, 3, 6], vec![1, 4]]);
    });
}

#[test]
fn criterion_03_spec_equation() {
    within(Duration::from_secs(10), || {
        for n in 1..=9usize {
            let xs: Vec<char> = key("abcdefghi")[..n].to_vec();
            for k in 0..n {
                let level = choose(k, &xs).unwrap();
                let expected = choose(k + 1, &xs).unwrap().map(|ys| choose(k, ys).unwrap());
                assert_eq!(retabulate(n, k, &level).unwrap(), expected, "retabulate n={n} k={k}");
                if k >= 1 {
                    assert_eq!(cd_classic(&level).unwrap(), expected.map(|t| t.flatten()), "cd n={n} k={k}");
                }
                assert!(check_spec_equation(k, &xs).unwrap());
            }
        }
    });
}

#[test]
fn criterion_04_rotation() {
    within(Duration::from_secs(5), || {
        for n in 1..=10 {
            for k in 0..n {
                assert!(check_rotation(n, k).unwrap(), "n={n} k={k}");
                let inner = blank(k + 1, k).unwrap();
                let rhs = blank(n, k + 1).unwrap().map(|_| inner.clone());
                assert_eq!(retabulate(n, k, &blank(n, k).unwrap()).unwrap(), rhs);
            }
        }
    });
}

fn random_level(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Tree<i64> {
    blank(n, k).unwrap().map(|_| rng.random_range(-1000..=1000))
}

#[test]
fn criterion_05_law_suite() {
    within(Duration::from_secs(10), || {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = |x: &i64| x * 3 + 1;
        let g = |x: &i64| x - 7;
        for _ in 0..500 {
            let n = rng.random_range(1..=8);
            let k = rng.random_range(0..n);
            let t = random_level(&mut rng, n, k);

            assert_eq!(t.map(|x| *x), t);
            assert_eq!(t.map(|x| f(&g(x))), t.map(g).map(f));

            let lhs = retabulate(n, k, &t).unwrap().map(|inner| inner.map(f));
            assert_eq!(lhs, retabulate(n, k, &t.map(f)).unwrap(), "n={n} k={k}");

            // the top level of bu is the only place un_tip is applied
            let top = retabulate(n, n - 1, &random_level(&mut rng, n, n - 1)).unwrap();
            assert_eq!(top.map(|inner| inner.map(f)).un_tip().unwrap(), top.un_tip().unwrap().map(f));
        }
    });
}

#[test]
fn criterion_06_td_equals_bu() {
    within(Duration::from_secs(30), || {
        let p = digest_problem();
        for n in 0..=8 {
            for seed in 0..200 {
                let xs = p.generate(n, seed);
                assert_eq!(td(p.solver(), &xs).unwrap(), bu(p.solver(), &xs).unwrap(), "n={n} seed={seed}");
            }
        }
    });
}

#[test]
fn criterion_07_call_counts() {
    within(Duration::from_secs(60), || {
        let p = digest_problem();
        let xs: Vec<String> = ["w", "x", "y", "z"].map(String::from).to_vec();

        let top = run_instrumented(Algorithm::TopDown, p.solver(), &xs).unwrap();
        assert_eq!(top.stats.g_calls, 41);
        let singles: BTreeMap<_, _> = top.sublist_calls.unwrap().into_iter().filter(|(k, _)| k.len() == 1).collect();
        assert_eq!(singles.len(), 4);
        assert!(singles.values().all(|&c| c == 6), "{singles:?}");

        let bottom = run_instrumented(Algorithm::BottomUp, p.solver(), &xs).unwrap();
        assert_eq!(bottom.stats.g_calls, 15);

        for n in 0..=9 {
            let run = run_instrumented(Algorithm::TopDown, p.solver(), &p.generate(n, 7)).unwrap();
            assert_eq!(run.stats.g_calls, td_calls_by_recursion(n as u64), "td n={n}");
        }
        for n in 0..=16 {
            let run = run_instrumented(Algorithm::BottomUp, p.solver(), &p.generate(n, 7)).unwrap();
            assert_eq!(run.stats.g_calls, (1u64 << n) - 1, "bu n={n}");
        }
    });
}

#[test]
fn criterion_08_nesting_bound() {
    let p = digest_problem();
    for n in 0..=16 {
        for seed in 0..3 {
            let run = run_instrumented(Algorithm::BottomUp, p.solver(), &p.generate(n, seed)).unwrap();
            assert!(run.stats.peak_nesting <= 2, "n={n} nesting {}", run.stats.peak_nesting);
        }
    }
    let m = min_removal_cost_problem(Cost::Sum);
    for n in 0..=7 {
        let run = run_instrumented(Algorithm::BottomUp, m.solver(), &m.generate(n, 1)).unwrap();
        assert!(run.stats.peak_nesting <= 2);
    }
}

#[test]
fn criterion_09_oracle_agreement() {
    within(Duration::from_secs(30), || {
        for cost in [Cost::Sum, Cost::Max] {
            let p = min_removal_cost_problem(cost);
            for n in 0..=7 {
                for seed in 0..100 {
                    let xs = p.generate(n, seed);
                    let expected = brute_force_removal_oracle(cost, &xs).unwrap();
                    assert_eq!(td(p.solver(), &xs).unwrap(), expected, "{cost:?} {xs:?}");
                    assert_eq!(bu(p.solver(), &xs).unwrap(), expected, "{cost:?} {xs:?}");
                }
            }
        }
    });
}

#[test]
fn criterion_10_codec_round_trip() {
    within(Duration::from_secs(5), || {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for i in 0..1000 {
            match i % 3 {
                0 => {
                    let t = random_skeleton(&mut rng, 6, &mut |r: &mut dyn RngCore| r.random_range(i64::MIN..=i64::MAX));
                    assert_eq!(decode::<i64>(&encode(&t)).unwrap(), t);
                }
                1 => {
                    let t = random_skeleton(&mut rng, 6, &mut |r: &mut dyn RngCore| random_text(r));
                    assert_eq!(decode::<String>(&encode(&t)).unwrap(), t);
                }
                _ => {
                    let t = random_skeleton(&mut rng, 4, &mut |r: &mut dyn RngCore| {
                        let len = r.random_range(0..3);
                        random_skeleton(r, 2, &mut |r: &mut dyn RngCore| (0..len).map(|_| r.random_range(0u32..100)).collect::<Vec<u32>>())
                    });
                    assert_eq!(decode::<Tree<Vec<u32>>>(&encode(&t)).unwrap(), t);
                }
            }
        }
    });
}
