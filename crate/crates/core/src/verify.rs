//! Law suites behind the `verify` command.
//!
//! Every suite runs a batch of cases and counts passes and failures. The
//! random cases are drawn from a ChaCha stream seeded per suite, so a run is
//! reproducible from `(max_n, seed)`.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bintree::{decode, encode, Tree};
use crate::error::Result;
use crate::induction::{bu, bu_call_count, run_instrumented, td, td_call_count, Algorithm};
use crate::problems::{digest_problem, min_removal_cost_problem, Cost};
use crate::tabulate::{blank, check_rotation, check_spec_equation, choose, retabulate};

/// Largest `max_n` the suites accept.
pub const MAX_N: usize = 10;

// sizes above these are skipped regardless of max_n
const TD_LIMIT: usize = 8;
const BRUTE_FORCE_LIMIT: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_n: usize,
    pub seed: u64,
    /// Random cases per input size for the solver suites.
    pub cases_per_size: usize,
    /// Random trees for the law and codec suites.
    pub random_trees: usize,
}

impl Config {
    pub fn new(max_n: usize, seed: u64) -> Self {
        Config { max_n, seed, cases_per_size: 20, random_trees: 200 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub max_n: usize,
    pub seed: u64,
    pub ok: bool,
    pub suites: Vec<SuiteResult>,
}

#[derive(Default)]
struct Tally {
    passed: u64,
    failed: u64,
}

impl Tally {
    fn check(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    // errors count as failures
    fn check_result(&mut self, r: Result<bool>) {
        self.check(matches!(r, Ok(true)));
    }

    fn finish(self, name: &'static str) -> SuiteResult {
        SuiteResult { name, passed: self.passed, failed: self.failed }
    }
}

fn rng_for(seed: u64, suite: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ suite.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// `xs` of length `n` with distinct elements `'a', 'b', ...`.
pub fn distinct_chars(n: usize) -> Vec<char> {
    (0..n).map(|i| char::from_u32('a' as u32 + i as u32).expect("small index")).collect()
}

/// A tree of shape `(n, k)` with payloads drawn from `payload`.
pub fn random_valid_tree<P>(n: usize, k: usize, mut payload: impl FnMut() -> P) -> Result<Tree<P>> {
    Ok(blank(n, k)?.map(|_| payload()))
}

/// A tree with an arbitrary skeleton of depth at most `depth`.
pub fn random_skeleton<P>(
    rng: &mut dyn RngCore,
    depth: usize,
    payload: &mut impl FnMut(&mut dyn RngCore) -> P,
) -> Tree<P> {
    let roll = rng.random_range(0..3);
    if depth == 0 || roll < 2 && rng.random_bool(0.4) {
        let p = payload(rng);
        if roll == 0 { Tree::TipZ(p) } else { Tree::TipS(p) }
    } else {
        let l = random_skeleton(rng, depth - 1, payload);
        Tree::bin(l, random_skeleton(rng, depth - 1, payload))
    }
}

/// Every unit-payload tree of depth at most `depth`.
pub fn all_unit_skeletons(depth: usize) -> Vec<Tree<()>> {
    let mut out = vec![Tree::TipZ(()), Tree::TipS(())];
    if depth > 0 {
        let smaller = all_unit_skeletons(depth - 1);
        for l in &smaller {
            for r in &smaller {
                out.push(Tree::bin(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Runs every suite and reports per-suite counts.
pub fn run_suites(cfg: &Config) -> Report {
    let max_n = cfg.max_n.min(MAX_N);
    let suites = vec![
        spec_equation(max_n),
        rotation(max_n),
        functor_laws(cfg, max_n),
        retabulate_naturality(cfg, max_n),
        un_tip_naturality(cfg),
        blank_uniqueness(cfg, max_n),
        td_equals_bu(cfg, max_n),
        call_counts(max_n),
        oracle_agreement(cfg, max_n),
        codec_round_trip(cfg),
    ];
    let ok = suites.iter().all(|s| s.failed == 0);
    Report { max_n, seed: cfg.seed, ok, suites }
}

fn spec_equation(max_n: usize) -> SuiteResult {
    let mut t = Tally::default();
    for n in 1..=max_n {
        let xs = distinct_chars(n);
        for k in 0..n {
            t.check_result(check_spec_equation(k, &xs));
        }
    }
    t.finish("spec_equation")
}

fn rotation(max_n: usize) -> SuiteResult {
    let mut t = Tally::default();
    for n in 1..=max_n {
        for k in 0..n {
            t.check_result(check_rotation(n, k));
        }
    }
    t.finish("rotation")
}

fn random_shape(rng: &mut impl Rng, max_n: usize, need_room: bool) -> (usize, usize) {
    let hi = if need_room { max_n.max(1) } else { max_n };
    let n = rng.random_range(usize::from(need_room)..=hi);
    let k = if need_room { rng.random_range(0..n) } else { rng.random_range(0..=n) };
    (n, k)
}

fn functor_laws(cfg: &Config, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(cfg.seed, 1);
    let mut t = Tally::default();
    let f = |x: &i64| x.wrapping_mul(3).wrapping_add(1);
    let g = |x: &i64| x ^ 0x55;
    for _ in 0..cfg.random_trees {
        let (n, k) = random_shape(&mut rng, max_n.min(8), false);
        let tree = random_valid_tree(n, k, || rng.random_range(-1000..1000i64)).expect("k <= n");
        t.check(tree.map(|x| *x) == tree);
        t.check(tree.map(|x| f(&g(x))) == tree.map(g).map(f));
        t.check(tree.map(f).validate_shape(n, k));
    }
    t.finish("functor_laws")
}

fn retabulate_naturality(cfg: &Config, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(cfg.seed, 2);
    let mut t = Tally::default();
    let f = |x: &i64| x.wrapping_mul(7) - 3;
    for _ in 0..cfg.random_trees {
        let (n, k) = random_shape(&mut rng, max_n.min(8), true);
        let tree = random_valid_tree(n, k, || rng.random_range(-1000..1000i64)).expect("k <= n");
        let lhs = retabulate(n, k, &tree.map(f));
        let rhs = retabulate(n, k, &tree).map(|r| r.map(|inner| inner.map(f)));
        let shaped = match &rhs {
            Ok(r) => r.validate_shape(n, k + 1) && r.payloads().iter().all(|i| i.validate_shape(k + 1, k)),
            Err(_) => false,
        };
        t.check(lhs.is_ok() && lhs == rhs && shaped);
    }
    t.finish("retabulate_naturality")
}

fn un_tip_naturality(cfg: &Config) -> SuiteResult {
    let mut rng = rng_for(cfg.seed, 3);
    let mut t = Tally::default();
    let f = |x: i64| x.wrapping_mul(-5);
    for _ in 0..cfg.random_trees {
        let y = rng.random_range(-1000..1000i64);
        let tip = if rng.random_bool(0.5) { Tree::TipZ(y) } else { Tree::TipS(y) };
        t.check(tip.clone().un_tip().map(f) == tip.into_map(f).un_tip());
    }
    t.finish("un_tip_naturality")
}

fn blank_uniqueness(cfg: &Config, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(cfg.seed, 4);
    let mut t = Tally::default();
    let mut candidates = all_unit_skeletons(3);
    for _ in 0..cfg.random_trees {
        candidates.push(random_skeleton(&mut rng, 7, &mut |_| ()));
    }
    for c in &candidates {
        for n in 0..=max_n {
            for k in 0..=n {
                if c.validate_shape(n, k) {
                    t.check(blank(n, k).as_ref() == Ok(c));
                }
            }
        }
    }
    t.finish("blank_uniqueness")
}

fn td_equals_bu(cfg: &Config, max_n: usize) -> SuiteResult {
    let p = digest_problem();
    let mut t = Tally::default();
    for n in 0..=max_n.min(TD_LIMIT) {
        for case in 0..cfg.cases_per_size as u64 {
            let xs = p.generate(n, cfg.seed.wrapping_add(case << 8 | n as u64));
            t.check(matches!((td(p.solver(), &xs), bu(p.solver(), &xs)), (Ok(a), Ok(b)) if a == b));
        }
    }
    t.finish("td_equals_bu")
}

fn call_counts(max_n: usize) -> SuiteResult {
    let p = digest_problem();
    let mut t = Tally::default();
    for n in 0..=max_n {
        let xs = p.generate(n, n as u64);
        if n <= 9 {
            let run = run_instrumented(Algorithm::TopDown, p.solver(), &xs);
            t.check(matches!(run, Ok(r) if Ok(r.stats.g_calls) == td_call_count(n)));
        }
        let run = run_instrumented(Algorithm::BottomUp, p.solver(), &xs);
        t.check(matches!(run, Ok(r) if Ok(r.stats.g_calls) == bu_call_count(n)
            && r.stats.e_calls == 1
            && r.stats.peak_nesting <= 2));
    }
    t.finish("call_counts")
}

fn oracle_agreement(cfg: &Config, max_n: usize) -> SuiteResult {
    let mut t = Tally::default();
    for cost in [Cost::Sum, Cost::Max] {
        let p = min_removal_cost_problem(cost);
        for n in 0..=max_n.min(BRUTE_FORCE_LIMIT) {
            for case in 0..cfg.cases_per_size as u64 {
                let xs = p.generate(n, cfg.seed.wrapping_add(case << 8 | n as u64));
                let agree = match (td(p.solver(), &xs), bu(p.solver(), &xs), p.oracle(&xs)) {
                    (Ok(a), Ok(b), Ok(c)) => a == b && b == c,
                    _ => false,
                };
                t.check(agree);
            }
        }
    }
    t.finish("oracle_agreement")
}

fn codec_round_trip(cfg: &Config) -> SuiteResult {
    let mut rng = rng_for(cfg.seed, 5);
    let mut t = Tally::default();
    for _ in 0..cfg.random_trees {
        let ints = random_skeleton(&mut rng, 6, &mut |r| r.random_range(i64::MIN..=i64::MAX));
        t.check(decode::<i64>(&encode(&ints)).as_ref() == Ok(&ints));

        let strings = random_skeleton(&mut rng, 5, &mut |r| random_text(r));
        t.check(decode::<String>(&encode(&strings)).as_ref() == Ok(&strings));

        let nested = random_skeleton(&mut rng, 3, &mut |r| {
            let len = r.random_range(0..3);
            (0..len).map(|_| random_skeleton(r, 2, &mut |_| ())).collect::<Vec<_>>()
        });
        t.check(decode::<Vec<Tree<()>>>(&encode(&nested)).as_ref() == Ok(&nested));
    }
    // keyed tables as produced by choose
    for n in 0..=6 {
        let xs: Vec<i64> = (0..n as i64).collect();
        for k in 0..=n {
            let table = choose(k, &xs).expect("k <= n");
            t.check(decode::<Vec<i64>>(&encode(&table)).as_ref() == Ok(&table));
        }
    }
    t.finish("codec_round_trip")
}

/// Short strings that exercise the escapes.
pub fn random_text(rng: &mut dyn RngCore) -> String {
    const ALPHABET: &[char] = &['a', 'b', '"', '\\', ',', '(', ')', ' ', 'λ', '*'];
    let len = rng.random_range(0..6);
    (0..len).map(|_| ALPHABET[rng.random_range(0..ALPHABET.len())]).collect()
}
