//! Built-in example problems, each with an independent oracle.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bintree::{TextCodec, Tree};
use crate::error::{Error, Result};
use crate::induction::{td, Solver};

type BoxedSolver<E, S> = Box<dyn Solver<E, Solution = S> + Send + Sync>;
type Oracle<E, S> = Box<dyn Fn(&[E]) -> Result<S> + Send + Sync>;

/// A named solver together with an oracle and an input generator.
pub struct Problem<E, S> {
    pub name: &'static str,
    /// What the elements are, for usage messages.
    pub domain: &'static str,
    /// Largest input length the oracle accepts.
    pub oracle_bound: usize,
    solver: BoxedSolver<E, S>,
    oracle: Oracle<E, S>,
    generator: fn(usize, u64) -> Vec<E>,
}

impl<E, S> Problem<E, S> {
    pub fn solver(&self) -> &(dyn Solver<E, Solution = S> + Send + Sync) {
        &*self.solver
    }

    pub fn oracle(&self, xs: &[E]) -> Result<S> {
        (self.oracle)(xs)
    }

    /// A deterministic input of the given length.
    pub fn generate(&self, size: usize, seed: u64) -> Vec<E> {
        (self.generator)(size, seed)
    }
}

impl<E, S> fmt::Debug for Problem<E, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem").field("name", &self.name).field("domain", &self.domain).finish()
    }
}

/// Names accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Digest,
    SubtreeCount,
    MinRemoval(Cost),
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 4] = [
        ProblemKind::Digest,
        ProblemKind::SubtreeCount,
        ProblemKind::MinRemoval(Cost::Sum),
        ProblemKind::MinRemoval(Cost::Max),
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Digest => "digest",
            ProblemKind::SubtreeCount => "subtree-count",
            ProblemKind::MinRemoval(Cost::Sum) => "min-removal-sum",
            ProblemKind::MinRemoval(Cost::Max) => "min-removal-max",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ProblemKind::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<_> = ProblemKind::ALL.iter().map(|p| p.name()).collect();
            format!("unknown problem '{s}' (expected one of: {})", names.join(", "))
        })
    }
}

// 64-bit FNV-1a followed by the splitmix64 finaliser.
const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(mut state: u64, bytes: &[u8]) -> u64 {
    for &b in bytes {
        state ^= b as u64;
        state = state.wrapping_mul(FNV_PRIME);
    }
    state
}

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Hash of a byte string.
pub fn digest_bytes(bytes: &[u8]) -> u64 {
    mix64(fnv1a(FNV_OFFSET, bytes))
}

/// Solution of the digest problem for the empty list.
pub const DIGEST_SEED: u64 = 0x5eed_5eed_5eed_5eed;

/// The digest combiner: hashes the encoding of `ys`, then each child digest
/// in order.
pub fn digest_combine<E: TextCodec + Clone>(ys: &[E], children: &[u64]) -> u64 {
    let mut key = String::new();
    ys.to_vec().write_text(&mut key);
    let mut state = fnv1a(FNV_OFFSET, key.as_bytes());
    for c in children {
        state = fnv1a(state, &c.to_le_bytes());
    }
    mix64(state)
}

struct DigestSolver;

impl Solver<String> for DigestSolver {
    type Solution = u64;

    fn empty(&self) -> u64 {
        DIGEST_SEED
    }

    fn combine(&self, ys: &[String], children: Tree<u64>) -> Result<u64> {
        Ok(digest_combine(ys, &children.into_flatten()))
    }
}

/// Hashes every key with the hashes of its children, so any misplaced entry
/// changes the result. The oracle is [`td`] itself.
pub fn digest_problem() -> Problem<String, u64> {
    Problem {
        name: "digest",
        domain: "arbitrary tokens",
        oracle_bound: 9,
        solver: Box::new(DigestSolver),
        oracle: Box::new(|xs| td(&DigestSolver, xs)),
        generator: token_input,
    }
}

fn token_input(size: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|_| {
            let len = rng.random_range(1..=3);
            (0..len).map(|_| rng.random_range(b'a'..=b'h') as char).collect()
        })
        .collect()
}

struct SubtreeCount;

impl Solver<String> for SubtreeCount {
    type Solution = u64;

    fn empty(&self) -> u64 {
        1
    }

    fn combine(&self, ys: &[String], children: Tree<u64>) -> Result<u64> {
        children
            .payloads()
            .into_iter()
            .try_fold(1u64, |acc, &c| acc.checked_add(c))
            .ok_or_else(|| Error::Overflow(format!("subtree count for length {}", ys.len())))
    }
}

/// `s(m) = 1 + m * s(m - 1)`, `s(0) = 1`; the size of the top-down call tree.
pub fn subtree_count_closed_form(m: usize) -> Result<u64> {
    let overflow = || Error::Overflow(format!("subtree count for length {m}"));
    (1..=m as u64).try_fold(1u64, |s, i| i.checked_mul(s).and_then(|x| x.checked_add(1)).ok_or_else(overflow))
}

/// Counts nodes of the top-down call tree; checked against the closed form.
pub fn subtree_count_problem() -> Problem<String, u64> {
    Problem {
        name: "subtree-count",
        domain: "arbitrary tokens",
        oracle_bound: 20,
        solver: Box::new(SubtreeCount),
        oracle: Box::new(|xs| subtree_count_closed_form(xs.len())),
        generator: token_input,
    }
}

/// Cost of one deletion step, charged on the list before the deletion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cost {
    Sum,
    Max,
}

impl Cost {
    fn step(self, ys: &[i64]) -> Result<i64> {
        match self {
            Cost::Sum => ys
                .iter()
                .try_fold(0i64, |a, &y| a.checked_add(y))
                .ok_or_else(|| Error::Overflow("step cost".into())),
            Cost::Max => ys.iter().copied().max().ok_or(Error::EmptyInput),
        }
    }
}

struct MinRemoval(Cost);

impl Solver<i64> for MinRemoval {
    type Solution = i64;

    fn empty(&self) -> i64 {
        0
    }

    fn combine(&self, ys: &[i64], children: Tree<i64>) -> Result<i64> {
        let best = children.payloads().into_iter().copied().min().ok_or(Error::EmptyInput)?;
        self.0.step(ys)?.checked_add(best).ok_or_else(|| Error::Overflow("removal cost".into()))
    }
}

/// Cheapest way to delete all elements one at a time, where each deletion
/// costs the sum or the maximum of the list just before it.
pub fn min_removal_cost_problem(cost: Cost) -> Problem<i64, i64> {
    Problem {
        name: match cost {
            Cost::Sum => "min-removal-sum",
            Cost::Max => "min-removal-max",
        },
        domain: "integers",
        oracle_bound: BRUTE_FORCE_LIMIT,
        solver: Box::new(MinRemoval(cost)),
        oracle: Box::new(move |xs| brute_force_removal_oracle(cost, xs)),
        generator: integer_input,
    }
}

fn integer_input(size: usize, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size).map(|_| rng.random_range(-20..=50)).collect()
}

const BRUTE_FORCE_LIMIT: usize = 8;

/// Minimum removal cost over every deletion order, by enumerating all `n!`
/// permutations.
pub fn brute_force_removal_oracle(cost: Cost, xs: &[i64]) -> Result<i64> {
    if xs.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit { what: "brute-force removal oracle", max: BRUTE_FORCE_LIMIT, got: xs.len() });
    }
    let mut order: Vec<usize> = (0..xs.len()).collect();
    let mut best = order_cost(cost, xs, &order)?;
    // Heap's algorithm, iterative form
    let n = order.len();
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            best = best.min(order_cost(cost, xs, &order)?);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

fn order_cost(cost: Cost, xs: &[i64], order: &[usize]) -> Result<i64> {
    let mut alive = vec![true; xs.len()];
    let mut total = 0i64;
    for &idx in order {
        let current: Vec<i64> = xs.iter().zip(&alive).filter(|(_, &a)| a).map(|(&x, _)| x).collect();
        total = total.checked_add(cost.step(&current)?).ok_or_else(|| Error::Overflow("removal cost".into()))?;
        alive[idx] = false;
    }
    Ok(total)
}
