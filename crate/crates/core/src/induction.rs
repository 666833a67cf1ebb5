//! Top-down and bottom-up solvers for immediate-sublist induction.
//!
//! A [`Solver`] gives a solution for the empty list and a way to combine the
//! solutions of the immediate sublists of `ys` into a solution for `ys`.
//! [`td`] recurses directly and solves shared sublists repeatedly; [`bu`]
//! builds the sublist lattice level by level with
//! [`retabulate`](crate::tabulate::retabulate) and solves every sublist once.
//! For a pure solver the two agree on every input.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::bintree::Tree;
use crate::error::{Error, Result};
use crate::tabulate::{choose, retabulate};

/// A problem defined by recursion over immediate sublists.
///
/// `combine` receives the key `ys` and a table of shape `(|ys|, |ys| - 1)`
/// whose entries line up with `choose(|ys| - 1, ys)`. It must be a pure
/// function of its arguments.
pub trait Solver<E> {
    type Solution;

    fn empty(&self) -> Self::Solution;

    fn combine(&self, ys: &[E], children: Tree<Self::Solution>) -> Result<Self::Solution>;
}

impl<E, T: Solver<E> + ?Sized> Solver<E> for &T {
    type Solution = T::Solution;

    fn empty(&self) -> Self::Solution {
        (**self).empty()
    }

    fn combine(&self, ys: &[E], children: Tree<Self::Solution>) -> Result<Self::Solution> {
        (**self).combine(ys, children)
    }
}

/// A [`Solver`] built from two closures.
pub struct FnSolver<Fe, Fg> {
    empty: Fe,
    combine: Fg,
}

/// Builds a solver from an empty-list solution and a combiner.
///
/// ```
/// use bintab::induction::{bu, solver, td};
///
/// // number of nodes in the td call tree
/// let count = solver(|| 1u64, |_ys: &[char], kids| Ok(1 + kids.flatten().iter().sum::<u64>()));
/// assert_eq!(td(&count, &['a', 'b', 'c']).unwrap(), 16);
/// assert_eq!(bu(&count, &['a', 'b', 'c']).unwrap(), 16);
/// ```
pub fn solver<E, S, Fe, Fg>(empty: Fe, combine: Fg) -> FnSolver<Fe, Fg>
where
    Fe: Fn() -> S,
    Fg: Fn(&[E], Tree<S>) -> Result<S>,
{
    FnSolver { empty, combine }
}

impl<E, S, Fe, Fg> Solver<E> for FnSolver<Fe, Fg>
where
    Fe: Fn() -> S,
    Fg: Fn(&[E], Tree<S>) -> Result<S>,
{
    type Solution = S;

    fn empty(&self) -> S {
        (self.empty)()
    }

    fn combine(&self, ys: &[E], children: Tree<S>) -> Result<S> {
        (self.combine)(ys, children)
    }
}

// Records the deepest table nesting a driver has built.
#[derive(Default)]
struct NestingProbe(AtomicUsize);

impl NestingProbe {
    fn saw(&self, depth: usize) {
        self.0.fetch_max(depth, Ordering::Relaxed);
    }
}

/// Top-down solution: recurse on each immediate sublist.
pub fn td<E: Clone, S: Solver<E> + ?Sized>(solver: &S, xs: &[E]) -> Result<S::Solution> {
    td_probed(solver, xs, None)
}

fn td_probed<E: Clone, S: Solver<E> + ?Sized>(solver: &S, xs: &[E], probe: Option<&NestingProbe>) -> Result<S::Solution> {
    if xs.is_empty() {
        return Ok(solver.empty());
    }
    let keys = choose(xs.len() - 1, xs)?;
    if let Some(p) = probe {
        p.saw(1);
    }
    let children = keys.try_map(|ys| td_probed(solver, ys, probe))?;
    solver.combine(xs, children)
}

/// Bottom-up solution: retabulate level `k` into level `k + 1` until the top.
pub fn bu<E: Clone, S: Solver<E> + ?Sized>(solver: &S, xs: &[E]) -> Result<S::Solution>
where
    S::Solution: Clone,
{
    bu_probed(solver, xs, None)
}

fn bu_probed<E: Clone, S: Solver<E> + ?Sized>(solver: &S, xs: &[E], probe: Option<&NestingProbe>) -> Result<S::Solution>
where
    S::Solution: Clone,
{
    let n = xs.len();
    let mut level = Tree::TipZ(solver.empty());
    if let Some(p) = probe {
        p.saw(1);
    }
    for k in 0..n {
        let tables = retabulate(n, k, &level)?;
        if let Some(p) = probe {
            p.saw(2);
        }
        let keys = choose(k + 1, xs)?;
        debug_assert!(keys.same_skeleton(&tables), "retabulate output misaligned at level {k}");
        level = keys.try_zip_with(tables, |ys, children| solver.combine(&ys, children))?;
    }
    level.un_tip()
}

/// A solver whose base case is the singleton list rather than the empty one.
pub trait SingletonSolver<E> {
    type Solution;

    fn single(&self, x: &E) -> Result<Self::Solution>;

    fn combine(&self, ys: &[E], children: Tree<Self::Solution>) -> Result<Self::Solution>;
}

/// [`td`] for singleton-based solvers; `xs` must be non-empty.
pub fn td_from_singletons<E: Clone, S: SingletonSolver<E> + ?Sized>(solver: &S, xs: &[E]) -> Result<S::Solution> {
    match xs {
        [] => Err(Error::EmptyInput),
        [x] => solver.single(x),
        _ => {
            let children = choose(xs.len() - 1, xs)?.try_map(|ys| td_from_singletons(solver, ys))?;
            solver.combine(xs, children)
        }
    }
}

/// [`bu`] for singleton-based solvers, seeded with the level-1 table.
pub fn bu_from_singletons<E: Clone, S: SingletonSolver<E> + ?Sized>(solver: &S, xs: &[E]) -> Result<S::Solution>
where
    S::Solution: Clone,
{
    let n = xs.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mut level = choose(1, xs)?.try_map(|ys| solver.single(&ys[0]))?;
    for k in 1..n {
        let tables = retabulate(n, k, &level)?;
        level = choose(k + 1, xs)?.try_zip_with(tables, |ys, children| solver.combine(&ys, children))?;
    }
    level.un_tip()
}

/// Which driver to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Algorithm {
    #[serde(rename = "td")]
    TopDown,
    #[serde(rename = "bu")]
    BottomUp,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::TopDown => "td",
            Algorithm::BottomUp => "bu",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "td" => Ok(Algorithm::TopDown),
            "bu" => Ok(Algorithm::BottomUp),
            other => Err(format!("unknown algorithm '{other}' (expected td or bu)")),
        }
    }
}

/// Counters collected by [`run_instrumented`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct CallStats {
    pub g_calls: u64,
    pub e_calls: u64,
    /// Deepest nesting of tables built by the driver: 1 for flat tables,
    /// 2 for tables of tables, 0 if none was built.
    pub peak_nesting: usize,
    pub wall_ns: u64,
}

/// Outcome of an instrumented run.
#[derive(Debug, Clone)]
pub struct Run<S> {
    pub solution: S,
    pub stats: CallStats,
    /// Top-down runs only: how often `combine` ran for each sublist, keyed by
    /// the positions of its elements in the input.
    pub sublist_calls: Option<BTreeMap<Vec<usize>, u64>>,
}

// Runs the wrapped solver over input positions so sublists are identified
// by index rather than by element value.
struct Counting<'a, E, S: ?Sized> {
    inner: &'a S,
    xs: &'a [E],
    g_calls: AtomicU64,
    e_calls: AtomicU64,
    per_sublist: Option<Mutex<BTreeMap<Vec<usize>, u64>>>,
}

impl<E: Clone, S: Solver<E> + ?Sized> Solver<usize> for Counting<'_, E, S> {
    type Solution = S::Solution;

    fn empty(&self) -> S::Solution {
        self.e_calls.fetch_add(1, Ordering::Relaxed);
        self.inner.empty()
    }

    fn combine(&self, ys: &[usize], children: Tree<S::Solution>) -> Result<S::Solution> {
        self.g_calls.fetch_add(1, Ordering::Relaxed);
        if let Some(m) = &self.per_sublist {
            *m.lock().expect("counter lock poisoned").entry(ys.to_vec()).or_default() += 1;
        }
        let elems: Vec<E> = ys.iter().map(|&i| self.xs[i].clone()).collect();
        self.inner.combine(&elems, children)
    }
}

/// Runs `alg` with call counting, nesting tracking and timing.
pub fn run_instrumented<E: Clone, S: Solver<E> + ?Sized>(alg: Algorithm, solver: &S, xs: &[E]) -> Result<Run<S::Solution>>
where
    S::Solution: Clone,
{
    let counting = Counting {
        inner: solver,
        xs,
        g_calls: AtomicU64::new(0),
        e_calls: AtomicU64::new(0),
        per_sublist: (alg == Algorithm::TopDown).then(|| Mutex::new(BTreeMap::new())),
    };
    let positions: Vec<usize> = (0..xs.len()).collect();
    let probe = NestingProbe::default();
    let start = Instant::now();
    let solution = match alg {
        Algorithm::TopDown => td_probed(&counting, &positions, Some(&probe))?,
        Algorithm::BottomUp => bu_probed(&counting, &positions, Some(&probe))?,
    };
    let wall_ns = u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX);
    Ok(Run {
        solution,
        stats: CallStats {
            g_calls: counting.g_calls.into_inner(),
            e_calls: counting.e_calls.into_inner(),
            peak_nesting: probe.0.into_inner(),
            wall_ns,
        },
        sublist_calls: counting.per_sublist.map(|m| m.into_inner().expect("counter lock poisoned")),
    })
}

const TD_MAX_N: usize = 20;

/// Number of `combine` calls made by [`td`] on an input of length `n`:
/// `T(0) = 0`, `T(n) = 1 + n * T(n - 1)`.
pub fn td_call_count(n: usize) -> Result<u64> {
    if n > TD_MAX_N {
        return Err(Error::Overflow(format!("td call count for n = {n} (limit {TD_MAX_N})")));
    }
    let mut t: u64 = 0;
    for m in 1..=n as u64 {
        t = m
            .checked_mul(t)
            .and_then(|x| x.checked_add(1))
            .ok_or_else(|| Error::Overflow(format!("td call count for n = {n}")))?;
    }
    Ok(t)
}

/// Number of `empty` calls made by [`td`]: `n!` paths reach the empty list.
pub fn td_empty_call_count(n: usize) -> Result<u64> {
    if n > TD_MAX_N {
        return Err(Error::Overflow(format!("td empty-call count for n = {n} (limit {TD_MAX_N})")));
    }
    Ok((1..=n as u64).product())
}

/// Number of `combine` calls made by [`bu`]: one per non-empty sublist.
pub fn bu_call_count(n: usize) -> Result<u64> {
    if n > 62 {
        return Err(Error::Overflow(format!("bu call count for n = {n} (limit 62)")));
    }
    Ok((1u64 << n) - 1)
}
