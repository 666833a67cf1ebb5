#![allow(dead_code)]

use bintab::tabulate::blank;
use bintab::Tree;
use proptest::prelude::*;

/// Pascal's triangle by the additive rule, independent of `binomial`.
pub fn pascal(n: usize, k: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// All k-element sublists of `xs`, by bitmask.
pub fn subsets_by_mask<T: Clone>(k: usize, xs: &[T]) -> Vec<Vec<T>> {
    let n = xs.len();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| xs[i].clone()).collect())
        .collect()
}

/// Fills `blank(n, k)` with `payloads` left to right.
pub fn fill<P>(n: usize, k: usize, payloads: Vec<P>) -> Tree<P> {
    let mut it = payloads.into_iter();
    blank(n, k).unwrap().into_map(|()| it.next().expect("enough payloads"))
}

pub fn shape(max_n: usize) -> impl Strategy<Value = (usize, usize)> {
    (0..=max_n).prop_flat_map(|n| (Just(n), 0..=n))
}

/// A shape-valid tree with `(n, k)` and arbitrary `i64` payloads.
pub fn valid_tree(max_n: usize) -> impl Strategy<Value = (usize, usize, Tree<i64>)> {
    shape(max_n).prop_flat_map(|(n, k)| {
        let size = pascal(n, k) as usize;
        prop::collection::vec(any::<i64>(), size).prop_map(move |ps| (n, k, fill(n, k, ps)))
    })
}

/// A shape-valid tree with `k < n`, so that it can be retabulated.
pub fn level_tree(max_n: usize) -> impl Strategy<Value = (usize, usize, Tree<i64>)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), 0..n)).prop_flat_map(|(n, k)| {
        let size = pascal(n, k) as usize;
        prop::collection::vec(-1000i64..1000, size).prop_map(move |ps| (n, k, fill(n, k, ps)))
    })
}

/// Any tree, shape-valid or not, up to the given depth.
pub fn any_tree(depth: u32) -> impl Strategy<Value = Tree<i64>> {
    let leaf = prop_oneof![any::<i64>().prop_map(Tree::tip_z), any::<i64>().prop_map(Tree::tip_s)];
    leaf.prop_recursive(depth, 64, 2, |inner| (inner.clone(), inner).prop_map(|(l, r)| Tree::bin(l, r)))
}

/// Top-down call count by direct recursion on the definition.
pub fn td_calls_by_recursion(n: u64) -> u64 {
    if n == 0 {
        0
    } else {
        1 + n * td_calls_by_recursion(n - 1)
    }
}
