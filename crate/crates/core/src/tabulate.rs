//! Building and rearranging sublist tables.
//!
//! A level-`k` table over an `n`-list is a tree of shape `(n, k)` with one
//! entry per `k`-sublist. Sublists are enumerated with the head element
//! split off: the left subtree covers the sublists that omit the head, the
//! right subtree those that contain it. For `"abcd"` at level 2 this gives
//! `cd, bd, bc, ad, ac, ab`.

use crate::bintree::{Shape, Tree};
use crate::error::{Error, Result};

/// Whether the (non-constant-time) shape validation on entry is compiled in.
pub const SHAPE_CHECKS: bool = cfg!(any(debug_assertions, feature = "shape-checks"));

/// A level-`k` table whose entries are the `k`-sublists themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyedTable<E> {
    shape: Shape,
    tree: Tree<Vec<E>>,
}

impl<E: Clone> KeyedTable<E> {
    pub fn new(k: usize, xs: &[E]) -> Result<Self> {
        Ok(KeyedTable { shape: Shape::new(xs.len(), k), tree: choose(k, xs)? })
    }
}

impl<E> KeyedTable<E> {
    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn tree(&self) -> &Tree<Vec<E>> {
        &self.tree
    }

    pub fn into_tree(self) -> Tree<Vec<E>> {
        self.tree
    }

    pub fn keys(&self) -> Vec<&Vec<E>> {
        self.tree.payloads()
    }
}

/// All `k`-sublists of `xs`, tabulated at shape `(xs.len(), k)`.
///
/// ```
/// use bintab::bintree::encode;
/// use bintab::tabulate::choose;
///
/// let t = choose(2, &"abcd".chars().collect::<Vec<_>>()).unwrap();
/// let t = t.into_map(|ys| ys.into_iter().collect::<String>());
/// assert_eq!(encode(&t), r#"B(B(S("cd"),B(S("bd"),Z("bc"))),B(B(S("ad"),Z("ac")),Z("ab")))"#);
/// ```
pub fn choose<E: Clone>(k: usize, xs: &[E]) -> Result<Tree<Vec<E>>> {
    if k > xs.len() {
        return Err(Error::InvalidLevel { n: xs.len(), k });
    }
    Ok(choose_unchecked(k, xs))
}

fn choose_unchecked<E: Clone>(k: usize, xs: &[E]) -> Tree<Vec<E>> {
    if k == 0 {
        return Tree::TipZ(Vec::new());
    }
    if k == xs.len() {
        return Tree::TipS(xs.to_vec());
    }
    let (x, rest) = xs.split_first().expect("0 < k < len");
    let without = choose_unchecked(k, rest);
    let with = choose_unchecked(k - 1, rest).into_map(|mut ys| {
        ys.insert(0, x.clone());
        ys
    });
    Tree::bin(without, with)
}

/// The lists with exactly one element of `xs` removed.
pub fn immediate_sublists<E: Clone>(xs: &[E]) -> Result<Vec<Vec<E>>> {
    if xs.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(choose_unchecked(xs.len() - 1, xs).into_flatten())
}

/// The unique unit-payload tree of shape `(n, k)`.
pub fn blank(n: usize, k: usize) -> Result<Tree<()>> {
    if k > n {
        return Err(Error::InvalidLevel { n, k });
    }
    Ok(blank_unchecked(n, k))
}

fn blank_unchecked(n: usize, k: usize) -> Tree<()> {
    if k == 0 {
        Tree::TipZ(())
    } else if k == n {
        Tree::TipS(())
    } else {
        Tree::bin(blank_unchecked(n - 1, k), blank_unchecked(n - 1, k - 1))
    }
}

/// Prepends an entry to a table of shape `(k + 1, k)`, giving `(k + 2, k + 1)`.
pub fn cons_table<P>(y: P, t: Tree<P>) -> Tree<P> {
    debug_assert!(is_subdiagonal(&t), "cons_table needs a table of shape (k + 1, k)");
    Tree::bin(Tree::TipS(y), t)
}

// Shape (k + 1, k) for some k: a TipZ, or a TipS consed onto such a tree.
fn is_subdiagonal<P>(t: &Tree<P>) -> bool {
    match t {
        Tree::TipZ(_) => true,
        Tree::Bin(l, r) => matches!(**l, Tree::TipS(_)) && is_subdiagonal(r),
        Tree::TipS(_) => false,
    }
}

/// Turns a level-`k` table into a level-`k + 1` table of inner tables.
///
/// Each inner table has shape `(k + 1, k)` and collects the entries of `t`
/// at the immediate sublists of its key, in key order.
pub fn retabulate<P: Clone>(n: usize, k: usize, t: &Tree<P>) -> Result<Tree<Tree<P>>> {
    if k >= n {
        return Err(Error::InvalidLevel { n, k });
    }
    if SHAPE_CHECKS && !t.validate_shape(n, k) {
        return Err(Error::ShapeError(format!("retabulate input is not of shape ({n}, {k})")));
    }
    retab(n, t)
}

// The level is implied by the tree; only `n` is needed to place TipZ spines.
fn retab<P: Clone>(n: usize, t: &Tree<P>) -> Result<Tree<Tree<P>>> {
    Ok(match t {
        Tree::TipZ(y) if n == 1 => Tree::TipS(Tree::TipZ(y.clone())),
        Tree::TipZ(y) if n >= 2 => Tree::bin(retab(n - 1, t)?, Tree::TipZ(Tree::TipZ(y.clone()))),
        Tree::Bin(l, u) => match (&**l, &**u) {
            (Tree::TipS(y), _) => Tree::TipS(cons_table(y.clone(), (**u).clone())),
            (Tree::Bin(..), Tree::TipZ(z)) => Tree::bin(
                retab(n - 1, l)?,
                l.map(|w| cons_table(w.clone(), Tree::TipZ(z.clone()))),
            ),
            (Tree::Bin(..), Tree::Bin(..)) => {
                let below = retab(n - 1, u)?;
                let right = (**l).clone().zip_with(below, cons_table).map_err(misaligned)?;
                Tree::bin(retab(n - 1, l)?, right)
            }
            _ => return Err(misshapen("retabulate")),
        },
        _ => return Err(misshapen("retabulate")),
    })
}

fn misshapen(op: &str) -> Error {
    Error::ShapeError(format!("{op}: tree outside the binomial shape discipline"))
}

fn misaligned(_: Error) -> Error {
    Error::ShapeError("subtables have different shapes".into())
}

/// The list-valued rearrangement on level tables with `1 <= k < n`.
///
/// Equals `retabulate(n, k, t)` with every inner table flattened.
pub fn cd_classic<P: Clone>(t: &Tree<P>) -> Result<Tree<Vec<P>>> {
    let Tree::Bin(l, u) = t else {
        return Err(Error::ShapeError("cd_classic: input is a bare tip".into()));
    };
    Ok(match (&**l, &**u) {
        (Tree::TipS(y) | Tree::TipZ(y), Tree::TipS(z) | Tree::TipZ(z)) => Tree::TipS(vec![y.clone(), z.clone()]),
        (Tree::TipS(y) | Tree::TipZ(y), Tree::Bin(..)) => {
            let mut ys = cd_classic(u)?
                .un_tip()
                .map_err(|_| Error::ShapeError("cd_classic: expected a tip from the right subtree".into()))?;
            ys.insert(0, y.clone());
            Tree::TipS(ys)
        }
        (Tree::Bin(..), Tree::TipS(z) | Tree::TipZ(z)) => Tree::bin(cd_classic(l)?, l.map(|w| vec![w.clone(), z.clone()])),
        (Tree::Bin(..), Tree::Bin(..)) => {
            let right = (**l)
                .clone()
                .zip_with(cd_classic(u)?, |w, mut ws| {
                    ws.insert(0, w);
                    ws
                })
                .map_err(misaligned)?;
            Tree::bin(cd_classic(l)?, right)
        }
    })
}

/// Checks the specification of the rearrangement on keys.
///
/// Tests `retabulate(n, k, choose(k, xs)) == map(choose(k), choose(k + 1, xs))`
/// and, when `k >= 1`, the list form
/// `cd_classic(choose(k, xs)) == map(flatten . choose(k), choose(k + 1, xs))`.
pub fn check_spec_equation<E: Clone + PartialEq>(k: usize, xs: &[E]) -> Result<bool> {
    let n = xs.len();
    if k >= n {
        return Err(Error::InvalidLevel { n, k });
    }
    let level = choose_unchecked(k, xs);
    let next_keys = choose_unchecked(k + 1, xs);

    let expected = next_keys.map(|ys| choose_unchecked(k, ys));
    if retabulate(n, k, &level)? != expected {
        return Ok(false);
    }
    if k >= 1 {
        let expected = expected.into_map(|inner| inner.into_flatten());
        if cd_classic(&level)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that retabulating a blank table gives a blank table of blank tables.
pub fn check_rotation(n: usize, k: usize) -> Result<bool> {
    if k >= n {
        return Err(Error::InvalidLevel { n, k });
    }
    let lhs = retabulate(n, k, &blank_unchecked(n, k))?;
    let inner = blank_unchecked(k + 1, k);
    Ok(lhs == blank_unchecked(n, k + 1).map(|_| inner.clone()))
}
