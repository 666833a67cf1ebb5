//! Binomial trees.
//!
//! A [`Tree`] is a plain binary tree with two kinds of tip. Read at a
//! [`Shape`] `(n, k)`, the indices force the constructors:
//!
//! * `k = 0` gives a [`Tree::TipZ`];
//! * `n = k ≥ 1` gives a [`Tree::TipS`];
//! * `0 < k < n` gives a [`Tree::Bin`] whose left child has shape
//!   `(n - 1, k)` and whose right child has shape `(n - 1, k - 1)`.
//!
//! Nothing else is valid, so a valid tree at `(n, k)` holds exactly
//! `C(n, k)` payloads. Trees do not record their own indices; callers pass
//! the shape explicitly and [`Tree::validate_shape`] checks it.

mod codec;
mod render;

pub use codec::{decode, encode, Parser, TextCodec};
pub use render::render_ascii;

use crate::error::{Error, Result};

/// A binomial-shaped binary tree carrying payloads of type `P` at its tips.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree<P> {
    /// Tip at level zero (`k = 0`).
    TipZ(P),
    /// Tip on the diagonal (`n = k ≥ 1`).
    TipS(P),
    /// Left child at `(n - 1, k)`, right child at `(n - 1, k - 1)`.
    Bin(Box<Tree<P>>, Box<Tree<P>>),
}

/// The `(n, k)` indices a tree is read at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub n: usize,
    pub k: usize,
}

impl Shape {
    pub const fn new(n: usize, k: usize) -> Self {
        Shape { n, k }
    }

    /// Number of payloads a tree of this shape holds; zero when `k > n`.
    pub fn size(self) -> u64 {
        binomial(self.n, self.k)
    }
}

/// `C(n, k)`, or zero when `k > n`.
///
/// Panics if the result does not fit in a `u64`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc = C(n, i) before the update
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

impl<P> Tree<P> {
    pub fn tip_z(payload: P) -> Self {
        Tree::TipZ(payload)
    }

    pub fn tip_s(payload: P) -> Self {
        Tree::TipS(payload)
    }

    pub fn bin(left: Tree<P>, right: Tree<P>) -> Self {
        Tree::Bin(Box::new(left), Box::new(right))
    }

    pub fn is_tip(&self) -> bool {
        !matches!(self, Tree::Bin(..))
    }

    /// True iff the tree has exactly the `(n, k)` binomial shape.
    pub fn validate_shape(&self, n: usize, k: usize) -> bool {
        match self {
            Tree::TipZ(_) => k == 0,
            Tree::TipS(_) => k >= 1 && n == k,
            Tree::Bin(l, r) => 0 < k && k < n && l.validate_shape(n - 1, k) && r.validate_shape(n - 1, k - 1),
        }
    }

    /// Number of payloads.
    pub fn size(&self) -> usize {
        match self {
            Tree::TipZ(_) | Tree::TipS(_) => 1,
            Tree::Bin(l, r) => l.size() + r.size(),
        }
    }

    /// True iff both trees use the same constructors in the same places.
    pub fn same_skeleton<Q>(&self, other: &Tree<Q>) -> bool {
        match (self, other) {
            (Tree::TipZ(_), Tree::TipZ(_)) | (Tree::TipS(_), Tree::TipS(_)) => true,
            (Tree::Bin(a, b), Tree::Bin(c, d)) => a.same_skeleton(c) && b.same_skeleton(d),
            _ => false,
        }
    }

    /// Replaces every payload with `f(payload)`, keeping the skeleton.
    pub fn map<Q>(&self, mut f: impl FnMut(&P) -> Q) -> Tree<Q> {
        self.map_with(&mut f)
    }

    fn map_with<Q, F: FnMut(&P) -> Q>(&self, f: &mut F) -> Tree<Q> {
        match self {
            Tree::TipZ(p) => Tree::TipZ(f(p)),
            Tree::TipS(p) => Tree::TipS(f(p)),
            Tree::Bin(l, r) => {
                let l = l.map_with(f);
                Tree::bin(l, r.map_with(f))
            }
        }
    }

    /// Like [`Tree::map`], consuming the tree.
    pub fn into_map<Q>(self, mut f: impl FnMut(P) -> Q) -> Tree<Q> {
        self.into_map_with(&mut f)
    }

    fn into_map_with<Q, F: FnMut(P) -> Q>(self, f: &mut F) -> Tree<Q> {
        match self {
            Tree::TipZ(p) => Tree::TipZ(f(p)),
            Tree::TipS(p) => Tree::TipS(f(p)),
            Tree::Bin(l, r) => {
                let l = l.into_map_with(f);
                Tree::bin(l, r.into_map_with(f))
            }
        }
    }

    /// Fallible map; stops at the first error, visiting payloads left to right.
    pub fn try_map<Q, E>(&self, mut f: impl FnMut(&P) -> Result<Q, E>) -> Result<Tree<Q>, E> {
        self.try_map_with(&mut f)
    }

    fn try_map_with<Q, E, F: FnMut(&P) -> Result<Q, E>>(&self, f: &mut F) -> Result<Tree<Q>, E> {
        Ok(match self {
            Tree::TipZ(p) => Tree::TipZ(f(p)?),
            Tree::TipS(p) => Tree::TipS(f(p)?),
            Tree::Bin(l, r) => {
                let l = l.try_map_with(f)?;
                Tree::bin(l, r.try_map_with(f)?)
            }
        })
    }

    /// Combines payloads pairwise in position.
    ///
    /// Both trees must have the same skeleton, otherwise
    /// [`Error::ShapeMismatch`] is returned.
    pub fn zip_with<Q, R>(self, other: Tree<Q>, mut f: impl FnMut(P, Q) -> R) -> Result<Tree<R>> {
        self.try_zip_with(other, |p, q| Ok(f(p, q)))
    }

    /// Fallible [`Tree::zip_with`].
    pub fn try_zip_with<Q, R>(
        self,
        other: Tree<Q>,
        mut f: impl FnMut(P, Q) -> Result<R>,
    ) -> Result<Tree<R>> {
        if !self.same_skeleton(&other) {
            return Err(Error::ShapeMismatch);
        }
        self.zip_matched(other, &mut f)
    }

    fn zip_matched<Q, R, F>(self, other: Tree<Q>, f: &mut F) -> Result<Tree<R>>
    where
        F: FnMut(P, Q) -> Result<R>,
    {
        Ok(match (self, other) {
            (Tree::TipZ(p), Tree::TipZ(q)) => Tree::TipZ(f(p, q)?),
            (Tree::TipS(p), Tree::TipS(q)) => Tree::TipS(f(p, q)?),
            (Tree::Bin(a, b), Tree::Bin(c, d)) => {
                let l = a.zip_matched(*c, f)?;
                Tree::bin(l, b.zip_matched(*d, f)?)
            }
            _ => return Err(Error::ShapeMismatch),
        })
    }

    /// The payload of a tip.
    pub fn un_tip(self) -> Result<P> {
        match self {
            Tree::TipZ(p) | Tree::TipS(p) => Ok(p),
            Tree::Bin(..) => Err(Error::NotATip),
        }
    }

    /// Payload references, left to right.
    pub fn payloads(&self) -> Vec<&P> {
        let mut out = Vec::with_capacity(self.size());
        self.collect_refs(&mut out);
        out
    }

    fn collect_refs<'a>(&'a self, out: &mut Vec<&'a P>) {
        match self {
            Tree::TipZ(p) | Tree::TipS(p) => out.push(p),
            Tree::Bin(l, r) => {
                l.collect_refs(out);
                r.collect_refs(out);
            }
        }
    }

    /// Payloads left to right, consuming the tree.
    pub fn into_flatten(self) -> Vec<P> {
        let mut out = Vec::new();
        self.collect_owned(&mut out);
        out
    }

    fn collect_owned(self, out: &mut Vec<P>) {
        match self {
            Tree::TipZ(p) | Tree::TipS(p) => out.push(p),
            Tree::Bin(l, r) => {
                l.collect_owned(out);
                r.collect_owned(out);
            }
        }
    }
}

impl<P: Clone> Tree<P> {
    /// Payloads left to right.
    pub fn flatten(&self) -> Vec<P> {
        self.payloads().into_iter().cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s<P>(p: P) -> Tree<P> {
        Tree::tip_s(p)
    }
    fn z<P>(p: P) -> Tree<P> {
        Tree::tip_z(p)
    }

    #[test]
    fn shape_rules() {
        assert!(z('x').validate_shape(5, 0));
        assert!(z('x').validate_shape(0, 0));
        assert!(!z('x').validate_shape(3, 1));
        assert!(s('x').validate_shape(3, 3));
        assert!(!s('x').validate_shape(3, 2));
        assert!(!s('x').validate_shape(0, 0));
        assert!(Tree::bin(s(1), z(2)).validate_shape(2, 1));
        assert!(!Tree::bin(s(1), z(2)).validate_shape(2, 2));
        assert!(!Tree::bin(s(1), z(2)).validate_shape(1, 2));
    }

    #[test]
    fn sizes() {
        assert_eq!(z(()).size(), 1);
        assert_eq!(Tree::bin(s(1), z(2)).size(), 2);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(62, 31), 465428353255261088);
        assert_eq!(Shape::new(10, 3).size(), 120);
    }

    #[test]
    fn map_keeps_skeleton() {
        let t = Tree::bin(s("b"), z("a"));
        assert_eq!(t.map(|p| p.to_uppercase()), Tree::bin(s("B".to_string()), z("A".to_string())));
        assert_eq!(t.clone().into_map(|p| p.len()), Tree::bin(s(1), z(1)));
    }

    #[test]
    fn try_map_stops_at_first_error() {
        let t = Tree::bin(s(1), Tree::bin(s(2), z(3)));
        let mut seen = vec![];
        let r: Result<Tree<i32>, i32> = t.try_map(|&p| {
            seen.push(p);
            if p == 2 { Err(p) } else { Ok(p) }
        });
        assert_eq!(r, Err(2));
        assert_eq!(seen, vec![1, 2]);
    }

    #[test]
    fn zip_pairs_in_place() {
        let t = Tree::bin(s(1), z(2));
        let u = Tree::bin(s(10), z(20));
        assert_eq!(t.zip_with(u, |a, b| (a, b)).unwrap(), Tree::bin(s((1, 10)), z((2, 20))));
    }

    #[test]
    fn zip_rejects_mismatched_skeletons() {
        assert_eq!(z(1).zip_with(Tree::bin(s(1), z(2)), |a, b| (a, b)), Err(Error::ShapeMismatch));
        // same size, different tip kinds
        assert_eq!(
            Tree::bin(s(1), z(2)).zip_with(Tree::bin(z(1), z(2)), |a, b| (a, b)),
            Err(Error::ShapeMismatch)
        );
    }

    #[test]
    fn un_tip_cases() {
        assert_eq!(z(7).un_tip(), Ok(7));
        assert_eq!(s("abc").un_tip(), Ok("abc"));
        assert_eq!(Tree::bin(s(1), z(2)).un_tip(), Err(Error::NotATip));
    }

    #[test]
    fn flatten_order() {
        assert_eq!(z('x').flatten(), vec!['x']);
        let t = Tree::bin(s(1), Tree::bin(s(2), z(3)));
        assert_eq!(t.flatten(), vec![1, 2, 3]);
        assert_eq!(t.payloads(), vec![&1, &2, &3]);
        assert_eq!(t.into_flatten(), vec![1, 2, 3]);
    }
}
