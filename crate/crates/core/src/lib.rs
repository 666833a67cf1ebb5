//! Tabulation over the immediate-sublist lattice.
//!
//! Problems defined by recursion on immediate sublists (the lists with one
//! element removed) can be solved top-down, recomputing shared sublists, or
//! bottom-up, one level of the sublist lattice at a time. Each level is a
//! binomial-shaped [`Tree`](bintree::Tree) and the step between levels is
//! [`retabulate`](tabulate::retabulate).
//!
//! ```
//! use bintab::induction::{bu, run_instrumented, solver, td, Algorithm};
//!
//! let longest = solver(|| 0usize, |ys: &[u8], _kids| Ok(ys.len()));
//! assert_eq!(td(&longest, b"abcd").unwrap(), 4);
//! assert_eq!(bu(&longest, b"abcd").unwrap(), 4);
//!
//! let run = run_instrumented(Algorithm::TopDown, &longest, b"abcd").unwrap();
//! assert_eq!(run.stats.g_calls, 41);
//! let run = run_instrumented(Algorithm::BottomUp, &longest, b"abcd").unwrap();
//! assert_eq!(run.stats.g_calls, 15);
//! ```
//!
//! The guide in `book/` walks through the same material with runnable
//! examples; its code blocks are compiled as doctests of this crate.

pub mod bintree;
pub mod cli;
pub mod error;
pub mod induction;
pub mod problems;
pub mod tabulate;
pub mod verify;

pub use bintree::{Shape, Tree};
pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
    #[doc = include_str!("../../../book/src/retabulate.md")]
    mod retabulate {}
    #[doc = include_str!("../../../book/src/induction.md")]
    mod induction {}
    #[doc = include_str!("../../../book/src/problems.md")]
    mod problems {}
    #[doc = include_str!("../../../book/src/laws.md")]
    mod laws {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
