//! Symbol combinatorics for branching problems of finite symplectic and
//! orthogonal groups.
//!
//! The crate is layered:
//!
//! * [`combinatorics`]: partitions, bipartitions and Lusztig symbols;
//! * [`catalog`]: representation labels `π_{ρ,Λ,Λ'}` and their invariants;
//! * [`theta`]: the theta correspondence on symbols and first occurrences;
//! * [`ggp`]: relevance predicates and branching multiplicities;
//! * [`oracle`]: brute-force verifiers for the closed forms above.
//!
//! The guide in `book/` walks through each layer; its code blocks are
//! compiled and run as doc-tests of this crate.

pub mod catalog;
pub mod combinatorics;
pub mod error;
pub mod ggp;
pub mod oracle;
pub mod theta;

/// The library version, used to key on-disk caches of enumerations.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/symbols.md")]
    mod symbols {}
    #[doc = include_str!("../../../book/src/labels.md")]
    mod labels {}
    #[doc = include_str!("../../../book/src/theta.md")]
    mod theta {}
    #[doc = include_str!("../../../book/src/ggp.md")]
    mod ggp {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
