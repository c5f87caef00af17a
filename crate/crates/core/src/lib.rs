//! Exact verification of Moufang-Mal'tsev pairs of linear maps over the
//! rationals: the defining relations, the triality substitutions and
//! conjugates, the Yamagutian, a catalog of derived identities with a small
//! identity language, and an ansatz search for new pairs.
//!
//! ```
//! use moufang::construct::fixtures::fixture;
//! use moufang::identity::run_suite;
//!
//! let t = fixture("octonions-lr").unwrap();
//! assert!(moufang::pairs::check_mm(&t).passed());
//! assert!(run_suite(&t).all_passed());
//! ```

pub mod algebra;
pub mod construct;
pub mod error;
pub mod exact;
pub mod identity;
pub mod io;
pub mod pairs;
pub mod verdict;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/pairs.md")]
    mod pairs {}
    #[doc = include_str!("../../../book/src/yamagutian.md")]
    mod yamagutian {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/cyclic.md")]
    mod cyclic {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
