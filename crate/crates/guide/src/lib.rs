//! Doc-test harness for the book.
//!
//! Each chapter of `book/src/` is included verbatim as the documentation
//! of an empty module, so `cargo test --doc -p guide` compiles and runs
//! every Rust snippet in the book against the current `kodaira` API. If a
//! snippet drifts out of sync with the library, the build breaks here.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/parameters.md")]
pub mod parameters {}

#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}

#[doc = include_str!("../../../book/src/pushforwards.md")]
pub mod pushforwards {}

#[doc = include_str!("../../../book/src/nonvanishing.md")]
pub mod nonvanishing {}

#[doc = include_str!("../../../book/src/pathologies.md")]
pub mod pathologies {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
