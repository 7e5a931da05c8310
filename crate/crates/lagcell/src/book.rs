//! Keeps the guide honest: every fenced Rust block in `book/src/` is compiled
//! and run as a doctest of this crate by `cargo test --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/diagrams.md")]
pub mod diagrams {}

#[doc = include_str!("../../../book/src/cells.md")]
pub mod cells {}

#[doc = include_str!("../../../book/src/degrees.md")]
pub mod degrees {}

#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}

#[doc = include_str!("../../../book/src/homology.md")]
pub mod homology {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
