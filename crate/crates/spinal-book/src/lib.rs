//! Compiles and runs every code block in the book as a doc-test, so the
//! chapters under `book/src` stay in sync with the `spinal` crate. Each
//! chapter gets its own module to make test failures point back to the
//! right file.

#[doc = include_str!("../../../README.md")]
pub mod readme {}

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/networks.md")]
pub mod networks {}

#[doc = include_str!("../../../book/src/words.md")]
pub mod words {}

#[doc = include_str!("../../../book/src/encoding.md")]
pub mod encoding {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/enumeration.md")]
pub mod enumeration {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
