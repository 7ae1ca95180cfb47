//! The project guide, mirrored from `book/src/` so that every code snippet
//! in the book compiles and runs as a doc-test. Read it rendered with
//! `mdbook serve book`, or right here.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/landscapes.md")]
pub mod landscapes {}

#[doc = include_str!("../../../book/src/generating.md")]
pub mod generating {}

#[doc = include_str!("../../../book/src/deceptiveness.md")]
pub mod deceptiveness {}

#[doc = include_str!("../../../book/src/difficulty.md")]
pub mod difficulty {}

#[doc = include_str!("../../../book/src/extension.md")]
pub mod extension {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
