//! The guide's chapters, compiled so that every listing runs as a doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/sumsets.md")]
pub mod sumsets {}

#[doc = include_str!("../../../book/src/weak_labelings.md")]
pub mod weak_labelings {}

#[doc = include_str!("../../../book/src/reduction.md")]
pub mod reduction {}

#[doc = include_str!("../../../book/src/solver.md")]
pub mod solver {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/claims.md")]
pub mod claims {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
