//! Guide chapters, compiled so their examples run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/outerplanar.md")]
pub mod outerplanar {}

#[doc = include_str!("../../../book/src/greedy.md")]
pub mod greedy {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
