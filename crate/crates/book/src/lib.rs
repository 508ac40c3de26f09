//! The guide in `book/`, compiled so that its listings run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/bisets.md")]
pub mod bisets {}

#[doc = include_str!("../../../book/src/connectivity.md")]
pub mod connectivity {}

#[doc = include_str!("../../../book/src/splitting.md")]
pub mod splitting {}

#[doc = include_str!("../../../book/src/obstacles.md")]
pub mod obstacles {}

#[doc = include_str!("../../../book/src/construction.md")]
pub mod construction {}

#[doc = include_str!("../../../book/src/augmentation.md")]
pub mod augmentation {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
