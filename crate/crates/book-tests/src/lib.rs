//! Each chapter of `book/` is a doc module here, so `cargo test` runs its
//! listings against the current library.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/arithmetic.md")]
pub mod arithmetic {}
#[doc = include_str!("../../../book/src/lattice.md")]
pub mod lattice {}
#[doc = include_str!("../../../book/src/adjoints.md")]
pub mod adjoints {}
#[doc = include_str!("../../../book/src/gluing.md")]
pub mod gluing {}
#[doc = include_str!("../../../book/src/divisorial.md")]
pub mod divisorial {}
#[doc = include_str!("../../../book/src/moduli.md")]
pub mod moduli {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
