//! Keeps the book's code snippets compiling: every chapter is included as
//! a doc comment, so `cargo test --doc` runs each fenced Rust block.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}
#[doc = include_str!("../../../book/src/axioms.md")]
mod axioms {}
#[doc = include_str!("../../../book/src/vandermonde.md")]
mod vandermonde {}
#[doc = include_str!("../../../book/src/exterior.md")]
mod exterior {}
#[doc = include_str!("../../../book/src/manifolds.md")]
mod manifolds {}
#[doc = include_str!("../../../book/src/hypergraph.md")]
mod hypergraph {}
#[doc = include_str!("../../../book/src/sets.md")]
mod sets {}
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
