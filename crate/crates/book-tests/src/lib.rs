// Each chapter of the guide becomes the docs of an empty module, so
// `cargo test --doc` compiles and runs its code blocks.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/geodesics.md")]
pub mod geodesics {}
#[doc = include_str!("../../../book/src/lens-spaces.md")]
pub mod lens_spaces {}
#[doc = include_str!("../../../book/src/orbits.md")]
pub mod orbits {}
#[doc = include_str!("../../../book/src/lawson.md")]
pub mod lawson {}
#[doc = include_str!("../../../book/src/period.md")]
pub mod period {}
#[doc = include_str!("../../../book/src/jacobi.md")]
pub mod jacobi {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
