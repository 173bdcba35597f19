//! Front end for `harmsum-core`: plain/LaTeX/JSON rendering, the corpus file
//! format with the bundled catalog of identities, random differential
//! testing and the `harmsum` command line.

pub mod cli;
pub mod corpus;
mod error;
pub mod fuzz;
pub mod json;
pub mod render;

pub use error::{Error, Result};

/// The bundled catalog of 30 identities.
pub const BUNDLED_CORPUS: &str = include_str!("../data/corpus.json");
