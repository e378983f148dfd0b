//! Corpus readers, shipped language profiles, streaming pipelines and the
//! `syltok` command line, on top of [`syltok_core`].

pub mod cli;
pub mod corpus;
pub mod error;
pub mod pipeline;
pub mod profiles;

pub use cli::{run, RunConfig};
pub use corpus::{CorpusHandle, CorpusKind, LineReader, ParallelCorpus, Sentence};
pub use error::{Error, Result};
