use std::io;
use std::path::PathBuf;

use syltok_core::bpe::BpeError;
use syltok_core::hyphenator::PatternError;
use syltok_core::metrics::{ChrfError, PplError, SignificanceError, StatsError};
use syltok_core::syllabifier::{FallbackConfigError, ProfileError};
use syltok_core::FormatError;

/// Everything that can stop a `syltok` run.
///
/// [`Error::exit_code`] maps IO failures to 2 and everything else to 1.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    Stream(#[source] io::Error),
    #[error("{origin}, line {line}: {message}")]
    Input {
        origin: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("profile {name}: {source}")]
    Profile {
        name: String,
        #[source]
        source: ProfileError,
    },
    #[error("patterns: {0}")]
    Patterns(#[from] PatternError),
    #[error("bpe: {0}")]
    Bpe(#[from] BpeError),
    #[error("format: {0}")]
    Format(#[from] FormatError),
    #[error(transparent)]
    Fallback(#[from] FallbackConfigError),
    #[error("chrF: {0}")]
    Chrf(#[from] ChrfError),
    #[error("perplexity: {0}")]
    Ppl(#[from] PplError),
    #[error("significance: {0}")]
    Significance(#[from] SignificanceError),
    #[error("stats: {0}")]
    Stats(#[from] StatsError),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::Stream(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn input(origin: &str, line: usize, message: impl Into<String>) -> Self {
        Error::Input {
            origin: origin.to_owned(),
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
