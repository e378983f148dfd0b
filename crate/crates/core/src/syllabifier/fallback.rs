use alloc::string::String;
use alloc::sync::Arc;

use super::{Method, SyllabifiedWord};
use crate::bpe::BpeModel;
use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FallbackMode {
    /// One grapheme per piece.
    CharSplit,
    /// Encode with a BPE model.
    BpeDelegate,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("fallback mode `bpe_delegate` requires a BPE model")]
pub struct FallbackConfigError;

/// What to do with a word the syllabification rules reject.
#[derive(Debug, Clone, Default)]
pub enum FallbackPolicy {
    #[default]
    CharSplit,
    BpeDelegate(Arc<BpeModel>),
}

impl FallbackPolicy {
    /// Builds a policy from a mode and an optional model, as read from
    /// configuration.
    pub fn from_parts(
        mode: FallbackMode,
        model: Option<Arc<BpeModel>>,
    ) -> Result<Self, FallbackConfigError> {
        match (mode, model) {
            (FallbackMode::CharSplit, _) => Ok(FallbackPolicy::CharSplit),
            (FallbackMode::BpeDelegate, Some(m)) => Ok(FallbackPolicy::BpeDelegate(m)),
            (FallbackMode::BpeDelegate, None) => Err(FallbackConfigError),
        }
    }

    pub fn mode(&self) -> FallbackMode {
        match self {
            FallbackPolicy::CharSplit => FallbackMode::CharSplit,
            FallbackPolicy::BpeDelegate(_) => FallbackMode::BpeDelegate,
        }
    }

    pub fn apply(&self, word: &str) -> SyllabifiedWord {
        match self {
            FallbackPolicy::CharSplit => char_split(word, Method::FallbackChars),
            FallbackPolicy::BpeDelegate(model) => {
                let word = text::nfc(word);
                let syllables = model.encode(&word);
                SyllabifiedWord {
                    word,
                    syllables,
                    method: Method::FallbackBpe,
                }
            }
        }
    }
}

/// One grapheme per piece.
pub(crate) fn char_split(word: &str, method: Method) -> SyllabifiedWord {
    let word = text::nfc(word);
    let syllables = text::graphemes(&word)
        .into_iter()
        .map(String::from)
        .collect();
    SyllabifiedWord {
        word,
        syllables,
        method,
    }
}
