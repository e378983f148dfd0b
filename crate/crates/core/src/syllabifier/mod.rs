//! Rule-based syllabification.
//!
//! Three ways to split a word:
//!
//! - [`LanguageProfile::syllabify`]: nucleus detection followed by
//!   maximal-onset assignment of every consonant cluster, constrained by the
//!   profile's onset and coda tables;
//! - [`EnglishSyllabifier`]: orthographic heuristics for English;
//! - [`FallbackPolicy`]: character split or BPE delegation for words the
//!   rules reject.

mod english;
pub(crate) mod fallback;
mod profile;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use english::EnglishSyllabifier;
pub use fallback::{FallbackConfigError, FallbackMode, FallbackPolicy};
pub use profile::{LanguageProfile, ProfileDef, ProfileError};

/// How a [`SyllabifiedWord`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Profile,
    EnglishRules,
    Hyphenation,
    FallbackChars,
    FallbackBpe,
    /// Character split used as the primary segmenter.
    Chars,
    /// BPE used as the primary segmenter.
    Bpe,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Profile => "profile",
            Method::EnglishRules => "english_rules",
            Method::Hyphenation => "hyphenation",
            Method::FallbackChars => "fallback_chars",
            Method::FallbackBpe => "fallback_bpe",
            Method::Chars => "chars",
            Method::Bpe => "bpe",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A word together with its ordered syllable pieces.
///
/// Joining `syllables` with no separator always reproduces `word`, which is
/// the NFC form of the input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SyllabifiedWord {
    pub word: String,
    pub syllables: Vec<String>,
    pub method: Method,
}

impl SyllabifiedWord {
    pub(crate) fn from_boundaries(word: String, cuts: &[usize], method: Method) -> Self {
        let mut syllables = Vec::with_capacity(cuts.len() + 1);
        let mut start = 0;
        for &cut in cuts.iter().chain(core::iter::once(&word.len())) {
            if cut > start {
                syllables.push(String::from(&word[start..cut]));
                start = cut;
            }
        }
        SyllabifiedWord {
            word,
            syllables,
            method,
        }
    }

    pub fn whole(word: String, method: Method) -> Self {
        let syllables = if word.is_empty() {
            Vec::new()
        } else {
            alloc::vec![word.clone()]
        };
        SyllabifiedWord {
            word,
            syllables,
            method,
        }
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Syllables joined by `sep`, e.g. `"syl-la-ble"`.
    pub fn joined(&self, sep: &str) -> String {
        self.syllables.join(sep)
    }
}

/// Why a word could not be syllabified by the rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    Empty,
    NoVowel,
    OutsideAlphabet(String),
    IllegalCluster(String),
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Empty => f.write_str("empty word"),
            Reason::NoVowel => f.write_str("no vowel nucleus"),
            Reason::OutsideAlphabet(g) => write!(f, "grapheme {g:?} is outside the alphabet"),
            Reason::IllegalCluster(c) => write!(f, "consonant cluster {c:?} has no legal split"),
        }
    }
}

/// The rules rejected a word; the caller applies a [`FallbackPolicy`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot syllabify {word:?}: {reason}")]
pub struct NotSyllabifiable {
    pub word: String,
    pub reason: Reason,
}

impl NotSyllabifiable {
    pub(crate) fn new(word: &str, reason: Reason) -> Self {
        NotSyllabifiable {
            word: String::from(word),
            reason,
        }
    }
}
