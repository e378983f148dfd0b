//! Syllable-aware word segmentation and the evaluation math that goes with it.
//!
//! The crate is `no_std` (it needs `alloc`) and contains no IO. Everything here
//! is a pure function over strings and counts:
//!
//! - [`syllabifier`]: profile-driven maximal-onset syllabification, English
//!   heuristic rules and fallback policies for words that cannot be split.
//! - [`hyphenator`]: Liang/TeX pattern hyphenation, used as a syllable proxy.
//! - [`bpe`]: a deterministic byte-pair-encoding trainer and encoder.
//! - [`segio`]: the boundary-token, suffix-marker and prefix-marker
//!   serializations of segmented sentences, with exact inverses.
//! - [`metrics`]: character-normalised perplexity, chrF, paired approximate
//!   randomization and type/token statistics.
//!
//! The `syltok` crate layers file formats, corpus readers and a CLI on top.
#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bpe;
pub mod hyphenator;
pub mod metrics;
pub mod segio;
pub mod segmenter;
pub mod syllabifier;
pub mod text;

pub use bpe::{BpeError, BpeModel, TrainConfig};
pub use hyphenator::{PatternError, PatternSet};
pub use metrics::{ChrfConfig, CorpusStats, PplRecord};
pub use segio::{FormatError, FormatId, SegmentedSentence};
pub use segmenter::Segmenter;
pub use syllabifier::{
    EnglishSyllabifier, FallbackConfigError, FallbackMode, FallbackPolicy, LanguageProfile, Method,
    NotSyllabifiable, ProfileDef, ProfileError, Reason, SyllabifiedWord,
};
