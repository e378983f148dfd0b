use alloc::collections::BTreeSet;
use alloc::string::String;

use crate::syllabifier::SyllabifiedWord;
use crate::text;

/// Token (`n_*`) and type (`v_*`) counts at word, syllable and character
/// granularity. Characters are grapheme clusters and exclude whitespace.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CorpusStats {
    pub n_word: u64,
    pub v_word: u64,
    pub n_syl: u64,
    pub v_syl: u64,
    pub n_char: u64,
    pub v_char: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum StatsError {
    #[error("growth rates need at least one word and one syllable")]
    Empty,
}

impl CorpusStats {
    /// `(v_syl / n_syl, v_word / n_word)`.
    pub fn growth_rates(&self) -> Result<(f64, f64), StatsError> {
        if self.n_syl == 0 || self.n_word == 0 {
            return Err(StatsError::Empty);
        }
        Ok((
            self.v_syl as f64 / self.n_syl as f64,
            self.v_word as f64 / self.n_word as f64,
        ))
    }
}

/// Accumulates [`CorpusStats`] one segmented word at a time.
#[derive(Debug, Clone, Default)]
pub struct CorpusStatsBuilder {
    n_word: u64,
    n_syl: u64,
    n_char: u64,
    words: BTreeSet<String>,
    syls: BTreeSet<String>,
    chars: BTreeSet<String>,
}

impl CorpusStatsBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, word: &SyllabifiedWord) {
        self.add_pieces(&word.word, &word.syllables);
    }

    /// Adds a word given as its pieces, e.g. from a pre-segmented corpus.
    pub fn add_pieces<S: AsRef<str>>(&mut self, word: &str, pieces: &[S]) {
        self.n_word += 1;
        if !self.words.contains(word) {
            self.words.insert(String::from(word));
        }
        for s in pieces {
            let s = s.as_ref();
            self.n_syl += 1;
            if !self.syls.contains(s) {
                self.syls.insert(String::from(s));
            }
        }
        for g in text::graphemes(word) {
            if g.chars().all(char::is_whitespace) {
                continue;
            }
            self.n_char += 1;
            if !self.chars.contains(g) {
                self.chars.insert(String::from(g));
            }
        }
    }

    /// Folds another builder in. Order of merging does not matter.
    pub fn merge(&mut self, other: CorpusStatsBuilder) {
        self.n_word += other.n_word;
        self.n_syl += other.n_syl;
        self.n_char += other.n_char;
        self.words.extend(other.words);
        self.syls.extend(other.syls);
        self.chars.extend(other.chars);
    }

    pub fn finish(&self) -> CorpusStats {
        CorpusStats {
            n_word: self.n_word,
            v_word: self.words.len() as u64,
            n_syl: self.n_syl,
            v_syl: self.syls.len() as u64,
            n_char: self.n_char,
            v_char: self.chars.len() as u64,
        }
    }
}
