//! One entry point over every segmentation method.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bpe::BpeModel;
use crate::hyphenator::PatternSet;
use crate::metrics::{CorpusStats, CorpusStatsBuilder};
use crate::segio::SegmentedSentence;
use crate::syllabifier::fallback::char_split;
use crate::syllabifier::{
    EnglishSyllabifier, FallbackPolicy, LanguageProfile, Method, NotSyllabifiable, SyllabifiedWord,
};
use crate::text;

/// A configured word segmenter.
#[derive(Debug, Clone)]
pub enum Segmenter {
    Profile(LanguageProfile),
    English(EnglishSyllabifier),
    Hyphenator(PatternSet),
    Bpe(Arc<BpeModel>),
    Chars,
}

impl Segmenter {
    /// Segments one word without falling back. Only the rule-based
    /// syllabifiers can fail.
    pub fn try_segment(&self, word: &str) -> Result<SyllabifiedWord, NotSyllabifiable> {
        match self {
            Segmenter::Profile(p) => p.syllabify(word),
            Segmenter::English(e) => e.syllabify(word),
            Segmenter::Hyphenator(h) => Ok(h.hyphenate(word)),
            Segmenter::Bpe(m) => {
                let word = text::nfc(word);
                let syllables = m.encode(&word);
                Ok(SyllabifiedWord {
                    word,
                    syllables,
                    method: Method::Bpe,
                })
            }
            Segmenter::Chars => Ok(char_split(word, Method::Chars)),
        }
    }

    /// Segments one word, handing rejected words to `policy`.
    pub fn segment_word(&self, word: &str, policy: &FallbackPolicy) -> SyllabifiedWord {
        self.try_segment(word)
            .unwrap_or_else(|_| policy.apply(word))
    }

    /// Splits `line` on whitespace and segments every word.
    pub fn segment_sentence(&self, line: &str, policy: &FallbackPolicy) -> SegmentedSentence {
        let words: Vec<SyllabifiedWord> = text::words(line)
            .map(|w| self.segment_word(w, policy))
            .collect();
        SegmentedSentence::from_syllabified(&words)
    }

    /// Word, syllable and character counts over `lines`.
    pub fn corpus_stats<I, S>(&self, lines: I, policy: &FallbackPolicy) -> CorpusStats
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut b = CorpusStatsBuilder::new();
        for line in lines {
            for w in text::words(line.as_ref()) {
                b.add(&self.segment_word(w, policy));
            }
        }
        b.finish()
    }

    pub fn name(&self) -> &'static str {
        match self {
            Segmenter::Profile(_) => "profile",
            Segmenter::English(_) => "english",
            Segmenter::Hyphenator(_) => "hyphenation",
            Segmenter::Bpe(_) => "bpe",
            Segmenter::Chars => "chars",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;

    #[test]
    fn english_sentence_with_fallback() {
        let s = Segmenter::English(EnglishSyllabifier::new());
        let p = FallbackPolicy::CharSplit;
        let out = s.segment_sentence("a syllable hmm", &p);
        assert_eq!(
            out.words,
            [
                alloc::vec![String::from("a")],
                alloc::vec!["syl".into(), "la".into(), "ble".into()],
                alloc::vec!["h".into(), "m".into(), "m".into()],
            ]
        );
        assert_eq!(s.segment_word("hmm", &p).method, Method::FallbackChars);
    }

    #[test]
    fn stats_of_a_syllable() {
        let s = Segmenter::English(EnglishSyllabifier::new());
        let st = s.corpus_stats(["a syllable"], &FallbackPolicy::CharSplit);
        assert_eq!((st.n_word, st.n_syl, st.n_char), (2, 4, 9));
        let st = s.corpus_stats(["a a a"], &FallbackPolicy::CharSplit);
        assert_eq!((st.n_word, st.v_word), (3, 1));
        let st = s.corpus_stats(Vec::<&str>::new(), &FallbackPolicy::CharSplit);
        assert_eq!(st, CorpusStats::default());
    }

    #[test]
    fn chars_segmenter() {
        let w = Segmenter::Chars.segment_word("abc", &FallbackPolicy::CharSplit);
        assert_eq!(w.syllables, ["a", "b", "c"]);
        assert_eq!(w.method, Method::Chars);
    }
}
