//! Unicode helpers shared by every segmenter.

use alloc::string::String;
use alloc::vec::Vec;

use unicode_normalization::UnicodeNormalization;
use unicode_segmentation::UnicodeSegmentation;

/// NFC-normalises `s`.
pub fn nfc(s: &str) -> String {
    s.nfc().collect()
}

/// Extended grapheme clusters of `s`, in order.
pub fn graphemes(s: &str) -> Vec<&str> {
    s.graphemes(true).collect()
}

/// Number of grapheme clusters in `s`.
pub fn grapheme_count(s: &str) -> usize {
    s.graphemes(true).count()
}

/// Lowercases a grapheme for rule matching.
pub fn fold(g: &str) -> String {
    g.chars().flat_map(char::to_lowercase).collect()
}

/// Splits on Unicode whitespace; punctuation stays attached to words.
pub fn words(line: &str) -> impl Iterator<Item = &str> {
    line.split_whitespace()
}
