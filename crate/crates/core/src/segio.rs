//! Serialised forms of a segmented sentence.
//!
//! | format     | `A` + `syl la ble`      |
//! |------------|-------------------------|
//! | `boundary` | `A @ syl la ble`        |
//! | `suffix`   | `A syl@ la@ ble`        |
//! | `prefix`   | `▁A ▁syl la ble`        |
//!
//! Every encoder rejects pieces that would collide with its marker, so the
//! matching decoder is an exact inverse.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::syllabifier::SyllabifiedWord;

pub const BOUNDARY_TOKEN: &str = "@";
pub const SUFFIX_MARKER: &str = "@";
/// U+2581 LOWER ONE EIGHTH BLOCK.
pub const PREFIX_MARKER: &str = "\u{2581}";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormatId {
    Boundary,
    Suffix,
    Prefix,
}

impl FormatId {
    pub const ALL: [FormatId; 3] = [FormatId::Boundary, FormatId::Suffix, FormatId::Prefix];

    pub fn as_str(self) -> &'static str {
        match self {
            FormatId::Boundary => "boundary",
            FormatId::Suffix => "suffix",
            FormatId::Prefix => "prefix",
        }
    }
}

impl fmt::Display for FormatId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormatId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "boundary" => Ok(FormatId::Boundary),
            "suffix" => Ok(FormatId::Suffix),
            "prefix" => Ok(FormatId::Prefix),
            other => Err(alloc::format!(
                "unknown format {other:?} (expected boundary, suffix or prefix)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("word {word}: piece {piece:?} collides with the marker {marker:?}")]
    Collision {
        word: usize,
        piece: String,
        marker: String,
    },
    #[error("word {word}: empty piece or word")]
    EmptyPiece { word: usize },
    #[error("word {word}: piece {piece:?} contains whitespace")]
    Whitespace { word: usize, piece: String },
    #[error("malformed input at byte {position}: {message}")]
    Malformed { position: usize, message: String },
}

/// A sentence as an ordered list of words, each an ordered list of pieces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SegmentedSentence {
    pub words: Vec<Vec<String>>,
}

impl SegmentedSentence {
    pub fn new(words: Vec<Vec<String>>) -> Self {
        SegmentedSentence { words }
    }

    pub fn from_syllabified(words: &[SyllabifiedWord]) -> Self {
        SegmentedSentence {
            words: words.iter().map(|w| w.syllables.clone()).collect(),
        }
    }

    /// Each word's pieces joined without a separator.
    pub fn reconstructed_words(&self) -> Vec<String> {
        self.words.iter().map(|w| w.concat()).collect()
    }

    /// Words joined by single spaces.
    pub fn detokenize(&self) -> String {
        self.reconstructed_words().join(" ")
    }

    pub fn encode(&self, format: FormatId) -> Result<String, FormatError> {
        match format {
            FormatId::Boundary => encode_boundary_format(self),
            FormatId::Suffix => encode_suffix_format(self),
            FormatId::Prefix => encode_prefix_format(self),
        }
    }
}

fn check_pieces(s: &SegmentedSentence) -> Result<(), FormatError> {
    for (wi, word) in s.words.iter().enumerate() {
        if word.is_empty() {
            return Err(FormatError::EmptyPiece { word: wi });
        }
        for piece in word {
            if piece.is_empty() {
                return Err(FormatError::EmptyPiece { word: wi });
            }
            if piece.chars().any(char::is_whitespace) {
                return Err(FormatError::Whitespace {
                    word: wi,
                    piece: piece.clone(),
                });
            }
        }
    }
    Ok(())
}

fn collision(word: usize, piece: &str, marker: &str) -> FormatError {
    FormatError::Collision {
        word,
        piece: piece.to_owned(),
        marker: marker.to_owned(),
    }
}

/// `A @ syl la ble`: pieces separated by spaces, words by a standalone `@`.
pub fn encode_boundary_format(s: &SegmentedSentence) -> Result<String, FormatError> {
    check_pieces(s)?;
    let mut out = String::new();
    for (wi, word) in s.words.iter().enumerate() {
        if wi > 0 {
            out.push(' ');
            out.push_str(BOUNDARY_TOKEN);
        }
        for piece in word {
            if piece == BOUNDARY_TOKEN {
                return Err(collision(wi, piece, BOUNDARY_TOKEN));
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(piece);
        }
    }
    Ok(out)
}

/// `A syl@ la@ ble`: every non-final piece of a word carries the suffix.
pub fn encode_suffix_format(s: &SegmentedSentence) -> Result<String, FormatError> {
    check_pieces(s)?;
    let mut out = String::new();
    for (wi, word) in s.words.iter().enumerate() {
        for (pi, piece) in word.iter().enumerate() {
            if piece.ends_with(SUFFIX_MARKER) {
                return Err(collision(wi, piece, SUFFIX_MARKER));
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(piece);
            if pi + 1 < word.len() {
                out.push_str(SUFFIX_MARKER);
            }
        }
    }
    Ok(out)
}

/// `▁A ▁syl la ble`: the first piece of every word carries the marker.
pub fn encode_prefix_format(s: &SegmentedSentence) -> Result<String, FormatError> {
    encode_prefix_format_with(s, PREFIX_MARKER)
}

pub fn encode_prefix_format_with(
    s: &SegmentedSentence,
    marker: &str,
) -> Result<String, FormatError> {
    check_pieces(s)?;
    let mut out = String::new();
    for (wi, word) in s.words.iter().enumerate() {
        for (pi, piece) in word.iter().enumerate() {
            if piece.starts_with(marker) {
                return Err(collision(wi, piece, marker));
            }
            if !out.is_empty() {
                out.push(' ');
            }
            if pi == 0 {
                out.push_str(marker);
            }
            out.push_str(piece);
        }
    }
    Ok(out)
}

/// Space-separated tokens with their byte offsets.
fn tokens(text: &str) -> Result<Vec<(usize, &str)>, FormatError> {
    let mut out = Vec::new();
    if text.is_empty() {
        return Ok(out);
    }
    let mut pos = 0;
    for tok in text.split(' ') {
        if tok.is_empty() {
            return Err(FormatError::Malformed {
                position: pos,
                message: "empty token (leading, trailing or doubled space)".into(),
            });
        }
        out.push((pos, tok));
        pos += tok.len() + 1;
    }
    Ok(out)
}

pub fn decode_format(text: &str, format: FormatId) -> Result<SegmentedSentence, FormatError> {
    match format {
        FormatId::Boundary => decode_boundary_format(text),
        FormatId::Suffix => decode_suffix_format(text),
        FormatId::Prefix => decode_prefix_format_with(text, PREFIX_MARKER),
    }
}

pub fn decode_boundary_format(text: &str) -> Result<SegmentedSentence, FormatError> {
    let mut words: Vec<Vec<String>> = Vec::new();
    let mut current: Vec<String> = Vec::new();
    for (pos, tok) in tokens(text)? {
        if tok == BOUNDARY_TOKEN {
            if current.is_empty() {
                return Err(FormatError::Malformed {
                    position: pos,
                    message: "boundary token without a preceding word".into(),
                });
            }
            words.push(core::mem::take(&mut current));
        } else {
            current.push(tok.to_owned());
        }
    }
    if current.is_empty() && !words.is_empty() {
        return Err(FormatError::Malformed {
            position: text.len(),
            message: "trailing boundary token".into(),
        });
    }
    if !current.is_empty() {
        words.push(current);
    }
    Ok(SegmentedSentence { words })
}

pub fn decode_suffix_format(text: &str) -> Result<SegmentedSentence, FormatError> {
    let mut words: Vec<Vec<String>> = Vec::new();
    let mut current: Vec<String> = Vec::new();
    for (pos, tok) in tokens(text)? {
        match tok.strip_suffix(SUFFIX_MARKER) {
            Some(piece) => {
                if piece.is_empty() || piece.ends_with(SUFFIX_MARKER) {
                    return Err(FormatError::Malformed {
                        position: pos,
                        message: alloc::format!("bad continuation token {tok:?}"),
                    });
                }
                current.push(piece.to_owned());
            }
            None => {
                current.push(tok.to_owned());
                words.push(core::mem::take(&mut current));
            }
        }
    }
    if !current.is_empty() {
        return Err(FormatError::Malformed {
            position: text.len(),
            message: "last word ends with a continuation marker".into(),
        });
    }
    Ok(SegmentedSentence { words })
}

pub fn decode_prefix_format_with(
    text: &str,
    marker: &str,
) -> Result<SegmentedSentence, FormatError> {
    let mut words: Vec<Vec<String>> = Vec::new();
    for (pos, tok) in tokens(text)? {
        match tok.strip_prefix(marker) {
            Some(piece) => {
                if piece.is_empty() || piece.starts_with(marker) {
                    return Err(FormatError::Malformed {
                        position: pos,
                        message: alloc::format!("bad word-initial token {tok:?}"),
                    });
                }
                words.push(alloc::vec![piece.to_owned()]);
            }
            None => match words.last_mut() {
                Some(w) => w.push(tok.to_owned()),
                None => {
                    return Err(FormatError::Malformed {
                        position: pos,
                        message: "first token lacks the word-start marker".into(),
                    })
                }
            },
        }
    }
    Ok(SegmentedSentence { words })
}
