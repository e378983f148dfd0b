//! Liang (TeX) pattern hyphenation, used as a syllabification proxy.
//!
//! A pattern such as `o1b` interleaves letters with digit weights. The word is
//! wrapped in `.` boundary markers, every pattern is matched at every position
//! and the maximum weight is kept for each gap between letters; odd maxima are
//! break points. Breaks closer than `min_left` letters to the start or
//! `min_right` letters to the end are suppressed, and explicit exceptions
//! replace the pattern result for their word.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::syllabifier::{Method, SyllabifiedWord};
use crate::text;

pub const DEFAULT_MIN_LEFT: usize = 2;
pub const DEFAULT_MIN_RIGHT: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("min_left and min_right must be at least 1")]
    BadMinimum,
}

/// Compiled hyphenation patterns plus exceptions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    language_id: String,
    patterns: BTreeMap<String, Vec<u8>>,
    exceptions: BTreeMap<String, Vec<usize>>,
    min_left: usize,
    min_right: usize,
    /// Longest key, in chars.
    max_key: usize,
}

impl Default for PatternSet {
    fn default() -> Self {
        PatternSet {
            language_id: String::new(),
            patterns: BTreeMap::new(),
            exceptions: BTreeMap::new(),
            min_left: DEFAULT_MIN_LEFT,
            min_right: DEFAULT_MIN_RIGHT,
            max_key: 0,
        }
    }
}

/// Splits a pattern token such as `.ab4c` into its key and weight vector.
pub fn parse_pattern(token: &str) -> Result<(String, Vec<u8>), String> {
    let chars: Vec<char> = token.chars().collect();
    let mut key = String::new();
    let mut weights = Vec::with_capacity(chars.len() + 1);
    let mut pending: Option<u8> = None;
    for (i, &c) in chars.iter().enumerate() {
        if let Some(d) = c.to_digit(10) {
            if pending.is_some() {
                return Err(format!("two adjacent digits in {token:?}"));
            }
            pending = Some(d as u8);
            continue;
        }
        if c == '.' {
            let at_start = key.is_empty();
            let at_end =
                i == chars.len() - 1 || (i == chars.len() - 2 && chars[i + 1].is_ascii_digit());
            if !(at_start || at_end) || (at_start && at_end && chars.len() == 1) {
                return Err(format!("boundary marker inside {token:?}"));
            }
            if at_start && pending.is_some() {
                return Err(format!("digit before leading boundary marker in {token:?}"));
            }
            if !at_start && at_end && i + 1 < chars.len() {
                return Err(format!("digit after trailing boundary marker in {token:?}"));
            }
        } else if c.is_whitespace() || c.is_control() {
            return Err(format!("unexpected character {c:?} in {token:?}"));
        }
        weights.push(pending.take().unwrap_or(0));
        key.extend(c.to_lowercase());
    }
    weights.push(pending.take().unwrap_or(0));
    if key.is_empty() || key.chars().all(|c| c == '.') {
        return Err(format!("empty key in {token:?}"));
    }
    if weights.len() != key.chars().count() + 1 {
        return Err(format!("{token:?} changes length when lowercased"));
    }
    Ok((key, weights))
}

impl PatternSet {
    pub fn new(language_id: &str) -> Self {
        PatternSet {
            language_id: language_id.to_owned(),
            ..PatternSet::default()
        }
    }

    /// Parses a pattern document.
    ///
    /// Accepts TeX files (`%` comments, `\patterns{...}` and
    /// `\hyphenation{...}` wrappers stripped) and Hunspell `hyph_*.dic` files
    /// (charset first line, `LEFTHYPHENMIN`/`RIGHTHYPHENMIN` directives).
    /// Tokens containing `-` are exceptions; everything else is a pattern.
    pub fn parse(doc: &str) -> Result<Self, PatternError> {
        let mut ps = PatternSet::default();
        let mut first_content = true;
        for (idx, raw) in doc.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('%').next().unwrap_or("");
            let mut fields = line.split_whitespace().peekable();
            let is_first = first_content;
            if fields.peek().is_some() {
                first_content = false;
            }
            match fields.peek().copied() {
                None => continue,
                Some(
                    kw @ ("LEFTHYPHENMIN"
                    | "RIGHTHYPHENMIN"
                    | "COMPOUNDLEFTHYPHENMIN"
                    | "COMPOUNDRIGHTHYPHENMIN"),
                ) => {
                    fields.next();
                    let n = fields
                        .next()
                        .and_then(|v| v.parse::<usize>().ok())
                        .ok_or_else(|| PatternError::Malformed {
                            line: line_no,
                            message: format!("{kw} needs a positive integer"),
                        })?;
                    if n == 0 {
                        return Err(PatternError::Malformed {
                            line: line_no,
                            message: format!("{kw} must be at least 1"),
                        });
                    }
                    match kw {
                        "LEFTHYPHENMIN" => ps.min_left = n,
                        "RIGHTHYPHENMIN" => ps.min_right = n,
                        _ => {}
                    }
                    continue;
                }
                Some("NOHYPHEN") => continue,
                Some(first)
                    if is_first && fields.clone().count() == 1 && is_charset_name(first) =>
                {
                    continue
                }
                _ => {}
            }
            for field in fields {
                let mut token = field;
                for wrapper in ["\\patterns{", "\\hyphenation{", "{"] {
                    if let Some(rest) = token.strip_prefix(wrapper) {
                        token = rest;
                    }
                }
                token = token.trim_end_matches('}');
                if token.is_empty() {
                    continue;
                }
                if token.contains('-') {
                    ps.add_exception(token)
                        .map_err(|message| PatternError::Malformed {
                            line: line_no,
                            message,
                        })?;
                } else {
                    let (key, weights) =
                        parse_pattern(token).map_err(|message| PatternError::Malformed {
                            line: line_no,
                            message,
                        })?;
                    ps.insert(key, weights);
                }
            }
        }
        Ok(ps)
    }

    /// Adds exceptions from a document with one hyphenated word per line.
    pub fn add_exceptions(&mut self, doc: &str) -> Result<(), PatternError> {
        for (idx, raw) in doc.lines().enumerate() {
            let line = raw.split('%').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            self.add_exception(line)
                .map_err(|message| PatternError::Malformed {
                    line: idx + 1,
                    message,
                })?;
        }
        Ok(())
    }

    /// Adds one exception such as `ta-ble`.
    pub fn add_exception(&mut self, marked: &str) -> Result<(), String> {
        let marked = text::nfc(marked);
        let mut word = String::new();
        let mut breaks = Vec::new();
        let mut len = 0usize;
        for c in marked.chars() {
            if c == '-' {
                if len == 0 || breaks.last() == Some(&len) {
                    return Err(format!("misplaced hyphen in exception {marked:?}"));
                }
                breaks.push(len);
            } else if c.is_whitespace() || c.is_ascii_digit() {
                return Err(format!(
                    "unexpected character {c:?} in exception {marked:?}"
                ));
            } else {
                word.push(lower_char(c));
                len += 1;
            }
        }
        if breaks.last() == Some(&len) || word.is_empty() {
            return Err(format!("misplaced hyphen in exception {marked:?}"));
        }
        self.exceptions.insert(word, breaks);
        Ok(())
    }

    /// Inserts a pattern, keeping the pointwise maximum if the key exists.
    pub fn insert(&mut self, key: String, weights: Vec<u8>) {
        debug_assert_eq!(weights.len(), key.chars().count() + 1);
        self.max_key = self.max_key.max(key.chars().count());
        self.patterns
            .entry(key)
            .and_modify(|w| {
                for (a, b) in w.iter_mut().zip(&weights) {
                    *a = (*a).max(*b);
                }
            })
            .or_insert(weights);
    }

    pub fn with_min(mut self, min_left: usize, min_right: usize) -> Result<Self, PatternError> {
        if min_left == 0 || min_right == 0 {
            return Err(PatternError::BadMinimum);
        }
        self.min_left = min_left;
        self.min_right = min_right;
        Ok(self)
    }

    pub fn with_language(mut self, language_id: &str) -> Self {
        self.language_id = language_id.to_owned();
        self
    }

    pub fn language_id(&self) -> &str {
        &self.language_id
    }

    pub fn min_left(&self) -> usize {
        self.min_left
    }

    pub fn min_right(&self) -> usize {
        self.min_right
    }

    pub fn patterns(&self) -> &BTreeMap<String, Vec<u8>> {
        &self.patterns
    }

    pub fn exceptions(&self) -> &BTreeMap<String, Vec<usize>> {
        &self.exceptions
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty() && self.exceptions.is_empty()
    }

    /// Character offsets (letters before the break) where `word` may break.
    pub fn break_points(&self, word: &str) -> Vec<usize> {
        let lower: Vec<char> = word.chars().map(lower_char).collect();
        let n = lower.len();
        if n < self.min_left + self.min_right || !lower.iter().all(|c| c.is_alphabetic()) {
            return Vec::new();
        }
        let allowed = |k: usize| k >= self.min_left && n - k >= self.min_right;

        let folded: String = lower.iter().collect();
        if let Some(breaks) = self.exceptions.get(&folded) {
            return breaks.iter().copied().filter(|&k| allowed(k)).collect();
        }

        let mut wrapped = Vec::with_capacity(n + 2);
        wrapped.push('.');
        wrapped.extend_from_slice(&lower);
        wrapped.push('.');
        // levels[g]: gap before wrapped[g].
        let mut levels = alloc::vec![0u8; wrapped.len() + 1];
        let mut key = String::new();
        for start in 0..wrapped.len() {
            key.clear();
            for &c in wrapped[start..].iter().take(self.max_key) {
                key.push(c);
                if let Some(weights) = self.patterns.get(&key) {
                    for (off, &w) in weights.iter().enumerate() {
                        let g = start + off;
                        levels[g] = levels[g].max(w);
                    }
                }
            }
        }
        // Break after k letters is the gap before wrapped[k + 1].
        (1..n)
            .filter(|&k| allowed(k) && levels[k + 1] % 2 == 1)
            .collect()
    }

    /// Hyphenates `word` into syllable-like pieces.
    ///
    /// Words with non-letters come back whole. Breaks that would fall inside
    /// a grapheme cluster are dropped.
    pub fn hyphenate(&self, word: &str) -> SyllabifiedWord {
        let word = text::nfc(word);
        let breaks = self.break_points(&word);
        if breaks.is_empty() {
            return SyllabifiedWord::whole(word, Method::Hyphenation);
        }
        let char_offsets: Vec<usize> = word.char_indices().map(|(b, _)| b).collect();
        let mut grapheme_starts = alloc::collections::BTreeSet::new();
        let mut pos = 0;
        for g in text::graphemes(&word) {
            grapheme_starts.insert(pos);
            pos += g.len();
        }
        let cuts: Vec<usize> = breaks
            .into_iter()
            .map(|k| char_offsets[k])
            .filter(|b| grapheme_starts.contains(b))
            .collect();
        SyllabifiedWord::from_boundaries(word, &cuts, Method::Hyphenation)
    }
}

fn lower_char(c: char) -> char {
    let mut it = c.to_lowercase();
    match (it.next(), it.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

fn is_charset_name(s: &str) -> bool {
    let upper = s.to_ascii_uppercase();
    upper.starts_with("UTF")
        || upper.starts_with("ISO")
        || upper.starts_with("KOI")
        || upper.starts_with("CP")
        || upper.starts_with("MICROSOFT")
        || upper.starts_with("TIS")
}
