use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Method, NotSyllabifiable, Reason, SyllabifiedWord};
use crate::text;

/// Consonant letter pairs that act as a single consonant and stay together.
const DIGRAPHS: &[&str] = &["ch", "ck", "gh", "ph", "qu", "sh", "th", "wh"];

/// Vowel letter teams that form a single nucleus.
const VOWEL_TEAMS: &[&str] = &[
    "ai", "au", "aw", "ay", "ea", "ee", "ei", "eu", "ew", "ey", "ie", "oa", "oe", "oi", "oo", "ou",
    "ow", "oy", "ue", "ui",
];

/// Clusters allowed at the start of an English syllable (besides any single
/// consonant).
const ONSETS: &[&str] = &[
    "bl", "br", "cl", "cr", "dr", "dw", "fl", "fr", "gl", "gr", "pl", "pr", "sc", "sk", "sl", "sm",
    "sn", "sp", "st", "sw", "tr", "tw", "scr", "spl", "spr", "str", "squ", "shr", "thr", "chr",
    "phr", "sch",
];

const PREFIXES: &[&str] = &[
    "anti", "dis", "inter", "mis", "non", "over", "pre", "re", "sub", "trans", "un", "under",
];

const SUFFIXES: &[&str] = &["ful", "ing", "less", "ment", "ness"];

/// English orthographic syllabification.
///
/// Rules, applied in this order:
///
/// 1. compounds split at the component boundary when both halves are in the
///    optional word list;
/// 2. a prefix or suffix from a fixed list is split off when the remainder
///    still carries a vowel;
/// 3. a final consonant + `le` forms its own syllable;
/// 4. a single consonant between vowels joins the following vowel (V-CV);
/// 5. two consonants between vowels are split (VC-CV) unless they form a
///    digraph or a legal onset; longer clusters give the next syllable the
///    longest legal onset.
///
/// `y` is a vowel except before a vowel, and a final `e` after a consonant is
/// silent unless it is the only vowel or part of a final `-Cle`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnglishSyllabifier {
    compounds: BTreeSet<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Vowel,
    Consonant,
}

#[derive(Debug)]
struct Letter {
    folded: String,
    start: usize,
}

impl EnglishSyllabifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Enables compound splitting against `words` (lowercased).
    pub fn with_compounds<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        EnglishSyllabifier {
            compounds: words
                .into_iter()
                .map(|w| text::fold(w.as_ref()))
                .filter(|w| !w.is_empty())
                .collect(),
        }
    }

    pub fn syllabify(&self, word: &str) -> Result<SyllabifiedWord, NotSyllabifiable> {
        let word = text::nfc(word);
        if word.is_empty() {
            return Err(NotSyllabifiable::new(&word, Reason::Empty));
        }
        let mut letters = Vec::new();
        let mut pos = 0;
        for g in text::graphemes(&word) {
            let folded = text::fold(g);
            if !folded.chars().all(|c| c.is_ascii_lowercase()) || folded.chars().count() != 1 {
                return Err(NotSyllabifiable::new(
                    &word,
                    Reason::OutsideAlphabet(String::from(g)),
                ));
            }
            letters.push(Letter { folded, start: pos });
            pos += g.len();
        }
        let folded: String = letters.iter().map(|l| l.folded.as_str()).collect();

        let mut cuts = Vec::new();
        self.split_range(&folded, 0, letters.len(), &mut cuts)
            .map_err(|reason| NotSyllabifiable::new(&word, reason))?;
        let cuts: Vec<usize> = cuts.into_iter().map(|i| letters[i].start).collect();
        Ok(SyllabifiedWord::from_boundaries(
            word,
            &cuts,
            Method::EnglishRules,
        ))
    }

    /// Pushes letter-index cut points for `folded[lo..hi]` (ASCII, so byte and
    /// letter indices coincide).
    fn split_range(
        &self,
        folded: &str,
        lo: usize,
        hi: usize,
        cuts: &mut Vec<usize>,
    ) -> Result<(), Reason> {
        let part = &folded[lo..hi];
        if !self.compounds.is_empty() && lo == 0 && hi == folded.len() {
            for mid in 1..part.len() {
                if self.compounds.contains(&part[..mid])
                    && self.compounds.contains(&part[mid..])
                    && has_vowel(&part[..mid])
                    && has_vowel(&part[mid..])
                {
                    self.split_range(folded, lo, lo + mid, cuts)?;
                    cuts.push(lo + mid);
                    return self.split_range(folded, lo + mid, hi, cuts);
                }
            }
        }
        if lo == 0 {
            for prefix in PREFIXES {
                if let Some(rest) = part.strip_prefix(prefix) {
                    let starts_consonant = rest.chars().next().is_some_and(|c| !is_vowel_letter(c));
                    if rest.len() >= 3 && starts_consonant && has_vowel(rest) && has_vowel(prefix) {
                        cuts.push(lo + prefix.len());
                        return self.split_range(folded, lo + prefix.len(), hi, cuts);
                    }
                }
            }
        }
        if hi == folded.len() {
            for suffix in SUFFIXES {
                if let Some(rest) = part.strip_suffix(suffix) {
                    if rest.len() >= 2 && has_vowel(rest) {
                        self.split_core(folded, lo, hi - suffix.len(), cuts)?;
                        cuts.push(hi - suffix.len());
                        return Ok(());
                    }
                }
            }
        }
        self.split_core(folded, lo, hi, cuts)
    }

    fn split_core(
        &self,
        folded: &str,
        lo: usize,
        hi: usize,
        cuts: &mut Vec<usize>,
    ) -> Result<(), Reason> {
        let part = &folded.as_bytes()[lo..hi];
        let n = part.len();
        let kinds: Vec<Kind> = (0..n).map(|i| letter_kind(part, i)).collect();

        // Consonant units (digraphs merged) and nuclei over letter indices.
        let mut nuclei: Vec<(usize, usize)> = Vec::new();
        let mut i = 0;
        while i < n {
            if kinds[i] == Kind::Vowel {
                // "ow"/"ew" keep the w even before a vowel ("vow-el"); "aw"
                // only when no vowel follows ("a-way").
                let w_team = i + 1 < n
                    && part[i + 1] == b'w'
                    && (part[i] != b'a' || i + 2 == n || kinds[i + 2] == Kind::Consonant);
                let team = i + 1 < n
                    && (kinds[i + 1] == Kind::Vowel || w_team)
                    && VOWEL_TEAMS.contains(&pair(part, i));
                let end = if team { i + 2 } else { i + 1 };
                nuclei.push((i, end));
                i = end;
            } else {
                i += 1;
            }
        }
        if nuclei.is_empty() {
            return Err(Reason::NoVowel);
        }

        // Silent final e: "make", but not "the" or "single".
        let ends_cle =
            n >= 3 && part[n - 1] == b'e' && part[n - 2] == b'l' && kinds[n - 3] == Kind::Consonant;
        if nuclei.len() > 1 && !ends_cle {
            let (s, e) = nuclei[nuclei.len() - 1];
            if s == n - 1 && e == n && part[s] == b'e' && kinds[s - 1] == Kind::Consonant {
                nuclei.pop();
            }
        }

        for k in 1..nuclei.len() {
            let (cl_lo, cl_hi) = (nuclei[k - 1].1, nuclei[k].0);
            let last = k == nuclei.len() - 1;
            let cut = if last && ends_cle && cl_hi == n - 1 && cl_hi - cl_lo >= 2 {
                // -Cle: the consonant before "le" opens the last syllable.
                cl_hi - 2
            } else {
                onset_cut(part, cl_lo, cl_hi)
            };
            cuts.push(lo + cut);
        }
        Ok(())
    }
}

fn pair(bytes: &[u8], i: usize) -> &str {
    core::str::from_utf8(&bytes[i..i + 2]).unwrap_or("")
}

fn is_vowel_letter(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y')
}

fn has_vowel(s: &str) -> bool {
    let b = s.as_bytes();
    (0..b.len()).any(|i| letter_kind(b, i) == Kind::Vowel)
}

fn letter_kind(b: &[u8], i: usize) -> Kind {
    match b[i] {
        b'a' | b'e' | b'i' | b'o' | b'u' => {
            // "qu": the u belongs to the consonant.
            if b[i] == b'u' && i > 0 && b[i - 1] == b'q' {
                Kind::Consonant
            } else {
                Kind::Vowel
            }
        }
        b'y' => {
            let before_vowel =
                i + 1 < b.len() && matches!(b[i + 1], b'a' | b'e' | b'i' | b'o' | b'u');
            if before_vowel {
                Kind::Consonant
            } else {
                Kind::Vowel
            }
        }
        _ => Kind::Consonant,
    }
}

/// Where to cut the consonant cluster `part[lo..hi]` lying between two
/// nuclei: the following syllable gets the longest legal onset.
fn onset_cut(part: &[u8], lo: usize, hi: usize) -> usize {
    if hi == lo {
        return lo;
    }
    // Unit boundaries inside the cluster, digraphs kept whole.
    let mut starts = Vec::new();
    let mut i = lo;
    while i < hi {
        starts.push(i);
        if i + 1 < hi && DIGRAPHS.contains(&pair(part, i)) {
            i += 2;
        } else {
            i += 1;
        }
    }
    for &start in &starts {
        let onset = core::str::from_utf8(&part[start..hi]).unwrap_or("");
        let single_unit = start == *starts.last().unwrap_or(&start);
        if single_unit || ONSETS.contains(&onset) || DIGRAPHS.contains(&onset) {
            // "ck" closes the preceding syllable ("pock-et").
            if onset == "ck" {
                return hi;
            }
            return start;
        }
    }
    hi
}
