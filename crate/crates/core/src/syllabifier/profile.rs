use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Method, NotSyllabifiable, Reason, SyllabifiedWord};
use crate::text;

/// Errors from building or parsing a [`LanguageProfile`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProfileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing required field `{0}`")]
    MissingField(&'static str),
    #[error("invalid `{field}`: {message}")]
    Invariant {
        field: &'static str,
        message: String,
    },
}

fn invariant(field: &'static str, message: String) -> ProfileError {
    ProfileError::Invariant { field, message }
}

/// Raw, unvalidated profile contents as written in a profile document.
///
/// Multi-grapheme entries (diphthongs, onsets, codas) are written as plain
/// concatenations, e.g. `"ai"` or `"bl"`; they are split into graphemes and
/// digraphs during validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProfileDef {
    pub language_id: String,
    pub vowels: Vec<String>,
    pub diphthongs: Vec<String>,
    pub hiatus: Vec<String>,
    pub digraphs: Vec<String>,
    pub onsets: Vec<String>,
    pub codas: Vec<String>,
}

type Units = Vec<String>;

/// Declarative syllabification rules for one language.
///
/// Immutable once built; every method takes `&self`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageProfile {
    language_id: String,
    vowels: BTreeSet<String>,
    diphthongs: BTreeSet<(String, String)>,
    hiatus_vowels: BTreeSet<String>,
    digraphs: BTreeSet<String>,
    /// Digraphs as folded grapheme lists, longest first.
    digraph_units: Vec<Vec<String>>,
    consonants: BTreeSet<String>,
    valid_onsets: BTreeSet<Units>,
    valid_codas: BTreeSet<Units>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Vowel,
    Consonant,
}

/// One segmentation unit: a grapheme or a digraph.
#[derive(Debug, Clone)]
struct Unit {
    folded: String,
    /// Byte range in the normalised word.
    start: usize,
    end: usize,
}

fn single_grapheme(field: &'static str, g: &str) -> Result<String, ProfileError> {
    let g = text::fold(&text::nfc(g));
    if text::grapheme_count(&g) != 1 {
        return Err(invariant(field, format!("{g:?} is not a single grapheme")));
    }
    Ok(g)
}

impl LanguageProfile {
    /// Validates `def` and builds the profile.
    pub fn new(def: ProfileDef) -> Result<Self, ProfileError> {
        if def.language_id.trim().is_empty() {
            return Err(ProfileError::MissingField("language"));
        }
        if def.vowels.is_empty() {
            return Err(ProfileError::MissingField("vowels"));
        }

        let mut vowels = BTreeSet::new();
        for v in &def.vowels {
            vowels.insert(single_grapheme("vowels", v)?);
        }
        let mut hiatus_vowels = BTreeSet::new();
        for v in &def.hiatus {
            let v = single_grapheme("hiatus", v)?;
            vowels.insert(v.clone());
            hiatus_vowels.insert(v);
        }

        let mut diphthongs = BTreeSet::new();
        for d in &def.diphthongs {
            let d = text::fold(&text::nfc(d));
            let gs = text::graphemes(&d);
            if gs.len() != 2 {
                return Err(invariant(
                    "diphthongs",
                    format!("{d:?} is not a pair of single graphemes"),
                ));
            }
            for g in &gs {
                if !vowels.contains(*g) {
                    return Err(invariant(
                        "diphthongs",
                        format!("{d:?} has non-vowel member {g:?}"),
                    ));
                }
            }
            diphthongs.insert((gs[0].to_owned(), gs[1].to_owned()));
        }

        let mut digraphs = BTreeSet::new();
        let mut digraph_units = Vec::new();
        for d in &def.digraphs {
            let d = text::fold(&text::nfc(d));
            let gs: Vec<String> = text::graphemes(&d).into_iter().map(String::from).collect();
            if gs.len() < 2 {
                return Err(invariant(
                    "digraphs",
                    format!("{d:?} must span at least two graphemes"),
                ));
            }
            if vowels.contains(&gs[0]) || gs.iter().all(|g| vowels.contains(g)) {
                return Err(invariant(
                    "digraphs",
                    format!("{d:?} has vowel component {:?}", gs[0]),
                ));
            }
            if digraphs.insert(d) {
                digraph_units.push(gs);
            }
        }
        digraph_units.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

        let mut profile = LanguageProfile {
            language_id: def.language_id.trim().to_owned(),
            vowels,
            diphthongs,
            hiatus_vowels,
            digraphs,
            digraph_units,
            consonants: BTreeSet::new(),
            valid_onsets: BTreeSet::new(),
            valid_codas: BTreeSet::new(),
        };

        let mut consonants: BTreeSet<String> = profile.digraphs.clone();
        let mut onsets = BTreeSet::new();
        onsets.insert(Units::new());
        let mut codas = BTreeSet::new();
        codas.insert(Units::new());
        for (field, entries, table) in [
            ("onsets", &def.onsets, &mut onsets),
            ("codas", &def.codas, &mut codas),
        ] {
            for entry in entries {
                let entry = text::fold(&text::nfc(entry));
                let units: Units = profile
                    .split_units(&entry)
                    .into_iter()
                    .map(|u| u.folded)
                    .collect();
                for u in &units {
                    if profile.vowels.contains(u) {
                        return Err(invariant(field, format!("{entry:?} contains vowel {u:?}")));
                    }
                    consonants.insert(u.clone());
                }
                table.insert(units);
            }
        }
        for c in &consonants {
            if profile.vowels.contains(c) {
                return Err(invariant(
                    "digraphs",
                    format!("{c:?} is listed both as vowel and consonant"),
                ));
            }
            if !onsets.contains(&alloc::vec![c.clone()]) {
                return Err(invariant(
                    "onsets",
                    format!("missing single consonant {c:?}"),
                ));
            }
        }
        profile.consonants = consonants;
        profile.valid_onsets = onsets;
        profile.valid_codas = codas;
        Ok(profile)
    }

    /// Parses a profile document and validates it.
    ///
    /// The document is a list of `key = values` lines (`:` also works) with
    /// `#` comments. Keys are `language`, `vowels`, `diphthongs`, `hiatus`,
    /// `digraphs`, `onsets` and `codas`; a repeated key appends to its list.
    pub fn parse(doc: &str) -> Result<Self, ProfileError> {
        let mut def = ProfileDef::default();
        let mut seen_any = false;
        for (idx, raw) in doc.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some(sep) = line.find(['=', ':']) else {
                return Err(ProfileError::Parse {
                    line: line_no,
                    message: format!("expected `key = values`, found {line:?}"),
                });
            };
            let key = line[..sep].trim();
            let values = line[sep + 1..].split_whitespace().map(String::from);
            let list = match key {
                "language" | "language_id" => {
                    let mut vals = values;
                    match (vals.next(), vals.next()) {
                        (Some(id), None) => def.language_id = id,
                        _ => {
                            return Err(ProfileError::Parse {
                                line: line_no,
                                message: "`language` takes exactly one value".into(),
                            })
                        }
                    }
                    seen_any = true;
                    continue;
                }
                "vowels" => &mut def.vowels,
                "diphthongs" => &mut def.diphthongs,
                "hiatus" => &mut def.hiatus,
                "digraphs" => &mut def.digraphs,
                "onsets" => &mut def.onsets,
                "codas" => &mut def.codas,
                other => {
                    return Err(ProfileError::Parse {
                        line: line_no,
                        message: format!("unknown section {other:?}"),
                    })
                }
            };
            list.extend(values);
            seen_any = true;
        }
        if !seen_any {
            return Err(ProfileError::Parse {
                line: 0,
                message: "empty profile document".into(),
            });
        }
        Self::new(def)
    }

    pub fn language_id(&self) -> &str {
        &self.language_id
    }

    pub fn vowels(&self) -> &BTreeSet<String> {
        &self.vowels
    }

    pub fn consonants(&self) -> &BTreeSet<String> {
        &self.consonants
    }

    pub fn digraphs(&self) -> &BTreeSet<String> {
        &self.digraphs
    }

    pub fn hiatus_vowels(&self) -> &BTreeSet<String> {
        &self.hiatus_vowels
    }

    pub fn is_vowel(&self, g: &str) -> bool {
        self.vowels.contains(g)
    }

    /// Whether `pair` forms a single nucleus.
    pub fn is_diphthong(&self, first: &str, second: &str) -> bool {
        !self.hiatus_vowels.contains(first)
            && !self.hiatus_vowels.contains(second)
            && self
                .diphthongs
                .iter()
                .any(|(a, b)| a == first && b == second)
    }

    pub fn is_valid_onset(&self, units: &[String]) -> bool {
        self.valid_onsets.contains(units)
    }

    pub fn is_valid_coda(&self, units: &[String]) -> bool {
        self.valid_codas.contains(units)
    }

    /// Greedy longest-match split of an NFC word into graphemes and digraphs.
    fn split_units(&self, word: &str) -> Vec<Unit> {
        let mut offsets = Vec::new();
        let mut folded = Vec::new();
        let mut pos = 0;
        for g in text::graphemes(word) {
            offsets.push(pos);
            folded.push(text::fold(g));
            pos += g.len();
        }
        offsets.push(pos);

        let mut units = Vec::with_capacity(folded.len());
        let mut i = 0;
        while i < folded.len() {
            let len = self
                .digraph_units
                .iter()
                .find(|d| folded.len() - i >= d.len() && folded[i..i + d.len()] == d[..])
                .map_or(1, Vec::len);
            units.push(Unit {
                folded: folded[i..i + len].concat(),
                start: offsets[i],
                end: offsets[i + len],
            });
            i += len;
        }
        units
    }

    /// Splits `word` into syllables.
    ///
    /// Vowel runs become nuclei (a diphthong pair counts as one nucleus unless
    /// either member is a hiatus vowel). The consonants between two nuclei are
    /// split so that the following syllable receives the longest onset for
    /// which both halves are legal; the leading cluster must be a legal onset
    /// and the trailing one a legal coda.
    pub fn syllabify(&self, word: &str) -> Result<SyllabifiedWord, NotSyllabifiable> {
        let word = text::nfc(word);
        if word.is_empty() {
            return Err(NotSyllabifiable::new(&word, Reason::Empty));
        }
        let units = self.split_units(&word);
        let mut classes = Vec::with_capacity(units.len());
        for u in &units {
            let class = if self.vowels.contains(&u.folded) {
                Class::Vowel
            } else if self.consonants.contains(&u.folded) {
                Class::Consonant
            } else {
                let original = &word[u.start..u.end];
                return Err(NotSyllabifiable::new(
                    &word,
                    Reason::OutsideAlphabet(original.to_owned()),
                ));
            };
            classes.push(class);
        }

        // Nuclei as half-open unit ranges.
        let mut nuclei: Vec<(usize, usize)> = Vec::new();
        let mut i = 0;
        while i < units.len() {
            if classes[i] == Class::Vowel {
                let pair = i + 1 < units.len()
                    && classes[i + 1] == Class::Vowel
                    && self.is_diphthong(&units[i].folded, &units[i + 1].folded);
                let end = if pair { i + 2 } else { i + 1 };
                nuclei.push((i, end));
                i = end;
            } else {
                i += 1;
            }
        }
        if nuclei.is_empty() {
            return Err(NotSyllabifiable::new(&word, Reason::NoVowel));
        }

        let folded = |range: core::ops::Range<usize>| -> Vec<String> {
            units[range].iter().map(|u| u.folded.clone()).collect()
        };
        let cluster_text = |range: core::ops::Range<usize>| -> String {
            match (units[range.clone()].first(), units[range].last()) {
                (Some(a), Some(b)) => word[a.start..b.end].to_owned(),
                _ => String::new(),
            }
        };

        let first = nuclei[0].0;
        if !self.is_valid_onset(&folded(0..first)) {
            return Err(NotSyllabifiable::new(
                &word,
                Reason::IllegalCluster(cluster_text(0..first)),
            ));
        }
        let last = nuclei[nuclei.len() - 1].1;
        if !self.is_valid_coda(&folded(last..units.len())) {
            return Err(NotSyllabifiable::new(
                &word,
                Reason::IllegalCluster(cluster_text(last..units.len())),
            ));
        }

        let mut cuts = Vec::with_capacity(nuclei.len() - 1);
        for pair in nuclei.windows(2) {
            let (lo, hi) = (pair[0].1, pair[1].0);
            let cluster = folded(lo..hi);
            let split = (0..=cluster.len()).find(|&coda_len| {
                self.is_valid_coda(&cluster[..coda_len])
                    && self.is_valid_onset(&cluster[coda_len..])
            });
            let Some(coda_len) = split else {
                return Err(NotSyllabifiable::new(
                    &word,
                    Reason::IllegalCluster(cluster_text(lo..hi)),
                ));
            };
            let boundary_unit = lo + coda_len;
            cuts.push(units[boundary_unit].start);
        }
        Ok(SyllabifiedWord::from_boundaries(
            word,
            &cuts,
            Method::Profile,
        ))
    }

    /// Summary of table sizes, handy for diagnostics.
    pub fn table_sizes(&self) -> BTreeMap<&'static str, usize> {
        let mut m = BTreeMap::new();
        m.insert("vowels", self.vowels.len());
        m.insert("diphthongs", self.diphthongs.len());
        m.insert("digraphs", self.digraphs.len());
        m.insert("consonants", self.consonants.len());
        m.insert("onsets", self.valid_onsets.len());
        m.insert("codas", self.valid_codas.len());
        m
    }
}
