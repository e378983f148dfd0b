//! Deterministic byte-pair encoding over grapheme clusters.
//!
//! Training counts adjacent symbol pairs inside words (never across them),
//! repeatedly merges the most frequent pair and records the merge. Ties go to
//! the lexicographically smallest `(left, right)` pair, with the end-of-word
//! marker ordering after every other symbol, so a corpus always yields the
//! same merge list whatever order its words arrive in.
//!
//! Encoding replays the merges in training order, each merge rewriting its
//! occurrences left to right.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::text;

pub const DEFAULT_MARKER: &str = "</w>";
const MODEL_MAGIC: &str = "#syltok-bpe";
const MODEL_VERSION: &str = "v1";
/// Sorts after every other scalar value; stands in for the marker in
/// tie-breaking keys.
const END_KEY: char = '\u{10FFFF}';

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BpeError {
    #[error("target vocabulary {target} is below the alphabet size {alphabet}")]
    TargetBelowAlphabet { target: usize, alphabet: usize },
    #[error("training corpus is empty")]
    EmptyCorpus,
    #[error("word {0:?} contains the reserved end-of-word marker")]
    ReservedSymbol(String),
    #[error("model line {line}: {message}")]
    Model { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrainConfig {
    /// Pairs seen fewer times than this are never merged.
    pub min_frequency: u64,
    pub marker: String,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            min_frequency: 2,
            marker: DEFAULT_MARKER.to_owned(),
        }
    }
}

/// An ordered merge list plus the vocabulary it induces.
///
/// Pieces that end a word carry the marker suffix internally (`"w</w>"`);
/// [`BpeModel::encode`] strips it, so encoded pieces always concatenate to the
/// input word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpeModel {
    merges: Vec<(String, String)>,
    alphabet: BTreeSet<String>,
    alphabet_size: usize,
    marker: String,
    piece_ids: BTreeMap<String, u32>,
    /// `(left, right)` ids to `(rank, result id)`.
    ranks: BTreeMap<(u32, u32), (usize, u32)>,
}

impl BpeModel {
    /// Trains with the default [`TrainConfig`].
    pub fn train<I, S>(corpus: I, target_vocab: usize) -> Result<Self, BpeError>
    where
        I: IntoIterator<Item = (S, u64)>,
        S: AsRef<str>,
    {
        Self::train_with(corpus, target_vocab, &TrainConfig::default())
    }

    /// Trains until `alphabet + merges == target_vocab` or no pair reaches
    /// `cfg.min_frequency`.
    pub fn train_with<I, S>(
        corpus: I,
        target_vocab: usize,
        cfg: &TrainConfig,
    ) -> Result<Self, BpeError>
    where
        I: IntoIterator<Item = (S, u64)>,
        S: AsRef<str>,
    {
        let mut counts: BTreeMap<String, u64> = BTreeMap::new();
        for (entry, freq) in corpus {
            for w in text::words(entry.as_ref()) {
                if freq == 0 {
                    continue;
                }
                let w = text::nfc(w);
                if w.contains(cfg.marker.as_str()) || w.contains(END_KEY) {
                    return Err(BpeError::ReservedSymbol(w));
                }
                *counts.entry(w).or_insert(0) += freq;
            }
        }
        if counts.is_empty() {
            return Err(BpeError::EmptyCorpus);
        }
        let mut trainer = Trainer::new(&counts, &cfg.marker);
        let alphabet_size = trainer.alphabet.len();
        if target_vocab < alphabet_size {
            return Err(BpeError::TargetBelowAlphabet {
                target: target_vocab,
                alphabet: alphabet_size,
            });
        }
        trainer.run(target_vocab - alphabet_size, cfg.min_frequency.max(1));
        let merges = trainer.merges;
        let alphabet = trainer.alphabet;
        Ok(Self::assemble(
            merges,
            alphabet,
            alphabet_size,
            cfg.marker.clone(),
        ))
    }

    /// Trains with the vocabulary budget set to the syllabary size.
    pub fn train_to_syllabary_size<I, S>(
        corpus: I,
        syllabary: &BTreeSet<String>,
    ) -> Result<Self, BpeError>
    where
        I: IntoIterator<Item = (S, u64)>,
        S: AsRef<str>,
    {
        Self::train(corpus, syllabary.len())
    }

    fn assemble(
        merges: Vec<(String, String)>,
        alphabet: BTreeSet<String>,
        alphabet_size: usize,
        marker: String,
    ) -> Self {
        let mut piece_ids = BTreeMap::new();
        let intern = |s: &str, ids: &mut BTreeMap<String, u32>| -> u32 {
            let next = ids.len() as u32;
            *ids.entry(s.to_owned()).or_insert(next)
        };
        intern(&marker, &mut piece_ids);
        for a in &alphabet {
            intern(a, &mut piece_ids);
        }
        let mut ranks = BTreeMap::new();
        for (rank, (l, r)) in merges.iter().enumerate() {
            let li = intern(l, &mut piece_ids);
            let ri = intern(r, &mut piece_ids);
            let joined = format!("{l}{r}");
            let out = intern(&joined, &mut piece_ids);
            ranks.entry((li, ri)).or_insert((rank, out));
        }
        BpeModel {
            merges,
            alphabet,
            alphabet_size,
            marker,
            piece_ids,
            ranks,
        }
    }

    /// Merges in training order. Word-final operands carry the marker suffix.
    pub fn merges(&self) -> &[(String, String)] {
        &self.merges
    }

    pub fn marker(&self) -> &str {
        &self.marker
    }

    pub fn alphabet(&self) -> &BTreeSet<String> {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Alphabet plus merge results; the marker itself is reserved and not
    /// counted.
    pub fn vocabulary(&self) -> BTreeSet<String> {
        let mut v = self.alphabet.clone();
        v.extend(self.merges.iter().map(|(l, r)| format!("{l}{r}")));
        v
    }

    pub fn vocab_size(&self) -> usize {
        self.alphabet_size + self.merges.len()
    }

    /// The model made of the first `k` merges.
    pub fn prefix(&self, k: usize) -> BpeModel {
        let merges = self.merges[..k.min(self.merges.len())].to_vec();
        Self::assemble(
            merges,
            self.alphabet.clone(),
            self.alphabet_size,
            self.marker.clone(),
        )
    }

    /// Encodes one word. Graphemes the model has never seen pass through as
    /// singleton pieces. An empty word encodes to no pieces.
    pub fn encode(&self, word: &str) -> Vec<String> {
        let word = text::nfc(word);
        if word.is_empty() {
            return Vec::new();
        }
        let unknown_base = self.piece_ids.len() as u32;
        let mut unknown: Vec<String> = Vec::new();
        let mut syms: Vec<u32> = text::graphemes(&word)
            .into_iter()
            .map(|g| match self.piece_ids.get(g) {
                Some(&id) => id,
                None => {
                    unknown.push(g.to_owned());
                    unknown_base + unknown.len() as u32 - 1
                }
            })
            .collect();
        let end_id = self.piece_ids[&self.marker];
        syms.push(end_id);

        // Replaying the merge list in order is the same as repeatedly taking
        // the lowest-ranked pair present whose rank has not been passed yet.
        let mut floor = 0usize;
        loop {
            let best = syms
                .windows(2)
                .filter_map(|w| self.ranks.get(&(w[0], w[1])))
                .filter(|(rank, _)| *rank >= floor)
                .min_by_key(|(rank, _)| *rank);
            let Some(&(rank, out)) = best else { break };
            let (l, r) = {
                let (l, r) = &self.merges[rank];
                (self.piece_ids[l], self.piece_ids[r])
            };
            let mut merged = Vec::with_capacity(syms.len());
            let mut i = 0;
            while i < syms.len() {
                if i + 1 < syms.len() && syms[i] == l && syms[i + 1] == r {
                    merged.push(out);
                    i += 2;
                } else {
                    merged.push(syms[i]);
                    i += 1;
                }
            }
            syms = merged;
            floor = rank + 1;
        }

        let names = self.id_names();
        let mut pieces: Vec<String> = syms
            .iter()
            .map(|&id| {
                if id >= unknown_base {
                    unknown[(id - unknown_base) as usize].clone()
                } else {
                    names[id as usize].to_owned()
                }
            })
            .collect();
        if let Some(last) = pieces.last_mut() {
            let keep = last.len() - self.marker.len();
            last.truncate(keep);
            if last.is_empty() {
                pieces.pop();
            }
        }
        pieces
    }

    fn id_names(&self) -> Vec<&str> {
        let mut names = alloc::vec![""; self.piece_ids.len()];
        for (s, &id) in &self.piece_ids {
            names[id as usize] = s.as_str();
        }
        names
    }

    /// Serialises to the model file format: a header line, then one merge per
    /// line in training order.
    pub fn to_model_file(&self) -> String {
        let mut out = format!(
            "{MODEL_MAGIC} {MODEL_VERSION} marker={} alphabet={} normalization=nfc case=preserve\n",
            self.marker, self.alphabet_size
        );
        for (l, r) in &self.merges {
            out.push_str(l);
            out.push(' ');
            out.push_str(r);
            out.push('\n');
        }
        out
    }

    /// Parses a model file written by [`BpeModel::to_model_file`].
    pub fn from_model_file(doc: &str) -> Result<Self, BpeError> {
        let err = |line: usize, message: String| BpeError::Model { line, message };
        let mut lines = doc.lines().enumerate();
        let header = match lines.next() {
            Some((_, h)) => h,
            None => return Err(err(1, "missing header".into())),
        };
        let mut fields = header.split_whitespace();
        if fields.next() != Some(MODEL_MAGIC) {
            return Err(err(1, format!("header must start with {MODEL_MAGIC}")));
        }
        if fields.next() != Some(MODEL_VERSION) {
            return Err(err(
                1,
                format!("unsupported version, expected {MODEL_VERSION}"),
            ));
        }
        let mut marker = None;
        let mut alphabet_size = None;
        for f in fields {
            if let Some(m) = f.strip_prefix("marker=") {
                marker = Some(m.to_owned());
            } else if let Some(n) = f.strip_prefix("alphabet=") {
                alphabet_size = Some(
                    n.parse::<usize>()
                        .map_err(|_| err(1, format!("bad alphabet size {n:?}")))?,
                );
            }
        }
        let marker = marker.ok_or_else(|| err(1, "header lacks marker=".into()))?;
        if marker.is_empty() || text::grapheme_count(&marker) < 2 {
            return Err(err(1, "marker must span at least two graphemes".into()));
        }

        let mut merges = Vec::new();
        let mut produced: BTreeSet<String> = BTreeSet::new();
        let mut leaves: BTreeSet<String> = BTreeSet::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split(' ').collect();
            if parts.len() != 2 || parts.iter().any(|p| p.is_empty()) {
                return Err(err(line_no, format!("expected two pieces, found {line:?}")));
            }
            if parts[0].ends_with(marker.as_str()) {
                return Err(err(line_no, "left piece cannot end a word".into()));
            }
            for p in &parts {
                let leaf = text::grapheme_count(p) == 1 || *p == marker;
                if !leaf && !produced.contains(*p) {
                    return Err(err(
                        line_no,
                        format!("piece {p:?} is neither a grapheme nor an earlier merge result"),
                    ));
                }
                if leaf && *p != marker && !produced.contains(*p) {
                    leaves.insert((*p).to_owned());
                }
            }
            produced.insert(format!("{}{}", parts[0], parts[1]));
            merges.push((parts[0].to_owned(), parts[1].to_owned()));
        }
        let alphabet_size = alphabet_size.unwrap_or(leaves.len()).max(leaves.len());
        Ok(Self::assemble(merges, leaves, alphabet_size, marker))
    }
}

/// Inverse of [`BpeModel::encode`]: concatenation, with a trailing marker
/// removed if present.
pub fn decode<S: AsRef<str>>(pieces: &[S]) -> String {
    decode_with_marker(pieces, DEFAULT_MARKER)
}

pub fn decode_with_marker<S: AsRef<str>>(pieces: &[S], marker: &str) -> String {
    let mut out: String = pieces.iter().map(AsRef::as_ref).collect();
    if !marker.is_empty() && out.ends_with(marker) {
        out.truncate(out.len() - marker.len());
    }
    out
}

struct Trainer {
    alphabet: BTreeSet<String>,
    names: Vec<String>,
    keys: Vec<String>,
    by_name: BTreeMap<String, u32>,
    words: Vec<(Vec<u32>, u64)>,
    pair_counts: BTreeMap<(u32, u32), u64>,
    occurs_in: BTreeMap<(u32, u32), BTreeSet<usize>>,
    queue: BTreeSet<(Reverse<u64>, String, String, u32, u32)>,
    blocked: BTreeSet<(u32, u32)>,
    merges: Vec<(String, String)>,
}

impl Trainer {
    fn new(counts: &BTreeMap<String, u64>, marker: &str) -> Self {
        let mut t = Trainer {
            alphabet: BTreeSet::new(),
            names: Vec::new(),
            keys: Vec::new(),
            by_name: BTreeMap::new(),
            words: Vec::with_capacity(counts.len()),
            pair_counts: BTreeMap::new(),
            occurs_in: BTreeMap::new(),
            queue: BTreeSet::new(),
            blocked: BTreeSet::new(),
            merges: Vec::new(),
        };
        let end = t.symbol(marker.to_owned(), END_KEY.to_string());
        for (w, &freq) in counts {
            let mut syms: Vec<u32> = text::graphemes(w)
                .into_iter()
                .map(|g| {
                    t.alphabet.insert(g.to_owned());
                    t.symbol(g.to_owned(), g.to_owned())
                })
                .collect();
            syms.push(end);
            t.words.push((syms, freq));
        }
        for idx in 0..t.words.len() {
            t.add_word_pairs(idx);
        }
        let pairs: Vec<(u32, u32)> = t.pair_counts.keys().copied().collect();
        for p in pairs {
            t.enqueue(p);
        }
        t
    }

    fn symbol(&mut self, name: String, key: String) -> u32 {
        if let Some(&id) = self.by_name.get(&name) {
            return id;
        }
        let id = self.names.len() as u32;
        self.by_name.insert(name.clone(), id);
        self.names.push(name);
        self.keys.push(key);
        id
    }

    fn add_word_pairs(&mut self, idx: usize) {
        let (syms, freq) = &self.words[idx];
        for w in syms.windows(2) {
            let p = (w[0], w[1]);
            *self.pair_counts.entry(p).or_insert(0) += *freq;
            self.occurs_in.entry(p).or_default().insert(idx);
        }
    }

    fn queue_entry(&self, p: (u32, u32), count: u64) -> (Reverse<u64>, String, String, u32, u32) {
        (
            Reverse(count),
            self.keys[p.0 as usize].clone(),
            self.keys[p.1 as usize].clone(),
            p.0,
            p.1,
        )
    }

    fn enqueue(&mut self, p: (u32, u32)) {
        if self.blocked.contains(&p) {
            return;
        }
        if let Some(&c) = self.pair_counts.get(&p) {
            if c > 0 {
                let e = self.queue_entry(p, c);
                self.queue.insert(e);
            }
        }
    }

    fn dequeue(&mut self, p: (u32, u32)) {
        if let Some(&c) = self.pair_counts.get(&p) {
            let e = self.queue_entry(p, c);
            self.queue.remove(&e);
        }
    }

    fn run(&mut self, budget: usize, min_frequency: u64) {
        while self.merges.len() < budget {
            let Some(top) = self.queue.first().cloned() else {
                break;
            };
            let (Reverse(count), _, _, l, r) = top;
            if count < min_frequency {
                break;
            }
            let name = format!("{}{}", self.names[l as usize], self.names[r as usize]);
            // A result already in the vocabulary would break the
            // alphabet + merges size accounting; such pairs are never merged.
            if self.alphabet.contains(&name) || self.by_name.contains_key(&name) {
                self.dequeue((l, r));
                self.blocked.insert((l, r));
                continue;
            }
            let key = format!("{}{}", self.keys[l as usize], self.keys[r as usize]);
            let out = self.symbol(name, key);
            self.merges.push((
                self.names[l as usize].clone(),
                self.names[r as usize].clone(),
            ));
            self.apply(l, r, out);
        }
    }

    fn apply(&mut self, l: u32, r: u32, out: u32) {
        let affected: Vec<usize> = self
            .occurs_in
            .get(&(l, r))
            .map(|s| s.iter().copied().collect())
            .unwrap_or_default();
        let mut touched: BTreeSet<(u32, u32)> = BTreeSet::new();
        for idx in affected {
            let (syms, freq) = self.words[idx].clone();
            let old_pairs: Vec<(u32, u32)> = syms.windows(2).map(|w| (w[0], w[1])).collect();
            let mut merged = Vec::with_capacity(syms.len());
            let mut i = 0;
            while i < syms.len() {
                if i + 1 < syms.len() && syms[i] == l && syms[i + 1] == r {
                    merged.push(out);
                    i += 2;
                } else {
                    merged.push(syms[i]);
                    i += 1;
                }
            }
            let new_pairs: Vec<(u32, u32)> = merged.windows(2).map(|w| (w[0], w[1])).collect();
            for p in old_pairs.iter().chain(new_pairs.iter()) {
                if touched.insert(*p) {
                    self.dequeue(*p);
                }
            }
            for p in &old_pairs {
                if let Some(c) = self.pair_counts.get_mut(p) {
                    *c -= freq;
                }
                if let Some(set) = self.occurs_in.get_mut(p) {
                    set.remove(&idx);
                }
            }
            self.words[idx].0 = merged;
            for p in &new_pairs {
                *self.pair_counts.entry(*p).or_insert(0) += freq;
                self.occurs_in.entry(*p).or_default().insert(idx);
            }
        }
        for p in touched {
            if self.pair_counts.get(&p) == Some(&0) {
                self.pair_counts.remove(&p);
                self.occurs_in.remove(&p);
            } else {
                self.enqueue(p);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus(entries: &[(&str, u64)]) -> Vec<(String, u64)> {
        entries.iter().map(|(w, c)| ((*w).to_owned(), *c)).collect()
    }

    fn pair(l: &str, r: &str) -> (String, String) {
        (l.to_owned(), r.to_owned())
    }

    #[test]
    fn first_merge_is_most_frequent_pair() {
        // (l,o) and (o,w) both occur 3 times; l < o.
        let m = BpeModel::train(corpus(&[("low", 2), ("lower", 1)]), 6).unwrap();
        assert_eq!(m.alphabet_size(), 5);
        assert_eq!(m.merges(), &[pair("l", "o")]);
    }

    #[test]
    fn single_word_merge_needs_min_frequency_one() {
        let cfg = TrainConfig {
            min_frequency: 1,
            ..TrainConfig::default()
        };
        let m = BpeModel::train_with(corpus(&[("aa", 1)]), 2, &cfg).unwrap();
        assert_eq!(m.merges(), &[pair("a", "a")]);
        assert_eq!(m.encode("aaa"), ["aa", "a"]);

        let default = BpeModel::train(corpus(&[("aa", 1)]), 2).unwrap();
        assert!(default.merges().is_empty());
    }

    #[test]
    fn zero_budget_is_character_split() {
        let m = BpeModel::train(corpus(&[("hello", 5), ("world", 3)]), 7).unwrap();
        assert!(m.merges().is_empty());
        assert_eq!(m.encode("hello"), ["h", "e", "l", "l", "o"]);
    }

    #[test]
    fn target_below_alphabet() {
        assert_eq!(
            BpeModel::train(corpus(&[("abc", 1)]), 2),
            Err(BpeError::TargetBelowAlphabet {
                target: 2,
                alphabet: 3
            })
        );
        let empty: BTreeSet<String> = BTreeSet::new();
        assert!(matches!(
            BpeModel::train_to_syllabary_size(corpus(&[("abc", 1)]), &empty),
            Err(BpeError::TargetBelowAlphabet { target: 0, .. })
        ));
        let exact: BTreeSet<String> = ["ab", "c", "x"].iter().map(|s| (*s).to_owned()).collect();
        let m = BpeModel::train_to_syllabary_size(corpus(&[("abc", 4)]), &exact).unwrap();
        assert!(m.merges().is_empty());
        assert!(matches!(
            BpeModel::train(Vec::<(String, u64)>::new(), 10),
            Err(BpeError::EmptyCorpus)
        ));
    }

    #[test]
    fn encode_replays_merges() {
        let doc = "#syltok-bpe v1 marker=</w> alphabet=3\nl o\nlo w\n";
        let m = BpeModel::from_model_file(doc).unwrap();
        assert_eq!(m.encode("low"), ["low"]);
        assert_eq!(m.encode("z"), ["z"]);
        assert_eq!(m.encode("lowz"), ["low", "z"]);
        assert!(m.encode("").is_empty());
    }

    #[test]
    fn word_final_merges_are_stripped() {
        let m = BpeModel::train(corpus(&[("newer", 6), ("wider", 3), ("low", 5)]), 14).unwrap();
        for w in ["newer", "wider", "low", "lowest", "er"] {
            let pieces = m.encode(w);
            assert_eq!(pieces.concat(), w);
            assert!(pieces.iter().all(|p| !p.is_empty() && !p.contains("</w>")));
        }
        assert!(m.merges().iter().any(|(_, r)| r.ends_with("</w>")));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&["low"]), "low");
        assert_eq!(decode(&["lo", "w"]), "low");
        assert_eq!(decode::<&str>(&[]), "");
        assert_eq!(decode(&["lo", "w</w>"]), "low");
    }

    #[test]
    fn model_file_round_trip() {
        let m = BpeModel::train(corpus(&[("newer", 6), ("wider", 3), ("low", 5)]), 14).unwrap();
        let file = m.to_model_file();
        assert!(file.starts_with("#syltok-bpe v1 marker=</w> alphabet="));
        let back = BpeModel::from_model_file(&file).unwrap();
        assert_eq!(back.merges(), m.merges());
        assert_eq!(back.vocab_size(), m.vocab_size());
        assert_eq!(back.to_model_file(), file);
        for w in ["newer", "lowest", "wide"] {
            assert_eq!(back.encode(w), m.encode(w));
        }
    }

    #[test]
    fn model_file_errors() {
        assert!(matches!(
            BpeModel::from_model_file(""),
            Err(BpeError::Model { line: 1, .. })
        ));
        assert!(matches!(
            BpeModel::from_model_file("#syltok-bpe v1 marker=</w>\nab c\n"),
            Err(BpeError::Model { line: 2, .. })
        ));
        assert!(matches!(
            BpeModel::from_model_file("#syltok-bpe v1 marker=</w>\na b c\n"),
            Err(BpeError::Model { line: 2, .. })
        ));
        assert!(matches!(
            BpeModel::from_model_file("#other v1\n"),
            Err(BpeError::Model { line: 1, .. })
        ));
    }

    #[test]
    fn vocabulary_accounting() {
        let m = BpeModel::train(corpus(&[("abab", 4), ("ab", 3), ("ba", 2)]), 8).unwrap();
        for k in 0..=m.merges().len() {
            let p = m.prefix(k);
            assert_eq!(p.vocabulary().len(), p.alphabet_size() + k);
        }
    }

    #[test]
    fn marker_in_corpus_is_rejected() {
        assert!(matches!(
            BpeModel::train(corpus(&[("a</w>", 1)]), 10),
            Err(BpeError::ReservedSymbol(_))
        ));
    }

    #[test]
    fn duplicate_results_are_skipped() {
        // "abc" can be built as (ab,c) or (a,bc); only one may enter the vocabulary.
        let cfg = TrainConfig {
            min_frequency: 1,
            ..TrainConfig::default()
        };
        let m =
            BpeModel::train_with(corpus(&[("abc", 5), ("bcx", 5), ("xab", 5)]), 40, &cfg).unwrap();
        let v = m.vocabulary();
        assert_eq!(v.len(), m.alphabet_size() + m.merges().len());
    }
}
