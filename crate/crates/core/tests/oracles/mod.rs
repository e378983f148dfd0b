//! Slow, obviously-correct reference implementations used by the property and
//! acceptance tests. Nothing here calls into the code under test.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

// ---------------------------------------------------------------- syllables

/// Toy profile: vowels `a i í` (`í` breaks diphthongs), consonants `p r s`
/// plus the digraph `rr`.
pub const TOY_PROFILE: &str = "
language = toy
vowels = a i
hiatus = í
diphthongs = ai aí
digraphs = rr
onsets = p r s rr pr sp spr
codas = s r rs
";

pub const TOY_ALPHABET: [&str; 6] = ["a", "i", "í", "p", "r", "s"];

const TOY_VOWELS: [&str; 3] = ["a", "i", "í"];
const TOY_HIATUS: [&str; 1] = ["í"];
const TOY_DIPHTHONGS: [(&str, &str); 2] = [("a", "i"), ("a", "í")];
const TOY_ONSETS: [&str; 8] = ["", "p", "r", "s", "rr", "pr", "sp", "spr"];
const TOY_CODAS: [&str; 4] = ["", "s", "r", "rs"];

fn toy_units(word: &str) -> Vec<String> {
    let chars: Vec<char> = word.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == 'r' && chars.get(i + 1) == Some(&'r') {
            out.push("rr".to_string());
            i += 2;
        } else {
            out.push(chars[i].to_string());
            i += 1;
        }
    }
    out
}

fn toy_is_vowel(u: &str) -> bool {
    TOY_VOWELS.contains(&u)
}

fn toy_diphthong(a: &str, b: &str) -> bool {
    TOY_DIPHTHONGS.contains(&(a, b)) && !TOY_HIATUS.contains(&a) && !TOY_HIATUS.contains(&b)
}

/// Whether `units` is onset + nucleus + coda under the toy tables.
fn toy_legal_syllable(units: &[String]) -> bool {
    let vowel_at: Vec<usize> = (0..units.len())
        .filter(|&i| toy_is_vowel(&units[i]))
        .collect();
    let nucleus_ok = match vowel_at.as_slice() {
        [_] => true,
        [a, b] => *b == a + 1 && toy_diphthong(&units[*a], &units[*b]),
        _ => false,
    };
    if !nucleus_ok {
        return false;
    }
    let onset: String = units[..vowel_at[0]].concat();
    let coda: String = units[vowel_at[vowel_at.len() - 1] + 1..].concat();
    TOY_ONSETS.contains(&onset.as_str()) && TOY_CODAS.contains(&coda.as_str())
}

/// Enumerates every way to cut `word` between units, keeps the legal ones
/// and returns the one whose cuts come earliest (longest onsets).
/// `None` when no split is legal.
pub fn toy_syllabify(word: &str) -> Option<Vec<String>> {
    let units = toy_units(word);
    if units.is_empty() {
        return None;
    }
    let n = units.len();
    // legal[i][j]: units[i..j] is one well-formed syllable.
    let legal: Vec<Vec<bool>> = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| i < j && toy_legal_syllable(&units[i..j]))
                .collect()
        })
        .collect();
    let gaps = n - 1;
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..(1u32 << gaps) {
        let mut start = 0;
        let mut legal_split = true;
        for end in 1..=n {
            if end < n && mask & (1 << (end - 1)) == 0 {
                continue;
            }
            if !legal[start][end] {
                legal_split = false;
                break;
            }
            if end < n
                && toy_is_vowel(&units[end - 1])
                && toy_is_vowel(&units[end])
                && toy_diphthong(&units[end - 1], &units[end])
            {
                legal_split = false;
                break;
            }
            start = end;
        }
        if !legal_split {
            continue;
        }
        let cuts: Vec<usize> = (0..gaps)
            .filter(|g| mask & (1 << g) != 0)
            .map(|g| g + 1)
            .collect();
        if best.as_ref().map_or(true, |b| cuts < *b) {
            best = Some(cuts);
        }
    }
    let cuts = best?;
    let mut bounds = vec![0];
    bounds.extend(&cuts);
    bounds.push(n);
    Some(
        bounds
            .windows(2)
            .map(|w| units[w[0]..w[1]].concat())
            .collect(),
    )
}

/// All words over `alphabet` with 1..=max_len symbols.
pub fn all_words(alphabet: &[&str], max_len: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for g in alphabet {
                next.push(format!("{w}{g}"));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

// ------------------------------------------------------------- hyphenation

/// Textbook Liang scoring. `patterns` holds (key, weights) pairs with
/// `weights.len() == key.len() + 1`; duplicates are fine.
pub fn liang_breaks(
    patterns: &[(String, Vec<u8>)],
    word: &str,
    min_left: usize,
    min_right: usize,
) -> Vec<usize> {
    let dotted: Vec<char> = format!(".{word}.").chars().collect();
    let n = dotted.len() - 2;
    let mut level = vec![0u8; dotted.len() + 1];
    for (key, weights) in patterns {
        let key: Vec<char> = key.chars().collect();
        if key.len() > dotted.len() {
            continue;
        }
        for start in 0..=dotted.len() - key.len() {
            if dotted[start..start + key.len()] == key[..] {
                for (j, &w) in weights.iter().enumerate() {
                    if w > level[start + j] {
                        level[start + j] = w;
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for k in 1..n {
        if k >= min_left && n - k >= min_right && level[k + 1] % 2 == 1 {
            out.push(k);
        }
    }
    out
}

/// Renders (key, weights) as a TeX pattern token such as `.a1b`.
pub fn pattern_token(key: &str, weights: &[u8]) -> String {
    let mut s = String::new();
    for (i, c) in key.chars().enumerate() {
        if weights[i] > 0 {
            s.push(char::from(b'0' + weights[i]));
        }
        s.push(c);
    }
    let last = weights[weights.len() - 1];
    if last > 0 {
        s.push(char::from(b'0' + last));
    }
    s
}

// -------------------------------------------------------------------- chrF

fn ngrams(chars: &[char], n: usize) -> Vec<String> {
    if chars.len() < n {
        return Vec::new();
    }
    (0..=chars.len() - n)
        .map(|i| chars[i..i + n].iter().collect())
        .collect()
}

/// Per-order (hyp total, ref total, clipped matches), counted by linear scans.
pub fn chrf_counts(hyp: &str, reference: &str, max_order: usize) -> Vec<(usize, usize, usize)> {
    let h: Vec<char> = hyp.chars().filter(|c| !c.is_whitespace()).collect();
    let r: Vec<char> = reference.chars().filter(|c| !c.is_whitespace()).collect();
    (1..=max_order)
        .map(|n| {
            let hg = ngrams(&h, n);
            let mut rg = ngrams(&r, n);
            let (ht, rt) = (hg.len(), rg.len());
            let mut m = 0;
            for g in &hg {
                if let Some(pos) = rg.iter().position(|x| x == g) {
                    rg.swap_remove(pos);
                    m += 1;
                }
            }
            (ht, rt, m)
        })
        .collect()
}

pub fn chrf_from_counts(counts: &[(usize, usize, usize)], beta: f64) -> f64 {
    let mut ps = Vec::new();
    let mut rs = Vec::new();
    for &(h, r, m) in counts {
        if h == 0 && r == 0 {
            continue;
        }
        ps.push(if h == 0 { 0.0 } else { m as f64 / h as f64 });
        rs.push(if r == 0 { 0.0 } else { m as f64 / r as f64 });
    }
    if ps.is_empty() {
        return 0.0;
    }
    let p = ps.iter().sum::<f64>() / ps.len() as f64;
    let r = rs.iter().sum::<f64>() / rs.len() as f64;
    let b2 = beta * beta;
    if b2 * p + r == 0.0 {
        0.0
    } else {
        100.0 * (1.0 + b2) * p * r / (b2 * p + r)
    }
}

pub fn chrf_bruteforce(hyp: &str, reference: &str, max_order: usize, beta: f64) -> f64 {
    chrf_from_counts(&chrf_counts(hyp, reference, max_order), beta)
}

pub fn corpus_chrf_bruteforce(pairs: &[(&str, &str)], max_order: usize, beta: f64) -> f64 {
    let mut total = vec![(0, 0, 0); max_order];
    for (h, r) in pairs {
        for (t, c) in total.iter_mut().zip(chrf_counts(h, r, max_order)) {
            t.0 += c.0;
            t.1 += c.1;
            t.2 += c.2;
        }
    }
    chrf_from_counts(&total, beta)
}

// ---------------------------------------------------------------------- BPE

fn sort_key(s: &str, marker: &str) -> String {
    s.replace(marker, "\u{10FFFF}")
}

/// Recount-everything BPE trainer over chars. Ties go to the smallest
/// (left, right) with the marker sorting last; merges whose result is
/// already a known symbol are skipped.
pub fn naive_bpe_train(
    corpus: &[(&str, u64)],
    target: usize,
    min_frequency: u64,
    marker: &str,
) -> Vec<(String, String)> {
    let mut words: Vec<(Vec<String>, u64)> = Vec::new();
    let mut known: HashSet<String> = HashSet::new();
    known.insert(marker.to_string());
    let mut agg: HashMap<&str, u64> = HashMap::new();
    for (w, f) in corpus {
        *agg.entry(w).or_insert(0) += f;
    }
    let mut alphabet: HashSet<String> = HashSet::new();
    for (w, f) in agg {
        let mut syms: Vec<String> = w.chars().map(String::from).collect();
        alphabet.extend(syms.iter().cloned());
        syms.push(marker.to_string());
        words.push((syms, f));
    }
    known.extend(alphabet.iter().cloned());
    let mut merges = Vec::new();
    while alphabet.len() + merges.len() < target {
        let mut counts: HashMap<(String, String), u64> = HashMap::new();
        for (syms, f) in &words {
            for w in syms.windows(2) {
                *counts.entry((w[0].clone(), w[1].clone())).or_insert(0) += f;
            }
        }
        let best = counts
            .into_iter()
            .filter(|((l, r), _)| !known.contains(&format!("{l}{r}")))
            .max_by(|a, b| {
                a.1.cmp(&b.1).then_with(|| {
                    let ka = (sort_key(&a.0 .0, marker), sort_key(&a.0 .1, marker));
                    let kb = (sort_key(&b.0 .0, marker), sort_key(&b.0 .1, marker));
                    kb.cmp(&ka)
                })
            });
        let Some(((l, r), c)) = best else { break };
        if c < min_frequency {
            break;
        }
        for (syms, _) in words.iter_mut() {
            *syms = apply_merge(syms, &l, &r);
        }
        known.insert(format!("{l}{r}"));
        merges.push((l, r));
    }
    merges
}

fn apply_merge(syms: &[String], l: &str, r: &str) -> Vec<String> {
    let mut out = Vec::with_capacity(syms.len());
    let mut i = 0;
    while i < syms.len() {
        if i + 1 < syms.len() && syms[i] == l && syms[i + 1] == r {
            out.push(format!("{l}{r}"));
            i += 2;
        } else {
            out.push(syms[i].clone());
            i += 1;
        }
    }
    out
}

/// Replays `merges` in order, then strips the marker.
pub fn naive_bpe_encode(word: &str, merges: &[(String, String)], marker: &str) -> Vec<String> {
    let mut syms: Vec<String> = word.chars().map(String::from).collect();
    syms.push(marker.to_string());
    for (l, r) in merges {
        syms = apply_merge(&syms, l, r);
    }
    let last = syms.pop().unwrap();
    let stripped = last.strip_suffix(marker).unwrap().to_string();
    if !stripped.is_empty() {
        syms.push(stripped);
    }
    syms
}

// ------------------------------------------------------------ significance

/// SplitMix64, independent of the generator under test.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Monte Carlo estimate of P(|sum s_i d_i| >= |sum d_i|) over random signs.
pub fn randomization_mc(a: &[f64], b: &[f64], samples: usize, seed: u64) -> f64 {
    let d: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let observed = d.iter().sum::<f64>().abs();
    let mut rng = SplitMix(seed);
    let mut hits = 0usize;
    for _ in 0..samples {
        let mut s = 0.0;
        for x in &d {
            let bit = (rng.next() >> 11) & 1;
            s += if bit == 1 { -x } else { *x };
        }
        if s.abs() >= observed - 1e-9 {
            hits += 1;
        }
    }
    hits as f64 / samples as f64
}

/// Exact P(|sum s_i d_i| >= |sum d_i|) for integer differences, by dynamic
/// programming over the distribution of the signed sum.
pub fn randomization_exact(d: &[i64]) -> f64 {
    let span: i64 = d.iter().map(|x| x.abs()).sum();
    let width = (2 * span + 1) as usize;
    let mut dist = vec![0f64; width];
    dist[span as usize] = 1.0;
    for &x in d {
        let mut next = vec![0f64; width];
        for (i, &p) in dist.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            let v = i as i64;
            next[(v + x) as usize] += p * 0.5;
            next[(v - x) as usize] += p * 0.5;
        }
        dist = next;
    }
    let observed = d.iter().sum::<i64>().abs();
    dist.iter()
        .enumerate()
        .filter(|(i, _)| (*i as i64 - span).abs() >= observed)
        .map(|(_, p)| p)
        .sum()
}
