//! Streaming corpus pipelines: segmentation, statistics, likelihood logs.

use std::io::{BufRead, Write};

use rayon::prelude::*;
use syltok_core::metrics::{CorpusStats, CorpusStatsBuilder, PplRecord};
use syltok_core::{FallbackPolicy, FormatId, SegmentedSentence, Segmenter};

use crate::corpus::{LineReader, Sentence};
use crate::error::{Error, Result};

/// Sentences handed to the thread pool at a time. Output order is restored
/// per chunk, so the value only affects memory use.
pub const CHUNK: usize = 4096;

fn chunks<I>(iter: I) -> impl Iterator<Item = Result<Vec<Sentence>>>
where
    I: Iterator<Item = Result<Sentence>>,
{
    let mut iter = iter.peekable();
    std::iter::from_fn(move || {
        iter.peek()?;
        let mut chunk = Vec::with_capacity(CHUNK);
        for s in iter.by_ref().take(CHUNK) {
            match s {
                Ok(s) => chunk.push(s),
                Err(e) => return Some(Err(e)),
            }
        }
        Some(Ok(chunk))
    })
}

/// Segments one sentence. Pre-segmented sentences pass through unchanged.
pub fn segment_sentence(
    sentence: &Sentence,
    segmenter: &Segmenter,
    policy: &FallbackPolicy,
) -> SegmentedSentence {
    match sentence {
        Sentence::Segmented(s) => s.clone(),
        Sentence::Words(words) => SegmentedSentence::from_syllabified(
            &words
                .iter()
                .map(|w| segmenter.segment_word(w, policy))
                .collect::<Vec<_>>(),
        ),
    }
}

/// Segments every sentence of `corpus` and writes one serialized line per
/// sentence to `out`, in input order. Runs on the current rayon pool.
pub fn segment_corpus<I, W>(
    corpus: I,
    segmenter: &Segmenter,
    policy: &FallbackPolicy,
    format: FormatId,
    out: &mut W,
) -> Result<()>
where
    I: Iterator<Item = Result<Sentence>>,
    W: Write + ?Sized,
{
    for chunk in chunks(corpus) {
        let lines: Vec<Result<String>> = chunk?
            .par_iter()
            .map(|s| -> Result<String> {
                Ok(segment_sentence(s, segmenter, policy).encode(format)?)
            })
            .collect();
        for line in lines {
            writeln!(out, "{}", line?).map_err(Error::Stream)?;
        }
    }
    Ok(())
}

/// Syllabified words rendered as text, one line per sentence.
pub struct PlainStyle<'a> {
    pub joiner: &'a str,
    pub word_sep: &'a str,
}

/// Like [`segment_corpus`] but joins pieces with `style.joiner` and words with
/// `style.word_sep` instead of a round-trippable format.
pub fn render_corpus<I, W>(
    corpus: I,
    segmenter: &Segmenter,
    policy: &FallbackPolicy,
    style: &PlainStyle<'_>,
    out: &mut W,
) -> Result<()>
where
    I: Iterator<Item = Result<Sentence>>,
    W: Write + ?Sized,
{
    for chunk in chunks(corpus) {
        let lines: Vec<String> = chunk?
            .par_iter()
            .map(|s| {
                segment_sentence(s, segmenter, policy)
                    .words
                    .iter()
                    .map(|w| w.join(style.joiner))
                    .collect::<Vec<_>>()
                    .join(style.word_sep)
            })
            .collect();
        for line in lines {
            writeln!(out, "{line}").map_err(Error::Stream)?;
        }
    }
    Ok(())
}

/// Token and type counts over a corpus. Pre-segmented sentences are counted
/// as found.
pub fn corpus_stats<I>(
    corpus: I,
    segmenter: &Segmenter,
    policy: &FallbackPolicy,
) -> Result<CorpusStats>
where
    I: Iterator<Item = Result<Sentence>>,
{
    let mut total = CorpusStatsBuilder::new();
    for chunk in chunks(corpus) {
        let part = chunk?
            .par_iter()
            .fold(CorpusStatsBuilder::new, |mut b, s| {
                for w in &segment_sentence(s, segmenter, policy).words {
                    b.add_pieces(&w.concat(), w);
                }
                b
            })
            .reduce(CorpusStatsBuilder::new, |mut a, b| {
                a.merge(b);
                a
            });
        total.merge(part);
    }
    Ok(total.finish())
}

pub const STATS_HEADER: &str =
    "corpus,n_word,v_word,n_syl,v_syl,n_char,v_char,syl_growth,word_growth";

/// One CSV row per corpus, growth rates to six decimals.
pub fn stats_csv(rows: &[(String, CorpusStats)]) -> Result<String> {
    let mut out = String::from(STATS_HEADER);
    out.push('\n');
    for (name, s) in rows {
        let (syl, word) = s.growth_rates()?;
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{:.6},{:.6}\n",
            csv_field(name),
            s.n_word,
            s.v_word,
            s.n_syl,
            s.v_syl,
            s.n_char,
            s.v_char,
            syl,
            word
        ));
    }
    Ok(out)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Parses a likelihood log: one `cross_entropy<TAB>seg_len<TAB>char_len`
/// record per line. Blank lines and `#` comments are skipped.
pub fn read_ppl_log<R: BufRead>(lines: LineReader<R>) -> Result<Vec<PplRecord>> {
    let origin = lines.origin().to_owned();
    let mut out = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line?;
        let line_no = idx + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 3 {
            return Err(Error::input(
                &origin,
                line_no,
                format!("expected 3 tab-separated fields, found {}", cols.len()),
            ));
        }
        let bad = |what: &str| Error::input(&origin, line_no, format!("bad {what}"));
        let ce: f64 = cols[0].trim().parse().map_err(|_| bad("cross_entropy"))?;
        let seg: usize = cols[1].trim().parse().map_err(|_| bad("seg_len"))?;
        let chars: usize = cols[2].trim().parse().map_err(|_| bad("char_len"))?;
        let rec = PplRecord::new(ce, seg, chars)
            .map_err(|e| Error::input(&origin, line_no, e.to_string()))?;
        out.push(rec);
    }
    Ok(out)
}
