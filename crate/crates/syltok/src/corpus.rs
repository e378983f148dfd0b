//! Corpus readers: plain text, CoNLL-U, pre-segmented text and aligned
//! parallel files.
//!
//! All readers are line-based and streaming. Input must be UTF-8 with LF line
//! endings; carriage returns are stripped only when the reader is built with
//! `crlf_tolerant`.

use std::io::BufRead;

use syltok_core::{text, SegmentedSentence};

use crate::error::{Error, Result};

/// Header that opens a pre-segmented file, e.g. `#syltok-presegmented delimiter=+`.
pub const PRESEGMENTED_MAGIC: &str = "#syltok-presegmented";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    PlainText,
    Conllu,
    Presegmented,
    ParallelPair,
}

/// One sentence from a corpus: either raw words still to be segmented, or
/// pieces that were segmented upstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sentence {
    Words(Vec<String>),
    Segmented(SegmentedSentence),
}

impl Sentence {
    pub fn words(&self) -> Vec<String> {
        match self {
            Sentence::Words(w) => w.clone(),
            Sentence::Segmented(s) => s.reconstructed_words(),
        }
    }
}

/// Numbered UTF-8 lines with the trailing newline removed.
pub struct LineReader<R> {
    inner: R,
    origin: String,
    line: usize,
    crlf_tolerant: bool,
    buf: Vec<u8>,
}

impl<R: BufRead> LineReader<R> {
    pub fn new(inner: R, origin: &str, crlf_tolerant: bool) -> Self {
        LineReader {
            inner,
            origin: origin.to_owned(),
            line: 0,
            crlf_tolerant,
            buf: Vec::new(),
        }
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }

    /// Number of the line most recently returned.
    pub fn line_number(&self) -> usize {
        self.line
    }
}

impl<R: BufRead> Iterator for LineReader<R> {
    type Item = Result<String>;

    fn next(&mut self) -> Option<Self::Item> {
        self.buf.clear();
        match self.inner.read_until(b'\n', &mut self.buf) {
            Ok(0) => return None,
            Ok(_) => {}
            Err(e) => return Some(Err(Error::Stream(e))),
        }
        self.line += 1;
        if self.buf.last() == Some(&b'\n') {
            self.buf.pop();
        }
        if self.buf.last() == Some(&b'\r') {
            if !self.crlf_tolerant {
                return Some(Err(Error::input(
                    &self.origin,
                    self.line,
                    "carriage return found; rerun with --crlf-tolerant",
                )));
            }
            self.buf.pop();
        }
        let bytes = std::mem::take(&mut self.buf);
        Some(String::from_utf8(bytes).map_err(|e| {
            Error::input(
                &self.origin,
                self.line,
                format!("invalid UTF-8 at byte {}", e.utf8_error().valid_up_to()),
            )
        }))
    }
}

/// A sentence stream of a given kind.
pub struct CorpusHandle<'a> {
    kind: CorpusKind,
    inner: Box<dyn Iterator<Item = Result<Sentence>> + Send + 'a>,
}

impl<'a> CorpusHandle<'a> {
    /// One sentence per line, split on whitespace. Blank lines are kept as
    /// empty sentences so output stays line-aligned with input.
    pub fn plain<R: BufRead + Send + 'a>(lines: LineReader<R>) -> Self {
        CorpusHandle {
            kind: CorpusKind::PlainText,
            inner: Box::new(
                lines.map(|l| {
                    l.map(|l| Sentence::Words(text::words(&l).map(str::to_owned).collect()))
                }),
            ),
        }
    }

    pub fn conllu<R: BufRead + Send + 'a>(lines: LineReader<R>) -> Self {
        CorpusHandle {
            kind: CorpusKind::Conllu,
            inner: Box::new(ConlluReader::new(lines)),
        }
    }

    /// Pre-segmented text. The first line must be the header
    /// `#syltok-presegmented delimiter=D`; every later line is a sentence whose
    /// words have their pieces joined by `D`.
    pub fn presegmented<R: BufRead + Send + 'a>(mut lines: LineReader<R>) -> Result<Self> {
        let origin = lines.origin().to_owned();
        let header = match lines.next() {
            Some(h) => h?,
            None => {
                return Ok(CorpusHandle {
                    kind: CorpusKind::Presegmented,
                    inner: Box::new(std::iter::empty()),
                })
            }
        };
        let delimiter = parse_presegmented_header(&header)
            .ok_or_else(|| {
                Error::input(
                    &origin,
                    1,
                    format!("expected header `{PRESEGMENTED_MAGIC} delimiter=<d>`"),
                )
            })?
            .to_owned();
        let mut line_no = 1;
        let inner = lines.map(move |l| {
            line_no += 1;
            let l = l?;
            let mut words = Vec::new();
            for w in text::words(&l) {
                let pieces: Vec<String> = w.split(delimiter.as_str()).map(str::to_owned).collect();
                if pieces.iter().any(String::is_empty) {
                    return Err(Error::input(
                        &origin,
                        line_no,
                        format!("empty piece in {w:?}"),
                    ));
                }
                words.push(pieces);
            }
            Ok(Sentence::Segmented(SegmentedSentence::new(words)))
        });
        Ok(CorpusHandle {
            kind: CorpusKind::Presegmented,
            inner: Box::new(inner),
        })
    }

    pub fn kind(&self) -> CorpusKind {
        self.kind
    }
}

impl Iterator for CorpusHandle<'_> {
    type Item = Result<Sentence>;

    fn next(&mut self) -> Option<Self::Item> {
        self.inner.next()
    }
}

fn parse_presegmented_header(line: &str) -> Option<&str> {
    let mut fields = line.split_whitespace();
    if fields.next()? != PRESEGMENTED_MAGIC {
        return None;
    }
    let d = fields.find_map(|f| f.strip_prefix("delimiter="))?;
    (!d.is_empty()).then_some(d)
}

/// Sentences of a CoNLL-U file as surface words.
///
/// Multiword-token range lines (`1-2`) supply the surface form and the
/// syntactic words they cover are skipped; empty nodes (`1.1`) and comments
/// are ignored.
pub struct ConlluReader<R> {
    lines: LineReader<R>,
    done: bool,
}

impl<R: BufRead> ConlluReader<R> {
    pub fn new(lines: LineReader<R>) -> Self {
        ConlluReader { lines, done: false }
    }

    fn bad(&self, message: String) -> Error {
        Error::input(self.lines.origin(), self.lines.line_number(), message)
    }
}

impl<R: BufRead> Iterator for ConlluReader<R> {
    type Item = Result<Sentence>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut words: Vec<String> = Vec::new();
        let mut covered_until = 0usize;
        loop {
            let line = match self.lines.next() {
                None => {
                    self.done = true;
                    return (!words.is_empty()).then_some(Ok(Sentence::Words(words)));
                }
                Some(Err(e)) => {
                    self.done = true;
                    return Some(Err(e));
                }
                Some(Ok(l)) => l,
            };
            if line.trim().is_empty() {
                if words.is_empty() {
                    continue;
                }
                return Some(Ok(Sentence::Words(words)));
            }
            if line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 10 {
                self.done = true;
                return Some(Err(
                    self.bad(format!("expected 10 columns, found {}", cols.len()))
                ));
            }
            let (id, form) = (cols[0], cols[1]);
            if let Some((a, b)) = id.split_once('-') {
                match (a.parse::<usize>(), b.parse::<usize>()) {
                    (Ok(a), Ok(b)) if a <= b => {
                        covered_until = b;
                        words.push(form.to_owned());
                    }
                    _ => {
                        self.done = true;
                        return Some(Err(self.bad(format!("bad range id {id:?}"))));
                    }
                }
            } else if id.contains('.') {
                continue;
            } else {
                match id.parse::<usize>() {
                    Ok(n) if n > covered_until => words.push(form.to_owned()),
                    Ok(_) => {}
                    Err(_) => {
                        self.done = true;
                        return Some(Err(self.bad(format!("bad id {id:?}"))));
                    }
                }
            }
        }
    }
}

/// Two line-aligned files, e.g. hypotheses and references.
pub struct ParallelCorpus<A, B> {
    left: LineReader<A>,
    right: LineReader<B>,
}

impl<A: BufRead, B: BufRead> ParallelCorpus<A, B> {
    pub fn new(left: LineReader<A>, right: LineReader<B>) -> Self {
        ParallelCorpus { left, right }
    }

    pub fn kind(&self) -> CorpusKind {
        CorpusKind::ParallelPair
    }
}

impl<A: BufRead, B: BufRead> Iterator for ParallelCorpus<A, B> {
    type Item = Result<(String, String)>;

    fn next(&mut self) -> Option<Self::Item> {
        match (self.left.next(), self.right.next()) {
            (None, None) => None,
            (Some(Err(e)), _) | (_, Some(Err(e))) => Some(Err(e)),
            (Some(Ok(a)), Some(Ok(b))) => Some(Ok((a, b))),
            (Some(Ok(_)), None) => Some(Err(Error::input(
                self.right.origin(),
                self.left.line_number(),
                format!("{} has more lines", self.left.origin()),
            ))),
            (None, Some(Ok(_))) => Some(Err(Error::input(
                self.left.origin(),
                self.right.line_number(),
                format!("{} has more lines", self.right.origin()),
            ))),
        }
    }
}
