/// One sentence's language-model likelihood record.
///
/// `cross_entropy` is the mean negative log-likelihood in nats per
/// segmentation token, end-of-sequence event included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PplRecord {
    pub cross_entropy: f64,
    pub seg_len: usize,
    pub char_len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum PplError {
    #[error("cross entropy must be finite and non-negative, got {0}")]
    BadCrossEntropy(f64),
    #[error("no records")]
    Empty,
}

impl PplRecord {
    pub fn new(cross_entropy: f64, seg_len: usize, char_len: usize) -> Result<Self, PplError> {
        if !cross_entropy.is_finite() || cross_entropy < 0.0 {
            return Err(PplError::BadCrossEntropy(cross_entropy));
        }
        Ok(PplRecord {
            cross_entropy,
            seg_len,
            char_len,
        })
    }

    pub fn char_ppl(&self) -> f64 {
        char_ppl(self)
    }
}

/// Perplexity renormalised to character units:
/// `exp(L * (seg_len + 1) / (char_len + 1))`. The `+ 1` accounts for the
/// end-of-sequence event.
pub fn char_ppl(r: &PplRecord) -> f64 {
    let ratio = (r.seg_len as f64 + 1.0) / (r.char_len as f64 + 1.0);
    libm::exp(r.cross_entropy * ratio)
}

/// Corpus-level character perplexity: total nats over total character
/// events. Equals [`char_ppl`] for a single record.
pub fn corpus_char_ppl(records: &[PplRecord]) -> Result<f64, PplError> {
    if records.is_empty() {
        return Err(PplError::Empty);
    }
    let mut nats = 0.0;
    let mut chars = 0.0;
    for r in records {
        nats += r.cross_entropy * (r.seg_len as f64 + 1.0);
        chars += r.char_len as f64 + 1.0;
    }
    Ok(libm::exp(nats / chars))
}

/// Character-perplexity gap between a character model and a syllable model.
pub fn ppl_gap(char_ppl_value: f64, syl_ppl_value: f64) -> f64 {
    char_ppl_value - syl_ppl_value
}
