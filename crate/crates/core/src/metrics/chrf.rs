use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// chrF parameters. The defaults give chrF2 over character 1- to 6-grams
/// with whitespace removed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChrfConfig {
    pub max_order: usize,
    pub beta: f64,
    pub include_whitespace: bool,
}

impl Default for ChrfConfig {
    fn default() -> Self {
        ChrfConfig {
            max_order: 6,
            beta: 2.0,
            include_whitespace: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ChrfError {
    #[error("max_order must be at least 1")]
    BadOrder,
    #[error("beta must be positive and finite, got {0}")]
    BadBeta(f64),
    #[error("{hyp} hypothesis lines but {reference} reference lines")]
    LengthMismatch { hyp: usize, reference: usize },
}

impl ChrfConfig {
    pub fn validate(&self) -> Result<(), ChrfError> {
        if self.max_order == 0 {
            return Err(ChrfError::BadOrder);
        }
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(ChrfError::BadBeta(self.beta));
        }
        Ok(())
    }

    /// Scorer signature, e.g. `chrF2+numchars.6+space.false`.
    pub fn signature(&self) -> String {
        format!(
            "chrF{}+numchars.{}+space.{}",
            self.beta, self.max_order, self.include_whitespace
        )
    }
}

/// N-gram totals for one order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OrderCounts {
    pub hyp: u64,
    pub reference: u64,
    pub matches: u64,
}

/// Sufficient statistics for chrF: per-order n-gram totals and clipped
/// matches. Adding statistics of several segments gives the corpus score.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChrfStats {
    pub orders: Vec<OrderCounts>,
}

fn chars_of(s: &str, include_whitespace: bool) -> Vec<char> {
    s.chars()
        .filter(|c| include_whitespace || !c.is_whitespace())
        .collect()
}

fn ngram_counts(chars: &[char], n: usize) -> BTreeMap<&[char], u64> {
    let mut m = BTreeMap::new();
    if chars.len() >= n {
        for w in chars.windows(n) {
            *m.entry(w).or_insert(0) += 1;
        }
    }
    m
}

impl ChrfStats {
    pub fn new(max_order: usize) -> Self {
        ChrfStats {
            orders: alloc::vec![OrderCounts::default(); max_order],
        }
    }

    /// Statistics of one hypothesis/reference pair.
    pub fn from_pair(hypothesis: &str, reference: &str, cfg: &ChrfConfig) -> Self {
        let hyp = chars_of(hypothesis, cfg.include_whitespace);
        let refc = chars_of(reference, cfg.include_whitespace);
        let mut stats = ChrfStats::new(cfg.max_order);
        for (i, slot) in stats.orders.iter_mut().enumerate() {
            let n = i + 1;
            let h = ngram_counts(&hyp, n);
            let r = ngram_counts(&refc, n);
            slot.hyp = hyp.len().saturating_sub(n - 1) as u64;
            slot.reference = refc.len().saturating_sub(n - 1) as u64;
            slot.matches = h
                .iter()
                .map(|(g, &c)| c.min(r.get(g).copied().unwrap_or(0)))
                .sum();
        }
        stats
    }

    pub fn add(&mut self, other: &ChrfStats) {
        if self.orders.len() < other.orders.len() {
            self.orders
                .resize(other.orders.len(), OrderCounts::default());
        }
        for (a, b) in self.orders.iter_mut().zip(&other.orders) {
            a.hyp += b.hyp;
            a.reference += b.reference;
            a.matches += b.matches;
        }
    }

    /// Orders where at least one side has n-grams.
    pub fn effective_order(&self) -> usize {
        self.orders
            .iter()
            .filter(|o| o.hyp > 0 || o.reference > 0)
            .count()
    }

    /// Mean precision and recall over the effective orders.
    pub fn mean_precision_recall(&self) -> Option<(f64, f64)> {
        let mut p = 0.0;
        let mut r = 0.0;
        let mut k = 0usize;
        for o in &self.orders {
            if o.hyp == 0 && o.reference == 0 {
                continue;
            }
            if o.hyp > 0 {
                p += o.matches as f64 / o.hyp as f64;
            }
            if o.reference > 0 {
                r += o.matches as f64 / o.reference as f64;
            }
            k += 1;
        }
        (k > 0).then(|| (p / k as f64, r / k as f64))
    }

    /// chrF on the 0–100 scale.
    pub fn score(&self, beta: f64) -> f64 {
        let Some((p, r)) = self.mean_precision_recall() else {
            return 0.0;
        };
        let b2 = beta * beta;
        let denom = b2 * p + r;
        if denom <= 0.0 {
            return 0.0;
        }
        100.0 * (1.0 + b2) * p * r / denom
    }
}

/// Sentence-level chrF.
pub fn chrf(hypothesis: &str, reference: &str, cfg: &ChrfConfig) -> Result<f64, ChrfError> {
    cfg.validate()?;
    Ok(ChrfStats::from_pair(hypothesis, reference, cfg).score(cfg.beta))
}

/// Corpus-level chrF from n-gram statistics pooled over all line pairs.
pub fn corpus_chrf<H, R>(hyps: &[H], refs: &[R], cfg: &ChrfConfig) -> Result<f64, ChrfError>
where
    H: AsRef<str>,
    R: AsRef<str>,
{
    cfg.validate()?;
    if hyps.len() != refs.len() {
        return Err(ChrfError::LengthMismatch {
            hyp: hyps.len(),
            reference: refs.len(),
        });
    }
    let mut total = ChrfStats::new(cfg.max_order);
    for (h, r) in hyps.iter().zip(refs) {
        total.add(&ChrfStats::from_pair(h.as_ref(), r.as_ref(), cfg));
    }
    Ok(total.score(cfg.beta))
}
