//! Evaluation math: perplexity normalisation, chrF, significance testing and
//! type/token statistics.

mod chrf;
mod ppl;
mod significance;
mod stats;

pub use chrf::{chrf, corpus_chrf, ChrfConfig, ChrfError, ChrfStats, OrderCounts};
pub use ppl::{char_ppl, corpus_char_ppl, ppl_gap, PplError, PplRecord};
pub use significance::{
    paired_randomization, paired_significance, paired_significance_chrf, SignificanceError,
    MIN_ITERATIONS,
};
pub use stats::{CorpusStats, CorpusStatsBuilder, StatsError};
