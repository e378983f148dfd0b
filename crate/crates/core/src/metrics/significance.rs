use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::chrf::{ChrfConfig, ChrfError, ChrfStats};

/// Smallest accepted number of permutation samples.
pub const MIN_ITERATIONS: usize = 1000;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SignificanceError {
    #[error("system A has {a} segments but system B has {b}")]
    LengthMismatch { a: usize, b: usize },
    #[error("at least {MIN_ITERATIONS} iterations are required, got {0}")]
    TooFewIterations(usize),
    #[error(transparent)]
    Chrf(#[from] ChrfError),
}

/// Coin flips drawn one bit at a time from a seeded ChaCha8 stream.
struct Coins {
    rng: ChaCha8Rng,
    word: u64,
    left: u32,
}

impl Coins {
    fn new(seed: u64) -> Self {
        Coins {
            rng: ChaCha8Rng::seed_from_u64(seed),
            word: 0,
            left: 0,
        }
    }

    fn flip(&mut self) -> bool {
        if self.left == 0 {
            self.word = self.rng.next_u64();
            self.left = 64;
        }
        let bit = self.word & 1 == 1;
        self.word >>= 1;
        self.left -= 1;
        bit
    }
}

// Permuted differences within this relative distance of the observed one
// count as ties.
const TIE_EPS: f64 = 1e-12;

/// Paired approximate randomization over arbitrary per-segment items.
///
/// `statistic` maps one system's segments to its corpus score. Each sample
/// swaps the A and B item of every segment with probability 1/2 and records
/// whether `|stat(A') - stat(B')|` reaches the observed `|stat(A) - stat(B)|`.
/// Returns `(count + 1) / (iterations + 1)`.
pub fn paired_randomization<T, F>(
    a: &[T],
    b: &[T],
    iterations: usize,
    seed: u64,
    mut statistic: F,
) -> Result<f64, SignificanceError>
where
    F: FnMut(&[&T]) -> f64,
{
    if a.len() != b.len() {
        return Err(SignificanceError::LengthMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    if iterations < MIN_ITERATIONS {
        return Err(SignificanceError::TooFewIterations(iterations));
    }
    let mut xs: Vec<&T> = a.iter().collect();
    let mut ys: Vec<&T> = b.iter().collect();
    let observed = (statistic(&xs) - statistic(&ys)).abs();
    let threshold = observed - TIE_EPS * observed.max(1.0);
    let mut coins = Coins::new(seed);
    let mut hits = 0usize;
    for _ in 0..iterations {
        for i in 0..a.len() {
            if coins.flip() {
                xs[i] = &b[i];
                ys[i] = &a[i];
            } else {
                xs[i] = &a[i];
                ys[i] = &b[i];
            }
        }
        let delta = (statistic(&xs) - statistic(&ys)).abs();
        if delta >= threshold {
            hits += 1;
        }
    }
    Ok((hits as f64 + 1.0) / (iterations as f64 + 1.0))
}

/// Paired approximate randomization on per-segment scores, using the sum of
/// scores as the corpus statistic.
pub fn paired_significance(
    scores_a: &[f64],
    scores_b: &[f64],
    iterations: usize,
    seed: u64,
) -> Result<f64, SignificanceError> {
    paired_randomization(scores_a, scores_b, iterations, seed, |xs| {
        xs.iter().copied().sum::<f64>()
    })
}

/// Paired approximate randomization on corpus chrF. Segments are swapped as
/// n-gram statistics, so every sample is a micro-averaged corpus score.
pub fn paired_significance_chrf<A, B, R>(
    hyps_a: &[A],
    hyps_b: &[B],
    refs: &[R],
    cfg: &ChrfConfig,
    iterations: usize,
    seed: u64,
) -> Result<f64, SignificanceError>
where
    A: AsRef<str>,
    B: AsRef<str>,
    R: AsRef<str>,
{
    cfg.validate()?;
    if hyps_a.len() != hyps_b.len() {
        return Err(SignificanceError::LengthMismatch {
            a: hyps_a.len(),
            b: hyps_b.len(),
        });
    }
    if refs.len() != hyps_a.len() {
        return Err(ChrfError::LengthMismatch {
            hyp: hyps_a.len(),
            reference: refs.len(),
        }
        .into());
    }
    let stats = |hyps: &mut dyn Iterator<Item = &str>| -> Vec<ChrfStats> {
        hyps.zip(refs)
            .map(|(h, r)| ChrfStats::from_pair(h, r.as_ref(), cfg))
            .collect()
    };
    let sa = stats(&mut hyps_a.iter().map(AsRef::as_ref));
    let sb = stats(&mut hyps_b.iter().map(AsRef::as_ref));
    paired_randomization(&sa, &sb, iterations, seed, |xs| {
        let mut total = ChrfStats::new(cfg.max_order);
        for s in xs {
            total.add(s);
        }
        total.score(cfg.beta)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identical_systems_give_one() {
        let a = [0.3, 0.5, 0.9, 0.1];
        assert_eq!(paired_significance(&a, &a, 1000, 7).unwrap(), 1.0);
    }

    #[test]
    fn single_segment_gives_one() {
        assert_eq!(paired_significance(&[0.9], &[0.1], 1000, 1).unwrap(), 1.0);
    }

    #[test]
    fn seeded_and_relabel_invariant() {
        let a: Vec<f64> = (0..30).map(|i| (i % 7) as f64 * 0.1 + 0.05).collect();
        let b: Vec<f64> = (0..30).map(|i| (i % 5) as f64 * 0.1).collect();
        let p1 = paired_significance(&a, &b, 2000, 42).unwrap();
        let p2 = paired_significance(&a, &b, 2000, 42).unwrap();
        let p3 = paired_significance(&b, &a, 2000, 42).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(p1, p3);
        assert!(p1 > 0.0 && p1 <= 1.0);
    }

    #[test]
    fn clear_difference_is_significant() {
        let a = vec![1.0; 40];
        let b = vec![0.0; 40];
        let p = paired_significance(&a, &b, 1000, 3).unwrap();
        assert!(p < 0.01, "{p}");
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            paired_significance(&[1.0], &[1.0, 2.0], 1000, 0),
            Err(SignificanceError::LengthMismatch { a: 1, b: 2 })
        );
        assert_eq!(
            paired_significance(&[1.0], &[1.0], 999, 0),
            Err(SignificanceError::TooFewIterations(999))
        );
    }

    #[test]
    fn chrf_variant() {
        let refs = ["the cat sat", "a dog ran", "birds fly"];
        let p =
            paired_significance_chrf(&refs, &refs, &refs, &ChrfConfig::default(), 1000, 5).unwrap();
        assert_eq!(p, 1.0);
        let bad = ["xyz", "qqq", "zzz"];
        let p =
            paired_significance_chrf(&refs, &bad, &refs, &ChrfConfig::default(), 1000, 5).unwrap();
        assert!(p < 0.4, "{p}");
    }
}
