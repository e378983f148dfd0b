//! The `syltok` command line.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use syltok_core::metrics::{
    corpus_char_ppl, corpus_chrf, paired_significance, paired_significance_chrf, ppl_gap,
    ChrfConfig, ChrfStats,
};
use syltok_core::{BpeModel, FallbackPolicy, FormatId, PatternSet, Segmenter, TrainConfig};

use crate::corpus::{CorpusHandle, LineReader, ParallelCorpus};
use crate::error::{Error, Result};
use crate::pipeline::{self, PlainStyle};
use crate::profiles;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 12345;

#[derive(Debug, Parser)]
#[command(
    name = "syltok",
    version,
    about = "Syllable-aware segmentation and evaluation"
)]
pub struct RunConfig {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Read from this file instead of stdin.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Strip carriage returns from input lines instead of rejecting them.
    #[arg(long, global = true)]
    pub crlf_tolerant: bool,
    /// Worker threads (0 = one per core). Output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Seed for randomized tests.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split words into syllables with a language profile or the English rules.
    Syllabify(SyllabifyArgs),
    /// Split words at Liang pattern hyphenation points.
    Hyphenate(HyphenateArgs),
    /// Train a BPE model on a corpus.
    BpeTrain(BpeTrainArgs),
    /// Encode a corpus with a trained BPE model.
    BpeEncode(BpeEncodeArgs),
    /// Segment a corpus and serialize it in a round-trippable format.
    Segment(SegmentArgs),
    /// Word, syllable and character token/type counts as CSV.
    Stats(StatsArgs),
    /// Convert a likelihood log to character-level perplexity.
    PplConvert(PplConvertArgs),
    /// Corpus-level chrF.
    Chrf(ChrfArgs),
    /// Paired approximate randomization test.
    Sigtest(SigtestArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CorpusArg {
    Plain,
    Conllu,
    Presegmented,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Boundary,
    Suffix,
    Prefix,
}

impl From<FormatArg> for FormatId {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Boundary => FormatId::Boundary,
            FormatArg::Suffix => FormatId::Suffix,
            FormatArg::Prefix => FormatId::Prefix,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FallbackArg {
    Chars,
    Bpe,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    /// Profile or English-rule syllabification.
    Syl,
    /// Pattern hyphenation.
    Hyph,
    /// Trained BPE model.
    Bpe,
    /// One piece per character.
    Char,
}

#[derive(Debug, Args)]
pub struct FallbackArgs {
    /// What to do with words the syllabifier rejects.
    #[arg(long, value_enum, default_value = "chars")]
    pub fallback: FallbackArg,
    /// BPE model for `--fallback bpe`.
    #[arg(long)]
    pub fallback_model: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SyllabifierArgs {
    /// Language id: en, es, fi, tr, shp, or any profile in $SYLTOK_PROFILE_DIR.
    #[arg(long)]
    pub lang: Option<String>,
    /// Profile file to use instead of a language id.
    #[arg(long)]
    pub profile: Option<PathBuf>,
    /// Word list enabling compound splits in the English rules.
    #[arg(long)]
    pub compounds: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PatternArgs {
    /// TeX or Hunspell pattern file.
    #[arg(long)]
    pub patterns: Option<PathBuf>,
    /// Extra exceptions, one hyphenated word per line.
    #[arg(long)]
    pub exceptions: Option<PathBuf>,
    /// Minimum letters before the first break (default: from the file, else 2).
    #[arg(long)]
    pub min_left: Option<usize>,
    /// Minimum letters after the last break (default: from the file, else 2).
    #[arg(long)]
    pub min_right: Option<usize>,
}

#[derive(Debug, Args)]
pub struct StyleArgs {
    /// Separator between the pieces of a word.
    #[arg(long, default_value = " ")]
    pub joiner: String,
    /// Separator between words.
    #[arg(long, default_value = " | ")]
    pub word_sep: String,
    /// Emit a serialization format instead of joined pieces.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Debug, Args)]
pub struct SyllabifyArgs {
    #[command(flatten)]
    pub syl: SyllabifierArgs,
    #[command(flatten)]
    pub fallback: FallbackArgs,
    #[command(flatten)]
    pub style: StyleArgs,
    #[arg(long, value_enum, default_value = "plain")]
    pub corpus: CorpusArg,
}

#[derive(Debug, Args)]
pub struct HyphenateArgs {
    #[command(flatten)]
    pub patterns: PatternArgs,
    #[command(flatten)]
    pub style: StyleArgs,
    #[arg(long, value_enum, default_value = "plain")]
    pub corpus: CorpusArg,
}

#[derive(Debug, Args)]
pub struct BpeTrainArgs {
    /// Target vocabulary size (alphabet + merges).
    #[arg(long)]
    pub vocab: Option<usize>,
    /// Use the number of distinct whitespace-separated tokens in this file as
    /// the target, e.g. a syllabified corpus.
    #[arg(long, conflicts_with = "vocab")]
    pub syllabary: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub min_frequency: u64,
    #[arg(long, value_enum, default_value = "plain")]
    pub corpus: CorpusArg,
}

#[derive(Debug, Args)]
pub struct BpeEncodeArgs {
    #[arg(long)]
    pub model: PathBuf,
    #[arg(long, value_enum, default_value = "boundary")]
    pub format: FormatArg,
    #[arg(long, value_enum, default_value = "plain")]
    pub corpus: CorpusArg,
}

#[derive(Debug, Args)]
pub struct SegmenterArgs {
    #[arg(long, value_enum, default_value = "syl")]
    pub method: MethodArg,
    #[command(flatten)]
    pub syl: SyllabifierArgs,
    #[command(flatten)]
    pub patterns: PatternArgs,
    /// BPE model for `--method bpe`.
    #[arg(long)]
    pub model: Option<PathBuf>,
    #[command(flatten)]
    pub fallback: FallbackArgs,
}

#[derive(Debug, Args)]
pub struct SegmentArgs {
    #[command(flatten)]
    pub segmenter: SegmenterArgs,
    #[arg(long, value_enum, default_value = "boundary")]
    pub format: FormatArg,
    #[arg(long, value_enum, default_value = "plain")]
    pub corpus: CorpusArg,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub segmenter: SegmenterArgs,
    #[arg(long, value_enum, default_value = "plain")]
    pub corpus: CorpusArg,
    /// Corpora to count, one CSV row each. Defaults to --input or stdin.
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PplConvertArgs {
    /// Print one corpus-level value instead of one per record.
    #[arg(long)]
    pub corpus_level: bool,
    /// Likelihood log of a character-level model; prints both corpus-level
    /// perplexities and their gap.
    #[arg(long)]
    pub baseline: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ChrfParams {
    #[arg(long, default_value_t = 6)]
    pub max_order: usize,
    #[arg(long, default_value_t = 2.0)]
    pub beta: f64,
    #[arg(long)]
    pub include_whitespace: bool,
}

impl ChrfParams {
    fn config(&self) -> ChrfConfig {
        ChrfConfig {
            max_order: self.max_order,
            beta: self.beta,
            include_whitespace: self.include_whitespace,
        }
    }
}

#[derive(Debug, Args)]
pub struct ChrfArgs {
    /// Hypotheses; defaults to --input or stdin.
    #[arg(long)]
    pub hyp: Option<PathBuf>,
    #[arg(long = "ref")]
    pub reference: PathBuf,
    #[command(flatten)]
    pub params: ChrfParams,
    /// Also print a JSON object with the score and its configuration.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SigtestArgs {
    /// Per-segment scores of system A, one number per line.
    #[arg(long, requires = "b", conflicts_with_all = ["hyp_a", "hyp_b"])]
    pub a: Option<PathBuf>,
    #[arg(long, requires = "a")]
    pub b: Option<PathBuf>,
    /// Hypotheses of system A, tested on corpus chrF against --ref.
    #[arg(long, requires_all = ["hyp_b", "reference"])]
    pub hyp_a: Option<PathBuf>,
    #[arg(long, requires = "hyp_a")]
    pub hyp_b: Option<PathBuf>,
    #[arg(long = "ref")]
    pub reference: Option<PathBuf>,
    #[arg(long, default_value_t = 10_000)]
    pub iterations: usize,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[command(flatten)]
    pub params: ChrfParams,
    #[arg(long)]
    pub json: bool,
}

/// Parses `argv` and runs it, returning the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(cfg) => cfg,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    0
                }
                _ => {
                    let _ = e.print();
                    1
                }
            };
        }
    };
    match execute(&cfg) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("syltok: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed configuration on a thread pool sized by `--threads`.
pub fn execute(cfg: &RunConfig) -> Result<()> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.global.threads)
        .build()
        .map_err(|e| Error::Usage(format!("thread pool: {e}")))?;
    pool.install(|| dispatch(cfg))
}

fn dispatch(cfg: &RunConfig) -> Result<()> {
    let g = &cfg.global;
    let mut out = open_output(g.output.as_deref())?;
    match &cfg.command {
        Command::Syllabify(a) => syllabify(g, a, &mut out)?,
        Command::Hyphenate(a) => hyphenate(g, a, &mut out)?,
        Command::BpeTrain(a) => bpe_train(g, a, &mut out)?,
        Command::BpeEncode(a) => bpe_encode(g, a, &mut out)?,
        Command::Segment(a) => segment(g, a, &mut out)?,
        Command::Stats(a) => stats(g, a, &mut out)?,
        Command::PplConvert(a) => ppl_convert(g, a, &mut out)?,
        Command::Chrf(a) => chrf(g, a, &mut out)?,
        Command::Sigtest(a) => sigtest(g, a, &mut out)?,
    }
    out.flush().map_err(Error::Stream)
}

type Input = Box<dyn BufRead + Send>;

fn open_path(path: &Path) -> Result<Input> {
    let f = File::open(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    Ok(Box::new(BufReader::new(f)))
}

fn lines_of(path: Option<&Path>, crlf_tolerant: bool) -> Result<LineReader<Input>> {
    match path {
        Some(p) => Ok(LineReader::new(
            open_path(p)?,
            &p.display().to_string(),
            crlf_tolerant,
        )),
        None => Ok(LineReader::new(
            Box::new(BufReader::new(io::stdin())),
            "stdin",
            crlf_tolerant,
        )),
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|source| Error::Io {
                path: p.to_owned(),
                source,
            })?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

fn corpus<'a>(kind: CorpusArg, lines: LineReader<Input>) -> Result<CorpusHandle<'a>> {
    Ok(match kind {
        CorpusArg::Plain => CorpusHandle::plain(lines),
        CorpusArg::Conllu => CorpusHandle::conllu(lines),
        CorpusArg::Presegmented => CorpusHandle::presegmented(lines)?,
    })
}

fn load_bpe(path: &Path) -> Result<BpeModel> {
    Ok(BpeModel::from_model_file(&read_text(path)?)?)
}

fn fallback_policy(a: &FallbackArgs) -> Result<FallbackPolicy> {
    match (a.fallback, &a.fallback_model) {
        (FallbackArg::Chars, _) => Ok(FallbackPolicy::CharSplit),
        (FallbackArg::Bpe, Some(p)) => Ok(FallbackPolicy::BpeDelegate(Arc::new(load_bpe(p)?))),
        (FallbackArg::Bpe, None) => Err(Error::Usage(
            "--fallback bpe requires --fallback-model".into(),
        )),
    }
}

fn syllabifier(a: &SyllabifierArgs) -> Result<Segmenter> {
    if let Some(p) = &a.profile {
        return Ok(Segmenter::Profile(profiles::load_profile_file(p)?));
    }
    let lang = a
        .lang
        .as_deref()
        .ok_or_else(|| Error::Usage("one of --lang or --profile is required".into()))?;
    let compounds = match &a.compounds {
        Some(p) => Some(
            read_text(p)?
                .split_whitespace()
                .map(str::to_owned)
                .collect(),
        ),
        None => None,
    };
    profiles::syllabifier_for(lang, compounds)
}

fn hyphenator(a: &PatternArgs) -> Result<Segmenter> {
    let path = a
        .patterns
        .as_deref()
        .ok_or_else(|| Error::Usage("--patterns is required for hyphenation".into()))?;
    let mut ps = PatternSet::parse(&read_text(path)?)?;
    if let Some(ex) = &a.exceptions {
        ps.add_exceptions(&read_text(ex)?)?;
    }
    let left = a.min_left.unwrap_or(ps.min_left());
    let right = a.min_right.unwrap_or(ps.min_right());
    Ok(Segmenter::Hyphenator(ps.with_min(left, right)?))
}

fn segmenter(a: &SegmenterArgs) -> Result<Segmenter> {
    match a.method {
        MethodArg::Syl => syllabifier(&a.syl),
        MethodArg::Hyph => hyphenator(&a.patterns),
        MethodArg::Bpe => {
            let p = a
                .model
                .as_deref()
                .ok_or_else(|| Error::Usage("--method bpe requires --model".into()))?;
            Ok(Segmenter::Bpe(Arc::new(load_bpe(p)?)))
        }
        MethodArg::Char => Ok(Segmenter::Chars),
    }
}

fn emit(
    g: &GlobalArgs,
    kind: CorpusArg,
    seg: &Segmenter,
    policy: &FallbackPolicy,
    style: &StyleArgs,
    out: &mut dyn Write,
) -> Result<()> {
    let handle = corpus(kind, lines_of(g.input.as_deref(), g.crlf_tolerant)?)?;
    match style.format {
        Some(f) => pipeline::segment_corpus(handle, seg, policy, f.into(), out),
        None => {
            let style = PlainStyle {
                joiner: &style.joiner,
                word_sep: &style.word_sep,
            };
            pipeline::render_corpus(handle, seg, policy, &style, out)
        }
    }
}

fn syllabify(g: &GlobalArgs, a: &SyllabifyArgs, out: &mut dyn Write) -> Result<()> {
    let seg = syllabifier(&a.syl)?;
    let policy = fallback_policy(&a.fallback)?;
    emit(g, a.corpus, &seg, &policy, &a.style, out)
}

fn hyphenate(g: &GlobalArgs, a: &HyphenateArgs, out: &mut dyn Write) -> Result<()> {
    let seg = hyphenator(&a.patterns)?;
    emit(g, a.corpus, &seg, &FallbackPolicy::CharSplit, &a.style, out)
}

fn bpe_train(g: &GlobalArgs, a: &BpeTrainArgs, out: &mut dyn Write) -> Result<()> {
    let target = match (a.vocab, &a.syllabary) {
        (Some(v), None) => v,
        (None, Some(p)) => {
            let text = read_text(p)?;
            let types: std::collections::BTreeSet<&str> = text.split_whitespace().collect();
            types.len()
        }
        _ => {
            return Err(Error::Usage(
                "give exactly one of --vocab or --syllabary".into(),
            ))
        }
    };
    let mut counts: std::collections::BTreeMap<String, u64> = Default::default();
    for s in corpus(a.corpus, lines_of(g.input.as_deref(), g.crlf_tolerant)?)? {
        for w in s?.words() {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    let cfg = TrainConfig {
        min_frequency: a.min_frequency,
        ..TrainConfig::default()
    };
    let model = BpeModel::train_with(counts.iter().map(|(w, &c)| (w, c)), target, &cfg)?;
    out.write_all(model.to_model_file().as_bytes())
        .map_err(Error::Stream)
}

fn bpe_encode(g: &GlobalArgs, a: &BpeEncodeArgs, out: &mut dyn Write) -> Result<()> {
    let seg = Segmenter::Bpe(Arc::new(load_bpe(&a.model)?));
    let handle = corpus(a.corpus, lines_of(g.input.as_deref(), g.crlf_tolerant)?)?;
    pipeline::segment_corpus(
        handle,
        &seg,
        &FallbackPolicy::CharSplit,
        a.format.into(),
        out,
    )
}

/// Pre-segmented corpora never reach the segmenter, so no language is needed.
fn segmenter_for(a: &SegmenterArgs, kind: CorpusArg) -> Result<Segmenter> {
    let no_language = a.syl.lang.is_none() && a.syl.profile.is_none();
    match (kind, a.method) {
        (CorpusArg::Presegmented, MethodArg::Syl) if no_language => Ok(Segmenter::Chars),
        _ => segmenter(a),
    }
}

fn segment(g: &GlobalArgs, a: &SegmentArgs, out: &mut dyn Write) -> Result<()> {
    let seg = segmenter_for(&a.segmenter, a.corpus)?;
    let policy = fallback_policy(&a.segmenter.fallback)?;
    let handle = corpus(a.corpus, lines_of(g.input.as_deref(), g.crlf_tolerant)?)?;
    pipeline::segment_corpus(handle, &seg, &policy, a.format.into(), out)
}

fn stats(g: &GlobalArgs, a: &StatsArgs, out: &mut dyn Write) -> Result<()> {
    let seg = segmenter_for(&a.segmenter, a.corpus)?;
    let policy = fallback_policy(&a.segmenter.fallback)?;
    let sources: Vec<Option<&Path>> = if a.files.is_empty() {
        vec![g.input.as_deref()]
    } else {
        a.files.iter().map(|p| Some(p.as_path())).collect()
    };
    let mut rows = Vec::new();
    for src in sources {
        let name = src.map_or_else(|| "stdin".to_owned(), |p| p.display().to_string());
        let handle = corpus(a.corpus, lines_of(src, g.crlf_tolerant)?)?;
        rows.push((name, pipeline::corpus_stats(handle, &seg, &policy)?));
    }
    out.write_all(pipeline::stats_csv(&rows)?.as_bytes())
        .map_err(Error::Stream)
}

fn ppl_convert(g: &GlobalArgs, a: &PplConvertArgs, out: &mut dyn Write) -> Result<()> {
    let records = pipeline::read_ppl_log(lines_of(g.input.as_deref(), g.crlf_tolerant)?)?;
    let w = |out: &mut dyn Write, s: String| out.write_all(s.as_bytes()).map_err(Error::Stream);
    if let Some(base) = &a.baseline {
        let base = pipeline::read_ppl_log(lines_of(Some(base), g.crlf_tolerant)?)?;
        let char_ppl = corpus_char_ppl(&base)?;
        let syl_ppl = corpus_char_ppl(&records)?;
        return w(
            out,
            format!(
                "char_ppl,syl_ppl,gap\n{char_ppl:.6},{syl_ppl:.6},{:.6}\n",
                ppl_gap(char_ppl, syl_ppl)
            ),
        );
    }
    if a.corpus_level {
        return w(out, format!("{:.6}\n", corpus_char_ppl(&records)?));
    }
    for r in &records {
        w(out, format!("{:.6}\n", r.char_ppl()))?;
    }
    Ok(())
}

fn read_pairs(left: Option<&Path>, right: &Path, crlf: bool) -> Result<(Vec<String>, Vec<String>)> {
    let pairs = ParallelCorpus::new(lines_of(left, crlf)?, lines_of(Some(right), crlf)?);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for p in pairs {
        let (x, y) = p?;
        a.push(x);
        b.push(y);
    }
    Ok((a, b))
}

fn chrf(g: &GlobalArgs, a: &ChrfArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = a.params.config();
    let hyp_path = a.hyp.as_deref().or(g.input.as_deref());
    let (hyps, refs) = read_pairs(hyp_path, &a.reference, g.crlf_tolerant)?;
    let score = corpus_chrf(&hyps, &refs, &cfg)?;
    let mut text = format!("{score:.2}\n");
    if a.json {
        let mut pooled = ChrfStats::new(cfg.max_order);
        for (h, r) in hyps.iter().zip(&refs) {
            pooled.add(&ChrfStats::from_pair(h, r, &cfg));
        }
        let v = json!({
            "score": score,
            "signature": cfg.signature(),
            "segments": hyps.len(),
            "max_order": cfg.max_order,
            "beta": cfg.beta,
            "include_whitespace": cfg.include_whitespace,
            "effective_order": pooled.effective_order(),
            "order_exclusion": "orders with no n-grams on either side are excluded",
        });
        text.push_str(&v.to_string());
        text.push('\n');
    }
    out.write_all(text.as_bytes()).map_err(Error::Stream)
}

fn read_scores(path: &Path, crlf: bool) -> Result<Vec<f64>> {
    let lines = lines_of(Some(path), crlf)?;
    let origin = lines.origin().to_owned();
    let mut v = Vec::new();
    for (i, l) in lines.enumerate() {
        let l = l?;
        if l.trim().is_empty() {
            continue;
        }
        let x: f64 = l
            .trim()
            .parse()
            .map_err(|_| Error::input(&origin, i + 1, format!("not a number: {l:?}")))?;
        if !x.is_finite() {
            return Err(Error::input(&origin, i + 1, "score must be finite"));
        }
        v.push(x);
    }
    Ok(v)
}

fn sigtest(g: &GlobalArgs, a: &SigtestArgs, out: &mut dyn Write) -> Result<()> {
    let (p, statistic) = match (&a.a, &a.b, &a.hyp_a, &a.hyp_b, &a.reference) {
        (Some(pa), Some(pb), None, None, _) => {
            let sa = read_scores(pa, g.crlf_tolerant)?;
            let sb = read_scores(pb, g.crlf_tolerant)?;
            (paired_significance(&sa, &sb, a.iterations, g.seed)?, "sum")
        }
        (None, None, Some(ha), Some(hb), Some(r)) => {
            let (hyp_a, refs) = read_pairs(Some(ha), r, g.crlf_tolerant)?;
            let (hyp_b, _) = read_pairs(Some(hb), r, g.crlf_tolerant)?;
            let cfg = a.params.config();
            (
                paired_significance_chrf(&hyp_a, &hyp_b, &refs, &cfg, a.iterations, g.seed)?,
                "corpus_chrf",
            )
        }
        _ => {
            return Err(Error::Usage(
                "give --a and --b, or --hyp-a, --hyp-b and --ref".into(),
            ))
        }
    };
    let mut text = format!("{p:.6}\n");
    if a.json {
        let v = json!({
            "p_value": p,
            "iterations": a.iterations,
            "seed": g.seed,
            "statistic": statistic,
            "alpha": a.alpha,
            "significant": p <= a.alpha,
        });
        text.push_str(&v.to_string());
        text.push('\n');
    }
    out.write_all(text.as_bytes()).map_err(Error::Stream)
}
