//! Seeded verification suites for the linkage theorems, the pinned facts
//! about the 13-vertex counterexample, and open-ended search modes.

use std::fmt;
use std::path::{Path as FsPath, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::{
    is_semicomplete, is_semicomplete_multipartite, is_semicomplete_split, split_partition, validate_partition,
};
use crate::connectivity::{is_k_strong, is_separator, local_connectivity_without, PathSystem};
use crate::constructive::{link_with_certificate, premise_orientation, Mode};
use crate::error::Error;
use crate::generators::{derive_seed, fig1_counterexample, random_instance, Family, GenError, GenSpec};
use crate::graph::{Digraph, VertexId};
use crate::io::serialize_with_comments;
use crate::linkage::{is_good_tuple, quadruples, two_disjoint_paths, LinkageOutcome, LinkageQuery, DEFAULT_BUDGET};
use crate::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// Every 6-strong split digraph is 2-linked.
    Split6,
    /// Split digraph, 3 and 4 internally disjoint paths for the two pairs.
    SplitLocal,
    /// Every 5-strong semicomplete digraph is 2-linked.
    Sc5,
    /// Every 5-strong semicomplete split digraph is 2-linked.
    #[serde(rename = "scsplit5")]
    ScSplit5,
    /// Semicomplete split digraph, 3 and 3 internally disjoint paths.
    #[serde(rename = "scsplit-local")]
    ScSplitLocal,
    /// Every 6-strong semicomplete multipartite digraph is 2-linked.
    Smp6,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Split6,
        TheoremId::SplitLocal,
        TheoremId::Sc5,
        TheoremId::ScSplit5,
        TheoremId::ScSplitLocal,
        TheoremId::Smp6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Split6 => "split6",
            TheoremId::SplitLocal => "split-local",
            TheoremId::Sc5 => "sc5",
            TheoremId::ScSplit5 => "scsplit5",
            TheoremId::ScSplitLocal => "scsplit-local",
            TheoremId::Smp6 => "smp6",
        }
    }

    /// Local theorems quantify over terminal quadruples, global ones over
    /// whole digraphs.
    pub fn is_local(self) -> bool {
        matches!(self, TheoremId::SplitLocal | TheoremId::ScSplitLocal)
    }

    fn strongness(self) -> usize {
        match self {
            TheoremId::Split6 | TheoremId::Smp6 => 6,
            TheoremId::Sc5 | TheoremId::ScSplit5 => 5,
            TheoremId::SplitLocal | TheoremId::ScSplitLocal => 0,
        }
    }

    fn family(self) -> Family {
        match self {
            TheoremId::Split6 | TheoremId::SplitLocal => Family::RandomSplit,
            TheoremId::ScSplit5 | TheoremId::ScSplitLocal => Family::RandomScSplit,
            TheoremId::Sc5 => Family::RandomSemicomplete,
            TheoremId::Smp6 => Family::RandomSmp,
        }
    }

    fn local_mode(self) -> Option<Mode> {
        match self {
            TheoremId::SplitLocal => Some(Mode::Split),
            TheoremId::ScSplitLocal => Some(Mode::ScSplit),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TheoremId::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| {
            let names: Vec<_> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
            format!("unknown theorem `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Whether `d` and `q` satisfy the premises of `theorem`. Local premises
/// are tried in both pair orders where the theorem allows it. Invalid
/// queries give `false`.
pub fn check_hypotheses(d: &Digraph, q: &LinkageQuery, theorem: TheoremId) -> bool {
    if q.check(d).is_err() {
        return false;
    }
    match theorem {
        TheoremId::Split6 => split_partition(d).is_some() && is_k_strong(d, 6),
        TheoremId::Sc5 => is_semicomplete(d) && is_k_strong(d, 5),
        TheoremId::ScSplit5 => is_semicomplete_split(d, None).unwrap_or(false) && is_k_strong(d, 5),
        TheoremId::Smp6 => is_semicomplete_multipartite(d).is_some() && is_k_strong(d, 6),
        TheoremId::SplitLocal => {
            split_partition(d).is_some() && matches!(premise_orientation(d, q, Mode::Split), Ok(Some(_)))
        }
        TheoremId::ScSplitLocal => {
            is_semicomplete_split(d, None).unwrap_or(false)
                && matches!(premise_orientation(d, q, Mode::ScSplit), Ok(Some(_)))
        }
    }
}

/// How many quadruples a trial examines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QueryMode {
    All,
    Sampled(usize),
}

impl QueryMode {
    /// All quadruples up to 10 vertices, 200 samples above.
    pub fn default_for(order: usize) -> QueryMode {
        if order <= 10 {
            QueryMode::All
        } else {
            QueryMode::Sampled(200)
        }
    }
}

impl fmt::Display for QueryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryMode::All => f.write_str("all"),
            QueryMode::Sampled(k) => write!(f, "sampled({k})"),
        }
    }
}

impl FromStr for QueryMode {
    type Err = String;

    /// `all`, `sampled(K)` or a bare `K`.
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(QueryMode::All);
        }
        let inner = s.strip_prefix("sampled(").and_then(|r| r.strip_suffix(')')).unwrap_or(s);
        match inner.parse() {
            Ok(k) if k > 0 => Ok(QueryMode::Sampled(k)),
            _ => Err(format!("bad query mode `{s}` (expected all or sampled(K))")),
        }
    }
}

/// Quadruples for one trial, deterministic in `seed`.
pub fn draw_queries(order: usize, mode: QueryMode, seed: u64) -> Vec<LinkageQuery> {
    match mode {
        QueryMode::All => quadruples(order).collect(),
        QueryMode::Sampled(_) if order < 4 => Vec::new(),
        QueryMode::Sampled(k) => {
            let mut rng = SplitMix64::seed_from_u64(seed);
            (0..k)
                .map(|_| {
                    let t = sample(&mut rng, order, 4).into_vec();
                    LinkageQuery::of(t[0], t[1], t[2], t[3])
                })
                .collect()
        }
    }
}

/// Parameters of a verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub theorem: TheoremId,
    pub trials: usize,
    /// Base generator parameters; `seed` is the suite seed and `k_strong`
    /// is overridden by the theorem's requirement.
    pub gen: GenSpec,
    /// Trial `i` adds a seeded offset in `0..=size_jitter` to each of `n1`
    /// and `n2`.
    pub size_jitter: usize,
    /// `None` picks [`QueryMode::default_for`] per instance.
    pub query_mode: Option<QueryMode>,
    pub budget: u64,
    /// Worker threads; 0 uses all cores.
    pub jobs: usize,
}

impl SuiteConfig {
    /// Desk-scale defaults for each theorem.
    pub fn for_theorem(theorem: TheoremId, trials: usize, seed: u64) -> SuiteConfig {
        let (n1, n2, jitter, p_arc, p_bidir, parts) = match theorem {
            TheoremId::Split6 => (3, 7, 2, 0.95, 0.7, 0),
            TheoremId::SplitLocal => (3, 7, 2, 0.8, 0.5, 0),
            TheoremId::Sc5 => (5, 6, 2, 0.5, 0.5, 0),
            TheoremId::ScSplit5 => (3, 8, 2, 0.9, 0.6, 0),
            TheoremId::ScSplitLocal => (3, 6, 2, 0.5, 0.4, 0),
            TheoremId::Smp6 => (6, 6, 2, 0.9, 0.6, 0),
        };
        let mut gen = GenSpec::new(theorem.family(), n1, n2);
        gen.p_arc = p_arc;
        gen.p_bidir = p_bidir;
        gen.parts = parts;
        gen.seed = seed;
        gen.max_attempts = 2000;
        let query_mode = if theorem.is_local() { None } else { Some(QueryMode::Sampled(100)) };
        SuiteConfig { theorem, trials, gen, size_jitter: jitter, query_mode, budget: DEFAULT_BUDGET, jobs: 0 }
    }

    fn trial_spec(&self, trial: usize, attempt: u64) -> GenSpec {
        let seed = derive_seed(derive_seed(self.gen.seed, trial as u64), attempt);
        let mut spec = self.gen.clone();
        let mut rng = SplitMix64::seed_from_u64(seed);
        spec.n1 += rng.gen_range(0..=self.size_jitter);
        spec.n2 += rng.gen_range(0..=self.size_jitter);
        spec.k_strong = self.theorem.strongness();
        spec.seed = rng.gen();
        spec
    }
}

/// A quadruple on which a theorem failed, in the canonical file format with
/// comment lines naming the theorem, seed, trial and query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub trial: usize,
    pub query: LinkageQuery,
    pub artifact: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub seed: u64,
    pub trials: usize,
    pub passes: usize,
    /// Queries answered by a template or shortcut.
    pub template_hits: usize,
    /// Queries answered by the exact solver.
    pub fallback_hits: usize,
    /// Sorted by trial.
    pub refutations: Vec<Refutation>,
    /// Filled by [`write_refutations`].
    pub refutation_paths: Vec<String>,
    /// Left out of [`VerifyReport::to_json`].
    pub wall_time: Duration,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    theorem: &'a str,
    trials: usize,
    passes: usize,
    template_hits: usize,
    fallback_hits: usize,
    refutation_paths: &'a [String],
    seed: u64,
}

impl VerifyReport {
    fn empty(theorem: TheoremId, seed: u64) -> Self {
        VerifyReport {
            theorem,
            seed,
            trials: 0,
            passes: 0,
            template_hits: 0,
            fallback_hits: 0,
            refutations: Vec::new(),
            refutation_paths: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    /// Machine-readable report. Contains no timing, so equal seeds give
    /// equal bytes.
    pub fn to_json(&self) -> String {
        let view = ReportJson {
            theorem: self.theorem.as_str(),
            trials: self.trials,
            passes: self.passes,
            template_hits: self.template_hits,
            fallback_hits: self.fallback_hits,
            refutation_paths: &self.refutation_paths,
            seed: self.seed,
        };
        serde_json::to_string_pretty(&view).expect("report serializes") + "\n"
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem        {}", self.theorem)?;
        writeln!(f, "seed           {}", self.seed)?;
        writeln!(f, "trials         {}", self.trials)?;
        writeln!(f, "passes         {}", self.passes)?;
        writeln!(f, "template hits  {}", self.template_hits)?;
        writeln!(f, "fallback hits  {}", self.fallback_hits)?;
        writeln!(f, "wall time      {:.3}s", self.wall_time.as_secs_f64())?;
        write!(f, "refutations    {}", self.refutations.len())?;
        for p in &self.refutation_paths {
            write!(f, "\n  {p}")?;
        }
        Ok(())
    }
}

/// A run that could not finish every trial. `partial` aggregates the trials
/// that did.
#[derive(Debug, Error)]
#[error("trial {trial}: {source}")]
pub struct VerifyError {
    pub trial: usize,
    pub source: TrialError,
    pub partial: Box<VerifyReport>,
}

#[derive(Debug, Error)]
pub enum TrialError {
    #[error(transparent)]
    Generator(#[from] GenError),
    #[error(transparent)]
    Linkage(#[from] Error),
    #[error("no sampled query satisfies the premises after {0} instances")]
    NoQuery(usize),
}

enum TrialOutcome {
    Pass { template: usize, fallback: usize },
    Refuted(Refutation),
}

fn refutation(theorem: TheoremId, suite_seed: u64, trial: usize, d: &Digraph, q: &LinkageQuery) -> Refutation {
    let comments = [
        format!("refutation of {theorem}"),
        format!("suite seed {suite_seed}, trial {trial}"),
        format!("query {}", q.display(d)),
    ];
    Refutation { trial, query: *q, artifact: serialize_with_comments(d, None, &comments) }
}

const LOCAL_INSTANCES: u64 = 50;
const LOCAL_QUERY_TRIES: usize = 400;

fn run_trial(cfg: &SuiteConfig, trial: usize) -> Result<TrialOutcome, TrialError> {
    let theorem = cfg.theorem;
    if let Some(mode) = theorem.local_mode() {
        for attempt in 0..LOCAL_INSTANCES {
            let spec = cfg.trial_spec(trial, attempt);
            let d = random_instance(&spec)?.digraph;
            let queries = draw_queries(d.order(), QueryMode::Sampled(LOCAL_QUERY_TRIES), spec.seed);
            let Some(q) = queries.into_iter().find(|q| check_hypotheses(&d, q, theorem)) else {
                continue;
            };
            return match link_with_certificate(&d, &q, mode, cfg.budget) {
                Ok(w) if w.provenance.is_template() => Ok(TrialOutcome::Pass { template: 1, fallback: 0 }),
                Ok(_) => Ok(TrialOutcome::Pass { template: 0, fallback: 1 }),
                Err(Error::TheoremRefuted(_)) => {
                    Ok(TrialOutcome::Refuted(refutation(theorem, cfg.gen.seed, trial, &d, &q)))
                }
                Err(e) => Err(e.into()),
            };
        }
        return Err(TrialError::NoQuery(LOCAL_INSTANCES as usize));
    }

    let spec = cfg.trial_spec(trial, 0);
    let d = random_instance(&spec)?.digraph;
    let mode = cfg.query_mode.unwrap_or_else(|| QueryMode::default_for(d.order()));
    let mut fallback = 0;
    for q in draw_queries(d.order(), mode, spec.seed) {
        match two_disjoint_paths(&d, &q, cfg.budget)? {
            LinkageOutcome::Linked(_) => fallback += 1,
            LinkageOutcome::NotLinked => {
                return Ok(TrialOutcome::Refuted(refutation(theorem, cfg.gen.seed, trial, &d, &q)));
            }
            LinkageOutcome::BudgetExceeded => return Err(Error::BudgetExceeded(cfg.budget).into()),
        }
    }
    Ok(TrialOutcome::Pass { template: 0, fallback })
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Run `cfg.trials` independent trials. Global theorems check the sampled
/// quadruples of one instance per trial with the exact solver; local
/// theorems draw an (instance, query) pair satisfying the premises and
/// require a certified witness. Refutations are reported, not raised.
pub fn verify_theorem(cfg: &SuiteConfig) -> Result<VerifyReport, VerifyError> {
    if cfg.gen.family != cfg.theorem.family() {
        let partial = VerifyReport::empty(cfg.theorem, cfg.gen.seed);
        let msg = format!("{} needs family {}, got {}", cfg.theorem, cfg.theorem.family(), cfg.gen.family);
        return Err(VerifyError {
            trial: 0,
            source: TrialError::Linkage(Error::Domain(msg)),
            partial: Box::new(partial),
        });
    }
    let start = Instant::now();
    let outcomes: Vec<(usize, Result<TrialOutcome, TrialError>)> =
        in_pool(cfg.jobs, || (0..cfg.trials).into_par_iter().map(|i| (i, run_trial(cfg, i))).collect());
    let mut report = VerifyReport::empty(cfg.theorem, cfg.gen.seed);
    let mut first_error = None;
    for (i, outcome) in outcomes {
        match outcome {
            Ok(TrialOutcome::Pass { template, fallback }) => {
                report.trials += 1;
                report.passes += 1;
                report.template_hits += template;
                report.fallback_hits += fallback;
            }
            Ok(TrialOutcome::Refuted(r)) => {
                report.trials += 1;
                report.refutations.push(r);
            }
            Err(e) => {
                first_error.get_or_insert((i, e));
            }
        }
    }
    report.wall_time = start.elapsed();
    match first_error {
        None => Ok(report),
        Some((trial, source)) => Err(VerifyError { trial, source, partial: Box::new(report) }),
    }
}

/// Write each refutation artifact into `dir` and record the paths.
pub fn write_refutations(report: &mut VerifyReport, dir: &FsPath) -> std::io::Result<()> {
    if report.refutations.is_empty() {
        return Ok(());
    }
    std::fs::create_dir_all(dir)?;
    report.refutation_paths.clear();
    for r in &report.refutations {
        let path: PathBuf = dir.join(format!("refutation-{}-seed{}-trial{}.txt", report.theorem, report.seed, r.trial));
        std::fs::write(&path, &r.artifact)?;
        report.refutation_paths.push(path.display().to_string());
    }
    Ok(())
}

/// One checked fact about the 13-vertex counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pin {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl Pin {
    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinReport {
    pub pins: Vec<Pin>,
}

impl PinReport {
    pub fn all_hold(&self) -> bool {
        self.pins.iter().all(Pin::holds)
    }
}

impl fmt::Display for PinReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pins {
            let mark = if p.holds() { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}: expected {}, got {}", p.name, p.expected, p.actual)?;
        }
        Ok(())
    }
}

/// The path families `P_i = s1 x_i y_i z_i t1` and
/// `Q_i = s2 z_i y_{i+1} x_{i+2} t2`, indices mod 3.
pub fn fig1_path_families(d: &Digraph) -> crate::error::Result<(Vec<Path>, Vec<Path>)> {
    let name = |s: String| d.vertex_by_name(&s).ok_or(Error::domain(format!("no vertex {s}")));
    let idx = |i: usize| (i - 1) % 3 + 1;
    let mut ps = Vec::new();
    let mut qs = Vec::new();
    for i in 1..=3 {
        let p = ["s1".into(), format!("x{i}"), format!("y{i}"), format!("z{i}"), "t1".into()];
        let q = ["s2".into(), format!("z{i}"), format!("y{}", idx(i + 1)), format!("x{}", idx(i + 2)), "t2".into()];
        ps.push(Path::new(d, p.into_iter().map(name).collect::<crate::error::Result<Vec<VertexId>>>()?)?);
        qs.push(Path::new(d, q.into_iter().map(name).collect::<crate::error::Result<Vec<VertexId>>>()?)?);
    }
    Ok((ps, qs))
}

/// Re-derive every pinned fact about the counterexample.
pub fn verify_paper_pins() -> PinReport {
    let (d, partition, q) = fig1_counterexample();
    let mut pins = Vec::new();
    let mut pin = |name: String, expected: String, actual: String| pins.push(Pin { name, expected, actual });
    let show = |r: crate::error::Result<bool>| match r {
        Ok(b) => b.to_string(),
        Err(e) => format!("error: {e}"),
    };
    let k = |a, b, del: &[VertexId]| match local_connectivity_without(&d, a, b, del) {
        Ok(k) => k.to_string(),
        Err(e) => format!("error: {e}"),
    };
    pin("order".into(), "13".into(), d.order().to_string());
    pin("arc count".into(), "51".into(), d.arc_count().to_string());
    pin("kappa(s1,t1) in D-{s2,t2}".into(), "3".into(), k(q.s1, q.t1, &[q.s2, q.t2]));
    pin("kappa(s2,t2) in D-{s1,t1}".into(), "3".into(), k(q.s2, q.t2, &[q.s1, q.t1]));
    pin("split partition V1 = X u Z".into(), "true".into(), show(validate_partition(&d, &partition)));

    let by = |s: String| d.vertex_by_name(&s).expect("fig1 labels");
    let idx = |i: usize| (i - 1) % 3 + 1;
    let (without_s2t2, reindex) = d.delete_vertices(&[q.s2, q.t2]).expect("terminals exist");
    let local = |x: VertexId| reindex.child(x).expect("kept vertex");
    for i in 1..=3 {
        for (kind, second, third) in [
            ("z_i y_i+1 x_i+2", format!("y{}", idx(i + 1)), format!("x{}", idx(i + 2))),
            ("z_i y_i+1 y_i+2", format!("y{}", idx(i + 1)), format!("y{}", idx(i + 2))),
        ] {
            let names = [format!("z{i}"), second, third];
            let sep: Vec<VertexId> = names.iter().map(|n| local(by(n.clone()))).collect();
            let actual = show(is_separator(&without_s2t2, &sep, local(q.s1), local(q.t1)));
            pin(format!("separator {{{}}} ({kind}, i = {i})", names.join(",")), "true".into(), actual);
        }
    }
    pin("good tuple (s1,t1,s2,t2)".into(), "false".into(), show(is_good_tuple(&d, &q)));
    for (name, query) in [("as given", q), ("pairs exchanged", q.swapped())] {
        let actual = check_hypotheses(&d, &query, TheoremId::SplitLocal).to_string();
        pin(format!("split-local premises hold ({name})"), "false".into(), actual);
    }
    match fig1_path_families(&d) {
        Ok((ps, qs)) => {
            let sys = |source, sink, paths| PathSystem { source, sink, paths };
            let p_ok = sys(q.s1, q.t1, ps).validate(&d).map(|_| true);
            let q_ok = sys(q.s2, q.t2, qs).validate(&d).map(|_| true);
            pin("P_i family internally disjoint".into(), "true".into(), show(p_ok));
            pin("Q_i family internally disjoint".into(), "true".into(), show(q_ok));
        }
        Err(e) => pin("P_i and Q_i path families".into(), "valid".into(), format!("error: {e}")),
    }
    PinReport { pins }
}

/// Searches whose outcome is not predicted by any theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exploration {
    /// 5-strong split digraphs, looking for a quadruple that is not good.
    Split5,
    /// Semicomplete split digraphs with 3 and 2 internally disjoint paths.
    ScSplitWeak,
}

impl Exploration {
    pub fn as_str(self) -> &'static str {
        match self {
            Exploration::Split5 => "split5",
            Exploration::ScSplitWeak => "scsplit-weak",
        }
    }
}

impl FromStr for Exploration {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "split5" => Ok(Exploration::Split5),
            "scsplit-weak" => Ok(Exploration::ScSplitWeak),
            _ => Err(format!("unknown exploration `{s}` (expected split5 or scsplit-weak)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExploreReport {
    pub mode: Exploration,
    pub seed: u64,
    pub instances: usize,
    pub queries: usize,
    pub linked: usize,
    pub template_hits: usize,
    pub budget_exhausted: usize,
    /// Instances skipped because the generator gave up.
    pub generator_failures: usize,
    /// Non-good quadruples found, as annotated digraph files.
    pub found: Vec<String>,
}

impl fmt::Display for ExploreReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode              {}", self.mode.as_str())?;
        writeln!(f, "seed              {}", self.seed)?;
        writeln!(f, "instances         {}", self.instances)?;
        writeln!(f, "queries           {}", self.queries)?;
        writeln!(f, "linked            {}", self.linked)?;
        writeln!(f, "template hits     {}", self.template_hits)?;
        writeln!(f, "budget exhausted  {}", self.budget_exhausted)?;
        writeln!(f, "generator gave up {}", self.generator_failures)?;
        write!(f, "not linked        {}", self.found.len())
    }
}

/// Run an exploration over `instances` seeded digraphs with `queries`
/// sampled quadruples each. Nothing is asserted about the outcome.
pub fn explore(mode: Exploration, instances: usize, queries: usize, seed: u64, jobs: usize) -> ExploreReport {
    let per_instance = |i: usize| -> ExploreReport {
        let mut r = ExploreReport {
            mode,
            seed,
            instances: 0,
            queries: 0,
            linked: 0,
            template_hits: 0,
            budget_exhausted: 0,
            generator_failures: 0,
            found: Vec::new(),
        };
        let trial_seed = derive_seed(seed, i as u64);
        let mut spec = match mode {
            Exploration::Split5 => {
                let mut s = GenSpec::new(Family::RandomSplit, 3, 7);
                s.p_arc = 0.9;
                s.p_bidir = 0.6;
                s.k_strong = 5;
                s
            }
            Exploration::ScSplitWeak => {
                let mut s = GenSpec::new(Family::RandomScSplit, 3, 6);
                s.p_bidir = 0.3;
                s
            }
        };
        spec.seed = trial_seed;
        spec.max_attempts = 2000;
        let Ok(inst) = random_instance(&spec) else {
            r.generator_failures = 1;
            return r;
        };
        let d = inst.digraph;
        r.instances = 1;
        for q in draw_queries(d.order(), QueryMode::Sampled(queries), trial_seed) {
            let comment = |what: &str| {
                let c = [
                    format!("{} {what}", mode.as_str()),
                    format!("seed {seed}, instance {i}"),
                    format!("query {}", q.display(&d)),
                ];
                serialize_with_comments(&d, None, &c)
            };
            match mode {
                Exploration::Split5 => {
                    r.queries += 1;
                    match two_disjoint_paths(&d, &q, DEFAULT_BUDGET) {
                        Ok(LinkageOutcome::Linked(_)) => r.linked += 1,
                        Ok(LinkageOutcome::NotLinked) => r.found.push(comment("non-good quadruple")),
                        Ok(LinkageOutcome::BudgetExceeded) | Err(_) => r.budget_exhausted += 1,
                    }
                }
                Exploration::ScSplitWeak => {
                    if !matches!(premise_orientation(&d, &q, Mode::ScSplitWeak), Ok(Some(_))) {
                        continue;
                    }
                    r.queries += 1;
                    match link_with_certificate(&d, &q, Mode::ScSplitWeak, DEFAULT_BUDGET) {
                        Ok(w) => {
                            r.linked += 1;
                            r.template_hits += usize::from(w.provenance.is_template());
                        }
                        Err(Error::Domain(_)) => r.found.push(comment("premises hold, no linkage")),
                        Err(_) => r.budget_exhausted += 1,
                    }
                }
            }
        }
        r
    };
    let parts: Vec<ExploreReport> = in_pool(jobs, || (0..instances).into_par_iter().map(per_instance).collect());
    let mut total = ExploreReport {
        mode,
        seed,
        instances: 0,
        queries: 0,
        linked: 0,
        template_hits: 0,
        budget_exhausted: 0,
        generator_failures: 0,
        found: Vec::new(),
    };
    for p in parts {
        total.instances += p.instances;
        total.queries += p.queries;
        total.linked += p.linked;
        total.template_hits += p.template_hits;
        total.budget_exhausted += p.budget_exhausted;
        total.generator_failures += p.generator_failures;
        total.found.extend(p.found);
    }
    total
}
