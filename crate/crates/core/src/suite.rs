//! Property suite: sample class members, color them with the class colorer,
//! cross-check against exact `ω` and `χ`, and report one record per
//! instance.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::colorers::{color_by_class, ColorError, ColorOptions, StepVerdict};
use crate::coloring::verify_coloring;
use crate::exact::{chromatic_number, ChromaticOutcome, SolveBudget};
use crate::generators::{sample_class, SampleConfig, SampleMethod, SplitMix64};
use crate::io::to_graph6;
use crate::patterns::ClassName;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub class: ClassName,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub budget: SolveBudget,
    /// Sampler edge probability; `None` uses the sampler default.
    pub p: Option<f64>,
    pub method: SampleMethod,
}

impl SuiteConfig {
    pub fn new(class: ClassName, n: usize, count: usize, seed: u64) -> Self {
        SuiteConfig {
            class,
            n,
            count,
            seed,
            budget: SolveBudget::default(),
            p: None,
            method: SampleMethod::Growth,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiValue {
    Exact(usize),
    Bounds { lower: usize, upper: usize },
}

impl std::fmt::Display for ChiValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChiValue::Exact(c) => write!(f, "{c}"),
            ChiValue::Bounds { lower, upper } => write!(f, "{lower}..{upper}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecordVerdict {
    /// Proper, within bound, exact `χ` within bound, audit clean.
    Pass,
    /// As `Pass`, but some audit step recorded a soft gap.
    SoftGap,
    Fail,
    /// Sampling or an exact solve did not finish.
    Unknown,
}

impl RecordVerdict {
    pub fn label(self) -> &'static str {
        match self {
            RecordVerdict::Pass => "pass",
            RecordVerdict::SoftGap => "soft-gap",
            RecordVerdict::Fail => "fail",
            RecordVerdict::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone)]
pub struct InstanceRecord {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub omega: Option<usize>,
    pub chi: Option<ChiValue>,
    pub palette: Option<usize>,
    pub bound: Option<usize>,
    pub verdict: RecordVerdict,
    /// Short reason for `Fail` or `Unknown`.
    pub note: Option<String>,
    pub steps: usize,
    pub soft_gaps: usize,
    pub violated: usize,
    pub runtime: Duration,
    pub graph6: Option<String>,
}

impl InstanceRecord {
    /// `key=value` fields; `runtime_us` only when `timing` is set.
    pub fn to_line(&self, timing: bool) -> String {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        let mut s = format!(
            "index={} seed={} n={} m={} omega={} chi={} palette={} bound={} verdict={} steps={} soft_gaps={} violated={}",
            self.index,
            self.seed,
            self.n,
            self.m,
            opt(self.omega),
            self.chi.map_or("-".to_string(), |c| c.to_string()),
            opt(self.palette),
            opt(self.bound),
            self.verdict.label(),
            self.steps,
            self.soft_gaps,
            self.violated,
        );
        if let Some(note) = &self.note {
            let _ = write!(s, " note={}", note.replace(char::is_whitespace, "_"));
        }
        if timing {
            let _ = write!(s, " runtime_us={}", self.runtime.as_micros());
        }
        if let Some(g6) = &self.graph6 {
            let _ = write!(s, " graph6={g6}");
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub class: ClassName,
    pub n: usize,
    pub seed: u64,
    pub records: Vec<InstanceRecord>,
}

impl SuiteReport {
    pub fn count(&self, verdict: RecordVerdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }

    /// No failures and no unknowns.
    pub fn all_passed(&self) -> bool {
        self.count(RecordVerdict::Fail) == 0 && self.count(RecordVerdict::Unknown) == 0
    }

    pub fn summary_line(&self) -> String {
        format!(
            "class={} n={} count={} seed={} pass={} soft_gap={} fail={} unknown={}",
            self.class,
            self.n,
            self.records.len(),
            self.seed,
            self.count(RecordVerdict::Pass),
            self.count(RecordVerdict::SoftGap),
            self.count(RecordVerdict::Fail),
            self.count(RecordVerdict::Unknown),
        )
    }

    /// Header comment, one record per line.
    pub fn to_text(&self, timing: bool) -> String {
        let mut out = format!("# {}\n", self.summary_line());
        for r in &self.records {
            out.push_str(&r.to_line(timing));
            out.push('\n');
        }
        out
    }

    /// Fixed-width table of the bound-versus-`χ` comparison.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:>5} {:>3} {:>4} {:>3} {:>7} {:>7} {:>5}  {}\n",
            "index", "n", "m", "w", "chi", "palette", "f(w)", "verdict"
        );
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        for r in &self.records {
            let _ = writeln!(
                out,
                "{:>5} {:>3} {:>4} {:>3} {:>7} {:>7} {:>5}  {}",
                r.index,
                r.n,
                r.m,
                opt(r.omega),
                r.chi.map_or("-".to_string(), |c| c.to_string()),
                opt(r.palette),
                opt(r.bound),
                r.verdict.label()
            );
        }
        let _ = writeln!(out, "{}", self.summary_line());
        out
    }
}

/// Per-instance seeds: consecutive outputs of `SplitMix64::new(seed)`.
pub fn instance_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = SplitMix64::new(seed);
    (0..count).map(|_| rng.next_u64()).collect()
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let records = instance_seeds(cfg.seed, cfg.count)
        .into_iter()
        .enumerate()
        .map(|(index, seed)| run_instance(cfg, index, seed))
        .collect();
    SuiteReport {
        class: cfg.class,
        n: cfg.n,
        seed: cfg.seed,
        records,
    }
}

fn run_instance(cfg: &SuiteConfig, index: usize, seed: u64) -> InstanceRecord {
    let start = Instant::now();
    let mut rec = InstanceRecord {
        index,
        seed,
        n: cfg.n,
        m: 0,
        omega: None,
        chi: None,
        palette: None,
        bound: None,
        verdict: RecordVerdict::Unknown,
        note: None,
        steps: 0,
        soft_gaps: 0,
        violated: 0,
        runtime: Duration::ZERO,
        graph6: None,
    };
    let sample_cfg = SampleConfig {
        p: cfg.p,
        method: cfg.method,
        ..SampleConfig::new(cfg.class, cfg.n, seed)
    };
    let g = match sample_class(&sample_cfg) {
        Ok(s) => s.graph,
        Err(e) => {
            rec.note = Some(format!("sampler: {e}"));
            rec.runtime = start.elapsed();
            return rec;
        }
    };
    rec.m = g.size();
    rec.graph6 = Some(to_graph6(&g));

    let opts = ColorOptions {
        budget: cfg.budget,
        check_membership: true,
    };
    let outcome = color_by_class(cfg.class, &g, &opts);
    let chi = if g.order() == 0 {
        Some(ChiValue::Exact(0))
    } else {
        match chromatic_number(&g, &cfg.budget) {
            Ok(ChromaticOutcome::Exact { chi, .. }) => Some(ChiValue::Exact(chi)),
            Ok(ChromaticOutcome::Bounds { lower, upper, .. }) => Some(ChiValue::Bounds { lower, upper }),
            Err(_) => None,
        }
    };
    rec.chi = chi;
    match outcome {
        Ok(out) => {
            rec.omega = Some(out.omega);
            rec.palette = Some(out.coloring.palette());
            rec.bound = Some(out.bound);
            rec.steps = out.trace.steps.len();
            rec.soft_gaps = out.trace.count(StepVerdict::SoftGap);
            rec.violated = out.trace.count(StepVerdict::Violated);
            let proper = verify_coloring(&g, &out.coloring)
                .map(|v| v.is_proper())
                .unwrap_or(false);
            let within = out.coloring.palette() <= out.bound;
            rec.verdict = match chi {
                _ if !proper => fail(&mut rec, "improper coloring"),
                _ if !within => fail(&mut rec, "palette exceeds bound"),
                _ if rec.violated > 0 => fail(&mut rec, "violated audit step"),
                Some(ChiValue::Exact(c)) if c > out.bound => fail(&mut rec, "chi exceeds bound"),
                Some(ChiValue::Exact(c)) if c > out.coloring.palette() || c < out.omega => {
                    fail(&mut rec, "chi outside omega..palette")
                }
                Some(ChiValue::Exact(_)) if rec.soft_gaps > 0 => RecordVerdict::SoftGap,
                Some(ChiValue::Exact(_)) => RecordVerdict::Pass,
                _ => {
                    rec.note = Some("exact chi unknown".into());
                    RecordVerdict::Unknown
                }
            };
        }
        Err(ColorError::Budget { tag }) => {
            rec.note = Some(format!("budget at {tag}"));
        }
        Err(ColorError::Violated { tag, trace }) => {
            rec.violated = trace.count(StepVerdict::Violated);
            rec.steps = trace.steps.len();
            rec.verdict = fail(&mut rec, &format!("violated {tag}"));
        }
        Err(e) => {
            rec.verdict = fail(&mut rec, &e.to_string());
        }
    }
    rec.runtime = start.elapsed();
    rec
}

fn fail(rec: &mut InstanceRecord, why: &str) -> RecordVerdict {
    rec.note = Some(why.to_string());
    RecordVerdict::Fail
}
