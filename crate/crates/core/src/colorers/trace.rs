//! Audit records emitted by the constructive colorers.
//!
//! Every structural fact a decomposition relies on is stored as a [`Check`]
//! over concrete vertex sets (ids of the top-level input graph) together with
//! the verdict observed at run time. A trace can be written as one line per
//! step, parsed back, and replayed against the input graph.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::catalog::Named;
use crate::exact::{
    k_colorable_metered, max_clique_metered, CliqueOutcome, KColorability, Meter, SolveBudget, SolveError,
};
use crate::graph::Graph;
use crate::patterns::find_induced_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepVerdict {
    Holds,
    /// The assertion sits on a step whose published argument is terse or
    /// index-inconsistent; it did not hold here and the colorer compensated.
    SoftGap,
    Violated,
}

impl StepVerdict {
    pub fn label(self) -> &'static str {
        match self {
            StepVerdict::Holds => "holds",
            StepVerdict::SoftGap => "soft-gap",
            StepVerdict::Violated => "violated",
        }
    }
}

impl FromStr for StepVerdict {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "holds" => Ok(StepVerdict::Holds),
            "soft-gap" => Ok(StepVerdict::SoftGap),
            "violated" => Ok(StepVerdict::Violated),
            _ => Err(format!("unknown verdict `{s}`")),
        }
    }
}

/// A machine-checkable property of vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Independent {
        set: Vec<usize>,
    },
    Clique {
        set: Vec<usize>,
    },
    Empty {
        set: Vec<usize>,
    },
    /// Every vertex of `a` is adjacent to every other vertex of `b`.
    CompleteTo {
        a: Vec<usize>,
        b: Vec<usize>,
    },
    AnticompleteTo {
        a: Vec<usize>,
        b: Vec<usize>,
    },
    /// Every vertex of `a` has a neighbor in `b`.
    HasNeighborIn {
        a: Vec<usize>,
        b: Vec<usize>,
    },
    /// `N(u) ∖ {v} = N(v) ∖ {u}` inside `G[within]`.
    SameNeighborhood {
        within: Vec<usize>,
        u: usize,
        v: usize,
    },
    /// `u ≁ v` and `N(u) ⊆ N(v)` inside `G[within]`.
    Dominated {
        within: Vec<usize>,
        u: usize,
        v: usize,
    },
    /// `G[set]` is a disjoint union of cliques, each of size at most `max`
    /// (`max = 0` means unbounded).
    Cluster {
        set: Vec<usize>,
        max: usize,
    },
    CliqueAtMost {
        set: Vec<usize>,
        bound: usize,
    },
    ChromaticAtMost {
        set: Vec<usize>,
        bound: usize,
    },
    PatternFree {
        set: Vec<usize>,
        pattern: Named,
    },
    /// `set` is exactly the vertices of `within ∖ anchors` whose neighbors
    /// among `anchors` are precisely `adjacent`.
    Cell {
        within: Vec<usize>,
        anchors: Vec<usize>,
        adjacent: Vec<usize>,
        set: Vec<usize>,
    },
    /// `parts` are pairwise disjoint and their union is `whole`.
    Partition {
        whole: Vec<usize>,
        parts: Vec<Vec<usize>>,
    },
    PaletteAtMost {
        palette: usize,
        bound: usize,
    },
}

impl Check {
    pub fn kind(&self) -> &'static str {
        match self {
            Check::Independent { .. } => "independent",
            Check::Clique { .. } => "clique",
            Check::Empty { .. } => "empty",
            Check::CompleteTo { .. } => "complete-to",
            Check::AnticompleteTo { .. } => "anticomplete-to",
            Check::HasNeighborIn { .. } => "has-neighbor-in",
            Check::SameNeighborhood { .. } => "same-neighborhood",
            Check::Dominated { .. } => "dominated",
            Check::Cluster { .. } => "cluster",
            Check::CliqueAtMost { .. } => "clique-at-most",
            Check::ChromaticAtMost { .. } => "chromatic-at-most",
            Check::PatternFree { .. } => "pattern-free",
            Check::Cell { .. } => "cell",
            Check::Partition { .. } => "partition",
            Check::PaletteAtMost { .. } => "palette-at-most",
        }
    }

    /// Rewrites every vertex id through `f` and re-sorts the sets.
    pub fn map_ids(&self, f: impl Fn(usize) -> usize) -> Check {
        let m = |s: &Vec<usize>| {
            let mut out: Vec<usize> = s.iter().map(|&v| f(v)).collect();
            out.sort_unstable();
            out
        };
        match self {
            Check::Independent { set } => Check::Independent { set: m(set) },
            Check::Clique { set } => Check::Clique { set: m(set) },
            Check::Empty { set } => Check::Empty { set: m(set) },
            Check::CompleteTo { a, b } => Check::CompleteTo { a: m(a), b: m(b) },
            Check::AnticompleteTo { a, b } => Check::AnticompleteTo { a: m(a), b: m(b) },
            Check::HasNeighborIn { a, b } => Check::HasNeighborIn { a: m(a), b: m(b) },
            Check::SameNeighborhood { within, u, v } => Check::SameNeighborhood {
                within: m(within),
                u: f(*u),
                v: f(*v),
            },
            Check::Dominated { within, u, v } => Check::Dominated {
                within: m(within),
                u: f(*u),
                v: f(*v),
            },
            Check::Cluster { set, max } => Check::Cluster { set: m(set), max: *max },
            Check::CliqueAtMost { set, bound } => Check::CliqueAtMost {
                set: m(set),
                bound: *bound,
            },
            Check::ChromaticAtMost { set, bound } => Check::ChromaticAtMost {
                set: m(set),
                bound: *bound,
            },
            Check::PatternFree { set, pattern } => Check::PatternFree {
                set: m(set),
                pattern: *pattern,
            },
            Check::Cell {
                within,
                anchors,
                adjacent,
                set,
            } => Check::Cell {
                within: m(within),
                anchors: m(anchors),
                adjacent: m(adjacent),
                set: m(set),
            },
            Check::Partition { whole, parts } => Check::Partition {
                whole: m(whole),
                parts: parts.iter().map(m).collect(),
            },
            Check::PaletteAtMost { palette, bound } => Check::PaletteAtMost {
                palette: *palette,
                bound: *bound,
            },
        }
    }

    /// Evaluates the property on `g` (ids in `g`'s numbering).
    pub fn evaluate(&self, g: &Graph, budget: &SolveBudget) -> Result<bool, SolveError> {
        let set = |s: &[usize]| g.set_of(s.iter().copied());
        let ok = match self {
            Check::Independent { set: s } => g.is_independent(&set(s)),
            Check::Clique { set: s } => g.is_clique(&set(s)),
            Check::Empty { set: s } => s.is_empty(),
            Check::CompleteTo { a, b } => g.is_complete_to(&set(a), &set(b)),
            Check::AnticompleteTo { a, b } => g.is_anticomplete_to(&set(a), &set(b)),
            Check::HasNeighborIn { a, b } => {
                let b = set(b);
                a.iter().all(|&v| !g.neighbors(v).is_disjoint(&b))
            }
            Check::SameNeighborhood { within, u, v } => {
                let w = set(within);
                let mut nu = g.neighbors(*u).intersection(&w);
                let mut nv = g.neighbors(*v).intersection(&w);
                nu.remove(*v);
                nv.remove(*u);
                nu == nv
            }
            Check::Dominated { within, u, v } => {
                let w = set(within);
                u != v && !g.has_edge(*u, *v) && g.neighbors(*u).intersection(&w).is_subset(g.neighbors(*v))
            }
            Check::Cluster { set: s, max } => {
                let comps = g.components_within(&set(s));
                comps.iter().all(|c| g.is_clique(c) && (*max == 0 || c.len() <= *max))
            }
            Check::CliqueAtMost { set: s, bound } => {
                let mut meter = Meter::new(budget);
                match max_clique_metered(g, &set(s), &mut meter) {
                    CliqueOutcome::Exact(w) => w.size() <= *bound,
                    CliqueOutcome::Incomplete { .. } => return Err(SolveError::BudgetExhausted),
                }
            }
            Check::ChromaticAtMost { set: s, .. } if s.is_empty() => true,
            Check::ChromaticAtMost { bound: 0, .. } => false,
            Check::ChromaticAtMost { set: s, bound } => {
                let (sub, _) = g.induced(&set(s));
                let mut meter = Meter::new(budget);
                let clique = max_clique_metered(&sub, &sub.vertex_set(), &mut meter).exact()?.members;
                match k_colorable_metered(&sub, *bound, &clique, &mut meter) {
                    KColorability::Colorable(_) => true,
                    KColorability::NotColorable => false,
                    KColorability::Unknown => return Err(SolveError::BudgetExhausted),
                }
            }
            Check::PatternFree { set: s, pattern } => {
                let (sub, _) = g.induced(&set(s));
                find_induced_graph(&sub, &pattern.graph()).is_none()
            }
            Check::Cell {
                within,
                anchors,
                adjacent,
                set: s,
            } => {
                let anchors = set(anchors);
                let adjacent = set(adjacent);
                let mut expect = set(within);
                expect.difference_with(&anchors);
                let members: Vec<usize> = expect
                    .iter()
                    .filter(|&x| g.neighbors(x).intersection(&anchors) == adjacent)
                    .collect();
                members == *s
            }
            Check::Partition { whole, parts } => {
                let mut seen = g.empty_set();
                let mut disjoint = true;
                for p in parts {
                    let ps = set(p);
                    disjoint &= ps.is_disjoint(&seen) && ps.len() == p.len();
                    seen.union_with(&ps);
                }
                disjoint && seen == set(whole)
            }
            Check::PaletteAtMost { palette, bound } => palette <= bound,
        };
        Ok(ok)
    }

    fn write_args(&self, out: &mut String) {
        let s = |out: &mut String, key: &str, v: &[usize]| {
            let _ = write!(out, " {key}={}", fmt_ids(v));
        };
        match self {
            Check::Independent { set } | Check::Clique { set } | Check::Empty { set } => s(out, "set", set),
            Check::CompleteTo { a, b } | Check::AnticompleteTo { a, b } | Check::HasNeighborIn { a, b } => {
                s(out, "a", a);
                s(out, "b", b);
            }
            Check::SameNeighborhood { within, u, v } | Check::Dominated { within, u, v } => {
                s(out, "within", within);
                let _ = write!(out, " u={u} v={v}");
            }
            Check::Cluster { set, max } => {
                s(out, "set", set);
                let _ = write!(out, " max={max}");
            }
            Check::CliqueAtMost { set, bound } | Check::ChromaticAtMost { set, bound } => {
                s(out, "set", set);
                let _ = write!(out, " bound={bound}");
            }
            Check::PatternFree { set, pattern } => {
                s(out, "set", set);
                let _ = write!(out, " pattern={pattern}");
            }
            Check::Cell {
                within,
                anchors,
                adjacent,
                set,
            } => {
                s(out, "within", within);
                s(out, "anchors", anchors);
                s(out, "adjacent", adjacent);
                s(out, "set", set);
            }
            Check::Partition { whole, parts } => {
                s(out, "whole", whole);
                for (i, p) in parts.iter().enumerate() {
                    s(out, &format!("part{i}"), p);
                }
            }
            Check::PaletteAtMost { palette, bound } => {
                let _ = write!(out, " palette={palette} bound={bound}");
            }
        }
    }

    fn parse(kind: &str, fields: &[(String, String)]) -> Result<Check, String> {
        let get = |k: &str| -> Result<&str, String> {
            fields
                .iter()
                .find(|(key, _)| key == k)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| format!("missing field `{k}` for check `{kind}`"))
        };
        let ids = |k: &str| get(k).and_then(parse_ids);
        let num = |k: &str| get(k).and_then(|v| v.parse::<usize>().map_err(|_| format!("bad number in `{k}`")));
        Ok(match kind {
            "independent" => Check::Independent { set: ids("set")? },
            "clique" => Check::Clique { set: ids("set")? },
            "empty" => Check::Empty { set: ids("set")? },
            "complete-to" => Check::CompleteTo {
                a: ids("a")?,
                b: ids("b")?,
            },
            "anticomplete-to" => Check::AnticompleteTo {
                a: ids("a")?,
                b: ids("b")?,
            },
            "has-neighbor-in" => Check::HasNeighborIn {
                a: ids("a")?,
                b: ids("b")?,
            },
            "same-neighborhood" => Check::SameNeighborhood {
                within: ids("within")?,
                u: num("u")?,
                v: num("v")?,
            },
            "dominated" => Check::Dominated {
                within: ids("within")?,
                u: num("u")?,
                v: num("v")?,
            },
            "cluster" => Check::Cluster {
                set: ids("set")?,
                max: num("max")?,
            },
            "clique-at-most" => Check::CliqueAtMost {
                set: ids("set")?,
                bound: num("bound")?,
            },
            "chromatic-at-most" => Check::ChromaticAtMost {
                set: ids("set")?,
                bound: num("bound")?,
            },
            "pattern-free" => Check::PatternFree {
                set: ids("set")?,
                pattern: get("pattern")?.parse().map_err(|e| format!("{e}"))?,
            },
            "cell" => Check::Cell {
                within: ids("within")?,
                anchors: ids("anchors")?,
                adjacent: ids("adjacent")?,
                set: ids("set")?,
            },
            "partition" => {
                let mut parts = Vec::new();
                while let Ok(p) = ids(&format!("part{}", parts.len())) {
                    parts.push(p);
                }
                Check::Partition {
                    whole: ids("whole")?,
                    parts,
                }
            }
            "palette-at-most" => Check::PaletteAtMost {
                palette: num("palette")?,
                bound: num("bound")?,
            },
            other => return Err(format!("unknown check `{other}`")),
        })
    }
}

fn fmt_ids(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn parse_ids(s: &str) -> Result<Vec<usize>, String> {
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| format!("expected `[..]`, got `{s}`"))?;
    if inner.is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|t| t.parse().map_err(|_| format!("bad id `{t}`")))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    /// `<colorer>.<branch>.<property>`
    pub tag: String,
    /// Recursion depth of the decomposition that produced the step.
    pub depth: usize,
    pub check: Check,
    pub verdict: StepVerdict,
    /// Named integers relevant to the step (clique sizes, pivots, ...).
    pub values: Vec<(String, usize)>,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = format!(
            "depth={} tag={} verdict={} check={}",
            self.depth,
            self.tag,
            self.verdict.label(),
            self.check.kind()
        );
        self.check.write_args(&mut s);
        for (k, v) in &self.values {
            let _ = write!(s, " val.{k}={v}");
        }
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProofTrace {
    pub steps: Vec<Step>,
}

impl ProofTrace {
    pub fn count(&self, verdict: StepVerdict) -> usize {
        self.steps.iter().filter(|s| s.verdict == verdict).count()
    }

    pub fn soft_gaps(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(|s| s.verdict == StepVerdict::SoftGap)
    }

    /// One line per step.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.steps.iter().enumerate() {
            let _ = writeln!(out, "step={i} {s}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<ProofTrace, String> {
        let mut steps = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<(String, String)> = line
                .split_whitespace()
                .map(|tok| {
                    tok.split_once('=')
                        .map(|(k, v)| (k.to_string(), v.to_string()))
                        .ok_or_else(|| format!("line {}: token `{tok}` is not key=value", lineno + 1))
                })
                .collect::<Result<_, _>>()?;
            let get = |k: &str| {
                fields
                    .iter()
                    .find(|(key, _)| key == k)
                    .map(|(_, v)| v.clone())
                    .ok_or_else(|| format!("line {}: missing `{k}`", lineno + 1))
            };
            let check = Check::parse(&get("check")?, &fields).map_err(|e| format!("line {}: {e}", lineno + 1))?;
            let values = fields
                .iter()
                .filter_map(|(k, v)| {
                    k.strip_prefix("val.").map(|name| {
                        v.parse::<usize>()
                            .map(|n| (name.to_string(), n))
                            .map_err(|_| format!("line {}: bad value `{v}`", lineno + 1))
                    })
                })
                .collect::<Result<_, _>>()?;
            steps.push(Step {
                tag: get("tag")?,
                depth: get("depth")?.parse().map_err(|_| "bad depth".to_string())?,
                check,
                verdict: get("verdict")?.parse()?,
                values,
            });
        }
        Ok(ProofTrace { steps })
    }

    /// Re-evaluates every check against `g`. Returns the indices of steps
    /// whose recorded verdict disagrees with the replayed result (a recorded
    /// `holds` must re-validate; `soft-gap` and `violated` must not).
    pub fn replay(&self, g: &Graph, budget: &SolveBudget) -> Result<Vec<usize>, SolveError> {
        let mut mismatched = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            let ok = s.check.evaluate(g, budget)?;
            if ok != (s.verdict == StepVerdict::Holds) {
                mismatched.push(i);
            }
        }
        Ok(mismatched)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    #[test]
    fn text_round_trip() {
        let trace = ProofTrace {
            steps: vec![
                Step {
                    tag: "demo.cells".into(),
                    depth: 0,
                    check: Check::Partition {
                        whole: vec![0, 1, 2],
                        parts: vec![vec![0], vec![], vec![1, 2]],
                    },
                    verdict: StepVerdict::Holds,
                    values: vec![("omega".into(), 3)],
                },
                Step {
                    tag: "demo.free".into(),
                    depth: 2,
                    check: Check::PatternFree {
                        set: vec![1, 2, 3],
                        pattern: Named::K1UnionK3,
                    },
                    verdict: StepVerdict::SoftGap,
                    values: vec![],
                },
            ],
        };
        let text = trace.to_text();
        assert!(text.starts_with("step=0 depth=0 tag=demo.cells verdict=holds check=partition"));
        assert_eq!(ProofTrace::parse(&text).unwrap(), trace);
    }

    #[test]
    fn replay_detects_wrong_verdicts() {
        let g = named_graph(Named::Grotzsch);
        let budget = SolveBudget::default();
        let good = Step {
            tag: "t".into(),
            depth: 0,
            check: Check::ChromaticAtMost {
                set: (0..11).collect(),
                bound: 4,
            },
            verdict: StepVerdict::Holds,
            values: vec![],
        };
        let mut bad = good.clone();
        bad.check = Check::ChromaticAtMost {
            set: (0..11).collect(),
            bound: 3,
        };
        let trace = ProofTrace { steps: vec![good, bad] };
        assert_eq!(trace.replay(&g, &budget).unwrap(), vec![1]);
    }

    #[test]
    fn evaluate_basic_checks() {
        let g = named_graph(Named::Kite);
        let b = SolveBudget::default();
        assert!(Check::Dominated {
            within: (0..5).collect(),
            u: 0,
            v: 3
        }
        .evaluate(&g, &b)
        .unwrap());
        assert!(!Check::Dominated {
            within: (0..5).collect(),
            u: 3,
            v: 0
        }
        .evaluate(&g, &b)
        .unwrap());
        assert!(Check::CompleteTo {
            a: vec![1, 2],
            b: vec![0, 1, 2, 3]
        }
        .evaluate(&g, &b)
        .unwrap());
        assert!(Check::Cluster {
            set: vec![0, 1, 2, 4],
            max: 3
        }
        .evaluate(&g, &b)
        .unwrap());
        assert!(!Check::Cluster {
            set: vec![0, 1, 2, 4],
            max: 2
        }
        .evaluate(&g, &b)
        .unwrap());
        assert!(Check::HasNeighborIn { a: vec![4], b: vec![3] }
            .evaluate(&g, &b)
            .unwrap());
        assert!(!Check::PatternFree {
            set: (0..5).collect(),
            pattern: Named::Diamond
        }
        .evaluate(&g, &b)
        .unwrap());
    }
}
