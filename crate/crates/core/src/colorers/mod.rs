//! Constructive colorers whose palettes are bounded by a function of `ω`.
//!
//! Each colorer follows a decomposition of the input into blocks that are
//! colored with disjoint palettes (recursively, as cliques, as cluster graphs
//! or by an exact solve at small leaves). Every structural fact the palette
//! count relies on is recorded in a [`ProofTrace`] and checked on the
//! concrete instance while the colorer runs.

mod binding;
mod c5;
mod hammer;
mod k4;
mod kite;
mod trace;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::coloring::{verify_coloring, Coloring};
use crate::exact::{chromatic_metered, max_clique_metered, ChromaticOutcome, CliqueOutcome, Meter, SolveBudget};
use crate::graph::Graph;
use crate::patterns::{is_member, ClassName, Embedding, Membership};

pub use binding::{bound_formula, evaluate_bound, BindingError};
pub use c5::color_c5_free;
pub use hammer::{color_hammer_free, color_p2k3_free};
pub use k4::color_k4_free;
pub use kite::{color_k1k3_free, color_kite_free};
pub use trace::{Check, ProofTrace, Step, StepVerdict};

#[derive(Debug, Error, Clone)]
pub enum ColorError {
    #[error("graph is not in class {class}: induced {pattern} at {embedding}")]
    NotMember {
        class: ClassName,
        pattern: String,
        embedding: Embedding,
    },
    #[error("audit step `{tag}` violated")]
    Violated { tag: String, trace: Box<ProofTrace> },
    #[error("exact solve budget exhausted at `{tag}`")]
    Budget { tag: String },
    #[error("graph is not a cluster graph: induced path {0:?}")]
    NotCluster([usize; 3]),
    #[error("no constructive colorer for class {0}")]
    Unsupported(ClassName),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy)]
pub struct ColorOptions {
    /// Budget for each exact solve performed by the colorer or its audits.
    pub budget: SolveBudget,
    /// Reject inputs outside the class before coloring.
    pub check_membership: bool,
}

impl Default for ColorOptions {
    fn default() -> Self {
        ColorOptions {
            budget: SolveBudget::default(),
            check_membership: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ColorOutcome {
    pub coloring: Coloring,
    pub trace: ProofTrace,
    pub omega: usize,
    /// `f(ω)` for the class, 0 for the empty graph.
    pub bound: usize,
}

/// Runs the colorer registered for `class`.
pub fn color_by_class(class: ClassName, g: &Graph, opts: &ColorOptions) -> Result<ColorOutcome, ColorError> {
    match class {
        ClassName::KiteFree => color_kite_free(g, opts),
        ClassName::K1K3Free => color_k1k3_free(g, opts),
        ClassName::HammerFree => color_hammer_free(g, opts),
        ClassName::P2K3Free => color_p2k3_free(g, opts),
        ClassName::C5Free => color_c5_free(g, opts),
        ClassName::K4Free => color_k4_free(g, opts),
        ClassName::TriangleFree => drive(class, g, opts, triangle_free_frame),
        ClassName::P3P2 => Err(ColorError::Unsupported(class)),
    }
}

/// Colors every component of a cluster graph with `0..|component|`.
pub fn cluster_color(g: &Graph) -> Result<Coloring, ColorError> {
    let (members, colors) = cluster_coloring_of(g, &g.vertex_set())?;
    let mut out = vec![0; g.order()];
    for (v, c) in members.into_iter().zip(colors) {
        out[v] = c;
    }
    Ok(Coloring::new(out))
}

/// Result of deleting one dominated vertex.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: Graph,
    /// The deleted vertex `u`.
    pub removed: usize,
    /// The nonadjacent vertex `v` with `N(u) ⊆ N(v)` whose color `u` reuses.
    pub donor: usize,
    /// `kept[i]` is the original id of vertex `i` of `graph`.
    pub kept: Vec<usize>,
}

impl Reduction {
    /// Extends a coloring of the reduced graph to the original one.
    pub fn lift(&self, c: &Coloring) -> Coloring {
        let mut out = vec![0; self.kept.len() + 1];
        for (i, &v) in self.kept.iter().enumerate() {
            out[v] = c.color(i);
        }
        let donor_local = self.kept.binary_search(&self.donor).expect("donor is kept");
        out[self.removed] = c.color(donor_local);
        Coloring::new(out)
    }
}

/// Finds the first nonadjacent pair `(u, v)` in lexicographic order with
/// `N(u) ⊆ N(v)` and deletes `u`.
pub fn domination_reduce(g: &Graph) -> Option<Reduction> {
    let n = g.order();
    for u in 0..n {
        for v in 0..n {
            if u != v && !g.has_edge(u, v) && g.neighbors(u).is_subset(g.neighbors(v)) {
                let mut keep = g.vertex_set();
                keep.remove(u);
                let (graph, kept) = g.induced(&keep);
                return Some(Reduction {
                    graph,
                    removed: u,
                    donor: v,
                    kept,
                });
            }
        }
    }
    None
}

pub(crate) type Body = fn(&mut Run, &Frame) -> Result<Coloring, ColorError>;

/// One node of the decomposition: a graph plus the map from its vertex ids
/// to the ids of the top-level input.
pub(crate) struct Frame<'a> {
    pub g: &'a Graph,
    pub ids: &'a [usize],
    pub depth: usize,
}

impl Frame<'_> {
    pub fn global(&self, v: usize) -> usize {
        self.ids[v]
    }
}

pub(crate) struct Run {
    pub trace: ProofTrace,
    pub budget: SolveBudget,
}

impl Run {
    fn push(
        &mut self,
        f: &Frame,
        tag: &str,
        check: Check,
        ok: bool,
        soft: bool,
        values: &[(&str, usize)],
    ) -> Result<bool, ColorError> {
        let verdict = match (ok, soft) {
            (true, _) => StepVerdict::Holds,
            (false, true) => StepVerdict::SoftGap,
            (false, false) => StepVerdict::Violated,
        };
        self.trace.steps.push(Step {
            tag: tag.to_string(),
            depth: f.depth,
            check: check.map_ids(|v| f.ids[v]),
            verdict,
            values: values.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        });
        if verdict == StepVerdict::Violated {
            return Err(ColorError::Violated {
                tag: tag.to_string(),
                trace: Box::new(self.trace.clone()),
            });
        }
        Ok(ok)
    }

    fn evaluate(&self, f: &Frame, tag: &str, check: &Check) -> Result<bool, ColorError> {
        check
            .evaluate(f.g, &self.budget)
            .map_err(|_| ColorError::Budget { tag: tag.to_string() })
    }

    /// Records a property the decomposition needs; failure aborts the run.
    pub fn assert(&mut self, f: &Frame, tag: &str, check: Check, values: &[(&str, usize)]) -> Result<(), ColorError> {
        let ok = self.evaluate(f, tag, &check)?;
        self.push(f, tag, check, ok, false, values).map(|_| ())
    }

    /// Records a property whose failure is tolerated as a soft gap; the
    /// caller must compensate. Returns whether it held.
    pub fn soft(&mut self, f: &Frame, tag: &str, check: Check, values: &[(&str, usize)]) -> Result<bool, ColorError> {
        let ok = self.evaluate(f, tag, &check)?;
        self.push(f, tag, check, ok, true, values)
    }

    /// Records a property already decided by the caller (used where the
    /// evaluation would repeat an exact solve just performed).
    pub fn assert_known(
        &mut self,
        f: &Frame,
        tag: &str,
        check: Check,
        ok: bool,
        values: &[(&str, usize)],
    ) -> Result<(), ColorError> {
        self.push(f, tag, check, ok, false, values).map(|_| ())
    }

    pub fn soft_known(
        &mut self,
        f: &Frame,
        tag: &str,
        check: Check,
        ok: bool,
        values: &[(&str, usize)],
    ) -> Result<bool, ColorError> {
        self.push(f, tag, check, ok, true, values)
    }

    /// Exact coloring of `G[set]`; members ascending with their colors.
    pub fn exact_within(
        &mut self,
        f: &Frame,
        set: &VertexSet,
        tag: &str,
    ) -> Result<(Vec<usize>, Coloring), ColorError> {
        let (sub, map) = f.g.induced(set);
        if sub.order() == 0 {
            return Ok((map, Coloring::new(vec![])));
        }
        let mut meter = Meter::new(&self.budget);
        match chromatic_metered(&sub, &mut meter) {
            ChromaticOutcome::Exact { coloring, .. } => Ok((map, coloring)),
            ChromaticOutcome::Bounds { .. } => Err(ColorError::Budget { tag: tag.to_string() }),
        }
    }

    /// A maximum clique of `G[within]`, ascending.
    pub fn max_clique(&mut self, f: &Frame, within: &VertexSet, tag: &str) -> Result<Vec<usize>, ColorError> {
        let mut meter = Meter::new(&self.budget);
        match max_clique_metered(f.g, within, &mut meter) {
            CliqueOutcome::Exact(w) => {
                let mut m = w.members;
                m.sort_unstable();
                Ok(m)
            }
            CliqueOutcome::Incomplete { .. } => Err(ColorError::Budget { tag: tag.to_string() }),
        }
    }

    /// Exact coloring of the whole frame, asserting `χ ≤ bound`.
    pub fn leaf(&mut self, f: &Frame, tag: &str, bound: usize) -> Result<Coloring, ColorError> {
        let mut meter = Meter::new(&self.budget);
        match chromatic_metered(f.g, &mut meter) {
            ChromaticOutcome::Exact { chi, coloring } => {
                let all = (0..f.g.order()).collect();
                self.assert_known(
                    f,
                    tag,
                    Check::ChromaticAtMost { set: all, bound },
                    chi <= bound,
                    &[("chi", chi)],
                )?;
                Ok(coloring)
            }
            ChromaticOutcome::Bounds { .. } => Err(ColorError::Budget { tag: tag.to_string() }),
        }
    }

    /// Colors `G[set]` with `body` in a child frame. Returns the members of
    /// `set` in ascending order and their colors.
    pub fn recurse(&mut self, f: &Frame, set: &VertexSet, body: Body) -> Result<(Vec<usize>, Coloring), ColorError> {
        let (sub, map) = f.g.induced(set);
        let ids: Vec<usize> = map.iter().map(|&v| f.ids[v]).collect();
        let child = Frame {
            g: &sub,
            ids: &ids,
            depth: f.depth + 1,
        };
        let c = if sub.order() == 0 {
            Coloring::new(vec![])
        } else {
            body(self, &child)?
        };
        Ok((map, c))
    }
}

/// Disjoint-palette assembly of block colorings.
pub(crate) struct Assembly {
    colors: Vec<Option<usize>>,
    next: usize,
}

impl Assembly {
    pub fn new(n: usize) -> Self {
        Assembly {
            colors: vec![None; n],
            next: 0,
        }
    }

    /// Colors `members` with `colors` shifted past every color used so far.
    /// Returns the offset.
    pub fn fresh(&mut self, members: &[usize], colors: &[usize]) -> usize {
        let offset = self.next;
        self.place(offset, members, colors);
        offset
    }

    pub fn place(&mut self, offset: usize, members: &[usize], colors: &[usize]) {
        for (&v, &c) in members.iter().zip(colors) {
            self.set(v, offset + c);
        }
    }

    pub fn set(&mut self, v: usize, color: usize) {
        debug_assert!(self.colors[v].is_none(), "vertex {v} colored twice");
        self.colors[v] = Some(color);
        self.next = self.next.max(color + 1);
    }

    /// Next unused color.
    pub fn next(&self) -> usize {
        self.next
    }

    pub fn finish(self, g: &Graph) -> Result<Coloring, ColorError> {
        let colors = self
            .colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| ColorError::Internal(format!("vertex {v} left uncolored"))))
            .collect::<Result<Vec<_>, _>>()?;
        let c = Coloring::new(colors).compacted();
        match verify_coloring(g, &c) {
            Ok(v) if v.is_proper() => Ok(c),
            other => Err(ColorError::Internal(format!(
                "assembled coloring is not proper: {other:?}"
            ))),
        }
    }
}

/// Colors of `G[set]` as a cluster graph: members ascending, each clique
/// component colored `0..|component|`.
pub(crate) fn cluster_coloring_of(g: &Graph, set: &VertexSet) -> Result<(Vec<usize>, Vec<usize>), ColorError> {
    if let Some(p) = g.induced_p3_within(set) {
        return Err(ColorError::NotCluster(p));
    }
    let mut color = vec![0; g.order()];
    for comp in g.components_within(set) {
        for (i, v) in comp.iter().enumerate() {
            color[v] = i;
        }
    }
    let members = set.to_vec();
    let colors = members.iter().map(|&v| color[v]).collect();
    Ok((members, colors))
}

/// Colors for a clique: `0..|set|`.
pub(crate) fn clique_colors(set: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let members = set.to_vec();
    let colors = (0..members.len()).collect();
    (members, colors)
}

/// Handles graphs on at most two vertices and edgeless graphs directly.
pub(crate) fn trivial(g: &Graph) -> Option<Coloring> {
    if g.is_edgeless() {
        return Some(Coloring::new(vec![0; g.order()]));
    }
    if g.order() <= 2 {
        return Some(Coloring::new((0..g.order()).collect()));
    }
    None
}

fn triangle_free_frame(run: &mut Run, f: &Frame) -> Result<Coloring, ColorError> {
    if let Some(c) = trivial(f.g) {
        return Ok(c);
    }
    run.leaf(f, "trianglefree.leaf.exact", 4)
}

/// Membership check, frame setup and the final palette assertion shared by
/// every colorer.
pub(crate) fn drive(class: ClassName, g: &Graph, opts: &ColorOptions, body: Body) -> Result<ColorOutcome, ColorError> {
    if opts.check_membership {
        if let Membership::Violation { pattern, embedding } = is_member(g, &class.spec()) {
            return Err(ColorError::NotMember {
                class,
                pattern,
                embedding,
            });
        }
    }
    let mut run = Run {
        trace: ProofTrace::default(),
        budget: opts.budget,
    };
    if g.order() == 0 {
        return Ok(ColorOutcome {
            coloring: Coloring::new(vec![]),
            trace: run.trace,
            omega: 0,
            bound: 0,
        });
    }
    let ids: Vec<usize> = (0..g.order()).collect();
    let frame = Frame { g, ids: &ids, depth: 0 };
    let coloring = body(&mut run, &frame)?.compacted();
    let omega = run.max_clique(&frame, &g.vertex_set(), "final.omega")?.len();
    let bound = evaluate_bound(class, omega).map_err(|e| ColorError::Internal(e.to_string()))?;
    if !verify_coloring(g, &coloring).map(|v| v.is_proper()).unwrap_or(false) {
        return Err(ColorError::Internal("colorer returned an improper coloring".into()));
    }
    let tag = format!("{}.final.palette", class.label());
    run.assert(
        &frame,
        &tag,
        Check::PaletteAtMost {
            palette: coloring.palette(),
            bound,
        },
        &[("omega", omega)],
    )?;
    Ok(ColorOutcome {
        coloring,
        trace: run.trace,
        omega,
        bound,
    })
}
