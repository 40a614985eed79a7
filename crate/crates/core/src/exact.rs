//! Exact clique number and chromatic number.
//!
//! Maximum clique: branch and bound over bitset candidate sets, vertices
//! renumbered by non-increasing degree, with a greedy coloring of the
//! candidates as the upper bound at every node.
//!
//! Coloring: backtracking in saturation-degree order with a maximum clique
//! pre-colored, new colors opened only in index order, and forward checking
//! on neighbors whose saturation reaches `k`.
//!
//! Running out of budget is reported as a distinct outcome, never folded
//! into a bound.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::coloring::Coloring;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("vertex order is not a permutation of the vertex set")]
    InvalidOrder,
    #[error("solve budget exhausted")]
    BudgetExhausted,
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
}

/// Limits for a single solve call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl SolveBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Result<Self, SolveError> {
        if node_limit == 0 || time_limit.is_zero() {
            return Err(SolveError::InvalidBudget("limits must be positive".into()));
        }
        Ok(SolveBudget { node_limit, time_limit })
    }
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            node_limit: 10_000_000,
            time_limit: Duration::from_secs(60),
        }
    }
}

/// Search-node and wall-clock accounting shared by one solve call.
#[derive(Debug)]
pub struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Instant,
    exhausted: bool,
}

impl Meter {
    pub fn new(budget: &SolveBudget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit,
            deadline: Instant::now() + budget.time_limit,
            exhausted: false,
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limit || (self.nodes & 1023 == 0 && Instant::now() > self.deadline) {
            self.exhausted = true;
        }
        !self.exhausted
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueWitness {
    pub members: Vec<usize>,
}

impl CliqueWitness {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueOutcome {
    Exact(CliqueWitness),
    Incomplete { best: CliqueWitness, upper: usize },
}

impl CliqueOutcome {
    pub fn exact(self) -> Result<CliqueWitness, SolveError> {
        match self {
            CliqueOutcome::Exact(w) => Ok(w),
            CliqueOutcome::Incomplete { .. } => Err(SolveError::BudgetExhausted),
        }
    }

    pub fn best(&self) -> &CliqueWitness {
        match self {
            CliqueOutcome::Exact(w) | CliqueOutcome::Incomplete { best: w, .. } => w,
        }
    }
}

/// Maximum clique of `g`; members are returned sorted.
pub fn clique_number(g: &Graph, budget: &SolveBudget) -> Result<CliqueOutcome, SolveError> {
    if g.order() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let mut meter = Meter::new(budget);
    Ok(max_clique_metered(g, &g.vertex_set(), &mut meter))
}

/// Maximum clique of `G[within]` (empty for an empty set), metered.
pub fn max_clique_metered(g: &Graph, within: &VertexSet, meter: &mut Meter) -> CliqueOutcome {
    let (sub, map) = g.induced(within);
    let n = sub.order();
    if n == 0 {
        return CliqueOutcome::Exact(CliqueWitness { members: vec![] });
    }
    // renumber by non-increasing degree, ties by id
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&v| (std::cmp::Reverse(sub.degree(v)), v));
    let mut rank = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        rank[v] = i;
    }
    let rows: Vec<VertexSet> = perm
        .iter()
        .map(|&v| VertexSet::from_ids(n, sub.neighbors(v).iter().map(|w| rank[w])))
        .collect();

    let mut search = CliqueSearch {
        rows: &rows,
        best: vec![0],
        current: Vec::new(),
    };
    let upper = greedy_class_count(&rows, &VertexSet::full(n));
    let complete = search.expand(VertexSet::full(n), meter);
    let mut members: Vec<usize> = search.best.iter().map(|&i| map[perm[i]]).collect();
    members.sort_unstable();
    let w = CliqueWitness { members };
    if complete {
        CliqueOutcome::Exact(w)
    } else {
        CliqueOutcome::Incomplete { best: w, upper }
    }
}

fn greedy_class_count(rows: &[VertexSet], set: &VertexSet) -> usize {
    let mut left = set.clone();
    let mut classes = 0;
    while !left.is_empty() {
        classes += 1;
        let mut q = left.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(&rows[v]);
            left.remove(v);
        }
    }
    classes
}

struct CliqueSearch<'a> {
    rows: &'a [VertexSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// Returns `false` if the meter ran out.
    fn expand(&mut self, mut cand: VertexSet, meter: &mut Meter) -> bool {
        if !meter.tick() {
            return false;
        }
        // greedy color classes; only vertices whose class index could still
        // beat the incumbent are branched on
        let need = (self.best.len() + 1).saturating_sub(self.current.len());
        let mut order = Vec::new();
        let mut bound = Vec::new();
        let mut left = cand.clone();
        let mut class = 0;
        while !left.is_empty() {
            class += 1;
            let mut q = left.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.rows[v]);
                left.remove(v);
                if class >= need {
                    order.push(v);
                    bound.push(class);
                }
            }
        }
        for i in (0..order.len()).rev() {
            if self.current.len() + bound[i] <= self.best.len() {
                return true;
            }
            let v = order[i];
            self.current.push(v);
            let next = cand.intersection(&self.rows[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else if !self.expand(next, meter) {
                self.current.pop();
                return false;
            }
            self.current.pop();
            cand.remove(v);
        }
        true
    }
}

/// First-fit coloring in the given vertex order.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring, SolveError> {
    let n = g.order();
    if order.len() != n {
        return Err(SolveError::InvalidOrder);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(SolveError::InvalidOrder);
        }
    }
    let mut colors = vec![usize::MAX; n];
    for &v in order {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
        colors[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    Ok(Coloring::new(colors))
}

/// Saturation-degree greedy coloring (no backtracking), ties by degree then
/// lowest id.
pub fn dsatur_coloring(g: &Graph) -> Coloring {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..)
            .find(|&c| !neighbor_colors[v].get(c).copied().unwrap_or(false))
            .unwrap();
        colors[v] = c;
        for w in g.neighbors(v) {
            let nc = &mut neighbor_colors[w];
            if nc.len() <= c {
                nc.resize(c + 1, false);
            }
            if !nc[c] {
                nc[c] = true;
                sat[w] += 1;
            }
        }
    }
    Coloring::new(colors)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KColorability {
    Colorable(Coloring),
    NotColorable,
    Unknown,
}

pub fn k_colorable(g: &Graph, k: usize, budget: &SolveBudget) -> KColorability {
    let mut meter = Meter::new(budget);
    let clique = match max_clique_metered(g, &g.vertex_set(), &mut meter) {
        CliqueOutcome::Exact(w) => w,
        CliqueOutcome::Incomplete { best, .. } => best,
    };
    k_colorable_metered(g, k, &clique.members, &mut meter)
}

/// Decides `k`-colorability with `clique` pre-colored `0..|clique|`.
pub fn k_colorable_metered(g: &Graph, k: usize, clique: &[usize], meter: &mut Meter) -> KColorability {
    let n = g.order();
    if n == 0 {
        return KColorability::Colorable(Coloring::new(vec![]));
    }
    if k == 0 || clique.len() > k {
        return KColorability::NotColorable;
    }
    let mut st = ColorSearch::new(g, k);
    for (c, &v) in clique.iter().enumerate() {
        st.assign(v, c);
    }
    st.opened = clique.len();
    let mut remaining = n - clique.len();
    match st.search(&mut remaining, meter) {
        Some(true) => KColorability::Colorable(Coloring::new(st.colors)),
        Some(false) => KColorability::NotColorable,
        None => KColorability::Unknown,
    }
}

const NONE: usize = usize::MAX;

struct ColorSearch {
    adj: Vec<Vec<usize>>,
    k: usize,
    colors: Vec<usize>,
    counts: Vec<u32>,
    sat: Vec<usize>,
    free_deg: Vec<usize>,
    opened: usize,
}

impl ColorSearch {
    fn new(g: &Graph, k: usize) -> Self {
        let n = g.order();
        let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
        let free_deg = adj.iter().map(Vec::len).collect();
        ColorSearch {
            adj,
            k,
            colors: vec![NONE; n],
            counts: vec![0; n * k],
            sat: vec![0; n],
            free_deg,
            opened: 0,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &w in &self.adj[v] {
            let slot = &mut self.counts[w * self.k + c];
            if *slot == 0 {
                self.sat[w] += 1;
            }
            *slot += 1;
            self.free_deg[w] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = NONE;
        for &w in &self.adj[v] {
            let slot = &mut self.counts[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
            self.free_deg[w] += 1;
        }
    }

    fn pick(&self) -> usize {
        let mut best = NONE;
        for v in 0..self.colors.len() {
            if self.colors[v] != NONE {
                continue;
            }
            if best == NONE || (self.sat[v], self.free_deg[v]) > (self.sat[best], self.free_deg[best]) {
                best = v;
            }
        }
        best
    }

    fn wiped_out(&self, v: usize) -> bool {
        self.adj[v]
            .iter()
            .any(|&w| self.colors[w] == NONE && self.sat[w] >= self.k)
    }

    /// `Some(true)` on success, `Some(false)` if infeasible, `None` on budget.
    fn search(&mut self, remaining: &mut usize, meter: &mut Meter) -> Option<bool> {
        if *remaining == 0 {
            return Some(true);
        }
        if !meter.tick() {
            return None;
        }
        let v = self.pick();
        let limit = (self.opened + 1).min(self.k);
        for c in 0..limit {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            let opened_before = self.opened;
            if c == self.opened {
                self.opened += 1;
            }
            self.assign(v, c);
            if !self.wiped_out(v) {
                *remaining -= 1;
                let r = self.search(remaining, meter);
                *remaining += 1;
                match r {
                    Some(true) => return Some(true),
                    None => {
                        self.unassign(v);
                        self.opened = opened_before;
                        return None;
                    }
                    Some(false) => {}
                }
            }
            self.unassign(v);
            self.opened = opened_before;
        }
        Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChromaticOutcome {
    Exact {
        chi: usize,
        coloring: Coloring,
    },
    /// Budget ran out: `lower <= chi <= upper`, `best` attains `upper`.
    Bounds {
        lower: usize,
        upper: usize,
        best: Coloring,
    },
}

impl ChromaticOutcome {
    pub fn exact(self) -> Result<(usize, Coloring), SolveError> {
        match self {
            ChromaticOutcome::Exact { chi, coloring } => Ok((chi, coloring)),
            ChromaticOutcome::Bounds { .. } => Err(SolveError::BudgetExhausted),
        }
    }
}

/// Exact chromatic number, ascending from the clique number.
pub fn chromatic_number(g: &Graph, budget: &SolveBudget) -> Result<ChromaticOutcome, SolveError> {
    if g.order() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let mut meter = Meter::new(budget);
    Ok(chromatic_metered(g, &mut meter))
}

pub fn chromatic_metered(g: &Graph, meter: &mut Meter) -> ChromaticOutcome {
    if g.order() == 0 {
        return ChromaticOutcome::Exact {
            chi: 0,
            coloring: Coloring::new(vec![]),
        };
    }
    let clique = max_clique_metered(g, &g.vertex_set(), meter);
    let members = clique.best().members.clone();
    let upper_coloring = dsatur_coloring(g);
    let upper = upper_coloring.palette();
    let mut lower = members.len().max(1);
    if let CliqueOutcome::Incomplete { .. } = clique {
        return ChromaticOutcome::Bounds {
            lower,
            upper,
            best: upper_coloring,
        };
    }
    while lower < upper {
        match k_colorable_metered(g, lower, &members, meter) {
            KColorability::Colorable(c) => {
                return ChromaticOutcome::Exact {
                    chi: lower,
                    coloring: c,
                };
            }
            KColorability::NotColorable => lower += 1,
            KColorability::Unknown => {
                return ChromaticOutcome::Bounds {
                    lower,
                    upper,
                    best: upper_coloring,
                };
            }
        }
    }
    ChromaticOutcome::Exact {
        chi: upper,
        coloring: upper_coloring,
    }
}

/// Exact chromatic number of `G[within]`, colors indexed by position in the
/// ascending member list.
pub fn chromatic_within(g: &Graph, within: &VertexSet, meter: &mut Meter) -> Result<(usize, Coloring), SolveError> {
    let (sub, _) = g.induced(within);
    chromatic_metered(&sub, meter).exact()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{named_graph, Named};
    use crate::coloring::verify_coloring;
    use crate::graph::{make_basic, BasicKind};

    fn budget() -> SolveBudget {
        SolveBudget::default()
    }

    fn chi(g: &Graph) -> usize {
        chromatic_number(g, &budget()).unwrap().exact().unwrap().0
    }

    #[test]
    fn clique_examples() {
        let w = |g: &Graph| clique_number(g, &budget()).unwrap().exact().unwrap().size();
        assert_eq!(w(&named_graph(Named::Grotzsch)), 2);
        assert_eq!(w(&make_basic(BasicKind::Complete(5)).unwrap()), 5);
        assert_eq!(w(&named_graph(Named::SchlafliComplement)), 3);
        assert_eq!(clique_number(&Graph::empty(0), &budget()), Err(SolveError::EmptyGraph));
    }

    #[test]
    fn k_colorable_examples() {
        let k4 = make_basic(BasicKind::Complete(4)).unwrap();
        assert_eq!(k_colorable(&k4, 3, &budget()), KColorability::NotColorable);
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        match k_colorable(&c5, 3, &budget()) {
            KColorability::Colorable(c) => assert!(verify_coloring(&c5, &c).unwrap().is_proper()),
            other => panic!("{other:?}"),
        }
        let g = named_graph(Named::Grotzsch);
        assert_eq!(k_colorable(&g, 3, &budget()), KColorability::NotColorable);
        assert!(matches!(k_colorable(&g, 4, &budget()), KColorability::Colorable(_)));
        assert!(matches!(
            k_colorable(&Graph::empty(0), 0, &budget()),
            KColorability::Colorable(_)
        ));
        assert_eq!(k_colorable(&Graph::empty(1), 0, &budget()), KColorability::NotColorable);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chi(&make_basic(BasicKind::Cycle(5)).unwrap()), 3);
        assert_eq!(chi(&named_graph(Named::Grotzsch)), 4);
        assert_eq!(chi(&Graph::empty(3)), 1);
    }

    #[test]
    fn tiny_budget_is_unknown_not_a_bound() {
        let g = named_graph(Named::Grotzsch);
        let b = SolveBudget::new(3, Duration::from_secs(5)).unwrap();
        match chromatic_number(&g, &b).unwrap() {
            ChromaticOutcome::Bounds { lower, upper, best } => {
                assert!(lower <= 4 && upper >= 4);
                assert_eq!(best.palette(), upper);
            }
            ChromaticOutcome::Exact { .. } => panic!("3 nodes cannot settle the Grotzsch graph"),
        }
        assert_eq!(k_colorable(&g, 3, &b), KColorability::Unknown);
        assert!(SolveBudget::new(0, Duration::from_secs(1)).is_err());
    }

    #[test]
    fn greedy_examples() {
        let k5 = make_basic(BasicKind::Complete(5)).unwrap();
        assert_eq!(greedy_coloring(&k5, &[4, 2, 0, 1, 3]).unwrap().palette(), 5);
        assert_eq!(greedy_coloring(&Graph::empty(4), &[0, 1, 2, 3]).unwrap().palette(), 1);
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        // first-fit along the cycle: 0,1,0,1 then vertex 4 sees 0 and 1
        let c = greedy_coloring(&c5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.colors(), &[0, 1, 0, 1, 2]);
        assert_eq!(greedy_coloring(&c5, &[0, 1, 2, 3]), Err(SolveError::InvalidOrder));
        assert_eq!(greedy_coloring(&c5, &[0, 1, 2, 3, 3]), Err(SolveError::InvalidOrder));
    }
}
