use thiserror::Error;

use super::{sample_class, SampleConfig, SplitMix64};
use crate::exact::{chromatic_number, clique_number, dsatur_coloring, ChromaticOutcome, SolveBudget, SolveError};
use crate::graph::Graph;
use crate::patterns::{is_member, ClassName, Membership};

#[derive(Debug, Clone)]
pub struct HuntConfig {
    pub class: ClassName,
    /// Order of the sampled start graph; ignored when `start` is given.
    pub n: usize,
    /// Candidate toggles to try.
    pub evaluations: usize,
    pub seed: u64,
    pub start: Option<Graph>,
    /// Budget per exact solve.
    pub budget: SolveBudget,
}

impl HuntConfig {
    pub fn new(class: ClassName, n: usize, evaluations: usize, seed: u64) -> Self {
        HuntConfig {
            class,
            n,
            evaluations,
            seed,
            start: None,
            budget: SolveBudget::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HuntResult {
    pub graph: Graph,
    pub chi: usize,
    pub omega: usize,
    pub evaluations: usize,
    pub accepted: usize,
    pub exact_solves: usize,
    pub seed: u64,
    /// `χ > 6` for a `K4`-free graph would answer the open question in the
    /// negative.
    pub noteworthy: bool,
}

#[derive(Debug, Error, Clone)]
pub enum HuntError {
    #[error("start graph is not in class {class}: induced {pattern}")]
    NotMember { class: ClassName, pattern: String },
    #[error("exact solve of the start graph did not finish: {0}")]
    Solve(#[from] SolveError),
}

fn exact_chi(g: &Graph, budget: &SolveBudget) -> Result<usize, SolveError> {
    if g.order() == 0 {
        return Ok(0);
    }
    match chromatic_number(g, budget)? {
        ChromaticOutcome::Exact { chi, .. } => Ok(chi),
        ChromaticOutcome::Bounds { .. } => Err(SolveError::BudgetExhausted),
    }
}

fn exact_omega(g: &Graph, budget: &SolveBudget) -> Result<usize, SolveError> {
    if g.order() == 0 {
        return Ok(0);
    }
    Ok(clique_number(g, budget)?.exact()?.size())
}

/// Hill-climbs over in-class graphs by single-edge toggles.
///
/// A toggle is kept when the graph stays in class and `χ` does not drop.
/// The exact solver runs only when the clique lower bound and the DSATUR
/// upper bound disagree and the upper bound does not already rule the move
/// out. The best graph is the one with the largest `χ`, fewest edges on ties.
pub fn hunt(cfg: &HuntConfig) -> Result<HuntResult, HuntError> {
    let spec = cfg.class.spec();
    let start = match &cfg.start {
        Some(g) => g.clone(),
        None => sample_class(&SampleConfig::new(cfg.class, cfg.n, cfg.seed))
            .map(|s| s.graph)
            .unwrap_or_else(|_| Graph::empty(cfg.n)),
    };
    if let Membership::Violation { pattern, .. } = is_member(&start, &spec) {
        return Err(HuntError::NotMember {
            class: cfg.class,
            pattern,
        });
    }
    let mut current = start;
    let mut chi = exact_chi(&current, &cfg.budget)?;
    let mut best = (current.clone(), chi);
    let mut accepted = 0;
    let mut exact_solves = 1;
    let n = current.order();
    let mut rng = SplitMix64::new(cfg.seed ^ 0x5DEE_CE66_D1CE_4E5B);

    for _ in 0..cfg.evaluations {
        if n < 2 {
            break;
        }
        let u = rng.below(n);
        let mut v = rng.below(n - 1);
        if v >= u {
            v += 1;
        }
        current.toggle_edge(u, v);
        if !is_member(&current, &spec).is_member() {
            current.toggle_edge(u, v);
            continue;
        }
        let upper = dsatur_coloring(&current).palette();
        if upper < chi {
            current.toggle_edge(u, v);
            continue;
        }
        let lower = clique_number(&current, &cfg.budget)?.best().size();
        let next = if lower == upper {
            Some(upper)
        } else {
            exact_solves += 1;
            exact_chi(&current, &cfg.budget).ok()
        };
        match next {
            Some(c) if c >= chi => {
                chi = c;
                accepted += 1;
                if c > best.1 || (c == best.1 && current.size() < best.0.size()) {
                    best = (current.clone(), c);
                }
            }
            _ => current.toggle_edge(u, v),
        }
    }

    let (graph, _) = best;
    debug_assert!(is_member(&graph, &spec).is_member());
    let chi = exact_chi(&graph, &cfg.budget)?;
    let omega = exact_omega(&graph, &cfg.budget)?;
    Ok(HuntResult {
        noteworthy: cfg.class == ClassName::K4Free && chi > 6,
        graph,
        chi,
        omega,
        evaluations: cfg.evaluations,
        accepted,
        exact_solves,
        seed: cfg.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{named_graph, Named};

    #[test]
    fn hunt_from_schlafli_complement_keeps_six() {
        let mut cfg = HuntConfig::new(ClassName::K4Free, 27, 40, 5);
        cfg.start = Some(named_graph(Named::SchlafliComplement));
        let r = hunt(&cfg).unwrap();
        assert!(r.chi >= 6 && r.chi <= 9);
        assert!(is_member(&r.graph, &ClassName::K4Free.spec()).is_member());
    }

    #[test]
    fn hunt_triangle_free_small() {
        let r = hunt(&HuntConfig::new(ClassName::TriangleFree, 8, 200, 2)).unwrap();
        assert!(r.chi <= 4);
        assert!(!r.noteworthy);
    }

    #[test]
    fn hunt_rejects_out_of_class_start() {
        let mut cfg = HuntConfig::new(ClassName::C5Free, 11, 1, 0);
        cfg.start = Some(named_graph(Named::Grotzsch));
        assert!(matches!(hunt(&cfg), Err(HuntError::NotMember { .. })));
    }
}
