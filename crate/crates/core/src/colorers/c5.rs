//! `(3ω² + ω)/2` colorer for graphs without induced `P3 ∪ P2` or `C5`.
//!
//! The decomposition is centered on a maximum-degree vertex `v`. Each
//! neighbor `u` of `v` is ranked by the clique number of its non-neighbors
//! at distance at least two from `v`; that set is always a cluster graph.

use super::{
    clique_colors, cluster_coloring_of, drive, evaluate_bound, trivial, Assembly, Check, ColorError, ColorOptions,
    ColorOutcome, Frame, Run,
};
use crate::coloring::Coloring;
use crate::graph::{open_neighborhood, Graph};
use crate::patterns::ClassName;

pub fn color_c5_free(g: &Graph, opts: &ColorOptions) -> Result<ColorOutcome, ColorError> {
    drive(ClassName::C5Free, g, opts, c5_frame)
}

fn c5_frame(run: &mut Run, f: &Frame) -> Result<Coloring, ColorError> {
    if let Some(c) = trivial(f.g) {
        return Ok(c);
    }
    let g = f.g;
    let omega = run.max_clique(f, &g.vertex_set(), "c5.omega")?.len();
    if omega <= 2 {
        return run.leaf(f, "c5.leaf.triangle-free", 4);
    }
    let v = g.max_degree_vertex().expect("nonempty");
    let near = g.neighbors(v).clone();
    let mut far = near.complement();
    far.remove(v);
    let second = far.intersection(&open_neighborhood(g, &near));
    let beyond = far.difference(&second);
    let values = [("v", f.global(v)), ("omega", omega)];

    let mut rank = vec![0; g.order()];
    let mut cells = vec![g.empty_set(); omega + 1];
    for u in &near {
        let m = far.difference(g.neighbors(u));
        let j = run.max_clique(f, &m, "c5.rank")?.len();
        rank[u] = j;
        cells[j].insert(u);
    }
    run.assert(
        f,
        "c5.ranks",
        Check::Partition {
            whole: near.to_vec(),
            parts: cells.iter().map(|c| c.to_vec()).collect(),
        },
        &values,
    )?;
    let mut high = g.empty_set();
    for c in &cells[3.min(cells.len())..] {
        high.union_with(c);
    }
    let low = near.difference(&high);
    run.assert(f, "c5.high-rank-clique", Check::Clique { set: high.to_vec() }, &values)?;

    let mut asm = Assembly::new(g.order());
    if low.is_empty() {
        let pivot = high.first().expect("v has a neighbor");
        let pv = [("v", f.global(v)), ("pivot", f.global(pivot)), ("omega", omega)];
        let mut outer = far.difference(g.neighbors(pivot));
        outer.insert(v);
        let inner = far.intersection(g.neighbors(pivot));
        run.assert(
            f,
            "c5.top.outer-cluster",
            Check::Cluster {
                set: outer.to_vec(),
                max: omega,
            },
            &pv,
        )?;
        run.assert(
            f,
            "c5.top.inner-bound",
            Check::CliqueAtMost {
                set: inner.to_vec(),
                bound: omega - 1,
            },
            &pv,
        )?;
        let (members, colors) = clique_colors(&near);
        asm.fresh(&members, &colors);
        let (members, colors) = cluster_coloring_of(g, &outer)?;
        asm.fresh(&members, &colors);
        let (members, c) = run.recurse(f, &inner, c5_frame)?;
        asm.fresh(&members, c.colors());
    } else {
        let clique = run.max_clique(f, &low, "c5.low-clique")?;
        let omega0 = clique.len();
        let sizes = [("v", f.global(v)), ("omega", omega), ("omega0", omega0)];
        let mut core = second.clone();
        for &t in &clique {
            core.intersect_with(g.neighbors(t));
        }
        run.assert(
            f,
            "c5.core-complete-clique",
            Check::CompleteTo {
                a: core.to_vec(),
                b: clique.clone(),
            },
            &sizes,
        )?;
        run.assert(
            f,
            "c5.core-bound",
            Check::CliqueAtMost {
                set: core.to_vec(),
                bound: omega - omega0,
            },
            &sizes,
        )?;
        let mut rest = second.difference(&core);
        let whole = rest.clone();
        let mut blocks = Vec::with_capacity(omega0);
        for &t in &clique {
            let b = rest.difference(g.neighbors(t));
            rest.difference_with(&b);
            blocks.push((t, b));
        }
        run.assert(
            f,
            "c5.blocks",
            Check::Partition {
                whole: whole.to_vec(),
                parts: blocks.iter().map(|(_, b)| b.to_vec()).collect(),
            },
            &sizes,
        )?;
        for (t, b) in &blocks {
            let bv = [("t", f.global(*t)), ("rank", rank[*t])];
            run.assert(
                f,
                "c5.block-cluster",
                Check::Cluster {
                    set: b.to_vec(),
                    max: 0,
                },
                &bv,
            )?;
            run.soft(
                f,
                "c5.block-rank",
                Check::ChromaticAtMost {
                    set: b.to_vec(),
                    bound: rank[*t],
                },
                &bv,
            )?;
        }
        let mut outer = high.union(&beyond);
        outer.insert(v);
        run.assert(
            f,
            "c5.outer-cluster",
            Check::Cluster {
                set: outer.to_vec(),
                max: omega,
            },
            &sizes,
        )?;

        let (members, c) = run.recurse(f, &low, c5_frame)?;
        asm.fresh(&members, c.colors());
        let (members, c) = run.recurse(f, &core, c5_frame)?;
        asm.fresh(&members, c.colors());
        for (_, b) in &blocks {
            if !b.is_empty() {
                let (members, colors) = cluster_coloring_of(g, b)?;
                asm.fresh(&members, &colors);
            }
        }
        let (members, colors) = cluster_coloring_of(g, &outer)?;
        asm.fresh(&members, &colors);
    }
    let coloring = asm.finish(g)?;
    let bound = evaluate_bound(ClassName::C5Free, omega).map_err(|e| ColorError::Internal(e.to_string()))?;
    run.assert(
        f,
        "c5.palette",
        Check::PaletteAtMost {
            palette: coloring.palette(),
            bound,
        },
        &values,
    )?;
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{named_graph, Named};
    use crate::graph::{make_basic, BasicKind};

    #[test]
    fn complete_graphs() {
        for n in 1..7 {
            let k = make_basic(BasicKind::Complete(n)).unwrap();
            let out = color_c5_free(&k, &ColorOptions::default()).unwrap();
            assert_eq!(out.coloring.palette(), n);
        }
    }

    #[test]
    fn grotzsch_is_rejected() {
        match color_c5_free(&named_graph(Named::Grotzsch), &ColorOptions::default()) {
            Err(ColorError::NotMember { pattern, embedding, .. }) => {
                assert_eq!(pattern, "C5");
                assert_eq!(embedding.map.len(), 5);
            }
            other => panic!("{other:?}"),
        }
    }
}
