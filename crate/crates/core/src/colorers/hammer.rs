//! `ω²` colorers for the hammer-free class and its `P2 ∪ K3`-free subclass.

use super::{cluster_coloring_of, drive, trivial, Assembly, Check, ColorError, ColorOptions, ColorOutcome, Frame, Run};
use crate::catalog::Named;
use crate::coloring::Coloring;
use crate::graph::{non_neighborhood, open_neighborhood, Graph};
use crate::patterns::{find_induced_graph, ClassName};

pub fn color_hammer_free(g: &Graph, opts: &ColorOptions) -> Result<ColorOutcome, ColorError> {
    drive(ClassName::HammerFree, g, opts, hammer_frame)
}

pub fn color_p2k3_free(g: &Graph, opts: &ColorOptions) -> Result<ColorOutcome, ColorError> {
    drive(ClassName::P2K3Free, g, opts, p2k3_frame)
}

fn hammer_frame(run: &mut Run, f: &Frame) -> Result<Coloring, ColorError> {
    if let Some(c) = trivial(f.g) {
        return Ok(c);
    }
    let Some(q) = find_induced_graph(f.g, &Named::P2UnionK3.graph()) else {
        return p2k3_frame(run, f);
    };
    let g = f.g;
    let (u1, u2) = (q.map[0], q.map[1]);
    let pair = g.set_of([u1, u2]);
    let omega = run.max_clique(f, &g.vertex_set(), "hammer.omega")?.len();
    let values = [("u1", f.global(u1)), ("u2", f.global(u2)), ("omega", omega)];

    run.assert(
        f,
        "hammer.twins",
        Check::SameNeighborhood {
            within: (0..g.order()).collect(),
            u: u1,
            v: u2,
        },
        &values,
    )?;
    let nbhd = open_neighborhood(g, &pair);
    let far = non_neighborhood(g, &pair).union(&pair);
    run.assert(
        f,
        "hammer.neighborhood-bound",
        Check::CliqueAtMost {
            set: nbhd.to_vec(),
            bound: omega - 2,
        },
        &values,
    )?;
    run.assert(
        f,
        "hammer.far-cluster",
        Check::Cluster {
            set: far.to_vec(),
            max: 0,
        },
        &values,
    )?;

    let mut asm = Assembly::new(g.order());
    let (members, c) = run.recurse(f, &nbhd, hammer_frame)?;
    asm.fresh(&members, c.colors());
    let (members, colors) = cluster_coloring_of(g, &far)?;
    asm.fresh(&members, &colors);
    let coloring = asm.finish(g)?;
    run.assert(
        f,
        "hammer.palette",
        Check::PaletteAtMost {
            palette: coloring.palette(),
            bound: omega * omega,
        },
        &values,
    )?;
    Ok(coloring)
}

pub(crate) fn p2k3_frame(run: &mut Run, f: &Frame) -> Result<Coloring, ColorError> {
    if let Some(c) = trivial(f.g) {
        return Ok(c);
    }
    let g = f.g;
    let clique = run.max_clique(f, &g.vertex_set(), "p2k3.omega")?;
    let omega = clique.len();
    let v1 = clique[0];
    let values = [("v1", f.global(v1)), ("omega", omega)];

    let mut rest = g.neighbors(v1).complement();
    rest.remove(v1);
    let mut parts = Vec::with_capacity(omega);
    for &vi in &clique[1..] {
        let part = rest.difference(g.neighbors(vi));
        rest.difference_with(&part);
        parts.push(part);
    }
    let b = rest;
    let nbhd = g.neighbors(v1).clone();

    let mut whole = g.neighbors(v1).complement();
    whole.remove(v1);
    let mut all_parts: Vec<Vec<usize>> = parts.iter().map(|p| p.to_vec()).collect();
    all_parts.push(b.to_vec());
    run.assert(
        f,
        "p2k3.cells",
        Check::Partition {
            whole: whole.to_vec(),
            parts: all_parts,
        },
        &values,
    )?;
    for p in &parts {
        run.assert(
            f,
            "p2k3.part-small-components",
            Check::Cluster {
                set: p.to_vec(),
                max: 2,
            },
            &values,
        )?;
    }
    run.assert(
        f,
        "p2k3.rest-independent",
        Check::Independent { set: b.to_vec() },
        &values,
    )?;
    run.assert(
        f,
        "p2k3.rest-complete-clique",
        Check::CompleteTo {
            a: b.to_vec(),
            b: clique[1..].to_vec(),
        },
        &values,
    )?;
    run.assert(
        f,
        "p2k3.neighborhood-bound",
        Check::CliqueAtMost {
            set: nbhd.to_vec(),
            bound: omega - 1,
        },
        &values,
    )?;

    let mut asm = Assembly::new(g.order());
    let (members, c) = run.recurse(f, &nbhd, p2k3_frame)?;
    asm.fresh(&members, c.colors());
    for p in &parts {
        if !p.is_empty() {
            let (members, colors) = cluster_coloring_of(g, p)?;
            asm.fresh(&members, &colors);
        }
    }
    // v1 is anticomplete to B and takes its color
    let mut tail = b.to_vec();
    tail.push(v1);
    asm.fresh(&tail, &vec![0; tail.len()]);
    let coloring = asm.finish(g)?;
    run.assert(
        f,
        "p2k3.palette",
        Check::PaletteAtMost {
            palette: coloring.palette(),
            bound: omega * omega,
        },
        &values,
    )?;
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;
    use crate::colorers::StepVerdict;
    use crate::graph::{make_basic, BasicKind};

    #[test]
    fn p2k3_examples() {
        let opts = ColorOptions::default();
        let e = make_basic(BasicKind::Empty(5)).unwrap();
        assert_eq!(color_p2k3_free(&e, &opts).unwrap().coloring.palette(), 1);
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        assert!(color_p2k3_free(&c5, &opts).unwrap().coloring.palette() <= 4);
        let gr = named_graph(Named::Grotzsch);
        assert_eq!(color_p2k3_free(&gr, &opts).unwrap().coloring.palette(), 4);
    }

    #[test]
    fn hammer_examples() {
        let opts = ColorOptions::default();
        let g = named_graph(Named::P2UnionK3);
        let out = color_hammer_free(&g, &opts).unwrap();
        assert!(out.coloring.palette() <= 9);
        assert!(out
            .trace
            .steps
            .iter()
            .any(|s| s.tag == "hammer.twins" && s.verdict == StepVerdict::Holds));
        let gr = named_graph(Named::Grotzsch);
        assert_eq!(color_hammer_free(&gr, &opts).unwrap().coloring.palette(), 4);
    }
}
