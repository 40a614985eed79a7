//! `2ω` colorer for graphs without induced `P3 ∪ P2` or kite.
//!
//! After removing dominated vertices, an induced `P2 ∪ K3` or hammer gives a
//! decomposition into blocks whose palettes add up to at most `2ω`. When
//! neither exists the graph is `K1 ∪ K3`-free and an exact solve finishes.

use super::{
    clique_colors, cluster_coloring_of, domination_reduce, drive, trivial, Assembly, Check, ColorError, ColorOptions,
    ColorOutcome, Frame, Run,
};
use crate::catalog::Named;
use crate::coloring::Coloring;
use crate::graph::{non_neighborhood, open_neighborhood};
use crate::patterns::{find_induced_graph, ClassName};

pub fn color_kite_free(g: &crate::graph::Graph, opts: &ColorOptions) -> Result<ColorOutcome, ColorError> {
    drive(ClassName::KiteFree, g, opts, kite_frame)
}

/// `K1 ∪ K3`-free graphs are kite-free, so the same decomposition applies.
pub fn color_k1k3_free(g: &crate::graph::Graph, opts: &ColorOptions) -> Result<ColorOutcome, ColorError> {
    drive(ClassName::K1K3Free, g, opts, kite_frame)
}

fn kite_frame(run: &mut Run, f: &Frame) -> Result<Coloring, ColorError> {
    if let Some(c) = trivial(f.g) {
        return Ok(c);
    }
    if let Some(red) = domination_reduce(f.g) {
        run.assert(
            f,
            "kite.reduce.dominated",
            Check::Dominated {
                within: (0..f.g.order()).collect(),
                u: red.removed,
                v: red.donor,
            },
            &[],
        )?;
        let ids: Vec<usize> = red.kept.iter().map(|&v| f.ids[v]).collect();
        let child = Frame {
            g: &red.graph,
            ids: &ids,
            depth: f.depth,
        };
        let c = kite_frame(run, &child)?;
        return Ok(red.lift(&c));
    }
    let all = f.g.vertex_set();
    let omega = run.max_clique(f, &all, "kite.omega")?.len();
    if omega <= 2 {
        return run.leaf(f, "kite.leaf.triangle-free", 4);
    }
    let coloring = if let Some(q) = find_induced_graph(f.g, &Named::P2UnionK3.graph()) {
        p2k3_branch(run, f, &q.map, omega)?
    } else if let Some(q) = find_induced_graph(f.g, &Named::Hammer.graph()) {
        hammer_branch(run, f, &q.map, omega)?
    } else {
        run.assert(
            f,
            "kite.no-k1k3",
            Check::PatternFree {
                set: all.to_vec(),
                pattern: Named::K1UnionK3,
            },
            &[],
        )?;
        return run.leaf(f, "kite.leaf.k1k3-free", 2 * omega);
    };
    run.assert(
        f,
        "kite.palette",
        Check::PaletteAtMost {
            palette: coloring.palette(),
            bound: 2 * omega,
        },
        &[("omega", omega)],
    )?;
    Ok(coloring)
}

/// Witness `q = [u1, u2, v1, v2, v3]` with edge `u1u2` and triangle `v1v2v3`.
fn p2k3_branch(run: &mut Run, f: &Frame, q: &[usize], omega: usize) -> Result<Coloring, ColorError> {
    let g = f.g;
    let (u1, u2) = (q[0], q[1]);
    let pair = g.set_of([u1, u2]);
    let witness: Vec<(&str, usize)> = ["u1", "u2", "v1", "v2", "v3"]
        .into_iter()
        .zip(q.iter().map(|&v| f.global(v)))
        .collect();

    let mut only1 = g.neighbors(u1).difference(g.neighbors(u2));
    only1.remove(u2);
    let mut only2 = g.neighbors(u2).difference(g.neighbors(u1));
    only2.remove(u1);
    let common = g.neighbors(u1).intersection(g.neighbors(u2));
    let far = non_neighborhood(g, &pair);

    run.assert(
        f,
        "kite.p2k3.private-independent",
        Check::Independent { set: only1.to_vec() },
        &witness,
    )?;
    run.assert(
        f,
        "kite.p2k3.private-independent",
        Check::Independent { set: only2.to_vec() },
        &witness,
    )?;
    run.assert(
        f,
        "kite.p2k3.far-cluster",
        Check::Cluster {
            set: far.to_vec(),
            max: 0,
        },
        &[],
    )?;

    let c1 = run.max_clique(f, &far, "kite.p2k3.far-clique")?;
    let mut core = g.empty_set();
    for v in &common {
        let mut rest = common.clone();
        rest.remove(v);
        if rest.is_subset(g.neighbors(v)) {
            core.insert(v);
        }
    }
    let rest = common.difference(&core);
    let omega1 = run.max_clique(f, &rest, "kite.p2k3.rest-omega")?.len();
    let sizes = [("omega", omega), ("omega1", omega1), ("far_clique", c1.len())];

    run.assert(f, "kite.p2k3.core-clique", Check::Clique { set: core.to_vec() }, &[])?;
    run.assert(
        f,
        "kite.p2k3.rest-near-far-clique",
        Check::HasNeighborIn {
            a: rest.to_vec(),
            b: c1.clone(),
        },
        &sizes,
    )?;
    run.assert(
        f,
        "kite.p2k3.rest-complete-far-clique",
        Check::CompleteTo {
            a: rest.to_vec(),
            b: c1.clone(),
        },
        &sizes,
    )?;
    run.assert(
        f,
        "kite.p2k3.core-bound",
        Check::CliqueAtMost {
            set: core.to_vec(),
            bound: omega.saturating_sub(2 + omega1),
        },
        &sizes,
    )?;
    run.assert(
        f,
        "kite.p2k3.far-bound",
        Check::CliqueAtMost {
            set: far.to_vec(),
            bound: omega - omega1,
        },
        &sizes,
    )?;

    let mut asm = Assembly::new(g.order());
    let (members, c) = run.recurse(f, &rest, kite_frame)?;
    asm.fresh(&members, c.colors());
    let (members, colors) = clique_colors(&core);
    asm.fresh(&members, &colors);
    for side in [&only1, &only2] {
        let members = side.to_vec();
        asm.fresh(&members, &vec![0; members.len()]);
    }
    let (members, colors) = cluster_coloring_of(g, &far.union(&pair))?;
    asm.fresh(&members, &colors);
    asm.finish(g)
}

/// Witness `q = [v1, .., v5]`: triangle `v1v2v3`, path `v3v4v5`.
#[allow(clippy::needless_range_loop)]
fn hammer_branch(run: &mut Run, f: &Frame, q: &[usize], omega: usize) -> Result<Coloring, ColorError> {
    let g = f.g;
    let anchors = [q[0], q[1], q[3], q[4]];
    let anchor_set = g.set_of(anchors);
    let nbhd = open_neighborhood(g, &anchor_set);
    let far = non_neighborhood(g, &anchor_set);
    let witness: Vec<(&str, usize)> = ["v1", "v2", "v3", "v4", "v5"]
        .into_iter()
        .zip(q.iter().map(|&v| f.global(v)))
        .collect();

    // cells[mask]: bit i set iff adjacent to anchors[i]
    let mut cells = vec![g.empty_set(); 16];
    for x in &nbhd {
        let mask = (0..4)
            .filter(|&i| g.has_edge(x, anchors[i]))
            .fold(0usize, |m, i| m | (1 << i));
        cells[mask].insert(x);
    }
    run.assert(
        f,
        "kite.hammer.cells",
        Check::Partition {
            whole: nbhd.to_vec(),
            parts: cells[1..].iter().map(|c| c.to_vec()).collect(),
        },
        &witness,
    )?;
    let all: Vec<usize> = (0..g.order()).collect();
    for mask in 1..16usize {
        let adjacent: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| anchors[i]).collect();
        let must_be_empty = mask.count_ones() == 1 || mask == 0b0011 || mask == 0b1100;
        let (tag, set) = if must_be_empty {
            ("kite.hammer.cell-empty", vec![])
        } else {
            ("kite.hammer.cell", cells[mask].to_vec())
        };
        run.assert(
            f,
            tag,
            Check::Cell {
                within: all.clone(),
                anchors: anchors.to_vec(),
                adjacent,
                set,
            },
            &[],
        )?;
        if !must_be_empty && mask != 0b1111 {
            run.assert(
                f,
                "kite.hammer.cell-independent",
                Check::Independent {
                    set: cells[mask].to_vec(),
                },
                &[],
            )?;
        }
    }

    let union = |masks: &[usize]| {
        let mut s = g.empty_set();
        for &m in masks {
            s.union_with(&cells[m]);
        }
        s
    };
    let j2 = union(&[0b0101, 0b1001, 0b0110, 0b1010]);
    let j3 = union(&[0b0111, 0b1011, 0b1101, 0b1110]);
    let full = &cells[0b1111];
    let triangle = vec![q[0], q[1], q[2]];

    run.assert(
        f,
        "kite.hammer.pairs-anticomplete-triples",
        Check::AnticompleteTo {
            a: j2.to_vec(),
            b: j3.to_vec(),
        },
        &[],
    )?;
    run.assert(
        f,
        "kite.hammer.full-cell-complete-triangle",
        Check::CompleteTo {
            a: full.to_vec(),
            b: triangle,
        },
        &[],
    )?;
    run.assert(
        f,
        "kite.hammer.full-cell-bound",
        Check::CliqueAtMost {
            set: full.to_vec(),
            bound: omega - 3,
        },
        &[("omega", omega)],
    )?;
    let outer = far.union(&anchor_set);
    run.assert(
        f,
        "kite.hammer.far-small-components",
        Check::Cluster {
            set: outer.to_vec(),
            max: 2,
        },
        &[],
    )?;

    let mut asm = Assembly::new(g.order());
    // J2 and J3 are anticomplete, so their colorings may share one palette.
    let (m2, c2) = run.exact_within(f, &j2, "kite.hammer.pairs-exact")?;
    let (m3, c3) = run.exact_within(f, &j3, "kite.hammer.triples-exact")?;
    for (tag, members, c) in [
        ("kite.hammer.pairs-bipartite", &m2, &c2),
        ("kite.hammer.triples-bipartite", &m3, &c3),
    ] {
        run.soft_known(
            f,
            tag,
            Check::ChromaticAtMost {
                set: members.clone(),
                bound: 2,
            },
            c.palette() <= 2,
            &[("chi", c.palette())],
        )?;
    }
    let shared = c2.palette().max(c3.palette());
    run.assert(
        f,
        "kite.hammer.shared-palette",
        Check::PaletteAtMost {
            palette: shared,
            bound: 4,
        },
        &[],
    )?;
    let offset = asm.next();
    asm.place(offset, &m2, c2.colors());
    asm.place(offset, &m3, c3.colors());

    let (members, c) = run.recurse(f, full, kite_frame)?;
    asm.fresh(&members, c.colors());
    let (members, colors) = cluster_coloring_of(g, &outer)?;
    asm.fresh(&members, &colors);
    asm.finish(g)
}
