//! Colorer for graphs without induced `P3 ∪ P2` or `K4`: at most 6 colors
//! when an induced `2K3` or `P2 ∪ K3` exists, otherwise at most `ω² ≤ 9`.

use super::hammer::p2k3_frame;
use super::{cluster_coloring_of, drive, trivial, Assembly, Check, ColorError, ColorOptions, ColorOutcome, Frame, Run};
use crate::bitset::VertexSet;
use crate::catalog::Named;
use crate::coloring::Coloring;
use crate::graph::{non_neighborhood, open_neighborhood, Graph};
use crate::patterns::{find_induced_graph, ClassName};

pub fn color_k4_free(g: &Graph, opts: &ColorOptions) -> Result<ColorOutcome, ColorError> {
    drive(ClassName::K4Free, g, opts, k4_frame)
}

fn k4_frame(run: &mut Run, f: &Frame) -> Result<Coloring, ColorError> {
    if let Some(c) = trivial(f.g) {
        return Ok(c);
    }
    let omega = run.max_clique(f, &f.g.vertex_set(), "k4.omega")?.len();
    if omega <= 2 {
        return run.leaf(f, "k4.leaf.triangle-free", 4);
    }
    let (tag, coloring) = if let Some(q) = find_induced_graph(f.g, &Named::TwoK3.graph()) {
        ("k4.2k3.palette", triangle_branch(run, f, &q.map[..3], None)?)
    } else if let Some(q) = find_induced_graph(f.g, &Named::P2UnionK3.graph()) {
        (
            "k4.p2k3.palette",
            triangle_branch(run, f, &q.map[2..], Some((q.map[0], q.map[1])))?,
        )
    } else {
        ("k4.delegate.palette", p2k3_frame(run, f)?)
    };
    let bound = if tag == "k4.delegate.palette" { 9 } else { 6 };
    run.assert(
        f,
        tag,
        Check::PaletteAtMost {
            palette: coloring.palette(),
            bound,
        },
        &[("omega", omega)],
    )?;
    Ok(coloring)
}

/// Decomposes around the triangle `tri` of an induced `2K3` (`edge = None`)
/// or of an induced `P2 ∪ K3` with edge `u1u2`.
#[allow(clippy::needless_range_loop)]
fn triangle_branch(
    run: &mut Run,
    f: &Frame,
    tri: &[usize],
    edge: Option<(usize, usize)>,
) -> Result<Coloring, ColorError> {
    let g = f.g;
    let branch = if edge.is_some() { "k4.p2k3" } else { "k4.2k3" };
    let tri_set = g.set_of(tri.iter().copied());
    let nbhd = open_neighborhood(g, &tri_set);
    let far = non_neighborhood(g, &tri_set);
    let mut values: Vec<(&str, usize)> = ["t1", "t2", "t3"]
        .into_iter()
        .zip(tri.iter().map(|&v| f.global(v)))
        .collect();
    if let Some((u1, u2)) = edge {
        values.push(("u1", f.global(u1)));
        values.push(("u2", f.global(u2)));
    }

    let mut cells = vec![g.empty_set(); 8];
    for x in &nbhd {
        let mask = (0..3)
            .filter(|&i| g.has_edge(x, tri[i]))
            .fold(0usize, |m, i| m | (1 << i));
        cells[mask].insert(x);
    }
    run.assert(
        f,
        &format!("{branch}.cells"),
        Check::Partition {
            whole: nbhd.to_vec(),
            parts: cells[1..].iter().map(VertexSet::to_vec).collect(),
        },
        &values,
    )?;
    let all: Vec<usize> = (0..g.order()).collect();
    for mask in 1..8usize {
        let must_be_empty = mask == 0b111 || (edge.is_none() && mask.count_ones() == 1);
        let adjacent = (0..3).filter(|i| mask >> i & 1 == 1).map(|i| tri[i]).collect();
        let set = if must_be_empty { vec![] } else { cells[mask].to_vec() };
        let tag = if must_be_empty { "cell-empty" } else { "cell" };
        run.assert(
            f,
            &format!("{branch}.{tag}"),
            Check::Cell {
                within: all.clone(),
                anchors: tri.to_vec(),
                adjacent,
                set,
            },
            &[],
        )?;
    }

    let mut asm = Assembly::new(g.order());
    if let Some((u1, u2)) = edge {
        let singles = cells[0b001].union(&cells[0b010]).union(&cells[0b100]);
        run.assert(
            f,
            "k4.p2k3.singles-independent",
            Check::Independent { set: singles.to_vec() },
            &[],
        )?;
        run.assert(
            f,
            "k4.p2k3.singles-complete-edge",
            Check::CompleteTo {
                a: singles.to_vec(),
                b: vec![u1, u2],
            },
            &[],
        )?;
        let members = singles.to_vec();
        asm.fresh(&members, &vec![0; members.len()]);
    }
    // each triangle vertex joins the pair cell it is not adjacent to
    let offset = asm.next();
    for k in 0..3 {
        let pair_mask = 0b111 & !(1 << k);
        let mut block = cells[pair_mask].clone();
        block.insert(tri[k]);
        run.assert(
            f,
            &format!("{branch}.pair-cell-independent"),
            Check::Independent { set: block.to_vec() },
            &[],
        )?;
        let members = block.to_vec();
        asm.place(offset + k, &members, &vec![0; members.len()]);
    }
    let cap = if edge.is_some() { 2 } else { 3 };
    run.assert(
        f,
        &format!("{branch}.far-cluster"),
        Check::Cluster {
            set: far.to_vec(),
            max: cap,
        },
        &[],
    )?;
    if !far.is_empty() {
        let (members, colors) = cluster_coloring_of(g, &far)?;
        let base = asm.next();
        asm.place(base, &members, &colors);
    }
    asm.finish(g)
}
