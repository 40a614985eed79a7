//! Finite simple graphs on dense vertex ids, plus the combinators used to
//! build the extremal witnesses: union, join, complement, expansion and the
//! Mycielskian.
//!
//! Every combinator documents its output numbering so that tests can assert
//! exact labeled graphs rather than isomorphism classes.

use std::fmt;

use crate::bitset::VertexSet;
use crate::error::GraphError;

/// A finite simple undirected graph on vertices `0..order`.
///
/// Adjacency is kept as one bitset row per vertex. Equality compares the
/// labeled adjacency only; the optional name is ignored.
#[derive(Clone)]
pub struct Graph {
    rows: Vec<VertexSet>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("order", &self.order())
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(order: usize) -> Self {
        Graph {
            rows: vec![VertexSet::new(order); order],
            name: None,
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Adds the edge `uv`. Loops and out-of-range ids are rejected.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(GraphError::InvalidParameter(format!("loop at vertex {u}")));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    /// Panicking variant of [`Graph::try_add_edge`] for internal construction.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.add_edge(u, v);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.order())
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, ids: I) -> VertexSet {
        VertexSet::from_ids(self.order(), ids)
    }

    /// Induced subgraph `G[set]`. Vertices are renumbered in ascending order;
    /// the returned vector maps each new id back to its id in `self`.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = set.iter().collect();
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for w in self.rows[v].intersection(set).iter() {
                let j = local[w];
                if j > i {
                    g.add_edge(i, j);
                }
            }
        }
        (g, keep)
    }

    pub fn induced_by_ids(&self, ids: &[usize]) -> Graph {
        self.induced(&self.set_of(ids.iter().copied())).0
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(VertexSet::is_empty)
    }

    /// `true` if `set` is pairwise adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let k = set.len();
        set.iter().all(|v| self.rows[v].intersection_len(set) == k - 1)
    }

    /// `true` if no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(set))
    }

    /// `true` if every vertex of `a` is adjacent to every vertex of `b`
    /// other than itself.
    pub fn is_complete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| {
            let mut rest = b.clone();
            rest.remove(v);
            rest.is_subset(&self.rows[v])
        })
    }

    pub fn is_anticomplete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| self.rows[v].is_disjoint(b))
    }

    /// Vertices of `within` adjacent to every member of `set`.
    pub fn common_neighbors(&self, set: &VertexSet, within: &VertexSet) -> VertexSet {
        let mut out = within.clone();
        for v in set {
            out.intersect_with(&self.rows[v]);
        }
        out
    }

    /// Connected components of `G[set]`, each as a vertex set, ordered by
    /// lowest member.
    pub fn components_within(&self, set: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = set.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = self.empty_set();
            let mut frontier = self.set_of([start]);
            while !frontier.is_empty() {
                comp.union_with(&frontier);
                let mut next = self.empty_set();
                for v in &frontier {
                    next.union_with(&self.rows[v]);
                }
                next.intersect_with(set);
                next.difference_with(&comp);
                frontier = next;
            }
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Returns `true` if `G[set]` is a disjoint union of cliques, i.e. has no
    /// induced three-vertex path.
    pub fn is_cluster_within(&self, set: &VertexSet) -> bool {
        self.components_within(set).iter().all(|c| self.is_clique(c))
    }

    /// An induced three-vertex path `a - b - c` inside `G[set]`, if any.
    pub fn induced_p3_within(&self, set: &VertexSet) -> Option<[usize; 3]> {
        for b in set {
            let nb = self.rows[b].intersection(set);
            let list: Vec<usize> = nb.iter().collect();
            for (i, &a) in list.iter().enumerate() {
                for &c in &list[i + 1..] {
                    if !self.has_edge(a, c) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| !self.rows[u].is_disjoint(&self.rows[v]))
    }

    /// Minimum degree.
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.order())
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn max_degree_vertex(&self) -> Option<usize> {
        // lowest id wins ties
        (0..self.order()).fold(None, |best, v| match best {
            Some(b) if self.degree(b) >= self.degree(v) => Some(b),
            _ => Some(v),
        })
    }
}

/// Parameterized basic families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
}

/// Builds `P_k`, `C_k`, `K_k` or the edgeless graph on `k` vertices.
///
/// Paths and cycles use the natural numbering `0 - 1 - ... - (k-1)`.
pub fn make_basic(kind: BasicKind) -> Result<Graph, GraphError> {
    let (g, label) = match kind {
        BasicKind::Path(k) => {
            if k < 1 {
                return Err(GraphError::InvalidParameter("path needs k >= 1".into()));
            }
            (Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))?, format!("P{k}"))
        }
        BasicKind::Cycle(k) => {
            if k < 3 {
                return Err(GraphError::InvalidParameter("cycle needs k >= 3".into()));
            }
            (Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))?, format!("C{k}"))
        }
        BasicKind::Complete(k) => {
            if k < 1 {
                return Err(GraphError::InvalidParameter("complete graph needs k >= 1".into()));
            }
            let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
            (Graph::from_edges(k, edges)?, format!("K{k}"))
        }
        BasicKind::Empty(k) => (Graph::empty(k), format!("E{k}")),
    };
    Ok(g.with_name(label))
}

/// Disjoint union `g ∪ h`: vertices of `g` keep their ids, vertices of `h`
/// are shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(n + h.order());
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(n + u, n + v);
    }
    out
}

/// Join `g + h`: the disjoint union plus every edge between the two sides.
/// Numbering as in [`disjoint_union`].
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.order();
    let mut out = disjoint_union(g, h);
    for u in 0..n {
        for v in 0..h.order() {
            out.add_edge(u, n + v);
        }
    }
    out
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// Expansion `g(H_1, ..., H_n)`: vertex `i` of `g` is replaced by `parts[i]`
/// and parts whose base vertices are adjacent are joined completely. Parts
/// are numbered consecutively in order.
pub fn expansion(g: &Graph, parts: &[Graph]) -> Result<Graph, GraphError> {
    if parts.len() != g.order() {
        return Err(GraphError::InvalidParameter(format!(
            "expansion needs {} parts, got {}",
            g.order(),
            parts.len()
        )));
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut total = 0;
    for p in parts {
        offsets.push(total);
        total += p.order();
    }
    let mut out = Graph::empty(total);
    for (i, p) in parts.iter().enumerate() {
        for (u, v) in p.edges() {
            out.add_edge(offsets[i] + u, offsets[i] + v);
        }
    }
    for (i, j) in g.edges() {
        for a in 0..parts[i].order() {
            for b in 0..parts[j].order() {
                out.add_edge(offsets[i] + a, offsets[j] + b);
            }
        }
    }
    Ok(out)
}

/// `K_k(H)`: the expansion of `K_k` with every part equal to `h`.
pub fn complete_expansion(k: usize, h: &Graph) -> Result<Graph, GraphError> {
    let base = make_basic(BasicKind::Complete(k))?;
    expansion(&base, &vec![h.clone(); k])
}

/// Mycielskian of `g`. Vertex `i` keeps its id, its shadow is `n + i` and the
/// apex is `2n`.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(2 * n + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
        out.add_edge(n + u, v);
        out.add_edge(u, n + v);
    }
    for i in 0..n {
        out.add_edge(n + i, 2 * n);
    }
    out
}

/// Which neighborhood of a vertex set to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Vertices at distance exactly `i` from the set (`i >= 1`).
    Exact(usize),
    /// Vertices at finite distance at least `i` from the set (`i >= 1`).
    AtLeast(usize),
    /// `X ∪ N(X)`.
    Closed,
    /// `V ∖ (X ∪ N(X))`.
    Non,
}

/// Breadth-first distance layers from `x`: entry `d` holds the vertices at
/// distance exactly `d` (entry 0 is `x` itself). Unreachable vertices appear
/// in no layer.
pub fn distance_layers(g: &Graph, x: &VertexSet) -> Vec<VertexSet> {
    let mut seen = x.clone();
    let mut layers = vec![x.clone()];
    loop {
        let mut next = g.empty_set();
        for v in layers.last().unwrap() {
            next.union_with(g.neighbors(v));
        }
        next.difference_with(&seen);
        if next.is_empty() {
            break;
        }
        seen.union_with(&next);
        layers.push(next);
    }
    layers
}

pub fn neighborhood(g: &Graph, x: &VertexSet, level: Level) -> Result<VertexSet, GraphError> {
    if x.universe() != g.order() {
        return Err(GraphError::InvalidParameter(
            "vertex set belongs to a graph of different order".into(),
        ));
    }
    let layers = distance_layers(g, x);
    let out = match level {
        Level::Exact(0) | Level::AtLeast(0) => return Err(GraphError::InvalidParameter("level must be >= 1".into())),
        Level::Exact(i) => layers.get(i).cloned().unwrap_or_else(|| g.empty_set()),
        Level::AtLeast(i) => {
            let mut s = g.empty_set();
            for l in layers.iter().skip(i) {
                s.union_with(l);
            }
            s
        }
        Level::Closed => {
            let mut s = x.clone();
            if let Some(l) = layers.get(1) {
                s.union_with(l);
            }
            s
        }
        Level::Non => {
            let mut s = x.clone();
            if let Some(l) = layers.get(1) {
                s.union_with(l);
            }
            s.complement()
        }
    };
    Ok(out)
}

/// `N(X)`: vertices outside `x` with a neighbor in `x`.
pub fn open_neighborhood(g: &Graph, x: &VertexSet) -> VertexSet {
    let mut s = g.empty_set();
    for v in x {
        s.union_with(g.neighbors(v));
    }
    s.difference_with(x);
    s
}

/// `M(X) = V ∖ (X ∪ N(X))`.
pub fn non_neighborhood(g: &Graph, x: &VertexSet) -> VertexSet {
    let mut s = open_neighborhood(g, x);
    s.union_with(x);
    s.complement()
}

/// Brute-force labeled isomorphism test, intended for tests on graphs of
/// order at most 8.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    assert!(n <= 8, "brute-force isomorphism is limited to order 8");
    let mut perm: Vec<usize> = (0..n).collect();
    permutations_any(&mut perm, 0, &mut |p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])))
}

fn permutations_any(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == p.len() {
        return f(p);
    }
    for i in k..p.len() {
        p.swap(k, i);
        if permutations_any(p, k + 1, f) {
            p.swap(k, i);
            return true;
        }
        p.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        make_basic(BasicKind::Complete(n)).unwrap()
    }

    #[test]
    fn basic_families() {
        let k3 = k(3);
        assert_eq!((k3.order(), k3.size()), (3, 3));
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        assert_eq!((c5.order(), c5.size()), (5, 5));
        let p2 = make_basic(BasicKind::Path(2)).unwrap();
        assert_eq!((p2.order(), p2.size()), (2, 1));
        assert!(make_basic(BasicKind::Cycle(2)).is_err());
        assert!(make_basic(BasicKind::Path(0)).is_err());
        assert!(make_basic(BasicKind::Complete(0)).is_err());
    }

    #[test]
    fn union_and_join() {
        let p3 = make_basic(BasicKind::Path(3)).unwrap();
        let p2 = make_basic(BasicKind::Path(2)).unwrap();
        let u = disjoint_union(&p3, &p2);
        assert_eq!((u.order(), u.size()), (5, 3));
        assert!(u.has_edge(3, 4) && !u.has_edge(2, 3));

        let two_k3 = disjoint_union(&k(3), &k(3));
        assert_eq!((two_k3.order(), two_k3.size()), (6, 6));

        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        assert_eq!(disjoint_union(&Graph::empty(0), &c5), c5);

        assert_eq!(join(&k(1), &k(1)), k(2));
        assert_eq!(join(&k(3), &k(3)), k(6));
    }

    #[test]
    fn complement_cases() {
        assert_eq!(complement(&k(4)), Graph::empty(4));
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        assert_eq!(complement(&complement(&c5)), c5);
        assert!(is_isomorphic_small(&complement(&c5), &c5));
    }

    #[test]
    fn expansion_cases() {
        assert_eq!(expansion(&k(2), &[k(3), k(3)]).unwrap(), k(6));
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        assert_eq!(expansion(&k(1), std::slice::from_ref(&c5)).unwrap(), c5);
        assert!(matches!(
            expansion(&k(2), std::slice::from_ref(&c5)),
            Err(GraphError::InvalidParameter(_))
        ));
    }

    #[test]
    fn expansion_of_complete_is_iterated_join() {
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        let three = complete_expansion(3, &c5).unwrap();
        assert_eq!(three, join(&join(&c5, &c5), &c5));
    }

    #[test]
    fn mycielskian_cases() {
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        let m = mycielskian(&c5);
        // 3 * 5 + 5
        assert_eq!((m.order(), m.size()), (11, 20));
        assert!(is_isomorphic_small(&mycielskian(&k(2)), &c5));
        let m1 = mycielskian(&Graph::empty(1));
        assert_eq!((m1.order(), m1.size()), (3, 1));
    }

    #[test]
    fn neighborhood_levels() {
        let p4 = make_basic(BasicKind::Path(4)).unwrap();
        let a = p4.set_of([0]);
        assert_eq!(neighborhood(&p4, &a, Level::Exact(2)).unwrap().to_vec(), vec![2]);
        assert_eq!(neighborhood(&p4, &a, Level::Closed).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(neighborhood(&p4, &a, Level::Non).unwrap().to_vec(), vec![2, 3]);
        let all = p4.vertex_set();
        assert!(neighborhood(&p4, &all, Level::Non).unwrap().is_empty());

        let c6 = make_basic(BasicKind::Cycle(6)).unwrap();
        let x = c6.set_of([0]);
        assert_eq!(
            neighborhood(&c6, &x, Level::AtLeast(2)).unwrap().to_vec(),
            vec![2, 3, 4]
        );
        assert!(neighborhood(&c6, &x, Level::Exact(0)).is_err());
    }

    #[test]
    fn unreachable_vertices_are_in_no_layer() {
        let g = disjoint_union(&k(2), &k(1));
        let x = g.set_of([0]);
        assert!(neighborhood(&g, &x, Level::AtLeast(2)).unwrap().is_empty());
        assert_eq!(neighborhood(&g, &x, Level::Non).unwrap().to_vec(), vec![2]);
    }

    #[test]
    fn min_degree_cases() {
        assert_eq!(make_basic(BasicKind::Cycle(5)).unwrap().min_degree(), Ok(2));
        assert_eq!(k(4).min_degree(), Ok(3));
        assert_eq!(Graph::empty(0).min_degree(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn induced_renumbers_ascending() {
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        let (sub, map) = c5.induced(&c5.set_of([4, 0, 1]));
        assert_eq!(map, vec![0, 1, 4]);
        assert_eq!(sub.size(), 2);
        assert!(sub.has_edge(0, 1) && sub.has_edge(0, 2) && !sub.has_edge(1, 2));
    }

    #[test]
    fn cluster_detection() {
        let g = disjoint_union(&k(3), &k(2));
        assert!(g.is_cluster_within(&g.vertex_set()));
        let p3 = make_basic(BasicKind::Path(3)).unwrap();
        assert_eq!(p3.induced_p3_within(&p3.vertex_set()), Some([0, 1, 2]));
    }
}
