//! Named graphs: the two extremal witnesses and the small forbidden
//! configurations.

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::{make_basic, mycielskian, BasicKind, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Named {
    Grotzsch,
    SchlafliComplement,
    P3UnionP2,
    Kite,
    Hammer,
    Diamond,
    TwoK3,
    P2UnionK3,
    K1UnionK3,
    Gem,
    House,
    W4,
    Paraglider,
    Hvn,
    Crown,
}

impl Named {
    pub const ALL: [Named; 15] = [
        Named::Grotzsch,
        Named::SchlafliComplement,
        Named::P3UnionP2,
        Named::Kite,
        Named::Hammer,
        Named::Diamond,
        Named::TwoK3,
        Named::P2UnionK3,
        Named::K1UnionK3,
        Named::Gem,
        Named::House,
        Named::W4,
        Named::Paraglider,
        Named::Hvn,
        Named::Crown,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Named::Grotzsch => "grotzsch",
            Named::SchlafliComplement => "schlafli_complement",
            Named::P3UnionP2 => "p3_union_p2",
            Named::Kite => "kite",
            Named::Hammer => "hammer",
            Named::Diamond => "diamond",
            Named::TwoK3 => "2k3",
            Named::P2UnionK3 => "p2_union_k3",
            Named::K1UnionK3 => "k1_union_k3",
            Named::Gem => "gem",
            Named::House => "house",
            Named::W4 => "w4",
            Named::Paraglider => "paraglider",
            Named::Hvn => "hvn",
            Named::Crown => "crown",
        }
    }

    /// Small patterns only (the two witnesses are excluded).
    pub fn patterns() -> impl Iterator<Item = Named> {
        Named::ALL
            .into_iter()
            .filter(|n| !matches!(n, Named::Grotzsch | Named::SchlafliComplement))
    }

    pub fn graph(self) -> Graph {
        named_graph(self)
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Named {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Named::ALL
            .into_iter()
            .find(|n| n.label() == key)
            .ok_or_else(|| GraphError::UnknownName(s.to_string()))
    }
}

fn fixed(order: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(order, edges.iter().copied()).expect("catalog edge list")
}

/// Builds a catalog graph.
///
/// Vertex numbering of the five-vertex patterns:
///
/// * `p3_union_p2`: path `0-1-2`, edge `3-4`.
/// * `kite`: diamond on `0,1,2,3` with `1,2` the degree-3 vertices, pendant
///   `4` on `3`.
/// * `hammer`: triangle `0,1,2`, path `2-3-4`.
/// * `p2_union_k3`: edge `0-1`, triangle `2,3,4`.
/// * `k1_union_k3`: isolated `0`, triangle `1,2,3`.
/// * `2k3`: triangles `0,1,2` and `3,4,5`.
///
/// `grotzsch` is the Mycielskian of `C5` (see [`mycielskian`] for ids).
/// `schlafli_complement` numbers `a_1..a_6` as `0..5`, `b_1..b_6` as `6..11`
/// and `c_ij` (`i < j`, lexicographic) as `12..26`.
pub fn named_graph(which: Named) -> Graph {
    let g = match which {
        Named::Grotzsch => mycielskian(&make_basic(BasicKind::Cycle(5)).unwrap()),
        Named::SchlafliComplement => schlafli_complement(),
        Named::P3UnionP2 => fixed(5, &[(0, 1), (1, 2), (3, 4)]),
        Named::Kite => fixed(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]),
        Named::Hammer => fixed(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),
        Named::Diamond => fixed(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        Named::TwoK3 => fixed(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]),
        Named::P2UnionK3 => fixed(5, &[(0, 1), (2, 3), (2, 4), (3, 4)]),
        Named::K1UnionK3 => fixed(4, &[(1, 2), (1, 3), (2, 3)]),
        // P4 0-1-2-3 plus a dominating vertex
        Named::Gem => fixed(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
        // square 0-1-2-3 with roof vertex 4 over the edge 0-1
        Named::House => fixed(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]),
        Named::W4 => fixed(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]),
        // C4 plus a vertex adjacent to three of its vertices
        Named::Paraglider => fixed(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)]),
        // K4 plus a vertex adjacent to exactly two of its vertices
        Named::Hvn => fixed(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)]),
        // K1 + K_{1,3}: claw centered at 1 with leaves 2,3,4, joined to 0
        Named::Crown => fixed(5, &[(1, 2), (1, 3), (1, 4), (0, 1), (0, 2), (0, 3), (0, 4)]),
    };
    g.with_name(which.label())
}

fn schlafli_complement() -> Graph {
    let a = |i: usize| i;
    let b = |i: usize| 6 + i;
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect();
    let c = |idx: usize| 12 + idx;
    let mut g = Graph::empty(27);
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                g.add_edge(a(i), b(j));
            }
        }
    }
    for (idx, &(j, k)) in pairs.iter().enumerate() {
        g.add_edge(a(j), c(idx));
        g.add_edge(a(k), c(idx));
        g.add_edge(b(j), c(idx));
        g.add_edge(b(k), c(idx));
    }
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for (y, &(k, l)) in pairs.iter().enumerate().skip(x + 1) {
            if i != k && i != l && j != k && j != l {
                g.add_edge(c(x), c(y));
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in Named::ALL {
            assert_eq!(n.label().parse::<Named>().unwrap(), n);
        }
        assert!("petersen".parse::<Named>().is_err());
    }

    #[test]
    fn witness_sizes() {
        let g = Named::Grotzsch.graph();
        assert_eq!((g.order(), g.size()), (11, 20));
        assert_eq!(g.min_degree(), Ok(3));
        assert!(!g.has_triangle());

        let s = Named::SchlafliComplement.graph();
        assert_eq!((s.order(), s.size()), (27, 135));
        assert!((0..27).all(|v| s.degree(v) == 10));
    }

    #[test]
    fn hammer_and_kite_shapes() {
        let h = Named::Hammer.graph();
        assert_eq!((h.order(), h.size()), (5, 5));
        assert_eq!(h.degree_sequence(), vec![1, 2, 2, 2, 3]);
        let k = Named::Kite.graph();
        assert_eq!(k.size(), 6);
        assert_eq!(k.degree_sequence(), vec![1, 2, 3, 3, 3]);
        // pendant sits on a degree-2 vertex of the diamond
        assert_eq!(k.degree(4), 1);
        assert!(k.has_edge(3, 4) && !k.has_edge(0, 3));
    }
}
