//! Induced-subgraph detection and membership in the hereditary classes
//! defined by forbidden induced patterns.
//!
//! Detection is a backtracking search over pattern vertices in a static
//! order (descending pattern degree, ties by lowest id). Each extension
//! intersects the host candidates with the neighborhoods (for pattern edges)
//! and non-neighborhoods (for pattern non-edges) of the already mapped
//! vertices, so every partial map is an induced embedding of its prefix.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::catalog::Named;
use crate::graph::{make_basic, BasicKind, Graph};

pub const MAX_PATTERN_ORDER: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern `{name}` has order {order}, above the detector limit of {MAX_PATTERN_ORDER}")]
    TooLarge { name: String, order: usize },
    #[error("unknown class `{0}`")]
    UnknownClass(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Graph,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<Self, PatternError> {
        let name = name.into();
        if graph.order() > MAX_PATTERN_ORDER {
            return Err(PatternError::TooLarge {
                name,
                order: graph.order(),
            });
        }
        Ok(Pattern { name, graph })
    }

    pub fn named(which: Named) -> Result<Self, PatternError> {
        Pattern::new(which.label(), which.graph())
    }

    pub fn basic(kind: BasicKind) -> Self {
        let g = make_basic(kind).expect("valid basic pattern");
        let name = g.name().unwrap_or("basic").to_string();
        Pattern::new(name, g).expect("basic patterns used as classes are small")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// Injective vertex map from a pattern into a host; `map[p]` is the host
/// image of pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and the induced condition.
    pub fn is_induced(&self, pattern: &Graph, host: &Graph) -> bool {
        let k = pattern.order();
        if self.map.len() != k || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        let distinct: HashSet<usize> = self.map.iter().copied().collect();
        if distinct.len() != k {
            return false;
        }
        (0..k).all(|a| (a + 1..k).all(|b| pattern.has_edge(a, b) == host.has_edge(self.map[a], self.map[b])))
    }

    pub fn image(&self, universe: usize) -> VertexSet {
        VertexSet::from_ids(universe, self.map.iter().copied())
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().enumerate().map(|(p, h)| format!("{p}->{h}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: VertexSet,
}

impl<'a> Search<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph) -> Self {
        let mut order: Vec<usize> = (0..pattern.order()).collect();
        order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));
        Search {
            host,
            pattern,
            order,
            image: vec![usize::MAX; pattern.order()],
            used: host.empty_set(),
        }
    }

    fn candidates(&self, depth: usize) -> VertexSet {
        let p = self.order[depth];
        let need = self.pattern.degree(p);
        let mut cand = self.host.vertex_set();
        cand.difference_with(&self.used);
        for &q in &self.order[..depth] {
            let h = self.image[q];
            if self.pattern.has_edge(p, q) {
                cand.intersect_with(self.host.neighbors(h));
            } else {
                cand.difference_with(self.host.neighbors(h));
            }
        }
        let mut out = self.host.empty_set();
        for v in &cand {
            if self.host.degree(v) >= need {
                out.insert(v);
            }
        }
        out
    }

    /// Visits embeddings in search order; the visitor returns `false` to stop.
    fn run(&mut self, depth: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.image);
        }
        let p = self.order[depth];
        for h in &self.candidates(depth) {
            self.image[p] = h;
            self.used.insert(h);
            let go_on = self.run(depth + 1, visit);
            self.used.remove(h);
            if !go_on {
                self.image[p] = usize::MAX;
                return false;
            }
        }
        self.image[p] = usize::MAX;
        true
    }
}

fn check_order(pattern: &Pattern) -> Result<(), PatternError> {
    if pattern.order() > MAX_PATTERN_ORDER {
        return Err(PatternError::TooLarge {
            name: pattern.name.clone(),
            order: pattern.order(),
        });
    }
    Ok(())
}

/// First induced occurrence of `pattern` in `host`, in search order.
pub fn find_induced(host: &Graph, pattern: &Pattern) -> Result<Option<Embedding>, PatternError> {
    check_order(pattern)?;
    Ok(find_induced_graph(host, &pattern.graph))
}

pub(crate) fn find_induced_graph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.order() > host.order() {
        return None;
    }
    let mut found = None;
    Search::new(host, pattern).run(0, &mut |img| {
        found = Some(Embedding { map: img.to_vec() });
        false
    });
    found
}

/// Number of distinct vertex sets inducing `pattern`, truncated at `cap`.
pub fn count_induced(host: &Graph, pattern: &Pattern, cap: usize) -> Result<usize, PatternError> {
    check_order(pattern)?;
    if cap == 0 || pattern.order() > host.order() {
        return Ok(0);
    }
    let mut seen: HashSet<VertexSet> = HashSet::new();
    Search::new(host, &pattern.graph).run(0, &mut |img| {
        seen.insert(VertexSet::from_ids(host.order(), img.iter().copied()));
        seen.len() < cap
    });
    Ok(seen.len())
}

/// The hereditary classes in scope. Every class except `P3P2` and
/// `TriangleFree` is `{P3 ∪ P2, X}`-free for the named `X`;
/// `TriangleFree` is `{P3 ∪ P2, C3}`-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassName {
    P3P2,
    KiteFree,
    HammerFree,
    C5Free,
    K4Free,
    P2K3Free,
    K1K3Free,
    TriangleFree,
}

impl ClassName {
    pub const ALL: [ClassName; 8] = [
        ClassName::P3P2,
        ClassName::KiteFree,
        ClassName::HammerFree,
        ClassName::C5Free,
        ClassName::K4Free,
        ClassName::P2K3Free,
        ClassName::K1K3Free,
        ClassName::TriangleFree,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ClassName::P3P2 => "p3p2",
            ClassName::KiteFree => "kitefree",
            ClassName::HammerFree => "hammerfree",
            ClassName::C5Free => "c5free",
            ClassName::K4Free => "k4free",
            ClassName::P2K3Free => "p2k3free",
            ClassName::K1K3Free => "k1k3free",
            ClassName::TriangleFree => "trianglefree",
        }
    }

    fn second_pattern(self) -> Option<Pattern> {
        let named = |n| Pattern::named(n).expect("catalog pattern");
        match self {
            ClassName::P3P2 => None,
            ClassName::KiteFree => Some(named(Named::Kite)),
            ClassName::HammerFree => Some(named(Named::Hammer)),
            ClassName::C5Free => Some(Pattern::basic(BasicKind::Cycle(5))),
            ClassName::K4Free => Some(Pattern::basic(BasicKind::Complete(4))),
            ClassName::P2K3Free => Some(named(Named::P2UnionK3)),
            ClassName::K1K3Free => Some(named(Named::K1UnionK3)),
            ClassName::TriangleFree => Some(Pattern::basic(BasicKind::Complete(3))),
        }
    }

    pub fn spec(self) -> ClassSpec {
        ClassSpec::of(self)
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ClassName {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        ClassName::ALL
            .into_iter()
            .find(|c| c.label() == key)
            .ok_or_else(|| PatternError::UnknownClass(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct ClassSpec {
    name: ClassName,
    forbidden: Vec<Pattern>,
}

impl ClassSpec {
    /// Forbidden patterns are kept in ascending (order, size) so membership
    /// checks try the cheapest rejections first.
    pub fn of(name: ClassName) -> Self {
        let mut forbidden = vec![Pattern::named(Named::P3UnionP2).expect("catalog pattern")];
        forbidden.extend(name.second_pattern());
        forbidden.sort_by_key(|p| (p.order(), p.graph.size()));
        ClassSpec { name, forbidden }
    }

    pub fn name(&self) -> ClassName {
        self.name
    }

    pub fn forbidden(&self) -> &[Pattern] {
        &self.forbidden
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    Violation { pattern: String, embedding: Embedding },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member)
    }
}

pub fn is_member(g: &Graph, cls: &ClassSpec) -> Membership {
    for p in &cls.forbidden {
        if let Some(embedding) = find_induced_graph(g, &p.graph) {
            return Membership::Violation {
                pattern: p.name.clone(),
                embedding,
            };
        }
    }
    Membership::Member
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    fn pat(n: Named) -> Pattern {
        Pattern::named(n).unwrap()
    }

    #[test]
    fn c5_has_no_p3_union_p2() {
        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        assert_eq!(find_induced(&c5, &pat(Named::P3UnionP2)).unwrap(), None);
    }

    #[test]
    fn kite_contains_diamond() {
        let kite = named_graph(Named::Kite);
        let e = find_induced(&kite, &pat(Named::Diamond)).unwrap().unwrap();
        assert!(e.is_induced(pat(Named::Diamond).graph(), &kite));
        let mut img = e.map.clone();
        img.sort();
        assert_eq!(img, vec![0, 1, 2, 3]);
    }

    #[test]
    fn grotzsch_is_triangle_free() {
        let g = named_graph(Named::Grotzsch);
        assert_eq!(find_induced(&g, &Pattern::basic(BasicKind::Complete(3))).unwrap(), None);
    }

    #[test]
    fn too_large_pattern_rejected() {
        let big = make_basic(BasicKind::Cycle(9)).unwrap();
        assert!(matches!(Pattern::new("C9", big), Err(PatternError::TooLarge { .. })));
    }

    #[test]
    fn counts() {
        let k3 = Pattern::basic(BasicKind::Complete(3));
        let k4 = make_basic(BasicKind::Complete(4)).unwrap();
        assert_eq!(count_induced(&k4, &k3, 100).unwrap(), 4);
        assert_eq!(count_induced(&named_graph(Named::TwoK3), &k3, 100).unwrap(), 2);
        assert_eq!(count_induced(&k4, &k3, 2).unwrap(), 2);
        let c5 = Pattern::basic(BasicKind::Cycle(5));
        assert!(count_induced(&named_graph(Named::Grotzsch), &c5, 1000).unwrap() > 0);
    }

    #[test]
    fn class_membership() {
        let s = named_graph(Named::SchlafliComplement);
        assert!(is_member(&s, &ClassName::K4Free.spec()).is_member());

        let c5 = make_basic(BasicKind::Cycle(5)).unwrap();
        match is_member(&c5, &ClassName::C5Free.spec()) {
            Membership::Violation { pattern, embedding } => {
                assert_eq!(pattern, "C5");
                assert!(embedding.is_induced(&c5, &c5));
            }
            Membership::Member => panic!("C5 is not C5-free"),
        }
    }

    #[test]
    fn class_names_parse() {
        assert_eq!("k4free".parse::<ClassName>().unwrap(), ClassName::K4Free);
        assert_eq!("Kite-Free".parse::<ClassName>().unwrap(), ClassName::KiteFree);
        assert!("petersenfree".parse::<ClassName>().is_err());
    }

    #[test]
    fn forbidden_sorted_by_size() {
        let spec = ClassName::K4Free.spec();
        assert_eq!(spec.forbidden()[0].name(), "K4");
        let spec = ClassName::C5Free.spec();
        assert_eq!(spec.forbidden()[0].name(), "p3_union_p2");
    }
}
