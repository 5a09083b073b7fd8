//! Tilings as perfect matchings of the region graph, their enumeration, and
//! the cycle cover formed by overlaying two of them.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Cycle, EdgeId, TilingGraph};

pub mod kasteleyn;

pub use kasteleyn::count_rectangle_kasteleyn;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("edge set {0} is not a perfect matching of the graph")]
    NotATiling(String),
    #[error("invalid tiling text `{0}`: expected comma-separated edge labels")]
    Parse(String),
}

/// A domino tiling: the sorted edge labels of a perfect matching.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    edges: Vec<EdgeId>,
}

impl Tiling {
    /// Wraps an edge set without checking it against a graph.
    pub fn from_edges(edges: impl IntoIterator<Item = EdgeId>) -> Tiling {
        let mut edges: Vec<EdgeId> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Tiling { edges }
    }

    /// Wraps an edge set, failing unless it is a perfect matching of `graph`.
    pub fn new(graph: &TilingGraph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Tiling, TilingError> {
        let tiling = Tiling::from_edges(edges);
        if tiling.is_perfect_matching(graph) {
            Ok(tiling)
        } else {
            Err(TilingError::NotATiling(tiling.to_string()))
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// The 0/1 edge vector of length `num_edges`.
    pub fn indicator(&self, num_edges: usize) -> Vec<u8> {
        let mut x = vec![0u8; num_edges];
        for e in &self.edges {
            x[e.0] = 1;
        }
        x
    }

    /// `A * x = 1`: every vertex is covered by exactly one edge.
    pub fn is_perfect_matching(&self, graph: &TilingGraph) -> bool {
        if self.edges.iter().any(|e| e.0 >= graph.num_edges()) {
            return false;
        }
        graph
            .degree_vector(self.edges.iter().map(|&e| (e, 1)))
            .iter()
            .all(|&d| d == 1)
    }

    /// The partner of `v` in this matching.
    pub fn partner(&self, graph: &TilingGraph, v: usize) -> Option<(usize, EdgeId)> {
        graph
            .neighbors(v)
            .iter()
            .copied()
            .find(|&(_, e)| self.contains(e))
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        f.write_str(&labels.join(","))
    }
}

impl FromStr for Tiling {
    type Err = TilingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tiling { edges: Vec::new() });
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .and_then(EdgeId::from_label)
                    .ok_or_else(|| TilingError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Tiling::from_edges)
    }
}

/// All tilings of the region, sorted lexicographically by edge labels.
/// Regions without a tiling give an empty list.
pub fn enumerate_tilings(graph: &TilingGraph) -> Vec<Tiling> {
    let mut out = Vec::new();
    let mut search = MatchingSearch::new(graph);
    if search.balanced() {
        search.run(&mut |edges| out.push(Tiling::from_edges(edges.iter().copied())));
    }
    out.sort_unstable();
    out
}

/// Number of tilings, without materializing them.
pub fn count_tilings(graph: &TilingGraph) -> u64 {
    let mut count = 0u64;
    let mut search = MatchingSearch::new(graph);
    if search.balanced() {
        search.run(&mut |_| count += 1);
    }
    count
}

/// Backtracking over perfect matchings, always branching on the uncovered
/// vertex with the fewest uncovered neighbors.
struct MatchingSearch<'g> {
    graph: &'g TilingGraph,
    covered: Vec<bool>,
    free_degree: Vec<usize>,
    chosen: Vec<EdgeId>,
    remaining: usize,
}

impl<'g> MatchingSearch<'g> {
    fn new(graph: &'g TilingGraph) -> Self {
        let n = graph.num_vertices();
        MatchingSearch {
            graph,
            covered: vec![false; n],
            free_degree: (0..n).map(|v| graph.degree(v)).collect(),
            chosen: Vec::with_capacity(n / 2),
            remaining: n,
        }
    }

    /// Equal parity classes are necessary for a perfect matching.
    fn balanced(&self) -> bool {
        let (even, odd) = self.graph.region().parity_counts();
        even == odd
    }

    fn cover(&mut self, v: usize) {
        self.covered[v] = true;
        self.remaining -= 1;
        for &(w, _) in self.graph.neighbors(v) {
            self.free_degree[w] -= 1;
        }
    }

    fn uncover(&mut self, v: usize) {
        self.covered[v] = false;
        self.remaining += 1;
        for &(w, _) in self.graph.neighbors(v) {
            self.free_degree[w] += 1;
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[EdgeId])) {
        if self.remaining == 0 {
            emit(&self.chosen);
            return;
        }
        let mut pivot = None;
        let mut best = usize::MAX;
        for v in 0..self.covered.len() {
            if !self.covered[v] && self.free_degree[v] < best {
                best = self.free_degree[v];
                pivot = Some(v);
                if best <= 1 {
                    break;
                }
            }
        }
        let Some(v) = pivot else { return };
        if best == 0 {
            return;
        }
        let graph = self.graph;
        for &(w, e) in graph.neighbors(v) {
            if self.covered[w] {
                continue;
            }
            self.cover(v);
            self.cover(w);
            self.chosen.push(e);
            self.run(emit);
            self.chosen.pop();
            self.uncover(w);
            self.uncover(v);
        }
    }
}

/// Which of the two overlaid tilings an edge comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    First,
    Second,
}

/// One cycle of `T1 ∪ T2` with the origin of each edge.
///
/// The walk starts at the cycle's smallest vertex with its first-tiling
/// edge, so colors alternate `First, Second, First, ...`. A shared domino
/// is a 2-cycle whose edge appears once in each color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCycle {
    pub cycle: Cycle,
    pub colors: Vec<Color>,
}

impl CoverCycle {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_doubled_edge(&self) -> bool {
        self.cycle.len() == 2
    }

    pub fn edges_of(&self, color: Color) -> Vec<EdgeId> {
        self.cycle
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, &c)| c == color)
            .map(|(&e, _)| e)
            .collect()
    }
}

/// The decomposition of `T1 ∪ T2` (as a multigraph) into disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCover {
    pub cycles: Vec<CoverCycle>,
}

impl CycleCover {
    /// Cycles longer than 2, i.e. where the tilings actually differ.
    pub fn nontrivial(&self) -> impl Iterator<Item = &CoverCycle> + '_ {
        self.cycles.iter().filter(|c| !c.is_doubled_edge())
    }

    /// One line per cycle: first-tiling edges, `|`, second-tiling edges.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for c in &self.cycles {
            let join = |edges: Vec<EdgeId>| {
                edges.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
            };
            out.push_str(&format!(
                "{} | {}\n",
                join(c.edges_of(Color::First)),
                join(c.edges_of(Color::Second))
            ));
        }
        out
    }
}

/// Overlays two tilings of `graph` and splits the union into its cycles,
/// ordered by smallest vertex.
pub fn cycle_cover(graph: &TilingGraph, t1: &Tiling, t2: &Tiling) -> Result<CycleCover, TilingError> {
    for t in [t1, t2] {
        if !t.is_perfect_matching(graph) {
            return Err(TilingError::NotATiling(t.to_string()));
        }
    }
    let n = graph.num_vertices();
    let mate = |t: &Tiling| {
        let mut m = vec![(usize::MAX, EdgeId(usize::MAX)); n];
        for &e in t.edges() {
            let (a, b) = graph.endpoints(e);
            m[a] = (b, e);
            m[b] = (a, e);
        }
        m
    };
    let (m1, m2) = (mate(t1), mate(t2));
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut colors = Vec::new();
        let mut v = start;
        let mut color = Color::First;
        loop {
            seen[v] = true;
            vertices.push(v);
            let (next, e) = match color {
                Color::First => m1[v],
                Color::Second => m2[v],
            };
            edges.push(e);
            colors.push(color);
            color = match color {
                Color::First => Color::Second,
                Color::Second => Color::First,
            };
            v = next;
            if v == start {
                break;
            }
        }
        cycles.push(CoverCycle {
            cycle: Cycle::from_parts(vertices, edges),
            colors,
        });
    }
    Ok(CycleCover { cycles })
}

/// Edges of `t1` not in `t2`.
pub fn symmetric_part(t1: &Tiling, t2: &Tiling) -> Vec<EdgeId> {
    let other: HashSet<EdgeId> = t2.edges().iter().copied().collect();
    t1.edges().iter().copied().filter(|e| !other.contains(e)).collect()
}
