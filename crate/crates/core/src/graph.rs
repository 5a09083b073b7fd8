//! The adjacency graph of a region: one vertex per cell, one edge per pair
//! of cells sharing an (n-1)-face.
//!
//! Vertices are the cells in lexicographic coordinate order and edges are
//! sorted by their (smaller, larger) endpoint pair, so labels are a pure
//! function of the region. Labels are printed 1-based (`y1`, `e1`, `v1`)
//! while [`EdgeId`] and vertex indices are 0-based internally.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::region::{Cell, Region};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex sequence is not a cycle of the graph: {0}")]
    InvalidCycle(String),
}

/// Index of an edge of a [`TilingGraph`]; displays as its 1-based label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn from_label(label: usize) -> Option<EdgeId> {
        label.checked_sub(1).map(EdgeId)
    }

    pub fn label(self) -> usize {
        self.0 + 1
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// `G_R` with canonical labels.
#[derive(Clone, Debug)]
pub struct TilingGraph {
    region: Region,
    vertices: Vec<Cell>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, EdgeId)>>,
    vertex_index: HashMap<Cell, usize>,
    edge_index: HashMap<(usize, usize), EdgeId>,
}

impl TilingGraph {
    pub fn new(region: &Region) -> TilingGraph {
        let vertices: Vec<Cell> = region.cells().cloned().collect();
        let vertex_index: HashMap<Cell, usize> =
            vertices.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

        // Moving up along an axis increases the lexicographic rank, so every
        // pair comes out as (smaller, larger).
        let mut edges = Vec::new();
        for (i, cell) in vertices.iter().enumerate() {
            for axis in 0..region.dim() {
                if let Some(&j) = vertex_index.get(&cell.shifted(axis, 1)) {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();

        let mut adjacency = vec![Vec::new(); vertices.len()];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (e, &(a, b)) in edges.iter().enumerate() {
            adjacency[a].push((b, EdgeId(e)));
            adjacency[b].push((a, EdgeId(e)));
            edge_index.insert((a, b), EdgeId(e));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        TilingGraph {
            region: region.clone(),
            vertices,
            edges,
            adjacency,
            vertex_index,
            edge_index,
        }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn dim(&self) -> usize {
        self.region.dim()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Cell] {
        &self.vertices
    }

    pub fn cell(&self, v: usize) -> &Cell {
        &self.vertices[v]
    }

    pub fn vertex_of(&self, cell: &Cell) -> Option<usize> {
        self.vertex_index.get(cell).copied()
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    /// Endpoints `(a, b)` with `a < b`.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    /// Neighbors of `v` with the connecting edge, sorted by neighbor index.
    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<EdgeId> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.edge_between(a, b).is_some()
    }

    /// The axis along which edge `e` runs.
    pub fn edge_axis(&self, e: EdgeId) -> usize {
        let (a, b) = self.edges[e.0];
        let (ca, cb) = (self.vertices[a].coords(), self.vertices[b].coords());
        (0..ca.len()).find(|&i| ca[i] != cb[i]).expect("edge joins distinct cells")
    }

    /// Vertex-edge incidence matrix `A` (V rows, E columns).
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.edges.len()]; self.vertices.len()];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            a[u][e] = 1;
            a[v][e] = 1;
        }
        a
    }

    /// `A * x` for a sparse exponent vector given as (edge, multiplicity) pairs.
    pub fn degree_vector(&self, exponents: impl IntoIterator<Item = (EdgeId, u32)>) -> Vec<u32> {
        let mut degrees = vec![0u32; self.vertices.len()];
        for (e, k) in exponents {
            let (a, b) = self.edges[e.0];
            degrees[a] += k;
            degrees[b] += k;
        }
        degrees
    }

    /// Checks the bipartition by coordinate-sum parity: every edge joins an
    /// even cell to an odd one.
    pub fn is_bipartite(&self) -> bool {
        self.edges
            .iter()
            .all(|&(a, b)| self.vertices[a].is_even() != self.vertices[b].is_even())
    }

    /// Debug dump: `vertices V edges E`, then `e<i>: v<a> v<b>` per edge.
    pub fn dump(&self) -> String {
        let mut out = format!("vertices {} edges {}\n", self.num_vertices(), self.num_edges());
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            out.push_str(&format!("e{}: v{} v{}\n", e + 1, a + 1, b + 1));
        }
        out
    }

    /// All chordless cycles of length at most `max_length` (unbounded when
    /// `None`), canonically rotated and sorted by (length, edge labels).
    ///
    /// Each cycle is grown from its smallest vertex `s` as an induced path
    /// whose interior vertices all exceed `s`; a path is only extended by
    /// vertices that see no interior path vertex, so every closed path is
    /// chordless by construction.
    pub fn chordless_cycles(&self, max_length: Option<usize>) -> Vec<Cycle> {
        let limit = max_length.unwrap_or(usize::MAX);
        let mut found = BTreeSet::new();
        if limit < 4 {
            return Vec::new();
        }
        let n = self.num_vertices();
        // blocked[w] counts interior path vertices (neither the start nor
        // the tip) adjacent to w.
        let mut blocked = vec![0u32; n];
        let mut on_path = vec![false; n];
        let mut path = Vec::new();
        for s in 0..n {
            on_path[s] = true;
            path.push(s);
            for &(p1, _) in self.neighbors(s) {
                if p1 < s {
                    continue;
                }
                on_path[p1] = true;
                path.push(p1);
                self.extend_induced_path(s, &mut path, &mut on_path, &mut blocked, limit, &mut found);
                path.pop();
                on_path[p1] = false;
            }
            path.pop();
            on_path[s] = false;
        }
        let mut cycles: Vec<Cycle> = found.into_iter().map(|(_, c)| c).collect();
        cycles.sort_by(|a, b| (a.len(), &a.edges).cmp(&(b.len(), &b.edges)));
        cycles
    }

    fn extend_induced_path(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        blocked: &mut [u32],
        limit: usize,
        found: &mut BTreeSet<(Vec<EdgeId>, Cycle)>,
    ) {
        let tip = *path.last().expect("path has a tip");
        let first = path[1];
        for &(w, _) in self.neighbors(tip) {
            if w <= start || on_path[w] || blocked[w] > 0 {
                continue;
            }
            if self.is_adjacent(w, start) {
                // The cycle closes at w. Requiring first < w keeps one of
                // the two traversal directions.
                if path.len() >= 3 && first < w && path.len() < limit {
                    let mut vertices = path.clone();
                    vertices.push(w);
                    let cycle = Cycle::from_vertices_unchecked(self, vertices).canonical();
                    found.insert((cycle.edges.clone(), cycle));
                }
                continue;
            }
            if path.len() + 1 >= limit {
                continue;
            }
            // The old tip becomes an interior vertex: its neighbors can no
            // longer join the path.
            for &(x, _) in self.neighbors(tip) {
                blocked[x] += 1;
            }
            on_path[w] = true;
            path.push(w);
            self.extend_induced_path(start, path, on_path, blocked, limit, found);
            path.pop();
            on_path[w] = false;
            for &(x, _) in self.neighbors(tip) {
                blocked[x] -= 1;
            }
        }
    }

    /// Edges joining two vertices of `cycle` that are not on it, flagged
    /// `even` when they split the cycle into two even cycles.
    pub fn chords(&self, cycle: &Cycle) -> Result<Vec<Chord>, GraphError> {
        cycle.validate(self)?;
        let position: HashMap<usize, usize> =
            cycle.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let on_cycle: BTreeSet<EdgeId> = cycle.edges.iter().copied().collect();
        let mut chords = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            let edge = EdgeId(e);
            if on_cycle.contains(&edge) {
                continue;
            }
            if let (Some(&i), Some(&j)) = (position.get(&a), position.get(&b)) {
                chords.push(Chord {
                    edge,
                    even: i.abs_diff(j) % 2 == 1,
                });
            }
        }
        Ok(chords)
    }
}

/// A chord of a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chord {
    pub edge: EdgeId,
    pub even: bool,
}

/// A closed walk visiting each of its vertices once.
///
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`. A 2-cycle
/// (a doubled edge, as produced by two tilings sharing a domino) has two
/// vertices and the same edge twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
}

impl Cycle {
    /// Builds a cycle from its vertex sequence, checking every step is an edge.
    pub fn from_vertices(graph: &TilingGraph, vertices: Vec<usize>) -> Result<Cycle, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::InvalidCycle(format!(
                "{} vertices is too short for a simple cycle",
                vertices.len()
            )));
        }
        let distinct: BTreeSet<usize> = vertices.iter().copied().collect();
        if distinct.len() != vertices.len() {
            return Err(GraphError::InvalidCycle("repeated vertex".into()));
        }
        let n = vertices.len();
        let mut edges = Vec::with_capacity(n);
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            let e = graph
                .edge_between(a, b)
                .ok_or_else(|| GraphError::InvalidCycle(format!("v{} and v{} are not adjacent", a + 1, b + 1)))?;
            edges.push(e);
        }
        Ok(Cycle { vertices, edges })
    }

    fn from_vertices_unchecked(graph: &TilingGraph, vertices: Vec<usize>) -> Cycle {
        let n = vertices.len();
        let edges = (0..n)
            .map(|i| {
                graph
                    .edge_between(vertices[i], vertices[(i + 1) % n])
                    .expect("consecutive path vertices are adjacent")
            })
            .collect();
        Cycle { vertices, edges }
    }

    /// The 2-cycle formed by doubling edge `e`.
    pub fn doubled_edge(graph: &TilingGraph, e: EdgeId) -> Cycle {
        let (a, b) = graph.endpoints(e);
        Cycle {
            vertices: vec![a, b],
            edges: vec![e, e],
        }
    }

    pub(crate) fn from_parts(vertices: Vec<usize>, edges: Vec<EdgeId>) -> Cycle {
        debug_assert_eq!(vertices.len(), edges.len());
        Cycle { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Edges at even positions of the walk (0, 2, 4, ...).
    pub fn even_edges(&self) -> Vec<EdgeId> {
        self.edges.iter().step_by(2).copied().collect()
    }

    /// Edges at odd positions of the walk (1, 3, 5, ...).
    pub fn odd_edges(&self) -> Vec<EdgeId> {
        self.edges.iter().skip(1).step_by(2).copied().collect()
    }

    /// The rotation/reflection starting at the smallest edge label and
    /// continuing towards the smaller of its two neighbors on the cycle.
    pub fn canonical(&self) -> Cycle {
        let n = self.edges.len();
        if n <= 2 {
            return self.clone();
        }
        let (k, _) = self
            .edges
            .iter()
            .enumerate()
            .min_by_key(|(_, e)| **e)
            .expect("cycle has edges");
        let forward = self.edges[(k + 1) % n];
        let backward = self.edges[(k + n - 1) % n];
        if forward <= backward {
            // edges[k] joins vertices[k] -> vertices[k+1]
            Cycle {
                vertices: (0..n).map(|i| self.vertices[(k + i) % n]).collect(),
                edges: (0..n).map(|i| self.edges[(k + i) % n]).collect(),
            }
        } else {
            // Walk backwards starting with edges[k] traversed vertices[k+1] -> vertices[k].
            Cycle {
                vertices: (0..n).map(|i| self.vertices[(k + 1 + n - i) % n]).collect(),
                edges: (0..n).map(|i| self.edges[(k + n - i) % n]).collect(),
            }
        }
    }

    /// Checks that this is a cycle of `graph`.
    pub fn validate(&self, graph: &TilingGraph) -> Result<(), GraphError> {
        let n = self.vertices.len();
        if n != self.edges.len() || n < 2 {
            return Err(GraphError::InvalidCycle("malformed vertex/edge lists".into()));
        }
        if self.vertices.iter().any(|&v| v >= graph.num_vertices())
            || self.edges.iter().any(|e| e.0 >= graph.num_edges())
        {
            return Err(GraphError::InvalidCycle("index out of range".into()));
        }
        let distinct: BTreeSet<usize> = self.vertices.iter().copied().collect();
        if distinct.len() != n {
            return Err(GraphError::InvalidCycle("repeated vertex".into()));
        }
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            if graph.edge_between(a, b) != Some(self.edges[i]) {
                return Err(GraphError::InvalidCycle(format!(
                    "edge e{} does not join v{} and v{}",
                    self.edges[i].label(),
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", labels.join(" "))
    }
}
