//! Moves between tilings and the fiber graph they induce on a tiling space.
//!
//! A move swaps the alternate edges of an even cycle. Move sets are built
//! from cycles of the region graph: 4-cycles give flips, chordless 6-cycles
//! give trits, and all chordless cycles together form a set that connects
//! every tiling space.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Cycle, EdgeId, TilingGraph};
use crate::tiling::{enumerate_tilings, Tiling};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("inapplicable move")]
    Inapplicable,
    #[error("tilings are not connected by the given moves")]
    NotConnected,
    #[error("region has no tiling")]
    Untileable,
    #[error("unknown move set `{0}` (expected flip, flip+trit or cycles)")]
    UnknownMoveSet(String),
}

/// `(D1, D2)`: remove the dominoes `D1`, add the dominoes `D2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    remove: Vec<EdgeId>,
    add: Vec<EdgeId>,
}

impl Move {
    /// The move along an even cycle, removing its even-position edges.
    pub fn from_cycle(cycle: &Cycle) -> Move {
        let mut remove = cycle.even_edges();
        let mut add = cycle.odd_edges();
        remove.sort_unstable();
        add.sort_unstable();
        Move { remove, add }
    }

    pub fn new(remove: Vec<EdgeId>, add: Vec<EdgeId>) -> Move {
        let (mut remove, mut add) = (remove, add);
        remove.sort_unstable();
        add.sort_unstable();
        Move { remove, add }
    }

    pub fn remove(&self) -> &[EdgeId] {
        &self.remove
    }

    pub fn add(&self) -> &[EdgeId] {
        &self.add
    }

    /// `d` for a move on a cycle of length `2d`.
    pub fn size(&self) -> usize {
        self.remove.len()
    }

    pub fn reversed(&self) -> Move {
        Move {
            remove: self.add.clone(),
            add: self.remove.clone(),
        }
    }

    /// Whether the forward direction applies to `t`.
    pub fn applies_to(&self, t: &Tiling) -> bool {
        self.remove.iter().all(|&e| t.contains(e)) && self.add.iter().all(|&e| !t.contains(e))
    }

    /// `t + M = (t \ D1) ∪ D2`.
    pub fn apply(&self, t: &Tiling) -> Result<Tiling, MoveError> {
        if !self.applies_to(t) {
            return Err(MoveError::Inapplicable);
        }
        Ok(Tiling::from_edges(
            t.edges()
                .iter()
                .copied()
                .filter(|e| self.remove.binary_search(e).is_err())
                .chain(self.add.iter().copied()),
        ))
    }

    /// Applies the move in whichever direction fits, if any.
    pub fn apply_either(&self, t: &Tiling) -> Option<(Tiling, Direction)> {
        if let Ok(next) = self.apply(t) {
            return Some((next, Direction::Forward));
        }
        self.reversed().apply(t).ok().map(|next| (next, Direction::Backward))
    }

    pub fn oriented(&self, direction: Direction) -> Move {
        match direction {
            Direction::Forward => self.clone(),
            Direction::Backward => self.reversed(),
        }
    }
}

/// Applies `m` to `t`; fails with [`MoveError::Inapplicable`] unless
/// `D1 ⊆ t` and `D2 ∩ t = ∅`.
pub fn apply_move(t: &Tiling, m: &Move) -> Result<Tiling, MoveError> {
    m.apply(t)
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |edges: &[EdgeId]| edges.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "-{{{}}} +{{{}}}", join(&self.remove), join(&self.add))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Flip,
    FlipTrit,
    Cycles,
}

impl FromStr for MoveKind {
    type Err = MoveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "flip" | "flips" => Ok(MoveKind::Flip),
            "flip+trit" => Ok(MoveKind::FlipTrit),
            "cycles" => Ok(MoveKind::Cycles),
            other => Err(MoveError::UnknownMoveSet(other.to_string())),
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Flip => "flip",
            MoveKind::FlipTrit => "flip+trit",
            MoveKind::Cycles => "cycles",
        })
    }
}

/// One size-2 move per 4-cycle.
pub fn flip_moves(graph: &TilingGraph) -> Vec<Move> {
    graph.chordless_cycles(Some(4)).iter().map(Move::from_cycle).collect()
}

/// One size-3 move per chordless 6-cycle.
pub fn trit_moves(graph: &TilingGraph) -> Vec<Move> {
    graph
        .chordless_cycles(Some(6))
        .iter()
        .filter(|c| c.len() == 6)
        .map(Move::from_cycle)
        .collect()
}

/// One move per chordless cycle.
pub fn cycle_moves(graph: &TilingGraph) -> Vec<Move> {
    graph.chordless_cycles(None).iter().map(Move::from_cycle).collect()
}

pub fn move_set(graph: &TilingGraph, kind: MoveKind) -> Vec<Move> {
    match kind {
        MoveKind::Flip => flip_moves(graph),
        MoveKind::FlipTrit => {
            let mut moves = flip_moves(graph);
            moves.extend(trit_moves(graph));
            moves
        }
        MoveKind::Cycles => cycle_moves(graph),
    }
}

/// An arc of the fiber graph: `moves[via]` takes `nodes[from]` to `nodes[to]`
/// in the recorded direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub via: usize,
    pub direction: Direction,
}

/// The graph on a tiling space whose arcs are single moves.
#[derive(Clone, Debug)]
pub struct FiberGraph {
    pub nodes: Vec<Tiling>,
    pub moves: Vec<Move>,
    pub arcs: Vec<Arc>,
    adjacency: Vec<Vec<usize>>,
}

impl FiberGraph {
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn index_of(&self, t: &Tiling) -> Option<usize> {
        self.nodes.binary_search(t).ok().or_else(|| self.nodes.iter().position(|n| n == t))
    }

    /// Component id per node, numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.nodes.len()];
        let mut next = 0;
        for root in 0..self.nodes.len() {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = next;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Shortest path in the fiber graph, ties broken towards smaller node
    /// indices. Returns the node sequence including both ends.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.nodes.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &w in &self.adjacency[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }
}

/// Builds the fiber graph of `moves` over `tilings`. Moves are tried in
/// both directions; targets outside `tilings` are ignored.
pub fn fiber_graph(tilings: &[Tiling], moves: &[Move]) -> FiberGraph {
    let index: HashMap<&Tiling, usize> = tilings.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut arcs: Vec<Arc> = tilings
        .par_iter()
        .enumerate()
        .flat_map_iter(|(from, t)| {
            let index = &index;
            moves.iter().enumerate().filter_map(move |(via, m)| {
                let (next, direction) = m.apply_either(t)?;
                index.get(&next).map(|&to| Arc {
                    from,
                    to,
                    via,
                    direction,
                })
            })
        })
        .collect();
    arcs.sort_unstable();
    let mut adjacency = vec![Vec::new(); tilings.len()];
    for arc in &arcs {
        adjacency[arc.from].push(arc.to);
    }
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
    }
    FiberGraph {
        nodes: tilings.to_vec(),
        moves: moves.to_vec(),
        arcs,
        adjacency,
    }
}

/// Connectivity verdict for a move set on a region's tiling space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub move_set: MoveKind,
    pub connected: bool,
    pub components: usize,
    pub max_move_size: usize,
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "components={} move_set={} max_move_size={}",
            self.components, self.move_set, self.max_move_size
        )
    }
}

/// Decides whether `kind` moves connect the tiling space of `graph`.
pub fn is_connected_by(graph: &TilingGraph, kind: MoveKind) -> Result<Connectivity, MoveError> {
    let tilings = enumerate_tilings(graph);
    if tilings.is_empty() {
        return Err(MoveError::Untileable);
    }
    let moves = move_set(graph, kind);
    let fiber = fiber_graph(&tilings, &moves);
    let components = fiber.component_count();
    Ok(Connectivity {
        move_set: kind,
        connected: components == 1,
        components,
        max_move_size: moves.iter().map(Move::size).max().unwrap_or(0),
    })
}

/// A shortest sequence of moves (each oriented as applied) from `t1` to
/// `t2`. Neighbors are explored in tiling order so the result is
/// deterministic.
pub fn connection_path(t1: &Tiling, t2: &Tiling, moves: &[Move]) -> Result<Vec<Move>, MoveError> {
    if t1 == t2 {
        return Ok(Vec::new());
    }
    let mut parent: HashMap<Tiling, Option<(Tiling, Move)>> = HashMap::from([(t1.clone(), None)]);
    let mut queue = VecDeque::from([t1.clone()]);
    while let Some(t) = queue.pop_front() {
        let mut next: Vec<(Tiling, Move)> = moves
            .iter()
            .filter_map(|m| m.apply_either(&t).map(|(n, d)| (n, m.oriented(d))))
            .collect();
        next.sort();
        for (n, m) in next {
            if parent.contains_key(&n) {
                continue;
            }
            parent.insert(n.clone(), Some((t.clone(), m)));
            if &n == t2 {
                let mut path = Vec::new();
                let mut cur = n;
                while let Some(Some((prev, m))) = parent.get(&cur) {
                    path.push(m.clone());
                    cur = prev.clone();
                }
                path.reverse();
                return Ok(path);
            }
            queue.push_back(n);
        }
    }
    Err(MoveError::NotConnected)
}
