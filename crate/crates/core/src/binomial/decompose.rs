//! Writing `y^{T1} - y^{T2}` as a combination of cycle binomials, and for
//! simply connected planar regions as a combination of flips only.
//!
//! The flip version builds an explicit path of tilings `T1 = X_0, ..., X_k = T2`
//! in which consecutive tilings differ by one flip; the certificate is then
//! the telescoping sum of the steps.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use super::certificate::{verify_certificate, CertificateMismatch, DecompositionCertificate, GeneratorKind, Sign};
use super::{binomial_of_tilings, Binomial, Monomial};
use crate::graph::{EdgeId, TilingGraph};
use crate::region::RegionError;
use crate::tiling::{cycle_cover, Color, Tiling, TilingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("flip decomposition needs a planar region, got dimension {0}")]
    NotPlanar(usize),
    #[error("flip decomposition needs a simply connected region")]
    NotSimplyConnected,
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error("no reducing flip found for a cycle of length {0}")]
    Stuck(usize),
    #[error("gave up after {0} reduction steps")]
    StepLimit(usize),
    #[error("internal certificate check failed: {0}")]
    Verification(#[from] CertificateMismatch),
}

/// Certificate `y^{T1} - y^{T2} = sum_i m_i * B_{C_i}` over the nontrivial
/// cycles `C_i` of `T1 ∪ T2`, where `B_C` is first-tiling edges minus
/// second-tiling edges of `C` and `m_i` is the monomial of the tiling
/// reached after swapping `C_1, ..., C_{i-1}`, with `C_i`'s edges removed.
pub fn cycle_decomposition(
    graph: &TilingGraph,
    t1: &Tiling,
    t2: &Tiling,
) -> Result<DecompositionCertificate, DecompositionError> {
    let cover = cycle_cover(graph, t1, t2)?;
    let mut cert = DecompositionCertificate::new(binomial_of_tilings(t1, t2));
    let mut current: BTreeSet<EdgeId> = t1.edges().iter().copied().collect();
    for c in cover.nontrivial() {
        let first = c.edges_of(Color::First);
        let second = c.edges_of(Color::Second);
        for e in &first {
            current.remove(e);
        }
        let kind = if c.len() == 4 {
            GeneratorKind::Flip
        } else {
            GeneratorKind::Cycle
        };
        cert.push(
            Sign::Plus,
            Monomial::from_edges(current.iter().copied()),
            Binomial::new(Monomial::from_edges(first), Monomial::from_edges(second.iter().copied())),
            kind,
        );
        current.extend(second);
    }
    Ok(cert)
}

/// A sequence of tilings from `t1` to `t2`, consecutive ones differing by a
/// single flip. Requires a simply connected planar region.
pub fn flip_path(graph: &TilingGraph, t1: &Tiling, t2: &Tiling) -> Result<Vec<Tiling>, DecompositionError> {
    if graph.dim() != 2 {
        return Err(DecompositionError::NotPlanar(graph.dim()));
    }
    if !graph.region().is_simply_connected()? {
        return Err(DecompositionError::NotSimplyConnected);
    }
    for t in [t1, t2] {
        if !t.is_perfect_matching(graph) {
            return Err(TilingError::NotATiling(t.to_string()).into());
        }
    }
    let mut planar = Planar::new(graph);
    let s = planar.mate_of(t1);
    let t = planar.mate_of(t2);
    let mut out = vec![s.clone()];
    planar.connect(&s, &t, &mut out)?;
    Ok(out.iter().map(|m| planar.tiling_of(m)).collect())
}

/// Telescoping certificate of a flip path.
pub fn certificate_from_path(path: &[Tiling]) -> DecompositionCertificate {
    let target = match (path.first(), path.last()) {
        (Some(a), Some(b)) => binomial_of_tilings(a, b),
        _ => Binomial::zero(),
    };
    let mut cert = DecompositionCertificate::new(target);
    for step in path.windows(2) {
        let (x, y) = (&step[0], &step[1]);
        let gone: Vec<EdgeId> = x.edges().iter().copied().filter(|&e| !y.contains(e)).collect();
        let came: Vec<EdgeId> = y.edges().iter().copied().filter(|&e| !x.contains(e)).collect();
        let rest = Monomial::from_edges(x.edges().iter().copied().filter(|&e| y.contains(e)));
        let forward = Binomial::new(Monomial::from_edges(gone), Monomial::from_edges(came));
        let generator = forward.canonical();
        let sign = if generator == forward { Sign::Plus } else { Sign::Minus };
        cert.push(sign, rest, generator, GeneratorKind::Flip);
    }
    cert
}

/// Certificate of `y^{T1} - y^{T2}` using flip binomials only, checked
/// against the graph before it is returned.
pub fn quadratic_decomposition(
    graph: &TilingGraph,
    t1: &Tiling,
    t2: &Tiling,
) -> Result<DecompositionCertificate, DecompositionError> {
    let path = flip_path(graph, t1, t2)?;
    let cert = certificate_from_path(&path);
    verify_certificate(&cert, Some(graph))?;
    Ok(cert)
}

/// `mate[v]` is the vertex matched with `v`.
type Mate = Vec<usize>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Source,
    Target,
}

enum Reduction {
    /// Replace the two dominoes `(a, b)`, `(c, d)` of one side by `(a, c)`, `(b, d)`.
    Flip(Side, (usize, usize), (usize, usize)),
    /// Pass through an intermediate tiling.
    Split(Mate),
}

const EAST: (i64, i64) = (1, 0);
const WEST: (i64, i64) = (-1, 0);
const NORTH: (i64, i64) = (0, 1);
const SOUTH: (i64, i64) = (0, -1);

struct Planar<'g> {
    graph: &'g TilingGraph,
    coords: Vec<(i64, i64)>,
    grid: HashMap<(i64, i64), usize>,
    steps: usize,
    limit: usize,
}

impl<'g> Planar<'g> {
    fn new(graph: &'g TilingGraph) -> Planar<'g> {
        let coords: Vec<(i64, i64)> = graph
            .vertices()
            .iter()
            .map(|c| (c.coords()[0], c.coords()[1]))
            .collect();
        let grid = coords.iter().enumerate().map(|(v, &p)| (p, v)).collect();
        let n = graph.num_vertices();
        Planar {
            graph,
            coords,
            grid,
            steps: 0,
            limit: 4 * n * n + 64,
        }
    }

    fn at(&self, v: usize, (dx, dy): (i64, i64)) -> Option<usize> {
        let (x, y) = self.coords[v];
        self.grid.get(&(x + dx, y + dy)).copied()
    }

    fn mate_of(&self, t: &Tiling) -> Mate {
        let mut mate = vec![usize::MAX; self.graph.num_vertices()];
        for &e in t.edges() {
            let (a, b) = self.graph.endpoints(e);
            mate[a] = b;
            mate[b] = a;
        }
        mate
    }

    fn tiling_of(&self, mate: &Mate) -> Tiling {
        Tiling::from_edges(
            (0..mate.len())
                .filter(|&v| v < mate[v])
                .map(|v| self.graph.edge_between(v, mate[v]).expect("matched cells are adjacent")),
        )
    }

    /// Nontrivial cycles of `s ∪ t`, each as a vertex sequence starting with
    /// an `s` edge.
    fn cycles(&self, s: &Mate, t: &Mate) -> Vec<Vec<usize>> {
        let mut seen = vec![false; s.len()];
        let mut out = Vec::new();
        for start in 0..s.len() {
            if seen[start] || s[start] == t[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            loop {
                seen[v] = true;
                cycle.push(v);
                let w = if cycle.len() % 2 == 1 { s[v] } else { t[v] };
                if w == start {
                    break;
                }
                v = w;
            }
            out.push(cycle);
        }
        out
    }

    fn tick(&mut self) -> Result<(), DecompositionError> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(DecompositionError::StepLimit(self.limit));
        }
        Ok(())
    }

    /// Appends the tilings strictly after `s` up to and including `t`.
    fn connect(&mut self, s: &Mate, t: &Mate, out: &mut Vec<Mate>) -> Result<(), DecompositionError> {
        self.tick()?;
        let cycles = self.cycles(s, t);
        if let [cycle] = cycles.as_slice() {
            return self.connect_cycle(s, t, cycle, out);
        }
        let mut current = s.clone();
        for cycle in &cycles {
            let mut next = current.clone();
            for &v in cycle {
                next[v] = t[v];
            }
            self.connect_cycle(&current, &next, cycle, out)?;
            current = next;
        }
        Ok(())
    }

    /// `s` and `t` differ exactly on `cycle`.
    fn connect_cycle(
        &mut self,
        s: &Mate,
        t: &Mate,
        cycle: &[usize],
        out: &mut Vec<Mate>,
    ) -> Result<(), DecompositionError> {
        if cycle.len() == 4 {
            out.push(t.clone());
            return Ok(());
        }
        let mut on_cycle = vec![false; s.len()];
        for &v in cycle {
            on_cycle[v] = true;
        }
        let interior: Vec<usize> = (0..s.len())
            .filter(|&v| !on_cycle[v] && self.inside(cycle, v))
            .collect();
        let reduction = if interior.is_empty() {
            self.reduce_corner(s, t, cycle)
        } else {
            self.reduce_interior(s, t, &on_cycle, &interior)
        }
        .ok_or(DecompositionError::Stuck(cycle.len()))?;

        match reduction {
            Reduction::Flip(side, p, q) => {
                let flipped = |m: &Mate| {
                    let mut m = m.clone();
                    flip(&mut m, p, q);
                    m
                };
                match side {
                    Side::Source => {
                        let s2 = flipped(s);
                        out.push(s2.clone());
                        self.connect(&s2, t, out)
                    }
                    Side::Target => {
                        let t2 = flipped(t);
                        self.connect(s, &t2, out)?;
                        out.push(t.clone());
                        Ok(())
                    }
                }
            }
            Reduction::Split(mid) => {
                self.connect(s, &mid, out)?;
                self.connect(&mid, t, out)
            }
        }
    }

    /// Crossing-number test of the cell against the cycle drawn through cell
    /// centers, counting vertical segments to the east.
    fn inside(&self, cycle: &[usize], v: usize) -> bool {
        let (px, py) = self.coords[v];
        let mut crossings = 0;
        for i in 0..cycle.len() {
            let (x1, y1) = self.coords[cycle[i]];
            let (x2, y2) = self.coords[cycle[(i + 1) % cycle.len()]];
            if x1 == x2 && x1 > px && y1.min(y2) <= py && py < y1.max(y2) {
                crossings += 1;
            }
        }
        crossings % 2 == 1
    }

    fn owner(s: &Mate, t: &Mate, a: usize, b: usize) -> Option<Side> {
        if s[a] == b {
            Some(Side::Source)
        } else if t[a] == b {
            Some(Side::Target)
        } else {
            None
        }
    }

    /// The cycle encloses cells, all covered by dominoes common to `s` and
    /// `t`. Either a cycle edge runs parallel to an enclosed domino (one flip
    /// absorbs it into the cycle), or a flip elsewhere on the cycle creates
    /// such an edge.
    fn reduce_interior(&self, s: &Mate, t: &Mate, on_cycle: &[bool], interior: &[usize]) -> Option<Reduction> {
        let dominoes: Vec<(usize, usize)> = interior
            .iter()
            .filter(|&&a| a < s[a])
            .map(|&a| (a, s[a]))
            .collect();
        let horizontal = |&(a, b): &(usize, usize)| self.coords[a].1 == self.coords[b].1;
        let both_on = |c: Option<usize>, d: Option<usize>| match (c, d) {
            (Some(c), Some(d)) if on_cycle[c] && on_cycle[d] => Some((c, d)),
            _ => None,
        };

        for dom in &dominoes {
            let sides = if horizontal(dom) { [NORTH, SOUTH] } else { [EAST, WEST] };
            for off in sides {
                let (a, b) = *dom;
                if let Some((c, d)) = both_on(self.at(a, off), self.at(b, off)) {
                    if let Some(side) = Self::owner(s, t, c, d) {
                        return Some(Reduction::Flip(side, (a, b), (c, d)));
                    }
                }
            }
        }

        for (want_horizontal, off) in [(true, NORTH), (true, SOUTH), (false, EAST), (false, WEST)] {
            for dom in dominoes.iter().filter(|d| horizontal(d) == want_horizontal) {
                let (a, b) = *dom;
                let Some((c, d)) = both_on(self.at(a, off), self.at(b, off)) else {
                    continue;
                };
                let (Some(cc), Some(dd)) = (self.at(c, off), self.at(d, off)) else {
                    continue;
                };
                for (side, m) in [(Side::Source, s), (Side::Target, t)] {
                    if m[c] == cc && m[d] == dd {
                        return Some(Reduction::Flip(side, (c, cc), (d, dd)));
                    }
                }
            }
        }
        None
    }

    /// The cycle encloses nothing. At its north-west corner `v` it turns
    /// east to `w` and south to `u`; the cell `x` south-east of `v` is on
    /// the cycle. A flip across the square `v w x u` shortens the cycle if
    /// `w-x` or `u-x` is a cycle edge; otherwise the chord `u-x` cuts it in two.
    fn reduce_corner(&self, s: &Mate, t: &Mate, cycle: &[usize]) -> Option<Reduction> {
        let v = *cycle
            .iter()
            .max_by_key(|&&v| (self.coords[v].1, -self.coords[v].0))?;
        let w = self.at(v, EAST)?;
        let u = self.at(v, SOUTH)?;
        let x = self.at(u, EAST)?;
        if !cycle.contains(&x) {
            return None;
        }
        if Self::owner(s, t, w, x).is_some() {
            let side = Self::owner(s, t, v, u)?;
            return Some(Reduction::Flip(side, (v, u), (w, x)));
        }
        if Self::owner(s, t, u, x).is_some() {
            let side = Self::owner(s, t, v, w)?;
            return Some(Reduction::Flip(side, (v, w), (u, x)));
        }
        // Walk from u along its s edge to x; that arc starts and ends with
        // s edges, so replacing them by the arc's t edges and the chord u-x
        // gives a tiling between s and t.
        let n = cycle.len();
        let pos = cycle.iter().position(|&p| p == u)?;
        let step = if cycle[(pos + 1) % n] == s[u] { 1 } else { n - 1 };
        let mut mid = s.clone();
        let mut i = (pos + step) % n;
        while cycle[i] != x {
            mid[cycle[i]] = t[cycle[i]];
            i = (i + step) % n;
        }
        mid[u] = x;
        mid[x] = u;
        Some(Reduction::Split(mid))
    }
}

/// Replaces dominoes `a-b`, `c-d` by `a-c`, `b-d`.
fn flip(m: &mut Mate, (a, b): (usize, usize), (c, d): (usize, usize)) {
    debug_assert!(m[a] == b && m[c] == d);
    m[a] = c;
    m[c] = a;
    m[b] = d;
    m[d] = b;
}
