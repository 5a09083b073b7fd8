//! Shared helpers for the integration tests: fixture loading, region
//! generators, and brute-force oracles that share no code with the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tiling_ideals::{Binomial, Cell, EdgeId, Monomial, Region, TilingGraph};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.region"))
}

pub fn fixture(name: &str) -> Region {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    Region::parse(&text).unwrap()
}

pub fn fixture_graph(name: &str) -> TilingGraph {
    TilingGraph::new(&fixture(name))
}

pub fn region_2d(cells: &[(i64, i64)]) -> Region {
    Region::new(2, cells.iter().map(|&(x, y)| Cell::new(vec![x, y]))).unwrap()
}

/// Every fixed polyomino (distinct up to translation) with at most `max`
/// cells, grouped by size; `out[k]` holds the `k`-cell ones.
pub fn fixed_polyominoes(max: usize) -> Vec<Vec<Vec<(i64, i64)>>> {
    let normalize = |cells: &mut Vec<(i64, i64)>| {
        let mx = cells.iter().map(|c| c.0).min().unwrap();
        let my = cells.iter().map(|c| c.1).min().unwrap();
        for c in cells.iter_mut() {
            c.0 -= mx;
            c.1 -= my;
        }
        cells.sort_unstable();
    };
    let mut out: Vec<Vec<Vec<(i64, i64)>>> = vec![Vec::new(); max + 1];
    if max == 0 {
        return out;
    }
    out[1] = vec![vec![(0, 0)]];
    for k in 2..=max {
        let mut seen: HashSet<Vec<(i64, i64)>> = HashSet::new();
        for poly in &out[k - 1] {
            let occupied: HashSet<(i64, i64)> = poly.iter().copied().collect();
            for &(x, y) in poly {
                for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                    let c = (x + dx, y + dy);
                    if occupied.contains(&c) {
                        continue;
                    }
                    let mut grown = poly.clone();
                    grown.push(c);
                    normalize(&mut grown);
                    seen.insert(grown);
                }
            }
        }
        let mut level: Vec<_> = seen.into_iter().collect();
        level.sort();
        out[k] = level;
    }
    out
}

/// Canonical form under the eight symmetries of the square.
pub fn free_form(cells: &[(i64, i64)]) -> Vec<(i64, i64)> {
    type Symmetry = fn((i64, i64)) -> (i64, i64);
    let maps: [Symmetry; 8] = [
        |(x, y)| (x, y),
        |(x, y)| (-x, y),
        |(x, y)| (x, -y),
        |(x, y)| (-x, -y),
        |(x, y)| (y, x),
        |(x, y)| (-y, x),
        |(x, y)| (y, -x),
        |(x, y)| (-y, -x),
    ];
    maps.iter()
        .map(|f| {
            let mut v: Vec<(i64, i64)> = cells.iter().map(|&c| f(c)).collect();
            let mx = v.iter().map(|c| c.0).min().unwrap();
            let my = v.iter().map(|c| c.1).min().unwrap();
            for c in v.iter_mut() {
                c.0 -= mx;
                c.1 -= my;
            }
            v.sort_unstable();
            v
        })
        .min()
        .unwrap()
}

/// A random face-connected region of `size` cells in dimension `dim`,
/// grown cell by cell from the origin.
pub fn random_region(rng: &mut ChaCha8Rng, dim: usize, size: usize) -> Region {
    let mut cells: Vec<Vec<i64>> = vec![vec![0; dim]];
    let mut set: HashSet<Vec<i64>> = cells.iter().cloned().collect();
    while cells.len() < size {
        let base = cells[rng.gen_range(0..cells.len())].clone();
        let axis = rng.gen_range(0..dim);
        let delta = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut c = base;
        c[axis] += delta;
        if set.insert(c.clone()) {
            cells.push(c);
        }
    }
    Region::new(dim, cells.into_iter().map(Cell::new)).unwrap()
}

/// The `count` random regions used by the property suites: sizes 1..=14,
/// dimensions 2 and 3.
pub fn random_regions(seed: u64, count: usize) -> Vec<Region> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let dim = if rng.gen_bool(0.7) { 2 } else { 3 };
            let size = rng.gen_range(1..=14);
            random_region(&mut rng, dim, size)
        })
        .collect()
}

/// Adjacency lists computed straight from coordinates: cells at L1
/// distance 1. Vertices are indexed in the given order.
pub fn raw_adjacency(cells: &[Vec<i64>]) -> Vec<Vec<usize>> {
    (0..cells.len())
        .map(|i| {
            (0..cells.len())
                .filter(|&j| {
                    let d: i64 = cells[i].iter().zip(&cells[j]).map(|(a, b)| (a - b).abs()).sum();
                    d == 1
                })
                .collect()
        })
        .collect()
}

pub fn cells_of(region: &Region) -> Vec<Vec<i64>> {
    region.cells().map(|c| c.coords().to_vec()).collect()
}

/// Number of perfect matchings, by always matching the lowest free vertex.
pub fn brute_force_matchings(cells: &[Vec<i64>]) -> u64 {
    fn go(adj: &[Vec<usize>], used: &mut Vec<bool>) -> u64 {
        let Some(v) = used.iter().position(|&u| !u) else {
            return 1;
        };
        used[v] = true;
        let mut total = 0;
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                total += go(adj, used);
                used[w] = false;
            }
        }
        used[v] = false;
        total
    }
    let adj = raw_adjacency(cells);
    go(&adj, &mut vec![false; cells.len()])
}

/// All perfect matchings as sorted sets of (lower, higher) vertex pairs.
pub fn brute_force_matching_sets(cells: &[Vec<i64>]) -> BTreeSet<Vec<(usize, usize)>> {
    fn go(adj: &[Vec<usize>], used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut BTreeSet<Vec<(usize, usize)>>) {
        let Some(v) = used.iter().position(|&u| !u) else {
            let mut m = cur.clone();
            m.sort_unstable();
            out.insert(m);
            return;
        };
        used[v] = true;
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                cur.push((v.min(w), v.max(w)));
                go(adj, used, cur, out);
                cur.pop();
                used[w] = false;
            }
        }
        used[v] = false;
    }
    let adj = raw_adjacency(cells);
    let mut out = BTreeSet::new();
    go(&adj, &mut vec![false; cells.len()], &mut Vec::new(), &mut out);
    out
}

/// Vertex sets of all induced cycles, found by testing every vertex subset
/// for being connected and 2-regular in the induced subgraph.
pub fn brute_force_chordless_cycles(cells: &[Vec<i64>]) -> BTreeSet<Vec<usize>> {
    let n = cells.len();
    assert!(n <= 20, "subset enumeration is exponential");
    let adj = raw_adjacency(cells);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let two_regular = members
            .iter()
            .all(|&v| adj[v].iter().filter(|&&w| mask >> w & 1 == 1).count() == 2);
        if !two_regular {
            continue;
        }
        let mut seen = vec![members[0]];
        let mut queue = VecDeque::from([members[0]]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if mask >> w & 1 == 1 && !seen.contains(&w) {
                    seen.push(w);
                    queue.push_back(w);
                }
            }
        }
        if seen.len() == members.len() {
            out.insert(members);
        }
    }
    out
}

/// Whether the complement of a planar region has a bounded component:
/// flood fill the empty cells of the padded bounding box from its border.
pub fn has_hole(cells: &[Vec<i64>]) -> bool {
    let xs = cells.iter().map(|c| c[0]);
    let ys = cells.iter().map(|c| c[1]);
    let (x0, x1) = (xs.clone().min().unwrap() - 1, xs.max().unwrap() + 1);
    let (y0, y1) = (ys.clone().min().unwrap() - 1, ys.max().unwrap() + 1);
    let filled: HashSet<(i64, i64)> = cells.iter().map(|c| (c[0], c[1])).collect();
    let mut reached: HashSet<(i64, i64)> = HashSet::from([(x0, y0)]);
    let mut queue = VecDeque::from([(x0, y0)]);
    while let Some((x, y)) = queue.pop_front() {
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let p = (x + dx, y + dy);
            if p.0 < x0 || p.0 > x1 || p.1 < y0 || p.1 > y1 || filled.contains(&p) {
                continue;
            }
            if reached.insert(p) {
                queue.push_back(p);
            }
        }
    }
    let empty = ((x1 - x0 + 1) * (y1 - y0 + 1)) as usize - filled.len();
    reached.len() < empty
}

/// Breadth-first distance between two tilings using only flips, computed
/// from matchings given as vertex pairs over the raw adjacency.
pub fn brute_force_flip_distance(graph: &TilingGraph, from: &[(usize, usize)], to: &[(usize, usize)]) -> Option<usize> {
    let mut start: Vec<(usize, usize)> = from.to_vec();
    start.sort_unstable();
    let mut goal: Vec<(usize, usize)> = to.to_vec();
    goal.sort_unstable();
    let mut dist = std::collections::HashMap::from([(start.clone(), 0usize)]);
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        let d = dist[&m];
        if m == goal {
            return Some(d);
        }
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                let (a, b) = m[i];
                let (c, e) = m[j];
                for (p, q) in [((a, c), (b, e)), ((a, e), (b, c))] {
                    if graph.is_adjacent(p.0, p.1) && graph.is_adjacent(q.0, q.1) {
                        let mut next = m.clone();
                        next[i] = (p.0.min(p.1), p.0.max(p.1));
                        next[j] = (q.0.min(q.1), q.0.max(q.1));
                        next.sort_unstable();
                        if !dist.contains_key(&next) {
                            dist.insert(next.clone(), d + 1);
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Vertex pairs of a tiling.
pub fn pairs(graph: &TilingGraph, t: &tiling_ideals::Tiling) -> Vec<(usize, usize)> {
    t.edges().iter().map(|&e| graph.endpoints(e)).collect()
}

pub fn binomials(texts: &[&str]) -> Vec<Binomial> {
    texts.iter().map(|t| t.parse().unwrap()).collect()
}

fn fits(g: &Binomial, h: &Binomial, sigma: &[Option<EdgeId>]) -> bool {
    let side_fits = |a: &Monomial, b: &Monomial| {
        a.degree() == b.degree()
            && a.exponents()
                .iter()
                .all(|&(x, k)| sigma[x.0].is_none_or(|y| b.exponent(y) == k))
    };
    (side_fits(&g.u, &h.u) && side_fits(&g.v, &h.v)) || (side_fits(&g.u, &h.v) && side_fits(&g.v, &h.u))
}

/// Applies a label map to a binomial.
pub fn relabel(b: &Binomial, sigma: &[Option<EdgeId>]) -> Binomial {
    let map = |m: &Monomial| Monomial::from_exponents(m.exponents().iter().map(|&(x, k)| (sigma[x.0].unwrap(), k)));
    Binomial::new(map(&b.u), map(&b.v))
}

/// An injective map from the labels used in `theirs` into this crate's
/// edge labels carrying every binomial of `theirs` to one of `ours`, read up
/// to sign. Found by backtracking over labels, most frequent first, pruning
/// any partial map under which some binomial of `theirs` no longer fits any
/// of `ours`.
pub fn find_relabeling(theirs: &[Binomial], ours: &[Binomial], num_edges: usize) -> Option<Vec<Option<EdgeId>>> {
    let mut freq: std::collections::BTreeMap<EdgeId, usize> = Default::default();
    for g in theirs {
        for e in g.u.support().chain(g.v.support()) {
            *freq.entry(e).or_default() += 1;
        }
    }
    let size = freq.keys().map(|e| e.0 + 1).max().unwrap_or(0);
    let mut order: Vec<EdgeId> = freq.keys().copied().collect();
    order.sort_by_key(|e| std::cmp::Reverse(freq[e]));

    fn go(
        i: usize,
        order: &[EdgeId],
        theirs: &[Binomial],
        ours: &[Binomial],
        num_edges: usize,
        sigma: &mut Vec<Option<EdgeId>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == order.len() {
            return theirs
                .iter()
                .map(|g| relabel(g, sigma))
                .all(|m| ours.iter().any(|h| h.same_up_to_sign(&m)));
        }
        for target in 0..num_edges {
            if used[target] {
                continue;
            }
            sigma[order[i].0] = Some(EdgeId(target));
            used[target] = true;
            let viable = theirs.iter().all(|g| ours.iter().any(|h| fits(g, h, sigma)));
            if viable && go(i + 1, order, theirs, ours, num_edges, sigma, used) {
                return true;
            }
            used[target] = false;
            sigma[order[i].0] = None;
        }
        false
    }

    let mut sigma = vec![None; size];
    let mut used = vec![false; num_edges];
    go(0, &order, theirs, ours, num_edges, &mut sigma, &mut used).then_some(sigma)
}
