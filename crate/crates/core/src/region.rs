//! Cubiculated regions: finite sets of unit cells on the integer lattice.
//!
//! A region is stored as a sorted set of [`Cell`]s, each identified by the
//! lattice coordinates of its minimal corner. Two text encodings are
//! accepted by [`Region::parse`]:
//!
//! * 2D ASCII art, `#` for a cell and `.` for a gap. The first row is the
//!   northernmost one (largest `y`), the first column is `x = 0`.
//! * A `dim <n>` header followed by one cell per line, `n` integers each.
//!
//! Blank lines and lines starting with `//` are ignored in both forms.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegionError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: duplicate cell {cell}")]
    DuplicateCell { line: usize, cell: Cell },
    #[error("region has no cells")]
    Empty,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("cell {cell} does not have {expected} coordinates")]
    DimensionMismatch { expected: usize, cell: Cell },
    #[error("operation needs a 2-dimensional region, got dimension {0}")]
    NotPlanar(usize),
    #[error("region is not edge-connected")]
    Disconnected,
}

/// A unit cube of the lattice, named by its minimal corner.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell(Vec<i64>);

impl Cell {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Cell(coords.into())
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `true` when the coordinate sum is even. This is the bipartition class
    /// of the cell in the adjacency graph.
    pub fn is_even(&self) -> bool {
        self.0.iter().sum::<i64>().rem_euclid(2) == 0
    }

    /// The cell shifted by `delta` along `axis`.
    pub fn shifted(&self, axis: usize, delta: i64) -> Cell {
        let mut coords = self.0.clone();
        coords[axis] += delta;
        Cell(coords)
    }

    /// Whether the two cells share an (n-1)-face.
    pub fn is_adjacent(&self, other: &Cell) -> bool {
        self.dim() == other.dim()
            && self
                .0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a - b).abs())
                .sum::<i64>()
                == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite, nonempty set of lattice cells of a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    dim: usize,
    cells: BTreeSet<Cell>,
}

impl Region {
    /// Builds a region, rejecting duplicates and coordinate-count mismatches.
    pub fn new(dim: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self, RegionError> {
        if dim == 0 {
            return Err(RegionError::ZeroDimension);
        }
        let mut set = BTreeSet::new();
        for (i, cell) in cells.into_iter().enumerate() {
            if cell.dim() != dim {
                return Err(RegionError::DimensionMismatch { expected: dim, cell });
            }
            if set.contains(&cell) {
                return Err(RegionError::DuplicateCell { line: i + 1, cell });
            }
            set.insert(cell);
        }
        if set.is_empty() {
            return Err(RegionError::Empty);
        }
        Ok(Region { dim, cells: set })
    }

    /// The box `[0, e_1) x ... x [0, e_n)`. Panics if any extent is zero.
    pub fn boxed(extents: &[usize]) -> Region {
        assert!(
            !extents.is_empty() && extents.iter().all(|&e| e > 0),
            "box extents must be positive"
        );
        let mut cells = vec![Vec::new()];
        for &extent in extents {
            cells = cells
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (0..extent as i64).map(move |c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        Region::new(extents.len(), cells.into_iter().map(Cell)).expect("box cells are distinct")
    }

    /// A `rows x cols` rectangle: `rows` cells tall (y), `cols` cells wide (x).
    pub fn rectangle(rows: usize, cols: usize) -> Region {
        Region::boxed(&[cols, rows])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells in lexicographic coordinate order.
    pub fn cells(&self) -> impl ExactSizeIterator<Item = &Cell> + '_ {
        self.cells.iter()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.contains(cell)
    }

    /// Componentwise minimum and (maximum + 1) of the cell coordinates.
    pub fn bounding_box(&self) -> Result<(Vec<i64>, Vec<i64>), RegionError> {
        let mut iter = self.cells.iter();
        let first = iter.next().ok_or(RegionError::Empty)?;
        let mut lo = first.0.clone();
        let mut hi: Vec<i64> = first.0.iter().map(|c| c + 1).collect();
        for cell in iter {
            for (axis, &c) in cell.0.iter().enumerate() {
                lo[axis] = lo[axis].min(c);
                hi[axis] = hi[axis].max(c + 1);
            }
        }
        Ok((lo, hi))
    }

    /// Number of cells in each bipartition class: (even, odd).
    pub fn parity_counts(&self) -> (usize, usize) {
        let even = self.cells.iter().filter(|c| c.is_even()).count();
        (even, self.cells.len() - even)
    }

    /// Whether the cells are connected through shared (n-1)-faces.
    pub fn is_edge_connected(&self) -> bool {
        let Some(start) = self.cells.iter().next() else {
            return true;
        };
        let mut seen: HashSet<&Cell> = HashSet::from([start]);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(cell) = queue.pop_front() {
            for axis in 0..self.dim {
                for delta in [-1, 1] {
                    let next = cell.shifted(axis, delta);
                    if let Some(found) = self.cells.get(&next) {
                        if seen.insert(found) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// Euler characteristic `V - E + F` of the closed union of the cells of
    /// a 2D region, counted on the unit-square complex.
    pub fn euler_characteristic(&self) -> Result<i64, RegionError> {
        if self.dim != 2 {
            return Err(RegionError::NotPlanar(self.dim));
        }
        let mut corners = HashSet::new();
        let mut horizontal = HashSet::new();
        let mut vertical = HashSet::new();
        for cell in &self.cells {
            let (x, y) = (cell.0[0], cell.0[1]);
            for (dx, dy) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                corners.insert((x + dx, y + dy));
            }
            horizontal.insert((x, y));
            horizontal.insert((x, y + 1));
            vertical.insert((x, y));
            vertical.insert((x + 1, y));
        }
        Ok(corners.len() as i64 - (horizontal.len() + vertical.len()) as i64
            + self.cells.len() as i64)
    }

    /// Whether a 2D, edge-connected region has no holes (Euler characteristic 1).
    pub fn is_simply_connected(&self) -> Result<bool, RegionError> {
        if self.dim != 2 {
            return Err(RegionError::NotPlanar(self.dim));
        }
        if !self.is_edge_connected() {
            return Err(RegionError::Disconnected);
        }
        Ok(self.euler_characteristic()? == 1)
    }

    /// Parses either encoding of the `.region` format.
    pub fn parse(text: &str) -> Result<Region, RegionError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with("//")
            })
            .collect();
        let Some(&(first_no, first)) = lines.first() else {
            return Err(RegionError::Empty);
        };
        if first.trim_start().starts_with("dim") {
            Self::parse_list(first_no, first, &lines[1..])
        } else {
            Self::parse_ascii(&lines)
        }
    }

    fn parse_list(
        header_no: usize,
        header: &str,
        rows: &[(usize, &str)],
    ) -> Result<Region, RegionError> {
        let syntax = |line, column, message: &str| RegionError::Syntax {
            line,
            column,
            message: message.to_string(),
        };
        let mut parts = header.split_whitespace();
        parts.next();
        let dim: usize = parts
            .next()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| syntax(header_no, 5, "expected `dim <n>` with a positive integer"))?;
        if dim == 0 {
            return Err(RegionError::ZeroDimension);
        }
        if parts.next().is_some() {
            return Err(syntax(header_no, 1, "trailing tokens after dimension"));
        }
        let mut cells = BTreeSet::new();
        for &(line_no, line) in rows {
            let mut coords = Vec::with_capacity(dim);
            for (offset, token) in tokens_with_offsets(line) {
                let column = offset + 1;
                let value: i64 = token
                    .parse()
                    .map_err(|_| syntax(line_no, column, &format!("invalid integer `{token}`")))?;
                coords.push(value);
            }
            if coords.len() != dim {
                return Err(syntax(
                    line_no,
                    1,
                    &format!("expected {dim} coordinates, found {}", coords.len()),
                ));
            }
            let cell = Cell(coords);
            if !cells.insert(cell.clone()) {
                return Err(RegionError::DuplicateCell { line: line_no, cell });
            }
        }
        if cells.is_empty() {
            return Err(RegionError::Empty);
        }
        Ok(Region { dim, cells })
    }

    fn parse_ascii(rows: &[(usize, &str)]) -> Result<Region, RegionError> {
        let height = rows.len() as i64;
        let mut cells = BTreeSet::new();
        for (r, &(line_no, line)) in rows.iter().enumerate() {
            let y = height - 1 - r as i64;
            for (x, ch) in line.chars().enumerate() {
                match ch {
                    '#' => {
                        cells.insert(Cell(vec![x as i64, y]));
                    }
                    '.' => {}
                    c if c.is_whitespace() => {}
                    other => {
                        return Err(RegionError::Syntax {
                            line: line_no,
                            column: x + 1,
                            message: format!("unexpected character `{other}`"),
                        })
                    }
                }
            }
        }
        if cells.is_empty() {
            return Err(RegionError::Empty);
        }
        Ok(Region { dim: 2, cells })
    }

    /// Canonical text form. 2D regions with nonnegative coordinates are
    /// written as ASCII art, anything else as a `dim` list. The output
    /// parses back to an equal region.
    pub fn to_text(&self) -> String {
        let (lo, hi) = self.bounding_box().expect("regions are nonempty");
        let mut out = String::new();
        if self.dim == 2 && lo.iter().all(|&c| c >= 0) {
            for y in (0..hi[1]).rev() {
                for x in 0..hi[0] {
                    let filled = self.cells.contains(&Cell(vec![x, y]));
                    out.push(if filled { '#' } else { '.' });
                }
                out.push('\n');
            }
        } else {
            out.push_str(&format!("dim {}\n", self.dim));
            for cell in &self.cells {
                let coords: Vec<String> = cell.0.iter().map(i64::to_string).collect();
                out.push_str(&coords.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

fn tokens_with_offsets(line: &str) -> impl Iterator<Item = (usize, &str)> + '_ {
    let mut rest = line;
    let mut consumed = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let token = &tail[..len];
        let offset = consumed + start;
        consumed += start + len;
        rest = &tail[len..];
        Some((offset, token))
    })
}

impl FromStr for Region {
    type Err = RegionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Region::parse(s)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
