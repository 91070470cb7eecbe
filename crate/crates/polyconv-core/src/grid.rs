//! Cells, finitely supported integer grids, and polyominoes.
//!
//! A cell (x, y) stands for the unit square [x, x+1] x [y, y+1], so
//! geometric transforms act on squares, not on lattice points. Rotation by
//! 90 degrees counterclockwise about the origin maps the cell (x, y) to
//! (-1-y, x); point reflection through the origin maps it to (-1-x, -1-y).
//! Rotating twice equals reflecting. Rotation about any other
//! grid-compatible center differs from these only by a translation, which
//! [`IntGrid::canonical`] quotients away.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// A lattice cell, identified with the unit square [x, x+1] x [y, y+1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Cell {
        Cell { x, y }
    }

    pub const fn translated(self, dx: i64, dy: i64) -> Cell {
        Cell::new(self.x + dx, self.y + dy)
    }

    /// Image under 90-degree counterclockwise rotation about the origin.
    pub const fn rotated90(self) -> Cell {
        Cell::new(-1 - self.y, self.x)
    }

    /// Image under point reflection through the origin.
    pub const fn reflected(self) -> Cell {
        Cell::new(-1 - self.x, -1 - self.y)
    }

    /// Taxicab distance between two cells.
    pub const fn taxicab(self, other: Cell) -> u64 {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }

    /// The four edge-adjacent cells.
    pub const fn neighbors(self) -> [Cell; 4] {
        [
            Cell::new(self.x + 1, self.y),
            Cell::new(self.x - 1, self.y),
            Cell::new(self.x, self.y + 1),
            Cell::new(self.x, self.y - 1),
        ]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Inclusive bounding box of a nonempty set of cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundingBox {
    pub min: Cell,
    pub max: Cell,
}

/// A finitely supported function from cells to integers.
///
/// Zero values are never stored: `get` returns 0 for any cell outside the
/// support, and all constructors and operations drop cells whose value
/// becomes 0. Iteration order is the `Cell` order (x, then y), so equal
/// grids always present their entries identically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntGrid {
    entries: BTreeMap<Cell, i64>,
}

impl IntGrid {
    pub fn new() -> IntGrid {
        IntGrid::default()
    }

    /// Builds a grid from (cell, value) pairs, summing repeated cells.
    pub fn from_entries<I: IntoIterator<Item = (Cell, i64)>>(entries: I) -> IntGrid {
        let mut g = IntGrid::new();
        for (c, v) in entries {
            g.add_at(c, v);
        }
        g
    }

    /// Adds `v` to the value at `c`, removing the entry if it reaches 0.
    pub fn add_at(&mut self, c: Cell, v: i64) {
        let entry = self.entries.entry(c).or_insert(0);
        *entry += v;
        if *entry == 0 {
            self.entries.remove(&c);
        }
    }

    pub fn get(&self, c: Cell) -> i64 {
        self.entries.get(&c).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, i64)> + '_ {
        self.entries.iter().map(|(&c, &v)| (c, v))
    }

    pub fn support(&self) -> impl Iterator<Item = Cell> + '_ {
        self.entries.keys().copied()
    }

    /// Sum of absolute values over the support.
    pub fn norm1(&self) -> u64 {
        self.entries.values().map(|v| v.unsigned_abs()).sum()
    }

    /// Number of cells in the support.
    pub fn norm_inf(&self) -> u64 {
        self.entries.len() as u64
    }

    /// Largest taxicab distance between two support cells.
    ///
    /// Computed via the diagonal coordinates u = x+y, v = x-y: the taxicab
    /// diameter is max(spread(u), spread(v)).
    pub fn diam(&self) -> Result<u64, Error> {
        if self.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let (mut umin, mut umax) = (i64::MAX, i64::MIN);
        let (mut vmin, mut vmax) = (i64::MAX, i64::MIN);
        for c in self.support() {
            let (u, v) = (c.x + c.y, c.x - c.y);
            umin = umin.min(u);
            umax = umax.max(u);
            vmin = vmin.min(v);
            vmax = vmax.max(v);
        }
        Ok((umax.abs_diff(umin)).max(vmax.abs_diff(vmin)))
    }

    pub fn bounding_box(&self) -> Option<BoundingBox> {
        let mut cells = self.support();
        let first = cells.next()?;
        let (mut min, mut max) = (first, first);
        for c in cells {
            min.x = min.x.min(c.x);
            min.y = min.y.min(c.y);
            max.x = max.x.max(c.x);
            max.y = max.y.max(c.y);
        }
        Some(BoundingBox { min, max })
    }

    fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> IntGrid {
        IntGrid {
            entries: self.iter().map(|(c, v)| (f(c), v)).collect(),
        }
    }

    pub fn translate(&self, dx: i64, dy: i64) -> IntGrid {
        self.map_cells(|c| c.translated(dx, dy))
    }

    /// Rotates the grid 90 degrees counterclockwise about the origin.
    pub fn rotate90(&self) -> IntGrid {
        self.map_cells(Cell::rotated90)
    }

    /// Point-reflects the grid through the origin.
    pub fn reflect(&self) -> IntGrid {
        self.map_cells(Cell::reflected)
    }

    /// Translates so the support's minimal x and minimal y are both 0.
    pub fn canonical(&self) -> Result<IntGrid, Error> {
        let b = self.bounding_box().ok_or(Error::EmptyGrid)?;
        Ok(self.translate(-b.min.x, -b.min.y))
    }

    /// Pointwise sum.
    pub fn add(&self, other: &IntGrid) -> IntGrid {
        let mut out = self.clone();
        for (c, v) in other.iter() {
            out.add_at(c, v);
        }
        out
    }

    /// Pointwise negation.
    pub fn negate(&self) -> IntGrid {
        IntGrid {
            entries: self.iter().map(|(c, v)| (c, -v)).collect(),
        }
    }

    /// Parses either of the two text formats.
    ///
    /// Character grids use `.` (empty), `#` (one), and digits `0`-`9`; the
    /// top text row holds the cells with the largest y, the leftmost column
    /// is x = 0, and rows may be ragged. Any line containing a comma makes
    /// the input a CSV grid instead: one `x,y,value` triple per line, for
    /// values that a character grid cannot carry.
    pub fn parse(text: &str) -> Result<IntGrid, Error> {
        if text.lines().any(|l| l.contains(',')) {
            Self::parse_csv(text)
        } else {
            Self::parse_chars(text)
        }
    }

    fn parse_chars(text: &str) -> Result<IntGrid, Error> {
        let rows: Vec<&str> = text.lines().collect();
        let mut g = IntGrid::new();
        for (r, row) in rows.iter().enumerate() {
            let y = (rows.len() - 1 - r) as i64;
            for (i, ch) in row.chars().enumerate() {
                let v = match ch {
                    '.' => 0,
                    '#' => 1,
                    '0'..='9' => ch as i64 - '0' as i64,
                    _ => {
                        return Err(Error::Parse {
                            line: r + 1,
                            column: i + 1,
                            message: alloc::format!("invalid character {:?}", ch),
                        })
                    }
                };
                if v != 0 {
                    g.add_at(Cell::new(i as i64, y), v);
                }
            }
        }
        Ok(g)
    }

    fn parse_csv(text: &str) -> Result<IntGrid, Error> {
        let mut g = IntGrid::new();
        for (r, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: r + 1,
                    column: 1,
                    message: alloc::format!(
                        "expected x,y,value but found {} field(s)",
                        fields.len()
                    ),
                });
            }
            let mut column = 1;
            let mut parsed = [0i64; 3];
            for (k, field) in fields.iter().enumerate() {
                parsed[k] = field.trim().parse().map_err(|_| Error::Parse {
                    line: r + 1,
                    column,
                    message: alloc::format!("invalid integer {:?}", field.trim()),
                })?;
                column += field.len() + 1;
            }
            g.add_at(Cell::new(parsed[0], parsed[1]), parsed[2]);
        }
        Ok(g)
    }

    /// Renders the grid over its bounding box.
    ///
    /// Values 1..9 render as a character grid (`#` for 1, the digit
    /// otherwise); any negative value or value above 9 switches the whole
    /// output to CSV. Parsing the output and canonicalizing recovers the
    /// canonical form of the grid; absolute position is not retained by the
    /// character format.
    pub fn render(&self) -> String {
        let Some(b) = self.bounding_box() else {
            return String::new();
        };
        let charable = self.iter().all(|(_, v)| (1..=9).contains(&v));
        if !charable {
            let mut out = String::new();
            for (c, v) in self.iter() {
                out.push_str(&alloc::format!("{},{},{}\n", c.x, c.y, v));
            }
            return out;
        }
        let mut out = String::new();
        for y in (b.min.y..=b.max.y).rev() {
            for x in b.min.x..=b.max.x {
                out.push(match self.get(Cell::new(x, y)) {
                    0 => '.',
                    1 => '#',
                    v => (b'0' + v as u8) as char,
                });
            }
            out.push('\n');
        }
        out
    }
}

impl FromIterator<(Cell, i64)> for IntGrid {
    fn from_iter<I: IntoIterator<Item = (Cell, i64)>>(iter: I) -> IntGrid {
        IntGrid::from_entries(iter)
    }
}

/// A finite set of cells; equivalently a {0,1}-valued [`IntGrid`].
///
/// The empty polyomino is allowed as the algebraic zero. For a polyomino
/// both grid norms equal the cell count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
}

impl Polyomino {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Polyomino {
        Polyomino {
            cells: cells.into_iter().collect(),
        }
    }

    /// Converts a grid to a polyomino; every stored value must be 1.
    pub fn try_from_grid(g: &IntGrid) -> Result<Polyomino, Error> {
        for (c, v) in g.iter() {
            if v != 1 {
                return Err(Error::InvalidSpec(alloc::format!(
                    "cell {} has value {}, a polyomino may only hold 0 or 1",
                    c, v
                )));
            }
        }
        Ok(Polyomino {
            cells: g.support().collect(),
        })
    }

    pub fn parse(text: &str) -> Result<Polyomino, Error> {
        Polyomino::try_from_grid(&IntGrid::parse(text)?)
    }

    pub fn to_grid(&self) -> IntGrid {
        self.cells.iter().map(|&c| (c, 1)).collect()
    }

    pub fn area(&self) -> u64 {
        self.cells.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn diam(&self) -> Result<u64, Error> {
        self.to_grid().diam()
    }

    pub fn bounding_box(&self) -> Option<BoundingBox> {
        self.to_grid().bounding_box()
    }

    fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> Polyomino {
        Polyomino {
            cells: self.cells.iter().map(|&c| f(c)).collect(),
        }
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Polyomino {
        self.map_cells(|c| c.translated(dx, dy))
    }

    pub fn rotate90(&self) -> Polyomino {
        self.map_cells(Cell::rotated90)
    }

    pub fn reflect(&self) -> Polyomino {
        self.map_cells(Cell::reflected)
    }

    pub fn canonical(&self) -> Result<Polyomino, Error> {
        let b = self.bounding_box().ok_or(Error::EmptyGrid)?;
        Ok(self.translate(-b.min.x, -b.min.y))
    }

    /// True when every pair of cells is joined by a path of edge-adjacent
    /// cells inside the polyomino.
    pub fn is_rookwise_connected(&self) -> Result<bool, Error> {
        let &start = self.cells.iter().next().ok_or(Error::EmptyGrid)?;
        let mut seen = BTreeSet::new();
        let mut frontier = alloc::vec![start];
        seen.insert(start);
        while let Some(c) = frontier.pop() {
            for n in c.neighbors() {
                if self.cells.contains(&n) && seen.insert(n) {
                    frontier.push(n);
                }
            }
        }
        Ok(seen.len() == self.cells.len())
    }

    pub fn render(&self) -> String {
        self.to_grid().render()
    }
}

impl FromIterator<Cell> for Polyomino {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Polyomino {
        Polyomino::new(iter)
    }
}
