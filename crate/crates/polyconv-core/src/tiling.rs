//! Exact-cover tilings of a torus, and signed tilings.
//!
//! A placement puts one rotation of a prototile somewhere on a torus; the
//! solver searches for a set of placements covering every cell exactly
//! once. The search is exact-cover backtracking over dancing links,
//! always branching on the cell with the fewest remaining candidate
//! placements, so `Unsatisfiable` is a proof by exhaustion. A pluggable
//! [`Budget`] caps the number of search nodes; running out is reported as
//! `BudgetExceeded`, which is never conflated with unsatisfiability.
//!
//! Signed tilings relax exact cover: placements carry a sign, and the
//! interesting question is whether the signed multiplicities sum to 1 on
//! every cell. [`build_signed_tiling_24x12`] constructs such a tiling out
//! of spaced bars that provably admit no ordinary torus tiling.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::families;
use crate::grid::{Cell, IntGrid, Polyomino};
use crate::Error;

/// A W-by-H torus: x wraps modulo the width, y modulo the height.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Torus {
    width: u32,
    height: u32,
}

impl Torus {
    pub fn new(width: u32, height: u32) -> Result<Torus, Error> {
        if width < 1 || height < 1 {
            return Err(Error::InvalidSpec(format!(
                "torus dimensions must be positive, got {}x{}",
                width, height
            )));
        }
        Ok(Torus { width, height })
    }

    pub fn width(self) -> u32 {
        self.width
    }

    pub fn height(self) -> u32 {
        self.height
    }

    pub fn cell_count(self) -> u64 {
        self.width as u64 * self.height as u64
    }

    /// Canonical representative of a cell: x in 0..width, y in 0..height.
    pub fn wrap(self, c: Cell) -> Cell {
        Cell::new(
            c.x.rem_euclid(self.width as i64),
            c.y.rem_euclid(self.height as i64),
        )
    }

    /// Row-major index of the wrapped cell: y * width + x.
    pub fn index(self, c: Cell) -> usize {
        let w = self.wrap(c);
        w.y as usize * self.width as usize + w.x as usize
    }

    /// All cells in index order: y from 0 up, x from 0 up within a row.
    pub fn cells(self) -> impl Iterator<Item = Cell> {
        let (w, h) = (self.width as i64, self.height as i64);
        (0..h).flat_map(move |y| (0..w).map(move |x| Cell::new(x, y)))
    }
}

impl core::fmt::Display for Torus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

/// One rotated copy of a prototile at a torus offset.
///
/// The covered cells are the canonical form of the tile rotated
/// `rotation` (0..=3) quarter turns, translated by `offset`, wrapped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub tile_index: usize,
    pub rotation: u8,
    pub offset: Cell,
}

/// A placement with a weight of +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedPlacement {
    pub placement: Placement,
    pub sign: i8,
}

/// The canonical shape a placement stamps: the tile rotated and put at
/// the origin corner.
pub fn placement_shape(tiles: &[Polyomino], p: &Placement) -> Result<Polyomino, Error> {
    let tile = tiles.get(p.tile_index).ok_or_else(|| {
        Error::InvalidSpec(format!("tile index {} out of range", p.tile_index))
    })?;
    if p.rotation > 3 {
        return Err(Error::InvalidSpec(format!(
            "rotation must be 0..=3, got {}",
            p.rotation
        )));
    }
    let mut shape = tile.clone();
    for _ in 0..p.rotation {
        shape = shape.rotate90();
    }
    shape.canonical()
}

/// Wrapped cells covered by a shape at an offset, or `None` when the
/// shape self-overlaps after wrapping, which makes the placement illegal.
pub fn placed_cells(torus: Torus, shape: &Polyomino, offset: Cell) -> Option<Vec<Cell>> {
    let mut cells = BTreeSet::new();
    for c in shape.cells() {
        if !cells.insert(torus.wrap(c.translated(offset.x, offset.y))) {
            return None;
        }
    }
    Some(cells.into_iter().collect())
}

/// The distinct rotations of a tile, canonicalized; rotations whose shape
/// repeats (up to translation) keep only the smallest rotation count.
pub fn rotation_classes(tile: &Polyomino) -> Result<Vec<(u8, Polyomino)>, Error> {
    let mut out: Vec<(u8, Polyomino)> = Vec::new();
    let mut shape = tile.clone();
    for r in 0..4u8 {
        let canon = shape.canonical()?;
        if !out.iter().any(|(_, s)| *s == canon) {
            out.push((r, canon));
        }
        shape = shape.rotate90();
    }
    Ok(out)
}

/// Every legal placement of every tile, ordered by tile index, then
/// rotation, then offset row by row.
pub fn enumerate_placements(torus: Torus, tiles: &[Polyomino]) -> Result<Vec<Placement>, Error> {
    let mut out = Vec::new();
    for (tile_index, tile) in tiles.iter().enumerate() {
        for (rotation, shape) in rotation_classes(tile)? {
            for offset in torus.cells() {
                if placed_cells(torus, &shape, offset).is_some() {
                    out.push(Placement {
                        tile_index,
                        rotation,
                        offset,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Limits how many nodes a search may expand.
pub trait Budget {
    /// Grants one more search node; returning false stops the search.
    fn tick(&mut self) -> bool;
}

/// No limit at all.
pub struct Unlimited;

impl Budget for Unlimited {
    fn tick(&mut self) -> bool {
        true
    }
}

/// A fixed number of search nodes.
pub struct NodeBudget {
    remaining: u64,
}

impl NodeBudget {
    pub fn new(nodes: u64) -> NodeBudget {
        NodeBudget { remaining: nodes }
    }
}

impl Budget for NodeBudget {
    fn tick(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        true
    }
}

/// A complete tiling of a torus: placements covering each cell once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingSolution {
    pub torus: Torus,
    pub tiles: Vec<Polyomino>,
    pub placements: Vec<Placement>,
}

impl TilingSolution {
    /// Recounts the multiset of covered cells: true exactly when every
    /// torus cell is covered once.
    pub fn verify(&self) -> bool {
        let mut covered = vec![0u32; self.torus.cell_count() as usize];
        for p in &self.placements {
            let Ok(shape) = placement_shape(&self.tiles, p) else {
                return false;
            };
            let Some(cells) = placed_cells(self.torus, &shape, p.offset) else {
                return false;
            };
            for c in cells {
                covered[self.torus.index(c)] += 1;
            }
        }
        covered.iter().all(|&n| n == 1)
    }

    /// Character map of the torus; each placement labels its cells with
    /// its position in the list, modulo 62, over 0-9a-zA-Z.
    pub fn render(&self) -> String {
        const ALPHABET: &[u8; 62] =
            b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
        let mut labels = vec![b'?'; self.torus.cell_count() as usize];
        for (i, p) in self.placements.iter().enumerate() {
            let Ok(shape) = placement_shape(&self.tiles, p) else {
                continue;
            };
            let Some(cells) = placed_cells(self.torus, &shape, p.offset) else {
                continue;
            };
            for c in cells {
                labels[self.torus.index(c)] = ALPHABET[i % 62];
            }
        }
        let mut out = String::new();
        for y in (0..self.torus.height() as i64).rev() {
            for x in 0..self.torus.width() as i64 {
                out.push(labels[self.torus.index(Cell::new(x, y))] as char);
            }
            out.push('\n');
        }
        out
    }

    /// One line per placement: `tile_index rotation dx dy`.
    pub fn placement_lines(&self) -> String {
        let mut out = String::new();
        for p in &self.placements {
            out.push_str(&format!(
                "{} {} {} {}\n",
                p.tile_index, p.rotation, p.offset.x, p.offset.y
            ));
        }
        out
    }
}

/// Outcome of an exact-cover search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(TilingSolution),
    /// Proven: no tiling exists. Only returned after an exhaustive search
    /// or a failed divisibility precheck, never on a budget cutoff.
    Unsatisfiable,
    /// The budget ran out first; nothing is known.
    BudgetExceeded,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Searches for a tiling of the torus by the given prototiles.
///
/// Deterministic: the search always branches on the uncovered cell with
/// the fewest candidate placements, ties broken by row-major cell order,
/// and tries candidates in placement-enumeration order. The first
/// solution found is therefore a pure function of the inputs.
pub fn solve_exact_cover(
    torus: Torus,
    tiles: &[Polyomino],
    budget: &mut dyn Budget,
) -> Result<SolveOutcome, Error> {
    if tiles.is_empty() {
        return Err(Error::InvalidSpec("no tiles to place".into()));
    }
    if tiles.iter().any(Polyomino::is_empty) {
        return Err(Error::EmptyGrid);
    }
    // Every placement covers a multiple of gcd(areas) cells.
    let areas_gcd = tiles.iter().map(Polyomino::area).fold(0, gcd);
    if torus.cell_count() % areas_gcd != 0 {
        return Ok(SolveOutcome::Unsatisfiable);
    }
    let placements = enumerate_placements(torus, tiles)?;
    let ncols = torus.cell_count() as usize;
    let mut matrix = dlx::Matrix::new(ncols);
    for (row, p) in placements.iter().enumerate() {
        let shape = placement_shape(tiles, p)?;
        let cells = placed_cells(torus, &shape, p.offset).expect("enumerated placements are legal");
        let cols: Vec<u32> = cells.iter().map(|&c| torus.index(c) as u32 + 1).collect();
        matrix.add_row(row as u32, &cols);
    }
    let mut chosen = Vec::new();
    match matrix.search(budget, &mut chosen) {
        dlx::Search::Cutoff => Ok(SolveOutcome::BudgetExceeded),
        dlx::Search::Exhausted => Ok(SolveOutcome::Unsatisfiable),
        dlx::Search::Found => {
            chosen.sort_unstable();
            let solution = TilingSolution {
                torus,
                tiles: tiles.to_vec(),
                placements: chosen.iter().map(|&r| placements[r as usize]).collect(),
            };
            assert!(solution.verify(), "solver produced an invalid tiling");
            Ok(SolveOutcome::Solved(solution))
        }
    }
}

/// Dancing-links exact cover. Node 0 is the root; nodes 1..=ncols are
/// column headers; body nodes follow in row-insertion order.
mod dlx {
    use super::Budget;
    use alloc::vec::Vec;

    pub(super) enum Search {
        Found,
        Exhausted,
        Cutoff,
    }

    pub(super) struct Matrix {
        l: Vec<u32>,
        r: Vec<u32>,
        u: Vec<u32>,
        d: Vec<u32>,
        /// Column header owning each body node.
        top: Vec<u32>,
        /// Row id of each body node.
        rid: Vec<u32>,
        /// Live nodes per column, indexed by header id.
        size: Vec<u32>,
    }

    impl Matrix {
        pub fn new(ncols: usize) -> Matrix {
            let n = ncols + 1;
            Matrix {
                l: (0..n).map(|i| ((i + n - 1) % n) as u32).collect(),
                r: (0..n).map(|i| ((i + 1) % n) as u32).collect(),
                u: (0..n as u32).collect(),
                d: (0..n as u32).collect(),
                top: (0..n as u32).collect(),
                rid: (0..n).map(|_| u32::MAX).collect(),
                size: alloc::vec![0; n],
            }
        }

        /// Adds a row covering the 1-based columns `cols`.
        pub fn add_row(&mut self, row_id: u32, cols: &[u32]) {
            debug_assert!(!cols.is_empty());
            let first = self.l.len() as u32;
            for &c in cols {
                let id = self.l.len() as u32;
                let above = self.u[c as usize];
                self.u.push(above);
                self.d.push(c);
                self.d[above as usize] = id;
                self.u[c as usize] = id;
                self.l.push(id.wrapping_sub(1));
                self.r.push(id + 1);
                self.top.push(c);
                self.rid.push(row_id);
                self.size[c as usize] += 1;
            }
            let last = (self.l.len() - 1) as u32;
            self.l[first as usize] = last;
            self.r[last as usize] = first;
        }

        fn cover(&mut self, c: u32) {
            let (cl, cr) = (self.l[c as usize], self.r[c as usize]);
            self.r[cl as usize] = cr;
            self.l[cr as usize] = cl;
            let mut i = self.d[c as usize];
            while i != c {
                let mut j = self.r[i as usize];
                while j != i {
                    let (ju, jd) = (self.u[j as usize], self.d[j as usize]);
                    self.d[ju as usize] = jd;
                    self.u[jd as usize] = ju;
                    self.size[self.top[j as usize] as usize] -= 1;
                    j = self.r[j as usize];
                }
                i = self.d[i as usize];
            }
        }

        fn uncover(&mut self, c: u32) {
            let mut i = self.u[c as usize];
            while i != c {
                let mut j = self.l[i as usize];
                while j != i {
                    self.size[self.top[j as usize] as usize] += 1;
                    self.d[self.u[j as usize] as usize] = j;
                    self.u[self.d[j as usize] as usize] = j;
                    j = self.l[j as usize];
                }
                i = self.u[i as usize];
            }
            let (cl, cr) = (self.l[c as usize], self.r[c as usize]);
            self.r[cl as usize] = c;
            self.l[cr as usize] = c;
        }

        /// Depth-first search for the first exact cover. Each call is one
        /// budget tick. Column order is creation order, so the smallest
        /// column index wins ties for fewest candidates.
        pub fn search(&mut self, budget: &mut dyn Budget, chosen: &mut Vec<u32>) -> Search {
            if !budget.tick() {
                return Search::Cutoff;
            }
            if self.r[0] == 0 {
                return Search::Found;
            }
            let mut c = 0;
            let mut best = u32::MAX;
            let mut j = self.r[0];
            while j != 0 {
                if self.size[j as usize] < best {
                    best = self.size[j as usize];
                    c = j;
                }
                j = self.r[j as usize];
            }
            if best == 0 {
                return Search::Exhausted;
            }
            self.cover(c);
            let mut i = self.d[c as usize];
            while i != c {
                chosen.push(self.rid[i as usize]);
                let mut j = self.r[i as usize];
                while j != i {
                    self.cover(self.top[j as usize]);
                    j = self.r[j as usize];
                }
                match self.search(budget, chosen) {
                    Search::Exhausted => {}
                    decided => return decided,
                }
                let mut j = self.l[i as usize];
                while j != i {
                    self.uncover(self.top[j as usize]);
                    j = self.l[j as usize];
                }
                chosen.pop();
                i = self.d[i as usize];
            }
            self.uncover(c);
            Search::Exhausted
        }
    }
}

/// A family of signed placements on a torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTiling {
    pub torus: Torus,
    pub tiles: Vec<Polyomino>,
    pub placements: Vec<SignedPlacement>,
}

impl SignedTiling {
    /// Signed multiplicity of each torus cell. Cells a placement reaches
    /// twice by wrapping are counted with multiplicity.
    pub fn sum(&self) -> Result<IntGrid, Error> {
        signed_sum(self.torus, &self.tiles, &self.placements)
    }

    /// One line per placement: `tile_index rotation dx dy sign`.
    pub fn placement_lines(&self) -> String {
        let mut out = String::new();
        for sp in &self.placements {
            let p = &sp.placement;
            out.push_str(&format!(
                "{} {} {} {} {:+}\n",
                p.tile_index, p.rotation, p.offset.x, p.offset.y, sp.sign
            ));
        }
        out
    }
}

/// Adds up the signed indicator of every placement over the torus.
pub fn signed_sum(
    torus: Torus,
    tiles: &[Polyomino],
    placements: &[SignedPlacement],
) -> Result<IntGrid, Error> {
    let mut sum = IntGrid::new();
    for sp in placements {
        let shape = placement_shape(tiles, &sp.placement)?;
        for c in shape.cells() {
            let wrapped = torus.wrap(c.translated(sp.placement.offset.x, sp.placement.offset.y));
            sum.add_at(wrapped, sp.sign as i64);
        }
    }
    Ok(sum)
}

/// Builds a signed tiling of the 12-wide, 24-tall torus by bars that
/// cannot tile any torus without signs.
///
/// The tile is four bars of length 2 with unit gaps (8 cells). Twelve
/// horizontal copies stack into four 2-wide rectangles of height 12;
/// columns of vertical copies with alternating signs cancel a 12-cell
/// column and recreate it 12 rows higher, lifting the second and fourth
/// rectangles. Three translated copies of that figure complete the torus;
/// their offsets are found by searching all horizontal and vertical
/// shifts for the first pair making the signed sum 1 everywhere, which
/// doubles as verification of the construction.
pub fn build_signed_tiling_24x12() -> Result<SignedTiling, Error> {
    let torus = Torus::new(12, 24)?;
    let tiles = vec![families::make_spaced_bars(4, 2, 1)?];
    let mut figure: Vec<SignedPlacement> = Vec::new();
    let place = |rotation: u8, x: i64, y: i64, sign: i8| SignedPlacement {
        placement: Placement {
            tile_index: 0,
            rotation,
            offset: Cell::new(x, y),
        },
        sign,
    };
    // Four 2-wide rectangles at columns {0,1},{3,4},{6,7},{9,10}: rows 0..12.
    for y in 0..12 {
        figure.push(place(0, 0, y, 1));
    }
    // Lift the rectangles at columns {3,4} and {9,10} by 12 rows: each
    // column of six +/- pairs of vertical bars sums to -1 on rows 0..12
    // and +1 on rows 12..24.
    for x in [3, 4, 9, 10] {
        for i in 0..6 {
            figure.push(place(1, x, (12 + 2 * i) % 24, 1));
            figure.push(place(1, x, (12 + 2 * i + 3) % 24, -1));
        }
    }
    let base = signed_sum(torus, &tiles, &figure)?;
    // The figure must be a clean +1 indicator before copying it around.
    if !base.iter().all(|(_, v)| v == 1) {
        return Err(Error::ConstructionFailed);
    }
    let support: Vec<usize> = base.support().map(|c| torus.index(c)).collect();
    if 3 * support.len() as u64 != torus.cell_count() {
        return Err(Error::ConstructionFailed);
    }
    // Bitmask per shift of the figure's support, in shift-search order.
    let words = (torus.cell_count() as usize + 63) / 64;
    let shift_mask = |dx: i64, dy: i64| -> Vec<u64> {
        let mut mask = vec![0u64; words];
        for &i in &support {
            let (x, y) = ((i % 12) as i64, (i / 12) as i64);
            let j = torus.index(Cell::new(x + dx, y + dy));
            mask[j / 64] |= 1 << (j % 64);
        }
        mask
    };
    let base_mask = shift_mask(0, 0);
    let mut found = None;
    'outer: for dx2 in 0..12 {
        for dy2 in 0..24 {
            let m2 = shift_mask(dx2, dy2);
            if base_mask.iter().zip(&m2).any(|(a, b)| a & b != 0) {
                continue;
            }
            let union: Vec<u64> = base_mask.iter().zip(&m2).map(|(a, b)| a | b).collect();
            for dx3 in 0..12 {
                for dy3 in 0..24 {
                    let m3 = shift_mask(dx3, dy3);
                    if union.iter().zip(&m3).all(|(a, b)| a & b == 0) {
                        found = Some(((dx2, dy2), (dx3, dy3)));
                        break 'outer;
                    }
                }
            }
        }
    }
    let Some(((dx2, dy2), (dx3, dy3))) = found else {
        return Err(Error::ConstructionFailed);
    };
    let mut placements = figure.clone();
    for &(dx, dy) in &[(dx2, dy2), (dx3, dy3)] {
        placements.extend(figure.iter().map(|sp| SignedPlacement {
            placement: Placement {
                offset: torus.wrap(sp.placement.offset.translated(dx, dy)),
                ..sp.placement
            },
            sign: sp.sign,
        }));
    }
    let tiling = SignedTiling {
        torus,
        tiles,
        placements,
    };
    let total = tiling.sum()?;
    let all_ones = total.norm_inf() == torus.cell_count() && total.iter().all(|(_, v)| v == 1);
    if !all_ones {
        return Err(Error::ConstructionFailed);
    }
    Ok(tiling)
}
