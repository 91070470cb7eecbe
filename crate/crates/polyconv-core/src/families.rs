//! Parametric shape families and their ready-made criterion checks.
//!
//! Three families come with a convolution test wired up: evenly spaced
//! bars ([`check_spaced_bars`]), rectangles with well-separated unit spikes
//! ([`check_spiky`]), and snakes ([`check_snake`]). The module also carries
//! an exhaustive enumerator of small polyominoes, used to probe the
//! criterion for false positives.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::convolve::Modulus;
use crate::criterion::{self, Certificate};
use crate::grid::{Cell, Polyomino};
use crate::Error;

/// `n` horizontal bars of length `a`, separated by gaps of width `b`.
///
/// The cells are (i*(a+b) + j, 0) for i in 0..n and j in 0..a, so the
/// shape has n*a cells and spans n*(a+b) - b columns.
pub fn make_spaced_bars(n: u32, a: u32, b: u32) -> Result<Polyomino, Error> {
    if n < 1 || a < 1 || b < 1 {
        return Err(Error::InvalidSpec(format!(
            "spaced bars need n, a, b >= 1, got n={}, a={}, b={}",
            n, a, b
        )));
    }
    let period = (a + b) as i64;
    Ok((0..n as i64)
        .flat_map(|i| (0..a as i64).map(move |j| Cell::new(i * period + j, 0)))
        .collect())
}

pub fn make_square(k: u32) -> Result<Polyomino, Error> {
    make_rect(k, k)
}

/// A filled a-by-b rectangle: a columns, b rows.
pub fn make_rect(a: u32, b: u32) -> Result<Polyomino, Error> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidSpec(format!(
            "rectangle sides must be at least 1, got {}x{}",
            a, b
        )));
    }
    Ok((0..a as i64)
        .flat_map(|x| (0..b as i64).map(move |y| Cell::new(x, y)))
        .collect())
}

/// The plus-shaped pentomino, the smallest 90-degree symmetric polyomino
/// that is neither a point nor a square.
pub fn make_x_pentomino() -> Polyomino {
    [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]
        .into_iter()
        .map(|(x, y)| Cell::new(x, y))
        .collect()
}

/// A rectangular log with unit spikes on its boundary.
///
/// The log occupies 0..width by 0..height. Each spike is a single cell
/// outside the log sharing an edge with it, and any two spikes must be
/// separated by at least two blank cells when walking the ring of cells
/// surrounding the log (the ring has 2*width + 2*height + 4 cells,
/// counting its four corners, which cannot hold spikes).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpikyLogSpec {
    pub width: u32,
    pub height: u32,
    pub spikes: Vec<Cell>,
}

/// The ring of cells surrounding a width-by-height log, in cyclic walk
/// order: counterclockwise from the corner (-1, -1).
pub fn spike_ring(width: u32, height: u32) -> Vec<Cell> {
    let (w, h) = (width as i64, height as i64);
    let mut ring = Vec::new();
    ring.extend((-1..=w).map(|x| Cell::new(x, -1)));
    ring.extend((0..=h).map(|y| Cell::new(w, y)));
    ring.extend((-1..w).rev().map(|x| Cell::new(x, h)));
    ring.extend((0..h).rev().map(|y| Cell::new(-1, y)));
    ring
}

/// Builds the polyomino described by `spec`, validating every constraint.
pub fn make_spiky_log(spec: &SpikyLogSpec) -> Result<Polyomino, Error> {
    if spec.width < 2 || spec.height < 2 {
        return Err(Error::InvalidSpec(format!(
            "log must be at least 2x2, got {}x{}",
            spec.width, spec.height
        )));
    }
    let log = make_rect(spec.width, spec.height)?;
    let mut seen = BTreeSet::new();
    for &s in &spec.spikes {
        if log.contains(s) {
            return Err(Error::InvalidSpec(format!("spike {} overlaps the log", s)));
        }
        if !seen.insert(s) {
            return Err(Error::InvalidSpec(format!("spike {} is listed twice", s)));
        }
        if !s.neighbors().iter().any(|&n| log.contains(n)) {
            return Err(Error::InvalidSpec(format!(
                "spike {} does not share an edge with the log",
                s
            )));
        }
    }
    // Spacing along the ring: at least two blank ring cells between spikes.
    let ring = spike_ring(spec.width, spec.height);
    let len = ring.len() as i64;
    let mut positions: Vec<i64> = ring
        .iter()
        .enumerate()
        .filter(|(_, c)| seen.contains(c))
        .map(|(i, _)| i as i64)
        .collect();
    positions.sort_unstable();
    if positions.len() >= 2 {
        for k in 0..positions.len() {
            let here = positions[k];
            let next = positions[(k + 1) % positions.len()];
            let gap = (next - here).rem_euclid(len) - 1;
            if gap < 2 {
                return Err(Error::InvalidSpec(format!(
                    "spikes {} and {} have only {} blank ring cell(s) between them",
                    ring[here as usize], ring[next as usize], gap
                )));
            }
        }
    }
    Ok(log.cells().chain(spec.spikes.iter().copied()).collect())
}

const T_TETROMINO: [(i64, i64); 4] = [(0, 0), (1, 0), (2, 0), (1, 1)];
const SQUARE_TETROMINO: [(i64, i64); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];
const U_PENTOMINO: [(i64, i64); 5] = [(0, 0), (2, 0), (0, 1), (1, 1), (2, 1)];

fn template(cells: &[(i64, i64)]) -> Polyomino {
    cells.iter().map(|&(x, y)| Cell::new(x, y)).collect()
}

/// Distinct rotations of a template, each in canonical position.
fn distinct_rotations(p: &Polyomino) -> Vec<Polyomino> {
    let mut out: Vec<Polyomino> = Vec::new();
    let mut shape = p.clone();
    for _ in 0..4 {
        let canon = shape.canonical().expect("templates are nonempty");
        if !out.contains(&canon) {
            out.push(canon);
        }
        shape = shape.rotate90();
    }
    out
}

/// All subsets of `p` congruent to `t` under translation and rotation.
fn embedded_copies(p: &Polyomino, t: &Polyomino) -> Vec<BTreeSet<Cell>> {
    let mut found = BTreeSet::new();
    for shape in distinct_rotations(t) {
        let anchor = shape.cells().next().expect("templates are nonempty");
        // Any embedding maps `anchor` to some cell of `p`.
        for c in p.cells() {
            let (dx, dy) = (c.x - anchor.x, c.y - anchor.y);
            let image: BTreeSet<Cell> =
                shape.cells().map(|s| s.translated(dx, dy)).collect();
            if image.iter().all(|&s| p.contains(s)) {
                found.insert(image);
            }
        }
    }
    found.into_iter().collect()
}

/// A snake is a polyomino containing no T-tetromino and no 2x2 square,
/// up to translation and rotation. Every cell of a snake has at most two
/// edge-adjacent cells inside it.
pub fn is_snake(p: &Polyomino) -> bool {
    embedded_copies(p, &template(&T_TETROMINO)).is_empty()
        && embedded_copies(p, &template(&SQUARE_TETROMINO)).is_empty()
}

/// Number of distinct U-pentomino subsets of a snake. Subsets are counted
/// as cell sets; congruent copies in different positions count separately.
pub fn count_u_turns(p: &Polyomino) -> Result<usize, Error> {
    if !is_snake(p) {
        return Err(Error::NotASnake);
    }
    Ok(embedded_copies(p, &template(&U_PENTOMINO)).len())
}

/// Criterion check tailored to spaced bars: witness square of side a+b,
/// modulus a.
///
/// A certificate exists for large n whenever a does not divide b*b; the
/// residue of the witness area (a+b)^2 modulo a is b*b mod a, so the
/// right-hand side degenerates to 0 when a divides b*b.
pub fn check_spaced_bars(n: u32, a: u32, b: u32) -> Result<Option<Certificate>, Error> {
    let bars = make_spaced_bars(n, a, b)?;
    if a < 2 {
        return Err(Error::InvalidSpec(format!(
            "bar length must be at least 2 to reduce modulo it, got a={}",
            a
        )));
    }
    let witness = make_square(a + b)?;
    criterion::check(&witness, Modulus::new(a)?, &[bars])
}

/// Criterion check tailored to spiky logs: witness X pentomino, modulus 2.
///
/// For a width-by-height log with s spikes the attained norm is
/// width*height + 8 - s against a bound of width*height + s, so five or
/// more spikes produce a certificate.
pub fn check_spiky(spec: &SpikyLogSpec) -> Result<Option<Certificate>, Error> {
    let g = make_spiky_log(spec)?;
    criterion::check(&make_x_pentomino(), Modulus::new(2)?, &[g])
}

/// Criterion check tailored to snakes: witness X pentomino, modulus 3.
///
/// Interior snake cells contribute nothing to the mod-3 convolution, so
/// three or more U-turns force the attained norm below twice the cell
/// count, which is the bound.
pub fn check_snake(p: &Polyomino) -> Result<Option<Certificate>, Error> {
    if !is_snake(p) {
        return Err(Error::NotASnake);
    }
    criterion::check(&make_x_pentomino(), Modulus::new(3)?, &[p.clone()])
}

/// All rookwise-connected polyominoes with exactly `area` cells, one per
/// translation class, in canonical position and deterministic order.
pub fn enumerate_fixed(area: u32) -> Vec<Polyomino> {
    if area == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<Polyomino> = BTreeSet::new();
    level.insert([Cell::new(0, 0)].into_iter().collect());
    for _ in 1..area {
        let mut next = BTreeSet::new();
        for p in &level {
            for c in p.cells() {
                for n in c.neighbors() {
                    if !p.contains(n) {
                        let grown: Polyomino = p.cells().chain([n]).collect();
                        next.insert(grown.canonical().expect("nonempty"));
                    }
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}
