//! A convolution test that certifies a set of tiles cannot tile the plane.
//!
//! Let f be a polyomino that is invariant under 90-degree rotation, and
//! let n >= 2. If a set of prototiles admits a tiling of the plane by
//! translated and rotated copies, then for every prototile g the reduced
//! convolution f *_n g is large: writing r for the residue of |f| mod n,
//! both |f *_n g|_1 >= r * |g| and, when r > 0, |f *_n g|_inf >= |g| hold.
//! Violating either inequality strictly for every prototile is therefore a
//! proof of non-tilability, packaged here as a [`Certificate`].
//!
//! The test is one-sided: failing to produce a certificate says nothing.

use alloc::vec::Vec;

use crate::convolve::{self, Modulus};
use crate::families;
use crate::grid::Polyomino;
use crate::Error;

/// Which norm a certificate bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    /// Sum of values (all values are nonnegative after reduction).
    L1,
    /// Number of support cells.
    LInf,
}

impl core::fmt::Display for NormKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            NormKind::L1 => write!(f, "L1"),
            NormKind::LInf => write!(f, "LINF"),
        }
    }
}

/// The attained norm and its bound for one prototile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileBound {
    pub tile: Polyomino,
    /// The attained norm of the reduced convolution with the witness.
    pub lhs: u64,
    /// The lower bound a tiling would force; strictly larger than `lhs`.
    pub rhs: u64,
}

/// A verified proof that a prototile set tiles no plane region
/// periodically: every tile's reduced convolution with the witness falls
/// strictly below the bound a tiling would force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    witness: Polyomino,
    modulus: Modulus,
    norm_kind: NormKind,
    bounds: Vec<TileBound>,
}

impl Certificate {
    /// Assembles a certificate from parts without checking them, so that
    /// serialized certificates can be reconstructed and then judged by
    /// [`Certificate::verify`].
    pub fn from_parts(
        witness: Polyomino,
        modulus: Modulus,
        norm_kind: NormKind,
        bounds: Vec<TileBound>,
    ) -> Certificate {
        Certificate {
            witness,
            modulus,
            norm_kind,
            bounds,
        }
    }

    pub fn witness(&self) -> &Polyomino {
        &self.witness
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn norm_kind(&self) -> NormKind {
        self.norm_kind
    }

    /// Per-tile attained norms and bounds, in tile order.
    pub fn bounds(&self) -> &[TileBound] {
        &self.bounds
    }

    fn tightest(&self) -> &TileBound {
        self.bounds
            .iter()
            .min_by_key(|b| b.rhs - b.lhs)
            .expect("certificates have at least one tile")
    }

    /// Attained norm of the tile with the smallest slack.
    pub fn lhs(&self) -> u64 {
        self.tightest().lhs
    }

    /// Bound of the tile with the smallest slack.
    pub fn rhs(&self) -> u64 {
        self.tightest().rhs
    }

    /// Recomputes everything the certificate claims.
    pub fn verify(&self) -> bool {
        let Ok(fresh) = check_norm(&self.witness, self.modulus, self.norm_kind, &tiles_of(&self.bounds))
        else {
            return false;
        };
        fresh.as_ref() == Some(self)
    }

    /// Serializes the certificate as an indented text block; shapes render
    /// as character grids, two spaces deeper than their headers.
    pub fn render(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut out = alloc::string::String::new();
        let _ = writeln!(out, "certificate:");
        let _ = writeln!(out, "  norm kind: {}", self.norm_kind);
        let _ = writeln!(out, "  modulus: {}", self.modulus);
        let _ = writeln!(out, "  lhs: {}", self.lhs());
        let _ = writeln!(out, "  rhs: {}", self.rhs());
        let _ = writeln!(out, "  witness:");
        for line in self.witness.render().lines() {
            let _ = writeln!(out, "    {}", line);
        }
        for (i, b) in self.bounds.iter().enumerate() {
            let _ = writeln!(
                out,
                "  tile {}: cells={} lhs={} rhs={}",
                i,
                b.tile.area(),
                b.lhs,
                b.rhs
            );
            for line in b.tile.render().lines() {
                let _ = writeln!(out, "    {}", line);
            }
        }
        out
    }
}

impl core::fmt::Display for Certificate {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.render())
    }
}

fn tiles_of(bounds: &[TileBound]) -> Vec<Polyomino> {
    bounds.iter().map(|b| b.tile.clone()).collect()
}

/// Least nonnegative residue of `m` modulo `n`.
pub fn residue(m: u64, n: Modulus) -> u64 {
    m % n.get() as u64
}

/// Evaluates one norm kind for every tile; `Some` only if every tile's
/// attained norm falls strictly below its bound.
fn check_norm(
    f: &Polyomino,
    n: Modulus,
    kind: NormKind,
    tiles: &[Polyomino],
) -> Result<Option<Certificate>, Error> {
    if f.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if !convolve::is_rot90_symmetric(f)? {
        return Err(Error::NotSymmetric);
    }
    if tiles.is_empty() {
        return Err(Error::InvalidSpec("no tiles to check".into()));
    }
    let r = residue(f.area(), n);
    let fg = f.to_grid();
    let mut bounds = Vec::with_capacity(tiles.len());
    for tile in tiles {
        if tile.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let h = convolve::conv_mod(&fg, &tile.to_grid(), n);
        let (lhs, rhs) = match kind {
            NormKind::L1 => (h.norm1(), r * tile.area()),
            NormKind::LInf => (h.norm_inf(), r.min(1) * tile.area()),
        };
        if lhs >= rhs {
            return Ok(None);
        }
        bounds.push(TileBound {
            tile: tile.clone(),
            lhs,
            rhs,
        });
    }
    Ok(Some(Certificate {
        witness: f.clone(),
        modulus: n,
        norm_kind: kind,
        bounds,
    }))
}

/// Runs the non-tilability test with witness `f` and modulus `n` against a
/// prototile set.
///
/// The same norm kind must work for every tile; the L1 norm is tried
/// first because its bound is sharper, falling back to the support-count
/// norm. `Ok(None)` means the test is inconclusive: the tiles may or may
/// not admit a tiling.
pub fn check(
    f: &Polyomino,
    n: Modulus,
    tiles: &[Polyomino],
) -> Result<Option<Certificate>, Error> {
    if let Some(cert) = check_norm(f, n, NormKind::L1, tiles)? {
        return Ok(Some(cert));
    }
    check_norm(f, n, NormKind::LInf, tiles)
}

/// A witness and modulus to try during [`search_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub witness: Polyomino,
    pub modulus: Modulus,
}

/// The default search order: squares of side 2..=max_square crossed with
/// moduli 2..=max_mod, then the X pentomino with the same moduli.
pub fn default_catalog(max_square: u32, max_mod: u32) -> Result<Vec<CatalogEntry>, Error> {
    if max_mod < 2 {
        return Err(Error::InvalidModulus(max_mod));
    }
    let mut catalog = Vec::new();
    for k in 2..=max_square {
        let witness = families::make_square(k)?;
        for n in 2..=max_mod {
            catalog.push(CatalogEntry {
                witness: witness.clone(),
                modulus: Modulus::new(n)?,
            });
        }
    }
    for n in 2..=max_mod {
        catalog.push(CatalogEntry {
            witness: families::make_x_pentomino(),
            modulus: Modulus::new(n)?,
        });
    }
    Ok(catalog)
}

/// Tries each catalog entry in order and returns the first certificate.
///
/// Each entry consumes one step of `budget`; hitting the limit with
/// entries still unchecked is an error, distinct from the `Ok(None)` of an
/// exhausted catalog. `Ok(None)` is not evidence that the tiles tile.
pub fn search_witness(
    tiles: &[Polyomino],
    catalog: &[CatalogEntry],
    budget: Option<u64>,
) -> Result<Option<Certificate>, Error> {
    let mut steps = 0u64;
    for entry in catalog {
        if budget.is_some_and(|limit| steps >= limit) {
            return Err(Error::BudgetExceeded);
        }
        steps += 1;
        if let Some(cert) = check(&entry.witness, entry.modulus, tiles)? {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}
