//! Discrete convolution of integer grids and reduction modulo n.
//!
//! The convolution of f and g is h(n, m) = sum over (k, l) of
//! f(k, l) * g(n-k, m-l). Because grids here are sparse, the product is
//! computed exactly by a double loop over the two supports; there is no
//! floating-point round-off to worry about. Reducing every value of a
//! convolution to its least nonnegative residue modulo n is the basis of
//! the non-tilability criterion in [`crate::criterion`].

use crate::grid::{IntGrid, Polyomino};
use crate::Error;

/// A modulus for residue arithmetic; always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(n: u32) -> Result<Modulus, Error> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Modulus(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl core::fmt::Display for Modulus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exact convolution of two sparse grids.
pub fn conv(f: &IntGrid, g: &IntGrid) -> IntGrid {
    let mut h = IntGrid::new();
    for (cf, vf) in f.iter() {
        for (cg, vg) in g.iter() {
            h.add_at(cf.translated(cg.x, cg.y), vf * vg);
        }
    }
    h
}

/// Replaces every value by its least nonnegative residue modulo n.
///
/// Cells whose residue is 0 leave the support.
pub fn reduce_mod(h: &IntGrid, n: Modulus) -> IntGrid {
    let m = n.get() as i64;
    h.iter().map(|(c, v)| (c, v.rem_euclid(m))).collect()
}

/// Convolution followed by mod-n reduction.
pub fn conv_mod(f: &IntGrid, g: &IntGrid, n: Modulus) -> IntGrid {
    reduce_mod(&conv(f, g), n)
}

/// True when the polyomino equals its own 90-degree rotation up to
/// translation.
pub fn is_rot90_symmetric(p: &Polyomino) -> Result<bool, Error> {
    Ok(p.rotate90().canonical()? == p.canonical()?)
}
