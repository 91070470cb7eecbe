//! Integer grids, discrete convolutions, and tiling tools for polyominoes.
//!
//! The crate is built around finitely supported integer-valued functions on
//! the square lattice ([`IntGrid`]) and their convolutions. Reducing a
//! convolution modulo a small integer gives a cheap, certifying test that a
//! polyomino cannot tile the plane by translations and rotations; see
//! [`criterion::check`]. The [`tiling`] module complements the criterion
//! with an exact-cover solver for tilings of a torus and with signed
//! tilings, where tiles may be laid down with weight -1.
//!
//! The crate is `no_std` (it only requires `alloc`), keeps no global state,
//! and all iteration orders are deterministic.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod convolve;
pub mod criterion;
pub mod families;
pub mod grid;
pub mod tiling;

mod error;

pub use error::Error;
