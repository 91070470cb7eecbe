//! Command line companion to the grid convolution library.
//!
//! The binary in this crate fronts everything the core library can do;
//! the modules here hold the parts worth reusing from tests and scripts:
//! shape shorthand parsing, certificate report parsing, randomized shape
//! samplers, and a wall clock search budget.

pub mod budget;
pub mod report;
pub mod sample;
pub mod shorthand;

mod error;
pub use error::Error;
