//! Seeded random shape generators for stress tests.
//!
//! Both samplers draw from a caller-supplied generator, so a fixed seed
//! reproduces the exact corpus. They construct candidates and accept
//! them only when the library's own validators agree, which keeps the
//! samplers honest about the families they claim to produce.

use polyconv_core::families::{
    count_u_turns, is_snake, make_spiky_log, spike_ring, SpikyLogSpec,
};
use polyconv_core::grid::{Cell, Polyomino};
use rand::seq::SliceRandom;
use rand::Rng;

/// Shortest distance between two positions on a cycle of `len`.
fn cyclic_gap(i: usize, j: usize, len: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(len - d)
}

/// A random valid spiky log with exactly `spikes` spikes on a log with
/// sides in 2..=8.
///
/// Spike positions are drawn by shuffling the ring of cells around the
/// log and keeping positions that stay at least three ring steps from
/// every earlier pick, which leaves two blank ring cells between any two
/// spikes. Log sizes too small for the requested spike count are
/// redrawn.
pub fn random_spiky_log<R: Rng>(rng: &mut R, spikes: usize) -> SpikyLogSpec {
    assert!(spikes <= 8, "the sampler draws at most 8 spikes, not {}", spikes);
    loop {
        let width = rng.gen_range(2..=8u32);
        let height = rng.gen_range(2..=8u32);
        let ring = spike_ring(width, height);
        let len = ring.len();
        if spikes > 0 && len < 3 * spikes {
            continue;
        }
        let corners = [
            Cell::new(-1, -1),
            Cell::new(width as i64, -1),
            Cell::new(width as i64, height as i64),
            Cell::new(-1, height as i64),
        ];
        let mut order: Vec<usize> = (0..len).collect();
        order.shuffle(rng);
        let mut kept: Vec<usize> = Vec::new();
        for i in order {
            if kept.len() == spikes {
                break;
            }
            if corners.contains(&ring[i]) {
                continue;
            }
            if kept.iter().all(|&j| cyclic_gap(i, j, len) >= 3) {
                kept.push(i);
            }
        }
        if kept.len() < spikes {
            continue;
        }
        kept.sort_unstable();
        let spec = SpikyLogSpec {
            width,
            height,
            spikes: kept.into_iter().map(|i| ring[i]).collect(),
        };
        debug_assert!(make_spiky_log(&spec).is_ok());
        return spec;
    }
}

/// A random snake with at least `min_u_turns` U-turns.
///
/// The walk lays horizontal legs of random length joined by two-cell
/// vertical risers, flipping direction at each riser; every such
/// switchback encloses one U-turn. The result is accepted only when the
/// snake validator and the U-turn counter agree with the request.
pub fn random_snake<R: Rng>(rng: &mut R, min_u_turns: usize) -> Polyomino {
    loop {
        let legs = min_u_turns + 1 + rng.gen_range(0..=2);
        let mut cells: Vec<Cell> = vec![Cell::new(0, 0)];
        let mut cur = Cell::new(0, 0);
        let mut step = if rng.gen() { 1 } else { -1 };
        for leg in 0..legs {
            for _ in 0..rng.gen_range(2..=5) {
                cur = cur.translated(step, 0);
                cells.push(cur);
            }
            if leg + 1 < legs {
                for _ in 0..2 {
                    cur = cur.translated(0, 1);
                    cells.push(cur);
                }
                step = -step;
            }
        }
        let snake: Polyomino = cells.into_iter().collect();
        if is_snake(&snake) && count_u_turns(&snake).unwrap() >= min_u_turns {
            return snake;
        }
    }
}
