//! Wall clock search budget.
//!
//! The core library's budgets count abstract steps so they stay free of
//! any clock. This one trades that determinism for convenience: it lets
//! a command line search run until a deadline passes.

use std::time::{Duration, Instant};

use polyconv_core::tiling::Budget;

/// Grants search nodes until a deadline. The clock is consulted once
/// every 1024 ticks, so overshoot is bounded and cheap searches pay
/// almost nothing for the check.
pub struct TimeBudget {
    deadline: Instant,
    phase: u32,
}

impl TimeBudget {
    pub fn new(limit: Duration) -> TimeBudget {
        TimeBudget {
            deadline: Instant::now() + limit,
            phase: 0,
        }
    }
}

impl Budget for TimeBudget {
    fn tick(&mut self) -> bool {
        let due = self.phase == 0;
        self.phase = (self.phase + 1) & 1023;
        if due {
            Instant::now() < self.deadline
        } else {
            true
        }
    }
}
