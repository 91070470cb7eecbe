//! Acceptance suite: twelve end-to-end checks of the library's headline
//! claims, each printed as one pass or fail line with its runtime.
//!
//! Run it alone with `cargo test -p polyconv --test acceptance`. Every
//! criterion carries a runtime ceiling; blowing the ceiling fails the
//! criterion even when the mathematics come out right. Randomized
//! criteria use fixed seeds, so the corpus is the same on every run.

use std::panic::catch_unwind;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestError, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polyconv::sample::{random_snake, random_spiky_log};
use polyconv_core::convolve::{conv, conv_mod, Modulus};
use polyconv_core::criterion::{check, default_catalog, search_witness, NormKind};
use polyconv_core::families::{
    check_snake, check_spiky, enumerate_fixed, make_rect, make_spaced_bars, make_square,
    make_x_pentomino,
};
use polyconv_core::grid::{Cell, IntGrid};
use polyconv_core::tiling::{solve_exact_cover, SolveOutcome, Torus, Unlimited};

type Criterion = fn() -> Result<String, String>;

fn main() {
    let criteria: &[(&str, Duration, Criterion)] = &[
        ("constant norm law", Duration::from_secs(1), c01_constant_norm_law),
        ("bar count tiling boundary", Duration::from_secs(1), c02_bar_boundary),
        ("spaced bars support norm formula", Duration::from_secs(5), c03_support_norm_formula),
        ("plus against rectangles formula", Duration::from_secs(5), c04_rectangle_formula),
        ("spiky log certificates", Duration::from_secs(30), c05_spiky_logs),
        ("snake certificates", Duration::from_secs(30), c06_snakes),
        ("soundness sweep over small polyominoes", Duration::from_secs(120), c07_soundness_sweep),
        ("positive torus tilings", Duration::from_secs(610), c08_positive_tilings),
        ("bars of four torus refutations", Duration::from_secs(300), c09_refutations),
        ("signed tiling of the 288 cell torus", Duration::from_secs(10), c10_signed_tiling),
        ("convolution oracle equivalence", Duration::from_secs(30), c11_oracle_equivalence),
        ("convolution algebra properties", Duration::from_secs(60), c12_algebra_properties),
    ];

    let mut failures = 0;
    for (i, (label, limit, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(criterion).unwrap_or_else(|p| Err(panic_text(p.as_ref())));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= *limit {
                Ok(detail)
            } else {
                Err(format!("took {} with a ceiling of {}", pretty(elapsed), pretty(*limit)))
            }
        });
        match result {
            Ok(detail) => {
                println!("criterion {:02} {}: PASS ({}) {}", i + 1, label, pretty(elapsed), detail);
            }
            Err(reason) => {
                failures += 1;
                println!("criterion {:02} {}: FAIL ({}) {}", i + 1, label, pretty(elapsed), reason);
            }
        }
    }
    if failures > 0 {
        println!("acceptance: {} of {} criteria failed", failures, criteria.len());
        std::process::exit(1);
    }
    println!("acceptance: all {} criteria passed", criteria.len());
}

fn panic_text(p: &(dyn std::any::Any + Send)) -> String {
    if let Some(s) = p.downcast_ref::<&str>() {
        format!("panicked: {}", s)
    } else if let Some(s) = p.downcast_ref::<String>() {
        format!("panicked: {}", s)
    } else {
        "panicked".into()
    }
}

fn pretty(d: Duration) -> String {
    if d < Duration::from_secs(1) {
        format!("{}ms", d.as_millis())
    } else {
        format!("{:.1}s", d.as_secs_f64())
    }
}

fn modulus(n: u32) -> Modulus {
    Modulus::new(n).expect("modulus is at least 2")
}

/// The reduced convolution of the 3x3 square with n spaced bars of
/// length 2 has L1 norm 6 no matter how many bars there are.
fn c01_constant_norm_law() -> Result<String, String> {
    let square = make_square(3).unwrap().to_grid();
    for n in 1..=20 {
        let bars = make_spaced_bars(n, 2, 1).unwrap().to_grid();
        let got = conv_mod(&square, &bars, modulus(2)).norm1();
        if got != 6 {
            return Err(format!("norm1 = {} for n = {}, expected 6", got, n));
        }
    }
    Ok("norm1 = 6 for every n in 1..=20".into())
}

/// The 3x3 square witness certifies n spaced bars exactly when n >= 4;
/// for n <= 3 the bars tile the plane, so no certificate may appear.
fn c02_bar_boundary() -> Result<String, String> {
    for n in 1..=12 {
        let bars = make_spaced_bars(n, 2, 1).unwrap();
        let cert = check(&make_square(3).unwrap(), modulus(2), &[bars]).unwrap();
        if cert.is_some() != (n >= 4) {
            return Err(format!(
                "certificate for n = {} is {}, expected {}",
                n,
                cert.is_some(),
                n >= 4
            ));
        }
    }
    Ok("certificates exactly for n in 4..=12, none for n in 1..=3".into())
}

/// Support norm of the reduced convolution of the (a+b) square with
/// spaced bars: 2(a-1)(a+b), independent of the bar count, whenever a
/// does not divide b*b.
fn c03_support_norm_formula() -> Result<String, String> {
    let mut pairs = 0;
    for a in 2u32..=5 {
        for b in 1u32..=4 {
            if (b * b) % a == 0 {
                continue;
            }
            pairs += 1;
            let square = make_square(a + b).unwrap().to_grid();
            let expected = (2 * (a - 1) * (a + b)) as u64;
            for n in 2..=8 {
                let bars = make_spaced_bars(n, a, b).unwrap().to_grid();
                let got = conv_mod(&square, &bars, modulus(a)).norm_inf();
                if got != expected {
                    return Err(format!(
                        "norm_inf = {} for a={} b={} n={}, expected {}",
                        got, a, b, n, expected
                    ));
                }
            }
        }
    }
    if pairs != 11 {
        return Err(format!("checked {} (a,b) pairs, expected 11", pairs));
    }
    Ok("norm_inf = 2(a-1)(a+b) on 11 pairs, n in 2..=8".into())
}

/// L1 norm of the mod-2 convolution of the plus pentomino with an a-by-b
/// rectangle: ab + 8.
fn c04_rectangle_formula() -> Result<String, String> {
    let x = make_x_pentomino().to_grid();
    for a in 2u32..=8 {
        for b in 2u32..=8 {
            let rect = make_rect(a, b).unwrap().to_grid();
            let got = conv_mod(&x, &rect, modulus(2)).norm1();
            if got != (a * b + 8) as u64 {
                return Err(format!(
                    "norm1 = {} for {}x{}, expected {}",
                    got,
                    a,
                    b,
                    a * b + 8
                ));
            }
        }
    }
    Ok("norm1 = ab + 8 for all a, b in 2..=8".into())
}

/// Every randomized spiky log with 5..=8 spikes earns an L1 certificate
/// from the plus pentomino at modulus 2; with at most 4 spikes that
/// witness stays silent.
fn c05_spiky_logs() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    for i in 0..100 {
        let spikes = rng.gen_range(5..=8);
        let spec = random_spiky_log(&mut rng, spikes);
        match check_spiky(&spec).unwrap() {
            Some(cert) if cert.norm_kind() == NormKind::L1 => {}
            Some(cert) => {
                return Err(format!(
                    "sample {} ({} spikes) certified via {} instead of L1",
                    i,
                    spikes,
                    cert.norm_kind()
                ))
            }
            None => {
                return Err(format!("sample {} with {} spikes got no certificate", i, spikes))
            }
        }
    }
    for i in 0..100 {
        let spikes = rng.gen_range(0..=4);
        let spec = random_spiky_log(&mut rng, spikes);
        if check_spiky(&spec).unwrap().is_some() {
            return Err(format!(
                "sample {} with only {} spikes unexpectedly certified",
                i, spikes
            ));
        }
    }
    Ok("100 logs with 5..=8 spikes certified, 100 with <=4 spikes inconclusive".into())
}

/// Every randomized snake with at least three U-turns earns a
/// certificate from the plus pentomino at modulus 3.
fn c06_snakes() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    for i in 0..50 {
        let min_u_turns = 3 + rng.gen_range(0..=2);
        let snake = random_snake(&mut rng, min_u_turns);
        if check_snake(&snake).unwrap().is_none() {
            return Err(format!(
                "snake {} with at least {} U-turns got no certificate",
                i, min_u_turns
            ));
        }
    }
    Ok("50 snakes with >=3 U-turns all certified".into())
}

/// Every rookwise-connected polyomino with at most 6 cells tiles the
/// plane, so the whole default witness catalog must stay silent on all
/// of them.
fn c07_soundness_sweep() -> Result<String, String> {
    let expected_counts: [usize; 6] = [1, 2, 6, 19, 63, 216];
    let catalog = default_catalog(7, 6).unwrap();
    let mut total = 0;
    for area in 1u32..=6 {
        let shapes = enumerate_fixed(area);
        if shapes.len() != expected_counts[area as usize - 1] {
            return Err(format!(
                "enumerated {} shapes of area {}, expected {}",
                shapes.len(),
                area,
                expected_counts[area as usize - 1]
            ));
        }
        for shape in shapes {
            total += 1;
            if let Some(cert) = search_witness(&[shape.clone()], &catalog, None).unwrap() {
                return Err(format!(
                    "false positive: a {}-cell tileable polyomino certified ({} mod {}):\n{}",
                    area,
                    cert.norm_kind(),
                    cert.modulus(),
                    shape.render()
                ));
            }
        }
    }
    Ok(format!(
        "{} shapes x {} catalog entries, no certificates",
        total,
        catalog.len()
    ))
}

fn solve_or_fail(
    torus: Torus,
    bars: u32,
    limit: Duration,
) -> Result<Duration, String> {
    let tile = make_spaced_bars(bars, 2, 1).unwrap();
    let start = Instant::now();
    let outcome = solve_exact_cover(torus, &[tile], &mut Unlimited).unwrap();
    let elapsed = start.elapsed();
    match outcome {
        SolveOutcome::Solved(s) => {
            if !s.verify() {
                return Err(format!("solution for {} failed verification", torus));
            }
            if elapsed > limit {
                return Err(format!(
                    "{} solved in {} with a ceiling of {}",
                    torus,
                    pretty(elapsed),
                    pretty(limit)
                ));
            }
            Ok(elapsed)
        }
        other => Err(format!("{} gave {:?}, expected a tiling", torus, other)),
    }
}

/// Two spaced bars tile the 12x6 torus quickly, and three spaced bars
/// tile the 18x18 torus within the ten minute ceiling.
fn c08_positive_tilings() -> Result<String, String> {
    let small = solve_or_fail(Torus::new(12, 6).unwrap(), 2, Duration::from_secs(10))?;
    let large = solve_or_fail(Torus::new(18, 18).unwrap(), 3, Duration::from_secs(600))?;
    Ok(format!(
        "12x6 with two bars in {}, 18x18 with three bars in {}",
        pretty(small),
        pretty(large)
    ))
}

/// Four spaced bars tile no torus with both sides 11 or 12, shown by
/// exhausting the search on every such torus whose area the tile's 8
/// cells could divide.
fn c09_refutations() -> Result<String, String> {
    let tile = make_spaced_bars(4, 2, 1).unwrap();
    let mut checked = Vec::new();
    for p in 11u32..=12 {
        for q in 11u32..=12 {
            if (p as u64 * q as u64) % 8 != 0 {
                continue;
            }
            let torus = Torus::new(p, q).unwrap();
            match solve_exact_cover(torus, &[tile.clone()], &mut Unlimited).unwrap() {
                SolveOutcome::Unsatisfiable => checked.push(torus.to_string()),
                other => return Err(format!("{} gave {:?}, expected Unsatisfiable", torus, other)),
            }
        }
    }
    if checked.is_empty() {
        return Err("no torus in range has area divisible by 8".into());
    }
    Ok(format!("exhausted: {}", checked.join(", ")))
}

/// The signed bar construction covers the 12x24 torus with coefficient
/// exactly 1 on every one of its 288 cells.
fn c10_signed_tiling() -> Result<String, String> {
    let tiling = polyconv_core::tiling::build_signed_tiling_24x12().map_err(|e| e.to_string())?;
    let sum = tiling.sum().map_err(|e| e.to_string())?;
    let total = tiling.torus.cell_count();
    if sum.norm_inf() != total || !sum.iter().all(|(_, v)| v == 1) {
        return Err("signed sum is not identically 1".into());
    }
    Ok(format!(
        "sum = 1 on {}/{} cells using {} signed placements",
        total,
        total,
        tiling.placements.len()
    ))
}

/// The sparse convolution agrees with a dense quadruple loop computed
/// straight from the definition.
fn naive_conv(f: &IntGrid, g: &IntGrid) -> IntGrid {
    let (Some(fb), Some(gb)) = (f.bounding_box(), g.bounding_box()) else {
        return IntGrid::new();
    };
    let mut out = IntGrid::new();
    for n in fb.min.x + gb.min.x..=fb.max.x + gb.max.x {
        for m in fb.min.y + gb.min.y..=fb.max.y + gb.max.y {
            let mut sum = 0;
            for k in fb.min.x..=fb.max.x {
                for l in fb.min.y..=fb.max.y {
                    sum += f.get(Cell::new(k, l)) * g.get(Cell::new(n - k, m - l));
                }
            }
            out.add_at(Cell::new(n, m), sum);
        }
    }
    out
}

fn c11_oracle_equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1011);
    let draw = |rng: &mut ChaCha8Rng| -> IntGrid {
        let entries = rng.gen_range(0..=40);
        (0..entries)
            .map(|_| {
                (
                    Cell::new(rng.gen_range(-8..=8), rng.gen_range(-8..=8)),
                    rng.gen_range(-5..=5),
                )
            })
            .collect()
    };
    for i in 0..1000 {
        let f = draw(&mut rng);
        let g = draw(&mut rng);
        if conv(&f, &g) != naive_conv(&f, &g) {
            return Err(format!("pair {} disagrees with the naive oracle", i));
        }
    }
    Ok("1000 randomized pairs agree with the quadruple loop".into())
}

/// Convolution is commutative, associative and bilinear; reduction
/// commutes with convolution; the taxicab diameter is subadditive.
fn c12_algebra_properties() -> Result<String, String> {
    fn grid() -> impl Strategy<Value = IntGrid> {
        proptest::collection::vec(((-6i64..=6, -6i64..=6), -5i64..=5), 0..12).prop_map(|es| {
            es.into_iter()
                .map(|((x, y), v)| (Cell::new(x, y), v))
                .collect()
        })
    }
    fn run_property<S: Strategy>(
        name: &str,
        strategy: S,
        test: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
    ) -> Result<(), String> {
        let mut runner = TestRunner::new(Config {
            cases: 500,
            failure_persistence: None,
            ..Config::default()
        });
        runner.run(&strategy, test).map_err(|e| match e {
            TestError::Fail(why, _) => format!("{} failed: {}", name, why),
            TestError::Abort(why) => format!("{} aborted: {}", name, why),
        })
    }

    run_property("commutativity", (grid(), grid()), |(f, g)| {
        prop_assert_eq!(conv(&f, &g), conv(&g, &f));
        Ok(())
    })?;
    run_property("associativity", (grid(), grid(), grid()), |(f, g, h)| {
        prop_assert_eq!(conv(&conv(&f, &g), &h), conv(&f, &conv(&g, &h)));
        Ok(())
    })?;
    run_property("bilinearity", (grid(), grid(), grid()), |(f, g, h)| {
        prop_assert_eq!(conv(&f.add(&g), &h), conv(&f, &h).add(&conv(&g, &h)));
        Ok(())
    })?;
    run_property(
        "reduction commutes",
        (grid(), grid(), 2u32..=9),
        |(f, g, n)| {
            let n = Modulus::new(n).unwrap();
            let slow = conv_mod(&f, &g, n);
            let fast = conv_mod(
                &polyconv_core::convolve::reduce_mod(&f, n),
                &polyconv_core::convolve::reduce_mod(&g, n),
                n,
            );
            prop_assert_eq!(slow, fast);
            Ok(())
        },
    )?;
    run_property("diameter subadditivity", (grid(), grid()), |(f, g)| {
        prop_assume!(!f.is_empty() && !g.is_empty());
        let bound = f.diam().unwrap() + g.diam().unwrap();
        prop_assert!(conv(&f, &g).diam().unwrap() <= bound);
        Ok(())
    })?;
    Ok("5 properties x 500 cases".into())
}
