//! Command line front end for the grid convolution library.
//!
//! Exit codes form a trichotomy scripts can rely on: 0 means a definitive
//! answer was produced (a certificate, a tiling, a proof that none
//! exists, or a verified report), 1 means the question stands (no witness
//! matched, a budget ran out), and 2 means the invocation itself was bad.
//! Output never depends on wall time or iteration order, so identical
//! invocations print identical bytes.

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use polyconv::budget::TimeBudget;
use polyconv::shorthand;
use polyconv::Error;
use polyconv_core::convolve::{self, Modulus};
use polyconv_core::criterion;
use polyconv_core::grid::Polyomino;
use polyconv_core::tiling::{
    build_signed_tiling_24x12, solve_exact_cover, Budget, SolveOutcome, Torus, Unlimited,
};

#[derive(Parser)]
#[command(
    name = "polyconv",
    version,
    about = "Convolution-based tiling tests, torus tilers and signed tilings for polyominoes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convolve two grids, optionally reducing values modulo n.
    Conv {
        /// First grid: family shorthand or a shape file.
        f: String,
        /// Second grid: family shorthand or a shape file.
        g: String,
        /// Reduce every value to its least nonnegative residue mod n.
        #[arg(long = "mod")]
        modulus: Option<u32>,
    },
    /// Test a prototile set against one witness shape and modulus.
    Check {
        /// The witness shape; must be 90-degree rotation symmetric.
        #[arg(long)]
        witness: String,
        /// The modulus to reduce the convolution by.
        #[arg(long = "mod")]
        modulus: u32,
        /// The prototiles to test.
        #[arg(required = true)]
        tiles: Vec<String>,
    },
    /// Search the default witness catalog for a certificate.
    Witness {
        /// The prototiles to test.
        #[arg(required = true)]
        tiles: Vec<String>,
        /// Largest witness square side to try.
        #[arg(long, default_value_t = 7)]
        max_square: u32,
        /// Largest modulus to try.
        #[arg(long, default_value_t = 6)]
        max_mod: u32,
        /// Give up after this many witness/modulus pairs.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print a shape and its basic dimensions.
    Family {
        /// Family shorthand or a shape file.
        spec: String,
    },
    /// Search for an exact-cover tiling of a torus.
    Tile {
        /// Torus dimensions, for example 12x6.
        #[arg(long)]
        torus: String,
        /// The prototiles to place.
        #[arg(required = true)]
        tiles: Vec<String>,
        /// Give up after this many seconds of search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Build and verify the signed bar tiling of the 12x24 torus.
    SignedDemo,
    /// Print measurements of one shape.
    Info {
        /// Family shorthand or a shape file.
        shape: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn parse_shapes(specs: &[String]) -> Result<Vec<Polyomino>, Error> {
    specs.iter().map(|s| shorthand::parse_shape(s)).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Conv { f, g, modulus } => {
            let f = shorthand::parse_grid(&f)?;
            let g = shorthand::parse_grid(&g)?;
            let h = match modulus {
                Some(n) => convolve::conv_mod(&f, &g, Modulus::new(n)?),
                None => convolve::conv(&f, &g),
            };
            if h.is_empty() {
                println!("empty result");
            } else {
                println!("norm1: {}", h.norm1());
                println!("norm_inf: {}", h.norm_inf());
                println!("diam: {}", h.diam()?);
                print!("{}", h.render());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            witness,
            modulus,
            tiles,
        } => {
            let witness = shorthand::parse_shape(&witness)?;
            let tiles = parse_shapes(&tiles)?;
            match criterion::check(&witness, Modulus::new(modulus)?, &tiles)? {
                Some(cert) => {
                    print!("{}", cert.render());
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("inconclusive: no certificate from this witness and modulus");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Witness {
            tiles,
            max_square,
            max_mod,
            budget,
        } => {
            let tiles = parse_shapes(&tiles)?;
            let catalog = criterion::default_catalog(max_square, max_mod)?;
            match criterion::search_witness(&tiles, &catalog, budget) {
                Ok(Some(cert)) => {
                    println!("witness found:");
                    print!("{}", cert.render());
                    Ok(ExitCode::SUCCESS)
                }
                Ok(None) => {
                    println!(
                        "inconclusive: catalog of {} witness/modulus pairs exhausted",
                        catalog.len()
                    );
                    Ok(ExitCode::from(1))
                }
                Err(polyconv_core::Error::BudgetExceeded) => {
                    println!("inconclusive: step budget exhausted before the catalog");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Family { spec } => {
            let shape = shorthand::parse_shape(&spec)?;
            let Some(b) = shape.bounding_box() else {
                println!("empty shape");
                return Ok(ExitCode::SUCCESS);
            };
            print!("{}", shape.render());
            println!("cells: {}", shape.area());
            println!(
                "bounding box: {}x{}",
                b.max.x - b.min.x + 1,
                b.max.y - b.min.y + 1
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Tile {
            torus,
            tiles,
            budget,
        } => {
            let (w, h) = shorthand::parse_torus(&torus)?;
            let torus = Torus::new(w, h)?;
            let tiles = parse_shapes(&tiles)?;
            let mut budget: Box<dyn Budget> = match budget {
                Some(secs) => Box::new(TimeBudget::new(Duration::from_secs(secs))),
                None => Box::new(Unlimited),
            };
            match solve_exact_cover(torus, &tiles, budget.as_mut())? {
                SolveOutcome::Solved(s) => {
                    println!("tiling found: {} placements", s.placements.len());
                    print!("{}", s.render());
                    Ok(ExitCode::SUCCESS)
                }
                SolveOutcome::Unsatisfiable => {
                    println!(
                        "unsatisfiable: no tiling of the {} torus by these tiles",
                        torus
                    );
                    Ok(ExitCode::SUCCESS)
                }
                SolveOutcome::BudgetExceeded => {
                    println!("inconclusive: search budget exhausted");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::SignedDemo => {
            let tiling = build_signed_tiling_24x12()?;
            let sum = tiling.sum()?;
            let total = tiling.torus.cell_count();
            let ones = sum.iter().filter(|&(_, v)| v == 1).count() as u64;
            if ones != total {
                return Err(polyconv_core::Error::ConstructionFailed.into());
            }
            println!("signed sum \u{2261} 1 on {}/{} cells", ones, total);
            let plus = tiling.placements.iter().filter(|sp| sp.sign > 0).count();
            println!(
                "placements: {} (+{} / -{})",
                tiling.placements.len(),
                plus,
                tiling.placements.len() - plus
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Info { shape } => {
            let g = shorthand::parse_grid(&shape)?;
            if g.is_empty() {
                println!("empty shape");
                return Ok(ExitCode::SUCCESS);
            }
            println!("support: {}", g.norm_inf());
            println!("norm1: {}", g.norm1());
            println!("diam: {}", g.diam()?);
            match Polyomino::try_from_grid(&g) {
                Ok(p) => {
                    println!("polyomino: yes");
                    println!(
                        "rookwise connected: {}",
                        yes_no(p.is_rookwise_connected()?)
                    );
                    println!(
                        "rot90 symmetric: {}",
                        yes_no(convolve::is_rot90_symmetric(&p)?)
                    );
                }
                Err(_) => println!("polyomino: no"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
