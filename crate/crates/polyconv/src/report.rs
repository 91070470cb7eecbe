//! Parsing serialized certificates back into checkable values.
//!
//! A certificate printed by the command line tool is a claim, and claims
//! deserve re-checking: [`parse_and_verify`] reconstructs the value and
//! recomputes every bound it states. The parser also cross-checks the
//! redundant parts of the layout (headline norms, cell counts) so a
//! hand-edited report cannot quietly disagree with itself.

use polyconv_core::convolve::Modulus;
use polyconv_core::criterion::{Certificate, NormKind, TileBound};
use polyconv_core::grid::Polyomino;

use crate::Error;

fn report_error(line: usize, message: impl Into<String>) -> Error {
    Error::Report {
        line,
        message: message.into(),
    }
}

/// Lines of `text` paired with 1-based line numbers.
struct Scanner<'a> {
    lines: Vec<&'a str>,
    next: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Scanner<'a> {
        Scanner {
            lines: text.lines().collect(),
            next: 0,
        }
    }

    fn line_number(&self) -> usize {
        self.next + 1
    }

    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.next).copied()
    }

    fn advance(&mut self) -> Option<&'a str> {
        let line = self.peek()?;
        self.next += 1;
        Some(line)
    }

    /// Consumes `  name: value` and returns the value.
    fn field(&mut self, name: &str) -> Result<&'a str, Error> {
        let at = self.line_number();
        let line = self
            .advance()
            .ok_or_else(|| report_error(at, format!("missing field {:?}", name)))?;
        line.strip_prefix("  ")
            .and_then(|rest| rest.strip_prefix(name))
            .and_then(|rest| rest.strip_prefix(": "))
            .ok_or_else(|| report_error(at, format!("expected field {:?}, got {:?}", name, line)))
    }

    /// Consumes the run of four-space-indented lines and parses them as a
    /// shape.
    fn shape(&mut self) -> Result<Polyomino, Error> {
        let at = self.line_number();
        let mut block = String::new();
        while let Some(body) = self.peek().and_then(|l| l.strip_prefix("    ")) {
            block.push_str(body);
            block.push('\n');
            self.next += 1;
        }
        if block.is_empty() {
            return Err(report_error(at, "expected an indented shape"));
        }
        Polyomino::parse(&block).map_err(|e| report_error(at, e.to_string()))
    }
}

fn parse_number<T: core::str::FromStr>(at: usize, field: &str, text: &str) -> Result<T, Error> {
    text.parse()
        .map_err(|_| report_error(at, format!("{} is not a number: {:?}", field, text)))
}

/// Reconstructs the first serialized certificate found in `text`.
///
/// Text before the block and after it is ignored, so whole command
/// outputs can be fed in directly. The reconstruction is not trusted:
/// call [`Certificate::verify`] (or use [`parse_and_verify`]) to recheck
/// the mathematics.
pub fn parse_certificate(text: &str) -> Result<Certificate, Error> {
    let mut s = Scanner::new(text);
    while let Some(line) = s.peek() {
        if line == "certificate:" {
            break;
        }
        s.next += 1;
    }
    if s.advance().is_none() {
        return Err(report_error(s.line_number(), "no certificate block found"));
    }

    let at = s.line_number();
    let norm_kind = match s.field("norm kind")? {
        "L1" => NormKind::L1,
        "LINF" => NormKind::LInf,
        other => return Err(report_error(at, format!("unknown norm kind {:?}", other))),
    };
    let at = s.line_number();
    let modulus = parse_number::<u32>(at, "modulus", s.field("modulus")?)?;
    let modulus = Modulus::new(modulus).map_err(|e| report_error(at, e.to_string()))?;
    let lhs: u64 = parse_number(s.line_number(), "lhs", s.field("lhs")?)?;
    let rhs: u64 = parse_number(s.line_number(), "rhs", s.field("rhs")?)?;

    let at = s.line_number();
    if s.advance() != Some("  witness:") {
        return Err(report_error(at, "expected a bare \"witness:\" header"));
    }
    let witness = s.shape()?;

    let mut bounds = Vec::new();
    while let Some(rest) = s.peek().and_then(|l| l.strip_prefix("  tile ")) {
        let at = s.line_number();
        s.next += 1;
        let Some((index, fields)) = rest.split_once(": ") else {
            return Err(report_error(at, "expected \"tile N: cells=.. lhs=.. rhs=..\""));
        };
        if parse_number::<usize>(at, "tile index", index)? != bounds.len() {
            return Err(report_error(at, "tile indices must count up from 0"));
        }
        let (mut cells, mut tile_lhs, mut tile_rhs) = (None, None, None);
        for part in fields.split_whitespace() {
            let slot = match part.split_once('=') {
                Some(("cells", v)) => (&mut cells, v),
                Some(("lhs", v)) => (&mut tile_lhs, v),
                Some(("rhs", v)) => (&mut tile_rhs, v),
                _ => return Err(report_error(at, format!("unknown tile field {:?}", part))),
            };
            *slot.0 = Some(parse_number::<u64>(at, "tile field", slot.1)?);
        }
        let (Some(cells), Some(tile_lhs), Some(tile_rhs)) = (cells, tile_lhs, tile_rhs) else {
            return Err(report_error(at, "tile line needs cells=, lhs= and rhs="));
        };
        let tile = s.shape()?;
        if tile.area() != cells {
            return Err(report_error(
                at,
                format!("tile claims {} cells but its shape has {}", cells, tile.area()),
            ));
        }
        bounds.push(TileBound {
            tile,
            lhs: tile_lhs,
            rhs: tile_rhs,
        });
    }
    if bounds.is_empty() {
        return Err(report_error(s.line_number(), "certificate lists no tiles"));
    }

    let cert = Certificate::from_parts(witness, modulus, norm_kind, bounds);
    if (cert.lhs(), cert.rhs()) != (lhs, rhs) {
        return Err(report_error(
            at_headline(text),
            "headline lhs/rhs disagree with the tile bounds",
        ));
    }
    Ok(cert)
}

/// Line number of the headline inside the first certificate block, for
/// error reporting.
fn at_headline(text: &str) -> usize {
    text.lines()
        .position(|l| l == "certificate:")
        .map_or(1, |i| i + 4)
}

/// Parses the certificate and recomputes everything it claims, rejecting
/// any report whose mathematics do not hold up.
pub fn parse_and_verify(text: &str) -> Result<Certificate, Error> {
    let cert = parse_certificate(text)?;
    if !cert.verify() {
        return Err(report_error(
            at_headline(text),
            "certificate failed re-verification",
        ));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyconv_core::criterion::check;
    use polyconv_core::families::{make_spaced_bars, make_square};

    fn sample() -> Certificate {
        let witness = make_square(3).unwrap();
        let bars = make_spaced_bars(4, 2, 1).unwrap();
        check(&witness, Modulus::new(2).unwrap(), &[bars])
            .unwrap()
            .unwrap()
    }

    #[test]
    fn round_trip_preserves_the_certificate() {
        let cert = sample();
        let parsed = parse_and_verify(&cert.render()).unwrap();
        assert_eq!(parsed, cert);
    }

    #[test]
    fn leading_and_trailing_text_is_ignored() {
        let text = format!("witness found:\n{}have a nice day\n", sample().render());
        assert_eq!(parse_and_verify(&text).unwrap(), sample());
    }

    #[test]
    fn multi_tile_certificates_round_trip() {
        let witness = make_square(3).unwrap();
        let tiles = [
            make_spaced_bars(4, 2, 1).unwrap(),
            make_spaced_bars(5, 2, 1).unwrap(),
        ];
        let cert = check(&witness, Modulus::new(2).unwrap(), &tiles)
            .unwrap()
            .unwrap();
        assert_eq!(parse_and_verify(&cert.render()).unwrap(), cert);
    }

    #[test]
    fn tampered_headline_is_caught() {
        let text = sample().render().replace("  rhs: 8", "  rhs: 9");
        let err = parse_certificate(&text).unwrap_err();
        assert!(matches!(err, Error::Report { .. }), "{}", err);
    }

    #[test]
    fn consistently_forged_bounds_fail_verification() {
        // Raise both the headline and the tile bound: the layout is
        // self-consistent, so only re-verification can reject it.
        let text = sample().render().replace("rhs: 8", "rhs: 9").replace("rhs=8", "rhs=9");
        assert!(parse_certificate(&text).is_ok());
        assert!(parse_and_verify(&text).is_err());
    }

    #[test]
    fn missing_block_is_an_error() {
        assert!(matches!(
            parse_certificate("nothing here\n"),
            Err(Error::Report { .. })
        ));
    }

    #[test]
    fn truncated_blocks_are_errors() {
        let full = sample().render();
        for cut in [2, 4, 6] {
            let text: String = full
                .lines()
                .take(cut)
                .map(|l| format!("{}\n", l))
                .collect();
            assert!(parse_certificate(&text).is_err(), "cut at {}", cut);
        }
    }

    #[test]
    fn wrong_cell_count_is_caught() {
        let text = sample().render().replace("cells=8", "cells=9");
        assert!(parse_certificate(&text).is_err());
    }
}
