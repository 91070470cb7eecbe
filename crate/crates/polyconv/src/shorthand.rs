//! Inline shape specs: family shorthand or a path to a shape file.
//!
//! The grammar keeps the built-in families off the filesystem:
//!
//! - `x` is the plus-shaped pentomino;
//! - `square:K` is the K by K square;
//! - `rect:AxB` is the A wide, B tall rectangle;
//! - `bars:n=N,a=A,b=B` is N collinear bars of length A with gaps of B
//!   blank cells; `a` and `b` default to 2 and 1.
//!
//! Anything else is read as a file in the character grid or CSV format.
//! A file whose name collides with the shorthand grammar can always be
//! reached with a path prefix such as `./`.

use polyconv_core::families;
use polyconv_core::grid::{IntGrid, Polyomino};

use crate::Error;

fn bad(spec: &str, message: impl Into<String>) -> Error {
    Error::Shorthand {
        spec: spec.into(),
        message: message.into(),
    }
}

fn parse_u32(spec: &str, field: &str, text: &str) -> Result<u32, Error> {
    text.parse()
        .map_err(|_| bad(spec, format!("{} must be an unsigned integer, got {:?}", field, text)))
}

fn parse_bars(spec: &str, args: &str) -> Result<Polyomino, Error> {
    let (mut n, mut a, mut b) = (None, None, None);
    for pair in args.split(',') {
        let Some((key, value)) = pair.split_once('=') else {
            return Err(bad(spec, format!("expected key=value, got {:?}", pair)));
        };
        let slot = match key {
            "n" => &mut n,
            "a" => &mut a,
            "b" => &mut b,
            other => return Err(bad(spec, format!("unknown key {:?}, expected n, a or b", other))),
        };
        if slot.is_some() {
            return Err(bad(spec, format!("duplicate key {:?}", key)));
        }
        *slot = Some(parse_u32(spec, key, value)?);
    }
    let Some(n) = n else {
        return Err(bad(spec, "missing required key n"));
    };
    Ok(families::make_spaced_bars(n, a.unwrap_or(2), b.unwrap_or(1))?)
}

fn parse_family(spec: &str) -> Option<Result<Polyomino, Error>> {
    if spec == "x" {
        return Some(Ok(families::make_x_pentomino()));
    }
    let (name, args) = spec.split_once(':')?;
    match name {
        "square" => Some(
            parse_u32(spec, "side", args).and_then(|k| Ok(families::make_square(k)?)),
        ),
        "rect" => Some(args.split_once('x').map_or_else(
            || Err(bad(spec, "expected rect:AxB")),
            |(a, b)| {
                let a = parse_u32(spec, "width", a)?;
                let b = parse_u32(spec, "height", b)?;
                Ok(families::make_rect(a, b)?)
            },
        )),
        "bars" => Some(parse_bars(spec, args)),
        other => Some(Err(bad(
            spec,
            format!("unknown family {:?}, expected square, rect, bars or x", other),
        ))),
    }
}

fn read_shape_file(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.into(),
        message: e.to_string(),
    })
}

/// A polyomino from a family shorthand or a shape file.
pub fn parse_shape(spec: &str) -> Result<Polyomino, Error> {
    match parse_family(spec) {
        Some(result) => result,
        None => Ok(Polyomino::parse(&read_shape_file(spec)?)?),
    }
}

/// An integer grid from a family shorthand or a shape file. Files may
/// carry values other than 1; families are plain polyominoes.
pub fn parse_grid(spec: &str) -> Result<IntGrid, Error> {
    match parse_family(spec) {
        Some(result) => Ok(result?.to_grid()),
        None => Ok(IntGrid::parse(&read_shape_file(spec)?)?),
    }
}

/// Torus dimensions in the form `WxH`.
pub fn parse_torus(spec: &str) -> Result<(u32, u32), Error> {
    let Some((w, h)) = spec.split_once('x') else {
        return Err(bad(spec, "expected WxH"));
    };
    Ok((parse_u32(spec, "width", w)?, parse_u32(spec, "height", h)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_parse() {
        assert_eq!(parse_shape("x").unwrap(), families::make_x_pentomino());
        assert_eq!(
            parse_shape("square:3").unwrap(),
            families::make_square(3).unwrap()
        );
        assert_eq!(
            parse_shape("rect:3x4").unwrap(),
            families::make_rect(3, 4).unwrap()
        );
        assert_eq!(
            parse_shape("bars:n=4,a=2,b=1").unwrap(),
            families::make_spaced_bars(4, 2, 1).unwrap()
        );
    }

    #[test]
    fn bars_defaults_fill_in() {
        assert_eq!(
            parse_shape("bars:n=3").unwrap(),
            families::make_spaced_bars(3, 2, 1).unwrap()
        );
        assert_eq!(
            parse_shape("bars:b=2,n=2").unwrap(),
            families::make_spaced_bars(2, 2, 2).unwrap()
        );
    }

    #[test]
    fn bad_shorthand_is_rejected() {
        for spec in [
            "bars:a=2",
            "bars:n=2,n=3",
            "bars:n=two",
            "bars:n",
            "square:0x",
            "rect:3",
            "blob:5",
        ] {
            assert!(
                matches!(parse_shape(spec), Err(Error::Shorthand { .. })),
                "{:?} should be rejected",
                spec
            );
        }
        // Invalid family parameters surface the library's message.
        assert!(matches!(parse_shape("square:0"), Err(Error::Core(_))));
    }

    #[test]
    fn unknown_name_without_colon_is_a_path() {
        assert!(matches!(
            parse_shape("no-such-file-anywhere"),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn files_round_trip() {
        let dir = std::env::temp_dir();
        let path = dir.join("shorthand-test-shape.txt");
        std::fs::write(&path, "##.##\n").unwrap();
        let spec = path.to_str().unwrap();
        assert_eq!(
            parse_shape(spec).unwrap(),
            families::make_spaced_bars(2, 2, 1).unwrap()
        );
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn grids_may_carry_values() {
        let dir = std::env::temp_dir();
        let path = dir.join("shorthand-test-grid.csv");
        std::fs::write(&path, "0,0,-2\n1,0,3\n").unwrap();
        let grid = parse_grid(path.to_str().unwrap()).unwrap();
        assert_eq!(grid.norm1(), 5);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn torus_specs() {
        assert_eq!(parse_torus("12x6").unwrap(), (12, 6));
        assert!(parse_torus("12").is_err());
        assert!(parse_torus("axb").is_err());
    }
}
