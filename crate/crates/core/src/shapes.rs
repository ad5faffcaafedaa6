//! Generators for the named planar constructions.
//!
//! All generators take the adjacency parameter `u` of the returned images.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::DigitalImage;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidShape(msg()))
    }
}

fn at_least_one(n: i64) -> Result<()> {
    require(n >= 1, || format!("n must be at least 1, got {n}"))
}

/// `[0, n]^2`.
pub fn full_square(n: i64, u: usize) -> Result<DigitalImage> {
    at_least_one(n)?;
    DigitalImage::from_xy((0..=n).flat_map(|x| (0..=n).map(move |y| (x, y))), u)
}

/// The serpentine subset of `[0, n]^2` obtained by deleting column `x` at
/// heights `[1, n]` when `x ≡ 1 (mod 4)` and at heights `[0, n-1]` when
/// `x ≡ 3 (mod 4)`. Requires an even `n >= 2`.
pub fn square_snake(n: i64, u: usize) -> Result<DigitalImage> {
    require(n >= 2 && n % 2 == 0, || {
        format!("square snake needs an even n >= 2, got {n}")
    })?;
    let removed = |x: i64, y: i64| match x.rem_euclid(4) {
        1 => (1..=n).contains(&y),
        3 => (0..n).contains(&y),
        _ => false,
    };
    DigitalImage::from_xy(
        (0..=n)
            .flat_map(|x| (0..=n).map(move |y| (x, y)))
            .filter(|&(x, y)| !removed(x, y)),
        u,
    )
}

/// The bar `[0, n] x [0, 2]`.
pub fn rect_bar(n: i64, u: usize) -> Result<DigitalImage> {
    at_least_one(n)?;
    DigitalImage::from_xy((0..=n).flat_map(|x| (0..=2).map(move |y| (x, y))), u)
}

/// The bar with its middle row removed except at `x = 0`, a "C" shape.
pub fn c_bar(n: i64, u: usize) -> Result<DigitalImage> {
    at_least_one(n)?;
    DigitalImage::from_xy(
        (0..=n)
            .flat_map(|x| (0..=2).map(move |y| (x, y)))
            .filter(|&(x, y)| !(y == 1 && x >= 1)),
        u,
    )
}

/// The rectangle and C-shape pair `(rect_bar(n), c_bar(n))`.
pub fn rect_and_c(n: i64, u: usize) -> Result<(DigitalImage, DigitalImage)> {
    Ok((rect_bar(n, u)?, c_bar(n, u)?))
}

/// The bottom row `[0, n] x {0}` of the C shape.
pub fn baseline(n: i64, u: usize) -> Result<DigitalImage> {
    at_least_one(n)?;
    DigitalImage::from_xy((0..=n).map(|x| (x, 0)), u)
}

/// Boundary of the square `[-n, n]^2`: points with `|x| = n` or `|y| = n`.
pub fn square_boundary(n: i64, u: usize) -> Result<DigitalImage> {
    at_least_one(n)?;
    DigitalImage::from_xy(
        (-n..=n)
            .flat_map(|x| (-n..=n).map(move |y| (x, y)))
            .filter(|&(x, y)| x.abs() == n || y.abs() == n),
        u,
    )
}

/// The square boundary with its corner `(n, n)` removed.
pub fn punctured_boundary(n: i64, u: usize) -> Result<DigitalImage> {
    let full = square_boundary(n, u)?;
    DigitalImage::from_xy(
        full.points()
            .iter()
            .map(|p| (p.coords()[0], p.coords()[1]))
            .filter(|&q| q != (n, n)),
        u,
    )
}

/// `(square_boundary(n), punctured_boundary(n))`.
pub fn square_annulus(n: i64, u: usize) -> Result<(DigitalImage, DigitalImage)> {
    Ok((square_boundary(n, u)?, punctured_boundary(n, u)?))
}

/// A generator family, named as on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeFamily {
    FullSquare,
    SquareSnake,
    RectBar,
    CBar,
    RectAndC,
    Baseline,
    SquareAnnulus,
    PuncturedAnnulus,
}

impl ShapeFamily {
    pub const ALL: [ShapeFamily; 8] = [
        ShapeFamily::FullSquare,
        ShapeFamily::SquareSnake,
        ShapeFamily::RectBar,
        ShapeFamily::CBar,
        ShapeFamily::RectAndC,
        ShapeFamily::Baseline,
        ShapeFamily::SquareAnnulus,
        ShapeFamily::PuncturedAnnulus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ShapeFamily::FullSquare => "full-square",
            ShapeFamily::SquareSnake => "square-snake",
            ShapeFamily::RectBar => "rect-bar",
            ShapeFamily::CBar => "c-bar",
            ShapeFamily::RectAndC => "rect-and-c",
            ShapeFamily::Baseline => "baseline",
            ShapeFamily::SquareAnnulus => "square-annulus",
            ShapeFamily::PuncturedAnnulus => "punctured-annulus",
        }
    }

    /// Generates the family's images with their labels. Pair families yield
    /// two images (`A`/`B` or `X`/`Y`); the rest yield one, labelled `""`.
    pub fn generate(self, n: i64, u: usize) -> Result<Vec<(&'static str, DigitalImage)>> {
        Ok(match self {
            ShapeFamily::FullSquare => vec![("", full_square(n, u)?)],
            ShapeFamily::SquareSnake => vec![("", square_snake(n, u)?)],
            ShapeFamily::RectBar => vec![("", rect_bar(n, u)?)],
            ShapeFamily::CBar => vec![("", c_bar(n, u)?)],
            ShapeFamily::RectAndC => {
                let (a, b) = rect_and_c(n, u)?;
                vec![("A", a), ("B", b)]
            }
            ShapeFamily::Baseline => vec![("", baseline(n, u)?)],
            ShapeFamily::SquareAnnulus => {
                let (x, y) = square_annulus(n, u)?;
                vec![("X", x), ("Y", y)]
            }
            ShapeFamily::PuncturedAnnulus => vec![("", punctured_boundary(n, u)?)],
        })
    }
}

impl fmt::Display for ShapeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShapeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ShapeFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidShape(format!("unknown family '{s}'")))
    }
}
