//! Text serializations of digital images.
//!
//! *Grid* files draw a planar image: every line has the same length, `#`
//! marks a point and `.` an empty cell. The character in row `r` (from the
//! top, zero-based) and column `c` of a file with `rows` lines is the point
//! `(c, rows - 1 - r)`, so `y` increases upward.
//!
//! *Coords* files list one point per line as whitespace-separated integers.
//! Blank lines and lines starting with `#` are ignored; the first point fixes
//! the dimension.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::error::Error;
use crate::lattice::{DigitalImage, LatticePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageFormat {
    Grid,
    Coords,
}

impl FromStr for ImageFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "grid" => Ok(ImageFormat::Grid),
            "coords" => Ok(ImageFormat::Coords),
            other => Err(format!(
                "unknown format '{other}' (expected grid or coords)"
            )),
        }
    }
}

impl ImageFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ImageFormat::Grid => "grid",
            ImageFormat::Coords => "coords",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("line {line}: expected {expected} columns, found {found}")]
    RaggedGrid {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column {column}: unexpected character {ch:?}")]
    BadCell {
        line: usize,
        column: usize,
        ch: char,
    },
    #[error("image has no points")]
    NoPoints,
    #[error("line {line}: expected {expected} coordinates, found {found}")]
    MixedDimensions {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: '{token}' is not an integer")]
    BadInteger { line: usize, token: String },
    #[error("grid files hold planar images, this one has dimension {0}")]
    NotPlanar(usize),
    #[error(transparent)]
    Image(#[from] Error),
}

pub fn parse_image(text: &str, format: ImageFormat, u: usize) -> Result<DigitalImage, FormatError> {
    let points = match format {
        ImageFormat::Grid => parse_grid(text)?,
        ImageFormat::Coords => parse_coords(text)?,
    };
    if points.is_empty() {
        return Err(FormatError::NoPoints);
    }
    Ok(DigitalImage::new(points, u)?)
}

fn parse_grid(text: &str) -> Result<Vec<LatticePoint>, FormatError> {
    let mut lines: Vec<&str> = text.lines().collect();
    while lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }
    let width = lines.first().map_or(0, |l| l.chars().count());
    let rows = lines.len() as i64;
    let mut points = Vec::new();
    for (r, line) in lines.iter().enumerate() {
        let found = line.chars().count();
        if found != width {
            return Err(FormatError::RaggedGrid {
                line: r + 1,
                expected: width,
                found,
            });
        }
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '#' => points.push(LatticePoint::from((c as i64, rows - 1 - r as i64))),
                '.' => {}
                ch => {
                    return Err(FormatError::BadCell {
                        line: r + 1,
                        column: c + 1,
                        ch,
                    })
                }
            }
        }
    }
    Ok(points)
}

fn parse_coords(text: &str) -> Result<Vec<LatticePoint>, FormatError> {
    let mut points = Vec::new();
    let mut dim = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let coords = line
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>().map_err(|_| FormatError::BadInteger {
                    line: i + 1,
                    token: t.to_owned(),
                })
            })
            .collect::<Result<Vec<i64>, _>>()?;
        let expected = *dim.get_or_insert(coords.len());
        if coords.len() != expected {
            return Err(FormatError::MixedDimensions {
                line: i + 1,
                expected,
                found: coords.len(),
            });
        }
        points.push(LatticePoint::new(coords)?);
    }
    Ok(points)
}

/// Serializes an image. Grid output is anchored at the origin when every
/// coordinate is nonnegative; otherwise the bounding box is shifted so its
/// lower-left corner becomes the origin.
pub fn write_image(image: &DigitalImage, format: ImageFormat) -> Result<String, FormatError> {
    match format {
        ImageFormat::Grid => write_grid(image),
        ImageFormat::Coords => Ok(write_coords(image)),
    }
}

fn write_grid(image: &DigitalImage) -> Result<String, FormatError> {
    if image.dim() != 2 {
        return Err(FormatError::NotPlanar(image.dim()));
    }
    let axis = |k: usize| image.points().iter().map(move |p| p.coords()[k]);
    let (min_x, max_x) = (axis(0).min().unwrap(), axis(0).max().unwrap());
    let (min_y, max_y) = (axis(1).min().unwrap(), axis(1).max().unwrap());
    let (x0, y0) = if min_x < 0 || min_y < 0 {
        (min_x, min_y)
    } else {
        (0, 0)
    };
    let mut out = String::new();
    for y in (y0..=max_y).rev() {
        for x in x0..=max_x {
            out.push(if image.contains(&LatticePoint::from((x, y))) {
                '#'
            } else {
                '.'
            });
        }
        out.push('\n');
    }
    Ok(out)
}

fn write_coords(image: &DigitalImage) -> String {
    let mut out = String::new();
    for p in image.points() {
        let mut first = true;
        for c in p.coords() {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{c}");
        }
        out.push('\n');
    }
    out
}
