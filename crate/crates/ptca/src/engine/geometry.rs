//! Lattice geometry: points, neighborhoods, finite regions.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("offset {0} does not match the neighborhood dimension {1}")]
    MixedDimensions(Point, usize),
    #[error("the origin cannot be a neighborhood offset")]
    OriginOffset,
    #[error("duplicate neighborhood offset {0}")]
    DuplicateOffset(Point),
    #[error("region bounds {0} and {1} have different dimensions")]
    MixedRegionDimensions(Point, Point),
    #[error("region lower bound {0} exceeds upper bound {1}")]
    EmptyRegion(Point, Point),
    #[error("cannot parse {0:?} as a lattice point")]
    BadPoint(String),
}

/// A cell of the integer lattice, as a d-tuple of coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Point {
        Point(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Parses "1,2" or "(1,2)".
    pub fn parse(text: &str) -> Result<Point, GeometryError> {
        let inner = text
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if inner.is_empty() {
            return Err(GeometryError::BadPoint(text.to_string()));
        }
        let coords: Result<Vec<i64>, _> = inner.split(',').map(|c| c.trim().parse()).collect();
        match coords {
            Ok(cs) => Ok(Point(cs)),
            Err(_) => Err(GeometryError::BadPoint(text.to_string())),
        }
    }
}

fn fmt_point(coords: &[i64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_point(&self.0, f)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_point(&self.0, f)
    }
}

/// An ordered finite set of nonzero offsets. The order fixes the
/// positions of the transition rule's arguments and every neighbor scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhood {
    offsets: Vec<Point>,
}

impl Neighborhood {
    pub fn explicit(offsets: Vec<Point>) -> Result<Neighborhood, GeometryError> {
        if offsets.is_empty() {
            return Err(GeometryError::ZeroDimension);
        }
        let dim = offsets[0].dim();
        for (i, o) in offsets.iter().enumerate() {
            if o.dim() != dim {
                return Err(GeometryError::MixedDimensions(o.clone(), dim));
            }
            if o.is_origin() {
                return Err(GeometryError::OriginOffset);
            }
            if offsets[..i].contains(o) {
                return Err(GeometryError::DuplicateOffset(o.clone()));
            }
        }
        Ok(Neighborhood { offsets })
    }

    pub fn offsets(&self) -> &[Point] {
        &self.offsets
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.offsets[0].dim()
    }
}

/// The 2d unit offsets, in lexicographic order.
pub fn von_neumann(d: usize) -> Result<Neighborhood, GeometryError> {
    if d == 0 {
        return Err(GeometryError::ZeroDimension);
    }
    let mut offsets = Vec::with_capacity(2 * d);
    for axis in 0..d {
        for sign in [-1i64, 1] {
            let mut coords = vec![0i64; d];
            coords[axis] = sign;
            offsets.push(Point::new(coords));
        }
    }
    offsets.sort();
    Neighborhood::explicit(offsets)
}

/// The 3^d - 1 offsets with every component in {-1, 0, 1}, origin
/// excluded, in lexicographic order.
pub fn moore(d: usize) -> Result<Neighborhood, GeometryError> {
    if d == 0 {
        return Err(GeometryError::ZeroDimension);
    }
    let mut offsets = Vec::new();
    let mut current = vec![-1i64; d];
    loop {
        let p = Point::new(current.clone());
        if !p.is_origin() {
            offsets.push(p);
        }
        let mut axis = d;
        loop {
            if axis == 0 {
                return Neighborhood::explicit(offsets);
            }
            axis -= 1;
            if current[axis] < 1 {
                current[axis] += 1;
                for c in current.iter_mut().skip(axis + 1) {
                    *c = -1;
                }
                break;
            }
        }
    }
}

/// An inclusive bounding box of lattice points. The automaton lives on
/// the infinite lattice conceptually; configurations only materialize
/// the cells inside a region, and neighbors outside it read as absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    lower: Point,
    upper: Point,
}

impl Region {
    pub fn new(lower: Point, upper: Point) -> Result<Region, GeometryError> {
        if lower.dim() != upper.dim() {
            return Err(GeometryError::MixedRegionDimensions(lower, upper));
        }
        if lower
            .coords()
            .iter()
            .zip(upper.coords())
            .any(|(l, u)| l > u)
        {
            return Err(GeometryError::EmptyRegion(lower, upper));
        }
        Ok(Region { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    pub fn lower(&self) -> &Point {
        &self.lower
    }

    pub fn upper(&self) -> &Point {
        &self.upper
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim()
            && p.coords()
                .iter()
                .zip(self.lower.coords().iter().zip(self.upper.coords()))
                .all(|(c, (l, u))| l <= c && c <= u)
    }

    pub fn cell_count(&self) -> usize {
        self.lower
            .coords()
            .iter()
            .zip(self.upper.coords())
            .map(|(l, u)| (u - l + 1) as usize)
            .product()
    }

    /// All points of the region in lexicographic (row-major) order.
    pub fn points(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.cell_count());
        let mut current = self.lower.coords().to_vec();
        loop {
            out.push(Point::new(current.clone()));
            let mut axis = self.dim();
            loop {
                if axis == 0 {
                    return out;
                }
                axis -= 1;
                if current[axis] < self.upper.coords()[axis] {
                    current[axis] += 1;
                    for (c, l) in current.iter_mut().zip(self.lower.coords()).skip(axis + 1) {
                        *c = *l;
                    }
                    break;
                }
            }
        }
    }
}
