use std::fmt;

/// A lattice point with integer coordinates over a common denominator.
///
/// The point represents the vector `coords / scale`. Plain instances use
/// scale 1; refined grids (halves, quarters) keep all arithmetic in integers
/// by scaling coordinates up instead of introducing floats.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<i64>,
    scale: i64,
}

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords, scale: 1 }
    }

    pub fn with_scale(coords: Vec<i64>, scale: i64) -> Self {
        assert!(scale >= 1, "scale must be positive");
        Self { coords, scale }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn set(&mut self, i: usize, v: i64) {
        self.coords[i] = v;
    }

    /// Copy with coordinate `i` replaced by `v`.
    pub fn with_coord(&self, i: usize, v: i64) -> Self {
        let mut p = self.clone();
        p.coords[i] = v;
        p
    }

    /// Copy with `delta` added to coordinate `i`.
    pub fn bumped(&self, i: usize, delta: i64) -> Self {
        let mut p = self.clone();
        p.coords[i] += delta;
        p
    }

    /// Copy with `delta` added to every coordinate (a diagonal shift).
    pub fn shifted_all(&self, delta: i64) -> Self {
        let mut p = self.clone();
        for c in &mut p.coords {
            *c += delta;
        }
        p
    }

    fn assert_compatible(&self, other: &Point) {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        assert_eq!(self.scale, other.scale, "scale mismatch");
    }

    /// Componentwise order: `self ≤ other` in every coordinate.
    pub fn le(&self, other: &Point) -> bool {
        self.assert_compatible(other);
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    pub fn lt(&self, other: &Point) -> bool {
        self.le(other) && self != other
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Point) -> Point {
        self.assert_compatible(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| *a.min(b))
            .collect();
        Point { coords, scale: self.scale }
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Point) -> Point {
        self.assert_compatible(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| *a.max(b))
            .collect();
        Point { coords, scale: self.scale }
    }
}

/// ℓ∞ distance between two points on the same grid scale.
pub fn inf_norm(x: &Point, y: &Point) -> i64 {
    x.assert_compatible(y);
    x.coords
        .iter()
        .zip(&y.coords)
        .map(|(a, b)| (a - b).abs())
        .max()
        .unwrap_or(0)
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")?;
        if self.scale != 1 {
            write!(f, "/{}", self.scale)?;
        }
        Ok(())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
