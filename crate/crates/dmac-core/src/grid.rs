use crate::point::Point;

/// An axis-aligned box of lattice points, inclusive on both ends.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grid {
    lower: Vec<i64>,
    upper: Vec<i64>,
    scale: i64,
}

impl Grid {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Self {
        Self::with_scale(lower, upper, 1)
    }

    pub fn with_scale(lower: Vec<i64>, upper: Vec<i64>, scale: i64) -> Self {
        assert_eq!(lower.len(), upper.len());
        assert!(scale >= 1);
        assert!(
            lower.iter().zip(&upper).all(|(l, u)| l <= u),
            "empty grid: lower {lower:?} upper {upper:?}"
        );
        Self { lower, upper, scale }
    }

    /// The cube {lower..=upper}^dim at scale 1.
    pub fn uniform(dim: usize, lower: i64, upper: i64) -> Self {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    pub fn lower_at(&self, i: usize) -> i64 {
        self.lower[i]
    }

    pub fn upper_at(&self, i: usize) -> i64 {
        self.upper[i]
    }

    /// upper − lower along axis `i` (one less than the number of points).
    pub fn extent(&self, i: usize) -> i64 {
        self.upper[i] - self.lower[i]
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim()
            && p.scale() == self.scale
            && p.coords()
                .iter()
                .enumerate()
                .all(|(i, c)| self.lower[i] <= *c && *c <= self.upper[i])
    }

    pub fn clamp(&self, p: &Point) -> Point {
        assert_eq!(p.dim(), self.dim());
        assert_eq!(p.scale(), self.scale);
        let coords = p
            .coords()
            .iter()
            .enumerate()
            .map(|(i, c)| (*c).clamp(self.lower[i], self.upper[i]))
            .collect();
        Point::with_scale(coords, self.scale)
    }

    pub fn bottom(&self) -> Point {
        Point::with_scale(self.lower.clone(), self.scale)
    }

    pub fn top(&self) -> Point {
        Point::with_scale(self.upper.clone(), self.scale)
    }

    pub fn volume(&self) -> u128 {
        (0..self.dim())
            .map(|i| (self.extent(i) + 1) as u128)
            .product()
    }

    /// Copy with axis `i` rebounded.
    pub fn with_axis_bounds(&self, i: usize, lower: i64, upper: i64) -> Grid {
        assert!(lower <= upper);
        let mut g = self.clone();
        g.lower[i] = lower;
        g.upper[i] = upper;
        g
    }

    /// The same box on a grid refined by `factor`: bounds multiply, the scale
    /// multiplies, and old points `x` correspond to `factor · x`.
    pub fn refined(&self, factor: i64) -> Grid {
        assert!(factor >= 1);
        Grid {
            lower: self.lower.iter().map(|c| c * factor).collect(),
            upper: self.upper.iter().map(|c| c * factor).collect(),
            scale: self.scale * factor,
        }
    }

    /// All grid points in lexicographic order (first coordinate most
    /// significant). Intended for small grids; callers enforce budgets.
    pub fn iter_points(&self) -> GridIter {
        GridIter {
            grid: self.clone(),
            next: Some(self.lower.clone()),
        }
    }
}

pub struct GridIter {
    grid: Grid,
    next: Option<Vec<i64>>,
}

impl Iterator for GridIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let cur = self.next.take()?;
        let out = Point::with_scale(cur.clone(), self.grid.scale);
        let mut cur = cur;
        // advance like an odometer, last coordinate fastest
        for i in (0..cur.len()).rev() {
            if cur[i] < self.grid.upper[i] {
                cur[i] += 1;
                self.next = Some(cur);
                return Some(out);
            }
            cur[i] = self.grid.lower[i];
        }
        self.next = None;
        Some(out)
    }
}
