use crate::grid::Grid;
use crate::point::Point;

/// One dimension of a slice: free to vary, or pinned at a coordinate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SliceDim {
    Free,
    Fixed(i64),
}

/// A sub-grid in which some dimensions are pinned. The canonical use is the
/// prefix slice of a point: the first `i` dimensions free, the rest pinned at
/// the point's coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Slice {
    dims: Vec<SliceDim>,
}

impl Slice {
    pub fn new(dims: Vec<SliceDim>) -> Self {
        Self { dims }
    }

    pub fn all_free(dim: usize) -> Self {
        Self { dims: vec![SliceDim::Free; dim] }
    }

    /// First `free` dimensions free, the rest pinned at `x`.
    pub fn prefix_free(x: &Point, free: usize) -> Self {
        assert!(free <= x.dim());
        let dims = (0..x.dim())
            .map(|i| if i < free { SliceDim::Free } else { SliceDim::Fixed(x.get(i)) })
            .collect();
        Self { dims }
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[SliceDim] {
        &self.dims
    }

    pub fn is_free(&self, i: usize) -> bool {
        matches!(self.dims[i], SliceDim::Free)
    }

    pub fn fixed_coord(&self, i: usize) -> Option<i64> {
        match self.dims[i] {
            SliceDim::Free => None,
            SliceDim::Fixed(c) => Some(c),
        }
    }

    pub fn free_dims(&self) -> impl Iterator<Item = usize> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter_map(|(i, d)| matches!(d, SliceDim::Free).then_some(i))
    }

    pub fn free_count(&self) -> usize {
        self.free_dims().count()
    }

    /// Copy with dimension `i` pinned at `c`.
    pub fn pinned(&self, i: usize, c: i64) -> Slice {
        let mut s = self.clone();
        s.dims[i] = SliceDim::Fixed(c);
        s
    }

    pub fn contains(&self, p: &Point) -> bool {
        assert_eq!(p.dim(), self.dim());
        self.dims.iter().enumerate().all(|(i, d)| match d {
            SliceDim::Free => true,
            SliceDim::Fixed(c) => p.get(i) == *c,
        })
    }

    /// Overwrite the pinned coordinates of `p` with the slice's values.
    pub fn embed(&self, p: &Point) -> Point {
        assert_eq!(p.dim(), self.dim());
        let mut q = p.clone();
        for (i, d) in self.dims.iter().enumerate() {
            if let SliceDim::Fixed(c) = d {
                q.set(i, *c);
            }
        }
        q
    }

    /// The grid restricted to this slice: pinned axes collapse to one value.
    pub fn restrict_grid(&self, grid: &Grid) -> Grid {
        assert_eq!(grid.dim(), self.dim());
        let mut g = grid.clone();
        for (i, d) in self.dims.iter().enumerate() {
            if let SliceDim::Fixed(c) = d {
                assert!(
                    grid.lower_at(i) <= *c && *c <= grid.upper_at(i),
                    "slice coordinate {c} outside grid axis {i}"
                );
                g = g.with_axis_bounds(i, *c, *c);
            }
        }
        g
    }
}
