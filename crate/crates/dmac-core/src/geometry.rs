use crate::point::Point;

/// A critical box inside a 2D slice: corner `x`, width `w` along the first
/// free dimension, height `h` along the second. The box is the point set
/// `{y : x_1 ≤ y_1 ≤ x_1 + w, x_2 ≤ y_2 ≤ x_2 + h}` (other coordinates
/// pinned by the slice).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CBox {
    pub corner: Point,
    pub w: i64,
    pub h: i64,
}

impl CBox {
    pub fn new(corner: Point, w: i64, h: i64) -> Self {
        assert!(w >= 0 && h >= 0);
        Self { corner, w, h }
    }

    /// Membership in the two free dimensions `d1`, `d2`.
    pub fn contains(&self, d1: usize, d2: usize, p: &Point) -> bool {
        let x = &self.corner;
        x.get(d1) <= p.get(d1)
            && p.get(d1) <= x.get(d1) + self.w
            && x.get(d2) <= p.get(d2)
            && p.get(d2) <= x.get(d2) + self.h
    }

    pub fn area(&self) -> i64 {
        (self.w + 1) * (self.h + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_area() {
        let b = CBox::new(Point::new(vec![2, 3, 9]), 2, 1);
        assert!(b.contains(0, 1, &Point::new(vec![4, 4, 9])));
        assert!(!b.contains(0, 1, &Point::new(vec![5, 4, 9])));
        assert_eq!(b.area(), 6);
    }
}
