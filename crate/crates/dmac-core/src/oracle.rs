use std::cell::{Cell, RefCell};
use std::collections::HashMap;
use std::collections::VecDeque;
use std::rc::Rc;

use crate::grid::Grid;
use crate::point::{inf_norm, Point};

/// Panic-message prefix used when a solver aborts because a promised
/// violation-free instance turned out not to be. The CLI maps such panics to
/// a dedicated exit code.
pub const PROMISE_MARKER: &str = "promise violated: ";

const RECENT_CAP: usize = 16;

/// Query access to a grid self-map.
///
/// The oracle memoises evaluations (so a repeated query is free), counts each
/// distinct evaluation once, checks that results stay inside the grid (a hard
/// error otherwise — no valid instance may leave its grid), optionally asserts
/// unit displacement, and keeps a short ring of recent queries for diagnostic
/// dumps when a promise is violated.
pub struct DmacOracle {
    grid: Grid,
    f: Box<dyn Fn(&Point) -> Point>,
    memo: RefCell<HashMap<Vec<i64>, Vec<i64>>>,
    count: Cell<u64>,
    unit_displacement: bool,
    label: String,
    recent: RefCell<VecDeque<(Point, Point)>>,
}

impl DmacOracle {
    pub fn new(grid: Grid, f: impl Fn(&Point) -> Point + 'static) -> Rc<Self> {
        Self::build(grid, f, false, "")
    }

    /// Oracle that additionally asserts `‖f(x) − x‖∞ ≤ 1` on every query.
    pub fn new_unit(grid: Grid, f: impl Fn(&Point) -> Point + 'static) -> Rc<Self> {
        Self::build(grid, f, true, "")
    }

    pub fn with_label(
        grid: Grid,
        f: impl Fn(&Point) -> Point + 'static,
        unit_displacement: bool,
        label: &str,
    ) -> Rc<Self> {
        Self::build(grid, f, unit_displacement, label)
    }

    fn build(
        grid: Grid,
        f: impl Fn(&Point) -> Point + 'static,
        unit_displacement: bool,
        label: &str,
    ) -> Rc<Self> {
        Rc::new(Self {
            grid,
            f: Box::new(f),
            memo: RefCell::new(HashMap::new()),
            count: Cell::new(0),
            unit_displacement,
            label: label.to_string(),
            recent: RefCell::new(VecDeque::new()),
        })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn unit_displacement(&self) -> bool {
        self.unit_displacement
    }

    /// Number of distinct evaluations so far (memo hits are free).
    pub fn queries(&self) -> u64 {
        self.count.get()
    }

    pub fn eval(&self, x: &Point) -> Point {
        if !self.grid.contains(x) {
            self.hard_error(&format!("query {x:?} outside grid"), None);
        }
        if let Some(hit) = self.memo.borrow().get(x.coords()) {
            return Point::with_scale(hit.clone(), x.scale());
        }
        let y = (self.f)(x);
        if !self.grid.contains(&y) {
            self.hard_error(&format!("oracle result {y:?} left the grid"), Some((x, &y)));
        }
        if self.unit_displacement && inf_norm(x, &y) > 1 {
            self.hard_error(
                &format!("unit displacement exceeded: f({x:?}) = {y:?}"),
                Some((x, &y)),
            );
        }
        self.count.set(self.count.get() + 1);
        self.memo
            .borrow_mut()
            .insert(x.coords().to_vec(), y.coords().to_vec());
        let mut recent = self.recent.borrow_mut();
        if recent.len() == RECENT_CAP {
            recent.pop_front();
        }
        recent.push_back((x.clone(), y.clone()));
        y
    }

    /// `f_i(x)`.
    pub fn eval_dim(&self, x: &Point, i: usize) -> i64 {
        self.eval(x).get(i)
    }

    /// `f_i(x) − x_i`.
    pub fn step(&self, x: &Point, i: usize) -> i64 {
        self.eval_dim(x, i) - x.get(i)
    }

    pub fn is_fixed(&self, x: &Point) -> bool {
        &self.eval(x) == x
    }

    pub fn recent_queries(&self) -> Vec<(Point, Point)> {
        self.recent.borrow().iter().cloned().collect()
    }

    fn hard_error(&self, msg: &str, extra: Option<(&Point, &Point)>) -> ! {
        let mut dump = String::new();
        if !self.label.is_empty() {
            dump.push_str(&format!("oracle [{}]\n", self.label));
        }
        if let Some((x, y)) = extra {
            dump.push_str(&format!("offending query: {x:?} -> {y:?}\n"));
        }
        dump.push_str("recent queries:\n");
        for (q, r) in self.recent.borrow().iter() {
            dump.push_str(&format!("  {q:?} -> {r:?}\n"));
        }
        eprintln!("{msg}\n{dump}");
        panic!("{msg}");
    }

    /// Abort because the promise (a violation-free instance) does not hold.
    /// Dumps diagnostics and panics with a recognisable marker.
    pub fn promise_violated(&self, context: &str) -> ! {
        let mut dump = String::new();
        if !self.label.is_empty() {
            dump.push_str(&format!("oracle [{}]\n", self.label));
        }
        dump.push_str("recent queries:\n");
        for (q, r) in self.recent.borrow().iter() {
            dump.push_str(&format!("  {q:?} -> {r:?}\n"));
        }
        eprintln!("{PROMISE_MARKER}{context}\n{dump}");
        panic!("{PROMISE_MARKER}{context}");
    }
}

/// The flip of `p` inside `grid`: each coordinate reflects about the axis
/// midpoint, `x_i ↦ lower_i + upper_i − x_i`.
pub fn flip_point(grid: &Grid, p: &Point) -> Point {
    assert_eq!(grid.dim(), p.dim());
    let coords = p
        .coords()
        .iter()
        .enumerate()
        .map(|(i, c)| grid.lower_at(i) + grid.upper_at(i) - c)
        .collect();
    Point::with_scale(coords, p.scale())
}

/// Conjugate an oracle by the coordinate flip, exchanging the roles of up and
/// down: `flipped(f)(x) = flip(f(flip(x)))`. Fixed points correspond under
/// the flip, and monotonicity/non-expansion are preserved.
pub fn flipped(f: &Rc<DmacOracle>) -> Rc<DmacOracle> {
    let grid = f.grid().clone();
    let inner = Rc::clone(f);
    let g = grid.clone();
    DmacOracle::with_label(
        grid,
        move |x| {
            let y = inner.eval(&flip_point(inner.grid(), x));
            flip_point(&g, &y)
        },
        f.unit_displacement(),
        "flip",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Rc<DmacOracle> {
        // moves every coordinate one step toward 3
        DmacOracle::new_unit(Grid::uniform(2, 1, 5), |x| {
            let coords = x.coords().iter().map(|c| c + (3 - c).signum()).collect();
            Point::new(coords)
        })
    }

    #[test]
    fn memoisation_counts_distinct_queries_once() {
        let f = toy();
        let p = Point::new(vec![1, 5]);
        let a = f.eval(&p);
        let b = f.eval(&p);
        assert_eq!(a, b);
        assert_eq!(f.queries(), 1);
        f.eval(&Point::new(vec![2, 2]));
        assert_eq!(f.queries(), 2);
    }

    #[test]
    fn step_and_fixed() {
        let f = toy();
        assert_eq!(f.step(&Point::new(vec![1, 3]), 0), 1);
        assert_eq!(f.step(&Point::new(vec![1, 3]), 1), 0);
        assert!(f.is_fixed(&Point::new(vec![3, 3])));
    }

    #[test]
    #[should_panic(expected = "outside grid")]
    fn out_of_grid_query_is_a_hard_error() {
        let f = toy();
        f.eval(&Point::new(vec![0, 0]));
    }

    #[test]
    #[should_panic(expected = "left the grid")]
    fn out_of_grid_result_is_a_hard_error() {
        let f = DmacOracle::new(Grid::uniform(1, 0, 3), |x| x.bumped(0, 10));
        f.eval(&Point::new(vec![0]));
    }

    #[test]
    #[should_panic(expected = "unit displacement")]
    fn unit_flag_asserts_displacement() {
        let f = DmacOracle::new_unit(Grid::uniform(1, 0, 9), |x| x.bumped(0, 2));
        f.eval(&Point::new(vec![0]));
    }

    #[test]
    fn flip_conjugation_round_trips() {
        let f = toy();
        let g = flipped(&f);
        // grid is 1..5, so flip(x) = 6 − x; f moves toward 3, and so does the
        // conjugate (3 is the flip fixed point of the axis).
        let p = Point::new(vec![1, 5]);
        let direct = f.eval(&p);
        let via = flip_point(g.grid(), &g.eval(&flip_point(g.grid(), &p)));
        assert_eq!(direct, via);
    }
}
