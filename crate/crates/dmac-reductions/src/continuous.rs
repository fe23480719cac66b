use std::cell::{Cell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;

use num::{BigRational, Signed, Zero};

/// Query access to a map `g` on the unit cube `[0, 1]^d`, promised monotone
/// and λ-contracting in ℓ∞. Exact rational arithmetic throughout; values are
/// memoized, and `queries()` counts distinct evaluation points.
pub struct ContinuousOracle {
    g: Box<dyn Fn(&[BigRational]) -> Vec<BigRational>>,
    dim: usize,
    lambda: BigRational,
    epsilon: BigRational,
    memo: RefCell<HashMap<Vec<BigRational>, Vec<BigRational>>>,
    count: Cell<u64>,
}

impl ContinuousOracle {
    pub fn new(
        dim: usize,
        lambda: BigRational,
        epsilon: BigRational,
        g: impl Fn(&[BigRational]) -> Vec<BigRational> + 'static,
    ) -> Rc<Self> {
        assert!(dim >= 1);
        assert!(lambda >= BigRational::zero() && lambda < BigRational::from_integer(1.into()));
        assert!(epsilon > BigRational::zero() && epsilon < BigRational::from_integer(1.into()));
        Rc::new(Self {
            g: Box::new(g),
            dim,
            lambda,
            epsilon,
            memo: RefCell::new(HashMap::new()),
            count: Cell::new(0),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lambda(&self) -> &BigRational {
        &self.lambda
    }

    pub fn epsilon(&self) -> &BigRational {
        &self.epsilon
    }

    pub fn queries(&self) -> u64 {
        self.count.get()
    }

    pub fn eval(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.dim);
        let unit = |v: &BigRational| *v >= BigRational::zero() && *v <= BigRational::from_integer(1.into());
        assert!(x.iter().all(unit), "query outside the unit cube");
        if let Some(v) = self.memo.borrow().get(x) {
            return v.clone();
        }
        let v = (self.g)(x);
        assert_eq!(v.len(), self.dim, "map returned wrong dimension");
        assert!(v.iter().all(unit), "map left the unit cube");
        self.count.set(self.count.get() + 1);
        self.memo.borrow_mut().insert(x.to_vec(), v.clone());
        v
    }
}

/// A solution on the continuous side: an ε-approximate fixed point, or a
/// witness pair against monotonicity or λ-contraction.
#[derive(Clone, Debug)]
pub enum McSolution {
    ApproxFixed(Vec<BigRational>),
    MonoViolation(Vec<BigRational>, Vec<BigRational>),
    ContractionViolation(Vec<BigRational>, Vec<BigRational>),
}

fn le(a: &[BigRational], b: &[BigRational]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn inf_norm(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// Checks a claimed solution against the oracle, exactly.
pub fn validate_mc_solution(g: &ContinuousOracle, sol: &McSolution) -> bool {
    match sol {
        McSolution::ApproxFixed(x) => inf_norm(&g.eval(x), x) <= *g.epsilon(),
        McSolution::MonoViolation(x, y) => le(x, y) && !le(&g.eval(x), &g.eval(y)),
        McSolution::ContractionViolation(x, y) => {
            inf_norm(&g.eval(x), &g.eval(y)) > g.lambda() * inf_norm(x, y)
        }
    }
}
