use num::{BigInt, BigRational, One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exact rational from an integer pair.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Owner {
    Max,
    Min,
}

#[derive(Clone, Debug)]
pub struct Action {
    /// Immediate reward in [0, 1].
    pub reward: BigRational,
    /// Successor states with exact probabilities summing to one.
    pub transitions: Vec<(usize, BigRational)>,
}

/// A discounted turn-based stochastic game: each state is owned by the
/// maximizer or the minimizer, who picks among the state's actions.
#[derive(Clone, Debug)]
pub struct TurnBasedGame {
    pub owners: Vec<Owner>,
    pub actions: Vec<Vec<Action>>,
    /// Discount factor λ in [0, 1).
    pub discount: BigRational,
}

impl TurnBasedGame {
    pub fn num_states(&self) -> usize {
        self.owners.len()
    }

    pub fn validate(&self) -> Result<(), String> {
        let n = self.num_states();
        if self.actions.len() != n {
            return Err("one action list per state required".into());
        }
        if self.discount < BigRational::zero() || self.discount >= BigRational::one() {
            return Err("discount must lie in [0, 1)".into());
        }
        for (s, acts) in self.actions.iter().enumerate() {
            if acts.is_empty() {
                return Err(format!("state {s} has no actions"));
            }
            for a in acts {
                if a.reward < BigRational::zero() || a.reward > BigRational::one() {
                    return Err(format!("state {s} has a reward outside [0, 1]"));
                }
                let mut total = BigRational::zero();
                for (t, p) in &a.transitions {
                    if *t >= n {
                        return Err(format!("state {s} transitions to missing state {t}"));
                    }
                    if p < &BigRational::zero() {
                        return Err(format!("state {s} has a negative probability"));
                    }
                    total += p;
                }
                if !total.is_one() {
                    return Err(format!("state {s} has probabilities summing to {total}"));
                }
            }
        }
        Ok(())
    }
}

/// One application of the game's value-improvement operator:
/// `g(v)_s = opt_a [(1 − λ)·reward(a) + λ·Σ p·v_t]`, with `opt` the owner's
/// max or min. The operator is monotone in `v` and λ-contracting in ℓ∞, and
/// maps [0, 1]^n into itself; its unique fixed point is the game's value.
pub fn shapley_operator(game: &TurnBasedGame, v: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(v.len(), game.num_states());
    let lambda = &game.discount;
    let keep = BigRational::one() - lambda;
    game.owners
        .iter()
        .zip(&game.actions)
        .map(|(owner, acts)| {
            let vals = acts.iter().map(|a| {
                let future: BigRational = a
                    .transitions
                    .iter()
                    .map(|(t, p)| p * &v[*t])
                    .sum();
                &keep * &a.reward + lambda * future
            });
            match owner {
                Owner::Max => vals.max(),
                Owner::Min => vals.min(),
            }
            .expect("validated games have at least one action per state")
        })
        .collect()
}

/// Iterates the operator from zero until the standard contraction bound
/// certifies `‖v − v*‖∞ ≤ tol`, and returns that iterate.
pub fn value_iteration(game: &TurnBasedGame, tol: &BigRational) -> Vec<BigRational> {
    assert!(tol > &BigRational::zero());
    let lambda = &game.discount;
    let mut v = vec![BigRational::zero(); game.num_states()];
    for _ in 0..100_000 {
        let next = shapley_operator(game, &v);
        let diff = inf_norm(&next, &v);
        // ‖v_{k+1} − v*‖ ≤ λ/(1−λ) · ‖v_{k+1} − v_k‖
        let bound = lambda / (BigRational::one() - lambda) * &diff;
        v = next;
        if bound <= *tol {
            return v;
        }
    }
    panic!("value iteration failed to certify convergence");
}

fn inf_norm(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// Deterministically generates a small game from a seed: up to `max_states`
/// states, one to three actions each, small-denominator rewards and
/// transition probabilities, and a discount from {1/4, 1/2, 2/3, 3/4}.
pub fn gen_turn_based_game(max_states: usize, seed: u64) -> TurnBasedGame {
    assert!(max_states >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0x67616d65 ^ max_states as u64);
    let n = rng.gen_range(1..=max_states);

    let owners = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Owner::Max
            } else {
                Owner::Min
            }
        })
        .collect();
    let actions = (0..n)
        .map(|_| {
            (0..rng.gen_range(1..=3))
                .map(|_| {
                    let den = rng.gen_range(1..=8);
                    let reward = rational(rng.gen_range(0..=den), den);
                    let support = rng.gen_range(1..=3.min(n));
                    let mut targets: Vec<usize> = Vec::new();
                    while targets.len() < support {
                        let t = rng.gen_range(0..n);
                        if !targets.contains(&t) {
                            targets.push(t);
                        }
                    }
                    let weights: Vec<i64> =
                        (0..targets.len()).map(|_| rng.gen_range(1..=5)).collect();
                    let total: i64 = weights.iter().sum();
                    let transitions = targets
                        .into_iter()
                        .zip(weights)
                        .map(|(t, w)| (t, rational(w, total)))
                        .collect();
                    Action { reward, transitions }
                })
                .collect()
        })
        .collect();

    let discount = match rng.gen_range(0..4) {
        0 => rational(1, 4),
        1 => rational(1, 2),
        2 => rational(2, 3),
        _ => rational(3, 4),
    };
    let game = TurnBasedGame {
        owners,
        actions,
        discount,
    };
    game.validate().expect("generated game must validate");
    game
}

#[cfg(test)]
mod tests {
    use super::*;

    fn self_loop(reward: BigRational) -> Vec<Action> {
        vec![Action {
            reward,
            transitions: vec![(0, BigRational::one())],
        }]
    }

    #[test]
    fn absorbing_state_value_is_its_reward() {
        let game = TurnBasedGame {
            owners: vec![Owner::Max],
            actions: vec![self_loop(rational(3, 7))],
            discount: rational(1, 2),
        };
        game.validate().unwrap();
        // v = (1−λ)r + λv has the reward itself as fixed point.
        let v = vec![rational(3, 7)];
        assert_eq!(shapley_operator(&game, &v), v);
    }

    #[test]
    fn two_state_cycle_has_the_solved_value() {
        // States 0 and 1 hand off to each other; rewards 1 and 0, λ = 1/2.
        // Solving v0 = (1−λ)·1 + λ·v1, v1 = λ·v0 gives v = (2/3, 1/3).
        let game = TurnBasedGame {
            owners: vec![Owner::Max, Owner::Max],
            actions: vec![
                vec![Action {
                    reward: rational(1, 1),
                    transitions: vec![(1, BigRational::one())],
                }],
                vec![Action {
                    reward: rational(0, 1),
                    transitions: vec![(0, BigRational::one())],
                }],
            ],
            discount: rational(1, 2),
        };
        game.validate().unwrap();
        let v = vec![rational(2, 3), rational(1, 3)];
        assert_eq!(shapley_operator(&game, &v), v);

        let approx = value_iteration(&game, &rational(1, 1000));
        assert!(inf_norm(&approx, &v) <= rational(1, 1000));
    }

    #[test]
    fn owners_pick_their_optimum() {
        let two_choices = vec![
            Action {
                reward: rational(1, 1),
                transitions: vec![(0, BigRational::one())],
            },
            Action {
                reward: rational(0, 1),
                transitions: vec![(0, BigRational::one())],
            },
        ];
        let v = vec![rational(1, 2)];
        let mut game = TurnBasedGame {
            owners: vec![Owner::Max],
            actions: vec![two_choices],
            discount: rational(1, 2),
        };
        // (1−λ)r + λ·1/2 = r/2 + 1/4: maximizer sees 3/4, minimizer 1/4.
        assert_eq!(shapley_operator(&game, &v), vec![rational(3, 4)]);
        game.owners[0] = Owner::Min;
        assert_eq!(shapley_operator(&game, &v), vec![rational(1, 4)]);
    }

    #[test]
    fn operator_is_monotone_and_contracting_on_sampled_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for game_seed in 0..10 {
            let game = gen_turn_based_game(6, game_seed);
            let n = game.num_states();
            let sample = |rng: &mut ChaCha8Rng| -> Vec<BigRational> {
                (0..n)
                    .map(|_| {
                        let den = rng.gen_range(1..=9i64);
                        rational(rng.gen_range(0..=den), den)
                    })
                    .collect()
            };
            for _ in 0..100 {
                let a = sample(&mut rng);
                let b = sample(&mut rng);
                let lo: Vec<BigRational> =
                    a.iter().zip(&b).map(|(x, y)| x.min(y).clone()).collect();
                let hi: Vec<BigRational> =
                    a.iter().zip(&b).map(|(x, y)| x.max(y).clone()).collect();
                let g_lo = shapley_operator(&game, &lo);
                let g_hi = shapley_operator(&game, &hi);
                assert!(
                    g_lo.iter().zip(&g_hi).all(|(x, y)| x <= y),
                    "operator must be monotone"
                );
                let g_a = shapley_operator(&game, &a);
                let g_b = shapley_operator(&game, &b);
                assert!(
                    inf_norm(&g_a, &g_b) <= &game.discount * inf_norm(&a, &b),
                    "operator must contract by the discount"
                );
                // And it keeps the unit cube.
                assert!(g_a
                    .iter()
                    .all(|x| *x >= BigRational::zero() && *x <= BigRational::one()));
            }
        }
    }

    #[test]
    fn generation_is_deterministic_and_valid() {
        for seed in 0..20 {
            let a = gen_turn_based_game(6, seed);
            let b = gen_turn_based_game(6, seed);
            assert_eq!(a.num_states(), b.num_states());
            assert_eq!(a.discount, b.discount);
            a.validate().unwrap();
            assert!(a.num_states() <= 6);
        }
    }
}
