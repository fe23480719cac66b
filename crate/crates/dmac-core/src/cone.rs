use crate::point::Point;

/// Axis cone selector. `Up` is the cone opening upward in the chosen
/// dimension, `Down` its mirror.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConeKind {
    Up,
    Down,
}

/// Strength of an observed displacement: `Strict` for a strict inequality at
/// the anchor, `Weak` for a non-strict one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strictness {
    Strict,
    Weak,
}

/// Membership in the axis cone anchored at `anchor`:
/// `Up`:   `p_dim − a_dim ≥ |p_j − a_j|` for every `j`;
/// `Down`: `a_dim − p_dim ≥ |p_j − a_j|` for every `j`.
pub fn in_cone(kind: ConeKind, dim: usize, anchor: &Point, p: &Point) -> bool {
    assert_eq!(anchor.dim(), p.dim());
    let axis = match kind {
        ConeKind::Up => p.get(dim) - anchor.get(dim),
        ConeKind::Down => anchor.get(dim) - p.get(dim),
    };
    (0..p.dim()).all(|j| axis >= (p.get(j) - anchor.get(j)).abs())
}

/// Elimination by non-expansion through a cone.
///
/// After observing that `f` moves dimension `dim` *down* at `anchor`
/// (`kind = Up`), every `p` in the upward cone `UC_dim(anchor)` inherits the
/// observation: non-expansion gives `f_dim(p) ≤ f_dim(anchor) + ‖p−anchor‖∞`
/// and cone membership makes the axis gap the norm, so a `Strict` observation
/// (`f_dim(anchor) < anchor_dim`) rules `p` out of the up-set entirely, while
/// a `Weak` one (`≤`) still forces `f_dim(p) ≤ p_dim`. `kind = Down` mirrors
/// this against the down-set. The geometry is the same for both strengths;
/// what differs is the guarantee the caller may rely on.
pub fn cone_eliminates(
    kind: ConeKind,
    dim: usize,
    anchor: &Point,
    strictness: Strictness,
    p: &Point,
) -> bool {
    let _ = strictness;
    in_cone(kind, dim, anchor, p)
}

/// Elimination by monotonicity through the order.
///
/// After observing that `f` moves dimension `dim` strictly down at `anchor`,
/// every `p ≤ anchor` with `p_dim = anchor_dim` has
/// `f_dim(p) ≤ f_dim(anchor) < anchor_dim = p_dim`, so `p` is ruled out of
/// the up-set (`kind = Up`). `kind = Down` mirrors with `p ≥ anchor`.
pub fn order_eliminates(kind: ConeKind, dim: usize, anchor: &Point, p: &Point) -> bool {
    if p.get(dim) != anchor.get(dim) {
        return false;
    }
    match kind {
        ConeKind::Up => p.le(anchor),
        ConeKind::Down => anchor.le(p),
    }
}
