use alloc::vec;
use alloc::vec::Vec;

use super::action::PartialActionModule;
use super::rep::{validate_partial_rep, ParRepModule, Side};
use super::set_action::{linearize_set_action, SetPartialAction};
use crate::error::Error;
use crate::exactalg::{ExactMatrix, Ring};
use crate::group::{FiniteGroup, GroupSpec};
use crate::parsemigroup::{cod_act_monomial, dom_act_monomial, enumerate_idempotents, enumerate_s, sg_mul, SElem};

/// Largest group order for which the regular and `B` modules are materialized.
pub const MAX_REGULAR_ORDER: usize = 8;

fn permutation_like(
    g: &FiniteGroup,
    ring: Ring,
    basis: &[SElem],
    f: impl Fn(usize, SElem) -> SElem,
) -> Vec<ExactMatrix> {
    let index = |s: SElem| basis.binary_search(&s).expect("closed basis");
    (0..g.order())
        .map(|x| {
            let mut m = ExactMatrix::zeros(ring, basis.len(), basis.len());
            for (j, &s) in basis.iter().enumerate() {
                m.set(index(f(x, s)), j, ring.one());
            }
            m
        })
        .collect()
}

/// The trivial module `K` (every `[g]` acts as the identity).
pub fn trivial(g: &FiniteGroup, ring: Ring, side: Side) -> ParRepModule {
    let pi: Vec<ExactMatrix> = (0..g.order()).map(|_| ExactMatrix::identity(ring, 1)).collect();
    validate_partial_rep(g, side, &pi).expect("trivial module")
}

/// `K_par G` acting on itself by left (or right) multiplication, on the basis
/// [`enumerate_s`].
pub fn regular(g: &FiniteGroup, ring: Ring, side: Side) -> Result<ParRepModule, Error> {
    if g.order() > MAX_REGULAR_ORDER {
        return Err(Error::GroupTooLarge(g.order()));
    }
    let basis = enumerate_s(g)?;
    let pi = match side {
        Side::Left => permutation_like(g, ring, &basis, |x, s| sg_mul(g, SElem::gen(x), s)),
        Side::Right => permutation_like(g, ring, &basis, |x, s| sg_mul(g, s, SElem::gen(x))),
    };
    validate_partial_rep(g, side, &pi)
}

/// `B` with `[g] ▷ u = [g]u[g⁻¹]` (left) or `u ◁ [g] = [g⁻¹]u[g]` (right), on the basis
/// of idempotent normal forms.
pub fn b_module(g: &FiniteGroup, ring: Ring, side: Side) -> Result<ParRepModule, Error> {
    if g.order() > MAX_REGULAR_ORDER {
        return Err(Error::GroupTooLarge(g.order()));
    }
    let basis = enumerate_idempotents(g)?;
    let pi = match side {
        Side::Left => permutation_like(g, ring, &basis, |x, u| dom_act_monomial(g, x, u)),
        Side::Right => permutation_like(g, ring, &basis, |x, u| cod_act_monomial(g, u, SElem::gen(x))),
    };
    validate_partial_rep(g, side, &pi)
}

/// Linearization of the two-point action `X_g = {x}`, `θ_g(x) = x` (`g ≠ 1`); for every
/// `g ≠ 1`, `π(g) = diag(1, 0)`.
pub fn two_point(g: &FiniteGroup, ring: Ring) -> ParRepModule {
    linearize_set_action(&SetPartialAction::two_point(g), ring).expect("two-point action")
}

/// Linearization of left translation restricted to a subset of the group.
pub fn restricted_translation(g: &FiniteGroup, ring: Ring, subset: &[usize]) -> Result<ParRepModule, Error> {
    linearize_set_action(&SetPartialAction::restricted_translation(g, subset)?, ring)
}

/// A genuine `G`-module viewed as a partial representation: the permutation module of
/// left (or right) translation on `KG`.
pub fn group_algebra(g: &FiniteGroup, ring: Ring, side: Side) -> ParRepModule {
    let n = g.order();
    let pi: Vec<ExactMatrix> = (0..n)
        .map(|x| {
            let mut m = ExactMatrix::zeros(ring, n, n);
            for y in 0..n {
                let img = match side {
                    Side::Left => g.mul(x, y),
                    Side::Right => g.mul(y, x),
                };
                m.set(img, y, ring.one());
            }
            m
        })
        .collect();
    validate_partial_rep(g, side, &pi).expect("group algebra")
}

/// The rank-6 partial action of `C2 × C2 × C2` on the basis `x, y, z, u, v, w` whose
/// universal `ι` is not injective. Element ids follow [`GroupSpec::Product`]: `a = 4`,
/// `b = 2`, `c = 1`.
pub fn non_globalizable_action(ring: Ring) -> PartialActionModule {
    let c2 = GroupSpec::Cyclic(2);
    let g = FiniteGroup::product(&[c2.clone(), c2.clone(), c2]).expect("C2^3");
    let span = |cols: &[&[i64]]| {
        let mut m = ExactMatrix::zeros(ring, 6, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, ring.from_i64(x));
            }
        }
        m
    };
    let id = |k: usize| ExactMatrix::identity(ring, k);
    let swap = ExactMatrix::from_i64_rows(ring, &[&[0, 1], &[1, 0]]);
    let mut domains = vec![ExactMatrix::zeros(ring, 6, 0); 8];
    let mut maps = vec![ExactMatrix::zeros(ring, 0, 0); 8];
    domains[0] = id(6);
    maps[0] = id(6);
    // a, b, c: a single line each, θ the identity
    domains[4] = span(&[&[1, 1, 0, 0, 0, 0]]);
    domains[2] = span(&[&[0, 0, 1, -1, 0, 0]]);
    domains[1] = span(&[&[0, 0, 0, 0, 1, 1]]);
    for k in [4, 2, 1] {
        maps[k] = id(1);
    }
    // ab = 6: x ↔ u,  ac = 5: y ↔ v,  bc = 3: z ↔ w
    domains[6] = span(&[&[1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0]]);
    domains[5] = span(&[&[0, 1, 0, 0, 0, 0], &[0, 0, 0, 0, 1, 0]]);
    domains[3] = span(&[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]]);
    for k in [6, 5, 3] {
        maps[k] = swap.clone();
    }
    PartialActionModule::new(&g, Side::Left, 6, domains, maps).expect("shapes")
}

/// `C3` acting on `Z` with `M_g = 0` for `g ≠ 1`.
pub fn point_action(ring: Ring) -> PartialActionModule {
    let g = FiniteGroup::cyclic(3).expect("C3");
    let mut domains = vec![ExactMatrix::zeros(ring, 1, 0); 3];
    let mut maps = vec![ExactMatrix::zeros(ring, 0, 0); 3];
    domains[0] = ExactMatrix::identity(ring, 1);
    maps[0] = ExactMatrix::identity(ring, 1);
    PartialActionModule::new(&g, Side::Left, 1, domains, maps).expect("shapes")
}
