use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::rep::{validate_partial_rep, ParRepModule, Side};
use crate::error::Error;
use crate::exactalg::{ExactMatrix, Ring};
use crate::group::FiniteGroup;

/// A partial action of a group on a finite set `{0, …, points-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartialAction {
    group: FiniteGroup,
    names: Vec<String>,
    /// `maps[g][x] = Some(θ_g(x))` exactly when `x ∈ X_{g⁻¹}`.
    maps: Vec<Vec<Option<usize>>>,
}

impl SetPartialAction {
    /// Builds and validates the action from `θ_g` given as partial maps on the points.
    pub fn new(g: &FiniteGroup, names: Vec<String>, maps: Vec<Vec<Option<usize>>>) -> Result<Self, Error> {
        let a = SetPartialAction { group: g.clone(), names, maps };
        a.validate()?;
        Ok(a)
    }

    /// Restriction of a global action (given by `act(g, p)`) to the points in `subset`:
    /// `X_g = A ∩ gA`, `θ_g(x) = g·x`.
    pub fn restrict_global(
        g: &FiniteGroup,
        act: impl Fn(usize, usize) -> usize,
        subset: &[usize],
        names: impl Fn(usize) -> String,
    ) -> Result<Self, Error> {
        let index = |p: usize| subset.iter().position(|&q| q == p);
        let maps = (0..g.order()).map(|x| subset.iter().map(|&p| index(act(x, p))).collect()).collect();
        Self::new(g, subset.iter().map(|&p| names(p)).collect(), maps)
    }

    /// Left translation of `G` on itself restricted to `subset`.
    pub fn restricted_translation(g: &FiniteGroup, subset: &[usize]) -> Result<Self, Error> {
        Self::restrict_global(g, |x, p| g.mul(x, p), subset, |p| String::from(g.name(p)))
    }

    /// Two points `x, y` with `X_g = {x}` and `θ_g(x) = x` for every `g ≠ 1`.
    pub fn two_point(g: &FiniteGroup) -> Self {
        let maps = (0..g.order()).map(|x| if x == 0 { vec![Some(0), Some(1)] } else { vec![Some(0), None] }).collect();
        SetPartialAction { group: g.clone(), names: vec![String::from("x"), String::from("y")], maps }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn theta(&self, g: usize, x: usize) -> Option<usize> {
        self.maps[g][x]
    }

    /// `X_g` as a membership predicate.
    pub fn in_domain(&self, g: usize, x: usize) -> bool {
        self.maps[self.group.inv(g)][x].is_some()
    }

    fn validate(&self) -> Result<(), Error> {
        let g = &self.group;
        let n = g.order();
        let np = self.points();
        let bad = |msg: String| Err(Error::InvalidSetAction(msg));
        if self.maps.len() != n {
            return bad(format!("θ required for every group element ({} given)", self.maps.len()));
        }
        for (x, m) in self.maps.iter().enumerate() {
            if m.len() != np {
                return bad(format!("θ_{} must list all {} points", g.name(x), np));
            }
            if m.iter().flatten().any(|&y| y >= np) {
                return bad(format!("θ_{} maps outside the point set", g.name(x)));
            }
        }
        if (0..np).any(|p| self.maps[0][p] != Some(p)) {
            return bad(String::from("axiom (i): θ_1 must be the identity on all points"));
        }
        for x in 0..n {
            // θ_x : X_{x⁻¹} → X_x must be a bijection
            let mut image: Vec<usize> = self.maps[x].iter().flatten().copied().collect();
            image.sort_unstable();
            let len = image.len();
            image.dedup();
            if image.len() != len {
                return bad(format!("θ_{} is not injective", g.name(x)));
            }
            let dom: Vec<usize> = (0..np).filter(|&p| self.in_domain(x, p)).collect();
            if dom != image {
                return bad(format!("θ_{} does not map onto X_{}", g.name(x), g.name(x)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ai = g.inv(a);
                for p in 0..np {
                    // (ii): θ_a(X_{a⁻¹} ∩ X_{a⁻¹b}) ⊆ X_a ∩ X_b
                    if self.in_domain(ai, p) && self.in_domain(g.mul(ai, b), p) {
                        let q = self.maps[a][p].expect("in domain");
                        if !self.in_domain(b, q) {
                            return bad(format!(
                                "axiom (ii) fails for ({}, {}) at point {}",
                                g.name(a),
                                g.name(b),
                                self.names[p]
                            ));
                        }
                    }
                    // (iii): θ_a θ_b = θ_{ab} on X_{b⁻¹} ∩ X_{b⁻¹a⁻¹}
                    let bi = g.inv(b);
                    if self.in_domain(bi, p) && self.in_domain(g.mul(bi, ai), p) {
                        let q = self.maps[b][p].expect("in domain");
                        let lhs = self.maps[a][q];
                        let rhs = self.maps[g.mul(a, b)][p];
                        if lhs.is_none() || lhs != rhs {
                            return bad(format!(
                                "axiom (iii) fails for ({}, {}) at point {}",
                                g.name(a),
                                g.name(b),
                                self.names[p]
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The partial representation `π_g(x) = θ_g(x)` on `X_{g⁻¹}` and 0 elsewhere.
pub fn linearize_set_action(a: &SetPartialAction, ring: Ring) -> Result<ParRepModule, Error> {
    let np = a.points();
    let pi: Vec<ExactMatrix> = (0..a.group.order())
        .map(|x| {
            let mut m = ExactMatrix::zeros(ring, np, np);
            for p in 0..np {
                if let Some(q) = a.maps[x][p] {
                    m.set(q, p, ring.one());
                }
            }
            m
        })
        .collect();
    validate_partial_rep(&a.group, Side::Left, &pi)
}
