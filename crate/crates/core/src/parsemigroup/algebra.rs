use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::selem::{sg_mul, sg_star, IdemSet, SElem};
use crate::error::Error;
use crate::exactalg::{Ring, Scalar};
use crate::group::FiniteGroup;

/// A finitely supported linear combination of normal forms: an element of `K_par G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParAlgElt {
    ring: Ring,
    terms: BTreeMap<SElem, Scalar>,
}

impl ParAlgElt {
    pub fn zero(ring: Ring) -> Self {
        ParAlgElt { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring) -> Self {
        Self::monomial(ring, SElem::ONE)
    }

    pub fn monomial(ring: Ring, s: SElem) -> Self {
        Self::term(ring, s, ring.one())
    }

    pub fn term(ring: Ring, s: SElem, c: Scalar) -> Self {
        let mut x = Self::zero(ring);
        x.add_term(s, c);
        x
    }

    /// `[g]`
    pub fn gen(ring: Ring, g: usize) -> Self {
        Self::monomial(ring, SElem::gen(g))
    }

    /// `e_g`
    pub fn e(ring: Ring, g: usize) -> Self {
        Self::monomial(ring, SElem::e(g))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn add_term(&mut self, s: SElem, c: Scalar) {
        let r = self.ring;
        if r.is_zero(&c) {
            return;
        }
        let v = match self.terms.get(&s) {
            Some(old) => r.add(old, &c),
            None => c,
        };
        if r.is_zero(&v) {
            self.terms.remove(&s);
        } else {
            self.terms.insert(s, v);
        }
    }

    /// Terms in canonical `(grp, idem)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&SElem, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &SElem) -> Scalar {
        self.terms.get(s).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Membership in the idempotent subalgebra `B`.
    pub fn in_b(&self) -> bool {
        self.terms.keys().all(|s| s.grp == 0)
    }

    fn check(&self, other: &ParAlgElt) -> Result<(), Error> {
        if self.ring != other.ring {
            Err(Error::RingMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &ParAlgElt) -> Result<ParAlgElt, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ParAlgElt) -> Result<ParAlgElt, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ParAlgElt {
        self.scale(&self.ring.from_i64(-1))
    }

    pub fn scale(&self, c: &Scalar) -> ParAlgElt {
        let mut out = Self::zero(self.ring);
        for (s, x) in &self.terms {
            out.add_term(*s, self.ring.mul(x, c));
        }
        out
    }

    pub fn mul(&self, g: &FiniteGroup, other: &ParAlgElt) -> Result<ParAlgElt, Error> {
        self.check(other)?;
        let r = self.ring;
        let mut out = Self::zero(r);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(sg_mul(g, *a, *b), r.mul(x, y));
            }
        }
        Ok(out)
    }

    /// Applies a map to every monomial and extends linearly.
    pub fn map_monomials(&self, mut f: impl FnMut(SElem) -> SElem) -> ParAlgElt {
        let mut out = Self::zero(self.ring);
        for (s, c) in &self.terms {
            out.add_term(f(*s), c.clone());
        }
        out
    }

    pub fn display(&self, g: &FiniteGroup) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> =
            self.terms
                .iter()
                .map(|(s, c)| {
                    if self.ring.is_one(c) {
                        s.display(g)
                    } else {
                        format!("{}*{}", self.ring.format(c), s.display(g))
                    }
                })
                .collect();
        parts.join(" + ")
    }
}

/// `ε(z)`: the linear extension of `z ↦ z* z`.
pub fn epsilon(g: &FiniteGroup, z: &ParAlgElt) -> ParAlgElt {
    z.map_monomials(|s| sg_mul(g, sg_star(g, s), s))
}

/// `[g] ▷ u = [g] u [g^{-1}]` for `u ∈ B`.
pub fn dom_act(g: &FiniteGroup, x: usize, u: &ParAlgElt) -> Result<ParAlgElt, Error> {
    if !u.in_b() {
        return Err(Error::NotInB);
    }
    Ok(u.map_monomials(|s| dom_act_monomial(g, x, s)))
}

/// `u ◁ [g] = [g^{-1}] u [g]` for `u ∈ B`.
pub fn cod_act(g: &FiniteGroup, u: &ParAlgElt, x: usize) -> Result<ParAlgElt, Error> {
    if !u.in_b() {
        return Err(Error::NotInB);
    }
    Ok(u.map_monomials(|s| cod_act_monomial(g, s, SElem::gen(x))))
}

/// `u ◁ z = Σ c_w w* u w` for `u ∈ B` and any `z`.
pub fn cod_act_alg(g: &FiniteGroup, u: &ParAlgElt, z: &ParAlgElt) -> Result<ParAlgElt, Error> {
    if !u.in_b() {
        return Err(Error::NotInB);
    }
    u.check(z)?;
    let r = u.ring;
    let mut out = ParAlgElt::zero(r);
    for (w, c) in z.terms() {
        for (s, d) in u.terms() {
            out.add_term(cod_act_monomial(g, *s, *w), r.mul(c, d));
        }
    }
    Ok(out)
}

pub(crate) fn dom_act_monomial(g: &FiniteGroup, x: usize, u: SElem) -> SElem {
    sg_mul(g, sg_mul(g, SElem::gen(x), u), SElem::gen(g.inv(x)))
}

pub(crate) fn cod_act_monomial(g: &FiniteGroup, u: SElem, w: SElem) -> SElem {
    sg_mul(g, sg_mul(g, sg_star(g, w), u), w)
}

/// `ν_g = 1 − e_g`.
pub fn nu(ring: Ring, g: usize) -> ParAlgElt {
    let mut x = ParAlgElt::one(ring);
    x.add_term(SElem::e(g), ring.from_i64(-1));
    x
}

/// `∏_{a∈E} e_a` as an algebra element.
pub fn idempotent(ring: Ring, set: IdemSet) -> ParAlgElt {
    ParAlgElt::monomial(ring, SElem::idempotent(set))
}
