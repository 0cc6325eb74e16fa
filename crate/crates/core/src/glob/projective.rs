use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exactalg::{rank, ExactMatrix, Ring, Scalar};
use crate::group::FiniteGroup;
use crate::parsemigroup::{enumerate_idempotents, enumerate_s, sg_mul, sg_star, SElem};

/// Largest group handled by the `N`, `δ`, `φ` certificate.
pub const MAX_CERTIFY_ORDER: usize = 8;

/// A finite sum `Σ c · (g ⊗ s)` in `KG ⊗ K_par G` or (with idempotent `s`) in `KG ⊗ B`.
pub type TensorElt = BTreeMap<(usize, SElem), Scalar>;

fn add_to(ring: Ring, x: &mut TensorElt, key: (usize, SElem), c: Scalar) {
    if ring.is_zero(&c) {
        return;
    }
    let entry = x.entry(key).or_insert_with(|| ring.zero());
    *entry = ring.add(entry, &c);
    if ring.is_zero(entry) {
        x.remove(&key);
    }
}

fn combine(ring: Ring, terms: impl IntoIterator<Item = ((usize, SElem), Scalar)>) -> TensorElt {
    let mut out = TensorElt::new();
    for (k, c) in terms {
        add_to(ring, &mut out, k, c);
    }
    out
}

fn sum(ring: Ring, a: &TensorElt, b: &TensorElt, sign_b: bool) -> TensorElt {
    let mut out = a.clone();
    for (k, c) in b {
        add_to(ring, &mut out, *k, if sign_b { ring.neg(c) } else { c.clone() });
    }
    out
}

/// Right action on `KG ⊗ B`: `(g ⊗ w)·s = g h ⊗ s* w s` for `s = e_E[h]`.
fn kgb_act(g: &FiniteGroup, ring: Ring, x: &TensorElt, s: SElem) -> TensorElt {
    combine(
        ring,
        x.iter().map(|(&(h, w), c)| ((g.mul(h, s.grp), sg_mul(g, sg_star(g, s), sg_mul(g, w, s))), c.clone())),
    )
}

/// Right action on `KG ⊗ K_par G` by multiplication in the second leg.
fn kgs_act(g: &FiniteGroup, ring: Ring, x: &TensorElt, s: SElem) -> TensorElt {
    combine(ring, x.iter().map(|(&(h, z), c)| ((h, sg_mul(g, z, s)), c.clone())))
}

/// `x · Σ c_s s` for an algebra element given as `(monomial, coefficient)` pairs.
fn act_sum(
    g: &FiniteGroup,
    ring: Ring,
    x: &TensorElt,
    z: &[(SElem, Scalar)],
    act: fn(&FiniteGroup, Ring, &TensorElt, SElem) -> TensorElt,
) -> TensorElt {
    let mut out = TensorElt::new();
    for (s, c) in z {
        for (k, v) in act(g, ring, x, *s) {
            add_to(ring, &mut out, k, ring.mul(&v, c));
        }
    }
    out
}

fn nu_terms(ring: Ring, a: usize) -> Vec<(SElem, Scalar)> {
    if a == 0 {
        return Vec::new();
    }
    alloc::vec![(SElem::ONE, ring.one()), (SElem::e(a), ring.neg(&ring.one()))]
}

/// `KG ⊗ B`, its submodule `N` generated by `g ⊗ ν_{g⁻¹}`, and `δ: KG ⊗ K_par G → N`.
#[derive(Clone, Debug)]
pub struct NDelta {
    group: FiniteGroup,
    ring: Ring,
    /// Idempotent normal forms, the basis of `B`.
    pub b_basis: Vec<SElem>,
    /// All normal forms, the basis of `K_par G`.
    pub s_basis: Vec<SElem>,
    /// Basis `g ⊗ ν_{g⁻¹}u` of `N` (`g ≠ 1`, `u ∌ g⁻¹`), recorded as `(g, u)`.
    pub n_basis: Vec<(usize, SElem)>,
    /// `ψ0(g ⊗ u) = [g]u` as a `|S(G)| × |G||B|` matrix.
    pub psi0: ExactMatrix,
    /// `φ0([g]u) = g ⊗ e_{g⁻¹}u` as a `|G||B| × |S(G)|` matrix.
    pub phi0: ExactMatrix,
    /// `N` as columns in `KG ⊗ B`.
    pub n_matrix: ExactMatrix,
}

impl NDelta {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn kgb_dim(&self) -> usize {
        self.group.order() * self.b_basis.len()
    }

    pub fn n_dim(&self) -> usize {
        self.n_basis.len()
    }

    fn b_index(&self, key: (usize, SElem)) -> usize {
        key.0 * self.b_basis.len() + self.b_basis.binary_search(&key.1).expect("idempotent")
    }

    fn s_index(&self, key: (usize, SElem)) -> usize {
        key.0 * self.s_basis.len() + self.s_basis.binary_search(&key.1).expect("normal form")
    }

    /// Coordinates of an element of `KG ⊗ B`.
    pub fn kgb_vector(&self, x: &TensorElt) -> Vec<Scalar> {
        let mut v = alloc::vec![self.ring.zero(); self.kgb_dim()];
        for (k, c) in x {
            v[self.b_index(*k)] = c.clone();
        }
        v
    }

    /// Coordinates of an element of `KG ⊗ K_par G`.
    pub fn kgs_vector(&self, x: &TensorElt) -> Vec<Scalar> {
        let mut v = alloc::vec![self.ring.zero(); self.group.order() * self.s_basis.len()];
        for (k, c) in x {
            v[self.s_index(*k)] = c.clone();
        }
        v
    }

    /// The basis element `g ⊗ ν_{g⁻¹}u` of `N`.
    pub fn n_element(&self, i: usize) -> TensorElt {
        let (h, u) = self.n_basis[i];
        let g = &self.group;
        let one = self.ring.one();
        let start = combine(self.ring, [((h, SElem::ONE), one)]);
        let nu = act_sum(g, self.ring, &start, &nu_terms(self.ring, g.inv(h)), kgb_act);
        kgb_act(g, self.ring, &nu, u)
    }

    /// Coordinates in the basis of `N` of an element of `KG ⊗ B`, or `None` if it is not
    /// in `N`. The basis is unitriangular: `(g, u)` occurs only in `g ⊗ ν_{g⁻¹}u`.
    pub fn n_coordinates(&self, x: &TensorElt) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> =
            self.n_basis.iter().map(|k| x.get(k).cloned().unwrap_or_else(|| self.ring.zero())).collect();
        let mut back = TensorElt::new();
        for (i, c) in coords.iter().enumerate() {
            for (k, v) in self.n_element(i) {
                add_to(self.ring, &mut back, k, self.ring.mul(&v, c));
            }
        }
        (back == *x).then_some(coords)
    }

    /// `δ(g ⊗ z) = (g ⊗ ν_{g⁻¹})·z`.
    pub fn delta(&self, x: &TensorElt) -> TensorElt {
        let g = &self.group;
        let mut out = TensorElt::new();
        for (&(h, z), c) in x {
            let start = combine(self.ring, [((h, SElem::ONE), c.clone())]);
            let nu = act_sum(g, self.ring, &start, &nu_terms(self.ring, g.inv(h)), kgb_act);
            for (k, v) in kgb_act(g, self.ring, &nu, z) {
                add_to(self.ring, &mut out, k, v);
            }
        }
        out
    }
}

/// Builds `KG ⊗ B = im φ0 ⊕ N` and checks `ψ0 φ0 = 1`, the direct sum, and that `N` is a
/// right submodule.
pub fn build_n_delta(g: &FiniteGroup, ring: Ring) -> Result<NDelta, Error> {
    if g.order() > MAX_CERTIFY_ORDER {
        return Err(Error::GroupTooLarge(g.order()));
    }
    let n = g.order();
    let b_basis = enumerate_idempotents(g)?;
    let s_basis = enumerate_s(g)?;
    let mut n_basis = Vec::new();
    for h in 1..n {
        for &u in &b_basis {
            if !u.idem.contains(g.inv(h)) {
                n_basis.push((h, u));
            }
        }
    }
    let mut nd = NDelta {
        group: g.clone(),
        ring,
        b_basis,
        s_basis,
        n_basis,
        psi0: ExactMatrix::zeros(ring, 0, 0),
        phi0: ExactMatrix::zeros(ring, 0, 0),
        n_matrix: ExactMatrix::zeros(ring, 0, 0),
    };
    let kgb = nd.kgb_dim();
    let ns = nd.s_basis.len();
    let mut psi0 = ExactMatrix::zeros(ring, ns, kgb);
    for h in 0..n {
        for &u in &nd.b_basis {
            let s = sg_mul(g, SElem::gen(h), u);
            let col = nd.b_index((h, u));
            psi0.set(nd.s_basis.binary_search(&s).expect("normal form"), col, ring.one());
        }
    }
    let mut phi0 = ExactMatrix::zeros(ring, kgb, ns);
    let unit = combine(ring, [((0, SElem::ONE), ring.one())]);
    for (j, &s) in nd.s_basis.iter().enumerate() {
        for (k, c) in kgb_act(g, ring, &unit, s) {
            phi0.set(nd.b_index(k), j, c);
        }
    }
    let cols: Vec<Vec<Scalar>> = (0..nd.n_dim()).map(|i| nd.kgb_vector(&nd.n_element(i))).collect();
    let n_matrix = ExactMatrix::from_columns(ring, kgb, &cols);
    if !psi0.mul(&phi0)?.is_identity() {
        return Err(Error::ConstructionFailed("ψ0 φ0 is not the identity".into()));
    }
    if !psi0.mul(&n_matrix)?.is_zero() {
        return Err(Error::ConstructionFailed("N is not contained in ker ψ0".into()));
    }
    if rank(&phi0.hcat(&n_matrix))? != kgb || ns + nd.n_dim() != kgb {
        return Err(Error::ConstructionFailed("KG ⊗ B is not im φ0 ⊕ N".into()));
    }
    nd.psi0 = psi0;
    nd.phi0 = phi0;
    nd.n_matrix = n_matrix;
    for i in 0..nd.n_dim() {
        let b = nd.n_element(i);
        for t in 0..n {
            if nd.n_coordinates(&kgb_act(g, ring, &b, SElem::gen(t))).is_none() {
                return Err(Error::ConstructionFailed(format!("N is not closed under [{}]", g.name(t))));
            }
        }
    }
    for h in 1..n {
        let gen = combine(ring, [((h, SElem::ONE), ring.one())]);
        let nu = combine(ring, nu_terms(ring, g.inv(h)).into_iter().map(|(s, c)| ((h, s), c)));
        if nd.delta(&nu) != nu || nd.delta(&gen) != nu {
            return Err(Error::ConstructionFailed(format!("δ fails on {} ⊗ ν", g.name(h))));
        }
    }
    Ok(nd)
}

/// The elements `x_1, …, x_{|G|−1}` and the splitting `φ: N → KG ⊗ K_par G`.
#[derive(Clone, Debug)]
pub struct PhiCertificate {
    pub nd: NDelta,
    pub xs: Vec<TensorElt>,
    /// `φ` on the basis of `N`, as columns in `KG ⊗ K_par G`.
    pub phi: ExactMatrix,
}

/// Runs the recursion `x_{n,1} = g_n ⊗ ν_{g_n⁻¹} + x_1[g_1⁻¹g_n] − g_n ⊗ ν_{g_n⁻¹}e_{g_n⁻¹g_1}`,
/// `x_{n,r} = x_r[g_r⁻¹g_n] + x_{n,r−1}ν_{g_n⁻¹g_r}` along the canonical enumeration, checks
/// `δ(x_n) = g_n ⊗ ν_{g_n⁻¹}` and `x_n[g_n⁻¹g_r] = x_r e_{g_r⁻¹g_n}`, and certifies that
/// `φ(g_n ⊗ ν_{g_n⁻¹}u) = x_n ν_{g_n⁻¹} u` is right linear with `δ φ = 1_N`.
pub fn construct_phi(g: &FiniteGroup, ring: Ring) -> Result<PhiCertificate, Error> {
    let nd = build_n_delta(g, ring)?;
    let n = g.order();
    let gen_nu = |h: usize| combine(ring, nu_terms(ring, g.inv(h)).into_iter().map(|(s, c)| ((h, s), c)));
    // xs[k] holds x_k; index 0 is unused
    let mut xs: Vec<TensorElt> = alloc::vec![TensorElt::new()];
    for k in 1..n {
        let x = if k == 1 {
            gen_nu(1)
        } else {
            let gk_inv = g.inv(k);
            let base = gen_nu(k);
            let shifted = kgs_act(g, ring, &xs[1], SElem::gen(g.mul(g.inv(1), k)));
            let correction = kgs_act(g, ring, &base, SElem::e(g.mul(gk_inv, 1)));
            let mut x = sum(ring, &sum(ring, &base, &shifted, false), &correction, true);
            for r in 2..k {
                let a = kgs_act(g, ring, &xs[r], SElem::gen(g.mul(g.inv(r), k)));
                let b = act_sum(g, ring, &x, &nu_terms(ring, g.mul(gk_inv, r)), kgs_act);
                x = sum(ring, &a, &b, false);
            }
            x
        };
        xs.push(x);
    }
    for k in 1..n {
        if nd.delta(&xs[k]) != gen_nu(k) {
            return Err(Error::ConstructionFailed(format!("condition (i) fails for x_{}", k)));
        }
        for r in 1..=k {
            let lhs = kgs_act(g, ring, &xs[k], SElem::gen(g.mul(g.inv(k), r)));
            let rhs = kgs_act(g, ring, &xs[r], SElem::e(g.mul(g.inv(r), k)));
            if lhs != rhs {
                return Err(Error::ConstructionFailed(format!("condition (ii) fails for (n, r) = ({}, {})", k, r)));
            }
        }
    }
    let phi_of = |i: usize| -> TensorElt {
        let (h, u) = nd.n_basis[i];
        let x = act_sum(g, ring, &xs[h], &nu_terms(ring, g.inv(h)), kgs_act);
        kgs_act(g, ring, &x, u)
    };
    let images: Vec<TensorElt> = (0..nd.n_dim()).map(phi_of).collect();
    for (i, img) in images.iter().enumerate() {
        if nd.delta(img) != nd.n_element(i) {
            return Err(Error::ConstructionFailed(format!("δ φ differs from the identity on basis element {}", i)));
        }
        let b = nd.n_element(i);
        for t in 0..n {
            let moved = kgb_act(g, ring, &b, SElem::gen(t));
            let coords = nd
                .n_coordinates(&moved)
                .ok_or_else(|| Error::ConstructionFailed("N is not a right submodule".into()))?;
            let mut lhs = TensorElt::new();
            for (j, c) in coords.iter().enumerate() {
                for (k, v) in &images[j] {
                    add_to(ring, &mut lhs, *k, ring.mul(v, c));
                }
            }
            if lhs != kgs_act(g, ring, img, SElem::gen(t)) {
                return Err(Error::ConstructionFailed(format!(
                    "φ is not right linear at basis element {} and [{}]",
                    i,
                    g.name(t)
                )));
            }
        }
    }
    let cols: Vec<Vec<Scalar>> = images.iter().map(|x| nd.kgs_vector(x)).collect();
    let phi = ExactMatrix::from_columns(ring, n * nd.s_basis.len(), &cols);
    Ok(PhiCertificate { nd, xs, phi })
}
