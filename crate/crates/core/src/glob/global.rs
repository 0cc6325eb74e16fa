use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::tensor::{partial_tensor, TensorFactor, TensorPresentation};
use crate::error::Error;
use crate::exactalg::{
    cokernel, intersect_spans, kernel_basis, rank, same_column_span, ExactMatrix, Ring, SparseMatrix, SparseVec,
};
use crate::group::{FiniteGroup, Subgroup};
use crate::parmod::{validate_partial_rep, ParRepModule, PartialActionModule, Side};
use crate::parsemigroup::IdemSet;

/// An ordinary representation of `G` on a free module. For `Side::Right` the matrix
/// `A_g` is defined by `m·g = A_g m`, so `A_{gh} = A_h A_g`.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobalModule {
    group: FiniteGroup,
    ring: Ring,
    side: Side,
    rank: usize,
    action: Vec<ExactMatrix>,
}

impl GlobalModule {
    pub fn new(g: &FiniteGroup, side: Side, action: Vec<ExactMatrix>) -> Result<Self, Error> {
        if action.len() != g.order() {
            return Err(Error::Invalid(format!("{} action matrices for a group of order {}", action.len(), g.order())));
        }
        let ring = action[0].ring();
        let rank = action[0].rows();
        if action.iter().any(|a| a.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        if action.iter().any(|a| a.rows() != rank || a.cols() != rank) {
            return Err(Error::Invalid("action matrices must be square of equal size".into()));
        }
        if !action[0].is_identity() {
            return Err(Error::Invalid("the identity must act trivially".into()));
        }
        for x in 0..g.order() {
            for y in 0..g.order() {
                let prod = match side {
                    Side::Left => action[x].mul(&action[y])?,
                    Side::Right => action[y].mul(&action[x])?,
                };
                if prod != action[g.mul(x, y)] {
                    return Err(Error::Invalid(format!("group law fails for ({}, {})", g.name(x), g.name(y))));
                }
            }
        }
        Ok(GlobalModule { group: g.clone(), ring, side, rank, action })
    }

    /// `KG` with translation: `h ↦ gh` (left) or `h ↦ hg` (right).
    pub fn regular(g: &FiniteGroup, ring: Ring, side: Side) -> Self {
        let n = g.order();
        let action = (0..n)
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
        GlobalModule { group: g.clone(), ring, side, rank: n, action }
    }

    pub fn trivial(g: &FiniteGroup, ring: Ring, side: Side) -> Self {
        let action = (0..g.order()).map(|_| ExactMatrix::identity(ring, 1)).collect();
        GlobalModule { group: g.clone(), ring, side, rank: 1, action }
    }

    /// A partial representation that happens to be global.
    pub fn from_par_rep(m: &ParRepModule) -> Result<Self, Error> {
        if !m.is_global() {
            return Err(Error::Invalid("the partial representation is not global".into()));
        }
        Self::new(m.group(), m.side(), (0..m.group().order()).map(|x| m.pi(x).clone()).collect())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self, g: usize) -> &ExactMatrix {
        &self.action[g]
    }

    pub fn to_par_rep(&self) -> ParRepModule {
        validate_partial_rep(&self.group, self.side, &self.action).expect("group actions are partial representations")
    }

    /// The action viewed as a partial action with full domains.
    pub fn as_partial_action(&self) -> PartialActionModule {
        let n = self.group.order();
        let domains = (0..n).map(|_| ExactMatrix::identity(self.ring, self.rank)).collect();
        PartialActionModule::new(&self.group, self.side, self.rank, domains, self.action.clone()).expect("full domains")
    }
}

/// `Λ(M)` together with `ι: M → Λ(M)` and, for partial representations, `τ: Λ(M) → M`.
#[derive(Clone, Debug)]
pub struct Globalization {
    pub lambda: GlobalModule,
    pub iota: ExactMatrix,
    pub tau: Option<ExactMatrix>,
    pub tensor: TensorPresentation,
}

impl Globalization {
    /// Basis of `ker ι`.
    pub fn iota_kernel(&self) -> Result<ExactMatrix, Error> {
        kernel_basis(&self.iota)
    }

    /// `Λ(f)` for a module map `f: M → M'` given as a matrix, where `self = Λ(M)` and
    /// `target = Λ(M')`.
    pub fn map_to(&self, target: &Globalization, f: &ExactMatrix) -> Result<ExactMatrix, Error> {
        let n = self.lambda.group.order();
        let (r, r2) = (self.tensor.right_rank, target.tensor.right_rank);
        if f.cols() != r || f.rows() != r2 {
            return Err(Error::Invalid("map has the wrong shape".into()));
        }
        let fs = SparseMatrix::from_dense(f);
        let mut cols = Vec::new();
        for c in self.tensor.cokernel.section.columns() {
            let mut v: SparseVec = Vec::new();
            for (idx, x) in c {
                let (g, i) = (idx / r, idx % r);
                for (k, y) in fs.column(i) {
                    v.push((g * r2 + k, self.lambda.ring.mul(x, y)));
                }
            }
            cols.push(crate::exactalg::normalize(self.lambda.ring, v));
        }
        let amb = SparseMatrix::from_columns(self.lambda.ring, n * r2, cols);
        target.tensor.cokernel.projection.mul(&amb)?.to_dense()
    }
}

fn kg_right(g: &FiniteGroup, ring: Ring) -> PartialActionModule {
    GlobalModule::regular(g, ring, Side::Right).as_partial_action()
}

fn torsion_check(t: &TensorPresentation) -> Result<(), Error> {
    if t.cokernel.torsion.is_empty() {
        Ok(())
    } else {
        Err(Error::NonFreeGlobalization(t.cokernel.torsion.iter().map(|d| d.to_string()).collect()))
    }
}

/// Left translation pushed through the quotient: `A_k = P L_k S`.
fn translation_action(
    g: &FiniteGroup,
    ring: Ring,
    r: usize,
    t: &TensorPresentation,
) -> Result<Vec<ExactMatrix>, Error> {
    let n = g.order();
    let mut action = Vec::with_capacity(n);
    for k in 0..n {
        let cols = t
            .cokernel
            .section
            .columns()
            .iter()
            .map(|c| {
                let mut v: SparseVec = c.iter().map(|(idx, x)| (g.mul(k, idx / r) * r + idx % r, x.clone())).collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        let ls = SparseMatrix::from_columns(ring, n * r, cols);
        action.push(t.cokernel.projection.mul(&ls)?.to_dense()?);
    }
    Ok(action)
}

fn finish(g: &FiniteGroup, ring: Ring, r: usize, tensor: TensorPresentation) -> Result<Globalization, Error> {
    torsion_check(&tensor)?;
    let action = translation_action(g, ring, r, &tensor)?;
    let lambda = GlobalModule::new(g, Side::Left, action)
        .map_err(|e| Error::ConstructionFailed(format!("translation action on the quotient: {}", e)))?;
    let iota = tensor.cokernel.projection.to_dense()?.select_columns(&(0..r).collect::<Vec<_>>());
    Ok(Globalization { lambda, iota, tau: None, tensor })
}

/// `Λ(M) = KG ⊗_{G_par} M` for a left partial representation, with `ι` and `τ`; checks
/// `τ ∘ ι = 1`.
pub fn globalize(m: &ParRepModule) -> Result<Globalization, Error> {
    if m.side() != Side::Left {
        return Err(Error::Invalid("globalization needs a left module".into()));
    }
    let g = m.group();
    let ring = m.ring();
    let r = m.rank();
    let tensor = partial_tensor(&kg_right(g, ring), TensorFactor::Rep(m))?;
    let mut out = finish(g, ring, r, tensor)?;
    // τ(⌊g, x⌋) = [g]·x
    let t0 = SparseMatrix::from_columns(
        ring,
        r,
        (0..g.order() * r).map(|idx| m.pi_sparse(idx / r).column(idx % r).clone()).collect(),
    );
    let tau = t0.mul(&out.tensor.cokernel.section)?.to_dense()?;
    if !tau.mul(&out.iota)?.is_identity() {
        return Err(Error::ConstructionFailed("τ ∘ ι is not the identity".into()));
    }
    out.tau = Some(tau);
    Ok(out)
}

/// `KG ⊗_{G_par} M` for a left partial action on a module, relators
/// `g ⊗ x − gh⁻¹ ⊗ α_h(x)`.
pub fn globalize_action(a: &PartialActionModule) -> Result<Globalization, Error> {
    if a.side() != Side::Left {
        return Err(Error::Invalid("globalization needs a left partial action".into()));
    }
    let g = a.group();
    let tensor = partial_tensor(&kg_right(g, a.ring()), TensorFactor::Action(a))?;
    finish(g, a.ring(), a.rank(), tensor)
}

/// `KG ⊗_{S_par} M` for a left partial representation `M` of a subgroup `S`, as a
/// `G`-module.
pub fn induce_from_subgroup(g: &FiniteGroup, s: &Subgroup, m: &ParRepModule) -> Result<Globalization, Error> {
    if s.parent() != g || m.group() != s.as_group() {
        return Err(Error::Invalid("module is not over the given subgroup".into()));
    }
    if m.side() != Side::Left {
        return Err(Error::Invalid("induction needs a left module".into()));
    }
    let ring = m.ring();
    let r = m.rank();
    let n = g.order();
    let sg = s.as_group();
    let mut rel = SparseMatrix::new(ring, n * r);
    for ls in 1..sg.order() {
        let ps = s.to_parent(ls);
        let e = m.idempotent_matrix(IdemSet::singleton(sg.inv(ls)));
        for k in 0..n {
            let ks = g.mul(k, ps);
            for j in 0..r {
                let mut col: SparseVec = e.column(j).iter().map(|(i, x)| (ks * r + i, x.clone())).collect();
                col.extend(m.pi_sparse(ls).column(j).iter().map(|(i, x)| (k * r + i, ring.neg(x))));
                let col = crate::exactalg::normalize(ring, col);
                if !col.is_empty() {
                    rel.push_column(col);
                }
            }
        }
    }
    let cokernel = cokernel(&rel)?;
    let tensor = TensorPresentation { left_rank: n, right_rank: r, relators: rel, cokernel };
    finish(g, ring, r, tensor)
}

/// Outcome of checking that `(W, ι)` globalizes a partial action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalizationReport {
    pub iota_injective: bool,
    pub equivariant: bool,
    /// Elements `g` with `ι(M_g) ≠ ι(M) ∩ Θ_g(ι(M))`.
    pub domain_failures: Vec<String>,
    pub generates: bool,
}

impl GlobalizationReport {
    pub fn passes(&self) -> bool {
        self.iota_injective && self.equivariant && self.domain_failures.is_empty() && self.generates
    }
}

/// Checks that `ι` is injective and equivariant, that `ι(M_g) = ι(M) ∩ Θ_g(ι(M))` for every
/// `g`, and that the translates of `ι(M)` span `W`.
pub fn verify_globalization(
    a: &PartialActionModule,
    w: &GlobalModule,
    iota: &ExactMatrix,
) -> Result<GlobalizationReport, Error> {
    let g = a.group();
    if iota.rows() != w.rank() || iota.cols() != a.rank() {
        return Err(Error::Invalid("ι has the wrong shape".into()));
    }
    let iota_injective = rank(iota)? == a.rank();
    let mut equivariant = true;
    let mut domain_failures = Vec::new();
    let mut translates = ExactMatrix::zeros(w.ring(), w.rank(), 0);
    for x in 0..g.order() {
        let gi = g.inv(x);
        let lhs = w.action(x).mul(iota)?.mul(a.domain(gi))?;
        let rhs = iota.mul(&a.images(x))?;
        if lhs != rhs {
            equivariant = false;
        }
        let moved = w.action(x).mul(iota)?;
        let inter = intersect_spans(iota, &moved)?;
        if !same_column_span(&inter, &iota.mul(a.domain(x))?)? {
            domain_failures.push(String::from(g.name(x)));
        }
        translates = translates.hcat(&moved);
    }
    let generates = same_column_span(&translates, &ExactMatrix::identity(w.ring(), w.rank()))?;
    Ok(GlobalizationReport { iota_injective, equivariant, domain_failures, generates })
}

/// Ranks observed when applying `Λ` to `0 → A → B → C → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub ranks: [usize; 3],
    pub composite_zero: bool,
    pub injective: bool,
    pub surjective: bool,
    pub middle_exact: bool,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.composite_zero && self.injective && self.surjective && self.middle_exact
    }
}

/// Applies `Λ` to `0 → A → B → B/A → 0` for an invariant subspace `A` (columns of
/// `sub`) and checks exactness by rank counting.
pub fn check_exactness(b: &ParRepModule, sub: &ExactMatrix) -> Result<ExactnessReport, Error> {
    let a = b.submodule(sub)?;
    let (c, proj) = b.quotient(sub)?;
    let la = globalize(&a)?;
    let lb = globalize(b)?;
    let lc = globalize(&c)?;
    let fi = la.map_to(&lb, sub)?;
    let fp = lb.map_to(&lc, &proj)?;
    let ranks = [la.lambda.rank(), lb.lambda.rank(), lc.lambda.rank()];
    let composite_zero = fp.mul(&fi)?.is_zero();
    let ri = rank(&fi)?;
    let rp = rank(&fp)?;
    let injective = ri == ranks[0];
    let surjective = rp == ranks[2];
    let middle_exact = composite_zero && ranks[1] - rp == ri;
    Ok(ExactnessReport { ranks, composite_zero, injective, surjective, middle_exact })
}
