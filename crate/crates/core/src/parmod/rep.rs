use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exactalg::{inverse, row_echelon, ExactMatrix, Ring, Scalar, SparseMatrix, SparseVec, SummandBasis};
use crate::group::FiniteGroup;
use crate::parsemigroup::{IdemSet, ParAlgElt, SElem};

/// Which side `K_par G` acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A partial representation on a free module of finite rank, stored as one matrix per
/// group element. For right modules the matrix `ρ(g)` is defined by `m·[g] = ρ(g) m`.
#[derive(Clone, Debug)]
pub struct ParRepModule {
    group: FiniteGroup,
    ring: Ring,
    side: Side,
    rank: usize,
    pi: Vec<ExactMatrix>,
    sparse: Vec<SparseMatrix>,
}

impl PartialEq for ParRepModule {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.ring == other.ring && self.side == other.side && self.pi == other.pi
    }
}

/// Checks the partial representation axioms; returns the list of violations.
pub fn validate_partial_rep(g: &FiniteGroup, side: Side, pi: &[ExactMatrix]) -> Result<ParRepModule, Error> {
    let n = g.order();
    if pi.len() != n {
        return Err(Error::PartialRepAxiomViolation(vec![format!(
            "π required for every group element: {} matrices given for a group of order {}",
            pi.len(),
            n
        )]));
    }
    let ring = pi[0].ring();
    let rank = pi[0].rows();
    for (k, m) in pi.iter().enumerate() {
        if m.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if m.rows() != rank || m.cols() != rank {
            return Err(Error::PartialRepAxiomViolation(vec![format!(
                "π({}) has shape {}x{}, expected {}x{}",
                g.name(k),
                m.rows(),
                m.cols(),
                rank,
                rank
            )]));
        }
    }
    let sparse: Vec<SparseMatrix> = pi.iter().map(SparseMatrix::from_dense).collect();
    let mut violations: Vec<String> = Vec::new();
    if !pi[0].is_identity() {
        violations.push(format!("axiom (c): π({}) is not the identity", g.name(0)));
    }
    let mul3 = |a: usize, b: usize, c: usize| -> SparseMatrix {
        sparse[a].mul(&sparse[b]).and_then(|x| x.mul(&sparse[c])).expect("square")
    };
    let mul2 = |a: usize, b: usize| -> SparseMatrix { sparse[a].mul(&sparse[b]).expect("square") };
    let first_diff = |x: &SparseMatrix, y: &SparseMatrix| -> String {
        for j in 0..x.cols() {
            if x.column(j) != y.column(j) {
                let (a, b) = (x.column(j), y.column(j));
                let i =
                    a.iter().chain(b.iter()).map(|e| e.0).find(|i| {
                        a.iter().find(|e| e.0 == *i).map(|e| &e.1) != b.iter().find(|e| e.0 == *i).map(|e| &e.1)
                    });
                return format!("first differing entry at ({}, {})", i.unwrap_or(0), j);
            }
        }
        String::new()
    };
    for s in 0..n {
        for t in 0..n {
            let (si, ti, st) = (g.inv(s), g.inv(t), g.mul(s, t));
            let (lhs_a, rhs_a, lhs_b, rhs_b) = match side {
                // π(s)π(t)π(t⁻¹) = π(st)π(t⁻¹),  π(s⁻¹)π(s)π(t) = π(s⁻¹)π(st)
                Side::Left => (mul3(s, t, ti), mul2(st, ti), mul3(si, s, t), mul2(si, st)),
                // ρ(t⁻¹)ρ(t)ρ(s) = ρ(t⁻¹)ρ(st),  ρ(t)ρ(s)ρ(s⁻¹) = ρ(st)ρ(s⁻¹)
                Side::Right => (mul3(ti, t, s), mul2(ti, st), mul3(t, s, si), mul2(st, si)),
            };
            if lhs_a != rhs_a {
                violations.push(format!(
                    "(s, t) = ({}, {}), axiom (a): {}",
                    g.name(s),
                    g.name(t),
                    first_diff(&lhs_a, &rhs_a)
                ));
            }
            if lhs_b != rhs_b {
                violations.push(format!(
                    "(s, t) = ({}, {}), axiom (b): {}",
                    g.name(s),
                    g.name(t),
                    first_diff(&lhs_b, &rhs_b)
                ));
            }
        }
    }
    if !violations.is_empty() {
        return Err(Error::PartialRepAxiomViolation(violations));
    }
    Ok(ParRepModule { group: g.clone(), ring, side, rank, pi: pi.to_vec(), sparse })
}

impl ParRepModule {
    pub fn new(g: &FiniteGroup, side: Side, pi: Vec<ExactMatrix>) -> Result<Self, Error> {
        validate_partial_rep(g, side, &pi)
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

    pub fn pi(&self, g: usize) -> &ExactMatrix {
        &self.pi[g]
    }

    pub fn pi_sparse(&self, g: usize) -> &SparseMatrix {
        &self.sparse[g]
    }

    /// True when every `π(g)` is invertible with `π(g)π(h) = π(gh)` (left) or the mirrored
    /// law (right): the module is an ordinary `G`-module.
    pub fn is_global(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|s| {
            (0..n).all(|t| {
                let st = self.group.mul(s, t);
                let prod = match self.side {
                    Side::Left => self.sparse[s].mul(&self.sparse[t]),
                    Side::Right => self.sparse[t].mul(&self.sparse[s]),
                };
                prod.expect("square") == self.sparse[st]
            })
        })
    }

    /// `[g]·v` (left) or `v·[g]` (right) on a sparse vector.
    pub fn apply_gen(&self, g: usize, v: &[(usize, Scalar)]) -> SparseVec {
        self.sparse[g].mul_vec(v)
    }

    fn apply_e(&self, a: usize, v: &[(usize, Scalar)]) -> SparseVec {
        let ai = self.group.inv(a);
        match self.side {
            Side::Left => self.apply_gen(a, &self.apply_gen(ai, v)),
            Side::Right => self.apply_gen(ai, &self.apply_gen(a, v)),
        }
    }

    /// Action of a monomial `e_E [h]` on a sparse vector.
    pub fn apply_monomial(&self, s: SElem, v: &[(usize, Scalar)]) -> SparseVec {
        match self.side {
            Side::Left => {
                let mut w = self.apply_gen(s.grp, v);
                for a in s.idem.iter() {
                    w = self.apply_e(a, &w);
                }
                w
            }
            Side::Right => {
                let mut w: SparseVec = v.to_vec();
                for a in s.idem.iter() {
                    w = self.apply_e(a, &w);
                }
                self.apply_gen(s.grp, &w)
            }
        }
    }

    /// Matrix of a monomial.
    pub fn monomial_matrix(&self, s: SElem) -> SparseMatrix {
        let cols = (0..self.rank).map(|j| self.apply_monomial(s, &[(j, self.ring.one())])).collect();
        SparseMatrix::from_columns(self.ring, self.rank, cols)
    }

    /// Matrix of the idempotent `∏_{a∈E} e_a`.
    pub fn idempotent_matrix(&self, set: IdemSet) -> SparseMatrix {
        self.monomial_matrix(SElem::idempotent(set))
    }

    /// Matrix of an algebra element acting on the module.
    pub fn act_alg(&self, z: &ParAlgElt) -> Result<ExactMatrix, Error> {
        if z.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        let r = self.ring;
        let mut out = ExactMatrix::zeros(r, self.rank, self.rank);
        for (s, c) in z.terms() {
            let m = self.monomial_matrix(*s);
            for (j, col) in m.columns().iter().enumerate() {
                for (i, x) in col {
                    out.set(*i, j, r.add(out.get(*i, j), &r.mul(c, x)));
                }
            }
        }
        Ok(out)
    }

    /// The same module over another ring (entries mapped through `convert`).
    pub fn change_ring(&self, to: Ring) -> Result<ParRepModule, Error> {
        let pi = self.pi.iter().map(|m| m.convert(to)).collect::<Result<Vec<_>, _>>()?;
        validate_partial_rep(&self.group, self.side, &pi)
    }

    pub fn direct_sum(&self, other: &ParRepModule) -> Result<ParRepModule, Error> {
        if self.ring != other.ring || self.side != other.side {
            return Err(Error::RingMismatch);
        }
        let pi: Vec<ExactMatrix> = self.pi.iter().zip(&other.pi).map(|(a, b)| a.block_diag(b)).collect();
        validate_partial_rep(&self.group, self.side, &pi)
    }

    /// Transport along an invertible change of basis: `π'(g) = P π(g) P⁻¹`.
    pub fn conjugate(&self, p: &ExactMatrix) -> Result<ParRepModule, Error> {
        let pinv = inverse(p)?;
        let pi = self.pi.iter().map(|m| p.mul(m)?.mul(&pinv)).collect::<Result<Vec<_>, _>>()?;
        validate_partial_rep(&self.group, self.side, &pi)
    }

    /// The submodule spanned by the columns of `basis`, which must be invariant.
    pub fn submodule(&self, basis: &ExactMatrix) -> Result<ParRepModule, Error> {
        let sb = SummandBasis::of_span(basis)?;
        if sb.rank() != basis.cols() {
            return Err(Error::Invalid("submodule generators are not independent".into()));
        }
        let mut pi = Vec::with_capacity(self.pi.len());
        for m in &self.pi {
            let img = m.mul(&sb.basis)?;
            let c = sb.coordinate_matrix(&img);
            if sb.basis.mul(&c)? != img {
                return Err(Error::Invalid("span is not invariant".into()));
            }
            pi.push(c);
        }
        // express in the caller's basis: basis = sb.basis * T
        let t = sb.coordinate_matrix(basis);
        let tinv = inverse(&t)?;
        let pi = pi.iter().map(|m| tinv.mul(m)?.mul(&t)).collect::<Result<Vec<_>, _>>()?;
        validate_partial_rep(&self.group, self.side, &pi)
    }

    /// The quotient by an invariant subspace (field coefficients, or a direct summand over Z),
    /// together with the projection matrix onto the quotient basis.
    pub fn quotient(&self, basis: &ExactMatrix) -> Result<(ParRepModule, ExactMatrix), Error> {
        let r = self.ring;
        let (_, pivots) = row_echelon(&basis.transpose())?;
        let complement: Vec<usize> = (0..self.rank).filter(|i| !pivots.contains(i)).collect();
        let comp = ExactMatrix::identity(r, self.rank).select_columns(&complement);
        let p = basis.hcat(&comp);
        let pinv = inverse(&p)?;
        let k = basis.cols();
        let rows: Vec<usize> = (k..self.rank).collect();
        let proj = pinv.select_rows(&rows);
        let mut pi = Vec::with_capacity(self.pi.len());
        for m in &self.pi {
            let full = pinv.mul(m)?.mul(&p)?;
            // invariance: the lower-left block must vanish
            for i in k..self.rank {
                for j in 0..k {
                    if !r.is_zero(full.get(i, j)) {
                        return Err(Error::Invalid("span is not invariant".into()));
                    }
                }
            }
            pi.push(full.select_rows(&rows).select_columns(&rows));
        }
        Ok((validate_partial_rep(&self.group, self.side, &pi)?, proj))
    }

    /// Basis of the subspace of vectors fixed by an idempotent matrix (its image).
    pub(crate) fn image_of_idempotent(&self, e: &SparseMatrix) -> Result<SummandBasis, Error> {
        let dense = e.to_dense()?;
        if dense.is_identity() {
            return Ok(SummandBasis::identity(self.ring, self.rank));
        }
        SummandBasis::of_span(&dense)
    }
}
