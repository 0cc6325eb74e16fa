use alloc::vec::Vec;

use crate::error::Error;
use crate::exactalg::{
    cokernel, normalize, Cokernel, ExactMatrix, QuotientPresentation, Ring, Scalar, SparseMatrix, SparseVec,
};
use crate::parmod::{ParRepModule, PartialActionModule, Side};
use crate::parsemigroup::IdemSet;

/// Right-hand operand of a partial tensor product.
#[derive(Clone, Copy, Debug)]
pub enum TensorFactor<'a> {
    Rep(&'a ParRepModule),
    Action(&'a PartialActionModule),
}

impl TensorFactor<'_> {
    fn rank(&self) -> usize {
        match self {
            TensorFactor::Rep(m) => m.rank(),
            TensorFactor::Action(a) => a.rank(),
        }
    }

    fn ring(&self) -> Ring {
        match self {
            TensorFactor::Rep(m) => m.ring(),
            TensorFactor::Action(a) => a.ring(),
        }
    }

    fn side(&self) -> Side {
        match self {
            TensorFactor::Rep(m) => m.side(),
            TensorFactor::Action(a) => a.side(),
        }
    }
}

/// `X ⊗_K Y` modulo the relators of the partial tensor product, with basis `x_i ⊗ y_j`
/// at index `i * rank(Y) + j`.
#[derive(Clone, Debug)]
pub struct TensorPresentation {
    pub left_rank: usize,
    pub right_rank: usize,
    pub relators: SparseMatrix,
    pub cokernel: Cokernel,
}

impl TensorPresentation {
    pub fn ambient_rank(&self) -> usize {
        self.left_rank * self.right_rank
    }

    pub fn free_rank(&self) -> usize {
        self.cokernel.free_rank
    }

    pub fn presentation(&self) -> Result<QuotientPresentation, Error> {
        Ok(QuotientPresentation {
            free_rank: self.cokernel.free_rank,
            torsion: self.cokernel.torsion.clone(),
            section: self.cokernel.section.to_dense()?,
            projection: self.cokernel.projection.to_dense()?,
        })
    }
}

pub(crate) fn kron(ring: Ring, a: &[(usize, Scalar)], b: &[(usize, Scalar)], rb: usize) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a {
        for (j, y) in b {
            out.push((i * rb + j, ring.mul(x, y)));
        }
    }
    out
}

pub(crate) fn sub_vec(ring: Ring, mut a: SparseVec, b: SparseVec) -> SparseVec {
    a.extend(b.into_iter().map(|(i, x)| (i, ring.neg(&x))));
    normalize(ring, a)
}

fn dense_column(m: &ExactMatrix, j: usize) -> SparseVec {
    let r = m.ring();
    (0..m.rows()).filter(|&i| !r.is_zero(m.get(i, j))).map(|i| (i, m.get(i, j).clone())).collect()
}

/// Relators `(x)β_g ⊗ e_{g⁻¹}y − x ⊗ [g]y` (partial representation on the right) or
/// `(x)β_g ⊗ y − x ⊗ α_g(y)` (partial action on the right), `x` over a basis of
/// `X_{g⁻¹}` and `y` over all of `Y` or over a basis of `Y_{g⁻¹}`.
pub(crate) fn tensor_relators(x: &PartialActionModule, y: TensorFactor<'_>) -> Result<SparseMatrix, Error> {
    let ring = x.ring();
    if ring != y.ring() || x.group() != group_of(&y) {
        return Err(Error::RingMismatch);
    }
    if x.side() != Side::Right || y.side() != Side::Left {
        return Err(Error::Invalid("partial tensor product needs a right and a left module".into()));
    }
    let g = x.group();
    let ry = y.rank();
    let mut rel = SparseMatrix::new(ring, x.rank() * ry);
    for t in 1..g.order() {
        let ti = g.inv(t);
        let dom = x.domain(ti);
        let img = x.images(t);
        let (left, right): (Vec<SparseVec>, Vec<SparseVec>) = match y {
            TensorFactor::Rep(m) => {
                let e = m.idempotent_matrix(IdemSet::singleton(ti));
                (e.columns().to_vec(), m.pi_sparse(t).columns().to_vec())
            }
            TensorFactor::Action(a) => {
                let d = a.domain(ti);
                let im = a.images(t);
                (
                    (0..d.cols()).map(|j| dense_column(d, j)).collect(),
                    (0..im.cols()).map(|j| dense_column(&im, j)).collect(),
                )
            }
        };
        for k in 0..dom.cols() {
            let a = dense_column(dom, k);
            let b = dense_column(&img, k);
            for (l, r) in left.iter().zip(&right) {
                let col = sub_vec(ring, kron(ring, &b, l, ry), kron(ring, &a, r, ry));
                if !col.is_empty() {
                    rel.push_column(col);
                }
            }
        }
    }
    Ok(rel)
}

fn group_of<'a>(y: &'a TensorFactor<'_>) -> &'a crate::group::FiniteGroup {
    match y {
        TensorFactor::Rep(m) => m.group(),
        TensorFactor::Action(a) => a.group(),
    }
}

/// `X ⊗_{G_par} Y` for a right partial action `X` and a left partial representation or
/// partial action `Y`.
pub fn partial_tensor(x: &PartialActionModule, y: TensorFactor<'_>) -> Result<TensorPresentation, Error> {
    let relators = tensor_relators(x, y)?;
    let cokernel = cokernel(&relators)?;
    Ok(TensorPresentation { left_rank: x.rank(), right_rank: y.rank(), relators, cokernel })
}
