use alloc::vec::Vec;

use super::global::GlobalModule;
use crate::error::Error;
use crate::exactalg::{kernel_of_rows, left_inverse, normalize, ExactMatrix, SparseVec};
use crate::parmod::{ParRepModule, Side};
use crate::parsemigroup::{enumerate_idempotents, sg_mul, sg_star, SElem};

/// `Hom_{K_par G}(KG ⊗ B, M)` for a right module `M`, where `KG ⊗ B ≅ Λ(K_par G)` carries
/// `(g ⊗ w)·[h] = gh ⊗ (w ◁ [h])`. A map `f` is recorded by its values `f(g ⊗ 1)`,
/// which determine it through `f(g ⊗ u) = f(g ⊗ 1)·u`.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    target: ParRepModule,
    b_basis: Vec<SElem>,
    /// Columns: solutions, stacked as `|G|` blocks of `rank M` values `f(g ⊗ 1)`.
    pub solutions: ExactMatrix,
    /// Right action `(f·k)(x) = f(k·x)` on the solution coordinates.
    pub g_action: Vec<ExactMatrix>,
}

impl Intertwiner {
    pub fn dim(&self) -> usize {
        self.solutions.cols()
    }

    /// The solution space as a right `G`-module.
    pub fn as_global(&self) -> Result<GlobalModule, Error> {
        GlobalModule::new(self.target.group(), Side::Right, self.g_action.clone())
    }

    /// Matrix of the `i`-th solution on the basis `g ⊗ u` of `KG ⊗ B` (index `g·|B| + u`).
    pub fn map_matrix(&self, i: usize) -> ExactMatrix {
        let m = &self.target;
        let r = m.rank();
        let ring = m.ring();
        let col = self.solutions.column(i);
        let nb = self.b_basis.len();
        let mut out = ExactMatrix::zeros(ring, r, m.group().order() * nb);
        for g in 0..m.group().order() {
            let v: SparseVec =
                (0..r).filter(|&k| !ring.is_zero(&col[g * r + k])).map(|k| (k, col[g * r + k].clone())).collect();
            for (j, &u) in self.b_basis.iter().enumerate() {
                for (k, x) in m.apply_monomial(u, &v) {
                    out.set(k, g * nb + j, x);
                }
            }
        }
        out
    }

    /// Checks `f(x·[h]) = f(x)·[h]` for every solution, basis element `x` and `h`.
    pub fn verify(&self) -> bool {
        let m = &self.target;
        let g = m.group();
        let nb = self.b_basis.len();
        (0..self.dim()).all(|i| {
            let f = self.map_matrix(i);
            (0..g.order()).all(|x| {
                self.b_basis.iter().enumerate().all(|(j, &u)| {
                    (0..g.order()).all(|h| {
                        let w = sg_mul(g, sg_star(g, SElem::gen(h)), sg_mul(g, u, SElem::gen(h)));
                        let k = self.b_basis.binary_search(&w).expect("idempotent");
                        let lhs = f.column(g.mul(x, h) * nb + k);
                        let col = f.column(x * nb + j);
                        let v: SparseVec = col
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !m.ring().is_zero(c))
                            .map(|(a, c)| (a, c.clone()))
                            .collect();
                        let rhs = m.apply_gen(h, &v);
                        let mut dense = alloc::vec![m.ring().zero(); m.rank()];
                        for (a, c) in rhs {
                            dense[a] = c;
                        }
                        lhs == dense
                    })
                })
            })
        })
    }
}

/// Solves for `Hom_{K_par G}(Λ(K_par G), M)` and its right `G`-action.
pub fn hom_intertwiners(m: &ParRepModule) -> Result<Intertwiner, Error> {
    if m.side() != Side::Right {
        return Err(Error::Invalid("intertwiners need a right module".into()));
    }
    let g = m.group();
    let n = g.order();
    let r = m.rank();
    let ring = m.ring();
    let b_basis = enumerate_idempotents(g)?;
    // f(gh ⊗ u◁[h]) − f(g ⊗ u)·[h] = 0, with f(g ⊗ u) = m_g·u
    let mut rows: Vec<SparseVec> = Vec::new();
    for x in 0..n {
        for &u in &b_basis {
            for h in 0..n {
                let w = sg_mul(g, sg_star(g, SElem::gen(h)), sg_mul(g, u, SElem::gen(h)));
                let left = m.monomial_matrix(w).transpose();
                let right = m.monomial_matrix(sg_mul(g, u, SElem::gen(h))).transpose();
                let xh = g.mul(x, h);
                for k in 0..r {
                    let mut row: SparseVec = left.column(k).iter().map(|(j, c)| (xh * r + j, c.clone())).collect();
                    row.extend(right.column(k).iter().map(|(j, c)| (x * r + j, ring.neg(c))));
                    let row = normalize(ring, row);
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let solutions = kernel_of_rows(ring, n * r, rows)?;
    let k = solutions.cols();
    let left = if k == 0 { ExactMatrix::zeros(ring, 0, n * r) } else { left_inverse(&solutions)? };
    let mut g_action = Vec::with_capacity(n);
    for a in 0..n {
        // (f·a)_x = f_{a x}
        let moved = ExactMatrix::from_fn(ring, n * r, k, |row, col| {
            let (x, i) = (row / r, row % r);
            solutions.get(g.mul(a, x) * r + i, col).clone()
        });
        let coords = left.mul(&moved)?;
        if solutions.mul(&coords)? != moved {
            return Err(Error::ConstructionFailed("solution space is not G-stable".into()));
        }
        g_action.push(coords);
    }
    Ok(Intertwiner { target: m.clone(), b_basis, solutions, g_action })
}
