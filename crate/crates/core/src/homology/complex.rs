use alloc::vec::Vec;

use crate::error::Error;
use crate::exactalg::{rank_and_torsion, HomologySummary, Ring, SparseMatrix};

/// Largest chain space built before giving up with `ChainSpaceTooLarge`.
pub const CHAIN_LIMIT: usize = 400_000;

/// Basis layout of one degree: blocks indexed by words in `G^n`, word `w` owning the
/// coordinates `offsets[w]..offsets[w + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Layout {
    pub(crate) order: usize,
    pub(crate) len: usize,
    pub(crate) offsets: Vec<usize>,
}

impl Layout {
    pub(crate) fn uniform(order: usize, len: usize, block: usize) -> Self {
        let words = order.pow(len as u32);
        Layout { order, len, offsets: (0..=words).map(|w| w * block).collect() }
    }

    pub(crate) fn dim(&self) -> usize {
        *self.offsets.last().expect("nonempty")
    }

    pub(crate) fn label(&self, idx: usize) -> (Vec<usize>, usize) {
        let w = self.offsets.partition_point(|&o| o <= idx) - 1;
        (word_of(self.order, self.len, w), idx - self.offsets[w])
    }
}

pub(crate) fn words(order: usize, len: usize) -> usize {
    order.pow(len as u32)
}

pub(crate) fn word_of(order: usize, len: usize, mut idx: usize) -> Vec<usize> {
    let mut w = alloc::vec![0; len];
    for k in (0..len).rev() {
        w[k] = idx % order;
        idx /= order;
    }
    w
}

pub(crate) fn index_of(order: usize, w: &[usize]) -> usize {
    w.iter().fold(0, |acc, &g| acc * order + g)
}

pub(crate) fn check_words(order: usize, len: usize, rank: usize) -> Result<(), Error> {
    let n = words(order, len).saturating_mul(rank);
    if n > CHAIN_LIMIT {
        return Err(Error::ChainSpaceTooLarge { degree: len, dim: n });
    }
    Ok(())
}

fn summaries(
    ring: Ring,
    dims: &[usize],
    maps: &[SparseMatrix],
    lower: bool,
    n_max: usize,
) -> Result<Vec<HomologySummary>, Error> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut rank_in_prev = 0usize;
    if lower {
        // chains: rank d_0 = 0
        let mut rank_out = 0usize;
        for n in 0..=n_max {
            let bound = dims[n] - rank_out;
            let (r_in, torsion) = rank_and_torsion(&maps[n], Some(bound))?;
            out.push(HomologySummary::new(ring, dims[n] - rank_out - r_in, torsion));
            rank_out = r_in;
        }
    } else {
        let mut torsion_in = Vec::new();
        for n in 0..=n_max {
            let bound = dims[n] - rank_in_prev;
            let (r_out, torsion_out) = rank_and_torsion(&maps[n], Some(bound))?;
            out.push(HomologySummary::new(ring, dims[n] - rank_in_prev - r_out, torsion_in));
            rank_in_prev = r_out;
            torsion_in = torsion_out;
        }
    }
    Ok(out)
}

/// A chain complex `C_{n_max+1} → … → C_0` with sparse differentials.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: Ring,
    layouts: Vec<Layout>,
    /// `d[k]` is `d_{k+1}: C_{k+1} → C_k`.
    d: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub(crate) fn new(ring: Ring, layouts: Vec<Layout>, d: Vec<SparseMatrix>) -> Result<Self, Error> {
        for (k, m) in d.iter().enumerate() {
            if m.rows() != layouts[k].dim() || m.cols() != layouts[k + 1].dim() {
                return Err(Error::ComplexNotExactlyComposable(alloc::format!("d_{} has the wrong shape", k + 1)));
            }
        }
        for k in 1..d.len() {
            if !d[k - 1].mul(&d[k])?.is_zero() {
                return Err(Error::ComplexNotExactlyComposable(alloc::format!("d_{} d_{} ≠ 0", k, k + 1)));
            }
        }
        Ok(ChainComplex { ring, layouts, d })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Highest degree with a chain space.
    pub fn top(&self) -> usize {
        self.layouts.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.layouts.iter().map(Layout::dim).collect()
    }

    /// `d_n: C_n → C_{n−1}` for `1 ≤ n ≤ top`.
    pub fn differential(&self, n: usize) -> &SparseMatrix {
        &self.d[n - 1]
    }

    /// Word and module coordinate of a basis element of `C_n`.
    pub fn label(&self, n: usize, idx: usize) -> (Vec<usize>, usize) {
        self.layouts[n].label(idx)
    }

    /// `H_0, …, H_{top−1}`.
    pub fn homology(&self) -> Result<Vec<HomologySummary>, Error> {
        summaries(self.ring, &self.dims(), &self.d, true, self.top() - 1)
    }
}

/// A cochain complex `C^0 → … → C^{n_max+1}` with sparse differentials.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    ring: Ring,
    layouts: Vec<Layout>,
    /// `d[k]` is `δ^k: C^k → C^{k+1}`.
    d: Vec<SparseMatrix>,
}

impl CochainComplex {
    pub(crate) fn new(ring: Ring, layouts: Vec<Layout>, d: Vec<SparseMatrix>) -> Result<Self, Error> {
        for (k, m) in d.iter().enumerate() {
            if m.cols() != layouts[k].dim() || m.rows() != layouts[k + 1].dim() {
                return Err(Error::ComplexNotExactlyComposable(alloc::format!("δ^{} has the wrong shape", k)));
            }
        }
        for k in 1..d.len() {
            if !d[k].mul(&d[k - 1])?.is_zero() {
                return Err(Error::ComplexNotExactlyComposable(alloc::format!("δ^{} δ^{} ≠ 0", k, k - 1)));
            }
        }
        Ok(CochainComplex { ring, layouts, d })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn top(&self) -> usize {
        self.layouts.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.layouts.iter().map(Layout::dim).collect()
    }

    /// `δ^n: C^n → C^{n+1}` for `0 ≤ n < top`.
    pub fn differential(&self, n: usize) -> &SparseMatrix {
        &self.d[n]
    }

    pub fn label(&self, n: usize, idx: usize) -> (Vec<usize>, usize) {
        self.layouts[n].label(idx)
    }

    /// `H^0, …, H^{top−1}`.
    pub fn cohomology(&self) -> Result<Vec<HomologySummary>, Error> {
        summaries(self.ring, &self.dims(), &self.d, false, self.top() - 1)
    }
}
