use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::linalg::rank;
use super::matrix::ExactMatrix;
use super::ring::Ring;
use super::snf::snf;
use super::sparse::{cokernel, SparseMatrix, SparseVec};
use crate::error::Error;

/// A finitely generated module over the ground ring: free rank plus torsion invariant
/// factors (always empty over a field).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologySummary {
    pub ring: Ring,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologySummary {
    pub fn new(ring: Ring, betti: usize, torsion: Vec<BigInt>) -> Self {
        HomologySummary { ring, betti, torsion }
    }

    pub fn zero(ring: Ring) -> Self {
        Self::new(ring, 0, Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let base = match self.ring {
            Ring::Integers => String::from("Z"),
            Ring::Rationals => String::from("Q"),
            Ring::PrimeField(p) => format!("GF{}", p),
        };
        match self.betti {
            0 => {}
            1 => parts.push(base),
            b => parts.push(format!("{}^{}", base, b)),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homology `ker(d_out) / im(d_in)` at the middle of `. -d_in-> C -d_out-> .`.
pub fn homology_of_pair(d_in: &ExactMatrix, d_out: &ExactMatrix) -> Result<HomologySummary, Error> {
    if d_in.ring() != d_out.ring() {
        return Err(Error::RingMismatch);
    }
    if d_out.cols() != d_in.rows() {
        return Err(Error::ComplexNotExactlyComposable(format!(
            "d_out has {} columns but d_in has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::ComplexNotExactlyComposable("d_out * d_in is nonzero".into()));
    }
    let ring = d_in.ring();
    let n = d_in.rows();
    let rank_out = rank(d_out)?;
    if ring.is_field() {
        let rank_in = rank(d_in)?;
        return Ok(HomologySummary::new(ring, n - rank_out - rank_in, Vec::new()));
    }
    let s = snf(d_in)?;
    Ok(HomologySummary::new(ring, n - rank_out - s.rank, s.torsion()))
}

/// Presentation of the cokernel of a relator matrix (relators as columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    /// Ambient coordinates of each free generator of the quotient.
    pub section: ExactMatrix,
    /// Quotient map onto the free part, as a `free_rank x ambient` matrix.
    pub projection: ExactMatrix,
}

pub fn quotient_presentation(relators: &ExactMatrix) -> Result<QuotientPresentation, Error> {
    let n = relators.rows();
    let s = snf(relators)?;
    let free: Vec<usize> = (s.rank..n).collect();
    let projection = s.u.select_rows(&free);
    let uinv = super::snf::inverse(&s.u)?;
    let section = uinv.select_columns(&free);
    Ok(QuotientPresentation { free_rank: free.len(), torsion: s.torsion(), section, projection })
}

/// [`quotient_presentation`] computed with sparse elimination.
pub fn sparse_quotient_presentation(relators: &SparseMatrix) -> Result<QuotientPresentation, Error> {
    let c = cokernel(relators)?;
    Ok(QuotientPresentation {
        free_rank: c.free_rank,
        torsion: c.torsion,
        section: c.section.to_dense()?,
        projection: c.projection.to_dense()?,
    })
}

/// Basis (as columns) of the vectors annihilated by every given row; over Z the
/// saturated kernel.
pub fn kernel_of_rows(ring: Ring, ncols: usize, rows: Vec<SparseVec>) -> Result<ExactMatrix, Error> {
    let m = SparseMatrix::from_columns(ring, ncols, rows);
    let c = cokernel(&m)?;
    c.projection.transpose().to_dense()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_by_two() {
        let z = Ring::Integers;
        let d_in = ExactMatrix::from_i64_rows(z, &[&[2]]);
        let d_out = ExactMatrix::zeros(z, 0, 1);
        let h = homology_of_pair(&d_in, &d_out).unwrap();
        assert_eq!(h.betti, 0);
        assert_eq!(h.torsion, alloc::vec![BigInt::from(2)]);
        assert_eq!(alloc::format!("{}", h), "Z/2");
    }

    #[test]
    fn zero_maps_on_q3() {
        let q = Ring::Rationals;
        let h = homology_of_pair(&ExactMatrix::zeros(q, 3, 0), &ExactMatrix::zeros(q, 0, 3)).unwrap();
        assert_eq!(h.betti, 3);
    }

    #[test]
    fn split_complex_is_acyclic() {
        let q = Ring::Rationals;
        let h = homology_of_pair(&ExactMatrix::identity(q, 2), &ExactMatrix::zeros(q, 0, 2)).unwrap();
        assert!(h.is_zero());
    }

    #[test]
    fn non_complex_rejected() {
        let q = Ring::Rationals;
        let i = ExactMatrix::identity(q, 2);
        assert!(matches!(homology_of_pair(&i, &i), Err(Error::ComplexNotExactlyComposable(_))));
    }

    #[test]
    fn quotient_presentations() {
        let z = Ring::Integers;
        let p = quotient_presentation(&ExactMatrix::zeros(z, 3, 0)).unwrap();
        assert_eq!((p.free_rank, p.torsion.len()), (3, 0));
        let p = quotient_presentation(&ExactMatrix::from_i64_rows(z, &[&[2]])).unwrap();
        assert_eq!((p.free_rank, p.torsion.clone()), (0, alloc::vec![BigInt::from(2)]));
        let p = quotient_presentation(&ExactMatrix::from_i64_rows(z, &[&[2], &[2], &[2]])).unwrap();
        assert_eq!((p.free_rank, p.torsion.clone()), (2, alloc::vec![BigInt::from(2)]));
        assert!(p.projection.mul(&p.section).unwrap().is_identity());
    }
}
