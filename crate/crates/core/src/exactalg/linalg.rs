use alloc::vec;
use alloc::vec::Vec;

use super::matrix::{guard, ExactMatrix};
use super::ring::{Ring, Scalar};
use super::snf::snf;
use crate::error::Error;

/// Canonical echelon basis of the row space: reduced row echelon form over a field,
/// row Hermite normal form over Z. Returns the nonzero rows and their pivot columns.
pub fn row_echelon(a: &ExactMatrix) -> Result<(ExactMatrix, Vec<usize>), Error> {
    guard(a.rows(), a.cols())?;
    let ring = a.ring();
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                let x = m.get(i, c);
                if !ring.is_zero(x) && best.map_or(true, |b| ring.cmp_norm(x, m.get(b, c)).is_lt()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap_rows(r, b);
            let mut clean = true;
            for i in r + 1..rows {
                if ring.is_zero(m.get(i, c)) {
                    continue;
                }
                let (q, rem) = ring.div_rem(m.get(i, c), m.get(r, c));
                m.add_row_multiple(i, r, &ring.neg(&q));
                if !ring.is_zero(&rem) {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if ring.is_zero(m.get(r, c)) {
            continue;
        }
        let p = m.get(r, c).clone();
        if ring.is_field() {
            m.scale_row(r, &ring.inv(&p));
        } else if p.is_negative() {
            m.scale_row(r, &ring.from_i64(-1));
        }
        for i in 0..r {
            if ring.is_zero(m.get(i, c)) {
                continue;
            }
            let (q, _) = ring.div_rem(m.get(i, c), m.get(r, c));
            m.add_row_multiple(i, r, &ring.neg(&q));
        }
        pivots.push(c);
        r += 1;
    }
    let keep: Vec<usize> = (0..r).collect();
    Ok((m.select_rows(&keep), pivots))
}

pub fn rank(a: &ExactMatrix) -> Result<usize, Error> {
    if a.ring().is_field() {
        Ok(row_echelon(a)?.1.len())
    } else {
        Ok(snf(a)?.rank)
    }
}

/// Basis of the kernel as columns; over Z the basis of the full (saturated) lattice kernel.
pub fn kernel_basis(a: &ExactMatrix) -> Result<ExactMatrix, Error> {
    let ring = a.ring();
    let n = a.cols();
    if ring.is_field() {
        let (r, piv) = row_echelon(a)?;
        let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
        let mut k = ExactMatrix::zeros(ring, n, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, ring.one());
            for (i, &p) in piv.iter().enumerate() {
                k.set(p, j, ring.neg(r.get(i, f)));
            }
        }
        Ok(k)
    } else {
        let s = snf(a)?;
        let idx: Vec<usize> = (s.rank..n).collect();
        Ok(s.v.select_columns(&idx))
    }
}

/// Canonical basis of the column span (transposed echelon form of the transpose).
pub fn image_basis(a: &ExactMatrix) -> Result<ExactMatrix, Error> {
    Ok(row_echelon(&a.transpose())?.0.transpose())
}

/// Whether two matrices have the same column span (as lattices over Z).
pub fn same_column_span(a: &ExactMatrix, b: &ExactMatrix) -> Result<bool, Error> {
    if a.rows() != b.rows() {
        return Ok(false);
    }
    Ok(image_basis(a)? == image_basis(b)?)
}

/// Solves `A X = B`; `None` when some column of `B` is outside the span of `A`.
pub fn solve(a: &ExactMatrix, b: &ExactMatrix) -> Result<Option<ExactMatrix>, Error> {
    let ring = a.ring();
    if a.rows() != b.rows() {
        return Err(Error::Invalid("solve: row count mismatch".into()));
    }
    let s = snf(a)?;
    let ub = s.u.mul(b)?;
    let mut y = ExactMatrix::zeros(ring, a.cols(), b.cols());
    for j in 0..b.cols() {
        for i in 0..a.rows() {
            let x = ub.get(i, j);
            if i < s.rank {
                let (q, rem) = ring.div_rem(x, s.d.get(i, i));
                if !ring.is_zero(&rem) {
                    return Ok(None);
                }
                y.set(i, j, q);
            } else if !ring.is_zero(x) {
                return Ok(None);
            }
        }
    }
    Ok(Some(s.v.mul(&y)?))
}

/// Whether every column of `b` lies in the column span of `a`.
pub fn span_contains(a: &ExactMatrix, b: &ExactMatrix) -> Result<bool, Error> {
    Ok(solve(a, b)?.is_some())
}

/// Basis of the intersection of two column spans.
pub fn intersect_spans(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix, Error> {
    let k = kernel_basis(&a.hcat(&b.neg()))?;
    let top: Vec<usize> = (0..a.cols()).collect();
    let combo = a.mul(&k.select_rows(&top))?;
    image_basis(&combo)
}

/// A matrix `L` with `L * b = I` for a basis `b` of a direct summand; fails when the
/// columns are dependent or (over Z) span a non-saturated lattice.
pub fn left_inverse(b: &ExactMatrix) -> Result<ExactMatrix, Error> {
    let ring = b.ring();
    let s = snf(b)?;
    let k = b.cols();
    if s.rank != k {
        return Err(Error::Invalid("columns are linearly dependent".into()));
    }
    if s.diagonal().iter().any(|d| !ring.is_unit(d)) {
        return Err(Error::NonSaturatedDomain("column span".into()));
    }
    let mut dplus = ExactMatrix::zeros(ring, k, b.rows());
    for i in 0..k {
        dplus.set(i, i, ring.inv(s.d.get(i, i)));
    }
    s.v.mul(&dplus)?.mul(&s.u)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Coords {
    /// The basis restricted to these rows is the identity.
    Select(Vec<usize>),
    /// A left inverse of the basis.
    Dense(ExactMatrix),
}

/// A basis of a direct summand together with a way to read off coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandBasis {
    pub basis: ExactMatrix,
    coords: Coords,
}

impl SummandBasis {
    /// Canonical basis of the column span of `a`. Fails over Z when the span is not a
    /// direct summand.
    pub fn of_span(a: &ExactMatrix) -> Result<Self, Error> {
        let (echelon, pivots) = row_echelon(&a.transpose())?;
        let basis = echelon.transpose();
        let ring = a.ring();
        let unit_pivots = (0..pivots.len()).all(|i| ring.is_one(basis.get(pivots[i], i)));
        if unit_pivots {
            return Ok(SummandBasis { basis, coords: Coords::Select(pivots) });
        }
        let left = left_inverse(&basis)?;
        Ok(SummandBasis { basis, coords: Coords::Dense(left) })
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        SummandBasis { basis: ExactMatrix::identity(ring, n), coords: Coords::Select((0..n).collect()) }
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// Coordinates of a vector assumed to lie in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        match &self.coords {
            Coords::Select(rows) => rows.iter().map(|&r| v[r].clone()).collect(),
            Coords::Dense(l) => l.mul_vec(v),
        }
    }

    /// Coordinates of a sparse vector given as `(index, value)` pairs.
    pub fn coordinates_sparse(&self, ring: Ring, v: &[(usize, Scalar)]) -> Vec<Scalar> {
        match &self.coords {
            Coords::Select(rows) => {
                let mut out = vec![ring.zero(); rows.len()];
                for (i, x) in v {
                    if let Ok(k) = rows.binary_search(i) {
                        out[k] = x.clone();
                    }
                }
                out
            }
            Coords::Dense(l) => {
                let mut out = vec![ring.zero(); l.rows()];
                for (i, x) in v {
                    for (k, o) in out.iter_mut().enumerate() {
                        let c = l.get(k, *i);
                        if !ring.is_zero(c) {
                            *o = ring.add(o, &ring.mul(c, x));
                        }
                    }
                }
                out
            }
        }
    }

    /// Matrix whose columns are the coordinates of the columns of `m`.
    pub fn coordinate_matrix(&self, m: &ExactMatrix) -> ExactMatrix {
        let cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|j| self.coordinates(&m.column(j))).collect();
        ExactMatrix::from_columns(m.ring(), self.rank(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = kernel_basis(&ExactMatrix::identity(Ring::Rationals, 2)).unwrap();
        assert_eq!((k.rows(), k.cols()), (2, 0));
    }

    #[test]
    fn kernel_of_row_sum() {
        let q = Ring::Rationals;
        let k = kernel_basis(&ExactMatrix::from_i64_rows(q, &[&[1, 1]])).unwrap();
        assert_eq!(k, ExactMatrix::from_i64_rows(q, &[&[-1], &[1]]));
    }

    #[test]
    fn nonsingular_integer_kernel() {
        let z = Ring::Integers;
        let k = kernel_basis(&ExactMatrix::from_i64_rows(z, &[&[2, 4], &[6, 8]])).unwrap();
        assert_eq!(k.cols(), 0);
    }

    #[test]
    fn integer_kernel_is_saturated() {
        let z = Ring::Integers;
        let a = ExactMatrix::from_i64_rows(z, &[&[2, 4, 6]]);
        let k = kernel_basis(&a).unwrap();
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());
        // (1,1,-1) is in the kernel lattice and must be an integer combination
        let v = ExactMatrix::from_i64_rows(z, &[&[1], &[1], &[-1]]);
        assert!(span_contains(&k, &v).unwrap());
    }

    #[test]
    fn hermite_form_is_canonical() {
        let z = Ring::Integers;
        let a = ExactMatrix::from_i64_rows(z, &[&[2, 4], &[3, 6]]);
        let b = ExactMatrix::from_i64_rows(z, &[&[-2, 0], &[-3, 0]]);
        assert!(same_column_span(&a, &b).unwrap());
        let c = ExactMatrix::from_i64_rows(z, &[&[4], &[6]]);
        assert!(!same_column_span(&a, &c).unwrap());
    }

    #[test]
    fn summand_coordinates() {
        let z = Ring::Integers;
        // an idempotent whose image needs a dense left inverse
        let e = ExactMatrix::from_i64_rows(z, &[&[-2, 2], &[-3, 3]]);
        assert_eq!(e.mul(&e).unwrap(), e);
        let s = SummandBasis::of_span(&e).unwrap();
        assert_eq!(s.rank(), 1);
        let v = e.column(1);
        let c = s.coordinates(&v);
        assert_eq!(s.basis.mul_vec(&c), v);
        let bad = ExactMatrix::from_i64_rows(z, &[&[2], &[4]]);
        assert!(SummandBasis::of_span(&bad).is_err());
    }

    #[test]
    fn intersection_of_planes() {
        let q = Ring::Rationals;
        let a = ExactMatrix::from_i64_rows(q, &[&[1, 0], &[0, 1], &[0, 0]]);
        let b = ExactMatrix::from_i64_rows(q, &[&[0, 0], &[1, 0], &[0, 1]]);
        let i = intersect_spans(&a, &b).unwrap();
        assert_eq!(i, ExactMatrix::from_i64_rows(q, &[&[0], &[1], &[0]]));
    }
}
