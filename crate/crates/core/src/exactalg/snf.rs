use alloc::vec::Vec;

use num_bigint::BigInt;

use super::matrix::{guard, ExactMatrix};
use super::ring::Scalar;
use crate::error::Error;

/// `U * A * V = D` with `U`, `V` invertible and `D` diagonal with a divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: ExactMatrix,
    pub d: ExactMatrix,
    pub v: ExactMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Diagonal entries that are not units (the torsion of the cokernel over Z).
    pub fn torsion(&self) -> Vec<BigInt> {
        let r = self.d.ring();
        if r.is_field() {
            return Vec::new();
        }
        self.diagonal().iter().filter(|x| !r.is_unit(x)).filter_map(|x| x.to_bigint()).collect()
    }
}

/// Position of the smallest nonzero entry in the block `[t.., t..]`; ties go to the
/// lexicographically first `(row, col)`.
fn smallest_entry(d: &ExactMatrix, t: usize) -> Option<(usize, usize)> {
    let r = d.ring();
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d.get(i, j);
            if r.is_zero(x) {
                continue;
            }
            if best.map_or(true, |(bi, bj)| r.cmp_norm(x, d.get(bi, bj)).is_lt()) {
                best = Some((i, j));
                if r.is_unit(x) {
                    return best;
                }
            }
        }
    }
    best
}

/// Smith normal form over Z or a field. Deterministic: the pivot is always the smallest
/// remaining entry by absolute value (first in row-major order among equals).
pub fn snf(a: &ExactMatrix) -> Result<SmithForm, Error> {
    let (m, n) = (a.rows(), a.cols());
    guard(m, n)?;
    guard(m, m)?;
    guard(n, n)?;
    let ring = a.ring();
    let mut d = a.clone();
    let mut u = ExactMatrix::identity(ring, m);
    let mut v = ExactMatrix::identity(ring, n);
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_entry(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut changed = false;
            // clear column t below the pivot
            for i in t + 1..m {
                if ring.is_zero(d.get(i, t)) {
                    continue;
                }
                let (q, _) = ring.div_rem(d.get(i, t), d.get(t, t));
                let c = ring.neg(&q);
                d.add_row_multiple(i, t, &c);
                u.add_row_multiple(i, t, &c);
                if !ring.is_zero(d.get(i, t)) {
                    changed = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..n {
                if ring.is_zero(d.get(t, j)) {
                    continue;
                }
                let (q, _) = ring.div_rem(d.get(t, j), d.get(t, t));
                let c = ring.neg(&q);
                d.add_col_multiple(j, t, &c);
                v.add_col_multiple(j, t, &c);
                if !ring.is_zero(d.get(t, j)) {
                    changed = true;
                }
            }
            if changed {
                // a remainder smaller than the pivot survived; move the smallest one in
                let mut best = (t, t);
                for i in t + 1..m {
                    let x = d.get(i, t);
                    if !ring.is_zero(x) && ring.cmp_norm(x, d.get(best.0, best.1)).is_lt() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    let x = d.get(t, j);
                    if !ring.is_zero(x) && ring.cmp_norm(x, d.get(best.0, best.1)).is_lt() {
                        best = (t, j);
                    }
                }
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            if ring.is_field() {
                break;
            }
            // divisibility: the pivot must divide the whole remaining block
            let mut offender = None;
            'outer: for i in t + 1..m {
                for j in t + 1..n {
                    let (_, rem) = ring.div_rem(d.get(i, j), d.get(t, t));
                    if !ring.is_zero(&rem) {
                        offender = Some(i);
                        break 'outer;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = ring.one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        let p = d.get(t, t).clone();
        if ring.is_field() {
            let inv = ring.inv(&p);
            d.scale_row(t, &inv);
            u.scale_row(t, &inv);
        } else if p.is_negative() {
            let m1 = ring.from_i64(-1);
            d.scale_row(t, &m1);
            u.scale_row(t, &m1);
        }
        t += 1;
    }
    Ok(SmithForm { u, d, v, rank: t })
}

/// Inverse of a square invertible matrix (unimodular over Z).
pub fn inverse(a: &ExactMatrix) -> Result<ExactMatrix, Error> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Invalid("inverse of a non-square matrix".into()));
    }
    let s = snf(a)?;
    let ring = a.ring();
    if s.rank != n || s.diagonal().iter().any(|x| !ring.is_unit(x)) {
        return Err(Error::Invalid("matrix is not invertible".into()));
    }
    // A = U^-1 D V^-1  =>  A^-1 = V D^-1 U
    let mut dinv = ExactMatrix::zeros(ring, n, n);
    for i in 0..n {
        dinv.set(i, i, ring.inv(s.d.get(i, i)));
    }
    s.v.mul(&dinv)?.mul(&s.u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Ring;

    fn det2(m: &ExactMatrix) -> Scalar {
        let r = m.ring();
        r.sub(&r.mul(m.get(0, 0), m.get(1, 1)), &r.mul(m.get(0, 1), m.get(1, 0)))
    }

    #[test]
    fn zero_matrix_has_no_invariants() {
        let s = snf(&ExactMatrix::zeros(Ring::Integers, 2, 2)).unwrap();
        assert_eq!(s.rank, 0);
        assert!(s.d.is_zero());
    }

    #[test]
    fn identity_is_fixed() {
        let s = snf(&ExactMatrix::identity(Ring::Integers, 3)).unwrap();
        assert!(s.d.is_identity());
    }

    #[test]
    fn two_by_two_invariants() {
        let z = Ring::Integers;
        let a = ExactMatrix::from_i64_rows(z, &[&[2, 4], &[6, 8]]);
        let s = snf(&a).unwrap();
        assert_eq!(s.diagonal(), alloc::vec![z.from_i64(2), z.from_i64(4)]);
        assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(z.is_unit(&det2(&s.u)) && z.is_unit(&det2(&s.v)));
    }

    #[test]
    fn inverse_roundtrip() {
        let z = Ring::Integers;
        let a = ExactMatrix::from_i64_rows(z, &[&[2, 1], &[1, 1]]);
        let ai = inverse(&a).unwrap();
        assert!(a.mul(&ai).unwrap().is_identity());
    }
}
