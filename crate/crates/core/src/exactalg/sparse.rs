//! Sparse column storage and a streaming elimination engine for large chain complexes.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{guard, ExactMatrix};
use super::ring::{inv_mod, Ring, Scalar};
use super::snf::{inverse, snf};
use crate::error::Error;

/// Sparse vector as `(index, value)` pairs sorted by index with no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize(ring: Ring, mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = ring.add(y, &x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !ring.is_zero(x));
    out
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    ring: Ring,
    rows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(ring: Ring, rows: usize) -> Self {
        SparseMatrix { ring, rows, cols: Vec::new() }
    }

    pub fn from_columns(ring: Ring, rows: usize, cols: Vec<SparseVec>) -> Self {
        let mut m = Self::new(ring, rows);
        for c in cols {
            m.push_column(c);
        }
        m
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        Self::from_columns(ring, n, (0..n).map(|i| vec![(i, ring.one())]).collect())
    }

    pub fn from_dense(a: &ExactMatrix) -> Self {
        let ring = a.ring();
        let cols = (0..a.cols())
            .map(|j| (0..a.rows()).filter(|&i| !ring.is_zero(a.get(i, j))).map(|i| (i, a.get(i, j).clone())).collect())
            .collect();
        SparseMatrix { ring, rows: a.rows(), cols }
    }

    pub fn to_dense(&self) -> Result<ExactMatrix, Error> {
        guard(self.rows, self.cols.len())?;
        let mut m = ExactMatrix::zeros(self.ring, self.rows, self.cols.len());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                m.set(*i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn push_column(&mut self, col: SparseVec) {
        let c = normalize(self.ring, col);
        debug_assert!(c.last().map_or(true, |e| e.0 < self.rows));
        self.cols.push(c);
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// `self * v` for a sparse vector `v`.
    pub fn mul_vec(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let r = self.ring;
        let mut acc: SparseVec = Vec::new();
        for (j, x) in v {
            for (i, y) in &self.cols[*j] {
                acc.push((*i, r.mul(x, y)));
            }
        }
        normalize(r, acc)
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols() != other.rows {
            return Err(Error::ComplexNotExactlyComposable(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let cols = other.cols.iter().map(|c| self.mul_vec(c)).collect();
        Ok(SparseMatrix { ring: self.ring, rows: self.rows, cols })
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                cols[*i].push((j, x.clone()));
            }
        }
        SparseMatrix { ring: self.ring, rows: self.cols.len(), cols }
    }
}

/// Arithmetic needed by the elimination engine, specialised per ring.
pub(crate) trait Elim {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add_assign(&self, acc: &mut Self::E, a: &Self::E);
    fn is_zero(&self, a: &Self::E) -> bool;
    /// `acc -= a * b`
    fn sub_mul(&self, acc: &mut Self::E, a: &Self::E, b: &Self::E);
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Inverse when `a` is a unit.
    fn unit_inverse(&self, a: &Self::E) -> Option<Self::E>;
    /// Pivot preference: 0 for plus or minus one, 1 otherwise.
    fn cost(&self, a: &Self::E) -> u8;
    fn from_scalar(&self, x: &Scalar) -> Self::E;
    fn to_scalar(&self, x: &Self::E) -> Scalar;
}

pub(crate) struct Fp(pub u64);
pub(crate) struct Zz;
pub(crate) struct Qq;

impl Elim for Fp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add_assign(&self, acc: &mut u64, a: &u64) {
        *acc = (*acc + a) % self.0;
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub_mul(&self, acc: &mut u64, a: &u64, b: &u64) {
        let p = self.0;
        *acc = (*acc + p - a * b % p) % p;
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn unit_inverse(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| inv_mod(*a, self.0))
    }
    fn cost(&self, a: &u64) -> u8 {
        u8::from(!(*a == 1 || *a == self.0 - 1))
    }
    fn from_scalar(&self, x: &Scalar) -> u64 {
        match x {
            Scalar::Mod(v) => *v,
            _ => panic!("scalar ring mismatch"),
        }
    }
    fn to_scalar(&self, x: &u64) -> Scalar {
        Scalar::Mod(*x)
    }
}

impl Elim for Zz {
    type E = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add_assign(&self, acc: &mut BigInt, a: &BigInt) {
        *acc += a;
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn sub_mul(&self, acc: &mut BigInt, a: &BigInt, b: &BigInt) {
        *acc -= a * b;
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        a.abs().is_one().then(|| a.clone())
    }
    fn cost(&self, _: &BigInt) -> u8 {
        0
    }
    fn from_scalar(&self, x: &Scalar) -> BigInt {
        match x {
            Scalar::Int(v) => v.clone(),
            _ => panic!("scalar ring mismatch"),
        }
    }
    fn to_scalar(&self, x: &BigInt) -> Scalar {
        Scalar::Int(x.clone())
    }
}

impl Elim for Qq {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add_assign(&self, acc: &mut BigRational, a: &BigRational) {
        *acc += a;
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub_mul(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        *acc -= a * b;
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn unit_inverse(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn cost(&self, a: &BigRational) -> u8 {
        u8::from(!a.abs().is_one())
    }
    fn from_scalar(&self, x: &Scalar) -> BigRational {
        match x {
            Scalar::Rat(v) => v.clone(),
            _ => panic!("scalar ring mismatch"),
        }
    }
    fn to_scalar(&self, x: &BigRational) -> Scalar {
        Scalar::Rat(x.clone())
    }
}

const NONE: u32 = u32::MAX;

struct Pivot<E> {
    row: u32,
    inv: E,
    col: Vec<(u32, E)>,
}

/// Column-by-column elimination with unit pivots. Each pivot column is reduced against all
/// earlier pivots, so a new column is cleared by visiting pivots in creation order.
/// Columns without a unit entry (only possible over Z) are parked for a final dense
/// Smith reduction.
pub(crate) struct Reducer<R: Elim> {
    r: R,
    row_pivot: Vec<u32>,
    pivots: Vec<Pivot<R::E>>,
    residual: Vec<Vec<(u32, R::E)>>,
    acc: Vec<R::E>,
    touched: Vec<u32>,
    seen: Vec<bool>,
    heap: BinaryHeap<Reverse<u32>>,
}

impl<R: Elim> Reducer<R> {
    pub(crate) fn new(r: R, nrows: usize) -> Self {
        let z = r.zero();
        Reducer {
            row_pivot: vec![NONE; nrows],
            pivots: Vec::new(),
            residual: Vec::new(),
            acc: vec![z; nrows],
            touched: Vec::new(),
            seen: vec![false; nrows],
            heap: BinaryHeap::new(),
            r,
        }
    }

    fn touch(&mut self, i: u32) {
        if !self.seen[i as usize] {
            self.seen[i as usize] = true;
            self.touched.push(i);
            let p = self.row_pivot[i as usize];
            if p != NONE {
                self.heap.push(Reverse(p));
            }
        }
    }

    fn reduce(&mut self, col: &[(u32, R::E)]) -> Vec<(u32, R::E)> {
        for (i, v) in col {
            self.acc[*i as usize] = v.clone();
            self.touch(*i);
        }
        while let Some(Reverse(p)) = self.heap.pop() {
            let row = self.pivots[p as usize].row as usize;
            if self.r.is_zero(&self.acc[row]) {
                continue;
            }
            let c = self.r.mul(&self.acc[row], &self.pivots[p as usize].inv);
            let n = self.pivots[p as usize].col.len();
            for k in 0..n {
                let i = self.pivots[p as usize].col[k].0;
                self.touch(i);
                let (acc, piv) = (&mut self.acc, &self.pivots[p as usize]);
                self.r.sub_mul(&mut acc[i as usize], &c, &piv.col[k].1);
            }
            self.acc[row] = self.r.zero();
        }
        self.touched.sort_unstable();
        let mut out = Vec::new();
        for &i in &self.touched {
            let v = core::mem::replace(&mut self.acc[i as usize], self.r.zero());
            self.seen[i as usize] = false;
            if !self.r.is_zero(&v) {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }

    /// Adds a column; returns true when it created a new pivot.
    pub(crate) fn push(&mut self, col: &[(u32, R::E)]) -> bool {
        let red = self.reduce(col);
        if red.is_empty() {
            return false;
        }
        let mut best: Option<(u8, usize)> = None;
        for (k, (_, v)) in red.iter().enumerate() {
            if self.r.unit_inverse(v).is_none() {
                continue;
            }
            let c = self.r.cost(v);
            if best.map_or(true, |(bc, _)| c < bc) {
                best = Some((c, k));
            }
            if c == 0 {
                break;
            }
        }
        match best {
            Some((_, k)) => {
                let row = red[k].0;
                let inv = self.r.unit_inverse(&red[k].1).expect("unit pivot");
                self.row_pivot[row as usize] = self.pivots.len() as u32;
                self.pivots.push(Pivot { row, inv, col: red });
                true
            }
            None => {
                self.residual.push(red);
                false
            }
        }
    }

    pub(crate) fn pivot_count(&self) -> usize {
        self.pivots.len()
    }

    /// Residual columns re-reduced against every pivot, compacted onto the rows they use.
    fn residual_block(&mut self) -> (Vec<u32>, Vec<Vec<(u32, R::E)>>) {
        let res = core::mem::take(&mut self.residual);
        let cols: Vec<Vec<(u32, R::E)>> = res.iter().map(|c| self.reduce(c)).collect();
        let mut used: Vec<u32> = cols.iter().flat_map(|c| c.iter().map(|e| e.0)).collect();
        used.sort_unstable();
        used.dedup();
        (used, cols)
    }

    fn residual_dense(&self, ring: Ring, used: &[u32], cols: &[Vec<(u32, R::E)>]) -> Result<ExactMatrix, Error> {
        guard(used.len(), cols.len())?;
        let mut w = ExactMatrix::zeros(ring, used.len(), cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c {
                let k = used.binary_search(i).expect("used row");
                w.set(k, j, self.r.to_scalar(v));
            }
        }
        Ok(w)
    }

    /// Rank and torsion of the span of all pushed columns.
    pub(crate) fn finish_rank(mut self, ring: Ring) -> Result<(usize, Vec<BigInt>), Error> {
        let (used, cols) = self.residual_block();
        if cols.iter().all(|c| c.is_empty()) {
            return Ok((self.pivots.len(), Vec::new()));
        }
        let w = self.residual_dense(ring, &used, &cols)?;
        let s = snf(&w)?;
        Ok((self.pivots.len() + s.rank, s.torsion()))
    }

    /// Cokernel of the span of all pushed columns.
    pub(crate) fn finish_cokernel(mut self, ring: Ring) -> Result<Cokernel, Error> {
        let n = self.row_pivot.len();
        let (used, cols) = self.residual_block();
        let free_rows: Vec<usize> = (0..n).filter(|&i| self.row_pivot[i] == NONE).collect();
        let mut free_index = vec![NONE; n];
        for (k, &i) in free_rows.iter().enumerate() {
            free_index[i] = k as u32;
        }
        // images of ambient basis vectors in the free-row coordinates
        let mut q: Vec<Vec<(u32, R::E)>> = vec![Vec::new(); n];
        for (k, &i) in free_rows.iter().enumerate() {
            q[i] = vec![(k as u32, self.r.one())];
        }
        for p in self.pivots.iter().rev() {
            let mut acc: Vec<(u32, R::E)> = Vec::new();
            let factor = self.r.neg(&p.inv);
            for (i, v) in &p.col {
                if *i == p.row {
                    continue;
                }
                let c = self.r.mul(&factor, v);
                for (f, w) in &q[*i as usize] {
                    acc.push((*f, self.r.mul(&c, w)));
                }
            }
            q[p.row as usize] = merge(&self.r, acc);
        }
        // residual Smith block acting on the used free rows
        let (torsion, rank_w, u, uinv, used_free) = if cols.iter().all(|c| c.is_empty()) {
            (Vec::new(), 0, None, None, Vec::new())
        } else {
            let w = self.residual_dense(ring, &used, &cols)?;
            let s = snf(&w)?;
            let uinv = inverse(&s.u)?;
            let used_free: Vec<usize> = used.iter().map(|&i| free_index[i as usize] as usize).collect();
            (s.torsion(), s.rank, Some(s.u), Some(uinv), used_free)
        };
        let nf = free_rows.len();
        // final free coordinates: unused free rows, then Smith coordinates past the rank
        let mut is_used = vec![false; nf];
        for &f in &used_free {
            is_used[f] = true;
        }
        let mut out_index = vec![NONE; nf];
        let mut next = 0u32;
        for f in 0..nf {
            if !is_used[f] {
                out_index[f] = next;
                next += 1;
            }
        }
        let smith_base = next as usize;
        let free_rank = smith_base + used_free.len() - rank_w;
        let mut projection = SparseMatrix::new(ring, free_rank);
        for qi in &q {
            let mut col: SparseVec = Vec::new();
            let mut on_used = vec![ring.zero(); used_free.len()];
            for (f, v) in qi {
                let f = *f as usize;
                if is_used[f] {
                    let k = used_free.binary_search(&f).expect("used");
                    on_used[k] = self.r.to_scalar(v);
                } else {
                    col.push((out_index[f] as usize, self.r.to_scalar(v)));
                }
            }
            if let Some(u) = &u {
                if on_used.iter().any(|x| !ring.is_zero(x)) {
                    let y = u.mul_vec(&on_used);
                    for (t, x) in y.into_iter().enumerate().skip(rank_w) {
                        col.push((smith_base + t - rank_w, x));
                    }
                }
            }
            projection.push_column(col);
        }
        let mut section_cols: Vec<SparseVec> = Vec::with_capacity(free_rank);
        for f in 0..nf {
            if !is_used[f] {
                section_cols.push(vec![(free_rows[f], ring.one())]);
            }
        }
        if let Some(uinv) = &uinv {
            for t in rank_w..used_free.len() {
                let col = (0..used_free.len()).map(|s| (free_rows[used_free[s]], uinv.get(s, t).clone())).collect();
                section_cols.push(col);
            }
        }
        let section = SparseMatrix::from_columns(ring, n, section_cols);
        Ok(Cokernel { free_rank, torsion, projection, section })
    }
}

fn merge<R: Elim>(r: &R, mut v: Vec<(u32, R::E)>) -> Vec<(u32, R::E)> {
    v.sort_by_key(|e| e.0);
    let mut out: Vec<(u32, R::E)> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => r.add_assign(y, &x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !r.is_zero(x));
    out
}

/// Free part and torsion of a cokernel, with a projection onto and a section from the free
/// coordinates (`projection * section = id`).
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub projection: SparseMatrix,
    pub section: SparseMatrix,
}

fn load<R: Elim>(r: &R, c: &SparseVec) -> Vec<(u32, R::E)> {
    c.iter().map(|(i, x)| (*i as u32, r.from_scalar(x))).collect()
}

fn rank_generic<R: Elim>(r: R, m: &SparseMatrix, bound: Option<usize>) -> Result<(usize, Vec<BigInt>), Error> {
    let mut red = Reducer::new(r, m.rows());
    for c in m.columns() {
        if bound.is_some_and(|b| red.pivot_count() >= b) {
            break;
        }
        let col = load(&red.r, c);
        red.push(&col);
    }
    red.finish_rank(m.ring())
}

fn cokernel_generic<R: Elim>(r: R, m: &SparseMatrix) -> Result<Cokernel, Error> {
    let mut red = Reducer::new(r, m.rows());
    for c in m.columns() {
        let col = load(&red.r, c);
        red.push(&col);
    }
    red.finish_cokernel(m.ring())
}

/// Rank of a sparse matrix and, over Z, the invariant factors of its column lattice that
/// are not units. `bound`, when given, must be an upper bound for the rank; elimination
/// stops once it is reached.
pub fn rank_and_torsion(m: &SparseMatrix, bound: Option<usize>) -> Result<(usize, Vec<BigInt>), Error> {
    match m.ring() {
        Ring::PrimeField(p) => rank_generic(Fp(p), m, bound),
        Ring::Integers => rank_generic(Zz, m, bound),
        Ring::Rationals => rank_generic(Qq, m, bound),
    }
}

/// Cokernel of the column span of `m`.
pub fn cokernel(m: &SparseMatrix) -> Result<Cokernel, Error> {
    match m.ring() {
        Ring::PrimeField(p) => cokernel_generic(Fp(p), m),
        Ring::Integers => cokernel_generic(Zz, m),
        Ring::Rationals => cokernel_generic(Qq, m),
    }
}
