use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::complex::{check_words, index_of, word_of, words, ChainComplex, CochainComplex, Layout};
use crate::error::Error;
use crate::exactalg::{normalize, ExactMatrix, Ring, Scalar, SparseMatrix, SparseVec, SummandBasis};
use crate::glob::GlobalModule;
use crate::group::FiniteGroup;
use crate::parmod::{ParRepModule, Side};
use crate::parsemigroup::{sg_mul, sg_normalize, sg_star, IdemSet, SElem};

/// One face of `[g_0] ⊗_B … ⊗_B [g_{k−1}] ⊗_B 1`, written back in the form
/// `[h_0] ⊗_B … ⊗_B [h_{k−2}] ⊗_B t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub index: usize,
    pub word: Vec<usize>,
    pub tail: SElem,
}

/// Moves idempotents rightward across `⊗_B`: each factor `z = [h]u` keeps `[h]` and `u`
/// multiplies the next factor. The last entry is the tail.
fn normalize_factors(g: &FiniteGroup, mut list: Vec<SElem>) -> (Vec<usize>, SElem) {
    let last = list.len() - 1;
    let mut word = Vec::with_capacity(last);
    for j in 0..last {
        let h = list[j].grp;
        let u = sg_mul(g, SElem::gen(g.inv(h)), list[j]);
        list[j + 1] = sg_mul(g, u, list[j + 1]);
        word.push(h);
    }
    (word, list[last])
}

/// Faces `d_0, …, d_k` of the basis chain `[g_0] ⊗_B … ⊗_B [g_{k−1}] ⊗_B 1` of the
/// standard resolution of `B`: `d_0` replaces the first two factors by `z_0* z_0 z_1` and
/// `d_i` multiplies factors `i−1` and `i` (the tail counts as factor `k`).
pub fn bar_faces(g: &FiniteGroup, word: &[usize]) -> Vec<Face> {
    let k = word.len();
    let mut list: Vec<SElem> = word.iter().map(|&x| SElem::gen(x)).collect();
    list.push(SElem::ONE);
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut l = list.clone();
        let merged = if i == 0 {
            let z0 = l[0];
            sg_mul(g, sg_mul(g, sg_star(g, z0), z0), l[1])
        } else {
            sg_mul(g, l[i - 1], l[i])
        };
        let at = if i == 0 { 0 } else { i - 1 };
        l[at] = merged;
        l.remove(at + 1);
        let (w, tail) = normalize_factors(g, l);
        out.push(Face { index: i, word: w, tail });
    }
    out
}

/// `ε([g_0]…[g_{k−1}])` as an idempotent set.
pub fn word_epsilon(g: &FiniteGroup, word: &[usize]) -> IdemSet {
    let z = sg_normalize(g, word);
    sg_mul(g, sg_star(g, z), z).idem
}

fn dense_col(m: &ExactMatrix, j: usize) -> SparseVec {
    let r = m.ring();
    (0..m.rows()).filter(|&i| !r.is_zero(m.get(i, j))).map(|i| (i, m.get(i, j).clone())).collect()
}

/// Summands `ε_w M` (left) or `M ε_w` (right), cached by idempotent.
struct Summands<'a> {
    m: &'a ParRepModule,
    cache: BTreeMap<IdemSet, (SummandBasis, bool)>,
}

impl<'a> Summands<'a> {
    fn new(m: &'a ParRepModule) -> Self {
        Summands { m, cache: BTreeMap::new() }
    }

    fn get(&mut self, e: IdemSet) -> Result<&(SummandBasis, bool), Error> {
        if !self.cache.contains_key(&e) {
            let mat = self.m.idempotent_matrix(e);
            let dense = mat.to_dense()?;
            let entry = if dense.is_identity() {
                (SummandBasis::identity(self.m.ring(), self.m.rank()), true)
            } else {
                (SummandBasis::of_span(&dense)?, false)
            };
            self.cache.insert(e, entry);
        }
        Ok(&self.cache[&e])
    }
}

fn partial_layouts(g: &FiniteGroup, top: usize, s: &mut Summands<'_>) -> Result<Vec<Layout>, Error> {
    let n = g.order();
    let mut layouts = Vec::with_capacity(top + 1);
    for len in 0..=top {
        check_words(n, len, 1)?;
        let mut offsets = alloc::vec![0usize];
        for w in 0..words(n, len) {
            let e = word_epsilon(g, &word_of(n, len, w));
            let r = s.get(e)?.0.rank();
            offsets.push(offsets.last().unwrap() + r);
        }
        let layout = Layout { order: n, len, offsets };
        if layout.dim() > super::complex::CHAIN_LIMIT {
            return Err(Error::ChainSpaceTooLarge { degree: len, dim: layout.dim() });
        }
        layouts.push(layout);
    }
    Ok(layouts)
}

fn push_coords(ring: Ring, out: &mut SparseVec, offset: usize, coords: &[Scalar], sign: bool) {
    for (k, c) in coords.iter().enumerate() {
        if !ring.is_zero(c) {
            out.push((offset + k, if sign { ring.neg(c) } else { c.clone() }));
        }
    }
}

/// Chains `C_n = ⊕_{w ∈ G^n} ε_w M` of the standard resolution of `B` tensored with a
/// left module, for `n ≤ n_max + 1`.
pub fn partial_bar_complex(m: &ParRepModule, n_max: usize) -> Result<ChainComplex, Error> {
    if m.side() != Side::Left {
        return Err(Error::Invalid("partial homology needs a left module".into()));
    }
    let g = m.group();
    let ring = m.ring();
    let n = g.order();
    let top = n_max + 1;
    let mut s = Summands::new(m);
    let layouts = partial_layouts(g, top, &mut s)?;
    let mut d = Vec::with_capacity(top);
    for len in 1..=top {
        let mut cols = Vec::with_capacity(layouts[len].dim());
        for w in 0..words(n, len) {
            let word = word_of(n, len, w);
            let faces = bar_faces(g, &word);
            let basis = s.get(word_epsilon(g, &word))?.0.basis.clone();
            for j in 0..basis.cols() {
                let v = dense_col(&basis, j);
                let mut col: SparseVec = Vec::new();
                for f in &faces {
                    let mut x = m.apply_monomial(f.tail, &v);
                    let e = word_epsilon(g, &f.word);
                    let (sb, full) = s.get(e)?;
                    if !*full {
                        x = m.apply_monomial(SElem::idempotent(e), &x);
                    }
                    let coords = sb.coordinates_sparse(ring, &x);
                    push_coords(
                        ring,
                        &mut col,
                        layouts[len - 1].offsets[index_of(n, &f.word)],
                        &coords,
                        f.index % 2 == 1,
                    );
                }
                cols.push(normalize(ring, col));
            }
        }
        d.push(SparseMatrix::from_columns(ring, layouts[len - 1].dim(), cols));
    }
    ChainComplex::new(ring, layouts, d)
}

/// Cochains `C^n = ⊕_{w ∈ G^n} M ε_w` for a right module, `(δf)(w) = Σ_i (−1)^i f(w_i')·t_i`
/// over the faces of `w`, for `n ≤ n_max + 1`.
pub fn partial_cochain_complex(m: &ParRepModule, n_max: usize) -> Result<CochainComplex, Error> {
    if m.side() != Side::Right {
        return Err(Error::Invalid("partial cohomology needs a right module".into()));
    }
    let g = m.group();
    let ring = m.ring();
    let n = g.order();
    let top = n_max + 1;
    let mut s = Summands::new(m);
    let layouts = partial_layouts(g, top, &mut s)?;
    let mut d = Vec::with_capacity(top);
    for len in 0..top {
        let mut cols: Vec<SparseVec> = alloc::vec![Vec::new(); layouts[len].dim()];
        for w in 0..words(n, len + 1) {
            let word = word_of(n, len + 1, w);
            let e_w = word_epsilon(g, &word);
            let row_off = layouts[len + 1].offsets[w];
            for f in bar_faces(g, &word) {
                let col_off = layouts[len].offsets[index_of(n, &f.word)];
                let src = s.get(word_epsilon(g, &f.word))?.0.basis.clone();
                let tail = sg_mul(g, f.tail, SElem::idempotent(e_w));
                let (sb, _) = s.get(e_w)?;
                for j in 0..src.cols() {
                    let x = m.apply_monomial(tail, &dense_col(&src, j));
                    let coords = sb.coordinates_sparse(ring, &x);
                    push_coords(ring, &mut cols[col_off + j], row_off, &coords, f.index % 2 == 1);
                }
            }
        }
        let cols = cols.into_iter().map(|c| normalize(ring, c)).collect();
        d.push(SparseMatrix::from_columns(ring, layouts[len + 1].dim(), cols));
    }
    CochainComplex::new(ring, layouts, d)
}

/// The bar complex `C_n = KG^{⊗n} ⊗ N` of a left `G`-module: `d_0` drops `g_1`, `d_i`
/// multiplies `g_i g_{i+1}`, `d_n` acts by `g_n` on the coefficient.
pub fn global_bar_complex(nm: &GlobalModule, n_max: usize) -> Result<ChainComplex, Error> {
    if nm.side() != Side::Left {
        return Err(Error::Invalid("group homology needs a left module".into()));
    }
    let g = nm.group();
    let ring = nm.ring();
    let (n, r) = (g.order(), nm.rank());
    let top = n_max + 1;
    let mut layouts = Vec::with_capacity(top + 1);
    for len in 0..=top {
        check_words(n, len, r)?;
        layouts.push(Layout::uniform(n, len, r));
    }
    let acts: Vec<SparseMatrix> = (0..n).map(|x| SparseMatrix::from_dense(nm.action(x))).collect();
    let mut d = Vec::with_capacity(top);
    for len in 1..=top {
        let mut cols = Vec::with_capacity(words(n, len) * r);
        for w in 0..words(n, len) {
            let word = word_of(n, len, w);
            for j in 0..r {
                let mut col: SparseVec = Vec::new();
                col.push((index_of(n, &word[1..]) * r + j, ring.one()));
                for i in 1..len {
                    let mut merged = word.clone();
                    merged[i - 1] = g.mul(word[i - 1], word[i]);
                    merged.remove(i);
                    let c = if i % 2 == 1 { ring.neg(&ring.one()) } else { ring.one() };
                    col.push((index_of(n, &merged) * r + j, c));
                }
                let base = index_of(n, &word[..len - 1]) * r;
                for (k, x) in acts[word[len - 1]].column(j) {
                    col.push((base + k, if len % 2 == 1 { ring.neg(x) } else { x.clone() }));
                }
                cols.push(normalize(ring, col));
            }
        }
        d.push(SparseMatrix::from_columns(ring, layouts[len - 1].dim(), cols));
    }
    ChainComplex::new(ring, layouts, d)
}

/// Inhomogeneous cochains of a right `G`-module:
/// `(δf)(g_1, …, g_{n+1}) = f(g_2, …) + Σ (−1)^i f(…, g_i g_{i+1}, …) + (−1)^{n+1} f(g_1, …, g_n)·g_{n+1}`.
pub fn global_cochain_complex(nm: &GlobalModule, n_max: usize) -> Result<CochainComplex, Error> {
    if nm.side() != Side::Right {
        return Err(Error::Invalid("group cohomology needs a right module".into()));
    }
    let g = nm.group();
    let ring = nm.ring();
    let (n, r) = (g.order(), nm.rank());
    let top = n_max + 1;
    let mut layouts = Vec::with_capacity(top + 1);
    for len in 0..=top {
        check_words(n, len, r)?;
        layouts.push(Layout::uniform(n, len, r));
    }
    let acts: Vec<SparseMatrix> = (0..n).map(|x| SparseMatrix::from_dense(nm.action(x))).collect();
    let mut d = Vec::with_capacity(top);
    for len in 0..top {
        let mut cols: Vec<SparseVec> = alloc::vec![Vec::new(); layouts[len].dim()];
        for w in 0..words(n, len + 1) {
            let word = word_of(n, len + 1, w);
            let row = w * r;
            let first = index_of(n, &word[1..]) * r;
            for j in 0..r {
                cols[first + j].push((row + j, ring.one()));
            }
            for i in 1..=len {
                let mut merged = word.clone();
                merged[i - 1] = g.mul(word[i - 1], word[i]);
                merged.remove(i);
                let c = if i % 2 == 1 { ring.neg(&ring.one()) } else { ring.one() };
                let base = index_of(n, &merged) * r;
                for j in 0..r {
                    cols[base + j].push((row + j, c.clone()));
                }
            }
            let base = index_of(n, &word[..len]) * r;
            let neg = (len + 1) % 2 == 1;
            for j in 0..r {
                for (k, x) in acts[word[len]].column(j) {
                    cols[base + j].push((row + k, if neg { ring.neg(x) } else { x.clone() }));
                }
            }
        }
        let cols = cols.into_iter().map(|c| normalize(ring, c)).collect();
        d.push(SparseMatrix::from_columns(ring, layouts[len + 1].dim(), cols));
    }
    CochainComplex::new(ring, layouts, d)
}
