use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;
use crate::group::{FiniteGroup, MAX_ORDER};

/// A finite subset of group element ids, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IdemSet(u32);

impl IdemSet {
    pub const EMPTY: IdemSet = IdemSet(0);

    pub fn from_ids(ids: &[usize]) -> Self {
        IdemSet(ids.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn singleton(g: usize) -> Self {
        IdemSet(1 << g)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn from_mask(mask: u32) -> Self {
        IdemSet(mask)
    }

    pub fn contains(self, g: usize) -> bool {
        self.0 >> g & 1 == 1
    }

    pub fn insert(self, g: usize) -> Self {
        IdemSet(self.0 | 1 << g)
    }

    pub fn remove(self, g: usize) -> Self {
        IdemSet(self.0 & !(1 << g))
    }

    pub fn union(self, other: IdemSet) -> Self {
        IdemSet(self.0 | other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 >> i & 1 == 1)
    }

    /// The set `g·E`.
    pub fn translate(self, g: &FiniteGroup, by: usize) -> Self {
        IdemSet(self.iter().fold(0, |m, x| m | 1 << g.mul(by, x)))
    }
}

impl Ord for IdemSet {
    /// Lexicographic order on the increasing element sequences.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

impl PartialOrd for IdemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IdemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Normal form `e_{a_1} … e_{a_k} [h]` of an element of Exel's semigroup, with the
/// identity and `h` excluded from `idem`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SElem {
    pub idem: IdemSet,
    pub grp: usize,
}

impl Ord for SElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grp.cmp(&other.grp).then_with(|| self.idem.cmp(&other.idem))
    }
}

impl PartialOrd for SElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl SElem {
    pub const ONE: SElem = SElem { idem: IdemSet::EMPTY, grp: 0 };

    /// Builds `(E, h)` after removing the identity and `h` from `E`.
    pub fn canonical(idem: IdemSet, grp: usize) -> Self {
        SElem { idem: idem.remove(0).remove(grp), grp }
    }

    /// The generator `[g]`.
    pub fn gen(g: usize) -> Self {
        SElem { idem: IdemSet::EMPTY, grp: g }
    }

    /// The idempotent `e_g = [g][g^{-1}]`.
    pub fn e(g: usize) -> Self {
        SElem::canonical(IdemSet::singleton(g), 0)
    }

    /// The idempotent `∏_{a∈E} e_a`.
    pub fn idempotent(set: IdemSet) -> Self {
        SElem::canonical(set, 0)
    }

    pub fn is_idempotent(self) -> bool {
        self.grp == 0
    }

    /// Renders as `e_a e_b [h]` with canonical element names.
    pub fn display(self, g: &FiniteGroup) -> alloc::string::String {
        use alloc::format;
        use alloc::string::String;
        let mut parts: Vec<String> = self.idem.iter().map(|a| format!("e_{}", g.name(a))).collect();
        if self.grp != 0 || parts.is_empty() {
            if self.grp == 0 {
                parts.push(String::from("1"));
            } else {
                parts.push(format!("[{}]", g.name(self.grp)));
            }
        }
        parts.join(" ")
    }
}

/// Product in `S(G)`: `(E,g)(F,h) = (E ∪ gF ∪ {g}, gh)`.
pub fn sg_mul(g: &FiniteGroup, x: SElem, y: SElem) -> SElem {
    let set = x.idem.union(y.idem.translate(g, x.grp)).insert(x.grp);
    SElem::canonical(set, g.mul(x.grp, y.grp))
}

/// Inverse-semigroup inverse: `(E,h)* = (h^{-1}E ∪ {h^{-1}}, h^{-1})`.
pub fn sg_star(g: &FiniteGroup, z: SElem) -> SElem {
    let hi = g.inv(z.grp);
    SElem::canonical(z.idem.translate(g, hi).insert(hi), hi)
}

/// Normal form of `[g_1][g_2]…[g_k]`.
pub fn sg_normalize(g: &FiniteGroup, word: &[usize]) -> SElem {
    word.iter().fold(SElem::ONE, |acc, &x| sg_mul(g, acc, SElem::gen(x)))
}

/// Number of normal forms: `2^{n-1} + (n-1) 2^{n-2}`.
pub fn semigroup_order(n: usize) -> usize {
    if n == 1 {
        1
    } else {
        (1 << (n - 1)) + (n - 1) * (1 << (n - 2))
    }
}

/// All normal forms, ordered by group part and then lexicographically by idempotent set.
pub fn enumerate_s(g: &FiniteGroup) -> Result<Vec<SElem>, Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::GroupTooLarge(n));
    }
    let mut out = Vec::with_capacity(semigroup_order(n));
    for h in 0..n {
        let allowed: Vec<usize> = (1..n).filter(|&a| a != h).collect();
        let mut block: Vec<SElem> = (0u32..1 << allowed.len())
            .map(|bits| {
                let ids: Vec<usize> =
                    allowed.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &a)| a).collect();
                SElem { idem: IdemSet::from_ids(&ids), grp: h }
            })
            .collect();
        block.sort();
        out.extend(block);
    }
    Ok(out)
}

/// The idempotent normal forms, i.e. the basis of `B`, in enumeration order.
pub fn enumerate_idempotents(g: &FiniteGroup) -> Result<Vec<SElem>, Error> {
    Ok(enumerate_s(g)?.into_iter().filter(|s| s.grp == 0).collect())
}
