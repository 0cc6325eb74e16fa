//! Finite groups with a fixed element enumeration.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// Largest supported group order.
pub const MAX_ORDER: usize = 24;

/// Description of a group to construct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Powers of a generator `g`.
    Cyclic(usize),
    /// Order `2n`: `r^i` then `r^i s`.
    Dihedral(usize),
    /// Permutations of `n <= 4` points in lexicographic one-line order.
    Symmetric(usize),
    /// Tuples in lexicographic order, first factor most significant.
    Product(Vec<GroupSpec>),
    /// Explicit Cayley table on ids `0..n`, with 0 the identity.
    Table(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<usize>,
    inv: Vec<usize>,
    names: Vec<String>,
}

fn cyclic_name(k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => "g".to_string(),
        _ => format!("g^{}", k),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // lexicographic order by repeated next-permutation
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
    out
}

impl FiniteGroup {
    pub fn new(spec: &GroupSpec) -> Result<Self, Error> {
        match spec {
            GroupSpec::Cyclic(n) => {
                let n = *n;
                check_order(n)?;
                let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
                Self::from_parts(table, (0..n).map(cyclic_name).collect())
            }
            GroupSpec::Dihedral(n) => {
                let n = *n;
                if n == 0 {
                    return Err(Error::Invalid("dihedral group needs n >= 1".into()));
                }
                check_order(2 * n)?;
                // id = i + n*b encodes r^i s^b
                let m = 2 * n;
                let mut table = vec![0; m * m];
                for x in 0..m {
                    for y in 0..m {
                        let (a, b) = (x % n, x / n);
                        let (c, d) = (y % n, y / n);
                        let e = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                        table[x * m + y] = e + n * ((b + d) % 2);
                    }
                }
                let names = (0..m)
                    .map(|x| {
                        let (a, b) = (x % n, x / n);
                        let r = match a {
                            0 => String::new(),
                            1 => "r".to_string(),
                            _ => format!("r^{}", a),
                        };
                        match (r.is_empty(), b) {
                            (true, 0) => "1".to_string(),
                            (false, 0) => r,
                            (_, _) => format!("{}s", r),
                        }
                    })
                    .collect();
                Self::from_parts(table, names)
            }
            GroupSpec::Symmetric(n) => {
                let n = *n;
                if n == 0 || n > 4 {
                    return Err(Error::Invalid(format!("symmetric group S{} is not supported (n must be 1..4)", n)));
                }
                let perms = permutations(n);
                let m = perms.len();
                let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("permutation");
                let mut table = vec![0; m * m];
                for (x, px) in perms.iter().enumerate() {
                    for (y, py) in perms.iter().enumerate() {
                        // (xy)(i) = x(y(i)): apply y first
                        let comp: Vec<usize> = (0..n).map(|i| px[py[i]]).collect();
                        table[x * m + y] = index(&comp);
                    }
                }
                let names = perms.iter().map(|p| p.iter().map(|&i| char::from(b'1' + i as u8)).collect()).collect();
                Self::from_parts(table, names)
            }
            GroupSpec::Product(factors) => {
                let mut g = FiniteGroup::new(&GroupSpec::Cyclic(1))?;
                let gs = factors.iter().map(FiniteGroup::new).collect::<Result<Vec<_>, _>>()?;
                let total: usize = gs.iter().map(|h| h.order()).product();
                check_order(total)?;
                for h in &gs {
                    g = g.direct_product(h);
                }
                if !gs.is_empty() {
                    // names as tuples of factor names
                    let names = (0..g.order())
                        .map(|x| {
                            let mut rest = x;
                            let mut parts = Vec::new();
                            for h in gs.iter().rev() {
                                parts.push(h.name(rest % h.order()).to_string());
                                rest /= h.order();
                            }
                            parts.reverse();
                            format!("({})", parts.join(","))
                        })
                        .collect();
                    g.names = names;
                }
                Ok(g)
            }
            GroupSpec::Table(rows) => Self::from_table(rows),
        }
    }

    pub fn cyclic(n: usize) -> Result<Self, Error> {
        Self::new(&GroupSpec::Cyclic(n))
    }

    pub fn dihedral(n: usize) -> Result<Self, Error> {
        Self::new(&GroupSpec::Dihedral(n))
    }

    pub fn symmetric(n: usize) -> Result<Self, Error> {
        Self::new(&GroupSpec::Symmetric(n))
    }

    pub fn product(factors: &[GroupSpec]) -> Result<Self, Error> {
        Self::new(&GroupSpec::Product(factors.to_vec()))
    }

    /// Validates an explicit Cayley table; id 0 must be the identity.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidCayleyTable("empty table".into()));
        }
        check_order(n)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidCayleyTable(format!("row {} has {} entries, expected {}", i, r.len(), n)));
            }
            if let Some(&bad) = r.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidCayleyTable(format!("entry {} in row {} is out of range", bad, i)));
            }
        }
        for x in 0..n {
            if rows[0][x] != x || rows[x][0] != x {
                return Err(Error::InvalidCayleyTable(format!("id 0 is not a two-sided identity (fails at {})", x)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Err(Error::InvalidCayleyTable(format!("associativity fails at ({}, {}, {})", a, b, c)));
                    }
                }
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| rows[a][b] == 0 && rows[b][a] == 0) {
                return Err(Error::InvalidCayleyTable(format!("{} has no two-sided inverse", a)));
            }
        }
        let table = rows.iter().flatten().copied().collect();
        Self::from_parts(table, (0..n).map(|i| format!("x{}", i)).collect())
    }

    fn from_parts(table: Vec<usize>, names: Vec<String>) -> Result<Self, Error> {
        let n = names.len();
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a * n + b] == 0)
                    .ok_or_else(|| Error::InvalidCayleyTable("missing inverse".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup { table, inv, names })
    }

    fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let k = n * m;
        let mut table = vec![0; k * k];
        for x in 0..k {
            for y in 0..k {
                let (x1, x2) = (x / m, x % m);
                let (y1, y2) = (y / m, y % m);
                table[x * k + y] = self.mul(x1, y1) * m + other.mul(x2, y2);
            }
        }
        let inv = (0..k).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        let names = (0..k).map(|x| format!("({},{})", self.name(x / m), other.name(x % m))).collect();
        FiniteGroup { table, inv, names }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Id of the element with the given canonical name.
    pub fn id_of(&self, name: &str) -> Option<usize> {
        let name = name.trim();
        self.names.iter().position(|n| n == name)
    }

    /// Product of a word, left to right.
    pub fn product_of(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &g| self.mul(acc, g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, |acc, k| acc / gcd(acc, k) * k)
    }

    /// Exhaustive associativity check.
    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_order(n: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::Invalid("group order must be positive".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::GroupTooLarge(n));
    }
    Ok(())
}

/// A subgroup of a finite group, carrying its own group structure on local ids
/// `0..|S|` (local id `k` is `members[k]` in the parent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<usize>,
    coset_reps: Vec<usize>,
    group: FiniteGroup,
}

impl Subgroup {
    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// Parent ids of the members, sorted.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Minimal parent id of each left coset `gS`, ascending.
    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    /// The subgroup as a group in its own right.
    pub fn as_group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Parent id of a local id.
    pub fn to_parent(&self, local: usize) -> usize {
        self.members[local]
    }

    pub fn to_local(&self, parent_id: usize) -> Option<usize> {
        self.members.binary_search(&parent_id).ok()
    }
}

/// Checks closure of `ids` and builds the subgroup.
pub fn check_subgroup(g: &FiniteGroup, ids: &[usize]) -> Result<Subgroup, Error> {
    if ids.is_empty() {
        return Err(Error::NotASubgroup("empty subset".into()));
    }
    let mut members: Vec<usize> = ids.to_vec();
    members.sort_unstable();
    members.dedup();
    if let Some(&bad) = members.iter().find(|&&x| x >= g.order()) {
        return Err(Error::NotASubgroup(format!("{} is not an element id", bad)));
    }
    for &a in &members {
        for &b in &members {
            let c = g.mul(a, b);
            if members.binary_search(&c).is_err() {
                return Err(Error::NotASubgroup(format!(
                    "{} * {} = {} is not in the subset",
                    g.name(a),
                    g.name(b),
                    g.name(c)
                )));
            }
        }
    }
    let k = members.len();
    let local = |x: usize| members.binary_search(&x).expect("closed");
    let table: Vec<usize> = (0..k * k).map(|t| local(g.mul(members[t / k], members[t % k]))).collect();
    let names = members.iter().map(|&m| g.name(m).to_string()).collect();
    let group = FiniteGroup::from_parts(table, names)?;
    let mut seen = vec![false; g.order()];
    let mut coset_reps = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        coset_reps.push(x);
        for &s in &members {
            seen[g.mul(x, s)] = true;
        }
    }
    Ok(Subgroup { parent: g.clone(), members, coset_reps, group })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two() {
        let g = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.name(1), "g");
    }

    #[test]
    fn s3_is_nonabelian() {
        let g = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.name(0), "123");
        assert_eq!(g.names()[1], "132");
    }

    #[test]
    fn c2_cubed() {
        let c2 = GroupSpec::Cyclic(2);
        let g = FiniteGroup::product(&[c2.clone(), c2.clone(), c2]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.exponent(), 2);
        assert_eq!(g.name(4), "(g,1,1)");
        assert_eq!(g.id_of("(1,1,g)"), Some(1));
    }

    #[test]
    fn dihedral_names_and_relations() {
        let g = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(g.names(), &["1", "r", "r^2", "s", "rs", "r^2s"]);
        let (r, s) = (1, 3);
        // s r s = r^-1
        assert_eq!(g.mul(g.mul(s, r), s), 2);
        assert!(g.is_associative());
    }

    #[test]
    fn table_validation() {
        let ok = vec![vec![0, 1], vec![1, 0]];
        assert!(FiniteGroup::from_table(&ok).is_ok());
        let bad = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 1, 0]];
        assert!(matches!(FiniteGroup::from_table(&bad), Err(Error::InvalidCayleyTable(_))));
    }

    #[test]
    fn order_cap() {
        assert!(matches!(FiniteGroup::cyclic(25), Err(Error::GroupTooLarge(25))));
    }

    #[test]
    fn subgroups() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let s = check_subgroup(&c4, &[0, 2]).unwrap();
        assert_eq!(s.index(), 2);
        assert_eq!(s.coset_reps(), &[0, 1]);
        assert_eq!(s.as_group().mul(1, 1), 0);
        assert!(matches!(check_subgroup(&c4, &[0, 1]), Err(Error::NotASubgroup(_))));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let t = s3.id_of("213").unwrap();
        assert_eq!(check_subgroup(&s3, &[0, t]).unwrap().members().len(), 2);
    }
}
