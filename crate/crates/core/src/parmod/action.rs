use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::rep::{ParRepModule, Side};
use crate::error::Error;
use crate::exactalg::{
    intersect_spans, left_inverse, rank, same_column_span, span_contains, sparse_quotient_presentation, ExactMatrix,
    QuotientPresentation, Ring, SparseMatrix,
};
use crate::group::FiniteGroup;
use crate::parsemigroup::IdemSet;

/// A partial action on a free module: a basis of each domain `M_g` and the matrix of
/// `θ_g : M_{g⁻¹} → M_g` in those bases.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialActionModule {
    group: FiniteGroup,
    ring: Ring,
    side: Side,
    rank: usize,
    domains: Vec<ExactMatrix>,
    left_inverses: Vec<ExactMatrix>,
    maps: Vec<ExactMatrix>,
}

impl PartialActionModule {
    /// Checks shapes, independence of each domain basis and (over Z) that every domain is a
    /// direct summand. Axioms are checked separately by [`validate_partial_action`].
    pub fn new(
        g: &FiniteGroup,
        side: Side,
        rank: usize,
        domains: Vec<ExactMatrix>,
        maps: Vec<ExactMatrix>,
    ) -> Result<Self, Error> {
        let n = g.order();
        if domains.len() != n || maps.len() != n {
            return Err(Error::InvalidPartialAction(format!(
                "a domain and a map are required for every group element ({} elements)",
                n
            )));
        }
        let ring = domains[0].ring();
        let mut left_inverses = Vec::with_capacity(n);
        for x in 0..n {
            let d = &domains[x];
            if d.ring() != ring || maps[x].ring() != ring {
                return Err(Error::RingMismatch);
            }
            if d.rows() != rank {
                return Err(Error::InvalidPartialAction(format!("domain of {} has wrong ambient rank", g.name(x))));
            }
            let li = match left_inverse(d) {
                Ok(l) => l,
                Err(Error::NonSaturatedDomain(_)) => return Err(Error::NonSaturatedDomain(String::from(g.name(x)))),
                Err(_) => {
                    return Err(Error::InvalidPartialAction(format!(
                        "domain generators of {} are not independent",
                        g.name(x)
                    )))
                }
            };
            left_inverses.push(li);
        }
        for x in 0..n {
            let xi = g.inv(x);
            if maps[x].rows() != domains[x].cols() || maps[x].cols() != domains[xi].cols() {
                return Err(Error::InvalidPartialAction(format!(
                    "θ_{} must be a {}x{} matrix",
                    g.name(x),
                    domains[x].cols(),
                    domains[xi].cols()
                )));
            }
        }
        Ok(PartialActionModule { group: g.clone(), ring, side, rank, domains, left_inverses, maps })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Basis of `M_g` as columns.
    pub fn domain(&self, g: usize) -> &ExactMatrix {
        &self.domains[g]
    }

    /// Matrix of `θ_g` in the domain bases.
    pub fn map(&self, g: usize) -> &ExactMatrix {
        &self.maps[g]
    }

    /// `θ_g` applied to the basis of `M_{g⁻¹}`, as ambient columns.
    pub fn images(&self, g: usize) -> ExactMatrix {
        self.domains[g].mul(&self.maps[g]).expect("shapes checked")
    }

    /// Applies `θ_g` to the columns of `x`; `None` if some column is outside `M_{g⁻¹}`.
    pub fn apply(&self, g: usize, x: &ExactMatrix) -> Result<Option<ExactMatrix>, Error> {
        let gi = self.group.inv(g);
        let coords = self.left_inverses[gi].mul(x)?;
        if self.domains[gi].mul(&coords)? != *x {
            return Ok(None);
        }
        Ok(Some(self.images(g).mul(&coords)?))
    }
}

/// Outcome of checking the partial action axioms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActionReport {
    pub violations: Vec<String>,
}

impl ActionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks axioms (i)–(iii) with exact intersections of domains.
pub fn validate_partial_action(a: &PartialActionModule) -> Result<ActionReport, Error> {
    let g = &a.group;
    let n = g.order();
    let mut report = ActionReport::default();
    let full = ExactMatrix::identity(a.ring, a.rank);
    if !same_column_span(&a.domains[0], &full)? {
        report.violations.push(String::from("axiom (i): M_1 is not all of M"));
    } else if !a.maps[0].is_identity() {
        report.violations.push(String::from("axiom (i): θ_1 is not the identity"));
    }
    for x in 0..n {
        let m = &a.maps[x];
        if m.rows() != m.cols() || rank(m)? != m.rows() || !span_contains(m, &ExactMatrix::identity(a.ring, m.rows()))?
        {
            report.violations.push(format!("θ_{} is not an isomorphism", g.name(x)));
        }
    }
    if !report.is_valid() {
        return Ok(report);
    }
    for x in 0..n {
        let xi = g.inv(x);
        for h in 0..n {
            // (ii) θ_x(M_{x⁻¹} ∩ M_{x⁻¹h}) ⊆ M_x ∩ M_h
            let inter = intersect_spans(&a.domains[xi], &a.domains[g.mul(xi, h)])?;
            let img = a.apply(x, &inter)?.expect("inside the domain");
            if !span_contains(&a.domains[x], &img)? || !span_contains(&a.domains[h], &img)? {
                report.violations.push(format!("axiom (ii) fails for (g, h) = ({}, {})", g.name(x), g.name(h)));
            }
            // (iii) θ_x θ_h = θ_{xh} on M_{h⁻¹} ∩ M_{h⁻¹x⁻¹}
            let hi = g.inv(h);
            let inter = intersect_spans(&a.domains[hi], &a.domains[g.mul(hi, xi)])?;
            let step = a.apply(h, &inter)?.expect("inside the domain");
            let lhs = a.apply(x, &step)?;
            let rhs = a.apply(g.mul(x, h), &inter)?;
            if lhs.is_none() || lhs != rhs {
                report.violations.push(format!("axiom (iii) fails for (g, h) = ({}, {})", g.name(x), g.name(h)));
            }
        }
    }
    Ok(report)
}

/// The partial action `M_g = e_g·M`, `θ_g = π(g)` (left), or `M_g = M·e_{g⁻¹}`,
/// `(m)θ_g = m·[g]` (right).
pub fn induced_partial_action(m: &ParRepModule) -> Result<PartialActionModule, Error> {
    let g = m.group();
    let n = g.order();
    let mut domains = Vec::with_capacity(n);
    for x in 0..n {
        let e = match m.side() {
            Side::Left => m.idempotent_matrix(IdemSet::singleton(x)),
            Side::Right => m.idempotent_matrix(IdemSet::singleton(g.inv(x))),
        };
        let basis = match m.image_of_idempotent(&e) {
            Ok(b) => b,
            Err(Error::NonSaturatedDomain(_)) => return Err(Error::NonSaturatedDomain(String::from(g.name(x)))),
            Err(e) => return Err(e),
        };
        domains.push(basis);
    }
    let mut maps = Vec::with_capacity(n);
    for x in 0..n {
        let src = &domains[g.inv(x)].basis;
        let img = m.pi(x).mul(src)?;
        maps.push(domains[x].coordinate_matrix(&img));
    }
    let domains = domains.into_iter().map(|d| d.basis).collect();
    PartialActionModule::new(g, m.side(), m.rank(), domains, maps)
}

/// Relators `[g]m − e_{g⁻¹}m` (left) or `m·[g] − m·e_g` (right) for every g and basis vector.
pub fn rep_coinvariant_relators(m: &ParRepModule) -> SparseMatrix {
    let g = m.group();
    let r = m.ring();
    let mut rel = SparseMatrix::new(r, m.rank());
    for x in 0..g.order() {
        let e = match m.side() {
            Side::Left => IdemSet::singleton(g.inv(x)),
            Side::Right => IdemSet::singleton(x),
        };
        let em = m.idempotent_matrix(e);
        for j in 0..m.rank() {
            let mut col = m.pi_sparse(x).column(j).clone();
            for (i, v) in em.column(j) {
                col.push((*i, r.neg(v)));
            }
            rel.push_column(col);
        }
    }
    rel
}

/// Relators `θ_g(m) − m` for `m` in a basis of each `M_{g⁻¹}`.
pub fn action_coinvariant_relators(a: &PartialActionModule) -> Result<SparseMatrix, Error> {
    let g = &a.group;
    let mut cols = Vec::new();
    for x in 0..g.order() {
        let d = a.images(x).sub(&a.domains[g.inv(x)])?;
        let s = SparseMatrix::from_dense(&d);
        cols.extend(s.columns().iter().cloned());
    }
    Ok(SparseMatrix::from_columns(a.ring, a.rank, cols))
}

/// Coinvariants of a partial representation.
pub fn coinvariants(m: &ParRepModule) -> Result<QuotientPresentation, Error> {
    sparse_quotient_presentation(&rep_coinvariant_relators(m))
}

/// Coinvariants of a partial action on a module.
pub fn action_coinvariants(a: &PartialActionModule) -> Result<QuotientPresentation, Error> {
    sparse_quotient_presentation(&action_coinvariant_relators(a)?)
}
