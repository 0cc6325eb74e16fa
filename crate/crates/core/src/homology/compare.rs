use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::bar::{global_bar_complex, global_cochain_complex, partial_bar_complex, partial_cochain_complex};
use crate::error::Error;
use crate::exactalg::HomologySummary;
use crate::glob::{globalize, hom_intertwiners, induce_from_subgroup};
use crate::group::{FiniteGroup, Subgroup};
use crate::parmod::ParRepModule;

/// Degreewise summaries of the two sides of an isomorphism theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    /// `"homology"` or `"cohomology"`.
    pub kind: &'static str,
    pub partial: Vec<HomologySummary>,
    pub global: Vec<HomologySummary>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.partial == self.global
    }

    /// Degrees where the two sides differ.
    pub fn mismatches(&self) -> Vec<usize> {
        (0..self.partial.len().max(self.global.len())).filter(|&n| self.partial.get(n) != self.global.get(n)).collect()
    }

    /// `Err(TheoremViolation)` on any mismatch.
    pub fn ensure(self) -> Result<Self, Error> {
        if self.agrees() {
            return Ok(self);
        }
        let n = self.mismatches()[0];
        let show = |v: Option<&HomologySummary>| v.map(|h| format!("{}", h)).unwrap_or_else(|| String::from("-"));
        Err(Error::TheoremViolation(format!(
            "{} differs in degree {}: partial {} vs global {}",
            self.kind,
            n,
            show(self.partial.get(n)),
            show(self.global.get(n))
        )))
    }
}

/// `H_n^par(G, M)` for `n ≤ n_max`.
pub fn partial_homology(m: &ParRepModule, n_max: usize) -> Result<Vec<HomologySummary>, Error> {
    partial_bar_complex(m, n_max)?.homology()
}

/// `H^n_par(G, M)` for `n ≤ n_max`.
pub fn partial_cohomology(m: &ParRepModule, n_max: usize) -> Result<Vec<HomologySummary>, Error> {
    partial_cochain_complex(m, n_max)?.cohomology()
}

/// `H_•^par(G, M)` against `H_•(G, Λ(M))`.
pub fn compare_homology(m: &ParRepModule, n_max: usize) -> Result<Comparison, Error> {
    let partial = partial_homology(m, n_max)?;
    let lambda = globalize(m)?.lambda;
    let global = global_bar_complex(&lambda, n_max)?.homology()?;
    Ok(Comparison { kind: "homology", partial, global })
}

/// `H^•_par(G, M)` against `H^•(G, Hom_{K_par G}(Λ(K_par G), M))` for a right module.
pub fn compare_cohomology(m: &ParRepModule, n_max: usize) -> Result<Comparison, Error> {
    let partial = partial_cohomology(m, n_max)?;
    let hom = hom_intertwiners(m)?.as_global()?;
    let global = global_cochain_complex(&hom, n_max)?.cohomology()?;
    Ok(Comparison { kind: "cohomology", partial, global })
}

/// `H_•^par(S, M)` against `H_•(G, KG ⊗_{S_par} M)`.
pub fn shapiro_check(g: &FiniteGroup, s: &Subgroup, m: &ParRepModule, n_max: usize) -> Result<Comparison, Error> {
    let partial = partial_homology(m, n_max)?;
    let induced = induce_from_subgroup(g, s, m)?.lambda;
    let global = global_bar_complex(&induced, n_max)?.homology()?;
    Ok(Comparison { kind: "homology", partial, global })
}
