//! Problem files: a TOML description of a group, a ring and a module.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use parhom_core::exactalg::{ExactMatrix, Ring};
use parhom_core::group::{check_subgroup, FiniteGroup, GroupSpec, Subgroup};
use parhom_core::parmod::standard::{b_module, regular, restricted_translation, trivial, two_point};
use parhom_core::parmod::{
    linearize_set_action, validate_partial_action, validate_partial_rep, ParRepModule, PartialActionModule,
    SetPartialAction, Side,
};
use serde::Deserialize;
use toml::Value;

/// A problem file that failed to parse or validate, with the section it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub location: String,
    pub message: String,
}

impl SpecError {
    fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        SpecError { location: location.into(), message: message.into() }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for SpecError {}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    ring: Option<String>,
    group: RawGroup,
    module: Option<RawModule>,
    #[serde(default)]
    params: RawParams,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    kind: String,
    order: Option<usize>,
    n: Option<usize>,
    factors: Option<Vec<RawGroup>>,
    table: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    kind: String,
    side: Option<String>,
    pi: Option<BTreeMap<String, Vec<Vec<Value>>>>,
    points: Option<Vec<String>>,
    theta: Option<BTreeMap<String, Vec<String>>>,
    subset: Option<Vec<String>>,
    rank: Option<usize>,
    domains: Option<BTreeMap<String, Vec<Vec<Value>>>>,
    maps: Option<BTreeMap<String, Vec<Vec<Value>>>>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParams {
    max_degree: Option<usize>,
    subgroup: Option<String>,
}

/// The module of a problem: a partial representation or a partial action on a module.
#[derive(Debug, Clone)]
pub enum ModuleSpec {
    Rep(ParRepModule),
    Action(PartialActionModule),
}

/// A fully validated problem.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub group: FiniteGroup,
    pub ring: Ring,
    /// The group the module lives over: `group`, or the subgroup when one is given.
    pub subgroup: Option<Subgroup>,
    pub module: Option<ModuleSpec>,
    pub max_degree: Option<usize>,
}

/// Command-line values that override the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub ring: Option<String>,
    pub subgroup: Option<String>,
}

pub fn parse_ring(s: &str) -> Result<Ring, SpecError> {
    let t = s.trim();
    match t {
        "Z" | "ZZ" | "integers" => Ok(Ring::Integers),
        "Q" | "QQ" | "rationals" => Ok(Ring::Rationals),
        _ => {
            let digits = t.strip_prefix("GF").or_else(|| t.strip_prefix("F")).unwrap_or("");
            let digits = digits.trim_start_matches('(').trim_end_matches(')');
            let p: u64 =
                digits.parse().map_err(|_| SpecError::at("ring", format!("unknown ring {:?} (use Z, Q or GFp)", s)))?;
            Ring::prime_field(p).map_err(|e| SpecError::at("ring", e.to_string()))
        }
    }
}

fn build_group(g: &RawGroup, loc: &str) -> Result<GroupSpec, SpecError> {
    let need =
        |v: Option<usize>, key: &str| v.ok_or_else(|| SpecError::at(loc, format!("{} group needs `{}`", g.kind, key)));
    match g.kind.as_str() {
        "cyclic" => Ok(GroupSpec::Cyclic(need(g.order.or(g.n), "order")?)),
        "dihedral" => Ok(GroupSpec::Dihedral(need(g.n, "n")?)),
        "symmetric" => Ok(GroupSpec::Symmetric(need(g.n, "n")?)),
        "product" => {
            let fs = g.factors.as_ref().ok_or_else(|| SpecError::at(loc, "product group needs `factors`"))?;
            let parts = fs
                .iter()
                .enumerate()
                .map(|(i, f)| build_group(f, &format!("{}.factors[{}]", loc, i)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GroupSpec::Product(parts))
        }
        "table" => {
            Ok(GroupSpec::Table(g.table.clone().ok_or_else(|| SpecError::at(loc, "table group needs `table`"))?))
        }
        other => Err(SpecError::at(loc, format!("unknown group kind {:?}", other))),
    }
}

fn element(g: &FiniteGroup, name: &str, loc: &str) -> Result<usize, SpecError> {
    g.id_of(name).ok_or_else(|| {
        SpecError::at(loc, format!("unknown group element {:?}; elements are {}", name, g.names().join(", ")))
    })
}

fn scalar(ring: Ring, v: &Value, loc: &str) -> Result<parhom_core::exactalg::Scalar, SpecError> {
    let text = match v {
        Value::Integer(i) => i.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(SpecError::at(loc, format!("matrix entries must be integers or strings, got {}", other))),
    };
    ring.parse(&text).map_err(|e| SpecError::at(loc, e.to_string()))
}

fn matrix(ring: Ring, rows: &[Vec<Value>], cols_if_empty: usize, loc: &str) -> Result<ExactMatrix, SpecError> {
    let cols = rows.first().map_or(cols_if_empty, Vec::len);
    let mut m = ExactMatrix::zeros(ring, rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(SpecError::at(loc, format!("row {} has {} entries, expected {}", i, row.len(), cols)));
        }
        for (j, v) in row.iter().enumerate() {
            m.set(i, j, scalar(ring, v, &format!("{}[{}][{}]", loc, i, j))?);
        }
    }
    Ok(m)
}

/// One entry per group element, keyed by element name.
fn per_element<T: Clone>(
    g: &FiniteGroup,
    map: &BTreeMap<String, T>,
    what: &str,
    loc: &str,
) -> Result<Vec<T>, SpecError> {
    let mut out: Vec<Option<T>> = vec![None; g.order()];
    for (k, v) in map {
        let x = element(g, k, &format!("{}.{}", loc, k))?;
        out[x] = Some(v.clone());
    }
    let missing: Vec<&str> = (0..g.order()).filter(|&x| out[x].is_none()).map(|x| g.name(x)).collect();
    if !missing.is_empty() {
        return Err(SpecError::at(
            loc,
            format!("{} required for every group element; missing {}", what, missing.join(", ")),
        ));
    }
    Ok(out.into_iter().map(|v| v.expect("checked")).collect())
}

fn build_module(g: &FiniteGroup, ring: Ring, m: &RawModule) -> Result<ModuleSpec, SpecError> {
    let side = match m.side.as_deref().unwrap_or("left") {
        "left" => Side::Left,
        "right" => Side::Right,
        other => return Err(SpecError::at("module.side", format!("side must be left or right, got {:?}", other))),
    };
    let err = |e: parhom_core::Error| SpecError::at("module", e.to_string());
    let rep = match m.kind.as_str() {
        "trivial" => trivial(g, ring, side),
        "regular" => regular(g, ring, side).map_err(err)?,
        "B" | "b" => b_module(g, ring, side).map_err(err)?,
        "two_point" => two_point(g, ring),
        "restricted_translation" => {
            let subset =
                m.subset.as_ref().ok_or_else(|| SpecError::at("module", "restricted_translation needs `subset`"))?;
            let ids = subset.iter().map(|s| element(g, s, "module.subset")).collect::<Result<Vec<_>, _>>()?;
            restricted_translation(g, ring, &ids).map_err(err)?
        }
        "partial_rep" => {
            let pi = m.pi.as_ref().ok_or_else(|| SpecError::at("module.pi", "π required for every group element"))?;
            let rows = per_element(g, pi, "π", "module.pi")?;
            let mats = rows
                .iter()
                .enumerate()
                .map(|(x, r)| matrix(ring, r, 0, &format!("module.pi.{}", g.name(x))))
                .collect::<Result<Vec<_>, _>>()?;
            validate_partial_rep(g, side, &mats).map_err(|e| SpecError::at("module.pi", e.to_string()))?
        }
        "set_action" => {
            let points = m.points.clone().ok_or_else(|| SpecError::at("module", "set_action needs `points`"))?;
            let theta =
                m.theta.as_ref().ok_or_else(|| SpecError::at("module.theta", "θ required for every group element"))?;
            let rows = per_element(g, theta, "θ", "module.theta")?;
            let mut maps = Vec::with_capacity(g.order());
            for (x, row) in rows.iter().enumerate() {
                let loc = format!("module.theta.{}", g.name(x));
                if row.len() != points.len() {
                    return Err(SpecError::at(loc, format!("{} images given for {} points", row.len(), points.len())));
                }
                let images = row
                    .iter()
                    .map(|p| match p.as_str() {
                        "-" | "" => Ok(None),
                        name => points
                            .iter()
                            .position(|q| q == name)
                            .map(Some)
                            .ok_or_else(|| SpecError::at(&loc, format!("unknown point {:?}", name))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                maps.push(images);
            }
            let a = SetPartialAction::new(g, points, maps).map_err(|e| SpecError::at("module.theta", e.to_string()))?;
            linearize_set_action(&a, ring).map_err(err)?
        }
        "action" => {
            let rank = m.rank.ok_or_else(|| SpecError::at("module", "action needs `rank`"))?;
            let doms = m
                .domains
                .as_ref()
                .ok_or_else(|| SpecError::at("module.domains", "a domain is required for every group element"))?;
            let maps = m
                .maps
                .as_ref()
                .ok_or_else(|| SpecError::at("module.maps", "a map is required for every group element"))?;
            let doms = per_element(g, doms, "a domain", "module.domains")?;
            let maps = per_element(g, maps, "a map", "module.maps")?;
            // domains are listed as generator vectors; store them as columns
            let dmats = doms
                .iter()
                .enumerate()
                .map(|(x, d)| {
                    let loc = format!("module.domains.{}", g.name(x));
                    let m = matrix(ring, d, rank, &loc)?;
                    if m.cols() != rank {
                        return Err(SpecError::at(loc, format!("generators must have {} entries", rank)));
                    }
                    Ok(m.transpose())
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mmats = maps
                .iter()
                .enumerate()
                .map(|(x, r)| matrix(ring, r, dmats[g.inv(x)].cols(), &format!("module.maps.{}", g.name(x))))
                .collect::<Result<Vec<_>, _>>()?;
            let a = PartialActionModule::new(g, side, rank, dmats, mmats)
                .map_err(|e| SpecError::at("module", e.to_string()))?;
            let report = validate_partial_action(&a).map_err(err)?;
            if let Some(first) = report.violations.first() {
                let more = report.violations.len() - 1;
                let tail = if more > 0 { format!(" ({} more)", more) } else { String::new() };
                return Err(SpecError::at("module", format!("{}{}", first, tail)));
            }
            return Ok(ModuleSpec::Action(a));
        }
        other => return Err(SpecError::at("module.kind", format!("unknown module kind {:?}", other))),
    };
    if rep.side() != side {
        return Err(SpecError::at("module.side", format!("{} modules are left modules", m.kind)));
    }
    Ok(ModuleSpec::Rep(rep))
}

fn parse_subgroup(g: &FiniteGroup, s: &str) -> Result<Subgroup, SpecError> {
    let ids = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>().or_else(|_| element(g, t, "subgroup"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_subgroup(g, &ids).map_err(|e| SpecError::at("subgroup", e.to_string()))
}

/// Parses and validates problem text.
pub fn parse_str(text: &str, over: &Overrides) -> Result<ProblemSpec, SpecError> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| {
        let loc = match e.span() {
            Some(span) => format!("line {}", text[..span.start].lines().count().max(1)),
            None => "spec".to_string(),
        };
        SpecError::at(loc, e.message().to_string())
    })?;
    let ring_text = over.ring.clone().or(raw.ring.clone()).ok_or_else(|| SpecError::at("ring", "no ring given"))?;
    let ring = parse_ring(&ring_text)?;
    let gspec = build_group(&raw.group, "group")?;
    let group = FiniteGroup::new(&gspec).map_err(|e| SpecError::at("group", e.to_string()))?;
    let sub_text = over.subgroup.clone().or(raw.params.subgroup.clone());
    let subgroup = sub_text.map(|s| parse_subgroup(&group, &s)).transpose()?;
    let module_group = subgroup.as_ref().map_or(&group, |s| s.as_group());
    let module = raw.module.as_ref().map(|m| build_module(module_group, ring, m)).transpose()?;
    Ok(ProblemSpec { group, ring, subgroup, module, max_degree: raw.params.max_degree })
}

pub fn parse_spec(path: &Path, over: &Overrides) -> Result<ProblemSpec, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecError::at(path.display().to_string(), e.to_string()))?;
    parse_str(&text, over)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "ring = \"Z\"\n[group]\nkind = \"cyclic\"\norder = 2\n[module]\nkind = \"trivial\"\n";

    #[test]
    fn minimal_spec() {
        let p = parse_str(MINIMAL, &Overrides::default()).unwrap();
        assert_eq!(p.group.order(), 2);
        assert!(matches!(p.module, Some(ModuleSpec::Rep(ref m)) if m.rank() == 1));
    }

    #[test]
    fn pi_on_generator_only() {
        let text = "ring = \"Q\"\n[group]\nkind = \"cyclic\"\norder = 3\n[module]\nkind = \"partial_rep\"\n[module.pi]\ng = [[1]]\n";
        let e = parse_str(text, &Overrides::default()).unwrap_err();
        assert!(e.message.contains("π required for every group element"), "{}", e);
    }

    #[test]
    fn gf4_rejected() {
        let e = parse_str(MINIMAL, &Overrides { ring: Some("GF4".into()), ..Default::default() }).unwrap_err();
        assert!(e.message.contains("p must be prime"), "{}", e);
    }

    #[test]
    fn syntax_error_has_line() {
        let e = parse_str("ring = \"Z\"\n[group\n", &Overrides::default()).unwrap_err();
        assert!(e.location.starts_with("line"), "{}", e);
    }

    #[test]
    fn rationals_as_strings() {
        let text = "ring = \"Q\"\n[group]\nkind = \"cyclic\"\norder = 2\n[module]\nkind = \"partial_rep\"\n[module.pi]\n\"1\" = [[1, 0], [0, 1]]\ng = [[\"1/2\", \"1/2\"], [\"3/2\", \"-1/2\"]]\n";
        let p = parse_str(text, &Overrides::default()).unwrap();
        assert!(matches!(p.module, Some(ModuleSpec::Rep(_))));
    }
}
