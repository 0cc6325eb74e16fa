mod report;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use parhom_core::exactalg::{kernel_basis, Ring, Scalar};
use parhom_core::glob::{construct_phi, globalize, globalize_action, verify_globalization, Globalization};
use parhom_core::homology::{
    compare_cohomology, compare_homology, partial_cohomology, partial_homology, shapiro_check, Comparison,
};
use parhom_core::parmod::{induced_partial_action, ParRepModule, PartialActionModule};
use parhom_core::parsemigroup::{enumerate_idempotents, enumerate_s, semigroup_order, sg_mul};
use parhom_core::Error;
use serde_json::Value;

use report::{matrix_value, Report};
use spec::{parse_spec, ModuleSpec, Overrides, ProblemSpec, SpecError};

/// Largest semigroup whose multiplication table is printed.
const MAX_TABLE: usize = 128;

#[derive(Parser, Debug)]
#[command(name = "parhom", version, about = "Partial group (co)homology with exact arithmetic")]
struct Cli {
    /// Problem file (TOML).
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    /// Highest degree reported.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Ground ring: Z, Q or GFp; overrides the file.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Emit a JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Subgroup as comma-separated element ids or names; overrides the file.
    #[arg(long, global = true)]
    subgroup: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate the problem file.
    Validate,
    /// Size of S(G) and B.
    Semigroup {
        /// List element ids and their names.
        #[arg(long)]
        names: bool,
        /// Print the multiplication table of S(G).
        #[arg(long)]
        table: bool,
    },
    /// Universal globalization of the module.
    Globalize,
    /// Partial homology of a left module.
    Homology,
    /// Partial cohomology of a right module.
    Cohomology,
    /// Partial against global (co)homology.
    Compare {
        #[arg(value_enum)]
        kind: CompareKind,
    },
    /// Homology over a subgroup against the induced global module.
    Shapiro,
    /// Construct and certify the splitting of N in KG ⊗ B.
    CertifyProjective,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CompareKind {
    Homology,
    Cohomology,
}

/// Failures mapped to exit codes.
#[derive(Debug)]
enum Failure {
    Input(String),
    Theorem(String),
    Guardrail(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Theorem(_) => 2,
            Failure::Guardrail(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Theorem(m) | Failure::Guardrail(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_guardrail() {
            Failure::Guardrail(e.to_string())
        } else if matches!(e, Error::TheoremViolation(_) | Error::ConstructionFailed(_)) {
            Failure::Theorem(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, outcome) = match run(&cli) {
        Ok((report, outcome)) => (Some(report), outcome),
        Err(f) => (None, Err(f)),
    };
    if let Some(r) = &report {
        if cli.json {
            println!("{}", r.to_json());
        } else {
            print!("{}", r.to_table());
        }
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

type Outcome = Result<(), Failure>;

fn run(cli: &Cli) -> Result<(Report, Outcome), Failure> {
    let path = cli.spec.as_ref().ok_or_else(|| Failure::Input("--spec PATH is required".into()))?;
    let over = Overrides { ring: cli.ring.clone(), subgroup: cli.subgroup.clone() };
    let p = parse_spec(path, &over)?;
    let n_max = cli.max_degree.or(p.max_degree).unwrap_or(3);
    let name = command_name(&cli.command);
    let mut r = Report::new(&name, p.group.order(), p.ring);
    let outcome = match &cli.command {
        Command::Validate => validate(&p, &mut r),
        Command::Semigroup { names, table } => semigroup(&p, &mut r, *names, *table)?,
        Command::Globalize => globalize_cmd(&p, &mut r)?,
        Command::Homology => {
            let m = rep(&p, "homology")?;
            r.rows_from("partial", &partial_homology(m, n_max)?);
            Ok(())
        }
        Command::Cohomology => {
            let m = rep(&p, "cohomology")?;
            r.rows_from("partial", &partial_cohomology(m, n_max)?);
            Ok(())
        }
        Command::Compare { kind } => {
            let m = rep(&p, "compare")?;
            let c = match kind {
                CompareKind::Homology => compare_homology(m, n_max)?,
                CompareKind::Cohomology => compare_cohomology(m, n_max)?,
            };
            comparison(&mut r, c)
        }
        Command::Shapiro => {
            let s = p.subgroup.as_ref().ok_or_else(|| Failure::Input("shapiro needs --subgroup".into()))?;
            let m = rep(&p, "shapiro")?;
            r.fact("subgroup_order", "subgroup order", s.as_group().order());
            r.fact("index", "index", s.index());
            comparison(&mut r, shapiro_check(&p.group, s, m, n_max)?)
        }
        Command::CertifyProjective => {
            let cert = construct_phi(&p.group, p.ring)?;
            r.fact("s_order", "|S(G)| =", cert.nd.s_basis.len());
            r.fact("kg_b_dim", "dim KG ⊗ B =", cert.nd.kgb_dim());
            r.fact("n_dim", "dim N =", cert.nd.n_dim());
            r.fact("elements", "elements x_n constructed:", cert.xs.len() - 1);
            r.fact("delta_phi_identity", "δφ = 1_N:", true);
            r.fact("phi_right_linear", "φ right linear:", true);
            Ok(())
        }
    };
    Ok((r, outcome))
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Validate => "validate".into(),
        Command::Semigroup { .. } => "semigroup".into(),
        Command::Globalize => "globalize".into(),
        Command::Homology => "homology".into(),
        Command::Cohomology => "cohomology".into(),
        Command::Compare { kind: CompareKind::Homology } => "compare homology".into(),
        Command::Compare { kind: CompareKind::Cohomology } => "compare cohomology".into(),
        Command::Shapiro => "shapiro".into(),
        Command::CertifyProjective => "certify-projective".into(),
    }
}

fn rep<'a>(p: &'a ProblemSpec, command: &str) -> Result<&'a ParRepModule, Failure> {
    match &p.module {
        Some(ModuleSpec::Rep(m)) => Ok(m),
        Some(ModuleSpec::Action(_)) => {
            Err(Failure::Input(format!("{} needs a partial representation, not a partial action", command)))
        }
        None => Err(Failure::Input(format!("{} needs a [module] section", command))),
    }
}

fn comparison(r: &mut Report, c: Comparison) -> Outcome {
    r.rows_from("partial", &c.partial);
    r.rows_from("global", &c.global);
    match c.ensure() {
        Ok(_) => Ok(()),
        Err(e) => {
            r.status = "mismatch".into();
            Err(e.into())
        }
    }
}

fn side_name(m: &ModuleSpec) -> &'static str {
    let side = match m {
        ModuleSpec::Rep(m) => m.side(),
        ModuleSpec::Action(a) => a.side(),
    };
    match side {
        parhom_core::parmod::Side::Left => "left",
        parhom_core::parmod::Side::Right => "right",
    }
}

fn validate(p: &ProblemSpec, r: &mut Report) -> Outcome {
    r.fact("group_order", "group order", p.group.order());
    if let Some(s) = &p.subgroup {
        r.fact("subgroup_order", "subgroup order", s.as_group().order());
    }
    match &p.module {
        None => r.fact("module", "module", "none"),
        Some(m) => {
            r.fact("side", "side", side_name(m));
            match m {
                ModuleSpec::Rep(m) => {
                    r.fact("kind", "module", "partial representation");
                    r.fact("rank", "rank", m.rank());
                    r.fact("global", "global", m.is_global());
                }
                ModuleSpec::Action(a) => {
                    r.fact("kind", "module", "partial action");
                    r.fact("rank", "rank", a.rank());
                }
            }
        }
    }
    r.fact("valid", "valid", true);
    Ok(())
}

fn semigroup(p: &ProblemSpec, r: &mut Report, names: bool, table: bool) -> Result<Outcome, Failure> {
    let g = &p.group;
    let n = g.order();
    r.fact("s_order", "|S(G)| =", semigroup_order(n));
    r.fact("b_dim", "dim B =", 1usize << (n - 1));
    if names {
        let list: Vec<Value> = (0..n).map(|x| Value::Array(vec![x.into(), g.name(x).into()])).collect();
        r.fact("names", "elements (id, name):", Value::Array(list));
    }
    if table {
        if semigroup_order(n) > MAX_TABLE {
            return Err(Failure::Guardrail(format!(
                "S(G) has {} elements; tables are printed up to {}",
                semigroup_order(n),
                MAX_TABLE
            )));
        }
        let s = enumerate_s(g)?;
        let elements: Vec<Value> = s.iter().map(|x| Value::String(x.display(g))).collect();
        let rows: Vec<Value> = s
            .iter()
            .map(|&x| {
                Value::Array(
                    s.iter().map(|&y| s.iter().position(|&z| z == sg_mul(g, x, y)).expect("closed").into()).collect(),
                )
            })
            .collect();
        r.fact("elements", "elements:", Value::Array(elements));
        r.fact("table", "multiplication table (indices into elements):", Value::Array(rows));
        debug_assert_eq!(enumerate_idempotents(g)?.len(), 1 << (n - 1));
    }
    Ok(Ok(()))
}

fn globalize_cmd(p: &ProblemSpec, r: &mut Report) -> Result<Outcome, Failure> {
    let (glob, action): (Globalization, PartialActionModule) = match &p.module {
        Some(ModuleSpec::Rep(m)) => (globalize(m)?, induced_partial_action(m)?),
        Some(ModuleSpec::Action(a)) => (globalize_action(a)?, a.clone()),
        None => return Err(Failure::Input("globalize needs a [module] section".into())),
    };
    let g = &p.group;
    let lambda = &glob.lambda;
    r.fact("lambda_rank", "rank Λ(M) =", lambda.rank());
    for x in 0..g.order() {
        r.fact(&format!("action[{}]", g.name(x)), &format!("action of {}:", g.name(x)), matrix_value(lambda.action(x)));
    }
    r.fact("iota", "iota:", matrix_value(&glob.iota));
    let kernel = kernel_basis(&glob.iota)?;
    r.fact("iota_kernel_rank", "iota kernel rank", kernel.cols());
    for j in 0..kernel.cols() {
        let v = normalize(p.ring, (0..kernel.rows()).map(|i| kernel.get(i, j).clone()).collect());
        r.fact(
            &format!("iota_kernel[{}]", j),
            "iota kernel vector",
            Value::Array(v.iter().map(|x| Value::String(p.ring.format(x))).collect()),
        );
    }
    let report = verify_globalization(&action, lambda, &glob.iota)?;
    r.fact("iota_injective", "iota injective:", report.iota_injective);
    r.fact("equivariant", "equivariant:", report.equivariant);
    r.fact(
        "domain_failures",
        "domain condition fails for:",
        Value::Array(report.domain_failures.iter().map(|s| Value::String(s.clone())).collect()),
    );
    r.fact("generates", "translates generate:", report.generates);
    if let Some(tau) = &glob.tau {
        let ti = tau.mul(&glob.iota)?;
        let ok = ti.is_identity();
        r.fact("tau_iota_identity", "tau iota = 1:", ok);
        if !ok || !report.passes() {
            r.status = "mismatch".into();
            return Ok(Err(Failure::Theorem(
                "the globalization of a partial representation failed verification".into(),
            )));
        }
    }
    Ok(Ok(()))
}

/// Fixes the scale of a kernel vector: over Z the saturated basis is already primitive and
/// only the sign is chosen, over a field the leading entry becomes 1.
fn normalize(ring: Ring, v: Vec<Scalar>) -> Vec<Scalar> {
    let Some(lead) = v.iter().find(|x| !ring.is_zero(x)).cloned() else {
        return v;
    };
    let by = match ring {
        Ring::Integers if lead.is_negative() => ring.neg(&ring.one()),
        Ring::Integers => ring.one(),
        _ => ring.inv(&lead),
    };
    v.iter().map(|x| ring.mul(x, &by)).collect()
}
