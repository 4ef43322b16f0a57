//! The `biset-kit` command line.

mod spec;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use spec::GroupRegistry;

use crate::bisets::{compose, mackey_compose, BisetElement, BisetJson};
use crate::burnside::{idempotents, table_of_marks, BurnsideElement, TermJson};
use crate::center::{commutant_report, commutant_subspace, is_center_element, iota, CenterCandidate, GroupFamily};
use crate::decomp::{decompose, IdempotentFamily};
use crate::error::{Error, Result};
use crate::green::{instance, pa_compose, DynGreen, GreenFunctor, Module, PAMorphism};
use crate::groups::{subgroup_lattice, Caps, FiniteGroup};
use crate::rational::format_q;
use crate::verify::{run, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "biset-kit", version, about = "Exact biset algebra for small finite groups")]
pub struct Cli {
    /// Comma-separated group family standing in for the class of all groups.
    #[arg(long, global = true, default_value = "1,C2,C3,V4")]
    pub family: String,
    /// Largest ambient group order any operation may build.
    #[arg(long, global = true, default_value_t = Caps::default().ambient)]
    pub cap_ambient: usize,
    /// Largest group whose subgroup lattice may be enumerated.
    #[arg(long, global = true, default_value_t = Caps::default().lattice)]
    pub cap_lattice: usize,
    /// Largest permutation group closure.
    #[arg(long, global = true, default_value_t = Caps::default().closure)]
    pub cap_closure: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect groups.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Table of marks.
    Marks { group: String },
    /// Primitive idempotents of the rational Burnside ring.
    Idempotents { group: String },
    /// Compose two biset elements read from a JSON spec `{"beta": .., "alpha": ..}`.
    Compose {
        spec: String,
        #[arg(long, value_enum, default_value_t = Engine::Both)]
        engine: Engine,
    },
    /// Compose two A-morphisms read from a JSON spec `{"beta": .., "alpha": ..}`.
    PaCompose {
        #[arg(long, default_value = "burnside")]
        functor: String,
        spec: String,
    },
    /// Commutant of A(G) relative to the family.
    Commutant {
        #[arg(long, default_value = "burnside")]
        functor: String,
        group: String,
    },
    /// Naturality check of a center candidate read from a JSON file.
    CenterCheck { candidate: String },
    /// Block decomposition of the regular module by the Burnside idempotents of A(1).
    Decompose {
        #[arg(long, default_value = "burnside")]
        functor: String,
        /// Comma-separated evaluation groups.
        #[arg(long)]
        groups: String,
    },
    /// Run a verification suite (`all` for every suite).
    Verify {
        suite: String,
        /// Random elements per sampled check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupAction {
    Show { group: String },
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Set,
    Mackey,
    Both,
}

/// Outcome of a command: the document to print and whether every check passed.
pub struct Outcome {
    pub json: Value,
    pub table: String,
    pub pass: bool,
}

impl Outcome {
    fn data(json: Value, table: String) -> Self {
        Outcome { json, table, pass: true }
    }
}

pub struct Context {
    pub caps: Caps,
    pub registry: GroupRegistry,
    pub family: GroupFamily,
    pub seed: u64,
}

impl Context {
    pub fn new(cli: &Cli) -> Result<Self> {
        let caps = Caps {
            ambient: cli.cap_ambient,
            lattice: cli.cap_lattice,
            closure: cli.cap_closure,
        };
        if caps.ambient == 0 || caps.lattice == 0 || caps.closure == 0 {
            return Err(Error::Invalid("caps must be positive".into()));
        }
        let registry = GroupRegistry::from_env(&caps)?;
        let groups = registry.resolve_list(&cli.family)?;
        let family = GroupFamily::new(groups, caps)?;
        Ok(Context {
            caps,
            registry,
            family,
            seed: cli.seed,
        })
    }

    fn group(&self, name: &str) -> Result<FiniteGroup> {
        self.registry.resolve(name)
    }

    fn functor(&self, name: &str) -> Result<DynGreen> {
        instance(name, self.caps, &|g| self.registry.resolve(g).ok())
    }
}

impl GroupRegistry {
    pub fn resolve_list(&self, list: &str) -> Result<Vec<FiniteGroup>> {
        let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        if names.is_empty() {
            return Err(Error::Invalid("empty group list".into()));
        }
        names.into_iter().map(|n| self.resolve(n)).collect()
    }
}

pub fn exit_code(err: &Error) -> i32 {
    if err.is_cap() {
        3
    } else if matches!(err, Error::NotInCommutant | Error::FamilyInvalid(_)) {
        1
    } else {
        2
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match Context::new(&cli).and_then(|ctx| execute(&ctx, &cli.command)) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable output"),
                Format::Table => out.table.trim_end().to_string(),
            };
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{text}");
            if out.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn execute(ctx: &Context, cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Group { action } => cmd_group(ctx, action),
        Command::Marks { group } => cmd_marks(ctx, group),
        Command::Idempotents { group } => cmd_idempotents(ctx, group),
        Command::Compose { spec, engine } => cmd_compose(ctx, spec, *engine),
        Command::PaCompose { functor, spec } => cmd_pa_compose(ctx, functor, spec),
        Command::Commutant { functor, group } => cmd_commutant(ctx, functor, group),
        Command::CenterCheck { candidate } => cmd_center_check(ctx, candidate),
        Command::Decompose { functor, groups } => cmd_decompose(ctx, functor, groups),
        Command::Verify { suite, samples } => cmd_verify(ctx, suite, *samples),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))
}

fn group_json(g: &FiniteGroup, caps: &Caps) -> Result<Value> {
    let lat = subgroup_lattice(g, caps)?;
    let classes: Vec<Value> = lat
        .classes()
        .iter()
        .map(|c| {
            json!({
                "order": c.representative.order(),
                "size": c.members.len(),
                "representative": c.representative.members(),
            })
        })
        .collect();
    Ok(json!({
        "name": g.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "element_orders": g.order_census(),
        "provenance": g.provenance(),
        "subgroups": lat.subgroups().len(),
        "classes": classes,
    }))
}

fn cmd_group(ctx: &Context, action: &GroupAction) -> Result<Outcome> {
    match action {
        GroupAction::Show { group } => {
            let g = ctx.group(group)?;
            let j = group_json(&g, &ctx.caps)?;
            let mut t = format!(
                "{} (order {}, {})\nsubgroups: {}\n",
                g.name(),
                g.order(),
                if g.is_abelian() { "abelian" } else { "non-abelian" },
                j["subgroups"]
            );
            for c in j["classes"].as_array().into_iter().flatten() {
                t += &format!("  class of order {} with {} member(s): {}\n", c["order"], c["size"], c["representative"]);
            }
            Ok(Outcome::data(j, t))
        }
        GroupAction::List => {
            let mut names: Vec<Value> = ["1", "C n", "S n (n <= 5)", "V4"].iter().map(|n| json!({"name": n, "builtin": true})).collect();
            for (n, g) in ctx.registry.entries() {
                names.push(json!({"name": n, "builtin": false, "order": g.order()}));
            }
            let t = names
                .iter()
                .map(|n| n["name"].as_str().unwrap_or_default().to_string())
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::data(Value::Array(names), t))
        }
    }
}

fn cmd_marks(ctx: &Context, group: &str) -> Result<Outcome> {
    let g = ctx.group(group)?;
    let lat = subgroup_lattice(&g, &ctx.caps)?;
    let table = table_of_marks(&g, &ctx.caps)?;
    let rows: Vec<Vec<String>> = table.iter().map(|r| r.iter().map(format_q).collect()).collect();
    let classes: Vec<&[u32]> = lat.classes().iter().map(|c| c.representative.members()).collect();
    let t = rows.iter().map(|r| r.join("\t")).collect::<Vec<_>>().join("\n");
    Ok(Outcome::data(
        json!({"group": g.name(), "classes": classes, "marks": rows}),
        t,
    ))
}

fn cmd_idempotents(ctx: &Context, group: &str) -> Result<Outcome> {
    let g = ctx.group(group)?;
    let mut out = Vec::new();
    let mut t = String::new();
    for (k, e) in idempotents(&g, &ctx.caps)? {
        t += &format!("{:?}\t{e}\n", k.members());
        out.push(json!({"class": k.members(), "element": e.to_json()}));
    }
    Ok(Outcome::data(Value::Array(out), t))
}

#[derive(Deserialize)]
struct ComposeSpec {
    beta: BisetJson,
    alpha: BisetJson,
}

fn biset_from(ctx: &Context, j: &BisetJson) -> Result<BisetElement> {
    BisetElement::from_json(&ctx.group(&j.left)?, &ctx.group(&j.right)?, j)
}

fn cmd_compose(ctx: &Context, path: &str, engine: Engine) -> Result<Outcome> {
    let spec: ComposeSpec = read_json(path)?;
    let beta = biset_from(ctx, &spec.beta)?;
    let alpha = biset_from(ctx, &spec.alpha)?;
    let (result, pass) = match engine {
        Engine::Set => (compose(&beta, &alpha, &ctx.caps)?, true),
        Engine::Mackey => (mackey_compose(&beta, &alpha, &ctx.caps)?, true),
        Engine::Both => {
            let r = compose(&beta, &alpha, &ctx.caps)?;
            let agree = r == mackey_compose(&beta, &alpha, &ctx.caps)?;
            (r, agree)
        }
    };
    let mut j = json!({"result": result.to_json()});
    if engine == Engine::Both {
        j["engines_agree"] = json!(pass);
    }
    Ok(Outcome {
        table: format!("{result:?}"),
        json: j,
        pass,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: String,
    pub target: String,
    pub terms: Vec<TermJson>,
}

#[derive(Deserialize)]
struct PaSpec {
    beta: MorphismJson,
    alpha: MorphismJson,
}

fn morphism_from(ctx: &Context, a: &dyn GreenFunctor, j: &MorphismJson) -> Result<PAMorphism> {
    let (s, t) = (ctx.group(&j.source)?, ctx.group(&j.target)?);
    let carrier = a.carrier(&FiniteGroup::product_of(&[t.clone(), s.clone()]));
    let value = BurnsideElement::from_json(
        &carrier,
        &crate::burnside::BurnsideJson {
            group: carrier.name().to_string(),
            terms: j.terms.clone(),
        },
    )?;
    PAMorphism::new(a, &s, &t, value)
}

fn cmd_pa_compose(ctx: &Context, functor: &str, path: &str) -> Result<Outcome> {
    let a = ctx.functor(functor)?;
    let spec: PaSpec = read_json(path)?;
    let beta = morphism_from(ctx, &*a, &spec.beta)?;
    let alpha = morphism_from(ctx, &*a, &spec.alpha)?;
    let r = pa_compose(&*a, &beta, &alpha)?;
    let j = MorphismJson {
        source: r.source.name().to_string(),
        target: r.target.name().to_string(),
        terms: r.value.to_json().terms,
    };
    Ok(Outcome::data(
        serde_json::to_value(j).expect("serializable"),
        format!("{} -> {}: {}", r.source, r.target, r.value),
    ))
}

fn cmd_commutant(ctx: &Context, functor: &str, group: &str) -> Result<Outcome> {
    let a = ctx.functor(functor)?;
    let g = ctx.group(group)?;
    let basis = a.basis(&g)?;
    let sub = commutant_subspace(&*a, &g, &ctx.family)?;
    let reports = basis
        .iter()
        .map(|x| commutant_report(&*a, &g, x, &ctx.family))
        .collect::<Result<Vec<_>>>()?;
    let t = format!(
        "{}({}): commutant dimension {} of {}\n{}",
        a.name(),
        g,
        sub.len(),
        basis.len(),
        reports
            .iter()
            .map(|r| format!("  {}: {}", r.subject, if r.verdict { "commutes" } else { "does not commute" }))
            .collect::<Vec<_>>()
            .join("\n")
    );
    Ok(Outcome::data(
        json!({
            "functor": a.name(),
            "group": g.name(),
            "family": ctx.family.names(),
            "dimension": sub.len(),
            "full_dimension": basis.len(),
            "basis": sub.iter().map(|b| b.to_json()).collect::<Vec<_>>(),
            "reports": reports,
        }),
        t,
    ))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentJson {
    pub group: String,
    pub terms: Vec<TermJson>,
}

/// Either explicit components `t_G` or an element of `A(K)` to push through iota.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CandidateJson {
    #[serde(default = "default_functor")]
    pub functor: String,
    #[serde(default)]
    pub shift: Option<String>,
    #[serde(default)]
    pub components: Vec<ComponentJson>,
    #[serde(default)]
    pub iota: Option<ComponentJson>,
}

fn default_functor() -> String {
    "burnside".into()
}

fn value_in(a: &dyn GreenFunctor, group: &FiniteGroup, terms: &[TermJson]) -> Result<BurnsideElement> {
    let carrier = a.carrier(group);
    BurnsideElement::from_json(
        &carrier,
        &crate::burnside::BurnsideJson {
            group: carrier.name().to_string(),
            terms: terms.to_vec(),
        },
    )
}

fn cmd_center_check(ctx: &Context, path: &str) -> Result<Outcome> {
    let spec: CandidateJson = read_json(path)?;
    let a = ctx.functor(&spec.functor)?;
    let cand = match (&spec.iota, &spec.shift) {
        (Some(x), _) => {
            let k = ctx.group(&x.group)?;
            iota(&*a, &k, &value_in(&*a, &k, &x.terms)?, &ctx.family)?
        }
        (None, Some(l)) => {
            let l = ctx.group(l)?;
            let mut components = Vec::new();
            for g in ctx.family.groups() {
                let c = spec
                    .components
                    .iter()
                    .find(|c| ctx.group(&c.group).map(|h| h == *g).unwrap_or(false))
                    .ok_or_else(|| Error::Invalid(format!("candidate has no component at {g}")))?;
                let glg = FiniteGroup::product_of(&[g.clone(), l.clone(), g.clone()]);
                components.push((g.clone(), value_in(&*a, &glg, &c.terms)?));
            }
            CenterCandidate { shift: l, components }
        }
        (None, None) => return Err(Error::Invalid("candidate needs `iota` or `shift` with `components`".into())),
    };
    let report = is_center_element(&*a, &cand, &ctx.family)?;
    let failed = report.checks.iter().filter(|c| !c.ok).count();
    let t = format!(
        "{}: {} of {} checks failed, verdict {}",
        report.subject,
        failed,
        report.checks.len(),
        if report.verdict { "natural" } else { "not natural" }
    );
    Ok(Outcome {
        pass: report.verdict,
        json: serde_json::to_value(&report).expect("serializable"),
        table: t,
    })
}

fn cmd_decompose(ctx: &Context, functor: &str, groups: &str) -> Result<Outcome> {
    let a = ctx.functor(functor)?;
    let groups = ctx.registry.resolve_list(groups)?;
    let h = a.carrier(&FiniteGroup::trivial());
    let fam = IdempotentFamily::burnside(a.clone(), &h, &ctx.caps)?;
    let module = Module::regular(&*a);
    let report = decompose(&module, &fam, &groups)?;
    let mut t = String::new();
    for g in &report.groups {
        let dims: Vec<String> = g.blocks.iter().map(|b| b.dim.to_string()).collect();
        t += &format!(
            "{}: dim {} = {} (sum {}, independent {})\n",
            g.group,
            g.dim,
            dims.join(" + "),
            g.sum_ok,
            g.independent_ok
        );
    }
    Ok(Outcome {
        pass: report.verdict,
        json: serde_json::to_value(&report).expect("serializable"),
        table: t,
    })
}

fn cmd_verify(ctx: &Context, suite: &str, samples: usize) -> Result<Outcome> {
    let cfg = VerifyConfig {
        family: ctx.family.clone(),
        seed: ctx.seed,
        samples,
    };
    let reports = run(suite, &cfg)?;
    let mut t = String::new();
    for r in &reports {
        for c in &r.checks {
            t += &format!(
                "{} {:<12} {} ({} cases{}){}\n",
                if c.ok { "PASS" } else { "FAIL" },
                r.suite,
                c.name,
                c.cases,
                if c.skipped > 0 { format!(", {} skipped by caps", c.skipped) } else { String::new() },
                c.first_failure.as_ref().map(|f| format!(": {f}")).unwrap_or_default()
            );
        }
    }
    Ok(Outcome {
        pass: reports.iter().all(|r| r.verdict),
        json: serde_json::to_value(&reports).expect("serializable"),
        table: t,
    })
}
