//! The subcommands, each turning parsed options into a report.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Map, Value};
use thiserror::Error;

use irrtop_core::embed::{EmbeddingWitness, ProductFamily};
use irrtop_core::ideal::ideal_product;
use irrtop_core::topology::{
    self, weyl_model, Cardinality, ClosedSetFamily, Difference, SymbolicSpace,
};
use irrtop_core::{
    annihilator_chain_embedding, composition_factors, enumerate_irr, find_embedding,
    ideal_generated, jacobson_radical, kappa_finite, staged_basis_embedding, sufficiency_check,
    t_cofinite_check, Algebra, ChainOutcome, EmbeddingSearch, Ideal, IrrSpace, ModuleRep,
    PointSet, Sidedness, StagedOutcome, Violation,
};

use crate::doc::{self, Diagnostic, Diagnostics, InputDoc, SourceMap};
use crate::report;
use crate::selftest;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Irr,
    Radical,
    Vset,
    Zlattice,
    RefinedClosure,
    PointClosure,
    Compare,
    VerifyThm27,
    Embed,
    Construct31,
    Construct43,
    Kappa,
    Sufficiency,
    WeylModel,
    Selftest,
}

impl Command {
    pub const ALL: [Command; 16] = [
        Command::Validate,
        Command::Irr,
        Command::Radical,
        Command::Vset,
        Command::Zlattice,
        Command::RefinedClosure,
        Command::PointClosure,
        Command::Compare,
        Command::VerifyThm27,
        Command::Embed,
        Command::Construct31,
        Command::Construct43,
        Command::Kappa,
        Command::Sufficiency,
        Command::WeylModel,
        Command::Selftest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Irr => "irr",
            Command::Radical => "radical",
            Command::Vset => "vset",
            Command::Zlattice => "zlattice",
            Command::RefinedClosure => "refined-closure",
            Command::PointClosure => "point-closure",
            Command::Compare => "compare",
            Command::VerifyThm27 => "verify-thm27",
            Command::Embed => "embed",
            Command::Construct31 => "construct31",
            Command::Construct43 => "construct43",
            Command::Kappa => "kappa",
            Command::Sufficiency => "sufficiency",
            Command::WeylModel => "weyl-model",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub seed: u64,
    pub input: Option<PathBuf>,
    pub set: Option<String>,
    pub ideal: Option<String>,
    pub t: Option<usize>,
    pub budget: Option<usize>,
    pub points: Option<usize>,
    pub basis_order: Option<String>,
    pub timing: bool,
    /// Standard input, for commands that read a report from it.
    pub stdin: Option<Vec<u8>>,
}

pub const DEFAULT_BUDGET: usize = 256;
pub const DEFAULT_WEYL_POINTS: usize = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(Diagnostics),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
        }
    }
}

impl From<Diagnostics> for CliError {
    fn from(d: Diagnostics) -> Self {
        CliError::Parse(d)
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

/// A finished report with its exit status; a nonzero status still comes
/// with a complete report when the command checks something that failed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Value,
    pub exit: i32,
}

struct Loaded {
    doc: InputDoc,
    map: SourceMap,
    dir: Option<PathBuf>,
    canonical: String,
}

fn load(opts: &Options) -> Result<Loaded, CliError> {
    let path = opts
        .input
        .as_ref()
        .ok_or_else(|| CliError::Usage("this command needs --in FILE".into()))?;
    let bytes = std::fs::read(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let (doc, map) = doc::parse_input_bytes(&bytes)?;
    let canonical = doc::serialize_input(&doc);
    Ok(Loaded {
        doc,
        map,
        dir: path.parent().map(Path::to_path_buf),
        canonical,
    })
}

fn algebra_of(l: &Loaded, seed: u64) -> Result<Algebra, CliError> {
    match &l.doc {
        InputDoc::Algebra(a) => Ok(doc::resolve_algebra(a, &l.map)?),
        InputDoc::Family(f) => Ok(doc::resolve_family(f, &l.map, l.dir.as_deref(), seed)?
            .algebra()
            .clone()),
    }
}

fn family_of(l: &Loaded, seed: u64) -> Result<ProductFamily, CliError> {
    match &l.doc {
        InputDoc::Family(f) => Ok(doc::resolve_family(f, &l.map, l.dir.as_deref(), seed)?),
        InputDoc::Algebra(_) => Err(CliError::Usage("this command needs a family document".into())),
    }
}

fn flag_error(flag: &str, d: Diagnostic) -> CliError {
    CliError::Usage(format!("--{flag}: column {}: {}", d.column, d.message))
}

/// `0,2`, `p0 p2` and `{p0,p2}` all name points 0 and 2.
pub fn parse_point_set(text: &str, limit: usize) -> Result<PointSet, CliError> {
    let mut s = PointSet::EMPTY;
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    for tok in inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let digits = tok.strip_prefix('p').unwrap_or(tok);
        let id: usize = digits
            .parse()
            .map_err(|_| CliError::Usage(format!("--set: `{tok}` is not a point")))?;
        if id >= limit {
            return Err(CliError::Usage(format!("--set: point {id} does not exist ({limit} points)")));
        }
        s.insert(id);
    }
    Ok(s)
}

fn parse_ideal(text: &str, a: &Algebra) -> Result<Ideal, CliError> {
    let elems = doc::parse_elements(text, 1, 1).map_err(|d| flag_error("ideal", d))?;
    let coords = elems
        .iter()
        .map(|e| doc::element_coords(a, e))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|m| CliError::Usage(format!("--ideal: {m}")))?;
    Ok(ideal_generated(a, &coords, Sidedness::TwoSided))
}

fn target_ideal(opts: &Options, a: &Algebra) -> Result<Ideal, CliError> {
    match &opts.ideal {
        Some(t) => parse_ideal(t, a),
        None => Ok(Ideal::zero(a)),
    }
}

fn parse_order(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("--basis-order: `{t}` is not an index")))
        })
        .collect()
}

fn irr_space(a: &Algebra, seed: u64) -> Result<IrrSpace, CliError> {
    enumerate_irr(a, seed).map_err(domain)
}

fn args_of(opts: &Options) -> Map<String, Value> {
    let mut m = Map::new();
    if let Some(s) = &opts.set {
        m.insert("set".into(), json!(s));
    }
    if let Some(s) = &opts.ideal {
        m.insert("ideal".into(), json!(s));
    }
    if let Some(t) = opts.t {
        m.insert("t".into(), json!(t));
    }
    if let Some(b) = opts.budget {
        m.insert("budget".into(), json!(b));
    }
    if let Some(n) = opts.points {
        m.insert("points".into(), json!(n));
    }
    if let Some(o) = &opts.basis_order {
        m.insert("basis_order".into(), json!(o));
    }
    m
}

/// Options that mean something to `cmd`, besides `--seed` and `--timing`.
fn accepted(cmd: Command) -> &'static [&'static str] {
    match cmd {
        Command::WeylModel => &["points"],
        Command::Selftest => &[],
        Command::RefinedClosure | Command::VerifyThm27 => &["in", "set"],
        Command::Vset => &["in", "ideal"],
        Command::Embed => &["in", "ideal", "t", "budget"],
        Command::Construct31 => &["in", "ideal", "basis-order"],
        _ => &["in"],
    }
}

fn check_applicable(cmd: Command, opts: &Options) -> Result<(), CliError> {
    let given = [
        ("in", opts.input.is_some()),
        ("set", opts.set.is_some()),
        ("ideal", opts.ideal.is_some()),
        ("t", opts.t.is_some()),
        ("budget", opts.budget.is_some()),
        ("points", opts.points.is_some()),
        ("basis-order", opts.basis_order.is_some()),
    ];
    match given.iter().find(|(name, set)| *set && !accepted(cmd).contains(name)) {
        Some((name, _)) => Err(CliError::Usage(format!("--{name} does not apply to {}", cmd.name()))),
        None => Ok(()),
    }
}

pub fn run(cmd: Command, opts: &Options) -> Result<Outcome, CliError> {
    check_applicable(cmd, opts)?;
    let start = Instant::now();
    let (input, result, exit) = match cmd {
        Command::WeylModel => {
            let n = opts.points.unwrap_or(DEFAULT_WEYL_POINTS);
            if n > topology::MAX_NAMED_POINTS {
                return Err(CliError::Usage(format!(
                    "--points: at most {} named points",
                    topology::MAX_NAMED_POINTS
                )));
            }
            (None, json!({ "space": report::symbolic_space(&weyl_model(n)) }), 0)
        }
        Command::PointClosure => point_closure(opts)?,
        Command::Selftest => {
            let r = selftest::run(opts.seed);
            let exit = if r.passed() { 0 } else { 1 };
            (None, r.to_json(), exit)
        }
        _ => {
            let l = load(opts)?;
            let (result, exit) = run_on_input(cmd, opts, &l)?;
            (Some(l.canonical.clone()), result, exit)
        }
    };
    let mut report = report::envelope(cmd.name(), opts.seed, input, args_of(opts), result);
    if opts.timing {
        report["timing"] = json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 });
    }
    Ok(Outcome { report, exit })
}

fn run_on_input(cmd: Command, opts: &Options, l: &Loaded) -> Result<(Value, i32), CliError> {
    let seed = opts.seed;
    Ok(match cmd {
        Command::Validate => return validate(l, seed),
        Command::Irr => {
            let a = algebra_of(l, seed)?;
            let space = irr_space(&a, seed)?;
            let pts: Vec<Value> = space
                .points()
                .iter()
                .map(|p| {
                    json!({
                        "id": p.id,
                        "dim": p.rep.dim(),
                        "multiplicity": p.multiplicity,
                        "annihilator": report::ideal(&p.ann),
                        "action": p.rep.action().iter().map(report::matrix).collect::<Vec<_>>(),
                    })
                })
                .collect();
            (json!({ "count": space.len(), "points": pts }), 0)
        }
        Command::Radical => {
            let a = algebra_of(l, seed)?;
            let j = jacobson_radical(&a, seed).map_err(domain)?;
            let mut power = j.clone();
            let mut index = 1;
            while !power.is_zero() {
                power = Ideal {
                    space: ideal_product(&a, &power, &j),
                    sided: Sidedness::TwoSided,
                };
                index += 1;
            }
            (
                json!({
                    "radical": report::ideal(&j),
                    "semiprimitive": j.is_zero(),
                    "nilpotency_index": index,
                }),
                0,
            )
        }
        Command::Vset => {
            let a = algebra_of(l, seed)?;
            let text = opts
                .ideal
                .as_deref()
                .ok_or_else(|| CliError::Usage("vset needs --ideal".into()))?;
            let i = parse_ideal(text, &a)?;
            let space = irr_space(&a, seed)?;
            let z = space.v_of(&i).map_err(domain)?;
            (
                json!({
                    "ideal": report::ideal(&i),
                    "points": report::points(z.points),
                    "core": report::ideal(&z.ideal),
                    "semiprimitive": z.ideal.same_space(&i),
                }),
                0,
            )
        }
        Command::Zlattice => {
            let a = algebra_of(l, seed)?;
            let space = irr_space(&a, seed)?;
            let fam = space.zariski_closed_family().map_err(domain)?;
            let closed: Vec<Value> = fam
                .iter()
                .map(|z| json!({ "points": report::points(z.points), "ideal": report::ideal(&z.ideal) }))
                .collect();
            (json!({ "points": space.len(), "count": closed.len(), "closed": closed }), 0)
        }
        Command::RefinedClosure => {
            let a = algebra_of(l, seed)?;
            let space = irr_space(&a, seed)?;
            let text = opts
                .set
                .as_deref()
                .ok_or_else(|| CliError::Usage("refined-closure needs --set".into()))?;
            let x = parse_point_set(text, space.len())?;
            let c = space.refined_closure(x, seed).map_err(domain)?;
            (
                json!({ "set": report::points(x), "closure": report::points(c), "closed": c == x }),
                0,
            )
        }
        Command::Compare => {
            let a = algebra_of(l, seed)?;
            let space = irr_space(&a, seed)?;
            let c = space.compare(seed).map_err(domain)?;
            let count = |v: &[PointSet]| format!("{} closed sets", v.len());
            let summary = if c.coincide {
                let kind = if c.discrete { " = discrete" } else { "" };
                format!("zariski = refined = point-closure{kind} ({})", count(&c.zariski))
            } else {
                format!(
                    "topologies differ: zariski {}, refined {}, point-closure {}",
                    count(&c.zariski),
                    count(&c.refined),
                    count(&c.point_closure)
                )
            };
            (
                json!({
                    "summary": summary,
                    "points": space.len(),
                    "zariski": report::point_sets(&c.zariski),
                    "point_closure": report::point_sets(&c.point_closure),
                    "refined": report::point_sets(&c.refined),
                    "coincide": c.coincide,
                    "discrete": c.discrete,
                }),
                0,
            )
        }
        Command::VerifyThm27 => {
            let a = algebra_of(l, seed)?;
            let space = irr_space(&a, seed)?;
            let sets = match &opts.set {
                Some(t) => vec![parse_point_set(t, space.len())?],
                None => space.refined_closed_sets(seed).map_err(domain)?,
            };
            let mut rows = Vec::new();
            let mut all_hold = true;
            for x in sets {
                let r = space.verify_theorem_form(x, seed).map_err(domain)?;
                let holds = !r.refined_closed || (r.decomposition.is_some() && r.ideal_semiprimitive);
                all_hold &= holds;
                let mut row = json!({
                    "set": report::points(r.x),
                    "refined_closed": r.refined_closed,
                    "ideal_semiprimitive": r.ideal_semiprimitive,
                    "counterexample": r.counterexample,
                    "holds": holds,
                });
                if let Some(d) = &r.decomposition {
                    row["ideal"] = report::ideal(&d.ideal);
                    row["zariski_part"] = report::points(d.v);
                    row["finite_part"] = report::points(d.f);
                }
                rows.push(row);
            }
            (json!({ "sets": rows, "all_hold": all_hold }), 0)
        }
        Command::Embed => {
            let fam = family_of(l, seed)?;
            let i = target_ideal(opts, fam.algebra())?;
            let budget = opts.budget.unwrap_or(DEFAULT_BUDGET);
            let search = find_embedding(&fam, &i, seed, budget).map_err(domain)?;
            let mut out = match search {
                EmbeddingSearch::Found(w) => json!({ "status": "found", "witness": witness(&fam, &w) }),
                EmbeddingSearch::NoneExists { scanned } => json!({ "status": "none-exists", "scanned": scanned }),
                EmbeddingSearch::Unknown { sampled } => json!({ "status": "unknown", "sampled": sampled }),
            };
            out["target"] = report::ideal(&i);
            if let Some(t) = opts.t {
                let r = t_cofinite_check(&fam, &i, t).map_err(domain)?;
                out["deletion_check"] = json!({
                    "kind": "finite-deletion analog of the cofinite condition",
                    "t": r.t,
                    "holds": r.holds,
                    "checked": r.checked,
                    "failing_deletion": r.failing_deletion.map(|d| labels(&fam, &d)),
                });
            }
            (out, 0)
        }
        Command::Construct31 => {
            let fam = family_of(l, seed)?;
            let i = target_ideal(opts, fam.algebra())?;
            let order = opts.basis_order.as_deref().map(parse_order).transpose()?;
            let (outcome, trace) =
                staged_basis_embedding(&fam, &i, order.as_deref(), seed).map_err(domain)?;
            let stages: Vec<Value> = trace
                .stages
                .iter()
                .map(|s| {
                    json!({
                        "stage": s.stage,
                        "span": s.slab,
                        "picks": s.picks.iter().map(|p| json!({
                            "v": p.v,
                            "factor": fam.labels()[p.factor],
                            "factor_index": p.factor,
                            "y": p.y,
                            "dim_after": p.dim_after,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut out = json!({
                "target": report::ideal(&i),
                "basis_order": trace.basis_order,
                "quotient_dim": trace.quotient_dim,
                "quotient_basis": trace.quotient_basis,
                "stages": stages,
                "strictly_descends": trace.strictly_descends(),
            });
            match outcome {
                StagedOutcome::Success(w) => {
                    out["outcome"] = json!("success");
                    out["witness"] = witness(&fam, &w);
                }
                StagedOutcome::Stall { stage, blocking_v } => {
                    out["outcome"] = json!("stall");
                    out["stall"] = json!({ "stage": stage, "blocking_v": blocking_v });
                }
            }
            (out, 0)
        }
        Command::Construct43 => {
            let fam = family_of(l, seed)?;
            let (outcome, trace) = annihilator_chain_embedding(&fam, seed);
            let steps: Vec<Value> = trace
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "factor": fam.labels()[s.factor],
                        "factor_index": s.factor,
                        "r": s.r,
                        "x": s.x,
                        "dim_l": s.dim_l,
                    })
                })
                .collect();
            let mut out = json!({
                "steps": steps,
                "accepted": trace.accepted(),
                "strictly_descends": trace.strictly_descends(fam.algebra().dim()),
            });
            match outcome {
                ChainOutcome::Success(w) => {
                    out["outcome"] = json!("success");
                    out["witness"] = witness(&fam, &w);
                }
                ChainOutcome::Failure { stable_l } => {
                    out["outcome"] = json!("failure");
                    out["stable_l"] = report::subspace(&stable_l);
                }
            }
            (out, 0)
        }
        Command::Kappa => {
            let a = algebra_of(l, seed)?;
            let mut modules: Vec<(String, ModuleRep)> = vec![("regular".into(), ModuleRep::regular(&a))];
            if let InputDoc::Family(_) = l.doc {
                let fam = family_of(l, seed)?;
                modules = fam
                    .labels()
                    .iter()
                    .cloned()
                    .zip(fam.factors().iter().cloned())
                    .collect();
            }
            let mut rows = Vec::new();
            for (label, m) in modules {
                let length = composition_factors(&m, seed).map_err(domain)?.length();
                let kappa = kappa_finite(&m, seed).map_err(domain)?;
                rows.push(json!({ "module": label, "dim": m.dim(), "composition_length": length, "kappa": kappa }));
            }
            (json!({ "modules": rows }), 0)
        }
        Command::Sufficiency => {
            let fam = family_of(l, seed)?;
            let r = sufficiency_check(&fam, seed).map_err(domain)?;
            (
                json!({
                    "faithful": labels(&fam, &r.faithful),
                    "faithful_count": r.faithful_count(),
                    "factors": fam.len(),
                    "kappa": r.kappa,
                    "guaranteed": r.guaranteed,
                    "algebra_is_simple": r.algebra_is_simple,
                }),
                0,
            )
        }
        Command::WeylModel | Command::PointClosure | Command::Selftest => unreachable!("handled without input"),
    })
}

fn labels(fam: &ProductFamily, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&k| fam.labels()[k].clone()).collect()
}

fn witness(fam: &ProductFamily, w: &EmbeddingWitness) -> Value {
    let components: Vec<Value> = fam
        .labels()
        .iter()
        .zip(fam.components(&w.x))
        .map(|(l, c)| json!({ "factor": l, "component": c }))
        .collect();
    json!({
        "x": w.x,
        "components": components,
        "annihilator": report::ideal(&w.ann),
        "orbit_dim": w.orbit_dim,
        "valid": w.is_valid(),
    })
}

fn violation(v: &Violation) -> Value {
    let (axiom, at) = match *v {
        Violation::Associativity { i, j, k, l } => ("associativity", json!({"i": i, "j": j, "k": k, "coordinate": l})),
        Violation::LeftIdentity { j, k } => ("left-identity", json!({"j": j, "coordinate": k})),
        Violation::RightIdentity { j, k } => ("right-identity", json!({"j": j, "coordinate": k})),
    };
    json!({"axiom": axiom, "at": at, "message": v.to_string()})
}

fn validate(l: &Loaded, seed: u64) -> Result<(Value, i32), CliError> {
    match &l.doc {
        InputDoc::Algebra(a) => {
            let alg = doc::build_algebra(a, &l.map)?;
            let r = alg.validate();
            let first: Vec<Value> = r.violations.iter().take(20).map(violation).collect();
            let valid = r.is_valid();
            Ok((
                json!({
                    "valid": valid,
                    "p": alg.field().modulus(),
                    "dim": alg.dim(),
                    "basis": alg.basis_names(),
                    "violation_count": r.violations.len(),
                    "violations": first,
                }),
                if valid { 0 } else { 1 },
            ))
        }
        InputDoc::Family(_) => {
            let fam = family_of(l, seed)?;
            let rows: Vec<Value> = fam
                .labels()
                .iter()
                .zip(fam.factors())
                .map(|(label, m)| json!({ "label": label, "dim": m.dim(), "faithful": m.is_faithful() }))
                .collect();
            Ok((
                json!({
                    "valid": true,
                    "p": fam.algebra().field().modulus(),
                    "algebra_dim": fam.algebra().dim(),
                    "factors": rows,
                }),
                0,
            ))
        }
    }
}

fn closure_result<T: ClosedSetFamily>(fam: &T) -> Result<Value, CliError> {
    let pairs = topology::point_closure(fam).map_err(domain)?;
    let closed: Vec<Value> = pairs
        .iter()
        .map(|p| {
            json!({
                "member": fam.member_name(p.c),
                "finite": p.f.iter().map(|q| fam.point_name(q)).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({ "count": closed.len(), "closed": closed }))
}

fn point_closure(opts: &Options) -> Result<(Option<String>, Value, i32), CliError> {
    if opts.input.is_none() {
        let bytes = opts
            .stdin
            .as_deref()
            .ok_or_else(|| CliError::Usage("point-closure reads a weyl-model report from standard input or --in".into()))?;
        let space = space_from_report(bytes)?;
        let mut out = closure_result(&space)?;
        out["space"] = report::symbolic_space(&space);
        return Ok((None, out, 0));
    }
    let path = opts.input.as_ref().expect("checked");
    let bytes = std::fs::read(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    if bytes.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'{') {
        let space = space_from_report(&bytes)?;
        let mut out = closure_result(&space)?;
        out["space"] = report::symbolic_space(&space);
        return Ok((None, out, 0));
    }
    let l = load(opts)?;
    let a = algebra_of(&l, opts.seed)?;
    let zt = irr_space(&a, opts.seed)?.zariski_topology().map_err(domain)?;
    let mut out = closure_result(&zt)?;
    out["zariski"] = report::point_sets(zt.closed_sets());
    Ok((Some(l.canonical), out, 0))
}

fn json_diag(e: &serde_json::Error) -> CliError {
    CliError::Parse(Diagnostic::new(e.line().max(1), e.column().max(1), e.to_string()).into())
}

fn bad_report(msg: &str) -> CliError {
    CliError::Parse(Diagnostic::new(1, 1, format!("not a space report: {msg}")).into())
}

/// Rebuilds a symbolic space from a `weyl-model` report.
pub fn space_from_report(bytes: &[u8]) -> Result<SymbolicSpace, CliError> {
    let v: Value = serde_json::from_slice(bytes).map_err(|e| json_diag(&e))?;
    let s = v
        .get("result")
        .and_then(|r| r.get("space"))
        .or_else(|| v.get("space"))
        .ok_or_else(|| bad_report("missing `space`"))?;
    let strings = |k: &str| -> Result<Vec<String>, CliError> {
        s.get(k)
            .and_then(Value::as_array)
            .ok_or_else(|| bad_report(k))?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad_report(k)))
            .collect()
    };
    let members = strings("members")?;
    let points = strings("points")?;
    if points.len() > topology::MAX_NAMED_POINTS {
        return Err(bad_report("too many named points"));
    }
    let point_set = |x: &Value| -> Result<PointSet, CliError> {
        let mut set = PointSet::EMPTY;
        for q in x.as_array().ok_or_else(|| bad_report("point list"))? {
            let q = q.as_u64().filter(|&q| (q as usize) < points.len()).ok_or_else(|| bad_report("point index"))?;
            set.insert(q as usize);
        }
        Ok(set)
    };
    let rows = |k: &str| -> Result<Vec<Value>, CliError> {
        Ok(s.get(k).and_then(Value::as_array).ok_or_else(|| bad_report(k))?.clone())
    };
    let contains = rows("contains")?.iter().map(point_set).collect::<Result<Vec<_>, _>>()?;
    let index_table = |k: &str| -> Result<Vec<Vec<usize>>, CliError> {
        rows(k)?
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| bad_report(k))?
                    .iter()
                    .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| bad_report(k)))
                    .collect()
            })
            .collect()
    };
    let difference = rows("difference")?
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad_report("difference"))?
                .iter()
                .map(|d| match d {
                    Value::String(t) if t == "infinite" => Ok(Difference::Infinite),
                    Value::Object(o) => Ok(Difference::Finite(point_set(
                        o.get("finite").ok_or_else(|| bad_report("difference"))?,
                    )?)),
                    _ => Err(bad_report("difference")),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cardinality = match s.get("cardinality") {
        Some(Value::String(t)) if t == "countably-infinite" => Cardinality::CountablyInfinite,
        Some(Value::Number(n)) => Cardinality::Finite(n.as_u64().ok_or_else(|| bad_report("cardinality"))? as usize),
        _ => return Err(bad_report("cardinality")),
    };
    SymbolicSpace::new(
        cardinality,
        members,
        points,
        contains,
        difference,
        index_table("union")?,
        index_table("intersection")?,
    )
    .map_err(|e| bad_report(&e.to_string()))
}
