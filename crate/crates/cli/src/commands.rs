use num::BigRational;
use sepinv_core::binary::{classify, limit_along_torus, multiplicity_profile, parse_rational, BinaryForm, FormTuple};
use sepinv_core::cache::{CacheStatus, LatticeCache};
use sepinv_core::finite_field::gf;
use sepinv_core::helly::WitnessCosetView;
use sepinv_core::orbit::{
    dwise_implies_global, kappa_orbit_check, same_orbit, verify_reductive_bound, witness_instance, ActionTable,
    GroupAction, LinearAction, TupleInstance, Verdict,
};
use sepinv_core::torus::{char2_variant, separates, sharpness, SharpnessReport, WeightMatrix};
use sepinv_core::zoo::{group_report, verify_cover_lambdas, verify_zoo, zoo};
use sepinv_core::{enumerate_subgroups, kappa_exact, kappa_oracle, GroupSpec, GroupTable, SubgroupLattice};
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;

const ORACLE_MAX_ORDER: usize = 48;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sepinv_core::Error),
    #[error("invalid JSON argument: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult = Result<Report, CliError>;

pub struct Report {
    pub value: Value,
    pub text: String,
    /// False when a checked mathematical claim failed.
    pub ok: bool,
}

impl Report {
    fn new(value: Value, ok: bool) -> Self {
        let text = render(&value);
        Report { value, text, ok }
    }

    fn with_text(value: Value, text: String, ok: bool) -> Self {
        Report { value, text, ok }
    }
}

pub struct Context {
    cache: Option<LatticeCache>,
}

impl Context {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        Context { cache: cache_dir.map(LatticeCache::new) }
    }

    fn lattice(&self, g: &GroupTable) -> Result<(SubgroupLattice, CacheStatus), CliError> {
        Ok(match &self.cache {
            Some(c) => c.lattice(g)?,
            None => (enumerate_subgroups(g), CacheStatus::Skipped),
        })
    }
}

fn build(spec: &str) -> Result<GroupTable, CliError> {
    Ok(spec.parse::<GroupSpec>()?.build()?)
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

/// `key: value` lines, nested keys joined with dots; arrays of scalars on one line.
fn render(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, "", v);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn render_into(out: &mut String, prefix: &str, v: &Value) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                render_into(out, &join(k), x);
            }
        }
        Value::Array(items) => match items.iter().map(scalar).collect::<Option<Vec<_>>>() {
            Some(s) => writeln!(out, "{prefix}: [{}]", s.join(", ")).unwrap(),
            None => {
                for (i, x) in items.iter().enumerate() {
                    render_into(out, &format!("{prefix}[{i}]"), x);
                }
            }
        },
        other => writeln!(out, "{prefix}: {}", scalar(other).unwrap()).unwrap(),
    }
}

pub fn group_info(spec: &str) -> CliResult {
    let g = build(spec)?;
    let v = json!({
        "group": g.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "center_size": g.center().len(),
        "abelianization_order": g.abelianization_order(),
        "content_hash": g.content_hash(),
    });
    Ok(Report::new(v, true))
}

pub fn group_build(spec: &str) -> CliResult {
    let g = build(spec)?;
    let table: Vec<Vec<usize>> = g.elements().map(|a| g.elements().map(|b| g.mul(a, b)).collect()).collect();
    let mut text = format!("group: {} (order {})\n", g.name(), g.order());
    for (i, l) in g.labels().iter().enumerate() {
        writeln!(text, "{i}: {l}").unwrap();
    }
    for row in &table {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(text, "{}", cells.join(" ")).unwrap();
    }
    let v = json!({ "group": g.name(), "order": g.order(), "labels": g.labels(), "table": table });
    Ok(Report::with_text(v, text, true))
}

pub fn lattice_subgroups(ctx: &Context, spec: &str) -> CliResult {
    let g = build(spec)?;
    let (l, status) = ctx.lattice(&g)?;
    let subgroups: Vec<Value> = l
        .subgroups()
        .iter()
        .enumerate()
        .map(|(id, s)| json!({ "id": id, "order": s.len(), "members": s.iter().map(|x| g.label(x)).collect::<Vec<_>>() }))
        .collect();
    let mut text =
        format!("group: {}\nsubgroups: {}\ncache: {}\n", g.name(), l.len(), to_value(&status).as_str().unwrap());
    for s in &subgroups {
        let members: Vec<&str> = s["members"].as_array().unwrap().iter().map(|m| m.as_str().unwrap()).collect();
        writeln!(text, "{:>3} order {:>3}: {}", s["id"], s["order"], members.join(" ")).unwrap();
    }
    let v = json!({ "group": g.name(), "count": l.len(), "cache": status, "subgroups": subgroups });
    Ok(Report::with_text(v, text, true))
}

pub fn lattice_lambda(ctx: &Context, spec: &str) -> CliResult {
    let g = build(spec)?;
    let (l, _) = ctx.lattice(&g)?;
    Ok(Report::new(json!({ "group": g.name(), "lambda": l.lambda() }), true))
}

pub fn lattice_mu(ctx: &Context, spec: &str) -> CliResult {
    let g = build(spec)?;
    let (l, _) = ctx.lattice(&g)?;
    let (mu, witness) = l.mu_with_witness();
    let family: Vec<Value> = witness.iter().map(|&id| json!({ "id": id, "order": l.subgroup(id).len() })).collect();
    Ok(Report::new(json!({ "group": g.name(), "mu": mu, "family": family }), true))
}

pub fn helly_compute(ctx: &Context, spec: &str) -> CliResult {
    let g = build(spec)?;
    let (report, failures) = group_report(&g, ctx.cache.as_ref())?;
    let mut v = to_value(&report);
    v["failures"] = json!(failures);
    Ok(Report::new(v, failures.is_empty()))
}

pub fn helly_oracle(ctx: &Context, spec: &str, cap: Option<usize>) -> CliResult {
    let g = build(spec)?;
    if g.order() > ORACLE_MAX_ORDER {
        return Err(CliError::Usage(format!("the oracle is limited to order <= {ORACLE_MAX_ORDER}")));
    }
    let (l, _) = ctx.lattice(&g)?;
    let cap = cap.unwrap_or(l.mu() + 1);
    let oracle = kappa_oracle(&g, &l, cap)?;
    let exact = kappa_exact(&g, &l).kappa;
    let sound = cap > l.mu();
    let v = json!({ "group": g.name(), "cap": cap, "cap_sound": sound, "kappa_oracle": oracle, "kappa_exact": exact });
    Ok(Report::new(v, !sound || oracle == exact))
}

pub fn helly_witness(ctx: &Context, spec: &str) -> CliResult {
    let g = build(spec)?;
    let (l, _) = ctx.lattice(&g)?;
    let k = kappa_exact(&g, &l);
    let (cosets, verified) = match &k.witness {
        Some(w) => (w.cosets.iter().map(|c| WitnessCosetView::new(&g, &l, c)).collect(), w.verify(&l).is_ok()),
        None => (Vec::new(), true),
    };
    let v = json!({ "group": g.name(), "kappa": k.kappa, "verified": verified, "witness": cosets });
    Ok(Report::new(v, verified))
}

pub fn helly_verify_paper(ctx: &Context) -> CliResult {
    let report = verify_zoo(&zoo()?, ctx.cache.as_ref())?;
    let covers = verify_cover_lambdas(ctx.cache.as_ref())?;
    let ok = report.ok() && covers.iter().all(|c| c.ok);
    let mut text = String::from("group    order kappa mu lambda bounds\n");
    for r in &report.groups {
        writeln!(
            text,
            "{:<8} {:>5} {:>5} {:>2} {:>6} {}",
            r.group,
            r.order,
            r.kappa,
            r.mu,
            r.lambda,
            if r.bounds_ok { "ok" } else { "FAIL" }
        )
        .unwrap();
    }
    for c in &covers {
        writeln!(
            text,
            "lambda {}={} {}={} {}",
            c.quotient,
            c.quotient_lambda,
            c.cover,
            c.cover_lambda,
            if c.ok { "ok" } else { "FAIL" }
        )
        .unwrap();
    }
    for f in &report.failures {
        writeln!(text, "failure: {f}").unwrap();
    }
    writeln!(text, "result: {}", if ok { "pass" } else { "fail" }).unwrap();
    let v = json!({ "groups": report.groups, "covers": covers, "failures": report.failures, "ok": ok });
    Ok(Report::with_text(v, text, ok))
}

fn verdict_report<A: GroupAction>(g: &GroupTable, t: &TupleInstance<'_, A>, d: usize) -> Result<Value, CliError> {
    let verdict = dwise_implies_global(t, d)?;
    let mut v = json!({ "instance_hash": t.instance_hash(), "d": d, "verdict": verdict });
    if verdict == Verdict::GlobalEqual {
        v["witness_element"] = json!(g.label(same_orbit(t).expect("global equality has a witness")));
    }
    Ok(v)
}

pub fn orbit_check(
    ctx: &Context,
    spec: &str,
    subgroups: Option<&[usize]>,
    linear: Option<(usize, Vec<u8>)>,
    x: &str,
    x_prime: &str,
    d: usize,
) -> CliResult {
    let g = build(spec)?;
    let v = match linear {
        Some((q, diagonal)) => {
            let a = LinearAction::diagonal_cyclic(&g, gf(q)?, &diagonal)?;
            let t = TupleInstance::new(&a, serde_json::from_str(x)?, serde_json::from_str(x_prime)?)?;
            verdict_report(&g, &t, d)?
        }
        None => {
            let (l, _) = ctx.lattice(&g)?;
            let a = match subgroups {
                Some(ids) => {
                    if let Some(bad) = ids.iter().find(|&&id| id >= l.len()) {
                        return Err(CliError::Usage(format!("subgroup id {bad} >= {}", l.len())));
                    }
                    ActionTable::coset_spaces(&g, &l, ids).0
                }
                None => ActionTable::regular(&g),
            };
            let t = TupleInstance::new(&a, serde_json::from_str(x)?, serde_json::from_str(x_prime)?)?;
            verdict_report(&g, &t, d)?
        }
    };
    Ok(Report::new(v, true))
}

pub fn orbit_witness_instance(ctx: &Context, spec: &str, random: Option<(usize, u64)>) -> CliResult {
    let g = build(spec)?;
    let (l, _) = ctx.lattice(&g)?;
    let k = kappa_exact(&g, &l);
    let w = k.witness.as_ref().ok_or_else(|| CliError::Usage("the trivial group has no witness".into()))?;
    let wi = witness_instance(&g, &l, w)?;
    let t = wi.instance();
    let below = dwise_implies_global(&t, k.kappa - 1)?;
    let at = dwise_implies_global(&t, k.kappa)?;
    let mut ok = below == Verdict::Counterexample && at != Verdict::Counterexample;
    let mut v = json!({
        "group": g.name(),
        "kappa": k.kappa,
        "points": wi.action.points(),
        "x": wi.x,
        "x_prime": wi.x_prime,
        "instance_hash": t.instance_hash(),
        "verdict_below_kappa": below,
        "verdict_at_kappa": at,
    });
    if let Some((trials, seed)) = random {
        let r = kappa_orbit_check(&g, &l, k.kappa, w, trials, seed)?;
        ok &= r.ok();
        v["random"] = to_value(&r);
    }
    Ok(Report::new(v, ok))
}

pub fn orbit_verify_reductive(spec: &str, q: usize, diagonal: &[u8], trials: usize, seed: u64) -> CliResult {
    let g = build(spec)?;
    let a = LinearAction::diagonal_cyclic(&g, gf(q)?, diagonal)?;
    let r = verify_reductive_bound(&a, trials, seed);
    let ok = r.ok();
    Ok(Report::new(to_value(&r), ok))
}

fn rationals(s: &str) -> Result<Vec<BigRational>, CliError> {
    let raw: Vec<Value> = serde_json::from_str(s)?;
    Ok(raw.iter().map(parse_rational).collect::<Result<_, _>>()?)
}

pub fn torus_separate(
    weights: &str,
    copies: usize,
    v: &str,
    v_prime: &str,
    degree_cap: u32,
    support: Option<&[usize]>,
) -> CliResult {
    let w = WeightMatrix::new(serde_json::from_str(weights)?, copies)?;
    let support: Option<Vec<usize>> = support
        .map(|s| {
            s.iter()
                .map(|&c| c.checked_sub(1).ok_or_else(|| CliError::Usage("copies are numbered from 1".into())))
                .collect()
        })
        .transpose()?;
    let m = separates(&w, &rationals(v)?, &rationals(v_prime)?, degree_cap, support.as_deref())?;
    let shown: Vec<usize> = support.unwrap_or_else(|| (0..copies).collect()).iter().map(|c| c + 1).collect();
    let value = json!({
        "separating_monomial": m.map(|m| m.render(w.dim)),
        "degree_cap": degree_cap,
        "support": shown,
    });
    Ok(Report::new(value, true))
}

fn sharpness_report(r: SharpnessReport) -> Report {
    let ok = r.ok;
    Report::new(to_value(&r), ok)
}

pub fn torus_sharpness(n: usize, degree_cap: u32) -> CliResult {
    Ok(sharpness_report(sharpness(n, degree_cap)?))
}

pub fn torus_char2(n: usize, degree_cap: u32) -> CliResult {
    Ok(sharpness_report(char2_variant(n, degree_cap)?))
}

fn form(s: &str) -> Result<BinaryForm, CliError> {
    Ok(serde_json::from_str(s)?)
}

pub fn binary_profile(s: &str) -> CliResult {
    let f = form(s)?;
    let p = multiplicity_profile(&f)?;
    Ok(Report::new(json!({ "form": f.to_string(), "profile": p }), true))
}

pub fn binary_classify(s: &str) -> CliResult {
    let forms: Vec<BinaryForm> = serde_json::from_str(s)?;
    let t = FormTuple::new(forms)?;
    Ok(Report::new(to_value(&classify(&t)), true))
}

pub fn binary_limit(v: &str, l: &str, m: &str) -> CliResult {
    let limit = limit_along_torus(&form(v)?, &form(l)?, &form(m)?)?;
    Ok(Report::new(json!({ "limit": limit }), true))
}
