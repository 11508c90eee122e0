use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use rayon::prelude::*;
use serde::Serialize;

use finring::arith::omega;
use finring::catalog::catalog;
use finring::decomposition::{factorization_report, is_local, Locality};
use finring::lattice::{
    classify, count_maximal_subrings_same_residue, enumerate_all_subrings, maximal_proper, maximal_subrings_all,
    unclassified, SubringEntry,
};
use finring::local::LocalRing;
use finring::presets::Preset;
use finring::verify::{verify_ring, RingVerification};
use finring::{AdditiveSubgroup, FiniteRing, RingElement, RingError, Subring, DEFAULT_SCAN_BOUND};

use crate::error::{CliError, BOUND_EXCEEDED, VERIFICATION_FAILED};
use crate::GlobalOpts;

type Outcome = Result<ExitCode, CliError>;

fn read_ring_file(path: &str) -> Result<FiniteRing, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(FiniteRing::from_json(&text)?)
}

/// `name a b c` becomes `name(a,b,c)`; a single word is kept as is.
fn expression(words: &[String]) -> String {
    match words {
        [one] => one.clone(),
        [name, args @ ..] => format!("{name}({})", args.join(",")),
        [] => String::new(),
    }
}

/// Resolves a ring argument: an existing JSON file, else a preset expression.
pub fn load_ring(words: &[String]) -> Result<FiniteRing, CliError> {
    if let [path] = words {
        if Path::new(path).is_file() {
            return read_ring_file(path);
        }
    }
    let preset = Preset::parse(&expression(words))?;
    build_preset(&preset)
}

fn build_preset(preset: &Preset) -> Result<FiniteRing, CliError> {
    let failure = std::cell::RefCell::new(None);
    let loader = |path: &str| -> finring::Result<FiniteRing> {
        read_ring_file(path).map_err(|e| {
            let msg = e.to_string();
            *failure.borrow_mut() = Some(e);
            RingError::BadParameters(msg)
        })
    };
    let built = preset.build_with(&loader);
    match (built, failure.into_inner()) {
        (Ok(r), _) => Ok(r),
        (Err(_), Some(e)) => Err(e),
        (Err(e), None) => Err(e.into()),
    }
}

fn write_out(g: &GlobalOpts, text: &str) -> Result<(), CliError> {
    match &g.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Writes `value` as JSON with `--json`, otherwise the text rendering.
fn emit<T: Serialize>(g: &GlobalOpts, value: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
    if g.json {
        let mut s = serde_json::to_string_pretty(value)?;
        s.push('\n');
        write_out(g, &s)
    } else {
        write_out(g, &text())
    }
}

fn coords(x: &RingElement) -> String {
    x.to_string()
}

fn basis_text(b: &[RingElement]) -> String {
    let v: Vec<String> = b.iter().map(coords).collect();
    format!("[{}]", v.join(", "))
}

fn label(r: &FiniteRing) -> &str {
    r.label().unwrap_or("ring")
}

pub fn make(g: &GlobalOpts, words: &[String]) -> Outcome {
    let preset = Preset::parse(&expression(words))?;
    let r = build_preset(&preset)?;
    let json = r.to_json() + "\n";
    let summary = format!("order {} {}", r.order(), label(&r));
    match &g.out {
        Some(path) => {
            std::fs::write(path, &json)?;
            println!("{summary}");
        }
        None => {
            print!("{json}");
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Debug, Serialize)]
struct InfoReport {
    label: String,
    order: u64,
    characteristic: u64,
    local: bool,
    p: Option<u64>,
    #[serde(rename = "N")]
    big_n: Option<u32>,
    q: Option<u64>,
    n: Option<u32>,
    nilpotency_index: Option<u32>,
    rho: Option<u32>,
    count_same_residue: Option<u128>,
    count_total: Option<u128>,
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn info(g: &GlobalOpts, arg: &[String]) -> Outcome {
    let r = load_ring(arg)?;
    let mut rep = InfoReport {
        label: label(&r).to_string(),
        order: r.order(),
        characteristic: r.characteristic(),
        local: false,
        p: None,
        big_n: None,
        q: None,
        n: None,
        nilpotency_index: None,
        rho: None,
        count_same_residue: None,
        count_total: None,
    };
    if is_local(&r, DEFAULT_SCAN_BOUND)?.is_local() {
        let lr = LocalRing::new(r, DEFAULT_SCAN_BOUND)?;
        let d = lr.data();
        let rho = lr.characteristic_module().rho();
        let same = count_maximal_subrings_same_residue(d.q, rho);
        rep.local = true;
        rep.p = Some(d.p);
        rep.big_n = Some(d.big_n);
        rep.q = Some(d.q);
        rep.n = Some(d.n);
        rep.nilpotency_index = Some(d.nilpotency_index);
        rep.rho = Some(rho);
        rep.count_same_residue = Some(same);
        rep.count_total = Some(same + omega(d.n as u64) as u128);
    }
    emit(g, &rep, || {
        let mut s = String::new();
        let _ = writeln!(s, "ring               {}", rep.label);
        let _ = writeln!(s, "order              {}", rep.order);
        let _ = writeln!(s, "characteristic     {}", rep.characteristic);
        let _ = writeln!(s, "local              {}", rep.local);
        let _ = writeln!(s, "p                  {}", opt(&rep.p));
        let _ = writeln!(s, "N                  {}", opt(&rep.big_n));
        let _ = writeln!(s, "q                  {}", opt(&rep.q));
        let _ = writeln!(s, "n                  {}", opt(&rep.n));
        let _ = writeln!(s, "nilpotency         {}", opt(&rep.nilpotency_index));
        let _ = writeln!(s, "rho                {}", opt(&rep.rho));
        let _ = writeln!(s, "count_same_residue {}", opt(&rep.count_same_residue));
        let _ = writeln!(s, "count_total        {}", opt(&rep.count_total));
        s
    })?;
    Ok(ExitCode::SUCCESS)
}

fn entry_line(e: &SubringEntry) -> String {
    format!(
        "order {:>6}  index {:>4}  residue {:>4}  {:<12}  {}  {}\n",
        e.order,
        e.index,
        opt(&e.residue_field_size),
        serde_json::to_value(e.kind).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default(),
        if e.is_maximal { "maximal" } else { "       " },
        basis_text(&e.basis)
    )
}

fn groups(v: &[Subring]) -> BTreeSet<AdditiveSubgroup> {
    v.iter().map(|s| s.group().clone()).collect()
}

pub fn subrings(g: &GlobalOpts, arg: &[String], all: bool, oracle: bool) -> Outcome {
    let r = load_ring(arg)?;
    let lr = match is_local(&r, DEFAULT_SCAN_BOUND)? {
        Locality::Local { .. } => Some(LocalRing::new(r.clone(), DEFAULT_SCAN_BOUND)?),
        Locality::NotLocal { .. } => None,
    };
    let census = if all || oracle || lr.is_none() {
        Some(enumerate_all_subrings(&r, g.oracle_bound)?)
    } else {
        None
    };
    let census_maximal = census.as_ref().map(|c| maximal_proper(c, &Subring::whole(&r)));
    let formula_maximal: Option<Vec<Subring>> = match &lr {
        Some(lr) => Some(maximal_subrings_all(lr)?.into_iter().map(|m| m.subring).collect()),
        None => None,
    };
    let maximal_set = match (&formula_maximal, &census_maximal) {
        (Some(f), _) => groups(f),
        (None, Some(c)) => groups(c),
        (None, None) => BTreeSet::new(),
    };
    let listed: Vec<Subring> = if all {
        census.clone().unwrap_or_default()
    } else {
        formula_maximal.clone().or_else(|| census_maximal.clone()).unwrap_or_default()
    };
    let entries: Vec<SubringEntry> = listed
        .iter()
        .map(|s| {
            let is_max = maximal_set.contains(s.group());
            match &lr {
                Some(lr) => classify(lr, s, is_max),
                None => unclassified(s, is_max),
            }
        })
        .collect();
    emit(g, &entries, || entries.iter().map(entry_line).collect())?;

    if oracle {
        let mut diff = Vec::new();
        if let (Some(f), Some(c)) = (&formula_maximal, &census_maximal) {
            let (f, c) = (groups(f), groups(c));
            for x in f.difference(&c) {
                diff.push(format!("formula only: {}", basis_text(&x.basis())));
            }
            for x in c.difference(&f) {
                diff.push(format!("census only: {}", basis_text(&x.basis())));
            }
        }
        for s in census.iter().flatten() {
            if Subring::generated_by(&r, s.basis().iter()).group() != s.group() {
                diff.push(format!("not closed: {}", basis_text(&s.basis())));
            }
        }
        if !diff.is_empty() {
            for d in &diff {
                eprintln!("oracle mismatch: {d}");
            }
            return Ok(ExitCode::from(VERIFICATION_FAILED));
        }
        eprintln!("oracle agrees ({} subrings in census)", census.as_ref().map_or(0, Vec::len));
    }
    Ok(ExitCode::SUCCESS)
}

fn verification_text(v: &RingVerification) -> String {
    let mut s = String::new();
    let status = if v.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(s, "{status} {} (order {})", v.label, v.order);
    for c in &v.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        let _ = writeln!(s, "  {mark} {:<24} {}", c.name, c.detail);
    }
    if let Some(a) = &v.audit {
        for c in &a.clauses {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            let _ = write!(s, "  {mark} clause {}: {} ({} checked)", c.clause, c.statement, c.checked);
            if let Some(w) = &c.counterexample {
                let _ = write!(s, " counterexample {}", basis_text(w));
            }
            s.push('\n');
        }
    }
    s
}

#[derive(Debug, Serialize)]
struct CatalogResult {
    name: &'static str,
    expression: &'static str,
    status: &'static str,
    error: Option<String>,
    report: Option<RingVerification>,
}

pub fn audit(g: &GlobalOpts, arg: &[String], use_catalog: bool) -> Outcome {
    if !use_catalog {
        let r = load_ring(arg)?;
        let v = verify_ring(&r, None, g.oracle_bound)?;
        emit(g, &v, || verification_text(&v))?;
        return Ok(if v.passed() { ExitCode::SUCCESS } else { ExitCode::from(VERIFICATION_FAILED) });
    }
    let entries = catalog();
    let results: Vec<CatalogResult> = entries
        .par_iter()
        .map(|e| {
            let outcome = e.build().and_then(|r| verify_ring(&r, e.expected.as_ref(), g.oracle_bound));
            let (status, error, report) = match outcome {
                Ok(v) => (if v.passed() { "pass" } else { "fail" }, None, Some(v)),
                Err(err @ RingError::ScanBoundExceeded { .. }) => ("bound-exceeded", Some(err.to_string()), None),
                Err(err) => ("fail", Some(err.to_string()), None),
            };
            CatalogResult {
                name: e.name,
                expression: e.expression,
                status,
                error,
                report,
            }
        })
        .collect();
    emit(g, &results, || {
        let mut s = String::new();
        for c in &results {
            match (&c.report, &c.error) {
                (Some(v), _) if !v.passed() => s.push_str(&verification_text(v)),
                (_, Some(e)) => {
                    let _ = writeln!(s, "{} {} ({e})", c.status.to_uppercase(), c.name);
                }
                _ => {
                    let _ = writeln!(s, "PASS {}", c.name);
                }
            }
        }
        let passed = results.iter().filter(|c| c.status == "pass").count();
        let _ = writeln!(s, "{passed}/{} catalog entries pass", results.len());
        s
    })?;
    Ok(if results.iter().any(|c| c.status == "fail") {
        ExitCode::from(VERIFICATION_FAILED)
    } else if results.iter().any(|c| c.status == "bound-exceeded") {
        ExitCode::from(BOUND_EXCEEDED)
    } else {
        ExitCode::SUCCESS
    })
}

pub fn decompose(g: &GlobalOpts, arg: &[String]) -> Outcome {
    let r = load_ring(arg)?;
    let rep = factorization_report(&r, DEFAULT_SCAN_BOUND)?;
    emit(g, &rep, || {
        let mut s = String::new();
        let _ = writeln!(s, "order {}", rep.order);
        for e in &rep.sylow {
            let _ = writeln!(s, "{}-primary part: order {}, idempotent {}", e.prime, e.order, e.idempotent);
        }
        let _ = writeln!(s, "{} local factor(s)", rep.factors.len());
        for (e, f) in rep.atoms.iter().zip(&rep.factors) {
            let size: u64 = f.orders.iter().product();
            let _ = writeln!(s, "  idempotent {e}: order {size}");
        }
        s
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn localdata(g: &GlobalOpts, arg: &[String]) -> Outcome {
    let r = load_ring(arg)?;
    let lr = LocalRing::new(r, DEFAULT_SCAN_BOUND)?;
    let rep = lr.report();
    emit(g, &rep, || {
        format!(
            "p {}\nN {}\nn {}\nq {}\nnilpotency_index {}\nunit_group_order {}\nrho {}\n",
            rep.p, rep.big_n, rep.n, rep.q, rep.nilpotency_index, rep.unit_group_order, rep.rho
        )
    })?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Debug, Serialize)]
struct TeichmullerReport {
    q: u64,
    alpha: u64,
    generator: RingElement,
    tbar: Vec<RingElement>,
}

pub fn teichmuller(g: &GlobalOpts, arg: &[String]) -> Outcome {
    let r = load_ring(arg)?;
    let lr = LocalRing::new(r, DEFAULT_SCAN_BOUND)?;
    let t = lr.teichmuller();
    let rep = TeichmullerReport {
        q: lr.q(),
        alpha: t.alpha,
        generator: t.generator.clone(),
        tbar: t.tbar.clone(),
    };
    emit(g, &rep, || {
        let mut s = format!("q {}\nalpha {}\ngenerator {}\n", rep.q, rep.alpha, rep.generator);
        for x in &rep.tbar {
            let _ = writeln!(s, "{x}");
        }
        s
    })?;
    Ok(ExitCode::SUCCESS)
}
