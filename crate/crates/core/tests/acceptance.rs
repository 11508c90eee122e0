//! Acceptance criteria over the built-in catalog. Prints one line per
//! criterion and exits with status 1 if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use common::{distinct_primes, is_subset, local_invariants, log, maximal_below, Set, TableRing};
use finring::catalog::{catalog, CatalogEntry};
use finring::decomposition::{local_decompose, maximal_local_subrings_of_product, same_factors};
use finring::iso::{apply, galois_generator, galois_images};
use finring::lattice::{
    audit_ring, conductor, maximal_chain, maximal_subrings_all, maximal_subrings_same_residue, MaximalKind,
};
use finring::local::{galois_ring, LocalRing};
use finring::presets::product;
use finring::{FiniteRing, Subring, DEFAULT_ORACLE_BOUND};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Ring {
    entry: CatalogEntry,
    ring: FiniteRing,
    table: TableRing,
}

fn local_rings(all: &[Ring]) -> impl Iterator<Item = &Ring> {
    all.iter().filter(|r| r.entry.expected.is_some())
}

fn sets(t: &TableRing, r: &FiniteRing, v: impl IntoIterator<Item = Subring>) -> BTreeSet<Set> {
    v.into_iter().map(|s| t.subring_set(r, &s)).collect()
}

fn formula(q: u64, rho: u32) -> u128 {
    (0..rho).map(|i| (q as u128).pow(i)).sum()
}

/// Maximal subrings whose residue field is that of the whole ring equal
/// `(q^rho - 1)/(q - 1)` by the census, and match the hyperplane construction.
fn counting(all: &[Ring]) -> Outcome {
    let mut n = 0;
    for x in local_rings(all) {
        let (t, r) = (&x.table, &x.ring);
        let (_, _, q, _, rho) = local_invariants(t);
        let census = t.subring_census();
        let top = t.all();
        let oracle: BTreeSet<Set> = maximal_below(&census, &top).into_iter().filter(|s| t.residue_size(s) == q).collect();
        let want = formula(q, rho);
        ensure(oracle.len() as u128 == want, || format!("{}: census {} vs formula {want}", x.entry.name, oracle.len()))?;
        ensure(x.entry.expected.unwrap().count_same_residue == want, || format!("{}: catalog value differs", x.entry.name))?;
        let lr = LocalRing::new(r.clone(), DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
        let built = sets(t, r, maximal_subrings_same_residue(&lr).map_err(|e| e.to_string())?);
        ensure(built == oracle, || format!("{}: hyperplane subrings differ from the census", x.entry.name))?;
        n += 1;
    }
    let spot = |name: &str| all.iter().find(|r| r.entry.name == name).unwrap();
    for (name, want) in [("F_2[x,y]/(x,y)^2", 3), ("F_4[x]/(x^2)", 1), ("F_4[x,y]/(x,y)^2", 5), ("Z/8", 0), ("Z/9", 0)] {
        let x = spot(name);
        let (_, _, q, _, rho) = local_invariants(&x.table);
        ensure(formula(q, rho) == want, || format!("{name}: expected {want}"))?;
    }
    Ok(format!("{n} local rings"))
}

/// Full census of maximal subrings equals the same-residue ones plus one
/// preimage per prime divisor of `n`, with matching kinds and indices.
fn two_kinds(all: &[Ring]) -> Outcome {
    let mut n_rings = 0;
    for x in local_rings(all) {
        let (t, r) = (&x.table, &x.ring);
        let (p, _, q, n, rho) = local_invariants(t);
        if !(1..=3).contains(&n) {
            continue;
        }
        let census = t.subring_census();
        let oracle = maximal_below(&census, &t.all());
        let want = formula(q, rho) + distinct_primes(n as u64) as u128;
        ensure(oracle.len() as u128 == want, || format!("{}: census {} vs {want}", x.entry.name, oracle.len()))?;
        let lr = LocalRing::new(r.clone(), DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
        let classified = maximal_subrings_all(&lr).map_err(|e| e.to_string())?;
        ensure(classified.len() as u128 == want, || format!("{}: classified {}", x.entry.name, classified.len()))?;
        let oracle_set: BTreeSet<Set> = oracle.iter().cloned().collect();
        for m in &classified {
            let s = t.subring_set(r, &m.subring);
            ensure(oracle_set.contains(&s), || format!("{}: classified subring not maximal", x.entry.name))?;
            let index = (t.size / s.len()) as u64;
            let f = t.residue_size(&s);
            ensure(index == m.index, || format!("{}: index mismatch", x.entry.name))?;
            match m.kind {
                MaximalKind::SameResidue => ensure(f == q && index == q, || format!("{}: kind 1 index {index}", x.entry.name))?,
                MaximalKind::Subfield { degree } => {
 let ratio = n / degree;
                    let prime_ratio = n % degree == 0 && (2..=ratio).filter(|d| ratio % d == 0).count() == 1;
                    ensure(f == p.pow(degree) && index == q / f && prime_ratio, || format!("{}: kind 2 index {index}", x.entry.name))?
                }
            }
        }
        n_rings += 1;
    }
    let x = all.iter().find(|r| r.entry.name == "GR(4,2)").unwrap();
    let lr = LocalRing::new(x.ring.clone(), DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
    let m = maximal_subrings_all(&lr).map_err(|e| e.to_string())?;
    ensure(m.len() == 1 && m[0].index == 2, || "GR(4,2): expected one maximal subring of index 2".into())?;
    Ok(format!("{n_rings} local rings with n <= 3"))
}

/// Teichmüller set: `q` solutions of `t^q = t`, multiplicative lift, and the
/// bijection `T x m -> R`.
fn teichmuller(all: &[Ring]) -> Outcome {
    let mut pairs = 0u64;
    for x in local_rings(all) {
        let (t, r) = (&x.table, &x.ring);
        let (_, _, q, _, _) = local_invariants(t);
        let lr = LocalRing::new(r.clone(), DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
        let tbar = t.set_of(r, &lr.teichmuller().tbar);
        let naive: Set = (0..t.size as u32).filter(|&a| t.pow(a, q) == a).collect();
        ensure(tbar.len() as u64 == q && tbar == naive, || format!("{}: Teichmüller set", x.entry.name))?;
        let units: Vec<u32> = (0..t.size as u32).filter(|&a| t.is_unit(a)).collect();
        let lift = |a: u32| t.set_of(r, &[lr.lift(&t.elements[a as usize]).unwrap()])[0];
        let lifts: Vec<u32> = units.iter().map(|&u| lift(u)).collect();
        if t.size <= 512 {
            for (i, &u) in units.iter().enumerate() {
                for (j, &v) in units.iter().enumerate() {
                    ensure(lift(t.mul(u, v)) == t.mul(lifts[i], lifts[j]), || format!("{}: lift not multiplicative", x.entry.name))?;
                    pairs += 1;
                }
            }
        }
        let m = t.nonunits();
        let sums: BTreeSet<u32> = tbar.iter().flat_map(|&a| m.iter().map(move |&b| (a, b))).map(|(a, b)| t.add(a, b)).collect();
        ensure(sums.len() == t.size && tbar.len() * m.len() == t.size, || format!("{}: T x m -> R not bijective", x.entry.name))?;
    }
    Ok(format!("{pairs} unit pairs"))
}

/// The span of the Teichmüller set is a Galois ring.
fn coefficient_ring(all: &[Ring]) -> Outcome {
    let mut matched = 0;
    for x in local_rings(all) {
        let (t, r) = (&x.table, &x.ring);
        let (p, big_n, q, n, _) = local_invariants(t);
        let lr = LocalRing::new(r.clone(), DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
        let s = lr.lower_ring(n).map_err(|e| e.to_string())?;
        let s_set = t.subring_set(r, &s);
        ensure(s_set.len() as u64 == p.pow(big_n * n), || format!("{}: |S| = {}", x.entry.name, s_set.len()))?;
        let m_s: Set = s_set.iter().copied().filter(|&a| !t.is_unit(a)).collect();
        let p_s = t.additive_span(s_set.iter().map(|&a| t.int_mul(p, a)));
        ensure(m_s == p_s, || format!("{}: m_S != pS", x.entry.name))?;
        ensure(t.residue_size(&s_set) == q, || format!("{}: residue size", x.entry.name))?;
        if s_set.len() <= 256 {
            let pres = s.present(r).map_err(|e| e.to_string())?;
            let sr = pres.ring();
            let g = galois_ring(p, big_n, n).map_err(|e| e.to_string())?;
            let root = galois_generator(sr, p, n).ok_or_else(|| format!("{}: no root", x.entry.name))?;
            let images = galois_images(&g, sr, &root, n);
            let st = TableRing::new(sr);
            let map: Vec<u32> = g.elements().map(|a| st.set_of(sr, &[apply(sr, &images, &a)])[0]).collect();
            let gt = TableRing::new(&g);
            let bij: BTreeSet<u32> = map.iter().copied().collect();
            ensure(bij.len() == gt.size && gt.size == st.size, || format!("{}: not bijective", x.entry.name))?;
            ensure(map[gt.one as usize] == st.one, || format!("{}: not unital", x.entry.name))?;
            for a in 0..gt.size as u32 {
                for b in 0..gt.size as u32 {
                    let ok = map[gt.add(a, b) as usize] == st.add(map[a as usize], map[b as usize])
                        && map[gt.mul(a, b) as usize] == st.mul(map[a as usize], map[b as usize]);
                    ensure(ok, || format!("{}: not a homomorphism", x.entry.name))?;
                }
            }
            matched += 1;
        }
    }
    Ok(format!("{matched} explicit isomorphisms"))
}

fn audit(all: &[Ring]) -> Outcome {
    let mut clauses = 0;
    for x in local_rings(all) {
        let report = audit_ring(&x.ring, DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
        for c in &report.clauses {
            ensure(c.passed, || format!("{}: clause {} ({}) fails at {:?}", x.entry.name, c.clause, c.statement, c.counterexample))?;
            clauses += 1;
        }
    }
    Ok(format!("{clauses} clauses"))
}

/// Local factors of products, and maximal local subrings inside `F^n`.
fn decomposition(all: &[Ring]) -> Outcome {
    let mut counts = Vec::new();
    for x in all.iter().filter(|r| r.entry.expected.is_none()) {
        let (t, r) = (&x.table, &x.ring);
        let fac = local_decompose(r, DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
        let prod: u64 = fac.factors.iter().map(|f| f.ring.order()).product();
        ensure(prod == r.order(), || format!("{}: factor orders", x.entry.name))?;
        for f in &fac.factors {
            let ft = TableRing::new(&f.ring);
            ensure(ft.is_local_subring(&ft.all()), || format!("{}: factor not local", x.entry.name))?;
        }
        let again = local_decompose(&product(&fac.rings()).map_err(|e| e.to_string())?, DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
        ensure(same_factors(&fac.rings(), &again.rings()), || format!("{}: factorization not unique", x.entry.name))?;
        if !x.entry.expression.starts_with("product(field") {
            continue;
        }
        let census = t.subring_census();
        let local: Vec<Set> = census.into_iter().filter(|s| t.is_local_subring(s)).collect();
        let oracle: BTreeSet<Set> = local
            .iter()
            .filter(|s| !local.iter().any(|u| u.len() > s.len() && is_subset(s, u)))
            .cloned()
            .collect();
        let found = maximal_local_subrings_of_product(r, DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
        ensure(sets(t, r, found.subrings.clone()) == oracle, || format!("{}: maximal local subrings differ", x.entry.name))?;
        let radical: Set = (0..t.size as u32).filter(|&a| t.is_nilpotent(a)).collect();
        let atoms: Vec<u32> = (0..t.size as u32)
            .filter(|&e| e != t.zero && t.mul(e, e) == e)
            .filter(|&e| !(0..t.size as u32).any(|f| f != t.zero && f != e && t.mul(f, f) == f && t.mul(f, e) == f))
            .collect();
        let sizes: Vec<u64> = atoms
            .iter()
            .map(|&e| {
                let corner: Set = t.additive_span((0..t.size as u32).map(|y| t.mul(e, y)));
                let nil = corner.iter().filter(|&&a| t.is_nilpotent(a)).count();
                (corner.len() / nil) as u64
            })
            .collect();
        let p = (2..).find(|d| sizes[0].is_multiple_of(*d)).unwrap();
        let g = sizes.iter().map(|&s| log(p, s)).fold(0, gcd);
        let field = p.pow(g);
        for s in &oracle {
            ensure(is_subset(&radical, s), || format!("{}: misses the radical", x.entry.name))?;
            for &a in s {
                for &e in &atoms {
                    let y = t.mul(e, a);
                    let z = t.pow(y, field);
                    let diff = (0..t.size as u32).find(|&w| t.add(w, y) == z).unwrap();
                    ensure(t.is_nilpotent(diff), || format!("{}: leaves F^n", x.entry.name))?;
                }
            }
        }
        counts.push((x.entry.name, oracle.len()));
    }
    let want = [("F_2 x F_2", 1), ("F_2 x F_4", 1), ("F_4 x F_4", 2)];
    for (name, n) in want {
        ensure(counts.contains(&(name, n)), || format!("{name}: expected {n} maximal local subrings, got {counts:?}"))?;
    }
    Ok(format!("maximal local subrings {counts:?}"))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Maximal chains have steps of index `q`, contain `p^k R` at step `k`, and
/// no step can be refined.
fn chains(all: &[Ring]) -> Outcome {
    let mut lengths = Vec::new();
    for x in local_rings(all) {
        let (t, r) = (&x.table, &x.ring);
        let (p, _, q, _, _) = local_invariants(t);
        let lr = LocalRing::new(r.clone(), DEFAULT_ORACLE_BOUND).map_err(|e| e.to_string())?;
        let chain = maximal_chain(&lr).map_err(|e| e.to_string())?;
        let rings: Vec<Set> = chain.rings.iter().map(|s| t.subring_set(r, s)).collect();
        let census = t.subring_census();
        let mut pk = 1u64;
        for (k, rk) in rings.iter().enumerate() {
            ensure((0..t.size as u32).all(|a| rk.binary_search(&t.int_mul(pk, a)).is_ok()), || format!("{}: p^{k} R not in R_{k}", x.entry.name))?;
            pk *= p;
            if k + 1 < rings.len() {
                let next = &rings[k + 1];
                ensure((rk.len() / next.len()) as u64 == q, || format!("{}: step {k} index", x.entry.name))?;
                let between = census.iter().any(|s| s.len() > next.len() && s.len() < rk.len() && is_subset(next, s) && is_subset(s, rk));
                ensure(!between, || format!("{}: step {k} not maximal", x.entry.name))?;
            }
        }
        lengths.push((x.entry.name, chain.indices.clone()));
    }
    let cube = lengths.iter().find(|(n, _)| *n == "F_2[x]/(x^3)").unwrap();
    ensure(cube.1 == vec![2, 2], || format!("F_2[x]/(x^3): indices {:?}", cube.1))?;
    Ok(format!("{} chains", lengths.len()))
}

/// The conductor of every subring is the largest ideal inside it.
fn conductors(all: &[Ring]) -> Outcome {
    let mut checked = 0;
    for x in all.iter().filter(|x| x.ring.order() <= 1024) {
        let (t, r) = (&x.table, &x.ring);
        let ideals = t.ideal_census();
        for s in t.subring_census() {
            let sub = Subring::generated_by(r, s.iter().map(|&a| &t.elements[a as usize]));
            let c = t.set_of(r, &conductor(r, &sub).map_err(|e| e.to_string())?.group().elements());
            ensure(t.is_ideal(&c) && is_subset(&c, &s), || format!("{}: conductor not an ideal inside S", x.entry.name))?;
            for i in ideals.iter().filter(|i| is_subset(i, &s)) {
                ensure(is_subset(i, &c), || format!("{}: ideal inside S escapes the conductor", x.entry.name))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} subrings"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let all: Vec<Ring> = catalog()
        .into_iter()
        .map(|entry| {
            let ring = entry.build().expect("catalog entry builds");
            let table = TableRing::new(&ring);
            Ring { entry, ring, table }
        })
        .collect();
    let criteria: [(&str, fn(&[Ring]) -> Outcome); 8] = [
        ("1 counting formula", counting),
        ("2 two kinds of maximal subrings", two_kinds),
        ("3 Teichmüller suite", teichmuller),
        ("4 coefficient ring", coefficient_ring),
        ("5 structure audit", audit),
        ("6 decomposition", decomposition),
        ("7 maximal chains", chains),
        ("8 conductor", conductors),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t0 = Instant::now();
        match run(&all) {
            Ok(detail) => println!("[PASS] {name}: {detail} ({:.1?})", t0.elapsed()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("{} of 8 criteria passed in {:.1?}", 8 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
