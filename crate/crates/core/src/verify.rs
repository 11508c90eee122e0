//! Per-ring verification suite: every structural statement checked against
//! the census oracles on one ring.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::omega;
use crate::catalog::Expected;
use crate::decomposition::{
    idempotents, is_local, local_decompose, maximal_local_subrings_of_product, same_factors,
    subring_partition, sylow_decompose, Locality,
};
use crate::error::Result;
use crate::iso::{galois_generator, galois_images, is_isomorphism};
use crate::lattice::{
    audit_ring, conductor, count_maximal_subrings_same_residue, enumerate_all_ideals,
    enumerate_all_subrings, maximal_chain, maximal_proper, maximal_subrings_all,
    maximal_subrings_same_residue, satisfies_power_law, AuditReport, MaximalKind,
};
use crate::local::{galois_ring, LocalRing};
use crate::presets::product;
use crate::ring::{AdditiveSubgroup, FiniteRing, Ideal, QuotientRing, RingElement, Subring};

/// Largest ring on which lifts are checked on all unit pairs.
pub const PAIRWISE_BOUND: u64 = 512;
/// Largest ring on which conductors are checked against the ideal census.
pub const CONDUCTOR_BOUND: u64 = 1024;
/// Largest coefficient ring matched explicitly with a Galois ring.
pub const ISOMORPHISM_BOUND: u64 = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RingVerification {
    pub label: String,
    pub order: u64,
    pub local: bool,
    pub checks: Vec<Check>,
    pub audit: Option<AuditReport>,
}

impl RingVerification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.audit.as_ref().is_none_or(|a| a.passed())
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Runs the local or product suite on `r`, comparing with `expected` when given.
pub fn verify_ring(r: &FiniteRing, expected: Option<&Expected>, bound: u64) -> Result<RingVerification> {
    r.check_bound(bound)?;
    let label = r.label().unwrap_or("ring").to_string();
    match is_local(r, bound)? {
        Locality::Local { .. } => {
            let lr = LocalRing::new(r.clone(), bound)?;
            let (checks, audit) = local_suite(&lr, expected, bound)?;
            Ok(RingVerification {
                label,
                order: r.order(),
                local: true,
                checks,
                audit: Some(audit),
            })
        }
        Locality::NotLocal { .. } => {
            let mut checks = product_suite(r, bound)?;
            if expected.is_some() {
                checks.push(Check::new("expected-local", false, "catalog expects a local ring"));
            }
            Ok(RingVerification {
                label,
                order: r.order(),
                local: false,
                checks,
                audit: None,
            })
        }
    }
}

fn groups(v: &[Subring]) -> BTreeSet<AdditiveSubgroup> {
    v.iter().map(|s| s.group().clone()).collect()
}

/// Suite for a local ring.
pub fn local_suite(lr: &LocalRing, expected: Option<&Expected>, bound: u64) -> Result<(Vec<Check>, AuditReport)> {
    let r = lr.ring();
    let d = lr.data().clone();
    let q = d.q;
    let cm = lr.characteristic_module();
    let rho = cm.rho();
    let mut checks = Vec::new();

    if let Some(e) = expected {
        let got = (rho, q, d.n, d.big_n);
        let want = (e.rho, e.q, e.n, e.big_n);
        checks.push(Check::new("invariants", got == want, format!("(rho, q, n, N) = {got:?}, expected {want:?}")));
    }

    let census = enumerate_all_subrings(r, bound)?;
    let whole = Subring::whole(r);
    let maximal = maximal_proper(&census, &whole);
    let oracle_same: Vec<Subring> = maximal.iter().filter(|s| lr.residue_size_of(s) == q).cloned().collect();
    let formula = count_maximal_subrings_same_residue(q, rho);
    let hyper = maximal_subrings_same_residue(lr)?;
    let mut ok = oracle_same.len() as u128 == formula && hyper.len() as u128 == formula;
    if let Some(e) = expected {
        ok &= e.count_same_residue == formula;
    }
    checks.push(Check::new(
        "count-same-residue",
        ok,
        format!("oracle {}, hyperplanes {}, formula {formula}", oracle_same.len(), hyper.len()),
    ));
    checks.push(Check::new(
        "oracle-agreement-same-residue",
        groups(&oracle_same) == groups(&hyper),
        "maximal same-residue subrings from the census equal those from hyperplanes",
    ));

    let all = maximal_subrings_all(lr)?;
    let all_subrings: Vec<Subring> = all.iter().map(|m| m.subring.clone()).collect();
    let total = formula + omega(d.n as u64) as u128;
    let kinds_ok = all.iter().all(|m| match m.kind {
        MaximalKind::SameResidue => m.index == q && lr.residue_size_of(&m.subring) == q,
        MaximalKind::Subfield { degree } => {
            let f = d.p.pow(degree);
            m.index == q / f && lr.residue_size_of(&m.subring) == f
        }
    });
    let mut ok = maximal.len() as u128 == total && all.len() as u128 == total && kinds_ok && groups(&maximal) == groups(&all_subrings);
    if let Some(e) = expected {
        ok &= e.count_total == total;
    }
    checks.push(Check::new(
        "two-kinds",
        ok,
        format!("oracle {} maximal subrings, classified {}, formula {total}", maximal.len(), all.len()),
    ));
    if d.n == 1 {
        let index_p: Vec<Subring> = census.iter().filter(|s| s.index() == d.p).cloned().collect();
        let ok = index_p.len() as u128 == formula && groups(&index_p) == groups(&maximal);
        checks.push(Check::new("prime-residue", ok, format!("{} subrings of index p", index_p.len())));
    }

    checks.push(teichmuller_check(lr));
    let rf = lr.residue_field();
    checks.push(Check::new(
        "residue-field",
        rf.q == q && rf.satisfies_field_axioms() && rf.matches_quotient(lr),
        format!("F_{q} on Teichmüller representatives"),
    ));
    checks.push(coefficient_ring_check(lr)?);
    if d.big_n == 1 {
        let f = lr.frobenius_field_embedding()?;
        let ok = f.order() == q && f.group().intersect(lr.maximal_ideal().group()).order() == 1;
        checks.push(Check::new("frobenius", ok, format!("image of order {}", f.order())));
    }
    checks.push(Check::new(
        "characteristic-module",
        cm.order() as u128 == (q as u128).pow(rho) && cm.fp_rank() == d.n * rho,
        format!("rho {rho}, F_p-rank {}", cm.fp_rank()),
    ));

    let chain = maximal_chain(lr)?;
    let ok = chain.indices.iter().all(|&i| i == q)
        && satisfies_power_law(r, d.p, &chain)
        && chain.rings.last() == Some(&lr.lower_ring(d.n)?);
    checks.push(Check::new("chain", ok, format!("indices {:?}", chain.indices)));

    if r.order() <= CONDUCTOR_BOUND {
        checks.push(conductor_check(r, &census, bound)?);
    }
    let audit = audit_ring(r, bound)?;
    Ok((checks, audit))
}

fn teichmuller_check(lr: &LocalRing) -> Check {
    let r = lr.ring();
    let q = lr.q();
    let t = lr.teichmuller();
    let m = lr.maximal_ideal();
    let mut ok = t.tbar.len() as u64 == q && t.tbar.iter().all(|x| r.pow(x, q) == *x);
    ok &= t.is_unique(r, q);
    ok &= q == 2 || r.multiplicative_order(&t.generator) == Some(q - 1);
    let units: Vec<RingElement> = r.elements().filter(|x| r.is_unit(x)).collect();
    if r.order() <= PAIRWISE_BOUND {
        let lifts: Vec<RingElement> = units.iter().map(|u| lr.lift(u).unwrap()).collect();
        for (i, u) in units.iter().enumerate() {
            for (j, v) in units.iter().enumerate() {
                ok &= lr.lift(&r.mul(u, v)).unwrap() == r.mul(&lifts[i], &lifts[j]);
            }
        }
    }
    let sums: BTreeSet<RingElement> = t
        .tbar
        .iter()
        .flat_map(|x| m.group().elements().into_iter().map(move |y| (x.clone(), y)))
        .map(|(x, y)| r.add(&x, &y))
        .collect();
    ok &= sums.len() as u64 == r.order() && t.tbar.len() as u64 * m.order() == r.order();
    for a in r.elements() {
        let (x, y) = lr.decompose(&a);
        ok &= t.index_of(&x).is_some() && m.contains(&y) && (x.is_zero() != r.is_unit(&a));
    }
    Check::new("teichmuller", ok, format!("|T| = {}, {} units", t.tbar.len(), units.len()))
}

fn coefficient_ring_check(lr: &LocalRing) -> Result<Check> {
    let r = lr.ring();
    let d = lr.data();
    let s = lr.lower_ring(d.n)?;
    let m_s = lr.subring_maximal_ideal(&s);
    let ps: Vec<RingElement> = s.basis().iter().map(|x| r.int_mul(d.p as i64, x)).collect();
    let p_s = AdditiveSubgroup::generated(r.orders(), ps.iter());
    let mut ok = s.order() == d.p.pow(d.big_n * d.n) && m_s == p_s && lr.residue_size_of(&s) == d.q;
    let pres = s.present(r)?;
    let sl = LocalRing::new(pres.ring().clone(), u64::MAX)?;
    ok &= sl.is_unramified();
    let mut detail = format!("|S| = {}", s.order());
    if s.order() <= ISOMORPHISM_BOUND {
        let g = galois_ring(d.p, d.big_n, d.n)?;
        let matched = galois_generator(sl.ring(), d.p, d.n)
            .map(|root| is_isomorphism(&g, sl.ring(), &galois_images(&g, sl.ring(), &root, d.n)))
            .unwrap_or(false);
        ok &= matched;
        detail.push_str(", matched with the Galois ring");
    }
    Ok(Check::new("coefficient-ring", ok, detail))
}

fn conductor_check(r: &FiniteRing, census: &[Subring], bound: u64) -> Result<Check> {
    let ideals = enumerate_all_ideals(r, bound)?;
    let mut ok = true;
    for s in census {
        let c = conductor(r, s)?;
        ok &= Ideal::new(r, c.group().clone()).is_ok() && c.is_subset_of(s.group());
        ok &= ideals.iter().filter(|i| i.is_subset_of(s.group())).all(|i| i.is_subset_of(c.group()));
        let quot = QuotientRing::new(r, &c)?;
        let image: Vec<RingElement> = s.basis().iter().map(|x| quot.projection(x)).collect();
        let img = AdditiveSubgroup::generated(quot.ring().orders(), image.iter().chain([quot.ring().one()].iter()));
        ok &= img.order() * c.order() == s.order() && Subring::new(quot.ring(), img).is_ok();
    }
    Ok(Check::new("conductor", ok, format!("{} subrings, {} ideals", census.len(), ideals.len())))
}

/// Suite for a ring that is not local.
pub fn product_suite(r: &FiniteRing, bound: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let sylow = sylow_decompose(r)?;
    let ok = sylow.iter().map(|f| f.ring.order()).product::<u64>() == r.order()
        && sylow.iter().all(|f| crate::arith::prime_power(f.ring.order()).map(|x| x.0) == Some(f.prime));
    checks.push(Check::new("sylow", ok, format!("{} primary components", sylow.len())));

    let idem = idempotents(r, bound)?;
    let atoms = &idem.atoms;
    let sum = atoms.iter().fold(r.zero(), |acc, e| r.add(&acc, e));
    let orth = atoms.iter().enumerate().all(|(i, a)| atoms[i + 1..].iter().all(|b| r.mul(a, b).is_zero()));
    checks.push(Check::new("atoms", sum == r.one() && orth, format!("{} atoms", atoms.len())));

    let fac = local_decompose(r, bound)?;
    let mut ok = fac.factors.iter().map(|f| f.ring.order()).product::<u64>() == r.order();
    for f in &fac.factors {
        ok &= is_local(&f.ring, bound)?.is_local() && f.ring.characteristic_prime_power().is_some();
    }
    let again = local_decompose(&product(&fac.rings())?, bound)?;
    ok &= same_factors(&fac.rings(), &again.rings());
    checks.push(Check::new("local-factors", ok, format!("{} local factors", fac.factors.len())));

    if fac.factors.iter().map(|f| f.ring.characteristic_prime_power().map(|x| x.0)).collect::<BTreeSet<_>>().len() == 1 {
        let m = maximal_local_subrings_of_product(r, bound)?;
        checks.push(Check::new(
            "maximal-local-subrings",
            true,
            format!("{} maximal local subrings over F_{}", m.subrings.len(), m.common_field),
        ));
    }

    let census = enumerate_all_subrings(r, bound)?;
    let mut ok = true;
    for s in &census {
        ok &= subring_partition(r, s, bound).is_ok();
    }
    checks.push(Check::new("subring-partition", ok, format!("{} subrings", census.len())));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn small_catalog_entries_verify() {
        for e in catalog().into_iter().filter(|e| e.build().unwrap().order() <= 32) {
            let r = e.build().unwrap();
            let v = verify_ring(&r, e.expected.as_ref(), crate::DEFAULT_ORACLE_BOUND).unwrap();
            assert!(v.passed(), "{}: {:?} {:?}", e.name, v.failures(), v.audit.as_ref().map(|a| a.clauses.iter().filter(|c| !c.passed).collect::<Vec<_>>()));
        }
    }

    #[test]
    fn wrong_expectation_fails() {
        let r = crate::presets::zmod(8).unwrap();
        let bogus = Expected { rho: 1, q: 2, n: 1, big_n: 3, count_same_residue: 1, count_total: 1 };
        let v = verify_ring(&r, Some(&bogus), crate::DEFAULT_ORACLE_BOUND).unwrap();
        assert!(!v.passed());
    }
}
