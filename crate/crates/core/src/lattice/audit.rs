use serde::Serialize;

use crate::error::Result;
use crate::ring::{AdditiveSubgroup, Ideal, RingElement, Subring};

use super::hyperplane::{all_subspaces, ideal_from_subspace, subspace_from_ideal};
use super::{enumerate_all_ideals, enumerate_all_subrings, maximal_proper, require_local};

/// Outcome of one audited statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub statement: &'static str,
    /// Number of instances examined.
    pub checked: usize,
    pub passed: bool,
    /// Basis of the offending subring or ideal.
    pub counterexample: Option<Vec<RingElement>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub order: u64,
    pub subrings: usize,
    pub ideals: usize,
    pub clauses: Vec<ClauseResult>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

struct Clause {
    clause: &'static str,
    statement: &'static str,
    checked: usize,
    counterexample: Option<Vec<RingElement>>,
}

impl Clause {
    fn new(clause: &'static str, statement: &'static str) -> Self {
        Clause {
            clause,
            statement,
            checked: 0,
            counterexample: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Vec<RingElement>) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn finish(self) -> ClauseResult {
        ClauseResult {
            clause: self.clause,
            statement: self.statement,
            checked: self.checked,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }
}

/// Checks the structural statements about subrings and ideals of a local
/// ring against the full subring and ideal census.
pub fn audit_ring(r: &crate::FiniteRing, bound: u64) -> Result<AuditReport> {
    let lr = require_local(r, bound)?;
    let subrings = enumerate_all_subrings(r, bound)?;
    let ideals = enumerate_all_ideals(r, bound)?;
    let whole = Subring::whole(r);
    let q = lr.q();
    let m = lr.maximal_ideal().group().clone();
    let m2 = lr.maximal_ideal().product(r, lr.maximal_ideal()).group().clone();
    let cm = lr.characteristic_module();
    let denom = cm.denominator().group().clone();
    let full = r.whole();
    let ms = |s: &Subring| lr.subring_maximal_ideal(s);
    let maximal = maximal_proper(&subrings, &whole);
    let same_residue_maximal: Vec<&Subring> = maximal.iter().filter(|s| lr.residue_size_of(s) == q).collect();

    let mut a = Clause::new("a", "S != R implies S + m^2 != R");
    let mut b = Clause::new("b", "S with the residue field of R and m_S = m implies S = R");
    let mut c = Clause::new("c", "m_S + m^2 = m implies m_S = m");
    let mut d = Clause::new("d", "an ideal I <= m with I + m^2 = m equals m");
    let mut e = Clause::new("e", "a maximal subring S with the residue field of R contains m^2 + pR, and m_S is an ideal of R containing it");
    for s in &subrings {
        let basis = || s.basis();
        if *s != whole {
            a.check(s.group().join(&m2) != full, basis);
        }
        let m_s = ms(s);
        if lr.residue_size_of(s) == q {
            b.check(m_s != m || *s == whole, basis);
        }
        c.check(m_s.join(&m2) != m || m_s == m, basis);
    }
    for i in &ideals {
        if i.is_subset_of(&m) {
            d.check(i.group().join(&m2) != m || *i.group() == m, || i.basis());
        }
    }
    for s in &same_residue_maximal {
        let m_s = ms(s);
        let ok = denom.is_subgroup_of(s.group()) && denom.is_subgroup_of(&m_s) && Ideal::new(r, m_s.clone()).is_ok();
        e.check(ok, || s.basis());
    }

    let mut f = Clause::new("f", "ideals between m^2 + pR and m correspond to F_q-subspaces of V, preserving inclusion");
    let mut g = Clause::new("g", "T + I is a subring with the residue field of R for every ideal I containing m^2 + pR");
    let between: Vec<&Ideal> = ideals
        .iter()
        .filter(|i| denom.is_subgroup_of(i.group()) && i.is_subset_of(&m))
        .collect();
    let subspaces = all_subspaces(r, &cm);
    let mut from_ideals: Vec<AdditiveSubgroup> = between.iter().map(|i| i.group().clone()).collect();
    let mut from_spaces: Vec<AdditiveSubgroup> = subspaces.iter().map(|w| w.preimage.clone()).collect();
    from_ideals.sort();
    from_spaces.sort();
    f.check(from_ideals == from_spaces, Vec::new);
    for w in &subspaces {
        let round = ideal_from_subspace(r, &cm, w).and_then(|i| subspace_from_ideal(r, &cm, &i));
        f.check(round.as_ref().map(|x| x.preimage == w.preimage && x.dim == w.dim).unwrap_or(false), || w.generators());
        for w2 in &subspaces {
            let incl = w.preimage.is_subgroup_of(&w2.preimage);
            f.check(!incl || w.dim <= w2.dim, || w.generators());
        }
    }
    for i in &between {
        let group = i.group().with(lr.teichmuller().tbar.iter());
        let ok = group.order() == q * i.order()
            && Subring::new(r, group.clone())
                .map(|s| lr.residue_size_of(&s) == q)
                .unwrap_or(false);
        g.check(ok, || i.basis());
    }

    let mut h = Clause::new("h", "a maximal subring with the residue field of R exists iff V != 0");
    h.check(same_residue_maximal.is_empty() == (cm.rho() == 0), Vec::new);
    let mut i_clause = Clause::new("i", "if V = 0 then R is the only subring with residue field F_q");
    if cm.rho() == 0 {
        for s in &subrings {
            i_clause.check(lr.residue_size_of(s) != q || *s == whole, || s.basis());
        }
    }

    let mut j = Clause::new("j", "two subrings have the same residue field iff they have the same Teichmuller set");
    let tsets: Vec<(u64, Vec<RingElement>)> = subrings
        .iter()
        .map(|s| (lr.residue_size_of(s), lr.teichmuller_set_of(s)))
        .collect();
    for (x, s1) in tsets.iter().zip(&subrings) {
        for y in &tsets {
            j.check((x.0 == y.0) == (x.1 == y.1), || s1.basis());
        }
    }
    let mut k = Clause::new("k", "every subring with residue field F lies between R_[F] and R^[F]");
    for s in &subrings {
        let rf = lr.residue_size_of(s);
        let mut deg = 0;
        let mut t = 1;
        while t < rf {
            t *= lr.data().p;
            deg += 1;
        }
        let ok = match (lr.lower_ring(deg), lr.upper_ring(deg)) {
            (Ok(lo), Ok(up)) => lo.is_subring_of(s) && s.is_subring_of(&up),
            _ => false,
        };
        k.check(ok, || s.basis());
    }

    Ok(AuditReport {
        order: r.order(),
        subrings: subrings.len(),
        ideals: ideals.len(),
        clauses: [a, b, c, d, e, f, g, h, i_clause, j, k].into_iter().map(Clause::finish).collect(),
    })
}
