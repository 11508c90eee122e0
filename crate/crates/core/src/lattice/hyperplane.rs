use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::arith::{factorize, hyperplane_count};
use crate::error::{Result, RingError};
use crate::local::{CharModule, LocalRing};
use crate::ring::{AdditiveSubgroup, FiniteRing, Ideal, RingElement, Subring};

/// An `F_q`-subspace `W` of the characteristic module, stored as its
/// preimage in `m` (a subgroup containing `m^2 + pR`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubspaceDesc {
    pub preimage: AdditiveSubgroup,
    pub dim: u32,
    pub codim: u32,
    /// Normalized functional with kernel `W`, for hyperplanes built from one.
    pub functional: Option<Vec<usize>>,
}

impl SubspaceDesc {
    /// `F_p`-generators of the preimage.
    pub fn generators(&self) -> Vec<RingElement> {
        self.preimage.basis()
    }
}

fn describe(cm: &CharModule, preimage: AdditiveSubgroup, functional: Option<Vec<usize>>) -> Option<SubspaceDesc> {
    let dim = cm.dimension_of(&preimage)?;
    Some(SubspaceDesc {
        preimage,
        dim,
        codim: cm.rho().checked_sub(dim)?,
        functional,
    })
}

/// The ideal `I` with `I / (m^2 + pR) = W`.
pub fn ideal_from_subspace(r: &FiniteRing, cm: &CharModule, w: &SubspaceDesc) -> Result<Ideal> {
    if !cm.is_stable_subspace(r, &w.preimage) {
        return Err(RingError::NotStable);
    }
    Ideal::new(r, w.preimage.clone())
}

/// `W = I / (m^2 + pR)` for an ideal `m^2 + pR <= I <= m`.
pub fn subspace_from_ideal(r: &FiniteRing, cm: &CharModule, i: &Ideal) -> Result<SubspaceDesc> {
    if !cm.is_stable_subspace(r, i.group()) {
        return Err(RingError::NotStable);
    }
    describe(cm, i.group().clone(), None).ok_or(RingError::NotStable)
}

/// Every `F_q`-subspace of `V`, sorted by dimension then preimage.
pub fn all_subspaces(r: &FiniteRing, cm: &CharModule) -> Vec<SubspaceDesc> {
    let start = cm.denominator().group().clone();
    let members = cm.maximal_ideal().elements();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let reps: BTreeSet<RingElement> = members.iter().map(|x| w.reduce(x)).filter(|x| !x.is_zero()).collect();
        for x in reps {
            let next = w.join(&cm.span_preimage(r, [&x]));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<SubspaceDesc> = seen
        .into_iter()
        .map(|w| describe(cm, w, None).expect("stable subgroups have F_q-dimension"))
        .collect();
    out.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.preimage.cmp(&b.preimage)));
    out
}

/// Normalized nonzero functionals on `F_q^rho` (first nonzero entry is one),
/// as index vectors into the Teichmüller set, in a fixed order.
fn normalized_functionals(rho: usize, q: usize, one: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..rho {
        let free = rho - s - 1;
        let total = q.pow(free as u32);
        for mut code in 0..total {
            let mut lambda = vec![0; rho];
            lambda[s] = one;
            for j in (s + 1..rho).rev() {
                lambda[j] = code % q;
                code /= q;
            }
            out.push(lambda);
        }
    }
    out
}

/// The `(q^rho - 1)/(q - 1)` hyperplanes of `V`, one per normalized functional.
pub fn hyperplanes(lr: &LocalRing, cm: &CharModule) -> Vec<SubspaceDesc> {
    let r = lr.ring();
    let tbar = cm.tbar();
    let one = lr.teichmuller().index_of(&r.one()).expect("one is a Teichmüller unit");
    let basis = cm.basis();
    normalized_functionals(basis.len(), tbar.len(), one)
        .into_iter()
        .map(|lambda| {
            let s = lambda.iter().position(|&c| c != 0).unwrap();
            // kernel spanned by b_j - lambda_j b_s for j != s
            let vectors: Vec<RingElement> = (0..basis.len())
                .filter(|&j| j != s)
                .map(|j| r.sub(&basis[j], &r.mul(&tbar[lambda[j]], &basis[s])))
                .collect();
            let pre = cm.span_preimage(r, vectors.iter());
            describe(cm, pre, Some(lambda)).expect("kernel of a functional")
        })
        .collect()
}

/// `S = T(R) cup {0} + I` for the ideal `I` of a hyperplane `W`.
pub fn maximal_subring_from_hyperplane(lr: &LocalRing, cm: &CharModule, w: &SubspaceDesc) -> Result<Subring> {
    let r = lr.ring();
    if cm.rho() == 0 || w.codim != 1 {
        return Err(RingError::NotHyperplane);
    }
    let ideal = ideal_from_subspace(r, cm, w)?;
    let group = ideal.group().with(cm.tbar().iter());
    let s = Subring::new(r, group)?;
    if s.order() != lr.q() * ideal.order() || s.index() != lr.q() {
        return Err(RingError::NotASubring);
    }
    Ok(s)
}

/// One maximal subring with the residue field of `R` per hyperplane of `V`.
pub fn maximal_subrings_same_residue(lr: &LocalRing) -> Result<Vec<Subring>> {
    let cm = lr.characteristic_module();
    hyperplanes(lr, &cm)
        .iter()
        .map(|w| maximal_subring_from_hyperplane(lr, &cm, w))
        .collect()
}

/// `(q^rho - 1) / (q - 1)`.
pub fn count_maximal_subrings_same_residue(q: u64, rho: u32) -> u128 {
    hyperplane_count(q, rho)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MaximalKind {
    /// Same residue field `F_q`; index `q`.
    SameResidue,
    /// Preimage of the maximal subfield `F_{p^degree}`; index `q / p^degree`.
    Subfield { degree: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSubring {
    pub subring: Subring,
    pub kind: MaximalKind,
    /// `|R| / |S|`.
    pub index: u64,
}

/// Both kinds of maximal subrings of a local ring: one per hyperplane of
/// `V`, and one preimage `R^[F]` per maximal subfield `F` (one per prime
/// divisor of `n`).
pub fn maximal_subrings_all(lr: &LocalRing) -> Result<Vec<MaximalSubring>> {
    let q = lr.q();
    let mut out: Vec<MaximalSubring> = maximal_subrings_same_residue(lr)?
        .into_iter()
        .map(|s| MaximalSubring {
            index: s.index(),
            subring: s,
            kind: MaximalKind::SameResidue,
        })
        .collect();
    let (p, n) = (lr.data().p, lr.data().n);
    for (l, _) in factorize(n as u64) {
        let degree = n / l as u32;
        let s = lr.upper_ring(degree)?;
        let index = s.index();
        if index != q / p.pow(degree) {
            return Err(RingError::NotASubring);
        }
        out.push(MaximalSubring {
            subring: s,
            kind: MaximalKind::Subfield { degree },
            index,
        });
    }
    Ok(out)
}
