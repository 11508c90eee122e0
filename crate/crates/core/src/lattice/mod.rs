//! Subrings of finite rings: generation, conductors, the ideal/subspace
//! correspondence for local rings, maximal subrings and maximal chains,
//! and a breadth-first census used as the reference oracle.

mod audit;
mod chain;
mod hyperplane;

pub use audit::{audit_ring, AuditReport, ClauseResult};
pub use chain::{intermediate_subring, maximal_chain, satisfies_power_law, ChainDesc};
pub use hyperplane::{
    all_subspaces, count_maximal_subrings_same_residue, hyperplanes, ideal_from_subspace,
    maximal_subring_from_hyperplane, maximal_subrings_all, maximal_subrings_same_residue,
    subspace_from_ideal, MaximalKind, MaximalSubring, SubspaceDesc,
};

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::Result;
use crate::local::LocalRing;
use crate::ring::{AdditiveSubgroup, FiniteRing, Ideal, RingElement, Subring};

/// Least unital subring containing `gens`.
pub fn subring_generated_by<'a>(r: &FiniteRing, gens: impl IntoIterator<Item = &'a RingElement>) -> Subring {
    Subring::generated_by(r, gens)
}

/// The largest ideal of `r` inside `s`: `{a : a R <= S}`.
pub fn conductor(r: &FiniteRing, s: &Subring) -> Result<Ideal> {
    let s = Subring::new(r, s.group().clone())?;
    let gens = r.generators();
    let members: Vec<RingElement> = s
        .elements()
        .into_iter()
        .filter(|a| gens.iter().all(|g| s.contains(&r.mul(a, g))))
        .collect();
    Ideal::new(r, AdditiveSubgroup::generated(r.orders(), members.iter()))
}

/// Every unital subring of `r`, by breadth-first one-element extension of
/// the prime subring. Sorted by order, then by canonical basis.
pub fn enumerate_all_subrings(r: &FiniteRing, bound: u64) -> Result<Vec<Subring>> {
    r.check_bound(bound)?;
    let start = Subring::prime(r);
    let mut seen: BTreeSet<AdditiveSubgroup> = BTreeSet::new();
    seen.insert(start.group().clone());
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        for a in s.group().coset_representatives() {
            if a.is_zero() {
                continue;
            }
            let t = s.extended_by(r, &a);
            if seen.insert(t.group().clone()) {
                queue.push_back(t);
            }
        }
        out.push(s);
    }
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.group().cmp(b.group())));
    Ok(out)
}

/// Every ideal of `r`, by breadth-first extension `I -> I + xR`.
pub fn enumerate_all_ideals(r: &FiniteRing, bound: u64) -> Result<Vec<Ideal>> {
    r.check_bound(bound)?;
    let start = Ideal::zero(r);
    let mut seen: BTreeSet<AdditiveSubgroup> = BTreeSet::new();
    seen.insert(start.group().clone());
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(i) = queue.pop_front() {
        for x in i.group().coset_representatives() {
            if x.is_zero() {
                continue;
            }
            let j = i.sum(&Ideal::generated_by(r, [x].iter()));
            if seen.insert(j.group().clone()) {
                queue.push_back(j);
            }
        }
        out.push(i);
    }
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.group().cmp(b.group())));
    Ok(out)
}

/// Proper members of a census not strictly contained in another proper member.
pub fn maximal_proper(census: &[Subring], whole: &Subring) -> Vec<Subring> {
    let proper: Vec<&Subring> = census.iter().filter(|s| *s != whole).collect();
    proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.order() > s.order() && s.is_subring_of(t))
        })
        .map(|s| (*s).clone())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubringKind {
    SameResidue,
    Subfield,
    Other,
}

/// One line of the subring listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubringEntry {
    pub basis: Vec<RingElement>,
    pub order: u64,
    pub index: u64,
    /// `None` for subrings of rings that are not local.
    pub residue_field_size: Option<u64>,
    pub kind: SubringKind,
    pub is_maximal: bool,
}

/// Classifies subrings of a local ring: same residue field, a full preimage
/// `R^[F]` of a proper subfield, or neither.
pub fn classify(lr: &LocalRing, s: &Subring, is_maximal: bool) -> SubringEntry {
    let rf = lr.residue_size_of(s);
    let kind = if rf == lr.q() {
        SubringKind::SameResidue
    } else if lr.maximal_ideal().is_subset_of(s.group()) {
        SubringKind::Subfield
    } else {
        SubringKind::Other
    };
    SubringEntry {
        basis: s.basis(),
        order: s.order(),
        index: s.index(),
        residue_field_size: Some(rf),
        kind,
        is_maximal,
    }
}

/// Listing entry for a subring of a ring that is not local.
pub fn unclassified(s: &Subring, is_maximal: bool) -> SubringEntry {
    SubringEntry {
        basis: s.basis(),
        order: s.order(),
        index: s.index(),
        residue_field_size: None,
        kind: SubringKind::Other,
        is_maximal,
    }
}

/// Guard shared by the census-based checks.
pub(crate) fn require_local(r: &FiniteRing, bound: u64) -> Result<LocalRing> {
    r.check_bound(bound)?;
    LocalRing::new(r.clone(), bound)
}
