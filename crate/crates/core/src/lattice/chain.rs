use crate::error::{Result, RingError};
use crate::local::LocalRing;
use crate::ring::{FiniteRing, Ideal, Subring};

use super::hyperplane::maximal_subrings_same_residue;

/// A descending chain `R = R_0 > R_1 > ... > R_l` of subrings with the
/// residue field of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDesc {
    pub rings: Vec<Subring>,
    /// `indices[k] = [R_k : R_{k+1}]`.
    pub indices: Vec<u64>,
}

impl ChainDesc {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Greedy descent through the first same-residue maximal subring at each
/// step, until the characteristic module vanishes. Each step is verified to
/// have index `q`, and `p^k R <= R_k` is checked along the way.
pub fn maximal_chain(lr: &LocalRing) -> Result<ChainDesc> {
    let r = lr.ring();
    let (p, q) = (lr.data().p, lr.q());
    let mut rings = vec![Subring::whole(r)];
    let mut indices = Vec::new();
    loop {
        let current = rings.last().unwrap();
        let pres = current.present(r)?;
        let local = LocalRing::new(pres.ring().clone(), u64::MAX)?;
        let Some(next) = maximal_subrings_same_residue(&local)?.into_iter().next() else {
            break;
        };
        let lifted = Subring::new(r, pres.lift_subgroup(next.group()))?;
        let index = current.order() / lifted.order();
        if index != q {
            return Err(RingError::NotASubring);
        }
        indices.push(index);
        rings.push(lifted);
    }
    let chain = ChainDesc { rings, indices };
    if !satisfies_power_law(r, p, &chain) {
        return Err(RingError::NotASubring);
    }
    Ok(chain)
}

/// `p^k R <= R_k` for every `k`.
pub fn satisfies_power_law(r: &FiniteRing, p: u64, chain: &ChainDesc) -> bool {
    let c = r.characteristic();
    let mut pk = 1 % c;
    chain.rings.iter().all(|rk| {
        let ok = Ideal::scalar(r, pk as i64).is_subset_of(rk.group());
        pk = pk * p % c;
        ok
    })
}

/// A subring strictly between `inner` and `outer`, if one exists.
pub fn intermediate_subring(r: &FiniteRing, outer: &Subring, inner: &Subring) -> Option<Subring> {
    if !inner.is_subring_of(outer) || inner == outer {
        return None;
    }
    outer
        .group()
        .elements()
        .into_iter()
        .filter(|a| !inner.contains(a))
        .map(|a| inner.extended_by(r, &a))
        .find(|t| t != outer)
}
