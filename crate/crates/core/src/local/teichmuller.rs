use std::collections::BTreeSet;

use crate::arith::{crt_pair, factorize};
use crate::error::{Result, RingError};
use crate::ring::{FiniteRing, RingElement};

use super::LocalData;

/// The Teichmüller set `T(R) cup {0}` of a local ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TeichmullerData {
    /// The `q` elements in lexicographic order; `tbar[0]` is zero.
    pub tbar: Vec<RingElement>,
    /// A generator of the cyclic group `T(R)` of order `q - 1`.
    pub generator: RingElement,
    /// Lift exponent: `alpha = 1 mod (q - 1)` and `alpha = 0 mod |1 + m|`.
    pub alpha: u64,
}

impl TeichmullerData {
    pub(super) fn compute(r: &FiniteRing, data: &LocalData) -> Result<Self> {
        let q = data.q;
        let modulus = (q - 1) * data.p_part;
        let mut alpha = crt_pair(1 % (q - 1), q - 1, 0, data.p_part).ok_or_else(|| {
            RingError::BadParameters("q - 1 and |1 + m| are not coprime".into())
        })?;
        if alpha == 0 {
            alpha = modulus;
        }
        let m = data.maximal_ideal.group();
        let mut set = BTreeSet::new();
        set.insert(r.zero());
        for u in r.elements().filter(|x| !m.contains(x)) {
            set.insert(r.pow(&u, alpha));
        }
        let tbar: Vec<RingElement> = set.into_iter().collect();
        let primes: Vec<u64> = factorize(q - 1).into_iter().map(|(l, _)| l).collect();
        let generator = tbar
            .iter()
            .skip(1)
            .find(|t| primes.iter().all(|l| r.pow(t, (q - 1) / l) != r.one()))
            .cloned()
            .unwrap_or_else(|| r.one());
        Ok(TeichmullerData {
            tbar,
            generator,
            alpha,
        })
    }

    pub fn len(&self) -> usize {
        self.tbar.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tbar.is_empty()
    }

    pub fn index_of(&self, t: &RingElement) -> Option<usize> {
        self.tbar.binary_search(t).ok()
    }

    /// `T(R)` is the only subset of `R^x cup {0}` of size `q` closed under
    /// multiplication with `t^q = t`: every such subset lies in the solution
    /// set of `t^q = t`, so it suffices that this set has exactly `q` elements.
    pub fn is_unique(&self, r: &FiniteRing, q: u64) -> bool {
        r.elements().filter(|t| r.pow(t, q) == *t).count() as u64 == q
    }
}
