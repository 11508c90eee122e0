use crate::ring::{AdditiveSubgroup, FiniteRing, Ideal, RingElement};

use super::LocalRing;

/// The characteristic module `V = m / (m^2 + pR)`, an `F_q`-vector space
/// with scalars acting through Teichmüller representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharModule {
    p: u64,
    q: u64,
    n: u32,
    maximal_ideal: AdditiveSubgroup,
    denominator: Ideal,
    basis: Vec<RingElement>,
    /// `flags[j] = D + F_q-span(basis[..j])`.
    flags: Vec<AdditiveSubgroup>,
    tbar: Vec<RingElement>,
}

impl CharModule {
    pub(super) fn build(lr: &LocalRing) -> Self {
        let r = lr.ring();
        let m = lr.maximal_ideal();
        let p = lr.data().p;
        let denominator = m.product(r, m).sum(&Ideal::scalar(r, p as i64));
        let tbar = lr.teichmuller().tbar.clone();
        let members = m.group().elements();
        let mut basis = Vec::new();
        let mut flags = vec![denominator.group().clone()];
        loop {
            let w = flags.last().unwrap();
            let Some(x) = members.iter().find(|x| !w.contains(x)) else {
                break;
            };
            let orbit: Vec<RingElement> = tbar.iter().map(|t| r.mul(t, x)).collect();
            let next = w.with(orbit.iter());
            basis.push(x.clone());
            flags.push(next);
        }
        let cm = CharModule {
            p,
            q: lr.q(),
            n: lr.data().n,
            maximal_ideal: m.group().clone(),
            denominator,
            basis,
            flags,
            tbar,
        };
        debug_assert_eq!(cm.order() as u128, (cm.q as u128).pow(cm.rho()));
        cm
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn maximal_ideal(&self) -> &AdditiveSubgroup {
        &self.maximal_ideal
    }

    /// `m^2 + pR`.
    pub fn denominator(&self) -> &Ideal {
        &self.denominator
    }

    /// Representatives in `m` of an `F_q`-basis of `V`.
    pub fn basis(&self) -> &[RingElement] {
        &self.basis
    }

    pub fn tbar(&self) -> &[RingElement] {
        &self.tbar
    }

    pub fn rho(&self) -> u32 {
        self.basis.len() as u32
    }

    /// `|V| = |m| / |m^2 + pR|`.
    pub fn order(&self) -> u64 {
        self.maximal_ideal.order() / self.denominator.order()
    }

    /// Dimension of `V` over `F_p`.
    pub fn fp_rank(&self) -> u32 {
        let mut k = 0;
        let mut v = self.order();
        while v > 1 {
            v /= self.p;
            k += 1;
        }
        k
    }

    pub fn residue_degree(&self) -> u32 {
        self.n
    }

    /// Canonical representative of the coset `[x]` of an element of `m`.
    pub fn coset(&self, x: &RingElement) -> RingElement {
        self.denominator.group().reduce(x)
    }

    /// `[t] . [x] = [t x]`.
    pub fn act(&self, r: &FiniteRing, t: &RingElement, x: &RingElement) -> RingElement {
        self.coset(&r.mul(t, x))
    }

    /// `sum_j tbar[c_j] basis[j]`.
    pub fn element(&self, r: &FiniteRing, coeffs: &[usize]) -> RingElement {
        coeffs
            .iter()
            .zip(&self.basis)
            .fold(r.zero(), |acc, (&c, b)| r.add(&acc, &r.mul(&self.tbar[c], b)))
    }

    /// Coordinates of `[x]` in the basis, as indices into `tbar`; `None` if `x` is not in `m`.
    pub fn coordinates(&self, r: &FiniteRing, x: &RingElement) -> Option<Vec<usize>> {
        if !self.maximal_ideal.contains(x) {
            return None;
        }
        let mut rest = x.clone();
        let mut coeffs = vec![0; self.basis.len()];
        for j in (0..self.basis.len()).rev() {
            let below = &self.flags[j];
            let (c, next) = self
                .tbar
                .iter()
                .enumerate()
                .map(|(c, t)| (c, r.sub(&rest, &r.mul(t, &self.basis[j]))))
                .find(|(_, y)| below.contains(y))?;
            coeffs[j] = c;
            rest = next;
        }
        Some(coeffs)
    }

    /// Preimage in `m` of the `F_q`-span of the cosets of `vectors`.
    pub fn span_preimage<'a>(&self, r: &FiniteRing, vectors: impl IntoIterator<Item = &'a RingElement>) -> AdditiveSubgroup {
        let orbit: Vec<RingElement> = vectors
            .into_iter()
            .flat_map(|v| self.tbar.iter().map(move |t| r.mul(t, v)))
            .collect();
        self.denominator.group().with(orbit.iter())
    }

    /// True iff `w` is an `F_q`-stable subgroup with `m^2 + pR <= w <= m`.
    pub fn is_stable_subspace(&self, r: &FiniteRing, w: &AdditiveSubgroup) -> bool {
        self.denominator.is_subset_of(w)
            && w.is_subgroup_of(&self.maximal_ideal)
            && w
                .basis()
                .iter()
                .all(|x| self.tbar.iter().all(|t| w.contains(&r.mul(t, x))))
    }

    /// `F_q`-dimension of a stable subgroup `w`, read from its order.
    pub fn dimension_of(&self, w: &AdditiveSubgroup) -> Option<u32> {
        let mut ratio = w.order() / self.denominator.order();
        let mut d = 0;
        while ratio > 1 {
            if !ratio.is_multiple_of(self.q) {
                return None;
            }
            ratio /= self.q;
            d += 1;
        }
        Some(d)
    }
}
