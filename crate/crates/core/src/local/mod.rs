//! Invariants of finite local rings: the maximal ideal and its powers,
//! Teichmüller units, residue fields, Galois and coefficient rings, and the
//! characteristic module `V = m / (m^2 + pR)`.

mod module;
mod residue;
mod teichmuller;

pub use module::CharModule;
pub use residue::{ResidueField, Subfield};
pub use teichmuller::TeichmullerData;

use serde::Serialize;

use crate::arith::{is_prime, prime_power};
use crate::decomposition::{is_local, Locality};
use crate::error::{Result, RingError};
use crate::ring::{AdditiveSubgroup, FiniteRing, Ideal, RingElement, Subring};

/// Numerical invariants of a finite local ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub p: u64,
    /// Characteristic exponent: the characteristic is `p^N`.
    pub big_n: u32,
    /// Residue degree: `q = p^n`.
    pub n: u32,
    pub q: u64,
    pub maximal_ideal: Ideal,
    /// Least `nu` with `m^nu = 0`.
    pub nilpotency_index: u32,
    pub unit_group_order: u64,
    /// `|1 + m| = |m|`.
    pub p_part: u64,
}

/// Computes [`LocalData`]; fails with `NotLocal` for non-local rings.
pub fn local_data(r: &FiniteRing, bound: u64) -> Result<LocalData> {
    let m = match is_local(r, bound)? {
        Locality::Local { maximal_ideal } => maximal_ideal,
        Locality::NotLocal { .. } => return Err(RingError::NotLocal),
    };
    let (p, big_n) = r.characteristic_prime_power().ok_or(RingError::NotLocal)?;
    let q = r.order() / m.order();
    let (p2, n) = prime_power(q).ok_or(RingError::NotLocal)?;
    if p2 != p {
        return Err(RingError::MixedCharacteristic);
    }
    let mut nu = 1;
    let mut power = m.clone();
    while power.order() > 1 {
        power = power.product(r, &m);
        nu += 1;
    }
    Ok(LocalData {
        p,
        big_n,
        n,
        q,
        nilpotency_index: nu,
        unit_group_order: r.order() - m.order(),
        p_part: m.order(),
        maximal_ideal: m,
    })
}

/// `I^e`, with `I^0 = R`.
pub fn ideal_power(r: &FiniteRing, i: &Ideal, e: u32) -> Ideal {
    i.power(r, e)
}

/// The Galois ring of characteristic `p^N` with residue field `F_{p^n}`.
pub fn galois_ring(p: u64, big_n: u32, n: u32) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(RingError::BadParameters(format!("{p} is not prime")));
    }
    crate::presets::galois(p, big_n, n)
}

/// Report of the numerical invariants, as printed by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalReport {
    pub p: u64,
    #[serde(rename = "N")]
    pub big_n: u32,
    pub n: u32,
    pub q: u64,
    pub nilpotency_index: u32,
    pub unit_group_order: u64,
    pub rho: u32,
}

/// A finite local ring together with its invariants and Teichmüller set.
#[derive(Clone, Debug)]
pub struct LocalRing {
    ring: FiniteRing,
    data: LocalData,
    teich: TeichmullerData,
}

impl LocalRing {
    pub fn new(ring: FiniteRing, bound: u64) -> Result<Self> {
        let data = local_data(&ring, bound)?;
        let teich = TeichmullerData::compute(&ring, &data)?;
        Ok(LocalRing { ring, data, teich })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn data(&self) -> &LocalData {
        &self.data
    }

    pub fn maximal_ideal(&self) -> &Ideal {
        &self.data.maximal_ideal
    }

    pub fn q(&self) -> u64 {
        self.data.q
    }

    pub fn teichmuller(&self) -> &TeichmullerData {
        &self.teich
    }

    pub fn report(&self) -> LocalReport {
        LocalReport {
            p: self.data.p,
            big_n: self.data.big_n,
            n: self.data.n,
            q: self.data.q,
            nilpotency_index: self.data.nilpotency_index,
            unit_group_order: self.data.unit_group_order,
            rho: self.characteristic_module().rho(),
        }
    }

    /// `u^alpha`, the Teichmüller unit congruent to `u` modulo `m`.
    pub fn lift(&self, u: &RingElement) -> Result<RingElement> {
        if !self.ring.is_unit(u) {
            return Err(RingError::NotAUnit);
        }
        Ok(self.ring.pow(u, self.teich.alpha))
    }

    /// The unique `(t, m)` with `a = t + m`, `t` in the Teichmüller set and `m` in the maximal ideal.
    pub fn decompose(&self, a: &RingElement) -> (RingElement, RingElement) {
        let t = self.lift(a).unwrap_or_else(|_| self.ring.zero());
        let m = self.ring.sub(a, &t);
        (t, m)
    }

    pub fn residue_field(&self) -> ResidueField {
        ResidueField::build(self)
    }

    fn check_degree(&self, d: u32) -> Result<()> {
        if d == 0 || !self.data.n.is_multiple_of(d) {
            return Err(RingError::NotASubfieldDegree(d, self.data.n));
        }
        Ok(())
    }

    /// Teichmüller representatives of `F_{p^d}`: the `t` with `t^{p^d} = t`.
    pub fn tau_subgroup(&self, d: u32) -> Result<Vec<RingElement>> {
        self.check_degree(d)?;
        let e = self.data.p.pow(d);
        Ok(self
            .teich
            .tbar
            .iter()
            .filter(|t| self.ring.pow(t, e) == **t)
            .cloned()
            .collect())
    }

    /// `R_[F]` for `F = F_{p^d}`: the additive span of `tau(F)`, the least
    /// subring with residue field `F`.
    pub fn lower_ring(&self, d: u32) -> Result<Subring> {
        let tau = self.tau_subgroup(d)?;
        let group = AdditiveSubgroup::generated(self.ring.orders(), tau.iter());
        Subring::new(&self.ring, group)
    }

    /// `R^[F]` for `F = F_{p^d}`: the preimage of `F` in `R`, the largest
    /// subring with residue field `F`.
    pub fn upper_ring(&self, d: u32) -> Result<Subring> {
        let tau = self.tau_subgroup(d)?;
        let group = self.maximal_ideal().group().with(tau.iter());
        Subring::new(&self.ring, group)
    }

    /// True iff `m = pR`.
    pub fn is_unramified(&self) -> bool {
        Ideal::scalar(&self.ring, self.data.p as i64) == self.data.maximal_ideal
    }

    /// Image of `a -> a^{p^t}` for the least `t` with `p^t >= nu`; a copy of
    /// the residue field inside a ring of characteristic `p`.
    pub fn frobenius_field_embedding(&self) -> Result<Subring> {
        if self.data.big_n != 1 {
            return Err(RingError::CharacteristicNotP);
        }
        let p = self.data.p;
        let mut e = 1u64;
        while e < self.data.nilpotency_index as u64 {
            e *= p;
        }
        let images: Vec<RingElement> = self.ring.generators().iter().map(|g| self.ring.pow(g, e)).collect();
        let group = AdditiveSubgroup::generated(self.ring.orders(), images.iter());
        Subring::new(&self.ring, group)
    }

    /// `a = p^i u` with `u` a unit, for an unramified ring and `a != 0`.
    pub fn p_adic_unit_decomposition(&self, a: &RingElement) -> Result<(u32, RingElement)> {
        if !self.is_unramified() {
            return Err(RingError::NotUnramified);
        }
        if a.is_zero() {
            return Err(RingError::ZeroElement);
        }
        let p = self.data.p as i64;
        let mut j = 0u32;
        let mut x = a.clone();
        while !x.is_zero() {
            x = self.ring.int_mul(p, &x);
            j += 1;
        }
        let i = self.data.big_n - j;
        let scale = (self.data.p as i64).pow(i);
        let u = self
            .ring
            .elements()
            .find(|y| self.ring.is_unit(y) && self.ring.int_mul(scale, y) == *a)
            .expect("a lies in p^i R and every preimage is a unit");
        Ok((i, u))
    }

    pub fn characteristic_module(&self) -> CharModule {
        CharModule::build(self)
    }

    /// `m_S = S cap m`.
    pub fn subring_maximal_ideal(&self, s: &Subring) -> AdditiveSubgroup {
        s.group().intersect(self.maximal_ideal().group())
    }

    /// `|S / m_S|`.
    pub fn residue_size_of(&self, s: &Subring) -> u64 {
        s.order() / self.subring_maximal_ideal(s).order()
    }

    /// `T(S) cup {0}` computed inside `S` as the solutions of `t^{q_S} = t`.
    pub fn teichmuller_set_of(&self, s: &Subring) -> Vec<RingElement> {
        let qs = self.residue_size_of(s);
        s.elements().into_iter().filter(|t| self.ring.pow(t, qs) == *t).collect()
    }
}
