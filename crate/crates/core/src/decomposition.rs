//! Idempotents and the splitting of a finite ring into local factors.

use serde::Serialize;

use crate::arith::{factorize, gcd, prime_power};
use crate::error::{Result, RingError};
use crate::iso::find_isomorphism;
use crate::lattice::enumerate_all_subrings;
use crate::ring::{
    AdditiveSubgroup, FiniteRing, Ideal, RingDescription, RingElement, Subring, SubringPresentation,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSet {
    /// Every `e` with `e^2 = e`, lexicographically.
    pub all: Vec<RingElement>,
    /// Minimal nonzero idempotents; pairwise orthogonal and summing to `1`.
    pub atoms: Vec<RingElement>,
}

/// Exhaustive scan for solutions of `e^2 = e`.
pub fn idempotents(r: &FiniteRing, bound: u64) -> Result<IdempotentSet> {
    r.check_bound(bound)?;
    let all: Vec<RingElement> = r.elements().filter(|e| r.mul(e, e) == *e).collect();
    Ok(IdempotentSet {
        atoms: atoms_among(r, &all),
        all,
    })
}

/// Minimal nonzero members of a set of idempotents under `f <= e iff fe = f`.
fn atoms_among(r: &FiniteRing, idem: &[RingElement]) -> Vec<RingElement> {
    idem.iter()
        .filter(|e| !e.is_zero())
        .filter(|e| {
            !idem
                .iter()
                .any(|f| !f.is_zero() && f != *e && r.mul(f, e) == *f)
        })
        .cloned()
        .collect()
}

/// Corner ring `eR` with identity `e`.
fn corner(r: &FiniteRing, e: &RingElement) -> Result<SubringPresentation> {
    let gens: Vec<RingElement> = r.generators().iter().map(|g| r.mul(e, g)).collect();
    let group = AdditiveSubgroup::generated(r.orders(), gens.iter());
    SubringPresentation::new(r, &group, e)
}

#[derive(Clone, Debug)]
pub struct SylowFactor {
    pub prime: u64,
    /// The central idempotent cutting out this component.
    pub idempotent: RingElement,
    pub ring: FiniteRing,
}

/// `R = prod_p A[p]` with `A[p]` the `p`-primary part of the additive group.
pub fn sylow_decompose(r: &FiniteRing) -> Result<Vec<SylowFactor>> {
    let n = r.order();
    let mut out = Vec::new();
    for (p, a) in factorize(n) {
        let pa = p.pow(a);
        let rest = n / pa;
        // e = u * rest with u = rest^{-1} mod p^a, so e = 1 mod p^a and e = 0 mod rest
        let (_, inv, _) = crate::arith::egcd(rest as i128, pa as i128);
        let u = inv.rem_euclid(pa as i128) as u128;
        let c = ((u * rest as u128) % n as u128) as i64;
        let e = r.int_mul(c, &r.one());
        let ring = corner(r, &e)?.into_ring().with_label(format!("A[{p}]"));
        out.push(SylowFactor {
            prime: p,
            idempotent: e,
            ring,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct LocalFactor {
    pub idempotent: RingElement,
    pub ring: FiniteRing,
    presentation: SubringPresentation,
}

impl LocalFactor {
    /// Image of a factor element under the embedding `A_i -> R`.
    pub fn embed(&self, x: &RingElement) -> RingElement {
        self.presentation.lift(x)
    }

    /// `e_i x` read in the factor's coordinates.
    pub fn project(&self, r: &FiniteRing, x: &RingElement) -> RingElement {
        self.presentation
            .restrict(&r.mul(&self.idempotent, x))
            .expect("e_i x lies in e_i R")
    }
}

#[derive(Clone, Debug)]
pub struct LocalFactorization {
    pub factors: Vec<LocalFactor>,
}

impl LocalFactorization {
    pub fn rings(&self) -> Vec<FiniteRing> {
        self.factors.iter().map(|f| f.ring.clone()).collect()
    }

    pub fn atoms(&self) -> Vec<RingElement> {
        self.factors.iter().map(|f| f.idempotent.clone()).collect()
    }
}

/// Splits `r` into the corner rings `e_i R` of its idempotent atoms. Factors
/// are sorted by order, then by presentation, so the result is deterministic.
pub fn local_decompose(r: &FiniteRing, bound: u64) -> Result<LocalFactorization> {
    let idem = idempotents(r, bound)?;
    let mut factors = idem
        .atoms
        .iter()
        .map(|e| {
            let presentation = corner(r, e)?;
            Ok(LocalFactor {
                idempotent: e.clone(),
                ring: presentation.ring().clone(),
                presentation,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    factors.sort_by(|a, b| {
        a.ring
            .canonical_key()
            .cmp(&b.ring.canonical_key())
            .then_with(|| a.idempotent.cmp(&b.idempotent))
    });
    Ok(LocalFactorization { factors })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locality {
    Local { maximal_ideal: Ideal },
    /// Two non-units whose sum is a unit; `None` only for the zero ring.
    NotLocal { witness: Option<(RingElement, RingElement)> },
}

impl Locality {
    pub fn is_local(&self) -> bool {
        matches!(self, Locality::Local { .. })
    }
}

/// A finite ring is local iff its non-units are closed under addition.
pub fn is_local(r: &FiniteRing, bound: u64) -> Result<Locality> {
    r.check_bound(bound)?;
    let nonunits: Vec<RingElement> = r.elements().filter(|x| !r.is_unit(x)).collect();
    if nonunits.is_empty() {
        return Ok(Locality::NotLocal { witness: None });
    }
    let span = AdditiveSubgroup::generated(r.orders(), nonunits.iter());
    if span.order() == nonunits.len() as u64 {
        let maximal_ideal = Ideal::new(r, span).expect("non-units of a local ring form an ideal");
        return Ok(Locality::Local { maximal_ideal });
    }
    for (i, a) in nonunits.iter().enumerate() {
        for b in &nonunits[i..] {
            if r.is_unit(&r.add(a, b)) {
                return Ok(Locality::NotLocal {
                    witness: Some((a.clone(), b.clone())),
                });
            }
        }
    }
    unreachable!("non-units not closed under + but no unit sum found")
}

/// The ideal of nilpotent elements (Jacobson radical of a finite commutative ring).
pub fn nilradical(r: &FiniteRing, bound: u64) -> Result<Ideal> {
    r.check_bound(bound)?;
    let nil: Vec<RingElement> = r
        .elements()
        .filter(|x| r.pow(x, r.order()).is_zero())
        .collect();
    Ideal::new(r, AdditiveSubgroup::generated(r.orders(), nil.iter()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubringPartition {
    pub ring_atoms: Vec<RingElement>,
    pub subring_atoms: Vec<RingElement>,
    /// `blocks[j]` lists the indices `i` (into `ring_atoms`) whose atoms sum to `subring_atoms[j]`.
    pub blocks: Vec<Vec<usize>>,
}

/// For a subring `B`, groups the atoms of `R` according to the atoms of `B`,
/// and checks each local factor `B_j` sits inside `prod_{i in C_j} A_i`.
pub fn subring_partition(r: &FiniteRing, b: &Subring, bound: u64) -> Result<SubringPartition> {
    let b = Subring::new(r, b.group().clone())?;
    let idem = idempotents(r, bound)?;
    let in_b: Vec<RingElement> = idem.all.iter().filter(|e| b.contains(e)).cloned().collect();
    let subring_atoms = atoms_among(r, &in_b);
    let blocks: Vec<Vec<usize>> = subring_atoms
        .iter()
        .map(|eps| {
            (0..idem.atoms.len())
                .filter(|&i| r.mul(&idem.atoms[i], eps) == idem.atoms[i])
                .collect()
        })
        .collect();
    let mut seen = vec![0usize; idem.atoms.len()];
    for block in &blocks {
        for &i in block {
            seen[i] += 1;
        }
    }
    if seen.iter().any(|&c| c != 1) {
        return Err(RingError::NotASubring);
    }
    for (eps, block) in subring_atoms.iter().zip(&blocks) {
        for x in b.basis() {
            let y = r.mul(eps, &x);
            for (i, e) in idem.atoms.iter().enumerate() {
                if !block.contains(&i) && !r.mul(e, &y).is_zero() {
                    return Err(RingError::NotASubring);
                }
            }
        }
    }
    Ok(SubringPartition {
        ring_atoms: idem.atoms,
        subring_atoms,
        blocks,
    })
}

/// `S` is local iff `S` minus its units (which are the units of `R` inside `S`)
/// is closed under addition.
pub fn subring_is_local(r: &FiniteRing, s: &Subring) -> bool {
    let nonunits: Vec<RingElement> = s.elements().into_iter().filter(|x| !r.is_unit(x)).collect();
    if nonunits.is_empty() {
        return false;
    }
    AdditiveSubgroup::generated(r.orders(), nonunits.iter()).order() == nonunits.len() as u64
}

/// Residue sizes `q_i = |A_i| / |m_i|` of the local factors.
pub fn residue_sizes(r: &FiniteRing, bound: u64) -> Result<Vec<u64>> {
    let fac = local_decompose(r, bound)?;
    fac.factors
        .iter()
        .map(|f| match is_local(&f.ring, bound)? {
            Locality::Local { maximal_ideal } => Ok(f.ring.order() / maximal_ideal.order()),
            Locality::NotLocal { .. } => Err(RingError::NotLocal),
        })
        .collect()
}

/// Size of `F_{q_1} cap ... cap F_{q_n}`: `p^gcd(e_1..e_n)` for `q_i = p^{e_i}`.
pub fn residue_field_intersection(sizes: &[u64]) -> Result<u64> {
    let mut p0 = None;
    let mut g = 0u64;
    for &q in sizes {
        let (p, e) = prime_power(q).ok_or_else(|| RingError::BadParameters(format!("{q} is not a prime power")))?;
        match p0 {
            None => p0 = Some(p),
            Some(p1) if p1 != p => return Err(RingError::MixedCharacteristic),
            _ => {}
        }
        g = gcd(g, e as u64);
    }
    let p = p0.ok_or_else(|| RingError::BadParameters("no factors".into()))?;
    Ok(p.pow(g as u32))
}

#[derive(Clone, Debug)]
pub struct MaximalLocalSubrings {
    pub subrings: Vec<Subring>,
    /// `prod m_i`, the nilradical of the product.
    pub radical: Ideal,
    /// `|F|` for `F` the intersection of the residue fields.
    pub common_field: u64,
}

/// Oracle enumeration of the subrings of a product of local rings that are
/// maximal among local subrings. Each result is checked to contain the
/// product of the maximal ideals and to map into `F^n` in the product of
/// residue fields.
pub fn maximal_local_subrings_of_product(r: &FiniteRing, bound: u64) -> Result<MaximalLocalSubrings> {
    r.check_bound(bound)?;
    let census = enumerate_all_subrings(r, bound)?;
    let local: Vec<&Subring> = census.iter().filter(|s| subring_is_local(r, s)).collect();
    let maximal: Vec<Subring> = local
        .iter()
        .filter(|s| {
            !local
                .iter()
                .any(|t| t.order() > s.order() && s.is_subring_of(t))
        })
        .map(|s| (*s).clone())
        .collect();

    let radical = nilradical(r, bound)?;
    let sizes = residue_sizes(r, bound)?;
    let common_field = residue_field_intersection(&sizes)?;
    let fac = local_decompose(r, bound)?;
    for s in &maximal {
        if !radical.is_subset_of(s.group()) {
            return Err(RingError::BadParameters(
                "maximal local subring misses the product of maximal ideals".into(),
            ));
        }
        for x in s.elements() {
            for f in &fac.factors {
                let xi = r.mul(&f.idempotent, &x);
                let frob = r.pow(&xi, common_field);
                if !radical.contains(&r.sub(&frob, &xi)) {
                    return Err(RingError::BadParameters(
                        "maximal local subring leaves the common residue field".into(),
                    ));
                }
            }
        }
    }
    Ok(MaximalLocalSubrings {
        subrings: maximal,
        radical,
        common_field,
    })
}

/// True iff the two factor lists agree up to isomorphism and order.
pub fn same_factors(a: &[FiniteRing], b: &[FiniteRing]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let hit = (0..b.len()).find(|&j| !used[j] && find_isomorphism(x, &b[j]).is_some());
        hit.map(|j| used[j] = true).is_some()
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub order: u64,
    pub sylow: Vec<SylowEntry>,
    pub atoms: Vec<RingElement>,
    pub factors: Vec<RingDescription>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SylowEntry {
    pub prime: u64,
    pub order: u64,
    pub idempotent: RingElement,
}

pub fn factorization_report(r: &FiniteRing, bound: u64) -> Result<FactorizationReport> {
    let sylow = sylow_decompose(r)?
        .into_iter()
        .map(|f| SylowEntry {
            prime: f.prime,
            order: f.ring.order(),
            idempotent: f.idempotent,
        })
        .collect();
    let fac = local_decompose(r, bound)?;
    Ok(FactorizationReport {
        order: r.order(),
        sylow,
        atoms: fac.atoms(),
        factors: fac.factors.iter().map(|f| f.ring.description()).collect(),
    })
}
