use crate::error::{Result, RingError};

use super::{AdditiveSubgroup, FiniteRing, RingElement, SubringPresentation};

/// A unital subring, stored by its canonical additive subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subring {
    group: AdditiveSubgroup,
}

impl Subring {
    /// Checks that `group` contains `1` and is closed under products of basis pairs.
    pub fn new(ring: &FiniteRing, group: AdditiveSubgroup) -> Result<Self> {
        if group.ambient_orders() != ring.orders() || !group.contains(&ring.one()) {
            return Err(RingError::NotASubring);
        }
        let basis = group.basis();
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i..] {
                if !group.contains(&ring.mul(a, b)) {
                    return Err(RingError::NotASubring);
                }
            }
        }
        Ok(Subring { group })
    }

    /// The smallest unital subring containing `gens`.
    pub fn generated_by<'a>(ring: &FiniteRing, gens: impl IntoIterator<Item = &'a RingElement>) -> Self {
        let mut all: Vec<RingElement> = gens.into_iter().cloned().collect();
        all.push(ring.one());
        let mut g = AdditiveSubgroup::generated(ring.orders(), all.iter());
        loop {
            let basis = g.basis();
            let mut products = Vec::new();
            for (i, a) in basis.iter().enumerate() {
                for b in &basis[i..] {
                    products.push(ring.mul(a, b));
                }
            }
            let next = g.with(products.iter());
            if next == g {
                return Subring { group: g };
            }
            g = next;
        }
    }

    /// The smallest subring containing `self` and `extra`.
    pub fn extended_by(&self, ring: &FiniteRing, extra: &RingElement) -> Self {
        let basis = self.group.basis();
        Subring::generated_by(ring, basis.iter().chain([extra]))
    }

    pub fn whole(ring: &FiniteRing) -> Self {
        Subring { group: ring.whole() }
    }

    /// The subring generated by `1`, i.e. `Z/char`.
    pub fn prime(ring: &FiniteRing) -> Self {
        Subring {
            group: AdditiveSubgroup::generated(ring.orders(), [ring.one()].iter()),
        }
    }

    pub fn group(&self) -> &AdditiveSubgroup {
        &self.group
    }

    pub fn contains_one(&self) -> bool {
        true
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn index(&self) -> u64 {
        self.group.index()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.group.contains(x)
    }

    pub fn is_subring_of(&self, other: &Subring) -> bool {
        self.group.is_subgroup_of(&other.group)
    }

    pub fn elements(&self) -> Vec<RingElement> {
        self.group.elements()
    }

    pub fn basis(&self) -> Vec<RingElement> {
        self.group.basis()
    }

    pub fn present(&self, ring: &FiniteRing) -> Result<SubringPresentation> {
        SubringPresentation::new(ring, &self.group, &ring.one())
    }
}

/// An ideal, stored by its canonical additive subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    group: AdditiveSubgroup,
}

impl Ideal {
    /// Checks closure under multiplication by every ring generator.
    pub fn new(ring: &FiniteRing, group: AdditiveSubgroup) -> Result<Self> {
        if group.ambient_orders() != ring.orders() {
            return Err(RingError::NotAnIdeal);
        }
        for b in group.basis() {
            for g in ring.generators() {
                if !group.contains(&ring.mul(&b, &g)) {
                    return Err(RingError::NotAnIdeal);
                }
            }
        }
        Ok(Ideal { group })
    }

    /// The ideal generated by `gens`: the span of all `x g_i`.
    pub fn generated_by<'a>(ring: &FiniteRing, gens: impl IntoIterator<Item = &'a RingElement>) -> Self {
        let gs = ring.generators();
        let products: Vec<RingElement> = gens
            .into_iter()
            .flat_map(|x| gs.iter().map(move |g| (x, g)))
            .map(|(x, g)| ring.mul(x, g))
            .collect();
        Ideal {
            group: AdditiveSubgroup::generated(ring.orders(), products.iter()),
        }
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Ideal {
            group: AdditiveSubgroup::zero(ring.orders()),
        }
    }

    pub fn unit(ring: &FiniteRing) -> Self {
        Ideal { group: ring.whole() }
    }

    /// `c R` for an integer `c`.
    pub fn scalar(ring: &FiniteRing, c: i64) -> Self {
        let gens: Vec<RingElement> = ring.generators().iter().map(|g| ring.int_mul(c, g)).collect();
        Ideal {
            group: AdditiveSubgroup::generated(ring.orders(), gens.iter()),
        }
    }

    pub fn group(&self) -> &AdditiveSubgroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.group.contains(x)
    }

    pub fn is_subset_of(&self, other: &AdditiveSubgroup) -> bool {
        self.group.is_subgroup_of(other)
    }

    pub fn basis(&self) -> Vec<RingElement> {
        self.group.basis()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        Ideal {
            group: self.group.join(&other.group),
        }
    }

    pub fn product(&self, ring: &FiniteRing, other: &Ideal) -> Ideal {
        let a = self.basis();
        let b = other.basis();
        let products: Vec<RingElement> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| (x, y)))
            .map(|(x, y)| ring.mul(x, y))
            .collect();
        Ideal::generated_by(ring, products.iter())
    }

    /// `I^e`, with `I^0 = R`.
    pub fn power(&self, ring: &FiniteRing, e: u32) -> Ideal {
        let mut acc = Ideal::unit(ring);
        for _ in 0..e {
            acc = acc.product(ring, self);
            if acc.group.is_zero() {
                break;
            }
        }
        acc
    }
}
