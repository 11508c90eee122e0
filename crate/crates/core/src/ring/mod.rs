//! Finite commutative unital rings in additive presentation.
//!
//! A ring is described by the additive orders `d_1..d_k` of generators
//! `g_1..g_k` (so the additive group is `Z/d_1 + ... + Z/d_k`), the products
//! `g_i * g_j` as coordinate vectors, and the coordinates of `1`.
//!
//! Multiplication of arbitrary elements is the bilinear extension of the
//! generator table. The extension is well defined exactly when
//! `d_i * (g_i g_j) = 0` for all `i, j`, and because every ring axiom is
//! multilinear in its arguments, checking commutativity, associativity and the
//! identity law on generators implies them for all elements. Validation in
//! [`FiniteRing::new`] therefore only ever touches generator tuples.

mod presentation;
mod quotient;
mod subgroup;
mod substructures;

pub use presentation::{CyclicDecomposition, SubringPresentation};
pub use quotient::QuotientRing;
pub use subgroup::AdditiveSubgroup;
pub use substructures::{Ideal, Subring};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm, prime_power};
use crate::error::{Result, RingError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElement {
    coords: Vec<u64>,
}

impl RingElement {
    pub fn from_coords(coords: Vec<u64>) -> Self {
        RingElement { coords }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The JSON interchange form of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDescription {
    pub orders: Vec<u64>,
    pub one: Vec<u64>,
    pub mul: Vec<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    orders: Vec<u64>,
    table: Vec<Vec<RingElement>>,
    one: RingElement,
    label: Option<String>,
    size: u64,
}

impl FiniteRing {
    /// Builds and validates a ring from generator orders, the generator
    /// product table and the coordinates of the identity.
    pub fn new(orders: Vec<u64>, table: Vec<Vec<Vec<u64>>>, one: Vec<u64>) -> Result<Self> {
        let k = orders.len();
        if let Some(i) = orders.iter().position(|&d| d < 2) {
            return Err(RingError::IllFormedTable(format!(
                "generator {i} has additive order {} (must be at least 2)",
                orders[i]
            )));
        }
        let size = orders
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| RingError::IllFormedTable("ring order overflows u64".into()))?;
        if orders.iter().any(|&d| d > u32::MAX as u64) {
            return Err(RingError::IllFormedTable(
                "generator orders must fit in 32 bits".into(),
            ));
        }
        let check_vec = |v: &[u64], what: &str| -> Result<()> {
            if v.len() != k {
                return Err(RingError::IllFormedTable(format!(
                    "{what} has length {} but there are {k} generators",
                    v.len()
                )));
            }
            if let Some(l) = (0..k).find(|&l| v[l] >= orders[l]) {
                return Err(RingError::IllFormedTable(format!(
                    "{what}: coordinate {l} is {} but the order is {}",
                    v[l], orders[l]
                )));
            }
            Ok(())
        };
        check_vec(&one, "one")?;
        if table.len() != k || table.iter().any(|row| row.len() != k) {
            return Err(RingError::IllFormedTable(format!(
                "multiplication table must be {k}x{k}"
            )));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                check_vec(entry, &format!("mul[{i}][{j}]"))?;
            }
        }
        for i in 0..k {
            for j in 0..k {
                if table[i][j] != table[j][i] {
                    return Err(RingError::NotCommutative(i, j));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                // d_i * (g_i g_j) must vanish for the bilinear extension to exist.
                let ok = (0..k).all(|l| {
                    (orders[i] as u128 * table[i][j][l] as u128).is_multiple_of(orders[l] as u128)
                });
                if !ok {
                    return Err(RingError::IllFormedTable(format!(
                        "order of generator {i} does not annihilate mul[{i}][{j}]"
                    )));
                }
            }
        }
        let ring = FiniteRing {
            table: table
                .into_iter()
                .map(|row| row.into_iter().map(RingElement::from_coords).collect())
                .collect(),
            one: RingElement::from_coords(one),
            orders,
            label: None,
            size,
        };
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let left = ring.mul(&ring.table[i][j], &ring.generator(l));
                    let right = ring.mul(&ring.generator(i), &ring.table[j][l]);
                    if left != right {
                        return Err(RingError::NotAssociative(i, j, l));
                    }
                }
            }
        }
        for i in 0..k {
            let g = ring.generator(i);
            if ring.mul(&ring.one, &g) != g {
                return Err(RingError::NoIdentity(i));
            }
        }
        Ok(ring)
    }

    pub fn from_description(desc: RingDescription) -> Result<Self> {
        let label = desc.label;
        Ok(FiniteRing::new(desc.orders, desc.mul, desc.one)?.with_label_opt(label))
    }

    pub fn description(&self) -> RingDescription {
        RingDescription {
            orders: self.orders.clone(),
            one: self.one.coords.clone(),
            mul: self
                .table
                .iter()
                .map(|row| row.iter().map(|e| e.coords.clone()).collect())
                .collect(),
            label: self.label.clone(),
        }
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, LoadError> {
        let desc: RingDescription = serde_json::from_str(text)?;
        Ok(FiniteRing::from_description(desc)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.description()).expect("ring description serializes")
    }

    pub fn with_label(self, label: impl Into<String>) -> Self {
        self.with_label_opt(Some(label.into()))
    }

    fn with_label_opt(mut self, label: Option<String>) -> Self {
        self.label = label;
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// `|R|`.
    pub fn order(&self) -> u64 {
        self.size
    }

    pub fn table(&self) -> &[Vec<RingElement>] {
        &self.table
    }

    pub fn one(&self) -> RingElement {
        self.one.clone()
    }

    pub fn zero(&self) -> RingElement {
        RingElement::from_coords(vec![0; self.rank()])
    }

    pub fn generator(&self, i: usize) -> RingElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        RingElement::from_coords(c)
    }

    pub fn generators(&self) -> Vec<RingElement> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    /// Validated element constructor.
    pub fn element(&self, coords: Vec<u64>) -> Result<RingElement> {
        if coords.len() != self.rank() || coords.iter().zip(&self.orders).any(|(c, d)| c >= d) {
            return Err(RingError::IllFormedTable(format!(
                "{coords:?} is not a reduced coordinate vector for orders {:?}",
                self.orders
            )));
        }
        Ok(RingElement::from_coords(coords))
    }

    /// Reduces arbitrary signed coordinates modulo the generator orders.
    pub fn element_from_ints(&self, coords: &[i128]) -> RingElement {
        RingElement::from_coords(
            coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &d)| c.rem_euclid(d as i128) as u64)
                .collect(),
        )
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement::from_coords(
            a.coords
                .iter()
                .zip(&b.coords)
                .zip(&self.orders)
                .map(|((&x, &y), &d)| (x + y) % d)
                .collect(),
        )
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement::from_coords(
            a.coords
                .iter()
                .zip(&b.coords)
                .zip(&self.orders)
                .map(|((&x, &y), &d)| (x + d - y) % d)
                .collect(),
        )
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement::from_coords(
            a.coords
                .iter()
                .zip(&self.orders)
                .map(|(&x, &d)| (d - x) % d)
                .collect(),
        )
    }

    /// `c * a` for an integer `c`.
    pub fn int_mul(&self, c: i64, a: &RingElement) -> RingElement {
        RingElement::from_coords(
            a.coords
                .iter()
                .zip(&self.orders)
                .map(|(&x, &d)| {
                    let c = (c as i128).rem_euclid(d as i128) as u128;
                    ((c * x as u128) % d as u128) as u64
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let k = self.rank();
        let mut acc = vec![0u128; k];
        for (i, &ai) in a.coords.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coords.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = ai as u128 * bj as u128;
                let entry = &self.table[i][j].coords;
                for l in 0..k {
                    if entry[l] != 0 {
                        let d = self.orders[l] as u128;
                        acc[l] = (acc[l] + (c % d) * entry[l] as u128) % d;
                    }
                }
            }
        }
        RingElement::from_coords(acc.into_iter().map(|x| x as u64).collect())
    }

    pub fn pow(&self, a: &RingElement, mut e: u64) -> RingElement {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    pub fn additive_order(&self, a: &RingElement) -> u64 {
        a.coords
            .iter()
            .zip(&self.orders)
            .fold(1, |acc, (&x, &d)| lcm(acc, d / gcd(d, x)))
    }

    /// The additive order of `1`.
    pub fn characteristic(&self) -> u64 {
        self.additive_order(&self.one)
    }

    /// `(p, N)` with characteristic `p^N`, when the characteristic is a prime power.
    pub fn characteristic_prime_power(&self) -> Option<(u64, u32)> {
        prime_power(self.characteristic())
    }

    /// All elements in lexicographic order of coordinate vectors.
    pub fn elements(&self) -> ElementIter<'_> {
        ElementIter {
            orders: &self.orders,
            next: Some(vec![0; self.rank()]),
        }
    }

    /// Position of `a` in [`FiniteRing::elements`].
    pub fn index_of(&self, a: &RingElement) -> u64 {
        a.coords
            .iter()
            .zip(&self.orders)
            .fold(0, |acc, (&x, &d)| acc * d + x)
    }

    pub fn element_at(&self, mut index: u64) -> RingElement {
        let mut coords = vec![0; self.rank()];
        for l in (0..self.rank()).rev() {
            coords[l] = index % self.orders[l];
            index /= self.orders[l];
        }
        RingElement::from_coords(coords)
    }

    pub fn check_bound(&self, bound: u64) -> Result<()> {
        if self.size > bound {
            Err(RingError::ScanBoundExceeded {
                size: self.size,
                bound,
            })
        } else {
            Ok(())
        }
    }

    /// The whole ring as an additive subgroup of itself.
    pub fn whole(&self) -> AdditiveSubgroup {
        AdditiveSubgroup::whole(&self.orders)
    }

    /// `x` is a unit iff `x R = R`, i.e. the products `x g_i` span the ring.
    pub fn is_unit(&self, x: &RingElement) -> bool {
        let span = AdditiveSubgroup::generated(
            &self.orders,
            (0..self.rank()).map(|i| self.mul(x, &self.generator(i))).collect::<Vec<_>>().iter(),
        );
        span.order() == self.size
    }

    /// Inverse by powering inside the finite cyclic group generated by `x`.
    pub fn inverse(&self, x: &RingElement) -> Result<RingElement> {
        if !self.is_unit(x) {
            return Err(RingError::NotAUnit);
        }
        let mut y = x.clone();
        let mut prev = self.one();
        // x^m = 1 for m = multiplicative order; x^{-1} = x^{m-1}.
        while y != self.one {
            prev = y.clone();
            y = self.mul(&y, x);
        }
        Ok(prev)
    }

    pub fn multiplicative_order(&self, x: &RingElement) -> Option<u64> {
        if !self.is_unit(x) {
            return None;
        }
        let mut y = x.clone();
        let mut n = 1;
        while y != self.one {
            y = self.mul(&y, x);
            n += 1;
        }
        Some(n)
    }

    /// Sort key used to order isomorphic-looking factors deterministically.
    pub fn canonical_key(&self) -> (u64, Vec<u64>, Vec<Vec<Vec<u64>>>, Vec<u64>) {
        let d = self.description();
        (self.size, d.orders, d.mul, d.one)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l} (order {})", self.size),
            None => write!(f, "ring of order {} on orders {:?}", self.size, self.orders),
        }
    }
}

pub struct ElementIter<'a> {
    orders: &'a [u64],
    next: Option<Vec<u64>>,
}

impl Iterator for ElementIter<'_> {
    type Item = RingElement;

    fn next(&mut self) -> Option<RingElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut l = succ.len();
        loop {
            if l == 0 {
                self.next = None;
                break;
            }
            l -= 1;
            succ[l] += 1;
            if succ[l] < self.orders[l] {
                self.next = Some(succ);
                break;
            }
            succ[l] = 0;
        }
        Some(RingElement::from_coords(current))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("invalid ring JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> FiniteRing {
        FiniteRing::new(vec![4], vec![vec![vec![1]]], vec![1]).unwrap()
    }

    fn dual_f2() -> FiniteRing {
        FiniteRing::new(
            vec![2, 2],
            vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
            vec![1, 0],
        )
        .unwrap()
    }

    fn r22() -> FiniteRing {
        // Z/4[x]/(x^2+x+1): x^2 = -1 - x = 3 + 3x
        FiniteRing::new(
            vec![4, 4],
            vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![3, 3]]],
            vec![1, 0],
        )
        .unwrap()
    }

    fn el(c: &[u64]) -> RingElement {
        RingElement::from_coords(c.to_vec())
    }

    #[test]
    fn basic_arithmetic() {
        assert_eq!(z4().add(&el(&[3]), &el(&[2])), el(&[1]));
        assert_eq!(dual_f2().mul(&el(&[0, 1]), &el(&[0, 1])), el(&[0, 0]));
        assert_eq!(r22().mul(&el(&[0, 1]), &el(&[0, 1])), el(&[3, 3]));
        assert_eq!(z4().int_mul(-1, &el(&[1])), el(&[3]));
        assert_eq!(r22().neg(&el(&[1, 2])), el(&[3, 2]));
    }

    #[test]
    fn r22_exhaustive_axioms() {
        let r = r22();
        let elems: Vec<_> = r.elements().collect();
        assert_eq!(elems.len(), 16);
        for a in &elems {
            assert_eq!(r.mul(&r.one(), a), *a);
            for b in &elems {
                assert_eq!(r.mul(a, b), r.mul(b, a));
                for c in &elems {
                    assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
                    assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn characteristic_examples() {
        let z8 = FiniteRing::new(vec![8], vec![vec![vec![1]]], vec![1]).unwrap();
        let z6 = FiniteRing::new(vec![6], vec![vec![vec![1]]], vec![1]).unwrap();
        assert_eq!(z8.characteristic(), 8);
        assert_eq!(dual_f2().characteristic(), 2);
        assert_eq!(z6.characteristic(), 6);
        assert_eq!(z6.characteristic_prime_power(), None);
    }

    #[test]
    fn validation_errors() {
        let err = FiniteRing::new(
            vec![2, 2],
            vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0], vec![0, 0]]],
            vec![1, 0],
        )
        .unwrap_err();
        assert_eq!(err, RingError::NotCommutative(0, 1));

        let err = FiniteRing::new(vec![4], vec![vec![vec![1]]], vec![2]).unwrap_err();
        assert_eq!(err, RingError::NoIdentity(0));

        let err = FiniteRing::new(vec![4], vec![vec![vec![1]]], vec![5]).unwrap_err();
        assert!(matches!(err, RingError::IllFormedTable(_)));

        // x^2 = 1 + x over F_2 with generators 1, x but g1*g1 = x breaks 1*x = x*1 consistency.
        let err = FiniteRing::new(
            vec![2, 2],
            vec![vec![vec![0, 1], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]],
            vec![1, 0],
        )
        .unwrap_err();
        assert!(matches!(err, RingError::NotAssociative(..) | RingError::NoIdentity(_)));

        // a product table that is not bilinear-compatible: g0 of order 2, g0*g0 = g1 of order 4 with odd coeff
        let err = FiniteRing::new(
            vec![2, 4],
            vec![vec![vec![0, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]],
            vec![1, 0],
        )
        .unwrap_err();
        assert!(matches!(err, RingError::IllFormedTable(_)));
    }

    #[test]
    fn json_round_trip() {
        let r = r22().with_label("R(2,2)");
        let back = FiniteRing::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let bad = r#"{"orders":[4],"one":[1],"mul":[[[3]]]}"#;
        assert!(FiniteRing::from_json(bad).is_err());
    }

    #[test]
    fn element_indexing() {
        let r = r22();
        for (i, e) in r.elements().enumerate() {
            assert_eq!(r.index_of(&e), i as u64);
            assert_eq!(r.element_at(i as u64), e);
        }
    }

    #[test]
    fn units_and_inverses() {
        let r = r22();
        let units: Vec<_> = r.elements().filter(|x| r.is_unit(x)).collect();
        assert_eq!(units.len(), 12);
        for u in &units {
            let v = r.inverse(u).unwrap();
            assert_eq!(r.mul(u, &v), r.one());
        }
        assert_eq!(r.inverse(&el(&[2, 0])), Err(RingError::NotAUnit));
        assert_eq!(r.multiplicative_order(&el(&[0, 1])), Some(3));
    }
}
