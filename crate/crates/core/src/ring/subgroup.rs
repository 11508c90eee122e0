//! Canonical form for subgroups of `Z/d_1 + ... + Z/d_k`.
//!
//! A subgroup `H` is identified with the lattice `L = pi^{-1}(H)` in `Z^k`,
//! which always contains `d_1 Z + ... + d_k Z`. We store the Hermite normal
//! form of `L`: `k` upper-triangular rows, row `i` has pivot `h_i` at
//! coordinate `i` with `h_i | d_i`, and every entry above a pivot `h_j` lies
//! in `[0, h_j)`. The form is unique, so two subgroups are equal iff their
//! rows are equal. Rows with `h_i = d_i` carry no information about `H` and
//! are omitted from [`AdditiveSubgroup::basis`].

use crate::arith::egcd;

use super::presentation::CyclicDecomposition;
use super::RingElement;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdditiveSubgroup {
    orders: Vec<u64>,
    rows: Vec<Vec<u64>>,
}

impl AdditiveSubgroup {
    pub fn zero(orders: &[u64]) -> Self {
        let k = orders.len();
        let rows = (0..k)
            .map(|i| {
                let mut r = vec![0; k];
                r[i] = orders[i];
                r
            })
            .collect();
        AdditiveSubgroup {
            orders: orders.to_vec(),
            rows,
        }
    }

    pub fn whole(orders: &[u64]) -> Self {
        let k = orders.len();
        let rows = (0..k)
            .map(|i| {
                let mut r = vec![0; k];
                r[i] = 1;
                r
            })
            .collect();
        AdditiveSubgroup {
            orders: orders.to_vec(),
            rows,
        }
    }

    pub fn generated<'a>(orders: &[u64], gens: impl IntoIterator<Item = &'a RingElement>) -> Self {
        let mut g = AdditiveSubgroup::zero(orders);
        g.absorb_all(gens);
        g
    }

    /// The subgroup generated by `self` and `gens`.
    pub fn with<'a>(&self, gens: impl IntoIterator<Item = &'a RingElement>) -> Self {
        let mut g = self.clone();
        g.absorb_all(gens);
        g
    }

    pub fn join(&self, other: &AdditiveSubgroup) -> Self {
        self.with(other.basis().iter())
    }

    fn absorb_all<'a>(&mut self, gens: impl IntoIterator<Item = &'a RingElement>) {
        let mut changed = false;
        for g in gens {
            if !self.contains(g) {
                self.absorb(g.coords());
                changed = true;
            }
        }
        if changed {
            self.normalize();
        }
    }

    fn absorb(&mut self, v: &[u64]) {
        let k = self.orders.len();
        debug_assert_eq!(v.len(), k);
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for i in 0..k {
            let d = self.orders[i] as i128;
            v[i] = v[i].rem_euclid(d);
            if v[i] == 0 {
                continue;
            }
            let h = self.rows[i][i] as i128;
            let vi = v[i];
            if vi % h == 0 {
                let q = vi / h;
                for j in i..k {
                    v[j] -= q * self.rows[i][j] as i128;
                }
            } else {
                // Unimodular update of (row, v) so the new pivot is gcd(h, v_i).
                let (g, a, b) = egcd(h, vi);
                let row: Vec<i128> = self.rows[i].iter().map(|&x| x as i128).collect();
                let (hg, vg) = (h / g, vi / g);
                let mut new_row = vec![0u64; k];
                new_row[i] = g as u64;
                for j in i + 1..k {
                    let dj = self.orders[j] as i128;
                    new_row[j] = (a * row[j] + b * v[j]).rem_euclid(dj) as u64;
                    v[j] = hg * v[j] - vg * row[j];
                }
                v[i] = 0;
                self.rows[i] = new_row;
            }
            for j in i + 1..k {
                v[j] = v[j].rem_euclid(self.orders[j] as i128);
            }
        }
    }

    fn normalize(&mut self) {
        let k = self.orders.len();
        for j in 0..k {
            let h = self.rows[j][j];
            for i in 0..j {
                let q = self.rows[i][j] / h;
                if q == 0 {
                    continue;
                }
                let pivot_row = self.rows[j].clone();
                let row = &mut self.rows[i];
                row[j] -= q * h;
                for l in j + 1..k {
                    let d = self.orders[l] as i128;
                    row[l] = (row[l] as i128 - q as i128 * pivot_row[l] as i128).rem_euclid(d) as u64;
                }
            }
        }
    }

    pub fn ambient_orders(&self) -> &[u64] {
        &self.orders
    }

    /// Full Hermite rows, including the trivial ones.
    pub fn hermite_rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<u64> {
        (0..self.orders.len()).map(|i| self.rows[i][i]).collect()
    }

    /// Canonical echelon basis: the Hermite rows with a nontrivial pivot,
    /// reduced modulo the generator orders.
    pub fn basis(&self) -> Vec<RingElement> {
        (0..self.orders.len())
            .filter(|&i| self.rows[i][i] < self.orders[i])
            .map(|i| RingElement::from_coords(self.rows[i].clone()))
            .collect()
    }

    /// `|H| = prod d_i / h_i`.
    pub fn order(&self) -> u64 {
        (0..self.orders.len())
            .map(|i| self.orders[i] / self.rows[i][i])
            .product()
    }

    /// `[ambient : H]`.
    pub fn index(&self) -> u64 {
        self.pivots().iter().product()
    }

    pub fn is_zero(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        let k = self.orders.len();
        let mut v: Vec<i128> = x.coords().iter().map(|&c| c as i128).collect();
        for i in 0..k {
            let vi = v[i].rem_euclid(self.orders[i] as i128);
            let h = self.rows[i][i] as i128;
            if vi % h != 0 {
                return false;
            }
            let q = vi / h;
            for j in i + 1..k {
                v[j] -= q * self.rows[i][j] as i128;
            }
        }
        true
    }

    pub fn is_subgroup_of(&self, other: &AdditiveSubgroup) -> bool {
        self.basis().iter().all(|b| other.contains(b))
    }

    /// Canonical representative of the coset `x + H`: the unique member with
    /// coordinate `i` in `[0, h_i)`.
    pub fn reduce(&self, x: &RingElement) -> RingElement {
        let k = self.orders.len();
        let mut v: Vec<i128> = x.coords().iter().map(|&c| c as i128).collect();
        let mut out = vec![0u64; k];
        for i in 0..k {
            let vi = v[i].rem_euclid(self.orders[i] as i128);
            let h = self.rows[i][i] as i128;
            out[i] = (vi % h) as u64;
            let q = vi / h;
            for j in i + 1..k {
                v[j] -= q * self.rows[i][j] as i128;
            }
        }
        RingElement::from_coords(out)
    }

    /// One canonical representative per coset of `H` in the ambient group,
    /// in lexicographic order.
    pub fn coset_representatives(&self) -> Vec<RingElement> {
        let pivots = self.pivots();
        mixed_radix(&pivots)
            .into_iter()
            .map(RingElement::from_coords)
            .collect()
    }

    /// All elements of `H`, in lexicographic order.
    pub fn elements(&self) -> Vec<RingElement> {
        let k = self.orders.len();
        let ranges: Vec<u64> = (0..k).map(|i| self.orders[i] / self.rows[i][i]).collect();
        let mut out: Vec<RingElement> = mixed_radix(&ranges)
            .into_iter()
            .map(|c| {
                let mut x = vec![0u128; k];
                for (i, &ci) in c.iter().enumerate() {
                    if ci == 0 {
                        continue;
                    }
                    for (l, xl) in x.iter_mut().enumerate().skip(i) {
                        let d = self.orders[l] as u128;
                        *xl = (*xl + ci as u128 * self.rows[i][l] as u128) % d;
                    }
                }
                RingElement::from_coords(x.into_iter().map(|y| y as u64).collect())
            })
            .collect();
        out.sort();
        out
    }

    pub fn intersect(&self, other: &AdditiveSubgroup) -> AdditiveSubgroup {
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let common: Vec<RingElement> = small
            .elements()
            .into_iter()
            .filter(|x| large.contains(x))
            .collect();
        AdditiveSubgroup::generated(&self.orders, common.iter())
    }

    /// Presentation of `H` as a direct sum of cyclic groups.
    pub fn cyclic_decomposition(&self) -> CyclicDecomposition {
        CyclicDecomposition::of(self)
    }
}

/// All vectors `c` with `0 <= c_i < ranges[i]`, lexicographically.
fn mixed_radix(ranges: &[u64]) -> Vec<Vec<u64>> {
    let total: u64 = ranges.iter().product();
    let mut out = Vec::with_capacity(total as usize);
    let mut cur = vec![0u64; ranges.len()];
    for _ in 0..total {
        out.push(cur.clone());
        for l in (0..ranges.len()).rev() {
            cur[l] += 1;
            if cur[l] < ranges[l] {
                break;
            }
            cur[l] = 0;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn el(c: &[u64]) -> RingElement {
        RingElement::from_coords(c.to_vec())
    }

    /// Additive closure by brute force, the independent reference.
    fn closure(orders: &[u64], gens: &[RingElement]) -> BTreeSet<RingElement> {
        let mut set = BTreeSet::new();
        set.insert(el(&vec![0; orders.len()]));
        loop {
            let mut grown = set.clone();
            for a in &set {
                for g in gens {
                    let s: Vec<u64> = a
                        .coords()
                        .iter()
                        .zip(g.coords())
                        .zip(orders)
                        .map(|((x, y), d)| (x + y) % d)
                        .collect();
                    grown.insert(el(&s));
                }
            }
            if grown.len() == set.len() {
                return set;
            }
            set = grown;
        }
    }

    #[test]
    fn small_examples() {
        let z4 = AdditiveSubgroup::generated(&[4], [el(&[2])].iter());
        assert_eq!(z4.order(), 2);
        assert_eq!(z4.elements(), vec![el(&[0]), el(&[2])]);

        let h = AdditiveSubgroup::generated(&[4, 4], [el(&[1, 0]), el(&[0, 2])].iter());
        assert_eq!(h.order(), 8);
        assert_eq!(h.basis(), vec![el(&[1, 0]), el(&[0, 2])]);

        // a non-split subgroup: <(1,1)> in Z/2 + Z/4
        let g = AdditiveSubgroup::generated(&[2, 4], [el(&[1, 1])].iter());
        assert_eq!(g.order(), 4);
        assert!(g.contains(&el(&[0, 2])));
        assert!(!g.contains(&el(&[0, 1])));
    }

    #[test]
    fn whole_and_zero() {
        let w = AdditiveSubgroup::whole(&[2, 3]);
        assert_eq!(w.order(), 6);
        assert_eq!(w, AdditiveSubgroup::generated(&[2, 3], [el(&[1, 1])].iter()));
        assert!(AdditiveSubgroup::zero(&[2, 3]).is_zero());
        assert!(AdditiveSubgroup::zero(&[2, 3]).basis().is_empty());
    }

    fn arb_case() -> impl Strategy<Value = (Vec<u64>, Vec<RingElement>)> {
        proptest::collection::vec(prop_oneof![Just(2u64), Just(3), Just(4), Just(6), Just(8), Just(9)], 1..4)
            .prop_flat_map(|orders| {
                let o = orders.clone();
                let gen = orders
                    .iter()
                    .map(|&d| 0..d)
                    .collect::<Vec<_>>()
                    .prop_map(RingElement::from_coords);
                (Just(o), proptest::collection::vec(gen, 0..4))
            })
    }

    proptest! {
        #[test]
        fn canonical_and_matches_closure((orders, gens) in arb_case(), seed in 0usize..24) {
            let h = AdditiveSubgroup::generated(&orders, gens.iter());
            let reference = closure(&orders, &gens);
            let elems: BTreeSet<_> = h.elements().into_iter().collect();
            prop_assert_eq!(&elems, &reference);
            prop_assert_eq!(h.order() as usize, reference.len());
            for x in AdditiveSubgroup::whole(&orders).elements() {
                prop_assert_eq!(h.contains(&x), reference.contains(&x));
                let r = h.reduce(&x);
                // x - r lies in H
                let diff: Vec<u64> = x.coords().iter().zip(r.coords()).zip(&orders)
                    .map(|((a, b), d)| (a + d - b) % d).collect();
                prop_assert!(h.contains(&el(&diff)));
            }
            // shuffled + duplicated generators give the identical basis
            let mut shuffled = gens.clone();
            if !shuffled.is_empty() {
                let n = shuffled.len();
                shuffled.rotate_left(seed % n);
                shuffled.push(gens[seed % n].clone());
            }
            let h2 = AdditiveSubgroup::generated(&orders, shuffled.iter());
            prop_assert_eq!(&h2, &h);
            // idempotent on its own basis
            let h3 = AdditiveSubgroup::generated(&orders, h.basis().iter());
            prop_assert_eq!(&h3, &h);
            prop_assert_eq!(h.coset_representatives().len() as u64, h.index());
        }

        #[test]
        fn cyclic_decomposition_round_trip((orders, gens) in arb_case()) {
            let h = AdditiveSubgroup::generated(&orders, gens.iter());
            let dec = h.cyclic_decomposition();
            prop_assert_eq!(dec.orders().iter().product::<u64>(), h.order());
            for x in h.elements() {
                let c = dec.coordinates(&x);
                prop_assert_eq!(dec.element(&c), x);
            }
            for (g, &o) in dec.generators().iter().zip(dec.orders()) {
                // generator j has additive order exactly o
                let ord = g.coords().iter().zip(&orders)
                    .fold(1u64, |acc, (&x, &d)| crate::arith::lcm(acc, d / crate::arith::gcd(d, x)));
                prop_assert_eq!(ord, o);
            }
        }

        #[test]
        fn intersection_is_setwise((orders, gens) in arb_case(), split in 0usize..4) {
            let split = split.min(gens.len());
            let a = AdditiveSubgroup::generated(&orders, gens[..split].iter());
            let b = AdditiveSubgroup::generated(&orders, gens[split..].iter());
            let i = a.intersect(&b);
            for x in AdditiveSubgroup::whole(&orders).elements() {
                prop_assert_eq!(i.contains(&x), a.contains(&x) && b.contains(&x));
            }
        }
    }
}
