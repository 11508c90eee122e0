use crate::error::Result;
use crate::snf::diagonalize;

use super::{FiniteRing, Ideal, RingElement};

/// `R / I`, presented on cyclic generators obtained by diagonalizing the
/// Hermite lattice of `I`.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    parent: FiniteRing,
    modulus: Ideal,
    table: FiniteRing,
    // for each kept cyclic factor: the column of the transform and the section image
    proj_cols: Vec<Vec<i128>>,
    section_gens: Vec<RingElement>,
}

impl QuotientRing {
    pub fn new(parent: &FiniteRing, modulus: &Ideal) -> Result<Self> {
        // Re-validate against this ring: the ideal may come from elsewhere.
        let modulus = Ideal::new(parent, modulus.group().clone())?;
        let k = parent.rank();
        let m: Vec<Vec<i128>> = modulus
            .group()
            .hermite_rows()
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let diag = diagonalize(m);
        let mut orders = Vec::new();
        let mut proj_cols = Vec::new();
        let mut section_gens = Vec::new();
        for j in 0..k {
            let s = diag.diag[j];
            if s <= 1 {
                continue;
            }
            orders.push(s as u64);
            proj_cols.push((0..k).map(|l| diag.v[l][j]).collect());
            section_gens.push(parent.element_from_ints(&diag.v_inv[j]));
        }
        let mut q = QuotientRing {
            parent: parent.clone(),
            modulus,
            table: FiniteRing::new(vec![], vec![], vec![])?,
            proj_cols,
            section_gens,
        };
        let table: Vec<Vec<Vec<u64>>> = q
            .section_gens
            .iter()
            .map(|a| {
                q.section_gens
                    .iter()
                    .map(|b| q.project_with(&orders, &parent.mul(a, b)).into_coords())
                    .collect()
            })
            .collect();
        let one = q.project_with(&orders, &parent.one()).into_coords();
        q.table = FiniteRing::new(orders, table, one)?;
        Ok(q)
    }

    fn project_with(&self, orders: &[u64], x: &RingElement) -> RingElement {
        RingElement::from_coords(
            self.proj_cols
                .iter()
                .zip(orders)
                .map(|(col, &s)| {
                    let y: i128 = x
                        .coords()
                        .iter()
                        .zip(col)
                        .map(|(&a, &b)| a as i128 * b)
                        .sum();
                    y.rem_euclid(s as i128) as u64
                })
                .collect(),
        )
    }

    pub fn parent(&self) -> &FiniteRing {
        &self.parent
    }

    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.table
    }

    pub fn projection(&self, x: &RingElement) -> RingElement {
        self.project_with(self.table.orders(), x)
    }

    /// A fixed coset representative for each quotient element.
    pub fn section(&self, y: &RingElement) -> RingElement {
        let mut acc = self.parent.zero();
        for (g, &c) in self.section_gens.iter().zip(y.coords()) {
            acc = self.parent.add(&acc, &self.parent.int_mul(c as i64, g));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::ring::AdditiveSubgroup;

    fn el(c: &[u64]) -> RingElement {
        RingElement::from_coords(c.to_vec())
    }

    fn check_homomorphism(q: &QuotientRing) {
        let r = q.parent();
        let qr = q.ring();
        assert_eq!(r.order(), q.modulus().order() * qr.order());
        assert_eq!(q.projection(&r.one()), qr.one());
        for a in r.generators() {
            for b in r.generators() {
                assert_eq!(q.projection(&r.mul(&a, &b)), qr.mul(&q.projection(&a), &q.projection(&b)));
                assert_eq!(q.projection(&r.add(&a, &b)), qr.add(&q.projection(&a), &q.projection(&b)));
            }
        }
        for y in qr.elements() {
            assert_eq!(q.projection(&q.section(&y)), y);
        }
        // kernel is exactly the modulus
        for x in r.elements() {
            assert_eq!(q.projection(&x).is_zero(), q.modulus().contains(&x));
        }
    }

    #[test]
    fn quotient_examples() {
        let z4 = presets::zmod(4).unwrap();
        let q = QuotientRing::new(&z4, &Ideal::scalar(&z4, 2)).unwrap();
        assert_eq!(q.ring().order(), 2);
        check_homomorphism(&q);

        let dual = presets::trunc_poly(&presets::zmod(2).unwrap(), 2).unwrap();
        let q = QuotientRing::new(&dual, &Ideal::generated_by(&dual, [el(&[0, 1])].iter())).unwrap();
        assert_eq!(q.ring().order(), 2);
        check_homomorphism(&q);

        let r22 = presets::galois(2, 2, 2).unwrap();
        let q = QuotientRing::new(&r22, &Ideal::scalar(&r22, 2)).unwrap();
        assert_eq!(q.ring().order(), 4);
        check_homomorphism(&q);
        // no zero divisors: F_4
        let f = q.ring();
        for a in f.elements().filter(|a| !a.is_zero()) {
            for b in f.elements().filter(|b| !b.is_zero()) {
                assert!(!f.mul(&a, &b).is_zero());
            }
        }
    }

    #[test]
    fn quotient_by_everything_and_nothing() {
        let r = presets::zmod(12).unwrap();
        let q = QuotientRing::new(&r, &Ideal::unit(&r)).unwrap();
        assert_eq!(q.ring().order(), 1);
        let q = QuotientRing::new(&r, &Ideal::zero(&r)).unwrap();
        assert_eq!(q.ring().order(), 12);
        check_homomorphism(&q);
    }

    #[test]
    fn rejects_non_ideal() {
        let t = presets::trunc_poly(&presets::zmod(2).unwrap(), 3).unwrap();
        let g = AdditiveSubgroup::generated(t.orders(), [el(&[0, 1, 0])].iter());
        // Bypass Ideal::new by building an ideal of another ring with the same orders.
        let other = presets::square_zero(&presets::zmod(2).unwrap(), 2).unwrap();
        let fake = Ideal::new(&other, g).unwrap();
        assert!(QuotientRing::new(&t, &fake).is_err());
    }

    #[test]
    fn all_ideal_quotients_of_small_rings() {
        for r in [
            presets::galois(2, 2, 2).unwrap(),
            presets::idealization(2, 2, &[1]).unwrap(),
            presets::product(&[presets::zmod(4).unwrap(), presets::zmod(6).unwrap()]).unwrap(),
        ] {
            for x in r.elements() {
                let i = Ideal::generated_by(&r, [x].iter());
                check_homomorphism(&QuotientRing::new(&r, &i).unwrap());
            }
        }
    }
}
