use crate::arith::divisors;
use crate::ring::{QuotientRing, RingElement};

use super::LocalRing;

/// A subfield `F_{p^d}` of the residue field, as indices into its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subfield {
    pub degree: u32,
    pub members: Vec<usize>,
}

/// `R/m` realized on Teichmüller representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    pub p: u64,
    pub n: u32,
    pub q: u64,
    pub elements: Vec<RingElement>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub subfields: Vec<Subfield>,
}

impl ResidueField {
    pub(super) fn build(lr: &LocalRing) -> Self {
        let r = lr.ring();
        let t = lr.teichmuller();
        let idx = |x: &RingElement| t.index_of(x).expect("Teichmüller set is closed");
        let q = t.tbar.len();
        let mut add = vec![vec![0; q]; q];
        let mut mul = vec![vec![0; q]; q];
        for i in 0..q {
            for j in 0..q {
                let (s, _) = lr.decompose(&r.add(&t.tbar[i], &t.tbar[j]));
                add[i][j] = idx(&s);
                mul[i][j] = idx(&r.mul(&t.tbar[i], &t.tbar[j]));
            }
        }
        let n = lr.data().n;
        let subfields = divisors(n as u64)
            .into_iter()
            .map(|d| {
                let e = lr.data().p.pow(d as u32);
                let members = (0..q).filter(|&i| r.pow(&t.tbar[i], e) == t.tbar[i]).collect();
                Subfield {
                    degree: d as u32,
                    members,
                }
            })
            .collect();
        ResidueField {
            p: lr.data().p,
            n,
            q: q as u64,
            elements: t.tbar.clone(),
            add,
            mul,
            subfields,
        }
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        (0..self.elements.len())
            .find(|&i| (0..self.elements.len()).all(|j| self.mul[i][j] == j))
            .expect("field has an identity")
    }

    /// Exhaustive check of the field axioms on the tables, plus cyclicity of
    /// the multiplicative group and one subfield per divisor of `n`.
    pub fn satisfies_field_axioms(&self) -> bool {
        let q = self.elements.len();
        let (z, o) = (self.zero(), self.one());
        let all = 0..q;
        for a in all.clone() {
            if self.add[a][z] != a || self.mul[a][o] != a {
                return false;
            }
            if !all.clone().any(|b| self.add[a][b] == z) {
                return false;
            }
            if a != z && !all.clone().any(|b| self.mul[a][b] == o) {
                return false;
            }
            for b in all.clone() {
                if self.add[a][b] != self.add[b][a] || self.mul[a][b] != self.mul[b][a] {
                    return false;
                }
                for c in all.clone() {
                    if self.add[self.add[a][b]][c] != self.add[a][self.add[b][c]]
                        || self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]
                        || self.mul[a][self.add[b][c]] != self.add[self.mul[a][b]][self.mul[a][c]]
                    {
                        return false;
                    }
                }
            }
        }
        let cyclic = all.clone().filter(|&a| a != z).any(|g| {
            let mut x = g;
            let mut k = 1;
            while x != o {
                x = self.mul[x][g];
                k += 1;
            }
            k == q - 1
        });
        let subfields_ok = self
            .subfields
            .iter()
            .all(|s| s.members.len() as u64 == self.p.pow(s.degree));
        cyclic && subfields_ok
    }

    /// True iff projection to `R/m` maps the tables isomorphically onto the quotient ring.
    pub fn matches_quotient(&self, lr: &LocalRing) -> bool {
        let Ok(quot) = QuotientRing::new(lr.ring(), lr.maximal_ideal()) else {
            return false;
        };
        let qr = quot.ring();
        let img: Vec<RingElement> = self.elements.iter().map(|t| quot.projection(t)).collect();
        let mut sorted = img.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() as u64 != qr.order() || qr.order() != self.q {
            return false;
        }
        let q = self.elements.len();
        (0..q).all(|i| {
            (0..q).all(|j| {
                img[self.add[i][j]] == qr.add(&img[i], &img[j])
                    && img[self.mul[i][j]] == qr.mul(&img[i], &img[j])
            })
        })
    }
}
