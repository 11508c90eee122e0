use crate::error::Result;
use crate::snf::diagonalize;

use super::{AdditiveSubgroup, FiniteRing, RingElement};

/// A subgroup `H` written as `Z/s_1 + ... + Z/s_m` with explicit generators
/// and a coordinate map back.
#[derive(Clone, Debug)]
pub struct CyclicDecomposition {
    ambient: Vec<u64>,
    hermite: Vec<Vec<i128>>,
    orders: Vec<u64>,
    generators: Vec<RingElement>,
    // columns of the unimodular transform, one per kept cyclic factor
    coord_cols: Vec<Vec<i128>>,
}

impl CyclicDecomposition {
    pub(super) fn of(h: &AdditiveSubgroup) -> Self {
        let d = h.ambient_orders().to_vec();
        let k = d.len();
        let m: Vec<Vec<i128>> = h
            .hermite_rows()
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        // Relations among the Hermite rows: row i of A expresses d_i e_i in that basis.
        let relations: Vec<Vec<i128>> = (0..k)
            .map(|i| {
                let mut target = vec![0i128; k];
                target[i] = d[i] as i128;
                solve_upper(&m, &target)
            })
            .collect();
        let diag = diagonalize(relations);
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        let mut coord_cols = Vec::new();
        for j in 0..k {
            let s = diag.diag[j];
            if s <= 1 {
                continue;
            }
            let c = &diag.v_inv[j];
            let g: Vec<u64> = (0..k)
                .map(|l| {
                    let x: i128 = (0..=l).map(|i| c[i] * m[i][l]).sum();
                    x.rem_euclid(d[l] as i128) as u64
                })
                .collect();
            orders.push(s as u64);
            generators.push(RingElement::from_coords(g));
            coord_cols.push((0..k).map(|l| diag.v[l][j]).collect());
        }
        CyclicDecomposition {
            ambient: d,
            hermite: m,
            orders,
            generators,
            coord_cols,
        }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn generators(&self) -> &[RingElement] {
        &self.generators
    }

    /// Coordinates of `x` (which must lie in the subgroup) in the cyclic basis.
    pub fn coordinates(&self, x: &RingElement) -> RingElement {
        let target: Vec<i128> = x.coords().iter().map(|&c| c as i128).collect();
        let c = solve_upper(&self.hermite, &target);
        RingElement::from_coords(
            self.coord_cols
                .iter()
                .zip(&self.orders)
                .map(|(col, &s)| {
                    let y: i128 = c.iter().zip(col).map(|(a, b)| a * b).sum();
                    y.rem_euclid(s as i128) as u64
                })
                .collect(),
        )
    }

    /// The ambient element with the given cyclic coordinates.
    pub fn element(&self, coords: &RingElement) -> RingElement {
        let k = self.ambient.len();
        let mut acc = vec![0u128; k];
        for (g, &c) in self.generators.iter().zip(coords.coords()) {
            for l in 0..k {
                let d = self.ambient[l] as u128;
                acc[l] = (acc[l] + c as u128 * g.coords()[l] as u128) % d;
            }
        }
        RingElement::from_coords(acc.into_iter().map(|x| x as u64).collect())
    }
}

/// Solves `c * M = x` for upper-triangular `M` by forward substitution.
/// `x` must lie in the row lattice of `M`.
fn solve_upper(m: &[Vec<i128>], x: &[i128]) -> Vec<i128> {
    let k = m.len();
    let mut c = vec![0i128; k];
    for j in 0..k {
        let partial: i128 = (0..j).map(|l| c[l] * m[l][j]).sum();
        let rest = x[j] - partial;
        debug_assert_eq!(rest % m[j][j], 0, "vector not in lattice");
        c[j] = rest / m[j][j];
    }
    c
}

/// A subring (or a corner ring `eR` with identity `e`) re-presented as a
/// stand-alone [`FiniteRing`], together with the maps to and from the parent.
#[derive(Clone, Debug)]
pub struct SubringPresentation {
    ring: FiniteRing,
    group: AdditiveSubgroup,
    decomposition: CyclicDecomposition,
}

impl SubringPresentation {
    /// `group` must be closed under multiplication and `one` must act as its identity.
    pub fn new(parent: &FiniteRing, group: &AdditiveSubgroup, one: &RingElement) -> Result<Self> {
        let dec = group.cyclic_decomposition();
        let gens = dec.generators();
        let table: Vec<Vec<Vec<u64>>> = gens
            .iter()
            .map(|a| {
                gens.iter()
                    .map(|b| dec.coordinates(&parent.mul(a, b)).into_coords())
                    .collect()
            })
            .collect();
        let ring = FiniteRing::new(dec.orders().to_vec(), table, dec.coordinates(one).into_coords())?;
        Ok(SubringPresentation {
            ring,
            group: group.clone(),
            decomposition: dec,
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn into_ring(self) -> FiniteRing {
        self.ring
    }

    pub fn group(&self) -> &AdditiveSubgroup {
        &self.group
    }

    /// Parent element of a presented element.
    pub fn lift(&self, x: &RingElement) -> RingElement {
        self.decomposition.element(x)
    }

    /// Presented element of a parent element, if it lies in the subring.
    pub fn restrict(&self, x: &RingElement) -> Option<RingElement> {
        self.group
            .contains(x)
            .then(|| self.decomposition.coordinates(x))
    }

    /// Image in the parent of an additive subgroup of the presented ring.
    pub fn lift_subgroup(&self, h: &AdditiveSubgroup) -> AdditiveSubgroup {
        let images: Vec<RingElement> = h.basis().iter().map(|b| self.lift(b)).collect();
        AdditiveSubgroup::generated(self.group.ambient_orders(), images.iter())
    }
}
