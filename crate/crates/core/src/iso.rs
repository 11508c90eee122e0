//! Isomorphism search between presented rings.

use crate::poly::least_irreducible;
use crate::ring::{AdditiveSubgroup, FiniteRing, RingElement};

/// Image of an element under the additive map sending
/// generator `i` to `images[i]`.
pub fn apply(b: &FiniteRing, images: &[RingElement], x: &RingElement) -> RingElement {
    let mut acc = b.zero();
    for (c, img) in x.coords().iter().zip(images) {
        if *c != 0 {
            acc = b.add(&acc, &b.int_mul(*c as i64, img));
        }
    }
    acc
}

/// True iff generator images define a unital ring homomorphism `a -> b`.
pub fn is_homomorphism(a: &FiniteRing, b: &FiniteRing, images: &[RingElement]) -> bool {
    if images.len() != a.rank() {
        return false;
    }
    let well_defined = images
        .iter()
        .zip(a.orders())
        .all(|(img, &d)| b.int_mul(d as i64, img).is_zero());
    well_defined
        && apply(b, images, &a.one()) == b.one()
        && (0..a.rank()).all(|i| {
            (i..a.rank()).all(|j| {
                apply(b, images, &a.table()[i][j]) == b.mul(&images[i], &images[j])
            })
        })
}

/// True iff the generator images give a bijective homomorphism.
pub fn is_isomorphism(a: &FiniteRing, b: &FiniteRing, images: &[RingElement]) -> bool {
    a.order() == b.order()
        && is_homomorphism(a, b, images)
        && AdditiveSubgroup::generated(b.orders(), images.iter()).order() == b.order()
}

/// Backtracking search for an isomorphism `a -> b`, returned as generator
/// images. Products `g_i g_j` are checked as soon as every generator they
/// involve has been assigned.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<RingElement>> {
    if a.order() != b.order() || a.characteristic() != b.characteristic() {
        return None;
    }
    let k = a.rank();
    let support = |x: &RingElement| x.coords().iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
    // checks[s] lists the constraints decidable once generators 0..s are fixed
    let mut checks: Vec<Vec<(Option<(usize, usize)>, RingElement)>> = vec![Vec::new(); k + 1];
    let one = a.one();
    checks[support(&one).max(1).min(k)].push((None, one.clone()));
    for i in 0..k {
        for j in i..k {
            let prod = &a.table()[i][j];
            checks[support(prod).max(j + 1)].push((Some((i, j)), prod.clone()));
        }
    }
    let candidates: Vec<Vec<RingElement>> = a
        .orders()
        .iter()
        .map(|&d| b.elements().filter(|y| b.int_mul(d as i64, y).is_zero()).collect())
        .collect();
    let mut images: Vec<RingElement> = Vec::with_capacity(k);
    fn rec(
        a: &FiniteRing,
        b: &FiniteRing,
        candidates: &[Vec<RingElement>],
        checks: &[Vec<(Option<(usize, usize)>, RingElement)>],
        images: &mut Vec<RingElement>,
    ) -> bool {
        let s = images.len();
        if s == a.rank() {
            return is_isomorphism(a, b, images);
        }
        for y in &candidates[s] {
            images.push(y.clone());
            let ok = checks[s + 1].iter().all(|(pair, val)| {
                let lhs = apply(b, images, val);
                match pair {
                    None => lhs == b.one(),
                    Some((i, j)) => lhs == b.mul(&images[*i], &images[*j]),
                }
            });
            if ok && rec(a, b, candidates, checks, images) {
                return true;
            }
            images.pop();
        }
        false
    }
    if k == 0 {
        return Some(Vec::new());
    }
    rec(a, b, &candidates, &checks, &mut images).then_some(images)
}

/// Finds a root `s` of the defining polynomial of the Galois ring
/// `(Z/p^N)[x]/(f)` inside `s_ring` such that `1, s, .., s^{n-1}` span it.
/// The map `x -> s` is then an isomorphism.
pub fn galois_generator(s_ring: &FiniteRing, p: u64, n: u32) -> Option<RingElement> {
    let f = least_irreducible(p, n);
    s_ring.elements().find(|s| {
        let mut value = s_ring.zero();
        for &c in f.iter().rev() {
            value = s_ring.add(&s_ring.mul(&value, s), &s_ring.int_mul(c as i64, &s_ring.one()));
        }
        if !value.is_zero() {
            return false;
        }
        let powers: Vec<RingElement> = (0..n as u64).map(|i| s_ring.pow(s, i)).collect();
        AdditiveSubgroup::generated(s_ring.orders(), powers.iter()).order() == s_ring.order()
    })
}

/// Generator images of `galois -> s_ring` for `galois` built by
/// [`crate::presets::galois`], given a root `s` as returned by [`galois_generator`].
pub fn galois_images(galois: &FiniteRing, s_ring: &FiniteRing, s: &RingElement, n: u32) -> Vec<RingElement> {
    // generators of the preset are x^e (times the single generator of Z/p^N)
    debug_assert_eq!(galois.rank(), n as usize);
    (0..n as u64).map(|e| s_ring.pow(s, e)).collect()
}
