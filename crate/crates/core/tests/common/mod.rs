//! Naive reference computations on element-index tables. Independent of the
//! library's subgroup normal forms and census code.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use finring::{FiniteRing, RingElement, Subring};

pub type Set = Vec<u32>;

pub struct TableRing {
    pub size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    pub zero: u32,
    pub one: u32,
    pub elements: Vec<RingElement>,
}

impl TableRing {
    pub fn new(r: &FiniteRing) -> Self {
        let elements: Vec<RingElement> = r.elements().collect();
        let size = elements.len();
        let idx = |x: &RingElement| r.index_of(x) as u32;
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                add[i * size + j] = idx(&r.add(a, b));
                mul[i * size + j] = idx(&r.mul(a, b));
            }
        }
        TableRing {
            size,
            add,
            mul,
            zero: idx(&r.zero()),
            one: idx(&r.one()),
            elements,
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.size + b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.size + b as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        (0..e).fold(self.one, |acc, _| self.mul(acc, a))
    }

    pub fn int_mul(&self, c: u64, a: u32) -> u32 {
        (0..c).fold(self.zero, |acc, _| self.add(acc, a))
    }

    pub fn all(&self) -> Set {
        (0..self.size as u32).collect()
    }

    pub fn set_of(&self, r: &FiniteRing, xs: &[RingElement]) -> Set {
        let mut s: Set = xs.iter().map(|x| r.index_of(x) as u32).collect();
        s.sort();
        s
    }

    pub fn subring_set(&self, r: &FiniteRing, s: &Subring) -> Set {
        self.set_of(r, &s.elements())
    }

    /// Closure of `gens` under `+` and, if `multiply`, under `*`.
    fn close(&self, gens: impl IntoIterator<Item = u32>, multiply: bool, absorb: bool) -> Set {
        let mut inside = vec![false; self.size];
        let mut list = Vec::new();
        let push = |x: u32, inside: &mut Vec<bool>, list: &mut Vec<u32>| {
            if !inside[x as usize] {
                inside[x as usize] = true;
                list.push(x);
            }
        };
        push(self.zero, &mut inside, &mut list);
        for g in gens {
            push(g, &mut inside, &mut list);
        }
        let mut done = 0;
        while done < list.len() {
            let a = list[done];
            done += 1;
            let mut k = 0;
            while k < list.len() {
                let b = list[k];
                push(self.add(a, b), &mut inside, &mut list);
                if multiply {
                    push(self.mul(a, b), &mut inside, &mut list);
                }
                k += 1;
            }
            if absorb {
                for y in 0..self.size as u32 {
                    push(self.mul(a, y), &mut inside, &mut list);
                }
            }
        }
        list.sort();
        list
    }

    pub fn additive_span(&self, gens: impl IntoIterator<Item = u32>) -> Set {
        self.close(gens, false, false)
    }

    pub fn subring(&self, gens: impl IntoIterator<Item = u32>) -> Set {
        let one = self.one;
        self.close(gens.into_iter().chain([one]), true, false)
    }

    pub fn ideal(&self, gens: impl IntoIterator<Item = u32>) -> Set {
        self.close(gens, true, true)
    }

    pub fn is_unit(&self, a: u32) -> bool {
        (0..self.size as u32).any(|b| self.mul(a, b) == self.one)
    }

    pub fn nonunits(&self) -> Set {
        (0..self.size as u32).filter(|&a| !self.is_unit(a)).collect()
    }

    pub fn is_nilpotent(&self, a: u32) -> bool {
        self.pow(a, self.size as u64) == self.zero
    }

    /// Every unital subring, by one-element extensions from the prime ring.
    pub fn subring_census(&self) -> Vec<Set> {
        let start = self.subring([]);
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            for a in 0..self.size as u32 {
                if s.binary_search(&a).is_err() {
                    let t = self.subring(s.iter().copied().chain([a]));
                    if seen.insert(t.clone()) {
                        queue.push_back(t);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Every ideal, by one-element extensions from zero.
    pub fn ideal_census(&self) -> Vec<Set> {
        let start = vec![self.zero];
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for a in 0..self.size as u32 {
                if i.binary_search(&a).is_err() {
                    let j = self.ideal(i.iter().copied().chain([a]));
                    if seen.insert(j.clone()) {
                        queue.push_back(j);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn is_ideal(&self, s: &Set) -> bool {
        s.iter().all(|&a| (0..self.size as u32).all(|y| s.binary_search(&self.mul(a, y)).is_ok()))
    }

    /// `|S| / |S cap non-units|`.
    pub fn residue_size(&self, s: &Set) -> u64 {
        let nonunits = s.iter().filter(|&&a| !self.is_unit(a)).count();
        (s.len() / nonunits) as u64
    }

    pub fn is_local_subring(&self, s: &Set) -> bool {
        let nonunits: Vec<u32> = s.iter().copied().filter(|&a| !self.is_unit(a)).collect();
        !nonunits.is_empty() && self.additive_span(nonunits.iter().copied()).len() == nonunits.len()
    }

    /// Sum of two subsets as a set.
    pub fn sum(&self, a: &Set, b: &Set) -> Set {
        let s: BTreeSet<u32> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.add(x, y)).collect();
        s.into_iter().collect()
    }

    /// Additive span of all products `a b`.
    pub fn product(&self, a: &Set, b: &Set) -> Set {
        self.additive_span(a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.mul(x, y)).collect::<Vec<_>>())
    }
}

pub fn is_subset(a: &Set, b: &Set) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Members not strictly contained in another member, excluding `top`.
pub fn maximal_below(census: &[Set], top: &Set) -> Vec<Set> {
    let proper: Vec<&Set> = census.iter().filter(|s| *s != top).collect();
    proper
        .iter()
        .filter(|s| !proper.iter().any(|t| t.len() > s.len() && is_subset(s, t)))
        .map(|s| (*s).clone())
        .collect()
}

/// Exponent `e` with `p^e = x`.
pub fn log(p: u64, mut x: u64) -> u32 {
    let mut e = 0;
    while x > 1 {
        assert_eq!(x % p, 0);
        x /= p;
        e += 1;
    }
    e
}

pub fn distinct_primes(mut n: u64) -> u32 {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            count += 1;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    count + u32::from(n > 1)
}

/// Invariants of a local ring computed from tables: `(p, N, q, n, rho)`.
pub fn local_invariants(t: &TableRing) -> (u64, u32, u64, u32, u32) {
    let m = t.nonunits();
    let mut char_ = 1;
    while t.int_mul(char_, t.one) != t.zero {
        char_ += 1;
    }
    let p = (2..=char_).find(|d| char_ % d == 0).unwrap();
    let big_n = log(p, char_);
    let q = (t.size / m.len()) as u64;
    let n = log(p, q);
    let p_r: Set = t.additive_span((0..t.size as u32).map(|x| t.int_mul(p, x)));
    let denom = t.additive_span(t.product(&m, &m).into_iter().chain(p_r));
    let v = (m.len() / denom.len()) as u64;
    let rho = log(q, v.max(1));
    (p, big_n, q, n, rho)
}
