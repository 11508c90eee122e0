//! Constructors for the standard families of finite rings, and a small
//! expression language (`trunc_poly(galois(2,1,2),2)`) naming them.

use std::fmt;

use crate::arith::{is_prime, prime_power};
use crate::error::{Result, RingError};
use crate::poly::least_irreducible;
use crate::ring::{FiniteRing, RingElement};

fn bad(msg: impl Into<String>) -> RingError {
    RingError::BadParameters(msg.into())
}

/// `Z/n`.
pub fn zmod(n: u64) -> Result<FiniteRing> {
    if n < 2 {
        return Err(bad(format!("zmod needs modulus >= 2, got {n}")));
    }
    Ok(FiniteRing::new(vec![n], vec![vec![vec![1 % n]]], vec![1])?.with_label(format!("Z/{n}")))
}

fn base_label(base: &FiniteRing) -> String {
    base.label().map(str::to_owned).unwrap_or_else(|| format!("A{}", base.order()))
}

/// `base[x] / (x^k + c_{k-1} x^{k-1} + ... + c_0)` for a monic polynomial
/// whose lower coefficients `c_0..c_{k-1}` are elements of `base`.
///
/// Generators are `b x^e` for each base generator `b` and `0 <= e < k`,
/// ordered by exponent first.
pub fn poly_quotient(base: &FiniteRing, lower: &[RingElement]) -> Result<FiniteRing> {
    let k = lower.len();
    if k == 0 {
        return Err(bad("polynomial degree must be at least 1"));
    }
    let kb = base.rank();
    let orders: Vec<u64> = (0..k).flat_map(|_| base.orders().iter().copied()).collect();
    let flatten = |coeffs: &[RingElement]| -> Vec<u64> {
        coeffs.iter().flat_map(|c| c.coords().iter().copied()).collect()
    };
    // reduce a coefficient list of length up to 2k-1 modulo the monic polynomial
    let reduce = |mut coeffs: Vec<RingElement>| -> Vec<RingElement> {
        for s in (k..coeffs.len()).rev() {
            let c = std::mem::replace(&mut coeffs[s], base.zero());
            if c.is_zero() {
                continue;
            }
            for (i, fi) in lower.iter().enumerate() {
                let t = base.mul(&c, fi);
                coeffs[s - k + i] = base.sub(&coeffs[s - k + i], &t);
            }
        }
        coeffs.truncate(k);
        coeffs
    };
    let n = k * kb;
    let mut table = vec![vec![Vec::new(); n]; n];
    for e1 in 0..k {
        for b1 in 0..kb {
            for e2 in 0..k {
                for b2 in 0..kb {
                    let mut coeffs = vec![base.zero(); 2 * k - 1];
                    coeffs[e1 + e2] = base.mul(&base.generator(b1), &base.generator(b2));
                    table[e1 * kb + b1][e2 * kb + b2] = flatten(&reduce(coeffs));
                }
            }
        }
    }
    let mut one = vec![base.zero(); k];
    one[0] = base.one();
    FiniteRing::new(orders, table, flatten(&one))
}

/// The Galois ring `(Z/p^N)[x]/(f)` with `f` the least monic irreducible of
/// degree `n` mod `p`. `N = 1` gives the field `F_{p^n}`, `n = 1` gives `Z/p^N`.
pub fn galois(p: u64, big_n: u32, n: u32) -> Result<FiniteRing> {
    if !is_prime(p) || big_n == 0 || n == 0 {
        return Err(bad(format!("galois needs prime p and N, n >= 1, got ({p}, {big_n}, {n})")));
    }
    let modulus = p
        .checked_pow(big_n)
        .filter(|m| m.checked_pow(n).is_some())
        .ok_or_else(|| bad("Galois ring too large"))?;
    let base = zmod(modulus)?;
    let f = least_irreducible(p, n);
    let lower: Vec<RingElement> = f[..n as usize]
        .iter()
        .map(|&c| RingElement::from_coords(vec![c % modulus]))
        .collect();
    let label = match (big_n, n) {
        (_, 1) => format!("Z/{modulus}"),
        (1, _) => format!("F_{}", p.pow(n)),
        _ => format!("GR({modulus},{n})"),
    };
    Ok(poly_quotient(&base, &lower)?.with_label(label))
}

/// `F_q` for a prime power `q`.
pub fn field(q: u64) -> Result<FiniteRing> {
    let (p, n) = prime_power(q).ok_or_else(|| bad(format!("{q} is not a prime power")))?;
    galois(p, 1, n)
}

/// `base[x]/(x^k)`.
pub fn trunc_poly(base: &FiniteRing, k: u32) -> Result<FiniteRing> {
    if k == 0 {
        return Err(bad("trunc_poly needs k >= 1"));
    }
    let lower = vec![base.zero(); k as usize];
    let label = format!("{}[x]/(x^{k})", base_label(base));
    Ok(poly_quotient(base, &lower)?.with_label(label))
}

/// `base[x_1..x_m]/(x_1..x_m)^2`: the base ring plus `m` free square-zero directions.
pub fn square_zero(base: &FiniteRing, m: u32) -> Result<FiniteRing> {
    let kb = base.rank();
    let blocks = m as usize + 1;
    let n = kb * blocks;
    let orders: Vec<u64> = (0..blocks).flat_map(|_| base.orders().iter().copied()).collect();
    let mut table = vec![vec![vec![0u64; n]; n]; n];
    for i in 0..blocks {
        for j in 0..blocks {
            if i > 0 && j > 0 {
                continue;
            }
            let target = i.max(j);
            for b1 in 0..kb {
                for b2 in 0..kb {
                    let prod = base.mul(&base.generator(b1), &base.generator(b2));
                    let entry = &mut table[i * kb + b1][j * kb + b2];
                    entry[target * kb..(target + 1) * kb].copy_from_slice(prod.coords());
                }
            }
        }
    }
    let mut one = vec![0u64; n];
    one[..kb].copy_from_slice(base.one().coords());
    let vars: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let label = format!("{}[{}]/({})^2", base_label(base), vars.join(","), vars.join(","));
    Ok(FiniteRing::new(orders, table, one)?.with_label(label))
}

/// `Z/p^N + M` with `M = Z/p^{a_1} + ... + Z/p^{a_m}` and `M^2 = 0`.
pub fn idealization(p: u64, big_n: u32, exps: &[u32]) -> Result<FiniteRing> {
    if !is_prime(p) || big_n == 0 {
        return Err(bad("idealization needs prime p and N >= 1"));
    }
    if exps.iter().any(|&a| a == 0 || a > big_n) {
        return Err(bad("module exponents must lie in 1..=N"));
    }
    let k = exps.len() + 1;
    let mut orders = vec![p.pow(big_n)];
    orders.extend(exps.iter().map(|&a| p.pow(a)));
    let mut table = vec![vec![vec![0u64; k]; k]; k];
    for j in 0..k {
        table[0][j][j] = 1;
        table[j][0][j] = 1;
    }
    let mut one = vec![0u64; k];
    one[0] = 1;
    let module: Vec<String> = exps.iter().map(|a| format!("Z/{}", p.pow(*a))).collect();
    let label = format!("Z/{} + ({})", p.pow(big_n), module.join(" + "));
    Ok(FiniteRing::new(orders, table, one)?.with_label(label))
}

/// Direct product, generators concatenated in factor order.
pub fn product(factors: &[FiniteRing]) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(bad("product needs at least one factor"));
    }
    let n: usize = factors.iter().map(FiniteRing::rank).sum();
    let mut orders = Vec::with_capacity(n);
    let mut table = vec![vec![vec![0u64; n]; n]; n];
    let mut one = vec![0u64; n];
    let mut offset = 0;
    for f in factors {
        let k = f.rank();
        orders.extend_from_slice(f.orders());
        for i in 0..k {
            for j in 0..k {
                table[offset + i][offset + j][offset..offset + k]
                    .copy_from_slice(f.table()[i][j].coords());
            }
        }
        one[offset..offset + k].copy_from_slice(f.one().coords());
        offset += k;
    }
    let label = factors.iter().map(base_label).collect::<Vec<_>>().join(" x ");
    Ok(FiniteRing::new(orders, table, one)?.with_label(label))
}

/// A parsed preset expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    Zmod(u64),
    Galois(u64, u32, u32),
    Field(u64),
    TruncPoly(Box<Preset>, u32),
    SquareZero(Box<Preset>, u32),
    Idealization(u64, u32, Vec<u32>),
    Poly(Box<Preset>, Vec<i64>),
    Product(Vec<Preset>),
    FromFile(String),
}

impl Preset {
    pub fn parse(text: &str) -> Result<Preset> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let preset = p.preset()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(bad(format!("trailing input in preset `{text}`")));
        }
        Ok(preset)
    }

    /// Builds the ring; `FromFile` is resolved through `load`.
    pub fn build_with(&self, load: &dyn Fn(&str) -> Result<FiniteRing>) -> Result<FiniteRing> {
        match self {
            Preset::Zmod(n) => zmod(*n),
            Preset::Galois(p, big_n, n) => galois(*p, *big_n, *n),
            Preset::Field(q) => field(*q),
            Preset::TruncPoly(b, k) => trunc_poly(&b.build_with(load)?, *k),
            Preset::SquareZero(b, m) => square_zero(&b.build_with(load)?, *m),
            Preset::Idealization(p, big_n, exps) => idealization(*p, *big_n, exps),
            Preset::Poly(b, coeffs) => {
                let base = b.build_with(load)?;
                let one = base.one();
                let lower: Vec<RingElement> = coeffs.iter().map(|&c| base.int_mul(c, &one)).collect();
                let terms: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                let label = format!("{}[x]/({})", base_label(&base), terms.join(","));
                Ok(poly_quotient(&base, &lower)?.with_label(label))
            }
            Preset::Product(fs) => {
                let rings = fs.iter().map(|f| f.build_with(load)).collect::<Result<Vec<_>>>()?;
                product(&rings)
            }
            Preset::FromFile(path) => load(path),
        }
    }

    pub fn build(&self) -> Result<FiniteRing> {
        self.build_with(&|path| Err(bad(format!("cannot load `{path}` here"))))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[String]| v.join(",");
        match self {
            Preset::Zmod(n) => write!(f, "zmod({n})"),
            Preset::Galois(p, a, b) => write!(f, "galois({p},{a},{b})"),
            Preset::Field(q) => write!(f, "field({q})"),
            Preset::TruncPoly(b, k) => write!(f, "trunc_poly({b},{k})"),
            Preset::SquareZero(b, m) => write!(f, "square_zero({b},{m})"),
            Preset::Idealization(p, n, e) => {
                let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                write!(f, "idealization({p},{n},{})", join(&e))
            }
            Preset::Poly(b, c) => {
                let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "poly({b},{})", join(&c))
            }
            Preset::Product(fs) => {
                let v: Vec<String> = fs.iter().map(|x| x.to_string()).collect();
                write!(f, "product({})", join(&v))
            }
            Preset::FromFile(p) => write!(f, "from_file({p})"),
        }
    }
}

enum Arg {
    Int(i64),
    Ring(Preset),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(bad(format!("expected a preset name at offset {start}")));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = &self.src[start..self.pos];
        if !digits.is_empty() && digits != b"-" {
            let s = std::str::from_utf8(digits).unwrap();
            return s.parse().map(Arg::Int).map_err(|_| bad(format!("bad integer `{s}`")));
        }
        self.pos = start;
        Ok(Arg::Ring(self.preset()?))
    }

    fn preset(&mut self) -> Result<Preset> {
        let name = self.ident()?;
        if !self.eat(b'(') {
            return Err(bad(format!("expected `(` after `{name}`")));
        }
        if name == "from_file" {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos] != b')' {
                self.pos += 1;
            }
            let path = String::from_utf8_lossy(&self.src[start..self.pos]).trim().trim_matches('"').to_owned();
            if !self.eat(b')') {
                return Err(bad("unterminated from_file("));
            }
            return Ok(Preset::FromFile(path));
        }
        let mut args = Vec::new();
        if !self.eat(b')') {
            loop {
                args.push(self.arg()?);
                if self.eat(b')') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(bad(format!("expected `,` or `)` in `{name}(...)`")));
                }
            }
        }
        build_preset(&name, args)
    }
}

fn build_preset(name: &str, args: Vec<Arg>) -> Result<Preset> {
    let int = |a: &Arg| -> Result<i64> {
        match a {
            Arg::Int(x) => Ok(*x),
            Arg::Ring(_) => Err(bad(format!("`{name}` expects integer arguments"))),
        }
    };
    let nat = |a: &Arg| -> Result<u64> {
        let x = int(a)?;
        u64::try_from(x).map_err(|_| bad(format!("`{name}` expects non-negative integers")))
    };
    let small = |a: &Arg| -> Result<u32> {
        u32::try_from(nat(a)?).map_err(|_| bad("parameter out of range"))
    };
    let ring = |a: Arg| -> Result<Preset> {
        match a {
            Arg::Ring(r) => Ok(r),
            Arg::Int(_) => Err(bad(format!("`{name}` expects a ring as first argument"))),
        }
    };
    let arity = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(bad(format!("`{name}` takes {n} arguments, got {}", args.len())))
        }
    };
    match name {
        "zmod" => match args.len() {
            1 => Ok(Preset::Zmod(nat(&args[0])?)),
            2 => {
                let p = nat(&args[0])?;
                let e = small(&args[1])?;
                let n = p.checked_pow(e).ok_or_else(|| bad("modulus overflows"))?;
                Ok(Preset::Zmod(n))
            }
            n => Err(bad(format!("zmod takes 1 or 2 arguments, got {n}"))),
        },
        "galois" => {
            arity(3)?;
            Ok(Preset::Galois(nat(&args[0])?, small(&args[1])?, small(&args[2])?))
        }
        "field" => match args.len() {
            1 => Ok(Preset::Field(nat(&args[0])?)),
            2 => Ok(Preset::Galois(nat(&args[0])?, 1, small(&args[1])?)),
            n => Err(bad(format!("field takes 1 or 2 arguments, got {n}"))),
        },
        "trunc_poly" | "square_zero" => {
            arity(2)?;
            let mut it = args.into_iter();
            let base = ring(it.next().unwrap())?;
            let k = small(&it.next().unwrap())?;
            Ok(if name == "trunc_poly" {
                Preset::TruncPoly(Box::new(base), k)
            } else {
                Preset::SquareZero(Box::new(base), k)
            })
        }
        "idealization" => {
            if args.len() < 2 {
                return Err(bad("idealization takes p, N and module exponents"));
            }
            let exps = args[2..].iter().map(small).collect::<Result<Vec<_>>>()?;
            Ok(Preset::Idealization(nat(&args[0])?, small(&args[1])?, exps))
        }
        "poly" => {
            if args.len() < 2 {
                return Err(bad("poly takes a base ring and at least one coefficient"));
            }
            let mut it = args.into_iter();
            let base = ring(it.next().unwrap())?;
            let coeffs = it.map(|a| int(&a)).collect::<Result<Vec<_>>>()?;
            Ok(Preset::Poly(Box::new(base), coeffs))
        }
        "product" => {
            if args.is_empty() {
                return Err(bad("product needs at least one factor"));
            }
            Ok(Preset::Product(args.into_iter().map(ring).collect::<Result<Vec<_>>>()?))
        }
        other => Err(bad(format!("unknown preset `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(c: &[u64]) -> RingElement {
        RingElement::from_coords(c.to_vec())
    }

    #[test]
    fn galois_examples() {
        assert_eq!(galois(2, 1, 1).unwrap().order(), 2);
        let z4 = galois(2, 2, 1).unwrap();
        assert_eq!(z4.orders(), &[4]);
        let r = galois(2, 2, 2).unwrap();
        assert_eq!(r.order(), 16);
        assert_eq!(r.orders(), &[4, 4]);
        // x^2 = -1 - x
        assert_eq!(r.mul(&el(&[0, 1]), &el(&[0, 1])), el(&[3, 3]));
        assert_eq!(r.label(), Some("GR(4,2)"));
        assert!(galois(4, 1, 1).is_err());
        assert!(galois(2, 0, 1).is_err());
    }

    #[test]
    fn family_orders() {
        let f4 = galois(2, 1, 2).unwrap();
        assert_eq!(trunc_poly(&f4, 2).unwrap().order(), 16);
        assert_eq!(square_zero(&zmod(3).unwrap(), 2).unwrap().order(), 27);
        assert_eq!(idealization(2, 2, &[1]).unwrap().order(), 8);
        let prod = product(&[zmod(2).unwrap(), f4.clone()]).unwrap();
        assert_eq!(prod.order(), 8);
        assert_eq!(field(9).unwrap().order(), 9);
        assert!(field(6).is_err());
        assert!(zmod(1).is_err());
        assert!(idealization(2, 1, &[2]).is_err());
    }

    #[test]
    fn poly_quotient_eisenstein() {
        // Z/4[x]/(x^2 + 2): x^2 = 2
        let r = Preset::parse("poly(zmod(2,2),2,0)").unwrap().build().unwrap();
        assert_eq!(r.order(), 16);
        assert_eq!(r.mul(&el(&[0, 1]), &el(&[0, 1])), el(&[2, 0]));
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "zmod(8)",
            "galois(2,2,2)",
            "trunc_poly(galois(2,1,2),2)",
            "square_zero(zmod(2),2)",
            "product(zmod(2),field(4))",
            "idealization(2,2,1)",
            "poly(zmod(4),2,0)",
        ] {
            let p = Preset::parse(text).unwrap();
            assert_eq!(p.to_string(), text);
            assert!(p.build().is_ok());
        }
        assert_eq!(Preset::parse("zmod(2,3)").unwrap(), Preset::Zmod(8));
        assert_eq!(Preset::parse(" trunc_poly( zmod(2) , 3 ) ").unwrap(), Preset::TruncPoly(Box::new(Preset::Zmod(2)), 3));
        assert_eq!(Preset::parse("from_file(a/b.json)").unwrap(), Preset::FromFile("a/b.json".into()));
        assert!(Preset::parse("zmod(2").is_err());
        assert!(Preset::parse("nope(2)").is_err());
        assert!(Preset::parse("trunc_poly(2,2)").is_err());
        assert!(Preset::parse("zmod(2))").is_err());
    }
}
