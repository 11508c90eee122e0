//! The built-in test catalog of small rings with their expected invariants.

use serde::Serialize;

use crate::error::Result;
use crate::presets::Preset;
use crate::ring::FiniteRing;

/// Expected invariants of a local catalog ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub rho: u32,
    pub q: u64,
    pub n: u32,
    #[serde(rename = "N")]
    pub big_n: u32,
    pub count_same_residue: u128,
    pub count_total: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub expression: &'static str,
    /// `None` for rings that are not local.
    pub expected: Option<Expected>,
    pub provenance: &'static str,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<FiniteRing> {
        Ok(Preset::parse(self.expression)?.build()?.with_label(self.name))
    }
}

const FORMULA: &str = "formula: (q^rho - 1)/(q - 1) same-residue, plus omega(n) subfield preimages";
const ORACLE: &str = "oracle: breadth-first subring census";
const PRODUCT: &str = "product of local rings; checked through the local factorization";

fn local(
    name: &'static str,
    expression: &'static str,
    (rho, q, n, big_n): (u32, u64, u32, u32),
    (same, total): (u128, u128),
    provenance: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        expression,
        expected: Some(Expected {
            rho,
            q,
            n,
            big_n,
            count_same_residue: same,
            count_total: total,
        }),
        provenance,
    }
}

fn product(name: &'static str, expression: &'static str) -> CatalogEntry {
    CatalogEntry {
        name,
        expression,
        expected: None,
        provenance: PRODUCT,
    }
}

/// The catalog, smallest rings first within each family.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        local("Z/2", "zmod(2)", (0, 2, 1, 1), (0, 0), FORMULA),
        local("Z/4", "zmod(4)", (0, 2, 1, 2), (0, 0), FORMULA),
        local("Z/8", "zmod(8)", (0, 2, 1, 3), (0, 0), FORMULA),
        local("Z/3", "zmod(3)", (0, 3, 1, 1), (0, 0), FORMULA),
        local("Z/9", "zmod(9)", (0, 3, 1, 2), (0, 0), FORMULA),
        local("F_4", "field(4)", (0, 4, 2, 1), (0, 1), FORMULA),
        local("F_8", "field(8)", (0, 8, 3, 1), (0, 1), FORMULA),
        local("F_9", "field(9)", (0, 9, 2, 1), (0, 1), FORMULA),
        local("F_16", "field(16)", (0, 16, 4, 1), (0, 1), FORMULA),
        local("F_64", "field(64)", (0, 64, 6, 1), (0, 2), FORMULA),
        local("GR(4,2)", "galois(2,2,2)", (0, 4, 2, 2), (0, 1), FORMULA),
        local("GR(9,2)", "galois(3,2,2)", (0, 9, 2, 2), (0, 1), FORMULA),
        local("GR(4,3)", "galois(2,2,3)", (0, 8, 3, 2), (0, 1), FORMULA),
        local("F_2[x]/(x^2)", "trunc_poly(field(2),2)", (1, 2, 1, 1), (1, 1), ORACLE),
        local("F_2[x]/(x^3)", "trunc_poly(field(2),3)", (1, 2, 1, 1), (1, 1), ORACLE),
        local("F_2[x]/(x^4)", "trunc_poly(field(2),4)", (1, 2, 1, 1), (1, 1), ORACLE),
        local("F_3[x]/(x^2)", "trunc_poly(field(3),2)", (1, 3, 1, 1), (1, 1), ORACLE),
        local("F_3[x]/(x^3)", "trunc_poly(field(3),3)", (1, 3, 1, 1), (1, 1), ORACLE),
        local("F_3[x]/(x^4)", "trunc_poly(field(3),4)", (1, 3, 1, 1), (1, 1), ORACLE),
        local("F_4[x]/(x^2)", "trunc_poly(field(4),2)", (1, 4, 2, 1), (1, 2), ORACLE),
        local("F_2[x,y]/(x,y)^2", "square_zero(field(2),2)", (2, 2, 1, 1), (3, 3), ORACLE),
        local("F_3[x,y]/(x,y)^2", "square_zero(field(3),2)", (2, 3, 1, 1), (4, 4), ORACLE),
        local("F_4[x,y]/(x,y)^2", "square_zero(field(4),2)", (2, 4, 2, 1), (5, 6), ORACLE),
        local("Z/4[x]/(x^2,2x)", "idealization(2,2,1)", (1, 2, 1, 2), (1, 1), ORACLE),
        local("Z/4[x]/(x^2)", "trunc_poly(zmod(4),2)", (1, 2, 1, 2), (1, 1), ORACLE),
        local("Z/4[x]/(x^2+2)", "poly(zmod(4),2,0)", (1, 2, 1, 2), (1, 1), ORACLE),
        product("F_2 x F_2", "product(field(2),field(2))"),
        product("F_2 x F_4", "product(field(2),field(4))"),
        product("F_4 x F_4", "product(field(4),field(4))"),
        product("Z/6", "zmod(6)"),
        product("Z/12", "zmod(12)"),
    ]
}
