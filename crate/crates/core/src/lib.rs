//! Exact computations in finite commutative unital rings: local
//! decomposition, Teichmüller units, Galois and coefficient rings, the
//! characteristic module `m / (m^2 + pR)` of a local ring, and the
//! enumeration and counting of maximal subrings, each paired with a
//! brute-force oracle.

pub mod arith;
pub mod catalog;
pub mod decomposition;
pub mod error;
pub mod iso;
pub mod lattice;
pub mod local;
pub mod poly;
pub mod presets;
pub mod ring;
pub mod verify;
mod snf;

pub use error::{Result, RingError};
pub use ring::{AdditiveSubgroup, FiniteRing, Ideal, QuotientRing, RingElement, Subring};

/// Default element-count bound for exhaustive scans.
pub const DEFAULT_SCAN_BOUND: u64 = 1 << 16;
/// Default element-count bound for the subring-census oracle.
pub const DEFAULT_ORACLE_BOUND: u64 = 1 << 12;
