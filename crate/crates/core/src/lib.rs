//! Minimal polynomials, minimal realisations and Bezout identities for
//! finite sequences over integral domains.
//!
//! The engine in [`lfsr`] is division-free: it works over `GF(2)`, `GF(p)`,
//! the integers and `GF(p)[y]` alike, and carries enough state to produce
//! identities `f . mu = nabla` certifying each minimal realisation.

pub mod annihilator;
pub mod bench;
pub mod bezout;
pub mod cli;
pub mod error;
pub mod lfsr;
pub mod oracle;
pub mod plcp;
pub mod poly;
pub mod reverse;
pub mod ring;
pub mod sequence;

pub use error::{Error, Result};
pub use lfsr::{minimal_polynomial, minimal_realisation, MrState, Realisation};
pub use poly::{PairedPoly, Poly};
pub use ring::{Domain, DomainDescriptor, Field, FiniteField, FpPoly, Gf2, Modulus, Zp};
pub use sequence::Sequence;

pub type Gf2Poly = Poly<Gf2>;
pub type GfpPoly = Poly<Zp>;
pub type IntPoly = Poly<num_bigint::BigInt>;
pub type GfpYPoly = Poly<FpPoly>;
