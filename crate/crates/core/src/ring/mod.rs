//! Exact arithmetic for Z4, R = Z4 + wZ4 (w^2 = 2) and S = R + vR (v^2 = v),
//! together with the automorphisms theta and Gamma, complements, and the
//! structural tables of R.

mod maps;
mod r16;
mod s256;
mod tables;
mod z4;

pub use maps::{
    complement_r_map, validate_ring_map, Counterexample, MapDomain, RingMap, RingMapAudit,
};
pub use r16::RElement;
pub use s256::SElement;
pub use tables::{ring_tables, Ideal, RingTables};
pub use z4::Z4;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

/// Failure to read an element from its canonical text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementParseError {
    pub ring: &'static str,
    pub text: String,
}

impl ElementParseError {
    pub fn new(ring: &'static str, text: &str) -> Self {
        ElementParseError {
            ring,
            text: text.to_string(),
        }
    }
}

impl Display for ElementParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "cannot parse {:?} as an element of {}",
            self.text, self.ring
        )
    }
}

impl std::error::Error for ElementParseError {}

/// Common interface of the three coefficient rings, enough for polynomial
/// arithmetic and brute-force scans.
pub trait CoeffRing:
    Copy
    + Eq
    + Hash
    + Debug
    + Display
    + FromStr<Err = ElementParseError>
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
    + 'static
{
    const RING_NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(self) -> bool;
    fn inverse(self) -> Option<Self>;
    fn from_z4(c: Z4) -> Self;
    /// Every element, in a fixed canonical order.
    fn all_elements() -> Vec<Self>;

    fn is_unit(self) -> bool {
        self.inverse().is_some()
    }

    fn units() -> Vec<Self> {
        Self::all_elements()
            .into_iter()
            .filter(|x| x.is_unit())
            .collect()
    }
}

impl CoeffRing for Z4 {
    const RING_NAME: &'static str = "Z4";

    fn zero() -> Self {
        Z4::ZERO
    }
    fn one() -> Self {
        Z4::ONE
    }
    fn is_zero(self) -> bool {
        Z4::is_zero(self)
    }
    fn inverse(self) -> Option<Self> {
        Z4::inverse(self)
    }
    fn from_z4(c: Z4) -> Self {
        c
    }
    fn all_elements() -> Vec<Self> {
        Z4::all().collect()
    }
}

impl CoeffRing for RElement {
    const RING_NAME: &'static str = "R";

    fn zero() -> Self {
        RElement::ZERO
    }
    fn one() -> Self {
        RElement::ONE
    }
    fn is_zero(self) -> bool {
        RElement::is_zero(self)
    }
    fn inverse(self) -> Option<Self> {
        RElement::inverse(self)
    }
    fn from_z4(c: Z4) -> Self {
        RElement::from_z4(c)
    }
    fn all_elements() -> Vec<Self> {
        RElement::all().collect()
    }
}

impl CoeffRing for SElement {
    const RING_NAME: &'static str = "S";

    fn zero() -> Self {
        SElement::ZERO
    }
    fn one() -> Self {
        SElement::ONE
    }
    fn is_zero(self) -> bool {
        SElement::is_zero(self)
    }
    fn inverse(self) -> Option<Self> {
        SElement::inverse(self)
    }
    fn from_z4(c: Z4) -> Self {
        SElement::from_z4(c)
    }
    fn all_elements() -> Vec<Self> {
        SElement::all().collect()
    }
}
