//! The 256-element ring S = R + vR with v^2 = v and wv = vw.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::r16::RElement;
use super::z4::Z4;
use super::ElementParseError;

/// Element a0 + w a1 + v a2 + wv a3 of S, stored by its Z4 coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SElement {
    pub coords: [Z4; 4],
}

impl SElement {
    pub const ZERO: SElement = SElement {
        coords: [Z4::ZERO; 4],
    };
    pub const ONE: SElement = SElement {
        coords: [Z4::ONE, Z4::ZERO, Z4::ZERO, Z4::ZERO],
    };
    pub const W: SElement = SElement {
        coords: [Z4::ZERO, Z4::ONE, Z4::ZERO, Z4::ZERO],
    };
    pub const V: SElement = SElement {
        coords: [Z4::ZERO, Z4::ZERO, Z4::ONE, Z4::ZERO],
    };
    pub const WV: SElement = SElement {
        coords: [Z4::ZERO, Z4::ZERO, Z4::ZERO, Z4::ONE],
    };

    pub const fn new(a0: Z4, a1: Z4, a2: Z4, a3: Z4) -> SElement {
        SElement {
            coords: [a0, a1, a2, a3],
        }
    }

    /// Build x = A + vB from its R-parts.
    pub fn from_r_pair(a_part: RElement, b_part: RElement) -> SElement {
        SElement::new(a_part.a, a_part.b, b_part.a, b_part.b)
    }

    pub fn from_r(x: RElement) -> SElement {
        SElement::from_r_pair(x, RElement::ZERO)
    }

    pub fn from_z4(c: Z4) -> SElement {
        SElement::from_r(RElement::from_z4(c))
    }

    /// Write x = A + vB; returns (A, B). This is the coordinate projection
    /// map sending a + vb to the pair (a, b).
    pub fn r_pair(self) -> (RElement, RElement) {
        let [a0, a1, a2, a3] = self.coords;
        (RElement::new(a0, a1), RElement::new(a2, a3))
    }

    /// The complement constant (3+3w) + v(3+3w): complement of zero.
    pub fn complement_of_zero() -> SElement {
        SElement::from_r_pair(RElement::THREE_PLUS_3W, RElement::THREE_PLUS_3W)
    }

    pub fn index(self) -> usize {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| (c.value() as usize) << (2 * i))
            .sum()
    }

    pub fn from_index(i: usize) -> SElement {
        SElement::new(
            Z4::new((i & 3) as u8),
            Z4::new((i >> 2 & 3) as u8),
            Z4::new((i >> 4 & 3) as u8),
            Z4::new((i >> 6 & 3) as u8),
        )
    }

    pub fn all() -> impl Iterator<Item = SElement> {
        (0..256).map(SElement::from_index)
    }

    pub fn is_zero(self) -> bool {
        self == SElement::ZERO
    }

    pub fn inverse(self) -> Option<SElement> {
        let (c1, c2) = self.idempotent_split();
        Some(SElement::idempotent_join(c1.inverse()?, c2.inverse()?))
    }

    pub fn is_unit(self) -> bool {
        let (c1, c2) = self.idempotent_split();
        c1.is_unit() && c2.is_unit()
    }

    /// Watson-Crick complement: K - x with K = (3+3w) + v(3+3w).
    pub fn complement(self) -> SElement {
        SElement::complement_of_zero() - self
    }

    /// CRT decomposition: writing x = a + vb, returns (a+b, a), so that
    /// x = v*(a+b) + (1-v)*a. Inverse of `idempotent_join`.
    pub fn idempotent_split(self) -> (RElement, RElement) {
        let (a, b) = self.r_pair();
        (a + b, a)
    }

    /// x = v*c1 + (1-v)*c2.
    pub fn idempotent_join(c1: RElement, c2: RElement) -> SElement {
        SElement::from_r_pair(c2, c1 - c2)
    }

    /// The ring automorphism induced by v -> 1-v; swaps the two idempotent
    /// components of `idempotent_split`.
    pub fn gamma(self) -> SElement {
        let (a, b) = self.r_pair();
        // A + vB -> A + (1-v)B = (A+B) - vB
        SElement::from_r_pair(a + b, -b)
    }
}

impl Add for SElement {
    type Output = SElement;
    fn add(self, rhs: SElement) -> SElement {
        let mut coords = self.coords;
        for (c, r) in coords.iter_mut().zip(rhs.coords) {
            *c = *c + r;
        }
        SElement { coords }
    }
}

impl Sub for SElement {
    type Output = SElement;
    fn sub(self, rhs: SElement) -> SElement {
        let mut coords = self.coords;
        for (c, r) in coords.iter_mut().zip(rhs.coords) {
            *c = *c - r;
        }
        SElement { coords }
    }
}

impl Neg for SElement {
    type Output = SElement;
    fn neg(self) -> SElement {
        SElement::ZERO - self
    }
}

impl Mul for SElement {
    type Output = SElement;
    fn mul(self, rhs: SElement) -> SElement {
        // (A + vB)(C + vD) = AC + v(AD + BC + BD) using v^2 = v
        let (a, b) = self.r_pair();
        let (c, d) = rhs.r_pair();
        SElement::from_r_pair(a * c, a * d + b * c + b * d)
    }
}

impl Mul<Z4> for SElement {
    type Output = SElement;
    fn mul(self, rhs: Z4) -> SElement {
        let mut coords = self.coords;
        for c in &mut coords {
            *c = *c * rhs;
        }
        SElement { coords }
    }
}

impl fmt::Display for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2, a3] = self.coords;
        write!(f, "({a0},{a1},{a2},{a3})")
    }
}

impl FromStr for SElement {
    type Err = ElementParseError;

    /// Accepts the canonical form "(a0,a1,a2,a3)".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ElementParseError::new("S", s);
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(err)?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 4 {
            return Err(err());
        }
        let mut coords = [Z4::ZERO; 4];
        for (i, p) in parts.iter().enumerate() {
            coords[i] = p.parse().map_err(|_| err())?;
        }
        Ok(SElement { coords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a0: u8, a1: u8, a2: u8, a3: u8) -> SElement {
        SElement::new(Z4::new(a0), Z4::new(a1), Z4::new(a2), Z4::new(a3))
    }

    #[test]
    fn defining_relations() {
        assert_eq!(SElement::V * SElement::V, SElement::V);
        assert_eq!(SElement::W * SElement::W, SElement::from_z4(Z4::TWO));
        assert_eq!(SElement::W * SElement::V, SElement::WV);
        assert_eq!(SElement::V * SElement::W, SElement::WV);
        // (wv)(wv) = w^2 v^2 = 2v
        assert_eq!(SElement::WV * SElement::WV, s(0, 0, 2, 0));
        // (1+v)(1+3v) = 1 + 3v
        assert_eq!(s(1, 0, 1, 0) * s(1, 0, 3, 0), s(1, 0, 3, 0));
    }

    #[test]
    fn two_hundred_fifty_six_distinct_values() {
        assert_eq!(SElement::all().count(), 256);
        let set: std::collections::HashSet<usize> = SElement::all().map(|x| x.index()).collect();
        assert_eq!(set.len(), 256);
    }

    #[test]
    fn complement_lemmas() {
        let k = SElement::complement_of_zero();
        assert_eq!(SElement::ZERO.complement(), k);
        for x in SElement::all() {
            assert_eq!(x + x.complement(), k);
            assert_eq!(x.complement().complement(), x);
            // x-bar + 3*(0-bar) = 3x
            assert_eq!(x.complement() + k * Z4::THREE, x * Z4::THREE);
        }
    }

    #[test]
    fn complement_of_sums() {
        // (a+b)-bar = a-bar + b-bar - 3(1+w)(1+v)
        let c = SElement::from_r(RElement::ONE + RElement::W)
            * (SElement::ONE + SElement::V)
            * SElement::from_z4(Z4::THREE);
        for a in SElement::all() {
            for b in SElement::all() {
                assert_eq!((a + b).complement(), a.complement() + b.complement() - c);
            }
        }
    }

    #[test]
    fn idempotent_split_join() {
        // x = 1 + wv splits into (1+w, 1)
        let x = s(1, 0, 0, 1);
        let (c1, c2) = x.idempotent_split();
        assert_eq!(c1, "1+w".parse().unwrap());
        assert_eq!(c2, RElement::ONE);
        for x in SElement::all() {
            let (c1, c2) = x.idempotent_split();
            assert_eq!(SElement::idempotent_join(c1, c2), x);
            // split really is the CRT evaluation: x = v c1 + (1-v) c2
            let v = SElement::V;
            let one_minus_v = SElement::ONE - v;
            assert_eq!(
                v * SElement::from_r(c1) + one_minus_v * SElement::from_r(c2),
                x
            );
        }
        for c in RElement::all() {
            assert_eq!(SElement::idempotent_join(c, c), SElement::from_r(c));
        }
    }

    #[test]
    fn gamma_is_an_order_two_automorphism() {
        assert_eq!(SElement::V.gamma(), s(1, 0, 3, 0));
        assert_eq!(SElement::W.gamma(), SElement::W);
        for x in SElement::all() {
            assert_eq!(x.gamma().gamma(), x);
            // matches the coordinate formula (a0+a2) + w(a1+a3) + 3v a2 + 3wv a3
            let [a0, a1, a2, a3] = x.coords;
            let expect = SElement::new(a0 + a2, a1 + a3, Z4::THREE * a2, Z4::THREE * a3);
            assert_eq!(x.gamma(), expect);
            // swaps the idempotent components
            let (c1, c2) = x.idempotent_split();
            assert_eq!(x.gamma().idempotent_split(), (c2, c1));
        }
    }

    #[test]
    fn sampled_ring_axioms() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let x = SElement::from_index(rng.gen_range(0..256));
            let y = SElement::from_index(rng.gen_range(0..256));
            let z = SElement::from_index(rng.gen_range(0..256));
            assert_eq!(x * y, y * x);
            assert_eq!((x * y) * z, x * (y * z));
            assert_eq!(x * (y + z), x * y + x * z);
            assert_eq!(SElement::ONE * x, x);
        }
    }

    #[test]
    fn display_parse_round_trip() {
        for x in SElement::all() {
            assert_eq!(x.to_string().parse::<SElement>().unwrap(), x);
        }
        assert!("(1,2,3)".parse::<SElement>().is_err());
    }
}
