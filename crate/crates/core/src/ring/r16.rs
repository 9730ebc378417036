//! The 16-element ring R = Z4 + wZ4 with w^2 = 2.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::z4::Z4;
use super::ElementParseError;

/// Element a + wb of R, stored by its Z4 coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RElement {
    pub a: Z4,
    pub b: Z4,
}

impl RElement {
    pub const ZERO: RElement = RElement {
        a: Z4::ZERO,
        b: Z4::ZERO,
    };
    pub const ONE: RElement = RElement {
        a: Z4::ONE,
        b: Z4::ZERO,
    };
    /// The generator w itself.
    pub const W: RElement = RElement {
        a: Z4::ZERO,
        b: Z4::ONE,
    };
    /// 3 + 3w, the complement of zero (every a satisfies a + a-bar = 3+3w).
    pub const THREE_PLUS_3W: RElement = RElement {
        a: Z4::THREE,
        b: Z4::THREE,
    };

    pub const fn new(a: Z4, b: Z4) -> RElement {
        RElement { a, b }
    }

    pub fn from_z4(a: Z4) -> RElement {
        RElement { a, b: Z4::ZERO }
    }

    /// Index in 0..16, a + 4b.
    pub fn index(self) -> usize {
        self.a.value() as usize + 4 * self.b.value() as usize
    }

    pub fn from_index(i: usize) -> RElement {
        RElement::new(Z4::new((i % 4) as u8), Z4::new((i / 4 % 4) as u8))
    }

    pub fn all() -> impl Iterator<Item = RElement> {
        (0..16).map(RElement::from_index)
    }

    pub fn is_zero(self) -> bool {
        self == RElement::ZERO
    }

    /// a + wb is invertible exactly when a is odd; found by exhaustive search.
    pub fn inverse(self) -> Option<RElement> {
        RElement::all().find(|&y| self * y == RElement::ONE)
    }

    pub fn is_unit(self) -> bool {
        self.a.is_unit()
    }

    /// Watson-Crick complement: (3+3w) - x.
    pub fn complement(self) -> RElement {
        RElement::THREE_PLUS_3W - self
    }

    /// The automorphism a + wb -> a - wb.
    pub fn theta(self) -> RElement {
        RElement::new(self.a, -self.b)
    }
}

impl Add for RElement {
    type Output = RElement;
    fn add(self, rhs: RElement) -> RElement {
        RElement::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for RElement {
    type Output = RElement;
    fn sub(self, rhs: RElement) -> RElement {
        RElement::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for RElement {
    type Output = RElement;
    fn neg(self) -> RElement {
        RElement::new(-self.a, -self.b)
    }
}

impl Mul for RElement {
    type Output = RElement;
    fn mul(self, rhs: RElement) -> RElement {
        // (a1 + w b1)(a2 + w b2) = a1 a2 + 2 b1 b2 + w (a1 b2 + a2 b1)
        let a = self.a * rhs.a + Z4::TWO * self.b * rhs.b;
        let b = self.a * rhs.b + rhs.a * self.b;
        RElement::new(a, b)
    }
}

impl Mul<Z4> for RElement {
    type Output = RElement;
    fn mul(self, rhs: Z4) -> RElement {
        RElement::new(self.a * rhs, self.b * rhs)
    }
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a.value(), self.b.value());
        match (a, b) {
            (_, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "w"),
            (0, _) => write!(f, "{b}w"),
            (_, 1) => write!(f, "{a}+w"),
            _ => write!(f, "{a}+{b}w"),
        }
    }
}

impl FromStr for RElement {
    type Err = ElementParseError;

    /// Accepts the canonical forms "a", "bw", "a+bw" (with "w" for "1w").
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ElementParseError::new("R", s);
        let parse_part = |part: &str| -> Result<(Z4, bool), ElementParseError> {
            // returns (coefficient, is_w_part)
            if let Some(head) = part.strip_suffix('w') {
                let c = if head.is_empty() {
                    Z4::ONE
                } else {
                    head.parse().map_err(|_| err())?
                };
                Ok((c, true))
            } else {
                Ok((part.parse().map_err(|_| err())?, false))
            }
        };
        let mut a = Z4::ZERO;
        let mut b = Z4::ZERO;
        let mut seen_a = false;
        let mut seen_b = false;
        for part in s.split('+') {
            let part = part.trim();
            if part.is_empty() {
                return Err(err());
            }
            let (c, is_w) = parse_part(part)?;
            if is_w {
                if seen_b {
                    return Err(err());
                }
                b = c;
                seen_b = true;
            } else {
                if seen_a {
                    return Err(err());
                }
                a = c;
                seen_a = true;
            }
        }
        if !seen_a && !seen_b {
            return Err(err());
        }
        Ok(RElement::new(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RElement {
        s.parse().unwrap()
    }

    #[test]
    fn w_squared_is_two() {
        assert_eq!(RElement::W * RElement::W, r("2"));
    }

    #[test]
    fn product_examples() {
        // (1+w)^2 = 1 + 2w + w^2 = 3 + 2w
        assert_eq!(r("1+w") * r("1+w"), r("3+2w"));
        // (2w)(2w) = 4 w^2 = 8 = 0
        assert_eq!(r("2w") * r("2w"), RElement::ZERO);
        for x in RElement::all() {
            assert_eq!(RElement::ONE * x, x);
        }
    }

    #[test]
    fn sixteen_distinct_values_char_4() {
        let all: Vec<RElement> = RElement::all().collect();
        assert_eq!(all.len(), 16);
        for &x in &all {
            assert_eq!(x + x + x + x, RElement::ZERO);
        }
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for x in RElement::all() {
            for y in RElement::all() {
                assert_eq!(x + y, y + x);
                assert_eq!(x * y, y * x);
                for z in RElement::all() {
                    assert_eq!((x + y) + z, x + (y + z));
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn complement_is_involution_and_shifts_by_constant() {
        assert_eq!(RElement::ZERO.complement(), r("3+3w"));
        assert_eq!(RElement::ONE.complement(), r("2+3w"));
        for x in RElement::all() {
            assert_eq!(x.complement().complement(), x);
            assert_eq!(x + x.complement(), r("3+3w"));
        }
    }

    #[test]
    fn theta_is_an_order_two_automorphism() {
        assert_eq!(RElement::W.theta(), r("3w"));
        for x in RElement::all() {
            assert_eq!(x.theta().theta(), x);
            for y in RElement::all() {
                assert_eq!((x + y).theta(), x.theta() + y.theta());
                assert_eq!((x * y).theta(), x.theta() * y.theta());
            }
        }
    }

    #[test]
    fn theta_complement_identity() {
        // theta(x) + theta(x-bar) = 3 - 3w = 3 + w
        for x in RElement::all() {
            assert_eq!(x.theta() + x.complement().theta(), r("3+w"));
        }
    }

    #[test]
    fn display_parse_round_trip() {
        for x in RElement::all() {
            let s = x.to_string();
            assert!(!s.contains(' '));
            assert_eq!(s.parse::<RElement>().unwrap(), x);
        }
        assert!("q".parse::<RElement>().is_err());
        assert!("1+1".parse::<RElement>().is_err());
    }
}
