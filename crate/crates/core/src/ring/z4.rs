//! The base residue ring Z4.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Residue mod 4, the coefficient domain everything else is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    pub const fn new(v: u8) -> Z4 {
        Z4(v & 3)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Z4> {
        (0u8..4).map(Z4)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Units of Z4 are 1 and 3; both are their own inverse.
    pub fn inverse(self) -> Option<Z4> {
        match self.0 {
            1 => Some(Z4(1)),
            3 => Some(Z4(3)),
            _ => None,
        }
    }

    pub fn is_unit(self) -> bool {
        self.0 % 2 == 1
    }

    /// Lee weight on Z4: 0, 1, 2, 1 for residues 0, 1, 2, 3.
    pub fn lee_weight(self) -> u64 {
        match self.0 {
            0 => 0,
            2 => 2,
            _ => 1,
        }
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((4 + self.0 - rhs.0) & 3)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Z4 {
    type Err = super::ElementParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "0" => Ok(Z4(0)),
            "1" => Ok(Z4(1)),
            "2" => Ok(Z4(2)),
            "3" => Ok(Z4(3)),
            other => Err(super::ElementParseError::new("Z4", other)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_matches_integers_mod_4() {
        for a in 0u8..4 {
            for b in 0u8..4 {
                assert_eq!((Z4::new(a) + Z4::new(b)).value(), (a + b) % 4);
                assert_eq!((Z4::new(a) * Z4::new(b)).value(), (a * b) % 4);
                assert_eq!((Z4::new(a) - Z4::new(b)).value(), (4 + a - b) % 4);
            }
        }
    }

    #[test]
    fn units_and_inverses() {
        assert!(Z4::ONE.is_unit());
        assert!(Z4::THREE.is_unit());
        assert!(!Z4::ZERO.is_unit());
        assert!(!Z4::TWO.is_unit());
        for u in Z4::all().filter(|u| u.is_unit()) {
            assert_eq!(u * u.inverse().unwrap(), Z4::ONE);
        }
    }

    #[test]
    fn lee_digits() {
        let w: Vec<u64> = Z4::all().map(|c| c.lee_weight()).collect();
        assert_eq!(w, vec![0, 1, 2, 1]);
    }
}
