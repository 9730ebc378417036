//! DNA alphabet, codon strings, and the codon encodings of R and S.

use std::fmt;
use std::str::FromStr;

use crate::ring::{RElement, SElement, Z4};

/// One nucleotide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    A,
    C,
    G,
    T,
}

impl Base {
    /// The letter code 0 -> A, 1 -> C, 2 -> G, 3 -> T.
    pub fn from_z4(c: Z4) -> Base {
        match c.value() {
            0 => Base::A,
            1 => Base::C,
            2 => Base::G,
            _ => Base::T,
        }
    }

    pub fn to_z4(self) -> Z4 {
        match self {
            Base::A => Z4::new(0),
            Base::C => Z4::new(1),
            Base::G => Z4::new(2),
            Base::T => Z4::new(3),
        }
    }

    /// Watson-Crick pairing A<->T, C<->G.
    pub fn complement(self) -> Base {
        match self {
            Base::A => Base::T,
            Base::T => Base::A,
            Base::C => Base::G,
            Base::G => Base::C,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Base::A => 'A',
            Base::C => 'C',
            Base::G => 'G',
            Base::T => 'T',
        }
    }

    pub fn from_char(c: char) -> Result<Base, DnaError> {
        match c {
            'A' => Ok(Base::A),
            'C' => Ok(Base::C),
            'G' => Ok(Base::G),
            'T' => Ok(Base::T),
            other => Err(DnaError::InvalidLetter(other)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DnaError {
    InvalidLetter(char),
    WrongLength { expected: usize, got: usize },
}

impl fmt::Display for DnaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DnaError::InvalidLetter(c) => write!(f, "invalid DNA letter {c:?}"),
            DnaError::WrongLength { expected, got } => {
                write!(f, "expected a DNA string of length {expected}, got {got}")
            }
        }
    }
}

impl std::error::Error for DnaError {}

/// A word over {A, C, G, T}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CodonString {
    pub bases: Vec<Base>,
}

impl CodonString {
    pub fn new(bases: Vec<Base>) -> CodonString {
        CodonString { bases }
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn reverse(&self) -> CodonString {
        CodonString::new(self.bases.iter().rev().copied().collect())
    }

    /// Letterwise Watson-Crick complement.
    pub fn complement(&self) -> CodonString {
        CodonString::new(self.bases.iter().map(|b| b.complement()).collect())
    }

    pub fn reverse_complement(&self) -> CodonString {
        self.complement().reverse()
    }

    /// Number of G and C letters.
    pub fn gc_content(&self) -> usize {
        self.bases
            .iter()
            .filter(|b| matches!(b, Base::G | Base::C))
            .count()
    }
}

impl fmt::Display for CodonString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bases {
            write!(f, "{}", b.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for CodonString {
    type Err = DnaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(Base::from_char)
            .collect::<Result<Vec<_>, _>>()
            .map(CodonString::new)
    }
}

/// Two-letter codon of an R element: L(a) L(b).
pub fn r_to_codon(x: RElement) -> CodonString {
    CodonString::new(vec![Base::from_z4(x.a), Base::from_z4(x.b)])
}

pub fn codon_to_r(c: &CodonString) -> Result<RElement, DnaError> {
    if c.len() != 2 {
        return Err(DnaError::WrongLength {
            expected: 2,
            got: c.len(),
        });
    }
    Ok(RElement::new(c.bases[0].to_z4(), c.bases[1].to_z4()))
}

/// Four-letter codon of an S element: the two R codons of its phi1 parts.
pub fn s_to_codon(x: SElement) -> CodonString {
    let (a, b) = x.r_pair();
    let mut bases = r_to_codon(a).bases;
    bases.extend(r_to_codon(b).bases);
    CodonString::new(bases)
}

pub fn codon_to_s(c: &CodonString) -> Result<SElement, DnaError> {
    if c.len() != 4 {
        return Err(DnaError::WrongLength {
            expected: 4,
            got: c.len(),
        });
    }
    let a = codon_to_r(&CodonString::new(c.bases[0..2].to_vec()))?;
    let b = codon_to_r(&CodonString::new(c.bases[2..4].to_vec()))?;
    Ok(SElement::from_r_pair(a, b))
}

/// 2n-letter string of a vector over R, coordinate by coordinate.
pub fn r_vec_to_codons(v: &[RElement]) -> CodonString {
    CodonString::new(v.iter().flat_map(|&x| r_to_codon(x).bases).collect())
}

pub fn codons_to_r_vec(c: &CodonString) -> Result<Vec<RElement>, DnaError> {
    if !c.len().is_multiple_of(2) {
        return Err(DnaError::WrongLength {
            expected: c.len() + 1,
            got: c.len(),
        });
    }
    c.bases
        .chunks(2)
        .map(|ch| codon_to_r(&CodonString::new(ch.to_vec())))
        .collect()
}

/// 4n-letter string of a vector over S, coordinate by coordinate.
pub fn s_vec_to_codons(v: &[SElement]) -> CodonString {
    CodonString::new(v.iter().flat_map(|&x| s_to_codon(x).bases).collect())
}

pub fn codons_to_s_vec(c: &CodonString) -> Result<Vec<SElement>, DnaError> {
    if !c.len().is_multiple_of(4) {
        return Err(DnaError::WrongLength {
            expected: c.len() + 4 - c.len() % 4,
            got: c.len(),
        });
    }
    c.bases
        .chunks(4)
        .map(|ch| codon_to_s(&CodonString::new(ch.to_vec())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RElement {
        s.parse().unwrap()
    }

    #[test]
    fn codon_table_spot_checks() {
        assert_eq!(r_to_codon(r("2+3w")).to_string(), "GT");
        assert_eq!(r_to_codon(r("w")).to_string(), "AC");
        assert_eq!(r_to_codon(r("1+2w")).to_string(), "CG");
        assert_eq!(r_to_codon(RElement::ZERO).to_string(), "AA");
    }

    #[test]
    fn r_codon_round_trip_bijective() {
        let mut seen = std::collections::HashSet::new();
        for x in RElement::all() {
            let c = r_to_codon(x);
            assert_eq!(codon_to_r(&c).unwrap(), x);
            seen.insert(c.to_string());
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn s_codon_examples() {
        // phi1(2wv) = (0, 2w) -> AAAG
        let x = SElement::from_r_pair(RElement::ZERO, r("2w"));
        assert_eq!(s_to_codon(x).to_string(), "AAAG");
        assert_eq!(s_to_codon(SElement::ZERO).to_string(), "AAAA");
        // 1 + v(3+3w) -> CATT
        let y = SElement::from_r_pair(RElement::ONE, r("3+3w"));
        assert_eq!(s_to_codon(y).to_string(), "CATT");
    }

    #[test]
    fn s_codon_round_trip_bijective() {
        let mut seen = std::collections::HashSet::new();
        for x in SElement::all() {
            let c = s_to_codon(x);
            assert_eq!(codon_to_s(&c).unwrap(), x);
            seen.insert(c.to_string());
        }
        assert_eq!(seen.len(), 256);
    }

    #[test]
    fn complement_compatibility() {
        for x in RElement::all() {
            assert_eq!(r_to_codon(x.complement()), r_to_codon(x).complement());
        }
        for x in SElement::all() {
            assert_eq!(s_to_codon(x.complement()), s_to_codon(x).complement());
        }
    }

    #[test]
    fn string_operations() {
        let s: CodonString = "ATCCG".parse().unwrap();
        assert_eq!(s.complement().to_string(), "TAGGC");
        assert_eq!(
            "AC".parse::<CodonString>().unwrap().reverse().to_string(),
            "CA"
        );
        assert_eq!("ACGT".parse::<CodonString>().unwrap().gc_content(), 2);
        let t: CodonString = "ACGT".parse().unwrap();
        assert_eq!(t.reverse().reverse(), t);
        assert_eq!(t.complement().len(), t.len());
    }

    #[test]
    fn rejects_bad_input() {
        assert!("AXGT".parse::<CodonString>().is_err());
        let three: CodonString = "ACG".parse().unwrap();
        assert!(codon_to_r(&three).is_err());
        assert!(codon_to_s(&three).is_err());
    }
}
