//! Gray maps, codon encodings, binary images, quasi-cyclic shifts and the
//! Lee/Hamming metrics.

mod dna;
mod metrics;
mod tables;

pub use dna::{
    codon_to_r, codon_to_s, codons_to_r_vec, codons_to_s_vec, r_to_codon, r_vec_to_codons,
    s_to_codon, s_vec_to_codons, Base, CodonString, DnaError,
};
pub use metrics::{
    hamming_distance, lee_distance_r, lee_distance_s, lee_weight_r, lee_weight_r_vec, lee_weight_s,
    lee_weight_s_vec, MetricError,
};
pub use tables::{
    codon_bits_rows, codon_bits_text, codon_table_rows, codon_table_text, gray_digit_rows,
    table_element_order,
};

use std::fmt;
use std::str::FromStr;

use crate::ring::{RElement, SElement, Z4};

/// The 2-adic digit table for Z4: c = alpha + 2*beta, with gamma the parity
/// complement so each row sums to zero mod 2.
#[derive(Debug, Clone, Copy)]
pub struct GrayTable;

impl GrayTable {
    pub const ALPHA: [u8; 4] = [0, 1, 0, 1];
    pub const BETA: [u8; 4] = [0, 0, 1, 1];
    pub const GAMMA: [u8; 4] = [0, 1, 1, 0];

    pub fn alpha(c: Z4) -> u8 {
        Self::ALPHA[c.value() as usize]
    }

    pub fn beta(c: Z4) -> u8 {
        Self::BETA[c.value() as usize]
    }

    pub fn gamma(c: Z4) -> u8 {
        Self::GAMMA[c.value() as usize]
    }
}

/// psi(c) = (beta(c), gamma(c)).
pub fn psi(c: Z4) -> (u8, u8) {
    (GrayTable::beta(c), GrayTable::gamma(c))
}

/// Inverse of psi; total on bit pairs.
pub fn psi_inv(beta: u8, gamma: u8) -> Z4 {
    match (beta & 1, gamma & 1) {
        (0, 0) => Z4::new(0),
        (0, 1) => Z4::new(1),
        (1, 1) => Z4::new(2),
        _ => Z4::new(3),
    }
}

/// The coordinate projection phi: a + wb -> (a, b).
pub fn phi(x: RElement) -> (Z4, Z4) {
    (x.a, x.b)
}

/// Vector form of phi, all a-parts then all b-parts.
pub fn phi_vec(v: &[RElement]) -> Vec<Z4> {
    v.iter().map(|x| x.a).chain(v.iter().map(|x| x.b)).collect()
}

/// phi1: a + vb -> (a, b) with a, b in R.
pub fn phi1(x: SElement) -> (RElement, RElement) {
    x.r_pair()
}

/// Vector form of phi1, all a-parts then all b-parts.
pub fn phi1_vec(v: &[SElement]) -> Vec<RElement> {
    v.iter()
        .map(|x| x.r_pair().0)
        .chain(v.iter().map(|x| x.r_pair().1))
        .collect()
}

/// Errors from bit-vector operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrayError {
    NotDivisible { len: usize, block: usize },
    InvalidBit(char),
}

impl fmt::Display for GrayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrayError::NotDivisible { len, block } => {
                write!(
                    f,
                    "bit vector length {len} is not divisible by block size {block}"
                )
            }
            GrayError::InvalidBit(c) => write!(f, "invalid bit character {c:?}"),
        }
    }
}

impl std::error::Error for GrayError {}

/// A binary word, printed as a 0/1 string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    pub bits: Vec<u8>,
}

impl BitVector {
    pub fn new(bits: Vec<u8>) -> BitVector {
        BitVector {
            bits: bits.into_iter().map(|b| b & 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BitVector {
    type Err = GrayError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(GrayError::InvalidBit(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitVector::new)
    }
}

/// Binary image of an R element: (beta(a), gamma(a), beta(b), gamma(b)).
pub fn breve_o(x: RElement) -> BitVector {
    let (ba, ga) = psi(x.a);
    let (bb, gb) = psi(x.b);
    BitVector::new(vec![ba, ga, bb, gb])
}

/// Binary image of a vector over R, four bits per coordinate in coordinate
/// order (so the cyclic shift becomes the 4-quasi-cyclic shift).
pub fn breve_o_vec(v: &[RElement]) -> BitVector {
    BitVector::new(v.iter().flat_map(|&x| breve_o(x).bits).collect())
}

pub fn bits_to_r_vec(b: &BitVector) -> Result<Vec<RElement>, GrayError> {
    if !b.len().is_multiple_of(4) {
        return Err(GrayError::NotDivisible {
            len: b.len(),
            block: 4,
        });
    }
    Ok(b.bits
        .chunks(4)
        .map(|c| RElement::new(psi_inv(c[0], c[1]), psi_inv(c[2], c[3])))
        .collect())
}

/// Binary image of an S element: psi of each of the four Z4 coordinates.
pub fn theta_big(x: SElement) -> BitVector {
    let mut bits = Vec::with_capacity(8);
    for c in x.coords {
        let (b, g) = psi(c);
        bits.push(b);
        bits.push(g);
    }
    BitVector::new(bits)
}

/// Binary image of a vector over S, eight bits per coordinate.
pub fn theta_big_vec(v: &[SElement]) -> BitVector {
    BitVector::new(v.iter().flat_map(|&x| theta_big(x).bits).collect())
}

pub fn bits_to_s_vec(b: &BitVector) -> Result<Vec<SElement>, GrayError> {
    if !b.len().is_multiple_of(8) {
        return Err(GrayError::NotDivisible {
            len: b.len(),
            block: 8,
        });
    }
    Ok(b.bits
        .chunks(8)
        .map(|c| {
            SElement::new(
                psi_inv(c[0], c[1]),
                psi_inv(c[2], c[3]),
                psi_inv(c[4], c[5]),
                psi_inv(c[6], c[7]),
            )
        })
        .collect())
}

/// Rotates the sequence of blocks right by one: the last block moves to the
/// front.
pub fn quasi_shift(b: &BitVector, block: usize) -> Result<BitVector, GrayError> {
    if block == 0 || !b.len().is_multiple_of(block) {
        return Err(GrayError::NotDivisible {
            len: b.len(),
            block,
        });
    }
    if b.is_empty() {
        return Ok(b.clone());
    }
    let split = b.len() - block;
    let mut bits = b.bits[split..].to_vec();
    bits.extend_from_slice(&b.bits[..split]);
    Ok(BitVector::new(bits))
}

/// A finite set of equal-length bit vectors is quasi-cyclic of the given
/// index when it is closed under the blockwise rotation.
pub fn is_quasi_cyclic(set: &[BitVector], block: usize) -> Result<bool, GrayError> {
    use std::collections::HashSet;
    let all: HashSet<&BitVector> = set.iter().collect();
    for b in set {
        let shifted = quasi_shift(b, block)?;
        if !all.contains(&shifted) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gray::dna::{r_to_codon, s_to_codon};

    fn r(s: &str) -> RElement {
        s.parse().unwrap()
    }

    #[test]
    fn gray_table_consistency() {
        for c in Z4::all() {
            let a = GrayTable::alpha(c);
            let b = GrayTable::beta(c);
            let g = GrayTable::gamma(c);
            assert_eq!(c.value(), a + 2 * b);
            assert_eq!((a + b + g) % 2, 0);
        }
    }

    #[test]
    fn psi_rows() {
        assert_eq!(psi(Z4::new(0)), (0, 0));
        assert_eq!(psi(Z4::new(2)), (1, 1));
        assert_eq!(psi(Z4::new(3)), (1, 0));
        for c in Z4::all() {
            let (b, g) = psi(c);
            assert_eq!(psi_inv(b, g), c);
        }
    }

    #[test]
    fn phi_projections() {
        assert_eq!(phi(r("1+2w")), (Z4::new(1), Z4::new(2)));
        assert_eq!(phi(RElement::ZERO), (Z4::ZERO, Z4::ZERO));
        assert_eq!(phi(r("3+2w")), (Z4::new(3), Z4::new(2)));
        let v = vec![r("1+2w"), r("3+w")];
        assert_eq!(
            phi_vec(&v),
            vec![Z4::new(1), Z4::new(3), Z4::new(2), Z4::new(1)]
        );
    }

    #[test]
    fn breve_o_matches_codon_bit_table() {
        assert_eq!(breve_o(r("3+2w")).to_string(), "1011"); // TG
        assert_eq!(breve_o(RElement::ZERO).to_string(), "0000"); // AA
        assert_eq!(breve_o(RElement::ONE).to_string(), "0100"); // CA
                                                                // per-letter 2-bit code: A->00, C->01, G->11, T->10
        let letter_bits = |ch: char| match ch {
            'A' => "00",
            'C' => "01",
            'G' => "11",
            _ => "10",
        };
        for x in RElement::all() {
            let via_codon: String = r_to_codon(x).to_string().chars().map(letter_bits).collect();
            assert_eq!(breve_o(x).to_string(), via_codon);
        }
    }

    #[test]
    fn theta_big_examples() {
        assert_eq!(theta_big(SElement::ZERO).to_string(), "00000000");
        assert_eq!(theta_big(SElement::V).to_string(), "00000100");
        // coords (1, 0, 3, 3) -> 01 00 10 10
        let x = SElement::new(Z4::new(1), Z4::new(0), Z4::new(3), Z4::new(3));
        assert_eq!(theta_big(x).to_string(), "01001010");
        assert_eq!(s_to_codon(x).to_string(), "CATT");
    }

    #[test]
    fn bit_round_trips() {
        for x in RElement::all() {
            assert_eq!(bits_to_r_vec(&breve_o_vec(&[x])).unwrap(), vec![x]);
        }
        for x in SElement::all() {
            assert_eq!(bits_to_s_vec(&theta_big_vec(&[x])).unwrap(), vec![x]);
        }
    }

    #[test]
    fn quasi_shift_behaviour() {
        let b: BitVector = "01000001".parse().unwrap();
        assert_eq!(quasi_shift(&b, 4).unwrap().to_string(), "00010100");
        let single: BitVector = "0110".parse().unwrap();
        assert_eq!(quasi_shift(&single, 4).unwrap(), single);
        assert!(quasi_shift(&b, 3).is_err());
    }

    #[test]
    fn intertwines_with_cyclic_shift() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=8usize {
            for _ in 0..200 {
                let v: Vec<RElement> = (0..n)
                    .map(|_| RElement::from_index(rng.gen_range(0..16)))
                    .collect();
                let mut shifted = v.clone();
                shifted.rotate_right(1);
                assert_eq!(
                    quasi_shift(&breve_o_vec(&v), 4).unwrap(),
                    breve_o_vec(&shifted)
                );

                let s: Vec<SElement> = (0..n)
                    .map(|_| SElement::from_index(rng.gen_range(0..256)))
                    .collect();
                let mut s_shifted = s.clone();
                s_shifted.rotate_right(1);
                assert_eq!(
                    quasi_shift(&theta_big_vec(&s), 8).unwrap(),
                    theta_big_vec(&s_shifted)
                );
            }
        }
    }

    #[test]
    fn phi1_vector_layout() {
        use crate::ring::SElement;
        let x = SElement::from_r_pair(r("1"), r("2w"));
        let y = SElement::from_r_pair(r("3+w"), r("0"));
        assert_eq!(phi1(x), (r("1"), r("2w")));
        assert_eq!(phi1_vec(&[x, y]), vec![r("1"), r("3+w"), r("2w"), r("0")]);
    }

    #[test]
    fn explicit_sets_of_bit_vectors() {
        // the orbit of a word under the block shift is quasi-cyclic
        let b: BitVector = "01000001".parse().unwrap();
        let mut orbit = vec![b.clone()];
        let mut cur = b;
        let block = 4;
        loop {
            cur = quasi_shift(&cur, block).unwrap();
            if cur == orbit[0] {
                break;
            }
            orbit.push(cur.clone());
        }
        assert!(is_quasi_cyclic(&orbit, block).unwrap());
        orbit.pop();
        assert!(!is_quasi_cyclic(&orbit, block).unwrap());
    }

    #[test]
    fn psi_is_not_additive() {
        // the tabulated Gray map is an isometry but not Z2-linear:
        // psi(1) + psi(1) = (0,0) while psi(2) = (1,1)
        let (b1, g1) = psi(Z4::new(1));
        let sum = ((b1 + b1) % 2, (g1 + g1) % 2);
        assert_ne!(sum, psi(Z4::new(2)));
    }
}
