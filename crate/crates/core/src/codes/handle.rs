//! Code handles: a code over R or S is carried by the Howell basis of its
//! Z4 coordinate module (width 2n over R, 4n over S).

use std::fmt;

use crate::engine::{howell, EngineError, HowellBasis, Z4Matrix};
use crate::gray::{bits_to_r_vec, bits_to_s_vec};
use crate::gray::{breve_o_vec, quasi_shift, r_vec_to_codons, s_vec_to_codons, theta_big_vec};
use crate::gray::{lee_weight_r_vec, lee_weight_s_vec};
use crate::ring::{RElement, SElement, Z4};

use super::vector::{
    complement_of_zero_r, complement_of_zero_s, cyclic_shift, decode_r, decode_s, display_r_vec,
    display_s_vec, encode_r, encode_s, rc_r_vec, rc_s_vec, reverse,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingTag {
    R,
    S,
}

impl RingTag {
    /// Z4 columns per ring coordinate.
    pub fn block(self) -> usize {
        match self {
            RingTag::R => 2,
            RingTag::S => 4,
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::R => write!(f, "R"),
            RingTag::S => write!(f, "S"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    EvenLength(usize),
    /// The divisibility chain a | g | x^n - 1 does not hold.
    DivisibilityChain(String),
    NotMonic(String),
    NotRightDivisor(String),
    LengthMismatch {
        left: usize,
        right: usize,
    },
    RingMismatch,
    Poly(crate::poly::PolyError),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::EvenLength(n) => write!(f, "length {n} is even; odd length required"),
            BuildError::DivisibilityChain(s) => write!(f, "divisibility chain violated: {s}"),
            BuildError::NotMonic(p) => write!(f, "polynomial {p} is not monic"),
            BuildError::NotRightDivisor(p) => {
                write!(f, "{p} is not a right divisor of x^n-1")
            }
            BuildError::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            BuildError::RingMismatch => write!(f, "operands live over different rings"),
            BuildError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BuildError {}

impl From<crate::poly::PolyError> for BuildError {
    fn from(e: crate::poly::PolyError) -> Self {
        BuildError::Poly(e)
    }
}

/// Which weight a distance computation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Hamming,
    Lee,
}

/// A linear code over R or S, its basis closed under multiplication by the
/// ring generators (checked at construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeHandle {
    pub ring: RingTag,
    pub n: usize,
    pub provenance: String,
    pub basis: HowellBasis,
}

/// Builds the Z4 module spanned by the given R-vectors, closed under
/// multiplication by w and optionally under the cyclic shift.
pub fn build_r_code(
    n: usize,
    generators: &[Vec<RElement>],
    cyclic_closure: bool,
    provenance: impl Into<String>,
) -> CodeHandle {
    let mut m = Z4Matrix::new(2 * n);
    for g in generators {
        assert_eq!(g.len(), n, "generator length mismatch");
        let shifts = if cyclic_closure { n } else { 1 };
        let mut cur = g.clone();
        for _ in 0..shifts {
            for u in [RElement::ONE, RElement::W] {
                m.push_row(encode_r(&cur.iter().map(|&x| x * u).collect::<Vec<_>>()));
            }
            cur = cyclic_shift(&cur);
        }
    }
    let handle = CodeHandle {
        ring: RingTag::R,
        n,
        provenance: provenance.into(),
        basis: howell(&m),
    };
    assert!(
        handle.check_ring_closure(),
        "constructed basis not w-closed"
    );
    handle
}

/// As `build_r_code` over S, closing under 1, w, v, wv.
pub fn build_s_code(
    n: usize,
    generators: &[Vec<SElement>],
    cyclic_closure: bool,
    provenance: impl Into<String>,
) -> CodeHandle {
    let mut m = Z4Matrix::new(4 * n);
    for g in generators {
        assert_eq!(g.len(), n, "generator length mismatch");
        let shifts = if cyclic_closure { n } else { 1 };
        let mut cur = g.clone();
        for _ in 0..shifts {
            for u in [SElement::ONE, SElement::W, SElement::V, SElement::WV] {
                m.push_row(encode_s(&cur.iter().map(|&x| x * u).collect::<Vec<_>>()));
            }
            cur = cyclic_shift(&cur);
        }
    }
    let handle = CodeHandle {
        ring: RingTag::S,
        n,
        provenance: provenance.into(),
        basis: howell(&m),
    };
    assert!(
        handle.check_ring_closure(),
        "constructed basis not ring-closed"
    );
    handle
}

impl CodeHandle {
    pub fn width(&self) -> usize {
        self.n * self.ring.block()
    }

    pub fn cardinality(&self) -> u128 {
        self.basis.cardinality()
    }

    pub fn contains_r(&self, v: &[RElement]) -> bool {
        assert_eq!(self.ring, RingTag::R);
        assert_eq!(v.len(), self.n);
        self.basis.contains(&encode_r(v))
    }

    pub fn contains_s(&self, v: &[SElement]) -> bool {
        assert_eq!(self.ring, RingTag::S);
        assert_eq!(v.len(), self.n);
        self.basis.contains(&encode_s(v))
    }

    pub fn basis_r_rows(&self) -> Vec<Vec<RElement>> {
        assert_eq!(self.ring, RingTag::R);
        self.basis.rows().iter().map(|r| decode_r(r)).collect()
    }

    pub fn basis_s_rows(&self) -> Vec<Vec<SElement>> {
        assert_eq!(self.ring, RingTag::S);
        self.basis.rows().iter().map(|r| decode_s(r)).collect()
    }

    /// The basis really is a module over the full ring, not just over Z4.
    pub fn check_ring_closure(&self) -> bool {
        match self.ring {
            RingTag::R => self.basis_r_rows().iter().all(|row| {
                let scaled: Vec<RElement> = row.iter().map(|&x| x * RElement::W).collect();
                self.contains_r(&scaled)
            }),
            RingTag::S => self.basis_s_rows().iter().all(|row| {
                [SElement::W, SElement::V, SElement::WV].iter().all(|&u| {
                    let scaled: Vec<SElement> = row.iter().map(|&x| x * u).collect();
                    self.contains_s(&scaled)
                })
            }),
        }
    }

    /// The shift of every basis row stays inside; sound because sigma is
    /// Z4-linear.
    pub fn is_cyclic(&self) -> bool {
        match self.ring {
            RingTag::R => self
                .basis_r_rows()
                .iter()
                .all(|row| self.contains_r(&cyclic_shift(row))),
            RingTag::S => self
                .basis_s_rows()
                .iter()
                .all(|row| self.contains_s(&cyclic_shift(row))),
        }
    }

    /// Coordinate reversal of every basis row stays inside; reversal is a
    /// Z4-linear coordinate permutation, so the basis check suffices.
    pub fn is_reversible(&self) -> bool {
        match self.ring {
            RingTag::R => self
                .basis_r_rows()
                .iter()
                .all(|row| self.contains_r(&reverse(row))),
            RingTag::S => self
                .basis_s_rows()
                .iter()
                .all(|row| self.contains_s(&reverse(row))),
        }
    }

    /// Membership of the complement-of-zero vector.
    pub fn contains_complement_of_zero(&self) -> bool {
        match self.ring {
            RingTag::R => self.contains_r(&complement_of_zero_r(self.n)),
            RingTag::S => self.contains_s(&complement_of_zero_s(self.n)),
        }
    }

    /// Affine reduction of reverse-complement closure: rc(x) = 3 x^r + 0-bar
    /// coordinatewise, so closure is reversibility plus membership of the
    /// complement of zero.
    pub fn is_rc_closed(&self) -> bool {
        self.is_reversible() && self.contains_complement_of_zero()
    }

    /// Definitional check by full enumeration, when the code is small enough.
    pub fn definitional_rc_closed(&self, cap: u128) -> Option<bool> {
        let words = self.basis.enumerate(cap).ok()?;
        Some(match self.ring {
            RingTag::R => words
                .iter()
                .all(|row| self.contains_r(&rc_r_vec(&decode_r(row)))),
            RingTag::S => words
                .iter()
                .all(|row| self.contains_s(&rc_s_vec(&decode_s(row)))),
        })
    }

    /// Definitional check on zero, all basis rows and seeded samples; finds
    /// a violation whenever one exists at the module level.
    pub fn sampled_rc_closed(&self, seed: u64, samples: usize) -> (bool, Option<String>) {
        let mut probes: Vec<Vec<Z4>> = vec![vec![Z4::ZERO; self.width()]];
        probes.extend(self.basis.rows().iter().cloned());
        probes.extend(self.basis.sample(seed, samples));
        for row in &probes {
            let ok = match self.ring {
                RingTag::R => self.contains_r(&rc_r_vec(&decode_r(row))),
                RingTag::S => self.contains_s(&rc_s_vec(&decode_s(row))),
            };
            if !ok {
                let witness = match self.ring {
                    RingTag::R => display_r_vec(&decode_r(row)),
                    RingTag::S => display_s_vec(&decode_s(row)),
                };
                return (
                    false,
                    Some(format!("rc of codeword {witness} is not a codeword")),
                );
            }
        }
        (true, None)
    }

    /// Exact minimum nonzero weight by enumeration.
    pub fn min_distance(&self, metric: Metric, cap: u128) -> Result<u64, EngineError> {
        let words = self.basis.enumerate(cap)?;
        let mut best: Option<u64> = None;
        for row in &words {
            if row.iter().all(|c| c.is_zero()) {
                continue;
            }
            let wgt = match (self.ring, metric) {
                (RingTag::R, Metric::Hamming) => {
                    decode_r(row).iter().filter(|x| !x.is_zero()).count() as u64
                }
                (RingTag::S, Metric::Hamming) => {
                    decode_s(row).iter().filter(|x| !x.is_zero()).count() as u64
                }
                (RingTag::R, Metric::Lee) => lee_weight_r_vec(&decode_r(row)),
                (RingTag::S, Metric::Lee) => lee_weight_s_vec(&decode_s(row)),
            };
            best = Some(best.map_or(wgt, |b| b.min(wgt)));
        }
        Ok(best.unwrap_or(0))
    }

    /// Every codeword as a codon string, lexicographically sorted.
    pub fn export_dna_book(&self, cap: u128) -> Result<Vec<String>, EngineError> {
        let words = self.basis.enumerate(cap)?;
        let mut book: Vec<String> = words
            .iter()
            .map(|row| match self.ring {
                RingTag::R => r_vec_to_codons(&decode_r(row)).to_string(),
                RingTag::S => s_vec_to_codons(&decode_s(row)).to_string(),
            })
            .collect();
        book.sort();
        Ok(book)
    }

    /// The Gray image of every basis row, quasi-shifted by one block,
    /// decodes back to a codeword.
    pub fn gray_image_quasi_cyclic(&self) -> bool {
        match self.ring {
            RingTag::R => self.basis_r_rows().iter().all(|row| {
                let shifted = quasi_shift(&breve_o_vec(row), 4).expect("4 | 4n");
                self.contains_r(&bits_to_r_vec(&shifted).expect("4 | 4n"))
            }),
            RingTag::S => self.basis_s_rows().iter().all(|row| {
                let shifted = quasi_shift(&theta_big_vec(row), 8).expect("8 | 8n");
                self.contains_s(&bits_to_s_vec(&shifted).expect("8 | 8n"))
            }),
        }
    }

    pub fn descriptor(&self) -> String {
        format!(
            "code over {} of length {} with {} codewords ({})",
            self.ring,
            self.n,
            self.cardinality(),
            self.provenance
        )
    }
}
