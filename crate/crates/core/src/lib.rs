//! Construction, analysis and machine verification of cyclic, skew-cyclic
//! and Gamma-set DNA codes over the finite rings R = Z4[w]/(w^2 - 2) and
//! S = R[v]/(v^2 - v).
//!
//! Every code is represented as a Z4-submodule in Howell canonical form,
//! which makes membership, cardinality, equality, sums and intersections
//! exact and cheap at desk scale. Gray maps connect ring vectors to DNA
//! codon strings over {A, C, G, T} and to binary images.

pub mod audits;
pub mod codes;
pub mod engine;
pub mod gray;
pub mod poly;
pub mod report;
pub mod ring;

/// Default seed for every randomized check; always printed in reports.
pub const DEFAULT_SEED: u64 = 0xD0C0_11AB;

/// Default enumeration cap (number of codewords).
pub const DEFAULT_CAP: u128 = 1 << 20;
