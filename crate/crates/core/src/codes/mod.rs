//! Code construction and verification: cyclic codes over R and S, skew
//! cyclic codes over R, and Gamma-set codes over S.

pub mod cyclic;
pub mod gamma;
mod handle;
pub mod skewcyclic;
pub mod vector;

pub use cyclic::{
    build_cyclic_r, build_principal_r, code_intersect, code_sum, join_r_codes, principalize,
    random_cyclic_r_code, random_cyclic_s_code, random_s_code, split_s_code,
    verify_s_code_structure, verify_sum_intersection_closure, verify_theorem_16, verify_theorem_18,
    verify_theorem_7_8, DEFINITIONAL_CAP,
};
pub use gamma::{
    build_gamma_set, dna_rc_closed, dna_reverse_closed, gamma_code, r_divisor_pool,
    verify_corollary_33, verify_theorem_32, GammaSet,
};
pub use handle::{build_r_code, build_s_code, BuildError, CodeHandle, Metric, RingTag};
pub use skewcyclic::{build_skew, sigma_theta, verify_theorem_29_30, SkewCyclicCode};
