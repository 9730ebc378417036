//! Skew cyclic codes over R under theta: codes closed under the twisted
//! shift sigma_theta, built as left modules from a right divisor of x^n - 1.

use crate::engine::{howell, HowellBasis, Z4Matrix};
use crate::poly::SkewPoly;
use crate::report::PropertyReport;
use crate::ring::RElement;

use super::handle::BuildError;
use super::vector::{complement_of_zero_r, decode_r, display_r_vec, encode_r, rc_r_vec, reverse};

/// sigma_theta(c) = (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2})).
pub fn sigma_theta(v: &[RElement]) -> Vec<RElement> {
    let mut out: Vec<RElement> = v.to_vec();
    out.rotate_right(1);
    out.iter().map(|x| x.theta()).collect()
}

/// A skew cyclic code <f> with f a monic right divisor of x^n - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewCyclicCode {
    pub n: usize,
    pub generator: SkewPoly,
    pub basis: HowellBasis,
}

fn skew_poly_to_vec(p: &SkewPoly, n: usize) -> Vec<RElement> {
    let p = p.rem_xn_minus_1(n);
    (0..n).map(|i| p.coeff(i)).collect()
}

/// Builds the left module generated by f: the Z4 span of u * (x^i f) for
/// u in {1, w} and 0 <= i < 2n (powers up to 2n cover the theta twist that
/// folding x^n onto 1 introduces for odd n).
pub fn build_skew(n: usize, f: &SkewPoly) -> Result<SkewCyclicCode, BuildError> {
    if !f.is_monic() {
        return Err(BuildError::NotMonic(f.to_string()));
    }
    if SkewPoly::right_divides(f, &SkewPoly::xn_minus_1(n))?.is_none() {
        return Err(BuildError::NotRightDivisor(f.to_string()));
    }
    let mut m = Z4Matrix::new(2 * n);
    let mut power = SkewPoly::one();
    for _ in 0..2 * n {
        let shift = power.mul(f).rem_xn_minus_1(n);
        let vec = skew_poly_to_vec(&shift, n);
        for u in [RElement::ONE, RElement::W] {
            m.push_row(encode_r(&vec.iter().map(|&x| x * u).collect::<Vec<_>>()));
        }
        power = SkewPoly::monomial(RElement::ONE, 1).mul(&power);
    }
    let code = SkewCyclicCode {
        n,
        generator: f.clone(),
        basis: howell(&m),
    };
    assert!(
        code.is_sigma_theta_closed(),
        "built skew code must be sigma_theta-closed"
    );
    Ok(code)
}

impl SkewCyclicCode {
    pub fn cardinality(&self) -> u128 {
        self.basis.cardinality()
    }

    pub fn contains(&self, v: &[RElement]) -> bool {
        assert_eq!(v.len(), self.n);
        self.basis.contains(&encode_r(v))
    }

    pub fn basis_rows(&self) -> Vec<Vec<RElement>> {
        self.basis.rows().iter().map(|r| decode_r(r)).collect()
    }

    /// sigma_theta is Z4-linear (theta fixes Z4), so the basis-level check
    /// is sound.
    pub fn is_sigma_theta_closed(&self) -> bool {
        self.basis_rows()
            .iter()
            .all(|row| self.contains(&sigma_theta(row)))
    }

    pub fn is_reversible(&self) -> bool {
        self.basis_rows()
            .iter()
            .all(|row| self.contains(&reverse(row)))
    }

    pub fn contains_complement_of_zero(&self) -> bool {
        self.contains(&complement_of_zero_r(self.n))
    }

    /// Affine reduction, as for plain cyclic codes.
    pub fn is_rc_closed(&self) -> bool {
        self.is_reversible() && self.contains_complement_of_zero()
    }

    pub fn definitional_rc_closed(&self, cap: u128) -> Option<bool> {
        let words = self.basis.enumerate(cap).ok()?;
        Some(
            words
                .iter()
                .all(|row| self.contains(&rc_r_vec(&decode_r(row)))),
        )
    }

    /// Full definitional closure under sigma_theta, for small codes.
    pub fn definitional_sigma_theta_closed(&self, cap: u128) -> Option<bool> {
        let words = self.basis.enumerate(cap).ok()?;
        Some(
            words
                .iter()
                .all(|row| self.contains(&sigma_theta(&decode_r(row)))),
        )
    }
}

/// Reverse-complement closure of <f> against the generator criterion:
/// f self-reciprocal and (3+3w)(x^n - 1)/(x - 1) a codeword. Both
/// implications of the equivalence are reported separately.
pub fn verify_theorem_29_30(
    n: usize,
    f: &SkewPoly,
    definitional_cap: u128,
) -> Result<PropertyReport, BuildError> {
    let code = build_skew(n, f)?;
    let mut report = PropertyReport::new(format!("skew rc criterion for n={n}, f={f}"));

    let lhs = code.is_rc_closed();
    let unit = f.to_poly().self_reciprocal_unit();
    let member = code.contains_complement_of_zero();
    let rhs = unit.is_some() && member;

    report.info("rc_closed", lhs, None);
    report.info(
        "f_self_reciprocal",
        unit.is_some(),
        unit.map(|u| format!("f* = ({u}) f")),
    );
    report.info("contains_(3+3w)_all_ones", member, None);
    report.assert_finding("rc_implies_criterion", !lhs || rhs, None);
    report.assert_finding("criterion_implies_rc", !rhs || lhs, None);
    if let Some(defi) = code.definitional_rc_closed(definitional_cap) {
        report.assert_finding("definitional_matches_affine_reduction", defi == lhs, None);
    }
    if !lhs {
        let mut probe_fail = None;
        for row in code.basis_rows() {
            if !code.contains(&rc_r_vec(&row)) {
                probe_fail = Some(format!("rc of {} escapes", display_r_vec(&row)));
                break;
            }
        }
        if probe_fail.is_none() && !code.contains_complement_of_zero() {
            probe_fail = Some("rc of the zero word escapes".to_string());
        }
        report.info("rc_counterexample", probe_fail.is_some(), probe_fail);
    }
    Ok(report)
}
