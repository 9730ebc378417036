//! Gamma-set codes over S: generating sets alternating shifts of f and
//! Gamma(f), the codes they span, and the DNA reversibility checks.

use crate::poly::{monic_divisors_of_xn_minus_1, Poly};
use crate::report::PropertyReport;
use crate::ring::{RElement, SElement};

use super::cyclic::poly_to_s_vec;
use super::handle::{build_s_code, BuildError, CodeHandle};
use super::vector::{decode_s, display_s_vec};
use crate::gray::{codons_to_s_vec, s_vec_to_codons};

/// The generating set L(f) for f = v f1 + (1-v) f2: row i is x^i f for even
/// i and x^i Gamma(f) for odd i, with m = min(n - deg f1, n - deg f2) rows.
#[derive(Debug, Clone)]
pub struct GammaSet {
    pub n: usize,
    pub f1: Poly<RElement>,
    pub f2: Poly<RElement>,
    /// v f1 + (1-v) f2 over S.
    pub f: Poly<SElement>,
    pub m: usize,
    pub rows: Vec<Vec<SElement>>,
}

fn gamma_coeffs(p: &Poly<SElement>) -> Poly<SElement> {
    p.map_coeffs(|c| c.gamma())
}

/// Requires n odd and f1, f2 monic divisors of x^n - 1 over R.
pub fn build_gamma_set(
    n: usize,
    f1: &Poly<RElement>,
    f2: &Poly<RElement>,
) -> Result<GammaSet, BuildError> {
    if n.is_multiple_of(2) {
        return Err(BuildError::EvenLength(n));
    }
    let xn1 = Poly::<RElement>::xn_minus_1(n);
    for f in [f1, f2] {
        if !f.is_monic() {
            return Err(BuildError::NotMonic(f.to_string()));
        }
        if Poly::divides(f, &xn1)?.is_none() {
            return Err(BuildError::DivisibilityChain(format!(
                "{f} does not divide x^{n}-1"
            )));
        }
    }
    let t1 = f1.degree().unwrap_or(0);
    let t2 = f2.degree().unwrap_or(0);
    let m = (n - t1).min(n - t2);
    // coefficientwise v f1 + (1-v) f2
    let len = f1.coeffs().len().max(f2.coeffs().len());
    let f = Poly::new(
        (0..len)
            .map(|j| SElement::idempotent_join(f1.coeff(j), f2.coeff(j)))
            .collect::<Vec<_>>(),
    );
    let gf = gamma_coeffs(&f);
    let rows = (0..m)
        .map(|i| {
            let base = if i % 2 == 0 { &f } else { &gf };
            poly_to_s_vec(&base.mul(&Poly::monomial(SElement::ONE, i)), n)
        })
        .collect();
    Ok(GammaSet {
        n,
        f1: f1.clone(),
        f2: f2.clone(),
        f,
        m,
        rows,
    })
}

impl GammaSet {
    /// The staircase generator matrix, one row per line.
    pub fn matrix_display(&self) -> String {
        self.rows
            .iter()
            .map(|r| display_s_vec(r))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The S-linear code spanned by the Gamma set.
pub fn gamma_code(set: &GammaSet) -> CodeHandle {
    build_s_code(
        set.n,
        &set.rows,
        false,
        format!(
            "gamma code <v({}) + (1-v)({})>, n={}",
            set.f1, set.f2, set.n
        ),
    )
}

/// All-ones vector, the embedding of (x^n - 1)/(x - 1).
fn all_ones_s(n: usize) -> Vec<SElement> {
    vec![SElement::ONE; n]
}

/// Letter-level reverse of a codeword's codon string decodes to a codeword.
pub fn dna_reverse_closed(c: &CodeHandle, seed: u64, samples: usize) -> (bool, Option<String>) {
    let mut probes = vec![vec![crate::ring::Z4::ZERO; c.width()]];
    probes.extend(c.basis.rows().iter().cloned());
    probes.extend(c.basis.sample(seed, samples));
    for row in &probes {
        let word = decode_s(row);
        let reversed = s_vec_to_codons(&word).reverse();
        let preimage = codons_to_s_vec(&reversed).expect("4n letters");
        if !c.contains_s(&preimage) {
            return (
                false,
                Some(format!(
                    "reverse of {} decodes outside the code",
                    display_s_vec(&word)
                )),
            );
        }
    }
    (true, None)
}

/// Letter-level reverse-complement of a codeword's codon string decodes to
/// a codeword.
pub fn dna_rc_closed(c: &CodeHandle, seed: u64, samples: usize) -> (bool, Option<String>) {
    let mut probes = vec![vec![crate::ring::Z4::ZERO; c.width()]];
    probes.extend(c.basis.rows().iter().cloned());
    probes.extend(c.basis.sample(seed, samples));
    for row in &probes {
        let word = decode_s(row);
        let rc = s_vec_to_codons(&word).reverse_complement();
        let preimage = codons_to_s_vec(&rc).expect("4n letters");
        if !c.contains_s(&preimage) {
            return (
                false,
                Some(format!(
                    "reverse-complement of {} decodes outside the code",
                    display_s_vec(&word)
                )),
            );
        }
    }
    (true, None)
}

/// Checks |<L(f)>| = 256^m and DNA reversibility of the image, under the
/// hypotheses f1 = f2, both self-reciprocal divisors of x^n - 1 over R.
pub fn verify_theorem_32(
    n: usize,
    f1: &Poly<RElement>,
    f2: &Poly<RElement>,
    seed: u64,
    samples: usize,
) -> Result<PropertyReport, BuildError> {
    let set = build_gamma_set(n, f1, f2)?;
    let code = gamma_code(&set);
    let mut report = PropertyReport::new(format!(
        "gamma code cardinality and DNA reversibility, n={n}, f1={f1}, f2={f2}"
    ))
    .with_seed(seed);

    report.hypothesis("f1_equals_f2", f1 == f2, None);
    report.hypothesis(
        "f1_self_reciprocal",
        f1.is_self_reciprocal(),
        f1.self_reciprocal_unit().map(|u| format!("unit {u}")),
    );
    report.hypothesis(
        "f2_self_reciprocal",
        f2.is_self_reciprocal(),
        f2.self_reciprocal_unit().map(|u| format!("unit {u}")),
    );
    let hypotheses_ok = f1 == f2 && f1.is_self_reciprocal() && f2.is_self_reciprocal();

    let expected = 256u128.pow(set.m as u32);
    let card_ok = code.cardinality() == expected;
    let (rev_ok, rev_witness) = dna_reverse_closed(&code, seed, samples);
    if hypotheses_ok {
        report.assert_finding(
            "cardinality_256_pow_m",
            card_ok,
            Some(format!("m={}, |C|={}", set.m, code.cardinality())),
        );
        report.assert_finding("dna_reversible", rev_ok, rev_witness);
    } else {
        report.info(
            "cardinality_256_pow_m",
            card_ok,
            Some(format!("m={}", set.m)),
        );
        report.info("dna_reversible", rev_ok, rev_witness);
    }
    Ok(report)
}

/// Reports whether (x^n - 1)/(x - 1) is a codeword and, when it is, checks
/// reverse-complement closure of the DNA image on seeded samples.
pub fn verify_corollary_33(
    n: usize,
    f1: &Poly<RElement>,
    f2: &Poly<RElement>,
    seed: u64,
    samples: usize,
) -> Result<PropertyReport, BuildError> {
    let set = build_gamma_set(n, f1, f2)?;
    let code = gamma_code(&set);
    let mut report = PropertyReport::new(format!(
        "gamma code DNA reverse-complement closure, n={n}, f1={f1}, f2={f2}"
    ))
    .with_seed(seed);

    report.hypothesis("f1_self_reciprocal", f1.is_self_reciprocal(), None);
    report.hypothesis("f2_self_reciprocal", f2.is_self_reciprocal(), None);
    report.hypothesis("code_cyclic", code.is_cyclic(), None);

    let ones = all_ones_s(n);
    let member = code.contains_s(&ones);
    let eval_at_one = format!(
        "sum of all coordinates of (x^{n}-1)/(x-1) is {}; every codeword sums to a multiple of f(1)",
        n % 4
    );
    report.hypothesis("contains_all_ones_quotient", member, Some(eval_at_one));

    let (rc_ok, rc_witness) = dna_rc_closed(&code, seed, samples);
    if member {
        report.assert_finding("dna_reverse_complement_closed", rc_ok, rc_witness);
    } else {
        report.info("dna_reverse_complement_closed", rc_ok, rc_witness);
    }
    Ok(report)
}

/// Monic divisors of x^n - 1 over R with degree at most max_deg, including
/// the constant 1: the hypothesis pool for gamma-code audits.
pub fn r_divisor_pool(n: usize, max_deg: usize) -> Vec<Poly<RElement>> {
    let mut pool = vec![Poly::one()];
    pool.extend(monic_divisors_of_xn_minus_1::<RElement>(n, max_deg));
    pool
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Z4;

    fn pr(s: &str) -> Poly<RElement> {
        s.parse().unwrap()
    }

    #[test]
    fn example_rows_for_x_minus_1() {
        let set = build_gamma_set(7, &pr("x-1"), &pr("x-1")).unwrap();
        assert_eq!(set.m, 6);
        let three = SElement::from_z4(Z4::THREE);
        let one = SElement::ONE;
        let zero = SElement::ZERO;
        assert_eq!(set.rows[0], vec![three, one, zero, zero, zero, zero, zero]);
        assert_eq!(set.rows[1], vec![zero, three, one, zero, zero, zero, zero]);
        // v-free coefficients are fixed by gamma, so odd rows are plain shifts
        for i in 1..set.m {
            let mut prev = set.rows[i - 1].clone();
            prev.rotate_right(1);
            assert_eq!(set.rows[i], prev);
        }
    }

    #[test]
    fn trivial_and_full_sets() {
        let set = build_gamma_set(3, &Poly::one(), &Poly::one()).unwrap();
        assert_eq!(set.m, 3);
        let code = gamma_code(&set);
        assert_eq!(code.cardinality(), 256u128.pow(3));

        let empty = build_gamma_set(3, &pr("x^3-1"), &pr("x^3-1")).unwrap();
        assert_eq!(empty.m, 0);
        assert_eq!(gamma_code(&empty).cardinality(), 1);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            build_gamma_set(4, &pr("x-1"), &pr("x-1")),
            Err(BuildError::EvenLength(4))
        ));
        assert!(matches!(
            build_gamma_set(7, &pr("x-2"), &pr("x-2")),
            Err(BuildError::DivisibilityChain(_))
        ));
        assert!(matches!(
            build_gamma_set(7, &pr("2x+1"), &pr("2x+1")),
            Err(BuildError::NotMonic(_))
        ));
    }

    #[test]
    fn odd_rows_carry_the_gamma_action() {
        // distinct f1, f2 make f v-dependent; odd rows then differ from the
        // shifted even rows exactly by gamma on each coefficient
        let f1 = pr("x-1");
        let f2 = pr("x^2+x+1");
        let set = build_gamma_set(3, &f1, &f2).unwrap();
        assert_eq!(set.m, 1);
        let set2 = build_gamma_set(7, &f1, &f1).unwrap();
        assert_eq!(set2.m, 6);
        // a genuinely v-dependent instance at n=3 with m >= 2: f1 = f2 won't
        // do it, so check the row rule directly on the built set
        let fset = build_gamma_set(3, &f2, &f1).unwrap();
        for (i, row) in fset.rows.iter().enumerate() {
            let base = if i % 2 == 0 {
                fset.f.clone()
            } else {
                fset.f.map_coeffs(|c| c.gamma())
            };
            let expect = poly_to_s_vec(&base.mul(&Poly::monomial(SElement::ONE, i)), 3);
            assert_eq!(*row, expect);
        }
    }

    #[test]
    fn theorem_32_example_instance() {
        let rep = verify_theorem_32(7, &pr("x-1"), &pr("x-1"), 7, 200).unwrap();
        assert!(rep.hypotheses_hold());
        assert!(rep.all_asserted_hold());
    }

    #[test]
    fn theorem_32_negative_control() {
        // a non-self-reciprocal divisor over R raises the hypothesis flag
        let cubics = monic_divisors_of_xn_minus_1::<RElement>(7, 3);
        let f = cubics
            .iter()
            .find(|f| f.degree() == Some(3) && !f.is_self_reciprocal())
            .expect("lifted trinomials are not self-reciprocal");
        let rep = verify_theorem_32(7, f, f, 7, 50).unwrap();
        assert!(!rep.hypotheses_hold());
    }

    #[test]
    fn corollary_33_reports_the_failed_antecedent() {
        let rep = verify_corollary_33(7, &pr("x-1"), &pr("x-1"), 7, 100).unwrap();
        let member = rep
            .findings
            .iter()
            .find(|f| f.name == "contains_all_ones_quotient")
            .unwrap();
        // machine finding: the all-ones quotient is not a codeword of
        // <x-1>, every codeword of which sums to zero coordinatewise
        assert!(!member.value);
        // and indeed the DNA image is not rc-closed: the complement of the
        // zero word is missing
        let rc = rep
            .findings
            .iter()
            .find(|f| f.name == "dna_reverse_complement_closed")
            .unwrap();
        assert!(!rc.value);

        // full code: trivially closed
        let rep = verify_corollary_33(3, &Poly::one(), &Poly::one(), 7, 100).unwrap();
        assert!(rep.hypotheses_hold());
        assert!(rep.all_asserted_hold());
    }

    #[test]
    fn theorem_32_holds_on_every_small_hypothesis_instance() {
        for n in [3usize, 5, 7] {
            for f in r_divisor_pool(n, 2) {
                if !f.is_self_reciprocal() {
                    continue;
                }
                let rep = verify_theorem_32(n, &f, &f, 11, 100).unwrap();
                assert!(rep.hypotheses_hold(), "n={n}, f={f}");
                assert!(rep.all_asserted_hold(), "n={n}, f={f}");
            }
        }
    }

    #[test]
    fn divisor_pool_over_r() {
        let pool = r_divisor_pool(7, 2);
        assert!(pool.contains(&Poly::one()));
        assert!(pool.contains(&pr("x-1")));
        // every pool member divides x^7 - 1 over R
        let xn1 = Poly::<RElement>::xn_minus_1(7);
        for f in &pool {
            assert!(Poly::divides(f, &xn1).unwrap().is_some());
        }
    }
}
