//! Cyclic codes over R and S: the generator-pair builder, principal
//! generators, the idempotent split/join between S-codes and R-code pairs,
//! and the reverse/complement closure verifiers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Poly;
use crate::report::PropertyReport;
use crate::ring::{RElement, SElement, Z4};

use super::handle::{build_r_code, build_s_code, BuildError, CodeHandle, RingTag};

/// Cap under which rc-closure is cross-checked by full enumeration.
pub const DEFINITIONAL_CAP: u128 = 1 << 14;

pub(crate) fn poly_to_r_vec(p: &Poly<RElement>, n: usize) -> Vec<RElement> {
    let p = p.rem_xn_minus_1(n);
    (0..n).map(|i| p.coeff(i)).collect()
}

pub(crate) fn poly_to_s_vec(p: &Poly<SElement>, n: usize) -> Vec<SElement> {
    let p = p.rem_xn_minus_1(n);
    (0..n).map(|i| p.coeff(i)).collect()
}

/// The code <g(x), w a(x)> in R[x]/(x^n - 1), as the Z4 module spanned by
/// all shifts of u*g and u*(w a) for u in {1, w}. Requires n odd and the
/// chain a | g | x^n - 1 over Z4.
pub fn build_cyclic_r(n: usize, g: &Poly<Z4>, a: &Poly<Z4>) -> Result<CodeHandle, BuildError> {
    if n.is_multiple_of(2) {
        return Err(BuildError::EvenLength(n));
    }
    let xn1 = Poly::<Z4>::xn_minus_1(n);
    if Poly::divides(g, &xn1)?.is_none() {
        return Err(BuildError::DivisibilityChain(format!(
            "{g} does not divide x^{n}-1"
        )));
    }
    if Poly::divides(a, g)?.is_none() {
        return Err(BuildError::DivisibilityChain(format!(
            "{a} does not divide {g}"
        )));
    }
    let g_r = g.map_coeffs(RElement::from_z4);
    let wa_r = a.map_coeffs(|c| RElement::new(Z4::ZERO, c));
    let gens = vec![poly_to_r_vec(&g_r, n), poly_to_r_vec(&wa_r, n)];
    let handle = build_r_code(n, &gens, true, format!("cyclic <g={g}, wa=w({a})>"));
    assert!(
        handle.is_cyclic(),
        "cyclic builder must produce a shift-closed code"
    );
    Ok(handle)
}

/// The module closure {u x^i s} of a single generator over R.
pub fn build_principal_r(n: usize, s: &Poly<RElement>) -> CodeHandle {
    build_r_code(n, &[poly_to_r_vec(s, n)], true, format!("principal <{s}>"))
}

/// Searches for a single generator s with <s> equal to the given cyclic
/// code. Tries s = g, then s = g + w a, then shifted and unit-scaled
/// combinations; reports the search bound on exhaustion.
pub fn principalize(c: &CodeHandle, g: &Poly<Z4>, a: &Poly<Z4>) -> Option<Poly<RElement>> {
    assert_eq!(c.ring, RingTag::R);
    let n = c.n;
    let g_r = g.map_coeffs(RElement::from_z4);
    let a_r = a.map_coeffs(RElement::from_z4);
    let w = Poly::constant(RElement::W);
    let mut candidates: Vec<Poly<RElement>> = vec![g_r.clone(), g_r.add(&w.mul(&a_r))];
    for j in 1..n {
        candidates.push(g_r.add(&w.mul(&a_r).mul(&Poly::monomial(RElement::ONE, j))));
    }
    for e in [Z4::ONE, Z4::THREE] {
        for d in [Z4::ONE, Z4::THREE] {
            candidates.push(
                g_r.scale(RElement::from_z4(e))
                    .add(&w.mul(&a_r).scale(RElement::from_z4(d))),
            );
        }
    }
    candidates
        .into_iter()
        .find(|s| !s.rem_xn_minus_1(n).is_zero() && build_principal_r(n, s).basis == c.basis)
        .map(|s| s.rem_xn_minus_1(n))
}

/// CRT components of an S-code: images of the basis under the idempotent
/// split, each an R-code of the same length.
pub fn split_s_code(c: &CodeHandle) -> Result<(CodeHandle, CodeHandle), BuildError> {
    if c.ring != RingTag::S {
        return Err(BuildError::RingMismatch);
    }
    let mut gens1 = Vec::new();
    let mut gens2 = Vec::new();
    for row in c.basis_s_rows() {
        let (mut v1, mut v2) = (Vec::with_capacity(c.n), Vec::with_capacity(c.n));
        for x in row {
            let (c1, c2) = x.idempotent_split();
            v1.push(c1);
            v2.push(c2);
        }
        gens1.push(v1);
        gens2.push(v2);
    }
    Ok((
        build_r_code(
            c.n,
            &gens1,
            false,
            format!("v-component of [{}]", c.provenance),
        ),
        build_r_code(
            c.n,
            &gens2,
            false,
            format!("(1-v)-component of [{}]", c.provenance),
        ),
    ))
}

/// v C1 + (1-v) C2 as an S-code.
pub fn join_r_codes(c1: &CodeHandle, c2: &CodeHandle) -> Result<CodeHandle, BuildError> {
    if c1.ring != RingTag::R || c2.ring != RingTag::R {
        return Err(BuildError::RingMismatch);
    }
    if c1.n != c2.n {
        return Err(BuildError::LengthMismatch {
            left: c1.n,
            right: c2.n,
        });
    }
    let mut gens: Vec<Vec<SElement>> = Vec::new();
    for row in c1.basis_r_rows() {
        gens.push(
            row.iter()
                .map(|&x| SElement::V * SElement::from_r(x))
                .collect(),
        );
    }
    let one_minus_v = SElement::ONE - SElement::V;
    for row in c2.basis_r_rows() {
        gens.push(
            row.iter()
                .map(|&x| one_minus_v * SElement::from_r(x))
                .collect(),
        );
    }
    Ok(build_s_code(
        c1.n,
        &gens,
        false,
        format!("join of [{}] and [{}]", c1.provenance, c2.provenance),
    ))
}

/// Sum of two codes over the same ring and length.
pub fn code_sum(c1: &CodeHandle, c2: &CodeHandle) -> Result<CodeHandle, BuildError> {
    if c1.ring != c2.ring {
        return Err(BuildError::RingMismatch);
    }
    if c1.n != c2.n {
        return Err(BuildError::LengthMismatch {
            left: c1.n,
            right: c2.n,
        });
    }
    let basis = c1.basis.sum(&c2.basis).expect("widths agree");
    Ok(CodeHandle {
        ring: c1.ring,
        n: c1.n,
        provenance: format!("sum of [{}] and [{}]", c1.provenance, c2.provenance),
        basis,
    })
}

/// Intersection of two codes over the same ring and length.
pub fn code_intersect(c1: &CodeHandle, c2: &CodeHandle) -> Result<CodeHandle, BuildError> {
    if c1.ring != c2.ring {
        return Err(BuildError::RingMismatch);
    }
    if c1.n != c2.n {
        return Err(BuildError::LengthMismatch {
            left: c1.n,
            right: c2.n,
        });
    }
    let basis = c1.basis.intersect(&c2.basis).expect("widths agree");
    Ok(CodeHandle {
        ring: c1.ring,
        n: c1.n,
        provenance: format!(
            "intersection of [{}] and [{}]",
            c1.provenance, c2.provenance
        ),
        basis,
    })
}

/// Checks the rc-closure criterion for <g, wa>: rc-closure holds exactly
/// when (1+w)(1 + x + ... + x^{n-1}) is a codeword and both g and a are
/// self-reciprocal.
pub fn verify_theorem_7_8(
    n: usize,
    g: &Poly<Z4>,
    a: &Poly<Z4>,
) -> Result<PropertyReport, BuildError> {
    let code = build_cyclic_r(n, g, a)?;
    let mut report = PropertyReport::new(format!("rc-closure criterion for n={n}, g={g}, a={a}"));

    let lhs = code.is_rc_closed();
    let one_plus_w = vec![RElement::ONE + RElement::W; n];
    let member = code.contains_r(&one_plus_w);
    let e = g.self_reciprocal_unit();
    let d = a.self_reciprocal_unit();
    let rhs = member && e.is_some() && d.is_some();

    report.info("rc_closed", lhs, None);
    report.info("contains_(1+w)_all_ones", member, None);
    report.info(
        "g_self_reciprocal",
        e.is_some(),
        e.map(|u| format!("e={u}")),
    );
    report.info(
        "a_self_reciprocal",
        d.is_some(),
        d.map(|u| format!("d={u}")),
    );
    report.assert_finding(
        "biconditional_holds",
        lhs == rhs,
        (lhs != rhs).then(|| format!("lhs={lhs}, rhs={rhs}")),
    );
    if let Some(defi) = code.definitional_rc_closed(DEFINITIONAL_CAP) {
        report.assert_finding("definitional_matches_affine_reduction", defi == lhs, None);
    }
    if !lhs {
        // a concrete codeword whose rc escapes, for the report
        let (ok, witness) = code.sampled_rc_closed(1, 32);
        if !ok {
            report.info("rc_counterexample", true, witness);
        }
    }
    Ok(report)
}

/// Reverse-complement closure over S is reversibility plus membership of
/// the all-(complement of zero) word.
pub fn verify_theorem_16(c: &CodeHandle, seed: u64, samples: usize) -> PropertyReport {
    let mut report =
        PropertyReport::new(format!("rc criterion over S for {}", c.descriptor())).with_seed(seed);
    report.hypothesis("cyclic", c.is_cyclic(), None);

    let lhs = match c.definitional_rc_closed(DEFINITIONAL_CAP) {
        Some(v) => v,
        None => c.sampled_rc_closed(seed, samples).0,
    };
    let reversible = c.is_reversible();
    let zero_bar = c.contains_complement_of_zero();
    report.info("rc_closed", lhs, None);
    report.info("reversible", reversible, None);
    report.info("contains_complement_of_zero", zero_bar, None);
    report.assert_finding("biconditional_holds", lhs == (reversible && zero_bar), None);
    report
}

/// Sum and intersection of reverse-complement-closed cyclic codes stay
/// reverse-complement-closed and cyclic.
pub fn verify_theorem_18(c1: &CodeHandle, c2: &CodeHandle) -> Result<PropertyReport, BuildError> {
    let mut report = PropertyReport::new(format!(
        "closure of sum/intersection for [{}] and [{}]",
        c1.provenance, c2.provenance
    ));
    for (name, c) in [("first", c1), ("second", c2)] {
        report.hypothesis(
            &format!("{name}_rc_closed_cyclic"),
            c.is_rc_closed() && c.is_cyclic(),
            None,
        );
    }
    let total = code_sum(c1, c2)?;
    let inter = code_intersect(c1, c2)?;
    report.assert_finding("sum_rc_closed", total.is_rc_closed(), None);
    report.assert_finding("sum_cyclic", total.is_cyclic(), None);
    report.assert_finding("intersection_rc_closed", inter.is_rc_closed(), None);
    report.assert_finding("intersection_cyclic", inter.is_cyclic(), None);
    Ok(report)
}

/// A random cyclic S-code: the shift-and-ring closure of a few random words.
pub fn random_cyclic_s_code(n: usize, rng: &mut ChaCha8Rng) -> CodeHandle {
    let k = rng.gen_range(1..=2usize);
    let gens: Vec<Vec<SElement>> = (0..k)
        .map(|_| {
            (0..n)
                .map(|_| SElement::from_index(rng.gen_range(0..256)))
                .collect()
        })
        .collect();
    build_s_code(n, &gens, true, "random cyclic S-code")
}

/// A random (not necessarily cyclic) S-linear code.
pub fn random_s_code(n: usize, rng: &mut ChaCha8Rng) -> CodeHandle {
    let k = rng.gen_range(1..=2usize);
    let gens: Vec<Vec<SElement>> = (0..k)
        .map(|_| {
            (0..n)
                .map(|_| SElement::from_index(rng.gen_range(0..256)))
                .collect()
        })
        .collect();
    build_s_code(n, &gens, false, "random S-code")
}

/// A random cyclic R-code from a random divisor pair at length n.
pub fn random_cyclic_r_code(n: usize, rng: &mut ChaCha8Rng) -> CodeHandle {
    let mut divisors = crate::poly::divisor_search(n, n).expect("odd n");
    divisors.push(Poly::one());
    loop {
        let g = &divisors[rng.gen_range(0..divisors.len())];
        let a = &divisors[rng.gen_range(0..divisors.len())];
        if Poly::divides(a, g).expect("monic").is_some() {
            return build_cyclic_r(n, g, a).expect("valid chain");
        }
    }
}

/// Per-instance audit of the split/join structure theory: cardinality is
/// multiplicative over the split, join inverts split, and the cyclic /
/// reversible / rc-closure properties transfer along the split exactly.
pub fn verify_s_code_structure(n: usize, seed: u64, instances: usize) -> PropertyReport {
    let mut report =
        PropertyReport::new(format!("split/join structure audit over S, n={n}")).with_seed(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_card = true;
    let mut all_join = true;
    let mut all_cyclic = true;
    let mut all_rev = true;
    let mut all_rc = true;
    let mut witness: Option<String> = None;

    for i in 0..instances {
        // mostly cyclic instances, a few arbitrary linear ones
        let c = if i % 10 == 9 {
            random_s_code(n, &mut rng)
        } else {
            random_cyclic_s_code(n, &mut rng)
        };
        let (c1, c2) = split_s_code(&c).expect("S-code splits");

        let card_ok = c.cardinality() == c1.cardinality() * c2.cardinality();
        let join_ok = join_r_codes(&c1, &c2).expect("same length").basis == c.basis;
        let cyclic_ok = c.is_cyclic() == (c1.is_cyclic() && c2.is_cyclic());
        let rev_ok = c.is_reversible() == (c1.is_reversible() && c2.is_reversible());
        let rc_lhs = match c.definitional_rc_closed(DEFINITIONAL_CAP) {
            Some(v) => v,
            None => c.sampled_rc_closed(seed ^ i as u64, 200).0,
        };
        let rc_ok = rc_lhs == (c.is_reversible() && c.contains_complement_of_zero());

        all_card &= card_ok;
        all_join &= join_ok;
        all_cyclic &= cyclic_ok;
        all_rev &= rev_ok;
        all_rc &= rc_ok;
        if !(card_ok && join_ok && cyclic_ok && rev_ok && rc_ok) && witness.is_none() {
            witness = Some(format!("instance {i}: {}", c.descriptor()));
        }
    }

    // the converse join direction: joins of cyclic R-codes are cyclic
    let mut joins_cyclic = true;
    for _ in 0..5.min(instances) {
        let c1 = random_cyclic_r_code(n, &mut rng);
        let c2 = random_cyclic_r_code(n, &mut rng);
        joins_cyclic &= join_r_codes(&c1, &c2).expect("same length").is_cyclic();
    }

    report.assert_finding("cardinality_multiplicative", all_card, witness.clone());
    report.assert_finding("join_inverts_split", all_join, witness.clone());
    report.assert_finding("cyclic_iff_components_cyclic", all_cyclic, witness.clone());
    report.assert_finding(
        "reversible_iff_components_reversible",
        all_rev,
        witness.clone(),
    );
    report.assert_finding("rc_iff_reversible_and_zero_bar", all_rc, witness);
    report.assert_finding("joins_of_cyclic_components_cyclic", joins_cyclic, None);
    report
}

/// Builds a pool of rc-closed cyclic S-codes and audits sums and
/// intersections of random pairs.
pub fn verify_sum_intersection_closure(n: usize, seed: u64, pairs: usize) -> PropertyReport {
    let mut report =
        PropertyReport::new(format!("sum/intersection rc-closure audit over S, n={n}"))
            .with_seed(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // rc-closed cyclic R-codes from self-reciprocal divisor pairs
    let mut divisors = crate::poly::divisor_search(n, n).expect("odd n");
    divisors.push(Poly::one());
    let self_rec: Vec<Poly<Z4>> = divisors
        .into_iter()
        .filter(|f| f.is_self_reciprocal())
        .collect();
    let mut pool: Vec<CodeHandle> = Vec::new();
    for g in &self_rec {
        for a in &self_rec {
            if Poly::divides(a, g).expect("monic").is_none() {
                continue;
            }
            let c = build_cyclic_r(n, g, a).expect("valid chain");
            if c.is_rc_closed() {
                pool.push(c);
            }
        }
    }
    report.hypothesis(
        "pool_nonempty",
        pool.len() >= 2,
        Some(format!("{} codes", pool.len())),
    );

    let mut all_ok = true;
    let mut witness = None;
    for i in 0..pairs {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let sa = join_r_codes(a, b).expect("same length");
        let sb = join_r_codes(b, a).expect("same length");
        debug_assert!(sa.is_rc_closed() && sa.is_cyclic());
        let total = code_sum(&sa, &sb).expect("compatible");
        let inter = code_intersect(&sa, &sb).expect("compatible");
        let ok =
            total.is_rc_closed() && total.is_cyclic() && inter.is_rc_closed() && inter.is_cyclic();
        all_ok &= ok;
        if !ok && witness.is_none() {
            witness = Some(format!("pair {i}"));
        }
    }
    report.assert_finding("sums_and_intersections_rc_closed_cyclic", all_ok, witness);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::handle::Metric;
    use crate::codes::vector::{complement_of_zero_r, cyclic_shift, decode_r, rc_r_vec};
    use std::collections::HashSet;

    fn pz(s: &str) -> Poly<Z4> {
        s.parse().unwrap()
    }

    fn pr(s: &str) -> Poly<RElement> {
        s.parse().unwrap()
    }

    #[test]
    fn full_code_from_unit_generator() {
        let c = build_cyclic_r(3, &Poly::one(), &Poly::one()).unwrap();
        assert_eq!(c.cardinality(), 16u128.pow(3));
        assert!(c.is_cyclic() && c.is_reversible() && c.is_rc_closed());
        assert_eq!(c.min_distance(Metric::Hamming, 1 << 14).unwrap(), 1);
    }

    #[test]
    fn builder_rejects_bad_input() {
        assert!(matches!(
            build_cyclic_r(4, &Poly::one(), &Poly::one()),
            Err(BuildError::EvenLength(4))
        ));
        assert!(matches!(
            build_cyclic_r(7, &pz("x^2"), &Poly::one()),
            Err(BuildError::DivisibilityChain(_))
        ));
        assert!(matches!(
            build_cyclic_r(7, &pz("x-1"), &pz("x^2+x+1")),
            Err(BuildError::DivisibilityChain(_))
        ));
    }

    /// Oracle: explicit closure of the generators under shift, addition and
    /// multiplication by w, as a set of vectors.
    fn brute_force_ideal(n: usize, g: &Poly<Z4>, a: &Poly<Z4>) -> HashSet<Vec<RElement>> {
        let g_r = g.map_coeffs(RElement::from_z4);
        let wa_r = a.map_coeffs(|c| RElement::new(Z4::ZERO, c));
        let mut set: HashSet<Vec<RElement>> = HashSet::new();
        set.insert(vec![RElement::ZERO; n]);
        let seeds = vec![poly_to_r_vec(&g_r, n), poly_to_r_vec(&wa_r, n)];
        let mut frontier: Vec<Vec<RElement>> = seeds.clone();
        for v in std::mem::take(&mut frontier) {
            set.insert(v);
        }
        loop {
            let snapshot: Vec<Vec<RElement>> = set.iter().cloned().collect();
            let before = set.len();
            for x in &snapshot {
                set.insert(cyclic_shift(x));
                set.insert(x.iter().map(|&c| c * RElement::W).collect());
                for s in &seeds {
                    set.insert(x.iter().zip(s).map(|(&c, &d)| c + d).collect());
                }
                for y in &snapshot {
                    // closure under addition within the current set
                    let sum: Vec<RElement> = x.iter().zip(y).map(|(&c, &d)| c + d).collect();
                    set.insert(sum);
                }
            }
            if set.len() == before {
                break;
            }
        }
        set
    }

    #[test]
    fn builder_matches_brute_force_closure_n3() {
        let mut divisors = crate::poly::divisor_search(3, 3).unwrap();
        divisors.push(Poly::one());
        for g in &divisors {
            for a in &divisors {
                if Poly::divides(a, g).unwrap().is_none() {
                    continue;
                }
                let c = build_cyclic_r(3, g, a).unwrap();
                let oracle = brute_force_ideal(3, g, a);
                assert_eq!(c.cardinality() as usize, oracle.len(), "g={g}, a={a}");
                for v in oracle.iter().take(64) {
                    assert!(c.contains_r(v));
                }
            }
        }
    }

    #[test]
    fn w_times_wa_family_is_present() {
        // 2 = w * (w * 1) must be a codeword of <x^2+x+1, w> even though it
        // is not a Z4-combination of shifts of g, wg, wa alone
        let c = build_cyclic_r(3, &pz("x^2+x+1"), &Poly::one()).unwrap();
        let two = vec![RElement::from_z4(Z4::TWO), RElement::ZERO, RElement::ZERO];
        assert!(c.contains_r(&two));
    }

    #[test]
    fn n7_membership_example() {
        let c = build_cyclic_r(7, &pz("x-1"), &Poly::one()).unwrap();
        assert!(c.is_cyclic());
        let mut w_shift = vec![RElement::ZERO; 7];
        w_shift[3] = RElement::W;
        assert!(c.contains_r(&w_shift));
    }

    #[test]
    fn principalize_examples() {
        let full = build_cyclic_r(7, &Poly::one(), &Poly::one()).unwrap();
        assert_eq!(
            principalize(&full, &Poly::one(), &Poly::one()),
            Some(pr("1"))
        );

        let g = pz("x^2+x+1");
        let c = build_cyclic_r(3, &g, &g).unwrap();
        assert_eq!(principalize(&c, &g, &g), Some(pr("x^2+x+1")));

        let c = build_cyclic_r(7, &pz("x-1"), &Poly::one()).unwrap();
        let s = principalize(&c, &pz("x-1"), &Poly::one()).unwrap();
        assert_eq!(s, pr("x-1").add(&pr("w")));
        assert_eq!(build_principal_r(7, &s).basis, c.basis);
    }

    #[test]
    fn zero_code_properties() {
        let c = build_r_code(3, &[], false, "zero code");
        assert_eq!(c.cardinality(), 1);
        assert!(c.is_cyclic());
        assert!(c.is_reversible());
        assert!(!c.is_rc_closed());
        assert_eq!(c.definitional_rc_closed(16), Some(false));
    }

    #[test]
    fn constant_code_rc_closed() {
        // span of (3+3w)(1,1,1) and its w-multiples: all constant vectors
        let k = complement_of_zero_r(3);
        let c = build_r_code(3, &[k], false, "constant code");
        assert!(c.is_rc_closed());
        // cross-check by full definitional enumeration
        assert_eq!(c.definitional_rc_closed(64), Some(true));
        for row in c.basis.enumerate(64).unwrap() {
            assert!(c.contains_r(&rc_r_vec(&decode_r(&row))));
        }
    }

    #[test]
    fn min_distance_examples() {
        let ones = vec![RElement::ONE; 3];
        let c = build_r_code(3, &[ones], false, "repetition");
        assert_eq!(c.min_distance(Metric::Hamming, 1 << 14).unwrap(), 3);
        let zero = build_r_code(2, &[], false, "zero");
        assert_eq!(zero.export_dna_book(16).unwrap(), vec!["AAAA".to_string()]);
        assert!(matches!(
            build_cyclic_r(7, &Poly::one(), &Poly::one())
                .unwrap()
                .min_distance(Metric::Hamming, 4),
            Err(crate::engine::EngineError::TooLarge { .. })
        ));
    }

    #[test]
    fn theorem_7_8_smoke() {
        let rep = verify_theorem_7_8(7, &Poly::one(), &Poly::one()).unwrap();
        assert!(rep.all_asserted_hold());
        // a pair with g not self-reciprocal: rc-closure must fail
        let cubic = crate::poly::divisor_search(7, 3)
            .unwrap()
            .into_iter()
            .find(|d| d.degree() == Some(3))
            .unwrap();
        let rep = verify_theorem_7_8(7, &cubic, &cubic).unwrap();
        assert!(rep.all_asserted_hold());
        let rc = rep.findings.iter().find(|f| f.name == "rc_closed").unwrap();
        assert!(!rc.value);
    }

    #[test]
    fn split_join_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let c = random_cyclic_s_code(3, &mut rng);
            let (c1, c2) = split_s_code(&c).unwrap();
            assert_eq!(c.cardinality(), c1.cardinality() * c2.cardinality());
            let joined = join_r_codes(&c1, &c2).unwrap();
            assert_eq!(joined.basis, c.basis);
        }
        // full x full = full
        let full = build_cyclic_r(3, &Poly::one(), &Poly::one()).unwrap();
        let joined = join_r_codes(&full, &full).unwrap();
        assert_eq!(joined.cardinality(), 256u128.pow(3));
    }

    #[test]
    fn theorem_16_smoke() {
        let full = build_s_code(3, &[vec![SElement::ONE; 3]], true, "full-ish");
        let rep = verify_theorem_16(&full, 1, 100);
        assert!(rep.all_asserted_hold());
        let zero = build_s_code(3, &[], true, "zero");
        let rep = verify_theorem_16(&zero, 1, 100);
        assert!(rep.all_asserted_hold());
        let rev = rep
            .findings
            .iter()
            .find(|f| f.name == "reversible")
            .unwrap();
        assert!(rev.value);
        let rc = rep.findings.iter().find(|f| f.name == "rc_closed").unwrap();
        assert!(!rc.value);
    }

    #[test]
    fn theorem_18_smoke() {
        let rep = verify_sum_intersection_closure(7, 5, 20);
        assert!(rep.all_asserted_hold());
        // idempotent sum and intersection
        let c = build_cyclic_r(3, &pz("x-1"), &Poly::one()).unwrap();
        assert_eq!(code_sum(&c, &c).unwrap().basis, c.basis);
        assert_eq!(code_intersect(&c, &c).unwrap().basis, c.basis);
        assert!(matches!(
            code_sum(&c, &build_cyclic_r(5, &Poly::one(), &Poly::one()).unwrap()),
            Err(BuildError::LengthMismatch { .. })
        ));
    }
}
