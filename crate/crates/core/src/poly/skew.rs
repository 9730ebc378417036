//! The skew polynomial ring R[x, theta] with (a x^i)(b x^j) = a theta^i(b) x^{i+j}.

use std::fmt;
use std::str::FromStr;

use super::{Poly, PolyError};
use crate::ring::{CoeffRing, RElement};

/// Skew polynomial over R with the automorphism fixed to theta.
/// Multiplication twists coefficients: x a = theta(a) x.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    coeffs: Vec<RElement>,
}

impl SkewPoly {
    pub fn new(mut coeffs: Vec<RElement>) -> SkewPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> SkewPoly {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one() -> SkewPoly {
        SkewPoly::new(vec![RElement::ONE])
    }

    pub fn monomial(c: RElement, k: usize) -> SkewPoly {
        let mut coeffs = vec![RElement::ZERO; k + 1];
        coeffs[k] = c;
        SkewPoly::new(coeffs)
    }

    pub fn xn_minus_1(n: usize) -> SkewPoly {
        let mut coeffs = vec![RElement::ZERO; n + 1];
        coeffs[0] = -RElement::ONE;
        coeffs[n] = RElement::ONE;
        SkewPoly::new(coeffs)
    }

    pub fn from_poly(p: &Poly<RElement>) -> SkewPoly {
        SkewPoly::new(p.coeffs().to_vec())
    }

    pub fn to_poly(&self) -> Poly<RElement> {
        Poly::new(self.coeffs.clone())
    }

    pub fn coeffs(&self) -> &[RElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RElement {
        self.coeffs.get(i).copied().unwrap_or(RElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<RElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Some(RElement::ONE)
    }

    pub fn add(&self, other: &SkewPoly) -> SkewPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        SkewPoly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &SkewPoly) -> SkewPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        SkewPoly::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    /// theta applied to every coefficient.
    pub fn theta_coeffs(&self) -> SkewPoly {
        SkewPoly::new(self.coeffs.iter().map(|c| c.theta()).collect())
    }

    /// Twisted product: sum over i, j of a_i theta^i(b_j) x^{i+j}.
    pub fn mul(&self, other: &SkewPoly) -> SkewPoly {
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero();
        }
        let mut coeffs = vec![RElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let tb = if i % 2 == 0 { b } else { b.theta() };
                coeffs[i + j] = coeffs[i + j] + a * tb;
            }
        }
        SkewPoly::new(coeffs)
    }

    /// Reduction modulo the left ideal generated by x^n - 1: the coefficient
    /// of x^{n+k} folds onto x^k unchanged, since x^{n+k} - x^k = x^k(x^n - 1).
    pub fn rem_xn_minus_1(&self, n: usize) -> SkewPoly {
        assert!(n >= 1);
        let mut coeffs = vec![RElement::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] = coeffs[i % n] + c;
        }
        SkewPoly::new(coeffs)
    }

    /// Right division: f = q * d + r with deg r < deg d, eliminating the top
    /// of the remainder by a left factor c x^k with c theta^k(lead d) = lead r.
    pub fn right_div_rem(&self, d: &SkewPoly) -> Result<(SkewPoly, SkewPoly), PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dl = d.lead().unwrap();
        if dl.inverse().is_none() {
            return Err(PolyError::NonUnitLead(d.to_string()));
        }
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut q = vec![RElement::ZERO; self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let k = rd - dd;
            let twisted_lead = if k.is_multiple_of(2) { dl } else { dl.theta() };
            let c = rem.lead().unwrap() * twisted_lead.inverse().unwrap();
            q[k] = q[k] + c;
            rem = rem.sub(&SkewPoly::monomial(c, k).mul(d));
        }
        Ok((SkewPoly::new(q), rem))
    }

    /// Some(q) with q * d = f exactly, when d right-divides f.
    pub fn right_divides(d: &SkewPoly, f: &SkewPoly) -> Result<Option<SkewPoly>, PolyError> {
        let (q, r) = f.right_div_rem(d)?;
        if r.is_zero() {
            debug_assert_eq!(q.mul(d), *f);
            Ok(Some(q))
        } else {
            Ok(None)
        }
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl FromStr for SkewPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(SkewPoly::from_poly(&s.parse::<Poly<RElement>>()?))
    }
}

/// All monic right divisors of x^n - 1 in R[x, theta] with degree in
/// 0..=max_deg, by exhaustive scan over coefficient tuples.
pub fn skew_right_divisor_search(n: usize, max_deg: usize) -> Vec<SkewPoly> {
    let modulus = SkewPoly::xn_minus_1(n);
    let elems: Vec<RElement> = RElement::all_elements();
    let mut found = vec![SkewPoly::one()];
    for deg in 1..=max_deg.min(n) {
        let mut idx = vec![0usize; deg];
        loop {
            let mut coeffs: Vec<RElement> = idx.iter().map(|&i| elems[i]).collect();
            coeffs.push(RElement::ONE);
            let cand = SkewPoly::new(coeffs);
            if SkewPoly::right_divides(&cand, &modulus)
                .expect("monic candidate")
                .is_some()
            {
                found.push(cand);
            }
            let mut k = 0;
            loop {
                if k == deg {
                    break;
                }
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == deg {
                break;
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RElement {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SkewPoly {
        s.parse().unwrap()
    }

    #[test]
    fn twisted_monomial_rule() {
        // (wx)(w) = w theta(w) x = 2x
        assert_eq!(
            SkewPoly::monomial(r("w"), 1).mul(&SkewPoly::new(vec![r("w")])),
            sp("2x")
        );
        // x (1+w) = (1+3w) x
        assert_eq!(
            sp("x").mul(&SkewPoly::new(vec![r("1+w")])),
            SkewPoly::monomial(r("1+3w"), 1)
        );
        // x 2 = 2x: theta fixes Z4
        assert_eq!(sp("x").mul(&sp("2")), sp("2x"));
        // x a = theta(a) x for every a
        for a in RElement::all() {
            assert_eq!(
                sp("x").mul(&SkewPoly::new(vec![a])),
                SkewPoly::monomial(a.theta(), 1)
            );
        }
    }

    #[test]
    fn noncommutative() {
        // x w = theta(w) x = 3wx, while w x = wx
        let x = sp("x");
        let w = SkewPoly::new(vec![r("w")]);
        assert_ne!(x.mul(&w), w.mul(&x));
        assert_eq!(x.mul(&w), SkewPoly::monomial(r("3w"), 1));
    }

    #[test]
    fn associativity_sampled() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
            let d = rng.gen_range(0..=4usize);
            SkewPoly::new(
                (0..=d)
                    .map(|_| RElement::from_index(rng.gen_range(0..16)))
                    .collect(),
            )
        };
        for _ in 0..1000 {
            let f = rand_poly(&mut rng);
            let g = rand_poly(&mut rng);
            let h = rand_poly(&mut rng);
            assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        }
    }

    #[test]
    fn right_division_examples() {
        let f = sp("x^2-1");
        let d = sp("x-1");
        let q = SkewPoly::right_divides(&d, &f).unwrap().unwrap();
        assert_eq!(q, sp("x+1"));
        assert_eq!(q.mul(&d), f);
        // d = f gives quotient 1
        assert_eq!(
            SkewPoly::right_divides(&f, &f).unwrap().unwrap(),
            SkewPoly::one()
        );
        // x - w: engine-decided
        let d = sp("x").sub(&SkewPoly::new(vec![r("w")]));
        let res = SkewPoly::right_divides(&d, &f).unwrap();
        if let Some(q) = &res {
            assert_eq!(q.mul(&d), f);
        }
        // theta(w) * w = 3w * w = 2w^2 = ... != 1, so x - w is not a divisor
        assert!(res.is_none());
    }

    #[test]
    fn divisor_search_n2() {
        let divisors = skew_right_divisor_search(2, 2);
        // linear right divisors x - c need theta(c) c = 1
        let linear: Vec<&SkewPoly> = divisors.iter().filter(|f| f.degree() == Some(1)).collect();
        assert_eq!(linear.len(), 4);
        for f in &linear {
            let c = -f.coeff(0);
            assert_eq!(c.theta() * c, RElement::ONE);
        }
        assert!(divisors.contains(&sp("x^2-1")));
        assert!(divisors.contains(&SkewPoly::one()));
        // every reported divisor re-multiplies exactly
        for f in &divisors {
            let q = SkewPoly::right_divides(f, &SkewPoly::xn_minus_1(2))
                .unwrap()
                .unwrap();
            assert_eq!(q.mul(f), SkewPoly::xn_minus_1(2));
        }
    }
}
