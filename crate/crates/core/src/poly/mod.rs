//! Polynomial arithmetic over Z4, R and S, reciprocals, monic division and
//! exhaustive divisor search; plus the skew polynomial ring over R.

mod skew;

pub use skew::{skew_right_divisor_search, SkewPoly};

use std::fmt;
use std::str::FromStr;

use crate::ring::{CoeffRing, Z4};

/// Errors from polynomial operations and parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Division requires a unit leading coefficient.
    NonUnitLead(String),
    DivisionByZero,
    /// The reciprocal of the zero polynomial is undefined.
    ZeroPolynomial,
    /// Divisor search is restricted to odd lengths.
    EvenLength(usize),
    Parse(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NonUnitLead(p) => {
                write!(f, "leading coefficient of {p} is not a unit")
            }
            PolyError::DivisionByZero => write!(f, "division by the zero polynomial"),
            PolyError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            PolyError::EvenLength(n) => write!(f, "length {n} is even; odd length required"),
            PolyError::Parse(s) => write!(f, "cannot parse polynomial: {s}"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Polynomial with ascending coefficients; canonical form has no trailing
/// zero, and the zero polynomial has an empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T: CoeffRing> {
    coeffs: Vec<T>,
}

impl<T: CoeffRing> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Poly<T> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly<T> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly<T> {
        Poly::new(vec![T::one()])
    }

    pub fn constant(c: T) -> Poly<T> {
        Poly::new(vec![c])
    }

    pub fn monomial(c: T, k: usize) -> Poly<T> {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn x() -> Poly<T> {
        Poly::monomial(T::one(), 1)
    }

    /// x^n - 1.
    pub fn xn_minus_1(n: usize) -> Poly<T> {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[0] = -T::one();
        coeffs[n] = T::one();
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).copied().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<T> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Some(T::one())
    }

    pub fn add(&self, other: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|&c| -c).collect())
    }

    pub fn scale(&self, c: T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Convolution product.
    pub fn mul(&self, other: &Poly<T>) -> Poly<T> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j] + a * b;
            }
        }
        Poly::new(coeffs)
    }

    /// Reduction mod x^n - 1: the coefficient of x^{n+k} folds onto x^k.
    pub fn rem_xn_minus_1(&self, n: usize) -> Poly<T> {
        assert!(n >= 1, "modulus x^n - 1 requires n >= 1");
        let mut coeffs = vec![T::zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] = coeffs[i % n] + c;
        }
        Poly::new(coeffs)
    }

    pub fn mul_mod(&self, other: &Poly<T>, n: usize) -> Poly<T> {
        self.mul(other).rem_xn_minus_1(n)
    }

    pub fn eval(&self, x: T) -> T {
        let mut acc = T::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Embeds a polynomial into a larger coefficient ring.
    pub fn map_coeffs<U: CoeffRing>(&self, f: impl Fn(T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(|&c| f(c)).collect())
    }

    /// The reciprocal x^r f(1/x) with r = deg f: the reversed coefficient
    /// list. Undefined for the zero polynomial.
    pub fn reciprocal(&self) -> Result<Poly<T>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(Poly::new(self.coeffs.iter().rev().copied().collect()))
    }

    /// Returns the unit m with f* = m f, if one exists.
    pub fn self_reciprocal_unit(&self) -> Option<T> {
        let star = self.reciprocal().ok()?;
        T::units().into_iter().find(|&m| self.scale(m) == star)
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.self_reciprocal_unit().is_some()
    }

    /// Long division by a divisor with unit leading coefficient.
    pub fn div_rem(&self, d: &Poly<T>) -> Result<(Poly<T>, Poly<T>), PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let lead_inv = d
            .lead()
            .unwrap()
            .inverse()
            .ok_or_else(|| PolyError::NonUnitLead(d.to_string()))?;
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut q = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.lead().unwrap() * lead_inv;
            let k = rd - dd;
            q[k] = q[k] + c;
            rem = rem.sub(&d.mul(&Poly::monomial(c, k)));
        }
        Ok((Poly::new(q), rem))
    }

    /// Exact division test: Some(q) with q*d = f when the remainder is zero.
    pub fn divides(d: &Poly<T>, f: &Poly<T>) -> Result<Option<Poly<T>>, PolyError> {
        let (q, r) = f.div_rem(d)?;
        if r.is_zero() {
            debug_assert_eq!(q.mul(d), *f);
            Ok(Some(q))
        } else {
            Ok(None)
        }
    }

    pub fn to_bracket_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl<T: CoeffRing> fmt::Display for Poly<T> {
    /// Human form, ascending: "3+2x+x^2". Compound coefficients on x-terms
    /// are parenthesized so the output parses back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let cs = c.to_string();
            if i == 0 {
                write!(f, "{cs}")?;
                continue;
            }
            if c == T::one() {
                // bare x term
            } else if cs.contains('+') && !cs.starts_with('(') {
                write!(f, "({cs})")?;
            } else {
                write!(f, "{cs}")?;
            }
            if i == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{i}")?;
            }
        }
        Ok(())
    }
}

/// Splits "a,b,(c,d,e,f),g" on commas outside parentheses.
fn split_top_level_commas(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    parts.push(cur);
    parts
}

/// Splits a sum into signed terms at top-level '+' and '-'.
fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>, PolyError> {
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    let mut neg = false;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if !cur.trim().is_empty() {
                    terms.push((neg, cur.trim().to_string()));
                    cur = String::new();
                    neg = ch == '-';
                } else if cur.trim().is_empty() && terms.is_empty() && !neg {
                    // leading sign
                    neg = ch == '-';
                } else {
                    return Err(PolyError::Parse(s.to_string()));
                }
            }
            _ => cur.push(ch),
        }
    }
    if cur.trim().is_empty() {
        return Err(PolyError::Parse(s.to_string()));
    }
    terms.push((neg, cur.trim().to_string()));
    Ok(terms)
}

fn parse_element<T: CoeffRing>(s: &str) -> Result<T, PolyError> {
    let s = s.trim();
    if let Ok(c) = s.parse::<T>() {
        return Ok(c);
    }
    // coefficient may be written with redundant parentheses, e.g. "(1+w)"
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        if let Ok(c) = inner.parse::<T>() {
            return Ok(c);
        }
    }
    Err(PolyError::Parse(s.to_string()))
}

impl<T: CoeffRing> FromStr for Poly<T> {
    type Err = PolyError;

    /// Accepts the bracket list "[c0,c1,...]" or the human form
    /// "c0+c1x+c2x^2" (signs allowed, e.g. "x-1"; coefficients in the
    /// element syntax of the ring, parenthesized when compound).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse(s.to_string()));
        }
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| PolyError::Parse(s.to_string()))?;
            if inner.trim().is_empty() {
                return Ok(Poly::zero());
            }
            let coeffs = split_top_level_commas(inner)
                .iter()
                .map(|p| parse_element::<T>(p))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Poly::new(coeffs));
        }
        let mut acc = Poly::zero();
        for (negated, term) in split_signed_terms(s)? {
            let (coef_text, exp) = match term.find('x') {
                None => (term.as_str(), None),
                Some(pos) => {
                    let tail = &term[pos + 1..];
                    let exp = if tail.is_empty() {
                        1usize
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| PolyError::Parse(term.clone()))?
                    };
                    (&term[..pos], Some(exp))
                }
            };
            let coef = if coef_text.trim().is_empty() {
                if exp.is_none() {
                    return Err(PolyError::Parse(term.clone()));
                }
                T::one()
            } else {
                parse_element::<T>(coef_text)?
            };
            let coef = if negated { -coef } else { coef };
            acc = acc.add(&Poly::monomial(coef, exp.unwrap_or(0)));
        }
        Ok(acc)
    }
}

/// All monic divisors of x^n - 1 of degree 1..=max_deg, by exhaustive scan
/// over coefficient tuples, in a fixed canonical order.
pub fn monic_divisors_of_xn_minus_1<T: CoeffRing>(n: usize, max_deg: usize) -> Vec<Poly<T>> {
    let modulus = Poly::<T>::xn_minus_1(n);
    let elems = T::all_elements();
    let mut found = Vec::new();
    for deg in 1..=max_deg.min(n) {
        // candidates have `deg` free coefficients below the monic lead
        let mut idx = vec![0usize; deg];
        loop {
            let mut coeffs: Vec<T> = idx.iter().map(|&i| elems[i]).collect();
            coeffs.push(T::one());
            let cand = Poly::new(coeffs);
            if Poly::divides(&cand, &modulus)
                .expect("monic candidate")
                .is_some()
            {
                found.push(cand);
            }
            // advance the odometer
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

/// Monic divisors of x^n - 1 over Z4 (degree >= 1), n odd.
pub fn divisor_search(n: usize, max_deg: usize) -> Result<Vec<Poly<Z4>>, PolyError> {
    if n.is_multiple_of(2) {
        return Err(PolyError::EvenLength(n));
    }
    Ok(monic_divisors_of_xn_minus_1::<Z4>(n, max_deg))
}
