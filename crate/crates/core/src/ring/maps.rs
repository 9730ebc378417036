//! Total maps on R or S as lookup tables, with an exhaustive axiom audit.

use serde::Serialize;

use super::r16::RElement;
use super::s256::SElement;
use super::z4::Z4;

/// Which carrier a map is defined on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MapDomain {
    R16,
    S256,
}

impl MapDomain {
    pub fn size(self) -> usize {
        match self {
            MapDomain::R16 => 16,
            MapDomain::S256 => 256,
        }
    }
}

/// A total map on R or S stored as an image table indexed by element index.
#[derive(Debug, Clone)]
pub struct RingMap {
    pub name: String,
    pub domain: MapDomain,
    table: Vec<usize>,
}

/// Result of auditing a map against the ring axioms. Flags are computed,
/// never assumed; the first counterexample per failed axiom is retained.
#[derive(Debug, Clone, Serialize)]
pub struct RingMapAudit {
    pub map: String,
    pub domain: MapDomain,
    pub additive: bool,
    pub multiplicative: bool,
    pub unital: bool,
    pub bijective: bool,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub axiom: String,
    pub witness: String,
}

impl RingMapAudit {
    pub fn all_hold(&self) -> bool {
        self.additive && self.multiplicative && self.unital && self.bijective
    }
}

impl RingMap {
    pub fn from_fn_r(name: &str, f: impl Fn(RElement) -> RElement) -> RingMap {
        RingMap {
            name: name.to_string(),
            domain: MapDomain::R16,
            table: RElement::all().map(|x| f(x).index()).collect(),
        }
    }

    pub fn from_fn_s(name: &str, f: impl Fn(SElement) -> SElement) -> RingMap {
        RingMap {
            name: name.to_string(),
            domain: MapDomain::S256,
            table: SElement::all().map(|x| f(x).index()).collect(),
        }
    }

    pub fn image(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn identity_r() -> RingMap {
        RingMap::from_fn_r("identity-r", |x| x)
    }

    pub fn identity_s() -> RingMap {
        RingMap::from_fn_s("identity-s", |x| x)
    }

    pub fn theta() -> RingMap {
        RingMap::from_fn_r("theta", |x| x.theta())
    }

    pub fn gamma() -> RingMap {
        RingMap::from_fn_s("gamma", |x| x.gamma())
    }

    /// The verbatim text formula a+wb+vc+wvd -> a+b + w(b+d) - vc - wv(dc),
    /// read off literally with dc a product in Z4. Kept for auditing; it is
    /// not additive (see `validate_ring_map`).
    pub fn gamma_literal() -> RingMap {
        RingMap::from_fn_s("gamma-literal", |x| {
            let [a, b, c, d] = x.coords;
            SElement::new(a + b, b + d, -c, -(d * c))
        })
    }

    pub fn by_name(name: &str) -> Option<RingMap> {
        match name {
            "identity-r" => Some(RingMap::identity_r()),
            "identity-s" => Some(RingMap::identity_s()),
            "theta" => Some(RingMap::theta()),
            "gamma" => Some(RingMap::gamma()),
            "gamma-literal" => Some(RingMap::gamma_literal()),
            "complement-r" => Some(complement_r_map()),
            _ => None,
        }
    }
}

fn elem_name(domain: MapDomain, i: usize) -> String {
    match domain {
        MapDomain::R16 => RElement::from_index(i).to_string(),
        MapDomain::S256 => SElement::from_index(i).to_string(),
    }
}

/// Exhaustively checks the four flags on the map's whole domain.
pub fn validate_ring_map(m: &RingMap) -> RingMapAudit {
    let n = m.domain.size();
    let add = |x: usize, y: usize| -> usize {
        match m.domain {
            MapDomain::R16 => (RElement::from_index(x) + RElement::from_index(y)).index(),
            MapDomain::S256 => (SElement::from_index(x) + SElement::from_index(y)).index(),
        }
    };
    let mul = |x: usize, y: usize| -> usize {
        match m.domain {
            MapDomain::R16 => (RElement::from_index(x) * RElement::from_index(y)).index(),
            MapDomain::S256 => (SElement::from_index(x) * SElement::from_index(y)).index(),
        }
    };
    let one = match m.domain {
        MapDomain::R16 => RElement::ONE.index(),
        MapDomain::S256 => SElement::ONE.index(),
    };

    let mut counterexamples = Vec::new();
    let mut additive = true;
    let mut multiplicative = true;
    'add: for x in 0..n {
        for y in 0..n {
            if m.image(add(x, y)) != add(m.image(x), m.image(y)) {
                additive = false;
                counterexamples.push(Counterexample {
                    axiom: "additive".into(),
                    witness: format!(
                        "x={}, y={}: f(x+y)={} but f(x)+f(y)={}",
                        elem_name(m.domain, x),
                        elem_name(m.domain, y),
                        elem_name(m.domain, m.image(add(x, y))),
                        elem_name(m.domain, add(m.image(x), m.image(y))),
                    ),
                });
                break 'add;
            }
        }
    }
    'mul: for x in 0..n {
        for y in 0..n {
            if m.image(mul(x, y)) != mul(m.image(x), m.image(y)) {
                multiplicative = false;
                counterexamples.push(Counterexample {
                    axiom: "multiplicative".into(),
                    witness: format!("x={}, y={}", elem_name(m.domain, x), elem_name(m.domain, y)),
                });
                break 'mul;
            }
        }
    }
    let unital = m.image(one) == one;
    if !unital {
        counterexamples.push(Counterexample {
            axiom: "unital".into(),
            witness: format!("f(1)={}", elem_name(m.domain, m.image(one))),
        });
    }
    let mut seen = vec![false; n];
    let mut bijective = true;
    for x in 0..n {
        let y = m.image(x);
        if seen[y] {
            bijective = false;
            counterexamples.push(Counterexample {
                axiom: "bijective".into(),
                witness: format!("value {} hit twice", elem_name(m.domain, y)),
            });
            break;
        }
        seen[y] = true;
    }

    RingMapAudit {
        map: m.name.clone(),
        domain: m.domain,
        additive,
        multiplicative,
        unital,
        bijective,
        counterexamples,
    }
}

/// Complement as a map for auditing; affine rather than linear.
pub fn complement_r_map() -> RingMap {
    RingMap::from_fn_r("complement-r", |x| x.complement())
}

#[allow(unused)]
fn z4_unused(_: Z4) {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_passes() {
        assert!(validate_ring_map(&RingMap::identity_r()).all_hold());
        assert!(validate_ring_map(&RingMap::identity_s()).all_hold());
    }

    #[test]
    fn theta_and_gamma_pass_all_flags() {
        assert!(validate_ring_map(&RingMap::theta()).all_hold());
        assert!(validate_ring_map(&RingMap::gamma()).all_hold());
    }

    #[test]
    fn literal_gamma_formula_fails_additivity() {
        let audit = validate_ring_map(&RingMap::gamma_literal());
        assert!(!audit.additive);
        assert!(audit.counterexamples.iter().any(|c| c.axiom == "additive"));
        // a concrete instance: x = y = v + wv
        let x = SElement::V + SElement::WV;
        let f = |t: SElement| {
            let [a, b, c, d] = t.coords;
            SElement::new(a + b, b + d, -c, -(d * c))
        };
        assert_ne!(f(x + x), f(x) + f(x));
    }
}
