//! Structural tables for R: units, the ideal lattice, the chain property.

use std::collections::BTreeSet;

use serde::Serialize;

use super::r16::RElement;

#[derive(Debug, Clone, Serialize)]
pub struct Ideal {
    /// Canonical name: the smallest element (by index) generating the ideal,
    /// or "0" / "1" for the trivial ones.
    pub generator: String,
    pub elements: Vec<String>,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RingTables {
    pub units: Vec<String>,
    pub ideals: Vec<Ideal>,
    /// True when the ideals are totally ordered by inclusion.
    pub chain: bool,
}

fn principal_ideal(g: RElement) -> BTreeSet<RElement> {
    RElement::all().map(|x| x * g).collect()
}

/// All ideals of R: principal ideals closed under pairwise sums to a fixpoint.
fn all_ideals() -> Vec<BTreeSet<RElement>> {
    let mut ideals: BTreeSet<Vec<RElement>> = RElement::all()
        .map(|g| principal_ideal(g).into_iter().collect::<Vec<_>>())
        .collect();
    loop {
        let snapshot: Vec<Vec<RElement>> = ideals.iter().cloned().collect();
        let before = ideals.len();
        for i in &snapshot {
            for j in &snapshot {
                let sum: BTreeSet<RElement> = i
                    .iter()
                    .flat_map(|&x| j.iter().map(move |&y| x + y))
                    .collect();
                ideals.insert(sum.into_iter().collect());
            }
        }
        if ideals.len() == before {
            break;
        }
    }
    let mut out: Vec<BTreeSet<RElement>> = ideals
        .into_iter()
        .map(|v| v.into_iter().collect())
        .collect();
    out.sort_by_key(|s| (s.len(), s.iter().map(|x| x.index()).collect::<Vec<_>>()));
    out
}

/// Units by invertibility search, ideals by closure, chain flag by computed
/// pairwise inclusion.
pub fn ring_tables() -> RingTables {
    let units: Vec<String> = RElement::all()
        .filter(|x| x.inverse().is_some())
        .map(|x| x.to_string())
        .collect();

    let sets = all_ideals();
    let mut ideals = Vec::new();
    for set in &sets {
        let generator = RElement::all()
            .find(|&g| principal_ideal(g) == *set)
            .map(|g| g.to_string())
            .unwrap_or_else(|| "(non-principal)".to_string());
        ideals.push(Ideal {
            generator,
            elements: set.iter().map(|x| x.to_string()).collect(),
            size: set.len(),
        });
    }

    let mut chain = true;
    for i in &sets {
        for j in &sets {
            if !i.is_subset(j) && !j.is_subset(i) {
                chain = false;
            }
        }
    }

    RingTables {
        units,
        ideals,
        chain,
    }
}
