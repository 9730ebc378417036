//! Linear algebra over Z4: the Howell canonical form of a row span, and
//! through it cardinality, membership, equality, sum, intersection,
//! enumeration and seeded sampling of Z4-submodules.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::Z4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    WidthMismatch { left: usize, right: usize },
    TooLarge { cardinality: u128, cap: u128 },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::WidthMismatch { left, right } => {
                write!(f, "width mismatch: {left} vs {right}")
            }
            EngineError::TooLarge { cardinality, cap } => {
                write!(
                    f,
                    "module has {cardinality} elements, more than the cap {cap}"
                )
            }
        }
    }
}

impl std::error::Error for EngineError {}

/// A rectangular matrix of generators over Z4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z4Matrix {
    pub width: usize,
    pub rows: Vec<Vec<Z4>>,
}

impl Z4Matrix {
    pub fn new(width: usize) -> Z4Matrix {
        Z4Matrix {
            width,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(width: usize, rows: Vec<Vec<Z4>>) -> Z4Matrix {
        for r in &rows {
            assert_eq!(r.len(), width, "ragged row");
        }
        Z4Matrix { width, rows }
    }

    pub fn push_row(&mut self, row: Vec<Z4>) {
        assert_eq!(row.len(), self.width, "ragged row");
        self.rows.push(row);
    }

    /// Row-major integer text, one row per line.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Canonical basis of a Z4-submodule. Unique for a given row span: pivots
/// are 1 or 2 on strictly increasing columns, entries above a pivot 1 are
/// zero, entries above a pivot 2 are 0 or 1, and 2*row lies in the span of
/// the later rows (the Howell span condition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HowellBasis {
    width: usize,
    rows: Vec<Vec<Z4>>,
    /// (column, pivot value) per row; pivot value is 1 or 2.
    pivots: Vec<(usize, u8)>,
}

fn sub_scaled(target: &mut [Z4], source: &[Z4], factor: Z4) {
    if factor.is_zero() {
        return;
    }
    for (t, &s) in target.iter_mut().zip(source) {
        *t = *t - s * factor;
    }
}

/// One echelon pass: strictly increasing pivot columns, pivots normalized to
/// 1 or 2, entries above pivots reduced (to 0 above a 1, to {0,1} above a 2).
fn echelon(width: usize, mut pending: Vec<Vec<Z4>>) -> (Vec<Vec<Z4>>, Vec<(usize, u8)>) {
    let mut rows: Vec<Vec<Z4>> = Vec::new();
    let mut pivots: Vec<(usize, u8)> = Vec::new();
    for col in 0..width {
        pending.retain(|r| r.iter().any(|c| !c.is_zero()));
        let odd = pending.iter().position(|r| r[col].value() % 2 == 1);
        if let Some(i) = odd {
            let mut piv = pending.swap_remove(i);
            let inv = piv[col].inverse().expect("odd entries are units");
            for c in piv.iter_mut() {
                *c = *c * inv;
            }
            for r in pending.iter_mut() {
                let e = r[col];
                sub_scaled(r, &piv, e);
            }
            rows.push(piv);
            pivots.push((col, 1));
        } else if let Some(i) = pending.iter().position(|r| r[col].value() == 2) {
            let piv = pending.swap_remove(i);
            for r in pending.iter_mut() {
                // remaining entries in this column are 0 or 2
                if r[col].value() == 2 {
                    sub_scaled(r, &piv, Z4::ONE);
                }
            }
            rows.push(piv);
            pivots.push((col, 2));
        }
    }
    // reduce entries above each pivot
    for i in 0..rows.len() {
        let (col, p) = pivots[i];
        let piv = rows[i].clone();
        for row in rows.iter_mut().take(i) {
            let e = row[col];
            let factor = match p {
                1 => e,
                _ => Z4::new(e.value() / 2),
            };
            sub_scaled(row, &piv, factor);
        }
    }
    (rows, pivots)
}

fn reduce_against(rows: &[Vec<Z4>], pivots: &[(usize, u8)], v: &[Z4]) -> Vec<Z4> {
    let mut v = v.to_vec();
    for (row, &(col, p)) in rows.iter().zip(pivots) {
        let e = v[col];
        if e.is_zero() {
            continue;
        }
        match p {
            1 => sub_scaled(&mut v, row, e),
            _ => {
                if e.value().is_multiple_of(2) {
                    sub_scaled(&mut v, row, Z4::new(e.value() / 2));
                }
            }
        }
    }
    v
}

/// Computes the Howell canonical form of the row span.
pub fn howell(m: &Z4Matrix) -> HowellBasis {
    let mut work: Vec<Vec<Z4>> = m.rows.clone();
    let mut guard = 0;
    loop {
        let (rows, pivots) = echelon(m.width, work);
        // span condition: 2*row must reduce to zero against the basis
        let mut extras: Vec<Vec<Z4>> = Vec::new();
        for row in &rows {
            let doubled: Vec<Z4> = row.iter().map(|&c| c + c).collect();
            let rem = reduce_against(&rows, &pivots, &doubled);
            if rem.iter().any(|c| !c.is_zero()) {
                extras.push(rem);
            }
        }
        if extras.is_empty() {
            return HowellBasis {
                width: m.width,
                rows,
                pivots,
            };
        }
        work = rows;
        work.extend(extras);
        guard += 1;
        assert!(guard <= 2 * m.width + 4, "howell fixpoint did not converge");
    }
}

impl HowellBasis {
    pub fn empty(width: usize) -> HowellBasis {
        HowellBasis {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<Z4>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[(usize, u8)] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Product over rows: 4 per pivot 1, 2 per pivot 2.
    pub fn cardinality(&self) -> u128 {
        self.pivots
            .iter()
            .map(|&(_, p)| if p == 1 { 4u128 } else { 2u128 })
            .product()
    }

    /// Greedy reduction decides membership on a Howell form.
    pub fn contains(&self, v: &[Z4]) -> bool {
        assert_eq!(v.len(), self.width, "width mismatch");
        reduce_against(&self.rows, &self.pivots, v)
            .iter()
            .all(|c| c.is_zero())
    }

    pub fn sum(&self, other: &HowellBasis) -> Result<HowellBasis, EngineError> {
        if self.width != other.width {
            return Err(EngineError::WidthMismatch {
                left: self.width,
                right: other.width,
            });
        }
        let mut m = Z4Matrix::new(self.width);
        for r in self.rows.iter().chain(&other.rows) {
            m.push_row(r.clone());
        }
        Ok(howell(&m))
    }

    /// Zassenhaus-style intersection: Howell of [A|A; B|0], rows with zero
    /// left half have right halves spanning the intersection.
    pub fn intersect(&self, other: &HowellBasis) -> Result<HowellBasis, EngineError> {
        if self.width != other.width {
            return Err(EngineError::WidthMismatch {
                left: self.width,
                right: other.width,
            });
        }
        let w = self.width;
        let mut m = Z4Matrix::new(2 * w);
        for r in &self.rows {
            let mut row = r.clone();
            row.extend(r.iter().copied());
            m.push_row(row);
        }
        for r in &other.rows {
            let mut row = r.clone();
            row.extend(std::iter::repeat_n(Z4::ZERO, w));
            m.push_row(row);
        }
        let big = howell(&m);
        let mut inner = Z4Matrix::new(w);
        for row in &big.rows {
            if row[..w].iter().all(|c| c.is_zero()) {
                inner.push_row(row[w..].to_vec());
            }
        }
        Ok(howell(&inner))
    }

    /// All distinct elements in a fixed order; the coefficient of a pivot-2
    /// row only ranges over {0, 1}.
    pub fn enumerate(&self, cap: u128) -> Result<Vec<Vec<Z4>>, EngineError> {
        let card = self.cardinality();
        if card > cap {
            return Err(EngineError::TooLarge {
                cardinality: card,
                cap,
            });
        }
        let ranges: Vec<u8> = self
            .pivots
            .iter()
            .map(|&(_, p)| if p == 1 { 4 } else { 2 })
            .collect();
        let mut out = Vec::with_capacity(card as usize);
        let mut coeff = vec![0u8; self.rows.len()];
        loop {
            let mut v = vec![Z4::ZERO; self.width];
            for (c, row) in coeff.iter().zip(&self.rows) {
                let c = Z4::new(*c);
                for (t, &s) in v.iter_mut().zip(row) {
                    *t = *t + s * c;
                }
            }
            out.push(v);
            let mut k = 0;
            loop {
                if k == coeff.len() {
                    break;
                }
                coeff[k] += 1;
                if coeff[k] < ranges[k] {
                    break;
                }
                coeff[k] = 0;
                k += 1;
            }
            if k == coeff.len() {
                break;
            }
        }
        Ok(out)
    }

    /// Uniform seeded samples: independent coefficients per row, pivot-2
    /// rows drawn from {0, 1}.
    pub fn sample(&self, seed: u64, count: usize) -> Vec<Vec<Z4>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ranges: Vec<u8> = self
            .pivots
            .iter()
            .map(|&(_, p)| if p == 1 { 4 } else { 2 })
            .collect();
        (0..count)
            .map(|_| {
                let mut v = vec![Z4::ZERO; self.width];
                for (range, row) in ranges.iter().zip(&self.rows) {
                    let c = Z4::new(rng.gen_range(0..*range));
                    for (t, &s) in v.iter_mut().zip(row) {
                        *t = *t + s * c;
                    }
                }
                v
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        Z4Matrix::from_rows(self.width, self.rows.clone()).to_text()
    }
}
