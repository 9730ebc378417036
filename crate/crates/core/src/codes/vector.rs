//! Vectors over R and S and their flat Z4 coordinate rows. Coordinate i of
//! an R^n vector occupies columns 2i, 2i+1; an S^n coordinate occupies four
//! columns. Shifts and reversals act blockwise on these rows.

use crate::ring::{RElement, SElement, Z4};

pub fn encode_r(v: &[RElement]) -> Vec<Z4> {
    v.iter().flat_map(|x| [x.a, x.b]).collect()
}

pub fn decode_r(row: &[Z4]) -> Vec<RElement> {
    assert_eq!(row.len() % 2, 0, "R rows have even width");
    row.chunks(2).map(|c| RElement::new(c[0], c[1])).collect()
}

pub fn encode_s(v: &[SElement]) -> Vec<Z4> {
    v.iter().flat_map(|x| x.coords).collect()
}

pub fn decode_s(row: &[Z4]) -> Vec<SElement> {
    assert_eq!(row.len() % 4, 0, "S rows have width divisible by 4");
    row.chunks(4)
        .map(|c| SElement::new(c[0], c[1], c[2], c[3]))
        .collect()
}

/// sigma: rotate right by one coordinate.
pub fn cyclic_shift<T: Copy>(v: &[T]) -> Vec<T> {
    let mut out = v.to_vec();
    out.rotate_right(1);
    out
}

pub fn reverse<T: Copy>(v: &[T]) -> Vec<T> {
    v.iter().rev().copied().collect()
}

pub fn complement_r_vec(v: &[RElement]) -> Vec<RElement> {
    v.iter().map(|x| x.complement()).collect()
}

pub fn complement_s_vec(v: &[SElement]) -> Vec<SElement> {
    v.iter().map(|x| x.complement()).collect()
}

/// Reverse complement x^rc = (x_{n-1}-bar, ..., x_0-bar).
pub fn rc_r_vec(v: &[RElement]) -> Vec<RElement> {
    reverse(&complement_r_vec(v))
}

pub fn rc_s_vec(v: &[SElement]) -> Vec<SElement> {
    reverse(&complement_s_vec(v))
}

/// The all-(3+3w) vector, the reverse complement of zero over R.
pub fn complement_of_zero_r(n: usize) -> Vec<RElement> {
    vec![RElement::THREE_PLUS_3W; n]
}

/// The all-((3+3w)+v(3+3w)) vector, the reverse complement of zero over S.
pub fn complement_of_zero_s(n: usize) -> Vec<SElement> {
    vec![SElement::complement_of_zero(); n]
}

pub fn scale_r(v: &[RElement], c: RElement) -> Vec<RElement> {
    v.iter().map(|&x| x * c).collect()
}

pub fn scale_s(v: &[SElement], c: SElement) -> Vec<SElement> {
    v.iter().map(|&x| x * c).collect()
}

pub fn display_r_vec(v: &[RElement]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn display_s_vec(v: &[SElement]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
