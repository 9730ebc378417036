//! Canonical renderings of the element/codon/bit tables, in the customary
//! row order: the pure Z4 residues, then the pure w-multiples, then the
//! mixed elements by ascending a.

use crate::ring::{RElement, Z4};

use super::dna::r_to_codon;
use super::{breve_o, GrayTable};

/// The customary element order for the 16-row tables.
pub fn table_element_order() -> Vec<RElement> {
    let pairs: [(u8, u8); 16] = [
        (0, 0),
        (1, 0),
        (2, 0),
        (3, 0),
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 1),
        (1, 2),
        (1, 3),
        (2, 1),
        (2, 2),
        (2, 3),
        (3, 1),
        (3, 2),
        (3, 3),
    ];
    pairs
        .iter()
        .map(|&(a, b)| RElement::new(Z4::new(a), Z4::new(b)))
        .collect()
}

/// Rows (element, gray image, codon) of the element/codon table.
pub fn codon_table_rows() -> Vec<(String, String, String)> {
    table_element_order()
        .into_iter()
        .map(|x| {
            (
                x.to_string(),
                format!("({},{})", x.a, x.b),
                r_to_codon(x).to_string(),
            )
        })
        .collect()
}

/// Rows (codon, bits) of the codon/bit table.
pub fn codon_bits_rows() -> Vec<(String, String)> {
    table_element_order()
        .into_iter()
        .map(|x| (r_to_codon(x).to_string(), breve_o(x).to_string()))
        .collect()
}

/// Rows (c, alpha, beta, gamma) of the 2-adic digit table.
pub fn gray_digit_rows() -> Vec<(String, u8, u8, u8)> {
    Z4::all()
        .map(|c| {
            (
                c.to_string(),
                GrayTable::alpha(c),
                GrayTable::beta(c),
                GrayTable::gamma(c),
            )
        })
        .collect()
}

/// The codon table as tab-separated text, one row per line.
pub fn codon_table_text() -> String {
    codon_table_rows()
        .into_iter()
        .map(|(e, g, c)| format!("{e}\t{g}\t{c}"))
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

/// The codon/bit table as tab-separated text.
pub fn codon_bits_text() -> String {
    codon_bits_rows()
        .into_iter()
        .map(|(c, b)| format!("{c}\t{b}"))
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}
