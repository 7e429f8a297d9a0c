//! Reference fixtures shared by the integration suites: the classical
//! H(3,3)/Z_19 and H(3,4)/F_25 arrays, the perfect H(3,5)/F_31, and the
//! agreeable H(6,15)/F_181, entered verbatim (signs normalized to residues).

#![allow(dead_code)]

use std::sync::Arc;

use heffter_core::{Field, FieldElement, HeffterArray};

pub fn residues(field: &Arc<Field>, values: &[i64]) -> Vec<FieldElement> {
    values
        .iter()
        .map(|&v| field.element_from_coeffs(&[v]).unwrap())
        .collect()
}

pub fn prime_array(p: u64, m: usize, n: usize, values: &[i64]) -> HeffterArray {
    let field = Arc::new(Field::new(p, 1, None).unwrap());
    let entries = residues(&field, values);
    HeffterArray::new(&field, m, n, entries).unwrap()
}

/// The rank-one H(3,3) over Z_19 with rows (1,3,−4), (7,2,−9), (−8,−5,−6).
pub fn example1() -> HeffterArray {
    prime_array(19, 3, 3, &[1, 3, -4, 7, 2, -9, -8, -5, -6])
}

/// The rank-one H(3,4) over F_25, g a root of x²+x+2.
pub fn example2() -> HeffterArray {
    let field = Arc::new(Field::new(5, 2, None).unwrap());
    let coeffs: [[i64; 2]; 12] = [
        [1, 0], [0, 1], [4, 1], [0, 3],
        [1, 3], [4, 3], [3, 0], [2, 4],
        [3, 2], [1, 1], [3, 4], [3, 3],
    ];
    let entries = coeffs
        .iter()
        .map(|c| field.element_from_coeffs(c).unwrap())
        .collect();
    HeffterArray::new(&field, 3, 4, entries).unwrap()
}

/// The reference H(3,5) over F_31 with X = (1,5,25), Y = (1,2,4,8,16).
pub fn h35_reference() -> HeffterArray {
    prime_array(
        31,
        3,
        5,
        &[
            1, 2, 4, 8, 16,
            5, 10, 20, 9, 18,
            25, 19, 7, 14, 28,
        ],
    )
}

/// The reference H(6,15) over F_181.
pub fn h615_reference() -> HeffterArray {
    prime_array(
        181,
        6,
        15,
        &[
            1, 59, 42, 125, 135, 4, 55, 168, 138, 178, 16, 39, 129, 9, 169,
            48, 117, 25, 27, 145, 11, 106, 100, 108, 37, 44, 62, 38, 70, 148,
            132, 5, 114, 29, 82, 166, 20, 94, 116, 147, 121, 80, 14, 102, 45,
            2, 118, 84, 69, 89, 8, 110, 155, 95, 175, 32, 78, 77, 18, 157,
            96, 53, 50, 54, 109, 22, 31, 19, 35, 74, 88, 124, 76, 140, 115,
            83, 10, 47, 58, 164, 151, 40, 7, 51, 113, 61, 160, 28, 23, 90,
        ],
    )
}
