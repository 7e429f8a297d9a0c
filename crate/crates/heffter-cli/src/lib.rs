//! IO companion to `heffter-core`: the JSON array-document format and the
//! plain-text matrix rendering used by the `heffter` binary.

pub mod document;

use heffter_core::HeffterArray;

/// Renders an array as m lines of n element strings separated by single
/// spaces, using the field's text format for elements.
pub fn render_text(a: &HeffterArray) -> String {
    let f = a.field();
    let mut out = String::new();
    for i in 0..a.m() {
        for (j, &x) in a.row(i).iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&f.format_element(x));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use heffter_core::{construct_perfect, Field};

    #[test]
    fn renders_h35_rows() {
        let field = Arc::new(Field::new(31, 1, None).unwrap());
        let x = [1i64, 5, 25].map(|v| field.element_from_coeffs(&[v]).unwrap());
        let y = [1i64, 2, 4, 8, 16].map(|v| field.element_from_coeffs(&[v]).unwrap());
        let a = HeffterArray::from_factors(&field, &x, &y).unwrap();
        let text = render_text(&a);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "1 2 4 8 16");
        assert_eq!(lines[1], "5 10 20 9 18");
        assert_eq!(lines[2], "25 19 7 14 28");
    }

    #[test]
    fn renders_extension_field_elements() {
        let field = Arc::new(Field::new(5, 2, None).unwrap());
        let row1: Vec<_> = [[1i64, 0], [0, 1], [4, 1], [0, 3]]
            .iter()
            .map(|c| field.element_from_coeffs(c).unwrap())
            .collect();
        let x: Vec<_> = [[1i64, 0], [1, 3], [3, 2]]
            .iter()
            .map(|c| field.element_from_coeffs(c).unwrap())
            .collect();
        let a = HeffterArray::from_factors(&field, &x, &row1).unwrap();
        let text = render_text(&a);
        assert!(text.starts_with("1 g g+4 3g\n"));
    }

    #[test]
    fn rendering_has_one_line_per_row() {
        let a = construct_perfect(3, 7).unwrap();
        assert_eq!(render_text(&a).lines().count(), 3);
    }
}
