use crate::algebra::HomAlgebra;
use crate::error::Result;
use crate::exact::{unflatten, Rational};
use num_traits::{One, Signed, Zero};

use super::manifest::Manifest;
use super::run::environment;

/// Basis labels such as `e1⊗e2`, following the tensor shape of the algebra.
pub fn basis_labels(a: &HomAlgebra) -> Vec<String> {
    let shape = a.shape();
    (0..a.dim())
        .map(|i| {
            unflatten(shape, i)
                .iter()
                .map(|k| format!("e{}", k + 1))
                .collect::<Vec<_>>()
                .join("⊗")
        })
        .collect()
}

/// `t[i][j]` holds the coefficients of `e_i e_j`.
pub fn product_table(a: &HomAlgebra) -> Vec<Vec<Vec<Rational>>> {
    let n = a.dim();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a.constant(i, j, k).clone()).collect()).collect())
        .collect()
}

/// Renders a vector in the given basis, e.g. `2 e1⊗e1 - 1/3 e2⊗e1`.
pub fn format_vector(coeffs: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Plain-text product table, one row per left factor.
pub fn render_table(a: &HomAlgebra) -> String {
    let labels = basis_labels(a);
    let table = product_table(a);
    let mut cells: Vec<Vec<String>> = vec![std::iter::once(String::new()).chain(labels.iter().cloned()).collect()];
    for (i, row) in table.iter().enumerate() {
        let mut line = vec![labels[i].clone()];
        line.extend(row.iter().map(|v| format_vector(v, &labels)));
        cells.push(line);
    }
    let cols = labels.len() + 1;
    let widths: Vec<usize> = (0..cols)
        .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let padded: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        out.push_str(padded.join(" | ").trim_end());
        out.push('\n');
    }
    out
}

/// Product table of a named algebra in a manifest. Constructions bound by
/// tasks are available under their bound names.
pub fn table(manifest: &Manifest, name: &str) -> Result<String> {
    let env = environment(manifest)?;
    Ok(render_table(env.algebra(name)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::manifest::parse_manifest;
    use crate::error::Error;
    use crate::exact::int;
    use crate::gallery;

    #[test]
    fn k2_table() {
        let text = render_table(&gallery::k2());
        assert_eq!(text, "   | e1 | e2\ne1 | e1 | 0\ne2 | 0  | e2\n");
    }

    #[test]
    fn vectors() {
        let labels = vec!["x".to_string(), "y".to_string()];
        assert_eq!(format_vector(&[int(-1), Rational::new(2.into(), 3.into())], &labels), "-x + 2/3 y");
        assert_eq!(format_vector(&[int(0), int(-2)], &labels), "-2 y");
        assert_eq!(format_vector(&[int(0), int(0)], &labels), "0");
    }

    #[test]
    fn tensor_labels_and_kinds() {
        let m = parse_manifest(
            r#"{"objects": {"G": {"kind": "gallery", "name": "ttp_k2_lambda", "params": {"lambda": "2"}}}}"#,
        )
        .unwrap();
        let t = table(&m, "G.product").unwrap();
        let rows: Vec<&str> = t.lines().collect();
        assert_eq!(rows[0], "      | e1⊗e1    | e1⊗e2   | e2⊗e1   | e2⊗e2");
        assert_eq!(rows[1], "e1⊗e1 | 2 e1⊗e1  | 2 e1⊗e2 | -e1⊗e1  | -2 e1⊗e2");
        assert!(matches!(table(&m, "G.R"), Err(Error::WrongKind { .. })));
        assert!(matches!(table(&m, "nope"), Err(Error::UnknownName(_))));
    }
}
