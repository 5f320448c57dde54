use std::fmt;

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Dense exact matrix, row-major.
///
/// A matrix `M` stands for the linear map sending basis vector `e_c` to
/// `sum_r M[r, c] e_r`, i.e. it acts on column coordinate vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Rational::one() } else { Rational::zero() })
    }

    pub fn scalar(n: usize, value: Rational) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { value.clone() } else { Rational::zero() })
    }

    pub fn diag(values: &[Rational]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |r, c| if r == c { values[r].clone() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dims("ragged matrix rows"));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for integer literals in tests and presets.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|&v| int(v)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    /// Permutation matrix sending `e_c` to `e_{image[c]}`.
    pub fn permutation(image: &[usize]) -> Self {
        let n = image.len();
        let mut m = Self::zeros(n, n);
        for (c, &r) in image.iter().enumerate() {
            m[(r, c)] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = &self[(r, c)];
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims("cannot add matrices of different shapes"));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Exact Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::dims(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::NotInvertible)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].recip();
            for c in 0..n {
                a[(col, c)] *= &p;
                inv[(col, c)] *= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in 0..n {
                    let da = &a[(col, c)] * &factor;
                    a[(r, c)] -= da;
                    let di = &inv[(col, c)] * &factor;
                    inv[(r, c)] -= di;
                }
            }
        }
        Ok(inv)
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, exp: i64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::dims("power of a non-square matrix"));
        }
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Kronecker product: `kron(a, b)[(i, j), (p, q)] = a[i, p] * b[j, q]` with
    /// row-major pair flattening.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (br, bc) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * br, self.cols * bc, |r, c| {
            let a = &self[(r / br, c / bc)];
            if a.is_zero() {
                Rational::zero()
            } else {
                a * &other[(r % br, c % bc)]
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (i, v) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.mul(b)
}

pub fn mat_inv(a: &Matrix) -> Result<Matrix> {
    a.inverse()
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    fn swap2() -> Matrix {
        Matrix::from_ints(&[&[0, 1], &[1, 0]])
    }

    #[test]
    fn identity_and_involution() {
        let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(Matrix::identity(2).mul(&m).unwrap(), m);
        assert_eq!(swap2().mul(&swap2()).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn mul_shape_mismatch() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 2);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn inverse_cases() {
        assert_eq!(Matrix::identity(3).inverse().unwrap(), Matrix::identity(3));
        let u = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        let ui = u.inverse().unwrap();
        assert_eq!(ui, Matrix::from_ints(&[&[1, -1], &[0, 1]]));
        assert!(u.mul(&ui).unwrap().is_identity());
        assert!(matches!(
            Matrix::from_ints(&[&[1, 1], &[1, 1]]).inverse(),
            Err(Error::NotInvertible)
        ));
        assert!(matches!(
            Matrix::zeros(2, 3).inverse(),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn inverse_needs_pivoting() {
        let m = Matrix::from_ints(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 1]]);
        let mi = m.inverse().unwrap();
        assert!(m.mul(&mi).unwrap().is_identity());
        assert!(mi.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn kron_cases() {
        assert_eq!(Matrix::identity(2).kron(&Matrix::identity(2)), Matrix::identity(4));
        assert_eq!(swap2().kron(&Matrix::identity(1)), swap2());
        let d = Matrix::diag(&[int(2)]).kron(&Matrix::diag(&[int(3)]));
        assert_eq!(d, Matrix::diag(&[int(6)]));
        // (i, j), (p, q) entry convention
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        for (i, j, p, q) in [(0, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1)] {
            assert_eq!(k[(i * 2 + j, p * 2 + q)], &a[(i, p)] * &b[(j, q)]);
        }
    }

    #[test]
    fn powers() {
        let u = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(u.pow(3).unwrap(), Matrix::from_ints(&[&[1, 3], &[0, 1]]));
        assert_eq!(u.pow(-2).unwrap(), Matrix::from_ints(&[&[1, -2], &[0, 1]]));
        let d = Matrix::diag(&[int(2), int(4)]);
        assert_eq!(d.pow(-1).unwrap(), Matrix::diag(&[frac(1, 2), frac(1, 4)]));
    }
}
