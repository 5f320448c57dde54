//! Finite-dimensional (Hom-)associative algebras given by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{LinOp, Matrix, Rational, Tensor};
use crate::report::CheckReport;

/// `(A, mu, alpha)` with `e_i e_j = sum_k c[i][j][k] e_k`.
///
/// The multiplication is stored as a `dim x dim^2` matrix whose column
/// `i * dim + j` holds the coordinates of `e_i e_j`. No axiom is assumed; the
/// checkers decide. A plain associative algebra is the same record with
/// `alpha = identity`.
#[derive(Debug, Clone)]
pub struct HomAlgebra {
    dim: usize,
    mul: Matrix,
    alpha: Matrix,
    shape: Vec<usize>,
}

impl PartialEq for HomAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.mul == other.mul && self.alpha == other.alpha
    }
}

impl Eq for HomAlgebra {}

impl HomAlgebra {
    pub fn new(mul: Matrix, alpha: Matrix) -> Result<Self> {
        let dim = alpha.rows();
        if !alpha.is_square() {
            return Err(Error::dims("structure map must be square"));
        }
        if mul.rows() != dim || mul.cols() != dim * dim {
            return Err(Error::dims(format!(
                "multiplication of a {dim}-dim algebra must be {dim}x{}, got {}x{}",
                dim * dim,
                mul.rows(),
                mul.cols()
            )));
        }
        Ok(HomAlgebra {
            dim,
            mul,
            alpha,
            shape: vec![dim],
        })
    }

    /// Plain algebra (structure map = identity).
    pub fn plain(mul: Matrix) -> Result<Self> {
        let dim = mul.rows();
        Self::new(mul, Matrix::identity(dim))
    }

    /// Builds from nested constants `c[i][j][k]`.
    pub fn from_constants(constants: &[Vec<Vec<Rational>>], alpha: Matrix) -> Result<Self> {
        let dim = constants.len();
        let mut mul = Matrix::zeros(dim, dim * dim);
        for (i, row) in constants.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::dims("structure constants must be dim x dim x dim"));
            }
            for (j, prod) in row.iter().enumerate() {
                if prod.len() != dim {
                    return Err(Error::dims("structure constants must be dim x dim x dim"));
                }
                for (k, v) in prod.iter().enumerate() {
                    mul[(k, i * dim + j)] = v.clone();
                }
            }
        }
        Self::new(mul, alpha)
    }

    /// Builds from a product rule returning `(k, coefficient)` terms for `e_i e_j`.
    pub fn from_fn(
        dim: usize,
        alpha: Matrix,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, Rational)>,
    ) -> Result<Self> {
        let mut mul = Matrix::zeros(dim, dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for (k, v) in product(i, j) {
                    mul[(k, i * dim + j)] += v;
                }
            }
        }
        Self::new(mul, alpha)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul_matrix(&self) -> &Matrix {
        &self.mul
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Tensor-factor dimensions used for basis labels, e.g. `[2, 2]` for `A (x) B`.
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn with_shape(mut self, shape: Vec<usize>) -> Self {
        if shape.iter().product::<usize>() == self.dim {
            self.shape = shape;
        }
        self
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.mul[(k, i * self.dim + j)]
    }

    /// Nested constants `c[i][j][k]`.
    pub fn constants(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| (0..self.dim).map(|k| self.constant(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn is_plain(&self) -> bool {
        self.alpha.is_identity()
    }

    pub fn mul_op(&self) -> LinOp {
        LinOp::new(&self.mul, &[self.dim, self.dim], &[self.dim]).expect("shape checked")
    }

    pub fn alpha_op(&self) -> LinOp {
        LinOp::new(&self.alpha, &[self.dim], &[self.dim]).expect("shape checked")
    }

    pub fn id_op(&self) -> LinOp {
        LinOp::identity(self.dim)
    }

    /// Product of two elements given by coordinates.
    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::dims("element length differs from algebra dimension"));
        }
        let t = Tensor::from_dense(&[self.dim], x).outer(&Tensor::from_dense(&[self.dim], y));
        Ok(t.apply(0, &self.mul_op())?.to_dense())
    }

    /// Same multiplication, different structure map.
    pub fn with_alpha(&self, alpha: Matrix) -> Result<Self> {
        Ok(Self::new(self.mul.clone(), alpha)?.with_shape(self.shape.clone()))
    }
}

/// Linear map between two spaces, matrix acting on column coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap {
            source_dim: matrix.cols(),
            target_dim: matrix.rows(),
            matrix,
        }
    }

    pub fn op(&self) -> LinOp {
        LinOp::new(&self.matrix, &[self.source_dim], &[self.target_dim]).expect("shape checked")
    }
}

/// Matrix of the linear map `f` on the tensor space `in_dims`, whose output
/// lives in a space of total dimension `out_len`.
pub(crate) fn matrix_of<F>(in_dims: &[usize], out_len: usize, f: F) -> Result<Matrix>
where
    F: Fn(&Tensor) -> Result<Tensor>,
{
    let n: usize = in_dims.iter().product();
    let mut m = Matrix::zeros(out_len, n);
    for c in 0..n {
        let image = f(&Tensor::basis(in_dims, c))?;
        if image.len_flat() != out_len {
            return Err(Error::dims("image lives in a space of unexpected size"));
        }
        for (r, v) in image.terms() {
            m[(r, c)] = v.clone();
        }
    }
    Ok(m)
}

fn ensure_square(m: &Matrix, dim: usize, what: &str) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::dims(format!("{what} must be {dim}x{dim}")));
    }
    Ok(())
}

/// Scan of `alpha(xy) = alpha(x) alpha(y)` for an arbitrary `alpha` against `a`'s
/// multiplication.
pub fn check_multiplicative(a: &HomAlgebra, alpha: &Matrix) -> Result<CheckReport> {
    ensure_square(alpha, a.dim, "endomorphism")?;
    let d = a.dim;
    let mu = a.mul_op();
    let al = LinOp::new(alpha, &[d], &[d])?;
    CheckReport::of(
        "multiplicativity",
        &[d, d],
        |x| x.apply(0, &mu)?.apply(0, &al),
        |x| x.apply_each(&[(0, &al), (1, &al)])?.apply(0, &mu),
    )
}

pub fn check_hom_algebra(a: &HomAlgebra) -> Result<CheckReport> {
    let d = a.dim;
    let mu = a.mul_op();
    let al = a.alpha_op();
    let mut rep = check_multiplicative(a, &a.alpha)?;
    rep.scan(
        "hom-associativity",
        &[d, d, d],
        |x| x.apply(1, &mu)?.apply(0, &al)?.apply(0, &mu),
        |x| x.apply(0, &mu)?.apply(1, &al)?.apply(0, &mu),
    )?;
    Ok(rep)
}

pub fn check_associative(a: &HomAlgebra) -> Result<CheckReport> {
    let d = a.dim;
    let mu = a.mul_op();
    CheckReport::of(
        "associativity",
        &[d, d, d],
        |x| x.apply(0, &mu)?.apply(0, &mu),
        |x| x.apply(1, &mu)?.apply(0, &mu),
    )
}

/// Twisting principle: `(A, alpha . mu, alpha)` for a plain algebra and a
/// verified multiplicative `alpha`.
pub fn yau_twist_algebra(a: &HomAlgebra, alpha: &Matrix) -> Result<HomAlgebra> {
    if !a.is_plain() {
        return Err(Error::precondition(
            "Yau twist needs a plain algebra (structure map = identity)",
            CheckReport::new(),
        ));
    }
    let rep = check_multiplicative(a, alpha)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::NotMultiplicative(f.tuple[0], f.tuple[1]));
    }
    Ok(HomAlgebra::new(alpha.mul(&a.mul)?, alpha.clone())?.with_shape(a.shape.clone()))
}

/// `(a (x) b)(a' (x) b') = aa' (x) bb'` with structure map `alpha_A (x) alpha_B`.
pub fn tensor_algebra(a: &HomAlgebra, b: &HomAlgebra) -> HomAlgebra {
    let (da, db) = (a.dim, b.dim);
    let (mua, mub) = (a.mul_op(), b.mul_op());
    let swap = LinOp::swap(db, da);
    let mul = matrix_of(&[da, db, da, db], da * db, |x| {
        x.apply(1, &swap)?.apply_each(&[(0, &mua), (2, &mub)])
    })
    .expect("shapes are consistent by construction");
    let mut shape = a.shape.clone();
    shape.extend_from_slice(&b.shape);
    HomAlgebra::new(mul, a.alpha.kron(&b.alpha))
        .expect("shapes are consistent by construction")
        .with_shape(shape)
}

pub fn check_algebra_morphism(f: &LinearMap, a: &HomAlgebra, b: &HomAlgebra) -> Result<CheckReport> {
    if f.source_dim != a.dim || f.target_dim != b.dim {
        return Err(Error::dims("morphism shape does not match the algebras"));
    }
    let fo = f.op();
    let (mua, mub) = (a.mul_op(), b.mul_op());
    let (ala, alb) = (a.alpha_op(), b.alpha_op());
    let mut rep = CheckReport::of(
        "morphism-multiplicativity",
        &[a.dim, a.dim],
        |x| x.apply(0, &mua)?.apply(0, &fo),
        |x| x.apply_each(&[(0, &fo), (1, &fo)])?.apply(0, &mub),
    )?;
    rep.scan(
        "morphism-alpha",
        &[a.dim],
        |x| x.apply(0, &fo)?.apply(0, &alb),
        |x| x.apply(0, &ala)?.apply(0, &fo),
    )?;
    Ok(rep)
}

/// `(ab)(cd) = alpha(a)(alpha^{-1}(bc) d)` for Hom-associative algebras with
/// bijective structure map.
pub fn check_lemma_four_elements(a: &HomAlgebra) -> Result<CheckReport> {
    Error::require("algebra must be Hom-associative", check_hom_algebra(a)?)?;
    let inv = a.alpha.inverse()?;
    let d = a.dim;
    let mu = a.mul_op();
    let al = a.alpha_op();
    let al_inv = LinOp::new(&inv, &[d], &[d])?;
    CheckReport::of(
        "four-elements",
        &[d, d, d, d],
        |x| x.apply(2, &mu)?.apply(0, &mu)?.apply(0, &mu),
        |x| {
            x.apply(1, &mu)?
                .apply(1, &al_inv)?
                .apply(1, &mu)?
                .apply(0, &al)?
                .apply(0, &mu)
        },
    )
}

/// True when every structure constant vanishes.
pub fn is_zero_algebra(a: &HomAlgebra) -> bool {
    a.mul.entries().iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    /// `k^n` with `e_i e_j = delta_ij e_i`.
    fn diag_algebra(n: usize) -> HomAlgebra {
        HomAlgebra::from_fn(n, Matrix::identity(n), |i, j| {
            if i == j {
                vec![(i, int(1))]
            } else {
                vec![]
            }
        })
        .unwrap()
    }

    /// The two-dimensional Hom-associative algebra family, written out directly.
    fn two_dim(a: Rational, l1: Rational, l2: Rational) -> HomAlgebra {
        let one = int(1);
        let c12 = vec![&l1 * &a, &l2 * &a];
        let c22 = vec![
            &l1 * &l1 * (&one - &l2 * int(2)) * &a / ((&one - &l2) * (&one - &l2)),
            int(2) * &l1 * &l2 * &a / (&one - &l2),
        ];
        let constants = vec![
            vec![vec![a.clone(), int(0)], c12.clone()],
            vec![c12, c22],
        ];
        let alpha = Matrix::from_rows(vec![vec![int(1), l1], vec![int(0), l2]]).unwrap();
        HomAlgebra::from_constants(&constants, alpha).unwrap()
    }

    #[test]
    fn two_dim_family_is_hom_associative_not_associative() {
        let d = two_dim(int(1), int(1), int(2));
        assert!(check_hom_algebra(&d).unwrap().passed);
        assert!(!check_associative(&d).unwrap().passed);
        let d0 = two_dim(int(1), int(1), int(0));
        assert!(check_associative(&d0).unwrap().passed);
    }

    #[test]
    fn identity_alpha_on_two_dim_mul_fails_with_witness() {
        let d = two_dim(int(1), int(1), int(2)).with_alpha(Matrix::identity(2)).unwrap();
        let rep = check_hom_algebra(&d).unwrap();
        assert!(!rep.passed);
        let f = rep.first_failure().unwrap();
        assert_eq!(f.equation, "hom-associativity");
        assert_eq!(f.tuple.len(), 3);
    }

    #[test]
    fn associative_with_identity_alpha_passes() {
        assert!(check_hom_algebra(&diag_algebra(3)).unwrap().passed);
        let zero = HomAlgebra::plain(Matrix::zeros(2, 4)).unwrap();
        assert!(check_associative(&zero).unwrap().passed);
        assert!(is_zero_algebra(&zero));
    }

    #[test]
    fn yau_twist_of_k2_by_swap() {
        let swap = Matrix::permutation(&[1, 0]);
        let t = yau_twist_algebra(&diag_algebra(2), &swap).unwrap();
        // e1 e1 = e2 after twisting
        assert_eq!(t.constant(0, 0, 1), &int(1));
        assert_eq!(t.constant(0, 0, 0), &int(0));
        assert!(check_hom_algebra(&t).unwrap().passed);
        assert_eq!(yau_twist_algebra(&diag_algebra(2), &Matrix::identity(2)).unwrap(), diag_algebra(2));
    }

    #[test]
    fn yau_twist_rejects_non_multiplicative() {
        let u = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert!(matches!(
            yau_twist_algebra(&diag_algebra(2), &u),
            Err(Error::NotMultiplicative(_, _))
        ));
    }

    #[test]
    fn tensor_products() {
        let k4 = tensor_algebra(&diag_algebra(2), &diag_algebra(2));
        assert_eq!(k4.dim(), 4);
        assert_eq!(k4, diag_algebra(4));
        assert_eq!(k4.shape(), &[2, 2]);
        let t = tensor_algebra(&two_dim(int(1), int(1), int(2)), &diag_algebra(2));
        assert!(check_hom_algebra(&t).unwrap().passed);
        assert_eq!(tensor_algebra(&diag_algebra(2), &diag_algebra(3)).dim(), 6);
    }

    #[test]
    fn morphisms() {
        let d = two_dim(int(2), int(3), int(-1));
        let id = LinearMap::new(Matrix::identity(2));
        assert!(check_algebra_morphism(&id, &d, &d).unwrap().passed);
        let alpha = LinearMap::new(d.alpha().clone());
        assert!(check_algebra_morphism(&alpha, &d, &d).unwrap().passed);
        let zero = LinearMap::new(Matrix::zeros(2, 2));
        assert!(check_algebra_morphism(&zero, &d, &d).unwrap().passed);
        let wrong = LinearMap::new(Matrix::zeros(3, 2));
        assert!(check_algebra_morphism(&wrong, &d, &d).is_err());
    }

    #[test]
    fn four_element_lemma() {
        assert!(check_lemma_four_elements(&two_dim(int(1), int(1), int(2))).unwrap().passed);
        assert!(check_lemma_four_elements(&two_dim(int(1), frac(2, 1), frac(1, 2))).unwrap().passed);
        assert!(check_lemma_four_elements(&diag_algebra(2)).unwrap().passed);
        let broken = two_dim(int(1), int(1), int(2)).with_alpha(Matrix::identity(2)).unwrap();
        assert!(matches!(
            check_lemma_four_elements(&broken),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn zero_dimensional_is_vacuous() {
        let z = HomAlgebra::plain(Matrix::zeros(0, 0)).unwrap();
        assert!(check_hom_algebra(&z).unwrap().passed);
        assert!(check_associative(&z).unwrap().passed);
    }
}
