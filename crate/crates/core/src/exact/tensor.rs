//! Tensor-index conventions and sparse vectors over tensor products of
//! finite-dimensional spaces.
//!
//! Basis tuples flatten row-major and left-associatively:
//! `(i, j) -> i * dim_b + j`, `(i, j, k) -> (i * dim_b + j) * dim_c + k`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A basis position in a tensor product of spaces with the given dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorIndex {
    pub dims: Vec<usize>,
    pub flat: usize,
}

impl TensorIndex {
    pub fn from_tuple(dims: &[usize], tuple: &[usize]) -> Result<Self> {
        Ok(TensorIndex {
            dims: dims.to_vec(),
            flat: flatten(dims, tuple)?,
        })
    }

    pub fn tuple(&self) -> Vec<usize> {
        unflatten(&self.dims, self.flat)
    }
}

pub fn flatten(dims: &[usize], tuple: &[usize]) -> Result<usize> {
    if dims.len() != tuple.len() {
        return Err(Error::dims("tuple length differs from factor count"));
    }
    let mut flat = 0;
    for (&d, &i) in dims.iter().zip(tuple) {
        if i >= d {
            return Err(Error::dims(format!("index {i} out of range for factor of dim {d}")));
        }
        flat = flat * d + i;
    }
    Ok(flat)
}

pub fn unflatten(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}

/// A linear map between tensor products, stored as sparse columns.
///
/// `in_dims` and `out_dims` record the factor structure so that the map can be
/// applied to a contiguous block of factors inside a larger tensor.
#[derive(Debug, Clone)]
pub struct LinOp {
    in_dims: Vec<usize>,
    out_dims: Vec<usize>,
    cols: Vec<Vec<(usize, Rational)>>,
}

impl LinOp {
    pub fn new(matrix: &Matrix, in_dims: &[usize], out_dims: &[usize]) -> Result<Self> {
        let ins: usize = in_dims.iter().product();
        let outs: usize = out_dims.iter().product();
        if matrix.rows() != outs || matrix.cols() != ins {
            return Err(Error::dims(format!(
                "matrix is {}x{}, expected {outs}x{ins} for {in_dims:?} -> {out_dims:?}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let cols = (0..ins)
            .map(|c| {
                (0..outs)
                    .filter(|&r| !matrix[(r, c)].is_zero())
                    .map(|r| (r, matrix[(r, c)].clone()))
                    .collect()
            })
            .collect();
        Ok(LinOp {
            in_dims: in_dims.to_vec(),
            out_dims: out_dims.to_vec(),
            cols,
        })
    }

    pub fn identity(dim: usize) -> Self {
        LinOp {
            in_dims: vec![dim],
            out_dims: vec![dim],
            cols: (0..dim).map(|c| vec![(c, Rational::from_integer(1.into()))]).collect(),
        }
    }

    /// The flip `M (x) N -> N (x) M`.
    pub fn swap(m: usize, n: usize) -> Self {
        let one = Rational::from_integer(1.into());
        LinOp {
            in_dims: vec![m, n],
            out_dims: vec![n, m],
            cols: (0..m * n)
                .map(|c| vec![((c % n) * m + c / n, one.clone())])
                .collect(),
        }
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn out_dims(&self) -> &[usize] {
        &self.out_dims
    }

    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.cols[c]
    }

    pub fn to_matrix(&self) -> Matrix {
        let outs: usize = self.out_dims.iter().product();
        let mut m = Matrix::zeros(outs, self.cols.len());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m[(*r, c)] = v.clone();
            }
        }
        m
    }

    /// Composite `self . (applied first)` as a single operator.
    pub fn after(&self, first: &LinOp) -> Result<LinOp> {
        if first.out_dims != self.in_dims {
            return Err(Error::dims("composition of incompatible operators"));
        }
        let cols = (0..first.cols.len())
            .map(|c| {
                Tensor::basis(&first.in_dims, c)
                    .apply(0, first)
                    .and_then(|t| t.apply(0, self))
                    .map(|t| t.coeffs.into_iter().collect())
            })
            .collect::<Result<_>>()?;
        Ok(LinOp {
            in_dims: first.in_dims.clone(),
            out_dims: self.out_dims.clone(),
            cols,
        })
    }
}

/// Sparse vector in a tensor product space, zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    dims: Vec<usize>,
    coeffs: BTreeMap<usize, Rational>,
}

impl Tensor {
    pub fn zero(dims: &[usize]) -> Self {
        Tensor {
            dims: dims.to_vec(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(dims: &[usize], flat: usize) -> Self {
        let mut t = Self::zero(dims);
        t.coeffs.insert(flat, Rational::from_integer(1.into()));
        t
    }

    pub fn from_dense(dims: &[usize], values: &[Rational]) -> Self {
        let mut t = Self::zero(dims);
        for (i, v) in values.iter().enumerate() {
            t.add_term(i, v.clone());
        }
        t
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len_flat(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, flat: usize) -> Rational {
        self.coeffs.get(&flat).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, flat: usize, v: Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(flat).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.coeffs.remove(&flat);
        }
    }

    pub fn add(&mut self, other: &Tensor) {
        debug_assert_eq!(self.dims, other.dims);
        for (k, v) in &other.coeffs {
            self.add_term(*k, v.clone());
        }
    }

    pub fn scaled(&self, s: &Rational) -> Tensor {
        let mut out = Tensor::zero(&self.dims);
        if !s.is_zero() {
            for (k, v) in &self.coeffs {
                out.coeffs.insert(*k, v * s);
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.len_flat()];
        for (k, v) in &self.coeffs {
            out[*k] = v.clone();
        }
        out
    }

    /// Tensor product of two vectors; factor lists concatenate.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let n = other.len_flat();
        let mut out = Tensor::zero(&dims);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                out.coeffs.insert(i * n + j, a * b);
            }
        }
        out
    }

    /// Applies `op` to the factors starting at position `pos`, leaving the
    /// others untouched.
    pub fn apply(&self, pos: usize, op: &LinOp) -> Result<Tensor> {
        let k = op.in_dims.len();
        if pos + k > self.dims.len() || self.dims[pos..pos + k] != op.in_dims[..] {
            return Err(Error::dims(format!(
                "operator on {:?} does not fit factors {:?} at position {pos}",
                op.in_dims, self.dims
            )));
        }
        let mid: usize = op.in_dims.iter().product();
        let out_mid: usize = op.out_dims.iter().product();
        let suf: usize = self.dims[pos + k..].iter().product();
        let mut dims = self.dims[..pos].to_vec();
        dims.extend_from_slice(&op.out_dims);
        dims.extend_from_slice(&self.dims[pos + k..]);
        let mut out = Tensor::zero(&dims);
        for (flat, v) in &self.coeffs {
            let p = flat / (mid * suf);
            let rem = flat % (mid * suf);
            let (m, s) = (rem / suf, rem % suf);
            for (r, w) in &op.cols[m] {
                out.add_term((p * out_mid + r) * suf + s, v * w);
            }
        }
        Ok(out)
    }

    /// Applies several operators at disjoint positions of the current tensor,
    /// rightmost first so earlier positions stay valid.
    pub fn apply_each(&self, ops: &[(usize, &LinOp)]) -> Result<Tensor> {
        let mut sorted: Vec<_> = ops.to_vec();
        sorted.sort_by(|a, b| b.0.cmp(&a.0));
        let mut t = self.clone();
        for (pos, op) in sorted {
            t = t.apply(pos, op)?;
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use proptest::prelude::*;

    #[test]
    fn flatten_convention() {
        assert_eq!(flatten(&[2, 3], &[1, 2]).unwrap(), 5);
        assert_eq!(flatten(&[2, 3, 4], &[1, 0, 3]).unwrap(), 15);
        assert!(flatten(&[2, 3], &[2, 0]).is_err());
        assert_eq!(unflatten(&[2, 3, 4], 15), vec![1, 0, 3]);
    }

    #[test]
    fn swap_moves_factors() {
        let t = Tensor::basis(&[2, 3], flatten(&[2, 3], &[1, 2]).unwrap());
        let s = t.apply(0, &LinOp::swap(2, 3)).unwrap();
        assert_eq!(s.dims(), &[3, 2]);
        assert_eq!(s, Tensor::basis(&[3, 2], flatten(&[3, 2], &[2, 1]).unwrap()));
    }

    #[test]
    fn apply_in_middle_matches_kron() {
        // id (x) M (x) id agrees with the Kronecker matrix
        let m = Matrix::from_ints(&[&[1, 2], &[0, 3]]);
        let op = LinOp::new(&m, &[2], &[2]).unwrap();
        let big = Matrix::identity(3).kron(&m).kron(&Matrix::identity(2));
        for flat in 0..12 {
            let t = Tensor::basis(&[3, 2, 2], flat).apply(1, &op).unwrap();
            let col: Vec<_> = (0..12).map(|r| big[(r, flat)].clone()).collect();
            assert_eq!(t.to_dense(), col);
        }
    }

    #[test]
    fn apply_changes_factor_count() {
        // a 1x4 "multiplication" collapsing two factors
        let mu = Matrix::from_ints(&[&[1, 0, 0, 1]]);
        let op = LinOp::new(&mu, &[2, 2], &[1]).unwrap();
        let t = Tensor::basis(&[3, 2, 2], flatten(&[3, 2, 2], &[2, 1, 1]).unwrap());
        let r = t.apply(1, &op).unwrap();
        assert_eq!(r.dims(), &[3, 1]);
        assert_eq!(r.coeff(2), int(1));
        assert!(t.apply(0, &op).is_err());
    }

    proptest! {
        #[test]
        fn flatten_roundtrip(dims in prop::collection::vec(1usize..8, 1..5), seed in any::<u64>()) {
            let total: usize = dims.iter().product();
            let flat = (seed as usize) % total;
            let tuple = unflatten(&dims, flat);
            prop_assert_eq!(flatten(&dims, &tuple).unwrap(), flat);
        }

        #[test]
        fn kron_respects_composition(
            a in prop::collection::vec(-3i64..4, 4),
            b in prop::collection::vec(-3i64..4, 6),
            c in prop::collection::vec(-3i64..4, 4),
            d in prop::collection::vec(-3i64..4, 6),
        ) {
            let mk = |v: &[i64], r: usize, cols: usize| {
                Matrix::from_fn(r, cols, |i, j| int(v[i * cols + j]))
            };
            let (a, b, c, d) = (mk(&a, 2, 2), mk(&b, 2, 3), mk(&c, 2, 2), mk(&d, 3, 2));
            let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
            let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_is_two_sided(v in prop::collection::vec(-4i64..5, 9)) {
            let m = Matrix::from_fn(3, 3, |i, j| int(v[i * 3 + j]));
            if let Ok(inv) = m.inverse() {
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&m).unwrap().is_identity());
            }
        }
    }
}
