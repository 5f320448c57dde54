//! Hom-coassociative coalgebras and Hom-bialgebras.

use crate::algebra::{check_hom_algebra, check_multiplicative, HomAlgebra};
use crate::error::{Error, Result};
use crate::exact::{LinOp, Matrix, Rational};
use crate::report::CheckReport;

/// `(C, Delta, alpha)`; `Delta` is stored as a `dim^2 x dim` matrix whose
/// column `i` holds `Delta(e_i)` flattened as `j * dim + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCoalgebra {
    dim: usize,
    comul: Matrix,
    alpha: Matrix,
}

impl HomCoalgebra {
    pub fn new(comul: Matrix, alpha: Matrix) -> Result<Self> {
        let dim = alpha.rows();
        if !alpha.is_square() {
            return Err(Error::dims("structure map must be square"));
        }
        if comul.rows() != dim * dim || comul.cols() != dim {
            return Err(Error::dims(format!(
                "comultiplication of a {dim}-dim coalgebra must be {}x{dim}, got {}x{}",
                dim * dim,
                comul.rows(),
                comul.cols()
            )));
        }
        Ok(HomCoalgebra { dim, comul, alpha })
    }

    pub fn plain(comul: Matrix) -> Result<Self> {
        let dim = comul.cols();
        Self::new(comul, Matrix::identity(dim))
    }

    /// Builds from a rule returning the `(j, k, coefficient)` terms of `Delta(e_i)`.
    pub fn from_fn(
        dim: usize,
        alpha: Matrix,
        mut coproduct: impl FnMut(usize) -> Vec<(usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut comul = Matrix::zeros(dim * dim, dim);
        for i in 0..dim {
            for (j, k, v) in coproduct(i) {
                comul[(j * dim + k, i)] += v;
            }
        }
        Self::new(comul, alpha)
    }

    /// The dual coalgebra of a finite-dimensional algebra: structure constants
    /// transposed, structure map transposed.
    pub fn dual_of(a: &HomAlgebra) -> Self {
        Self::new(a.mul_matrix().transpose(), a.alpha().transpose()).expect("dual shapes agree")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comul_matrix(&self) -> &Matrix {
        &self.comul
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Coefficient of `e_j (x) e_k` in `Delta(e_i)`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.comul[(j * self.dim + k, i)]
    }

    pub fn is_plain(&self) -> bool {
        self.alpha.is_identity()
    }

    pub fn comul_op(&self) -> LinOp {
        LinOp::new(&self.comul, &[self.dim], &[self.dim, self.dim]).expect("shape checked")
    }

    pub fn alpha_op(&self) -> LinOp {
        LinOp::new(&self.alpha, &[self.dim], &[self.dim]).expect("shape checked")
    }
}

fn check_comultiplicative(c: &HomCoalgebra, alpha: &Matrix) -> Result<CheckReport> {
    if alpha.rows() != c.dim || alpha.cols() != c.dim {
        return Err(Error::dims("endomorphism shape differs from coalgebra dimension"));
    }
    let d = c.dim;
    let delta = c.comul_op();
    let al = LinOp::new(alpha, &[d], &[d])?;
    CheckReport::of(
        "comultiplicativity",
        &[d],
        |x| x.apply(0, &delta)?.apply_each(&[(0, &al), (1, &al)]),
        |x| x.apply(0, &al)?.apply(0, &delta),
    )
}

pub fn check_hom_coalgebra(c: &HomCoalgebra) -> Result<CheckReport> {
    let d = c.dim;
    let delta = c.comul_op();
    let al = c.alpha_op();
    let mut rep = check_comultiplicative(c, &c.alpha)?;
    rep.scan(
        "hom-coassociativity",
        &[d],
        |x| x.apply(0, &delta)?.apply_each(&[(0, &delta), (1, &al)]),
        |x| x.apply(0, &delta)?.apply_each(&[(0, &al), (1, &delta)]),
    )?;
    Ok(rep)
}

fn check_coassociative(c: &HomCoalgebra) -> Result<CheckReport> {
    let delta = c.comul_op();
    CheckReport::of(
        "coassociativity",
        &[c.dim],
        |x| x.apply(0, &delta)?.apply(0, &delta),
        |x| x.apply(0, &delta)?.apply(1, &delta),
    )
}

/// `(C, Delta . alpha, alpha)` for a coassociative coalgebra and a verified
/// coalgebra endomorphism `alpha`.
pub fn yau_twist_coalgebra(c: &HomCoalgebra, alpha: &Matrix) -> Result<HomCoalgebra> {
    if !c.is_plain() {
        return Err(Error::precondition(
            "Yau twist needs a plain coalgebra (structure map = identity)",
            CheckReport::new(),
        ));
    }
    Error::require("coalgebra must be coassociative", check_coassociative(c)?)?;
    let rep = check_comultiplicative(c, alpha)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::NotComultiplicative(f.tuple[0]));
    }
    HomCoalgebra::new(c.comul.mul(alpha)?, alpha.clone())
}

/// Algebra and coalgebra on the same space with a shared structure map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomBialgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
}

impl HomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::dims("algebra and coalgebra dimensions differ"));
        }
        if algebra.alpha() != coalgebra.alpha() {
            return Err(Error::dims("algebra and coalgebra structure maps differ"));
        }
        Ok(HomBialgebra { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn alpha(&self) -> &Matrix {
        self.algebra.alpha()
    }
}

pub fn check_hom_bialgebra(h: &HomBialgebra) -> Result<CheckReport> {
    let d = h.dim();
    let mu = h.algebra.mul_op();
    let delta = h.coalgebra.comul_op();
    let swap = LinOp::swap(d, d);
    let mut rep = check_hom_algebra(&h.algebra)?;
    rep.merge(check_hom_coalgebra(&h.coalgebra)?);
    rep.scan(
        "comultiplication-is-multiplicative",
        &[d, d],
        |x| x.apply(0, &mu)?.apply(0, &delta),
        |x| {
            x.apply_each(&[(0, &delta), (1, &delta)])?
                .apply(1, &swap)?
                .apply_each(&[(0, &mu), (2, &mu)])
        },
    )?;
    Ok(rep)
}

/// `(H, alpha . mu, Delta . alpha, alpha)` for a classical bialgebra.
pub fn yau_twist_bialgebra(h: &HomBialgebra, alpha: &Matrix) -> Result<HomBialgebra> {
    if !h.algebra.is_plain() {
        return Err(Error::precondition(
            "Yau twist needs a classical bialgebra (structure map = identity)",
            CheckReport::new(),
        ));
    }
    Error::require("input must be a bialgebra", check_hom_bialgebra(h)?)?;
    let rep = check_multiplicative(&h.algebra, alpha)?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::NotMultiplicative(f.tuple[0], f.tuple[1]));
    }
    let algebra = crate::algebra::yau_twist_algebra(&h.algebra, alpha)?;
    let coalgebra = yau_twist_coalgebra(&h.coalgebra, alpha)?;
    HomBialgebra::new(algebra, coalgebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{yau_twist_algebra, HomAlgebra};
    use crate::exact::int;
    use proptest::prelude::*;

    fn grouplike(n: usize, alpha: Matrix) -> HomCoalgebra {
        HomCoalgebra::from_fn(n, alpha, |i| vec![(i, i, int(1))]).unwrap()
    }

    /// Group algebra of the cyclic group of order `n` with group-like basis.
    fn cyclic(n: usize) -> HomBialgebra {
        let a = HomAlgebra::from_fn(n, Matrix::identity(n), |i, j| vec![((i + j) % n, int(1))]).unwrap();
        HomBialgebra::new(a, grouplike(n, Matrix::identity(n))).unwrap()
    }

    #[test]
    fn grouplike_coalgebras() {
        // untwisted group-like comultiplication with a nontrivial permutation is not Hom-coassociative,
        // the twisted one Delta(e_i) = e_s(i) (x) e_s(i) is
        let perm = Matrix::permutation(&[1, 2, 0]);
        assert!(!check_hom_coalgebra(&grouplike(3, perm.clone())).unwrap().passed);
        let twisted = HomCoalgebra::from_fn(3, perm, |i| vec![((i + 1) % 3, (i + 1) % 3, int(1))]).unwrap();
        assert!(check_hom_coalgebra(&twisted).unwrap().passed);
        assert!(check_hom_coalgebra(&grouplike(2, Matrix::identity(2))).unwrap().passed);
        let bad = HomCoalgebra::from_fn(2, Matrix::identity(2), |i| {
            if i == 0 {
                vec![(0, 1, int(1))]
            } else {
                vec![]
            }
        })
        .unwrap();
        assert!(!check_hom_coalgebra(&bad).unwrap().passed);
    }

    #[test]
    fn coalgebra_twists() {
        let c = grouplike(2, Matrix::identity(2));
        let t = yau_twist_coalgebra(&c, &Matrix::permutation(&[1, 0])).unwrap();
        assert_eq!(t.constant(0, 1, 1), &int(1));
        assert_eq!(t.constant(0, 0, 0), &int(0));
        assert!(check_hom_coalgebra(&t).unwrap().passed);
        assert_eq!(yau_twist_coalgebra(&c, &Matrix::identity(2)).unwrap(), c);
        assert!(matches!(
            yau_twist_coalgebra(&c, &Matrix::from_ints(&[&[1, 1], &[0, 1]])),
            Err(Error::NotComultiplicative(_))
        ));
    }

    #[test]
    fn cyclic_group_bialgebras() {
        let h = cyclic(2);
        assert!(check_hom_bialgebra(&h).unwrap().passed);
        assert_eq!(yau_twist_bialgebra(&h, &Matrix::identity(2)).unwrap(), h);
        // Delta(g) = g (x) e is still multiplicative: Delta(h) = h (x) eps(h) e
        let right_unit = HomBialgebra::new(
            h.algebra().clone(),
            HomCoalgebra::from_fn(2, Matrix::identity(2), |i| vec![(i, 0, int(1))]).unwrap(),
        )
        .unwrap();
        assert!(check_hom_bialgebra(&right_unit).unwrap().passed);
        let bad = HomBialgebra::new(
            h.algebra().clone(),
            HomCoalgebra::from_fn(2, Matrix::identity(2), |i| vec![(i, 1, int(1))]).unwrap(),
        )
        .unwrap();
        assert!(!check_hom_bialgebra(&bad).unwrap().passed);
        // projection onto g is not multiplicative (g g = e maps to 0 but g g stays e)
        let proj = Matrix::diag(&[int(0), int(1)]);
        assert!(matches!(
            yau_twist_bialgebra(&h, &proj),
            Err(Error::NotMultiplicative(_, _)) | Err(Error::NotComultiplicative(_))
        ));
        // inversion g -> g^{-1} on C3 is a bialgebra automorphism
        let inv = Matrix::permutation(&[0, 2, 1]);
        let t = yau_twist_bialgebra(&cyclic(3), &inv).unwrap();
        assert!(check_hom_bialgebra(&t).unwrap().passed);
    }

    #[test]
    fn mismatched_structure_maps_rejected() {
        let h = cyclic(2);
        let c = grouplike(2, Matrix::permutation(&[1, 0]));
        assert!(HomBialgebra::new(h.algebra().clone(), c).is_err());
    }

    proptest! {
        #[test]
        fn duals_of_twisted_group_algebras_pass(n in 1usize..=3, shift in 0usize..3, flip in any::<bool>()) {
            // automorphisms of cyclic groups: g -> g^u for unit u, acting on basis indices
            let units: Vec<usize> = (1..=n).filter(|u| (1..=n).any(|v| (u * v) % n == 1 % n)).collect();
            let u = units[shift % units.len()];
            let image: Vec<usize> = (0..n).map(|i| (i * u) % n).collect();
            let alpha = Matrix::permutation(&image);
            let base = cyclic(n);
            let twisted = yau_twist_algebra(base.algebra(), &alpha).unwrap();
            let a = if flip { twisted } else { base.algebra().clone() };
            prop_assert!(check_hom_algebra(&a).unwrap().passed);
            prop_assert!(check_hom_coalgebra(&HomCoalgebra::dual_of(&a)).unwrap().passed);
        }
    }
}
