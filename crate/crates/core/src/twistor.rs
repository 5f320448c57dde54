//! Operators on `D (x) D` and `D (x) D (x) D`: (Hom-/alpha-)pseudotwistors and
//! twistors, and the deformations they induce.

use crate::algebra::{check_associative, check_hom_algebra, check_multiplicative, yau_twist_algebra, HomAlgebra};
use crate::error::{Error, Result};
use crate::exact::{LinOp, Matrix};
use crate::report::CheckReport;

/// Linear endomorphism of `D (x) D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operator2 {
    dim: usize,
    matrix: Matrix,
}

/// Linear endomorphism of `D (x) D (x) D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operator3 {
    dim: usize,
    matrix: Matrix,
}

macro_rules! operator_common {
    ($ty:ident, $power:expr) => {
        impl $ty {
            pub fn new(dim: usize, matrix: Matrix) -> Result<Self> {
                let n = dim.pow($power);
                if matrix.rows() != n || matrix.cols() != n {
                    return Err(Error::dims(format!(
                        "operator on a {dim}-dim space must be {n}x{n}, got {}x{}",
                        matrix.rows(),
                        matrix.cols()
                    )));
                }
                Ok($ty { dim, matrix })
            }

            pub fn identity(dim: usize) -> Self {
                $ty {
                    dim,
                    matrix: Matrix::identity(dim.pow($power)),
                }
            }

            pub fn dim(&self) -> usize {
                self.dim
            }

            pub fn matrix(&self) -> &Matrix {
                &self.matrix
            }

            pub fn op(&self) -> LinOp {
                let dims = [self.dim; $power];
                LinOp::new(&self.matrix, &dims, &dims).expect("shape checked")
            }

            pub fn compose(&self, first: &$ty) -> Result<$ty> {
                $ty::new(self.dim, self.matrix.mul(&first.matrix)?)
            }
        }
    };
}

operator_common!(Operator2, 2);
operator_common!(Operator3, 3);

impl Operator2 {
    /// `T_12 = T (x) id`.
    pub fn lift_12(&self) -> Operator3 {
        Operator3::new(self.dim, self.matrix.kron(&Matrix::identity(self.dim))).expect("kron shape")
    }

    /// `T_23 = id (x) T`.
    pub fn lift_23(&self) -> Operator3 {
        Operator3::new(self.dim, Matrix::identity(self.dim).kron(&self.matrix)).expect("kron shape")
    }

    /// `T_13(d (x) d' (x) d'') = d^T (x) d' (x) d''_T`.
    pub fn lift_13(&self) -> Operator3 {
        lift_13(self)
    }
}

pub fn lift_13(t: &Operator2) -> Operator3 {
    let d = t.dim;
    let tau = Matrix::identity(d).kron(&LinOp::swap(d, d).to_matrix());
    let m = tau
        .mul(&t.matrix.kron(&Matrix::identity(d)))
        .and_then(|m| m.mul(&tau))
        .expect("square shapes agree");
    Operator3::new(d, m).expect("kron shape")
}

fn check_op_dims(d: &HomAlgebra, ops2: &[&Operator2], ops3: &[&Operator3]) -> Result<()> {
    if ops2.iter().any(|t| t.dim != d.dim()) || ops3.iter().any(|t| t.dim != d.dim()) {
        return Err(Error::dims("operator dimension differs from algebra dimension"));
    }
    Ok(())
}

fn require_associative(d: &HomAlgebra) -> Result<()> {
    Error::require("algebra must be associative", check_associative(d)?)
}

pub fn check_pseudotwistor(d: &HomAlgebra, t: &Operator2, c1: &Operator3, c2: &Operator3) -> Result<CheckReport> {
    check_op_dims(d, &[t], &[c1, c2])?;
    require_associative(d)?;
    let n = d.dim();
    let (mu, to, c1o, c2o) = (d.mul_op(), t.op(), c1.op(), c2.op());
    let mut rep = CheckReport::of(
        "pseudotwistor-right",
        &[n, n, n],
        |x| x.apply(1, &mu)?.apply(0, &to),
        |x| x.apply(0, &to)?.apply(0, &c1o)?.apply(1, &mu),
    )?;
    rep.scan(
        "pseudotwistor-left",
        &[n, n, n],
        |x| x.apply(0, &mu)?.apply(0, &to),
        |x| x.apply(1, &to)?.apply(0, &c2o)?.apply(0, &mu),
    )?;
    rep.scan(
        "pseudotwistor-interchange",
        &[n, n, n],
        |x| x.apply(1, &to)?.apply(0, &to)?.apply(0, &c1o),
        |x| x.apply(0, &to)?.apply(1, &to)?.apply(0, &c2o),
    )?;
    Ok(rep)
}

pub fn check_twistor(d: &HomAlgebra, t: &Operator2) -> Result<CheckReport> {
    check_op_dims(d, &[t], &[])?;
    require_associative(d)?;
    let n = d.dim();
    let (mu, to, t13) = (d.mul_op(), t.op(), t.lift_13().op());
    let mut rep = CheckReport::of(
        "twistor-right",
        &[n, n, n],
        |x| x.apply(1, &mu)?.apply(0, &to),
        |x| x.apply(0, &to)?.apply(0, &t13)?.apply(1, &mu),
    )?;
    rep.scan(
        "twistor-left",
        &[n, n, n],
        |x| x.apply(0, &mu)?.apply(0, &to),
        |x| x.apply(1, &to)?.apply(0, &t13)?.apply(0, &mu),
    )?;
    rep.scan(
        "twistor-braid",
        &[n, n, n],
        |x| x.apply(1, &to)?.apply(0, &to),
        |x| x.apply(0, &to)?.apply(1, &to),
    )?;
    Ok(rep)
}

fn commuting_scan(rep: &mut CheckReport, n: usize, al: &LinOp, to: &LinOp) -> Result<()> {
    rep.scan(
        "commutes-with-alpha",
        &[n, n],
        |x| x.apply(0, to)?.apply_each(&[(0, al), (1, al)]),
        |x| x.apply_each(&[(0, al), (1, al)])?.apply(0, to),
    )
}

pub fn check_hom_pseudotwistor(d: &HomAlgebra, t: &Operator2, c1: &Operator3, c2: &Operator3) -> Result<CheckReport> {
    check_op_dims(d, &[t], &[c1, c2])?;
    Error::require("algebra must be Hom-associative", check_hom_algebra(d)?)?;
    let n = d.dim();
    let (mu, al, to, c1o, c2o) = (d.mul_op(), d.alpha_op(), t.op(), c1.op(), c2.op());
    let mut rep = CheckReport::new();
    commuting_scan(&mut rep, n, &al, &to)?;
    rep.scan(
        "hom-pseudotwistor-right",
        &[n, n, n],
        |x| x.apply(1, &mu)?.apply(0, &al)?.apply(0, &to),
        |x| x.apply(0, &to)?.apply(0, &c1o)?.apply(1, &mu)?.apply(0, &al),
    )?;
    rep.scan(
        "hom-pseudotwistor-left",
        &[n, n, n],
        |x| x.apply(0, &mu)?.apply(1, &al)?.apply(0, &to),
        |x| x.apply(1, &to)?.apply(0, &c2o)?.apply(2, &al)?.apply(0, &mu),
    )?;
    rep.scan(
        "hom-pseudotwistor-interchange",
        &[n, n, n],
        |x| x.apply(1, &to)?.apply(0, &to)?.apply(0, &c1o),
        |x| x.apply(0, &to)?.apply(1, &to)?.apply(0, &c2o),
    )?;
    Ok(rep)
}

pub fn check_hom_twistor(d: &HomAlgebra, t: &Operator2) -> Result<CheckReport> {
    check_op_dims(d, &[t], &[])?;
    Error::require("algebra must be Hom-associative", check_hom_algebra(d)?)?;
    let n = d.dim();
    let (mu, al, to, t13) = (d.mul_op(), d.alpha_op(), t.op(), t.lift_13().op());
    let mut rep = CheckReport::new();
    commuting_scan(&mut rep, n, &al, &to)?;
    rep.scan(
        "hom-twistor-right",
        &[n, n, n],
        |x| x.apply(1, &mu)?.apply(0, &al)?.apply(0, &to),
        |x| x.apply(0, &to)?.apply(0, &t13)?.apply(1, &mu)?.apply(0, &al),
    )?;
    rep.scan(
        "hom-twistor-left",
        &[n, n, n],
        |x| x.apply(0, &mu)?.apply(1, &al)?.apply(0, &to),
        |x| x.apply(1, &to)?.apply(0, &t13)?.apply(2, &al)?.apply(0, &mu),
    )?;
    rep.scan(
        "hom-twistor-braid",
        &[n, n, n],
        |x| x.apply(1, &to)?.apply(0, &to),
        |x| x.apply(0, &to)?.apply(1, &to),
    )?;
    Ok(rep)
}

pub fn check_alpha_pseudotwistor(
    d: &HomAlgebra,
    alpha: &Matrix,
    t: &Operator2,
    c1: &Operator3,
    c2: &Operator3,
) -> Result<CheckReport> {
    check_op_dims(d, &[t], &[c1, c2])?;
    require_associative(d)?;
    let mult = check_multiplicative(d, alpha)?;
    if let Some(f) = mult.first_failure() {
        return Err(Error::NotMultiplicative(f.tuple[0], f.tuple[1]));
    }
    let n = d.dim();
    let al = LinOp::new(alpha, &[n], &[n])?;
    let (mu, to, c1o, c2o) = (d.mul_op(), t.op(), c1.op(), c2.op());
    let mut rep = CheckReport::new();
    commuting_scan(&mut rep, n, &al, &to)?;
    rep.scan(
        "alpha-pseudotwistor-right",
        &[n, n, n],
        |x| x.apply(1, &mu)?.apply(0, &to),
        |x| x.apply(0, &to)?.apply(0, &c1o)?.apply(1, &mu),
    )?;
    rep.scan(
        "alpha-pseudotwistor-left",
        &[n, n, n],
        |x| x.apply(0, &mu)?.apply(0, &to),
        |x| x.apply(1, &to)?.apply(0, &c2o)?.apply(0, &mu),
    )?;
    rep.scan(
        "alpha-pseudotwistor-interchange",
        &[n, n, n],
        |x| x.apply_each(&[(0, &al), (1, &to)])?.apply(0, &to)?.apply(0, &c1o),
        |x| x.apply_each(&[(0, &to), (2, &al)])?.apply(1, &to)?.apply(0, &c2o),
    )?;
    Ok(rep)
}

/// Which axiom set an operator was asserted or shown to satisfy before deforming.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    Unchecked,
    Pseudotwistor { c1: Operator3, c2: Operator3 },
    Twistor,
    HomPseudotwistor { c1: Operator3, c2: Operator3 },
    HomTwistor,
    AlphaPseudotwistor { alpha: Matrix, c1: Operator3, c2: Operator3 },
}

/// A deformed algebra together with how its operator was vetted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deformation {
    pub algebra: HomAlgebra,
    pub claim: Claim,
    pub verified: bool,
}

/// `D^T = (D, mu . T, alpha)`.
pub fn deform(d: &HomAlgebra, t: &Operator2) -> Result<HomAlgebra> {
    check_op_dims(d, &[t], &[])?;
    Ok(HomAlgebra::new(d.mul_matrix().mul(&t.matrix)?, d.alpha().clone())?.with_shape(d.shape().to_vec()))
}

/// `A^T_alpha = (A, mu . T, alpha)` for an associative `A`.
pub fn deform_with_alpha(d: &HomAlgebra, alpha: &Matrix, t: &Operator2) -> Result<HomAlgebra> {
    check_op_dims(d, &[t], &[])?;
    Ok(HomAlgebra::new(d.mul_matrix().mul(&t.matrix)?, alpha.clone())?.with_shape(d.shape().to_vec()))
}

/// Deforms and records the claim; when `verify` is set the claimed checker is
/// run and a failing report becomes a precondition error.
pub fn deform_claimed(d: &HomAlgebra, t: &Operator2, claim: Claim, verify: bool) -> Result<Deformation> {
    let report = if verify {
        Some(match &claim {
            Claim::Unchecked => CheckReport::new(),
            Claim::Pseudotwistor { c1, c2 } => check_pseudotwistor(d, t, c1, c2)?,
            Claim::Twistor => check_twistor(d, t)?,
            Claim::HomPseudotwistor { c1, c2 } => check_hom_pseudotwistor(d, t, c1, c2)?,
            Claim::HomTwistor => check_hom_twistor(d, t)?,
            Claim::AlphaPseudotwistor { alpha, c1, c2 } => check_alpha_pseudotwistor(d, alpha, t, c1, c2)?,
        })
    } else {
        None
    };
    if let Some(rep) = report {
        Error::require("operator must satisfy the claimed axioms", rep)?;
    }
    let algebra = match &claim {
        Claim::AlphaPseudotwistor { alpha, .. } => deform_with_alpha(d, alpha, t)?,
        _ => deform(d, t)?,
    };
    Ok(Deformation {
        algebra,
        verified: verify && claim != Claim::Unchecked,
        claim,
    })
}

/// `(alpha (x) alpha, id (x) id (x) alpha, alpha (x) id (x) id)`.
pub fn yau_operator(alpha: &Matrix) -> Result<(Operator2, Operator3, Operator3)> {
    if !alpha.is_square() {
        return Err(Error::dims("structure map must be square"));
    }
    let n = alpha.rows();
    let id = Matrix::identity(n);
    Ok((
        Operator2::new(n, alpha.kron(alpha))?,
        Operator3::new(n, id.kron(&id).kron(alpha))?,
        Operator3::new(n, alpha.kron(&id).kron(&id))?,
    ))
}

/// Checks that `T` is a Hom-pseudotwistor for `D_alpha` and that `(D_alpha)^T`
/// and `(D^T)_alpha` coincide.
pub fn check_yau_compat(
    d: &HomAlgebra,
    alpha: &Matrix,
    t: &Operator2,
    c1: &Operator3,
    c2: &Operator3,
) -> Result<CheckReport> {
    Error::require("operator must be a pseudotwistor", check_pseudotwistor(d, t, c1, c2)?)?;
    let n = d.dim();
    let al = LinOp::new(alpha, &[n], &[n])?;
    let mut commuting = CheckReport::new();
    commuting_scan(&mut commuting, n, &al, &t.op())?;
    Error::require("alpha (x) alpha must commute with the operator", commuting)?;
    let d_alpha = yau_twist_algebra(d, alpha)?;
    let d_t = deform(d, t)?;
    let mult = check_multiplicative(&d_t, alpha)?;
    Error::require("alpha must be multiplicative for the deformed algebra", mult)?;
    let left = deform(&d_alpha, t)?;
    let right = yau_twist_algebra(&d_t, alpha)?;
    let mut rep = check_hom_pseudotwistor(&d_alpha, t, c1, c2)?;
    let (lm, rm) = (left.mul_op(), right.mul_op());
    rep.scan("twist-deform-coincide", &[n, n], |x| x.apply(0, &lm), |x| x.apply(0, &rm))?;
    rep.scan(
        "twist-deform-alpha",
        &[n],
        |x| x.apply(0, &left.alpha_op()),
        |x| x.apply(0, &right.alpha_op()),
    )?;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational, Tensor};

    fn k2() -> HomAlgebra {
        HomAlgebra::from_fn(2, Matrix::identity(2), |i, j| if i == j { vec![(i, int(1))] } else { vec![] })
            .unwrap()
    }

    fn swap2() -> Operator2 {
        Operator2::new(2, LinOp::swap(2, 2).to_matrix()).unwrap()
    }

    #[test]
    fn lift_13_cases() {
        assert_eq!(lift_13(&Operator2::identity(3)), Operator3::identity(3));
        let s = lift_13(&swap2());
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let src = i * 4 + j * 2 + k;
                    let dst = k * 4 + j * 2 + i;
                    assert_eq!(s.matrix()[(dst, src)], int(1));
                }
            }
        }
        let c = Operator2::new(2, Matrix::scalar(4, int(5))).unwrap();
        assert_eq!(lift_13(&c).matrix(), &Matrix::scalar(8, int(5)));
    }

    #[test]
    fn lift_13_agrees_with_sweedler_formula() {
        // T(e_i (x) e_j) = sum t[(r,s),(i,j)] e_r (x) e_s, T_13 moves the legs to 1 and 3
        let t = Operator2::new(2, Matrix::from_fn(4, 4, |r, c| int((r * 4 + c) as i64 % 5 - 2))).unwrap();
        let l = lift_13(&t);
        for src in 0..8 {
            let (i, j, k) = (src / 4, (src / 2) % 2, src % 2);
            for dst in 0..8 {
                let (r, m, s) = (dst / 4, (dst / 2) % 2, dst % 2);
                let expect: Rational = if m == j { t.matrix()[(r * 2 + s, i * 2 + k)].clone() } else { int(0) };
                assert_eq!(l.matrix()[(dst, src)], expect);
            }
        }
    }

    #[test]
    fn identity_operators_are_twistors() {
        let id2 = Operator2::identity(2);
        let id3 = Operator3::identity(2);
        assert!(check_pseudotwistor(&k2(), &id2, &id3, &id3).unwrap().passed);
        assert!(check_twistor(&k2(), &id2).unwrap().passed);
        assert!(check_hom_pseudotwistor(&k2(), &id2, &id3, &id3).unwrap().passed);
        assert!(check_hom_twistor(&k2(), &id2).unwrap().passed);
        assert_eq!(deform(&k2(), &id2).unwrap(), k2());
    }

    #[test]
    fn swap_with_identity_companions_fails() {
        let id3 = Operator3::identity(2);
        assert!(!check_pseudotwistor(&k2(), &swap2(), &id3, &id3).unwrap().passed);
    }

    #[test]
    fn yau_operator_reproduces_yau_twist() {
        let swap = Matrix::permutation(&[1, 0]);
        let (t, c1, c2) = yau_operator(&swap).unwrap();
        assert!(check_alpha_pseudotwistor(&k2(), &swap, &t, &c1, &c2).unwrap().passed);
        let deformed = deform_with_alpha(&k2(), &swap, &t).unwrap();
        assert_eq!(deformed, yau_twist_algebra(&k2(), &swap).unwrap());
        assert_eq!(deformed.constant(0, 0, 1), &int(1));
        assert!(check_hom_algebra(&deformed).unwrap().passed);
        let (t, c1, c2) = yau_operator(&Matrix::identity(2)).unwrap();
        assert_eq!((t, c1.clone(), c2), (Operator2::identity(2), c1, Operator3::identity(2)));
        let (t, c1, _) = yau_operator(&Matrix::diag(&[int(1), int(2), int(3)])).unwrap();
        assert_eq!((t.matrix().rows(), c1.matrix().rows()), (9, 27));
    }

    #[test]
    fn alpha_pseudotwistor_identity_t_fails_interchange() {
        let swap = Matrix::permutation(&[1, 0]);
        let id3 = Operator3::identity(2);
        let rep = check_alpha_pseudotwistor(&k2(), &swap, &Operator2::identity(2), &id3, &id3).unwrap();
        assert!(!rep.passed);
        assert!(rep.failures.iter().any(|f| f.equation == "alpha-pseudotwistor-interchange"));
    }

    #[test]
    fn alpha_pseudotwistor_at_identity_matches_pseudotwistor() {
        let s = swap2();
        let l = s.lift_13();
        let a = check_alpha_pseudotwistor(&k2(), &Matrix::identity(2), &s, &l, &l).unwrap();
        let b = check_pseudotwistor(&k2(), &s, &l, &l).unwrap();
        assert_eq!(a.passed, b.passed);
    }

    #[test]
    fn non_multiplicative_alpha_rejected() {
        let u = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        let (t, c1, c2) = yau_operator(&u).unwrap();
        assert!(matches!(
            check_alpha_pseudotwistor(&k2(), &u, &t, &c1, &c2),
            Err(Error::NotMultiplicative(_, _))
        ));
    }

    #[test]
    fn claimed_deformation_records_provenance() {
        let d = deform_claimed(&k2(), &Operator2::identity(2), Claim::Twistor, true).unwrap();
        assert!(d.verified);
        let id3 = Operator3::identity(2);
        let err = deform_claimed(&k2(), &swap2(), Claim::Pseudotwistor { c1: id3.clone(), c2: id3 }, true);
        assert!(matches!(err, Err(Error::Precondition { .. })));
        let d = deform_claimed(&k2(), &swap2(), Claim::Unchecked, false).unwrap();
        assert!(!d.verified);
    }

    #[test]
    fn yau_compat_with_identity_alpha() {
        let id3 = Operator3::identity(2);
        let rep = check_yau_compat(&k2(), &Matrix::identity(2), &Operator2::identity(2), &id3, &id3).unwrap();
        assert!(rep.passed);
        // the flip is not a twistor, so the compatibility check refuses it
        let s = swap2();
        let l = s.lift_13();
        assert!(!check_twistor(&k2(), &s).unwrap().passed);
        assert!(matches!(
            check_yau_compat(&k2(), &Matrix::permutation(&[1, 0]), &s, &l, &l),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn operator_application_matches_matrix() {
        let t = swap2();
        let x = Tensor::basis(&[2, 2], 1);
        assert_eq!(x.apply(0, &t.op()).unwrap(), Tensor::basis(&[2, 2], 2));
    }
}
