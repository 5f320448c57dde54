//! Twisting maps `R: B (x) A -> A (x) B` and the twisted tensor products they
//! define, in the classical, Hom and `(alpha_A, alpha_B)` settings.

use crate::algebra::{
    check_associative, check_hom_algebra, check_multiplicative, matrix_of, tensor_algebra, yau_twist_algebra,
    HomAlgebra,
};
use crate::error::{Error, Result};
use crate::exact::{int, LinOp, Matrix, Rational};
use crate::report::CheckReport;
use crate::twistor::{deform_with_alpha, lift_13, Operator2, Operator3};

/// `R: B (x) A -> A (x) B`. Columns are indexed by `b * dim_a + a`, rows by
/// `a * dim_b + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistingMap {
    dim_a: usize,
    dim_b: usize,
    matrix: Matrix,
}

impl TwistingMap {
    pub fn new(dim_a: usize, dim_b: usize, matrix: Matrix) -> Result<Self> {
        let n = dim_a * dim_b;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::dims(format!(
                "twisting map between dims {dim_a} and {dim_b} must be {n}x{n}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(TwistingMap { dim_a, dim_b, matrix })
    }

    /// Builds from a rule giving the `(a', b', coefficient)` terms of `R(e_b (x) e_a)`.
    pub fn from_fn(
        dim_a: usize,
        dim_b: usize,
        mut image: impl FnMut(usize, usize) -> Vec<(usize, usize, Rational)>,
    ) -> Self {
        let mut m = Matrix::zeros(dim_a * dim_b, dim_a * dim_b);
        for b in 0..dim_b {
            for a in 0..dim_a {
                for (a2, b2, v) in image(b, a) {
                    m[(a2 * dim_b + b2, b * dim_a + a)] += v;
                }
            }
        }
        TwistingMap { dim_a, dim_b, matrix: m }
    }

    /// `R(b (x) a) = a (x) b`.
    pub fn flip(dim_a: usize, dim_b: usize) -> Self {
        TwistingMap {
            dim_a,
            dim_b,
            matrix: LinOp::swap(dim_b, dim_a).to_matrix(),
        }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Coefficient of `e_a' (x) e_b'` in `R(e_b (x) e_a)`.
    pub fn coeff(&self, b: usize, a: usize, a2: usize, b2: usize) -> &Rational {
        &self.matrix[(a2 * self.dim_b + b2, b * self.dim_a + a)]
    }

    pub fn op(&self) -> LinOp {
        LinOp::new(&self.matrix, &[self.dim_b, self.dim_a], &[self.dim_a, self.dim_b]).expect("shape checked")
    }

    fn fits(&self, a: &HomAlgebra, b: &HomAlgebra) -> Result<()> {
        if self.dim_a != a.dim() || self.dim_b != b.dim() {
            return Err(Error::dims(format!(
                "twisting map expects dims ({}, {}), algebras have ({}, {})",
                self.dim_a,
                self.dim_b,
                a.dim(),
                b.dim()
            )));
        }
        Ok(())
    }
}

fn alpha_op(m: &Matrix) -> Result<LinOp> {
    LinOp::new(m, &[m.cols()], &[m.rows()])
}

fn square_of(m: &Matrix, dim: usize, what: &str) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::dims(format!("{what} must be {dim}x{dim}")));
    }
    Ok(())
}

/// `(alpha_A (x) alpha_B) . R = R . (alpha_B (x) alpha_A)` as a scan.
fn commuting_report(r: &TwistingMap, alpha_a: &Matrix, alpha_b: &Matrix) -> Result<CheckReport> {
    square_of(alpha_a, r.dim_a, "alpha_A")?;
    square_of(alpha_b, r.dim_b, "alpha_B")?;
    let (ro, aa, ab) = (r.op(), alpha_op(alpha_a)?, alpha_op(alpha_b)?);
    CheckReport::of(
        "twisting-commutes-with-alphas",
        &[r.dim_b, r.dim_a],
        |x| x.apply(0, &ro)?.apply_each(&[(0, &aa), (1, &ab)]),
        |x| x.apply_each(&[(0, &ab), (1, &aa)])?.apply(0, &ro),
    )
}

pub fn check_twisting_map(a: &HomAlgebra, b: &HomAlgebra, r: &TwistingMap) -> Result<CheckReport> {
    r.fits(a, b)?;
    Error::require("A must be associative", check_associative(a)?)?;
    Error::require("B must be associative", check_associative(b)?)?;
    let (da, db) = (a.dim(), b.dim());
    let (ro, mua, mub) = (r.op(), a.mul_op(), b.mul_op());
    let mut rep = CheckReport::of(
        "twisting-A",
        &[db, da, da],
        |x| x.apply(1, &mua)?.apply(0, &ro),
        |x| x.apply(0, &ro)?.apply(1, &ro)?.apply(0, &mua),
    )?;
    rep.scan(
        "twisting-B",
        &[db, db, da],
        |x| x.apply(0, &mub)?.apply(0, &ro),
        |x| x.apply(1, &ro)?.apply(0, &ro)?.apply(1, &mub),
    )?;
    Ok(rep)
}

/// Multiplication `(a (x) b)(a' (x) b') = a a'_R (x) b_R b'` as a matrix.
fn twisted_mul(a: &HomAlgebra, b: &HomAlgebra, r: &TwistingMap) -> Matrix {
    let (da, db) = (a.dim(), b.dim());
    let (ro, mua, mub) = (r.op(), a.mul_op(), b.mul_op());
    matrix_of(&[da, db, da, db], da * db, |x| {
        x.apply(1, &ro)?.apply_each(&[(0, &mua), (2, &mub)])
    })
    .expect("shapes are consistent by construction")
}

fn twisted_algebra(a: &HomAlgebra, b: &HomAlgebra, r: &TwistingMap, alpha: Matrix) -> HomAlgebra {
    let mut shape = a.shape().to_vec();
    shape.extend_from_slice(b.shape());
    HomAlgebra::new(twisted_mul(a, b, r), alpha)
        .expect("shapes are consistent by construction")
        .with_shape(shape)
}

/// Twisted tensor product `A (x)_R B` of associative algebras.
pub fn ttp(a: &HomAlgebra, b: &HomAlgebra, r: &TwistingMap) -> Result<HomAlgebra> {
    Error::require("R must be a twisting map", check_twisting_map(a, b, r)?)?;
    Ok(twisted_algebra(a, b, r, Matrix::identity(a.dim() * b.dim())))
}

/// `T((a (x) b) (x) (a' (x) b')) = (a (x) b_R) (x) (a'_R (x) b')` on `D = A (x) B`.
fn twistor_matrix(r: &TwistingMap) -> Matrix {
    let (da, db) = (r.dim_a, r.dim_b);
    let ro = r.op();
    let swap = LinOp::swap(da, db);
    matrix_of(&[da, db, da, db], da * db * da * db, |x| x.apply(1, &ro)?.apply(1, &swap))
        .expect("shapes are consistent by construction")
}

pub fn twistor_from_r(a: &HomAlgebra, b: &HomAlgebra, r: &TwistingMap) -> Result<Operator2> {
    Error::require("R must be a twisting map", check_twisting_map(a, b, r)?)?;
    Operator2::new(a.dim() * b.dim(), twistor_matrix(r))
}

pub fn check_hom_twisting_map(a: &HomAlgebra, b: &HomAlgebra, r: &TwistingMap) -> Result<CheckReport> {
    r.fits(a, b)?;
    Error::require("A must be Hom-associative", check_hom_algebra(a)?)?;
    Error::require("B must be Hom-associative", check_hom_algebra(b)?)?;
    let (da, db) = (a.dim(), b.dim());
    let (ro, mua, mub, ala, alb) = (r.op(), a.mul_op(), b.mul_op(), a.alpha_op(), b.alpha_op());
    let mut rep = commuting_report(r, a.alpha(), b.alpha())?;
    rep.scan(
        "hom-twisting-A",
        &[db, da, da],
        |x| x.apply_each(&[(0, &alb), (1, &mua)])?.apply(0, &ro),
        |x| x.apply(0, &ro)?.apply(1, &ro)?.apply_each(&[(0, &mua), (2, &alb)]),
    )?;
    rep.scan(
        "hom-twisting-B",
        &[db, db, da],
        |x| x.apply_each(&[(0, &mub), (2, &ala)])?.apply(0, &ro),
        |x| x.apply(1, &ro)?.apply(0, &ro)?.apply_each(&[(0, &ala), (1, &mub)]),
    )?;
    Ok(rep)
}

/// Hom-twisted tensor product with structure map `alpha_A (x) alpha_B`.
pub fn hom_ttp(a: &HomAlgebra, b: &HomAlgebra, r: &TwistingMap) -> Result<HomAlgebra> {
    Error::require("R must be a Hom-twisting map", check_hom_twisting_map(a, b, r)?)?;
    Ok(twisted_algebra(a, b, r, a.alpha().kron(b.alpha())))
}

pub fn hom_twistor_from_r(a: &HomAlgebra, b: &HomAlgebra, r: &TwistingMap) -> Result<Operator2> {
    Error::require("R must be a Hom-twisting map", check_hom_twisting_map(a, b, r)?)?;
    Operator2::new(a.dim() * b.dim(), twistor_matrix(r))
}

/// Braid relation for `R1: B(x)A -> A(x)B`, `R2: C(x)B -> B(x)C`, `R3: C(x)A -> A(x)C`,
/// as maps `C (x) B (x) A -> A (x) B (x) C`.
pub fn check_braid(r1: &TwistingMap, r2: &TwistingMap, r3: &TwistingMap) -> Result<CheckReport> {
    let (da, db, dc) = (r1.dim_a, r1.dim_b, r2.dim_b);
    if r2.dim_a != db || r3.dim_a != da || r3.dim_b != dc {
        return Err(Error::dims("braid triple dimensions are inconsistent"));
    }
    let (o1, o2, o3) = (r1.op(), r2.op(), r3.op());
    CheckReport::of(
        "braid",
        &[dc, db, da],
        |x| x.apply(1, &o1)?.apply(0, &o3)?.apply(1, &o2),
        |x| x.apply(0, &o2)?.apply(1, &o3)?.apply(0, &o1),
    )
}

/// Result of an iterated twisted tensor product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iterated {
    pub algebra: HomAlgebra,
    /// `(id_A (x) R2) . (R3 (x) id_B)`, twisting `A (x)_{R1} B` with `C`.
    pub p1: TwistingMap,
    /// `(R1 (x) id_C) . (id_B (x) R3)`, twisting `A` with `B (x)_{R2} C`.
    pub p2: TwistingMap,
}

pub fn iterated_ttp(
    a: &HomAlgebra,
    b: &HomAlgebra,
    c: &HomAlgebra,
    r1: &TwistingMap,
    r2: &TwistingMap,
    r3: &TwistingMap,
) -> Result<Iterated> {
    Error::require("R1 must be a Hom-twisting map", check_hom_twisting_map(a, b, r1)?)?;
    Error::require("R2 must be a Hom-twisting map", check_hom_twisting_map(b, c, r2)?)?;
    Error::require("R3 must be a Hom-twisting map", check_hom_twisting_map(a, c, r3)?)?;
    let braid = check_braid(r1, r2, r3)?;
    if !braid.passed {
        return Err(Error::BraidViolation(Box::new(braid)));
    }
    let (da, db, dc) = (a.dim(), b.dim(), c.dim());
    let (o1, o2, o3) = (r1.op(), r2.op(), r3.op());
    let p1 = TwistingMap::new(
        da * db,
        dc,
        matrix_of(&[dc, da, db], da * db * dc, |x| x.apply(0, &o3)?.apply(1, &o2))?,
    )?;
    let p2 = TwistingMap::new(
        da,
        db * dc,
        matrix_of(&[db, dc, da], da * db * dc, |x| x.apply(1, &o3)?.apply(0, &o1))?,
    )?;
    let left = hom_ttp(&hom_ttp(a, b, r1)?, c, &p1)?;
    let right = hom_ttp(a, &hom_ttp(b, c, r2)?, &p2)?;
    if left != right {
        let (lm, rm) = (left.mul_op(), right.mul_op());
        let n = left.dim();
        let rep = CheckReport::of("bracketings-agree", &[n, n], |x| x.apply(0, &lm), |x| x.apply(0, &rm))?;
        return Err(Error::precondition("both bracketings must agree", rep));
    }
    Ok(Iterated { algebra: left, p1, p2 })
}

/// Data of the Clifford process: `C(k, q) = k[v]/(v^2 = q)` and an involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordParams {
    q: Rational,
    sigma: Matrix,
}

impl CliffordParams {
    pub fn new(q: Rational, sigma: Matrix) -> Result<Self> {
        if q == int(0) {
            return Err(Error::ParamConstraintViolation("q must be nonzero".into()));
        }
        if !sigma.is_square() {
            return Err(Error::dims("sigma must be square"));
        }
        if !sigma.mul(&sigma)?.is_identity() {
            return Err(Error::NotInvolutive);
        }
        Ok(CliffordParams { q, sigma })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }
}

/// `C(k, q)` with basis `(1, v)` and identity structure map.
pub fn clifford_algebra(q: &Rational) -> HomAlgebra {
    HomAlgebra::from_fn(2, Matrix::identity(2), |i, j| match (i, j) {
        (1, 1) => vec![(0, q.clone())],
        _ => vec![(i + j, int(1))],
    })
    .expect("fixed shape")
}

/// Output of the Clifford process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clifford {
    pub algebra: HomAlgebra,
    pub twisting: TwistingMap,
    pub c_kq: HomAlgebra,
}

/// `A-bar = A (x)_R C(k, q)` with `R(1 (x) a) = a (x) 1`, `R(v (x) a) = sigma(a) (x) v`.
///
/// `A` need not be Hom-associative; the product is built from the formula either way.
pub fn clifford(a: &HomAlgebra, params: &CliffordParams) -> Result<Clifford> {
    let d = a.dim();
    square_of(&params.sigma, d, "sigma")?;
    if params.sigma.mul(a.alpha())? != a.alpha().mul(&params.sigma)? {
        return Err(Error::NotCommutingWithAlpha);
    }
    if let Some(f) = check_multiplicative(a, &params.sigma)?.first_failure() {
        return Err(Error::NotMultiplicative(f.tuple[0], f.tuple[1]));
    }
    let sigma = &params.sigma;
    let twisting = TwistingMap::from_fn(d, 2, |b, x| match b {
        0 => vec![(x, 0, int(1))],
        _ => (0..d)
            .filter(|&y| sigma[(y, x)] != int(0))
            .map(|y| (y, 1, sigma[(y, x)].clone()))
            .collect(),
    });
    let c_kq = clifford_algebra(&params.q);
    let algebra = twisted_algebra(a, &c_kq, &twisting, a.alpha().kron(c_kq.alpha()));
    Ok(Clifford { algebra, twisting, c_kq })
}

/// For classical `A`, `B`, `P` and commuting algebra maps, `P` is a Hom-twisting
/// map between the Yau twists and the two resulting Hom-algebras coincide.
pub fn check_deform_compat_ttp(
    a: &HomAlgebra,
    b: &HomAlgebra,
    alpha_a: &Matrix,
    alpha_b: &Matrix,
    p: &TwistingMap,
) -> Result<CheckReport> {
    Error::require("P must be a twisting map", check_twisting_map(a, b, p)?)?;
    let commuting = commuting_report(p, alpha_a, alpha_b)?;
    if !commuting.passed {
        return Err(Error::CommutationFailure(Box::new(commuting)));
    }
    let a_alpha = yau_twist_algebra(a, alpha_a)?;
    let b_alpha = yau_twist_algebra(b, alpha_b)?;
    let mut rep = check_hom_twisting_map(&a_alpha, &b_alpha, p)?;
    if rep.passed {
        let left = hom_ttp(&a_alpha, &b_alpha, p)?;
        let right = yau_twist_algebra(&ttp(a, b, p)?, &alpha_a.kron(alpha_b))?;
        let n = left.dim();
        let (lm, rm) = (left.mul_op(), right.mul_op());
        rep.scan("yau-twist-commutes-with-ttp", &[n, n], |x| x.apply(0, &lm), |x| x.apply(0, &rm))?;
        let (la, ra) = (left.alpha_op(), right.alpha_op());
        rep.scan("yau-twist-structure-map", &[n], |x| x.apply(0, &la), |x| x.apply(0, &ra))?;
    }
    Ok(rep)
}

fn require_bijective_endomorphism(alg: &HomAlgebra, alpha: &Matrix) -> Result<Matrix> {
    square_of(alpha, alg.dim(), "structure map")?;
    let inv = alpha.inverse()?;
    if let Some(f) = check_multiplicative(alg, alpha)?.first_failure() {
        return Err(Error::NotMultiplicative(f.tuple[0], f.tuple[1]));
    }
    Ok(inv)
}

pub fn check_alpha_ab_twisting_map(
    a: &HomAlgebra,
    b: &HomAlgebra,
    alpha_a: &Matrix,
    alpha_b: &Matrix,
    r: &TwistingMap,
) -> Result<CheckReport> {
    r.fits(a, b)?;
    Error::require("A must be associative", check_associative(a)?)?;
    Error::require("B must be associative", check_associative(b)?)?;
    let inv_a = alpha_op(&require_bijective_endomorphism(a, alpha_a)?)?;
    let inv_b = alpha_op(&require_bijective_endomorphism(b, alpha_b)?)?;
    let (da, db) = (a.dim(), b.dim());
    let (ro, mua, mub) = (r.op(), a.mul_op(), b.mul_op());
    let mut rep = commuting_report(r, alpha_a, alpha_b)?;
    rep.scan(
        "alpha-twisting-A",
        &[db, da, da],
        |x| x.apply(1, &mua)?.apply(0, &ro),
        |x| x.apply(0, &ro)?.apply(1, &inv_b)?.apply(1, &ro)?.apply(0, &mua),
    )?;
    rep.scan(
        "alpha-twisting-B",
        &[db, db, da],
        |x| x.apply(0, &mub)?.apply(0, &ro),
        |x| x.apply(1, &ro)?.apply(1, &inv_a)?.apply(0, &ro)?.apply(1, &mub),
    )?;
    Ok(rep)
}

/// The `(alpha_A, alpha_B)`-twisted tensor product and the alpha-pseudotwistor
/// `(T, T~1, T~2)` on `A (x) B` that produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaTwisted {
    pub algebra: HomAlgebra,
    pub t: Operator2,
    pub c1: Operator3,
    pub c2: Operator3,
}

pub fn alpha_ab_ttp(
    a: &HomAlgebra,
    b: &HomAlgebra,
    alpha_a: &Matrix,
    alpha_b: &Matrix,
    r: &TwistingMap,
) -> Result<AlphaTwisted> {
    Error::require(
        "R must be an (alpha_A, alpha_B)-twisting map",
        check_alpha_ab_twisting_map(a, b, alpha_a, alpha_b, r)?,
    )?;
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let (aa, ab) = (alpha_op(alpha_a)?, alpha_op(alpha_b)?);
    let classical = twistor_matrix(r);
    let classical_op = LinOp::new(&classical, &[da, db, da, db], &[da, db, da, db])?;
    let t_matrix = matrix_of(&[da, db, da, db], n * n, |x| {
        x.apply(0, &classical_op)?.apply_each(&[(0, &aa), (3, &ab)])
    })?;
    let t = Operator2::new(n, t_matrix)?;
    let t13 = lift_13(&t);
    let inv = alpha_a.inverse()?.kron(&alpha_b.inverse()?);
    let id_dd = Matrix::identity(n * n);
    let c1 = Operator3::new(n, t13.matrix().mul(&inv.kron(&id_dd))?)?;
    let c2 = Operator3::new(n, t13.matrix().mul(&id_dd.kron(&inv))?)?;
    let product = tensor_algebra(a, b);
    let algebra = deform_with_alpha(&product, &alpha_a.kron(alpha_b), &t)?;
    Ok(AlphaTwisted { algebra, t, c1, c2 })
}

/// `R = (alpha_A (x) alpha_B) . P` for a classical twisting map `P` commuting
/// with the alphas.
pub fn alpha_ab_from_classical(
    a: &HomAlgebra,
    b: &HomAlgebra,
    p: &TwistingMap,
    alpha_a: &Matrix,
    alpha_b: &Matrix,
) -> Result<TwistingMap> {
    Error::require("P must be a twisting map", check_twisting_map(a, b, p)?)?;
    let commuting = commuting_report(p, alpha_a, alpha_b)?;
    if !commuting.passed {
        return Err(Error::CommutationFailure(Box::new(commuting)));
    }
    TwistingMap::new(p.dim_a, p.dim_b, alpha_a.kron(alpha_b).mul(&p.matrix)?)
}
