//! Modules and comodules over Hom-(bi)algebras, module/comodule Hom-algebras,
//! Yetter-Drinfeld modules, and left/right/two-sided Hom-smash products.

use crate::algebra::{check_algebra_morphism, check_associative, tensor_algebra, yau_twist_algebra, HomAlgebra, LinearMap};
use crate::coalgebra::{check_hom_bialgebra, yau_twist_bialgebra, HomBialgebra, HomCoalgebra};
use crate::error::{Error, Result};
use crate::exact::{LinOp, Matrix, Rational};
use crate::report::CheckReport;
use crate::twisted::{hom_ttp, iterated_ttp, Iterated, TwistingMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Action `H (x) M -> M` (left) or `M (x) H -> M` (right).
///
/// The matrix is `module_dim x (acting_dim * module_dim)` with input flattened
/// as `[H, M]` for a left action and `[M, H]` for a right one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    side: Side,
    acting_dim: usize,
    module_dim: usize,
    matrix: Matrix,
    alpha_m: Matrix,
}

impl ActionTable {
    pub fn new(side: Side, acting_dim: usize, matrix: Matrix, alpha_m: Matrix) -> Result<Self> {
        let module_dim = alpha_m.rows();
        if !alpha_m.is_square() || matrix.rows() != module_dim || matrix.cols() != acting_dim * module_dim {
            return Err(Error::dims(format!(
                "action of a {acting_dim}-dim algebra on a {module_dim}-dim module must be {module_dim}x{}",
                acting_dim * module_dim
            )));
        }
        Ok(ActionTable {
            side,
            acting_dim,
            module_dim,
            matrix,
            alpha_m,
        })
    }

    /// Builds from a rule giving the `(m', coefficient)` terms of `e_h . e_m`
    /// (left) or `e_m . e_h` (right); the closure always receives `(h, m)`.
    pub fn from_fn(
        side: Side,
        acting_dim: usize,
        alpha_m: Matrix,
        mut act: impl FnMut(usize, usize) -> Vec<(usize, Rational)>,
    ) -> Result<Self> {
        let module_dim = alpha_m.rows();
        let mut matrix = Matrix::zeros(module_dim, acting_dim * module_dim);
        for h in 0..acting_dim {
            for m in 0..module_dim {
                let col = match side {
                    Side::Left => h * module_dim + m,
                    Side::Right => m * acting_dim + h,
                };
                for (r, v) in act(h, m) {
                    matrix[(r, col)] += v;
                }
            }
        }
        Self::new(side, acting_dim, matrix, alpha_m)
    }

    /// An algebra acting on itself by multiplication.
    pub fn regular(side: Side, a: &HomAlgebra) -> Self {
        Self::new(side, a.dim(), a.mul_matrix().clone(), a.alpha().clone()).expect("regular shapes")
    }

    pub fn zero(side: Side, acting_dim: usize, alpha_m: Matrix) -> Self {
        let n = alpha_m.rows();
        Self::new(side, acting_dim, Matrix::zeros(n, acting_dim * n), alpha_m).expect("zero shapes")
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn acting_dim(&self) -> usize {
        self.acting_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn alpha_m(&self) -> &Matrix {
        &self.alpha_m
    }

    /// Coefficient of `e_m'` in `e_h . e_m` (or `e_m . e_h`).
    pub fn coeff(&self, h: usize, m: usize, m2: usize) -> &Rational {
        let col = match self.side {
            Side::Left => h * self.module_dim + m,
            Side::Right => m * self.acting_dim + h,
        };
        &self.matrix[(m2, col)]
    }

    pub fn op(&self) -> LinOp {
        let in_dims = match self.side {
            Side::Left => [self.acting_dim, self.module_dim],
            Side::Right => [self.module_dim, self.acting_dim],
        };
        LinOp::new(&self.matrix, &in_dims, &[self.module_dim]).expect("shape checked")
    }

    pub fn alpha_op(&self) -> LinOp {
        LinOp::new(&self.alpha_m, &[self.module_dim], &[self.module_dim]).expect("shape checked")
    }

    pub fn with_matrix(&self, matrix: Matrix) -> Result<Self> {
        Self::new(self.side, self.acting_dim, matrix, self.alpha_m.clone())
    }
}

/// Coaction `M -> C (x) M` (left) or `M -> M (x) C` (right), a
/// `(coalgebra_dim * module_dim) x module_dim` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoactionTable {
    side: Side,
    coalgebra_dim: usize,
    module_dim: usize,
    matrix: Matrix,
    alpha_m: Matrix,
}

impl CoactionTable {
    pub fn new(side: Side, coalgebra_dim: usize, matrix: Matrix, alpha_m: Matrix) -> Result<Self> {
        let module_dim = alpha_m.rows();
        if !alpha_m.is_square() || matrix.cols() != module_dim || matrix.rows() != coalgebra_dim * module_dim {
            return Err(Error::dims(format!(
                "coaction of a {coalgebra_dim}-dim coalgebra on a {module_dim}-dim comodule must be {}x{module_dim}",
                coalgebra_dim * module_dim
            )));
        }
        Ok(CoactionTable {
            side,
            coalgebra_dim,
            module_dim,
            matrix,
            alpha_m,
        })
    }

    /// Builds from a rule giving the `(c, m', coefficient)` terms of the coaction
    /// on `e_m`, whatever the side.
    pub fn from_fn(
        side: Side,
        coalgebra_dim: usize,
        alpha_m: Matrix,
        mut coact: impl FnMut(usize) -> Vec<(usize, usize, Rational)>,
    ) -> Result<Self> {
        let module_dim = alpha_m.rows();
        let mut matrix = Matrix::zeros(coalgebra_dim * module_dim, module_dim);
        for m in 0..module_dim {
            for (c, m2, v) in coact(m) {
                let row = match side {
                    Side::Left => c * module_dim + m2,
                    Side::Right => m2 * coalgebra_dim + c,
                };
                matrix[(row, m)] += v;
            }
        }
        Self::new(side, coalgebra_dim, matrix, alpha_m)
    }

    /// A coalgebra coacting on itself by its comultiplication.
    pub fn regular(side: Side, c: &HomCoalgebra) -> Self {
        Self::new(side, c.dim(), c.comul_matrix().clone(), c.alpha().clone()).expect("regular shapes")
    }

    pub fn zero(side: Side, coalgebra_dim: usize, alpha_m: Matrix) -> Self {
        let n = alpha_m.rows();
        Self::new(side, coalgebra_dim, Matrix::zeros(coalgebra_dim * n, n), alpha_m).expect("zero shapes")
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coalgebra_dim(&self) -> usize {
        self.coalgebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn alpha_m(&self) -> &Matrix {
        &self.alpha_m
    }

    pub fn op(&self) -> LinOp {
        let out_dims = match self.side {
            Side::Left => [self.coalgebra_dim, self.module_dim],
            Side::Right => [self.module_dim, self.coalgebra_dim],
        };
        LinOp::new(&self.matrix, &[self.module_dim], &out_dims).expect("shape checked")
    }

    pub fn alpha_op(&self) -> LinOp {
        LinOp::new(&self.alpha_m, &[self.module_dim], &[self.module_dim]).expect("shape checked")
    }

    pub fn with_matrix(&self, matrix: Matrix) -> Result<Self> {
        Self::new(self.side, self.coalgebra_dim, matrix, self.alpha_m.clone())
    }
}

fn op_of(m: &Matrix) -> Result<LinOp> {
    LinOp::new(m, &[m.cols()], &[m.rows()])
}

pub fn check_module(h: &HomAlgebra, act: &ActionTable) -> Result<CheckReport> {
    if act.acting_dim != h.dim() {
        return Err(Error::dims("action does not match the acting algebra"));
    }
    let (dh, dm) = (h.dim(), act.module_dim);
    let (ao, am, ah, mu) = (act.op(), act.alpha_op(), h.alpha_op(), h.mul_op());
    match act.side {
        Side::Left => {
            let mut rep = CheckReport::of(
                "module-alpha",
                &[dh, dm],
                |x| x.apply(0, &ao)?.apply(0, &am),
                |x| x.apply_each(&[(0, &ah), (1, &am)])?.apply(0, &ao),
            )?;
            rep.scan(
                "module-hom-associativity",
                &[dh, dh, dm],
                |x| x.apply(1, &ao)?.apply(0, &ah)?.apply(0, &ao),
                |x| x.apply_each(&[(0, &mu), (2, &am)])?.apply(0, &ao),
            )?;
            Ok(rep)
        }
        Side::Right => {
            let mut rep = CheckReport::of(
                "module-alpha",
                &[dm, dh],
                |x| x.apply(0, &ao)?.apply(0, &am),
                |x| x.apply_each(&[(0, &am), (1, &ah)])?.apply(0, &ao),
            )?;
            rep.scan(
                "module-hom-associativity",
                &[dm, dh, dh],
                |x| x.apply_each(&[(0, &ao), (2, &ah)])?.apply(0, &ao),
                |x| x.apply_each(&[(0, &am), (1, &mu)])?.apply(0, &ao),
            )?;
            Ok(rep)
        }
    }
}

fn require_module_on(h: &HomBialgebra, a: &HomAlgebra, act: &ActionTable) -> Result<()> {
    if act.module_dim != a.dim() {
        return Err(Error::dims("action does not match the module algebra"));
    }
    Error::require("action must be a module structure", check_module(h.algebra(), act)?)?;
    if act.alpha_m != *a.alpha() {
        return Err(Error::precondition(
            "module structure map must equal the algebra's structure map",
            CheckReport::new(),
        ));
    }
    Ok(())
}

pub fn check_module_hom_algebra(h: &HomBialgebra, a: &HomAlgebra, act: &ActionTable) -> Result<CheckReport> {
    require_module_on(h, a, act)?;
    let (dh, da) = (h.dim(), a.dim());
    let ah2 = op_of(&h.alpha().pow(2)?)?;
    let (ao, mua, delta) = (act.op(), a.mul_op(), h.coalgebra().comul_op());
    match act.side {
        Side::Left => {
            let swap = LinOp::swap(dh, da);
            CheckReport::of(
                "module-algebra",
                &[dh, da, da],
                |x| x.apply(1, &mua)?.apply(0, &ah2)?.apply(0, &ao),
                |x| {
                    x.apply(0, &delta)?
                        .apply(1, &swap)?
                        .apply_each(&[(0, &ao), (2, &ao)])?
                        .apply(0, &mua)
                },
            )
        }
        Side::Right => {
            let swap = LinOp::swap(da, dh);
            CheckReport::of(
                "module-algebra",
                &[da, da, dh],
                |x| x.apply_each(&[(0, &mua), (2, &ah2)])?.apply(0, &ao),
                |x| {
                    x.apply(2, &delta)?
                        .apply(1, &swap)?
                        .apply_each(&[(0, &ao), (2, &ao)])?
                        .apply(0, &mua)
                },
            )
        }
    }
}

/// Result of twisting a classical module algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedModuleAlgebra {
    pub bialgebra: HomBialgebra,
    pub algebra: HomAlgebra,
    pub action: ActionTable,
}

/// Twists a classical module algebra: `H_{alpha_H}`, `A_{alpha_A}` and the
/// action `h |> a = alpha_A(h . a)` (or `a <| h = alpha_A(a . h)` on the right).
pub fn yau_twist_module_algebra(
    h: &HomBialgebra,
    a: &HomAlgebra,
    act: &ActionTable,
    alpha_h: &Matrix,
    alpha_a: &Matrix,
) -> Result<TwistedModuleAlgebra> {
    if !h.algebra().is_plain() || !a.is_plain() || !act.alpha_m.is_identity() {
        return Err(Error::precondition(
            "twisting needs classical inputs (all structure maps identity)",
            CheckReport::new(),
        ));
    }
    Error::require("classical module algebra axioms", check_module_hom_algebra(h, a, act)?)?;
    let bialgebra = yau_twist_bialgebra(h, alpha_h)?;
    let algebra = yau_twist_algebra(a, alpha_a)?;
    let (dh, da) = (h.dim(), a.dim());
    let (ao, ah, aa) = (act.op(), op_of(alpha_h)?, op_of(alpha_a)?);
    let in_dims = match act.side {
        Side::Left => [dh, da],
        Side::Right => [da, dh],
    };
    let positions = match act.side {
        Side::Left => [(0, &ah), (1, &aa)],
        Side::Right => [(0, &aa), (1, &ah)],
    };
    let rep = CheckReport::of(
        "intertwining",
        &in_dims,
        |x| x.apply(0, &ao)?.apply(0, &aa),
        |x| x.apply_each(&positions)?.apply(0, &ao),
    )?;
    if let Some(f) = rep.first_failure() {
        return Err(Error::IntertwiningFailure(f.tuple[0], f.tuple[1]));
    }
    let action = ActionTable::new(act.side, dh, alpha_a.mul(&act.matrix)?, alpha_a.clone())?;
    Ok(TwistedModuleAlgebra {
        bialgebra,
        algebra,
        action,
    })
}

/// `h . (m (x) n) = h_1 . m (x) h_2 . n` with structure map `alpha_M (x) alpha_N`.
pub fn tensor_modules(h: &HomBialgebra, m: &ActionTable, n: &ActionTable) -> Result<ActionTable> {
    if m.side != Side::Left || n.side != Side::Left {
        return Err(Error::dims("tensor products are formed for left modules"));
    }
    Error::require("first factor must be a module", check_module(h.algebra(), m)?)?;
    Error::require("second factor must be a module", check_module(h.algebra(), n)?)?;
    let (dh, dm, dn) = (h.dim(), m.module_dim, n.module_dim);
    let (delta, mo, no) = (h.coalgebra().comul_op(), m.op(), n.op());
    let swap = LinOp::swap(dh, dm);
    let matrix = crate::algebra::matrix_of(&[dh, dm, dn], dm * dn, |x| {
        x.apply(0, &delta)?.apply(1, &swap)?.apply_each(&[(0, &mo), (2, &no)])
    })?;
    ActionTable::new(Side::Left, dh, matrix, m.alpha_m.kron(&n.alpha_m))
}

pub fn check_comodule(c: &HomCoalgebra, co: &CoactionTable) -> Result<CheckReport> {
    if co.coalgebra_dim != c.dim() {
        return Err(Error::dims("coaction does not match the coalgebra"));
    }
    let dm = co.module_dim;
    let (lo, am, ac, delta) = (co.op(), co.alpha_op(), c.alpha_op(), c.comul_op());
    match co.side {
        Side::Left => {
            let mut rep = CheckReport::of(
                "comodule-alpha",
                &[dm],
                |x| x.apply(0, &lo)?.apply_each(&[(0, &ac), (1, &am)]),
                |x| x.apply(0, &am)?.apply(0, &lo),
            )?;
            rep.scan(
                "comodule-hom-coassociativity",
                &[dm],
                |x| x.apply(0, &lo)?.apply_each(&[(0, &delta), (1, &am)]),
                |x| x.apply(0, &lo)?.apply_each(&[(0, &ac), (1, &lo)]),
            )?;
            Ok(rep)
        }
        Side::Right => {
            let mut rep = CheckReport::of(
                "comodule-alpha",
                &[dm],
                |x| x.apply(0, &lo)?.apply_each(&[(0, &am), (1, &ac)]),
                |x| x.apply(0, &am)?.apply(0, &lo),
            )?;
            rep.scan(
                "comodule-hom-coassociativity",
                &[dm],
                |x| x.apply(0, &lo)?.apply_each(&[(0, &am), (1, &delta)]),
                |x| x.apply(0, &lo)?.apply_each(&[(0, &lo), (1, &ac)]),
            )?;
            Ok(rep)
        }
    }
}

pub fn check_bicomodule(c: &HomCoalgebra, lam: &CoactionTable, rho: &CoactionTable) -> Result<CheckReport> {
    if lam.side != Side::Left || rho.side != Side::Right {
        return Err(Error::dims("bicomodule needs a left and a right coaction"));
    }
    if lam.module_dim != rho.module_dim || lam.alpha_m != rho.alpha_m {
        return Err(Error::dims("left and right coactions live on different comodules"));
    }
    Error::require("left coaction must be a comodule", check_comodule(c, lam)?)?;
    Error::require("right coaction must be a comodule", check_comodule(c, rho)?)?;
    let (lo, ro, ac) = (lam.op(), rho.op(), c.alpha_op());
    CheckReport::of(
        "bicomodule",
        &[lam.module_dim],
        |x| x.apply(0, &ro)?.apply_each(&[(0, &lo), (1, &ac)]),
        |x| x.apply(0, &lo)?.apply_each(&[(0, &ac), (1, &ro)]),
    )
}

/// The coaction must be a morphism of Hom-algebras into `H (x) D` (left) or `D (x) H` (right).
pub fn check_comodule_hom_algebra(h: &HomBialgebra, d: &HomAlgebra, co: &CoactionTable) -> Result<CheckReport> {
    if co.module_dim != d.dim() {
        return Err(Error::dims("coaction does not match the comodule algebra"));
    }
    Error::require("coaction must be a comodule", check_comodule(h.coalgebra(), co)?)?;
    if co.alpha_m != *d.alpha() {
        return Err(Error::precondition(
            "comodule structure map must equal the algebra's structure map",
            CheckReport::new(),
        ));
    }
    let target = match co.side {
        Side::Left => tensor_algebra(h.algebra(), d),
        Side::Right => tensor_algebra(d, h.algebra()),
    };
    check_algebra_morphism(&LinearMap::new(co.matrix.clone()), d, &target)
}

/// A Hom-smash product and the Hom-twisting map producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smash {
    pub twisting: TwistingMap,
    pub algebra: HomAlgebra,
}

fn require_side(act: &ActionTable, side: Side) -> Result<()> {
    if act.side != side {
        return Err(Error::dims(format!("expected a {} action", side.name())));
    }
    Ok(())
}

/// `R(h (x) a) = alpha_H^{-2}(h_1) . alpha_A^{-1}(a) (x) alpha_H^{-1}(h_2)`.
fn left_smash_map(a: &HomAlgebra, h: &HomBialgebra, act: &ActionTable) -> Result<TwistingMap> {
    let (da, dh) = (a.dim(), h.dim());
    let inv_h = op_of(&h.alpha().pow(-1)?)?;
    let inv_h2 = op_of(&h.alpha().pow(-2)?)?;
    let inv_a = op_of(&a.alpha().pow(-1)?)?;
    let (delta, ao) = (h.coalgebra().comul_op(), act.op());
    let swap = LinOp::swap(dh, da);
    let m = crate::algebra::matrix_of(&[dh, da], da * dh, |x| {
        x.apply(0, &delta)?
            .apply_each(&[(0, &inv_h2), (1, &inv_h), (2, &inv_a)])?
            .apply(1, &swap)?
            .apply(0, &ao)
    })?;
    TwistingMap::new(da, dh, m)
}

/// `R(c (x) h) = alpha_H^{-1}(h_1) (x) alpha_C^{-1}(c) . alpha_H^{-2}(h_2)`.
fn right_smash_map(h: &HomBialgebra, c: &HomAlgebra, act: &ActionTable) -> Result<TwistingMap> {
    let (dh, dc) = (h.dim(), c.dim());
    let inv_h = op_of(&h.alpha().pow(-1)?)?;
    let inv_h2 = op_of(&h.alpha().pow(-2)?)?;
    let inv_c = op_of(&c.alpha().pow(-1)?)?;
    let (delta, ao) = (h.coalgebra().comul_op(), act.op());
    let swap = LinOp::swap(dc, dh);
    let m = crate::algebra::matrix_of(&[dc, dh], dh * dc, |x| {
        x.apply(1, &delta)?
            .apply_each(&[(0, &inv_c), (1, &inv_h), (2, &inv_h2)])?
            .apply(0, &swap)?
            .apply(1, &ao)
    })?;
    TwistingMap::new(dh, dc, m)
}

fn require_smash_data(h: &HomBialgebra, a: &HomAlgebra, act: &ActionTable) -> Result<()> {
    Error::require("acting object must be a Hom-bialgebra", check_hom_bialgebra(h)?)?;
    Error::require("action must make a module Hom-algebra", check_module_hom_algebra(h, a, act)?)?;
    h.alpha().inverse()?;
    a.alpha().inverse()?;
    Ok(())
}

/// Left Hom-smash product `A # H`.
pub fn smash_left(a: &HomAlgebra, h: &HomBialgebra, act: &ActionTable) -> Result<Smash> {
    require_side(act, Side::Left)?;
    require_smash_data(h, a, act)?;
    let twisting = left_smash_map(a, h, act)?;
    let algebra = hom_ttp(a, h.algebra(), &twisting)?;
    Ok(Smash { twisting, algebra })
}

/// Right Hom-smash product `H # C`.
pub fn smash_right(h: &HomBialgebra, c: &HomAlgebra, act: &ActionTable) -> Result<Smash> {
    require_side(act, Side::Right)?;
    require_smash_data(h, c, act)?;
    let twisting = right_smash_map(h, c, act)?;
    let algebra = hom_ttp(h.algebra(), c, &twisting)?;
    Ok(Smash { twisting, algebra })
}

/// Two-sided Hom-smash product `A # H # C` as an iterated twisted tensor
/// product with the flip between `C` and `A`.
pub fn smash_two_sided(
    a: &HomAlgebra,
    h: &HomBialgebra,
    c: &HomAlgebra,
    act_left: &ActionTable,
    act_right: &ActionTable,
) -> Result<Iterated> {
    let left = smash_left(a, h, act_left)?;
    let right = smash_right(h, c, act_right)?;
    let flip = TwistingMap::flip(a.dim(), c.dim());
    iterated_ttp(a, h.algebra(), c, &left.twisting, &right.twisting, &flip)
}

/// `rho(a # h) = (alpha_A(a) # h_1) (x) h_2` on `A # H`.
pub fn coaction_rho_smash(a: &HomAlgebra, h: &HomBialgebra, act: &ActionTable) -> Result<CoactionTable> {
    require_side(act, Side::Left)?;
    require_smash_data(h, a, act)?;
    let (da, dh) = (a.dim(), h.dim());
    let (delta, aa) = (h.coalgebra().comul_op(), a.alpha_op());
    let m = crate::algebra::matrix_of(&[da, dh], da * dh * dh, |x| x.apply_each(&[(0, &aa), (1, &delta)]))?;
    CoactionTable::new(Side::Right, dh, m, a.alpha().kron(h.alpha()))
}

/// `lambda(a # h) = a_(-1) h_1 (x) (a_(0) # h_2)` on `A # H`.
pub fn coaction_lambda_smash(
    a: &HomAlgebra,
    h: &HomBialgebra,
    act: &ActionTable,
    co_a: &CoactionTable,
) -> Result<CoactionTable> {
    require_side(act, Side::Left)?;
    require_side_co(co_a, Side::Left)?;
    require_smash_data(h, a, act)?;
    Error::require(
        "A must be a left comodule Hom-algebra",
        check_comodule_hom_algebra(h, a, co_a)?,
    )?;
    let yd = check_yetter_drinfeld(h, act, co_a)?;
    if !yd.passed {
        return Err(Error::YdViolation(Box::new(yd)));
    }
    let (da, dh) = (a.dim(), h.dim());
    let (lo, delta, mu) = (co_a.op(), h.coalgebra().comul_op(), h.algebra().mul_op());
    let swap = LinOp::swap(da, dh);
    let m = crate::algebra::matrix_of(&[da, dh], dh * da * dh, |x| {
        x.apply_each(&[(0, &lo), (1, &delta)])?.apply(1, &swap)?.apply(0, &mu)
    })?;
    CoactionTable::new(Side::Left, dh, m, a.alpha().kron(h.alpha()))
}

/// `lambda(h # c) = h_1 (x) (h_2 # alpha_C(c))` on `H # C`.
pub fn coaction_lambda_right_smash(h: &HomBialgebra, c: &HomAlgebra, act: &ActionTable) -> Result<CoactionTable> {
    require_side(act, Side::Right)?;
    require_smash_data(h, c, act)?;
    let (dh, dc) = (h.dim(), c.dim());
    let (delta, ac) = (h.coalgebra().comul_op(), c.alpha_op());
    let m = crate::algebra::matrix_of(&[dh, dc], dh * dh * dc, |x| x.apply_each(&[(0, &delta), (1, &ac)]))?;
    CoactionTable::new(Side::Left, dh, m, h.alpha().kron(c.alpha()))
}

fn require_side_co(co: &CoactionTable, side: Side) -> Result<()> {
    if co.side != side {
        return Err(Error::dims(format!("expected a {} coaction", side.name())));
    }
    Ok(())
}

/// Left-left Yetter-Drinfeld compatibility.
pub fn check_yetter_drinfeld(h: &HomBialgebra, act: &ActionTable, co: &CoactionTable) -> Result<CheckReport> {
    require_side(act, Side::Left)?;
    require_side_co(co, Side::Left)?;
    if act.module_dim != co.module_dim || act.alpha_m != co.alpha_m {
        return Err(Error::dims("action and coaction live on different modules"));
    }
    Error::require("action must be a module structure", check_module(h.algebra(), act)?)?;
    Error::require("coaction must be a comodule structure", check_comodule(h.coalgebra(), co)?)?;
    let (dh, dm) = (h.dim(), act.module_dim);
    let (ao, lo, delta, mu, ah) = (act.op(), co.op(), h.coalgebra().comul_op(), h.algebra().mul_op(), h.algebra().alpha_op());
    let ah2 = op_of(&h.alpha().pow(2)?)?;
    let swap_hm = LinOp::swap(dh, dm);
    let swap_mh = LinOp::swap(dm, dh);
    let swap_hh = LinOp::swap(dh, dh);
    CheckReport::of(
        "yetter-drinfeld",
        &[dh, dm],
        |x| {
            x.apply(0, &delta)?
                .apply(1, &swap_hm)?
                .apply(0, &ao)?
                .apply(0, &lo)?
                .apply(2, &ah2)?
                .apply(1, &swap_mh)?
                .apply(0, &mu)
        },
        |x| {
            x.apply_each(&[(0, &delta), (1, &lo)])?
                .apply(1, &swap_hh)?
                .apply_each(&[(0, &ah2), (1, &ah), (2, &ah)])?
                .apply(0, &mu)?
                .apply(1, &ao)
        },
    )
}

/// Classical smash twisting map `P(h (x) a) = h_1 . a (x) h_2` (left) or
/// `P(c (x) h) = h_1 (x) c . h_2` (right).
pub fn classical_smash_map(h: &HomBialgebra, module_dim: usize, act: &ActionTable) -> Result<TwistingMap> {
    let dh = h.dim();
    let (delta, ao) = (h.coalgebra().comul_op(), act.op());
    match act.side {
        Side::Left => {
            let swap = LinOp::swap(dh, module_dim);
            let m = crate::algebra::matrix_of(&[dh, module_dim], dh * module_dim, |x| {
                x.apply(0, &delta)?.apply(1, &swap)?.apply(0, &ao)
            })?;
            TwistingMap::new(module_dim, dh, m)
        }
        Side::Right => {
            let swap = LinOp::swap(module_dim, dh);
            let m = crate::algebra::matrix_of(&[module_dim, dh], dh * module_dim, |x| {
                x.apply(1, &delta)?.apply(0, &swap)?.apply(1, &ao)
            })?;
            TwistingMap::new(dh, module_dim, m)
        }
    }
}

/// Twisting a classical smash product by `alpha_A (x) alpha_H` agrees with the
/// Hom-smash product of the twists, and the Hom-smash twisting map of the twists
/// is the classical `P`.
pub fn check_smash_twist_compat(
    h: &HomBialgebra,
    a: &HomAlgebra,
    act: &ActionTable,
    alpha_h: &Matrix,
    alpha_a: &Matrix,
) -> Result<CheckReport> {
    let twisted = yau_twist_module_algebra(h, a, act, alpha_h, alpha_a)?;
    Error::require("classical algebra must be associative", check_associative(a)?)?;
    let (classical, hom, structure) = match act.side {
        Side::Left => (
            smash_left(a, h, act)?,
            smash_left(&twisted.algebra, &twisted.bialgebra, &twisted.action)?,
            alpha_a.kron(alpha_h),
        ),
        Side::Right => (
            smash_right(h, a, act)?,
            smash_right(&twisted.bialgebra, &twisted.algebra, &twisted.action)?,
            alpha_h.kron(alpha_a),
        ),
    };
    let expected = yau_twist_algebra(&classical.algebra, &structure)?;
    let p = classical_smash_map(h, a.dim(), act)?;
    let n = expected.dim();
    let (em, hm) = (expected.mul_op(), hom.algebra.mul_op());
    let mut rep = CheckReport::of("twisted-smash-product", &[n, n], |x| x.apply(0, &em), |x| x.apply(0, &hm))?;
    let (ea, ha) = (expected.alpha_op(), hom.algebra.alpha_op());
    rep.scan("twisted-smash-structure-map", &[n], |x| x.apply(0, &ea), |x| x.apply(0, &ha))?;
    let (po, ro) = (p.op(), hom.twisting.op());
    let in_dims = [p.dim_b(), p.dim_a()];
    rep.scan("twisting-map-equals-classical", &in_dims, |x| x.apply(0, &po), |x| x.apply(0, &ro))?;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_hom_algebra;
    use crate::exact::int;
    use crate::twisted::check_braid;

    /// Group algebra of C2 with basis (e, g), group-like comultiplication.
    fn kc2() -> HomBialgebra {
        let a = HomAlgebra::from_fn(2, Matrix::identity(2), |i, j| vec![((i + j) % 2, int(1))]).unwrap();
        let c = HomCoalgebra::from_fn(2, Matrix::identity(2), |i| vec![(i, i, int(1))]).unwrap();
        HomBialgebra::new(a, c).unwrap()
    }

    fn k2() -> HomAlgebra {
        HomAlgebra::from_fn(2, Matrix::identity(2), |i, j| if i == j { vec![(i, int(1))] } else { vec![] })
            .unwrap()
    }

    /// C2 acting on k^2 by swapping the idempotents.
    fn swap_action(side: Side) -> ActionTable {
        ActionTable::from_fn(side, 2, Matrix::identity(2), |h, m| vec![((h + m) % 2, int(1))]).unwrap()
    }

    fn twisted_instance() -> TwistedModuleAlgebra {
        // alpha_H = id, alpha_A = swap commutes with the action
        yau_twist_module_algebra(&kc2(), &k2(), &swap_action(Side::Left), &Matrix::identity(2), &Matrix::permutation(&[1, 0]))
            .unwrap()
    }

    #[test]
    fn regular_and_zero_modules() {
        let h = kc2();
        assert!(check_module(h.algebra(), &ActionTable::regular(Side::Left, h.algebra())).unwrap().passed);
        assert!(check_module(h.algebra(), &ActionTable::regular(Side::Right, h.algebra())).unwrap().passed);
        assert!(check_module(h.algebra(), &ActionTable::zero(Side::Left, 2, Matrix::identity(3))).unwrap().passed);
        let mut m = swap_action(Side::Left).matrix().clone();
        m[(0, 0)] += int(1);
        let bad = swap_action(Side::Left).with_matrix(m).unwrap();
        assert!(!check_module(h.algebra(), &bad).unwrap().passed);
    }

    #[test]
    fn module_algebras() {
        let h = kc2();
        for side in [Side::Left, Side::Right] {
            assert!(check_module_hom_algebra(&h, &k2(), &swap_action(side)).unwrap().passed);
            assert!(check_module_hom_algebra(&h, &k2(), &ActionTable::zero(side, 2, Matrix::identity(2))).unwrap().passed);
        }
        // g acting by -1 on both idempotents is a module but not a module algebra
        let sign = ActionTable::from_fn(Side::Left, 2, Matrix::identity(2), |h, m| {
            vec![(m, if h == 1 { int(-1) } else { int(1) })]
        })
        .unwrap();
        assert!(check_module(h.algebra(), &sign).unwrap().passed);
        assert!(!check_module_hom_algebra(&h, &k2(), &sign).unwrap().passed);
    }

    #[test]
    fn twisted_module_algebra() {
        let t = twisted_instance();
        assert!(check_module_hom_algebra(&t.bialgebra, &t.algebra, &t.action).unwrap().passed);
        let same = yau_twist_module_algebra(&kc2(), &k2(), &swap_action(Side::Left), &Matrix::identity(2), &Matrix::identity(2))
            .unwrap();
        assert_eq!(same.action, swap_action(Side::Left));
        assert_eq!(same.algebra, k2());
    }

    #[test]
    fn tensor_of_modules() {
        let h = kc2();
        let m = swap_action(Side::Left);
        let t = tensor_modules(&h, &m, &m).unwrap();
        assert_eq!(t.module_dim(), 4);
        assert!(check_module(h.algebra(), &t).unwrap().passed);
        let triv = ActionTable::from_fn(Side::Left, 2, Matrix::identity(1), |_, _| vec![(0, int(1))]).unwrap();
        assert_eq!(tensor_modules(&h, &triv, &triv).unwrap().module_dim(), 1);
        assert!(tensor_modules(&h, &ActionTable::zero(Side::Left, 3, Matrix::identity(2)), &m).is_err());
    }

    #[test]
    fn comodules() {
        let c = kc2().coalgebra().clone();
        for side in [Side::Left, Side::Right] {
            assert!(check_comodule(&c, &CoactionTable::regular(side, &c)).unwrap().passed);
            assert!(check_comodule(&c, &CoactionTable::zero(side, 2, Matrix::identity(3))).unwrap().passed);
        }
        let lam = CoactionTable::regular(Side::Left, &c);
        let rho = CoactionTable::regular(Side::Right, &c);
        assert!(check_bicomodule(&c, &lam, &rho).unwrap().passed);
        let mut m = lam.matrix().clone();
        m[(1, 0)] += int(1);
        assert!(!check_comodule(&c, &lam.with_matrix(m).unwrap()).unwrap().passed);
    }

    #[test]
    fn comodule_algebras() {
        let h = kc2();
        let triv = CoactionTable::from_fn(Side::Left, 2, Matrix::identity(2), |m| vec![(0, m, int(1))]).unwrap();
        assert!(check_comodule_hom_algebra(&h, &k2(), &triv).unwrap().passed);
        let reg = CoactionTable::regular(Side::Right, h.coalgebra());
        assert!(check_comodule_hom_algebra(&h, h.algebra(), &reg).unwrap().passed);
        let doubled = CoactionTable::from_fn(Side::Left, 2, Matrix::identity(2), |m| vec![(0, m, int(2))]).unwrap();
        assert!(matches!(
            check_comodule_hom_algebra(&h, &k2(), &doubled),
            Err(Error::Precondition { .. })
        ));
        // m -> g (x) m is a comodule but not multiplicative
        let by_g = CoactionTable::from_fn(Side::Left, 2, Matrix::identity(2), |m| vec![(1, m, int(1))]).unwrap();
        assert!(!check_comodule_hom_algebra(&h, &k2(), &by_g).unwrap().passed);
    }

    /// Classical smash product `(a # h)(a' # h') = a (h . a') # h h'` for group-likes.
    fn classical_left_oracle(a: usize, h: usize, a2: usize, h2: usize) -> Vec<Rational> {
        let moved = (h + a2) % 2;
        let mut v = vec![int(0); 4];
        if a == moved {
            v[a * 2 + (h + h2) % 2] = int(1);
        }
        v
    }

    #[test]
    fn classical_smash_matches_oracle() {
        let s = smash_left(&k2(), &kc2(), &swap_action(Side::Left)).unwrap();
        for a in 0..2 {
            for h in 0..2 {
                for a2 in 0..2 {
                    for h2 in 0..2 {
                        let expect = classical_left_oracle(a, h, a2, h2);
                        let got: Vec<Rational> = (0..4).map(|k| s.algebra.constant(a * 2 + h, a2 * 2 + h2, k).clone()).collect();
                        assert_eq!(got, expect);
                    }
                }
            }
        }
        assert!(check_associative(&s.algebra).unwrap().passed);
    }

    #[test]
    fn twisted_smash_products() {
        let t = twisted_instance();
        let s = smash_left(&t.algebra, &t.bialgebra, &t.action).unwrap();
        assert!(check_hom_algebra(&s.algebra).unwrap().passed);
        let rho = coaction_rho_smash(&t.algebra, &t.bialgebra, &t.action).unwrap();
        assert!(check_comodule(t.bialgebra.coalgebra(), &rho).unwrap().passed);
        assert!(check_comodule_hom_algebra(&t.bialgebra, &s.algebra, &rho).unwrap().passed);
        let zero = smash_left(&k2(), &kc2(), &ActionTable::zero(Side::Left, 2, Matrix::identity(2))).unwrap();
        assert!(crate::algebra::is_zero_algebra(&zero.algebra));
    }

    #[test]
    fn right_and_two_sided() {
        let h = kc2();
        let right = smash_right(&h, &k2(), &swap_action(Side::Right)).unwrap();
        assert!(check_associative(&right.algebra).unwrap().passed);
        let lam = coaction_lambda_right_smash(&h, &k2(), &swap_action(Side::Right)).unwrap();
        assert!(check_comodule_hom_algebra(&h, &right.algebra, &lam).unwrap().passed);
        let left = smash_left(&k2(), &h, &swap_action(Side::Left)).unwrap();
        let flip = TwistingMap::flip(2, 2);
        assert!(check_braid(&left.twisting, &right.twisting, &flip).unwrap().passed);
        let two = smash_two_sided(&k2(), &h, &k2(), &swap_action(Side::Left), &swap_action(Side::Right)).unwrap();
        assert_eq!(two.algebra.dim(), 8);
        assert!(check_associative(&two.algebra).unwrap().passed);
    }

    #[test]
    fn yetter_drinfeld_and_lambda() {
        let h = kc2();
        let triv = CoactionTable::from_fn(Side::Left, 2, Matrix::identity(2), |m| vec![(0, m, int(1))]).unwrap();
        let act = swap_action(Side::Left);
        assert!(check_yetter_drinfeld(&h, &act, &triv).unwrap().passed);
        let lam = coaction_lambda_smash(&k2(), &h, &act, &triv).unwrap();
        let s = smash_left(&k2(), &h, &act).unwrap();
        assert!(check_comodule_hom_algebra(&h, &s.algebra, &lam).unwrap().passed);
        let rho = coaction_rho_smash(&k2(), &h, &act).unwrap();
        assert!(check_bicomodule(h.coalgebra(), &lam, &rho).unwrap().passed);
        // H coacting on itself by Delta is YD for the adjoint action, which is trivial here,
        // but not for the regular action: (g x)g (x) gx differs from gx (x) gx
        let reg_co = CoactionTable::regular(Side::Left, h.coalgebra());
        let adjoint = ActionTable::from_fn(Side::Left, 2, Matrix::identity(2), |_, m| vec![(m, int(1))]).unwrap();
        assert!(check_yetter_drinfeld(&h, &adjoint, &reg_co).unwrap().passed);
        let reg_act = ActionTable::regular(Side::Left, h.algebra());
        assert!(!check_yetter_drinfeld(&h, &reg_act, &reg_co).unwrap().passed);
        // coaction by g is a comodule but breaks YD against the swap action
        let by_g = CoactionTable::from_fn(Side::Left, 2, Matrix::identity(2), |m| {
            vec![(if m == 0 { 0 } else { 1 }, m, int(1))]
        })
        .unwrap();
        if check_comodule(h.coalgebra(), &by_g).unwrap().passed {
            assert!(!check_yetter_drinfeld(&h, &act, &by_g).unwrap().passed);
        }
    }

    #[test]
    fn smash_twist_compat() {
        let id = Matrix::identity(2);
        let swap = Matrix::permutation(&[1, 0]);
        for side in [Side::Left, Side::Right] {
            let act = swap_action(side);
            assert!(check_smash_twist_compat(&kc2(), &k2(), &act, &id, &id).unwrap().passed);
            assert!(check_smash_twist_compat(&kc2(), &k2(), &act, &id, &swap).unwrap().passed);
        }
        // a non-intertwining alpha_A: the idempotent e1 fixed, e2 sent to zero is not even invertible,
        // use the sign action instead so swap fails to intertwine
        let k3 = HomAlgebra::from_fn(3, Matrix::identity(3), |i, j| if i == j { vec![(i, int(1))] } else { vec![] })
            .unwrap();
        let act3 = ActionTable::from_fn(Side::Left, 2, Matrix::identity(3), |h, m| {
            vec![(if h == 1 && m < 2 { 1 - m } else { m }, int(1))]
        })
        .unwrap();
        let cyc = Matrix::permutation(&[1, 2, 0]);
        assert!(matches!(
            check_smash_twist_compat(&kc2(), &k3, &act3, &id, &cyc),
            Err(Error::IntertwiningFailure(_, _))
        ));
    }
}
