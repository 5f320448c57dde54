//! U_q(sl2) at an instantiated rational `q`, computed in the PBW basis
//! `F^a E^b K^c`, together with the quantum plane `k<x,y>/(yx - qxy)`, the
//! `ρ_l` family of module Hom-algebra structures and the resulting Hom-smash
//! product.

mod checks;
mod comb;
mod plane;
mod smash;
mod uq;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{pow, Rational};

pub use checks::{
    check_alpha_bialgebra_map, check_coproduct_multiplicative, check_pbw_confluence,
    check_rho_extension, check_uq_associativity, check_uq_module_hom_algebra,
    check_uq_module_with, perturbed_rho,
};
pub use comb::LinComb;
pub use plane::{
    qp_beta, qp_mul, qp_mul_beta, rho_displayed, rho_l, sigma, PlaneMono, QPlaneElement,
};
pub use smash::{
    example32_closed, example32_elements, smash_mul_uq, smash_of, verify_example32,
    verify_example32_against, SmashTerm,
};
pub use uq::{
    mono_mul, pbw_normalize, pbw_normalize_with, tensor_alpha, tensor_mul, uq_alpha,
    uq_coproduct, uq_mul, Gen, Pbw, Strategy, UqElement, UqTensor,
};

/// A validated deformation parameter: `q ∉ {0, 1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QParam {
    pub q: Rational,
    /// `1 / (q - q⁻¹)`
    pub bracket_inv: Rational,
}

impl QParam {
    pub fn new(q: Rational) -> Result<Self> {
        if q.is_zero() || q.is_one() || (-&q).is_one() {
            return Err(Error::DegenerateQ);
        }
        let bracket_inv = (&q - q.recip()).recip();
        Ok(QParam { q, bracket_inv })
    }

    /// Quantum integer `[n]_q = (q^n - q^{-n}) / (q - q⁻¹)`.
    pub fn int(&self, n: i64) -> Rational {
        (pow(&self.q, n) - pow(&self.q, -n)) * &self.bracket_inv
    }
}

/// `[n]_q`, rejecting degenerate `q`.
pub fn q_int(n: i64, q: &Rational) -> Result<Rational> {
    Ok(QParam::new(q.clone())?.int(n))
}

/// Parameters of the Hom-smash example: `q`, the structure-map scalars `λ`
/// (on U_q) and `ξ` (on the plane), and the index `l` of the action family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UqParams {
    pub q: QParam,
    pub lambda: Rational,
    pub xi: Rational,
    pub l: u32,
}

impl UqParams {
    pub fn new(q: Rational, lambda: Rational, xi: Rational, l: u32) -> Result<Self> {
        let q = QParam::new(q)?;
        if lambda.is_zero() {
            return Err(Error::ParamConstraintViolation("lambda must be nonzero".into()));
        }
        if xi.is_zero() {
            return Err(Error::ParamConstraintViolation("xi must be nonzero".into()));
        }
        Ok(UqParams { q, lambda, xi, l })
    }

    pub fn with_l(&self, l: u32) -> Self {
        UqParams { l, ..self.clone() }
    }
}
