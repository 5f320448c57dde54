use std::fmt;

use super::comb::LinComb;
use super::uq::{uq_alpha, Gen, Pbw, UqElement};
use super::{QParam, UqParams};
use crate::exact::{pow, Rational};

/// Quantum-plane monomial `x^m y^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneMono {
    pub m: u32,
    pub n: u32,
}

impl PlaneMono {
    pub const ONE: PlaneMono = PlaneMono { m: 0, n: 0 };

    pub fn new(m: u32, n: u32) -> Self {
        PlaneMono { m, n }
    }

    pub fn degree(&self) -> u32 {
        self.m + self.n
    }

    /// All monomials of total degree at most `bound`, ordered by `(m, n)`.
    pub fn up_to_degree(bound: u32) -> Vec<PlaneMono> {
        (0..=bound)
            .flat_map(|m| (0..=bound - m).map(move |n| PlaneMono { m, n }))
            .collect()
    }
}

impl fmt::Display for PlaneMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (sym, e) in [("x", self.m), ("y", self.n)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_string()),
                _ => parts.push(format!("{sym}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

pub type QPlaneElement = LinComb<PlaneMono>;

/// Untwisted product: `(x^m y^n)(x^r y^s) = q^{nr} x^{m+r} y^{n+s}`.
pub fn qp_mul(p1: &QPlaneElement, p2: &QPlaneElement, q: &QParam) -> QPlaneElement {
    p1.bilinear(p2, |a, b| {
        QPlaneElement::term(
            PlaneMono::new(a.m + b.m, a.n + b.n),
            pow(&q.q, i64::from(a.n) * i64::from(b.m)),
        )
    })
}

/// `β^k`: `x^m y^n ↦ ξ^{k(m+n)} λ^{-kn} x^m y^n`.
pub fn qp_beta(p: &QPlaneElement, k: i64, params: &UqParams) -> QPlaneElement {
    p.linear(|t| {
        let c = pow(&params.xi, k * i64::from(t.degree())) * pow(&params.lambda, -k * i64::from(t.n));
        QPlaneElement::term(*t, c)
    })
}

/// Twisted product `μ_β = β ∘ μ`.
pub fn qp_mul_beta(p1: &QPlaneElement, p2: &QPlaneElement, params: &UqParams) -> QPlaneElement {
    qp_beta(&qp_mul(p1, p2, &params.q), 1, params)
}

fn sigma_gen(g: Gen, t: PlaneMono, q: &QParam) -> QPlaneElement {
    match g {
        Gen::E if t.n == 0 => QPlaneElement::zero(),
        Gen::E => QPlaneElement::term(PlaneMono::new(t.m + 1, t.n - 1), q.int(t.n.into())),
        Gen::F if t.m == 0 => QPlaneElement::zero(),
        Gen::F => QPlaneElement::term(PlaneMono::new(t.m - 1, t.n + 1), q.int(t.m.into())),
        Gen::K => QPlaneElement::term(t, pow(&q.q, i64::from(t.m) - i64::from(t.n))),
        Gen::KInv => QPlaneElement::term(t, pow(&q.q, i64::from(t.n) - i64::from(t.m))),
    }
}

/// Classical action of U_q(sl2) on the quantum plane.
pub fn sigma(h: &UqElement, p: &QPlaneElement, q: &QParam) -> QPlaneElement {
    h.linear(|mono: &Pbw| {
        // rightmost generator acts first
        mono.word()
            .into_iter()
            .rev()
            .fold(p.clone(), |acc, g| acc.linear(|t| sigma_gen(g, *t, q)))
    })
}

/// `ρ_l(h, p) = σ(α^{l+1}(h))(β(p))`.
pub fn rho_l(h: &UqElement, p: &QPlaneElement, params: &UqParams) -> QPlaneElement {
    let h = uq_alpha(h, i64::from(params.l) + 1, &params.lambda);
    sigma(&h, &qp_beta(p, 1, params), &params.q)
}

/// The generator formulas for `ρ_l` written out monomial by monomial.
pub fn rho_displayed(g: Gen, t: PlaneMono, params: &UqParams) -> QPlaneElement {
    let (m, n, l) = (i64::from(t.m), i64::from(t.n), i64::from(params.l));
    let (lam, xi, q) = (&params.lambda, &params.xi, &params.q);
    let xi_mn = pow(xi, m + n);
    match g {
        Gen::E if n == 0 => QPlaneElement::zero(),
        Gen::E => QPlaneElement::term(
            PlaneMono::new(t.m + 1, t.n - 1),
            q.int(n) * &xi_mn * pow(lam, l - n + 1),
        ),
        Gen::F if m == 0 => QPlaneElement::zero(),
        Gen::F => QPlaneElement::term(
            PlaneMono::new(t.m - 1, t.n + 1),
            q.int(m) * &xi_mn * pow(lam, -l - n - 1),
        ),
        // P(q^{±1} ξ x, q^{∓1} ξ λ⁻¹ y) on P = x^m y^n
        Gen::K | Gen::KInv => {
            let s = if g == Gen::K { 1 } else { -1 };
            let c: Rational = pow(&q.q, s * (m - n)) * &xi_mn * pow(lam, -n);
            QPlaneElement::term(t, c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    fn params(l: u32) -> UqParams {
        UqParams::new(int(2), int(3), int(5), l).unwrap()
    }

    fn mono(m: u32, n: u32) -> QPlaneElement {
        QPlaneElement::basis(PlaneMono::new(m, n))
    }

    #[test]
    fn plane_relation_and_products() {
        let q = QParam::new(int(2)).unwrap();
        assert_eq!(qp_mul(&mono(0, 1), &mono(1, 0), &q), mono(1, 1).scaled(&int(2)));
        assert_eq!(qp_mul(&mono(1, 1), &mono(1, 1), &q), mono(2, 2).scaled(&int(2)));
        let p = QPlaneElement::from_terms([(PlaneMono::new(2, 1), frac(1, 3)), (PlaneMono::ONE, int(4))]);
        assert_eq!(qp_mul(&mono(0, 0), &p, &q), p);
    }

    #[test]
    fn beta_powers() {
        let pr = params(0);
        let y = mono(0, 1);
        assert_eq!(qp_beta(&y, 1, &pr), y.scaled(&frac(5, 3)));
        assert_eq!(qp_beta(&mono(1, 0), -1, &pr), mono(1, 0).scaled(&frac(1, 5)));
        assert_eq!(qp_beta(&y, 0, &pr), y);
    }

    #[test]
    fn rho_examples() {
        for l in 0..3 {
            let pr = params(l);
            // ρ_l(E, y) = ξ λ^l x
            let expect = mono(1, 0).scaled(&(int(5) * pow(&int(3), l.into())));
            assert_eq!(rho_l(&Gen::E.element(), &mono(0, 1), &pr), expect);
            let p = QPlaneElement::from_terms([(PlaneMono::new(1, 2), int(1)), (PlaneMono::new(0, 3), int(2))]);
            assert_eq!(rho_l(&UqElement::basis(Pbw::UNIT), &p, &pr), qp_beta(&p, 1, &pr));
        }
        // ρ_0(K, xy) = ξ² λ⁻¹ xy
        assert_eq!(rho_l(&Gen::K.element(), &mono(1, 1), &params(0)), mono(1, 1).scaled(&frac(25, 3)));
    }

    #[test]
    fn extension_reproduces_generator_formulas() {
        for l in 0..3 {
            let pr = params(l);
            for t in (0..=4).flat_map(|m| (0..=4).map(move |n| PlaneMono::new(m, n))) {
                for g in Gen::ALL {
                    let p = QPlaneElement::basis(t);
                    assert_eq!(rho_l(&g.element(), &p, &pr), rho_displayed(g, t, &pr), "{g:?} {t}");
                }
            }
        }
    }
}
