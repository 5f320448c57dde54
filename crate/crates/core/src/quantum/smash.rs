use rayon::prelude::*;

use super::comb::LinComb;
use super::plane::{qp_beta, qp_mul_beta, rho_l, PlaneMono, QPlaneElement};
use super::uq::{uq_alpha, uq_coproduct, uq_mul, Gen, Pbw, UqElement};
use super::UqParams;
use crate::error::{Error, Result};
use crate::exact::pow;
use crate::report::{CheckReport, Failure};

/// Element of the smash product, stored as a sum of `x^m y^n # F^a E^b K^c`.
pub type SmashTerm = LinComb<(PlaneMono, Pbw)>;

/// `p # h`, expanded bilinearly.
pub fn smash_of(p: &QPlaneElement, h: &UqElement) -> SmashTerm {
    p.bilinear(h, |t, m| SmashTerm::basis((*t, *m)))
}

fn smash_mono(p: PlaneMono, h: Pbw, p2: PlaneMono, h2: Pbw, params: &UqParams) -> SmashTerm {
    let lam = &params.lambda;
    let q = &params.q;
    let delta = uq_coproduct(&uq_alpha(&UqElement::basis(h), 1, lam), q);
    let a2 = qp_beta(&QPlaneElement::basis(p2), -1, params);
    let a = QPlaneElement::basis(p);
    let right = UqElement::basis(h2);
    let mut out = SmashTerm::zero();
    for ((x1, x2), c) in delta.terms() {
        let acted = rho_l(&uq_alpha(&UqElement::basis(*x1), -2, lam), &a2, params);
        let plane = qp_mul_beta(&a, &acted, params);
        let hpart = uq_alpha(&uq_mul(&uq_alpha(&UqElement::basis(*x2), -1, lam), &right, q), 1, lam);
        out.add_scaled(&smash_of(&plane, &hpart), c);
    }
    out
}

/// `(a # h)(a' # h') = a(α⁻²(h₁)·β⁻¹(a')) # α⁻¹(h₂)h'` with `Δ_α = Δ∘α`,
/// twisted products on both factors and the `ρ_l` action.
pub fn smash_mul_uq(t1: &SmashTerm, t2: &SmashTerm, params: &UqParams) -> SmashTerm {
    t1.bilinear(t2, |(p, h), (p2, h2)| smash_mono(*p, *h, *p2, *h2, params))
}

/// Closed form of `(x^m y^n # g)(x^r y^s # G)` at `l = 0` for a generator `g`.
pub fn example32_closed(g: Gen, left: PlaneMono, right: PlaneMono, big_g: &UqElement, params: &UqParams) -> SmashTerm {
    let (m, n, r, s) = (
        i64::from(left.m),
        i64::from(left.n),
        i64::from(right.m),
        i64::from(right.n),
    );
    let (q, lam) = (&params.q, &params.lambda);
    let xi = pow(&params.xi, m + n + r + s);
    let ag = uq_alpha(big_g, 1, lam);
    let times = |gen: Option<Gen>| match gen {
        Some(gen) => uq_mul(&gen.element(), &ag, q),
        None => ag.clone(),
    };
    let mono = |dm: i64, dn: i64| {
        QPlaneElement::basis(PlaneMono::new((m + r + dm) as u32, (n + s + dn) as u32))
    };
    let mut out = SmashTerm::zero();
    match g {
        Gen::K | Gen::KInv => {
            let sign = if g == Gen::K { 1 } else { -1 };
            let c = pow(&q.q, sign * (r - s) + n * r) * &xi * pow(lam, -n - s);
            out.add_scaled(&smash_of(&mono(0, 0), &times(Some(g))), &c);
        }
        Gen::E => {
            let c = pow(&q.q, n * r) * &xi * pow(lam, -n - s + 1);
            out.add_scaled(&smash_of(&mono(0, 0), &times(Some(Gen::E))), &c);
            if s > 0 {
                let c = q.int(s) * pow(&q.q, n * (r + 1)) * &xi * pow(lam, -n - s + 1);
                out.add_scaled(&smash_of(&mono(1, -1), &times(Some(Gen::K))), &c);
            }
        }
        Gen::F => {
            let c = pow(&q.q, s - r + n * r) * &xi * pow(lam, -n - s - 1);
            out.add_scaled(&smash_of(&mono(0, 0), &times(Some(Gen::F))), &c);
            if r > 0 {
                let c = q.int(r) * pow(&q.q, n * (r - 1)) * &xi * pow(lam, -n - s - 1);
                out.add_scaled(&smash_of(&mono(-1, 1), &times(None)), &c);
            }
        }
    }
    out
}

/// The right-hand factors `G` the closed formulas are checked against:
/// `1, E, F, K, K⁻¹, EK`.
pub fn example32_elements() -> Vec<UqElement> {
    [Pbw::UNIT, Pbw::E, Pbw::F, Pbw::K, Pbw::K_INV, Pbw::new(0, 1, 1)]
        .into_iter()
        .map(UqElement::basis)
        .collect()
}

/// Compares `smash_mul_uq` with the closed formulas for every generator on the
/// left, every `m, n, r, s ≤ bounds` and every `G` in [`example32_elements`].
pub fn verify_example32(params: &UqParams, bounds: u32) -> Result<CheckReport> {
    verify_example32_against(params, bounds, |g, a, b, big_g| example32_closed(g, a, b, big_g, params))
}

/// Same scan against an arbitrary candidate formula.
pub fn verify_example32_against<F>(params: &UqParams, bounds: u32, closed: F) -> Result<CheckReport>
where
    F: Fn(Gen, PlaneMono, PlaneMono, &UqElement) -> SmashTerm + Sync,
{
    if params.l != 0 {
        return Err(Error::ParamConstraintViolation(
            "closed smash formulas are only available for l = 0".into(),
        ));
    }
    let gs = example32_elements();
    let b = bounds;
    let mut cases = Vec::new();
    for gi in 0..Gen::ALL.len() {
        for m in 0..=b {
            for n in 0..=b {
                for r in 0..=b {
                    for s in 0..=b {
                        for k in 0..gs.len() {
                            cases.push([gi, m as usize, n as usize, r as usize, s as usize, k]);
                        }
                    }
                }
            }
        }
    }
    let bad: Vec<_> = cases
        .par_iter()
        .filter_map(|c| {
            let g = Gen::ALL[c[0]];
            let left = PlaneMono::new(c[1] as u32, c[2] as u32);
            let right = PlaneMono::new(c[3] as u32, c[4] as u32);
            let lhs = smash_mul_uq(
                &SmashTerm::basis((left, g.monomial())),
                &smash_of(&QPlaneElement::basis(right), &gs[c[5]]),
                params,
            );
            let rhs = closed(g, left, right, &gs[c[5]]);
            (lhs != rhs).then(|| {
                let (l, r) = lhs.aligned(&rhs);
                Failure {
                    equation: format!("smash-closed-form[{:?}]", g),
                    tuple: c.to_vec(),
                    lhs: l,
                    rhs: r,
                }
            })
        })
        .collect();
    let mut rep = CheckReport::new();
    for f in bad {
        rep.record(f);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    fn params() -> UqParams {
        UqParams::new(int(2), int(3), int(5), 0).unwrap()
    }

    fn one_hash(h: Pbw) -> SmashTerm {
        SmashTerm::basis((PlaneMono::ONE, h))
    }

    #[test]
    fn e_times_k() {
        let p = params();
        let got = smash_mul_uq(&one_hash(Pbw::E), &one_hash(Pbw::K), &p);
        assert_eq!(got, SmashTerm::term((PlaneMono::ONE, Pbw::new(0, 1, 1)), int(3)));
    }

    #[test]
    fn k_times_x() {
        let p = params();
        let x = SmashTerm::basis((PlaneMono::new(1, 0), Pbw::UNIT));
        let got = smash_mul_uq(&one_hash(Pbw::K), &x, &p);
        assert_eq!(got, SmashTerm::term((PlaneMono::new(1, 0), Pbw::K), int(10)));
    }

    #[test]
    fn unit_on_the_left_twists() {
        let p = params();
        let (t, h) = (PlaneMono::new(1, 2), Pbw::new(1, 1, -1));
        let got = smash_mul_uq(&one_hash(Pbw::UNIT), &SmashTerm::basis((t, h)), &p);
        let plane = qp_beta(&QPlaneElement::basis(t), 1, &p);
        let uq = uq_alpha(&UqElement::basis(h), 1, &p.lambda);
        assert_eq!(got, smash_of(&plane, &uq));
    }

    #[test]
    fn closed_forms_hold() {
        for p in [params(), UqParams::new(int(3), frac(1, 2), int(2), 0).unwrap()] {
            let rep = verify_example32(&p, 2).unwrap();
            assert!(rep.passed, "{rep}");
        }
        assert!(verify_example32(&params(), 0).unwrap().passed);
    }

    #[test]
    fn perturbed_closed_form_is_caught() {
        let p = params();
        let rep = verify_example32_against(&p, 1, |g, a, b, big_g| {
            let t = example32_closed(g, a, b, big_g, &p);
            if g == Gen::E {
                t.scaled(&p.lambda)
            } else {
                t
            }
        })
        .unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.first_failure().unwrap().equation, "smash-closed-form[E]");
    }

    #[test]
    fn needs_l_zero() {
        assert!(matches!(
            verify_example32(&params().with_l(1), 1),
            Err(Error::ParamConstraintViolation(_))
        ));
    }
}
