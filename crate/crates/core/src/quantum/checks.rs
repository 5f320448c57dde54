use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::comb::LinComb;
use super::plane::{qp_beta, qp_mul_beta, rho_displayed, rho_l, PlaneMono, QPlaneElement};
use super::uq::{
    pbw_normalize_with, tensor_alpha, tensor_mul, uq_alpha, uq_coproduct, uq_mul, Gen, Pbw,
    Strategy, UqElement,
};
use super::{QParam, UqParams};
use crate::exact::pow;
use crate::report::{CheckReport, Failure};

/// Runs `f` on every case in parallel and records mismatches in case order.
fn scan_cases<K, F>(rep: &mut CheckReport, equation: &str, cases: &[Vec<usize>], f: F)
where
    K: Ord + Clone + Send,
    F: Fn(&[usize]) -> (LinComb<K>, LinComb<K>) + Sync,
{
    let bad: Vec<_> = cases
        .par_iter()
        .filter_map(|c| {
            let (l, r) = f(c);
            (l != r).then(|| {
                let (lhs, rhs) = l.aligned(&r);
                Failure {
                    equation: equation.to_string(),
                    tuple: c.clone(),
                    lhs,
                    rhs,
                }
            })
        })
        .collect();
    for failure in bad {
        rep.record(failure);
    }
}

fn words_up_to(len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..Gen::ALL.len()).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

/// Normalizes every generator word of length at most `max_len` leftmost-first,
/// rightmost-first and by folding `uq_mul`, and compares the three results.
pub fn check_pbw_confluence(q: &QParam, max_len: usize) -> CheckReport {
    let cases = words_up_to(max_len);
    let word = |c: &[usize]| c.iter().map(|&i| Gen::ALL[i]).collect::<Vec<_>>();
    let mut rep = CheckReport::new();
    scan_cases(&mut rep, "pbw-confluence", &cases, |c| {
        let w = word(c);
        (
            pbw_normalize_with(&w, q, Strategy::Leftmost),
            pbw_normalize_with(&w, q, Strategy::Rightmost),
        )
    });
    scan_cases(&mut rep, "pbw-product", &cases, |c| {
        let w = word(c);
        let folded = w.iter().fold(UqElement::basis(Pbw::UNIT), |acc, g| uq_mul(&acc, &g.element(), q));
        (pbw_normalize_with(&w, q, Strategy::Leftmost), folded)
    });
    rep
}

/// Monomials with `a, b ≤ max` and `|c| ≤ max`.
fn box_monomials(max: u32) -> Vec<Pbw> {
    let m = max as i32;
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in -m..=m {
                out.push(Pbw::new(a, b, c));
            }
        }
    }
    out
}

/// Monomials with `a + b + |c| ≤ degree`.
fn graded_monomials(degree: u32) -> Vec<Pbw> {
    box_monomials(degree)
        .into_iter()
        .filter(|p| p.a + p.b + p.c.unsigned_abs() <= degree)
        .collect()
}

/// Associativity of `uq_mul` on `samples` random triples of monomials with
/// exponents bounded by `max` in absolute value.
pub fn check_uq_associativity(q: &QParam, max: u32, samples: usize, seed: u64) -> CheckReport {
    let monos = box_monomials(max);
    let idx: Vec<usize> = (0..monos.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<Vec<usize>> = (0..samples)
        .map(|_| (0..3).map(|_| *idx.choose(&mut rng).unwrap()).collect())
        .collect();
    let mut rep = CheckReport::new();
    scan_cases(&mut rep, "uq-associativity", &cases, |c| {
        let [x, y, z] = [0, 1, 2].map(|i| UqElement::basis(monos[c[i]]));
        (
            uq_mul(&uq_mul(&x, &y, q), &z, q),
            uq_mul(&x, &uq_mul(&y, &z, q), q),
        )
    });
    rep
}

fn pairs(n: usize) -> Vec<Vec<usize>> {
    (0..n).flat_map(|i| (0..n).map(move |j| vec![i, j])).collect()
}

/// `Δ(uv) = Δ(u)Δ(v)` for monomials of degree at most `degree`.
pub fn check_coproduct_multiplicative(q: &QParam, degree: u32) -> CheckReport {
    let monos = graded_monomials(degree);
    let mut rep = CheckReport::new();
    scan_cases(&mut rep, "coproduct-multiplicative", &pairs(monos.len()), |c| {
        let (u, v) = (UqElement::basis(monos[c[0]]), UqElement::basis(monos[c[1]]));
        (
            uq_coproduct(&uq_mul(&u, &v, q), q),
            tensor_mul(&uq_coproduct(&u, q), &uq_coproduct(&v, q), q),
        )
    });
    rep
}

/// `α` is multiplicative and `Δ∘α = (α⊗α)∘Δ` on monomials of degree at most `degree`.
pub fn check_alpha_bialgebra_map(params: &UqParams, degree: u32) -> CheckReport {
    let (q, lam) = (&params.q, &params.lambda);
    let monos = graded_monomials(degree);
    let singles: Vec<Vec<usize>> = (0..monos.len()).map(|i| vec![i]).collect();
    let mut rep = CheckReport::new();
    scan_cases(&mut rep, "alpha-comultiplicative", &singles, |c| {
        let u = UqElement::basis(monos[c[0]]);
        (
            uq_coproduct(&uq_alpha(&u, 1, lam), q),
            tensor_alpha(&uq_coproduct(&u, q), 1, lam),
        )
    });
    scan_cases(&mut rep, "alpha-multiplicative", &pairs(monos.len()), |c| {
        let (u, v) = (UqElement::basis(monos[c[0]]), UqElement::basis(monos[c[1]]));
        (
            uq_alpha(&uq_mul(&u, &v, q), 1, lam),
            uq_mul(&uq_alpha(&u, 1, lam), &uq_alpha(&v, 1, lam), q),
        )
    });
    rep
}

/// Compares the extended action `ρ_l` with its generator formulas on
/// `x^m y^n`, `m, n ≤ max`.
pub fn check_rho_extension(params: &UqParams, max: u32) -> CheckReport {
    let mut cases = Vec::new();
    for g in 0..Gen::ALL.len() {
        for m in 0..=max as usize {
            for n in 0..=max as usize {
                cases.push(vec![g, m, n]);
            }
        }
    }
    let mut rep = CheckReport::new();
    scan_cases(&mut rep, "rho-generators", &cases, |c| {
        let (g, t) = (Gen::ALL[c[0]], PlaneMono::new(c[1] as u32, c[2] as u32));
        (
            rho_l(&g.element(), &QPlaneElement::basis(t), params),
            rho_displayed(g, t, params),
        )
    });
    rep
}

/// `ρ_l` with the `E`-part of every element rescaled by `λ⁻¹` per factor of `E`.
/// Not a module structure; used to show the checker has teeth.
pub fn perturbed_rho(h: &UqElement, p: &QPlaneElement, params: &UqParams) -> QPlaneElement {
    let h = h.linear(|m| UqElement::term(*m, pow(&params.lambda, -i64::from(m.b))));
    rho_l(&h, p, params)
}

/// Module and module Hom-algebra axioms for `ρ_l` over generators and plane
/// monomials of degree at most `bound`.
pub fn check_uq_module_hom_algebra(params: &UqParams, bound: u32) -> CheckReport {
    check_uq_module_with(params, bound, rho_l)
}

/// The same axioms for an arbitrary candidate action.
pub fn check_uq_module_with<A>(params: &UqParams, bound: u32, act: A) -> CheckReport
where
    A: Fn(&UqElement, &QPlaneElement, &UqParams) -> QPlaneElement + Sync,
{
    let (q, lam) = (&params.q, &params.lambda);
    let gens: Vec<UqElement> = Gen::ALL.iter().map(|g| g.element()).collect();
    let monos: Vec<QPlaneElement> = PlaneMono::up_to_degree(bound)
        .into_iter()
        .map(QPlaneElement::basis)
        .collect();
    let (ng, nm) = (gens.len(), monos.len());
    let grid = |dims: &[usize]| -> Vec<Vec<usize>> {
        dims.iter().fold(vec![vec![]], |acc, &d| {
            acc.iter()
                .flat_map(|v| {
                    (0..d).map(move |i| {
                        let mut v = v.clone();
                        v.push(i);
                        v
                    })
                })
                .collect()
        })
    };
    let act = &act;
    let mut rep = CheckReport::new();
    scan_cases(&mut rep, "module-alpha", &grid(&[ng, nm]), |c| {
        let (h, p) = (&gens[c[0]], &monos[c[1]]);
        (
            qp_beta(&act(h, p, params), 1, params),
            act(&uq_alpha(h, 1, lam), &qp_beta(p, 1, params), params),
        )
    });
    scan_cases(&mut rep, "module-hom-associativity", &grid(&[ng, ng, nm]), |c| {
        let (h, h2, p) = (&gens[c[0]], &gens[c[1]], &monos[c[2]]);
        let prod = uq_alpha(&uq_mul(h, h2, q), 1, lam);
        (
            act(&uq_alpha(h, 1, lam), &act(h2, p, params), params),
            act(&prod, &qp_beta(p, 1, params), params),
        )
    });
    scan_cases(&mut rep, "module-algebra", &grid(&[ng, nm, nm]), |c| {
        let (h, p, p2) = (&gens[c[0]], &monos[c[1]], &monos[c[2]]);
        let lhs = act(&uq_alpha(h, 2, lam), &qp_mul_beta(p, p2, params), params);
        let delta = uq_coproduct(&uq_alpha(h, 1, lam), q);
        let mut rhs = QPlaneElement::zero();
        for ((h1, h2), coeff) in delta.terms() {
            let l = act(&UqElement::basis(*h1), p, params);
            let r = act(&UqElement::basis(*h2), p2, params);
            rhs.add_scaled(&qp_mul_beta(&l, &r, params), coeff);
        }
        (lhs, rhs)
    });
    rep
}
