use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::comb::LinComb;
use super::QParam;
use crate::exact::{one, pow, Rational};

/// PBW monomial `F^a E^b K^c`; negative `c` stands for powers of `K⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pbw {
    pub a: u32,
    pub b: u32,
    pub c: i32,
}

impl Pbw {
    pub const UNIT: Pbw = Pbw { a: 0, b: 0, c: 0 };
    pub const E: Pbw = Pbw { a: 0, b: 1, c: 0 };
    pub const F: Pbw = Pbw { a: 1, b: 0, c: 0 };
    pub const K: Pbw = Pbw { a: 0, b: 0, c: 1 };
    pub const K_INV: Pbw = Pbw { a: 0, b: 0, c: -1 };

    pub fn new(a: u32, b: u32, c: i32) -> Self {
        Pbw { a, b, c }
    }

    /// The generator word `F..F E..E K..K` spelling this monomial.
    pub fn word(&self) -> Vec<Gen> {
        let k = if self.c >= 0 { Gen::K } else { Gen::KInv };
        std::iter::repeat(Gen::F)
            .take(self.a as usize)
            .chain(std::iter::repeat(Gen::E).take(self.b as usize))
            .chain(std::iter::repeat(k).take(self.c.unsigned_abs() as usize))
            .collect()
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |sym: &str, e: i64| match e {
            0 => {}
            1 => parts.push(sym.to_string()),
            _ => parts.push(format!("{sym}^{e}")),
        };
        push("F", self.a.into());
        push("E", self.b.into());
        push("K", self.c.into());
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Element of U_q(sl2) in the PBW basis.
pub type UqElement = LinComb<Pbw>;
/// Element of U_q(sl2) ⊗ U_q(sl2), keyed by pairs of PBW monomials.
pub type UqTensor = LinComb<(Pbw, Pbw)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    E,
    F,
    K,
    KInv,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::E, Gen::F, Gen::K, Gen::KInv];

    pub fn monomial(self) -> Pbw {
        match self {
            Gen::E => Pbw::E,
            Gen::F => Pbw::F,
            Gen::K => Pbw::K,
            Gen::KInv => Pbw::K_INV,
        }
    }

    pub fn element(self) -> UqElement {
        UqElement::basis(self.monomial())
    }
}

/// Which redex the rewriting engine contracts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

type Word = Vec<Gen>;

/// Contracts the redex at `i, i+1`, or returns `None` when the pair is already ordered.
fn rewrite_pair(x: Gen, y: Gen, q: &QParam) -> Option<Vec<(Word, Rational)>> {
    use Gen::*;
    let q2 = || pow(&q.q, 2);
    let qm2 = || pow(&q.q, -2);
    Some(match (x, y) {
        (E, F) => vec![
            (vec![F, E], one()),
            (vec![K], q.bracket_inv.clone()),
            (vec![KInv], -q.bracket_inv.clone()),
        ],
        (K, E) => vec![(vec![E, K], q2())],
        (K, F) => vec![(vec![F, K], qm2())],
        (KInv, E) => vec![(vec![E, KInv], qm2())],
        (KInv, F) => vec![(vec![F, KInv], q2())],
        (K, KInv) | (KInv, K) => vec![(vec![], one())],
        _ => return None,
    })
}

fn to_pbw(word: &[Gen]) -> Pbw {
    let mut m = Pbw::UNIT;
    for g in word {
        match g {
            Gen::F => m.a += 1,
            Gen::E => m.b += 1,
            Gen::K => m.c += 1,
            Gen::KInv => m.c -= 1,
        }
    }
    m
}

/// Normalizes a generator word with the default (leftmost) strategy.
pub fn pbw_normalize(word: &[Gen], q: &QParam) -> UqElement {
    pbw_normalize_with(word, q, Strategy::Leftmost)
}

/// Rewrites a word into the `F^a E^b K^c` basis, one redex at a time.
pub fn pbw_normalize_with(word: &[Gen], q: &QParam, strategy: Strategy) -> UqElement {
    let mut pending: BTreeMap<Word, Rational> = BTreeMap::new();
    pending.insert(word.to_vec(), one());
    let mut out = UqElement::zero();
    while let Some((w, coeff)) = pending.pop_first() {
        if coeff.is_zero() {
            continue;
        }
        let mut redexes = (0..w.len().saturating_sub(1))
            .filter_map(|i| rewrite_pair(w[i], w[i + 1], q).map(|r| (i, r)));
        let hit = match strategy {
            Strategy::Leftmost => redexes.next(),
            Strategy::Rightmost => redexes.last(),
        };
        let Some((i, replacements)) = hit else {
            out.add_term(to_pbw(&w), coeff);
            continue;
        };
        for (mid, c) in replacements {
            let mut next = w[..i].to_vec();
            next.extend(mid);
            next.extend_from_slice(&w[i + 2..]);
            *pending.entry(next).or_insert_with(Rational::zero) += &coeff * c;
        }
    }
    out
}

/// `m · g` for a single generator on the right, using closed commutation formulas.
fn mul_gen(m: Pbw, g: Gen, q: &QParam) -> UqElement {
    match g {
        Gen::K => UqElement::basis(Pbw { c: m.c + 1, ..m }),
        Gen::KInv => UqElement::basis(Pbw { c: m.c - 1, ..m }),
        Gen::E => UqElement::term(Pbw { b: m.b + 1, ..m }, pow(&q.q, 2 * i64::from(m.c))),
        Gen::F => {
            // F^a E^b K^c F = q^{-2c} F^a (F E^b + E^{b-1} Σ_t (q^{2t} K - q^{-2t} K⁻¹)/(q - q⁻¹)) K^c
            let scale = pow(&q.q, -2 * i64::from(m.c));
            let mut out = UqElement::term(Pbw { a: m.a + 1, ..m }, scale.clone());
            if m.b > 0 {
                let (mut up, mut down) = (Rational::zero(), Rational::zero());
                for t in 0..i64::from(m.b) {
                    up += pow(&q.q, 2 * t);
                    down += pow(&q.q, -2 * t);
                }
                let s = &scale * &q.bracket_inv;
                out.add_term(Pbw { b: m.b - 1, c: m.c + 1, ..m }, &up * &s);
                out.add_term(Pbw { b: m.b - 1, c: m.c - 1, ..m }, -(&down * &s));
            }
            out
        }
    }
}

/// Product of two PBW monomials.
pub fn mono_mul(x: Pbw, y: Pbw, q: &QParam) -> UqElement {
    let mut acc = UqElement::basis(x);
    for g in y.word() {
        acc = acc.linear(|m| mul_gen(*m, g, q));
    }
    acc
}

pub fn uq_mul(u: &UqElement, v: &UqElement, q: &QParam) -> UqElement {
    u.bilinear(v, |x, y| mono_mul(*x, *y, q))
}

/// `α^k`: scales `F^a E^b K^c` by `λ^{k(b-a)}`.
pub fn uq_alpha(u: &UqElement, k: i64, lambda: &Rational) -> UqElement {
    u.linear(|m| UqElement::term(*m, pow(lambda, k * (i64::from(m.b) - i64::from(m.a)))))
}

pub fn tensor_mul(x: &UqTensor, y: &UqTensor, q: &QParam) -> UqTensor {
    x.bilinear(y, |(u1, v1), (u2, v2)| {
        let left = mono_mul(*u1, *u2, q);
        let right = mono_mul(*v1, *v2, q);
        left.bilinear(&right, |l, r| UqTensor::basis((*l, *r)))
    })
}

/// `(α^k ⊗ α^k)` on the tensor square.
pub fn tensor_alpha(x: &UqTensor, k: i64, lambda: &Rational) -> UqTensor {
    x.linear(|(u, v)| {
        let e = i64::from(u.b) + i64::from(v.b) - i64::from(u.a) - i64::from(v.a);
        UqTensor::term((*u, *v), pow(lambda, k * e))
    })
}

fn gen_coproduct(g: Gen) -> UqTensor {
    match g {
        Gen::E => UqTensor::from_terms([((Pbw::UNIT, Pbw::E), one()), ((Pbw::E, Pbw::K), one())]),
        Gen::F => UqTensor::from_terms([((Pbw::K_INV, Pbw::F), one()), ((Pbw::F, Pbw::UNIT), one())]),
        Gen::K => UqTensor::basis((Pbw::K, Pbw::K)),
        Gen::KInv => UqTensor::basis((Pbw::K_INV, Pbw::K_INV)),
    }
}

/// Classical coproduct, extended from the generators as an algebra map.
pub fn uq_coproduct(u: &UqElement, q: &QParam) -> UqTensor {
    u.linear(|m| {
        m.word()
            .into_iter()
            .fold(UqTensor::basis((Pbw::UNIT, Pbw::UNIT)), |acc, g| {
                tensor_mul(&acc, &gen_coproduct(g), q)
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    fn q2() -> QParam {
        QParam::new(int(2)).unwrap()
    }

    #[test]
    fn defining_relations() {
        let q = q2();
        assert_eq!(pbw_normalize(&[Gen::K, Gen::E], &q), UqElement::term(Pbw::new(0, 1, 1), int(4)));
        let ef = pbw_normalize(&[Gen::E, Gen::F], &q);
        // 1/(q - q⁻¹) = 2/3 at q = 2
        let expect = UqElement::from_terms([
            (Pbw::new(1, 1, 0), int(1)),
            (Pbw::K, frac(2, 3)),
            (Pbw::K_INV, frac(-2, 3)),
        ]);
        assert_eq!(ef, expect);
        assert_eq!(pbw_normalize(&[], &q), UqElement::basis(Pbw::UNIT));
        assert_eq!(pbw_normalize(&[Gen::K, Gen::KInv], &q), UqElement::basis(Pbw::UNIT));
    }

    #[test]
    fn closed_formulas_match_rewriting() {
        let q = QParam::new(frac(1, 3)).unwrap();
        let words: [&[Gen]; 4] = [
            &[Gen::E, Gen::E, Gen::F],
            &[Gen::E, Gen::KInv, Gen::F, Gen::F, Gen::E],
            &[Gen::K, Gen::E, Gen::E, Gen::F, Gen::K],
            &[Gen::F, Gen::E, Gen::E, Gen::E, Gen::F, Gen::F],
        ];
        for w in words {
            let by_mul = w.iter().fold(UqElement::basis(Pbw::UNIT), |acc, g| {
                uq_mul(&acc, &g.element(), &q)
            });
            assert_eq!(by_mul, pbw_normalize(w, &q), "{w:?}");
            assert_eq!(by_mul, pbw_normalize_with(w, &q, Strategy::Rightmost), "{w:?}");
        }
    }

    #[test]
    fn commutator_of_generators() {
        let q = q2();
        let (e, f) = (Gen::E.element(), Gen::F.element());
        let comm = &uq_mul(&e, &f, &q) - &uq_mul(&f, &e, &q);
        let expect = (&Gen::K.element() - &Gen::KInv.element()).scaled(&frac(2, 3));
        assert_eq!(comm, expect);
    }

    #[test]
    fn coproduct_of_e_squared() {
        let q = q2();
        let e2 = UqElement::basis(Pbw::new(0, 2, 0));
        let expect = UqTensor::from_terms([
            ((Pbw::UNIT, Pbw::new(0, 2, 0)), int(1)),
            ((Pbw::E, Pbw::new(0, 1, 1)), int(5)),
            ((Pbw::new(0, 2, 0), Pbw::new(0, 0, 2)), int(1)),
        ]);
        assert_eq!(uq_coproduct(&e2, &q), expect);
        assert_eq!(
            uq_coproduct(&Gen::KInv.element(), &q),
            UqTensor::basis((Pbw::K_INV, Pbw::K_INV))
        );
    }

    #[test]
    fn alpha_powers() {
        let l = int(3);
        assert_eq!(uq_alpha(&Gen::E.element(), 1, &l), Gen::E.element().scaled(&l));
        assert_eq!(uq_alpha(&Gen::F.element(), -1, &l), Gen::F.element().scaled(&l));
        let x = UqElement::from_terms([(Pbw::new(2, 1, -1), int(1)), (Pbw::K, int(7))]);
        assert_eq!(uq_alpha(&x, 0, &l), x);
        assert_eq!(uq_alpha(&uq_alpha(&x, 2, &l), -2, &l), x);
    }
}
