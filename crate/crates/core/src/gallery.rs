//! Ready-made instances: the worked examples (the `k² ⊗ k²` twisting family,
//! the two-dimensional Hom-algebra and its Hom-twistor, the Hom-twisting
//! families on it, the Clifford process, the (α_A, α_B) examples, the
//! U_q(sl2) setup) plus a few auxiliary presets (group algebras of C₂ and C₃,
//! Sweedler's four-dimensional Hopf algebra acting on `k[y]/(y²)`).
//!
//! Every constructor takes exact parameters and returns a [`Bundle`] of named
//! objects; [`build`] dispatches on a name and a parameter map, and
//! [`check_claims`] runs the checker each instance is supposed to satisfy.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{check_associative, check_hom_algebra, yau_twist_algebra, HomAlgebra, LinearMap};
use crate::coalgebra::{check_hom_bialgebra, HomBialgebra, HomCoalgebra};
use crate::error::{Error, Result};
use crate::exact::{int, one, zero, Matrix, Rational};
use crate::quantum::{check_rho_extension, check_uq_module_hom_algebra, UqParams};
use crate::report::CheckReport;
use crate::smash::{check_module_hom_algebra, yau_twist_module_algebra, ActionTable, CoactionTable, Side};
use crate::twisted::{
    alpha_ab_from_classical, alpha_ab_ttp, check_alpha_ab_twisting_map, check_hom_twisting_map,
    check_twisting_map, clifford as clifford_process, clifford_algebra, hom_ttp, ttp, CliffordParams,
    TwistingMap,
};
use crate::twistor::{check_hom_twistor, deform, Operator2, Operator3};

/// Anything a manifest or a gallery entry can name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Bialgebra(HomBialgebra),
    LinearMap(LinearMap),
    Operator2(Operator2),
    Operator3(Operator3),
    Twisting(TwistingMap),
    Action(ActionTable),
    Coaction(CoactionTable),
    Quantum(UqParams),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "hom_algebra",
            Object::Coalgebra(_) => "hom_coalgebra",
            Object::Bialgebra(_) => "hom_bialgebra",
            Object::LinearMap(_) => "linear_map",
            Object::Operator2(_) => "operator2",
            Object::Operator3(_) => "operator3",
            Object::Twisting(_) => "twisting_map",
            Object::Action(_) => "action",
            Object::Coaction(_) => "coaction",
            Object::Quantum(_) => "uq_setup",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// A worked example with published coefficient formulas.
    Example,
    /// A preset added to exercise the constructions.
    Auxiliary,
}

/// Named objects produced by one gallery entry, in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    pub name: String,
    pub provenance: Provenance,
    pub objects: Vec<(String, Object)>,
}

macro_rules! accessor {
    ($fn:ident, $variant:ident, $ty:ty, $kind:literal) => {
        pub fn $fn(&self, key: &str) -> Result<&$ty> {
            match self.get(key)? {
                Object::$variant(x) => Ok(x),
                other => Err(Error::WrongKind {
                    name: key.to_string(),
                    expected: $kind.to_string(),
                    found: other.kind().to_string(),
                }),
            }
        }
    };
}

impl Bundle {
    fn new(name: &str, provenance: Provenance) -> Self {
        Bundle {
            name: name.to_string(),
            provenance,
            objects: Vec::new(),
        }
    }

    fn with(mut self, key: &str, object: Object) -> Self {
        self.objects.push((key.to_string(), object));
        self
    }

    pub fn get(&self, key: &str) -> Result<&Object> {
        self.objects
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, o)| o)
            .ok_or_else(|| Error::UnknownName(format!("{}.{key}", self.name)))
    }

    accessor!(algebra, Algebra, HomAlgebra, "hom_algebra");
    accessor!(bialgebra, Bialgebra, HomBialgebra, "hom_bialgebra");
    accessor!(linear_map, LinearMap, LinearMap, "linear_map");
    accessor!(operator2, Operator2, Operator2, "operator2");
    accessor!(twisting, Twisting, TwistingMap, "twisting_map");
    accessor!(action, Action, ActionTable, "action");
    accessor!(quantum, Quantum, UqParams, "uq_setup");
}

/// Every name accepted by [`build`].
pub const NAMES: [&str; 12] = [
    "ttp_k2_lambda",
    "homalg_2dim",
    "homtwistor_2dim",
    "homtwist_R1",
    "homtwist_R2",
    "homtwist_Dk2",
    "clifford",
    "sweedler_h4",
    "group_algebra",
    "uq_setup",
    "alpha_ttp_flip",
    "alpha_ttp_clifford",
];

pub type Params = BTreeMap<String, Rational>;

/// Pulls named parameters out of a map, rejecting leftovers.
struct Reader {
    entry: &'static str,
    params: Params,
}

impl Reader {
    fn required(&mut self, key: &str) -> Result<Rational> {
        self.params.remove(key).ok_or_else(|| {
            Error::ParamConstraintViolation(format!("{} needs parameter {key}", self.entry))
        })
    }

    fn or(&mut self, key: &str, default: Rational) -> Rational {
        self.params.remove(key).unwrap_or(default)
    }

    fn finish(self) -> Result<()> {
        match self.params.keys().next() {
            Some(k) => Err(Error::ParamConstraintViolation(format!(
                "{} has no parameter {k}",
                self.entry
            ))),
            None => Ok(()),
        }
    }
}

fn small_int(x: &Rational, what: &str) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::ParamConstraintViolation(format!("{what} must be an integer")));
    }
    i64::try_from(x.to_integer()).map_err(|_| Error::ParamConstraintViolation(format!("{what} is out of range")))
}

/// Builds the gallery entry `name` from a parameter map.
pub fn build(name: &str, params: &Params) -> Result<Bundle> {
    let entry = NAMES
        .iter()
        .find(|n| **n == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let mut r = Reader {
        entry,
        params: params.clone(),
    };
    let bundle = match name {
        "ttp_k2_lambda" => ttp_k2_lambda(&r.required("lambda")?)?,
        "homalg_2dim" | "homtwistor_2dim" => {
            let (a, l1, l2) = (r.required("a")?, r.required("lambda1")?, r.required("lambda2")?);
            if name == "homalg_2dim" {
                homalg_2dim(&a, &l1, &l2)?
            } else {
                homtwistor_2dim(&a, &l1, &l2)?
            }
        }
        "homtwist_R1" | "homtwist_R2" => {
            let (a, l1, l2) = (r.or("a", one()), r.required("lambda1")?, r.or("lambda2", zero()));
            let mut coeffs: [Rational; 5] = Default::default();
            for (i, c) in coeffs.iter_mut().enumerate() {
                *c = r.required(&format!("a{}", i + 1))?;
            }
            if name == "homtwist_R1" {
                homtwist_r1(&a, &l1, &l2, &coeffs)?
            } else {
                homtwist_r2(&a, &l1, &l2, &coeffs)?
            }
        }
        "homtwist_Dk2" => {
            let (a, l1, l2) = (r.or("a", one()), r.required("lambda1")?, r.or("lambda2", zero()));
            homtwist_dk2(&a, &l1, &l2, &r.required("a1")?, &r.required("a2")?)?
        }
        "clifford" => clifford(&r.required("q")?)?,
        "sweedler_h4" => sweedler_h4(&r.or("c", one()))?,
        "group_algebra" => group_algebra(small_int(&r.required("n")?, "n")?)?,
        "uq_setup" => {
            let l = small_int(&r.or("l", zero()), "l")?;
            let l = u32::try_from(l).map_err(|_| Error::ParamConstraintViolation("l must be non-negative".into()))?;
            uq_setup(r.required("q")?, r.required("lambda")?, r.required("xi")?, l)?
        }
        "alpha_ttp_flip" => alpha_ttp_flip()?,
        "alpha_ttp_clifford" => alpha_ttp_clifford(&r.required("q")?)?,
        _ => unreachable!(),
    };
    r.finish()?;
    Ok(bundle)
}

/// `k²` with `e_i e_j = δ_ij e_i` and identity structure map.
pub fn k2() -> HomAlgebra {
    group_like_diagonal(2)
}

fn group_like_diagonal(n: usize) -> HomAlgebra {
    HomAlgebra::from_fn(n, Matrix::identity(n), |i, j| if i == j { vec![(i, one())] } else { vec![] })
        .expect("diagonal algebra is well formed")
}

/// The one-parameter family of twisting maps on `k² ⊗ k²`.
pub fn k2_lambda_map(lambda: &Rational) -> TwistingMap {
    let l = lambda.clone();
    let m = &l - one();
    let n = one() - &l;
    // images of e_b ⊗ e_a, coefficients on e_1⊗e_1, e_1⊗e_2, e_2⊗e_1, e_2⊗e_2
    let images = [
        [l.clone(), l.clone(), l.clone(), m.clone()],
        [n.clone(), -l.clone(), n.clone(), n.clone()],
        [n.clone(), n.clone(), -l.clone(), n.clone()],
        [m, l.clone(), l.clone(), l],
    ];
    TwistingMap::from_fn(2, 2, |b, a| {
        (0..4).map(|o| (o / 2, o % 2, images[b * 2 + a][o].clone())).collect()
    })
}

pub fn ttp_k2_lambda(lambda: &Rational) -> Result<Bundle> {
    let r = k2_lambda_map(lambda);
    let product = ttp(&k2(), &k2(), &r)?;
    Ok(Bundle::new("ttp_k2_lambda", Provenance::Example)
        .with("A", Object::Algebra(k2()))
        .with("B", Object::Algebra(k2()))
        .with("R", Object::Twisting(r))
        .with("product", Object::Algebra(product)))
}

fn require_two_dim(a: &Rational, l2: &Rational) -> Result<()> {
    if l2.is_one() {
        return Err(Error::ParamConstraintViolation("lambda2 must differ from 1".into()));
    }
    if a.is_zero() {
        return Err(Error::ParamConstraintViolation("a must be nonzero".into()));
    }
    Ok(())
}

/// The two-dimensional Hom-associative algebra `D(a, λ₁, λ₂)`.
pub fn two_dim_algebra(a: &Rational, l1: &Rational, l2: &Rational) -> Result<HomAlgebra> {
    require_two_dim(a, l2)?;
    let d = one() - l2;
    let mixed = vec![(0, l1 * a), (1, l2 * a)];
    let e22 = vec![
        (0, l1 * l1 * (one() - int(2) * l2) * a / (&d * &d)),
        (1, int(2) * l1 * l2 * a / &d),
    ];
    let alpha = Matrix::from_rows(vec![vec![one(), l1.clone()], vec![zero(), l2.clone()]])?;
    HomAlgebra::from_fn(2, alpha, |i, j| match (i, j) {
        (0, 0) => vec![(0, a.clone())],
        (1, 1) => e22.clone(),
        _ => mixed.clone(),
    })
}

pub fn homalg_2dim(a: &Rational, l1: &Rational, l2: &Rational) -> Result<Bundle> {
    Ok(Bundle::new("homalg_2dim", Provenance::Example).with("D", Object::Algebra(two_dim_algebra(a, l1, l2)?)))
}

/// The Hom-twistor of the two-dimensional algebra.
pub fn two_dim_twistor(l1: &Rational, l2: &Rational) -> Result<Operator2> {
    if l2.is_one() {
        return Err(Error::ParamConstraintViolation("lambda2 must differ from 1".into()));
    }
    let t = l1 / (one() - l2);
    let mut m = Matrix::zeros(4, 4);
    m[(0, 0)] = one();
    m[(0, 1)] = t.clone();
    m[(2, 2)] = one();
    m[(2, 3)] = t;
    Operator2::new(2, m)
}

pub fn homtwistor_2dim(a: &Rational, l1: &Rational, l2: &Rational) -> Result<Bundle> {
    let d = two_dim_algebra(a, l1, l2)?;
    let t = two_dim_twistor(l1, l2)?;
    let deformed = deform(&d, &t)?;
    Ok(Bundle::new("homtwistor_2dim", Provenance::Example)
        .with("D", Object::Algebra(d))
        .with("T", Object::Operator2(t))
        .with("deformed", Object::Algebra(deformed)))
}

fn require_lambda_family(l1: &Rational, l2: &Rational) -> Result<()> {
    if !l2.is_zero() {
        return Err(Error::ParamConstraintViolation(
            "this family is defined for lambda2 = 0".into(),
        ));
    }
    if l1.is_zero() {
        return Err(Error::ParamConstraintViolation("lambda1 must be nonzero".into()));
    }
    Ok(())
}

/// `R₁` (`shift = 0`) and `R₂` (`shift = 1`) share all but a few terms.
fn r_family(l1: &Rational, c: &[Rational; 5], shift: &Rational) -> Result<TwistingMap> {
    require_lambda_family(l1, &zero())?;
    let [a1, a2, a3, a4, a5] = c;
    let h = one() / (int(2) * l1);
    let s = shift;
    // images of e_b ⊗ e_a on e_1⊗e_1, e_1⊗e_2, e_2⊗e_1, e_2⊗e_2
    let images: [[Rational; 4]; 4] = [
        [s.clone(), zero(), zero(), zero()],
        [a1.clone(), a2.clone(), s - a2 - a1 / l1, zero()],
        [
            a3.clone(),
            -(&h * (a1 + a3 - a4 + a5 + int(2) * a2 * l1 - int(2) * l1 * s)),
            &h * (a1 - a3 - a4 + a5 + int(2) * a2 * l1),
            zero(),
        ],
        [
            l1 * (a1 + a3 - a4 - a5) / int(2),
            a4.clone(),
            a5.clone(),
            -(&h * (a1 + a3 + a4 + a5 - int(2) * l1 * s)),
        ],
    ];
    Ok(TwistingMap::from_fn(2, 2, |b, a| {
        (0..4).map(|o| (o / 2, o % 2, images[b * 2 + a][o].clone())).collect()
    }))
}

fn homtwist_family(
    name: &str,
    a: &Rational,
    l1: &Rational,
    l2: &Rational,
    c: &[Rational; 5],
    shift: Rational,
) -> Result<Bundle> {
    require_lambda_family(l1, l2)?;
    let d = two_dim_algebra(a, l1, l2)?;
    let r = r_family(l1, c, &shift)?;
    let product = hom_ttp(&d, &d, &r)?;
    Ok(Bundle::new(name, Provenance::Example)
        .with("D", Object::Algebra(d))
        .with("R", Object::Twisting(r))
        .with("product", Object::Algebra(product)))
}

pub fn homtwist_r1(a: &Rational, l1: &Rational, l2: &Rational, c: &[Rational; 5]) -> Result<Bundle> {
    homtwist_family("homtwist_R1", a, l1, l2, c, zero())
}

pub fn homtwist_r2(a: &Rational, l1: &Rational, l2: &Rational, c: &[Rational; 5]) -> Result<Bundle> {
    homtwist_family("homtwist_R2", a, l1, l2, c, one())
}

/// Hom-twisting map `k² ⊗ D → D ⊗ k²`.
pub fn dk2_map(l1: &Rational, a1: &Rational, a2: &Rational) -> Result<TwistingMap> {
    let row = [a1.clone(), a2.clone(), -(a1 / l1), -(a2 / l1)];
    if l1.is_zero() {
        return Err(Error::ParamConstraintViolation("lambda1 must be nonzero".into()));
    }
    Ok(TwistingMap::from_fn(2, 2, |f, e| {
        if e == 0 {
            return vec![];
        }
        let scale = if f == 0 { one() } else { l1.clone() };
        (0..4).map(|o| (o / 2, o % 2, &row[o] * &scale)).collect()
    }))
}

pub fn homtwist_dk2(a: &Rational, l1: &Rational, l2: &Rational, a1: &Rational, a2: &Rational) -> Result<Bundle> {
    require_lambda_family(l1, l2)?;
    let d = two_dim_algebra(a, l1, l2)?;
    let r = dk2_map(l1, a1, a2)?;
    let product = hom_ttp(&d, &k2(), &r)?;
    Ok(Bundle::new("homtwist_Dk2", Provenance::Example)
        .with("D", Object::Algebra(d))
        .with("B", Object::Algebra(k2()))
        .with("R", Object::Twisting(r))
        .with("product", Object::Algebra(product)))
}

fn swap2() -> Matrix {
    Matrix::permutation(&[1, 0])
}

/// Clifford process on `(k²)_swap` along `σ = swap`.
pub fn clifford(q: &Rational) -> Result<Bundle> {
    let a = yau_twist_algebra(&k2(), &swap2())?;
    let c = clifford_process(&a, &CliffordParams::new(q.clone(), swap2())?)?;
    Ok(Bundle::new("clifford", Provenance::Example)
        .with("A", Object::Algebra(a))
        .with("sigma", Object::LinearMap(LinearMap::new(swap2())))
        .with("C", Object::Algebra(c.c_kq))
        .with("R", Object::Twisting(c.twisting))
        .with("algebra", Object::Algebra(c.algebra)))
}

/// Sweedler's Hopf algebra with basis `1, g, x, gx`.
pub fn sweedler_bialgebra() -> HomBialgebra {
    // g^i x^j has index i + 2j
    let alg = HomAlgebra::from_fn(4, Matrix::identity(4), |u, v| {
        let (i, j, k, l) = (u % 2, u / 2, v % 2, v / 2);
        if j + l > 1 {
            return vec![];
        }
        let sign = if j * k == 1 { int(-1) } else { one() };
        vec![((i + k) % 2 + 2 * (j + l), sign)]
    })
    .expect("4-dim algebra");
    let co = HomCoalgebra::from_fn(4, Matrix::identity(4), |u| match u {
        0 => vec![(0, 0, one())],
        1 => vec![(1, 1, one())],
        2 => vec![(2, 0, one()), (1, 2, one())],
        _ => vec![(3, 1, one()), (0, 3, one())],
    })
    .expect("4-dim coalgebra");
    HomBialgebra::new(alg, co).expect("matching dimensions")
}

/// `k[y]/(y²)` with basis `1, y`.
pub fn dual_numbers() -> HomAlgebra {
    HomAlgebra::from_fn(2, Matrix::identity(2), |i, j| if i + j < 2 { vec![(i + j, one())] } else { vec![] })
        .expect("2-dim algebra")
}

/// `g` negates `y`, `x` sends `y` to `1` and kills `1`; the same formulas on either side.
pub fn sweedler_action(side: Side) -> ActionTable {
    ActionTable::from_fn(side, 4, Matrix::identity(2), |h, m| {
        let gy = |m: usize| if m == 0 { one() } else { int(-1) };
        match (h, m) {
            (0, m) => vec![(m, one())],
            (1, m) => vec![(m, gy(m))],
            (_, 0) => vec![],
            // (gx)·y = g·1 on the left, y·(gx) = (−y)·x on the right
            (2, 1) => vec![(0, one())],
            _ => vec![(0, if side == Side::Left { one() } else { int(-1) })],
        }
    })
    .expect("action shape")
}

/// Sweedler preset, classical and twisted by `α_H: x ↦ c x`, `α_A: y ↦ c⁻¹ y`.
pub fn sweedler_h4(c: &Rational) -> Result<Bundle> {
    if c.is_zero() {
        return Err(Error::ParamConstraintViolation("c must be nonzero".into()));
    }
    let h = sweedler_bialgebra();
    let a = dual_numbers();
    let alpha_h = Matrix::diag(&[one(), one(), c.clone(), c.clone()]);
    let alpha_a = Matrix::diag(&[one(), c.recip()]);
    let left = sweedler_action(Side::Left);
    let right = sweedler_action(Side::Right);
    let tl = yau_twist_module_algebra(&h, &a, &left, &alpha_h, &alpha_a)?;
    let tr = yau_twist_module_algebra(&h, &a, &right, &alpha_h, &alpha_a)?;
    Ok(Bundle::new("sweedler_h4", Provenance::Auxiliary)
        .with("H", Object::Bialgebra(h))
        .with("A", Object::Algebra(a))
        .with("action", Object::Action(left))
        .with("action_right", Object::Action(right))
        .with("alpha_h", Object::LinearMap(LinearMap::new(alpha_h)))
        .with("alpha_a", Object::LinearMap(LinearMap::new(alpha_a)))
        .with("H_hom", Object::Bialgebra(tl.bialgebra))
        .with("A_hom", Object::Algebra(tl.algebra))
        .with("action_hom", Object::Action(tl.action))
        .with("action_right_hom", Object::Action(tr.action)))
}

/// Group bialgebra `k[C_n]` with `Δ(g) = g ⊗ g`.
pub fn cyclic_group_bialgebra(n: usize) -> HomBialgebra {
    let alg = HomAlgebra::from_fn(n, Matrix::identity(n), |i, j| vec![((i + j) % n, one())]).expect("group algebra");
    let co = HomCoalgebra::from_fn(n, Matrix::identity(n), |i| vec![(i, i, one())]).expect("group coalgebra");
    HomBialgebra::new(alg, co).expect("matching dimensions")
}

pub fn group_algebra(n: i64) -> Result<Bundle> {
    if !(2..=3).contains(&n) {
        return Err(Error::ParamConstraintViolation("n must be 2 or 3".into()));
    }
    let h = cyclic_group_bialgebra(n as usize);
    Ok(Bundle::new("group_algebra", Provenance::Auxiliary)
        .with("A", Object::Algebra(h.algebra().clone()))
        .with("H", Object::Bialgebra(h)))
}

pub fn uq_setup(q: Rational, lambda: Rational, xi: Rational, l: u32) -> Result<Bundle> {
    let params = UqParams::new(q, lambda, xi, l)?;
    Ok(Bundle::new("uq_setup", Provenance::Example).with("U", Object::Quantum(params)))
}

fn alpha_bundle(
    name: &str,
    a: HomAlgebra,
    b: HomAlgebra,
    alpha_a: Matrix,
    alpha_b: Matrix,
    classical: &TwistingMap,
) -> Result<Bundle> {
    let r = alpha_ab_from_classical(&a, &b, classical, &alpha_a, &alpha_b)?;
    let built = alpha_ab_ttp(&a, &b, &alpha_a, &alpha_b, &r)?;
    Ok(Bundle::new(name, Provenance::Example)
        .with("A", Object::Algebra(a))
        .with("B", Object::Algebra(b))
        .with("alpha_a", Object::LinearMap(LinearMap::new(alpha_a)))
        .with("alpha_b", Object::LinearMap(LinearMap::new(alpha_b)))
        .with("P", Object::Twisting(classical.clone()))
        .with("R", Object::Twisting(r))
        .with("product", Object::Algebra(built.algebra)))
}

/// `R(b ⊗ a) = α_A(a) ⊗ α_B(b)` on `k² ⊗ k²` with `α_A = swap`, `α_B = id`.
pub fn alpha_ttp_flip() -> Result<Bundle> {
    alpha_bundle("alpha_ttp_flip", k2(), k2(), swap2(), Matrix::identity(2), &TwistingMap::flip(2, 2))
}

/// `R(1 ⊗ a) = σ(a) ⊗ 1`, `R(v ⊗ a) = a ⊗ v` on `k² ⊗ C(k, q)`, `σ = swap`;
/// also carries the classical Clifford algebra and `σ̄ = σ ⊗ id`.
pub fn alpha_ttp_clifford(q: &Rational) -> Result<Bundle> {
    let a = k2();
    let classical = clifford_process(&a, &CliffordParams::new(q.clone(), swap2())?)?;
    let sigma_bar = swap2().kron(&Matrix::identity(2));
    let bundle = alpha_bundle(
        "alpha_ttp_clifford",
        a,
        clifford_algebra(q),
        swap2(),
        Matrix::identity(2),
        &classical.twisting,
    )?;
    Ok(bundle
        .with("clifford", Object::Algebra(classical.algebra))
        .with("sigma_bar", Object::LinearMap(LinearMap::new(sigma_bar))))
}

/// Runs the checker matching what each gallery entry claims about itself.
pub fn check_claims(b: &Bundle) -> Result<CheckReport> {
    Ok(match b.name.as_str() {
        "ttp_k2_lambda" => check_twisting_map(b.algebra("A")?, b.algebra("B")?, b.twisting("R")?)?
            .merged(check_associative(b.algebra("product")?)?),
        "homalg_2dim" => check_hom_algebra(b.algebra("D")?)?,
        "homtwistor_2dim" => check_hom_twistor(b.algebra("D")?, b.operator2("T")?)?
            .merged(check_hom_algebra(b.algebra("deformed")?)?),
        "homtwist_R1" | "homtwist_R2" => check_hom_twisting_map(b.algebra("D")?, b.algebra("D")?, b.twisting("R")?)?
            .merged(check_hom_algebra(b.algebra("product")?)?),
        "homtwist_Dk2" => check_hom_twisting_map(b.algebra("D")?, b.algebra("B")?, b.twisting("R")?)?
            .merged(check_hom_algebra(b.algebra("product")?)?),
        "clifford" => check_hom_twisting_map(b.algebra("A")?, b.algebra("C")?, b.twisting("R")?)?
            .merged(check_hom_algebra(b.algebra("algebra")?)?),
        "sweedler_h4" => {
            let h = b.bialgebra("H_hom")?;
            let a = b.algebra("A_hom")?;
            check_hom_bialgebra(h)?
                .merged(check_hom_algebra(a)?)
                .merged(check_module_hom_algebra(h, a, b.action("action_hom")?)?)
                .merged(check_module_hom_algebra(h, a, b.action("action_right_hom")?)?)
        }
        "group_algebra" => check_hom_bialgebra(b.bialgebra("H")?)?,
        "uq_setup" => {
            let p = b.quantum("U")?;
            check_rho_extension(p, 3).merged(check_uq_module_hom_algebra(p, 2))
        }
        "alpha_ttp_flip" | "alpha_ttp_clifford" => check_alpha_ab_twisting_map(
            b.algebra("A")?,
            b.algebra("B")?,
            &b.linear_map("alpha_a")?.matrix,
            &b.linear_map("alpha_b")?.matrix,
            b.twisting("R")?,
        )?
        .merged(check_hom_algebra(b.algebra("product")?)?),
        other => return Err(Error::UnknownName(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn two_dim_product_entry() {
        let d = two_dim_algebra(&int(1), &int(1), &int(2)).unwrap();
        assert_eq!(d.constant(1, 1, 0), &int(-3));
        assert_eq!(d.constant(1, 1, 1), &int(-4));
    }

    #[test]
    fn lambda_zero_image() {
        let r = k2_lambda_map(&int(0));
        assert_eq!(r.coeff(0, 0, 1, 1), &int(-1));
        for (a2, b2) in [(0, 0), (0, 1), (1, 0)] {
            assert_eq!(r.coeff(0, 0, a2, b2), &int(0));
        }
    }

    #[test]
    fn constraints_are_named() {
        let err = homtwist_r1(&int(1), &int(1), &int(2), &Default::default()).unwrap_err();
        assert!(matches!(err, Error::ParamConstraintViolation(ref m) if m.contains("lambda2")));
        assert!(homalg_2dim(&int(1), &int(1), &int(1)).is_err());
        assert!(homalg_2dim(&int(0), &int(1), &int(2)).is_err());
        assert!(group_algebra(4).is_err());
        assert!(sweedler_h4(&int(0)).is_err());
        let mut p = Params::new();
        p.insert("lambda".into(), int(1));
        p.insert("mu".into(), int(1));
        assert!(matches!(build("ttp_k2_lambda", &p), Err(Error::ParamConstraintViolation(_))));
        assert!(matches!(build("nope", &p), Err(Error::UnknownName(_))));
    }

    #[test]
    fn every_entry_meets_its_claim() {
        let c5 = [int(1), frac(-1, 2), int(3), int(0), int(2)];
        let bundles = vec![
            ttp_k2_lambda(&int(2)).unwrap(),
            homalg_2dim(&int(2), &int(3), &int(-1)).unwrap(),
            homtwistor_2dim(&int(1), &int(2), &frac(1, 2)).unwrap(),
            homtwist_r1(&int(1), &int(3), &int(0), &c5).unwrap(),
            homtwist_r2(&int(2), &int(1), &int(0), &c5).unwrap(),
            homtwist_dk2(&int(1), &int(3), &int(0), &int(2), &frac(-1, 3)).unwrap(),
            clifford(&int(-3)).unwrap(),
            sweedler_h4(&int(1)).unwrap(),
            sweedler_h4(&int(2)).unwrap(),
            group_algebra(2).unwrap(),
            group_algebra(3).unwrap(),
            uq_setup(int(2), int(3), int(5), 1).unwrap(),
            alpha_ttp_flip().unwrap(),
            alpha_ttp_clifford(&int(2)).unwrap(),
        ];
        for b in bundles {
            let rep = check_claims(&b).unwrap();
            assert!(rep.passed, "{}: {rep}", b.name);
        }
    }

    #[test]
    fn build_by_name() {
        let mut p = Params::new();
        p.insert("q".into(), int(2));
        let b = build("clifford", &p).unwrap();
        assert_eq!(b.algebra("algebra").unwrap().dim(), 4);
        assert!(matches!(b.twisting("A"), Err(Error::WrongKind { .. })));
        let empty = Params::new();
        assert_eq!(build("sweedler_h4", &empty).unwrap().provenance, Provenance::Auxiliary);
    }
}
