use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{
    check_algebra_morphism, check_associative, check_hom_algebra, check_lemma_four_elements,
    check_multiplicative, tensor_algebra, yau_twist_algebra, HomAlgebra, LinearMap,
};
use crate::coalgebra::{
    check_hom_bialgebra, check_hom_coalgebra, yau_twist_bialgebra, yau_twist_coalgebra, HomBialgebra,
    HomCoalgebra,
};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::gallery::{self, Bundle, Object, Params};
use crate::quantum::{check_uq_module_hom_algebra, verify_example32, UqParams};
use crate::report::CheckReport;
use crate::smash::{
    check_bicomodule, check_comodule, check_comodule_hom_algebra, check_module, check_module_hom_algebra,
    check_smash_twist_compat, check_yetter_drinfeld, smash_left, smash_right, tensor_modules, ActionTable,
    CoactionTable, Side,
};
use crate::twisted::{
    alpha_ab_ttp, check_alpha_ab_twisting_map, check_braid, check_deform_compat_ttp, check_hom_twisting_map,
    check_twisting_map, clifford, hom_ttp, iterated_ttp, ttp, twistor_from_r, CliffordParams, TwistingMap,
};
use crate::twistor::{
    check_alpha_pseudotwistor, check_hom_pseudotwistor, check_hom_twistor, check_pseudotwistor, check_twistor,
    deform, Operator2, Operator3,
};

use super::manifest::{Expect, Manifest, ObjectDef, SideSpec, Task};

/// Exit statuses of the command-line tool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    ExpectationFailed = 1,
    ParseError = 2,
    SemanticError = 3,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }
}

enum Entry {
    Object(Object),
    Bundle(Bundle),
}

/// Named objects available to tasks. Gallery members are addressed as
/// `bundle.member`.
#[derive(Default)]
pub struct Env {
    entries: BTreeMap<String, Entry>,
}

macro_rules! getter {
    ($fn:ident, $variant:ident, $ty:ty, $kind:literal) => {
        pub fn $fn(&self, name: &str) -> Result<&$ty> {
            match self.get(name)? {
                Object::$variant(x) => Ok(x),
                other => Err(wrong(name, $kind, other)),
            }
        }
    };
}

fn wrong(name: &str, expected: &str, found: &Object) -> Error {
    Error::WrongKind {
        name: name.to_string(),
        expected: expected.to_string(),
        found: found.kind().to_string(),
    }
}

impl Env {
    fn insert(&mut self, name: &str, entry: Entry) -> Result<()> {
        if name.is_empty() || name.contains('.') {
            return Err(Error::BadTask(format!("{name:?} is not a valid object name")));
        }
        if self.entries.contains_key(name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        self.entries.insert(name.to_string(), entry);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&Object> {
        let unknown = || Error::UnknownName(name.to_string());
        match name.split_once('.') {
            Some((head, member)) => match self.entries.get(head) {
                Some(Entry::Bundle(b)) => b.get(member).map_err(|_| unknown()),
                _ => Err(unknown()),
            },
            None => match self.entries.get(name) {
                Some(Entry::Object(o)) => Ok(o),
                Some(Entry::Bundle(_)) => Err(Error::WrongKind {
                    name: name.to_string(),
                    expected: "object".into(),
                    found: "gallery bundle".into(),
                }),
                None => Err(unknown()),
            },
        }
    }

    pub fn bundle(&self, name: &str) -> Result<&Bundle> {
        match self.entries.get(name) {
            Some(Entry::Bundle(b)) => Ok(b),
            Some(Entry::Object(o)) => Err(wrong(name, "gallery bundle", o)),
            None => Err(Error::UnknownName(name.to_string())),
        }
    }

    /// An algebra, or the underlying algebra of a bialgebra.
    pub fn algebra(&self, name: &str) -> Result<&HomAlgebra> {
        match self.get(name)? {
            Object::Algebra(a) => Ok(a),
            Object::Bialgebra(h) => Ok(h.algebra()),
            other => Err(wrong(name, "hom_algebra", other)),
        }
    }

    /// A coalgebra, or the underlying coalgebra of a bialgebra.
    pub fn coalgebra(&self, name: &str) -> Result<&HomCoalgebra> {
        match self.get(name)? {
            Object::Coalgebra(c) => Ok(c),
            Object::Bialgebra(h) => Ok(h.coalgebra()),
            other => Err(wrong(name, "hom_coalgebra", other)),
        }
    }

    pub fn matrix(&self, name: &str) -> Result<&Matrix> {
        match self.get(name)? {
            Object::LinearMap(f) => Ok(&f.matrix),
            other => Err(wrong(name, "linear_map", other)),
        }
    }

    getter!(bialgebra, Bialgebra, HomBialgebra, "hom_bialgebra");
    getter!(operator2, Operator2, Operator2, "operator2");
    getter!(operator3, Operator3, Operator3, "operator3");
    getter!(twisting, Twisting, TwistingMap, "twisting_map");
    getter!(action, Action, ActionTable, "action");
    getter!(coaction, Coaction, CoactionTable, "coaction");
    getter!(quantum, Quantum, UqParams, "uq_setup");
}

fn matrix(rows: &[Vec<super::manifest::Scalar>]) -> Result<Matrix> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| s.0.clone()).collect()).collect())
}

fn cube(c: &[Vec<Vec<super::manifest::Scalar>>], what: &str) -> Result<Vec<Vec<Vec<Rational>>>> {
    let n = c.len();
    if c.iter().any(|m| m.len() != n || m.iter().any(|v| v.len() != n)) {
        return Err(Error::DimensionMismatch(format!("{what} constants must be {n}x{n}x{n}")));
    }
    Ok(c.iter()
        .map(|m| m.iter().map(|v| v.iter().map(|s| s.0.clone()).collect()).collect())
        .collect())
}

fn alpha_or_identity(alpha: &Option<Vec<Vec<super::manifest::Scalar>>>, n: usize) -> Result<Matrix> {
    match alpha {
        Some(rows) => matrix(rows),
        None => Ok(Matrix::identity(n)),
    }
}

fn side(s: SideSpec) -> Side {
    match s {
        SideSpec::Left => Side::Left,
        SideSpec::Right => Side::Right,
    }
}

fn build_object(env: &Env, def: &ObjectDef) -> Result<Entry> {
    Ok(Entry::Object(match def {
        ObjectDef::HomAlgebra { constants, alpha } => {
            let c = cube(constants, "algebra")?;
            Object::Algebra(HomAlgebra::from_constants(&c, alpha_or_identity(alpha, c.len())?)?)
        }
        ObjectDef::HomCoalgebra { constants, alpha } => {
            let c = cube(constants, "coalgebra")?;
            let n = c.len();
            let co = HomCoalgebra::from_fn(n, alpha_or_identity(alpha, n)?, |i| {
                let mut terms = Vec::new();
                for (j, row) in c[i].iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        terms.push((j, k, v.clone()));
                    }
                }
                terms
            })?;
            Object::Coalgebra(co)
        }
        ObjectDef::HomBialgebra { algebra, coalgebra } => Object::Bialgebra(HomBialgebra::new(
            env.algebra(algebra)?.clone(),
            env.coalgebra(coalgebra)?.clone(),
        )?),
        ObjectDef::LinearMap { matrix: m } => Object::LinearMap(LinearMap::new(matrix(m)?)),
        ObjectDef::Operator2 { dim, matrix: m } => Object::Operator2(Operator2::new(*dim, matrix(m)?)?),
        ObjectDef::Operator3 { dim, matrix: m } => Object::Operator3(Operator3::new(*dim, matrix(m)?)?),
        ObjectDef::TwistingMap { dim_a, dim_b, matrix: m } => {
            Object::Twisting(TwistingMap::new(*dim_a, *dim_b, matrix(m)?)?)
        }
        ObjectDef::Action {
            side: s,
            acting_dim,
            matrix: m,
            alpha,
        } => {
            let m = matrix(m)?;
            let alpha = alpha_or_identity(alpha, m.rows())?;
            Object::Action(ActionTable::new(side(*s), *acting_dim, m, alpha)?)
        }
        ObjectDef::Coaction {
            side: s,
            coalgebra_dim,
            matrix: m,
            alpha,
        } => {
            let m = matrix(m)?;
            let alpha = alpha_or_identity(alpha, m.cols())?;
            Object::Coaction(CoactionTable::new(side(*s), *coalgebra_dim, m, alpha)?)
        }
        ObjectDef::Gallery { name, params } => {
            let params: Params = params.iter().map(|(k, v)| (k.clone(), v.0.clone())).collect();
            return Ok(Entry::Bundle(gallery::build(name, &params)?));
        }
    }))
}

/// Builds every object definition in order; any failure here is a problem
/// with the manifest.
pub fn resolve(manifest: &Manifest) -> Result<Env> {
    let mut env = Env::default();
    for (name, def) in &manifest.objects.0 {
        if env.entries.contains_key(name) {
            return Err(Error::DuplicateName(name.clone()));
        }
        let entry = build_object(&env, def)?;
        env.insert(name, entry)?;
    }
    Ok(env)
}

enum Outcome {
    Report(CheckReport),
    Built(Object),
}

fn arity(task: &Task, n: usize) -> Result<()> {
    if task.args.len() != n {
        return Err(Error::BadTask(format!(
            "{} takes {n} argument(s), got {}",
            task.verb,
            task.args.len()
        )));
    }
    Ok(())
}

fn param(task: &Task, key: &str) -> Result<Rational> {
    task.params
        .get(key)
        .map(|s| s.0.clone())
        .ok_or_else(|| Error::BadTask(format!("{} needs parameter {key}", task.verb)))
}

fn bound(task: &Task, key: &str, default: u32) -> Result<u32> {
    match task.params.get(key) {
        None => Ok(default),
        Some(s) if s.0.is_integer() => u32::try_from(s.0.to_integer())
            .map_err(|_| Error::BadTask(format!("{key} must be a small non-negative integer"))),
        Some(_) => Err(Error::BadTask(format!("{key} must be an integer"))),
    }
}

/// Every verb a task may use.
pub const VERBS: &[&str] = &[
    "check_hom_algebra",
    "check_associative",
    "check_lemma_four_elements",
    "check_multiplicative",
    "check_algebra_morphism",
    "check_hom_coalgebra",
    "check_hom_bialgebra",
    "check_twistor",
    "check_hom_twistor",
    "check_pseudotwistor",
    "check_hom_pseudotwistor",
    "check_alpha_pseudotwistor",
    "check_twisting_map",
    "check_hom_twisting_map",
    "check_braid",
    "check_alpha_ab_twisting_map",
    "check_deform_compat_ttp",
    "check_module",
    "check_module_hom_algebra",
    "check_comodule",
    "check_bicomodule",
    "check_comodule_hom_algebra",
    "check_yetter_drinfeld",
    "check_smash_twist_compat",
    "check_claims",
    "check_uq_module_hom_algebra",
    "verify_smash_closed_forms",
    "yau_twist_algebra",
    "yau_twist_coalgebra",
    "yau_twist_bialgebra",
    "tensor_algebra",
    "deform",
    "ttp",
    "hom_ttp",
    "twistor_from_r",
    "alpha_ab_ttp",
    "clifford",
    "smash_left",
    "smash_right",
    "iterated_ttp",
    "tensor_modules",
];

fn execute(env: &Env, task: &Task) -> Result<Outcome> {
    use Outcome::{Built, Report};
    let a = |i: usize| task.args[i].as_str();
    let n = match task.verb.as_str() {
        "check_hom_algebra" | "check_associative" | "check_lemma_four_elements" | "check_hom_coalgebra"
        | "check_hom_bialgebra" | "check_claims" | "check_uq_module_hom_algebra" | "verify_smash_closed_forms" => 1,
        "check_multiplicative" | "check_twistor" | "check_hom_twistor" | "check_module" | "check_comodule"
        | "yau_twist_algebra" | "yau_twist_coalgebra" | "yau_twist_bialgebra" | "tensor_algebra" | "deform"
        | "clifford" => 2,
        "check_algebra_morphism" | "check_twisting_map" | "check_hom_twisting_map" | "check_braid"
        | "check_module_hom_algebra" | "check_bicomodule" | "check_comodule_hom_algebra"
        | "check_yetter_drinfeld" | "ttp" | "hom_ttp" | "twistor_from_r" | "smash_left" | "smash_right"
        | "tensor_modules" => 3,
        "check_pseudotwistor" | "check_hom_pseudotwistor" => 4,
        "check_alpha_pseudotwistor" | "check_alpha_ab_twisting_map" | "check_deform_compat_ttp"
        | "check_smash_twist_compat" | "alpha_ab_ttp" => 5,
        "iterated_ttp" => 6,
        other => return Err(Error::BadTask(format!("unknown verb {other:?}"))),
    };
    arity(task, n)?;
    let is_check = task.verb.starts_with("check_") || task.verb.starts_with("verify_");
    if is_check && task.bind.is_some() {
        return Err(Error::BadTask(format!("{} does not construct anything to bind", task.verb)));
    }
    Ok(match task.verb.as_str() {
        "check_hom_algebra" => Report(check_hom_algebra(env.algebra(a(0))?)?),
        "check_associative" => Report(check_associative(env.algebra(a(0))?)?),
        "check_lemma_four_elements" => Report(check_lemma_four_elements(env.algebra(a(0))?)?),
        "check_multiplicative" => Report(check_multiplicative(env.algebra(a(0))?, env.matrix(a(1))?)?),
        "check_algebra_morphism" => Report(check_algebra_morphism(
            &LinearMap::new(env.matrix(a(0))?.clone()),
            env.algebra(a(1))?,
            env.algebra(a(2))?,
        )?),
        "check_hom_coalgebra" => Report(check_hom_coalgebra(env.coalgebra(a(0))?)?),
        "check_hom_bialgebra" => Report(check_hom_bialgebra(env.bialgebra(a(0))?)?),
        "check_twistor" => Report(check_twistor(env.algebra(a(0))?, env.operator2(a(1))?)?),
        "check_hom_twistor" => Report(check_hom_twistor(env.algebra(a(0))?, env.operator2(a(1))?)?),
        "check_pseudotwistor" => Report(check_pseudotwistor(
            env.algebra(a(0))?,
            env.operator2(a(1))?,
            env.operator3(a(2))?,
            env.operator3(a(3))?,
        )?),
        "check_hom_pseudotwistor" => Report(check_hom_pseudotwistor(
            env.algebra(a(0))?,
            env.operator2(a(1))?,
            env.operator3(a(2))?,
            env.operator3(a(3))?,
        )?),
        "check_alpha_pseudotwistor" => Report(check_alpha_pseudotwistor(
            env.algebra(a(0))?,
            env.matrix(a(1))?,
            env.operator2(a(2))?,
            env.operator3(a(3))?,
            env.operator3(a(4))?,
        )?),
        "check_twisting_map" => Report(check_twisting_map(env.algebra(a(0))?, env.algebra(a(1))?, env.twisting(a(2))?)?),
        "check_hom_twisting_map" => Report(check_hom_twisting_map(
            env.algebra(a(0))?,
            env.algebra(a(1))?,
            env.twisting(a(2))?,
        )?),
        "check_braid" => Report(check_braid(env.twisting(a(0))?, env.twisting(a(1))?, env.twisting(a(2))?)?),
        "check_alpha_ab_twisting_map" => Report(check_alpha_ab_twisting_map(
            env.algebra(a(0))?,
            env.algebra(a(1))?,
            env.matrix(a(2))?,
            env.matrix(a(3))?,
            env.twisting(a(4))?,
        )?),
        "check_deform_compat_ttp" => Report(check_deform_compat_ttp(
            env.algebra(a(0))?,
            env.algebra(a(1))?,
            env.matrix(a(2))?,
            env.matrix(a(3))?,
            env.twisting(a(4))?,
        )?),
        "check_module" => Report(check_module(env.algebra(a(0))?, env.action(a(1))?)?),
        "check_module_hom_algebra" => Report(check_module_hom_algebra(
            env.bialgebra(a(0))?,
            env.algebra(a(1))?,
            env.action(a(2))?,
        )?),
        "check_comodule" => Report(check_comodule(env.coalgebra(a(0))?, env.coaction(a(1))?)?),
        "check_bicomodule" => Report(check_bicomodule(
            env.coalgebra(a(0))?,
            env.coaction(a(1))?,
            env.coaction(a(2))?,
        )?),
        "check_comodule_hom_algebra" => Report(check_comodule_hom_algebra(
            env.bialgebra(a(0))?,
            env.algebra(a(1))?,
            env.coaction(a(2))?,
        )?),
        "check_yetter_drinfeld" => Report(check_yetter_drinfeld(
            env.bialgebra(a(0))?,
            env.action(a(1))?,
            env.coaction(a(2))?,
        )?),
        "check_smash_twist_compat" => Report(check_smash_twist_compat(
            env.bialgebra(a(0))?,
            env.algebra(a(1))?,
            env.action(a(2))?,
            env.matrix(a(3))?,
            env.matrix(a(4))?,
        )?),
        "check_claims" => Report(gallery::check_claims(env.bundle(a(0))?)?),
        "check_uq_module_hom_algebra" => {
            Report(check_uq_module_hom_algebra(env.quantum(a(0))?, bound(task, "bound", 3)?))
        }
        "verify_smash_closed_forms" => Report(verify_example32(env.quantum(a(0))?, bound(task, "bounds", 2)?)?),
        "yau_twist_algebra" => Built(Object::Algebra(yau_twist_algebra(env.algebra(a(0))?, env.matrix(a(1))?)?)),
        "yau_twist_coalgebra" => Built(Object::Coalgebra(yau_twist_coalgebra(
            env.coalgebra(a(0))?,
            env.matrix(a(1))?,
        )?)),
        "yau_twist_bialgebra" => Built(Object::Bialgebra(yau_twist_bialgebra(
            env.bialgebra(a(0))?,
            env.matrix(a(1))?,
        )?)),
        "tensor_algebra" => Built(Object::Algebra(tensor_algebra(env.algebra(a(0))?, env.algebra(a(1))?))),
        "deform" => Built(Object::Algebra(deform(env.algebra(a(0))?, env.operator2(a(1))?)?)),
        "ttp" => Built(Object::Algebra(ttp(env.algebra(a(0))?, env.algebra(a(1))?, env.twisting(a(2))?)?)),
        "hom_ttp" => Built(Object::Algebra(hom_ttp(env.algebra(a(0))?, env.algebra(a(1))?, env.twisting(a(2))?)?)),
        "twistor_from_r" => Built(Object::Operator2(twistor_from_r(
            env.algebra(a(0))?,
            env.algebra(a(1))?,
            env.twisting(a(2))?,
        )?)),
        "alpha_ab_ttp" => Built(Object::Algebra(
            alpha_ab_ttp(
                env.algebra(a(0))?,
                env.algebra(a(1))?,
                env.matrix(a(2))?,
                env.matrix(a(3))?,
                env.twisting(a(4))?,
            )?
            .algebra,
        )),
        "clifford" => {
            let params = CliffordParams::new(param(task, "q")?, env.matrix(a(1))?.clone())?;
            Built(Object::Algebra(clifford(env.algebra(a(0))?, &params)?.algebra))
        }
        "smash_left" => Built(Object::Algebra(
            smash_left(env.algebra(a(0))?, env.bialgebra(a(1))?, env.action(a(2))?)?.algebra,
        )),
        "smash_right" => Built(Object::Algebra(
            smash_right(env.bialgebra(a(0))?, env.algebra(a(1))?, env.action(a(2))?)?.algebra,
        )),
        "iterated_ttp" => Built(Object::Algebra(
            iterated_ttp(
                env.algebra(a(0))?,
                env.algebra(a(1))?,
                env.algebra(a(2))?,
                env.twisting(a(3))?,
                env.twisting(a(4))?,
                env.twisting(a(5))?,
            )?
            .algebra,
        )),
        "tensor_modules" => Built(Object::Action(tensor_modules(
            env.bialgebra(a(0))?,
            env.action(a(1))?,
            env.action(a(2))?,
        )?)),
        _ => unreachable!("arity table covers every verb"),
    })
}

/// Status and text produced by running a manifest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub exit: ExitCode,
    pub report: String,
}

const WITNESSES_SHOWN: usize = 3;

fn describe(task: &Task) -> String {
    format!("{}({})", task.verb, task.args.join(", "))
}

/// Runs every task in order. Errors in the manifest itself stop the run with
/// a semantic-error status; mathematical errors raised by a constructor or a
/// precondition count as a failed task.
pub fn run(manifest: &Manifest) -> RunOutput {
    let mut out = String::new();
    let semantic = |mut out: String, e: &Error| {
        let _ = writeln!(out, "error: {e}");
        RunOutput {
            exit: ExitCode::SemanticError,
            report: out,
        }
    };
    let mut env = match resolve(manifest) {
        Ok(env) => env,
        Err(e) => return semantic(out, &e),
    };
    let mut unmet = 0;
    for (i, task) in manifest.tasks.iter().enumerate() {
        let (passed, detail, built) = match execute(&env, task) {
            Ok(Outcome::Report(rep)) => {
                let detail: Vec<String> = rep.failures.iter().take(WITNESSES_SHOWN).map(|f| f.to_string()).collect();
                let mut detail = detail.join("\n");
                if rep.total_failures > WITNESSES_SHOWN {
                    let _ = write!(detail, "\n... {} violations in total", rep.total_failures);
                }
                (rep.passed, detail, None)
            }
            Ok(Outcome::Built(obj)) => (true, format!("built {}", obj.kind()), Some(obj)),
            Err(e) if e.is_semantic() => {
                let _ = writeln!(out, "[{}] {}", i + 1, describe(task));
                return semantic(out, &e);
            }
            Err(e) => (false, e.to_string(), None),
        };
        let met = match task.expect {
            Expect::Pass => passed,
            Expect::Fail => !passed,
            Expect::Any => true,
        };
        if !met {
            unmet += 1;
        }
        let verdict = if passed { "pass" } else { "fail" };
        let mark = if met { "ok" } else { "UNEXPECTED" };
        let expect = match task.expect {
            Expect::Pass => "pass",
            Expect::Fail => "fail",
            Expect::Any => "any",
        };
        let _ = writeln!(out, "[{}] {} -> {verdict} (expected {expect}) {mark}", i + 1, describe(task));
        for line in detail.lines().filter(|l| !l.is_empty()) {
            let _ = writeln!(out, "    {line}");
        }
        if let (Some(name), Some(obj)) = (&task.bind, built) {
            if let Err(e) = env.insert(name, Entry::Object(obj)) {
                return semantic(out, &e);
            }
        }
    }
    let total = manifest.tasks.len();
    let _ = writeln!(out, "{} of {total} tasks met their expectation", total - unmet);
    RunOutput {
        exit: if unmet == 0 { ExitCode::Ok } else { ExitCode::ExpectationFailed },
        report: out,
    }
}

/// Resolves objects and runs constructions so that bound results can be
/// looked up; expectations are ignored.
pub fn environment(manifest: &Manifest) -> Result<Env> {
    let mut env = resolve(manifest)?;
    for task in &manifest.tasks {
        match execute(&env, task) {
            Ok(Outcome::Built(obj)) => {
                if let Some(name) = &task.bind {
                    env.insert(name, Entry::Object(obj))?;
                }
            }
            Ok(Outcome::Report(_)) => {}
            Err(e) if e.is_semantic() => return Err(e),
            Err(_) => {}
        }
    }
    Ok(env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::manifest::parse_manifest;

    const K2: &str = r#"{"kind": "hom_algebra", "constants": [[["1","0"],["0","0"]],[["0","0"],["0","1"]]]}"#;

    fn run_text(text: &str) -> RunOutput {
        run(&parse_manifest(text).unwrap())
    }

    #[test]
    fn passing_and_expected_failures() {
        let text = format!(
            r#"{{"objects": {{"A": {K2}, "s": {{"kind": "linear_map", "matrix": [["0","1"],["1","0"]]}}}},
               "tasks": [
                 {{"verb": "check_hom_algebra", "args": ["A"]}},
                 {{"verb": "yau_twist_algebra", "args": ["A", "s"], "bind": "As"}},
                 {{"verb": "check_associative", "args": ["As"], "expect": "fail"}},
                 {{"verb": "yau_twist_algebra", "args": ["As", "s"], "expect": "fail"}}
               ]}}"#
        );
        let out = run_text(&text);
        assert_eq!(out.exit, ExitCode::Ok, "{}", out.report);
        assert!(out.report.contains("4 of 4"));
    }

    #[test]
    fn unmet_expectation() {
        let text = format!(
            r#"{{"objects": {{"A": {K2}, "s": {{"kind": "linear_map", "matrix": [["0","1"],["1","0"]]}}}},
               "tasks": [{{"verb": "yau_twist_algebra", "args": ["A", "s"], "bind": "As"}},
                         {{"verb": "check_associative", "args": ["As"]}}]}}"#
        );
        let out = run_text(&text);
        assert_eq!(out.exit, ExitCode::ExpectationFailed);
        assert!(out.report.contains("UNEXPECTED"));
        assert!(out.report.contains("associativity at"));
    }

    #[test]
    fn semantic_errors() {
        let unknown = r#"{"tasks": [{"verb": "check_hom_algebra", "args": ["Q"]}]}"#;
        assert_eq!(run_text(unknown).exit, ExitCode::SemanticError);
        let dup = format!(r#"{{"objects": {{"A": {K2}, "A": {K2}}}}}"#);
        let out = run_text(&dup);
        assert_eq!(out.exit, ExitCode::SemanticError);
        assert!(out.report.contains("defined twice"));
        let ragged = r#"{"objects": {"A": {"kind": "hom_algebra", "constants": [[["1","0"]],[["0"],["1"]]]}}}"#;
        assert_eq!(run_text(ragged).exit, ExitCode::SemanticError);
        let kind = format!(r#"{{"objects": {{"A": {K2}}}, "tasks": [{{"verb": "check_braid", "args": ["A","A","A"]}}]}}"#);
        assert!(run_text(&kind).report.contains("expected a twisting_map"));
        let verb = r#"{"tasks": [{"verb": "frobnicate"}]}"#;
        assert_eq!(run_text(verb).exit, ExitCode::SemanticError);
    }

    #[test]
    fn gallery_members() {
        let text = r#"{"objects": {"G": {"kind": "gallery", "name": "ttp_k2_lambda", "params": {"lambda": "2"}}},
                       "tasks": [{"verb": "check_twisting_map", "args": ["G.A", "G.B", "G.R"]},
                                 {"verb": "check_claims", "args": ["G"]},
                                 {"verb": "check_associative", "args": ["G.product"]}]}"#;
        assert_eq!(run_text(text).exit, ExitCode::Ok);
        let missing = r#"{"objects": {"G": {"kind": "gallery", "name": "ttp_k2_lambda", "params": {}}}}"#;
        assert_eq!(run_text(missing).exit, ExitCode::SemanticError);
    }
}
