//! The JSON manifest format.
//!
//! ```json
//! {
//!   "objects": {
//!     "A": {"kind": "hom_algebra", "constants": [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]]},
//!     "G": {"kind": "gallery", "name": "ttp_k2_lambda", "params": {"lambda": "2"}}
//!   },
//!   "tasks": [
//!     {"verb": "check_hom_algebra", "args": ["A"], "expect": "pass"},
//!     {"verb": "check_twisting_map", "args": ["G.A", "G.B", "G.R"]}
//!   ]
//! }
//! ```
//!
//! Scalars are strings in `p/q` form. Structure constants are `c[i][j][k]`
//! (coefficient of `e_k` in `e_i e_j`, or of `e_j ⊗ e_k` in `Δ(e_i)`);
//! matrices are row-major and act on column vectors.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{rat_parse, Rational};

/// A rational scalar, written as a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar(pub Rational);

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        rat_parse(&text).map(Scalar).map_err(de::Error::custom)
    }
}

pub type Rows = Vec<Vec<Scalar>>;
pub type Cube = Vec<Vec<Vec<Scalar>>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectDef {
    HomAlgebra {
        constants: Cube,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<Rows>,
    },
    HomCoalgebra {
        constants: Cube,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<Rows>,
    },
    /// Pairs a previously defined algebra and coalgebra.
    HomBialgebra { algebra: String, coalgebra: String },
    LinearMap { matrix: Rows },
    Operator2 { dim: usize, matrix: Rows },
    Operator3 { dim: usize, matrix: Rows },
    TwistingMap { dim_a: usize, dim_b: usize, matrix: Rows },
    Action {
        side: SideSpec,
        acting_dim: usize,
        matrix: Rows,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<Rows>,
    },
    Coaction {
        side: SideSpec,
        coalgebra_dim: usize,
        matrix: Rows,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<Rows>,
    },
    Gallery {
        name: String,
        #[serde(default)]
        params: BTreeMap<String, Scalar>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    #[default]
    Pass,
    Fail,
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Task {
    pub verb: String,
    #[serde(default)]
    pub args: Vec<String>,
    #[serde(default)]
    pub expect: Expect,
    /// Scalar arguments such as `q` for the Clifford process or degree bounds.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, Scalar>,
    /// Name under which a constructed object is stored for later tasks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bind: Option<String>,
}

/// Object definitions in file order; repeated names are kept so that they can
/// be reported as duplicates rather than silently overwritten.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Objects(pub Vec<(String, ObjectDef)>);

impl Serialize for Objects {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Objects {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Objects;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from names to object definitions")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Objects, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry()? {
                    out.push((k, v));
                }
                Ok(Objects(out))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub objects: Objects,
    #[serde(default)]
    pub tasks: Vec<Task>,
}

/// Parses manifest text; any JSON or schema problem becomes a syntax error
/// with the position reported by the JSON reader.
pub fn parse_manifest(text: &str) -> Result<Manifest> {
    serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn serialize_manifest(m: &Manifest) -> String {
    serde_json::to_string_pretty(m).expect("manifest serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn empty_manifest() {
        assert_eq!(parse_manifest("{}").unwrap(), Manifest::default());
        assert_eq!(parse_manifest(r#"{"objects": {}, "tasks": []}"#).unwrap(), Manifest::default());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_manifest("{\n  \"objects\": {\n    \"A\": 3,\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }), "{err}");
        let err = parse_manifest("{\"tasks\": [{\"verb\": \"x\", \"expect\": \"maybe\"}]}").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, .. }));
        let bad_scalar = r#"{"objects": {"f": {"kind": "linear_map", "matrix": [["1/0"]]}}}"#;
        assert!(matches!(parse_manifest(bad_scalar), Err(Error::Syntax { .. })));
    }

    #[test]
    fn duplicates_survive_parsing() {
        let text = r#"{"objects": {"f": {"kind": "linear_map", "matrix": [["1"]]},
                                   "f": {"kind": "linear_map", "matrix": [["-1/2"]]}}}"#;
        let m = parse_manifest(text).unwrap();
        assert_eq!(m.objects.0.len(), 2);
        match &m.objects.0[1].1 {
            ObjectDef::LinearMap { matrix } => assert_eq!(matrix[0][0], Scalar(frac(-1, 2))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn serialization_round_trips() {
        let text = r#"{"objects": {"G": {"kind": "gallery", "name": "clifford", "params": {"q": "4/2"}},
                                   "r": {"kind": "action", "side": "right", "acting_dim": 1, "matrix": [["1"]]}},
                       "tasks": [{"verb": "check_claims", "args": ["G"], "expect": "any", "bind": "x"}]}"#;
        let m = parse_manifest(text).unwrap();
        assert_eq!(parse_manifest(&serialize_manifest(&m)).unwrap(), m);
    }
}
