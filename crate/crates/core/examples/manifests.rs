//! Describing objects in a JSON manifest and running checks on them, as
//! `homtwist check` and `homtwist table` do.

use homtwist::cli::{parse_manifest, run as run_manifest, serialize_manifest, table};

const MANIFEST: &str = r#"{
  "objects": {
    "A": {"kind": "hom_algebra", "constants": [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]]},
    "swap": {"kind": "linear_map", "matrix": [["0", "1"], ["1", "0"]]},
    "G": {"kind": "gallery", "name": "ttp_k2_lambda", "params": {"lambda": "1/2"}}
  },
  "tasks": [
    {"verb": "yau_twist_algebra", "args": ["A", "swap"], "bind": "As"},
    {"verb": "check_hom_algebra", "args": ["As"]},
    {"verb": "check_associative", "args": ["As"], "expect": "fail"},
    {"verb": "check_twisting_map", "args": ["G.A", "G.B", "G.R"]}
  ]
}"#;

pub fn run() -> homtwist::Result<()> {
    let manifest = parse_manifest(MANIFEST)?;
    let out = run_manifest(&manifest);
    print!("{}", out.report);
    println!("exit status {}", out.exit.code());
    println!("{}", table(&manifest, "G.product")?);
    let again = parse_manifest(&serialize_manifest(&manifest))?;
    println!("round trip preserved: {}", again == manifest);
    Ok(())
}

#[allow(dead_code)]
fn main() -> homtwist::Result<()> {
    run()
}
