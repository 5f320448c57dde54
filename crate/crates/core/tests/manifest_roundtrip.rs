use std::collections::BTreeMap;

use homtwist::cli::manifest::{Expect, ObjectDef, Objects, Scalar, SideSpec, Task};
use homtwist::cli::{parse_manifest, serialize_manifest, Manifest};
use homtwist::exact::frac;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Scalar(frac(n, d)))
}

fn rows(r: usize, c: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(scalar(), c), r)
}

fn side() -> impl Strategy<Value = SideSpec> {
    prop_oneof![Just(SideSpec::Left), Just(SideSpec::Right)]
}

fn object() -> impl Strategy<Value = ObjectDef> {
    prop_oneof![
        (1usize..3).prop_flat_map(|n| (prop::collection::vec(rows(n, n), n), prop::option::of(rows(n, n))))
            .prop_map(|(constants, alpha)| ObjectDef::HomAlgebra { constants, alpha }),
        (1usize..3).prop_flat_map(|n| prop::collection::vec(rows(n, n), n))
            .prop_map(|constants| ObjectDef::HomCoalgebra { constants, alpha: None }),
        ("[a-z]{1,4}", "[a-z]{1,4}").prop_map(|(algebra, coalgebra)| ObjectDef::HomBialgebra { algebra, coalgebra }),
        rows(2, 2).prop_map(|matrix| ObjectDef::LinearMap { matrix }),
        rows(4, 4).prop_map(|matrix| ObjectDef::Operator2 { dim: 2, matrix }),
        rows(4, 4).prop_map(|matrix| ObjectDef::TwistingMap { dim_a: 2, dim_b: 2, matrix }),
        (side(), rows(2, 4), prop::option::of(rows(2, 2)))
            .prop_map(|(side, matrix, alpha)| ObjectDef::Action { side, acting_dim: 2, matrix, alpha }),
        (side(), rows(4, 2)).prop_map(|(side, matrix)| ObjectDef::Coaction { side, coalgebra_dim: 2, matrix, alpha: None }),
        ("[a-z_]{1,12}", prop::collection::btree_map("[a-z]{1,6}", scalar(), 0..3))
            .prop_map(|(name, params)| ObjectDef::Gallery { name, params }),
    ]
}

fn task() -> impl Strategy<Value = Task> {
    (
        "[a-z_]{1,16}",
        prop::collection::vec("[A-Za-z]{1,4}(\\.[a-z]{1,4})?", 0..4),
        prop_oneof![Just(Expect::Pass), Just(Expect::Fail), Just(Expect::Any)],
        prop::collection::btree_map("[a-z]{1,6}", scalar(), 0..2),
        prop::option::of("[A-Za-z]{1,6}"),
    )
        .prop_map(|(verb, args, expect, params, bind)| Task { verb, args, expect, params, bind })
}

fn manifest() -> impl Strategy<Value = Manifest> {
    (
        prop::collection::vec(("[A-Za-z][A-Za-z0-9_]{0,5}", object()), 0..6),
        prop::collection::vec(task(), 0..6),
    )
        .prop_map(|(objects, tasks)| {
            // JSON object keys must be distinct for the text to mean the same thing on reparse
            let mut seen = BTreeMap::new();
            let objects = objects.into_iter().filter(|(k, _)| seen.insert(k.clone(), ()).is_none()).collect();
            Manifest { objects: Objects(objects), tasks }
        })
}

proptest! {
    #[test]
    fn parse_serialize_parse(m in manifest()) {
        let text = serialize_manifest(&m);
        let back = parse_manifest(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(serialize_manifest(&back), text);
    }
}
