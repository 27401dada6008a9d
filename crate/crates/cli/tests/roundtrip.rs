//! parse ∘ serialize ∘ parse = parse, on arbitrary documents.

use morita_cli::doc::{parse_str, to_json, AlgebraDoc, Document, Envelope, GroupDoc, Ref};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = String> {
    (-50i64..50, 1i64..9).prop_map(|(n, d)| if d == 1 { n.to_string() } else { format!("{n}/{d}") })
}

fn group() -> impl Strategy<Value = GroupDoc> {
    prop_oneof![
        "C[1-9]|S[1-4]|trivial".prop_map(|p| GroupDoc {
            preset: Some(p),
            table: None,
            names: None,
        }),
        (1usize..5).prop_flat_map(|n| {
            (
                prop::collection::vec(prop::collection::vec(0..n, n), n),
                prop::option::of(prop::collection::vec("[a-zé⊗]{1,4}", n)),
            )
                .prop_map(|(table, names)| GroupDoc {
                    preset: None,
                    table: Some(table),
                    names,
                })
        }),
    ]
}

fn algebra() -> impl Strategy<Value = AlgebraDoc> {
    (1usize..4, group(), any::<bool>()).prop_flat_map(|(d, g, by_path)| {
        (
            prop::collection::vec("[a-z]{1,3}", d),
            prop::collection::vec(0usize..3, d),
            prop::collection::vec((0..d, 0..d, 0..d, scalar()), 0..6),
            prop::collection::vec(scalar(), d),
        )
            .prop_map(move |(basis, degree, mult, one)| AlgebraDoc {
                field: "Q".into(),
                group: if by_path {
                    Ref::Path("groups/g.json".into())
                } else {
                    Ref::inline(Document::Group(g.clone()))
                },
                basis,
                degree,
                mult,
                one,
            })
    })
}

proptest! {
    #[test]
    fn group_documents_round_trip(g in group()) {
        let env = Envelope::new(Document::Group(g));
        let once = parse_str(&to_json(&env), "a").unwrap();
        prop_assert_eq!(&once, &env);
        prop_assert_eq!(parse_str(&to_json(&once), "b").unwrap(), once);
    }

    #[test]
    fn algebra_documents_round_trip(a in algebra()) {
        let env = Envelope::new(Document::Algebra(a));
        let once = parse_str(&to_json(&env), "a").unwrap();
        prop_assert_eq!(&once, &env);
        prop_assert_eq!(to_json(&parse_str(&to_json(&once), "b").unwrap()), to_json(&once));
    }
}
