use proptest::prelude::*;
use ydforge::input::{AutomorphismDef, HopfDef};
use ydforge::report::FindingOut;
use ydforge::{parse_input, CliReport, InputDocument, Verdict};
use ydforge_core::{FieldSpec, Matrix};

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::prime(7).unwrap()),
        Just(FieldSpec::prime(4_294_967_291).unwrap()),
    ]
}

fn matrix(f: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec((-1_000_000i64..1_000_000, 1i64..50), rows * cols).prop_map(move |v| {
        let entries = v
            .into_iter()
            .map(|(n, d)| match f {
                FieldSpec::Rationals => f.parse(&format!("{n}/{d}")).unwrap(),
                _ => f.from_i64(n),
            })
            .collect();
        Matrix::from_rows(f, rows, cols, entries).unwrap()
    })
}

fn hopf(f: FieldSpec, n: usize) -> impl Strategy<Value = HopfDef> {
    (
        matrix(f, n, n * n),
        matrix(f, n, 1),
        matrix(f, n * n, n),
        matrix(f, 1, n),
        prop::option::of(matrix(f, n, n)),
    )
        .prop_map(|(mult, unit, comult, counit, antipode)| HopfDef {
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
}

/// Documents with random (not necessarily lawful) Hopf data under awkward
/// names, plus an automorphism referring to one of them.
fn document() -> impl Strategy<Value = InputDocument> {
    (field(), 1usize..4, "[a-z~/ ]{1,6}", "[A-Z0-9_.]{1,6}").prop_flat_map(|(f, n, name, other)| {
        (hopf(f, n), hopf(f, 1), matrix(f, n, n)).prop_map(move |(h, k, m)| {
            let mut doc = InputDocument::new(f);
            doc.hopf_algebras.insert(name.clone(), h);
            doc.hopf_algebras.insert(other.clone(), k);
            doc.automorphisms.insert(
                "auto".into(),
                AutomorphismDef {
                    hopf: name.clone(),
                    matrix: m,
                },
            );
            doc
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_serialize_parse_round_trips(doc in document()) {
        let json = doc.to_json();
        let back = parse_input(json.as_bytes()).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), json);
    }

    #[test]
    fn verdict_is_pass_iff_every_finding_is_ok(oks in prop::collection::vec(any::<bool>(), 0..12)) {
        let findings = oks
            .iter()
            .enumerate()
            .map(|(i, &ok)| FindingOut {
                subject: format!("s{}", i % 3),
                check: format!("c{i}"),
                anchor: String::new(),
                ok,
                witness: None,
                note: None,
            })
            .collect();
        let r = CliReport::new("check-yd", findings, vec![], vec![]);
        let expected = match (oks.is_empty(), oks.iter().all(|&o| o)) {
            (true, _) => Verdict::NotApplicable,
            (false, true) => Verdict::Pass,
            (false, false) => Verdict::Fail,
        };
        prop_assert_eq!(r.verdict, expected);
        let back: CliReport = serde_json::from_str(&r.to_json()).unwrap();
        prop_assert_eq!(back, r);
    }
}
