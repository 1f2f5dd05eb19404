use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::exactlin::{Field, Mat};
use crate::fixtures::{broken_e1, canonical_pairing, e1, e1_set, e2, e3, e3_star, matrix_trivial_action};
use crate::groups_groupoids::{groupoid_of_action, to_kg_partial_action, FiniteGroup, SetPartialAction};
use crate::partial_actions::smash_hopf_algebroid;
use crate::structures::group_algebra;

fn file_with(name: &str, obj: &Object) -> FixtureFile {
    let mut f = FixtureFile::new(Field::Q);
    f.insert(name, obj);
    f
}

fn reparse(f: &FixtureFile) -> FixtureFile {
    FixtureFile::parse(&f.to_json(), None).unwrap()
}

#[test]
fn e1_round_trips_bit_exact() {
    let f = file_with("e1", &Object::PartialAction(e1()));
    let text = f.to_json();
    let g = FixtureFile::parse(&text, None).unwrap();
    assert_eq!(g, f);
    assert_eq!(g.to_json(), text);
    let Object::PartialAction(pa) = g.get("e1").unwrap() else { panic!() };
    assert_eq!(pa.act, e1().act);
    assert_eq!(pa.a.names(), e1().a.names());
    assert_eq!(f.objects.keys().collect::<Vec<_>>(), ["e1", "e1.algebra", "e1.hopf"]);
}

#[test]
fn every_object_kind_round_trips() {
    let spa = e1_set();
    let objects = vec![
        ("g", Object::Group(FiniteGroup::symmetric(3))),
        ("a", Object::Algebra(e1().a)),
        ("c", Object::Coalgebra(e3().c)),
        ("h", Object::Hopf(e1().h)),
        ("pa", Object::PartialAction(e1())),
        ("pc", Object::PartialCoaction(e2())),
        ("pmc", Object::ModuleCoalgebra(e3())),
        ("pcc", Object::ComoduleCoalgebra(e3_star())),
        ("p", Object::Pairing(canonical_pairing(2))),
        ("spa", Object::SetPartialAction(spa.clone())),
        ("gd", Object::Groupoid(groupoid_of_action(&spa))),
        ("hh", Object::HopfAlgebroid(smash_hopf_algebroid(&e1()).unwrap())),
        ("cr", Object::CRing(e3())),
    ];
    let mut f = FixtureFile::new(Field::Q);
    for (n, o) in &objects {
        f.insert(n, o);
    }
    let g = reparse(&f);
    assert_eq!(g, f);
    for (n, o) in &objects {
        let back = g.get(n).unwrap();
        assert_eq!(back.kind(), o.kind());
        let again = file_with(n, &back);
        assert_eq!(again, file_with(n, o), "{n}");
    }
    let Object::HopfAlgebroid(h) = g.get("hh").unwrap() else { panic!() };
    assert!(h.same_maps(&smash_hopf_algebroid(&e1()).unwrap()));
    let Object::SetPartialAction(s) = g.get("spa").unwrap() else { panic!() };
    assert_eq!(s, spa);
}

#[test]
fn shared_components_are_stored_once() {
    let mut f = FixtureFile::new(Field::Q);
    f.insert("e1", &Object::PartialAction(e1()));
    f.insert("broken", &Object::PartialAction(broken_e1()));
    f.insert("kz2", &Object::Hopf(group_algebra(&FiniteGroup::cyclic(2))));
    assert_eq!(f.names_of_kind("hopf"), ["e1.hopf", "kz2"]);
    assert_eq!(f.objects["broken"].references(), ["e1.hopf", "e1.algebra"]);
    assert!(f.is_referenced("e1.hopf"));
    assert!(!f.is_referenced("e1"));
}

const HEAD: &str = r#"{"schema":"phopf-fixture/1","field":"Q","objects":"#;

fn parse_objects(objects: &str) -> crate::Result<FixtureFile> {
    FixtureFile::parse(&format!("{HEAD}{objects}}}"), None)
}

#[test]
fn zero_denominator_is_a_schema_error() {
    let r = parse_objects(r#"{"a":{"kind":"algebra","names":["1"],"mult":[[0,0,0,"1/0"]],"unit":[[0,"1"]]}}"#);
    match r {
        Err(Error::SchemaError { context, message }) => {
            assert_eq!(context, "objects.a.mult");
            assert!(message.contains("1/0"), "{message}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn undefined_group_is_an_unresolved_reference() {
    let r = parse_objects(r#"{"s":{"kind":"set-partial-action","group":"z2","points":1,"maps":[[0]]}}"#);
    assert!(matches!(r, Err(Error::UnresolvedReference(m)) if m.contains("z2")));
}

#[test]
fn malformed_json_reports_its_position() {
    let r = FixtureFile::parse("{\"schema\": \"phopf-fixture/1\",\n \"field\": Q}", None);
    assert!(matches!(r, Err(Error::SchemaError { context, .. }) if context == "line 2, column 11"));
}

#[test]
fn invalid_inputs_are_schema_errors() {
    let dup = r#"{"a":{"kind":"algebra","names":["1"],"mult":[[0,0,0,"1"],[0,0,0,"1"]],"unit":[[0,"1"]]}}"#;
    assert!(matches!(parse_objects(dup), Err(Error::SchemaError { .. })));
    let range = r#"{"a":{"kind":"algebra","names":["1"],"mult":[[0,0,1,"1"]],"unit":[[0,"1"]]}}"#;
    assert!(matches!(parse_objects(range), Err(Error::SchemaError { .. })));
    let unknown = r#"{"a":{"kind":"algebra","names":["1"],"mult":[],"unit":[],"extra":1}}"#;
    assert!(matches!(parse_objects(unknown), Err(Error::SchemaError { .. })));
    let table = r#"{"g":{"kind":"group","names":["e","g"],"table":[[0,1],[1,1]]}}"#;
    assert!(matches!(parse_objects(table), Err(Error::SchemaError { .. })));
    let kind = r#"{"g":{"kind":"group","names":["e"],"table":[[0]]},"s":{"kind":"set-partial-action","group":"g","points":1,"maps":[[0]]},"t":{"kind":"set-partial-action","group":"s","points":1,"maps":[[0]]}}"#;
    assert!(
        matches!(parse_objects(kind), Err(Error::SchemaError { message, .. }) if message.contains("expected a group"))
    );
    let version = r#"{"schema":"phopf-fixture/9","field":"Q","objects":{}}"#;
    assert!(matches!(FixtureFile::parse(version, None), Err(Error::SchemaError { .. })));
    let field = r#"{"schema":"phopf-fixture/1","field":"Fp:4","objects":{}}"#;
    assert!(matches!(FixtureFile::parse(field, None), Err(Error::SchemaError { .. })));
}

#[test]
fn entries_are_canonicalized_on_load() {
    let raw = r#"{"a":{"kind":"algebra","names":["1","x"],"mult":[[1,1,1,"2/2"],[0,1,1,"1"],[0,0,0,"1"],[1,0,1,"1"],[1,1,0,"0"]],"unit":[[0,"3/3"]]}}"#;
    let f = parse_objects(raw).unwrap();
    let ObjectSpec::Algebra { mult, unit, .. } = &f.objects["a"] else { panic!() };
    assert_eq!(mult.iter().map(|e| (e.0, e.1, e.2)).collect::<Vec<_>>(), [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
    assert!(mult.iter().all(|e| e.3 == "1"));
    assert_eq!(unit, &[(0, "1".to_string())]);
}

#[test]
fn field_override_reinterprets_scalars() {
    let raw = r#"{"a":{"kind":"algebra","names":["1"],"mult":[[0,0,0,"-2/3"]],"unit":[[0,"-3/2"]]}}"#;
    let f = FixtureFile::parse(&format!("{HEAD}{raw}}}"), Some(Field::Fp(5))).unwrap();
    assert_eq!(f.field, Field::Fp(5));
    let ObjectSpec::Algebra { mult, unit, .. } = &f.objects["a"] else { panic!() };
    assert_eq!(mult[0].3, "1");
    assert_eq!(unit[0].1, "1");
    assert!(f.to_json().contains("\"field\": \"Fp:5\""));
}

#[test]
fn check_selects_and_reports() {
    let f = file_with("e1", &Object::PartialAction(e1()));
    let (name, r) = run_check(&f, Some(CheckKind::PartialAction), None).unwrap();
    assert_eq!(name, "e1");
    assert!(r.passed());
    let (name, _) = run_check(&f, None, None).unwrap();
    assert_eq!(name, "e1");
    assert!(run_check(&f, Some(CheckKind::Hopf), None).unwrap().1.passed());
    assert!(matches!(run_check(&f, Some(CheckKind::Groupoid), None), Err(Error::SchemaError { .. })));
    assert!(matches!(run_check(&f, None, Some("nope")), Err(Error::UnresolvedReference(_))));

    let b = file_with("broken", &Object::PartialAction(broken_e1()));
    let (_, r) = run_check(&b, Some(CheckKind::PartialAction), None).unwrap();
    assert_eq!(verdict_code([&r]), 1);
}

#[test]
fn ambiguous_selection_needs_a_name() {
    let mut f = FixtureFile::new(Field::Q);
    f.insert("e1", &Object::PartialAction(e1()));
    f.insert("other", &Object::PartialAction(broken_e1()));
    assert!(matches!(run_check(&f, Some(CheckKind::PartialAction), None), Err(Error::SchemaError { .. })));
    assert!(run_check(&f, Some(CheckKind::PartialAction), Some("e1")).unwrap().1.passed());
    let reports = run_report(&f).unwrap();
    assert_eq!(reports.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>(), ["e1", "other"]);
    assert_eq!(verdict_code(reports.iter().map(|(_, r)| r)), 1);
}

fn build(f: &FixtureFile, c: Construction) -> crate::Result<(FixtureFile, String)> {
    run_build(f, &BuildRequest { construction: c, object: None, hopf: None, pairing: None, name: None })
}

#[test]
fn build_outputs_recheck_clean() {
    let f = file_with("e1", &Object::PartialAction(e1()));
    let (out, summary) = build(&f, Construction::SmashAlgebroid).unwrap();
    assert_eq!(summary, "e1.smash-algebroid: hopf-algebroid, dim 3 over a base of dim 2");
    let out = reparse(&out);
    let (_, r) = run_check(&out, None, None).unwrap();
    assert!(r.passed(), "{r}");

    let s = file_with("e1set", &Object::SetPartialAction(e1_set()));
    let (out, summary) = build(&s, Construction::Groupoid).unwrap();
    assert!(summary.ends_with("groupoid, 3 arrows on 2 objects"), "{summary}");
    assert!(run_check(&reparse(&out), Some(CheckKind::Groupoid), None).unwrap().1.passed());

    let c = file_with("e3", &Object::ModuleCoalgebra(e3()));
    let (out, summary) = build(&c, Construction::CRing).unwrap();
    assert!(summary.ends_with("c-ring, dim 3"), "{summary}");
    assert!(run_check(&reparse(&out), Some(CheckKind::CRing), None).unwrap().1.passed());

    let d = file_with("e3s", &Object::ComoduleCoalgebra(e3_star()));
    let (out, summary) = build(&d, Construction::Cosmash).unwrap();
    assert!(summary.ends_with("coalgebra, dim 3"), "{summary}");
    assert!(run_check(&reparse(&out), None, None).unwrap().1.passed());
}

#[test]
fn transfers_need_the_other_hopf_algebra_and_a_pairing() {
    let mut f = FixtureFile::new(Field::Q);
    f.insert("e1", &Object::PartialAction(e1()));
    f.insert("e2", &Object::PartialCoaction(e2()));
    f.insert("pairing", &Object::Pairing(canonical_pairing(2)));
    let req = BuildRequest {
        construction: Construction::CoactionFromAction,
        object: None,
        hopf: Some("e2.hopf"),
        pairing: None,
        name: Some("back"),
    };
    let (out, _) = run_build(&f, &req).unwrap();
    let Object::PartialCoaction(pc) = out.get("back").unwrap() else { panic!() };
    assert_eq!(pc.rho, e2().rho);
    let req = BuildRequest { construction: Construction::ActionFromCoaction, hopf: Some("e1.hopf"), ..req };
    let (out, _) = run_build(&f, &req).unwrap();
    let Object::PartialAction(pa) = out.get("back").unwrap() else { panic!() };
    assert_eq!(pa.act, e1().act);
}

#[test]
fn refused_constructions_name_the_hypothesis() {
    let f = file_with("m", &Object::PartialAction(matrix_trivial_action()));
    let e = build(&f, Construction::SmashAlgebroid).unwrap_err();
    assert_eq!(exit_code(&e), 2);
    assert!(e.to_string().contains("base algebra not commutative"), "{e}");
    let g = file_with("e2", &Object::PartialCoaction(e2()));
    assert_eq!(exit_code(&build(&g, Construction::SplitAlgebroid).unwrap_err()), 2);
}

#[test]
fn pairs_run_from_fixtures() {
    let mut f = FixtureFile::new(Field::Q);
    f.insert("e1", &Object::PartialAction(e1()));
    f.insert("e2", &Object::PartialCoaction(e2()));
    f.insert("e3s", &Object::ComoduleCoalgebra(e3_star()));
    f.insert("hopf-pairing", &Object::Pairing(canonical_pairing(2)));
    f.insert("structure", &Object::Pairing(crate::structures::Pairing::identity(2)));
    let skew = PairRequest {
        kind: PairKind::Skew,
        left: None,
        right: None,
        hopf_pairing: None,
        pairing: Some("hopf-pairing"),
    };
    let (_, r) = run_pair(&f, &skew).unwrap();
    assert!(r.passed(), "{r}");
    let sc = PairRequest {
        kind: PairKind::SmashCosmash,
        left: None,
        right: None,
        hopf_pairing: Some("hopf-pairing"),
        pairing: Some("structure"),
    };
    let (_, r) = run_pair(&f, &sc).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.dims.get("A#H"), Some(&3));
    let ambiguous = PairRequest { pairing: None, ..skew };
    assert!(matches!(run_pair(&f, &ambiguous), Err(Error::SchemaError { .. })));
}

#[test]
fn json_and_text_reports_agree() {
    let f = file_with("broken", &Object::PartialAction(broken_e1()));
    let (name, r) = run_check(&f, None, None).unwrap();
    let reports = [(name, r.clone())];
    let v: serde_json::Value = serde_json::from_str(&render_reports(&reports, f.field, Format::Json)).unwrap();
    let text = render_reports(&reports, f.field, Format::Text);
    assert_eq!(v["schema"], REPORT_SCHEMA);
    let item = &v["reports"][0];
    assert_eq!(item["passed"], false);
    for (a, j) in r.axioms.iter().zip(item["axioms"].as_array().unwrap()) {
        assert_eq!(j["name"], a.name.as_str());
        let mark = if a.passed() { "pass" } else { "FAIL" };
        assert!(text.contains(&format!("[{mark}] {} ({}/{}", a.name, a.checked - a.failures, a.checked)));
        for (w, jw) in a.witnesses.iter().zip(j["witnesses"].as_array().unwrap()) {
            let lhs: Vec<String> =
                jw["lhs"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect();
            assert!(text.contains(&format!("witness ({}): lhs=[{}]", w.labels.join(","), lhs.join(","))));
        }
    }
}

#[test]
fn fp_reports_print_residues() {
    let mut pa = broken_e1();
    pa.act = pa.act.clone();
    let f = FixtureFile::parse(&file_with("b", &Object::PartialAction(pa)).to_json(), Some(Field::Fp(3))).unwrap();
    let (name, r) = run_check(&f, None, None).unwrap();
    let text = render_reports(&[(name, r)], f.field, Format::Text);
    assert!(text.contains("[Fp:3]: FAIL"));
    assert!(!text.contains("-1"), "{text}");
}

fn random_set_action() -> impl Strategy<Value = SetPartialAction> {
    (2usize..=4, 1usize..=2).prop_flat_map(|(n, copies)| {
        proptest::collection::vec(any::<bool>(), n * copies).prop_map(move |mask| {
            let global =
                SetPartialAction::global(FiniteGroup::cyclic(n), n * copies, |a, x| (x / n) * n + (x % n + a) % n)
                    .unwrap();
            let keep: Vec<usize> = mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
            global.restrict(if keep.is_empty() { &[0] } else { &keep }).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_objects_round_trip(spa in random_set_action()) {
        let pa = to_kg_partial_action(&spa).unwrap();
        let mut f = FixtureFile::new(Field::Q);
        f.insert("spa", &Object::SetPartialAction(spa.clone()));
        f.insert("pa", &Object::PartialAction(pa.clone()));
        let text = f.to_json();
        let g = FixtureFile::parse(&text, None).unwrap();
        prop_assert_eq!(g.to_json(), text);
        let Object::PartialAction(back) = g.get("pa").unwrap() else { panic!() };
        prop_assert_eq!(back.act, pa.act);
        let Object::SetPartialAction(s) = g.get("spa").unwrap() else { panic!() };
        prop_assert_eq!(s, spa);
    }

    #[test]
    fn random_matrices_round_trip(entries in proptest::collection::vec((-4i64..=4, 1i64..=3), 6)) {
        let form = Mat::from_fn(2, 3, |j| {
            crate::exactlin::Vector::from_dense(&[0, 1].map(|i| {
                let (n, d) = entries[2 * j + i];
                crate::exactlin::Scalar::frac(n, d)
            }))
        });
        let f = file_with("p", &Object::Pairing(crate::structures::Pairing::new(form.clone())));
        let g = reparse(&f);
        let Object::Pairing(p) = g.get("p").unwrap() else { panic!() };
        prop_assert_eq!(p.form, form);
        prop_assert_eq!(g.to_json(), f.to_json());
    }
}
