use std::path::PathBuf;

use hesitant_core::*;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

#[test]
fn missing_membership_names_set_and_element() {
    let text = r#"{"universe":["x","y"],"sets":{"A":{"x":["0.5"]}}}"#;
    let err = Document::from_json(text).unwrap_err();
    assert_eq!(err, Error::MissingElement { set: "A".into(), element: "y".into() });
    let msg = err.to_string();
    assert!(msg.contains("\"A\"") && msg.contains("\"y\""), "{msg}");
}

#[test]
fn out_of_range_degree_is_rejected() {
    let text = r#"{"universe":["x"],"sets":{"A":{"x":["1.5"]}}}"#;
    match Document::from_json(text) {
        Err(Error::BadDegree { set, element, source }) => {
            assert_eq!((set.as_str(), element.as_str()), ("A", "x"));
            assert_eq!(*source, Error::DegreeOutOfRange("1.5".into()));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn schema_violations_are_reported() {
    for text in [
        r#"{"universe":["x"],"sets":{},"extra":1}"#,
        r#"{"sets":{}}"#,
        r#"{"universe":["x"],"sets":{"A":{"x":[0.5]}}}"#,
        "not json",
    ] {
        assert!(matches!(Document::from_json(text), Err(Error::Document(_))), "{text}");
    }
    let dup = r#"{"universe":["x","x"],"sets":{}}"#;
    assert!(matches!(Document::from_json(dup), Err(Error::DuplicateElement(_))));
    let fam = r#"{"universe":["x"],"sets":{"A":{"x":["0.1"]}},"families":{"F":["A","Q"]}}"#;
    assert!(matches!(Document::from_json(fam), Err(Error::UnknownMember { .. })));
}

#[test]
fn saving_canonicalises_order_and_decimals() {
    let text = r#"{"universe":["x"],"sets":{"A":{"x":["0.30","0.5","1/4",".7"]}},"families":{}}"#;
    let doc = Document::from_json(text).unwrap();
    let saved = doc.to_json();
    let again = Document::from_json(&saved).unwrap();
    assert_eq!(again, doc);
    assert_eq!(again.to_json(), saved);
    let degrees: Vec<String> = doc.set("A").unwrap().at(0).degrees().iter().map(|d| d.to_string()).collect();
    assert_eq!(degrees, ["0.7", "0.5", "0.3", "0.25"]);
    assert!(saved.contains("\"0.25\""));
    assert!(!saved.contains("families"), "empty families are omitted:\n{saved}");
}

#[test]
fn files_round_trip() {
    let dir = std::env::temp_dir().join(format!("hfs-doc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["expression-types.json", "third-set.json", "lattice-failures.json", "schemes.json"] {
        let doc = Document::load(data(name)).unwrap();
        let path = dir.join(name);
        doc.save(&path).unwrap();
        let back = Document::load(&path).unwrap();
        assert_eq!(back, doc, "{name}");
        assert_eq!(std::fs::read_to_string(&path).unwrap(), doc.to_json());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn expression_types_document() {
    let doc = Document::load(data("expression-types.json")).unwrap();
    let (a, b, c) = (doc.set("A").unwrap(), doc.set("B").unwrap(), doc.set("C").unwrap());
    assert!(set_equality(RelationKind::S, a, b).unwrap());
    assert!(!set_equality(RelationKind::S, a, c).unwrap());
    assert_eq!(doc.universe().ids(), ["x", "y"]);
}

#[test]
fn scores_become_memberships() {
    let table = std::fs::read_to_string(data("schemes.csv")).unwrap();
    let doc = ingest_scores(&table, "H").unwrap();
    assert_eq!(doc, Document::load(data("schemes.json")).unwrap());
    assert_eq!(doc.set("H").unwrap().get("x1").unwrap().len(), 2);

    let blank_only = "scheme,expert,score\na,e1,0.5\nb,e1,\n";
    assert!(matches!(ingest_scores(blank_only, "H"), Err(Error::ScoreTable(m)) if m.contains("\"b\"")));
    let bad = "scheme,expert,score\na,e1,2\n";
    assert!(matches!(ingest_scores(bad, "H"), Err(Error::ScoreTable(m)) if m.contains("line 2")));
    let no_column = "scheme,who,score\na,e1,0.5\n";
    assert!(matches!(ingest_scores(no_column, "H"), Err(Error::ScoreTable(_))));
    let shuffled = "score, scheme ,expert\n0.4,b,e2\n0.5,a,e1\n";
    let doc = ingest_scores(shuffled, "S").unwrap();
    assert_eq!(doc.universe().ids(), ["b", "a"]);
}

#[test]
fn witnesses_survive_serialisation() {
    let law = find_law("exam-sec2.6-distrib-m").unwrap();
    let report = laws::run_laws(std::slice::from_ref(law), &GeneratorConfig::default(), false).unwrap();
    let w = &report.laws[0].witnesses[0];
    let text = serde_json::to_string_pretty(w).unwrap();
    let back: Witness = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, w);
    assert!(back.replay().unwrap().is_violation());
    assert!(text.contains("\"fixture\""));
}
