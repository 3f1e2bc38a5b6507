use lie_algebroid::catalogue;
use lie_algebroid::io::{algebroid_doc, sparse_terms, AlgebroidDoc, Document};
use lie_algebroid::Error;

const SO3: &str = include_str!("../data/so3.json");

#[test]
fn catalogue_documents_round_trip() {
    for name in [
        "abelian4",
        "so3",
        "sl2",
        "heisenberg",
        "tr4",
        "sphere1",
        "sphere2",
        "sphere3",
    ] {
        let alg = catalogue::by_name(name).unwrap();
        let doc = algebroid_doc(&alg);
        let back = Document::parse(&doc.to_json()).unwrap();
        assert!(back.algebroid.is_verified(), "{}", name);
        assert_eq!(algebroid_doc(&back.algebroid), doc, "{}", name);
        assert_eq!(back.algebroid.ring().names(), alg.ring().names());
    }
}

#[test]
fn sphere_relation_keeps_its_distinguished_variable() {
    let doc = algebroid_doc(&catalogue::sphere(2));
    assert_eq!(
        doc.relations,
        vec!["x1^2 + x2^2 + x3^2 + x4^2 - 1".to_string()]
    );
    let back = Document::parse(&doc.to_json()).unwrap();
    assert_eq!(
        back.algebroid.ring().to_string(),
        catalogue::sphere(2).ring().to_string()
    );
}

#[test]
fn named_structures_resolve() {
    let d = Document::parse(SO3).unwrap();
    assert_eq!(
        d.multivector("pi12").unwrap(),
        d.bisection("pi12").unwrap().to_bivector().unwrap()
    );
    let e1 = d.multivector("e1").unwrap();
    assert_eq!(sparse_terms(&e1)[0].indices, vec![1]);
    assert!(matches!(d.endo("J"), Err(Error::UnknownName(_))));
    assert_eq!(d.names()["multivectors"], vec!["e1", "e2", "e3", "pi12"]);
}

#[test]
fn malformed_documents_are_rejected() {
    let bad_json = Document::parse("{ not json");
    assert!(matches!(bad_json, Err(Error::Parse(_))));

    let mut doc: AlgebroidDoc = serde_json::from_str(SO3).unwrap();
    doc.structure.insert("C^1_{3,2}".into(), "1".into());
    assert!(matches!(Document::from_doc(doc), Err(Error::Parse(_))));

    let mut doc: AlgebroidDoc = serde_json::from_str(SO3).unwrap();
    doc.structure.insert("C^1_{1,2}".into(), "q".into());
    assert!(matches!(
        Document::from_doc(doc),
        Err(Error::UnknownVariable(_))
    ));

    let mut doc: AlgebroidDoc = serde_json::from_str(SO3).unwrap();
    doc.anchor.pop();
    assert!(matches!(
        Document::from_doc(doc),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn failed_structure_equations_are_reported_not_raised() {
    // The anchor no longer intertwines the brackets.
    let mut doc: AlgebroidDoc = serde_json::from_str(include_str!("../data/sphere1.json")).unwrap();
    doc.structure.insert("C^1_{1,2}".into(), "x2".into());
    let d = Document::from_doc(doc).unwrap();
    assert!(!d.algebroid.is_verified());
    assert!(!d.algebroid.verification_report().is_ok());
}
