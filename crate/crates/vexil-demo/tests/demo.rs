use vexil_demo::{schubert_text, triple_text, vexillary_text};

#[test]
fn schubert_operation() {
    assert_eq!(schubert_text("C", "-1", "plain").unwrap(), "Q_(1)");
    assert_eq!(schubert_text("A", "2 1", "plain").unwrap(), "(x1 - y1)");
    assert!(schubert_text("A", "-1", "plain").is_err());
    assert!(schubert_text("C", "1 2 3 4 5", "plain").is_err());
    assert!(schubert_text("C", "-1", "yaml").is_err());
}

#[test]
fn vexillary_operation() {
    let out = vexillary_text("C", "-1 2", "plain").unwrap();
    assert!(out.contains("triple: k=1;p=1;q=1;type=C"), "{out}");
    assert!(out.contains("polynomial: Q_(1)"));
    assert!(vexillary_text("C", "-3 2 -1", "plain").unwrap().contains("not vexillary"));
}

#[test]
fn triple_operation() {
    let out = triple_text("k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=C", "plain").unwrap();
    assert!(out.starts_with("w: 1 -9 -8 -4 10 -5 -3 -7 -6 -2"), "{out}");
    assert!(!out.contains("polynomial"));
    let a = triple_text("k=2,6,8;p=7,4,2;q=5,7,9;type=A", "json").unwrap();
    assert!(a.contains("\"w\": \"1 10 8 9 2 3 6 4 5 7\""));
    assert!(triple_text("k=1,2;p=3,3;q=3,3;type=C", "plain").is_err());
}
