use harmonic_web::{analysis_json, diagram, fraction_json};
use serde_json::Value;

#[test]
fn analysis_has_display_fields() {
    let v: Value = serde_json::from_str(&analysis_json(4, 7, 9).unwrap()).unwrap();
    assert_eq!(v["name"], "7₅");
    assert_eq!(v["fraction_text"], "17/5");
    assert_eq!(v["alexander_text"], "2 - 4t + 5t^2 - 4t^3 + 2t^4");
    assert_eq!(v["determinant"], 17);
}

#[test]
fn errors_are_messages() {
    assert!(analysis_json(3, 6, 7).unwrap_err().contains("not coprime"));
    assert!(analysis_json(17, 19, 23).unwrap_err().contains("the demo stops at"));
    assert!(fraction_json(8, 3).is_err());
}

#[test]
fn both_drawings() {
    let xy = diagram(3, 5, 7, false, true).unwrap();
    assert!(xy.contains(r#"class="strand""#) && xy.contains(r#"class="sign""#));
    let bil = diagram(3, 5, 7, true, false).unwrap();
    assert_eq!(bil.matches(r#"class="crossing""#).count(), 4);
}

#[test]
fn fraction_report() {
    let v: Value = serde_json::from_str(&fraction_json(9, 4).unwrap()).unwrap();
    assert_eq!(v["even_representatives"][0]["expansion"], serde_json::json!([1, 2, -1, 2, 1, -2, 1, 2]));
}
