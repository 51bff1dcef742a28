use dla_lab_wasm::{bracket_json, complete_report_json, cycle_orbits_json, cycle_report_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn cycle_report() {
    let v = parse(cycle_report_json(5).unwrap());
    assert_eq!(v["dim"], 14);
    assert_eq!(v["center_dim"], 2);
    assert_eq!(v["variance_exact"], "8/15");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert!(cycle_report_json(2).is_err());
    assert!(cycle_report_json(13).is_err());
}

#[test]
fn complete_report() {
    let v = parse(complete_report_json(4).unwrap());
    assert_eq!((v["dim"].as_u64(), v["ideal_dim"].as_u64(), v["center_dim"].as_u64()), (Some(15), Some(14), Some(1)));
    assert_eq!(v["formula"]["dim"], 15);
    assert_eq!(v["explicit_basis_ok"], true);
}

#[test]
fn bracket_lookup() {
    let labels = parse(cycle_orbits_json(4).unwrap());
    assert_eq!(labels.as_array().unwrap().len(), 11);
    assert_eq!(labels[0], "X");
    // [X, X] = 0
    let v = parse(bracket_json(4, 0, 0).unwrap());
    assert!(v["terms"].as_array().unwrap().is_empty());
    let ab = parse(bracket_json(4, 0, 3).unwrap());
    let ba = parse(bracket_json(4, 3, 0).unwrap());
    for (s, t) in ab["terms"].as_array().unwrap().iter().zip(ba["terms"].as_array().unwrap()) {
        assert_eq!(s["orbit"], t["orbit"]);
        assert_eq!(s["coefficient"].as_i64().unwrap(), -t["coefficient"].as_i64().unwrap());
    }
    assert!(!ab["terms"].as_array().unwrap().is_empty() || ab["left"] == ab["right"]);
    assert!(bracket_json(4, 0, 11).is_err());
}
