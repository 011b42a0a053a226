use serde_json::Value;
use slimlat_web::{analyze, build, collapse};

const S7: &str = "grid 2 2\nfork 3 0\n";

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn build_lays_out_s7() {
    let v = parse(build(S7));
    assert_eq!(v["ok"], true);
    let r = &v["result"];
    assert_eq!(r["nodes"].as_array().unwrap().len(), 7);
    assert_eq!(r["edges"].as_array().unwrap().len(), 9);
    assert_eq!(r["t"], 2);
    assert_eq!(r["nodes"][4]["labels"], "middle");
    assert_eq!(r["nodes"][4]["rank"], 2);
    assert_eq!(r["nodes"][4]["slot"], 1);
}

#[test]
fn analyze_reports_checks() {
    let v = parse(analyze(S7));
    let r = &v["result"];
    assert_eq!(r["con_size"], 5);
    assert_eq!(r["dual_atoms"].as_array().unwrap().len(), 2);
    assert!(r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn collapse_gives_swing_sequences() {
    // con(0, 5) collapses [0,5], [4,3] via a swing, and more
    let v = parse(collapse(S7, 0, 5));
    let r = &v["result"];
    let collapsed = r["collapsed"].as_array().unwrap();
    assert!(collapsed
        .iter()
        .all(|c| !c["sequence"].as_array().unwrap().is_empty()));
    assert!(collapsed
        .iter()
        .any(|c| c["interval"] == serde_json::json!([4, 3])));
}

#[test]
fn errors_are_reported() {
    let v = parse(build("grid 2 2\nfork 9 0\n"));
    assert_eq!(v["ok"], false);
    assert!(v["error"].as_str().unwrap().contains("step 1"));
    let v = parse(collapse(S7, 0, 3));
    assert_eq!(v["ok"], false);
    let v = parse(build("nonsense"));
    assert!(v["error"].as_str().unwrap().starts_with("line 1, column 1"));
}
