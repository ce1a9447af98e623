use divdiff_web::{interpolant_json, nullspace_json, probe_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn nullspace_small_orders() {
    let v = parse(nullspace_json(3).unwrap());
    assert_eq!(v["L"], 6);
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["forced_zero_points"], serde_json::json!([0, 3, 6]));
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    assert_eq!(parse(nullspace_json(2).unwrap())["dimension"], 0);
    assert!(nullspace_json(0).is_err());
    assert!(nullspace_json(40).is_err());
}

#[test]
fn probe_settles_past_cutoff() {
    let v = parse(probe_json("plv:L=2;0,1,0", "0", "1/4", 1, 64).unwrap());
    assert_eq!(v["cutoff"], 4);
    let series = v["series"].as_array().unwrap();
    assert_eq!(series.len(), 7);
    for p in series.iter().filter(|p| p["N"].as_u64().unwrap() >= 4) {
        assert_eq!(p["residual_times_N"]["exact"], "2");
    }
    assert!(probe_json("pl:hat.csv", "0", "1/4", 1, 8).unwrap_err().contains("plv:"));
    assert!(probe_json("poly:1", "0", "0", 1, 8).is_err());
}

#[test]
fn interpolant_of_a_hat() {
    let v = parse(interpolant_json("plv:L=6;0,1,0,0,0,0,0", 3, 61).unwrap());
    assert_eq!(v["degree_reduced"], true);
    assert_eq!(v["identity"]["equal"], true);
    assert_eq!(v["x"].as_array().unwrap().len(), 61);
    assert!(v["q"].as_array().unwrap().iter().all(|y| y.as_f64() == Some(0.0)));

    let cubic = parse(interpolant_json("poly:0,0,0,2", 3, 11).unwrap());
    assert_eq!(cubic["leading_coefficient"]["exact"], "2");
    assert_eq!(cubic["interpolant"], serde_json::json!(["0", "0", "0", "2"]));
}

#[test]
fn pole_between_knots_leaves_gaps() {
    // 1/(x - 1/4): knots 0, 1/2, 1 avoid the pole, the sample grid hits it
    let v = parse(interpolant_json("ratfun:1;-1/4,1", 2, 5).unwrap());
    assert!(v["f"][1].is_null());
    assert!(v["q"][1].is_number());
}
