use alon_tarsi::cli::{run, Outcome};
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/data/graphs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("alon-tarsi").chain(args.iter().copied()))
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

#[test]
fn at_number_of_c5() {
    let o = cli(&["at-number", &data("c5.graph")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = json(&o);
    assert_eq!(v["at_number"], 3);
}

#[test]
fn certify_then_verify_then_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ico.json");
    let p = path.to_str().unwrap();
    assert_eq!(cli(&["certify", &data("icosahedron.graph"), "-o", p]).code, 0);
    let o = cli(&["verify", p]);
    assert_eq!(o.code, 0, "{}", o.stdout);

    let mut cert: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let arc = cert["arcs"][0].as_array().unwrap().clone();
    cert["arcs"][0] = Value::Array(vec![arc[1].clone(), arc[0].clone()]);
    std::fs::write(&path, cert.to_string()).unwrap();
    assert_eq!(cli(&["verify", p]).code, 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["certify", "--trace"],
        vec!["audit"],
        vec!["choice-number"],
    ] {
        let file = if args[0] == "choice-number" { data("c5.graph") } else { data("octahedron.graph") };
        let mut full = args.clone();
        full.insert(1, &file);
        let a = cli(&full);
        let b = cli(&[&full[..], &["--jobs", "1"]].concat());
        assert_eq!(a.code, 0, "{}", a.stderr);
        assert_eq!(a.stdout, b.stdout);
    }
    let seeded = |s: &str| {
        let dir = tempfile::tempdir().unwrap();
        let cert = dir.path().join("c.json");
        cli(&["certify", &data("wheel5.graph"), "-o", cert.to_str().unwrap()]);
        cli(&["color", "--from-cert", cert.to_str().unwrap(), "--random", "5", "--seed", s]).stdout
    };
    assert_eq!(seeded("3"), seeded("3"));
}

#[test]
fn coloring_exit_codes() {
    let ok = cli(&["color", &data("k2.graph"), "--lists", &data("k2-lists.json")]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
    assert_eq!(json(&ok)["coloring"]["1"], 2);
    let bad = cli(&["color", &data("k2.graph"), "--lists", &data("k2-bad-lists.json")]);
    assert_eq!(bad.code, 2);
}

#[test]
fn other_commands() {
    let o = cli(&["coefficient", &data("c4.graph"), "--eta", "0=1,1=1,2=1,3=1"]);
    assert_eq!(json(&o)["coefficient"], "-2");
    let o = cli(&["diff", &data("triangle.graph"), "--arcs", "v1->v2,v3->v1,v3->v2"]);
    assert_eq!((json(&o)["even_count"].clone(), json(&o)["odd_count"].clone()), (1.into(), 0.into()));
    let o = cli(&["choice-number", &data("c5.graph")]);
    assert_eq!(json(&o)["choice_number"], 3);
    assert_eq!(cli(&["audit", "--all"]).code, 0);
}

#[test]
fn errors_exit_with_one() {
    assert_eq!(cli(&["at-number", "/nonexistent.graph"]).code, 1);
    assert_eq!(cli(&["certify", &data("k5.graph")]).code, 1);
    assert_eq!(cli(&["choice-number", &data("c7.graph")]).code, 1);
    assert_eq!(cli(&["bogus"]).code, 1);
}
