use std::collections::{BTreeSet, HashMap};
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hypergeo::construct::{run, ConstructionState, Object, Script};

fn hypergeo(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypergeo")).args(args).current_dir(dir).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn kv(o: &Output) -> HashMap<String, String> {
    stdout(o)
        .lines()
        .filter(|l| !l.starts_with("row="))
        .filter_map(|l| l.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())))
        .collect()
}

fn val(map: &HashMap<String, String>, key: &str) -> f64 {
    map.get(key).unwrap_or_else(|| panic!("no {key} in {map:?}")).parse().unwrap()
}

fn script(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scripts").join(name)
}

fn tmp() -> tempfile::TempDir {
    tempfile::tempdir().unwrap()
}

#[test]
fn right_triangle_from_legs() {
    let d = tmp();
    let o = hypergeo(&["solve", "--right", "a=1", "b=1", "--k", "1", "--format", "kv"], d.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let m = kv(&o);
    let want = (1f64.cosh() * 1f64.cosh()).acosh();
    assert!((val(&m, "c") - want).abs() < 1e-12);
    assert_eq!(m["alpha"], m["beta"]);
    assert_eq!(val(&m, "gamma_deg"), 90.0);
}

#[test]
fn right_triangle_from_angles_is_rigid() {
    let d = tmp();
    let o = hypergeo(&["solve", "--right", "alpha=45d", "beta=30d", "--format", "kv"], d.path());
    assert_eq!(code(&o), 0);
    let m = kv(&o);
    let (a, b) = (PI / 4.0, PI / 6.0);
    assert!((val(&m, "c").cosh() - 1.0 / (a.tan() * b.tan())).abs() < 1e-12);
    assert!((val(&m, "alpha_deg") - 45.0).abs() < 1e-12);
    assert!(val(&m, "a") > 0.0 && val(&m, "b") > 0.0);
}

#[test]
fn general_triangle_equilateral_aaa() {
    let d = tmp();
    let o = hypergeo(&["solve", "alpha=pi/6", "beta=30d", "gamma=pi/6", "--format", "kv"], d.path());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let m = kv(&o);
    let c = (PI / 6.0).cos();
    let want = (c / (1.0 - c)).acosh();
    for s in ["a", "b", "c"] {
        assert!((val(&m, s) - want).abs() < 1e-9);
    }
    assert!((val(&m, "area") - PI / 2.0).abs() < 1e-12);
}

#[test]
fn impossible_and_insufficient_givens_are_usage_errors() {
    let d = tmp();
    let o = hypergeo(&["solve", "--right", "a=1", "c=0.5"], d.path());
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("hypotenuse"));
    assert_eq!(code(&hypergeo(&["solve", "--right", "a=1"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["solve", "--right", "a=1", "a=2"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["solve", "--right", "q=1", "a=2"], d.path())), 1);
}

#[test]
fn eval_catalog_examples() {
    let d = tmp();
    let o = hypergeo(&["eval", "circle-area", "r=2asinh0.5", "--format", "kv"], d.path());
    assert_eq!(code(&o), 0);
    assert!((val(&kv(&o), "value") - PI).abs() < 1e-12);

    let o = hypergeo(&["eval", "circumference", "r=1", "--k", "1e6", "--format", "kv"], d.path());
    assert!(((val(&kv(&o), "value") - 2.0 * PI) / (2.0 * PI)).abs() < 1e-12);

    let o = hypergeo(&["eval", "parallelism", "y=0", "--format", "kv"], d.path());
    assert_eq!(val(&kv(&o), "value_deg"), 90.0);

    let o = hypergeo(&["eval", "sphere", "x=1", "--format", "kv"], d.path());
    let m = kv(&o);
    assert!((val(&m, "great_circle") - 2.0 * PI * 1f64.sinh()).abs() < 1e-12);

    let o = hypergeo(&["eval", "polygon-area", "angles=45d,45d,45d,45d", "--format", "kv"], d.path());
    assert!((val(&kv(&o), "value") - PI).abs() < 1e-12);

    let o = hypergeo(&["eval", "horocycle-sector", "r=2", "--format", "kv"], d.path());
    assert_eq!(val(&kv(&o), "value"), 2.0);
}

#[test]
fn eval_errors() {
    let d = tmp();
    let o = hypergeo(&["eval", "circumference", "r=800"], d.path());
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    assert_eq!(code(&hypergeo(&["eval", "volume-of-everything"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["eval", "circle-area", "r=-1"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["eval", "circle-area"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["eval", "circle-area", "r=two"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["eval", "circle-area", "r=1", "--k", "0"], d.path())), 1);
}

/// Element names, ids and stroke colours of an SVG document.
fn svg_summary(text: &str) -> (BTreeSet<String>, Vec<String>, HashMap<String, String>) {
    let doc = roxmltree::Document::parse(text).expect("well-formed SVG");
    let mut names = BTreeSet::new();
    let mut ids = Vec::new();
    let mut strokes = HashMap::new();
    for n in doc.descendants().filter(|n| n.is_element()) {
        names.insert(n.tag_name().name().to_string());
        if let Some(id) = n.attribute("id") {
            ids.push(id.to_string());
            if let Some(s) = n.attribute("stroke") {
                strokes.insert(id.to_string(), s.to_string());
            }
        }
    }
    (names, ids, strokes)
}

fn drawn_objects(path: &Path) -> BTreeSet<String> {
    let s = Script::parse(&std::fs::read_to_string(path).unwrap()).unwrap();
    let out = run(&s, ConstructionState::new()).unwrap();
    out.state.objects().filter(|(_, o)| !matches!(o, Object::Scalar(_))).map(|(n, _)| n.to_string()).collect()
}

#[test]
fn construct_parallel_script() {
    let d = tmp();
    let path = script("parallel.script");
    let o = hypergeo(&["construct", path.to_str().unwrap(), "--format", "kv"], d.path());
    assert_eq!(code(&o), 0, "{}{}", stdout(&o), stderr(&o));
    assert_eq!(kv(&o)["status"], "pass");
    assert!(stdout(&o).lines().filter(|l| l.starts_with("row=assert")).all(|l| l.ends_with("status=pass")));
    let svg = std::fs::read_to_string(d.path().join("parallel.svg")).unwrap();
    let (names, ids, strokes) = svg_summary(&svg);
    let allowed: BTreeSet<String> = ["svg", "circle", "path", "line", "text"].iter().map(|s| s.to_string()).collect();
    assert!(names.is_subset(&allowed), "{names:?}");
    let unique: BTreeSet<String> = ids.iter().cloned().collect();
    assert_eq!(unique.len(), ids.len());
    assert_eq!(unique, drawn_objects(&path));
    assert_eq!(strokes["DM"], "blue");
    assert_eq!(strokes["cA"], "red");
    assert!(svg.contains("stroke=\"black\""));
}

#[test]
fn svg_is_byte_stable() {
    let d = tmp();
    let path = script("square_quadrature.script");
    let a = hypergeo(&["construct", path.to_str().unwrap(), "--out", "a.svg"], d.path());
    let b = hypergeo(&["construct", path.to_str().unwrap(), "--out", "b.svg"], d.path());
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a).replace("a.svg", "b.svg"), stdout(&b));
    let (x, y) = (std::fs::read(d.path().join("a.svg")).unwrap(), std::fs::read(d.path().join("b.svg")).unwrap());
    assert_eq!(x, y);
}

#[test]
fn square_scene_shows_eight_triangles() {
    let d = tmp();
    let path = script("square_quadrature.script");
    let o = hypergeo(&["construct", path.to_str().unwrap(), "--out", "sq.svg", "--format", "kv"], d.path());
    assert_eq!(code(&o), 0);
    let (_, ids, _) = svg_summary(&std::fs::read_to_string(d.path().join("sq.svg")).unwrap());
    for j in 0..4 {
        for part in ["spoke", "apothem", "side"] {
            assert!(ids.contains(&format!("{part}{j}")), "{part}{j}");
        }
    }
    let rows = stdout(&o);
    assert!(rows.contains("predicate=polygon_area_vs_circle"));
    assert!(rows.contains("predicate=quadrature_angle"));
}

#[test]
fn empty_script_draws_an_empty_scene() {
    let d = tmp();
    std::fs::write(d.path().join("nothing.script"), "").unwrap();
    let o = hypergeo(&["construct", "nothing.script"], d.path());
    assert_eq!(code(&o), 0);
    let (names, ids, _) = svg_summary(&std::fs::read_to_string(d.path().join("nothing.svg")).unwrap());
    assert!(ids.is_empty());
    assert_eq!(names.len(), 2);
}

#[test]
fn construct_failures() {
    let d = tmp();
    std::fs::write(d.path().join("bad.script"), "{\n  \"name\": \"x\",\n  \"steps\": [ { \"op\": \"fly\", \"args\": [] } ]\n}").unwrap();
    let o = hypergeo(&["construct", "bad.script"], d.path());
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let wrong = r#"{"name": "wrong", "params": [
        {"name": "A", "kind": "point", "value": [0, 0]},
        {"name": "B", "kind": "point", "value": [0.5, 0]}],
      "asserts": [{"predicate": "distance", "args": ["A", "B", 1.0], "tol": 1e-9}]}"#;
    std::fs::write(d.path().join("wrong.script"), wrong).unwrap();
    let o = hypergeo(&["construct", "wrong.script", "--format", "kv"], d.path());
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("status=FAIL"));

    let dangling = r#"{"name": "d", "steps": [{"op": "line", "args": ["P", "Q", "PQ"]}]}"#;
    std::fs::write(d.path().join("dangling.script"), dangling).unwrap();
    let o = hypergeo(&["construct", "dangling.script"], d.path());
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("step 0"));

    assert_eq!(code(&hypergeo(&["construct", "missing.script"], d.path())), 1);
    let parallel = script("parallel.script");
    assert_eq!(code(&hypergeo(&["construct", parallel.to_str().unwrap(), "--k", "2"], d.path())), 1);
    // an impossibly tight tolerance turns the same run into a failure
    assert_eq!(code(&hypergeo(&["construct", parallel.to_str().unwrap(), "--tol", "1e-300"], d.path())), 2);
}

#[test]
fn quadrature_plans() {
    let d = tmp();
    let o = hypergeo(&["quadrature", "1", "--format", "kv"], d.path());
    assert_eq!(code(&o), 0);
    let m = kv(&o);
    assert_eq!(val(&m, "n"), 4.0);
    assert!((val(&m, "v_deg") - 45.0).abs() < 1e-12);
    assert!((val(&m, "s") - 2.0 * 0.5f64.asinh()).abs() < 1e-15);

    let m = kv(&hypergeo(&["quadrature", "3", "--format", "kv"], d.path()));
    assert_eq!(val(&m, "n"), 6.0);
    assert!((val(&m, "v_deg") - 30.0).abs() < 1e-12);

    let m = kv(&hypergeo(&["quadrature", "2", "--format", "kv"], d.path()));
    assert_eq!(val(&m, "n"), 5.0);
    assert!((val(&m, "v") - PI / 5.0).abs() < 1e-15);

    let o = hypergeo(&["quadrature", "1/7"], d.path());
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("denominator 7"));
    assert_eq!(code(&hypergeo(&["quadrature", "-1"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["quadrature", "one"], d.path())), 1);
}

#[test]
fn quadrature_build_runs_the_construction() {
    let d = tmp();
    let o = hypergeo(&["quadrature", "3", "--build", "--out", "hex.svg", "--format", "kv"], d.path());
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(kv(&o)["status"], "pass");
    assert!(d.path().join("hex.svg").exists());
}

#[test]
fn verify_suites() {
    let d = tmp();
    for suite in ["identities", "oracle", "limits", "constructions"] {
        let o = hypergeo(&["verify", suite, "--format", "kv"], d.path());
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
        assert_eq!(kv(&o)["status"], "pass");
    }
    let o = hypergeo(&["verify", "limits"], d.path());
    assert!(stdout(&o).contains("1e4"));
}

#[test]
fn verify_is_deterministic() {
    let d = tmp();
    let a = hypergeo(&["verify", "all", "--seed", "42"], d.path());
    let b = hypergeo(&["verify", "all", "--seed", "42"], d.path());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_redirects_reports() {
    let d = tmp();
    let o = hypergeo(&["eval", "arc-ratio", "x=1", "--out", "r.txt", "--format", "kv"], d.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(d.path().join("r.txt")).unwrap();
    assert!(text.contains(&format!("value={}", std::f64::consts::E)));
}

#[test]
fn usage_errors_exit_one() {
    let d = tmp();
    assert_eq!(code(&hypergeo(&[], d.path())), 1);
    assert_eq!(code(&hypergeo(&["frobnicate"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["verify", "everything"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["eval", "arc-ratio", "x=1", "--format", "json"], d.path())), 1);
    assert_eq!(code(&hypergeo(&["--help"], d.path())), 0);
}
