use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn morikawa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morikawa"))
        .args(args)
        .env_remove("MORIKAWA_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .parse()
        .unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn mu_at_unit_radius_beats_the_symmetric_square() {
    let o = morikawa(&["mu", "--r", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(field(&text, "mu") < 0.41421357);
    let x_m = field(&text, "x_m");
    assert!(x_m > 1.0 - 0.5f64.sqrt() && x_m < 1.0);
}

#[test]
fn tolerance_comes_from_the_environment() {
    let run = |tol: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_morikawa"));
        c.args(["mu", "--r", "2"]);
        match tol {
            Some(t) => c.env("MORIKAWA_TOL", t),
            None => c.env_remove("MORIKAWA_TOL"),
        };
        c.output().unwrap()
    };
    let loose = run(Some("1e-6"));
    assert!(loose.status.success());
    assert_ne!(stdout(&loose), stdout(&run(None)));
    assert_eq!(run(Some("nope")).status.code(), Some(2));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(morikawa(&["mu", "--r", "0.5"]).status.code(), Some(2));
    assert_eq!(morikawa(&["mu"]).status.code(), Some(2));
    assert_eq!(morikawa(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(morikawa(&["classify", "--r", "4", "--theta", "2"]).status.code(), Some(2));
    let e = morikawa(&["mu", "--r", "abc"]);
    assert_eq!(e.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&e.stderr).contains("--r"));
}

#[test]
fn poly_at_unit_t_has_the_hand_derived_d() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let o = morikawa(&["poly", "--t", "1", "--out", path_str(&out)]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let mut d: Vec<(u64, String)> = v["components"]["D"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["e"][0].as_u64().unwrap(), t["n"].as_str().unwrap().to_string()))
        .collect();
    d.sort();
    let want = [(0, "-2"), (1, "15"), (2, "-15"), (3, "4")];
    assert_eq!(d, want.map(|(e, n)| (e, n.to_string())).to_vec());
    let p_terms = v["p"]["terms"].as_array().unwrap();
    assert_eq!(p_terms.iter().map(|t| t["e"][0].as_u64().unwrap()).max(), Some(10));
    assert_eq!(v["t"], "1");
}

#[test]
fn poly_accepts_fractions_and_rejects_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    assert!(morikawa(&["poly", "--t", "3/2", "--out", path_str(&out)]).status.success());
    assert_eq!(morikawa(&["poly", "--t", "1/0", "--out", path_str(&out)]).status.code(), Some(2));
}

#[test]
fn hpoly_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.json");
    assert!(morikawa(&["hpoly", "--out", path_str(&out)]).status.success());
    let text = fs::read_to_string(&out).unwrap();
    let doc = morikawa::algebra::PolyDoc::from_json(text.trim()).unwrap();
    assert_eq!(doc.vars, ["k", "x", "y"]);
    assert_eq!(doc.to_sparse::<3>().unwrap(), morikawa::algebra::build_h());
}

#[test]
fn curve_csv_schema_and_idempotence() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("curve.csv");
    let args = ["curve", "--r", "4", "--n", "50", "--out", path_str(&out)];
    assert!(morikawa(&args).status.success());
    let first = fs::read(&out).unwrap();
    let z_path = dir.path().join("curve_z.csv");
    let first_z = fs::read(&z_path).unwrap();
    assert!(morikawa(&args).status.success());
    assert_eq!(fs::read(&out).unwrap(), first);
    assert_eq!(fs::read(&z_path).unwrap(), first_z);

    let text = String::from_utf8(first).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,s"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 50);
    assert!(rows.iter().all(|r| r.len() == 2 && r[1] > 0.0));
    assert!(String::from_utf8(first_z).unwrap().starts_with("x,z\n"));
}

#[test]
fn curve_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("curve.svg");
    assert!(morikawa(&["curve", "--r", "2", "--n", "20", "--out", path_str(&out), "--format", "svg"])
        .status
        .success());
    for p in [out.clone(), dir.path().join("curve_z.svg")] {
        let s = fs::read_to_string(p).unwrap();
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
    }
}

#[test]
fn classify_reports_the_corner_corner_profile() {
    let o = morikawa(&["classify", "--r", "4", "--theta", "0.6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("c1_contact = corner vertex=A"), "{text}");
    assert!(text.contains("hint = #6"));
    let flat = stdout(&morikawa(&["classify", "--r", "4", "--theta", "0"]));
    assert!(flat.contains("line_contact = side"));
}

#[test]
fn galois_report_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let args = ["galois", "--k", "2", "--primes", "120", "--seed", "3", "--out", path_str(&out)];
    let o = morikawa(&args);
    assert!(o.status.success());
    let first = fs::read(&out).unwrap();
    assert!(morikawa(&args).status.success());
    assert_eq!(fs::read(&out).unwrap(), first);
    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["k0"], "2");
    assert_eq!(v["primes"], 120);
    let counted: u64 = v["patterns"].as_object().unwrap().values().map(|n| n.as_u64().unwrap()).sum();
    assert_eq!(counted + v["skipped"].as_u64().unwrap(), 120);
}

#[test]
fn verify_passes_for_one_and_four() {
    let o = morikawa(&["verify", "--r-list", "1,4"]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(!text.contains("FAIL"));
    assert_eq!(text.matches("PASS").count(), 14);
    assert!(text.ends_with("14 checks, 0 failed\n"));
}

#[test]
fn unwritable_output_is_an_input_error() {
    let o = morikawa(&["hpoly", "--out", "/nonexistent-dir/h.json"]);
    assert_eq!(o.status.code(), Some(2));
}
