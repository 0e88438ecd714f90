use std::process::{Command, Output};

use serde_json::Value;

fn fractal_ac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fractal-ac")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    assert_eq!(code(out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn complex(v: &Value) -> (f64, f64) {
    (v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap())
}

fn csv_rows(text: &[u8]) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(text);
    r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect()
}

const LADDER: [&str; 8] = ["--circuit", "fsl", "--omega", "1", "--l", "2", "--c", "1"];

fn with<'a>(head: &[&'a str], tail: &[&'a str]) -> Vec<&'a str> {
    head.iter().chain(tail).copied().collect()
}

#[test]
fn impedance_of_the_ladder() {
    let v = json(&fractal_ac(&with(&["impedance"], &LADDER)));
    let (re, im) = complex(&v["Z"]);
    assert!((re - 191f64.sqrt() / 10.0).abs() < 1e-12);
    assert!((im - 1.3).abs() < 1e-12);
    assert_eq!(v["regime"], "Filter");
}

#[test]
fn impedance_errors_exit_2() {
    let out = fractal_ac(&["impedance", "--circuit", "hanoi1", "--r", "1", "--omega", "1", "--l", "1", "--c", "1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no solution"));
    let out = fractal_ac(&["impedance", "--circuit", "fsl", "--omega", "0", "--l", "2", "--c", "1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("omega"));
    assert_eq!(code(&fractal_ac(&["impedance", "--circuit", "hanoi1", "--omega", "1", "--l", "1", "--c", "1"])), 2);
    assert_eq!(code(&fractal_ac(&["impedance", "--circuit", "fsl", "--omega", "x"])), 2);
    assert_eq!(code(&fractal_ac(&["impedance", "--circuit", "bogus"])), 2);
    assert_eq!(code(&fractal_ac(&[])), 2);
}

#[test]
fn impedance_lists_every_hanoi_root() {
    let v =
        json(&fractal_ac(&["impedance", "--circuit", "hanoi2", "--r", "0.3", "--omega", "1", "--l", "2", "--c", "1"]));
    let roots = v["roots"].as_array().unwrap();
    assert!(!roots.is_empty());
    assert_eq!(roots[0]["is_filter_root"], true);
    for root in roots {
        assert!(root["residual"].as_f64().unwrap() < 1e-10);
    }
}

#[test]
fn sg_conductance_is_real() {
    let v = json(&fractal_ac(&["impedance", "--circuit", "sg", "--s", "0.7"]));
    assert_eq!(complex(&v["g"]).1, 0.0);
}

#[test]
fn fsl_region_matches_band() {
    let out = fractal_ac(&[
        "region",
        "--circuit",
        "fsl",
        "--omega2lc-min",
        "0.1",
        "--omega2lc-max",
        "40",
        "--omega2lc-steps",
        "400",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&out.stdout);
    assert_eq!(rows.len(), 400);
    let (lo, hi) = (9.0 * (4.0 - 15f64.sqrt()), 9.0 * (4.0 + 15f64.sqrt()));
    for row in rows {
        assert_eq!(row[0], "fsl");
        assert_eq!(row[1], "");
        let big: f64 = row[2].parse().unwrap();
        assert_eq!(row[3] == "true", lo < 2.0 * big && 2.0 * big < hi, "Ω={big}");
    }
}

#[test]
fn hanoi1_region_transitions_bracket_endpoints() {
    let out = fractal_ac(&[
        "region",
        "--circuit",
        "hanoi1",
        "--r",
        "0.4",
        "--omega2lc-min",
        "0",
        "--omega2lc-max",
        "50",
        "--omega2lc-steps",
        "1000",
    ]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&out.stdout);
    let step = 50.0 / 1000.0;
    let flips: Vec<f64> = rows
        .windows(2)
        .filter(|w| w[0][3] != w[1][3])
        .map(|w| (w[0][2].parse::<f64>().unwrap() + w[1][2].parse::<f64>().unwrap()) / 2.0)
        .collect();
    assert_eq!(flips.len(), 2, "{flips:?}");
    // the interval endpoints are stated in LCω²/2
    let s = 120f64.sqrt();
    for (flip, edge) in flips.iter().zip([11.0 - s, 11.0 + s]) {
        assert!((flip - 2.0 * edge).abs() <= step, "{flip} vs {}", 2.0 * edge);
    }
}

#[test]
fn region_rejects_bad_grids() {
    for args in [
        &["region", "--circuit", "hanoi1", "--omega2lc-steps", "1"][..],
        &["region", "--circuit", "hanoi1", "--r-steps", "0"],
        &["region", "--circuit", "hanoi2", "--r-min", "1", "--r-max", "0.5"],
        &["region", "--circuit", "sg"],
    ] {
        assert_eq!(code(&fractal_ac(args)), 2, "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let out = fractal_ac(&["region", "--circuit", "hanoi1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
}

#[test]
fn region_json_format() {
    let v = json(&fractal_ac(&[
        "region",
        "--circuit",
        "hanoi2",
        "--r-steps",
        "2",
        "--omega2lc-steps",
        "3",
        "--format",
        "json",
    ]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0]["r"].as_f64(), Some(0.25));
    assert_eq!(rows[3]["r"].as_f64(), Some(0.75));
}

#[test]
fn damped_ladder_converges() {
    let out = fractal_ac(&with(&["converge"], &with(&LADDER, &["--epsilon", "0.01", "--n", "2000"])));
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&out.stdout);
    assert_eq!(rows.len(), 2001);
    let last: f64 = rows[2000][4].parse().unwrap();
    assert!(last < 1e-10, "{last}");
}

#[test]
fn ideal_ladder_does_not_converge() {
    let out = fractal_ac(&with(&["converge"], &with(&LADDER, &["--epsilon", "0", "--n", "500"])));
    let rows = csv_rows(&out.stdout);
    let z_plus = (0.1f64 * 191.0_f64.sqrt()).hypot(1.3);
    let closest = rows[100..].iter().map(|r| r[4].parse::<f64>().unwrap()).fold(f64::INFINITY, f64::min);
    assert!(closest > 0.01 * z_plus, "{closest}");
}

#[test]
fn regularized_limits_decrease() {
    let out = fractal_ac(&with(
        &["converge"],
        &with(&LADDER, &["--epsilon", "0.01,0.001,0.0001", "--n", "10", "--format", "json"]),
    ));
    let v = json(&out);
    let d: Vec<f64> = v["regularized"].as_array().unwrap().iter().map(|x| x["distance"].as_f64().unwrap()).collect();
    assert_eq!(d.len(), 3);
    assert!(d[0] > d[1] && d[1] > d[2] && d[2] < 1e-3, "{d:?}");
    assert_eq!(v["rows"].as_array().unwrap().len(), 33);
}

#[test]
fn hanoi_runs_are_exploratory() {
    let out = fractal_ac(&[
        "converge",
        "--circuit",
        "hanoi1",
        "--r",
        "0.4",
        "--omega",
        "1",
        "--l",
        "1",
        "--c",
        "1",
        "--epsilon",
        "0.1",
        "--n",
        "20",
        "--every",
        "10",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,epsilon,z1_re,z1_im,z2_re,z2_im,distance,exploratory\n"));
    let rows = csv_rows(text.as_bytes());
    assert_eq!(rows.iter().map(|r| r[0].as_str()).collect::<Vec<_>>(), ["0", "10", "20"]);
    assert!(rows.iter().all(|r| r[7] == "true"));
}

#[test]
fn orbit_on_the_pole_exits_4() {
    // F has its pole at -(3Z_L + 9Z_C)/5 = 0.6i here
    let out = fractal_ac(&with(&["converge"], &with(&LADDER, &["--n", "3", "--z0", "0.6i"])));
    assert_eq!(code(&out), 4, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("omega=1"));
}

#[test]
fn negative_epsilon_is_a_parameter_error() {
    let out = fractal_ac(&with(&["converge"], &with(&LADDER, &["--epsilon", "-0.1", "--n", "3"])));
    assert_eq!(code(&out), 2);
}

#[test]
fn oracle_reports_pass() {
    let cases: [Vec<&str>; 2] = [
        with(&["oracle"], &LADDER),
        vec!["oracle", "--circuit", "hanoi2", "--r", "0.3", "--omega", "1", "--l", "2", "--c", "1"],
    ];
    for args in cases {
        let v = json(&fractal_ac(&args));
        assert_eq!(v["pass"], true);
        let checks = v["checks"].as_array().unwrap();
        assert!(checks.len() >= 6);
        for ch in checks {
            assert!(ch["max_deviation"].as_f64().unwrap() <= 1e-9, "{ch}");
        }
    }
}

#[test]
fn oracle_is_deterministic_and_seeded() {
    let run = |seed: &str| fractal_ac(&with(&["oracle"], &with(&LADDER, &["--level", "2", "--seed", seed]))).stdout;
    assert_eq!(run("7"), run("7"));
    assert_ne!(run("7"), run("8"));
}

#[test]
fn oracle_without_trials_is_empty() {
    let v = json(&fractal_ac(&with(&["oracle"], &with(&LADDER, &["--trials", "0"]))));
    assert_eq!(v["checks"].as_array().unwrap().len(), 0);
}

#[test]
fn oracle_guards() {
    assert_eq!(code(&fractal_ac(&with(&["oracle"], &with(&LADDER, &["--level", "4"])))), 2);
    // out of band there is no interpolation
    let out = fractal_ac(&["oracle", "--circuit", "fsl", "--omega", "1", "--l", "0.2", "--c", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn harmonic_root_and_cells() {
    let whole = json(&fractal_ac(&with(&["harmonic"], &with(&LADDER, &["--boundary", "1,0,-0.5+2i"]))));
    let vals: Vec<_> = whole["values"].as_array().unwrap().iter().map(complex).collect();
    assert_eq!(vals, [(1.0, 0.0), (0.0, 0.0), (-0.5, 2.0)]);
    let cell = json(&fractal_ac(&with(&["harmonic"], &with(&LADDER, &["--boundary", "1,1,1", "--address", "0210"]))));
    for z in cell["values"].as_array().unwrap() {
        let (re, im) = complex(z);
        assert!((re - 1.0).abs() < 1e-12 && im.abs() < 1e-12);
    }
    let hanoi = fractal_ac(&[
        "harmonic",
        "--circuit",
        "hanoi1",
        "--r",
        "0.4",
        "--omega",
        "1",
        "--l",
        "1",
        "--c",
        "1",
        "--boundary",
        "-1,0i,2",
        "--address",
        "12",
    ]);
    assert_eq!(json(&hanoi)["values"].as_array().unwrap().len(), 3);
}

#[test]
fn harmonic_rejects_bad_input() {
    for extra in [&["--boundary", "1,0"][..], &["--boundary", "1,0,zz"], &["--boundary", "1,0,0", "--address", "013"]] {
        let out = fractal_ac(&with(&["harmonic"], &with(&LADDER, extra)));
        assert_eq!(code(&out), 2, "{extra:?}");
    }
}

#[test]
fn netlist_sizes() {
    for level in 0..=3 {
        let v = json(&fractal_ac(&with(&["netlist"], &with(&LADDER, &["--level", &level.to_string()]))));
        assert_eq!(v["nodes"].as_array().unwrap().len(), 3usize.pow(level + 1));
        assert_eq!(v["terminals"], serde_json::json!([0, 1, 2]));
        let e = &v["edges"][0];
        assert!(e["a"].is_u64() && e["b"].is_u64() && e["re"].is_f64() && e["im"].is_f64());
    }
}
