use std::process::{Command, Output};

use serde_json::Value;

fn wigner_ent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wigner-ent"))
        .args(args)
        .env_remove("WIGNER_ENT_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| {
            let mut it = l.split_whitespace();
            (it.next() == Some(key)).then(|| it.next().unwrap().parse().unwrap())
        })
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
}

#[test]
fn point_eta_rest_is_maximal() {
    let o = wigner_ent(&["point", "--scenario", "eta", "--param", "0", "--phi", "0"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "c_spin_boosted"), 1.0);
}

#[test]
fn point_xi_quarter_pi_over_eight() {
    let o = wigner_ent(&["point", "--param", "0.25", "--phi", "22.5", "--deg"]);
    assert!(o.status.success());
    let c = field(&stdout(&o), "c_spin_boosted");
    assert!((c - 0.612372).abs() < 1e-6);
}

#[test]
fn point_xi_half_all_ones() {
    let o = wigner_ent(&["point", "--param", "0.5", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    for k in [
        "c_spin_rest",
        "c_spin_boosted",
        "c_mom_rest",
        "c_mom_boosted",
    ] {
        assert!((v[k].as_f64().unwrap() - 1.0).abs() < 1e-12, "{k}");
    }
}

#[test]
fn invalid_parameter_exits_with_two() {
    let o = wigner_ent(&["point", "--scenario", "xi", "--param", "1.0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("xi"));
    let o = wigner_ent(&["point", "--scenario", "nope", "--param", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wigner_ent(&["figure", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wigner_ent(&["wigner", "--beta", "1.0", "--speed", "0.3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_eta_three_steps() {
    let o = wigner_ent(&[
        "sweep",
        "--scenario",
        "eta",
        "--phi",
        "0.39269908169872414",
        "--steps",
        "3",
        "--outputs",
        "c_spin_boosted",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "eta,c_spin_boosted");
    assert_eq!(lines[1], "0,0.707106781187");
    assert_eq!(lines[2], "0.5,0");
    assert_eq!(lines[3], "1,0.707106781187");
    assert!(!text.contains('\r'));
}

#[test]
fn sweep_phi_momentum_column_is_abs_cos() {
    let o = wigner_ent(&["sweep", "--sweep", "phi", "--param", "0.5", "--steps", "11"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(
        header,
        [
            "phi",
            "c_spin_rest",
            "c_spin_boosted",
            "c_mom_rest",
            "c_mom_boosted",
            "delta_spin",
            "delta_mom"
        ]
    );
    let mut n = 0;
    for line in lines {
        let row: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert!((row[4] - (2.0 * row[0]).cos().abs()).abs() < 1e-11);
        n += 1;
    }
    assert_eq!(n, 11);
}

#[test]
fn sweep_two_steps_gives_endpoints() {
    let o = wigner_ent(&[
        "sweep", "--from", "0.2", "--to", "0.8", "--steps", "2", "--format", "json",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][0], 0.2);
    assert_eq!(rows[1][0], 0.8);
    let o = wigner_ent(&["sweep", "--steps", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_is_deterministic() {
    let args = [
        "sweep",
        "--scenario",
        "appendix-d",
        "--sign",
        "minus",
        "--phi",
        "0.3",
    ];
    assert_eq!(wigner_ent(&args).stdout, wigner_ent(&args).stdout);
}

#[test]
fn precision_env_var() {
    let o = Command::new(env!("CARGO_BIN_EXE_wigner-ent"))
        .args([
            "sweep",
            "--scenario",
            "eta",
            "--phi",
            "0.39269908169872414",
            "--steps",
            "2",
        ])
        .env("WIGNER_ENT_PRECISION", "4")
        .output()
        .unwrap();
    assert!(stdout(&o)
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("0,1,0.7071,"));
    let o = Command::new(env!("CARGO_BIN_EXE_wigner-ent"))
        .args(["selftest"])
        .env("WIGNER_ENT_PRECISION", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

fn matrix(v: &Value) -> Vec<Vec<(f64, f64)>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|z| (z[0].as_f64().unwrap(), z[1].as_f64().unwrap()))
                .collect()
        })
        .collect()
}

#[test]
#[allow(clippy::needless_range_loop)]
fn state_dump_schema() {
    let o = wigner_ent(&[
        "state",
        "--scenario",
        "appendix-d",
        "--param",
        "0.5",
        "--phi",
        "0.39269908169872414",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["basis_order"],
        serde_json::json!(["momA", "momB", "spinA", "spinB"])
    );
    assert_eq!(v["rest_state"].as_array().unwrap().len(), 16);
    for key in [
        "rest_spin",
        "rest_momentum",
        "boosted_spin",
        "boosted_momentum",
    ] {
        let m = matrix(&v[key]);
        let trace: f64 = (0..4).map(|i| m[i][i].0).sum();
        assert!((trace - 1.0).abs() < 1e-11, "{key}");
        for i in 0..4 {
            for j in 0..4 {
                assert!((m[i][j].0 - m[j][i].0).abs() < 1e-11);
                assert!((m[i][j].1 + m[j][i].1).abs() < 1e-11);
            }
        }
    }
    let mom = matrix(&v["boosted_momentum"]);
    assert!((mom[1][2].0 + 0.5 * std::f64::consts::FRAC_PI_4.cos()).abs() < 1e-11);
}

#[test]
fn state_eta_zero_rest_amplitudes() {
    // (1/√2)|10⟩|φ+⟩ − (1/√2)|01⟩|φ+⟩, canonical phase
    let o = wigner_ent(&["state", "--scenario", "eta", "--param", "0"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let amps: Vec<f64> = v["rest_state"]
        .as_array()
        .unwrap()
        .iter()
        .map(|z| z[0].as_f64().unwrap())
        .collect();
    let mut expected = [0.0; 16];
    expected[5] = 0.5; // |01⟩|↑↓⟩
    expected[6] = 0.5;
    expected[9] = -0.5; // |10⟩|↑↓⟩
    expected[10] = -0.5;
    for (a, e) in amps.iter().zip(expected) {
        assert!((a - e).abs() < 1e-11);
    }
}

#[test]
fn wigner_subcommand() {
    let o = wigner_ent(&["wigner", "--beta", "0.6", "--speed", "0.8"]);
    assert!((field(&stdout(&o), "phi_rad") - 0.330297).abs() < 1e-6);
    let o = wigner_ent(&["wigner", "--beta", "0", "--speed", "0.8"]);
    assert_eq!(field(&stdout(&o), "phi_rad"), 0.0);
    let o = wigner_ent(&[
        "wigner", "--beta", "0.6", "--m-e", "1", "--m-mu", "206.768", "--v", "0.5",
    ]);
    let text = stdout(&o);
    assert!((field(&text, "a") - 0.004836).abs() < 1e-6);
    assert!((field(&text, "v_electron") - 0.5).abs() < 1e-12);
    assert_eq!(field(&text, "phi_electron"), field(&text, "phi_muon"));
}

#[test]
fn figure_writes_named_files() {
    let dir = std::env::temp_dir().join(format!("wigner-ent-cli-{}", std::process::id()));
    let o = wigner_ent(&["figure", "1", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    for name in ["fig1_phi0.csv", "fig1_phi_pi10.csv", "fig1_phi_pi8.csv"] {
        let text = std::fs::read_to_string(dir.join(name)).unwrap();
        assert_eq!(text.lines().count(), 102);
        assert!(text.starts_with("eta,c_spin_boosted,c_mom_boosted\n"));
    }
    let o = wigner_ent(&["figure", "4", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.join("fig4_phi0.csv")).unwrap();
    assert!(text.lines().skip(1).all(|l| l.ends_with(",1")));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn selftest_passes() {
    let o = wigner_ent(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("failures=0"));
}
