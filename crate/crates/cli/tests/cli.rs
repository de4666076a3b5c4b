use std::path::PathBuf;
use std::process::{Command, Output};

use explicit_zeta_cli::{cmd_expsum_check, cmd_regions, LogGrid, RunConfig};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_explicit-zeta"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("explicit-zeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn expsum_json_is_byte_identical_across_runs() {
    let args = ["expsum-check", "--samples", "25", "--seed", "7", "--json", "-"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "expsum-check");
    assert_eq!(v["config"]["seed"], 7);
    let first = &v["items"][0];
    for key in ["name", "paper_target", "computed_lo", "computed_hi", "verdict"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn different_seeds_draw_different_samples() {
    let cfg = RunConfig::default();
    let a = cmd_expsum_check(&RunConfig { seed: 1, ..cfg.clone() }, 10);
    let b = cmd_expsum_check(&RunConfig { seed: 2, ..cfg }, 10);
    assert_ne!(a.items[0].name, b.items[0].name);
}

#[test]
fn zero_samples_pass_vacuously() {
    let o = run(&["expsum-check", "--samples", "0", "--json", "-"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v["items"].as_array().unwrap().iter().map(|i| i["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["violations"]);
}

#[test]
fn constants_report_lists_the_published_values() {
    let o = run(&["constants", "--precision", "128", "--confirm-precision", "192"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("PASS  A_10(4.7399, 3)  <= 2.744"), "{text}");
    assert!(text.contains("PASS  theta  = 1.132693699..."), "{text}");
    assert!(text.contains("FAIL  G'(0)"), "{text}");
    // The G'(0) item fails, so the suite does too.
    assert_eq!(code(&o), 1);
}

#[test]
fn zfr_branches_list_their_constants() {
    let o = run(&["zfr", "--branch", "small-t", "--precision", "128", "--confirm-precision", "128"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("PASS  B3(t0)  <= 0.09245"), "{text}");
    assert!(text.contains("PASS  small-t ratio  >= 0.0475"), "{text}");
    let o = run(&["zfr", "--branch", "large-t", "--precision", "128", "--confirm-precision", "128"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("PASS  C5  <= 3.59415"), "{text}");
    assert!(text.contains("PASS  large-t ratio  >= 0.04709785"), "{text}");
    assert!(text.contains("audit of published steps:"), "{text}");
    assert_eq!(code(&o), 0);
}

#[test]
fn custom_table_rows_are_certified() {
    let path = scratch("rows.txt", "# k, eta3, h0, h1, h2, h3, gamma\n6, 1.79198, 0.40548, 1.08095, 25.8377, 1.19628, 1.122\n");
    let o = run(&["table2", "--table", path.to_str().unwrap(), "--json", "-"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let items = v["items"].as_array().unwrap();
    let row6 = items
        .iter()
        .find(|i| i["name"].as_str().unwrap().starts_with("k=6: alpha_k + beta_k"))
        .unwrap();
    assert_eq!(row6["verdict"], "PASS");
    assert!(items.iter().all(|i| !i["name"].as_str().unwrap().starts_with("k=4")));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&run(&["no-such-command"])), 2);
    assert_eq!(code(&run(&["constants", "--precision", "512", "--confirm-precision", "256"])), 2);
    assert_eq!(code(&run(&["expsum-check", "--csv", "x.csv"])), 2);
    assert_eq!(code(&run(&["regions", "--log-t", "5:1:3"])), 2);
    assert_eq!(code(&run(&["table2", "--table", "/nonexistent/rows.txt"])), 2);

    let cfg = scratch("bad.cfg", "precision = 256\nseed: 4\n");
    let o = run(&["constants", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let rows = scratch("bad_rows.txt", "6, 1.79198, 0.40548\n");
    let o = run(&["table2", "--table", rows.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn catalog_parse_errors_carry_line_numbers() {
    let path = scratch("catalog.txt", "classical, classical, 5.558691, 2\n# ok\nford, ford-type, 1, 2, 3\n");
    let o = run(&["regions", "--catalog", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn config_file_feeds_the_report() {
    let cfg = scratch("run.cfg", "# small run\nseed = 11\nprecision = 128\nconfirm_precision = 128\n");
    let o = run(&["expsum-check", "--samples", "3", "--config", cfg.to_str().unwrap(), "--json", "-"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 11);
    assert_eq!(v["config"]["precision_bits"], 128);
    // Command-line flags win over the file.
    let o = run(&["expsum-check", "--samples", "0", "--config", cfg.to_str().unwrap(), "--seed", "12", "--json", "-"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 12);
}

#[test]
fn region_csv_columns_and_rows() {
    let csv_path = scratch("regions.csv", "");
    let o = run(&["regions", "--log-t", "100:1000:5", "--csv", csv_path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let mut r = csv::Reader::from_path(&csv_path).unwrap();
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    for col in ["log_t", "width_classical", "width_ford", "width_vk", "width_new", "best"] {
        assert!(header.iter().any(|h| h == col), "missing {col}");
    }
    assert!(header.iter().any(|h| h == "width_new_lo") && header.iter().any(|h| h == "width_new_hi"));
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 5);
    let col = |n: &str| header.iter().position(|h| h == n).unwrap();
    assert_eq!(&rows[0][col("log_t")], "100");
    assert_eq!(&rows[0][col("best")], "ford");
    assert_eq!(&rows[4][col("best")], "new");
    for row in &rows {
        let mid: f64 = row[col("width_new")].parse().unwrap();
        let lo: f64 = row[col("width_new_lo")].parse().unwrap();
        let hi: f64 = row[col("width_new_hi")].parse().unwrap();
        assert!(lo <= mid && mid <= hi);
    }
}

#[test]
fn region_report_checks_known_crossings() {
    let cfg = RunConfig {
        confirm_bits: 256,
        ..RunConfig::default()
    };
    let (report, table) = cmd_regions(&cfg, &LogGrid::default()).unwrap();
    assert!(report.passed(), "{}", report.render());
    assert_eq!(report.item("crossover ford/new").unwrap().paper_target, "in [169.8, 170.8]");
    assert_eq!(report.item("crossover vk/new").unwrap().paper_target, "in [530141, 534141]");
    assert_eq!(table.rows.len(), 121);
}
