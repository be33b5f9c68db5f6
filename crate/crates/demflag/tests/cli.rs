use std::process::Command;

use demflag::cli::{run, Invocation};
use demflag::qpoly::QPoly;
use serde_json::Value;

fn demflag(args: &str) -> Invocation {
    run(std::iter::once("demflag").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let r = demflag(&format!("{args} --format json"));
    assert_eq!(r.code, 0, "{}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

/// Drops the timing field, the only part allowed to differ between runs.
fn without_timing(mut v: Value) -> Value {
    if let Some(engine) = v.get_mut("engine").and_then(Value::as_object_mut) {
        engine.remove("elapsed_ms");
        engine.remove("memo_hits");
        engine.remove("memo_entries");
    }
    v
}

#[test]
fn documented_examples() {
    let cases = [
        ("mult --from-level 1 --weight 3 --to-level 2 --target 1", "q^8\n"),
        ("mult --from-level 2 --weight 5 --to-level 2 --target 5", "1\n"),
        ("series --from-level 1 --to-level 2 --target 0 --x-order 4 --q1", "1,1,1,1\n"),
        ("series --from-level 2 --to-level 3 --target 0 --parity 1 --x-order 6", "0,0,0,0,0,0\n"),
        ("dim --level 2 --weight 3", "12\n"),
        ("closed --which mocktheta --index 0 --q-order 9", "1 + q + q^2 + q^4 + q^5 + q^7 + q^8\n"),
    ];
    for (args, want) in cases {
        let r = demflag(args);
        assert_eq!((r.code, r.stdout.as_str()), (0, want), "{args}");
    }
    let r = demflag("char --level 2 --weight 2");
    assert_eq!(r.stdout.lines().next(), Some("(2,0,1) (1,1,1) (0,2,1)"));
}

#[test]
fn exit_codes() {
    assert_eq!(demflag("mult --from-level 3 --weight 1 --to-level 2 --target 1").code, 2);
    assert_eq!(demflag("verify --suite bogus").code, 2);
    assert_eq!(demflag("series --from-level 1 --to-level 2 --target 0 --parity 2").code, 2);
    assert_eq!(demflag("closed --which carlitz --n 3").code, 2);
    assert_eq!(demflag("verify --suite base --max 6").code, 0);
    assert_eq!(demflag("verify --suite all --max 12").code, 0);
}

#[test]
fn json_schema() {
    let v = json("mult --from-level 1 --weight 4 --to-level 3 --target 0");
    assert_eq!(v["query"]["weight"], 4);
    let display = v["result"]["display"].as_str().unwrap();
    let parsed: QPoly = display.parse().unwrap();
    let terms = v["result"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), parsed.terms().count());
    for t in terms {
        let e = t["q_exp"].as_i64().unwrap();
        assert_eq!(t["coeff"].as_str().unwrap(), parsed.coeff(e).to_string());
    }
    assert_eq!(v["engine"]["engine"], "step");

    let s = json("series --from-level 1 --to-level 3 --target 0 --x-order 5");
    assert!(s["result"]["terms"].as_array().unwrap().iter().all(|t| t["x_exp"].is_u64()));
}

#[test]
fn both_engines_report_a_match() {
    let v = json("mult --from-level 2 --weight 9 --to-level 4 --target 3 --engine both");
    assert_eq!(v["result"]["match"], true);
    assert_eq!(v["result"]["partition"], v["result"]["display"]);
}

#[test]
fn weighted_mult_reports_the_shift() {
    let v = json("mult --from-level 1 --weight 3 --to-level 2 --target 1 --weighted");
    assert_eq!(v["result"]["shift"], 8);
    assert_eq!(v["result"]["display"], "1");
}

#[test]
fn output_is_deterministic() {
    for args in [
        "table --from-level 1 --to-level 3 --s-max 6",
        "char --level 1 --weight 5",
        "closed --which carlitz --n 7 --k 1",
    ] {
        assert_eq!(without_timing(json(args)), without_timing(json(args)), "{args}");
    }
}

#[test]
fn csv_table() {
    let r = demflag("table --from-level 1 --to-level 2 --s-max 2 --format csv");
    let mut rdr = csv::Reader::from_reader(r.stdout.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["s", "n", "multiplicity"]);
    let rows: Vec<Vec<String>> = rdr.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    let want =
        [["0", "0", "1"], ["1", "0", "q"], ["1", "1", "1"], ["2", "0", "q^4"], ["2", "1", "q^3"], ["2", "2", "1"]];
    assert_eq!(rows, want.map(|r| r.map(String::from).to_vec()).to_vec());
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("demflag-cli-{}.json", std::process::id()));
    let r = demflag(&format!("dim --level 3 --weight 7 --format json --out {}", path.display()));
    assert_eq!((r.code, r.stdout.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["result"]["display"], "200");
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_demflag");
    let ok = Command::new(bin).args(["dim", "--level", "2", "--weight", "3"]).output().unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "12\n");
    let bad = Command::new(bin).args(["verify", "--suite", "bogus"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
