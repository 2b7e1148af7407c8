use std::process::{Command, Output};

fn mbrauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mbrauer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = mbrauer(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn worked_multiply() {
    let v = json(&[
        "multiply",
        "--r",
        "7",
        "--x",
        "1-3* 4-6 5-7* 2-8* 9-10* 11-12* 13-14",
        "--y",
        "1-2 4-7* 5-6 3-12 8-11 9-10* 13-14",
    ]);
    assert_eq!(v["coeff"], "x");
    let product = v["product"].as_str().unwrap();
    let expected = marked_brauer::diagram::MarkedDiagram::parse(
        "1-3* 4-6 5-7* 2-12 8-11 9-10* 13-14",
        7,
    )
    .unwrap();
    assert_eq!(
        marked_brauer::diagram::MarkedDiagram::parse(product, 7).unwrap(),
        expected
    );
}

#[test]
fn vanishing_product_prints_zero() {
    let o = mbrauer(&[
        "multiply",
        "--r",
        "6",
        "--x",
        "1-2 3-4 5-6 7-8* 9-10* 11-12",
        "--y",
        "1-6* 2-3 4-5 7-8 9-10 11-12",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "coeff: 0\nproduct: 0\n");
}

#[test]
fn relations_at_r4() {
    let v = json(&["relations", "--r", "4"]);
    let rels = v["relations"].as_array().unwrap();
    assert_eq!(rels.len(), 14);
    assert!(rels.iter().all(|r| r["holds"] == true));
}

#[test]
fn kernel_below_frontier() {
    let v = json(&["kernel", "--n", "1", "--r", "2"]);
    assert!(v["kernel_dim"].as_u64().unwrap() > 0);
    assert_eq!(v["z_check"]["rho_is_zero"], true);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(mbrauer(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        mbrauer(&["multiply", "--r", "2", "--x", "1-1 2-2", "--y", "1-2 3-4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        mbrauer(&["multiply", "--r", "2", "--x", "1-2 3-9", "--y", "1-2 3-4"]).status.code(),
        Some(2)
    );
    // (2n)^r = 4096 is over the default side bound
    assert_eq!(mbrauer(&["kernel", "--n", "4", "--r", "4"]).status.code(), Some(2));
    assert_eq!(mbrauer(&["enumerate", "--r", "6"]).status.code(), Some(2));
    assert_eq!(mbrauer(&["relations", "--r", "1"]).status.code(), Some(2));
}

#[test]
fn remaining_subcommands_succeed() {
    let cases: &[&[&str]] = &[
        &["span", "--r", "3"],
        &["rho-verify", "--n", "1", "--r", "2", "--samples", "200"],
        &["commutant", "--n", "2", "--r", "2"],
        &["commutant", "--n", "1", "--r", "2", "--mod-p"],
        &["invariants", "--n", "2", "--r", "2"],
        &["idempotents", "--n", "2", "--r", "2"],
        &["decompose", "--n", "2", "--r", "2"],
        &["example-gray-hervella"],
        &["example-abbena-garbiero", "--n", "3"],
        &["enumerate", "--r", "1"],
    ];
    for args in cases {
        let o = mbrauer(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn json_shapes() {
    let v = json(&["decompose", "--n", "2", "--r", "2"]);
    assert_eq!(v["totalRealDim"], 16);
    let first = &v["summands"][0];
    for key in ["q", "L", "tauPlusRows", "tauMinusRows", "lambda", "dimC", "reality", "dimR", "multiplicity"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    let v = json(&["enumerate", "--r", "1"]);
    assert_eq!(v, serde_json::json!(["1-2", "1-2*"]));
    let v = json(&["example-gray-hervella"]);
    assert_eq!(v["ambient"]["dim"], 36);
}

#[test]
fn fixed_seed_is_reproducible() {
    let args = ["rho-verify", "--n", "1", "--r", "3", "--samples", "50", "--seed", "7", "--json"];
    assert_eq!(mbrauer(&args).stdout, mbrauer(&args).stdout);
    let args = ["commutant", "--n", "1", "--r", "2", "--seed", "3", "--json"];
    assert_eq!(mbrauer(&args).stdout, mbrauer(&args).stdout);
}
