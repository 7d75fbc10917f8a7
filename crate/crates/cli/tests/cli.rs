use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn k3lat(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_k3lat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(args: &[&str], stdin: &str) -> String {
    let r = k3lat(args, stdin);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

fn ok_json(args: &[&str], stdin: &str) -> Value {
    serde_json::from_str(&ok(args, stdin)).unwrap()
}

fn build(args: &[&str]) -> String {
    let mut full = vec!["lattice", "build"];
    full.extend_from_slice(args);
    ok(&full, "")
}

#[test]
fn l_d_info_pipeline() {
    let l5 = build(&["l_d", "--d", "5"]);
    assert_eq!(
        ok(&["lattice", "info"], &l5),
        "{\"rank\":21,\"signature\":[19,2,0],\"disc\":10,\"disc_group\":[10]}\n"
    );
}

#[test]
fn four_squares_example() {
    assert_eq!(
        ok_json(&["embed", "four-squares", "--m", "7"], ""),
        json!({"m": 7, "parts": [2, 1, 1, 1]})
    );
}

#[test]
fn mindeg_on_u_with_defaults() {
    let v = ok_json(&["mindeg"], &build(&["u"]));
    assert_eq!(v["upper_bound"], json!(4));
    assert_eq!(v["certificate"], json!([1, 2]));
    assert_eq!(v["exhaustive"], json!(false));
    assert_eq!(v["searched_norm_limit"], json!(20));
    assert_eq!(v["searched_box"], json!(10));
}

#[test]
fn exit_codes() {
    assert_eq!(k3lat(&["frobnicate"], "").code, 2);
    assert_eq!(k3lat(&["lattice", "build", "l_d"], "").code, 2);
    assert_eq!(k3lat(&["lattice", "info"], "not json").code, 2);
    assert_eq!(k3lat(&["lattice", "build", "no-such-lattice"], "").code, 2);
    // non-positive-definite input to roots is a domain error
    let r = k3lat(&["roots", "--norm", "2"], &build(&["u"]));
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("not positive definite"), "{}", r.stderr);
    assert_eq!(k3lat(&["embed", "ld-in-l", "--d", "0"], "").code, 1);
    assert_eq!(k3lat(&["--help"], "").code, 0);
}

#[test]
fn build_output_is_accepted_everywhere() {
    let built = [
        build(&["k3"]),
        build(&["l_d", "--d", "2"]),
        build(&["big-l"]),
        build(&["e8"]),
        build(&["u"]),
        build(&["rank-one", "--n", "-2"]),
    ];
    let consumers: [&[&str]; 7] = [
        &["lattice", "info"],
        &["roots", "--norm", "2"],
        &["walls", "--v", "1"],
        &["mindeg", "--norm-limit", "4", "--box", "2"],
        &["verify-cert", "--v", "1", "--degree", "2"],
        &["clifford", "find-a"],
        &["lattice", "build", "-"],
    ];
    for l in &built {
        for args in consumers {
            let r = k3lat(args, l);
            assert_ne!(r.code, 2, "{args:?} rejected input: {}", r.stderr);
        }
    }
    // a file path is also accepted by `lattice build`
    let dir = std::env::temp_dir().join(format!("k3lat-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e8.json");
    std::fs::write(&path, &built[3]).unwrap();
    let again = ok(&["lattice", "build", path.to_str().unwrap()], "");
    assert_eq!(again, built[3]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let a = ok(&["embed", "vd", "--d", "3"], "");
    let b = ok(&["embed", "vd", "--d", "3"], "");
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["norm"], json!(-6));
    assert_eq!(v["complement"]["source"]["rank"], json!(21));
}

#[test]
fn e8_roots() {
    let v = ok_json(&["roots", "--norm", "2"], &build(&["e8"]));
    assert_eq!(v["count"], json!(240));
    assert_eq!(v["complete"], json!(true));
}

#[test]
fn walls_and_certificates() {
    let u = build(&["u"]);
    let v = ok_json(&["walls", "--v", "1,2"], &u);
    assert_eq!(v["walls"], json!([]));
    assert_eq!(v["in_cn"], json!(true));
    let v = ok_json(&["verify-cert", "--v", "1,1", "--degree", "2"], &u);
    assert_eq!(v["valid"], json!(false));
    let v = ok_json(&["verify-cert", "--v", "1,2", "--degree", "4"], &u);
    assert_eq!(v["valid"], json!(true));
}

#[test]
fn embed_complement_info_chain() {
    let emb = ok(&["embed", "ld-in-l", "--d", "3"], "");
    let comp = ok(&["complement"], &emb);
    let c: Value = serde_json::from_str(&comp).unwrap();
    let info = ok_json(&["lattice", "info"], &c["source"].to_string());
    assert_eq!(info["rank"], json!(4));
    assert_eq!(info["signature"], json!([4, 0, 0]));
    assert_eq!(info["disc"], json!(6));
    let sat = ok_json(&["saturate"], &comp);
    assert_eq!(sat["matrix"], c["matrix"]);
}

#[test]
fn disc_complement_report() {
    let dir = std::env::temp_dir().join(format!("k3lat-dc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let emb = ok(&["embed", "ld-in-l", "--d", "2"], "");
    let comp = ok(&["complement"], &emb);
    let (p, q) = (dir.join("n.json"), dir.join("np.json"));
    std::fs::write(&p, &emb).unwrap();
    std::fs::write(&q, &comp).unwrap();
    let v = ok_json(
        &[
            "check-disc-complement",
            "--n",
            p.to_str().unwrap(),
            "--nprime",
            q.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(
        v,
        json!({"disc_n": 4, "disc_nprime": 4, "index": 4, "equal": true})
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn disc_kernel_with_lattice_from_stdin() {
    let minus = json!({"matrix": [[-1, 0], [0, -1]]}).to_string();
    let v = ok_json(&["disc-kernel", "--isometry-file", &minus], &build(&["u"]));
    assert_eq!(v["in_kernel"], json!(true));
    // −1 on ⟨6⟩ moves the class 1/6 to 5/6
    let minus1 = json!({"matrix": [[-1]]}).to_string();
    let v = ok_json(
        &["disc-kernel", "--isometry-file", &minus1],
        &build(&["rank-one", "--n", "6"]),
    );
    assert_eq!(v["in_kernel"], json!(false));
}

#[test]
fn clifford_commands() {
    let host = json!({"rank": 2, "gram": [[1, 0], [0, 1]]}).to_string();
    let e1 = json!({"rank": 2, "terms": [{"mask": 1, "coeff": "1"}]}).to_string();
    let e2 = json!({"rank": 2, "terms": [{"mask": 2, "coeff": "1"}]}).to_string();
    let prod = ok_json(&["clifford", "mul", "--x", &e1, "--y", &e2], &host);
    assert_eq!(
        prod,
        json!({"rank": 2, "terms": [{"mask": 3, "coeff": "1"}]})
    );
    let rev = ok_json(&["clifford", "reversal", "--x", &prod.to_string()], &host);
    assert_eq!(
        rev,
        json!({"rank": 2, "terms": [{"mask": 3, "coeff": "-1"}]})
    );

    let a = ok(&["clifford", "find-a"], &host);
    let one = json!({"rank": 2, "terms": [{"mask": 0, "coeff": "1"}]}).to_string();
    let v = ok_json(
        &[
            "clifford",
            "phi-a",
            "--x",
            &one,
            "--y",
            &one,
            "--a",
            a.trim(),
        ],
        &host,
    );
    assert_eq!(v["value"], json!(0));

    let g = ok_json(&["clifford", "gspin", "--v", "1,0", "--w", "0,1"], &host);
    assert_eq!(g["preserves_lattice"], json!(true));
    assert_eq!(g["g_inv_denominator"], json!(1));

    let v = ok_json(&["clifford", "project", "--x", &e1], &host);
    assert_eq!(v["vector"], json!([1, 0]));
    let id = json!({"rank": 2, "matrix": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}).to_string();
    let v = ok_json(&["clifford", "project", "--endo-file", &id], &host);
    assert_eq!(v["vector"], json!([0, 0]));

    let wide = build(&["k3"]);
    assert_eq!(k3lat(&["clifford", "find-a"], &wide).code, 1);
}

#[test]
fn enumerate_outputs() {
    assert_eq!(
        ok(
            &["enumerate", "--rank", "2", "--max-disc", "4", "--csv"],
            ""
        ),
        "disc,count\n1,1\n2,1\n3,2\n4,2\n"
    );
    let v = ok_json(&["enumerate", "--rank", "3", "--max-disc", "2"], "");
    assert_eq!(v["count"], json!(2));
    let par = ok_json(
        &["--jobs", "2", "enumerate", "--rank", "3", "--max-disc", "2"],
        "",
    );
    assert_eq!(v, par);
    let even = ok_json(
        &["enumerate", "--rank", "2", "--max-disc", "4", "--even"],
        "",
    );
    assert_eq!(even["even_only"], json!(true));
    assert_eq!(
        k3lat(&["enumerate", "--rank", "5", "--max-disc", "2"], "").code,
        1
    );
}

#[test]
fn large_integers_are_strings_unless_raw() {
    let big = "12345678901234567890";
    let l = build(&["rank-one", "--n", big]);
    assert!(l.contains(&format!("\"{big}\"")), "{l}");
    let raw = ok(
        &["--raw-ints", "lattice", "build", "rank-one", "--n", big],
        "",
    );
    assert!(raw.contains(&format!("[[{big}]]")), "{raw}");
    let info = ok_json(&["lattice", "info"], &raw);
    assert_eq!(info["disc"], json!(big));
}

#[test]
fn table_output() {
    let t = ok(&["--table", "lattice", "info"], &build(&["u"]));
    assert!(t.starts_with("rank"), "{t}");
    assert!(t.contains("signature   1 1 0"), "{t}");
}
