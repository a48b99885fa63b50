use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use krawtchouk_cli::run;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_krawtchouk"))
}

fn exec(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
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
    child.wait_with_output().unwrap()
}

/// In-process run returning (status, stdout, stderr).
fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["krawtchouk"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("krawtchouk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn quarter_n4_matrix_csv() {
    let out = exec(
        &[
            "matrix",
            "--N",
            "4",
            "--p",
            "1/4",
            "--lambda",
            "2",
            "--backend",
            "exact",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1,1,1,1,1\n6,4,2,0,-2\n27/2,9/2,-1/2,-3/2,3/2\n27/2,0,-3/2,1,-1/2\n81/16,-27/16,9/16,-3/16,1/16\n"
    );
}

#[test]
fn matrix_json_exact_and_float() {
    let (code, out, _) = run_str(
        &["matrix", "--N", "2", "--p", "0.25", "--format", "json"],
        "",
    );
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"[["1","1","1"],["3","1","-1"],["9/4","-3/4","1/4"]]"#
    );
    let (code, out, _) = run_str(
        &[
            "matrix",
            "--N",
            "2",
            "--p",
            "1/4",
            "--format",
            "json",
            "--backend",
            "float",
        ],
        "",
    );
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        "[[1.0,1.0,1.0],[3.0,1.0,-1.0],[2.25,-0.75,0.25]]"
    );
}

#[test]
fn other_matrices() {
    let tn = run_str(&["matrix", "--N", "4", "--p", "1/4", "--which", "tn"], "").1;
    assert_eq!(tn.lines().next().unwrap(), "1,6,27/2,27/2,81/16");
    let u = run_str(&["matrix", "--N", "4", "--p", "1/4", "--which", "u"], "").1;
    assert_eq!(u.lines().next().unwrap(), "1,-2,3,-9/2,27/4");
    let jd = run_str(&["matrix", "--N", "2", "--which", "jd"], "").1;
    assert_eq!(jd, "0,0,4\n0,2,0\n1,0,0\n");
    let gamma = run_str(
        &["matrix", "--N", "2", "--p", "1/4", "--which", "gamma"],
        "",
    )
    .1;
    assert_eq!(gamma, "1,0,0\n0,3/2,0\n0,0,9/16\n");
    let inv = run_str(&["matrix", "--N", "2", "--which", "phi-inv"], "").1;
    assert_eq!(inv, "1/4,1/4,1/4\n1/2,0,-1/2\n1/4,-1/4,1/4\n");
    for which in ["b", "p", "pprime"] {
        assert_eq!(run_str(&["matrix", "--N", "3", "--which", which], "").0, 0);
    }
}

#[test]
fn transform_top_row() {
    let out = exec(
        &["transform", "--N", "2", "--p", "1/4", "--lambda", "2"],
        "1\n0\n0\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1\n1\n1\n");
}

#[test]
fn transform_then_inverse() {
    let (code, big_f, _) = run_str(
        &["transform", "--N", "3", "--p", "2/3", "--lambda", "3"],
        "1/2\n-4\n0.75\n7\n",
    );
    assert_eq!(code, 0);
    let (code, back, _) = run_str(
        &["inverse", "--N", "3", "--p", "2/3", "--lambda", "3"],
        &big_f,
    );
    assert_eq!(code, 0);
    assert_eq!(back, "1/2\n-4\n3/4\n7\n");
}

#[test]
fn json_vector_input_and_output() {
    let (code, out, _) = run_str(
        &["transform", "--N", "2", "--p", "1/4", "--format", "json"],
        r#"["0", "1", "0"]"#,
    );
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"["3","1","-1"]"#);
}

#[test]
fn shift_and_direct_routes_are_byte_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, p, lambda) in [
        (2, "1/4", "2"),
        (4, "1/3", "1"),
        (5, "2/3", "3"),
        (6, "1/2", "2"),
    ] {
        let vector = |rng: &mut ChaCha8Rng| {
            (0..=n)
                .map(|_| format!("{}/{}", rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                .collect::<Vec<_>>()
                .join("\n")
        };
        let f = scratch(&format!("f{n}.csv"), &vector(&mut rng));
        let g = scratch(&format!("g{n}.csv"), &vector(&mut rng));
        let outputs: Vec<Vec<u8>> = ["direct", "shift", "inversion"]
            .iter()
            .map(|route| {
                let n = n.to_string();
                let args = [
                    "convolve",
                    "--N",
                    &n,
                    "--p",
                    p,
                    "--lambda",
                    lambda,
                    "--route",
                    route,
                    "--f",
                    f.to_str().unwrap(),
                    "--g",
                    g.to_str().unwrap(),
                ];
                let out = exec(&args, "");
                assert_eq!(out.status.code(), Some(0));
                out.stdout
            })
            .collect();
        assert_eq!(outputs[0], outputs[1]);
        assert_eq!(outputs[0], outputs[2]);
    }
}

#[test]
fn convolve_fixture_from_stdin() {
    // e_1 * e_1 at N=2, p=1/4, lambda=2: column f(1)g(1) of the stacked rows
    let g = scratch("unit1.csv", "0\n1\n0\n");
    let (code, out, _) = run_str(
        &[
            "convolve",
            "--N",
            "2",
            "--p",
            "1/4",
            "--f",
            "-",
            "--g",
            g.to_str().unwrap(),
        ],
        "0\n1\n0\n",
    );
    assert_eq!(code, 0);
    assert_eq!(out, "3/2\n1\n2\n");
}

#[test]
fn basis_images() {
    let (code, out, _) = run_str(&["basis", "--N", "4", "--index", "1"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "1\n3\n3\n1\n0\n");
    let (code, out, _) = run_str(
        &[
            "basis", "--N", "3", "--p", "1/3", "--lambda", "3", "--kind", "row",
        ],
        "",
    );
    assert_eq!(code, 0);
    assert_eq!(out, "1,1,1,1\n3,2,1,0\n3,1,0,0\n1,0,0,0\n");
    assert_eq!(run_str(&["basis", "--N", "3", "--index", "4"], "").0, 2);
}

#[test]
fn verify_symmetric_four_passes() {
    let (code, out, _) = run_str(&["verify", "--N", "4"], "");
    assert_eq!(code, 0);
    assert!(out.lines().count() > 20);
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
    let (code, out, _) = run_str(
        &["verify", "--N", "3", "--p", "1/4", "--format", "json"],
        "",
    );
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
}

#[test]
fn verify_failure_exits_one() {
    // the float backend loses the round trip at this size and tolerance
    let (code, out, err) = run_str(
        &[
            "verify", "--N", "40", "--p", "1/3", "--lambda", "1", "--tol", "1e-12",
        ],
        "",
    );
    assert_eq!(code, 1);
    assert!(out.lines().any(|l| l.starts_with("FAIL ")));
    assert!(err.contains("failed"));
}

#[test]
fn default_backend_switches_above_sixteen() {
    let exact = run_str(&["matrix", "--N", "16", "--p", "1/3", "--lambda", "1"], "").1;
    assert!(exact.contains('/'));
    let float = run_str(&["matrix", "--N", "17", "--p", "1/3", "--lambda", "1"], "").1;
    assert!(!float.contains('/'));
    assert!(float.contains('.'));
    let forced = run_str(
        &[
            "matrix",
            "--N",
            "17",
            "--p",
            "1/3",
            "--lambda",
            "1",
            "--backend",
            "exact",
        ],
        "",
    )
    .1;
    assert!(forced.contains('/'));
}

#[test]
fn output_to_file() {
    let path = scratch("out.csv", "");
    let (code, out, _) = run_str(
        &["transform", "--N", "1", "-o", path.to_str().unwrap()],
        "1\n1\n",
    );
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "2\n0\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run_str(&["matrix"], "").0, 2);
    assert_eq!(run_str(&["matrix", "--N", "2", "--which", "nope"], "").0, 2);
    assert_eq!(run_str(&["matrix", "--N", "2", "--p", "one half"], "").0, 2);
    assert_eq!(
        run_str(&["convolve", "--N", "2", "--f", "-", "--g", "-"], "").0,
        2
    );
    assert_eq!(run_str(&["transform", "--N", "2"], "1\n2\n").0, 3);
    let short = scratch("short.csv", "1\n");
    assert_eq!(
        run_str(
            &[
                "convolve",
                "--N",
                "1",
                "--f",
                "-",
                "--g",
                short.to_str().unwrap()
            ],
            "1\n2\n"
        )
        .0,
        3
    );
    assert_eq!(run_str(&["matrix", "--N", "2", "--p", "0"], "").0, 4);
    assert_eq!(run_str(&["matrix", "--N", "2", "--p", "1"], "").0, 4);
    assert_eq!(run_str(&["matrix", "--N", "2", "--p", "-1/2"], "").0, 4);
    assert_eq!(run_str(&["matrix", "--N", "2", "--lambda", "0"], "").0, 4);
    assert_eq!(
        run_str(&["matrix", "--N", "2", "--p", "1/3", "--which", "jd"], "").0,
        4
    );
    assert_eq!(
        run_str(&["transform", "--N", "1", "-i", "/nonexistent/x.csv"], "").0,
        5
    );
    assert_eq!(run_str(&["transform", "--N", "1"], "1\nabc\n").0, 5);
    assert_eq!(run_str(&["--help"], "").0, 0);
}

#[test]
fn exact_output_is_deterministic() {
    let args = [
        "matrix", "--N", "9", "--p", "3/7", "--lambda", "5/2", "--which", "phi-inv",
    ];
    let first = exec(&args, "").stdout;
    assert_eq!(exec(&args, "").stdout, first);
    assert!(!first.is_empty());
}
