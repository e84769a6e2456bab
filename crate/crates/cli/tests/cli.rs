use std::fs;
use std::path::PathBuf;

use ccpba_cli::run;
use ccpba_core::algebra::io::parse_algebra;
use ccpba_core::frames::io::parse_frame;

fn fixture(rel: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", rel].iter().collect();
    p.to_str().unwrap().to_string()
}

fn ccpba(args: &[&str]) -> (i32, String) {
    run(std::iter::once("ccpba").chain(args.iter().copied()))
}

fn lines(text: &str) -> Vec<&str> {
    text.lines().collect()
}

#[test]
fn a_prime_refutes_excluded_middle() {
    let (code, text) = ccpba(&["valid", &fixture("algebras/a_prime.alg"), "p | ~p"]);
    assert_eq!(code, 1, "{text}");
    assert!(lines(&text).contains(&"witness p=a"), "{text}");

    let (code, text) = ccpba(&["--porcelain", "valid", &fixture("algebras/a_prime.alg"), "p | ~p"]);
    assert_eq!(code, 1);
    assert_eq!(text, "valid=false\nwitness.p=a\n");
}

#[test]
fn three_element_ccpbas() {
    let (code, text) = ccpba(&["enumerate", "--class", "ccpba", "--size", "3"]);
    assert_eq!(code, 0);
    assert!(lines(&text).contains(&"count=2"), "{text}");
}

#[test]
fn translation_matches_the_fixture() {
    let (code, text) = ccpba(&["translate", &fixture("frames/three_world.frm")]);
    assert_eq!(code, 0);
    assert_eq!(text, fs::read_to_string(fixture("frames/three_world_nhat.frm")).unwrap());

    let (code, back) = ccpba(&["translate", &fixture("frames/three_world_nhat.frm")]);
    assert_eq!(code, 0);
    let original = parse_frame(&fs::read_to_string(fixture("frames/three_world.frm")).unwrap()).unwrap();
    assert_eq!(parse_frame(&back).unwrap().frame, original.frame);
}

#[test]
fn porcelain_output_is_deterministic() {
    let runs: [&[&str]; 6] = [
        &["--porcelain", "enumerate", "--class", "kim", "--size", "5"],
        &["--porcelain", "classify", &fixture("algebras/h5.alg")],
        &["--porcelain", "countermodel", "--system", "ILM", "--max-size", "4", "p | ~p"],
        &["--porcelain", "canonical", &fixture("algebras/h6_x.alg")],
        &["--porcelain", "duality", &fixture("frames/three_world.frm")],
        &["--porcelain", "valid", &fixture("frames/three_world.frm"), "p | ~p"],
    ];
    for args in runs {
        let first = ccpba(args);
        for _ in 0..3 {
            assert_eq!(ccpba(args), first, "{args:?}");
        }
        assert!(first.1.lines().all(|l| l.contains('=')), "{args:?}: {}", first.1);
    }
}

#[test]
fn emitted_files_reparse() {
    let dir = tempfile::tempdir().unwrap();
    let out = |name: &str| dir.path().join(name).to_str().unwrap().to_string();

    let (code, _) = ccpba(&["complex", &fixture("frames/three_world.frm"), "--out", &out("cx.alg")]);
    assert_eq!(code, 0);
    let cx = parse_algebra(&fs::read_to_string(out("cx.alg")).unwrap()).unwrap();
    assert_eq!(cx.ccpba().unwrap().size(), 5);

    let (code, _) = ccpba(&["canonical", &fixture("algebras/h6_x.alg"), "--out", &out("canon.frm")]);
    assert_eq!(code, 0);
    let canon = parse_frame(&fs::read_to_string(out("canon.frm")).unwrap()).unwrap();
    assert_eq!(canon.name, "h6_x_canonical");

    let (code, _) = ccpba(&["build-au", &fixture("algebras/h5.alg"), "--u", "a,1", "--out", &out("au.alg")]);
    assert_eq!(code, 0);
    assert!(parse_algebra(&fs::read_to_string(out("au.alg")).unwrap()).unwrap().ccpba().is_ok());

    let (code, _) = ccpba(&["translate", &fixture("frames/three_world.frm"), "--out", &out("t.frm")]);
    assert_eq!(code, 0);
    let (code, text) = ccpba(&["valid", &out("t.frm"), "p | ~p"]);
    assert_eq!(code, 1, "{text}");

    let (_, text) = ccpba(&["enumerate", "--class", "cvcpba", "--size", "4"]);
    let bodies: Vec<&str> = text.split("\n\n").skip(1).collect();
    assert_eq!(bodies.len(), 4);
    for body in bodies {
        assert!(parse_algebra(body).unwrap().ccpba().unwrap().is_cvcpba());
    }
}

#[test]
fn guards_exit_three() {
    let (code, _) = ccpba(&["enumerate", "--class", "ccpba", "--size", "9"]);
    assert_eq!(code, 3);
    let (code, _) = ccpba(&["countermodel", "--system", "ILM", "--max-size", "9", "p"]);
    assert_eq!(code, 3);
    let (code, _) = ccpba(&["valid", &fixture("algebras/a_prime.alg"), "p | q | r | s"]);
    assert_eq!(code, 3);
    let (code, _) = ccpba(&["--force", "valid", &fixture("algebras/a_prime.alg"), "p | q | r | s"]);
    assert_eq!(code, 1);
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.alg");
    fs::write(&junk, "algebra x\nelements 0 1\nleq 1 9\nend\n").unwrap();
    let cases: [&[&str]; 7] = [
        &["parse", "p &"],
        &["check-algebra", junk.to_str().unwrap()],
        &["valid", "/nonexistent.alg", "p"],
        &["enumerate", "--class", "boolean", "--size", "3"],
        &["check-algebra", &fixture("frames/bad_d.frm")],
        &["translate", &fixture("frames/two_world_compat.frm")],
        &["no-such-command"],
    ];
    for args in cases {
        assert_eq!(ccpba(args).0, 2, "{args:?}");
    }
}

#[test]
fn exit_codes_for_verdicts() {
    let expect: [(&[&str], i32); 9] = [
        (&["valid", &fixture("algebras/a_prime.alg"), "p -> p"], 0),
        (&["valid", &fixture("frames/three_world.frm"), "~~~top -> ~top"], 0),
        (&["countermodel", "--system", "ILM", "--max-size", "4", "p -> p"], 0),
        (&["countermodel", "--system", "Kim", "--max-size", "3", "--sequent", "~~p |- p"], 1),
        (&["check-proof", &fixture("proofs/top.prf")], 0),
        (&["check-proof", &fixture("proofs/bad_instance.prf")], 1),
        (&["check-algebra", &fixture("algebras/m3.alg")], 1),
        (&["eval", &fixture("algebras/a_prime.alg"), "~p", "--assign", "p=a"], 0),
        (&["--help"], 0),
    ];
    for (args, code) in expect {
        assert_eq!(ccpba(args).0, code, "{args:?}");
    }
}

#[test]
fn countermodel_fixtures_at_size_three() {
    let (code, text) =
        ccpba(&["--porcelain", "countermodel", "--system", "ILM", "--min-size", "3", "--max-size", "3", "p | ~p"]);
    assert_eq!(code, 1);
    assert!(text.contains("witness.p=a\n"), "{text}");
    assert!(text.contains("model.tilde_one=0\n"), "{text}");

    let (code, text) = ccpba(&[
        "--porcelain",
        "countermodel",
        "--system",
        "ILM",
        "--min-size",
        "3",
        "--max-size",
        "3",
        "bot <-> ~top",
    ]);
    assert_eq!(code, 1);
    assert!(text.contains("model.tilde_one=1\n"), "{text}");
}

#[test]
fn proof_rejections_name_the_class() {
    let (code, text) = ccpba(&["--porcelain", "check-proof", &fixture("proofs/premise_mismatch.prf")]);
    assert_eq!(code, 1);
    assert!(text.contains("message=premise-mismatch"), "{text}");
}

#[test]
fn binary_reports_exit_codes() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_ccpba");
    let out = Command::new(bin).args(["valid", &fixture("algebras/a_prime.alg"), "p | ~p"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("witness p=a"));
    let out = Command::new(bin).args(["parse", "p &"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error=malformed"));
}

#[test]
fn assignments_accept_bracketed_names() {
    let dir = tempfile::tempdir().unwrap();
    let au = dir.path().join("au.alg");
    let (code, _) =
        ccpba(&["build-au", &fixture("algebras/h6.alg"), "--u", "z,w", "--out", au.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, text) = ccpba(&["--porcelain", "eval", au.to_str().unwrap(), "~p | q", "--assign", "p=(0,0),q=(z,w)"]);
    assert_eq!(code, 0, "{text}");
    assert_eq!(text, "value=(z,w)\n");
}
