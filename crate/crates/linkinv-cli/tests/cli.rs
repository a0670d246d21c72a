use linkinv_cli::*;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("linkinv").chain(args.iter().copied());
    let code = main_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn trefoil_jones() {
    let (code, out, _) = call(&["--braid", "1 1 1", "--strands", "2", "--invariant", "jones"]);
    assert_eq!(code, 0);
    assert_eq!(out, "-q^3 + q^-1 + q^-3 + q^-5\n");
    let file = format!("{}/trefoil.slice", DATA);
    for engine in ["skein", "rt", "schur", "all"] {
        let (code, out2, _) = call(&["--file", &file, "--invariant", "jones", "--engine", engine]);
        assert_eq!((code, out2.as_str()), (0, out.as_str()), "{}", engine);
    }
}

#[test]
fn empty_braid_unknot() {
    let (code, out, _) = call(&["--braid", "", "--strands", "1", "--invariant", "sln", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "q^4 + q^2 + 1 + q^-2 + q^-4\n");
}

#[test]
fn hopf_all_engines() {
    let file = format!("{}/hopf.tangle", DATA);
    let (code, out, _) = call(&["--file", &file, "--invariant", "sln", "2", "--engine", "all"]);
    assert_eq!(code, 0);
    assert_eq!(out, "q^2 + 1 + q^-2 + q^-4\n");
    for e in ["skein", "rt", "schur"] {
        assert_eq!(call(&["--file", &file, "--invariant", "sln", "2", "--engine", e]).1, out);
    }
}

#[test]
fn flags() {
    let b = ["--braid", "1 1 1", "--strands", "2"];
    let with = |extra: &[&str]| call(&[&b[..], extra].concat());
    assert_eq!(with(&["--invariant", "glmn", "3", "1", "--normalized"]).1, "-q^9 + q^5 + q^3 + q\n");
    assert_eq!(with(&["--invariant", "alexander", "--engine", "all"]).1, "q^2 - 1 + q^-2\n");
    let (code, red, _) = with(&["--invariant", "sln", "3", "--reduced", "--engine", "all"]);
    assert_eq!(code, 0);
    let full = with(&["--invariant", "sln", "3"]).1;
    let r: linkinv::ring::RationalQ = red.trim().parse().unwrap();
    let f: linkinv::ring::RationalQ = full.trim().parse().unwrap();
    assert_eq!(&r * &linkinv::ring::RationalQ::from_laurent(linkinv::ring::qint(3)), f);
    let (code, homfly, _) = with(&["--invariant", "homfly", "--normalized"]);
    assert_eq!(code, 0);
    assert!(homfly.contains('u'));
    let braid_line = format!("{}/trefoil.braid", std::env::temp_dir().display());
    std::fs::write(&braid_line, "braid 2: 1 1 1\n").unwrap();
    assert_eq!(call(&["--file", &braid_line, "--invariant", "jones"]).1, "-q^3 + q^-1 + q^-3 + q^-5\n");
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["--bogus"]).0, 1);
    assert_eq!(call(&["--braid", "1"]).0, 1);
    assert_eq!(call(&["--braid", "3", "--strands", "2"]).0, 1);
    assert_eq!(call(&["--braid", "1", "--strands", "2", "--invariant", "sln", "0"]).0, 1);
    assert_eq!(call(&["--braid", "1", "--strands", "2", "--invariant", "alexander", "--engine", "schur"]).0, 1);
    assert_eq!(call(&["--braid", "1", "--strands", "2", "--invariant", "homfly", "--engine", "rt"]).0, 1);
    assert_eq!(call(&["--file", "/nonexistent/x.slice"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
    let empty = format!("{}/empty.slice", std::env::temp_dir().display());
    std::fs::write(&empty, "source: -\ntarget: -\n").unwrap();
    let (code, _, err) = call(&["--file", &empty, "--invariant", "jones", "--reduced"]);
    assert_eq!(code, 2, "{}", err);
}

#[test]
fn mismatch_is_reported() {
    let e = CliError::Mismatch("x".into());
    assert_eq!(e.exit_code(), 3);
}

#[test]
fn deterministic_output() {
    let args = ["--braid", "1 -2 1 -2 2", "--strands", "3", "--invariant", "homfly"];
    let a = call(&args).1;
    for _ in 0..3 {
        assert_eq!(call(&args).1, a);
    }
    let d = linkinv::diagram::braid_closure(&linkinv::diagram::parse_braid("1 -2 1 -2 2", 3).unwrap());
    let seq = linkinv::skein::SkeinEngine::new(linkinv::skein::EvalOptions { memo: true, parallel: false });
    let par = linkinv::skein::SkeinEngine::new(linkinv::skein::EvalOptions { memo: true, parallel: true });
    assert_eq!(seq.eval_closed(&d).unwrap(), par.eval_closed(&d).unwrap());
    assert_eq!(format!("{}\n", seq.eval_closed(&d).unwrap()), a);
}
