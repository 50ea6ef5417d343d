//! Golden reports for every subcommand on the bundled data files.
//!
//! Regenerate with `QK_UPDATE_GOLDEN=1 cargo test --test cli_golden`.

mod common;

use common::{data, expand, golden_path, qk, GOLDEN_CASES};
use quantale_ideals::io::{parse_quant, write_quant};

#[test]
fn golden_reports() {
    let update = std::env::var_os("QK_UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for (name, args) in GOLDEN_CASES {
        let argv = expand(args);
        let (code, out, err) = qk(&argv);
        assert_eq!(code, 0, "{name}: {err}");
        assert!(err.is_empty(), "{name}: unexpected diagnostics {err}");
        let path = golden_path(name);
        if update {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &out).unwrap();
        } else {
            let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            if want != out {
                mismatched.push(format!("{name}\n--- want\n{want}--- got\n{out}"));
            }
        }
        // Identical invocations produce identical bytes.
        assert_eq!(qk(&argv).1, out, "{name} is not reproducible");
    }
    assert!(mismatched.is_empty(), "{}", mismatched.join("\n"));
}

#[test]
fn spectrum_names_both_primes() {
    let (_, out, _) = qk(&["spectrum", &data("q4.quant")]);
    assert_eq!(out, "prime\t↓a\nprime\t↓b\n");
}

#[test]
fn radical_below_zero_in_l3() {
    let (code, out, _) = qk(&["radical", &data("l3.quant"), "--below", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("radical below\t1\n"));
    assert!(out.contains("agreement\tall three algorithms agree\n"));
}

#[test]
fn data_files_are_canonical_and_round_trip() {
    for name in ["q4.quant", "l3.quant", "c2.quant", "m3.quant"] {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let q = parse_quant(&text).unwrap();
        let once = write_quant(&q);
        assert_eq!(once, text, "{name} is not in canonical form");
        assert_eq!(write_quant(&parse_quant(&once).unwrap()), once);
    }
}

#[test]
fn gen_output_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    for kind in ["powerset:3", "lukasiewicz:5", "lowersets:chain:3", "opens:3:1,12", "m3"] {
        let path = dir.path().join("g.quant");
        let (code, _, err) = qk(&["gen", kind, "-o", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{kind}: {err}");
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(write_quant(&parse_quant(&text).unwrap()), text, "{kind}");
        let (code, out, _) = qk(&["check", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.ends_with("quantale\tyes\n"));
    }
    let (code, out, _) = qk(&["gen", &format!("ideals:{}", data("l3.quant"))]);
    assert_eq!(code, 0);
    assert!(out.starts_with("quantale ideals(l3)\nelements: ↓0 ↓1 ↓2\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let q4 = data("q4.quant");

    // Usage and parse errors.
    assert_eq!(qk::<&str>(&[]).0, 2);
    assert_eq!(qk(&["frobnicate"]).0, 2);
    assert_eq!(qk(&["classify", &q4]).0, 2, "needs --below or --ideal");
    assert_eq!(qk(&["classify", &q4, "--below", "a", "--ideal", "a"]).0, 2);
    assert_eq!(qk(&["radical", &q4, "--below", "nope"]).0, 2);
    assert_eq!(qk(&["radical", &q4, "--below", "a", "--algorithm", "guess"]).0, 2);
    assert_eq!(qk(&["verify", &q4, "--suite", "nope"]).0, 2);
    assert_eq!(qk(&["gen", "powerset:x"]).0, 2);
    assert_eq!(qk(&["check", "/no/such/file.quant"]).0, 2);
    let undeclared = write("u.quant", "quantale u\nelements: x0\norder:\n  x1 <= x9\nmul:\n  x0: x0\nend\n");
    let (code, _, err) = qk(&["check", &undeclared]);
    assert_eq!(code, 2);
    assert!(err.contains("u.quant:4:3: label `x1` is not declared"), "{err}");
    let short = write("s.quant", "quantale s\nelements: x y\norder:\n  x <= y\nmul:\n  x: x x\nend\n");
    let (code, _, err) = qk(&["check", &short]);
    assert_eq!(code, 2);
    assert!(err.contains("expected 2 mul rows, found 1"), "{err}");

    // Domain errors.
    assert_eq!(qk(&["classify", &q4, "--ideal", "a"]).0, 1, "{{a}} is not down-closed");
    assert_eq!(qk(&["decompose", &q4, "--below", "top"]).0, 1, "whole carrier is not proper");
    let broken = write("b.quant", "quantale b\nelements: x y\norder:\n  x <= y\nmul:\n  x: x x\n  y: x x\nend\n");
    let (code, out, _) = qk(&["check", &broken]);
    assert_eq!(code, 1);
    assert!(out.contains("identity\tfail"));
    assert_eq!(qk(&["verify", &broken]).0, 1);
    let bad_hom = write(
        "h.hom",
        &format!("hom h : {} -> {}\nmap:\n  bot -> bot\n  a -> bot\n  b -> bot\n  top -> top\n", q4, data("c2.quant")),
    );
    let (code, _, err) = qk(&["hom", "check", &bad_hom]);
    assert_eq!(code, 1);
    assert!(err.contains("not a homomorphism"), "{err}");

    // Help is not an error.
    assert_eq!(qk(&["--help"]).0, 0);
}

#[test]
fn timing_is_opt_in() {
    let (_, plain, _) = qk(&["ideals", &data("q4.quant")]);
    assert!(!plain.contains("elapsed"));
    let (_, timed, _) = qk(&["ideals", &data("q4.quant"), "--timing"]);
    assert!(timed.contains("elapsed_ms\t"));
}
