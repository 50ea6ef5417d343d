#![allow(dead_code)]

use std::collections::HashSet;
use std::path::Path;

use quantale_ideals::generators::{all_posets, all_topologies, bundled, Generator};
use quantale_ideals::{ideal_quantale, FiniteQuantale};

/// Every bundled generator instance: power sets of up to 4 points, lower sets
/// of every poset on up to 4 points, opens of every topology on up to 3
/// points and Łukasiewicz chains of up to 8 elements.
pub fn generator_corpus() -> Vec<FiniteQuantale> {
    let mut out = Vec::new();
    for k in 0..=4 {
        out.push(Generator::PowerSet(k).generate().unwrap());
    }
    for k in 0..=4 {
        for p in all_posets(k) {
            out.push(Generator::LowerSets(p).generate().unwrap());
        }
    }
    for k in 0..=3 {
        for t in all_topologies(k) {
            out.push(Generator::Opens(t).generate().unwrap());
        }
    }
    for n in 1..=8 {
        out.push(Generator::Lukasiewicz(n).generate().unwrap());
    }
    out
}

/// The generator corpus, the ideal quantale of each member, and the named
/// small instances, without repeats.
pub fn full_corpus() -> Vec<FiniteQuantale> {
    let base = generator_corpus();
    let mut all: Vec<FiniteQuantale> = base.iter().map(|q| ideal_quantale(q).unwrap().into_quantale()).collect();
    all.extend(base);
    all.extend([bundled::q4(), bundled::l3(), bundled::c2(), bundled::m3(), bundled::trivial()]);
    all.extend((1..=6).map(|n| Generator::Chain(n).generate().unwrap()));
    let mut seen = HashSet::new();
    all.retain(|q| seen.insert((q.fingerprint(), q.labels().to_vec())));
    all
}

/// `(golden name, arguments)`; `@name` stands for a file under `data/`.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("q4_check", &["check", "@q4.quant"]),
    ("q4_ideals", &["ideals", "@q4.quant"]),
    ("q4_ideals_table", &["ideals", "@q4.quant", "--format", "table"]),
    ("q4_classify_a", &["classify", "@q4.quant", "--below", "a"]),
    ("q4_classify_list", &["classify", "@q4.quant", "--ideal", "bot,b"]),
    ("q4_spectrum", &["spectrum", "@q4.quant"]),
    ("q4_radical", &["radical", "@q4.quant", "--below", "bot"]),
    ("q4_decompose", &["decompose", "@q4.quant", "--below", "bot"]),
    ("q4_decompose_irreducible", &["decompose", "@q4.quant", "--below", "bot", "--kind", "irreducible"]),
    ("q4_verify", &["verify", "@q4.quant", "--suite", "all"]),
    ("q4_verify_cep", &["verify", "@q4.quant", "--suite", "cep", "--hom", "@q4_to_c2.hom"]),
    ("q4_gen", &["gen", "q4"]),
    ("q4_hom_check", &["hom", "check", "@q4_to_c2.hom"]),
    ("l3_check", &["check", "@l3.quant"]),
    ("l3_ideals", &["ideals", "@l3.quant"]),
    ("l3_classify_0", &["classify", "@l3.quant", "--below", "0"]),
    ("l3_spectrum", &["spectrum", "@l3.quant"]),
    ("l3_radical", &["radical", "@l3.quant", "--below", "0"]),
    ("l3_radical_primes", &["radical", "@l3.quant", "--below", "0", "--algorithm", "primes"]),
    ("l3_decompose", &["decompose", "@l3.quant", "--below", "0"]),
    ("l3_decompose_irreducible", &["decompose", "@l3.quant", "--below", "0", "--kind", "irreducible"]),
    ("l3_verify", &["verify", "@l3.quant"]),
    ("l3_gen", &["gen", "l3"]),
    ("l3_hom_check", &["hom", "check", "@l3_to_c2.hom"]),
];

pub fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(format!("{name}.out"))
}

pub fn expand(args: &[&str]) -> Vec<String> {
    args.iter()
        .map(|a| a.strip_prefix('@').map_or_else(|| a.to_string(), data))
        .collect()
}

/// Runs `qk` in process: `(exit code, stdout, stderr)`.
pub fn qk<S: AsRef<str>>(args: &[S]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qk").chain(args.iter().map(|s| s.as_ref()));
    let code = quantale_ideals::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
