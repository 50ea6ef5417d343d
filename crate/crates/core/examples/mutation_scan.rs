//! Overwrite one cell of a multiplication table at a time and report which
//! suites notice.
//!
//! `cargo run --release --example mutation_scan -- l3`

use quantale_ideals::generators::bundled;
use quantale_ideals::verify::{run_suite, Status, Suite, VerifyOptions};

fn main() {
    let q = match std::env::args().nth(1).as_deref() {
        Some("l3") => bundled::l3(),
        Some("m3") => bundled::m3(),
        _ => bundled::q4(),
    };
    let opts = VerifyOptions::default();
    let (mut total, mut missed) = (0, 0);
    for x in q.elements() {
        for y in q.elements() {
            for v in q.elements().filter(|&v| v != q.mul(x, y)) {
                total += 1;
                let m = q.with_product(x, y, v);
                let report = run_suite(&m, Suite::All, None, &opts).expect("suite runs");
                let mut flagged: Vec<&str> = report.failures().map(|l| l.suite.tag()).collect();
                flagged.dedup();
                let cell = format!("{} & {} := {}", q.label(x), q.label(y), q.label(v));
                if flagged.is_empty() {
                    missed += 1;
                    let axioms = if m.check_axioms().all_ok() { "a valid quantale" } else { "not a quantale" };
                    println!("{cell:<22} unflagged ({axioms}, {} laws pass)", report.count(Status::Pass));
                } else {
                    println!("{cell:<22} {}", flagged.join(" "));
                }
            }
        }
    }
    println!("{} of {total} mutants flagged", total - missed);
}
