//! Run every verification suite on a bundled instance and print the laws.
//!
//! `cargo run --example verify_suites -- m3`

use quantale_ideals::generators::{bundled, Generator};
use quantale_ideals::verify::{run_suite, Suite, VerifyOptions};

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "q4".into());
    let q = match which.as_str() {
        "l3" => bundled::l3(),
        "m3" => bundled::m3(),
        "pow3" => Generator::PowerSet(3).generate().unwrap(),
        "luk9" => Generator::Lukasiewicz(9).generate().unwrap(),
        _ => bundled::q4(),
    };
    let report = run_suite(&q, Suite::All, None, &VerifyOptions::from_env()).unwrap();
    for law in &report.laws {
        let sampled = if law.sampled { " (sampled)" } else { "" };
        println!("{:<16} {:<28} {:<7} {:>7}{sampled}", law.suite.tag(), law.law, law.status.tag(), law.checked);
        if let Some(w) = &law.witness {
            println!("    witness: {w}");
        }
    }
    for note in &report.notes {
        println!("note: {note}");
    }
}
