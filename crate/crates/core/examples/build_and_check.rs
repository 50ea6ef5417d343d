//! Build a quantale from labels and tables, then check the axioms.
//!
//! The second instance overwrites one product, and the report names the
//! triple where an axiom fails.

use quantale_ideals::FiniteQuantale;

fn main() {
    let diamond = FiniteQuantale::from_labels(
        "diamond",
        &["0", "x", "y", "1"],
        &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
        &[
            &["0", "0", "0", "0"],
            &["0", "x", "0", "x"],
            &["0", "0", "y", "y"],
            &["0", "x", "y", "1"],
        ],
    )
    .expect("a lattice");
    show(&diamond);

    let x = diamond.index_of("x").unwrap();
    let broken = diamond.with_product(x, x, 0).renamed("diamond-broken");
    show(&broken);
}

fn show(q: &FiniteQuantale) {
    let r = q.check_axioms();
    println!("{} ({} elements): quantale = {}", q.name(), q.size(), r.all_ok());
    for w in &r.counterexamples {
        let labels: Vec<&str> = w.elems.iter().map(|&e| q.label(e)).collect();
        println!("  {} fails at ({})", w.axiom.tag(), labels.join(", "));
    }
}
