//! Distributivity of the ideal lattice, and where irreducible and strongly
//! irreducible ideals part ways.

use quantale_ideals::generators::bundled;

fn main() {
    for q in [bundled::q4(), bundled::m3()] {
        let r = q.arithmetic_equivalence_check().unwrap();
        let names = |v: &[quantale_ideals::Ideal]| v.iter().map(|i| q.ideal_name(i)).collect::<Vec<_>>().join(" ");
        println!("{}: arithmetic {}", q.name(), r.arithmetic);
        if let Some([i, j, k]) = &r.distributivity_witness {
            println!("  I ∧ (J ∨ K) ≠ (I ∧ J) ∨ (I ∧ K) at {} {} {}", q.ideal_name(i), q.ideal_name(j), q.ideal_name(k));
        }
        println!("  irreducible          {}", names(&r.irreducible));
        println!("  strongly irreducible {}", names(&r.strongly_irreducible));
    }
}
