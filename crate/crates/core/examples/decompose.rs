//! Primary and irreducible decompositions on the lower sets of a poset, with
//! associated, isolated and embedded primes.
//!
//! The poset is `1 < 3, 2 < 3`.

use quantale_ideals::generators::{FinitePoset, Generator};
use quantale_ideals::{DecompositionKind, Error};

fn main() {
    let poset = FinitePoset::new(vec!["1".into(), "2".into(), "3".into()], &[(0, 2), (1, 2)]).unwrap();
    let q = Generator::LowerSets(poset).generate().unwrap();
    for i in q.proper_ideals().unwrap() {
        let names = |v: &[quantale_ideals::Ideal]| v.iter().map(|c| q.ideal_name(c)).collect::<Vec<_>>().join(" ∧ ");
        match q.primary_decomposition(&i) {
            Ok(d) => {
                let u = q.uniqueness_report(&i).unwrap();
                println!(
                    "{} = {}   associated {}   embedded {}",
                    q.ideal_name(&i),
                    names(&d.components),
                    names(&u.associated_primes),
                    if u.embedded.is_empty() { "none".into() } else { names(&u.embedded) }
                );
            }
            Err(Error::NotDecomposable { gap }) => println!("{}: no decomposition, gap {}", q.ideal_name(&i), q.ideal_name(&gap)),
            Err(e) => println!("{}: {e}", q.ideal_name(&i)),
        }
        let irr = q.irreducible_decomposition(&i).unwrap();
        assert_eq!(irr.kind, DecompositionKind::Irreducible);
        println!("    irreducible: {}", names(&irr.components));
    }
}
