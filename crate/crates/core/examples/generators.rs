//! Sizes of the bundled families: power sets, lower sets of every small
//! poset, opens of every small topology, Łukasiewicz chains.

use quantale_ideals::generators::{all_posets, all_topologies, Generator};

fn main() {
    for k in 0..=4 {
        let posets = all_posets(k);
        let sizes: Vec<usize> = posets
            .iter()
            .map(|p| Generator::LowerSets(p.clone()).generate().unwrap().size())
            .collect();
        println!("{k} points: {} posets, lower-set lattices of {}..={} elements", posets.len(), sizes.iter().min().unwrap(), sizes.iter().max().unwrap());
    }
    for k in 0..=3 {
        println!("{k} points: {} topologies", all_topologies(k).len());
    }
    for n in [2, 5, 8] {
        let q = Generator::Lukasiewicz(n).generate().unwrap();
        let nil = q.nilradical().unwrap();
        println!("{}: nilradical {}", q.name(), q.ideal_name(&nil));
    }
}
