//! Cross-check the fast ideal machinery against definitional brute force on
//! every lower-set lattice of a three-point poset.

use quantale_ideals::generators::{all_posets, Generator};
use quantale_ideals::verify::oracle::cross_oracle;

fn main() {
    for p in all_posets(3) {
        let q = Generator::LowerSets(p).generate().unwrap();
        let r = cross_oracle(&q).unwrap();
        println!("{:>2} elements, {:>2} ideals: agree {}", q.size(), r.ideal_count, r.all_agree());
    }
}
