//! Characters into the two-element chain, contraction and extension of ideals
//! along them, and the embedding of a quantale into its ideal quantale.

use std::sync::Arc;

use quantale_ideals::generators::bundled;
use quantale_ideals::{contraction, extension, ideal_quantale, QuantaleHom};

fn main() {
    let q = Arc::new(bundled::q4());
    for h in QuantaleHom::to_two_chain(q.clone()) {
        let t = h.target();
        println!("{}: preserves bottom {}", h.name(), h.preserves_bottom());
        for i in q.enumerate_ideals().unwrap() {
            let e = extension(&h, &i).unwrap();
            let ec = contraction(&h, &e).unwrap();
            println!("  {} ↦ {} ↦ {}", q.ideal_name(&i), t.ideal_name(&e), q.ideal_name(&ec));
        }
    }
    let down = ideal_quantale(&q).unwrap().principal_embedding().unwrap();
    println!("{}: {} -> {} is an isomorphism: {}", down.name(), q.name(), down.target().name(), down.is_isomorphism());
}
