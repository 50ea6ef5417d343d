//! Every classification flag for every ideal of a Łukasiewicz chain.
//!
//! `cargo run --example classify_ideals -- 5`

use quantale_ideals::generators::Generator;

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let q = Generator::Lukasiewicz(n).generate().unwrap();
    let yn = |b: bool| if b { "y" } else { "." };
    println!("ideal  prime semiprime primary maximal irreducible strong  radical");
    for i in q.enumerate_ideals().unwrap() {
        let c = q.classify(&i).unwrap();
        println!(
            "{:<6} {:<5} {:<9} {:<7} {:<7} {:<11} {:<7} {}",
            q.ideal_name(&i),
            yn(c.prime.holds),
            yn(c.semiprime.holds),
            yn(c.primary.holds),
            yn(c.maximal),
            yn(c.irreducible.holds),
            yn(c.strongly_irreducible.holds),
            q.ideal_name(&c.radical)
        );
    }
}
