//! Multiplicatively closed sets, their saturations, ideals maximal among
//! those avoiding them, and prime avoidance.

use quantale_ideals::generators::Generator;

fn main() {
    let q = Generator::PowerSet(3).generate().unwrap();
    for s in q.all_mcsets().iter().filter(|s| s.len() <= 2) {
        let sat = q.saturation(s).unwrap();
        print!("S = {:<12} saturation {:<28}", q.subset_labels(s.members()), q.subset_labels(sat.members()));
        match q.maximal_avoiding(s) {
            Ok(p) => println!("avoided by {} (prime: {})", q.ideal_name(&p), q.is_prime(&p).unwrap()),
            Err(e) => println!("{e}"),
        }
    }

    let el = |l: &str| q.index_of(l).unwrap();
    let primes = q.spectrum().unwrap();
    let stable = q.principal(el("123"));
    let x = q.prime_avoidance(stable.members(), &primes).unwrap();
    let names: Vec<String> = primes.iter().map(|p| q.ideal_name(p)).collect();
    println!("{} lies outside every prime of {}", q.label(x), names.join(", "));
}
