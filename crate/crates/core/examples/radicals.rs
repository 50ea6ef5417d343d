//! The radical of each ideal by powers, by primes and by multiplicatively
//! closed sets, with the nilradical and the Jacobson radical.

use quantale_ideals::generators::Generator;
use quantale_ideals::RadicalAlgorithm;

fn main() {
    let q = Generator::Lukasiewicz(5).generate().unwrap();
    for i in q.enumerate_ideals().unwrap() {
        let by: Vec<String> = RadicalAlgorithm::ALL
            .iter()
            .map(|&a| format!("{}={}", a.tag(), q.ideal_name(&q.radical(&i, a).unwrap())))
            .collect();
        println!("R({}): {}", q.ideal_name(&i), by.join(" "));
    }
    println!("nilradical {}", q.ideal_name(&q.nilradical().unwrap()));
    println!("jacobson   {}", q.ideal_name(&q.jacobson().unwrap()));
    println!("reduced    {}", q.is_reduced().unwrap());
}
