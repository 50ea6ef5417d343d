//! Generation, meet, join, product, residual and annihilator of ideals in the
//! power set of a three-point set.

use quantale_ideals::generators::Generator;

fn main() {
    let q = Generator::PowerSet(3).generate().unwrap();
    let el = |l: &str| q.index_of(l).unwrap();
    let i = q.generated(&q.set_of([el("1"), el("2")])).unwrap();
    let j = q.principal(el("23"));
    println!("I = <1, 2> = {} = {}", q.ideal_name(&i), q.subset_labels(i.members()));
    println!("J = {}", q.ideal_name(&j));
    println!("I ∧ J  = {}", q.ideal_name(&q.meet_ideals(&i, &j).unwrap()));
    println!("I ∨ J  = {}", q.ideal_name(&q.join_ideals(&i, &j).unwrap()));
    println!("I & J  = {}", q.ideal_name(&q.product_ideals(&i, &j).unwrap()));
    println!("(I:J)  = {}", q.ideal_name(&q.residual(&i, &j).unwrap()));
    println!("ann(J) = {}", q.ideal_name(&q.annihilator(j.members()).unwrap()));
    println!("J²     = {}", q.ideal_name(&q.ideal_power(&j, 2).unwrap()));
}
