use super::{Ctx, Mode};
use crate::quantale::{Axiom, Elem};

pub(super) fn axioms(ctx: &mut Ctx) {
    let q = ctx.q;
    let report = q.check_axioms();
    let n = q.size() as u64;
    let laws = [
        (Axiom::Lattice, n * n),
        (Axiom::Associativity, n * n * n),
        (Axiom::Commutativity, n * n),
        (Axiom::Distributivity, n * n * n + n),
        (Axiom::Identity, n),
    ];
    for (axiom, count) in laws {
        let witness = report.witness(axiom).map(|w| labels(q, w));
        ctx.record(axiom.tag(), count, witness);
    }
}

fn labels(q: &crate::quantale::FiniteQuantale, xs: &[Elem]) -> String {
    let parts: Vec<&str> = xs.iter().map(|&x| q.label(x)).collect();
    format!("({})", parts.join(", "))
}

pub(super) fn lemma_bip(ctx: &mut Ctx) {
    let q = ctx.q;
    let pairs: Vec<(Elem, Elem)> = q.elements().flat_map(|x| q.elements().map(move |y| (x, y))).collect();
    let triples: Vec<(Elem, Elem, Elem)> = pairs
        .iter()
        .flat_map(|&(x, y)| q.elements().map(move |z| (x, y, z)))
        .collect();
    let show2 = |&(x, y): &(Elem, Elem)| labels(q, &[x, y]);
    let show3 = |&(x, y, z): &(Elem, Elem, Elem)| labels(q, &[x, y, z]);

    ctx.law(
        "bip.1",
        Mode::Exhaustive,
        pairs.clone(),
        |&(x, y)| Ok(q.leq(q.mul(x, y), q.meet(x, y))),
        show2,
    );
    ctx.law(
        "bip.2",
        Mode::Exhaustive,
        q.elements(),
        |&x| Ok(q.mul(x, q.bottom()) == q.bottom()),
        |&x| labels(q, &[x]),
    );
    ctx.law(
        "bip.3",
        Mode::Exhaustive,
        triples,
        |&(x, y, z)| Ok(!q.leq(x, y) || q.leq(q.mul(x, z), q.mul(y, z))),
        show3,
    );
    let comparable: Vec<(Elem, Elem)> = pairs.iter().copied().filter(|&(x, y)| q.leq(x, y)).collect();
    let quads: Vec<((Elem, Elem), (Elem, Elem))> = comparable
        .iter()
        .flat_map(|&a| comparable.iter().map(move |&b| (a, b)))
        .collect();
    ctx.law(
        "bip.4",
        Mode::Exhaustive,
        quads,
        |&((x, y), (u, v))| Ok(q.leq(q.mul(x, u), q.mul(y, v))),
        |&((x, y), (u, v))| labels(q, &[x, y, u, v]),
    );
    let binomial: Vec<(Elem, Elem, usize)> = pairs
        .iter()
        .flat_map(|&(x, y)| (1..=4).map(move |k| (x, y, k)))
        .collect();
    ctx.law(
        "bip.5",
        Mode::Exhaustive,
        binomial,
        |&(x, y, k)| Ok(q.power_of_join(x, y, k) == q.power(q.join(x, y), k)),
        |&(x, y, k)| format!("{} n={k}", labels(q, &[x, y])),
    );
}
