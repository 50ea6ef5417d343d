use super::oracle::{brute_force_ideals, generated_by_definition, join_by_definition, product_by_definition};
use super::{names, Ctx, Mode};
use crate::error::Result;
use crate::hom::QuantaleHom;
use crate::ideals::{contraction, extension, ideal_quantale, Ideal};
use crate::quantale::{ElemSet, FiniteQuantale};

/// Carriers above this size skip the brute-force collapse check.
const BRUTE_FORCE_LIMIT: usize = 12;

type Pair = (Ideal, Ideal);
type Triple = (Ideal, Ideal, Ideal);

/// An ideal paired with a subfamily. Exhaustive runs take the full product;
/// sampled runs pair each sampled family with one ideal in rotation.
fn with_families(ctx: &Ctx, law: &str) -> (Vec<(Ideal, Vec<Ideal>)>, Mode) {
    let ideals = &ctx.ideals;
    let (families, mode) = ctx.families(law, ideals.len());
    let pick = |f: &Vec<usize>| f.iter().map(|&k| ideals[k].clone()).collect::<Vec<_>>();
    let cases = match mode {
        Mode::Exhaustive => ideals
            .iter()
            .flat_map(|i| families.iter().map(move |f| (i.clone(), pick(f))))
            .collect(),
        Mode::Sampled => families
            .iter()
            .enumerate()
            .map(|(t, f)| (ideals[t % ideals.len()].clone(), pick(f)))
            .collect(),
    };
    (cases, mode)
}

fn show_family(q: &FiniteQuantale, (i, f): &(Ideal, Vec<Ideal>)) -> String {
    let refs: Vec<&Ideal> = f.iter().collect();
    format!("{} {}", names(q, &[i]), names(q, &refs))
}

/// Pairs of subsets: every pair when the subsets were enumerated, otherwise
/// consecutive sampled subsets.
fn subset_pairs(ctx: &Ctx, law: &str, limit: usize) -> (Vec<(ElemSet, ElemSet)>, Mode) {
    let (subsets, mode) = ctx.subsets(law, limit);
    let pairs = match mode {
        Mode::Exhaustive => subsets
            .iter()
            .flat_map(|s| subsets.iter().map(move |t| (s.clone(), t.clone())))
            .collect(),
        Mode::Sampled => subsets.chunks_exact(2).map(|w| (w[0].clone(), w[1].clone())).collect(),
    };
    (pairs, mode)
}

pub(super) fn proposition_bpi(ctx: &mut Ctx) {
    let q = ctx.q;
    let whole = q.whole();
    let zero = q.zero_ideal();
    let ideals = ctx.ideals.clone();
    let pairs = ctx.pairs();
    let triples = ctx.triples();
    let s1 = |i: &Ideal| names(q, &[i]);
    let s2 = |(i, j): &Pair| names(q, &[i, j]);
    let s3 = |(i, j, k): &Triple| names(q, &[i, j, k]);
    let meet = |a: &Ideal, b: &Ideal| q.meet_ideals(a, b);
    let join = |a: &Ideal, b: &Ideal| q.join_ideals(a, b);
    let prod = |a: &Ideal, b: &Ideal| q.product_ideals(a, b);
    let res = |a: &Ideal, b: &Ideal| q.residual(a, b);

    ctx.law(
        "bpi.1",
        Mode::Exhaustive,
        triples.clone(),
        |(i, j, k)| Ok(prod(&prod(i, j)?, k)? == prod(i, &prod(j, k)?)?),
        s3,
    );
    ctx.law(
        "bpi.2",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(prod(i, j)? == prod(j, i)?),
        s2,
    );
    ctx.law(
        "bpi.3",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(prod(&whole, i)? == *i),
        s1,
    );
    ctx.law(
        "bpi.4",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(prod(&zero, i)? == zero),
        s1,
    );

    let (cases, mode) = with_families(ctx, "bpi.5");
    ctx.law(
        "bpi.5",
        mode,
        cases,
        |(i, f)| {
            let lhs = prod(i, &q.join_family(f)?)?;
            let parts = f.iter().map(|j| prod(i, j)).collect::<Result<Vec<_>>>()?;
            Ok(lhs == q.join_family(&parts)?)
        },
        |c| show_family(q, c),
    );

    ctx.law(
        "bpi.6",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(prod(i, j)?.is_subset(&meet(i, j)?)),
        s2,
    );
    ctx.law(
        "bpi.7",
        Mode::Exhaustive,
        triples.clone(),
        |(i, j, k)| Ok(prod(i, &meet(j, k)?)?.is_subset(&meet(&prod(i, j)?, &prod(i, k)?)?)),
        s3,
    );
    ctx.law(
        "bpi.8",
        Mode::Exhaustive,
        triples.clone(),
        |(i, j, k)| Ok(prod(&join(i, k)?, &join(j, k)?)?.is_subset(&join(&prod(i, j)?, k)?)),
        s3,
    );
    ctx.law(
        "bpi.9",
        Mode::Exhaustive,
        triples.clone(),
        |(i, j, k)| {
            let hyp = join(i, k)? == whole && join(j, k)? == whole;
            Ok(!hyp || join(&prod(i, j)?, k)? == whole)
        },
        s3,
    );
    ctx.law(
        "bpi.10",
        Mode::Exhaustive,
        triples.clone(),
        |(i, j, k)| Ok(join(i, k)? != whole || join(&meet(i, j)?, k)? == join(j, k)?),
        s3,
    );
    ctx.law(
        "bpi.11",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(prod(&res(i, j)?, j)?.is_subset(i)),
        s2,
    );
    ctx.law(
        "bpi.12",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(i.is_subset(&res(i, j)?)),
        s2,
    );
    ctx.law(
        "bpi.13",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(j.is_subset(i) == (res(i, j)? == whole)),
        s2,
    );
    ctx.law(
        "bpi.14",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(res(i, &whole)? == *i),
        s1,
    );
    ctx.law(
        "bpi.15",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(i.is_subset(&res(&prod(i, j)?, j)?)),
        s2,
    );

    let (cases, mode) = with_families(ctx, "bpi.16");
    ctx.law(
        "bpi.16",
        mode,
        cases,
        |(j, f)| {
            let parts = f.iter().map(|i| res(i, j)).collect::<Result<Vec<_>>>()?;
            Ok(res(&q.meet_family(f)?, j)? == q.meet_family(&parts)?)
        },
        |c| show_family(q, c),
    );
    let (cases, mode) = with_families(ctx, "bpi.17");
    ctx.law(
        "bpi.17",
        mode,
        cases,
        |(i, f)| {
            let parts = f.iter().map(|j| res(i, j)).collect::<Result<Vec<_>>>()?;
            Ok(q.meet_family(&parts)?.is_subset(&res(i, &q.join_family(f)?)?))
        },
        |c| show_family(q, c),
    );

    ctx.law(
        "bpi.18",
        Mode::Exhaustive,
        triples,
        |(i, j, k)| Ok(res(&res(i, j)?, k)? == res(i, &prod(j, k)?)?),
        s3,
    );
    ctx.law(
        "bpi.19",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(res(i, j)? == res(i, &join(i, j)?)?),
        s2,
    );
    ctx.law(
        "bpi.20",
        Mode::Exhaustive,
        pairs,
        |(i, j)| Ok(res(i, j)? == res(&meet(i, j)?, j)?),
        s2,
    );

    // ⟨S ∩ T⟩ ⊆ ⟨S⟩ ∧ ⟨T⟩. The reverse inclusion fails in general.
    let (cases, mode) = subset_pairs(ctx, "idss", 6);
    let cases: Vec<(ElemSet, ElemSet)> = cases
        .into_iter()
        .filter(|(s, t)| s.intersection(t).next().is_some())
        .collect();
    let mut strict = None;
    ctx.law(
        "idss",
        mode,
        cases,
        |(s, t)| {
            let lhs = q.generated(&(s & t))?;
            let rhs = meet(&q.generated(s)?, &q.generated(t)?)?;
            if strict.is_none() && lhs != rhs {
                strict = Some(format!("{} {}", q.subset_labels(s), q.subset_labels(t)));
            }
            Ok(lhs.is_subset(&rhs))
        },
        |(s, t)| format!("{} {}", q.subset_labels(s), q.subset_labels(t)),
    );
    if let Some(w) = strict {
        ctx.note(format!("idss: inclusion is strict at S, T = {w}"));
    }
}

pub(super) fn annihilator(ctx: &mut Ctx) {
    let q = ctx.q;
    let ann = |s: &ElemSet| q.annihilator(s);
    let (pairs, mode) = subset_pairs(ctx, "ann.1", 6);
    let pairs: Vec<_> = pairs.into_iter().filter(|(s, t)| s.is_subset(t)).collect();
    ctx.law(
        "ann.1",
        mode,
        pairs,
        |(s, t)| Ok(ann(t)?.is_subset(&ann(s)?)),
        |(s, t)| format!("{} {}", q.subset_labels(s), q.subset_labels(t)),
    );
    let (subsets, mode) = ctx.subsets("ann", 10);
    let show = |s: &ElemSet| q.subset_labels(s);
    ctx.law(
        "ann.2",
        mode,
        subsets.clone(),
        |s| Ok(s.is_subset(ann(ann(s)?.members())?.members())),
        show,
    );
    ctx.law(
        "ann.3",
        mode,
        subsets.clone(),
        |s| {
            let a = ann(s)?;
            Ok(a == ann(ann(a.members())?.members())?)
        },
        show,
    );
    let zero = q.zero_ideal();
    ctx.law(
        "ann.residual",
        mode,
        subsets,
        |s| Ok(ann(s)? == q.residual(&zero, &q.generated(s)?)?),
        show,
    );
}

/// The extension and contraction laws along one homomorphism out of the
/// instance. Laws are named `cep.<item> [<hom>]`.
pub(super) fn cep(ctx: &mut Ctx, h: &QuantaleHom) {
    let q = ctx.q;
    let t = h.target();
    let tag = |item: &str| format!("cep.{item} [{}]", h.name());
    let target_ideals = match t.enumerate_ideals() {
        Ok(v) => v,
        Err(e) => {
            ctx.skip(&tag("*"), &format!("target `{}`: {e}", t.name()));
            return;
        }
    };
    // Preimages are empty exactly when φ(⊥) lies outside J. The theorem
    // implicitly needs them nonempty, so such J are left out.
    let (js, dropped): (Vec<Ideal>, Vec<Ideal>) =
        target_ideals.into_iter().partition(|j| j.contains(h.apply(q.bottom())));
    if !dropped.is_empty() {
        let refs: Vec<&Ideal> = dropped.iter().collect();
        ctx.note(format!(
            "{}: φ(⊥) = {} so the preimages of {} are empty and excluded",
            h.name(),
            t.label(h.apply(q.bottom())),
            names(t, &refs)
        ));
    }
    let is = ctx.ideals.clone();
    let e = |i: &Ideal| extension(h, i);
    let c = |j: &Ideal| contraction(h, j);
    let si = |i: &Ideal| names(q, &[i]);
    let sj = |j: &Ideal| names(t, &[j]);
    let si2 = |(a, b): &Pair| names(q, &[a, b]);
    let sj2 = |(a, b): &Pair| names(t, &[a, b]);

    ctx.law(
        tag("1"),
        Mode::Exhaustive,
        js.clone(),
        |j| Ok(q.is_ideal(c(j)?.members())),
        sj,
    );
    ctx.law(
        tag("2"),
        Mode::Exhaustive,
        is.clone(),
        |i| Ok(t.is_ideal(e(i)?.members())),
        si,
    );
    ctx.law(
        tag("3a"),
        Mode::Exhaustive,
        is.clone(),
        |i| Ok(i.is_subset(&c(&e(i)?)?)),
        si,
    );
    ctx.law(
        tag("3b"),
        Mode::Exhaustive,
        js.clone(),
        |j| Ok(e(&c(j)?)?.is_subset(j)),
        sj,
    );
    ctx.law(
        tag("3c"),
        Mode::Exhaustive,
        js.clone(),
        |j| Ok(c(j)? == c(&e(&c(j)?)?)?),
        sj,
    );
    ctx.law(
        tag("3d"),
        Mode::Exhaustive,
        is.clone(),
        |i| Ok(e(i)? == e(&c(&e(i)?)?)?),
        si,
    );

    // I ↦ I^e and J ↦ J^c are mutually inverse between the closed ideals.
    let closed_is: Vec<Ideal> = is
        .iter()
        .filter(|i| matches!(e(i).and_then(|k| c(&k)), Ok(k) if k == **i))
        .cloned()
        .collect();
    let closed_js: Vec<Ideal> = js
        .iter()
        .filter(|j| matches!(c(j).and_then(|k| e(&k)), Ok(k) if k == **j))
        .cloned()
        .collect();
    let cases: Vec<(bool, Ideal)> = closed_is
        .into_iter()
        .map(|i| (true, i))
        .chain(closed_js.into_iter().map(|j| (false, j)))
        .collect();
    ctx.law(
        tag("4"),
        Mode::Exhaustive,
        cases,
        |(source_side, x)| {
            if *source_side {
                let image = e(x)?;
                Ok(c(&image)? == *x && e(&c(&image)?)? == image)
            } else {
                let image = c(x)?;
                Ok(e(&image)? == *x && c(&e(&image)?)? == image)
            }
        },
        |(source_side, x)| if *source_side { si(x) } else { sj(x) },
    );

    let ipairs: Vec<Pair> = ctx.pairs();
    ctx.law(
        tag("5a"),
        Mode::Exhaustive,
        ipairs.clone(),
        |(a, b)| Ok(e(&q.meet_ideals(a, b)?)?.is_subset(&t.meet_ideals(&e(a)?, &e(b)?)?)),
        si2,
    );
    ctx.law(
        tag("5b"),
        Mode::Exhaustive,
        ipairs.clone(),
        |(a, b)| Ok(e(&q.product_ideals(a, b)?)? == t.product_ideals(&e(a)?, &e(b)?)?),
        si2,
    );
    ctx.law(
        tag("5c"),
        Mode::Exhaustive,
        ipairs,
        |(a, b)| Ok(e(&q.residual(a, b)?)?.is_subset(&t.residual(&e(a)?, &e(b)?)?)),
        si2,
    );

    let jpairs: Vec<Pair> = js
        .iter()
        .flat_map(|a| js.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    ctx.law(
        tag("6a"),
        Mode::Exhaustive,
        jpairs.clone(),
        |(a, b)| Ok(c(&t.meet_ideals(a, b)?)? == q.meet_ideals(&c(a)?, &c(b)?)?),
        sj2,
    );
    ctx.law(
        tag("6b"),
        Mode::Exhaustive,
        jpairs.clone(),
        |(a, b)| {
            Ok(q.product_ideals(&c(a)?, &c(b)?)?
                .is_subset(&c(&t.product_ideals(a, b)?)?))
        },
        sj2,
    );
    ctx.law(
        tag("6c"),
        Mode::Exhaustive,
        jpairs,
        |(a, b)| Ok(c(&t.residual(a, b)?)?.is_subset(&q.residual(&c(a)?, &c(b)?)?)),
        sj2,
    );
}

/// Finite-carrier facts: every ideal is principal, and the fast operations
/// agree with their definitions.
pub(super) fn collapse(ctx: &mut Ctx) {
    let q = ctx.q;
    let ideals = ctx.ideals.clone();
    let pairs = ctx.pairs();
    let s1 = |i: &Ideal| names(q, &[i]);
    let s2 = |(i, j): &Pair| names(q, &[i, j]);

    if q.size() <= BRUTE_FORCE_LIMIT {
        ctx.fact(
            "collapse.enumerate",
            || {
                let mut fast: Vec<Vec<usize>> = ideals.iter().map(|i| i.iter().collect()).collect();
                let mut slow: Vec<Vec<usize>> = brute_force_ideals(q).iter().map(|s| s.ones().collect()).collect();
                fast.sort();
                slow.sort();
                Ok(fast == slow)
            },
            || format!("{} ideals enumerated", ideals.len()),
        );
    } else {
        ctx.skip("collapse.enumerate", "carrier above 12 elements");
    }
    ctx.law(
        "collapse.principal",
        Mode::Exhaustive,
        q.elements(),
        |&a| {
            let i = q.principal(a);
            Ok(q.apex(&i) == a && q.is_ideal(i.members()))
        },
        |&a| q.label(a).to_string(),
    );
    ctx.law(
        "collapse.apex",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(q.principal(q.apex(i)) == *i),
        s1,
    );

    let (subsets, mode) = ctx.subsets("collapse.generated", 10);
    ctx.law(
        "collapse.generated",
        mode,
        subsets,
        |s| {
            let g = q.generated(s)?;
            Ok(*g.members() == generated_by_definition(q, s) && g == q.principal(q.join_all(s.ones())))
        },
        |s| q.subset_labels(s),
    );
    ctx.law(
        "collapse.product",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(*q.product_ideals(i, j)?.members() == product_by_definition(q, i, j)),
        s2,
    );
    ctx.law(
        "collapse.join",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(*q.join_ideals(i, j)?.members() == join_by_definition(q, i, j)),
        s2,
    );
    ctx.law(
        "collapse.closed",
        Mode::Exhaustive,
        pairs,
        |(i, j)| {
            let results = [
                q.meet_ideals(i, j)?,
                q.join_ideals(i, j)?,
                q.product_ideals(i, j)?,
                q.residual(i, j)?,
            ];
            Ok(results.iter().all(|k| q.is_ideal(k.members())))
        },
        s2,
    );
    ctx.law(
        "collapse.galois",
        Mode::Exhaustive,
        ctx.triples(),
        |(k, j, i)| Ok(q.product_ideals(k, j)?.is_subset(i) == k.is_subset(&q.residual(i, j)?)),
        |(k, j, i)| names(q, &[k, j, i]),
    );
    ctx.fact(
        "collapse.ideal_quantale",
        || {
            let iq = ideal_quantale(q)?;
            Ok(iq.quantale().check_axioms().all_ok() && iq.principal_embedding()?.is_isomorphism())
        },
        || "ideal quantale is not an isomorphic quantale".to_string(),
    );
}
