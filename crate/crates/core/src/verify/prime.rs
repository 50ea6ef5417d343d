use std::collections::HashMap;

use super::{names, Ctx, Mode};
use crate::classify::McSet;
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::quantale::{ElemSet, FiniteQuantale};

type Pair = (Ideal, Ideal);

/// All McSets up to this carrier size; above it, only the generated ones and
/// prime complements.
const MCSET_LIMIT: usize = 12;

/// Radicals of every ideal, with the three algorithms required to agree.
/// Ideals outside the table are computed on demand.
struct Radicals<'a> {
    q: &'a FiniteQuantale,
    table: HashMap<Ideal, Ideal>,
}

impl<'a> Radicals<'a> {
    fn new(q: &'a FiniteQuantale, ideals: &[Ideal]) -> Self {
        let table = ideals
            .iter()
            .filter_map(|i| q.radical_checked(i).ok().map(|r| (i.clone(), r)))
            .collect();
        Radicals { q, table }
    }

    fn of(&self, i: &Ideal) -> Result<Ideal> {
        match self.table.get(i) {
            Some(r) => Ok(r.clone()),
            None => self.q.radical_checked(i),
        }
    }
}

fn proper(ctx: &Ctx) -> Vec<Ideal> {
    ctx.ideals.iter().filter(|i| ctx.q.is_proper(i)).cloned().collect()
}

pub(super) fn lpsp(ctx: &mut Ctx) {
    let q = ctx.q;
    let ideals = ctx.ideals.clone();
    let proper = proper(ctx);
    let s1 = |i: &Ideal| names(q, &[i]);
    let s2 = |(i, j): &Pair| names(q, &[i, j]);

    ctx.law(
        "lpsp.1",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(q.is_prime(i)? == q.is_prime_idealwise(i)?),
        s1,
    );

    // A prime between I and P, minimal among primes containing I.
    let spectrum = q.spectrum().unwrap_or_default();
    let between: Vec<Pair> = spectrum
        .iter()
        .flat_map(|p| {
            ideals
                .iter()
                .filter(|i| i.is_subset(p))
                .map(move |i| (i.clone(), p.clone()))
        })
        .collect();
    ctx.law(
        "lpsp.2",
        Mode::Exhaustive,
        between,
        |(i, p)| {
            let m = q.minimal_prime_between(i, p)?;
            let minimal = spectrum.iter().all(|r| !(i.is_subset(r) && r.is_subset(&m) && *r != m));
            Ok(q.is_prime(&m)? && i.is_subset(&m) && m.is_subset(p) && minimal)
        },
        s2,
    );
    ctx.law(
        "lpsp.3",
        Mode::Exhaustive,
        proper.clone(),
        |i| {
            let minimal = q.minimal_primes_over(i)?;
            let over = q.primes_over(i)?;
            let covered = over.iter().all(|p| minimal.iter().any(|m| m.is_subset(p)));
            Ok(!minimal.is_empty() && covered)
        },
        s1,
    );
    ctx.law(
        "lpsp.4",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(q.semiprime_verdict(i)?.holds == q.is_semiprime_idealwise(i)?),
        s1,
    );
    ctx.law(
        "lpsp.5",
        Mode::Exhaustive,
        ctx.pairs(),
        |(i, j)| Ok(q.join_ideals(i, j)? != q.whole() || q.meet_ideals(i, j)? == q.product_ideals(i, j)?),
        s2,
    );

    if q.is_degenerate() {
        ctx.skip("emi", "⊥ = ⊤");
    } else {
        ctx.fact(
            "emi",
            || Ok(!q.maximal_ideals()?.is_empty()),
            || "no maximal ideal".into(),
        );
    }
    let maximal = q.maximal_ideals().unwrap_or_default();
    ctx.law(
        "eicm",
        Mode::Exhaustive,
        proper.clone(),
        |i| Ok(maximal.iter().any(|m| i.is_subset(m))),
        s1,
    );
    ctx.law("max.prime", Mode::Exhaustive, maximal.clone(), |m| q.is_prime(m), s1);
    ctx.law(
        "local",
        Mode::Exhaustive,
        proper,
        |m| {
            let units_outside = q.elements().filter(|&x| !m.contains(x)).all(|x| q.is_unit(x));
            Ok(!units_outside || q.local_maximal()?.as_ref() == Some(m))
        },
        s1,
    );
}

/// Subsets closed under `∨` and `&`.
fn stable_sets(ctx: &Ctx) -> (Vec<ElemSet>, Mode) {
    let q = ctx.q;
    let (subsets, mode) = ctx.subsets("avoidance", 8);
    let closed = |s: &ElemSet| {
        s.ones()
            .all(|x| s.ones().all(|y| s.contains(q.join(x, y)) && s.contains(q.mul(x, y))))
    };
    let mut out: Vec<ElemSet> = subsets.into_iter().filter(|s| closed(s)).collect();
    out.dedup();
    (out, mode)
}

pub(super) fn avoidance(ctx: &mut Ctx) {
    let q = ctx.q;
    let ideals = ctx.ideals.clone();
    let primes = q.spectrum().unwrap_or_default();
    let (stable, mode) = stable_sets(ctx);
    // Lists of one to three ideals; positions after the second must be prime.
    let mut lists: Vec<Vec<Ideal>> = Vec::new();
    for a in &ideals {
        lists.push(vec![a.clone()]);
        for b in &ideals {
            lists.push(vec![a.clone(), b.clone()]);
            for p in &primes {
                lists.push(vec![a.clone(), b.clone(), p.clone()]);
            }
        }
    }
    let cases: Vec<(ElemSet, Vec<Ideal>)> = stable
        .iter()
        .flat_map(|s| {
            lists
                .iter()
                .filter(|ps| ps.iter().all(|p| !s.is_subset(p.members())))
                .map(move |ps| (s.clone(), ps.clone()))
        })
        .collect();
    ctx.law(
        "avoidance",
        mode,
        cases,
        |(s, ps)| {
            let x = q.prime_avoidance(s, ps)?;
            Ok(s.contains(x) && ps.iter().all(|p| !p.contains(x)))
        },
        |(s, ps)| {
            let refs: Vec<&Ideal> = ps.iter().collect();
            format!("{} {}", q.subset_labels(s), names(q, &refs))
        },
    );
}

pub(super) fn radical_lemma(ctx: &mut Ctx) {
    let q = ctx.q;
    let ideals = ctx.ideals.clone();
    let pairs = ctx.pairs();
    let rad = Radicals::new(q, &ideals);
    let r = |i: &Ideal| rad.of(i);
    let whole = q.whole();
    let s1 = |i: &Ideal| names(q, &[i]);
    let s2 = |(i, j): &Pair| names(q, &[i, j]);

    ctx.law(
        "rad.1",
        Mode::Exhaustive,
        ideals.clone(),
        |i| {
            let ri = r(i)?;
            Ok(q.is_ideal(ri.members()) && i.is_subset(&ri))
        },
        s1,
    );
    ctx.law(
        "rad.2",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| Ok(!i.is_subset(j) || r(i)?.is_subset(&r(j)?)),
        s2,
    );
    ctx.law(
        "rad.3",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(r(&r(i)?)? == r(i)?),
        s1,
    );
    let powers: Vec<(Ideal, usize)> = ideals
        .iter()
        .flat_map(|i| (1..=4).map(move |k| (i.clone(), k)))
        .collect();
    ctx.law(
        "rad.4",
        Mode::Exhaustive,
        powers,
        |(i, k)| Ok(r(i)? == r(&q.ideal_power(i, *k)?)?),
        |(i, k)| format!("{} n={k}", names(q, &[i])),
    );
    ctx.law(
        "rad.5",
        Mode::Exhaustive,
        pairs.clone(),
        |(i, j)| {
            let a = r(&q.meet_ideals(i, j)?)?;
            Ok(a == q.meet_ideals(&r(i)?, &r(j)?)? && a == r(&q.product_ideals(i, j)?)?)
        },
        s2,
    );
    let (families, mode) = ctx.families("rad.6", ideals.len());
    ctx.law(
        "rad.6",
        mode,
        families,
        |f| {
            let members: Vec<Ideal> = f.iter().map(|&k| ideals[k].clone()).collect();
            let rads = members.iter().map(r).collect::<Result<Vec<_>>>()?;
            Ok(q.join_family(&rads)?.is_subset(&r(&q.join_family(&members)?)?))
        },
        |f| {
            let refs: Vec<&Ideal> = f.iter().map(|&k| &ideals[k]).collect();
            names(q, &refs)
        },
    );
    ctx.law(
        "rad.7",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok((r(i)? == whole) == (*i == whole)),
        s1,
    );
    ctx.law(
        "rad.8",
        Mode::Exhaustive,
        pairs,
        |(i, j)| Ok(r(&q.join_ideals(i, j)?)? == r(&q.join_ideals(&r(i)?, &r(j)?)?)?),
        s2,
    );

    ctx.law(
        "edr",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(r(i)? == q.meet_family(&q.primes_over(i)?)?),
        s1,
    );
    let proper = proper(ctx);
    let semiprimes: Vec<Ideal> = proper
        .iter()
        .filter(|i| q.is_semiprime(i).unwrap_or(false))
        .cloned()
        .collect();
    ctx.law(
        "cor",
        Mode::Exhaustive,
        proper,
        |i| {
            let ri = r(i)?;
            let least = semiprimes.iter().filter(|s| i.is_subset(s)).all(|s| ri.is_subset(s));
            Ok(q.is_semiprime(&ri)? && least)
        },
        s1,
    );
    ctx.fact(
        "nil",
        || {
            let n = q.nilradical()?;
            let below_jacobson = q.is_degenerate() || n.is_subset(&q.jacobson()?);
            Ok(n == q.meet_family(&q.spectrum()?)? && below_jacobson)
        },
        || "nilradical differs from the meet of primes or exceeds the Jacobson radical".into(),
    );
    ctx.fact(
        "qd",
        || Ok((q.is_reduced()? && q.minimal_primes()?.len() == 1) == q.is_qd()),
        || format!("reduced and one minimal prime disagrees with QD = {}", q.is_qd()),
    );
}

pub(super) fn spkr(ctx: &mut Ctx) {
    let q = ctx.q;
    let proper = proper(ctx);
    let semiprime = |i: &Ideal| q.is_semiprime(i);
    let meet_of_primes = |i: &Ideal| Ok(q.meet_family(&q.primes_over(i)?)? == *i);
    let radical = |i: &Ideal| q.is_radical_ideal(i);
    let s1 = |i: &Ideal| names(q, &[i]);
    ctx.law(
        "spkr.1-2",
        Mode::Exhaustive,
        proper.clone(),
        |i| Ok(semiprime(i)? == meet_of_primes(i)?),
        s1,
    );
    ctx.law(
        "spkr.2-3",
        Mode::Exhaustive,
        proper.clone(),
        |i| Ok(meet_of_primes(i)? == radical(i)?),
        s1,
    );
    ctx.law(
        "spkr.1-3",
        Mode::Exhaustive,
        proper,
        |i| Ok(semiprime(i)? == radical(i)?),
        s1,
    );
}

/// Every McSet on small carriers; otherwise the generated McSets and the
/// complements of primes.
fn mcsets(q: &FiniteQuantale) -> (Vec<McSet>, Mode) {
    if q.size() <= MCSET_LIMIT {
        return (q.all_mcsets(), Mode::Exhaustive);
    }
    let mut out: Vec<McSet> = q.elements().map(|x| q.mc_generated(x)).collect();
    for p in q.spectrum().unwrap_or_default() {
        let mut c = p.members().clone();
        c.toggle_range(..);
        if let Ok(s) = q.mc_set(c) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.members().ones().collect::<Vec<_>>());
    out.dedup();
    (out, Mode::Sampled)
}

pub(super) fn saturation(ctx: &mut Ctx) {
    let q = ctx.q;
    let (all, mode) = mcsets(q);
    let show = |s: &McSet| q.subset_labels(s.members());

    ctx.law(
        "sat.1a",
        mode,
        all.clone(),
        |s| {
            let sat = q.saturation(s)?;
            Ok(s.members().is_subset(sat.members()) && q.is_saturated(&sat)?)
        },
        show,
    );
    let saturated: Vec<McSet> = all
        .iter()
        .filter(|s| q.is_saturated(s).unwrap_or(false))
        .cloned()
        .collect();
    ctx.law(
        "sat.1b",
        mode,
        all.clone(),
        |s| {
            let sat = q.saturation(s)?;
            Ok(saturated
                .iter()
                .filter(|t| s.members().is_subset(t.members()))
                .all(|t| sat.members().is_subset(t.members())))
        },
        show,
    );
    let mut differs = None;
    ctx.law(
        "sat.2",
        mode,
        all.clone(),
        |s| {
            let union = q.complement_is_union_of_primes(s)?;
            if differs.is_none() && s.len() < q.size() && union != q.complement_is_join_of_primes(s)? {
                differs = Some(q.subset_labels(s.members()));
            }
            Ok(q.is_saturated(s)? == union)
        },
        show,
    );
    if let Some(s) = differs {
        ctx.note(format!("sat.2: union and ideal-join readings differ at S = {s}"));
    }

    let proper = proper(ctx);
    let s1 = |i: &Ideal| names(q, &[i]);
    ctx.law(
        "rpms",
        Mode::Exhaustive,
        proper.clone(),
        |p| {
            let mut c = p.members().clone();
            c.toggle_range(..);
            Ok(q.is_prime(p)? == q.is_mc(&c))
        },
        s1,
    );
    let ideals = ctx.ideals.clone();
    let avoidable: Vec<McSet> = all.iter().filter(|s| !s.contains(q.bottom())).cloned().collect();
    ctx.law(
        "mxkp",
        mode,
        avoidable,
        |s| {
            let chosen = q.maximal_avoiding(s)?;
            let avoiding: Vec<Ideal> = ideals
                .iter()
                .filter(|i| i.iter().all(|x| !s.contains(x)))
                .cloned()
                .collect();
            let every = crate::classify::inclusion_maximal(avoiding)
                .iter()
                .map(|p| q.is_prime(p))
                .collect::<Result<Vec<_>>>()?;
            Ok(q.is_prime(&chosen)? && every.into_iter().all(|b| b))
        },
        show,
    );
    let outside: Vec<(Ideal, usize)> = proper
        .iter()
        .filter(|i| q.is_semiprime(i).unwrap_or(false))
        .flat_map(|i| q.elements().filter(|&x| !i.contains(x)).map(move |x| (i.clone(), x)))
        .collect();
    ctx.law(
        "mms",
        Mode::Exhaustive,
        outside,
        |(i, x)| Ok(q.mc_generated(*x).members().ones().all(|y| !i.contains(y))),
        |(i, x)| format!("{} {}", names(q, &[i]), q.label(*x)),
    );
    // R(I) is the set of l such that every McSet containing l meets I.
    ctx.law(
        "rkt",
        mode,
        ctx.ideals.clone(),
        |i| {
            let mut t = q.empty_set();
            t.extend(q.elements().filter(|&l| {
                all.iter()
                    .filter(|s| s.contains(l))
                    .all(|s| s.members().ones().any(|y| i.contains(y)))
            }));
            let r = q.radical_checked(i)?;
            if t != *r.members() {
                return Err(Error::LawViolated {
                    law: "rkt",
                    detail: q.subset_labels(&t),
                });
            }
            Ok(true)
        },
        s1,
    );
}
