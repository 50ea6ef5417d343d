use super::{names, Ctx, Mode};
use crate::classify::{inclusion_minimal, RadicalAlgorithm};
use crate::decompose::{Decomposition, DecompositionKind};
use crate::error::{Error, Result};
use crate::ideals::Ideal;

fn proper(ctx: &Ctx) -> Vec<Ideal> {
    ctx.ideals.iter().filter(|i| ctx.q.is_proper(i)).cloned().collect()
}

fn as_set(mut v: Vec<Ideal>) -> Vec<Ideal> {
    v.sort_by_key(|i| i.iter().collect::<Vec<_>>());
    v.dedup();
    v
}

pub(super) fn primary(ctx: &mut Ctx) {
    let q = ctx.q;
    let ideals = ctx.ideals.clone();
    let spectrum = q.spectrum().unwrap_or_default();
    let primary: Vec<Ideal> = ideals
        .iter()
        .filter(|i| q.is_primary(i).unwrap_or(false))
        .cloned()
        .collect();
    let s1 = |i: &Ideal| names(q, &[i]);
    let rad = |i: &Ideal| q.radical(i, RadicalAlgorithm::Powers);

    ctx.law("prim.1", Mode::Exhaustive, spectrum.clone(), |p| q.is_primary(p), s1);
    ctx.law(
        "prim.2",
        Mode::Exhaustive,
        primary.clone(),
        |p| {
            let r = rad(p)?;
            Ok(q.is_prime(&r)? && q.minimal_primes_over(p)? == vec![r])
        },
        s1,
    );
    let (families, mode) = ctx.families("plpd", ideals.len());
    ctx.law(
        "plpd",
        mode,
        families,
        |f| {
            let members: Vec<Ideal> = f.iter().map(|&k| ideals[k].clone()).collect();
            let rads = members.iter().map(rad).collect::<Result<Vec<_>>>()?;
            Ok(rad(&q.meet_family(&members)?)? == q.meet_family(&rads)?)
        },
        |f| {
            let refs: Vec<&Ideal> = f.iter().map(|&k| &ideals[k]).collect();
            names(q, &refs)
        },
    );

    // Meets of P-primary families, per prime P.
    let mut cases: Vec<(Ideal, Vec<Ideal>)> = Vec::new();
    let mut piqp_mode = Mode::Exhaustive;
    for p in &spectrum {
        let over: Vec<Ideal> = primary
            .iter()
            .filter(|c| rad(c).ok().as_ref() == Some(p))
            .cloned()
            .collect();
        let (families, mode) = ctx.families(&format!("piqp {}", q.ideal_name(p)), over.len());
        if mode == Mode::Sampled {
            piqp_mode = Mode::Sampled;
        }
        cases.extend(
            families
                .into_iter()
                .map(|f| (p.clone(), f.iter().map(|&k| over[k].clone()).collect())),
        );
    }
    ctx.law(
        "piqp",
        piqp_mode,
        cases,
        |(p, f)| q.is_p_primary(&q.meet_family(f)?, p),
        |(p, f)| {
            let refs: Vec<&Ideal> = f.iter().collect();
            format!("{} {}", names(q, &[p]), names(q, &refs))
        },
    );

    // Minimizing the decomposition by every primary ideal above the target.
    let decomposable: Vec<Ideal> = proper(ctx)
        .into_iter()
        .filter(|i| q.primary_decomposition(i).is_ok())
        .collect();
    ctx.law(
        "minimize",
        Mode::Exhaustive,
        decomposable,
        |i| {
            let components: Vec<Ideal> = primary.iter().filter(|c| i.is_subset(c)).cloned().collect();
            let radicals = components.iter().map(rad).collect::<Result<Vec<_>>>()?;
            let raw = Decomposition {
                target: i.clone(),
                components,
                kind: DecompositionKind::Primary,
                radicals,
                minimal: false,
            };
            let d = q.minimize(&raw)?;
            let found = q.primary_decomposition(i)?;
            Ok(q.meet_family(&d.components)? == *i
                && q.is_minimal_decomposition(&d)?
                && q.is_minimal_decomposition(&found)?
                && q.meet_family(&found.components)? == *i)
        },
        s1,
    );
    let refused: Vec<String> = proper(ctx)
        .iter()
        .filter(|i| matches!(q.primary_decomposition(i), Err(Error::NotDecomposable { .. })))
        .map(|i| q.ideal_name(i))
        .collect();
    if !refused.is_empty() {
        ctx.note(format!("primary: not decomposable: {}", refused.join(", ")));
    }
}

pub(super) fn pqx(ctx: &mut Ctx) {
    let q = ctx.q;
    // A radical that fails to compute (only on broken tables) fails every law
    // over its cases.
    let cases: Vec<(Ideal, Result<Ideal>, usize)> = ctx
        .ideals
        .iter()
        .filter(|i| q.is_primary(i).unwrap_or(false))
        .flat_map(|i| {
            let p = q.radical(i, RadicalAlgorithm::Powers);
            q.elements().map(move |x| (i.clone(), p.clone(), x))
        })
        .collect();
    let show = |(i, _, x): &(Ideal, Result<Ideal>, usize)| format!("{} {}", names(q, &[i]), q.label(*x));
    ctx.law(
        "pqx.1",
        Mode::Exhaustive,
        cases.clone(),
        |(i, p, x)| {
            p.clone()?;
            Ok(!i.contains(*x) || q.residual_by_element(i, *x)? == q.whole())
        },
        show,
    );
    ctx.law(
        "pqx.2",
        Mode::Exhaustive,
        cases.clone(),
        |(i, p, x)| {
            let p = p.clone()?;
            Ok(i.contains(*x) || q.is_p_primary(&q.residual_by_element(i, *x)?, &p)?)
        },
        show,
    );
    ctx.law(
        "pqx.3",
        Mode::Exhaustive,
        cases,
        |(i, p, x)| {
            let p = p.clone()?;
            Ok(p.contains(*x) || q.residual_by_element(i, *x)? == *i)
        },
        show,
    );
}

pub(super) fn uniqueness(ctx: &mut Ctx) {
    let q = ctx.q;
    let reports: Vec<_> = proper(ctx)
        .into_iter()
        .filter_map(|i| match q.uniqueness_report(&i) {
            Err(Error::NotDecomposable { .. }) => None,
            r => Some((i, r)),
        })
        .collect();
    let show = |(i, _): &(Ideal, _)| names(q, &[i]);
    ctx.law(
        "uniq.assoc",
        Mode::Exhaustive,
        reports.iter().map(|(i, r)| (i.clone(), r.clone())).collect::<Vec<_>>(),
        |(_, r)| {
            let r = r.as_ref().map_err(Clone::clone)?;
            Ok(as_set(r.associated_primes.clone()) == as_set(r.colon_primes.clone()))
        },
        show,
    );
    ctx.law(
        "uniq.isolated",
        Mode::Exhaustive,
        reports.iter().map(|(i, r)| (i.clone(), r.clone())).collect::<Vec<_>>(),
        |(i, r)| {
            let r = r.as_ref().map_err(Clone::clone)?;
            Ok(as_set(r.isolated.clone()) == as_set(q.minimal_primes_over(i)?))
        },
        show,
    );
    ctx.law(
        "uniq.components",
        Mode::Exhaustive,
        reports.iter().map(|(i, r)| (i.clone(), r.clone())).collect::<Vec<_>>(),
        |(_, r)| Ok(r.as_ref().map_err(Clone::clone)?.isolated_components_match),
        show,
    );
    ctx.law(
        "idqa",
        Mode::Exhaustive,
        reports.into_iter().collect::<Vec<_>>(),
        |(i, r)| {
            let r = r.as_ref().map_err(Clone::clone)?;
            let over = q.primes_over(i)?;
            Ok(over.iter().all(|p| r.isolated.iter().any(|s| s.is_subset(p))))
        },
        show,
    );
}

pub(super) fn irreducible(ctx: &mut Ctx) {
    let q = ctx.q;
    let ideals = ctx.ideals.clone();
    let proper = proper(ctx);
    let s1 = |i: &Ideal| names(q, &[i]);

    ctx.law(
        "abi",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(q.strongly_irreducible_verdict(i)?.holds == q.is_strongly_irreducible_elementwise(i)?),
        s1,
    );
    ctx.law(
        "si.irr",
        Mode::Exhaustive,
        ideals.clone(),
        |i| Ok(!q.is_strongly_irreducible(i)? || q.is_irreducible(i)?),
        s1,
    );
    let avoid: Vec<(Ideal, usize)> = proper
        .iter()
        .flat_map(|i| {
            q.elements()
                .filter(|&x| x != q.bottom() && !i.contains(x))
                .map(move |x| (i.clone(), x))
        })
        .collect();
    ctx.law(
        "lir",
        Mode::Exhaustive,
        avoid,
        |(i, x)| {
            Ok(match q.irreducible_avoiding(i, *x)? {
                Some(j) => q.is_irreducible(&j)? && i.is_subset(&j) && !j.contains(*x),
                None => false,
            })
        },
        |(i, x)| format!("{} {}", names(q, &[i]), q.label(*x)),
    );
    let irreducibles: Vec<Ideal> = ideals
        .iter()
        .filter(|i| q.is_irreducible(i).unwrap_or(false))
        .cloned()
        .collect();
    ctx.law(
        "repr",
        Mode::Exhaustive,
        proper.clone(),
        |i| {
            let above: Vec<&Ideal> = irreducibles.iter().filter(|j| i.is_subset(j)).collect();
            Ok(q.meet_family(above)? == *i)
        },
        s1,
    );
    ctx.law(
        "finite",
        Mode::Exhaustive,
        proper.clone(),
        |i| {
            let d = q.irreducible_decomposition(i)?;
            let irr = d
                .components
                .iter()
                .map(|c| q.is_irreducible(c))
                .collect::<Result<Vec<_>>>()?;
            Ok(q.meet_family(&d.components)? == *i && irr.into_iter().all(|b| b))
        },
        s1,
    );
    // Restricted to proper ideals: the whole carrier is strongly irreducible
    // and radical but never prime.
    ctx.law(
        "prira",
        Mode::Exhaustive,
        proper.clone(),
        |p| Ok(!q.is_strongly_irreducible(p)? || q.is_prime(p)? == q.is_radical_ideal(p)?),
        s1,
    );
    ctx.law(
        "msi",
        Mode::Exhaustive,
        proper.clone(),
        |i| {
            let m = q.minimal_strongly_irreducible_over(i)?;
            let mut strong = Vec::new();
            for j in &proper {
                if i.is_subset(j) && q.is_strongly_irreducible(j)? {
                    strong.push(j.clone());
                }
            }
            Ok(q.is_strongly_irreducible(&m)? && i.is_subset(&m) && inclusion_minimal(strong).contains(&m))
        },
        s1,
    );
    ctx.fact(
        "total",
        || {
            let mut all_strong = true;
            for i in &ideals {
                all_strong &= q.is_strongly_irreducible(i)?;
            }
            Ok(all_strong == q.totally_ordered_ideals()?)
        },
        || "every ideal strongly irreducible disagrees with a chain of ideals".into(),
    );
}

pub(super) fn arithmetic(ctx: &mut Ctx) {
    let q = ctx.q;
    let report = match q.arithmetic_equivalence_check() {
        Ok(r) => r,
        Err(e) => {
            ctx.record("arith.thm", 1, Some(e.to_string()));
            return;
        }
    };
    let s1 = |i: &Ideal| names(q, &[i]);
    let strong = report.strongly_irreducible.clone();
    let irreducible_not_strong: Vec<Ideal> = report
        .irreducible
        .iter()
        .filter(|i| !strong.contains(i))
        .cloned()
        .collect();

    // Distributive ideal lattice ⇒ irreducible and strongly irreducible agree.
    let cases = if report.arithmetic {
        report.irreducible.clone()
    } else {
        Vec::new()
    };
    ctx.law("arith.thm", Mode::Exhaustive, cases, |i| Ok(strong.contains(i)), s1);
    // Agreement everywhere ⇒ distributive.
    let witness = report.distributivity_witness.clone();
    ctx.fact(
        "arith.converse",
        || Ok(!irreducible_not_strong.is_empty() || witness.is_none()),
        || match &witness {
            Some([a, b, c]) => names(q, &[a, b, c]),
            None => String::new(),
        },
    );
    let cases = if report.arithmetic {
        ctx.ideals.clone()
    } else {
        Vec::new()
    };
    ctx.law(
        "arith.cor",
        Mode::Exhaustive,
        cases,
        |i| {
            let above: Vec<&Ideal> = strong.iter().filter(|s| i.is_subset(s)).collect();
            Ok(q.meet_family(above)? == *i)
        },
        s1,
    );
    ctx.fact(
        "arith.consistent",
        || Ok(report.consistent),
        || "arithmetic report is inconsistent".into(),
    );
}
