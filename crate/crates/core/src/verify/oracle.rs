//! Slow reference computations taken straight from the definitions, used to
//! cross-check the fast paths.

use crate::classify::RadicalAlgorithm;
use crate::error::{Error, Result};
use crate::ideals::{ideal_quantale, Ideal};
use crate::quantale::{Elem, ElemSet, FiniteQuantale};

/// Largest carrier accepted by [`cross_oracle`].
pub const ORACLE_LIMIT: usize = 12;

/// Every subset that is nonempty, closed under binary joins and closed
/// downward, found by testing all `2ⁿ` subsets.
pub fn brute_force_ideals(q: &FiniteQuantale) -> Vec<ElemSet> {
    let n = q.size();
    assert!(n <= 20, "brute-force enumeration is limited to 20 elements");
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let has = |x: Elem| mask >> x & 1 == 1;
        let members: Vec<Elem> = (0..n).filter(|&x| has(x)).collect();
        let joins = members.iter().all(|&x| members.iter().all(|&y| has(q.join(x, y))));
        let down = members.iter().all(|&x| (0..n).all(|l| !q.leq(l, x) || has(l)));
        if joins && down {
            out.push(q.set_of(members));
        }
    }
    out
}

/// Elements below some finite join of members of `seeds`.
pub fn join_closure(q: &FiniteQuantale, seeds: &ElemSet) -> ElemSet {
    let mut joins = seeds.clone();
    loop {
        let found: Vec<Elem> = joins
            .ones()
            .flat_map(|x| joins.ones().map(move |y| q.join(x, y)))
            .filter(|&z| !joins.contains(z))
            .collect();
        if found.is_empty() {
            break;
        }
        joins.extend(found);
    }
    let mut down = q.empty_set();
    for x in joins.ones() {
        down.union_with(&q.down_set(x));
    }
    down
}

/// `I & J` from the definition: elements below a finite join of products
/// `x & y` with `x ∈ I`, `y ∈ J`.
pub fn product_by_definition(q: &FiniteQuantale, i: &Ideal, j: &Ideal) -> ElemSet {
    let products = q.set_of(i.iter().flat_map(|x| j.iter().map(move |y| q.mul(x, y))));
    join_closure(q, &products)
}

/// `I ∨ J` from the definition.
pub fn join_by_definition(q: &FiniteQuantale, i: &Ideal, j: &Ideal) -> ElemSet {
    let mut union = i.members().clone();
    union.union_with(j.members());
    join_closure(q, &union)
}

/// `⟨S⟩` from the definition: elements below a finite join of members of `Q & S`.
pub fn generated_by_definition(q: &FiniteQuantale, s: &ElemSet) -> ElemSet {
    let products = q.set_of(s.ones().flat_map(|t| q.elements().map(move |l| q.mul(l, t))));
    join_closure(q, &products)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossOracleReport {
    pub ideal_count: usize,
    /// The enumerated ideals are exactly the subsets passing the definition.
    pub enumeration_matches: bool,
    /// Powers, primes and McSet radicals agree on every ideal, and with the
    /// quantifier over all McSets on carriers of at most 8 elements.
    pub radicals_agree: bool,
    /// `↓(apex I & apex J)` equals the definitional product for every pair.
    pub product_matches: bool,
    /// `a ↦ ↓a` is an isomorphism onto the ideal quantale.
    pub ideal_quantale_isomorphic: bool,
}

impl CrossOracleReport {
    pub fn all_agree(&self) -> bool {
        self.enumeration_matches && self.radicals_agree && self.product_matches && self.ideal_quantale_isomorphic
    }
}

pub fn cross_oracle(q: &FiniteQuantale) -> Result<CrossOracleReport> {
    if q.size() > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            size: q.size(),
            cap: ORACLE_LIMIT,
        });
    }
    let ideals = q.enumerate_ideals()?;
    let mut fast: Vec<ElemSet> = ideals.iter().map(|i| i.members().clone()).collect();
    let mut slow = brute_force_ideals(q);
    fast.sort_by_key(|s| s.ones().collect::<Vec<_>>());
    slow.sort_by_key(|s| s.ones().collect::<Vec<_>>());
    let enumeration_matches = fast == slow;

    let mut radicals_agree = true;
    for i in &ideals {
        let r: Vec<Ideal> = RadicalAlgorithm::ALL
            .iter()
            .map(|&a| q.radical(i, a))
            .collect::<Result<_>>()?;
        radicals_agree &= r.windows(2).all(|w| w[0] == w[1]);
        if q.size() <= 8 {
            radicals_agree &= q.radical_over_all_mcsets(i)? == *r[0].members();
        }
    }

    let mut product_matches = true;
    for i in &ideals {
        for j in &ideals {
            product_matches &= *q.product_ideals(i, j)?.members() == product_by_definition(q, i, j);
        }
    }

    let ideal_quantale_isomorphic = match ideal_quantale(q).and_then(|iq| iq.principal_embedding()) {
        Ok(h) => h.is_isomorphism(),
        Err(_) => false,
    };

    Ok(CrossOracleReport {
        ideal_count: ideals.len(),
        enumeration_matches,
        radicals_agree,
        product_matches,
        ideal_quantale_isomorphic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bundled, Generator};

    #[test]
    fn brute_force_counts() {
        assert_eq!(brute_force_ideals(&bundled::q4()).len(), 4);
        assert_eq!(brute_force_ideals(&bundled::l3()).len(), 3);
        assert_eq!(brute_force_ideals(&bundled::c2()).len(), 2);
    }

    #[test]
    fn oracles_agree_on_examples() {
        for q in [bundled::q4(), bundled::l3(), Generator::PowerSet(3).generate().unwrap()] {
            let r = cross_oracle(&q).unwrap();
            assert!(r.all_agree(), "{}: {r:?}", q.name());
        }
        assert_eq!(
            cross_oracle(&Generator::PowerSet(3).generate().unwrap())
                .unwrap()
                .ideal_count,
            8
        );
    }

    #[test]
    fn generated_matches_definition() {
        let q = bundled::m3();
        for mask in 1u64..(1 << q.size()) {
            let s = q.set_of((0..q.size()).filter(|k| mask >> k & 1 == 1));
            assert_eq!(*q.generated(&s).unwrap().members(), generated_by_definition(&q, &s));
        }
    }
}
