//! Prime, semiprime and primary ideals, radicals, the spectrum, maximal ideals,
//! multiplicatively closed sets, saturation and prime avoidance.
//!
//! Every "for some n" quantifier over powers is bounded by the carrier size:
//! the sequence `x, x², …` on an n-element carrier repeats within n steps.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::quantale::{Elem, ElemSet, FiniteQuantale};

/// Outcome of a predicate with the elements that refute it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Vec<Elem>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict { holds: true, witness: Vec::new() }
    }

    pub fn no(witness: Vec<Elem>) -> Self {
        Verdict { holds: false, witness }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadicalAlgorithm {
    Powers,
    Primes,
    McSets,
}

impl RadicalAlgorithm {
    pub const ALL: [RadicalAlgorithm; 3] =
        [RadicalAlgorithm::Powers, RadicalAlgorithm::Primes, RadicalAlgorithm::McSets];

    pub fn tag(self) -> &'static str {
        match self {
            RadicalAlgorithm::Powers => "powers",
            RadicalAlgorithm::Primes => "primes",
            RadicalAlgorithm::McSets => "mcsets",
        }
    }
}

impl std::str::FromStr for RadicalAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        RadicalAlgorithm::ALL
            .into_iter()
            .find(|a| a.tag() == s)
            .ok_or_else(|| format!("unknown radical algorithm `{s}`"))
    }
}

/// A subset containing top and closed under `&`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct McSet {
    carrier: u64,
    members: ElemSet,
}

impl fmt::Debug for McSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.ones()).finish()
    }
}

impl McSet {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FiniteQuantale {
    /// `x, x², …, xⁿ` with `n` the carrier size.
    pub fn powers_of(&self, x: Elem) -> impl Iterator<Item = Elem> + '_ {
        std::iter::successors(Some(x), move |&p| Some(self.mul(p, x))).take(self.size())
    }

    fn some_power_in(&self, x: Elem, set: &ElemSet) -> bool {
        self.powers_of(x).any(|p| set.contains(p))
    }

    pub fn prime_verdict(&self, i: &Ideal) -> Result<Verdict> {
        self.require_commutative()?;
        if !self.is_proper(i) {
            return Ok(Verdict::no(vec![self.top()]));
        }
        for x in self.elements() {
            for y in x..self.size() {
                if i.contains(self.mul(x, y)) && !i.contains(x) && !i.contains(y) {
                    return Ok(Verdict::no(vec![x, y]));
                }
            }
        }
        Ok(Verdict::yes())
    }

    pub fn is_prime(&self, i: &Ideal) -> Result<bool> {
        Ok(self.prime_verdict(i)?.holds)
    }

    /// `J & K ⊆ P ⇒ J ⊆ P or K ⊆ P`, over all ideal pairs.
    pub fn is_prime_idealwise(&self, i: &Ideal) -> Result<bool> {
        let ideals = self.enumerate_ideals()?;
        if !self.is_proper(i) {
            return Ok(false);
        }
        for j in &ideals {
            for k in &ideals {
                if self.product_ideals(j, k)?.is_subset(i) && !j.is_subset(i) && !k.is_subset(i) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn semiprime_verdict(&self, i: &Ideal) -> Result<Verdict> {
        self.require_commutative()?;
        if !self.is_proper(i) {
            return Ok(Verdict::no(vec![self.top()]));
        }
        match self.elements().find(|&x| i.contains(self.mul(x, x)) && !i.contains(x)) {
            Some(x) => Ok(Verdict::no(vec![x])),
            None => Ok(Verdict::yes()),
        }
    }

    /// Element-wise and ideal-wise forms; a disagreement means the table is
    /// not a quantale.
    pub fn is_semiprime(&self, i: &Ideal) -> Result<bool> {
        let elementwise = self.semiprime_verdict(i)?.holds;
        if elementwise != self.is_semiprime_idealwise(i)? {
            return Err(Error::LawViolated {
                law: "semiprime forms agree",
                detail: format!("ideal {}", self.ideal_name(i)),
            });
        }
        Ok(elementwise)
    }

    /// `J & J ⊆ I ⇒ J ⊆ I`, over all ideals.
    pub fn is_semiprime_idealwise(&self, i: &Ideal) -> Result<bool> {
        let ideals = self.enumerate_ideals()?;
        if !self.is_proper(i) {
            return Ok(false);
        }
        for j in &ideals {
            if self.product_ideals(j, j)?.is_subset(i) && !j.is_subset(i) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn primary_verdict(&self, i: &Ideal) -> Result<Verdict> {
        self.require_commutative()?;
        if !self.is_proper(i) {
            return Ok(Verdict::no(vec![self.top()]));
        }
        for x in self.elements() {
            for y in self.elements() {
                if i.contains(self.mul(x, y)) && !i.contains(x) && !self.some_power_in(y, i.members()) {
                    return Ok(Verdict::no(vec![x, y]));
                }
            }
        }
        Ok(Verdict::yes())
    }

    pub fn is_primary(&self, i: &Ideal) -> Result<bool> {
        Ok(self.primary_verdict(i)?.holds)
    }

    pub fn is_p_primary(&self, i: &Ideal, p: &Ideal) -> Result<bool> {
        if !self.is_prime(p)? {
            return Err(Error::NotPrime);
        }
        Ok(self.is_primary(i)? && self.radical(i, RadicalAlgorithm::Powers)? == *p)
    }

    pub fn radical(&self, i: &Ideal, algorithm: RadicalAlgorithm) -> Result<Ideal> {
        self.require_commutative()?;
        let members = match algorithm {
            RadicalAlgorithm::Powers => {
                let mut r = self.empty_set();
                r.extend(self.elements().filter(|&x| self.some_power_in(x, i.members())));
                r
            }
            RadicalAlgorithm::Primes => {
                let over = self.primes_over(i)?;
                return self.meet_family(&over);
            }
            RadicalAlgorithm::McSets => {
                let mut r = self.empty_set();
                r.extend(
                    self.elements()
                        .filter(|&l| self.mc_generated(l).members.ones().any(|s| i.contains(s))),
                );
                r
            }
        };
        self.ideal(members).map_err(|_| Error::LawViolated {
            law: "radical is an ideal",
            detail: format!("{} radical of {}", algorithm.tag(), self.ideal_name(i)),
        })
    }

    /// `{l | every McSet containing l meets I}`, quantified over every McSet.
    /// Exponential; intended for carriers of at most 16 elements.
    pub fn radical_over_all_mcsets(&self, i: &Ideal) -> Result<ElemSet> {
        self.require_commutative()?;
        let all = self.all_mcsets();
        let mut r = self.empty_set();
        for l in self.elements() {
            let meets = all
                .iter()
                .filter(|s| s.contains(l))
                .all(|s| s.members.ones().any(|x| i.contains(x)));
            if meets {
                r.insert(l);
            }
        }
        Ok(r)
    }

    /// Radical by every algorithm, failing if any two disagree.
    pub fn radical_checked(&self, i: &Ideal) -> Result<Ideal> {
        let r = self.radical(i, RadicalAlgorithm::Powers)?;
        for alg in [RadicalAlgorithm::Primes, RadicalAlgorithm::McSets] {
            if self.radical(i, alg)? != r {
                return Err(Error::LawViolated {
                    law: "radical algorithms agree",
                    detail: format!("powers and {} differ on {}", alg.tag(), self.ideal_name(i)),
                });
            }
        }
        Ok(r)
    }

    pub fn is_radical_ideal(&self, i: &Ideal) -> Result<bool> {
        Ok(self.radical(i, RadicalAlgorithm::Powers)? == *i)
    }

    /// All prime ideals, in apex order.
    pub fn spectrum(&self) -> Result<Vec<Ideal>> {
        let mut out = Vec::new();
        for i in self.enumerate_ideals()? {
            if self.is_prime(&i)? {
                out.push(i);
            }
        }
        Ok(out)
    }

    pub fn primes_over(&self, i: &Ideal) -> Result<Vec<Ideal>> {
        Ok(self.spectrum()?.into_iter().filter(|p| i.is_subset(p)).collect())
    }

    pub fn minimal_primes_over(&self, i: &Ideal) -> Result<Vec<Ideal>> {
        self.require_commutative()?;
        if !self.is_proper(i) {
            return Err(Error::NotProper);
        }
        Ok(inclusion_minimal(self.primes_over(i)?))
    }

    /// A prime minimal among primes between `i` and the prime `p`.
    pub fn minimal_prime_between(&self, i: &Ideal, p: &Ideal) -> Result<Ideal> {
        if !self.is_prime(p)? {
            return Err(Error::NotPrime);
        }
        if !i.is_subset(p) {
            return Err(Error::InvalidDecomposition("ideal is not below the prime".into()));
        }
        let between: Vec<Ideal> = self.primes_over(i)?.into_iter().filter(|q| q.is_subset(p)).collect();
        Ok(inclusion_minimal(between).swap_remove(0))
    }

    /// The minimal prime ideals of the carrier, i.e. minimal primes over `{⊥}`.
    pub fn minimal_primes(&self) -> Result<Vec<Ideal>> {
        if self.is_degenerate() {
            return Ok(Vec::new());
        }
        self.minimal_primes_over(&self.zero_ideal())
    }

    pub fn proper_ideals(&self) -> Result<Vec<Ideal>> {
        Ok(self.enumerate_ideals()?.into_iter().filter(|i| self.is_proper(i)).collect())
    }

    pub fn maximal_ideals(&self) -> Result<Vec<Ideal>> {
        self.require_commutative()?;
        if self.is_degenerate() {
            return Err(Error::Degenerate);
        }
        Ok(inclusion_maximal(self.proper_ideals()?))
    }

    pub fn is_maximal(&self, i: &Ideal) -> Result<bool> {
        if self.is_degenerate() {
            return Ok(false);
        }
        Ok(self.maximal_ideals()?.contains(i))
    }

    /// Nonzero and containing no smaller nonzero ideal.
    pub fn is_minimal_ideal(&self, i: &Ideal) -> Result<bool> {
        let zero = self.zero_ideal();
        if *i == zero {
            return Ok(false);
        }
        Ok(!self
            .enumerate_ideals()?
            .iter()
            .any(|j| *j != zero && j != i && j.is_subset(i)))
    }

    /// The unique maximal ideal, if there is exactly one.
    pub fn local_maximal(&self) -> Result<Option<Ideal>> {
        let mut max = self.maximal_ideals()?;
        Ok(if max.len() == 1 { max.pop() } else { None })
    }

    pub fn is_local(&self) -> Result<bool> {
        Ok(self.local_maximal()?.is_some())
    }

    pub fn jacobson(&self) -> Result<Ideal> {
        let max = self.maximal_ideals()?;
        self.meet_family(&max)
    }

    /// The nilpotent elements: `xⁿ = ⊥` for some `n ≥ 1`.
    pub fn nilradical(&self) -> Result<Ideal> {
        self.require_commutative()?;
        let mut nil = self.empty_set();
        nil.extend(self.elements().filter(|&x| self.powers_of(x).any(|p| p == self.bottom())));
        self.ideal(nil).map_err(|_| Error::LawViolated {
            law: "nilradical is an ideal",
            detail: String::new(),
        })
    }

    pub fn zero_divisors(&self) -> ElemSet {
        let mut z = self.empty_set();
        z.extend(self.elements().filter(|&x| {
            self.elements()
                .any(|y| y != self.bottom() && self.mul(x, y) == self.bottom())
        }));
        z
    }

    /// `⊥ ≠ ⊤` and no nonzero zero-divisors.
    pub fn is_qd(&self) -> bool {
        !self.is_degenerate()
            && self
                .zero_divisors()
                .ones()
                .all(|x| x == self.bottom())
    }

    pub fn is_reduced(&self) -> Result<bool> {
        Ok(self.nilradical()? == self.zero_ideal())
    }

    pub fn is_mc(&self, s: &ElemSet) -> bool {
        s.contains(self.top()) && s.ones().all(|x| s.ones().all(|y| s.contains(self.mul(x, y))))
    }

    pub fn mc_set(&self, s: ElemSet) -> Result<McSet> {
        if s.len() != self.size() || !self.is_mc(&s) {
            return Err(Error::NotMc);
        }
        Ok(McSet { carrier: self.fingerprint(), members: s })
    }

    /// `{⊤, x, x², …}`.
    pub fn mc_generated(&self, x: Elem) -> McSet {
        let mut s = self.set_of([self.top()]);
        s.extend(self.powers_of(x));
        McSet { carrier: self.fingerprint(), members: s }
    }

    /// Every McSet of the carrier. Exponential in the carrier size.
    pub fn all_mcsets(&self) -> Vec<McSet> {
        let n = self.size();
        assert!(n <= 20, "McSet enumeration is limited to 20 elements");
        let others: Vec<Elem> = self.elements().filter(|&x| x != self.top()).collect();
        let mut out = Vec::new();
        for mask in 0u64..(1 << others.len()) {
            let mut s = self.set_of([self.top()]);
            s.extend(others.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x));
            if self.is_mc(&s) {
                out.push(McSet { carrier: self.fingerprint(), members: s });
            }
        }
        out
    }

    /// `{x | x & y ∈ S for some y}`.
    pub fn saturation(&self, s: &McSet) -> Result<McSet> {
        self.own_mc(s)?;
        let mut sat = self.empty_set();
        sat.extend(
            self.elements()
                .filter(|&x| self.elements().any(|y| s.contains(self.mul(x, y)))),
        );
        self.mc_set(sat).map_err(|_| Error::LawViolated {
            law: "saturation is multiplicatively closed",
            detail: self.subset_labels(s.members()),
        })
    }

    /// `x & y ∈ S ⇒ x, y ∈ S`.
    pub fn is_saturated(&self, s: &McSet) -> Result<bool> {
        self.own_mc(s)?;
        Ok(self.elements().all(|x| {
            self.elements()
                .all(|y| !s.contains(self.mul(x, y)) || (s.contains(x) && s.contains(y)))
        }))
    }

    /// The complement equals the union of the primes it contains.
    pub fn complement_is_union_of_primes(&self, s: &McSet) -> Result<bool> {
        let (complement, union) = self.complement_and_prime_cover(s)?;
        Ok(complement == union)
    }

    /// The complement equals the ideal join of the primes it contains. Differs
    /// from the union reading whenever those primes are not a chain.
    pub fn complement_is_join_of_primes(&self, s: &McSet) -> Result<bool> {
        let inside = self.primes_avoiding(s)?;
        let join = self.join_family(&inside)?;
        let mut complement = s.members.clone();
        complement.toggle_range(..);
        Ok(!inside.is_empty() && *join.members() == complement)
    }

    fn primes_avoiding(&self, s: &McSet) -> Result<Vec<Ideal>> {
        self.own_mc(s)?;
        Ok(self
            .spectrum()?
            .into_iter()
            .filter(|p| p.iter().all(|x| !s.contains(x)))
            .collect())
    }

    fn complement_and_prime_cover(&self, s: &McSet) -> Result<(ElemSet, ElemSet)> {
        let mut union = self.empty_set();
        for p in self.primes_avoiding(s)? {
            union.union_with(p.members());
        }
        let mut complement = s.members.clone();
        complement.toggle_range(..);
        Ok((complement, union))
    }

    /// An ideal maximal among those disjoint from `s`; lowest apex on ties.
    pub fn maximal_avoiding(&self, s: &McSet) -> Result<Ideal> {
        self.own_mc(s)?;
        if s.contains(self.bottom()) {
            return Err(Error::NoAvoidingIdeal);
        }
        let avoiding: Vec<Ideal> = self
            .enumerate_ideals()?
            .into_iter()
            .filter(|i| i.iter().all(|x| !s.contains(x)))
            .collect();
        Ok(inclusion_maximal(avoiding).swap_remove(0))
    }

    fn own_mc(&self, s: &McSet) -> Result<()> {
        if s.carrier == self.fingerprint() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    /// An element of `stable` outside every ideal of `ps`. The first two ideals
    /// may be arbitrary; the rest must be prime.
    pub fn prime_avoidance(&self, stable: &ElemSet, ps: &[Ideal]) -> Result<Elem> {
        self.require_commutative()?;
        let violated = |why: String| Err(Error::HypothesisViolated(why));
        if stable.count_ones(..) == 0 {
            return violated("the set is empty".into());
        }
        for x in stable.ones() {
            for y in stable.ones() {
                if !stable.contains(self.join(x, y)) {
                    return violated(format!("not closed under join at ({x}, {y})"));
                }
                if !stable.contains(self.mul(x, y)) {
                    return violated(format!("not closed under & at ({x}, {y})"));
                }
            }
        }
        for (k, p) in ps.iter().enumerate() {
            if k >= 2 && !self.is_prime(p)? {
                return violated(format!("ideal {} is not prime", k + 1));
            }
            if stable.is_subset(p.members()) {
                return violated(format!("the set is contained in ideal {}", k + 1));
            }
        }
        stable
            .ones()
            .find(|&x| ps.iter().all(|p| !p.contains(x)))
            .ok_or_else(|| Error::LawViolated {
                law: "prime avoidance",
                detail: format!("no element of {} avoids the ideals", self.subset_labels(stable)),
            })
    }

    /// `I ∨ J = Q`. When true, `I ∧ J = I & J` is also checked.
    pub fn are_coprime(&self, i: &Ideal, j: &Ideal) -> Result<bool> {
        let coprime = self.join_ideals(i, j)? == self.whole();
        if coprime && self.meet_ideals(i, j)? != self.product_ideals(i, j)? {
            return Err(Error::LawViolated {
                law: "coprime meet is product",
                detail: format!("{} and {}", self.ideal_name(i), self.ideal_name(j)),
            });
        }
        Ok(coprime)
    }

    pub fn classify(&self, i: &Ideal) -> Result<Classification> {
        let prime = self.prime_verdict(i)?;
        let semiprime = self.semiprime_verdict(i)?;
        let primary = self.primary_verdict(i)?;
        let radical = self.radical_checked(i)?;
        let irreducible = self.irreducible_verdict(i)?;
        let strongly_irreducible = self.strongly_irreducible_verdict(i)?;
        let proper = self.is_proper(i);
        Ok(Classification {
            ideal: i.clone(),
            proper,
            maximal: proper && self.is_maximal(i)?,
            minimal_ideal: self.is_minimal_ideal(i)?,
            radical_ideal: radical == *i,
            radical,
            prime,
            semiprime,
            primary,
            irreducible,
            strongly_irreducible,
        })
    }
}

/// Every flag the library computes for one ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub ideal: Ideal,
    pub proper: bool,
    pub maximal: bool,
    pub minimal_ideal: bool,
    pub prime: Verdict,
    pub semiprime: Verdict,
    pub primary: Verdict,
    pub radical_ideal: bool,
    pub irreducible: Verdict,
    pub strongly_irreducible: Verdict,
    pub radical: Ideal,
}

/// Members not strictly containing another member; input order is kept.
pub fn inclusion_minimal(family: Vec<Ideal>) -> Vec<Ideal> {
    let keep: Vec<bool> = family
        .iter()
        .map(|i| !family.iter().any(|j| j != i && j.is_subset(i)))
        .collect();
    family.into_iter().zip(keep).filter(|(_, k)| *k).map(|(i, _)| i).collect()
}

/// Members not strictly contained in another member; input order is kept.
pub fn inclusion_maximal(family: Vec<Ideal>) -> Vec<Ideal> {
    let keep: Vec<bool> = family
        .iter()
        .map(|i| !family.iter().any(|j| j != i && i.is_subset(j)))
        .collect();
    family.into_iter().zip(keep).filter(|(_, k)| *k).map(|(i, _)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bundled, Generator};

    const BOT: Elem = 0;
    const A: Elem = 1;
    const B: Elem = 2;
    const TOP: Elem = 3;

    #[test]
    fn prime_examples() {
        let q = bundled::q4();
        assert!(q.is_prime(&q.principal(A)).unwrap());
        assert_eq!(q.prime_verdict(&q.zero_ideal()).unwrap(), Verdict::no(vec![A, B]));
        let l = bundled::l3();
        assert!(l.is_prime(&l.principal(1)).unwrap());
        assert!(!l.is_prime(&l.whole()).unwrap());
    }

    #[test]
    fn prime_forms_agree() {
        for q in [bundled::q4(), bundled::l3(), bundled::m3(), bundled::c2()] {
            for i in q.enumerate_ideals().unwrap() {
                assert_eq!(q.is_prime(&i).unwrap(), q.is_prime_idealwise(&i).unwrap());
            }
        }
    }

    #[test]
    fn semiprime_examples() {
        let l = bundled::l3();
        assert_eq!(l.semiprime_verdict(&l.zero_ideal()).unwrap(), Verdict::no(vec![1]));
        assert!(l.is_semiprime(&l.principal(1)).unwrap());
        let q = bundled::q4();
        for i in q.proper_ideals().unwrap() {
            assert!(q.is_semiprime(&i).unwrap());
        }
        assert!(!q.is_semiprime(&q.whole()).unwrap());
    }

    #[test]
    fn primary_examples() {
        let l = bundled::l3();
        let zero = l.zero_ideal();
        assert!(l.is_primary(&zero).unwrap());
        assert!(!l.is_prime(&zero).unwrap());
        assert!(l.is_p_primary(&zero, &l.principal(1)).unwrap());
        assert_eq!(l.is_p_primary(&zero, &zero), Err(Error::NotPrime));
        let q = bundled::q4();
        assert_eq!(q.primary_verdict(&q.zero_ideal()).unwrap(), Verdict::no(vec![A, B]));
    }

    #[test]
    fn radical_examples() {
        let l = bundled::l3();
        for alg in RadicalAlgorithm::ALL {
            assert_eq!(l.radical(&l.zero_ideal(), alg).unwrap(), l.principal(1));
            assert_eq!(l.radical(&l.whole(), alg).unwrap(), l.whole());
        }
        let q = bundled::q4();
        for alg in RadicalAlgorithm::ALL {
            assert_eq!(q.radical(&q.zero_ideal(), alg).unwrap(), q.zero_ideal());
        }
        assert!(!l.is_radical_ideal(&l.zero_ideal()).unwrap());
        assert!(l.is_radical_ideal(&l.principal(1)).unwrap());
    }

    #[test]
    fn radical_algorithms_agree_with_full_mcset_quantifier() {
        let instances = [
            bundled::q4(),
            bundled::l3(),
            bundled::m3(),
            Generator::Lukasiewicz(5).generate().unwrap(),
            Generator::PowerSet(3).generate().unwrap(),
        ];
        for q in instances {
            for i in q.enumerate_ideals().unwrap() {
                let r = q.radical_checked(&i).unwrap();
                assert_eq!(&q.radical_over_all_mcsets(&i).unwrap(), r.members());
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        let q = bundled::q4();
        assert_eq!(q.spectrum().unwrap(), vec![q.principal(A), q.principal(B)]);
        assert_eq!(
            q.minimal_primes_over(&q.zero_ideal()).unwrap(),
            vec![q.principal(A), q.principal(B)]
        );
        assert_eq!(q.minimal_primes_over(&q.whole()), Err(Error::NotProper));
        let l = bundled::l3();
        assert_eq!(l.spectrum().unwrap(), vec![l.principal(1)]);
        assert_eq!(
            q.minimal_prime_between(&q.zero_ideal(), &q.principal(B)).unwrap(),
            q.principal(B)
        );
    }

    #[test]
    fn maximal_and_radicals() {
        let q = bundled::q4();
        assert_eq!(q.maximal_ideals().unwrap(), vec![q.principal(A), q.principal(B)]);
        assert_eq!(q.jacobson().unwrap(), q.zero_ideal());
        assert_eq!(q.nilradical().unwrap(), q.zero_ideal());
        assert!(!q.is_local().unwrap());

        let l = bundled::l3();
        assert_eq!(l.maximal_ideals().unwrap(), vec![l.principal(1)]);
        assert!(l.is_local().unwrap());
        assert_eq!(l.jacobson().unwrap(), l.principal(1));
        assert_eq!(l.nilradical().unwrap(), l.principal(1));
        let max = l.maximal_ideals().unwrap();
        for i in l.proper_ideals().unwrap() {
            assert!(max.iter().any(|m| i.is_subset(m)));
        }
        assert_eq!(bundled::trivial().maximal_ideals(), Err(Error::Degenerate));
    }

    #[test]
    fn nilradical_is_radical_of_zero() {
        for q in [bundled::q4(), bundled::l3(), bundled::m3()] {
            let zero = q.zero_ideal();
            assert_eq!(q.nilradical().unwrap(), q.radical(&zero, RadicalAlgorithm::Powers).unwrap());
            assert!(q.nilradical().unwrap().is_subset(&q.jacobson().unwrap()));
        }
    }

    #[test]
    fn domains_and_reduced() {
        let l = bundled::l3();
        assert!(l.zero_divisors().contains(1));
        assert!(!l.is_qd());
        assert!(!l.is_reduced().unwrap());
        assert!(bundled::c2().is_qd());
        let q = bundled::q4();
        assert!(q.is_reduced().unwrap());
        assert!(!q.is_qd());
        assert_eq!(q.minimal_primes().unwrap().len(), 2);
    }

    #[test]
    fn mc_sets() {
        let q = bundled::q4();
        let top = q.mc_generated(TOP);
        assert_eq!(top.members(), &q.set_of([TOP]));
        assert_eq!(q.saturation(&top).unwrap(), top);
        assert!(q.is_saturated(&top).unwrap());
        assert!(q.complement_is_union_of_primes(&top).unwrap());
        // ↓a ∨ ↓b is the whole carrier, so the join reading fails here.
        assert!(!q.complement_is_join_of_primes(&top).unwrap());

        let l = bundled::l3();
        assert_eq!(l.mc_generated(1).members(), &l.set_of([0, 1, 2]));
        assert_eq!(q.mc_set(q.set_of([A, B])), Err(Error::NotMc));
    }

    #[test]
    fn maximal_avoiding_is_prime() {
        for q in [bundled::q4(), bundled::l3(), bundled::m3()] {
            for s in q.all_mcsets() {
                if s.contains(q.bottom()) {
                    assert_eq!(q.maximal_avoiding(&s), Err(Error::NoAvoidingIdeal));
                } else {
                    let p = q.maximal_avoiding(&s).unwrap();
                    assert!(q.is_prime(&p).unwrap(), "{s:?}");
                }
            }
        }
    }

    #[test]
    fn saturation_matches_union_of_primes() {
        for q in [bundled::q4(), bundled::l3(), bundled::m3()] {
            for s in q.all_mcsets() {
                let sat = q.saturation(&s).unwrap();
                assert!(q.is_saturated(&sat).unwrap());
                assert!(s.members().is_subset(sat.members()));
                assert_eq!(q.is_saturated(&s).unwrap(), q.complement_is_union_of_primes(&s).unwrap());
            }
        }
    }

    #[test]
    fn avoidance_examples() {
        let q = bundled::q4();
        let whole = q.full_set();
        assert_eq!(q.prime_avoidance(&whole, &[q.principal(A), q.principal(B)]).unwrap(), TOP);
        let l = bundled::l3();
        assert_eq!(l.prime_avoidance(&l.full_set(), &[l.principal(1)]).unwrap(), 2);
        assert!(matches!(
            q.prime_avoidance(q.principal(A).members(), &[q.principal(A)]),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn coprime_examples() {
        let q = bundled::q4();
        assert!(q.are_coprime(&q.principal(A), &q.principal(B)).unwrap());
        let l = bundled::l3();
        assert!(!l.are_coprime(&l.principal(1), &l.principal(1)).unwrap());
        for i in q.enumerate_ideals().unwrap() {
            assert!(q.are_coprime(&i, &q.whole()).unwrap());
        }
        assert_eq!(BOT, q.bottom());
    }
}
