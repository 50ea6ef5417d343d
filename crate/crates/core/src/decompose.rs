//! Irreducible and strongly irreducible ideals, primary and irreducible
//! decompositions, the first uniqueness theorem and arithmetic carriers.

use crate::classify::{inclusion_minimal, RadicalAlgorithm, Verdict};
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::quantale::{Elem, FiniteQuantale};

/// Carriers up to this size get full enumeration of minimal decompositions.
pub const EXHAUSTIVE_DECOMPOSITION_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionKind {
    Primary,
    Irreducible,
}

impl DecompositionKind {
    pub fn tag(self) -> &'static str {
        match self {
            DecompositionKind::Primary => "primary",
            DecompositionKind::Irreducible => "irreducible",
        }
    }
}

impl std::str::FromStr for DecompositionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "primary" => Ok(DecompositionKind::Primary),
            "irreducible" => Ok(DecompositionKind::Irreducible),
            _ => Err(format!("unknown decomposition kind `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub target: Ideal,
    pub components: Vec<Ideal>,
    pub kind: DecompositionKind,
    /// Radicals of the components, in the same order. Empty for irreducible
    /// decompositions.
    pub radicals: Vec<Ideal>,
    pub minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessReport {
    pub target: Ideal,
    pub associated_primes: Vec<Ideal>,
    pub colon_primes: Vec<Ideal>,
    pub isolated: Vec<Ideal>,
    pub embedded: Vec<Ideal>,
    /// Each isolated component equals `{a | a & b ∈ I for some b ∉ P}` and
    /// every minimal decomposition found has the same isolated components.
    pub isolated_components_match: bool,
    /// Number of minimal decompositions compared; 1 when enumeration is skipped.
    pub decompositions_compared: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticReport {
    pub arithmetic: bool,
    /// `I ∧ (J ∨ K) ≠ (I ∧ J) ∨ (I ∧ K)` when the ideal lattice is not distributive.
    pub distributivity_witness: Option<[Ideal; 3]>,
    pub irreducible: Vec<Ideal>,
    pub strongly_irreducible: Vec<Ideal>,
    /// Ideals that differ from the meet of the strongly irreducible ideals above them.
    pub not_meet_of_strong: Vec<Ideal>,
    pub consistent: bool,
}

impl FiniteQuantale {
    /// `J ∧ K = I ⇒ J = I or K = I`, over all ideal pairs.
    pub fn irreducible_verdict(&self, i: &Ideal) -> Result<Verdict> {
        let ideals = self.enumerate_ideals()?;
        for (a, j) in ideals.iter().enumerate() {
            for k in &ideals[a..] {
                if self.meet_ideals(j, k)? == *i && j != i && k != i {
                    return Ok(Verdict::no(vec![self.apex(j), self.apex(k)]));
                }
            }
        }
        Ok(Verdict::yes())
    }

    pub fn is_irreducible(&self, i: &Ideal) -> Result<bool> {
        Ok(self.irreducible_verdict(i)?.holds)
    }

    /// `J ∧ K ⊆ I ⇒ J ⊆ I or K ⊆ I`, over all ideal pairs. The element-wise
    /// form `⟨a⟩ ∧ ⟨b⟩ ⊆ I ⇒ a ∈ I or b ∈ I` is computed too and must agree.
    pub fn strongly_irreducible_verdict(&self, i: &Ideal) -> Result<Verdict> {
        let ideals = self.enumerate_ideals()?;
        let mut idealwise = Verdict::yes();
        'scan: for (a, j) in ideals.iter().enumerate() {
            for k in &ideals[a..] {
                if self.meet_ideals(j, k)?.is_subset(i) && !j.is_subset(i) && !k.is_subset(i) {
                    idealwise = Verdict::no(vec![self.apex(j), self.apex(k)]);
                    break 'scan;
                }
            }
        }
        if idealwise.holds != self.is_strongly_irreducible_elementwise(i)? {
            return Err(Error::LawViolated {
                law: "strong irreducibility forms agree",
                detail: self.ideal_name(i),
            });
        }
        Ok(idealwise)
    }

    pub fn is_strongly_irreducible_elementwise(&self, i: &Ideal) -> Result<bool> {
        self.require_commutative()?;
        for a in self.elements() {
            for b in a..self.size() {
                let m = self.meet_ideals(&self.principal(a), &self.principal(b))?;
                if m.is_subset(i) && !i.contains(a) && !i.contains(b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_strongly_irreducible(&self, i: &Ideal) -> Result<bool> {
        Ok(self.strongly_irreducible_verdict(i)?.holds)
    }

    fn candidates_over(&self, i: &Ideal, kind: DecompositionKind) -> Result<Vec<Ideal>> {
        let mut out = Vec::new();
        for j in self.proper_ideals()? {
            if !i.is_subset(&j) {
                continue;
            }
            let keep = match kind {
                DecompositionKind::Primary => self.is_primary(&j)?,
                DecompositionKind::Irreducible => self.is_irreducible(&j)?,
            };
            if keep {
                out.push(j);
            }
        }
        Ok(out)
    }

    /// Drops components whose removal keeps the meet, trying the smallest first.
    fn irredundant(&self, target: &Ideal, mut components: Vec<Ideal>) -> Result<Vec<Ideal>> {
        components.sort_by_key(|c| (c.len(), self.apex(c)));
        let mut k = 0;
        while k < components.len() {
            let rest: Vec<&Ideal> = components.iter().enumerate().filter(|(x, _)| *x != k).map(|(_, c)| c).collect();
            if !rest.is_empty() && self.meet_family(rest)? == *target {
                components.remove(k);
            } else {
                k += 1;
            }
        }
        components.sort_by_key(|c| self.apex(c));
        Ok(components)
    }

    pub fn irreducible_decomposition(&self, i: &Ideal) -> Result<Decomposition> {
        self.require_commutative()?;
        if !self.is_proper(i) {
            return Err(Error::NotProper);
        }
        let candidates = self.candidates_over(i, DecompositionKind::Irreducible)?;
        let gap = self.meet_family(&candidates)?;
        if gap != *i {
            return Err(Error::LawViolated {
                law: "irreducible decompositions exist",
                detail: format!("{} is not a meet of irreducibles", self.ideal_name(i)),
            });
        }
        let components = self.irredundant(i, candidates)?;
        Ok(Decomposition {
            target: i.clone(),
            components,
            kind: DecompositionKind::Irreducible,
            radicals: Vec::new(),
            minimal: true,
        })
    }

    pub fn primary_decomposition(&self, i: &Ideal) -> Result<Decomposition> {
        self.require_commutative()?;
        if !self.is_proper(i) {
            return Err(Error::NotProper);
        }
        let candidates = self.candidates_over(i, DecompositionKind::Primary)?;
        let gap = self.meet_family(&candidates)?;
        if gap != *i {
            return Err(Error::NotDecomposable { gap });
        }
        let components = self.irredundant(i, candidates)?;
        let radicals = self.radicals_of(&components)?;
        self.minimize(&Decomposition {
            target: i.clone(),
            components,
            kind: DecompositionKind::Primary,
            radicals,
            minimal: false,
        })
    }

    fn radicals_of(&self, components: &[Ideal]) -> Result<Vec<Ideal>> {
        components.iter().map(|c| self.radical(c, RadicalAlgorithm::Powers)).collect()
    }

    /// Merges components sharing a radical, then drops redundant ones.
    pub fn minimize(&self, d: &Decomposition) -> Result<Decomposition> {
        if d.kind != DecompositionKind::Primary {
            return Err(Error::InvalidDecomposition("only primary decompositions are minimized".into()));
        }
        if d.components.is_empty() || self.meet_family(&d.components)? != d.target {
            return Err(Error::InvalidDecomposition("components do not meet in the target".into()));
        }
        let mut groups: Vec<(Ideal, Ideal)> = Vec::new();
        for c in &d.components {
            if !self.is_primary(c)? {
                return Err(Error::InvalidDecomposition(format!("{} is not primary", self.ideal_name(c))));
            }
            let r = self.radical(c, RadicalAlgorithm::Powers)?;
            match groups.iter_mut().find(|(p, _)| *p == r) {
                Some((_, acc)) => *acc = self.meet_ideals(acc, c)?,
                None => groups.push((r, c.clone())),
            }
        }
        for (p, merged) in &groups {
            if !self.is_p_primary(merged, p)? {
                return Err(Error::LawViolated {
                    law: "meet of P-primary ideals is P-primary",
                    detail: format!("{} over {}", self.ideal_name(merged), self.ideal_name(p)),
                });
            }
        }
        let merged: Vec<Ideal> = groups.into_iter().map(|(_, c)| c).collect();
        let components = self.irredundant(&d.target, merged)?;
        let radicals = self.radicals_of(&components)?;
        Ok(Decomposition {
            target: d.target.clone(),
            components,
            kind: DecompositionKind::Primary,
            radicals,
            minimal: true,
        })
    }

    /// Distinct radicals and no component containing the meet of the others.
    pub fn is_minimal_decomposition(&self, d: &Decomposition) -> Result<bool> {
        let radicals = self.radicals_of(&d.components)?;
        for (a, r) in radicals.iter().enumerate() {
            if radicals[..a].contains(r) {
                return Ok(false);
            }
        }
        for k in 0..d.components.len() {
            let others: Vec<&Ideal> = d.components.iter().enumerate().filter(|(x, _)| *x != k).map(|(_, c)| c).collect();
            if !others.is_empty() && self.meet_family(others)?.is_subset(&d.components[k]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every minimal decomposition of the given kind, by subset search over
    /// the candidates. Carriers above [`EXHAUSTIVE_DECOMPOSITION_LIMIT`] yield
    /// `None`.
    pub fn all_minimal_decompositions(
        &self,
        i: &Ideal,
        kind: DecompositionKind,
    ) -> Result<Option<Vec<Decomposition>>> {
        if self.size() > EXHAUSTIVE_DECOMPOSITION_LIMIT {
            return Ok(None);
        }
        if !self.is_proper(i) {
            return Err(Error::NotProper);
        }
        let candidates = self.candidates_over(i, kind)?;
        let mut out = Vec::new();
        for mask in 1u32..(1 << candidates.len()) {
            let components: Vec<Ideal> = candidates
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, c)| c.clone())
                .collect();
            if self.meet_family(&components)? != *i {
                continue;
            }
            let radicals = match kind {
                DecompositionKind::Primary => self.radicals_of(&components)?,
                DecompositionKind::Irreducible => Vec::new(),
            };
            let d = Decomposition { target: i.clone(), components, kind, radicals, minimal: true };
            let minimal = match kind {
                DecompositionKind::Primary => self.is_minimal_decomposition(&d)?,
                DecompositionKind::Irreducible => self.irredundant(i, d.components.clone())?.len() == d.components.len(),
            };
            if minimal {
                out.push(d);
            }
        }
        Ok(Some(out))
    }

    pub fn uniqueness_report(&self, i: &Ideal) -> Result<UniquenessReport> {
        let d = self.primary_decomposition(i)?;
        let mut associated = d.radicals.clone();
        self.sort_ideals(&mut associated);

        let mut colon = Vec::new();
        for x in self.elements() {
            let r = self.radical(&self.residual_by_element(i, x)?, RadicalAlgorithm::Powers)?;
            if self.is_prime(&r)? && !colon.contains(&r) {
                colon.push(r);
            }
        }
        self.sort_ideals(&mut colon);

        let isolated = inclusion_minimal(associated.clone());
        let embedded: Vec<Ideal> = associated.iter().filter(|p| !isolated.contains(p)).cloned().collect();

        let isolated_parts = |d: &Decomposition| -> Vec<(Ideal, Ideal)> {
            d.radicals
                .iter()
                .zip(&d.components)
                .filter(|(r, _)| isolated.contains(r))
                .map(|(r, c)| (r.clone(), c.clone()))
                .collect::<Vec<_>>()
        };
        let reference = {
            let mut parts = isolated_parts(&d);
            parts.sort_by_key(|(r, _)| self.apex(r));
            parts
        };
        let mut matches = true;
        for (p, component) in &reference {
            let mut formula = self.empty_set();
            formula.extend(self.elements().filter(|&a| {
                self.elements().any(|b| !p.contains(b) && i.contains(self.mul(a, b)))
            }));
            matches &= formula == *component.members();
        }
        let mut compared = 1;
        if let Some(all) = self.all_minimal_decompositions(i, DecompositionKind::Primary)? {
            compared = all.len();
            for other in &all {
                let mut parts = isolated_parts(other);
                parts.sort_by_key(|(r, _)| self.apex(r));
                matches &= parts == reference;
            }
        }
        Ok(UniquenessReport {
            target: i.clone(),
            associated_primes: associated,
            colon_primes: colon,
            isolated,
            embedded,
            isolated_components_match: matches,
            decompositions_compared: compared,
        })
    }

    /// `(P′ : x)`, checked against the three cases: `x ∈ P′` gives the whole
    /// carrier, `x ∉ P′` gives a `P`-primary ideal, `x ∉ P` gives `P′` back.
    pub fn quotient_by_element(&self, p_primary: &Ideal, x: Elem) -> Result<Ideal> {
        if !self.is_primary(p_primary)? {
            return Err(Error::NotPrimary);
        }
        let p = self.radical(p_primary, RadicalAlgorithm::Powers)?;
        let q = self.residual_by_element(p_primary, x)?;
        let fail = |case: &str| Error::LawViolated {
            law: "quotient of a primary ideal by an element",
            detail: format!("case {case} at x = {}", self.label(x)),
        };
        if p_primary.contains(x) {
            if q != self.whole() {
                return Err(fail("x in P'"));
            }
        } else if !self.is_p_primary(&q, &p)? {
            return Err(fail("x not in P'"));
        }
        if !p.contains(x) && q != *p_primary {
            return Err(fail("x not in P"));
        }
        Ok(q)
    }

    /// First triple of ideals breaking distributivity of the ideal lattice.
    pub fn distributivity_witness(&self) -> Result<Option<[Ideal; 3]>> {
        let ideals = self.enumerate_ideals()?;
        for i in &ideals {
            for j in &ideals {
                for k in &ideals {
                    let lhs = self.meet_ideals(i, &self.join_ideals(j, k)?)?;
                    let rhs = self.join_ideals(&self.meet_ideals(i, j)?, &self.meet_ideals(i, k)?)?;
                    if lhs != rhs {
                        return Ok(Some([i.clone(), j.clone(), k.clone()]));
                    }
                }
            }
        }
        Ok(None)
    }

    /// The ideal lattice is distributive.
    pub fn is_arithmetic(&self) -> Result<bool> {
        Ok(self.distributivity_witness()?.is_none())
    }

    pub fn arithmetic_equivalence_check(&self) -> Result<ArithmeticReport> {
        let witness = self.distributivity_witness()?;
        let arithmetic = witness.is_none();
        let ideals = self.enumerate_ideals()?;
        let mut irreducible = Vec::new();
        let mut strong = Vec::new();
        for i in &ideals {
            if self.is_irreducible(i)? {
                irreducible.push(i.clone());
            }
            if self.is_strongly_irreducible(i)? {
                strong.push(i.clone());
            }
        }
        let mut not_meet = Vec::new();
        for i in &ideals {
            let above: Vec<&Ideal> = strong.iter().filter(|s| i.is_subset(s)).collect();
            if self.meet_family(above)? != *i {
                not_meet.push(i.clone());
            }
        }
        let irreducible_not_strong = irreducible.iter().any(|i| !strong.contains(i));
        // On a finite lattice distributivity holds exactly when every meet-irreducible
        // element is meet-prime, so both directions are checked.
        let consistent = arithmetic != irreducible_not_strong && (!arithmetic || not_meet.is_empty());
        Ok(ArithmeticReport {
            arithmetic,
            distributivity_witness: witness,
            irreducible,
            strongly_irreducible: strong,
            not_meet_of_strong: not_meet,
            consistent,
        })
    }

    /// A proper strongly irreducible ideal containing `i`, minimal among such;
    /// lowest apex on ties.
    pub fn minimal_strongly_irreducible_over(&self, i: &Ideal) -> Result<Ideal> {
        self.require_commutative()?;
        if !self.is_proper(i) {
            return Err(Error::NotProper);
        }
        let mut over = Vec::new();
        for j in self.proper_ideals()? {
            if i.is_subset(&j) && self.is_strongly_irreducible(&j)? {
                over.push(j);
            }
        }
        inclusion_minimal(over).into_iter().next().ok_or_else(|| Error::LawViolated {
            law: "proper ideals lie below a strongly irreducible ideal",
            detail: self.ideal_name(i),
        })
    }

    /// An irreducible ideal containing `i` and missing `x`, if any.
    pub fn irreducible_avoiding(&self, i: &Ideal, x: Elem) -> Result<Option<Ideal>> {
        for j in self.candidates_over(i, DecompositionKind::Irreducible)? {
            if !j.contains(x) {
                return Ok(Some(j));
            }
        }
        Ok(None)
    }

    pub fn totally_ordered_ideals(&self) -> Result<bool> {
        let ideals = self.enumerate_ideals()?;
        Ok(ideals
            .iter()
            .all(|i| ideals.iter().all(|j| i.is_subset(j) || j.is_subset(i))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::bundled;

    #[test]
    fn irreducible_examples() {
        let q = bundled::q4();
        let zero = q.zero_ideal();
        assert_eq!(q.irreducible_verdict(&zero).unwrap(), Verdict::no(vec![1, 2]));
        assert_eq!(q.strongly_irreducible_verdict(&zero).unwrap(), Verdict::no(vec![1, 2]));
        assert!(q.is_irreducible(&q.principal(1)).unwrap());
        assert!(q.is_strongly_irreducible(&q.principal(1)).unwrap());
        let l = bundled::l3();
        assert!(l.is_irreducible(&l.zero_ideal()).unwrap());
        assert!(l.is_strongly_irreducible(&l.zero_ideal()).unwrap());
    }

    #[test]
    fn m3_irreducibles() {
        let m = bundled::m3();
        let irr: Vec<Elem> = m
            .enumerate_ideals()
            .unwrap()
            .iter()
            .filter(|i| m.is_irreducible(i).unwrap())
            .map(|i| m.apex(i))
            .collect();
        let strong: Vec<Elem> = m
            .enumerate_ideals()
            .unwrap()
            .iter()
            .filter(|i| m.is_strongly_irreducible(i).unwrap())
            .map(|i| m.apex(i))
            .collect();
        assert_eq!(irr, vec![1, 2, 3, 4, 5]);
        assert_eq!(strong, vec![4, 5]);
    }

    #[test]
    fn irreducible_decomposition_examples() {
        let q = bundled::q4();
        let d = q.irreducible_decomposition(&q.zero_ideal()).unwrap();
        assert_eq!(d.components, vec![q.principal(1), q.principal(2)]);
        let l = bundled::l3();
        let d = l.irreducible_decomposition(&l.zero_ideal()).unwrap();
        assert_eq!(d.components, vec![l.zero_ideal()]);
        for m in l.maximal_ideals().unwrap() {
            assert_eq!(l.irreducible_decomposition(&m).unwrap().components, vec![m]);
        }
        assert_eq!(l.irreducible_decomposition(&l.whole()), Err(Error::NotProper));
    }

    #[test]
    fn primary_decomposition_examples() {
        let q = bundled::q4();
        let d = q.primary_decomposition(&q.zero_ideal()).unwrap();
        assert_eq!(d.components, vec![q.principal(1), q.principal(2)]);
        assert_eq!(d.radicals, d.components);
        assert!(d.minimal);

        let l = bundled::l3();
        let d = l.primary_decomposition(&l.zero_ideal()).unwrap();
        assert_eq!(d.components, vec![l.zero_ideal()]);
        assert_eq!(d.radicals, vec![l.principal(1)]);
        let d = l.primary_decomposition(&l.principal(1)).unwrap();
        assert_eq!(d.components, vec![l.principal(1)]);
    }

    #[test]
    fn m3_zero_is_primary() {
        let m = bundled::m3();
        let d = m.primary_decomposition(&m.zero_ideal()).unwrap();
        assert_eq!(d.components, vec![m.zero_ideal()]);
        assert_eq!(d.radicals, vec![m.principal(4)]);
    }

    #[test]
    fn minimize_examples() {
        let q = bundled::q4();
        let (a, b) = (q.principal(1), q.principal(2));
        let d = Decomposition {
            target: q.zero_ideal(),
            components: vec![a.clone(), b.clone(), a.clone()],
            kind: DecompositionKind::Primary,
            radicals: Vec::new(),
            minimal: false,
        };
        let m = q.minimize(&d).unwrap();
        assert_eq!(m.components, vec![a, b]);
        assert_eq!(q.minimize(&m).unwrap(), m);

        let l = bundled::l3();
        let d = Decomposition {
            target: l.zero_ideal(),
            components: vec![l.zero_ideal(), l.principal(1)],
            kind: DecompositionKind::Primary,
            radicals: Vec::new(),
            minimal: false,
        };
        assert_eq!(l.minimize(&d).unwrap().components, vec![l.zero_ideal()]);
    }

    #[test]
    fn uniqueness_examples() {
        let q = bundled::q4();
        let u = q.uniqueness_report(&q.zero_ideal()).unwrap();
        assert_eq!(u.associated_primes, vec![q.principal(1), q.principal(2)]);
        assert_eq!(u.colon_primes, u.associated_primes);
        assert_eq!(u.isolated, u.associated_primes);
        assert!(u.embedded.is_empty());
        assert!(u.isolated_components_match);

        let l = bundled::l3();
        let u = l.uniqueness_report(&l.zero_ideal()).unwrap();
        assert_eq!(u.associated_primes, vec![l.principal(1)]);
        assert_eq!(u.isolated, vec![l.principal(1)]);

        for p in q.spectrum().unwrap() {
            assert_eq!(q.uniqueness_report(&p).unwrap().associated_primes, vec![p]);
        }
    }

    #[test]
    fn quotient_examples() {
        let l = bundled::l3();
        let z = l.zero_ideal();
        assert_eq!(l.quotient_by_element(&z, 0).unwrap(), l.whole());
        assert_eq!(l.quotient_by_element(&z, 2).unwrap(), z);
        assert_eq!(l.quotient_by_element(&z, 1).unwrap(), l.principal(1));
        let q = bundled::q4();
        assert_eq!(q.quotient_by_element(&q.zero_ideal(), 1), Err(Error::NotPrimary));
    }

    #[test]
    fn arithmetic_examples() {
        let q = bundled::q4();
        let r = q.arithmetic_equivalence_check().unwrap();
        assert!(r.arithmetic && r.consistent);
        assert_eq!(r.irreducible, r.strongly_irreducible);
        assert!(!r.irreducible.contains(&q.zero_ideal()));
        assert!(bundled::l3().is_arithmetic().unwrap());
        let m = bundled::m3();
        let r = m.arithmetic_equivalence_check().unwrap();
        assert!(!r.arithmetic && r.consistent);
        assert!(r.distributivity_witness.is_some());
    }

    #[test]
    fn minimal_strongly_irreducible_examples() {
        let q = bundled::q4();
        assert_eq!(q.minimal_strongly_irreducible_over(&q.zero_ideal()).unwrap(), q.principal(1));
        let l = bundled::l3();
        assert_eq!(l.minimal_strongly_irreducible_over(&l.zero_ideal()).unwrap(), l.zero_ideal());
        for m in q.maximal_ideals().unwrap() {
            assert_eq!(q.minimal_strongly_irreducible_over(&m).unwrap(), m);
        }
    }

    #[test]
    fn total_order_examples() {
        assert!(bundled::l3().totally_ordered_ideals().unwrap());
        assert!(!bundled::q4().totally_ordered_ideals().unwrap());
        assert!(bundled::trivial().totally_ordered_ideals().unwrap());
    }
}
