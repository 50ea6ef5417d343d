//! The ideal calculus: membership tests, generation, enumeration, meet, join,
//! product, residual, annihilators, extension and contraction along
//! homomorphisms, and the quantale of ideals.
//!
//! Ideals are stored as explicit member sets. On a finite carrier every ideal
//! is the down-set of its join (its apex); that collapse is checked by the
//! verification harness rather than built into the representation.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::QuantaleHom;
use crate::quantale::{Elem, ElemSet, FiniteQuantale};

/// A nonempty down-closed, join-closed subset of a carrier.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    carrier: u64,
    members: ElemSet,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.ones()).finish()
    }
}

impl Ideal {
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

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn carrier_fingerprint(&self) -> u64 {
        self.carrier
    }
}

impl FiniteQuantale {
    fn wrap(&self, members: ElemSet) -> Ideal {
        Ideal { carrier: self.fingerprint(), members }
    }

    fn own(&self, i: &Ideal) -> Result<()> {
        if i.carrier == self.fingerprint() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    /// Nonempty, closed under binary joins and closed downward.
    pub fn is_ideal(&self, subset: &ElemSet) -> bool {
        if subset.count_ones(..) == 0 {
            return false;
        }
        let join_closed = subset
            .ones()
            .all(|x| subset.ones().all(|y| subset.contains(self.join(x, y))));
        let down_closed = subset
            .ones()
            .all(|x| self.elements().all(|l| !self.leq(l, x) || subset.contains(l)));
        join_closed && down_closed
    }

    /// Validates a member set as an ideal of this carrier.
    pub fn ideal(&self, subset: ElemSet) -> Result<Ideal> {
        if subset.len() != self.size() || !self.is_ideal(&subset) {
            return Err(Error::NotAnIdeal);
        }
        Ok(self.wrap(subset))
    }

    /// `↓a`.
    pub fn principal(&self, a: Elem) -> Ideal {
        self.wrap(self.down_set(a))
    }

    /// `⋁ members`.
    pub fn apex(&self, i: &Ideal) -> Elem {
        self.join_all(i.iter())
    }

    /// The zero ideal `{⊥}`.
    pub fn zero_ideal(&self) -> Ideal {
        self.principal(self.bottom())
    }

    /// The whole carrier.
    pub fn whole(&self) -> Ideal {
        self.wrap(self.full_set())
    }

    pub fn is_proper(&self, i: &Ideal) -> bool {
        !i.contains(self.top())
    }

    /// `⟨S⟩`: elements below some finite join of products `l & t` with `t ∈ S`.
    /// The finite joins of `Q & S` are all below the single element
    /// `⋁_{t∈S} ⋁_{l∈Q} l & t`, which is itself such a join.
    pub fn generated(&self, s: &ElemSet) -> Result<Ideal> {
        if s.count_ones(..) == 0 {
            return Err(Error::EmptyGeneratorSet);
        }
        let apex = self.join_all(s.ones().flat_map(|t| self.elements().map(move |l| self.mul(l, t))));
        Ok(self.principal(apex))
    }

    /// The ideals of a commutative carrier, one per element, in apex order.
    pub fn enumerate_ideals(&self) -> Result<Vec<Ideal>> {
        self.require_commutative()?;
        Ok(self.elements().map(|a| self.principal(a)).collect())
    }

    pub fn meet_ideals(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.own(i)?;
        self.own(j)?;
        let mut m = i.members.clone();
        m.intersect_with(&j.members);
        Ok(self.wrap(m))
    }

    /// Elements below a finite join of members of `i ∪ j`.
    pub fn join_ideals(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.own(i)?;
        self.own(j)?;
        let apex = self.join_all(i.iter().chain(j.iter()));
        Ok(self.principal(apex))
    }

    /// `I & J`, via the apex shortcut `↓(apex I & apex J)`.
    pub fn product_ideals(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.own(i)?;
        self.own(j)?;
        Ok(self.principal(self.mul(self.apex(i), self.apex(j))))
    }

    /// `(I : J) = {x | x & j ∈ I for all j ∈ J}`.
    pub fn residual(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.own(i)?;
        self.own(j)?;
        let mut r = self.empty_set();
        for x in self.elements() {
            if j.iter().all(|y| i.contains(self.mul(x, y))) {
                r.insert(x);
            }
        }
        Ok(self.wrap(r))
    }

    /// `(I : ⟨x⟩)`.
    pub fn residual_by_element(&self, i: &Ideal, x: Elem) -> Result<Ideal> {
        self.residual(i, &self.principal(x))
    }

    /// Meet of a finite family; the empty meet is the whole carrier.
    pub fn meet_family<'a>(&self, family: impl IntoIterator<Item = &'a Ideal>) -> Result<Ideal> {
        family
            .into_iter()
            .try_fold(self.whole(), |acc, i| self.meet_ideals(&acc, i))
    }

    /// Join of a finite family; the empty join is the zero ideal.
    pub fn join_family<'a>(&self, family: impl IntoIterator<Item = &'a Ideal>) -> Result<Ideal> {
        family
            .into_iter()
            .try_fold(self.zero_ideal(), |acc, i| self.join_ideals(&acc, i))
    }

    /// `I & … & I`, `n ≥ 1` factors.
    pub fn ideal_power(&self, i: &Ideal, n: usize) -> Result<Ideal> {
        self.own(i)?;
        let mut acc = i.clone();
        for _ in 1..n {
            acc = self.product_ideals(&acc, i)?;
        }
        Ok(acc)
    }

    /// `{x | x & s = ⊥ for all s ∈ S}`.
    pub fn annihilator(&self, s: &ElemSet) -> Result<Ideal> {
        if s.count_ones(..) == 0 {
            return Err(Error::EmptyGeneratorSet);
        }
        let mut a = self.empty_set();
        for x in self.elements() {
            if s.ones().all(|t| self.mul(x, t) == self.bottom()) {
                a.insert(x);
            }
        }
        Ok(self.wrap(a))
    }

    /// Ideals ordered by apex index; the canonical order for reports.
    pub fn sort_ideals(&self, ideals: &mut [Ideal]) {
        ideals.sort_by_key(|i| self.apex(i));
    }

    /// `↓label` for an ideal.
    pub fn ideal_name(&self, i: &Ideal) -> String {
        format!("↓{}", self.label(self.apex(i)))
    }

    pub fn subset_labels(&self, s: &ElemSet) -> String {
        let parts: Vec<&str> = s.ones().map(|x| self.label(x)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// `J^c = φ⁻¹(J)`.
pub fn contraction(h: &QuantaleHom, j: &Ideal) -> Result<Ideal> {
    let (src, tgt) = (h.source(), h.target());
    tgt.own(j)?;
    let mut pre = src.empty_set();
    for x in src.elements() {
        if j.contains(h.apply(x)) {
            pre.insert(x);
        }
    }
    if pre.count_ones(..) == 0 {
        return Err(Error::EmptyContraction);
    }
    Ok(src.wrap(pre))
}

/// `I^e = ⟨φ(I)⟩`.
pub fn extension(h: &QuantaleHom, i: &Ideal) -> Result<Ideal> {
    h.source().own(i)?;
    let image = h.target().set_of(i.iter().map(|x| h.apply(x)));
    h.target().generated(&image)
}

/// The quantale of ideals of a base carrier, ordered by inclusion with ideal
/// product as multiplication.
#[derive(Debug, Clone)]
pub struct IdealQuantale {
    quantale: FiniteQuantale,
    base: Arc<FiniteQuantale>,
    ideals: Vec<Ideal>,
}

impl IdealQuantale {
    pub fn quantale(&self) -> &FiniteQuantale {
        &self.quantale
    }

    pub fn into_quantale(self) -> FiniteQuantale {
        self.quantale
    }

    pub fn base(&self) -> &FiniteQuantale {
        &self.base
    }

    /// Element `k` of the ideal quantale is `ideals()[k]`.
    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn element_of(&self, i: &Ideal) -> Option<Elem> {
        self.ideals.iter().position(|k| k == i)
    }

    /// The map `a ↦ ↓a` from the base into the ideal quantale.
    pub fn principal_embedding(&self) -> Result<QuantaleHom> {
        let map = self
            .base
            .elements()
            .map(|a| self.element_of(&self.base.principal(a)).expect("principal ideals are enumerated"))
            .collect();
        QuantaleHom::new("down", self.base.clone(), Arc::new(self.quantale.clone()), map)
    }
}

pub fn ideal_quantale(q: &FiniteQuantale) -> Result<IdealQuantale> {
    let ideals = q.enumerate_ideals()?;
    let m = ideals.len();
    let labels = ideals.iter().map(|i| q.ideal_name(i)).collect();
    let mut order = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a != b && ideals[a].is_subset(&ideals[b]) {
                order.push((a, b));
            }
        }
    }
    let index_of = |k: &Ideal| ideals.iter().position(|i| i == k).expect("closed under product");
    let mut mul = Vec::with_capacity(m);
    for a in 0..m {
        let row = (0..m)
            .map(|b| q.product_ideals(&ideals[a], &ideals[b]).map(|p| index_of(&p)))
            .collect::<Result<Vec<_>>>()?;
        mul.push(row);
    }
    let quantale = FiniteQuantale::build(format!("ideals({})", q.name()), labels, &order, mul)?;
    Ok(IdealQuantale { quantale, base: Arc::new(q.clone()), ideals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::bundled;

    const BOT: Elem = 0;
    const A: Elem = 1;
    const B: Elem = 2;
    const TOP: Elem = 3;

    #[test]
    fn is_ideal_examples() {
        let q = bundled::q4();
        assert!(q.is_ideal(&q.set_of([BOT, A])));
        assert!(!q.is_ideal(&q.set_of([BOT, A, B])));
        assert!(q.is_ideal(&q.set_of([BOT])));
        assert!(!q.is_ideal(&q.empty_set()));
        assert!(!q.is_ideal(&q.set_of([A])));
    }

    #[test]
    fn principal_and_apex() {
        let q = bundled::q4();
        assert_eq!(q.principal(A).members(), &q.set_of([BOT, A]));
        assert_eq!(q.principal(TOP), q.whole());
        let l = bundled::l3();
        let i = l.ideal(l.set_of([0, 1])).unwrap();
        assert_eq!(l.apex(&i), 1);
        for a in q.elements() {
            assert_eq!(q.apex(&q.principal(a)), a);
        }
    }

    #[test]
    fn generated_examples() {
        let q = bundled::q4();
        assert_eq!(q.generated(&q.set_of([A, B])).unwrap(), q.whole());
        assert_eq!(q.generated(&q.set_of([BOT])).unwrap(), q.zero_ideal());
        assert_eq!(q.generated(&q.empty_set()), Err(Error::EmptyGeneratorSet));
        let l = bundled::l3();
        assert_eq!(l.generated(&l.set_of([1])).unwrap().members(), &l.set_of([0, 1]));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(bundled::q4().enumerate_ideals().unwrap().len(), 4);
        assert_eq!(bundled::l3().enumerate_ideals().unwrap().len(), 3);
        assert_eq!(bundled::c2().enumerate_ideals().unwrap().len(), 2);
        let nc = bundled::q4().with_product(A, B, TOP);
        assert!(matches!(nc.enumerate_ideals(), Err(Error::NotCommutative(..))));
    }

    #[test]
    fn binary_operation_examples() {
        let q = bundled::q4();
        let (pa, pb, zero) = (q.principal(A), q.principal(B), q.zero_ideal());
        assert_eq!(q.product_ideals(&pa, &pb).unwrap(), zero);
        assert_eq!(q.residual(&zero, &pa).unwrap(), pb);
        for i in q.enumerate_ideals().unwrap() {
            assert_eq!(q.residual(&i, &q.whole()).unwrap(), i);
            assert_eq!(q.join_ideals(&i, &zero).unwrap(), i);
        }
        assert_eq!(q.meet_ideals(&pa, &pb).unwrap(), zero);
        assert_eq!(q.join_ideals(&pa, &pb).unwrap(), q.whole());
    }

    #[test]
    fn carrier_mismatch() {
        let q = bundled::q4();
        let l = bundled::l3();
        assert_eq!(q.meet_ideals(&q.whole(), &l.whole()), Err(Error::CarrierMismatch));
        assert_eq!(l.residual(&q.whole(), &l.whole()), Err(Error::CarrierMismatch));
    }

    #[test]
    fn residual_is_the_largest_ideal_with_product_below() {
        for q in [bundled::q4(), bundled::l3(), bundled::m3()] {
            let ideals = q.enumerate_ideals().unwrap();
            for i in &ideals {
                for j in &ideals {
                    let r = q.residual(i, j).unwrap();
                    for k in &ideals {
                        let below = q.product_ideals(k, j).unwrap().is_subset(i);
                        assert_eq!(below, k.is_subset(&r));
                    }
                }
            }
        }
    }

    #[test]
    fn annihilator_examples() {
        let q = bundled::q4();
        assert_eq!(q.annihilator(&q.set_of([A])).unwrap(), q.principal(B));
        assert_eq!(q.annihilator(&q.set_of([BOT])).unwrap(), q.whole());
        let l = bundled::l3();
        assert_eq!(l.annihilator(&l.set_of([2])).unwrap(), l.zero_ideal());
        // Ann(S) = (0 : ⟨S⟩)
        for s in [q.set_of([A]), q.set_of([A, B]), q.set_of([TOP])] {
            let via_residual = q.residual(&q.zero_ideal(), &q.generated(&s).unwrap()).unwrap();
            assert_eq!(q.annihilator(&s).unwrap(), via_residual);
        }
    }

    #[test]
    fn ideal_quantale_of_small_instances() {
        for q in [bundled::q4(), bundled::l3(), bundled::trivial()] {
            let iq = ideal_quantale(&q).unwrap();
            assert_eq!(iq.quantale().size(), q.size());
            assert!(iq.quantale().check_axioms().all_ok());
            assert!(iq.principal_embedding().unwrap().is_isomorphism());
        }
    }

    #[test]
    fn extension_and_contraction_along_q4_to_c2() {
        let q = Arc::new(bundled::q4());
        let c = Arc::new(bundled::c2());
        // a -> top, b -> bot
        let h = QuantaleHom::new("h", q.clone(), c.clone(), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(contraction(&h, &c.zero_ideal()).unwrap(), q.principal(B));
        assert_eq!(extension(&h, &q.principal(A)).unwrap(), c.whole());

        let id = QuantaleHom::identity(q.clone());
        for i in q.enumerate_ideals().unwrap() {
            assert_eq!(extension(&id, &i).unwrap(), i);
            assert_eq!(contraction(&id, &i).unwrap(), i);
        }
    }

    #[test]
    fn contraction_along_a_map_missing_bottom_is_empty() {
        let q = Arc::new(bundled::q4());
        let c = Arc::new(bundled::c2());
        let constant_top = QuantaleHom::new("k", q, c.clone(), vec![1; 4]).unwrap();
        assert_eq!(contraction(&constant_top, &c.zero_ideal()), Err(Error::EmptyContraction));
    }
}
