//! Maps between carriers preserving order, binary joins, binary meets and `&`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quantale::{Elem, FiniteQuantale};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomCondition {
    Order,
    Join,
    Meet,
    Mul,
}

impl HomCondition {
    pub fn tag(self) -> &'static str {
        match self {
            HomCondition::Order => "order",
            HomCondition::Join => "join",
            HomCondition::Meet => "meet",
            HomCondition::Mul => "mul",
        }
    }
}

/// First failing condition found by [`check_hom`], with its witness pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomViolation {
    pub condition: HomCondition,
    pub x: Elem,
    pub y: Elem,
}

impl fmt::Display for HomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ({}, {})", self.condition.tag(), self.x, self.y)
    }
}

/// Checks the four homomorphism conditions over all pairs of the source,
/// one condition at a time.
///
/// Panics if `map` is not a total function into the target.
pub fn check_hom(source: &FiniteQuantale, target: &FiniteQuantale, map: &[Elem]) -> Result<(), HomViolation> {
    assert_eq!(map.len(), source.size(), "map must be total on the source");
    assert!(map.iter().all(|&y| y < target.size()), "map must land in the target");
    let f = |x: Elem| map[x];
    let pairs = || source.elements().flat_map(|x| source.elements().map(move |y| (x, y)));
    let conditions: [(HomCondition, &dyn Fn(Elem, Elem) -> bool); 4] = [
        (HomCondition::Order, &|x, y| !source.leq(x, y) || target.leq(f(x), f(y))),
        (HomCondition::Join, &|x, y| f(source.join(x, y)) == target.join(f(x), f(y))),
        (HomCondition::Meet, &|x, y| f(source.meet(x, y)) == target.meet(f(x), f(y))),
        (HomCondition::Mul, &|x, y| f(source.mul(x, y)) == target.mul(f(x), f(y))),
    ];
    for (condition, holds) in conditions {
        if let Some((x, y)) = pairs().find(|&(x, y)| !holds(x, y)) {
            return Err(HomViolation { condition, x, y });
        }
    }
    Ok(())
}

/// A checked quantale homomorphism.
#[derive(Clone)]
pub struct QuantaleHom {
    name: String,
    source: Arc<FiniteQuantale>,
    target: Arc<FiniteQuantale>,
    map: Vec<Elem>,
}

impl fmt::Debug for QuantaleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuantaleHom")
            .field("name", &self.name)
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .field("map", &self.map)
            .finish()
    }
}

impl QuantaleHom {
    pub fn new(
        name: impl Into<String>,
        source: Arc<FiniteQuantale>,
        target: Arc<FiniteQuantale>,
        map: Vec<Elem>,
    ) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::HomArity { expected: source.size(), found: map.len() });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.size()) {
            return Err(Error::IndexOutOfRange { index: bad, size: target.size() });
        }
        check_hom(&source, &target, &map).map_err(|v| Error::HomInvalid {
            condition: v.condition.tag(),
            x: v.x,
            y: v.y,
        })?;
        Ok(QuantaleHom { name: name.into(), source, target, map })
    }

    pub fn identity(q: Arc<FiniteQuantale>) -> Self {
        let map = q.elements().collect();
        QuantaleHom { name: "id".into(), source: q.clone(), target: q, map }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &QuantaleHom) -> Result<Self> {
        if next.source.fingerprint() != self.target.fingerprint() {
            return Err(Error::CarrierMismatch);
        }
        let map = self.map.iter().map(|&y| next.map[y]).collect();
        Self::new(
            format!("{}.{}", next.name, self.name),
            self.source.clone(),
            next.target.clone(),
            map,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &FiniteQuantale {
        &self.source
    }

    pub fn target(&self) -> &FiniteQuantale {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<FiniteQuantale> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<FiniteQuantale> {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn preserves_bottom(&self) -> bool {
        self.map[self.source.bottom()] == self.target.bottom()
    }

    /// Bijective and order-reflecting, so the inverse is a homomorphism too.
    pub fn is_isomorphism(&self) -> bool {
        let n = self.source.size();
        if n != self.target.size() {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in &self.map {
            if std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        self.source.elements().all(|x| {
            self.source
                .elements()
                .all(|y| self.source.leq(x, y) == self.target.leq(self.map[x], self.map[y]))
        })
    }

    /// All homomorphisms into the two-element chain that send bottom to
    /// bottom, one per prime ideal whose complement is closed under meets.
    pub fn to_two_chain(q: Arc<FiniteQuantale>) -> Vec<QuantaleHom> {
        let c2 = Arc::new(crate::generators::bundled::c2());
        let mut out = Vec::new();
        for p in q.elements() {
            if p == q.top() {
                continue;
            }
            let map: Vec<Elem> = q.elements().map(|x| if q.leq(x, p) { 0 } else { 1 }).collect();
            if check_hom(&q, &c2, &map).is_ok() {
                let name = format!("chi_{}", q.label(p));
                out.push(QuantaleHom { name, source: q.clone(), target: c2.clone(), map });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::bundled;

    #[test]
    fn identity_is_a_hom() {
        let q = bundled::q4();
        let map: Vec<_> = q.elements().collect();
        assert_eq!(check_hom(&q, &q, &map), Ok(()));
    }

    #[test]
    fn q4_onto_c2_by_brute_force() {
        let q = bundled::q4();
        let c = bundled::c2();
        // bot, b -> bot; a, top -> top
        let map = [0, 1, 0, 1];
        // Oracle: evaluate all 16 pairs and 4 conditions directly.
        for x in 0..4 {
            for y in 0..4 {
                if q.leq(x, y) {
                    assert!(c.leq(map[x], map[y]));
                }
                assert_eq!(map[q.join(x, y)], c.join(map[x], map[y]));
                assert_eq!(map[q.meet(x, y)], c.meet(map[x], map[y]));
                assert_eq!(map[q.mul(x, y)], c.mul(map[x], map[y]));
            }
        }
        assert_eq!(check_hom(&q, &c, &map), Ok(()));
    }

    #[test]
    fn collapsing_map_fails_meet_at_a_b() {
        let q = bundled::q4();
        let c = bundled::c2();
        let map = [0, 1, 1, 1];
        assert_eq!(
            check_hom(&q, &c, &map),
            Err(HomViolation { condition: HomCondition::Meet, x: 1, y: 2 })
        );
        let err = QuantaleHom::new("h", Arc::new(q), Arc::new(c), map.to_vec()).unwrap_err();
        assert!(matches!(err, Error::HomInvalid { condition: "meet", .. }));
    }

    #[test]
    fn composition_of_homs_is_a_hom() {
        let q = Arc::new(bundled::q4());
        let c = Arc::new(bundled::c2());
        let h = QuantaleHom::new("h", q.clone(), c.clone(), vec![0, 1, 0, 1]).unwrap();
        let id_c = QuantaleHom::identity(c);
        let composed = h.then(&id_c).unwrap();
        assert_eq!(composed.map(), h.map());
        let back = QuantaleHom::identity(q).then(&h).unwrap();
        assert_eq!(back.map(), h.map());
    }

    #[test]
    fn two_chain_characters_of_q4() {
        let q = Arc::new(bundled::q4());
        let homs = QuantaleHom::to_two_chain(q);
        let maps: Vec<_> = homs.iter().map(|h| h.map().to_vec()).collect();
        assert_eq!(maps, vec![vec![0, 0, 1, 1], vec![0, 1, 0, 1]]);
    }
}
