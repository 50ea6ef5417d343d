//! Bundled quantale families: power sets, lower sets of finite posets, open
//! sets of finite topologies, finite Łukasiewicz chains, chain frames and a
//! small non-distributive instance.

use crate::error::{Error, Result};
use crate::ideals::ideal_quantale;
use crate::quantale::{Elem, FiniteQuantale, DEFAULT_ELEMENT_CAP};

/// Points of a finite poset are `0..len`, `leq[x][y]` means `x ≤ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of `relations` and rejects cycles.
    pub fn new(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let k = labels.len();
        let mut leq = vec![vec![false; k]; k];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in relations {
            if x >= k || y >= k {
                return Err(Error::InvalidGenerator(format!("poset relation ({x}, {y}) out of range")));
            }
            leq[x][y] = true;
        }
        for m in 0..k {
            for x in 0..k {
                if leq[x][m] {
                    for y in 0..k {
                        if leq[m][y] {
                            leq[x][y] = true;
                        }
                    }
                }
            }
        }
        for x in 0..k {
            for y in x + 1..k {
                if leq[x][y] && leq[y][x] {
                    return Err(Error::InvalidGenerator(format!(
                        "poset relation has a cycle through {} and {}",
                        labels[x], labels[y]
                    )));
                }
            }
        }
        Ok(FinitePoset { labels, leq })
    }

    pub fn chain(k: usize) -> Self {
        let rel: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Self::new(default_point_labels(k), &rel).expect("chain is a poset")
    }

    pub fn antichain(k: usize) -> Self {
        Self::new(default_point_labels(k), &[]).expect("antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// A finite topology on points `0..points`, opens given as bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    points: usize,
    opens: Vec<u64>,
}

impl FiniteTopology {
    /// Validates that the family contains the empty set and the whole set and
    /// is closed under binary unions and intersections.
    pub fn new(points: usize, opens: impl IntoIterator<Item = u64>) -> Result<Self> {
        if points > 20 {
            return Err(Error::InvalidGenerator("topologies are limited to 20 points".into()));
        }
        let full = (1u64 << points) - 1;
        let mut opens: Vec<u64> = opens.into_iter().collect();
        opens.sort_unstable();
        opens.dedup();
        if opens.iter().any(|&o| o & !full != 0) {
            return Err(Error::InvalidGenerator("open set mentions a point outside the space".into()));
        }
        if !opens.contains(&0) || !opens.contains(&full) {
            return Err(Error::InvalidGenerator("a topology contains the empty set and the whole space".into()));
        }
        for &u in &opens {
            for &v in &opens {
                if opens.binary_search(&(u | v)).is_err() || opens.binary_search(&(u & v)).is_err() {
                    return Err(Error::InvalidGenerator(format!(
                        "open sets {u:#b} and {v:#b} are not closed under union and intersection"
                    )));
                }
            }
        }
        Ok(FiniteTopology { points, opens })
    }

    /// Smallest topology containing the given sets.
    pub fn generated_by(points: usize, sets: impl IntoIterator<Item = u64>) -> Result<Self> {
        if points > 20 {
            return Err(Error::InvalidGenerator("topologies are limited to 20 points".into()));
        }
        let full = (1u64 << points) - 1;
        let mut family: Vec<u64> = vec![0, full];
        family.extend(sets);
        family.sort_unstable();
        family.dedup();
        loop {
            let mut next = family.clone();
            for &u in &family {
                for &v in &family {
                    next.push(u | v);
                    next.push(u & v);
                }
            }
            next.sort_unstable();
            next.dedup();
            if next.len() == family.len() {
                break;
            }
            family = next;
        }
        Self::new(points, family)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }
}

/// What to generate.
#[derive(Debug, Clone)]
pub enum Generator {
    /// All subsets of a `k`-set under inclusion, `&` = intersection (`k ≤ 5`).
    PowerSet(usize),
    /// Lower sets of a finite poset, `&` = intersection.
    LowerSets(FinitePoset),
    /// Open sets of a finite topology, `&` = intersection.
    Opens(FiniteTopology),
    /// The chain `0 < 1 < … < n-1` with `a & b = max(0, a + b - (n - 1))`.
    Lukasiewicz(usize),
    /// The chain `0 < … < n-1` with `&` = minimum.
    Chain(usize),
    /// `⊥ < a, b, c < m < ⊤` with every product of non-top elements equal to `⊥`.
    /// Its ideal lattice is not distributive.
    M3,
    /// The quantale of ideals of a loaded instance.
    IdealQuantale(Box<FiniteQuantale>),
}

impl Generator {
    pub fn generate(&self) -> Result<FiniteQuantale> {
        self.generate_with_cap(DEFAULT_ELEMENT_CAP)
    }

    pub fn generate_with_cap(&self, cap: usize) -> Result<FiniteQuantale> {
        let too_large = |size: usize| -> Result<()> {
            if size > cap {
                Err(Error::TooLarge { size, cap })
            } else {
                Ok(())
            }
        };
        match self {
            Generator::PowerSet(k) => {
                if *k > 5 {
                    return Err(Error::InvalidGenerator("power sets are limited to k <= 5".into()));
                }
                too_large(1 << k)?;
                let sets: Vec<u64> = (0..1u64 << k).collect();
                let labels = set_labels(&sets, &default_point_labels(*k));
                intersection_quantale(format!("powerset{k}"), &sets, labels)
            }
            Generator::LowerSets(poset) => {
                let k = poset.len();
                if k > 24 {
                    return Err(Error::InvalidGenerator("posets are limited to 24 points".into()));
                }
                let mut sets = Vec::new();
                for mask in 0..1u64 << k {
                    let down_closed = (0..k).filter(|&x| mask >> x & 1 == 1).all(|x| {
                        (0..k).all(|y| !poset.leq(y, x) || mask >> y & 1 == 1)
                    });
                    if down_closed {
                        sets.push(mask);
                        too_large(sets.len())?;
                    }
                }
                let labels = set_labels(&sets, poset.labels());
                intersection_quantale("lowersets".to_string(), &sets, labels)
            }
            Generator::Opens(top) => {
                too_large(top.opens().len())?;
                let labels = set_labels(top.opens(), &default_point_labels(top.points()));
                intersection_quantale("opens".to_string(), top.opens(), labels)
            }
            Generator::Lukasiewicz(n) => {
                if *n == 0 {
                    return Err(Error::InvalidGenerator("a chain needs at least one element".into()));
                }
                too_large(*n)?;
                let t = n - 1;
                FiniteQuantale::from_fns(
                    format!("lukasiewicz{n}"),
                    (0..*n).map(|i| i.to_string()).collect(),
                    |a, b| a <= b,
                    |a, b| (a + b).saturating_sub(t),
                )
            }
            Generator::Chain(n) => {
                if *n == 0 {
                    return Err(Error::InvalidGenerator("a chain needs at least one element".into()));
                }
                too_large(*n)?;
                FiniteQuantale::from_fns(
                    format!("chain{n}"),
                    (0..*n).map(|i| i.to_string()).collect(),
                    |a, b| a <= b,
                    |a, b| a.min(b),
                )
            }
            Generator::M3 => {
                too_large(6)?;
                Ok(bundled::m3())
            }
            Generator::IdealQuantale(base) => {
                too_large(base.size())?;
                Ok(ideal_quantale(base)?.into_quantale())
            }
        }
    }
}

fn default_point_labels(k: usize) -> Vec<String> {
    (1..=k).map(|i| i.to_string()).collect()
}

/// `e` for the empty set, otherwise the member labels in point order, joined
/// with `+` when some label is longer than one character.
fn set_labels(sets: &[u64], points: &[String]) -> Vec<String> {
    let sep = if points.iter().any(|p| p.chars().count() > 1) { "+" } else { "" };
    sets.iter()
        .map(|&mask| {
            if mask == 0 {
                "e".to_string()
            } else {
                points
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, p)| p.as_str())
                    .collect::<Vec<_>>()
                    .join(sep)
            }
        })
        .collect()
}

fn intersection_quantale(name: String, sets: &[u64], labels: Vec<String>) -> Result<FiniteQuantale> {
    let index = |mask: u64| -> Elem { sets.binary_search(&mask).expect("family closed under intersection") };
    FiniteQuantale::from_fns(
        name,
        labels,
        |x, y| sets[x] & !sets[y] == 0,
        |x, y| index(sets[x] & sets[y]),
    )
}

/// Every partial order on `k` labelled points (`k ≤ 5`).
pub fn all_posets(k: usize) -> Vec<FinitePoset> {
    assert!(k <= 5, "poset enumeration is limited to 5 points");
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|x| (0..k).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        let rel: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        // Keep only relations that are already transitive and antisymmetric,
        // so each partial order is produced exactly once.
        let holds = |x: usize, y: usize| x == y || rel.contains(&(x, y));
        let antisymmetric = rel.iter().all(|&(x, y)| !holds(y, x));
        let transitive = rel
            .iter()
            .all(|&(x, y)| (0..k).all(|z| !holds(y, z) || holds(x, z)));
        if antisymmetric && transitive {
            out.push(FinitePoset::new(default_point_labels(k), &rel).expect("validated above"));
        }
    }
    out
}

/// Every topology on `k` labelled points (`k ≤ 4`).
pub fn all_topologies(k: usize) -> Vec<FiniteTopology> {
    assert!(k <= 4, "topology enumeration is limited to 4 points");
    let full = (1u64 << k) - 1;
    let inner: Vec<u64> = (1..full).collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << inner.len() {
        let family = std::iter::once(0)
            .chain(inner.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s))
            .chain(std::iter::once(full));
        if let Ok(t) = FiniteTopology::new(k, family) {
            out.push(t);
        }
    }
    out
}

/// Fixed instances used throughout the examples and tests.
pub mod bundled {
    use super::*;

    /// The four-element Boolean frame on `bot < a, b < top`.
    pub fn q4() -> FiniteQuantale {
        FiniteQuantale::from_labels(
            "q4",
            &["bot", "a", "b", "top"],
            &[("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
            &[
                &["bot", "bot", "bot", "bot"],
                &["bot", "a", "bot", "a"],
                &["bot", "bot", "b", "b"],
                &["bot", "a", "b", "top"],
            ],
        )
        .expect("q4 is a quantale")
    }

    /// Łukasiewicz chain `0 < 1 < 2`.
    pub fn l3() -> FiniteQuantale {
        Generator::Lukasiewicz(3).generate().expect("l3").renamed("l3")
    }

    /// Two-element chain with `&` = meet.
    pub fn c2() -> FiniteQuantale {
        FiniteQuantale::from_labels(
            "c2",
            &["bot", "top"],
            &[("bot", "top")],
            &[&["bot", "bot"], &["bot", "top"]],
        )
        .expect("c2 is a quantale")
    }

    /// The one-element quantale.
    pub fn trivial() -> FiniteQuantale {
        FiniteQuantale::from_labels("one", &["o"], &[], &[&["o"]]).expect("trivial quantale")
    }

    /// `M₃` with an adjoined top: `bot < a, b, c < m < top`, products of
    /// non-top elements are `bot`. The plain five-element `M₃` admits no
    /// integral multiplication, since `a = a & (b ∨ c) = (a & b) ∨ (a & c) = ⊥`
    /// would be forced.
    pub fn m3() -> FiniteQuantale {
        let labels = ["bot", "a", "b", "c", "m", "top"];
        let owned = labels.iter().map(|s| s.to_string()).collect();
        FiniteQuantale::build(
            "m3",
            owned,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (4, 5)],
            (0..6)
                .map(|x| (0..6).map(|y| if x == 5 { y } else if y == 5 { x } else { 0 }).collect())
                .collect(),
        )
        .expect("m3 is a quantale")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_topology_ignores_repeated_sets() {
        let t = FiniteTopology::generated_by(3, [1, 2, 2]).unwrap();
        assert_eq!(t.opens(), &[0, 1, 2, 3, 7]);
    }

    #[test]
    fn powerset_2_matches_q4() {
        let p = Generator::PowerSet(2).generate().unwrap();
        let q = bundled::q4();
        assert_eq!(p.labels(), &["e", "1", "2", "12"]);
        // Same index layout as q4: bot, {1}, {2}, top.
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(p.leq(x, y), q.leq(x, y));
                assert_eq!(p.mul(x, y), q.mul(x, y));
            }
        }
    }

    #[test]
    fn lowersets_of_antichain_is_boolean() {
        let q = Generator::LowerSets(FinitePoset::antichain(2)).generate().unwrap();
        assert_eq!(q.size(), 4);
        let p = Generator::PowerSet(2).generate().unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(q.leq(x, y), p.leq(x, y));
                assert_eq!(q.mul(x, y), p.mul(x, y));
            }
        }
    }

    #[test]
    fn lowersets_of_chain_is_chain() {
        let q = Generator::LowerSets(FinitePoset::chain(3)).generate().unwrap();
        assert_eq!(q.size(), 4);
        assert_eq!(q.labels(), &["e", "1", "12", "123"]);
    }

    #[test]
    fn generated_instances_pass_axioms() {
        let mut gens = vec![
            Generator::PowerSet(0),
            Generator::PowerSet(3),
            Generator::Lukasiewicz(1),
            Generator::Lukasiewicz(5),
            Generator::Chain(4),
            Generator::M3,
        ];
        gens.extend(all_topologies(2).into_iter().map(Generator::Opens));
        for g in gens {
            let q = g.generate().unwrap();
            assert!(q.check_axioms().all_ok(), "{g:?}");
        }
    }

    #[test]
    fn too_large_is_reported() {
        let err = Generator::PowerSet(3).generate_with_cap(7).unwrap_err();
        assert_eq!(err, Error::TooLarge { size: 8, cap: 7 });
        let err = Generator::Lukasiewicz(5000).generate().unwrap_err();
        assert_eq!(err, Error::TooLarge { size: 5000, cap: DEFAULT_ELEMENT_CAP });
    }

    #[test]
    fn labelled_poset_and_topology_counts() {
        // OEIS A001035 and A000798.
        assert_eq!(all_posets(3).len(), 19);
        assert_eq!(all_posets(4).len(), 219);
        assert_eq!(all_topologies(2).len(), 4);
        assert_eq!(all_topologies(3).len(), 29);
    }

    #[test]
    fn topology_validation() {
        assert!(FiniteTopology::new(2, [0, 1, 3]).is_ok());
        assert!(FiniteTopology::new(2, [0, 1, 2]).is_err());
        let t = FiniteTopology::generated_by(3, [0b001, 0b110]).unwrap();
        assert_eq!(t.opens(), &[0, 0b001, 0b110, 0b111]);
    }
}
