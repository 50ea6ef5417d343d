//! Finite integral commutative quantales: carriers, lattice tables and the
//! multiplication `&`, plus the exhaustive axiom checker.
//!
//! A carrier of `n` elements is addressed by indices `0..n`. The order, binary
//! joins and meets and the multiplication are all materialized as tables at
//! construction, so every element-level operation is a lookup.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Index of an element in its carrier.
pub type Elem = usize;

/// A subset of a carrier, one bit per element index.
pub type ElemSet = FixedBitSet;

/// Largest carrier any constructor will materialize.
pub const DEFAULT_ELEMENT_CAP: usize = 4096;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteQuantale {
    name: String,
    labels: Vec<String>,
    /// `up[x]` holds every `y` with `x ≼ y`.
    up: Vec<FixedBitSet>,
    join: Vec<u16>,
    meet: Vec<u16>,
    mul: Vec<u16>,
    bottom: Elem,
    top: Elem,
    noncommuting: Option<(Elem, Elem)>,
    fingerprint: u64,
}

impl fmt::Debug for FiniteQuantale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteQuantale")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl FiniteQuantale {
    /// Builds a carrier from element labels, order generators (`(x, y)` means
    /// `x ≼ y`) and a full multiplication table (`mul[x][y] = x & y`).
    ///
    /// The order is the reflexive-transitive closure of the generators. The
    /// result is structurally a lattice; the quantale axioms are not checked
    /// here (see [`FiniteQuantale::check_axioms`]).
    pub fn build(
        name: impl Into<String>,
        labels: Vec<String>,
        order: &[(Elem, Elem)],
        mul: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        let n = labels.len();
        for &(x, y) in order {
            check_index(x, n)?;
            check_index(y, n)?;
        }
        let mut up: Vec<FixedBitSet> = (0..n)
            .map(|x| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(x);
                row
            })
            .collect();
        for &(x, y) in order {
            up[x].insert(y);
        }
        // Warshall over bit rows: if x ≼ k then everything above k is above x.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        Self::from_up_sets(name.into(), labels, up, mul)
    }

    /// Builds a carrier from a full order predicate and a multiplication
    /// function. Used by the generators, where both are known in closed form.
    pub fn from_fns(
        name: impl Into<String>,
        labels: Vec<String>,
        leq: impl Fn(Elem, Elem) -> bool,
        mul: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self> {
        let n = labels.len();
        let up = (0..n)
            .map(|x| {
                let mut row = FixedBitSet::with_capacity(n);
                for y in 0..n {
                    if x == y || leq(x, y) {
                        row.insert(y);
                    }
                }
                row
            })
            .collect::<Vec<_>>();
        for x in 0..n {
            for y in up[x].ones() {
                for z in up[y].ones() {
                    if !up[x].contains(z) {
                        return Err(Error::InvalidGenerator(format!(
                            "order is not transitive at ({}, {}, {})",
                            labels[x], labels[y], labels[z]
                        )));
                    }
                }
            }
        }
        let table = (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect();
        Self::from_up_sets(name.into(), labels, up, table)
    }

    /// Label-based convenience constructor.
    pub fn from_labels(
        name: &str,
        labels: &[&str],
        order: &[(&str, &str)],
        mul: &[&[&str]],
    ) -> Result<Self> {
        let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let index = label_index(&owned)?;
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownLabel(s.into()));
        let order = order
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let mul = mul
            .iter()
            .map(|row| row.iter().map(|s| lookup(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::build(name, owned, &order, mul)
    }

    fn from_up_sets(
        name: String,
        labels: Vec<String>,
        up: Vec<FixedBitSet>,
        mul: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > DEFAULT_ELEMENT_CAP {
            return Err(Error::TooLarge { size: n, cap: DEFAULT_ELEMENT_CAP });
        }
        label_index(&labels)?;
        if mul.len() != n {
            return Err(Error::MulTableShape { expected: n, found: mul.len() });
        }
        let mut mul_flat = Vec::with_capacity(n * n);
        for row in &mul {
            if row.len() != n {
                return Err(Error::MulTableShape { expected: n, found: row.len() });
            }
            for &v in row {
                check_index(v, n)?;
                mul_flat.push(v as u16);
            }
        }
        for x in 0..n {
            for y in up[x].ones() {
                if y != x && up[y].contains(x) {
                    return Err(Error::NotAPartialOrder(labels[x].clone(), labels[y].clone()));
                }
            }
        }

        // down[x] = {y | y ≼ x}
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in up[x].ones() {
                down[y].insert(x);
            }
        }
        let up_count: Vec<usize> = up.iter().map(|r| r.count_ones(..)).collect();
        let down_count: Vec<usize> = down.iter().map(|r| r.count_ones(..)).collect();

        // The least upper bound of x and y is the upper bound whose own up-set
        // is the whole set of common upper bounds.
        let mut join = vec![0u16; n * n];
        let mut meet = vec![0u16; n * n];
        for x in 0..n {
            for y in x..n {
                let mut ub = up[x].clone();
                ub.intersect_with(&up[y]);
                let size = ub.count_ones(..);
                let lub = ub
                    .ones()
                    .find(|&u| up_count[u] == size)
                    .ok_or_else(|| Error::NotALattice(labels[x].clone(), labels[y].clone(), "join"))?;
                let mut lb = down[x].clone();
                lb.intersect_with(&down[y]);
                let size = lb.count_ones(..);
                let glb = lb
                    .ones()
                    .find(|&l| down_count[l] == size)
                    .ok_or_else(|| Error::NotALattice(labels[x].clone(), labels[y].clone(), "meet"))?;
                join[x * n + y] = lub as u16;
                join[y * n + x] = lub as u16;
                meet[x * n + y] = glb as u16;
                meet[y * n + x] = glb as u16;
            }
        }

        let bottom = (0..n).find(|&x| up_count[x] == n).ok_or(Error::MissingBound("bottom"))?;
        let top = (0..n).find(|&x| down_count[x] == n).ok_or(Error::MissingBound("top"))?;

        let mut q = FiniteQuantale {
            name,
            labels,
            up,
            join,
            meet,
            mul: mul_flat,
            bottom,
            top,
            noncommuting: None,
            fingerprint: 0,
        };
        q.refresh_derived();
        Ok(q)
    }

    fn refresh_derived(&mut self) {
        let n = self.size();
        self.noncommuting = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.mul(x, y) != self.mul(y, x));
        let mut h = DefaultHasher::new();
        n.hash(&mut h);
        for row in &self.up {
            row.as_slice().hash(&mut h);
        }
        self.mul.hash(&mut h);
        self.fingerprint = h.finish();
    }

    /// Copy of this carrier with a single multiplication entry overwritten.
    /// The order is kept; no axiom is checked.
    pub fn with_product(&self, x: Elem, y: Elem, value: Elem) -> Self {
        let n = self.size();
        assert!(x < n && y < n && value < n, "element index out of range");
        let mut q = self.clone();
        q.mul[x * n + y] = value as u16;
        q.refresh_derived();
        q
    }

    /// Copy of this carrier under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut q = self.clone();
        q.name = name.into();
        q
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    /// Identity of the underlying tables; ideals carry it to detect mixing.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn is_degenerate(&self) -> bool {
        self.bottom == self.top
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.up[x].contains(y)
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.size() + y] as Elem
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.size() + y] as Elem
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.size() + y] as Elem
    }

    /// Join of a finite family; the empty join is bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a finite family; the empty meet is top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn up_set(&self, x: Elem) -> ElemSet {
        self.up[x].clone()
    }

    /// `↓x`, every element below `x`.
    pub fn down_set(&self, x: Elem) -> ElemSet {
        let mut s = self.empty_set();
        for y in self.elements() {
            if self.leq(y, x) {
                s.insert(y);
            }
        }
        s
    }

    pub fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.size())
    }

    pub fn full_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, xs: impl IntoIterator<Item = Elem>) -> ElemSet {
        let mut s = self.empty_set();
        for x in xs {
            s.insert(x);
        }
        s
    }

    /// Covering pairs `(x, y)`: `x ≺ y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.up[x].ones() {
                if y == x {
                    continue;
                }
                let between = self.up[x]
                    .ones()
                    .any(|z| z != x && z != y && self.leq(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting.is_none()
    }

    /// Gate for every ideal-theoretic operation.
    pub fn require_commutative(&self) -> Result<()> {
        match self.noncommuting {
            None => Ok(()),
            Some((x, y)) => Err(Error::NotCommutative(x, y)),
        }
    }

    /// `x^n`, the `n`-fold product; `x^0` is top, the multiplicative identity.
    pub fn power(&self, x: Elem, n: usize) -> Elem {
        (0..n).fold(self.top, |acc, _| self.mul(acc, x))
    }

    /// `⋁_{k=0..n} x^(n-k) & y^k`. On a quantale this equals `(x ∨ y)^n`.
    pub fn power_of_join(&self, x: Elem, y: Elem, n: usize) -> Elem {
        self.join_all((0..=n).map(|k| self.mul(self.power(x, n - k), self.power(y, k))))
    }

    /// Whether some `y` has `x & y = ⊤`.
    pub fn is_unit(&self, x: Elem) -> bool {
        self.elements().any(|y| self.mul(x, y) == self.top)
    }

    /// Exhaustive check of the lattice tables and the quantale axioms.
    ///
    /// Distribution over arbitrary joins is certified by binary distribution
    /// plus `x & ⊥ = ⊥`, which covers every finite join including the empty
    /// one.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.size();
        let mut report = AxiomReport::default();

        let lattice = self.lattice_witness();
        let assoc = self
            .triples()
            .find(|&(x, y, z)| self.mul(x, self.mul(y, z)) != self.mul(self.mul(x, y), z))
            .map(|(x, y, z)| vec![x, y, z]);
        let comm = self.noncommuting.map(|(x, y)| vec![x, y]);
        let distrib = self
            .elements()
            .find(|&x| self.mul(x, self.bottom) != self.bottom)
            .map(|x| vec![x, self.bottom])
            .or_else(|| {
                self.triples()
                    .find(|&(x, y, z)| {
                        self.mul(x, self.join(y, z)) != self.join(self.mul(x, y), self.mul(x, z))
                    })
                    .map(|(x, y, z)| vec![x, y, z])
            });
        let identity = (0..n)
            .find(|&x| self.mul(x, self.top) != x || self.mul(self.top, x) != x)
            .map(|x| vec![x]);

        for (axiom, witness) in [
            (Axiom::Lattice, lattice),
            (Axiom::Associativity, assoc),
            (Axiom::Commutativity, comm),
            (Axiom::Distributivity, distrib),
            (Axiom::Identity, identity),
        ] {
            let ok = witness.is_none();
            match axiom {
                Axiom::Lattice => report.lattice_ok = ok,
                Axiom::Associativity => report.assoc_ok = ok,
                Axiom::Commutativity => report.comm_ok = ok,
                Axiom::Distributivity => report.distrib_ok = ok,
                Axiom::Identity => report.identity_ok = ok,
            }
            if let Some(elems) = witness {
                report.counterexamples.push(AxiomWitness { axiom, elems });
            }
        }
        report
    }

    fn lattice_witness(&self) -> Option<Vec<Elem>> {
        for x in self.elements() {
            if !self.leq(self.bottom, x) || !self.leq(x, self.top) {
                return Some(vec![x]);
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                let j = self.join(x, y);
                let m = self.meet(x, y);
                if !self.leq(x, j) || !self.leq(y, j) || !self.leq(m, x) || !self.leq(m, y) {
                    return Some(vec![x, y]);
                }
                for z in self.elements() {
                    let bad_join = self.leq(x, z) && self.leq(y, z) && !self.leq(j, z);
                    let bad_meet = self.leq(z, x) && self.leq(z, y) && !self.leq(z, m);
                    if bad_join || bad_meet {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    }

    fn triples(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        let n = self.size();
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    }
}

fn check_index(x: Elem, n: usize) -> Result<()> {
    if x < n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: x, size: n })
    }
}

fn label_index(labels: &[String]) -> Result<HashMap<&str, Elem>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(Error::DuplicateLabel { label: l.clone(), at: None });
        }
    }
    Ok(index)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Lattice,
    Associativity,
    Commutativity,
    Distributivity,
    Identity,
}

impl Axiom {
    pub fn tag(self) -> &'static str {
        match self {
            Axiom::Lattice => "lattice",
            Axiom::Associativity => "assoc",
            Axiom::Commutativity => "comm",
            Axiom::Distributivity => "distrib",
            Axiom::Identity => "identity",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomWitness {
    pub axiom: Axiom,
    pub elems: Vec<Elem>,
}

/// Outcome of [`FiniteQuantale::check_axioms`]: one flag per axiom and the
/// first witness found for each failed one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub lattice_ok: bool,
    pub assoc_ok: bool,
    pub comm_ok: bool,
    pub distrib_ok: bool,
    pub identity_ok: bool,
    pub counterexamples: Vec<AxiomWitness>,
}

impl Default for AxiomReport {
    fn default() -> Self {
        AxiomReport {
            lattice_ok: true,
            assoc_ok: true,
            comm_ok: true,
            distrib_ok: true,
            identity_ok: true,
            counterexamples: Vec::new(),
        }
    }
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.lattice_ok && self.assoc_ok && self.comm_ok && self.distrib_ok && self.identity_ok
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&[Elem]> {
        self.counterexamples
            .iter()
            .find(|w| w.axiom == axiom)
            .map(|w| w.elems.as_slice())
    }
}
