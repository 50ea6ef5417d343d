//! Exhaustive law checking on a loaded instance.
//!
//! Each suite checks a group of laws by quantifying over elements, ideals,
//! pairs and triples. Laws over families of ideals use every nonempty
//! subfamily on carriers of at most [`EXHAUSTIVE_FAMILY_LIMIT`] elements and a
//! seeded sample of [`SAMPLE_SIZE`] subfamilies above that; sampled laws are
//! marked as such in the report.

mod decomp;
mod element;
mod ideal;
pub mod oracle;
mod prime;

use std::fmt;
use std::panic::{self, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hom::QuantaleHom;
use crate::ideals::{ideal_quantale, Ideal};
use crate::quantale::FiniteQuantale;

pub use oracle::{cross_oracle, CrossOracleReport};

pub const EXHAUSTIVE_FAMILY_LIMIT: usize = 8;
pub const SAMPLE_SIZE: usize = 10_000;
pub const DEFAULT_SEED: u64 = 0x005e_ed1d_ea15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Axioms,
    LemmaBip,
    PropositionBpi,
    Annihilator,
    Cep,
    Lpsp,
    Avoidance,
    RadicalLemma,
    Spkr,
    Saturation,
    Primary,
    Pqx,
    Uniqueness,
    Irreducible,
    Arithmetic,
    Collapse,
    All,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const EACH: [Suite; 16] = [
        Suite::Axioms,
        Suite::LemmaBip,
        Suite::PropositionBpi,
        Suite::Annihilator,
        Suite::Cep,
        Suite::Lpsp,
        Suite::Avoidance,
        Suite::RadicalLemma,
        Suite::Spkr,
        Suite::Saturation,
        Suite::Primary,
        Suite::Pqx,
        Suite::Uniqueness,
        Suite::Irreducible,
        Suite::Arithmetic,
        Suite::Collapse,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::LemmaBip => "lemma_bip",
            Suite::PropositionBpi => "proposition_bpi",
            Suite::Annihilator => "annihilator",
            Suite::Cep => "cep",
            Suite::Lpsp => "lpsp",
            Suite::Avoidance => "avoidance",
            Suite::RadicalLemma => "radical_lemma",
            Suite::Spkr => "spkr",
            Suite::Saturation => "saturation",
            Suite::Primary => "primary",
            Suite::Pqx => "pqx",
            Suite::Uniqueness => "uniqueness",
            Suite::Irreducible => "irreducible",
            Suite::Arithmetic => "arithmetic",
            Suite::Collapse => "collapse",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.tag() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub suite: Suite,
    pub law: String,
    pub status: Status,
    /// Number of quantifier instances evaluated.
    pub checked: u64,
    pub sampled: bool,
    /// Present exactly when the law failed.
    pub witness: Option<String>,
    /// Why a law was skipped.
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub instance: String,
    pub size: usize,
    pub seed: u64,
    pub laws: Vec<LawResult>,
    /// Observations that are not laws, such as where two readings of a
    /// statement differ.
    pub notes: Vec<String>,
    pub timings: Vec<(Suite, Duration)>,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.laws.iter().filter(|l| l.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.laws.iter().filter(|l| l.status == Status::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.status == Status::Pass)
    }

    pub fn has_failure(&self) -> bool {
        self.count(Status::Fail) > 0
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            timing: false,
        }
    }
}

impl VerifyOptions {
    /// Defaults, with the seed taken from `QK_SEED` when it parses.
    pub fn from_env() -> Self {
        let seed = std::env::var("QK_SEED")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_SEED);
        VerifyOptions {
            seed,
            ..Self::default()
        }
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
///
/// `cep` needs a homomorphism out of `q`. For `all` without one, a default
/// family is used: the identity, the embedding `a ↦ ↓a` into the ideal
/// quantale, and every character into the two-element chain.
pub fn run_suite(
    q: &FiniteQuantale,
    suite: Suite,
    hom: Option<&QuantaleHom>,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if let Some(h) = hom {
        if h.source().fingerprint() != q.fingerprint() {
            return Err(Error::CarrierMismatch);
        }
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        Suite::Cep if hom.is_none() => return Err(Error::HomRequired),
        s => vec![s],
    };
    let mut report = VerificationReport {
        instance: q.name().to_string(),
        size: q.size(),
        seed: opts.seed,
        laws: Vec::new(),
        notes: Vec::new(),
        timings: Vec::new(),
    };
    let commutative = q.is_commutative();
    let mut homs_cache: Option<Vec<QuantaleHom>> = None;
    for s in suites {
        let start = Instant::now();
        let mut ctx = Ctx::new(q, s, opts);
        if s != Suite::Axioms && !commutative {
            ctx.skip("*", "multiplication is not commutative");
        } else {
            // A broken table can trip an invariant outside any single law; that
            // is a failure of the suite, not of the harness.
            let ran = panic::catch_unwind(AssertUnwindSafe(|| match s {
                Suite::Axioms => element::axioms(&mut ctx),
                Suite::LemmaBip => element::lemma_bip(&mut ctx),
                Suite::PropositionBpi => ideal::proposition_bpi(&mut ctx),
                Suite::Annihilator => ideal::annihilator(&mut ctx),
                Suite::Cep => {
                    let homs = homs_cache.get_or_insert_with(|| match hom {
                        Some(h) => vec![h.clone()],
                        None => default_homs(q, &mut report.notes),
                    });
                    for h in homs.iter() {
                        ideal::cep(&mut ctx, h);
                    }
                }
                Suite::Lpsp => prime::lpsp(&mut ctx),
                Suite::Avoidance => prime::avoidance(&mut ctx),
                Suite::RadicalLemma => prime::radical_lemma(&mut ctx),
                Suite::Spkr => prime::spkr(&mut ctx),
                Suite::Saturation => prime::saturation(&mut ctx),
                Suite::Primary => decomp::primary(&mut ctx),
                Suite::Pqx => decomp::pqx(&mut ctx),
                Suite::Uniqueness => decomp::uniqueness(&mut ctx),
                Suite::Irreducible => decomp::irreducible(&mut ctx),
                Suite::Arithmetic => decomp::arithmetic(&mut ctx),
                Suite::Collapse => ideal::collapse(&mut ctx),
                Suite::All => unreachable!(),
            }));
            if ran.is_err() {
                ctx.record("internal", 0, Some("suite panicked outside a law".into()));
            }
        }
        report.laws.append(&mut ctx.out);
        report.notes.append(&mut ctx.notes);
        if opts.timing {
            report.timings.push((s, start.elapsed()));
        }
    }
    Ok(report)
}

/// The homomorphisms used by `all` when none is supplied.
pub fn default_homs(q: &FiniteQuantale, notes: &mut Vec<String>) -> Vec<QuantaleHom> {
    let arc = Arc::new(q.clone());
    let mut homs = vec![QuantaleHom::identity(arc.clone())];
    match ideal_quantale(q).and_then(|iq| iq.principal_embedding()) {
        Ok(h) => homs.push(h),
        Err(e) => notes.push(format!("embedding into the ideal quantale unavailable: {e}")),
    }
    homs.extend(QuantaleHom::to_two_chain(arc));
    homs
}

/// Per-suite state: the instance, its ideals, and the collected results.
pub(crate) struct Ctx<'a> {
    pub q: &'a FiniteQuantale,
    pub ideals: Vec<Ideal>,
    suite: Suite,
    seed: u64,
    out: Vec<LawResult>,
    notes: Vec<String>,
}

/// How a quantifier domain was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Exhaustive,
    Sampled,
}

impl<'a> Ctx<'a> {
    fn new(q: &'a FiniteQuantale, suite: Suite, opts: &VerifyOptions) -> Self {
        let ideals = q.enumerate_ideals().unwrap_or_default();
        Ctx {
            q,
            ideals,
            suite,
            seed: opts.seed,
            out: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn skip(&mut self, law: &str, reason: &str) {
        self.out.push(LawResult {
            suite: self.suite,
            law: law.to_string(),
            status: Status::Skipped,
            checked: 0,
            sampled: false,
            witness: None,
            reason: Some(reason.to_string()),
        });
    }

    pub fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    /// Checks `check` on every case, stopping at the first failure. An error
    /// or panic inside `check` counts as a failure.
    pub fn law<T>(
        &mut self,
        law: impl Into<String>,
        mode: Mode,
        cases: impl IntoIterator<Item = T>,
        mut check: impl FnMut(&T) -> Result<bool>,
        show: impl Fn(&T) -> String,
    ) {
        let mut checked = 0u64;
        let mut witness = None;
        for case in cases {
            checked += 1;
            let outcome = panic::catch_unwind(AssertUnwindSafe(|| check(&case)));
            match outcome {
                Ok(Ok(true)) => {}
                Ok(Ok(false)) => witness = Some(show(&case)),
                Ok(Err(e)) => witness = Some(format!("{}: {e}", show(&case))),
                Err(_) => witness = Some(format!("{}: panicked", show(&case))),
            }
            if witness.is_some() {
                break;
            }
        }
        self.out.push(LawResult {
            suite: self.suite,
            law: law.into(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            checked,
            sampled: mode == Mode::Sampled,
            witness,
            reason: None,
        });
    }

    /// Records an outcome computed elsewhere.
    pub fn record(&mut self, law: impl Into<String>, checked: u64, witness: Option<String>) {
        self.out.push(LawResult {
            suite: self.suite,
            law: law.into(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            checked,
            sampled: false,
            witness,
            reason: None,
        });
    }

    /// A single boolean fact, reported as a law over one case.
    pub fn fact(&mut self, law: impl Into<String>, check: impl FnOnce() -> Result<bool>, show: impl Fn() -> String) {
        let mut check = Some(check);
        self.law(
            law,
            Mode::Exhaustive,
            [()],
            |_| (check.take().expect("single case"))(),
            |_| show(),
        );
    }

    pub fn pairs(&self) -> Vec<(Ideal, Ideal)> {
        let mut out = Vec::new();
        for i in &self.ideals {
            for j in &self.ideals {
                out.push((i.clone(), j.clone()));
            }
        }
        out
    }

    pub fn triples(&self) -> Vec<(Ideal, Ideal, Ideal)> {
        let mut out = Vec::new();
        for i in &self.ideals {
            for j in &self.ideals {
                for k in &self.ideals {
                    out.push((i.clone(), j.clone(), k.clone()));
                }
            }
        }
        out
    }

    fn rng(&self, law: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(law.as_bytes()))
    }

    /// Nonempty subfamilies of `items`, as index lists.
    pub fn families(&self, law: &str, items: usize) -> (Vec<Vec<usize>>, Mode) {
        if items == 0 {
            return (Vec::new(), Mode::Exhaustive);
        }
        if self.q.size() <= EXHAUSTIVE_FAMILY_LIMIT && items <= 16 {
            let all = (1u32..(1 << items))
                .map(|mask| (0..items).filter(|k| mask >> k & 1 == 1).collect())
                .collect();
            return (all, Mode::Exhaustive);
        }
        let mut rng = self.rng(law);
        let mut out = Vec::with_capacity(SAMPLE_SIZE);
        while out.len() < SAMPLE_SIZE {
            let pick: Vec<usize> = (0..items).filter(|_| rng.gen_bool(0.5)).collect();
            if !pick.is_empty() {
                out.push(pick);
            }
        }
        (out, Mode::Sampled)
    }

    /// Nonempty subsets of the carrier, exhaustive up to `limit` elements.
    pub fn subsets(&self, law: &str, limit: usize) -> (Vec<crate::quantale::ElemSet>, Mode) {
        let n = self.q.size();
        if n <= limit {
            let all = (1u64..(1 << n))
                .map(|mask| self.q.set_of((0..n).filter(|k| mask >> k & 1 == 1)))
                .collect();
            return (all, Mode::Exhaustive);
        }
        let mut rng = self.rng(law);
        let mut out = Vec::with_capacity(SAMPLE_SIZE);
        while out.len() < SAMPLE_SIZE {
            let s = self.q.set_of((0..n).filter(|_| rng.gen_bool(0.5)));
            if s.count_ones(..) > 0 {
                out.push(s);
            }
        }
        (out, Mode::Sampled)
    }
}

/// `[↓a, ↓b]` for witnesses.
pub(crate) fn names(q: &FiniteQuantale, family: &[&Ideal]) -> String {
    let parts: Vec<String> = family.iter().map(|i| q.ideal_name(i)).collect();
    format!("[{}]", parts.join(", "))
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::bundled;

    fn all(q: &FiniteQuantale) -> VerificationReport {
        run_suite(q, Suite::All, None, &VerifyOptions::default()).unwrap()
    }

    fn assert_all_pass(r: &VerificationReport) {
        let failures: Vec<_> = r.failures().collect();
        assert!(failures.is_empty(), "{:#?}", failures);
        assert_eq!(r.count(Status::Skipped), 0);
    }

    #[test]
    fn q4_passes_everything() {
        assert_all_pass(&all(&bundled::q4()));
    }

    #[test]
    fn l3_passes_everything() {
        assert_all_pass(&all(&bundled::l3()));
    }

    #[test]
    fn m3_passes_everything() {
        assert_all_pass(&all(&bundled::m3()));
    }

    #[test]
    fn spkr_on_l3_counts_proper_ideals() {
        let l = bundled::l3();
        let r = run_suite(&l, Suite::Spkr, None, &VerifyOptions::default()).unwrap();
        assert!(r.all_pass());
        let checked: u64 = r.laws.iter().map(|x| x.checked).sum();
        assert_eq!(checked, 2 * 3);
    }

    #[test]
    fn corrupted_table_fails_axioms_with_witness() {
        let q = bundled::q4().with_product(1, 2, 3).with_product(2, 1, 3);
        let r = run_suite(&q, Suite::Axioms, None, &VerifyOptions::default()).unwrap();
        let distrib = r.laws.iter().find(|l| l.law == "distrib").unwrap();
        assert_eq!(distrib.status, Status::Fail);
        assert!(distrib.witness.is_some());
    }

    #[test]
    fn noncommutative_tables_skip_ideal_suites() {
        let q = bundled::q4().with_product(1, 2, 3);
        let r = all(&q);
        assert!(r.laws.iter().any(|l| l.law == "comm" && l.status == Status::Fail));
        assert_eq!(r.count(Status::Skipped), Suite::EACH.len() - 1);
    }

    #[test]
    fn cep_alone_needs_a_hom() {
        let q = bundled::q4();
        assert_eq!(
            run_suite(&q, Suite::Cep, None, &VerifyOptions::default()),
            Err(Error::HomRequired)
        );
    }

    #[test]
    fn reports_are_reproducible() {
        let q = crate::generators::Generator::Lukasiewicz(9).generate().unwrap();
        let a = run_suite(&q, Suite::PropositionBpi, None, &VerifyOptions::default()).unwrap();
        let b = run_suite(&q, Suite::PropositionBpi, None, &VerifyOptions::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.laws.iter().any(|l| l.sampled));
    }
}
