//! The `qk` command line. [`run`] takes the arguments and two sinks and returns
//! the exit code: 0 on success, 1 on a domain error, 2 on a usage or parse error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::classify::{RadicalAlgorithm, Verdict};
use crate::decompose::DecompositionKind;
use crate::error::Error;
use crate::generators::{bundled, FinitePoset, FiniteTopology, Generator};
use crate::hom::QuantaleHom;
use crate::ideals::Ideal;
use crate::io::{parse_hom, parse_quant, render, write_quant, Format, Record};
use crate::quantale::{Axiom, Elem, FiniteQuantale};
use crate::verify::{run_suite, Status, Suite, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "qk", version, about = "Ideal theory of finite integral commutative quantales")]
struct Cli {
    /// Report layout.
    #[arg(long, global = true, default_value = "records")]
    format: Format,
    /// Append wall-clock timings to the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
#[group(required = true, multiple = false)]
struct IdealArg {
    /// The ideal below this element.
    #[arg(long, value_name = "LABEL")]
    below: Option<String>,
    /// The ideal with exactly these members, comma separated.
    #[arg(long, value_name = "LIST")]
    ideal: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the quantale axioms.
    Check { file: PathBuf },
    /// List every ideal.
    Ideals { file: PathBuf },
    /// Every classification flag of one ideal.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        target: IdealArg,
    },
    /// The prime ideals.
    Spectrum { file: PathBuf },
    /// The radical of an ideal.
    Radical {
        file: PathBuf,
        #[arg(long, value_name = "LABEL")]
        below: String,
        /// powers, primes, mcsets or all.
        #[arg(long, default_value = "all")]
        algorithm: String,
    },
    /// A primary or irreducible decomposition.
    Decompose {
        file: PathBuf,
        #[arg(long, value_name = "LABEL")]
        below: String,
        #[arg(long, default_value = "primary")]
        kind: DecompositionKind,
    },
    /// Run verification suites.
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, value_name = "HOMFILE")]
        hom: Option<PathBuf>,
    },
    /// Write a generated instance as `.quant` text.
    Gen {
        /// powerset:K, lukasiewicz:N, chain:N, lowersets:SPEC, opens:SPEC,
        /// ideals:FILE, q4, l3, c2, m3 or trivial.
        kind: String,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Homomorphism files.
    Hom {
        #[command(subcommand)]
        command: HomCommand,
    },
}

#[derive(Debug, Subcommand)]
enum HomCommand {
    /// Load both carriers and check the four conditions.
    Check { file: PathBuf },
}

enum Failure {
    Usage(String),
    Domain(String),
}

type Outcome = std::result::Result<Vec<Record>, (Vec<Record>, Failure)>;

enum Output {
    Records(Vec<Record>),
    Text(String),
}

fn usage(msg: impl Into<String>) -> (Vec<Record>, Failure) {
    (Vec::new(), Failure::Usage(msg.into()))
}

fn domain(msg: impl Into<String>) -> (Vec<Record>, Failure) {
    (Vec::new(), Failure::Domain(msg.into()))
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let start = Instant::now();
    let (output, failure) = match dispatch(&cli) {
        Ok(o) => (o, None),
        Err((r, f)) => (Output::Records(r), Some(f)),
    };
    match output {
        Output::Text(text) => {
            let _ = out.write_all(text.as_bytes());
        }
        Output::Records(mut records) => {
            if cli.timing {
                records.push(Record::new().field("elapsed_ms", format!("{:.3}", start.elapsed().as_secs_f64() * 1e3)));
            }
            let _ = out.write_all(render(&records, cli.format).as_bytes());
        }
    }
    match failure {
        None => 0,
        Some(Failure::Domain(msg)) => {
            let _ = writeln!(err, "qk: {msg}");
            1
        }
        Some(Failure::Usage(msg)) => {
            let _ = writeln!(err, "qk: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> std::result::Result<Output, (Vec<Record>, Failure)> {
    if let Command::Gen { kind, output } = &cli.command {
        return gen(kind, output.as_deref());
    }
    let records = match &cli.command {
        Command::Check { file } => check(&load(file)?),
        Command::Ideals { file } => ideals(&load(file)?),
        Command::Classify { file, target } => {
            let q = load(file)?;
            let i = select(&q, target)?;
            classify(&q, &i)
        }
        Command::Spectrum { file } => spectrum(&load(file)?),
        Command::Radical { file, below, algorithm } => {
            let q = load(file)?;
            let i = q.principal(element(&q, below)?);
            radical(&q, &i, algorithm)
        }
        Command::Decompose { file, below, kind } => {
            let q = load(file)?;
            let i = q.principal(element(&q, below)?);
            decompose(&q, &i, *kind)
        }
        Command::Verify { file, suite, hom } => {
            let q = load(file)?;
            let h = hom.as_deref().map(load_hom).transpose()?;
            verify(&q, *suite, h.as_ref(), cli.timing)
        }
        Command::Gen { .. } => unreachable!("handled above"),
        Command::Hom { command: HomCommand::Check { file } } => hom_check(file),
    }?;
    Ok(Output::Records(records))
}

fn load(path: &Path) -> std::result::Result<FiniteQuantale, (Vec<Record>, Failure)> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_quant(&text).map_err(|e| usage(located(path, &e)))
}

fn located(path: &Path, e: &Error) -> String {
    match e {
        Error::Syntax { .. } | Error::UndeclaredLabel { .. } | Error::RowArity { .. } => {
            format!("{}:{e}", path.display())
        }
        Error::DuplicateLabel { at: Some(_), .. } => format!("{}:{e}", path.display()),
        _ => format!("{}: {e}", path.display()),
    }
}

/// `SRC` in a hom header names `SRC.quant` next to the hom file, or a path
/// when it already ends in `.quant`.
fn load_hom(path: &Path) -> std::result::Result<QuantaleHom, (Vec<Record>, Failure)> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let src = parse_hom(&text).map_err(|e| usage(located(path, &e)))?;
    let dir = path.parent().unwrap_or(Path::new(""));
    let carrier = |name: &str| {
        let file = if name.ends_with(".quant") { PathBuf::from(name) } else { PathBuf::from(format!("{name}.quant")) };
        load(&dir.join(file))
    };
    let (s, t) = (Arc::new(carrier(&src.source)?), Arc::new(carrier(&src.target)?));
    src.resolve(s.clone(), t.clone()).map_err(|e| match e {
        Error::HomInvalid { condition, x, y } => domain(format!(
            "{}: not a homomorphism: {condition} fails at ({}, {})",
            path.display(),
            s.label(x),
            s.label(y)
        )),
        Error::HomArity { .. } => domain(format!("{}: {e}", path.display())),
        e => usage(located(path, &e)),
    })
}

fn element(q: &FiniteQuantale, label: &str) -> std::result::Result<Elem, (Vec<Record>, Failure)> {
    q.index_of(label).ok_or_else(|| usage(format!("unknown element `{label}` in {}", q.name())))
}

fn select(q: &FiniteQuantale, arg: &IdealArg) -> std::result::Result<Ideal, (Vec<Record>, Failure)> {
    if let Some(b) = &arg.below {
        return Ok(q.principal(element(q, b)?));
    }
    let list = arg.ideal.as_deref().unwrap_or_default();
    let mut members = Vec::new();
    for label in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        members.push(element(q, label)?);
    }
    let set = q.set_of(members);
    q.ideal(set.clone()).map_err(|_| domain(format!("{} is not an ideal", q.subset_labels(&set))))
}

fn fail(e: Error) -> (Vec<Record>, Failure) {
    domain(e.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn labels(q: &FiniteQuantale, xs: &[Elem]) -> String {
    xs.iter().map(|&x| q.label(x)).collect::<Vec<_>>().join(", ")
}

fn verdict(q: &FiniteQuantale, v: &Verdict) -> String {
    if v.holds {
        "yes".into()
    } else if v.witness.is_empty() {
        "no".into()
    } else {
        format!("no ({})", labels(q, &v.witness))
    }
}

fn check(q: &FiniteQuantale) -> Outcome {
    let report = q.check_axioms();
    let mut r = Record::new().field("instance", q.name()).field("size", q.size());
    let flags = [
        (Axiom::Lattice, report.lattice_ok),
        (Axiom::Associativity, report.assoc_ok),
        (Axiom::Commutativity, report.comm_ok),
        (Axiom::Distributivity, report.distrib_ok),
        (Axiom::Identity, report.identity_ok),
    ];
    for (axiom, ok) in flags {
        let value = match (ok, report.witness(axiom)) {
            (true, _) => "ok".to_string(),
            (false, Some(w)) => format!("fail ({})", labels(q, w)),
            (false, None) => "fail".to_string(),
        };
        r.push(axiom.tag(), value);
    }
    r.push("quantale", yes_no(report.all_ok()));
    if report.all_ok() {
        Ok(vec![r])
    } else {
        Err((vec![r], Failure::Domain(format!("{} fails the quantale axioms", q.name()))))
    }
}

fn ideals(q: &FiniteQuantale) -> Outcome {
    let mut all = q.enumerate_ideals().map_err(fail)?;
    q.sort_ideals(&mut all);
    let mut out = vec![Record::new().field("instance", q.name()).field("ideals", all.len())];
    for i in &all {
        out.push(Record::new().field("ideal", q.ideal_name(i)).field("members", q.subset_labels(i.members())));
    }
    Ok(out)
}

fn classify(q: &FiniteQuantale, i: &Ideal) -> Outcome {
    let c = q.classify(i).map_err(fail)?;
    Ok(vec![Record::new()
        .field("ideal", q.ideal_name(i))
        .field("members", q.subset_labels(i.members()))
        .field("proper", yes_no(c.proper))
        .field("maximal", yes_no(c.maximal))
        .field("minimal", yes_no(c.minimal_ideal))
        .field("prime", verdict(q, &c.prime))
        .field("semiprime", verdict(q, &c.semiprime))
        .field("primary", verdict(q, &c.primary))
        .field("radical", q.ideal_name(&c.radical))
        .field("radical_ideal", yes_no(c.radical_ideal))
        .field("irreducible", verdict(q, &c.irreducible))
        .field("strongly_irreducible", verdict(q, &c.strongly_irreducible))])
}

fn spectrum(q: &FiniteQuantale) -> Outcome {
    let primes = q.spectrum().map_err(fail)?;
    let mut r = Record::new();
    for p in &primes {
        r.push("prime", q.ideal_name(p));
    }
    Ok(vec![r])
}

fn radical(q: &FiniteQuantale, i: &Ideal, algorithm: &str) -> Outcome {
    let algorithms: Vec<RadicalAlgorithm> = if algorithm == "all" {
        RadicalAlgorithm::ALL.to_vec()
    } else {
        vec![algorithm.parse().map_err(usage)?]
    };
    let results = algorithms
        .iter()
        .map(|&a| q.radical(i, a).map(|r| (a, r)))
        .collect::<crate::Result<Vec<_>>>()
        .map_err(fail)?;
    let first = &results[0].1;
    let agree = results.iter().all(|(_, r)| r == first);
    let mut r = Record::new().field("ideal", q.ideal_name(i));
    if agree {
        r.push("radical below", q.label(q.apex(first)));
    }
    for (a, rad) in &results {
        r.push(a.tag(), q.ideal_name(rad));
    }
    if results.len() > 1 {
        r.push("agreement", if agree { "all three algorithms agree" } else { "algorithms disagree" });
    }
    if agree {
        Ok(vec![r])
    } else {
        Err((vec![r], Failure::Domain("radical algorithms disagree; the table is not a quantale".into())))
    }
}

fn decompose(q: &FiniteQuantale, i: &Ideal, kind: DecompositionKind) -> Outcome {
    let d = match kind {
        DecompositionKind::Primary => q.primary_decomposition(i),
        DecompositionKind::Irreducible => q.irreducible_decomposition(i),
    };
    let d = match d {
        Ok(d) => d,
        Err(Error::NotDecomposable { gap }) => {
            let r = Record::new()
                .field("target", q.ideal_name(i))
                .field("kind", kind.tag())
                .field("decomposable", "no")
                .field("gap", q.ideal_name(&gap));
            return Err((vec![r], Failure::Domain(format!("{} has no primary decomposition", q.ideal_name(i)))));
        }
        Err(e) => return Err(fail(e)),
    };
    let mut out = vec![Record::new()
        .field("target", q.ideal_name(i))
        .field("kind", kind.tag())
        .field("components", d.components.len())
        .field("minimal", yes_no(d.minimal))];
    for (k, c) in d.components.iter().enumerate() {
        let mut r = Record::new().field("component", q.ideal_name(c)).field("members", q.subset_labels(c.members()));
        if let Some(p) = d.radicals.get(k) {
            r.push("radical", q.ideal_name(p));
        }
        out.push(r);
    }
    if kind == DecompositionKind::Primary {
        let u = q.uniqueness_report(i).map_err(fail)?;
        let mut r = Record::new();
        for p in &u.isolated {
            r.push("isolated", q.ideal_name(p));
        }
        for p in &u.embedded {
            r.push("embedded", q.ideal_name(p));
        }
        out.push(r);
    }
    Ok(out)
}

fn verify(q: &FiniteQuantale, suite: Suite, hom: Option<&QuantaleHom>, timing: bool) -> Outcome {
    let opts = VerifyOptions { timing, ..VerifyOptions::from_env() };
    let report = run_suite(q, suite, hom, &opts).map_err(fail)?;
    let mut out = vec![Record::new()
        .field("instance", &report.instance)
        .field("size", report.size)
        .field("suite", suite.tag())
        .field("seed", report.seed)];
    for law in &report.laws {
        let mut r = Record::new()
            .field("suite", law.suite.tag())
            .field("law", &law.law)
            .field("status", law.status.tag())
            .field("checked", law.checked)
            .field("mode", if law.sampled { "sampled" } else { "exhaustive" });
        if let Some(w) = &law.witness {
            r.push("witness", w);
        }
        if let Some(why) = &law.reason {
            r.push("reason", why);
        }
        out.push(r);
    }
    if !report.notes.is_empty() {
        let mut r = Record::new();
        for n in &report.notes {
            r.push("note", n);
        }
        out.push(r);
    }
    for (s, d) in &report.timings {
        out.push(Record::new().field("suite", s.tag()).field("elapsed_ms", format!("{:.3}", d.as_secs_f64() * 1e3)));
    }
    out.push(
        Record::new()
            .field("pass", report.count(Status::Pass))
            .field("fail", report.count(Status::Fail))
            .field("skipped", report.count(Status::Skipped)),
    );
    if report.has_failure() {
        Err((out, Failure::Domain(format!("{} law(s) failed", report.count(Status::Fail)))))
    } else {
        Ok(out)
    }
}

/// `.quant` text on standard output, or a short record after writing a file.
fn gen(kind: &str, output: Option<&Path>) -> std::result::Result<Output, (Vec<Record>, Failure)> {
    let q = generate(kind)?;
    let text = write_quant(&q);
    match output {
        None => Ok(Output::Text(text)),
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(Output::Records(vec![Record::new().field("wrote", path.display()).field("size", q.size())]))
        }
    }
}

fn generate(kind: &str) -> std::result::Result<FiniteQuantale, (Vec<Record>, Failure)> {
    let (head, arg) = kind.split_once(':').unwrap_or((kind, ""));
    let number = |what: &str| -> std::result::Result<usize, (Vec<Record>, Failure)> {
        arg.parse().map_err(|_| usage(format!("`{head}` needs {what}, found `{arg}`")))
    };
    let g = match head {
        "q4" => return Ok(bundled::q4()),
        "l3" => return Ok(bundled::l3()),
        "c2" => return Ok(bundled::c2()),
        "m3" => return Ok(bundled::m3()),
        "trivial" => return Ok(bundled::trivial()),
        "powerset" => Generator::PowerSet(number("a set size")?),
        "lukasiewicz" => Generator::Lukasiewicz(number("a chain length")?),
        "chain" => Generator::Chain(number("a chain length")?),
        "lowersets" => Generator::LowerSets(poset_spec(arg).map_err(usage)?),
        "opens" => Generator::Opens(topology_spec(arg).map_err(usage)?),
        "ideals" => Generator::IdealQuantale(Box::new(load(Path::new(arg))?)),
        _ => return Err(usage(format!("unknown generator `{head}`"))),
    };
    g.generate().map_err(|e| usage(e.to_string()))
}

/// `chain:N`, `antichain:N`, or `N:x<y,...` over points `1..=N`.
fn poset_spec(spec: &str) -> std::result::Result<FinitePoset, String> {
    let (head, rest) = spec.split_once(':').ok_or_else(|| format!("bad poset `{spec}`"))?;
    let count = |s: &str| s.parse::<usize>().map_err(|_| format!("bad point count `{s}`"));
    match head {
        "chain" => Ok(FinitePoset::chain(count(rest)?)),
        "antichain" => Ok(FinitePoset::antichain(count(rest)?)),
        n => {
            let k = count(n)?;
            let mut rel = Vec::new();
            for pair in rest.split(',').filter(|s| !s.is_empty()) {
                let (x, y) = pair.split_once('<').ok_or_else(|| format!("bad relation `{pair}`"))?;
                rel.push((point(x, k)?, point(y, k)?));
            }
            FinitePoset::new((1..=k).map(|i| i.to_string()).collect(), &rel).map_err(|e| e.to_string())
        }
    }
}

/// `discrete:N`, `indiscrete:N`, or `N:S,...` where each `S` lists the points
/// of one generating open set, e.g. `3:1,12`.
fn topology_spec(spec: &str) -> std::result::Result<FiniteTopology, String> {
    let (head, rest) = spec.split_once(':').ok_or_else(|| format!("bad topology `{spec}`"))?;
    let count = |s: &str| s.parse::<usize>().map_err(|_| format!("bad point count `{s}`"));
    let sets: Vec<u64> = match head {
        "discrete" => (0..count(rest)?).map(|i| 1u64 << i).collect(),
        "indiscrete" => Vec::new(),
        _ => {
            let k = count(head)?;
            let mut sets = Vec::new();
            for s in rest.split(',').filter(|s| !s.is_empty()) {
                let mut mask = 0u64;
                for c in s.chars() {
                    mask |= 1 << point(&c.to_string(), k)?;
                }
                sets.push(mask);
            }
            return FiniteTopology::generated_by(k, sets).map_err(|e| e.to_string());
        }
    };
    FiniteTopology::generated_by(count(rest)?, sets).map_err(|e| e.to_string())
}

fn point(s: &str, k: usize) -> std::result::Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(p) if (1..=k).contains(&p) => Ok(p - 1),
        _ => Err(format!("bad point `{s}` (points are 1..={k})")),
    }
}

fn hom_check(path: &Path) -> Outcome {
    let h = load_hom(path)?;
    let mut r = Record::new()
        .field("hom", h.name())
        .field("source", h.source().name())
        .field("target", h.target().name())
        .field("valid", "yes")
        .field("preserves_bottom", yes_no(h.preserves_bottom()))
        .field("isomorphism", yes_no(h.is_isomorphism()));
    for x in h.source().elements() {
        r.push("map", format!("{} -> {}", h.source().label(x), h.target().label(h.apply(x))));
    }
    Ok(vec![r])
}
