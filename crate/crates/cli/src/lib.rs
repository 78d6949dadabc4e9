//! Command-line front end: rank tables, LKB matrices as JSON, verification
//! suites and simplicity certificates.
//!
//! [`run`] returns the exit status together with the output document so the
//! binary stays a thin wrapper and tests can call it in-process.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde::Serialize;
use verma_lkb::braid::{braid_relations_check, handlebody_colors, rmatrix_inverse_check, BraidWord, Partition, RelationCheck};
use verma_lkb::gtbasis::{casimir_sweep, infbraid_relations_check};
use verma_lkb::lkb::{lkb_basis, lkb_relations_check, simplicity_report, word_matrix, LkbSpace};
use verma_lkb::qgroup::{binomial, commuting_actions_check, duality_dimension_check, Mode as ActionMode};
use verma_lkb::scalar::{GeneratorSet, QuantumParams, Specialization, Specialized, Symbolic, Var};
use verma_lkb::verma::sample_monomials;
use verma_lkb::Error;

pub const MAX_N: usize = 8;
pub const MAX_L: u32 = 5;

#[derive(Parser, Debug, Clone)]
#[command(name = "verma-lkb", version, about = "Verma Howe duality and colored LKB representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(clap::Args, Debug, Clone, Default)]
pub struct Options {
    /// Number of strands.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Level of the highest-weight space.
    #[arg(long, global = true)]
    pub l: Option<u32>,
    /// Braid word such as "s1 s2^-1".
    #[arg(long, global = true)]
    pub word: Option<String>,
    /// Strand colors, e.g. "1,1,2".
    #[arg(long, global = true, conflicts_with_all = ["colors_file", "handlebody"])]
    pub colors: Option<String>,
    /// File holding the strand colors.
    #[arg(long, global = true, conflicts_with = "handlebody")]
    pub colors_file: Option<PathBuf>,
    /// Handlebody preset: the first G strands get color 1, the rest color 2.
    #[arg(long, global = true, value_name = "G")]
    pub handlebody: Option<usize>,
    /// Strand partition such as "[1,2][3]".
    #[arg(long, global = true)]
    pub partition: Option<String>,
    #[arg(long, global = true)]
    pub t_max: Option<u32>,
    /// Largest `c_n` in the GT sweep.
    #[arg(long, global = true)]
    pub c_max: Option<i32>,
    /// Largest `|r_i|` in the GT sweep.
    #[arg(long, global = true)]
    pub r_max: Option<i32>,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Number of random sample monomials.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true, env = "VERMA_LKB_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Also write the output document to this file.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = ScalarMode::Symbolic)]
    pub mode: ScalarMode,
    /// Parameter file with `key = value` lines (`v`, `U1`, ...).
    #[arg(long, global = true)]
    pub params: Option<PathBuf>,
    /// Lift the size guardrails.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScalarMode {
    #[default]
    Symbolic,
    Specialized,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Table of LKB ranks.
    Dim,
    /// Matrix of a braid word on an LKB space, as JSON.
    Matrix,
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Certify simplicity by commutants at random specializations.
    Simplicity,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    BraidRelations,
    YangBaxter,
    CommutingActions,
    Casimir,
    Infbraid,
    Duality,
}

/// Exit status and output document of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Failure::Check(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn invalid<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Invalid(msg.into()))
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Dim => dim(&cli.opts),
        Command::Matrix => matrix(&cli.opts),
        Command::Verify { suite } => verify(*suite, &cli.opts),
        Command::Simplicity => simplicity(&cli.opts),
    };
    let (status, output) = match result {
        Ok((passed, text)) => (if passed { 0 } else { 1 }, text),
        Err(Failure::Invalid(msg)) => (2, format!("error: {msg}\n")),
        Err(Failure::Check(msg)) => (1, format!("failure: {msg}\n")),
    };
    if let (Some(path), 0 | 1) = (&cli.opts.output, status) {
        if let Err(e) = std::fs::write(path, &output) {
            return Outcome {
                status: 2,
                output: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
    }
    Outcome { status, output }
}

fn guard_n(o: &Options, n: usize) -> CliResult<()> {
    if n < 1 {
        return invalid("n must be at least 1");
    }
    if n > MAX_N && !o.force {
        return invalid(format!("n = {n} exceeds the guardrail {MAX_N}; pass --force to run anyway"));
    }
    Ok(())
}

fn guard_l(o: &Options, l: u32) -> CliResult<()> {
    if l > MAX_L && !o.force {
        return invalid(format!("l = {l} exceeds the guardrail {MAX_L}; pass --force to run anyway"));
    }
    Ok(())
}

fn parse_colors(text: &str) -> CliResult<Vec<usize>> {
    let colors = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().ok().filter(|&c| c >= 1))
        .collect::<Option<Vec<_>>>();
    match colors {
        Some(c) if !c.is_empty() => Ok(c),
        _ => invalid(format!("bad color list '{}'", text.trim())),
    }
}

/// Colors from the flags, defaulting to one color on all `n` strands.
fn colors(o: &Options, n: usize) -> CliResult<Vec<usize>> {
    let colors = if let Some(text) = &o.colors {
        parse_colors(text)?
    } else if let Some(path) = &o.colors_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
        parse_colors(&text)?
    } else if let Some(g) = o.handlebody {
        if g > n {
            return invalid(format!("handlebody genus {g} exceeds n = {n}"));
        }
        handlebody_colors(g, n - g)
    } else {
        vec![1; n]
    };
    if colors.len() != n {
        return invalid(format!("{} colors given for n = {n}", colors.len()));
    }
    Ok(colors)
}

fn read_params(path: &PathBuf) -> CliResult<BTreeMap<Var, BigRational>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let mut values = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return invalid(format!("{}:{}: expected 'key = value'", path.display(), i + 1));
        };
        let var = Var::parse(key.trim())
            .filter(|x| x.is_invertible())
            .ok_or_else(|| Failure::Invalid(format!("{}:{}: unknown parameter '{}'", path.display(), i + 1, key.trim())))?;
        let q: BigRational = value
            .trim()
            .parse()
            .map_err(|_| Failure::Invalid(format!("{}:{}: bad rational '{}'", path.display(), i + 1, value.trim())))?;
        values.insert(var, q);
    }
    Ok(values)
}

/// Specialized parameters for colors `1..=ncolors`, from the parameter file
/// or drawn from the seed.
fn specialized(o: &Options, colors: &[usize], max_shift: i64) -> CliResult<Specialized> {
    let ncolors = colors.iter().copied().max().unwrap_or(1);
    let sp = match &o.params {
        Some(path) => {
            let values = read_params(path)?;
            for x in GeneratorSet::Quantum(ncolors).generators() {
                if !values.contains_key(&x) {
                    return invalid(format!("parameter file lacks a value for {}", x.name()));
                }
            }
            Specialization::from_values(values, o.seed)?
        }
        None => Specialization::draw_where(GeneratorSet::Quantum(ncolors), o.seed, |sp| {
            sp.is_admissible(colors) && Specialized::new(sp, ncolors, max_shift).is_ok()
        })?,
    };
    Ok(Specialized::new(&sp, ncolors, max_shift)?)
}

fn params_line(p: &Specialized, ncolors: usize) -> String {
    let mut parts = vec![format!("v = {}", p.v_pow(1))];
    parts.extend((1..=ncolors).map(|c| format!("U{c} = {}", p.power(&[(c, 1)], 0))));
    format!("parameters (seed {}): {}\n", p.seed(), parts.join(", "))
}

fn verdict(out: &mut String, passed: bool) -> bool {
    writeln!(out, "result: {}", if passed { "PASS" } else { "FAIL" }).unwrap();
    passed
}

fn dim(o: &Options) -> CliResult<(bool, String)> {
    let ns: Vec<usize> = match o.n {
        Some(n) => vec![n],
        None => (2..=6).collect(),
    };
    let ls: Vec<u32> = match o.l {
        Some(l) => vec![l],
        None => (0..=4).collect(),
    };
    let mut out = String::from("n\tl\tdim\tC(n+l-2,l)\n");
    let mut passed = true;
    for &n in &ns {
        guard_n(o, n)?;
        if n < 2 {
            return invalid("dim needs n >= 2");
        }
        let colors = colors(o, n)?;
        for &l in &ls {
            guard_l(o, l)?;
            let d = match o.mode {
                ScalarMode::Symbolic => lkb_basis(&Symbolic, l, &colors).dim(),
                ScalarMode::Specialized => lkb_basis(&specialized(o, &colors, l as i64 + 1)?, l, &colors).dim(),
            };
            let expected = binomial((n as u64 + l as u64).saturating_sub(2), l as u64);
            passed &= num::BigInt::from(d) == expected;
            writeln!(out, "{n}\t{l}\t{d}\t{expected}").unwrap();
        }
    }
    Ok((passed, out))
}

#[derive(Serialize)]
struct MatrixDoc {
    n: usize,
    l: u32,
    colors: Vec<usize>,
    word: String,
    basis: Vec<String>,
    entries: Vec<Vec<String>>,
}

fn matrix_doc<P: QuantumParams>(p: &P, w: &BraidWord, space: &LkbSpace<P::S>) -> CliResult<String> {
    let m = word_matrix(p, w, space)?;
    let doc = MatrixDoc {
        n: space.n,
        l: space.l,
        colors: space.colors.clone(),
        word: w.to_string(),
        basis: space.basis.iter().map(|b| b.to_string()).collect(),
        entries: m.matrix.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
    };
    Ok(serde_json::to_string_pretty(&doc).expect("serializable") + "\n")
}

fn matrix(o: &Options) -> CliResult<(bool, String)> {
    let Some(n) = o.n else {
        return invalid("matrix needs --n");
    };
    guard_n(o, n)?;
    let l = o.l.unwrap_or(1);
    guard_l(o, l)?;
    let w = BraidWord::parse(o.word.as_deref().unwrap_or(""), n)?;
    let colors = colors(o, n)?;
    let doc = match o.mode {
        ScalarMode::Symbolic => matrix_doc(&Symbolic, &w, &lkb_basis(&Symbolic, l, &colors))?,
        ScalarMode::Specialized => {
            let p = specialized(o, &colors, l as i64 + 1)?;
            matrix_doc(&p, &w, &lkb_basis(&p, l, &colors))?
        }
    };
    Ok((true, doc))
}

fn report_relations(out: &mut String, title: &str, checks: &[RelationCheck]) -> bool {
    let failed: Vec<&RelationCheck> = checks.iter().filter(|c| !c.passed).collect();
    writeln!(out, "{title}: {} checked, {} failed", checks.len(), failed.len()).unwrap();
    for c in failed {
        writeln!(out, "  FAILED {} colors {:?} level {}", c.relation, c.colors, c.level).unwrap();
    }
    checks.iter().all(|c| c.passed)
}

fn relation_suite<P: QuantumParams>(p: &P, suite: Suite, n: usize, l: u32, t_max: u32, out: &mut String) -> CliResult<bool> {
    Ok(match suite {
        Suite::BraidRelations => {
            let a = report_relations(out, "colored slices", &braid_relations_check(p, n, l));
            let b = report_relations(out, "LKB matrices, one color", &lkb_relations_check(p, n, l)?);
            a && b
        }
        _ => {
            let ybe: Vec<RelationCheck> = braid_relations_check(p, 3, l)
                .into_iter()
                .filter(|c| c.relation == "s1 s2 s1 = s2 s1 s2")
                .collect();
            let a = report_relations(out, "Yang-Baxter on three factors", &ybe);
            let b = report_relations(out, "R-matrix inverses on two factors", &rmatrix_inverse_check(p, t_max));
            a && b
        }
    })
}

fn verify(suite: Suite, o: &Options) -> CliResult<(bool, String)> {
    let mut out = String::new();
    let samples = o.samples.unwrap_or(200);
    let passed = match suite {
        Suite::BraidRelations | Suite::YangBaxter => {
            let n = if suite == Suite::YangBaxter { 3 } else { o.n.unwrap_or(3) };
            guard_n(o, n)?;
            if n < 2 {
                return invalid("braid relations need n >= 2");
            }
            let l = o.l.unwrap_or(2);
            guard_l(o, l)?;
            let t_max = o.t_max.unwrap_or(3);
            if suite == Suite::BraidRelations {
                writeln!(out, "claim: the colored R-matrix action satisfies the braid relations on every colored slice, and so do the LKB matrices").unwrap();
            } else {
                writeln!(out, "claim: R12 R23 R12 = R23 R12 R23 on three-factor slices, and each R-matrix cancels its inverse on two-factor slices").unwrap();
            }
            writeln!(out, "n = {n}, levels 0..={l}, two-factor degrees 0..={t_max}, mode {:?}", o.mode).unwrap();
            match o.mode {
                ScalarMode::Symbolic => relation_suite(&Symbolic, suite, n, l, t_max, &mut out)?,
                ScalarMode::Specialized => {
                    let colors: Vec<usize> = (1..=n).collect();
                    let p = specialized(o, &colors, (l.max(t_max)) as i64 + 1)?;
                    out.push_str(&params_line(&p, n));
                    relation_suite(&p, suite, n, l, t_max, &mut out)?
                }
            }
        }
        Suite::CommutingActions => {
            writeln!(out, "claim: the gl(2) and gl(n) actions on tensor products of Verma modules commute").unwrap();
            let ns: Vec<usize> = o.n.map(|n| vec![n]).unwrap_or_else(|| vec![2, 3, 4]);
            let mut ok = true;
            for n in ns {
                guard_n(o, n)?;
                let sample = sample_monomials(n, samples, o.seed);
                for (mode, name) in [(ActionMode::Quantum, "quantum"), (ActionMode::Classical, "classical")] {
                    let reports = commuting_actions_check(n, mode, &sample);
                    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
                    writeln!(out, "n = {n} {name}: {} generator pairs on {} monomials, {} failed", reports.len(), sample.len(), failed.len()).unwrap();
                    for r in failed {
                        writeln!(out, "  FAILED [{}, {}] at {}", r.left, r.right, r.counterexamples[0]).unwrap();
                    }
                    ok &= reports.iter().all(|r| r.passed());
                }
            }
            ok
        }
        Suite::Casimir => {
            writeln!(out, "claim: every two-diagonal GT vector is an eigenvector of C_k with eigenvalue x_k(x_k+k-1) + c_k(c_k+k-3)").unwrap();
            let n_max = o.n.unwrap_or(4);
            guard_n(o, n_max)?;
            let c_max = o.c_max.unwrap_or(3);
            let r_max = o.r_max.unwrap_or(2);
            if c_max < 0 || r_max < 0 {
                return invalid("--c-max and --r-max must be nonnegative");
            }
            let results = casimir_sweep(n_max, c_max, r_max);
            let failed: Vec<_> = results.iter().filter(|r| !r.passed).collect();
            writeln!(out, "patterns with n <= {n_max}, c_n <= {c_max}, |r_i| <= {r_max}: {} eigenvalue checks, {} failed", results.len(), failed.len()).unwrap();
            for r in &failed {
                writeln!(out, "  FAILED {} k = {}", r.pattern, r.k).unwrap();
            }
            failed.is_empty()
        }
        Suite::Infbraid => {
            writeln!(out, "claim: the operators w_ij satisfy the infinitesimal pure braid relations, and e_ij e_ji = w_ij + e_ii").unwrap();
            let n_max = o.n.unwrap_or(4);
            guard_n(o, n_max)?;
            let mut ok = true;
            for n in 2..=n_max {
                let report = infbraid_relations_check(n, &sample_monomials(n, samples, o.seed));
                writeln!(out, "n = {n}: {} identities on {} monomials, {} failed", report.identities_checked, report.samples, report.failures.len()).unwrap();
                for f in &report.failures {
                    writeln!(out, "  FAILED {} at {}", f.relation, f.monomial).unwrap();
                }
                ok &= report.passed();
            }
            ok
        }
        Suite::Duality => {
            writeln!(out, "claim: sum_(c<=t) C(c+n-2,c) = C(t+n-1,t), and ker E on level l has dimension C(l+n-2,l)").unwrap();
            let n_max = o.n.unwrap_or(6);
            guard_n(o, n_max)?;
            let t_max = o.t_max.unwrap_or(6);
            let mut ok = true;
            for n in 2..=n_max {
                let r = duality_dimension_check(n, t_max, o.seed)?;
                let bad_ids = r.identities.iter().filter(|(_, a, b)| a != b).count();
                let bad_kernels = r.kernels.iter().filter(|(_, d, e)| num::BigInt::from(*d) != *e).count();
                let dims: Vec<String> = r.kernels.iter().map(|(_, d, _)| d.to_string()).collect();
                writeln!(out, "n = {n}, t <= {t_max} (seed {}): identities {} failed, kernel dimensions [{}], {} mismatched", r.seed, bad_ids, dims.join(","), bad_kernels).unwrap();
                ok &= r.passed();
            }
            ok
        }
    };
    verdict(&mut out, passed);
    Ok((passed, out))
}

fn simplicity(o: &Options) -> CliResult<(bool, String)> {
    let Some(n) = o.n else {
        return invalid("simplicity needs --n");
    };
    guard_n(o, n)?;
    let l = o.l.unwrap_or(1);
    guard_l(o, l)?;
    let s: Partition = match &o.partition {
        Some(text) => text.parse()?,
        None => Partition::discrete(n),
    };
    let trials = o.trials.unwrap_or(3);
    let report = simplicity_report(n, l, &s, trials, o.seed)?;
    let mut out = String::new();
    writeln!(out, "claim: the LKB representation on W_({n},{l}) restricted to braids pure on {s} is simple").unwrap();
    writeln!(out, "dimension {}, {} generators: {}", report.dim, report.generators.len(), report.generators.join(", ")).unwrap();
    for t in &report.trials {
        let values: Vec<String> = t.values.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        match (&t.commutant_dim, &t.error) {
            (Some(d), _) => writeln!(out, "seed {}: {} -> commutant dimension {d}", t.seed, values.join(", ")).unwrap(),
            (None, Some(e)) => writeln!(out, "seed {}: {}", t.seed, e).unwrap(),
            (None, None) => unreachable!("a trial records a dimension or an error"),
        }
    }
    let certified = report.certified();
    writeln!(out, "verdict: {}", if certified { "simple certified" } else { "not certified" }).unwrap();
    Ok((certified, out))
}
