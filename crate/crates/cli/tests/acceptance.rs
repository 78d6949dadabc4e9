//! One line per acceptance criterion: `[PASS]` or `[FAIL]`, the criterion,
//! what was measured and the wall time. Runs without the test harness so the
//! lines always reach the output; a failing criterion makes the exit status 1.
//! Every criterion is exact; there is no numeric tolerance anywhere.

use std::process::Command;
use std::time::Instant;

use num::{BigInt, BigRational};
use verma_lkb::braid::{braid_relations_check, rmatrix_inverse_check, Partition};
use verma_lkb::gtbasis::{casimir_sweep, det_two_route, infbraid_relations_check, sample_det_monomials};
use verma_lkb::linalg::rank;
use verma_lkb::lkb::{lkb_basis, lkb_relations_check, simplicity_report};
use verma_lkb::qgroup::{admissible_params, binomial, commuting_actions_check, duality_dimension_check, e_matrix, Mode};
use verma_lkb::scalar::Symbolic;
use verma_lkb::verma::sample_monomials;

struct Outcome {
    passed: bool,
    detail: String,
}

fn criterion(results: &mut Vec<bool>, id: u32, name: &str, f: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let out = f();
    let secs = start.elapsed().as_secs_f64();
    println!(
        "[{}] {id}. {name}: {} ({secs:.1} s)",
        if out.passed { "PASS" } else { "FAIL" },
        out.detail
    );
    results.push(out.passed);
}

fn lkb_ranks() -> Outcome {
    let mut bad = Vec::new();
    let mut cells = 0;
    for n in 2..=6usize {
        let colors: Vec<usize> = (1..=n).collect();
        let params = admissible_params(n, 1, 5).expect("admissible draw");
        for l in 0..=4u32 {
            let expected = binomial((n + l as usize - 2) as u64, l as u64);
            let structured = lkb_basis(&Symbolic, l, &colors).dim();
            let e = e_matrix(&params, &colors, l);
            let by_rank = e.cols() - rank::<BigRational>(&e);
            if BigInt::from(structured) != expected || BigInt::from(by_rank) != expected {
                bad.push(format!("(n={n}, l={l}): {structured}/{by_rank} vs {expected}"));
            }
            cells += 1;
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: format!("{cells} (n,l) cells, structured basis and specialized E-rank both give C(n+l-2,l); mismatches {bad:?}"),
    }
}

fn braid_relations() -> Outcome {
    let colored = braid_relations_check(&Symbolic, 3, 2);
    let lkb: Vec<_> = (0..=2).flat_map(|l| lkb_relations_check(&Symbolic, 3, l).expect("pure words")).collect();
    let inverse = rmatrix_inverse_check(&Symbolic, 3);
    let failed = colored.iter().chain(&lkb).chain(&inverse).filter(|c| !c.passed).count();
    Outcome {
        passed: failed == 0,
        detail: format!(
            "symbolic; {} colored slice relations (n=3, l<=2, all colorings), {} LKB matrix relations, {} inverse checks (degree <= 3); {failed} failed",
            colored.len(),
            lkb.len(),
            inverse.len()
        ),
    }
}

fn commuting_actions() -> Outcome {
    let mut pairs = 0;
    let mut failed = 0;
    for n in [2, 3, 4] {
        let sample = sample_monomials(n, 200, 2024 + n as u64);
        for mode in [Mode::Quantum, Mode::Classical] {
            for r in commuting_actions_check(n, mode, &sample) {
                pairs += 1;
                failed += usize::from(!r.passed());
            }
        }
    }
    Outcome {
        passed: failed == 0,
        detail: format!("n in {{2,3,4}}, 200 monomials each, quantum and classical; {pairs} generator pairs, {failed} failed"),
    }
}

fn casimir() -> Outcome {
    let results = casimir_sweep(4, 3, 2);
    let failed = results.iter().filter(|r| !r.passed).count();
    Outcome {
        passed: failed == 0 && !results.is_empty(),
        detail: format!("n <= 4, c_n <= 3, |r_i| <= 2, all k <= n; {} eigenvalue checks, {failed} failed", results.len()),
    }
}

fn duality() -> Outcome {
    let mut failed = Vec::new();
    for n in 2..=6 {
        let r = duality_dimension_check(n, 6, 1).expect("admissible draw");
        if !r.passed() {
            failed.push(n);
        }
    }
    Outcome {
        passed: failed.is_empty(),
        detail: format!("n <= 6, t <= 6; binomial identities and ker E dimensions; failing n: {failed:?}"),
    }
}

fn infbraid() -> Outcome {
    let mut identities = 0;
    let mut failed = 0;
    for n in 2..=4 {
        let r = infbraid_relations_check(n, &sample_monomials(n, 200, 77 + n as u64));
        identities += r.identities_checked;
        failed += r.failures.len();
    }
    Outcome {
        passed: failed == 0,
        detail: format!("n <= 4, 200 monomials each; {identities} identities, each on every sample; {failed} failures"),
    }
}

fn simplicity() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    let cases = [(2, 1, None), (3, 1, None), (3, 2, None), (4, 2, None), (3, 2, Some("[1,2,3]"))];
    for (n, l, part) in cases {
        let s = match part {
            Some(text) => text.parse::<Partition>().expect("partition"),
            None => Partition::discrete(n),
        };
        let r = simplicity_report(n, l, &s, 3, 11).expect("report");
        let dims: Vec<Option<usize>> = r.trials.iter().map(|t| t.commutant_dim).collect();
        ok &= r.trials.len() >= 3 && dims.iter().all(|d| *d == Some(1));
        lines.push(format!("({n},{l}) {s}: {dims:?}"));
    }
    Outcome {
        passed: ok,
        detail: format!("commutant dimensions per seed: {}", lines.join("; ")),
    }
}

fn determinant_routes() -> Outcome {
    let mut checked = 0;
    let mut failed = 0;
    for n in 2..=4 {
        for m in sample_det_monomials(n, 50, 5 + n as u64) {
            checked += 1;
            failed += usize::from(!det_two_route(&m).is_empty());
        }
    }
    Outcome {
        passed: failed == 0 && checked >= 100,
        detail: format!("{checked} determinant monomials, n <= 4, all Chevalley generators; {failed} disagree"),
    }
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_verma-lkb"))
        .args(args)
        .env_remove("VERMA_LKB_SEED")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn reproducibility() -> Outcome {
    let runs: Vec<Vec<&str>> = vec![
        vec!["dim"],
        vec!["matrix", "--n", "3", "--l", "2", "--word", "s1 s2^-1 s1", "--seed", "5"],
        vec!["matrix", "--n", "3", "--l", "2", "--word", "s1 s1", "--colors", "1,2,3", "--mode", "specialized", "--seed", "5"],
        vec!["verify", "braid-relations", "--seed", "5"],
        vec!["verify", "yang-baxter", "--mode", "specialized", "--seed", "5"],
        vec!["verify", "commuting-actions", "--samples", "50", "--seed", "5"],
        vec!["verify", "casimir", "--n", "3", "--seed", "5"],
        vec!["verify", "infbraid", "--seed", "5"],
        vec!["verify", "duality", "--seed", "5"],
        vec!["simplicity", "--n", "4", "--l", "2", "--trials", "3", "--seed", "5"],
    ];
    let mut bad = Vec::new();
    for args in &runs {
        let first = cli(args);
        let second = cli(args);
        if first != second || first.0 != 0 || first.1.is_empty() {
            bad.push(args.join(" "));
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: format!("{} invocations run twice, byte-identical stdout and exit 0; differing: {bad:?}", runs.len()),
    }
}

fn main() {
    let mut results = Vec::new();
    criterion(&mut results, 1, "LKB ranks", lkb_ranks);
    criterion(&mut results, 2, "colored braid relations and Yang-Baxter", braid_relations);
    criterion(&mut results, 3, "commuting actions", commuting_actions);
    criterion(&mut results, 4, "Casimir eigenvalues on GT vectors", casimir);
    criterion(&mut results, 5, "duality dimension identities", duality);
    criterion(&mut results, 6, "infinitesimal braid suite", infbraid);
    criterion(&mut results, 7, "simplicity certificates", simplicity);
    criterion(&mut results, 8, "determinant-basis two-route consistency", determinant_routes);
    criterion(&mut results, 9, "CLI reproducibility", reproducibility);
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, p)| !**p).map(|(i, _)| i + 1).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", results.len());
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
