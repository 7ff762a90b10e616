//! Acceptance suite: one line per criterion, each with its time limit.
//! Runs without the test harness so the lines are always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use etog_cli::{
    closure_checks, cmd_counterexample, cmd_membership, counterexample_union, free_valuation, mixing_checks,
    oracle_checks, order_checks, subsemigroup_checks, CheckOptions,
};
use etog_core::condition::parity_as_etog;
use etog_core::game::{
    play_lasso, random_arena, solve_positional, verify_against_bob, Arena, Player, PositionalStrategy, Verdict,
};
use etog_core::CheckReport;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn all_pass(reports: &[CheckReport]) -> Outcome {
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_string()),
        None => Ok(format!("{} checks", reports.len())),
    }
}

fn counterexample() -> Outcome {
    let report = cmd_counterexample(2, 3).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(report.human());
    }
    let arena = Arena::parse(etog_cli::DATA[0].1).map_err(|e| e.to_string())?;
    let union = counterexample_union();
    let v = free_valuation();
    for sigma in PositionalStrategy::enumerate(&arena, Player::Alice) {
        match verify_against_bob(&arena, &union, 0, &sigma, 2).map_err(|e| e.to_string())? {
            Verdict::BeatenBy { lasso, .. } => {
                let colors = lasso.cycle_colors(&arena);
                let expected = [["eps", "a", "eps", "a^-1"], ["eps", "b", "eps", "b^-1"]];
                if !expected.iter().any(|e| colors == e) {
                    return Err(format!("unexpected beating cycle {colors:?}"));
                }
                let word = lasso.up_word(&arena, v.alphabet()).map_err(|e| e.to_string())?;
                if v.value(&word.period).map_err(|e| e.to_string())? != v.spec().identity() {
                    return Err("beating cycle value is not the identity".into());
                }
            }
            other => return Err(format!("positional Alice not beaten: {other:?}")),
        }
    }
    let alt = report.verdict("counterexample.alternating-wins").ok_or("missing verdict")?;
    let ramsey = report.verdict("ramsey.distinct-prefixes").ok_or("missing verdict")?;
    if ramsey.cases != 64 {
        return Err(format!("ramsey check covered {} paths", ramsey.cases));
    }
    Ok(format!("2 positional strategies beaten, alternating wins over {} plays, 64 paths", alt.cases))
}

fn oracle() -> Outcome {
    all_pass(&oracle_checks().map_err(|e| e.to_string())?)
}

fn order_axioms() -> Outcome {
    let opts = CheckOptions::default();
    let reports = order_checks(&opts).map_err(|e| e.to_string())?;
    let free: Vec<CheckReport> = reports.into_iter().filter(|r| r.name.contains("free(")).collect();
    if free.iter().any(|r| r.cases != 10_000) {
        return Err("expected 10^4 samples per law".into());
    }
    all_pass(&free)
}

fn closure() -> Outcome {
    all_pass(&closure_checks(6).map_err(|e| e.to_string())?)
}

/// Parity winner from the definition: Alice wins iff she has a positional
/// strategy whose plays against every positional Bob see an odd maximum
/// priority on the cycle.
fn parity() -> Outcome {
    let cond = parity_as_etog(3).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut nodes = 0;
    for i in 0..100 {
        let n = rng.gen_range(1..=5);
        let arena = random_arena(&mut rng, n, 3, &["1", "2", "3"]);
        let solved = solve_positional(&arena, &cond).map_err(|e| e.to_string())?;
        let sigmas = PositionalStrategy::enumerate(&arena, Player::Alice);
        let taus = PositionalStrategy::enumerate(&arena, Player::Bob);
        for v in 0..n {
            let alice = sigmas.iter().any(|sigma| {
                taus.iter().all(|tau| {
                    let lasso = play_lasso(&arena, v, sigma, tau).expect("valid strategies");
                    let top = lasso.cycle_colors(&arena).iter().map(|c| c.parse::<u8>().unwrap()).max();
                    top.unwrap() % 2 == 1
                })
            });
            if alice != (solved.winners[v] == Player::Alice) {
                return Err(format!("arena {i}, node {v}:\n{}", arena.to_text()));
            }
            nodes += 1;
        }
    }
    Ok(format!("100 arenas, {nodes} nodes"))
}

fn non_permuting() -> Outcome {
    let member = |period: &str| -> Result<bool, String> {
        let r = cmd_membership("etog(@free_ab.val)", "", period).map_err(|e| e.to_string())?;
        Ok(r.results.iter().any(|(k, v)| k == "member" && v == "true"))
    };
    if member("a a^-1 b b^-1")? {
        return Err("a a^-1 b b^-1 reported as member".into());
    }
    let ab = member("a b a^-1 b^-1")?;
    let ba = member("b a b^-1 a^-1")?;
    if ab == ba {
        return Err(format!("commutators: ab={ab} ba={ba}"));
    }
    Ok(format!("member: {}", if ba { "b a b^-1 a^-1" } else { "a b a^-1 b^-1" }))
}

fn fairly_mixing() -> Outcome {
    let reports = mixing_checks(0, 1000).map_err(|e| e.to_string())?;
    for r in &reports {
        if r.name.starts_with("fairly-mixing.") && r.cases < 1000 {
            return Err(format!("{} ran {} instances", r.name, r.cases));
        }
    }
    if reports.iter().all(|r| r.name != "control.prefix-dependent-fails-A") {
        return Err("prefix-dependent control missing".into());
    }
    all_pass(&reports)
}

fn subsemigroup() -> Outcome {
    let reports = subsemigroup_checks().map_err(|e| e.to_string())?;
    if !reports[0].bound.starts_with("|g|<=4") {
        return Err(format!("unexpected bound {}", reports[0].bound));
    }
    all_pass(&reports)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "counterexample reproduction", 10, counterexample),
        (2, "oracle equivalence", 60, oracle),
        (3, "Magnus order axioms", 30, order_axioms),
        (4, "closure laws", 60, closure),
        (5, "parity equivalence", 120, parity),
        (6, "non-permuting witness", 10, non_permuting),
        (7, "fairly-mixing battery", 60, fairly_mixing),
        (8, "invariant sub-semigroup", 30, subsemigroup),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let ok = outcome.is_ok() && in_time;
        let detail = match &outcome {
            Ok(s) => s.clone(),
            Err(e) => e.replace('\n', " | "),
        };
        println!(
            "criterion {n} {:<28} {} {:>8.2?} (limit {limit}s) {detail}",
            name,
            if ok { "PASS" } else { "FAIL" },
            elapsed
        );
        if !ok {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
