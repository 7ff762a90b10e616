//! Command implementations behind the `etog` binary. Each command returns a
//! [`RunReport`]; the binary only parses arguments and prints.

use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use etog_core::condition::laws::{
    check_closure, check_fairly_mixing, check_invariant_subsemigroup, check_oracle_equivalence, check_word_set,
    MixingConfig,
};
use etog_core::condition::{
    parity_as_etog, parse_condition, Condition, ConditionError, EtogCondition, PeriodicCondition, PredicateCondition,
    UnionCondition, UpWord, Valuation,
};
use etog_core::game::{
    alternating, one_player_lifting_check, play_lasso, ramsey_distinct_check, solve_positional, verify_against_bob,
    Arena, Player, PositionalStrategy, Verdict,
};
use etog_core::group::axioms::{check_order_axioms, AxiomConfig};
use etog_core::group::{GroupSpec, ScanOrder};
use etog_core::{CheckReport, RunReport};

/// Files shipped with the binary, addressable as `@<name>`.
pub const DATA: &[(&str, &str)] = &[
    ("counterexample.arena", include_str!("../data/counterexample.arena")),
    ("free_ab.val", include_str!("../data/free_ab.val")),
    ("gadget.arena", include_str!("../data/gadget.arena")),
    ("gadget.val", include_str!("../data/gadget.val")),
    ("two_loops.arena", include_str!("../data/two_loops.arena")),
    ("int_xy.val", include_str!("../data/int_xy.val")),
    ("parity.arena", include_str!("../data/parity.arena")),
];

/// Reads a file, or a shipped file when `path` is `@<name>`.
pub fn read_input(path: &str) -> Result<String, ConditionError> {
    if let Some(name) = path.strip_prefix('@') {
        return DATA
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| text.to_string())
            .ok_or_else(|| ConditionError::Io {
                path: path.to_string(),
                message: "no such shipped file".into(),
            });
    }
    std::fs::read_to_string(Path::new(path)).map_err(|e| ConditionError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })
}

pub fn load_condition(spec: &str) -> Result<Condition> {
    parse_condition(spec, &read_input).with_context(|| format!("cannot load condition `{spec}`"))
}

pub fn load_arena(path: &str) -> Result<Arena> {
    let text = read_input(path)?;
    Arena::parse(&text).with_context(|| format!("cannot load arena `{path}`"))
}

/// The two-circle arena's colors read in the free group on `a, b`.
pub fn free_valuation() -> Valuation {
    Valuation::parse(include_str!("../data/free_ab.val")).expect("shipped valuation parses")
}

/// `W1 ∪ W2`: the free valuation under the Magnus order and under its reverse.
pub fn counterexample_union() -> UnionCondition {
    let w1 = EtogCondition::new(free_valuation());
    UnionCondition::new(vec![w1.clone(), w1.inverted()]).expect("same alphabet")
}

pub fn cmd_compare(spec: &str, a: &str, b: &str) -> Result<RunReport> {
    let start = Instant::now();
    let g: GroupSpec = spec.parse().with_context(|| format!("bad group `{spec}`"))?;
    let x = g.parse_element(a).with_context(|| format!("bad element `{a}`"))?;
    let y = g.parse_element(b).with_context(|| format!("bad element `{b}`"))?;
    let mut r = RunReport::new("compare");
    r.input("group", g.to_string()).input("a", a).input("b", b);
    r.result("ordering", format!("{:?}", g.compare(&x, &y)?));
    r.duration = start.elapsed();
    Ok(r)
}

pub fn cmd_membership(cond: &str, prefix: &str, period: &str) -> Result<RunReport> {
    let start = Instant::now();
    let c = load_condition(cond)?;
    let alphabet = c.alphabet();
    let w = UpWord::new(alphabet.parse_word(prefix)?, alphabet.parse_word(period)?)?;
    let mut r = RunReport::new("membership");
    r.input("condition", c.describe())
        .input("prefix", alphabet.format_word(&w.prefix))
        .input("period", alphabet.format_word(&w.period));
    let member = c.contains(&w)?;
    r.result("member", member.to_string());
    let members = match &c {
        Condition::Etog(e) => vec![e.clone()],
        Condition::Union(u) => u.members().to_vec(),
    };
    for (i, m) in members.iter().enumerate() {
        let v = m.valuation();
        let value = v.value(&w.period)?;
        let key = if members.len() == 1 { String::new() } else { format!("[{i}]") };
        r.result(format!("value{key}"), v.spec().format(&value));
        r.result(format!("sign{key}"), format!("{:?}", v.spec().sign(&value)?));
    }
    r.duration = start.elapsed();
    Ok(r)
}

pub fn cmd_solve(arena_path: &str, cond: &str) -> Result<RunReport> {
    let start = Instant::now();
    let arena = load_arena(arena_path)?;
    let c = match load_condition(cond)? {
        Condition::Etog(c) => c,
        Condition::Union(_) => bail!(
            "`solve` handles a single energy condition only: unions are not positional in general. \
             Use `counterexample` for the bounded analysis of a union."
        ),
    };
    arena.color_ids(c.alphabet())?;
    let s = solve_positional(&arena, &c)?;
    let mut r = RunReport::new("solve");
    r.input("arena", arena_path).input("condition", c.describe());
    for (v, w) in s.winners.iter().enumerate() {
        r.result(format!("winner[{}]", arena.node(v).name), w.to_string());
    }
    r.note("Alice witness:");
    for line in s.alice.to_lines(&arena) {
        r.note(format!("  {line}"));
    }
    r.note("Bob witness:");
    for line in s.bob.to_lines(&arena) {
        r.note(format!("  {line}"));
    }
    r.push(witness_check(&arena, &c, &s.alice, &s.region(Player::Alice), Player::Alice)?);
    r.push(witness_check(&arena, &c, &s.bob, &s.region(Player::Bob), Player::Bob)?);
    r.duration = start.elapsed();
    Ok(r)
}

/// Replays the witness of `owner` against every positional strategy of the
/// opponent from every node of its region.
fn witness_check(
    arena: &Arena,
    cond: &EtogCondition,
    witness: &PositionalStrategy,
    region: &[usize],
    owner: Player,
) -> Result<CheckReport> {
    let name = format!("solve.witness[{owner}]");
    let opponents = PositionalStrategy::enumerate(arena, owner.opponent());
    let bound = format!("opponents={},nodes={}", opponents.len(), region.len());
    let mut cases = 0;
    for &v in region {
        for other in &opponents {
            cases += 1;
            let lasso = match owner {
                Player::Alice => play_lasso(arena, v, witness, other)?,
                Player::Bob => play_lasso(arena, v, other, witness)?,
            };
            let alice_wins = cond.contains(&lasso.up_word(arena, cond.alphabet())?)?;
            if alice_wins != (owner == Player::Alice) {
                let cx = format!("from {}: {}", arena.node(v).name, lasso.display(arena));
                return Ok(CheckReport::fail(name, bound, cases, cx));
            }
        }
    }
    Ok(CheckReport::pass(name, bound, cases))
}

pub fn cmd_counterexample(bob_memory: usize, ramsey_depth: usize) -> Result<RunReport> {
    if bob_memory < 2 || ramsey_depth < 2 {
        bail!("--bob-memory and --ramsey-depth must be at least 2");
    }
    let start = Instant::now();
    let arena = Arena::parse(include_str!("../data/counterexample.arena"))?;
    let union = counterexample_union();
    let v = free_valuation();
    let sq = arena.node_id("sq").expect("shipped arena has sq");
    let mut r = RunReport::new("counterexample");
    r.input("arena", "@counterexample.arena")
        .input("condition", union.describe())
        .input("bob-memory", bob_memory.to_string())
        .input("ramsey-depth", ramsey_depth.to_string());

    // Each positional Alice strategy loses to a Bob with two memory states.
    for sigma in PositionalStrategy::enumerate(&arena, Player::Alice) {
        let edge = sigma.edge_at(sq).expect("Alice owns sq");
        let side = arena.node(arena.edge(edge).target).name.clone();
        let name = format!("counterexample.positional-beaten[sq->{side}]");
        let bound = "bob-memory<=2";
        let check = match verify_against_bob(&arena, &union, sq, &sigma, 2)? {
            Verdict::BeatenBy { bob, lasso, .. } => {
                let word = lasso.up_word(&arena, v.alphabet())?;
                let value = v.value(&word.period)?;
                r.note(format!("always {side}: beaten, play {}", lasso.display(&arena)));
                r.note(format!("  cycle value {}", v.spec().format(&value)));
                for line in bob.to_lines(&arena) {
                    r.note(format!("  bob {line}"));
                }
                if value == v.spec().identity() {
                    CheckReport::pass(name, bound, 1)
                } else {
                    let cx = format!("beating cycle has value {}", v.spec().format(&value));
                    CheckReport::fail(name, bound, 1, cx)
                }
            }
            Verdict::WinsWithinBound { explored, .. } => {
                CheckReport::fail(name, bound, explored, "no Bob strategy with 2 states beats it")
            }
        };
        r.push(check);
    }

    // Alternating between the circles survives every bounded Bob.
    let alice = alternating(&arena, Player::Alice)?;
    let name = "counterexample.alternating-wins";
    let bound = format!("bob-memory<={bob_memory}");
    let check = match verify_against_bob(&arena, &union, sq, &alice, bob_memory)? {
        Verdict::WinsWithinBound { explored, .. } => {
            r.note(format!("alternating Alice: wins against all {explored} plays with Bob memory <= {bob_memory}"));
            CheckReport::pass(name, bound, explored)
        }
        Verdict::BeatenBy { lasso, .. } => {
            CheckReport::fail(name, bound, 1, format!("beaten by play {}", lasso.display(&arena)))
        }
    };
    r.push(check);

    r.push(ramsey_distinct_check(ramsey_depth));

    // Control: each member alone is solved by positional strategies.
    for (i, member) in union.members().iter().enumerate() {
        let name = format!("counterexample.member-positional[W{}]", i + 1);
        let bound = "all positional pairs";
        match solve_positional(&arena, member) {
            Ok(s) => {
                let table: Vec<String> = s
                    .winners
                    .iter()
                    .enumerate()
                    .map(|(v, w)| format!("{}={w}", arena.node(v).name))
                    .collect();
                r.note(format!("W{} alone: {}", i + 1, table.join(" ")));
                r.push(CheckReport::pass(name, bound, s.profiles));
            }
            Err(e) => r.push(CheckReport::fail(name, bound, 0, e.to_string())),
        }
    }

    if r.passed() {
        r.note("union not half-positional (within stated bounds)");
    }
    r.duration = start.elapsed();
    Ok(r)
}

/// Budgets for the `check` battery.
#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub seed: u64,
    /// Word length for the closure laws.
    pub max_len: usize,
    /// Random triples per group for the order axioms.
    pub order_samples: usize,
    /// Instances per fairly-mixing condition.
    pub mixing_samples: usize,
    /// Misorder two Magnus monomials to show the order checks can fail.
    pub inject_fault: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 0,
            max_len: 6,
            order_samples: 10_000,
            mixing_samples: 1_000,
            inject_fault: false,
        }
    }
}

/// The named valuations the battery runs over.
pub fn suite_valuations() -> Vec<(&'static str, Valuation)> {
    let int4 = Valuation::from_literals(GroupSpec::Int, &[("x", "-2"), ("y", "-1"), ("z", "1"), ("w", "3")])
        .expect("literal valuation");
    let zlex = Valuation::from_literals(
        GroupSpec::LexVec(2),
        &[("p", "(1,-3)"), ("q", "(0,1)"), ("r", "(-1,2)"), ("s", "(0,-1)")],
    )
    .expect("literal valuation");
    let free = free_valuation();
    vec![
        ("int", int4),
        ("zlex2", zlex),
        ("free", free.clone()),
        ("inv-free", free.inverse_order()),
        ("parity3", parity_as_etog(3).expect("d >= 1").valuation().clone()),
        ("strict-free", free.strictify()),
    ]
}

pub fn order_checks(opts: &CheckOptions) -> Result<Vec<CheckReport>> {
    let cfg = AxiomConfig {
        samples: opts.order_samples,
        max_len: 6,
        seed: opts.seed,
        scan: if opts.inject_fault { ScanOrder::Faulty } else { ScanOrder::DegLex },
    };
    let mut out = Vec::new();
    for spec in ["free(a,b)", "free(a,b,c)", "inv(free(a,b))", "prod(int,free(a,b))", "int", "zlex(3)"] {
        let g: GroupSpec = spec.parse().expect("suite group parses");
        out.extend(check_order_axioms(&g, &cfg)?);
    }
    Ok(out)
}

pub fn closure_checks(max_len: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (name, v) in suite_valuations() {
        let p = |w: &[usize]| v.is_negative(w);
        out.push(check_closure(&format!("closure[{name}]"), v.alphabet(), max_len, p)?);
    }
    Ok(out)
}

pub fn oracle_checks() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (name, v) in suite_valuations() {
        if matches!(name, "int" | "zlex2" | "free" | "inv-free") {
            out.push(check_oracle_equivalence(&EtogCondition::new(v), 5, 50)?);
        }
    }
    Ok(out)
}

pub fn mixing_checks(seed: u64, samples: usize) -> Result<Vec<CheckReport>> {
    let cfg = MixingConfig {
        samples,
        seed,
        ..MixingConfig::default()
    };
    let mut out = Vec::new();
    for (_, v) in suite_valuations() {
        out.extend(check_fairly_mixing(&EtogCondition::new(v), &cfg)?);
    }

    // A prefix-dependent condition must break (A).
    let alphabet = free_valuation().alphabet().clone();
    let control = PredicateCondition::new(alphabet, "second-letter-is-eps", |w: &UpWord| w.letter(1) == 0);
    let a = check_fairly_mixing(&control, &cfg)?.remove(0);
    out.push(expect_failure("control.prefix-dependent-fails-A", a));

    // The union of the two orders must break (C).
    let c = check_fairly_mixing(&counterexample_union(), &cfg)?.remove(2);
    out.push(expect_failure("control.union-fails-C", c));
    Ok(out)
}

pub fn subsemigroup_checks() -> Result<Vec<CheckReport>> {
    let v = free_valuation();
    let mut out = vec![check_invariant_subsemigroup(&v, 4)?];
    let even = check_word_set("even-length", v.alphabet(), 3, |w| w.len() % 2 == 0);
    out.push(expect_failure("control.even-length-not-invariant", even));
    Ok(out)
}

/// A negative control passes when the wrapped check fails.
pub fn expect_failure(name: &str, inner: CheckReport) -> CheckReport {
    match inner.counterexample {
        Some(_) => CheckReport::pass(name, format!("{};expected-failure-seen", inner.bound), inner.cases),
        None => CheckReport::fail(name, inner.bound, inner.cases, "control unexpectedly passed"),
    }
}

pub fn cmd_check(opts: &CheckOptions) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("check");
    r.input("seed", opts.seed.to_string())
        .input("max-len", opts.max_len.to_string())
        .input("order-samples", opts.order_samples.to_string())
        .input("mixing-samples", opts.mixing_samples.to_string())
        .input("inject-fault", opts.inject_fault.to_string());
    r.extend(order_checks(opts)?);
    r.extend(closure_checks(opts.max_len)?);
    r.extend(oracle_checks()?);
    r.extend(mixing_checks(opts.seed, opts.mixing_samples)?);
    r.extend(subsemigroup_checks()?);
    r.push(one_player_lifting_check(&counterexample_union(), 200, 5, opts.seed)?);
    r.duration = start.elapsed();
    Ok(r)
}
