use std::process::{Command, Output};

fn etog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etog"))
        .args(args)
        .env_remove("ETOG_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compare_examples() {
    for (args, expected) in [
        (["free(a,b)", "a b a^-1 b^-1", "e"], "Greater"),
        (["int", "3", "5"], "Less"),
        (["inv(int)", "3", "5"], "Greater"),
    ] {
        let o = etog(&["--machine", "compare", args[0], args[1], args[2]]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), format!("RESULT ordering={expected}\n"));
    }
}

#[test]
fn bad_literal_exits_nonzero() {
    let o = etog(&["compare", "free(a,b)", "a c", "e"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn membership_reports_value_and_sign() {
    let o = etog(&["--machine", "membership", "--cond", "etog(@free_ab.val)", "a b a^-1 b^-1"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "RESULT member=false\nRESULT value=a b a^-1 b^-1\nRESULT sign=Greater\n"
    );
    let o = etog(&["--machine", "membership", "--cond", "etog(@free_ab.val)", "--prefix", "a a", "b a b^-1 a^-1"]);
    assert!(stdout(&o).starts_with("RESULT member=true\n"));
}

#[test]
fn membership_unknown_color_fails() {
    let o = etog(&["membership", "--cond", "etog(@free_ab.val)", "c"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn union_membership_lists_both_members() {
    let cond = "union(etog(@free_ab.val),inv-etog(@free_ab.val))";
    let o = etog(&["--machine", "membership", "--cond", cond, "eps a eps b"]);
    let out = stdout(&o);
    assert!(out.starts_with("RESULT member=true\n"), "{out}");
    assert!(out.contains("RESULT sign[0]=") && out.contains("RESULT sign[1]="));
    let o = etog(&["--machine", "membership", "--cond", cond, "--prefix", "eps", "a eps a^-1 eps"]);
    assert!(stdout(&o).starts_with("RESULT member=false\n"));
}

#[test]
fn solve_examples() {
    let o = etog(&["--machine", "solve", "--arena", "@two_loops.arena", "--cond", "etog(@int_xy.val)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("RESULT winner[s]=Alice"));
    let o = etog(&["solve", "--arena", "@two_loops.arena", "--cond", "etog(@int_xy.val)"]);
    assert!(stdout(&o).contains("s -> 0  (s x s)"));

    let o = etog(&["--machine", "solve", "--arena", "@gadget.arena", "--cond", "etog(@gadget.val)"]);
    let out = stdout(&o);
    for v in ["c", "p", "q"] {
        assert!(out.contains(&format!("RESULT winner[{v}]=Alice")), "{out}");
    }

    let o = etog(&["--machine", "solve", "--arena", "@parity.arena", "--cond", "parity(3)"]);
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("RESULT")).collect::<Vec<_>>(),
        ["RESULT winner[u]=Bob", "RESULT winner[v]=Alice", "RESULT winner[w]=Alice"]
    );
}

#[test]
fn solve_refuses_unions() {
    let o = etog(&[
        "solve",
        "--arena",
        "@counterexample.arena",
        "--cond",
        "union(etog(@free_ab.val),inv-etog(@free_ab.val))",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("counterexample"));
}

#[test]
fn counterexample_passes_and_is_deterministic() {
    let a = etog(&["--machine", "counterexample"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a).lines().filter(|l| l.contains(" PASS ")).count(), 6);
    assert_eq!(stdout(&a), stdout(&etog(&["--machine", "counterexample"])));
    let human = stdout(&etog(&["counterexample"]));
    assert!(human.contains("union not half-positional (within stated bounds)"));
}

#[test]
fn counterexample_larger_bounds() {
    let o = etog(&["--machine", "counterexample", "--bob-memory", "3", "--ramsey-depth", "6"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("bound=depth=6,paths=4096"));
}

#[test]
fn counterexample_rejects_tiny_bounds() {
    assert_eq!(etog(&["counterexample", "--bob-memory", "1"]).status.code(), Some(2));
}

#[test]
fn check_battery_and_seed_independence() {
    let small = ["--machine", "check", "--samples", "500", "--mixing-samples", "200", "--max-len", "4"];
    let a = etog(&small);
    assert!(a.status.success(), "{}", stdout(&a));
    let verdicts = |o: &Output| -> Vec<String> {
        stdout(o)
            .lines()
            .map(|l| l.split(" bound=").next().unwrap().to_string())
            .collect()
    };
    let mut seeded = small.to_vec();
    seeded.extend(["--seed", "77"]);
    let b = etog(&seeded);
    assert_eq!(verdicts(&a), verdicts(&b));
    assert_eq!(stdout(&a), stdout(&etog(&small)));

    let env = Command::new(env!("CARGO_BIN_EXE_etog"))
        .args(small)
        .env("ETOG_SEED", "77")
        .output()
        .unwrap();
    assert_eq!(stdout(&env), stdout(&b));
}

#[test]
fn injected_fault_is_detected() {
    let o = etog(&["--machine", "check", "--inject-fault", "--samples", "3000", "--mixing-samples", "100", "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("CHECK order.bi-invariance[free(a,b)] FAIL"));
}
