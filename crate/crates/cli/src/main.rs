use std::process::ExitCode;

use clap::{Parser, Subcommand};
use etog_cli::{cmd_check, cmd_compare, cmd_counterexample, cmd_membership, cmd_solve, CheckOptions};

#[derive(Parser)]
#[command(name = "etog", version, about = "Energy conditions over totally ordered groups")]
struct Cli {
    /// Print only `RESULT` and `CHECK` lines.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two elements of a group: prints Less, Equal or Greater.
    Compare {
        /// Group, e.g. `int`, `zlex(3)`, `free(a,b)`, `inv(free(a,b))`.
        group: String,
        a: String,
        b: String,
    },
    /// Decide whether `prefix period^w` satisfies a condition.
    Membership {
        /// Condition, e.g. `etog(@free_ab.val)` or `union(etog(f.val),inv-etog(f.val))`.
        #[arg(long)]
        cond: String,
        /// Space-separated colors read once before the period.
        #[arg(long, default_value = "")]
        prefix: String,
        /// Space-separated colors repeated forever.
        period: String,
    },
    /// Solve a game with a single energy condition by positional enumeration.
    Solve {
        #[arg(long)]
        arena: String,
        #[arg(long)]
        cond: String,
    },
    /// Run the property battery.
    Check {
        #[arg(long, env = "ETOG_SEED", default_value_t = 0)]
        seed: u64,
        /// Word length for the closure laws.
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        /// Random triples per group for the order axioms.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Instances per fairly-mixing condition.
        #[arg(long, default_value_t = 1_000)]
        mixing_samples: usize,
        /// Misorder two Magnus monomials; the order checks should then fail.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Reproduce the union counterexample on the two-circle arena.
    Counterexample {
        #[arg(long, default_value_t = 2)]
        bob_memory: usize,
        #[arg(long, default_value_t = 3)]
        ramsey_depth: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match cli.command {
        Command::Compare { group, a, b } => cmd_compare(&group, &a, &b),
        Command::Membership { cond, prefix, period } => cmd_membership(&cond, &prefix, &period),
        Command::Solve { arena, cond } => cmd_solve(&arena, &cond),
        Command::Check {
            seed,
            max_len,
            samples,
            mixing_samples,
            inject_fault,
        } => cmd_check(&CheckOptions {
            seed,
            max_len,
            order_samples: samples,
            mixing_samples,
            inject_fault,
        }),
        Command::Counterexample {
            bob_memory,
            ramsey_depth,
        } => cmd_counterexample(bob_memory, ramsey_depth),
    };
    match report {
        Ok(r) => {
            print!("{}", if cli.machine { r.machine() } else { r.human() });
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
