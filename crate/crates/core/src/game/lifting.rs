use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arena::{Arena, NodeId, Player};
use super::solve::solve_positional;
use super::GameError;
use crate::condition::{UnionCondition, Valuation};
use crate::report::CheckReport;

/// On random arenas without Bob nodes, checks that positional play decides
/// the union game: Alice wins positionally from `v` iff some simple cycle
/// reachable from `v` has non-identity value under the first member's
/// valuation. The union is assumed to be a valuation together with its
/// inverse order, so "non-identity" is exactly "in one of the members".
pub fn one_player_lifting_check(
    cond: &UnionCondition,
    samples: usize,
    max_nodes: usize,
    seed: u64,
) -> Result<CheckReport, GameError> {
    let name = "lifting.one-player-positional";
    let bound = format!("arenas={samples},nodes<={max_nodes},out<=3,seed={seed}");
    let v = cond.members()[0].valuation();
    let colors: Vec<&str> = v.alphabet().names().iter().map(String::as_str).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let n = rng.gen_range(1..=max_nodes);
        let arena = alice_only(&super::random_arena(&mut rng, n, 3, &colors));
        let solution = solve_positional(&arena, cond)?;
        for s in 0..n {
            let oracle = nonzero_cycle_reachable(&arena, v, s)?;
            if oracle != (solution.winners[s] == Player::Alice) {
                return Ok(CheckReport::fail(
                    name,
                    bound,
                    i as u64 + 1,
                    format!(
                        "node {} (oracle says Alice {}):\n{}",
                        arena.node(s).name,
                        if oracle { "wins" } else { "loses" },
                        arena.to_text()
                    ),
                ));
            }
        }
    }
    Ok(CheckReport::pass(name, bound, samples as u64))
}

fn alice_only(arena: &Arena) -> Arena {
    let nodes: Vec<(String, Player)> = arena.nodes().iter().map(|n| (n.name.clone(), Player::Alice)).collect();
    let edges: Vec<(String, String, String)> = arena
        .edges()
        .iter()
        .map(|e| {
            (
                arena.node(e.source).name.clone(),
                e.color.clone(),
                arena.node(e.target).name.clone(),
            )
        })
        .collect();
    Arena::new(&nodes, &edges).expect("same shape as a valid arena")
}

/// Whether a simple cycle with non-identity value is reachable from `start`.
pub fn nonzero_cycle_reachable(arena: &Arena, v: &Valuation, start: NodeId) -> Result<bool, GameError> {
    let n = arena.nodes().len();
    let mut reach = vec![false; n];
    let mut stack = vec![start];
    reach[start] = true;
    while let Some(u) = stack.pop() {
        for &e in arena.out_edges(u) {
            let t = arena.edge(e).target;
            if !reach[t] {
                reach[t] = true;
                stack.push(t);
            }
        }
    }
    let color_of = arena.color_ids(v.alphabet())?;
    let identity = v.spec().identity();
    for root in (0..n).filter(|&u| reach[u]) {
        // Simple cycles through `root` whose other nodes are all larger, so
        // each cycle is enumerated from its smallest node.
        let mut path = Vec::new();
        let mut on_path = vec![false; n];
        if cycle_search(arena, &color_of, v, &identity, root, root, &mut path, &mut on_path)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[allow(clippy::too_many_arguments)]
fn cycle_search(
    arena: &Arena,
    color_of: &[usize],
    v: &Valuation,
    identity: &crate::group::Element,
    root: NodeId,
    at: NodeId,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> Result<bool, GameError> {
    for &e in arena.out_edges(at) {
        let t = arena.edge(e).target;
        path.push(color_of[e]);
        if t == root {
            if v.value(path)? != *identity {
                return Ok(true);
            }
        } else if t > root && !on_path[t] {
            on_path[t] = true;
            let found = cycle_search(arena, color_of, v, identity, root, t, path, on_path)?;
            on_path[t] = false;
            if found {
                return Ok(true);
            }
        }
        path.pop();
    }
    Ok(false)
}
