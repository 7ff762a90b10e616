use rayon::prelude::*;

use super::arena::{Arena, EdgeId, NodeId, Player};
use super::play::Lasso;
use super::strategy::PositionalStrategy;
use super::GameError;
use crate::condition::{ColorId, PeriodicCondition, UpWord};

/// Largest number of positional profiles the solver will enumerate.
pub const MAX_PROFILES: u64 = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Winner of every node, indexed by node.
    pub winners: Vec<Player>,
    /// Alice's lexicographically first positional strategy winning from every
    /// node she wins.
    pub alice: PositionalStrategy,
    /// Bob's lexicographically first positional strategy winning from every
    /// node he wins.
    pub bob: PositionalStrategy,
    /// Number of (Alice, Bob) strategy pairs evaluated.
    pub profiles: u64,
}

impl Solution {
    pub fn region(&self, player: Player) -> Vec<NodeId> {
        (0..self.winners.len()).filter(|&v| self.winners[v] == player).collect()
    }
}

/// Solves the game by enumerating every pair of positional strategies.
///
/// Alice wins a play iff its color sequence is in `cond`. The answer is the
/// true winner only when both players have optimal positional strategies for
/// `cond`, which holds for energy conditions over totally ordered groups and
/// hence for parity. For other conditions it is the winner of the game
/// restricted to positional play.
pub fn solve_positional(arena: &Arena, cond: &dyn PeriodicCondition) -> Result<Solution, GameError> {
    let colors = arena.color_ids(cond.alphabet())?;
    let alice_all = PositionalStrategy::enumerate_bounded(arena, Player::Alice, MAX_PROFILES)?;
    let bob_all = PositionalStrategy::enumerate_bounded(arena, Player::Bob, MAX_PROFILES)?;
    let profiles = alice_all.len() as u64 * bob_all.len() as u64;
    if profiles > MAX_PROFILES {
        return Err(GameError::TooLarge(format!("{profiles} positional profiles")));
    }
    let n = arena.nodes().len();

    // rows[i][j * n + v]: Alice wins from v under (alice_all[i], bob_all[j]).
    let rows: Vec<Vec<bool>> = alice_all
        .par_iter()
        .map(|sigma| {
            let mut row = Vec::with_capacity(bob_all.len() * n);
            for tau in &bob_all {
                let next: Vec<EdgeId> = (0..n)
                    .map(|v| match arena.owner(v) {
                        Player::Alice => sigma.edge_at(v),
                        Player::Bob => tau.edge_at(v),
                    })
                    .map(|e| e.expect("positional strategies cover their nodes"))
                    .collect();
                for v in 0..n {
                    row.push(outcome(arena, cond, &colors, &next, v)?);
                }
            }
            Ok(row)
        })
        .collect::<Result<_, GameError>>()?;

    let alice_wins = |v: NodeId| rows.iter().any(|row| (0..bob_all.len()).all(|j| row[j * n + v]));
    let winners: Vec<Player> = (0..n)
        .map(|v| if alice_wins(v) { Player::Alice } else { Player::Bob })
        .collect();

    let alice_region: Vec<NodeId> = (0..n).filter(|&v| winners[v] == Player::Alice).collect();
    let bob_region: Vec<NodeId> = (0..n).filter(|&v| winners[v] == Player::Bob).collect();
    let sigma = rows
        .iter()
        .position(|row| alice_region.iter().all(|&v| (0..bob_all.len()).all(|j| row[j * n + v])))
        .ok_or(GameError::NoUniformWitness(Player::Alice))?;
    let tau = (0..bob_all.len())
        .find(|&j| bob_region.iter().all(|&v| rows.iter().all(|row| !row[j * n + v])))
        .ok_or(GameError::NoUniformWitness(Player::Bob))?;

    Ok(Solution {
        winners,
        alice: alice_all[sigma].clone(),
        bob: bob_all[tau].clone(),
        profiles,
    })
}

/// Lasso from `start` when every node follows `next`.
pub(crate) fn positional_lasso(arena: &Arena, next: &[EdgeId], start: NodeId) -> Lasso {
    let mut at = vec![usize::MAX; next.len()];
    let mut edges = Vec::new();
    let mut v = start;
    while at[v] == usize::MAX {
        at[v] = edges.len();
        edges.push(next[v]);
        v = arena.edge(next[v]).target;
    }
    let cycle = edges.split_off(at[v]);
    Lasso { stem: edges, cycle }
}

fn outcome(
    arena: &Arena,
    cond: &dyn PeriodicCondition,
    colors: &[ColorId],
    next: &[EdgeId],
    start: NodeId,
) -> Result<bool, GameError> {
    let lasso = positional_lasso(arena, next, start);
    let word = UpWord::new(
        lasso.stem.iter().map(|&e| colors[e]).collect(),
        lasso.cycle.iter().map(|&e| colors[e]).collect(),
    )?;
    Ok(cond.contains(&word)?)
}

impl PositionalStrategy {
    /// [`PositionalStrategy::enumerate`], refusing to build more than `limit`.
    pub fn enumerate_bounded(arena: &Arena, owner: Player, limit: u64) -> Result<Vec<Self>, GameError> {
        let count = PositionalStrategy::count(arena, owner) as u64;
        if count > limit {
            return Err(GameError::TooLarge(format!("{count} positional strategies for {owner}")));
        }
        Ok(PositionalStrategy::enumerate(arena, owner))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::condition::{parity_as_etog, EtogCondition, Valuation};
    use crate::group::GroupSpec;

    fn int_cond(pairs: &[(&str, &str)]) -> EtogCondition {
        EtogCondition::new(Valuation::from_literals(GroupSpec::Int, pairs).unwrap())
    }

    #[test]
    fn single_node_negative_loop_is_alice() {
        let arena = Arena::parse("node only B\nedge only x only").unwrap();
        let s = solve_positional(&arena, &int_cond(&[("x", "-1")])).unwrap();
        assert_eq!(s.winners, vec![Player::Alice]);
        let s = solve_positional(&arena, &int_cond(&[("x", "0")])).unwrap();
        assert_eq!(s.winners, vec![Player::Bob]);
    }

    #[test]
    fn alice_picks_the_decreasing_loop() {
        // From s Alice chooses between a loop of weight -1 and one of +1.
        let arena = Arena::parse(
            "node s A\nnode l B\nnode r B\n\
             edge s x r\nedge s x l\nedge l y s\nedge r z s",
        )
        .unwrap();
        let cond = int_cond(&[("x", "0"), ("y", "-1"), ("z", "1")]);
        let s = solve_positional(&arena, &cond).unwrap();
        assert_eq!(s.winners, vec![Player::Alice; 3]);
        assert_eq!(s.alice.edge_at(0), Some(1));
        assert_eq!(s.profiles, 2);
    }

    #[test]
    fn bob_escapes_to_positive_loop() {
        let arena = Arena::parse(
            "node b B\nnode t A\n\
             edge b x b\nedge b y t\nedge t z t",
        )
        .unwrap();
        let cond = int_cond(&[("x", "1"), ("y", "0"), ("z", "-1")]);
        let s = solve_positional(&arena, &cond).unwrap();
        assert_eq!(s.winners, vec![Player::Bob, Player::Alice]);
        assert_eq!(s.bob.edge_at(0), Some(0));
    }

    #[test]
    fn two_loop_node_follows_its_owner() {
        let cond = int_cond(&[("x", "-1"), ("y", "1")]);
        let a = Arena::parse("node s A\nedge s x s\nedge s y s").unwrap();
        let s = solve_positional(&a, &cond).unwrap();
        assert_eq!(s.winners, vec![Player::Alice]);
        assert_eq!(s.alice.edge_at(0), Some(0));
        let b = Arena::parse("node s B\nedge s x s\nedge s y s").unwrap();
        let s = solve_positional(&b, &cond).unwrap();
        assert_eq!(s.winners, vec![Player::Bob]);
        assert_eq!(s.bob.edge_at(0), Some(1));
    }

    #[test]
    fn two_cycle_gadget_with_negative_cycles() {
        // Bob owns everything; both cycles through c are negative, so every
        // mix of them is too.
        let arena = Arena::parse(
            "node c B\nnode p B\nnode q B\n\
             edge c x p\nedge p o c\nedge c y q\nedge q o c",
        )
        .unwrap();
        let cond = int_cond(&[("x", "-1"), ("y", "-2"), ("o", "0")]);
        let s = solve_positional(&arena, &cond).unwrap();
        assert_eq!(s.winners, vec![Player::Alice; 3]);
    }

    #[test]
    fn parity_game() {
        // Bob at u chooses between priority 2 and priority 3 loops.
        let arena = Arena::parse("node u B\nedge u 2 u\nedge u 3 u").unwrap();
        let s = solve_positional(&arena, &parity_as_etog(3).unwrap()).unwrap();
        assert_eq!(s.winners, vec![Player::Bob]);
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let arena = Arena::parse("node only B\nedge only w only").unwrap();
        assert!(matches!(
            solve_positional(&arena, &int_cond(&[("x", "1")])),
            Err(GameError::Arena(_))
        ));
    }
}
