use std::collections::HashMap;

use super::arena::{Arena, EdgeId, NodeId, Player};
use super::strategy::Strategy;
use super::GameError;
use crate::condition::{Alphabet, UpWord};

/// A play `stem · cycle^ω` as edge indices. The cycle is non-empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lasso {
    pub stem: Vec<EdgeId>,
    pub cycle: Vec<EdgeId>,
}

impl Lasso {
    /// Colors of the play as an ultimately periodic word over `alphabet`.
    pub fn up_word(&self, arena: &Arena, alphabet: &Alphabet) -> Result<UpWord, GameError> {
        let color = |e: &EdgeId| alphabet.index(&arena.edge(*e).color);
        let stem = self.stem.iter().map(color).collect::<Result<Vec<_>, _>>()?;
        let cycle = self.cycle.iter().map(color).collect::<Result<Vec<_>, _>>()?;
        Ok(UpWord::new(stem, cycle)?)
    }

    pub fn cycle_colors<'a>(&self, arena: &'a Arena) -> Vec<&'a str> {
        self.cycle.iter().map(|&e| arena.edge(e).color.as_str()).collect()
    }

    pub fn display(&self, arena: &Arena) -> String {
        let colors = |es: &[EdgeId]| {
            es.iter()
                .map(|&e| arena.edge(e).color.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        };
        if self.stem.is_empty() {
            format!("({})^w", colors(&self.cycle))
        } else {
            format!("{} ({})^w", colors(&self.stem), colors(&self.cycle))
        }
    }
}

/// The unique play from `start` when Alice follows `alice` and Bob follows
/// `bob`. The cycle closes at the first repeated (node, Alice state, Bob
/// state) triple, so its length is at most |V| times the two memory sizes.
pub fn play_lasso(
    arena: &Arena,
    start: NodeId,
    alice: &dyn Strategy,
    bob: &dyn Strategy,
) -> Result<Lasso, GameError> {
    if alice.owner() != Player::Alice || bob.owner() != Player::Bob {
        return Err(GameError::Strategy("strategies passed for the wrong players".into()));
    }
    if start >= arena.nodes().len() {
        return Err(GameError::UnknownNode(start.to_string()));
    }
    let mut seen: HashMap<(NodeId, usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let (mut v, mut sa, mut sb) = (start, alice.initial(), bob.initial());
    loop {
        if let Some(&i) = seen.get(&(v, sa, sb)) {
            let cycle = edges.split_off(i);
            return Ok(Lasso { stem: edges, cycle });
        }
        seen.insert((v, sa, sb), edges.len());
        let e = match arena.owner(v) {
            Player::Alice => alice.choose(sa, v),
            Player::Bob => bob.choose(sb, v),
        };
        if arena.edge(e).source != v {
            return Err(GameError::Strategy(format!(
                "edge {e} chosen at node `{}` does not leave it",
                arena.node(v).name
            )));
        }
        edges.push(e);
        sa = alice.update(sa, e);
        sb = bob.update(sb, e);
        v = arena.edge(e).target;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::strategy::{alternating, PositionalStrategy};

    #[test]
    fn positional_play_on_counterexample() {
        let arena = Arena::parse(crate::game::arena::tests::COUNTEREXAMPLE).unwrap();
        let alice = PositionalStrategy::from_local(&arena, Player::Alice, &[0]).unwrap();
        let bob = PositionalStrategy::from_local(&arena, Player::Bob, &[1, 0]).unwrap();
        let lasso = play_lasso(&arena, 0, &alice, &bob).unwrap();
        assert!(lasso.stem.is_empty());
        assert_eq!(lasso.display(&arena), "(eps a^-1)^w");
    }

    #[test]
    fn alternating_alice_visits_both_sides() {
        let arena = Arena::parse(crate::game::arena::tests::COUNTEREXAMPLE).unwrap();
        let alice = alternating(&arena, Player::Alice).unwrap();
        let bob = PositionalStrategy::from_local(&arena, Player::Bob, &[0, 0]).unwrap();
        let lasso = play_lasso(&arena, 0, &alice, &bob).unwrap();
        assert_eq!(lasso.cycle_colors(&arena), vec!["eps", "a", "eps", "b"]);
    }

    #[test]
    fn left_against_alternating_bob() {
        let arena = Arena::parse(crate::game::arena::tests::COUNTEREXAMPLE).unwrap();
        let left = PositionalStrategy::from_local(&arena, Player::Alice, &[0]).unwrap();
        let bob = alternating(&arena, Player::Bob).unwrap();
        let lasso = play_lasso(&arena, 0, &left, &bob).unwrap();
        assert_eq!(lasso.cycle_colors(&arena), vec!["eps", "a", "eps", "a^-1"]);
        assert!(lasso.stem.len() + lasso.cycle.len() <= 3 * 2 + 1);
    }

    #[test]
    fn self_loop_has_empty_stem() {
        let arena = Arena::parse("node only A\nedge only c only").unwrap();
        let alice = PositionalStrategy::from_local(&arena, Player::Alice, &[0]).unwrap();
        let bob = PositionalStrategy::from_local(&arena, Player::Bob, &[]).unwrap();
        let lasso = play_lasso(&arena, 0, &alice, &bob).unwrap();
        assert!(lasso.stem.is_empty());
        assert_eq!(lasso.cycle, vec![0]);
        assert_eq!(play_lasso(&arena, 0, &alice, &bob).unwrap(), lasso);
    }

    #[test]
    fn wrong_owner_is_rejected() {
        let arena = Arena::parse(crate::game::arena::tests::COUNTEREXAMPLE).unwrap();
        let bob = PositionalStrategy::from_local(&arena, Player::Bob, &[0, 0]).unwrap();
        assert!(play_lasso(&arena, 0, &bob, &bob).is_err());
    }
}
