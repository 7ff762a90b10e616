use std::collections::HashMap;

use super::arena::{Arena, EdgeId, NodeId, Player};
use super::GameError;

/// A finite-memory strategy: a Mealy machine reading every edge of the play.
/// Positional strategies are the one-state case.
pub trait Strategy: Sync {
    fn owner(&self) -> Player;

    fn states(&self) -> usize;

    fn initial(&self) -> usize {
        0
    }

    /// Edge taken at an owned node.
    fn choose(&self, state: usize, node: NodeId) -> EdgeId;

    /// Memory update after any edge of the play, whoever chose it.
    fn update(&self, state: usize, edge: EdgeId) -> usize;
}

/// One fixed outgoing edge per owned node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositionalStrategy {
    owner: Player,
    choice: Vec<Option<EdgeId>>,
}

impl PositionalStrategy {
    /// From a node-name to edge-index map; the edge index is global (edge
    /// declaration order). Every owned node must be covered.
    pub fn new(arena: &Arena, owner: Player, choice: &HashMap<NodeId, EdgeId>) -> Result<Self, GameError> {
        let mut table = vec![None; arena.nodes().len()];
        for v in arena.nodes_of(owner) {
            let e = *choice
                .get(&v)
                .ok_or_else(|| GameError::Strategy(format!("no choice at node `{}`", arena.node(v).name)))?;
            if e >= arena.edges().len() || arena.edge(e).source != v {
                return Err(GameError::Strategy(format!(
                    "edge {e} does not leave node `{}`",
                    arena.node(v).name
                )));
            }
            table[v] = Some(e);
        }
        Ok(PositionalStrategy { owner, choice: table })
    }

    /// Picks, at each owned node in declaration order, the `local[i]`-th
    /// outgoing edge of that node.
    pub fn from_local(arena: &Arena, owner: Player, local: &[usize]) -> Result<Self, GameError> {
        let owned = arena.nodes_of(owner);
        if local.len() != owned.len() {
            return Err(GameError::Strategy(format!(
                "{} choices for {} nodes",
                local.len(),
                owned.len()
            )));
        }
        let mut table = vec![None; arena.nodes().len()];
        for (&v, &i) in owned.iter().zip(local) {
            let e = *arena
                .out_edges(v)
                .get(i)
                .ok_or_else(|| GameError::Strategy(format!("node `{}` has no edge #{i}", arena.node(v).name)))?;
            table[v] = Some(e);
        }
        Ok(PositionalStrategy { owner, choice: table })
    }

    /// Every positional strategy of `owner`, in lexicographic order over
    /// (owned nodes in declaration order, outgoing edges in declaration order),
    /// first node most significant.
    pub fn enumerate(arena: &Arena, owner: Player) -> Vec<PositionalStrategy> {
        let owned = arena.nodes_of(owner);
        let radices: Vec<usize> = owned.iter().map(|&v| arena.out_edges(v).len()).collect();
        let mut out = Vec::new();
        let mut digits = vec![0usize; owned.len()];
        loop {
            out.push(PositionalStrategy::from_local(arena, owner, &digits).expect("digits within radices"));
            let mut i = digits.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < radices[i] {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// Number of positional strategies of `owner`, saturating.
    pub fn count(arena: &Arena, owner: Player) -> usize {
        arena
            .nodes_of(owner)
            .iter()
            .fold(1usize, |acc, &v| acc.saturating_mul(arena.out_edges(v).len()))
    }

    pub fn edge_at(&self, node: NodeId) -> Option<EdgeId> {
        self.choice.get(node).copied().flatten()
    }

    /// `node -> edge-index` lines.
    pub fn to_lines(&self, arena: &Arena) -> Vec<String> {
        self.choice
            .iter()
            .enumerate()
            .filter_map(|(v, e)| e.map(|e| (v, e)))
            .map(|(v, e)| format!("{} -> {e}  ({})", arena.node(v).name, arena.describe_edge(e)))
            .collect()
    }
}

impl Strategy for PositionalStrategy {
    fn owner(&self) -> Player {
        self.owner
    }

    fn states(&self) -> usize {
        1
    }

    fn choose(&self, _state: usize, node: NodeId) -> EdgeId {
        self.choice[node].expect("positional strategy covers its owner's nodes")
    }

    fn update(&self, _state: usize, _edge: EdgeId) -> usize {
        0
    }
}

/// Explicit Mealy machine with state 0 initial. `moves[s][v]` is defined on
/// the owner's nodes; `updates[s][e]` on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MealyStrategy {
    owner: Player,
    moves: Vec<Vec<Option<EdgeId>>>,
    updates: Vec<Vec<usize>>,
}

impl MealyStrategy {
    pub fn from_fn<M, U>(arena: &Arena, owner: Player, states: usize, mut mv: M, mut up: U) -> Result<Self, GameError>
    where
        M: FnMut(usize, NodeId) -> EdgeId,
        U: FnMut(usize, EdgeId) -> usize,
    {
        if states == 0 {
            return Err(GameError::Strategy("a Mealy strategy needs a state".into()));
        }
        let owned = arena.nodes_of(owner);
        let mut moves = vec![vec![None; arena.nodes().len()]; states];
        let mut updates = vec![vec![0; arena.edges().len()]; states];
        for s in 0..states {
            for &v in &owned {
                let e = mv(s, v);
                if e >= arena.edges().len() || arena.edge(e).source != v {
                    return Err(GameError::Strategy(format!(
                        "state {s}: edge {e} does not leave node `{}`",
                        arena.node(v).name
                    )));
                }
                moves[s][v] = Some(e);
            }
            for (e, slot) in updates[s].iter_mut().enumerate() {
                let t = up(s, e);
                if t >= states {
                    return Err(GameError::Strategy(format!("state {s}: update to unknown state {t}")));
                }
                *slot = t;
            }
        }
        Ok(MealyStrategy { owner, moves, updates })
    }

    /// Human-readable transition table.
    pub fn to_lines(&self, arena: &Arena) -> Vec<String> {
        let mut out = Vec::new();
        for (s, row) in self.moves.iter().enumerate() {
            for (v, e) in row.iter().enumerate() {
                if let Some(e) = e {
                    out.push(format!("move  q{s} @ {} -> {}", arena.node(v).name, arena.describe_edge(*e)));
                }
            }
        }
        for (s, row) in self.updates.iter().enumerate() {
            for (e, t) in row.iter().enumerate() {
                if *t != s {
                    out.push(format!("update q{s} on ({}) -> q{t}", arena.describe_edge(e)));
                }
            }
        }
        out
    }
}

impl Strategy for MealyStrategy {
    fn owner(&self) -> Player {
        self.owner
    }

    fn states(&self) -> usize {
        self.moves.len()
    }

    fn choose(&self, state: usize, node: NodeId) -> EdgeId {
        self.moves[state][node].expect("Mealy strategy covers its owner's nodes")
    }

    fn update(&self, state: usize, edge: EdgeId) -> usize {
        self.updates[state][edge]
    }
}

/// Two-state strategy that alternates between the first and second outgoing
/// edge at every owned node with at least two edges, switching memory each
/// time it moves.
pub fn alternating(arena: &Arena, owner: Player) -> Result<MealyStrategy, GameError> {
    MealyStrategy::from_fn(
        arena,
        owner,
        2,
        |s, v| {
            let out = arena.out_edges(v);
            out[s.min(out.len() - 1)]
        },
        |s, e| {
            if arena.owner(arena.edge(e).source) == owner {
                1 - s
            } else {
                s
            }
        },
    )
}
