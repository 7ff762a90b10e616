use std::collections::HashMap;

use super::arena::{Arena, EdgeId, NodeId, Player};
use super::play::Lasso;
use super::strategy::{MealyStrategy, Strategy};
use super::GameError;
use crate::condition::{ColorId, PeriodicCondition, UpWord};

/// Outcome of checking a fixed Alice strategy against every Bob strategy with
/// bounded memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Alice wins against every Bob Mealy machine with at most `bound` states.
    /// `explored` counts the distinct plays examined.
    WinsWithinBound { bound: usize, explored: u64 },
    /// A Bob machine with at most `bound` states beats Alice with this play.
    BeatenBy {
        bound: usize,
        bob: MealyStrategy,
        lasso: Lasso,
    },
}

impl Verdict {
    pub fn alice_wins(&self) -> bool {
        matches!(self, Verdict::WinsWithinBound { .. })
    }
}

/// Bob machine under construction: entries are added only when the play
/// reaches them, and states are numbered in order of first use, so each
/// machine is explored once up to renaming and unreachable entries.
#[derive(Clone)]
struct Partial {
    moves: HashMap<(usize, NodeId), EdgeId>,
    updates: HashMap<(usize, EdgeId), usize>,
    used: usize,
}

#[derive(Clone)]
struct Walk {
    node: NodeId,
    sa: usize,
    sb: usize,
    seen: HashMap<(NodeId, usize, usize), usize>,
    edges: Vec<EdgeId>,
}

struct Search<'a> {
    arena: &'a Arena,
    cond: &'a dyn PeriodicCondition,
    colors: Vec<ColorId>,
    alice: &'a dyn Strategy,
    bound: usize,
    explored: u64,
}

/// Plays `alice` from `start` against every Bob Mealy machine with at most
/// `bound` states and reports the first one that beats her, in depth-first
/// order over (Bob moves in edge order, Bob updates to existing states before
/// a fresh one).
///
/// Alice wins a play iff its colors are in `cond`.
pub fn verify_against_bob(
    arena: &Arena,
    cond: &dyn PeriodicCondition,
    start: NodeId,
    alice: &dyn Strategy,
    bound: usize,
) -> Result<Verdict, GameError> {
    if alice.owner() != Player::Alice {
        return Err(GameError::Strategy("expected an Alice strategy".into()));
    }
    if bound == 0 {
        return Err(GameError::Strategy("Bob needs at least one memory state".into()));
    }
    if start >= arena.nodes().len() {
        return Err(GameError::UnknownNode(start.to_string()));
    }
    let mut search = Search {
        arena,
        cond,
        colors: arena.color_ids(cond.alphabet())?,
        alice,
        bound,
        explored: 0,
    };
    let partial = Partial {
        moves: HashMap::new(),
        updates: HashMap::new(),
        used: 1,
    };
    let walk = Walk {
        node: start,
        sa: alice.initial(),
        sb: 0,
        seen: HashMap::new(),
        edges: Vec::new(),
    };
    match search.run(partial, walk)? {
        Some((partial, lasso)) => Ok(Verdict::BeatenBy {
            bound,
            bob: search.complete(&partial)?,
            lasso,
        }),
        None => Ok(Verdict::WinsWithinBound {
            bound,
            explored: search.explored,
        }),
    }
}

impl Search<'_> {
    /// Extends the play until it closes or needs an undefined Bob entry, then
    /// branches. Returns the first Bob machine under which Alice loses.
    fn run(&mut self, p: Partial, mut w: Walk) -> Result<Option<(Partial, Lasso)>, GameError> {
        loop {
            let key = (w.node, w.sa, w.sb);
            if let Some(&i) = w.seen.get(&key) {
                self.explored += 1;
                let cycle = w.edges.split_off(i);
                let lasso = Lasso { stem: w.edges, cycle };
                let word = UpWord::new(
                    lasso.stem.iter().map(|&e| self.colors[e]).collect(),
                    lasso.cycle.iter().map(|&e| self.colors[e]).collect(),
                )?;
                return Ok(if self.cond.contains(&word)? { None } else { Some((p, lasso)) });
            }

            let e = match self.arena.owner(w.node) {
                Player::Alice => {
                    let e = self.alice.choose(w.sa, w.node);
                    if self.arena.edge(e).source != w.node {
                        return Err(GameError::Strategy(format!(
                            "Alice's edge {e} does not leave `{}`",
                            self.arena.node(w.node).name
                        )));
                    }
                    e
                }
                Player::Bob => match p.moves.get(&(w.sb, w.node)) {
                    Some(&e) => e,
                    None => {
                        for &e in self.arena.out_edges(w.node) {
                            let mut q = p.clone();
                            q.moves.insert((w.sb, w.node), e);
                            if let Some(found) = self.run(q, w.clone())? {
                                return Ok(Some(found));
                            }
                        }
                        return Ok(None);
                    }
                },
            };

            let next_sb = match p.updates.get(&(w.sb, e)) {
                Some(&t) => t,
                None => {
                    let limit = (p.used + 1).min(self.bound);
                    for t in 0..limit {
                        let mut q = p.clone();
                        q.updates.insert((w.sb, e), t);
                        q.used = q.used.max(t + 1);
                        let mut v = w.clone();
                        v.advance(self.arena, self.alice, e, t);
                        if let Some(found) = self.run(q, v)? {
                            return Ok(Some(found));
                        }
                    }
                    return Ok(None);
                }
            };
            w.advance(self.arena, self.alice, e, next_sb);
        }
    }

    /// Fills unreached entries with defaults: first outgoing edge, stay put.
    fn complete(&self, p: &Partial) -> Result<MealyStrategy, GameError> {
        MealyStrategy::from_fn(
            self.arena,
            Player::Bob,
            p.used,
            |s, v| p.moves.get(&(s, v)).copied().unwrap_or(self.arena.out_edges(v)[0]),
            |s, e| p.updates.get(&(s, e)).copied().unwrap_or(s),
        )
    }
}

impl Walk {
    fn advance(&mut self, arena: &Arena, alice: &dyn Strategy, e: EdgeId, next_sb: usize) {
        self.seen.insert((self.node, self.sa, self.sb), self.edges.len());
        self.edges.push(e);
        self.sa = alice.update(self.sa, e);
        self.sb = next_sb;
        self.node = arena.edge(e).target;
    }
}
