use std::collections::HashMap;
use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::condition::{Alphabet, ColorId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Alice => "Alice",
            Player::Bob => "Bob",
        })
    }
}

pub type NodeId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArenaError {
    #[error("node `{0}` has no outgoing edge")]
    MissingOutgoingEdge(String),
    #[error("node `{0}` declared twice")]
    DuplicateNode(String),
    #[error("edge endpoint `{0}` is not a declared node")]
    UnknownEndpoint(String),
    #[error("edge color `{0}` is not in the alphabet")]
    UnknownColor(String),
    #[error("arena has no nodes")]
    Empty,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub name: String,
    pub owner: Player,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub source: NodeId,
    pub color: String,
    pub target: NodeId,
}

/// A finite two-player arena with colored edges. Every node has an outgoing
/// edge; multi-edges and self-loops are allowed. Nodes and edges keep their
/// declaration order, which fixes the strategy enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arena {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    out: Vec<Vec<EdgeId>>,
}

impl Arena {
    /// Builds an arena from `(name, owner)` nodes and `(source, color, target)`
    /// edges given by node name.
    pub fn new<N, S>(nodes: &[(N, Player)], edges: &[(S, S, S)]) -> Result<Arena, ArenaError>
    where
        N: AsRef<str>,
        S: AsRef<str>,
    {
        if nodes.is_empty() {
            return Err(ArenaError::Empty);
        }
        let mut index: HashMap<&str, NodeId> = HashMap::new();
        let mut out_nodes = Vec::with_capacity(nodes.len());
        for (name, owner) in nodes {
            let name = name.as_ref();
            if index.insert(name, out_nodes.len()).is_some() {
                return Err(ArenaError::DuplicateNode(name.to_string()));
            }
            out_nodes.push(Node {
                name: name.to_string(),
                owner: *owner,
            });
        }
        let mut out = vec![Vec::new(); nodes.len()];
        let mut out_edges = Vec::with_capacity(edges.len());
        for (src, color, dst) in edges {
            let lookup = |n: &str| index.get(n).copied().ok_or_else(|| ArenaError::UnknownEndpoint(n.to_string()));
            let (s, t) = (lookup(src.as_ref())?, lookup(dst.as_ref())?);
            out[s].push(out_edges.len());
            out_edges.push(Edge {
                source: s,
                color: color.as_ref().to_string(),
                target: t,
            });
        }
        if let Some(v) = out.iter().position(Vec::is_empty) {
            return Err(ArenaError::MissingOutgoingEdge(out_nodes[v].name.clone()));
        }
        Ok(Arena {
            nodes: out_nodes,
            edges: out_edges,
            out,
        })
    }

    /// Parses the line format
    ///
    /// ```text
    /// node sq A
    /// node lc B
    /// edge sq eps lc
    /// ```
    ///
    /// with `#` comments. Nodes may be declared after the edges that use them.
    pub fn parse(text: &str) -> Result<Arena, ArenaError> {
        let mut nodes: Vec<(String, Player)> = Vec::new();
        let mut edges: Vec<(String, String, String)> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: &str| ArenaError::Syntax {
                line: n + 1,
                message: message.to_string(),
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["node", name, owner] => {
                    let owner = match *owner {
                        "A" => Player::Alice,
                        "B" => Player::Bob,
                        _ => return Err(syntax("owner must be A or B")),
                    };
                    nodes.push((name.to_string(), owner));
                }
                ["edge", src, color, dst] => edges.push((src.to_string(), color.to_string(), dst.to_string())),
                _ => return Err(syntax("expected `node <name> <A|B>` or `edge <src> <color> <dst>`")),
            }
        }
        Arena::new(&nodes, &edges)
    }

    /// Parses and additionally requires every edge color to be in `alphabet`.
    pub fn parse_with_alphabet(text: &str, alphabet: &Alphabet) -> Result<Arena, ArenaError> {
        let arena = Arena::parse(text)?;
        arena.color_ids(alphabet)?;
        Ok(arena)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for n in &self.nodes {
            let o = if n.owner == Player::Alice { "A" } else { "B" };
            out.push_str(&format!("node {} {o}\n", n.name));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "edge {} {} {}\n",
                self.nodes[e.source].name, e.color, self.nodes[e.target].name
            ));
        }
        out
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node(&self, v: NodeId) -> &Node {
        &self.nodes[v]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn owner(&self, v: NodeId) -> Player {
        self.nodes[v].owner
    }

    pub fn out_edges(&self, v: NodeId) -> &[EdgeId] {
        &self.out[v]
    }

    pub fn node_id(&self, name: &str) -> Option<NodeId> {
        self.nodes.iter().position(|n| n.name == name)
    }

    /// Nodes owned by `player`, in declaration order.
    pub fn nodes_of(&self, player: Player) -> Vec<NodeId> {
        (0..self.nodes.len()).filter(|&v| self.nodes[v].owner == player).collect()
    }

    /// Distinct edge colors in first-use order.
    pub fn colors(&self) -> Vec<&str> {
        let mut seen: Vec<&str> = Vec::new();
        for e in &self.edges {
            if !seen.contains(&e.color.as_str()) {
                seen.push(&e.color);
            }
        }
        seen
    }

    /// The color of every edge as an index into `alphabet`.
    pub fn color_ids(&self, alphabet: &Alphabet) -> Result<Vec<ColorId>, ArenaError> {
        self.edges
            .iter()
            .map(|e| alphabet.index(&e.color).map_err(|_| ArenaError::UnknownColor(e.color.clone())))
            .collect()
    }

    /// `source color target` for humans.
    pub fn describe_edge(&self, e: EdgeId) -> String {
        let edge = &self.edges[e];
        format!(
            "{} {} {}",
            self.nodes[edge.source].name, edge.color, self.nodes[edge.target].name
        )
    }
}

/// Random arena with `nodes` nodes, each with `1..=max_out` outgoing edges to
/// uniform targets and uniform colors from `colors`. Owners are uniform.
pub fn random_arena<R: Rng + ?Sized>(rng: &mut R, nodes: usize, max_out: usize, colors: &[&str]) -> Arena {
    let ns: Vec<(String, Player)> = (0..nodes)
        .map(|i| {
            let owner = if rng.gen_bool(0.5) { Player::Alice } else { Player::Bob };
            (format!("n{i}"), owner)
        })
        .collect();
    let mut es = Vec::new();
    for i in 0..nodes {
        for _ in 0..rng.gen_range(1..=max_out) {
            let c = colors[rng.gen_range(0..colors.len())];
            es.push((format!("n{i}"), c.to_string(), format!("n{}", rng.gen_range(0..nodes))));
        }
    }
    Arena::new(&ns, &es).expect("every generated node has an edge")
}
