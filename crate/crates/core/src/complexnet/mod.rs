//! Complex-impedance circuit graphs and the brute-force Kirchhoff solver.
//!
//! A [`CircuitGraph`] is an undirected multigraph whose edges carry complex
//! impedances. Parallel edges are kept as-is; the Laplacian assembly sums
//! their admittances.

mod power;
mod solve;
mod ydelta;

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::Complex;

pub use power::{boundary_input_power, power_dissipation, PowerBalance};
pub use solve::{effective_impedance, solve_dirichlet, solve_with_boundary, DirichletSolution};
pub use ydelta::{delta_to_star, star_to_delta, y_delta, YDeltaMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub a: NodeId,
    pub b: NodeId,
    pub impedance: Complex,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CircuitGraph {
    names: Vec<String>,
    index: BTreeMap<String, NodeId>,
    edges: Vec<Edge>,
    terminals: Vec<NodeId>,
}

impl CircuitGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assembles a graph from named parts, validating every invariant except connectivity.
    pub fn from_parts<S: AsRef<str>>(nodes: &[S], terminals: &[S], edges: &[(S, S, Complex)]) -> Result<Self> {
        let mut g = CircuitGraph::new();
        for name in nodes {
            let name = name.as_ref();
            if g.index.contains_key(name) {
                return Err(Error::Topology(format!("duplicate node {name:?}")));
            }
            g.node(name);
        }
        let lookup = |g: &CircuitGraph, name: &str| {
            g.node_id(name).ok_or_else(|| Error::Topology(format!("undeclared node {name:?}")))
        };
        for (a, b, z) in edges {
            let a = lookup(&g, a.as_ref())?;
            let b = lookup(&g, b.as_ref())?;
            g.add_edge(a, b, *z)?;
        }
        let terms = terminals.iter().map(|t| lookup(&g, t.as_ref())).collect::<Result<Vec<_>>>()?;
        g.set_terminals(&terms)?;
        Ok(g)
    }

    /// Returns the node with this ID, creating it if needed.
    pub fn node(&mut self, name: &str) -> NodeId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = NodeId(self.names.len());
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn node_id(&self, name: &str) -> Option<NodeId> {
        self.index.get(name).copied()
    }

    /// Looks up a node by ID, failing with a topology error when absent.
    pub fn require(&self, name: &str) -> Result<NodeId> {
        self.node_id(name).ok_or_else(|| Error::Topology(format!("no node named {name:?}")))
    }

    pub fn name(&self, id: NodeId) -> &str {
        &self.names[id.0]
    }

    pub fn node_names(&self) -> &[String] {
        &self.names
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn add_edge(&mut self, a: NodeId, b: NodeId, impedance: Complex) -> Result<usize> {
        if a.0 >= self.names.len() || b.0 >= self.names.len() {
            return Err(Error::Topology("edge endpoint is not a declared node".into()));
        }
        if a == b {
            return Err(Error::Topology(format!("self-loop at {:?}", self.names[a.0])));
        }
        if !crate::is_finite(impedance) {
            return Err(Error::NonFinite("edge impedance"));
        }
        if impedance.norm() == 0.0 {
            return Err(Error::Param(format!(
                "zero impedance between {:?} and {:?}; contract the nodes instead",
                self.names[a.0], self.names[b.0]
            )));
        }
        self.edges.push(Edge { a, b, impedance });
        Ok(self.edges.len() - 1)
    }

    /// Convenience wrapper creating both endpoints by name.
    pub fn connect(&mut self, a: &str, b: &str, impedance: Complex) -> Result<usize> {
        let a = self.node(a);
        let b = self.node(b);
        self.add_edge(a, b, impedance)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn terminals(&self) -> &[NodeId] {
        &self.terminals
    }

    pub fn set_terminals(&mut self, terminals: &[NodeId]) -> Result<()> {
        for (i, t) in terminals.iter().enumerate() {
            if t.0 >= self.names.len() {
                return Err(Error::Topology("terminal is not a declared node".into()));
            }
            if terminals[..i].contains(t) {
                return Err(Error::Topology(format!("terminal {:?} listed twice", self.names[t.0])));
            }
        }
        self.terminals = terminals.to_vec();
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.names.len();
        if n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = alloc::vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// Per node, the list of `(neighbour, edge index)` pairs.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = alloc::vec![Vec::new(); self.names.len()];
        for (k, e) in self.edges.iter().enumerate() {
            adj[e.a.0].push((e.b.0, k));
            adj[e.b.0].push((e.a.0, k));
        }
        adj
    }
}
