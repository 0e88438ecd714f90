//! JSON netlist interchange: `{"nodes", "terminals", "edges": [{"a", "b", "re", "im"}]}`.

use fractal_ac::CircuitGraph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Netlist {
    pub nodes: Vec<String>,
    pub terminals: Vec<usize>,
    pub edges: Vec<NetEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NetEdge {
    pub a: usize,
    pub b: usize,
    pub re: f64,
    pub im: f64,
}

impl From<&CircuitGraph> for Netlist {
    fn from(g: &CircuitGraph) -> Self {
        Netlist {
            nodes: g.node_names().to_vec(),
            terminals: g.terminals().iter().map(|t| t.0).collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| NetEdge { a: e.a.0, b: e.b.0, re: e.impedance.re, im: e.impedance.im })
                .collect(),
        }
    }
}

#[cfg(test)]
impl Netlist {
    /// Rebuilds the graph, re-validating every invariant.
    pub fn to_graph(&self) -> fractal_ac::Result<CircuitGraph> {
        let mut g = CircuitGraph::new();
        for name in &self.nodes {
            g.node(name);
        }
        if g.node_count() != self.nodes.len() {
            return Err(fractal_ac::Error::Topology("duplicate node names".into()));
        }
        let check = |id: usize| {
            if id < self.nodes.len() {
                Ok(fractal_ac::NodeId(id))
            } else {
                Err(fractal_ac::Error::Topology(format!("node index {id} out of range")))
            }
        };
        for e in &self.edges {
            g.add_edge(check(e.a)?, check(e.b)?, fractal_ac::Complex::new(e.re, e.im))?;
        }
        let terminals = self.terminals.iter().map(|&t| check(t)).collect::<fractal_ac::Result<Vec<_>>>()?;
        g.set_terminals(&terminals)?;
        Ok(g)
    }
}
