use alloc::format;
use alloc::vec::Vec;

use super::{CircuitGraph, NodeId};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::Complex;

/// Equilibrium state of a circuit under Dirichlet boundary data.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletSolution {
    /// Node potentials, indexed by [`NodeId`].
    pub potentials: Vec<Complex>,
    /// Current on each edge, flowing from `edge.a` to `edge.b`.
    pub edge_currents: Vec<Complex>,
    /// Net current injected into the network at each boundary node.
    pub boundary_currents: Vec<(NodeId, Complex)>,
}

impl DirichletSolution {
    pub fn potential(&self, id: NodeId) -> Complex {
        self.potentials[id.0]
    }

    /// Potential of a node looked up by name.
    pub fn potential_of(&self, graph: &CircuitGraph, name: &str) -> Result<Complex> {
        Ok(self.potentials[graph.require(name)?.0])
    }

    pub fn boundary_current(&self, id: NodeId) -> Option<Complex> {
        self.boundary_currents.iter().find(|(n, _)| *n == id).map(|(_, i)| *i)
    }

    /// Largest `|Σ incident currents|` over non-boundary nodes, relative to the
    /// largest edge current (1 when all currents vanish).
    pub fn kcl_residual(&self, graph: &CircuitGraph) -> f64 {
        let mut net = alloc::vec![Complex::new(0.0, 0.0); graph.node_count()];
        for (e, i) in graph.edges().iter().zip(&self.edge_currents) {
            net[e.a.0] += i;
            net[e.b.0] -= i;
        }
        for (n, _) in &self.boundary_currents {
            net[n.0] = Complex::new(0.0, 0.0);
        }
        let scale = crate::linalg::max_norm(&self.edge_currents).max(1.0);
        crate::linalg::max_norm(&net) / scale
    }
}

/// Solves the Dirichlet problem with one value per terminal (in terminal order).
pub fn solve_dirichlet(graph: &CircuitGraph, boundary: &[Complex]) -> Result<DirichletSolution> {
    if boundary.len() != graph.terminals().len() {
        return Err(Error::Param(format!(
            "boundary has {} values for {} terminals",
            boundary.len(),
            graph.terminals().len()
        )));
    }
    let pairs: Vec<(NodeId, Complex)> = graph.terminals().iter().copied().zip(boundary.iter().copied()).collect();
    solve_with_boundary(graph, &pairs)
}

/// Solves the complex weighted Laplace equation with potentials prescribed on
/// an arbitrary set of nodes; every other node is interior.
pub fn solve_with_boundary(graph: &CircuitGraph, boundary: &[(NodeId, Complex)]) -> Result<DirichletSolution> {
    let n = graph.node_count();
    if boundary.is_empty() {
        return Err(Error::Param("empty boundary".into()));
    }
    let mut fixed: Vec<Option<Complex>> = alloc::vec![None; n];
    for &(id, v) in boundary {
        if id.0 >= n {
            return Err(Error::Topology("boundary node is not in the graph".into()));
        }
        if fixed[id.0].is_some() {
            return Err(Error::Param(format!("boundary node {:?} given twice", graph.name(id))));
        }
        if !crate::is_finite(v) {
            return Err(Error::NonFinite("boundary value"));
        }
        fixed[id.0] = Some(v);
    }
    if !graph.is_connected() {
        return Err(Error::Topology("graph is not connected".into()));
    }

    // interior index for each free node
    let mut slot = alloc::vec![usize::MAX; n];
    let mut interior = Vec::new();
    for (i, f) in fixed.iter().enumerate() {
        if f.is_none() {
            slot[i] = interior.len();
            interior.push(i);
        }
    }

    let m = interior.len();
    let mut a = DenseMatrix::zeros(m);
    let mut rhs = alloc::vec![Complex::new(0.0, 0.0); m];
    for e in graph.edges() {
        let y = e.impedance.inv();
        let (u, v) = (e.a.0, e.b.0);
        for (p, q) in [(u, v), (v, u)] {
            if fixed[p].is_some() {
                continue;
            }
            let sp = slot[p];
            a[(sp, sp)] += y;
            match fixed[q] {
                Some(vq) => rhs[sp] += y * vq,
                None => a[(sp, slot[q])] -= y,
            }
        }
    }
    if m > 0 {
        a.solve_in_place(&mut rhs)?;
    }

    let mut potentials = alloc::vec![Complex::new(0.0, 0.0); n];
    for (i, f) in fixed.iter().enumerate() {
        potentials[i] = match f {
            Some(v) => *v,
            None => rhs[slot[i]],
        };
    }
    let edge_currents: Vec<Complex> =
        graph.edges().iter().map(|e| (potentials[e.a.0] - potentials[e.b.0]) / e.impedance).collect();
    if edge_currents.iter().any(|i| !crate::is_finite(*i)) {
        return Err(Error::NonFinite("edge currents"));
    }
    let mut injected = alloc::vec![Complex::new(0.0, 0.0); n];
    for (e, i) in graph.edges().iter().zip(&edge_currents) {
        injected[e.a.0] += i;
        injected[e.b.0] -= i;
    }
    let boundary_currents = boundary.iter().map(|&(id, _)| (id, injected[id.0])).collect();
    Ok(DirichletSolution { potentials, edge_currents, boundary_currents })
}

/// Impedance between two nodes with every other node left floating.
pub fn effective_impedance(graph: &CircuitGraph, a: NodeId, b: NodeId) -> Result<Complex> {
    if a == b {
        return Err(Error::Param("effective impedance needs two distinct nodes".into()));
    }
    let sol = solve_with_boundary(graph, &[(a, Complex::new(1.0, 0.0)), (b, Complex::new(0.0, 0.0))])?;
    let current = sol.boundary_currents[0].1;
    if current.norm() == 0.0 {
        return Err(Error::InfiniteImpedance);
    }
    let z = current.inv();
    if !crate::is_finite(z) {
        return Err(Error::InfiniteImpedance);
    }
    Ok(z)
}
