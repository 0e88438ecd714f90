use super::{CircuitGraph, DirichletSolution};
use crate::error::{Error, Result};

/// Dissipated and supplied real power of a solved circuit (watts, phasor amplitudes).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerBalance {
    pub dissipated: f64,
    pub input: f64,
}

impl PowerBalance {
    pub fn compute(graph: &CircuitGraph, sol: &DirichletSolution) -> Result<Self> {
        Ok(PowerBalance { dissipated: power_dissipation(graph, sol)?, input: boundary_input_power(sol) })
    }

    /// `|dissipated - input| / max(1, |input|)`.
    pub fn defect(&self) -> f64 {
        (self.dissipated - self.input).abs() / self.input.abs().max(1.0)
    }
}

/// `Σ_edges Re(Z_e) |I_e|²`.
pub fn power_dissipation(graph: &CircuitGraph, sol: &DirichletSolution) -> Result<f64> {
    if sol.edge_currents.len() != graph.edges().len() || sol.potentials.len() != graph.node_count() {
        return Err(Error::Param("solution does not belong to this graph".into()));
    }
    Ok(graph.edges().iter().zip(&sol.edge_currents).map(|(e, i)| e.impedance.re * i.norm_sqr()).sum())
}

/// `Re Σ_boundary V_t · conj(I_t)`.
pub fn boundary_input_power(sol: &DirichletSolution) -> f64 {
    sol.boundary_currents.iter().map(|&(n, i)| (sol.potentials[n.0] * i.conj()).re).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::complexnet::solve_dirichlet;

    #[test]
    fn single_resistor() {
        let mut g = CircuitGraph::new();
        g.connect("a", "b", c(2.0, 0.0)).unwrap();
        let t = [g.node("a"), g.node("b")];
        g.set_terminals(&t).unwrap();
        let sol = solve_dirichlet(&g, &[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let p = PowerBalance::compute(&g, &sol).unwrap();
        assert!((p.dissipated - 0.5).abs() < 1e-15);
        assert!((p.input - 0.5).abs() < 1e-15);
    }

    #[test]
    fn reactive_network_dissipates_nothing() {
        let mut g = CircuitGraph::new();
        g.connect("a", "m", c(0.0, 2.0)).unwrap();
        g.connect("m", "b", c(0.0, -0.5)).unwrap();
        g.connect("m", "x", c(0.0, 1.0)).unwrap();
        g.connect("x", "b", c(0.0, 3.0)).unwrap();
        let t = [g.node("a"), g.node("b")];
        g.set_terminals(&t).unwrap();
        let sol = solve_dirichlet(&g, &[c(1.0, 0.5), c(0.0, 0.0)]).unwrap();
        let p = PowerBalance::compute(&g, &sol).unwrap();
        assert_eq!(p.dissipated, 0.0);
        assert!(p.input.abs() < 1e-12);
    }
}
