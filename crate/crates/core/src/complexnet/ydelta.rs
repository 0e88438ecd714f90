use alloc::format;
use alloc::vec::Vec;

use super::{CircuitGraph, NodeId};
use crate::error::{Error, Result};
use crate::Complex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YDeltaMode {
    ToY,
    ToDelta,
}

/// Y–Δ duality for three vertices `0, 1, 2`.
///
/// A Δ is given by its edges indexed by the opposite vertex (`z[0]` joins
/// vertices 1 and 2); a Y by its arms (`z[k]` joins the center to vertex `k`).
pub fn y_delta(mode: YDeltaMode, z: [Complex; 3]) -> Result<[Complex; 3]> {
    if z.iter().any(|w| !crate::is_finite(*w)) {
        return Err(Error::NonFinite("y-delta input"));
    }
    if z.iter().any(|w| w.norm() == 0.0) {
        return Err(Error::Param("y-delta inputs must be nonzero".into()));
    }
    match mode {
        YDeltaMode::ToY => {
            let sum = z[0] + z[1] + z[2];
            let scale = z.iter().map(|w| w.norm()).fold(0.0, f64::max);
            if sum.norm() <= 1e-14 * scale {
                return Err(Error::DegenerateTransform);
            }
            // arm k is the product of the two delta edges meeting at vertex k
            Ok([z[1] * z[2] / sum, z[0] * z[2] / sum, z[0] * z[1] / sum])
        }
        YDeltaMode::ToDelta => {
            let s = z[0] * z[1] + z[1] * z[2] + z[2] * z[0];
            Ok([s / z[0], s / z[1], s / z[2]])
        }
    }
}

/// Replaces a degree-3 star centred at `center` by the equivalent triangle.
///
/// The center node is removed; node IDs of the returned graph are renumbered
/// but names and terminals are preserved.
pub fn star_to_delta(graph: &CircuitGraph, center: NodeId) -> Result<CircuitGraph> {
    if graph.terminals().contains(&center) {
        return Err(Error::Topology("cannot eliminate a terminal".into()));
    }
    let incident: Vec<usize> =
        graph.edges().iter().enumerate().filter(|(_, e)| e.a == center || e.b == center).map(|(k, _)| k).collect();
    if incident.len() != 3 {
        return Err(Error::Topology(format!(
            "node {:?} has degree {}, expected 3",
            graph.name(center),
            incident.len()
        )));
    }
    let tips: Vec<NodeId> = incident
        .iter()
        .map(|&k| {
            let e = graph.edges()[k];
            if e.a == center {
                e.b
            } else {
                e.a
            }
        })
        .collect();
    if tips[0] == tips[1] || tips[1] == tips[2] || tips[0] == tips[2] {
        return Err(Error::Topology("star arms must end on distinct nodes".into()));
    }
    let arms = [0, 1, 2].map(|i| graph.edges()[incident[i]].impedance);
    let delta = y_delta(YDeltaMode::ToDelta, arms)?;

    let mut out = CircuitGraph::new();
    for (i, name) in graph.node_names().iter().enumerate() {
        if i != center.0 {
            out.node(name);
        }
    }
    let remap = |out: &CircuitGraph, id: NodeId| out.node_id(graph.name(id)).expect("node copied");
    for (k, e) in graph.edges().iter().enumerate() {
        if !incident.contains(&k) {
            out.add_edge(remap(&out, e.a), remap(&out, e.b), e.impedance)?;
        }
    }
    for k in 0..3 {
        let (u, v) = (tips[(k + 1) % 3], tips[(k + 2) % 3]);
        out.add_edge(remap(&out, u), remap(&out, v), delta[k])?;
    }
    let terms: Vec<NodeId> = graph.terminals().iter().map(|&t| remap(&out, t)).collect();
    out.set_terminals(&terms)?;
    Ok(out)
}

/// Replaces the three edges of the triangle on `corners` by an equivalent
/// star around a new node named `center_name`.
pub fn delta_to_star(graph: &CircuitGraph, corners: [NodeId; 3], center_name: &str) -> Result<CircuitGraph> {
    if graph.node_id(center_name).is_some() {
        return Err(Error::Topology(format!("node {center_name:?} already exists")));
    }
    // delta edge k is opposite corner k
    let mut which = [usize::MAX; 3];
    for (idx, e) in graph.edges().iter().enumerate() {
        for k in 0..3 {
            let (u, v) = (corners[(k + 1) % 3], corners[(k + 2) % 3]);
            if which[k] == usize::MAX && ((e.a == u && e.b == v) || (e.a == v && e.b == u)) {
                which[k] = idx;
            }
        }
    }
    if which.contains(&usize::MAX) {
        return Err(Error::Topology("triangle edge missing".into()));
    }
    let delta = which.map(|k| graph.edges()[k].impedance);
    let arms = y_delta(YDeltaMode::ToY, delta)?;

    let mut out = graph.clone();
    out.edges.clear();
    for (idx, e) in graph.edges().iter().enumerate() {
        if !which.contains(&idx) {
            out.edges.push(*e);
        }
    }
    let center = out.node(center_name);
    for k in 0..3 {
        out.add_edge(center, corners[k], arms[k])?;
    }
    Ok(out)
}
