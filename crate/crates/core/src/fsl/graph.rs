use alloc::format;
use alloc::string::String;

use super::CircuitParams;
use crate::address::{node_name, Address};
use crate::complexnet::{CircuitGraph, NodeId};
use crate::error::{Error, Result};
use crate::Complex;

/// Largest level accepted by the builders (`3^(N+1)` nodes).
pub const MAX_LEVEL: usize = 8;

/// Level-`N` ladder whose innermost cells are triangles of inductors.
pub fn build_level_graph(params: &CircuitParams, level: usize) -> Result<CircuitGraph> {
    build_level_graph_with_base(params, level, params.z_l())
}

/// Level-`N` ladder whose innermost cells are triangles with edge impedance `z0`.
///
/// Terminals are `p0, p1, p2`. The level-`k` cell with address `w` owns the
/// nodes `"{w}/q{j}"` (inner corners) and `"{w}/m{jk}"` (glue points).
pub fn build_level_graph_with_base(params: &CircuitParams, level: usize, z0: Complex) -> Result<CircuitGraph> {
    if level > MAX_LEVEL {
        return Err(Error::Size { requested: level, max: MAX_LEVEL });
    }
    if !crate::is_finite(z0) || z0.norm() == 0.0 {
        return Err(Error::Param("base impedance must be finite and nonzero".into()));
    }
    let mut g = CircuitGraph::new();
    let corners = ["p0", "p1", "p2"].map(|n| g.node(n));
    fill(&mut g, params, level, &Address::empty(), corners, z0)?;
    g.set_terminals(&corners)?;
    Ok(g)
}

fn fill(
    g: &mut CircuitGraph,
    params: &CircuitParams,
    level: usize,
    addr: &Address,
    p: [NodeId; 3],
    z0: Complex,
) -> Result<()> {
    if level == 0 {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            g.add_edge(p[i], p[j], z0)?;
        }
        return Ok(());
    }
    let prefix = addr.prefix();
    let q: [NodeId; 3] = core::array::from_fn(|j| g.node(&node_name(&prefix, &format!("q{j}"))));
    for j in 0..3 {
        g.add_edge(p[j], q[j], params.z_c())?;
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        g.add_edge(p[i], p[j], params.z_l())?;
    }
    for j in 0..3u8 {
        let child = addr.child(j);
        let names = cell_corner_names(&child);
        let corners = names.each_ref().map(|n| g.node(n));
        fill(g, params, level - 1, &child, corners, z0)?;
    }
    Ok(())
}

/// Node IDs of the three corners of the cell at `addr`, in corner order.
///
/// Corner `k` of copy `j` is the inner corner `q{j}` when `k = j` and the glue
/// point shared with copy `k` otherwise.
pub fn cell_corner_names(addr: &Address) -> [String; 3] {
    let symbols = addr.symbols();
    let Some((&j, parent)) = symbols.split_last() else {
        return ["p0", "p1", "p2"].map(String::from);
    };
    let prefix = Address::from_symbols(parent).expect("valid address").prefix();
    core::array::from_fn(|k| {
        let k = k as u8;
        let local = if k == j { format!("q{j}") } else { format!("m{}{}", j.min(k), j.max(k)) };
        node_name(&prefix, &local)
    })
}
