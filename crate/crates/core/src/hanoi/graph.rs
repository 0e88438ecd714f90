use alloc::format;
use alloc::string::String;

use super::{substitution_rhs, CharacteristicPair, HanoiParams, Variant};
use crate::address::{node_name, Address};
use crate::complexnet::{CircuitGraph, NodeId};
use crate::error::{Error, Result};
use crate::Complex;

/// Largest level accepted by the builders.
pub const MAX_LEVEL: usize = 8;

/// Level-`N` circuit whose innermost cells are Y circuits with the arms of `pair`.
pub fn build_level_graph(params: &HanoiParams, pair: &CharacteristicPair, level: usize) -> Result<CircuitGraph> {
    build_level_graph_with_arms(params, pair.z1, pair.z2, level)
}

/// Level-`N` circuit with innermost Y arms `(z1, z2)` before rescaling.
///
/// Terminals are `p0, p1, p2`. The cell at address `w` owns its loop vertices
/// `"{w}/p{jk}"`; a leaf cell owns its center `"{w}/q"`. All impedances of a
/// cell at depth `k` are multiplied by `r^k`.
pub fn build_level_graph_with_arms(
    params: &HanoiParams,
    z1: Complex,
    z2: Complex,
    level: usize,
) -> Result<CircuitGraph> {
    if level > MAX_LEVEL {
        return Err(Error::Size { requested: level, max: MAX_LEVEL });
    }
    if !(crate::is_finite(z1) && crate::is_finite(z2)) || z1.norm() == 0.0 || z2.norm() == 0.0 {
        return Err(Error::Param("Y arms must be finite and nonzero".into()));
    }
    let mut g = CircuitGraph::new();
    let corners = ["p0", "p1", "p2"].map(|n| g.node(n));
    fill(&mut g, params, (z1, z2), level, &Address::empty(), corners, 1.0)?;
    g.set_terminals(&corners)?;
    Ok(g)
}

fn fill(
    g: &mut CircuitGraph,
    params: &HanoiParams,
    arms: (Complex, Complex),
    level: usize,
    addr: &Address,
    p: [NodeId; 3],
    s: f64,
) -> Result<()> {
    let prefix = addr.prefix();
    if level == 0 {
        let q = g.node(&node_name(&prefix, "q"));
        g.add_edge(q, p[0], arms.0 * s)?;
        g.add_edge(q, p[1], arms.1 * s)?;
        g.add_edge(q, p[2], arms.1 * s)?;
        return Ok(());
    }
    let (zc, zl) = (params.z_c() * s, params.z_l() * s);
    let tip = |g: &mut CircuitGraph, j: usize, k: usize| g.node(&node_name(&prefix, &format!("p{j}{k}")));
    let mut corners = [[p[0]; 3]; 3];
    for j in 0..3 {
        for k in 0..3 {
            corners[j][k] = if j != k || params.variant == Variant::II { tip(g, j, k) } else { p[j] };
        }
    }
    if params.variant == Variant::II {
        g.add_edge(p[0], corners[0][0], zl)?;
        g.add_edge(p[1], corners[1][1], zc)?;
        g.add_edge(p[2], corners[2][2], zc)?;
    }
    g.add_edge(corners[0][1], corners[1][0], zc)?;
    g.add_edge(corners[0][2], corners[2][0], zc)?;
    g.add_edge(corners[1][2], corners[2][1], zl)?;
    for j in 0..3u8 {
        fill(g, params, arms, level - 1, &addr.child(j), corners[j as usize], s * params.r)?;
    }
    Ok(())
}

/// Node IDs of the corners of the cell at `addr`, in the row order of the
/// interpolation matrices.
pub fn cell_corner_names(variant: Variant, addr: &Address) -> [String; 3] {
    let symbols = addr.symbols();
    let Some((&j, parent)) = symbols.split_last() else {
        return ["p0", "p1", "p2"].map(String::from);
    };
    let parent = Address::from_symbols(parent).expect("valid address");
    let outer = cell_corner_names(variant, &parent);
    let prefix = parent.prefix();
    core::array::from_fn(|k| {
        if k == j as usize && variant == Variant::I {
            outer[k].clone()
        } else {
            node_name(&prefix, &format!("p{j}{k}"))
        }
    })
}

/// One substitution step on Y arms: the arms of the Y equivalent to one level
/// of the circuit built from copies with arms `(z1, z2)`.
///
/// Its fixed points are the characteristic pairs; a level-`N` graph with leaf
/// arms `(z1, z2)` is equivalent to the `N`-fold step.
pub fn step(params: &HanoiParams, z1: Complex, z2: Complex) -> (Complex, Complex) {
    let (rhs1, rhs2) = substitution_rhs(params, z1, z2);
    let b = rhs2 / 2.0;
    (rhs1 - b / 2.0, b)
}
