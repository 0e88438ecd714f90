//! Cross-checks of closed forms against Dirichlet solves on generated graphs.
//!
//! Each check compares a matrix or impedance prediction with the brute-force
//! Kirchhoff solution and reports the largest deviation, relative to the
//! largest boundary value (or to the predicted impedance).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::address::{node_name, Address};
use crate::complexnet::{effective_impedance, solve_dirichlet, CircuitGraph, DirichletSolution, PowerBalance};
use crate::error::{Error, Result};
use crate::fsl::{self, CircuitParams};
use crate::hanoi::{self, CharacteristicPair, HanoiParams};
use crate::linalg::{Mat3, Vec3};
use crate::Complex;

/// Largest level the oracle will solve densely.
pub const MAX_ORACLE_LEVEL: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub max_deviation: f64,
}

#[derive(Default)]
struct Tally(Vec<Check>);

impl Tally {
    fn record(&mut self, name: &str, deviation: f64) {
        let deviation = if deviation.is_nan() { f64::INFINITY } else { deviation };
        match self.0.iter_mut().find(|c| c.name == name) {
            Some(c) => c.max_deviation = c.max_deviation.max(deviation),
            None => self.0.push(Check { name: String::from(name), max_deviation: deviation }),
        }
    }
}

fn check_level(level: usize) -> Result<()> {
    if level == 0 || level > MAX_ORACLE_LEVEL {
        return Err(Error::Size { requested: level, max: MAX_ORACLE_LEVEL });
    }
    Ok(())
}

fn scale_of(v: &Vec3) -> f64 {
    v.iter().map(|z| z.norm()).fold(f64::MIN_POSITIVE, f64::max)
}

fn values(g: &CircuitGraph, sol: &DirichletSolution, names: &[String; 3]) -> Result<Vec3> {
    Ok([sol.potential_of(g, &names[0])?, sol.potential_of(g, &names[1])?, sol.potential_of(g, &names[2])?])
}

fn max_dev(got: &Vec3, want: &Vec3, scale: f64) -> f64 {
    (0..3).map(|k| (got[k] - want[k]).norm() / scale).fold(0.0, f64::max)
}

fn cell_check_name(addr: &Address) -> String {
    if addr.len() == 1 {
        format!("M{}", addr)
    } else {
        format!("cells depth {}", addr.len())
    }
}

fn terminal_checks(tally: &mut Tally, g: &CircuitGraph, top: Complex, base: Complex) -> Result<()> {
    let t = g.terminals();
    let got_base = effective_impedance(g, t[1], t[2])?;
    let got_top = effective_impedance(g, t[0], t[1])?;
    tally.record("terminal impedance p1-p2", crate::rel_diff(got_base, base));
    tally.record("terminal impedance p0-p1", crate::rel_diff(got_top, top));
    Ok(())
}

fn energy_check(tally: &mut Tally, g: &CircuitGraph, sol: &DirichletSolution) -> Result<()> {
    tally.record("energy balance", PowerBalance::compute(g, sol)?.defect());
    Ok(())
}

/// Ladder checks on the reduced graph of the given depth: terminal
/// impedances `(2/3)Z`, the `p → q` matrix and the cell values
/// `(M_{w_n} M)···(M_{w_1} M) v` for every address up to the depth.
pub fn fsl_checks(params: &CircuitParams, level: usize, triples: &[Vec3]) -> Result<Vec<Check>> {
    check_level(level)?;
    let mut tally = Tally::default();
    if triples.is_empty() {
        return Ok(tally.0);
    }
    let interp = fsl::harmonic_matrices(params)?;
    let g = fsl::reduced_graph(params, level)?;
    let two_thirds = interp.z * (2.0 / 3.0);
    terminal_checks(&mut tally, &g, two_thirds, two_thirds)?;
    for v in triples {
        let sol = solve_dirichlet(&g, v)?;
        let scale = scale_of(v);
        for len in 0..level {
            for addr in Address::all_of_length(len) {
                let corners = interp.evaluate(*v, &addr).values;
                let prefix = addr.prefix();
                let q_names = core::array::from_fn(|j| node_name(&prefix, &format!("q{j}")));
                let got = values(&g, &sol, &q_names)?;
                tally.record("M (inner corners)", max_dev(&got, &interp.m.apply(corners), scale));
            }
        }
        for len in 1..=level {
            for addr in Address::all_of_length(len) {
                let want = interp.evaluate(*v, &addr).values;
                let got = values(&g, &sol, &fsl::cell_corner_names(&addr))?;
                tally.record(&cell_check_name(&addr), max_dev(&got, &want, scale));
            }
        }
        energy_check(&mut tally, &g, &sol)?;
    }
    Ok(tally.0)
}

/// Hanoi checks on the level graph built from a characteristic pair: terminal
/// impedances `(Z1 + Z2, 2 Z2)`, the `p → q` map on the innermost cells and
/// `M_{w_n}···M_{w_1} v` for every address up to the level.
pub fn hanoi_checks(
    params: &HanoiParams,
    pair: &CharacteristicPair,
    level: usize,
    triples: &[Vec3],
) -> Result<Vec<Check>> {
    check_level(level)?;
    let mut tally = Tally::default();
    if triples.is_empty() {
        return Ok(tally.0);
    }
    let set = hanoi::interp_matrices(params, pair)?;
    let g = hanoi::build_level_graph(params, pair, level)?;
    terminal_checks(&mut tally, &g, pair.top_pair(), pair.base())?;
    for v in triples {
        let sol = solve_dirichlet(&g, v)?;
        let scale = scale_of(v);
        for addr in Address::all_of_length(level - 1) {
            let corners = set.evaluate(*v, &addr);
            let q_names = core::array::from_fn(|j| node_name(&addr.child(j as u8).prefix(), "q"));
            let got = values(&g, &sol, &q_names)?;
            tally.record("pq map", max_dev(&got, &set.pq.apply(corners), scale));
        }
        for len in 1..=level {
            for addr in Address::all_of_length(len) {
                let want = set.evaluate(*v, &addr);
                let got = values(&g, &sol, &hanoi::cell_corner_names(params.variant, &addr))?;
                tally.record(&cell_check_name(&addr), max_dev(&got, &want, scale));
            }
        }
        energy_check(&mut tally, &g, &sol)?;
    }
    Ok(tally.0)
}

/// Row-sum defects of a set of matrices, as a single check.
pub fn stochastic_check(name: &str, matrices: &[Mat3]) -> Check {
    Check { name: String::from(name), max_deviation: matrices.iter().map(Mat3::stochastic_defect).fold(0.0, f64::max) }
}
