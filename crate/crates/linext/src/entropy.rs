//! Graph entropy by convex minimization over the stable-set polytope.
//!
//! The entropy of a graph (with the uniform vertex distribution) is
//! `H(G) = min −(1/n) Σ log₂ a_i` over points `a` of the stable-set
//! polytope. The minimization runs Frank–Wolfe: each round linearizes
//! the objective at the current point and calls the max-weight stable-set
//! oracle with weights `1/a_i`, which finds the vertex of the polytope
//! minimizing the linearization. The gap between the linearization drop
//! and zero certifies how far the current value can sit above the true
//! minimum, so the returned entropy carries a proof of its own accuracy.

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::polytope::VolumeEstimate;
use crate::BigRatio;

/// Default duality-gap tolerance, in bits.
pub const DEFAULT_ENTROPY_TOL: f64 = 1e-5;

/// Frank–Wolfe iteration cap.
const ITERATION_CAP: u64 = 1_000_000;

/// Gradient weights are clamped at this floor to dodge the −log
/// singularity; iterates stay strictly positive anyway because the start
/// point does and steps are convex combinations.
const COORDINATE_FLOOR: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum EntropyError {
    #[error("duality gap {gap:.3e} after {iterations} iterations still exceeds the tolerance")]
    DidNotConverge { gap: f64, iterations: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A certified entropy value: `h_bits` lies within `duality_gap` of the
/// true minimum, and the minimizer is a point of the stable-set polytope.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyResult {
    pub h_bits: f64,
    pub minimizer: Vec<f64>,
    pub duality_gap: f64,
    pub iterations: u64,
}

fn objective_bits(a: &[f64]) -> f64 {
    let n = a.len() as f64;
    -a.iter().map(|&x| x.log2()).sum::<f64>() / n
}

/// Minimize `−(1/n) Σ log₂ a_i` over the stable-set polytope by
/// Frank–Wolfe, stopping when the duality gap drops to `tol` bits.
///
/// Starts at the uniform point `(1/n, …, 1/n)` (feasible: any proper
/// coloring averages to a dominating combination and the polytope is
/// down-closed) and steps toward the oracle vertex with the classical
/// `2/(t+2)` schedule.
pub fn graph_entropy(g: &Graph, tol: f64) -> Result<EntropyResult, EntropyError> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = g.vertex_count();
    let nf = n as f64;
    let ln2 = std::f64::consts::LN_2;
    let mut a = vec![1.0 / nf; n];
    let mut t: u64 = 1;
    loop {
        let weights: Vec<f64> = a.iter().map(|&x| 1.0 / x.max(COORDINATE_FLOOR)).collect();
        let s = g.max_weight_stable_set(&weights)?;
        // The linearization drop toward the best vertex bounds the
        // suboptimality of the current point from above (convexity).
        let gap: f64 = (0..n)
            .map(|i| (f64::from(s.contains(i)) - a[i]) / (nf * a[i].max(COORDINATE_FLOOR) * ln2))
            .sum();
        debug_assert!(gap >= -1e-9, "the current point never beats the oracle");
        if gap <= tol {
            return Ok(EntropyResult {
                h_bits: objective_bits(&a),
                minimizer: a,
                duality_gap: gap,
                iterations: t,
            });
        }
        if t >= ITERATION_CAP {
            return Err(EntropyError::DidNotConverge { gap, iterations: t });
        }
        let step = 2.0 / (t as f64 + 2.0);
        for (i, coord) in a.iter_mut().enumerate() {
            *coord += step * (f64::from(s.contains(i)) - *coord);
        }
        t += 1;
    }
}

/// The exact finite bound `H(G) ≥ log₂(n / α(G))`: any stable-polytope
/// point has total mass at most the independence number, so some
/// coordinate is at most `α/n`.
pub fn alpha_entropy_lower(g: &Graph) -> Result<f64, GraphError> {
    let n = g.vertex_count() as f64;
    let alpha = g.independence_number()? as f64;
    Ok((n / alpha).log2())
}

/// Outcome of checking the two-sided volume-entropy comparison
/// `n^n·2^{−nH} ≥ n!·Vol(Stab G) ≥ n!·2^{−nH}`, evaluated in log₂ space.
#[derive(Debug, Clone, PartialEq)]
pub struct KahnKimReport {
    pub n: usize,
    /// Certain interval for log₂ Vol(Stab G): a point for exact volumes,
    /// a confidence interval for Monte-Carlo ones.
    pub log2_volume: (f64, f64),
    pub h_bits: f64,
    pub h_slack: f64,
    /// `n^n·2^{−nH} ≥ n!·Vol`
    pub upper_ok: bool,
    /// `n!·Vol ≥ n!·2^{−nH}`
    pub lower_ok: bool,
}

impl KahnKimReport {
    pub fn holds(&self) -> bool {
        self.upper_ok && self.lower_ok
    }
}

const LOG_FUZZ: f64 = 1e-9;

fn kahn_kim_with_interval(n: usize, log2_vol: (f64, f64), h: f64, h_slack: f64) -> KahnKimReport {
    let nf = n as f64;
    let log2_factorial: f64 = (1..=n).map(|k| (k as f64).log2()).sum();
    // Upper: n·log₂n − nH ≥ log₂ n! + log₂ Vol, giving H its low end and
    // the volume its low end (the permissive reading of both slacks).
    let upper_ok = nf * nf.log2() - nf * (h - h_slack) + LOG_FUZZ >= log2_factorial + log2_vol.0;
    // Lower: log₂ Vol ≥ −nH, giving H its high end and the volume its
    // high end.
    let lower_ok = log2_vol.1 + LOG_FUZZ >= -nf * (h + h_slack);
    KahnKimReport { n, log2_volume: log2_vol, h_bits: h, h_slack, upper_ok, lower_ok }
}

fn ratio_log2(r: &BigRatio) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("volume fits a float").log2()
}

/// Check the volume sandwich against an exact volume.
pub fn kahn_kim_check(g: &Graph, vol: &BigRatio, h: f64, h_slack: f64) -> KahnKimReport {
    let v = ratio_log2(vol);
    kahn_kim_with_interval(g.vertex_count(), (v, v), h, h_slack)
}

/// Check the volume sandwich against a Monte-Carlo volume, widened to its
/// four-sigma confidence interval.
pub fn kahn_kim_check_estimate(
    g: &Graph,
    vol: &VolumeEstimate,
    h: f64,
    h_slack: f64,
) -> KahnKimReport {
    let lo = (vol.estimate - 4.0 * vol.std_error).max(f64::MIN_POSITIVE);
    let hi = vol.estimate + 4.0 * vol.std_error;
    kahn_kim_with_interval(g.vertex_count(), (lo.log2(), hi.log2()), h, h_slack)
}
