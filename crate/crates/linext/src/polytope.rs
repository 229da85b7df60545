//! Order, chain, and stable-set polytopes with exact and Monte-Carlo
//! volumes.
//!
//! The order polytope of a poset collects the monotone points of the cube;
//! the chain polytope bounds every chain's sum by one; the stable-set
//! polytope of a graph is the convex hull of stable-set indicators. The
//! piecewise-linear transfer map carries the order polytope onto the chain
//! polytope, which is why both have volume `e(P)/n!`.
//!
//! Stable-polytope membership is decided exactly: the polytope is
//! down-closed (lowering any coordinate of a member yields a member), so a
//! nonnegative point belongs iff some convex combination of *maximal*
//! stable sets dominates it — a feasibility question with 0/1 coefficients
//! handed to the integer simplex in [`crate::lp`]. Exact volumes come from
//! counting lattice points in the dilates `j·Stab` for `j = 0..n`: the
//! counting function of an integral polytope is a degree-`n` polynomial
//! whose `n`-th finite difference is `n!` times the volume.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, EXACT_LIMIT};
use crate::lp::{feasible, Constraint};
use crate::orient::AcyclicOrientation;
use crate::poset::{Poset, PosetError};
use crate::{substream_seed, BigRatio};

/// Absolute slack allowed when validating float points against closed
/// polytopes before transfer.
pub const TRANSFER_TOLERANCE: f64 = 1e-12;

/// Largest graph for which exact stable-polytope volumes are computed
/// (the lattice-point count visits up to `(n+1)^n` points).
pub const STABLE_VOLUME_LIMIT: usize = 7;

/// Fractional bits used when rounding float coordinates onto the dyadic
/// grid for exact membership arithmetic.
const MEMBERSHIP_GRID_BITS: u32 = 60;

#[derive(Debug, Error, PartialEq)]
pub enum PolytopeError {
    #[error("point has {got} coordinates; expected {expected}")]
    PointLength { got: usize, expected: usize },
    #[error("point has a non-finite coordinate")]
    NonFinite,
    #[error("point lies outside the order polytope beyond tolerance")]
    OutsideOrderPolytope,
    #[error("point lies outside the chain polytope beyond tolerance")]
    OutsideChainPolytope,
    #[error("graph has {n} vertices; exact stable volume supported up to {limit}")]
    VolumeTooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Is `x` in the (closed) order polytope: inside the unit cube and monotone
/// along the order?
pub fn in_order_polytope(p: &Poset, x: &[f64]) -> bool {
    assert_eq!(x.len(), p.len(), "point dimension mismatch");
    let n = p.len();
    if !(0..n).all(|i| (0.0..=1.0).contains(&x[i])) {
        return false;
    }
    (0..n).all(|i| p.above(i).iter().all(|j| x[i] <= x[j]))
}

/// Is `x` in the (closed) chain polytope: nonnegative with every maximal
/// chain summing to at most one?
pub fn in_chain_polytope(p: &Poset, x: &[f64]) -> bool {
    assert_eq!(x.len(), p.len(), "point dimension mismatch");
    if x.iter().any(|&v| !(0.0..=1.0).contains(&v)) {
        return false;
    }
    p.maximal_chains().iter().all(|chain| chain.iter().map(|&v| x[v]).sum::<f64>() <= 1.0)
}

fn validate_point(x: &[f64], n: usize) -> Result<(), PolytopeError> {
    if x.len() != n {
        return Err(PolytopeError::PointLength { got: x.len(), expected: n });
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(PolytopeError::NonFinite);
    }
    Ok(())
}

/// Lower covers of every element, from the cover list.
fn covers_below(p: &Poset) -> Vec<Vec<usize>> {
    let mut below = vec![Vec::new(); p.len()];
    for (lo, hi) in p.cover_pairs() {
        below[hi].push(lo);
    }
    below
}

/// Elements ordered so that everything below an element comes first.
fn topological(p: &Poset) -> Vec<usize> {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&v| p.below(v).len());
    order
}

/// The transfer map: subtract from each coordinate the largest coordinate
/// among its lower covers. Carries the order polytope onto the chain
/// polytope, vertices to vertices (filter indicators to their minimal
/// antichains).
pub fn transfer(p: &Poset, x: &[f64]) -> Result<Vec<f64>, PolytopeError> {
    let n = p.len();
    validate_point(x, n)?;
    let inside = (0..n).all(|i| {
        x[i] >= -TRANSFER_TOLERANCE
            && x[i] <= 1.0 + TRANSFER_TOLERANCE
            && p.above(i).iter().all(|j| x[i] <= x[j] + TRANSFER_TOLERANCE)
    });
    if !inside {
        return Err(PolytopeError::OutsideOrderPolytope);
    }
    let below = covers_below(p);
    Ok((0..n)
        .map(|i| {
            let floor = below[i].iter().map(|&j| x[j]).fold(f64::NEG_INFINITY, f64::max);
            if below[i].is_empty() {
                x[i]
            } else {
                x[i] - floor
            }
        })
        .collect())
}

/// The inverse transfer: each coordinate becomes the largest chain sum
/// ending at it, computed bottom-up over the covers.
pub fn transfer_inverse(p: &Poset, x: &[f64]) -> Result<Vec<f64>, PolytopeError> {
    let n = p.len();
    validate_point(x, n)?;
    if x.iter().any(|&v| v < -TRANSFER_TOLERANCE) {
        return Err(PolytopeError::OutsideChainPolytope);
    }
    let over = p
        .maximal_chains()
        .iter()
        .any(|chain| chain.iter().map(|&v| x[v]).sum::<f64>() > 1.0 + TRANSFER_TOLERANCE);
    if over {
        return Err(PolytopeError::OutsideChainPolytope);
    }
    let below = covers_below(p);
    let mut out = vec![0.0; n];
    for v in topological(p) {
        let floor = below[v].iter().map(|&j| out[j]).fold(0.0, f64::max);
        out[v] = x[v] + floor;
    }
    Ok(out)
}

/// All inclusion-maximal stable sets.
fn maximal_stable_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    g.enumerate_stable_sets()
        .expect("within exact limit")
        .filter(|&s| (0..n).all(|v| s.contains(v) || !g.neighbors(v).intersection(s).is_empty()))
        .collect()
}

/// Feasibility of `z/scale ∈ Stab(G)` for nonnegative integer data: does a
/// convex combination of maximal stable sets dominate the point?
fn dominated_by_stable_hull(maximal: &[VertexSet], n: usize, z: &[i128], scale: i128) -> bool {
    let mut rows = Vec::with_capacity(n + 1);
    for (i, &zi) in z.iter().enumerate() {
        let coeffs: Vec<i128> = maximal.iter().map(|m| i128::from(m.contains(i))).collect();
        rows.push(Constraint::ge(coeffs, zi));
    }
    rows.push(Constraint::eq(vec![1; maximal.len()], scale));
    feasible(maximal.len(), &rows)
}

/// Exact membership in the stable-set polytope (the convex hull of stable
/// set indicators), after rounding each coordinate to the dyadic grid with
/// 60 fractional bits — exact for every test point with a short binary
/// expansion, and far below any tolerance of interest otherwise.
pub fn in_stable_polytope(g: &Graph, x: &[f64]) -> bool {
    let n = g.vertex_count();
    assert_eq!(x.len(), n, "point dimension mismatch");
    assert!(n <= EXACT_LIMIT, "stable membership supported up to {EXACT_LIMIT} vertices");
    if x.iter().any(|v| !v.is_finite()) {
        return false;
    }
    let scale = 1i128 << MEMBERSHIP_GRID_BITS;
    let mut z = Vec::with_capacity(n);
    for &v in x {
        if v < 0.0 {
            return false; // the hull sits in the nonnegative orthant
        }
        if v > 1.0 {
            return false; // and inside the unit cube
        }
        z.push((v * scale as f64).round() as i128);
    }
    // Cheap necessary conditions before the simplex: adjacent coordinates
    // cannot jointly exceed one.
    if g.edges().iter().any(|&(u, w)| z[u] + z[w] > scale) {
        return false;
    }
    dominated_by_stable_hull(&maximal_stable_sets(g), n, &z, scale)
}

/// Exact volume `e(P)/n!` shared by the order and chain polytopes.
pub fn exact_order_volume(p: &Poset) -> Result<BigRatio, PolytopeError> {
    let e = p.count_linear_extensions()?;
    let n = p.len();
    let fact = (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i);
    Ok(BigRatio::new(BigInt::from(e), fact))
}

/// Exact volume of the stable-set polytope by lattice-point interpolation:
/// count the integer points of `j·Stab(G)` for `j = 0..n` and take the
/// `n`-th finite difference over `n!`. Both steps are exact, so the result
/// is an exact rational.
pub fn exact_stable_volume(g: &Graph) -> Result<BigRatio, PolytopeError> {
    let n = g.vertex_count();
    if n > STABLE_VOLUME_LIMIT {
        return Err(PolytopeError::VolumeTooLarge { n, limit: STABLE_VOLUME_LIMIT });
    }
    let maximal = maximal_stable_sets(g);
    let alpha = g.independence_number()? as i128;
    let mut counts = vec![BigInt::one()]; // the 0-th dilate is the origin
    for j in 1..=n {
        counts.push(BigInt::from(count_dilate_points(g, &maximal, alpha, j as i128)));
    }
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one(); // C(n, 0)
    for (j, count) in counts.iter().enumerate() {
        let term = &binom * count;
        if (n - j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        binom = binom * (n - j) / (j + 1); // C(n, j+1)
    }
    debug_assert!(sum.is_positive(), "volume of a full-dimensional polytope");
    let fact = (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i);
    Ok(BigRatio::new(sum, fact))
}

/// Count integer points of `j·Stab(G)` by an odometer over `[0, j]^n` that
/// exploits down-closedness: raising any coordinate of an outside point
/// keeps it outside, so each level of the odometer stops ascending at the
/// first value with no feasible completions.
fn count_dilate_points(g: &Graph, maximal: &[VertexSet], alpha: i128, j: i128) -> u64 {
    let n = g.vertex_count();
    let mut z = vec![0i128; n];
    fn rec(
        g: &Graph,
        maximal: &[VertexSet],
        alpha: i128,
        j: i128,
        z: &mut Vec<i128>,
        depth: usize,
    ) -> u64 {
        let n = g.vertex_count();
        if depth == n {
            let sum: i128 = z.iter().sum();
            if sum > j * alpha {
                return 0;
            }
            if g.edges().iter().any(|&(u, w)| z[u] + z[w] > j) {
                return 0;
            }
            return u64::from(dominated_by_stable_hull(maximal, n, z, j));
        }
        let mut total = 0;
        for value in 0..=j {
            z[depth] = value;
            let here = rec(g, maximal, alpha, j, z, depth + 1);
            if here == 0 {
                break;
            }
            total += here;
        }
        z[depth] = 0;
        total
    }
    rec(g, maximal, alpha, j, &mut z, 0)
}

/// A Monte-Carlo volume (hit fraction of the unit cube) with its binomial
/// standard error.
#[derive(Debug, Clone, PartialEq)]
pub struct VolumeEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

const MC_SHARDS: u64 = 64;

fn finish_estimate(hits: u64, samples: u64, seed: u64) -> VolumeEstimate {
    let p = hits as f64 / samples as f64;
    VolumeEstimate {
        estimate: p,
        std_error: (p * (1.0 - p) / samples as f64).sqrt(),
        samples,
        seed,
    }
}

/// Estimate the volume of `{x ∈ [0,1]^n : membership(x)}` by uniform
/// sampling. Deterministic for a given seed regardless of thread count: the
/// work splits into 64 shards with derived seeds and the hit counts add.
pub fn mc_volume<F>(membership: F, n: usize, samples: u64, seed: u64) -> VolumeEstimate
where
    F: Fn(&[f64]) -> bool + Sync,
{
    assert!(samples >= 10_000, "at least 10^4 samples required");
    let hits: u64 = (0..MC_SHARDS)
        .into_par_iter()
        .map(|shard| {
            let lo = shard * samples / MC_SHARDS;
            let hi = (shard + 1) * samples / MC_SHARDS;
            let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, shard));
            let mut point = vec![0.0f64; n];
            let mut h = 0u64;
            for _ in lo..hi {
                for c in point.iter_mut() {
                    *c = rng.random();
                }
                if membership(&point) {
                    h += 1;
                }
            }
            h
        })
        .sum();
    finish_estimate(hits, samples, seed)
}

/// Estimate the fraction of space taken by the region of the graphical
/// hyperplane arrangement belonging to `o` — the points whose coordinate
/// order refines the orientation. Membership depends only on the relative
/// order of the coordinates, which is uniform over permutations for any
/// rotation-invariant sampling, so the sampler draws uniform random
/// permutations directly and no geometry error enters. The limit is
/// `e(P)/n!` for the induced poset.
pub fn fractional_region_volume(o: &AcyclicOrientation, samples: u64, seed: u64) -> VolumeEstimate {
    assert!(samples >= 10_000, "at least 10^4 samples required");
    let n = o.host().vertex_count();
    let hits: u64 = (0..MC_SHARDS)
        .into_par_iter()
        .map(|shard| {
            let lo = shard * samples / MC_SHARDS;
            let hi = (shard + 1) * samples / MC_SHARDS;
            let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, shard));
            let mut vertices: Vec<usize> = (0..n).collect();
            let mut labels = vec![0usize; n];
            let mut h = 0u64;
            for _ in lo..hi {
                vertices.shuffle(&mut rng);
                for (rank, &v) in vertices.iter().enumerate() {
                    labels[v] = rank + 1;
                }
                if o.is_extended_by(&labels) {
                    h += 1;
                }
            }
            h
        })
        .sum();
    finish_estimate(hits, samples, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orient::enumerate_acyclic_orientations;
    use num_bigint::BigInt;

    fn ratio(n: i64, d: i64) -> BigRatio {
        BigRatio::new(BigInt::from(n), BigInt::from(d))
    }

    fn indicator(s: VertexSet, n: usize) -> Vec<f64> {
        (0..n).map(|v| f64::from(s.contains(v))).collect()
    }

    /// The filter (upward closure) generated by a set.
    fn filter_of(p: &Poset, a: VertexSet) -> VertexSet {
        let mut f = a;
        for v in a.iter() {
            f = f.union(p.above(v));
        }
        f
    }

    fn poset_pool() -> Vec<Poset> {
        vec![
            Poset::chain(3),
            Poset::antichain(4),
            Poset::from_relations(4, &[(0, 1), (2, 1), (2, 3)]).unwrap(),
            Poset::from_relations(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap(),
            Poset::from_relations(6, &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5)]).unwrap(),
            Poset::from_relations(8, &[(0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7)])
                .unwrap(),
        ]
    }

    #[test]
    fn order_polytope_membership() {
        let chain = Poset::chain(2);
        assert!(in_order_polytope(&chain, &[0.3, 0.8]));
        assert!(!in_order_polytope(&chain, &[0.8, 0.3]));
        assert!(!in_order_polytope(&chain, &[-0.1, 0.5]));
        assert!(!in_order_polytope(&chain, &[0.3, 1.2]));
        // Vertices are exactly the filter indicators.
        for p in poset_pool().iter().filter(|p| p.len() <= 5) {
            let n = p.len();
            for mask in 0..1u64 << n {
                let s = VertexSet::from_bits(mask);
                let is_filter = s.iter().all(|v| p.above(v).is_subset_of(s));
                assert_eq!(in_order_polytope(p, &indicator(s, n)), is_filter, "{:?} {:?}", p, s);
            }
        }
    }

    #[test]
    fn chain_polytope_membership() {
        let anti = Poset::antichain(3);
        assert!(in_chain_polytope(&anti, &[1.0, 1.0, 1.0]));
        let chain = Poset::chain(3);
        assert!(!in_chain_polytope(&chain, &[0.5, 0.4, 0.2]), "chain sums to 1.1");
        assert!(in_chain_polytope(&chain, &[0.5, 0.3, 0.2]));
        // Vertices are exactly the antichain indicators.
        for p in poset_pool().iter().filter(|p| p.len() <= 5) {
            let n = p.len();
            for mask in 0..1u64 << n {
                let s = VertexSet::from_bits(mask);
                assert_eq!(
                    in_chain_polytope(p, &indicator(s, n)),
                    p.is_antichain(s),
                    "{:?} {:?}",
                    p,
                    s
                );
            }
        }
    }

    #[test]
    fn transfer_worked_example_and_zero() {
        let chain = Poset::chain(2);
        assert_eq!(transfer(&chain, &[0.3, 0.8]).unwrap(), vec![0.3, 0.5]);
        assert_eq!(transfer_inverse(&chain, &[0.3, 0.5]).unwrap(), vec![0.3, 0.8]);
        let zig = Poset::from_relations(4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        assert_eq!(transfer(&zig, &[0.0; 4]).unwrap(), vec![0.0; 4]);
        assert!(matches!(transfer(&chain, &[0.8, 0.3]), Err(PolytopeError::OutsideOrderPolytope)));
        assert!(matches!(
            transfer_inverse(&Poset::chain(3), &[0.5, 0.4, 0.2]),
            Err(PolytopeError::OutsideChainPolytope)
        ));
        assert!(matches!(
            transfer(&chain, &[0.1]),
            Err(PolytopeError::PointLength { got: 1, expected: 2 })
        ));
    }

    #[test]
    fn transfer_sends_filter_vertices_to_antichain_vertices() {
        for p in poset_pool() {
            let n = p.len();
            for a in p.antichains().unwrap() {
                let filter = filter_of(&p, a);
                let image = transfer(&p, &indicator(filter, n)).unwrap();
                assert_eq!(image, indicator(a, n), "{:?} antichain {:?}", p, a);
                let back = transfer_inverse(&p, &indicator(a, n)).unwrap();
                assert_eq!(back, indicator(filter, n));
            }
        }
    }

    #[test]
    fn transfer_round_trips_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in poset_pool() {
            let n = p.len();
            for _ in 0..200 {
                // A monotone point: the running maximum over everything below.
                let raw: Vec<f64> = (0..n).map(|_| rng.random()).collect();
                let x: Vec<f64> = (0..n)
                    .map(|v| p.below(v).iter().map(|j| raw[j]).fold(raw[v], f64::max))
                    .collect();
                assert!(in_order_polytope(&p, &x));
                let y = transfer(&p, &x).unwrap();
                assert!(in_chain_polytope(&p, &y), "image must land in the chain polytope");
                let back = transfer_inverse(&p, &y).unwrap();
                for (a, b) in x.iter().zip(&back) {
                    assert!((a - b).abs() <= 1e-12, "{:?}", p);
                }
                // And the other direction, from a scaled cube point.
                let c: Vec<f64> = (0..n).map(|_| rng.random::<f64>() / n as f64).collect();
                assert!(in_chain_polytope(&p, &c));
                let z = transfer_inverse(&p, &c).unwrap();
                assert!(in_order_polytope(&p, &z));
                let forward = transfer(&p, &z).unwrap();
                for (a, b) in c.iter().zip(&forward) {
                    assert!((a - b).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn stable_membership_on_the_five_cycle() {
        let c5 = Graph::cycle(5);
        assert!(!in_stable_polytope(&c5, &[0.5; 5]), "total mass 2.5 exceeds 2");
        // The barycenter of the five stable pairs is (2/5, ..., 2/5); the
        // float 0.4 sits just above 2/5, so membership is exactly false
        // there and exactly true at the dyadic 3/8 below it.
        assert!(!in_stable_polytope(&c5, &[0.4; 5]));
        assert!(in_stable_polytope(&c5, &[0.375; 5]));
        assert!(in_stable_polytope(&c5, &[0.25, 0.5, 0.25, 0.5, 0.25]));
        for s in c5.enumerate_stable_sets().unwrap() {
            assert!(in_stable_polytope(&c5, &indicator(s, 5)));
        }
        assert!(!in_stable_polytope(&c5, &[-0.1, 0.0, 0.0, 0.0, 0.0]));
        assert!(!in_stable_polytope(&c5, &[1.0, 1.0, 0.0, 0.0, 0.0]), "edge violated");
    }

    /// For odd cycles the hull has a closed half-space description:
    /// nonnegativity, edge sums at most one, and total at most (n-1)/2.
    fn odd_cycle_closed_form(n: usize, x: &[f64]) -> bool {
        let g = Graph::cycle(n);
        x.iter().all(|&v| v >= 0.0)
            && g.edges().iter().all(|&(u, w)| x[u] + x[w] <= 1.0)
            && x.iter().sum::<f64>() <= (n as f64 - 1.0) / 2.0
    }

    #[test]
    fn stable_membership_matches_the_odd_cycle_closed_form() {
        // Every point of the 1/4-grid on the 5-cube, and of the 1/2-grid on
        // the 7-cube: grid coordinates are exact dyadics, so both sides are
        // exact.
        let c5 = Graph::cycle(5);
        let mut x = [0.0f64; 5];
        for code in 0..5usize.pow(5) {
            let mut c = code;
            for v in x.iter_mut() {
                *v = (c % 5) as f64 / 4.0;
                c /= 5;
            }
            assert_eq!(in_stable_polytope(&c5, &x), odd_cycle_closed_form(5, &x), "{:?}", x);
        }
        let c7 = Graph::cycle(7);
        let mut x = [0.0f64; 7];
        for code in 0..3usize.pow(7) {
            let mut c = code;
            for v in x.iter_mut() {
                *v = (c % 3) as f64 / 2.0;
                c /= 3;
            }
            assert_eq!(in_stable_polytope(&c7, &x), odd_cycle_closed_form(7, &x), "{:?}", x);
        }
    }

    #[test]
    fn chain_polytope_is_the_stable_polytope_of_the_comparability_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in poset_pool().iter().filter(|p| p.len() <= 6) {
            let g = p.comparability_graph();
            let n = p.len();
            for trial in 0..1500 {
                // Exact dyadic coordinates; bias half the points toward the
                // polytope so the member side is exercised densely.
                let shrink = if trial % 2 == 0 { 1.0 } else { 0.25 };
                let x: Vec<f64> = (0..n)
                    .map(|_| f64::from(rng.random_range(0..=128u32)) / 128.0 * shrink)
                    .collect();
                assert_eq!(in_chain_polytope(p, &x), in_stable_polytope(&g, &x), "{:?} {:?}", p, x);
            }
        }
    }

    #[test]
    fn exact_order_volume_known_values() {
        assert_eq!(
            exact_order_volume(&Poset::antichain(4)).unwrap(),
            BigRatio::from_integer(BigInt::one())
        );
        assert_eq!(exact_order_volume(&Poset::chain(3)).unwrap(), ratio(1, 6));
        let zig = Poset::from_relations(4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        assert_eq!(exact_order_volume(&zig).unwrap(), ratio(5, 24));
    }

    #[test]
    fn exact_stable_volume_known_values() {
        assert_eq!(
            exact_stable_volume(&Graph::edgeless(3)).unwrap(),
            BigRatio::from_integer(BigInt::one()),
            "the whole cube"
        );
        assert_eq!(exact_stable_volume(&Graph::complete(3)).unwrap(), ratio(1, 6));
        assert_eq!(exact_stable_volume(&Graph::complete(4)).unwrap(), ratio(1, 24));
        assert_eq!(exact_stable_volume(&Graph::path(3)).unwrap(), ratio(1, 3));
        assert_eq!(exact_stable_volume(&Graph::cycle(4)).unwrap(), ratio(1, 6));
        assert!(matches!(
            exact_stable_volume(&Graph::edgeless(8)),
            Err(PolytopeError::VolumeTooLarge { n: 8, .. })
        ));
    }

    #[test]
    fn stable_volume_agrees_with_closed_form_counting_on_the_five_cycle() {
        // Count the dilate lattice points with the closed-form membership
        // and rerun the interpolation — an end-to-end check of the counting
        // pipeline on a non-perfect graph.
        let c5 = Graph::cycle(5);
        let maximal = maximal_stable_sets(&c5);
        for j in 1..=5i128 {
            let by_lp = count_dilate_points(&c5, &maximal, 2, j);
            let mut by_form = 0u64;
            let mut z = [0i128; 5];
            for code in 0..(j as u64 + 1).pow(5) {
                let mut c = code;
                for v in z.iter_mut() {
                    *v = (c % (j as u64 + 1)) as i128;
                    c /= j as u64 + 1;
                }
                let edges_ok = Graph::cycle(5).edges().iter().all(|&(u, w)| z[u] + z[w] <= j);
                if edges_ok && z.iter().sum::<i128>() <= 2 * j {
                    by_form += 1;
                }
            }
            assert_eq!(by_lp, by_form, "dilate {}", j);
        }
    }

    #[test]
    fn stable_volume_dominates_the_scaled_extension_optimum() {
        use crate::opt::epsilon;
        // Equality exactly on graphs with a transitive orientation.
        let comparability = [Graph::path(3), Graph::path(4), Graph::cycle(4), Graph::complete(3)];
        for g in comparability {
            let eps = epsilon(&g).unwrap().epsilon;
            let n = g.vertex_count();
            let fact = (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i);
            let scaled = BigRatio::new(BigInt::from(eps), fact);
            assert_eq!(exact_stable_volume(&g).unwrap(), scaled, "{:?}", g);
        }
        let c5 = Graph::cycle(5);
        let scaled = ratio(8, 120);
        let vol = exact_stable_volume(&c5).unwrap();
        assert!(scaled < vol, "strict for a non-comparability graph: {} vs {}", scaled, vol);
    }

    #[test]
    fn mc_volume_full_cube_and_known_simplex() {
        let cube = mc_volume(|_| true, 3, 10_000, 1);
        assert_eq!(cube.estimate, 1.0);
        assert_eq!(cube.std_error, 0.0);

        let chain = Poset::chain(3);
        let est = mc_volume(|x| in_order_polytope(&chain, x), 3, 100_000, 42);
        let truth = 1.0f64 / 6.0;
        let sigma = (truth * (1.0 - truth) / 100_000.0).sqrt();
        assert!(
            (est.estimate - truth).abs() <= 4.0 * sigma,
            "estimate {} vs {}",
            est.estimate,
            truth
        );
    }

    #[test]
    fn mc_volume_is_deterministic_per_seed() {
        let chain = Poset::chain(3);
        let a = mc_volume(|x| in_order_polytope(&chain, x), 3, 20_000, 9);
        let b = mc_volume(|x| in_order_polytope(&chain, x), 3, 20_000, 9);
        assert_eq!(a, b);
        let c = mc_volume(|x| in_order_polytope(&chain, x), 3, 20_000, 10);
        assert_ne!(a.estimate, c.estimate, "different seed, different stream");
    }

    #[test]
    fn mc_stable_volume_matches_the_exact_interpolation() {
        let c5 = Graph::cycle(5);
        let exact = exact_stable_volume(&c5).unwrap();
        let truth = rational_to_f64(&exact);
        let est = mc_volume(|x| in_stable_polytope(&c5, x), 5, 100_000, 5);
        let sigma = (truth * (1.0 - truth) / 100_000.0).sqrt();
        assert!(
            (est.estimate - truth).abs() <= 4.0 * sigma,
            "estimate {} vs exact {}",
            est.estimate,
            truth
        );
    }

    fn rational_to_f64(r: &BigRatio) -> f64 {
        use num_traits::ToPrimitive;
        r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap()
    }

    #[test]
    fn fractional_region_volumes_match_extension_fractions() {
        // A single edge splits space in half.
        let k2 = Graph::complete(2);
        let o = AcyclicOrientation::from_bijection(&k2, &[1, 2]).unwrap();
        let est = fractional_region_volume(&o, 50_000, 3);
        let sigma = (0.25f64 / 50_000.0).sqrt();
        assert!((est.estimate - 0.5).abs() <= 4.0 * sigma);

        // A chain orientation of the triangle owns one of six orderings.
        let k3 = Graph::complete(3);
        let o = AcyclicOrientation::from_bijection(&k3, &[1, 2, 3]).unwrap();
        let est = fractional_region_volume(&o, 60_000, 4);
        let truth = 1.0f64 / 6.0;
        let sigma = (truth * (1.0 - truth) / 60_000.0).sqrt();
        assert!((est.estimate - truth).abs() <= 4.0 * sigma);

        // An extension-maximal orientation of the 5-cycle: 8/120.
        let c5 = Graph::cycle(5);
        let o =
            enumerate_acyclic_orientations(&c5).find(|o| o.is_almost_bipartite().unwrap()).unwrap();
        let est = fractional_region_volume(&o, 100_000, 6);
        let truth = 8.0f64 / 120.0;
        let sigma = (truth * (1.0 - truth) / 100_000.0).sqrt();
        assert!((est.estimate - truth).abs() <= 4.0 * sigma);
    }

    #[test]
    fn chain_polytope_strictly_inside_stable_polytope_for_nontransitive_orientations() {
        // For an orientation with an unshortcut directed 2-path u -> v -> w,
        // the point e_u + e_w is a stable-polytope vertex outside the chain
        // polytope of the induced poset.
        let p4 = Graph::path(4);
        let chain_o =
            AcyclicOrientation::from_directed_pairs(&p4, &[[0, 1], [1, 2], [2, 3]]).unwrap();
        assert!(!chain_o.is_transitive());
        let p = Poset::from_orientation(&chain_o);
        // u = 0, v = 1, w = 2 and {0, 2} is not an edge of the path.
        let witness = [1.0, 0.0, 1.0, 0.0];
        assert!(in_stable_polytope(&p4, &witness));
        assert!(!in_chain_polytope(&p, &witness));
        // Chain-polytope members always lie in the stable polytope.
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..500 {
            let x: Vec<f64> =
                (0..4).map(|_| f64::from(rng.random_range(0..=64u32)) / 256.0).collect();
            if in_chain_polytope(&p, &x) {
                assert!(in_stable_polytope(&p4, &x));
            }
        }
    }
}
