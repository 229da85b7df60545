//! Label-rearranging maps between sets of linear extensions.
//!
//! The central procedure ([`theta`]) repairs a labeling toward a target
//! orientation in which every vertex is a source or a sink: at each round it
//! finds the vertices incident to a disagreeing edge and swaps the extreme
//! labels among them. Each swap permanently fixes both swapped vertices, so
//! the procedure halts after at most half the vertices have moved. Running
//! it from an extension of an arbitrary orientation toward the upward
//! bipartite orientation gives an injection between extension sets — the
//! counting consequence is that bipartite orientations maximize the number
//! of linear extensions over a bipartite host. [`theta_prime`] is the
//! odd-cycle analogue, which detours through an even cycle obtained by
//! contracting a directed 2-path.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::orient::{bipartite_orientations, AcyclicOrientation, OrientationError};
use crate::poset::LinearExtension;

#[derive(Debug, Error)]
pub enum MapError {
    #[error("labeling has {got} labels; the graph has {expected} vertices")]
    LabelCount { got: usize, expected: usize },
    #[error("labels must be pairwise distinct")]
    NotInjective,
    #[error("labeling is not a linear extension of the orientation")]
    NotAnExtension,
    #[error("swap endpoints must be distinct vertices")]
    SameVertex,
    #[error("target orientation must make every vertex a source or a sink")]
    TargetNotSourceSink,
    #[error("orientation does not live on the given graph")]
    HostMismatch,
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

/// Complement every label: `v` gets `n + 1 - f(v)`. Maps extensions of an
/// orientation bijectively onto extensions of its reversal.
pub fn rev(f: &LinearExtension) -> LinearExtension {
    let n = f.len();
    LinearExtension::new(f.labels().iter().map(|&l| n + 1 - l).collect())
        .expect("complementation preserves bijectivity")
}

/// Swap the labels of two distinct vertices, fixing all others.
pub fn rev_uv(f: &LinearExtension, u: usize, v: usize) -> Result<LinearExtension, MapError> {
    if u == v {
        return Err(MapError::SameVertex);
    }
    let n = f.len();
    if u >= n || v >= n {
        return Err(MapError::LabelCount { got: u.max(v) + 1, expected: n });
    }
    let mut labels = f.labels().to_vec();
    labels.swap(u, v);
    Ok(LinearExtension::new(labels).expect("swap preserves bijectivity"))
}

/// The record of one run of the label-repair procedure: the swapped pairs
/// `(u_k, v_k)`, the disagreement sets `B_k`, and every intermediate induced
/// orientation (the start and final orientations included, so
/// `orientations.len() == swaps.len() + 1`).
#[derive(Debug, Clone)]
pub struct ThetaTrace {
    pub swaps: Vec<(usize, usize)>,
    pub b_sets: Vec<VertexSet>,
    pub orientations: Vec<AcyclicOrientation>,
}

/// The orientation a set of injective labels induces: each edge points from
/// the smaller label to the larger.
fn induced_orientation(g: &Graph, labels: &[usize]) -> AcyclicOrientation {
    let dirs: Vec<bool> = g.edges().iter().map(|&(a, b)| labels[b] < labels[a]).collect();
    AcyclicOrientation::from_dirs(g, dirs).expect("label-induced orientations are acyclic")
}

/// Core repair loop: starting from injective labels (arbitrary values), swap
/// extreme labels over the disagreement set until the induced orientation
/// equals `target`. Requires every vertex of `target` to be a source or a
/// sink; under that hypothesis each round removes both swapped vertices from
/// the disagreement set for good, so at most `⌊n/2⌋` rounds run.
pub fn theta_core(
    g: &Graph,
    start: &[usize],
    target: &AcyclicOrientation,
) -> Result<(Vec<usize>, ThetaTrace), MapError> {
    let n = g.vertex_count();
    if start.len() != n {
        return Err(MapError::LabelCount { got: start.len(), expected: n });
    }
    let mut sorted = start.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(MapError::NotInjective);
    }
    if target.host() != g {
        return Err(MapError::HostMismatch);
    }
    if !(0..n).all(|v| target.indegree(v) == 0 || target.outdegree(v) == 0) {
        return Err(MapError::TargetNotSourceSink);
    }

    let mut labels = start.to_vec();
    let mut swaps = Vec::new();
    let mut b_sets = Vec::new();
    let mut orientations = Vec::new();
    loop {
        let o_k = induced_orientation(g, &labels);
        let mut b = VertexSet::EMPTY;
        for (idx, &(a, c)) in g.edges().iter().enumerate() {
            if o_k.dirs()[idx] != target.dirs()[idx] {
                b = b.with(a).with(c);
            }
        }
        orientations.push(o_k);
        if b.is_empty() {
            break;
        }
        let u = b.iter().min_by_key(|&x| labels[x]).expect("b nonempty");
        let v = b.iter().max_by_key(|&x| labels[x]).expect("b nonempty");
        debug_assert_ne!(u, v, "a disagreeing edge contributes two vertices");
        if let Some(&prev) = b_sets.last() {
            debug_assert!(
                b.is_subset_of(prev) && b != prev,
                "disagreement sets must shrink strictly"
            );
        }
        b_sets.push(b);
        swaps.push((u, v));
        labels.swap(u, v);
        assert!(
            swaps.len() <= n / 2 + 1,
            "repair loop exceeded its provable bound; target hypothesis violated"
        );
    }
    Ok((labels, ThetaTrace { swaps, b_sets, orientations }))
}

/// Repair an extension of `o` into an extension of the upward bipartite
/// orientation of the (connected, bipartite) host. Injective on extensions
/// of each fixed `o`; bijective exactly when `o` is one of the two bipartite
/// orientations.
pub fn theta(
    o: &AcyclicOrientation,
    f: &LinearExtension,
) -> Result<(LinearExtension, ThetaTrace), MapError> {
    let g = o.host();
    if f.len() != g.vertex_count() {
        return Err(MapError::LabelCount { got: f.len(), expected: g.vertex_count() });
    }
    if !o.is_extended_by(f.labels()) {
        return Err(MapError::NotAnExtension);
    }
    let (_, up) = bipartite_orientations(g)?;
    let (labels, trace) = theta_core(g, f.labels(), &up)?;
    let out = LinearExtension::new(labels).expect("swaps preserve bijectivity");
    Ok((out, trace))
}

/// Attempt to recover the unique preimage of `gext` under [`theta`] for the
/// orientation `o`: run the mirrored iteration against `o` itself, then
/// verify. `None` when `gext` is outside the image.
pub fn theta_inverse(
    o: &AcyclicOrientation,
    gext: &LinearExtension,
) -> Result<Option<LinearExtension>, MapError> {
    let g = o.host();
    let n = g.vertex_count();
    if gext.len() != n {
        return Err(MapError::LabelCount { got: gext.len(), expected: n });
    }
    bipartite_orientations(g)?; // host must be connected bipartite, as for theta
    let mut labels = gext.labels().to_vec();
    // `o` need not make every vertex extreme, so the shrink argument does not
    // apply; run at most the provable round budget, then verify.
    for _ in 0..n / 2 + 1 {
        let q = induced_orientation(g, &labels);
        let mut c = VertexSet::EMPTY;
        for (idx, &(a, b)) in g.edges().iter().enumerate() {
            if q.dirs()[idx] != o.dirs()[idx] {
                c = c.with(a).with(b);
            }
        }
        if c.is_empty() {
            break;
        }
        let u = c.iter().min_by_key(|&x| labels[x]).expect("c nonempty");
        let v = c.iter().max_by_key(|&x| labels[x]).expect("c nonempty");
        labels.swap(u, v);
    }
    let candidate = LinearExtension::new(labels).expect("swaps preserve bijectivity");
    if !o.is_extended_by(candidate.labels()) {
        return Ok(None);
    }
    let (image, _) = theta(o, &candidate)?;
    Ok(if &image == gext { Some(candidate) } else { None })
}

/// Result of the odd-cycle repair: the output extension, the canonical
/// directed 2-path `(u, v, w)` of the input orientation, and the
/// almost-bipartite orientation the output extends (whose unique directed
/// 2-path is exactly `u -> v -> w`).
#[derive(Debug, Clone)]
pub struct ThetaPrimeOutcome {
    pub g_ext: LinearExtension,
    pub two_path: (usize, usize, usize),
    pub o_uvw: AcyclicOrientation,
}

/// The deterministic choice of directed 2-path: smallest middle vertex (a
/// vertex that is neither source nor sink), then its smallest in-neighbor.
/// On a cycle the middle vertex determines the path entirely.
fn canonical_two_path(o: &AcyclicOrientation) -> (usize, usize, usize) {
    let n = o.host().vertex_count();
    let v = (0..n)
        .find(|&x| o.indegree(x) > 0 && o.outdegree(x) > 0)
        .expect("an acyclic orientation of an odd cycle has a middle vertex");
    let u = o.in_neighbors(v).min().expect("middle has an in-neighbor");
    let w = o.out_neighbors(v).min().expect("middle has an out-neighbor");
    (u, v, w)
}

/// Repair an extension of an odd-cycle orientation into an extension of an
/// almost-bipartite orientation (exactly one directed 2-path). The middle of
/// the canonical 2-path keeps its label; the rest of the labels are repaired
/// on the even cycle obtained by replacing `u -> v -> w` with the edge
/// `{u, w}`. Identity when `o` is already almost-bipartite. Injective on
/// extensions of each fixed `o`; surjective exactly when `o` is
/// almost-bipartite.
pub fn theta_prime(
    o: &AcyclicOrientation,
    f: &LinearExtension,
) -> Result<ThetaPrimeOutcome, MapError> {
    let almost = o.is_almost_bipartite()?; // also validates the odd-cycle host
    let g = o.host();
    let n = g.vertex_count();
    if f.len() != n {
        return Err(MapError::LabelCount { got: f.len(), expected: n });
    }
    if !o.is_extended_by(f.labels()) {
        return Err(MapError::NotAnExtension);
    }
    let (u, v, w) = canonical_two_path(o);
    if almost {
        // The orientation already has a unique directed 2-path; nothing to
        // repair (this also covers every acyclic orientation of a triangle,
        // where the contracted graph would degenerate).
        return Ok(ThetaPrimeOutcome { g_ext: f.clone(), two_path: (u, v, w), o_uvw: o.clone() });
    }

    // Even cycle on V minus v: drop the two edges at v, join u and w.
    let old_ids: Vec<usize> = (0..n).filter(|&x| x != v).collect();
    let new_id = |x: usize| if x > v { x - 1 } else { x };
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (new_id(a), new_id(b)))
        .collect();
    let (nu, nw) = (new_id(u), new_id(w));
    edges.push((nu.min(nw), nu.max(nw)));
    let reduced = Graph::new(n - 1, &edges).expect("contracted odd cycle is a simple even cycle");

    // The restricted labels induce the start orientation: on shared edges it
    // agrees with o, and f(u) < f(v) < f(w) forces u -> w on the new edge.
    let restricted: Vec<usize> = old_ids.iter().map(|&x| f.label_of(x)).collect();
    let (down, up) = bipartite_orientations(&reduced)?;
    let target = if up.out_neighbors(nu).contains(nw) { up } else { down };
    debug_assert!(target.out_neighbors(nu).contains(nw));
    let (repaired, _) = theta_core(&reduced, &restricted, &target)?;

    // Lift back: v keeps its label, everything else takes the repaired one.
    let mut labels = vec![0usize; n];
    labels[v] = f.label_of(v);
    for (new_x, &old_x) in old_ids.iter().enumerate() {
        labels[old_x] = repaired[new_x];
    }
    let g_ext = LinearExtension::new(labels).expect("lift preserves bijectivity");

    // The output orientation: the repaired target on the surviving cycle
    // edges, plus the distinguished 2-path through v.
    let chord = reduced.edge_index(nu.min(nw), nu.max(nw)).expect("chord exists");
    let mut pairs: Vec<[usize; 2]> = vec![[u, v], [v, w]];
    for (idx, (tail, head)) in target.directed_edges().enumerate() {
        if idx != chord {
            pairs.push([old_ids[tail], old_ids[head]]);
        }
    }
    let o_uvw = AcyclicOrientation::from_directed_pairs(g, &pairs)?;
    debug_assert!(o_uvw.is_almost_bipartite().expect("host is the same odd cycle"));
    debug_assert!(o_uvw.is_extended_by(g_ext.labels()));
    Ok(ThetaPrimeOutcome { g_ext, two_path: (u, v, w), o_uvw })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orient::enumerate_acyclic_orientations;
    use crate::poset::Poset;
    use std::collections::HashSet;

    fn extensions_of(o: &AcyclicOrientation) -> Vec<LinearExtension> {
        Poset::from_orientation(o).enumerate_linear_extensions().unwrap().collect()
    }

    fn ext(labels: &[usize]) -> LinearExtension {
        LinearExtension::new(labels.to_vec()).unwrap()
    }

    #[test]
    fn rev_complements_labels_and_reverses_the_orientation() {
        assert_eq!(rev(&ext(&[1, 2, 3])).labels(), &[3, 2, 1]);
        let f = ext(&[2, 4, 1, 3]);
        assert_eq!(rev(&rev(&f)), f, "involution");
        // Extensions of one bipartite orientation of P3 map onto the other.
        let p3 = Graph::path(3);
        let (down, up) = bipartite_orientations(&p3).unwrap();
        for f in extensions_of(&down) {
            assert!(up.is_extended_by(rev(&f).labels()));
        }
    }

    #[test]
    fn rev_uv_swaps_exactly_two_labels() {
        let f = ext(&[1, 2, 3]);
        let swapped = rev_uv(&f, 0, 2).unwrap();
        assert_eq!(swapped.labels(), &[3, 2, 1]);
        assert_eq!(rev_uv(&swapped, 0, 2).unwrap(), f, "involution");
        assert!(matches!(rev_uv(&f, 1, 1), Err(MapError::SameVertex)));
        assert!(matches!(rev_uv(&f, 0, 7), Err(MapError::LabelCount { .. })));
    }

    #[test]
    fn rev_uv_inverted_pairs_pin_an_extreme_label() {
        // Exhaustively on 4 labels: when the swap inverts the relative order
        // of a pair, that pair sits inside the swapped label interval and
        // touches one of its ends.
        let perms = Poset::antichain(4).enumerate_linear_extensions().unwrap();
        for f in perms {
            for u in 0..4 {
                for v in 0..4 {
                    if u == v {
                        continue;
                    }
                    let g = rev_uv(&f, u, v).unwrap();
                    let lo = f.label_of(u).min(f.label_of(v));
                    let hi = f.label_of(u).max(f.label_of(v));
                    for x in 0..4 {
                        for y in 0..4 {
                            let inverted =
                                f.label_of(x) < f.label_of(y) && g.label_of(x) > g.label_of(y);
                            if inverted {
                                let (a, b) = (f.label_of(x), f.label_of(y));
                                assert!(lo <= a && a < b && b <= hi);
                                assert!(a == lo || b == hi);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn theta_reproduces_the_hand_executed_path_example() {
        let p3 = Graph::path(3);
        let chain = AcyclicOrientation::from_directed_pairs(&p3, &[[0, 1], [1, 2]]).unwrap();
        let (out, trace) = theta(&chain, &ext(&[1, 2, 3])).unwrap();
        assert_eq!(out.labels(), &[1, 3, 2]);
        assert_eq!(trace.swaps, vec![(1, 2)]);
        assert_eq!(trace.b_sets, vec![[1usize, 2].into_iter().collect::<VertexSet>()]);
        assert_eq!(trace.orientations.len(), 2);
        let (_, up) = bipartite_orientations(&p3).unwrap();
        assert_eq!(trace.orientations[1], up);
    }

    #[test]
    fn theta_is_the_identity_on_the_target_orientation() {
        for g in [Graph::path(3), Graph::cycle(4), Graph::cycle(6)] {
            let (_, up) = bipartite_orientations(&g).unwrap();
            for f in extensions_of(&up) {
                let (out, trace) = theta(&up, &f).unwrap();
                assert_eq!(out, f);
                assert!(trace.swaps.is_empty());
            }
        }
    }

    fn check_trace_invariants(f: &LinearExtension, trace: &ThetaTrace) {
        let m = trace.swaps.len();
        assert_eq!(trace.b_sets.len(), m);
        assert_eq!(trace.orientations.len(), m + 1);
        // Pairs are pairwise disjoint.
        let mut touched = VertexSet::EMPTY;
        for &(u, v) in &trace.swaps {
            assert!(!touched.contains(u) && !touched.contains(v));
            touched = touched.with(u).with(v);
        }
        // Nested label interval under the original labeling:
        // f(u_1) < ... < f(u_m) < f(v_m) < ... < f(v_1).
        let mut seq: Vec<usize> = trace.swaps.iter().map(|&(u, _)| f.label_of(u)).collect();
        seq.extend(trace.swaps.iter().rev().map(|&(_, v)| f.label_of(v)));
        assert!(seq.windows(2).all(|w| w[0] < w[1]), "interval nesting fails: {:?}", seq);
        // Disagreement sets shrink by at least two vertices each round.
        for k in 1..m {
            assert!(trace.b_sets[k].is_subset_of(trace.b_sets[k - 1]));
            assert!(trace.b_sets[k].len() + 2 <= trace.b_sets[k - 1].len());
        }
        if m > 0 {
            assert!(m <= trace.b_sets[0].len() / 2, "m exceeds half the first B");
        }
    }

    #[test]
    fn theta_trace_invariants_hold_exhaustively_on_small_hosts() {
        for g in [Graph::path(4), Graph::cycle(4), Graph::cycle(6)] {
            for o in enumerate_acyclic_orientations(&g) {
                for f in extensions_of(&o) {
                    let (_, trace) = theta(&o, &f).unwrap();
                    check_trace_invariants(&f, &trace);
                }
            }
        }
    }

    #[test]
    fn theta_injects_into_the_target_extensions_with_equality_iff_bipartite() {
        let g = Graph::path(4);
        let (down, up) = bipartite_orientations(&g).unwrap();
        let target_count = extensions_of(&up).len();
        for o in enumerate_acyclic_orientations(&g) {
            let mut image = HashSet::new();
            let domain = extensions_of(&o);
            for f in &domain {
                let (out, _) = theta(&o, f).unwrap();
                assert!(up.is_extended_by(out.labels()), "image must extend the target");
                assert!(image.insert(out), "distinct inputs must map to distinct outputs");
            }
            assert_eq!(image.len(), domain.len());
            if o == down || o == up {
                assert_eq!(image.len(), target_count);
            } else {
                assert!(image.len() < target_count);
            }
        }
    }

    #[test]
    fn theta_on_the_downward_orientation_differs_from_label_reversal() {
        // The two natural bijections from the downward to the upward
        // extensions disagree in general; find a witness on the 6-cycle.
        let g = Graph::cycle(6);
        let (down, _) = bipartite_orientations(&g).unwrap();
        let mut witness = false;
        for f in extensions_of(&down) {
            let (out, _) = theta(&down, &f).unwrap();
            if out != rev(&f) {
                witness = true;
                break;
            }
        }
        assert!(witness, "expected some extension where theta and rev disagree");
    }

    #[test]
    fn theta_inverse_round_trips_and_detects_the_gap() {
        // Round trip on every orientation of P3 and C6.
        for g in [Graph::path(3), Graph::cycle(6)] {
            for o in enumerate_acyclic_orientations(&g) {
                for f in extensions_of(&o) {
                    let (image, _) = theta(&o, &f).unwrap();
                    assert_eq!(theta_inverse(&o, &image).unwrap(), Some(f));
                }
            }
        }
        // The chain orientation of P3 misses (2,3,1): it extends the target
        // but has no preimage.
        let p3 = Graph::path(3);
        let chain = AcyclicOrientation::from_directed_pairs(&p3, &[[0, 1], [1, 2]]).unwrap();
        let gap = ext(&[2, 3, 1]);
        let (_, up) = bipartite_orientations(&p3).unwrap();
        assert!(up.is_extended_by(gap.labels()));
        assert_eq!(theta_inverse(&chain, &gap).unwrap(), None);
        // On the target itself the inverse is total and the identity.
        for f in extensions_of(&up) {
            assert_eq!(theta_inverse(&up, &f).unwrap(), Some(f));
        }
    }

    #[test]
    fn theta_core_accepts_arbitrary_injective_labels() {
        // The repair only compares labels, so any injective values work: run
        // all 4! arrangements of a scattered label set on the 4-cycle.
        let g = Graph::cycle(4);
        let (_, up) = bipartite_orientations(&g).unwrap();
        let pool = [3usize, 8, 21, 40];
        for perm in Poset::antichain(4).enumerate_linear_extensions().unwrap() {
            let labels: Vec<usize> = (0..4).map(|v| pool[perm.label_of(v) - 1]).collect();
            let (out, _) = theta_core(&g, &labels, &up).unwrap();
            let mut sorted_out = out.clone();
            sorted_out.sort_unstable();
            assert_eq!(sorted_out, pool.to_vec(), "labels are permuted, never invented");
            // The final labels induce the target.
            for (idx, &(a, b)) in g.edges().iter().enumerate() {
                assert_eq!(out[b] < out[a], up.dirs()[idx]);
            }
            // Compressing the labels to ranks commutes with the repair.
            let ranks: Vec<usize> = (0..4).map(|v| perm.label_of(v)).collect();
            let (rank_out, _) = theta_core(&g, &ranks, &up).unwrap();
            let compress = |l: usize| pool.iter().position(|&p| p == l).unwrap() + 1;
            assert_eq!(out.iter().map(|&l| compress(l)).collect::<Vec<_>>(), rank_out);
        }
    }

    #[test]
    fn theta_rejects_bad_inputs() {
        let c5 = Graph::cycle(5);
        let o = AcyclicOrientation::from_bijection(&c5, &[1, 2, 3, 4, 5]).unwrap();
        assert!(matches!(
            theta(&o, &ext(&[1, 2, 3, 4, 5])),
            Err(MapError::Orientation(OrientationError::NotBipartite))
        ));
        let p3 = Graph::path(3);
        let chain = AcyclicOrientation::from_directed_pairs(&p3, &[[0, 1], [1, 2]]).unwrap();
        assert!(matches!(theta(&chain, &ext(&[3, 2, 1])), Err(MapError::NotAnExtension)));
        assert!(matches!(theta(&chain, &ext(&[1, 2])), Err(MapError::LabelCount { .. })));
        let (_, up) = bipartite_orientations(&p3).unwrap();
        let scrambled = vec![1usize, 1, 2];
        assert!(matches!(theta_core(&p3, &scrambled, &up), Err(MapError::NotInjective)));
        assert!(matches!(theta_core(&p3, &[1, 2, 3], &chain), Err(MapError::TargetNotSourceSink)));
    }

    #[test]
    fn theta_prime_reproduces_the_hand_executed_cycle_example() {
        let c5 = Graph::cycle(5);
        let o =
            AcyclicOrientation::from_directed_pairs(&c5, &[[0, 1], [1, 2], [2, 3], [4, 3], [0, 4]])
                .unwrap();
        assert!(!o.is_almost_bipartite().unwrap());
        let outcome = theta_prime(&o, &ext(&[1, 2, 3, 5, 4])).unwrap();
        assert_eq!(outcome.two_path, (0, 1, 2));
        assert_eq!(outcome.g_ext.labels(), &[1, 2, 5, 3, 4]);
        let expected =
            AcyclicOrientation::from_directed_pairs(&c5, &[[0, 1], [1, 2], [3, 2], [3, 4], [0, 4]])
                .unwrap();
        assert_eq!(outcome.o_uvw, expected);
        assert!(outcome.o_uvw.is_almost_bipartite().unwrap());
        assert!(outcome.o_uvw.is_extended_by(outcome.g_ext.labels()));
    }

    #[test]
    fn theta_prime_is_the_identity_on_almost_bipartite_orientations() {
        let c5 = Graph::cycle(5);
        for o in enumerate_acyclic_orientations(&c5) {
            if !o.is_almost_bipartite().unwrap() {
                continue;
            }
            for f in extensions_of(&o) {
                let outcome = theta_prime(&o, &f).unwrap();
                assert_eq!(outcome.g_ext, f);
                assert_eq!(outcome.o_uvw, o);
            }
        }
        // Triangles: every acyclic orientation is almost bipartite, so the
        // map is always the identity there.
        let c3 = Graph::cycle(3);
        for o in enumerate_acyclic_orientations(&c3) {
            assert!(o.is_almost_bipartite().unwrap());
            for f in extensions_of(&o) {
                assert_eq!(theta_prime(&o, &f).unwrap().g_ext, f);
            }
        }
    }

    #[test]
    fn theta_prime_injects_with_a_per_orientation_constant_output_orientation() {
        let c5 = Graph::cycle(5);
        for o in enumerate_acyclic_orientations(&c5) {
            let mut image = HashSet::new();
            let mut shared_target: Option<AcyclicOrientation> = None;
            let domain = extensions_of(&o);
            for f in &domain {
                let outcome = theta_prime(&o, f).unwrap();
                assert!(outcome.o_uvw.is_extended_by(outcome.g_ext.labels()));
                assert_eq!(
                    outcome.g_ext.label_of(outcome.two_path.1),
                    f.label_of(outcome.two_path.1),
                    "the middle vertex keeps its label"
                );
                match &shared_target {
                    None => shared_target = Some(outcome.o_uvw.clone()),
                    Some(t) => assert_eq!(&outcome.o_uvw, t),
                }
                assert!(image.insert(outcome.g_ext));
            }
            assert_eq!(image.len(), domain.len(), "distinct outputs");
            // Surjectivity exactly on almost-bipartite inputs.
            let target = shared_target.unwrap();
            let codomain = extensions_of(&target).len();
            if o.is_almost_bipartite().unwrap() {
                assert_eq!(image.len(), codomain);
            } else {
                assert!(image.len() < codomain);
            }
        }
    }

    #[test]
    fn theta_prime_rejects_bad_hosts_and_labelings() {
        let c4 = Graph::cycle(4);
        let o = AcyclicOrientation::from_bijection(&c4, &[1, 2, 3, 4]).unwrap();
        assert!(matches!(
            theta_prime(&o, &ext(&[1, 2, 3, 4])),
            Err(MapError::Orientation(OrientationError::NotOddCycle))
        ));
        let c5 = Graph::cycle(5);
        let o = AcyclicOrientation::from_bijection(&c5, &[1, 2, 3, 4, 5]).unwrap();
        assert!(matches!(theta_prime(&o, &ext(&[5, 4, 3, 2, 1])), Err(MapError::NotAnExtension)));
    }
}
