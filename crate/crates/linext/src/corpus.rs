//! Shared graph and poset corpora for the verification suites:
//! exhaustive families at small sizes, classical named hosts, and seeded
//! random samples. Everything here is deterministic given a seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::opt::find_transitive_orientation;
use crate::orient::AcyclicOrientation;
use crate::poset::Poset;
use crate::substream_seed;

/// Vertex pairs of the `n`-clique in canonical (lexicographic) order —
/// the same order a graph stores its edge list in.
pub fn canonical_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Every labeled graph on exactly `n` vertices, by edge-subset mask.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs = canonical_pairs(n);
    assert!(pairs.len() < 24, "exhaustive enumeration is for small n");
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).expect("within limits")
        })
        .collect()
}

/// Every connected bipartite labeled graph on at most `max_n` vertices.
pub fn connected_bipartite_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for g in all_graphs(n) {
            if matches!(g.bipartition(), Ok(Some(_))) {
                out.push(g);
            }
        }
    }
    out
}

/// A uniformly random labeled tree, decoded from a random Prüfer
/// sequence.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::edgeless(1);
    }
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut ends = (0..n).filter(|&v| degree[v] == 1);
    let a = ends.next().expect("two ends remain");
    let b = ends.next().expect("two ends remain");
    edges.push((a.min(b), a.max(b)));
    Graph::new(n, &edges).expect("a tree is a valid graph")
}

/// One G(n, p) draw from the supplied generator.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<(usize, usize)> =
        canonical_pairs(n).into_iter().filter(|_| rng.random::<f64>() < p).collect();
    Graph::new(n, &edges).expect("within limits")
}

/// A connected G(n, p) draw (rejection sampling).
pub fn random_connected_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let g = random_graph(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random poset on `n` elements: scatter relations consistently with a
/// random linear order, then close transitively.
pub fn random_poset(n: usize, rng: &mut ChaCha8Rng) -> Poset {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < 0.5 {
                relations.push((order[i], order[j]));
            }
        }
    }
    Poset::from_relations(n, &relations).expect("relations follow a linear order")
}

/// A random acyclic orientation: the one induced by a random bijective
/// labeling.
pub fn random_orientation(g: &Graph, rng: &mut ChaCha8Rng) -> AcyclicOrientation {
    let n = g.vertex_count();
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    AcyclicOrientation::from_bijection(g, &labels).expect("bijections orient acyclically")
}

/// Graphs with a transitive orientation: paths, even cycles, complete
/// multipartite hosts, and `randoms` random graphs kept only when a
/// transitive orientation exists. All members have at most 7 vertices.
pub fn comparability_corpus(randoms: usize, seed: u64) -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=7).map(Graph::path).collect();
    out.push(Graph::cycle(4));
    out.push(Graph::cycle(6));
    out.push(Graph::complete(3));
    out.push(Graph::complete(4));
    out.push(Graph::complete_multipartite(&[2, 2]));
    out.push(Graph::complete_multipartite(&[2, 3]));
    out.push(Graph::complete_multipartite(&[3, 3]));
    out.push(Graph::complete_multipartite(&[2, 2, 2]));
    out.push(Graph::complete_multipartite(&[1, 2, 3]));
    let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, 0xC0));
    let mut found = 0;
    while found < randoms {
        let n = rng.random_range(4..=7);
        let g = random_graph(n, 0.5, &mut rng);
        if find_transitive_orientation(&g).is_some() {
            out.push(g);
            found += 1;
        }
    }
    out
}

/// Connected hosts for bound checks: paths, cycles, cliques, complete
/// multipartite graphs, and `randoms` random connected graphs, all with
/// 2 to 7 vertices.
pub fn bounds_corpus(randoms: usize, seed: u64) -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=7).map(Graph::path).collect();
    out.extend((3..=7).map(Graph::cycle));
    out.extend((2..=5).map(Graph::complete));
    out.push(Graph::complete_multipartite(&[2, 2]));
    out.push(Graph::complete_multipartite(&[2, 3]));
    out.push(Graph::complete_multipartite(&[2, 2, 2]));
    out.push(Graph::complete_multipartite(&[1, 5]));
    let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, 0xB0));
    for _ in 0..randoms {
        let n = rng.random_range(2..=6);
        out.push(random_connected_graph(n, 0.5, &mut rng));
    }
    out
}
