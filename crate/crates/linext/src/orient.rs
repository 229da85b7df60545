//! Acyclic orientations of a graph.
//!
//! An orientation is stored as one direction bit per canonical edge of the
//! host graph: bit `i` clear means edge `(u, v)` (with `u < v`) points
//! `u -> v`, set means `v -> u`. Two orientations are equal exactly when
//! their hosts and direction bits agree, and the ordering used everywhere
//! for deterministic output is the numeric value of that bitmask (edge 0 is
//! the least significant bit).

use std::cmp::Ordering;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrientationError {
    #[error("labels length {got} does not match vertex count {expected}")]
    LabelLength { got: usize, expected: usize },
    #[error("labels must be a bijection onto 1..=n")]
    NotABijection,
    #[error("orientation contains a directed cycle")]
    Cyclic,
    #[error("pair ({tail}, {head}) is not an edge of the host graph")]
    NotAnEdge { tail: usize, head: usize },
    #[error("each edge must be oriented exactly once")]
    EdgeCoverMismatch,
    #[error("host graph is not an odd cycle")]
    NotOddCycle,
    #[error("host graph is not bipartite")]
    NotBipartite,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per-orientation triple counts entering the degree-imbalance identity.
///
/// `tri`: directed triangles `u->v, v->w, u->w`. `inc`: nonadjacent pairs
/// sharing a common out-neighbor source or a common in-neighbor sink. `com`:
/// directed two-paths `u->v->w` whose endpoints are nonadjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleStats {
    pub tri: u64,
    pub inc: u64,
    pub com: u64,
}

/// An acyclic orientation of a [`Graph`].
#[derive(Clone)]
pub struct AcyclicOrientation {
    host: Arc<Graph>,
    dirs: Vec<bool>,
    out_adj: Vec<u64>, // derived from dirs; not part of identity
}

impl PartialEq for AcyclicOrientation {
    fn eq(&self, other: &Self) -> bool {
        self.host == other.host && self.dirs == other.dirs
    }
}

impl Eq for AcyclicOrientation {}

impl std::hash::Hash for AcyclicOrientation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.host.hash(state);
        self.dirs.hash(state);
    }
}

impl PartialOrd for AcyclicOrientation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AcyclicOrientation {
    /// Orders by host, then by the numeric value of the direction bitmask.
    fn cmp(&self, other: &Self) -> Ordering {
        self.host
            .vertex_count()
            .cmp(&other.host.vertex_count())
            .then_with(|| self.host.edges().cmp(other.host.edges()))
            .then_with(|| self.dirs.iter().rev().cmp(other.dirs.iter().rev()))
    }
}

impl std::fmt::Debug for AcyclicOrientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Orientation{:?}", self.directed_edges().collect::<Vec<_>>())
    }
}

impl AcyclicOrientation {
    /// Build from explicit direction bits, validating acyclicity.
    pub fn from_dirs(g: &Graph, dirs: Vec<bool>) -> Result<Self, OrientationError> {
        if dirs.len() != g.edge_count() {
            return Err(OrientationError::EdgeCoverMismatch);
        }
        let o = Self::from_dirs_unchecked(Arc::new(g.clone()), dirs);
        if o.has_directed_cycle() {
            return Err(OrientationError::Cyclic);
        }
        Ok(o)
    }

    fn from_dirs_unchecked(host: Arc<Graph>, dirs: Vec<bool>) -> Self {
        let mut out_adj = vec![0u64; host.vertex_count()];
        for (i, &(u, v)) in host.edges().iter().enumerate() {
            let (tail, head) = if dirs[i] { (v, u) } else { (u, v) };
            out_adj[tail] |= 1 << head;
        }
        AcyclicOrientation { host, dirs, out_adj }
    }

    /// Orient every edge from the endpoint with the smaller label to the one
    /// with the larger. `labels` must be a bijection onto `1..=n`; the result
    /// is automatically acyclic.
    pub fn from_bijection(g: &Graph, labels: &[usize]) -> Result<Self, OrientationError> {
        let n = g.vertex_count();
        if labels.len() != n {
            return Err(OrientationError::LabelLength { got: labels.len(), expected: n });
        }
        let mut seen = vec![false; n + 1];
        for &l in labels {
            if l == 0 || l > n || seen[l] {
                return Err(OrientationError::NotABijection);
            }
            seen[l] = true;
        }
        let dirs = g.edges().iter().map(|&(u, v)| labels[u] > labels[v]).collect();
        Ok(Self::from_dirs_unchecked(Arc::new(g.clone()), dirs))
    }

    /// Reconstruct from a serialized list of `(tail, head)` pairs. Every
    /// host edge must appear exactly once, in any order.
    pub fn from_directed_pairs(g: &Graph, pairs: &[[usize; 2]]) -> Result<Self, OrientationError> {
        if pairs.len() != g.edge_count() {
            return Err(OrientationError::EdgeCoverMismatch);
        }
        let mut dirs: Vec<Option<bool>> = vec![None; g.edge_count()];
        for &[tail, head] in pairs {
            let idx = g.edge_index(tail, head).ok_or(OrientationError::NotAnEdge { tail, head })?;
            if dirs[idx].is_some() {
                return Err(OrientationError::EdgeCoverMismatch);
            }
            dirs[idx] = Some(tail > head);
        }
        let dirs: Vec<bool> = dirs.into_iter().map(|d| d.unwrap()).collect();
        Self::from_dirs(g, dirs)
    }

    /// Directed pairs `(tail, head)` in canonical edge order — the
    /// serialization format.
    pub fn to_directed_pairs(&self) -> Vec<[usize; 2]> {
        self.directed_edges().map(|(t, h)| [t, h]).collect()
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn host_arc(&self) -> Arc<Graph> {
        Arc::clone(&self.host)
    }

    pub fn dirs(&self) -> &[bool] {
        &self.dirs
    }

    /// Directed edges as `(tail, head)`, in canonical edge order.
    pub fn directed_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.host
            .edges()
            .iter()
            .zip(&self.dirs)
            .map(|(&(u, v), &flip)| if flip { (v, u) } else { (u, v) })
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.out_adj[v])
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.host.neighbors(v).difference(self.out_neighbors(v))
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.out_neighbors(v).len()
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.in_neighbors(v).len()
    }

    /// Sources have indegree 0, sinks outdegree 0.
    pub fn sources(&self) -> VertexSet {
        (0..self.host.vertex_count()).filter(|&v| self.indegree(v) == 0).collect()
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.host.vertex_count()).filter(|&v| self.outdegree(v) == 0).collect()
    }

    /// The reversal: every edge flipped. Acyclicity is preserved.
    pub fn reverse(&self) -> AcyclicOrientation {
        Self::from_dirs_unchecked(Arc::clone(&self.host), self.dirs.iter().map(|&d| !d).collect())
    }

    /// Does the labeling `f` extend this orientation, i.e. `f(tail) <
    /// f(head)` for every directed edge? (No bijectivity check here.)
    pub fn is_extended_by(&self, labels: &[usize]) -> bool {
        labels.len() == self.host.vertex_count()
            && self.directed_edges().all(|(t, h)| labels[t] < labels[h])
    }

    fn has_directed_cycle(&self) -> bool {
        // Kahn's algorithm: peel vertices of indegree zero.
        let n = self.host.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.indegree(v)).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut peeled = 0;
        while let Some(v) = queue.pop() {
            peeled += 1;
            for u in self.out_neighbors(v).iter() {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    queue.push(u);
                }
            }
        }
        peeled < n
    }

    /// Number of composable directed pairs `u->v, v->w`: the sum over
    /// vertices of indegree times outdegree.
    pub fn count_directed_two_paths(&self) -> u64 {
        (0..self.host.vertex_count())
            .map(|v| self.indegree(v) as u64 * self.outdegree(v) as u64)
            .sum()
    }

    /// For an odd-cycle host only: does this orientation have exactly one
    /// directed two-path? (Those are the orientations that maximize the
    /// extension count on odd cycles.)
    pub fn is_almost_bipartite(&self) -> Result<bool, OrientationError> {
        let g = self.host();
        let n = g.vertex_count();
        let odd_cycle = n >= 3
            && n % 2 == 1
            && g.edge_count() == n
            && (0..n).all(|v| g.degree(v) == 2)
            && g.is_connected();
        if !odd_cycle {
            return Err(OrientationError::NotOddCycle);
        }
        Ok(self.count_directed_two_paths() == 1)
    }

    /// Transitivity: whenever `u->v` and `v->w`, the edge `{u, w}` exists
    /// (and then acyclicity forces it to point `u->w`).
    pub fn is_transitive(&self) -> bool {
        let n = self.host.vertex_count();
        for v in 0..n {
            for u in self.in_neighbors(v).iter() {
                for w in self.out_neighbors(v).iter() {
                    if !self.host.has_edge(u, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Triple counts for the degree-imbalance identity; see [`TripleStats`].
    pub fn triple_stats(&self) -> TripleStats {
        let n = self.host.vertex_count();
        let mut tri = 0u64;
        let mut inc = 0u64;
        let mut com = 0u64;
        for v in 0..n {
            let ins = self.in_neighbors(v);
            let outs = self.out_neighbors(v);
            // Two-paths through v, split by whether the endpoints see each other.
            for u in ins.iter() {
                for w in outs.iter() {
                    if self.host.has_edge(u, w) {
                        tri += 1;
                    } else {
                        com += 1;
                    }
                }
            }
            // Nonadjacent pairs fanned out from v or fanned into v.
            for side in [outs, ins] {
                let members: Vec<usize> = side.iter().collect();
                for (i, &a) in members.iter().enumerate() {
                    for &b in &members[i + 1..] {
                        if !self.host.has_edge(a, b) {
                            inc += 1;
                        }
                    }
                }
            }
        }
        TripleStats { tri, inc, com }
    }

    /// Half the sum of squared degree imbalances — always an integer.
    pub fn half_imbalance_square_sum(&self) -> u64 {
        let total: i64 = (0..self.host.vertex_count())
            .map(|v| {
                let d = self.indegree(v) as i64 - self.outdegree(v) as i64;
                d * d
            })
            .sum();
        debug_assert!(total % 2 == 0);
        (total / 2) as u64
    }

    /// The point `(outdeg(v) - indeg(v))` per vertex: the vertex of the
    /// graphical zonotope this orientation maps to.
    pub fn zonotope_vertex(&self) -> Vec<i64> {
        (0..self.host.vertex_count())
            .map(|v| self.outdegree(v) as i64 - self.indegree(v) as i64)
            .collect()
    }

    /// Squared Euclidean norm of [`Self::zonotope_vertex`].
    pub fn zonotope_norm_sq(&self) -> u64 {
        self.zonotope_vertex().iter().map(|&d| (d * d) as u64).sum()
    }
}

/// The two all-one-way orientations of a connected bipartite graph, as
/// `(down, up)`: with `(part0, part1)` the bipartition (vertex 0 in
/// `part0`), `up` directs every edge from `part0` into `part1` and `down`
/// the reverse. Errors on disconnected or non-bipartite input.
pub fn bipartite_orientations(
    g: &Graph,
) -> Result<(AcyclicOrientation, AcyclicOrientation), OrientationError> {
    let (part0, _part1) = g.bipartition()?.ok_or(OrientationError::NotBipartite)?;
    let host = Arc::new(g.clone());
    let up_dirs: Vec<bool> = g
        .edges()
        .iter()
        .map(|&(u, _v)| !part0.contains(u)) // tail must be the part0 endpoint
        .collect();
    let down_dirs = up_dirs.iter().map(|&d| !d).collect();
    let up = AcyclicOrientation::from_dirs_unchecked(Arc::clone(&host), up_dirs);
    let down = AcyclicOrientation::from_dirs_unchecked(host, down_dirs);
    Ok((down, up))
}

/// Stream all acyclic orientations of `g` in ascending bitmask order.
///
/// Directions are assigned edge by edge with an incrementally maintained
/// reachability table, so any prefix that already closes a directed cycle
/// prunes the whole block of masks sharing it. Memory is O(n * m) regardless
/// of how many orientations exist; running time is the caller's budget to
/// manage.
pub fn enumerate_acyclic_orientations(g: &Graph) -> AcyclicOrientations {
    let host = Arc::new(g.clone());
    let n = g.vertex_count();
    let mut reach = vec![0u64; n];
    for (v, r) in reach.iter_mut().enumerate() {
        *r = 1 << v;
    }
    AcyclicOrientations {
        host,
        m: g.edge_count(),
        dirs: vec![false; g.edge_count()],
        reach,
        stack: Vec::new(),
        done: false,
    }
}

/// Iterator state for [`enumerate_acyclic_orientations`].
pub struct AcyclicOrientations {
    host: Arc<Graph>,
    m: usize,
    dirs: Vec<bool>,
    /// reach[v] = vertices reachable from v (v included) along assigned edges.
    reach: Vec<u64>,
    /// One frame per assigned edge, deepest last.
    stack: Vec<Frame>,
    done: bool,
}

struct Frame {
    reach_before: Vec<u64>,
    dir: bool,
}

impl AcyclicOrientations {
    /// Edge index assigned at depth `d`: highest index first, so emission
    /// order is ascending in the numeric bitmask (edge 0 = least significant
    /// bit varies fastest).
    fn edge_at(&self, depth: usize) -> usize {
        self.m - 1 - depth
    }

    /// Try to direct edge `idx` as `dir`; on success update reachability and
    /// return true. A failed attempt leaves the state untouched.
    fn try_assign(&mut self, idx: usize, dir: bool) -> bool {
        let (u, v) = self.host.edges()[idx];
        let (tail, head) = if dir { (v, u) } else { (u, v) };
        if self.reach[head] >> tail & 1 == 1 {
            return false; // head already reaches tail: directed cycle
        }
        let head_reach = self.reach[head];
        for r in self.reach.iter_mut() {
            if *r >> tail & 1 == 1 {
                *r |= head_reach;
            }
        }
        self.dirs[idx] = dir;
        true
    }

    fn descend(&mut self) {
        let idx = self.edge_at(self.stack.len());
        let snapshot = self.reach.clone();
        if self.try_assign(idx, false) {
            self.stack.push(Frame { reach_before: snapshot, dir: false });
        } else if self.try_assign(idx, true) {
            self.stack.push(Frame { reach_before: snapshot, dir: true });
        } else {
            self.backtrack();
        }
    }

    fn backtrack(&mut self) {
        while let Some(frame) = self.stack.pop() {
            self.reach = frame.reach_before;
            if !frame.dir {
                let idx = self.edge_at(self.stack.len());
                let snapshot = self.reach.clone();
                if self.try_assign(idx, true) {
                    self.stack.push(Frame { reach_before: snapshot, dir: true });
                    return;
                }
            }
        }
        self.done = true;
    }
}

impl Iterator for AcyclicOrientations {
    type Item = AcyclicOrientation;

    fn next(&mut self) -> Option<AcyclicOrientation> {
        loop {
            if self.done {
                return None;
            }
            if self.stack.len() == self.m {
                let result = AcyclicOrientation::from_dirs_unchecked(
                    Arc::clone(&self.host),
                    self.dirs.clone(),
                );
                self.backtrack();
                return Some(result);
            }
            self.descend();
        }
    }
}
