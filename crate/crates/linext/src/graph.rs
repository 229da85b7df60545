//! Simple undirected graphs on a small vertex set.
//!
//! Vertices are `0..n` and adjacency is kept as one `u64` bitset per vertex,
//! which caps the representation at [`MAX_VERTICES`]. Exhaustive algorithms
//! (chromatic number, independence number, stable-set enumeration, acyclic
//! orientation counting) additionally require `n <= EXACT_LIMIT` so their
//! `2^n`-flavored cost stays reasonable; callers working with larger graphs
//! get an explicit error instead of a silent hang.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::BigCount;

/// Hard representation limit: adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

/// Exhaustive (exponential-in-`n`) algorithms are guaranteed only up to here.
///
/// The limit is chosen so that every count that can arise fits comfortably in
/// a `u64` (any count of orientations or extensions is at most `16! < 2^63`)
/// and so that `2^n`-sized tables stay small.
pub const EXACT_LIMIT: usize = 16;

/// A set of vertices, stored as a bitmask over `0..MAX_VERTICES`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterate members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Errors from the plain-text edge-list parser.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header `n m`")]
    BadHeader { line: usize },
    #[error("line {line}: malformed edge line (expected `u v`)")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {v} out of range 0..{n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header announced {expected} edges but {found} edge lines follow")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("vertex count {n} exceeds representation limit {max}")]
    TooManyVertices { n: usize, max: usize },
}

/// Errors from graph operations (as opposed to parsing).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {n} vertices; this operation is supported up to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("vertex set must be nonempty")]
    EmptySubset,
    #[error("vertex set contains a vertex outside 0..{n}")]
    SubsetOutOfRange { n: usize },
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("weight vector contains a non-finite entry")]
    NonFiniteWeight,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted as `(u, v)` with `u < v`; the position of an edge in
/// this sorted list is its *canonical index*, which orientation bitmasks and
/// all serialized forms refer to.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Build a graph from an edge list. Edges may come in any order and
    /// either endpoint order; duplicates and self-loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, ParseError> {
        if n == 0 {
            return Err(ParseError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(ParseError::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut g = Graph { n, edges: Vec::with_capacity(edges.len()), adj: vec![0u64; n] };
        for &(a, b) in edges {
            if a >= n {
                return Err(ParseError::VertexOutOfRange { line: 0, v: a, n });
            }
            if b >= n {
                return Err(ParseError::VertexOutOfRange { line: 0, v: b, n });
            }
            if a == b {
                return Err(ParseError::SelfLoop { line: 0, v: a });
            }
            let (u, v) = (a.min(b), a.max(b));
            if g.adj[u] >> v & 1 == 1 {
                return Err(ParseError::DuplicateEdge { line: 0, u, v });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
            g.edges.push((u, v));
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Canonical index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    // ----- named constructors used throughout the test corpora -----

    /// Path 0 - 1 - ... - (n-1).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path is simple")
    }

    /// Cycle 0 - 1 - ... - (n-1) - 0. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("cycle is simple")
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is simple")
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, &[]).expect("edgeless graph is simple")
    }

    /// Complete multipartite graph with the given part sizes (all >= 1).
    /// Vertices are numbered part by part.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        assert!(parts.iter().all(|&s| s >= 1));
        let n: usize = parts.iter().sum();
        let mut part_of = vec![0usize; n];
        let mut next = 0;
        for (i, &size) in parts.iter().enumerate() {
            for _ in 0..size {
                part_of[next] = i;
                next += 1;
            }
        }
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("complete multipartite graph is simple")
    }

    // ----- structure queries -----

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for v in 0..self.n {
            for u in 0..v {
                if self.adj[u] >> v & 1 == 0 {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, &edges).expect("complement of a simple graph is simple")
    }

    /// Induced subgraph on `s`, relabeled to `0..s.len()` preserving the
    /// ascending order of the original vertex ids.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        if !s.is_subset_of(self.all_vertices()) {
            return Err(GraphError::SubsetOutOfRange { n: self.n });
        }
        let verts: Vec<usize> = s.iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if s.contains(u) && s.contains(v) {
                edges.push((new_id[u], new_id[v]));
            }
        }
        Ok(Graph::new(verts.len(), &edges).expect("induced subgraph is simple"))
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = VertexSet::singleton(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbors(v).difference(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Two-coloring of a connected graph: `Some((part0, part1))` where
    /// `part0` contains vertex 0, or `None` if an odd cycle obstructs.
    /// Disconnected input is an error rather than an arbitrary choice.
    pub fn bipartition(&self) -> Result<Option<(VertexSet, VertexSet)>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut color = vec![2u8; self.n]; // 2 = unassigned
        color[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v).iter() {
                if color[u] == 2 {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return Ok(None);
                }
            }
        }
        let part0: VertexSet = (0..self.n).filter(|&v| color[v] == 0).collect();
        let part1: VertexSet = (0..self.n).filter(|&v| color[v] == 1).collect();
        Ok(Some((part0, part1)))
    }

    /// Exact chromatic number by iterative deepening over `k`.
    pub fn chromatic_number(&self) -> Result<usize, GraphError> {
        Ok(self.optimal_coloring()?.len())
    }

    /// A proper coloring with the minimum number of classes, found by
    /// deterministic backtracking (vertices in ascending id order, colors in
    /// ascending order). Classes are returned in order of first use.
    pub fn optimal_coloring(&self) -> Result<Vec<VertexSet>, GraphError> {
        self.check_exact_limit()?;
        if self.edges.is_empty() {
            return Ok(vec![self.all_vertices()]);
        }
        for k in 2..=self.n {
            let mut color = vec![usize::MAX; self.n];
            if self.try_color(0, k, &mut color) {
                let mut classes = vec![VertexSet::EMPTY; k];
                for v in 0..self.n {
                    classes[color[v]].insert(v);
                }
                classes.retain(|c| !c.is_empty());
                return Ok(classes);
            }
        }
        unreachable!("n colors always suffice")
    }

    fn try_color(&self, v: usize, k: usize, color: &mut [usize]) -> bool {
        if v == self.n {
            return true;
        }
        // Capping the palette at (first uncolored position + 1) skips
        // colorings that differ only by a permutation of unused colors.
        let mut used_before = 0;
        for &c in &color[..v] {
            used_before = used_before.max(c + 1);
        }
        for c in 0..k.min(used_before + 1) {
            if self.neighbors(v).iter().all(|u| color[u] != c) {
                color[v] = c;
                if self.try_color(v + 1, k, color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }

    /// Size of a largest stable (independent) set, by branch and bound.
    pub fn independence_number(&self) -> Result<usize, GraphError> {
        self.check_exact_limit()?;
        Ok(self.max_stable_recurse(self.all_vertices(), 0, 0))
    }

    fn max_stable_recurse(&self, candidates: VertexSet, current: usize, best: usize) -> usize {
        let mut best = best.max(current);
        if current + candidates.len() <= best {
            return best;
        }
        if let Some(v) = candidates.min() {
            // Branch on the smallest remaining vertex: take it or leave it.
            let take = self.max_stable_recurse(
                candidates.without(v).difference(self.neighbors(v)),
                current + 1,
                best,
            );
            best = best.max(take);
            let leave = self.max_stable_recurse(candidates.without(v), current, best);
            best = best.max(leave);
        }
        best
    }

    /// All stable sets (the empty set included), in ascending bitmask order.
    pub fn enumerate_stable_sets(
        &self,
    ) -> Result<impl Iterator<Item = VertexSet> + '_, GraphError> {
        self.check_exact_limit()?;
        let n = self.n;
        Ok((0u64..1u64 << n)
            .filter(move |&mask| self.is_stable_mask(mask))
            .map(VertexSet::from_bits))
    }

    fn is_stable_mask(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & mask != 0 {
                return false;
            }
        }
        true
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.is_subset_of(self.all_vertices()) && self.is_stable_mask(s.bits())
    }

    /// Maximum-weight stable set for finite weights. Ties are broken toward
    /// the numerically smallest bitmask so the result is deterministic.
    ///
    /// Branch and bound; exact for every representable graph, though cost can
    /// grow with `n`. This is the oracle the entropy solver calls in a loop,
    /// so it deliberately avoids the `2^n` enumeration path.
    pub fn max_weight_stable_set(&self, w: &[f64]) -> Result<VertexSet, GraphError> {
        if w.len() != self.n {
            return Err(GraphError::WeightLength { got: w.len(), expected: self.n });
        }
        if !w.iter().all(|x| x.is_finite()) {
            return Err(GraphError::NonFiniteWeight);
        }
        let mut best = (f64::NEG_INFINITY, VertexSet::EMPTY);
        self.mwis_recurse(self.all_vertices(), VertexSet::EMPTY, 0.0, w, &mut best);
        Ok(best.1)
    }

    fn mwis_recurse(
        &self,
        candidates: VertexSet,
        chosen: VertexSet,
        weight: f64,
        w: &[f64],
        best: &mut (f64, VertexSet),
    ) {
        if weight > best.0 || (weight == best.0 && chosen < best.1) {
            *best = (weight, chosen);
        }
        let Some(v) = candidates.min() else { return };
        // Adding every remaining positive weight bounds what this subtree can
        // still achieve; prune when even that cannot beat the incumbent.
        let optimistic: f64 = candidates.iter().map(|u| w[u].max(0.0)).sum();
        if weight + optimistic < best.0 {
            return;
        }
        self.mwis_recurse(
            candidates.without(v).difference(self.neighbors(v)),
            chosen.with(v),
            weight + w[v],
            w,
            best,
        );
        self.mwis_recurse(candidates.without(v), chosen, weight, w, best);
    }

    /// Number of acyclic orientations, counted by inclusion-exclusion over
    /// the possible source sets: `a(S) = sum over nonempty stable T of S of
    /// (-1)^(|T|+1) a(S minus T)`. Runs per connected component.
    pub fn count_acyclic_orientations(&self) -> Result<BigCount, GraphError> {
        self.check_exact_limit()?;
        let mut total = BigUint::from(1u32);
        for comp in self.components() {
            total *= BigUint::from(self.count_acyclic_on(comp));
        }
        Ok(total)
    }

    fn count_acyclic_on(&self, comp: VertexSet) -> u64 {
        let verts: Vec<usize> = comp.iter().collect();
        let k = verts.len();
        let local_adj: Vec<u64> = verts
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                for (j, &u) in verts.iter().enumerate() {
                    if self.adj[v] >> u & 1 == 1 {
                        row |= 1 << j;
                    }
                }
                row
            })
            .collect();
        let is_stable = |mask: u64| -> bool {
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if local_adj[v] & mask != 0 {
                    return false;
                }
            }
            true
        };
        let mut a = vec![0i64; 1usize << k];
        a[0] = 1;
        for s in 1u64..1u64 << k {
            let mut acc = 0i64;
            // Iterate nonempty subsets t of s.
            let mut t = s;
            loop {
                if is_stable(t) {
                    let term = a[(s & !t) as usize];
                    if t.count_ones() % 2 == 1 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                if t == (t.wrapping_sub(1)) & s {
                    break;
                }
                t = t.wrapping_sub(1) & s;
                if t == 0 {
                    break;
                }
            }
            a[s as usize] = acc;
        }
        let result = a[(1usize << k) - 1];
        debug_assert!(result >= 0);
        result as u64
    }

    /// True when the complement is a disjoint union of cliques, i.e. the
    /// vertex set splits into parts with every cross-part pair adjacent and
    /// no within-part edges.
    pub fn is_complete_multipartite(&self) -> bool {
        let co = self.complement();
        co.components().into_iter().all(|comp| {
            let k = comp.len();
            comp.iter().all(|v| co.neighbors(v).intersection(comp).len() == k - 1)
        })
    }

    // ----- heuristics for graphs past the exact limit -----

    /// Greedy proper coloring, vertices in descending degree order. Used when
    /// `n > EXACT_LIMIT` makes the exact search unavailable.
    pub fn greedy_coloring(&self) -> Vec<VertexSet> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut classes: Vec<VertexSet> = Vec::new();
        for v in order {
            match classes.iter_mut().find(|c| c.intersection(self.neighbors(v)).is_empty()) {
                Some(c) => c.insert(v),
                None => classes.push(VertexSet::singleton(v)),
            }
        }
        classes
    }

    /// Greedy maximal stable set, repeatedly taking a minimum-degree vertex
    /// of what remains. A lower bound on the independence number.
    pub fn greedy_stable_set(&self) -> VertexSet {
        let mut remaining = self.all_vertices();
        let mut chosen = VertexSet::EMPTY;
        while let Some(first) = remaining.min() {
            let mut pick = first;
            let mut pick_deg = self.neighbors(first).intersection(remaining).len();
            for v in remaining.iter() {
                let d = self.neighbors(v).intersection(remaining).len();
                if d < pick_deg {
                    pick = v;
                    pick_deg = d;
                }
            }
            chosen.insert(pick);
            remaining = remaining.without(pick).difference(self.neighbors(pick));
        }
        chosen
    }

    fn check_exact_limit(&self) -> Result<(), GraphError> {
        if self.n > EXACT_LIMIT {
            Err(GraphError::TooLarge { n: self.n, limit: EXACT_LIMIT })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Parse the plain-text edge-list format: a header line `n m`, then `m`
/// lines `u v`. Trailing blank lines are tolerated; anything else is not.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate();
    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or(ParseError::BadHeader { line: 1 })?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::BadHeader { line: header_line + 1 })?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::BadHeader { line: header_line + 1 })?;
    if it.next().is_some() {
        return Err(ParseError::BadHeader { line: header_line + 1 });
    }
    if n == 0 {
        return Err(ParseError::NoVertices);
    }
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { n, max: MAX_VERTICES });
    }

    let mut g = Graph { n, edges: Vec::with_capacity(m), adj: vec![0u64; n] };
    let mut found = 0usize;
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if found == m {
            return Err(ParseError::EdgeCountMismatch { expected: m, found: found + 1 });
        }
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(ParseError::MalformedEdge { line: line_no });
        };
        let a: usize = a.parse().map_err(|_| ParseError::MalformedEdge { line: line_no })?;
        let b: usize = b.parse().map_err(|_| ParseError::MalformedEdge { line: line_no })?;
        if a >= n {
            return Err(ParseError::VertexOutOfRange { line: line_no, v: a, n });
        }
        if b >= n {
            return Err(ParseError::VertexOutOfRange { line: line_no, v: b, n });
        }
        if a == b {
            return Err(ParseError::SelfLoop { line: line_no, v: a });
        }
        let (u, v) = (a.min(b), a.max(b));
        if g.adj[u] >> v & 1 == 1 {
            return Err(ParseError::DuplicateEdge { line: line_no, u, v });
        }
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g.edges.push((u, v));
        found += 1;
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found });
    }
    g.edges.sort_unstable();
    Ok(g)
}

/// Render a graph in the same edge-list format `parse_graph` accepts.
pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}
