//! Finite posets, their linear extensions, and extension-counting flows.
//!
//! Ground sets are `0..n` and the strict order is kept closed under
//! transitivity as row bitsets (`lt[i]` = everything above `i`). Counting
//! walks the lattice of downsets, so it is exact and fast for `n` up to
//! [`crate::graph::EXACT_LIMIT`]; the count of a 16-element poset is at most
//! `16!`, which is why a `u64` accumulator suffices internally even though
//! the public type is arbitrary-precision.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{Graph, VertexSet, EXACT_LIMIT, MAX_VERTICES};
use crate::orient::AcyclicOrientation;
use crate::BigCount;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relations close into a cycle, so antisymmetry fails")]
    CycleInRelations,
    #[error("relation references element {v} outside 0..{n}")]
    OutOfRange { v: usize, n: usize },
    #[error("poset needs at least one element")]
    Empty,
    #[error("poset has {n} elements; representation supports up to {max}")]
    TooManyElements { n: usize, max: usize },
    #[error("poset has {n} elements; this operation is supported up to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("labels must be a bijection onto 1..=n")]
    NotABijection,
    #[error("labeling is not a linear extension of the poset")]
    NotAnExtension,
    #[error("no element {v} in a poset on 0..{n}")]
    NoSuchElement { v: usize, n: usize },
}

/// A bijection from the ground set onto `1..=n`, stored as the label of each
/// element. Ordering and equality are label-vector lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    labels: Vec<usize>,
}

impl LinearExtension {
    pub fn new(labels: Vec<usize>) -> Result<Self, PosetError> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l > n || seen[l] {
                return Err(PosetError::NotABijection);
            }
            seen[l] = true;
        }
        Ok(LinearExtension { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label_of(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Elements listed by ascending label: `sequence()[r]` has label `r+1`.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0usize; self.labels.len()];
        for (v, &l) in self.labels.iter().enumerate() {
            seq[l - 1] = v;
        }
        seq
    }

    pub fn extends_poset(&self, p: &Poset) -> bool {
        self.labels.len() == p.len()
            && (0..p.len()).all(|i| p.above(i).iter().all(|j| self.labels[i] < self.labels[j]))
    }
}

impl std::fmt::Debug for LinearExtension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ext{:?}", self.labels)
    }
}

/// A finite poset on `0..n`, transitively closed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    lt: Vec<u64>,    // lt[i] = { j : i < j }
    preds: Vec<u64>, // preds[j] = { i : i < j }
}

impl Poset {
    /// Build from arbitrary strict relations `i < j`; the transitive closure
    /// is taken and antisymmetry verified.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Poset, PosetError> {
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(PosetError::TooManyElements { n, max: MAX_VERTICES });
        }
        let mut lt = vec![0u64; n];
        for &(i, j) in relations {
            if i >= n {
                return Err(PosetError::OutOfRange { v: i, n });
            }
            if j >= n {
                return Err(PosetError::OutOfRange { v: j, n });
            }
            lt[i] |= 1 << j;
        }
        // Bitset Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if lt[i] >> k & 1 == 1 {
                    lt[i] |= lt[k];
                }
            }
        }
        for (i, &row) in lt.iter().enumerate() {
            if row >> i & 1 == 1 {
                return Err(PosetError::CycleInRelations);
            }
        }
        Ok(Self::from_closed(n, lt))
    }

    fn from_closed(n: usize, lt: Vec<u64>) -> Poset {
        let mut preds = vec![0u64; n];
        for (i, &bits) in lt.iter().enumerate() {
            let mut row = bits;
            while row != 0 {
                let j = row.trailing_zeros() as usize;
                row &= row - 1;
                preds[j] |= 1 << i;
            }
        }
        Poset { n, lt, preds }
    }

    /// The poset induced by an acyclic orientation: `u < v` when a directed
    /// path runs from `u` to `v`.
    pub fn from_orientation(o: &AcyclicOrientation) -> Poset {
        let n = o.host().vertex_count();
        let mut lt: Vec<u64> = (0..n).map(|v| o.out_neighbors(v).bits()).collect();
        for k in 0..n {
            for i in 0..n {
                if lt[i] >> k & 1 == 1 {
                    lt[i] |= lt[k];
                }
            }
        }
        debug_assert!((0..n).all(|i| lt[i] >> i & 1 == 0));
        Self::from_closed(n, lt)
    }

    /// Antichain on `n` elements (no relations).
    pub fn antichain(n: usize) -> Poset {
        Poset::from_relations(n, &[]).expect("antichain is valid")
    }

    /// Chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        let rels: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_relations(n, &rels).expect("chain is valid")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // a poset always has at least one element
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i] >> j & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) || self.lt(j, i)
    }

    /// Everything strictly above `i`.
    pub fn above(&self, i: usize) -> VertexSet {
        VertexSet::from_bits(self.lt[i])
    }

    /// Everything strictly below `j`.
    pub fn below(&self, j: usize) -> VertexSet {
        VertexSet::from_bits(self.preds[j])
    }

    pub fn minimal_elements(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.preds[v] == 0).collect()
    }

    pub fn maximal_elements(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.lt[v] == 0).collect()
    }

    /// Cover pairs `(i, j)`: `i < j` with nothing strictly between. These are
    /// the edges of the Hasse diagram and the canonical serialization.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for i in 0..self.n {
            let mut row = self.lt[i];
            while row != 0 {
                let j = row.trailing_zeros() as usize;
                row &= row - 1;
                if self.lt[i] & self.preds[j] == 0 {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        covers
    }

    /// Upward covers of `v` as a bitset.
    fn covers_up(&self, v: usize) -> u64 {
        let mut out = 0u64;
        let mut row = self.lt[v];
        while row != 0 {
            let j = row.trailing_zeros() as usize;
            row &= row - 1;
            if self.lt[v] & self.preds[j] == 0 {
                out |= 1 << j;
            }
        }
        out
    }

    /// The comparability graph: `{i, j}` adjacent when comparable.
    pub fn comparability_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for j in 0..self.n {
            for i in 0..j {
                if self.comparable(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.n, &edges).expect("comparability graph is simple")
    }

    /// Remove one element, relabeling the rest in ascending order.
    pub fn delete(&self, v: usize) -> Result<Poset, PosetError> {
        if v >= self.n {
            return Err(PosetError::NoSuchElement { v, n: self.n });
        }
        if self.n == 1 {
            return Err(PosetError::Empty);
        }
        let old_ids: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        let mut rels = Vec::new();
        for (new_i, &old_i) in old_ids.iter().enumerate() {
            for (new_j, &old_j) in old_ids.iter().enumerate() {
                if self.lt(old_i, old_j) {
                    rels.push((new_i, new_j));
                }
            }
        }
        Poset::from_relations(self.n - 1, &rels)
    }

    fn check_limit(&self) -> Result<(), PosetError> {
        if self.n > EXACT_LIMIT {
            Err(PosetError::TooLarge { n: self.n, limit: EXACT_LIMIT })
        } else {
            Ok(())
        }
    }

    /// Exact number of linear extensions, by dynamic programming over
    /// downsets (reachable masks only).
    pub fn count_linear_extensions(&self) -> Result<BigCount, PosetError> {
        self.check_limit()?;
        Ok(BigUint::from(self.count_le_u64()))
    }

    pub(crate) fn count_le_u64(&self) -> u64 {
        let n = self.n;
        let full = (1u64 << n) - 1;
        let mut f = vec![0u64; 1 << n];
        f[0] = 1;
        for mask in 0..1u64 << n {
            let ways = f[mask as usize];
            if ways == 0 {
                continue;
            }
            let mut candidates = !mask & full;
            while candidates != 0 {
                let v = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                if self.preds[v] & !mask == 0 {
                    f[(mask | 1 << v) as usize] += ways;
                }
            }
        }
        f[full as usize]
    }

    /// All linear extensions, each exactly once, in lexicographic order of
    /// their label vectors.
    pub fn enumerate_linear_extensions(
        &self,
    ) -> Result<impl Iterator<Item = LinearExtension>, PosetError> {
        self.check_limit()?;
        let mut out = Vec::new();
        let mut labels = vec![0usize; self.n];
        self.enumerate_rec(0, 1, &mut labels, &mut out);
        out.sort_unstable();
        Ok(out.into_iter())
    }

    fn enumerate_rec(
        &self,
        placed: u64,
        rank: usize,
        labels: &mut Vec<usize>,
        out: &mut Vec<LinearExtension>,
    ) {
        if rank > self.n {
            out.push(LinearExtension { labels: labels.clone() });
            return;
        }
        let full = (1u64 << self.n) - 1;
        let mut candidates = !placed & full;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if self.preds[v] & !placed == 0 {
                labels[v] = rank;
                self.enumerate_rec(placed | 1 << v, rank + 1, labels, out);
                labels[v] = 0;
            }
        }
    }

    pub fn is_antichain(&self, s: VertexSet) -> bool {
        let members: Vec<usize> = s.iter().collect();
        members
            .iter()
            .enumerate()
            .all(|(idx, &i)| members[idx + 1..].iter().all(|&j| !self.comparable(i, j)))
    }

    /// All antichains (the empty set included), ascending bitmask order.
    pub fn antichains(&self) -> Result<impl Iterator<Item = VertexSet> + '_, PosetError> {
        self.check_limit()?;
        Ok((0u64..1u64 << self.n).map(VertexSet::from_bits).filter(move |&s| self.is_antichain(s)))
    }

    /// Maximal chains, each as the list of its elements from bottom to top.
    /// A maximal chain is a cover path from a minimal to a maximal element.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut chains = Vec::new();
        let mut path = Vec::new();
        for start in self.minimal_elements().iter() {
            self.chains_rec(start, &mut path, &mut chains);
        }
        chains
    }

    fn chains_rec(&self, v: usize, path: &mut Vec<usize>, chains: &mut Vec<Vec<usize>>) {
        path.push(v);
        let ups = self.covers_up(v);
        if ups == 0 {
            chains.push(path.clone());
        } else {
            let mut rest = ups;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                self.chains_rec(w, path, chains);
            }
        }
        path.pop();
    }

    /// Does `s` meet every maximal chain?
    pub fn is_cutset(&self, s: VertexSet) -> bool {
        // Search for a maximal chain avoiding s: a cover path from a minimal
        // to a maximal element that never touches s.
        let mut memo = vec![None::<bool>; self.n];
        let result = self
            .minimal_elements()
            .iter()
            .filter(|&v| !s.contains(v))
            .any(|v| self.escapes(v, s, &mut memo));
        !result
    }

    /// Can a cover path from `v` (already outside `s`) reach a maximal
    /// element while avoiding `s`?
    fn escapes(&self, v: usize, s: VertexSet, memo: &mut Vec<Option<bool>>) -> bool {
        if let Some(r) = memo[v] {
            return r;
        }
        let ups = self.covers_up(v);
        let result = if ups == 0 {
            true // v is maximal; the path ends here, untouched by s
        } else {
            VertexSet::from_bits(ups).difference(s).iter().any(|w| self.escapes(w, s, memo))
        };
        memo[v] = Some(result);
        result
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.cover_pairs())
    }
}

/// Both sides of the deletion recurrence for a vertex set `s`, together with
/// the structural facts that decide the inequality's direction: antichains
/// give `lhs >= rhs`, cutsets `lhs <= rhs`, both at once equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSides {
    pub lhs: BigCount,
    pub rhs: BigCount,
    pub is_antichain: bool,
    pub is_cutset: bool,
}

/// Evaluate `e(P)` against the sum of `e(P - v)` over `v` in `s`.
pub fn recurrence_sides(p: &Poset, s: VertexSet) -> Result<RecurrenceSides, PosetError> {
    if !s.is_subset_of(VertexSet::full(p.len())) {
        return Err(PosetError::NoSuchElement { v: s.iter().last().unwrap_or(0), n: p.len() });
    }
    let lhs = p.count_linear_extensions()?;
    let mut rhs = BigUint::from(0u32);
    for v in s.iter() {
        rhs += if p.len() == 1 {
            // Deleting the only element leaves the empty poset: one (empty)
            // extension.
            BigUint::from(1u32)
        } else {
            p.delete(v)?.count_linear_extensions()?
        };
    }
    Ok(RecurrenceSides { lhs, rhs, is_antichain: p.is_antichain(s), is_cutset: p.is_cutset(s) })
}

/// Insert `v` back into an extension of `P - v`: the new label of `v` is one
/// past the largest label among its strict predecessors (zero if minimal),
/// and everything at or above that slot shifts up by one. Always yields a
/// linear extension of `P`, injectively in `sigma`.
pub fn trans_map(
    p: &Poset,
    v: usize,
    sigma: &LinearExtension,
) -> Result<LinearExtension, PosetError> {
    let n = p.len();
    if v >= n {
        return Err(PosetError::NoSuchElement { v, n });
    }
    if sigma.len() != n - 1 {
        return Err(PosetError::NotABijection);
    }
    let reduced = p.delete(v)?;
    if !sigma.extends_poset(&reduced) {
        return Err(PosetError::NotAnExtension);
    }
    // Element x of P (x != v) appears in P - v as x minus (x > v).
    let reduced_id = |x: usize| if x > v { x - 1 } else { x };
    let kappa = p.below(v).iter().map(|y| sigma.label_of(reduced_id(y))).max().unwrap_or(0);
    let mut labels = vec![0usize; n];
    for (x, slot) in labels.iter_mut().enumerate() {
        if x == v {
            *slot = kappa + 1;
        } else {
            let l = sigma.label_of(reduced_id(x));
            *slot = if l > kappa { l + 1 } else { l };
        }
    }
    let ext = LinearExtension::new(labels).expect("insertion preserves bijectivity");
    debug_assert!(ext.extends_poset(p));
    Ok(ext)
}

/// The extension-counting flow of an acyclic orientation, on the digraph
/// augmented with a bottom feeding every source and a top draining every
/// sink. Edge values count extensions in which the edge's endpoints hold
/// consecutive labels; the arc into `v` from the bottom counts extensions
/// starting at `v`, the arc from `v` to the top those ending at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalFlow {
    /// Flow per canonical edge of the host graph.
    pub edge_flow: Vec<u64>,
    /// Flow on the bottom arc into each vertex (nonzero only for sources).
    pub source_flow: Vec<u64>,
    /// Flow on the arc from each vertex to the top (nonzero only for sinks).
    pub sink_flow: Vec<u64>,
}

impl NaturalFlow {
    /// Total outflow of the bottom vertex — provably the extension count.
    pub fn net_flow(&self) -> BigCount {
        BigUint::from(self.source_flow.iter().sum::<u64>())
    }

    /// Inflow equals outflow at every graph vertex (sources receive from the
    /// bottom, sinks drain to the top).
    pub fn conservation_holds(&self, o: &AcyclicOrientation) -> bool {
        let g = o.host();
        let n = g.vertex_count();
        let mut inflow = vec![0u64; n];
        let mut outflow = vec![0u64; n];
        for (idx, (tail, head)) in o.directed_edges().enumerate() {
            outflow[tail] += self.edge_flow[idx];
            inflow[head] += self.edge_flow[idx];
        }
        (0..n).all(|v| inflow[v] + self.source_flow[v] == outflow[v] + self.sink_flow[v])
    }
}

/// Tally the natural flow of `o` by walking every linear extension of its
/// induced poset.
pub fn natural_flow(o: &AcyclicOrientation) -> Result<NaturalFlow, PosetError> {
    let g = o.host();
    let n = g.vertex_count();
    let p = Poset::from_orientation(o);
    let mut edge_flow = vec![0u64; g.edge_count()];
    let mut source_flow = vec![0u64; n];
    let mut sink_flow = vec![0u64; n];
    // Map (tail, head) to the canonical edge index once.
    for ext in p.enumerate_linear_extensions()? {
        let seq = ext.sequence();
        source_flow[seq[0]] += 1;
        sink_flow[seq[n - 1]] += 1;
        for w in seq.windows(2) {
            let (a, b) = (w[0], w[1]);
            // Count only consecutive pairs joined by an edge directed a -> b.
            if o.out_neighbors(a).contains(b) {
                edge_flow[g.edge_index(a, b).expect("edge exists")] += 1;
            }
        }
    }
    Ok(NaturalFlow { edge_flow, source_flow, sink_flow })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orient::enumerate_acyclic_orientations;

    /// Oracle: count extensions by testing all n! label assignments.
    fn count_le_brute(p: &Poset) -> u64 {
        let n = p.len();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut count = 0;
        loop {
            let ext = LinearExtension::new(perm.clone()).unwrap();
            if ext.extends_poset(p) {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        count
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn relations_close_transitively_and_reject_cycles() {
        let p = Poset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2), "closure must add 0 < 2");
        assert!(!p.lt(2, 0));
        assert!(matches!(
            Poset::from_relations(2, &[(0, 1), (1, 0)]),
            Err(PosetError::CycleInRelations)
        ));
        assert!(matches!(Poset::from_relations(2, &[(0, 0)]), Err(PosetError::CycleInRelations)));
        assert!(matches!(
            Poset::from_relations(2, &[(0, 5)]),
            Err(PosetError::OutOfRange { v: 5, n: 2 })
        ));
        assert!(matches!(Poset::from_relations(0, &[]), Err(PosetError::Empty)));
    }

    #[test]
    fn covers_drop_implied_relations() {
        let chain = Poset::chain(3);
        assert_eq!(chain.cover_pairs(), vec![(0, 1), (1, 2)]);
        let p = Poset::from_relations(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]).unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn orientation_induces_reachability_order() {
        let p4 = Graph::path(4);
        let chain = AcyclicOrientation::from_bijection(&p4, &[1, 2, 3, 4]).unwrap();
        let p = Poset::from_orientation(&chain);
        assert!(p.lt(0, 3));
        assert_eq!(p, Poset::chain(4));
        // The zigzag orientation of P4: 0->1, 2->1, 2->3.
        let zig = AcyclicOrientation::from_bijection(&p4, &[1, 3, 2, 4]).unwrap();
        let p = Poset::from_orientation(&zig);
        assert!(p.lt(0, 1) && p.lt(2, 1) && p.lt(2, 3));
        assert!(!p.comparable(0, 2) && !p.comparable(0, 3) && !p.comparable(1, 3));
    }

    #[test]
    fn counting_matches_brute_force() {
        let cases: Vec<Poset> = vec![
            Poset::chain(5),
            Poset::antichain(5),
            Poset::from_relations(4, &[(0, 1), (2, 1), (2, 3)]).unwrap(), // zigzag
            Poset::from_relations(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap(), // X
            Poset::from_relations(6, &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5)]).unwrap(),
            Poset::from_relations(1, &[]).unwrap(),
        ];
        for p in cases {
            assert_eq!(
                p.count_linear_extensions().unwrap(),
                BigUint::from(count_le_brute(&p)),
                "{:?}",
                p
            );
        }
    }

    #[test]
    fn counting_known_values() {
        assert_eq!(Poset::chain(7).count_linear_extensions().unwrap(), BigUint::from(1u32));
        assert_eq!(Poset::antichain(4).count_linear_extensions().unwrap(), BigUint::from(24u32));
        // Zigzag on 4 elements: the 5 alternating arrangements.
        let zig = Poset::from_relations(4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        assert_eq!(zig.count_linear_extensions().unwrap(), BigUint::from(5u32));
        // Two disjoint chains of lengths 2 and 3: binomial(5, 2) = 10.
        let two_chains = Poset::from_relations(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(two_chains.count_linear_extensions().unwrap(), BigUint::from(10u32));
    }

    #[test]
    fn enumeration_is_exact_sorted_and_complete() {
        let p = Poset::from_relations(4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        let exts: Vec<LinearExtension> = p.enumerate_linear_extensions().unwrap().collect();
        assert_eq!(exts.len(), 5);
        assert!(exts.windows(2).all(|w| w[0] < w[1]), "sorted, no duplicates");
        assert!(exts.iter().all(|e| e.extends_poset(&p)));
        // Against the brute-force count on the antichain: all 3! orders.
        let all: Vec<LinearExtension> =
            Poset::antichain(3).enumerate_linear_extensions().unwrap().collect();
        let expect: Vec<Vec<usize>> = vec![
            vec![1, 2, 3],
            vec![1, 3, 2],
            vec![2, 1, 3],
            vec![2, 3, 1],
            vec![3, 1, 2],
            vec![3, 2, 1],
        ];
        assert_eq!(all.iter().map(|e| e.labels().to_vec()).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn extension_validation() {
        assert!(matches!(LinearExtension::new(vec![1, 1, 2]), Err(PosetError::NotABijection)));
        assert!(matches!(LinearExtension::new(vec![0, 1, 2]), Err(PosetError::NotABijection)));
        let chain = Poset::chain(3);
        assert!(LinearExtension::new(vec![1, 2, 3]).unwrap().extends_poset(&chain));
        assert!(!LinearExtension::new(vec![2, 1, 3]).unwrap().extends_poset(&chain));
    }

    #[test]
    fn sequence_inverts_labels() {
        let ext = LinearExtension::new(vec![2, 3, 1]).unwrap();
        assert_eq!(ext.sequence(), vec![2, 0, 1]);
    }

    #[test]
    fn minimal_maximal_and_comparability() {
        let p = Poset::from_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        assert_eq!(p.minimal_elements(), [0usize, 1].into_iter().collect());
        assert_eq!(p.maximal_elements(), [2usize, 3].into_iter().collect());
        let g = p.comparability_graph();
        assert_eq!(g.edges(), &[(0, 2), (1, 2), (1, 3)]);
        // Chains become complete graphs.
        assert_eq!(Poset::chain(4).comparability_graph(), Graph::complete(4));
    }

    #[test]
    fn antichain_and_cutset_classification() {
        // Chain: every singleton is both an antichain and a cutset.
        let chain = Poset::chain(3);
        for v in 0..3 {
            let s = VertexSet::singleton(v);
            assert!(chain.is_antichain(s));
            assert!(chain.is_cutset(s));
        }
        assert!(!chain.is_antichain([0usize, 1].into_iter().collect()));

        // N poset 0 < 2, 1 < 2, 1 < 3: {0, 3} is a maximal antichain but
        // misses the chain {1, 2}.
        let n_poset = Poset::from_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let s: VertexSet = [0usize, 3].into_iter().collect();
        assert!(n_poset.is_antichain(s));
        assert!(!n_poset.is_cutset(s));
        let t: VertexSet = [0usize, 1].into_iter().collect();
        assert!(n_poset.is_antichain(t));
        assert!(n_poset.is_cutset(t), "all minimal elements always cut");

        // Empty set: antichain, but a cutset only if there are no chains at
        // all — impossible with a nonempty ground set.
        assert!(chain.is_antichain(VertexSet::EMPTY));
        assert!(!chain.is_cutset(VertexSet::EMPTY));
    }

    #[test]
    fn maximal_chains_of_small_posets() {
        let chain = Poset::chain(3);
        assert_eq!(chain.maximal_chains(), vec![vec![0, 1, 2]]);
        let v_poset = Poset::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
        let mut chains = v_poset.maximal_chains();
        chains.sort();
        assert_eq!(chains, vec![vec![0, 2], vec![1, 2]]);
        let anti = Poset::antichain(3);
        assert_eq!(anti.maximal_chains().len(), 3);
    }

    #[test]
    fn recurrence_on_both_kinds_of_sets() {
        // Full antichain of the antichain poset: equality n! = n * (n-1)!.
        let anti = Poset::antichain(4);
        let sides = recurrence_sides(&anti, VertexSet::full(4)).unwrap();
        assert_eq!(sides.lhs, sides.rhs);
        assert!(sides.is_antichain && sides.is_cutset);

        // Middle of a chain: equality 1 = 1.
        let chain = Poset::chain(3);
        let sides = recurrence_sides(&chain, VertexSet::singleton(1)).unwrap();
        assert_eq!(sides.lhs, sides.rhs);

        // The N poset's antichain {0, 3} is not a cutset: strict >.
        let n_poset = Poset::from_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let sides = recurrence_sides(&n_poset, [0usize, 3].into_iter().collect()).unwrap();
        assert!(sides.is_antichain && !sides.is_cutset);
        assert!(sides.lhs > sides.rhs);

        // A cutset that is not an antichain: strict <. Take {0, 1} in the
        // chain 0 < 1 < 2: every maximal chain passes through both.
        let sides = recurrence_sides(&chain, [0usize, 1].into_iter().collect()).unwrap();
        assert!(!sides.is_antichain && sides.is_cutset);
        assert!(sides.lhs < sides.rhs);
    }

    #[test]
    fn single_element_recurrence_uses_the_empty_poset() {
        let p = Poset::from_relations(1, &[]).unwrap();
        let sides = recurrence_sides(&p, VertexSet::singleton(0)).unwrap();
        assert_eq!(sides.lhs, BigUint::from(1u32));
        assert_eq!(sides.rhs, BigUint::from(1u32));
        assert!(sides.is_antichain && sides.is_cutset);
    }

    #[test]
    fn trans_map_inserts_at_the_forced_slot() {
        // Two incomparable elements, insert 1 into the extension (0 -> 1).
        let anti = Poset::antichain(2);
        let sigma = LinearExtension::new(vec![1]).unwrap();
        let ext = trans_map(&anti, 1, &sigma).unwrap();
        assert_eq!(ext.labels(), &[2, 1], "minimal v lands at the bottom");

        // Chain 0 < 1 < 2, delete the top, reinsert.
        let chain = Poset::chain(3);
        let sigma = LinearExtension::new(vec![1, 2]).unwrap();
        let ext = trans_map(&chain, 2, &sigma).unwrap();
        assert_eq!(ext.labels(), &[1, 2, 3]);

        // Rejects a sigma that does not extend P - v.
        let bad = LinearExtension::new(vec![2, 1]).unwrap();
        assert!(matches!(trans_map(&chain, 2, &bad), Err(PosetError::NotAnExtension)));
    }

    #[test]
    fn trans_map_is_injective_with_cover_flow_image_size() {
        // For every poset in a small pool and every v: distinct sigmas map to
        // distinct extensions, every image extends P, and the image size
        // equals the inflow of v in the natural flow on the Hasse diagram.
        let pool = vec![
            Poset::chain(4),
            Poset::antichain(4),
            Poset::from_relations(4, &[(0, 1), (2, 1), (2, 3)]).unwrap(),
            Poset::from_relations(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap(),
            Poset::from_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap(),
        ];
        for p in pool {
            let n = p.len();
            // Natural flow on the Hasse diagram orientation of P.
            let covers = p.cover_pairs();
            let hasse = Graph::new(n, &covers).unwrap();
            let pairs: Vec<[usize; 2]> = covers.iter().map(|&(lo, hi)| [lo, hi]).collect();
            let o = AcyclicOrientation::from_directed_pairs(&hasse, &pairs).unwrap();
            let flow = natural_flow(&o).unwrap();
            for v in 0..n {
                let mut images = std::collections::HashSet::new();
                for sigma in p.delete(v).unwrap().enumerate_linear_extensions().unwrap() {
                    let ext = trans_map(&p, v, &sigma).unwrap();
                    assert!(ext.extends_poset(&p));
                    assert!(images.insert(ext), "trans_map must be injective");
                }
                let inflow: u64 = o
                    .in_neighbors(v)
                    .iter()
                    .map(|u| flow.edge_flow[hasse.edge_index(u, v).unwrap()])
                    .sum::<u64>()
                    + flow.source_flow[v];
                assert_eq!(images.len() as u64, inflow, "poset {:?}, v={}", p, v);
            }
        }
    }

    #[test]
    fn natural_flow_matches_hand_computed_cases() {
        // V orientation: 0 -> 2 <- 1 on the path host 0-2, 1-2.
        let host = Graph::new(3, &[(0, 2), (1, 2)]).unwrap();
        let o = AcyclicOrientation::from_directed_pairs(&host, &[[0, 2], [1, 2]]).unwrap();
        let flow = natural_flow(&o).unwrap();
        assert_eq!(flow.source_flow, vec![1, 1, 0]);
        assert_eq!(flow.sink_flow, vec![0, 0, 2]);
        assert_eq!(flow.edge_flow, vec![1, 1]);
        assert!(flow.conservation_holds(&o));
        assert_eq!(flow.net_flow(), BigUint::from(2u32));

        // Edgeless graph on 2 vertices.
        let g2 = Graph::edgeless(2);
        let o = AcyclicOrientation::from_dirs(&g2, vec![]).unwrap();
        let flow = natural_flow(&o).unwrap();
        assert_eq!(flow.source_flow, vec![1, 1]);
        assert_eq!(flow.sink_flow, vec![1, 1]);
        assert_eq!(flow.net_flow(), BigUint::from(2u32));
        assert!(flow.conservation_holds(&o));

        // Single vertex: the bottom arc and top arc both carry 1.
        let g1 = Graph::edgeless(1);
        let o = AcyclicOrientation::from_dirs(&g1, vec![]).unwrap();
        let flow = natural_flow(&o).unwrap();
        assert_eq!(flow.source_flow, vec![1]);
        assert_eq!(flow.sink_flow, vec![1]);
        assert!(flow.conservation_holds(&o));
    }

    #[test]
    fn natural_flow_conserves_and_nets_the_count_generally() {
        for g in [Graph::path(4), Graph::cycle(4), Graph::cycle(5), Graph::complete(4)] {
            for o in enumerate_acyclic_orientations(&g) {
                let flow = natural_flow(&o).unwrap();
                assert!(flow.conservation_holds(&o), "{:?}", o);
                let e = Poset::from_orientation(&o).count_linear_extensions().unwrap();
                assert_eq!(flow.net_flow(), e, "{:?}", o);
            }
        }
    }

    #[test]
    fn deletion_relabels_consistently() {
        let p = Poset::from_relations(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let q = p.delete(1).unwrap();
        // Remaining: old 0, 2, 3 -> new 0, 1, 2 with only 0 < 1 surviving.
        assert!(q.lt(0, 1));
        assert!(!q.comparable(0, 2) && !q.comparable(1, 2));
        assert!(matches!(p.delete(9), Err(PosetError::NoSuchElement { v: 9, .. })));
    }

    #[test]
    fn counting_rejects_oversized_posets() {
        let p = Poset::antichain(17);
        assert!(matches!(p.count_linear_extensions(), Err(PosetError::TooLarge { n: 17, .. })));
        assert!(p.enumerate_linear_extensions().is_err());
        assert!(p.antichains().is_err());
    }
}
