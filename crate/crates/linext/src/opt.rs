//! Exhaustive optimization over acyclic orientations, comparability
//! recognition, and the bounds that sandwich the optimum.
//!
//! The optimum ε(G) is the largest number of linear extensions any acyclic
//! orientation of G induces. The search enumerates orientations per
//! connected component (the objective combines across components), and skips
//! the reversal partner of every orientation it evaluates: reversing all
//! edges preserves the extension count, so only orientations whose
//! highest-indexed edge points forward are counted and each maximizer is
//! emitted together with its reversal.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, EXACT_LIMIT};
use crate::orient::{enumerate_acyclic_orientations, AcyclicOrientation};
use crate::poset::{Poset, PosetError};
use crate::{BigCount, BigRatio};

/// Default cap on the number of orientations one search may evaluate.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum OptError {
    #[error("search needs {needed} orientation evaluations; budget allows {budget}")]
    BudgetExceeded { needed: BigCount, budget: u64 },
    #[error("bound requires at least two vertices")]
    TooFewVertices,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// The outcome of an exact search: the optimal value, every orientation
/// attaining it (ascending bitmask order), and how many orientations were
/// actually evaluated.
#[derive(Debug, Clone)]
pub struct EpsilonReport {
    pub epsilon: BigCount,
    pub argmax: Vec<AcyclicOrientation>,
    pub orientations_searched: u64,
}

fn factorial(k: usize) -> BigUint {
    (1..=k as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// Per-component search result, in the component's local labeling.
struct ComponentBest {
    old_ids: Vec<usize>,
    comp: Graph,
    best: u64,
    arg_dirs: Vec<Vec<bool>>,
}

/// Enumerate each component's acyclic orientations (one per reversal pair)
/// and keep everything attaining the component maximum of `objective`,
/// which must be invariant under reversal.
fn component_search<F>(
    g: &Graph,
    budget: u64,
    objective: F,
) -> Result<(Vec<ComponentBest>, u64), OptError>
where
    F: Fn(&AcyclicOrientation) -> u64,
{
    let comps = g.components();
    let mut parts = Vec::with_capacity(comps.len());
    let mut needed = BigUint::zero();
    for &set in &comps {
        if set.len() > EXACT_LIMIT {
            return Err(OptError::Graph(GraphError::TooLarge { n: set.len(), limit: EXACT_LIMIT }));
        }
        let comp = g.induced_subgraph(set)?;
        let count = comp.count_acyclic_orientations()?;
        // One evaluation per reversal pair; a lone vertex has a single
        // (empty) orientation that is its own reversal.
        needed += (count + BigUint::one()) / 2u32;
        parts.push((set, comp));
    }
    if needed > BigUint::from(budget) {
        return Err(OptError::BudgetExceeded { needed, budget });
    }

    let mut results = Vec::with_capacity(parts.len());
    let mut total_searched = 0u64;
    for (set, comp) in parts {
        let old_ids: Vec<usize> = set.iter().collect();
        let m = comp.edge_count();
        let mut best = 0u64;
        let mut arg_dirs: Vec<Vec<bool>> = Vec::new();
        let mut searched = 0u64;
        for o in enumerate_acyclic_orientations(&comp) {
            // Masks come out ascending, so once the top edge flips we are in
            // the reversal partners of orientations already seen.
            if m > 0 && *o.dirs().last().expect("m > 0") {
                break;
            }
            searched += 1;
            let value = objective(&o);
            if value > best {
                best = value;
                arg_dirs.clear();
            }
            if value == best {
                arg_dirs.push(o.dirs().to_vec());
                if m > 0 {
                    arg_dirs.push(o.reverse().dirs().to_vec());
                }
            }
        }
        total_searched += searched;
        results.push(ComponentBest { old_ids, comp, best, arg_dirs });
    }
    Ok((results, total_searched))
}

/// Combine per-component maximizers into whole-graph orientations, sorted by
/// bitmask.
fn lift_product(g: &Graph, parts: &[ComponentBest]) -> Vec<AcyclicOrientation> {
    let mut acc: Vec<Vec<bool>> = vec![vec![false; g.edge_count()]];
    for part in parts {
        let mut next = Vec::with_capacity(acc.len() * part.arg_dirs.len());
        for base in &acc {
            for local in &part.arg_dirs {
                let mut dirs = base.clone();
                for (i, &(a, b)) in part.comp.edges().iter().enumerate() {
                    let idx = g
                        .edge_index(part.old_ids[a], part.old_ids[b])
                        .expect("component edges are graph edges");
                    dirs[idx] = local[i];
                }
                next.push(dirs);
            }
        }
        acc = next;
    }
    let mut out: Vec<AcyclicOrientation> = acc
        .into_iter()
        .map(|d| AcyclicOrientation::from_dirs(g, d).expect("componentwise acyclic"))
        .collect();
    out.sort();
    out
}

/// Exact maximum number of linear extensions over all acyclic orientations,
/// with the complete argmax set. Works per component: for a disconnected
/// graph the count multiplies by the multinomial coefficient of interleaving
/// the components, which maximizes exactly when every component does.
pub fn epsilon(g: &Graph) -> Result<EpsilonReport, OptError> {
    epsilon_with_budget(g, DEFAULT_SEARCH_BUDGET)
}

/// [`epsilon`] with an explicit cap on orientation evaluations.
pub fn epsilon_with_budget(g: &Graph, budget: u64) -> Result<EpsilonReport, OptError> {
    let (parts, searched) =
        component_search(g, budget, |o| Poset::from_orientation(o).count_le_u64())?;
    let mut eps = BigUint::one();
    let mut remaining = g.vertex_count();
    for part in &parts {
        let size = part.old_ids.len();
        eps *= num_integer::binomial(BigUint::from(remaining), BigUint::from(size));
        eps *= BigUint::from(part.best);
        remaining -= size;
    }
    let argmax = lift_product(g, &parts);
    debug_assert!(!argmax.is_empty());
    Ok(EpsilonReport { epsilon: eps, argmax, orientations_searched: searched })
}

/// All acyclic orientations maximizing the squared norm of the degree
/// imbalance vector (outdegree minus indegree per vertex) — the vertices of
/// the graphical zonotope farthest from the origin. The norm adds across
/// components and is reversal-invariant, so the search mirrors [`epsilon`].
pub fn zonotope_argmax(g: &Graph) -> Result<Vec<AcyclicOrientation>, OptError> {
    let (parts, _) = component_search(g, DEFAULT_SEARCH_BUDGET, |o| o.zonotope_norm_sq())?;
    Ok(lift_product(g, &parts))
}

/// Find a transitive orientation (every directed path of length two is
/// shortcut by a directed edge) if one exists — exactly the orientations
/// induced by partial orders whose comparability graph is `g`.
///
/// Backtracking on the lowest-indexed undirected edge, forward direction
/// first, with implication forcing: once `t -> h` is fixed, any neighbor of
/// exactly one endpoint forces the connecting edge away from the missing
/// shortcut. The first complete assignment that validates is returned, so
/// the result is deterministic.
pub fn find_transitive_orientation(g: &Graph) -> Option<AcyclicOrientation> {
    let m = g.edge_count();
    let mut dirs: Vec<Option<bool>> = vec![None; m];
    search_transitive(g, &mut dirs)
}

fn search_transitive(g: &Graph, dirs: &mut Vec<Option<bool>>) -> Option<AcyclicOrientation> {
    let next = match dirs.iter().position(Option::is_none) {
        Some(idx) => idx,
        None => {
            let assignment: Vec<bool> = dirs.iter().map(|d| d.expect("complete")).collect();
            return AcyclicOrientation::from_dirs(g, assignment)
                .ok()
                .filter(AcyclicOrientation::is_transitive);
        }
    };
    for dir in [false, true] {
        let mut trail = Vec::new();
        if force(g, dirs, next, dir, &mut trail) {
            if let Some(found) = search_transitive(g, dirs) {
                return Some(found);
            }
        }
        for idx in trail {
            dirs[idx] = None;
        }
    }
    None
}

/// Assign edge `idx` the direction `dir` and propagate every forced
/// consequence, recording assignments in `trail`. Returns false on conflict.
fn force(
    g: &Graph,
    dirs: &mut Vec<Option<bool>>,
    idx: usize,
    dir: bool,
    trail: &mut Vec<usize>,
) -> bool {
    match dirs[idx] {
        Some(existing) => return existing == dir,
        None => {
            dirs[idx] = Some(dir);
            trail.push(idx);
        }
    }
    let (u, v) = g.edges()[idx];
    let (tail, head) = if dir { (v, u) } else { (u, v) };
    // tail -> head plus head -> w would need the shortcut tail -> w; absent
    // that edge, {head, w} must point into head.
    for w in g.neighbors(head).difference(g.neighbors(tail)).iter() {
        if w == tail {
            continue;
        }
        let e = g.edge_index(head.min(w), head.max(w)).expect("neighbor edge");
        let forced = w > head; // direction w -> head in canonical terms
        if !force(g, dirs, e, forced, trail) {
            return false;
        }
    }
    // w -> tail plus tail -> head would need w -> head; absent that edge,
    // {tail, w} must point out of tail.
    for w in g.neighbors(tail).difference(g.neighbors(head)).iter() {
        if w == head {
            continue;
        }
        let e = g.edge_index(tail.min(w), tail.max(w)).expect("neighbor edge");
        let forced = tail > w; // direction tail -> w in canonical terms
        if !force(g, dirs, e, forced, trail) {
            return false;
        }
    }
    true
}

/// Recursive chromatic lower bound: F(∅) = 1 and
/// F(S) = (Σ_{v∈S} F(S∖v)) / χ(G[S]); returns F(V). For comparability
/// graphs this is a lower bound on ε(G).
pub fn theorem_perf_bound(g: &Graph) -> Result<BigRatio, OptError> {
    let n = g.vertex_count();
    if n > EXACT_LIMIT {
        return Err(OptError::Graph(GraphError::TooLarge { n, limit: EXACT_LIMIT }));
    }
    let mut f = vec![BigRatio::zero(); 1 << n];
    f[0] = BigRatio::one();
    for mask in 1..1u64 << n {
        let s = VertexSet::from_bits(mask);
        let chi = g.induced_subgraph(s)?.chromatic_number()?;
        let mut sum = BigRatio::zero();
        for v in s.iter() {
            sum += f[(mask & !(1 << v)) as usize].clone();
        }
        f[mask as usize] = sum / BigRatio::from_integer(BigInt::from(chi));
    }
    Ok(f[(1u64 << n) as usize - 1].clone())
}

/// Two lower bounds from an optimal proper coloring with class sizes
/// `a_1, ..., a_k`: the product `Π a_i!` and the closed form
/// `n! / (k^(n-k) · k!)`. Both are valid lower bounds for ε(G).
pub fn coloring_lower_bound(g: &Graph) -> Result<(BigCount, BigRatio), OptError> {
    let classes = g.optimal_coloring()?;
    let product: BigUint = classes.iter().map(|c| factorial(c.len())).product();
    let n = g.vertex_count();
    let k = classes.len();
    let denom = BigUint::from(k).pow((n - k) as u32) * factorial(k);
    let closed = BigRatio::new(BigInt::from(factorial(n)), BigInt::from(denom));
    Ok((product, closed))
}

/// Upper bound ε(G) ≤ ½ Σ_v ε(G∖v) for connected graphs on at least two
/// vertices (each extension is counted by its first and last vertex).
pub fn cut_upper_bound(g: &Graph) -> Result<BigRatio, OptError> {
    if !g.is_connected() {
        return Err(OptError::Graph(GraphError::Disconnected));
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(OptError::TooFewVertices);
    }
    let mut total = BigUint::zero();
    for v in 0..n {
        let sub = g.induced_subgraph(g.all_vertices().without(v))?;
        total += epsilon(&sub)?.epsilon;
    }
    Ok(BigRatio::new(BigInt::from(total), BigInt::from(2)))
}

/// Upper bound ε(G) ≤ a(Ḡ), the number of acyclic orientations of the
/// complement, with the flag telling when equality is guaranteed (complete
/// multipartite graphs).
pub fn complement_upper_bound(g: &Graph) -> Result<(BigCount, bool), OptError> {
    let bound = g.complement().count_acyclic_orientations()?;
    Ok((bound, g.is_complete_multipartite()))
}
