//! Which acyclic orientations of a graph admit the most linear extensions?
//!
//! This crate computes the maximum number of linear extensions over all
//! acyclic orientations of a simple undirected graph, identifies the
//! orientations attaining it, and cross-checks the combinatorial machinery
//! that explains the answers: label-swapping bijections between extension
//! sets, extension-counting flows, recurrence bounds from antichains and
//! cutsets, order/chain/stable polytope volumes, and a graph-entropy solver
//! with certified bounds.
//!
//! Everything exact is exact: counts are arbitrary-precision integers,
//! bounds and polytope volumes are rationals, and randomized estimators are
//! seeded and reproducible.

pub mod corpus;
pub mod entropy;
pub mod experiments;
pub mod graph;
pub mod lp;
pub mod maps;
pub mod opt;
pub mod orient;
pub mod polytope;
pub mod poset;
pub mod verify;

/// Arbitrary-precision count. Linear-extension counts outgrow `u64` around
/// 21 elements, so the public API carries `BigUint` even though internal
/// routines may use `u64` under the `EXACT_LIMIT` guarantee.
pub type BigCount = num_bigint::BigUint;

/// Exact nonnegative rational, used for bounds and exact volumes.
pub type BigRatio = num_rational::BigRational;

/// Derive a child RNG seed from a base seed and a stream tag.
///
/// This is a fixed splitmix64-style mix, spelled out here so the mapping is
/// stable across platforms and library versions (reproducibility of every
/// seeded artifact depends on it).
pub fn substream_seed(seed: u64, tag: u64) -> u64 {
    let mut z = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(tag)
        .wrapping_add(0x243F_6A88_85A3_08D3);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
