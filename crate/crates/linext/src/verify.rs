//! Named invariant suites: each bundles the checks for one family of
//! results, runs them against the shared corpora, and reports one line per
//! check. The command-line `verify` subcommand and the acceptance tests
//! both run these.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::corpus::{
    bounds_corpus, comparability_corpus, connected_bipartite_up_to, random_graph,
    random_orientation, random_poset, random_tree,
};
use crate::entropy::{alpha_entropy_lower, graph_entropy, kahn_kim_check};
use crate::graph::{format_graph, Graph, VertexSet};
use crate::maps::{theta, theta_inverse, theta_prime};
use crate::opt::{
    coloring_lower_bound, complement_upper_bound, cut_upper_bound, epsilon,
    find_transitive_orientation, theorem_perf_bound, zonotope_argmax,
};
use crate::orient::{bipartite_orientations, enumerate_acyclic_orientations, AcyclicOrientation};
use crate::polytope::{
    exact_order_volume, exact_stable_volume, fractional_region_volume, in_chain_polytope,
    in_order_polytope, mc_volume, transfer, transfer_inverse,
};
use crate::poset::{recurrence_sides, LinearExtension, Poset};
use crate::{substream_seed, BigRatio};

/// One verified statement with a human-readable outcome line.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// The outcome of one named suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out =
            format!("suite {}: {}\n", self.suite, if self.passed() { "pass" } else { "FAIL" });
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {} — {}\n",
                if c.passed { "pass" } else { "FAIL" },
                c.label,
                c.detail
            ));
        }
        out
    }
}

/// All runnable suite names, in display order.
pub const SUITE_NAMES: &[&str] = &[
    "bip",
    "odd-cycle",
    "comparability",
    "recurrence",
    "flow",
    "inout",
    "complement-bound",
    "stanley",
    "zonotope",
    "entropy-bounds",
];

/// Run a suite by name; `corpus_size` overrides the default size of the
/// suite's random corpus (when it has one).
pub fn run_suite(name: &str, corpus_size: Option<usize>, seed: u64) -> Option<SuiteReport> {
    let size = |d: usize| corpus_size.unwrap_or(d);
    Some(match name {
        "bip" => suite_bip(size(20), seed),
        "odd-cycle" => suite_odd_cycle(),
        "comparability" => suite_comparability(size(20), seed),
        "recurrence" => suite_recurrence(size(200), seed),
        "flow" => suite_flow(size(100), seed),
        "inout" => suite_inout(size(1000), seed),
        "complement-bound" => suite_complement_bound(size(10), seed),
        "stanley" => suite_stanley(size(20), seed),
        "zonotope" => suite_zonotope(size(10), seed),
        "entropy-bounds" => suite_entropy_bounds(size(5), seed),
        _ => return None,
    })
}

fn check(label: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult { label: label.to_string(), passed, detail }
}

fn summarize(failures: &[String], scope: String) -> (bool, String) {
    if failures.is_empty() {
        (true, scope)
    } else {
        (false, format!("{scope}; {} failures, first: {}", failures.len(), failures[0]))
    }
}

fn extensions_of(o: &AcyclicOrientation) -> Vec<LinearExtension> {
    Poset::from_orientation(o)
        .enumerate_linear_extensions()
        .expect("suite hosts are small")
        .collect()
}

fn sorted(mut v: Vec<AcyclicOrientation>) -> Vec<AcyclicOrientation> {
    v.sort();
    v
}

/// Bipartite optima: over every connected bipartite graph up to six
/// vertices (plus named members and random trees), the extension count is
/// maximized by exactly the two bipartite orientations; and the repair
/// bijection round-trips with its surjectivity criterion.
pub fn suite_bip(trees: usize, seed: u64) -> SuiteReport {
    let mut checks = Vec::new();

    let mut corpus = connected_bipartite_up_to(6);
    corpus.push(Graph::cycle(6));
    corpus.push(Graph::complete_multipartite(&[3, 3]));
    let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, 0xB1));
    for i in 0..trees {
        corpus.push(random_tree(2 + i % 6, &mut rng));
    }
    let failures: Vec<String> = corpus
        .par_iter()
        .filter_map(|g| {
            let report = epsilon(g).expect("small corpus member");
            let (down, up) = bipartite_orientations(g).expect("corpus is bipartite");
            let mut expected = vec![down, up];
            expected.sort();
            expected.dedup();
            if sorted(report.argmax.clone()) == expected {
                None
            } else {
                Some(format_graph(g))
            }
        })
        .collect();
    let (ok, detail) = summarize(&failures, format!("{} graphs", corpus.len()));
    checks.push(check(
        "extension count is maximized by exactly the two bipartite orientations",
        ok,
        detail,
    ));

    let hosts = [Graph::path(3), Graph::path(4), Graph::cycle(4), Graph::cycle(6)];
    let mut pairs = 0u64;
    let mut roundtrip_failures = Vec::new();
    let mut image_failures = Vec::new();
    for g in &hosts {
        let (down, up) = bipartite_orientations(g).expect("host is bipartite");
        let e_up = Poset::from_orientation(&up).count_linear_extensions().expect("small host");
        for o in enumerate_acyclic_orientations(g) {
            let mut image: BTreeSet<LinearExtension> = BTreeSet::new();
            for f in extensions_of(&o) {
                let (gext, _) = theta(&o, &f).expect("f extends o");
                pairs += 1;
                if theta_inverse(&o, &gext).expect("valid target").as_ref() != Some(&f) {
                    roundtrip_failures.push(format!("{} dirs {:?}", format_graph(g), o.dirs()));
                }
                image.insert(gext);
            }
            let surjective = BigUint::from(image.len() as u64) == e_up;
            let is_bipartite_pair = o == down || o == up;
            if surjective != is_bipartite_pair {
                image_failures.push(format!("{} dirs {:?}", format_graph(g), o.dirs()));
            }
        }
    }
    let (ok, detail) = summarize(&roundtrip_failures, format!("{pairs} (o, f) pairs"));
    checks.push(check("relabeling map inverts exactly", ok, detail));
    let (ok, detail) = summarize(&image_failures, format!("{pairs} pairs over 4 hosts"));
    checks.push(check(
        "image fills the up-orientation's extensions exactly for the bipartite pair",
        ok,
        detail,
    ));

    SuiteReport { suite: "bip", checks }
}

/// Odd-cycle optima: the five-cycle optimum against a permutation-level
/// brute force, and injectivity/surjectivity of the odd-cycle repair map
/// on C3, C5, C7.
pub fn suite_odd_cycle() -> SuiteReport {
    let mut checks = Vec::new();

    let c5 = Graph::cycle(5);
    let all_labelings: Vec<LinearExtension> =
        Poset::antichain(5).enumerate_linear_extensions().expect("small").collect();
    let brute: Vec<(AcyclicOrientation, u64)> = enumerate_acyclic_orientations(&c5)
        .map(|o| {
            let count =
                all_labelings.iter().filter(|f| o.is_extended_by(f.labels())).count() as u64;
            (o, count)
        })
        .collect();
    let best = brute.iter().map(|(_, c)| *c).max().unwrap();
    let brute_argmax =
        sorted(brute.iter().filter(|(_, c)| *c == best).map(|(o, _)| o.clone()).collect());
    checks.push(check(
        "brute force over 30 orientations and 120 labelings finds optimum 8",
        brute.len() == 30 && best == 8,
        format!("{} orientations, optimum {best}", brute.len()),
    ));
    let report = epsilon(&c5).expect("five-cycle");
    checks.push(check(
        "optimizer agrees with the brute force",
        report.epsilon == BigUint::from(8u32) && sorted(report.argmax.clone()) == brute_argmax,
        format!("epsilon {}, argmax size {}", report.epsilon, report.argmax.len()),
    ));
    checks.push(check(
        "argmax is exactly the ten orientations with one directed 2-path",
        brute_argmax.len() == 10 && brute_argmax.iter().all(|o| o.is_almost_bipartite().unwrap()),
        format!("{} optima", brute_argmax.len()),
    ));

    for n in [3usize, 5, 7] {
        let g = Graph::cycle(n);
        let mut pairs = 0u64;
        let mut injective_failures = Vec::new();
        let mut surjective_failures = Vec::new();
        for o in enumerate_acyclic_orientations(&g) {
            let exts = extensions_of(&o);
            let mut image: BTreeSet<LinearExtension> = BTreeSet::new();
            let mut target: Option<AcyclicOrientation> = None;
            for f in &exts {
                let outcome = theta_prime(&o, f).expect("valid pair");
                pairs += 1;
                assert!(
                    outcome.o_uvw.is_extended_by(outcome.g_ext.labels()),
                    "the image must extend the rewired orientation"
                );
                if let Some(t) = &target {
                    assert_eq!(t, &outcome.o_uvw, "rewired orientation depends only on o");
                } else {
                    target = Some(outcome.o_uvw.clone());
                }
                image.insert(outcome.g_ext);
            }
            if image.len() != exts.len() {
                injective_failures.push(format!("C{n} dirs {:?}", o.dirs()));
            }
            let e_target = Poset::from_orientation(&target.expect("at least one extension"))
                .count_linear_extensions()
                .expect("small");
            let surjective = BigUint::from(image.len() as u64) == e_target;
            if surjective != o.is_almost_bipartite().unwrap() {
                surjective_failures.push(format!("C{n} dirs {:?}", o.dirs()));
            }
        }
        let (ok, detail) = summarize(&injective_failures, format!("{pairs} pairs"));
        checks.push(check(&format!("odd-cycle map is injective on C{n}"), ok, detail));
        let (ok, detail) = summarize(&surjective_failures, format!("{pairs} pairs"));
        checks.push(check(
            &format!("odd-cycle map is surjective on C{n} exactly when almost bipartite"),
            ok,
            detail,
        ));
    }

    SuiteReport { suite: "odd-cycle", checks }
}

/// Comparability optima: on every corpus member the argmax set is exactly
/// the transitive orientations, and the squared-imbalance argmax
/// coincides.
pub fn suite_comparability(randoms: usize, seed: u64) -> SuiteReport {
    let corpus = comparability_corpus(randoms, seed);
    let outcomes: Vec<(bool, bool, String)> = corpus
        .par_iter()
        .map(|g| {
            let transitive =
                sorted(enumerate_acyclic_orientations(g).filter(|o| o.is_transitive()).collect());
            let report = epsilon(g).expect("small corpus member");
            let eps_match = !transitive.is_empty() && sorted(report.argmax.clone()) == transitive;
            let zon_match = sorted(zonotope_argmax(g).expect("small corpus member")) == transitive;
            (eps_match, zon_match, format_graph(g))
        })
        .collect();
    let eps_failures: Vec<String> =
        outcomes.iter().filter(|(e, _, _)| !e).map(|(_, _, g)| g.clone()).collect();
    let zon_failures: Vec<String> =
        outcomes.iter().filter(|(_, z, _)| !z).map(|(_, _, g)| g.clone()).collect();
    let mut checks = Vec::new();
    let (ok, detail) = summarize(&eps_failures, format!("{} graphs", corpus.len()));
    checks.push(check(
        "argmax is exactly the (nonempty) set of transitive orientations",
        ok,
        detail,
    ));
    let (ok, detail) = summarize(&zon_failures, format!("{} graphs", corpus.len()));
    checks.push(check("squared-imbalance argmax coincides with the extension argmax", ok, detail));
    SuiteReport { suite: "comparability", checks }
}

/// Deletion recurrence: for antichains the count dominates the deleted
/// sum, for cutsets it is dominated, with equality exactly when the set is
/// both.
pub fn suite_recurrence(posets: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, 0x2E));
    let mut sets = 0u64;
    let mut failures = Vec::new();
    for _ in 0..posets {
        let n = rng.random_range(1..=7);
        let p = random_poset(n, &mut rng);
        for mask in 1..(1u64 << n) {
            let s = VertexSet::from_bits(mask);
            let rs = recurrence_sides(&p, s).expect("subset in range");
            let ok = match (rs.is_antichain, rs.is_cutset) {
                (true, true) => rs.lhs == rs.rhs,
                (true, false) => rs.lhs > rs.rhs,
                (false, true) => rs.lhs < rs.rhs,
                (false, false) => continue,
            };
            sets += 1;
            if !ok {
                failures.push(format!("{:?} set {:?}", p, s));
            }
        }
    }
    let (ok, detail) =
        summarize(&failures, format!("{posets} posets, {sets} antichain/cutset subsets"));
    SuiteReport {
        suite: "recurrence",
        checks: vec![check(
            "antichain ≥, cutset ≤, equality exactly for antichain-cutsets",
            ok,
            detail,
        )],
    }
}

/// Natural flows: conservation at every vertex and total flow equal to
/// the extension count, on random acyclic orientations.
pub fn suite_flow(count: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, 0xF1));
    let mut failures = Vec::new();
    for _ in 0..count {
        let n = rng.random_range(1..=7);
        let g = random_graph(n, 0.5, &mut rng);
        let o = random_orientation(&g, &mut rng);
        let flow = crate::poset::natural_flow(&o).expect("small host");
        let e = Poset::from_orientation(&o).count_linear_extensions().expect("small host");
        if !flow.conservation_holds(&o) || flow.net_flow() != e {
            failures.push(format!("{} dirs {:?}", format_graph(&g), o.dirs()));
        }
    }
    let (ok, detail) = summarize(&failures, format!("{count} random orientations"));
    SuiteReport {
        suite: "flow",
        checks: vec![check(
            "flows conserve at every vertex and total to the extension count",
            ok,
            detail,
        )],
    }
}

/// Degree-imbalance identity: `½·Σ (indeg−outdeg)² = |E| + tri + inc − com`
/// exhaustively at five vertices and on random orientations up to nine.
pub fn suite_inout(randoms: usize, seed: u64) -> SuiteReport {
    let identity_holds = |o: &AcyclicOrientation| -> bool {
        let stats = o.triple_stats();
        let rhs = o.host().edges().len() as i128 + stats.tri as i128 + stats.inc as i128
            - stats.com as i128;
        o.half_imbalance_square_sum() as i128 == rhs
    };
    let mut exhaustive = 0u64;
    let mut failures = Vec::new();
    for n in 1..=5 {
        for g in crate::corpus::all_graphs(n) {
            for o in enumerate_acyclic_orientations(&g) {
                exhaustive += 1;
                if !identity_holds(&o) {
                    failures.push(format!("{} dirs {:?}", format_graph(&g), o.dirs()));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, 0x10));
    for _ in 0..randoms {
        let n = rng.random_range(1..=9);
        let g = random_graph(n, 0.5, &mut rng);
        let o = random_orientation(&g, &mut rng);
        if !identity_holds(&o) {
            failures.push(format!("{} dirs {:?}", format_graph(&g), o.dirs()));
        }
    }
    let (ok, detail) =
        summarize(&failures, format!("{exhaustive} exhaustive + {randoms} random orientations"));
    SuiteReport {
        suite: "inout",
        checks: vec![check("half the squared imbalance equals |E| + tri + inc − com", ok, detail)],
    }
}

/// Counting bounds: the complement bound with its equality
/// characterization on all five-vertex graphs, the recursive chromatic
/// and coloring bounds below the optimum, the vertex-deletion bound
/// above it, and the five-cycle instantiation with exact rationals.
pub fn suite_complement_bound(randoms: usize, seed: u64) -> SuiteReport {
    let mut checks = Vec::new();

    let mut small = Vec::new();
    for n in 1..=5 {
        small.extend(crate::corpus::all_graphs(n));
    }
    let failures: Vec<String> = small
        .par_iter()
        .filter_map(|g| {
            let (bound, is_cm) = complement_upper_bound(g).expect("small graph");
            let eps = epsilon(g).expect("small graph").epsilon;
            let ok = eps <= bound && (eps == bound) == is_cm;
            if ok {
                None
            } else {
                Some(format_graph(g))
            }
        })
        .collect();
    let (ok, detail) = summarize(&failures, format!("{} labeled graphs", small.len()));
    checks.push(check(
        "optimum ≤ complement's acyclic-orientation count, equality iff complete multipartite",
        ok,
        detail,
    ));

    let comparability = comparability_corpus(randoms, seed);
    let perf_failures: Vec<String> = comparability
        .par_iter()
        .filter_map(|g| {
            let bound = theorem_perf_bound(g).expect("small graph");
            let eps =
                BigRatio::from_integer(BigInt::from(epsilon(g).expect("small graph").epsilon));
            if bound <= eps {
                None
            } else {
                Some(format_graph(g))
            }
        })
        .collect();
    let (ok, detail) = summarize(&perf_failures, format!("{} graphs", comparability.len()));
    checks.push(check("recursive chromatic bound stays below the optimum", ok, detail));

    let bounds = bounds_corpus(randoms, seed);
    let sandwich_failures: Vec<String> = bounds
        .par_iter()
        .filter_map(|g| {
            let eps_count = epsilon(g).expect("small graph").epsilon;
            let eps = BigRatio::from_integer(BigInt::from(eps_count.clone()));
            let (product, closed) = coloring_lower_bound(g).expect("small graph");
            let cut = cut_upper_bound(g).expect("connected, two or more vertices");
            let ok = product <= eps_count && closed <= eps && eps <= cut;
            if ok {
                None
            } else {
                Some(format_graph(g))
            }
        })
        .collect();
    let (ok, detail) = summarize(&sandwich_failures, format!("{} graphs", bounds.len()));
    checks.push(check("coloring bounds ≤ optimum ≤ half the deleted-vertex sum", ok, detail));

    let c5 = Graph::cycle(5);
    let (_, closed) = coloring_lower_bound(&c5).expect("five-cycle");
    let cut = cut_upper_bound(&c5).expect("five-cycle");
    let eps = epsilon(&c5).expect("five-cycle").epsilon;
    let lower = BigRatio::new(BigInt::from(20), BigInt::from(9));
    let upper = BigRatio::new(BigInt::from(25), BigInt::from(2));
    checks.push(check(
        "five-cycle instantiation is exactly 20/9 ≤ 8 ≤ 25/2",
        closed == lower && cut == upper && eps == BigUint::from(8u32),
        format!("{closed} ≤ {eps} ≤ {cut}"),
    ));

    SuiteReport { suite: "complement-bound", checks }
}

/// Volume agreement: Monte-Carlo volumes of the order and chain polytopes
/// against the exact `e(P)/n!`, and transfer round-trips, on random
/// posets.
pub fn suite_stanley(posets: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, 0x57));
    let pool: Vec<Poset> = (0..posets)
        .map(|_| {
            let n = rng.random_range(1..=7);
            random_poset(n, &mut rng)
        })
        .collect();
    const SAMPLES: u64 = 100_000;
    let mut volume_failures = Vec::new();
    let mut transfer_failures = Vec::new();
    for (i, p) in pool.iter().enumerate() {
        let n = p.len();
        let truth = exact_order_volume(p).expect("small poset").to_f64().expect("fits a float");
        let order_est =
            mc_volume(|x| in_order_polytope(p, x), n, SAMPLES, substream_seed(seed, 2 * i as u64));
        let chain_est = mc_volume(
            |x| in_chain_polytope(p, x),
            n,
            SAMPLES,
            substream_seed(seed, 2 * i as u64 + 1),
        );
        let sigma = (truth * (1.0 - truth) / SAMPLES as f64).sqrt();
        let tolerance = 4.0 * sigma + 1e-12;
        if (order_est.estimate - truth).abs() > tolerance
            || (chain_est.estimate - truth).abs() > tolerance
        {
            volume_failures.push(format!(
                "poset {i}: order {} chain {} truth {truth}",
                order_est.estimate, chain_est.estimate
            ));
        }

        let mut worst = 0.0f64;
        for _ in 0..500 {
            // A monotone point of the order polytope, and a shrunken cube
            // point of the chain polytope.
            let raw: Vec<f64> = (0..n).map(|_| rng.random()).collect();
            let x: Vec<f64> =
                (0..n).map(|v| p.below(v).iter().map(|j| raw[j]).fold(raw[v], f64::max)).collect();
            let back =
                transfer_inverse(p, &transfer(p, &x).expect("member")).expect("image is a member");
            for (a, b) in x.iter().zip(&back) {
                worst = worst.max((a - b).abs());
            }
            let c: Vec<f64> = (0..n).map(|_| rng.random::<f64>() / n as f64).collect();
            let fwd =
                transfer(p, &transfer_inverse(p, &c).expect("member")).expect("image is a member");
            for (a, b) in c.iter().zip(&fwd) {
                worst = worst.max((a - b).abs());
            }
        }
        if worst > 1e-12 {
            transfer_failures.push(format!("poset {i}: error {worst:e}"));
        }
    }
    let mut checks = Vec::new();
    let (ok, detail) =
        summarize(&volume_failures, format!("{posets} posets at {SAMPLES} samples, four-sigma"));
    checks.push(check("order and chain polytope volumes match e(P)/n! by Monte Carlo", ok, detail));
    let (ok, detail) = summarize(&transfer_failures, format!("{} points", posets * 1000));
    checks.push(check("transfer round-trips within 1e-12", ok, detail));
    SuiteReport { suite: "stanley", checks }
}

/// Region volumes and hull volumes: the fraction of labelings extending an
/// orientation matches `e(P)/n!`, the scaled optimum never exceeds the
/// exact stable-polytope volume (equality exactly for graphs with a
/// transitive orientation), and the squared-imbalance argmax coincides on
/// named comparability hosts.
pub fn suite_zonotope(orientations: usize, seed: u64) -> SuiteReport {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(substream_seed(seed, 0x20));

    const SAMPLES: u64 = 100_000;
    let mut region_failures = Vec::new();
    for i in 0..orientations {
        let n = rng.random_range(2..=6);
        let g = random_graph(n, 0.5, &mut rng);
        let o = random_orientation(&g, &mut rng);
        let e = Poset::from_orientation(&o)
            .count_linear_extensions()
            .expect("small host")
            .to_f64()
            .expect("fits");
        let fact: f64 = (1..=n).map(|k| k as f64).product();
        let truth = e / fact;
        let est = fractional_region_volume(&o, SAMPLES, substream_seed(seed, 100 + i as u64));
        let sigma = (truth * (1.0 - truth) / SAMPLES as f64).sqrt();
        if (est.estimate - truth).abs() > 4.0 * sigma + 1e-12 {
            region_failures.push(format!(
                "{} dirs {:?}: {} vs {truth}",
                format_graph(&g),
                o.dirs(),
                est.estimate
            ));
        }
    }
    let (ok, detail) = summarize(
        &region_failures,
        format!("{orientations} orientations at {SAMPLES} samples, four-sigma"),
    );
    checks.push(check("region fractions match e(P)/n! by permutation sampling", ok, detail));

    let mut hull_hosts = vec![
        Graph::path(4),
        Graph::cycle(4),
        Graph::cycle(5),
        Graph::complete(4),
        Graph::complete_multipartite(&[2, 3]),
        Graph::complete_multipartite(&[2, 2, 2]),
    ];
    for _ in 0..2 {
        hull_hosts.push(random_graph(5, 0.5, &mut rng));
    }
    let hull_failures: Vec<String> = hull_hosts
        .par_iter()
        .filter_map(|g| {
            let n = g.vertex_count();
            let eps = epsilon(g).expect("small graph").epsilon;
            let fact = (1..=n as u64).fold(BigInt::from(1), |acc, k| acc * k);
            let scaled = BigRatio::new(BigInt::from(eps), fact);
            let vol = exact_stable_volume(g).expect("within the volume limit");
            let comparability = find_transitive_orientation(g).is_some();
            let ok = scaled <= vol && (scaled == vol) == comparability;
            if ok {
                None
            } else {
                Some(format_graph(g))
            }
        })
        .collect();
    let (ok, detail) = summarize(&hull_failures, format!("{} graphs", hull_hosts.len()));
    checks.push(check(
        "scaled optimum ≤ exact hull volume, equality exactly on comparability graphs",
        ok,
        detail,
    ));

    let named =
        [Graph::path(4), Graph::cycle(4), Graph::cycle(6), Graph::complete_multipartite(&[2, 3])];
    let coincide = named.iter().all(|g| {
        sorted(zonotope_argmax(g).expect("small")) == sorted(epsilon(g).expect("small").argmax)
    });
    checks.push(check(
        "squared-imbalance argmax coincides on named comparability hosts",
        coincide,
        format!("{} hosts", named.len()),
    ));

    SuiteReport { suite: "zonotope", checks }
}

/// Entropy values and the volume sandwich: the complete-graph and
/// five-cycle entropies to certified accuracy, the independence-ratio
/// lower bound, and the two-sided volume comparison with exact hull
/// volumes on comparability hosts.
pub fn suite_entropy_bounds(randoms: usize, seed: u64) -> SuiteReport {
    let mut checks = Vec::new();
    const TOL: f64 = 1e-4;

    let k4 = graph_entropy(&Graph::complete(4), TOL).expect("converges");
    checks.push(check(
        "complete-graph entropy is 2 bits within 1e-4, gap-certified",
        k4.duality_gap <= TOL && (k4.h_bits - 2.0).abs() <= TOL,
        format!("h {} gap {:.2e} after {} iterations", k4.h_bits, k4.duality_gap, k4.iterations),
    ));

    let c5 = graph_entropy(&Graph::cycle(5), TOL).expect("converges");
    let truth = 2.5f64.log2();
    checks.push(check(
        "five-cycle entropy is log2(5/2) within 1e-4, gap-certified",
        c5.duality_gap <= TOL && c5.h_bits >= truth - 1e-9 && c5.h_bits <= truth + TOL,
        format!("h {} gap {:.2e} after {} iterations", c5.h_bits, c5.duality_gap, c5.iterations),
    ));

    let corpus = bounds_corpus(randoms, seed);
    let mut bound_failures = Vec::new();
    for g in &corpus {
        let r = graph_entropy(g, TOL).expect("converges");
        let bound = alpha_entropy_lower(g).expect("small graph");
        if r.h_bits < bound - TOL {
            bound_failures.push(format_graph(g));
        }
    }
    let (ok, detail) = summarize(&bound_failures, format!("{} graphs", corpus.len()));
    checks.push(check("entropy dominates log2(n/alpha)", ok, detail));

    let comparability: Vec<Graph> =
        comparability_corpus(randoms, seed).into_iter().filter(|g| g.vertex_count() <= 6).collect();
    let mut sandwich_failures = Vec::new();
    for g in &comparability {
        let vol = exact_stable_volume(g).expect("within the volume limit");
        let r = graph_entropy(g, TOL).expect("converges");
        let report = kahn_kim_check(g, &vol, r.h_bits, r.duality_gap.max(TOL));
        if !report.holds() {
            sandwich_failures.push(format!("{}: {:?}", format_graph(g), report));
        }
    }
    let (ok, detail) = summarize(&sandwich_failures, format!("{} graphs", comparability.len()));
    checks.push(check(
        "volume sandwich holds with exact hull volumes on comparability hosts",
        ok,
        detail,
    ));

    SuiteReport { suite: "entropy-bounds", checks }
}
