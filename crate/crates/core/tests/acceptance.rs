//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the evidence it gathered. Run with `cargo test --test acceptance`;
//! the long gadget solve is behind `--ignored`.

mod common;

use std::time::{Duration, Instant};

use kvis_core::bounds::{
    bound_eveng, bound_gen, bound_oddg, isometric_subgraph_lower_bound,
};
use kvis_core::families::{expected_mu, generate, mu_k_tree, FamilySpec};
use kvis_core::graph::{all_pairs, clique_number, Girth, Graph};
use kvis_core::solver::{enumerate_maximum_sets, mu_k_bruteforce, mu_k_exact_with, SolveOptions};
use kvis_core::Error;

fn opts(threads: usize) -> SolveOptions {
    SolveOptions {
        threads,
        budget: None,
    }
}

fn solve(g: &Graph, k: usize) -> usize {
    mu_k_exact_with(g, k, &opts(1)).expect("matrix instances solve").mu
}

/// Every cell of the formula matrix: (spec, k, value stated by the
/// closed form). The values are written out literally here so the test is
/// independent of the library's own formula table.
fn matrix_cells() -> Vec<(FamilySpec, usize, usize)> {
    let mut cells = Vec::new();
    for n in 3..=10u64 {
        for k in 1..=(n as usize - 1) {
            cells.push((FamilySpec::path(n), k, 2));
        }
    }
    for n in 4..=12u64 {
        for k in 1..=(n as usize / 2) {
            let value = if n as usize <= 3 * k { 3 } else { 2 };
            cells.push((FamilySpec::cycle(n), k, value));
        }
    }
    for (n, m) in [(1u64, 1u64), (2, 3), (3, 3)] {
        cells.push((FamilySpec::bistar(n, m), 2, m as usize + 1));
        cells.push((FamilySpec::bistar(n, m), 3, (n + m) as usize));
    }
    for (r, q) in [(3u64, 3u64), (4, 3), (3, 4)] {
        for k in 2..=(r as usize + 1) {
            cells.push((
                FamilySpec::caterpillar_uniform(r, q),
                k,
                k * (q as usize - 2) + 4 - q as usize,
            ));
        }
    }
    for (delta, diam) in [(3u64, 4u64), (3, 5)] {
        for k in 2..=diam as usize {
            let d = delta as usize;
            let value = if k % 2 == 0 {
                d * (d - 1).pow((k as u32 - 2) / 2)
            } else {
                2 * (d - 1).pow((k as u32 - 1) / 2)
            };
            cells.push((FamilySpec::perfect_tree(delta, diam), k, value));
        }
    }
    for (r, n) in [(3u64, 2u64), (4, 2), (3, 3)] {
        for k in 2..=(r as usize + 1) {
            let (r_us, n_us) = (r as usize, n as usize);
            let value = if k < r_us {
                (k - 1) * n_us + 2
            } else if k == r_us {
                (r_us - 1) * n_us + 1
            } else {
                r_us * n_us
            };
            cells.push((
                FamilySpec::corona_path(r, FamilySpec::complete(n)),
                k,
                value,
            ));
        }
    }
    for r in [3u64, 4, 5] {
        for k in 2..=(r as usize - 1) {
            cells.push((FamilySpec::strong_path_path2(r), k, k + 3));
        }
    }
    for r in [3u64, 4] {
        for k in 2..=(r as usize - 1) {
            cells.push((FamilySpec::strong_path_complete(r, 3), k, (k + 1) * 2 + 2));
        }
    }
    for (t, r) in [(3u64, 2u64), (4, 2)] {
        // The chain is flat at t for every k up to the diameter.
        let g = generate(&FamilySpec::sun(t, r)).expect("sun generates").graph;
        let diam = all_pairs(&g).diameter;
        for k in 1..=diam {
            cells.push((FamilySpec::sun(t, r), k, t as usize));
        }
    }
    cells
}

#[test]
fn criterion_1_formula_matrix() {
    let cells = matrix_cells();
    let start = Instant::now();
    for (spec, k, value) in &cells {
        let g = generate(spec).expect("matrix spec generates").graph;
        let solved = solve(&g, *k);
        assert_eq!(
            solved,
            *value,
            "solver vs closed form on {} k={k}",
            spec.describe()
        );
        let formula = expected_mu(spec, *k).expect("matrix k is in range");
        assert_eq!(
            formula,
            Some(*value),
            "formula table vs criterion value on {} k={k}",
            spec.describe()
        );
    }
    println!(
        "ACCEPTANCE criterion 1 PASS: formula matrix, {} cells solver == closed form ({:?})",
        cells.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_2_petersen_and_heawood() {
    let budget = Duration::from_secs(60);

    let petersen = generate(&FamilySpec::petersen()).unwrap().graph;
    let start = Instant::now();
    let r = mu_k_exact_with(&petersen, 2, &opts(0)).unwrap();
    let petersen_elapsed = start.elapsed();
    assert_eq!(r.mu, 6, "Petersen mu_2");
    assert!(petersen_elapsed < budget);

    let heawood = generate(&FamilySpec::heawood()).unwrap().graph;
    let start = Instant::now();
    let r = mu_k_exact_with(&heawood, 2, &opts(0)).unwrap();
    let heawood_elapsed = start.elapsed();
    assert_eq!(r.mu, 7, "Heawood mu_2");
    assert!(heawood_elapsed < budget);

    println!(
        "ACCEPTANCE criterion 2 PASS: Petersen mu_2 = 6 ({petersen_elapsed:?}), Heawood mu_2 = 7 ({heawood_elapsed:?})"
    );
}

#[test]
fn criterion_3_reduction_witnesses() {
    use kvis_core::graph::max_independent_set;
    use kvis_core::reduction::{build_gprime, expected_mu_gprime, proof_witness_set};
    use kvis_core::visibility::is_k_mv_set;

    let bases: Vec<(&str, Graph)> = vec![
        ("P4", generate(&FamilySpec::path(4)).unwrap().graph),
        ("P5", generate(&FamilySpec::path(5)).unwrap().graph),
        ("C6", generate(&FamilySpec::cycle(6)).unwrap().graph),
    ];
    let mut checked = 0;
    for (name, base) in &bases {
        let layout = build_gprime(base).expect("bases satisfy the preconditions");
        let independent = max_independent_set(base).unwrap();
        let alpha = independent.len();
        let (n, m) = (base.n(), base.m());
        let dm = all_pairs(&layout.gprime);
        for k in 2..=layout.diameter - 1 {
            let start = Instant::now();
            let witness = proof_witness_set(&layout, k, &independent).unwrap();
            assert_eq!(
                witness.len(),
                n * (m + k - 1) + alpha - k + 2,
                "witness cardinality for {name} k={k}"
            );
            assert!(
                is_k_mv_set(&layout.gprime, &dm, &witness, k).unwrap(),
                "witness validity for {name} k={k}"
            );
            // The witness uses a maximum independent set, so its size is
            // exactly the formula value.
            assert_eq!(
                expected_mu_gprime(&layout, k).unwrap(),
                witness.len(),
                "formula consistency for {name} k={k}"
            );
            assert!(start.elapsed() < Duration::from_secs(10));
            checked += 1;
        }
    }
    println!(
        "ACCEPTANCE criterion 3 PASS: proof witness valid with the stated cardinality on {checked} (base, k) pairs"
    );
}

/// Long-running part of criterion 3: close the gap exactly on the P4
/// gadget under a 30-minute budget. Run via `--ignored`.
#[test]
#[ignore = "long suite: exact gadget solve under a 30-minute budget"]
fn criterion_3_exact_gprime_p4_long() {
    use kvis_core::reduction::build_gprime;

    let base = generate(&FamilySpec::path(4)).unwrap().graph;
    let layout = build_gprime(&base).unwrap();
    let options = SolveOptions {
        threads: 0,
        budget: Some(Duration::from_secs(30 * 60)),
    };
    match mu_k_exact_with(&layout.gprime, 2, &options) {
        Ok(result) => {
            assert_eq!(result.mu, 18, "mu_2 of the P4 gadget");
            // The hub never belongs to a maximum set.
            assert!(
                !result.witness.contains(layout.hub()),
                "hub excluded from the reported maximum set"
            );
            println!(
                "ACCEPTANCE criterion 3 (long) PASS: mu_2(G'(P4)) = 18 in {:?} ({} nodes)",
                result.elapsed, result.nodes_explored
            );
        }
        Err(Error::Budget { lower_bound }) => {
            panic!("budget exhausted before optimality: best lower bound {lower_bound}");
        }
        Err(other) => panic!("unexpected error: {other}"),
    }
}

#[test]
fn criterion_4_oracle_equivalence() {
    let corpus = common::random_connected_corpus(200, 9, 0x5eed_0001);
    let mut solves = 0;
    for g in &corpus {
        let diam = all_pairs(g).diameter.max(1);
        for k in 1..=diam {
            let exact = mu_k_exact_with(g, k, &opts(1)).unwrap();
            let brute = mu_k_bruteforce(g, k).unwrap();
            assert_eq!(exact.mu, brute.mu, "value mismatch n={} k={k}", g.n());
            assert_eq!(
                exact.witness.to_vec(),
                brute.witness.to_vec(),
                "witness mismatch n={} k={k}",
                g.n()
            );
            solves += 1;
        }
    }
    println!(
        "ACCEPTANCE criterion 4 PASS: branch-and-bound == brute force on {} graphs ({solves} solves), witnesses included",
        corpus.len()
    );
}

#[test]
fn criterion_5_chain_property() {
    let corpus = common::random_connected_corpus(200, 9, 0x5eed_0001);
    for g in &corpus {
        let diam = all_pairs(g).diameter.max(1);
        let chain: Vec<usize> = (1..=diam)
            .map(|k| mu_k_exact_with(g, k, &opts(1)).unwrap().mu)
            .collect();
        let omega = clique_number(g).unwrap();
        assert_eq!(chain[0], omega, "chain starts at the clique number");
        assert!(
            chain.windows(2).all(|w| w[0] <= w[1]),
            "chain must be nondecreasing: {chain:?}"
        );
        let nocap = common::mv_number_nocap(g);
        assert_eq!(
            *chain.last().unwrap(),
            nocap,
            "chain ends at the uncapped mutual-visibility number"
        );
    }
    println!(
        "ACCEPTANCE criterion 5 PASS: omega = mu_1 <= ... <= mu_diam = uncapped brute force on {} graphs",
        corpus.len()
    );
}

#[test]
fn criterion_6_tree_algorithm() {
    let mut corpus = common::random_tree_corpus(100, 14, 0x5eed_0002);
    // The matrix trees as well: every caterpillar and perfect tree fits
    // under the brute-force cap.
    for (r, q) in [(3u64, 3u64), (4, 3), (3, 4)] {
        corpus.push(generate(&FamilySpec::caterpillar_uniform(r, q)).unwrap().graph);
    }
    for (delta, diam) in [(3u64, 4u64), (3, 5)] {
        corpus.push(generate(&FamilySpec::perfect_tree(delta, diam)).unwrap().graph);
    }
    let mut solves = 0;
    for t in &corpus {
        let diam = all_pairs(t).diameter;
        for k in 2..=diam.max(2) {
            assert_eq!(
                mu_k_tree(t, k).unwrap(),
                mu_k_bruteforce(t, k).unwrap().mu,
                "tree algorithm vs brute force, n={} k={k}",
                t.n()
            );
            solves += 1;
        }
    }
    println!(
        "ACCEPTANCE criterion 6 PASS: ball method == brute force on {} trees ({solves} solves)",
        corpus.len()
    );
}

#[test]
fn criterion_7_bounds() {
    // Lemma-style independence: any witness with at least 3 vertices found
    // at k < floor(girth/2) induces no edge (acyclic girth counts as
    // infinite).
    let mut pool = common::random_connected_corpus(120, 8, 0x5eed_0003);
    // High-girth named graphs make the hypothesis bite: Heawood at k = 2,
    // long cycles below half girth, and trees (infinite girth).
    pool.push(generate(&FamilySpec::heawood()).unwrap().graph);
    for n in [9u64, 10, 11, 12] {
        pool.push(generate(&FamilySpec::cycle(n)).unwrap().graph);
    }
    pool.push(generate(&FamilySpec::star(5)).unwrap().graph);
    pool.push(generate(&FamilySpec::caterpillar_uniform(4, 3)).unwrap().graph);
    let corpus = pool;
    let mut independence_checks = 0;
    for g in &corpus {
        let dm = all_pairs(g);
        let half_girth = dm.girth.value().map(|gv| gv / 2);
        for k in 1..=dm.diameter.max(1) {
            if half_girth.is_some_and(|h| k >= h) {
                continue;
            }
            let witness = mu_k_exact_with(g, k, &opts(1)).unwrap().witness;
            if witness.len() < 3 {
                continue;
            }
            let members = witness.to_vec();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    assert!(
                        !g.has_edge(u, v),
                        "witness must be independent below half girth (n={}, k={k})",
                        g.n()
                    );
                }
            }
            independence_checks += 1;
        }
    }

    // Lower bound from the two-center construction, checked on Petersen at
    // its threshold k = 3 (clamped to the diameter by the solver).
    let petersen = generate(&FamilySpec::petersen()).unwrap().graph;
    let dm = all_pairs(&petersen);
    let (threshold, value) = bound_gen(dm.max_degree, dm.min_degree, dm.girth).unwrap();
    assert_eq!((threshold, value), (3, 4));
    let mu3 = mu_k_exact_with(&petersen, 3, &opts(1)).unwrap().mu;
    assert!(mu3 >= value, "gen lower bound on Petersen");

    // Odd-girth upper bound on Petersen: the bound is tight and every
    // maximum set does induce an edge, so the hypothesis is exercised.
    let oddg = bound_oddg(dm.max_degree, dm.girth).unwrap();
    assert_eq!(oddg, 6);
    let mu2 = mu_k_exact_with(&petersen, 2, &opts(1)).unwrap().mu;
    assert_eq!(mu2, 6);
    let maxima = enumerate_maximum_sets(&petersen, 2).unwrap();
    assert!(!maxima.is_empty());
    for s in &maxima {
        let members = s.to_vec();
        let has_edge = members
            .iter()
            .any(|&u| members.iter().any(|&v| v > u && petersen.has_edge(u, v)));
        assert!(has_edge, "every maximum 2-distance set of Petersen induces an edge");
        assert!(s.len() <= oddg);
    }

    // Even-girth bound evaluates integer-exactly, and is tight on the
    // Heawood graph at k = g/2 = 3: maximum sets inducing an edge exist
    // and respect the bound.
    assert_eq!(bound_eveng(14, Girth::Cycle(6)), Some(7));
    let heawood = generate(&FamilySpec::heawood()).unwrap().graph;
    let mu3_heawood = mu_k_exact_with(&heawood, 3, &opts(1)).unwrap().mu;
    assert_eq!(mu3_heawood, 7);
    let heawood_maxima = enumerate_maximum_sets(&heawood, 3).unwrap();
    let edge_inducing = heawood_maxima
        .iter()
        .filter(|s| {
            let members = s.to_vec();
            members
                .iter()
                .any(|&u| members.iter().any(|&v| v > u && heawood.has_edge(u, v)))
        })
        .count();
    assert!(edge_inducing > 0, "the edge hypothesis is exercised");
    assert!(mu3_heawood <= 7);

    // Isometric-subgraph lower bound never exceeds mu_k; strict on C_12.
    let mut isometric_checks = 0;
    for g in corpus.iter().filter(|g| g.n() <= 9).take(30) {
        let diam = all_pairs(g).diameter.max(1);
        for k in 1..=diam {
            let bound = isometric_subgraph_lower_bound(g, k).unwrap();
            let mu = mu_k_exact_with(g, k, &opts(1)).unwrap().mu;
            assert!(bound <= mu, "isometric bound must not exceed mu_k");
            isometric_checks += 1;
        }
    }
    let c12 = generate(&FamilySpec::cycle(12)).unwrap().graph;
    let bound = isometric_subgraph_lower_bound(&c12, 4).unwrap();
    let mu4 = mu_k_exact_with(&c12, 4, &opts(1)).unwrap().mu;
    assert_eq!((bound, mu4), (2, 3), "strict-inequality witness on C_12");

    println!(
        "ACCEPTANCE criterion 7 PASS: independence below half girth ({independence_checks} witnesses), \
         gen >= 4 on Petersen (k=3), oddg tight at 6 with edge-inducing maxima, eveng(14,6) = 7 \
         (tight on Heawood at k=3), isometric bound <= mu_k ({isometric_checks} checks) and strict on C_12 (2 < 3)"
    );
}

#[test]
fn criterion_8_determinism_across_worker_counts() {
    let cells = matrix_cells();
    let mut checked = 0;
    for (spec, k, _) in &cells {
        let g = generate(spec).unwrap().graph;
        let one = mu_k_exact_with(&g, *k, &opts(1)).unwrap();
        let four = mu_k_exact_with(&g, *k, &opts(4)).unwrap();
        assert_eq!(one.mu, four.mu, "value differs across worker counts");
        assert_eq!(
            one.witness.to_vec(),
            four.witness.to_vec(),
            "witness differs across worker counts"
        );
        assert_eq!(
            one.nodes_explored, four.nodes_explored,
            "node count differs across worker counts"
        );
        checked += 1;
    }
    println!(
        "ACCEPTANCE criterion 8 PASS: 1-thread and 4-thread runs identical on all {checked} matrix cells"
    );
}
