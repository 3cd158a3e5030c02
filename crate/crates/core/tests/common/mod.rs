//! Shared corpus builders and independent oracles for the integration
//! suites. The oracles deliberately avoid the library's BFS/DAG machinery:
//! distances come from Floyd-Warshall and visibility from explicit
//! enumeration of every shortest path.

// Each test binary uses a different slice of this module.
#![allow(dead_code)]

use kvis_core::graph::Graph;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v, rng.random_range(0..v))).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("random edges are in range")
}

pub fn random_connected_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=max_n);
            random_connected_graph(&mut rng, n)
        })
        .collect()
}

pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v, rng.random_range(0..v))).collect();
    Graph::from_edges(n, edges).expect("tree edges are in range")
}

pub fn random_tree_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=max_n);
            random_tree(&mut rng, n)
        })
        .collect()
}

const INF: u32 = u32::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut d = vec![INF; n * n];
    for v in 0..n {
        d[v * n + v] = 0;
    }
    for (u, v) in g.edges() {
        d[u * n + v] = 1;
        d[v * n + u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i * n + k].saturating_add(d[k * n + j]);
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
    d
}

/// Every shortest u,v-path as a vertex sequence, by DFS over the distance
/// layers.
fn all_geodesics(g: &Graph, dist: &[u32], u: usize, v: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut paths = Vec::new();
    let mut current = vec![u];
    fn go(
        g: &Graph,
        dist: &[u32],
        n: usize,
        v: usize,
        current: &mut Vec<usize>,
        paths: &mut Vec<Vec<usize>>,
    ) {
        let x = *current.last().expect("nonempty");
        if x == v {
            paths.push(current.clone());
            return;
        }
        let u = current[0];
        for y in g.neighbors(x).iter() {
            if dist[u * n + y] == dist[u * n + x] + 1
                && dist[u * n + y].saturating_add(dist[y * n + v]) == dist[u * n + v]
            {
                current.push(y);
                go(g, dist, n, v, current, paths);
                current.pop();
            }
        }
    }
    go(g, dist, n, v, &mut current, &mut paths);
    paths
}

/// Whether `mask` is a mutual-visibility set under a length cap of `k`
/// hops (pass `usize::MAX` for the classical uncapped notion), decided by
/// explicit path enumeration.
pub fn is_mv_set_by_enumeration(g: &Graph, dist: &[u32], mask: u32, k: usize) -> bool {
    let n = g.n();
    let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if dist[u * n + v] as usize > k {
                return false;
            }
            let clean = all_geodesics(g, dist, u, v)
                .iter()
                .any(|p| p[1..p.len() - 1].iter().all(|w| mask >> w & 1 == 0));
            if !clean {
                return false;
            }
        }
    }
    true
}

/// The classical mutual-visibility number (no length cap), brute forced
/// over all vertex subsets with enumeration-based visibility.
pub fn mv_number_nocap(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential");
    let dist = floyd_warshall(g);
    let mut best = 0usize;
    for mask in 0u32..1 << n {
        if (mask.count_ones() as usize) > best && is_mv_set_by_enumeration(g, &dist, mask, usize::MAX)
        {
            best = mask.count_ones() as usize;
        }
    }
    best
}
