//! The visibility predicate: can two vertices see each other along some
//! geodesic of bounded length whose interior avoids a given set?

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, UNREACHABLE};
use crate::vertex_set::VertexSet;

/// True iff some shortest `u,v`-path has all internal vertices outside
/// `blocked`. The endpoints themselves may be members of `blocked`.
///
/// Only vertices `w` with `dist(u,w) + dist(w,v) = dist(u,v)` can appear on
/// a geodesic, so the test is a reachability walk over that layered DAG,
/// skipping blocked interior vertices. Cost is O(n + m) per query.
pub fn geodesic_exists_avoiding(
    g: &Graph,
    dm: &DistanceMatrix,
    u: usize,
    v: usize,
    blocked: &VertexSet,
) -> Result<bool> {
    let d = dm.dist(u, v);
    if d == UNREACHABLE {
        return Err(Error::Disconnected(format!(
            "vertices {u} and {v} are in different components"
        )));
    }
    if d <= 1 {
        return Ok(true);
    }
    if d == 2 {
        // The only interior layer is the common neighborhood.
        return Ok(g.neighbors(u).intersects_outside(g.neighbors(v), blocked));
    }
    let mut seen = VertexSet::empty(g.n());
    seen.insert(u);
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        let dx = dm.dist(u, x);
        for y in g.neighbors(x).iter() {
            if seen.contains(y) || dm.dist(u, y) != dx + 1 {
                continue;
            }
            if dm.dist(u, y) + dm.dist(y, v) != d {
                continue;
            }
            if y == v {
                return Ok(true);
            }
            if blocked.contains(y) {
                continue;
            }
            seen.insert(y);
            stack.push(y);
        }
    }
    Ok(false)
}

/// Two vertices are `S_k`-visible when their distance is at most `k` and
/// some geodesic between them has its interior outside `s`. A shortest path
/// has length exactly `dist(u,v)`, so the length cap reduces to the distance
/// test. The reflexive case `u = v` counts as visible.
pub fn is_sk_visible(
    g: &Graph,
    dm: &DistanceMatrix,
    u: usize,
    v: usize,
    s: &VertexSet,
    k: usize,
) -> Result<bool> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    if u == v {
        return Ok(true);
    }
    let d = dm.dist(u, v);
    if d == UNREACHABLE {
        return Err(Error::Disconnected(format!(
            "vertices {u} and {v} are in different components"
        )));
    }
    if d as usize > k {
        return Ok(false);
    }
    geodesic_exists_avoiding(g, dm, u, v, s)
}

/// True iff every unordered pair of `s` is `S_k`-visible. Empty and
/// singleton sets are vacuously valid.
pub fn is_k_mv_set(g: &Graph, dm: &DistanceMatrix, s: &VertexSet, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    if !dm.is_connected() {
        return Err(Error::Disconnected(
            "k-distance mutual-visibility is defined on connected graphs".into(),
        ));
    }
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !is_sk_visible(g, dm, u, v, s, k)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
