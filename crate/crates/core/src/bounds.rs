//! General bounds on mu_k in terms of degrees, girth and order, the
//! monotone chain check, and the isometric-subgraph lower bound.

use crate::error::{Error, Result};
use crate::graph::{all_pairs, clique_number_with_limit, Girth, Graph};
use crate::solver::{mu_k_bruteforce, mu_k_exact};
use crate::vertex_set::VertexSet;

/// Cap for the exhaustive isometric-subgraph enumeration.
pub const ISOMETRIC_CAP: usize = 12;

/// Upper bound on mu_2 for graphs of girth >= 6 and maximum degree >= 3:
/// 1 + max_degree * (max_degree - 1). `None` when the degree condition
/// fails.
pub fn bound_cota2(max_degree: usize) -> Option<usize> {
    (max_degree >= 3).then(|| 1 + max_degree * (max_degree - 1))
}

/// Lower bound from the two-center neighborhood construction: for girth
/// g >= 4 (finite) and min degree >= 2, every k at least the returned
/// threshold satisfies mu_k >= the returned value.
pub fn bound_gen(max_degree: usize, min_degree: usize, girth: Girth) -> Option<(usize, usize)> {
    let g = girth.value()?;
    if g < 4 || min_degree < 2 {
        return None;
    }
    let d = (g - 1) / 3;
    let threshold_k = 1 + 2 * d;
    let value = (max_degree + min_degree - 2) * (min_degree - 1).pow(d as u32 - 1);
    Some((threshold_k, value))
}

/// Upper bound for odd girth g >= 5 on any ((g-1)/2)-distance set whose
/// induced subgraph contains an edge: 2 + (max_degree - 1)^((g-1)/2).
pub fn bound_oddg(max_degree: usize, girth: Girth) -> Option<usize> {
    let g = girth.value()?;
    if g < 5 || g % 2 == 0 || max_degree < 2 {
        return None;
    }
    Some(2 + (max_degree - 1).pow(((g - 1) / 2) as u32))
}

/// Upper bound for even girth g >= 6 on any largest (g/2)-distance set
/// whose induced subgraph contains an edge:
/// n - ceil((sqrt(c^2 + (4n-8)c) - c) / 2) with c = (g-2)(g-4).
///
/// The ceiling is taken in exact integer arithmetic: a floating square root
/// can land on the wrong side of the boundary.
pub fn bound_eveng(n: usize, girth: Girth) -> Option<usize> {
    let g = girth.value()?;
    if g < 6 || g % 2 == 1 || n < 2 {
        return None;
    }
    let c = ((g - 2) * (g - 4)) as u128;
    let d = c * c + (4 * n as u128 - 8) * c;
    // Smallest t >= 0 with (2t + c)^2 >= d, i.e. t = ceil((sqrt(d) - c)/2).
    let s = d.isqrt();
    let mut t = if s > c { (s - c).div_ceil(2) } else { 0 };
    while (2 * t + c) * (2 * t + c) < d {
        t += 1;
    }
    while t > 0 && (2 * (t - 1) + c) * (2 * (t - 1) + c) >= d {
        t -= 1;
    }
    Some(n.saturating_sub(t as usize))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

impl Direction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        }
    }
}

/// One bound evaluated against a graph's metrics. Inapplicable bounds are
/// kept in the report with their conditions, so sweep output documents
/// itself.
#[derive(Clone, Debug)]
pub struct BoundRecord {
    pub name: &'static str,
    pub direction: Direction,
    pub applicable: bool,
    pub value: Option<usize>,
    /// For upper bounds: the k they speak about. For the general lower
    /// bound: the smallest k it covers.
    pub at_k: Option<usize>,
    pub conditions: String,
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub girth: Girth,
    pub records: Vec<BoundRecord>,
}

/// Evaluates every bound's applicability from the graph's metrics.
pub fn bound_report(g: &Graph) -> BoundReport {
    let dm = all_pairs(g);
    let (delta_max, delta_min, girth) = (dm.max_degree, dm.min_degree, dm.girth);
    let finite = girth.value();
    let mut records = Vec::new();

    let cota2_ok = finite.is_some_and(|gv| gv >= 6) && delta_max >= 3;
    records.push(BoundRecord {
        name: "cota2",
        direction: Direction::Upper,
        applicable: cota2_ok,
        value: cota2_ok.then(|| bound_cota2(delta_max).expect("degree checked")),
        at_k: Some(2),
        conditions: "girth >= 6 (finite) and max degree >= 3; bounds mu_2".into(),
    });

    let gen = bound_gen(delta_max, delta_min, girth);
    records.push(BoundRecord {
        name: "gen",
        direction: Direction::Lower,
        applicable: gen.is_some(),
        value: gen.map(|(_, v)| v),
        at_k: gen.map(|(t, _)| t),
        conditions: "finite girth >= 4 and min degree >= 2; holds for every k >= threshold".into(),
    });

    let oddg = bound_oddg(delta_max, girth);
    records.push(BoundRecord {
        name: "oddg",
        direction: Direction::Upper,
        applicable: oddg.is_some(),
        value: oddg,
        at_k: finite.filter(|gv| gv % 2 == 1 && *gv >= 5).map(|gv| (gv - 1) / 2),
        conditions: "odd girth >= 5 and max degree >= 2; bounds ((g-1)/2)-distance sets inducing an edge".into(),
    });

    let eveng = bound_eveng(g.n(), girth);
    records.push(BoundRecord {
        name: "eveng",
        direction: Direction::Upper,
        applicable: eveng.is_some(),
        value: eveng,
        at_k: finite.filter(|gv| gv % 2 == 0 && *gv >= 6).map(|gv| gv / 2),
        conditions: "even girth >= 6; bounds largest (g/2)-distance sets inducing an edge".into(),
    });

    BoundReport {
        n: g.n(),
        max_degree: delta_max,
        min_degree: delta_min,
        girth,
        records,
    }
}

/// mu_k for k = 1..=diameter. Verifies the chain is nondecreasing and
/// starts at the clique number; a violation is an internal solver bug.
pub fn check_chain(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let dm = all_pairs(g);
    if !dm.is_connected() {
        return Err(Error::Disconnected("chain needs a connected graph".into()));
    }
    let omega = clique_number_with_limit(g, g.n().max(64))?;
    let mut rows = Vec::new();
    for k in 1..=dm.diameter.max(1) {
        let mu = mu_k_exact(g, k)?.mu;
        rows.push((k, mu));
    }
    if rows[0].1 != omega {
        return Err(Error::Internal(format!(
            "mu_1 = {} differs from clique number {omega}",
            rows[0].1
        )));
    }
    if rows.windows(2).any(|w| w[0].1 > w[1].1) {
        return Err(Error::Internal(format!(
            "mu_k chain is not nondecreasing: {rows:?}"
        )));
    }
    Ok(rows)
}

/// Lower bound from isometric subgraphs: the largest plain
/// mutual-visibility number over connected induced subgraphs of diameter
/// exactly k whose internal distances equal the host's. Returns 0 when no
/// such subgraph exists.
pub fn isometric_subgraph_lower_bound(g: &Graph, k: usize) -> Result<usize> {
    if g.n() > ISOMETRIC_CAP {
        return Err(Error::TooLarge {
            n: g.n(),
            cap: ISOMETRIC_CAP,
        });
    }
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    let dm = all_pairs(g);
    if !dm.is_connected() {
        return Err(Error::Disconnected(
            "isometric bound needs a connected graph".into(),
        ));
    }
    let n = g.n();
    let mut best = 0;
    for mask in 1u64..1 << n {
        if (mask.count_ones() as usize) < best.max(2) {
            continue;
        }
        let keep = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        let (h, old_ids) = g.induced(&keep);
        let dm_h = all_pairs(&h);
        if dm_h.diameter != k || !dm_h.is_connected() {
            continue;
        }
        let isometric = (0..h.n()).all(|i| {
            (i + 1..h.n()).all(|j| dm_h.dist(i, j) == dm.dist(old_ids[i], old_ids[j]))
        });
        if !isometric {
            continue;
        }
        let mu = mu_k_bruteforce(&h, k)?.mu;
        best = best.max(mu);
    }
    Ok(best)
}
