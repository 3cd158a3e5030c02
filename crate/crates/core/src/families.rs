//! Generators for the graph families with known mu_k values, the
//! closed-form oracle for those values, and the polynomial-time tree
//! algorithm.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{all_pairs, clique_number_with_limit, Graph};
use crate::vertex_set::VertexSet;

/// The stable family vocabulary (also the CLI `--name` values; hyphens and
/// underscores are interchangeable there).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    Path,
    Cycle,
    Star,
    Bistar,
    CaterpillarUniform,
    PerfectTree,
    CoronaPath,
    StrongPathPath2,
    StrongPathComplete,
    Sun,
    Petersen,
    Heawood,
    Complete,
}

impl FamilyName {
    pub fn parse(name: &str) -> Option<FamilyName> {
        match name.replace('-', "_").as_str() {
            "path" => Some(FamilyName::Path),
            "cycle" => Some(FamilyName::Cycle),
            "star" => Some(FamilyName::Star),
            "bistar" => Some(FamilyName::Bistar),
            "caterpillar_uniform" => Some(FamilyName::CaterpillarUniform),
            "perfect_tree" => Some(FamilyName::PerfectTree),
            "corona_path" => Some(FamilyName::CoronaPath),
            "strong_path_path2" => Some(FamilyName::StrongPathPath2),
            "strong_path_complete" => Some(FamilyName::StrongPathComplete),
            "sun" => Some(FamilyName::Sun),
            "petersen" => Some(FamilyName::Petersen),
            "heawood" => Some(FamilyName::Heawood),
            "complete" => Some(FamilyName::Complete),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::Path => "path",
            FamilyName::Cycle => "cycle",
            FamilyName::Star => "star",
            FamilyName::Bistar => "bistar",
            FamilyName::CaterpillarUniform => "caterpillar_uniform",
            FamilyName::PerfectTree => "perfect_tree",
            FamilyName::CoronaPath => "corona_path",
            FamilyName::StrongPathPath2 => "strong_path_path2",
            FamilyName::StrongPathComplete => "strong_path_complete",
            FamilyName::Sun => "sun",
            FamilyName::Petersen => "petersen",
            FamilyName::Heawood => "heawood",
            FamilyName::Complete => "complete",
        }
    }
}

/// Symbolic description of a family instance: a name, integer parameters,
/// and (for the corona) an inner spec.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: BTreeMap<String, u64>,
    pub inner: Option<Box<FamilySpec>>,
}

impl FamilySpec {
    pub fn new(name: FamilyName) -> FamilySpec {
        FamilySpec {
            name,
            params: BTreeMap::new(),
            inner: None,
        }
    }

    pub fn with(mut self, key: &str, value: u64) -> FamilySpec {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn with_inner(mut self, inner: FamilySpec) -> FamilySpec {
        self.inner = Some(Box::new(inner));
        self
    }

    pub fn path(n: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::Path).with("n", n)
    }

    pub fn cycle(n: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::Cycle).with("n", n)
    }

    pub fn star(n: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::Star).with("n", n)
    }

    pub fn bistar(n: u64, m: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::Bistar).with("n", n).with("m", m)
    }

    pub fn caterpillar_uniform(r: u64, q: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::CaterpillarUniform)
            .with("r", r)
            .with("q", q)
    }

    pub fn perfect_tree(delta: u64, diam: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::PerfectTree)
            .with("delta", delta)
            .with("diam", diam)
    }

    pub fn corona_path(r: u64, inner: FamilySpec) -> FamilySpec {
        FamilySpec::new(FamilyName::CoronaPath)
            .with("r", r)
            .with_inner(inner)
    }

    pub fn strong_path_path2(r: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::StrongPathPath2).with("r", r)
    }

    pub fn strong_path_complete(r: u64, s: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::StrongPathComplete)
            .with("r", r)
            .with("s", s)
    }

    pub fn sun(t: u64, r: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::Sun).with("t", t).with("r", r)
    }

    pub fn petersen() -> FamilySpec {
        FamilySpec::new(FamilyName::Petersen)
    }

    pub fn heawood() -> FamilySpec {
        FamilySpec::new(FamilyName::Heawood)
    }

    pub fn complete(n: u64) -> FamilySpec {
        FamilySpec::new(FamilyName::Complete).with("n", n)
    }

    fn param(&self, key: &str) -> Result<usize> {
        self.params
            .get(key)
            .map(|&v| v as usize)
            .ok_or_else(|| {
                Error::Parameter(format!(
                    "family '{}' needs parameter '{key}'",
                    self.name.as_str()
                ))
            })
    }

    pub fn describe(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut s = format!("{}({})", self.name.as_str(), params.join(","));
        if let Some(inner) = &self.inner {
            s.push_str(&format!(" inner={}", inner.describe()));
        }
        s
    }
}

/// A generated family member with per-vertex role annotations.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub roles: Vec<String>,
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg.to_string()))
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    match spec.name {
        FamilyName::Path => {
            let n = spec.param("n")?;
            require(n >= 1, "path needs n >= 1")?;
            let graph = Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1)))?;
            let roles = (0..n).map(|i| format!("path({i})")).collect();
            Ok(Generated { graph, roles })
        }
        FamilyName::Cycle => {
            let n = spec.param("n")?;
            require(n >= 3, "cycle needs n >= 3")?;
            let graph = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?;
            let roles = (0..n).map(|i| format!("cycle({i})")).collect();
            Ok(Generated { graph, roles })
        }
        FamilyName::Star => {
            let n = spec.param("n")?;
            require(n >= 1, "star needs n >= 1")?;
            let graph = Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))?;
            let mut roles = vec!["center".to_string()];
            roles.extend((0..n).map(|i| format!("leaf({i})")));
            Ok(Generated { graph, roles })
        }
        FamilyName::Bistar => {
            let n = spec.param("n")?;
            let m = spec.param("m")?;
            require(n >= 1 && m >= n, "bistar needs m >= n >= 1")?;
            // Vertex 0 carries the m leaves, vertex 1 the n leaves.
            let mut edges = vec![(0, 1)];
            edges.extend((0..m).map(|i| (0, 2 + i)));
            edges.extend((0..n).map(|i| (1, 2 + m + i)));
            let graph = Graph::from_edges(2 + n + m, edges)?;
            let mut roles = vec!["center(0)".to_string(), "center(1)".to_string()];
            roles.extend((0..m).map(|i| format!("leaf(0,{i})")));
            roles.extend((0..n).map(|i| format!("leaf(1,{i})")));
            Ok(Generated { graph, roles })
        }
        FamilyName::CaterpillarUniform => {
            let r = spec.param("r")?;
            let q = spec.param("q")?;
            require(r >= 3 && q >= 2, "caterpillar_uniform needs r >= 3, q >= 2")?;
            let mut edges: Vec<(usize, usize)> = (0..r - 1).map(|i| (i, i + 1)).collect();
            let mut roles: Vec<String> = (0..r).map(|i| format!("spine({i})")).collect();
            let mut next = r;
            for v in 0..r {
                let spine_degree = if v == 0 || v == r - 1 { 1 } else { 2 };
                for j in 0..q - spine_degree {
                    edges.push((v, next));
                    roles.push(format!("leaf({v},{j})"));
                    next += 1;
                }
            }
            let graph = Graph::from_edges(next, edges)?;
            Ok(Generated { graph, roles })
        }
        FamilyName::PerfectTree => {
            let delta = spec.param("delta")?;
            let diam = spec.param("diam")?;
            require(delta >= 3 && diam >= 2, "perfect_tree needs delta >= 3, diam >= 2")?;
            let mut edges = Vec::new();
            let mut roles = Vec::new();
            // (vertex, depth) pairs still owed children.
            let mut frontier: Vec<(usize, usize)> = Vec::new();
            let mut next;
            let half = diam / 2;
            if diam % 2 == 0 {
                roles.push("center".to_string());
                frontier.push((0, 0));
                next = 1;
            } else {
                roles.push("center(0)".to_string());
                roles.push("center(1)".to_string());
                edges.push((0, 1));
                frontier.push((0, 0));
                frontier.push((1, 0));
                next = 2;
            }
            while let Some((v, depth)) = frontier.pop() {
                if depth == half {
                    continue;
                }
                let children = if diam % 2 == 0 && depth == 0 {
                    delta
                } else {
                    delta - 1
                };
                for _ in 0..children {
                    edges.push((v, next));
                    roles.push(format!("depth({})", depth + 1));
                    frontier.push((next, depth + 1));
                    next += 1;
                }
            }
            let graph = Graph::from_edges(next, edges)?;
            Ok(Generated { graph, roles })
        }
        FamilyName::CoronaPath => {
            let r = spec.param("r")?;
            require(r >= 2, "corona_path needs r >= 2")?;
            let inner_spec = spec
                .inner
                .as_deref()
                .ok_or_else(|| Error::Parameter("corona_path needs an inner family".into()))?;
            let inner = generate(inner_spec)?;
            let inner_n = inner.graph.n();
            require(inner_n >= 1, "corona_path needs a nonempty inner graph")?;
            let mut edges: Vec<(usize, usize)> = (0..r - 1).map(|i| (i, i + 1)).collect();
            let mut roles: Vec<String> = (0..r).map(|i| format!("spine({i})")).collect();
            for i in 0..r {
                let base = r + i * inner_n;
                for (u, v) in inner.graph.edges() {
                    edges.push((base + u, base + v));
                }
                for j in 0..inner_n {
                    edges.push((i, base + j));
                    roles.push(format!("copy({i},{j})"));
                }
            }
            let graph = Graph::from_edges(r + r * inner_n, edges)?;
            Ok(Generated { graph, roles })
        }
        FamilyName::StrongPathPath2 => {
            let r = spec.param("r")?;
            require(r >= 2, "strong_path_path2 needs r >= 2")?;
            let path = generate(&FamilySpec::path(r as u64))?.graph;
            let p2 = generate(&FamilySpec::path(2))?.graph;
            Ok(strong_product(&path, &p2))
        }
        FamilyName::StrongPathComplete => {
            let r = spec.param("r")?;
            let s = spec.param("s")?;
            require(r >= 2 && s >= 2, "strong_path_complete needs r >= 2, s >= 2")?;
            let path = generate(&FamilySpec::path(r as u64))?.graph;
            let ks = generate(&FamilySpec::complete(s as u64))?.graph;
            Ok(strong_product(&path, &ks))
        }
        FamilyName::Sun => {
            let t = spec.param("t")?;
            let r = spec.param("r")?;
            require(t >= 3 && r >= 2, "sun needs t >= 3, r >= 2")?;
            let mut edges = Vec::new();
            for u in 0..t {
                for v in u + 1..t {
                    edges.push((u, v));
                }
            }
            let mut roles: Vec<String> = (0..t).map(|i| format!("clique({i})")).collect();
            for i in 0..t {
                let base = t + i * r;
                edges.push((i, base));
                for j in 0..r - 1 {
                    edges.push((base + j, base + j + 1));
                }
                roles.extend((0..r).map(|j| format!("path({i},{j})")));
            }
            let graph = Graph::from_edges(t + t * r, edges)?;
            Ok(Generated { graph, roles })
        }
        FamilyName::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((i + 5, (i + 2) % 5 + 5));
            }
            let graph = Graph::from_edges(10, edges)?;
            let mut roles: Vec<String> = (0..5).map(|i| format!("outer({i})")).collect();
            roles.extend((0..5).map(|i| format!("inner({i})")));
            Ok(Generated { graph, roles })
        }
        FamilyName::Heawood => {
            // LCF walk [5, -5]^7 on a 14-cycle.
            let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
            for i in (0..14).step_by(2) {
                edges.push((i, (i + 5) % 14));
            }
            let graph = Graph::from_edges(14, edges)?;
            let roles = (0..14).map(|i| format!("lcf({i})")).collect();
            Ok(Generated { graph, roles })
        }
        FamilyName::Complete => {
            let n = spec.param("n")?;
            require(n >= 1, "complete needs n >= 1")?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            let graph = Graph::from_edges(n, edges)?;
            let roles = (0..n).map(|i| format!("clique({i})")).collect();
            Ok(Generated { graph, roles })
        }
    }
}

/// Strong product: coordinates may each stay or move along an edge.
fn strong_product(a: &Graph, b: &Graph) -> Generated {
    let (na, nb) = (a.n(), b.n());
    let id = |i: usize, j: usize| i * nb + j;
    let mut edges = Vec::new();
    for i in 0..na {
        for j in 0..nb {
            for jj in b.neighbors(j).iter() {
                if jj > j {
                    edges.push((id(i, j), id(i, jj)));
                }
            }
            for ii in a.neighbors(i).iter() {
                if ii > i {
                    edges.push((id(i, j), id(ii, j)));
                    for jj in b.neighbors(j).iter() {
                        edges.push((id(i, j), id(ii, jj)));
                    }
                }
            }
        }
    }
    let graph = Graph::from_edges(na * nb, edges).expect("product edges are in range");
    let roles = (0..na * nb)
        .map(|v| format!("grid({},{})", v / nb, v % nb))
        .collect();
    Generated { graph, roles }
}

/// The closed-form mu_k where one is known; `None` when (spec, k) falls
/// outside every stated range. k = 1 is handled uniformly as the clique
/// number.
pub fn expected_mu(spec: &FamilySpec, k: usize) -> Result<Option<usize>> {
    let generated = generate(spec)?;
    let g = &generated.graph;
    let diam = all_pairs(g).diameter;
    if k < 1 || k > diam.max(1) {
        return Err(Error::Parameter(format!(
            "k = {k} outside [1, {}] for {}",
            diam.max(1),
            spec.describe()
        )));
    }
    if k == 1 {
        return Ok(Some(clique_number_with_limit(g, g.n())?));
    }
    let value = match spec.name {
        FamilyName::Path => Some(2),
        FamilyName::Cycle => {
            let n = spec.param("n")?;
            Some(if n <= 3 * k { 3 } else { 2 })
        }
        FamilyName::Star => {
            let n = spec.param("n")?;
            (k == 2).then_some(n)
        }
        FamilyName::Bistar => {
            let n = spec.param("n")?;
            let m = spec.param("m")?;
            match k {
                2 => Some(m + 1),
                3 => Some(n + m),
                _ => None,
            }
        }
        FamilyName::CaterpillarUniform => {
            let q = spec.param("q")?;
            Some(k * (q - 2) + 4 - q)
        }
        FamilyName::PerfectTree => {
            let delta = spec.param("delta")?;
            if k.is_multiple_of(2) {
                Some(delta * (delta - 1).pow((k as u32 - 2) / 2))
            } else {
                Some(2 * (delta - 1).pow((k as u32 - 1) / 2))
            }
        }
        FamilyName::CoronaPath => {
            let r = spec.param("r")?;
            let inner_n = generate(spec.inner.as_deref().expect("validated by generate"))?
                .graph
                .n();
            if inner_n < 2 {
                None
            } else if k < r {
                Some((k - 1) * inner_n + 2)
            } else if k == r {
                Some((r - 1) * inner_n + 1)
            } else {
                // k = r + 1 = diam: the plain mutual-visibility value.
                Some(r * inner_n)
            }
        }
        FamilyName::StrongPathPath2 => Some(k + 3),
        FamilyName::StrongPathComplete => {
            let s = spec.param("s")?;
            Some((k + 1) * (s - 1) + 2)
        }
        FamilyName::Sun => Some(spec.param("t")?),
        FamilyName::Petersen => (k == 2).then_some(6),
        FamilyName::Heawood => (k == 2).then_some(7),
        FamilyName::Complete => None,
    };
    Ok(value)
}

/// Exact mu_k for trees in polynomial time.
///
/// A valid set in a tree spans a subtree of diameter at most k whose leaves
/// it counts, and growing the subtree never loses leaves; maximal subtrees
/// of diameter at most k are the balls of radius k/2 around a vertex (k
/// even) or around an edge (k odd). So: take every such ball, count the
/// vertices of induced degree at most one, and return the maximum.
pub fn mu_k_tree(t: &Graph, k: usize) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::Shape("input is not a tree".into()));
    }
    if k < 2 {
        return Err(Error::Parameter("the tree algorithm needs k >= 2".into()));
    }
    let n = t.n();
    if n == 1 {
        return Ok(1);
    }
    let dm = all_pairs(t);
    let k = k.min(dm.diameter);
    let mut best = 0;
    if k.is_multiple_of(2) {
        let radius = (k / 2) as u32;
        for c in 0..n {
            let ball = VertexSet::from_iter(n, (0..n).filter(|&v| dm.dist(c, v) <= radius));
            best = best.max(induced_leaf_count(t, &ball));
        }
    } else {
        let radius = ((k - 1) / 2) as u32;
        for (a, b) in t.edges() {
            let ball = VertexSet::from_iter(
                n,
                (0..n).filter(|&v| dm.dist(a, v).min(dm.dist(b, v)) <= radius),
            );
            best = best.max(induced_leaf_count(t, &ball));
        }
    }
    Ok(best.max(2))
}

fn induced_leaf_count(g: &Graph, ball: &VertexSet) -> usize {
    ball.iter()
        .filter(|&v| {
            let mut inside = g.neighbors(v).clone();
            inside.intersect_with(ball);
            inside.len() <= 1
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs, Girth};
    use crate::solver::mu_k_bruteforce;

    #[test]
    fn strong_path_path2_counts() {
        let g = generate(&FamilySpec::strong_path_path2(4)).unwrap().graph;
        assert_eq!(g.n(), 8);
        // |E(G x H)| = mG*nH + nG*mH + 2*mG*mH = 3*2 + 4*1 + 2*3*1.
        assert_eq!(g.m(), 16);
        assert_eq!(all_pairs(&g).diameter, 3);
    }

    #[test]
    fn strong_product_diameters() {
        for r in 2..=5 {
            let g = generate(&FamilySpec::strong_path_path2(r)).unwrap().graph;
            assert_eq!(all_pairs(&g).diameter, r as usize - 1);
        }
        let g = generate(&FamilySpec::strong_path_complete(4, 3)).unwrap().graph;
        assert_eq!(all_pairs(&g).diameter, 3);
        assert_eq!(g.n(), 12);
    }

    /// Independent check of the clique number of P_5 x K_3 by scanning all
    /// vertex subsets.
    #[test]
    fn strong_path_complete_clique_by_subset_scan() {
        let g = generate(&FamilySpec::strong_path_complete(5, 3)).unwrap().graph;
        let n = g.n();
        let mut best = 0usize;
        for mask in 0u32..1 << n {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if members.len() > best
                && members
                    .iter()
                    .all(|&u| members.iter().all(|&v| u == v || g.has_edge(u, v)))
            {
                best = members.len();
            }
        }
        assert_eq!(best, 6);
        assert_eq!(crate::graph::clique_number(&g).unwrap(), 6);
    }

    #[test]
    fn sun_shape() {
        let g = generate(&FamilySpec::sun(3, 2)).unwrap().graph;
        assert_eq!(g.n(), 9);
        // The construction (pendant paths of order r joined by an extra
        // edge to each clique vertex) yields diameter 2r + 1.
        assert_eq!(all_pairs(&g).diameter, 5);
        let g4 = generate(&FamilySpec::sun(4, 2)).unwrap().graph;
        assert_eq!(g4.n(), 12);
        assert_eq!(crate::graph::clique_number(&g4).unwrap(), 4);
    }

    #[test]
    fn petersen_and_heawood_shapes() {
        let p = generate(&FamilySpec::petersen()).unwrap().graph;
        assert_eq!((p.n(), p.m()), (10, 15));
        let dm = all_pairs(&p);
        assert_eq!(dm.girth, Girth::Cycle(5));
        assert_eq!((dm.min_degree, dm.max_degree), (3, 3));

        let h = generate(&FamilySpec::heawood()).unwrap().graph;
        assert_eq!((h.n(), h.m()), (14, 21));
        let dm = all_pairs(&h);
        assert_eq!(dm.girth, Girth::Cycle(6));
        assert_eq!((dm.min_degree, dm.max_degree), (3, 3));
        assert_eq!(dm.diameter, 3);
    }

    #[test]
    fn corona_and_bistar_diameters() {
        for r in 2..=4 {
            let spec = FamilySpec::corona_path(r, FamilySpec::complete(2));
            let g = generate(&spec).unwrap().graph;
            assert_eq!(g.n(), r as usize * 3);
            assert_eq!(all_pairs(&g).diameter, r as usize + 1);
        }
        let b = generate(&FamilySpec::bistar(2, 3)).unwrap().graph;
        assert_eq!(all_pairs(&b).diameter, 3);
        assert_eq!(b.n(), 7);
    }

    #[test]
    fn caterpillar_shape() {
        let g = generate(&FamilySpec::caterpillar_uniform(4, 3)).unwrap().graph;
        // Spine of 4, ends carry 2 leaves, interior carry 1.
        assert_eq!(g.n(), 4 + 2 + 2 + 1 + 1);
        assert!(g.is_tree());
        assert_eq!(all_pairs(&g).diameter, 5);
        for v in 0..4 {
            assert_eq!(g.degree(v), 3);
        }
    }

    #[test]
    fn perfect_tree_shape() {
        let even = generate(&FamilySpec::perfect_tree(3, 4)).unwrap().graph;
        assert_eq!(even.n(), 10);
        assert!(even.is_tree());
        assert_eq!(all_pairs(&even).diameter, 4);
        let odd = generate(&FamilySpec::perfect_tree(3, 5)).unwrap().graph;
        assert_eq!(odd.n(), 14);
        assert_eq!(all_pairs(&odd).diameter, 5);
        // Every non-leaf vertex has the full degree.
        for v in 0..odd.n() {
            assert!(odd.degree(v) == 1 || odd.degree(v) == 3);
        }
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(matches!(
            generate(&FamilySpec::cycle(2)),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            generate(&FamilySpec::sun(2, 2)),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            generate(&FamilySpec::new(FamilyName::CoronaPath).with("r", 3)),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            generate(&FamilySpec::new(FamilyName::Path)),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn expected_mu_spot_values() {
        assert_eq!(expected_mu(&FamilySpec::bistar(2, 3), 2).unwrap(), Some(4));
        assert_eq!(expected_mu(&FamilySpec::bistar(2, 3), 3).unwrap(), Some(5));
        let corona = FamilySpec::corona_path(4, FamilySpec::complete(2));
        let got: Vec<Option<usize>> = (2..=5)
            .map(|k| expected_mu(&corona, k).unwrap())
            .collect();
        assert_eq!(got, vec![Some(4), Some(6), Some(7), Some(8)]);
        assert_eq!(
            expected_mu(&FamilySpec::perfect_tree(3, 4), 2).unwrap(),
            Some(3)
        );
        assert_eq!(
            expected_mu(&FamilySpec::perfect_tree(3, 4), 3).unwrap(),
            Some(4)
        );
        assert_eq!(expected_mu(&FamilySpec::petersen(), 1).unwrap(), Some(2));
        assert_eq!(expected_mu(&FamilySpec::petersen(), 2).unwrap(), Some(6));
        assert_eq!(expected_mu(&FamilySpec::heawood(), 3).unwrap(), None);
        assert_eq!(expected_mu(&FamilySpec::cycle(9), 3).unwrap(), Some(3));
        assert_eq!(expected_mu(&FamilySpec::cycle(10), 3).unwrap(), Some(2));
    }

    #[test]
    fn expected_mu_rejects_k_out_of_range() {
        assert!(matches!(
            expected_mu(&FamilySpec::path(5), 9),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            expected_mu(&FamilySpec::path(5), 0),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn strong_product_solver_matches_formula() {
        let spec = FamilySpec::strong_path_complete(5, 3);
        let g = generate(&spec).unwrap().graph;
        assert_eq!(expected_mu(&spec, 2).unwrap(), Some(8));
        assert_eq!(crate::solver::mu_k_exact(&g, 2).unwrap().mu, 8);
    }

    #[test]
    fn tree_algorithm_on_named_instances() {
        let cat = generate(&FamilySpec::caterpillar_uniform(4, 3)).unwrap().graph;
        assert_eq!(mu_k_tree(&cat, 3).unwrap(), 4);
        let star = generate(&FamilySpec::star(5)).unwrap().graph;
        assert_eq!(mu_k_tree(&star, 2).unwrap(), 5);
    }

    #[test]
    fn tree_algorithm_rejects_non_trees() {
        let c = generate(&FamilySpec::cycle(5)).unwrap().graph;
        assert!(matches!(mu_k_tree(&c, 2), Err(Error::Shape(_))));
        assert!(matches!(
            mu_k_tree(&generate(&FamilySpec::path(4)).unwrap().graph, 1),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn tree_algorithm_matches_bruteforce_on_small_trees() {
        let mut state = 0xfeed_beefu64;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for trial in 0..30 {
            let n = 2 + (trial % 9);
            let edges: Vec<(usize, usize)> =
                (1..n).map(|v| (v, next() as usize % v)).collect();
            let t = Graph::from_edges(n, edges).unwrap();
            let diam = all_pairs(&t).diameter;
            for k in 2..=diam.max(2) {
                assert_eq!(
                    mu_k_tree(&t, k).unwrap(),
                    mu_k_bruteforce(&t, k).unwrap().mu,
                    "tree n={n} trial={trial} k={k}"
                );
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for name in [
            "path",
            "cycle",
            "star",
            "bistar",
            "caterpillar_uniform",
            "perfect_tree",
            "corona_path",
            "strong_path_path2",
            "strong_path_complete",
            "sun",
            "petersen",
            "heawood",
            "complete",
        ] {
            assert_eq!(FamilyName::parse(name).unwrap().as_str(), name);
        }
        assert_eq!(
            FamilyName::parse("corona-path").unwrap(),
            FamilyName::CoronaPath
        );
        assert!(FamilyName::parse("moebius").is_none());
    }
}
